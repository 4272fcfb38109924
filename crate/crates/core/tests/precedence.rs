use partmono_core::algos::run_ls;
use partmono_core::harness::{check_count_monotone_schedule, Condition};
use partmono_core::precedence::{schedule, DispatchPolicy, Job, PrecedenceInstance, Schedule};
use partmono_core::Instance;
use proptest::prelude::*;

/// Random DAG with edges only from earlier to later jobs.
fn dag() -> impl Strategy<Value = PrecedenceInstance> {
    (1..=10usize, 1..=4usize).prop_flat_map(|(n, m)| {
        let times = prop::collection::vec(1..=20u64, n);
        let edges = prop::collection::vec((0..n, 0..n, prop::bool::weighted(0.3)), 0..=2 * n);
        (times, edges, Just(m)).prop_map(|(times, edges, m)| {
            let jobs = times.iter().enumerate().map(|(i, &t)| Job::new(format!("j{i}"), t)).collect();
            let edges: Vec<(usize, usize)> =
                edges.into_iter().filter(|&(a, b, keep)| keep && a < b).map(|(a, b, _)| (a, b)).collect();
            PrecedenceInstance::new(jobs, &edges, m).unwrap()
        })
    })
}

fn running_on(s: &Schedule, machine: usize, t: u64) -> bool {
    s.assignments.iter().any(|a| a.machine == machine && a.start <= t && t < a.finish)
}

fn assert_work_conserving(inst: &PrecedenceInstance, s: &Schedule) {
    let mut events: Vec<u64> = s.assignments.iter().flat_map(|a| [a.start, a.finish]).collect();
    events.push(0);
    events.sort_unstable();
    events.dedup();
    for &t in &events {
        let idle = (0..inst.m()).any(|k| !running_on(s, k, t));
        let waiting_ready = (0..inst.n()).any(|j| {
            s.assignments[j].start > t && inst.preds(j).iter().all(|&p| s.assignments[p].finish <= t)
        });
        assert!(!(idle && waiting_ready), "machine idle at {t} while a job is ready");
    }
}

fn nine_jobs(times: [u64; 9], m: usize) -> PrecedenceInstance {
    let jobs = times.iter().enumerate().map(|(i, &t)| Job::new(format!("{}", i + 1), t)).collect();
    PrecedenceInstance::from_ids(jobs, &[("4", "5"), ("4", "6"), ("4", "7"), ("4", "8")], m).unwrap()
}

#[test]
fn more_machines_longer_makespan() {
    let inst = nine_jobs([30, 21, 22, 20, 40, 40, 40, 40, 90], 3);
    let r = check_count_monotone_schedule(DispatchPolicy::EventDriven, &inst, 4).unwrap();
    assert_eq!((r.before.max(), r.after.max()), (121, 150));
    assert_eq!(r.violations, vec![Condition::MaxIncreased]);
}

#[test]
fn no_dependency_makespans_of_both_instances() {
    for (times, expected) in [([30, 21, 22, 20, 40, 40, 40, 40, 90], 160), ([22, 11, 12, 10, 30, 30, 30, 30, 80], 131)] {
        let inst = nine_jobs(times, 3).without_deps();
        for policy in DispatchPolicy::ALL {
            assert_eq!(schedule(&inst, policy).makespan, expected);
        }
    }
}

proptest! {
    #[test]
    fn schedules_are_valid(inst in dag()) {
        for policy in DispatchPolicy::ALL {
            let s = schedule(&inst, policy);
            s.validate(&inst).unwrap();
            prop_assert_eq!(s.policy, policy);
            prop_assert_eq!(s.machine_loads().entries().iter().sum::<u64>(), inst.times().iter().sum::<u64>());
        }
    }

    #[test]
    fn event_driven_never_idles_needlessly(inst in dag()) {
        let s = schedule(&inst, DispatchPolicy::EventDriven);
        assert_work_conserving(&inst, &s);
    }

    #[test]
    fn list_order_is_prefix_determined(inst in dag(), cut in any::<prop::sample::Index>()) {
        let k = cut.index(inst.n()) + 1;
        let jobs = inst.jobs()[..k].to_vec();
        let edges: Vec<(usize, usize)> =
            (0..k).flat_map(|b| inst.preds(b).iter().map(move |&a| (a, b))).collect();
        let prefix = PrecedenceInstance::new(jobs, &edges, inst.m()).unwrap();
        let full = schedule(&inst, DispatchPolicy::ListOrder);
        let part = schedule(&prefix, DispatchPolicy::ListOrder);
        prop_assert_eq!(&full.assignments[..k], part.assignments.as_slice());
    }

    #[test]
    fn without_dependencies_both_policies_are_ls(times in prop::collection::vec(1..=50u64, 1..=12), m in 2..=5usize) {
        let jobs = times.iter().enumerate().map(|(i, &t)| Job::new(format!("{i}"), t)).collect();
        let inst = PrecedenceInstance::new(jobs, &[], m).unwrap();
        let ls = run_ls(&Instance::new(times.clone(), m).unwrap()).0;
        for policy in DispatchPolicy::ALL {
            let s = schedule(&inst, policy);
            prop_assert_eq!(s.machine_loads().into_inner(), ls.sums().to_vec());
            prop_assert_eq!(s.machine_finish_times().into_inner(), ls.sums().to_vec());
        }
    }
}
