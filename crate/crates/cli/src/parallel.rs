//! Root-level parallel search.
//!
//! At each level `k` the branch pairs of the root are handed out to worker
//! threads in index order, each worker deciding `cr(G^(e,f)) <= k - 1` with
//! its own solver. The lowest succeeding index wins, and workers on higher
//! indices stop early, so value and certificate do not depend on the
//! thread count or on scheduling.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use zipcross_core::solver::{Aborted, Interrupt, SolveStats, Step};
use zipcross_core::{MultiGraph, Outcome, Solver, SolverConfig};

use crate::limits::Deadline;

struct WorkerStop<'a> {
    deadline: &'a Deadline,
    best: &'a AtomicUsize,
    current: AtomicUsize,
}

impl Interrupt for WorkerStop<'_> {
    fn should_stop(&self) -> bool {
        self.best.load(Ordering::Relaxed) < self.current.load(Ordering::Relaxed) || self.deadline.expired()
    }
}

fn decide_parallel(
    root: &mut Solver<'_>,
    g: &MultiGraph,
    k: u32,
    config: &SolverConfig,
    threads: usize,
    deadline: &Deadline,
) -> Result<Option<Vec<Step>>, Aborted> {
    if k == 0 {
        return root.decide(g, 0);
    }
    let Some(pairs) = root.branch_pairs(g) else {
        return Ok(Some(Vec::new()));
    };
    let next = AtomicUsize::new(0);
    let best = AtomicUsize::new(usize::MAX);
    let aborted_below = Mutex::new(Vec::<usize>::new());
    let found = Mutex::new(Vec::<(usize, Vec<Step>)>::new());
    let stats = Mutex::new(SolveStats::default());
    std::thread::scope(|scope| {
        for _ in 0..threads.min(pairs.len()).max(1) {
            scope.spawn(|| {
                let stop = WorkerStop {
                    deadline,
                    best: &best,
                    current: AtomicUsize::new(0),
                };
                let mut solver = Solver::with_interrupt(config.clone(), &stop);
                loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= pairs.len() || i > best.load(Ordering::Relaxed) {
                        break;
                    }
                    stop.current.store(i, Ordering::Relaxed);
                    let (e, f) = pairs[i];
                    let child = g.cross_identify(e, f).expect("branch pairs are non-adjacent");
                    match solver.decide(&child, k - 1) {
                        Ok(Some(mut trace)) => {
                            trace.insert(0, (e, f));
                            found.lock().unwrap().push((i, trace));
                            best.fetch_min(i, Ordering::Relaxed);
                        }
                        Ok(None) => {}
                        Err(Aborted) => {
                            if deadline.expired() || best.load(Ordering::Relaxed) > i {
                                aborted_below.lock().unwrap().push(i);
                            }
                        }
                    }
                }
                let s = solver.stats();
                let mut total = stats.lock().unwrap();
                total.nodes += s.nodes;
                total.planarity_tests += s.planarity_tests;
                total.memo_hits += s.memo_hits;
            });
        }
    });
    root.add_stats(stats.into_inner().unwrap());
    let best = best.into_inner();
    let aborted = aborted_below.into_inner().unwrap();
    if aborted.iter().any(|&i| i < best) {
        return Err(Aborted);
    }
    let mut found = found.into_inner().unwrap();
    found.sort_by_key(|f| f.0);
    match found.into_iter().next() {
        Some((_, trace)) => Ok(Some(trace)),
        None => Ok(None),
    }
}

/// Crossing number with `threads` workers; one thread runs the plain
/// sequential solver.
pub fn crossing_number(
    g: &MultiGraph,
    budget: Option<u32>,
    config: &SolverConfig,
    threads: usize,
    deadline: &Deadline,
) -> Outcome {
    let mut root = Solver::with_interrupt(config.clone(), deadline);
    if threads <= 1 {
        return root.crossing_number(g, budget);
    }
    root.crossing_number_by(g, budget, |s, block, k| {
        decide_parallel(s, block, k, config, threads, deadline)
    })
}
