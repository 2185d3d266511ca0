//! Acceptance criteria 1-9, one PASS/FAIL line each.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::Rng;
use zipcross::generate::{random_connected, random_zip, rng};
use zipcross::json::DecomposeReport;
use zipcross::limits::Deadline;
use zipcross::parallel;
use zipcross_core::bundles::{find_bundle, find_coherent_bundles};
use zipcross_core::critical::{decompose_internally_4ec, is_crossing_critical, Criticality};
use zipcross_core::cuts::enumerate_min_cuts;
use zipcross_core::mcr::{cartesian_product, minor_crossing_number, tree_product_bound, McrLimits, DEFAULT_DEGREE_CAP};
use zipcross_core::solver::verify_certificate;
use zipcross_core::zip::{k33_chain, zip, ZipSpec};
use zipcross_core::{families, is_planar, EdgeId, MultiGraph, Outcome, Solver, SolverConfig, VertexId};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn cr(solver: &mut Solver<'_>, g: &MultiGraph) -> u32 {
    solver
        .crossing_number(g, None)
        .value()
        .expect("unbounded solve finishes")
}

fn independent_pairs(g: &MultiGraph) -> Vec<(EdgeId, EdgeId)> {
    let es = g.edges();
    let mut out = Vec::new();
    for (i, a) in es.iter().enumerate() {
        for b in &es[i + 1..] {
            if !a.shares_endpoint(b) {
                out.push((a.id, b.id));
            }
        }
    }
    out
}

/// Unpruned planarization search: some sequence of at most `k` crossings of
/// independent edges leaves a planar graph.
fn oracle_within(g: &MultiGraph, k: u32) -> bool {
    if is_planar(g).is_planar() {
        return true;
    }
    k > 0
        && independent_pairs(g)
            .into_iter()
            .any(|(e, f)| oracle_within(&g.cross_identify(e, f).unwrap(), k - 1))
}

fn criterion_1() -> Check {
    let cases: [(&str, MultiGraph, u32); 5] = [
        ("K4", families::complete(4), 0),
        ("K5", families::complete(5), 1),
        ("K3,3", families::complete_bipartite(3, 3), 1),
        ("K6", families::complete(6), 3),
        ("Petersen", families::petersen(), 2),
    ];
    let mut notes = Vec::new();
    for (name, g, expect) in cases {
        let t = Instant::now();
        let out = Solver::default().crossing_number(&g, None);
        let secs = t.elapsed().as_secs_f64();
        let Outcome::Solved(r) = out else {
            return Err(format!("{name}: not solved"));
        };
        if r.value != expect || secs >= 60.0 {
            return Err(format!("{name}: got {} in {secs:.1}s, expected {expect}", r.value));
        }
        verify_certificate(&g, &r.certificate).map_err(|e| format!("{name}: certificate {e}"))?;
        let upper = oracle_within(&g, expect);
        let lower = expect == 0 || !oracle_within(&g, expect - 1);
        if !(upper && lower) {
            return Err(format!("{name}: exhaustive oracle disagrees with {expect}"));
        }
        notes.push(format!("{name}={expect}"));
    }
    Ok(notes.join(" "))
}

fn criterion_2() -> Check {
    let mut r = rng(2);
    let mut solver = Solver::default();
    let (mut nonplanar, mut pairs_checked) = (0, 0);
    for i in 0..200 {
        let n = r.gen_range(5..=9);
        let full = n * (n - 1) / 2;
        let m = r.gen_range(n + 2..=14).min(full);
        let g = random_connected(&mut r, n, m, false);
        let c = cr(&mut solver, &g);
        let pairs = independent_pairs(&g);
        if pairs.is_empty() {
            continue;
        }
        if c == 0 {
            // the bound is vacuous; still exercise one random pair
            let &(e, f) = pairs.choose(&mut r).unwrap();
            cr(&mut solver, &g.cross_identify(e, f).unwrap());
            pairs_checked += 1;
            continue;
        }
        nonplanar += 1;
        let mut best = u32::MAX;
        for (e, f) in pairs {
            let h = g.cross_identify(e, f).unwrap();
            let v = cr(&mut solver, &h);
            pairs_checked += 1;
            if v + 1 < c {
                return Err(format!("graph {i}: cr {c}, crossing {e},{f} gives {v}"));
            }
            best = best.min(v);
        }
        if best != c - 1 {
            return Err(format!("graph {i}: cr {c}, best single crossing leaves {best}"));
        }
    }
    Ok(format!(
        "200 graphs, {nonplanar} nonplanar, {pairs_checked} pairs, 0 violations"
    ))
}

fn criterion_3() -> Check {
    let mut r = rng(3);
    let mut solver = Solver::default();
    let mut sums = 0;
    for i in 0..100 {
        let d = r.gen_range(1..=3);
        let spec = random_zip(&mut r, 8, d, 12);
        let (a, b) = (cr(&mut solver, &spec.g1), cr(&mut solver, &spec.g2));
        let z = zip(&spec).map_err(|e| format!("zip {i}: {e}"))?;
        let c = cr(&mut solver, &z);
        if c != a + b {
            return Err(format!("zip {i} (d={d}): cr {c} != {a} + {b}"));
        }
        sums += a + b;
    }
    let mut perms_checked = 0;
    for i in 0..10 {
        let spec = random_zip(&mut r, 7, 3, 12);
        let target = cr(&mut solver, &spec.g1) + cr(&mut solver, &spec.g2);
        for sigma in permutations(3) {
            let s = ZipSpec { sigma, ..spec.clone() };
            let c = cr(&mut solver, &zip(&s).unwrap());
            if c != target {
                return Err(format!("instance {i}, sigma {:?}: cr {c} != {target}", s.sigma));
            }
            perms_checked += 1;
        }
    }
    Ok(format!(
        "100 zips (total crossings {sums}), {perms_checked} bijections, 0 violations"
    ))
}

fn permutations(d: usize) -> Vec<Vec<usize>> {
    if d == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(d - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, d - 1);
            out.push(q);
        }
    }
    out
}

fn criterion_4() -> Check {
    let t = Instant::now();
    let resp = zipcross::run(["zipcross", "decompose", "chain5", "--json"]);
    let secs = t.elapsed().as_secs_f64();
    if resp.code != 0 {
        return Err(format!("decompose exited {}: {}", resp.code, resp.stderr));
    }
    let rep: DecomposeReport = serde_json::from_str(&resp.stdout).map_err(|e| e.to_string())?;
    if rep.value != 5 || !rep.exact || rep.lower_bound_only || secs >= 10.0 {
        return Err(format!(
            "decompose gave {} exact={} in {secs:.2}s",
            rep.value, rep.exact
        ));
    }
    let g = k33_chain(5);
    let deadline = Deadline::new(Some(Duration::from_secs(60)));
    let t2 = Instant::now();
    let direct = parallel::crossing_number(&g, None, &SolverConfig::default(), 1, &deadline);
    let direct_secs = t2.elapsed().as_secs_f64();
    let direct_note = match direct {
        Outcome::Solved(r) if r.value == 5 => format!("direct agrees in {direct_secs:.1}s"),
        Outcome::Solved(r) => return Err(format!("direct solver found {}", r.value)),
        Outcome::Unknown { lower, upper, .. } if lower <= 5 && upper >= 5 => {
            format!("direct timed out with bounds [{lower}, {upper}]")
        }
        other => return Err(format!("direct solver inconsistent: {:?}", other.bounds())),
    };
    Ok(format!(
        "{} vertices, value 5 with {} exact splits in {secs:.2}s; {direct_note}",
        g.vertex_count(),
        rep.splits
    ))
}

fn criterion_5() -> Check {
    let k33 = families::complete_bipartite(3, 3);
    let g = zip(&ZipSpec::identity(k33.clone(), VertexId(0), k33, VertexId(0))).map_err(|e| e.to_string())?;
    let mut solver = Solver::default();
    let c = cr(&mut solver, &g);
    if c != 2 {
        return Err(format!("cr = {c}"));
    }
    for e in g.edges() {
        let v = cr(&mut solver, &g.delete_edge(e.id).unwrap());
        if v > 1 {
            return Err(format!("cr(G - {}) = {v}", e.id));
        }
    }
    match is_crossing_critical(&g, &mut solver) {
        Criticality::Critical { value: 2 } => {}
        other => return Err(format!("criticality test says {other:?}")),
    }
    Ok(format!("cr 2, all {} edge deletions give cr <= 1", g.edge_count()))
}

fn criterion_6() -> Check {
    let mut solver = Solver::default();
    let parts = decompose_internally_4ec(&k33_chain(3), &mut solver).map_err(|e| e.to_string())?;
    if parts.len() != 3 {
        return Err(format!("{} factors", parts.len()));
    }
    let mut total = 0;
    for (i, p) in parts.iter().enumerate() {
        let cuts = enumerate_min_cuts(p, 3, true).map_err(|e| e.to_string())?;
        if !cuts.is_empty() {
            return Err(format!("factor {i} has a nontrivial cut of size {}", cuts[0].size()));
        }
        match is_crossing_critical(p, &mut solver) {
            Criticality::Critical { value } => total += value,
            other => return Err(format!("factor {i}: {other:?}")),
        }
    }
    if total != 3 {
        return Err(format!("values sum to {total}"));
    }
    Ok("3 critical factors without nontrivial cuts of size <= 3, values sum to 3".into())
}

/// Vertex-simple paths from `s` to `t` avoiding `v`.
fn simple_paths(g: &MultiGraph, v: VertexId, s: VertexId, t: VertexId) -> Vec<Vec<EdgeId>> {
    fn go(
        g: &MultiGraph,
        v: VertexId,
        at: VertexId,
        t: VertexId,
        seen: &mut Vec<VertexId>,
        path: &mut Vec<EdgeId>,
        out: &mut Vec<Vec<EdgeId>>,
    ) {
        if at == t {
            out.push(path.clone());
            return;
        }
        for e in g.incident_edges(at) {
            let w = e.other(at);
            if w == v || seen.contains(&w) {
                continue;
            }
            seen.push(w);
            path.push(e.id);
            go(g, v, w, t, seen, path, out);
            path.pop();
            seen.pop();
        }
    }
    let mut out = Vec::new();
    go(g, v, s, t, &mut vec![s], &mut Vec::new(), &mut out);
    out
}

/// Exhaustive search for edge-disjoint path systems: one path per starting
/// point in `starts`, each to its sink, avoiding `used`.
fn systems(
    options: &[Vec<Vec<EdgeId>>],
    i: usize,
    used: &mut BTreeSet<EdgeId>,
    rest: &mut dyn FnMut(&mut BTreeSet<EdgeId>) -> bool,
) -> bool {
    if i == options.len() {
        return rest(used);
    }
    for p in &options[i] {
        if p.iter().any(|e| used.contains(e)) {
            continue;
        }
        used.extend(p.iter().copied());
        let ok = systems(options, i + 1, used, rest);
        for e in p {
            used.remove(e);
        }
        if ok {
            return true;
        }
    }
    false
}

fn path_options(g: &MultiGraph, v: VertexId, w: VertexId) -> Vec<Vec<Vec<EdgeId>>> {
    g.incident_edges(v).map(|e| simple_paths(g, v, e.other(v), w)).collect()
}

fn oracle_bundle(g: &MultiGraph, v: VertexId, w: VertexId) -> bool {
    systems(&path_options(g, v, w), 0, &mut BTreeSet::new(), &mut |_| true)
}

fn oracle_coherent(g: &MultiGraph, v: VertexId) -> bool {
    let sinks: Vec<VertexId> = g.vertices().iter().copied().filter(|&w| w != v).collect();
    for (i, &w1) in sinks.iter().enumerate() {
        let o1 = path_options(g, v, w1);
        for &w2 in &sinks[i + 1..] {
            let o2 = path_options(g, v, w2);
            let found = systems(&o1, 0, &mut BTreeSet::new(), &mut |used| {
                systems(&o2, 0, used, &mut |_| true)
            });
            if found {
                return true;
            }
        }
    }
    false
}

fn criterion_7() -> Check {
    let mut r = rng(7);
    let (mut singles, mut coherent_yes, mut coherent_checks) = (0, 0, 0);
    for i in 0..200 {
        let n = r.gen_range(3..=7);
        let full = n * (n - 1) / 2;
        let multi = r.gen_bool(0.3);
        let hi = if multi { 12 } else { full.min(12) };
        let m = r.gen_range(n - 1..=hi);
        let g = random_connected(&mut r, n, m, multi);
        for &v in g.vertices() {
            for &w in g.vertices() {
                if w == v {
                    continue;
                }
                let fast = find_bundle(&g, v, w);
                if let Some(b) = &fast {
                    if !b.validate(&g) || b.sink != w {
                        return Err(format!("graph {i}: invalid bundle at {v} to {w}"));
                    }
                }
                if fast.is_some() != oracle_bundle(&g, v, w) {
                    return Err(format!("graph {i}: bundle {v} -> {w} disagrees with enumeration"));
                }
                singles += 1;
            }
            let fast = find_coherent_bundles(&g, v);
            if let Some((b1, b2)) = &fast {
                let mut all = b1.edges();
                all.extend(b2.edges());
                all.sort_unstable();
                if !b1.validate(&g) || !b2.validate(&g) || b1.sink == b2.sink || all.windows(2).any(|p| p[0] == p[1]) {
                    return Err(format!("graph {i}: invalid coherent pair at {v}"));
                }
                coherent_yes += 1;
            }
            if fast.is_some() != oracle_coherent(&g, v) {
                return Err(format!("graph {i}: coherent pair at {v} disagrees with enumeration"));
            }
            coherent_checks += 1;
        }
    }
    let apex = families::apex_over_doubled_k4();
    if find_coherent_bundles(&apex, VertexId(4)).is_none() || !oracle_coherent(&apex, VertexId(4)) {
        return Err("apex over doubled K4 has no coherent pair".into());
    }
    let k5 = families::complete(5);
    if k5
        .vertices()
        .iter()
        .any(|&v| find_coherent_bundles(&k5, v).is_some() || oracle_coherent(&k5, v))
    {
        return Err("K5 has a coherent pair".into());
    }
    Ok(format!(
        "200 graphs: {singles} sink queries, {coherent_checks} pair queries ({coherent_yes} positive) agree; apex pair found, K5 none"
    ))
}

fn criterion_8() -> Check {
    let mut r = rng(8);
    let mut solver = Solver::default();
    let (mut found, mut attempts, mut positive) = (0, 0, 0);
    while found < 100 {
        attempts += 1;
        if attempts > 20000 {
            return Err(format!("only {found} coherent instances in 20000 attempts"));
        }
        let spec = random_zip(&mut r, 8, 4, 5);
        if find_coherent_bundles(&spec.g1, spec.v1).is_none() || find_coherent_bundles(&spec.g2, spec.v2).is_none() {
            continue;
        }
        found += 1;
        let sum = cr(&mut solver, &spec.g1) + cr(&mut solver, &spec.g2);
        if sum == 0 {
            continue;
        }
        positive += 1;
        let z = zip(&spec).map_err(|e| e.to_string())?;
        match solver.crossing_number(&z, Some(sum - 1)) {
            Outcome::ExceedsBudget { .. } => {}
            Outcome::Solved(s) => return Err(format!("instance {found}: cr(zip) = {} < {sum}", s.value)),
            Outcome::Unknown { .. } => return Err(format!("instance {found}: budget query did not finish")),
        }
    }
    Ok(format!(
        "{found} coherent instances ({positive} with positive sum) from {attempts} draws, 0 violations"
    ))
}

fn criterion_9() -> Check {
    let mut solver = Solver::default();
    let k33 = families::complete_bipartite(3, 3);
    let z = zip(&ZipSpec::identity(k33.clone(), VertexId(0), k33, VertexId(0))).unwrap();
    let lim = McrLimits::default();
    let res = minor_crossing_number(&z, DEFAULT_DEGREE_CAP, lim, &mut solver)
        .map_err(|e| e.to_string())?
        .ok_or("mcr did not finish")?;
    if !(res.is_exact() && res.upper == 2) {
        return Err(format!("mcr(zip(K3,3, K3,3)) in [{}, {}]", res.lower, res.upper));
    }
    let mut suite = vec![
        families::complete(4),
        families::complete(5),
        families::complete(6),
        families::complete_bipartite(3, 3),
        families::complete_bipartite(3, 4),
        families::petersen(),
        families::prism(),
        k33_chain(2),
        z.clone(),
    ];
    let mut r = rng(9);
    for _ in 0..20 {
        let n = r.gen_range(5..=8);
        let m = r.gen_range(n + 2..=(n * (n - 1) / 2).min(14));
        suite.push(random_connected(&mut r, n, m, false));
    }
    for (i, g) in suite.iter().enumerate() {
        let c = cr(&mut solver, g);
        let capped = McrLimits {
            max_expansions: Some(200),
        };
        let m = minor_crossing_number(g, DEFAULT_DEGREE_CAP, capped, &mut solver).map_err(|e| e.to_string())?;
        if let Some(m) = m {
            if m.lower > c || m.upper > c {
                return Err(format!(
                    "instance {i}: mcr bounds [{}, {}] exceed cr {c}",
                    m.lower, m.upper
                ));
            }
        }
    }
    let mut bounds = Vec::new();
    for (t, g, expect) in [
        (families::path(2), families::complete(4), 2),
        (families::path(3), families::cycle(3), 0),
    ] {
        let b = tree_product_bound(&t, &g, &mut solver).map_err(|e| e.to_string())?;
        let direct = cr(&mut solver, &cartesian_product(&t, &g));
        if b != expect || b > direct {
            return Err(format!("tree bound {b}, expected {expect}, product cr {direct}"));
        }
        bounds.push(format!("{b}<={direct}"));
    }
    Ok(format!(
        "mcr(zip(K3,3, K3,3)) = 2; mcr <= cr on {} graphs; tree bounds {}",
        suite.len(),
        bounds.join(", ")
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("exact solver values", criterion_1),
        ("one crossing lowers cr by at most one", criterion_2),
        ("zip additivity at degree <= 3", criterion_3),
        ("decomposition of the 5-chain", criterion_4),
        ("zip(K3,3, K3,3) is 2-critical", criterion_5),
        ("internally 4-edge-connected factors", criterion_6),
        ("bundle oracle equivalence", criterion_7),
        ("superadditivity with coherent bundles", criterion_8),
        ("minor crossing number suite", criterion_9),
    ];
    let only: Option<usize> = std::env::var("ACCEPTANCE_ONLY").ok().and_then(|s| s.parse().ok());
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let n = i + 1;
        if only.is_some_and(|o| o != n) {
            continue;
        }
        let t = Instant::now();
        let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = t.elapsed().as_secs_f64();
        match res {
            Ok(detail) => println!("PASS {n} {name}: {detail} [{secs:.1}s]"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {n} {name}: {detail} [{secs:.1}s]");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
