//! Acceptance run. Prints one `[PASS]` or `[FAIL]` line per criterion and
//! exits nonzero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use attainset::attraction::{
    attraction_set_direct, attraction_set_via_ultrafilters, condition_check,
    generalized_solution_pipeline, partial_attraction, ultra_limit_map,
};
use attainset::corpus::Corpus;
use attainset::filters::{admissible_ultrafilters, enumerate_ultrafilters};
use attainset::oracle::{filters_naive, filters_pruned, maximal};
use attainset::ultraspace::{build_space, stone_report, wallman_embedding, Which};
use attainset::{
    Ambient, AttractionProblem, Closure, PointMap, SetFamily, Subset, Topology, Universe,
};

const SEED: u64 = 42;
const C1_LIMIT: Duration = Duration::from_secs(10);
const C2_LIMIT: Duration = Duration::from_secs(30);
const C4_LIMIT: Duration = Duration::from_secs(30);
const C8_LIMIT: Duration = Duration::from_secs(60);
const C1_RANDOM: usize = 500;
const C2_PROBLEMS: usize = 1000;
const C4_ALGEBRAS: usize = 200;
const C5_LATTICES: usize = 100;
const C6_INSTANCES: usize = 200;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn meet(fam: &[Subset], full: Subset) -> Subset {
    fam.iter().fold(full, |a, &b| a.intersection(b))
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let t = Instant::now();
    let r = f()?;
    let dt = t.elapsed();
    if dt >= limit {
        return Err(format!("{r}; took {dt:.2?}, limit {limit:?}"));
    }
    Ok(format!("{r}; {dt:.2?}"))
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fast_mins(f: &SetFamily) -> Vec<Subset> {
    let amb = Ambient::family(f.clone()).unwrap();
    enumerate_ultrafilters(&amb).iter().map(|u| u.min()).collect()
}

fn searched_mins(f: &SetFamily, naive: bool) -> Vec<Subset> {
    let all = if naive {
        filters_naive(f.members())
    } else {
        filters_pruned(f.members())
    };
    let mut v: Vec<Subset> = maximal(&all)
        .iter()
        .map(|m| meet(m, f.universe().full()))
        .collect();
    v.sort();
    v
}

fn ultrafilter_enumeration() -> Outcome {
    let u = Universe::new(2).unwrap();
    let subsets: Vec<Subset> = u.power_set().collect();
    let mut exhaustive = 0;
    for mask in 1u32..1 << subsets.len() {
        let members = (0..subsets.len()).filter(|&i| mask >> i & 1 == 1).map(|i| subsets[i]);
        let f = SetFamily::new(u.clone(), members).unwrap();
        if !f.classify().pi_system {
            continue;
        }
        exhaustive += 1;
        ensure(fast_mins(&f) == searched_mins(&f, true), || f.show())?;
    }
    let mut c = Corpus::new(SEED);
    for i in 0..C1_RANDOM {
        let f = c.pi_system(3 + i % 3);
        let naive = f.len() <= 20;
        ensure(fast_mins(&f) == searched_mins(&f, naive), || f.show())?;
    }
    Ok(format!("{exhaustive} two-point pi-systems, {C1_RANDOM} random, 0 mismatches"))
}

fn problem_corpus() -> Vec<AttractionProblem> {
    let mut c = Corpus::new(SEED);
    (0..C2_PROBLEMS).map(|i| c.problem(1 + i % 6, 1 + (i / 6) % 5)).collect()
}

fn pipeline_corpus() -> Vec<AttractionProblem> {
    let mut c = Corpus::new(SEED + 1);
    (0..C6_INSTANCES).map(|i| c.pipeline_problem(1 + i % 6, 1 + (i / 6) % 4)).collect()
}

fn equivalence(corpus: &[AttractionProblem]) -> Outcome {
    for p in corpus {
        let d = attraction_set_direct(p).map_err(|e| e.to_string())?;
        let v = attraction_set_via_ultrafilters(p).map_err(|e| e.to_string())?;
        ensure(d == v, || format!("direct {d:?} via {v:?} for {}", p.constraint().show()))?;
    }
    Ok(format!("{} problems, 0 mismatches", corpus.len()))
}

fn ambient_of(p: &AttractionProblem) -> Ambient {
    match p.algebra() {
        Some(a) => Ambient::family(a.clone()).unwrap(),
        None => Ambient::power_set(p.domain()),
    }
}

fn intersection_invariance(corpus: &[AttractionProblem]) -> Outcome {
    for p in corpus {
        let closed = p.constraint().close_under(Closure::FiniteIntersections).unwrap();
        let q = p.with_constraint(closed.clone()).unwrap();
        let amb = ambient_of(p);
        let a = admissible_ultrafilters(&amb, p.constraint()).unwrap();
        let b = admissible_ultrafilters(&amb, &closed).unwrap();
        ensure(a == b, || format!("admissible sets differ for {}", p.constraint().show()))?;
        for (x, y) in [
            (attraction_set_direct(p), attraction_set_direct(&q)),
            (attraction_set_via_ultrafilters(p), attraction_set_via_ultrafilters(&q)),
        ] {
            ensure(x.unwrap() == y.unwrap(), || {
                format!("attraction set changes for {}", p.constraint().show())
            })?;
        }
    }
    Ok(format!("{} problems, 0 mismatches", corpus.len()))
}

const STONE_CHECKS: [&str; 8] = [
    "phi-preserves-complement",
    "uf-self-dual",
    "star-equals-wallman",
    "uf-is-algebra",
    "uf-is-clopen-family",
    "star-hausdorff",
    "star-compact",
    "traces-dense-in-star",
];

fn stone_suite() -> Outcome {
    let mut c = Corpus::new(SEED);
    for i in 0..C4_ALGEBRAS {
        let a = c.algebra(1 + i % 6);
        let r = stone_report(&a).map_err(|e| e.to_string())?;
        for name in STONE_CHECKS {
            let check = r.checks.get(name).ok_or_else(|| format!("{name} missing"))?;
            ensure(check.passed, || format!("{name} on {}: {:?}", a.show(), check.witness))?;
        }
        ensure(r.passed(), || format!("stone checks on {}", a.show()))?;
    }
    Ok(format!("{C4_ALGEBRAS} algebras, {} checks each, 0 failures", STONE_CHECKS.len()))
}

fn lattice_checks(l: &SetFamily) -> Result<(), String> {
    let sp = build_space(l).map_err(|e| e.to_string())?;
    let w = sp.wallman().ok_or("no Wallman topology")?;
    let uf = sp.uf();
    let a = uf.close_under(Closure::Intersections).unwrap().complement_dual();
    let b = uf.complement_dual().close_under(Closure::Unions).unwrap();
    ensure(w.opens() == &a && a == b, || format!("triple identity on {}", l.show()))?;
    let bad = sp.universe().power_set().find(|&g| sp.predicate_open(g) != w.is_open(g));
    ensure(bad.is_none(), || format!("open predicate on {}", l.show()))?;
    ensure(sp.singleton_closedness().all_passed(), || format!("singletons on {}", l.show()))?;
    for i in 0..sp.points().len() {
        let z = sp.local_base_at(i).map_err(|e| e.to_string())?;
        ensure(w.is_local_base(&z, i), || format!("local base at {i} on {}", l.show()))?;
    }
    ensure(w.separation().compact, || format!("compactness on {}", l.show()))
}

fn wallman_suite() -> Outcome {
    let mut c = Corpus::new(SEED);
    let mut dense = 0;
    for i in 0..C5_LATTICES {
        let n = 1 + i % 5;
        let l = c.lattice(n);
        lattice_checks(&l)?;
        let u = l.universe();
        let with_points = l
            .with_members((0..n).map(Subset::singleton))
            .unwrap()
            .close_under(Closure::Unions)
            .unwrap();
        ensure(with_points.classify().lattice_with_singletons, || with_points.show())?;
        lattice_checks(&with_points)?;
        let sp = build_space(&with_points).unwrap();
        let d = sp.density(Which::Wallman).unwrap();
        ensure(d.dense && d.hypothesis_holds, || format!("density on {}", with_points.show()))?;
        ensure(d.trace_points.len() == u.size(), || with_points.show())?;
        dense += 1;
    }
    for n in 1..=6 {
        let tau = Topology::discrete(&Universe::new(n).unwrap()).unwrap();
        let e = wallman_embedding(&tau).map_err(|e| e.to_string())?;
        for name in ["embedding-injective", "embedding-pulls-phi-back", "embedding-homeomorphism-onto-image"] {
            let ok = e.checks.get(name).is_some_and(|c| c.passed);
            ensure(ok, || format!("{name} on {n} points"))?;
        }
        ensure(e.passed(), || format!("embedding on {n} points"))?;
    }
    Ok(format!("{C5_LATTICES} lattices, {dense} with singletons, T1 spaces on 1..6 points, 0 failures"))
}

fn pipeline_suite(corpus: &[AttractionProblem]) -> Outcome {
    let mut equal_under_condition = 0;
    let mut strict = None;
    let mut total_maps = 0;
    for p in golden().iter().chain(corpus) {
        let pa = partial_attraction(p).unwrap();
        let direct = attraction_set_direct(p).unwrap();
        let cond = condition_check(p).unwrap();
        ensure(pa.ultrafilter_form.is_subset_of(direct), || format!("inclusion fails for {:?}", p.map().images()))?;
        if cond.holds {
            ensure(pa.ultrafilter_form == direct, || format!("equality fails for {:?}", p.map().images()))?;
            equal_under_condition += 1;
        } else if pa.ultrafilter_form != direct && strict.is_none() {
            strict = Some(format!(
                "h {:?}, constraint {}: partial {:?} direct {:?}",
                p.map().images(),
                p.constraint().show(),
                pa.ultrafilter_form,
                direct
            ));
        }
        let lm = ultra_limit_map(p).unwrap();
        let trace = lm.space.trace_map().unwrap();
        if lm.is_total() {
            total_maps += 1;
            let vals: Vec<usize> = lm.values.iter().map(|v| v.unwrap()).collect();
            let map = PointMap::new(lm.space.universe().clone(), p.tau().universe().clone(), vals).unwrap();
            let factors = (0..p.domain().size()).all(|x| map.apply(trace.apply(x)) == p.map().apply(x));
            ensure(factors, || format!("factorization fails for {:?}", p.map().images()))?;
            let continuous = p.tau().opens().iter().all(|g| lm.space.star().is_open(map.preimage(g)));
            ensure(continuous, || format!("limit map discontinuous for {:?}", p.map().images()))?;
        }
        let r = generalized_solution_pipeline(p).unwrap();
        ensure(r.passed(), || format!("pipeline checks {:?}", r.checks))?;
        if r.condition_holds {
            ensure(r.image == Some(direct) && direct == pa.ultrafilter_form, || {
                format!("three-way agreement fails for {:?}", p.map().images())
            })?;
        }
    }
    let witness = strict.ok_or("no strict-inclusion witness retained")?;
    Ok(format!(
        "{} instances, {equal_under_condition} equal under the condition, {total_maps} total limit maps, witness [{witness}]",
        corpus.len() + golden().len()
    ))
}

fn golden() -> Vec<AttractionProblem> {
    let e = Universe::new(4).unwrap();
    let hu = Universe::labelled(vec!["p", "q"]).unwrap();
    let a4 = SetFamily::new(e.clone(), [Subset(0), Subset(0b0011), Subset(0b1100), Subset(0b1111)]).unwrap();
    let tau = Topology::discrete(&hu).unwrap();
    let mut out = Vec::new();
    for images in [vec![0, 0, 1, 1], vec![0, 1, 1, 1]] {
        for cons in [vec![Subset(0b1111)], vec![Subset(0b1100)]] {
            let h = PointMap::new(e.clone(), hu.clone(), images.clone()).unwrap();
            let c = SetFamily::new(e.clone(), cons).unwrap();
            out.push(AttractionProblem::new(tau.clone(), h, c, Some(a4.clone())).unwrap());
        }
    }
    out
}

fn golden_values() -> Result<(), String> {
    let g = golden();
    let sets: Vec<(Subset, Subset)> = g
        .iter()
        .map(|p| (partial_attraction(p).unwrap().ultrafilter_form, attraction_set_direct(p).unwrap()))
        .collect();
    let want = [
        (Subset(0b11), Subset(0b11)),
        (Subset(0b10), Subset(0b10)),
        (Subset(0b10), Subset(0b11)),
        (Subset(0b10), Subset(0b10)),
    ];
    ensure(sets == want, || format!("golden sets {sets:?}"))?;
    let values = ultra_limit_map(&g[2]).unwrap().values;
    ensure(values == vec![None, Some(1)], || format!("golden limit values {values:?}"))
}

fn emptiness_laws(corpus: &[AttractionProblem]) -> Outcome {
    let (mut empty, mut nonempty) = (0, 0);
    for p in corpus {
        let m = meet(p.constraint().members(), p.domain().full());
        let d = attraction_set_direct(p).unwrap();
        let v = attraction_set_via_ultrafilters(p).unwrap();
        if m.is_empty() {
            ensure(d.is_empty() && v.is_empty(), || format!("nonempty for {}", p.constraint().show()))?;
            empty += 1;
        } else if p.tau().separation().compact {
            ensure(!d.is_empty() && !v.is_empty(), || format!("empty for {}", p.constraint().show()))?;
            nonempty += 1;
        }
    }
    ensure(empty > 0 && nonempty > 0, || format!("hypotheses met {empty}/{nonempty} times"))?;
    Ok(format!("{} problems, {empty} with an empty meet, {nonempty} without", corpus.len()))
}

fn full_verify() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_attainset"))
        .args(["verify", "--seed", "42", "--max-universe", "5", "--format", "text"])
        .output()
        .map_err(|e| e.to_string())?;
    let summary = String::from_utf8_lossy(&out.stdout);
    let last = summary.lines().last().unwrap_or("").to_string();
    ensure(out.status.code() == Some(0), || format!("exit {:?}: {last}", out.status.code()))?;
    Ok(last)
}

fn main() -> ExitCode {
    let problems = problem_corpus();
    let pipelines = pipeline_corpus();
    let mut everything = problems.clone();
    everything.extend(pipelines.iter().cloned());
    everything.extend(golden());

    let criteria: Vec<Criterion> = vec![
        ("1 ultrafilter enumeration matches exhaustive search", Box::new(|| timed(C1_LIMIT, ultrafilter_enumeration))),
        ("2 direct and ultrafilter attraction sets agree", Box::new(|| timed(C2_LIMIT, || equivalence(&problems)))),
        ("3 finite-intersection closure leaves results unchanged", Box::new(|| intersection_invariance(&problems))),
        ("4 Stone suite on random algebras", Box::new(|| timed(C4_LIMIT, stone_suite))),
        ("5 Wallman suite on random lattices", Box::new(wallman_suite)),
        ("6 ultrafilter pipeline", Box::new(|| {
            golden_values()?;
            pipeline_suite(&pipelines)
        })),
        ("7 emptiness and nonemptiness laws", Box::new(|| emptiness_laws(&everything))),
        ("8 full verify run", Box::new(|| timed(C8_LIMIT, full_verify))),
    ];

    let mut failed = 0;
    for (name, run) in &criteria {
        match run() {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(w) => {
                failed += 1;
                println!("[FAIL] {name}: {w}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
