//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any fail.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use common::{
    all_instances, build, complement_has, complete, complete_minus, edges_of, shape, Naive, Shape,
};
use hyperarena::constructions::{
    enumerate_all, random_hypertournament, t1, t2, t3, FigureVariant, RANDOM_GENERATOR,
};
use hyperarena::io::instance_to_json;
use hyperarena::paths::is_strong_exhaustive;
use hyperarena::verify::{
    check_ij_collapse, sweep, Check, GraphBuilder, SweepConfig, SweepSource, DEFAULT_COLLAPSE_PAIRS,
};
use hyperarena::{
    classify_shape, competition_graph, competition_graph_12_fast, is_strong, is_strong_dominance,
    ShapeTag,
};

type Verdict = Result<String, String>;

const JOBS: usize = 8;
const RANDOM_SIZES: [(usize, usize); 4] = [(5, 3), (5, 4), (6, 3), (6, 4)];
const VARIANTS: [FigureVariant; 2] = [FigureVariant::Text, FigureVariant::Figure];

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(started: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let took = started.elapsed();
    ensure(took < limit, || {
        format!("{what} took {took:.2?}, limit {limit:?}")
    })
}

fn c1_figure_fixtures() -> Verdict {
    let started = Instant::now();
    // Figure 2-4 captions: K5 - v4v5, K5, K5 - {v1v2, v2v3}.
    let cases = [
        ("t1", complete_minus(5, &[(4, 5)])),
        ("t2", complete(5)),
        ("t3", complete_minus(5, &[(1, 2), (2, 3)])),
    ];
    for variant in VARIANTS {
        for (name, expected) in &cases {
            let t = match *name {
                "t1" => t1(5, 3, variant),
                "t2" => t2(5, 3, variant),
                _ => t3(5, 3),
            }
            .unwrap();
            let by_def = edges_of(&competition_graph(&t, 1, 2).unwrap());
            let by_lemma = edges_of(&competition_graph_12_fast(&t).unwrap());
            let naive = Naive::of(&t);
            ensure(&by_def == expected, || {
                format!("{name} {variant:?}: definition builder gives {by_def:?}")
            })?;
            ensure(&by_lemma == expected, || {
                format!("{name} {variant:?}: lemma builder gives {by_lemma:?}")
            })?;
            ensure(&naive.graph(1, 2) == expected, || {
                format!("{name} {variant:?}: oracle disagrees")
            })?;
            ensure(is_strong(&t) && naive.strong(), || {
                format!("{name} {variant:?} is not strong")
            })?;
        }
    }
    within(started, Duration::from_secs(1), "figure fixtures")?;
    Ok(format!(
        "t1/t2/t3 at (5,3), both variants, both builders + oracle, {:.0?}",
        started.elapsed()
    ))
}

/// Every (4,3) instance with its oracle graph, oracle strongness and library shape.
struct Small {
    arcs: Vec<Vec<usize>>,
    edges: common::Edges,
    strong: bool,
    tag: ShapeTag,
}

fn small_instances() -> Vec<Small> {
    all_instances(4, 3)
        .into_iter()
        .map(|arcs| {
            let t = build(4, 3, &arcs);
            let naive = Naive::new(4, arcs.clone());
            let g = competition_graph(&t, 1, 2).unwrap();
            Small {
                edges: naive.graph(1, 2),
                strong: naive.strong(),
                tag: classify_shape(&g).tag,
                arcs,
            }
        })
        .collect()
}

fn c2_shapes_exhaustive(small: &[Small]) -> Verdict {
    ensure(small.len() == 1296, || {
        format!("oracle produced {} instances", small.len())
    })?;
    let lib: BTreeSet<String> = enumerate_all(4, 3, u128::MAX)
        .unwrap()
        .iter()
        .map(|(_, t)| instance_to_json(&t))
        .collect();
    let oracle: BTreeSet<String> = small
        .iter()
        .map(|s| instance_to_json(&build(4, 3, &s.arcs)))
        .collect();
    ensure(lib == oracle, || {
        "library enumeration differs from the oracle's instance set".into()
    })?;
    let mut tally: BTreeMap<Shape, u64> = BTreeMap::new();
    for s in small {
        let t = build(4, 3, &s.arcs);
        let lib_edges = edges_of(&competition_graph(&t, 1, 2).unwrap());
        ensure(lib_edges == s.edges, || {
            format!("definition builder disagrees with oracle on {:?}", s.arcs)
        })?;
        let sh = shape(4, &s.edges);
        let admissible = matches!(
            sh,
            Shape::Complete | Shape::MinusP2 | Shape::MinusP3 | Shape::CliquePlusIsolated(_)
        );
        ensure(admissible, || {
            format!("inadmissible shape {sh:?} for {:?}", s.arcs)
        })?;
        let expected_tag = match sh {
            Shape::Complete => ShapeTag::Complete,
            Shape::MinusP2 => ShapeTag::CompleteMinusP2,
            Shape::MinusP3 => ShapeTag::CompleteMinusP3,
            Shape::CliquePlusIsolated(_) => ShapeTag::CliquePlusIsolated,
            Shape::Other => ShapeTag::Other,
        };
        ensure(s.tag == expected_tag, || {
            format!("classify_shape says {} for {:?}", s.tag, s.arcs)
        })?;
        *tally
            .entry(match sh {
                Shape::CliquePlusIsolated(_) => Shape::CliquePlusIsolated(0),
                other => other,
            })
            .or_default() += 1;
    }
    let timed = Instant::now();
    let cfg = SweepConfig {
        checks: vec![Check::ShapeTheorems],
        jobs: 1,
        ..SweepConfig::default()
    };
    let report = sweep(&SweepSource::all(4, 3, 0, u128::MAX), &cfg).unwrap();
    within(
        timed,
        Duration::from_secs(10),
        "single-threaded (4,3) shape sweep",
    )?;
    ensure(report.passed() && report.instance_count == 1296, || {
        format!("sweep: {}", report.table())
    })?;
    Ok(format!(
        "1296 instances, shapes {tally:?}, sweep {:.0?}",
        timed.elapsed()
    ))
}

fn c3_strong_shapes(small: &[Small]) -> Verdict {
    let mut strong = 0;
    for s in small {
        let t = build(4, 3, &s.arcs);
        ensure(is_strong(&t) == s.strong, || {
            format!("is_strong disagrees with oracle on {:?}", s.arcs)
        })?;
        if s.strong {
            strong += 1;
            let sh = shape(4, &s.edges);
            ensure(
                matches!(sh, Shape::Complete | Shape::MinusP2 | Shape::MinusP3),
                || format!("strong instance {:?} has shape {sh:?}", s.arcs),
            )?;
            ensure(s.tag != ShapeTag::CliquePlusIsolated, || {
                format!("strong {:?} tagged {}", s.arcs, s.tag)
            })?;
        }
    }
    Ok(format!(
        "{strong} strong instances, none clique-plus-isolated"
    ))
}

fn c4_lemma_equivalence(small: &[Small]) -> Verdict {
    let mut disagreements = Vec::new();
    let mut oracle_disagreements = 0;
    for s in small {
        let t = build(4, 3, &s.arcs);
        let fast = edges_of(&competition_graph_12_fast(&t).unwrap());
        let def = edges_of(&competition_graph(&t, 1, 2).unwrap());
        for (a, b) in complete(4) {
            if fast.contains(&(a, b)) != def.contains(&(a, b)) {
                disagreements.push((instance_to_json(&t), a + 1, b + 1));
            }
        }
        let naive = Naive::new(4, s.arcs.clone());
        oracle_disagreements += naive
            .characterized_graph()
            .symmetric_difference(&s.edges)
            .count();
    }
    ensure(oracle_disagreements == disagreements.len(), || {
        format!(
            "oracle counts {oracle_disagreements} disagreements, library {}",
            disagreements.len()
        )
    })?;

    let started = Instant::now();
    let mut random = Vec::new();
    for (n, k) in RANDOM_SIZES {
        let cfg = SweepConfig {
            checks: vec![Check::MissingEdgeLemma],
            jobs: JOBS,
            ..SweepConfig::default()
        };
        let r = sweep(
            &SweepSource::Random {
                n,
                k,
                seeds: 0..100_000,
            },
            &cfg,
        )
        .unwrap();
        random.push(format!(
            "({n},{k}): {} of {}",
            r.failures.len(),
            r.instance_count
        ));
        ensure(r.passed(), || {
            format!("random ({n},{k}): {:?}", r.failures.first())
        })?;
        // spot-check the library against the literal oracle
        for seed in 0..200 {
            let t = random_hypertournament(n, k, seed).unwrap();
            let naive = Naive::of(&t);
            ensure(
                naive.characterized_graph() == edges_of(&competition_graph_12_fast(&t).unwrap()),
                || format!("lemma builder misreads the characterization at ({n},{k}) seed {seed}"),
            )?;
            ensure(
                naive.graph(1, 2) == edges_of(&competition_graph(&t, 1, 2).unwrap()),
                || format!("definition builder disagrees with oracle at ({n},{k}) seed {seed}"),
            )?;
        }
    }
    within(started, Duration::from_secs(600), "random phase")?;
    let summary = format!(
        "random phase {} in {:.1?}",
        random.join(", "),
        started.elapsed()
    );
    match disagreements.first() {
        None => Ok(format!("(4,3): 0 of 7776 pairs; {summary}")),
        Some((inst, a, b)) => Err(format!(
            "(4,3): {} (instance, pair) disagreements, reproduced by the brute-force oracle; first: pair v{a},v{b} of {inst} \
             (characterization: adjacent, definition: not adjacent); {summary}",
            disagreements.len()
        )),
    }
}

fn c5_collapse(small: &[Small]) -> Verdict {
    for s in small {
        let t = build(4, 3, &s.arcs);
        let outcome = check_ij_collapse(&t, &DEFAULT_COLLAPSE_PAIRS).unwrap();
        ensure(outcome.passed(), || format!("{outcome:?} on {:?}", s.arcs))?;
        let naive = Naive::new(4, s.arcs.clone());
        for (i, j) in DEFAULT_COLLAPSE_PAIRS {
            ensure(naive.graph(i, j) == s.edges, || {
                format!("oracle: C_{i},{j} != C_1,2 on {:?}", s.arcs)
            })?;
        }
        ensure(naive.graph(1, 1).is_subset(&s.edges), || {
            format!("oracle: C_1,1 not in C_1,2 on {:?}", s.arcs)
        })?;
    }
    let mut parts = Vec::new();
    for (n, k) in RANDOM_SIZES {
        let cfg = SweepConfig {
            checks: vec![Check::IjCollapse],
            jobs: JOBS,
            ..SweepConfig::default()
        };
        let r = sweep(
            &SweepSource::Random {
                n,
                k,
                seeds: 0..10_000,
            },
            &cfg,
        )
        .unwrap();
        ensure(r.passed(), || {
            format!("random ({n},{k}): {:?}", r.failures.first())
        })?;
        for seed in 0..50 {
            let naive = Naive::of(&random_hypertournament(n, k, seed).unwrap());
            let base = naive.graph(1, 2);
            ensure(
                naive.graph(2, 2) == base && naive.graph(1, 1).is_subset(&base),
                || format!("oracle collapse fails at ({n},{k}) seed {seed}"),
            )?;
        }
        parts.push(format!("({n},{k})x{}", r.instance_count));
    }
    Ok(format!("(4,3) all 1296 + random {}", parts.join(" ")))
}

fn c6_complement(small: &[Small]) -> Verdict {
    for s in small {
        let (disjoint, triangle, claw) = complement_has(4, &s.edges);
        let isolated = matches!(shape(4, &s.edges), Shape::CliquePlusIsolated(_));
        ensure(!disjoint && !triangle && claw == isolated, || {
            format!(
                "{:?}: disjoint={disjoint} triangle={triangle} claw={claw} isolated={isolated}",
                s.arcs
            )
        })?;
    }
    let mut parts = Vec::new();
    for (n, k) in RANDOM_SIZES {
        let cfg = SweepConfig {
            checks: vec![Check::ComplementLemmas],
            jobs: JOBS,
            ..SweepConfig::default()
        };
        let r = sweep(
            &SweepSource::Random {
                n,
                k,
                seeds: 0..100_000,
            },
            &cfg,
        )
        .unwrap();
        ensure(r.passed(), || {
            format!("random ({n},{k}): {:?}", r.failures.first())
        })?;
        for seed in 0..200 {
            let t = random_hypertournament(n, k, seed).unwrap();
            let e = Naive::of(&t).graph(1, 2);
            let (disjoint, triangle, claw) = complement_has(n, &e);
            let isolated = matches!(shape(n, &e), Shape::CliquePlusIsolated(_));
            ensure(!disjoint && !triangle && claw == isolated, || {
                format!("oracle fails at ({n},{k}) seed {seed}")
            })?;
        }
        parts.push(format!("({n},{k})x{}", r.instance_count));
    }
    Ok(format!("(4,3) all 1296 + random {}", parts.join(" ")))
}

fn c7_strongness(small: &[Small]) -> Verdict {
    for s in small {
        let t = build(4, 3, &s.arcs);
        ensure(
            is_strong(&t) == s.strong && is_strong_exhaustive(&t) == s.strong,
            || format!("strongness disagrees on {:?}", s.arcs),
        )?;
    }
    let mut notes = Vec::new();
    for (n, k) in [(5, 3), (5, 4), (6, 3)] {
        let cfg = SweepConfig {
            checks: vec![Check::StrongnessOracle],
            jobs: JOBS,
            ..SweepConfig::default()
        };
        let r = sweep(
            &SweepSource::Random {
                n,
                k,
                seeds: 0..10_000,
            },
            &cfg,
        )
        .unwrap();
        ensure(r.passed(), || {
            format!("random ({n},{k}): {:?}", r.failures.first())
        })?;
        for seed in 0..300 {
            let t = random_hypertournament(n, k, seed).unwrap();
            ensure(is_strong(&t) == Naive::of(&t).strong(), || {
                format!("oracle disagrees at ({n},{k}) seed {seed}")
            })?;
        }
        let gap = r.dominance_strong_count - r.strong_count;
        notes.push(format!(
            "({n},{k}) strong {}/{} (dominance-only {gap})",
            r.strong_count, r.instance_count
        ));
    }
    let dominance_gap = small
        .iter()
        .filter(|s| is_strong_dominance(&build(4, 3, &s.arcs)) != s.strong)
        .count();
    Ok(format!(
        "shipped = exhaustive path search; (4,3) dominance-only {dominance_gap}; {}",
        notes.join(", ")
    ))
}

fn c8_scale_probe() -> Verdict {
    let started = Instant::now();
    let cfg = SweepConfig {
        checks: vec![Check::ShapeTheorems, Check::SinkShape],
        jobs: JOBS,
        builder: GraphBuilder::Lemma,
        ..SweepConfig::default()
    };
    let r = sweep(&SweepSource::all(5, 4, 0, u128::MAX), &cfg).unwrap();
    ensure(r.instance_count == 7_962_624, || {
        format!("swept {} instances", r.instance_count)
    })?;
    ensure(r.passed(), || {
        format!(
            "{} failures, first {:?}",
            r.failures.len(),
            r.failures.first()
        )
    })?;
    let took = started.elapsed();
    let target = if took < Duration::from_secs(1800) {
        "within"
    } else {
        "OVER"
    };
    Ok(format!(
        "7,962,624 instances, 0 failures, {took:.1?} ({target} the 30 min target), strong {}",
        r.strong_count
    ))
}

fn c9_general_constructions() -> Verdict {
    let mut count = 0;
    for n in 5..=7 {
        for k in 3..n {
            for variant in VARIANTS {
                let t = t1(n, k, variant).unwrap();
                let want = complete_minus(n, &[(n - 1, n)]);
                ensure(
                    edges_of(&competition_graph(&t, 1, 2).unwrap()) == want,
                    || format!("t1({n},{k}) {variant:?} by definition"),
                )?;
                ensure(
                    edges_of(&competition_graph_12_fast(&t).unwrap()) == want,
                    || format!("t1({n},{k}) {variant:?} by lemma"),
                )?;
                let t = t2(n, k, variant).unwrap();
                ensure(
                    edges_of(&competition_graph(&t, 1, 2).unwrap()) == complete(n),
                    || format!("t2({n},{k}) {variant:?} by definition"),
                )?;
                ensure(
                    edges_of(&competition_graph_12_fast(&t).unwrap()) == complete(n),
                    || format!("t2({n},{k}) {variant:?} by lemma"),
                )?;
            }
            let t = t3(n, k).unwrap();
            let want = complete_minus(n, &[(1, 2), (2, 3)]);
            ensure(
                edges_of(&competition_graph(&t, 1, 2).unwrap()) == want,
                || format!("t3({n},{k}) by definition"),
            )?;
            ensure(
                edges_of(&competition_graph_12_fast(&t).unwrap()) == want,
                || format!("t3({n},{k}) by lemma"),
            )?;
            if n <= 6 {
                ensure(Naive::of(&t).graph(1, 2) == want, || {
                    format!("t3({n},{k}) by oracle")
                })?;
            }
            count += 1;
        }
    }
    Ok(format!("{count} (n,k) pairs with 5<=n<=7, 3<=k<=n-1"))
}

fn run_cli(args: &[&str]) -> (Vec<u8>, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_hyperarena"))
        .args(args)
        .output()
        .expect("run hyperarena");
    (out.stdout, out.status.code().unwrap_or(-1))
}

fn c10_determinism() -> Verdict {
    let fixtures = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let f = |name: &str| fixtures.join(name).to_string_lossy().into_owned();
    let (t3f, fig1, counter) = (
        f("t3_n5_k3.json"),
        f("figure1_repaired.json"),
        f("missing_edge_counterexample.json"),
    );
    let commands: Vec<Vec<&str>> = vec![
        vec!["gen", "--kind", "transitive", "--n", "5", "--k", "3"],
        vec![
            "gen",
            "--kind",
            "t1",
            "--n",
            "6",
            "--k",
            "4",
            "--figure-variant",
            "figure",
        ],
        vec!["gen", "--kind", "t2", "--n", "5", "--k", "3"],
        vec!["gen", "--kind", "t3", "--n", "7", "--k", "5"],
        vec![
            "gen", "--kind", "random", "--n", "6", "--k", "4", "--seed", "7",
        ],
        vec![
            "gen",
            "--kind",
            "enumerate",
            "--n",
            "4",
            "--k",
            "3",
            "--index",
            "1000",
        ],
        vec!["compete", &t3f, "--i", "1", "--j", "2"],
        vec!["compete", &t3f, "--i", "1", "--j", "2", "--fast", "--dot"],
        vec!["compete", &t3f, "--i", "2", "--j", "2", "--witness", "1,4"],
        vec!["compete", &fig1, "--i", "1", "--j", "2"],
        vec![
            "verify",
            "--source",
            "all",
            "--n",
            "4",
            "--k",
            "3",
            "--checks",
            "shape,sink",
        ],
        vec![
            "verify", "--source", "random", "--n", "5", "--k", "3", "--seeds", "0..500", "--jobs",
            "4",
        ],
        vec![
            "verify",
            "--source",
            "file",
            &counter,
            "--checks",
            "missing-edge",
        ],
    ];
    for cmd in &commands {
        let first = run_cli(cmd);
        let second = run_cli(cmd);
        ensure(first == second, || {
            format!("output differs between runs of {cmd:?}")
        })?;
        ensure(!first.0.is_empty(), || format!("no output from {cmd:?}"))?;
    }
    let one = run_cli(&[
        "verify", "--source", "random", "--n", "5", "--k", "4", "--seeds", "0..300", "--jobs", "1",
    ]);
    let many = run_cli(&[
        "verify", "--source", "random", "--n", "5", "--k", "4", "--seeds", "0..300", "--jobs", "8",
    ]);
    ensure(one == many, || "verify report depends on --jobs".into())?;
    for (args, golden) in [
        (
            ["--n", "6", "--k", "4", "--seed", "7"],
            "random_n6_k4_seed7.json",
        ),
        (
            ["--n", "5", "--k", "3", "--seed", "0"],
            "random_n5_k3_seed0.json",
        ),
    ] {
        let mut cmd = vec!["gen", "--kind", "random"];
        cmd.extend(args);
        let want = std::fs::read(fixtures.join(golden)).unwrap();
        ensure(run_cli(&cmd).0 == want, || {
            format!("{golden} not reproduced by {RANDOM_GENERATOR}")
        })?;
    }
    Ok(format!(
        "{} fixture commands x2, --jobs 1 vs 8, 2 seeded goldens",
        commands.len()
    ))
}

fn main() {
    let mut failed = 0;
    let mut report = |n: u32, title: &str, verdict: Verdict| match verdict {
        Ok(detail) => println!("criterion {n:>2} PASS  {title}: {detail}"),
        Err(detail) => {
            failed += 1;
            println!("criterion {n:>2} FAIL  {title}: {detail}");
        }
    };
    report(1, "figure fixtures", c1_figure_fixtures());
    let small = small_instances();
    report(
        2,
        "shape theorem, exhaustive (4,3)",
        c2_shapes_exhaustive(&small),
    );
    report(
        3,
        "strong shape theorem, exhaustive (4,3)",
        c3_strong_shapes(&small),
    );
    report(
        4,
        "missing-edge characterization vs definition",
        c4_lemma_equivalence(&small),
    );
    report(5, "(i,j) collapse and C_1,1 inclusion", c5_collapse(&small));
    report(6, "complement forbidden subgraphs", c6_complement(&small));
    report(7, "strongness oracle", c7_strongness(&small));
    report(8, "scale probe, exhaustive (5,4)", c8_scale_probe());
    report(9, "generalized constructions", c9_general_constructions());
    report(10, "determinism", c10_determinism());
    if failed > 0 {
        println!("{failed} criterion(s) failed");
        std::process::exit(1);
    }
}
