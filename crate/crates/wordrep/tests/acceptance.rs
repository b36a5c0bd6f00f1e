//! Acceptance run: one PASS/FAIL line per criterion. Built without the
//! libtest harness so the lines always reach stdout.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wordrep::format::write_orientation;
use wordrep::Workers;
use wordrep_core::canon::{canonize_up_to, find_isomorphism};
use wordrep_core::orientation::{count_semi_transitive_naive, Propagation};
use wordrep_core::{
    canonical_form, census, count_semi_transitive, decide, entropy_table, enumerate_graphs, find_semi_transitive,
    find_word, lemma1_propagate, orient_by_coloring, verify_certificate, Graph, Orientation, Verdict, VertexColoring,
    Word,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn a_is_refuted() -> Outcome {
    let a = graph_a();
    let start = Instant::now();
    let d = decide(&a);
    let took = start.elapsed();
    ensure!(d.verdict == Verdict::NonRepresentable, "decide(A) = {}", d.verdict);
    ensure!(took < Duration::from_secs(1), "decide(A) took {took:?}");
    let total = 1u64 << a.edge_count();
    let survivors = (0..total).filter(|&m| naive_semi_transitive(a.n(), &arcs_of_mask(&a, m))).count();
    ensure!(total == 4096 && survivors == 0, "{survivors} of {total} orientations survive the naive check");
    Ok(format!(
        "NonRepresentable in {took:?}; 0/4096 orientations semi-transitive; leaf shortcut checks fired: {}",
        d.stats.shortcut_checks
    ))
}

fn published_words() -> Outcome {
    let m: Word = "1213423".parse().map_err(|e| format!("{e}"))?;
    ensure!(m.represents(&graph_m()) == Ok(true), "1213423 does not represent M");
    ensure!(naive_word_graph_matches(m.letters(), &graph_m()), "naive alternation disagrees on M");
    ensure!(m.non_alternating_pairs() == [(1, 3), (1, 4)], "non-alternating pairs {:?}", m.non_alternating_pairs());

    let k4 = Graph::complete(4).unwrap();
    for s in ["1234", "3142", "123412", "12341234", "432143214321"] {
        let w: Word = s.parse().map_err(|e| format!("{e}"))?;
        ensure!(w.represents(&k4) == Ok(true), "{s} does not represent K4");
        ensure!(naive_word_graph_matches(w.letters(), &k4), "naive alternation rejects {s}");
    }

    let p: Word = "1387296(10)7493541283(10)7685(10)194562".parse().map_err(|e| format!("{e}"))?;
    ensure!(p.len() == 30 && p.uniformity() == Some(3), "Petersen word uniformity {:?}", p.uniformity());
    let h = p.graph().map_err(|e| format!("{e}"))?;
    let same = canonize_up_to(&h, 10).unwrap().form == canonize_up_to(&petersen(), 10).unwrap().form;
    ensure!(same, "canonical forms differ");
    let iso = find_isomorphism(&h, &petersen()).ok_or("no isomorphism found")?;
    ensure!(h.permuted(&iso).unwrap() == petersen(), "isomorphism does not map edges");
    Ok("M, five K4 words and the 3-uniform Petersen word all check out".into())
}

fn orientation_counts() -> Outcome {
    let mut out = Vec::new();
    for (name, g, want) in
        [("K4", Graph::complete(4).unwrap(), 24), ("C4", Graph::cycle(4).unwrap(), 6), ("A", graph_a(), 0)]
    {
        let fast = count_semi_transitive(&g).map_err(|e| format!("{e}"))?;
        let naive = naive_count(&g);
        ensure!(fast == want && naive == want, "{name}: search {fast}, naive {naive}, expected {want}");
        out.push(format!("{name} {fast}"));
    }
    Ok(out.join(", "))
}

fn forcing_replay() -> Outcome {
    let a = graph_a();
    let o = Orientation::from_arcs(&a, [(1, 2), (6, 1)]).unwrap();
    match lemma1_propagate(&o).map_err(|e| format!("{e}"))? {
        Propagation::Fixpoint { mut forced, .. } => {
            forced.sort_unstable();
            ensure!(forced == [(5, 2), (6, 5)], "forced {forced:?}");
        }
        Propagation::Conflict(c) => return Err(format!("conflict {c:?}")),
    }
    let mut checked = 0;
    for n in 1..=5 {
        for g in all_labelled(n).into_iter().filter(Graph::is_k4_free) {
            let with = count_semi_transitive(&g).unwrap();
            let without = count_semi_transitive_naive(&g).unwrap();
            ensure!(with == without, "{g:?}: {with} with propagation, {without} without");
            checked += 1;
        }
    }
    for class in (1..=5).flat_map(|n| enumerate_graphs(n).unwrap()).filter(|c| c.graph.is_k4_free()) {
        ensure!(count_semi_transitive(&class.graph).unwrap() == naive_count(&class.graph), "{:?}", class.graph);
    }
    Ok(format!("1>2, 6>1 forces 5>2, 6>5; counts agree on {checked} labelled K4-free graphs"))
}

fn coloring_construction() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for i in 0..1000 {
        let n = rng.gen_range(1..=10);
        let colors: Vec<u8> = (0..n).map(|_| rng.gen_range(1..=3)).collect();
        let p = rng.gen_range(0.2..0.9);
        let edges: Vec<_> =
            all_pairs(n).into_iter().filter(|&(u, v)| colors[u - 1] != colors[v - 1] && rng.gen_bool(p)).collect();
        let g = Graph::from_edges(n, edges).unwrap();
        let o = orient_by_coloring(&g, &VertexColoring::new(colors).unwrap()).map_err(|e| format!("{e}"))?;
        ensure!(o.is_semi_transitive() == Ok(true), "instance {i}: {g:?}");
        ensure!(naive_semi_transitive(n, &o.arcs()), "instance {i}: naive check fails on {g:?}");
    }
    let p = petersen();
    let c = p.proper_coloring(3).ok_or("Petersen not 3-colored")?;
    let o = orient_by_coloring(&p, &c).map_err(|e| format!("{e}"))?;
    ensure!(o.is_semi_transitive() == Ok(true), "Petersen orientation fails");
    ensure!(naive_semi_transitive(10, &o.arcs()), "Petersen orientation fails the naive check");
    Ok("1000 random instances and Petersen, no failures".into())
}

fn subcubic_graphs() -> Outcome {
    let mut checked = 0;
    for n in 1..=7 {
        for class in enumerate_graphs(n).unwrap() {
            let g = &class.graph;
            if !g.is_connected() || g.max_degree() > 3 {
                continue;
            }
            let d = decide(g);
            ensure!(d.is_representable(), "{} is not representable", class.form);
            ensure!(naive_semi_transitive(n, &d.witness.unwrap().arcs()), "bad witness for {}", class.form);
            checked += 1;
        }
    }
    Ok(format!("{checked} connected classes with max degree <= 3, all representable"))
}

fn words_match_verdicts() -> Outcome {
    let start = Instant::now();
    let mut max_k = 0;
    let mut classes = 0;
    for n in 1..=5 {
        for class in enumerate_graphs(n).unwrap() {
            let g = &class.graph;
            let d = decide(g);
            let r = find_word(g, 3).map_err(|e| format!("{e}"))?;
            ensure!(d.is_representable() == r.word.is_some(), "{}: {} but word {:?}", class.form, d.verdict, r.word);
            if let Some(w) = &r.word {
                ensure!(naive_word_graph_matches(w.letters(), g), "{}: word {w} is wrong", class.form);
                max_k = max_k.max(r.k_tried);
            }
            classes += 1;
        }
    }
    let took = start.elapsed();
    ensure!(took < Duration::from_secs(300), "took {took:?}");
    Ok(format!("{classes} classes agree; max k needed = {max_k}; {took:?}"))
}

fn labelled_oracle(n: usize) -> u64 {
    all_labelled(n)
        .iter()
        .filter(|g| (0..1u64 << g.edge_count()).any(|m| naive_semi_transitive(n, &arcs_of_mask(g, m))))
        .count() as u64
}

fn census_counts() -> Outcome {
    let workers = Workers::new(4).unwrap();
    let mut found = Vec::new();
    for n in 1..=5 {
        let row = census(n, false).map_err(|e| format!("{e}"))?;
        let oracle = labelled_oracle(n);
        ensure!(row.b_n == oracle, "n = {n}: b_n {} vs oracle {oracle}", row.b_n);
        found.push(format!("b{n}={}", row.b_n));
    }
    ensure!(census(4, false).unwrap().b_n == 64, "b4");

    let start = Instant::now();
    let six = census(6, false).map_err(|e| format!("{e}"))?;
    let took = start.elapsed();
    ensure!(took < Duration::from_secs(60), "n = 6 took {took:?}");
    ensure!((six.a_n, six.b_n, six.classes) == (155, 32696, 156), "n = 6 row {six:?}");
    ensure!(workers.census(6, false, None).unwrap() == six, "parallel n = 6 census differs");

    let seven = workers.census(7, true, None).map_err(|e| format!("{e}"))?;
    let a = canonical_form(&graph_a()).unwrap();
    ensure!(seven.nonrep_classes.contains(&a), "A ({a}) missing from n = 7 non-representable classes");
    ensure!(
        (seven.a_n, seven.b_n, seven.classes, seven.nonrep_classes.len()) == (1018, 2054480, 1044, 26),
        "n = 7 row a={} b={} classes={} nonrep={}",
        seven.a_n,
        seven.b_n,
        seven.classes,
        seven.nonrep_classes.len()
    );
    Ok(format!(
        "{}; n=6 a=155 b=32696 in {took:?}; n=7 a=1018 b=2054480, 26 non-representable classes incl. A = {a}",
        found.join(" ")
    ))
}

fn hereditary() -> Outcome {
    let mut checked = 0;
    for n in 2..=6 {
        for class in enumerate_graphs(n).unwrap() {
            if !decide(&class.graph).is_representable() {
                continue;
            }
            for v in 1..=n {
                let h = class.graph.delete_vertex(v).unwrap();
                ensure!(decide(&h).is_representable(), "{} minus {v} is not representable", class.form);
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} vertex-deleted subgraphs, all representable"))
}

fn entropy_rows() -> Outcome {
    let rows = entropy_table(6, false).map_err(|e| format!("{e}"))?;
    ensure!(rows.iter().map(|r| r.n).eq(2..=6), "rows {:?}", rows.iter().map(|r| r.n).collect::<Vec<_>>());
    let mut shown = Vec::new();
    for row in &rows {
        let e = row.entropy.ok_or(format!("n = {} entropy missing", row.n))?;
        ensure!(e.is_finite(), "n = {} entropy {e}", row.n);
        let classes = enumerate_graphs(row.n).unwrap();
        let orbit_sum: u64 =
            classes.iter().filter(|c| decide(&c.graph).is_representable()).map(|c| c.labelled_count()).sum();
        let all: u64 = classes.iter().map(|c| c.labelled_count()).sum();
        ensure!(row.b_n == orbit_sum, "n = {}: b_n {} vs orbit sum {orbit_sum}", row.n, row.b_n);
        ensure!(all == row.labelled_total, "n = {}: orbit sizes sum to {all}", row.n);
        ensure!(row.a_n <= row.b_n && row.b_n <= row.labelled_total, "n = {}: bounds fail", row.n);
        shown.push(format!("{}:{e:.6}", row.n));
    }
    Ok(format!("entropy {}", shown.join(" ")))
}

fn determinism() -> Outcome {
    let one = Workers::new(1).unwrap();
    let many = Workers::new(4).unwrap();
    let mut graphs: Vec<Graph> = (1..=6).flat_map(|n| enumerate_graphs(n).unwrap()).map(|c| c.graph).collect();
    graphs.extend([graph_a(), graph_m(), petersen(), Graph::cycle(5).unwrap()]);
    let show = |o: &Option<Orientation>| o.as_ref().map(write_orientation);
    for g in &graphs {
        let (d1, dn) = (one.decide(g), many.decide(g));
        ensure!(d1.verdict == dn.verdict && show(&d1.witness) == show(&dn.witness), "decide differs on {g:?}");
        ensure!(show(&d1.witness) == show(&decide(g).witness), "decide differs from sequential on {g:?}");
        ensure!(verify_certificate(g, &dn).unwrap_or(true), "parallel certificate rejected on {g:?}");
        let (f1, fn_) = (one.find_semi_transitive(g), many.find_semi_transitive(g));
        ensure!(show(&f1) == show(&fn_) && show(&f1) == show(&find_semi_transitive(g)), "find differs on {g:?}");
    }
    let mut word_graphs: Vec<Graph> = (1..=5).flat_map(|n| enumerate_graphs(n).unwrap()).map(|c| c.graph).collect();
    word_graphs.push(graph_m());
    for g in &word_graphs {
        let (w1, wn) = (one.find_word(g, 3).unwrap(), many.find_word(g, 3).unwrap());
        let text = |r: &wordrep_core::WordSearchResult| r.word.as_ref().map(|w| w.to_string());
        ensure!(text(&w1) == text(&wn) && w1.k_tried == wn.k_tried, "find_word differs on {g:?}");
    }
    Ok(format!("{} graphs for orientations, {} for words, 1 vs 4 workers identical", graphs.len(), word_graphs.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("graph A has no semi-transitive orientation", a_is_refuted),
        ("published words", published_words),
        ("orientation counts", orientation_counts),
        ("4-cycle forcing replay and count agreement", forcing_replay),
        ("3-coloring construction", coloring_construction),
        ("connected subcubic graphs, n <= 7", subcubic_graphs),
        ("verdicts match k <= 3 word search, n <= 5", words_match_verdicts),
        ("census", census_counts),
        ("hereditary closure, n <= 6", hereditary),
        ("entropy table and row identities", entropy_rows),
        ("worker-count determinism", determinism),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{secs:.2}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} [{secs:.2}s]", i + 1);
            }
        }
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
