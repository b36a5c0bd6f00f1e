//! The `verify-paper` suite: every bundled artifact re-checked, one row per
//! check. Output holds no timings, so it is byte-stable across runs and
//! worker counts.

use std::fmt::Write as _;

use serde::Serialize;
use wordrep_core::canon::canonize_up_to;
use wordrep_core::decision::verify_certificate;
use wordrep_core::orientation::{count_semi_transitive_naive, lemma1_propagate, Orientation, Propagation};
use wordrep_core::{decide, Graph, Verdict};

use crate::data;
use crate::parallel::Workers;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

fn check(name: &'static str, pass: bool, detail: String) -> Check {
    Check { name, pass, detail }
}

fn pairs(ps: &[(usize, usize)]) -> String {
    ps.iter().map(|(a, b)| format!("{a}-{b}")).collect::<Vec<_>>().join(",")
}

fn m_word() -> Check {
    let w = data::m_word();
    let ok = w.represents(&data::graph_m()) == Ok(true);
    let missing = w.non_alternating_pairs();
    check(
        "m-word",
        ok && missing == [(1, 3), (1, 4)],
        format!("{} represents M: {ok}; non-alternating {}", w, pairs(&missing)),
    )
}

fn k4_words() -> Check {
    let k4 = data::k4();
    let words = data::k4_words();
    let good = words.iter().filter(|w| w.represents(&k4) == Ok(true)).count();
    check("k4-words", words.len() == 5 && good == 5, format!("{good}/{} words represent K4", words.len()))
}

fn petersen_word() -> Check {
    let w = data::petersen_word();
    let k = w.uniformity();
    let same = match (w.graph(), canonize_up_to(&data::petersen(), 10)) {
        (Ok(h), Ok(p)) => canonize_up_to(&h, 10).map(|c| c.form == p.form).unwrap_or(false),
        _ => false,
    };
    check(
        "petersen-word",
        k == Some(3) && same,
        format!(
            "{} letters, uniformity {}, same canonical form: {same}",
            w.len(),
            k.map_or("none".into(), |k| k.to_string())
        ),
    )
}

fn graph_a(workers: &Workers) -> Check {
    let a = data::graph_a();
    let par = workers.decide(&a).verdict;
    // statistics from the sequential search so the row is worker-independent
    let d = decide(&a);
    let naive = count_semi_transitive_naive(&a).ok();
    let s = d.stats;
    check(
        "graph-a-refuted",
        d.verdict == Verdict::NonRepresentable && par == d.verdict && naive == Some(0) && d.propagated,
        format!(
            "{}; naive survivors of {} orientations: {}; nodes {} propagations {} 4-cycle conflicts {} \
             cycle rejections {} shortcut checks {} shortcut rejections {}",
            d.verdict,
            1u64 << a.edge_count(),
            naive.map_or("n/a".into(), |c| c.to_string()),
            s.nodes,
            s.propagations,
            s.lemma1_conflicts,
            s.cycle_rejections,
            s.shortcut_checks,
            s.shortcut_rejections,
        ),
    )
}

fn forcing_replay() -> Check {
    let a = data::graph_a();
    let o = Orientation::from_arcs(&a, [(1, 2), (6, 1)]).expect("edges of A");
    let (ok, detail) = match lemma1_propagate(&o) {
        Ok(Propagation::Fixpoint { mut forced, .. }) => {
            forced.sort_unstable();
            (forced == [(5, 2), (6, 5)], format!("1>2, 6>1 forces {}", pairs(&forced).replace('-', ">")))
        }
        Ok(Propagation::Conflict(c)) => (false, format!("unexpected conflict {:?}", c.witness)),
        Err(e) => (false, e.to_string()),
    };
    check("forcing-replay", ok, detail)
}

fn counts(workers: &Workers) -> Check {
    let mut ok = true;
    let mut detail = Vec::new();
    for (name, g, want) in [("K4", data::k4(), 24), ("C4", data::c4(), 6), ("A", data::graph_a(), 0)] {
        let fast = workers.count_semi_transitive(&g).ok();
        let naive = count_semi_transitive_naive(&g).ok();
        ok &= fast == Some(want) && naive == Some(want);
        detail.push(format!("{name} {}", fast.map_or("n/a".into(), |c| c.to_string())));
    }
    check("orientation-counts", ok, detail.join(", "))
}

fn named_verdicts(workers: &Workers) -> Check {
    let mut ok = true;
    let mut detail = Vec::new();
    let named: [(&str, Graph); 3] = [("K4", data::k4()), ("M", data::graph_m()), ("C5", data::c5())];
    for (name, g) in named {
        let d = workers.decide(&g);
        ok &= d.verdict == Verdict::Representable && verify_certificate(&g, &d) == Ok(true);
        detail.push(format!("{name} {}", d.verdict));
    }
    check("named-verdicts", ok, detail.join(", "))
}

pub fn run(workers: &Workers) -> Vec<Check> {
    vec![
        m_word(),
        k4_words(),
        petersen_word(),
        graph_a(workers),
        forcing_replay(),
        counts(workers),
        named_verdicts(workers),
    ]
}

pub fn render(checks: &[Check]) -> String {
    let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    let mut s = String::new();
    for c in checks {
        let _ = writeln!(s, "{}  {:width$}  {}", if c.pass { "PASS" } else { "FAIL" }, c.name, c.detail);
    }
    let passed = checks.iter().filter(|c| c.pass).count();
    let _ = writeln!(s, "{passed}/{} checks passed", checks.len());
    s
}
