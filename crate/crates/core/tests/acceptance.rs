//! Acceptance report: one PASS/FAIL line per criterion.
//!
//! Criterion 1 cannot be met: two printed table entries are misprints (see
//! tests/coordinate_oracles.rs), so it stays FAIL and the diffs are listed.
//! Every other criterion must PASS, otherwise the process exits 1.

use std::process::ExitCode;
use std::time::Instant;

use satake_levi::bits::NodeSet;
use satake_levi::classify::validate::{self, run_checks, ValidationReport};
use satake_levi::classify::{verify_tables, Reading};
use satake_levi::levi::{check_witness_properties, levi_verdict, Order};
use satake_levi::parabolic::mark;
use satake_levi::rootspace::RootVector;
use satake_levi::satake::{build_form, build_form_str, default_instances};

struct Line {
    id: u32,
    pass: bool,
    detail: String,
}

fn line(id: u32, pass: bool, detail: impl Into<String>) -> Line {
    Line {
        id,
        pass,
        detail: detail.into(),
    }
}

fn checks_line(id: u32, report: &ValidationReport, names: &[&str]) -> Line {
    let mut pass = true;
    let mut parts = Vec::new();
    for &n in names {
        let c = report.get(n).expect("check exists");
        pass &= c.failed == 0;
        parts.push(format!("{n} {}/{} failed", c.failed, c.checked));
        if c.failed > 0 {
            parts.push(format!("e.g. {:?}", c.examples.first()));
        }
    }
    line(id, pass, parts.join("; "))
}

fn tables() -> Line {
    let inst = default_instances();
    let start = Instant::now();
    let mut counts = Vec::new();
    let mut text = Vec::new();
    for r in Reading::ALL {
        let d = verify_tables(&inst, r).expect("tables run");
        counts.push(format!("{r} {}", d.len()));
        if r == Reading::Text {
            text = d;
        }
    }
    let listed: Vec<String> = text
        .iter()
        .map(|d| {
            format!(
                "{} {:?} table {} computed {}",
                d.form, d.phi, d.expected, d.computed
            )
        })
        .collect();
    line(
        1,
        text.is_empty(),
        format!(
            "{} instances; diffs by reading: {}; remaining: [{}]; {:.2}s for all readings",
            inst.len(),
            counts.join(", "),
            listed.join("; "),
            start.elapsed().as_secs_f64()
        ),
    )
}

fn totally_complex() -> Line {
    let mut bad = Vec::new();
    for (spec, want) in [
        ("AII p=2", [1, 3]),
        ("AII p=3", [1, 5]),
        ("DII l=4", [3, 4]),
        ("DII l=5", [4, 5]),
    ] {
        let f = build_form_str(spec).unwrap();
        let got: Vec<NodeSet> = NodeSet::subsets(f.rank())
            .filter(|&p| !p.is_empty() && mark(&f, p).cr_dims().d == 0)
            .collect();
        let want: Vec<NodeSet> = want.iter().map(|&a| NodeSet::from_labels(&[a])).collect();
        if got != want {
            bad.push(format!("{spec}: {got:?}"));
        }
    }
    let mut extremes = 0;
    for spec in default_instances() {
        let name = spec.to_string();
        let (compact, split) = (name.starts_with("COMPACT"), name.starts_with("SPLIT"));
        if !(compact || split) {
            continue;
        }
        let f = build_form(&spec).unwrap();
        for p in NodeSet::subsets(f.rank()) {
            let dims = mark(&f, p).cr_dims();
            extremes += 1;
            if (compact && dims.d != 0) || (split && dims.n != 0) {
                bad.push(format!("{name} {p:?}"));
            }
        }
    }
    line(
        2,
        bad.is_empty(),
        format!("4 rows, {extremes} compact/split markings; bad: {bad:?}"),
    )
}

fn anchor() -> Line {
    let f = build_form_str("AIIIa p=1 l=3").unwrap();
    let m = mark(&f, NodeSet::from_labels(&[2]));
    let diff = |i: usize, j: usize| {
        let mut v = [0; 4];
        v[i - 1] = 1;
        v[j - 1] = -1;
        RootVector::from_true(&v)
    };
    let as_set = |s: satake_levi::bits::RootSet| {
        let mut v: Vec<RootVector> = s.iter().map(|i| f.rs().root(i).clone()).collect();
        v.sort();
        v
    };
    let want = |pairs: &[(usize, usize)]| {
        let mut v: Vec<RootVector> = pairs.iter().map(|&(i, j)| diff(i, j)).collect();
        v.sort();
        v
    };
    // Q_φ = {ξ ≥ 0}: sets are the negatives of the hand-worked ones.
    let sets_ok = as_set(m.outside()) == want(&[(4, 1)])
        && as_set(m.sigma_q & m.q_neg_n) == want(&[(3, 1), (3, 2), (4, 2)])
        && as_set(m.critical()) == want(&[(4, 3), (2, 3), (2, 1)]);
    let v = levi_verdict(&m).unwrap();
    let beta = f.rs().index_of(&diff(2, 3)).unwrap();
    let c = v.kappa_of(beta).unwrap();
    let total = c
        .witness
        .iter()
        .fold(diff(2, 3), |acc, &a| acc.add(f.rs().root(a)));
    let witness_ok = c.witness.len() + 1 == 3
        && total == diff(4, 1)
        && check_witness_properties(&m, beta, &c.witness).all();
    line(
        3,
        sets_ok && v.fundamental && v.order == Order::Two && witness_ok,
        format!(
            "sets {sets_ok}, fundamental {}, order {}, witness of {} summands valid {witness_ok}",
            v.fundamental,
            v.order,
            c.witness.len() + 1
        ),
    )
}

fn main() -> ExitCode {
    let start = Instant::now();
    let report = run_checks(&default_instances()).expect("validation runs");
    let lines = vec![
        tables(),
        totally_complex(),
        anchor(),
        checks_line(4, &report, &[validate::ORDER_BOUND]),
        checks_line(
            5,
            &report,
            &[
                validate::VERDICT_CROSS_CHECKS,
                validate::FIBRATION_ROUTES,
                validate::FUNDAMENTALITY_ROUTES,
            ],
        ),
        checks_line(6, &report, &[validate::CONJUGATION_RULES]),
        checks_line(
            7,
            &report,
            &[validate::WITNESS_PROPERTIES, validate::ORDER_TWO_ROOTS],
        ),
        checks_line(
            8,
            &report,
            &[validate::FORM_CONSTRUCTION, validate::MARKING_INVARIANTS],
        ),
    ];
    for l in &lines {
        let tag = if l.pass { "PASS" } else { "FAIL" };
        println!("criterion {}: {tag}  {}", l.id, l.detail);
    }
    let passed = lines.iter().filter(|l| l.pass).count();
    println!(
        "acceptance: {passed}/{} criteria pass ({:.2}s)",
        lines.len(),
        start.elapsed().as_secs_f64()
    );
    // Criterion 1 is known to be unattainable; anything else failing is a regression.
    if lines.iter().all(|l| l.pass || l.id == 1) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
