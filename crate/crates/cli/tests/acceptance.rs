//! One PASS/FAIL line per acceptance criterion.
//!
//! Run with `cargo test --test acceptance -- --nocapture`. Set
//! `HESSDD_QUICK=1` to skip the D4 character computation.

use std::process::Command;
use std::time::{Duration, Instant};

use hessdd::gkm::combine;
use hessdd::repchar::confirm;
use hessdd::{
    build_family, check_gkm, class_degree, expand_in_basis, is_flow_up, suite, Context, Error,
    FlowUpFamily, Options, Polynomial, RootSystem, Suite, WeylGroup,
};

struct Outcome {
    passed: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        passed: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        passed: false,
        detail: detail.into(),
    }
}

fn group(t: &str) -> WeylGroup {
    WeylGroup::new(RootSystem::new(t.parse().unwrap()).unwrap())
}

fn family(t: &str) -> (WeylGroup, FlowUpFamily) {
    let g = group(t);
    let fam = build_family(&g).unwrap();
    (g, fam)
}

const TABLE: [[&str; 6]; 6] = [
    ["1", "1", "1", "1", "1", "1"],
    ["0", "t1-t2", "0", "t3-t2", "0", "0"],
    ["0", "0", "t2-t3", "0", "t2-t1", "0"],
    ["0", "0", "0", "t1-t3", "0", "t1-t2"],
    ["0", "0", "0", "0", "t1-t3", "t2-t3"],
    ["0", "0", "0", "0", "0", "(t1-t2)*(t2-t3)"],
];

fn table_reproduction() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_hessdd"))
        .args(["classes", "--type", "A2", "--basis", "t"])
        .output()
        .unwrap();
    let elapsed = start.elapsed();
    if !out.status.success() {
        return fail("classes exited with an error");
    }
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<Vec<&str>> = text
        .lines()
        .skip(1)
        .map(|l| l.split_whitespace().skip(1).collect())
        .collect();
    let mut matched = 0;
    let mut bad = Vec::new();
    for (i, want_row) in TABLE.iter().enumerate() {
        for (j, want) in want_row.iter().enumerate() {
            let got = rows.get(i).and_then(|r| r.get(j)).copied().unwrap_or("?");
            let same = match (
                Polynomial::parse(got, 3, 't'),
                Polynomial::parse(want, 3, 't'),
            ) {
                (Ok(a), Ok(b)) => a == b,
                _ => false,
            };
            if same {
                matched += 1;
            } else {
                bad.push(format!("row {i} col {j}: {got} vs {want}"));
            }
        }
    }
    let detail = format!("{matched}/36 entries, {elapsed:.2?}");
    if bad.is_empty() && elapsed < Duration::from_secs(1) {
        pass(detail)
    } else {
        fail(format!("{detail}; {bad:?}"))
    }
}

fn gkm_membership() -> Outcome {
    let mut details = Vec::new();
    let mut ok = true;
    for t in ["A2", "A3", "A4"] {
        let start = Instant::now();
        let (g, fam) = family(t);
        let violations: usize = fam
            .classes()
            .iter()
            .map(|c| check_gkm(&g, fam.hessenberg(), c).len())
            .sum();
        let elapsed = start.elapsed();
        ok &= violations == 0 && (t != "A4" || elapsed < Duration::from_secs(60));
        details.push(format!(
            "{t}: {} classes, {violations} violations, {elapsed:.2?}",
            g.order()
        ));
    }
    Outcome {
        passed: ok,
        detail: details.join("; "),
    }
}

fn flow_up_axioms() -> Outcome {
    let mut details = Vec::new();
    let mut ok = true;
    for t in ["A2", "A3", "A4"] {
        let (g, fam) = family(t);
        let h = fam.hessenberg();
        let bad = (0..g.order())
            .filter(|&w| {
                let p = fam.class(w);
                !is_flow_up(&g, h, p, w) || class_degree(p) != Some(g.hessenberg_length(w, h))
            })
            .count();
        ok &= bad == 0;
        details.push(format!("{t}: {bad} failing of {}", g.order()));
    }
    Outcome {
        passed: ok,
        detail: details.join("; "),
    }
}

fn run_suite(t: &str, s: Suite) -> Result<hessdd::Report, Error> {
    let mut ctx = Context::new(RootSystem::new(t.parse().unwrap()).unwrap());
    suite::run(&mut ctx, s, &Options::default())
}

fn braid_independence() -> Outcome {
    let mut details = Vec::new();
    let mut ok = true;
    for t in ["A2", "A3", "B2"] {
        match run_suite(t, Suite::Braid) {
            Ok(r) => {
                let c = &r.checks[0];
                ok &= r.passed();
                details.push(format!(
                    "{t}: {} cases, {} failures",
                    c.cases,
                    c.failures.len()
                ));
            }
            Err(e) => {
                ok = false;
                details.push(format!("{t}: {e}"));
            }
        }
    }
    Outcome {
        passed: ok,
        detail: details.join("; "),
    }
}

fn uniqueness() -> Outcome {
    let mut details = Vec::new();
    let mut ok = true;
    for t in ["A2", "A3", "A4"] {
        match build_family(&group(t)) {
            Ok(fam) => {
                let s = fam.stats();
                details.push(format!(
                    "{t}: {} multi-descent elements, {} comparisons, 0 violations",
                    s.multi_descent_elements, s.comparisons
                ));
            }
            Err(e) => {
                ok = false;
                details.push(format!("{t}: {e}"));
            }
        }
    }
    Outcome {
        passed: ok,
        detail: details.join("; "),
    }
}

fn proposition_suite() -> Outcome {
    let start = Instant::now();
    let mut checks = 0;
    let mut failures = Vec::new();
    for t in ["A2", "A3"] {
        for s in [Suite::Props, Suite::Action] {
            match run_suite(t, s) {
                Ok(r) => {
                    checks += r.checks.len();
                    failures.extend(r.failures().map(|(n, f)| format!("{t} {n}: {f}")));
                }
                Err(e) => failures.push(format!("{t} {s}: {e}")),
            }
        }
    }
    let elapsed = start.elapsed();
    let detail = format!(
        "{checks} checks, {} failures, {elapsed:.2?}",
        failures.len()
    );
    if failures.is_empty() && elapsed < Duration::from_secs(120) {
        pass(detail)
    } else {
        fail(format!(
            "{detail}; {:?}",
            &failures[..failures.len().min(5)]
        ))
    }
}

fn multiplicities(quick: bool) -> Outcome {
    let mut details = Vec::new();
    let mut ok = true;
    let mut cases = vec![("A2", (1, 4)), ("A3", (2, 18))];
    if !quick {
        cases.push(("D4", (8, 160)));
    }
    for (t, want) in cases {
        let start = Instant::now();
        let (g, fam) = family(t);
        match confirm(&g, &fam) {
            Ok(r) => {
                let elapsed = start.elapsed();
                ok &=
                    r.observed == want && r.expected == want && elapsed < Duration::from_secs(600);
                details.push(format!("{t}: {:?}, {elapsed:.2?}", r.observed));
            }
            Err(e) => {
                ok = false;
                details.push(format!("{t}: {e}"));
            }
        }
    }
    if quick {
        details.push("D4 skipped".into());
    }
    Outcome {
        passed: ok,
        detail: details.join("; "),
    }
}

fn structure_constants() -> Outcome {
    let (g, fam) = family("A2");
    let p = fam.class(g.simple(0));
    let square = p.mul(p);
    let coeffs = match expand_in_basis(&g, fam.hessenberg(), &square, fam.classes()) {
        Ok(c) => c,
        Err(e) => return fail(e.to_string()),
    };
    let a = |s: &str| Polynomial::parse(s, 2, 'a').unwrap();
    let expected = |w: &str| match w {
        "1" => a("a1"),
        "1.2" => a("a2"),
        "1.2.1" => a("-1"),
        _ => a("0"),
    };
    let coefficients_ok = (0..g.order()).all(|x| coeffs[x] == expected(&g.name(x)));
    let recombines = combine(&g, &coeffs, fam.classes()) == square;
    let shown: Vec<String> = (0..g.order())
        .filter(|&x| !coeffs[x].is_zero())
        .map(|x| format!("{}: {}", g.name(x), coeffs[x]))
        .collect();
    let detail = format!(
        "{{{}}}, recombination exact: {recombines}",
        shown.join(", ")
    );
    Outcome {
        passed: coefficients_ok && recombines,
        detail,
    }
}

fn non_simply_laced() -> Outcome {
    let mut details = Vec::new();
    let mut ok = true;
    for t in ["B2", "G2"] {
        let g = group(t);
        match build_family(&g) {
            Ok(fam) => {
                let h = fam.hessenberg();
                let flow = (0..g.order())
                    .filter(|&w| is_flow_up(&g, h, fam.class(w), w))
                    .count();
                ok &= flow == g.order();
                details.push(format!(
                    "{t}: completed, flow-up axioms pass for {flow}/{} classes",
                    g.order()
                ));
            }
            // either outcome is acceptable as long as it is reported
            Err(e @ Error::InexactDivision { .. }) => details.push(format!("{t}: {e}")),
            Err(e) => {
                ok = false;
                details.push(format!("{t}: {e}"));
            }
        }
    }
    Outcome {
        passed: ok,
        detail: details.join("; "),
    }
}

#[test]
fn acceptance() {
    let quick = std::env::var("HESSDD_QUICK").is_ok_and(|v| v == "1");
    let criteria: [(&str, &dyn Fn() -> Outcome); 9] = [
        ("A2 family in t-basis", &table_reproduction),
        ("GKM membership", &gkm_membership),
        ("flow-up axioms", &flow_up_axioms),
        ("braid independence", &braid_independence),
        ("uniqueness", &uniqueness),
        ("proposition suite", &proposition_suite),
        ("representation multiplicities", &|| multiplicities(quick)),
        ("structure constants", &structure_constants),
        ("non-simply-laced run", &non_simply_laced),
    ];
    let mut failed = Vec::new();
    for (n, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = f();
        let status = if o.passed { "PASS" } else { "FAIL" };
        println!(
            "{status} {} {name} ({:.2?}): {}",
            n + 1,
            start.elapsed(),
            o.detail
        );
        if !o.passed {
            failed.push(n + 1);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
