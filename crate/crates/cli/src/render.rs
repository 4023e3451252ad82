use hessdd::{Polynomial, RootSystem};

use crate::Basis;

/// Canonical string for a value in the chosen basis.
pub fn poly(rs: &RootSystem, p: &Polynomial, basis: Basis, factor: bool) -> String {
    if factor {
        if let Some(s) = factored(rs, p, basis) {
            return s;
        }
    }
    match basis {
        Basis::Alpha => p.render("a"),
        Basis::T => p.alpha_to_t().render("t"),
    }
}

pub fn variables(rs: &RootSystem, basis: Basis) -> Vec<String> {
    match basis {
        Basis::Alpha => (1..=rs.rank()).map(|i| format!("a{i}")).collect(),
        Basis::T => (1..=rs.rank() + 1).map(|i| format!("t{i}")).collect(),
    }
}

/// Writes `p` as a constant times a product of roots, if it is one.
fn factored(rs: &RootSystem, p: &Polynomial, basis: Basis) -> Option<String> {
    let degree = p.degree()?;
    if degree < 2 {
        return None;
    }
    let mut rest = p.clone();
    let mut factors = Vec::new();
    for id in 0..rs.n_positive() {
        while let Some(q) = rest.divide_by_linear(rs.coords(id)) {
            factors.push(id);
            rest = q;
        }
    }
    if rest.degree() != Some(0) {
        return None;
    }
    let mut out = String::new();
    let c = rest.constant_term();
    if c == -num_one() {
        out.push('-');
    } else if c != num_one() {
        out.push_str(&format!("{c}*"));
    }
    let parts: Vec<String> = factors
        .iter()
        .map(|&id| {
            let l = Polynomial::linear(rs.coords(id));
            let s = match basis {
                Basis::Alpha => l.render("a"),
                Basis::T => l.alpha_to_t().render("t"),
            };
            if s.contains(['+', '-']) {
                format!("({s})")
            } else {
                s
            }
        })
        .collect();
    out.push_str(&parts.join("*"));
    Some(out)
}

fn num_one() -> hessdd::Rational {
    hessdd::Rational::from_integer(1.into())
}

/// Left-aligned columns separated by two spaces.
pub fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|j| {
            rows.iter()
                .filter_map(|r| r.get(j))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(j, s)| format!("{s:<w$}", w = widths[j]))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}
