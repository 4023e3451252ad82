//! Exhaustive checks of the combinatorial statements about inversions,
//! covers and the highest-root set.

use std::collections::BTreeSet;
use std::fmt;

use crate::rootsystem::{HessenbergSet, RootId};
use crate::weyl::{ElemId, WeylGroup};

/// Outcome of one named statement over a finite set of cases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub scope: String,
    pub cases: usize,
    pub failures: Vec<String>,
    /// Observations that do not affect the verdict.
    pub notes: Vec<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, scope: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            scope: scope.into(),
            cases: 0,
            failures: vec![],
            notes: vec![],
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Records one case; `fail` is called only when `ok` is false.
    pub fn case(&mut self, ok: bool, fail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(fail());
        }
    }

    pub fn absorb(&mut self, other: Check) {
        self.cases += other.cases;
        self.failures.extend(other.failures);
        self.notes.extend(other.notes);
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{verdict} {} [{}] {} cases",
            self.name, self.scope, self.cases
        )?;
        if !self.failures.is_empty() {
            write!(f, ", {} failures", self.failures.len())?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = (&str, &str)> {
        self.checks.iter().flat_map(|c| {
            c.failures
                .iter()
                .map(move |f| (c.name.as_str(), f.as_str()))
        })
    }
}

fn set(v: Vec<RootId>) -> BTreeSet<RootId> {
    v.into_iter().collect()
}

fn scope(g: &WeylGroup, h: Option<&HessenbergSet>) -> String {
    let t = g.root_system().cartan_type().to_string();
    match h {
        Some(h) => format!("{t}, h = {:?}", h.root_ids()),
        None => t,
    }
}

fn all_covers(g: &WeylGroup) -> impl Iterator<Item = (ElemId, ElemId, RootId)> + '_ {
    (0..g.order()).flat_map(move |w| g.covers(w).into_iter().map(move |(v, a)| (w, v, a)))
}

/// `N_v = {a} u (s_a N_w n Phi+) u (N_w n s_a Phi-)` for every cover.
pub fn cover_inversions(g: &WeylGroup) -> Check {
    let rs = g.root_system();
    let mut c = Check::new("inversions at a cover", scope(g, None));
    for (w, v, a) in all_covers(g) {
        let sa = g.reflection(a);
        let nw = g.inversions(w);
        let mut rhs = BTreeSet::from([a]);
        for &b in &nw {
            let image = g.act_root(sa, b);
            if rs.is_positive_id(image) {
                rhs.insert(image);
            } else {
                rhs.insert(b);
            }
        }
        let lhs = set(g.inversions(v));
        c.case(lhs == rhs, || {
            format!("{} -> {}: {lhs:?} vs {rhs:?}", g.name(w), g.name(v))
        });
    }
    c
}

/// How h-inversions move across a cover.
pub fn cover_h_inversions(g: &WeylGroup, h: &HessenbergSet) -> Check {
    let rs = g.root_system();
    let mut c = Check::new("h-inversions at a cover", scope(g, Some(h)));
    for (w, v, a) in all_covers(g) {
        let sa = g.reflection(a);
        let nw = set(g.inversions(w));
        let nw_h = set(g.h_inversions(w, h));
        let nv_h = set(g.h_inversions(v, h));
        for b in g.inversions(v) {
            let sb = g.act_root(sa, b);
            if nw.contains(&sb) {
                c.case(nv_h.contains(&b) == nw_h.contains(&sb), || {
                    format!(
                        "{} -> {}, root {}: part (1)",
                        g.name(w),
                        g.name(v),
                        rs.root(b)
                    )
                });
            }
            if nw.contains(&b) && !rs.is_positive_id(sb) && nv_h.contains(&b) {
                c.case(nw_h.contains(&b), || {
                    format!(
                        "{} -> {}, root {}: part (2)",
                        g.name(w),
                        g.name(v),
                        rs.root(b)
                    )
                });
            }
        }
    }
    c
}

/// Covers along a simple root: `N^h_v` is `s_a N^h_w`, plus `a` when `a` is
/// itself an h-inversion of `v`.
pub fn simple_cover_roots(g: &WeylGroup, h: &HessenbergSet) -> Check {
    let rs = g.root_system();
    let mut c = Check::new("simple cover roots", scope(g, Some(h)));
    for (w, v, a) in all_covers(g) {
        if a >= rs.rank() {
            continue;
        }
        let sa = g.reflection(a);
        let nv_h = set(g.h_inversions(v, h));
        let mut rhs: BTreeSet<RootId> = g
            .h_inversions(w, h)
            .into_iter()
            .map(|b| g.act_root(sa, b))
            .collect();
        if nv_h.contains(&a) {
            rhs.insert(a);
        }
        c.case(nv_h == rhs, || {
            format!("{} -> {}: {nv_h:?} vs {rhs:?}", g.name(w), g.name(v))
        });
    }
    c
}

/// `|N_v| - |Phi+ \ h| <= |N^h_v| <= |N^h_w| + 1` for every cover.
pub fn cover_length_bounds(g: &WeylGroup, h: &HessenbergSet) -> Check {
    let removed = g.root_system().n_positive() - h.len();
    let mut c = Check::new("h-length bounds at a cover", scope(g, Some(h)));
    for (w, v, _) in all_covers(g) {
        let nv = g.length(v);
        let nv_h = g.hessenberg_length(v, h);
        let nw_h = g.hessenberg_length(w, h);
        c.case(nv <= nv_h + removed && nv_h <= nw_h + 1, || {
            format!(
                "{} -> {}: |N_v| = {nv}, |N^h_v| = {nv_h}, |N^h_w| = {nw_h}",
                g.name(w),
                g.name(v)
            )
        });
    }
    c
}

/// For `v > w`: equal gamma-lengths iff `v` covers `w`, `N_w = N^gamma_w`,
/// and some inversion of `v` is sent to `-gamma` by `v^{-1}`.
pub fn equal_gamma_length_pairs(g: &WeylGroup) -> Check {
    let rs = g.root_system();
    let h = rs.highest_root_hessenberg();
    let neg_gamma = rs.negate_id(rs.highest_root_id());
    let bruhat = g.bruhat_order();
    let mut c = Check::new("equal gamma-length pairs", scope(g, None));
    for w in 0..g.order() {
        let covers: BTreeSet<ElemId> = g.covers(w).into_iter().map(|(v, _)| v).collect();
        let full_w = g.hessenberg_length(w, &h) == g.length(w);
        for v in bruhat.up_set(w).iter().filter(|&v| v != w) {
            let lhs = g.hessenberg_length(w, &h) == g.hessenberg_length(v, &h);
            let vinv = g.inverse(v);
            let has_beta = g
                .inversions(v)
                .iter()
                .any(|&b| g.act_root(vinv, b) == neg_gamma);
            let rhs = covers.contains(&v) && full_w && has_beta;
            c.case(lhs == rhs, || {
                format!(
                    "{} < {}: lengths equal {lhs}, conditions {rhs}",
                    g.name(w),
                    g.name(v)
                )
            });
        }
    }
    c
}

/// For fixed `w` and `b` in `N^gamma_w`, at most one `v > w` has equal
/// gamma-length, `b` in `N_v` and `v^{-1} b = -gamma`.
pub fn unique_gamma_cover(g: &WeylGroup) -> Check {
    let rs = g.root_system();
    let h = rs.highest_root_hessenberg();
    let neg_gamma = rs.negate_id(rs.highest_root_id());
    let bruhat = g.bruhat_order();
    let mut c = Check::new("uniqueness of the gamma cover", scope(g, None));
    for w in 0..g.order() {
        let lw = g.hessenberg_length(w, &h);
        for b in g.h_inversions(w, &h) {
            let hits: Vec<ElemId> = bruhat
                .up_set(w)
                .iter()
                .filter(|&v| v != w)
                .filter(|&v| g.hessenberg_length(v, &h) == lw)
                .filter(|&v| g.act_root(g.inverse(v), b) == neg_gamma)
                .collect();
            c.case(hits.len() <= 1, || {
                format!(
                    "{}, root {}: {} candidates",
                    g.name(w),
                    rs.root(b),
                    hits.len()
                )
            });
        }
    }
    c
}

/// Left multiplication by an ascent preserves covers and deleted edges.
pub fn diamond_lemma(g: &WeylGroup, h: &HessenbergSet) -> Check {
    let graph = g.hessenberg_graph(h);
    let bruhat = g.bruhat_order();
    let mut c = Check::new("diamond lemma", scope(g, Some(h)));
    for (w, v, _) in all_covers(g) {
        for i in 0..g.rank() {
            let siw = g.simple_left(i, w);
            if g.length(siw) != g.length(w) + 1 || siw == v {
                continue;
            }
            let siv = g.simple_left(i, v);
            let ok = bruhat.leq(v, siv)
                && siv != v
                && g.length(siv) == g.length(siw) + 1
                && graph.has_edge(w, v) == graph.has_edge(siw, siv);
            c.case(ok, || {
                format!("{} -> {}, i = {}", g.name(w), g.name(v), i + 1)
            });
        }
    }
    c
}

/// `v^{-1} b = -gamma` for at most one positive root `b`.
pub fn single_gamma_preimage(g: &WeylGroup) -> Check {
    let rs = g.root_system();
    let neg_gamma = rs.negate_id(rs.highest_root_id());
    let mut c = Check::new("one root sent to -gamma", scope(g, None));
    for v in 0..g.order() {
        let vinv = g.inverse(v);
        let n = (0..rs.n_positive())
            .filter(|&b| g.act_root(vinv, b) == neg_gamma)
            .count();
        c.case(n <= 1, || format!("{}: {n} roots", g.name(v)));
    }
    c
}

/// Every statement above, over the given Hessenberg sets.
pub fn order_properties(g: &WeylGroup, sets: &[HessenbergSet]) -> Vec<Check> {
    let mut per_h = vec![
        Check::new("h-inversions at a cover", scope(g, None)),
        Check::new("simple cover roots", scope(g, None)),
        Check::new("h-length bounds at a cover", scope(g, None)),
        Check::new("diamond lemma", scope(g, None)),
    ];
    for h in sets {
        per_h[0].absorb(cover_h_inversions(g, h));
        per_h[1].absorb(simple_cover_roots(g, h));
        per_h[2].absorb(cover_length_bounds(g, h));
        per_h[3].absorb(diamond_lemma(g, h));
    }
    for c in &mut per_h {
        c.scope = format!("{}, {} Hessenberg sets", c.scope, sets.len());
    }
    let mut out = vec![cover_inversions(g)];
    out.extend(per_h);
    out.extend([
        equal_gamma_length_pairs(g),
        unique_gamma_cover(g),
        single_gamma_preimage(g),
    ]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsystem::RootSystem;

    fn group(t: &str) -> WeylGroup {
        WeylGroup::new(RootSystem::new(t.parse().unwrap()).unwrap())
    }

    #[test]
    fn a2_all_ideals() {
        let g = group("A2");
        let sets = g.root_system().all_hessenberg_sets();
        for c in order_properties(&g, &sets) {
            assert!(c.passed(), "{c}: {:?}", c.failures);
            assert!(c.cases > 0, "{c}");
        }
    }

    #[test]
    fn a3_and_b2_inversions() {
        for t in ["A3", "B2"] {
            let c = cover_inversions(&group(t));
            assert!(c.passed(), "{:?}", c.failures);
        }
    }

    #[test]
    fn report_display() {
        let mut c = Check::new("x", "A2");
        c.case(true, String::new);
        c.case(false, || "bad".into());
        assert_eq!(c.to_string(), "FAIL x [A2] 2 cases, 1 failures");
        let mut r = Report::default();
        r.push(c);
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 1);
    }
}
