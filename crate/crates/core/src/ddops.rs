//! The highest-root divided difference operators and the family of flow-up
//! classes they generate.
//!
//! For `h = Phi+ \ {gamma}` and a simple index `i`:
//!
//! ```text
//! d_i P^w = s_i . P^w                                         if s_i w <. w (edge deleted)
//!         = (P^w - s_i . P^w + c (P^v - P^{s_i v})) / a_i     if s_i w < w
//!         = 0                                                 if s_i w > w
//! ```
//!
//! where `v = s_a w` is the gamma-partner cover of `w` (if any) and `c` is the
//! Cartan integer `2(a, a_i) / (a, a)`. The family is built top-down from the
//! longest element, and every descent of every element produces a candidate
//! which must agree with all other candidates for the same target.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gkm::{self, dot_action, expand_in_basis, CohomologyClass};
use crate::poly::{act, Polynomial, Rational};
use crate::rootsystem::HessenbergSet;
use crate::weyl::{ElemId, LabeledGraph, WeylGroup};

#[derive(Debug, Clone)]
pub struct FlowUpFamily {
    h: HessenbergSet,
    classes: Vec<CohomologyClass>,
    stats: BuildStats,
}

/// Bookkeeping from [`build_family`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuildStats {
    /// Divided differences evaluated.
    pub candidates: usize,
    /// Elements reached from more than one descent.
    pub multi_descent_elements: usize,
    /// Pairwise candidate comparisons, all of which agreed.
    pub comparisons: usize,
}

impl FlowUpFamily {
    pub fn hessenberg(&self) -> &HessenbergSet {
        &self.h
    }

    pub fn classes(&self) -> &[CohomologyClass] {
        &self.classes
    }

    pub fn class(&self, w: ElemId) -> &CohomologyClass {
        &self.classes[w]
    }

    pub fn stats(&self) -> BuildStats {
        self.stats
    }

    /// Flow-up defects of every member, keyed by element.
    pub fn defects(&self, g: &WeylGroup) -> Vec<(ElemId, Vec<String>)> {
        let graph = g.hessenberg_graph(&self.h);
        (0..g.order())
            .into_par_iter()
            .map(|w| {
                (
                    w,
                    gkm::flow_up_defects(g, &self.h, &graph, &self.classes[w], w),
                )
            })
            .filter(|(_, d)| !d.is_empty())
            .collect()
    }
}

/// Value at `w_0` is the product of the roots in `h`; zero elsewhere.
pub fn base_class(g: &WeylGroup, h: &HessenbergSet) -> CohomologyClass {
    let w0 = g.longest();
    CohomologyClass::point(g, w0, gkm::root_product(g, &h.root_ids()))
}

/// `s_i w < w` and `w^{-1} a_i = -gamma`.
pub fn is_deleted_descent(g: &WeylGroup, w: ElemId, i: usize) -> bool {
    let rs = g.root_system();
    let image = g.act_root(g.inverse(w), rs.simple_root_id(i));
    image == rs.negate_id(rs.highest_root_id())
}

/// `s_i w > w` and the edge `w -> s_i w` is deleted.
pub fn is_deleted_ascent(g: &WeylGroup, w: ElemId, i: usize) -> bool {
    let u = g.simple_left(i, w);
    g.length(u) > g.length(w) && is_deleted_descent(g, u, i)
}

/// Evaluates the divided difference formula on the family member at `w`.
///
/// `classes` must hold `P^w` and, when the gamma-partner `v` exists, `P^v` and
/// `P^{s_i v}`.
pub fn divided_difference(
    g: &WeylGroup,
    h: &HessenbergSet,
    i: usize,
    classes: &[Option<CohomologyClass>],
    w: ElemId,
) -> Result<CohomologyClass> {
    let fetch = |x: ElemId| {
        classes[x]
            .as_ref()
            .ok_or_else(|| Error::MissingPrerequisite(g.name(x)))
    };
    let si = g.simple(i);
    let u = g.simple_left(i, w);
    if g.length(u) > g.length(w) {
        return Ok(CohomologyClass::zero(g));
    }
    let pw = fetch(w)?;
    if is_deleted_descent(g, w, i) {
        return Ok(dot_action(g, si, pw));
    }

    let rs = g.root_system();
    let partner = match g.find_gamma_partner(h, w, i)? {
        Some((v, a)) => {
            let c = rs.cartan_integer_ids(a, rs.simple_root_id(i));
            let pv = fetch(v)?;
            let psv = fetch(g.simple_left(i, v))?;
            Some((c, pv, psv))
        }
        None => None,
    };

    let simple = rs.coords(rs.simple_root_id(i)).to_vec();
    let values = (0..g.order())
        .map(|x| {
            // P^w(x) - s_i(P^w(s_i x)) + c (P^v(x) - P^{s_i v}(x))
            let mut num = pw.value(x) - &act(g, si, pw.value(g.simple_left(i, x)));
            if let Some((c, pv, psv)) = &partner {
                let diff = pv.value(x) - psv.value(x);
                num.add_scaled(&Rational::from_integer((*c).into()), &diff);
            }
            num.divide_by_linear(&simple)
                .ok_or_else(|| Error::InexactDivision {
                    element: g.name(w),
                    index: i + 1,
                    vertex: g.name(x),
                    value: num.to_string(),
                })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CohomologyClass::from_values(values))
}

/// Builds `{P^w}` top-down from [`base_class`], cross-checking every descent.
pub fn build_family(g: &WeylGroup) -> Result<FlowUpFamily> {
    let rs = g.root_system();
    if rs.rank() < 2 {
        return Err(Error::UnsupportedType(format!(
            "{} (the highest-root set is empty)",
            rs.cartan_type()
        )));
    }
    let h = rs.highest_root_hessenberg();
    let n = g.order();
    let mut classes: Vec<Option<CohomologyClass>> = vec![None; n];
    classes[g.longest()] = Some(base_class(g, &h));
    let mut stats = BuildStats::default();

    let mut by_length: Vec<Vec<ElemId>> = vec![vec![]; g.max_length() + 1];
    for w in 0..n {
        by_length[g.length(w)].push(w);
    }

    for level in (1..=g.max_length()).rev() {
        let jobs: Vec<(ElemId, usize)> = by_length[level]
            .iter()
            .flat_map(|&w| (0..g.rank()).map(move |i| (w, i)))
            .filter(|&(w, i)| g.length(g.simple_left(i, w)) < level)
            .collect();
        let results: Vec<(ElemId, usize, CohomologyClass)> = jobs
            .par_iter()
            .map(|&(w, i)| {
                divided_difference(g, &h, i, &classes, w).map(|c| (g.simple_left(i, w), i, c))
            })
            .collect::<Result<_>>()?;
        stats.candidates += results.len();

        let mut first: Vec<Option<(usize, CohomologyClass)>> = vec![None; n];
        let mut hits = vec![0usize; n];
        for (target, i, c) in results {
            hits[target] += 1;
            match &first[target] {
                None => first[target] = Some((i, c)),
                Some((j, existing)) => {
                    stats.comparisons += 1;
                    if let Some(x) = (0..n).find(|&x| existing.value(x) != c.value(x)) {
                        return Err(Error::UniquenessViolation {
                            element: g.name(target),
                            first_index: j + 1,
                            second_index: i + 1,
                            vertex: g.name(x),
                            first_value: existing.value(x).to_string(),
                            second_value: c.value(x).to_string(),
                        });
                    }
                }
            }
        }
        stats.multi_descent_elements += hits.iter().filter(|&&k| k > 1).count();
        for (target, slot) in first.into_iter().enumerate() {
            if let Some((_, c)) = slot {
                classes[target] = Some(c);
            }
        }
    }

    let classes = classes
        .into_iter()
        .enumerate()
        .map(|(w, c)| c.ok_or_else(|| Error::MissingPrerequisite(g.name(w))))
        .collect::<Result<Vec<_>>>()?;
    Ok(FlowUpFamily { h, classes, stats })
}

/// `d_i` on every family member, evaluated literally from the formula, and
/// extended to arbitrary classes by linearity over the flow-up basis.
#[derive(Debug, Clone)]
pub struct DividedDifferences {
    /// `table[i][x] = d_i P^x`.
    table: Vec<Vec<CohomologyClass>>,
    /// `table[i][x]` expanded in the family, as sparse `(y, f_y)` pairs.
    coords: Vec<Vec<Vec<(ElemId, Polynomial)>>>,
}

/// A class written in the family basis: `sum f_y P^y`, zero terms omitted.
pub type Coordinates = BTreeMap<ElemId, Polynomial>;

impl DividedDifferences {
    pub fn new(g: &WeylGroup, fam: &FlowUpFamily) -> Result<Self> {
        let known: Vec<Option<CohomologyClass>> = fam.classes.iter().cloned().map(Some).collect();
        let table = (0..g.rank())
            .map(|i| {
                (0..g.order())
                    .into_par_iter()
                    .map(|x| divided_difference(g, &fam.h, i, &known, x))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let coords = table
            .iter()
            .map(|row| {
                row.par_iter()
                    .map(|c| Ok(sparse(expand_in_basis(g, &fam.h, c, &fam.classes)?)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DividedDifferences { table, coords })
    }

    /// Coordinates of `c` in the family.
    pub fn coordinates(
        &self,
        g: &WeylGroup,
        fam: &FlowUpFamily,
        c: &CohomologyClass,
    ) -> Result<Coordinates> {
        Ok(sparse(expand_in_basis(g, &fam.h, c, &fam.classes)?)
            .into_iter()
            .collect())
    }

    /// `d_i` on coordinates, using linearity over the polynomial ring.
    pub fn apply_coordinates(&self, i: usize, c: &Coordinates) -> Coordinates {
        let mut out = Coordinates::new();
        for (x, f) in c {
            for (y, e) in &self.coords[i][*x] {
                let term = f * e;
                let slot = out.entry(*y).or_insert_with(|| Polynomial::zero(f.nvars()));
                *slot += &term;
            }
        }
        out.retain(|_, f| !f.is_zero());
        out
    }

    /// As [`Self::apply_word`], on coordinates.
    pub fn apply_word_coordinates(&self, word: &[usize], c: &Coordinates) -> Coordinates {
        word.iter()
            .rev()
            .fold(c.clone(), |acc, &i| self.apply_coordinates(i, &acc))
    }

    pub fn on_basis(&self, i: usize, x: ElemId) -> &CohomologyClass {
        &self.table[i][x]
    }

    /// `d_i c`, through the expansion of `c` in the family.
    pub fn apply(
        &self,
        g: &WeylGroup,
        fam: &FlowUpFamily,
        i: usize,
        c: &CohomologyClass,
    ) -> Result<CohomologyClass> {
        let coeffs = expand_in_basis(g, &fam.h, c, &fam.classes)?;
        Ok(gkm::combine(g, &coeffs, &self.table[i]))
    }

    /// `d_{i_1} ( ... d_{i_n}(c))` for `word = [i_1, ..., i_n]`.
    ///
    /// Non-reduced words are evaluated the same way; no particular result is
    /// guaranteed for them.
    pub fn apply_word(
        &self,
        g: &WeylGroup,
        fam: &FlowUpFamily,
        word: &[usize],
        c: &CohomologyClass,
    ) -> Result<CohomologyClass> {
        let out = self.apply_word_coordinates(word, &self.coordinates(g, fam, c)?);
        let mut coeffs = vec![Polynomial::zero(g.rank()); g.order()];
        for (y, f) in out {
            coeffs[y] = f;
        }
        Ok(gkm::combine(g, &coeffs, &fam.classes))
    }
}

fn sparse(coeffs: Vec<Polynomial>) -> Vec<(ElemId, Polynomial)> {
    coeffs
        .into_iter()
        .enumerate()
        .filter(|(_, f)| !f.is_zero())
        .collect()
}

/// Which branch of the simple-reflection action applies to `(i, w)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ActionCase {
    DeletedDescent,
    DeletedAscent,
    Ascent,
    Descent,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionCheck {
    pub case: ActionCase,
    pub passed: bool,
    /// In the deleted cases, whether `s_i . P^w` also equals `P^{s_i w}`.
    pub equals_family_member: Option<bool>,
    pub detail: String,
}

pub fn action_case(g: &WeylGroup, w: ElemId, i: usize) -> ActionCase {
    let u = g.simple_left(i, w);
    match (
        g.length(u) < g.length(w),
        is_deleted_descent(g, w, i),
        is_deleted_ascent(g, w, i),
    ) {
        (true, true, _) => ActionCase::DeletedDescent,
        (true, false, _) => ActionCase::Descent,
        (false, _, true) => ActionCase::DeletedAscent,
        (false, _, false) => ActionCase::Ascent,
    }
}

/// Checks the formula for `s_i . P^w` in terms of family members.
pub fn verify_action_theorem(
    g: &WeylGroup,
    fam: &FlowUpFamily,
    graph: &LabeledGraph,
    i: usize,
    w: ElemId,
) -> Result<ActionCheck> {
    let si = g.simple(i);
    let u = g.simple_left(i, w);
    let acted = dot_action(g, si, &fam.classes[w]);
    let case = action_case(g, w, i);
    let check = match case {
        ActionCase::DeletedDescent | ActionCase::DeletedAscent => {
            let defects = gkm::flow_up_defects(g, &fam.h, graph, &acted, u);
            ActionCheck {
                case,
                passed: defects.is_empty(),
                equals_family_member: Some(acted == fam.classes[u]),
                detail: defects.join("; "),
            }
        }
        ActionCase::Ascent => {
            let passed = acted == fam.classes[w];
            ActionCheck {
                case,
                passed,
                equals_family_member: None,
                detail: if passed {
                    String::new()
                } else {
                    "s_i . P^w differs from P^w".into()
                },
            }
        }
        ActionCase::Descent => {
            let rs = g.root_system();
            let mut expected = fam.classes[w]
                .sub(&fam.classes[u].scale(&Polynomial::linear(rs.coords(rs.simple_root_id(i)))));
            if let Some((v, a)) = g.find_gamma_partner(&fam.h, w, i)? {
                let c = rs.cartan_integer_ids(a, rs.simple_root_id(i));
                let diff = fam.classes[v].sub(&fam.classes[g.simple_left(i, v)]);
                expected = expected.add(&diff.scale(&Polynomial::from_int(g.rank(), c)));
            }
            let passed = acted == expected;
            ActionCheck {
                case,
                passed,
                equals_family_member: None,
                detail: if passed {
                    String::new()
                } else {
                    "s_i . P^w differs from the descent formula".into()
                },
            }
        }
    };
    Ok(check)
}

/// Closed-form values of `P^w` at the covers of `w` for the highest-root
/// family. Returns one message per mismatching cover.
pub fn verify_values_at_covers(g: &WeylGroup, fam: &FlowUpFamily, w: ElemId) -> Vec<String> {
    let rs = g.root_system();
    let h = &fam.h;
    let nw_gamma = g.h_inversions(w, h);
    let mut failures = Vec::new();
    for (v, a) in g.covers(w) {
        let nv_gamma = g.h_inversions(v, h);
        let actual = fam.classes[w].value(v);
        let expected = if nv_gamma.contains(&a) {
            // The twist only exists when the gamma-lengths agree.
            let mu: Vec<usize> = if nv_gamma.len() == nw_gamma.len() {
                let nv = g.inversions(v);
                nw_gamma
                    .iter()
                    .copied()
                    .filter(|b| nv.contains(b) && !nv_gamma.contains(b))
                    .collect()
            } else {
                vec![]
            };
            let twist = match mu.as_slice() {
                [] => Polynomial::one(g.rank()),
                [m] => Polynomial::linear(rs.coords(g.act_root(g.reflection(a), *m))),
                _ => {
                    failures.push(format!(
                        "{} -> {}: more than one twist root",
                        g.name(w),
                        g.name(v)
                    ));
                    continue;
                }
            };
            let rest: Vec<usize> = nv_gamma.iter().copied().filter(|&b| b != a).collect();
            &twist * &gkm::root_product(g, &rest)
        } else {
            Polynomial::zero(g.rank())
        };
        if *actual != expected {
            failures.push(format!(
                "P^{}({}) = {}, expected {}",
                g.name(w),
                g.name(v),
                actual,
                expected
            ));
        }
    }
    failures
}

/// Values of an arbitrary flow-up class `p` at `w` on the covers of `w`, for
/// any Hessenberg set. Every case whose hypothesis holds is checked.
pub fn verify_cover_cases(
    g: &WeylGroup,
    h: &HessenbergSet,
    p: &CohomologyClass,
    w: ElemId,
) -> Vec<String> {
    let rs = g.root_system();
    let nw_h = g.h_inversions(w, h);
    let mut failures = Vec::new();
    for (v, a) in g.covers(w) {
        let value = p.value(v);
        let label = format!("{} -> {}", g.name(w), g.name(v));
        let edge_kept = h.contains_negated(rs, g.act_root(g.inverse(v), a));
        if !edge_kept {
            if !value.is_zero() {
                failures.push(format!("{label}: deleted edge but value {value}"));
            }
            continue;
        }
        let nv_h = g.h_inversions(v, h);
        let rest: Vec<usize> = nv_h.iter().copied().filter(|&b| b != a).collect();
        let product = gkm::root_product(g, &rest);
        let is_simple = a < rs.rank();
        if is_simple && nv_h.contains(&a) {
            let expected = act(g, g.reflection(a), p.value(w));
            if *value != expected {
                failures.push(format!(
                    "{label}: simple cover gives {value}, expected {expected}"
                ));
            }
        }
        if nv_h.len() == nw_h.len() + 1 {
            if *value != product {
                failures.push(format!("{label}: value {value}, expected {product}"));
            }
        } else if nv_h.len() <= nw_h.len() {
            let Some(mut f) = divide_by_roots(g, value, &rest) else {
                failures.push(format!(
                    "{label}: {value} not divisible by the product {product}"
                ));
                continue;
            };
            let nv = g.inversions(v);
            let mu: Vec<usize> = nw_h
                .iter()
                .copied()
                .filter(|b| nv.contains(b) && !nv_h.contains(b))
                .collect();
            let mu_product = gkm::root_product(g, &mu);
            let degree_ok = f.is_zero() || f.degree() == Some(nw_h.len() - rest.len());
            f -= &mu_product;
            if !degree_ok || !f.in_ideal(rs.coords(a)) {
                failures.push(format!(
                    "{label}: cofactor is not congruent to {mu_product} modulo {}",
                    rs.root(a)
                ));
            }
        } else {
            failures.push(format!("{label}: h-length grew by more than one"));
        }
    }
    failures
}

fn divide_by_roots(g: &WeylGroup, p: &Polynomial, roots: &[usize]) -> Option<Polynomial> {
    let rs = g.root_system();
    roots
        .iter()
        .try_fold(p.clone(), |acc, &r| acc.divide_by_linear(rs.coords(r)))
}


#[cfg(test)]
mod table {
    use super::*;
    use crate::rootsystem::RootSystem;

    #[test]
    fn a2_family_matches_known_values() {
        let g = WeylGroup::new(RootSystem::new("A2".parse().unwrap()).unwrap());
        let fam = build_family(&g).unwrap();
        assert_eq!(fam.classes(), crate::gkm::tests::a2_family(&g).as_slice());
        assert_eq!(fam.stats().multi_descent_elements, 1);
    }
}
