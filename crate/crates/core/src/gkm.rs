//! Elements of the GKM ring of a Hessenberg set: polynomial assignments on the
//! Weyl group whose differences across each edge of the Hessenberg graph are
//! divisible by the edge root.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{act, Grading, Polynomial, Rational};
use crate::rootsystem::HessenbergSet;
use crate::weyl::{Edge, ElemId, LabeledGraph, WeylGroup};

/// A total assignment `W -> Q[a1..ak]`, indexed by element id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyClass {
    values: Vec<Polynomial>,
}

impl CohomologyClass {
    pub fn zero(g: &WeylGroup) -> Self {
        CohomologyClass {
            values: vec![Polynomial::zero(g.rank()); g.order()],
        }
    }

    pub fn constant(g: &WeylGroup, c: i64) -> Self {
        CohomologyClass {
            values: vec![Polynomial::from_int(g.rank(), c); g.order()],
        }
    }

    pub fn from_values(values: Vec<Polynomial>) -> Self {
        CohomologyClass { values }
    }

    /// The class with value `p` at `x` and zero elsewhere.
    pub fn point(g: &WeylGroup, x: ElemId, p: Polynomial) -> Self {
        let mut c = Self::zero(g);
        c.values[x] = p;
        c
    }

    pub fn value(&self, w: ElemId) -> &Polynomial {
        &self.values[w]
    }

    pub fn values(&self) -> &[Polynomial] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Polynomial> {
        self.values
    }

    pub fn set(&mut self, w: ElemId, p: Polynomial) {
        self.values[w] = p;
    }

    pub fn support(&self) -> Vec<ElemId> {
        (0..self.values.len())
            .filter(|&w| !self.values[w].is_zero())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Polynomial::is_zero)
    }

    pub fn add(&self, other: &CohomologyClass) -> CohomologyClass {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &CohomologyClass) -> CohomologyClass {
        self.zip_with(other, |a, b| a - b)
    }

    /// Pointwise product (the ring structure).
    pub fn mul(&self, other: &CohomologyClass) -> CohomologyClass {
        self.zip_with(other, |a, b| a * b)
    }

    /// `f * self` for a polynomial `f` (the module structure).
    pub fn scale(&self, f: &Polynomial) -> CohomologyClass {
        CohomologyClass {
            values: self.values.iter().map(|v| f * v).collect(),
        }
    }

    pub fn scale_rational(&self, c: &Rational) -> CohomologyClass {
        CohomologyClass {
            values: self.values.iter().map(|v| v.scale(c)).collect(),
        }
    }

    fn zip_with(
        &self,
        other: &CohomologyClass,
        f: impl Fn(&Polynomial, &Polynomial) -> Polynomial,
    ) -> CohomologyClass {
        assert_eq!(self.values.len(), other.values.len());
        CohomologyClass {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    /// Common grading of all nonzero values.
    pub fn grading(&self) -> Grading {
        let mut out = Grading::Zero;
        for v in &self.values {
            match (out, v.grading()) {
                (_, Grading::Zero) => {}
                (_, Grading::Inhomogeneous) => return Grading::Inhomogeneous,
                (Grading::Zero, g) => out = g,
                (Grading::Homogeneous(a), Grading::Homogeneous(b)) if a != b => {
                    return Grading::Inhomogeneous
                }
                _ => {}
            }
        }
        out
    }
}

/// Common total degree of the nonzero values, if there is one.
pub fn class_degree(c: &CohomologyClass) -> Option<usize> {
    match c.grading() {
        Grading::Homogeneous(d) => Some(d),
        _ => None,
    }
}

/// A failed GKM condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub edge: Edge,
    /// `c(target) - c(source)`.
    pub difference: Polynomial,
}

pub fn check_gkm(g: &WeylGroup, h: &HessenbergSet, c: &CohomologyClass) -> Vec<Violation> {
    check_gkm_on(g, &g.hessenberg_graph(h), c)
}

/// GKM conditions over a prebuilt Hessenberg graph. Each undirected edge is
/// checked once.
pub fn check_gkm_on(g: &WeylGroup, graph: &LabeledGraph, c: &CohomologyClass) -> Vec<Violation> {
    let rs = g.root_system();
    graph
        .edges()
        .iter()
        .filter_map(|e| {
            let (a, b) = (c.value(e.target), c.value(e.source));
            if a == b {
                return None;
            }
            let difference = a - b;
            (!difference.in_ideal(rs.coords(e.root))).then_some(Violation {
                edge: *e,
                difference,
            })
        })
        .collect()
}

/// `(w . c)(u) = w(c(w^{-1} u))`.
pub fn dot_action(g: &WeylGroup, w: ElemId, c: &CohomologyClass) -> CohomologyClass {
    let inv = g.inverse(w);
    CohomologyClass {
        values: (0..g.order())
            .map(|u| act(g, w, c.value(g.mul(inv, u))))
            .collect(),
    }
}

/// Product of the linear forms of the given roots.
pub fn root_product(g: &WeylGroup, roots: &[usize]) -> Polynomial {
    let rs = g.root_system();
    roots.iter().fold(Polynomial::one(g.rank()), |acc, &r| {
        &acc * &Polynomial::linear(rs.coords(r))
    })
}

/// Reasons a class fails to be a flow-up class at `x`; empty when it is one.
pub fn flow_up_defects(
    g: &WeylGroup,
    h: &HessenbergSet,
    graph: &LabeledGraph,
    c: &CohomologyClass,
    x: ElemId,
) -> Vec<String> {
    let mut defects = Vec::new();
    let inv = g.h_inversions(x, h);
    match c.grading() {
        Grading::Homogeneous(d) if d == inv.len() => {}
        other => defects.push(format!("grading {other:?}, expected degree {}", inv.len())),
    }
    let expected = root_product(g, &inv);
    if *c.value(x) != expected {
        defects.push(format!(
            "value at {} is {}, expected {}",
            g.name(x),
            c.value(x),
            expected
        ));
    }
    let up = graph.flow_up(x);
    for y in c.support() {
        if !up.contains(y) {
            defects.push(format!("nonzero at {} outside the flow-up", g.name(y)));
        }
    }
    for v in check_gkm_on(g, graph, c) {
        defects.push(format!(
            "GKM condition fails on {} -> {}: {}",
            g.name(v.edge.source),
            g.name(v.edge.target),
            v.difference
        ));
    }
    defects
}

pub fn is_flow_up(g: &WeylGroup, h: &HessenbergSet, c: &CohomologyClass, x: ElemId) -> bool {
    flow_up_defects(g, h, &g.hessenberg_graph(h), c, x).is_empty()
}

/// Coefficients `f_x` with `target = sum_x f_x basis[x]`, found by triangular
/// elimination in canonical (length-ascending) order.
///
/// `basis[x]` must be a flow-up class at `x` for `h`.
pub fn expand_in_basis(
    g: &WeylGroup,
    h: &HessenbergSet,
    target: &CohomologyClass,
    basis: &[CohomologyClass],
) -> Result<Vec<Polynomial>> {
    let order: Vec<ElemId> = (0..g.order()).collect();
    expand_in_basis_ordered(g, h, target, basis, &order)
}

/// As [`expand_in_basis`] with an explicit processing order, which must be a
/// linear extension of the flow-up order of `h`.
pub fn expand_in_basis_ordered(
    g: &WeylGroup,
    h: &HessenbergSet,
    target: &CohomologyClass,
    basis: &[CohomologyClass],
    order: &[ElemId],
) -> Result<Vec<Polynomial>> {
    assert_eq!(basis.len(), g.order());
    let rs = g.root_system();
    let mut residue = target.clone();
    let mut coeffs = vec![Polynomial::zero(g.rank()); g.order()];
    for &x in order {
        if residue.value(x).is_zero() {
            continue;
        }
        let mut f = residue.value(x).clone();
        for r in g.h_inversions(x, h) {
            f = f.divide_by_linear(rs.coords(r)).ok_or_else(|| {
                Error::NotInSpan(format!(
                    "residue {} at {} is not divisible by the root {}",
                    residue.value(x),
                    g.name(x),
                    rs.root(r)
                ))
            })?;
        }
        for y in basis[x].support() {
            let delta = &f * basis[x].value(y);
            let mut v = residue.value(y).clone();
            v -= &delta;
            residue.set(y, v);
        }
        if !residue.value(x).is_zero() {
            return Err(Error::NotInSpan(format!(
                "basis class at {} does not have the expected leading value",
                g.name(x)
            )));
        }
        coeffs[x] = f;
    }
    if let Some(y) = residue.support().first() {
        return Err(Error::NotInSpan(format!(
            "residue {} remains at {}",
            residue.value(*y),
            g.name(*y)
        )));
    }
    Ok(coeffs)
}

/// `sum_x coeffs[x] * basis[x]`.
pub fn combine(g: &WeylGroup, coeffs: &[Polynomial], basis: &[CohomologyClass]) -> CohomologyClass {
    let mut out = CohomologyClass::zero(g);
    for (f, b) in coeffs.iter().zip(basis) {
        if f.is_zero() {
            continue;
        }
        for y in b.support() {
            let mut v = out.value(y).clone();
            v += &(f * b.value(y));
            out.set(y, v);
        }
    }
    out
}

/// Evaluates every value of a class at a point.
pub fn evaluate_class(c: &CohomologyClass, point: &[Rational]) -> Vec<Rational> {
    c.values()
        .iter()
        .map(|p| {
            if p.is_zero() {
                Rational::zero()
            } else {
                p.evaluate(point)
            }
        })
        .collect()
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::rootsystem::RootSystem;

    fn a2() -> WeylGroup {
        WeylGroup::new(RootSystem::new("A2".parse().unwrap()).unwrap())
    }

    fn class(g: &WeylGroup, entries: &[(&str, &str)]) -> CohomologyClass {
        let mut c = CohomologyClass::zero(g);
        for (w, p) in entries {
            c.set(
                g.parse_element(w).unwrap(),
                Polynomial::parse(p, g.rank(), 'a').unwrap(),
            );
        }
        c
    }

    /// The A2 highest-root family in alpha coordinates: t1-t2 = a1, t2-t3 = a2, t1-t3 = a1+a2.
    pub(crate) fn a2_family(g: &WeylGroup) -> Vec<CohomologyClass> {
        vec![
            class(
                g,
                &[
                    ("e", "1"),
                    ("1", "1"),
                    ("2", "1"),
                    ("1.2", "1"),
                    ("2.1", "1"),
                    ("1.2.1", "1"),
                ],
            ),
            class(g, &[("1", "a1"), ("1.2", "-a2")]),
            class(g, &[("2", "a2"), ("2.1", "-a1")]),
            class(g, &[("1.2", "a1+a2"), ("1.2.1", "a1")]),
            class(g, &[("2.1", "a1+a2"), ("1.2.1", "a2")]),
            class(g, &[("1.2.1", "a1*a2")]),
        ]
    }

    #[test]
    fn a2_edge_condition() {
        let g = a2();
        let h = g.root_system().highest_root_hessenberg();
        let p12 = &a2_family(&g)[3];
        assert!(check_gkm(&g, &h, p12).is_empty());
        let diff = p12.value(5) - p12.value(3);
        assert!(diff.in_ideal(&[0, 1]));
    }

    #[test]
    fn constant_class_is_gkm_everywhere() {
        let g = a2();
        let one = CohomologyClass::constant(&g, 1);
        for h in g.root_system().all_hessenberg_sets() {
            assert!(check_gkm(&g, &h, &one).is_empty());
        }
    }

    #[test]
    fn detects_violation() {
        let g = a2();
        let full = g.root_system().full_hessenberg();
        let c = class(&g, &[("e", "a1")]);
        let violations = check_gkm(&g, &full, &c);
        let s2 = g.simple(1);
        assert!(violations
            .iter()
            .any(|v| v.edge.source == 0 && v.edge.target == s2 && v.edge.root == 1));
        // the edge e -> s1 is fine: a1 is in <a1>
        assert!(!violations.iter().any(|v| v.edge.target == g.simple(0)));
    }

    #[test]
    fn dot_action_examples() {
        let g = a2();
        let t = a2_family(&g);
        assert_eq!(dot_action(&g, 0, &t[3]), t[3]);
        assert_eq!(dot_action(&g, g.simple(0), &t[3]), t[2]);
        for c in &t {
            let twice = dot_action(&g, g.simple(0), &dot_action(&g, g.simple(0), c));
            assert_eq!(&twice, c);
        }
    }

    #[test]
    fn flow_up_examples() {
        let g = a2();
        let h = g.root_system().highest_root_hessenberg();
        let t = a2_family(&g);
        for (x, c) in t.iter().enumerate() {
            assert!(is_flow_up(&g, &h, c, x), "{}", g.name(x));
        }
        assert!(!is_flow_up(&g, &h, &t[1], g.simple(1)));
    }

    #[test]
    fn degrees() {
        let g = a2();
        let t = a2_family(&g);
        assert_eq!(class_degree(&t[5]), Some(2));
        assert_eq!(class_degree(&t[0]), Some(0));
        let mixed = class(&g, &[("e", "1"), ("1", "a1")]);
        assert_eq!(class_degree(&mixed), None);
    }

    #[test]
    fn expansion_of_basis_element() {
        let g = a2();
        let h = g.root_system().highest_root_hessenberg();
        let t = a2_family(&g);
        let f = expand_in_basis(&g, &h, &t[1], &t).unwrap();
        for (x, c) in f.iter().enumerate() {
            let expected = if x == 1 {
                Polynomial::one(2)
            } else {
                Polynomial::zero(2)
            };
            assert_eq!(c, &expected);
        }
    }

    #[test]
    fn structure_constants_of_s1_squared() {
        let g = a2();
        let h = g.root_system().highest_root_hessenberg();
        let t = a2_family(&g);
        let square = t[1].mul(&t[1]);
        let f = expand_in_basis(&g, &h, &square, &t).unwrap();
        let expected = ["0", "a1", "0", "a2", "0", "-1"];
        for (x, e) in expected.iter().enumerate() {
            assert_eq!(f[x], Polynomial::parse(e, 2, 'a').unwrap(), "{}", g.name(x));
        }
        assert_eq!(combine(&g, &f, &t), square);
    }

    #[test]
    fn disjoint_product_vanishes() {
        let g = a2();
        let h = g.root_system().highest_root_hessenberg();
        let t = a2_family(&g);
        let prod = t[1].mul(&t[2]);
        assert!(prod.is_zero());
        let f = expand_in_basis(&g, &h, &prod, &t).unwrap();
        assert!(f.iter().all(Polynomial::is_zero));
    }

    #[test]
    fn rejects_class_outside_ring() {
        let g = a2();
        let h = g.root_system().highest_root_hessenberg();
        let t = a2_family(&g);
        let bad = class(&g, &[("1", "a2")]);
        assert!(matches!(
            expand_in_basis(&g, &h, &bad, &t),
            Err(Error::NotInSpan(_))
        ));
    }
}
