//! Flow-up classes for an arbitrary Hessenberg set, by exact linear algebra.
//!
//! The value at `x` is fixed to the product of `N^h_x`, values off the flow-up
//! of `x` are zero, and the remaining values are homogeneous of degree
//! `l_h(x)` with unknown coefficients. Each edge condition `P(u) - P(v) in <a>`
//! is linear: the difference must vanish on the hyperplane `a = 0`.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gkm::{root_product, CohomologyClass};
use crate::poly::{Monomial, Polynomial, Rational};
use crate::rootsystem::{HessenbergSet, RootId};
use crate::weyl::{ElemId, WeylGroup};

/// All flow-up classes at one element: `particular + span(kernel)`.
#[derive(Debug, Clone)]
pub struct FlowUpSpace {
    pub element: ElemId,
    pub particular: CohomologyClass,
    /// Classes supported strictly above `element` that satisfy every edge
    /// condition; adding any combination keeps the flow-up property.
    pub kernel: Vec<CohomologyClass>,
}

impl FlowUpSpace {
    pub fn is_unique(&self) -> bool {
        self.kernel.is_empty()
    }

    /// `particular + sum_j coeffs[j] kernel[j]`.
    pub fn member(&self, coeffs: &[Rational]) -> CohomologyClass {
        self.kernel
            .iter()
            .zip(coeffs)
            .fold(self.particular.clone(), |acc, (k, c)| {
                acc.add(&k.scale_rational(c))
            })
    }
}

pub(crate) fn monomials(nvars: usize, degree: usize) -> Vec<Monomial> {
    fn go(i: usize, left: usize, cur: &mut Vec<u8>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left as u8;
            out.push(Monomial::from_exponents(cur));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e as u8;
            go(i + 1, left - e, cur, out);
        }
    }
    let mut out = Vec::new();
    go(0, degree, &mut vec![0; nvars], &mut out);
    out
}

/// Ring map restricting to the hyperplane `coeffs . a = 0`, parametrized by an
/// integer basis (one variable is left unused).
fn hyperplane_forms(coeffs: &[i64]) -> Vec<Vec<i64>> {
    let k = coeffs.len();
    let p = coeffs.iter().position(|&c| c != 0).expect("nonzero root");
    (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    if j == p {
                        0
                    } else if i == j {
                        coeffs[p]
                    } else if i == p {
                        -coeffs[j]
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect()
}

fn restrict(p: &Polynomial, forms: &[Vec<i64>]) -> Polynomial {
    let refs: Vec<&[i64]> = forms.iter().map(Vec::as_slice).collect();
    p.substitute_linear(&refs)
}

/// Solves for every flow-up class at `x`.
pub fn flow_up_space(g: &WeylGroup, h: &HessenbergSet, x: ElemId) -> Result<FlowUpSpace> {
    let rs = g.root_system();
    let k = g.rank();
    let graph = g.hessenberg_graph(h);
    let inv = g.h_inversions(x, h);
    let degree = inv.len();
    let lead = root_product(g, &inv);
    let free: Vec<ElemId> = graph.flow_up(x).iter().filter(|&y| y != x).collect();
    let slot: HashMap<ElemId, usize> = free.iter().enumerate().map(|(i, &y)| (y, i)).collect();
    let monos = monomials(k, degree);
    let n = free.len() * monos.len();

    let mut forms: HashMap<RootId, Vec<Vec<i64>>> = HashMap::new();
    let mut restricted: HashMap<(RootId, usize), Polynomial> = HashMap::new();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for e in graph.edges() {
        let touches = |v: ElemId| v == x || slot.contains_key(&v);
        if !touches(e.source) && !touches(e.target) {
            continue;
        }
        let f = forms
            .entry(e.root)
            .or_insert_with(|| hyperplane_forms(rs.coords(e.root)))
            .clone();
        // monomial of the restricted difference -> row
        let mut eq: BTreeMap<Monomial, Vec<Rational>> = BTreeMap::new();
        let mut add = |poly: &Polynomial, col: usize, sign: i64| {
            for (m, c) in poly.terms() {
                let row = eq
                    .entry(*m)
                    .or_insert_with(|| vec![Rational::zero(); n + 1]);
                row[col] += c * Rational::from_integer(sign.into());
            }
        };
        for (v, sign) in [(e.source, 1), (e.target, -1)] {
            if v == x {
                add(&restrict(&lead, &f), n, sign);
            } else if let Some(&s) = slot.get(&v) {
                for (mi, m) in monos.iter().enumerate() {
                    let r = restricted.entry((e.root, mi)).or_insert_with(|| {
                        restrict(&Polynomial::from_terms(k, [(*m, Rational::one())]), &f)
                    });
                    add(r, s * monos.len() + mi, sign);
                }
            }
        }
        rows.extend(eq.into_values());
    }

    let (pivots, rows) = rref(rows, n);
    if rows
        .iter()
        .any(|r| r[..n].iter().all(Zero::is_zero) && !r[n].is_zero())
    {
        return Err(Error::NotInSpan(format!(
            "no flow-up class exists at {}",
            g.name(x)
        )));
    }

    let to_class = |sol: &[Rational], with_lead: bool| {
        let mut c = CohomologyClass::zero(g);
        if with_lead {
            c.set(x, lead.clone());
        }
        for (s, &y) in free.iter().enumerate() {
            let terms = monos
                .iter()
                .enumerate()
                .map(|(mi, m)| (*m, sol[s * monos.len() + mi].clone()));
            c.set(y, Polynomial::from_terms(k, terms));
        }
        c
    };

    // Equations read A u + b = 0, so the particular solution is -b on pivots.
    let mut particular = vec![Rational::zero(); n];
    for (r, &p) in pivots.iter().enumerate() {
        particular[p] = -rows[r][n].clone();
    }
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; n];
        pivots.iter().for_each(|&p| v[p] = true);
        v
    };
    let kernel = (0..n)
        .filter(|&j| !is_pivot[j])
        .map(|j| {
            let mut sol = vec![Rational::zero(); n];
            sol[j] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                sol[p] = -rows[r][j].clone();
            }
            to_class(&sol, false)
        })
        .collect();
    Ok(FlowUpSpace {
        element: x,
        particular: to_class(&particular, true),
        kernel,
    })
}

/// One flow-up class per element, taking the particular solution.
pub fn flow_up_basis(g: &WeylGroup, h: &HessenbergSet) -> Result<Vec<CohomologyClass>> {
    (0..g.order())
        .map(|x| flow_up_space(g, h, x).map(|s| s.particular))
        .collect()
}

/// Reduced row echelon form over the first `n` columns; returns the pivot
/// columns and the nonzero rows.
fn rref(mut rows: Vec<Vec<Rational>>, n: usize) -> (Vec<usize>, Vec<Vec<Rational>>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(found) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let inv = rows[r][col].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.retain(|row| row.iter().any(|v| !v.is_zero()));
    (pivots, rows)
}
