//! Sparse multivariate polynomials with exact rational coefficients in the
//! simple-root variables `a1..ak`.
//!
//! Monomials are ordered graded-lexicographically with `a1 > a2 > ...`. The
//! canonical string lists terms in descending order, e.g. `a1^2+2*a1*a2-1/2*a2`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::weyl::{ElemId, WeylGroup};

pub type Rational = num_rational::BigRational;

/// Largest supported variable count (type A5 in t-coordinates needs 6).
pub const MAX_VARS: usize = 8;

/// Exponent vector. Field order gives graded-lex comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    degree: u16,
    exps: [u8; MAX_VARS],
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            degree: 0,
            exps: [0; MAX_VARS],
        }
    }

    pub fn var(i: usize) -> Self {
        let mut m = Monomial::one();
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    pub fn from_exponents(exps: &[u8]) -> Self {
        let mut m = Monomial::one();
        m.exps[..exps.len()].copy_from_slice(exps);
        m.degree = exps.iter().map(|&e| u16::from(e)).sum();
        m
    }

    pub fn degree(&self) -> usize {
        usize::from(self.degree)
    }

    pub fn exponent(&self, i: usize) -> u8 {
        self.exps[i]
    }

    pub fn exponents(&self) -> &[u8; MAX_VARS] {
        &self.exps
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (a, b) in exps.iter_mut().zip(&other.exps) {
            *a += b;
        }
        Monomial {
            degree: self.degree + other.degree,
            exps,
        }
    }

    fn with_exponent(&self, i: usize, e: u8) -> Monomial {
        let mut m = *self;
        m.degree = m.degree - u16::from(m.exps[i]) + u16::from(e);
        m.exps[i] = e;
        m
    }
}

/// Result of a homogeneity query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Grading {
    /// The zero polynomial; homogeneous of every degree.
    Zero,
    Homogeneous(usize),
    Inhomogeneous,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "too many variables");
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, Rational::from_integer(BigInt::from(c)))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut p = Self::zero(nvars);
        p.terms.insert(Monomial::var(i), Rational::one());
        p
    }

    /// `sum_i coeffs[i] * a_i`; for a root this is its linear form.
    pub fn linear(coeffs: &[i64]) -> Self {
        let mut p = Self::zero(coeffs.len());
        for (i, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                p.terms
                    .insert(Monomial::var(i), Rational::from_integer(BigInt::from(c)));
            }
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one())
    }

    fn add_term(&mut self, m: Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Rational, other: &Polynomial) {
        self.check_vars(other);
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            self.add_term(*m, &(c * x));
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    fn check_vars(&self, other: &Polynomial) {
        assert_eq!(
            self.nvars, other.nvars,
            "polynomials over different variable sets"
        );
    }

    pub fn grading(&self) -> Grading {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => Grading::Zero,
            Some(d) => {
                if degrees.all(|e| e == d) {
                    Grading::Homogeneous(d)
                } else {
                    Grading::Inhomogeneous
                }
            }
        }
    }

    /// Total degree of a homogeneous nonzero polynomial.
    pub fn degree(&self) -> Option<usize> {
        match self.grading() {
            Grading::Homogeneous(d) => Some(d),
            _ => None,
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.grading() != Grading::Inhomogeneous
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one(self.nvars);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Ring map `a_j -> forms[j]` where `forms[j]` holds linear coefficients.
    pub fn substitute_linear(&self, forms: &[&[i64]]) -> Polynomial {
        assert_eq!(forms.len(), self.nvars);
        let n = forms.first().map_or(self.nvars, |f| f.len());
        let linear: Vec<Polynomial> = forms.iter().map(|f| Polynomial::linear(f)).collect();
        let mut powers: Vec<Vec<Polynomial>> = linear
            .iter()
            .map(|l| vec![Polynomial::one(n), l.clone()])
            .collect();
        let mut out = Polynomial::zero(n);
        for (m, c) in &self.terms {
            let mut prod = Polynomial::constant(n, c.clone());
            for j in 0..self.nvars {
                let e = usize::from(m.exps[j]);
                if e == 0 {
                    continue;
                }
                while powers[j].len() <= e {
                    let next = powers[j].last().unwrap() * &linear[j];
                    powers[j].push(next);
                }
                prod = &prod * &powers[j][e];
            }
            out += &prod;
        }
        out
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars);
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (j, x) in point.iter().enumerate() {
                let e = m.exps[j];
                if e > 0 {
                    v *= num_traits::pow(x.clone(), usize::from(e));
                }
            }
            total += v;
        }
        total
    }

    /// Exact quotient by a nonzero linear form, or `None` if it does not divide.
    ///
    /// Synthetic division in the pivot variable (least index with a nonzero
    /// coefficient): writing `l = c*x + r` and `self = sum_e x^e A_e`, the
    /// quotient coefficients satisfy `B_{e-1} = (A_e - r B_e) / c` and the
    /// remainder `A_0 - r B_0` must vanish.
    pub fn divide_exact(&self, l: &Polynomial) -> Option<Polynomial> {
        self.check_vars(l);
        assert!(
            !l.is_zero() && l.terms.keys().all(|m| m.degree == 1),
            "divisor must be a nonzero linear form"
        );
        if self.is_zero() {
            return Some(self.clone());
        }
        let (pivot_m, pivot_c) = l.terms.iter().next_back().unwrap();
        let pivot = (0..self.nvars).find(|&i| pivot_m.exps[i] == 1).unwrap();
        let mut rest = l.clone();
        rest.terms.remove(pivot_m);
        let inv_c = pivot_c.recip();

        let top = self.terms.keys().map(|m| m.exps[pivot]).max().unwrap();
        let mut slices: Vec<Polynomial> = vec![Polynomial::zero(self.nvars); usize::from(top) + 1];
        for (m, c) in &self.terms {
            let e = usize::from(m.exps[pivot]);
            slices[e].terms.insert(m.with_exponent(pivot, 0), c.clone());
        }
        let mut quotient = Polynomial::zero(self.nvars);
        let mut carry = Polynomial::zero(self.nvars);
        for e in (1..=usize::from(top)).rev() {
            let mut b = slices[e].clone();
            b -= &(&rest * &carry);
            let b = b.scale(&inv_c);
            for (m, c) in &b.terms {
                quotient
                    .terms
                    .insert(m.with_exponent(pivot, (e - 1) as u8), c.clone());
            }
            carry = b;
        }
        let mut remainder = slices[0].clone();
        remainder -= &(&rest * &carry);
        if !remainder.is_zero() {
            return None;
        }
        debug_assert!(&quotient * l == *self);
        Some(quotient)
    }

    /// Quotient by the linear form with the given integer coefficients.
    pub fn divide_by_linear(&self, coeffs: &[i64]) -> Option<Polynomial> {
        self.divide_exact(&Polynomial::linear(coeffs))
    }

    /// Membership in the principal ideal generated by a linear form.
    pub fn in_ideal(&self, coeffs: &[i64]) -> bool {
        self.divide_by_linear(coeffs).is_some()
    }

    /// Type-A change of variables `a_i -> t_i - t_{i+1}`; the result has one
    /// more variable.
    pub fn alpha_to_t(&self) -> Polynomial {
        let n = self.nvars + 1;
        let forms: Vec<Vec<i64>> = (0..self.nvars)
            .map(|i| {
                let mut f = vec![0; n];
                f[i] = 1;
                f[i + 1] = -1;
                f
            })
            .collect();
        let refs: Vec<&[i64]> = forms.iter().map(|f| f.as_slice()).collect();
        self.substitute_linear(&refs)
    }

    /// Canonical rendering with the given variable prefix.
    pub fn render(&self, prefix: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            if negative {
                out.push('-');
            } else if k > 0 {
                out.push('+');
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.degree == 0 {
                factors.push(abs.to_string());
            }
            for j in 0..self.nvars {
                match m.exps[j] {
                    0 => {}
                    1 => factors.push(format!("{prefix}{}", j + 1)),
                    e => factors.push(format!("{prefix}{}^{e}", j + 1)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    /// Parses sums of products of rationals, variables `<prefix><index>`,
    /// powers and parenthesized subexpressions.
    pub fn parse(s: &str, nvars: usize, prefix: char) -> Result<Polynomial> {
        let tokens: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut parser = Parser {
            tokens,
            pos: 0,
            nvars,
            prefix,
        };
        let p = parser.expr()?;
        if parser.pos != parser.tokens.len() {
            return Err(Error::Parse(format!("trailing input in {s:?}")));
        }
        Ok(p)
    }
}

struct Parser {
    tokens: Vec<char>,
    pos: usize,
    nvars: usize,
    prefix: char,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.tokens.get(self.pos).copied()
    }

    fn err(&self, what: &str) -> Error {
        let text: String = self.tokens.iter().collect();
        Error::Parse(format!("{what} at position {} in {text:?}", self.pos))
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = if self.peek() == Some('-') {
            self.pos += 1;
            -self.term()?
        } else {
            if self.peek() == Some('+') {
                self.pos += 1;
            }
            self.term()?
        };
        while let Some(op @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            if op == '+' {
                acc += &t;
            } else {
                acc -= &t;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = &acc * &self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.integer()?;
            let e = u32::try_from(e).map_err(|_| self.err("bad exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let digits: String = self.tokens[start..self.pos].iter().collect();
        Ok(digits.parse().unwrap())
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let p = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(p)
            }
            Some('-') => {
                self.pos += 1;
                Ok(-self.power()?)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let mut value = Rational::from_integer(num);
                if self.peek() == Some('/') {
                    self.pos += 1;
                    let den = self.integer()?;
                    if den.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    value /= Rational::from_integer(den);
                }
                Ok(Polynomial::constant(self.nvars, value))
            }
            Some(c) if c == self.prefix => {
                self.pos += 1;
                let idx = self.integer()?;
                let idx: usize = idx.try_into().map_err(|_| self.err("bad variable"))?;
                if idx == 0 || idx > self.nvars {
                    return Err(self.err("variable index out of range"));
                }
                Ok(Polynomial::var(self.nvars, idx - 1))
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}

/// `w(p)`: substitutes each `a_j` by the linear form `w(a_j)`.
pub fn act(g: &WeylGroup, w: ElemId, p: &Polynomial) -> Polynomial {
    if w == g.identity() || p.is_zero() {
        return p.clone();
    }
    let k = g.rank();
    assert_eq!(p.nvars(), k);
    let m = g.element(w).matrix();
    let rows: Vec<&[i64]> = (0..k).map(|j| &m[j * k..(j + 1) * k]).collect();
    p.substitute_linear(&rows)
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("a"))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self.render("a"))
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        self.check_vars(rhs);
        for (m, c) in &rhs.terms {
            self.add_term(*m, c);
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        self.check_vars(rhs);
        for (m, c) in &rhs.terms {
            self.add_term(*m, &-c);
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.check_vars(rhs);
        let mut out = Polynomial::zero(self.nvars);
        if self.is_zero() || rhs.is_zero() {
            return out;
        }
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(mut self) -> Polynomial {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -self.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsystem::RootSystem;

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s, 2, 'a').unwrap()
    }

    #[test]
    fn ring_identities() {
        assert_eq!(&p("a1*a2") + &Polynomial::zero(2), p("a1*a2"));
        assert_eq!(p("(a1+a2)^2"), p("a1^2+2*a1*a2+a2^2"));
        assert!((&(&p("a1") * &p("a2")) - &(&p("a2") * &p("a1"))).is_zero());
    }

    #[test]
    fn canonical_rendering() {
        assert_eq!(p("a2^2 + 2*a1*a2 + a1^2").to_string(), "a1^2+2*a1*a2+a2^2");
        assert_eq!(p("-a2 + 3/2").to_string(), "-a2+3/2");
        assert_eq!(p("0").to_string(), "0");
        assert_eq!(p("-1").to_string(), "-1");
        assert_eq!(p("a1*a2^3 - a1^2").to_string(), "a1*a2^3-a1^2");
        assert_eq!(p("-2/4*a1").to_string(), "-1/2*a1");
    }

    #[test]
    fn weyl_action_examples() {
        let g = WeylGroup::new(RootSystem::new("A2".parse().unwrap()).unwrap());
        let s1 = g.simple(0);
        let s2 = g.simple(1);
        assert_eq!(act(&g, s1, &p("a1*a2")), p("-a1^2-a1*a2"));
        assert_eq!(act(&g, 0, &p("a1^2-a2")), p("a1^2-a2"));
        assert_eq!(act(&g, s2, &p("a1+a2")), p("a1"));
    }

    #[test]
    fn linear_forms() {
        assert_eq!(Polynomial::linear(&[1, 1]), p("a1+a2"));
        assert_eq!(Polynomial::linear(&[0, -1]), p("-a2"));
        assert_eq!(Polynomial::linear(&[1, 0, 0]).to_string(), "a1");
    }

    #[test]
    fn exact_division() {
        assert_eq!(p("a1^2+a1*a2").divide_by_linear(&[1, 0]), Some(p("a1+a2")));
        assert_eq!(p("a1*a2").divide_by_linear(&[1, 1]), None);
        assert_eq!(p("0").divide_by_linear(&[1, 1]), Some(p("0")));
        assert_eq!(
            p("a1^2-a2^2").divide_by_linear(&[2, 2]),
            Some(p("1/2*a1-1/2*a2"))
        );
        assert_eq!(p("3").divide_by_linear(&[0, 1]), None);
        assert_eq!(p("a2^3").divide_by_linear(&[0, 1]), Some(p("a2^2")));
    }

    #[test]
    fn ideal_membership() {
        assert!(p("a2^2+a1*a2").in_ideal(&[0, 1]));
        assert!(!p("a1").in_ideal(&[0, 1]));
        assert!((&p("a1+a2") - &p("a1")).in_ideal(&[0, 1]));
    }

    #[test]
    fn gradings() {
        assert_eq!(p("a1*a2").grading(), Grading::Homogeneous(2));
        assert_eq!(p("a1+a1*a2").grading(), Grading::Inhomogeneous);
        assert_eq!(p("5").grading(), Grading::Homogeneous(0));
        assert_eq!(p("0").grading(), Grading::Zero);
        assert!(p("0").is_homogeneous());
    }

    #[test]
    fn t_coordinates() {
        assert_eq!(
            p("a1*a2").alpha_to_t(),
            Polynomial::parse("(t1-t2)*(t2-t3)", 3, 't').unwrap()
        );
        assert_eq!(p("a1+a2").alpha_to_t().render("t"), "t1-t3");
    }

    #[test]
    fn parse_errors() {
        assert!(Polynomial::parse("a3", 2, 'a').is_err());
        assert!(Polynomial::parse("a1+", 2, 'a').is_err());
        assert!(Polynomial::parse("(a1", 2, 'a').is_err());
        assert!(Polynomial::parse("1/0", 2, 'a').is_err());
    }

    #[test]
    fn evaluation() {
        let half = Rational::new(1.into(), 2.into());
        let v = p("a1^2*a2 - 3").evaluate(&[Rational::from_integer(2.into()), half]);
        assert_eq!(v, Rational::from_integer((-1).into()));
    }
}
