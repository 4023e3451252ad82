//! The Weyl group, its length function and inversion sets, Bruhat order, and
//! the labeled Bruhat/Hessenberg graphs.
//!
//! Elements are identified by their integer matrix: row `j` holds `w(a_j)` in
//! the simple-root basis. Words are cached for display and are never used for
//! identity. Elements are numbered by `(length, lex-least reduced word)`, so
//! `ElemId` 0 is the identity and the last id is the longest element.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::rootsystem::{HessenbergSet, RootId, RootSystem};

pub type ElemId = usize;

/// Default cap on the number of reduced words enumerated for one element.
pub const DEFAULT_WORD_CAP: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    matrix: Vec<i64>,
    word: Vec<usize>,
}

impl WeylElement {
    /// Row-major `k x k` matrix; row `j` is `w(a_j)`.
    pub fn matrix(&self) -> &[i64] {
        &self.matrix
    }

    /// Lex-least reduced word, 0-based simple indices.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }
}

/// Dense bit set over element ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElemSet {
    bits: Vec<u64>,
    n: usize,
}

impl ElemSet {
    pub fn new(n: usize) -> Self {
        ElemSet {
            bits: vec![0; n.div_ceil(64)],
            n,
        }
    }

    pub fn insert(&mut self, i: usize) {
        self.bits[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.bits[i / 64] & (1 << (i % 64)) != 0
    }

    pub fn union_with(&mut self, other: &ElemSet) {
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(|&i| self.contains(i))
    }

    pub fn count(&self) -> usize {
        self.bits.iter().map(|b| b.count_ones() as usize).sum()
    }
}

#[derive(Debug, Clone)]
pub struct WeylGroup {
    rs: RootSystem,
    elements: Vec<WeylElement>,
    index: HashMap<Vec<i64>, ElemId>,
    /// `simple_left[i][w]` is the id of `s_i w`.
    simple_left: Vec<Vec<ElemId>>,
    inverse: Vec<ElemId>,
    /// `root_action[w * |Phi| + r]` is the id of `w(r)`.
    root_action: Vec<RootId>,
    /// Element id of `s_a` for each positive root id `a`.
    reflection: Vec<ElemId>,
}

impl WeylGroup {
    /// Breadth-first closure of the identity under left multiplication by
    /// simple reflections.
    pub fn new(rs: RootSystem) -> Self {
        let k = rs.rank();
        let identity: Vec<i64> = (0..k * k).map(|x| i64::from(x / k == x % k)).collect();

        let mut index: HashMap<Vec<i64>, ElemId> = HashMap::new();
        let mut matrices: Vec<Vec<i64>> = vec![identity.clone()];
        let mut words: Vec<Vec<usize>> = vec![vec![]];
        index.insert(identity, 0);
        let mut level: Vec<usize> = vec![0];
        while !level.is_empty() {
            // Minimum of i :: word(w) over all s_i w = u is the lex-least word of u.
            let mut next: HashMap<Vec<i64>, Vec<usize>> = HashMap::new();
            for &w in &level {
                for i in 0..k {
                    let m = simple_times(&rs, i, &matrices[w]);
                    if index.contains_key(&m) {
                        continue;
                    }
                    let mut word = vec![i];
                    word.extend_from_slice(&words[w]);
                    next.entry(m)
                        .and_modify(|best| {
                            if word < *best {
                                *best = word.clone()
                            }
                        })
                        .or_insert(word);
                }
            }
            let mut next: Vec<(Vec<usize>, Vec<i64>)> =
                next.into_iter().map(|(m, w)| (w, m)).collect();
            next.sort();
            level = Vec::with_capacity(next.len());
            for (word, m) in next {
                let id = matrices.len();
                index.insert(m.clone(), id);
                matrices.push(m);
                words.push(word);
                level.push(id);
            }
        }
        let elements: Vec<WeylElement> = matrices
            .into_iter()
            .zip(words)
            .map(|(matrix, word)| WeylElement { matrix, word })
            .collect();
        let n = elements.len();
        let simple_left: Vec<Vec<ElemId>> = (0..k)
            .map(|i| {
                (0..n)
                    .map(|w| index[&simple_times(&rs, i, &elements[w].matrix)])
                    .collect()
            })
            .collect();

        let n_roots = rs.roots().len();
        let mut root_action = vec![0; n * n_roots];
        for (w, el) in elements.iter().enumerate() {
            for r in 0..n_roots {
                let image = apply_matrix(&el.matrix, k, rs.coords(r));
                root_action[w * n_roots + r] = rs
                    .root_id(&crate::rootsystem::Root(image))
                    .expect("Weyl group permutes the roots");
            }
        }

        let mut g = WeylGroup {
            rs,
            elements,
            index,
            simple_left,
            inverse: vec![],
            root_action,
            reflection: vec![],
        };
        g.inverse = (0..n)
            .map(|w| {
                g.elements[w]
                    .word
                    .iter()
                    .fold(0, |acc, &i| g.simple_left[i][acc])
            })
            .collect();
        g.reflection = (0..g.rs.n_positive())
            .map(|a| {
                let alpha = g.rs.coords(a).to_vec();
                let m: Vec<i64> = (0..k)
                    .flat_map(|j| {
                        let c = g.rs.cartan_integer_ids(a, g.rs.simple_root_id(j));
                        let alpha = &alpha;
                        (0..k).map(move |m| i64::from(m == j) - c * alpha[m])
                    })
                    .collect();
                g.index[&m]
            })
            .collect();
        g
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, w: ElemId) -> &WeylElement {
        &self.elements[w]
    }

    pub fn identity(&self) -> ElemId {
        0
    }

    pub fn longest(&self) -> ElemId {
        self.elements.len() - 1
    }

    pub fn length(&self, w: ElemId) -> usize {
        self.elements[w].word.len()
    }

    pub fn max_length(&self) -> usize {
        self.length(self.longest())
    }

    pub fn id_of_matrix(&self, m: &[i64]) -> Option<ElemId> {
        self.index.get(m).copied()
    }

    pub fn simple(&self, i: usize) -> ElemId {
        self.simple_left[i][0]
    }

    /// `s_i w`.
    pub fn simple_left(&self, i: usize, w: ElemId) -> ElemId {
        self.simple_left[i][w]
    }

    pub fn mul(&self, a: ElemId, b: ElemId) -> ElemId {
        self.elements[a]
            .word
            .iter()
            .rev()
            .fold(b, |acc, &i| self.simple_left[i][acc])
    }

    pub fn inverse(&self, w: ElemId) -> ElemId {
        self.inverse[w]
    }

    /// Evaluates a word of 0-based simple indices as `s_{i_1} ... s_{i_n}`.
    pub fn from_word(&self, word: &[usize]) -> Result<ElemId> {
        if let Some(&bad) = word.iter().find(|&&i| i >= self.rank()) {
            return Err(Error::Parse(format!(
                "simple index {} out of range",
                bad + 1
            )));
        }
        Ok(word
            .iter()
            .rev()
            .fold(0, |acc, &i| self.simple_left[i][acc]))
    }

    /// `"e"` or dot-separated 1-based simple indices of the lex-least reduced word.
    pub fn name(&self, w: ElemId) -> String {
        let word = &self.elements[w].word;
        if word.is_empty() {
            "e".to_string()
        } else {
            word.iter()
                .map(|i| (i + 1).to_string())
                .collect::<Vec<_>>()
                .join(".")
        }
    }

    /// Inverse of [`WeylGroup::name`]; accepts any word, reduced or not.
    pub fn parse_element(&self, s: &str) -> Result<ElemId> {
        let s = s.trim();
        if s == "e" || s.is_empty() {
            return Ok(0);
        }
        let word = s
            .split('.')
            .map(|t| match t.trim().parse::<usize>() {
                Ok(i) if i >= 1 => Ok(i - 1),
                _ => Err(Error::Parse(format!("bad element name {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        self.from_word(&word)
    }

    /// Id of `w(r)`.
    pub fn act_root(&self, w: ElemId, r: RootId) -> RootId {
        self.root_action[w * self.rs.roots().len() + r]
    }

    /// Element id of the reflection `s_a` for a positive root id.
    pub fn reflection(&self, a: RootId) -> ElemId {
        let a = if self.rs.is_positive_id(a) {
            a
        } else {
            self.rs.negate_id(a)
        };
        self.reflection[a]
    }

    /// `s_a w`.
    pub fn reflect_left(&self, a: RootId, w: ElemId) -> ElemId {
        self.mul(self.reflection(a), w)
    }

    /// `w^{-1} a_i` is negative.
    pub fn is_left_descent(&self, w: ElemId, i: usize) -> bool {
        !self
            .rs
            .is_positive_id(self.act_root(self.inverse[w], self.rs.simple_root_id(i)))
    }

    /// `N_w = { a in Phi+ : w^{-1} a in Phi- }`.
    pub fn inversions(&self, w: ElemId) -> Vec<RootId> {
        let inv = self.inverse[w];
        (0..self.rs.n_positive())
            .filter(|&a| !self.rs.is_positive_id(self.act_root(inv, a)))
            .collect()
    }

    /// `N^h_w = { a in Phi+ : w^{-1} a in -h }`.
    pub fn h_inversions(&self, w: ElemId, h: &HessenbergSet) -> Vec<RootId> {
        let inv = self.inverse[w];
        (0..self.rs.n_positive())
            .filter(|&a| h.contains_negated(&self.rs, self.act_root(inv, a)))
            .collect()
    }

    pub fn hessenberg_length(&self, w: ElemId, h: &HessenbergSet) -> usize {
        self.h_inversions(w, h).len()
    }

    /// Edges `u -> s_a u` with `a` positive and `(s_a u)^{-1} a in -h`.
    pub fn hessenberg_graph(&self, h: &HessenbergSet) -> LabeledGraph {
        let mut edges = Vec::new();
        for u in 0..self.order() {
            for a in 0..self.rs.n_positive() {
                let w = self.reflect_left(a, u);
                if h.contains_negated(&self.rs, self.act_root(self.inverse[w], a)) {
                    edges.push(Edge {
                        source: u,
                        target: w,
                        root: a,
                    });
                }
            }
        }
        LabeledGraph::new(self.order(), edges)
    }

    pub fn bruhat_graph(&self) -> LabeledGraph {
        self.hessenberg_graph(&self.rs.full_hessenberg())
    }

    /// All `(v, a)` with `v = s_a w`, `a` positive and `l(v) = l(w) + 1`.
    pub fn covers(&self, w: ElemId) -> Vec<(ElemId, RootId)> {
        let l = self.length(w);
        (0..self.rs.n_positive())
            .filter_map(|a| {
                let v = self.reflect_left(a, w);
                (self.length(v) == l + 1).then_some((v, a))
            })
            .collect()
    }

    /// Bruhat order as the reflexive-transitive closure of covers.
    pub fn bruhat_order(&self) -> Reachability {
        let n = self.order();
        let mut up: Vec<ElemSet> = vec![ElemSet::new(n); n];
        for x in (0..n).rev() {
            let mut set = ElemSet::new(n);
            set.insert(x);
            for (v, _) in self.covers(x) {
                set.union_with(&up[v]);
            }
            up[x] = set;
        }
        Reachability { up }
    }

    /// The unique cover `(v, a)` of `w` with `l_h(v) = l_h(w)` and
    /// `v^{-1} a_i = -gamma`, if any. `h` must be the highest-root set.
    pub fn find_gamma_partner(
        &self,
        h: &HessenbergSet,
        w: ElemId,
        i: usize,
    ) -> Result<Option<(ElemId, RootId)>> {
        let neg_gamma = self.rs.negate_id(self.rs.highest_root_id());
        let simple = self.rs.simple_root_id(i);
        let lw = self.hessenberg_length(w, h);
        let found: Vec<(ElemId, RootId)> = self
            .covers(w)
            .into_iter()
            .filter(|&(v, _)| {
                self.act_root(self.inverse[v], simple) == neg_gamma
                    && self.hessenberg_length(v, h) == lw
            })
            .collect();
        match found.len() {
            0 => Ok(None),
            1 => Ok(Some(found[0])),
            count => Err(Error::MultiplePartners {
                element: self.name(w),
                index: i + 1,
                count,
            }),
        }
    }

    /// All reduced words of `w` (0-based), lexicographically ordered.
    pub fn reduced_words(&self, w: ElemId, cap: usize) -> Result<Vec<Vec<usize>>> {
        let mut memo: HashMap<ElemId, Vec<Vec<usize>>> = HashMap::new();
        self.reduced_words_rec(w, cap, &mut memo)
    }

    fn reduced_words_rec(
        &self,
        w: ElemId,
        cap: usize,
        memo: &mut HashMap<ElemId, Vec<Vec<usize>>>,
    ) -> Result<Vec<Vec<usize>>> {
        if w == 0 {
            return Ok(vec![vec![]]);
        }
        if let Some(ws) = memo.get(&w) {
            return Ok(ws.clone());
        }
        let mut out = Vec::new();
        for i in 0..self.rank() {
            if !self.is_left_descent(w, i) {
                continue;
            }
            for tail in self.reduced_words_rec(self.simple_left[i][w], cap, memo)? {
                let mut word = vec![i];
                word.extend(tail);
                out.push(word);
                if out.len() > cap {
                    return Err(Error::TooManyWords {
                        element: self.name(w),
                        cap,
                    });
                }
            }
        }
        memo.insert(w, out.clone());
        Ok(out)
    }

    /// Conjugacy classes by brute force, each sorted, ordered by least member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<ElemId>> {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<ElemId>> = Vec::new();
        for w in 0..n {
            if class_of[w] != usize::MAX {
                continue;
            }
            let mut members: Vec<ElemId> = (0..n)
                .map(|s| self.mul(self.mul(s, w), self.inverse[s]))
                .collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                class_of[m] = classes.len();
            }
            classes.push(members);
        }
        classes
    }

    /// Trace of the reflection representation.
    pub fn trace(&self, w: ElemId) -> i64 {
        let k = self.rank();
        (0..k).map(|i| self.elements[w].matrix[i * k + i]).sum()
    }

    /// Applies `w` to an integer coordinate vector.
    pub fn apply(&self, w: ElemId, v: &[i64]) -> Vec<i64> {
        apply_matrix(&self.elements[w].matrix, self.rank(), v)
    }
}

fn apply_matrix(m: &[i64], k: usize, v: &[i64]) -> Vec<i64> {
    let mut out = vec![0; k];
    for (j, &c) in v.iter().enumerate() {
        if c != 0 {
            for (o, x) in out.iter_mut().zip(&m[j * k..(j + 1) * k]) {
                *o += c * x;
            }
        }
    }
    out
}

/// Matrix of `s_i w` from the matrix of `w`.
fn simple_times(rs: &RootSystem, i: usize, m: &[i64]) -> Vec<i64> {
    let k = rs.rank();
    let c = rs.cartan_matrix();
    let mut out = m.to_vec();
    for j in 0..k {
        let row = &m[j * k..(j + 1) * k];
        let pairing: i64 = (0..k).map(|t| c[i][t] * row[t]).sum();
        out[j * k + i] -= pairing;
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub source: ElemId,
    pub target: ElemId,
    /// Positive root id labeling the edge; `target = s_root source`.
    pub root: RootId,
}

/// Directed graph on `W`; every edge increases length.
#[derive(Debug, Clone)]
pub struct LabeledGraph {
    n: usize,
    edges: Vec<Edge>,
    out: Vec<Vec<usize>>,
    into: Vec<Vec<usize>>,
}

impl LabeledGraph {
    pub fn new(n: usize, edges: Vec<Edge>) -> Self {
        let mut out = vec![vec![]; n];
        let mut into = vec![vec![]; n];
        for (e, edge) in edges.iter().enumerate() {
            out[edge.source].push(e);
            into[edge.target].push(e);
        }
        LabeledGraph {
            n,
            edges,
            out,
            into,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn out_edges(&self, v: ElemId) -> impl Iterator<Item = &Edge> {
        self.out[v].iter().map(move |&e| &self.edges[e])
    }

    pub fn in_edges(&self, v: ElemId) -> impl Iterator<Item = &Edge> {
        self.into[v].iter().map(move |&e| &self.edges[e])
    }

    pub fn in_degree(&self, v: ElemId) -> usize {
        self.into[v].len()
    }

    pub fn has_edge(&self, source: ElemId, target: ElemId) -> bool {
        self.out_edges(source).any(|e| e.target == target)
    }

    /// The flow-up of `x`: everything reachable from `x`, including `x`.
    pub fn flow_up(&self, x: ElemId) -> ElemSet {
        let mut seen = ElemSet::new(self.n);
        let mut stack = vec![x];
        seen.insert(x);
        while let Some(v) = stack.pop() {
            for e in self.out_edges(v) {
                if !seen.contains(e.target) {
                    seen.insert(e.target);
                    stack.push(e.target);
                }
            }
        }
        seen
    }

    pub fn flow_up_leq(&self, x: ElemId, y: ElemId) -> bool {
        self.flow_up(x).contains(y)
    }

    /// Flow-up sets of every vertex. Ids must be a linear extension of the
    /// edge relation, which holds for groups built by [`WeylGroup::new`].
    pub fn reachability(&self) -> Reachability {
        let mut up: Vec<ElemSet> = vec![ElemSet::new(self.n); self.n];
        for x in (0..self.n).rev() {
            let mut set = ElemSet::new(self.n);
            set.insert(x);
            for e in self.out_edges(x) {
                debug_assert!(e.target > x);
                set.union_with(&up[e.target]);
            }
            up[x] = set;
        }
        Reachability { up }
    }
}

/// A reflexive partial order stored as up-sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reachability {
    up: Vec<ElemSet>,
}

impl Reachability {
    pub fn leq(&self, x: ElemId, y: ElemId) -> bool {
        self.up[x].contains(y)
    }

    pub fn up_set(&self, x: ElemId) -> &ElemSet {
        &self.up[x]
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self.word.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "{}", parts.join("."))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsystem::Root;

    fn group(t: &str) -> WeylGroup {
        WeylGroup::new(RootSystem::new(t.parse().unwrap()).unwrap())
    }

    fn ids(g: &WeylGroup, roots: &[&[i64]]) -> Vec<RootId> {
        let mut v: Vec<RootId> = roots
            .iter()
            .map(|r| g.root_system().root_id(&Root(r.to_vec())).unwrap())
            .collect();
        v.sort();
        v
    }

    #[test]
    fn group_orders() {
        for (t, n, top) in [
            ("A1", 2, 1),
            ("A2", 6, 3),
            ("A3", 24, 6),
            ("A4", 120, 10),
            ("B2", 8, 4),
            ("C2", 8, 4),
            ("G2", 12, 6),
            ("D4", 192, 12),
        ] {
            let g = group(t);
            assert_eq!(g.order(), n, "{t}");
            assert_eq!(g.max_length(), top, "{t}");
            let tops = (0..n).filter(|&w| g.length(w) == top).count();
            assert_eq!(tops, 1, "{t}");
        }
    }

    #[test]
    fn a2_elements_ordered() {
        let g = group("A2");
        let names: Vec<String> = (0..6).map(|w| g.name(w)).collect();
        assert_eq!(names, ["e", "1", "2", "1.2", "2.1", "1.2.1"]);
        let lens: Vec<usize> = (0..6).map(|w| g.length(w)).collect();
        assert_eq!(lens, [0, 1, 1, 2, 2, 3]);
    }

    #[test]
    fn words_are_lex_least_and_reduced() {
        for t in ["A3", "B2", "G2"] {
            let g = group(t);
            for w in 0..g.order() {
                let words = g.reduced_words(w, DEFAULT_WORD_CAP).unwrap();
                assert_eq!(words[0], g.element(w).word(), "{t}");
                for word in &words {
                    assert_eq!(g.from_word(word).unwrap(), w);
                    assert_eq!(word.len(), g.length(w));
                }
            }
        }
    }

    #[test]
    fn length_is_inversion_count() {
        for t in ["A3", "B2", "G2", "D4"] {
            let g = group(t);
            for w in 0..g.order() {
                assert_eq!(g.inversions(w).len(), g.length(w));
            }
        }
    }

    #[test]
    fn matrices_permute_roots() {
        let g = group("B2");
        for w in 0..g.order() {
            let mut images: Vec<RootId> = (0..8).map(|r| g.act_root(w, r)).collect();
            images.sort();
            assert_eq!(images, (0..8).collect::<Vec<_>>());
        }
    }

    #[test]
    fn group_axioms() {
        let g = group("A3");
        for a in 0..g.order() {
            assert_eq!(g.mul(a, g.inverse(a)), 0);
            for b in 0..g.order() {
                let ab = g.mul(a, b);
                let expected = apply_all(&g, a, b);
                assert_eq!(g.element(ab).matrix(), &expected[..]);
            }
        }
    }

    fn apply_all(g: &WeylGroup, a: ElemId, b: ElemId) -> Vec<i64> {
        let k = g.rank();
        (0..k)
            .flat_map(|j| g.apply(a, &g.element(b).matrix()[j * k..(j + 1) * k]))
            .collect()
    }

    #[test]
    fn a2_inversions() {
        let g = group("A2");
        let s1 = g.parse_element("1").unwrap();
        let s1s2 = g.parse_element("1.2").unwrap();
        assert_eq!(g.inversions(s1), ids(&g, &[&[1, 0]]));
        assert_eq!(g.inversions(g.longest()), vec![0, 1, 2]);
        assert_eq!(g.inversions(s1s2), ids(&g, &[&[1, 0], &[1, 1]]));
    }

    #[test]
    fn a2_h_inversions() {
        let g = group("A2");
        let h = g.root_system().highest_root_hessenberg();
        let s1s2 = g.parse_element("1.2").unwrap();
        assert_eq!(
            g.h_inversions(g.longest(), &h),
            ids(&g, &[&[1, 0], &[0, 1]])
        );
        assert_eq!(g.h_inversions(s1s2, &h), ids(&g, &[&[1, 1]]));
        let full = g.root_system().full_hessenberg();
        for w in 0..6 {
            assert_eq!(g.h_inversions(w, &full), g.inversions(w));
        }
        assert_eq!(g.hessenberg_length(g.longest(), &h), 2);
        assert_eq!(g.hessenberg_length(0, &h), 0);
    }

    #[test]
    fn a2_graphs() {
        let g = group("A2");
        let full = g.bruhat_graph();
        assert_eq!(full.edges().len(), 9);
        let h = g.root_system().highest_root_hessenberg();
        let hg = g.hessenberg_graph(&h);
        // one edge into each of s1s2, s2s1 and w0 is deleted
        assert_eq!(hg.edges().len(), 6);
        let gamma = g.root_system().highest_root_id();
        let deleted: Vec<&Edge> = full
            .edges()
            .iter()
            .filter(|e| !hg.edges().contains(e))
            .collect();
        assert_eq!(deleted.len(), 3);
        for e in &deleted {
            let neg_gamma = g.root_system().negate_id(gamma);
            assert_eq!(g.act_root(g.inverse(e.target), e.root), neg_gamma);
        }
        let sgamma = g.reflection(gamma);
        assert!(deleted.iter().any(|e| e.source == 0 && e.target == sgamma));
        for w in 0..6 {
            assert_eq!(hg.in_degree(w), g.hessenberg_length(w, &h));
            for e in hg.in_edges(w) {
                assert_eq!(g.reflect_left(e.root, e.source), w);
                assert!(g.length(w) > g.length(e.source));
            }
        }
        assert!(hg.flow_up_leq(0, g.longest()));
        assert!(hg.flow_up_leq(3, 3));
    }

    #[test]
    fn bruhat_order_matches_graph_closure() {
        for t in ["A3", "B2", "G2"] {
            let g = group(t);
            assert_eq!(g.bruhat_order(), g.bruhat_graph().reachability());
        }
    }

    #[test]
    fn a2_covers() {
        let g = group("A2");
        let rs = g.root_system();
        let a1 = 0;
        let a2 = 1;
        let gamma = rs.highest_root_id();
        let (s1, s2, s1s2, s2s1) = (1, 2, 3, 4);
        let mut c = g.covers(0);
        c.sort();
        assert_eq!(c, vec![(s1, a1), (s2, a2)]);
        assert!(g.covers(g.longest()).is_empty());
        let mut c = g.covers(s1);
        c.sort();
        assert_eq!(c, vec![(s1s2, gamma), (s2s1, a2)]);
    }

    #[test]
    fn a2_gamma_partner() {
        let g = group("A2");
        let h = g.root_system().highest_root_hessenberg();
        let gamma = g.root_system().highest_root_id();
        assert_eq!(g.find_gamma_partner(&h, 1, 0).unwrap(), Some((3, gamma)));
        for i in 0..2 {
            assert_eq!(g.find_gamma_partner(&h, g.longest(), i).unwrap(), None);
        }
        assert_eq!(g.find_gamma_partner(&h, 0, 0).unwrap(), None);
    }

    #[test]
    fn reduced_word_cap() {
        let g = group("A3");
        assert_eq!(
            g.reduced_words(g.longest(), DEFAULT_WORD_CAP)
                .unwrap()
                .len(),
            16
        );
        assert!(matches!(
            g.reduced_words(g.longest(), 5),
            Err(Error::TooManyWords { .. })
        ));
    }

    #[test]
    fn conjugacy_class_counts() {
        assert_eq!(group("A2").conjugacy_classes().len(), 3);
        assert_eq!(group("A3").conjugacy_classes().len(), 5);
        assert_eq!(group("B2").conjugacy_classes().len(), 5);
        assert_eq!(group("D4").conjugacy_classes().len(), 13);
    }

    #[test]
    fn parse_names() {
        let g = group("A2");
        assert_eq!(g.parse_element("e").unwrap(), 0);
        assert_eq!(g.parse_element("2.1.2").unwrap(), g.longest());
        assert!(g.parse_element("3").is_err());
        assert!(g.parse_element("x").is_err());
    }
}
