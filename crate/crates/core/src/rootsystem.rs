//! Finite crystallographic root systems in the simple-root basis.
//!
//! The bilinear form is never realized in an ambient Euclidean space. It is
//! recovered from the Cartan matrix as `(a_i, a_j) = d_i * C[i][j]`, where `d`
//! is the minimal positive integer symmetrizer.
//!
//! Cartan matrix conventions (`C[i][j] = 2(a_i, a_j) / (a_i, a_i)`):
//!
//! | type | matrix                       | long roots | highest root |
//! |------|------------------------------|------------|--------------|
//! | A_n  | tridiagonal, -1 off diagonal | all        | (1,...,1)    |
//! | B_2  | [[2,-1],[-2,2]]              | a1         | (1,2)        |
//! | C_2  | [[2,-2],[-1,2]]              | a2         | (2,1)        |
//! | G_2  | [[2,-1],[-3,2]]              | a1         | (2,3)        |
//! | D_4  | a2 is the branch node        | all        | (1,2,1,1)    |

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    G,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let t = CartanType { family, rank };
        let ok = match family {
            Family::A => (1..=5).contains(&rank),
            Family::B | Family::C | Family::G => rank == 2,
            Family::D => rank == 4,
        };
        if ok {
            Ok(t)
        } else {
            Err(Error::UnsupportedType(t.to_string()))
        }
    }

    /// Every supported instance, in a fixed order.
    pub fn supported() -> Vec<CartanType> {
        let mut out: Vec<_> = (1..=5)
            .map(|n| CartanType {
                family: Family::A,
                rank: n,
            })
            .collect();
        for family in [Family::B, Family::C, Family::G] {
            out.push(CartanType { family, rank: 2 });
        }
        out.push(CartanType {
            family: Family::D,
            rank: 4,
        });
        out
    }

    /// All roots have the same length.
    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D)
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let k = self.rank;
        let mut c = vec![vec![0i64; k]; k];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        match self.family {
            Family::A => {
                for i in 0..k.saturating_sub(1) {
                    c[i][i + 1] = -1;
                    c[i + 1][i] = -1;
                }
            }
            Family::B => {
                c[0][1] = -1;
                c[1][0] = -2;
            }
            Family::C => {
                c[0][1] = -2;
                c[1][0] = -1;
            }
            Family::G => {
                c[0][1] = -1;
                c[1][0] = -3;
            }
            Family::D => {
                for leaf in [0, 2, 3] {
                    c[1][leaf] = -1;
                    c[leaf][1] = -1;
                }
            }
        }
        c
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::Parse("empty type".into()))?;
        let family = match letter.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'G' => Family::G,
            _ => return Err(Error::UnsupportedType(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("bad Cartan type {s:?}")))?;
        CartanType::new(family, rank)
    }
}

/// Integer coordinates in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn simple(rank: usize, i: usize) -> Root {
        let mut v = vec![0; rank];
        v[i] = 1;
        Root(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn add_scaled(&self, c: i64, other: &Root) -> Root {
        Root(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + c * b)
                .collect(),
        )
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Root {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        inner
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad root coordinates {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Root)
    }
}

/// Index into [`RootSystem::roots`]. Positive roots come first.
pub type RootId = usize;

#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    /// `form[i][j] = (a_i, a_j)`.
    form: Vec<Vec<i64>>,
    roots: Vec<Root>,
    index: HashMap<Root, RootId>,
    n_pos: usize,
    highest: RootId,
}

impl RootSystem {
    /// Generates the roots by closing the simple roots under simple reflections.
    pub fn new(cartan_type: CartanType) -> Result<Self> {
        let cartan_type = CartanType::new(cartan_type.family, cartan_type.rank)?;
        let k = cartan_type.rank;
        let cartan = cartan_type.cartan_matrix();
        let symmetrizer = symmetrizer(&cartan);
        let form: Vec<Vec<i64>> = (0..k)
            .map(|i| (0..k).map(|j| symmetrizer[i] * cartan[i][j]).collect())
            .collect();
        debug_assert!((0..k).all(|i| (0..k).all(|j| form[i][j] == form[j][i])));

        let mut seen: HashMap<Root, ()> = HashMap::new();
        let mut queue: VecDeque<Root> = (0..k).map(|i| Root::simple(k, i)).collect();
        for r in &queue {
            seen.insert(r.clone(), ());
        }
        while let Some(r) = queue.pop_front() {
            for i in 0..k {
                let c: i64 = (0..k).map(|j| cartan[i][j] * r.0[j]).sum();
                let image = r.add_scaled(-c, &Root::simple(k, i));
                if !seen.contains_key(&image) {
                    seen.insert(image.clone(), ());
                    queue.push_back(image);
                }
            }
        }

        let mut positive: Vec<Root> = seen.into_keys().filter(Root::is_positive).collect();
        positive.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.0.cmp(&a.0)));
        let n_pos = positive.len();
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(Root::neg));
        let index = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();

        let mut rs = RootSystem {
            cartan_type,
            cartan,
            symmetrizer,
            form,
            roots,
            index,
            n_pos,
            highest: 0,
        };
        rs.highest = (0..n_pos)
            .find(|&a| (0..n_pos).all(|b| rs.dominance_leq_ids(b, a)))
            .expect("irreducible root system has a highest root");
        Ok(rs)
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.n_pos]
    }

    pub fn n_positive(&self) -> usize {
        self.n_pos
    }

    pub fn root(&self, id: RootId) -> &Root {
        &self.roots[id]
    }

    pub fn root_id(&self, r: &Root) -> Option<RootId> {
        self.index.get(r).copied()
    }

    fn require(&self, r: &Root) -> Result<RootId> {
        self.root_id(r)
            .ok_or_else(|| Error::NotARoot(r.to_string()))
    }

    pub fn is_positive_id(&self, id: RootId) -> bool {
        id < self.n_pos
    }

    pub fn negate_id(&self, id: RootId) -> RootId {
        if id < self.n_pos {
            id + self.n_pos
        } else {
            id - self.n_pos
        }
    }

    pub fn simple_root_id(&self, i: usize) -> RootId {
        // Simple roots are the height-one roots, sorted to the front in index order.
        i
    }

    pub fn highest_root(&self) -> &Root {
        &self.roots[self.highest]
    }

    pub fn highest_root_id(&self) -> RootId {
        self.highest
    }

    /// The symmetric bilinear form on integer coordinate vectors.
    pub fn form(&self, a: &[i64], b: &[i64]) -> i64 {
        let k = self.rank();
        let mut s = 0;
        for i in 0..k {
            if a[i] == 0 {
                continue;
            }
            for j in 0..k {
                s += a[i] * self.form[i][j] * b[j];
            }
        }
        s
    }

    /// `2(a, b) / (a, a)`.
    pub fn cartan_integer(&self, a: &Root, b: &Root) -> Result<i64> {
        self.require(a)?;
        self.require(b)?;
        Ok(self.cartan_integer_unchecked(&a.0, &b.0))
    }

    pub fn cartan_integer_ids(&self, a: RootId, b: RootId) -> i64 {
        self.cartan_integer_unchecked(&self.roots[a].0, &self.roots[b].0)
    }

    fn cartan_integer_unchecked(&self, a: &[i64], b: &[i64]) -> i64 {
        let num = 2 * self.form(a, b);
        let den = self.form(a, a);
        let (q, r) = num.div_rem(&den);
        assert_eq!(r, 0, "Cartan integer is not integral");
        q
    }

    /// `s_a(v) = v - c_{a v} a`. `v` may be any integer vector.
    pub fn reflect(&self, a: &Root, v: &Root) -> Result<Root> {
        self.require(a)?;
        let num = 2 * self.form(&a.0, &v.0);
        let den = self.form(&a.0, &a.0);
        if num % den != 0 {
            // Only happens for vectors outside the root lattice's coroot pairing.
            return Err(Error::NotARoot(v.to_string()));
        }
        Ok(v.add_scaled(-(num / den), a))
    }

    /// `a <= b`: equal, or `b - a` is nonzero with nonnegative coordinates.
    pub fn dominance_leq(&self, a: &Root, b: &Root) -> Result<bool> {
        let a = self.require(a)?;
        let b = self.require(b)?;
        Ok(self.dominance_leq_ids(a, b))
    }

    pub fn dominance_leq_ids(&self, a: RootId, b: RootId) -> bool {
        a == b
            || self.roots[a]
                .0
                .iter()
                .zip(&self.roots[b].0)
                .all(|(x, y)| y >= x)
    }

    pub fn make_hessenberg(&self, removed: &[Root]) -> Result<HessenbergSet> {
        let mut mask = vec![true; self.n_pos];
        for r in removed {
            let id = self.require(r)?;
            if !self.is_positive_id(id) {
                return Err(Error::NotARoot(format!("{r} is not a positive root")));
            }
            mask[id] = false;
        }
        HessenbergSet::from_mask(self, mask)
    }

    /// `Phi+` minus the highest root.
    pub fn highest_root_hessenberg(&self) -> HessenbergSet {
        self.make_hessenberg(&[self.highest_root().clone()])
            .expect("the highest root alone is an upper ideal")
    }

    pub fn full_hessenberg(&self) -> HessenbergSet {
        HessenbergSet {
            members: vec![true; self.n_pos],
        }
    }

    /// Every Hessenberg set, enumerated through the subsets of `Phi+`.
    pub fn all_hessenberg_sets(&self) -> Vec<HessenbergSet> {
        assert!(
            self.n_pos < 24,
            "too many positive roots to enumerate ideals"
        );
        (0u32..(1 << self.n_pos))
            .filter_map(|bits| {
                let mask = (0..self.n_pos).map(|i| bits & (1 << i) == 0).collect();
                HessenbergSet::from_mask(self, mask).ok()
            })
            .collect()
    }

    /// Linear-form coefficients of a root id, as `i64`s.
    pub fn coords(&self, id: RootId) -> &[i64] {
        &self.roots[id].0
    }
}

fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<i64> {
    use num_rational::Ratio;
    let k = cartan.len();
    let mut d: Vec<Option<Ratio<i64>>> = vec![None; k];
    d[0] = Some(Ratio::from_integer(1));
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..k {
            if i != j && cartan[i][j] != 0 && d[j].is_none() {
                // d_i C_ij = d_j C_ji
                d[j] = Some(d[i].unwrap() * cartan[i][j] / cartan[j][i]);
                stack.push(j);
            }
        }
    }
    let d: Vec<Ratio<i64>> = d
        .into_iter()
        .map(|x| x.expect("connected diagram"))
        .collect();
    let lcm = d.iter().fold(1i64, |acc, r| acc.lcm(r.denom()));
    let ints: Vec<i64> = d.iter().map(|r| (r * lcm).to_integer()).collect();
    let g = ints.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    ints.into_iter().map(|x| x / g).collect()
}

/// A subset of positive roots whose complement is upward closed in dominance order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HessenbergSet {
    members: Vec<bool>,
}

impl HessenbergSet {
    fn from_mask(rs: &RootSystem, members: Vec<bool>) -> Result<Self> {
        let n = rs.n_positive();
        for beta in 0..n {
            if members[beta] {
                continue;
            }
            for alpha in 0..n {
                if members[alpha] && rs.dominance_leq_ids(beta, alpha) {
                    return Err(Error::NotAnIdeal {
                        beta: rs.root(beta).to_string(),
                        alpha: rs.root(alpha).to_string(),
                    });
                }
            }
        }
        Ok(HessenbergSet { members })
    }

    /// Membership of a positive root id.
    pub fn contains(&self, pos: RootId) -> bool {
        pos < self.members.len() && self.members[pos]
    }

    /// Whether the root with this id lies in `-h`.
    pub fn contains_negated(&self, rs: &RootSystem, id: RootId) -> bool {
        !rs.is_positive_id(id) && self.members[rs.negate_id(id)]
    }

    pub fn root_ids(&self) -> Vec<RootId> {
        (0..self.members.len())
            .filter(|&i| self.members[i])
            .collect()
    }

    pub fn ideal_ids(&self) -> Vec<RootId> {
        (0..self.members.len())
            .filter(|&i| !self.members[i])
            .collect()
    }

    pub fn roots(&self, rs: &RootSystem) -> Vec<Root> {
        self.root_ids()
            .into_iter()
            .map(|i| rs.root(i).clone())
            .collect()
    }

    pub fn ideal(&self, rs: &RootSystem) -> Vec<Root> {
        self.ideal_ids()
            .into_iter()
            .map(|i| rs.root(i).clone())
            .collect()
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_full(&self) -> bool {
        self.members.iter().all(|&m| m)
    }

    pub fn is_highest_root_set(&self, rs: &RootSystem) -> bool {
        self.ideal_ids() == vec![rs.highest_root_id()]
    }
}
