//! Root systems of types A–G in explicit ambient coordinates.
//!
//! Coordinates are stored doubled, so `[1, -1, -1, -1]` is ½(e1−e2−e3−e4) and
//! `[2, -2, 0, 0]` is e1−e2. Every arithmetic step stays in `i32`.

use std::collections::HashMap;
use std::fmt;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::bits::{NodeSet, RootSet, MAX_ROOTS};
use crate::error::{Error, Result};

/// A vector of the ambient space, coordinates doubled.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootVector(pub Vec<i32>);

impl RootVector {
    pub fn zero(dim: usize) -> Self {
        RootVector(vec![0; dim])
    }

    /// `scale · e_i` with `i` 1-based; `scale` is in true units.
    pub fn e(dim: usize, i: usize, scale: i32) -> Self {
        let mut v = vec![0; dim];
        v[i - 1] = 2 * scale;
        RootVector(v)
    }

    /// Parses true (undoubled) integer coordinates.
    pub fn from_true(coords: &[i32]) -> Self {
        RootVector(coords.iter().map(|c| 2 * c).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn add(&self, o: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> RootVector {
        RootVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i32) -> RootVector {
        RootVector(self.0.iter().map(|a| k * a).collect())
    }

    /// Dot product of the doubled coordinates (four times the true one).
    pub fn dot(&self, o: &RootVector) -> i32 {
        self.0.iter().zip(&o.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm2(&self) -> i32 {
        self.dot(self)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Reflection through the hyperplane orthogonal to `a`.
    pub fn reflect(&self, a: &RootVector) -> RootVector {
        let k = 2 * self.dot(a) / a.norm2();
        self.sub(&a.scale(k))
    }
}

impl fmt::Display for RootVector {
    /// Writes `e1-e4`, `2e3`, or `1/2(e4-e1-e2-e3)` style expressions.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let half = self.0.iter().any(|c| c % 2 != 0);
        let mut out = String::new();
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let k = if half { c } else { c / 2 };
            let sign = if k < 0 {
                "-"
            } else if out.is_empty() {
                ""
            } else {
                "+"
            };
            let mag = k.abs();
            out.push_str(sign);
            if mag != 1 {
                out.push_str(&mag.to_string());
            }
            out.push_str(&format!("e{}", i + 1));
        }
        if out.is_empty() {
            out.push('0');
        }
        if half {
            write!(f, "1/2({out})")
        } else {
            write!(f, "{out}")
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    /// The rank when the family admits only one, as F4 and G2 do.
    pub fn fixed_rank(self) -> Option<usize> {
        match self {
            Family::F => Some(4),
            Family::G => Some(2),
            _ => None,
        }
    }

    pub fn is_legal(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }

    /// Number of roots of the simple system of this type.
    pub fn root_count(self, l: usize) -> usize {
        match self {
            Family::A => l * (l + 1),
            Family::B | Family::C => 2 * l * l,
            Family::D => 2 * l * (l - 1),
            Family::E => match l {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            Family::F => 48,
            Family::G => 12,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Which ambient realization of E6 to use. The two exceptional real forms of
/// E6 with black nodes are written in different coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum E6Coordinates {
    /// Simple roots e_i − e_{i+1} (i ≤ 5) and ζ_{4567}; highest root e7 − e8.
    SixPlusTwo,
    /// Simple roots e_i − e_{i+1} (i ≤ 4), e4 + e5 and ζ_∅.
    FivePlusThree,
}

pub(crate) const NO_SUM: u16 = u16::MAX;

/// A finite reduced root system with a fixed simple basis and exact
/// decomposition data.
#[derive(Clone)]
pub struct RootSystem {
    label: String,
    components: Vec<(Family, usize)>,
    dim: usize,
    roots: Vec<RootVector>,
    simple: Vec<usize>,
    coeffs: Vec<Vec<i32>>,
    index: HashMap<RootVector, usize>,
    sums: Vec<u16>,
    positive: RootSet,
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootSystem({}, {} roots)", self.label, self.roots.len())
    }
}

fn zeta(dim: usize, plus: &[usize]) -> RootVector {
    RootVector(
        (1..=dim)
            .map(|i| if plus.contains(&i) { 1 } else { -1 })
            .collect(),
    )
}

fn diff(dim: usize, i: usize, j: usize) -> RootVector {
    RootVector::e(dim, i, 1).sub(&RootVector::e(dim, j, 1))
}

fn plus(dim: usize, i: usize, j: usize) -> RootVector {
    RootVector::e(dim, i, 1).add(&RootVector::e(dim, j, 1))
}

/// Simple roots in the ambient coordinates used for each type.
fn simple_basis(family: Family, l: usize, e6: E6Coordinates) -> Vec<RootVector> {
    match family {
        Family::A => (1..=l).map(|i| diff(l + 1, i, i + 1)).collect(),
        Family::B => {
            let mut b: Vec<_> = (1..l).map(|i| diff(l, i, i + 1)).collect();
            b.push(RootVector::e(l, l, 1));
            b
        }
        Family::C => {
            let mut b: Vec<_> = (1..l).map(|i| diff(l, i, i + 1)).collect();
            b.push(RootVector::e(l, l, 2));
            b
        }
        Family::D => {
            let mut b: Vec<_> = (1..l).map(|i| diff(l, i, i + 1)).collect();
            b.push(plus(l, l - 1, l));
            b
        }
        Family::E => match (l, e6) {
            (6, E6Coordinates::SixPlusTwo) => {
                let mut b: Vec<_> = (1..=5).map(|i| diff(8, i, i + 1)).collect();
                b.push(zeta(8, &[4, 5, 6, 7]));
                b
            }
            (6, E6Coordinates::FivePlusThree) => {
                let mut b: Vec<_> = (1..=4).map(|i| diff(8, i, i + 1)).collect();
                b.push(plus(8, 4, 5));
                b.push(zeta(8, &[]));
                b
            }
            (7, _) => {
                let mut b: Vec<_> = (1..=5).map(|i| diff(8, i, i + 1)).collect();
                b.push(plus(8, 5, 6));
                b.push(zeta(8, &[]));
                b
            }
            _ => {
                let mut b: Vec<_> = (1..=6).map(|i| diff(8, i, i + 1)).collect();
                b.push(plus(8, 6, 7));
                b.push(zeta(8, &[]));
                b
            }
        },
        Family::F => vec![
            diff(4, 1, 2),
            diff(4, 2, 3),
            RootVector::e(4, 3, 1),
            RootVector(vec![-1, -1, -1, 1]),
        ],
        Family::G => vec![
            RootVector::from_true(&[1, -1, 0]),
            RootVector::from_true(&[-2, 1, 1]),
        ],
    }
}

/// Root system of the given type in its standard coordinates.
pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem> {
    build_root_system_with(family, rank, E6Coordinates::SixPlusTwo)
}

/// Like [`build_root_system`], choosing the E6 realization explicitly.
pub fn build_root_system_with(
    family: Family,
    rank: usize,
    e6: E6Coordinates,
) -> Result<RootSystem> {
    if !family.is_legal(rank) {
        return Err(Error::IllegalTypeRank {
            family: family.letter(),
            rank,
        });
    }
    let basis = simple_basis(family, rank, e6);
    Ok(RootSystem::from_simple_roots(
        format!("{family}{rank}"),
        vec![(family, rank)],
        basis,
    ))
}

/// Two orthogonal copies of a simple system side by side; the first copy
/// occupies the first half of the coordinates. Simple roots of the second
/// copy follow those of the first.
pub fn build_doubled(family: Family, rank: usize) -> Result<RootSystem> {
    let one = build_root_system(family, rank)?;
    let m = one.dim;
    let mut basis = Vec::with_capacity(2 * rank);
    for copy in 0..2 {
        for &s in &one.simple {
            let mut v = vec![0; 2 * m];
            v[copy * m..(copy + 1) * m].copy_from_slice(&one.roots[s].0);
            basis.push(RootVector(v));
        }
    }
    Ok(RootSystem::from_simple_roots(
        format!("{family}{rank}+{family}{rank}"),
        vec![(family, rank), (family, rank)],
        basis,
    ))
}

/// Inverse of a square rational matrix by Gauss–Jordan elimination.
fn invert(mut a: Vec<Vec<Rational64>>) -> Vec<Vec<Rational64>> {
    let n = a.len();
    let zero = Rational64::from_integer(0);
    let one = Rational64::from_integer(1);
    let mut inv: Vec<Vec<Rational64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { one } else { zero }).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| a[r][col] != zero)
            .expect("Gram matrix of a basis is invertible");
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && a[r][col] != zero {
                let f = a[r][col];
                for j in 0..n {
                    let (ac, ic) = (a[col][j], inv[col][j]);
                    a[r][j] -= f * ac;
                    inv[r][j] -= f * ic;
                }
            }
        }
    }
    inv
}

/// Integer left inverse of the basis matrix, with its common denominator.
struct Solver {
    rows: Vec<Vec<i64>>,
    denom: i64,
}

impl Solver {
    fn new(basis: &[RootVector]) -> Solver {
        let l = basis.len();
        let gram: Vec<Vec<Rational64>> = (0..l)
            .map(|i| {
                (0..l)
                    .map(|j| Rational64::from_integer(basis[i].dot(&basis[j]) as i64))
                    .collect()
            })
            .collect();
        let ginv = invert(gram);
        let dim = basis[0].dim();
        // left inverse L = G⁻¹ Bᵀ, acting on doubled coordinates and giving true coefficients
        // after multiplying by the doubled basis: c = G⁻¹ Bᵀ v.
        let rat: Vec<Vec<Rational64>> = (0..l)
            .map(|i| {
                (0..dim)
                    .map(|k| {
                        (0..l).fold(Rational64::from_integer(0), |acc, j| {
                            acc + ginv[i][j] * Rational64::from_integer(basis[j].0[k] as i64)
                        })
                    })
                    .collect()
            })
            .collect();
        let denom = rat.iter().flatten().fold(1i64, |d, r| lcm(d, *r.denom()));
        let rows = rat
            .iter()
            .map(|row| {
                row.iter()
                    .map(|r| (r * Rational64::from_integer(denom)).to_integer())
                    .collect()
            })
            .collect();
        Solver { rows, denom }
    }

    fn solve(&self, basis: &[RootVector], v: &RootVector) -> Result<Vec<i32>> {
        let mut c = Vec::with_capacity(self.rows.len());
        for row in &self.rows {
            let num: i64 = row.iter().zip(&v.0).map(|(a, &b)| a * b as i64).sum();
            if num % self.denom != 0 {
                return Err(Error::NotInSpan);
            }
            c.push((num / self.denom) as i32);
        }
        let mut back = RootVector::zero(v.dim());
        for (k, b) in c.iter().zip(basis) {
            back = back.add(&b.scale(*k));
        }
        if &back != v {
            return Err(Error::NotInSpan);
        }
        Ok(c)
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

impl RootSystem {
    /// Closes the simple roots under their reflections, then fixes the
    /// canonical order: positive roots in lexicographic order of doubled
    /// coordinates, each immediately followed by its negative.
    pub fn from_simple_roots(
        label: String,
        components: Vec<(Family, usize)>,
        basis: Vec<RootVector>,
    ) -> RootSystem {
        let dim = basis[0].dim();
        let mut seen: HashMap<RootVector, ()> = basis.iter().map(|b| (b.clone(), ())).collect();
        let mut frontier = basis.clone();
        while let Some(v) = frontier.pop() {
            for a in &basis {
                let w = v.reflect(a);
                if !seen.contains_key(&w) {
                    seen.insert(w.clone(), ());
                    frontier.push(w);
                }
            }
        }
        let solver = Solver::new(&basis);
        let mut positives: Vec<(RootVector, Vec<i32>)> = seen
            .into_keys()
            .filter_map(|v| {
                let c = solver
                    .solve(&basis, &v)
                    .expect("reflections stay in the root lattice");
                c.iter().all(|&x| x >= 0).then_some((v, c))
            })
            .collect();
        positives.sort();
        assert!(2 * positives.len() <= MAX_ROOTS);
        let mut roots = Vec::with_capacity(2 * positives.len());
        let mut coeffs = Vec::with_capacity(2 * positives.len());
        let mut positive = RootSet::empty();
        for (v, c) in positives {
            positive.insert(roots.len());
            roots.push(v.clone());
            coeffs.push(c.clone());
            roots.push(v.neg());
            coeffs.push(c.iter().map(|x| -x).collect());
        }
        let index: HashMap<RootVector, usize> = roots
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, r)| (r, i))
            .collect();
        let simple = basis.iter().map(|b| index[b]).collect();
        let n = roots.len();
        let mut sums = vec![NO_SUM; n * n];
        for i in 0..n {
            for j in 0..n {
                if let Some(&k) = index.get(&roots[i].add(&roots[j])) {
                    sums[i * n + j] = k as u16;
                }
            }
        }
        RootSystem {
            label,
            components,
            dim,
            roots,
            simple,
            coeffs,
            index,
            sums,
            positive,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn components(&self) -> &[(Family, usize)] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn roots(&self) -> &[RootVector] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &RootVector {
        &self.roots[i]
    }

    /// Root indices of the simple roots, in basis order.
    pub fn simple_indices(&self) -> &[usize] {
        &self.simple
    }

    pub fn simple_root(&self, a: usize) -> &RootVector {
        &self.roots[self.simple[a]]
    }

    pub fn all(&self) -> RootSet {
        RootSet::full(self.roots.len())
    }

    pub fn positive(&self) -> RootSet {
        self.positive
    }

    pub fn is_positive(&self, i: usize) -> bool {
        self.positive.contains(i)
    }

    /// Index of `-root(i)`.
    pub fn negate(&self, i: usize) -> usize {
        i ^ 1
    }

    pub fn index_of(&self, v: &RootVector) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn is_root(&self, v: &RootVector) -> bool {
        self.index.contains_key(v)
    }

    /// `root(i) + root(j)` when that sum is a root.
    #[inline]
    pub fn sum_index(&self, i: usize, j: usize) -> Option<usize> {
        let k = self.sums[i * self.roots.len() + j];
        (k != NO_SUM).then_some(k as usize)
    }

    pub fn add(&self, b: &RootVector, c: &RootVector) -> Option<RootVector> {
        let s = b.add(c);
        self.is_root(&s).then_some(s)
    }

    /// Coefficients of `root(i)` on the simple basis.
    pub fn coeffs(&self, i: usize) -> &[i32] {
        &self.coeffs[i]
    }

    /// Exact coordinates of `v` on the simple basis.
    pub fn decompose(&self, v: &RootVector) -> Result<Vec<i32>> {
        if v.dim() != self.dim {
            return Err(Error::NotInSpan);
        }
        if let Some(i) = self.index_of(v) {
            return Ok(self.coeffs[i].clone());
        }
        let basis: Vec<RootVector> = self.simple.iter().map(|&s| self.roots[s].clone()).collect();
        Solver::new(&basis).solve(&basis, v)
    }

    pub fn support(&self, v: &RootVector) -> Result<NodeSet> {
        let i = self.index_of(v).ok_or(Error::NotARoot)?;
        Ok(self.support_of(i))
    }

    pub fn support_of(&self, i: usize) -> NodeSet {
        self.coeffs[i]
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .fold(NodeSet::EMPTY, |s, (a, _)| s.with(a))
    }

    pub fn height(&self, i: usize) -> i32 {
        self.coeffs[i].iter().sum()
    }

    /// Cartan integer ⟨α_a, α_b^∨⟩ = 2(α_a, α_b)/(α_b, α_b).
    pub fn cartan(&self, a: usize, b: usize) -> i32 {
        let (x, y) = (self.simple_root(a), self.simple_root(b));
        2 * x.dot(y) / y.norm2()
    }

    /// Whether two distinct simple roots are joined in the Dynkin diagram.
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        a != b && self.simple_root(a).dot(self.simple_root(b)) != 0
    }

    pub fn neighbours(&self, a: usize) -> NodeSet {
        (0..self.rank())
            .filter(|&b| self.adjacent(a, b))
            .fold(NodeSet::EMPTY, |s, b| s.with(b))
    }

    /// Connected component of `start` inside the node set `within`.
    pub fn component(&self, start: NodeSet, within: NodeSet) -> NodeSet {
        let mut comp = start.intersection(within);
        loop {
            let grown = comp.iter().fold(comp, |s, a| {
                s.union(self.neighbours(a).intersection(within))
            });
            if grown == comp {
                return comp;
            }
            comp = grown;
        }
    }

    pub fn is_connected(&self, nodes: NodeSet) -> bool {
        match nodes.iter().next() {
            None => true,
            Some(a) => self.component(NodeSet::single(a), nodes) == nodes,
        }
    }

    /// Applies an ambient linear map given by its matrix (true entries).
    pub fn apply_matrix(m: &[Vec<i32>], v: &RootVector) -> RootVector {
        RootVector(
            m.iter()
                .map(|row| row.iter().zip(&v.0).map(|(a, b)| a * b).sum())
                .collect(),
        )
    }

    pub fn root_set<'a>(&self, vs: impl IntoIterator<Item = &'a RootVector>) -> Result<RootSet> {
        vs.into_iter()
            .map(|v| self.index_of(v).ok_or(Error::NotARoot))
            .collect()
    }
}
