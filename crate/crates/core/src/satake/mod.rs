//! Real forms as conjugations of a root system: σ, root classes, black
//! nodes and the involution ε of the simple basis.

mod diagram;
mod rules;
mod spec;

pub use diagram::render_diagram;
pub use rules::{validate_conjugation_rules, ConjugationReport, Pattern, RuleCheck};
pub use spec::{catalogue, default_instances, resolve, CatalogueEntry, FormSpec, Resolved, Shape};

use std::fmt;

use serde::Serialize;

use crate::bits::{NodeSet, RootSet};
use crate::error::{Error, Result};
use crate::rootspace::{
    build_doubled, build_root_system_with, E6Coordinates, Family, RootSystem, RootVector,
};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum RootClass {
    Real,
    Imaginary,
    Complex,
}

/// A catalogued real form.
#[derive(Clone, Debug)]
pub struct RealForm {
    resolved: Resolved,
    rs: RootSystem,
    sigma: Vec<Vec<i32>>,
    perm: Vec<usize>,
    classes: Vec<RootClass>,
    imaginary: RootSet,
    black: NodeSet,
    eps: Vec<usize>,
}

/// Signed permutation of e_1..e_m: entry i-1 is (j, s) for e_i ↦ s·e_j.
type SignedPerm = Vec<(usize, i32)>;

fn identity(m: usize) -> SignedPerm {
    (1..=m).map(|i| (i, 1)).collect()
}

fn fix_then_negate(m: usize, fixed: &[usize]) -> SignedPerm {
    (1..=m)
        .map(|i| (i, if fixed.contains(&i) { 1 } else { -1 }))
        .collect()
}

/// Swaps e_{2i−1} and e_{2i} for i ≤ pairs; the rest go to `rest`·e_i.
fn swap_pairs(m: usize, pairs: usize, rest: i32) -> SignedPerm {
    (1..=m)
        .map(|i| {
            if i <= 2 * pairs {
                (if i % 2 == 1 { i + 1 } else { i - 1 }, 1)
            } else {
                (i, rest)
            }
        })
        .collect()
}

fn matrix(perm: &SignedPerm) -> Vec<Vec<i32>> {
    let m = perm.len();
    let mut a = vec![vec![0; m]; m];
    for (i, &(j, s)) in perm.iter().enumerate() {
        a[j - 1][i] = s;
    }
    a
}

fn ambient_of(r: &Resolved) -> Result<(RootSystem, Vec<Vec<i32>>)> {
    let (family, l) = (r.family, r.rank);
    if r.shape == Shape::Complex {
        let rs = build_doubled(family, l)?;
        let m = rs.ambient_dim() / 2;
        let perm: SignedPerm = (1..=2 * m)
            .map(|i| (if i <= m { i + m } else { i - m }, 1))
            .collect();
        return Ok((rs, matrix(&perm)));
    }
    let coords = if r.shape == Shape::EIV {
        E6Coordinates::FivePlusThree
    } else {
        E6Coordinates::SixPlusTwo
    };
    let rs = build_root_system_with(family, l, coords)?;
    let m = rs.ambient_dim();
    let perm = match r.shape {
        Shape::Split => identity(m),
        Shape::Compact => (1..=m).map(|i| (i, -1)).collect(),
        Shape::Complex => unreachable!(),
        Shape::Unitary { p } => {
            let q = l + 1 - p;
            (1..=m)
                .map(|i| {
                    if i <= p || i > q {
                        (m + 1 - i, -1)
                    } else {
                        (i, -1)
                    }
                })
                .collect()
        }
        Shape::Quaternionic { .. } => swap_pairs(m, m / 2, 1),
        Shape::OddOrthogonal { p } | Shape::EvenOrthogonal { p } => {
            fix_then_negate(m, &(1..=p).collect::<Vec<_>>())
        }
        Shape::QuaternionicSymplectic { p } => swap_pairs(m, p, -1),
        Shape::StarOrthogonal => swap_pairs(m, l / 2, -1),
        Shape::EII => (1..=8)
            .map(|i| match i {
                7 => (8, -1),
                8 => (7, -1),
                _ => (7 - i, -1),
            })
            .collect(),
        Shape::EIII => (1..=8)
            .map(|i| match i {
                1 => (6, -1),
                6 => (1, -1),
                7 => (8, -1),
                8 => (7, -1),
                _ => (i, -1),
            })
            .collect(),
        Shape::EIV => fix_then_negate(8, &[1, 6, 7, 8]),
        Shape::EVI => swap_pairs(8, 4, 1),
        Shape::EVII => fix_then_negate(8, &[1, 2, 7, 8]),
        Shape::EIX => fix_then_negate(8, &[1, 2, 3, 8]),
        Shape::FII => fix_then_negate(4, &[4]),
    };
    Ok((rs, matrix(&perm)))
}

fn violation(label: &str, what: String) -> Error {
    Error::SChamberViolation(format!("{label}: {what}"))
}

/// Builds and validates a catalogued form.
pub fn build_form(spec: &FormSpec) -> Result<RealForm> {
    let resolved = resolve(spec)?;
    let (rs, sigma) = ambient_of(&resolved)?;
    RealForm::new(resolved, rs, sigma)
}

/// Parses a specifier and builds the form.
pub fn build_form_str(spec: &str) -> Result<RealForm> {
    build_form(&spec.parse()?)
}

impl RealForm {
    fn new(resolved: Resolved, rs: RootSystem, sigma: Vec<Vec<i32>>) -> Result<RealForm> {
        let label = resolved.label.clone();
        let m = rs.ambient_dim();
        let sq: Vec<Vec<i32>> = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| (0..m).map(|k| sigma[i][k] * sigma[k][j]).sum())
                    .collect()
            })
            .collect();
        if (0..m).any(|i| (0..m).any(|j| sq[i][j] != i32::from(i == j))) {
            return Err(violation(&label, "σ is not an involution".into()));
        }
        let mut perm = Vec::with_capacity(rs.len());
        for (i, r) in rs.roots().iter().enumerate() {
            let image = RootSystem::apply_matrix(&sigma, r);
            let j = rs
                .index_of(&image)
                .ok_or_else(|| violation(&label, format!("σ({r}) = {image} is not a root")))?;
            if rs.is_positive(i) && !rs.is_positive(j) && j != rs.negate(i) {
                return Err(violation(&label, format!("σ({r}) = {image} is negative")));
            }
            perm.push(j);
        }
        let classes: Vec<RootClass> = (0..rs.len())
            .map(|i| {
                if perm[i] == i {
                    RootClass::Real
                } else if perm[i] == rs.negate(i) {
                    RootClass::Imaginary
                } else {
                    RootClass::Complex
                }
            })
            .collect();
        let imaginary: RootSet = (0..rs.len())
            .filter(|&i| classes[i] == RootClass::Imaginary)
            .collect();
        let black = (0..rs.rank())
            .filter(|&a| imaginary.contains(rs.simple_indices()[a]))
            .fold(NodeSet::EMPTY, |s, a| s.with(a));
        let mut eps = Vec::with_capacity(rs.rank());
        for a in 0..rs.rank() {
            if black.contains(a) {
                eps.push(a);
                continue;
            }
            let c = rs.coeffs(perm[rs.simple_indices()[a]]);
            let whites: Vec<usize> = (0..rs.rank())
                .filter(|&b| !black.contains(b) && c[b] != 0)
                .collect();
            let ok = whites.len() == 1 && c[whites[0]] == 1 && (0..rs.rank()).all(|b| c[b] >= 0);
            if !ok {
                return Err(violation(
                    &label,
                    format!("σ(α{}) has coefficients {c:?}", a + 1),
                ));
            }
            eps.push(whites[0]);
        }
        if (0..eps.len()).any(|a| eps[eps[a]] != a) {
            return Err(violation(&label, "ε is not an involution".into()));
        }
        Ok(RealForm {
            resolved,
            rs,
            sigma,
            perm,
            classes,
            imaginary,
            black,
            eps,
        })
    }

    /// Canonical label, e.g. `AIV` or `SPLIT:D`.
    pub fn name(&self) -> &str {
        &self.resolved.label
    }

    /// Canonical specifier of this form.
    pub fn spec(&self) -> FormSpec {
        self.resolved.spec()
    }

    pub fn p(&self) -> Option<usize> {
        self.resolved.p
    }

    pub fn family(&self) -> Family {
        self.resolved.family
    }

    pub fn shape(&self) -> Shape {
        self.resolved.shape
    }

    pub fn is_complex_type(&self) -> bool {
        self.resolved.shape == Shape::Complex
    }

    pub fn rs(&self) -> &RootSystem {
        &self.rs
    }

    /// Rank of the whole system (twice the simple rank for complex type).
    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// σ as a matrix on true ambient coordinates.
    pub fn sigma_matrix(&self) -> &[Vec<i32>] {
        &self.sigma
    }

    pub fn sigma_vector(&self, v: &RootVector) -> RootVector {
        RootSystem::apply_matrix(&self.sigma, v)
    }

    /// σ on root indices.
    #[inline]
    pub fn sigma(&self, i: usize) -> usize {
        self.perm[i]
    }

    pub fn sigma_set(&self, s: &RootSet) -> RootSet {
        s.iter().map(|i| self.perm[i]).collect()
    }

    pub fn class_of(&self, i: usize) -> RootClass {
        self.classes[i]
    }

    pub fn classify_root(&self, v: &RootVector) -> Result<RootClass> {
        self.rs
            .index_of(v)
            .map(|i| self.classes[i])
            .ok_or(Error::NotARoot)
    }

    /// All imaginary roots, R_•.
    pub fn imaginary(&self) -> RootSet {
        self.imaginary
    }

    /// Black nodes B_•.
    pub fn black(&self) -> NodeSet {
        self.black
    }

    pub fn white(&self) -> NodeSet {
        NodeSet::all(self.rank()).difference(self.black)
    }

    /// ε on a simple-root index.
    pub fn epsilon(&self, a: usize) -> Result<usize> {
        self.eps.get(a).copied().ok_or(Error::NotSimple(a))
    }

    pub fn epsilon_set(&self, s: NodeSet) -> NodeSet {
        s.iter().fold(NodeSet::EMPTY, |t, a| t.with(self.eps[a]))
    }

    /// Coefficients of σ(α_a) on the simple basis.
    pub fn sigma_simple_coeffs(&self, a: usize) -> &[i32] {
        self.rs.coeffs(self.perm[self.rs.simple_indices()[a]])
    }
}

impl fmt::Display for RealForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn root(form: &RealForm, coords: &[i32]) -> RootVector {
        let _ = form;
        RootVector::from_true(coords)
    }

    #[test]
    fn su13_sigma_and_classes() {
        let f = build_form_str("AIIIa p=1 l=3").unwrap();
        assert_eq!(f.name(), "AIV");
        let e1 = RootVector::e(4, 1, 1);
        assert_eq!(f.sigma_vector(&e1), RootVector::e(4, 4, -1));
        assert_eq!(
            f.sigma_vector(&RootVector::e(4, 2, 1)),
            RootVector::e(4, 2, -1)
        );
        assert_eq!(
            f.sigma_vector(&RootVector::e(4, 3, 1)),
            RootVector::e(4, 3, -1)
        );
        assert_eq!(
            f.classify_root(&root(&f, &[0, 1, -1, 0])).unwrap(),
            RootClass::Imaginary
        );
        assert_eq!(
            f.classify_root(&root(&f, &[1, -1, 0, 0])).unwrap(),
            RootClass::Complex
        );
        assert_eq!(f.epsilon(0).unwrap(), 2);
        assert_eq!(f.epsilon(1).unwrap(), 1);
        assert_eq!(f.black().labels(), vec![2]);
        assert!(matches!(f.epsilon(7), Err(Error::NotSimple(7))));
    }

    #[test]
    fn split_and_compact_classes() {
        let s = build_form_str("SPLIT:A l=2").unwrap();
        assert!((0..s.rs().len()).all(|i| s.class_of(i) == RootClass::Real));
        let s = build_form_str("SPLIT:B l=2").unwrap();
        assert!((0..s.rs().len()).all(|i| s.class_of(i) == RootClass::Real));
        let c = build_form_str("COMPACT:E l=7").unwrap();
        assert_eq!(c.imaginary().len(), 126);
    }

    #[test]
    fn cii_black_nodes() {
        let f = build_form_str("CIIa p=1 l=3").unwrap();
        assert_eq!(f.black().labels(), vec![1, 3]);
    }

    #[test]
    fn eii_epsilon() {
        let f = build_form_str("EII").unwrap();
        assert_eq!(f.epsilon(0).unwrap(), 4);
        assert_eq!(f.epsilon(1).unwrap(), 3);
        assert_eq!(f.epsilon(2).unwrap(), 2);
        assert_eq!(f.epsilon(5).unwrap(), 5);
        assert!(f.black().is_empty());
    }

    #[test]
    fn complex_type_has_no_imaginary_roots() {
        let f = build_form_str("COMPLEX:A l=3").unwrap();
        assert!(f.imaginary().is_empty());
        assert_eq!(f.rank(), 6);
        assert_eq!(f.epsilon(0).unwrap(), 3);
    }
}
