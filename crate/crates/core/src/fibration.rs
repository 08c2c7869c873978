//! Equivariant fibrations between markings ψ ⊆ φ, fiber tests and the
//! degeneracy reduction φ ↦ φ ∖ Π.

use std::fmt::Write as _;

use serde::Serialize;

use crate::bits::{NodeSet, RootSet};
use crate::error::{Error, Result};
use crate::parabolic::{mark, CrossMarking};
use crate::satake::RealForm;

fn nested(phi: NodeSet, psi: NodeSet) -> Result<()> {
    if psi.is_subset(phi) {
        Ok(())
    } else {
        Err(Error::NotNested)
    }
}

/// Qⁿ_φ ∩ σ(Qⁿ_ψ) ⊆ Qⁿ_ψ.
pub fn is_cr_fibration(form: &RealForm, phi: NodeSet, psi: NodeSet) -> Result<bool> {
    nested(phi, psi)?;
    let (mp, ms) = (mark(form, phi), mark(form, psi));
    Ok((mp.q_n & ms.sigma(&ms.q_n)).is_subset(&ms.q_n))
}

/// Q_ψ ∪ σ(Q_ψ) = Q_φ ∪ σ(Q_φ).
pub fn fiber_totally_complex(form: &RealForm, phi: NodeSet, psi: NodeSet) -> Result<bool> {
    nested(phi, psi)?;
    Ok(mark(form, psi).q_cup_sigma_q() == mark(form, phi).q_cup_sigma_q())
}

/// Q_φ ⊆ Q_ψ ⊆ Q_φ ∪ σ(Q_φ).
pub fn fiber_totally_complex_sandwich(form: &RealForm, phi: NodeSet, psi: NodeSet) -> Result<bool> {
    nested(phi, psi)?;
    let (mp, ms) = (mark(form, phi), mark(form, psi));
    Ok(mp.q.is_subset(&ms.q) && ms.q.is_subset(&mp.q_cup_sigma_q()))
}

/// Q_φ ∪ (Q_ψ ∩ σ(Q_φ)) = Q_ψ.
pub fn fiber_totally_complex_absorb(form: &RealForm, phi: NodeSet, psi: NodeSet) -> Result<bool> {
    nested(phi, psi)?;
    let (mp, ms) = (mark(form, phi), mark(form, psi));
    Ok((mp.q | (ms.q & mp.sigma_q)) == ms.q)
}

/// Q_ψ ∩ σ(Q_ψ) ⊆ Q_φ ∪ σ(Q_φ).
pub fn fiber_totally_complex_core(form: &RealForm, phi: NodeSet, psi: NodeSet) -> Result<bool> {
    nested(phi, psi)?;
    let (mp, ms) = (mark(form, phi), mark(form, psi));
    Ok(ms.q_cap_sigma_q().is_subset(&mp.q_cup_sigma_q()))
}

/// Q_φ ∩ σ(Q_ψ) ⊆ Q_ψ. Since Q_φ ⊆ Q_ψ whenever ψ ⊆ φ, this holds for
/// every nested pair and does not detect anything.
pub fn fiber_totally_complex_meet(form: &RealForm, phi: NodeSet, psi: NodeSet) -> Result<bool> {
    nested(phi, psi)?;
    let (mp, ms) = (mark(form, phi), mark(form, psi));
    Ok((mp.q & ms.sigma_q).is_subset(&ms.q))
}

/// Connected component of supp(root) in (B ∖ marked) ∪ supp(root).
pub fn phi_circle(form: &RealForm, marked: NodeSet, root: usize) -> NodeSet {
    let rs = form.rs();
    let supp = rs.support_of(root);
    let within = NodeSet::all(rs.rank()).difference(marked).union(supp);
    rs.component(supp, within)
}

/// φ°(α) for a simple root α given by its node index.
pub fn phi_circle_simple(form: &RealForm, marked: NodeSet, node: usize) -> NodeSet {
    phi_circle(form, marked, form.rs().simple_indices()[node])
}

/// Which roots count as the exterior boundary of η ⊆ B.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum BoundaryReading {
    /// Every root α with α + β ∈ R for some β ∈ η.
    Literal,
    /// The same, restricted to roots whose support leaves η.
    Exterior,
}

pub fn exterior_boundary(form: &RealForm, eta: NodeSet, reading: BoundaryReading) -> RootSet {
    let rs = form.rs();
    let simple = rs.simple_indices();
    rs.all()
        .iter()
        .filter(|&a| eta.iter().any(|b| rs.sum_index(a, simple[b]).is_some()))
        .filter(|&a| reading == BoundaryReading::Literal || !rs.support_of(a).is_subset(eta))
        .collect()
}

fn nodes_imaginary(form: &RealForm, s: NodeSet) -> bool {
    s.is_subset(form.black())
}

/// The diagram conditions for φ → ψ to be CR, checked on every α ∈ φ ∖ ψ.
pub fn is_cr_fibration_diagram_with(
    form: &RealForm,
    phi: NodeSet,
    psi: NodeSet,
    reading: BoundaryReading,
) -> Result<bool> {
    nested(phi, psi)?;
    let imag = form.imaginary();
    Ok(phi.difference(psi).iter().all(|a| {
        let c = phi_circle_simple(form, psi, a);
        if nodes_imaginary(form, c) {
            return true;
        }
        let white = c.difference(form.black());
        form.epsilon_set(white).intersection(psi).is_empty()
            && exterior_boundary(form, c, reading).is_disjoint(&imag)
    }))
}

/// Diagram route with the exterior boundary reading, which is the one that
/// agrees with the set condition.
pub fn is_cr_fibration_diagram(form: &RealForm, phi: NodeSet, psi: NodeSet) -> Result<bool> {
    is_cr_fibration_diagram_with(form, phi, psi, BoundaryReading::Exterior)
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Reduction {
    pub pi: NodeSet,
    pub psi: NodeSet,
}

/// Π ⊆ φ: nodes whose φ° is black, or whose φ° together with its boundary
/// avoids R_• while ε(φ°) misses φ.
pub fn reduction_set(form: &RealForm, phi: NodeSet, reading: BoundaryReading) -> NodeSet {
    let imag = form.imaginary();
    let rs = form.rs();
    let simple = rs.simple_indices();
    phi.iter()
        .filter(|&a| {
            let c = phi_circle_simple(form, phi, a);
            if nodes_imaginary(form, c) {
                return true;
            }
            let c_roots: RootSet = c.iter().map(|v| simple[v]).collect();
            let reach = c_roots | exterior_boundary(form, c, reading);
            reach.is_disjoint(&imag) && form.epsilon_set(c).intersection(phi).is_empty()
        })
        .fold(NodeSet::EMPTY, |s, a| s.with(a))
}

/// Π and ψ = φ ∖ Π for a fundamental, generic marking. Checks that Π is empty
/// exactly when the chain reaches Q ∩ σQ, and that a nonempty Π gives a CR
/// fibration with totally complex fiber.
pub fn reduce_degenerate(form: &RealForm, phi: NodeSet) -> Result<Reduction> {
    let m = mark(form, phi);
    check_reducible(&m)?;
    let pi = reduction_set(form, phi, BoundaryReading::Exterior);
    let psi = phi.difference(pi);
    let fnd = crate::levi::qk_chain(&m).last() == Some(&m.q_cap_sigma_q());
    let ctx = || format!("{form} φ={phi:?}");
    if pi.is_empty() != fnd {
        return Err(Error::InternalInconsistency(format!(
            "{}: Π = {pi:?} but finitely nondegenerate = {fnd}",
            ctx()
        )));
    }
    if !pi.is_empty()
        && !(is_cr_fibration(form, phi, psi)? && fiber_totally_complex(form, phi, psi)?)
    {
        return Err(Error::InternalInconsistency(format!(
            "{}: φ → φ∖Π is not CR with totally complex fiber",
            ctx()
        )));
    }
    Ok(Reduction { pi, psi })
}

fn check_reducible(m: &CrossMarking<'_>) -> Result<()> {
    let d = m.cr_dims();
    if d.n == 0 || d.d == 0 {
        return Err(Error::PreconditionViolated(
            "marking is totally real or totally complex".into(),
        ));
    }
    if !crate::levi::is_fundamental_closure(m) {
        return Err(Error::PreconditionViolated(
            "marking is not fundamental".into(),
        ));
    }
    Ok(())
}

#[derive(Clone, Debug, Serialize)]
pub struct FibrationEdge {
    pub phi: NodeSet,
    pub psi: NodeSet,
    pub is_cr: bool,
    pub fiber_totally_complex: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Lattice {
    pub form: String,
    pub nodes: Vec<LatticeNode>,
    pub edges: Vec<LatticeEdge>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LatticeNode {
    pub id: String,
    pub labels: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LatticeEdge {
    pub from: String,
    pub to: String,
    pub is_cr: bool,
    pub fiber_totally_complex: bool,
}

pub fn hex_id(s: NodeSet) -> String {
    format!("0x{:x}", s.0)
}

/// Every fibration φ → ψ for ψ ⊊ φ.
pub fn fibrations_from(form: &RealForm, phi: NodeSet) -> Result<Vec<FibrationEdge>> {
    phi.subsets_of()
        .filter(|&psi| psi != phi)
        .map(|psi| {
            Ok(FibrationEdge {
                phi,
                psi,
                is_cr: is_cr_fibration(form, phi, psi)?,
                fiber_totally_complex: fiber_totally_complex(form, phi, psi)?,
            })
        })
        .collect()
}

/// Nodes are the subsets of φ; edges run from φ to each proper subset.
pub fn lattice(form: &RealForm, phi: NodeSet) -> Result<Lattice> {
    let nodes = phi
        .subsets_of()
        .map(|s| LatticeNode {
            id: hex_id(s),
            labels: s.labels(),
        })
        .collect();
    let edges = fibrations_from(form, phi)?
        .into_iter()
        .map(|e| LatticeEdge {
            from: hex_id(e.phi),
            to: hex_id(e.psi),
            is_cr: e.is_cr,
            fiber_totally_complex: e.fiber_totally_complex,
        })
        .collect();
    Ok(Lattice {
        form: form.to_string(),
        nodes,
        edges,
    })
}

impl Lattice {
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph fibrations {{");
        let _ = writeln!(out, "  label=\"{}\";", self.form);
        for n in &self.nodes {
            let labels: Vec<String> = n.labels.iter().map(|l| format!("α{l}")).collect();
            let _ = writeln!(
                out,
                "  \"{}\" [label=\"{} {{{}}}\"];",
                n.id,
                n.id,
                labels.join(",")
            );
        }
        for e in &self.edges {
            let style = if e.is_cr { "solid" } else { "dashed" };
            let tc = if e.fiber_totally_complex { " tc" } else { "" };
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\" [style={style}, label=\"{}{tc}\"];",
                e.from,
                e.to,
                if e.is_cr { "cr" } else { "not cr" }
            );
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::satake::build_form_str;

    fn n(labels: &[usize]) -> NodeSet {
        NodeSet::from_labels(labels)
    }

    #[test]
    fn trivial_fibrations() {
        let f = build_form_str("AIV l=3").unwrap();
        assert!(is_cr_fibration(&f, n(&[2]), n(&[2])).unwrap());
        assert!(is_cr_fibration(&f, n(&[2]), NodeSet::EMPTY).unwrap());
        assert!(is_cr_fibration_diagram(&f, n(&[2]), NodeSet::EMPTY).unwrap());
        assert_eq!(is_cr_fibration(&f, n(&[2]), n(&[1])), Err(Error::NotNested));
    }

    #[test]
    fn literal_boundary_breaks_trivial_target() {
        let f = build_form_str("AIV l=3").unwrap();
        assert!(!is_cr_fibration_diagram_with(
            &f,
            n(&[2]),
            NodeSet::EMPTY,
            BoundaryReading::Literal
        )
        .unwrap());
    }

    #[test]
    fn phi_circle_examples() {
        let f = build_form_str("AIV l=3").unwrap();
        assert_eq!(phi_circle_simple(&f, n(&[2]), 1), n(&[1, 2, 3]));
        let f = build_form_str("AIIIa p=2 l=4").unwrap();
        assert_eq!(phi_circle_simple(&f, n(&[1, 4]), 0), n(&[1, 2, 3]));
        assert_eq!(phi_circle_simple(&f, NodeSet::all(4), 2), n(&[3]));
    }

    #[test]
    fn boundary_of_a3_middle() {
        let f = build_form_str("SPLIT:A l=3").unwrap();
        let rs = f.rs();
        assert!(exterior_boundary(&f, NodeSet::EMPTY, BoundaryReading::Literal).is_empty());
        let b = exterior_boundary(&f, n(&[2]), BoundaryReading::Literal);
        let idx = |v: &[i32]| {
            rs.index_of(&crate::rootspace::RootVector::from_true(v))
                .unwrap()
        };
        assert!(b.contains(idx(&[1, -1, 0, 0])));
        assert!(b.contains(idx(&[0, 0, 1, -1])));
        assert!(b.contains(idx(&[-1, 0, 1, 0])));
    }

    #[test]
    fn aii_pair() {
        let f = build_form_str("AII p=2").unwrap();
        let (phi, psi) = (n(&[1, 3]), n(&[1]));
        assert_eq!(
            is_cr_fibration(&f, phi, psi).unwrap(),
            is_cr_fibration_diagram(&f, phi, psi).unwrap()
        );
    }

    #[test]
    fn su13_reduction_is_empty() {
        let f = build_form_str("AIV l=3").unwrap();
        assert_eq!(reduce_degenerate(&f, n(&[2])).unwrap().pi, NodeSet::EMPTY);
        let f = build_form_str("AIIIb p=2").unwrap();
        assert!(matches!(
            reduce_degenerate(&f, n(&[1, 3])),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn dot_has_hex_nodes() {
        let f = build_form_str("AIV l=3").unwrap();
        let l = lattice(&f, n(&[1, 2])).unwrap();
        assert_eq!(l.nodes.len(), 4);
        assert_eq!(l.edges.len(), 3);
        assert!(l.to_dot().contains("\"0x3\" -> \"0x0\""));
    }
}
