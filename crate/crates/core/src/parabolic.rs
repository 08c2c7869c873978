//! Cross-markings: the grading ξ_φ, the parabolic sets it cuts out, and the
//! CR dimension and codimension.

use std::fmt;

use serde::Serialize;

use crate::bits::{NodeSet, RootSet};
use crate::error::{Error, Result};
use crate::rootspace::RootVector;
use crate::satake::RealForm;

/// ξ_φ(β) = Σ_{α∈φ} n_{β,α}.
pub fn xi(form: &RealForm, phi: NodeSet, beta: &RootVector) -> Result<i32> {
    let i = form.rs().index_of(beta).ok_or(Error::NotARoot)?;
    Ok(xi_index(form, phi, i))
}

pub fn xi_index(form: &RealForm, phi: NodeSet, i: usize) -> i32 {
    let c = form.rs().coeffs(i);
    phi.iter().map(|a| c[a]).sum()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Trichotomy {
    TotallyReal,
    TotallyComplex,
    Generic,
}

impl fmt::Display for Trichotomy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Trichotomy::TotallyReal => "totally real",
            Trichotomy::TotallyComplex => "totally complex",
            Trichotomy::Generic => "generic",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct CrDims {
    pub n: usize,
    pub d: usize,
}

/// A parabolic set Q_φ and its pieces, all as root-index bitsets.
#[derive(Clone, Debug)]
pub struct CrossMarking<'a> {
    pub form: &'a RealForm,
    pub phi: NodeSet,
    xi: Vec<i32>,
    /// Q_φ = {ξ ≥ 0}.
    pub q: RootSet,
    /// Qʳ = {ξ = 0}.
    pub q_r: RootSet,
    /// Qⁿ = {ξ > 0}.
    pub q_n: RootSet,
    /// Q⁻ⁿ = {ξ < 0}.
    pub q_neg_n: RootSet,
    /// σ(Q_φ).
    pub sigma_q: RootSet,
}

/// Computes the partitions of R cut out by ξ_φ.
pub fn mark(form: &RealForm, phi: NodeSet) -> CrossMarking<'_> {
    let rs = form.rs();
    let xi: Vec<i32> = (0..rs.len()).map(|i| xi_index(form, phi, i)).collect();
    let pick =
        |f: &dyn Fn(i32) -> bool| -> RootSet { (0..rs.len()).filter(|&i| f(xi[i])).collect() };
    let q = pick(&|x| x >= 0);
    let q_r = pick(&|x| x == 0);
    let q_n = pick(&|x| x > 0);
    let q_neg_n = pick(&|x| x < 0);
    let sigma_q = form.sigma_set(&q);
    CrossMarking {
        form,
        phi,
        xi,
        q,
        q_r,
        q_n,
        q_neg_n,
        sigma_q,
    }
}

impl<'a> CrossMarking<'a> {
    pub fn xi(&self, i: usize) -> i32 {
        self.xi[i]
    }

    pub fn all(&self) -> RootSet {
        self.form.rs().all()
    }

    pub fn sigma(&self, s: &RootSet) -> RootSet {
        self.form.sigma_set(s)
    }

    /// Q_φ ∩ σ(Q_φ).
    pub fn q_cap_sigma_q(&self) -> RootSet {
        self.q & self.sigma_q
    }

    /// Q_φ ∪ σ(Q_φ).
    pub fn q_cup_sigma_q(&self) -> RootSet {
        self.q | self.sigma_q
    }

    /// Q⁻ⁿ ∩ σ(Q⁻ⁿ): the roots outside Q_φ ∪ σ(Q_φ).
    pub fn outside(&self) -> RootSet {
        self.q_neg_n & self.sigma(&self.q_neg_n)
    }

    /// Q_φ ∩ σ(Q⁻ⁿ), where the order κ is defined.
    pub fn critical(&self) -> RootSet {
        self.q & self.sigma(&self.q_neg_n)
    }

    /// n = |Q_φ| − |Q_φ ∩ σQ_φ| and d = |R| − |Q_φ ∪ σQ_φ|. The Cartan
    /// subalgebra lies in q ∩ σ(q), so it cancels from both differences.
    pub fn cr_dims(&self) -> CrDims {
        CrDims {
            n: self.q.len() - self.q_cap_sigma_q().len(),
            d: self.form.rs().len() - self.q_cup_sigma_q().len(),
        }
    }

    /// Also asserts that d = 0 exactly when Qⁿ ∩ σ(Qⁿ) is empty.
    pub fn trichotomy(&self) -> Result<Trichotomy> {
        let CrDims { n, d } = self.cr_dims();
        let empty = (self.q_n & self.sigma(&self.q_n)).is_empty();
        if (d == 0) != empty {
            return Err(Error::InternalInconsistency(format!(
                "{} φ={:?}: d = {d} but Qⁿ∩σQⁿ empty = {empty}",
                self.form, self.phi
            )));
        }
        // n = d = 0 only for φ = ∅; a compact form counts as totally complex there.
        let compact = self.form.imaginary().len() == self.form.rs().len();
        Ok(if n == 0 && !(d == 0 && compact) {
            Trichotomy::TotallyReal
        } else if d == 0 {
            Trichotomy::TotallyComplex
        } else {
            Trichotomy::Generic
        })
    }

    pub fn partition_sizes(&self) -> PartitionSizes {
        PartitionSizes {
            q: self.q.len(),
            q_r: self.q_r.len(),
            q_n: self.q_n.len(),
            q_neg_n: self.q_neg_n.len(),
            q_cap_sigma_q: self.q_cap_sigma_q().len(),
            q_cup_sigma_q: self.q_cup_sigma_q().len(),
        }
    }

    pub fn vectors(&self, s: &RootSet) -> Vec<RootVector> {
        s.iter().map(|i| self.form.rs().root(i).clone()).collect()
    }

    /// Report fragment with 1-based φ labels.
    pub fn summary(&self) -> Result<MarkingSummary> {
        let CrDims { n, d } = self.cr_dims();
        Ok(MarkingSummary {
            phi: self.phi.labels(),
            n,
            d,
            trichotomy: self.trichotomy()?.to_string(),
            partition_sizes: self.partition_sizes(),
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct PartitionSizes {
    pub q: usize,
    pub q_r: usize,
    pub q_n: usize,
    pub q_neg_n: usize,
    pub q_cap_sigma_q: usize,
    pub q_cup_sigma_q: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct MarkingSummary {
    pub phi: Vec<usize>,
    pub n: usize,
    pub d: usize,
    pub trichotomy: String,
    pub partition_sizes: PartitionSizes,
}

/// Structural invariants of a marking, each returned as a named failure.
pub fn marking_invariant_failures(m: &CrossMarking<'_>) -> Vec<String> {
    let form = m.form;
    let rs = form.rs();
    let all = rs.all();
    let mut bad = Vec::new();
    let mut check = |ok: bool, what: &str| {
        if !ok {
            bad.push(what.to_string());
        }
    };
    let closed = m.q.iter().all(|i| {
        m.q.iter()
            .all(|j| rs.sum_index(i, j).is_none_or(|k| m.q.contains(k)))
    });
    check(closed, "Q not closed under root addition");
    let neg_q: RootSet = m.q.iter().map(|i| rs.negate(i)).collect();
    check((m.q | neg_q) == all, "Q ∪ −Q ≠ R");
    check(m.q_n.is_subset(&rs.positive()), "Qⁿ has negative roots");
    let neg_qn: RootSet = m.q_n.iter().map(|i| rs.negate(i)).collect();
    check(neg_qn == m.q_neg_n, "Q⁻ⁿ ≠ −Qⁿ");
    let additive = (0..rs.len()).all(|i| {
        (0..rs.len()).all(|j| {
            rs.sum_index(i, j)
                .is_none_or(|k| m.xi(k) == m.xi(i) + m.xi(j))
        })
    });
    check(additive, "ξ not additive");
    let imag = form.imaginary();
    check(
        (m.q_n & m.sigma(&m.q_neg_n)).is_subset(&imag),
        "Qⁿ ∩ σQ⁻ⁿ has non-imaginary roots",
    );
    let outside = m.outside();
    check(
        m.q_cup_sigma_q().is_disjoint(&outside),
        "Q ∪ σQ meets Q⁻ⁿ ∩ σQ⁻ⁿ",
    );
    check(
        (m.q_cup_sigma_q() | outside) == all,
        "Q ∪ σQ and Q⁻ⁿ ∩ σQ⁻ⁿ do not cover R",
    );
    let crit = m.critical();
    let left = m.q_n & imag;
    let right = m.q_r & m.sigma(&m.q_neg_n);
    check(left.is_disjoint(&right), "critical-set pieces overlap");
    check(
        (left | right) == crit,
        "critical set ≠ (Qⁿ ∩ R_•) ⊔ (Qʳ ∩ σQ⁻ⁿ)",
    );
    let positive_xi = (m.sigma(&m.q_n) - imag).iter().all(|i| m.xi(i) >= 0);
    check(positive_xi, "ξ negative on σ(Qⁿ) ∖ R_•");
    bad
}
