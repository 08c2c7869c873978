//! Fundamentality, the descending chain Q⁽ᵏ⁾, per-root orders κ and the
//! Levi order verdict.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::bits::RootSet;
use crate::error::{Error, Result};
use crate::parabolic::{CrDims, CrossMarking};

/// Closes Q_φ ∪ σ(Q_φ) under root addition and tests whether it is all of R.
pub fn is_fundamental_closure(m: &CrossMarking<'_>) -> bool {
    let rs = m.form.rs();
    let mut s = m.q_cup_sigma_q();
    loop {
        let mut grown = s;
        for i in s.iter() {
            for j in s.iter() {
                if let Some(k) = rs.sum_index(i, j) {
                    grown.insert(k);
                }
            }
        }
        if grown == s {
            return s == rs.all();
        }
        s = grown;
    }
}

/// No white α ∈ φ has ε(α) ∈ φ.
pub fn is_fundamental_satake(m: &CrossMarking<'_>) -> bool {
    let f = m.form;
    m.phi
        .difference(f.black())
        .iter()
        .all(|a| !m.phi.contains(f.epsilon(a).expect("a < rank")))
}

/// Q⁽⁰⁾ = Q_φ and Q⁽ᵏ⁾ = {α ∈ Q⁽ᵏ⁻¹⁾ : (α + σQ_φ) ∩ R ⊆ Q⁽ᵏ⁻¹⁾ ∪ σQ_φ},
/// up to and including the first repeated set.
pub fn qk_chain(m: &CrossMarking<'_>) -> Vec<RootSet> {
    let rs = m.form.rs();
    let sq = m.sigma_q;
    let mut chain = vec![m.q];
    loop {
        let prev = *chain.last().unwrap();
        let allowed = prev | sq;
        let next: RootSet = prev
            .iter()
            .filter(|&a| {
                sq.iter()
                    .all(|g| rs.sum_index(a, g).is_none_or(|k| allowed.contains(k)))
            })
            .collect();
        if next == prev {
            return chain;
        }
        chain.push(next);
    }
}

/// Where a κ-chain must land.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum KappaTarget {
    /// Q⁻ⁿ ∩ σ(Q⁻ⁿ), the complement of Q_φ ∪ σ(Q_φ). This is the target
    /// that matches the chain Q⁽ᵏ⁾.
    Outside,
    /// Q⁻ⁿ ∪ σ(Q⁻ⁿ), the complement of Q_φ ∩ σ(Q_φ).
    EitherSide,
}

impl KappaTarget {
    fn set(self, m: &CrossMarking<'_>) -> RootSet {
        match self {
            KappaTarget::Outside => m.outside(),
            KappaTarget::EitherSide => m.q_neg_n | m.sigma(&m.q_neg_n),
        }
    }
}

/// κ(β) with a shortest witness α₁, …, α_κ (root indices).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Kappa {
    pub value: Option<u32>,
    pub witness: Vec<usize>,
}

/// Breadth-first search over partial sums β + α₁ + … + α_h with α_i ∈ σ(Q_φ).
pub fn kappa_search(
    m: &CrossMarking<'_>,
    beta: usize,
    target: KappaTarget,
    cap: usize,
) -> Result<Kappa> {
    if !m.critical().contains(beta) {
        return Err(Error::NotInCriticalSet);
    }
    let rs = m.form.rs();
    let goal = target.set(m);
    if goal.is_empty() {
        return Ok(Kappa {
            value: None,
            witness: Vec::new(),
        });
    }
    let n = rs.len();
    let mut prev: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut depth = vec![usize::MAX; n];
    depth[beta] = 0;
    let mut queue = VecDeque::from([beta]);
    while let Some(u) = queue.pop_front() {
        if depth[u] >= cap {
            continue;
        }
        for a in m.sigma_q.iter() {
            let Some(v) = rs.sum_index(u, a) else {
                continue;
            };
            if depth[v] != usize::MAX {
                continue;
            }
            depth[v] = depth[u] + 1;
            prev[v] = Some((u, a));
            if goal.contains(v) {
                let mut witness = Vec::new();
                let mut cur = v;
                while let Some((p, a)) = prev[cur] {
                    witness.push(a);
                    cur = p;
                }
                witness.reverse();
                return Ok(Kappa {
                    value: Some(depth[v] as u32),
                    witness,
                });
            }
            queue.push_back(v);
        }
    }
    Ok(Kappa {
        value: None,
        witness: Vec::new(),
    })
}

/// κ(β) with the search capped at 1 + ξ_φ(β) steps.
pub fn kappa(m: &CrossMarking<'_>, beta: usize) -> Result<Kappa> {
    let cap = (1 + m.xi(beta).max(0) as usize).min(m.form.rs().len());
    kappa_search(m, beta, KappaTarget::Outside, cap)
}

/// Every β ∈ Q_φ ∩ σ(Q⁻ⁿ) admits α ∈ σ(Q_φ) ∩ Q⁻ⁿ with β + α ∈ σ(Q⁻ⁿ).
pub fn one_step_criterion(m: &CrossMarking<'_>) -> bool {
    let rs = m.form.rs();
    let steps = m.sigma_q & m.q_neg_n;
    let land = m.sigma(&m.q_neg_n);
    m.critical().iter().all(|b| {
        steps
            .iter()
            .any(|a| rs.sum_index(b, a).is_some_and(|k| land.contains(k)))
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Order {
    One,
    Two,
    Higher(u32),
    Degenerate,
    NotApplicable,
}

impl Order {
    pub fn from_k(k: u32) -> Order {
        match k {
            1 => Order::One,
            2 => Order::Two,
            _ => Order::Higher(k),
        }
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Order::One => Some(1),
            Order::Two => Some(2),
            Order::Higher(k) => Some(k),
            _ => None,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::One => f.write_str("1"),
            Order::Two => f.write_str("2"),
            Order::Higher(k) => write!(f, "{k}"),
            Order::Degenerate => f.write_str("degenerate"),
            Order::NotApplicable => f.write_str("n/a"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CriticalRoot {
    pub root: usize,
    pub kappa: Option<u32>,
    pub witness: Vec<usize>,
}

/// Points where two readings of the same notion disagree. They are reported
/// rather than treated as errors.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub enum Discrepancy {
    /// Closure-based and diagram-based fundamentality differ.
    Fundamentality { closure: bool, diagram: bool },
    /// The one-step criterion differs from the chain's verdict.
    OneStep { one_step: bool, chain: bool },
    /// κ with target Q⁻ⁿ ∪ σ(Q⁻ⁿ) differs from κ with target Q⁻ⁿ ∩ σ(Q⁻ⁿ).
    EitherSideTarget {
        root: usize,
        outside: Option<u32>,
        either_side: Option<u32>,
    },
}

#[derive(Clone, Debug)]
pub struct LeviVerdict {
    pub dims: CrDims,
    /// Closure-based; authoritative.
    pub fundamental: bool,
    pub fundamental_diagram: bool,
    /// The chain stops at Q_φ ∩ σ(Q_φ).
    pub finitely_nondegenerate: bool,
    pub order: Order,
    pub chain: Vec<RootSet>,
    pub critical: Vec<CriticalRoot>,
    pub one_step: bool,
    pub discrepancies: Vec<Discrepancy>,
}

impl LeviVerdict {
    pub fn chain_sizes(&self) -> Vec<usize> {
        self.chain.iter().map(|s| s.len()).collect()
    }

    pub fn kappa_of(&self, root: usize) -> Option<&CriticalRoot> {
        self.critical.iter().find(|c| c.root == root)
    }
}

/// Assembles the verdict and runs the cross-checks between the chain and
/// the per-root orders.
pub fn levi_verdict(m: &CrossMarking<'_>) -> Result<LeviVerdict> {
    let dims = m.cr_dims();
    let fundamental = is_fundamental_closure(m);
    let fundamental_diagram = is_fundamental_satake(m);
    let chain = qk_chain(m);
    let bottom = m.q_cap_sigma_q();
    let finitely_nondegenerate = *chain.last().unwrap() == bottom;
    let chain_k = chain.iter().position(|s| *s == bottom).map(|k| k as u32);
    let mut critical = Vec::new();
    let mut discrepancies = Vec::new();
    let applicable = dims.n > 0 && dims.d > 0;
    for b in m.critical().iter() {
        let k = kappa(m, b)?;
        if applicable {
            let lit = kappa_search(m, b, KappaTarget::EitherSide, m.form.rs().len())?;
            if lit.value != k.value {
                discrepancies.push(Discrepancy::EitherSideTarget {
                    root: b,
                    outside: k.value,
                    either_side: lit.value,
                });
            }
        }
        critical.push(CriticalRoot {
            root: b,
            kappa: k.value,
            witness: k.witness,
        });
    }
    let one_step = one_step_criterion(m);
    if fundamental != fundamental_diagram {
        discrepancies.push(Discrepancy::Fundamentality {
            closure: fundamental,
            diagram: fundamental_diagram,
        });
    }
    let order = if !applicable {
        Order::NotApplicable
    } else if !finitely_nondegenerate {
        Order::Degenerate
    } else {
        Order::from_k(chain_k.expect("chain reaches Q ∩ σQ"))
    };
    let ctx = || format!("{} φ={:?}", m.form, m.phi);
    if order != Order::NotApplicable {
        if one_step != finitely_nondegenerate {
            discrepancies.push(Discrepancy::OneStep {
                one_step,
                chain: finitely_nondegenerate,
            });
        }
        let any_infinite = critical.iter().any(|c| c.kappa.is_none());
        if any_infinite == finitely_nondegenerate {
            return Err(Error::InternalInconsistency(format!(
                "{}: chain and κ disagree on degeneracy",
                ctx()
            )));
        }
        if let Some(k) = order.finite() {
            let max = critical.iter().filter_map(|c| c.kappa).max().unwrap_or(1);
            if max != k {
                return Err(Error::InternalInconsistency(format!(
                    "{}: chain order {k} but max κ {max}",
                    ctx()
                )));
            }
            if fundamental && k > 2 {
                return Err(Error::InternalInconsistency(format!(
                    "{}: fundamental with order {k}",
                    ctx()
                )));
            }
        }
    }
    Ok(LeviVerdict {
        dims,
        fundamental,
        fundamental_diagram,
        finitely_nondegenerate,
        order,
        chain,
        critical,
        one_step,
        discrepancies,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct WitnessReport {
    /// Each α_i lies in σ(Q_φ) ∩ Q⁻ⁿ.
    pub steps_in_sigma_q_neg: bool,
    /// Partial sums before the last stay in Q_φ ∩ σ(Q⁻ⁿ).
    pub partial_sums_critical: bool,
    /// Every reordering is again a κ-chain.
    pub permutations_valid: bool,
    /// No α_i + α_j is a root.
    pub pairwise_sums_not_roots: bool,
}

impl WitnessReport {
    pub fn all(&self) -> bool {
        self.steps_in_sigma_q_neg
            && self.partial_sums_critical
            && self.permutations_valid
            && self.pairwise_sums_not_roots
    }
}

fn is_chain(m: &CrossMarking<'_>, beta: usize, steps: &[usize], goal: &RootSet) -> bool {
    let rs = m.form.rs();
    let mut cur = beta;
    for &a in steps {
        match rs.sum_index(cur, a) {
            Some(k) => cur = k,
            None => return false,
        }
    }
    goal.contains(cur)
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Checks the four structural properties of a shortest κ-chain.
pub fn check_witness_properties(
    m: &CrossMarking<'_>,
    beta: usize,
    witness: &[usize],
) -> WitnessReport {
    let rs = m.form.rs();
    let steps = m.sigma_q & m.q_neg_n;
    let crit = m.critical();
    let goal = m.outside();
    let mut sums = Vec::new();
    let mut cur = Some(beta);
    for &a in witness {
        cur = cur.and_then(|c| rs.sum_index(c, a));
        sums.push(cur);
    }
    let partial_ok = sums.len() <= 1
        || sums[..sums.len() - 1]
            .iter()
            .all(|s| s.is_some_and(|k| crit.contains(k)));
    WitnessReport {
        steps_in_sigma_q_neg: witness.iter().all(|&a| steps.contains(a)),
        partial_sums_critical: partial_ok,
        permutations_valid: permutations(witness)
            .iter()
            .all(|p| is_chain(m, beta, p, &goal)),
        pairwise_sums_not_roots: witness.iter().enumerate().all(|(i, &a)| {
            witness[i + 1..]
                .iter()
                .all(|&b| rs.sum_index(a, b).is_none())
        }),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OrderTwoRoot {
    pub root: usize,
    pub imaginary: bool,
    pub in_q_n: bool,
    pub phi_in_support: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrderTwoReport {
    pub order_two_roots: Vec<OrderTwoRoot>,
    /// Roots of Qʳ ∩ σ(Q⁻ⁿ) with a finite κ other than 1.
    pub real_part_violations: Vec<usize>,
}

impl OrderTwoReport {
    pub fn ok(&self) -> bool {
        self.real_part_violations.is_empty()
            && self
                .order_two_roots
                .iter()
                .all(|r| r.imaginary && r.in_q_n && r.phi_in_support)
    }
}

/// Every κ = 2 root is imaginary, lies in Qⁿ and has φ in its support; κ is
/// 1 or ∞ on Qʳ ∩ σ(Q⁻ⁿ).
pub fn check_order_two_roots(m: &CrossMarking<'_>, v: &LeviVerdict) -> OrderTwoReport {
    let rs = m.form.rs();
    let imag = m.form.imaginary();
    let real_part = m.q_r & m.sigma(&m.q_neg_n);
    let order_two_roots = v
        .critical
        .iter()
        .filter(|c| c.kappa == Some(2))
        .map(|c| OrderTwoRoot {
            root: c.root,
            imaginary: imag.contains(c.root),
            in_q_n: m.q_n.contains(c.root),
            phi_in_support: m.phi.is_subset(rs.support_of(c.root)),
        })
        .collect();
    let real_part_violations = v
        .critical
        .iter()
        .filter(|c| real_part.contains(c.root) && c.kappa.is_some_and(|k| k != 1))
        .map(|c| c.root)
        .collect();
    OrderTwoReport {
        order_two_roots,
        real_part_violations,
    }
}

/// Order predicted from κ on Qⁿ ∩ R_• alone: 1 if that set is empty,
/// otherwise the largest κ there (None if some κ is infinite).
pub fn order_from_imaginary_part(m: &CrossMarking<'_>, v: &LeviVerdict) -> Option<u32> {
    let part = m.q_n & m.form.imaginary();
    if part.is_empty() {
        return Some(1);
    }
    let mut best = 0;
    for c in v.critical.iter().filter(|c| part.contains(c.root)) {
        best = best.max(c.kappa?);
    }
    Some(best)
}
