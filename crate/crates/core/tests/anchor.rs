//! su(1,3) with the middle node crossed, worked by hand.
//!
//! Here Q_φ is {ξ ≥ 0}; the hand computation is usually written for the
//! opposite parabolic, so every root set below is the negative of that one.
//! Global negation commutes with σ, so nothing else changes.

use std::collections::BTreeSet;

use satake_levi::bits::{NodeSet, RootSet};
use satake_levi::levi::{check_witness_properties, levi_verdict, Order};
use satake_levi::parabolic::mark;
use satake_levi::rootspace::RootVector;
use satake_levi::satake::{build_form_str, RealForm};

/// e_i − e_j in true coordinates of R⁴.
fn diff(i: usize, j: usize) -> RootVector {
    let mut v = [0; 4];
    v[i - 1] = 1;
    v[j - 1] = -1;
    RootVector::from_true(&v)
}

fn set(pairs: &[(usize, usize)]) -> BTreeSet<RootVector> {
    pairs.iter().map(|&(i, j)| diff(i, j)).collect()
}

fn vectors(f: &RealForm, s: RootSet) -> BTreeSet<RootVector> {
    s.iter().map(|i| f.rs().root(i).clone()).collect()
}

fn su13() -> RealForm {
    build_form_str("AIIIa p=1 l=3").unwrap()
}

#[test]
fn sigma_matches_hand_formula() {
    let f = su13();
    let e = |i| RootVector::e(4, i, 1);
    assert_eq!(f.sigma_vector(&e(1)), e(4).neg());
    assert_eq!(f.sigma_vector(&e(2)), e(2).neg());
    assert_eq!(f.sigma_vector(&e(3)), e(3).neg());
    assert_eq!(f.black(), NodeSet::from_labels(&[2]));
    assert_eq!(
        f.epsilon_set(NodeSet::from_labels(&[1])),
        NodeSet::from_labels(&[3])
    );
}

#[test]
fn three_root_sets() {
    let f = su13();
    let m = mark(&f, NodeSet::from_labels(&[2]));
    assert_eq!(vectors(&f, m.outside()), set(&[(4, 1)]));
    assert_eq!(
        vectors(&f, m.sigma_q & m.q_neg_n),
        set(&[(3, 1), (3, 2), (4, 2)])
    );
    assert_eq!(vectors(&f, m.critical()), set(&[(4, 3), (2, 3), (2, 1)]));
    let dims = m.cr_dims();
    assert_eq!((dims.n, dims.d), (3, 1));
}

#[test]
fn fundamental_of_order_two() {
    let f = su13();
    let m = mark(&f, NodeSet::from_labels(&[2]));
    let v = levi_verdict(&m).unwrap();
    assert!(v.fundamental && v.fundamental_diagram);
    assert!(v.finitely_nondegenerate);
    assert_eq!(v.order, Order::Two);
    let c = v.chain_sizes();
    assert!(c.len() >= 3 && c[1] > c[2], "{c:?}");
    assert_eq!(*c.last().unwrap(), m.q_cap_sigma_q().len());
}

#[test]
fn witness_reaches_the_outside_root_in_three_summands() {
    let f = su13();
    let m = mark(&f, NodeSet::from_labels(&[2]));
    let v = levi_verdict(&m).unwrap();
    let beta = f.rs().index_of(&diff(2, 3)).unwrap();
    let c = v.kappa_of(beta).unwrap();
    assert_eq!(c.kappa, Some(2));
    assert_eq!(c.witness.len(), 2);
    let total = c
        .witness
        .iter()
        .fold(diff(2, 3), |acc, &a| acc.add(f.rs().root(a)));
    assert_eq!(total, diff(4, 1));
    let steps: BTreeSet<RootVector> = c.witness.iter().map(|&a| f.rs().root(a).clone()).collect();
    assert_eq!(steps, set(&[(3, 1), (4, 2)]));
    assert!(check_witness_properties(&m, beta, &c.witness).all());

    // The other two critical roots need a single step.
    for (i, j) in [(4, 3), (2, 1)] {
        let b = f.rs().index_of(&diff(i, j)).unwrap();
        assert_eq!(v.kappa_of(b).unwrap().kappa, Some(1), "e{i}−e{j}");
    }
}

#[test]
fn paired_nodes_are_not_fundamental() {
    let f = su13();
    let v = levi_verdict(&mark(&f, NodeSet::from_labels(&[1, 3]))).unwrap();
    assert!(!v.fundamental);
}
