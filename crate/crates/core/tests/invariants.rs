//! Randomised structural checks over (instance, φ) pairs drawn from the
//! default catalogue. Each property is restated here directly rather than
//! through the library's own invariant report.

use std::sync::OnceLock;

use proptest::prelude::*;

use satake_levi::bits::NodeSet;
use satake_levi::classify::{analyze, Bucket};
use satake_levi::fibration::{is_cr_fibration, is_cr_fibration_diagram};
use satake_levi::levi::{kappa, levi_verdict, Order};
use satake_levi::parabolic::{mark, Trichotomy};
use satake_levi::satake::{build_form, default_instances, RealForm, RootClass};

fn forms() -> &'static [RealForm] {
    static FORMS: OnceLock<Vec<RealForm>> = OnceLock::new();
    FORMS.get_or_init(|| {
        default_instances()
            .iter()
            .map(|s| build_form(s).unwrap())
            .collect()
    })
}

fn pick(i: usize, mask: u32) -> (&'static RealForm, NodeSet) {
    let f = &forms()[i % forms().len()];
    (f, NodeSet(mask & ((1 << f.rank()) - 1)))
}

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(400)
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn sigma_is_an_involution_respecting_the_s_chamber(i in 0usize..1000) {
        let f = &forms()[i % forms().len()];
        let rs = f.rs();
        for r in 0..rs.len() {
            prop_assert_eq!(f.sigma(f.sigma(r)), r);
            prop_assert_eq!(f.sigma_vector(rs.root(r)), rs.root(f.sigma(r)).clone());
            if rs.is_positive(r) && f.class_of(r) == RootClass::Complex {
                prop_assert!(rs.is_positive(f.sigma(r)), "{} root {}", f, r);
            }
        }
    }

    #[test]
    fn parabolic_set_is_closed_and_xi_additive(i in 0usize..1000, mask in any::<u32>()) {
        let (f, phi) = pick(i, mask);
        let rs = f.rs();
        let m = mark(f, phi);
        for a in 0..rs.len() {
            prop_assert_eq!(m.q.contains(a) || m.q.contains(rs.negate(a)), true);
            for b in 0..rs.len() {
                if let Some(c) = rs.sum_index(a, b) {
                    prop_assert_eq!(m.xi(c), m.xi(a) + m.xi(b));
                    if m.q.contains(a) && m.q.contains(b) {
                        prop_assert!(m.q.contains(c));
                    }
                }
            }
        }
        // ξ is the sum of the coefficients on φ.
        for a in 0..rs.len() {
            let direct: i32 = phi.iter().map(|k| rs.coeffs(a)[k]).sum();
            prop_assert_eq!(m.xi(a), direct);
        }
    }

    #[test]
    fn critical_set_splits_disjointly(i in 0usize..1000, mask in any::<u32>()) {
        let (f, phi) = pick(i, mask);
        let m = mark(f, phi);
        let s_neg = m.sigma(&m.q_neg_n);
        let real_part = m.q_r & s_neg;
        let nil_part = m.q_n & s_neg;
        prop_assert!(real_part.is_disjoint(&nil_part));
        prop_assert_eq!(real_part | nil_part, m.critical());
        prop_assert!(nil_part.is_subset(&f.imaginary()));
    }

    #[test]
    fn cr_dimensions_count_roots(i in 0usize..1000, mask in any::<u32>()) {
        let (f, phi) = pick(i, mask);
        let m = mark(f, phi);
        let rs = f.rs();
        let sq = m.sigma(&m.q);
        let n = (0..rs.len()).filter(|&a| m.q.contains(a) && !sq.contains(a)).count();
        let d = (0..rs.len()).filter(|&a| !m.q.contains(a) && !sq.contains(a)).count();
        let dims = m.cr_dims();
        prop_assert_eq!((dims.n, dims.d), (n, d));
    }

    #[test]
    fn chain_order_is_the_largest_kappa(i in 0usize..1000, mask in any::<u32>()) {
        let (f, phi) = pick(i, mask);
        let m = mark(f, phi);
        let v = levi_verdict(&m).unwrap();
        if v.order == Order::NotApplicable || !v.finitely_nondegenerate {
            return Ok(());
        }
        let mut largest = 0;
        for r in m.critical().iter() {
            let k = kappa(&m, r).unwrap().value;
            prop_assert!(k.is_some(), "{} {:?}: root {} has no finite κ", f, phi, r);
            largest = largest.max(k.unwrap());
        }
        prop_assert_eq!(v.order.finite(), Some(largest));
        prop_assert_eq!(v.chain.len() as u32, largest + 1);
    }

    #[test]
    fn fundamentality_routes_agree(i in 0usize..1000, mask in any::<u32>()) {
        let (f, phi) = pick(i, mask);
        let v = levi_verdict(&mark(f, phi)).unwrap();
        prop_assert_eq!(v.fundamental, v.fundamental_diagram, "{} {:?}", f, phi);
    }

    #[test]
    fn fundamental_nondegenerate_order_at_most_two(i in 0usize..1000, mask in any::<u32>()) {
        let (f, phi) = pick(i, mask);
        let v = levi_verdict(&mark(f, phi)).unwrap();
        if v.fundamental && v.finitely_nondegenerate {
            if let Some(k) = v.order.finite() {
                prop_assert!((1..=2).contains(&k), "{} {:?}: {}", f, phi, k);
            }
        }
    }

    #[test]
    fn bucket_follows_the_verdict(i in 0usize..1000, mask in any::<u32>()) {
        let (f, phi) = pick(i, mask);
        let m = mark(f, phi);
        let r = analyze(f, phi).unwrap();
        let v = levi_verdict(&m).unwrap();
        let want = match m.trichotomy().unwrap() {
            Trichotomy::TotallyReal => Bucket::TotallyReal,
            Trichotomy::TotallyComplex => Bucket::TotallyComplex,
            Trichotomy::Generic if !v.fundamental => Bucket::NotFundamental,
            Trichotomy::Generic if !v.finitely_nondegenerate => Bucket::Degenerate,
            Trichotomy::Generic => match v.order.finite().unwrap() {
                1 => Bucket::Order1,
                2 => Bucket::Order2,
                k => Bucket::Higher(k),
            },
        };
        prop_assert_eq!(r.bucket, want);
    }

    #[test]
    fn fibration_routes_agree(i in 0usize..1000, mask in any::<u32>(), sub in any::<u32>()) {
        let (f, phi) = pick(i, mask);
        prop_assume!(f.rank() <= 6);
        let psi = NodeSet(phi.0 & sub);
        prop_assert_eq!(
            is_cr_fibration(f, phi, psi).unwrap(),
            is_cr_fibration_diagram(f, phi, psi).unwrap(),
            "{} {:?} → {:?}", f, phi, psi
        );
    }
}

/// The fibration condition restated with ξ values: every root positive for
/// φ whose σ-image is positive for ψ must itself be positive for ψ.
#[test]
fn fibration_condition_from_xi() {
    for f in forms().iter().filter(|f| f.rank() <= 5) {
        let rs = f.rs();
        for phi in NodeSet::subsets(f.rank()) {
            let xi_phi = |a: usize| -> i32 { phi.iter().map(|k| rs.coeffs(a)[k]).sum() };
            for psi in phi.subsets_of() {
                let xi_psi = |a: usize| -> i32 { psi.iter().map(|k| rs.coeffs(a)[k]).sum() };
                let want = (0..rs.len())
                    .filter(|&a| xi_phi(a) > 0 && xi_psi(f.sigma(a)) > 0)
                    .all(|a| xi_psi(a) > 0);
                assert_eq!(
                    is_cr_fibration(f, phi, psi).unwrap(),
                    want,
                    "{f} {phi:?} → {psi:?}"
                );
            }
        }
    }
}
