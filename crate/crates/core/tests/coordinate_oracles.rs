//! Self-contained recomputation of FII and EIII in explicit coordinates,
//! sharing no code with the library beyond the final comparison.
//!
//! Vectors are doubled so half-integers stay integral. Coefficients on the
//! simple basis are found by brute force, and the descending chain is run
//! straight from its recursive definition.

use satake_levi::bits::NodeSet;
use satake_levi::levi::{levi_verdict, Order};
use satake_levi::parabolic::mark;
use satake_levi::satake::build_form_str;

type V = Vec<i32>;

struct Oracle {
    roots: Vec<V>,
    coeffs: Vec<Vec<i32>>,
    sigma: Vec<usize>,
}

fn add(a: &V, b: &V) -> V {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn index(roots: &[V], v: &V) -> Option<usize> {
    roots.iter().position(|r| r == v)
}

impl Oracle {
    fn new(roots: Vec<V>, simple: &[V], sigma: impl Fn(&V) -> V, max: i32) -> Oracle {
        let l = simple.len();
        let combos: Vec<Vec<i32>> = (0..(max as usize + 1).pow(l as u32))
            .map(|mut k| {
                (0..l)
                    .map(|_| {
                        let d = (k % (max as usize + 1)) as i32;
                        k /= max as usize + 1;
                        d
                    })
                    .collect()
            })
            .collect();
        let dim = roots[0].len();
        let eval = |c: &[i32]| -> V {
            (0..dim)
                .map(|j| (0..l).map(|i| c[i] * simple[i][j]).sum())
                .collect()
        };
        let table: Vec<(Vec<i32>, V)> = combos
            .into_iter()
            .map(|c| {
                let v = eval(&c);
                (c, v)
            })
            .collect();
        let coeffs = roots
            .iter()
            .map(|r| {
                let neg: V = r.iter().map(|x| -x).collect();
                if let Some((c, _)) = table.iter().find(|(_, v)| v == r) {
                    c.clone()
                } else {
                    let (c, _) = table
                        .iter()
                        .find(|(_, v)| *v == neg)
                        .expect("root not in the lattice cone");
                    c.iter().map(|x| -x).collect()
                }
            })
            .collect();
        let sig = roots
            .iter()
            .map(|r| index(&roots, &sigma(r)).expect("σ preserves R"))
            .collect();
        Oracle {
            roots,
            coeffs,
            sigma: sig,
        }
    }

    /// Order under the chain, `None` when degenerate, or "n/a" as `Some(0)`.
    fn order(&self, phi: &[usize]) -> Option<u32> {
        let n = self.roots.len();
        let xi: Vec<i32> = (0..n)
            .map(|i| phi.iter().map(|&a| self.coeffs[i][a - 1]).sum())
            .collect();
        let q: Vec<bool> = xi.iter().map(|&x| x >= 0).collect();
        let sq: Vec<bool> = (0..n)
            .map(|i| (0..n).any(|j| q[j] && self.sigma[j] == i))
            .collect();
        let cr_n = (0..n).filter(|&i| q[i] && !sq[i]).count();
        let cr_d = (0..n).filter(|&i| !q[i] && !sq[i]).count();
        if cr_n == 0 || cr_d == 0 {
            return Some(0);
        }
        let bottom: Vec<bool> = (0..n).map(|i| q[i] && sq[i]).collect();
        let mut prev = q.clone();
        let mut k = 0;
        while prev != bottom {
            let next: Vec<bool> = (0..n)
                .map(|a| {
                    prev[a]
                        && (0..n).filter(|&b| sq[b]).all(|b| {
                            match index(&self.roots, &add(&self.roots[a], &self.roots[b])) {
                                Some(c) => prev[c] || sq[c],
                                None => true,
                            }
                        })
                })
                .collect();
            k += 1;
            if next == prev {
                return None;
            }
            prev = next;
        }
        Some(k)
    }
}

fn e(dim: usize, i: usize, s: i32) -> V {
    let mut v = vec![0; dim];
    v[i - 1] = 2 * s;
    v
}

fn f4() -> Oracle {
    let mut roots = Vec::new();
    for i in 1..=4 {
        roots.push(e(4, i, 1));
        roots.push(e(4, i, -1));
        for j in i + 1..=4 {
            for (s, t) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                roots.push(add(&e(4, i, s), &e(4, j, t)));
            }
        }
    }
    for m in 0..16 {
        roots.push(
            (0..4)
                .map(|b| if m >> b & 1 == 1 { -1 } else { 1 })
                .collect(),
        );
    }
    let simple = vec![
        add(&e(4, 1, 1), &e(4, 2, -1)),
        add(&e(4, 2, 1), &e(4, 3, -1)),
        e(4, 3, 1),
        vec![-1, -1, -1, 1],
    ];
    let sigma = |v: &V| vec![-v[0], -v[1], -v[2], v[3]];
    Oracle::new(roots, &simple, sigma, 4)
}

/// ζ_{i,j,k,7}: +½ on e_i, e_j, e_k, e_7 and −½ elsewhere.
fn zeta(idx: &[usize]) -> V {
    (1..=8)
        .map(|t| if idx.contains(&t) { 1 } else { -1 })
        .collect()
}

fn e6() -> Oracle {
    let mut roots = Vec::new();
    for i in 1..=6 {
        for j in i + 1..=6 {
            let r = add(&e(8, i, 1), &e(8, j, -1));
            roots.push(r.iter().map(|x| -x).collect());
            roots.push(r);
        }
    }
    let r = add(&e(8, 7, 1), &e(8, 8, -1));
    roots.push(r.iter().map(|x| -x).collect());
    roots.push(r);
    for i in 1..=6 {
        for j in i + 1..=6 {
            for k in j + 1..=6 {
                let z = zeta(&[i, j, k, 7]);
                roots.push(z.iter().map(|x| -x).collect());
                roots.push(z);
            }
        }
    }
    assert_eq!(roots.len(), 72);
    let mut simple: Vec<V> = (1..=5)
        .map(|i| add(&e(8, i, 1), &e(8, i + 1, -1)))
        .collect();
    simple.push(zeta(&[4, 5, 6, 7]));
    // EIII: e1 ↔ −e6, e7 ↔ −e8, e_i ↦ −e_i for 2 ≤ i ≤ 5.
    let sigma = |v: &V| vec![-v[5], -v[1], -v[2], -v[3], -v[4], -v[0], -v[7], -v[6]];
    Oracle::new(roots, &simple, sigma, 3)
}

fn engine_order(form: &str, phi: &[usize]) -> Option<u32> {
    let f = build_form_str(form).unwrap();
    let v = levi_verdict(&mark(&f, NodeSet::from_labels(phi))).unwrap();
    match v.order {
        Order::NotApplicable => Some(0),
        Order::Degenerate => None,
        o => o.finite(),
    }
}

#[test]
fn f4_root_count() {
    assert_eq!(f4().roots.len(), 48);
}

#[test]
fn fii_alpha2_has_order_two() {
    assert_eq!(f4().order(&[2]), Some(2));
    assert_eq!(f4().order(&[1]), Some(1));
    assert_eq!(f4().order(&[3]), Some(1));
}

#[test]
fn eiii_alpha2_alpha4_has_order_two() {
    let o = e6();
    assert_eq!(o.order(&[2, 4]), Some(2));
    assert_eq!(o.order(&[2, 3, 4]), Some(1));
}

#[test]
fn fii_engine_matches_oracle_everywhere() {
    let o = f4();
    for phi in NodeSet::subsets(4) {
        let l = phi.labels();
        assert_eq!(engine_order("FII", &l), o.order(&l), "φ={phi:?}");
    }
}

#[test]
fn eiii_engine_matches_oracle_everywhere() {
    let o = e6();
    for phi in NodeSet::subsets(6) {
        let l = phi.labels();
        assert_eq!(engine_order("EIII", &l), o.order(&l), "φ={phi:?}");
    }
}
