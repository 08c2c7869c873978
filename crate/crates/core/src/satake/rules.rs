//! Checks σ on each simple root against the elementary conjugation diagrams.
//!
//! For a white node α the relevant subdiagram is α, ε(α) and every black
//! component touching either of them. That subdiagram is matched against
//! the elementary patterns below; a match fixes the expected coefficients
//! of σ(α). Black nodes are checked against σ(α) = −α directly.

use serde::Serialize;

use super::RealForm;
use crate::bits::NodeSet;
use crate::rootspace::{build_root_system, Family};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Pattern {
    /// Isolated white node fixed by ε: σ(α) = α.
    A1,
    /// Two unlinked white nodes swapped by ε: σ(α1) = α2.
    A1xA1,
    /// White ends swapped by ε around a black chain: σ(α1) = α2 + … + αℓ.
    AChain,
    /// White node between two black nodes: σ(α2) = α1 + α2 + α3.
    A3,
    /// White long end of a black B chain: σ(α1) = α1 + 2(α2 + … + αℓ).
    B,
    /// Black, white, then a black C chain: σ(α2) = α1 + α2 + 2(α3 + … + αℓ₋₁) + αℓ.
    C,
    /// White end of a black D diagram: σ(α1) = α1 + 2(α2 + … + αℓ₋₂) + αℓ₋₁ + αℓ.
    D,
    /// White short end of black B3: σ(α4) = α1 + 2α2 + 3α3 + α4.
    F4,
    /// Black node: σ(α) = −α by definition.
    Black,
}

#[derive(Clone, Debug, Serialize)]
pub struct RuleCheck {
    /// 0-based simple root index.
    pub node: usize,
    pub pattern: Option<Pattern>,
    pub subdiagram: Vec<usize>,
    pub expected: Option<Vec<i32>>,
    pub actual: Vec<i32>,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjugationReport {
    pub form: String,
    pub checks: Vec<RuleCheck>,
}

impl ConjugationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RuleCheck> {
        self.checks.iter().filter(|c| !c.ok)
    }
}

/// An elementary diagram: Cartan matrix, colours, ε on its white nodes, the
/// distinguished node and the coefficients of σ on it.
struct Template {
    pattern: Pattern,
    cartan: Vec<Vec<i32>>,
    black: Vec<bool>,
    eps: Vec<usize>,
    node: usize,
    coeffs: Vec<i32>,
}

fn cartan_of(family: Family, n: usize) -> Vec<Vec<i32>> {
    let rs = build_root_system(family, n).expect("template types are legal");
    (0..n)
        .map(|i| (0..n).map(|j| rs.cartan(i, j)).collect())
        .collect()
}

fn templates(n: usize) -> Vec<Template> {
    let mut out = Vec::new();
    let id: Vec<usize> = (0..n).collect();
    if n == 1 {
        out.push(Template {
            pattern: Pattern::A1,
            cartan: vec![vec![2]],
            black: vec![false],
            eps: vec![0],
            node: 0,
            coeffs: vec![1],
        });
    }
    if n == 2 {
        out.push(Template {
            pattern: Pattern::A1xA1,
            cartan: vec![vec![2, 0], vec![0, 2]],
            black: vec![false, false],
            eps: vec![1, 0],
            node: 0,
            coeffs: vec![0, 1],
        });
    }
    if n >= 2 {
        let mut eps = id.clone();
        eps[0] = n - 1;
        eps[n - 1] = 0;
        let mut coeffs = vec![1; n];
        coeffs[0] = 0;
        out.push(Template {
            pattern: Pattern::AChain,
            cartan: cartan_of(Family::A, n),
            black: (0..n).map(|i| i != 0 && i != n - 1).collect(),
            eps,
            node: 0,
            coeffs,
        });
        let mut coeffs = vec![2; n];
        coeffs[0] = 1;
        out.push(Template {
            pattern: Pattern::B,
            cartan: cartan_of(Family::B, n),
            black: (0..n).map(|i| i != 0).collect(),
            eps: id.clone(),
            node: 0,
            coeffs,
        });
    }
    if n == 3 {
        out.push(Template {
            pattern: Pattern::A3,
            cartan: cartan_of(Family::A, 3),
            black: vec![true, false, true],
            eps: id.clone(),
            node: 1,
            coeffs: vec![1, 1, 1],
        });
    }
    if n >= 3 {
        let mut coeffs = vec![2; n];
        coeffs[0] = 1;
        coeffs[1] = 1;
        coeffs[n - 1] = 1;
        out.push(Template {
            pattern: Pattern::C,
            cartan: cartan_of(Family::C, n),
            black: (0..n).map(|i| i != 1).collect(),
            eps: id.clone(),
            node: 1,
            coeffs,
        });
    }
    if n >= 4 {
        let mut coeffs = vec![2; n];
        coeffs[0] = 1;
        coeffs[n - 2] = 1;
        coeffs[n - 1] = 1;
        out.push(Template {
            pattern: Pattern::D,
            cartan: cartan_of(Family::D, n),
            black: (0..n).map(|i| i != 0).collect(),
            eps: id.clone(),
            node: 0,
            coeffs,
        });
    }
    if n == 4 {
        out.push(Template {
            pattern: Pattern::F4,
            cartan: cartan_of(Family::F, 4),
            black: vec![true, true, true, false],
            eps: id,
            node: 3,
            coeffs: vec![1, 2, 3, 1],
        });
    }
    out
}

/// Finds an embedding of the template onto `nodes` sending its distinguished
/// node to `target`, respecting Cartan integers, colours and ε.
fn embed(form: &RealForm, t: &Template, nodes: &[usize], target: usize) -> Option<Vec<usize>> {
    let rs = form.rs();
    let n = nodes.len();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn fits(form: &RealForm, t: &Template, map: &[usize], i: usize, v: usize) -> bool {
        let rs = form.rs();
        if form.black().contains(v) != t.black[i] {
            return false;
        }
        for (j, &w) in map.iter().enumerate() {
            if w == usize::MAX || j == i {
                continue;
            }
            if rs.cartan(v, w) != t.cartan[i][j] || rs.cartan(w, v) != t.cartan[j][i] {
                return false;
            }
            if t.eps[i] == j && form.epsilon_set(NodeSet::single(v)) != NodeSet::single(w) {
                return false;
            }
            if t.eps[j] == i && form.epsilon_set(NodeSet::single(w)) != NodeSet::single(v) {
                return false;
            }
        }
        if t.eps[i] == i
            && !t.black[i]
            && form.epsilon_set(NodeSet::single(v)) != NodeSet::single(v)
        {
            return false;
        }
        true
    }

    fn go(
        form: &RealForm,
        t: &Template,
        nodes: &[usize],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        i: usize,
    ) -> bool {
        if i == nodes.len() {
            return true;
        }
        if map[i] != usize::MAX {
            return go(form, t, nodes, map, used, i + 1);
        }
        for k in 0..nodes.len() {
            if used[k] || !fits(form, t, map, i, nodes[k]) {
                continue;
            }
            used[k] = true;
            map[i] = nodes[k];
            if go(form, t, nodes, map, used, i + 1) {
                return true;
            }
            used[k] = false;
            map[i] = usize::MAX;
        }
        false
    }

    let _ = rs;
    let k = nodes.iter().position(|&v| v == target)?;
    if !fits(form, t, &map, t.node, target) {
        return None;
    }
    map[t.node] = target;
    used[k] = true;
    go(form, t, nodes, &mut map, &mut used, 0).then_some(map)
}

/// The nodes a white simple root's conjugate can involve.
fn subdiagram(form: &RealForm, a: usize) -> NodeSet {
    let rs = form.rs();
    let pair = NodeSet::single(a).union(form.epsilon_set(NodeSet::single(a)));
    let black = form.black();
    let mut out = pair;
    for b in black.iter() {
        let comp = rs.component(NodeSet::single(b), black);
        if comp.iter().any(|c| pair.iter().any(|p| rs.adjacent(c, p))) {
            out = out.union(comp);
        }
    }
    out
}

/// Compares σ on every simple root with the elementary rule its local
/// subdiagram matches. A white node whose subdiagram matches no rule fails.
pub fn validate_conjugation_rules(form: &RealForm) -> ConjugationReport {
    let rank = form.rank();
    let mut checks = Vec::with_capacity(rank);
    for a in 0..rank {
        let actual = form.sigma_simple_coeffs(a).to_vec();
        if form.black().contains(a) {
            let expected: Vec<i32> = (0..rank).map(|b| if b == a { -1 } else { 0 }).collect();
            checks.push(RuleCheck {
                node: a,
                pattern: Some(Pattern::Black),
                subdiagram: vec![a],
                ok: expected == actual,
                expected: Some(expected),
                actual,
            });
            continue;
        }
        let sub = subdiagram(form, a);
        let nodes: Vec<usize> = sub.iter().collect();
        let mut found = None;
        for t in templates(nodes.len()) {
            if let Some(map) = embed(form, &t, &nodes, a) {
                let mut expected = vec![0; rank];
                for (i, &v) in map.iter().enumerate() {
                    expected[v] += t.coeffs[i];
                }
                found = Some((t.pattern, expected));
                break;
            }
        }
        let (pattern, expected) = match found {
            Some((p, e)) => (Some(p), Some(e)),
            None => (None, None),
        };
        checks.push(RuleCheck {
            node: a,
            pattern,
            subdiagram: nodes,
            ok: expected.as_ref() == Some(&actual),
            expected,
            actual,
        });
    }
    ConjugationReport {
        form: form.to_string(),
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::satake::build_form_str;

    fn pattern_at(form: &str, node: usize) -> (Option<Pattern>, bool) {
        let f = build_form_str(form).unwrap();
        let r = validate_conjugation_rules(&f);
        let c = &r.checks[node];
        (c.pattern, c.ok)
    }

    #[test]
    fn su13_white_end_uses_chain_rule() {
        let f = build_form_str("AIV l=3").unwrap();
        assert_eq!(f.sigma_simple_coeffs(0), &[0, 1, 1]);
        assert_eq!(pattern_at("AIV l=3", 0), (Some(Pattern::AChain), true));
        assert_eq!(pattern_at("AIV l=3", 1), (Some(Pattern::Black), true));
    }

    #[test]
    fn elementary_patterns_show_up() {
        assert_eq!(pattern_at("AII p=2", 1), (Some(Pattern::A3), true));
        assert_eq!(pattern_at("BI p=2 l=4", 1), (Some(Pattern::B), true));
        assert_eq!(pattern_at("CIIa p=1 l=3", 1), (Some(Pattern::C), true));
        assert_eq!(pattern_at("DII l=5", 0), (Some(Pattern::D), true));
        assert_eq!(pattern_at("FII", 3), (Some(Pattern::F4), true));
        assert_eq!(pattern_at("SPLIT:G", 0), (Some(Pattern::A1), true));
        assert_eq!(pattern_at("COMPLEX:A l=2", 0), (Some(Pattern::A1xA1), true));
    }

    #[test]
    fn f4_rule_value() {
        let f = build_form_str("FII").unwrap();
        assert_eq!(f.sigma_simple_coeffs(3), &[1, 2, 3, 1]);
    }
}
