//! Exhaustive enumeration over φ, comparison against the golden tables, and
//! report rendering.

pub mod seed;
pub mod tables;
pub mod validate;

use std::fmt;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use crate::bits::NodeSet;
use crate::error::{Error, Result};
use crate::fibration::{reduce_degenerate, Reduction};
use crate::levi::{levi_verdict, Discrepancy, LeviVerdict, Order};
use crate::parabolic::{mark, MarkingSummary, Trichotomy};
use crate::rootspace::RootVector;
use crate::satake::{build_form, FormSpec, RealForm};

pub use seed::Seeds;
pub use tables::{golden_tables, row_for, Reading, TableId, TableRow};

/// Exactly one bucket per marking, tested in this order.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Bucket {
    TotallyReal,
    TotallyComplex,
    NotFundamental,
    Degenerate,
    Order1,
    Order2,
    Higher(u32),
}

/// Serialized as its display string.
impl Serialize for Bucket {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Display for Bucket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bucket::TotallyReal => f.write_str("totally real"),
            Bucket::TotallyComplex => f.write_str("totally complex"),
            Bucket::NotFundamental => f.write_str("not fundamental"),
            Bucket::Degenerate => f.write_str("degenerate"),
            Bucket::Order1 => f.write_str("order 1"),
            Bucket::Order2 => f.write_str("order 2"),
            Bucket::Higher(k) => write!(f, "order {k}"),
        }
    }
}

fn bucket_of(trichotomy: Trichotomy, v: &LeviVerdict) -> Bucket {
    match trichotomy {
        Trichotomy::TotallyReal => Bucket::TotallyReal,
        Trichotomy::TotallyComplex => Bucket::TotallyComplex,
        Trichotomy::Generic if !v.fundamental => Bucket::NotFundamental,
        Trichotomy::Generic => match v.order {
            Order::One => Bucket::Order1,
            Order::Two => Bucket::Order2,
            Order::Higher(k) => Bucket::Higher(k),
            _ => Bucket::Degenerate,
        },
    }
}

/// Everything computed for one (form, φ).
#[derive(Clone, Debug)]
pub struct AnalysisReport {
    pub spec: FormSpec,
    pub phi: NodeSet,
    pub summary: MarkingSummary,
    pub trichotomy: Trichotomy,
    pub verdict: LeviVerdict,
    pub bucket: Bucket,
    /// Present for fundamental generic markings.
    pub reduction: Option<Reduction>,
    pub critical_roots: Vec<CriticalRootReport>,
}

/// A critical root with its κ and shortest witness, roots as doubled
/// coordinates.
#[derive(Clone, Debug, Serialize)]
pub struct CriticalRootReport {
    pub root: RootVector,
    pub kappa: Option<u32>,
    pub witness: Vec<RootVector>,
}

pub fn analyze(form: &RealForm, phi: NodeSet) -> Result<AnalysisReport> {
    if phi.iter().any(|a| a >= form.rank()) {
        return Err(Error::BadParams {
            form: form.to_string(),
            reason: format!("φ label out of range 1..={}", form.rank()),
        });
    }
    let m = mark(form, phi);
    let summary = m.summary()?;
    let trichotomy = m.trichotomy()?;
    let verdict = levi_verdict(&m)?;
    let bucket = bucket_of(trichotomy, &verdict);
    let reduction = if trichotomy == Trichotomy::Generic && verdict.fundamental {
        Some(reduce_degenerate(form, phi)?)
    } else {
        None
    };
    let rs = form.rs();
    let critical_roots = verdict
        .critical
        .iter()
        .map(|c| CriticalRootReport {
            root: rs.root(c.root).clone(),
            kappa: c.kappa,
            witness: c.witness.iter().map(|&w| rs.root(w).clone()).collect(),
        })
        .collect();
    Ok(AnalysisReport {
        spec: form.spec(),
        phi,
        summary,
        trichotomy,
        verdict,
        bucket,
        reduction,
        critical_roots,
    })
}

/// One report per φ ⊆ B, in increasing mask order.
pub fn enumerate(form: &RealForm) -> Result<Vec<AnalysisReport>> {
    NodeSet::subsets(form.rank())
        .map(|phi| analyze(form, phi))
        .collect()
}

impl AnalysisReport {
    /// The verdict fragment: fundamental, order, chain sizes, critical roots.
    pub fn verdict_json(&self) -> Value {
        let roots: Vec<Value> = self
            .critical_roots
            .iter()
            .map(|c| {
                let kappa = match c.kappa {
                    Some(k) => json!(k),
                    None => json!("inf"),
                };
                json!({ "root": c.root, "kappa": kappa, "witness": c.witness })
            })
            .collect();
        json!({
            "fundamental": self.verdict.fundamental,
            "order": self.verdict.order.to_string(),
            "chain_sizes": self.verdict.chain_sizes(),
            "critical_roots": roots,
        })
    }

    pub fn to_json(&self, expected: Option<Expected>) -> Value {
        json!({
            "form": self.spec.name,
            "params": self.spec.params_string(),
            "phi_mask": self.phi.0,
            "marking": self.summary,
            "bucket": self.bucket.to_string(),
            "verdict": self.verdict_json(),
            "one_step": self.verdict.one_step,
            "discrepancies": self.verdict.discrepancies,
            "reduction": self.reduction,
            "diff_expected": expected.map(|e| e.to_string()),
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let v = &self.verdict;
        let _ = writeln!(s, "form: {}", self.spec);
        let _ = writeln!(s, "phi: {:?}", self.phi);
        let _ = writeln!(s, "n: {}  d: {}", self.summary.n, self.summary.d);
        let _ = writeln!(s, "trichotomy: {}", self.trichotomy);
        let _ = writeln!(s, "fundamental: {}", v.fundamental);
        let _ = writeln!(s, "finitely nondegenerate: {}", v.finitely_nondegenerate);
        let _ = writeln!(s, "order: {}", v.order);
        let _ = writeln!(s, "bucket: {}", self.bucket);
        let sizes: Vec<String> = v.chain_sizes().iter().map(|k| k.to_string()).collect();
        let _ = writeln!(s, "chain sizes: {}", sizes.join(" > "));
        if !self.critical_roots.is_empty() {
            let _ = writeln!(s, "critical roots:");
        }
        for c in &self.critical_roots {
            match c.kappa {
                Some(k) => {
                    let steps: Vec<String> = c.witness.iter().map(|w| w.to_string()).collect();
                    let _ = writeln!(s, "  {}  κ={k}  via [{}]", c.root, steps.join(", "));
                }
                None => {
                    let _ = writeln!(s, "  {}  κ=inf", c.root);
                }
            }
        }
        if let Some(r) = &self.reduction {
            let _ = writeln!(s, "reduction: Π={:?} ψ={:?}", r.pi, r.psi);
        }
        for d in &v.discrepancies {
            if !matches!(d, Discrepancy::EitherSideTarget { .. }) {
                let _ = writeln!(s, "discrepancy: {d:?}");
            }
        }
        let either = v
            .discrepancies
            .iter()
            .filter(|d| matches!(d, Discrepancy::EitherSideTarget { .. }))
            .count();
        if either > 0 {
            let _ = writeln!(s, "either-side κ differs on {either} root(s)");
        }
        s
    }
}

/// What a golden table lists for φ.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Expected {
    One,
    Two,
    None,
}

/// Serialized as its display string.
impl Serialize for Expected {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Expected::One => "1",
            Expected::Two => "2",
            Expected::None => "none",
        })
    }
}

/// What the engine found for φ, collapsed to the table's vocabulary.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Computed {
    One,
    Two,
    Higher(u32),
    Degenerate,
    NotApplicable,
    NotFundamental,
}

impl From<Bucket> for Computed {
    fn from(b: Bucket) -> Computed {
        match b {
            Bucket::TotallyReal | Bucket::TotallyComplex => Computed::NotApplicable,
            Bucket::NotFundamental => Computed::NotFundamental,
            Bucket::Degenerate => Computed::Degenerate,
            Bucket::Order1 => Computed::One,
            Bucket::Order2 => Computed::Two,
            Bucket::Higher(k) => Computed::Higher(k),
        }
    }
}

/// Serialized as its display string.
impl Serialize for Computed {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Display for Computed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Computed::One => f.write_str("1"),
            Computed::Two => f.write_str("2"),
            Computed::Higher(k) => write!(f, "{k}"),
            Computed::Degenerate => f.write_str("degenerate"),
            Computed::NotApplicable => f.write_str("n/a"),
            Computed::NotFundamental => f.write_str("not fundamental"),
        }
    }
}

pub fn agrees(e: Expected, c: Computed) -> bool {
    match e {
        Expected::One => c == Computed::One,
        Expected::Two => c == Computed::Two,
        Expected::None => matches!(
            c,
            Computed::Degenerate | Computed::NotApplicable | Computed::NotFundamental
        ),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationDiff {
    pub form: String,
    pub phi: NodeSet,
    pub expected: Expected,
    pub computed: Computed,
    pub agree: bool,
}

/// Expected entry for φ: a seed override if one covers this instance,
/// otherwise the golden row under `reading`.
pub fn expected_for(
    rows: &[TableRow],
    seeds: &Seeds,
    form: &RealForm,
    phi: NodeSet,
    reading: Reading,
) -> Result<Expected> {
    if let Some(e) = seeds.expected(form, phi) {
        return Ok(e);
    }
    let row = row_for(rows, form, reading)
        .ok_or_else(|| Error::UnknownForm(format!("no golden row for {}", form.name())))?;
    Ok(if (row.order1)(form, phi) {
        Expected::One
    } else if (row.order2)(form, phi) {
        Expected::Two
    } else {
        Expected::None
    })
}

/// All (φ, expected, computed) for one form, agreeing or not.
pub fn compare_form(
    form: &RealForm,
    rows: &[TableRow],
    seeds: &Seeds,
    reading: Reading,
) -> Result<Vec<(AnalysisReport, ClassificationDiff)>> {
    enumerate(form)?
        .into_iter()
        .map(|r| {
            let expected = expected_for(rows, seeds, form, r.phi, reading)?;
            let computed = Computed::from(r.bucket);
            let d = ClassificationDiff {
                form: form.spec().to_string(),
                phi: r.phi,
                expected,
                computed,
                agree: agrees(expected, computed),
            };
            Ok((r, d))
        })
        .collect()
}

/// Disagreements between enumeration and the golden tables over `instances`.
pub fn verify_tables_with(
    instances: &[FormSpec],
    reading: Reading,
    seeds: &Seeds,
) -> Result<Vec<ClassificationDiff>> {
    let rows = golden_tables();
    let mut out = Vec::new();
    for spec in instances {
        let form = build_form(spec)?;
        out.extend(
            compare_form(&form, &rows, seeds, reading)?
                .into_iter()
                .map(|(_, d)| d)
                .filter(|d| !d.agree),
        );
    }
    Ok(out)
}

/// `verify_tables_with` without seed overrides.
pub fn verify_tables(instances: &[FormSpec], reading: Reading) -> Result<Vec<ClassificationDiff>> {
    verify_tables_with(instances, reading, &Seeds::default())
}

/// CSV with one row per analysed marking.
pub fn to_csv(rows: &[(AnalysisReport, Option<Expected>)]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::InternalInconsistency(format!("csv: {e}"));
    w.write_record([
        "form",
        "params",
        "phi_mask",
        "phi_labels",
        "n",
        "d",
        "trichotomy",
        "fundamental",
        "order",
        "diff_expected",
    ])
    .map_err(io)?;
    for (r, e) in rows {
        let labels: Vec<String> = r.phi.labels().iter().map(|l| l.to_string()).collect();
        w.write_record([
            r.spec.name.clone(),
            r.spec.params_string(),
            format!("0x{:x}", r.phi.0),
            labels.join(" "),
            r.summary.n.to_string(),
            r.summary.d.to_string(),
            r.trichotomy.to_string(),
            r.verdict.fundamental.to_string(),
            r.verdict.order.to_string(),
            e.map(|e| e.to_string()).unwrap_or_default(),
        ])
        .map_err(io)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::InternalInconsistency(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::InternalInconsistency(format!("csv: {e}")))
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorReport {
    pub form: String,
    pub phi: NodeSet,
    pub trichotomy: String,
    pub fundamental: bool,
    pub finitely_nondegenerate: bool,
    pub order: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProductReport {
    pub factors: Vec<FactorReport>,
    pub fundamental: bool,
    pub finitely_nondegenerate: bool,
    /// Maximum of the factor orders when every factor has a finite order.
    pub order: Option<u32>,
    /// Indices of totally real or totally complex factors.
    pub not_applicable: Vec<usize>,
}

/// A direct sum of simple factors, each with its own marking.
pub fn product_analysis(factors: &[(FormSpec, NodeSet)]) -> Result<ProductReport> {
    let mut out = Vec::with_capacity(factors.len());
    let mut orders = Vec::new();
    let mut not_applicable = Vec::new();
    for (i, (spec, phi)) in factors.iter().enumerate() {
        let form = build_form(spec)?;
        let r = analyze(&form, *phi)?;
        if r.verdict.order == Order::NotApplicable {
            not_applicable.push(i);
        }
        orders.push(r.verdict.order.finite());
        out.push(FactorReport {
            form: r.spec.to_string(),
            phi: *phi,
            trichotomy: r.trichotomy.to_string(),
            fundamental: r.verdict.fundamental,
            finitely_nondegenerate: r.verdict.finitely_nondegenerate,
            order: r.verdict.order.to_string(),
        });
    }
    let order = orders
        .iter()
        .copied()
        .collect::<Option<Vec<u32>>>()
        .and_then(|v| v.into_iter().max());
    Ok(ProductReport {
        fundamental: out.iter().all(|f| f.fundamental),
        finitely_nondegenerate: out.iter().all(|f| f.finitely_nondegenerate),
        factors: out,
        order,
        not_applicable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::satake::build_form_str;

    #[test]
    fn su13_enumeration() {
        let f = build_form_str("AIV l=3").unwrap();
        let all = enumerate(&f).unwrap();
        assert_eq!(all.len(), 8);
        let two: Vec<NodeSet> = all
            .iter()
            .filter(|r| r.bucket == Bucket::Order2)
            .map(|r| r.phi)
            .collect();
        assert_eq!(two, vec![NodeSet::from_labels(&[2])]);
        assert!(verify_tables(&[f.spec()], Reading::Verbatim)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn compact_all_totally_complex() {
        let f = build_form_str("COMPACT:A l=2").unwrap();
        assert!(enumerate(&f)
            .unwrap()
            .iter()
            .all(|r| r.bucket == Bucket::TotallyComplex));
    }

    #[test]
    fn verdict_json_shape() {
        let f = build_form_str("AIV l=3").unwrap();
        let r = analyze(&f, NodeSet::from_labels(&[2])).unwrap();
        let v = r.verdict_json();
        assert_eq!(v["order"], "2");
        assert_eq!(v["fundamental"], true);
        assert!(v["critical_roots"]
            .as_array()
            .unwrap()
            .iter()
            .all(|c| c["kappa"].is_u64()));
        let text = r.to_text();
        assert!(text.contains("order: 2"));
    }

    #[test]
    fn products() {
        let a = FormSpec::new("AIV").l(3);
        let p = product_analysis(&[
            (a.clone(), NodeSet::from_labels(&[2])),
            (a.clone(), NodeSet::from_labels(&[2])),
        ])
        .unwrap();
        assert!(p.fundamental && p.order == Some(2));
        let p = product_analysis(&[
            (a, NodeSet::from_labels(&[2])),
            (FormSpec::new("SPLIT:A").l(1), NodeSet::EMPTY),
        ])
        .unwrap();
        assert_eq!(p.not_applicable, vec![1]);
        assert_eq!(p.order, None);
    }

    #[test]
    fn csv_header_and_row() {
        let f = build_form_str("AIV l=3").unwrap();
        let r = analyze(&f, NodeSet::from_labels(&[2])).unwrap();
        let s = to_csv(&[(r, Some(Expected::Two))]).unwrap();
        let mut lines = s.lines();
        assert_eq!(
            lines.next().unwrap(),
            "form,params,phi_mask,phi_labels,n,d,trichotomy,fundamental,order,diff_expected"
        );
        assert_eq!(
            lines.next().unwrap(),
            "AIV,p=1 l=3,0x2,2,3,1,generic,true,2,2"
        );
    }
}
