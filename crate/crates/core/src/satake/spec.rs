//! Form specifiers (`AIIIa p=2 l=5`, `EIV`, `SPLIT:D l=5`) and the catalogue.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootspace::Family;

/// A real form name with its integer parameters, as written by users.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FormSpec {
    pub name: String,
    pub p: Option<usize>,
    pub l: Option<usize>,
}

impl FormSpec {
    pub fn new(name: &str) -> Self {
        FormSpec {
            name: name.to_string(),
            p: None,
            l: None,
        }
    }

    pub fn p(mut self, p: usize) -> Self {
        self.p = Some(p);
        self
    }

    pub fn l(mut self, l: usize) -> Self {
        self.l = Some(l);
        self
    }

    /// Parameter part only, e.g. `p=2 l=5`.
    pub fn params_string(&self) -> String {
        let mut parts = Vec::new();
        if let Some(p) = self.p {
            parts.push(format!("p={p}"));
        }
        if let Some(l) = self.l {
            parts.push(format!("l={l}"));
        }
        parts.join(" ")
    }
}

impl fmt::Display for FormSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params = self.params_string();
        if params.is_empty() {
            write!(f, "{}", self.name)
        } else {
            write!(f, "{} {}", self.name, params)
        }
    }
}

impl FromStr for FormSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut tokens = s.split_whitespace();
        let name = tokens
            .next()
            .ok_or_else(|| Error::Parse("empty form specifier".into()))?;
        let mut spec = FormSpec::new(name);
        for tok in tokens {
            let (key, value) = tok
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got `{tok}`")))?;
            let v: usize = value
                .parse()
                .map_err(|_| Error::Parse(format!("`{value}` is not a non-negative integer")))?;
            match key {
                "p" => spec.p = Some(v),
                "l" | "ℓ" => spec.l = Some(v),
                _ => return Err(Error::Parse(format!("unknown parameter `{key}`"))),
            }
        }
        Ok(spec)
    }
}

/// Kinds of σ the catalogue knows how to build.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Shape {
    Split,
    Compact,
    Complex,
    /// su(p, q) with p + q = ℓ + 1.
    Unitary {
        p: usize,
    },
    /// sl(p, H), ℓ = 2p − 1.
    Quaternionic {
        p: usize,
    },
    /// so(p, 2ℓ + 1 − p).
    OddOrthogonal {
        p: usize,
    },
    /// sp(p, ℓ − p).
    QuaternionicSymplectic {
        p: usize,
    },
    /// so(p, 2ℓ − p).
    EvenOrthogonal {
        p: usize,
    },
    /// so*(2ℓ).
    StarOrthogonal,
    EII,
    EIII,
    EIV,
    EVI,
    EVII,
    EIX,
    FII,
}

/// A specifier after validation: canonical label, type, rank and σ shape.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Resolved {
    pub label: String,
    pub family: Family,
    pub rank: usize,
    pub p: Option<usize>,
    pub shape: Shape,
}

impl Resolved {
    /// Canonical specifier that resolves back to this form.
    pub fn spec(&self) -> FormSpec {
        let mut s = FormSpec::new(&self.label);
        match self.shape {
            Shape::Split | Shape::Compact | Shape::Complex => {
                if self.label.contains(':') || matches!(self.family, Family::A | Family::C) {
                    s.l = Some(self.rank);
                }
            }
            Shape::Unitary { p }
            | Shape::OddOrthogonal { p }
            | Shape::QuaternionicSymplectic { p }
            | Shape::EvenOrthogonal { p } => {
                s.p = Some(p);
                s.l = Some(self.rank);
            }
            Shape::Quaternionic { p } => s.p = Some(p),
            Shape::StarOrthogonal => s.p = self.p,
            _ => {}
        }
        s
    }
}

fn bad(form: &str, reason: impl Into<String>) -> Error {
    Error::BadParams {
        form: form.to_string(),
        reason: reason.into(),
    }
}

fn need(form: &str, v: Option<usize>, what: &str) -> Result<usize> {
    v.ok_or_else(|| bad(form, format!("missing {what}")))
}

fn check_fixed(form: &str, l: Option<usize>, rank: usize) -> Result<()> {
    match l {
        Some(x) if x != rank => Err(bad(form, format!("rank is {rank}"))),
        _ => Ok(()),
    }
}

fn exceptional(
    name: &str,
    spec: &FormSpec,
    family: Family,
    rank: usize,
    shape: Shape,
) -> Result<Resolved> {
    check_fixed(name, spec.l, rank)?;
    if spec.p.is_some() {
        return Err(bad(name, "takes no p"));
    }
    Ok(Resolved {
        label: name.to_string(),
        family,
        rank,
        p: None,
        shape,
    })
}

/// Validates a specifier and fixes its canonical label.
pub fn resolve(spec: &FormSpec) -> Result<Resolved> {
    let name = spec.name.as_str();
    if let Some((kind, fam)) = name.split_once(':') {
        let shape = match kind {
            "SPLIT" => Shape::Split,
            "COMPACT" => Shape::Compact,
            "COMPLEX" => Shape::Complex,
            _ => return Err(Error::UnknownForm(spec.name.clone())),
        };
        let mut chars = fam.chars();
        let family = match (chars.next().and_then(Family::from_letter), chars.next()) {
            (Some(f), None) => f,
            _ => return Err(Error::UnknownForm(spec.name.clone())),
        };
        let rank = match (spec.l, family.fixed_rank()) {
            (Some(l), _) => l,
            (None, Some(r)) => r,
            (None, None) => return Err(bad(name, "missing l")),
        };
        if !family.is_legal(rank) {
            return Err(bad(name, format!("no simple system {family}{rank}")));
        }
        if spec.p.is_some() {
            return Err(bad(name, "takes no p"));
        }
        return Ok(Resolved {
            label: format!("{kind}:{family}"),
            family,
            rank,
            p: None,
            shape,
        });
    }
    match name {
        "AI" => {
            let l = need(name, spec.l, "l")?;
            if l < 1 || spec.p.is_some() {
                return Err(bad(name, "needs l ≥ 1 only"));
            }
            Ok(Resolved {
                label: "AI".into(),
                family: Family::A,
                rank: l,
                p: None,
                shape: Shape::Split,
            })
        }
        "AII" => {
            let p = match (spec.p, spec.l) {
                (Some(p), _) => p,
                (None, Some(l)) if l % 2 == 1 => l.div_ceil(2),
                _ => return Err(bad(name, "needs p, with l = 2p − 1")),
            };
            if p < 2 {
                return Err(bad(name, "needs p ≥ 2"));
            }
            check_fixed(name, spec.l, 2 * p - 1)?;
            Ok(Resolved {
                label: "AII".into(),
                family: Family::A,
                rank: 2 * p - 1,
                p: Some(p),
                shape: Shape::Quaternionic { p },
            })
        }
        "AIII" | "AIIIa" | "AIIIb" | "AIV" => {
            let (p, l) = match name {
                "AIV" => (spec.p.unwrap_or(1), need(name, spec.l, "l")?),
                "AIIIb" => match (spec.p, spec.l) {
                    (Some(p), l) => (p, l.unwrap_or(2 * p.max(1) - 1)),
                    (None, Some(l)) if l % 2 == 1 => (l.div_ceil(2), l),
                    _ => return Err(bad(name, "needs p, with l = 2p − 1")),
                },
                _ => (need(name, spec.p, "p")?, need(name, spec.l, "l")?),
            };
            if l < 2 || p < 1 || 2 * p > l + 1 {
                return Err(bad(name, "needs 1 ≤ p ≤ (l+1)/2 and l ≥ 2"));
            }
            let label = if p == 1 {
                "AIV"
            } else if 2 * p == l + 1 {
                "AIIIb"
            } else {
                "AIIIa"
            };
            if (name == "AIV" || name == "AIIIb") && name != label {
                return Err(bad(name, format!("parameters describe {label}")));
            }
            Ok(Resolved {
                label: label.into(),
                family: Family::A,
                rank: l,
                p: Some(p),
                shape: Shape::Unitary { p },
            })
        }
        "BI" | "BII" => {
            let l = need(name, spec.l, "l")?;
            let p = if name == "BII" {
                spec.p.unwrap_or(1)
            } else {
                need(name, spec.p, "p")?
            };
            if l < 2 || p < 1 || p > l {
                return Err(bad(name, "needs 1 ≤ p ≤ l and l ≥ 2"));
            }
            let label = if p == 1 { "BII" } else { "BI" };
            if name == "BII" && p != 1 {
                return Err(bad(name, "is p = 1"));
            }
            Ok(Resolved {
                label: label.into(),
                family: Family::B,
                rank: l,
                p: Some(p),
                shape: Shape::OddOrthogonal { p },
            })
        }
        "CI" => {
            let l = need(name, spec.l, "l")?;
            if l < 3 || spec.p.is_some() {
                return Err(bad(name, "needs l ≥ 3 only"));
            }
            Ok(Resolved {
                label: "CI".into(),
                family: Family::C,
                rank: l,
                p: None,
                shape: Shape::Split,
            })
        }
        "CII" | "CIIa" | "CIIb" => {
            let (p, l) = match (spec.p, spec.l, name) {
                (Some(p), Some(l), _) => (p, l),
                (Some(p), None, "CIIb") => (p, 2 * p),
                (None, Some(l), "CIIb") if l % 2 == 0 => (l / 2, l),
                _ => return Err(bad(name, "needs p and l")),
            };
            if l < 3 || p < 1 || 2 * p > l {
                return Err(bad(name, "needs 1 ≤ p ≤ l/2 and l ≥ 3"));
            }
            let label = if 2 * p == l { "CIIb" } else { "CIIa" };
            if name != "CII" && name != label {
                return Err(bad(name, format!("parameters describe {label}")));
            }
            Ok(Resolved {
                label: label.into(),
                family: Family::C,
                rank: l,
                p: Some(p),
                shape: Shape::QuaternionicSymplectic { p },
            })
        }
        "DI" | "DIa" | "DIb" | "DII" => {
            let l = need(name, spec.l, "l")?;
            let p = match name {
                "DIb" => spec.p.unwrap_or(l.saturating_sub(1)),
                "DII" => spec.p.unwrap_or(1),
                _ => need(name, spec.p, "p")?,
            };
            if l < 4 || p < 1 || p + 1 > l {
                return Err(bad(name, "needs 1 ≤ p ≤ l − 1 and l ≥ 4"));
            }
            let label = if p == 1 {
                "DII"
            } else if p + 1 == l {
                "DIb"
            } else {
                "DIa"
            };
            if name != "DI" && name != label {
                return Err(bad(name, format!("parameters describe {label}")));
            }
            Ok(Resolved {
                label: label.into(),
                family: Family::D,
                rank: l,
                p: Some(p),
                shape: Shape::EvenOrthogonal { p },
            })
        }
        "DIII" | "DIIIa" | "DIIIb" => {
            let l = match (spec.p, spec.l, name) {
                (_, Some(l), _) => l,
                (Some(p), None, "DIIIa") => 2 * p,
                (Some(p), None, "DIIIb") => 2 * p + 1,
                _ => return Err(bad(name, "needs p or l")),
            };
            let p = l / 2;
            if let Some(given) = spec.p {
                if given != p {
                    return Err(bad(name, "l must be 2p or 2p + 1"));
                }
            }
            if l < 4 {
                return Err(bad(name, "needs l ≥ 4"));
            }
            let label = if l % 2 == 0 { "DIIIa" } else { "DIIIb" };
            if name != "DIII" && name != label {
                return Err(bad(name, format!("parameters describe {label}")));
            }
            Ok(Resolved {
                label: label.into(),
                family: Family::D,
                rank: l,
                p: Some(p),
                shape: Shape::StarOrthogonal,
            })
        }
        "EI" => exceptional(name, spec, Family::E, 6, Shape::Split),
        "EII" => exceptional(name, spec, Family::E, 6, Shape::EII),
        "EIII" => exceptional(name, spec, Family::E, 6, Shape::EIII),
        "EIV" => exceptional(name, spec, Family::E, 6, Shape::EIV),
        "EV" => exceptional(name, spec, Family::E, 7, Shape::Split),
        "EVI" => exceptional(name, spec, Family::E, 7, Shape::EVI),
        "EVII" => exceptional(name, spec, Family::E, 7, Shape::EVII),
        "EVIII" => exceptional(name, spec, Family::E, 8, Shape::Split),
        "EIX" => exceptional(name, spec, Family::E, 8, Shape::EIX),
        "FI" => exceptional(name, spec, Family::F, 4, Shape::Split),
        "FII" => exceptional(name, spec, Family::F, 4, Shape::FII),
        "G" => exceptional(name, spec, Family::G, 2, Shape::Split),
        _ => Err(Error::UnknownForm(spec.name.clone())),
    }
}

/// One line of the catalogue: a name, its legal parameters, and the
/// instances used when no parameters are supplied.
#[derive(Clone, Debug, Serialize)]
pub struct CatalogueEntry {
    pub name: String,
    pub params: String,
    pub defaults: Vec<FormSpec>,
}

fn entry(name: &str, params: &str, defaults: Vec<FormSpec>) -> CatalogueEntry {
    CatalogueEntry {
        name: name.into(),
        params: params.into(),
        defaults,
    }
}

/// Every form the engine can build, in a fixed order.
pub fn catalogue() -> Vec<CatalogueEntry> {
    let s = FormSpec::new;
    let mut out = vec![
        entry("AI", "l ≥ 1", vec![s("AI").l(2), s("AI").l(3)]),
        entry(
            "AII",
            "p ≥ 2, l = 2p − 1",
            vec![s("AII").p(2), s("AII").p(3)],
        ),
        entry(
            "AIIIa",
            "2 ≤ p ≤ l/2, l ≥ 3",
            vec![s("AIIIa").p(2).l(4), s("AIIIa").p(2).l(5)],
        ),
        entry(
            "AIIIb",
            "p ≥ 2, l = 2p − 1",
            vec![s("AIIIb").p(2), s("AIIIb").p(3)],
        ),
        entry("AIV", "p = 1, l ≥ 2", vec![s("AIV").l(3), s("AIV").l(4)]),
        entry(
            "BI",
            "2 ≤ p ≤ l",
            vec![s("BI").p(2).l(3), s("BI").p(2).l(4)],
        ),
        entry("BII", "p = 1, l ≥ 2", vec![s("BII").l(3), s("BII").l(4)]),
        entry("CI", "l ≥ 3", vec![s("CI").l(3), s("CI").l(4)]),
        entry(
            "CIIa",
            "1 ≤ p, 2p < l",
            vec![s("CIIa").p(1).l(3), s("CIIa").p(1).l(4)],
        ),
        entry(
            "CIIb",
            "p ≥ 2, l = 2p",
            vec![s("CIIb").p(2), s("CIIb").p(3)],
        ),
        entry(
            "DIa",
            "2 ≤ p ≤ l − 2",
            vec![s("DIa").p(2).l(4), s("DIa").p(2).l(5)],
        ),
        entry(
            "DIb",
            "p = l − 1, l ≥ 4",
            vec![s("DIb").l(4), s("DIb").l(5)],
        ),
        entry("DII", "p = 1, l ≥ 4", vec![s("DII").l(4), s("DII").l(5)]),
        entry(
            "DIIIa",
            "p ≥ 2, l = 2p",
            vec![s("DIIIa").p(2), s("DIIIa").p(3)],
        ),
        entry(
            "DIIIb",
            "p ≥ 2, l = 2p + 1",
            vec![s("DIIIb").p(2), s("DIIIb").p(3)],
        ),
        entry("EI", "", vec![s("EI")]),
        entry("EII", "", vec![s("EII")]),
        entry("EIII", "", vec![s("EIII")]),
        entry("EIV", "", vec![s("EIV")]),
        entry("EV", "", vec![s("EV")]),
        entry("EVI", "", vec![s("EVI")]),
        entry("EVII", "", vec![s("EVII")]),
        entry("EVIII", "", vec![s("EVIII")]),
        entry("EIX", "", vec![s("EIX")]),
        entry("FI", "", vec![s("FI")]),
        entry("FII", "", vec![s("FII")]),
        entry("G", "", vec![s("G")]),
    ];
    let small = |kind: &str, extra: bool| -> Vec<FormSpec> {
        let mut v = vec![
            s(&format!("{kind}:A")).l(1),
            s(&format!("{kind}:A")).l(2),
            s(&format!("{kind}:A")).l(3),
            s(&format!("{kind}:B")).l(2),
            s(&format!("{kind}:B")).l(3),
            s(&format!("{kind}:C")).l(3),
            s(&format!("{kind}:D")).l(4),
            s(&format!("{kind}:G")),
        ];
        if extra {
            v.push(s(&format!("{kind}:F")));
            v.push(s(&format!("{kind}:E")).l(6));
            v.push(s(&format!("{kind}:E")).l(7));
            v.push(s(&format!("{kind}:E")).l(8));
        } else {
            v.push(s(&format!("{kind}:F")));
        }
        v
    };
    out.push(entry(
        "SPLIT:X",
        "any legal type and rank",
        small("SPLIT", true),
    ));
    out.push(entry(
        "COMPACT:X",
        "any legal type and rank",
        small("COMPACT", true),
    ));
    out.push(entry(
        "COMPLEX:X",
        "any legal type and rank",
        small("COMPLEX", false),
    ));
    out
}

/// All default instances in catalogue order.
pub fn default_instances() -> Vec<FormSpec> {
    catalogue().into_iter().flat_map(|e| e.defaults).collect()
}
