//! JSON payloads and their plain-text renderings.

use std::fmt::Write;

use gradalg::conjectures::ConjectureVerdict;
use gradalg::generic::GenericReport;
use gradalg::hilbert::TypeReport;
use gradalg::{AlgebraType, Flavor, PowerSeries};
use serde::Serialize;

pub fn coeff_list(s: &PowerSeries) -> String {
    s.to_strings().join(", ")
}

#[derive(Serialize)]
pub struct HilbertOut {
    pub series: PowerSeries,
    pub slice_dims: Vec<usize>,
    #[serde(rename = "type")]
    pub t: AlgebraType,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lie_series: Option<PowerSeries>,
}

impl HilbertOut {
    pub fn text(&self) -> String {
        let mut out = format!("type {}\nseries {}\n", self.t, coeff_list(&self.series));
        let dims: Vec<String> = self.slice_dims.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "ideal dims {}", dims.join(", "));
        if let Some(l) = &self.lie_series {
            let _ = writeln!(out, "lie series {}", coeff_list(l));
        }
        out
    }
}

pub fn type_text(r: &TypeReport) -> String {
    let mut out = format!("type {}\nminimal {}\n", r.t, r.minimal);
    if !r.dropped_relations.is_empty() {
        let dropped: Vec<String> = r.dropped_relations.iter().map(|i| (i + 1).to_string()).collect();
        let _ = writeln!(out, "dropped relations {}", dropped.join(", "));
    }
    out
}

#[derive(Serialize)]
pub struct DualOut {
    pub flavor: Flavor,
    pub presentation: String,
}

#[derive(Serialize)]
pub struct StrongOut {
    #[serde(rename = "type")]
    pub t: AlgebraType,
    pub strongly_free: bool,
    pub degree: usize,
    pub product: PowerSeries,
}

impl StrongOut {
    pub fn text(&self) -> String {
        format!(
            "type {}\nstrongly free through degree {}: {}\nB(z) p_t(z) = {}\n",
            self.t,
            self.degree,
            self.strongly_free,
            coeff_list(&self.product)
        )
    }
}

pub fn generic_text(r: &GenericReport) -> String {
    let mut out = format!("{} type {} over F_{}\n", r.flavor, r.t, r.prime);
    for ((seed, s), t) in r.seeds.iter().zip(&r.per_sample_series).zip(&r.per_sample_types) {
        let _ = writeln!(out, "seed {seed}: {} type {t}", coeff_list(s));
    }
    let _ = writeln!(out, "estimate {}", coeff_list(&r.estimate));
    if !r.all_unanimous() {
        let split: Vec<String> = (0..r.unanimous.len())
            .filter(|&d| !r.unanimous[d])
            .map(|d| d.to_string())
            .collect();
        let _ = writeln!(out, "samples disagree in degrees {}", split.join(", "));
    }
    out
}

#[derive(Serialize)]
pub struct Verdicts {
    pub verdicts: Vec<ConjectureVerdict>,
}

impl Verdicts {
    pub fn text(&self) -> String {
        let mut out = String::new();
        for v in &self.verdicts {
            let name = match v.conjecture {
                gradalg::conjectures::Conjecture::Froberg => "froberg",
                gradalg::conjectures::Conjecture::Anick => "anick",
                gradalg::conjectures::Conjecture::Lie => "lie",
                gradalg::conjectures::Conjecture::Genkos => "koszul",
            };
            let regime = if v.proven_regime { "proven" } else { "open" };
            let _ = write!(out, "{name} {} D={}: {} [{regime}]", v.t, v.degree, v.status());
            let bad: Vec<String> = (0..v.matches.len())
                .filter(|&d| !v.matches[d])
                .map(|d| d.to_string())
                .collect();
            if !bad.is_empty() {
                let _ = write!(
                    out,
                    " degrees {}; expected {}; observed {}",
                    bad.join(", "),
                    coeff_list(&v.expected),
                    coeff_list(&v.observed)
                );
            }
            out.push('\n');
        }
        out
    }

    pub fn all_hold(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds())
    }
}

#[derive(Serialize)]
pub struct SeriesOut {
    pub series: PowerSeries,
}

#[derive(Serialize)]
pub struct CorpusList {
    pub corpus: Vec<&'static str>,
}
