//! Full per-word invariant report and its JSON/CSV renderings.

use crate::bounds::{
    cut_bound_check, reported_signature, signature_defect, thm1_bounds, thm2_bounds, thm3_check,
    Constants, CutBound, Interval,
};
use crate::certificate::certificate_check;
use crate::error::Result;
use crate::surface::surface_data;
use crate::word::{
    components, hyperbolicity_criterion, is_sufficiently_complicated, syllables, twist_number,
    BraidWord, SyllableWord,
};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub positive: bool,
    pub sufficiently_complicated: bool,
    pub hyperbolicity_criterion: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CutReport {
    pub betti_sub: i64,
    pub betti_full: i64,
    pub delta_betti: i64,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InvariantReport {
    pub word: String,
    pub strands: usize,
    pub letters: usize,
    pub components: usize,
    pub b1: i64,
    pub sigma: i64,
    pub delta_sigma: i64,
    /// b1 / 2 for knots; absent for links.
    pub genus: Option<i64>,
    pub twist: i64,
    pub flags: Flags,
    pub thm1: Option<Interval>,
    pub thm2: Option<Interval>,
    pub thm3_ok: bool,
    pub cut: CutReport,
    #[serde(skip)]
    pub dots: usize,
    #[serde(skip)]
    pub subword_count: usize,
    #[serde(skip)]
    pub cut_ok_weak: bool,
    #[serde(skip)]
    pub cert_ok_lower: bool,
    #[serde(skip)]
    pub cert_ok_defect: bool,
}

/// Render a syllable word in the input grammar ("1^3 2 1^4").
pub fn render_syllables(s: &SyllableWord) -> String {
    s.syllables
        .iter()
        .map(|syl| {
            if syl.exponent == 1 {
                syl.column.to_string()
            } else {
                format!("{}^{}", syl.column, syl.exponent)
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn build_report(w: &BraidWord, exhaustive_twist: bool) -> Result<InvariantReport> {
    let constants = Constants::default();
    let s = syllables(w, true);
    let data = surface_data(w);
    let sigma = reported_signature(w);
    let ds = signature_defect(w);
    let t = twist_number(w, exhaustive_twist)? as i64;
    let comp = components(w);
    let cut: CutBound = cut_bound_check(w, exhaustive_twist)?;
    let cert = certificate_check(w, exhaustive_twist)?;
    Ok(InvariantReport {
        word: render_syllables(&syllables(w, false)),
        strands: w.strands,
        letters: w.letters.len(),
        components: comp,
        b1: data.betti,
        sigma,
        delta_sigma: ds,
        genus: (comp == 1).then_some(data.betti / 2),
        twist: t,
        flags: Flags {
            positive: true,
            sufficiently_complicated: is_sufficiently_complicated(&s),
            hyperbolicity_criterion: hyperbolicity_criterion(&s),
        },
        thm1: thm1_bounds(ds, &constants),
        thm2: thm2_bounds(t, &constants),
        thm3_ok: thm3_check(ds, t),
        cut: CutReport {
            betti_sub: cut.betti_sub,
            betti_full: cut.betti_full,
            delta_betti: cut.delta_betti,
            ok: cut.ok,
        },
        dots: cert.dots,
        subword_count: cert.count,
        cut_ok_weak: cut.ok_weak,
        cert_ok_lower: cert.ok_lower,
        cert_ok_defect: cert.ok_defect,
    })
}

pub const CSV_HEADER: &str = "word,strands,letters,components,b1,sigma,delta_sigma,twist,dots,subword_count,thm3_ok,cut_ok,vol1_lo,vol1_hi,vol2_lo,vol2_hi";

fn fmt_bound(i: Option<Interval>, pick_lo: bool) -> String {
    match i {
        Some(iv) => format!("{:.4}", if pick_lo { iv.lo } else { iv.hi }),
        None => String::new(),
    }
}

pub fn csv_row(r: &InvariantReport) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
        r.word,
        r.strands,
        r.letters,
        r.components,
        r.b1,
        r.sigma,
        r.delta_sigma,
        r.twist,
        r.dots,
        r.subword_count,
        r.thm3_ok,
        r.cut.ok,
        fmt_bound(r.thm1, true),
        fmt_bound(r.thm1, false),
        fmt_bound(r.thm2, true),
        fmt_bound(r.thm2, false),
    )
}
