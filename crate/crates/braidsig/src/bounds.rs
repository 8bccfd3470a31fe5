//! Signature defect, twist-number inequalities, volume-bound intervals
//! and the cut-decomposition bookkeeping.

use crate::error::Result;
use crate::inertia::{signature, SymmetricIntMatrix};
use crate::surface::{seifert_matrix, surface_data};
use crate::word::{normalize_far_commutation, syllables, BraidWord, SyllableWord};
use serde::Serialize;
use std::collections::BTreeMap;

/// Volumes of the regular ideal tetrahedron and octahedron. Stored at
/// full double precision; the printed 1.0149 / 3.6638 are truncations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    pub v3: f64,
    pub v8: f64,
}

impl Default for Constants {
    fn default() -> Self {
        Constants {
            v3: 1.014_941_606_409_653_6,
            v8: 3.663_862_376_708_876,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

/// The reported signature uses the convention in which positive braid
/// closures have positive signature (sigma of the closure of "1^2" is
/// +1); the raw brick-basis form is negated.
pub fn reported_signature(w: &BraidWord) -> i64 {
    let sym = seifert_matrix(w).symmetrized();
    -signature(&SymmetricIntMatrix::new(sym))
}

/// delta sigma = b1 - sigma.
pub fn signature_defect(w: &BraidWord) -> i64 {
    surface_data(w).betti - reported_signature(w)
}

/// Theorem-1 interval [v8/3 * ds, 105 v3 * ds); requires ds >= 1.
pub fn thm1_bounds(delta_sigma: i64, k: &Constants) -> Option<Interval> {
    if delta_sigma < 1 {
        return None;
    }
    let ds = delta_sigma as f64;
    Some(Interval {
        lo: k.v8 / 3.0 * ds,
        hi: 105.0 * k.v3 * ds,
    })
}

/// Theorem-2 interval [2/3 v8 * t, 10 v3 * (t - 1)); requires t >= 2.
pub fn thm2_bounds(twist: i64, k: &Constants) -> Option<Interval> {
    if twist < 2 {
        return None;
    }
    let t = twist as f64;
    Some(Interval {
        lo: 2.0 / 3.0 * k.v8 * t,
        hi: 10.0 * k.v3 * (t - 1.0),
    })
}

/// (1/2) ds <= t <= (21/2) ds, evaluated in integers.
pub fn thm3_check(delta_sigma: i64, twist: i64) -> bool {
    delta_sigma <= 2 * twist && 2 * twist <= 21 * delta_sigma
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutDecomposition {
    /// Per-column exponent lists; each exponent k is a T(2, k) factor of
    /// the cut surface's boundary.
    pub regions: BTreeMap<usize, Vec<usize>>,
    pub betti_sub: i64,
    pub betti_full: i64,
    pub delta_betti: i64,
}

/// Cut the fiber surface along an interval left of every twist region.
/// What remains retracts to a disjoint union of connected sums of
/// T(2, k) pieces with b1 = sum of (k - 1); the defect of that boundary
/// is zero, so delta_betti controls the signature defect.
pub fn cut_decomposition(s: &SyllableWord) -> CutDecomposition {
    let norm = normalize_far_commutation(s);
    let mut regions: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut betti_sub = 0i64;
    for syl in &norm.syllables {
        regions.entry(syl.column).or_default().push(syl.exponent);
        betti_sub += syl.exponent as i64 - 1;
    }
    let w = BraidWord::from_syllables(&norm);
    let betti_full = surface_data(&w).betti;
    CutDecomposition {
        regions,
        betti_sub,
        betti_full,
        delta_betti: betti_full - betti_sub,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CutBound {
    pub betti_sub: i64,
    pub betti_full: i64,
    pub delta_betti: i64,
    /// delta sigma <= 2 * delta_betti.
    pub ok: bool,
    /// The weaker bound delta sigma <= 2 t.
    pub ok_weak: bool,
}

pub fn cut_bound_check(w: &BraidWord, exhaustive_twist: bool) -> Result<CutBound> {
    let ds = signature_defect(w);
    let s = syllables(w, true);
    let cut = cut_decomposition(&s);
    let t = crate::word::twist_number(w, exhaustive_twist)? as i64;
    Ok(CutBound {
        betti_sub: cut.betti_sub,
        betti_full: cut.betti_full,
        delta_betti: cut.delta_betti,
        ok: ds <= 2 * cut.delta_betti,
        ok_weak: ds <= 2 * t,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_braid;

    fn word(text: &str) -> BraidWord {
        parse_braid(text, None).unwrap()
    }

    #[test]
    fn torus_defect_zero() {
        assert_eq!(signature_defect(&word("1^7")), 0);
        assert_eq!(signature_defect(&parse_braid("", Some(2)).unwrap()), 0);
    }

    #[test]
    fn alternating_defect_two() {
        assert_eq!(signature_defect(&word("1^3 2^2 1^2 2^4")), 2);
        assert_eq!(signature_defect(&word("1^3 2^3 1^3 2^3")), 2);
    }

    #[test]
    fn thm1_examples() {
        let k = Constants::default();
        let i = thm1_bounds(2, &k).unwrap();
        assert_eq!(format!("{:.4}", i.lo), "2.4426");
        assert_eq!(format!("{:.4}", i.hi), "213.1377");
        let i = thm1_bounds(1, &k).unwrap();
        assert_eq!(format!("{:.4}", i.lo), "1.2213");
        assert_eq!(format!("{:.4}", i.hi), "106.5689");
        assert!(thm1_bounds(0, &k).is_none());
    }

    #[test]
    fn thm2_examples() {
        let k = Constants::default();
        let i = thm2_bounds(4, &k).unwrap();
        assert_eq!(format!("{:.4}", i.lo), "9.7703");
        assert_eq!(format!("{:.4}", i.hi), "30.4482");
        let i = thm2_bounds(2, &k).unwrap();
        assert_eq!(format!("{:.4}", i.lo), "4.8851");
        assert_eq!(format!("{:.4}", i.hi), "10.1494");
        assert!(thm2_bounds(1, &k).is_none());
    }

    #[test]
    fn thm3_cases() {
        assert!(thm3_check(2, 4));
        assert!(!thm3_check(2, 22));
        assert!(!thm3_check(10, 4));
    }

    #[test]
    fn cut_decomposition_examples() {
        let s = |t: &str| crate::word::syllables(&word(t), true);
        let c = cut_decomposition(&s("1^3 2^3 1^3 2^3"));
        assert_eq!(c.regions[&1], vec![3, 3]);
        assert_eq!(c.regions[&2], vec![3, 3]);
        assert_eq!((c.betti_sub, c.betti_full, c.delta_betti), (8, 10, 2));

        let c = cut_decomposition(&s("1^5"));
        assert_eq!((c.betti_sub, c.betti_full, c.delta_betti), (4, 4, 0));

        let w = parse_braid("1^3 3^3", Some(4)).unwrap();
        let c = cut_decomposition(&crate::word::syllables(&w, true));
        assert_eq!((c.betti_sub, c.betti_full, c.delta_betti), (4, 4, 0));
    }

    #[test]
    fn cut_bound_examples() {
        let b = cut_bound_check(&word("1^3 2^3 1^3 2^3"), false).unwrap();
        assert!(b.ok && b.ok_weak);
        assert_eq!(b.delta_betti, 2);
        let b = cut_bound_check(&word("1^9"), false).unwrap();
        assert!(b.ok && b.ok_weak);
        let b = cut_bound_check(&word("1^2 2^2 1^2 2^2"), false).unwrap();
        assert!(b.ok && b.ok_weak);
    }
}
