//! Exhaustive and random enumeration of braid families by syllable
//! sequence, and the verification sweep.

use crate::error::{BraidError, Result};
use crate::report::{build_report, render_syllables, InvariantReport};
use crate::word::{
    hyperbolicity_criterion, is_sufficiently_complicated, syllables, twist_number, BraidWord,
    Syllable, SyllableWord,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::time::Instant;

#[derive(Debug, Clone)]
pub struct EnumerationSpec {
    pub strands: (usize, usize),
    pub syllable_count: (usize, usize),
    pub exponents: Vec<usize>,
    pub cyclic_dedup: bool,
    /// Keep only words whose greedy twist number equals the syllable
    /// count (minimal representatives).
    pub minimal_only: bool,
    pub require_sufficiently_complicated: bool,
    pub require_hyperbolic: bool,
    pub limit: Option<usize>,
    pub cap: usize,
}

impl Default for EnumerationSpec {
    fn default() -> Self {
        EnumerationSpec {
            strands: (3, 5),
            syllable_count: (4, 6),
            exponents: vec![3, 4],
            cyclic_dedup: true,
            minimal_only: true,
            require_sufficiently_complicated: true,
            require_hyperbolic: true,
            limit: None,
            cap: 1_000_000,
        }
    }
}

fn column_patterns(n: usize, t: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(t);
    fn rec(n: usize, t: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == t {
            if t < 2 || current[0] != current[t - 1] {
                out.push(current.clone());
            }
            return;
        }
        for col in 1..n {
            if current.last() == Some(&col) {
                continue;
            }
            current.push(col);
            rec(n, t, current, out);
            current.pop();
        }
    }
    rec(n, t, &mut current, &mut out);
    out
}

fn min_rotation_key(sylls: &[Syllable]) -> Vec<(usize, usize)> {
    let seq: Vec<(usize, usize)> = sylls.iter().map(|s| (s.column, s.exponent)).collect();
    (0..seq.len())
        .map(|r| {
            let mut rot = seq[r..].to_vec();
            rot.extend_from_slice(&seq[..r]);
            rot
        })
        .min()
        .unwrap_or_default()
}

fn exponent_assignments(exponents: &[usize], t: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..t {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                exponents.iter().map(move |&e| {
                    let mut next = prefix.clone();
                    next.push(e);
                    next
                })
            })
            .collect();
    }
    out
}

/// All syllable words in the family, in deterministic order, optionally
/// deduplicated up to cyclic rotation.
pub fn enumerate(spec: &EnumerationSpec) -> Result<Vec<SyllableWord>> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for n in spec.strands.0..=spec.strands.1 {
        for t in spec.syllable_count.0..=spec.syllable_count.1 {
            for pattern in column_patterns(n, t) {
                for exps in exponent_assignments(&spec.exponents, t) {
                    let sylls: Vec<Syllable> = pattern
                        .iter()
                        .zip(&exps)
                        .map(|(&column, &exponent)| Syllable { column, exponent })
                        .collect();
                    let word = SyllableWord {
                        strands: n,
                        syllables: sylls,
                        cyclic: true,
                    };
                    if accept(spec, &word)? {
                        if spec.cyclic_dedup
                            && !seen.insert((n, min_rotation_key(&word.syllables)))
                        {
                            continue;
                        }
                        out.push(word);
                        if out.len() > spec.cap {
                            return Err(BraidError::FamilyTooLarge(spec.cap));
                        }
                        if spec.limit.is_some_and(|l| out.len() >= l) {
                            return Ok(out);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

fn accept(spec: &EnumerationSpec, word: &SyllableWord) -> Result<bool> {
    let w = BraidWord::from_syllables(word);
    if spec.minimal_only && twist_number(&w, false)? != word.syllables.len() {
        return Ok(false);
    }
    let s = syllables(&w, true);
    if spec.require_sufficiently_complicated && !is_sufficiently_complicated(&s) {
        return Ok(false);
    }
    if spec.require_hyperbolic && !hyperbolicity_criterion(&s) {
        return Ok(false);
    }
    Ok(true)
}

/// Random family: uniform valid column pattern (rejection sampling) and
/// uniform exponents, reproducible from the seed.
pub fn random_words(spec: &EnumerationSpec, seed: u64, count: usize) -> Result<Vec<SyllableWord>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut attempts = 0usize;
    while out.len() < count && attempts < count * 10_000 {
        attempts += 1;
        let n = rng.gen_range(spec.strands.0..=spec.strands.1);
        let t = rng.gen_range(spec.syllable_count.0..=spec.syllable_count.1);
        if n < 3 && t > 1 {
            continue;
        }
        let mut pattern = Vec::with_capacity(t);
        let mut ok = true;
        for i in 0..t {
            let choices: Vec<usize> = (1..n)
                .filter(|&c| {
                    (i == 0 || pattern[i - 1] != c) && (i != t - 1 || t < 2 || pattern[0] != c)
                })
                .collect();
            match choices.choose(&mut rng) {
                Some(&c) => pattern.push(c),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        let sylls: Vec<Syllable> = pattern
            .into_iter()
            .map(|column| Syllable {
                column,
                exponent: *spec.exponents.choose(&mut rng).unwrap(),
            })
            .collect();
        let word = SyllableWord {
            strands: n,
            syllables: sylls,
            cyclic: true,
        };
        if accept(spec, &word)? {
            out.push(word);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub rows: Vec<InvariantReport>,
    pub failures: Vec<String>,
    pub min_ratio: Option<f64>,
    pub max_ratio: Option<f64>,
    pub wall_seconds: f64,
}

/// Run the full report over the family and check every asserted
/// inequality; failures are collected per word, never panicked.
pub fn verify_sweep(
    words: &[SyllableWord],
    exhaustive_twist: bool,
) -> Result<SweepReport> {
    let start = Instant::now();
    let mut rows = Vec::with_capacity(words.len());
    let mut failures = Vec::new();
    // min/max of t / delta sigma, compared exactly by cross-multiplication.
    let mut min_ratio: Option<(i64, i64)> = None;
    let mut max_ratio: Option<(i64, i64)> = None;
    for word in words {
        let w = BraidWord::from_syllables(word);
        let r = build_report(&w, exhaustive_twist)?;
        let name = render_syllables(word);
        let mut fail = |what: &str| failures.push(format!("{name}: {what}"));
        if !r.thm3_ok {
            fail("theorem 3 inequality");
        }
        if !r.cut.ok {
            fail("cut bound delta sigma <= 2 delta betti");
        }
        if !r.cut_ok_weak {
            fail("cut bound delta sigma <= 2 t");
        }
        if !r.cert_ok_lower {
            fail("certificate 21 count >= t");
        }
        if !r.cert_ok_defect {
            fail("certificate 2 count <= delta sigma");
        }
        if r.sigma.abs() > r.b1 {
            fail("|sigma| <= b1");
        }
        if word.strands == 3 {
            if let Some(false) = crate::certificate::three_braid_bound(word) {
                fail("3-braid bound t >= 4 and 7 count >= t");
            }
        }
        if r.delta_sigma > 0 {
            let ratio = (r.twist, r.delta_sigma);
            let lt = |a: (i64, i64), b: (i64, i64)| a.0 * b.1 < b.0 * a.1;
            if min_ratio.is_none_or(|m| lt(ratio, m)) {
                min_ratio = Some(ratio);
            }
            if max_ratio.is_none_or(|m| lt(m, ratio)) {
                max_ratio = Some(ratio);
            }
        }
        rows.push(r);
    }
    rows.sort_by(|a, b| {
        (a.strands, a.twist, &a.word).cmp(&(b.strands, b.twist, &b.word))
    });
    Ok(SweepReport {
        rows,
        failures,
        min_ratio: min_ratio.map(|(t, d)| t as f64 / d as f64),
        max_ratio: max_ratio.map(|(t, d)| t as f64 / d as f64),
        wall_seconds: start.elapsed().as_secs_f64(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_class_family() {
        let spec = EnumerationSpec {
            strands: (3, 3),
            syllable_count: (4, 4),
            exponents: vec![3],
            ..Default::default()
        };
        let words = enumerate(&spec).unwrap();
        assert_eq!(words.len(), 1);
        assert_eq!(render_syllables(&words[0]), "1^3 2^3 1^3 2^3");
    }

    #[test]
    fn two_strand_multi_syllable_is_empty() {
        let spec = EnumerationSpec {
            strands: (2, 2),
            syllable_count: (2, 4),
            exponents: vec![3],
            require_sufficiently_complicated: false,
            require_hyperbolic: false,
            ..Default::default()
        };
        assert!(enumerate(&spec).unwrap().is_empty());
    }

    #[test]
    fn four_strand_pairs() {
        // n=4, t=2: the three unordered column pairs, one class each.
        let spec = EnumerationSpec {
            strands: (4, 4),
            syllable_count: (2, 2),
            exponents: vec![3],
            require_sufficiently_complicated: false,
            require_hyperbolic: false,
            ..Default::default()
        };
        let words = enumerate(&spec).unwrap();
        let mut rendered: Vec<String> = words.iter().map(render_syllables).collect();
        rendered.sort();
        assert_eq!(rendered, vec!["1^3 2^3", "1^3 3^3", "2^3 3^3"]);
    }

    #[test]
    fn dedup_collapses_rotations() {
        let spec = EnumerationSpec {
            strands: (3, 3),
            syllable_count: (4, 4),
            exponents: vec![3, 4],
            ..Default::default()
        };
        let words = enumerate(&spec).unwrap();
        // Alternating column patterns with exponents in {3,4}: 32 raw
        // sequences, 10 classes up to rotation (Burnside: (32 + 8) / 4).
        assert_eq!(words.len(), 10);
    }

    #[test]
    fn deterministic_random_families() {
        let spec = EnumerationSpec::default();
        let a = random_words(&spec, 7, 5).unwrap();
        let b = random_words(&spec, 7, 5).unwrap();
        assert_eq!(a, b);
        let c = random_words(&spec, 8, 5).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn sweep_empty_family() {
        let r = verify_sweep(&[], false).unwrap();
        assert!(r.rows.is_empty() && r.failures.is_empty());
    }

    #[test]
    fn sweep_three_braids_clean() {
        let spec = EnumerationSpec {
            strands: (3, 3),
            ..Default::default()
        };
        let words = enumerate(&spec).unwrap();
        assert!(!words.is_empty());
        let r = verify_sweep(&words, false).unwrap();
        assert_eq!(r.failures, Vec::<String>::new());
        assert!(r.min_ratio.unwrap() >= 0.5);
        assert!(r.max_ratio.unwrap() <= 10.5);
    }
}
