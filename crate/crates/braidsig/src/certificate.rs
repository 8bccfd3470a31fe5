//! Combinatorial certificate for the twist-number lower bound: dots on
//! adjacent twist regions, the mod-3 string partition, and greedy
//! extraction of disjoint alternating subwords
//! `sigma_i^{k1} sigma_{i+1}^{k2} sigma_i^{k3} sigma_{i+1}^{k4}`.

use crate::bounds::signature_defect;
use crate::error::Result;
use crate::word::{
    hyperbolicity_criterion, is_sufficiently_complicated, normalize_far_commutation, syllables,
    twist_number, BraidWord, SyllableWord,
};
use serde::Serialize;

/// A dot between two cyclically adjacent twist regions in neighboring
/// columns, placed on their shared string (the larger of the two
/// columns).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Dot {
    /// Syllable positions of the adjacent pair, in cyclic order.
    pub between: (usize, usize),
    pub string: usize,
}

/// One residue class of strings mod 3 with its dot count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StringClass {
    pub j: usize,
    pub strings: Vec<usize>,
    pub dots: usize,
}

/// One subword occurrence: four syllable positions realizing the
/// alternating pattern on columns (central - 1, central).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Occurrence {
    pub central_string: usize,
    pub positions: [usize; 4],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubwordCertificate {
    pub class_j: usize,
    pub occurrences: Vec<Occurrence>,
    pub count: usize,
}

/// One dot per cyclically adjacent syllable pair with column difference
/// exactly 1. Words with fewer than two regions have no dots.
pub fn place_dots(s: &SyllableWord) -> Vec<Dot> {
    let norm = normalize_far_commutation(s);
    let t = norm.syllables.len();
    if t < 2 {
        return Vec::new();
    }
    let mut dots = Vec::new();
    for i in 0..t {
        let j = (i + 1) % t;
        let (a, b) = (norm.syllables[i].column, norm.syllables[j].column);
        if a.abs_diff(b) == 1 {
            dots.push(Dot {
                between: (i, j),
                string: a.max(b),
            });
        }
    }
    dots
}

/// The mod-3 class with the most dots; ties break to the smallest j.
pub fn best_class(dots: &[Dot], strands: usize) -> StringClass {
    let mut counts = [0usize; 3];
    for d in dots {
        counts[d.string % 3] += 1;
    }
    let j = (0..3).max_by_key(|&j| (counts[j], 2 - j)).unwrap();
    StringClass {
        j,
        strings: (1..=strands).filter(|m| m % 3 == j).collect(),
        dots: counts[j],
    }
}

/// Greedily match the pattern over a linear item sequence of
/// (column, position); returns disjoint occurrences.
fn greedy_runs(items: &[(usize, usize)], lo: usize, hi: usize, central: usize) -> Vec<Occurrence> {
    let pattern = [lo, hi, lo, hi];
    let mut out = Vec::new();
    let mut taken = [0usize; 4];
    let mut state = 0;
    for &(col, pos) in items {
        if col == pattern[state] {
            taken[state] = pos;
            state += 1;
            if state == 4 {
                out.push(Occurrence {
                    central_string: central,
                    positions: taken,
                });
                state = 0;
            }
        }
    }
    out
}

/// Restrict the cyclic syllable sequence to columns {m-1, m} for each
/// central string m of the class and greedily collect disjoint
/// alternating 4-runs. Syllables in columns m-2 or m+1 break a run
/// (they do not commute past the pair); all other columns are
/// transparent. With no breakers the scan is cyclic: it starts after a
/// largest gap between kept syllables, and among maximal-gap starts the
/// one yielding the most runs wins (first such start on ties).
pub fn extract_subwords(s: &SyllableWord, class: &StringClass) -> SubwordCertificate {
    let norm = normalize_far_commutation(s);
    let cols: Vec<usize> = norm.syllables.iter().map(|x| x.column).collect();
    let t = cols.len();
    let mut occurrences = Vec::new();
    for &m in &class.strings {
        if m < 2 || m > s.strands - 1 {
            continue;
        }
        let (lo, hi) = (m - 1, m);
        let is_kept = |c: usize| c == lo || c == hi;
        let is_breaker = |c: usize| (m >= 2 && c + 2 == m) || c == m + 1;
        let kept: Vec<usize> = (0..t).filter(|&i| is_kept(cols[i])).collect();
        if kept.len() < 4 {
            continue;
        }
        let breakers: Vec<usize> = (0..t).filter(|&i| is_breaker(cols[i])).collect();
        if breakers.is_empty() {
            // Fully cyclic: linearize after a largest gap.
            let k = kept.len();
            let gaps: Vec<(usize, usize)> = (0..k)
                .map(|idx| {
                    let a = kept[idx];
                    let b = kept[(idx + 1) % k];
                    ((b + t - a) % t, (idx + 1) % k)
                })
                .collect();
            let max_gap = gaps.iter().map(|&(g, _)| g).max().unwrap();
            let mut best: Vec<Occurrence> = Vec::new();
            for &(g, start) in &gaps {
                if g != max_gap {
                    continue;
                }
                let items: Vec<(usize, usize)> = (0..k)
                    .map(|o| {
                        let p = kept[(start + o) % k];
                        (cols[p], p)
                    })
                    .collect();
                let runs = greedy_runs(&items, lo, hi, m);
                if runs.len() > best.len() {
                    best = runs;
                }
            }
            occurrences.extend(best);
        } else {
            // Segments between consecutive breakers, in cyclic order.
            for (bi, &a) in breakers.iter().enumerate() {
                let b = breakers[(bi + 1) % breakers.len()];
                let mut items = Vec::new();
                let mut i = (a + 1) % t;
                while i != b {
                    if is_kept(cols[i]) {
                        items.push((cols[i], i));
                    }
                    i = (i + 1) % t;
                }
                occurrences.extend(greedy_runs(&items, lo, hi, m));
            }
        }
    }
    SubwordCertificate {
        class_j: class.j,
        count: occurrences.len(),
        occurrences,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateCheck {
    pub dots: usize,
    pub dots_ge_twist: bool,
    pub class_j: usize,
    pub class_dots: usize,
    pub count: usize,
    /// 21 * count >= t.
    pub ok_lower: bool,
    /// 2 * count <= delta sigma.
    pub ok_defect: bool,
}

pub fn certificate_check(w: &BraidWord, exhaustive_twist: bool) -> Result<CertificateCheck> {
    let s = normalize_far_commutation(&syllables(w, true));
    let dots = place_dots(&s);
    let class = best_class(&dots, w.strands);
    let cert = extract_subwords(&s, &class);
    let t = twist_number(w, exhaustive_twist)? as i64;
    let ds = signature_defect(w);
    Ok(CertificateCheck {
        dots: dots.len(),
        dots_ge_twist: dots.len() as i64 >= t,
        class_j: class.j,
        class_dots: class.dots,
        count: cert.count,
        ok_lower: 21 * cert.count as i64 >= t,
        ok_defect: 2 * cert.count as i64 <= ds,
    })
}

/// 3-braid estimate: t >= 4 and count >= t/7 (i.e. 7 count >= t).
/// Requires n = 3, sufficiently complicated, hyperbolicity criterion.
pub fn three_braid_bound(s: &SyllableWord) -> Option<bool> {
    if s.strands != 3 || !is_sufficiently_complicated(s) || !hyperbolicity_criterion(s) {
        return None;
    }
    let w = BraidWord::from_syllables(s);
    let check = certificate_check(&w, false).ok()?;
    let t = twist_number(&w, false).ok()? as i64;
    Some(t >= 4 && 7 * check.count as i64 >= t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_braid;

    fn norm(text: &str) -> SyllableWord {
        let w = parse_braid(text, None).unwrap();
        normalize_far_commutation(&syllables(&w, true))
    }

    #[test]
    fn dots_alternating() {
        let dots = place_dots(&norm("1^3 2^3 1^3 2^3"));
        assert_eq!(dots.len(), 4);
        assert!(dots.iter().all(|d| d.string == 2));
    }

    #[test]
    fn dots_single_region() {
        assert!(place_dots(&norm("1^6")).is_empty());
    }

    #[test]
    fn dots_skip_far_pairs() {
        let w = parse_braid("1^3 3^3 2^3", Some(4)).unwrap();
        let s = normalize_far_commutation(&syllables(&w, true));
        let dots = place_dots(&s);
        assert_eq!(dots.len(), 2);
    }

    #[test]
    fn best_class_selection() {
        let dots = place_dots(&norm("1^3 2^3 1^3 2^3"));
        let class = best_class(&dots, 3);
        assert_eq!((class.j, class.dots), (2, 4));
        let class = best_class(&[], 3);
        assert_eq!((class.j, class.dots), (0, 0));
        let mixed = vec![
            Dot {
                between: (0, 1),
                string: 2,
            },
            Dot {
                between: (1, 2),
                string: 3,
            },
            Dot {
                between: (2, 3),
                string: 5,
            },
        ];
        let class = best_class(&mixed, 6);
        assert_eq!((class.j, class.dots), (2, 2));
        assert_eq!(class.strings, vec![2, 5]);
    }

    #[test]
    fn extract_alternating_words() {
        for (text, expect) in [
            ("1^3 2^3 1^3 2^3", 1),
            ("1^3 2^3 1^3 2^3 1^3 2^3 1^3 2^3", 2),
            ("1^3 2^3 1^3 2^3 1^3 2^3", 1),
            ("1^6", 0),
        ] {
            let s = norm(text);
            let dots = place_dots(&s);
            let class = best_class(&dots, s.strands);
            let cert = extract_subwords(&s, &class);
            assert_eq!(cert.count, expect, "count for {text}");
        }
    }

    #[test]
    fn occurrences_disjoint() {
        let s = norm("1^3 2^3 1^3 2^3 1^3 2^3 1^3 2^3");
        let class = best_class(&place_dots(&s), 3);
        let cert = extract_subwords(&s, &class);
        let mut positions: Vec<usize> = cert
            .occurrences
            .iter()
            .flat_map(|o| o.positions)
            .collect();
        let before = positions.len();
        positions.sort_unstable();
        positions.dedup();
        assert_eq!(positions.len(), before);
    }

    #[test]
    fn count_rotation_invariant() {
        let w = parse_braid("1^3 2^4 1^3 2^3 1^4 2^3", None).unwrap();
        let mut letters = w.letters.clone();
        let mut counts = Vec::new();
        for _ in 0..letters.len() {
            letters.rotate_left(1);
            let r = BraidWord {
                strands: 3,
                letters: letters.clone(),
            };
            counts.push(certificate_check(&r, false).unwrap().count);
        }
        counts.dedup();
        assert_eq!(counts.len(), 1);
    }

    #[test]
    fn certificate_check_values() {
        let w = parse_braid("1^3 2^3 1^3 2^3", None).unwrap();
        let c = certificate_check(&w, false).unwrap();
        assert_eq!(c.count, 1);
        assert!(c.ok_lower && c.ok_defect);
        assert!(c.dots_ge_twist);

        let w = parse_braid("1^7", None).unwrap();
        let c = certificate_check(&w, false).unwrap();
        assert_eq!(c.count, 0);
        assert!(!c.ok_lower); // 0 < t = 1; word is non-hyperbolic anyway
    }

    #[test]
    fn three_braid_cases() {
        assert_eq!(three_braid_bound(&norm("1^3 2^3 1^3 2^3")), Some(true));
        assert_eq!(three_braid_bound(&norm("1^3 2^3")), None);
        assert_eq!(
            three_braid_bound(&norm("1^4 2^4 1^4 2^4 1^4 2^4 1^4 2^4")),
            Some(true)
        );
    }

    #[test]
    fn pigeonhole_class_bound() {
        for text in ["1^3 2^3 1^3 2^3", "1^3 2^4 1^5 2^3 1^3 2^3"] {
            let s = norm(text);
            let dots = place_dots(&s);
            let class = best_class(&dots, s.strands);
            assert!(3 * class.dots >= dots.len());
        }
    }
}
