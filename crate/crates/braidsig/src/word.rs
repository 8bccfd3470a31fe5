//! Positive braid words: parsing, syllable decomposition, cyclic normal
//! forms, permutations and the structural predicates used by the bounds.

use crate::error::{BraidError, Result};
use serde::Serialize;
use std::collections::{HashSet, VecDeque};

/// A positive braid word on `strands` strings. Letters are generator
/// indices `i` with `1 <= i <= strands - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    pub strands: usize,
    pub letters: Vec<usize>,
}

/// One twist region `sigma_column ^ exponent`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Syllable {
    pub column: usize,
    pub exponent: usize,
}

/// Run-length form of a braid word. With `cyclic` set, the first and last
/// syllables are guaranteed to differ in column (they have been merged).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SyllableWord {
    pub strands: usize,
    pub syllables: Vec<Syllable>,
    pub cyclic: bool,
}

/// Limit on letters for the exhaustive twist-number search.
pub const EXHAUSTIVE_LETTER_LIMIT: usize = 20;

/// Parse the word grammar: `word := syllable (WS+ syllable)*`,
/// `syllable := INDEX ("^" EXP)?`, both decimal integers >= 1.
/// With `strands` absent, the count is inferred as `max(index) + 1`
/// (and at least 2); indices `>= strands` are rejected.
pub fn parse_braid(text: &str, strands: Option<usize>) -> Result<BraidWord> {
    let mut letters = Vec::new();
    let mut max_index = 0usize;
    for token in text.split_whitespace() {
        let (idx_str, exp_str) = match token.split_once('^') {
            Some((a, b)) => (a, Some(b)),
            None => (token, None),
        };
        let index: usize = idx_str
            .parse()
            .map_err(|_| BraidError::MalformedToken(token.to_string()))?;
        if idx_str.starts_with('+') {
            return Err(BraidError::MalformedToken(token.to_string()));
        }
        if index == 0 {
            return Err(BraidError::ZeroIndex);
        }
        let exponent: usize = match exp_str {
            Some(e) => e
                .parse()
                .map_err(|_| BraidError::MalformedToken(token.to_string()))?,
            None => 1,
        };
        if exp_str.is_some_and(|e| e.starts_with('+')) {
            return Err(BraidError::MalformedToken(token.to_string()));
        }
        if exponent == 0 {
            return Err(BraidError::ZeroExponent);
        }
        max_index = max_index.max(index);
        letters.extend(std::iter::repeat_n(index, exponent));
    }
    let n = match strands {
        Some(n) => {
            if n < 2 {
                return Err(BraidError::TooFewStrands(n));
            }
            if max_index >= n {
                return Err(BraidError::IndexOutOfRange {
                    index: max_index,
                    strands: n,
                });
            }
            n
        }
        None => (max_index + 1).max(2),
    };
    Ok(BraidWord { strands: n, letters })
}

impl BraidWord {
    pub fn from_syllables(s: &SyllableWord) -> Self {
        let mut letters = Vec::new();
        for syl in &s.syllables {
            letters.extend(std::iter::repeat_n(syl.column, syl.exponent));
        }
        BraidWord {
            strands: s.strands,
            letters,
        }
    }

    /// Columns 1..n-1 that appear in the word.
    pub fn used_columns(&self) -> HashSet<usize> {
        self.letters.iter().copied().collect()
    }

    pub fn all_columns_used(&self) -> bool {
        let used = self.used_columns();
        (1..self.strands).all(|i| used.contains(&i))
    }
}

/// Run-length decomposition; with `cyclic`, equal first/last columns merge
/// into the leading syllable (only when there is more than one syllable).
pub fn syllables(w: &BraidWord, cyclic: bool) -> SyllableWord {
    let mut sylls: Vec<Syllable> = Vec::new();
    for &col in &w.letters {
        match sylls.last_mut() {
            Some(s) if s.column == col => s.exponent += 1,
            _ => sylls.push(Syllable {
                column: col,
                exponent: 1,
            }),
        }
    }
    if cyclic && sylls.len() > 1 && sylls[0].column == sylls[sylls.len() - 1].column {
        let last = sylls.pop().unwrap();
        sylls[0].exponent += last.exponent;
    }
    SyllableWord {
        strands: w.strands,
        syllables: sylls,
        cyclic,
    }
}

fn merge_adjacent(sylls: &mut Vec<Syllable>, cyclic: bool) {
    loop {
        let mut changed = false;
        let mut i = 0;
        while i + 1 < sylls.len() {
            if sylls[i].column == sylls[i + 1].column {
                sylls[i].exponent += sylls[i + 1].exponent;
                sylls.remove(i + 1);
                changed = true;
            } else {
                i += 1;
            }
        }
        if cyclic && sylls.len() > 1 && sylls[0].column == sylls[sylls.len() - 1].column {
            let last = sylls.pop().unwrap();
            sylls[0].exponent += last.exponent;
            changed = true;
        }
        if !changed {
            break;
        }
    }
}

/// Greedy pass of far commutation (`sigma_i sigma_j = sigma_j sigma_i`
/// for `|i - j| >= 2`): any two same-column syllables separated only by
/// far-commuting syllables (linearly, or around the cycle in cyclic mode)
/// are merged; repeats to a fixpoint.
pub fn normalize_far_commutation(s: &SyllableWord) -> SyllableWord {
    let mut sylls = s.syllables.clone();
    merge_adjacent(&mut sylls, s.cyclic);
    'outer: loop {
        let t = sylls.len();
        for i in 0..t {
            for j in i + 1..t {
                if sylls[i].column != sylls[j].column {
                    continue;
                }
                let col = sylls[i].column;
                let far = |k: usize| sylls[k].column.abs_diff(col) >= 2;
                let inner_clear = (i + 1..j).all(far);
                let outer_clear = s.cyclic && (0..i).chain(j + 1..t).all(far);
                if inner_clear || outer_clear {
                    sylls[i].exponent += sylls[j].exponent;
                    sylls.remove(j);
                    merge_adjacent(&mut sylls, s.cyclic);
                    continue 'outer;
                }
            }
        }
        break;
    }
    SyllableWord {
        strands: s.strands,
        syllables: sylls,
        cyclic: s.cyclic,
    }
}

fn min_rotation(sylls: &[Syllable]) -> Vec<Syllable> {
    if sylls.is_empty() {
        return Vec::new();
    }
    let key = |s: &Syllable| (s.column, s.exponent);
    let mut best: Vec<Syllable> = sylls.to_vec();
    for r in 1..sylls.len() {
        let rot: Vec<Syllable> = sylls[r..].iter().chain(&sylls[..r]).copied().collect();
        if rot.iter().map(key).lt(best.iter().map(key)) {
            best = rot;
        }
    }
    best
}

/// Twist number: number of twist regions of the greedy cyclic normal form;
/// with `exhaustive`, the minimum syllable count over all words reachable
/// by cyclic rotation and far commutation, by breadth-first search
/// (letter count capped at [`EXHAUSTIVE_LETTER_LIMIT`]).
pub fn twist_number(w: &BraidWord, exhaustive: bool) -> Result<usize> {
    let s = normalize_far_commutation(&syllables(w, true));
    if !exhaustive {
        return Ok(s.syllables.len());
    }
    if w.letters.len() > EXHAUSTIVE_LETTER_LIMIT {
        return Err(BraidError::ExhaustiveTooLong {
            len: w.letters.len(),
            limit: EXHAUSTIVE_LETTER_LIMIT,
        });
    }
    // States are syllable sequences up to rotation (canonical: minimal
    // rotation), with cyclically adjacent equal columns eagerly merged.
    let canon = |mut v: Vec<Syllable>| -> Vec<Syllable> {
        merge_adjacent(&mut v, true);
        min_rotation(&v)
    };
    let start = canon(syllables(w, true).syllables);
    let mut best = start.len();
    let mut seen: HashSet<Vec<Syllable>> = HashSet::new();
    seen.insert(start.clone());
    let mut queue = VecDeque::from([start]);
    while let Some(state) = queue.pop_front() {
        best = best.min(state.len());
        let t = state.len();
        if t < 2 {
            continue;
        }
        for i in 0..t {
            let j = (i + 1) % t;
            if state[i].column.abs_diff(state[j].column) >= 2 {
                let mut next = state.clone();
                next.swap(i, j);
                let next = canon(next);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(best)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    /// `images[i]` is the image of string `i + 1`, values in `1..=n`.
    pub images: Vec<usize>,
}

impl Permutation {
    pub fn cycle_count(&self) -> usize {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = self.images[k] - 1;
            }
        }
        cycles
    }
}

/// The underlying permutation of the braid: each letter `i` composes the
/// transposition `(i, i+1)`.
pub fn permutation(w: &BraidWord) -> Permutation {
    let mut images: Vec<usize> = (1..=w.strands).collect();
    for &col in &w.letters {
        images.swap(col - 1, col);
    }
    Permutation { images }
}

/// Number of components of the closure = cycle count of the permutation.
pub fn components(w: &BraidWord) -> usize {
    permutation(w).cycle_count()
}

/// Every twist region of the normalized cyclic form has exponent >= 3.
/// Empty words and words with unused columns are rejected (split or
/// trivial closure).
pub fn is_sufficiently_complicated(s: &SyllableWord) -> bool {
    let w = BraidWord::from_syllables(s);
    if s.syllables.is_empty() || !w.all_columns_used() {
        return false;
    }
    let norm = normalize_far_commutation(&syllables(&w, true));
    norm.syllables.iter().all(|syl| syl.exponent >= 3)
}

/// Every column occurs in at least two twist regions of the normalized
/// cyclic form, some pair of which is non-adjacent in the cyclic order
/// (prime braid, hyperbolic closure).
pub fn hyperbolicity_criterion(s: &SyllableWord) -> bool {
    let w = BraidWord::from_syllables(s);
    if s.syllables.is_empty() || !w.all_columns_used() {
        return false;
    }
    let norm = normalize_far_commutation(&syllables(&w, true));
    let t = norm.syllables.len();
    for col in 1..s.strands {
        let positions: Vec<usize> = (0..t)
            .filter(|&k| norm.syllables[k].column == col)
            .collect();
        let has_far_pair = positions.iter().any(|&p| {
            positions.iter().any(|&q| {
                let d = (q + t - p) % t;
                p != q && d != 1 && d != t - 1
            })
        });
        if !has_far_pair {
            return false;
        }
    }
    true
}
