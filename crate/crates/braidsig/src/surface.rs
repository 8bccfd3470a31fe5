//! Canonical fiber surface of a positive braid closure: Betti number,
//! brick basis, and the Seifert matrix over that basis.
//!
//! The surface is n disks joined by one band per crossing. A brick is the
//! rectangle bounded by two consecutive crossings in one column; its core
//! loop is a homology basis element. With m_i crossings in column i, the
//! sum of (m_i - 1) over used columns equals c - (used columns)
//! = c - n + s = b1, so the linear consecutive pairs already form a basis
//! and no closing bricks are needed.

use crate::word::BraidWord;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Brick {
    pub column: usize,
    /// 0-based letter positions of two consecutive column crossings.
    pub lower: usize,
    pub upper: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertMatrix {
    pub bricks: Vec<Brick>,
    /// Row-major entries of V; size = brick count.
    pub entries: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SurfaceData {
    pub betti: i64,
    pub surface_components: usize,
    pub euler: i64,
}

/// Betti number and component count of the fiber surface: s = components
/// of the graph on strings {1..n} with an edge {i, i+1} per used column;
/// chi = n - c; b1 = s - chi.
pub fn surface_data(w: &BraidWord) -> SurfaceData {
    let n = w.strands;
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for col in w.used_columns() {
        let a = find(&mut parent, col - 1);
        let b = find(&mut parent, col);
        parent[a] = b;
    }
    let mut roots: Vec<usize> = (0..n).map(|x| find(&mut parent, x)).collect();
    roots.sort_unstable();
    roots.dedup();
    let s = roots.len();
    let c = w.letters.len() as i64;
    SurfaceData {
        betti: s as i64 - n as i64 + c,
        surface_components: s,
        euler: n as i64 - c,
    }
}

/// Brick basis: for each column, consecutive position pairs in word order.
pub fn bricks(w: &BraidWord) -> Vec<Brick> {
    let mut by_col: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (pos, &col) in w.letters.iter().enumerate() {
        by_col.entry(col).or_default().push(pos);
    }
    let mut out = Vec::new();
    for (col, positions) in by_col {
        for pair in positions.windows(2) {
            out.push(Brick {
                column: col,
                lower: pair[0],
                upper: pair[1],
            });
        }
    }
    out
}

/// Intervals interleave: exactly one endpoint of one lies strictly inside
/// the other.
fn interleaved(a: &Brick, b: &Brick) -> bool {
    (a.lower < b.lower && b.lower < a.upper && a.upper < b.upper)
        || (b.lower < a.lower && a.lower < b.upper && b.upper < a.upper)
}

/// Seifert matrix V over the brick basis.
///
/// Entry table (fixed by the calibration anchors; negating the
/// symmetrized form yields the reported sign convention):
/// - V(a, a) = -1 for every brick;
/// - same column, sharing a crossing (a.upper == b.lower): +1;
/// - adjacent columns with interleaved intervals: +1 when the
///   lower-column brick starts first, -1 when the higher-column brick
///   starts first;
/// - all other pairs (including nested intervals): 0.
///
/// For each unordered pair the entry is stored on one side only, so the
/// symmetrized matrix V + V^T carries the table value off-diagonal.
#[allow(clippy::needless_range_loop)]
pub fn seifert_matrix(w: &BraidWord) -> SeifertMatrix {
    let bricks = bricks(w);
    let d = bricks.len();
    let mut entries = vec![vec![0i64; d]; d];
    for a in 0..d {
        entries[a][a] = -1;
    }
    for a in 0..d {
        for b in a + 1..d {
            let (x, y) = (&bricks[a], &bricks[b]);
            let value = if x.column == y.column {
                if x.upper == y.lower || y.upper == x.lower {
                    1
                } else {
                    0
                }
            } else if x.column.abs_diff(y.column) == 1 && interleaved(x, y) {
                let (lo, hi) = if x.column < y.column { (x, y) } else { (y, x) };
                if lo.lower < hi.lower {
                    1
                } else {
                    -1
                }
            } else {
                0
            };
            entries[a][b] = value;
        }
    }
    SeifertMatrix { bricks, entries }
}

impl SeifertMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// V + V^T.
    #[allow(clippy::needless_range_loop)]
    pub fn symmetrized(&self) -> Vec<Vec<i64>> {
        let d = self.size();
        let mut m = vec![vec![0i64; d]; d];
        for a in 0..d {
            for b in 0..d {
                m[a][b] = self.entries[a][b] + self.entries[b][a];
            }
        }
        m
    }
}
