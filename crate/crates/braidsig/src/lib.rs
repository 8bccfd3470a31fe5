//! Invariants of positive braid closures.
//!
//! The closure of a positive braid word bounds a canonical fiber surface
//! (disks joined by bands, one band per crossing). This crate computes
//! its first Betti number, the link signature via a Seifert matrix over
//! the brick basis with exact integer congruence diagonalization, the
//! signature defect, and the twist number, then evaluates the volume
//! bound intervals, the twist/defect inequalities, the cut-decomposition
//! bound, and a combinatorial certificate (dots, mod-3 string classes,
//! disjoint alternating subwords) for the lower bound.

pub mod bounds;
pub mod certificate;
pub mod enumerate;
pub mod error;
pub mod inertia;
pub mod report;
pub mod surface;
pub mod word;

pub use bounds::{
    cut_bound_check, cut_decomposition, reported_signature, signature_defect, thm1_bounds,
    thm2_bounds, thm3_check, Constants,
};
pub use certificate::{
    best_class, certificate_check, extract_subwords, place_dots, three_braid_bound,
};
pub use enumerate::{enumerate, random_words, verify_sweep, EnumerationSpec, SweepReport};
pub use error::{BraidError, Result};
pub use inertia::{inertia, signature, SignatureTriple, SymmetricIntMatrix};
pub use report::{build_report, csv_row, render_syllables, InvariantReport, CSV_HEADER};
pub use surface::{bricks, seifert_matrix, surface_data, Brick, SeifertMatrix, SurfaceData};
pub use word::{
    components, hyperbolicity_criterion, is_sufficiently_complicated, normalize_far_commutation,
    parse_braid, permutation, syllables, twist_number, BraidWord, Syllable, SyllableWord,
};
