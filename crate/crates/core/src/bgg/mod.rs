//! Derived and ordinary BGG resolutions, the constructible t-structure,
//! and the classification of highest weight modules admitting ordinary
//! resolutions.
//!
//! Two backends share the combinatorics here. The algebra backend works on
//! an explicit quiver algebra and projective models of complexes. The KL
//! backend works with simple objects of a Weyl group block purely through
//! Kazhdan-Lusztig polynomials.
//!
//! Grading conventions: `Ext^n(N[m], A) = Ext^{n-m}(N, A)`. An object is
//! coconnective when `Ext^n(N, A_w) = 0` for `n > -l_w`, connective when
//! `Ext^n(N, A_w) = 0` for `n <= -l_w`, and in the heart when both hold.
//! The spectral sequence of `N` has
//! `E_1^{p,q} = sum_{l_w = l_top + p} M_w (x) Ext^{-p-q}(N, A_w)^*`.

mod classify;
mod kl;
mod render;
mod tower;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coxeter::CoxeterError;
use crate::homology::HomologyError;
use crate::klpoly::GradedMultiplicity;
use crate::qha::QhaError;

pub use classify::{
    classify, classify_algebra, classify_all, parabolic_verma_count, ClassificationRecord,
    ClassificationSummary, Justification, SubsetVerdict, Verdict,
};
pub use kl::{
    kl_delorme_check, kl_e1, kl_ext_table, kl_heart_test, kl_spectral_sequence, KlSpectralSequence,
};
pub use render::{render_bgg_terms, render_grids, Grid, GridArrow, GridCell, SsReport};
pub use tower::{
    bgg_spectral_sequence, chain_map_space, coconnective_test, con_cohomology_rows, con_truncate,
    connective_test, delorme_check, derived_resolution, ext_table, heart_test, ordinary_resolution,
    uniqueness_functoriality_check, verify_multiplicities, AlgebraSpectralSequence, BggComplex,
    ConRow, FunctorialityReport, MultiplicityMismatch, ResolutionTower, TowerLevel, Truncation,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BggError {
    #[error("not in any shift of the heart: {0}")]
    NotInHeart(String),
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Qha(#[from] QhaError),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
}

/// Ext dimensions of one object into every costandard, indexed by weight.
pub type ExtTable = Vec<GradedMultiplicity>;

/// The shift `m` with `Ext^n(N[m], A_w)` nonzero only at `n = -l_w`, if
/// one exists. The zero object sits in the heart with `m = 0`.
pub fn heart_shift(lengths: &[i64], ext: &ExtTable) -> Option<i64> {
    let mut m = None;
    for (w, e) in ext.iter().enumerate() {
        for &n in e.keys() {
            // Ext^{n'}(N[m], A_w) = Ext^{n'-m}(N, A_w): need n + m = -l_w.
            let mw = -lengths[w] - n;
            match m {
                None => m = Some(mw),
                Some(x) if x != mw => return None,
                _ => {}
            }
        }
    }
    Some(m.unwrap_or(0))
}

/// A weight and degree where the heart condition fails for every shift.
pub fn heart_witness(names: &[String], lengths: &[i64], ext: &ExtTable) -> Option<String> {
    let mut first: Option<(usize, i64)> = None;
    for (w, e) in ext.iter().enumerate() {
        for &n in e.keys() {
            match first {
                None => first = Some((w, n)),
                Some((w0, n0)) if lengths[w0] + n0 != lengths[w] + n => {
                    return Some(format!(
                        "Ext^{n0}(N, A_{}) and Ext^{n}(N, A_{}) are both nonzero",
                        names[w0], names[w]
                    ))
                }
                _ => {}
            }
        }
    }
    None
}

pub fn is_coconnective(lengths: &[i64], ext: &ExtTable) -> bool {
    ext.iter()
        .enumerate()
        .all(|(w, e)| e.keys().all(|&n| n <= -lengths[w]))
}

pub fn is_connective(lengths: &[i64], ext: &ExtTable) -> bool {
    ext.iter()
        .enumerate()
        .all(|(w, e)| e.keys().all(|&n| n > -lengths[w]))
}

pub fn euler_characteristic(e: &GradedMultiplicity) -> i64 {
    e.iter()
        .map(|(&n, &d)| {
            if n.rem_euclid(2) == 0 {
                d as i64
            } else {
                -(d as i64)
            }
        })
        .sum()
}

/// Outcome of comparing `[N]` with `sum_w chi RHom(N, A_w) [M_w]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DelormeReport {
    /// `[N]` expanded in the standard basis.
    pub class: Vec<i64>,
    /// `chi RHom(N, A_w)` per weight.
    pub chi: Vec<i64>,
    pub pass: bool,
}

/// Expand a class given in the simple basis into the standard basis, where
/// `standard[w][y] = [M_w : L_y]`. `order` lists the weights so that
/// `[M_w : L_y] != 0` implies `y` comes no later than `w`; `[M_w : L_w] = 1`.
pub fn expand_in_standards(class: &[i64], standard: &[Vec<i64>], order: &[usize]) -> Vec<i64> {
    let mut rest = class.to_vec();
    let mut out = vec![0; class.len()];
    for &w in order.iter().rev() {
        let c = rest[w];
        out[w] = c;
        for (r, &m) in rest.iter_mut().zip(&standard[w]) {
            *r -= c * m;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gm(v: &[(i64, usize)]) -> GradedMultiplicity {
        v.iter().copied().collect()
    }

    #[test]
    fn heart_shift_of_a1_simple() {
        let lengths = [0, 1];
        let ext = vec![gm(&[(1, 1)]), gm(&[(0, 1)])];
        assert_eq!(heart_shift(&lengths, &ext), Some(-1));
        let names = ["e".to_string(), "s".to_string()];
        assert!(heart_witness(&names, &lengths, &ext).is_none());
        assert!(!is_coconnective(&lengths, &ext));
        assert!(is_connective(&lengths, &ext));
        let split = vec![gm(&[(0, 1)]), gm(&[(0, 1)])];
        assert_eq!(heart_shift(&lengths, &split), None);
        assert_eq!(
            heart_witness(&names, &lengths, &split).as_deref(),
            Some("Ext^0(N, A_e) and Ext^0(N, A_s) are both nonzero")
        );
    }

    #[test]
    fn expansion_is_triangular() {
        // [M_e] = [L_e], [M_s] = [L_s] + [L_e].
        let standard = vec![vec![1, 0], vec![1, 1]];
        assert_eq!(
            expand_in_standards(&[0, 1], &standard, &[0, 1]),
            vec![-1, 1]
        );
        assert_eq!(expand_in_standards(&[1, 1], &standard, &[0, 1]), vec![0, 1]);
    }
}
