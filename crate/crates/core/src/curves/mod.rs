//! Curves over finite fields: the split double-cover model, brute-force
//! point counts, and zeta numerators recovered from counts.

mod field;
mod model;
mod zeta;

pub use field::{is_prime, FiniteFieldSpec};
pub use model::{CurveSide, SplitCoverModel, DEFAULT_ENUMERATION_BUDGET};
pub use zeta::{counts_from_zeta, l_eta_from_pair, zeta_from_counts, PointCounts, ZetaData};

use crate::error::Result;
use crate::exactalg::IntPolynomial;

/// Everything recovered from a [`SplitCoverModel`] by enumeration.
#[derive(Clone, Debug)]
pub struct CoverAnalysis {
    pub base_counts: PointCounts,
    pub cover_counts: PointCounts,
    pub base_zeta: ZetaData,
    pub cover_zeta: ZetaData,
    pub l_poly: IntPolynomial,
}

/// Counts both curves through `F_{p^m}` and runs every zeta validator.
///
/// `m` defaults to `2 g_{X'}`, the least number of counts that pins down
/// `P_{X'}`; any extra counts are consistency-checked.
pub fn analyze_model(
    model: &SplitCoverModel,
    m: Option<u32>,
    budget: u64,
) -> Result<CoverAnalysis> {
    let m = m.unwrap_or(2 * model.cover_genus() as u32);
    let (base_counts, cover_counts) = model.point_counts(m, budget)?;
    let base_zeta = zeta_from_counts(&base_counts, model.base_genus())?;
    let cover_zeta = zeta_from_counts(&cover_counts, model.cover_genus())?;
    let l_poly = l_eta_from_pair(&base_zeta, &cover_zeta)?;
    Ok(CoverAnalysis {
        base_counts,
        cover_counts,
        base_zeta,
        cover_zeta,
        l_poly,
    })
}
