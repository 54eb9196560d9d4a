//! Exact integer and rational polynomial algebra.
//!
//! Regenerates the `g_α` polynomials from the binomial double sum, computes
//! Sylvester resultants with fraction-free elimination, reduces integer
//! polynomials modulo small primes and holds the checksummed appendix
//! fixtures.

mod factor;
mod fixtures;
mod galpha;
mod poly;
mod resultant;

pub use factor::factor_small;
pub use fixtures::{appendix_g, parse_fixtures, render_fixtures, APPENDIX_ALPHAS, APPENDIX_FIXTURE};
pub use galpha::{cyclotomic_factor, expand_p, extract_g, gen_binomial, GAlpha};
pub use poly::{poly_div_exact, QPoly, ZPoly};
pub use resultant::{bareiss_determinant, resultant, sylvester_matrix};

use crate::gf::FpPoly;
use crate::{Error, Result};

/// Alias for [`ZPoly::mod_p`].
pub fn zpoly_mod_p(f: &ZPoly, p: u32) -> Result<FpPoly> {
    f.mod_p(p)
}

/// Monic gcd over F_p; at least one input must be nonzero.
pub fn fp_gcd(f: &FpPoly, g: &FpPoly) -> Result<FpPoly> {
    if f.p() != g.p() {
        return Err(Error::CharacteristicMismatch { expected: f.p(), found: g.p() });
    }
    if f.is_zero() && g.is_zero() {
        return Err(Error::Precondition("gcd(0, 0) is undefined".into()));
    }
    Ok(f.gcd(g))
}
