//! Text format for the reference polynomials `g_α`.
//!
//! ```text
//! g <alpha> <degree>
//! <coefficient of x^0>
//! ...
//! <coefficient of x^degree>
//! g <alpha> <degree>
//! ...
//! sha256 <hex digest of every byte before this line>
//! ```
//!
//! Coefficients are signed decimal integers, one per line, ascending degree.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write;

use num_bigint::BigInt;
use sha2::{Digest, Sha256};

use super::poly::ZPoly;
use crate::{Error, Result};

/// The reference polynomials `g_4, g_9, g_14, g_24`, transcribed verbatim.
pub const APPENDIX_FIXTURE: &str = include_str!("../../data/appendix_g.txt");

pub const APPENDIX_ALPHAS: [u32; 4] = [4, 9, 14, 24];

fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    let mut s = String::with_capacity(64);
    for b in digest {
        let _ = write!(s, "{b:02x}");
    }
    s
}

fn fixture_err(line: usize, message: impl Into<String>) -> Error {
    Error::Fixture { line, message: message.into() }
}

/// Parses and checksum-verifies a fixture file.
pub fn parse_fixtures(text: &str) -> Result<BTreeMap<u32, ZPoly>> {
    let checksum_at = text
        .rfind("sha256 ")
        .filter(|&i| i == 0 || text.as_bytes()[i - 1] == b'\n')
        .ok_or_else(|| fixture_err(text.lines().count(), "missing sha256 line"))?;
    let recorded = text[checksum_at + 7..].trim();
    let computed = sha256_hex(&text.as_bytes()[..checksum_at]);
    if recorded != computed {
        return Err(Error::FixtureChecksum { recorded: recorded.to_string(), computed });
    }

    let mut polys = BTreeMap::new();
    let mut lines = text[..checksum_at].lines().enumerate().map(|(i, l)| (i + 1, l));
    while let Some((lineno, header)) = lines.next() {
        let mut parts = header.split_whitespace();
        let (Some("g"), Some(alpha), Some(degree), None) =
            (parts.next(), parts.next(), parts.next(), parts.next())
        else {
            return Err(fixture_err(lineno, "expected header `g <alpha> <degree>`"));
        };
        let alpha: u32 = alpha.parse().map_err(|_| fixture_err(lineno, "bad alpha"))?;
        let degree: usize = degree.parse().map_err(|_| fixture_err(lineno, "bad degree"))?;
        let mut coeffs = Vec::with_capacity(degree + 1);
        for _ in 0..=degree {
            let (ln, l) = lines
                .next()
                .ok_or_else(|| fixture_err(lineno, "truncated coefficient list"))?;
            let c: BigInt = l
                .trim()
                .parse()
                .map_err(|_| fixture_err(ln, alloc::format!("bad coefficient `{l}`")))?;
            coeffs.push(c);
        }
        let poly = ZPoly::new(coeffs);
        if poly.degree() != Some(degree) {
            return Err(fixture_err(lineno, "leading coefficient is zero"));
        }
        if polys.insert(alpha, poly).is_some() {
            return Err(fixture_err(lineno, alloc::format!("duplicate alpha {alpha}")));
        }
    }
    Ok(polys)
}

/// Writes polynomials in the fixture format, checksum included.
pub fn render_fixtures<'a>(polys: impl IntoIterator<Item = (u32, &'a ZPoly)>) -> String {
    let mut out = String::new();
    for (alpha, g) in polys {
        let _ = writeln!(out, "g {alpha} {}", g.degree().unwrap_or(0));
        if g.is_zero() {
            out.push_str("0\n");
        }
        for c in g.coeffs() {
            let _ = writeln!(out, "{c}");
        }
    }
    let digest = sha256_hex(out.as_bytes());
    let _ = writeln!(out, "sha256 {digest}");
    out
}

/// The reference polynomial `g_α` for `α ∈ {4, 9, 14, 24}`.
pub fn appendix_g(alpha: u32) -> Result<ZPoly> {
    parse_fixtures(APPENDIX_FIXTURE)?
        .remove(&alpha)
        .ok_or(Error::NoFixture(alpha))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_fixture_loads() {
        let all = parse_fixtures(APPENDIX_FIXTURE).unwrap();
        assert_eq!(all.keys().copied().collect::<Vec<_>>(), APPENDIX_ALPHAS);
        assert_eq!(appendix_g(4).unwrap().coeffs()[0], BigInt::from(44));
        assert_eq!(appendix_g(9).unwrap().degree(), Some(44));
        let g14 = appendix_g(14).unwrap();
        assert_eq!(g14.degree(), Some(69));
        assert_eq!(g14.leading(), "1266995051549992032".parse::<BigInt>().unwrap());
        assert_eq!(appendix_g(24).unwrap().coeffs().len(), 120);
        assert_eq!(appendix_g(19), Err(Error::NoFixture(19)));
    }

    #[test]
    fn render_round_trip() {
        let g = ZPoly::from_i64(&[-3, 0, 12]);
        let text = render_fixtures([(7, &g)]);
        assert!(text.starts_with("g 7 2\n-3\n0\n12\nsha256 "));
        assert_eq!(parse_fixtures(&text).unwrap()[&7], g);
        assert_eq!(render_fixtures(parse_fixtures(APPENDIX_FIXTURE).unwrap().iter().map(|(a, g)| (*a, g))), APPENDIX_FIXTURE);
    }

    #[test]
    fn corruption_is_detected() {
        let tampered = APPENDIX_FIXTURE.replacen("\n75\n", "\n76\n", 1);
        assert!(matches!(parse_fixtures(&tampered), Err(Error::FixtureChecksum { .. })));
        assert!(parse_fixtures("g 4 1\n1\n").is_err());
        let bad = render_fixtures([(4, &ZPoly::from_i64(&[1, 2]))]).replacen("g 4 1", "g 4 x", 1);
        let bad = {
            let body = &bad[..bad.rfind("sha256").unwrap()];
            alloc::format!("{body}sha256 {}\n", sha256_hex(body.as_bytes()))
        };
        assert!(matches!(parse_fixtures(&bad), Err(Error::Fixture { line: 1, .. })));
    }
}
