//! Locating and loading the `g_α` fixture file.
//!
//! Precedence: an explicit path, then the `PPBINOM_FIXTURES` environment
//! variable, then the copy compiled into the core crate. A path may name the
//! file itself or a directory containing `appendix_g.txt`.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};

use ppbinom_core::symbolic::{parse_fixtures, ZPoly, APPENDIX_FIXTURE};

use crate::{Error, Result};

pub const FIXTURES_ENV: &str = "PPBINOM_FIXTURES";
pub const FIXTURE_FILE: &str = "appendix_g.txt";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FixtureSource {
    Embedded,
    File(PathBuf),
}

impl fmt::Display for FixtureSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixtureSource::Embedded => f.write_str("embedded"),
            FixtureSource::File(p) => write!(f, "{}", p.display()),
        }
    }
}

fn file_for(path: &Path) -> PathBuf {
    if path.is_dir() {
        path.join(FIXTURE_FILE)
    } else {
        path.to_path_buf()
    }
}

/// Picks the fixture source from an explicit path or the environment.
pub fn resolve(explicit: Option<&Path>) -> FixtureSource {
    if let Some(p) = explicit {
        return FixtureSource::File(file_for(p));
    }
    match std::env::var_os(FIXTURES_ENV) {
        Some(v) if !v.is_empty() => FixtureSource::File(file_for(Path::new(&v))),
        _ => FixtureSource::Embedded,
    }
}

/// Reads and checksum-verifies the fixtures.
pub fn load(source: &FixtureSource) -> Result<BTreeMap<u32, ZPoly>> {
    let text = match source {
        FixtureSource::Embedded => return Ok(parse_fixtures(APPENDIX_FIXTURE)?),
        FixtureSource::File(path) => {
            std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.clone(), source })?
        }
    };
    Ok(parse_fixtures(&text)?)
}

/// Fixture for `alpha`, or a usage error naming the source.
pub fn get<'a>(fixtures: &'a BTreeMap<u32, ZPoly>, alpha: u32, source: &FixtureSource) -> Result<&'a ZPoly> {
    fixtures
        .get(&alpha)
        .ok_or_else(|| Error::Usage(format!("fixture source {source} has no g_{alpha}")))
}
