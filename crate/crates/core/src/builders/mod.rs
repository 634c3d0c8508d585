//! Concrete algebras: 𝔰𝔩_m, the quaternionic contact algebras, and
//! structure constants read from disk.

mod quaternion;
mod quaternionic;
mod sl;

pub use quaternion::Quaternion;
pub use quaternionic::{build_quaternionic, QuaternionicBasis};
pub use sl::{build_sl, SlBasis};

use crate::error::{Error, Result};
use crate::lie::{parse_structure_constants, LieAlgebra};
use crate::roots::RestrictedRootSystem;
use std::path::{Path, PathBuf};

pub fn load_structure_constants(path: &Path) -> Result<LieAlgebra> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_structure_constants(&text)
}

/// Parsed `--algebra` descriptor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraSpec {
    Sl(usize),
    Quaternionic(usize, usize),
    File(PathBuf),
}

impl std::str::FromStr for AlgebraSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownAlgebra(s.to_string());
        let (kind, arg) = s.split_once(':').ok_or_else(bad)?;
        match kind {
            "sl" => Ok(AlgebraSpec::Sl(arg.trim().parse().map_err(|_| bad())?)),
            "qc" => {
                let (m, n) = arg.split_once(',').ok_or_else(bad)?;
                Ok(AlgebraSpec::Quaternionic(
                    m.trim().parse().map_err(|_| bad())?,
                    n.trim().parse().map_err(|_| bad())?,
                ))
            }
            "file" if !arg.is_empty() => Ok(AlgebraSpec::File(PathBuf::from(arg))),
            _ => Err(bad()),
        }
    }
}

impl std::fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AlgebraSpec::Sl(m) => write!(f, "sl:{m}"),
            AlgebraSpec::Quaternionic(m, n) => write!(f, "qc:{m},{n}"),
            AlgebraSpec::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

impl AlgebraSpec {
    /// Builds the root system. File algebras carry no Cartan data and are rejected.
    pub fn build(&self) -> Result<RestrictedRootSystem> {
        match self {
            AlgebraSpec::Sl(m) => build_sl(*m),
            AlgebraSpec::Quaternionic(m, n) => build_quaternionic(*m, *n),
            AlgebraSpec::File(_) => Err(Error::UnknownAlgebra(format!("{self} has no root data"))),
        }
    }
}
