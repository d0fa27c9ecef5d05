use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The five classical symmetric pairs handled by the library.
///
/// | type | (G, K)                    | signature rule |
/// |------|---------------------------|----------------|
/// | AIII | (GL_{p+q}, GL_p × GL_q)   | none           |
/// | BDI  | (O_{p+q}, O_p × O_q)      | none           |
/// | CI   | (Sp_{2p}, GL_p)           | p = q          |
/// | CII  | (Sp_{p+q}, Sp_p × Sp_q)   | p, q even      |
/// | DIII | (O_{2p}, GL_p)            | p = q          |
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PairType {
    #[serde(rename = "AIII")]
    Aiii,
    #[serde(rename = "BDI")]
    Bdi,
    #[serde(rename = "CI")]
    Ci,
    #[serde(rename = "CII")]
    Cii,
    #[serde(rename = "DIII")]
    Diii,
}

/// Which classical Lie algebra the pair lives in, for dimension counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ambient {
    General,
    Orthogonal,
    Symplectic,
}

impl PairType {
    pub const ALL: [PairType; 5] = [
        PairType::Aiii,
        PairType::Bdi,
        PairType::Ci,
        PairType::Cii,
        PairType::Diii,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PairType::Aiii => "AIII",
            PairType::Bdi => "BDI",
            PairType::Ci => "CI",
            PairType::Cii => "CII",
            PairType::Diii => "DIII",
        }
    }

    pub fn ambient(self) -> Ambient {
        match self {
            PairType::Aiii => Ambient::General,
            PairType::Bdi | PairType::Diii => Ambient::Orthogonal,
            PairType::Ci | PairType::Cii => Ambient::Symplectic,
        }
    }

    /// Edge vectors of the orbit graph are scaled by this factor.
    pub fn edge_scale(self) -> usize {
        match self {
            PairType::Cii | PairType::Diii => 2,
            _ => 1,
        }
    }

    /// Checks the signature rule of the pair and that `p + q = n`.
    pub fn check_signature(self, n: usize, p: usize, q: usize) -> Result<()> {
        if p + q != n {
            return Err(Error::SignatureSize { p, q, n });
        }
        self.check_signature_rule(p, q)
    }

    /// Checks only the per-type signature rule.
    pub fn check_signature_rule(self, p: usize, q: usize) -> Result<()> {
        let rule = match self {
            PairType::Ci | PairType::Diii if p != q => Some("p = q"),
            PairType::Cii if p % 2 != 0 || q % 2 != 0 => Some("p and q even"),
            _ => None,
        };
        match rule {
            Some(rule) => Err(Error::SignatureRule {
                pair: self,
                rule,
                p,
                q,
            }),
            None => Ok(()),
        }
    }

    /// All signatures `(p, q)` with `p + q = n` allowed for the pair, in increasing `p`.
    pub fn signatures(self, n: usize) -> Vec<(usize, usize)> {
        (0..=n)
            .map(|p| (p, n - p))
            .filter(|&(p, q)| self.check_signature_rule(p, q).is_ok())
            .collect()
    }
}

impl fmt::Display for PairType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PairType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "AIII" => Ok(PairType::Aiii),
            "BDI" => Ok(PairType::Bdi),
            "CI" => Ok(PairType::Ci),
            "CII" => Ok(PairType::Cii),
            "DIII" => Ok(PairType::Diii),
            _ => Err(Error::UnknownPairType(s.to_string())),
        }
    }
}
