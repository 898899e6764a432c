use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Every identity the harness can check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum IdentityId {
    Thm1,
    Thm2,
    Eq32,
    Eq34,
    Eq35,
    Eq36,
    Thm3,
    Thm4,
    Thm4Variant,
    Thm5,
    Thm5Variant,
    Eq52,
    Thm6,
    Thm7,
    Thm8,
    NarumiBernoulli,
    ShefferPairEq17,
    AssocEq25,
}

/// Which grid dimensions an identity ranges over (besides `n`).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Dims {
    pub r: bool,
    pub k: bool,
    pub s: bool,
    pub lambda: bool,
    pub m: bool,
    pub y: bool,
}

impl IdentityId {
    pub const ALL: [IdentityId; 18] = [
        IdentityId::Thm1,
        IdentityId::Thm2,
        IdentityId::Eq32,
        IdentityId::Eq34,
        IdentityId::Eq35,
        IdentityId::Eq36,
        IdentityId::Thm3,
        IdentityId::Thm4,
        IdentityId::Thm4Variant,
        IdentityId::Thm5,
        IdentityId::Thm5Variant,
        IdentityId::Eq52,
        IdentityId::Thm6,
        IdentityId::Thm7,
        IdentityId::Thm8,
        IdentityId::NarumiBernoulli,
        IdentityId::ShefferPairEq17,
        IdentityId::AssocEq25,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Thm1 => "THM1",
            IdentityId::Thm2 => "THM2",
            IdentityId::Eq32 => "EQ32",
            IdentityId::Eq34 => "EQ34",
            IdentityId::Eq35 => "EQ35",
            IdentityId::Eq36 => "EQ36",
            IdentityId::Thm3 => "THM3",
            IdentityId::Thm4 => "THM4",
            IdentityId::Thm4Variant => "THM4_VARIANT",
            IdentityId::Thm5 => "THM5",
            IdentityId::Thm5Variant => "THM5_VARIANT",
            IdentityId::Eq52 => "EQ52",
            IdentityId::Thm6 => "THM6",
            IdentityId::Thm7 => "THM7",
            IdentityId::Thm8 => "THM8",
            IdentityId::NarumiBernoulli => "NARUMI_BERNOULLI",
            IdentityId::ShefferPairEq17 => "SHEFFER_PAIR_EQ17",
            IdentityId::AssocEq25 => "ASSOC_EQ25",
        }
    }

    pub fn dims(self) -> Dims {
        use IdentityId::*;
        let rk = Dims {
            r: true,
            k: true,
            ..Dims::default()
        };
        match self {
            Thm1 | Thm2 | Eq32 | Eq34 | Eq36 | Thm3 | Thm4 | Thm4Variant | Eq52 | Thm8
            | ShefferPairEq17 => rk,
            Eq35 => Dims { y: true, ..rk },
            Thm5 | Thm5Variant => Dims { m: true, ..rk },
            Thm6 => Dims { s: true, ..rk },
            Thm7 => Dims {
                s: true,
                lambda: true,
                ..rk
            },
            NarumiBernoulli => Dims {
                r: true,
                ..Dims::default()
            },
            AssocEq25 => Dims::default(),
        }
    }

    /// Whether the statement holds for every integer `r` (grids then include negative `r`).
    pub fn allows_negative_r(self) -> bool {
        !matches!(self, IdentityId::Thm1 | IdentityId::Eq34)
    }

    pub fn is_variant(self) -> bool {
        matches!(self, IdentityId::Thm4Variant | IdentityId::Thm5Variant)
    }

    /// The statement as written followed by its alternative reading, for the
    /// identities that have one.
    pub fn readings(self) -> Option<[IdentityId; 2]> {
        match self {
            IdentityId::Thm4 | IdentityId::Thm4Variant => {
                Some([IdentityId::Thm4, IdentityId::Thm4Variant])
            }
            IdentityId::Thm5 | IdentityId::Thm5Variant => {
                Some([IdentityId::Thm5, IdentityId::Thm5Variant])
            }
            _ => None,
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    /// Case-insensitive; `-` and `_` are interchangeable.
    fn from_str(s: &str) -> Result<Self, Error> {
        let wanted = s.trim().to_ascii_uppercase().replace('-', "_");
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == wanted)
            .ok_or_else(|| Error::Parse(format!("unknown identity `{s}`")))
    }
}
