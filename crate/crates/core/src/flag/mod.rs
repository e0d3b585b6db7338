//! The noncommutative coordinate algebra of the quantum flag manifold.
//!
//! Six generators `z, v, xm, xp, vb, zb` (ranked in that order), fifteen
//! commutation rules oriented toward the ordered basis
//! `z^i v^j xm^k xp^l vb^m zb^n`, normal ordering by rewriting, parameter
//! specialization, and the anti-linear anti-involution ω.

mod algebra;
mod confluence;
mod poly;
mod rules;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use algebra::{FlagAlgebra, RewriteStats, Strategy};
pub use confluence::{confluence_check, ConfluenceFailure, ConfluenceReport};
pub use poly::{NCPoly, NormalMonomial, WordPoly};
pub use rules::{relation_table, RewriteRule, RuleTable};

/// A coordinate generator. The discriminant is the normal-order rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Generator {
    Z = 0,
    V = 1,
    Xm = 2,
    Xp = 3,
    Vb = 4,
    Zb = 5,
}

/// A word in the free monoid; the empty word is the unit.
pub type Word = Vec<Generator>;

impl Generator {
    pub const ALL: [Generator; 6] = [
        Generator::Z,
        Generator::V,
        Generator::Xm,
        Generator::Xp,
        Generator::Vb,
        Generator::Zb,
    ];

    pub fn rank(self) -> usize {
        self as usize
    }

    pub fn from_rank(r: usize) -> Option<Generator> {
        Generator::ALL.get(r).copied()
    }

    pub fn name(self) -> &'static str {
        match self {
            Generator::Z => "z",
            Generator::V => "v",
            Generator::Xm => "xm",
            Generator::Xp => "xp",
            Generator::Vb => "vb",
            Generator::Zb => "zb",
        }
    }

    /// ASCII names plus the Unicode spellings `z̄ v̄ x₋ x₊`.
    pub fn from_name(s: &str) -> Option<Generator> {
        match s {
            "z" => Some(Generator::Z),
            "v" => Some(Generator::V),
            "xm" | "x₋" | "x-" => Some(Generator::Xm),
            "xp" | "x₊" | "x+" => Some(Generator::Xp),
            "vb" | "v\u{304}" => Some(Generator::Vb),
            "zb" | "z\u{304}" => Some(Generator::Zb),
            _ => None,
        }
    }

    /// Image under ω: `z <-> zb`, `v <-> vb`, `x± -> x±`.
    pub fn omega(self) -> Generator {
        match self {
            Generator::Z => Generator::Zb,
            Generator::Zb => Generator::Z,
            Generator::V => Generator::Vb,
            Generator::Vb => Generator::V,
            g => g,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `z*zb*xm` style rendering of a raw word.
pub fn word_to_string(w: &[Generator]) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    w.iter().map(|g| g.name()).collect::<Vec<_>>().join("*")
}
