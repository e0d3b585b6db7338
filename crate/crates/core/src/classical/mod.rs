//! Classical Maxwell hierarchy in light-cone coordinates and spin variables.

mod diffring;
mod maxwell;
mod spin;

pub use diffring::{Atom, DiffMonomial, DiffRingElem, FieldName, FieldSymbol, LightCone};
pub use maxwell::{
    build_f_minus, build_f_plus, build_j, field_components, impose_mxc, maxwell_residual, maxwell_residual_full,
    mxc_equations, mxc_rules, CURRENT_NORMALIZATION,
};
pub use spin::{coefficient_monomials, op_i, op_i_pm_n_direct, op_i_pm_n_factored, spin_monomials, SpinPoly};

use serde::{Deserialize, Serialize};

/// Chirality of a hierarchy member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const ALL: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Sign> {
        match s {
            "+" | "plus" => Some(Sign::Plus),
            "-" | "minus" => Some(Sign::Minus),
            _ => None,
        }
    }
}
