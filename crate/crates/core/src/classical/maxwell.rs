use num_bigint::BigInt;

use super::diffring::{Atom, DiffRingElem, FieldName, LightCone};
use super::spin::{op_i_pm_n_direct, SpinPoly};
use super::Sign;
use crate::scalar::ComplexScalar;

/// Ratio between the current in the component equations and the current
/// read off the spin-polynomial `J(z, zb)`: `d_k F_k = CURRENT_NORMALIZATION * J_0`.
pub const CURRENT_NORMALIZATION: i64 = -2;

/// The field symbols `F1, F2, F3` of the given chirality.
pub fn field_components<C: ComplexScalar>(sign: Sign) -> [DiffRingElem<C>; 3] {
    let make = |k: u8| match sign {
        Sign::Plus => DiffRingElem::field(FieldName::FPlus(k)),
        Sign::Minus => DiffRingElem::field(FieldName::FMinus(k)),
    };
    [make(1), make(2), make(3)]
}

fn current_components<C: ComplexScalar>() -> [DiffRingElem<C>; 4] {
    [0, 1, 2, 3].map(|m| DiffRingElem::field(FieldName::J(m)))
}

fn i_times<C: ComplexScalar>(x: &DiffRingElem<C>) -> DiffRingElem<C> {
    x.scale(&C::i())
}

/// `z^2 (F1 + i F2) - 2 z F3 - (F1 - i F2)`.
pub fn build_f_plus<C: ComplexScalar>(f: &[DiffRingElem<C>; 3]) -> SpinPoly<C> {
    let mut out = SpinPoly::term(2, 0, f[0].add(&i_times(&f[1])));
    out.add_term(1, 0, f[2].scale(&C::from_i64(-2)));
    out.add_term(0, 0, f[0].sub(&i_times(&f[1])).neg());
    out
}

/// `zb^2 (F1 - i F2) - 2 zb F3 - (F1 + i F2)`.
pub fn build_f_minus<C: ComplexScalar>(f: &[DiffRingElem<C>; 3]) -> SpinPoly<C> {
    let mut out = SpinPoly::term(0, 2, f[0].sub(&i_times(&f[1])));
    out.add_term(0, 1, f[2].scale(&C::from_i64(-2)));
    out.add_term(0, 0, f[0].add(&i_times(&f[1])).neg());
    out
}

/// `zb z (J0 + J3) + zb (J1 - i J2) + z (J1 + i J2) + (J0 - J3)`.
pub fn build_j<C: ComplexScalar>(j: &[DiffRingElem<C>; 4]) -> SpinPoly<C> {
    let mut out = SpinPoly::term(1, 1, j[0].add(&j[3]));
    out.add_term(0, 1, j[1].sub(&i_times(&j[2])));
    out.add_term(1, 0, j[1].add(&i_times(&j[2])));
    out.add_term(0, 0, j[0].sub(&j[3]));
    out
}

/// `I^± F^± - J` as a spin polynomial.
pub fn maxwell_residual_full<C: ComplexScalar>(sign: Sign) -> SpinPoly<C> {
    let f = field_components(sign);
    let field = match sign {
        Sign::Plus => build_f_plus(&f),
        Sign::Minus => build_f_minus(&f),
    };
    op_i_pm_n_direct(sign, 0, &field).sub(&build_j(&current_components()))
}

/// Coefficients of `zb z`, `zb`, `z`, `1` in [`maxwell_residual_full`].
pub fn maxwell_residual<C: ComplexScalar>(sign: Sign) -> [DiffRingElem<C>; 4] {
    let r = maxwell_residual_full(sign);
    [r.coeff(1, 1), r.coeff(0, 1), r.coeff(1, 0), r.coeff(0, 0)]
}

/// Cartesian derivative `d_mu` in light-cone variables:
/// `d0 = d+ + d-`, `d1 = dv + dvb`, `d2 = -i (dv - dvb)`, `d3 = d+ - d-`.
fn d_mu<C: ComplexScalar>(mu: usize, x: &DiffRingElem<C>) -> DiffRingElem<C> {
    let p = |d| x.partial(d);
    match mu {
        0 => p(LightCone::Plus).add(&p(LightCone::Minus)),
        1 => p(LightCone::V).add(&p(LightCone::Vb)),
        2 => i_times(&p(LightCone::V).sub(&p(LightCone::Vb))).neg(),
        3 => p(LightCone::Plus).sub(&p(LightCone::Minus)),
        _ => unreachable!(),
    }
}

/// Field part of the component equations: `d_k F_k` and
/// `d_0 F_k ± i eps_klm d_l F_m`.
fn mxc_lhs<C: ComplexScalar>(sign: Sign) -> [DiffRingElem<C>; 4] {
    let f = field_components::<C>(sign);
    let pm = match sign {
        Sign::Plus => C::i(),
        Sign::Minus => -C::i(),
    };
    let curl = |l: usize, m: usize| d_mu(l, &f[m - 1]).sub(&d_mu(m, &f[l - 1]));
    let div = d_mu(1, &f[0]).add(&d_mu(2, &f[1])).add(&d_mu(3, &f[2]));
    [
        div,
        d_mu(0, &f[0]).add(&curl(2, 3).scale(&pm)),
        d_mu(0, &f[1]).add(&curl(3, 1).scale(&pm)),
        d_mu(0, &f[2]).add(&curl(1, 2).scale(&pm)),
    ]
}

/// `E_mu = lhs_mu - CURRENT_NORMALIZATION * J_mu`; the component equations
/// read `E_mu = 0`.
pub fn mxc_equations<C: ComplexScalar>(sign: Sign) -> [DiffRingElem<C>; 4] {
    let lhs = mxc_lhs::<C>(sign);
    let j = current_components::<C>();
    let k = C::from_i64(CURRENT_NORMALIZATION);
    [0, 1, 2, 3].map(|m| lhs[m].sub(&j[m].scale(&k)))
}

/// The component equations solved for the currents: `J_mu -> lhs_mu / CURRENT_NORMALIZATION`.
pub fn mxc_rules<C: ComplexScalar>(sign: Sign) -> Vec<(FieldName, DiffRingElem<C>)> {
    let inv = C::from_ratio(&BigInt::from(1), &BigInt::from(CURRENT_NORMALIZATION)).expect("nonzero");
    mxc_lhs::<C>(sign)
        .into_iter()
        .enumerate()
        .map(|(m, l)| (FieldName::J(m as u8), l.scale(&inv)))
        .collect()
}

/// Rewrite every underived current symbol with [`mxc_rules`].
pub fn impose_mxc<C: ComplexScalar>(x: &DiffRingElem<C>, sign: Sign) -> DiffRingElem<C> {
    let rules = mxc_rules::<C>(sign);
    x.substitute(&|a: &Atom| match a {
        Atom::Field(s) if s.deriv == [0; 4] => rules.iter().find(|(n, _)| *n == s.name).map(|(_, r)| r.clone()),
        _ => None,
    })
}
