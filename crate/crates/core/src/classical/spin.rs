use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use super::diffring::{Atom, DiffRingElem, FieldName, LightCone};
use super::Sign;
use crate::scalar::ComplexScalar;

/// Polynomial in the spin variables `z, zb` with coefficients in the
/// differential ring. Keys are `(z-degree, zb-degree)`.
#[derive(Clone, PartialEq, Debug)]
pub struct SpinPoly<C> {
    terms: BTreeMap<(u32, u32), DiffRingElem<C>>,
}

fn half<C: ComplexScalar>() -> C {
    C::from_ratio(&BigInt::from(1), &BigInt::from(2)).expect("nonzero denominator")
}

impl<C: ComplexScalar> SpinPoly<C> {
    pub fn zero() -> Self {
        SpinPoly { terms: BTreeMap::new() }
    }

    pub fn term(i: u32, j: u32, c: DiffRingElem<C>) -> Self {
        let mut out = Self::zero();
        out.add_term(i, j, c);
        out
    }

    pub fn constant(c: DiffRingElem<C>) -> Self {
        Self::term(0, 0, c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> DiffRingElem<C> {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(DiffRingElem::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &DiffRingElem<C>)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: DiffRingElem<C>) {
        let sum = self.coeff(i, j).add(&c);
        if sum.is_zero() {
            self.terms.remove(&(i, j));
        } else {
            self.terms.insert((i, j), sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-C::one()))
    }

    pub fn scale(&self, k: &C) -> Self {
        self.map(|c| c.scale(k))
    }

    fn map(&self, f: impl Fn(&DiffRingElem<C>) -> DiffRingElem<C>) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            out.add_term(i, j, f(c));
        }
        out
    }

    /// `(max z-degree, max zb-degree)` over the support.
    pub fn degree_bounds(&self) -> (u32, u32) {
        self.terms.keys().fold((0, 0), |(a, b), &(i, j)| (a.max(i), b.max(j)))
    }

    pub fn mul_z(&self) -> Self {
        self.shift(1, 0)
    }

    pub fn mul_zb(&self) -> Self {
        self.shift(0, 1)
    }

    fn shift(&self, di: u32, dj: u32) -> Self {
        SpinPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i + di, j + dj), c.clone()))
                .collect(),
        }
    }

    pub fn partial_z(&self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            if i > 0 {
                out.add_term(i - 1, j, c.scale(&C::from_i64(i as i64)));
            }
        }
        out
    }

    pub fn partial_zb(&self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            if j > 0 {
                out.add_term(i, j - 1, c.scale(&C::from_i64(j as i64)));
            }
        }
        out
    }

    /// Coefficient-wise light-cone derivative.
    pub fn partial(&self, d: LightCone) -> Self {
        self.map(|c| c.partial(d))
    }

    /// `z <-> zb`, `v <-> vb`, `i -> -i`, `F+ <-> F-`.
    pub fn conj_swap(&self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            out.add_term(j, i, c.conj_swap());
        }
        out
    }
}

impl<C: ComplexScalar> fmt::Display for SpinPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (&(i, j), c)) in self.terms.iter().rev().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({})", c)?;
            match i {
                0 => {}
                1 => f.write_str("*z")?,
                _ => write!(f, "*z^{}", i)?,
            }
            match j {
                0 => {}
                1 => f.write_str("*zb")?,
                _ => write!(f, "*zb^{}", j)?,
            }
        }
        Ok(())
    }
}

/// `I_2 = zb z d+ + z dv + zb dvb + d-`.
fn op_i2<C: ComplexScalar>(f: &SpinPoly<C>) -> SpinPoly<C> {
    f.partial(LightCone::Plus)
        .mul_z()
        .mul_zb()
        .add(&f.partial(LightCone::V).mul_z())
        .add(&f.partial(LightCone::Vb).mul_zb())
        .add(&f.partial(LightCone::Minus))
}

/// The three first-order operators `I_1 = d/dz`, `I_2`, `I_3 = d/dzb`.
///
/// Panics if `a` is not 1, 2 or 3.
pub fn op_i<C: ComplexScalar>(a: u8, f: &SpinPoly<C>) -> SpinPoly<C> {
    match a {
        1 => f.partial_z(),
        2 => op_i2(f),
        3 => f.partial_zb(),
        _ => panic!("operator index must be 1, 2 or 3, got {}", a),
    }
}

/// `I+_n = (n+2)/2 (zb d+ + dv) - 1/2 I_2 d/dz`, and the conjugate form for `-`.
pub fn op_i_pm_n_direct<C: ComplexScalar>(sign: Sign, n: u32, f: &SpinPoly<C>) -> SpinPoly<C> {
    let (first, lowered) = match sign {
        Sign::Plus => (
            f.partial(LightCone::Plus).mul_zb().add(&f.partial(LightCone::V)),
            f.partial_z(),
        ),
        Sign::Minus => (
            f.partial(LightCone::Plus).mul_z().add(&f.partial(LightCone::Vb)),
            f.partial_zb(),
        ),
    };
    let k = C::from_i64(n as i64 + 2) * half::<C>();
    first.scale(&k).sub(&op_i2(&lowered).scale(&half()))
}

/// `1/2 ((n+2) I_a I_2 - (n+3) I_2 I_a)` with `a = 1` for `+` and `a = 3` for `-`.
pub fn op_i_pm_n_factored<C: ComplexScalar>(sign: Sign, n: u32, f: &SpinPoly<C>) -> SpinPoly<C> {
    let a = match sign {
        Sign::Plus => 1,
        Sign::Minus => 3,
    };
    let ab = op_i(a, &op_i(2, f));
    let ba = op_i(2, &op_i(a, f));
    let h = half::<C>();
    ab.scale(&(C::from_i64(n as i64 + 2) * h.clone()))
        .sub(&ba.scale(&(C::from_i64(n as i64 + 3) * h)))
}

/// Every coefficient monomial of total degree `<= max_degree` in the four
/// light-cone coordinates and one generic field symbol `G`.
pub fn coefficient_monomials<C: ComplexScalar>(max_degree: u32) -> Vec<DiffRingElem<C>> {
    let atoms: Vec<DiffRingElem<C>> = LightCone::ALL
        .iter()
        .map(|&c| DiffRingElem::atom(Atom::Coord(c)))
        .chain(std::iter::once(DiffRingElem::field(FieldName::Generic("G".into()))))
        .collect();
    let mut out = vec![DiffRingElem::one()];
    let mut layer = vec![(0usize, DiffRingElem::<C>::one())];
    for _ in 0..max_degree {
        let mut next = Vec::new();
        for (start, m) in &layer {
            for (k, a) in atoms.iter().enumerate().skip(*start) {
                next.push((k, m.mul(a)));
            }
        }
        out.extend(next.iter().map(|(_, m)| m.clone()));
        layer = next;
    }
    out
}

/// All monomials `c * z^i * zb^j` with `i, j <= max_spin` and `c` from
/// [`coefficient_monomials`].
pub fn spin_monomials<C: ComplexScalar>(max_spin: u32, max_coeff_degree: u32) -> Vec<SpinPoly<C>> {
    let coeffs = coefficient_monomials::<C>(max_coeff_degree);
    let mut out = Vec::new();
    for i in 0..=max_spin {
        for j in 0..=max_spin {
            for c in &coeffs {
                out.push(SpinPoly::term(i, j, c.clone()));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;
    use num_complex::Complex;
    use num_rational::BigRational;
    use proptest::prelude::*;

    type G = Complex<BigRational>;
    type D = DiffRingElem<G>;
    type P = SpinPoly<G>;

    fn xm() -> D {
        D::coord(LightCone::Minus)
    }

    fn g(re: i64, im: i64) -> G {
        Complex::new(
            BigRational::from_integer(re.into()),
            BigRational::from_integer(im.into()),
        )
    }

    #[test]
    fn i1_of_z_is_one() {
        assert_eq!(op_i(1, &P::term(1, 0, D::one())), P::constant(D::one()));
    }

    #[test]
    fn i2_of_spin_constant_field() {
        let f = D::field(FieldName::Generic("A".into()));
        let out = op_i(2, &P::constant(f.clone()));
        assert_eq!(out.coeff(0, 0), f.partial(LightCone::Minus));
        assert_eq!(out.coeff(1, 1), f.partial(LightCone::Plus));
        assert_eq!(out.coeff(1, 0), f.partial(LightCone::V));
        assert_eq!(out.coeff(0, 1), f.partial(LightCone::Vb));
    }

    #[test]
    fn i1_i2_on_z_xm() {
        let f = P::term(1, 0, xm());
        let one = P::constant(D::one());
        assert_eq!(op_i(1, &op_i(2, &f)), one);
        assert_eq!(op_i(2, &op_i(1, &f)), one);
        let both = op_i(1, &op_i(2, &f))
            .scale(&G::from_i64(2))
            .sub(&op_i(2, &op_i(1, &f)).scale(&G::from_i64(3)))
            .scale(&half());
        assert_eq!(both, P::constant(D::constant(g(-1, 0) * half::<G>())));
    }

    #[test]
    fn direct_examples() {
        assert!(op_i_pm_n_direct(Sign::Plus, 0, &P::term(1, 0, D::one())).is_zero());
        let f = P::term(1, 0, xm());
        let minus_half = P::constant(D::constant(-half::<G>()));
        assert_eq!(op_i_pm_n_direct(Sign::Plus, 0, &f), minus_half);
        assert_eq!(op_i_pm_n_factored(Sign::Plus, 0, &f), minus_half);
        assert!(op_i_pm_n_factored(Sign::Plus, 0, &P::term(1, 0, D::one())).is_zero());
    }

    #[test]
    fn coefficient_monomial_count() {
        // 1 + 5 + 15
        assert_eq!(coefficient_monomials::<G>(2).len(), 21);
    }

    fn arb_coeff() -> impl Strategy<Value = D> {
        let atoms = prop::sample::select(vec![0usize, 1, 2, 3, 4, 5]);
        (prop::collection::vec(atoms, 0..4), -3i64..4, -3i64..4).prop_map(|(idx, re, im)| {
            let mut m = D::constant(g(re, im));
            for k in idx {
                let a = match k {
                    0..=3 => D::coord(LightCone::ALL[k]),
                    4 => D::field(FieldName::Generic("A".into())),
                    _ => D::field(FieldName::FPlus(1)).partial(LightCone::V),
                };
                m = m.mul(&a);
            }
            m
        })
    }

    fn arb_spin() -> impl Strategy<Value = P> {
        prop::collection::vec((0u32..5, 0u32..5, arb_coeff()), 0..4).prop_map(|ts| {
            let mut p = P::zero();
            for (i, j, c) in ts {
                p.add_term(i, j, c);
            }
            p
        })
    }

    proptest! {
        #[test]
        fn direct_equals_factored(f in arb_spin(), n in 0u32..6, plus in any::<bool>()) {
            let s = if plus { Sign::Plus } else { Sign::Minus };
            prop_assert_eq!(op_i_pm_n_direct(s, n, &f), op_i_pm_n_factored(s, n, &f));
        }

        #[test]
        fn commutator_identities(f in arb_spin()) {
            let c12 = op_i(1, &op_i(2, &f)).sub(&op_i(2, &op_i(1, &f)));
            let e12 = f.partial(LightCone::Plus).mul_zb().add(&f.partial(LightCone::V));
            prop_assert_eq!(c12, e12);
            let c32 = op_i(3, &op_i(2, &f)).sub(&op_i(2, &op_i(3, &f)));
            let e32 = f.partial(LightCone::Plus).mul_z().add(&f.partial(LightCone::Vb));
            prop_assert_eq!(c32, e32);
        }

        #[test]
        fn minus_is_conjugate_of_plus(f in arb_spin(), n in 0u32..6) {
            let lhs = op_i_pm_n_direct(Sign::Minus, n, &f);
            let rhs = op_i_pm_n_direct(Sign::Plus, n, &f.conj_swap()).conj_swap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn degree_bookkeeping(cs in prop::collection::vec(arb_coeff(), 1..4), n in 0u32..6) {
            let mut f = P::zero();
            for (k, c) in cs.into_iter().enumerate() {
                let i = (k as u32) % (n + 3);
                f.add_term(i, n.min(k as u32), c);
            }
            let (a, b) = op_i_pm_n_direct(Sign::Plus, n, &f).degree_bounds();
            prop_assert!(a <= n + 1 && b <= n + 1);
            let (a, b) = op_i_pm_n_direct(Sign::Minus, n, &f.conj_swap()).degree_bounds();
            prop_assert!(a <= n + 1 && b <= n + 1);
        }
    }
}
