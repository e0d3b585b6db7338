//! Coefficient ring: Laurent polynomials in the seven deformation parameters
//! `q, q12, q13, q14, q23, q24, q34` with exact scalar coefficients.
//!
//! Parameter slot order is fixed ([`Param::ALL`]) and is the order used by
//! [`ParamExponent`] and by the text form.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::{Scalar, ScalarDisplay};

/// Number of deformation parameters.
pub const NUM_PARAMS: usize = 7;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoeffError {
    #[error("q-integer of negative argument {0}")]
    NegativeQInt(i64),
    #[error("substitution value for {0} is not a unit monomial")]
    NonUnit(Param),
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
}

/// One deformation parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Param {
    Q,
    Q12,
    Q13,
    Q14,
    Q23,
    Q24,
    Q34,
}

impl Param {
    pub const ALL: [Param; NUM_PARAMS] = [
        Param::Q,
        Param::Q12,
        Param::Q13,
        Param::Q14,
        Param::Q23,
        Param::Q24,
        Param::Q34,
    ];

    pub fn slot(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Param::Q => "q",
            Param::Q12 => "q12",
            Param::Q13 => "q13",
            Param::Q14 => "q14",
            Param::Q23 => "q23",
            Param::Q24 => "q24",
            Param::Q34 => "q34",
        }
    }

    /// Accepts ASCII names and the subscripted forms (`q₁₂`).
    pub fn from_name(s: &str) -> Option<Param> {
        let ascii: String = s
            .chars()
            .map(|c| match c {
                '₀'..='₉' => char::from(b'0' + (c as u32 - '₀' as u32) as u8),
                c => c,
            })
            .collect();
        Param::ALL.into_iter().find(|p| p.name() == ascii)
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Integer exponents of the seven parameters, in [`Param::ALL`] order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct ParamExponent(pub [i32; NUM_PARAMS]);

impl ParamExponent {
    pub const ONE: ParamExponent = ParamExponent([0; NUM_PARAMS]);

    pub fn of(p: Param, e: i32) -> Self {
        let mut out = [0; NUM_PARAMS];
        out[p.slot()] = e;
        ParamExponent(out)
    }

    pub fn from_pairs(pairs: &[(Param, i32)]) -> Self {
        let mut out = ParamExponent::ONE;
        for &(p, e) in pairs {
            out.0[p.slot()] += e;
        }
        out
    }

    pub fn get(&self, p: Param) -> i32 {
        self.0[p.slot()]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.0;
        for (o, e) in out.iter_mut().zip(other.0.iter()) {
            *o += e;
        }
        ParamExponent(out)
    }

    pub fn scale(&self, k: i32) -> Self {
        ParamExponent(self.0.map(|e| e * k))
    }

    pub fn inverse(&self) -> Self {
        self.scale(-1)
    }
}

impl fmt::Display for ParamExponent {
    /// Positive powers first, then negative powers, each in slot order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let pos = Param::ALL.iter().filter(|p| self.get(**p) > 0);
        let neg = Param::ALL.iter().filter(|p| self.get(**p) < 0);
        let mut first = true;
        for p in pos.chain(neg) {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            match self.get(*p) {
                1 => write!(f, "{}", p)?,
                e => write!(f, "{}^{}", p, e)?,
            }
        }
        Ok(())
    }
}

/// Finite Laurent polynomial with scalar coefficients. Canonical: no zero
/// coefficients are stored, so structural equality is ring equality.
#[derive(Clone, PartialEq, Debug)]
pub struct LaurentPoly<S> {
    terms: BTreeMap<ParamExponent, S>,
}

impl<S: Scalar> LaurentPoly<S> {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::monomial(c, ParamExponent::ONE)
    }

    pub fn from_i64(n: i64) -> Self {
        Self::constant(S::from_i64(n))
    }

    pub fn monomial(c: S, e: ParamExponent) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { terms }
    }

    /// `c * p^e` for a single parameter.
    pub fn param_pow(p: Param, e: i32) -> Self {
        Self::monomial(S::one(), ParamExponent::of(p, e))
    }

    pub fn param(p: Param) -> Self {
        Self::param_pow(p, 1)
    }

    /// Unit-coefficient monomial from `(param, exponent)` pairs.
    pub fn mono(pairs: &[(Param, i32)]) -> Self {
        Self::monomial(S::one(), ParamExponent::from_pairs(pairs))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (ParamExponent, S)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&ParamExponent::ONE).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ParamExponent, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &ParamExponent) -> S {
        self.terms.get(e).cloned().unwrap_or_else(S::zero)
    }

    pub fn add_term(&mut self, e: ParamExponent, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(slot) => {
                let sum = slot.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *slot = sum;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    /// The single term, if this is a unit: one monomial with nonzero coefficient.
    pub fn as_unit(&self) -> Option<(S, ParamExponent)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        Some((c.clone(), *e))
    }

    pub fn is_unit(&self) -> bool {
        self.as_unit().is_some()
    }

    /// Inverse of a unit.
    pub fn inverse(&self) -> Option<Self> {
        let (c, e) = self.as_unit()?;
        Some(Self::monomial(c.inv()?, e.inverse()))
    }

    /// Integer power; negative exponents only for units.
    pub fn pow(&self, k: i32) -> Option<Self> {
        if k < 0 {
            return self.inverse()?.pow(-k);
        }
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        Some(out)
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, x)| (*e, x.clone() * c.clone())))
    }

    /// Multiply by a unit-coefficient monomial.
    pub fn shift(&self, e: &ParamExponent) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(x, c)| (x.mul(e), c.clone())).collect(),
        }
    }

    /// Conjugation of phases: every exponent negated, scalars conjugated.
    pub fn conj(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (e.inverse(), c.conj())))
    }

    /// Value with every parameter set to 1.
    pub fn eval_at_one(&self) -> S {
        self.terms.values().cloned().fold(S::zero(), |acc, c| acc + c)
    }

    pub fn substitute(&self, s: &ParamSubstitution<S>) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let (k, x) = s.image_of_monomial(e);
            out.add_term(x, c.clone() * k);
        }
        out
    }

    /// Change of scalar field, e.g. rationals into Gaussian rationals.
    pub fn map_scalars<T: Scalar>(&self, f: impl Fn(&S) -> T) -> LaurentPoly<T> {
        LaurentPoly::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }
}

impl<S: Scalar> Default for LaurentPoly<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<'a, S: Scalar> Add<&'a LaurentPoly<S>> for &'a LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn add(self, rhs: &'a LaurentPoly<S>) -> LaurentPoly<S> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<S: Scalar> Add for LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn add(mut self, rhs: LaurentPoly<S>) -> LaurentPoly<S> {
        self += &rhs;
        self
    }
}

impl<S: Scalar> AddAssign<&LaurentPoly<S>> for LaurentPoly<S> {
    fn add_assign(&mut self, rhs: &LaurentPoly<S>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<S: Scalar> Neg for &LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn neg(self) -> LaurentPoly<S> {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl<S: Scalar> Neg for LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn neg(self) -> LaurentPoly<S> {
        -&self
    }
}

impl<'a, S: Scalar> Sub<&'a LaurentPoly<S>> for &'a LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn sub(self, rhs: &'a LaurentPoly<S>) -> LaurentPoly<S> {
        self + &(-rhs)
    }
}

impl<S: Scalar> Sub for LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn sub(self, rhs: LaurentPoly<S>) -> LaurentPoly<S> {
        &self - &rhs
    }
}

impl<'a, S: Scalar> Mul<&'a LaurentPoly<S>> for &'a LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn mul(self, rhs: &'a LaurentPoly<S>) -> LaurentPoly<S> {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea.mul(eb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<S: Scalar> Mul for LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn mul(self, rhs: LaurentPoly<S>) -> LaurentPoly<S> {
        &self * &rhs
    }
}

impl<S: Scalar> fmt::Display for LaurentPoly<S> {
    /// Terms in descending exponent order: `q - q^-1`, `3/2*q13*q14^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let mag = if negative { -c.clone() } else { c.clone() };
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if e.is_one() {
                write!(f, "{}", ScalarDisplay(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}", e)?;
            } else {
                write!(f, "{}*{}", ScalarDisplay(&mag), e)?;
            }
        }
        Ok(())
    }
}

/// The deformation constant `q - q^-1`.
pub fn lambda<S: Scalar>() -> LaurentPoly<S> {
    &LaurentPoly::param(Param::Q) - &LaurentPoly::param_pow(Param::Q, -1)
}

/// Symmetric q-integer `[n] = (q^n - q^-n)/(q - q^-1)`, expanded as
/// `sum_{k<n} q^(n-1-2k)`.
pub fn q_int<S: Scalar>(n: i64) -> Result<LaurentPoly<S>, CoeffError> {
    if n < 0 {
        return Err(CoeffError::NegativeQInt(n));
    }
    Ok(LaurentPoly::from_terms((0..n).map(|k| {
        (ParamExponent::of(Param::Q, (n - 1 - 2 * k) as i32), S::one())
    })))
}

/// Assignment of unit monomials to some parameters; a ring homomorphism of
/// the Laurent ring once extended to all terms.
#[derive(Clone, PartialEq, Debug)]
pub struct ParamSubstitution<S> {
    assignment: BTreeMap<Param, (S, ParamExponent)>,
}

impl<S: Scalar> ParamSubstitution<S> {
    pub fn identity() -> Self {
        ParamSubstitution {
            assignment: BTreeMap::new(),
        }
    }

    pub fn assign(mut self, p: Param, value: &LaurentPoly<S>) -> Result<Self, CoeffError> {
        let unit = value.as_unit().ok_or(CoeffError::NonUnit(p))?;
        self.assignment.insert(p, unit);
        Ok(self)
    }

    /// Assign a unit-coefficient monomial.
    pub fn assign_mono(mut self, p: Param, pairs: &[(Param, i32)]) -> Self {
        self.assignment.insert(p, (S::one(), ParamExponent::from_pairs(pairs)));
        self
    }

    pub fn get(&self, p: Param) -> Option<LaurentPoly<S>> {
        self.assignment
            .get(&p)
            .map(|(c, e)| LaurentPoly::monomial(c.clone(), *e))
    }

    pub fn is_identity(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn assigned(&self) -> impl Iterator<Item = Param> + '_ {
        self.assignment.keys().copied()
    }

    fn image_of_monomial(&self, e: &ParamExponent) -> (S, ParamExponent) {
        let mut k = S::one();
        let mut out = ParamExponent::ONE;
        for p in Param::ALL {
            let exp = e.get(p);
            if exp == 0 {
                continue;
            }
            match self.assignment.get(&p) {
                None => out.0[p.slot()] += exp,
                Some((c, x)) => {
                    let base = if exp < 0 {
                        c.inv().expect("substitution values are units")
                    } else {
                        c.clone()
                    };
                    for _ in 0..exp.unsigned_abs() {
                        k = k * base.clone();
                    }
                    out = out.mul(&x.scale(exp));
                }
            }
        }
        (k, out)
    }

    /// `then` applied after `self`: substitute(a, s.compose(t)) = substitute(substitute(a, s), t).
    pub fn compose(&self, then: &ParamSubstitution<S>) -> ParamSubstitution<S> {
        let mut assignment = BTreeMap::new();
        for p in Param::ALL {
            let before = self.get(p).unwrap_or_else(|| LaurentPoly::param(p));
            let after = before.substitute(then);
            let unit = after.as_unit().expect("units map to units");
            if unit != (S::one(), ParamExponent::of(p, 1)) {
                assignment.insert(p, unit);
            }
        }
        ParamSubstitution { assignment }
    }
}

impl<S: Scalar> Default for ParamSubstitution<S> {
    fn default() -> Self {
        Self::identity()
    }
}

/// Named parameter specializations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Preset {
    /// Every `q_ij` set to `q`.
    OneParam,
    /// Four-parameter reduction: `q12, q23, q34` expressed through `q, q13, q14, q24`.
    Sl4Split,
    /// Two-parameter reduction compatible with the conjugation.
    Conj2Param,
    /// Constraints under which the anti-involution preserves the relations.
    Relq,
}

impl Preset {
    pub const ALL: [Preset; 4] = [Preset::OneParam, Preset::Sl4Split, Preset::Conj2Param, Preset::Relq];

    pub fn name(self) -> &'static str {
        match self {
            Preset::OneParam => "one-param",
            Preset::Sl4Split => "sl4-split",
            Preset::Conj2Param => "conj-2param",
            Preset::Relq => "relq",
        }
    }

    pub fn from_name(s: &str) -> Result<Preset, CoeffError> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| CoeffError::UnknownPreset(s.to_string()))
    }

    pub fn substitution<S: Scalar>(self) -> ParamSubstitution<S> {
        use Param::*;
        let s = ParamSubstitution::identity();
        match self {
            Preset::OneParam => [Q12, Q13, Q14, Q23, Q24, Q34]
                .into_iter()
                .fold(s, |s, p| s.assign_mono(p, &[(Q, 1)])),
            Preset::Sl4Split => s
                .assign_mono(Q12, &[(Q, 3), (Q13, -1), (Q14, -1)])
                .assign_mono(Q23, &[(Q, 4), (Q13, -1), (Q14, -1), (Q24, -1)])
                .assign_mono(Q34, &[(Q, 3), (Q14, -1), (Q24, -1)]),
            Preset::Conj2Param => s
                .assign_mono(Q12, &[(Q, 2), (Q14, -1)])
                .assign_mono(Q23, &[(Q, 2), (Q14, -1)])
                .assign_mono(Q34, &[(Q, 2), (Q14, -1)])
                .assign_mono(Q13, &[(Q, 1)])
                .assign_mono(Q24, &[(Q, 1)]),
            Preset::Relq => s
                .assign_mono(Q13, &[(Q12, 1), (Q24, 1), (Q34, -1)])
                .assign_mono(Q14, &[(Q12, 1), (Q24, 2), (Q23, -1), (Q34, -1)]),
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::Zero;

    type L = LaurentPoly<BigRational>;

    fn q() -> L {
        L::param(Param::Q)
    }
    fn qinv() -> L {
        L::param_pow(Param::Q, -1)
    }

    #[test]
    fn add_examples() {
        assert!((&q() + &(-q())).is_zero());
        assert_eq!((&q() + &qinv()).len(), 2);
        assert_eq!(&(&q() - &qinv()) + &qinv(), q());
    }

    #[test]
    fn mul_examples() {
        assert!((&q() * &qinv()).is_one());
        let lhs = &(&q() - &qinv()) * &(&q() + &qinv());
        assert_eq!(lhs, &L::param_pow(Param::Q, 2) - &L::param_pow(Param::Q, -2));
        assert!((&lambda() * &L::zero()).is_zero());
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda::<BigRational>(), &q() - &qinv());
        assert!(lambda::<BigRational>().eval_at_one().is_zero());
        assert_eq!(lambda::<BigRational>().conj(), -lambda::<BigRational>());
    }

    #[test]
    fn q_int_examples() {
        assert!(q_int::<BigRational>(1).unwrap().is_one());
        assert_eq!(q_int::<BigRational>(2).unwrap(), &q() + &qinv());
        assert_eq!(q_int::<BigRational>(5).unwrap().eval_at_one(), BigRational::from_i64(5));
        assert!(q_int::<BigRational>(0).unwrap().is_zero());
        assert_eq!(q_int::<BigRational>(-1), Err(CoeffError::NegativeQInt(-1)));
    }

    #[test]
    fn conj_examples() {
        assert_eq!(q().conj(), qinv());
        assert!(L::one().conj().is_one());
        let a = &L::param_pow(Param::Q, 2) + &L::param(Param::Q14).scale(&BigRational::from_i64(3));
        let b = &L::param_pow(Param::Q, -2) + &L::param_pow(Param::Q14, -1).scale(&BigRational::from_i64(3));
        assert_eq!(a.conj(), b);
    }

    #[test]
    fn substitute_examples() {
        use Param::*;
        let xp_v = L::mono(&[(Q23, 1), (Q34, 1), (Q24, -1)]);
        let splitz = Preset::Conj2Param.substitution();
        assert_eq!(xp_v.substitute(&splitz), L::mono(&[(Q, 3), (Q14, -2)]));
        for p in Preset::ALL {
            assert_eq!(q().substitute(&p.substitution()), q());
        }
        let zb_z = L::mono(&[(Q13, 1), (Q24, 1), (Q14, -1), (Q23, -1)]);
        assert!(zb_z.substitute(&Preset::Relq.substitution()).is_one());
    }

    #[test]
    fn non_unit_assignment_rejected() {
        let err = ParamSubstitution::identity().assign(Param::Q12, &lambda::<BigRational>());
        assert_eq!(err, Err(CoeffError::NonUnit(Param::Q12)));
        assert!(ParamSubstitution::identity().assign(Param::Q12, &L::zero()).is_err());
    }

    #[test]
    fn display_forms() {
        use Param::*;
        assert_eq!(lambda::<BigRational>().to_string(), "q - q^-1");
        assert_eq!(
            L::mono(&[(Q13, 1), (Q24, 1), (Q14, -1), (Q23, -1)]).to_string(),
            "q13*q24*q14^-1*q23^-1"
        );
        assert_eq!(q_int::<BigRational>(3).unwrap().to_string(), "q^2 + 1 + q^-2");
        let half = L::constant(BigRational::new(1.into(), 2.into()));
        assert_eq!((&half - &q()).to_string(), "-q + 1/2");
        assert_eq!(L::zero().to_string(), "0");
    }

    #[test]
    fn param_names() {
        assert_eq!(Param::from_name("q₁₂"), Some(Param::Q12));
        assert_eq!(Param::from_name("q34"), Some(Param::Q34));
        assert_eq!(Param::from_name("q35"), None);
        assert_eq!(Preset::from_name("relq"), Ok(Preset::Relq));
        assert!(Preset::from_name("bogus").is_err());
    }
}
