use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::{Generator, Word};
use crate::coeff::{LaurentPoly, ParamSubstitution};
use crate::scalar::Scalar;

/// Exponents `(i, j, k, l, m, n)` of `z^i v^j xm^k xp^l vb^m zb^n`.
///
/// Ordered graded-lexicographically: total degree first, then the exponent
/// tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct NormalMonomial(pub [u32; 6]);

impl NormalMonomial {
    pub const ONE: NormalMonomial = NormalMonomial([0; 6]);

    pub fn generator(g: Generator) -> Self {
        let mut e = [0; 6];
        e[g.rank()] = 1;
        NormalMonomial(e)
    }

    pub fn exp(&self, g: Generator) -> u32 {
        self.0[g.rank()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Degree in the four space-time coordinates `v, xm, xp, vb`.
    pub fn minkowski_degree(&self) -> u32 {
        self.0[1..5].iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; 6]
    }

    pub fn word(&self) -> Word {
        let mut w = Vec::with_capacity(self.degree() as usize);
        for g in Generator::ALL {
            for _ in 0..self.exp(g) {
                w.push(g);
            }
        }
        w
    }

    /// The monomial spelled by an already-ordered word.
    pub fn from_sorted_word(w: &[Generator]) -> Option<Self> {
        if w.windows(2).any(|p| p[0] > p[1]) {
            return None;
        }
        let mut e = [0; 6];
        for g in w {
            e[g.rank()] += 1;
        }
        Some(NormalMonomial(e))
    }
}

impl Ord for NormalMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for NormalMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for NormalMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for g in Generator::ALL {
            let e = self.exp(g);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", g)?;
            } else {
                write!(f, "{}^{}", g, e)?;
            }
        }
        Ok(())
    }
}

/// A normally ordered element: finite combination of [`NormalMonomial`]s.
/// Canonical, so `==` is equality in the algebra.
#[derive(Clone, PartialEq, Debug)]
pub struct NCPoly<S> {
    terms: BTreeMap<NormalMonomial, LaurentPoly<S>>,
}

impl<S: Scalar> NCPoly<S> {
    pub fn zero() -> Self {
        NCPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::term(LaurentPoly::one(), NormalMonomial::ONE)
    }

    pub fn constant(c: LaurentPoly<S>) -> Self {
        Self::term(c, NormalMonomial::ONE)
    }

    pub fn term(c: LaurentPoly<S>, m: NormalMonomial) -> Self {
        let mut out = Self::zero();
        out.add_term(m, c);
        out
    }

    pub fn monomial(m: NormalMonomial) -> Self {
        Self::term(LaurentPoly::one(), m)
    }

    pub fn generator(g: Generator) -> Self {
        Self::monomial(NormalMonomial::generator(g))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&NormalMonomial, &LaurentPoly<S>)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &NormalMonomial) -> LaurentPoly<S> {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: NormalMonomial, c: LaurentPoly<S>) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                *slot += &c;
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &NCPoly<S>, c: &LaurentPoly<S>) {
        for (m, x) in &other.terms {
            self.add_term(*m, x * c);
        }
    }

    pub fn scale(&self, c: &LaurentPoly<S>) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&LaurentPoly<S>) -> LaurentPoly<S>) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, f(c));
        }
        out
    }

    /// Substitute into every coefficient.
    pub fn specialize(&self, s: &ParamSubstitution<S>) -> Self {
        self.map_coeffs(|c| c.substitute(s))
    }

    /// Commutative image at all parameters 1: monomial -> scalar.
    pub fn eval_at_one(&self) -> BTreeMap<NormalMonomial, S> {
        self.terms
            .iter()
            .map(|(m, c)| (*m, c.eval_at_one()))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    pub fn max_exp(&self, g: Generator) -> Option<u32> {
        self.terms.keys().map(|m| m.exp(g)).max()
    }

    pub fn to_words(&self) -> WordPoly<S> {
        let mut out = WordPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.word(), c.clone());
        }
        out
    }
}

impl<S: Scalar> Default for NCPoly<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<'a, S: Scalar> Add<&'a NCPoly<S>> for &'a NCPoly<S> {
    type Output = NCPoly<S>;
    fn add(self, rhs: &'a NCPoly<S>) -> NCPoly<S> {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentPoly::one());
        out
    }
}

impl<S: Scalar> Neg for &NCPoly<S> {
    type Output = NCPoly<S>;
    fn neg(self) -> NCPoly<S> {
        self.map_coeffs(|c| -c)
    }
}

impl<'a, S: Scalar> Sub<&'a NCPoly<S>> for &'a NCPoly<S> {
    type Output = NCPoly<S>;
    fn sub(self, rhs: &'a NCPoly<S>) -> NCPoly<S> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-LaurentPoly::one());
        out
    }
}

impl<S: Scalar> fmt::Display for NCPoly<S> {
    /// Descending graded-lex order; `(coef) * monomial` terms joined by ` + `.
    /// A pure scalar prints as its bare coefficient.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&NormalMonomial::ONE) {
                return write!(f, "{}", c);
            }
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            match (m.is_one(), c.is_one()) {
                (true, true) => f.write_str("1")?,
                (true, false) => write!(f, "({})", c)?,
                (false, true) => write!(f, "{}", m)?,
                (false, false) => write!(f, "({}) * {}", c, m)?,
            }
        }
        Ok(())
    }
}

/// Combination of raw (not necessarily ordered) words: the free algebra.
#[derive(Clone, PartialEq, Debug)]
pub struct WordPoly<S> {
    terms: BTreeMap<Word, LaurentPoly<S>>,
}

impl<S: Scalar> WordPoly<S> {
    pub fn zero() -> Self {
        WordPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(LaurentPoly::one())
    }

    pub fn constant(c: LaurentPoly<S>) -> Self {
        Self::word(c, Vec::new())
    }

    pub fn word(c: LaurentPoly<S>, w: Word) -> Self {
        let mut out = Self::zero();
        out.add_term(w, c);
        out
    }

    pub fn generator(g: Generator) -> Self {
        Self::word(LaurentPoly::one(), vec![g])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &LaurentPoly<S>)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, w: Word, c: LaurentPoly<S>) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    /// The coefficient, when this is a pure scalar (only the empty word).
    pub fn as_scalar(&self) -> Option<LaurentPoly<S>> {
        match self.terms.len() {
            0 => Some(LaurentPoly::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    pub fn add(&self, other: &WordPoly<S>) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        WordPoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &WordPoly<S>) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &LaurentPoly<S>) -> Self {
        let mut out = Self::zero();
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x * c);
        }
        out
    }

    /// Concatenation product of the free algebra.
    pub fn mul(&self, other: &WordPoly<S>) -> Self {
        let mut out = Self::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                let mut w = wa.clone();
                w.extend_from_slice(wb);
                out.add_term(w, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn specialize(&self, s: &ParamSubstitution<S>) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.substitute(s));
        }
        out
    }
}

impl<S: Scalar> fmt::Display for WordPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (w, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({}) * {}", c, super::word_to_string(w))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn monomial_text_and_word() {
        let m = NormalMonomial([2, 1, 0, 0, 0, 1]);
        assert_eq!(m.to_string(), "z^2*v*zb");
        assert_eq!(m.word(), vec![Generator::Z, Generator::Z, Generator::V, Generator::Zb]);
        assert_eq!(NormalMonomial::from_sorted_word(&m.word()), Some(m));
        assert_eq!(NormalMonomial::from_sorted_word(&[Generator::Zb, Generator::Z]), None);
        assert_eq!(NormalMonomial::ONE.to_string(), "1");
    }

    #[test]
    fn graded_order() {
        let a = NormalMonomial([0, 0, 0, 0, 0, 2]);
        let b = NormalMonomial([1, 1, 1, 0, 0, 0]);
        assert!(a < b);
        assert!(NormalMonomial::generator(Generator::V) < NormalMonomial::generator(Generator::Z));
    }

    #[test]
    fn poly_display() {
        type P = NCPoly<BigRational>;
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(P::one().to_string(), "1");
        let mut p = P::generator(Generator::Z);
        p.add_term(NormalMonomial::ONE, crate::coeff::lambda());
        assert_eq!(p.to_string(), "z + (q - q^-1)");
        let scalar = P::constant(crate::coeff::lambda());
        assert_eq!(scalar.to_string(), "q - q^-1");
    }
}
