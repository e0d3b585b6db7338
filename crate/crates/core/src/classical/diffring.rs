use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::{ComplexScalar, ScalarDisplay};

/// The four light-cone directions, used both as coordinates `x+, x-, v, vb`
/// and as derivative directions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LightCone {
    Plus = 0,
    Minus = 1,
    V = 2,
    Vb = 3,
}

impl LightCone {
    pub const ALL: [LightCone; 4] = [LightCone::Plus, LightCone::Minus, LightCone::V, LightCone::Vb];

    pub fn index(self) -> usize {
        self as usize
    }

    fn coord_name(self) -> &'static str {
        match self {
            LightCone::Plus => "xp",
            LightCone::Minus => "xm",
            LightCone::V => "v",
            LightCone::Vb => "vb",
        }
    }

    fn deriv_name(self) -> &'static str {
        match self {
            LightCone::Plus => "dp",
            LightCone::Minus => "dm",
            LightCone::V => "dv",
            LightCone::Vb => "dvb",
        }
    }

    /// `v <-> vb`, light-cone coordinates fixed.
    pub fn swap(self) -> LightCone {
        match self {
            LightCone::V => LightCone::Vb,
            LightCone::Vb => LightCone::V,
            d => d,
        }
    }
}

/// Names of field components. `Generic` symbols carry no physics and exist
/// for property tests.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FieldName {
    /// `F_k^+`, k in 1..=3
    FPlus(u8),
    /// `F_k^-`, k in 1..=3
    FMinus(u8),
    /// `J_mu`, mu in 0..=3
    J(u8),
    Generic(String),
}

impl FieldName {
    /// `F+ <-> F-`, currents and generic symbols fixed.
    pub fn swap(&self) -> FieldName {
        match self {
            FieldName::FPlus(k) => FieldName::FMinus(*k),
            FieldName::FMinus(k) => FieldName::FPlus(*k),
            other => other.clone(),
        }
    }
}

impl fmt::Display for FieldName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldName::FPlus(k) => write!(f, "F{}+", k),
            FieldName::FMinus(k) => write!(f, "F{}-", k),
            FieldName::J(m) => write!(f, "J{}", m),
            FieldName::Generic(s) => f.write_str(s),
        }
    }
}

/// A field component with a commuting derivative multi-index over
/// `(d+, d-, dv, dvb)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldSymbol {
    pub name: FieldName,
    pub deriv: [u32; 4],
}

impl FieldSymbol {
    pub fn new(name: FieldName) -> Self {
        FieldSymbol { name, deriv: [0; 4] }
    }

    pub fn differentiated(&self, d: LightCone) -> Self {
        let mut out = self.clone();
        out.deriv[d.index()] += 1;
        out
    }
}

impl fmt::Display for FieldSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in LightCone::ALL {
            match self.deriv[d.index()] {
                0 => {}
                1 => write!(f, "{}", d.deriv_name())?,
                k => write!(f, "{}^{}", d.deriv_name(), k)?,
            }
        }
        write!(f, "{}", self.name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    Coord(LightCone),
    Field(FieldSymbol),
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Coord(c) => f.write_str(c.coord_name()),
            Atom::Field(s) => write!(f, "{}", s),
        }
    }
}

/// Commutative monomial in atoms.
pub type DiffMonomial = BTreeMap<Atom, u32>;

/// Polynomial over a complex scalar field in field symbols and the four
/// light-cone coordinates, with a formal derivation in each direction.
#[derive(Clone, PartialEq, Debug)]
pub struct DiffRingElem<C> {
    terms: BTreeMap<DiffMonomial, C>,
}

impl<C: ComplexScalar> DiffRingElem<C> {
    pub fn zero() -> Self {
        DiffRingElem { terms: BTreeMap::new() }
    }

    pub fn constant(c: C) -> Self {
        let mut out = Self::zero();
        out.add_term(DiffMonomial::new(), c);
        out
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn atom(a: Atom) -> Self {
        let mut m = DiffMonomial::new();
        m.insert(a, 1);
        let mut out = Self::zero();
        out.add_term(m, C::one());
        out
    }

    pub fn coord(c: LightCone) -> Self {
        Self::atom(Atom::Coord(c))
    }

    pub fn field(name: FieldName) -> Self {
        Self::atom(Atom::Field(FieldSymbol::new(name)))
    }

    pub fn symbol(s: FieldSymbol) -> Self {
        Self::atom(Atom::Field(s))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DiffMonomial, &C)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: DiffMonomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                let sum = slot.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *slot = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-C::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &C) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.clone() * k.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let mut m = ma.clone();
                for (a, e) in mb {
                    *m.entry(a.clone()).or_insert(0) += e;
                }
                out.add_term(m, ca.clone() * cb.clone());
            }
        }
        out
    }

    /// Total degree of the highest term (atoms counted with multiplicity).
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.values().sum::<u32>()).max().unwrap_or(0)
    }

    /// Formal partial derivative: Leibniz on products, derivative index
    /// raised on field symbols, ordinary derivative on coordinates.
    pub fn partial(&self, d: LightCone) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            for (atom, &e) in m {
                let mut rest = m.clone();
                if e == 1 {
                    rest.remove(atom);
                } else {
                    rest.insert(atom.clone(), e - 1);
                }
                let factor = C::from_i64(e as i64) * c.clone();
                match atom {
                    Atom::Coord(x) if *x == d => out.add_term(rest, factor),
                    Atom::Coord(_) => {}
                    Atom::Field(s) => {
                        *rest.entry(Atom::Field(s.differentiated(d))).or_insert(0) += 1;
                        out.add_term(rest, factor);
                    }
                }
            }
        }
        out
    }

    /// Replace every atom by `f(atom)` (or keep it when `f` returns `None`)
    /// and re-expand.
    pub fn substitute(&self, f: &impl Fn(&Atom) -> Option<DiffRingElem<C>>) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut prod = Self::constant(c.clone());
            for (atom, &e) in m {
                let base = f(atom).unwrap_or_else(|| Self::atom(atom.clone()));
                for _ in 0..e {
                    prod = prod.mul(&base);
                }
            }
            out = out.add(&prod);
        }
        out
    }

    /// Conjugation `v <-> vb`, `i -> -i`, `F+ <-> F-`.
    pub fn conj_swap(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let image: DiffMonomial = m
                .iter()
                .map(|(a, e)| {
                    let a = match a {
                        Atom::Coord(x) => Atom::Coord(x.swap()),
                        Atom::Field(s) => {
                            let mut d = s.deriv;
                            d.swap(LightCone::V.index(), LightCone::Vb.index());
                            Atom::Field(FieldSymbol {
                                name: s.name.swap(),
                                deriv: d,
                            })
                        }
                    };
                    (a, *e)
                })
                .collect();
            out.add_term(image, c.conj());
        }
        out
    }
}

impl<C: ComplexScalar> fmt::Display for DiffRingElem<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            let body: Vec<String> = m
                .iter()
                .map(|(a, e)| if *e == 1 { a.to_string() } else { format!("{}^{}", a, e) })
                .collect();
            match (body.is_empty(), c.is_one()) {
                (true, _) => write!(f, "{}", ScalarDisplay(c))?,
                (false, true) => write!(f, "{}", body.join("*"))?,
                (false, false) => write!(f, "{}*{}", ScalarDisplay(c), body.join("*"))?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex;
    use num_rational::BigRational;

    type D = DiffRingElem<Complex<BigRational>>;

    fn f1() -> D {
        D::field(FieldName::FPlus(1))
    }

    #[test]
    fn partial_of_field_raises_index() {
        let d = f1().partial(LightCone::Plus);
        let mut s = FieldSymbol::new(FieldName::FPlus(1));
        s.deriv = [1, 0, 0, 0];
        assert_eq!(d, D::symbol(s));
    }

    #[test]
    fn partial_of_coordinate() {
        assert_eq!(D::coord(LightCone::Minus).partial(LightCone::Minus), D::one());
        assert!(D::coord(LightCone::Minus).partial(LightCone::Plus).is_zero());
    }

    #[test]
    fn leibniz() {
        let p = f1().mul(&D::coord(LightCone::Plus));
        let expect = f1().partial(LightCone::Plus).mul(&D::coord(LightCone::Plus)).add(&f1());
        assert_eq!(p.partial(LightCone::Plus), expect);
    }

    #[test]
    fn derivatives_commute() {
        let x = f1().mul(&D::coord(LightCone::V)).mul(&D::coord(LightCone::Plus));
        assert_eq!(
            x.partial(LightCone::Plus).partial(LightCone::V),
            x.partial(LightCone::V).partial(LightCone::Plus)
        );
    }

    #[test]
    fn conj_swap_is_involutive() {
        let x = f1()
            .partial(LightCone::V)
            .mul(&D::coord(LightCone::Vb))
            .scale(&Complex::new(
                BigRational::from_integer(2.into()),
                BigRational::from_integer(3.into()),
            ));
        assert_ne!(x.conj_swap(), x);
        assert_eq!(x.conj_swap().conj_swap(), x);
    }
}
