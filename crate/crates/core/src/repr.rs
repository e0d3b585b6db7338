//! Signatures, degree-bounded representation-space elements and hierarchy
//! templates.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classical::Sign;
use crate::coeff::LaurentPoly;
use crate::flag::{FlagAlgebra, Generator, NCPoly, NormalMonomial};
use crate::parse::{parse_poly, ParseError};
use crate::scalar::Scalar;

/// Which member of a hierarchy triple: the two field strengths or the current.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kind {
    Plus,
    Minus,
    Zero,
}

impl From<Sign> for Kind {
    fn from(s: Sign) -> Kind {
        match s {
            Sign::Plus => Kind::Plus,
            Sign::Minus => Kind::Minus,
        }
    }
}

impl Kind {
    pub const ALL: [Kind; 3] = [Kind::Plus, Kind::Minus, Kind::Zero];

    pub fn from_symbol(s: &str) -> Option<Kind> {
        match s {
            "+" | "plus" => Some(Kind::Plus),
            "-" | "minus" => Some(Kind::Minus),
            "0" | "zero" => Some(Kind::Zero),
            _ => None,
        }
    }
}

/// `[n1, n2; d]`: polynomial degrees in `z` and `zb`, and the conformal
/// dimension carried as a label.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Signature {
    pub n1: u32,
    pub n2: u32,
    pub d: BigRational,
}

impl Signature {
    pub fn new(n1: u32, n2: u32, d: i64) -> Self {
        Signature {
            n1,
            n2,
            d: BigRational::from_integer(BigInt::from(d)),
        }
    }

    pub fn admits(&self, m: &NormalMonomial) -> bool {
        m.exp(Generator::Z) <= self.n1 && m.exp(Generator::Zb) <= self.n2
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{};{}]", self.n1, self.n2, self.d)
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum ReprError {
    #[error("malformed signature header `{0}`")]
    BadHeader(String),
    #[error("missing body line")]
    MissingBody,
    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl FromStr for Signature {
    type Err = ReprError;

    fn from_str(s: &str) -> Result<Self, ReprError> {
        let bad = || ReprError::BadHeader(s.to_string());
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(bad)?;
        let (degs, d) = inner.split_once(';').ok_or_else(bad)?;
        let (a, b) = degs.split_once(',').ok_or_else(bad)?;
        Ok(Signature {
            n1: a.trim().parse().map_err(|_| bad())?,
            n2: b.trim().parse().map_err(|_| bad())?,
            d: d.trim().parse().map_err(|_| bad())?,
        })
    }
}

/// `chi+_n = [n+2,n;2]`, `chi-_n = [n,n+2;2]`, `chi0_n = [n+1,n+1;3]`.
pub fn signature_for_level(n: u32, kind: Kind) -> Signature {
    match kind {
        Kind::Plus => Signature::new(n + 2, n, 2),
        Kind::Minus => Signature::new(n, n + 2, 2),
        Kind::Zero => Signature::new(n + 1, n + 1, 3),
    }
}

/// An element of the representation space with signature `sig`.
#[derive(Debug, Clone, PartialEq)]
pub struct CChiElement<S> {
    pub sig: Signature,
    pub body: NCPoly<S>,
}

impl<S: Scalar> CChiElement<S> {
    pub fn new(sig: Signature, body: NCPoly<S>) -> Self {
        CChiElement { sig, body }
    }

    /// Every monomial within the `(n1, n2)` spin-degree bounds.
    pub fn validate(&self) -> bool {
        self.body.terms().all(|(m, _)| self.sig.admits(m))
    }

    /// Signature header line followed by the body line.
    pub fn to_text(&self) -> String {
        format!("{}\n{}\n", self.sig, self.body)
    }

    pub fn from_text(alg: &FlagAlgebra<S>, text: &str) -> Result<Self, ReprError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let sig: Signature = lines.next().ok_or(ReprError::MissingBody)?.parse()?;
        let body = parse_poly(alg, lines.next().ok_or(ReprError::MissingBody)?)?;
        Ok(CChiElement { sig, body })
    }
}

/// A generic element with one placeholder coefficient `mu_k` per basis
/// monomial, truncated in Minkowski degree.
#[derive(Debug, Clone, PartialEq)]
pub struct HierarchyTemplate {
    pub sig: Signature,
    pub truncate_degree: u32,
    /// `(k, m)`: placeholder `mu_k` multiplies `m`.
    pub terms: Vec<(usize, NormalMonomial)>,
}

impl HierarchyTemplate {
    /// The instance with every placeholder set to 1.
    pub fn body<S: Scalar>(&self) -> NCPoly<S> {
        let mut out = NCPoly::zero();
        for (_, m) in &self.terms {
            out.add_term(*m, LaurentPoly::one());
        }
        out
    }

    pub fn element<S: Scalar>(&self) -> CChiElement<S> {
        CChiElement::new(self.sig.clone(), self.body())
    }

    /// Admissible `(z, zb)` degree pairs present in the template.
    pub fn spin_degrees(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = self
            .terms
            .iter()
            .map(|(_, m)| (m.exp(Generator::Z), m.exp(Generator::Zb)))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Minkowski exponent vectors `(v, xm, xp, vb)` of total degree `<= t`.
fn minkowski_exponents(t: u32) -> Vec<[u32; 4]> {
    let mut out = Vec::new();
    for a in 0..=t {
        for b in 0..=t - a {
            for c in 0..=t - a - b {
                for d in 0..=t - a - b - c {
                    out.push([a, b, c, d]);
                }
            }
        }
    }
    out
}

pub fn make_hierarchy_element(n: u32, kind: Kind, truncate_degree: u32) -> HierarchyTemplate {
    let sig = signature_for_level(n, kind);
    let mink = minkowski_exponents(truncate_degree);
    let mut terms = Vec::new();
    for i in 0..=sig.n1 {
        for j in 0..=sig.n2 {
            for e in &mink {
                let m = NormalMonomial([i, e[0], e[1], e[2], e[3], j]);
                terms.push((terms.len(), m));
            }
        }
    }
    HierarchyTemplate {
        sig,
        truncate_degree,
        terms,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Param;
    use num_rational::BigRational;

    type P = NCPoly<BigRational>;

    fn mono(e: [u32; 6]) -> P {
        P::monomial(NormalMonomial(e))
    }

    #[test]
    fn level_signatures() {
        assert_eq!(signature_for_level(0, Kind::Plus).to_string(), "[2,0;2]");
        assert_eq!(signature_for_level(0, Kind::Zero).to_string(), "[1,1;3]");
        assert_eq!(signature_for_level(3, Kind::Minus).to_string(), "[3,5;2]");
    }

    #[test]
    fn plus_and_minus_are_transposed() {
        for n in 0..=10 {
            let p = signature_for_level(n, Kind::Plus);
            let m = signature_for_level(n, Kind::Minus);
            assert_eq!((p.n1, p.n2), (m.n2, m.n1));
        }
    }

    #[test]
    fn validate_examples() {
        let sig = signature_for_level(0, Kind::Plus);
        assert!(CChiElement::new(sig.clone(), mono([2, 0, 0, 0, 0, 0])).validate());
        assert!(!CChiElement::new(sig, mono([3, 0, 0, 0, 0, 0])).validate());
        let j = signature_for_level(0, Kind::Zero);
        assert!(CChiElement::new(j, mono([1, 0, 1, 0, 0, 1])).validate());
    }

    #[test]
    fn template_degree_pairs() {
        let t = make_hierarchy_element(0, Kind::Plus, 1);
        assert_eq!(t.spin_degrees(), vec![(0, 0), (1, 0), (2, 0)]);
        let t = make_hierarchy_element(0, Kind::Zero, 1);
        assert_eq!(t.spin_degrees(), vec![(0, 0), (0, 1), (1, 0), (1, 1)]);
        // 3 spin pairs times 5 Minkowski monomials of degree <= 1
        assert_eq!(make_hierarchy_element(0, Kind::Plus, 1).terms.len(), 15);
    }

    #[test]
    fn truncation_zero_is_minkowski_constant() {
        let t = make_hierarchy_element(2, Kind::Minus, 0);
        assert!(t.terms.iter().all(|(_, m)| m.minkowski_degree() == 0));
    }

    #[test]
    fn templates_validate() {
        for n in 0..=10 {
            for k in Kind::ALL {
                assert!(make_hierarchy_element(n, k, 1).element::<BigRational>().validate());
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let alg = FlagAlgebra::<BigRational>::generic();
        let body = &mono([1, 0, 1, 0, 0, 1]).scale(&LaurentPoly::param(Param::Q13)) + &mono([0; 6]);
        let e = CChiElement::new(signature_for_level(0, Kind::Zero), body);
        let text = e.to_text();
        assert!(text.starts_with("[1,1;3]\n"));
        assert_eq!(CChiElement::from_text(&alg, &text).unwrap(), e);
    }

    #[test]
    fn bad_header() {
        assert!(matches!("[1,1]".parse::<Signature>(), Err(ReprError::BadHeader(_))));
    }
}
