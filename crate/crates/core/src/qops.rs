//! Linear operators on the PBW basis built from q-derivatives and
//! generator multiplication, and the deformed hierarchy operators.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classical::{DiffRingElem, LightCone, Sign, SpinPoly};
use crate::coeff::{q_int, LaurentPoly, ParamExponent};
use crate::flag::{FlagAlgebra, Generator, NCPoly, NormalMonomial};
use crate::parse::{parse_laurent, ParseError};
use crate::repr::{signature_for_level, Kind, Signature};
use crate::scalar::Scalar;

/// A linear operator on `NCPoly`, defined on normal monomials and extended
/// linearly.
#[derive(Debug, Clone, PartialEq)]
pub enum LinearOperator<S> {
    Zero,
    Identity,
    /// Lowers the exponent `k` of `slot` by one with coefficient
    /// `[k]_q * prod_t weights[t]^(e_t)` over the slots `t` left of `slot`.
    QDeriv {
        slot: Generator,
        weights: BTreeMap<Generator, ParamExponent>,
    },
    MultLeft(Generator),
    MultRight(Generator),
    Scale(LaurentPoly<S>, Box<LinearOperator<S>>),
    Sum(Vec<LinearOperator<S>>),
    /// `Compose(a, b)(p) = a(b(p))`.
    Compose(Box<LinearOperator<S>>, Box<LinearOperator<S>>),
}

#[derive(Debug, Error, PartialEq)]
pub enum OperatorError {
    #[error("weight on slot `{weight}` is not left of the derivative slot `{slot}`")]
    WeightNotLeft { slot: &'static str, weight: &'static str },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("weight `{0}` is not a parameter monomial")]
    BadWeight(String),
    #[error("operator `{0}` not present in description")]
    MissingOperator(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Plain q-derivative in `slot`, trivial weights.
pub fn q_deriv<S: Scalar>(slot: Generator) -> LinearOperator<S> {
    LinearOperator::QDeriv {
        slot,
        weights: BTreeMap::new(),
    }
}

/// q-derivative with a parameter-monomial weight per slot left of `slot`.
pub fn q_deriv_weighted<S: Scalar>(
    slot: Generator,
    weights: BTreeMap<Generator, ParamExponent>,
) -> Result<LinearOperator<S>, OperatorError> {
    if let Some(bad) = weights.keys().find(|g| g.rank() >= slot.rank()) {
        return Err(OperatorError::WeightNotLeft {
            slot: slot.name(),
            weight: bad.name(),
        });
    }
    Ok(LinearOperator::QDeriv { slot, weights })
}

pub fn mult_op<S: Scalar>(g: Generator) -> LinearOperator<S> {
    LinearOperator::MultLeft(g)
}

pub fn mult_right<S: Scalar>(g: Generator) -> LinearOperator<S> {
    LinearOperator::MultRight(g)
}

pub fn compose<S: Scalar>(a: LinearOperator<S>, b: LinearOperator<S>) -> LinearOperator<S> {
    LinearOperator::Compose(Box::new(a), Box::new(b))
}

pub fn add<S: Scalar>(a: LinearOperator<S>, b: LinearOperator<S>) -> LinearOperator<S> {
    LinearOperator::Sum(vec![a, b])
}

pub fn scale<S: Scalar>(c: LaurentPoly<S>, a: LinearOperator<S>) -> LinearOperator<S> {
    LinearOperator::Scale(c, Box::new(a))
}

impl<S: Scalar> LinearOperator<S> {
    pub fn apply(&self, alg: &FlagAlgebra<S>, p: &NCPoly<S>) -> NCPoly<S> {
        match self {
            LinearOperator::Zero => NCPoly::zero(),
            LinearOperator::Identity => p.clone(),
            LinearOperator::QDeriv { slot, weights } => {
                let mut out = NCPoly::zero();
                for (m, c) in p.terms() {
                    if let Some((k, m2)) = q_deriv_monomial(*slot, weights, m) {
                        out.add_scaled(&NCPoly::monomial(m2), &(c * &k));
                    }
                }
                out
            }
            LinearOperator::MultLeft(g) => alg.left_mul(*g, p),
            LinearOperator::MultRight(g) => alg.right_mul(p, *g),
            LinearOperator::Scale(c, a) => a.apply(alg, p).scale(c),
            LinearOperator::Sum(parts) => {
                let mut out = NCPoly::zero();
                for a in parts {
                    out = &out + &a.apply(alg, p);
                }
                out
            }
            LinearOperator::Compose(a, b) => a.apply(alg, &b.apply(alg, p)),
        }
    }

    /// Same operator with every weight and scalar specialized.
    pub fn map_coeffs(&self, f: &impl Fn(&LaurentPoly<S>) -> LaurentPoly<S>) -> Self {
        match self {
            LinearOperator::Scale(c, a) => LinearOperator::Scale(f(c), Box::new(a.map_coeffs(f))),
            LinearOperator::Sum(parts) => LinearOperator::Sum(parts.iter().map(|a| a.map_coeffs(f)).collect()),
            LinearOperator::Compose(a, b) => compose(a.map_coeffs(f), b.map_coeffs(f)),
            other => other.clone(),
        }
    }
}

fn q_deriv_monomial<S: Scalar>(
    slot: Generator,
    weights: &BTreeMap<Generator, ParamExponent>,
    m: &NormalMonomial,
) -> Option<(LaurentPoly<S>, NormalMonomial)> {
    let k = m.exp(slot);
    if k == 0 {
        return None;
    }
    let mut shift = ParamExponent::ONE;
    for (g, w) in weights {
        shift = shift.mul(&w.scale(m.exp(*g) as i32));
    }
    let coeff = q_int::<S>(k as i64).expect("positive exponent").shift(&shift);
    let mut e = m.0;
    e[slot.rank()] -= 1;
    Some((coeff, NormalMonomial(e)))
}

fn half<S: Scalar>() -> LaurentPoly<S> {
    LaurentPoly::constant(S::from_ratio(&BigInt::from(1), &BigInt::from(2)).expect("nonzero"))
}

/// `1/2 ([n+2]_q I_a I_2 - [n+3]_q I_2 I_a)` with `I_a = I1` for `+` and
/// `I_a = I3` for `-`.
pub fn hat_i_pm_n<S: Scalar>(
    sign: Sign,
    n: u32,
    i1: &LinearOperator<S>,
    i2: &LinearOperator<S>,
    i3: &LinearOperator<S>,
) -> LinearOperator<S> {
    let ia = match sign {
        Sign::Plus => i1,
        Sign::Minus => i3,
    };
    let a = q_int::<S>(n as i64 + 2).expect("positive");
    let b = q_int::<S>(n as i64 + 3).expect("positive");
    scale(
        half(),
        add(
            scale(a, compose(ia.clone(), i2.clone())),
            scale(-b, compose(i2.clone(), ia.clone())),
        ),
    )
}

/// Which side of the equation broke its spin-degree bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DegreeSide {
    Input,
    Output,
}

#[derive(Debug, Error, PartialEq)]
#[error("{side:?} monomial {monomial} exceeds signature {sig}")]
pub struct DegreeError {
    pub side: DegreeSide,
    pub sig: Signature,
    pub monomial: String,
}

fn check_bounds<S: Scalar>(p: &NCPoly<S>, sig: &Signature, side: DegreeSide) -> Result<(), DegreeError> {
    match p.terms().find(|(m, _)| !sig.admits(m)) {
        Some((m, _)) => Err(DegreeError {
            side,
            sig: sig.clone(),
            monomial: m.to_string(),
        }),
        None => Ok(()),
    }
}

/// Apply the level-`n` hierarchy operator to `f`, checking `f` against
/// `chi±_n` and the result against `chi0_n`.
pub fn quantum_hierarchy_apply<S: Scalar>(
    alg: &FlagAlgebra<S>,
    sign: Sign,
    n: u32,
    ops: &OperatorTriple<S>,
    f: &NCPoly<S>,
) -> Result<NCPoly<S>, DegreeError> {
    check_bounds(f, &signature_for_level(n, Kind::from(sign)), DegreeSide::Input)?;
    let out = ops.hat(sign, n).apply(alg, f);
    check_bounds(&out, &signature_for_level(n, Kind::Zero), DegreeSide::Output)?;
    Ok(out)
}

/// The three building blocks `I1, I2, I3`.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorTriple<S> {
    pub i1: LinearOperator<S>,
    pub i2: LinearOperator<S>,
    pub i3: LinearOperator<S>,
}

impl<S: Scalar> OperatorTriple<S> {
    pub fn hat(&self, sign: Sign, n: u32) -> LinearOperator<S> {
        hat_i_pm_n(sign, n, &self.i1, &self.i2, &self.i3)
    }

    pub fn get(&self, name: &str) -> Option<&LinearOperator<S>> {
        match name {
            "I1" => Some(&self.i1),
            "I2" => Some(&self.i2),
            "I3" => Some(&self.i3),
            _ => None,
        }
    }

    /// `I1 = D_z`, `I3 = D_zb`,
    /// `I2 = z (D_xp) zb + z D_v + (D_vb) zb + D_xm` with `zb` multiplied
    /// from the right.
    pub fn classical_limit() -> Self {
        Self::classical_with(mult_right(Generator::Zb))
    }

    /// As [`Self::classical_limit`] but multiplying `zb` from the left.
    pub fn classical_limit_left() -> Self {
        Self::classical_with(mult_op(Generator::Zb))
    }

    fn classical_with(zb: LinearOperator<S>) -> Self {
        let z = || mult_op(Generator::Z);
        let i2 = LinearOperator::Sum(vec![
            compose(z(), compose(zb.clone(), q_deriv(Generator::Xp))),
            compose(z(), q_deriv(Generator::V)),
            compose(zb, q_deriv(Generator::Vb)),
            q_deriv(Generator::Xm),
        ]);
        OperatorTriple {
            i1: q_deriv(Generator::Z),
            i2,
            i3: q_deriv(Generator::Zb),
        }
    }
}

/// One primitive of an operator description.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PrimitiveDesc {
    Identity,
    QDeriv {
        slot: String,
        #[serde(default)]
        weights: BTreeMap<String, String>,
    },
    Mult {
        generator: String,
    },
    MultRight {
        generator: String,
    },
}

/// `scalar * (chain[0] ∘ chain[1] ∘ ...)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermDesc {
    #[serde(default = "one_text")]
    pub scalar: String,
    pub chain: Vec<PrimitiveDesc>,
}

fn one_text() -> String {
    "1".into()
}

/// Named operators, each a sum of terms.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OperatorFile {
    pub operators: BTreeMap<String, Vec<TermDesc>>,
}

fn generator(name: &str) -> Result<Generator, OperatorError> {
    Generator::from_name(name).ok_or_else(|| OperatorError::UnknownGenerator(name.into()))
}

impl PrimitiveDesc {
    pub fn build<S: Scalar>(&self) -> Result<LinearOperator<S>, OperatorError> {
        match self {
            PrimitiveDesc::Identity => Ok(LinearOperator::Identity),
            PrimitiveDesc::Mult { generator: g } => Ok(mult_op(generator(g)?)),
            PrimitiveDesc::MultRight { generator: g } => Ok(mult_right(generator(g)?)),
            PrimitiveDesc::QDeriv { slot, weights } => {
                let mut w = BTreeMap::new();
                for (g, text) in weights {
                    let (c, e) = parse_laurent::<S>(text)?
                        .as_unit()
                        .ok_or_else(|| OperatorError::BadWeight(text.clone()))?;
                    if !c.is_one() {
                        return Err(OperatorError::BadWeight(text.clone()));
                    }
                    w.insert(generator(g)?, e);
                }
                q_deriv_weighted(generator(slot)?, w)
            }
        }
    }
}

impl OperatorFile {
    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn build<S: Scalar>(&self, name: &str) -> Result<LinearOperator<S>, OperatorError> {
        let terms = self
            .operators
            .get(name)
            .ok_or_else(|| OperatorError::MissingOperator(name.into()))?;
        let mut parts = Vec::new();
        for t in terms {
            let mut op = LinearOperator::Identity;
            for p in t.chain.iter().rev() {
                op = compose(p.build()?, op);
            }
            parts.push(scale(parse_laurent(&t.scalar)?, op));
        }
        Ok(LinearOperator::Sum(parts))
    }

    pub fn triple<S: Scalar>(&self) -> Result<OperatorTriple<S>, OperatorError> {
        Ok(OperatorTriple {
            i1: self.build("I1")?,
            i2: self.build("I2")?,
            i3: self.build("I3")?,
        })
    }
}

/// Commutative image at `q = 1`: `z^i v^j xm^k xp^l vb^m zb^n` maps to
/// `v^j xm^k xp^l vb^m` as the coefficient of `z^i zb^n`.
pub fn classical_image(p: &NCPoly<BigRational>) -> SpinPoly<Complex<BigRational>> {
    let coords = [
        (Generator::V, LightCone::V),
        (Generator::Xm, LightCone::Minus),
        (Generator::Xp, LightCone::Plus),
        (Generator::Vb, LightCone::Vb),
    ];
    let mut out = SpinPoly::zero();
    for (m, c) in p.eval_at_one() {
        let mut coeff = DiffRingElem::constant(Complex::new(c, BigRational::from_integer(0.into())));
        for (g, d) in coords {
            for _ in 0..m.exp(g) {
                coeff = coeff.mul(&DiffRingElem::coord(d));
            }
        }
        out.add_term(m.exp(Generator::Z), m.exp(Generator::Zb), coeff);
    }
    out
}

/// Every normal monomial of total degree `<= d`.
pub fn monomials_up_to(d: u32) -> Vec<NormalMonomial> {
    let mut out = vec![NormalMonomial::ONE];
    let mut frontier = vec![NormalMonomial::ONE];
    for _ in 0..d {
        let mut next = Vec::new();
        for m in &frontier {
            let last = (0..6).rev().find(|&k| m.0[k] > 0).unwrap_or(0);
            for k in last..6 {
                let mut e = m.0;
                e[k] += 1;
                next.push(NormalMonomial(e));
            }
        }
        out.extend(next.iter().copied());
        frontier = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::{op_i, op_i_pm_n_factored};
    use crate::coeff::{lambda, Param, Preset};
    use proptest::prelude::*;

    type R = BigRational;
    type L = LaurentPoly<R>;
    type P = NCPoly<R>;

    fn alg() -> FlagAlgebra<R> {
        FlagAlgebra::generic()
    }

    fn mono(e: [u32; 6]) -> P {
        P::monomial(NormalMonomial(e))
    }

    fn q() -> L {
        L::param(Param::Q)
    }

    #[test]
    fn q_deriv_z_squared() {
        let out = q_deriv::<R>(Generator::Z).apply(&alg(), &mono([2, 0, 0, 0, 0, 0]));
        let qq = &q() + &q().inverse().unwrap();
        assert_eq!(out, mono([1, 0, 0, 0, 0, 0]).scale(&qq));
    }

    #[test]
    fn q_deriv_difference_quotient_oracle() {
        let d = q_deriv::<R>(Generator::Z);
        for k in 1..7 {
            let out = d.apply(&alg(), &mono([k, 0, 0, 0, 0, 0])).scale(&lambda());
            let oracle = &q().pow(k as i32).unwrap() - &q().pow(-(k as i32)).unwrap();
            assert_eq!(out, mono([k - 1, 0, 0, 0, 0, 0]).scale(&oracle));
        }
    }

    #[test]
    fn q_deriv_annihilates() {
        let d = q_deriv::<R>(Generator::Z);
        assert!(d.apply(&alg(), &P::one()).is_zero());
        assert!(d.apply(&alg(), &P::generator(Generator::V)).is_zero());
    }

    #[test]
    fn q_deriv_weights() {
        let mut w = BTreeMap::new();
        w.insert(Generator::Z, ParamExponent::of(Param::Q12, 1));
        let d = q_deriv_weighted::<R>(Generator::V, w).unwrap();
        let out = d.apply(&alg(), &mono([2, 1, 0, 0, 0, 0]));
        assert_eq!(out, mono([2, 0, 0, 0, 0, 0]).scale(&L::mono(&[(Param::Q12, 2)])));
    }

    #[test]
    fn weight_right_of_slot_is_rejected() {
        let mut w = BTreeMap::new();
        w.insert(Generator::Zb, ParamExponent::ONE);
        assert!(q_deriv_weighted::<R>(Generator::V, w).is_err());
    }

    #[test]
    fn mult_examples() {
        let a = alg();
        let out = mult_op::<R>(Generator::Zb).apply(&a, &P::generator(Generator::Z));
        let c = L::mono(&[(Param::Q13, 1), (Param::Q24, 1), (Param::Q14, -1), (Param::Q23, -1)]);
        assert_eq!(out, mono([1, 0, 0, 0, 0, 1]).scale(&c));
        assert_eq!(
            mult_op::<R>(Generator::Z).apply(&a, &P::one()),
            P::generator(Generator::Z)
        );
        let vx = compose(mult_op::<R>(Generator::V), mult_op(Generator::Xp)).apply(&a, &P::one());
        assert_eq!(vx, mono([0, 1, 0, 1, 0, 0]));
    }

    #[test]
    fn scale_zero_is_zero() {
        let op = scale(L::zero(), q_deriv::<R>(Generator::Z));
        assert!(op.apply(&alg(), &mono([3, 1, 0, 0, 0, 2])).is_zero());
    }

    #[test]
    fn identity_scalar_hat() {
        let id = LinearOperator::<R>::Identity;
        let h = hat_i_pm_n(Sign::Plus, 0, &id, &id, &id);
        let k = q_int::<R>(2).unwrap() - q_int::<R>(3).unwrap();
        let expect = mono([1, 0, 0, 0, 0, 0]).scale(&(&half::<R>() * &k));
        assert_eq!(h.apply(&alg(), &mono([1, 0, 0, 0, 0, 0])), expect);
    }

    #[test]
    fn hierarchy_example() {
        let a = alg();
        let t = OperatorTriple::<R>::classical_limit();
        let out = quantum_hierarchy_apply(&a, Sign::Plus, 0, &t, &mono([1, 0, 1, 0, 0, 0])).unwrap();
        let half = R::new((-1).into(), 2.into());
        assert_eq!(
            out.eval_at_one().into_iter().collect::<Vec<_>>(),
            vec![(NormalMonomial::ONE, half)]
        );
        assert!(quantum_hierarchy_apply(&a, Sign::Plus, 0, &t, &P::zero())
            .unwrap()
            .is_zero());
        let err = quantum_hierarchy_apply(&a, Sign::Plus, 0, &t, &mono([3, 0, 0, 0, 0, 0])).unwrap_err();
        assert_eq!(err.side, DegreeSide::Input);
    }

    #[test]
    fn classical_limit_matches_building_blocks() {
        let a = alg();
        for t in [
            OperatorTriple::<R>::classical_limit(),
            OperatorTriple::classical_limit_left(),
        ] {
            for m in monomials_up_to(4) {
                let p = P::monomial(m);
                let img = classical_image(&p);
                assert_eq!(classical_image(&t.i1.apply(&a, &p)), op_i(1, &img));
                assert_eq!(classical_image(&t.i2.apply(&a, &p)), op_i(2, &img), "{}", m);
                assert_eq!(classical_image(&t.i3.apply(&a, &p)), op_i(3, &img));
            }
        }
    }

    // left multiplication by zb reorders past z and breaks the output bound
    #[test]
    fn only_right_zb_keeps_output_degrees() {
        let a = alg();
        let (right, left) = (
            OperatorTriple::<R>::classical_limit(),
            OperatorTriple::classical_limit_left(),
        );
        let mut left_broke = false;
        for n in 0..3 {
            for m in monomials_up_to(n + 3) {
                let p = P::monomial(m);
                let r = quantum_hierarchy_apply(&a, Sign::Plus, n, &right, &p);
                assert!(!matches!(&r, Err(e) if e.side == DegreeSide::Output), "{} at {}", m, n);
                let l = quantum_hierarchy_apply(&a, Sign::Plus, n, &left, &p);
                left_broke |= matches!(&l, Err(e) if e.side == DegreeSide::Output);
            }
        }
        assert!(left_broke);
    }

    #[test]
    fn hat_reduces_to_classical() {
        let a = alg();
        let t = OperatorTriple::<R>::classical_limit();
        for n in [0, 3] {
            for s in Sign::ALL {
                let h = t.hat(s, n);
                for m in monomials_up_to(3) {
                    let p = P::monomial(m);
                    assert_eq!(
                        classical_image(&h.apply(&a, &p)),
                        op_i_pm_n_factored(s, n, &classical_image(&p))
                    );
                }
            }
        }
    }

    #[test]
    fn minus_is_plus_with_i1_i3_exchanged() {
        let a = alg().specialized(&Preset::Relq.substitution());
        let t = OperatorTriple::<R>::classical_limit();
        let swapped = OperatorTriple {
            i1: t.i3.clone(),
            i2: t.i2.clone(),
            i3: t.i1.clone(),
        };
        for m in monomials_up_to(3) {
            let p = P::monomial(m);
            assert_eq!(
                t.hat(Sign::Minus, 1).apply(&a, &p),
                swapped.hat(Sign::Plus, 1).apply(&a, &p)
            );
        }
    }

    #[test]
    fn description_round_trip() {
        let text = r#"{"operators": {
            "I1": [{"chain": [{"kind": "q_deriv", "slot": "z"}]}],
            "I2": [{"scalar": "q12", "chain": [{"kind": "mult", "generator": "z"},
                                                {"kind": "q_deriv", "slot": "v", "weights": {"z": "q13*q^-1"}}]}],
            "I3": [{"chain": [{"kind": "mult_right", "generator": "zb"}, {"kind": "identity"}]}]
        }}"#;
        let file = OperatorFile::from_json(text).unwrap();
        let t = file.triple::<R>().unwrap();
        let a = alg();
        let p = mono([1, 1, 0, 0, 0, 0]);
        let w = L::mono(&[(Param::Q13, 1), (Param::Q, -1)]);
        let expect = mono([2, 0, 0, 0, 0, 0]).scale(&(&L::param(Param::Q12) * &w));
        assert_eq!(t.i2.apply(&a, &p), expect);
        assert_eq!(t.i1.apply(&a, &p), mono([0, 1, 0, 0, 0, 0]));
        assert_eq!(t.i3.apply(&a, &p), mono([1, 1, 0, 0, 0, 1]));
        let back: OperatorFile = serde_json::from_str(&serde_json::to_string(&file).unwrap()).unwrap();
        assert_eq!(back, file);
    }

    #[test]
    fn description_errors() {
        let bad = r#"{"operators": {"I1": [{"chain": [{"kind": "q_deriv", "slot": "w"}]}]}}"#;
        let f = OperatorFile::from_json(bad).unwrap();
        assert_eq!(f.build::<R>("I1"), Err(OperatorError::UnknownGenerator("w".into())));
        assert_eq!(f.build::<R>("I2"), Err(OperatorError::MissingOperator("I2".into())));
    }

    #[test]
    fn monomial_enumeration() {
        // C(4 + 6, 6)
        assert_eq!(monomials_up_to(4).len(), 210);
    }

    fn arb_poly() -> impl Strategy<Value = P> {
        prop::collection::vec((prop::array::uniform6(0u32..3), -4i64..5, -2i32..3), 0..4).prop_map(|ts| {
            let mut p = P::zero();
            for (e, c, k) in ts {
                let coef = L::param_pow(Param::Q, k).scale(&R::from_integer(c.into()));
                p.add_term(NormalMonomial(e), coef);
            }
            p
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn operators_are_linear(a in arb_poly(), b in arb_poly(), k in -3i64..4) {
            let alg = alg().specialized(&Preset::Relq.substitution());
            let c = L::param(Param::Q12).scale(&R::from_integer(k.into()));
            let t = OperatorTriple::<R>::classical_limit();
            for op in [t.i1.clone(), t.i2.clone(), t.hat(Sign::Minus, 1)] {
                let lhs = op.apply(&alg, &(&a.scale(&c) + &b));
                let rhs = &op.apply(&alg, &a).scale(&c) + &op.apply(&alg, &b);
                prop_assert_eq!(lhs, rhs);
            }
        }

        #[test]
        fn compose_identity_and_sum(a in arb_poly()) {
            let alg = alg();
            let d = q_deriv::<R>(Generator::Xm);
            let m = mult_right::<R>(Generator::V);
            prop_assert_eq!(compose(LinearOperator::Identity, d.clone()).apply(&alg, &a), d.apply(&alg, &a));
            prop_assert_eq!(add(d.clone(), m.clone()).apply(&alg, &a), &d.apply(&alg, &a) + &m.apply(&alg, &a));
        }
    }
}
