use std::collections::BTreeMap;
use std::fmt;

use super::{Generator, NCPoly, NormalMonomial, WordPoly};
use crate::coeff::{lambda, LaurentPoly, Param, ParamSubstitution};
use crate::scalar::Scalar;

/// One oriented relation `high * low -> replacement`, with
/// `rank(high) > rank(low)` and an already ordered replacement.
#[derive(Clone, PartialEq, Debug)]
pub struct RewriteRule<S> {
    pub high: Generator,
    pub low: Generator,
    pub replacement: NCPoly<S>,
}

impl<S: Scalar> RewriteRule<S> {
    /// `high*low = swap * low*high + sum of extra terms`.
    pub fn new(
        high: Generator,
        low: Generator,
        swap: LaurentPoly<S>,
        extra: &[(LaurentPoly<S>, NormalMonomial)],
    ) -> Self {
        rule(high, low, swap, extra)
    }

    pub fn pattern(&self) -> [Generator; 2] {
        [self.high, self.low]
    }

    /// The ordered monomial `low * high`.
    pub fn swapped(&self) -> NormalMonomial {
        let mut e = [0; 6];
        e[self.low.rank()] += 1;
        e[self.high.rank()] += 1;
        NormalMonomial(e)
    }

    /// Coefficient of `low * high` in the replacement.
    pub fn swap_coefficient(&self) -> LaurentPoly<S> {
        self.replacement.coeff(&self.swapped())
    }

    /// Replacement minus its swap term.
    pub fn extra(&self) -> NCPoly<S> {
        let mut out = self.replacement.clone();
        out.add_term(self.swapped(), -self.swap_coefficient());
        out
    }

    /// `high*low - replacement` in the free algebra; zero in the quotient.
    pub fn residual(&self) -> WordPoly<S> {
        WordPoly::word(LaurentPoly::one(), self.pattern().to_vec()).sub(&self.replacement.to_words())
    }

    pub fn specialize(&self, s: &ParamSubstitution<S>) -> Self {
        RewriteRule {
            high: self.high,
            low: self.low,
            replacement: self.replacement.specialize(s),
        }
    }
}

impl<S: Scalar> fmt::Display for RewriteRule<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*{} = {}", self.high, self.low, self.replacement)
    }
}

/// The set of fifteen oriented relations, one per unordered generator pair.
#[derive(Clone, PartialEq, Debug)]
pub struct RuleTable<S> {
    rules: BTreeMap<(Generator, Generator), RewriteRule<S>>,
}

impl<S: Scalar> RuleTable<S> {
    pub fn from_rules(rules: impl IntoIterator<Item = RewriteRule<S>>) -> Self {
        RuleTable {
            rules: rules.into_iter().map(|r| ((r.high, r.low), r)).collect(),
        }
    }

    pub fn get(&self, high: Generator, low: Generator) -> Option<&RewriteRule<S>> {
        self.rules.get(&(high, low))
    }

    /// Rules ordered by (rank of high, rank of low).
    pub fn iter(&self) -> impl Iterator<Item = &RewriteRule<S>> {
        self.rules.values()
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn specialize(&self, s: &ParamSubstitution<S>) -> Self {
        Self::from_rules(self.iter().map(|r| r.specialize(s)))
    }

    /// Copy with the swap coefficient of one rule multiplied by `factor`.
    /// Used to check that the verification suites notice a corrupted table.
    pub fn with_scaled_swap(&self, high: Generator, low: Generator, factor: &LaurentPoly<S>) -> Self {
        let mut out = self.clone();
        if let Some(rule) = out.rules.get_mut(&(high, low)) {
            let m = rule.swapped();
            let c = rule.swap_coefficient();
            rule.replacement.add_term(m, &c * &(factor - &LaurentPoly::one()));
        }
        out
    }

    /// Each rule on its own line, in table order.
    pub fn to_text(&self) -> String {
        self.iter().map(|r| format!("{}\n", r)).collect()
    }
}

fn mono<S: Scalar>(pairs: &[(Param, i32)]) -> LaurentPoly<S> {
    LaurentPoly::mono(pairs)
}

fn pair(a: Generator, b: Generator) -> NormalMonomial {
    let mut e = [0; 6];
    e[a.rank()] += 1;
    e[b.rank()] += 1;
    NormalMonomial(e)
}

fn rule<S: Scalar>(
    high: Generator,
    low: Generator,
    swap: LaurentPoly<S>,
    extra: &[(LaurentPoly<S>, NormalMonomial)],
) -> RewriteRule<S> {
    let mut replacement = NCPoly::term(swap, pair(low, high));
    for (c, m) in extra {
        replacement.add_term(*m, c.clone());
    }
    RewriteRule { high, low, replacement }
}

/// The fifteen seven-parameter relations of the quantum flag manifold,
/// oriented toward `z < v < xm < xp < vb < zb`.
///
/// The `xp*xm` relation is stated implicitly,
/// `(q q24/(q23 q34)) xp xm = (q12 q24/(q q14)) xm xp + λ v vb`,
/// and is solved for `xp*xm` here.
pub fn relation_table<S: Scalar>() -> RuleTable<S> {
    use Generator::*;
    use Param::*;
    let lam = lambda::<S>();
    let single = |g: Generator| NormalMonomial::generator(g);

    // solved xp*xm: multiply through by q23 q34/(q q24)
    let solve = mono::<S>(&[(Q23, 1), (Q34, 1), (Q, -1), (Q24, -1)]);
    let xpxm_swap = &solve * &mono(&[(Q12, 1), (Q24, 1), (Q, -1), (Q14, -1)]);
    let xpxm_extra = &solve * &lam;

    RuleTable::from_rules([
        // space-time relations
        rule(Xp, V, mono(&[(Q23, 1), (Q34, 1), (Q24, -1)]), &[]),
        rule(Vb, Xp, mono(&[(Q14, 1), (Q12, -1), (Q24, -1)]), &[]),
        rule(Xm, V, mono(&[(Q13, 1), (Q12, -1), (Q23, -1)]), &[]),
        rule(Vb, Xm, mono(&[(Q13, 1), (Q34, 1), (Q14, -1)]), &[]),
        rule(Vb, V, mono(&[(Q13, 1), (Q34, 1), (Q12, -1), (Q24, -1)]), &[]),
        rule(Xp, Xm, xpxm_swap, &[(xpxm_extra, pair(V, Vb))]),
        // relations involving the spin variables
        rule(Zb, Z, mono(&[(Q13, 1), (Q24, 1), (Q14, -1), (Q23, -1)]), &[]),
        rule(Zb, Xp, mono(&[(Q13, 1), (Q34, 1), (Q14, -1)]), &[]),
        rule(
            Zb,
            Xm,
            mono(&[(Q23, 1), (Q34, 1), (Q, -2), (Q24, -1)]),
            &[(lam.clone(), single(Vb))],
        ),
        rule(Zb, Vb, mono(&[(Q23, 1), (Q34, 1), (Q24, -1)]), &[]),
        rule(
            Zb,
            V,
            mono(&[(Q13, 1), (Q34, 1), (Q, -2), (Q14, -1)]),
            &[(lam.clone(), single(Xp))],
        ),
        rule(Xp, Z, mono(&[(Q14, 1), (Q12, -1), (Q24, -1)]), &[]),
        rule(
            Xm,
            Z,
            mono(&[(Q, 2), (Q13, 1), (Q12, -1), (Q23, -1)]),
            &[(-&lam, single(V))],
        ),
        rule(V, Z, mono(&[(Q13, 1), (Q12, -1), (Q23, -1)]), &[]),
        rule(
            Vb,
            Z,
            mono(&[(Q, 2), (Q14, 1), (Q12, -1), (Q24, -1)]),
            &[(-&lam, single(Xp))],
        ),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use Generator::*;
    use Param::*;

    type L = LaurentPoly<BigRational>;

    #[test]
    fn fifteen_rules_one_per_pair() {
        let t = relation_table::<BigRational>();
        assert_eq!(t.len(), 15);
        for r in t.iter() {
            assert!(r.high.rank() > r.low.rank());
            assert!(r.replacement.len() <= 2);
        }
        for (i, a) in Generator::ALL.iter().enumerate() {
            for b in &Generator::ALL[i + 1..] {
                assert!(t.get(*b, *a).is_some());
            }
        }
    }

    #[test]
    fn zb_z_has_no_extra_term() {
        let t = relation_table::<BigRational>();
        let r = t.get(Zb, Z).unwrap();
        assert_eq!(
            r.swap_coefficient(),
            L::mono(&[(Q13, 1), (Q24, 1), (Q14, -1), (Q23, -1)])
        );
        assert!(r.extra().is_zero());
    }

    #[test]
    fn zb_v_extra_is_lambda_xp() {
        let t = relation_table::<BigRational>();
        let r = t.get(Zb, V).unwrap();
        assert_eq!(r.swap_coefficient(), L::mono(&[(Q13, 1), (Q34, 1), (Q, -2), (Q14, -1)]));
        assert_eq!(r.extra(), NCPoly::term(lambda(), NormalMonomial::generator(Xp)));
    }

    #[test]
    fn scaled_swap_only_touches_one_rule() {
        let t = relation_table::<BigRational>();
        let bad = t.with_scaled_swap(Zb, Z, &L::from_i64(2));
        let diff: Vec<_> = t.iter().zip(bad.iter()).filter(|(a, b)| a != b).collect();
        assert_eq!(diff.len(), 1);
        assert_eq!(
            bad.get(Zb, Z).unwrap().swap_coefficient(),
            t.get(Zb, Z)
                .unwrap()
                .swap_coefficient()
                .scale(&BigRational::from_integer(2.into()))
        );
    }
}
