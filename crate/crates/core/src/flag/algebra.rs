use std::collections::HashMap;
use std::sync::Mutex;

use rand::Rng;

use super::{relation_table, Generator, NCPoly, NormalMonomial, RewriteRule, RuleTable, Word, WordPoly};
use crate::coeff::ParamSubstitution;
use crate::scalar::Scalar;

/// Which adjacent inversion a rewrite step resolves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// Counters from an uncached rewrite.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RewriteStats {
    pub steps: u64,
    pub max_depth: u64,
}

/// The quotient of the free algebra on six generators by a [`RuleTable`].
///
/// Normal forms are memoized per word and strategy; the caches are behind
/// mutexes so a shared algebra can be used from several threads.
pub struct FlagAlgebra<S> {
    rules: RuleTable<S>,
    left_cache: Mutex<HashMap<Word, NCPoly<S>>>,
    right_cache: Mutex<HashMap<Word, NCPoly<S>>>,
}

impl<S: Scalar> Clone for FlagAlgebra<S> {
    fn clone(&self) -> Self {
        Self::new(self.rules.clone())
    }
}

impl<S: Scalar> std::fmt::Debug for FlagAlgebra<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FlagAlgebra").field("rules", &self.rules).finish()
    }
}

fn inversion(w: &[Generator], strategy: Strategy) -> Option<usize> {
    let mut it = (0..w.len().saturating_sub(1)).filter(|&i| w[i] > w[i + 1]);
    match strategy {
        Strategy::Leftmost => it.next(),
        Strategy::Rightmost => it.last(),
    }
}

fn splice(w: &[Generator], i: usize, middle: &[Generator]) -> Word {
    let mut out = Vec::with_capacity(w.len() + middle.len());
    out.extend_from_slice(&w[..i]);
    out.extend_from_slice(middle);
    out.extend_from_slice(&w[i + 2..]);
    out
}

impl<S: Scalar> FlagAlgebra<S> {
    pub fn new(rules: RuleTable<S>) -> Self {
        FlagAlgebra {
            rules,
            left_cache: Mutex::new(HashMap::new()),
            right_cache: Mutex::new(HashMap::new()),
        }
    }

    /// The algebra with generic seven-parameter relations.
    pub fn generic() -> Self {
        Self::new(relation_table())
    }

    pub fn rules(&self) -> &RuleTable<S> {
        &self.rules
    }

    /// Same algebra with the relation coefficients specialized.
    pub fn specialized(&self, s: &ParamSubstitution<S>) -> Self {
        Self::new(self.rules.specialize(s))
    }

    fn rule(&self, high: Generator, low: Generator) -> &RewriteRule<S> {
        self.rules
            .get(high, low)
            .expect("rule table covers every inverted pair")
    }

    /// Normal form of a word, default (leftmost inversion) strategy.
    pub fn normal_order(&self, w: &[Generator]) -> NCPoly<S> {
        self.normal_order_with(w, Strategy::Leftmost)
    }

    pub fn normal_order_with(&self, w: &[Generator], strategy: Strategy) -> NCPoly<S> {
        if let Some(m) = NormalMonomial::from_sorted_word(w) {
            return NCPoly::monomial(m);
        }
        let cache = match strategy {
            Strategy::Leftmost => &self.left_cache,
            Strategy::Rightmost => &self.right_cache,
        };
        if let Some(hit) = cache.lock().unwrap().get(w) {
            return hit.clone();
        }
        let i = inversion(w, strategy).expect("unsorted word has an inversion");
        let rule = self.rule(w[i], w[i + 1]);
        let mut out = NCPoly::zero();
        for (m, c) in rule.replacement.terms() {
            let next = splice(w, i, &m.word());
            out.add_scaled(&self.normal_order_with(&next, strategy), c);
        }
        cache.lock().unwrap().insert(w.to_vec(), out.clone());
        out
    }

    /// Uncached rewrite choosing a uniformly random inversion at every step.
    pub fn normal_order_random<R: Rng>(&self, w: &[Generator], rng: &mut R) -> NCPoly<S> {
        let inversions: Vec<usize> = (0..w.len().saturating_sub(1)).filter(|&i| w[i] > w[i + 1]).collect();
        if inversions.is_empty() {
            return NCPoly::monomial(NormalMonomial::from_sorted_word(w).unwrap());
        }
        let i = inversions[rng.gen_range(0..inversions.len())];
        let rule = self.rule(w[i], w[i + 1]);
        let mut out = NCPoly::zero();
        for (m, c) in rule.replacement.terms() {
            let next = splice(w, i, &m.word());
            out.add_scaled(&self.normal_order_random(&next, rng), c);
        }
        out
    }

    /// Uncached rewrite that also counts steps and the longest rewrite path.
    pub fn normal_order_traced(&self, w: &[Generator], strategy: Strategy) -> (NCPoly<S>, RewriteStats) {
        let mut stats = RewriteStats::default();
        let out = self.traced(w, strategy, 0, &mut stats);
        (out, stats)
    }

    fn traced(&self, w: &[Generator], strategy: Strategy, depth: u64, stats: &mut RewriteStats) -> NCPoly<S> {
        stats.max_depth = stats.max_depth.max(depth);
        let Some(i) = inversion(w, strategy) else {
            return NCPoly::monomial(NormalMonomial::from_sorted_word(w).unwrap());
        };
        stats.steps += 1;
        let rule = self.rule(w[i], w[i + 1]);
        let mut out = NCPoly::zero();
        for (m, c) in rule.replacement.terms() {
            let next = splice(w, i, &m.word());
            out.add_scaled(&self.traced(&next, strategy, depth + 1, stats), c);
        }
        out
    }

    /// Linear extension of [`normal_order`](Self::normal_order).
    pub fn normal_order_poly(&self, p: &WordPoly<S>) -> NCPoly<S> {
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            out.add_scaled(&self.normal_order(w), c);
        }
        out
    }

    /// Product in the quotient: concatenate, then normal order.
    pub fn multiply(&self, a: &NCPoly<S>, b: &NCPoly<S>) -> NCPoly<S> {
        let mut out = NCPoly::zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                let mut w = ma.word();
                w.extend(mb.word());
                out.add_scaled(&self.normal_order(&w), &(ca * cb));
            }
        }
        out
    }

    /// Left multiplication by a generator.
    pub fn left_mul(&self, g: Generator, p: &NCPoly<S>) -> NCPoly<S> {
        self.multiply(&NCPoly::generator(g), p)
    }

    /// Right multiplication by a generator.
    pub fn right_mul(&self, p: &NCPoly<S>, g: Generator) -> NCPoly<S> {
        self.multiply(p, &NCPoly::generator(g))
    }

    /// ω on the free algebra: reverse each word, map generators, conjugate
    /// coefficients. No reordering.
    pub fn omega_words(p: &WordPoly<S>) -> WordPoly<S> {
        let mut out = WordPoly::zero();
        for (w, c) in p.terms() {
            let image: Word = w.iter().rev().map(|g| g.omega()).collect();
            out.add_term(image, c.conj());
        }
        out
    }

    /// ω followed by normal ordering in this algebra.
    pub fn omega(&self, p: &NCPoly<S>) -> NCPoly<S> {
        self.normal_order_poly(&Self::omega_words(&p.to_words()))
    }

    /// Whether ω maps the relation `rule` into the ideal: normal order
    /// ω(lhs - rhs), specialize by `s`, test for zero.
    pub fn check_relation_preserved(&self, rule: &RewriteRule<S>, s: &ParamSubstitution<S>) -> bool {
        let image = self.normal_order_poly(&Self::omega_words(&rule.residual()));
        image.specialize(s).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{lambda, LaurentPoly, Param, Preset};
    use num_rational::BigRational;
    use Generator::*;
    use Param::*;

    type A = FlagAlgebra<BigRational>;
    type L = LaurentPoly<BigRational>;

    fn zbz() -> L {
        L::mono(&[(Q13, 1), (Q24, 1), (Q14, -1), (Q23, -1)])
    }

    #[test]
    fn already_normal_word_is_fixed() {
        let a = A::generic();
        assert_eq!(
            a.normal_order(&[Z, V]),
            NCPoly::monomial(NormalMonomial([1, 1, 0, 0, 0, 0]))
        );
        assert_eq!(a.normal_order(&[]), NCPoly::one());
    }

    #[test]
    fn zb_z_reorders_with_coefficient() {
        let a = A::generic();
        let expect = NCPoly::term(zbz(), NormalMonomial([1, 0, 0, 0, 0, 1]));
        assert_eq!(a.normal_order(&[Zb, Z]), expect);
        assert_eq!(a.multiply(&NCPoly::generator(Zb), &NCPoly::generator(Z)), expect);
        assert_eq!(
            a.multiply(&NCPoly::generator(Z), &NCPoly::generator(Zb)),
            NCPoly::monomial(NormalMonomial([1, 0, 0, 0, 0, 1]))
        );
    }

    #[test]
    fn normal_order_is_idempotent() {
        let a = A::generic();
        let p = a.normal_order(&[Zb, Xm, Z, V]);
        assert_eq!(a.normal_order_poly(&p.to_words()), p);
    }

    #[test]
    fn zb_xm_z_strategies_agree_under_relq() {
        let a = A::generic().specialized(&Preset::Relq.substitution());
        let w = [Zb, Xm, Z];
        assert_eq!(
            a.normal_order_with(&w, Strategy::Leftmost),
            a.normal_order_with(&w, Strategy::Rightmost)
        );
    }

    #[test]
    fn explicit_associativity_triple() {
        let a = A::generic();
        let g = |x| NCPoly::generator(x);
        let left = a.multiply(&a.multiply(&g(Zb), &g(Vb)), &g(Z));
        let right = a.multiply(&g(Zb), &a.multiply(&g(Vb), &g(Z)));
        assert_eq!(left, right);
    }

    #[test]
    fn omega_examples() {
        let a = A::generic();
        assert_eq!(a.omega(&NCPoly::generator(V)), NCPoly::generator(Vb));
        assert_eq!(a.omega(&NCPoly::generator(Xp)), NCPoly::generator(Xp));
        // ω(z zb) = ω(zb) ω(z) = z zb, so only the coefficient is conjugated
        let p = NCPoly::term(lambda(), NormalMonomial([1, 0, 0, 0, 0, 1]));
        let expect = NCPoly::term(-lambda::<BigRational>(), NormalMonomial([1, 0, 0, 0, 0, 1]));
        assert_eq!(a.omega(&p), expect);
        // ω(zb z) = ω(z) ω(zb) = zb z, which does reorder
        let p = NCPoly::term(lambda(), NormalMonomial([0, 0, 0, 0, 0, 1]));
        let zb_z = a.multiply(&p, &NCPoly::generator(Z));
        let expect = NCPoly::term(
            &-lambda::<BigRational>() * &zbz().conj(),
            NormalMonomial([1, 0, 0, 0, 0, 1]),
        );
        assert_eq!(a.omega(&zb_z), expect);
    }

    #[test]
    fn relation_preservation_examples() {
        let a = A::generic();
        let relq = Preset::Relq.substitution();
        let rules = a.rules().clone();
        assert!(a.check_relation_preserved(rules.get(Zb, Z).unwrap(), &relq));
        assert!(a.check_relation_preserved(rules.get(Zb, V).unwrap(), &relq));
        assert!(!a.check_relation_preserved(rules.get(Zb, Z).unwrap(), &ParamSubstitution::identity()));
    }

    #[test]
    fn traced_rewrite_counts_steps() {
        let a = A::generic();
        let (p, stats) = a.normal_order_traced(&[Zb, Z], Strategy::Leftmost);
        assert_eq!(p, a.normal_order(&[Zb, Z]));
        assert_eq!(stats.steps, 1);
        assert_eq!(stats.max_depth, 1);
    }
}
