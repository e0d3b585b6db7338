//! Strategy-independence checks for the rewrite system.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{word_to_string, FlagAlgebra, Generator, NCPoly, Strategy, Word};
use crate::scalar::Scalar;

/// A word whose normal form depends on the rewrite strategy.
#[derive(Debug, Clone, Serialize)]
pub struct ConfluenceFailure {
    pub word: String,
    pub first: String,
    pub second: String,
    /// `first - second`, the obstruction.
    pub difference: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConfluenceReport {
    pub seed: u64,
    pub trials: usize,
    pub max_len: usize,
    pub triples_checked: usize,
    pub triples_failed: usize,
    pub random_words_checked: usize,
    pub random_words_failed: usize,
    pub failures: Vec<ConfluenceFailure>,
}

impl ConfluenceReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn compare<S: Scalar>(w: &Word, a: &NCPoly<S>, b: &NCPoly<S>) -> Option<ConfluenceFailure> {
    if a == b {
        return None;
    }
    Some(ConfluenceFailure {
        word: word_to_string(w),
        first: a.to_string(),
        second: b.to_string(),
        difference: (a - b).to_string(),
    })
}

/// All 20 words `c b a` with strictly decreasing ranks: the overlaps of the
/// rule patterns.
pub fn decreasing_triples() -> Vec<Word> {
    let mut out = Vec::new();
    for a in 0..6 {
        for b in a + 1..6 {
            for c in b + 1..6 {
                out.push(vec![
                    Generator::from_rank(c).unwrap(),
                    Generator::from_rank(b).unwrap(),
                    Generator::from_rank(a).unwrap(),
                ]);
            }
        }
    }
    out
}

fn check_word<S: Scalar>(alg: &FlagAlgebra<S>, w: &Word, rng: &mut ChaCha8Rng) -> Option<ConfluenceFailure> {
    let left = alg.normal_order_with(w, Strategy::Leftmost);
    let right = alg.normal_order_with(w, Strategy::Rightmost);
    if let Some(f) = compare(w, &left, &right) {
        return Some(f);
    }
    let random = alg.normal_order_random(w, rng);
    compare(w, &left, &random)
}

/// Exhaustive overlap check on the 20 decreasing triples, then `trials`
/// seeded random words of length `1..=max_len`, each normal-ordered with the
/// leftmost, rightmost and a random-choice strategy.
pub fn confluence_check<S: Scalar>(alg: &FlagAlgebra<S>, trials: usize, max_len: usize, seed: u64) -> ConfluenceReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();

    let triples = decreasing_triples();
    let mut triples_failed = 0;
    for w in &triples {
        if let Some(f) = check_word(alg, w, &mut rng) {
            triples_failed += 1;
            failures.push(f);
        }
    }

    let mut random_failed = 0;
    for _ in 0..trials {
        let len = rng.gen_range(1..=max_len.max(1));
        let w: Word = (0..len)
            .map(|_| Generator::from_rank(rng.gen_range(0..6)).unwrap())
            .collect();
        if let Some(f) = check_word(alg, &w, &mut rng) {
            random_failed += 1;
            // keep the report readable
            if failures.len() < triples.len() + 10 {
                failures.push(f);
            }
        }
    }

    ConfluenceReport {
        seed,
        trials,
        max_len,
        triples_checked: triples.len(),
        triples_failed,
        random_words_checked: trials,
        random_words_failed: random_failed,
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Preset;
    use num_rational::BigRational;

    #[test]
    fn twenty_triples() {
        let t = decreasing_triples();
        assert_eq!(t.len(), 20);
        assert!(t.iter().all(|w| w[0] > w[1] && w[1] > w[2]));
    }

    #[test]
    fn single_letters_are_trivially_confluent() {
        let alg = FlagAlgebra::<BigRational>::generic();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for g in Generator::ALL {
            assert!(check_word(&alg, &vec![g], &mut rng).is_none());
        }
    }

    #[test]
    fn relq_table_is_confluent() {
        let alg = FlagAlgebra::<BigRational>::generic().specialized(&Preset::Relq.substitution());
        let report = confluence_check(&alg, 200, 5, 7);
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn generic_table_has_the_zb_v_z_obstruction() {
        let alg = FlagAlgebra::<BigRational>::generic();
        let report = confluence_check(&alg, 0, 2, 0);
        assert_eq!(report.triples_failed, 7);
        assert!(report.failures.iter().any(|f| f.word == "zb*v*z"));
    }
}
