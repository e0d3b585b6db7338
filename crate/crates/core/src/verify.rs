//! Named verification suites with deterministic, serializable reports.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classical::{
    impose_mxc, maxwell_residual, mxc_equations, op_i, op_i_pm_n_direct, op_i_pm_n_factored, spin_monomials, Sign,
    CURRENT_NORMALIZATION,
};
use crate::coeff::{lambda, LaurentPoly, Param, ParamExponent, ParamSubstitution, Preset};
use crate::flag::{
    confluence_check, relation_table, FlagAlgebra, Generator, NCPoly, NormalMonomial, RewriteRule, RuleTable, WordPoly,
};
use crate::qops::{classical_image, monomials_up_to, quantum_hierarchy_apply, OperatorTriple};
use crate::repr::{make_hierarchy_element, signature_for_level, Kind, Signature};

type R = BigRational;
type G = Complex<BigRational>;

/// The canonical text of the generic relation table.
pub const GOLDEN_RELATIONS: &str = include_str!("../tests/golden/relations.txt");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Relations,
    Confluence,
    Specialization,
    RelationsOmega,
    ClassicalMaxwell,
    OperatorIdentity,
    QLimit,
    Degrees,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Relations,
        Suite::Confluence,
        Suite::Specialization,
        Suite::RelationsOmega,
        Suite::ClassicalMaxwell,
        Suite::OperatorIdentity,
        Suite::QLimit,
        Suite::Degrees,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Confluence => "confluence",
            Suite::Specialization => "specialization",
            Suite::RelationsOmega => "relations-omega",
            Suite::ClassicalMaxwell => "classical-maxwell",
            Suite::OperatorIdentity => "operator-identity",
            Suite::QLimit => "q-limit",
            Suite::Degrees => "degrees",
        }
    }

    pub fn from_name(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Inputs shared by all suites.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    /// Generic relation table, possibly corrupted for fault-injection runs.
    pub table: RuleTable<R>,
    /// Overrides the suite's default specialization.
    pub preset: Option<Preset>,
    pub trials: usize,
    pub max_len: usize,
    pub seed: u64,
    pub truncate_degree: u32,
    /// Operators for `q-limit` and `degrees`; the classical-limit triple if absent.
    pub operators: Option<OperatorTriple<R>>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            table: relation_table(),
            preset: None,
            trials: 1000,
            max_len: 6,
            seed: 0,
            truncate_degree: 1,
            operators: None,
        }
    }
}

impl SuiteConfig {
    /// Corrupt the `zb*z` coefficient by a factor of `q`.
    pub fn with_fault(mut self) -> Self {
        self.table = self
            .table
            .with_scaled_swap(Generator::Zb, Generator::Z, &LaurentPoly::param(Param::Q));
        self
    }

    fn algebra(&self, default: Option<Preset>) -> (FlagAlgebra<R>, String) {
        let alg = FlagAlgebra::new(self.table.clone());
        match self.preset.or(default) {
            Some(p) => (alg.specialized(&p.substitution()), p.name().to_string()),
            None => (alg, "generic".to_string()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    /// Specialization the suite ran under.
    pub table: String,
    pub checks: usize,
    pub failures: usize,
    pub passed: bool,
    pub cases: Vec<CaseResult>,
}

impl SuiteReport {
    fn new(suite: Suite, seed: u64, table: String) -> Self {
        SuiteReport {
            suite,
            seed,
            table,
            checks: 0,
            failures: 0,
            passed: true,
            cases: Vec::new(),
        }
    }

    fn case(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks += 1;
        if !passed {
            self.failures += 1;
            self.passed = false;
        }
        self.cases.push(CaseResult {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "suite: {}\ntable: {}\nseed: {}\nchecks: {}\nfailures: {}\n",
            self.suite, self.table, self.seed, self.checks, self.failures
        );
        for c in &self.cases {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                out.push_str(&format!("{} {}\n", mark, c.name));
            } else {
                out.push_str(&format!("{} {}: {}\n", mark, c.name, c.detail));
            }
        }
        out.push_str(&format!("verdict: {}\n", if self.passed { "PASS" } else { "FAIL" }));
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> SuiteReport {
    match suite {
        Suite::Relations => relations(cfg),
        Suite::Confluence => confluence(cfg),
        Suite::Specialization => specialization(cfg),
        Suite::RelationsOmega => relations_omega(cfg),
        Suite::ClassicalMaxwell => classical_maxwell(cfg),
        Suite::OperatorIdentity => operator_identity(cfg),
        Suite::QLimit => q_limit(cfg),
        Suite::Degrees => degrees(cfg),
    }
}

fn relations(cfg: &SuiteConfig) -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::Relations, cfg.seed, "generic".into());
    let actual = cfg.table.to_text();
    let golden: Vec<&str> = GOLDEN_RELATIONS.lines().collect();
    let lines: Vec<&str> = actual.lines().collect();
    rep.case(
        "rule count",
        lines.len() == golden.len(),
        format!("{} rules", lines.len()),
    );
    for (k, g) in golden.iter().enumerate() {
        let got = lines.get(k).copied().unwrap_or("");
        let detail = if got == *g {
            got.to_string()
        } else {
            format!("expected `{}`, got `{}`", g, got)
        };
        rep.case(format!("golden line {}", k + 1), got == *g, detail);
    }

    // (q q24/(q23 q34)) xp xm - (q12 q24/(q q14)) xm xp - λ v vb must vanish
    let alg = FlagAlgebra::new(cfg.table.clone());
    use Param::*;
    let lhs = LaurentPoly::<R>::mono(&[(Q, 1), (Q24, 1), (Q23, -1), (Q34, -1)]);
    let rhs = LaurentPoly::<R>::mono(&[(Q12, 1), (Q24, 1), (Q, -1), (Q14, -1)]);
    let implicit = WordPoly::word(lhs, vec![Generator::Xp, Generator::Xm])
        .sub(&WordPoly::word(rhs, vec![Generator::Xm, Generator::Xp]))
        .sub(&WordPoly::word(lambda(), vec![Generator::V, Generator::Vb]));
    let back = alg.normal_order_poly(&implicit);
    rep.case("implicit xp*xm relation", back.is_zero(), format!("residual {}", back));
    rep
}

fn confluence(cfg: &SuiteConfig) -> SuiteReport {
    let (alg, table) = cfg.algebra(None);
    let mut rep = SuiteReport::new(Suite::Confluence, cfg.seed, table);
    let r = confluence_check(&alg, cfg.trials, cfg.max_len, cfg.seed);
    rep.case(
        "decreasing triples",
        r.triples_failed == 0,
        format!("{} of {} disagree", r.triples_failed, r.triples_checked),
    );
    rep.case(
        "random words",
        r.random_words_failed == 0,
        format!(
            "{} of {} disagree (length <= {})",
            r.random_words_failed, r.random_words_checked, r.max_len
        ),
    );
    for f in r.failures {
        rep.case(
            format!("word {}", f.word),
            false,
            format!("difference {}", f.difference),
        );
    }
    rep
}

/// The relations with `q12 = q23 = q34 = q^2/q14`, `q13 = q24 = q`, written
/// in terms of `p = q^3/q14^2`.
pub fn two_parameter_table() -> RuleTable<R> {
    use Generator::*;
    let p = |k: i32| LaurentPoly::<R>::mono(&[(Param::Q, 3 * k), (Param::Q14, -2 * k)]);
    let q = |k: i32| LaurentPoly::<R>::param_pow(Param::Q, k);
    let lam = lambda::<R>();
    let one = |g| NormalMonomial::generator(g);
    let mut vvb = [0; 6];
    vvb[V.rank()] = 1;
    vvb[Vb.rank()] = 1;
    RuleTable::from_rules([
        RewriteRule::new(Xp, V, p(1), &[]),
        RewriteRule::new(Vb, Xp, p(-1), &[]),
        RewriteRule::new(Xm, V, p(-1), &[]),
        RewriteRule::new(Vb, Xm, p(1), &[]),
        RewriteRule::new(Vb, V, LaurentPoly::one(), &[]),
        // (q/p) xp xm = (p/q) xm xp + λ v vb
        RewriteRule::new(
            Xp,
            Xm,
            &p(2) * &q(-2),
            &[(&(&p(1) * &q(-1)) * &lam, NormalMonomial(vvb))],
        ),
        RewriteRule::new(Zb, Z, LaurentPoly::one(), &[]),
        RewriteRule::new(Zb, Xp, p(1), &[]),
        RewriteRule::new(Zb, Xm, &p(1) * &q(-2), &[(lam.clone(), one(Vb))]),
        RewriteRule::new(Zb, Vb, p(1), &[]),
        RewriteRule::new(Zb, V, &p(1) * &q(-2), &[(lam.clone(), one(Xp))]),
        RewriteRule::new(Xp, Z, p(-1), &[]),
        RewriteRule::new(Xm, Z, &q(2) * &p(-1), &[(-&lam, one(V))]),
        RewriteRule::new(V, Z, p(-1), &[]),
        RewriteRule::new(Vb, Z, &q(2) * &p(-1), &[(-&lam, one(Xp))]),
    ])
}

fn specialization(cfg: &SuiteConfig) -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::Specialization, cfg.seed, "conj-2param, relq, one-param".into());
    let split = cfg.table.specialize(&Preset::Conj2Param.substitution());
    let frozen = two_parameter_table();
    for (got, want) in split.iter().zip(frozen.iter()) {
        let ok = got == want;
        let detail = if ok {
            got.to_string()
        } else {
            format!("expected `{}`, got `{}`", want, got)
        };
        rep.case(format!("conj-2param {}*{}", got.high, got.low), ok, detail);
    }
    for (high, low) in [(Generator::Zb, Generator::Z), (Generator::Vb, Generator::V)] {
        let c = split.get(high, low).map(|r| r.swap_coefficient());
        let ok = c.as_ref().is_some_and(|c| c.is_one());
        rep.case(
            format!("conj-2param {}*{} coefficient is 1", high, low),
            ok,
            c.map(|c| c.to_string()).unwrap_or_default(),
        );
    }
    let relq = cfg.table.specialize(&Preset::Relq.substitution());
    let c = relq.get(Generator::Zb, Generator::Z).map(|r| r.swap_coefficient());
    rep.case(
        "relq zb*z coefficient is 1",
        c.as_ref().is_some_and(|c| c.is_one()),
        c.map(|c| c.to_string()).unwrap_or_default(),
    );
    let one = FlagAlgebra::new(cfg.table.clone()).specialized(&Preset::OneParam.substitution());
    let r = confluence_check(&one, cfg.trials.min(200), cfg.max_len, cfg.seed);
    rep.case(
        "one-param confluence",
        r.passed(),
        format!(
            "{} triple and {} word failures",
            r.triples_failed, r.random_words_failed
        ),
    );
    rep
}

fn random_monomial(rng: &mut ChaCha8Rng) -> NormalMonomial {
    let mut e = [0; 6];
    for x in e.iter_mut() {
        *x = rng.gen_range(0..3);
    }
    NormalMonomial(e)
}

fn random_poly(rng: &mut ChaCha8Rng) -> NCPoly<R> {
    let mut p = NCPoly::zero();
    for _ in 0..rng.gen_range(1..4) {
        let mut e = ParamExponent::ONE;
        for k in 0..3 {
            e.0[k] = rng.gen_range(-2..3);
        }
        let c = R::new(BigInt::from(rng.gen_range(-5..6)), BigInt::from(rng.gen_range(1..4)));
        p.add_term(random_monomial(rng), LaurentPoly::monomial(c, e));
    }
    p
}

fn relations_omega(cfg: &SuiteConfig) -> SuiteReport {
    let (alg, table) = cfg.algebra(Some(Preset::Relq));
    let mut rep = SuiteReport::new(Suite::RelationsOmega, cfg.seed, table);
    let id = ParamSubstitution::identity();
    for rule in alg.rules().iter() {
        let ok = alg.check_relation_preserved(rule, &id);
        let image = alg.normal_order_poly(&FlagAlgebra::omega_words(&rule.residual()));
        rep.case(
            format!("omega {}*{}", rule.high, rule.low),
            ok,
            format!("image {}", image),
        );
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut bad = 0;
    for _ in 0..200 {
        let p = random_poly(&mut rng);
        if alg.omega(&alg.omega(&p)) != p {
            bad += 1;
        }
    }
    rep.case("omega^2 = id", bad == 0, format!("{} of 200 random values differ", bad));
    let mut bad = 0;
    for _ in 0..200 {
        let a = NCPoly::monomial(random_monomial(&mut rng));
        let b = NCPoly::monomial(random_monomial(&mut rng));
        if alg.omega(&alg.multiply(&a, &b)) != alg.multiply(&alg.omega(&b), &alg.omega(&a)) {
            bad += 1;
        }
    }
    rep.case(
        "omega(ab) = omega(b) omega(a)",
        bad == 0,
        format!("{} of 200 random pairs differ", bad),
    );
    rep
}

fn classical_maxwell(cfg: &SuiteConfig) -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::ClassicalMaxwell, cfg.seed, "classical".into());
    let half = G::new(
        R::new(BigInt::from(1), BigInt::from(CURRENT_NORMALIZATION)),
        R::from_integer(0.into()),
    );
    let i = G::new(R::from_integer(0.into()), R::from_integer(1.into()));
    let slots = ["zb*z", "zb", "z", "1"];
    for s in Sign::ALL {
        let r = maxwell_residual::<G>(s);
        let e = mxc_equations::<G>(s);
        let pattern = [
            e[0].add(&e[3]),
            e[1].sub(&e[2].scale(&i)),
            e[1].add(&e[2].scale(&i)),
            e[0].sub(&e[3]),
        ];
        for k in 0..4 {
            let reproduces = r[k] == pattern[k].scale(&half);
            let imposed = impose_mxc(&r[k], s);
            rep.case(
                format!("sign {} coefficient of {}", s.symbol(), slots[k]),
                reproduces && imposed.is_zero(),
                format!("residual {} ; with component equations imposed: {}", r[k], imposed),
            );
        }
    }
    rep
}

fn operator_identity(cfg: &SuiteConfig) -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::OperatorIdentity, cfg.seed, "classical".into());
    let inputs = spin_monomials::<G>(4, 2);
    for s in Sign::ALL {
        for n in 0..=5 {
            let bad = inputs
                .iter()
                .filter(|f| op_i_pm_n_direct(s, n, f) != op_i_pm_n_factored(s, n, f))
                .count();
            rep.case(
                format!("sign {} n = {}", s.symbol(), n),
                bad == 0,
                format!("{} of {} monomials differ", bad, inputs.len()),
            );
        }
    }
    rep
}

fn q_limit(cfg: &SuiteConfig) -> SuiteReport {
    let (alg, table) = cfg.algebra(None);
    let mut rep = SuiteReport::new(Suite::QLimit, cfg.seed, table);
    let ops = cfg.operators.clone().unwrap_or_else(OperatorTriple::classical_limit);
    let monos = monomials_up_to(4);
    for (a, op) in [(1, &ops.i1), (2, &ops.i2), (3, &ops.i3)] {
        let bad = monos
            .iter()
            .filter(|m| {
                let p = NCPoly::monomial(**m);
                classical_image(&op.apply(&alg, &p)) != op_i(a, &classical_image(&p))
            })
            .count();
        rep.case(
            format!("I{} at q = 1", a),
            bad == 0,
            format!("{} of {} monomials differ", bad, monos.len()),
        );
    }
    for s in Sign::ALL {
        for n in 0..=5 {
            let hat = ops.hat(s, n);
            let bad = monos
                .iter()
                .filter(|m| {
                    let p = NCPoly::monomial(**m);
                    classical_image(&hat.apply(&alg, &p)) != op_i_pm_n_factored(s, n, &classical_image(&p))
                })
                .count();
            rep.case(
                format!("sign {} n = {}", s.symbol(), n),
                bad == 0,
                format!("{} of {} monomials differ", bad, monos.len()),
            );
        }
    }
    rep
}

fn degrees(cfg: &SuiteConfig) -> SuiteReport {
    let (alg, table) = cfg.algebra(None);
    let mut rep = SuiteReport::new(Suite::Degrees, cfg.seed, table);
    let mut sig_ok = true;
    for n in 0..=10u32 {
        sig_ok &= signature_for_level(n, Kind::Plus) == Signature::new(n + 2, n, 2)
            && signature_for_level(n, Kind::Minus) == Signature::new(n, n + 2, 2)
            && signature_for_level(n, Kind::Zero) == Signature::new(n + 1, n + 1, 3);
    }
    rep.case("signatures n <= 10", sig_ok, "");
    let mut bad = 0;
    for n in 0..=10 {
        for k in Kind::ALL {
            if !make_hierarchy_element(n, k, cfg.truncate_degree)
                .element::<R>()
                .validate()
            {
                bad += 1;
            }
        }
    }
    rep.case("templates validate n <= 10", bad == 0, format!("{} invalid", bad));
    let ops = cfg.operators.clone().unwrap_or_else(OperatorTriple::classical_limit);
    for s in Sign::ALL {
        for n in 0..=5 {
            let t = make_hierarchy_element(n, Kind::from(s), cfg.truncate_degree);
            let errors: Vec<String> = t
                .terms
                .iter()
                .filter_map(|(_, m)| quantum_hierarchy_apply(&alg, s, n, &ops, &NCPoly::monomial(*m)).err())
                .map(|e| e.to_string())
                .collect();
            rep.case(
                format!("degree contract sign {} n = {}", s.symbol(), n),
                errors.is_empty(),
                errors
                    .first()
                    .cloned()
                    .unwrap_or_else(|| format!("{} basis monomials", t.terms.len())),
            );
        }
    }
    rep
}
