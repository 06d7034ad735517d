//! Seeded randomized property suites. Every suite draws its inputs from a
//! ChaCha stream seeded by the caller, so a report is reproducible from
//! `(suite, seed, trials)` alone.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bounds::{
    boundgam_classify, ftypesum_gamma, ftypesum_gamma_printed, shiftgam_classify, shiftgam_gamma,
};
use crate::catalan::{
    catalan_convolution_shifted, catalan_convolution_unified, catalan_convolution_unshifted,
    catalan_power_coeff, catalan_power_coeff_printed, catalan_series, catalan_tilde_series,
    lagrange_coefficient, lagrange_fixed_point,
};
use crate::error::Error;
use crate::gamma::{
    gamma_by_basis, gamma_catalan_formula, gamma_derivative_formula, gamma_extended, gamma_matrix,
    h_from_gamma, GammaMatrix,
};
use crate::rational::{format_rational, int, ratio, Rational};
use crate::series::{Polynomial, TruncatedSeries};
use crate::simplicial::{
    f_from_h, f_vector, fhex_realizable, gamauxpo_decompose, verify_h_link_identity,
    verify_link_f_identity, AuxVariant, FHVectors, SimplicialComplex,
};
use crate::volume::{
    constant_ratio_classify, log_concave_check, volbd_claims, volume_gamma, volume_polynomial,
    BoundKind, IntersectionSequence, RatioBound,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Agreement,
    Catalan,
    Lagrange,
    Shiftgam,
    Boundgam,
    Volume,
    Simplicial,
    Auxpo,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Agreement,
        Suite::Catalan,
        Suite::Lagrange,
        Suite::Shiftgam,
        Suite::Boundgam,
        Suite::Volume,
        Suite::Simplicial,
        Suite::Auxpo,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Agreement => "agreement",
            Suite::Catalan => "catalan",
            Suite::Lagrange => "lagrange",
            Suite::Shiftgam => "shiftgam",
            Suite::Boundgam => "boundgam",
            Suite::Volume => "volume",
            Suite::Simplicial => "simplicial",
            Suite::Auxpo => "auxpo",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    pub trials: usize,
    /// Swap in the uncorrected closed forms to show where they fail.
    pub printed_formulas: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 0,
            trials: 100,
            printed_formulas: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub name: String,
    pub checks: u64,
    pub violations: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_counterexample: Option<Value>,
}

impl PropertyReport {
    fn new(name: &str) -> Self {
        PropertyReport {
            name: name.to_string(),
            checks: 0,
            violations: 0,
            first_counterexample: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub trials: usize,
    pub printed_formulas: bool,
    pub checks: u64,
    pub violations: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_counterexample: Option<Value>,
    pub properties: Vec<PropertyReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    pub fn property(&self, name: &str) -> Option<&PropertyReport> {
        self.properties.iter().find(|p| p.name == name)
    }
}

/// Property tallies in first-touch order.
struct Tally {
    props: Vec<PropertyReport>,
}

impl Tally {
    fn new(names: &[&str]) -> Self {
        Tally {
            props: names.iter().map(|n| PropertyReport::new(n)).collect(),
        }
    }

    fn slot(&mut self, name: &str) -> &mut PropertyReport {
        if let Some(i) = self.props.iter().position(|p| p.name == name) {
            return &mut self.props[i];
        }
        self.props.push(PropertyReport::new(name));
        self.props.last_mut().expect("just pushed")
    }

    fn check(&mut self, name: &str, ok: bool, counterexample: impl FnOnce() -> Value) {
        let p = self.slot(name);
        p.checks += 1;
        if !ok {
            p.violations += 1;
            if p.first_counterexample.is_none() {
                p.first_counterexample = Some(counterexample());
            }
        }
    }

    fn finish(self, suite: &str, opts: &VerifyOptions) -> SuiteReport {
        let checks = self.props.iter().map(|p| p.checks).sum();
        let violations = self.props.iter().map(|p| p.violations).sum();
        let first_counterexample = self.props.iter().find_map(|p| {
            p.first_counterexample
                .as_ref()
                .map(|c| json!({"property": p.name, "case": c}))
        });
        SuiteReport {
            suite: suite.to_string(),
            seed: opts.seed,
            trials: opts.trials,
            printed_formulas: opts.printed_formulas,
            checks,
            violations,
            first_counterexample,
            properties: self.props,
        }
    }
}

fn fmt_vec(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn fmt_ints(v: &[i64]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

fn random_ints(rng: &mut ChaCha8Rng, len: usize, lo: i64, hi: i64) -> Vec<i64> {
    (0..len).map(|_| rng.random_range(lo..=hi)).collect()
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let tally = match suite {
        Suite::Agreement => agreement(&mut rng, opts),
        Suite::Catalan => catalan_suite(&mut rng, opts),
        Suite::Lagrange => lagrange_suite(&mut rng, opts),
        Suite::Shiftgam => shiftgam_suite(&mut rng, opts),
        Suite::Boundgam => boundgam_suite(&mut rng, opts),
        Suite::Volume => volume_suite(&mut rng, opts),
        Suite::Simplicial => simplicial_suite(&mut rng, opts),
        Suite::Auxpo => auxpo_suite(&mut rng, opts),
    };
    tally.finish(suite.name(), opts)
}

fn agreement(rng: &mut ChaCha8Rng, opts: &VerifyOptions) -> Tally {
    let mut t = Tally::new(&["four_way", "reciprocal_round_trip"]);
    let mut matrices: HashMap<usize, GammaMatrix> = HashMap::new();
    for _ in 0..opts.trials {
        let n = rng.random_range(0..=20usize);
        let mut c = random_ints(rng, n + 1, -9, 9);
        let reciprocal = rng.random_bool(0.5);
        if reciprocal {
            for i in 0..=n / 2 {
                c[n - i] = c[i];
            }
        }
        let h = Polynomial::new(ints(&c), n).expect("n + 1 coefficients");
        let ext = gamma_extended(&h, n);
        let matrix = matrices.entry(n).or_insert_with(|| gamma_matrix(n, n));
        let product = matrix.apply(&h).expect("matching degree");
        let mut ok = true;
        for (m, (entry, prod)) in ext.entries.iter().zip(&product).enumerate() {
            ok &= gamma_catalan_formula(&h, m) == *entry;
            ok &= prod == entry;
            if m >= 1 && 2 * m <= n + 1 {
                ok &= gamma_derivative_formula(&h, m).ok().as_ref() == Some(entry);
            }
        }
        if reciprocal {
            ok &= match gamma_by_basis(&h) {
                Ok(g) => g.entries[..] == ext.entries[..g.entries.len()],
                Err(_) => false,
            };
        }
        t.check(
            "four_way",
            ok,
            || json!({"coeffs": fmt_ints(&c), "formal_degree": n}),
        );

        let n = rng.random_range(0..=24usize);
        let mut c = random_ints(rng, n + 1, -9, 9);
        for i in 0..=n / 2 {
            c[n - i] = c[i];
        }
        let h = Polynomial::new(ints(&c), n).expect("n + 1 coefficients");
        let ok = match gamma_by_basis(&h).and_then(|g| h_from_gamma(&g)) {
            Ok(back) => back == h,
            Err(_) => false,
        } && gamma_extended(&h, n).entries[n / 2 + 1..]
            .iter()
            .all(Zero::is_zero);
        t.check(
            "reciprocal_round_trip",
            ok,
            || json!({"coeffs": fmt_ints(&c), "formal_degree": n}),
        );
    }
    t
}

/// Coefficients of `s^0, s^1, ..., s^max_power`, each to `order`.
fn powers(s: &TruncatedSeries, max_power: usize) -> Vec<TruncatedSeries> {
    let mut out = Vec::with_capacity(max_power + 1);
    let mut p = TruncatedSeries::one(s.order());
    for _ in 0..=max_power {
        out.push(p.clone());
        p = p.mul(s);
    }
    out
}

struct CatalanOracle {
    /// `(u C(u))^k`.
    shifted: Vec<TruncatedSeries>,
    /// `C(u)^m`.
    unshifted: Vec<TruncatedSeries>,
    /// `C~(u)^i`.
    tilde: Vec<TruncatedSeries>,
    tilde_series: TruncatedSeries,
    /// `u (1 + C~)^2`.
    rhs: TruncatedSeries,
}

impl CatalanOracle {
    fn new(order: usize) -> Self {
        let c = catalan_series(order);
        let uc = TruncatedSeries::variable(order).mul(&c);
        let tilde = catalan_tilde_series(order);
        let one_plus = TruncatedSeries::one(order).add(&tilde);
        let rhs = TruncatedSeries::variable(order).mul(&one_plus.mul(&one_plus));
        CatalanOracle {
            shifted: powers(&uc, order),
            unshifted: powers(&c, order),
            tilde: powers(&tilde, order),
            tilde_series: tilde,
            rhs,
        }
    }
}

fn power_coeff(printed: bool, i: usize, m: usize) -> Rational {
    if printed {
        catalan_power_coeff_printed(i, m)
    } else {
        Rational::from_integer(catalan_power_coeff(i, m))
    }
}

const CATALAN_ORDER: usize = 40;

fn catalan_suite(rng: &mut ChaCha8Rng, opts: &VerifyOptions) -> Tally {
    let mut t = Tally::new(&[
        "shifted",
        "unshifted",
        "unified",
        "catalan_power",
        "functional_equation",
    ]);
    if opts.trials == 0 {
        return t;
    }
    let o = CatalanOracle::new(CATALAN_ORDER);
    for _ in 0..opts.trials {
        let n = rng.random_range(1..=20usize);
        let k = rng.random_range(1..=n);
        let oracle = o.shifted[k].coeff(n).clone();
        let ok = catalan_convolution_shifted(k, n)
            .map(Rational::from_integer)
            .ok()
            == Some(oracle.clone());
        t.check(
            "shifted",
            ok,
            || json!({"k": k, "n": n, "oracle": format_rational(&oracle)}),
        );

        let m = rng.random_range(1..=10usize);
        let n = rng.random_range(0..=20usize);
        let oracle = o.unshifted[m].coeff(n).clone();
        let ok = catalan_convolution_unshifted(m, n)
            .map(Rational::from_integer)
            .ok()
            == Some(oracle.clone());
        t.check(
            "unshifted",
            ok,
            || json!({"m": m, "n": n, "oracle": format_rational(&oracle)}),
        );
        let ok = catalan_convolution_unified(m, n)
            .map(Rational::from_integer)
            .ok()
            == Some(oracle.clone());
        t.check(
            "unified",
            ok,
            || json!({"m": m, "n": n, "oracle": format_rational(&oracle)}),
        );

        let m = rng.random_range(0..=20usize);
        let i = rng.random_range(0..=m);
        let oracle = o.tilde[i].coeff(m).clone();
        let value = power_coeff(opts.printed_formulas, i, m);
        t.check("catalan_power", value == oracle, || {
            json!({"i": i, "m": m, "closed_form": format_rational(&value), "oracle": format_rational(&oracle)})
        });

        let j = rng.random_range(0..=CATALAN_ORDER);
        let (lhs, rhs) = (o.tilde_series.coeff(j).clone(), o.rhs.coeff(j).clone());
        t.check(
            "functional_equation",
            lhs == rhs,
            || json!({"coefficient": j}),
        );
    }
    t
}

/// Every closed form on its full desk-scale range: shifted `1 <= k <= n <= 20`,
/// unshifted and unified `1 <= m <= 10`, `n <= 20`, Catalan powers
/// `i <= m <= 20`, and `C~ = u (1 + C~)^2` to order 40.
pub fn catalan_exhaustive(printed_formulas: bool) -> SuiteReport {
    let opts = VerifyOptions {
        seed: 0,
        trials: 0,
        printed_formulas,
    };
    let mut t = Tally::new(&[
        "shifted",
        "unshifted",
        "unified",
        "catalan_power",
        "functional_equation",
    ]);
    let o = CatalanOracle::new(CATALAN_ORDER);
    for n in 1..=20usize {
        for k in 1..=n {
            let ok = catalan_convolution_shifted(k, n)
                .map(Rational::from_integer)
                .ok()
                .as_ref()
                == Some(o.shifted[k].coeff(n));
            t.check("shifted", ok, || json!({"k": k, "n": n}));
        }
    }
    for m in 1..=10usize {
        for n in 0..=20usize {
            let oracle = o.unshifted[m].coeff(n);
            let ok = catalan_convolution_unshifted(m, n)
                .map(Rational::from_integer)
                .ok()
                .as_ref()
                == Some(oracle);
            t.check("unshifted", ok, || json!({"m": m, "n": n}));
            let ok = catalan_convolution_unified(m, n)
                .map(Rational::from_integer)
                .ok()
                .as_ref()
                == Some(oracle);
            t.check("unified", ok, || json!({"m": m, "n": n}));
        }
    }
    for m in 0..=20usize {
        for i in 0..=m {
            let oracle = o.tilde[i].coeff(m).clone();
            let value = power_coeff(printed_formulas, i, m);
            t.check("catalan_power", value == oracle, || {
                json!({"i": i, "m": m, "closed_form": format_rational(&value), "oracle": format_rational(&oracle)})
            });
        }
    }
    for j in 0..=CATALAN_ORDER {
        t.check(
            "functional_equation",
            o.tilde_series.coeff(j) == o.rhs.coeff(j),
            || json!({"coefficient": j}),
        );
    }
    t.finish("catalan", &opts)
}

fn lagrange_check(t: &mut Tally, g: &Polynomial, fixed: &TruncatedSeries, k: usize, n: usize) {
    let oracle = fixed.pow(k).coeff(n).clone();
    let value = lagrange_coefficient(g, k as i64, n);
    t.check(
        "lagrange_identity",
        value.as_ref().ok() == Some(&oracle),
        || json!({"g": fmt_vec(g.coeffs()), "k": k, "n": n, "oracle": format_rational(&oracle)}),
    );
}

fn lagrange_suite(rng: &mut ChaCha8Rng, opts: &VerifyOptions) -> Tally {
    let mut t = Tally::new(&["lagrange_identity", "catalan_fixed_point"]);
    if opts.trials == 0 {
        return t;
    }
    let catalan_g = Polynomial::from_ints(&[1, 2, 1]);
    let catalan_fixed = lagrange_fixed_point(&catalan_g, 25);
    let tilde = catalan_tilde_series(25);
    for _ in 0..opts.trials {
        let deg = rng.random_range(0..=3usize);
        let mut c = random_ints(rng, deg + 1, -3, 3);
        while c[0] == 0 {
            c[0] = rng.random_range(-3..=3);
        }
        let g = Polynomial::from_coeffs(ints(&c));
        let n = rng.random_range(1..=12usize);
        let k = rng.random_range(1..=n);
        let fixed = lagrange_fixed_point(&g, n);
        lagrange_check(&mut t, &g, &fixed, k, n);

        let j = rng.random_range(0..=25usize);
        t.check(
            "catalan_fixed_point",
            catalan_fixed.coeff(j) == tilde.coeff(j),
            || json!({"coefficient": j}),
        );
    }
    t
}

/// `n [x^n] f^k = k [x^(n-k)] G^n` for `G = (1 + x)^2`, all `1 <= k <= n <= 25`,
/// and the fixed point of `f = x G(f)` against `C~` to order 40.
pub fn lagrange_exhaustive() -> SuiteReport {
    let opts = VerifyOptions {
        seed: 0,
        trials: 0,
        printed_formulas: false,
    };
    let mut t = Tally::new(&["lagrange_identity", "catalan_fixed_point"]);
    let g = Polynomial::from_ints(&[1, 2, 1]);
    let fixed = lagrange_fixed_point(&g, CATALAN_ORDER);
    let pw = powers(&fixed.truncate(25), 25);
    for n in 1..=25usize {
        for (k, power) in pw.iter().enumerate().take(n + 1).skip(1) {
            let oracle = power.coeff(n).clone();
            let ok = lagrange_coefficient(&g, k as i64, n).ok() == Some(oracle);
            t.check("lagrange_identity", ok, || json!({"k": k, "n": n}));
        }
    }
    let tilde = catalan_tilde_series(CATALAN_ORDER);
    for j in 0..=CATALAN_ORDER {
        t.check(
            "catalan_fixed_point",
            fixed.coeff(j) == tilde.coeff(j),
            || json!({"coefficient": j}),
        );
    }
    t.finish("lagrange", &opts)
}

/// Property name under which a classifier outcome is recorded, and whether
/// it counts as a violation. Unknown claims are not recorded.
fn claim_outcome(outcome: &crate::Result<crate::SignClaim>) -> Option<(String, bool)> {
    match outcome {
        Ok(claim) if claim.is_unknown() => None,
        Ok(claim) => Some((claim.hypothesis.clone(), claim.is_consistent())),
        Err(Error::ClaimRefuted { hypothesis, .. }) => Some((hypothesis.clone(), false)),
        Err(e) => Some((format!("error: {e}"), false)),
    }
}

fn refutation(outcome: &crate::Result<crate::SignClaim>) -> Value {
    match outcome {
        Err(Error::ClaimRefuted {
            claimed, witness, ..
        }) => {
            json!({"claimed": claimed, "witness": format_rational(witness)})
        }
        Ok(claim) => {
            json!({"claimed": claim.claimed_sign, "witness": format_rational(&claim.witness)})
        }
        Err(e) => json!({"error": e.to_string()}),
    }
}

fn shiftgam_suite(rng: &mut ChaCha8Rng, opts: &VerifyOptions) -> Tally {
    let mut t = Tally::new(&["closed_sum", "odd r", "r = d/2", "even r with ratio bound"]);
    for _ in 0..opts.trials {
        let d = rng.random_range(2..=16usize);
        let a = random_ints(rng, d + 1, 0, 9);
        let aq = ints(&a);
        let b = Polynomial::new(aq.clone(), d)
            .expect("d + 1 coefficients")
            .reciprocal()
            .translate(&Rational::one());
        let ext = gamma_extended(&b, d / 2);
        for r in 1..=d / 2 {
            let ok = shiftgam_gamma(&aq, d, r).ok().as_ref() == Some(&ext.entries[r]);
            t.check(
                "closed_sum",
                ok,
                || json!({"a": fmt_ints(&a), "d": d, "r": r}),
            );
            let outcome = shiftgam_classify(&aq, d, r);
            if let Some((name, ok)) = claim_outcome(&outcome) {
                t.check(
                    &name,
                    ok,
                    || json!({"a": fmt_ints(&a), "d": d, "r": r, "result": refutation(&outcome)}),
                );
            }
        }
    }
    t
}

fn boundgam_suite(rng: &mut ChaCha8Rng, opts: &VerifyOptions) -> Tally {
    let mut t = Tally::new(&["ftypesum_matches_derivative", "alternating signs"]);
    for _ in 0..opts.trials {
        let d = rng.random_range(2..=20usize);
        let b = random_ints(rng, d + 1, -20, 20);
        let h = Polynomial::new(ints(&b), d).expect("d + 1 coefficients");
        let ext = gamma_extended(&h, d / 2);
        for r in 1..=d / 2 {
            let value = if opts.printed_formulas {
                ftypesum_gamma_printed(&ints(&b), d, r)
            } else {
                ftypesum_gamma(&ints(&b), d, r)
            }
            .expect("r in range");
            let deriv = gamma_derivative_formula(&h, r).expect("r in range");
            let ok = value == deriv && value == ext.entries[r];
            t.check("ftypesum_matches_derivative", ok, || {
                json!({"b": fmt_ints(&b), "d": d, "r": r, "value": format_rational(&value), "oracle": format_rational(&deriv)})
            });
        }

        let d = rng.random_range(2..=16usize);
        let b: Vec<i64> = (0..=d)
            .map(|k| rng.random_range(1..=9i64) * if k % 2 == 0 { 1 } else { -1 })
            .collect();
        for r in 1..=d / 2 {
            let outcome = boundgam_classify(&ints(&b), d, r);
            let ok = matches!(&outcome, Ok(c) if c.hypothesis == "alternating signs" && c.is_consistent());
            t.check(
                "alternating signs",
                ok,
                || json!({"b": fmt_ints(&b), "d": d, "r": r, "result": refutation(&outcome)}),
            );
        }

        // nonnegative monotone inputs exercise the remaining hypotheses
        let d = rng.random_range(2..=16usize);
        let mut b = random_ints(rng, d + 1, 0, 30);
        if rng.random_bool(0.5) {
            b.sort_unstable_by(|x, y| y.cmp(x));
        } else {
            b.sort_unstable();
        }
        for r in 1..=d / 2 {
            let outcome = boundgam_classify(&ints(&b), d, r);
            if let Some((name, ok)) = claim_outcome(&outcome) {
                t.check(
                    &name,
                    ok,
                    || json!({"b": fmt_ints(&b), "d": d, "r": r, "result": refutation(&outcome)}),
                );
            }
        }
    }
    t
}

/// Ratios `rho` sampled by the constant-ratio property for degree `d`.
pub fn constant_ratio_grid(d: usize) -> Vec<Rational> {
    vec![
        int(-3),
        int(-1),
        ratio(-1, 2),
        int(0),
        ratio(1, 100),
        int(d as i64 + 1),
        int(2 * d as i64),
    ]
}

fn volume_suite(rng: &mut ChaCha8Rng, opts: &VerifyOptions) -> Tally {
    let mut t = Tally::new(&[
        "gamma_matches_derivative",
        "alternating q",
        "nonnegative decreasing a",
        "constant_ratio",
        "log_concave_ratios",
    ]);
    for _ in 0..opts.trials {
        let d = rng.random_range(2..=16usize);
        let a: Vec<Rational> = (0..=d)
            .map(|_| ratio(rng.random_range(-30..=30), rng.random_range(1..=6)))
            .collect();
        let s = IntersectionSequence::new(a.clone()).expect("d >= 2");
        let v = volume_polynomial(&s);
        for r in 1..=d / 2 {
            let ok = volume_gamma(&s, r).ok() == gamma_derivative_formula(&v, r).ok();
            t.check(
                "gamma_matches_derivative",
                ok,
                || json!({"a": fmt_vec(&a), "d": d, "r": r}),
            );
        }

        // differences a_{k+1} - a_k alternate in sign, starting positive
        let d = rng.random_range(2..=16usize);
        let mut a = vec![rng.random_range(1..=9i64)];
        for k in 0..d {
            let step = rng.random_range(1..=9i64);
            a.push(a[k] + if k % 2 == 0 { step } else { -step });
        }
        record_volbd(&mut t, &a, "alternating q");

        let d = rng.random_range(2..=16usize);
        let mut a = random_ints(rng, d + 1, 0, 20);
        a.sort_unstable_by(|x, y| y.cmp(x));
        record_volbd(&mut t, &a, "nonnegative decreasing a");

        let d = rng.random_range(2..=12usize);
        let grid = constant_ratio_grid(d);
        let rho = &grid[rng.random_range(0..grid.len())];
        let a0 = if rng.random_bool(0.5) {
            int(1)
        } else {
            int(-1)
        };
        for r in 1..=d / 2 {
            let outcome = constant_ratio_classify(rho, &a0, d, r);
            let ok = matches!(&outcome, Ok(c) if !c.is_unknown() && c.is_consistent());
            t.check("constant_ratio", ok, || {
                json!({"rho": format_rational(rho), "a0": format_rational(&a0), "d": d, "r": r, "result": refutation(&outcome)})
            });
        }

        // a_k = prod of non-increasing ratios is log-concave
        let len = rng.random_range(3..=10usize);
        let mut ratios: Vec<Rational> = (1..len)
            .map(|_| ratio(rng.random_range(1..=20), rng.random_range(1..=5)))
            .collect();
        ratios.sort_unstable_by(|x, y| y.cmp(x));
        let mut seq = vec![ratio(rng.random_range(1..=10), 1)];
        for q in &ratios {
            let next = seq.last().expect("nonempty") * q;
            seq.push(next);
        }
        let c = ratio(rng.random_range(1..=20), rng.random_range(1..=5));
        let kind = if rng.random_bool(0.5) {
            BoundKind::Upper
        } else {
            BoundKind::Lower
        };
        let report = log_concave_check(&seq, Some(&RatioBound { kind, c: c.clone() }));
        let ok = report.log_concave
            && report.ratios_non_increasing
            && report.bound.as_ref().is_some_and(|b| b.holds == b.reduced);
        t.check(
            "log_concave_ratios",
            ok,
            || json!({"sequence": fmt_vec(&seq), "bound": format_rational(&c)}),
        );
    }
    t
}

fn record_volbd(t: &mut Tally, a: &[i64], property: &str) {
    let d = a.len() - 1;
    let s = IntersectionSequence::new(ints(a)).expect("d >= 2");
    for r in 1..=d / 2 {
        let claims = volbd_claims(&s, r).expect("r in range");
        let target = claims.iter().find(|c| match c {
            Ok(claim) => claim.hypothesis == property,
            Err(Error::ClaimRefuted { hypothesis, .. }) => hypothesis == property,
            Err(_) => false,
        });
        let ok = matches!(target, Some(Ok(_)));
        t.check(property, ok, || {
            json!({
                "a": fmt_ints(a),
                "d": d,
                "r": r,
                "result": target.map(refutation).unwrap_or_else(|| json!("hypothesis not recognised")),
            })
        });
    }
}

/// A random complex on at most `max_vertices` vertices with up to five
/// random nonempty facets.
pub fn random_complex(rng: &mut impl Rng, max_vertices: usize) -> SimplicialComplex {
    let n = rng.random_range(1..=max_vertices);
    let count = rng.random_range(1..=5usize);
    let facets: Vec<Vec<String>> = (0..count)
        .map(|_| {
            let mask = rng.random_range(1..(1u64 << n));
            (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| (i + 1).to_string())
                .collect()
        })
        .collect();
    SimplicialComplex::from_facets(&facets).expect("at most 64 vertices")
}

fn simplicial_suite(rng: &mut ChaCha8Rng, opts: &VerifyOptions) -> Tally {
    let mut t = Tally::new(&["link_f_identity", "h_link_identity", "transform_round_trip"]);
    for _ in 0..opts.trials {
        let k = random_complex(rng, 7);
        let facets = || serde_json::to_value(k.to_json()).expect("serializable");
        t.check("link_f_identity", verify_link_f_identity(&k).holds, facets);
        t.check("h_link_identity", verify_h_link_identity(&k).holds, facets);
        let fv = f_vector(&k);
        t.check(
            "transform_round_trip",
            f_from_h(&fv.h, fv.d) == fv.f,
            facets,
        );

        let len = rng.random_range(1..=10usize);
        let f: Vec<Rational> = (0..len)
            .map(|_| ratio(rng.random_range(-20..=20), rng.random_range(1..=4)))
            .collect();
        let d = rng.random_range(-2..=10i64);
        let formal = FHVectors::formal(f.clone(), d);
        t.check(
            "transform_round_trip",
            FHVectors::from_h(formal.h.clone(), d).f == f,
            || json!({"f": fmt_vec(&f), "d": d}),
        );
    }
    t
}

fn auxpo_suite(rng: &mut ChaCha8Rng, opts: &VerifyOptions) -> Tally {
    let mut t = Tally::new(&["part1", "part2", "fhex_monotone"]);
    for _ in 0..opts.trials {
        let d = rng.random_range(2..=14usize);
        let r = rng.random_range(1..=d / 2);
        let mut b = random_ints(rng, d + 1, -9, 20);
        if rng.random_bool(0.5) {
            for (k, bk) in b.iter_mut().enumerate().take(r).skip(1) {
                *bk = (r - k) as i64 * rng.random_range(-3..=6i64);
            }
        }
        let bq = ints(&b);
        let expected = ftypesum_gamma(&bq, d, r).expect("r in range") * int(r as i64);
        for (variant, name) in [(AuxVariant::Part1, "part1"), (AuxVariant::Part2, "part2")] {
            match gamauxpo_decompose(&bq, d, r, variant) {
                Ok(dec) => t.check(
                    name,
                    dec.r_gamma_r == expected && dec.recombine() == expected,
                    || json!({"b": fmt_ints(&b), "d": d, "r": r}),
                ),
                // part 2 only applies when (r - k) divides k b_k
                Err(Error::Hypothesis { .. }) if variant == AuxVariant::Part2 => {}
                Err(e) => t.check(
                    name,
                    false,
                    || json!({"b": fmt_ints(&b), "d": d, "r": r, "error": e.to_string()}),
                ),
            }
        }

        let dd = rng.random_range(1..=8usize);
        let mut f = vec![1i64];
        f.extend(random_ints(rng, dd, 0, 30));
        let before = FHVectors::from_f(ints(&f)).expect("f_-1 = 1");
        let i = rng.random_range(1..=dd);
        let mut g = f.clone();
        g[i] += rng.random_range(1..=5);
        let after = FHVectors::from_f(ints(&g)).expect("f_-1 = 1");
        let ok = !fhex_realizable(&before).expect("integer")
            || fhex_realizable(&after).expect("integer");
        t.check(
            "fhex_monotone",
            ok,
            || json!({"f": fmt_ints(&f), "raised": fmt_ints(&g)}),
        );
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(seed: u64, trials: usize) -> VerifyOptions {
        VerifyOptions {
            seed,
            trials,
            printed_formulas: false,
        }
    }

    #[test]
    fn zero_trials_is_vacuous() {
        for suite in Suite::ALL {
            let r = run_suite(suite, &opts(3, 0));
            assert_eq!((r.checks, r.violations), (0, 0), "{suite}");
        }
    }

    #[test]
    fn reports_are_deterministic() {
        for suite in Suite::ALL {
            let a = serde_json::to_string(&run_suite(suite, &opts(11, 4))).unwrap();
            let b = serde_json::to_string(&run_suite(suite, &opts(11, 4))).unwrap();
            assert_eq!(a, b, "{suite}");
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn identity_suites_pass() {
        for suite in [
            Suite::Agreement,
            Suite::Catalan,
            Suite::Lagrange,
            Suite::Simplicial,
            Suite::Auxpo,
        ] {
            let r = run_suite(suite, &opts(5, 20));
            assert!(r.passed(), "{}", serde_json::to_string(&r).unwrap());
        }
    }

    #[test]
    fn printed_forms_are_caught() {
        let printed = VerifyOptions {
            seed: 2,
            trials: 60,
            printed_formulas: true,
        };
        assert!(!run_suite(Suite::Catalan, &printed)
            .property("catalan_power")
            .unwrap()
            .passed());
        let r = run_suite(Suite::Boundgam, &printed);
        assert!(!r.property("ftypesum_matches_derivative").unwrap().passed());
        let e = catalan_exhaustive(true);
        assert!(!e.property("catalan_power").unwrap().passed());
        assert!(catalan_exhaustive(false).passed());
        assert!(lagrange_exhaustive().passed());
    }
}
