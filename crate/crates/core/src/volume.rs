//! Gamma entries of `V(u) = (uA + B)^d` given the numbers `a_k = A^k B^(d-k)`,
//! sign rules for constant-ratio and patterned sequences, and log-concavity.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::bounds::{magnitudes_non_increasing, numerator_sum, Quantity, Sign, SignClaim};
use crate::error::{Error, Result};
use crate::rational::{
    binomial_q, serde_rational, serde_rational_vec, sign_of, sign_power, Rational,
};
use crate::series::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SequenceRepr", into = "SequenceRepr")]
pub struct IntersectionSequence {
    a: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct SequenceRepr {
    #[serde(with = "serde_rational_vec")]
    a: Vec<Rational>,
    d: usize,
}

impl TryFrom<SequenceRepr> for IntersectionSequence {
    type Error = Error;

    fn try_from(r: SequenceRepr) -> Result<Self> {
        if r.a.len() != r.d + 1 {
            return Err(Error::Domain(format!(
                "intersection sequence for d = {} needs {} entries, got {}",
                r.d,
                r.d + 1,
                r.a.len()
            )));
        }
        IntersectionSequence::new(r.a)
    }
}

impl From<IntersectionSequence> for SequenceRepr {
    fn from(s: IntersectionSequence) -> Self {
        let d = s.d();
        SequenceRepr { a: s.a, d }
    }
}

impl IntersectionSequence {
    /// `a_0, ..., a_d`; needs `d >= 1`.
    pub fn new(a: Vec<Rational>) -> Result<Self> {
        if a.len() < 2 {
            return Err(Error::Domain("intersection sequence needs d >= 1".into()));
        }
        Ok(IntersectionSequence { a })
    }

    /// `a_k = a_0 rho^k`.
    pub fn geometric(a0: &Rational, rho: &Rational, d: usize) -> Result<Self> {
        let mut a = Vec::with_capacity(d + 1);
        let mut x = a0.clone();
        for _ in 0..=d {
            a.push(x.clone());
            x *= rho;
        }
        Self::new(a)
    }

    pub fn a(&self) -> &[Rational] {
        &self.a
    }

    pub fn d(&self) -> usize {
        self.a.len() - 1
    }
}

/// `q_k = d binom(d - 1, k) (a_{k+1} - a_k)`, the coefficients of
/// `(1 + u) V'(u) - d V(u)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QNumerator {
    #[serde(with = "serde_rational_vec")]
    q: Vec<Rational>,
}

impl QNumerator {
    pub fn from_sequence(s: &IntersectionSequence) -> Self {
        let d = s.d() as i64;
        let a = s.a();
        let q = (0..s.d())
            .map(|k| {
                Rational::from_integer(d.into()) * binomial_q(d - 1, k as i64) * (&a[k + 1] - &a[k])
            })
            .collect();
        QNumerator { q }
    }

    pub fn q(&self) -> &[Rational] {
        &self.q
    }
}

pub fn volume_polynomial(s: &IntersectionSequence) -> Polynomial {
    let d = s.d();
    let coeffs = s
        .a()
        .iter()
        .enumerate()
        .map(|(k, ak)| binomial_q(d as i64, k as i64) * ak)
        .collect();
    Polynomial::new(coeffs, d).expect("length is d + 1")
}

pub fn volume_q(s: &IntersectionSequence) -> QNumerator {
    QNumerator::from_sequence(s)
}

fn check_index(d: usize, r: usize) -> Result<()> {
    if r == 0 || 2 * r > d {
        return Err(Error::Index {
            index: r as i64,
            reason: format!("need 1 <= r <= d/2 = {}", d / 2),
        });
    }
    Ok(())
}

/// `r gamma_r = [u^(r-1)] Q(u) / (1 + u)^(d - 2r + 1)`.
pub fn volume_gamma(s: &IntersectionSequence, r: usize) -> Result<Rational> {
    let d = s.d();
    check_index(d, r)?;
    let q = volume_q(s);
    Ok(numerator_sum(q.q(), d, r) / Rational::from_integer(r.into()))
}

/// Terms `binom(d - r - 1 - i, r - 1 - i) q_i` of the alternating sum for
/// `r gamma_r`.
fn weighted_terms(q: &QNumerator, d: usize, r: usize) -> Vec<Rational> {
    let (ri, di) = (r as i64, d as i64);
    (0..r)
        .map(|i| {
            let ii = i as i64;
            binomial_q(di - ri - 1 - ii, ri - 1 - ii) * &q.q()[i]
        })
        .collect()
}

/// Sign of `gamma_r` for `a_k = a0 rho^k`, with `sgn q_0 = sgn(a0 (rho - 1))`.
///
/// * `rho <= 0`: every term of the alternating sum has the same sign, so
///   `sgn gamma_r = (-1)^(r-1) sgn q_0`;
/// * `0 < rho < 1`: the same sign, claimed only when the weighted terms are
///   non-increasing in magnitude on the concrete sequence;
/// * `(d-k-1) rho / (k+1) > (d-r-k-1) / (r-k-1)` for `0 <= k <= r - 2`
///   (implied by `rho > d - 2r + 1`): `sgn gamma_r = sgn q_0`.
///
/// Anything else is unknown. The witness is always the exact `gamma_r`.
pub fn constant_ratio_classify(
    rho: &Rational,
    a0: &Rational,
    d: usize,
    r: usize,
) -> Result<SignClaim> {
    check_index(d, r)?;
    let seq = IntersectionSequence::geometric(a0, rho, d)?;
    let witness = volume_gamma(&seq, r)?;
    let q0 = sign_of(&(a0 * (rho - Rational::one()))) as i64;
    let alternating = sign_power(r as i64 - 1) * q0;

    if q0 == 0 {
        return SignClaim::new(r, Quantity::GammaR, Sign::Zero, "q vanishes", witness);
    }
    if rho.is_negative() {
        return SignClaim::new(
            r,
            Quantity::GammaR,
            Sign::strict(alternating),
            "rho < 0",
            witness,
        );
    }
    if rho.is_zero() {
        return SignClaim::new(
            r,
            Quantity::GammaR,
            Sign::strict(alternating),
            "rho = 0",
            witness,
        );
    }
    if rho < &Rational::one() {
        let terms = weighted_terms(&volume_q(&seq), d, r);
        if magnitudes_non_increasing(&terms) {
            let claim = Sign::weak(alternating).sharpen(&witness);
            return SignClaim::new(
                r,
                Quantity::GammaR,
                claim,
                "0 < rho < 1 with non-increasing terms",
                witness,
            );
        }
        return Ok(SignClaim::unknown(r, Quantity::GammaR, witness));
    }
    let (ri, di) = (r as i64, d as i64);
    let threshold = Rational::from_integer((di - 2 * ri + 1).into());
    let large = rho > &threshold
        || (0..ri - 1).all(|k| {
            Rational::from_integer((di - k - 1).into()) * rho
                / Rational::from_integer((k + 1).into())
                > Rational::new((di - ri - k - 1).into(), (ri - k - 1).into())
        });
    if large {
        return SignClaim::new(r, Quantity::GammaR, Sign::strict(q0), "rho large", witness);
    }
    Ok(SignClaim::unknown(r, Quantity::GammaR, witness))
}

/// Sign rules for general sequences, one entry per rule whose hypothesis
/// holds:
///
/// * `sgn q_k = (-1)^k sgn q_0` for all `k`: `sgn gamma_r = (-1)^(r-1) sgn q_0`;
/// * `(d-k-1)/(k+1) q_{k+1}/q_k > (d-r-k-1)/(r-k-1)` for `0 <= k <= r - 2`:
///   `sgn gamma_r = sgn q_0`;
/// * `a` nonnegative and decreasing: `sgn gamma_r = (-1)^r`, weakly.
///
/// A rule contradicted by the witness shows up as [`Error::ClaimRefuted`].
pub fn volbd_claims(s: &IntersectionSequence, r: usize) -> Result<Vec<Result<SignClaim>>> {
    let d = s.d();
    let witness = volume_gamma(s, r)?;
    let q = volume_q(s);
    let q = q.q();
    let q0 = sign_of(&q[0]) as i64;
    let mut out = Vec::new();

    let alternating = q0 != 0
        && q.iter()
            .enumerate()
            .all(|(k, x)| sign_of(x) as i64 == sign_power(k as i64) * q0);
    if alternating {
        let sign = Sign::strict(sign_power(r as i64 - 1) * q0);
        out.push(SignClaim::new(
            r,
            Quantity::GammaR,
            sign,
            "alternating q",
            witness.clone(),
        ));
    }

    let (ri, di) = (r as i64, d as i64);
    let ratio = q0 != 0
        && r >= 2
        && (0..ri - 1).all(|k| {
            let qk = &q[k as usize];
            !qk.is_zero()
                && Rational::new((di - k - 1).into(), (k + 1).into()) * &q[k as usize + 1] / qk
                    > Rational::new((di - ri - k - 1).into(), (ri - k - 1).into())
        });
    if ratio {
        out.push(SignClaim::new(
            r,
            Quantity::GammaR,
            Sign::strict(q0),
            "q ratio bound",
            witness.clone(),
        ));
    }

    let a = s.a();
    if a.iter().all(|x| !x.is_negative()) && a.windows(2).all(|w| w[0] >= w[1]) {
        let sign = Sign::weak(sign_power(r as i64)).sharpen(&witness);
        out.push(SignClaim::new(
            r,
            Quantity::GammaR,
            sign,
            "nonnegative decreasing a",
            witness.clone(),
        ));
    }
    Ok(out)
}

/// The first applicable rule of [`volbd_claims`], or unknown.
pub fn volbd_classify(s: &IntersectionSequence, r: usize) -> Result<SignClaim> {
    match volbd_claims(s, r)?.into_iter().next() {
        Some(claim) => claim,
        None => Ok(SignClaim::unknown(r, Quantity::GammaR, volume_gamma(s, r)?)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    /// `a_{i+1} / a_i <= C` for all `i`.
    Upper,
    /// `a_{i+1} / a_i >= C` for all `i`.
    Lower,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatioBound {
    pub kind: BoundKind,
    #[serde(with = "serde_rational")]
    pub c: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReduction {
    pub kind: BoundKind,
    #[serde(with = "serde_rational")]
    pub c: Rational,
    /// Checked on every consecutive pair.
    pub holds: bool,
    /// Checked on the first pair (upper) or last pair (lower) only.
    pub reduced: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LogConcaveReport {
    pub log_concave: bool,
    /// Every interior inequality is an equality.
    pub equality: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_violation: Option<usize>,
    pub positive: bool,
    /// `a_{k+1} / a_k`, present for positive sequences.
    #[serde(
        with = "serde_rational_vec",
        skip_serializing_if = "Vec::is_empty",
        default
    )]
    pub ratios: Vec<Rational>,
    pub ratios_non_increasing: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<BoundReduction>,
}

/// `a_k^2 >= a_{k-1} a_{k+1}` for interior `k`, plus the ratio chain of a
/// positive sequence and the pair reduction of an optional ratio bound.
pub fn log_concave_check(seq: &[Rational], bound: Option<&RatioBound>) -> LogConcaveReport {
    let first_violation =
        (1..seq.len().saturating_sub(1)).find(|&k| &seq[k] * &seq[k] < &seq[k - 1] * &seq[k + 1]);
    let equality =
        (1..seq.len().saturating_sub(1)).all(|k| &seq[k] * &seq[k] == &seq[k - 1] * &seq[k + 1]);
    let positive = seq.iter().all(|x| x.is_positive());
    let ratios: Vec<Rational> = if positive {
        seq.windows(2).map(|w| &w[1] / &w[0]).collect()
    } else {
        Vec::new()
    };
    let ratios_non_increasing = ratios.windows(2).all(|w| w[0] >= w[1]);
    let log_concave = first_violation.is_none();
    let bound = bound.filter(|_| positive && !ratios.is_empty()).map(|b| {
        let (holds, reduced) = match b.kind {
            BoundKind::Upper => (ratios.iter().all(|x| x <= &b.c), ratios[0] <= b.c),
            BoundKind::Lower => (
                ratios.iter().all(|x| x >= &b.c),
                ratios[ratios.len() - 1] >= b.c,
            ),
        };
        BoundReduction {
            kind: b.kind,
            c: b.c.clone(),
            holds,
            reduced,
        }
    });
    LogConcaveReport {
        log_concave,
        equality,
        first_violation,
        positive,
        ratios,
        ratios_non_increasing,
        bound,
    }
}
