//! JSON in, JSON out front end for `gammavec`.
//!
//! Exit codes: 0 on success, 1 on malformed input or usage errors, 2 when a
//! classification is unknown or refuted, an identity check fails, or a
//! verification suite records a violation.

use std::fs;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gammavec::bounds::{alternating_sum_sign, Monotonicity};
use gammavec::rational::{serde_rational, serde_rational_vec};
use gammavec::simplicial::fhex_violations;
use gammavec::volume::{log_concave_check, volbd_classify, RatioBound};
use gammavec::{
    boundgam_classify, constant_ratio_classify, f_vector, fhex_realizable, gamauxpo_decompose,
    gamma_by_basis, gamma_extended, gamma_matrix, h_from_gamma, link, run_suite, shiftgam_classify,
    verify_h_link_identity, verify_link_f_identity, volume_gamma, volume_polynomial, volume_q,
    AuxVariant, Error, FHVectors, GammaVector, IntersectionSequence, Polynomial, Rational,
    SignClaim, SimplicialComplex, Suite, VerifyOptions,
};
use num_traits::One;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_FAILURE: i32 = 2;

pub const DEFAULT_SEED: u64 = 0;
pub const DEFAULT_TRIALS: usize = 100;

#[derive(Debug, Parser)]
#[command(
    name = "gammavec",
    version,
    about = "Exact gamma vectors and related identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Read the JSON input from a file, or `-` for standard input.
    #[arg(long, global = true, value_name = "PATH")]
    input: Option<String>,

    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Number of random trials for `verify`.
    #[arg(long, global = true, default_value_t = DEFAULT_TRIALS)]
    trials: usize,

    /// Truncation order for extended gamma vectors.
    #[arg(long, global = true)]
    order: Option<usize>,

    /// Which auxiliary decomposition to build.
    #[arg(long, global = true, value_enum, default_value_t = VariantArg::Part1)]
    variant: VariantArg,

    /// Use the uncorrected closed forms in `verify` suites.
    #[arg(long, global = true)]
    diagnostic_printed_formulas: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VariantArg {
    Part1,
    Part2,
}

#[derive(Debug, Args)]
struct InputArg {
    /// Inline JSON input; overrides --input.
    json: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Gamma vector of a polynomial {"coeffs", "formal_degree"}.
    Gamma(InputArg),
    /// Coefficient matrix {"formal_degree", "max_row"?, "coeffs"?}.
    GammaMatrix(InputArg),
    /// Polynomial from a gamma vector {"entries", "formal_degree"}.
    Inverse(InputArg),
    /// Sign of gamma_r for a shifted reciprocal {"a", "d"?, "r"}.
    ClassifyShift(InputArg),
    /// Coefficient-pattern sign {"b", "d"?, "r"}, or an alternating sum
    /// {"sequence", "monotonicity", "start_parity"?}.
    ClassifyBounds(InputArg),
    /// Volume polynomial data {"a", "d", "r"?}.
    VolumeGamma(InputArg),
    /// Constant ratio {"rho", "a0", "d", "r"}, a sequence {"a", "d", "r"},
    /// or log-concavity {"sequence", "bound"?}.
    ClassifyVolume(InputArg),
    /// f/h-vectors and link identities of {"facets", "link_of"?}.
    SimplicialVerify(InputArg),
    /// f/h transform of {"f", "d"?}, {"h", "d"} or {"facets"}.
    FhTransform(InputArg),
    /// Simplicial-poset bounds for {"f"}.
    Realizable(InputArg),
    /// Auxiliary f/h decomposition of {"b", "d"?, "r"}.
    DecomposeAux(InputArg),
    /// Both link identities for {"facets"}.
    VerifyIdentities(InputArg),
    /// Run a seeded randomized property suite.
    Verify {
        /// agreement, catalan, lagrange, shiftgam, boundgam, volume,
        /// simplicial or auxpo.
        suite: String,
    },
}

impl Command {
    fn inline(&self) -> Option<&str> {
        match self {
            Command::Gamma(a)
            | Command::GammaMatrix(a)
            | Command::Inverse(a)
            | Command::ClassifyShift(a)
            | Command::ClassifyBounds(a)
            | Command::VolumeGamma(a)
            | Command::ClassifyVolume(a)
            | Command::SimplicialVerify(a)
            | Command::FhTransform(a)
            | Command::Realizable(a)
            | Command::DecomposeAux(a)
            | Command::VerifyIdentities(a) => a.json.as_deref(),
            Command::Verify { .. } => None,
        }
    }
}

/// Verb names accepted on the command line.
pub const VERBS: &[&str] = &[
    "gamma",
    "gamma-matrix",
    "inverse",
    "classify-shift",
    "classify-bounds",
    "volume-gamma",
    "classify-volume",
    "simplicial-verify",
    "fh-transform",
    "realizable",
    "decompose-aux",
    "verify-identities",
    "verify",
];

/// Library operation and a verb that reaches it.
pub const COVERAGE: &[(&str, &str)] = &[
    ("reciprocal", "verify shiftgam"),
    ("translate", "verify shiftgam"),
    ("derivative", "gamma"),
    ("expand_binomial_power", "gamma"),
    ("series_divide", "gamma"),
    ("series_compose", "gamma"),
    ("catalan", "verify catalan"),
    ("catalan_power_coeff", "gamma-matrix"),
    ("catalan_convolution_shifted", "verify catalan"),
    ("catalan_convolution_unshifted", "verify catalan"),
    ("lagrange_coefficient", "verify lagrange"),
    ("gamma_by_basis", "gamma"),
    ("gamma_extended", "gamma"),
    ("gamma_catalan_formula", "verify agreement"),
    ("gamma_derivative_formula", "verify agreement"),
    ("gamma_matrix", "gamma-matrix"),
    ("h_from_gamma", "inverse"),
    ("f_vector", "fh-transform"),
    ("link", "simplicial-verify"),
    ("verify_link_f_identity", "verify-identities"),
    ("verify_h_link_identity", "verify-identities"),
    ("fhex_realizable", "realizable"),
    ("gamauxpo_decompose", "decompose-aux"),
    ("shiftgam_gamma", "classify-shift"),
    ("shiftgam_classify", "classify-shift"),
    ("ftypesum_gamma", "classify-bounds"),
    ("alternating_sum_sign", "classify-bounds"),
    ("boundgam_classify", "classify-bounds"),
    ("volume_polynomial", "volume-gamma"),
    ("volume_q", "volume-gamma"),
    ("volume_gamma", "volume-gamma"),
    ("constant_ratio_classify", "classify-volume"),
    ("log_concave_check", "classify-volume"),
    ("verify", "verify"),
];

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(value: &impl Serialize) -> Self {
        Self::with_code(EXIT_OK, value)
    }

    fn with_code(code: i32, value: &impl Serialize) -> Self {
        Outcome {
            code,
            stdout: format!("{}\n", serde_json::to_string(value).expect("serializable")),
            stderr: String::new(),
        }
    }

    fn input_error(message: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("{}\n", json!({"error": message.to_string()})),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// `stdin` is read only when no inline JSON or input path is given.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: EXIT_INPUT,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    if let Command::Verify { suite } = &cli.command {
        return verify(&cli, suite);
    }
    let text = match read_input(&cli, stdin) {
        Ok(t) => t,
        Err(e) => return Outcome::input_error(e),
    };
    let value: Value = match serde_json::from_str(&text) {
        Ok(v) => v,
        Err(e) => return Outcome::input_error(format!("invalid JSON: {e}")),
    };
    let result = match &cli.command {
        Command::Gamma(_) => gamma(&cli, value),
        Command::GammaMatrix(_) => gamma_matrix_verb(value),
        Command::Inverse(_) => inverse(value),
        Command::ClassifyShift(_) => classify_shift(value),
        Command::ClassifyBounds(_) => classify_bounds(value),
        Command::VolumeGamma(_) => volume_gamma_verb(value),
        Command::ClassifyVolume(_) => classify_volume(value),
        Command::SimplicialVerify(_) => simplicial_verify(value),
        Command::FhTransform(_) => fh_transform(value),
        Command::Realizable(_) => realizable(value),
        Command::DecomposeAux(_) => decompose_aux(&cli, value),
        Command::VerifyIdentities(_) => verify_identities(value),
        Command::Verify { .. } => unreachable!("handled above"),
    };
    result.unwrap_or_else(error_outcome)
}

fn read_input(cli: &Cli, stdin: &mut dyn Read) -> Result<String, String> {
    if let Some(inline) = cli.command.inline() {
        return Ok(inline.to_string());
    }
    match cli.input.as_deref() {
        Some(path) if path != "-" => {
            fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))
        }
        _ => {
            let mut text = String::new();
            stdin
                .read_to_string(&mut text)
                .map_err(|e| format!("cannot read standard input: {e}"))?;
            Ok(text)
        }
    }
}

enum Failure {
    Input(String),
    Library(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

fn error_outcome(f: Failure) -> Outcome {
    match f {
        Failure::Input(msg) => Outcome::input_error(msg),
        Failure::Library(Error::ClaimRefuted {
            r,
            hypothesis,
            claimed,
            witness,
        }) => Outcome::with_code(
            EXIT_FAILURE,
            &json!({
                "refuted": true,
                "r": r,
                "hypothesis": hypothesis,
                "claimed_sign": claimed,
                "witness": gammavec::format_rational(&witness),
            }),
        ),
        Failure::Library(e) => Outcome::input_error(e),
    }
}

type VerbResult = Result<Outcome, Failure>;

fn parse<T: DeserializeOwned>(value: Value) -> Result<T, Failure> {
    serde_json::from_value(value)
        .map_err(|e| Failure::Input(format!("input does not match schema: {e}")))
}

fn has(value: &Value, key: &str) -> bool {
    value.get(key).is_some()
}

fn claim_outcome(claim: SignClaim) -> Outcome {
    let code = if claim.is_unknown() {
        EXIT_FAILURE
    } else {
        EXIT_OK
    };
    Outcome::with_code(code, &claim)
}

#[derive(Serialize)]
struct GammaOut<'a> {
    #[serde(with = "serde_rational_vec")]
    entries: &'a [Rational],
    extended: bool,
}

fn gamma(cli: &Cli, value: Value) -> VerbResult {
    let h: Polynomial = parse(value)?;
    let n = h.formal_degree();
    let g = match cli.order {
        None if h.is_reciprocal() => gamma_by_basis(&h)?,
        order => gamma_extended(&h, order.unwrap_or(n / 2)),
    };
    Ok(Outcome::ok(&GammaOut {
        entries: &g.entries,
        extended: g.extended,
    }))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixIn {
    formal_degree: usize,
    max_row: Option<usize>,
    #[serde(default, with = "serde_rational_vec")]
    coeffs: Vec<Rational>,
}

fn gamma_matrix_verb(value: Value) -> VerbResult {
    let input: MatrixIn = parse(value)?;
    let n = input.formal_degree;
    let matrix = gamma_matrix(n, input.max_row.unwrap_or(n / 2));
    if input.coeffs.is_empty() {
        return Ok(Outcome::ok(&json!({ "matrix": matrix })));
    }
    let h = Polynomial::new(input.coeffs, n)?;
    let product: Vec<String> = matrix
        .apply(&h)?
        .iter()
        .map(gammavec::format_rational)
        .collect();
    Ok(Outcome::ok(&json!({ "matrix": matrix, "gamma": product })))
}

fn inverse(value: Value) -> VerbResult {
    let g: GammaVector = parse(value)?;
    Ok(Outcome::ok(&h_from_gamma(&g)?))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct IndexedSequence {
    #[serde(alias = "a", alias = "b", with = "serde_rational_vec")]
    coeffs: Vec<Rational>,
    d: Option<usize>,
    r: usize,
}

impl IndexedSequence {
    fn degree(&self) -> Result<usize, Failure> {
        match self.d {
            Some(d) => Ok(d),
            None if !self.coeffs.is_empty() => Ok(self.coeffs.len() - 1),
            None => Err(Failure::Input("empty coefficient sequence".into())),
        }
    }
}

fn classify_shift(value: Value) -> VerbResult {
    let input: IndexedSequence = parse(value)?;
    let d = input.degree()?;
    Ok(claim_outcome(shiftgam_classify(&input.coeffs, d, input.r)?))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AlternatingIn {
    #[serde(with = "serde_rational_vec")]
    sequence: Vec<Rational>,
    monotonicity: Monotonicity,
    #[serde(default)]
    start_parity: u8,
}

fn classify_bounds(value: Value) -> VerbResult {
    if has(&value, "sequence") {
        let input: AlternatingIn = parse(value)?;
        let report =
            alternating_sum_sign(&input.sequence, input.monotonicity, input.start_parity % 2)?;
        return Ok(Outcome::ok(&report));
    }
    let input: IndexedSequence = parse(value)?;
    let d = input.degree()?;
    Ok(claim_outcome(boundgam_classify(&input.coeffs, d, input.r)?))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct VolumeIn {
    #[serde(with = "serde_rational_vec")]
    a: Vec<Rational>,
    d: usize,
    r: Option<usize>,
}

impl VolumeIn {
    fn sequence(&self) -> Result<IntersectionSequence, Failure> {
        if self.a.len() != self.d + 1 {
            return Err(Failure::Input(format!(
                "intersection sequence for d = {} needs {} entries, got {}",
                self.d,
                self.d + 1,
                self.a.len()
            )));
        }
        Ok(IntersectionSequence::new(self.a.clone())?)
    }
}

#[derive(Serialize)]
struct VolumeOut {
    d: usize,
    #[serde(with = "serde_rational_vec")]
    polynomial: Vec<Rational>,
    #[serde(with = "serde_rational_vec")]
    q: Vec<Rational>,
    /// `gamma_0, ..., gamma_{floor(d/2)}`.
    #[serde(with = "serde_rational_vec")]
    gamma: Vec<Rational>,
    log_concave: gammavec::LogConcaveReport,
}

#[derive(Serialize)]
struct SingleGamma {
    r: usize,
    #[serde(with = "serde_rational")]
    gamma: Rational,
}

fn volume_gamma_verb(value: Value) -> VerbResult {
    let input: VolumeIn = parse(value)?;
    let s = input.sequence()?;
    if let Some(r) = input.r {
        return Ok(Outcome::ok(&SingleGamma {
            r,
            gamma: volume_gamma(&s, r)?,
        }));
    }
    let d = s.d();
    let mut gamma = vec![s.a()[0].clone()];
    for r in 1..=d / 2 {
        gamma.push(volume_gamma(&s, r)?);
    }
    Ok(Outcome::ok(&VolumeOut {
        d,
        polynomial: volume_polynomial(&s).into_coeffs(),
        q: volume_q(&s).q().to_vec(),
        gamma,
        log_concave: log_concave_check(s.a(), None),
    }))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ConstantRatioIn {
    #[serde(with = "serde_rational")]
    rho: Rational,
    #[serde(default = "Rational::one", with = "serde_rational")]
    a0: Rational,
    d: usize,
    r: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LogConcaveIn {
    #[serde(with = "serde_rational_vec")]
    sequence: Vec<Rational>,
    bound: Option<RatioBound>,
}

fn classify_volume(value: Value) -> VerbResult {
    if has(&value, "rho") {
        let input: ConstantRatioIn = parse(value)?;
        return Ok(claim_outcome(constant_ratio_classify(
            &input.rho, &input.a0, input.d, input.r,
        )?));
    }
    if has(&value, "sequence") {
        let input: LogConcaveIn = parse(value)?;
        return Ok(Outcome::ok(&log_concave_check(
            &input.sequence,
            input.bound.as_ref(),
        )));
    }
    let input: VolumeIn = parse(value)?;
    let r = input
        .r
        .ok_or_else(|| Failure::Input("missing field `r`".into()))?;
    let s = input.sequence()?;
    Ok(claim_outcome(volbd_classify(&s, r)?))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexIn {
    facets: Vec<Vec<String>>,
    link_of: Option<Vec<String>>,
}

impl ComplexIn {
    fn complex(&self) -> Result<SimplicialComplex, Failure> {
        Ok(SimplicialComplex::from_facets(&self.facets)?)
    }
}

fn simplicial_verify(value: Value) -> VerbResult {
    let input: ComplexIn = parse(value)?;
    let k = input.complex()?;
    if let Some(face) = &input.link_of {
        let lk = link(&k, face)?;
        return Ok(Outcome::ok(
            &json!({ "link": lk.to_json(), "f": f_vector(&lk) }),
        ));
    }
    let f_report = verify_link_f_identity(&k);
    let h_report = verify_h_link_identity(&k);
    let code = if f_report.holds && h_report.holds {
        EXIT_OK
    } else {
        EXIT_FAILURE
    };
    Ok(Outcome::with_code(
        code,
        &json!({
            "f": f_vector(&k),
            "link_f_identity": f_report,
            "h_link_identity": h_report,
        }),
    ))
}

fn verify_identities(value: Value) -> VerbResult {
    let input: ComplexIn = parse(value)?;
    let k = input.complex()?;
    let f_identity = verify_link_f_identity(&k).holds;
    let h_identity = verify_h_link_identity(&k).holds;
    let code = if f_identity && h_identity {
        EXIT_OK
    } else {
        EXIT_FAILURE
    };
    Ok(Outcome::with_code(
        code,
        &json!({"f_identity": f_identity, "h_identity": h_identity}),
    ))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TransformIn {
    #[serde(default, with = "serde_rational_vec")]
    f: Vec<Rational>,
    #[serde(default, with = "serde_rational_vec")]
    h: Vec<Rational>,
    d: Option<i64>,
    facets: Option<Vec<Vec<String>>>,
}

fn fh_transform(value: Value) -> VerbResult {
    let input: TransformIn = parse(value)?;
    let given = [
        !input.f.is_empty(),
        !input.h.is_empty(),
        input.facets.is_some(),
    ];
    if given.iter().filter(|&&g| g).count() != 1 {
        return Err(Failure::Input(
            "give exactly one of `f`, `h` or `facets`".into(),
        ));
    }
    if let Some(facets) = &input.facets {
        return Ok(Outcome::ok(&f_vector(&SimplicialComplex::from_facets(
            facets,
        )?)));
    }
    if !input.h.is_empty() {
        let d = input
            .d
            .ok_or_else(|| Failure::Input("`h` needs `d`".into()))?;
        return Ok(Outcome::ok(&FHVectors::from_h(input.h, d)));
    }
    let natural = input.f.len() as i64 - 1;
    let fh = match input.d {
        Some(d) if d != natural => FHVectors::formal(input.f, d),
        _ if input.f[0].is_one() => FHVectors::from_f(input.f)?,
        _ => FHVectors::formal(input.f, natural),
    };
    Ok(Outcome::ok(&fh))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RealizableIn {
    #[serde(with = "serde_rational_vec")]
    f: Vec<Rational>,
}

fn realizable(value: Value) -> VerbResult {
    let input: RealizableIn = parse(value)?;
    let fh = FHVectors::from_f(input.f)?;
    let realizable = fhex_realizable(&fh)?;
    let violations = fhex_violations(&fh)?;
    Ok(Outcome::ok(
        &json!({"realizable": realizable, "violations": violations}),
    ))
}

fn decompose_aux(cli: &Cli, value: Value) -> VerbResult {
    let input: IndexedSequence = parse(value)?;
    let d = input.degree()?;
    let variant = match cli.variant {
        VariantArg::Part1 => AuxVariant::Part1,
        VariantArg::Part2 => AuxVariant::Part2,
    };
    Ok(Outcome::ok(&gamauxpo_decompose(
        &input.coeffs,
        d,
        input.r,
        variant,
    )?))
}

fn verify(cli: &Cli, suite: &str) -> Outcome {
    let suite: Suite = match suite.parse() {
        Ok(s) => s,
        Err(e) => return Outcome::input_error(e),
    };
    let opts = VerifyOptions {
        seed: cli.seed,
        trials: cli.trials,
        printed_formulas: cli.diagnostic_printed_formulas,
    };
    let report = run_suite(suite, &opts);
    let code = if report.passed() {
        EXIT_OK
    } else {
        EXIT_FAILURE
    };
    Outcome::with_code(code, &report)
}
