//! Commands behind the `hesselink` binary, usable in-process.
//!
//! Every command returns a report value or a [`Failure`] carrying the exit
//! code; the binary only parses flags and prints.

pub mod report;

use std::fmt::Write as _;
use std::time::Instant;

use hesselink::{
    check_singular_if_unstable, classify, hesselink_bounds, max_multiplicity, verify_theorem1, Classification, Error,
    HomogeneousPolynomial, ProjectivePoint, Rational, SearchConfig,
};

use report::{
    approx, point_text, AnalysisReport, BatchError, BoundsJson, ErrorJson, InputEcho, MultiplicityJson, SearchMeta,
    StratumJson, Theorem1Json, Theorem1Outcome, Timing,
};

pub const EXIT_OK: u8 = 0;
/// A degree check failed, or a batch line could not be analyzed.
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_CAP: u8 = 3;

pub const DEFAULT_BUDGET: usize = 200;
pub const DEFAULT_CAP: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: u8,
    pub kind: String,
    pub message: String,
}

impl Failure {
    pub fn input(kind: &str, message: impl Into<String>) -> Self {
        Failure { code: EXIT_INPUT, kind: kind.into(), message: message.into() }
    }

    pub fn to_json(&self) -> ErrorJson {
        ErrorJson { kind: self.kind.clone(), message: self.message.clone() }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.kind, self.message)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let kind = match &e {
            Error::Syntax { .. } => "Syntax",
            Error::NonHomogeneous { .. } => "NonHomogeneous",
            Error::UnknownVariable { .. } => "UnknownVariable",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::ConstantPolynomial => "ConstantPolynomial",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::BelowGotzmann { .. } => "BelowGotzmann",
            Error::InvalidArgument(_) => "InvalidArgument",
            Error::ZeroVector => "ZeroVector",
            Error::SingularMatrix => "SingularMatrix",
            Error::NotLowerTriangular => "NotLowerTriangular",
            Error::CapExceeded { .. } => "CapExceeded",
            Error::HypothesisNotMet(_) => "HypothesisNotMet",
            Error::PreconditionViolated(_) => "PreconditionViolated",
        };
        let code = if matches!(e, Error::CapExceeded { .. }) { EXIT_CAP } else { EXIT_INPUT };
        Failure { code, kind: kind.into(), message: e.to_string() }
    }
}

/// Flags shared by `analyze` and `batch`.
#[derive(Debug, Clone)]
pub struct AnalyzeOptions {
    pub r: usize,
    pub budget: usize,
    pub seed: u64,
    pub points: Vec<ProjectivePoint>,
    /// Shift and cap for an extra degree-comparison check.
    pub theorem1: Option<(u32, u128)>,
    pub timing: bool,
}

impl AnalyzeOptions {
    pub fn new(r: usize) -> Self {
        AnalyzeOptions { r, budget: DEFAULT_BUDGET, seed: 0, points: Vec::new(), theorem1: None, timing: true }
    }
}

/// Candidate points, one per line as comma-separated rationals. Blank lines
/// and lines starting with `#` are skipped.
pub fn parse_points(text: &str, r: usize) -> Result<Vec<ProjectivePoint>, Failure> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| {
            ProjectivePoint::parse(l, r).map_err(|e| {
                let f = Failure::from(e);
                Failure { message: format!("points line {}: {}", i + 1, f.message), ..f }
            })
        })
        .collect()
}

pub fn analyze(text: &str, opts: &AnalyzeOptions) -> Result<AnalysisReport, Failure> {
    let start = Instant::now();
    let f = HomogeneousPolynomial::parse(text, opts.r)?;
    for p in &opts.points {
        if p.nvars() != f.nvars() {
            return Err(Error::DimensionMismatch { expected: f.nvars(), found: p.nvars() }.into());
        }
    }
    let theorem1 = match opts.theorem1 {
        Some((shift, cap)) => Some(Theorem1Json::from(&verify_theorem1(&f, shift, cap)?)),
        None => None,
    };
    let cfg = SearchConfig {
        budget: opts.budget,
        seed: opts.seed,
        candidate_points: opts.points.clone(),
        ..SearchConfig::default()
    };
    let classification = classify(&f, &cfg)?;
    let mult = max_multiplicity(&f, &opts.points)?;
    let examined = f.nvars() + opts.points.len();

    let mut warnings = Vec::new();
    let (bounds, singular) = match &classification {
        Classification::Unstable(label) => {
            // Only a single vertex d e_i sits at distance² d² r/(r+1); below that
            // the label may not be the worst one.
            let d = Rational::from_integer(f.degree().into());
            let r = Rational::from_integer(opts.r.into());
            if label.delta_squared < &d * &d * &r / (&r + Rational::from_integer(1.into())) {
                warnings.push(
                    "stratum found by a finite rational search; delta_squared is a lower bound for the worst 1-PS over the group"
                        .to_string(),
                );
            }
            let b = hesselink_bounds(label, f.degree(), opts.r)?;
            if !b.contains(mult.value) {
                warnings
                    .push("multiplicity lies outside the bounds; the search likely missed the worst stratum".into());
            }
            let singular = if f.degree() as usize > opts.r {
                Some(check_singular_if_unstable(label, f.degree(), opts.r)?)
            } else {
                None
            };
            (Some(BoundsJson::new(&b, mult.value)), singular)
        }
        Classification::NoDestabilizerFound(_) => {
            warnings.push("no destabilizer found; semistability is not certified".into());
            (None, None)
        }
    };
    warnings.push(format!("multiplicity is the maximum over {examined} examined points and is a lower bound"));

    Ok(AnalysisReport {
        input: InputEcho { r: opts.r, d: f.degree(), polynomial: f.to_string() },
        stratum: StratumJson::from_classification(&classification),
        bounds,
        multiplicity: MultiplicityJson::new(&mult, examined),
        singular_if_unstable: singular,
        theorem1,
        search: SearchMeta { budget: opts.budget, seed: opts.seed, candidate_points: opts.points.len() },
        warnings,
        timing: opts.timing.then(|| Timing { elapsed_ms: start.elapsed().as_millis() as u64 }),
    })
}

/// Exit code for a finished analysis.
pub fn analysis_exit_code(report: &AnalysisReport) -> u8 {
    match &report.theorem1 {
        Some(t) if !t.holds => EXIT_FAILED,
        _ => EXIT_OK,
    }
}

pub fn theorem1(text: &str, r: usize, shift: u32, cap: u128, timing: bool) -> Result<Theorem1Outcome, Failure> {
    let start = Instant::now();
    let f = HomogeneousPolynomial::parse(text, r)?;
    let report = verify_theorem1(&f, shift, cap)?;
    Ok(Theorem1Outcome {
        input: InputEcho { r, d: f.degree(), polynomial: f.to_string() },
        theorem1: Theorem1Json::from(&report),
        timing: timing.then(|| Timing { elapsed_ms: start.elapsed().as_millis() as u64 }),
    })
}

/// NDJSON output for a file of polynomials, one per non-blank line, and the
/// exit code: 1 if any line failed.
pub fn batch(text: &str, opts: &AnalyzeOptions) -> (Vec<String>, u8) {
    let mut out = Vec::new();
    let mut code = EXIT_OK;
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let json = match analyze(line, opts) {
            Ok(report) => serde_json::to_string(&report),
            Err(failure) => {
                code = EXIT_FAILED;
                serde_json::to_string(&BatchError { line: i + 1, input: line.to_string(), error: failure.to_json() })
            }
        };
        out.push(json.expect("report types always serialize"));
    }
    (out, code)
}

pub fn render_analysis(report: &AnalysisReport) -> String {
    let mut s = String::new();
    let InputEcho { r, d, polynomial } = &report.input;
    let _ = writeln!(s, "polynomial    {polynomial}  (r = {r}, d = {d})");
    match &report.stratum {
        StratumJson::Unstable { lambda_class, delta_squared, mu, witness_lambda, witness_g } => {
            let _ = writeln!(s, "stratum       unstable");
            let _ = writeln!(s, "  class       {lambda_class}");
            let _ = writeln!(s, "  delta^2     {}", approx(&delta_squared.0));
            let _ = writeln!(s, "  mu          {}", approx(&mu.0));
            let _ = writeln!(s, "  witness 1-PS {witness_lambda}");
            let rows: Vec<String> =
                witness_g.iter().map(|row| row.iter().map(|q| q.0.to_string()).collect::<Vec<_>>().join(" ")).collect();
            let _ = writeln!(s, "  witness g   [{}]", rows.join("; "));
        }
        StratumJson::Semistable { evaluated, message } => {
            let _ = writeln!(s, "stratum       semistable ({message}; {evaluated} elements tried)");
        }
    }
    if let Some(b) = &report.bounds {
        let _ = writeln!(s, "bounds        {}  <=  n  <=  {}", approx(&b.lower.0), approx(&b.upper.0));
    }
    let m = &report.multiplicity;
    let _ = writeln!(s, "multiplicity  {} at {}", m.value, point_text(&m.point));
    if let Some(sing) = report.singular_if_unstable {
        let _ = writeln!(s, "singular      {}", if sing { "forced by the lower bound" } else { "not forced" });
    }
    if let Some(t) = &report.theorem1 {
        s.push_str(&render_theorem1_body(t));
    }
    let _ = write!(s, "search        budget {}, seed {}", report.search.budget, report.search.seed);
    if let Some(t) = &report.timing {
        let _ = write!(s, ", {} ms", t.elapsed_ms);
    }
    s.push('\n');
    for w in &report.warnings {
        let _ = writeln!(s, "note: {w}");
    }
    s
}

fn render_theorem1_body(t: &Theorem1Json) -> String {
    let class = |c: &Option<report::Weights>| c.as_ref().map_or("none".to_string(), |w| w.to_string());
    format!(
        "degree check  {} (shift {}): delta^2 {} -> {} (expected {}), class {} -> {}\n",
        if t.holds { "PASS" } else { "FAIL" },
        t.shift,
        approx(&t.base_delta_squared.0),
        approx(&t.shifted_delta_squared.0),
        approx(&t.expected_delta_squared.0),
        class(&t.base_class),
        class(&t.shifted_class),
    )
}

pub fn render_theorem1(outcome: &Theorem1Outcome) -> String {
    let InputEcho { r, d, polynomial } = &outcome.input;
    let mut s = format!("polynomial    {polynomial}  (r = {r}, d = {d})\n");
    s.push_str(&render_theorem1_body(&outcome.theorem1));
    let _ = writeln!(
        s,
        "states        {} -> {} weights",
        outcome.theorem1.base_state_size, outcome.theorem1.shifted_state_size
    );
    if let Some(t) = &outcome.timing {
        let _ = writeln!(s, "elapsed       {} ms", t.elapsed_ms);
    }
    s
}
