//! polyinv: exact inversion of polynomial maps and preimages of points and
//! parametrized curves, with an iterative filtration engine and a
//! Groebner-basis engine that cross-check each other.
//!
//! Exit codes: 0 definitive answer, 1 usage or input error, 2 budget
//! exhausted (unknown), 4 engine discrepancy under `--engine both`.

mod affine;
mod report;
mod session;

use affine::{affine_normalize, translation_normalize, AffineNormalization};
use clap::{Parser, Subcommand};
use polyinv_core::endo::{Curve, PolyMap};
use polyinv_core::filtration::FiltrationSpec;
use polyinv_core::groebner::{
    gb_curve_preimage_with, gb_inverse_with, gb_point_preimage_with, CurvePreimageViaGroebner,
    InverseViaGroebner, PointPreimageViaGroebner,
};
use polyinv_core::inverse::{iterative_inverse_traced, InverseOutcome};
use polyinv_core::preimage::{curve_preimage, point_preimage, PointPreimageOutcome, PreimageOutcome};
use polyinv_core::tame::{sample_affine_tame, TameConfig};
use polyinv_core::text;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use report::{Report, EXIT_DISCREPANCY, EXIT_UNKNOWN, EXIT_USAGE};
use session::{Engine, InnerOrder, OutputFormat, SessionConfig};
use std::fmt;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "polyinv",
    version,
    about = "Exact inversion of polynomial maps and preimages of points and curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invert a map: iterative filtration engine, Groebner engine, or both
    Invert {
        /// Map literal, e.g. `[x + 2*y + 4*x^2, y + 2*x^2] over ZZ[x,y]`
        map: String,
        /// `degree` or `padic:<p>`
        #[arg(long, default_value = "degree")]
        filtration: String,
        /// Iteration cap (default: degree bound + 1, or 64 for p-adic)
        #[arg(long)]
        budget: Option<u32>,
        #[arg(long, value_enum, default_value_t = Engine::Iterative)]
        engine: Engine,
        /// Within-block monomial order for the Groebner engine
        #[arg(long, value_enum, default_value_t = InnerOrder::Grevlex)]
        order: InnerOrder,
        #[arg(long, value_enum, default_value_t = OutputFormat::Pretty)]
        format: OutputFormat,
        /// Also print the iterate ladder K_0, K_1, ...
        #[arg(long)]
        verbose: bool,
    },
    /// Invert via the Groebner shape criterion only
    GbInvert {
        map: String,
        #[arg(long, value_enum, default_value_t = InnerOrder::Grevlex)]
        order: InnerOrder,
        #[arg(long, value_enum, default_value_t = OutputFormat::Pretty)]
        format: OutputFormat,
    },
    /// Preimage of a point or a parametrized curve (t-adic iteration)
    Preimage {
        map: String,
        /// Point coordinates, e.g. `1,1` or `1/2,-3`
        #[arg(long, conflicts_with = "curve")]
        point: Option<String>,
        /// Curve literal, e.g. `[t + 4*t^4, 2*t^2] over QQ[t]`
        #[arg(long)]
        curve: Option<String>,
        /// t-degree cap (default: degree bound of the map times deg_t f)
        #[arg(long = "max-deg")]
        max_deg: Option<u32>,
        /// Accepted for symmetry with invert and ignored: the curve
        /// iteration is always t-adic
        #[arg(long, hide = true)]
        filtration: Option<String>,
        #[arg(long, value_enum, default_value_t = Engine::Iterative)]
        engine: Engine,
        #[arg(long, value_enum, default_value_t = InnerOrder::Grevlex)]
        order: InnerOrder,
        #[arg(long, value_enum, default_value_t = OutputFormat::Pretty)]
        format: OutputFormat,
        #[arg(long)]
        verbose: bool,
    },
    /// Preimage via Groebner bases only
    GbPreimage {
        map: String,
        #[arg(long, conflicts_with = "curve")]
        point: Option<String>,
        #[arg(long)]
        curve: Option<String>,
        #[arg(long, value_enum, default_value_t = InnerOrder::Grevlex)]
        order: InnerOrder,
        #[arg(long, value_enum, default_value_t = OutputFormat::Pretty)]
        format: OutputFormat,
    },
    /// Check that two maps compose to the identity both ways
    Verify {
        map: String,
        candidate: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Pretty)]
        format: OutputFormat,
    },
    /// Reproducible benchmark over seeded random tame automorphisms
    Bench {
        /// Generator seed; printed so runs can be reproduced exactly
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        count: u32,
        #[arg(long, default_value_t = 2)]
        nvars: usize,
        #[arg(long, value_enum, default_value_t = Engine::Iterative)]
        engine: Engine,
        #[arg(long, value_enum, default_value_t = OutputFormat::Pretty)]
        format: OutputFormat,
    },
}

/// Any input or precondition failure: reported on stderr with exit 1.
struct CliError(String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

macro_rules! wrap_error {
    ($($ty:ty),*) => {
        $(impl From<$ty> for CliError {
            fn from(e: $ty) -> Self {
                CliError(e.to_string())
            }
        })*
    };
}

wrap_error!(
    polyinv_core::text::ParseError,
    polyinv_core::endo::EndoError,
    polyinv_core::poly::PolyError,
    polyinv_core::ring::RingError,
    polyinv_core::filtration::FiltrationError,
    polyinv_core::inverse::InverseError,
    polyinv_core::preimage::PreimageError,
    polyinv_core::groebner::GroebnerError,
    affine::AffineError
);

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Invert {
            map,
            filtration,
            budget,
            engine,
            order,
            format,
            verbose,
        } => {
            let config = SessionConfig {
                filtration: filtration.parse()?,
                engine,
                format,
                order,
                budget: SessionConfig::budget_override(budget),
                max_degree: None,
                verbose,
            };
            let map = text::parse_map(&map)?;
            Ok(cmd_invert(&map, &config)?.emit(config.format))
        }
        Command::GbInvert { map, order, format } => {
            let config = SessionConfig {
                filtration: FiltrationSpec::Degree,
                engine: Engine::Groebner,
                format,
                order,
                budget: None,
                max_degree: None,
                verbose: false,
            };
            let map = text::parse_map(&map)?;
            Ok(cmd_invert(&map, &config)?.emit(config.format))
        }
        Command::Preimage {
            map,
            point,
            curve,
            max_deg,
            filtration: _,
            engine,
            order,
            format,
            verbose,
        } => {
            let config = SessionConfig {
                filtration: FiltrationSpec::Degree,
                engine,
                format,
                order,
                budget: None,
                max_degree: SessionConfig::budget_override(max_deg),
                verbose,
            };
            let map = text::parse_map(&map)?;
            Ok(cmd_preimage(&map, point.as_deref(), curve.as_deref(), &config)?.emit(config.format))
        }
        Command::GbPreimage {
            map,
            point,
            curve,
            order,
            format,
        } => {
            let config = SessionConfig {
                filtration: FiltrationSpec::Degree,
                engine: Engine::Groebner,
                format,
                order,
                budget: None,
                max_degree: None,
                verbose: false,
            };
            let map = text::parse_map(&map)?;
            Ok(cmd_preimage(&map, point.as_deref(), curve.as_deref(), &config)?.emit(config.format))
        }
        Command::Verify {
            map,
            candidate,
            format,
        } => {
            let map = text::parse_map(&map)?;
            let candidate = text::parse_map(&candidate)?;
            Ok(cmd_verify(&map, &candidate)?.emit(format))
        }
        Command::Bench {
            seed,
            count,
            nvars,
            engine,
            format,
        } => Ok(cmd_bench(seed, count, nvars, engine)?.emit(format)),
    }
}

// ---------------------------------------------------------------- invert

struct IterativeInversion {
    outcome: InverseOutcome,
    trace: Vec<PolyMap>,
    normalization: Option<AffineNormalization>,
}

/// Runs the iterative engine, normalizing as the filtration demands: the
/// degree path needs a centered map with identity linear part, the p-adic
/// path only needs centering.
fn run_iterative_invert(
    map: &PolyMap,
    spec: &FiltrationSpec,
    budget: Option<u32>,
) -> Result<IterativeInversion, CliError> {
    let normalization = match spec {
        FiltrationSpec::Degree => {
            if map.is_centered() && map.has_identity_linear_part() {
                None
            } else {
                Some(affine_normalize(map)?)
            }
        }
        FiltrationSpec::PAdic(_) => {
            if map.is_centered() {
                None
            } else {
                Some(translation_normalize(map)?)
            }
        }
    };
    let target = normalization.as_ref().map_or(map, |n| &n.normalized);
    let run = iterative_inverse_traced(target, spec, budget)?;
    // conjugate back: F = L o F', so F^-1 = F'^-1 o L^-1
    let outcome = match run.outcome {
        InverseOutcome::Inverted { inverse, iterations } => {
            let inverse = match &normalization {
                Some(n) => inverse.compose(&n.l_inverse)?,
                None => inverse,
            };
            InverseOutcome::Inverted { inverse, iterations }
        }
        other => other,
    };
    Ok(IterativeInversion {
        outcome,
        trace: run.trace,
        normalization,
    })
}

fn cmd_invert(map: &PolyMap, config: &SessionConfig) -> Result<Report, CliError> {
    let start = Instant::now();
    let mut report = Report::new("invert");
    report.field(
        "engine",
        match config.engine {
            Engine::Iterative => "iterative",
            Engine::Groebner => "groebner",
            Engine::Both => "both",
        },
    );
    report.field("input.map", map);
    report.field("input.filtration", config.filtration);

    let iterative = match config.engine {
        Engine::Iterative | Engine::Both => {
            Some(run_iterative_invert(map, &config.filtration, config.budget)?)
        }
        Engine::Groebner => None,
    };
    let groebner = match config.engine {
        Engine::Groebner | Engine::Both => {
            Some(gb_inverse_with(map, config.order.as_order())?)
        }
        Engine::Iterative => None,
    };

    if let Some(run) = &iterative {
        if let Some(n) = &run.normalization {
            report.field("normalization.l", &n.l);
            report.field("normalization.f_prime", &n.normalized);
        }
        let prefix = if config.engine == Engine::Both {
            "iterative."
        } else {
            ""
        };
        match &run.outcome {
            InverseOutcome::Inverted { inverse, iterations } => {
                report.field(&format!("{prefix}status"), "inverted");
                report.field(&format!("{prefix}iterations"), iterations);
                report.field(&format!("{prefix}inverse"), inverse);
                report.line(format!("inverse: {inverse}"));
                report.line(format!("iterations: {iterations}"));
            }
            InverseOutcome::NotInvertibleByDegreeBound => {
                report.field(&format!("{prefix}status"), "not-invertible");
                report.line("not invertible: the degree bound was passed without a verified inverse");
            }
            InverseOutcome::BudgetExhausted { last_approximation } => {
                report.field(&format!("{prefix}status"), "budget-exhausted");
                report.field(&format!("{prefix}last"), last_approximation);
                report.line("budget exhausted: no verdict (raise --budget to keep iterating)");
                report.line(format!("last approximation: {last_approximation}"));
                report.set_exit(EXIT_UNKNOWN);
            }
        }
        if config.verbose {
            for (d, k) in run.trace.iter().enumerate() {
                report.field(&format!("trace.{d}"), k);
                report.line(format!("K_{d} = {k}"));
            }
        }
    }

    if let Some(result) = &groebner {
        let prefix = if config.engine == Engine::Both {
            "groebner."
        } else {
            ""
        };
        match result {
            InverseViaGroebner::Inverse(inverse) => {
                report.field(&format!("{prefix}status"), "inverted");
                report.field(&format!("{prefix}inverse"), inverse);
                if config.engine != Engine::Both {
                    report.line(format!("inverse: {inverse}"));
                }
            }
            InverseViaGroebner::NotInvertible => {
                report.field(&format!("{prefix}status"), "not-invertible");
                if config.engine != Engine::Both {
                    report.line("not invertible: the reduced basis is not of solved shape");
                }
            }
        }
    }

    if let (Some(run), Some(gb)) = (&iterative, &groebner) {
        let verdict = match (&run.outcome, gb) {
            (InverseOutcome::Inverted { inverse: a, .. }, InverseViaGroebner::Inverse(b)) => {
                if a == b {
                    Ok("agree: both engines produced the same inverse")
                } else {
                    Err("engines disagree: different inverses")
                }
            }
            (InverseOutcome::NotInvertibleByDegreeBound, InverseViaGroebner::NotInvertible) => {
                Ok("agree: both engines report not invertible")
            }
            (InverseOutcome::BudgetExhausted { .. }, InverseViaGroebner::Inverse(_)) => {
                Ok("groebner answered where the iteration ran out of budget")
            }
            (InverseOutcome::BudgetExhausted { .. }, InverseViaGroebner::NotInvertible) => {
                Ok("groebner answered where the iteration ran out of budget")
            }
            (InverseOutcome::Inverted { .. }, InverseViaGroebner::NotInvertible) => {
                Err("engines disagree: iterative inverted, groebner says not invertible")
            }
            (InverseOutcome::NotInvertibleByDegreeBound, InverseViaGroebner::Inverse(_)) => {
                Err("engines disagree: groebner inverted, iterative says not invertible")
            }
        };
        match verdict {
            Ok(msg) => {
                report.field("cross_check", "agree");
                report.line(msg);
                // a definitive groebner answer upgrades an unknown
                if matches!(run.outcome, InverseOutcome::BudgetExhausted { .. }) {
                    report.set_exit(0);
                }
            }
            Err(msg) => {
                report.field("cross_check", "discrepancy");
                report.line(msg);
                report.set_exit(EXIT_DISCREPANCY);
            }
        }
    }

    report.field("time_ms", start.elapsed().as_millis());
    Ok(report)
}

// -------------------------------------------------------------- preimage

fn cmd_preimage(
    map: &PolyMap,
    point: Option<&str>,
    curve: Option<&str>,
    config: &SessionConfig,
) -> Result<Report, CliError> {
    match (point, curve) {
        (Some(p), None) => cmd_point_preimage(map, p, config),
        (None, Some(c)) => cmd_curve_preimage(map, c, config),
        _ => Err(CliError(
            "exactly one of --point or --curve is required".into(),
        )),
    }
}

/// Normalization for the t-adic engine: it needs `F(0) = 0` and identity
/// linear part, so anything else goes through the affine factorization.
fn normalize_for_preimage(map: &PolyMap) -> Result<(Option<AffineNormalization>, PolyMap), CliError> {
    if map.is_centered() && map.has_identity_linear_part() {
        Ok((None, map.clone()))
    } else {
        let n = affine_normalize(map)?;
        let normalized = n.normalized.clone();
        Ok((Some(n), normalized))
    }
}

fn cmd_point_preimage(map: &PolyMap, point_src: &str, config: &SessionConfig) -> Result<Report, CliError> {
    let start = Instant::now();
    let c = text::parse_point(point_src, map.domain())?;
    let mut report = Report::new("preimage");
    report.field(
        "engine",
        match config.engine {
            Engine::Iterative => "iterative",
            Engine::Groebner => "groebner",
            Engine::Both => "both",
        },
    );
    report.field("input.map", map);
    report.field("input.point", text::render_point(&c));

    let iterative = match config.engine {
        Engine::Iterative | Engine::Both => {
            let (normalization, target) = normalize_for_preimage(map)?;
            // F = L o F': the preimage of c under F is the preimage of
            // L^-1(c) under F'
            let c_prime = match &normalization {
                Some(n) => n.l_inverse.evaluate(&c)?,
                None => c.clone(),
            };
            Some(point_preimage(&target, &c_prime, config.max_degree)?)
        }
        Engine::Groebner => None,
    };
    let groebner = match config.engine {
        Engine::Groebner | Engine::Both => Some(gb_point_preimage_with(
            map,
            &c,
            config.order.as_order(),
        )?),
        Engine::Iterative => None,
    };

    if let Some(outcome) = &iterative {
        let prefix = if config.engine == Engine::Both { "iterative." } else { "" };
        match outcome {
            PointPreimageOutcome::Found(p) => {
                report.field(&format!("{prefix}status"), "found");
                report.field(&format!("{prefix}preimage.point"), text::render_point(p));
                report.line(format!("preimage: ({})", text::render_point(p)));
            }
            PointPreimageOutcome::NotFound => {
                report.field(&format!("{prefix}status"), "not-found-within-degree");
                report.line("no centered preimage curve found within the degree budget");
                report.set_exit(EXIT_UNKNOWN);
            }
        }
    }
    if let Some(outcome) = &groebner {
        let prefix = if config.engine == Engine::Both { "groebner." } else { "" };
        match outcome {
            PointPreimageViaGroebner::Unique(p) => {
                report.field(&format!("{prefix}status"), "unique");
                report.field(&format!("{prefix}preimage.point"), text::render_point(p));
                if config.engine != Engine::Both {
                    report.line(format!("unique preimage: ({})", text::render_point(p)));
                }
            }
            PointPreimageViaGroebner::NotUnique(basis) => {
                report.field(&format!("{prefix}status"), "not-unique");
                for (i, b) in basis.iter().enumerate() {
                    report.field(
                        &format!("{prefix}basis.{i}"),
                        text::render_polynomial(b, map.vars()),
                    );
                }
                if config.engine != Engine::Both {
                    report.line("solution set is not a single rational point; reduced basis:");
                    for b in basis {
                        report.line(format!("  {}", text::render_polynomial(b, map.vars())));
                    }
                }
            }
            PointPreimageViaGroebner::Empty => {
                report.field(&format!("{prefix}status"), "empty");
                if config.engine != Engine::Both {
                    report.line("no solution: the ideal contains 1");
                }
            }
        }
    }
    if let (Some(it), Some(gb)) = (&iterative, &groebner) {
        let conflict = match (it, gb) {
            (PointPreimageOutcome::Found(p), PointPreimageViaGroebner::Unique(b)) => p != b,
            (PointPreimageOutcome::Found(_), PointPreimageViaGroebner::Empty) => true,
            _ => false,
        };
        if conflict {
            report.field("cross_check", "discrepancy");
            report.line("engines disagree on the preimage");
            report.set_exit(EXIT_DISCREPANCY);
        } else {
            report.field("cross_check", "agree");
            if let PointPreimageViaGroebner::Unique(_) | PointPreimageViaGroebner::Empty = gb {
                // definitive groebner verdict upgrades an unknown iteration
                if matches!(it, PointPreimageOutcome::NotFound) {
                    report.set_exit(0);
                    report.line("groebner answered where the iteration ran out of budget");
                }
            }
        }
    }
    report.field("time_ms", start.elapsed().as_millis());
    Ok(report)
}

fn cmd_curve_preimage(map: &PolyMap, curve_src: &str, config: &SessionConfig) -> Result<Report, CliError> {
    let start = Instant::now();
    let f = text::parse_curve(curve_src)?;
    let mut report = Report::new("preimage");
    report.field(
        "engine",
        match config.engine {
            Engine::Iterative => "iterative",
            Engine::Groebner => "groebner",
            Engine::Both => "both",
        },
    );
    report.field("input.map", map);
    report.field("input.curve", &f);

    let iterative = match config.engine {
        Engine::Iterative | Engine::Both => {
            let (normalization, target) = normalize_for_preimage(map)?;
            // transform the curve through L^-1; it must stay centered
            let f_prime = match &normalization {
                Some(n) => {
                    let components = n
                        .l_inverse
                        .components()
                        .iter()
                        .map(|comp| comp.compose(f.components()))
                        .collect::<Result<Vec<_>, _>>()?;
                    Curve::new(components, f.var().to_string()).map_err(|_| {
                        CliError(
                            "the curve does not pass through F(0), so no centered preimage curve exists"
                                .into(),
                        )
                    })?
                }
                None => f.clone(),
            };
            Some(curve_preimage(&target, &f_prime, config.max_degree)?)
        }
        Engine::Groebner => None,
    };
    let groebner = match config.engine {
        Engine::Groebner | Engine::Both => Some(gb_curve_preimage_with(
            map,
            &f,
            config.order.as_order(),
        )?),
        Engine::Iterative => None,
    };

    if let Some(outcome) = &iterative {
        let prefix = if config.engine == Engine::Both { "iterative." } else { "" };
        match outcome {
            PreimageOutcome::Found { curve, iterations } => {
                report.field(&format!("{prefix}status"), "found");
                report.field(&format!("{prefix}iterations"), iterations);
                report.field(&format!("{prefix}preimage.curve"), curve);
                report.line(format!("preimage: {curve}"));
                report.line(format!("iterations: {iterations}"));
            }
            PreimageOutcome::NotFoundWithinDegree { max_degree, last_approximation } => {
                report.field(&format!("{prefix}status"), "not-found-within-degree");
                report.field(&format!("{prefix}max_degree"), max_degree);
                report.field(&format!("{prefix}last"), last_approximation);
                report.line(format!(
                    "no preimage of t-degree <= {max_degree}; either none exists or it is larger (raise --max-deg)"
                ));
                report.set_exit(EXIT_UNKNOWN);
            }
            PreimageOutcome::Inconsistent => {
                report.field(&format!("{prefix}status"), "inconsistent");
                report.line("internal inconsistency: candidate failed re-verification");
                report.set_exit(EXIT_UNKNOWN);
            }
        }
    }
    if let Some(outcome) = &groebner {
        let prefix = if config.engine == Engine::Both { "groebner." } else { "" };
        let render_basis = |report: &mut Report, basis: &[polyinv_core::poly::Polynomial], prefix: &str| {
            let mut ambient_vars: Vec<String> = map.vars().to_vec();
            ambient_vars.push(f.var().to_string());
            for (i, b) in basis.iter().enumerate() {
                report.field(
                    &format!("{prefix}basis.{i}"),
                    text::render_polynomial(b, &ambient_vars),
                );
            }
        };
        match outcome {
            CurvePreimageViaGroebner::Found(curve) => {
                report.field(&format!("{prefix}status"), "found");
                report.field(&format!("{prefix}preimage.curve"), curve);
                if config.engine != Engine::Both {
                    report.line(format!("preimage: {curve}"));
                }
            }
            CurvePreimageViaGroebner::ShapeBasis(basis) => {
                report.field(&format!("{prefix}status"), "shape-basis");
                render_basis(&mut report, basis, prefix);
                if config.engine != Engine::Both {
                    report.line("solved-shape basis did not verify; basis returned");
                }
                report.set_exit(EXIT_UNKNOWN);
            }
            CurvePreimageViaGroebner::Evidence(basis) => {
                report.field(&format!("{prefix}status"), "evidence");
                render_basis(&mut report, basis, prefix);
                if config.engine != Engine::Both {
                    report.line("no preimage candidate emerged; reduced basis returned as evidence");
                    let mut ambient_vars: Vec<String> = map.vars().to_vec();
                    ambient_vars.push(f.var().to_string());
                    for b in basis {
                        report.line(format!("  {}", text::render_polynomial(b, &ambient_vars)));
                    }
                }
                report.set_exit(EXIT_UNKNOWN);
            }
        }
    }
    if let (Some(it), Some(gb)) = (&iterative, &groebner) {
        let conflict = matches!(
            (it, gb),
            (
                PreimageOutcome::Found { .. },
                CurvePreimageViaGroebner::Found(_)
            )
        ) && match (it, gb) {
            (PreimageOutcome::Found { curve, .. }, CurvePreimageViaGroebner::Found(g)) => curve != g,
            _ => false,
        };
        if conflict {
            report.field("cross_check", "discrepancy");
            report.line("engines disagree on the preimage curve");
            report.set_exit(EXIT_DISCREPANCY);
        } else {
            report.field("cross_check", "agree");
            if matches!(gb, CurvePreimageViaGroebner::Found(_))
                && !matches!(it, PreimageOutcome::Found { .. })
            {
                report.set_exit(0);
                report.line("groebner answered where the iteration ran out of budget");
            } else if matches!(it, PreimageOutcome::Found { .. }) {
                report.set_exit(0);
            }
        }
    }
    report.field("time_ms", start.elapsed().as_millis());
    Ok(report)
}

// ---------------------------------------------------------------- verify

fn cmd_verify(map: &PolyMap, candidate: &PolyMap) -> Result<Report, CliError> {
    let start = Instant::now();
    let mut report = Report::new("verify");
    report.field("input.map", map);
    report.field("input.candidate", candidate);
    let fg = map.compose(candidate)?;
    let gf = candidate.compose(map)?;
    if fg.is_identity() && gf.is_identity() {
        report.field("status", "verified");
        report.line("both compositions are the identity");
    } else {
        report.field("status", "mismatch");
        report.field("f_after_g", &fg);
        report.field("g_after_f", &gf);
        report.line("the maps are not mutually inverse");
        report.line(format!("F o G = {fg}"));
        report.line(format!("G o F = {gf}"));
    }
    report.field("time_ms", start.elapsed().as_millis());
    Ok(report)
}

// ----------------------------------------------------------------- bench

fn cmd_bench(seed: u64, count: u32, nvars: usize, engine: Engine) -> Result<Report, CliError> {
    if nvars < 2 {
        return Err(CliError("--nvars must be at least 2".into()));
    }
    let start = Instant::now();
    let mut report = Report::new("bench");
    report.both("seed", seed);
    report.both("count", count);
    report.both("nvars", nvars);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cfg = TameConfig::new(nvars);
    let qq = polyinv_core::ring::DomainDescriptor::Rationals;
    for i in 0..count {
        let pair = sample_affine_tame(&mut rng, qq, &cfg);
        report.field(&format!("bench.{i}.map"), &pair.forward);
        report.field(&format!("bench.{i}.degree"), pair.forward.degree());
        let mut timings = Vec::new();
        if matches!(engine, Engine::Iterative | Engine::Both) {
            let t = Instant::now();
            let run = run_iterative_invert(&pair.forward, &FiltrationSpec::Degree, None)?;
            let elapsed = t.elapsed();
            let ok = matches!(
                &run.outcome,
                InverseOutcome::Inverted { inverse, .. } if *inverse == pair.inverse
            );
            if !ok {
                return Err(CliError(format!(
                    "benchmark self-check failed on map {i} (iterative engine)"
                )));
            }
            report.field(&format!("bench.{i}.iterative.time_ms"), elapsed.as_millis());
            timings.push(format!("iterative {:?}", elapsed));
        }
        if matches!(engine, Engine::Groebner | Engine::Both) {
            let t = Instant::now();
            let result = gb_inverse_with(&pair.forward, polyinv_core::poly::MonomialOrder::GrevLex)?;
            let elapsed = t.elapsed();
            let ok = matches!(&result, InverseViaGroebner::Inverse(g) if *g == pair.inverse);
            if !ok {
                return Err(CliError(format!(
                    "benchmark self-check failed on map {i} (groebner engine)"
                )));
            }
            report.field(&format!("bench.{i}.groebner.time_ms"), elapsed.as_millis());
            timings.push(format!("groebner {:?}", elapsed));
        }
        report.line(format!(
            "map {i}: degree {} -> verified ({})",
            pair.forward.degree(),
            timings.join(", ")
        ));
    }
    report.both("time_ms", start.elapsed().as_millis());
    Ok(report)
}
