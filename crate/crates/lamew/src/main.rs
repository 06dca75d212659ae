//! Batch front door: evaluate Lamé functions, tabulate grids, and run the
//! verification suites, emitting CSV with 17 significant digits (lossless
//! double round-trip). Exit status: 0 when all checks pass, 1 on domain
//! violations or failed verification, 2 on usage errors (clap default).

use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};

use lamew::asymptotics;
use lamew::error::LamewError;
use lamew::frobenius::{self, LameParams};
use lamew::heunlocal::{self, AsymptoticRegime};
use lamew::integralform::{self, QuadratureSpec};
use lamew::series3trf::{self, Branch, Family, Kind, SolutionSpec, Type1Quantization};

#[derive(Parser)]
#[command(name = "lamew", version, about = "Lamé functions in Weierstrass form: evaluation and verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write CSV output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    /// Seed for randomized verification draws (deterministic per seed).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    First,
    Second,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::First => Kind::FirstKind,
            KindArg::Second => Kind::SecondKind,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Infinite,
    Poly1,
}

#[derive(Clone, Copy, ValueEnum)]
enum BranchArg {
    Plus,
    Minus,
}

#[derive(Args)]
struct ParamArgs {
    /// Elliptic modulus ρ, in (0, 1).
    #[arg(long)]
    rho: f64,
    /// Accessory (spectral) parameter h.
    #[arg(long)]
    h: f64,
    /// Degree parameter α.
    #[arg(long)]
    alpha: f64,
}

impl ParamArgs {
    fn build(&self) -> Result<LameParams, LamewError> {
        LameParams::new(self.rho, self.h, self.alpha)
    }
}

#[derive(Args)]
struct GridArgs {
    #[arg(long)]
    start: f64,
    #[arg(long)]
    stop: f64,
    #[arg(long, default_value_t = 20)]
    count: usize,
}

impl GridArgs {
    fn points(&self) -> Result<Vec<f64>, String> {
        if self.count < 1 || self.start >= self.stop {
            return Err("grid requires count >= 1 and start < stop".into());
        }
        if self.count == 1 {
            return Ok(vec![self.start]);
        }
        let step = (self.stop - self.start) / (self.count as f64 - 1.0);
        Ok((0..self.count).map(|i| self.start + step * i as f64).collect())
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one Lamé series value at a point.
    Eval {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, value_enum, default_value = "infinite")]
        family: FamilyArg,
        #[arg(long)]
        xi: f64,
        #[arg(long, default_value_t = 8)]
        n_mu: usize,
        #[arg(long, default_value_t = 12)]
        n_inner: usize,
        /// Termination level j (poly1 family).
        #[arg(long, default_value_t = 0)]
        j: usize,
        /// Termination index α_j (poly1 family).
        #[arg(long, default_value_t = 0)]
        alpha_j: usize,
        #[arg(long, value_enum, default_value = "plus")]
        branch: BranchArg,
    },
    /// Tabulate xi,lf,ls,asymptotic,in_domain over a ξ grid.
    Table {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, default_value_t = 8)]
        n_mu: usize,
        #[arg(long, default_value_t = 12)]
        n_inner: usize,
    },
    /// Compare nested-series Taylor coefficients against the Frobenius
    /// recurrence, per order, PASS at 1e-10.
    VerifyOracle {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 12)]
        orders: usize,
        /// Additional random parameter draws (seeded by --seed).
        #[arg(long, default_value_t = 0)]
        draws: usize,
    },
    /// Compare the order-1 integral representation against the exact
    /// sub-series, PASS at 1e-6.
    VerifyIntegral {
        #[command(flatten)]
        params: ParamArgs,
        /// Indicial exponent λ (0 or 0.5).
        #[arg(long, default_value_t = 0.0)]
        lambda: f64,
        #[arg(long)]
        xi: f64,
        #[arg(long, default_value_t = 64)]
        n_gl: usize,
        #[arg(long, default_value_t = 256)]
        n_contour: usize,
        #[arg(long, default_value_t = 0.4)]
        radius: f64,
    },
    /// Print |ODE residual| of the truncated Frobenius series over a ξ grid.
    Residual {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, default_value_t = 0.0)]
        lambda: f64,
        #[arg(long, default_value_t = 14)]
        orders: usize,
    },
    /// Convergence-domain verdict at (ξ, ρ).
    Domain {
        #[arg(long)]
        rho: f64,
        #[arg(long)]
        xi: f64,
        /// Use the small-modulus domain ξ < 1/(1+ρ²) instead.
        #[arg(long, default_value_t = false)]
        small_rho: bool,
    },
    /// Evaluate the nine Heun local-solution descriptors at a point.
    HeunLocal {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        xi: f64,
        #[arg(long, default_value_t = 48)]
        n_mu: usize,
        #[arg(long, default_value_t = 32)]
        n_inner: usize,
    },
}

fn fmt(v: f64) -> String {
    format!("{v:.16e}")
}

struct Output {
    sink: Box<dyn std::io::Write>,
}

impl Output {
    fn new(out: &Option<std::path::PathBuf>) -> Result<Self, String> {
        let sink: Box<dyn std::io::Write> = match out {
            Some(path) => Box::new(
                std::fs::File::create(path).map_err(|e| format!("cannot open {path:?}: {e}"))?,
            ),
            None => Box::new(std::io::stdout()),
        };
        Ok(Self { sink })
    }

    fn line(&mut self, s: &str) {
        if let Err(e) = writeln!(self.sink, "{s}") {
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                // Downstream reader (e.g. `head`) closed the pipe; not an error.
                std::process::exit(0);
            }
            panic!("write to output sink: {e}");
        }
    }
}

fn run(cli: Cli) -> Result<bool, String> {
    let mut out = Output::new(&cli.out)?;
    let fail = |e: LamewError| e.to_string();
    match cli.command {
        Command::Eval { params, kind, family, xi, n_mu, n_inner, j, alpha_j, branch } => {
            let p = params.build().map_err(fail)?;
            let kind: Kind = kind.into();
            let value = match family {
                FamilyArg::Infinite => {
                    let spec = SolutionSpec {
                        n_mu,
                        n_inner,
                        ..SolutionSpec::new(kind, Family::InfiniteSeries)
                    };
                    let sv = match kind {
                        Kind::FirstKind => series3trf::lf_infinite(&p, &spec, xi),
                        Kind::SecondKind => series3trf::ls_infinite(&p, &spec, xi),
                    }
                    .map_err(fail)?;
                    if sv.quantized_alpha_warning {
                        eprintln!(
                            "warning: alpha = {} is at a quantized value; the polynomial family applies",
                            p.alpha
                        );
                    }
                    sv.value
                }
                FamilyArg::Poly1 => {
                    let q = Type1Quantization {
                        j,
                        alpha_j,
                        branch: match branch {
                            BranchArg::Plus => Branch::Plus,
                            BranchArg::Minus => Branch::Minus,
                        },
                        lambda: kind.lambda(),
                    };
                    series3trf::lf_poly_type1(&p, &q, n_mu, xi).map_err(fail)?
                }
            };
            out.line(&fmt(value));
            Ok(true)
        }
        Command::Table { params, grid, n_mu, n_inner } => {
            let p = params.build().map_err(fail)?;
            out.line("xi,lf,ls,asymptotic,in_domain");
            for xi in grid.points()? {
                let verdict = asymptotics::convergence_domain(xi, p.rho);
                if !verdict.inside {
                    return Err(format!(
                        "convergence_domain violated at xi = {xi} (|(1+rho^2)xi - rho^2 xi^2| >= 1)"
                    ));
                }
                let spec_f = SolutionSpec { n_mu, n_inner, ..SolutionSpec::new(Kind::FirstKind, Family::InfiniteSeries) };
                let spec_s = SolutionSpec { n_mu, n_inner, ..SolutionSpec::new(Kind::SecondKind, Family::InfiniteSeries) };
                let lf = series3trf::lf_infinite(&p, &spec_f, xi).map_err(fail)?.value;
                let ls = series3trf::ls_infinite(&p, &spec_s, xi).map_err(fail)?.value;
                let asym = asymptotics::lame_asymptotic_limit(&p, xi).map_err(fail)?;
                out.line(&format!(
                    "{},{},{},{},{}",
                    fmt(xi),
                    fmt(lf),
                    fmt(ls),
                    fmt(asym),
                    verdict.inside
                ));
            }
            Ok(true)
        }
        Command::VerifyOracle { params, orders, draws } => {
            let p = params.build().map_err(fail)?;
            let mut cases = vec![(p.rho, p.h, p.alpha)];
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(cli.seed);
            while cases.len() < draws + 1 {
                let alpha: f64 = rng.gen_range(-3.0..3.0);
                if (alpha - alpha.round()).abs() < 0.05 {
                    continue;
                }
                cases.push((rng.gen_range(0.1..0.9), rng.gen_range(-5.0..5.0), alpha));
            }
            out.line("case,kind,order,max_rel_error");
            let mut all_pass = true;
            for (idx, &(rho, h, alpha)) in cases.iter().enumerate() {
                let p = LameParams::new(rho, h, alpha).map_err(fail)?;
                for kind in [Kind::FirstKind, Kind::SecondKind] {
                    let spec = SolutionSpec::new(kind, Family::InfiniteSeries);
                    let got = series3trf::expand_to_xi_coeffs(&p, &spec, orders).map_err(fail)?;
                    let want =
                        frobenius::frobenius_coefficients(&p, kind.lambda(), orders).map_err(fail)?;
                    let mut worst = 0.0_f64;
                    for m in 0..=orders {
                        let scale = want.coeffs[m].abs().max(1e-30);
                        let err = (got.coeffs[m] - want.coeffs[m]).abs() / scale;
                        worst = worst.max(err);
                        out.line(&format!(
                            "{},{},{},{}",
                            idx,
                            match kind {
                                Kind::FirstKind => "first",
                                Kind::SecondKind => "second",
                            },
                            m,
                            fmt(err)
                        ));
                    }
                    if worst > 1e-10 {
                        all_pass = false;
                    }
                }
            }
            out.line(if all_pass { "PASS" } else { "FAIL" });
            Ok(all_pass)
        }
        Command::VerifyIntegral { params, lambda, xi, n_gl, n_contour, radius } => {
            let p = params.build().map_err(fail)?;
            let quad = QuadratureSpec::new(n_gl, n_contour, radius).map_err(fail)?;
            let series = integralform::y1_series_reference(&p, lambda, xi).map_err(fail)?;
            let integral = integralform::y1_integral(&p, lambda, xi, &quad).map_err(fail)?;
            let rel = (integral - series).abs() / series.abs().max(1e-30);
            out.line("series,quadrature,rel_error");
            out.line(&format!("{},{},{}", fmt(series), fmt(integral), fmt(rel)));
            let pass = rel <= 1e-6;
            out.line(if pass { "PASS" } else { "FAIL" });
            Ok(pass)
        }
        Command::Residual { params, grid, lambda, orders } => {
            let p = params.build().map_err(fail)?;
            let poly = frobenius::frobenius_coefficients(&p, lambda, orders).map_err(fail)?;
            out.line("xi,abs_residual");
            for xi in grid.points()? {
                let r = frobenius::ode_residual(&p, &poly, xi).map_err(fail)?;
                out.line(&format!("{},{}", fmt(xi), fmt(r.abs())));
            }
            Ok(true)
        }
        Command::Domain { rho, xi, small_rho } => {
            LameParams::new(rho, 0.0, 0.0).map_err(fail)?;
            let verdict = if small_rho {
                asymptotics::small_rho_domain(xi, rho)
            } else {
                asymptotics::convergence_domain(xi, rho)
            };
            out.line(&format!("inside={},margin={}", verdict.inside, fmt(verdict.margin)));
            Ok(true)
        }
        Command::HeunLocal { params, xi, n_mu, n_inner } => {
            let p = params.build().map_err(fail)?;
            out.line("id,sigma,in_domain,value,abs_residual");
            for d in &heunlocal::DESCRIPTORS {
                let sigma = heunlocal::variable_map(d.var_map, xi, p.rho);
                let verdict = heunlocal::heun_domain(d, AsymptoticRegime::Generic, xi, p.rho);
                if !verdict.inside {
                    out.line(&format!("{},{},false,,", d.id, fmt(sigma)));
                    continue;
                }
                let f = |x: f64| heunlocal::local_solution(d, &p, n_mu, n_inner, x);
                let value = f(xi).map_err(fail)?;
                let residual = frobenius::ode_residual_xi_fn(&p, &f, xi).map_err(fail)?;
                out.line(&format!(
                    "{},{},true,{},{}",
                    d.id,
                    fmt(sigma),
                    fmt(value),
                    fmt(residual.abs())
                ));
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
