//! The five subcommands: CSV emitters and the comparison/fit reports.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::time::Instant;

use uniwalk::walk::{CoinSpec, QubitState, WaveField};
use uniwalk::{asymptotics, evolution, exit_time, spectral};

use crate::config::{pick, resolve_state, FileConfig};
use crate::{BoundsArgs, CliError, CoinArgs, CoinKind, CompareArgs, ExitArgs, FitKind, FitexitArgs, Method, PmfArgs, StateArgs};

impl From<uniwalk::Error> for CliError {
    fn from(e: uniwalk::Error) -> Self {
        CliError::Config(e.to_string())
    }
}

impl std::str::FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "direct" => Ok(Method::Direct),
            "dft" => Ok(Method::Dft),
            "fft" => Ok(Method::Fft),
            "approx" => Ok(Method::Approx),
            other => Err(format!("unknown method `{other}`")),
        }
    }
}

impl std::str::FromStr for CoinKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "hadamard" => Ok(CoinKind::Hadamard),
            "general" => Ok(CoinKind::General),
            other => Err(format!("unknown coin `{other}`")),
        }
    }
}

impl std::str::FromStr for FitKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "envelope" => Ok(FitKind::Envelope),
            "raw" => Ok(FitKind::Raw),
            other => Err(format!("unknown fit mode `{other}`")),
        }
    }
}

/// 17 significant digits: round-trip exact for f64.
fn fmt(x: f64) -> String {
    format!("{:.16e}", x)
}

fn cell(v: Option<f64>) -> String {
    v.map(fmt).unwrap_or_default()
}

fn writer(path: &Option<PathBuf>) -> Result<Box<dyn Write>, CliError> {
    match path {
        None => Ok(Box::new(BufWriter::new(std::io::stdout()))),
        Some(p) => {
            let file = File::create(p)
                .map_err(|e| CliError::Config(format!("cannot create {}: {e}", p.display())))?;
            Ok(Box::new(BufWriter::new(file)))
        }
    }
}

fn emit(mut out: Box<dyn Write>, lines: impl Iterator<Item = String>) -> Result<(), CliError> {
    for line in lines {
        writeln!(out, "{line}").map_err(|e| CliError::Config(format!("write failed: {e}")))?;
    }
    out.flush().map_err(|e| CliError::Config(format!("write failed: {e}")))
}

fn coin_of(args: &CoinArgs, cfg: &FileConfig) -> Result<(CoinKind, CoinSpec), CliError> {
    let kind = pick(args.coin, cfg, "coin", Some(CoinKind::Hadamard))?;
    match kind {
        CoinKind::Hadamard => Ok((kind, CoinSpec::hadamard())),
        CoinKind::General => {
            let alpha = pick(args.alpha, cfg, "alpha", Some(0.0))?;
            let beta = pick(args.beta, cfg, "beta", Some(0.0))?;
            let phi = pick(args.phi, cfg, "phi", Some(std::f64::consts::FRAC_PI_4))?;
            Ok((kind, CoinSpec::new(alpha, beta, phi)))
        }
    }
}

fn state_of(args: &StateArgs, cfg: &FileConfig) -> Result<QubitState, CliError> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let a_re = pick(args.a_re, cfg, "a_re", Some(s))?;
    let a_im = pick(args.a_im, cfg, "a_im", Some(0.0))?;
    let b_re = pick(args.b_re, cfg, "b_re", Some(0.0))?;
    let b_im = pick(args.b_im, cfg, "b_im", Some(s))?;
    let normalize = args.normalize || cfg.get_flag("normalize")?;
    let seed = match args.seed {
        Some(s) => Some(s),
        None => cfg.get::<u64>("seed")?,
    };
    resolve_state((a_re, a_im, b_re, b_im), normalize, seed)
}

fn field_rows(field: &WaveField) -> Vec<String> {
    let rho = evolution::pmf(field);
    (0..=field.t())
        .map(|n| {
            let p0 = field.psi0()[n];
            let p1 = field.psi1()[n];
            format!(
                "{n},{},{},{},{},{}",
                fmt(rho.rho()[n]),
                fmt(p0.re),
                fmt(p0.im),
                fmt(p1.re),
                fmt(p1.im)
            )
        })
        .collect()
}

pub fn pmf(args: &PmfArgs, cfg: &FileConfig) -> Result<(), CliError> {
    let t = pick(args.t, cfg, "t", None)?;
    let method = pick(args.method, cfg, "method", Some(Method::Direct))?;
    let (kind, coin) = coin_of(&args.coin, cfg)?;
    if method != Method::Direct && kind == CoinKind::General {
        return Err(CliError::Incompatible(format!(
            "--method {} is only defined for the hadamard coin",
            name_of(method)
        )));
    }
    let q = state_of(&args.state, cfg)?;

    let mut lines = vec![];
    match method {
        Method::Direct => {
            lines.push("n,rho,psi0_re,psi0_im,psi1_re,psi1_im".to_string());
            lines.extend(field_rows(&evolution::evolve(&q, &coin, t)));
        }
        Method::Dft => {
            lines.push("n,rho,psi0_re,psi0_im,psi1_re,psi1_im".to_string());
            lines.extend(field_rows(&spectral::closed_form_field(&q, t, t + 1)?));
        }
        Method::Fft => {
            lines.push("n,rho,psi0_re,psi0_im,psi1_re,psi1_im".to_string());
            lines.extend(field_rows(&spectral::fft_field(&q, t)));
        }
        Method::Approx => {
            lines.push(
                "n,rho,psi0_re,psi0_im,psi1_re,psi1_im,rho_bar,rho_min,rho_max".to_string(),
            );
            let (lo, hi) = asymptotics::validity_interval();
            for n in 0..=t {
                let nu = n as f64 / t as f64;
                if nu > lo && nu < hi {
                    let (p0, p1) = asymptotics::approx_wavefield(&q, nu, t)?;
                    let (rmin, rmax) = asymptotics::rho_envelopes(nu, t)?;
                    lines.push(format!(
                        "{n},{},{},{},{},{},{},{},{}",
                        fmt(p0.norm_sqr() + p1.norm_sqr()),
                        fmt(p0.re),
                        fmt(p0.im),
                        fmt(p1.re),
                        fmt(p1.im),
                        fmt(asymptotics::rho_bar(nu, t)?),
                        fmt(rmin),
                        fmt(rmax)
                    ));
                } else {
                    lines.push(format!("{n},,,,,,,,"));
                }
            }
        }
    }
    emit(writer(&args.output)?, lines.into_iter())
}

pub fn exit(args: &ExitArgs, cfg: &FileConfig) -> Result<(), CliError> {
    let n0 = pick(args.n0, cfg, "n0", None)?;
    let tmax = pick(args.tmax, cfg, "tmax", None)?;
    let (kind, _) = coin_of(&args.coin, cfg)?;
    if kind == CoinKind::General {
        return Err(CliError::Incompatible(
            "the exit-time closed form is only defined for the hadamard coin".to_string(),
        ));
    }
    let requested = match args.method {
        Some(m) => Some(m),
        None => cfg.get::<Method>("method")?,
    };
    let method = match requested {
        None => exit_time::ExitMethod::Auto,
        Some(Method::Direct) => exit_time::ExitMethod::Direct,
        Some(Method::Dft) | Some(Method::Fft) => exit_time::ExitMethod::Spectral,
        Some(Method::Approx) => {
            return Err(CliError::Incompatible(
                "exit supports --method direct, dft or fft".to_string(),
            ))
        }
    };
    let q = state_of(&args.state, cfg)?;

    let quantum = exit_time::exit_pmf_closed_with(&q, n0, tmax, method)?;
    let classical = exit_time::classical_exit_pmf(n0, 0.5, tmax)?;

    let mut lines = vec!["t,p_quantum,p_classical,lower_bound,heuristic".to_string()];
    for t in n0..=tmax {
        let heuristic =
            if t >= 2 * n0 { Some(asymptotics::exit_heuristic(n0, t)) } else { None };
        lines.push(format!(
            "{t},{},{},{},{}",
            fmt(quantum.probability(t)),
            fmt(classical.probability(t)),
            cell(asymptotics::exit_lower_bound(n0, t)),
            cell(heuristic)
        ));
    }
    emit(writer(&args.output)?, lines.into_iter())
}

pub fn bounds(args: &BoundsArgs, cfg: &FileConfig) -> Result<(), CliError> {
    let t = pick(args.t, cfg, "t", None)?;
    if t == 0 {
        return Err(CliError::Config("bounds needs t >= 1".to_string()));
    }
    let points = pick(args.points, cfg, "points", Some(201))?;
    if points == 0 {
        return Err(CliError::Config("points must be positive".to_string()));
    }
    let (kind, _) = coin_of(&args.coin, cfg)?;
    if kind == CoinKind::General {
        return Err(CliError::Incompatible(
            "the envelopes are only defined for the hadamard coin".to_string(),
        ));
    }

    let (lo, hi) = asymptotics::validity_interval();
    let mut lines = vec!["nu,n,rho_bar,rho_min,rho_max".to_string()];
    for i in 0..points {
        let nu = lo + (hi - lo) * (i as f64 + 1.0) / (points as f64 + 1.0);
        let (rmin, rmax) = asymptotics::rho_envelopes(nu, t)?;
        lines.push(format!(
            "{},{},{},{},{}",
            fmt(nu),
            fmt(nu * t as f64),
            fmt(asymptotics::rho_bar(nu, t)?),
            fmt(rmin),
            fmt(rmax)
        ));
    }
    emit(writer(&args.output)?, lines.into_iter())
}

/// Largest cross-route deviation tolerated by `compare`.
const COMPARE_TOL: f64 = 1e-9;

pub fn compare(args: &CompareArgs, cfg: &FileConfig) -> Result<(), CliError> {
    let t = pick(args.t, cfg, "t", None)?;
    let (kind, coin) = coin_of(&args.coin, cfg)?;
    if kind == CoinKind::General {
        return Err(CliError::Incompatible(
            "compare cross-validates the spectral routes, which need the hadamard coin"
                .to_string(),
        ));
    }
    let q = state_of(&args.state, cfg)?;

    let start = Instant::now();
    let direct = evolution::evolve(&q, &coin, t);
    let t_direct = start.elapsed();
    let start = Instant::now();
    let closed = spectral::closed_form_field(&q, t, t + 1)?;
    let t_closed = start.elapsed();
    let start = Instant::now();
    let fast = spectral::fft_field(&q, t);
    let t_fast = start.elapsed();

    let dev = |x: &WaveField, y: &WaveField| -> f64 {
        (0..=t)
            .flat_map(|n| {
                [(x.psi0()[n] - y.psi0()[n]).norm(), (x.psi1()[n] - y.psi1()[n]).norm()]
            })
            .fold(0.0, f64::max)
    };
    let d_dc = dev(&direct, &closed);
    let d_df = dev(&direct, &fast);
    let d_cf = dev(&closed, &fast);
    let worst = d_dc.max(d_df).max(d_cf);

    println!("compare t={t} (N = {} for dft, {} for fft)", t + 1, (t + 1).next_power_of_two());
    println!("  direct evolution: {:?}", t_direct);
    println!("  dft cosine sums:  {:?}", t_closed);
    println!("  fft inversion:    {:?}", t_fast);
    println!("  max |dpsi| direct-dft: {}", fmt(d_dc));
    println!("  max |dpsi| direct-fft: {}", fmt(d_df));
    println!("  max |dpsi| dft-fft:    {}", fmt(d_cf));
    if worst < COMPARE_TOL {
        println!("PASS (max deviation {} < {COMPARE_TOL:e})", fmt(worst));
        Ok(())
    } else {
        println!("FAIL (max deviation {} >= {COMPARE_TOL:e})", fmt(worst));
        Err(CliError::Tolerance(format!("routes deviate by {}", fmt(worst))))
    }
}

pub fn fitexit(args: &FitexitArgs, cfg: &FileConfig) -> Result<(), CliError> {
    let n0 = pick(args.n0, cfg, "n0", None)?;
    let tmax = pick(args.tmax, cfg, "tmax", None)?;
    let t_lo = pick(args.t_lo, cfg, "t_lo", Some(2 * n0 + n0 / 5))?;
    let t_hi = pick(args.t_hi, cfg, "t_hi", Some(tmax.min(13 * n0 / 2)))?;
    let mode = pick(args.fit, cfg, "fit", Some(FitKind::Envelope))?;
    let (kind, _) = coin_of(&args.coin, cfg)?;
    if kind == CoinKind::General {
        return Err(CliError::Incompatible(
            "the exit-time closed form is only defined for the hadamard coin".to_string(),
        ));
    }
    let q = state_of(&args.state, cfg)?;

    let d = exit_time::exit_pmf_closed(&q, n0, tmax)?;
    let fit = match mode {
        FitKind::Envelope => exit_time::tail_exponent_fit(&d, t_lo, t_hi)?,
        FitKind::Raw => exit_time::tail_exponent_fit_raw(&d, t_lo, t_hi)?,
    };

    let lines = vec![
        "exponent,rms_residual,points,t_lo,t_hi,mode".to_string(),
        format!(
            "{},{},{},{t_lo},{t_hi},{}",
            fmt(fit.exponent),
            fmt(fit.rms_residual),
            fit.points,
            match mode {
                FitKind::Envelope => "envelope",
                FitKind::Raw => "raw",
            }
        ),
    ];
    emit(writer(&args.output)?, lines.into_iter())
}

fn name_of(method: Method) -> &'static str {
    match method {
        Method::Direct => "direct",
        Method::Dft => "dft",
        Method::Fft => "fft",
        Method::Approx => "approx",
    }
}
