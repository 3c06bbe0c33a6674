//! Subcommand implementations.

use crate::output::{print_json, Tagged, TaggedLog, SCHEMA_VERSION};
use crate::Cli;
use clap::Subcommand;
use pnt_bounds::error::{Error, Result};
use pnt_bounds::pi_li;
use pnt_bounds::pintz::{self, PintzRow};
use pnt_bounds::primes;
use pnt_bounds::ramanujan::{self, PiecewiseEnvelope, SpotCheckVerdict};
use pnt_bounds::zeta::{lemma2_sum_bound, ZeroCatalog, ZeroDensityTable, ZeroFreeRegion};
use serde::{Deserialize, Serialize};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reproduce the full psi-bound table (rows X = 1000..10000)
    PntTable,
    /// Evaluate eps0 and its internals at one (sigma, log x0) point
    Epsilon {
        #[arg(long)]
        sigma: f64,
        #[arg(long)]
        logx0: f64,
    },
    /// Back-solve the per-sigma density constants from the published table
    Backsolve {
        /// assumed C2 constant
        #[arg(long, default_value_t = 3.0)]
        c2: f64,
    },
    /// Parse and validate the zeros catalog (checksum, ascent, window checks)
    ZerosCheck,
    /// The pi-li certificate: kitchen margin, Delta, corollary constants
    PiLi {
        /// threshold log x0
        #[arg(long, default_value_t = 2000.0)]
        logx0: f64,
        #[arg(long, default_value_t = 0.47)]
        alpha: f64,
    },
    /// The staged E(x) upper bound at one point
    EUpper {
        #[arg(long)]
        logx: f64,
    },
    /// Sufficiency certificate for the Ramanujan inequality at (x_a, x)
    Ramanujan {
        /// log x_a
        #[arg(long)]
        xa: f64,
        /// log x
        #[arg(long)]
        x: f64,
        /// also spot-validate the envelope against a sieve to this limit
        #[arg(long)]
        validate_sieve: Option<u64>,
    },
    /// Scan integer thresholds L, checking (e^(L-1), e^L)
    RamanujanScan {
        #[arg(long, default_value_t = 3905)]
        lo: u32,
        #[arg(long, default_value_t = 3925)]
        hi: u32,
    },
    /// Exact sieve-backed check of the inequality at integer x
    SpotCheck {
        #[arg(long)]
        x: u64,
        /// opt-in for sieve limits beyond 1e9 (tens of minutes at 4e10)
        #[arg(long, default_value_t = false)]
        allow_large: bool,
        /// binary sieve cache: loaded when present and covering, written
        /// after a fresh build
        #[arg(long)]
        sieve_cache: Option<PathBuf>,
    },
    /// Build a sieve and verify it against independent anchors
    SieveSelftest {
        #[arg(long, default_value_t = 10_000_000)]
        sieve_limit: u64,
    },
}

#[derive(Debug, Default, Deserialize)]
struct FileConfig {
    data_dir: Option<PathBuf>,
    zeros: Option<PathBuf>,
    density: Option<PathBuf>,
    format: Option<String>,
    precision_bits: Option<u32>,
    sieve_limit: Option<u64>,
}

struct Settings {
    zeros: PathBuf,
    density: PathBuf,
    csv: bool,
    sieve_limit: Option<u64>,
}

fn resolve(cli: &Cli) -> Result<Settings> {
    let mut data_dir = cli.data_dir.clone();
    let mut zeros = cli.zeros.clone();
    let mut density = cli.density.clone();
    let mut format = cli.format.clone();
    let mut precision_bits = cli.precision_bits;
    let mut sieve_limit = None;

    // the config file, when present, overrides the flags
    if let Some(cfg_path) = &cli.config {
        let text = std::fs::read_to_string(cfg_path)?;
        let cfg: FileConfig = toml::from_str(&text).map_err(|e| Error::Data {
            path: cfg_path.display().to_string(),
            line: 0,
            msg: e.to_string(),
        })?;
        data_dir = cfg.data_dir.or(data_dir);
        zeros = cfg.zeros.or(zeros);
        density = cfg.density.or(density);
        format = cfg.format.or(format);
        precision_bits = cfg.precision_bits.or(precision_bits);
        sieve_limit = cfg.sieve_limit.or(sieve_limit);
    }

    if let Some(bits) = precision_bits {
        if bits < 60 {
            return Err(Error::Precondition(format!(
                "precision_bits = {bits} below the 60-bit floor"
            )));
        }
        if bits > 106 {
            return Err(Error::Precondition(format!(
                "precision_bits = {bits} beyond the 106-bit double-double kernel"
            )));
        }
    }

    let data_dir = data_dir
        .or_else(|| std::env::var_os("PNTB_DATA_DIR").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("data"));
    Ok(Settings {
        zeros: zeros.unwrap_or_else(|| data_dir.join("zeta_zeros_100k.txt")),
        density: density.unwrap_or_else(|| data_dir.join("density_constants.txt")),
        csv: format.as_deref() == Some("csv"),
        sieve_limit,
    })
}

pub fn run(cli: Cli) -> Result<ExitCode> {
    let settings = resolve(&cli)?;
    match &cli.command {
        Command::PntTable => pnt_table(&settings),
        Command::Epsilon { sigma, logx0 } => epsilon(&settings, *sigma, *logx0),
        Command::Backsolve { c2 } => backsolve(&settings, *c2),
        Command::ZerosCheck => zeros_check(&settings),
        Command::PiLi { logx0, alpha } => pi_li_cert(&settings, *logx0, *alpha),
        Command::EUpper { logx } => e_upper_cmd(&settings, *logx),
        Command::Ramanujan {
            xa,
            x,
            validate_sieve,
        } => ramanujan_cmd(*xa, *x, *validate_sieve),
        Command::RamanujanScan { lo, hi } => ramanujan_scan(*lo, *hi),
        Command::SpotCheck {
            x,
            allow_large,
            sieve_cache,
        } => spot_check(*x, *allow_large, sieve_cache.as_deref()),
        Command::SieveSelftest { sieve_limit } => {
            sieve_selftest(settings.sieve_limit.unwrap_or(*sieve_limit))
        }
    }
}

fn load_density(settings: &Settings) -> Result<ZeroDensityTable> {
    ZeroDensityTable::load(&settings.density)
}

#[derive(Serialize)]
struct RowOut {
    x_threshold: Tagged,
    sigma: Tagged,
    a: Tagged,
    b: Tagged,
    c: Tagged,
    eps0: Tagged,
    exact_a: Tagged,
    exact_exponent: Tagged,
    eps0_exact: TaggedLog,
    k: TaggedLog,
    c3: Tagged,
    c4: Tagged,
    c5_coeff: Tagged,
}

impl RowOut {
    fn new(r: &PintzRow) -> RowOut {
        RowOut {
            x_threshold: Tagged::exact(r.x_threshold),
            sigma: Tagged::exact(r.sigma),
            a: Tagged::up(r.a_rounded),
            b: Tagged::exact(r.b),
            c: Tagged::down(r.c_rounded),
            eps0: Tagged::up(r.eps0_rounded),
            exact_a: Tagged::exact(r.exact_a.to_f64_saturating()),
            exact_exponent: Tagged::exact(r.exact_exponent),
            eps0_exact: TaggedLog::new(&r.eps0_exact, "exact"),
            k: TaggedLog::new(&r.k, "exact"),
            c3: Tagged::exact(r.c3),
            c4: Tagged::exact(r.c4),
            c5_coeff: Tagged::exact(r.c5_coeff),
        }
    }
}

fn pnt_table(settings: &Settings) -> Result<ExitCode> {
    let table = load_density(settings)?;
    let region = ZeroFreeRegion::default();
    let candidates = table.sigmas();
    let mut rows = Vec::new();
    for i in 1..=10 {
        rows.push(pintz::make_row(
            1000.0 * f64::from(i),
            &table,
            &region,
            &candidates,
        )?);
    }
    if settings.csv {
        println!(
            "x_threshold,sigma,a:rounded-up,b:exact,c:rounded-down,eps0:rounded-up,exact_a:exact,exact_exponent:exact,eps0_exact_log10:exact"
        );
        for r in &rows {
            println!(
                "{},{},{:.1},{},{},{:.3e},{:.10},{:.12},{:.10}",
                r.x_threshold,
                r.sigma,
                r.a_rounded,
                r.b,
                r.c_rounded,
                r.eps0_rounded,
                r.exact_a.to_f64_saturating(),
                r.exact_exponent,
                r.eps0_exact.log10_mag().unwrap_or(f64::NEG_INFINITY),
            );
        }
    } else {
        #[derive(Serialize)]
        struct Out {
            schema_version: u32,
            density_sources: Vec<String>,
            rows: Vec<RowOut>,
        }
        print_json(&Out {
            schema_version: SCHEMA_VERSION,
            density_sources: table.entries().iter().map(|e| e.source.clone()).collect(),
            rows: rows.iter().map(RowOut::new).collect(),
        });
    }
    Ok(ExitCode::SUCCESS)
}

fn epsilon(settings: &Settings, sigma: f64, logx0: f64) -> Result<ExitCode> {
    let table = load_density(settings)?;
    let region = ZeroFreeRegion::default();
    let (c3, c4, c5) = pintz::pintz_constants(sigma, logx0, &table, &region)?;
    let a = pintz::big_a(sigma, logx0, &table, &region)?;
    let eps = pintz::epsilon0(sigma, logx0, &table, &region)?;
    #[derive(Serialize)]
    struct Out {
        schema_version: u32,
        sigma: Tagged,
        logx0: Tagged,
        density_source: String,
        c3: Tagged,
        c4: Tagged,
        c5: Tagged,
        a: Tagged,
        eps0: TaggedLog,
        eps0_rounded_3sf: Tagged,
    }
    print_json(&Out {
        schema_version: SCHEMA_VERSION,
        sigma: Tagged::exact(sigma),
        logx0: Tagged::exact(logx0),
        density_source: table.entry(sigma)?.source.clone(),
        c3: Tagged::exact(c3),
        c4: Tagged::exact(c4),
        c5: Tagged::exact(c5),
        a: Tagged::exact(a),
        eps0: TaggedLog::new(&eps, "exact"),
        eps0_rounded_3sf: Tagged::up(pintz::round_up_3sf(&eps)),
    });
    Ok(ExitCode::SUCCESS)
}

fn backsolve(settings: &Settings, c2: f64) -> Result<ExitCode> {
    let region = ZeroFreeRegion::default();
    let targets: Vec<(f64, f64, f64)> = pintz::PUBLISHED_TABLE
        .iter()
        .map(|&(x, s, a, _)| (x, s, a))
        .collect();
    let report = pintz::backsolve_density(&targets, c2, &region)?;
    #[derive(Serialize)]
    struct SigmaOut {
        sigma: Tagged,
        mean_c1: Tagged,
        spread: Tagged,
        consistent: bool,
    }
    #[derive(Serialize)]
    struct Out {
        schema_version: u32,
        assumed_c2: Tagged,
        rows: Vec<(f64, f64, Tagged)>,
        per_sigma: Vec<SigmaOut>,
        vendored_density: Option<Vec<(f64, f64)>>,
    }
    let vendored = load_density(settings)
        .ok()
        .map(|t| t.entries().iter().map(|e| (e.sigma, e.c1)).collect());
    let all_consistent = report.per_sigma.iter().all(|s| s.consistent);
    print_json(&Out {
        schema_version: SCHEMA_VERSION,
        assumed_c2: Tagged::exact(c2),
        rows: report
            .rows
            .iter()
            .map(|r| (r.x_threshold, r.sigma, Tagged::exact(r.c1)))
            .collect(),
        per_sigma: report
            .per_sigma
            .iter()
            .map(|s| SigmaOut {
                sigma: Tagged::exact(s.sigma),
                mean_c1: Tagged::exact(s.mean_c1),
                spread: Tagged::up(s.spread),
                consistent: s.consistent,
            })
            .collect(),
        vendored_density: vendored,
    });
    if all_consistent {
        Ok(ExitCode::SUCCESS)
    } else {
        Err(Error::Certification(
            "back-solved C1 estimates spread beyond 1%".into(),
        ))
    }
}

fn zeros_check(settings: &Settings) -> Result<ExitCode> {
    // checksum sidecar, when present, must match
    let mut checksum = None;
    let sidecar = settings.zeros.with_extension("txt.sha256");
    if sidecar.exists() {
        use sha2::{Digest, Sha256};
        let bytes = std::fs::read(&settings.zeros)?;
        let got = hex::encode(Sha256::digest(&bytes));
        let want = std::fs::read_to_string(&sidecar)?
            .split_whitespace()
            .next()
            .unwrap_or_default()
            .to_string();
        if got != want {
            return Err(Error::Data {
                path: settings.zeros.display().to_string(),
                line: 0,
                msg: format!("sha256 mismatch: file {got}, sidecar {want}"),
            });
        }
        checksum = Some(got);
    }
    let cat = ZeroCatalog::load(&settings.zeros)?;
    // Lemma-2 window on a deterministic 200-height sample
    let lo = 2.0 * std::f64::consts::PI * std::f64::consts::E;
    let hi = cat.max_gamma().min(74_900.0);
    let mut state = 0x2545F4914F6CDD1Du64;
    let mut worst = 0.0f64;
    for _ in 0..200 {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        let u = (state >> 11) as f64 / (1u64 << 53) as f64;
        let t = lo + u * (hi - lo);
        let (center, radius) = lemma2_sum_bound(t)?;
        let dev = (cat.sum_recip_gamma(t)? - center).abs();
        worst = worst.max(dev);
        if dev > radius {
            return Err(Error::Certification(format!(
                "recip-sum window violated at T = {t}: deviation {dev} > {radius}"
            )));
        }
    }
    #[derive(Serialize)]
    struct Out {
        schema_version: u32,
        path: String,
        sha256: Option<String>,
        count: usize,
        precision_decimals: usize,
        first: Tagged,
        last: Tagged,
        zeros_below_100: usize,
        lemma2_sample_worst_dev: Tagged,
        lemma2_radius: Tagged,
    }
    print_json(&Out {
        schema_version: SCHEMA_VERSION,
        path: settings.zeros.display().to_string(),
        sha256: checksum,
        count: cat.len(),
        precision_decimals: cat.precision(),
        first: Tagged::exact(cat.gammas()[0]),
        last: Tagged::exact(cat.max_gamma()),
        zeros_below_100: cat.count_upto(100.0),
        lemma2_sample_worst_dev: Tagged::up(worst),
        lemma2_radius: Tagged::exact(0.9321),
    });
    Ok(ExitCode::SUCCESS)
}

fn pi_li_cert(settings: &Settings, logx0: f64, alpha: f64) -> Result<ExitCode> {
    let table = load_density(settings)?;
    let region = ZeroFreeRegion::default();
    let candidates = table.sigmas();
    let row = pintz::make_row(logx0, &table, &region, &candidates)?;
    // the 1.2e-5 theta budget for x >= e^1000 must actually hold for our row
    let row1000 = pintz::make_row(1000.0, &table, &region, &candidates)?;
    if row1000.eps0_rounded > 1.2e-5 {
        return Err(Error::Certification(format!(
            "eps0(e^1000) = {} exceeds the 1.2e-5 budget used for the middle integral",
            row1000.eps0_rounded
        )));
    }
    let params = pi_li::PiLiParams::new(&row, logx0, alpha)?;
    let tables = primes::build_sieve(1000)?;
    let i1 = pi_li::i1_plus(&tables)?;
    let delta = pi_li::delta_bound(&params, i1, &region)?;
    let cert = pi_li::corollary_constants(&params, delta, &region)?;
    #[derive(Serialize)]
    struct Out {
        schema_version: u32,
        density_sources: Vec<String>,
        x0_log: Tagged,
        alpha: Tagged,
        a1: Tagged,
        b: Tagged,
        c: Tagged,
        i1_plus: Tagged,
        i1_budget: Tagged,
        kitchen_margin: Tagged,
        delta: Tagged,
        coefficient: Tagged,
        coefficient_target: Tagged,
        log_power: Tagged,
        exp_coefficient: Tagged,
        exp_coefficient_target: Tagged,
        exp_ceiling: Tagged,
        pass: bool,
    }
    print_json(&Out {
        schema_version: SCHEMA_VERSION,
        density_sources: table.entries().iter().map(|e| e.source.clone()).collect(),
        x0_log: Tagged::exact(logx0),
        alpha: Tagged::exact(alpha),
        a1: Tagged::up(params.a1),
        b: Tagged::exact(params.b),
        c: Tagged::down(params.c),
        i1_plus: Tagged::up(i1),
        i1_budget: Tagged::exact(7.6),
        kitchen_margin: Tagged::down(cert.kitchen_margin),
        delta: Tagged::up(cert.delta),
        coefficient: Tagged::up(cert.coefficient),
        coefficient_target: Tagged::exact(235.0),
        log_power: Tagged::exact(cert.log_power),
        exp_coefficient: Tagged::down(cert.exp_coefficient),
        exp_coefficient_target: Tagged::exact(0.8),
        exp_ceiling: Tagged::exact(cert.exp_ceiling),
        pass: true,
    });
    Ok(ExitCode::SUCCESS)
}

fn e_upper_cmd(settings: &Settings, logx: f64) -> Result<ExitCode> {
    let _ = settings;
    let schedule = pi_li::Schedule::from_published();
    let tables = primes::build_sieve(1000)?;
    let i1 = pi_li::i1_plus(&tables)?;
    let e = pi_li::e_upper(logx, &schedule, i1)?;
    #[derive(Serialize)]
    struct Out {
        schema_version: u32,
        logx: Tagged,
        i1_plus: Tagged,
        e_upper: TaggedLog,
        schedule: Vec<(f64, f64, String)>,
    }
    print_json(&Out {
        schema_version: SCHEMA_VERSION,
        logx: Tagged::exact(logx),
        i1_plus: Tagged::up(i1),
        e_upper: TaggedLog::new(&e, "rounded-up"),
        schedule: schedule
            .entries()
            .iter()
            .map(|s| (s.threshold_log, s.eps0, s.source.clone()))
            .collect(),
    });
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct SufficiencyOut {
    schema_version: u32,
    xa_log: Tagged,
    x_log: Tagged,
    k1: Tagged,
    k2: Tagged,
    k3: Tagged,
    k3_log10: Tagged,
    bracket: Tagged,
    a_xa: Tagged,
    ma: Tagged,
    mm: Tagged,
    eps_upper: Tagged,
    eps_lower: Tagged,
    margin: Tagged,
    dropped_log10: Tagged,
    pass: bool,
}

impl SufficiencyOut {
    fn new(c: &ramanujan::SufficiencyCertificate) -> SufficiencyOut {
        SufficiencyOut {
            schema_version: SCHEMA_VERSION,
            xa_log: Tagged::exact(c.xa_log),
            x_log: Tagged::exact(c.x_log),
            k1: Tagged::up(c.consts.k1),
            k2: Tagged::up(c.consts.k2),
            k3: Tagged::up(c.consts.k3),
            k3_log10: Tagged::exact(c.consts.k3_log10),
            bracket: Tagged::up(c.consts.bracket),
            a_xa: Tagged::up(c.consts.a_xa),
            ma: Tagged::up(c.ma),
            mm: Tagged::down(c.mm),
            eps_upper: Tagged::up(c.eps_upper),
            eps_lower: Tagged::down(c.eps_lower),
            margin: Tagged::down(c.margin),
            dropped_log10: Tagged::up(c.consts.dropped_log10),
            pass: c.pass,
        }
    }
}

fn ramanujan_cmd(xa: f64, x: f64, validate_sieve: Option<u64>) -> Result<ExitCode> {
    let env = PiecewiseEnvelope::standard();
    let tables = match validate_sieve {
        Some(limit) => Some(primes::build_sieve_with_progress(limit, progress_bar())?),
        None => None,
    };
    let cert = ramanujan::sufficiency_check(xa, x, &env, tables.as_ref())?;
    print_json(&SufficiencyOut::new(&cert));
    if cert.pass {
        Ok(ExitCode::SUCCESS)
    } else {
        Err(Error::Certification(format!(
            "sufficiency margin {} not positive at (e^{xa}, e^{x})",
            cert.margin
        )))
    }
}

fn ramanujan_scan(lo: u32, hi: u32) -> Result<ExitCode> {
    let env = PiecewiseEnvelope::standard();
    let scan = ramanujan::threshold_scan(&env, lo, hi)?;
    #[derive(Serialize)]
    struct Out {
        schema_version: u32,
        lo: u32,
        hi: u32,
        first_pass: Option<u32>,
        margins: Vec<(u32, Tagged)>,
    }
    print_json(&Out {
        schema_version: SCHEMA_VERSION,
        lo,
        hi,
        first_pass: scan.first_pass,
        margins: scan
            .margins
            .iter()
            .map(|&(l, m)| (l, Tagged::down(m)))
            .collect(),
    });
    Ok(ExitCode::SUCCESS)
}

fn progress_bar() -> impl FnMut(u64, u64) {
    let mut last = 0u64;
    move |done, total| {
        let pct = done * 100 / total.max(1);
        if pct >= last + 5 {
            last = pct;
            eprintln!("sieve: {pct}% ({done}/{total} segments)");
        }
    }
}

fn spot_check(x: u64, allow_large: bool, cache: Option<&std::path::Path>) -> Result<ExitCode> {
    if x > 1_000_000_000 && !allow_large {
        return Err(Error::Precondition(format!(
            "sieving to {x} takes a while; pass --allow-large to opt in"
        )));
    }
    let tables = match cache {
        Some(path) if path.exists() => {
            let t = primes::SieveTables::load_cache(path)?;
            if t.limit() >= x {
                eprintln!(
                    "sieve: loaded cache {} (limit {})",
                    path.display(),
                    t.limit()
                );
                t
            } else {
                let t = primes::build_sieve_with_progress(x.max(10), progress_bar())?;
                t.save_cache(path)?;
                t
            }
        }
        Some(path) => {
            let t = primes::build_sieve_with_progress(x.max(10), progress_bar())?;
            t.save_cache(path)?;
            eprintln!("sieve: wrote cache {}", path.display());
            t
        }
        None => primes::build_sieve_with_progress(x.max(10), progress_bar())?,
    };
    let sc = ramanujan::inequality_spot_check(x, &tables)?;
    #[derive(Serialize)]
    struct Out {
        schema_version: u32,
        x: u64,
        pi_x: u64,
        x_over_e: u64,
        pi_x_over_e: u64,
        lhs_pi_squared: String,
        rhs_lower: Tagged,
        rhs_upper: Tagged,
        verdict: &'static str,
    }
    let verdict = match sc.verdict {
        SpotCheckVerdict::Holds => "holds",
        SpotCheckVerdict::Fails => "fails",
        SpotCheckVerdict::Indeterminate => "indeterminate",
    };
    print_json(&Out {
        schema_version: SCHEMA_VERSION,
        x: sc.x,
        pi_x: sc.pi_x,
        x_over_e: sc.x_over_e,
        pi_x_over_e: sc.pi_x_over_e,
        lhs_pi_squared: sc.lhs.to_string(),
        rhs_lower: Tagged::down(sc.rhs_lower),
        rhs_upper: Tagged::up(sc.rhs_upper),
        verdict,
    });
    match sc.verdict {
        SpotCheckVerdict::Indeterminate => Err(Error::Certification(
            "spot check indeterminate at this precision".into(),
        )),
        _ => Ok(ExitCode::SUCCESS),
    }
}

fn sieve_selftest(limit: u64) -> Result<ExitCode> {
    let tables = primes::build_sieve_with_progress(limit, progress_bar())?;
    // independent anchors: classical prime counts
    let anchors: [(f64, u64); 4] = [
        (1e6, 78_498),
        (1e7, 664_579),
        (1e8, 5_761_455),
        (1e9, 50_847_534),
    ];
    let mut checked = Vec::new();
    for (x, pi) in anchors {
        if x <= limit as f64 {
            let got = tables.prime_count(x)?;
            if got != pi {
                return Err(Error::Certification(format!(
                    "pi({x}) = {got}, expected {pi}"
                )));
            }
            checked.push((x, pi));
        }
    }
    // cross-check against the simple sieve at small scale
    let small = limit.min(1_000_000);
    let reference = primes::simple_sieve(small);
    if tables.prime_count(small as f64)? as usize != reference.len() {
        return Err(Error::Certification(
            "segmented sieve disagrees with the simple sieve".into(),
        ));
    }
    // psi - theta must satisfy the square-root transfer bound
    let c = tables.chebyshev(limit as f64)?;
    let gap = c.psi - c.theta;
    let cap = (1.0 + 1.47e-7) * (limit as f64).sqrt() + 1.78 * (limit as f64).powf(1.0 / 3.0);
    if !(0.0 <= gap && gap <= cap) {
        return Err(Error::Certification(format!(
            "psi - theta = {gap} outside [0, {cap}] at {limit}"
        )));
    }
    #[derive(Serialize)]
    struct Out {
        schema_version: u32,
        limit: u64,
        anchors_checked: Vec<(f64, u64)>,
        simple_sieve_crosscheck_limit: u64,
        theta_at_limit: Tagged,
        psi_at_limit: Tagged,
        psi_minus_theta: Tagged,
        transfer_cap: Tagged,
    }
    print_json(&Out {
        schema_version: SCHEMA_VERSION,
        limit,
        anchors_checked: checked,
        simple_sieve_crosscheck_limit: small,
        theta_at_limit: Tagged::exact(c.theta),
        psi_at_limit: Tagged::exact(c.psi),
        psi_minus_theta: Tagged::exact(gap),
        transfer_cap: Tagged::exact(cap),
    });
    Ok(ExitCode::SUCCESS)
}
