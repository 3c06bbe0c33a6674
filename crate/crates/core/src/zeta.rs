//! Zeta-function inputs: the zero-free region, the RH verification height,
//! per-sigma zero-density constants, the catalog of low zeros, and the
//! truncated-explicit-formula diagnostic.

use crate::error::{Error, Result};
use crate::numerics::quad::Neumaier;
use crate::primes::SieveTables;
use std::path::Path;

/// Classical zero-free region sigma >= 1 - 1/(R log t), asserted for t >= 3.
#[derive(Clone, Copy, Debug)]
pub struct ZeroFreeRegion {
    r: f64,
}

pub const DEFAULT_R: f64 = 5.573412;

impl Default for ZeroFreeRegion {
    fn default() -> Self {
        ZeroFreeRegion { r: DEFAULT_R }
    }
}

impl ZeroFreeRegion {
    pub fn new(r: f64) -> Result<Self> {
        if !(r > 0.0) {
            return Err(Error::Domain(format!(
                "zero-free constant R = {r} must be positive"
            )));
        }
        Ok(ZeroFreeRegion { r })
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    /// eta(t) = 1/(R log t). The region is only asserted for t >= 3.
    pub fn eta(&self, t: f64) -> Result<f64> {
        if !(t >= 3.0) {
            return Err(Error::Domain(format!(
                "eta({t}) outside the asserted region t >= 3"
            )));
        }
        Ok(1.0 / (self.r * t.ln()))
    }
}

/// Height to which every nontrivial zero is known to lie on the critical
/// line. 3e12 is the ceiling; densities derived under a smaller height carry
/// that height in their source string.
#[derive(Clone, Copy, Debug)]
pub struct RhHeight {
    h: f64,
}

pub const MAX_RH_HEIGHT: f64 = 3e12;

impl Default for RhHeight {
    fn default() -> Self {
        RhHeight { h: MAX_RH_HEIGHT }
    }
}

impl RhHeight {
    pub fn new(h: f64) -> Result<Self> {
        if !(h > 0.0 && h <= MAX_RH_HEIGHT) {
            return Err(Error::Domain(format!(
                "RH height {h} outside (0, {MAX_RH_HEIGHT}]"
            )));
        }
        Ok(RhHeight { h })
    }

    pub fn h(&self) -> f64 {
        self.h
    }
}

/// One per-sigma row of zero-density constants:
/// N(sigma, T) <= c1 T^(8(1-sigma)/3) log^(5-2 sigma) T + c2 log^2 T.
#[derive(Clone, Debug)]
pub struct DensityEntry {
    pub sigma: f64,
    pub c1: f64,
    pub c2: f64,
    pub source: String,
}

#[derive(Clone, Debug, Default)]
pub struct ZeroDensityTable {
    entries: Vec<DensityEntry>,
}

impl ZeroDensityTable {
    pub fn new(entries: Vec<DensityEntry>) -> Result<Self> {
        for w in entries.windows(2) {
            if w[0].sigma >= w[1].sigma {
                return Err(Error::Domain(
                    "density table sigmas must be strictly increasing".into(),
                ));
            }
        }
        for e in &entries {
            if !(0.75..1.0).contains(&e.sigma) {
                return Err(Error::Domain(format!(
                    "density sigma {} outside [0.75, 1)",
                    e.sigma
                )));
            }
            if !(e.c1 > 0.0 && e.c2 > 0.0) {
                return Err(Error::Domain(format!(
                    "density constants for sigma {} must be positive",
                    e.sigma
                )));
            }
        }
        Ok(ZeroDensityTable { entries })
    }

    pub fn entries(&self) -> &[DensityEntry] {
        &self.entries
    }

    pub fn sigmas(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.sigma).collect()
    }

    /// Exact per-sigma lookup; the density lemma is per-sigma, so no
    /// interpolation is offered.
    pub fn entry(&self, sigma: f64) -> Result<&DensityEntry> {
        self.entries
            .iter()
            .find(|e| (e.sigma - sigma).abs() < 1e-9)
            .ok_or(Error::UnsupportedSigma(sigma))
    }

    /// Upper bound for N(sigma, T).
    pub fn density_bound(&self, sigma: f64, t: f64) -> Result<f64> {
        if !(t >= 3.0) {
            return Err(Error::Domain(format!(
                "density bound needs T >= 3, got {t}"
            )));
        }
        let e = self.entry(sigma)?;
        let lt = t.ln();
        Ok(e.c1 * t.powf(8.0 * (1.0 - sigma) / 3.0) * lt.powf(5.0 - 2.0 * sigma) + e.c2 * lt * lt)
    }

    /// Parses the structured key-value density file: one entry per line,
    /// `sigma=<v> c1=<v> c2=<v> source="<text>"`, '#' comments allowed.
    pub fn parse(text: &str, path: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (ln, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let data_err = |msg: String| Error::Data {
                path: path.to_string(),
                line: ln + 1,
                msg,
            };
            let mut sigma = None;
            let mut c1 = None;
            let mut c2 = None;
            let mut source = String::new();
            let mut rest = line;
            while !rest.is_empty() {
                rest = rest.trim_start();
                if rest.is_empty() {
                    break;
                }
                let eq = rest
                    .find('=')
                    .ok_or_else(|| data_err(format!("expected key=value, got '{rest}'")))?;
                let key = rest[..eq].trim();
                let after = &rest[eq + 1..];
                let (value, next) = if let Some(stripped) = after.strip_prefix('"') {
                    let end = stripped
                        .find('"')
                        .ok_or_else(|| data_err("unterminated quoted value".into()))?;
                    (&stripped[..end], &stripped[end + 1..])
                } else {
                    match after.find(char::is_whitespace) {
                        Some(ws) => (&after[..ws], &after[ws..]),
                        None => (after, ""),
                    }
                };
                match key {
                    "sigma" => sigma = Some(parse_num(value, ln, path, "sigma")?),
                    "c1" => c1 = Some(parse_num(value, ln, path, "c1")?),
                    "c2" => c2 = Some(parse_num(value, ln, path, "c2")?),
                    "source" => source = value.to_string(),
                    other => return Err(data_err(format!("unknown key '{other}'"))),
                }
                rest = next;
            }
            entries.push(DensityEntry {
                sigma: sigma.ok_or_else(|| data_err("missing sigma".into()))?,
                c1: c1.ok_or_else(|| data_err("missing c1".into()))?,
                c2: c2.ok_or_else(|| data_err("missing c2".into()))?,
                source,
            });
        }
        if entries.is_empty() {
            return Err(Error::Data {
                path: path.to_string(),
                line: 0,
                msg: "no density entries found".into(),
            });
        }
        ZeroDensityTable::new(entries)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text, &path.display().to_string())
    }
}

fn parse_num(s: &str, ln: usize, path: &str, key: &str) -> Result<f64> {
    s.parse().map_err(|_| Error::Data {
        path: path.to_string(),
        line: ln + 1,
        msg: format!("invalid number '{s}' for {key}"),
    })
}

/// Lemma-2 style bound: for T >= 2 pi e, sum over 0 < gamma <= T of 1/gamma
/// lies within `radius` of `center`.
pub fn lemma2_sum_bound(t: f64) -> Result<(f64, f64)> {
    let floor = 2.0 * std::f64::consts::PI * std::f64::consts::E;
    if !(t >= floor) {
        return Err(Error::Domain(format!(
            "Lemma-2 window needs T >= 2 pi e = {floor:.6}, got {t}"
        )));
    }
    let l = (t / (2.0 * std::f64::consts::PI)).ln();
    Ok((l * l / (4.0 * std::f64::consts::PI), 0.9321))
}

pub const FIRST_ZERO: f64 = 14.134725141734694;

/// Ordered positive imaginary parts of the nontrivial zeros.
#[derive(Clone, Debug)]
pub struct ZeroCatalog {
    gammas: Vec<f64>,
    /// compensated prefix sums of 1/gamma: recip_prefix[k] covers the first k
    recip_prefix: Vec<f64>,
    /// minimal number of printed decimal places across entries
    precision: usize,
}

impl ZeroCatalog {
    pub fn from_gammas(gammas: Vec<f64>, precision: usize) -> Result<Self> {
        if gammas.is_empty() {
            return Err(Error::Domain("zero catalog is empty".into()));
        }
        if (gammas[0] - FIRST_ZERO).abs() > 1e-4 {
            return Err(Error::Domain(format!(
                "first catalog zero {} is not the known 14.134725...",
                gammas[0]
            )));
        }
        for w in gammas.windows(2) {
            if !(w[0] < w[1]) {
                return Err(Error::Domain(format!(
                    "catalog not strictly ascending near {}",
                    w[0]
                )));
            }
        }
        if precision < 9 {
            return Err(Error::Domain(format!(
                "catalog precision {precision} below the required 9 decimal places"
            )));
        }
        let mut recip_prefix = Vec::with_capacity(gammas.len() + 1);
        let mut acc = Neumaier::new();
        recip_prefix.push(0.0);
        for &g in &gammas {
            acc.add(1.0 / g);
            recip_prefix.push(acc.value());
        }
        Ok(ZeroCatalog {
            gammas,
            recip_prefix,
            precision,
        })
    }

    /// Parses the zeros file: UTF-8 text, one decimal gamma per line,
    /// ascending, '#' comments allowed.
    pub fn parse(text: &str, path: &str) -> Result<Self> {
        let mut gammas = Vec::new();
        let mut precision = usize::MAX;
        for (ln, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let v: f64 = line.parse().map_err(|_| Error::Data {
                path: path.to_string(),
                line: ln + 1,
                msg: format!("invalid zero entry '{line}'"),
            })?;
            if !v.is_finite() || v <= 0.0 {
                return Err(Error::Data {
                    path: path.to_string(),
                    line: ln + 1,
                    msg: format!("zero entry {v} must be positive and finite"),
                });
            }
            let decimals = line.rsplit_once('.').map_or(0, |(_, d)| {
                d.bytes().take_while(|b| b.is_ascii_digit()).count()
            });
            precision = precision.min(decimals);
            gammas.push(v);
        }
        if gammas.is_empty() {
            return Err(Error::Data {
                path: path.to_string(),
                line: 0,
                msg: "no zeros found".into(),
            });
        }
        Self::from_gammas(
            gammas,
            if precision == usize::MAX {
                0
            } else {
                precision
            },
        )
        .map_err(|e| match e {
            Error::Domain(msg) => Error::Data {
                path: path.to_string(),
                line: 0,
                msg,
            },
            other => other,
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text, &path.display().to_string())
    }

    pub fn len(&self) -> usize {
        self.gammas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gammas.is_empty()
    }

    pub fn gammas(&self) -> &[f64] {
        &self.gammas
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn max_gamma(&self) -> f64 {
        *self.gammas.last().expect("catalog is never empty")
    }

    pub fn count_upto(&self, t: f64) -> usize {
        self.gammas.partition_point(|&g| g <= t)
    }

    /// Sum of 1/gamma over catalog zeros with gamma <= T, accumulated in
    /// ascending order.
    pub fn sum_recip_gamma(&self, t: f64) -> Result<f64> {
        if t > self.max_gamma() {
            return Err(Error::Coverage {
                msg: format!(
                    "sum to T = {t} exceeds catalog height {:.3}",
                    self.max_gamma()
                ),
                required: t,
            });
        }
        Ok(self.recip_prefix[self.count_upto(t)])
    }

    /// Truncated-explicit-formula residual at half-odd x.
    ///
    /// Pairs each zero 1/2 + i gamma with its conjugate analytically
    /// (2 Re x^(rho-1)/rho) and sums ascending in gamma. For desk-scale x
    /// the hypothesis of the underlying formula (x > e^60) fails, so this is
    /// an empirical convergence diagnostic, not a certified bound; the
    /// returned `budget` is the 2 x log^2 x / T term the formula would
    /// allow.
    pub fn explicit_formula_residual(
        &self,
        tables: &SieveTables,
        x: f64,
        t: f64,
    ) -> Result<ExplicitFormulaDiagnostic> {
        if (x - x.floor() - 0.5).abs() > 1e-9 || x <= 0.0 {
            return Err(Error::Domain(format!(
                "explicit formula needs x half an odd integer, got {x}"
            )));
        }
        if !(50.0 < t && t < x) {
            return Err(Error::Domain(format!(
                "explicit formula needs 50 < T < x, got T = {t}, x = {x}"
            )));
        }
        if t > self.max_gamma() {
            return Err(Error::Coverage {
                msg: format!("T = {t} exceeds catalog height {:.3}", self.max_gamma()),
                required: t,
            });
        }
        let psi = tables.chebyshev(x)?.psi;
        let lx = x.ln();
        let sqrt_x = x.sqrt();
        let n = self.count_upto(t);
        let mut sum = Neumaier::new();
        for &g in &self.gammas[..n] {
            // 2 Re(x^(rho-1)/rho) with rho = 1/2 + i gamma
            let phase = g * lx;
            let denom = 0.25 + g * g;
            sum.add(2.0 / sqrt_x * (0.5 * phase.cos() + g * phase.sin()) / denom);
        }
        let residual = (psi - x + x * sum.value()).abs();
        Ok(ExplicitFormulaDiagnostic {
            residual,
            budget: 2.0 * x * lx * lx / t,
            zeros_used: n,
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ExplicitFormulaDiagnostic {
    pub residual: f64,
    pub budget: f64,
    pub zeros_used: usize,
}
