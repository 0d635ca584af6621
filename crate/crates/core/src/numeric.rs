//! Floating-point zeta evaluation with Euler-Maclaurin tail corrections,
//! rational reconstruction of relation residues, and the numeric resolver
//! for the zeta(N)-coefficient convention of the Euler-type decomposition.

use serde::Serialize;

use crate::depth::{decomposition, pairs, PairIndex};
use crate::error::{Error, Result};
use crate::rat::{rat_to_f64, rat_to_string};
use crate::rels::RelationVec;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// A value together with an absolute error bound.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct NumericResult {
    pub value: f64,
    pub error_bound: f64,
}

/// Kahan compensated summation.
struct Kahan {
    sum: f64,
    c: f64,
}

impl Kahan {
    fn new() -> Self {
        Kahan { sum: 0.0, c: 0.0 }
    }
    fn add(&mut self, x: f64) {
        let y = x - self.c;
        let t = self.sum + y;
        self.c = (t - self.sum) - y;
        self.sum = t;
    }
    fn value(&self) -> f64 {
        self.sum
    }
}

/// Euler-Maclaurin tail: sum_{k >= a} k^{-s} with corrections through the
/// third Bernoulli term; returns (value, bound on the truncation error).
fn zeta_tail(s: f64, a: f64) -> (f64, f64) {
    let int = a.powf(1.0 - s) / (s - 1.0);
    let half = 0.5 * a.powf(-s);
    let b2 = s * a.powf(-s - 1.0) / 12.0;
    let b4 = -s * (s + 1.0) * (s + 2.0) * a.powf(-s - 3.0) / 720.0;
    let next = s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * a.powf(-s - 5.0) / 30240.0;
    (int + half + b2 + b4, next.abs())
}

/// Euler-Maclaurin tail for sum_{k >= a} k^{-s} ln k.
fn zeta_log_tail(s: f64, a: f64) -> (f64, f64) {
    let ln_a = a.ln();
    let int = a.powf(1.0 - s) * (ln_a / (s - 1.0) + 1.0 / ((s - 1.0) * (s - 1.0)));
    let half = 0.5 * a.powf(-s) * ln_a;
    // f'(x) = x^{-s-1} (1 - s ln x)
    let b2 = -(1.0 - s * ln_a) * a.powf(-s - 1.0) / 12.0;
    // first omitted term is O(a^{-s-3} ln a)
    let next = (s * s * s * ln_a + 3.0 * s * s) * a.powf(-s - 3.0) / 720.0;
    (int + half + b2, next.abs())
}

/// zeta(s) by direct summation plus an Euler-Maclaurin corrected tail.
pub fn zeta_single(s: i64, eps: f64) -> Result<NumericResult> {
    if s < 2 {
        return Err(Error::Divergent(format!("zeta({s})")));
    }
    if eps <= 0.0 {
        return Err(Error::Divergent("eps must be positive".into()));
    }
    let m = 20_000u64;
    let sf = s as f64;
    let mut acc = Kahan::new();
    for k in 1..=m {
        acc.add((k as f64).powf(-sf));
    }
    let (tail, tail_err) = zeta_tail(sf, (m + 1) as f64);
    let value = acc.value() + tail;
    let error_bound = tail_err + 4e-16 * value.abs();
    Ok(NumericResult { value, error_bound })
}

/// zeta(n1, n2) = sum_{0 < k1 < k2} k1^{-n1} k2^{-n2}, the convention with
/// the first exponent on the smaller index. Prefix sums over k1, with the
/// slowly convergent outer tail handled by Euler-Maclaurin corrections.
pub fn zeta_double(n1: i64, n2: i64, eps: f64) -> Result<NumericResult> {
    if n2 < 2 {
        return Err(Error::Divergent(format!("zeta({n1},{n2})")));
    }
    if n1 < 1 {
        return Err(Error::Divergent(format!("zeta({n1},{n2})")));
    }
    if eps <= 0.0 {
        return Err(Error::Divergent("eps must be positive".into()));
    }
    let m = 100_000u64;
    let f1 = n1 as f64;
    let f2 = n2 as f64;
    let mut prefix = Kahan::new();
    let mut total = Kahan::new();
    for k in 2..=m {
        prefix.add(((k - 1) as f64).powf(-f1));
        total.add(prefix.value() * (k as f64).powf(-f2));
    }
    let a = (m + 1) as f64;
    // tail over k > m: k^{-n2} * H_{k-1}^{(n1)}
    let (tail, tail_err) = if n1 >= 2 {
        let z1 = zeta_single(n1, eps)?;
        let (t_outer, e_outer) = zeta_tail(f2, a);
        // H_{k-1}^{(n1)} = zeta(n1) - r(k) with
        // r(k) = k^{1-n1}/(n1-1) + k^{-n1}/2 + n1 k^{-n1-1}/12 - ...
        let (t1, e1) = zeta_tail(f1 + f2 - 1.0, a);
        let (t2, e2) = zeta_tail(f1 + f2, a);
        let (t3, e3) = zeta_tail(f1 + f2 + 1.0, a);
        let (t4, e4) = zeta_tail(f1 + f2 + 3.0, a);
        let corr = t1 / (f1 - 1.0) + t2 / 2.0 + f1 * t3 / 12.0
            - f1 * (f1 + 1.0) * (f1 + 2.0) * t4 / 720.0;
        // first omitted inner term is O(k^{-n1-5})
        let (t5, _) = zeta_tail(f1 + f2 + 5.0, a);
        let err = z1.error_bound * t_outer.abs()
            + z1.value.abs() * e_outer
            + e1 + e2 + e3 + e4
            + f1 * (f1 + 1.0) * (f1 + 2.0) * (f1 + 3.0) * (f1 + 4.0) * t5 / 30240.0;
        (z1.value * t_outer - corr, err)
    } else {
        // n1 = 1: H_{k-1} = ln k + gamma - 1/(2k) - 1/(12k^2) + 1/(120k^4) - ...
        let (t_log, e_log) = zeta_log_tail(f2, a);
        let (t0, e0) = zeta_tail(f2, a);
        let (t1, e1) = zeta_tail(f2 + 1.0, a);
        let (t2, e2) = zeta_tail(f2 + 2.0, a);
        let (t4, e4) = zeta_tail(f2 + 4.0, a);
        let (t6, _) = zeta_tail(f2 + 6.0, a);
        let val = t_log + EULER_GAMMA * t0 - t1 / 2.0 - t2 / 12.0 + t4 / 120.0;
        let err = e_log + EULER_GAMMA * e0 + e1 / 2.0 + e2 / 12.0 + e4 / 120.0 + t6 / 252.0;
        (val, err)
    };
    let value = total.value() + tail;
    let error_bound = tail_err + 8e-16 * (value.abs() + 1.0);
    Ok(NumericResult { value, error_bound })
}

/// A rational p/q recovered from a float.
#[derive(Debug, Clone, Serialize)]
pub struct Reconstructed {
    pub numer: i64,
    pub denom: i64,
    pub residual: f64,
}

/// Smallest-denominator continued-fraction convergent of x within `window`,
/// with denominator at most `max_den`. Falls back to the closest convergent
/// found (a near miss) when nothing lands inside the window.
pub fn reconstruct_rational(x: f64, max_den: i64, window: f64) -> Reconstructed {
    let (mut h0, mut h1) = (1i64, x.floor() as i64);
    let (mut k0, mut k1) = (0i64, 1i64);
    let mut frac = x - x.floor();
    let mut best = Reconstructed {
        numer: h1,
        denom: 1,
        residual: (x - h1 as f64).abs(),
    };
    if best.residual <= window {
        return best;
    }
    for _ in 0..64 {
        if frac.abs() < 1e-18 {
            break;
        }
        let inv = 1.0 / frac;
        let a = inv.floor() as i64;
        frac = inv - inv.floor();
        let h2 = a.saturating_mul(h1).saturating_add(h0);
        let k2 = a.saturating_mul(k1).saturating_add(k0);
        if k2 > max_den || k2 <= 0 {
            break;
        }
        let residual = (x - h2 as f64 / k2 as f64).abs();
        if residual < best.residual {
            best = Reconstructed { numer: h2, denom: k2, residual };
        }
        if residual <= window {
            return best;
        }
        (h0, h1) = (h1, h2);
        (k0, k1) = (k1, k2);
    }
    best
}

/// Outcome of checking a relation vector against real double zeta values.
#[derive(Debug, Clone, Serialize)]
pub struct RelationCertificate {
    pub weight: i64,
    pub coeffs: Vec<String>,
    /// sum_r c_r zeta(r, N-r) divided by zeta(N)
    pub rho: f64,
    pub error_bound: f64,
    pub reconstructed: Reconstructed,
    /// residual small enough, and the denominator low enough that the
    /// rational is the unique candidate below the denominator cap
    pub passes: bool,
}

const DEN_CAP: i64 = 1_000_000;

/// Evaluate sum_r c_r zeta(r, N-r), divide by zeta(N), and reconstruct the
/// nearest small rational. Passing requires the residual within
/// max(eps, accumulated bound) and uniqueness of the reconstruction below
/// the denominator cap: residual <= 1 / (2 * denom * cap).
pub fn verify_relation_numeric(n: i64, rel: &RelationVec, eps: f64) -> Result<RelationCertificate> {
    crate::depth::check_odd_weight(n)?;
    let mut v = 0.0f64;
    let mut v_err = 0.0f64;
    for (i, c) in rel.coeffs.iter().enumerate() {
        let r = 2 * i as i64 + 3;
        let cf = rat_to_f64(c);
        if cf == 0.0 {
            continue;
        }
        let z = zeta_double(r, n - r, eps)?;
        v += cf * z.value;
        v_err += cf.abs() * z.error_bound + 2e-16 * (cf * z.value).abs();
    }
    let zn = zeta_single(n, eps)?;
    let rho = v / zn.value;
    let error_bound = (v_err + rho.abs() * zn.error_bound) / zn.value + 1e-15;
    let window = eps.max(error_bound);
    let rec = reconstruct_rational(rho, DEN_CAP, window);
    let unique = rec.residual <= 1.0 / (2.0 * rec.denom as f64 * DEN_CAP as f64);
    let passes = rec.residual <= window && unique;
    Ok(RelationCertificate {
        weight: n,
        coeffs: rel.coeffs.iter().map(rat_to_string).collect(),
        rho,
        error_bound,
        reconstructed: rec,
        passes,
    })
}

/// Candidate readings of the zeta(N) coefficient printed in the Euler-type
/// decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Reading {
    /// 1 - C(N-1, 2n-1) - C(N-1, 2m), verbatim
    Printed,
    /// the printed bracket scaled by -1/2
    PrintedTimesNegHalf,
    /// 1 - C(N-1, 2m-1) - C(N-1, 2n), the two arguments exchanged
    ArgsSwapped,
}

pub const ALL_READINGS: [Reading; 3] = [
    Reading::Printed,
    Reading::PrintedTimesNegHalf,
    Reading::ArgsSwapped,
];

#[derive(Debug, Clone, Serialize)]
pub struct GeneratorCheck {
    pub m: i64,
    pub n: i64,
    pub lhs: f64,
    pub matching: Vec<Reading>,
}

/// Which readings of the zeta(N) coefficient reproduce the numeric value of
/// every generator at weight N, holding the product coefficients fixed.
#[derive(Debug, Clone, Serialize)]
pub struct ConventionReport {
    pub weight: i64,
    pub tolerance: f64,
    pub generators: Vec<GeneratorCheck>,
    /// readings consistent across all generators
    pub consistent: Vec<Reading>,
}

fn reading_coeff(reading: Reading, n: i64, p: &PairIndex, printed: f64) -> f64 {
    match reading {
        Reading::Printed => printed,
        Reading::PrintedTimesNegHalf => -0.5 * printed,
        Reading::ArgsSwapped => {
            let nn = (n - 1) as u64;
            1.0 - big_to_f64(crate::rat::choose(nn, 2 * p.m - 1))
                - big_to_f64(crate::rat::choose(nn, 2 * p.n))
        }
    }
}

fn big_to_f64(b: num_bigint::BigInt) -> f64 {
    use num_traits::ToPrimitive;
    b.to_f64().unwrap_or(f64::NAN)
}

pub fn resolve_decomposition_convention(n: i64, tol: f64) -> Result<ConventionReport> {
    crate::depth::check_odd_weight(n)?;
    let eps = 1e-10;
    let idx = pairs(n)?;
    let rows = decomposition(n)?;
    let zn = zeta_single(n, eps)?.value;
    let mut generators = Vec::new();
    for row in &rows {
        let p = row.pair;
        let lhs = zeta_double(2 * p.m + 1, 2 * p.n, eps)?.value;
        let mut products = 0.0;
        for (j, c) in row.product_coeffs.iter().enumerate() {
            let t = &idx[j];
            products += big_to_f64(c.clone())
                * zeta_single(2 * t.m + 1, eps)?.value
                * zeta_single(2 * t.n, eps)?.value;
        }
        let printed = big_to_f64(row.zeta_n_coeff.clone());
        let matching = ALL_READINGS
            .iter()
            .copied()
            .filter(|&r| {
                let rhs = reading_coeff(r, n, &p, printed) * zn + products;
                (lhs - rhs).abs() <= tol
            })
            .collect();
        generators.push(GeneratorCheck { m: p.m, n: p.n, lhs, matching });
    }
    let consistent = ALL_READINGS
        .iter()
        .copied()
        .filter(|r| generators.iter().all(|g| g.matching.contains(r)))
        .collect();
    Ok(ConventionReport {
        weight: n,
        tolerance: tol,
        generators,
        consistent,
    })
}
