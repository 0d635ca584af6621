//! Exact rational scalars and binomial coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The scalar of all exact computation. `BigRational` keeps the denominator
/// positive and the fraction reduced, which is exactly the invariant we need.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_frac(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Format as "num/den", or just "num" when the denominator is 1.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
    })
}

/// Binomial coefficient with the conventions used throughout: 0 for k < 0 or
/// k > n, ordinary value otherwise. Negative n with k >= 0 is outside every
/// formula here and signals an index bug.
pub fn binomial(n: i64, k: i64) -> Result<BigInt> {
    if k < 0 {
        return Ok(BigInt::zero());
    }
    if n < 0 {
        return Err(Error::NegativeBinomial { n, k });
    }
    Ok(choose(n as u64, k))
}

/// Total binomial for callers that have already established n >= 0.
pub fn choose(n: u64, k: i64) -> BigInt {
    if k < 0 || (k as u64) > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn choose_rat(n: u64, k: i64) -> Rat {
    Rat::from_integer(choose(n, k))
}

/// Scale a rational vector to coprime integer entries with positive first
/// nonzero entry. The zero vector is returned unchanged.
pub fn normalize_vec(v: &[Rat]) -> Vec<Rat> {
    use num_integer::Integer;
    let mut lcm = BigInt::one();
    let mut gcd = BigInt::zero();
    for x in v {
        if !x.is_zero() {
            lcm = lcm.lcm(x.denom());
        }
    }
    let scaled: Vec<BigInt> = v
        .iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect();
    for x in &scaled {
        gcd = gcd.gcd(x);
    }
    if gcd.is_zero() {
        return v.to_vec();
    }
    let sign = scaled
        .iter()
        .find(|x| !x.is_zero())
        .map(|x| if x.is_negative() { -1 } else { 1 })
        .unwrap_or(1);
    let div = gcd * BigInt::from(sign);
    scaled
        .into_iter()
        .map(|x| Rat::from_integer(x / &div))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_standard() {
        assert_eq!(binomial(4, 2).unwrap(), BigInt::from(6));
        assert_eq!(binomial(6, 0).unwrap(), BigInt::from(1));
        assert_eq!(binomial(10, 10).unwrap(), BigInt::from(1));
    }

    #[test]
    fn binomial_out_of_range_is_zero() {
        assert_eq!(binomial(2, 5).unwrap(), BigInt::zero());
        assert_eq!(binomial(6, -1).unwrap(), BigInt::zero());
    }

    #[test]
    fn binomial_negative_n_rejected() {
        assert!(binomial(-3, 1).is_err());
    }

    #[test]
    fn normalize_makes_coprime_integers() {
        let v = vec![rat_frac(-2, 3), rat_frac(4, 3), rat(0)];
        let n = normalize_vec(&v);
        assert_eq!(n, vec![rat(1), rat(-2), rat(0)]);
    }
}
