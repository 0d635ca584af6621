//! Dense univariate polynomials over the rationals, with the Möbius-type
//! substitutions that express the functional equations, and the L operator
//! L_C(X) = C(X) - C(1+X) - X^{N-2} C(1+1/X).

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rat::{choose_rat, rat, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPoly {
    /// Coefficients by ascending degree, trailing zeros stripped.
    coeffs: Vec<Rat>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: Rat, deg: usize) -> Self {
        let mut v = vec![Rat::zero(); deg + 1];
        v[deg] = c;
        Self::new(v)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the zero polynomial is reported as 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, deg: usize) -> Rat {
        self.coeffs.get(deg).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient vector padded to the given length.
    pub fn coeff_vec(&self, len: usize) -> Vec<Rat> {
        (0..len).map(|i| self.coeff(i)).collect()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        QPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        QPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, s: &Rat) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }

    pub fn derivative(&self) -> QPoly {
        if self.coeffs.len() <= 1 {
            return QPoly::zero();
        }
        QPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * rat(i as i64 + 1))
                .collect(),
        )
    }

    /// p(1+X) by binomial expansion.
    pub fn shift(&self) -> QPoly {
        let mut out = QPoly::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // (1+X)^k
            let term = QPoly::new((0..=k).map(|i| choose_rat(k as u64, i as i64) * c).collect());
            out = out.add(&term);
        }
        out
    }

    /// Split into (even-degree part, odd-degree part).
    pub fn parity_split(&self) -> (QPoly, QPoly) {
        let mut ev = vec![Rat::zero(); self.coeffs.len()];
        let mut od = vec![Rat::zero(); self.coeffs.len()];
        for (i, c) in self.coeffs.iter().enumerate() {
            if i % 2 == 0 {
                ev[i] = c.clone();
            } else {
                od[i] = c.clone();
            }
        }
        (QPoly::new(ev), QPoly::new(od))
    }

    /// True iff the even part is a constant.
    pub fn is_const_plus_odd(&self) -> bool {
        let (ev, _) = self.parity_split();
        ev.degree() == 0
    }
}

/// (cX+e)^d * p((aX+b)/(cX+e)), expanded exactly.
/// Requires deg p <= d so the result is a polynomial.
pub fn mobius_subst(p: &QPoly, d: usize, a: i64, b: i64, c: i64, e: i64) -> Result<QPoly> {
    if !p.is_zero() && p.degree() > d {
        return Err(Error::DegreeTooLarge { deg: p.degree(), bound: d });
    }
    let num = QPoly::from_i64(&[b, a]);
    let den = QPoly::from_i64(&[e, c]);
    // num^k and den^(d-k), built incrementally
    let mut num_pows = Vec::with_capacity(d + 1);
    let mut den_pows = Vec::with_capacity(d + 1);
    let one = QPoly::constant(rat(1));
    num_pows.push(one.clone());
    den_pows.push(one);
    for i in 1..=d {
        let np = num_pows[i - 1].mul(&num);
        let dp = den_pows[i - 1].mul(&den);
        num_pows.push(np);
        den_pows.push(dp);
    }
    let mut out = QPoly::zero();
    for k in 0..=d.min(p.degree()) {
        let ck = p.coeff(k);
        if ck.is_zero() {
            continue;
        }
        out = out.add(&num_pows[k].mul(&den_pows[d - k]).scale(&ck));
    }
    Ok(out)
}

/// L_C(X) = C(X) - C(1+X) - X^{n-2} C(1+1/X) for odd n >= 5.
pub fn l_operator(c: &QPoly, n: i64) -> Result<QPoly> {
    if n < 5 || n % 2 == 0 {
        return Err(Error::InvalidWeight(n));
    }
    let d = (n - 2) as usize;
    if !c.is_zero() && c.degree() > d {
        return Err(Error::DegreeTooLarge { deg: c.degree(), bound: d });
    }
    let third = mobius_subst(c, d, 1, 1, 1, 0)?;
    Ok(c.sub(&c.shift()).sub(&third))
}
