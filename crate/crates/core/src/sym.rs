//! Machine verification of the symmetrization machinery: the admissible
//! C-space, the difference-calculus identity behind the symmetrization
//! lemma, and the constructive decomposition C = Xp + X^{N-2} q'(1/X).

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::periods::{is_in_w, Sign};
use crate::poly::{l_operator, mobius_subst, QPoly};
use crate::rat::{choose, rat, Rat};

/// An even polynomial C with zero constant term, degrees 2..N-3, whose
/// L-image is a constant plus an odd polynomial.
#[derive(Debug, Clone)]
pub struct AdmissibleC {
    pub weight: i64,
    pub poly: QPoly,
}

impl AdmissibleC {
    pub fn new(weight: i64, poly: QPoly) -> Result<Self> {
        let (_, odd) = poly.parity_split();
        if !odd.is_zero() || !poly.coeff(0).is_zero() {
            return Err(Error::NotInSpace {
                space: "even polynomials with zero constant term".into(),
            });
        }
        if !poly.is_zero() && poly.degree() > (weight - 3) as usize {
            return Err(Error::DegreeTooLarge {
                deg: poly.degree(),
                bound: (weight - 3) as usize,
            });
        }
        if !l_operator(&poly, weight)?.is_const_plus_odd() {
            return Err(Error::NotInSpace {
                space: "admissible C-space (L_C not constant plus odd)".into(),
            });
        }
        Ok(AdmissibleC { weight, poly })
    }
}

/// Exact basis of admissible C, computed as the kernel of the linear system
/// "coefficients of X^2, X^4, ... in L_C vanish" over the K-1 unknown even
/// coefficients of C.
pub fn admissible_space(n: i64) -> Result<Vec<AdmissibleC>> {
    crate::depth::check_odd_weight(n)?;
    let k1 = ((n - 3) / 2) as usize;
    // column t-1 holds the L-image of X^{2t}
    let images: Vec<QPoly> = (1..=k1)
        .map(|t| l_operator(&QPoly::monomial(rat(1), 2 * t), n))
        .collect::<Result<_>>()?;
    let mut rows = Vec::new();
    for deg in 1..=k1 {
        rows.push(images.iter().map(|p| p.coeff(2 * deg)).collect::<Vec<Rat>>());
    }
    let kernel = QMatrix::from_rows(rows).right_kernel_basis();
    kernel
        .into_iter()
        .map(|v| {
            let mut coeffs = vec![Rat::zero(); 2 * k1 + 1];
            for (t, c) in v.into_iter().enumerate() {
                coeffs[2 * (t + 1)] = c;
            }
            AdmissibleC::new(n, QPoly::new(coeffs))
        })
        .collect()
}

/// p(X) = C'(X) + X^{N-3} C'(1/X); satisfies p(X) = X^{N-3} p(1/X).
pub fn symmetrize_p(c: &AdmissibleC) -> QPoly {
    let d = c.poly.derivative();
    let reversed = mobius_subst(&d, (c.weight - 3) as usize, 0, 1, 1, 0)
        .expect("deg C' <= N-4");
    d.add(&reversed)
}

/// q(X) = X^{N-1} C(1/X) - C(X); satisfies q(0) = 0 and
/// q(X) + X^{N-1} q(1/X) = 0.
pub fn antisymmetrize_q(c: &AdmissibleC) -> QPoly {
    let reversed = mobius_subst(&c.poly, (c.weight - 1) as usize, 0, 1, 1, 0)
        .expect("deg C <= N-3");
    reversed.sub(&c.poly)
}

/// X^{N-2} q'(1/X) for the q attached to C; equals (N-1) C - X p exactly.
pub fn q_prime_reversed(c: &AdmissibleC) -> QPoly {
    let q = antisymmetrize_q(c);
    mobius_subst(&q.derivative(), (c.weight - 2) as usize, 0, 1, 1, 0)
        .expect("deg q' <= N-2")
}

/// The binomial-coefficient polynomial C(T, l) = T(T-1)...(T-l+1)/l!.
pub fn binom_poly(l: usize) -> QPoly {
    let mut out = QPoly::constant(rat(1));
    for t in 0..l {
        out = out.mul(&QPoly::new(vec![rat(-(t as i64)), rat(1)]));
        out = out.scale(&(rat(1) / rat(t as i64 + 1)));
    }
    out
}

/// Forward differences (D^0 f(0), ..., D^bound f(0)); the Newton expansion
/// sum D^l f(0) C(T, l) reconstructs f exactly.
pub fn newton_expansion(f: &QPoly, bound: usize) -> Result<Vec<Rat>> {
    if !f.is_zero() && f.degree() > bound {
        return Err(Error::DegreeTooLarge { deg: f.degree(), bound });
    }
    let mut values: Vec<Rat> = (0..=bound as i64).map(|t| f.eval(&rat(t))).collect();
    let mut out = Vec::with_capacity(bound + 1);
    out.push(values[0].clone());
    for _ in 0..bound {
        values = values.windows(2).map(|w| &w[1] - &w[0]).collect();
        out.push(values.first().cloned().unwrap_or_else(Rat::zero));
    }
    Ok(out)
}

/// f(T) = (T/2) [ C(T, 2i) + C(2K-T, 2i) ], the polynomial whose forward
/// differences at 0 drive the symmetrization identity.
pub fn sym_source_poly(k: i64, i: i64) -> QPoly {
    let two_i = (2 * i) as usize;
    let first = binom_poly(two_i);
    // C(2K - T, 2i) as a polynomial in T
    let mut second = QPoly::constant(rat(1));
    for t in 0..two_i {
        second = second.mul(&QPoly::new(vec![rat(2 * k - t as i64), rat(-1)]));
        second = second.scale(&(rat(1) / rat(t as i64 + 1)));
    }
    let half_t = QPoly::new(vec![Rat::zero(), rat(1) / rat(2)]);
    half_t.mul(&first.add(&second))
}

/// x_p = D^p f(0) for the source polynomial above. The closed form is
/// (p/2) [ C(1, 2i-p+1) - (-1)^p C(2K-p, 2i-p+1) ].
pub fn x_values(k: i64, i: i64) -> Vec<Rat> {
    let f = sym_source_poly(k, i);
    let bound = (2 * i + 1) as usize;
    newton_expansion(&f, bound).expect("deg f = 2i+1")
}

fn delta(a: i64, b: i64) -> Rat {
    if a == b {
        rat(1)
    } else {
        rat(0)
    }
}

fn ch(n: i64, k: i64) -> Rat {
    debug_assert!(n >= 0);
    Rat::from_integer(choose(n as u64, k))
}

/// Check the core identity of the symmetrization lemma for every pair
/// 1 <= i, j <= K-1, with exact arithmetic throughout.
pub fn verify_lemma_sym(k: i64) -> Result<bool> {
    if k < 2 {
        return Err(Error::InvalidWeight(2 * k + 1));
    }
    for i in 1..k {
        let x = x_values(k, i);
        let xv = |p: i64| -> Rat {
            x.get(p as usize).cloned().unwrap_or_else(Rat::zero)
        };
        for j in 1..k {
            let mut lhs = Rat::zero();
            for l in 1..=i + 1 {
                lhs += xv(2 * l - 1)
                    * (ch(2 * j, 2 * k - 2 * l) + ch(2 * j, 2 * l - 1) - delta(j, k - l));
            }
            for l in 1..=i {
                lhs += xv(2 * l)
                    * (ch(2 * j, 2 * l) + ch(2 * j, 2 * k - 2 * l - 1) - delta(j, l));
            }
            let rhs = rat(j)
                * (ch(2 * j, 2 * i) + ch(2 * j, 2 * k - 2 * i - 1) - delta(j, i)
                    + ch(2 * k - 2 * j, 2 * i)
                    + ch(2 * k - 2 * j, 2 * k - 2 * i - 1)
                    - delta(k - j, i));
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// For every basis element C of the admissible space: p lies in W^+_{N-1},
/// q lies in W^-_{N+1}, and X^{N-2} q'(1/X) = (N-1) C - X p.
pub fn verify_membership(n: i64) -> Result<bool> {
    for c in admissible_space(n)? {
        let p = symmetrize_p(&c);
        let q = antisymmetrize_q(&c);
        if !is_in_w(&p, n - 1, Sign::Plus)? || !is_in_w(&q, n + 1, Sign::Minus)? {
            return Ok(false);
        }
        let lhs = q_prime_reversed(&c);
        let x = QPoly::monomial(rat(1), 1);
        let rhs = c.poly.scale(&rat(n - 1)).sub(&x.mul(&p));
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}
