//! Period polynomial spaces W_h and their restricted parts, computed as
//! exact kernels of the functional-equation constraint systems.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::poly::{mobius_subst, QPoly};
use crate::rat::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
    Full,
}

/// A weight, a sign, and an exact basis of restricted period polynomials.
#[derive(Debug, Clone)]
pub struct PeriodSpace {
    pub weight: i64,
    pub sign: Sign,
    pub basis: Vec<QPoly>,
}

impl PeriodSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

fn check_even_weight(h: i64) -> Result<()> {
    if h < 4 || h % 2 != 0 {
        return Err(Error::InvalidEvenWeight(h));
    }
    Ok(())
}

/// Constraint matrix whose right kernel (coefficient vectors of degree
/// <= h-2 polynomials) is W_h, W_h^+ or W_h^-.
pub fn period_constraint_matrix(h: i64, sign: Sign) -> Result<QMatrix> {
    check_even_weight(h)?;
    let d = (h - 2) as usize;
    let n = d + 1;
    let mut rows: Vec<Vec<Rat>> = Vec::new();

    // P(X) + X^{h-2} P(-1/X) = 0
    push_rel(&mut rows, n, |p| {
        p.add(&mobius_subst(p, d, 0, -1, 1, 0).expect("deg <= h-2"))
    });
    // P(X) + X^{h-2} P(1 - 1/X) + (X-1)^{h-2} P(-1/(X-1)) = 0
    push_rel(&mut rows, n, |p| {
        p.add(&mobius_subst(p, d, 1, -1, 1, 0).expect("deg <= h-2"))
            .add(&mobius_subst(p, d, 0, -1, 1, -1).expect("deg <= h-2"))
    });
    match sign {
        Sign::Full => {}
        Sign::Plus => {
            // P(0) = 0
            let mut row = vec![Rat::zero(); n];
            row[0] = Rat::from_integer(1.into());
            rows.push(row);
            // P(X) - X^{h-2} P(1/X) = 0
            push_rel(&mut rows, n, |p| {
                p.sub(&mobius_subst(p, d, 0, 1, 1, 0).expect("deg <= h-2"))
            });
        }
        Sign::Minus => {
            let mut row = vec![Rat::zero(); n];
            row[0] = Rat::from_integer(1.into());
            rows.push(row);
            // P(X) + X^{h-2} P(1/X) = 0
            push_rel(&mut rows, n, |p| {
                p.add(&mobius_subst(p, d, 0, 1, 1, 0).expect("deg <= h-2"))
            });
        }
    }
    Ok(QMatrix::from_rows(rows))
}

fn push_rel<F>(rows: &mut Vec<Vec<Rat>>, n: usize, rel: F)
where
    F: Fn(&QPoly) -> QPoly,
{
    let images: Vec<Vec<Rat>> = (0..n)
        .map(|k| rel(&QPoly::monomial(Rat::from_integer(1.into()), k)).coeff_vec(n))
        .collect();
    for deg in 0..n {
        rows.push((0..n).map(|k| images[k][deg].clone()).collect());
    }
}

/// Exact basis of the requested restricted space, normalized to coprime
/// integer coefficients with positive leading coefficient.
pub fn w_basis(h: i64, sign: Sign) -> Result<PeriodSpace> {
    let m = period_constraint_matrix(h, sign)?;
    let basis = m
        .right_kernel_basis()
        .into_iter()
        .map(|v| {
            let p = QPoly::new(v);
            // normalize_vec fixes the sign of the lowest nonzero coefficient;
            // flip so the leading coefficient is positive instead
            if p.coeff(p.degree()) < Rat::zero() {
                p.neg()
            } else {
                p
            }
        })
        .collect();
    Ok(PeriodSpace { weight: h, sign, basis })
}

pub fn full_space_dim(h: i64) -> Result<usize> {
    Ok(period_constraint_matrix(h, Sign::Full)?
        .right_kernel_basis()
        .len())
}

/// Membership test against the full constraint system for (h, sign).
pub fn is_in_w(p: &QPoly, h: i64, sign: Sign) -> Result<bool> {
    check_even_weight(h)?;
    if !p.is_zero() && p.degree() > (h - 2) as usize {
        return Ok(false);
    }
    let m = period_constraint_matrix(h, sign)?;
    let v = p.coeff_vec((h - 1) as usize);
    Ok(m.mul_vec(&v).iter().all(|x| x.is_zero()))
}

/// dim S_k for the full modular group: 0 for odd k, k < 4 or k = 2;
/// for even k >= 4, floor(k/12) - 1 if k = 2 mod 12, else floor(k/12).
pub fn dim_cusp_forms(k: i64) -> usize {
    if k < 4 || k % 2 != 0 {
        return 0;
    }
    let q = (k / 12) as usize;
    if k % 12 == 2 {
        q - 1
    } else {
        q
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn dim_cusp_forms_small() {
        assert_eq!(dim_cusp_forms(12), 1);
        assert_eq!(dim_cusp_forms(14), 0);
        assert_eq!(dim_cusp_forms(2), 0);
        assert_eq!(dim_cusp_forms(11), 0);
        assert_eq!(dim_cusp_forms(16), 1);
        assert_eq!(dim_cusp_forms(26), 1);
        assert_eq!(dim_cusp_forms(24), 2);
    }

    #[test]
    fn weight_four_full_space() {
        assert_eq!(full_space_dim(4).unwrap(), 1);
        // the unique element is X^2 - 1 up to scale
        let m = period_constraint_matrix(4, Sign::Full).unwrap();
        let k = m.right_kernel_basis();
        let p = QPoly::new(k[0].clone());
        assert!(p == QPoly::from_i64(&[-1, 0, 1]) || p == QPoly::from_i64(&[1, 0, -1]));
        // it fails P(0) = 0, so the plus space is empty
        assert_eq!(w_basis(4, Sign::Plus).unwrap().dim(), 0);
        assert_eq!(w_basis(4, Sign::Minus).unwrap().dim(), 0);
    }

    #[test]
    fn weight_twelve_plus_basis_is_classical() {
        let ps = w_basis(12, Sign::Plus).unwrap();
        assert_eq!(ps.dim(), 1);
        let p = &ps.basis[0];
        let got: Vec<Rat> = [9usize, 7, 5, 3, 1].iter().map(|&d| p.coeff(d)).collect();
        let want: Vec<Rat> = [4i64, -25, 42, -25, 4].iter().map(|&c| rat(c)).collect();
        let neg: Vec<Rat> = want.iter().map(|c| -c).collect();
        assert!(got == want || got == neg);
        // odd polynomial: all even-degree coefficients vanish
        for d in (0..=10).step_by(2) {
            assert!(p.coeff(d).is_zero());
        }
    }

    #[test]
    fn weight_twelve_minus_basis() {
        let ps = w_basis(12, Sign::Minus).unwrap();
        assert_eq!(ps.dim(), 1);
        let q = &ps.basis[0];
        assert!(q.coeff(0).is_zero());
        for d in (1..=9).step_by(2) {
            assert!(q.coeff(d).is_zero(), "even polynomial expected");
        }
    }

    #[test]
    fn defining_relations_hold_on_bases() {
        for h in [12i64, 16, 18, 20, 22] {
            for sign in [Sign::Plus, Sign::Minus] {
                let ps = w_basis(h, sign).unwrap();
                let d = (h - 2) as usize;
                for p in &ps.basis {
                    let r1 = p.add(&mobius_subst(p, d, 0, -1, 1, 0).unwrap());
                    assert!(r1.is_zero());
                    let r2 = p
                        .add(&mobius_subst(p, d, 1, -1, 1, 0).unwrap())
                        .add(&mobius_subst(p, d, 0, -1, 1, -1).unwrap());
                    assert!(r2.is_zero());
                    assert!(is_in_w(p, h, sign).unwrap());
                }
            }
        }
    }

    #[test]
    fn odd_weight_rejected() {
        assert!(period_constraint_matrix(7, Sign::Full).is_err());
        assert!(period_constraint_matrix(2, Sign::Full).is_err());
    }
}
