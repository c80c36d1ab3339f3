use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::IntMatrix;

/// Polynomial with integer coefficients, lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntPoly(Vec<BigInt>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self(coeffs)
    }

    /// `x - r`.
    pub fn linear(r: &BigInt) -> Self {
        Self(vec![-r.clone(), BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.0.get(k).cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.0.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.0
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c.to_f64().unwrap_or(f64::NAN))
    }

    /// `Σ |c_k| |z|^k`, the natural magnitude against which `|p(z)|` is judged.
    pub fn scale_at(&self, z: Complex64) -> f64 {
        let r = z.norm();
        self.0
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * r + c.abs().to_f64().unwrap_or(f64::INFINITY))
    }

    /// Exact quotient by `x - r`, or `None` if `r` is not a root.
    pub fn div_linear(&self, r: &BigInt) -> Option<Self> {
        if self.0.len() < 2 {
            return None;
        }
        let d = self.degree();
        let mut q = vec![BigInt::zero(); d];
        let mut carry = BigInt::zero();
        for k in (0..=d).rev() {
            let cur = &self.0[k] + &carry * r;
            if k == 0 {
                return cur.is_zero().then(|| Self::new(q));
            }
            q[k - 1] = cur.clone();
            carry = cur;
        }
        unreachable!()
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Self {
        Self(
            self.0
                .iter()
                .enumerate()
                .map(|(k, c)| if k.is_odd() { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    /// Roots closed under negation with multiplicity, i.e. `p(-x) = ±p(x)`.
    pub fn is_negation_symmetric(&self) -> bool {
        let r = self.reflect();
        r == *self || r == Self::new(self.0.iter().map(|c| -c.clone()).collect())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() && self.0.len() > 1 {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Monic characteristic polynomial `det(xI - A)` by the Faddeev–LeVerrier
/// trace recurrence. Every division is exact for integer input.
pub fn char_poly_exact(a: &IntMatrix) -> IntPoly {
    let n = a.order();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    // M_k = A·M_{k-1} + c_{n-k+1}·I, c_{n-k} = -tr(A·M_k)/k
    let mut m = IntMatrix::zeros(n);
    for k in 1..=n {
        let mut next = a * &m;
        let c = coeffs[n - k + 1].clone();
        next = IntMatrix::from_fn(n, |i, j| {
            let v = next.get(i, j).clone();
            if i == j {
                v + &c
            } else {
                v
            }
        });
        m = next;
        let t = (a * &m).trace();
        let kk = BigInt::from(k);
        debug_assert!(t.is_multiple_of(&kk));
        coeffs[n - k] = -(t / kk);
    }
    IntPoly(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::det_exact;

    // det(tI - A) at integer points, via Bareiss: an oracle independent of the
    // trace recurrence.
    fn char_value(a: &IntMatrix, t: i64) -> BigInt {
        let n = a.order();
        let shifted = IntMatrix::from_fn(n, |i, j| {
            let d = if i == j { BigInt::from(t) } else { BigInt::zero() };
            d - a.get(i, j)
        });
        det_exact(&shifted)
    }

    #[test]
    fn identity_order_two() {
        let p = char_poly_exact(&IntMatrix::identity(2));
        assert_eq!(p, IntPoly::new(vec![1.into(), (-2).into(), 1.into()]));
    }

    #[test]
    fn durer_has_magic_root_and_zero() {
        let p = char_poly_exact(&fixtures::durer());
        assert!(p.coeff(0).is_zero());
        let q = p.div_linear(&BigInt::from(34)).expect("34 is a root");
        assert!(q.div_linear(&BigInt::zero()).is_some());
    }

    #[test]
    fn agrees_with_determinant_at_sample_points() {
        for a in [fixtures::durer(), fixtures::type_a_order6(), fixtures::type_a_order8()] {
            let p = char_poly_exact(&a);
            assert_eq!(p.degree(), a.order());
            for t in [-3, -1, 0, 2, 5, 11] {
                assert_eq!(p.eval(&BigInt::from(t)), char_value(&a, t));
            }
        }
    }

    #[test]
    fn constant_term_is_signed_determinant() {
        let a = IntMatrix::from_rows(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]).unwrap();
        let p = char_poly_exact(&a);
        assert_eq!(p.coeff(0), -det_exact(&a));
    }

    #[test]
    fn negation_symmetry() {
        // x^3 - 4x and x^4 - 5x^2 + 4
        assert!(IntPoly::new(vec![0.into(), (-4).into(), 0.into(), 1.into()]).is_negation_symmetric());
        assert!(IntPoly::new(vec![4.into(), 0.into(), (-5).into(), 0.into(), 1.into()])
            .is_negation_symmetric());
        assert!(!IntPoly::new(vec![1.into(), 1.into()]).is_negation_symmetric());
    }

    #[test]
    fn display() {
        let p = IntPoly::new(vec![(-6).into(), 0.into(), 1.into()]);
        assert_eq!(p.to_string(), "x^2 - 6");
    }
}
