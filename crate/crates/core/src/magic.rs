//! Magic-square predicates and the [`Square`] wrapper.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::perms::PermMatrix;

/// Common row and column sum, if there is one.
pub fn is_semimagic(m: &IntMatrix) -> Option<BigInt> {
    let rows = m.row_sums();
    let first = rows.first()?.clone();
    let all_equal = rows.iter().all(|r| *r == first) && m.col_sums().iter().all(|c| *c == first);
    all_equal.then_some(first)
}

/// Magic number, if rows, columns and both diagonals share one sum.
pub fn is_magic(m: &IntMatrix) -> Option<BigInt> {
    let mu = is_semimagic(m)?;
    (m.trace() == mu && m.anti_trace() == mu).then_some(mu)
}

/// Magic with entries exactly `1..=n²`.
pub fn is_natural(m: &IntMatrix) -> bool {
    if is_magic(m).is_none() {
        return false;
    }
    let n2 = m.order() * m.order();
    let mut seen = vec![false; n2 + 1];
    m.entries().iter().all(|x| match x.to_usize() {
        Some(v) if (1..=n2).contains(&v) && !seen[v] => {
            seen[v] = true;
            true
        }
        _ => false,
    })
}

/// An integer matrix together with its magic metadata.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Square {
    m: IntMatrix,
    mu: Option<BigInt>,
    semi_magic: bool,
    natural: bool,
}

impl Square {
    /// Wraps any square matrix, computing all flags.
    pub fn new(m: IntMatrix) -> Self {
        let semi = is_semimagic(&m);
        let mu = is_magic(&m);
        let natural = mu.is_some() && is_natural(&m);
        Self { semi_magic: semi.is_some(), mu, natural, m }
    }

    /// Wraps a matrix that must be magic.
    pub fn magic(m: IntMatrix) -> Result<Self> {
        let s = Self::new(m);
        if s.is_magic() {
            Ok(s)
        } else {
            Err(Error::NotMagic)
        }
    }

    pub fn from_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::magic(IntMatrix::from_rows(rows)?)
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.m
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.m
    }

    pub fn order(&self) -> usize {
        self.m.order()
    }

    /// Magic number; `None` unless the square is magic.
    pub fn mu(&self) -> Option<&BigInt> {
        self.mu.as_ref()
    }

    pub(crate) fn mu_or_err(&self) -> Result<&BigInt> {
        self.mu.as_ref().ok_or(Error::NotMagic)
    }

    pub fn is_semi_magic(&self) -> bool {
        self.semi_magic
    }

    pub fn is_magic(&self) -> bool {
        self.mu.is_some()
    }

    pub fn is_natural(&self) -> bool {
        self.natural
    }

    /// Whether some value occurs twice.
    pub fn has_repeated_entries(&self) -> bool {
        let mut v: Vec<&BigInt> = self.m.entries().iter().collect();
        v.sort();
        v.windows(2).any(|w| w[0] == w[1])
    }

    /// `2μ` when it is divisible by `n`, the constant each pair sums to.
    pub fn pair_sum(&self) -> Option<BigInt> {
        let mu = self.mu.as_ref()?;
        let two_mu = mu * 2;
        let n = BigInt::from(self.order());
        let rem: BigInt = &two_mu % &n;
        rem.is_zero().then(|| two_mu / n)
    }
}

impl fmt::Display for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.m, f)
    }
}

impl fmt::Debug for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Square(mu={:?}, {:?})", self.mu.as_ref().map(ToString::to_string), self.m)
    }
}

/// Cyclic shift of the identity by `k`: row `i` has its 1 in column `i + k`
/// (mod `n`).
pub fn shift(n: usize, k: usize) -> PermMatrix {
    PermMatrix::new((0..n).map(|i| (i + k) % n + 1).collect()).expect("shift is a bijection")
}

/// The `n - 1` nontrivial shifts of the identity.
pub fn shift_matrices(n: usize) -> Vec<PermMatrix> {
    (1..n).map(|k| shift(n, k)).collect()
}

/// Trace of `A·P` and of `A·P·J`.
fn broken_diagonal_sums(a: &IntMatrix, p: &PermMatrix) -> (BigInt, BigInt) {
    let ap = p.apply_right(a);
    (ap.trace(), ap.anti_trace())
}

/// All broken diagonals sum to `μ`.
pub fn is_pandiagonal(s: &Square) -> Result<bool> {
    let mu = s.mu_or_err()?;
    Ok(shift_matrices(s.order()).iter().all(|p| {
        let (d, a) = broken_diagonal_sums(s.matrix(), p);
        d == *mu && a == *mu
    }))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Semipandiagonal {
    Yes,
    No,
    /// Odd orders have no symmetric shift, so the property is not defined.
    Undefined,
}

impl Semipandiagonal {
    pub fn holds(self) -> bool {
        self == Self::Yes
    }
}

/// The two broken diagonals of the half shift (the only symmetric shift) sum
/// to `μ`.
pub fn is_semipandiagonal(s: &Square) -> Result<Semipandiagonal> {
    let mu = s.mu_or_err()?;
    let n = s.order();
    if n % 2 == 1 {
        return Ok(Semipandiagonal::Undefined);
    }
    let (d, a) = broken_diagonal_sums(s.matrix(), &shift(n, n / 2));
    Ok(if d == *mu && a == *mu { Semipandiagonal::Yes } else { Semipandiagonal::No })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn semimagic_examples() {
        assert_eq!(is_semimagic(&IntMatrix::ones(3)), Some(3.into()));
        assert_eq!(is_semimagic(&fixtures::durer()), Some(34.into()));
        assert_eq!(is_semimagic(&IntMatrix::from_rows(&[&[1, 2], &[3, 4]]).unwrap()), None);
        // rows and columns only, so the identity qualifies
        assert_eq!(is_semimagic(&IntMatrix::identity(3)), Some(1.into()));
        assert_eq!(is_magic(&IntMatrix::identity(3)), None);
    }

    #[test]
    fn magic_examples() {
        let d = Square::new(fixtures::durer());
        assert!(d.is_magic() && d.is_natural());
        assert_eq!(d.mu(), Some(&34.into()));
        let a6 = Square::new(fixtures::type_a_order6());
        assert!(a6.is_magic() && !a6.is_natural());
        assert_eq!(a6.mu(), Some(&120.into()));
        for missing in [10, 20, 30] {
            assert!(!a6.matrix().entries().contains(&missing.into()));
        }
        let c = Square::new(IntMatrix::constant(5, 7.into()));
        assert!(c.is_magic() && !c.is_natural());
        assert_eq!(c.mu(), Some(&35.into()));
        assert!(matches!(Square::magic(IntMatrix::identity(3)), Err(Error::NotMagic)));
    }

    #[test]
    fn natural_magic_number() {
        for a in [fixtures::durer(), fixtures::type_i_order4()] {
            let n = a.order() as i64;
            assert_eq!(is_magic(&a), Some((n * (n * n + 1) / 2).into()));
        }
    }

    #[test]
    fn shifts() {
        let ranks: Vec<u128> = shift_matrices(4).iter().map(PermMatrix::rank).collect();
        assert_eq!(ranks, vec![10, 17, 19]);
        assert_eq!(shift_matrices(2), vec![PermMatrix::reverse(2)]);
        let six = shift_matrices(6);
        assert_eq!(six.len(), 5);
        assert!(six.contains(&fixtures::half_shift_order6()));
        let symmetric: Vec<_> = six.iter().filter(|p| p.is_involution()).collect();
        assert_eq!(symmetric, vec![&shift(6, 3)]);
        assert!(shift_matrices(5).iter().all(|p| !p.is_involution()));
    }

    // Broken-diagonal sums by explicit modular indexing, independent of the
    // trace formulation.
    fn pandiagonal_by_index(a: &IntMatrix, mu: &BigInt) -> bool {
        let n = a.order();
        (0..n).all(|s| {
            let down: BigInt = (0..n).map(|i| a.get(i + 1, (i + s) % n + 1).clone()).sum();
            let up: BigInt = (0..n).map(|i| a.get(i + 1, (2 * n - 1 - i + s) % n + 1).clone()).sum();
            down == *mu && up == *mu
        })
    }

    #[test]
    fn pandiagonal_examples() {
        let p = Square::new(fixtures::pandiagonal_order4());
        assert!(is_pandiagonal(&p).unwrap());
        assert!(pandiagonal_by_index(p.matrix(), p.mu().unwrap()));
        let d = Square::new(fixtures::durer());
        assert!(!is_pandiagonal(&d).unwrap());
        assert!(!pandiagonal_by_index(d.matrix(), d.mu().unwrap()));
        assert!(is_pandiagonal(&Square::new(IntMatrix::constant(4, 3.into()))).unwrap());
        assert!(matches!(is_pandiagonal(&Square::new(IntMatrix::identity(3))), Err(Error::NotMagic)));
    }

    #[test]
    fn semipandiagonal_examples() {
        let s6 = Square::new(fixtures::semipandiagonal_order6());
        assert_eq!(s6.mu(), Some(&120.into()));
        assert_eq!(is_semipandiagonal(&s6).unwrap(), Semipandiagonal::Yes);
        let p = Square::new(fixtures::pandiagonal_order4());
        assert_eq!(is_semipandiagonal(&p).unwrap(), Semipandiagonal::Yes);
        // half-shift diagonals of Dürer: 2+8+9+15 and 3+5+12+14
        let d = Square::new(fixtures::durer());
        assert_eq!(is_semipandiagonal(&d).unwrap(), Semipandiagonal::Yes);
        let b6 = Square::new(fixtures::type_b_order6());
        assert_eq!(is_semipandiagonal(&b6).unwrap(), Semipandiagonal::No);
        let odd = Square::new(IntMatrix::constant(5, 1.into()));
        assert_eq!(is_semipandiagonal(&odd).unwrap(), Semipandiagonal::Undefined);
    }
}
