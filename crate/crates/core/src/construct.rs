//! Synthesis of magic squares with a prescribed type A or type B witness.
//!
//! A square is written `A = (μ/n)E + Z`. The magic conditions on `A` become
//! linear conditions on `Z` (zero row sums, column sums and diagonal sums),
//! and the type relation becomes `Z + P·Z·P = 0`, `Z + P·Z = 0` or
//! `Z + Z·P = 0`. Sampling draws integer combinations of an integral basis of
//! that solution space.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{nullspace_rational, rank_rat_rows, IntMatrix, RatMatrix};
use crate::magic::Square;
use crate::perms::{self, PermMatrix};

/// Coefficients are drawn uniformly from `-COEFF_BOUND..=COEFF_BOUND`.
pub const COEFF_BOUND: i64 = 9;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `A + P·A·P = (2μ/n)E`
    TypeA,
    /// `A + P·A = (2μ/n)E`
    TypeBLeft,
    /// `A + A·P = (2μ/n)E`
    TypeBRight,
}

/// Linear constraints on the `n²` entries of `Z`, row-major.
#[derive(Clone, Debug)]
pub struct ConstraintSystem {
    pub n: usize,
    pub relation: Relation,
    pub witness: PermMatrix,
    pub rows: Vec<Vec<BigRational>>,
}

fn idx(n: usize, i: usize, j: usize) -> usize {
    (i - 1) * n + (j - 1)
}

impl ConstraintSystem {
    pub fn new(relation: Relation, witness: &PermMatrix) -> Self {
        let n = witness.order();
        let zero_row = || vec![BigRational::zero(); n * n];
        let one = BigRational::one();
        let mut rows = Vec::new();
        for i in 1..=n {
            let mut r = zero_row();
            let mut c = zero_row();
            for j in 1..=n {
                r[idx(n, i, j)] = one.clone();
                c[idx(n, j, i)] = one.clone();
            }
            rows.push(r);
            rows.push(c);
        }
        let mut tr = zero_row();
        let mut anti = zero_row();
        for i in 1..=n {
            tr[idx(n, i, i)] = one.clone();
            anti[idx(n, i, n + 1 - i)] = one.clone();
        }
        rows.push(tr);
        rows.push(anti);
        let inv = witness.inverse();
        for i in 1..=n {
            for j in 1..=n {
                // entry (i, j) of P·Z·P, P·Z or Z·P
                let (pi, pj) = match relation {
                    Relation::TypeA => (witness.image(i), inv.image(j)),
                    Relation::TypeBLeft => (witness.image(i), j),
                    Relation::TypeBRight => (i, inv.image(j)),
                };
                let mut r = zero_row();
                r[idx(n, i, j)] += &one;
                r[idx(n, pi, pj)] += &one;
                rows.push(r);
            }
        }
        Self { n, relation, witness: witness.clone(), rows }
    }

    pub fn rank(&self) -> usize {
        rank_rat_rows(&self.rows)
    }

    /// Dimension of the space of admissible `Z`.
    pub fn solution_space_dim(&self) -> usize {
        self.n * self.n - self.rank()
    }

    /// Integral basis: each rational nullspace vector scaled by the lcm of
    /// its denominators, then saturated at 2 so that its residues mod 2 are
    /// those of every integral solution.
    pub fn integer_basis(&self) -> Vec<Vec<BigInt>> {
        let scaled = nullspace_rational(&self.rows, self.n * self.n)
            .into_iter()
            .map(|v| {
                let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                v.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect()
            })
            .collect();
        saturate_at_two(scaled)
    }

    /// Whether every constraint vanishes on `z`.
    pub fn contains(&self, z: &RatMatrix) -> bool {
        z.order() == self.n
            && self.rows.iter().all(|r| {
                r.iter().zip(z.entries()).fold(BigRational::zero(), |acc, (a, b)| acc + a * b).is_zero()
            })
    }
}

/// `solution_space_dim` for a relation and witness.
pub fn solution_space_dim(relation: Relation, witness: &PermMatrix) -> usize {
    ConstraintSystem::new(relation, witness).solution_space_dim()
}

fn check_inputs(n: usize, p: &PermMatrix, mu: &BigInt) -> Result<()> {
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    if !perms::is_mcpm(p) {
        return Err(Error::NotMcpm(p.to_string()));
    }
    let two_mu: BigInt = mu * 2;
    if !two_mu.is_multiple_of(&BigInt::from(n)) {
        return Err(Error::IndivisibleMagicNumber { mu2: two_mu.to_string(), n });
    }
    Ok(())
}

/// Basis of the same rational span whose residues mod 2 cover those of every
/// integral solution: while some 0/1 combination of the vectors is entirely even, one vector of
/// that combination is replaced by half of it. Each step halves the index of
/// the lattice in its saturation, so the loop ends.
fn saturate_at_two(mut basis: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    'outer: loop {
        let k = basis.len();
        // reduced residues with the combination that produced each
        let mut reduced: Vec<(Vec<bool>, Vec<bool>)> = Vec::new();
        for j in 0..k {
            let mut v: Vec<bool> = basis[j].iter().map(Integer::is_odd).collect();
            let mut combo = vec![false; k];
            combo[j] = true;
            for (rv, rc) in &reduced {
                let lead = rv.iter().position(|&b| b).expect("stored residues are nonzero");
                if v[lead] {
                    v.iter_mut().zip(rv).for_each(|(x, y)| *x ^= y);
                    combo.iter_mut().zip(rc).for_each(|(x, y)| *x ^= y);
                }
            }
            if v.iter().any(|&b| b) {
                reduced.push((v, combo));
                continue;
            }
            let mut sum = vec![BigInt::zero(); basis[j].len()];
            for (b, _) in basis.iter().zip(&combo).filter(|(_, &on)| on) {
                sum.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            }
            basis[j] = sum.into_iter().map(|x| x / 2).collect();
            continue 'outer;
        }
        return basis;
    }
}

/// Integer combination of the basis whose entries are all odd, found by
/// elimination over GF(2). Needed when `μ/n` is a half-integer.
fn odd_combination(basis: &[Vec<BigInt>], len: usize) -> Option<Vec<BigInt>> {
    let k = basis.len();
    // augmented system: rows are entries, columns are basis vectors + rhs
    let mut rows: Vec<Vec<bool>> = (0..len)
        .map(|e| {
            let mut r: Vec<bool> = basis.iter().map(|b| b[e].is_odd()).collect();
            r.push(true);
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..len).find(|&i| rows[i][c]) else { continue };
        rows.swap(r, p);
        for i in 0..len {
            if i != r && rows[i][c] {
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(pivot_row) {
                    *x ^= y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if rows[r..].iter().any(|row| row[k]) {
        return None;
    }
    let mut d = vec![false; k];
    for (row, &c) in pivots.iter().enumerate() {
        d[c] = rows[row][k];
    }
    let mut w = vec![BigInt::zero(); len];
    for (b, _) in basis.iter().zip(&d).filter(|(_, &on)| on) {
        for (x, y) in w.iter_mut().zip(b) {
            *x += y;
        }
    }
    Some(w)
}

/// `A = (μ/n)E + Z` with `Z = Z₀ + Σ cₖ bₖ`. `Z₀` is zero when `μ/n` is an
/// integer and a half-odd particular solution otherwise.
pub fn square_from_coefficients(system: &ConstraintSystem, mu: &BigInt, coeffs: &[i64]) -> Result<Square> {
    build_square(system, &system.integer_basis(), mu, coeffs)
}

fn build_square(system: &ConstraintSystem, basis: &[Vec<BigInt>], mu: &BigInt, coeffs: &[i64]) -> Result<Square> {
    let n = system.n;
    check_inputs(n, &system.witness, mu)?;
    if coeffs.len() != basis.len() {
        return Err(Error::BadShape { n, len: coeffs.len(), expected: basis.len() });
    }
    let nn = BigInt::from(n);
    let half_integral = !mu.is_multiple_of(&nn);
    // work in doubled units so half-integers stay integral
    let mut twice_z = vec![BigInt::zero(); n * n];
    if half_integral {
        let w = odd_combination(basis, n * n)
            .ok_or_else(|| Error::NoIntegralSolution(format!("{mu}/{n}")))?;
        twice_z = w;
    }
    for (b, &c) in basis.iter().zip(coeffs) {
        let c2 = BigInt::from(2 * c);
        for (x, y) in twice_z.iter_mut().zip(b) {
            *x += &c2 * y;
        }
    }
    // 2A = 2μ/n + 2Z
    let two_mu_over_n: BigInt = (mu * 2) / &nn;
    let entries: Vec<BigInt> = twice_z
        .iter()
        .map(|z| {
            let twice = &two_mu_over_n + z;
            debug_assert!(twice.is_even());
            twice / 2
        })
        .collect();
    Square::magic(IntMatrix::new(n, entries)?)
}

fn sample_coefficients(k: usize, seed: u64) -> Vec<i64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..k).map(|_| rng.random_range(-COEFF_BOUND..=COEFF_BOUND)).collect()
}

/// A constraint system with its integral basis computed once, for drawing
/// many squares.
#[derive(Clone, Debug)]
pub struct Sampler {
    pub system: ConstraintSystem,
    basis: Vec<Vec<BigInt>>,
}

impl Sampler {
    pub fn new(relation: Relation, p: &PermMatrix) -> Self {
        let system = ConstraintSystem::new(relation, p);
        let basis = system.integer_basis();
        Self { system, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn square(&self, mu: &BigInt, coeffs: &[i64]) -> Result<Square> {
        build_square(&self.system, &self.basis, mu, coeffs)
    }

    pub fn sample(&self, mu: &BigInt, seed: u64) -> Result<Square> {
        self.square(mu, &sample_coefficients(self.dim(), seed))
    }
}

/// Random square of the given relation, reproducible from `seed`.
pub fn random_square(relation: Relation, p: &PermMatrix, mu: &BigInt, seed: u64) -> Result<Square> {
    check_inputs(p.order(), p, mu)?;
    Sampler::new(relation, p).sample(mu, seed)
}

/// As [`random_square`] but refusing a zero-dimensional solution space,
/// where only the constant square exists.
pub fn random_nonconstant(relation: Relation, p: &PermMatrix, mu: &BigInt, seed: u64) -> Result<Square> {
    check_inputs(p.order(), p, mu)?;
    if solution_space_dim(relation, p) == 0 {
        return Err(Error::EmptySolutionSpace);
    }
    random_square(relation, p, mu, seed)
}

/// Random magic square with `A + P·A·P = (2μ/n)E`.
pub fn random_type_a(n: usize, p: &PermMatrix, mu: &BigInt, seed: u64) -> Result<Square> {
    if p.order() != n {
        return Err(Error::OrderMismatch { left: n, right: p.order() });
    }
    random_square(Relation::TypeA, p, mu, seed)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// Random magic square with `A + P·A` (left) or `A + A·P` (right) equal to
/// `(2μ/n)E`.
pub fn random_type_b(n: usize, p: &PermMatrix, side: Side, mu: &BigInt, seed: u64) -> Result<Square> {
    if p.order() != n {
        return Err(Error::OrderMismatch { left: n, right: p.order() });
    }
    let relation = match side {
        Side::Left => Relation::TypeBLeft,
        Side::Right => Relation::TypeBRight,
    };
    random_square(relation, p, mu, seed)
}

/// `Z = A - (μ/n)E` of a magic matrix, as used for membership checks.
pub fn z_of(a: &IntMatrix) -> Option<RatMatrix> {
    let mu = crate::magic::is_magic(a)?;
    let shift = BigRational::new(mu, BigInt::from(a.order()));
    Some(a.to_rational().map(|x| x - &shift))
}

/// Natural magic square of odd order by the staircase (de la Loubère) rule.
pub fn siamese(n: usize) -> Result<Square> {
    if n.is_multiple_of(2) {
        return Err(Error::UnsupportedOrder(n));
    }
    let mut cells = vec![0i64; n * n];
    let (mut i, mut j) = (0usize, n / 2);
    for v in 1..=(n * n) as i64 {
        cells[i * n + j] = v;
        let (ni, nj) = ((i + n - 1) % n, (j + 1) % n);
        if cells[ni * n + nj] != 0 {
            i = (i + 1) % n;
        } else {
            (i, j) = (ni, nj);
        }
    }
    Square::magic(IntMatrix::from_i64(n, &cells)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::{rank_exact, rank_int_rows};

    fn perm(s: &str) -> PermMatrix {
        s.parse().unwrap()
    }

    #[test]
    fn odd_pair_sums_agree_under_transposition() {
        // transposing a left solution gives a right one, so feasibility must match
        for n in [4, 6] {
            for p in perms::gen_mcpm(n) {
                let mu = BigInt::from(n / 2);
                let left = Sampler::new(Relation::TypeBLeft, &p).sample(&mu, 3);
                let right = Sampler::new(Relation::TypeBRight, &p).sample(&mu, 3);
                assert_eq!(left.is_ok(), right.is_ok(), "{p}");
                if let Ok(a) = left {
                    let t = a.matrix().transpose();
                    let sum = &t + &(&t * &p.to_matrix());
                    assert_eq!(sum, IntMatrix::constant(n, BigInt::from(1)));
                }
            }
        }
    }

    #[test]
    fn siamese_squares() {
        let three = siamese(3).unwrap();
        assert_eq!(three.matrix(), &IntMatrix::from_rows(&[&[8, 1, 6], &[3, 5, 7], &[4, 9, 2]]).unwrap());
        for n in [5, 7, 9] {
            assert!(siamese(n).unwrap().is_natural());
        }
        assert!(siamese(4).is_err());
    }

    #[test]
    fn order_two_has_only_constants() {
        assert_eq!(solution_space_dim(Relation::TypeA, &PermMatrix::reverse(2)), 0);
        // brute force: the 2x2 zero-sum conditions alone force Z = 0
        let sys = ConstraintSystem::new(Relation::TypeA, &PermMatrix::reverse(2));
        assert_eq!(sys.rank(), 4);
    }

    #[test]
    fn order_four_dimensions() {
        let j = PermMatrix::reverse(4);
        let dj = solution_space_dim(Relation::TypeA, &j);
        assert!(dj >= 1);
        let sys = ConstraintSystem::new(Relation::TypeA, &j);
        assert!(sys.contains(&z_of(&fixtures::durer()).unwrap()));
        // dimension from an independent rank computation on integer rows
        let int_rows: Vec<Vec<BigInt>> =
            sys.rows.iter().map(|r| r.iter().map(|x| x.to_integer()).collect()).collect();
        assert_eq!(dj, 16 - rank_int_rows(&int_rows));
        assert_eq!(sys.integer_basis().len(), dj);
        // the diagonal constraints break invariance under relabeling: at order
        // 4 type A is uniform but J admits one extra type B direction
        for (p, b) in [("(2 1 4 3)", 4), ("(3 4 1 2)", 4), ("(4 3 2 1)", 5)] {
            let p = perm(p);
            assert_eq!(solution_space_dim(Relation::TypeA, &p), 4, "{p}");
            assert_eq!(solution_space_dim(Relation::TypeBLeft, &p), b, "{p}");
            assert_eq!(solution_space_dim(Relation::TypeBRight, &p), b, "{p}");
        }
    }

    #[test]
    fn reference_squares_are_members() {
        let a24 = ConstraintSystem::new(Relation::TypeA, &fixtures::mcpm_order6());
        assert!(a24.contains(&z_of(&fixtures::type_a_order6()).unwrap()));
        let b30 = ConstraintSystem::new(Relation::TypeBLeft, &PermMatrix::reverse(8));
        assert!(b30.contains(&z_of(&fixtures::type_b_order8()).unwrap()));
        let b25 = ConstraintSystem::new(Relation::TypeBRight, &fixtures::mcpm_order6());
        assert!(b25.contains(&z_of(&fixtures::type_b_order6()).unwrap()));
        assert!(!b25.contains(&z_of(&fixtures::type_a_order6()).unwrap()));
        let a27 = ConstraintSystem::new(Relation::TypeA, &fixtures::mcpm_order8());
        assert!(a27.contains(&fixtures::z_type_a_order8()));
    }

    #[test]
    fn zero_coefficients_give_constant() {
        let sys = ConstraintSystem::new(Relation::TypeA, &PermMatrix::reverse(4));
        let zeros = vec![0; sys.solution_space_dim()];
        let s = square_from_coefficients(&sys, &BigInt::from(34), &zeros).unwrap();
        // 34/4 is a half-integer, so the constant part is replaced by a
        // half-odd particular solution; with an integral magic number the
        // result is exactly constant
        assert!(s.is_magic());
        let c = square_from_coefficients(&sys, &BigInt::from(36), &zeros).unwrap();
        assert_eq!(c.matrix(), &IntMatrix::constant(4, 9.into()));
    }

    #[test]
    fn random_outputs_are_reproducible_and_magic() {
        let p = fixtures::mcpm_order8();
        let a = random_type_a(8, &p, &BigInt::from(260), 7).unwrap();
        let b = random_type_a(8, &p, &BigInt::from(260), 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.mu(), Some(&BigInt::from(260)));
        assert_ne!(a, random_type_a(8, &p, &BigInt::from(260), 8).unwrap());
        let b6 = random_type_b(6, &fixtures::mcpm_order6(), Side::Right, &BigInt::from(120), 3).unwrap();
        assert!(rank_exact(b6.matrix()) <= 4);
    }

    #[test]
    fn input_errors() {
        let mu = BigInt::from(10);
        assert!(matches!(random_type_a(3, &PermMatrix::reverse(3), &mu, 0), Err(Error::OddOrder(3))));
        assert!(matches!(random_type_a(4, &PermMatrix::identity(4), &mu, 0), Err(Error::NotMcpm(_))));
        assert!(matches!(
            random_type_a(4, &perm("(3 4 1 2)"), &BigInt::from(33), 0),
            Err(Error::IndivisibleMagicNumber { .. })
        ));
        assert!(matches!(
            random_nonconstant(Relation::TypeA, &PermMatrix::reverse(2), &mu, 0),
            Err(Error::EmptySolutionSpace)
        ));
    }
}
