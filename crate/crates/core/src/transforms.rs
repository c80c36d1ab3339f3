//! Dihedral images, conjugation `P·A·P`, and the family of transformations.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::construct::siamese;
use crate::error::{Error, Result};
use crate::linalg::{IntMatrix, Matrix};
use crate::magic::Square;
use crate::perms::{self, PermMatrix};

/// Labels of the eight images, in the order returned by [`dihedral_images`].
pub const DIHEDRAL_NAMES: [&str; 8] = ["A", "JA", "AJ", "JAJ", "A^T", "JA^T", "A^TJ", "JA^TJ"];

/// `A, JA, AJ, JAJ, Aᵀ, JAᵀ, AᵀJ, JAᵀJ`.
pub fn dihedral_images<T: Clone>(a: &Matrix<T>) -> Vec<Matrix<T>> {
    let t = a.transpose();
    vec![
        a.clone(),
        a.flip_rows(),
        a.flip_cols(),
        a.flip_rows().flip_cols(),
        t.clone(),
        t.flip_rows(),
        t.flip_cols(),
        t.flip_rows().flip_cols(),
    ]
}

/// The eight dihedral images of a magic square, all magic.
pub fn dihedral_orbit(s: &Square) -> Result<Vec<Square>> {
    s.mu().ok_or(Error::NotMagic)?;
    Ok(dihedral_images(s.matrix())
        .into_iter()
        .map(|m| Square::magic(m).expect("dihedral images of a magic square are magic"))
        .collect())
}

/// Lexicographically least of the eight images.
pub fn canonical_image<T: Clone + Ord>(a: &Matrix<T>) -> Matrix<T> {
    dihedral_images(a).into_iter().min().expect("eight images")
}

#[derive(Clone, Debug)]
pub struct Conjugation {
    pub square: Square,
    /// `P` is bisymmetric or 90°-symmetric, so the result is certainly magic.
    pub guaranteed: bool,
}

/// `P·A·P`. For other permutations the result is semi-magic but may fail the
/// diagonal conditions.
pub fn conjugate(s: &Square, p: &PermMatrix) -> Result<Conjugation> {
    if s.order() != p.order() {
        return Err(Error::OrderMismatch { left: s.order(), right: p.order() });
    }
    let flags = perms::classify_symmetry(p);
    let guaranteed = flags.bisymmetric || flags.rot90;
    let square = Square::new(p.apply_both(s.matrix()));
    if guaranteed && s.is_magic() {
        assert!(square.is_magic(), "conjugation by {p} lost magic");
    }
    Ok(Conjugation { square, guaranteed })
}

/// Bisymmetric and 90°-symmetric permutations with one of each `{P, J·P}`
/// pair kept (the one of smaller rank).
pub fn family_generators(n: usize) -> Vec<PermMatrix> {
    let j = PermMatrix::reverse(n);
    let mut out: Vec<PermMatrix> = perms::gen_bisymmetric(n)
        .into_iter()
        .chain(perms::gen_rot90(n))
        .filter(|p| p.rank() < j.then(p).expect("same order").rank())
        .collect();
    out.sort_by_key(PermMatrix::rank);
    out
}

/// `4(B(n) + R(n))`.
pub fn rho(n: usize) -> u128 {
    4 * (perms::count_bisymmetric(n) + perms::count_rot90(n))
}

#[derive(Clone, Debug)]
pub struct Family {
    pub seed: Square,
    /// Distinct members sorted by row-major entries.
    pub members: Vec<Square>,
    pub generators: Vec<PermMatrix>,
    /// The seed has no repeated entries, so the members are pairwise distinct
    /// before deduplication and their count is `ρ(n)`.
    pub uniqueness_guaranteed: bool,
}

impl Family {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, m: &IntMatrix) -> bool {
        self.members.binary_search_by(|s| s.matrix().cmp(m)).is_ok()
    }
}

/// Dihedral images of `P·A·P` over the generator half-set.
pub fn family(s: &Square) -> Result<Family> {
    s.mu().ok_or(Error::NotMagic)?;
    let generators = family_generators(s.order());
    let members: BTreeSet<IntMatrix> = generators
        .par_iter()
        .flat_map_iter(|p| dihedral_images(&p.apply_both(s.matrix())))
        .collect();
    let members: Vec<Square> = members
        .into_iter()
        .map(|m| Square::magic(m).expect("family members are magic"))
        .collect();
    Ok(Family {
        seed: s.clone(),
        uniqueness_guaranteed: !s.has_repeated_entries(),
        members,
        generators,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct GardnerReport {
    pub first: PermMatrix,
    pub second: PermMatrix,
    pub first_rank: u128,
    pub second_rank: u128,
    pub first_bisymmetric: bool,
    pub second_bisymmetric: bool,
    pub displayed_product: PermMatrix,
    pub displayed_product_rank: u128,
    pub displayed_product_rot90: bool,
    /// Rank of `first · second` in the order the factors are written.
    pub written_order_rank: u128,
    pub written_order_rot90: bool,
    pub reversed_order_rank: u128,
    pub reversed_order_rot90: bool,
    pub displayed_equals_written_order: bool,
    pub displayed_equals_reversed_order: bool,
    /// Conjugating by the first factor swaps border columns, then border rows.
    pub first_is_border_exchange: bool,
    /// Conjugating by the second swaps rows and columns 1↔2 and 4↔5.
    pub second_is_inner_exchange: bool,
    pub expected_rank: u128,
    pub notes: Vec<String>,
}

impl GardnerReport {
    pub fn passed(&self) -> bool {
        self.first_bisymmetric
            && self.second_bisymmetric
            && self.displayed_product_rot90
            && (self.displayed_equals_written_order || self.displayed_equals_reversed_order)
            && self.displayed_product_rank == self.expected_rank
            && self.first_is_border_exchange
            && self.second_is_inner_exchange
    }
}

fn swap_rows_cols(a: &IntMatrix, swaps: &[(usize, usize)]) -> IntMatrix {
    let p = PermMatrix::from_swaps(a.order(), swaps).expect("valid swaps");
    // rows first, then columns, exactly as the verbal description reads
    let rows_done = p.apply_left(a);
    p.apply_right(&rows_done)
}

/// Reconciles the two order-5 bisymmetric matrices and their displayed
/// product with Gardner's count of 32 isomorphic squares.
pub fn gardner_check(first: &PermMatrix, second: &PermMatrix, displayed: &PermMatrix) -> Result<GardnerReport> {
    let written = first.then(second)?;
    let reversed = second.then(first)?;
    let sample = siamese(5)?;
    let first_is_border_exchange = first.apply_both(sample.matrix()) == swap_rows_cols(sample.matrix(), &[(1, 5)]);
    let second_is_inner_exchange =
        second.apply_both(sample.matrix()) == swap_rows_cols(sample.matrix(), &[(1, 2), (4, 5)]);
    let mut report = GardnerReport {
        first: first.clone(),
        second: second.clone(),
        first_rank: first.rank(),
        second_rank: second.rank(),
        first_bisymmetric: perms::is_bisymmetric(first),
        second_bisymmetric: perms::is_bisymmetric(second),
        displayed_product: displayed.clone(),
        displayed_product_rank: displayed.rank(),
        displayed_product_rot90: perms::is_rot90(displayed),
        written_order_rank: written.rank(),
        written_order_rot90: perms::is_rot90(&written),
        reversed_order_rank: reversed.rank(),
        reversed_order_rot90: perms::is_rot90(&reversed),
        displayed_equals_written_order: *displayed == written,
        displayed_equals_reversed_order: *displayed == reversed,
        first_is_border_exchange,
        second_is_inner_exchange,
        expected_rank: 45,
        notes: Vec::new(),
    };
    if report.first_rank != 105 {
        report.notes.push(format!(
            "first factor has standard rank {}; the surrounding prose calls it 105",
            report.first_rank
        ));
    }
    if !report.displayed_equals_written_order && report.displayed_equals_reversed_order {
        report.notes.push(format!(
            "displayed product equals second·first (rank {}); first·second is {} (rank {})",
            report.reversed_order_rank, written, report.written_order_rank
        ));
    }
    if report.displayed_product_rank != report.expected_rank {
        report.notes.push(format!(
            "displayed product has rank {}, expected {}",
            report.displayed_product_rank, report.expected_rank
        ));
    }
    Ok(report)
}
