//! Exhaustive enumeration of natural magic squares of orders 3 and 4, orbit
//! reduction, and census-wide classification and determinant sweeps.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{self, Classification, DudeneyLabel, TriggGroup};
use crate::error::{Error, Result};
use crate::linalg::{det_exact, IntMatrix};
use crate::magic::Square;
use crate::transforms::{canonical_image, dihedral_images};

/// Worker configuration. `threads: None` uses the global rayon pool.
#[derive(Clone, Copy, Debug, Default)]
pub struct EnumOptions {
    pub threads: Option<usize>,
}

fn run_in_pool<T: Send>(opts: EnumOptions, f: impl FnOnce() -> T + Send) -> T {
    match opts.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

/// Backtracking state over `u8` cells filled row-major. Placing a cell in the
/// second-to-last row fixes the last-row cell below it, which is reserved at
/// once.
struct Search {
    n: usize,
    mu: i32,
    max: i32,
    cells: Vec<u8>,
    used: u32,
    col: Vec<i32>,
}

impl Search {
    fn new(n: usize) -> Self {
        let nn = (n * n) as i32;
        Self { n, mu: (n as i32) * (nn + 1) / 2, max: nn, cells: vec![0; n * n], used: 0, col: vec![0; n] }
    }

    fn free(&self, v: i32) -> bool {
        (1..=self.max).contains(&v) && self.used & (1 << v) == 0
    }

    fn put(&mut self, idx: usize, v: i32) {
        self.cells[idx] = v as u8;
        self.used |= 1 << v;
        self.col[idx % self.n] += v;
    }

    fn take(&mut self, idx: usize) {
        let v = self.cells[idx] as i32;
        self.used &= !(1 << v);
        self.col[idx % self.n] -= v;
    }

    /// Column `c` can still reach `μ` with `rows_left` more entries.
    fn column_feasible(&self, c: usize, rows_left: i32) -> bool {
        let s = self.col[c];
        s + rows_left <= self.mu && s + rows_left * self.max >= self.mu
    }

    /// Places `v` at `(r, c)` and continues; in the second-to-last row the
    /// forced last-row entry is placed too.
    fn place(&mut self, r: usize, c: usize, v: i32, next: impl FnOnce(&mut Self)) {
        let n = self.n;
        let idx = r * n + c;
        self.put(idx, v);
        if r + 2 == n {
            let w = self.mu - self.col[c];
            if self.free(w) {
                let below = idx + n;
                self.cells[below] = w as u8;
                self.used |= 1 << w;
                next(self);
                self.used &= !(1 << w);
            }
        } else if self.column_feasible(c, (n - 1 - r) as i32) {
            next(self);
        }
        self.take(idx);
    }

    /// Fills row `r` from column `c` with running row sum `sum`, calling `emit`
    /// for each completed square.
    fn fill(&mut self, r: usize, c: usize, sum: i32, emit: &mut impl FnMut(&[u8])) {
        let n = self.n;
        if r == n - 1 {
            self.finish(emit);
            return;
        }
        if c == n - 1 {
            let v = self.mu - sum;
            if self.free(v) {
                self.place(r, c, v, |s| s.fill(r + 1, 0, 0, emit));
            }
            return;
        }
        let cols_left = (n - 1 - c) as i32;
        for v in 1..=self.max {
            if !self.free(v) {
                continue;
            }
            let t = sum + v;
            // the rest of the row needs cols_left more distinct values
            if t + cols_left > self.mu || t + cols_left * self.max < self.mu {
                continue;
            }
            self.place(r, c, v, |s| s.fill(r, c + 1, t, emit));
        }
    }

    /// The last row is already placed; rows and columns hold by construction.
    fn finish(&mut self, emit: &mut impl FnMut(&[u8])) {
        let n = self.n;
        let diag: i32 = (0..n).map(|i| self.cells[i * n + i] as i32).sum();
        let anti: i32 = (0..n).map(|i| self.cells[i * n + n - 1 - i] as i32).sum();
        if diag == self.mu && anti == self.mu {
            emit(&self.cells);
        }
    }
}

/// Every valid first row in lexicographic order.
fn first_rows(n: usize) -> Vec<Vec<u8>> {
    let mut s = Search::new(n);
    let mut out = Vec::new();
    fn rec(s: &mut Search, c: usize, sum: i32, out: &mut Vec<Vec<u8>>) {
        let n = s.n;
        if c == n - 1 {
            let v = s.mu - sum;
            if s.free(v) {
                s.put(c, v);
                out.push(s.cells[..n].to_vec());
                s.take(c);
            }
            return;
        }
        let cols_left = (n - 1 - c) as i32;
        for v in 1..=s.max {
            let t = sum + v;
            if s.free(v) && t + cols_left <= s.mu && t + cols_left * s.max >= s.mu {
                s.put(c, v);
                rec(s, c + 1, t, out);
                s.take(c);
            }
        }
    }
    rec(&mut s, 0, 0, &mut out);
    out
}

fn search_from(n: usize, row: &[u8], emit: &mut impl FnMut(&[u8])) {
    let mut s = Search::new(n);
    for (c, &v) in row.iter().enumerate() {
        s.put(c, v as i32);
    }
    s.fill(1, 0, 0, emit);
}

/// Raw cell vectors of every natural magic square of order `n`, sorted.
pub fn natural_cells(n: usize, opts: EnumOptions) -> Result<Vec<Vec<u8>>> {
    if !(3..=4).contains(&n) {
        return Err(Error::UnsupportedOrder(n));
    }
    let rows = first_rows(n);
    let mut all: Vec<Vec<u8>> = run_in_pool(opts, || {
        rows.par_iter()
            .flat_map_iter(|row| {
                let mut found = Vec::new();
                search_from(n, row, &mut |cells| found.push(cells.to_vec()));
                found
            })
            .collect()
    });
    all.sort();
    Ok(all)
}

/// Streaming count of natural magic squares; nothing is stored. Order 5 is
/// allowed here and takes a very long time.
pub fn count_natural(n: usize, opts: EnumOptions) -> Result<u64> {
    if !(3..=5).contains(&n) {
        return Err(Error::UnsupportedOrder(n));
    }
    let rows = first_rows(n);
    let total = AtomicU64::new(0);
    run_in_pool(opts, || {
        rows.par_iter().for_each(|row| {
            let mut local = 0u64;
            search_from(n, row, &mut |_| local += 1);
            total.fetch_add(local, Ordering::Relaxed);
        })
    });
    Ok(total.into_inner())
}

#[derive(Clone, Debug)]
pub struct Census {
    pub order: usize,
    /// All natural magic squares, lexicographic by entry sequence.
    pub squares: Vec<Square>,
    pub orbit_count: usize,
    /// Squares equal to one of their own nontrivial dihedral images.
    pub self_symmetric: usize,
}

impl Census {
    pub fn len(&self) -> usize {
        self.squares.len()
    }

    pub fn is_empty(&self) -> bool {
        self.squares.is_empty()
    }

    pub fn contains(&self, m: &IntMatrix) -> bool {
        self.squares.binary_search_by(|s| s.matrix().entries().cmp(m.entries())).is_ok()
    }
}

fn to_square(n: usize, cells: &[u8]) -> Square {
    let data: Vec<i64> = cells.iter().map(|&v| v as i64).collect();
    Square::magic(IntMatrix::from_i64(n, &data).expect("n² cells")).expect("search emits magic squares")
}

/// Complete census of natural magic squares of order 3 or 4.
pub fn enumerate_natural(order: usize) -> Result<Census> {
    enumerate_natural_with(order, EnumOptions::default())
}

pub fn enumerate_natural_with(order: usize, opts: EnumOptions) -> Result<Census> {
    let cells = natural_cells(order, opts)?;
    let squares: Vec<Square> = run_in_pool(opts, || cells.par_iter().map(|c| to_square(order, c)).collect());
    let self_symmetric = run_in_pool(opts, || {
        squares
            .par_iter()
            .filter(|s| dihedral_images(s.matrix()).iter().collect::<BTreeSet<_>>().len() < 8)
            .count()
    });
    let orbit_count = orbit_reduce(&squares).len();
    Ok(Census { order, squares, orbit_count, self_symmetric })
}

/// Lexicographically least dihedral image of each orbit, sorted.
pub fn orbit_reduce(squares: &[Square]) -> Vec<IntMatrix> {
    let reps: BTreeSet<IntMatrix> = squares.par_iter().map(|s| canonical_image(s.matrix())).collect();
    reps.into_iter().collect()
}

/// Classification of every census square, in census order.
pub fn classify_all(c: &Census) -> Result<Vec<Classification>> {
    c.squares.par_iter().map(classify::classify).collect()
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct TypeCounts {
    pub total: usize,
    pub by_label: BTreeMap<String, usize>,
    pub by_group: BTreeMap<String, usize>,
}

impl TypeCounts {
    pub fn label(&self, l: DudeneyLabel) -> usize {
        self.by_label.get(&l.to_string()).copied().unwrap_or(0)
    }

    pub fn group(&self, g: TriggGroup) -> usize {
        self.by_group.get(&g.to_string()).copied().unwrap_or(0)
    }
}

/// Counts by Dudeney label and Trigg group.
pub fn census_classify(c: &Census) -> Result<TypeCounts> {
    if c.order != 4 {
        return Err(Error::UnsupportedOrder(c.order));
    }
    Ok(count_types(&classify_all(c)?))
}

pub fn count_types(classes: &[Classification]) -> TypeCounts {
    let mut t = TypeCounts { total: classes.len(), ..Default::default() };
    for cl in classes {
        if let Some(l) = cl.dudeney_label {
            *t.by_label.entry(l.to_string()).or_default() += 1;
        }
        if let Some(g) = cl.trigg_group {
            *t.by_group.entry(g.to_string()).or_default() += 1;
        }
    }
    t
}

#[derive(Clone, Debug, Default)]
pub struct DeterminantSweep {
    pub histogram: BTreeMap<BigInt, usize>,
    /// Squares with nonzero determinant, per Dudeney label.
    pub nonzero_by_label: BTreeMap<DudeneyLabel, usize>,
    pub by_label: BTreeMap<DudeneyLabel, usize>,
}

/// Exact determinant of every census square.
pub fn census_determinants(c: &Census) -> Result<DeterminantSweep> {
    if c.order != 4 {
        return Err(Error::UnsupportedOrder(c.order));
    }
    let classes = classify_all(c)?;
    let dets: Vec<BigInt> = c.squares.par_iter().map(|s| det_exact(s.matrix())).collect();
    Ok(determinant_sweep(&classes, &dets))
}

pub fn determinant_sweep(classes: &[Classification], dets: &[BigInt]) -> DeterminantSweep {
    let mut sweep = DeterminantSweep::default();
    for (cl, d) in classes.iter().zip(dets) {
        *sweep.histogram.entry(d.clone()).or_default() += 1;
        if let Some(l) = cl.dudeney_label {
            *sweep.by_label.entry(l).or_default() += 1;
            if *d != BigInt::from(0) {
                *sweep.nonzero_by_label.entry(l).or_default() += 1;
            }
        }
    }
    sweep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn order_three() {
        let c = enumerate_natural(3).unwrap();
        assert_eq!((c.len(), c.orbit_count, c.self_symmetric), (8, 1, 0));
        assert!(c.contains(crate::construct::siamese(3).unwrap().matrix()));
        assert_eq!(count_natural(3, EnumOptions::default()).unwrap(), 8);
    }

    #[test]
    fn order_four_contains_known_squares() {
        let c = enumerate_natural(4).unwrap();
        assert_eq!((c.len(), c.orbit_count, c.self_symmetric), (7040, 880, 0));
        for m in [fixtures::durer(), fixtures::type_i_order4(), fixtures::pandiagonal_order4()] {
            assert!(c.contains(&m));
        }
        assert!(c.squares.windows(2).all(|w| w[0].matrix().entries() < w[1].matrix().entries()));
    }

    #[test]
    fn deterministic_across_worker_counts() {
        let one = natural_cells(4, EnumOptions { threads: Some(1) }).unwrap();
        let many = natural_cells(4, EnumOptions { threads: Some(4) }).unwrap();
        assert_eq!(one, many);
    }

    #[test]
    fn unsupported_orders() {
        assert!(matches!(enumerate_natural(5), Err(Error::UnsupportedOrder(5))));
        assert!(matches!(enumerate_natural(2), Err(Error::UnsupportedOrder(2))));
        assert!(matches!(count_natural(6, EnumOptions::default()), Err(Error::UnsupportedOrder(6))));
    }

    #[test]
    fn durer_orbit_has_one_representative() {
        let durer = Square::magic(fixtures::durer()).unwrap();
        let orbit = crate::transforms::dihedral_orbit(&durer).unwrap();
        assert_eq!(orbit_reduce(&orbit).len(), 1);
    }
}
