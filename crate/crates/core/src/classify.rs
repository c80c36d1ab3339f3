//! Type A/B/D detection through magic classifying permutations, the order-4
//! Dudeney labels, Trigg groups, `Z = A - (μ/n)E`, Dudeney diagrams, and the
//! order-4 transformation graph.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{IntMatrix, RatMatrix};
use crate::magic::{self, Semipandiagonal, Square};
use crate::perms::{self, PermMatrix};
use crate::transforms::{dihedral_images, DIHEDRAL_NAMES};

/// `Z = A - (μ/n)E`, exact.
pub fn z_matrix(s: &Square) -> Result<RatMatrix> {
    let mu = s.mu().ok_or(Error::NotMagic)?;
    let shift = BigRational::new(mu.clone(), BigInt::from(s.order()));
    Ok(s.matrix().to_rational().map(|x| x - &shift))
}

/// `n·Z = n·A - μE`, integral.
pub fn scaled_z(s: &Square) -> Result<IntMatrix> {
    let mu = s.mu().ok_or(Error::NotMagic)?;
    let n = BigInt::from(s.order());
    Ok(s.matrix().map(|x| x * &n - mu))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `A + P·A·P = cE`
    Conj,
    /// `A + P·A = cE`
    Left,
    /// `A + A·P = cE`
    Right,
    /// `A + L·A·(1 4 3 2) = cE` at order 4
    Xi,
    /// `A + K·A·(1 2 4 3) = cE` at order 4
    Xii,
    /// `A + P·A·Q = cE` with `Q` symmetric, `Q ≠ I, P`
    GeneralD,
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub perm: PermMatrix,
    pub relation: Relation,
    /// Right-hand factor for the type D relations.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partner: Option<PermMatrix>,
    /// Dihedral image on which the relation holds.
    pub image: &'static str,
}

/// Entries as 0-based rows for the hot loops.
struct Grid {
    n: usize,
    a: Vec<Vec<BigInt>>,
    c: BigInt,
}

impl Grid {
    fn new(m: &IntMatrix, c: BigInt) -> Self {
        Self { n: m.order(), a: m.rows().map(|r| r.to_vec()).collect(), c }
    }

    fn pairs(&self, x: (usize, usize), y: (usize, usize)) -> bool {
        &self.a[x.0][x.1] + &self.a[y.0][y.1] == self.c
    }
}

/// Fixed-point-free involutions of `0..n` accepted by `ok`, which sees the
/// partial assignment after each new pair `(i, k)`.
fn search_matchings(n: usize, ok: &impl Fn(&[usize], usize, usize) -> bool) -> Vec<PermMatrix> {
    const FREE: usize = usize::MAX;
    fn rec(sigma: &mut Vec<usize>, ok: &impl Fn(&[usize], usize, usize) -> bool, out: &mut Vec<PermMatrix>) {
        let Some(i) = sigma.iter().position(|&s| s == FREE) else {
            out.push(PermMatrix::new(sigma.iter().map(|&s| s + 1).collect()).expect("involution"));
            return;
        };
        for k in i + 1..sigma.len() {
            if sigma[k] != FREE {
                continue;
            }
            sigma[i] = k;
            sigma[k] = i;
            if ok(sigma, i, k) {
                rec(sigma, ok, out);
            }
            sigma[i] = FREE;
            sigma[k] = FREE;
        }
    }
    let mut out = Vec::new();
    if n.is_multiple_of(2) {
        rec(&mut vec![FREE; n], ok, &mut out);
    }
    out
}

fn conj_witnesses(g: &Grid) -> Vec<PermMatrix> {
    let ok = |sigma: &[usize], i: usize, k: usize| {
        sigma.iter().enumerate().filter(|(_, &s)| s != usize::MAX).all(|(x, &sx)| {
            [i, k].iter().all(|&y| {
                let sy = sigma[y];
                g.pairs((x, y), (sx, sy)) && g.pairs((y, x), (sy, sx))
            })
        })
    };
    search_matchings(g.n, &ok)
}

fn left_witnesses(g: &Grid) -> Vec<PermMatrix> {
    let ok = |_: &[usize], i: usize, k: usize| (0..g.n).all(|j| g.pairs((i, j), (k, j)));
    search_matchings(g.n, &ok)
}

fn right_witnesses(g: &Grid) -> Vec<PermMatrix> {
    let ok = |_: &[usize], i: usize, k: usize| (0..g.n).all(|j| g.pairs((j, i), (j, k)));
    search_matchings(g.n, &ok)
}

fn grid_for(s: &Square) -> Result<Option<Grid>> {
    s.mu().ok_or(Error::NotMagic)?;
    Ok(s.pair_sum().map(|c| Grid::new(s.matrix(), c)))
}

/// Every magic classifying permutation `P` with `A + P·A·P = (2μ/n)E`.
/// Odd orders return nothing.
pub fn type_a_witnesses(s: &Square) -> Result<Vec<PermMatrix>> {
    Ok(match grid_for(s)? {
        Some(g) if s.order().is_multiple_of(2) => conj_witnesses(&g),
        _ => Vec::new(),
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// Every `(P, side)` with `A + P·A` or `A + A·P` equal to `(2μ/n)E`.
pub fn type_b_witnesses(s: &Square) -> Result<Vec<(PermMatrix, Side)>> {
    Ok(match grid_for(s)? {
        Some(g) if s.order().is_multiple_of(2) => left_witnesses(&g)
            .into_iter()
            .map(|p| (p, Side::Left))
            .chain(right_witnesses(&g).into_iter().map(|p| (p, Side::Right)))
            .collect(),
        _ => Vec::new(),
    })
}

/// `X + P·X·Q = cE` for given permutations (`Q` symmetric).
fn two_sided(g: &Grid, p: &PermMatrix, q: &PermMatrix) -> bool {
    let n = g.n;
    (0..n).all(|i| (0..n).all(|j| g.pairs((i, j), (p.image(i + 1) - 1, q.image(j + 1) - 1))))
}

/// A symmetric `Q ∉ {I, P}` with `X + P·X·Q = cE`, if one exists.
///
/// Column `Q(j)` of `P·X` must equal `c - X[:, j]`, which fixes a candidate
/// set per column; a small search then picks an involution from them.
fn general_d_partner(g: &Grid, p: &PermMatrix) -> Option<PermMatrix> {
    let n = g.n;
    let px: Vec<&Vec<BigInt>> = (0..n).map(|i| &g.a[p.image(i + 1) - 1]).collect();
    let cand: Vec<Vec<usize>> = (0..n)
        .map(|j| (0..n).filter(|&k| (0..n).all(|i| &g.a[i][j] + &px[i][k] == g.c)).collect())
        .collect();
    if cand.iter().any(Vec::is_empty) {
        return None;
    }
    fn rec(q: &mut Vec<usize>, cand: &[Vec<usize>], p: &PermMatrix) -> Option<PermMatrix> {
        let Some(j) = q.iter().position(|&x| x == usize::MAX) else {
            let perm = PermMatrix::new(q.iter().map(|&x| x + 1).collect()).ok()?;
            return (!perm.is_identity() && perm != *p).then_some(perm);
        };
        for &k in &cand[j] {
            if q[k] != usize::MAX && k != j {
                continue;
            }
            if !cand[k].contains(&j) {
                continue;
            }
            q[j] = k;
            q[k] = j;
            if let Some(found) = rec(q, cand, p) {
                return Some(found);
            }
            q[j] = usize::MAX;
            q[k] = usize::MAX;
        }
        None
    }
    rec(&mut vec![usize::MAX; n], &cand, p)
}

/// Generalised type D witnesses: one `(P, Q)` per dihedral image where
/// `X + P·X·Q = (2μ/n)E` with `P` a magic classifying permutation and `Q`
/// symmetric, neither the identity nor `P`.
pub fn general_d_witnesses(s: &Square) -> Result<Vec<Witness>> {
    let Some(c) = grid_for(s)?.map(|g| g.c) else { return Ok(Vec::new()) };
    if s.order() % 2 == 1 {
        return Ok(Vec::new());
    }
    let mcpms = perms::gen_mcpm(s.order());
    let mut out = Vec::new();
    for (img, name) in dihedral_images(s.matrix()).iter().zip(DIHEDRAL_NAMES) {
        let g = Grid::new(img, c.clone());
        if let Some((p, q)) = mcpms.iter().find_map(|p| general_d_partner(&g, p).map(|q| (p.clone(), q))) {
            out.push(Witness { perm: p, relation: Relation::GeneralD, partner: Some(q), image: name });
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum DudeneyLabel {
    I,
    II,
    III,
    IV,
    V,
    /// Type VI and semipandiagonal.
    VIPrime,
    /// Type VI, not semipandiagonal.
    VIDoublePrime,
    /// Magic but none of I–VI, XI, XII: Dudeney's VII–X.
    GroupC,
    XI,
    XII,
}

impl DudeneyLabel {
    pub const ALL: [Self; 10] = [
        Self::I,
        Self::II,
        Self::III,
        Self::IV,
        Self::V,
        Self::VIPrime,
        Self::VIDoublePrime,
        Self::GroupC,
        Self::XI,
        Self::XII,
    ];

    pub fn trigg_group(self) -> TriggGroup {
        match self {
            Self::I | Self::II | Self::III => TriggGroup::A,
            Self::IV | Self::V | Self::VIPrime | Self::VIDoublePrime => TriggGroup::B,
            Self::GroupC => TriggGroup::C,
            Self::XI | Self::XII => TriggGroup::D,
        }
    }
}

impl fmt::Display for DudeneyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::I => "I",
            Self::II => "II",
            Self::III => "III",
            Self::IV => "IV",
            Self::V => "V",
            Self::VIPrime => "VI'",
            Self::VIDoublePrime => "VI''",
            Self::GroupC => "VII-X",
            Self::XI => "XI",
            Self::XII => "XII",
        })
    }
}

impl Serialize for DudeneyLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub enum TriggGroup {
    A,
    B,
    C,
    D,
}

impl fmt::Display for TriggGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub order: usize,
    #[serde(serialize_with = "ser_display")]
    pub mu: BigInt,
    pub natural: bool,
    pub pandiagonal: bool,
    pub semipandiagonal: Semipandiagonal,
    pub trigg_group: Option<TriggGroup>,
    pub dudeney_label: Option<DudeneyLabel>,
    pub witnesses: Vec<Witness>,
}

fn ser_display<T: fmt::Display, S: Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn k4() -> PermMatrix {
    "(3 4 1 2)".parse().expect("valid")
}
fn l4() -> PermMatrix {
    "(2 1 4 3)".parse().expect("valid")
}
/// Right factor of the XI relation. The bisymmetric `(1 3 2 4)` admits no
/// natural order-4 square on any dihedral image; the swap of 2 and 4 picks out
/// exactly eight orbits.
fn xi_partner() -> PermMatrix {
    "(1 4 3 2)".parse().expect("valid")
}
fn p2() -> PermMatrix {
    "(1 2 4 3)".parse().expect("valid")
}

fn a_and_b_witnesses(g: &Grid) -> Vec<Witness> {
    let mut out: Vec<Witness> = conj_witnesses(g)
        .into_iter()
        .map(|perm| Witness { perm, relation: Relation::Conj, partner: None, image: "A" })
        .collect();
    for (list, relation) in [(left_witnesses(g), Relation::Left), (right_witnesses(g), Relation::Right)] {
        out.extend(list.into_iter().map(|perm| Witness { perm, relation, partner: None, image: "A" }));
    }
    out
}

/// Whether `X + P·X·Q = (2μ/n)E` holds on some dihedral image `X` of `s`.
pub fn two_sided_on_images(s: &Square, p: &PermMatrix, q: &PermMatrix) -> Result<bool> {
    let Some(g) = grid_for(s)? else { return Ok(false) };
    if p.order() != s.order() || q.order() != s.order() {
        return Err(Error::OrderMismatch { left: s.order(), right: p.order().max(q.order()) });
    }
    Ok(dihedral_images(s.matrix()).iter().any(|m| two_sided(&Grid::new(m, g.c.clone()), p, q)))
}

/// Order-4 label. Type A comes from a conjugation witness `K`, `L` or `J`.
/// Types IV–VI and XI–XII hold if any dihedral image satisfies the defining
/// one-sided or two-sided relation, so labels are orbit invariant.
fn order4_label(s: &Square, g: &Grid, witnesses: &mut Vec<Witness>) -> Result<DudeneyLabel> {
    let (k, l, j) = (k4(), l4(), PermMatrix::reverse(4));
    let conj: Vec<&PermMatrix> = witnesses.iter().filter(|w| w.relation == Relation::Conj).map(|w| &w.perm).collect();
    for (p, label) in [(&k, DudeneyLabel::I), (&l, DudeneyLabel::II), (&j, DudeneyLabel::III)] {
        if conj.contains(&p) {
            return Ok(label);
        }
    }
    let images: Vec<Grid> = dihedral_images(s.matrix()).iter().map(|m| Grid::new(m, g.c.clone())).collect();
    let identity = PermMatrix::identity(4);
    for (p, label) in [(&l, DudeneyLabel::IV), (&k, DudeneyLabel::V), (&j, DudeneyLabel::VIPrime)] {
        if let Some(idx) = images.iter().position(|img| two_sided(img, p, &identity)) {
            if idx != 0 {
                witnesses.push(Witness { perm: p.clone(), relation: Relation::Left, partner: None, image: DIHEDRAL_NAMES[idx] });
            }
            if label == DudeneyLabel::VIPrime && magic::is_semipandiagonal(s)? != Semipandiagonal::Yes {
                return Ok(DudeneyLabel::VIDoublePrime);
            }
            return Ok(label);
        }
    }
    for (p, q, relation, label) in [
        (&l, xi_partner(), Relation::Xi, DudeneyLabel::XI),
        (&k, p2(), Relation::Xii, DudeneyLabel::XII),
    ] {
        if let Some(idx) = images.iter().position(|img| two_sided(img, p, &q)) {
            witnesses.push(Witness { perm: p.clone(), relation, partner: Some(q), image: DIHEDRAL_NAMES[idx] });
            return Ok(label);
        }
    }
    Ok(DudeneyLabel::GroupC)
}

/// Full classification of a magic square.
pub fn classify(s: &Square) -> Result<Classification> {
    let mu = s.mu().ok_or(Error::NotMagic)?.clone();
    let n = s.order();
    let mut c = Classification {
        order: n,
        mu,
        natural: s.is_natural(),
        pandiagonal: magic::is_pandiagonal(s)?,
        semipandiagonal: magic::is_semipandiagonal(s)?,
        trigg_group: None,
        dudeney_label: None,
        witnesses: Vec::new(),
    };
    if n % 2 == 1 {
        return Ok(c);
    }
    let Some(g) = grid_for(s)? else {
        // 2μ/n is not an integer, so no relation can hold
        c.trigg_group = Some(TriggGroup::C);
        return Ok(c);
    };
    c.witnesses = a_and_b_witnesses(&g);
    if n == 4 {
        let label = order4_label(s, &g, &mut c.witnesses)?;
        c.dudeney_label = Some(label);
        c.trigg_group = Some(label.trigg_group());
        return Ok(c);
    }
    let has = |r: Relation| c.witnesses.iter().any(|w| w.relation == r);
    c.trigg_group = Some(if has(Relation::Conj) {
        TriggGroup::A
    } else if has(Relation::Left) || has(Relation::Right) {
        TriggGroup::B
    } else {
        let d = general_d_witnesses(s)?;
        let group = if d.is_empty() { TriggGroup::C } else { TriggGroup::D };
        c.witnesses.extend(d);
        group
    });
    Ok(c)
}

/// Order-4 Dudeney classification.
pub fn dudeney_type(s: &Square) -> Result<Classification> {
    if s.order() != 4 {
        return Err(Error::UnsupportedOrder(s.order()));
    }
    classify(s)
}

/// Trigg group of an even-order magic square.
pub fn trigg_group(s: &Square) -> Result<TriggGroup> {
    if s.order() % 2 == 1 {
        return Err(Error::OddOrder(s.order()));
    }
    Ok(classify(s)?.trigg_group.expect("even orders always get a group"))
}

/// Cells paired by `a_ij + a_kl = 2μ/n`.
#[derive(Clone, Debug, Serialize)]
pub struct DudeneyDiagram {
    pub n: usize,
    #[serde(serialize_with = "ser_display")]
    pub pair_sum: BigRational,
    /// `[r1, c1, r2, c2]`, 1-based, each cell in at most one pair.
    pub pairs: Vec<[usize; 4]>,
    /// Every cell has exactly one partner.
    pub complete: bool,
}

/// Links each cell to the unique cell whose `Z` value is its negation.
/// Cells whose partner is missing or ambiguous stay unpaired.
pub fn dudeney_diagram(s: &Square) -> Result<DudeneyDiagram> {
    let mu = s.mu().ok_or(Error::NotMagic)?;
    let n = s.order();
    let z = scaled_z(s)?;
    let mut by_value: HashMap<&BigInt, Vec<(usize, usize)>> = HashMap::new();
    for i in 1..=n {
        for j in 1..=n {
            by_value.entry(z.get(i, j)).or_default().push((i, j));
        }
    }
    let mut pairs = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            let v = z.get(i, j);
            let neg = -v;
            if *v <= BigInt::from(0) && !(v == &neg) {
                continue;
            }
            let (Some(mine), Some(theirs)) = (by_value.get(v), by_value.get(&neg)) else { continue };
            if v == &neg {
                // zero entries pair with each other only when there are two
                if mine.len() == 2 && (i, j) == mine[0] {
                    pairs.push([i, j, mine[1].0, mine[1].1]);
                }
                continue;
            }
            if mine.len() == 1 && theirs.len() == 1 {
                let (a, b) = ((i, j).min(theirs[0]), (i, j).max(theirs[0]));
                pairs.push([a.0, a.1, b.0, b.1]);
            }
        }
    }
    pairs.sort();
    let complete = pairs.len() * 2 == n * n;
    Ok(DudeneyDiagram {
        n,
        pair_sum: BigRational::new(mu * 2, BigInt::from(n)),
        pairs,
        complete,
    })
}

impl DudeneyDiagram {
    /// Graphviz source: grid-positioned nodes `c_i_j`, one edge per pair.
    pub fn to_dot(&self, s: &Square) -> String {
        let mut out = String::from("graph dudeney {\n");
        out += &format!("  graph [pair_sum=\"{}\", complete=\"{}\"];\n", self.pair_sum, self.complete);
        out += "  node [shape=circle];\n";
        for i in 1..=self.n {
            for j in 1..=self.n {
                out += &format!("  c_{i}_{j} [label=\"{}\", pos=\"{},{}!\"];\n", s.matrix().get(i, j), j, self.n + 1 - i);
            }
        }
        for [r1, c1, r2, c2] in &self.pairs {
            out += &format!("  c_{r1}_{c1} -- c_{r2}_{c2} [label=\"{}\"];\n", self.pair_sum);
        }
        out += "}\n";
        out
    }
}

/// Pairing `(i, j) ↔ (P(i), P(j))` induced by a type A witness.
pub fn witness_pairing(p: &PermMatrix) -> Vec<[usize; 4]> {
    let n = p.order();
    let mut pairs = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            let (k, l) = (p.image(i), p.image(j));
            if (i, j) < (k, l) {
                pairs.push([i, j, k, l]);
            }
        }
    }
    pairs.sort();
    pairs
}

/// Named permutation sets of the order-4 transformation graph, as ranks.
pub const FIG2_A: [[u128; 4]; 4] = [[1, 8, 17, 24], [2, 7, 18, 23], [6, 10, 15, 19], [3, 11, 14, 22]];
pub const FIG2_C: [[u128; 2]; 4] = [[1, 24], [3, 22], [8, 17], [11, 14]];

/// Target label of `P·A·P` for a source label and the index (0..4) of the
/// A-set holding `P`; `None` where the graph has no edge.
pub fn fig2_edge(label: DudeneyLabel, set: usize) -> Option<DudeneyLabel> {
    use DudeneyLabel::*;
    let row: [Option<DudeneyLabel>; 4] = match label {
        I => [Some(I), Some(III), Some(I), Some(II)],
        II => [Some(II), Some(II), Some(III), Some(I)],
        III => [Some(III), Some(I), Some(II), Some(III)],
        IV => [Some(IV), Some(IV), Some(VIPrime), Some(V)],
        V => [Some(V), Some(VIPrime), Some(V), Some(IV)],
        VIPrime => [Some(VIPrime), Some(V), Some(IV), Some(VIPrime)],
        VIDoublePrime => [Some(VIDoublePrime), Some(V), Some(IV), Some(VIDoublePrime)],
        XI => [Some(XI), None, None, Some(XII)],
        XII => [Some(XII), None, None, Some(XI)],
        GroupC => [None; 4],
    };
    row[set]
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Fig2Report {
    pub squares: usize,
    pub transforms: usize,
    pub magic_results: usize,
    pub by_label: BTreeMap<String, usize>,
    /// Failing checks per edge, keyed like `VI'' -A2->`.
    pub failed_edges: BTreeMap<String, usize>,
    pub failures: Vec<String>,
}

impl Fig2Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.squares > 0
    }
}

/// Checks every square against all 24 order-4 permutations: `P·A·P` must be
/// magic exactly along the graph's edges and land on the edge's target label.
/// Group C squares must stay magic exactly for the C sets and stay in group C.
pub fn fig2_graph_check(census: &[Square]) -> Result<Fig2Report> {
    if census.iter().any(|s| s.order() != 4) {
        return Err(Error::UnsupportedOrder(census.iter().map(Square::order).find(|&n| n != 4).unwrap_or(0)));
    }
    let labels: Vec<DudeneyLabel> = census
        .par_iter()
        .map(|s| dudeney_type(s).map(|c| c.dudeney_label.expect("order 4 labels")))
        .collect::<Result<_>>()?;
    let lookup: HashMap<&IntMatrix, DudeneyLabel> = census.iter().map(Square::matrix).zip(labels.iter().copied()).collect();
    let all = perms::all_permutations(4);
    let set_of = |p: &PermMatrix| FIG2_A.iter().position(|s| s.contains(&p.rank()));
    let in_c = |p: &PermMatrix| FIG2_C.iter().any(|s| s.contains(&p.rank()));
    let results: Vec<(usize, Vec<(String, String)>)> = census
        .par_iter()
        .zip(labels.par_iter())
        .map(|(s, &label)| {
            let mut magic_count = 0;
            let mut fails = Vec::new();
            for p in &all {
                let out = p.apply_both(s.matrix());
                let is_magic = magic::is_magic(&out).is_some();
                magic_count += usize::from(is_magic);
                let got = lookup.get(&out).copied();
                let expect_magic;
                let mut expect_label = None;
                let edge;
                if label == DudeneyLabel::GroupC {
                    expect_magic = in_c(p);
                    edge = format!("{label} -{}->", if expect_magic { "C" } else { "other" });
                    if expect_magic && got != Some(DudeneyLabel::GroupC) {
                        fails.push((edge.clone(), format!("{label} by {p}: result {got:?}, expected group C")));
                    }
                } else {
                    let set = set_of(p);
                    expect_label = set.and_then(|k| fig2_edge(label, k));
                    expect_magic = expect_label.is_some();
                    edge = match set {
                        Some(k) => format!("{label} -A{}->", k + 1),
                        None => format!("{label} -other->"),
                    };
                }
                if is_magic != expect_magic {
                    let detail = format!("{label} by {p} (rank {}): magic={is_magic}, expected {expect_magic}", p.rank());
                    fails.push((edge, detail));
                } else if let Some(t) = expect_label {
                    if got != Some(t) {
                        fails.push((edge, format!("{label} by {p} (rank {}): result {got:?}, expected {t}", p.rank())));
                    }
                }
            }
            (magic_count, fails)
        })
        .collect();
    let mut report = Fig2Report { squares: census.len(), transforms: census.len() * all.len(), ..Default::default() };
    for l in &labels {
        *report.by_label.entry(l.to_string()).or_default() += 1;
    }
    for (m, fails) in results {
        report.magic_results += m;
        for (edge, detail) in fails {
            *report.failed_edges.entry(edge).or_default() += 1;
            report.failures.push(detail);
        }
    }
    Ok(report)
}
