//! Spectra of magic squares: floating-point eigenpairs validated against the
//! exact characteristic polynomial, the `±λ` pairing of type A squares, the
//! `A`/`Z` spectrum relation, and the two spectrum classes of a family.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::classify;
use crate::error::{Error, Result};
use crate::linalg::{char_poly_exact, det_exact, rank_exact, IntMatrix, IntPoly};
use crate::magic::Square;
use crate::perms::{self, PermMatrix};
use crate::transforms;

/// Default relative tolerance for eigensolver residuals.
pub const DEFAULT_TOL: f64 = 1e-8;

const SCHUR_EPS: f64 = 1e-14;
const SCHUR_MAX_ITER: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Eigenvalue(pub Complex64);

impl Serialize for Eigenvalue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.0.re, self.0.im].serialize(s)
    }
}

/// `a±bi` text with `digits` decimals, dropping a negligible part.
pub fn format_complex(z: Complex64, digits: usize) -> String {
    let cut = 0.5 * 10f64.powi(-(digits as i32));
    let re = if z.re.abs() < cut { 0.0 } else { z.re };
    if z.im.abs() < cut {
        format!("{re:.digits$}")
    } else if re == 0.0 {
        format!("{:.digits$}i", z.im)
    } else {
        let sign = if z.im < 0.0 { '-' } else { '+' };
        format!("{re:.digits$}{sign}{:.digits$}i", z.im.abs())
    }
}

fn to_dmatrix(a: &IntMatrix) -> DMatrix<f64> {
    let n = a.order();
    DMatrix::from_row_slice(n, n, &a.to_f64())
}

fn frobenius(a: &DMatrix<f64>) -> f64 {
    a.norm()
}

/// Eigenvalues of a real matrix, sorted by decreasing modulus then by real
/// and imaginary part.
pub fn eigenvalues_f64(a: &DMatrix<f64>) -> Result<Vec<Complex64>> {
    let schur = a.clone().try_schur(SCHUR_EPS, SCHUR_MAX_ITER).ok_or(Error::NoConvergence)?;
    let mut ev: Vec<Complex64> = schur.complex_eigenvalues().iter().map(|z| Complex64::new(z.re, z.im)).collect();
    ev.sort_by(|x, y| {
        y.norm()
            .total_cmp(&x.norm())
            .then(y.re.total_cmp(&x.re))
            .then(y.im.total_cmp(&x.im))
    });
    Ok(ev)
}

/// Right null vector of `A - λI`: the right singular vector of the smallest
/// singular value, unit length, largest-modulus entry real and positive.
pub fn eigenvector(a: &DMatrix<f64>, lambda: Complex64) -> Vec<Complex64> {
    let n = a.nrows();
    let shifted = DMatrix::from_fn(n, n, |i, j| {
        Complex64::new(a[(i, j)], 0.0) - if i == j { lambda } else { Complex64::new(0.0, 0.0) }
    });
    let svd = shifted.svd(false, true);
    let v_t = svd.v_t.expect("requested");
    let k = svd.singular_values.iter().enumerate().min_by(|x, y| x.1.total_cmp(y.1)).map(|(k, _)| k).unwrap_or(0);
    normalize((0..n).map(|j| v_t[(k, j)].conj()).collect())
}

/// Unit 2-norm with the largest-modulus entry rotated onto the positive reals.
pub fn normalize(x: Vec<Complex64>) -> Vec<Complex64> {
    let norm = x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let pivot = x.iter().copied().max_by(|a, b| a.norm().total_cmp(&b.norm())).unwrap_or_default();
    if norm == 0.0 || pivot.norm() == 0.0 {
        return x;
    }
    let phase = pivot.conj() / pivot.norm();
    x.into_iter().map(|z| z * phase / norm).collect()
}

fn vec_distance(x: &[Complex64], y: &[Complex64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| (a - b).norm_sqr()).sum::<f64>().sqrt()
}

fn permute_vec(p: &PermMatrix, x: &[Complex64]) -> Vec<Complex64> {
    (1..=p.order()).map(|i| x[p.image(i) - 1]).collect()
}

/// How well numeric eigenvalues agree with the exact characteristic polynomial.
#[derive(Clone, Debug, Serialize)]
pub struct Validation {
    /// Largest `|p(λ)| / Σ|c_k|ρ^k` with `ρ = max(|λ|, ‖A‖∞)`.
    pub max_root_residual: f64,
    /// Largest coefficient error of `Π(x - λ)` against the exact polynomial,
    /// relative to `C(n, k)ρ^(n-k)`.
    pub max_coeff_error: f64,
    pub ok: bool,
}

fn validate(poly: &IntPoly, ev: &[Complex64], inf_norm: f64, tol: f64) -> Validation {
    let n = poly.degree();
    let mut max_root_residual: f64 = 0.0;
    for &z in ev {
        let rho = z.norm().max(inf_norm).max(1.0);
        let scale: f64 = poly
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| c.to_f64().unwrap_or(f64::INFINITY).abs() * rho.powi(k as i32))
            .sum();
        max_root_residual = max_root_residual.max(poly.eval_complex(z).norm() / scale);
    }
    // expand Π(x - λ), lowest degree first
    let mut prod = vec![Complex64::new(1.0, 0.0)];
    for &z in ev {
        let mut next = vec![Complex64::new(0.0, 0.0); prod.len() + 1];
        for (k, c) in prod.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * z;
        }
        prod = next;
    }
    let rho = ev.iter().map(|z| z.norm()).fold(inf_norm, f64::max).max(1.0);
    let mut max_coeff_error: f64 = 0.0;
    let mut binom = 1.0;
    for k in (0..=n).rev() {
        // binom = C(n, n - k)
        let exact = poly.coeff(k).to_f64().unwrap_or(f64::INFINITY);
        let err = (prod.get(k).copied().unwrap_or_default() - exact).norm();
        max_coeff_error = max_coeff_error.max(err / (binom * rho.powi((n - k) as i32)));
        binom = binom * k as f64 / (n - k + 1) as f64;
    }
    Validation {
        max_root_residual,
        max_coeff_error,
        ok: ev.len() == n && max_root_residual <= tol && max_coeff_error <= tol,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PairedEigenvalue {
    pub lambda: Eigenvalue,
    pub partner: Eigenvalue,
    /// `‖Z(Px) + λ(Px)‖ / (‖Z‖‖x‖)`, absent for eigenvalues below threshold.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transport_residual: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairingReport {
    pub witness: PermMatrix,
    /// `P·Z·P = -Z`, exact.
    pub structural: bool,
    /// `char(nZ)(-x) = ±char(nZ)(x)`, exact.
    pub char_poly_symmetric: bool,
    pub pairs: Vec<PairedEigenvalue>,
    /// Eigenvalues with no negation partner within tolerance.
    pub unmatched: Vec<Eigenvalue>,
    pub max_transport_residual: f64,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumReport {
    pub order: usize,
    #[serde(serialize_with = "ser_display")]
    pub mu: BigInt,
    pub eigenvalues: Vec<Eigenvalue>,
    /// Coefficients of `det(xI - A)`, constant term first.
    #[serde(serialize_with = "ser_poly")]
    pub char_poly: IntPoly,
    #[serde(serialize_with = "ser_display")]
    pub det: BigInt,
    pub rank: usize,
    pub magic_eigenpair_ok: bool,
    pub validation: Validation,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pairing: Option<PairingReport>,
}

fn ser_display<T: std::fmt::Display, S: Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn ser_poly<S: Serializer>(p: &IntPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    p.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>().serialize(s)
}

fn inf_norm(a: &DMatrix<f64>) -> f64 {
    a.row_iter().map(|r| r.iter().map(|x| x.abs()).sum::<f64>()).fold(0.0, f64::max)
}

/// Full spectral report. The pairing section is filled for type A squares,
/// using the first witness found.
pub fn eigen_spectrum(s: &Square, tol: f64) -> Result<SpectrumReport> {
    let mu = s.mu().ok_or(Error::NotMagic)?.clone();
    let a = to_dmatrix(s.matrix());
    let ev = eigenvalues_f64(&a)?;
    let char_poly = char_poly_exact(s.matrix());
    let validation = validate(&char_poly, &ev, inf_norm(&a), tol);
    let pairing = match classify::type_a_witnesses(s)?.into_iter().next() {
        Some(p) => Some(check_pairing(s, &p, tol)?),
        None => None,
    };
    Ok(SpectrumReport {
        order: s.order(),
        mu,
        eigenvalues: ev.into_iter().map(Eigenvalue).collect(),
        det: det_exact(s.matrix()),
        rank: rank_exact(s.matrix()),
        magic_eigenpair_ok: check_magic_eigenpair(s.matrix()),
        char_poly,
        validation,
        pairing,
    })
}

/// `A·e = μe` and `eᵀA = μeᵀ` with the common row sum as `μ`; holds for any
/// semi-magic matrix.
pub fn check_magic_eigenpair(a: &IntMatrix) -> bool {
    let rows = a.row_sums();
    let Some(mu) = rows.first() else { return false };
    rows.iter().all(|r| r == mu) && a.col_sums().iter().all(|c| c == mu)
}

/// Greedy nearest-negation matching, largest modulus first. An eigenvalue
/// within `tol` of zero may pair with itself.
fn negation_matching(ev: &[Complex64], tol: f64) -> (Vec<(usize, usize)>, Vec<usize>) {
    let mut order: Vec<usize> = (0..ev.len()).collect();
    order.sort_by(|&i, &j| ev[j].norm().total_cmp(&ev[i].norm()));
    let mut used = vec![false; ev.len()];
    let mut pairs = Vec::new();
    let mut unmatched = Vec::new();
    for &i in &order {
        if used[i] {
            continue;
        }
        used[i] = true;
        if ev[i].norm() <= tol {
            pairs.push((i, i));
            continue;
        }
        let best = (0..ev.len())
            .filter(|&j| !used[j])
            .min_by(|&x, &y| (ev[i] + ev[x]).norm().total_cmp(&(ev[i] + ev[y]).norm()));
        match best {
            Some(j) if (ev[i] + ev[j]).norm() <= tol => {
                used[j] = true;
                pairs.push((i, j));
            }
            _ => unmatched.push(i),
        }
    }
    (pairs, unmatched)
}

/// The `±λ` pairing for a type A witness `P`: exact `P·Z·P = -Z`, exact
/// negation symmetry of `char(nZ)`, numeric negation matching, and
/// `Z(Px) = -λ(Px)` for each eigenpair above threshold.
pub fn check_pairing(s: &Square, p: &PermMatrix, tol: f64) -> Result<PairingReport> {
    if p.order() != s.order() {
        return Err(Error::OrderMismatch { left: s.order(), right: p.order() });
    }
    let nz = classify::scaled_z(s)?;
    let neg = nz.map(|x| -x);
    let structural = p.apply_both(&nz) == neg;
    if !structural {
        return Err(Error::NotWitness(p.to_string()));
    }
    let char_poly_symmetric = char_poly_exact(&nz).is_negation_symmetric();
    let n = s.order() as f64;
    let z = to_dmatrix(&nz) / n;
    let z_norm = frobenius(&z);
    let ev = eigenvalues_f64(&z)?;
    let (matched, unmatched) = negation_matching(&ev, tol.sqrt() * z_norm.max(1.0));
    let threshold = tol * frobenius(&to_dmatrix(s.matrix()));
    let zc = z.map(|x| Complex64::new(x, 0.0));
    let mut pairs = Vec::new();
    let mut max_transport_residual: f64 = 0.0;
    for (i, j) in matched {
        let lambda = ev[i];
        let transport_residual = (lambda.norm() > threshold).then(|| {
            let x = eigenvector(&z, lambda);
            let px = nalgebra::DVector::from_vec(permute_vec(p, &x));
            let r = (&zc * &px + px.map(|c| c * lambda)).norm();
            r / z_norm.max(f64::MIN_POSITIVE)
        });
        if let Some(r) = transport_residual {
            max_transport_residual = max_transport_residual.max(r);
        }
        pairs.push(PairedEigenvalue { lambda: Eigenvalue(lambda), partner: Eigenvalue(ev[j]), transport_residual });
    }
    let ok = char_poly_symmetric && unmatched.is_empty() && max_transport_residual <= tol.max(1e-10);
    Ok(PairingReport {
        witness: p.clone(),
        structural,
        char_poly_symmetric,
        pairs,
        unmatched: unmatched.into_iter().map(|i| Eigenvalue(ev[i])).collect(),
        max_transport_residual,
        ok,
    })
}

/// `char(nA)/(x - nμ) = char(nZ)/x`, exact.
pub fn check_z_spectrum_relation(s: &Square) -> Result<bool> {
    let mu = s.mu().ok_or(Error::NotMagic)?;
    let n = BigInt::from(s.order());
    let na = s.matrix().map(|x| x * &n);
    let left = char_poly_exact(&na).div_linear(&(mu * &n));
    let right = char_poly_exact(&classify::scaled_z(s)?).div_linear(&BigInt::from(0));
    Ok(matches!((left, right), (Some(l), Some(r)) if l == r))
}

/// An eigenpair carried to its partner by a witness.
#[derive(Clone, Debug, Serialize)]
pub struct Transport {
    pub lambda: Eigenvalue,
    pub partner: Eigenvalue,
    /// Unit eigenvector for `λ`.
    pub x: Vec<f64>,
    /// Unit eigenvector computed independently for `-λ`.
    pub partner_x: Vec<f64>,
    /// `‖partner_x - P·x‖` up to a global sign.
    pub residual: f64,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EigenSide {
    /// `A·x = λx`
    Right,
    /// `xᵀA = λxᵀ`, equivalently eigenvectors of `Aᵀ`
    Left,
}

/// Eigenvectors for the computed eigenvalue nearest `target` and for the one
/// nearest its negation, compared through `P`. Real eigenvalues only.
pub fn eigenvector_transport(s: &Square, p: &PermMatrix, target: f64, side: EigenSide) -> Result<Transport> {
    s.mu().ok_or(Error::NotMagic)?;
    let a = match side {
        EigenSide::Right => to_dmatrix(s.matrix()),
        EigenSide::Left => to_dmatrix(&s.matrix().transpose()),
    };
    let ev = eigenvalues_f64(&a)?;
    let nearest = |t: f64| {
        ev.iter().copied().min_by(|x, y| (x - t).norm().total_cmp(&(y - t).norm())).expect("nonempty spectrum")
    };
    let (lambda, partner) = (nearest(target), nearest(-target));
    let real = |v: Vec<Complex64>| v.into_iter().map(|z| z.re).collect::<Vec<f64>>();
    let x = eigenvector(&a, Complex64::new(lambda.re, 0.0));
    let y = eigenvector(&a, Complex64::new(partner.re, 0.0));
    let px = normalize(permute_vec(p, &x));
    let flipped: Vec<Complex64> = px.iter().map(|z| -z).collect();
    let residual = vec_distance(&y, &px).min(vec_distance(&y, &flipped));
    Ok(Transport { lambda: Eigenvalue(lambda), partner: Eigenvalue(partner), x: real(x), partner_x: real(y), residual })
}

/// Greedy match of computed against expected eigenvalues; each expected value
/// must be within `tol·max(|expected|, 1)` of a distinct computed one.
/// Returns the largest scaled error, or `None` if some value has no match.
pub fn match_spectrum(computed: &[Complex64], expected: &[Complex64], tol: f64) -> Option<f64> {
    if computed.len() != expected.len() {
        return None;
    }
    let mut used = vec![false; computed.len()];
    let mut worst: f64 = 0.0;
    let mut order: Vec<usize> = (0..expected.len()).collect();
    order.sort_by(|&i, &j| expected[j].norm().total_cmp(&expected[i].norm()));
    for i in order {
        let e = expected[i];
        let j = (0..computed.len())
            .filter(|&j| !used[j])
            .min_by(|&x, &y| (computed[x] - e).norm().total_cmp(&(computed[y] - e).norm()))?;
        let err = (computed[j] - e).norm() / e.norm().max(1.0);
        if err > tol {
            return None;
        }
        used[j] = true;
        worst = worst.max(err);
    }
    Some(worst)
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilySpectraReport {
    pub bisymmetric_generators: usize,
    /// `P·A·P` and `P·Aᵀ·P` share `char(A)`.
    pub class_one_consistent: bool,
    /// `J·P·A·P`, `P·A·P·J`, `P·Aᵀ·P·J`, `J·P·Aᵀ·P` share `char(JA)`.
    pub class_two_consistent: bool,
    #[serde(serialize_with = "ser_display")]
    pub class_one: IntPoly,
    #[serde(serialize_with = "ser_display")]
    pub class_two: IntPoly,
    /// Characteristic polynomials over all family members with counts.
    pub histogram: BTreeMap<String, usize>,
    pub family_size: usize,
}

impl FamilySpectraReport {
    pub fn passed(&self) -> bool {
        self.class_one_consistent && self.class_two_consistent && self.histogram.len() <= 2
    }
}

/// Exact characteristic-polynomial equality within the two spectrum classes
/// over every bisymmetric `P`, plus a histogram over the whole family.
pub fn family_spectra_check(s: &Square) -> Result<FamilySpectraReport> {
    s.mu().ok_or(Error::NotMagic)?;
    let a = s.matrix();
    let at = a.transpose();
    let class_one = char_poly_exact(a);
    let class_two = char_poly_exact(&a.flip_rows());
    let gens = perms::gen_bisymmetric(s.order());
    let (mut one_ok, mut two_ok) = (true, true);
    for p in &gens {
        let pap = p.apply_both(a);
        let patp = p.apply_both(&at);
        one_ok &= char_poly_exact(&pap) == class_one && char_poly_exact(&patp) == class_one;
        for m in [pap.flip_rows(), pap.flip_cols(), patp.flip_cols(), patp.flip_rows()] {
            two_ok &= char_poly_exact(&m) == class_two;
        }
    }
    let fam = transforms::family(s)?;
    let mut histogram = BTreeMap::new();
    for m in &fam.members {
        *histogram.entry(char_poly_exact(m.matrix()).to_string()).or_insert(0) += 1;
    }
    Ok(FamilySpectraReport {
        bisymmetric_generators: gens.len(),
        class_one_consistent: one_ok,
        class_two_consistent: two_ok,
        class_one,
        class_two,
        histogram,
        family_size: fam.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{self, FixtureSet};

    fn sq(m: IntMatrix) -> Square {
        Square::magic(m).unwrap()
    }

    #[test]
    fn type_a_order8_spectrum() {
        let s = sq(fixtures::type_a_order8());
        let r = eigen_spectrum(&s, DEFAULT_TOL).unwrap();
        assert!(r.validation.ok, "{:?}", r.validation);
        let expected = FixtureSet::embedded().spectrum("spectrum_type_a_order8").unwrap();
        let got: Vec<Complex64> = r.eigenvalues.iter().map(|e| e.0).collect();
        assert!(match_spectrum(&got, &expected, 5e-3).is_some(), "{got:?}");
        let pairing = r.pairing.unwrap();
        assert!(pairing.ok && pairing.structural, "{pairing:?}");
        assert!(r.det == BigInt::from(0));
    }

    #[test]
    fn type_b_order8_spectrum() {
        let s = sq(fixtures::type_b_order8());
        let r = eigen_spectrum(&s, DEFAULT_TOL).unwrap();
        assert!(r.validation.ok, "{:?}", r.validation);
        assert_eq!(r.rank, 5);
        let expected = FixtureSet::embedded().spectrum("spectrum_type_b_order8").unwrap();
        let got: Vec<Complex64> = r.eigenvalues.iter().map(|e| e.0).collect();
        assert!(match_spectrum(&got, &expected, 5e-4).is_some(), "{got:?}");
        assert!(r.pairing.is_none());
    }

    #[test]
    fn constant_spectrum() {
        let s = sq(IntMatrix::constant(4, 3.into()));
        let r = eigen_spectrum(&s, DEFAULT_TOL).unwrap();
        let got: Vec<Complex64> = r.eigenvalues.iter().map(|e| e.0).collect();
        let expected = [12.0, 0.0, 0.0, 0.0].map(|x| Complex64::new(x, 0.0));
        assert!(match_spectrum(&got, &expected, 1e-9).is_some(), "{got:?}");
        assert_eq!(r.rank, 1);
        let pairing = r.pairing.unwrap();
        assert!(pairing.ok && pairing.pairs.iter().all(|p| p.transport_residual.is_none()));
    }

    #[test]
    fn magic_eigenpair() {
        assert!(check_magic_eigenpair(&fixtures::durer()));
        let semi = IntMatrix::from_rows(&[&[1, 2, 3], &[2, 3, 1], &[3, 1, 2]]).unwrap();
        assert!(crate::magic::is_magic(&semi).is_none());
        assert!(check_magic_eigenpair(&semi));
        assert!(!check_magic_eigenpair(&IntMatrix::from_rows(&[&[1, 2], &[3, 4]]).unwrap()));
    }

    #[test]
    fn durer_pairing() {
        let s = sq(fixtures::durer());
        let r = check_pairing(&s, &PermMatrix::reverse(4), DEFAULT_TOL).unwrap();
        assert!(r.ok, "{r:?}");
        assert!(matches!(check_pairing(&s, &fixtures::k_order4(), DEFAULT_TOL), Err(Error::NotWitness(_))));
    }

    #[test]
    fn transport_matches_printed_vectors() {
        let s = sq(fixtures::type_a_order8());
        let p = fixtures::mcpm_order8();
        let pairs = FixtureSet::embedded().eigenpairs("eigenvector_pair_order8").unwrap();
        let (_, x4) = &pairs[0];
        let (_, x3) = &pairs[1];
        let close = |a: &[f64], b: &[f64]| a.iter().zip(b).all(|(x, y)| (x - y).abs() <= 1e-3);
        let right = eigenvector_transport(&s, &p, 61.80, EigenSide::Right).unwrap();
        assert!(right.residual < 1e-6, "{}", right.residual);
        // the printed vectors are left eigenvectors; the right ones differ
        assert!(!close(&right.x, x4));
        let left = eigenvector_transport(&s, &p, 61.80, EigenSide::Left).unwrap();
        assert!(left.residual < 1e-6, "{}", left.residual);
        assert!(close(&left.x, x4), "{:?}", left.x);
        assert!(close(&left.partner_x, x3), "{:?}", left.partner_x);
    }

    #[test]
    fn z_relation() {
        assert!(check_z_spectrum_relation(&sq(fixtures::durer())).unwrap());
        assert!(check_z_spectrum_relation(&sq(fixtures::type_a_order8())).unwrap());
        let c = sq(IntMatrix::constant(4, 2.into()));
        assert!(check_z_spectrum_relation(&c).unwrap());
        let x4 = IntPoly::new(vec![0.into(), 0.into(), 0.into(), 0.into(), 1.into()]);
        assert_eq!(char_poly_exact(&classify::scaled_z(&c).unwrap()), x4);
    }

    #[test]
    fn family_classes() {
        let r = family_spectra_check(&sq(fixtures::durer())).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.family_size, 32);
        assert_eq!(r.histogram.values().copied().collect::<Vec<_>>(), vec![16, 16]);
        let c = family_spectra_check(&sq(IntMatrix::constant(4, 1.into()))).unwrap();
        assert!(c.passed() && c.histogram.len() == 1);
        let six = family_spectra_check(&sq(fixtures::type_a_order6())).unwrap();
        assert!(six.class_one_consistent && six.class_two_consistent);
        assert_eq!(six.family_size, 80);
    }

    #[test]
    fn complex_formatting() {
        assert_eq!(format_complex(Complex64::new(2.09211, -43.69412), 4), "2.0921-43.6941i");
        assert_eq!(format_complex(Complex64::new(1e-12, 40.17), 2), "40.17i");
        assert_eq!(format_complex(Complex64::new(-61.8, 1e-13), 2), "-61.80");
    }
}
