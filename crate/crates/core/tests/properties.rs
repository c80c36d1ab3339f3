//! Randomised algebraic invariants with fixed seeds.

use magiclab::classify;
use magiclab::construct::{Relation, Sampler};
use magiclab::linalg::det_exact;
use magiclab::magic;
use magiclab::perms::{self, PermMatrix};
use magiclab::spectral::{self, EigenSide};
use magiclab::IntMatrix;
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

fn runner(cases: u32) -> TestRunner {
    let seed = [7u8; 32];
    TestRunner::new_with_rng(Config { cases, ..Config::default() }, TestRng::from_seed(RngAlgorithm::ChaCha, &seed))
}

fn matrix(n: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(-20i64..=20, n * n).prop_map(move |v| IntMatrix::from_i64(n, &v).unwrap())
}

fn perm(n: usize) -> impl Strategy<Value = PermMatrix> {
    Just((1..=n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| PermMatrix::new(v).unwrap())
}

/// Integer combinations of permutation matrices are exactly the integer
/// semi-magic squares, so this covers the class without projection.
fn semimagic(n: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec((perm(n), -9i64..=9), 1..6).prop_map(move |terms| {
        terms.iter().fold(IntMatrix::constant(n, BigInt::from(0)), |acc, (p, w)| {
            &acc + &p.to_matrix().map(|x| x * BigInt::from(*w))
        })
    })
}

#[test]
fn determinant_is_multiplicative() {
    runner(300)
        .run(&(2usize..=6).prop_flat_map(|n| (matrix(n), matrix(n))), |(a, b)| {
            prop_assert_eq!(det_exact(&(&a * &b)), det_exact(&a) * det_exact(&b));
            Ok(())
        })
        .unwrap();
}

#[test]
fn trace_is_cyclic() {
    runner(300)
        .run(&(1usize..=7).prop_flat_map(|n| (matrix(n), matrix(n))), |(a, b)| {
            prop_assert_eq!((&a * &b).trace(), (&b * &a).trace());
            Ok(())
        })
        .unwrap();
}

#[test]
fn permutations_preserve_semimagic() {
    runner(300)
        .run(&(2usize..=7).prop_flat_map(|n| (semimagic(n), perm(n), perm(n))), |(a, p, q)| {
            let mu = magic::is_semimagic(&a);
            prop_assert!(mu.is_some());
            prop_assert_eq!(magic::is_semimagic(&p.apply_left(&a)), mu.clone());
            prop_assert_eq!(magic::is_semimagic(&q.apply_right(&a)), mu.clone());
            prop_assert_eq!(magic::is_semimagic(&p.apply_both(&a)), mu);
            Ok(())
        })
        .unwrap();
}

#[test]
fn permutation_products_match_matrix_products() {
    runner(300)
        .run(&(1usize..=7).prop_flat_map(|n| (perm(n), perm(n), matrix(n))), |(p, q, a)| {
            prop_assert_eq!(p.then(&q).unwrap().to_matrix(), &p.to_matrix() * &q.to_matrix());
            prop_assert_eq!(p.apply_both(&a), &(&p.to_matrix() * &a) * &p.to_matrix());
            Ok(())
        })
        .unwrap();
}

#[test]
fn bisymmetric_conjugation_transports_type_a() {
    let witnesses: Vec<PermMatrix> = perms::gen_mcpm(4).into_iter().chain(perms::gen_mcpm(6)).collect();
    let strategy = (0..witnesses.len(), any::<u64>(), 1i64..50);
    runner(200)
        .run(&strategy, |(w, seed, k)| {
            let p = &witnesses[w];
            let n = p.order();
            let mu = BigInt::from(n as i64 * k);
            let a = Sampler::new(Relation::TypeA, p).sample(&mu, seed).unwrap();
            let bis = perms::gen_bisymmetric(n);
            let q = &bis[(seed % bis.len() as u64) as usize];
            let moved = magic::Square::magic(q.apply_both(a.matrix())).unwrap();
            let moved_p = p.conjugated_by(q).unwrap();
            prop_assert!(classify::type_a_witnesses(&moved).unwrap().contains(&moved_p));
            Ok(())
        })
        .unwrap();
}

#[test]
fn eigenvectors_map_to_negated_partners() {
    let p = perms::gen_mcpm(6).remove(5);
    let sampler = Sampler::new(Relation::TypeA, &p);
    runner(40)
        .run(&any::<u64>(), |seed| {
            let a = sampler.sample(&BigInt::from(600), seed).unwrap();
            let report = spectral::eigen_spectrum(&a, spectral::DEFAULT_TOL).unwrap();
            let mu = 600.0;
            for e in report.eigenvalues.iter().filter(|e| e.0.im.abs() < 1e-9 && e.0.re.abs() > 1e-6) {
                if (e.0.re - mu).abs() < 1e-6 {
                    continue;
                }
                let t = spectral::eigenvector_transport(&a, &p, e.0.re, EigenSide::Right).unwrap();
                prop_assert!(t.residual < 1e-6, "residual {} for {}", t.residual, e.0.re);
            }
            Ok(())
        })
        .unwrap();
}
