//! Random type A and type B squares from the linear relations, with their
//! solution space dimensions.

use magiclab::construct::{self, Relation, Sampler};
use magiclab::linalg::{det_exact, rank_exact};
use magiclab::perms;
use num_bigint::BigInt;

fn main() -> magiclab::Result<()> {
    for n in [4, 6, 8] {
        let p = perms::gen_mcpm(n).pop().expect("even order");
        for relation in [Relation::TypeA, Relation::TypeBLeft, Relation::TypeBRight] {
            let sampler = Sampler::new(relation, &p);
            // the largest multiple of n/2 below 100
            let mu = BigInt::from(100 / (n / 2) * (n / 2));
            match sampler.sample(&mu, 7) {
                Ok(s) => println!(
                    "n={n} {relation:?} witness {p}: dim {}, rank {}, det {}",
                    sampler.dim(),
                    rank_exact(s.matrix()),
                    det_exact(s.matrix())
                ),
                Err(e) => println!("n={n} {relation:?} witness {p}: dim {}, {e}", sampler.dim()),
            }
        }
    }
    let s = construct::random_type_a(4, &"(4 3 2 1)".parse()?, &BigInt::from(34), 1)?;
    println!("\n{}", s.matrix());
    Ok(())
}
