//! Converting a type A square between two witnesses with a symmetric
//! conjugator.

use magiclab::classify;
use magiclab::fixtures;
use magiclab::Square;
use magiclab::magic;
use magiclab::perms;

fn main() -> magiclab::Result<()> {
    let (p, p2) = fixtures::conversion_pair_order6();
    let q = perms::mcpm_conjugator(&p, &p2)?;
    println!("P = {p}, P' = {p2}, Q = {q}, QPQ = {}", p.conjugated_by(&q)?);

    let a = Square::magic(fixtures::conversion_source_order6())?;
    println!("witnesses of A: {:?}", classify::type_a_witnesses(&a)?.iter().map(ToString::to_string).collect::<Vec<_>>());
    let image = q.apply_both(a.matrix());
    println!("QAQ =\n{image}");
    println!("QAQ magic: {}", magic::is_magic(&image).is_some());
    println!("QAQ semi-magic: {}", magic::is_semimagic(&image).is_some());
    Ok(())
}
