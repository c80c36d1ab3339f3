//! Dürer's square, its dihedral images and its 32-member permutation family.

use magiclab::fixtures;
use magiclab::Square;
use magiclab::linalg::det_exact;
use magiclab::transforms;

fn main() -> magiclab::Result<()> {
    let durer = Square::magic(fixtures::durer())?;
    println!("{}", durer.matrix());
    println!("mu = {}, det = {}", durer.mu().expect("magic"), det_exact(durer.matrix()));

    let fam = transforms::family(&durer)?;
    println!("family of {} squares (rho(4) = {})", fam.len(), transforms::rho(4));
    println!("all natural: {}", fam.members.iter().all(|s| s.is_natural()));
    for (p, img) in fam.generators.iter().zip(&fam.members).take(3) {
        println!("generator {p}, member\n{}", img.matrix());
    }
    Ok(())
}
