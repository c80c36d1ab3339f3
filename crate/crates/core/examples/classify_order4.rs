//! Labels, groups and witnesses for the order-4 reference squares.

use magiclab::classify;
use magiclab::fixtures;
use magiclab::Square;

fn main() -> magiclab::Result<()> {
    for (name, s) in [
        ("durer", Square::magic(fixtures::durer())?),
        ("type_i", Square::magic(fixtures::type_i_order4())?),
        ("pandiagonal", Square::magic(fixtures::pandiagonal_order4())?),
    ] {
        let c = classify::classify(&s)?;
        let label = c.dudeney_label.map(|l| l.to_string()).unwrap_or_default();
        let group = c.trigg_group.map(|g| g.to_string()).unwrap_or_default();
        println!("{name}: mu {} label {label} group {group} pandiagonal {}", c.mu, c.pandiagonal);
        for w in &c.witnesses {
            println!("  {:?} {} on image {}", w.relation, w.perm, w.image);
        }
    }
    Ok(())
}
