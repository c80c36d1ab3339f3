//! Order-5 bisymmetric factors whose product is 90°-symmetric.

use magiclab::fixtures::FixtureSet;
use magiclab::transforms;

fn main() -> magiclab::Result<()> {
    let set = FixtureSet::embedded();
    let f = set.perms("gardner_factors")?;
    let shown = set.perm("gardner_product")?;
    let r = transforms::gardner_check(&f[0], &f[1], &shown)?;
    println!("{}", serde_json::to_string_pretty(&r).expect("serializable"));
    Ok(())
}
