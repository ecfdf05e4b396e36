//! Classification report for every builtin algebra.

use nilgeom::catalog;
use nilgeom::spectral::classify;

fn main() -> nilgeom::Result<()> {
    for name in catalog::ALGEBRA_NAMES {
        let alg = catalog::algebra(name)?;
        println!("== {name}");
        print!("{}", classify(&alg).to_text());
    }
    Ok(())
}
