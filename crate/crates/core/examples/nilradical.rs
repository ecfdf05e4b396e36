//! Nilradical of the solvable algebras in the catalog and containment of
//! the nilpotent subalgebra of iso(7).

use nilgeom::catalog;
use nilgeom::isometry::{contains_subalgebra, nilradical};

fn main() -> nilgeom::Result<()> {
    let iso = catalog::iso7();
    let nr = nilradical(&iso)?;
    println!("iso7 basis {:?}", iso.basis_names());
    println!("nilradical: {:?}", nr.to_strings());
    let n = catalog::iso7_nil_subalgebra();
    println!("n inside nilradical: {}", contains_subalgebra(&iso, &nr, &n));
    println!("n inside [iso, iso]: {}", contains_subalgebra(&iso, &iso.derived_algebra(), &n));
    println!("oscillator4 nilradical: {:?}", nilradical(&catalog::oscillator4())?.to_strings());
    Ok(())
}
