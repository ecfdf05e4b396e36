//! Ricci operator, its primary decomposition and the splitting criterion.

use nilgeom::catalog;
use nilgeom::geometry::ricci;
use nilgeom::liealg::split;
use nilgeom::spectral::{char_min_polynomials, format_factored, splitting_criterion};

fn main() -> nilgeom::Result<()> {
    for (name, alg) in [("h3_lorentz", catalog::h3_lorentz()), ("rxh3", catalog::rxh3())] {
        let s = split(&alg)?;
        let rc = ricci(&s)?;
        let cm = char_min_polynomials(&rc.operator)?;
        println!("{name}");
        println!("  Rc = {:?}", rc.operator.to_strings());
        println!("  scalar curvature = {}", nilgeom::scalar::format(&rc.scalar));
        println!("  characteristic: {}", format_factored(&cm.characteristic_factors));
        println!("  minimal:        {}", format_factored(&cm.minimal_factors));
        let crit = splitting_criterion(&s)?;
        for c in &crit.decomposition.components {
            println!("  component {:?} of dim {}", c.eigenvalue.as_ref().map(nilgeom::scalar::format), c.subspace.dim());
        }
        println!("  assignment: {:?}, criterion holds: {}", crit.assignment.iter().map(|a| a.1).collect::<Vec<_>>(), crit.holds);
    }
    Ok(())
}
