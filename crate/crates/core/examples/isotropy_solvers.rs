//! Exact solution spaces: isotropy pairs, skew derivations and the isotropy
//! algebra of a bi-invariant metric.

use nilgeom::catalog;
use nilgeom::isometry::{ahc_isotropy_algebra, isotropy_algebra, skew_derivations};
use nilgeom::liealg::split;

fn main() -> nilgeom::Result<()> {
    let rx = catalog::rxh3();
    let iso = isotropy_algebra(&split(&rx)?)?;
    println!("rxh3 isotropy algebra: {}", serde_json::to_string_pretty(&iso)?);
    let der = skew_derivations(&rx);
    println!("rxh3 skew derivations: dimension {}, D = {:?}", der.dimension(), der.basis[0][0].to_strings());
    for (name, alg) in [("free3_neutral", catalog::free3_neutral()), ("oscillator4", catalog::oscillator4())] {
        let a = ahc_isotropy_algebra(&alg)?;
        println!("{name}: AHC isotropy algebra of dimension {} (verified {})", a.dimension(), a.verified);
    }
    Ok(())
}
