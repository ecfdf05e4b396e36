//! Build a metric Lie algebra by hand, then inspect brackets, center and
//! signatures.

use nilgeom::liealg::{restrict_metric, signature};
use nilgeom::scalar::{int, one};
use nilgeom::{Matrix, MetricLieAlgebra};

fn main() -> nilgeom::Result<()> {
    let h3 = MetricLieAlgebra::builder(&["e1", "e2", "e3"])
        .bracket_named("e1", "e2", &[("e3", one())])
        .metric(Matrix::diagonal(&[int(-1), int(1), int(1)]))
        .build()?;

    println!("[e1, e2] = {:?}", nilgeom::matrix::vec_to_strings(&h3.bracket(&h3.e("e1"), &h3.e("e2"))?));
    println!("validate: {:?}", h3.validate());
    let z = h3.center();
    println!("center basis: {:?}", z.to_strings());
    let r = restrict_metric(&h3, &z);
    println!("center non-degenerate: {}, signature {:?}", r.nondegenerate, r.signature);
    println!("metric signature: {:?}", signature(h3.metric())?);
    println!("ad-invariant: {}", h3.is_ad_invariant());
    Ok(())
}
