//! Coordinate-level isometry checks of the explicit maps on the oscillator
//! group chart and the neutral 6-dimensional chart.

use nilgeom::catalog::{self, pullback_isometry_check, sample_points};

fn main() -> nilgeom::Result<()> {
    let pts = sample_points(1, 50, 4, 3.0);
    let m4 = catalog::chart_m4();
    for f in [
        catalog::left_g(1.0, [2.0, 3.0], 4.0),
        catalog::left_n(1.0, [2.0, 3.0], 4.0),
        catalog::chi(0.5, [1.0, -1.0], 2.0),
        catalog::psi1(),
        catalog::psi2(),
        catalog::psi3(),
    ] {
        let r = pullback_isometry_check(&m4, &f, &pts)?;
        println!("{:<40} ok={} max defect {:.2e}", f.name(), r.ok, r.max_defect);
    }
    let r = pullback_isometry_check(&catalog::chart_m6(), &catalog::ftau(0.7), &sample_points(2, 50, 6, 3.0))?;
    println!("{:<40} ok={} max defect {:.2e}", "Ftau(0.7)", r.ok, r.max_defect);
    Ok(())
}
