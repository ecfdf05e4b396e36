//! Geodesic of the Lorentzian Heisenberg group with initial velocity
//! e1 + e3, written as CSV to stdout.

use nilgeom::catalog;
use nilgeom::geodesics::{geodesic, uniform_grid};
use nilgeom::liealg::split;

fn main() -> nilgeom::Result<()> {
    let alg = catalog::h3_lorentz();
    let c = geodesic(&split(&alg)?, &alg.e("e1"), &alg.e("e3"), &uniform_grid(2.0, 21))?;
    c.write_csv(&mut std::io::stdout())?;
    eprintln!("max residual {:?}, first-integral defect {:e}, speed drift {:e}", c.max_residual, c.first_integral_defect(), c.speed_drift());
    Ok(())
}
