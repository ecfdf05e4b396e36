//! Load an algebra definition file (or dump and reload a builtin) and
//! report its geometry.
//!
//! cargo run --example load_json -- path/to/algebra.json

use nilgeom::io::{dump_algebra, load_algebra, parse_algebra};
use nilgeom::spectral::classify;

fn main() -> nilgeom::Result<()> {
    let loaded = match std::env::args().nth(1) {
        Some(path) => load_algebra(path.as_ref())?,
        None => {
            let text = dump_algebra(&nilgeom::catalog::htype6(), None);
            println!("{text}");
            parse_algebra(&text)?
        }
    };
    print!("{}", classify(&loaded.algebra).to_text());
    Ok(())
}
