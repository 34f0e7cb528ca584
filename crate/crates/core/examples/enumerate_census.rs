//! Census of characteristic maps over a catalog complex.
//!
//!     cargo run --release --example enumerate_census -- polygon-product-4-4 symplectic-product

use smallcover::catalog;
use smallcover::enumeration::{enumerate_char_maps, Filter, SearchConfig};
use smallcover::obstructions::count_formula_symplectic;

fn main() -> smallcover::Result<()> {
    let mut args = std::env::args().skip(1);
    let id = args.next().unwrap_or_else(|| "lutz_m10_247880".into());
    let k = catalog::complex(&id)?;
    let mut config = SearchConfig::new(4);
    for f in args {
        config = config.filter(f.parse::<Filter>()?);
    }
    if config.filters.is_empty() {
        config = config.filter(Filter::CSymplectic);
    }

    let census = enumerate_char_maps(&k, &config)?;
    print!("{}", census.render());

    if let Some(p) = k.recognize_polygon_product_dual() {
        println!("closed formula for ({},{}): {}", p.m1, p.m2, count_formula_symplectic(p.m1, p.m2));
    }
    Ok(())
}
