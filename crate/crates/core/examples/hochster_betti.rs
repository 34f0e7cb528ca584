//! Betti numbers of a small cover from the full subcomplexes of its row-space weights.

use smallcover::catalog;
use smallcover::cohomology::{hochster_profile, mod2_betti, rz_betti};

fn main() -> smallcover::Result<()> {
    let id = std::env::args().nth(1).unwrap_or_else(|| "lambda-A.2".into());
    let entry = catalog::get(&id)?;
    let catalog::CatalogItem::Matrix { matrix, over } = entry.item else {
        panic!("{id} is not a matrix id");
    };
    let k = catalog::complex(&over)?;

    let profile = hochster_profile(&k, &matrix)?;
    for line in profile.render_lines() {
        println!("{line}");
    }
    println!("rational betti of the small cover: {:?}", profile.betti);
    println!("mod-2 betti (h-vector):            {:?}", mod2_betti(&k)?);
    println!("betti of the real moment-angle complex: {:?}", rz_betti(&k)?);
    Ok(())
}
