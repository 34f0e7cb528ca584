//! Reading and writing complexes and matrices, and the built-in catalog.

use smallcover::catalog;
use smallcover::io::{complex_to_json, complex_to_text, matrix_to_text, parse_complex_checked, parse_matrix};
use smallcover::validate::validate_closed_3sphere_like;

fn main() -> smallcover::Result<()> {
    for e in catalog::list() {
        println!("{:<24} {}", e.id, e.description);
    }
    catalog::self_test()?;

    let k = catalog::complex("lutz_m10_247880")?;
    let text = complex_to_text(&k);
    print!("{text}");
    println!("{}", complex_to_json(&k));
    for c in validate_closed_3sphere_like(&k).checks {
        println!("  {:<22} {} {}", c.name, c.passed, c.detail);
    }

    let (_, warnings) = parse_complex_checked("0 1 2\n0 1\n1 2 3\n0 2 3\n0 1 3\n0 1 2\n")?;
    for w in warnings {
        println!("warning: {w}");
    }

    let lambda = parse_matrix("1,2,1,2,7,4,8,4,8", 4)?;
    print!("{}", matrix_to_text(&lambda));
    Ok(())
}
