//! Runs the full decision tree on a few built-in small covers.

use smallcover::catalog;
use smallcover::charmap::normal_form_lambda_beta;
use smallcover::obstructions::symplectic_verdict;
use smallcover::{Gf2Vector, SimplicialComplex};

fn main() -> smallcover::Result<()> {
    let cases = [
        ("polygon-product-5-4", "example-5.5"),
        ("lutz_m10_247880", "lambda-A.2"),
        ("IxQ-fig1", "lambda-IxQ"),
    ];
    for (k, m) in cases {
        println!("== {k} / {m}");
        let report = symplectic_verdict(&catalog::complex(k)?, &catalog::matrix(m)?)?;
        print!("{}", report.render());
    }

    // a factor-compatible normal form
    let beta = Gf2Vector::unit(4, 0);
    let nf = normal_form_lambda_beta(4, 6, &beta)?;
    println!("== polygon-product-4-6 / beta = {beta}");
    let k = SimplicialComplex::polygon_product_dual(4, 6)?;
    print!("{}", symplectic_verdict(&k, nf.matrix())?.render());
    Ok(())
}
