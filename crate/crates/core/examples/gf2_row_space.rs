//! Row space, kernel and canonical form of a characteristic matrix.

use smallcover::catalog;
use smallcover::charmap::dj_canonical;

fn main() -> smallcover::Result<()> {
    let lambda = catalog::matrix("example-5.5")?;
    println!("columns: {:?}", lambda.column_codes());

    let r = lambda.rref();
    println!("rank {} with pivots {:?}", r.rank, r.pivots);
    for row in r.matrix.rows() {
        println!("  {row}");
    }

    println!("kernel basis:");
    for v in lambda.kernel_basis() {
        println!("  {v}");
    }

    let weights: Vec<_> = lambda.row_space()?.collect();
    println!("{} row-space weights", weights.len());

    println!("canonical columns: {:?}", dj_canonical(&lambda)?.column_codes());
    Ok(())
}
