//! Circle-fibering certificate over the flag 2-sphere `L-fig1`.

use smallcover::catalog;
use smallcover::fibering::{
    check_affine, fibering_verdict, links_table, product_symplectic_certificate, render_links_table,
    AffineCocycle, CubicalSkeleton,
};
use smallcover::Gf2Vector;

fn main() -> smallcover::Result<()> {
    let l = catalog::complex("L-fig1")?;
    let mu = catalog::matrix("mu-sec6")?;
    let eps = catalog::vector("epsilon-sec6")?;

    println!("affine: {:?}", check_affine(&l, &mu));
    let cocycle = AffineCocycle::new(&mu, &eps)?;
    let skeleton = CubicalSkeleton::new(&l, &mu)?;
    println!(
        "{} vertices, {} edges, {} squares, {} cocycle defects",
        skeleton.vertex_count(),
        skeleton.edges.len(),
        skeleton.squares.len(),
        skeleton.cocycle_defects(&cocycle)
    );
    println!("loop through directions 0 and 1 at g=0: {}", cocycle.two_cycle_value(0, 0, 1)?);

    print!("{}", render_links_table(&links_table(&l, &cocycle)));
    println!("{:?}", fibering_verdict(&l, &mu, &eps).verdict);

    println!("with all signs positive: {:?}", fibering_verdict(&l, &mu, &Gf2Vector::zeros(10)).verdict);

    print!("{}", product_symplectic_certificate(&l, &mu, &eps)?.render());
    Ok(())
}
