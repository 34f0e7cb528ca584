//! Rank of the squaring map in mod-2 cohomology across the normal forms.

use smallcover::charmap::normal_form_lambda_beta;
use smallcover::cohomology::squaring_rank;
use smallcover::{Gf2Vector, SimplicialComplex};

fn main() -> smallcover::Result<()> {
    for (m1, m2) in [(4, 4), (4, 6), (6, 4)] {
        let k = SimplicialComplex::polygon_product_dual(m1, m2)?;
        let mut ranks = Vec::new();
        for b in 0..1u64 << m1 {
            let nf = normal_form_lambda_beta(m1, m2, &Gf2Vector::from_bits(b, m1)?)?;
            ranks.push(squaring_rank(&k, nf.matrix())?.rank);
        }
        println!("({m1},{m2}) ranks by beta: {ranks:?}");
    }
    Ok(())
}
