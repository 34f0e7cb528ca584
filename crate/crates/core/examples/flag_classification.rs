//! Missing-face census and flagness class of every built-in complex.

use smallcover::catalog::{self, CatalogItem};
use smallcover::obstructions::{euler_mod4, flagness_class};

fn main() {
    for entry in catalog::list() {
        let CatalogItem::Complex(k) = &entry.item else { continue };
        let census = k.missing_face_census();
        let sizes: Vec<usize> = census.missing_faces.iter().map(Vec::len).collect();
        print!("{:<22} f={:?} missing-by-size={:?}", entry.id, census.f_vector, sizes);
        if k.dim() == 3 {
            print!(" class={} euler-mod-4={}", flagness_class(k), euler_mod4(k));
        }
        println!();
    }
}
