use polyescape_core::algnum::isolate_roots;
use polyescape_core::matrix::{min_poly, Matrix};
use polyescape_core::num::rat_int;
use rand::{Rng, SeedableRng};

fn main() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
    let d = 6;
    let a = Matrix::from_rows(
        (0..d)
            .map(|_| (0..d).map(|_| rat_int(rng.gen_range(-3..=3))).collect())
            .collect(),
    );
    let t0 = std::time::Instant::now();
    let mp = min_poly(&a).unwrap();
    println!("min_poly {:?} deg {}", t0.elapsed(), mp.deg0());
    let t1 = std::time::Instant::now();
    let roots = isolate_roots(&mp).unwrap();
    println!("isolate {:?} -> {} roots ({} real)", t1.elapsed(), roots.len(),
             roots.iter().filter(|r| r.is_real()).count());
}
