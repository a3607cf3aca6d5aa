use polyescape_core::matrix::Matrix;
use polyescape_core::num::rat_int;
use polyescape_core::spectral::{coefficient_table, eigen_structure};
use rand::{Rng, SeedableRng};

fn main() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
    for iter in 0..8 {
        let d = rng.gen_range(2..=4usize);
        let a = Matrix::from_rows(
            (0..d)
                .map(|_| (0..d).map(|_| rat_int(rng.gen_range(-2..=2))).collect())
                .collect(),
        );
        let b: Vec<_> = (0..d).map(|_| rat_int(rng.gen_range(-2..=2))).collect();
        let t0 = std::time::Instant::now();
        let s = eigen_structure(&a).unwrap();
        let t1 = std::time::Instant::now();
        let t = coefficient_table(&b, &s).unwrap();
        let t2 = std::time::Instant::now();
        let ok = t.moment_identity_holds(2 * d);
        let t3 = std::time::Instant::now();
        println!(
            "iter {iter} d={d}: eig {:?} table {:?} moment {:?} ok={ok} minpoly_deg={}",
            t1 - t0,
            t2 - t1,
            t3 - t2,
            s.minpoly().deg0()
        );
    }
}
