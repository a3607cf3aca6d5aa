use polyescape_core::matrix::Matrix;
use polyescape_core::num::rat_int;
use polyescape_core::spectral::{coefficient_table, eigen_structure};
use rand::{Rng, SeedableRng};

fn main() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
    let mut total = std::time::Duration::ZERO;
    for iter in 0..10 {
        let d = 6;
        let a = Matrix::from_rows(
            (0..d)
                .map(|_| (0..d).map(|_| rat_int(rng.gen_range(-3..=3))).collect())
                .collect(),
        );
        let b: Vec<_> = (0..d).map(|_| rat_int(rng.gen_range(-3..=3))).collect();
        let t0 = std::time::Instant::now();
        let s = eigen_structure(&a).unwrap();
        let ok1 = s.projections_sum_to_identity()
            && s.factor_idempotents_check()
            && s.projections_idempotent()
            && s.projections_nilpotent()
            && s.projections_cross_orthogonal();
        let t = coefficient_table(&b, &s).unwrap();
        let ok2 = t.moment_identity_holds(2 * d);
        let el = t0.elapsed();
        total += el;
        println!("iter {iter}: {el:?} proj_ok={ok1} moment_ok={ok2} deg={}", s.minpoly().deg0());
    }
    println!("total {total:?}");
}
