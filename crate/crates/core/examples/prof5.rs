use polyescape_core::matrix::{min_poly, Matrix};
use polyescape_core::num::{rat_int, Rational};
use polyescape_core::poly::{diff_poly, rational_squarefree_part, sum_poly, Poly};
use rand::{Rng, SeedableRng};

fn main() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
    let d = 6;
    let a = Matrix::from_rows(
        (0..d)
            .map(|_| (0..d).map(|_| rat_int(rng.gen_range(-3..=3))).collect())
            .collect(),
    );
    let f = min_poly(&a).unwrap();
    println!("minpoly deg {} height~{:?}", f.deg0(), f.coeffs().iter().map(|c| c.numer().bits()).max());

    let t = std::time::Instant::now();
    let s2 = sum_poly(&f, &f);
    println!("sum_poly {:?} deg {}", t.elapsed(), s2.deg0());

    let t = std::time::Instant::now();
    let apoly = rational_squarefree_part(&s2.scale_arg(&rat_int(2)));
    println!("sqfree(A) {:?} deg {}", t.elapsed(), apoly.deg0());

    let t = std::time::Instant::now();
    let dp = diff_poly(&f, &f);
    println!("diff_poly {:?} deg {}", t.elapsed(), dp.deg0());

    let bits: u64 = apoly.coeffs().iter().map(|c| c.numer().bits()).max().unwrap();
    println!("apoly max coeff bits {bits}");
    let t = std::time::Instant::now();
    let iso = polyescape_core::algnum::isolate_roots(&Poly::new(vec![rat_int(0), rat_int(1)]));
    let _ = iso;
    println!("warm {:?}", t.elapsed());
}
