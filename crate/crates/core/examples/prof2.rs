use polyescape_core::algnum::isolate_roots;
use polyescape_core::num::{rat_int, Rational};
use polyescape_core::poly::Poly;

fn p(v: &[i64]) -> Poly<Rational> {
    Poly::new(v.iter().map(|&c| rat_int(c)).collect())
}

fn main() {
    // irreducible quartic with mixed roots, like a random d=4 charpoly
    let f = p(&[-2, 1, 2, -1, 1]);
    let t0 = std::time::Instant::now();
    let roots = isolate_roots(&f).unwrap();
    println!("isolate {:?} -> {} roots", t0.elapsed(), roots.len());
    for r in &roots {
        if r.is_real() {
            let g = p(&[1, 3, 0, 2]); // cubic in the root
            let t1 = std::time::Instant::now();
            let v = r.eval_poly(&g);
            println!(
                "  real root {:.4}: eval_poly {:?} (result deg {})",
                r.to_f64(),
                t1.elapsed(),
                v.degree()
            );
        }
    }
}
