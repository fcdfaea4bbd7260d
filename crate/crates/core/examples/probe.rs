use bergman_toeplitz::bergman::*;
use bergman_toeplitz::mobius::MobiusTransform;
use num_complex::Complex64;

fn main() {
    let g = MobiusTransform::new(
        Complex64::new(0.5f64.cosh(), 0.0),
        Complex64::new(0.5f64.sinh(), 0.0),
    ).unwrap();
    let t = 6.0;
    for n in [40usize, 44, 46, 48, 50, 52, 56] {
        let u = representation_matrix(&g, BasisSpec::new(t, n).unwrap()).unwrap();
        println!("dim degree {n}: defect10 = {:.3e}", unitarity_defect(&u, 10));
    }
}
