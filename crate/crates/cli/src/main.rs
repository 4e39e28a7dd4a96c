use std::time::Instant;
fn main() {
    use ndarray::Array2;
    use num_complex::Complex64;
    use ndarray_linalg::{SVDDCInto, JobSvd};
    for sz in [128usize, 256, 512] {
        let m = Array2::<Complex64>::from_shape_fn((sz, sz), |(i, j)| {
            Complex64::new(((i * 31 + j * 17) % 101) as f64 / 101.0, ((i * 13 + j * 7) % 89) as f64 / 89.0)
        });
        let t = Instant::now();
        let mut s0 = 0.0;
        let iters = 10;
        for _ in 0..iters {
            let (_u, s, _vt) = m.clone().svddc_into(JobSvd::Some).unwrap();
            s0 = s[0];
        }
        println!("svddc {}x{} c64: {:?}/iter (s0={:.3})", sz, sz, t.elapsed() / iters, s0);
    }
    // zgemm probe
    let sz = 512;
    let a = Array2::<Complex64>::from_elem((sz, sz), Complex64::new(0.5, -0.25));
    let b = a.clone();
    let t = Instant::now();
    for _ in 0..10 { let _c = a.dot(&b); }
    println!("zgemm {sz}: {:?}/iter", t.elapsed() / 10);
}
