use ndarray::{Array1, Array2};
use ndarray_linalg::Eigh;
use ndarray_linalg::UPLO;
use num_complex::Complex64;

pub struct SpinChainModel {
    pub n: usize,
}

pub fn probe_eigh() -> f64 {
    let h = Array2::<f64>::eye(4);
    let (vals, _vecs): (Array1<f64>, Array2<f64>) = h.eigh(UPLO::Lower).unwrap();
    vals[0]
}

pub fn probe_svd() -> f64 {
    use ndarray_linalg::SVDInto;
    let m = Array2::<Complex64>::from_shape_fn((6, 4), |(i, j)| {
        Complex64::new(i as f64 + 0.5, j as f64 - 1.0)
    });
    let (_u, s, _vt) = m.svd_into(true, true).unwrap();
    s[0]
}
