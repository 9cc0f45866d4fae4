//! Shared fixtures for the pipeline benchmarks. Everything here builds
//! inputs only; the work being measured lives in `l2dim-core`.

use l2dim_core::{realize, Cochain0, FiniteGroupRealization, Graph, Presentation, Rational};
use num_bigint::BigInt;

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

/// The free abelian presentation `<a, b | a b a' b'>` together with its
/// `(Z/m)^2` grid realization: generator `a` shifts the first coordinate,
/// `b` the second.
pub fn grid_fixture(m: usize) -> (Presentation, FiniteGroupRealization) {
    let degree = m * m;
    let images: Vec<Vec<usize>> = (0..2)
        .map(|axis| {
            let stride = if axis == 0 { 1 } else { m };
            (0..degree)
                .map(|point| {
                    if (point / stride) % m + 1 == m {
                        point - (m - 1) * stride
                    } else {
                        point + stride
                    }
                })
                .collect()
        })
        .collect();
    let presentation = Presentation::parse(names(&["a", "b"]), &["a b a' b'"]).unwrap();
    let realization = realize(&images, degree).unwrap();
    (presentation, realization)
}

/// `<a | a^k>` realized by the cyclic shift on `0..k`.
pub fn cyclic_fixture(k: usize) -> (Presentation, FiniteGroupRealization) {
    let shift: Vec<usize> = (0..k).map(|i| (i + 1) % k).collect();
    let presentation = Presentation::parse(names(&["a"]), &[format!("a^{k}")]).unwrap();
    let realization = realize(&[shift], k).unwrap();
    (presentation, realization)
}

/// A path on `n` vertices carrying the linear ramp `f(x) = x`. Every vertex
/// value is a distinct breakpoint, so threshold scans over this input see
/// the full quadratic workload.
pub fn ramp_fixture(n: usize) -> (Graph, Cochain0) {
    let edges: Vec<(usize, usize)> = (0..n - 1).map(|x| (x, x + 1)).collect();
    let graph = Graph::new(n, edges).unwrap();
    let values: Vec<Rational> = (0..n)
        .map(|x| Rational::from_integer(BigInt::from(x)))
        .collect();
    (graph, Cochain0::new(values))
}
