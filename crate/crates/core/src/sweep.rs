//! Batch evaluation over parameter grids.
//!
//! With the `parallel` feature (on by default) batches run on the rayon
//! pool; without it, or with [`Execution::Sequential`], they run in order on
//! the calling thread. Output order always matches input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::Result;
use crate::knotmodel::AlexanderPoly;
use crate::oracle::{cross_check_with, ClosedForm, CrossCheckReport};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Falls back to sequential when built without the `parallel` feature.
    #[default]
    Parallel,
}

impl Execution {
    pub fn is_parallel_available() -> bool {
        cfg!(feature = "parallel")
    }
}

/// `items.map(f)` preserving order.
pub fn map_ordered<T, R, F>(items: &[T], exec: Execution, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => items.par_iter().map(f).collect(),
        _ => items.iter().map(f).collect(),
    }
}

/// Genus-two parameter grid `a in a_range \ {0}`, `b in b_range`, `n in 1..=n_max`.
pub fn genus2_grid(
    a_range: std::ops::RangeInclusive<i64>,
    b_range: std::ops::RangeInclusive<i64>,
    n_max: u32,
) -> Vec<(AlexanderPoly, u32)> {
    let mut out = Vec::new();
    for a in a_range {
        for b in b_range.clone() {
            let Ok(p) = AlexanderPoly::genus2(a, b) else {
                continue;
            };
            out.extend((1..=n_max).map(|n| (p, n)));
        }
    }
    out
}

/// Genus-one grid `b in b_range \ {0}`, `n in 1..=n_max`.
pub fn genus1_grid(
    b_range: std::ops::RangeInclusive<i64>,
    n_max: u32,
) -> Vec<(AlexanderPoly, u32)> {
    b_range
        .filter_map(|b| AlexanderPoly::genus1(b).ok())
        .flat_map(|p| (1..=n_max).map(move |n| (p, n)))
        .collect()
}

pub fn cross_check_batch(
    inputs: &[(AlexanderPoly, u32)],
    exec: Execution,
    closed: ClosedForm,
) -> Vec<Result<CrossCheckReport>> {
    map_ordered(inputs, exec, |(p, n)| cross_check_with(p, *n, closed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::homology;

    #[test]
    fn grids_skip_degenerate_parameters() {
        let g = genus2_grid(-1..=1, 0..=1, 3);
        assert_eq!(g.len(), 2 * 2 * 3);
        assert_eq!(genus1_grid(-1..=1, 2).len(), 4);
    }

    #[test]
    fn both_modes_agree_in_order() {
        let inputs = genus2_grid(-2..=2, -1..=1, 6);
        let seq = cross_check_batch(&inputs, Execution::Sequential, homology);
        let par = cross_check_batch(&inputs, Execution::Parallel, homology);
        assert_eq!(seq.len(), par.len());
        for ((s, p), (poly, n)) in seq.iter().zip(&par).zip(&inputs) {
            let (s, p) = (s.as_ref().unwrap(), p.as_ref().unwrap());
            assert_eq!((s.poly, s.n), (*poly, *n));
            assert_eq!((p.poly, p.n), (*poly, *n));
            assert_eq!(s.via_circulant, p.via_circulant);
            assert!(s.passed());
        }
    }
}
