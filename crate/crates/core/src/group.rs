//! Finitely generated abelian groups in invariant-factor form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// `Z^free_rank ⊕ Z_{t_1} ⊕ ... ⊕ Z_{t_m}` with `2 <= t_1 | t_2 | ... | t_m`.
///
/// Two groups are isomorphic iff their canonical forms are equal, so the
/// derived `PartialEq` is group isomorphism.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    /// Direct sum of cyclic groups `Z_{d}` for every `d` in `orders`, with
    /// `Z_0 = Z` and `Z_{-d} = Z_d`.
    pub fn canonicalize<I>(orders: I) -> Self
    where
        I: IntoIterator<Item = BigInt>,
    {
        let mut free_rank = 0;
        let mut factors = Vec::new();
        for d in orders {
            let d = d.abs();
            if d.is_zero() {
                free_rank += 1;
            } else if !d.is_one() {
                factors.push(d);
            }
        }
        // After the inner loop over j, factors[i] divides every later entry;
        // later exchanges only touch multiples of it.
        for i in 0..factors.len() {
            for j in i + 1..factors.len() {
                let g = factors[i].gcd(&factors[j]);
                let l = factors[i].lcm(&factors[j]);
                factors[i] = g;
                factors[j] = l;
            }
        }
        factors.retain(|d| !d.is_one());
        Self {
            free_rank,
            torsion: factors,
        }
    }

    pub fn from_i64s(orders: &[i64]) -> Self {
        Self::canonicalize(orders.iter().map(|&d| BigInt::from(d)))
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Group order, or `None` when the group is infinite.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion.iter().product())
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z_{d}")).collect();
        match self.free_rank {
            0 => {}
            r => parts.push(format!("Z^{r}")),
        }
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn torsion(g: &AbelianGroup) -> Vec<i64> {
        g.torsion()
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect()
    }

    #[test]
    fn signs_and_units_are_dropped() {
        let g = AbelianGroup::from_i64s(&[1, -11, 1, 1]);
        assert_eq!(g.free_rank(), 0);
        assert_eq!(torsion(&g), vec![11]);
    }

    #[test]
    fn zeros_become_free_rank() {
        let g = AbelianGroup::from_i64s(&[0, 0]);
        assert_eq!(g.free_rank(), 2);
        assert!(g.torsion().is_empty());
        assert_eq!(g.order(), None);
    }

    #[test]
    fn coprime_factors_merge() {
        assert_eq!(torsion(&AbelianGroup::from_i64s(&[2, 3])), vec![6]);
    }

    #[test]
    fn chain_from_unsorted_input() {
        // 2-parts {4, 2}, 3-parts {3, 9}
        let g = AbelianGroup::from_i64s(&[4, 6, 9]);
        assert_eq!(torsion(&g), vec![6, 36]);
        assert_eq!(g.order(), Some(BigInt::from(216)));
    }

    #[test]
    fn display() {
        assert_eq!(AbelianGroup::trivial().to_string(), "0");
        assert_eq!(AbelianGroup::from_i64s(&[2, 0]).to_string(), "Z_2 + Z^1");
    }
}
