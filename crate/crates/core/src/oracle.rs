//! Brute-force pipelines that check the closed forms.
//!
//! Two independent presentations of `H_1(M_n, Z)` are reduced by Smith
//! normal form: Seifert's `Γ^n - (Γ - I)^n` and Fox's circulant `A(T_n)`.
//! The circulant one is treated as ground truth when they disagree.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::group::AbelianGroup;
use crate::homology::{self, exact_sequence_check, HomologyResult, OrderCheck};
use crate::knotmodel::{b_matrix_from_gamma, genus2_gamma, AlexanderPoly, Genus};
use crate::sequences::{seq_values, st_sequences};
use crate::zmat::IntMatrix;

pub fn homology_via_bn(poly: &AlexanderPoly, n: u32) -> Result<AbelianGroup> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    poly.b_matrix(n).cokernel()
}

pub fn homology_via_circulant(poly: &AlexanderPoly, n: u32) -> Result<AbelianGroup> {
    poly.circulant_presentation(n)?.cokernel()
}

/// A Seifert matrix whose antisymmetric part `V - V^t` is unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertMatrix(IntMatrix);

impl SeifertMatrix {
    pub fn new(v: IntMatrix) -> Result<Self> {
        if !v.is_square() || !v.rows().is_multiple_of(2) {
            return Err(Error::InvalidParameters(format!(
                "Seifert matrix must be square of even size, got {}x{}",
                v.rows(),
                v.cols()
            )));
        }
        let det = v.sub(&v.transpose())?.determinant()?;
        if det != BigInt::from(1) && det != BigInt::from(-1) {
            return Err(Error::InvalidSeifert { det });
        }
        Ok(Self(v))
    }

    /// The genus-one form `[[λ1, 1], [0, λ2]]`, whose polynomial has `b = λ1 λ2`.
    pub fn genus1(lambda1: i64, lambda2: i64) -> Self {
        Self::new(IntMatrix::from_rows(&[[lambda1, 1], [0, lambda2]]).expect("2x2"))
            .expect("V - V^t = [[0, 1], [-1, 0]]")
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }
}

/// Seifert matrix of the stevedore knot 6_1.
pub fn stevedore_seifert() -> SeifertMatrix {
    SeifertMatrix::genus1(1, -2)
}

/// Seifert matrix of the 3-bridge knot 9_46, which shares 6_1's Alexander
/// polynomial but not its cover homology. Excluded from 2-bridge sweeps.
pub fn knot_9_46_seifert() -> SeifertMatrix {
    SeifertMatrix::new(
        IntMatrix::from_rows(&[[1, 0, 0, 0], [0, -1, 0, 0], [1, 0, 1, 1], [-1, -1, 0, 0]])
            .expect("4x4"),
    )
    .expect("unimodular antisymmetric part")
}

/// `Γ = (V - V^t)^{-1} V`.
pub fn seifert_gamma(v: &SeifertMatrix) -> Result<IntMatrix> {
    let m = v.matrix();
    m.sub(&m.transpose())?.inverse_unimodular()?.mul(m)
}

pub fn homology_via_seifert(v: &SeifertMatrix, n: u32) -> Result<AbelianGroup> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    b_matrix_from_gamma(&seifert_gamma(v)?, n).cokernel()
}

/// `2L` for odd levels (`L = I/2`).
pub fn odd_lemma_l2() -> IntMatrix {
    IntMatrix::identity(4)
}

/// `2R` for odd levels.
pub fn odd_lemma_r2(a: i64, b: i64) -> IntMatrix {
    let p = 2 * (-1 + a + 2 * b);
    IntMatrix::from_rows(&[
        [a - b, p, 2 * (a - b), -2 * a],
        [2 * a, b - a, 2 * a, 0],
        [0, 2 * a, b - a, 2 * a],
        [-2 * a, 2 * (a - b), p, a - b],
    ])
    .expect("4x4")
}

/// `2L_e` for even levels; equals `B(2)`.
pub fn even_lemma_l2(a: i64, b: i64) -> IntMatrix {
    IntMatrix::from_rows(&[
        [-1 + 2 * a, 2 * (b - 1), -2 * b, -2 * a],
        [2 * a, -1 + 2 * b, -2 * b, -2 * a],
        [2 * a, 2 * b, 1 - 2 * b, -2 * a],
        [2 * a, 2 * b, 2 * (1 - b), 1 - 2 * a],
    ])
    .expect("4x4")
}

/// `[[x, y], [z, w]] -> [[-w, -z], [-y, -x]]`
fn hat(m: [[i64; 2]; 2]) -> [[i64; 2]; 2] {
    [[-m[1][1], -m[1][0]], [-m[0][1], -m[0][0]]]
}

/// `2R_e = 2 [[P, Q], [hat Q, hat P]]` for even levels.
pub fn even_lemma_r2(a: i64, b: i64) -> IntMatrix {
    // P and Q already doubled
    let p = [
        [
            -5 * a + 6 * a * a + b + 2 * a * b,
            2 * (1 - 2 * a - 3 * b + 3 * a * b + b * b),
        ],
        [2 * a * (-1 + 3 * a + b), (3 * a + b) * (-1 + 2 * b)],
    ];
    let q = [
        [2 * (-a + b - 3 * a * b - b * b), -2 * a * (-1 + 3 * a + b)],
        [2 * (a - 3 * a * b - b * b), -2 * a * (3 * a + b)],
    ];
    let (ph, qh) = (hat(p), hat(q));
    let rows: Vec<[i64; 4]> = (0..2)
        .map(|i| [p[i][0], p[i][1], q[i][0], q[i][1]])
        .chain((0..2).map(|i| [qh[i][0], qh[i][1], ph[i][0], ph[i][1]]))
        .collect();
    IntMatrix::from_rows(&rows).expect("4x4")
}

/// Checks `2 B(n) = s(n) (2L) + t(n) (2R)` with the parity-appropriate
/// constant matrices. Works for every integer `(a, b)`, including `a = 0`.
pub fn verify_lemma_decomposition(a: i64, b: i64, n: u32) -> bool {
    let b_n = b_matrix_from_gamma(&genus2_gamma(a, b), n);
    let (s, t) = st_sequences(a, b, n);
    let (l2, r2) = if n % 2 == 1 {
        (odd_lemma_l2(), odd_lemma_r2(a, b))
    } else {
        (even_lemma_l2(a, b), even_lemma_r2(a, b))
    };
    let rhs = l2.scale(&s).add(&r2.scale(&t)).expect("4x4");
    b_n.scale(&BigInt::from(2)) == rhs
}

/// `det B(n) = k μ(n)^2` at even `n`.
pub fn verify_determinant_identity(a: i64, b: i64, n: u32) -> Result<bool> {
    let v = seq_values(a, b, n)?;
    let Some(mu) = v.mu else {
        return Err(Error::InvalidParameters(format!("n = {n} is odd")));
    };
    let det = b_matrix_from_gamma(&genus2_gamma(a, b), n).determinant()?;
    Ok(det == v.k * &mu * &mu)
}

/// Signature of a closed-form evaluator; swapped out in tests to make sure
/// disagreements are caught.
pub type ClosedForm = fn(&AlexanderPoly, u32) -> Result<HomologyResult>;

#[derive(Clone, Debug)]
pub struct CrossCheckReport {
    pub poly: AlexanderPoly,
    pub n: u32,
    /// Closed form, or the error it raised rendered as text.
    pub closed_form: std::result::Result<HomologyResult, String>,
    pub via_bn: AbelianGroup,
    pub via_circulant: AbelianGroup,
    /// Genus two only.
    pub lemma_identity: Option<bool>,
    /// Genus two, even `n` only.
    pub determinant_identity: Option<bool>,
    /// Genus two, even `n` only.
    pub exact_sequence: Option<OrderCheck>,
    /// True iff every pipeline produced the same group.
    pub agree: bool,
}

impl CrossCheckReport {
    pub fn passed(&self) -> bool {
        self.agree
            && self.lemma_identity != Some(false)
            && self.determinant_identity != Some(false)
            && self.exact_sequence != Some(OrderCheck::Fail)
    }

    /// The group of record: the circulant pipeline's.
    pub fn group(&self) -> &AbelianGroup {
        &self.via_circulant
    }
}

pub fn cross_check(poly: &AlexanderPoly, n: u32) -> Result<CrossCheckReport> {
    cross_check_with(poly, n, homology::homology)
}

pub fn cross_check_with(
    poly: &AlexanderPoly,
    n: u32,
    closed: ClosedForm,
) -> Result<CrossCheckReport> {
    let via_bn = homology_via_bn(poly, n)?;
    let via_circulant = homology_via_circulant(poly, n)?;
    let closed_form = closed(poly, n).map_err(|e| e.to_string());
    let agree = matches!(&closed_form, Ok((g, _)) if *g == via_bn && *g == via_circulant);

    let (mut lemma_identity, mut determinant_identity, mut exact_sequence) = (None, None, None);
    if let Genus::Two { a, b } = poly.genus() {
        lemma_identity = Some(verify_lemma_decomposition(a, b, n));
        if n.is_multiple_of(2) {
            determinant_identity = Some(verify_determinant_identity(a, b, n).unwrap_or(false));
            exact_sequence =
                Some(exact_sequence_check(a, b, n).map_or(OrderCheck::Fail, |r| r.status));
        }
    }

    Ok(CrossCheckReport {
        poly: *poly,
        n,
        closed_form,
        via_bn,
        via_circulant,
        lemma_identity,
        determinant_identity,
        exact_sequence,
        agree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::homology_genus1;

    fn group(orders: &[i64]) -> AbelianGroup {
        AbelianGroup::from_i64s(orders)
    }

    #[test]
    fn bn_pipeline_examples() {
        let p = AlexanderPoly::genus2(-1, 2).unwrap();
        assert_eq!(homology_via_bn(&p, 4).unwrap(), group(&[11]));
        assert!(homology_via_bn(&p, 1).unwrap().is_trivial());
        let p = AlexanderPoly::genus2(1, -2).unwrap();
        assert_eq!(homology_via_bn(&p, 13).unwrap(), group(&[1171, 1171]));
    }

    #[test]
    fn circulant_pipeline_examples() {
        let p = AlexanderPoly::genus1(-2).unwrap();
        assert_eq!(homology_via_circulant(&p, 2).unwrap(), group(&[9]));
        assert!(homology_via_circulant(&p, 1).unwrap().is_trivial());
        let p = AlexanderPoly::genus2(1, -4).unwrap();
        assert_eq!(homology_via_circulant(&p, 2).unwrap(), group(&[21]));
        let p = AlexanderPoly::genus2(-1, 2).unwrap();
        assert_eq!(homology_via_circulant(&p, 5).unwrap(), group(&[2, 2, 2, 2]));
    }

    #[test]
    fn seifert_gamma_examples() {
        let g = seifert_gamma(&stevedore_seifert()).unwrap();
        assert_eq!(g, IntMatrix::from_rows(&[[0, 2], [1, 1]]).unwrap());
        let v = SeifertMatrix::genus1(3, -5);
        let anti = v.matrix().sub(&v.matrix().transpose()).unwrap();
        assert_eq!(anti, IntMatrix::from_rows(&[[0, 1], [-1, 0]]).unwrap());
        let _ = knot_9_46_seifert();
        let bad = IntMatrix::from_rows(&[[1, 2], [0, 1]]).unwrap();
        assert!(matches!(
            SeifertMatrix::new(bad),
            Err(Error::InvalidSeifert { .. })
        ));
        assert!(SeifertMatrix::new(IntMatrix::identity(3)).is_err());
    }

    #[test]
    fn seifert_pipeline_examples() {
        assert_eq!(
            homology_via_seifert(&stevedore_seifert(), 2).unwrap(),
            group(&[9])
        );
        assert_eq!(
            homology_via_seifert(&knot_9_46_seifert(), 2).unwrap(),
            group(&[3, 3])
        );
        assert!(homology_via_seifert(&knot_9_46_seifert(), 1)
            .unwrap()
            .is_trivial());
        let v = SeifertMatrix::genus1(4, 1);
        let w = SeifertMatrix::genus1(2, 2);
        for n in 1..=12 {
            assert_eq!(
                homology_via_seifert(&v, n).unwrap(),
                homology_via_seifert(&w, n).unwrap()
            );
        }
    }

    #[test]
    fn seifert_matches_genus1_theorem() {
        for l1 in (-3..=3).filter(|&x| x != 0) {
            for l2 in (-3..=3).filter(|&x| x != 0) {
                let v = SeifertMatrix::genus1(l1, l2);
                for n in 1..=12 {
                    let expected = homology_genus1(l1 * l2, n).unwrap().0;
                    assert_eq!(
                        homology_via_seifert(&v, n).unwrap(),
                        expected,
                        "l1={l1} l2={l2} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn genus1_even_structure() {
        // H(n) = β(n) [[1, 2λ2], [-2λ1, -1]] at even n
        for l1 in [-2i64, 1, 3] {
            for l2 in [-3i64, -1, 2] {
                for n in (2..=10).step_by(2) {
                    let beta = crate::sequences::genus1_alpha_beta(l1 * l2, n).1;
                    let h = IntMatrix::from_rows(&[[1, 2 * l2], [-2 * l1, -1]])
                        .unwrap()
                        .scale(&beta);
                    let d = h.smith_normal_form().diagonal;
                    let want = AbelianGroup::canonicalize([
                        beta.clone(),
                        BigInt::from(4 * l1 * l2 - 1) * &beta,
                    ]);
                    assert_eq!(AbelianGroup::canonicalize(d), want);
                }
            }
        }
    }

    #[test]
    fn lemma_examples() {
        assert!(verify_lemma_decomposition(2, 3, 0));
        assert!(verify_lemma_decomposition(-1, 2, 7));
        assert_eq!(
            even_lemma_l2(-1, 2),
            AlexanderPoly::genus2(-1, 2).unwrap().b_matrix(2)
        );
    }

    #[test]
    fn corrupted_closed_form_is_flagged() {
        fn off_by_one(poly: &AlexanderPoly, n: u32) -> Result<HomologyResult> {
            let (g, c) = homology::homology(poly, n)?;
            let mut orders: Vec<BigInt> = g.torsion().to_vec();
            orders.push(BigInt::from(2));
            Ok((AbelianGroup::canonicalize(orders), c))
        }
        let p = AlexanderPoly::genus2(-1, 2).unwrap();
        let r = cross_check_with(&p, 4, off_by_one).unwrap();
        assert!(!r.agree);
        assert!(!r.passed());
        assert!(cross_check(&p, 4).unwrap().passed());
    }

    #[test]
    fn cross_check_examples() {
        let r = cross_check(&AlexanderPoly::genus2(-1, 2).unwrap(), 12).unwrap();
        assert!(r.passed());
        assert_eq!(*r.group(), group(&[11, 55, 55]));

        let r = cross_check(&AlexanderPoly::genus1(1).unwrap(), 6).unwrap();
        assert!(r.passed());
        assert_eq!(r.group().free_rank(), 2);

        let r = cross_check(&AlexanderPoly::genus2(1, -1).unwrap(), 9).unwrap();
        assert!(r.passed());
        assert_eq!(r.lemma_identity, Some(true));
    }
}
