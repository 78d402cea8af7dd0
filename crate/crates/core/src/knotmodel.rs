//! Matrix models attached to the normalized Alexander polynomial of a
//! 2-bridge knot of genus one or two.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::zmat::IntMatrix;

/// Evaluates `sum c * a^i * b^j` over `terms = [(c, i, j), ...]`.
pub(crate) fn ab_poly(a: i64, b: i64, terms: &[(i64, u32, u32)]) -> BigInt {
    let (a, b) = (BigInt::from(a), BigInt::from(b));
    terms
        .iter()
        .map(|&(c, i, j)| BigInt::from(c) * a.pow(i) * b.pow(j))
        .sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Genus {
    /// `A(z) = b + (1 - 2b) z + b z^2`
    One { b: i64 },
    /// `A(z) = a + (b - a) z + (1 - 2b) z^2 + (b - a) z^3 + a z^4`
    Two { a: i64, b: i64 },
}

/// Alexander polynomial normalized by `A(1) = 1` with nonzero constant and
/// leading coefficients. Construct through [`AlexanderPoly::genus1`] or
/// [`AlexanderPoly::genus2`], which reject the degenerate parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AlexanderPoly(Genus);

impl AlexanderPoly {
    pub fn genus1(b: i64) -> Result<Self> {
        if b == 0 {
            return Err(Error::InvalidParameters(
                "b = 0 gives A(z) = 1 (trivial knot)".into(),
            ));
        }
        Ok(Self(Genus::One { b }))
    }

    pub fn genus2(a: i64, b: i64) -> Result<Self> {
        if a == 0 {
            return Err(Error::InvalidParameters(
                "a = 0 drops the degree below 4; use genus 1".into(),
            ));
        }
        Ok(Self(Genus::Two { a, b }))
    }

    pub fn genus(&self) -> Genus {
        self.0
    }

    pub fn genus_number(&self) -> u8 {
        match self.0 {
            Genus::One { .. } => 1,
            Genus::Two { .. } => 2,
        }
    }

    /// `(a_0, ..., a_s)`, summing to 1.
    pub fn coefficients(&self) -> Vec<BigInt> {
        let c: Vec<i64> = match self.0 {
            Genus::One { b } => vec![b, 1 - 2 * b, b],
            Genus::Two { a, b } => vec![a, b - a, 1 - 2 * b, b - a, a],
        };
        c.into_iter().map(BigInt::from).collect()
    }

    pub fn eval(&self, z: i64) -> BigInt {
        let z = BigInt::from(z);
        self.coefficients()
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &z + c)
    }

    /// `k = A(-1)`; its absolute value is the knot determinant.
    pub fn knot_determinant(&self) -> BigInt {
        self.eval(-1)
    }

    pub fn companion_u_v(&self) -> (IntMatrix, IntMatrix) {
        companion_u_v(&self.coefficients()).expect("degree >= 2")
    }

    pub fn gamma(&self) -> IntMatrix {
        let (u, v) = self.companion_u_v();
        gamma_from_companions(&u, &v).expect("det(U + V) = A(1) = 1")
    }

    /// `B(n) = Γ^n - (Γ - I)^n`.
    pub fn b_matrix(&self, n: u32) -> IntMatrix {
        b_matrix_from_gamma(&self.gamma(), n)
    }

    /// `A(T_n) = sum_l a_l T_n^l` for the cyclic shift `T_n`.
    pub fn circulant_presentation(&self, n: u32) -> Result<IntMatrix> {
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        let n = n as usize;
        let mut row0 = vec![BigInt::zero(); n];
        for (l, c) in self.coefficients().iter().enumerate() {
            row0[l % n] += c;
        }
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, row0[(j + n - i) % n].clone());
            }
        }
        Ok(m)
    }
}

impl fmt::Display for AlexanderPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Genus::One { b } => write!(f, "genus 1 (b={b})"),
            Genus::Two { a, b } => write!(f, "genus 2 (a={a}, b={b})"),
        }
    }
}

/// `U` (shift with `-1` on the superdiagonal, last row `a_0 .. a_{s-1}`)
/// and `V = diag(1, ..., 1, a_s)` for coefficients `a_0 .. a_s`.
pub fn companion_u_v(coeffs: &[BigInt]) -> Result<(IntMatrix, IntMatrix)> {
    if coeffs.len() < 2 {
        return Err(Error::InvalidParameters(
            "polynomial must have degree at least 1".into(),
        ));
    }
    let s = coeffs.len() - 1;
    let mut u = IntMatrix::zeros(s, s);
    for i in 0..s - 1 {
        u.set(i, i + 1, BigInt::from(-1));
    }
    for (j, c) in coeffs[..s].iter().enumerate() {
        u.set(s - 1, j, c.clone());
    }
    let mut v = IntMatrix::identity(s);
    v.set(s - 1, s - 1, coeffs[s].clone());
    Ok((u, v))
}

/// `Γ = (U + V)^{-1} U`; fails unless `U + V` is unimodular.
pub fn gamma_from_companions(u: &IntMatrix, v: &IntMatrix) -> Result<IntMatrix> {
    u.add(v)?.inverse_unimodular()?.mul(u)
}

pub fn b_matrix_from_gamma(gamma: &IntMatrix, n: u32) -> IntMatrix {
    let shifted = gamma.minus_identity().expect("square");
    gamma
        .pow(n)
        .and_then(|g| g.sub(&shifted.pow(n)?))
        .expect("square")
}

/// Γ for genus two written out in `(a, b)`; valid for every integer pair,
/// including `a = 0`.
pub fn genus2_gamma(a: i64, b: i64) -> IntMatrix {
    IntMatrix::from_rows(&[
        [a, b - 1, -b, -a],
        [a, b, -b, -a],
        [a, b, 1 - b, -a],
        [a, b, 1 - b, 1 - a],
    ])
    .expect("4x4")
}

/// Characteristic polynomial of Γ (ascending coefficients):
/// `a - (3a+b) x + (1+3a+b) x^2 - 2 x^3 + x^4`.
pub fn gamma_char_poly(a: i64, b: i64) -> Vec<BigInt> {
    vec![
        ab_poly(a, b, &[(1, 1, 0)]),
        ab_poly(a, b, &[(-3, 1, 0), (-1, 0, 1)]),
        ab_poly(a, b, &[(1, 0, 0), (3, 1, 0), (1, 0, 1)]),
        BigInt::from(-2),
        BigInt::one(),
    ]
}

/// Characteristic polynomial of `Γ - I`: `P_0(-x)`.
pub fn shifted_gamma_char_poly(a: i64, b: i64) -> Vec<BigInt> {
    gamma_char_poly(a, b)
        .into_iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 1 { -c } else { c })
        .collect()
}

/// A named knot with its polynomial parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotRecord {
    pub name: String,
    pub poly: AlexanderPoly,
    pub slope: Option<String>,
    pub source: Option<String>,
}
