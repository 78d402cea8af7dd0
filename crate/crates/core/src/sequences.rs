//! Integer recurrences behind the closed forms.
//!
//! For genus two every entry of `B(n)` satisfies the step-2 recurrence whose
//! characteristic polynomial is `P_0(x) P_1(x)`, a polynomial in `x^2`. The
//! sequences `s(n)` and `t(n)` are fixed by that recurrence and four integer
//! seeds per parity, so no eigenvalue arithmetic is ever needed (the
//! recurrence stays valid where the eigenvalues collide).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::knotmodel::ab_poly;

/// Coefficients `c_0 .. c_4` of `u(n), u(n+2), ..., u(n+8)`; `c_4 = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceCoeffs {
    pub c: [BigInt; 5],
}

impl RecurrenceCoeffs {
    /// `sum c_i u(n + 2i)` for a window `[u(n), u(n+2), ..., u(n+8)]`.
    pub fn residual(&self, window: &[BigInt; 5]) -> BigInt {
        self.c.iter().zip(window).map(|(c, u)| c * u).sum()
    }

    /// The term following `[u(n), u(n+2), u(n+4), u(n+6)]`.
    fn next(&self, w: &[BigInt; 4]) -> BigInt {
        -self.c[..4]
            .iter()
            .zip(w)
            .map(|(c, u)| c * u)
            .sum::<BigInt>()
    }
}

pub fn recurrence_coeffs(a: i64, b: i64) -> RecurrenceCoeffs {
    RecurrenceCoeffs {
        c: [
            ab_poly(a, b, &[(1, 2, 0)]),
            ab_poly(a, b, &[(2, 1, 0), (-3, 2, 0), (-4, 1, 1), (-1, 0, 2)]),
            ab_poly(
                a,
                b,
                &[
                    (1, 0, 0),
                    (-4, 1, 0),
                    (9, 2, 0),
                    (-2, 0, 1),
                    (6, 1, 1),
                    (1, 0, 2),
                ],
            ),
            ab_poly(a, b, &[(-2, 0, 0), (6, 1, 0), (2, 0, 1)]),
            BigInt::one(),
        ],
    }
}

/// Seeds `(s, t)` at `p, p+2, p+4, p+6` for parity `p`.
fn seeds(a: i64, b: i64, parity: u32) -> ([BigInt; 4], [BigInt; 4]) {
    let p = |terms: &[(i64, u32, u32)]| ab_poly(a, b, terms);
    if parity == 1 {
        (
            [
                BigInt::from(2),
                p(&[(2, 0, 0), (-9, 1, 0), (-3, 0, 1)]),
                p(&[
                    (2, 0, 0),
                    (-25, 1, 0),
                    (45, 2, 0),
                    (-5, 0, 1),
                    (30, 1, 1),
                    (5, 0, 2),
                ]),
                p(&[
                    (2, 0, 0),
                    (-49, 1, 0),
                    (189, 2, 0),
                    (-189, 3, 0),
                    (-7, 0, 1),
                    (105, 1, 1),
                    (-189, 2, 1),
                    (14, 0, 2),
                    (-63, 1, 2),
                    (-7, 0, 3),
                ]),
            ],
            [
                BigInt::zero(),
                BigInt::from(-3),
                p(&[(-5, 0, 0), (15, 1, 0), (5, 0, 1)]),
                p(&[
                    (-7, 0, 0),
                    (49, 1, 0),
                    (-63, 2, 0),
                    (14, 0, 1),
                    (-42, 1, 1),
                    (-7, 0, 2),
                ]),
            ],
        )
    } else {
        (
            [
                BigInt::zero(),
                BigInt::from(2),
                p(&[(2, 0, 0), (-6, 1, 0), (-2, 0, 1)]),
                p(&[
                    (2, 0, 0),
                    (-18, 1, 0),
                    (27, 2, 0),
                    (-4, 0, 1),
                    (18, 1, 1),
                    (3, 0, 2),
                ]),
            ],
            [
                BigInt::zero(),
                BigInt::zero(),
                BigInt::from(-2),
                p(&[(-4, 0, 0), (9, 1, 0), (3, 0, 1)]),
            ],
        )
    }
}

/// `(s(n), t(n))` for the genus-two polynomial with parameters `(a, b)`.
pub fn st_sequences(a: i64, b: i64, n: u32) -> (BigInt, BigInt) {
    let parity = n % 2;
    let (mut s, mut t) = seeds(a, b, parity);
    let idx = ((n - parity) / 2) as usize;
    if idx < 4 {
        return (s[idx].clone(), t[idx].clone());
    }
    let rec = recurrence_coeffs(a, b);
    for _ in 3..idx {
        let s_next = rec.next(&s);
        let t_next = rec.next(&t);
        s.rotate_left(1);
        t.rotate_left(1);
        s[3] = s_next;
        t[3] = t_next;
    }
    (s[3].clone(), t[3].clone())
}

/// Everything the genus-two closed forms consume at level `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeqValues {
    pub n: u32,
    pub s: BigInt,
    pub t: BigInt,
    /// `(s + (5a - b) t) / 2`
    pub zeta: BigInt,
    /// `(s^2 + (4a - (3a+b)^2) t^2) / 4`, materialized for even `n` only.
    pub mu: Option<BigInt>,
    /// `1 + 4a - 4b`
    pub k: BigInt,
}

fn exact_div(num: BigInt, den: i64, what: &str, n: u32) -> Result<BigInt> {
    let (q, r) = num.div_rem(&BigInt::from(den));
    if !r.is_zero() {
        return Err(Error::Invariant(format!(
            "{what} numerator {num} is not divisible by {den} at n = {n}"
        )));
    }
    Ok(q)
}

/// `s^2 + (4a - (3a+b)^2) t^2`, the numerator shared by `mu` and `β̂`.
pub fn norm_numerator(a: i64, b: i64, s: &BigInt, t: &BigInt) -> BigInt {
    let d = ab_poly(a, b, &[(4, 1, 0), (-9, 2, 0), (-6, 1, 1), (-1, 0, 2)]);
    s * s + d * t * t
}

pub fn seq_values(a: i64, b: i64, n: u32) -> Result<SeqValues> {
    let (s, t) = st_sequences(a, b, n);
    let zeta = exact_div(&s + BigInt::from(5 * a - b) * &t, 2, "zeta", n)?;
    let mu = if n.is_multiple_of(2) {
        Some(exact_div(norm_numerator(a, b, &s, &t), 4, "mu", n)?)
    } else {
        None
    };
    Ok(SeqValues {
        n,
        s,
        t,
        zeta,
        mu,
        k: BigInt::from(1 + 4 * a - 4 * b),
    })
}

/// Genus-one `(α(n), β(n))`: both satisfy `u(n+2) = u(n+1) - b u(n)` with
/// seeds `α = (2, 1)` and `β = (0, 1)`.
pub fn genus1_alpha_beta(b: i64, n: u32) -> (BigInt, BigInt) {
    let b = BigInt::from(b);
    let step = |(u0, u1): (BigInt, BigInt)| {
        let u2 = &u1 - &b * &u0;
        (u1, u2)
    };
    let mut alpha = (BigInt::from(2), BigInt::one());
    let mut beta = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        alpha = step(alpha);
        beta = step(beta);
    }
    (alpha.0, beta.0)
}
