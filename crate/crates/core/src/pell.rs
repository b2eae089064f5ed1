//! Pell equation machinery: least solutions of `x^2 - D*y^2 = 1` by the
//! continued-fraction expansion of sqrt(D), solution streams, and the
//! composition identity
//! `(a^2 - D b^2)(c^2 - D d^2) = (ac - D bd)^2 - D (ad - bc)^2`.

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PellError {
    #[error("modulus must be at least 2, got {0}")]
    TooSmall(u64),
    #[error("modulus {0} is a perfect square")]
    PerfectSquare(u64),
    #[error("mismatched moduli: {0} vs {1}")]
    MismatchedModulus(u64, u64),
    #[error("x must be odd to map onto the side-2 family")]
    EvenX,
}

/// A positive solution of `x^2 - D*y^2 = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PellSolution {
    pub x: BigInt,
    pub y: BigInt,
    pub d: u64,
}

impl PellSolution {
    pub fn is_valid(&self) -> bool {
        &self.x * &self.x - BigInt::from(self.d) * &self.y * &self.y == BigInt::one()
    }
}

fn check_modulus(d: u64) -> Result<u64, PellError> {
    if d < 2 {
        return Err(PellError::TooSmall(d));
    }
    let r = d.sqrt();
    if r * r == d {
        return Err(PellError::PerfectSquare(d));
    }
    Ok(r)
}

/// Least positive solution, from the continued-fraction expansion of
/// sqrt(D). Convergents p/q are tested until `p^2 - D*q^2 = 1`.
pub fn fundamental(d: u64) -> Result<PellSolution, PellError> {
    let a0 = check_modulus(d)?;
    let big_d = BigInt::from(d);
    let mut m: u64 = 0;
    let mut den: u64 = 1;
    let mut a = a0;
    let (mut p_prev, mut p) = (BigInt::one(), BigInt::from(a0));
    let (mut q_prev, mut q) = (BigInt::zero(), BigInt::one());
    loop {
        if &p * &p - &big_d * &q * &q == BigInt::one() {
            return Ok(PellSolution { x: p, y: q, d });
        }
        m = den * a - m;
        den = (d - m * m) / den;
        a = (a0 + m) / den;
        let p_next = BigInt::from(a) * &p + &p_prev;
        let q_next = BigInt::from(a) * &q + &q_prev;
        p_prev = std::mem::replace(&mut p, p_next);
        q_prev = std::mem::replace(&mut q, q_next);
    }
}

/// First `count` solutions in increasing order, generated by composing with
/// the fundamental solution.
pub fn stream(d: u64, count: usize) -> Result<Vec<PellSolution>, PellError> {
    let first = fundamental(d)?;
    let big_d = BigInt::from(d);
    let mut out = Vec::with_capacity(count);
    let (mut x, mut y) = (first.x.clone(), first.y.clone());
    for _ in 0..count {
        out.push(PellSolution {
            x: x.clone(),
            y: y.clone(),
            d,
        });
        let x_next = &first.x * &x + &big_d * &first.y * &y;
        let y_next = &first.x * &y + &first.y * &x;
        x = x_next;
        y = y_next;
    }
    Ok(out)
}

/// Sign choice inside the composition identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComposeSign {
    Plus,
    Minus,
}

/// Raw composition identity with an explicit sign: returns
/// `(xp*xq + D*yp*yq, xp*yq + yp*xq)` for `Plus` and
/// `(xp*xq - D*yp*yq, |xp*yq - yp*xq|)` for `Minus`. Either output satisfies
/// `x^2 - D*y^2 = 1`, but the minus form can land on the trivial `(1, 0)`.
pub fn compose_signed(
    p: &PellSolution,
    q: &PellSolution,
    sign: ComposeSign,
) -> Result<(BigInt, BigInt), PellError> {
    if p.d != q.d {
        return Err(PellError::MismatchedModulus(p.d, q.d));
    }
    let big_d = BigInt::from(p.d);
    let (x, y) = match sign {
        ComposeSign::Plus => (&p.x * &q.x + &big_d * &p.y * &q.y, &p.x * &q.y + &p.y * &q.x),
        ComposeSign::Minus => (
            &p.x * &q.x - &big_d * &p.y * &q.y,
            (&p.x * &q.y - &p.y * &q.x).abs(),
        ),
    };
    debug_assert!(&x * &x - &big_d * &y * &y == BigInt::one());
    Ok((x, y))
}

/// Composition of two solutions: the minus-sign identity when it yields a
/// strictly positive pair, otherwise the plus-sign composition. The result
/// always satisfies the Pell invariant.
pub fn compose(p: &PellSolution, q: &PellSolution) -> Result<PellSolution, PellError> {
    let (x, y) = compose_signed(p, q, ComposeSign::Minus)?;
    if x.is_positive() && y.is_positive() {
        return Ok(PellSolution { x, y, d: p.d });
    }
    let (x, y) = compose_signed(p, q, ComposeSign::Plus)?;
    Ok(PellSolution { x, y, d: p.d })
}

/// Maps a solution of `x^2 - 12*y^2 = 1` onto the parameters `(b, c)` of the
/// side-2 quadrilateral family, via `x = 2b + 1`, `y = c`. The outputs
/// satisfy `b * (b + 1) = 3 * c^2`.
pub fn quad_parameters(s: &PellSolution) -> Result<(BigInt, BigInt), PellError> {
    if s.d != 12 {
        return Err(PellError::MismatchedModulus(s.d, 12));
    }
    if (&s.x % 2u8).is_zero() {
        return Err(PellError::EvenX);
    }
    let b = (&s.x - 1) / 2;
    Ok((b, s.y.clone()))
}
