use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::rat::Rat;

/// Splits `n` into `(m, s)` with `n = m^2 * s` and `s` squarefree.
///
/// `sqrt_decompose(0) = (0, 0)` and `sqrt_decompose(1) = (1, 1)`; otherwise
/// `s >= 1`. Trial division only; inputs in this crate are bounded by
/// `3 * dmax^4`, which keeps this cheap.
pub fn sqrt_decompose(n: u64) -> (u64, u64) {
    if n == 0 {
        return (0, 0);
    }
    let mut rem = n;
    let mut square_root = 1u64;
    let mut squarefree = 1u64;
    let mut p = 2u64;
    while p.checked_mul(p).is_some_and(|pp| pp <= rem) {
        if rem.is_multiple_of(p) {
            let mut e = 0u32;
            while rem.is_multiple_of(p) {
                rem /= p;
                e += 1;
            }
            for _ in 0..e / 2 {
                square_root *= p;
            }
            if e % 2 == 1 {
                squarefree *= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    // rem is now 1 or a prime
    if rem > 1 {
        squarefree *= rem;
    }
    (square_root, squarefree)
}

/// A quadratic extension element `base + coeff * sqrt(radicand)`.
///
/// Invariants kept by construction:
/// - `radicand` is squarefree;
/// - if the radicand is 0 or 1 it is folded into `base` and `coeff = 0`;
/// - if `coeff = 0` the radicand is normalized to 0.
///
/// Two surds can be added or compared only when their radicands match or one
/// of them is rational; the binary operators panic otherwise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Surd {
    base: Rat,
    coeff: Rat,
    radicand: u64,
}

impl Surd {
    pub fn new(base: Rat, coeff: Rat, radicand: u64) -> Self {
        if coeff.is_zero() || radicand == 0 {
            return Surd {
                base,
                coeff: Rat::zero(),
                radicand: 0,
            };
        }
        let (m, s) = sqrt_decompose(radicand);
        let coeff = coeff * Rat::from_int(m as i64);
        if s == 1 {
            Surd {
                base: base + coeff,
                coeff: Rat::zero(),
                radicand: 0,
            }
        } else {
            Surd {
                base,
                coeff,
                radicand: s,
            }
        }
    }

    pub fn from_rat(r: Rat) -> Self {
        Surd {
            base: r,
            coeff: Rat::zero(),
            radicand: 0,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(Rat::from_int(n))
    }

    /// Exact square root of a natural number, as `m * sqrt(s)`.
    pub fn sqrt_of_nat(n: u64) -> Self {
        let (m, s) = sqrt_decompose(n);
        Surd::new(Rat::zero(), Rat::from_int(m as i64), s)
    }

    pub fn base(&self) -> &Rat {
        &self.base
    }

    pub fn coeff(&self) -> &Rat {
        &self.coeff
    }

    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    pub fn is_rational(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero() && self.coeff.is_zero()
    }

    fn common_radicand(&self, other: &Surd) -> u64 {
        if self.radicand == other.radicand {
            self.radicand
        } else if self.coeff.is_zero() {
            other.radicand
        } else if other.coeff.is_zero() {
            self.radicand
        } else {
            panic!(
                "incompatible radicands: sqrt({}) vs sqrt({})",
                self.radicand, other.radicand
            );
        }
    }

    /// Exact sign, never approximated: -1, 0 or +1.
    pub fn sign(&self) -> i8 {
        let sb = self.base.signum();
        let sc = self.coeff.signum();
        if sc == 0 {
            return sb;
        }
        if sb == 0 {
            return sc;
        }
        if sb == sc {
            return sb;
        }
        // Opposite signs: compare base^2 against coeff^2 * radicand. The two
        // cannot be equal for a squarefree radicand >= 2 and nonzero parts.
        let lhs = self.base.square();
        let rhs = self.coeff.square() * Rat::from_int(self.radicand as i64);
        match lhs.cmp(&rhs) {
            std::cmp::Ordering::Greater => sb,
            std::cmp::Ordering::Less => sc,
            std::cmp::Ordering::Equal => 0,
        }
    }

    pub fn scale(&self, r: &Rat) -> Surd {
        Surd::new(&self.base * r, &self.coeff * r, self.radicand)
    }

    pub fn square(&self) -> Surd {
        self * self
    }
}

/// Exact sign of a surd. Free-function form of [`Surd::sign`].
pub fn sign_of(x: &Surd) -> i8 {
    x.sign()
}

impl Add for &Surd {
    type Output = Surd;
    fn add(self, rhs: &Surd) -> Surd {
        let s = self.common_radicand(rhs);
        Surd::new(&self.base + &rhs.base, &self.coeff + &rhs.coeff, s)
    }
}

impl Sub for &Surd {
    type Output = Surd;
    fn sub(self, rhs: &Surd) -> Surd {
        let s = self.common_radicand(rhs);
        Surd::new(&self.base - &rhs.base, &self.coeff - &rhs.coeff, s)
    }
}

impl Mul for &Surd {
    type Output = Surd;
    fn mul(self, rhs: &Surd) -> Surd {
        let s = self.common_radicand(rhs);
        let rad = Rat::from_int(s as i64);
        let base = &self.base * &rhs.base + &(&self.coeff * &rhs.coeff) * &rad;
        let coeff = &self.base * &rhs.coeff + &self.coeff * &rhs.base;
        Surd::new(base, coeff, s)
    }
}

impl Neg for &Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd {
            base: -&self.base,
            coeff: -&self.coeff,
            radicand: self.radicand,
        }
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff.is_zero() {
            write!(f, "{}", self.base)
        } else if self.base.is_zero() {
            write!(f, "{}*sqrt({})", self.coeff, self.radicand)
        } else if self.coeff.is_negative() {
            write!(f, "{}-{}*sqrt({})", self.base, self.coeff.abs(), self.radicand)
        } else {
            write!(f, "{}+{}*sqrt({})", self.base, self.coeff, self.radicand)
        }
    }
}

impl fmt::Debug for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Surd({})", self)
    }
}
