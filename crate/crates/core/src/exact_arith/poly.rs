use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::rat::{lcm_of_denominators, Rat};

/// Univariate polynomial with exact rational coefficients.
///
/// `coeffs[i]` is the coefficient of `x^i`. Trailing zeros are trimmed, so
/// the zero polynomial has no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<Rat>", into = "Vec<Rat>")]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl From<Vec<Rat>> for Poly {
    fn from(coeffs: Vec<Rat>) -> Self {
        Poly::new(coeffs)
    }
}

impl From<Poly> for Vec<Rat> {
    fn from(p: Poly) -> Self {
        p.coeffs
    }
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Rat::from(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<Rat>) -> Self {
        Poly::new(vec![c.into()])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly::from_ints(&[0, 1])
    }

    /// `x + shift`.
    pub fn x_plus(shift: impl Into<Rat>) -> Self {
        Poly::new(vec![shift.into(), Rat::one()])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> Rat {
        self.coeffs.get(power).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> Rat {
        self.eval(&Rat::from(x))
    }

    pub fn scale(&self, k: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn pow(&self, exp: u32) -> Poly {
        (0..exp).fold(Poly::constant(1), |acc, _| &acc * self)
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &Poly) -> Poly {
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &(&acc * inner) + &Poly::constant(c.clone()))
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &Rat::from(i))
                .collect(),
        )
    }

    /// Positive integer multiple of `self` with integer coefficients, together
    /// with the multiplier. Signs of values are unchanged.
    pub fn integer_multiple(&self) -> (Vec<BigInt>, BigInt) {
        let l = lcm_of_denominators(&self.coeffs);
        let ints = self
            .coeffs
            .iter()
            .map(|c| (c * &Rat::from(l.clone())).to_integer().expect("cleared"))
            .collect();
        (ints, l)
    }
}

/// Horner evaluation on integer coefficients.
pub(crate) fn eval_big(coeffs: &[BigInt], x: &BigInt) -> BigInt {
    coeffs
        .iter()
        .rev()
        .fold(BigInt::from(0), |acc, c| acc * x + c)
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_ops {
    ($tr:ident, $method:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$method(&rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || mag != Rat::one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 if show_coeff => write!(f, "*x")?,
                1 => write!(f, "x")?,
                _ if show_coeff => write!(f, "*x^{i}")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_and_degree() {
        let p = Poly::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(Poly::from_ints(&[0, 0]).degree(), None);
        assert!(Poly::from_ints(&[0]).coeffs().is_empty());
    }

    #[test]
    fn arithmetic_and_eval() {
        // (x - 1)(x + 1) = x^2 - 1
        let p = Poly::x_plus(-1) * Poly::x_plus(1);
        assert_eq!(p, Poly::from_ints(&[-1, 0, 1]));
        assert_eq!(p.eval_int(5), Rat::from(24));
        assert_eq!((&p - &p), Poly::zero());
        assert_eq!(p.derivative(), Poly::from_ints(&[0, 2]));
    }

    #[test]
    fn compose_substitutes() {
        // p(x) = x^2, inner = (x - 1)/4
        let inner = Poly::x_plus(-1).scale(&Rat::frac(1, 4));
        let p = Poly::from_ints(&[0, 0, 1]).compose(&inner);
        assert_eq!(p.eval_int(9), Rat::from(4));
    }

    #[test]
    fn display() {
        let p = Poly::new(vec![Rat::frac(-23, 1), Rat::from(27), Rat::from(-10), Rat::one()]);
        assert_eq!(p.to_string(), "x^3 - 10*x^2 + 27*x - 23");
        assert_eq!(Poly::new(vec![Rat::zero(), Rat::frac(-28, 1), Rat::frac(4, 5)]).to_string(), "4/5*x^2 - 28*x");
    }

    #[test]
    fn integer_multiple_clears_denominators() {
        let p = Poly::new(vec![Rat::frac(1, 6), Rat::frac(3, 4)]);
        let (ints, l) = p.integer_multiple();
        assert_eq!(l, BigInt::from(12));
        assert_eq!(ints, vec![BigInt::from(2), BigInt::from(9)]);
    }
}
