//! Exact arithmetic in Q and Q[t].
//!
//! Everything downstream (matrices, stabilizer bounds, labels, cocycle
//! values) is built on these two types. No floating point anywhere.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational n/d. Panics if d = 0.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Degree of a polynomial, with deg 0 = NegInf sorting below every integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Degree {
    NegInf,
    Fin(i64),
}

impl Degree {
    /// Degree after multiplying by t^delta (delta may be negative).
    pub fn shift(self, delta: i64) -> Degree {
        match self {
            Degree::NegInf => Degree::NegInf,
            Degree::Fin(k) => Degree::Fin(k + delta),
        }
    }

    /// deg <= bound, with NegInf passing every bound.
    pub fn at_most(self, bound: i64) -> bool {
        match self {
            Degree::NegInf => true,
            Degree::Fin(k) => k <= bound,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => write!(f, "-inf"),
            Degree::Fin(k) => write!(f, "{}", k),
        }
    }
}

/// Dense polynomial in Q[t]. `coeffs[k]` is the t^k coefficient; the top
/// stored coefficient is nonzero (the zero polynomial stores nothing).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(rat(1))
    }

    /// The variable t.
    pub fn t() -> Poly {
        Poly::monomial(rat(1), 1)
    }

    pub fn constant(c: Rat) -> Poly {
        Poly::from_coeffs(alloc::vec![c])
    }

    /// c * t^k.
    pub fn monomial(c: Rat, k: usize) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = alloc::vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// t^k.
    pub fn t_pow(k: usize) -> Poly {
        Poly::monomial(rat(1), k)
    }

    /// Build from coefficients (index = exponent), trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Poly {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Build from integer coefficients (index = exponent).
    pub fn from_ints(ints: &[i64]) -> Poly {
        Poly::from_coeffs(ints.iter().map(|&n| rat(n)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        if self.coeffs.is_empty() {
            Degree::NegInf
        } else {
            Degree::Fin(self.coeffs.len() as i64 - 1)
        }
    }

    /// The t^k coefficient (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Split p = high + low with every term of `high` of exponent >= n+1
    /// and deg(low) <= n.
    pub fn split(&self, n: usize) -> (Poly, Poly) {
        if self.coeffs.len() <= n + 1 {
            return (Poly::zero(), self.clone());
        }
        let low = Poly::from_coeffs(self.coeffs[..=n].to_vec());
        let mut high_coeffs = alloc::vec![Rat::zero(); n + 1];
        high_coeffs.extend_from_slice(&self.coeffs[n + 1..]);
        (Poly::from_coeffs(high_coeffs), low)
    }

    /// Canonical representative modulo (t^{n+1}): terms of exponent <= n.
    pub fn truncate(&self, n: usize) -> Poly {
        self.split(n).1
    }

    /// True when every term has exponent >= n+1, i.e. the polynomial lies
    /// in the ideal (t^{n+1}).
    pub fn in_ideal(&self, n: usize) -> bool {
        self.truncate(n).is_zero()
    }

    /// All coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for k in 0..len {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for k in 0..len {
            coeffs.push(self.coeff(k) - rhs.coeff(k));
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = alloc::vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

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
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match k {
                0 => write!(f, "{}", a)?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{}*", a)?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{}", k)?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_cancellation() {
        let a = Poly::from_ints(&[1, 1]); // t + 1
        let b = Poly::from_ints(&[0, -1]); // -t
        assert_eq!(&a + &b, Poly::one());
    }

    #[test]
    fn add_identity() {
        let p = Poly::from_ints(&[3, 0, -2, 7]);
        assert_eq!(&Poly::zero() + &p, p);
    }

    #[test]
    fn add_rational_coeffs() {
        // (t^2 + 1/2) + (1/2) = t^2 + 1
        let a = Poly::from_coeffs(alloc::vec![ratio(1, 2), rat(0), rat(1)]);
        let b = Poly::constant(ratio(1, 2));
        assert_eq!(&a + &b, Poly::from_ints(&[1, 0, 1]));
    }

    #[test]
    fn mul_monomials() {
        for n in 0..6 {
            assert_eq!(&Poly::t_pow(n) * &Poly::t_pow(n), Poly::t_pow(2 * n));
        }
    }

    #[test]
    fn mul_annihilator() {
        let p = Poly::from_ints(&[1, -4, 2]);
        assert_eq!(&p * &Poly::zero(), Poly::zero());
    }

    #[test]
    fn mul_difference_of_squares() {
        let a = Poly::from_ints(&[1, 1]);
        let b = Poly::from_ints(&[-1, 1]);
        assert_eq!(&a * &b, Poly::from_ints(&[-1, 0, 1]));
    }

    #[test]
    fn coeff_reads() {
        let n = 5;
        let p = &Poly::monomial(rat(3), n) + &Poly::t();
        assert_eq!(p.coeff(n), rat(3));
        assert_eq!(Poly::zero().coeff(5), rat(0));
        assert_eq!(Poly::from_ints(&[1, 1]).pow(3).coeff(2), rat(3));
    }

    #[test]
    fn split_examples() {
        let p = Poly::from_ints(&[0, 1, 0, 1]); // t^3 + t
        let (hi, lo) = p.split(1);
        assert_eq!(hi, Poly::t_pow(3));
        assert_eq!(lo, Poly::t());

        assert_eq!(Poly::zero().split(4), (Poly::zero(), Poly::zero()));

        let q = Poly::from_ints(&[1, 1, 1]);
        assert_eq!(q.split(2), (Poly::zero(), q.clone()));
    }

    #[test]
    fn truncate_examples() {
        let p = Poly::from_ints(&[0, 1, 0, 1]);
        assert_eq!(p.truncate(1), Poly::t());
        for n in 0..5 {
            assert_eq!(Poly::t_pow(n + 1).truncate(n), Poly::zero());
        }
    }

    #[test]
    fn degree_sentinel_orders_below_everything() {
        assert!(Degree::NegInf < Degree::Fin(i64::MIN));
        assert!(Degree::NegInf.at_most(-1000));
        assert_eq!(Degree::NegInf.shift(7), Degree::NegInf);
        assert_eq!(Poly::zero().degree(), Degree::NegInf);
        assert_eq!(Poly::t_pow(4).degree(), Degree::Fin(4));
    }

    #[test]
    fn display_is_readable() {
        let p = &Poly::monomial(ratio(-1, 2), 2) + &Poly::from_ints(&[1, 3]);
        assert_eq!(alloc::format!("{}", p), "-1/2*t^2 + 3*t + 1");
        assert_eq!(alloc::format!("{}", Poly::zero()), "0");
    }
}
