//! 3x3 matrices over Q[t], elementary/diagonal/permutation constructors,
//! and the upper-unipotent group with its congruence quotients.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use crate::poly::{rat, Poly, Rat};

/// 3x3 matrix with entries in Q[t]. Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Mat3 {
    rows: [[Poly; 3]; 3],
}

impl Mat3 {
    pub fn from_rows(rows: [[Poly; 3]; 3]) -> Mat3 {
        Mat3 { rows }
    }

    pub fn identity() -> Mat3 {
        let mut m = Mat3::zero();
        for k in 0..3 {
            m.rows[k][k] = Poly::one();
        }
        m
    }

    pub fn zero() -> Mat3 {
        Mat3 {
            rows: core::array::from_fn(|_| core::array::from_fn(|_| Poly::zero())),
        }
    }

    /// Elementary matrix: identity plus `a` in position (row, col).
    /// Panics on equal indices.
    pub fn elementary(row: usize, col: usize, a: Poly) -> Mat3 {
        assert!(row < 3 && col < 3, "index out of range");
        assert!(row != col, "elementary matrix requires distinct indices");
        let mut m = Mat3::identity();
        m.rows[row][col] = a;
        m
    }

    /// Diagonal matrix of signs. Each entry must be +1 or -1.
    pub fn diag_signs(signs: [i64; 3]) -> Mat3 {
        assert!(signs.iter().all(|s| *s == 1 || *s == -1));
        let mut m = Mat3::zero();
        for k in 0..3 {
            m.rows[k][k] = Poly::constant(rat(signs[k]));
        }
        m
    }

    /// Permutation matrix sending basis vector `k` to basis vector `perm[k]`.
    pub fn permutation(perm: [usize; 3]) -> Mat3 {
        let mut seen = [false; 3];
        for &p in &perm {
            assert!(p < 3 && !seen[p], "not a permutation");
            seen[p] = true;
        }
        let mut m = Mat3::zero();
        for k in 0..3 {
            m.rows[perm[k]][k] = Poly::one();
        }
        m
    }

    pub fn entry(&self, row: usize, col: usize) -> &Poly {
        &self.rows[row][col]
    }

    pub fn det(&self) -> Poly {
        let e = |r: usize, c: usize| &self.rows[r][c];
        let m = |r1, c1, r2, c2| e(r1, c1) * e(r2, c2);
        let cof0 = &m(1, 1, 2, 2) - &m(1, 2, 2, 1);
        let cof1 = &m(1, 0, 2, 2) - &m(1, 2, 2, 0);
        let cof2 = &m(1, 0, 2, 1) - &m(1, 1, 2, 0);
        &(&(e(0, 0) * &cof0) - &(e(0, 1) * &cof1)) + &(e(0, 2) * &cof2)
    }

    /// Every coefficient of every entry is an integer.
    pub fn is_integral(&self) -> bool {
        self.rows.iter().flatten().all(Poly::is_integral)
    }
}

impl Mul for &Mat3 {
    type Output = Mat3;
    fn mul(self, rhs: &Mat3) -> Mat3 {
        let mut out = Mat3::zero();
        for r in 0..3 {
            for c in 0..3 {
                let mut acc = Poly::zero();
                for k in 0..3 {
                    acc = &acc + &(&self.rows[r][k] * &rhs.rows[k][c]);
                }
                out.rows[r][c] = acc;
            }
        }
        out
    }
}

impl Mul for Mat3 {
    type Output = Mat3;
    fn mul(self, rhs: Mat3) -> Mat3 {
        &self * &rhs
    }
}

impl fmt::Display for Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..3 {
            write!(f, "[ ")?;
            for c in 0..3 {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.rows[r][c])?;
            }
            writeln!(f, " ]")?;
        }
        Ok(())
    }
}

/// Upper unipotent matrix over Q[t], stored by its three coordinates:
/// x at (0,1), y at (1,2), z at (0,2). The group law is
/// (x1,y1,z1)(x2,y2,z2) = (x1+x2, y1+y2, z1+z2+x1*y2).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Unipotent {
    pub x: Poly,
    pub y: Poly,
    pub z: Poly,
}

impl Unipotent {
    pub fn identity() -> Unipotent {
        Unipotent {
            x: Poly::zero(),
            y: Poly::zero(),
            z: Poly::zero(),
        }
    }

    pub fn new(x: Poly, y: Poly, z: Poly) -> Unipotent {
        Unipotent { x, y, z }
    }

    pub fn e12(a: Poly) -> Unipotent {
        Unipotent::new(a, Poly::zero(), Poly::zero())
    }

    pub fn e23(a: Poly) -> Unipotent {
        Unipotent::new(Poly::zero(), a, Poly::zero())
    }

    pub fn e13(a: Poly) -> Unipotent {
        Unipotent::new(Poly::zero(), Poly::zero(), a)
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn inverse(&self) -> Unipotent {
        Unipotent {
            x: -&self.x,
            y: -&self.y,
            z: &(&self.x * &self.y) - &self.z,
        }
    }

    /// Commutator a^-1 b^-1 a b.
    pub fn commutator(a: &Unipotent, b: &Unipotent) -> Unipotent {
        &(&a.inverse() * &b.inverse()) * &(a * b)
    }

    pub fn embed(&self) -> Mat3 {
        let mut m = Mat3::identity();
        m.rows[0][1] = self.x.clone();
        m.rows[1][2] = self.y.clone();
        m.rows[0][2] = self.z.clone();
        m
    }

    /// Degree-n coefficients of the (0,1) and (1,2) coordinates. This is a
    /// group homomorphism onto Q^2 whose kernel contains the congruence
    /// subgroup at level n.
    pub fn label(&self, n: usize) -> (Rat, Rat) {
        (self.x.coeff(n), self.y.coeff(n))
    }

    /// Coordinate-wise truncation modulo (t^{n+1}); a group homomorphism
    /// onto the level-n quotient.
    pub fn truncate(&self, n: usize) -> UnipotentModN {
        UnipotentModN {
            n,
            x: self.x.truncate(n),
            y: self.y.truncate(n),
            z: self.z.truncate(n),
        }
    }

    /// All three coordinates lie in the ideal (t^{n+1}), i.e. the element
    /// is congruent to the identity modulo t^{n+1}.
    pub fn in_congruence_subgroup(&self, n: usize) -> bool {
        self.truncate(n).is_identity()
    }

    /// Factor self = high * low where `high` is in the level-n congruence
    /// subgroup and `low` has all coordinates of degree <= n. The low part
    /// stabilizes the vertex (2n, n).
    pub fn split_at(&self, n: usize) -> (Unipotent, Unipotent) {
        let (x_hi, x_lo) = self.x.split(n);
        let (y_hi, y_lo) = self.y.split(n);
        let q = &self.z - &(&x_hi * &y_lo);
        let (q_hi, q_lo) = q.split(n);
        let high = Unipotent::new(x_hi, y_hi, q_hi);
        let low = Unipotent::new(x_lo, y_lo, q_lo);
        debug_assert_eq!(&high * &low, *self);
        (high, low)
    }
}

impl Mul for &Unipotent {
    type Output = Unipotent;
    fn mul(self, rhs: &Unipotent) -> Unipotent {
        Unipotent {
            x: &self.x + &rhs.x,
            y: &self.y + &rhs.y,
            z: &(&self.z + &rhs.z) + &(&self.x * &rhs.y),
        }
    }
}

impl Mul for Unipotent {
    type Output = Unipotent;
    fn mul(self, rhs: Unipotent) -> Unipotent {
        &self * &rhs
    }
}

impl fmt::Display for Unipotent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(x: {}, y: {}, z: {})", self.x, self.y, self.z)
    }
}

/// Canonical coset representative in the level-n quotient of the unipotent
/// group: all three coordinates truncated modulo (t^{n+1}).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct UnipotentModN {
    n: usize,
    x: Poly,
    y: Poly,
    z: Poly,
}

impl UnipotentModN {
    pub fn identity(n: usize) -> UnipotentModN {
        Unipotent::identity().truncate(n)
    }

    pub fn level(&self) -> usize {
        self.n
    }

    pub fn x(&self) -> &Poly {
        &self.x
    }

    pub fn y(&self) -> &Poly {
        &self.y
    }

    pub fn z(&self) -> &Poly {
        &self.z
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn mul(&self, rhs: &UnipotentModN) -> UnipotentModN {
        assert_eq!(self.n, rhs.n, "mixed quotient levels");
        let n = self.n;
        UnipotentModN {
            n,
            x: (&self.x + &rhs.x).truncate(n),
            y: (&self.y + &rhs.y).truncate(n),
            z: (&(&self.z + &rhs.z) + &(&self.x * &rhs.y)).truncate(n),
        }
    }

    pub fn inverse(&self) -> UnipotentModN {
        let n = self.n;
        UnipotentModN {
            n,
            x: -&self.x,
            y: -&self.y,
            z: (&(&self.x * &self.y) - &self.z).truncate(n),
        }
    }
}

impl Mul for &UnipotentModN {
    type Output = UnipotentModN;
    fn mul(self, rhs: &UnipotentModN) -> UnipotentModN {
        UnipotentModN::mul(self, rhs)
    }
}

/// The four sign-diagonal matrices of determinant 1.
pub fn unit_determinant_diagonals() -> Vec<Mat3> {
    [[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]]
        .into_iter()
        .map(Mat3::diag_signs)
        .collect()
}
