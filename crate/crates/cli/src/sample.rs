//! Seeded random samplers for the verification suites. Integer-coefficient
//! samples are used wherever integrality is part of the contract
//! (stabilizer membership); rational coefficients elsewhere.

use rand::Rng;

use sector_core::matrix::{Mat3, Unipotent};
use sector_core::poly::{rat, ratio, Degree, Poly, Rat};
use sector_core::stabilizer::StabilizerProfile;

pub fn rand_rat<R: Rng>(rng: &mut R) -> Rat {
    ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

pub fn rand_poly<R: Rng>(rng: &mut R, max_deg: usize) -> Poly {
    let len = rng.gen_range(0..=max_deg + 1);
    Poly::from_coeffs((0..len).map(|_| rand_rat(rng)).collect())
}

pub fn rand_unipotent<R: Rng>(rng: &mut R, max_deg: usize) -> Unipotent {
    Unipotent::new(
        rand_poly(rng, max_deg),
        rand_poly(rng, max_deg),
        rand_poly(rng, max_deg),
    )
}

fn nonzero_int<R: Rng>(rng: &mut R) -> i64 {
    let c = rng.gen_range(-3i64..=3);
    if c == 0 {
        1
    } else {
        c
    }
}

fn int_monomial<R: Rng>(rng: &mut R, deg: usize) -> Poly {
    Poly::monomial(rat(nonzero_int(rng)), deg)
}

fn off_diagonal<R: Rng>(rng: &mut R) -> (usize, usize) {
    loop {
        let r = rng.gen_range(0..3);
        let c = rng.gen_range(0..3);
        if r != c {
            return (r, c);
        }
    }
}

/// Product of up to six elementary matrices within the profile bounds,
/// optionally seasoned with a sign diagonal; determinant 1 and membership
/// hold by construction.
pub fn rand_member<R: Rng>(rng: &mut R, p: &StabilizerProfile) -> Mat3 {
    let mut m = Mat3::identity();
    for _ in 0..rng.gen_range(0..=6u32) {
        let (r, c) = off_diagonal(rng);
        if let Degree::Fin(b) = p.bound(r, c) {
            if b >= 0 {
                let deg = rng.gen_range(0..=b) as usize;
                m = &m * &Mat3::elementary(r, c, int_monomial(rng, deg));
            }
        }
    }
    if rng.gen_bool(0.25) {
        let diagonals = sector_core::matrix::unit_determinant_diagonals();
        let pick = rng.gen_range(0..diagonals.len());
        m = &m * &diagonals[pick];
    }
    m
}

/// A member product with exactly one factor planted just outside its
/// degree bound, so the result falls outside the stabilizer.
pub fn rand_violator<R: Rng>(rng: &mut R, p: &StabilizerProfile) -> Mat3 {
    let left = rand_member(rng, p);
    let right = rand_member(rng, p);
    let (r, c) = off_diagonal(rng);
    let bad_deg = match p.bound(r, c) {
        Degree::Fin(b) => (b + 1).max(0) as usize,
        Degree::NegInf => 0,
    };
    let bad = Mat3::elementary(r, c, int_monomial(rng, bad_deg));
    &(&left * &bad) * &right
}
