//! Cell stabilizers in SL3(Z[t]) as degree-bound profiles.
//!
//! The stabilizer of the vertex (i, j) is conjugate, inside
//! SL3(Q((t^-1))), to SL3(Q[[t^-1]]) by the diagonal matrix
//! g = diag(t^i, t^j, 1). Writing d = (i, j, 0), an integral
//! unit-determinant matrix stabilizes the vertex exactly when
//! deg(entry(k, l)) <= d_k - d_l for all k, l; negative bounds force the
//! entry to vanish. Profiles of edges and chamber pieces are entrywise
//! minima over their vertices (a midpoint contributing both endpoints).
//!
//! [`oracle_stabilizes`] recomputes membership independently, by shifting
//! entry degrees as conjugation by g^-1 would and asking whether the
//! result lands in Q[[t^-1]] (every shifted degree <= 0).

use alloc::vec::Vec;

use crate::apartment::{Cell, Node, SectorVertex};
use crate::poly::{Degree, Poly};
use crate::matrix::{unit_determinant_diagonals, Mat3};

/// Degree bounds B with the meaning: an integral matrix of determinant 1
/// stabilizes the cell iff deg(entry(k, l)) <= B[k][l] for all k, l.
/// Diagonal bounds are always 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StabilizerProfile {
    pub bounds: [[Degree; 3]; 3],
}

impl StabilizerProfile {
    fn from_exponents(d: [i64; 3]) -> StabilizerProfile {
        let bounds = core::array::from_fn(|k| core::array::from_fn(|l| Degree::Fin(d[k] - d[l])));
        StabilizerProfile { bounds }
    }

    /// Entrywise minimum.
    pub fn meet(&self, other: &StabilizerProfile) -> StabilizerProfile {
        let bounds = core::array::from_fn(|k| {
            core::array::from_fn(|l| self.bounds[k][l].min(other.bounds[k][l]))
        });
        StabilizerProfile { bounds }
    }

    pub fn bound(&self, k: usize, l: usize) -> Degree {
        self.bounds[k][l]
    }
}

/// Profile of a sector vertex: B[k][l] = d_k - d_l with d = (i, j, 0).
pub fn vertex_profile(v: SectorVertex) -> StabilizerProfile {
    StabilizerProfile::from_exponents([v.i(), v.j(), 0])
}

fn node_profile(node: Node) -> StabilizerProfile {
    node.lattice_support()
        .into_iter()
        .map(|v| {
            let sv = SectorVertex::from_vertex(v).expect("profile of a non-sector vertex");
            vertex_profile(sv)
        })
        .reduce(|a, b| a.meet(&b))
        .unwrap()
}

/// Profile of any cell of the subdivided sector: entrywise minimum of its
/// vertices' profiles, a flat-edge midpoint standing for both endpoints.
pub fn cell_profile(cell: &Cell) -> StabilizerProfile {
    cell.vertices()
        .iter()
        .map(|v| node_profile(*v))
        .reduce(|a, b| a.meet(&b))
        .unwrap()
}

/// Membership through the profile: integral, determinant 1, and every
/// entry degree within its bound.
pub fn membership(g: &Mat3, p: &StabilizerProfile) -> bool {
    if !g.is_integral() || g.det() != Poly::one() {
        return false;
    }
    (0..3).all(|k| {
        (0..3).all(|l| match p.bounds[k][l] {
            Degree::NegInf => g.entry(k, l).is_zero(),
            Degree::Fin(b) => g.entry(k, l).degree().at_most(b),
        })
    })
}

/// Independent route: conjugate by diag(t^i, t^j, 1)^-1, tracked as an
/// entrywise degree shift, and test that every entry lands in Q[[t^-1]]
/// (shifted degree <= 0). Assumes g integral with determinant 1.
pub fn oracle_stabilizes(g: &Mat3, v: SectorVertex) -> bool {
    let d = [v.i(), v.j(), 0];
    (0..3).all(|k| {
        (0..3).all(|l| {
            let shifted = g.entry(k, l).degree().shift(d[l] - d[k]);
            shifted.at_most(0)
        })
    })
}

/// Elementary matrices e_{kl}(t^m) for 0 <= m <= B[k][l] together with
/// the four sign-diagonal matrices of determinant 1. For vertex and edge
/// profiles this reproduces the standard generating pattern.
pub fn enumerate_generators(p: &StabilizerProfile) -> Vec<Mat3> {
    let mut out = Vec::new();
    for k in 0..3 {
        for l in 0..3 {
            if k == l {
                continue;
            }
            if let Degree::Fin(b) = p.bounds[k][l] {
                for m in 0..=b.max(-1) {
                    out.push(Mat3::elementary(k, l, Poly::t_pow(m as usize)));
                }
            }
        }
    }
    out.extend(unit_determinant_diagonals());
    out
}
