//! The local pairing of cocycles against chamber cycles, and the
//! triangular matrix certifying their independence.
//!
//! Entry (m, n) pairs the level-m cocycle with the n-th cycle. On the
//! diagonal the value is the cocycle evaluated on the projected cycle,
//! always -2. Off the diagonal the cycle's support misses the descending
//! star of the level-m peak vertex: every vertex of every translate of
//! the base chamber sits at a height in {3n^2 - 3n + 1, 3n^2} (heights
//! are invariant under the acting unipotents), while the peak (2m, m)
//! sits at 3m^2, strictly above the support for m > n and strictly below
//! it for m < n. Both separations are certified by exact integer
//! comparison, along with base-chamber coordinate disjointness, and the
//! entry is 0.

use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::apartment::peak_vertex;
use crate::cocycle::{cycle_base_chamber, projected_cycle};
use crate::morse::height_sq;
use crate::poly::{rat, Rat};

/// Why an off-diagonal entry vanishes, with the exact integer facts that
/// were checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZeroCertificate {
    /// m > n: the peak vertex of level m is strictly higher than every
    /// vertex in the cycle's support.
    PeakAboveSupport { peak_sq: i64, support_max_sq: i64 },
    /// m < n: the peak vertex of level m is strictly lower than every
    /// vertex in the cycle's support (beyond what triangularity needs).
    PeakBelowSupport { peak_sq: i64, support_min_sq: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairingCertificate {
    /// Diagonal entry: value of the cocycle on the projected cycle.
    Diagonal { value: Rat },
    /// Off-diagonal zero, with the height separation and the check that
    /// the level-m peak is not a vertex of the base chamber.
    Zero { cert: ZeroCertificate, base_chamber_disjoint: bool },
}

impl fmt::Display for PairingCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairingCertificate::Diagonal { value } => write!(f, "diagonal value {}", value),
            PairingCertificate::Zero { cert, .. } => match cert {
                ZeroCertificate::PeakAboveSupport { peak_sq, support_max_sq } => write!(
                    f,
                    "support height {} < peak height {}",
                    support_max_sq, peak_sq
                ),
                ZeroCertificate::PeakBelowSupport { peak_sq, support_min_sq } => write!(
                    f,
                    "peak height {} < support height {} (base chamber disjoint)",
                    peak_sq, support_min_sq
                ),
            },
        }
    }
}

/// Height range over the support of the n-th cycle: the base chamber's
/// vertex heights, shared by every translate.
fn support_height_range(n: usize) -> (i64, i64) {
    let tri = cycle_base_chamber(n);
    let qs: Vec<i64> = tri.iter().map(|v| height_sq(*v)).collect();
    (*qs.iter().min().unwrap(), *qs.iter().max().unwrap())
}

/// The pairing of the level-m cocycle against the n-th cycle, with its
/// certificate.
pub fn local_pairing_certified(m: usize, n: usize) -> (Rat, PairingCertificate) {
    if m == n {
        let value = crate::cocycle::cocycle_value(&projected_cycle(n));
        return (value.clone(), PairingCertificate::Diagonal { value });
    }

    let peak = peak_vertex(m).vertex();
    let peak_sq = height_sq(peak);
    let (support_min_sq, support_max_sq) = support_height_range(n);
    let base_chamber_disjoint = !cycle_base_chamber(n).contains(&peak);
    assert!(base_chamber_disjoint, "peak vertex inside the base chamber");

    let cert = if m > n {
        assert!(
            peak_sq > support_max_sq,
            "height separation failed for m = {}, n = {}",
            m,
            n
        );
        ZeroCertificate::PeakAboveSupport { peak_sq, support_max_sq }
    } else {
        assert!(
            peak_sq < support_min_sq,
            "height separation failed for m = {}, n = {}",
            m,
            n
        );
        ZeroCertificate::PeakBelowSupport { peak_sq, support_min_sq }
    };
    (Rat::zero(), PairingCertificate::Zero { cert, base_chamber_disjoint })
}

pub fn local_pairing(m: usize, n: usize) -> Rat {
    local_pairing_certified(m, n).0
}

/// The (n_max + 1) x (n_max + 1) pairing matrix; entry (m, n) indexed by
/// cocycle level m (rows) and cycle index n (columns).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingMatrix {
    pub n_max: usize,
    entries: Vec<Vec<Rat>>,
    certificates: Vec<Vec<PairingCertificate>>,
}

pub fn pairing_matrix(n_max: usize) -> PairingMatrix {
    let size = n_max + 1;
    let mut entries = Vec::with_capacity(size);
    let mut certificates = Vec::with_capacity(size);
    for m in 0..size {
        let mut row = Vec::with_capacity(size);
        let mut cert_row = Vec::with_capacity(size);
        for n in 0..size {
            let (value, cert) = local_pairing_certified(m, n);
            row.push(value);
            cert_row.push(cert);
        }
        entries.push(row);
        certificates.push(cert_row);
    }
    PairingMatrix { n_max, entries, certificates }
}

impl PairingMatrix {
    pub fn size(&self) -> usize {
        self.n_max + 1
    }

    pub fn value(&self, m: usize, n: usize) -> &Rat {
        &self.entries[m][n]
    }

    pub fn certificate(&self, m: usize, n: usize) -> &PairingCertificate {
        &self.certificates[m][n]
    }

    /// Diagonal entries all -2 and strictly-lower entries (m > n) all 0.
    pub fn is_triangular(&self) -> bool {
        let minus_two = rat(-2);
        for m in 0..self.size() {
            for n in 0..self.size() {
                let e = self.value(m, n);
                if m == n && *e != minus_two {
                    return false;
                }
                if m > n && !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Rank over Q by exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        let size = self.size();
        let mut a = self.entries.clone();
        let mut rank = 0;
        for col in 0..size {
            let pivot = (rank..size).find(|r| !a[*r][col].is_zero());
            let Some(pivot) = pivot else { continue };
            a.swap(rank, pivot);
            let inv_lead = a[rank][col].clone();
            for r in rank + 1..size {
                if a[r][col].is_zero() {
                    continue;
                }
                let factor = &a[r][col] / &inv_lead;
                for c in col..size {
                    let sub = &factor * &a[rank][c];
                    a[r][c] -= sub;
                }
            }
            rank += 1;
        }
        rank
    }
}
