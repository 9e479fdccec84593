use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};
use crate::linalg::{self, IntMatrix, RationalMatrix};
use crate::rational::Rational;

/// Optimization direction attached to an ordering cone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sense {
    Min,
    Max,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConeKind {
    /// Identity: the Pareto cone.
    Pareto,
    /// Upper-triangular ones; rows are the halfspace normals of the ordinal cone.
    TailHalfspaces,
    /// Unit diagonal with -1 on the superdiagonal; columns are the extreme rays.
    TailGenerators,
    /// Transpose of [`ConeKind::TailHalfspaces`].
    HeadHalfspaces,
    /// Transpose of [`ConeKind::TailGenerators`].
    HeadGenerators,
    /// Identity block for real objectives followed by tail blocks.
    BlockTail,
}

/// How a matrix describes its cone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Representation {
    /// `{ d : M d >= 0 }`
    Halfspaces,
    /// `{ M y : y >= 0 }`
    Generators,
}

/// A square integer matrix describing a polyhedral ordering cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeMatrix {
    kind: ConeKind,
    entries: IntMatrix,
}

impl ConeMatrix {
    pub fn pareto(k: usize) -> Self {
        Self {
            kind: ConeKind::Pareto,
            entries: linalg::identity(k),
        }
    }

    pub fn tail_halfspaces(k: usize) -> Self {
        Self {
            kind: ConeKind::TailHalfspaces,
            entries: tail_a(k),
        }
    }

    pub fn tail_generators(k: usize) -> Self {
        Self {
            kind: ConeKind::TailGenerators,
            entries: tail_b(k),
        }
    }

    pub fn head_halfspaces(k: usize) -> Self {
        Self {
            kind: ConeKind::HeadHalfspaces,
            entries: linalg::transpose(&tail_a(k)),
        }
    }

    pub fn head_generators(k: usize) -> Self {
        Self {
            kind: ConeKind::HeadGenerators,
            entries: linalg::transpose(&tail_b(k)),
        }
    }

    pub fn new(kind: ConeKind, k: usize) -> Self {
        match kind {
            ConeKind::Pareto => Self::pareto(k),
            ConeKind::TailHalfspaces => Self::tail_halfspaces(k),
            ConeKind::TailGenerators => Self::tail_generators(k),
            ConeKind::HeadHalfspaces => Self::head_halfspaces(k),
            ConeKind::HeadGenerators => Self::head_generators(k),
            ConeKind::BlockTail => block_diagonal_tail(0, &[k]),
        }
    }

    pub fn kind(&self) -> ConeKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &IntMatrix {
        &self.entries
    }

    pub fn representation(&self) -> Representation {
        match self.kind {
            ConeKind::TailGenerators | ConeKind::HeadGenerators => Representation::Generators,
            _ => Representation::Halfspaces,
        }
    }

    /// Tail cones are minimization cones; head cones order by maximization.
    pub fn sense(&self) -> Sense {
        match self.kind {
            ConeKind::HeadHalfspaces | ConeKind::HeadGenerators => Sense::Max,
            _ => Sense::Min,
        }
    }

    /// The halfspace matrix `H` of the cone, `{ d : H d >= 0 }`. For generator
    /// matrices this is their exact inverse.
    pub fn halfspace_matrix(&self) -> RationalMatrix {
        let m = linalg::to_rational_matrix(&self.entries);
        match self.representation() {
            Representation::Halfspaces => m,
            Representation::Generators => linalg::inverse(&m)
                .expect("square by construction")
                .expect("cone generators are nonsingular"),
        }
    }
}

fn tail_a(k: usize) -> IntMatrix {
    (0..k).map(|i| (0..k).map(|j| i64::from(j >= i)).collect()).collect()
}

fn tail_b(k: usize) -> IntMatrix {
    (0..k)
        .map(|i| {
            (0..k)
                .map(|j| match j {
                    _ if j == i => 1,
                    _ if j == i + 1 => -1,
                    _ => 0,
                })
                .collect()
        })
        .collect()
}

/// `diag(I_p, A^{K_1}, ..., A^{K_r})` for mixed real and ordinal objectives.
pub fn block_diagonal_tail(real: usize, ks: &[usize]) -> ConeMatrix {
    let n = real + ks.iter().sum::<usize>();
    let mut entries = vec![vec![0i64; n]; n];
    for (i, row) in entries.iter_mut().enumerate().take(real) {
        row[i] = 1;
    }
    let mut offset = real;
    for &k in ks {
        for i in 0..k {
            for j in i..k {
                entries[offset + i][offset + j] = 1;
            }
        }
        offset += k;
    }
    ConeMatrix {
        kind: ConeKind::BlockTail,
        entries,
    }
}

/// Membership of `d` in the closed cone.
pub fn cone_member(d: &[Rational], cone: &ConeMatrix) -> Result<bool> {
    check_dim(cone.dim(), d.len())?;
    let m = linalg::to_rational_matrix(cone.entries());
    match cone.representation() {
        Representation::Halfspaces => Ok(linalg::mat_vec(&m, d)?.iter().all(|x| !x.is_negative())),
        Representation::Generators => {
            // d = G y must have a nonnegative solution y
            let y = linalg::solve(&m, d)?
                .ok_or_else(|| Error::InvalidInstance("singular generator matrix".into()))?;
            Ok(y.iter().all(|x| !x.is_negative()))
        }
    }
}

/// Membership in the cone without the origin.
pub fn cone_member_strict(d: &[Rational], cone: &ConeMatrix) -> Result<bool> {
    Ok(cone_member(d, cone)? && d.iter().any(|x| !x.is_zero()))
}
