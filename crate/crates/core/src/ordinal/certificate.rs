use serde::{Deserialize, Serialize};

use super::{numeric_value, tail_transform, CountingVector, NumericalRepresentation};
use crate::error::{check_dim, Error, Result};

/// Witness for the relation between two counting vectors `u` and `v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum DominanceCertificate {
    /// `u == v`: every representation assigns them the same value.
    Equal,
    /// `u` does not weakly tail-dominate `v`; the tail of `u` exceeds that of
    /// `v` at `violated_index` (1-based) and `representation` rates `u` worse.
    NotWeaklyDominating {
        violated_index: usize,
        representation: NumericalRepresentation,
        value_u: u64,
        value_v: u64,
    },
    /// `u` tail-dominates `v`; `representation` rates `u` strictly better.
    /// `index` is the largest category in which the two differ.
    StrictlyDominating {
        index: usize,
        representation: NumericalRepresentation,
        value_u: u64,
        value_v: u64,
    },
}

/// Representation that prices categories `from..=K` above anything the cheaper
/// solution (with `cardinality` elements) can accumulate in better categories:
/// `nu(eta_i) = i` for `i < from`, `nu(eta_i) = i + 2 * cardinality * K` otherwise.
pub fn representation_expensive_from(from: usize, cardinality: u64, k: usize) -> Result<NumericalRepresentation> {
    if !(1..=k).contains(&from) {
        return Err(Error::InvalidCategory { index: from, k });
    }
    let overflow = Error::Overflow("building a dominance certificate");
    let k64 = k as u64;
    let offset = cardinality
        .checked_mul(2)
        .and_then(|x| x.checked_mul(k64))
        .ok_or(overflow.clone())?;
    let values = (1..=k64)
        .map(|i| if i < from as u64 { Ok(i) } else { i.checked_add(offset).ok_or(overflow.clone()) })
        .collect::<Result<Vec<_>>>()?;
    NumericalRepresentation::new(values)
}

/// Classifies `u` against `v` under tail-dominance and returns a numerical
/// representation that proves the verdict. The violated index is the smallest one.
pub fn dominance_certificate(u: &CountingVector, v: &CountingVector) -> Result<DominanceCertificate> {
    check_dim(u.k(), v.k())?;
    if u == v {
        return Ok(DominanceCertificate::Equal);
    }
    let k = u.k();
    let (tu, tv) = (tail_transform(u), tail_transform(v));
    if let Some(j) = (0..k).find(|&j| tu.as_slice()[j] > tv.as_slice()[j]) {
        let representation = representation_expensive_from(j + 1, v.cardinality(), k)?;
        let value_u = numeric_value(&representation, u)?;
        let value_v = numeric_value(&representation, v)?;
        debug_assert!(value_u > value_v);
        return Ok(DominanceCertificate::NotWeaklyDominating {
            violated_index: j + 1,
            representation,
            value_u,
            value_v,
        });
    }
    // u weakly tail-dominates v and differs from it; the largest differing
    // category has a strictly smaller tail in u.
    let j = (0..k)
        .rev()
        .find(|&j| u.as_slice()[j] != v.as_slice()[j])
        .expect("vectors differ");
    let representation = representation_expensive_from(j + 1, u.cardinality(), k)?;
    let value_u = numeric_value(&representation, u)?;
    let value_v = numeric_value(&representation, v)?;
    debug_assert!(value_u < value_v);
    Ok(DominanceCertificate::StrictlyDominating {
        index: j + 1,
        representation,
        value_u,
        value_v,
    })
}
