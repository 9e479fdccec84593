//! Category spaces, counting vectors and the dominance relations between them.
//!
//! Category indices are 1-based and index 1 is the most preferred category.
//! A [`CountingVector`] stores how many elements of a solution fall into each
//! category. Its incremental tail counting vector ([`TailCountVector`]) counts,
//! per category, the elements in that category or worse; tail-dominance is
//! componentwise comparison of those suffix sums and is equivalent to ordinal
//! dominance over all numerical representations.

mod certificate;
mod cone;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};

pub use certificate::{dominance_certificate, representation_expensive_from, DominanceCertificate};
pub use cone::{block_diagonal_tail, cone_member, cone_member_strict, ConeKind, ConeMatrix, Representation, Sense};

/// A 1-based category index; `Category(1)` is the best category.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Category(pub usize);

impl Category {
    pub fn index(self) -> usize {
        self.0
    }
}

/// The ordered category set of one ordinal objective.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategorySpace {
    labels: Vec<String>,
}

impl CategorySpace {
    /// Categories labelled `eta1`..`etaK`.
    pub fn new(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::EmptyCategorySpace);
        }
        Ok(Self {
            labels: (1..=k).map(|i| format!("eta{i}")).collect(),
        })
    }

    pub fn with_labels(labels: Vec<String>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::EmptyCategorySpace);
        }
        for (i, label) in labels.iter().enumerate() {
            if labels[..i].contains(label) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(Self { labels })
    }

    pub fn k(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, category: Category) -> Option<&str> {
        category.0.checked_sub(1).and_then(|i| self.labels.get(i)).map(String::as_str)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn check(&self, category: Category) -> Result<()> {
        if (1..=self.k()).contains(&category.0) {
            Ok(())
        } else {
            Err(Error::InvalidCategory {
                index: category.0,
                k: self.k(),
            })
        }
    }
}

macro_rules! count_vector_common {
    ($name:ident, $field:ident) => {
        impl $name {
            pub fn k(&self) -> usize {
                self.$field.len()
            }

            pub fn as_slice(&self) -> &[u64] {
                &self.$field
            }

            pub fn into_vec(self) -> Vec<u64> {
                self.$field
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write_tuple(f, &self.$field)
            }
        }
    };
}

pub(crate) fn write_tuple<T: fmt::Display>(f: &mut fmt::Formatter<'_>, values: &[T]) -> fmt::Result {
    f.write_str("(")?;
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    f.write_str(")")
}

/// Per-category multiplicities `c_i(x)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CountingVector {
    counts: Vec<u64>,
}

count_vector_common!(CountingVector, counts);

impl CountingVector {
    pub fn new(counts: Vec<u64>) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::EmptyCategorySpace);
        }
        Ok(Self { counts })
    }

    pub fn zero(k: usize) -> Self {
        Self { counts: vec![0; k.max(1)] }
    }

    /// Number of elements counted.
    pub fn cardinality(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Incremental tail counting vector: entry `j` counts elements in category `j` or worse.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TailCountVector {
    tails: Vec<u64>,
}

count_vector_common!(TailCountVector, tails);

impl TailCountVector {
    pub fn new(tails: Vec<u64>) -> Result<Self> {
        if tails.is_empty() {
            return Err(Error::EmptyCategorySpace);
        }
        if tails.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidTailVector(tails));
        }
        Ok(Self { tails })
    }

    pub fn cardinality(&self) -> u64 {
        self.tails[0]
    }
}

/// Head counting vector: entry `j` counts elements in category `j` or better.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HeadCountVector {
    heads: Vec<u64>,
}

count_vector_common!(HeadCountVector, heads);

impl HeadCountVector {
    pub fn new(heads: Vec<u64>) -> Result<Self> {
        if heads.is_empty() {
            return Err(Error::EmptyCategorySpace);
        }
        if heads.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidHeadVector(heads));
        }
        Ok(Self { heads })
    }
}

/// The sorted category sequence `o(x)` of a solution, best category first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OrdinalVector {
    cats: Vec<Category>,
}

impl OrdinalVector {
    pub fn from_categories(mut cats: Vec<Category>, space: &CategorySpace) -> Result<Self> {
        for &c in &cats {
            space.check(c)?;
        }
        cats.sort_unstable();
        Ok(Self { cats })
    }

    pub fn from_counts(counts: &CountingVector) -> Self {
        let cats = counts
            .as_slice()
            .iter()
            .enumerate()
            .flat_map(|(i, &n)| std::iter::repeat_n(Category(i + 1), n as usize))
            .collect();
        Self { cats }
    }

    pub fn categories(&self) -> &[Category] {
        &self.cats
    }

    pub fn len(&self) -> usize {
        self.cats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cats.is_empty()
    }

    pub fn to_counts(&self, space: &CategorySpace) -> Result<CountingVector> {
        counting_vector(&self.cats, space)
    }

    pub fn display<'a>(&'a self, space: &'a CategorySpace) -> impl fmt::Display + 'a {
        OrdinalDisplay { vector: self, space }
    }
}

struct OrdinalDisplay<'a> {
    vector: &'a OrdinalVector,
    space: &'a CategorySpace,
}

impl fmt::Display for OrdinalDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<&str> = self
            .vector
            .cats
            .iter()
            .map(|&c| self.space.label(c).unwrap_or("?"))
            .collect();
        write_tuple(f, &labels)
    }
}

/// A strictly increasing assignment of nonnegative values to the categories.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NumericalRepresentation {
    values: Vec<u64>,
}

impl NumericalRepresentation {
    pub fn new(values: Vec<u64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyCategorySpace);
        }
        if values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidRepresentation(values));
        }
        Ok(Self { values })
    }

    pub fn k(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn value_of(&self, category: Category) -> u64 {
        self.values[category.0 - 1]
    }
}

pub fn counting_vector(cats: &[Category], space: &CategorySpace) -> Result<CountingVector> {
    let mut counts = vec![0u64; space.k()];
    for &c in cats {
        space.check(c)?;
        counts[c.0 - 1] += 1;
    }
    Ok(CountingVector { counts })
}

/// `A * c`: suffix sums of the counting vector.
pub fn tail_transform(c: &CountingVector) -> TailCountVector {
    TailCountVector { tails: suffix_sums(c.as_slice()) }
}

/// `B * t = A^{-1} * t`: adjacent differences of the tail vector.
pub fn inverse_transform(t: &TailCountVector) -> CountingVector {
    let tails = t.as_slice();
    let counts = (0..tails.len())
        .map(|i| tails[i] - tails.get(i + 1).copied().unwrap_or(0))
        .collect();
    CountingVector { counts }
}

/// Validates raw tails before inverting them.
pub fn inverse_transform_raw(tails: &[u64]) -> Result<CountingVector> {
    TailCountVector::new(tails.to_vec()).map(|t| inverse_transform(&t))
}

/// `A^T * c`: prefix sums of the counting vector.
pub fn head_transform(c: &CountingVector) -> HeadCountVector {
    let mut acc = 0;
    let heads = c
        .as_slice()
        .iter()
        .map(|&x| {
            acc += x;
            acc
        })
        .collect();
    HeadCountVector { heads }
}

pub(crate) fn suffix_sums(values: &[u64]) -> Vec<u64> {
    let mut out = vec![0; values.len()];
    let mut acc = 0;
    for i in (0..values.len()).rev() {
        acc += values[i];
        out[i] = acc;
    }
    out
}

pub fn weakly_tail_dominates(u: &CountingVector, v: &CountingVector) -> Result<bool> {
    check_dim(u.k(), v.k())?;
    let (tu, tv) = (tail_transform(u), tail_transform(v));
    Ok(tu.as_slice().iter().zip(tv.as_slice()).all(|(a, b)| a <= b))
}

pub fn tail_dominates(u: &CountingVector, v: &CountingVector) -> Result<bool> {
    Ok(weakly_tail_dominates(u, v)? && u != v)
}

pub fn weakly_head_dominates(u: &CountingVector, v: &CountingVector) -> Result<bool> {
    check_dim(u.k(), v.k())?;
    let (hu, hv) = (head_transform(u), head_transform(v));
    Ok(hu.as_slice().iter().zip(hv.as_slice()).all(|(a, b)| a >= b))
}

pub fn head_dominates(u: &CountingVector, v: &CountingVector) -> Result<bool> {
    Ok(weakly_head_dominates(u, v)? && u != v)
}

/// `u ≦ v`: componentwise less or equal.
pub fn weakly_pareto_dominates<T: PartialOrd>(u: &[T], v: &[T]) -> Result<bool> {
    check_dim(u.len(), v.len())?;
    Ok(u.iter().zip(v).all(|(a, b)| a <= b))
}

/// `u ≤ v`: componentwise less or equal and `u != v`.
pub fn pareto_dominates<T: PartialOrd>(u: &[T], v: &[T]) -> Result<bool> {
    check_dim(u.len(), v.len())?;
    let mut strict_somewhere = false;
    for (a, b) in u.iter().zip(v) {
        if a > b {
            return Ok(false);
        }
        if a < b {
            strict_somewhere = true;
        }
    }
    Ok(strict_somewhere)
}

/// `u < v`: strictly less in every component.
pub fn strictly_pareto_dominates<T: PartialOrd>(u: &[T], v: &[T]) -> Result<bool> {
    check_dim(u.len(), v.len())?;
    Ok(u.iter().zip(v).all(|(a, b)| a < b))
}

/// `nu(x) = sum_i nu(eta_i) * c_i(x)`, checked against the two other evaluation orders in debug builds.
pub fn numeric_value(nu: &NumericalRepresentation, c: &CountingVector) -> Result<u64> {
    let value = value_by_categories(nu, c)?;
    debug_assert_eq!(Some(value), value_by_elements(nu, &OrdinalVector::from_counts(c)).ok());
    debug_assert_eq!(Some(value), value_by_tails(nu, &tail_transform(c)).ok());
    Ok(value)
}

pub fn value_by_categories(nu: &NumericalRepresentation, c: &CountingVector) -> Result<u64> {
    check_dim(nu.k(), c.k())?;
    nu.values
        .iter()
        .zip(c.as_slice())
        .try_fold(0u64, |acc, (&w, &n)| w.checked_mul(n).and_then(|x| acc.checked_add(x)))
        .ok_or(Error::Overflow("evaluating a numerical representation"))
}

/// Sum of `nu(o_i(x))` over the sorted element sequence.
pub fn value_by_elements(nu: &NumericalRepresentation, o: &OrdinalVector) -> Result<u64> {
    o.cats.iter().try_fold(0u64, |acc, &c| {
        let w = *nu.values.get(c.0.wrapping_sub(1)).ok_or(Error::InvalidCategory { index: c.0, k: nu.k() })?;
        acc.checked_add(w).ok_or(Error::Overflow("evaluating a numerical representation"))
    })
}

/// `nu(eta_1) * t_1 + sum_{i>=2} (nu(eta_i) - nu(eta_{i-1})) * t_i`.
pub fn value_by_tails(nu: &NumericalRepresentation, t: &TailCountVector) -> Result<u64> {
    check_dim(nu.k(), t.k())?;
    let mut prev = 0u64;
    let mut acc = 0u64;
    for (&w, &ti) in nu.values.iter().zip(t.as_slice()) {
        let step = w - prev;
        prev = w;
        acc = step
            .checked_mul(ti)
            .and_then(|x| acc.checked_add(x))
            .ok_or(Error::Overflow("evaluating a numerical representation"))?;
    }
    Ok(acc)
}
