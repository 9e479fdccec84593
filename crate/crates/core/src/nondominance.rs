//! Non-dominated filtering of finite point sets under Pareto and ordinal cones.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};
use crate::linalg;
use crate::lp;
use crate::ordinal::{cone_member_strict, pareto_dominates, weakly_pareto_dominates, ConeMatrix, Sense};
use crate::rational::{to_rationals, Rational, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpaceTag {
    Counting,
    Tail,
    Head,
    Mixed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Point<T> {
    pub id: usize,
    pub coords: Vec<T>,
}

/// A finite list of equal-length vectors with unique ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet<T> {
    points: Vec<Point<T>>,
    space: SpaceTag,
}

impl<T: Scalar> PointSet<T> {
    pub fn new(points: Vec<Point<T>>, space: SpaceTag) -> Result<Self> {
        if let Some(first) = points.first() {
            let dim = first.coords.len();
            for (i, p) in points.iter().enumerate() {
                check_dim(dim, p.coords.len())?;
                if points[..i].iter().any(|q| q.id == p.id) {
                    return Err(Error::InvalidInstance(format!("duplicate point id {}", p.id)));
                }
            }
        }
        Ok(Self { points, space })
    }

    /// Ids are assigned in input order starting at 1.
    pub fn from_vectors(vectors: Vec<Vec<T>>, space: SpaceTag) -> Result<Self> {
        let points = vectors
            .into_iter()
            .enumerate()
            .map(|(i, coords)| Point { id: i + 1, coords })
            .collect();
        Self::new(points, space)
    }

    pub fn points(&self) -> &[Point<T>] {
        &self.points
    }

    pub fn space(&self) -> SpaceTag {
        self.space
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> Option<usize> {
        self.points.first().map(|p| p.coords.len())
    }

    pub fn vectors(&self) -> Vec<Vec<T>> {
        self.points.iter().map(|p| p.coords.clone()).collect()
    }

    fn with_points(&self, points: Vec<Point<T>>) -> Self {
        Self {
            points,
            space: self.space,
        }
    }
}

fn sort_lex<T: Ord>(points: &mut [Point<T>]) {
    points.sort_by(|a, b| a.coords.cmp(&b.coords).then(a.id.cmp(&b.id)));
}

/// Points with no strict Pareto dominator in `y`, sorted lexicographically.
/// Value duplicates of a retained point are all retained.
pub fn pareto_filter<T: Scalar>(y: &PointSet<T>, sense: Sense) -> Result<PointSet<T>> {
    if y.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut sorted = y.points.clone();
    sort_lex(&mut sorted);
    if sense == Sense::Max {
        sorted.reverse();
    }
    // a dominator always precedes the points it dominates in sweep order
    let mut kept: Vec<Point<T>> = Vec::new();
    for p in sorted {
        let dominated = kept.iter().any(|q| match sense {
            Sense::Min => pareto_dominates(&q.coords, &p.coords).unwrap_or(false),
            Sense::Max => pareto_dominates(&p.coords, &q.coords).unwrap_or(false),
        });
        if !dominated {
            kept.push(p);
        }
    }
    sort_lex(&mut kept);
    Ok(y.with_points(kept))
}

/// `N(Y, C)` evaluated directly from cone membership of pairwise differences.
/// Minimization cones drop points `y` with `y - y' ∈ C \ {0}`; maximization
/// cones (head cones) drop points with `y' - y ∈ C \ {0}`.
pub fn cone_filter<T: Scalar>(y: &PointSet<T>, cone: &ConeMatrix) -> Result<PointSet<T>> {
    if y.is_empty() {
        return Err(Error::EmptySet);
    }
    if let Some(dim) = y.dim() {
        check_dim(cone.dim(), dim)?;
    }
    let rational: Vec<Vec<Rational>> = y.points.iter().map(|p| to_rationals(&p.coords)).collect();
    let mut kept = Vec::new();
    for (i, p) in y.points.iter().enumerate() {
        let mut dominated = false;
        for (j, other) in rational.iter().enumerate() {
            if i == j {
                continue;
            }
            let diff: Vec<Rational> = match cone.sense() {
                Sense::Min => rational[i].iter().zip(other).map(|(a, b)| a - b).collect(),
                Sense::Max => other.iter().zip(&rational[i]).map(|(a, b)| a - b).collect(),
            };
            if cone_member_strict(&diff, cone)? {
                dominated = true;
                break;
            }
        }
        if !dominated {
            kept.push(p.clone());
        }
    }
    sort_lex(&mut kept);
    Ok(y.with_points(kept))
}

/// Checks `H * N(Y, C) == N(H * Y, Pareto)` as multisets, where `H` is the
/// cone's halfspace matrix and both sides use the cone's orientation.
pub fn mapping_check<T: Scalar>(y: &PointSet<T>, cone: &ConeMatrix) -> Result<bool> {
    let h = cone.halfspace_matrix();
    let mut left: Vec<Vec<Rational>> = cone_filter(y, cone)?
        .points
        .iter()
        .map(|p| linalg::mat_vec(&h, &to_rationals(&p.coords)))
        .collect::<Result<_>>()?;
    let transformed = y
        .points
        .iter()
        .map(|p| {
            Ok(Point {
                id: p.id,
                coords: linalg::mat_vec(&h, &to_rationals(&p.coords))?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let transformed = PointSet::new(transformed, y.space)?;
    let mut right: Vec<Vec<Rational>> = pareto_filter(&transformed, cone.sense())?.vectors();
    left.sort();
    right.sort();
    Ok(left == right)
}

/// A positive weight vector (summing to one) under which `y` minimizes the
/// weighted sum over `set`, or `None` if `y` is unsupported.
///
/// Errors if `y` is Pareto-dominated in `set`.
pub fn supporting_weights<T: Scalar>(y: &[T], set: &PointSet<T>) -> Result<Option<Vec<Rational>>> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let k = y.len();
    if let Some(dim) = set.dim() {
        check_dim(dim, k)?;
    }
    for p in set.points() {
        if pareto_dominates(&p.coords, y)? {
            return Err(Error::NotNonDominated(format!("{y:?}")));
        }
    }
    if k == 0 {
        return Ok(Some(Vec::new()));
    }
    let target = to_rationals(y);
    // lambda = 1 + x with x >= 0; (y' - y) . lambda >= 0 for all y'
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for p in set.points() {
        if weakly_pareto_dominates(&p.coords, y)? {
            // equal value: constraint is 0 >= 0
            continue;
        }
        let diff: Vec<Rational> = to_rationals(&p.coords).iter().zip(&target).map(|(a, b)| a - b).collect();
        let total = diff.iter().fold(Rational::zero(), |acc, x| acc + x);
        rows.push(diff);
        rhs.push(-total);
    }
    let Some(x) = lp::find_feasible(&rows, &rhs, k)? else {
        return Ok(None);
    };
    let lambda: Vec<Rational> = x.into_iter().map(|xi| xi + Rational::one()).collect();
    let sum = lambda.iter().fold(Rational::zero(), |acc, x| acc + x);
    Ok(Some(lambda.into_iter().map(|l| l / &sum).collect()))
}

pub fn is_supported<T: Scalar>(y: &[T], set: &PointSet<T>) -> Result<bool> {
    Ok(supporting_weights(y, set)?.is_some())
}
