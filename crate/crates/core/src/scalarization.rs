//! Weighted-sum scalarization and weight space decomposition.
//!
//! Weights live in the open unit simplex. A weighting `lambda` over tail
//! vectors corresponds to the weighting `mu_i = lambda_1 + ... + lambda_i`
//! over counting vectors (renormalized), and `mu` is strictly increasing.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};
use crate::linalg::dot;
use crate::nondominance::{supporting_weights, Point, PointSet};
use crate::ordinal::NumericalRepresentation;
use crate::rational::{from_int, serde_rational, to_rationals, Rational, Scalar};

fn sum(values: &[Rational]) -> Rational {
    values.iter().fold(Rational::zero(), |acc, x| acc + x)
}

/// Strictly positive weights summing to one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LambdaWeights(#[serde(with = "serde_rational::vec")] Vec<Rational>);

impl LambdaWeights {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidWeights("empty weight vector".into()));
        }
        if values.iter().any(|x| !x.is_positive()) {
            return Err(Error::InvalidWeights("lambda must be strictly positive".into()));
        }
        if sum(&values) != Rational::one() {
            return Err(Error::InvalidWeights("lambda must sum to 1".into()));
        }
        Ok(Self(values))
    }

    /// Scales positive weights to sum one.
    pub fn normalized(values: Vec<Rational>) -> Result<Self> {
        if values.iter().any(|x| !x.is_positive()) {
            return Err(Error::InvalidWeights("lambda must be strictly positive".into()));
        }
        let total = sum(&values);
        Self::new(values.into_iter().map(|x| x / &total).collect())
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }
}

/// Weights in the strict dual of the ordinal cone: `0 < mu_1 < ... < mu_K`, summing to one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MuWeights(#[serde(with = "serde_rational::vec")] Vec<Rational>);

impl MuWeights {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidWeights("empty weight vector".into()));
        }
        if !values[0].is_positive() {
            return Err(Error::InvalidWeights("mu_1 must be positive".into()));
        }
        if values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidWeights("mu must be strictly increasing".into()));
        }
        if sum(&values) != Rational::one() {
            return Err(Error::InvalidWeights("mu must sum to 1".into()));
        }
        Ok(Self(values))
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }
}

/// Prefix sums of `lambda` divided by `sum_j (K - j + 1) lambda_j`; also
/// defined for boundary weights with zero entries.
fn prefix_normalize(lambda: &[Rational]) -> Vec<Rational> {
    let mut acc = Rational::zero();
    let prefix: Vec<Rational> = lambda
        .iter()
        .map(|l| {
            acc += l;
            acc.clone()
        })
        .collect();
    let total = sum(&prefix);
    prefix.into_iter().map(|p| p / &total).collect()
}

pub fn lambda_to_mu(lambda: &LambdaWeights) -> MuWeights {
    MuWeights(prefix_normalize(&lambda.0))
}

pub fn mu_to_lambda(mu: &MuWeights) -> LambdaWeights {
    let mut prev = Rational::zero();
    let diffs: Vec<Rational> = mu
        .0
        .iter()
        .map(|m| {
            let d = m - &prev;
            prev = m.clone();
            d
        })
        .collect();
    let total = sum(&diffs);
    LambdaWeights(diffs.into_iter().map(|d| d / &total).collect())
}

/// `mu_i = nu(eta_i) / sum_j nu(eta_j)`; requires `nu(eta_1) > 0`.
pub fn mu_from_representation(nu: &NumericalRepresentation) -> Result<MuWeights> {
    let values: Vec<Rational> = nu.values().iter().map(|&v| from_int(v as i64)).collect();
    let total = sum(&values);
    if total.is_zero() {
        return Err(Error::InvalidWeights("representation sums to zero".into()));
    }
    MuWeights::new(values.into_iter().map(|v| v / &total).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedSumOptimum<T> {
    pub value: Rational,
    pub argmin: Vec<Point<T>>,
}

/// Exact minimum of `lambda . y` over `y` with every minimizer.
pub fn weighted_sum_solve<T: Scalar>(y: &PointSet<T>, lambda: &LambdaWeights) -> Result<WeightedSumOptimum<T>> {
    weighted_sum_with(y, lambda.values())
}

/// Same as [`weighted_sum_solve`] over counting vectors with `mu` weights.
pub fn weighted_sum_solve_mu<T: Scalar>(y: &PointSet<T>, mu: &MuWeights) -> Result<WeightedSumOptimum<T>> {
    weighted_sum_with(y, mu.values())
}

fn weighted_sum_with<T: Scalar>(y: &PointSet<T>, weights: &[Rational]) -> Result<WeightedSumOptimum<T>> {
    if y.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut best: Option<Rational> = None;
    let mut argmin = Vec::new();
    for p in y.points() {
        check_dim(weights.len(), p.coords.len())?;
        let value = dot(weights, &to_rationals(&p.coords));
        match best.as_ref().map(|b| value.cmp(b)) {
            Some(Ordering::Greater) => {}
            Some(Ordering::Equal) => argmin.push(p.clone()),
            _ => {
                best = Some(value);
                argmin = vec![p.clone()];
            }
        }
    }
    Ok(WeightedSumOptimum {
        value: best.expect("nonempty"),
        argmin,
    })
}

/// `normal . lambda >= 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Halfspace {
    #[serde(with = "serde_rational::vec")]
    pub normal: Vec<Rational>,
}

/// Closed cell of weights for which `value` is weighted-sum optimal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightCell<T> {
    pub value: Vec<T>,
    /// Ids of the input points carrying this value.
    pub ids: Vec<usize>,
    pub halfspaces: Vec<Halfspace>,
    /// Cell vertices as full weight vectors, in boundary order (K <= 3 only).
    #[serde(with = "opt_rational_rows")]
    pub vertices: Option<Vec<Vec<Rational>>>,
    /// Images of `vertices` under the lambda-to-mu map.
    #[serde(with = "opt_rational_rows")]
    pub mu_vertices: Option<Vec<Vec<Rational>>>,
}

impl<T> WeightCell<T> {
    /// `(lambda_1, lambda_2)` projection of the vertices, used for K = 3 plots.
    pub fn planar_vertices(&self) -> Option<Vec<(Rational, Rational)>> {
        self.vertices.as_ref().map(|vs| {
            vs.iter()
                .map(|v| (v[0].clone(), v.get(1).cloned().unwrap_or_default()))
                .collect()
        })
    }

    pub fn contains(&self, lambda: &[Rational]) -> bool {
        self.halfspaces.iter().all(|h| !dot(&h.normal, lambda).is_negative())
    }
}

mod opt_rational_rows {
    use super::Rational;
    use crate::rational::{format_rational, parse_rational};
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(rows: &Option<Vec<Vec<Rational>>>, s: S) -> Result<S::Ok, S::Error> {
        rows.as_ref()
            .map(|rows| {
                rows.iter()
                    .map(|r| r.iter().map(format_rational).collect::<Vec<_>>())
                    .collect::<Vec<_>>()
            })
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Vec<Vec<Rational>>>, D::Error> {
        let rows = Option::<Vec<Vec<String>>>::deserialize(d)?;
        rows.map(|rows| {
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|t| parse_rational(t).ok_or_else(|| D::Error::custom(format!("invalid rational `{t}`"))))
                        .collect()
                })
                .collect()
        })
        .transpose()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition<T> {
    pub k: usize,
    pub cells: Vec<WeightCell<T>>,
    /// Distinct values with an empty cell.
    pub unsupported: Vec<Vec<T>>,
}

/// Splits the open weight simplex into one closed cell per supported value of `y`.
///
/// Vertices are enumerated for `K <= 3`; for larger `K` only the halfspace
/// descriptions are returned and supportedness is decided by linear feasibility.
pub fn weight_space_decomposition<T: Scalar>(y: &PointSet<T>) -> Result<Decomposition<T>> {
    let k = y.dim().ok_or(Error::EmptySet)?;
    if k == 0 {
        return Err(Error::EmptyCategorySpace);
    }
    let mut distinct: Vec<(Vec<T>, Vec<usize>)> = Vec::new();
    let mut sorted: Vec<&Point<T>> = y.points().iter().collect();
    sorted.sort_by(|a, b| a.coords.cmp(&b.coords).then(a.id.cmp(&b.id)));
    for p in sorted {
        match distinct.last_mut() {
            Some((v, ids)) if *v == p.coords => ids.push(p.id),
            _ => distinct.push((p.coords.clone(), vec![p.id])),
        }
    }
    let rational: Vec<Vec<Rational>> = distinct.iter().map(|(v, _)| to_rationals(v)).collect();
    let mut cells = Vec::new();
    let mut unsupported = Vec::new();
    for (i, (value, ids)) in distinct.iter().enumerate() {
        let halfspaces: Vec<Halfspace> = rational
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, other)| Halfspace {
                normal: other.iter().zip(&rational[i]).map(|(a, b)| a - b).collect(),
            })
            .collect();
        let (supported, vertices) = if k <= 3 {
            let vertices = region_vertices(&halfspaces, k)?;
            let supported = !vertices.is_empty() && in_open_simplex(&centroid(&vertices));
            (supported, Some(vertices))
        } else {
            let distinct_set = PointSet::from_vectors(distinct.iter().map(|(v, _)| v.clone()).collect(), y.space())?;
            let supported = match supporting_weights(value, &distinct_set) {
                Ok(w) => w.is_some(),
                Err(Error::NotNonDominated(_)) => false,
                Err(e) => return Err(e),
            };
            (supported, None)
        };
        if !supported {
            unsupported.push(value.clone());
            continue;
        }
        let mu_vertices = vertices
            .as_ref()
            .map(|vs| vs.iter().map(|v| prefix_normalize(v)).collect());
        cells.push(WeightCell {
            value: value.clone(),
            ids: ids.clone(),
            halfspaces,
            vertices,
            mu_vertices,
        });
    }
    Ok(Decomposition { k, cells, unsupported })
}

/// Vertices of the closed region `{ lambda in simplex : h . lambda >= 0 for all h }`
/// for `K <= 3`, as full weight vectors in counter-clockwise order in the
/// `(lambda_1, lambda_2)` projection.
pub fn region_vertices(halfspaces: &[Halfspace], k: usize) -> Result<Vec<Vec<Rational>>> {
    for h in halfspaces {
        check_dim(k, h.normal.len())?;
    }
    match k {
        1 => {
            let one = vec![Rational::one()];
            let ok = halfspaces.iter().all(|h| !h.normal[0].is_negative());
            Ok(if ok { vec![one] } else { Vec::new() })
        }
        2 => Ok(interval_vertices(halfspaces)),
        3 => Ok(polygon_vertices(halfspaces)),
        _ => Err(Error::InvalidWeights(format!("vertex enumeration needs K <= 3, got {k}"))),
    }
}

/// Common closed region of several cells (`K <= 3`).
pub fn cells_intersection<T>(cells: &[&WeightCell<T>], k: usize) -> Result<Vec<Vec<Rational>>> {
    let all: Vec<Halfspace> = cells.iter().flat_map(|c| c.halfspaces.iter().cloned()).collect();
    region_vertices(&all, k)
}

fn centroid(vertices: &[Vec<Rational>]) -> Vec<Rational> {
    let n = from_int(vertices.len() as i64);
    let k = vertices[0].len();
    (0..k)
        .map(|i| vertices.iter().fold(Rational::zero(), |acc, v| acc + &v[i]) / &n)
        .collect()
}

fn in_open_simplex(lambda: &[Rational]) -> bool {
    lambda.iter().all(Signed::is_positive)
}

// K = 2: lambda = (t, 1 - t), constraint (n1 - n2) t + n2 >= 0.
fn interval_vertices(halfspaces: &[Halfspace]) -> Vec<Vec<Rational>> {
    let mut lo = Rational::zero();
    let mut hi = Rational::one();
    for h in halfspaces {
        let slope = &h.normal[0] - &h.normal[1];
        let offset = h.normal[1].clone();
        if slope.is_zero() {
            if offset.is_negative() {
                return Vec::new();
            }
            continue;
        }
        let root = -&offset / &slope;
        if slope.is_positive() {
            lo = lo.max(root);
        } else {
            hi = hi.min(root);
        }
    }
    if lo > hi {
        return Vec::new();
    }
    let point = |t: &Rational| vec![t.clone(), Rational::one() - t];
    if lo == hi {
        vec![point(&lo)]
    } else {
        vec![point(&lo), point(&hi)]
    }
}

// K = 3 in coordinates p = (lambda_1, lambda_2): a . p + b >= 0.
struct Line {
    a: [Rational; 2],
    b: Rational,
}

fn polygon_vertices(halfspaces: &[Halfspace]) -> Vec<Vec<Rational>> {
    let zero = Rational::zero;
    let one = Rational::one;
    let mut lines = vec![
        Line { a: [one(), zero()], b: zero() },
        Line { a: [zero(), one()], b: zero() },
        Line { a: [-one(), -one()], b: one() },
    ];
    for h in halfspaces {
        let n = &h.normal;
        lines.push(Line {
            a: [&n[0] - &n[2], &n[1] - &n[2]],
            b: n[2].clone(),
        });
    }
    let feasible = |p: &[Rational; 2]| {
        lines
            .iter()
            .all(|l| !(&l.a[0] * &p[0] + &l.a[1] * &p[1] + &l.b).is_negative())
    };
    let mut points: Vec<[Rational; 2]> = Vec::new();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let (l1, l2) = (&lines[i], &lines[j]);
            let det = &l1.a[0] * &l2.a[1] - &l1.a[1] * &l2.a[0];
            if det.is_zero() {
                continue;
            }
            // a1 . p = -b1, a2 . p = -b2
            let x = (-&l1.b * &l2.a[1] + &l2.b * &l1.a[1]) / &det;
            let y = (-&l2.b * &l1.a[0] + &l1.b * &l2.a[0]) / &det;
            let p = [x, y];
            if feasible(&p) && !points.contains(&p) {
                points.push(p);
            }
        }
    }
    convex_hull(points)
        .into_iter()
        .map(|[x, y]| {
            let z = Rational::one() - &x - &y;
            vec![x, y, z]
        })
        .collect()
}

fn cross(o: &[Rational; 2], a: &[Rational; 2], b: &[Rational; 2]) -> Rational {
    (&a[0] - &o[0]) * (&b[1] - &o[1]) - (&a[1] - &o[1]) * (&b[0] - &o[0])
}

/// Andrew's monotone chain; counter-clockwise without collinear points.
fn convex_hull(mut points: Vec<[Rational; 2]>) -> Vec<[Rational; 2]> {
    points.sort();
    points.dedup();
    if points.len() <= 2 {
        return points;
    }
    let mut lower: Vec<[Rational; 2]> = Vec::new();
    for p in &points {
        while lower.len() >= 2 && !cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive() {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<[Rational; 2]> = Vec::new();
    for p in points.iter().rev() {
        while upper.len() >= 2 && !cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive() {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nondominance::SpaceTag;
    use crate::rational::from_ratio;

    fn q(v: &[(i64, i64)]) -> Vec<Rational> {
        v.iter().map(|&(n, d)| from_ratio(n, d)).collect()
    }

    fn tails(vs: &[&[i64]]) -> PointSet<i64> {
        PointSet::from_vectors(vs.iter().map(|v| v.to_vec()).collect(), SpaceTag::Tail).unwrap()
    }

    fn third() -> LambdaWeights {
        LambdaWeights::new(q(&[(1, 3), (1, 3), (1, 3)])).unwrap()
    }

    #[test]
    fn weighted_sum_examples() {
        let y = tails(&[&[2, 1, 1], &[2, 2, 0], &[3, 1, 0]]);
        let opt = weighted_sum_solve(&y, &third()).unwrap();
        assert_eq!(opt.value, from_ratio(4, 3));
        assert_eq!(opt.argmin.len(), 3);

        let skewed = LambdaWeights::new(q(&[(98, 100), (1, 100), (1, 100)])).unwrap();
        let opt = weighted_sum_solve(&y, &skewed).unwrap();
        // 0.98*2 + 0.01 + 0.01 = 1.98 for both minimizers, 2.95 for (3,1,0)
        assert_eq!(opt.value, from_ratio(99, 50));
        let values: Vec<Vec<i64>> = opt.argmin.iter().map(|p| p.coords.clone()).collect();
        assert_eq!(values, vec![vec![2, 1, 1], vec![2, 2, 0]]);

        let single = tails(&[&[7, 1, 0]]);
        assert_eq!(weighted_sum_solve(&single, &third()).unwrap().argmin[0].coords, vec![7, 1, 0]);
        assert!(weighted_sum_solve(&tails(&[&[1, 1]]), &third()).is_err());
    }

    #[test]
    fn lambda_mu_examples() {
        let mu = lambda_to_mu(&third());
        assert_eq!(mu.values(), q(&[(1, 6), (1, 3), (1, 2)]).as_slice());
        assert_eq!(mu_to_lambda(&mu), third());
        let one = LambdaWeights::new(q(&[(1, 1)])).unwrap();
        assert_eq!(lambda_to_mu(&one).values(), q(&[(1, 1)]).as_slice());
        assert!(MuWeights::new(q(&[(1, 2), (1, 2)])).is_err());
        assert!(LambdaWeights::new(q(&[(0, 1), (1, 1)])).is_err());
        assert!(LambdaWeights::new(q(&[(1, 2), (1, 3)])).is_err());
    }

    #[test]
    fn representation_to_mu() {
        let nu = NumericalRepresentation::new(vec![1, 2, 5]).unwrap();
        assert_eq!(mu_from_representation(&nu).unwrap().values(), q(&[(1, 8), (1, 4), (5, 8)]).as_slice());
        let zero_first = NumericalRepresentation::new(vec![0, 2]).unwrap();
        assert!(mu_from_representation(&zero_first).is_err());
    }

    #[test]
    fn decomposition_six_paths() {
        let y = tails(&[&[2, 1, 1], &[2, 2, 0], &[3, 1, 0]]);
        let d = weight_space_decomposition(&y).unwrap();
        assert_eq!(d.cells.len(), 3);
        assert!(d.unsupported.is_empty());
        let refs: Vec<&WeightCell<i64>> = d.cells.iter().collect();
        let common = cells_intersection(&refs, 3).unwrap();
        assert_eq!(common, vec![q(&[(1, 3), (1, 3), (1, 3)])]);
        for cell in &d.cells {
            assert_eq!(cell.vertices.as_ref().unwrap().len(), 3);
            assert!(cell.mu_vertices.as_ref().unwrap().contains(&q(&[(1, 6), (1, 3), (1, 2)])));
        }
        // (3,1,0) is optimal where lambda_1 is the smallest weight
        let cell = d.cells.iter().find(|c| c.value == vec![3, 1, 0]).unwrap();
        assert!(cell.vertices.as_ref().unwrap().contains(&q(&[(0, 1), (0, 1), (1, 1)])));
        assert!(cell.vertices.as_ref().unwrap().contains(&q(&[(0, 1), (1, 1), (0, 1)])));
    }

    #[test]
    fn decomposition_single_point_is_whole_simplex() {
        let d = weight_space_decomposition(&tails(&[&[1, 1, 0]])).unwrap();
        assert_eq!(d.cells.len(), 1);
        assert_eq!(d.cells[0].vertices.as_ref().unwrap().len(), 3);
        let d2 = weight_space_decomposition(&tails(&[&[1, 0]])).unwrap();
        assert_eq!(d2.cells[0].vertices.as_ref().unwrap(), &vec![q(&[(0, 1), (1, 1)]), q(&[(1, 1), (0, 1)])]);
    }

    #[test]
    fn decomposition_nonsupported_example() {
        let d = weight_space_decomposition(&tails(&[&[4, 1], &[5, 0], &[2, 2]])).unwrap();
        let values: Vec<Vec<i64>> = d.cells.iter().map(|c| c.value.clone()).collect();
        assert_eq!(values, vec![vec![2, 2], vec![5, 0]]);
        assert_eq!(d.unsupported, vec![vec![4, 1]]);
        let boundary = q(&[(2, 5), (3, 5)]);
        for cell in &d.cells {
            assert!(cell.vertices.as_ref().unwrap().contains(&boundary));
        }
    }

    #[test]
    fn decomposition_large_k_has_no_vertices() {
        let d = weight_space_decomposition(&tails(&[&[1, 1, 1, 0], &[2, 1, 0, 0], &[3, 0, 0, 0]])).unwrap();
        assert!(d.cells.iter().all(|c| c.vertices.is_none()));
        assert!(!d.cells.is_empty());
    }
}
