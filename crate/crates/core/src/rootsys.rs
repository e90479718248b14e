//! Cartan data, positive roots and the Weyl group action.
//!
//! Algorithms here work for any finite-type Cartan matrix; only the F4
//! constants are built in. Simple-root indices are 0-based: index `i`
//! refers to `α_{i+1}`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::Rational;

/// Saturation sweeps allowed before the input is declared non-finite.
pub const SATURATION_SWEEP_CAP: usize = 100;

/// Orbit size above which Weyl group enumeration gives up.
pub const ORBIT_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("invalid Cartan data: {0}")]
    InvalidCartan(String),
    #[error("root saturation did not terminate within {0} sweeps (not of finite type?)")]
    NotFinite(usize),
    #[error("{0} is not a root")]
    NotARoot(RootVector),
    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("orbit enumeration exceeded {0} elements")]
    OrbitCap(usize),
    #[error("expected a vector of length {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("root list incomplete: {missing} positive roots missing")]
    Incomplete { missing: usize },
}

/// Cartan matrix together with the invariant form on the simple roots.
///
/// `cartan[j][k] = 2 (α_j, α_k) / (α_j, α_j)` and `gram[j][k] = (α_j, α_k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanData {
    rank: usize,
    cartan: Vec<Vec<i64>>,
    gram: Vec<Vec<Rational>>,
    halfnorm: Vec<Rational>,
}

impl CartanData {
    /// F4 with long simple roots `α1, α2` of norm 2 and short `α3, α4` of norm 1.
    pub fn f4() -> Self {
        let cartan = vec![
            vec![2, -1, 0, 0],
            vec![-1, 2, -1, 0],
            vec![0, -2, 2, -1],
            vec![0, 0, -1, 2],
        ];
        let halfnorm = vec![
            Rational::one(),
            Rational::one(),
            Rational::half(),
            Rational::half(),
        ];
        Self::new(cartan, halfnorm).expect("F4 Cartan data is valid")
    }

    /// Builds the Gram matrix `B_jk = a_jk * d_j` from the Cartan matrix and
    /// the half-norms `d_j = (α_j, α_j)/2`, checking that it is symmetric.
    pub fn new(cartan: Vec<Vec<i64>>, halfnorm: Vec<Rational>) -> Result<Self, RootError> {
        let rank = cartan.len();
        if halfnorm.len() != rank {
            return Err(RootError::Dimension {
                expected: rank,
                got: halfnorm.len(),
            });
        }
        for (j, row) in cartan.iter().enumerate() {
            if row.len() != rank {
                return Err(RootError::InvalidCartan(format!(
                    "row {} has length {}",
                    j + 1,
                    row.len()
                )));
            }
            if row[j] != 2 {
                return Err(RootError::InvalidCartan(format!(
                    "diagonal entry {} is not 2",
                    j + 1
                )));
            }
        }
        if halfnorm.iter().any(|d| !d.is_positive()) {
            return Err(RootError::InvalidCartan(
                "half-norms must be positive".into(),
            ));
        }
        let gram: Vec<Vec<Rational>> = (0..rank)
            .map(|j| {
                (0..rank)
                    .map(|k| Rational::integer(cartan[j][k]) * &halfnorm[j])
                    .collect()
            })
            .collect();
        let asymmetric = (0..rank)
            .flat_map(|j| (0..j).map(move |k| (j, k)))
            .find(|&(j, k)| gram[j][k] != gram[k][j]);
        if let Some((j, k)) = asymmetric {
            return Err(RootError::InvalidCartan(format!(
                "form is not symmetric at ({}, {})",
                j + 1,
                k + 1
            )));
        }
        Ok(CartanData {
            rank,
            cartan,
            gram,
            halfnorm,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self, j: usize, k: usize) -> i64 {
        self.cartan[j][k]
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn gram(&self, j: usize, k: usize) -> &Rational {
        &self.gram[j][k]
    }

    pub fn gram_matrix(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    pub fn halfnorm(&self, j: usize) -> &Rational {
        &self.halfnorm[j]
    }

    fn check_index(&self, i: usize) -> Result<(), RootError> {
        if i >= self.rank {
            return Err(RootError::IndexOutOfRange {
                index: i,
                rank: self.rank,
            });
        }
        Ok(())
    }

    fn check_len(&self, v: &RootVector) -> Result<(), RootError> {
        if v.0.len() != self.rank {
            return Err(RootError::Dimension {
                expected: self.rank,
                got: v.0.len(),
            });
        }
        Ok(())
    }

    /// Cartan data of the subdiagram on `subset` (sorted, deduplicated).
    pub fn restrict(&self, subset: &[usize]) -> Result<CartanData, RootError> {
        let idx = normalize_subset(self, subset)?;
        let cartan = idx
            .iter()
            .map(|&j| idx.iter().map(|&k| self.cartan[j][k]).collect())
            .collect();
        let halfnorm = idx.iter().map(|&j| self.halfnorm[j].clone()).collect();
        CartanData::new(cartan, halfnorm)
    }

    /// `(x, y)` for vectors in simple-root coordinates.
    pub fn inner(&self, x: &RootVector, y: &RootVector) -> Rational {
        let mut acc = Rational::zero();
        for (j, xj) in x.0.iter().enumerate() {
            if *xj == 0 {
                continue;
            }
            for (k, yk) in y.0.iter().enumerate() {
                if *yk != 0 {
                    acc += &(Rational::integer(xj * yk) * &self.gram[j][k]);
                }
            }
        }
        acc
    }

    /// `⟨β, α_i∨⟩ = Σ_k β_k a_{ik}`.
    pub fn pairing_with_simple_coroot(&self, beta: &RootVector, i: usize) -> i64 {
        beta.0.iter().zip(&self.cartan[i]).map(|(b, a)| b * a).sum()
    }

    /// `s_i(β) = β − ⟨β, α_i∨⟩ α_i`.
    pub fn simple_reflection(&self, i: usize, beta: &RootVector) -> Result<RootVector, RootError> {
        self.check_index(i)?;
        self.check_len(beta)?;
        let p = self.pairing_with_simple_coroot(beta, i);
        let mut out = beta.clone();
        out.0[i] -= p;
        Ok(out)
    }

    /// `|W|`, computed as the orbit size of the regular weight with all
    /// fundamental-weight coordinates equal to 1.
    pub fn weyl_order(&self) -> Result<usize, RootError> {
        self.weyl_order_capped(ORBIT_CAP)
    }

    pub fn weyl_order_capped(&self, cap: usize) -> Result<usize, RootError> {
        let start = vec![1i64; self.rank];
        let mut seen: HashSet<Vec<i64>> = HashSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some(labels) = queue.pop_front() {
            for i in 0..self.rank {
                // s_i acts on fundamental-weight coordinates by ℓ_j -= ℓ_i a_{ji}
                let li = labels[i];
                let next: Vec<i64> = (0..self.rank)
                    .map(|j| labels[j] - li * self.cartan[j][i])
                    .collect();
                if seen.insert(next.clone()) {
                    if seen.len() > cap {
                        return Err(RootError::OrbitCap(cap));
                    }
                    queue.push_back(next);
                }
            }
        }
        Ok(seen.len())
    }
}

fn normalize_subset(data: &CartanData, subset: &[usize]) -> Result<Vec<usize>, RootError> {
    let mut idx = subset.to_vec();
    idx.sort_unstable();
    idx.dedup();
    for &i in &idx {
        data.check_index(i)?;
    }
    Ok(idx)
}

/// Integer coordinates over the simple roots.
///
/// Ordered canonically by height, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootVector(pub Vec<i64>);

impl RootVector {
    pub fn new(coords: impl Into<Vec<i64>>) -> Self {
        RootVector(coords.into())
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        RootVector(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Nonzero with all coordinates `>= 0`.
    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c <= 0)
    }

    pub fn negated(&self) -> RootVector {
        RootVector(self.0.iter().map(|c| -c).collect())
    }

    /// Indices of the simple roots with nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
            .collect()
    }
}

impl Ord for RootVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.height()
            .cmp(&other.height())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for RootVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LengthClass {
    Long,
    Short,
}

/// Positive roots of a root system (or of a subsystem spanned by some of
/// the simple roots), in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    data: CartanData,
    positive: Vec<RootVector>,
    norms: BTreeMap<RootVector, Rational>,
    simple_subset: Vec<usize>,
}

/// Generates the positive roots by reflection saturation: start from the
/// simple roots, apply every simple reflection, keep positive images, and
/// repeat until nothing new appears.
pub fn positive_roots(data: &CartanData) -> Result<RootSystem, RootError> {
    let rank = data.rank();
    let mut found: HashSet<RootVector> = (0..rank).map(|i| RootVector::simple(rank, i)).collect();
    let mut frontier: Vec<RootVector> = found.iter().cloned().collect();
    let mut sweeps = 0;
    while !frontier.is_empty() {
        sweeps += 1;
        if sweeps > SATURATION_SWEEP_CAP {
            return Err(RootError::NotFinite(SATURATION_SWEEP_CAP));
        }
        let mut next = Vec::new();
        for beta in &frontier {
            for i in 0..rank {
                let image = data.simple_reflection(i, beta)?;
                if image.is_positive() && found.insert(image.clone()) {
                    next.push(image);
                }
            }
        }
        frontier = next;
    }
    let mut positive: Vec<RootVector> = found.into_iter().collect();
    positive.sort();
    let norms = positive
        .iter()
        .map(|r| (r.clone(), data.inner(r, r)))
        .collect();
    Ok(RootSystem {
        data: data.clone(),
        positive,
        norms,
        simple_subset: (0..rank).collect(),
    })
}

impl RootSystem {
    pub fn f4() -> Self {
        positive_roots(&CartanData::f4()).expect("F4 is of finite type")
    }

    /// Rebuilds a full root system from a list of its positive roots. The
    /// list must be exactly the positive roots of `data`, in any order.
    pub fn from_positive(data: &CartanData, roots: Vec<RootVector>) -> Result<Self, RootError> {
        let full = positive_roots(data)?;
        let mut seen = HashSet::new();
        for r in roots {
            if r.coords().len() != data.rank() {
                return Err(RootError::Dimension {
                    expected: data.rank(),
                    got: r.coords().len(),
                });
            }
            if !full.contains(&r) || !seen.insert(r.clone()) {
                return Err(RootError::NotARoot(r));
            }
        }
        if seen.len() != full.len() {
            return Err(RootError::Incomplete {
                missing: full.len() - seen.len(),
            });
        }
        Ok(full)
    }

    pub fn data(&self) -> &CartanData {
        &self.data
    }

    pub fn positive(&self) -> &[RootVector] {
        &self.positive
    }

    pub fn len(&self) -> usize {
        self.positive.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positive.is_empty()
    }

    /// Simple-root indices spanning this (sub)system.
    pub fn simple_subset(&self) -> &[usize] {
        &self.simple_subset
    }

    pub fn contains(&self, beta: &RootVector) -> bool {
        self.norms.contains_key(beta)
    }

    /// True for positive or negative roots.
    pub fn is_root(&self, beta: &RootVector) -> bool {
        self.contains(beta) || self.contains(&beta.negated())
    }

    /// `(β, β)` for a positive or negative root.
    pub fn norm(&self, beta: &RootVector) -> Result<&Rational, RootError> {
        self.norms
            .get(beta)
            .or_else(|| self.norms.get(&beta.negated()))
            .ok_or_else(|| RootError::NotARoot(beta.clone()))
    }

    fn max_norm(&self) -> Option<&Rational> {
        self.norms.values().max()
    }

    pub fn length_class(&self, beta: &RootVector) -> Result<LengthClass, RootError> {
        let n = self.norm(beta)?;
        Ok(if Some(n) == self.max_norm() {
            LengthClass::Long
        } else {
            LengthClass::Short
        })
    }

    pub fn long_roots(&self) -> impl Iterator<Item = &RootVector> {
        let max = self.max_norm().cloned();
        self.positive
            .iter()
            .filter(move |r| self.norms.get(*r) == max.as_ref())
    }

    pub fn short_roots(&self) -> impl Iterator<Item = &RootVector> {
        let max = self.max_norm().cloned();
        self.positive
            .iter()
            .filter(move |r| self.norms.get(*r) != max.as_ref())
    }

    /// Coordinates `k_j` with `β∨ = Σ k_j α_j∨`, i.e. `k_j = n_j d_j / ((β,β)/2)`.
    pub fn coroot_coords(&self, beta: &RootVector) -> Result<Vec<Rational>, RootError> {
        let half = self
            .norm(beta)?
            .checked_div(&Rational::integer(2))
            .expect("nonzero");
        beta.0
            .iter()
            .enumerate()
            .map(|(j, n)| {
                (Rational::integer(*n) * self.data.halfnorm(j))
                    .checked_div(&half)
                    .map_err(|_| RootError::NotARoot(beta.clone()))
            })
            .collect()
    }

    pub fn simple_reflection(&self, i: usize, beta: &RootVector) -> Result<RootVector, RootError> {
        self.data.simple_reflection(i, beta)
    }

    /// Positive roots supported on `simple_subset` (indices into the full
    /// system); coordinates stay in the full simple-root basis.
    pub fn subsystem(&self, simple_subset: &[usize]) -> Result<RootSystem, RootError> {
        let idx = normalize_subset(&self.data, simple_subset)?;
        let keep = |r: &RootVector| r.support().iter().all(|j| idx.contains(j));
        let positive: Vec<RootVector> = self.positive.iter().filter(|r| keep(r)).cloned().collect();
        let norms = positive
            .iter()
            .map(|r| (r.clone(), self.norms[r].clone()))
            .collect();
        Ok(RootSystem {
            data: self.data.clone(),
            positive,
            norms,
            simple_subset: idx,
        })
    }

    /// Weyl group order of this (sub)system.
    pub fn weyl_order(&self) -> Result<usize, RootError> {
        self.data.restrict(&self.simple_subset)?.weyl_order()
    }

    /// Orbit of `beta` under the reflections of this system's simple roots.
    pub fn root_orbit(&self, beta: &RootVector) -> Result<Vec<RootVector>, RootError> {
        let mut seen: HashSet<RootVector> = HashSet::from([beta.clone()]);
        let mut queue = VecDeque::from([beta.clone()]);
        while let Some(r) = queue.pop_front() {
            for &i in &self.simple_subset {
                let image = self.data.simple_reflection(i, &r)?;
                if seen.insert(image.clone()) {
                    if seen.len() > ORBIT_CAP {
                        return Err(RootError::OrbitCap(ORBIT_CAP));
                    }
                    queue.push_back(image);
                }
            }
        }
        let mut out: Vec<RootVector> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }
}

/// Coordinates in the orthonormal basis `ε1..ε4`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EpsilonVector(pub [Rational; 4]);

impl EpsilonVector {
    pub fn dot(&self, other: &EpsilonVector) -> Rational {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }
}

impl fmt::Display for EpsilonVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for EpsilonVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ε{:?}", self.0)
    }
}

/// Images of `α1..α4` of F4: `ε2−ε3`, `ε3−ε4`, `ε4`, `(ε1−ε2−ε3−ε4)/2`.
pub fn f4_simple_epsilon() -> [EpsilonVector; 4] {
    let i = Rational::integer;
    let h = Rational::half();
    [
        EpsilonVector([i(0), i(1), i(-1), i(0)]),
        EpsilonVector([i(0), i(0), i(1), i(-1)]),
        EpsilonVector([i(0), i(0), i(0), i(1)]),
        EpsilonVector([h.clone(), -&h, -&h, -&h]),
    ]
}

/// Linear extension of [`f4_simple_epsilon`] to any vector in simple-root
/// coordinates of F4.
pub fn epsilon_coords(beta: &RootVector) -> Result<EpsilonVector, RootError> {
    if beta.0.len() != 4 {
        return Err(RootError::Dimension {
            expected: 4,
            got: beta.0.len(),
        });
    }
    let images = f4_simple_epsilon();
    let coords = std::array::from_fn(|k| {
        beta.0
            .iter()
            .zip(&images)
            .map(|(n, e)| Rational::integer(*n) * &e.0[k])
            .sum()
    });
    Ok(EpsilonVector(coords))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rv(c: [i64; 4]) -> RootVector {
        RootVector::new(c)
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn f4_cartan_entries() {
        let d = CartanData::f4();
        assert_eq!(d.cartan(2, 1), -2);
        assert_eq!(d.gram(2, 3), &q(-1, 2));
        let diag: Vec<_> = (0..4).map(|j| d.gram(j, j).clone()).collect();
        assert_eq!(diag, vec![q(2, 1), q(2, 1), q(1, 1), q(1, 1)]);
        for j in 0..4 {
            for k in 0..4 {
                let expected = (Rational::integer(2) * d.gram(j, k))
                    .checked_div(d.gram(j, j))
                    .unwrap();
                assert_eq!(Rational::integer(d.cartan(j, k)), expected);
            }
        }
    }

    #[test]
    fn invalid_cartan_rejected() {
        // asymmetrizable only with other norms
        let err = CartanData::new(vec![vec![2, -2], vec![-1, 2]], vec![q(1, 1), q(1, 1)]);
        assert!(matches!(err, Err(RootError::InvalidCartan(_))));
        let err = CartanData::new(vec![vec![1]], vec![q(1, 1)]);
        assert!(matches!(err, Err(RootError::InvalidCartan(_))));
    }

    #[test]
    fn affine_input_hits_sweep_cap() {
        let affine =
            CartanData::new(vec![vec![2, -2], vec![-2, 2]], vec![q(1, 1), q(1, 1)]).unwrap();
        assert_eq!(
            positive_roots(&affine),
            Err(RootError::NotFinite(SATURATION_SWEEP_CAP))
        );
    }

    #[test]
    fn root_membership() {
        let rs = RootSystem::f4();
        assert_eq!(rs.len(), 24);
        assert_eq!(rs.norm(&rv([2, 3, 4, 2])), Ok(&q(2, 1)));
        assert_eq!(rs.norm(&rv([1, 1, 2, 1])), Ok(&q(1, 1)));
        assert!(!rs.contains(&rv([1, 0, 1, 0])));
        assert!(rs.is_root(&rv([-1, -1, -2, -1])));
    }

    #[test]
    fn coroots() {
        let rs = RootSystem::f4();
        let ints = |v: Vec<Rational>| v.iter().map(|r| r.to_i64().unwrap()).collect::<Vec<_>>();
        assert_eq!(
            ints(rs.coroot_coords(&rv([0, 0, 1, 0])).unwrap()),
            vec![0, 0, 1, 0]
        );
        assert_eq!(
            ints(rs.coroot_coords(&rv([1, 1, 2, 1])).unwrap()),
            vec![2, 2, 2, 1]
        );
        assert_eq!(
            ints(rs.coroot_coords(&rv([2, 3, 4, 2])).unwrap()),
            vec![2, 3, 2, 1]
        );
        assert_eq!(
            rs.coroot_coords(&rv([1, 0, 1, 0])),
            Err(RootError::NotARoot(rv([1, 0, 1, 0])))
        );
    }

    #[test]
    fn coroot_coordinates_are_integral() {
        let rs = RootSystem::f4();
        for r in rs.positive() {
            assert!(rs
                .coroot_coords(r)
                .unwrap()
                .iter()
                .all(Rational::is_integer));
        }
    }

    #[test]
    fn reflections() {
        let d = CartanData::f4();
        assert_eq!(
            d.simple_reflection(0, &rv([0, 1, 0, 0])).unwrap(),
            rv([1, 1, 0, 0])
        );
        assert_eq!(
            d.simple_reflection(2, &rv([0, 0, 0, 1])).unwrap(),
            rv([0, 0, 1, 1])
        );
        assert!(matches!(
            d.simple_reflection(4, &rv([0, 0, 0, 1])),
            Err(RootError::IndexOutOfRange { index: 4, rank: 4 })
        ));
    }

    #[test]
    fn weyl_orders() {
        let rs = RootSystem::f4();
        assert_eq!(rs.weyl_order(), Ok(1152));
        assert_eq!(rs.subsystem(&[3]).unwrap().weyl_order(), Ok(2));
        assert_eq!(rs.subsystem(&[0, 1]).unwrap().weyl_order(), Ok(6));
        assert_eq!(rs.subsystem(&[]).unwrap().weyl_order(), Ok(1));
        assert_eq!(
            CartanData::f4().weyl_order_capped(100),
            Err(RootError::OrbitCap(100))
        );
    }

    #[test]
    fn epsilon_images() {
        assert_eq!(
            epsilon_coords(&rv([0, 0, 0, 1])).unwrap().0,
            [q(1, 2), q(-1, 2), q(-1, 2), q(-1, 2)]
        );
        assert_eq!(
            epsilon_coords(&rv([1, 1, 0, 0])).unwrap().0,
            [q(0, 1), q(1, 1), q(0, 1), q(-1, 1)]
        );
        assert_eq!(
            epsilon_coords(&rv([2, 3, 4, 2])).unwrap().0,
            [q(1, 1), q(1, 1), q(0, 1), q(0, 1)]
        );
    }

    #[test]
    fn subsystems() {
        let rs = RootSystem::f4();
        let sp3 = rs.subsystem(&[1, 2, 3]).unwrap();
        assert_eq!(sp3.len(), 9);
        let long: Vec<_> = sp3.long_roots().cloned().collect();
        assert_eq!(
            long,
            vec![rv([0, 1, 0, 0]), rv([0, 1, 2, 0]), rv([0, 1, 2, 2])]
        );
        assert_eq!(
            rs.subsystem(&[0, 1]).unwrap().positive(),
            &[rv([0, 1, 0, 0]), rv([1, 0, 0, 0]), rv([1, 1, 0, 0])]
        );
        assert_eq!(rs.subsystem(&[3]).unwrap().positive(), &[rv([0, 0, 0, 1])]);
    }

    #[test]
    fn canonical_order_is_height_then_lex() {
        let rs = RootSystem::f4();
        let p = rs.positive();
        assert!(p.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(p[0], rv([0, 0, 0, 1]));
        assert_eq!(p[23], rv([2, 3, 4, 2]));
    }
}
