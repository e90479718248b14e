//! Highest weights as Harish-Chandra data.
//!
//! A [`Weight`] stores the shifted weight `Λ+ρ` through its four labels
//! `(Λ+ρ, α_j∨)`. The reflection `s_β` then acts linearly on the labels and
//! the embedded module of a reducible `V^Λ` is reached by [`Weight::shifted_reflect`].

use std::collections::{HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::exact::{self, ExactError, LinForm, Rational, SignClass, NUM_PARAMS};
use crate::rootsys::{CartanData, RootError, RootSystem, RootVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VermaError {
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("{0} is not a positive root")]
    NotPositive(RootVector),
    #[error("weights need rank {NUM_PARAMS} data, got rank {0}")]
    Rank(usize),
    #[error("shifted orbit exceeded {0} weights")]
    OrbitCap(usize),
}

/// `Λ+ρ` recorded by its simple-root Harish-Chandra labels.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    labels: [LinForm; NUM_PARAMS],
}

impl Weight {
    pub fn new(labels: [LinForm; NUM_PARAMS]) -> Self {
        Weight { labels }
    }

    /// Top weight of a multiplet: labels `(m1, m2, m3, m4)`.
    pub fn top() -> Self {
        Weight {
            labels: std::array::from_fn(LinForm::basis),
        }
    }

    /// `ρ` itself, all labels 1.
    pub fn rho() -> Self {
        Self::concrete([1; NUM_PARAMS])
    }

    pub fn concrete(labels: [i64; NUM_PARAMS]) -> Self {
        Weight {
            labels: labels.map(|l| LinForm::constant(Rational::integer(l))),
        }
    }

    pub fn labels(&self) -> &[LinForm; NUM_PARAMS] {
        &self.labels
    }

    pub fn label(&self, j: usize) -> &LinForm {
        &self.labels[j]
    }

    /// Substitutes concrete values for `m1..m4`.
    pub fn eval(&self, values: &[i64; NUM_PARAMS]) -> Weight {
        Weight {
            labels: std::array::from_fn(|j| LinForm::constant(self.labels[j].eval_ints(values))),
        }
    }

    /// Label values if every label is constant.
    pub fn constant_labels(&self) -> Option<[Rational; NUM_PARAMS]> {
        let mut out: [Rational; NUM_PARAMS] = std::array::from_fn(|_| Rational::zero());
        for (slot, l) in out.iter_mut().zip(&self.labels) {
            *slot = l.as_constant()?.clone();
        }
        Some(out)
    }

    /// `m_β = (Λ+ρ, β∨) = Σ_j k_j ℓ_j` with `β∨ = Σ_j k_j α_j∨`.
    pub fn hc_param(&self, rs: &RootSystem, beta: &RootVector) -> Result<LinForm, VermaError> {
        check_rank(rs.data())?;
        let k = rs.coroot_coords(beta)?;
        let mut out = LinForm::zero();
        for (kj, lj) in k.iter().zip(&self.labels) {
            if !kj.is_zero() {
                out += &lj.scale(kj);
            }
        }
        Ok(out)
    }

    /// Labels of `s_β(Λ+ρ)`: `ℓ'_j = ℓ_j − m_β ⟨β, α_j∨⟩`.
    pub fn shifted_reflect(
        &self,
        rs: &RootSystem,
        beta: &RootVector,
    ) -> Result<Weight, VermaError> {
        let m = self.hc_param(rs, beta)?;
        let data = rs.data();
        Ok(Weight {
            labels: std::array::from_fn(|j| {
                let p = data.pairing_with_simple_coroot(beta, j);
                &self.labels[j] - &m.scale(&Rational::integer(p))
            }),
        })
    }

    /// Reflection in the simple root `α_{i+1}`; needs only the Cartan matrix.
    pub fn simple_shifted_reflect(
        &self,
        data: &CartanData,
        i: usize,
    ) -> Result<Weight, VermaError> {
        check_rank(data)?;
        if i >= NUM_PARAMS {
            return Err(RootError::IndexOutOfRange {
                index: i,
                rank: NUM_PARAMS,
            }
            .into());
        }
        let li = self.labels[i].clone();
        Ok(Weight {
            labels: std::array::from_fn(|j| {
                &self.labels[j] - &li.scale(&Rational::integer(data.cartan(j, i)))
            }),
        })
    }

    /// Coordinates of `Λ = (Λ+ρ) − ρ` over the simple roots; `None` unless
    /// all labels are constant.
    pub fn root_basis(&self, data: &CartanData) -> Result<Option<Vec<Rational>>, VermaError> {
        check_rank(data)?;
        let Some(values) = self.constant_labels() else {
            return Ok(None);
        };
        // (Λ, α_j) = (ℓ_j − 1) d_j
        let rhs: Vec<Rational> = values
            .iter()
            .enumerate()
            .map(|(j, l)| (l - Rational::one()) * data.halfnorm(j))
            .collect();
        Ok(Some(exact::solve(data.gram_matrix(), &rhs)?))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (j, l) in self.labels.iter().enumerate() {
            if j > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weight{self}")
    }
}

fn check_rank(data: &CartanData) -> Result<(), VermaError> {
    if data.rank() != NUM_PARAMS {
        return Err(VermaError::Rank(data.rank()));
    }
    Ok(())
}

/// `ρ` over the simple roots, from `(ρ, α_j∨) = 1` for every `j`.
pub fn rho_in_root_basis(data: &CartanData) -> Result<Vec<Rational>, VermaError> {
    let rhs: Vec<Rational> = (0..data.rank()).map(|j| data.halfnorm(j).clone()).collect();
    Ok(exact::solve(data.gram_matrix(), &rhs)?)
}

/// Outcome of the reducibility test along one positive root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reducibility {
    /// `m_β` is a positive integer for every positive-integer assignment.
    Generic(LinForm),
    /// Concrete mode: `m_β` evaluated to this positive integer.
    Concrete(Rational),
    /// Not reducible along this root.
    Absent,
    /// Reducibility depends on the assignment (mixed-sign form).
    AssignmentDependent(LinForm),
}

impl Reducibility {
    pub fn is_reducible(&self) -> bool {
        matches!(self, Reducibility::Generic(_) | Reducibility::Concrete(_))
    }
}

/// Tests `(Λ+ρ, β∨) ∈ ℕ`, either symbolically or at `assignment`.
///
/// The symbolic generic test only accepts forms with integer coefficients:
/// a half-integral form can take non-integral values.
pub fn reducibility_degree(
    rs: &RootSystem,
    w: &Weight,
    beta: &RootVector,
    assignment: Option<&[i64; NUM_PARAMS]>,
) -> Result<Reducibility, VermaError> {
    if !rs.contains(beta) {
        return Err(if rs.is_root(beta) {
            VermaError::NotPositive(beta.clone())
        } else {
            RootError::NotARoot(beta.clone()).into()
        });
    }
    let m = w.hc_param(rs, beta)?;
    if let Some(values) = assignment {
        let v = m.eval_ints(values);
        return Ok(if v.is_integer() && v.is_positive() {
            Reducibility::Concrete(v)
        } else {
            Reducibility::Absent
        });
    }
    if let Some(v) = m.as_constant() {
        return Ok(if v.is_integer() && v.is_positive() {
            Reducibility::Generic(m)
        } else {
            Reducibility::Absent
        });
    }
    if !m.is_homogeneous() {
        return Ok(Reducibility::AssignmentDependent(m));
    }
    let integral = m.coeffs().iter().all(Rational::is_integer);
    Ok(match m.sign_class()? {
        SignClass::GenericPositive if integral => Reducibility::Generic(m),
        SignClass::GenericPositive | SignClass::Mixed => Reducibility::AssignmentDependent(m),
        SignClass::GenericNegative | SignClass::Zero => Reducibility::Absent,
    })
}

/// Orbit of `w` under the shifted Weyl action, generated by simple reflections.
pub fn shifted_orbit(data: &CartanData, w: &Weight, cap: usize) -> Result<Vec<Weight>, VermaError> {
    let mut seen: HashSet<Weight> = HashSet::from([w.clone()]);
    let mut order = vec![w.clone()];
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(x) = queue.pop_front() {
        for i in 0..data.rank() {
            let y = x.simple_shifted_reflect(data, i)?;
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return Err(VermaError::OrbitCap(cap));
                }
                order.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(order)
}
