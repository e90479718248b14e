//! The maximal parabolic `𝔭 = 𝔪 ⊕ 𝔞 ⊕ 𝔫` with `𝔪 = sl(3,ℝ) ⊕ sl(2,ℝ)`
//! sitting on the simple roots `α1, α2` and `α4`, and the induction
//! signatures `χ = {n1, n2, c, n4}` attached to weights.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{ExactError, LinForm, Rational, SignClass, NUM_PARAMS};
use crate::rootsys::{RootSystem, RootVector};
use crate::verma::{VermaError, Weight};

/// Real dimension of `F'4`.
pub const DIM_G: usize = 52;
/// `dim 𝔨` for `𝔨 = sp(3) ⊕ su(2)`.
pub const DIM_K: usize = 24;
/// `dim 𝔮` in the Cartan decomposition `𝔤 = 𝔨 ⊕ 𝔮`.
pub const DIM_Q: usize = 28;
/// Split rank: `dim 𝔞_0`.
pub const DIM_A0: usize = 4;
/// `dim 𝔫_0` of the minimal parabolic.
pub const DIM_N0: usize = 24;
/// `dim 𝔞` of the maximal parabolic.
pub const DIM_A: usize = 1;
/// `dim 𝔫` of the maximal parabolic.
pub const DIM_N: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParabolicError {
    #[error(transparent)]
    Verma(#[from] VermaError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("c = {form} is {class}; signature is outside the generic regime")]
    OutsideGenericRegime {
        form: Box<LinForm>,
        class: SignClass,
    },
    #[error("sign of the parameter {form} at root {root} depends on the labels")]
    Indeterminate {
        root: RootVector,
        form: Box<LinForm>,
    },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

/// Data of a parabolic subalgebra: which simple roots span `𝔪`, and how the
/// `𝔞`-parameter `c` is read off the labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicSpec {
    m_simple: Vec<usize>,
    c_functional: [Rational; NUM_PARAMS],
    c_dual: RootVector,
    conformal_shift: Rational,
}

impl ParabolicSpec {
    /// `𝔪^ℂ = sl(3) ⊕ sl(2)` on `{α1, α2}` and `{α4}`, with
    /// `c = −(ℓ1 + ℓ2 + ℓ3 + ℓ4/2) = −(Λ+ρ, α1+α2+2α3+α4)` and `d = 7/2 + c`.
    pub fn f4_sl3_sl2() -> Self {
        let one = Rational::one();
        ParabolicSpec {
            m_simple: vec![0, 1, 3],
            c_functional: [-&one, -&one, -&one, -Rational::half()],
            c_dual: RootVector::new([1, 1, 2, 1]),
            conformal_shift: Rational::new(7, 2).expect("nonzero denominator"),
        }
    }

    pub fn new(
        m_simple: Vec<usize>,
        c_functional: [Rational; NUM_PARAMS],
        c_dual: RootVector,
        conformal_shift: Rational,
    ) -> Self {
        ParabolicSpec {
            m_simple,
            c_functional,
            c_dual,
            conformal_shift,
        }
    }

    /// Simple-root indices (0-based) spanning `𝔪`.
    pub fn m_simple(&self) -> &[usize] {
        &self.m_simple
    }

    pub fn conformal_shift(&self) -> &Rational {
        &self.conformal_shift
    }

    /// `c` through the label functional.
    pub fn c_from_labels(&self, w: &Weight) -> LinForm {
        w.labels()
            .iter()
            .zip(&self.c_functional)
            .map(|(l, k)| l.scale(k))
            .sum()
    }

    /// `c = −(Λ+ρ, γ)` evaluated in the invariant form, with
    /// `(Λ+ρ, α_j) = ℓ_j (α_j, α_j)/2`.
    pub fn c_from_form(&self, rs: &RootSystem, w: &Weight) -> LinForm {
        let data = rs.data();
        let pairing: LinForm = self
            .c_dual
            .coords()
            .iter()
            .enumerate()
            .map(|(j, g)| {
                w.label(j)
                    .scale(&(Rational::integer(*g) * data.halfnorm(j)))
            })
            .sum();
        -pairing
    }

    /// All labels on the `𝔪` simple roots are positive, i.e. `V_μ` is finite-dimensional.
    pub fn is_m_dominant(&self, w: &Weight) -> bool {
        self.m_simple
            .iter()
            .all(|&j| w.label(j).sign_over_positive() == SignClass::GenericPositive)
    }
}

/// Split of `Δ+` into roots of `𝔪^ℂ` and the rest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootPartition {
    pub compact: Vec<RootVector>,
    pub noncompact: Vec<RootVector>,
}

pub fn classify_roots(rs: &RootSystem, p: &ParabolicSpec) -> RootPartition {
    let (compact, noncompact) = rs
        .positive()
        .iter()
        .cloned()
        .partition(|r| r.support().iter().all(|j| p.m_simple.contains(j)));
    RootPartition {
        compact,
        noncompact,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    #[serde(rename = "-")]
    Minus,
    #[serde(rename = "+")]
    Plus,
}

impl Side {
    pub fn flipped(self) -> Side {
        match self {
            Side::Minus => Side::Plus,
            Side::Plus => Side::Minus,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Side::Minus => "-",
            Side::Plus => "+",
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Induction signature `χ = {n1, n2, c, n4}`; `side` follows the sign of `c`
/// and `d = shift + c` is the conformal weight.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Signature {
    pub n1: LinForm,
    pub n2: LinForm,
    pub c: LinForm,
    pub n4: LinForm,
    side: Side,
    d: LinForm,
}

impl Signature {
    pub fn side(&self) -> Side {
        self.side
    }

    pub fn d(&self) -> &LinForm {
        &self.d
    }

    /// The four entries, ignoring side and `d`.
    pub fn entries(&self) -> [&LinForm; 4] {
        [&self.n1, &self.n2, &self.c, &self.n4]
    }

    /// Evaluates all entries at concrete labels. The side is kept: for
    /// positive labels a generic sign cannot change.
    pub fn eval(&self, values: &[i64; NUM_PARAMS]) -> Signature {
        let e = |f: &LinForm| LinForm::constant(f.eval_ints(values));
        Signature {
            n1: e(&self.n1),
            n2: e(&self.n2),
            c: e(&self.c),
            n4: e(&self.n4),
            side: self.side,
            d: e(&self.d),
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}, {}, {}}}", self.n1, self.n2, self.c, self.n4)
    }
}

impl fmt::Debug for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "χ{}{self}", self.side)
    }
}

fn side_of(c: &LinForm) -> Result<Side, ParabolicError> {
    match c.sign_over_positive() {
        SignClass::GenericNegative => Ok(Side::Minus),
        SignClass::GenericPositive => Ok(Side::Plus),
        class => Err(ParabolicError::OutsideGenericRegime {
            form: Box::new(c.clone()),
            class,
        }),
    }
}

/// Signature of the elementary representation with highest weight `w`.
pub fn signature(
    rs: &RootSystem,
    w: &Weight,
    p: &ParabolicSpec,
) -> Result<Signature, ParabolicError> {
    let c = p.c_from_labels(w);
    let via_form = p.c_from_form(rs, w);
    if c != via_form {
        return Err(ParabolicError::Invariant(format!(
            "c from labels {c} differs from c via the invariant form {via_form}"
        )));
    }
    let side = side_of(&c)?;
    let d = &c + &LinForm::constant(p.conformal_shift.clone());
    Ok(Signature {
        n1: w.label(0).clone(),
        n2: w.label(1).clone(),
        c,
        n4: w.label(3).clone(),
        side,
        d,
    })
}

/// Knapp-Stein partner: `{n1, n2, c, n4} ↦ {n2, n1, −c, n4}`.
pub fn ks_dual(s: &Signature) -> Signature {
    Signature {
        n1: s.n2.clone(),
        n2: s.n1.clone(),
        c: -&s.c,
        n4: s.n4.clone(),
        side: s.side.flipped(),
        d: &s.d - &s.c.scale(&Rational::integer(2)),
    }
}

/// Harish-Chandra sign condition for discrete-series candidates: every
/// `𝔪`-noncompact parameter of `w` is negative.
pub fn discrete_series_check(
    rs: &RootSystem,
    w: &Weight,
    p: &ParabolicSpec,
) -> Result<bool, ParabolicError> {
    let partition = classify_roots(rs, p);
    let mut all_negative = true;
    for beta in &partition.noncompact {
        let m = w.hc_param(rs, beta)?;
        match m.sign_over_positive() {
            SignClass::GenericNegative => {}
            SignClass::GenericPositive | SignClass::Zero => all_negative = false,
            SignClass::Mixed => {
                return Err(ParabolicError::Indeterminate {
                    root: beta.clone(),
                    form: Box::new(m),
                })
            }
        }
    }
    Ok(all_negative)
}
