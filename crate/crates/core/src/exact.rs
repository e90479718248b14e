//! Exact rational scalars and degree-1 forms in the multiplet parameters
//! `m1..m4`.
//!
//! Every Harish-Chandra parameter that appears in a multiplet is an
//! integer-or-half-integer combination of the four Dynkin labels, so the
//! whole computation runs on [`LinForm`] values and is evaluated at concrete
//! labels only on demand.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Number of free parameters `m1..m4` of a multiplet.
pub const NUM_PARAMS: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("form {0} has a nonzero constant term; sign class needs a homogeneous form")]
    NonHomogeneous(String),
    #[error("product of two non-constant linear forms is not linear")]
    NonLinearProduct,
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("linear system is singular")]
    Singular,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
}

fn parse_err(input: &str, reason: impl Into<String>) -> ExactError {
    ExactError::Parse {
        input: input.to_string(),
        reason: reason.into(),
    }
}

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Result<Self, ExactError> {
        if denom == 0 {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), denom.into())))
    }

    pub fn from_big(numer: BigInt, denom: BigInt) -> Result<Self, ExactError> {
        if denom.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }

    pub fn integer(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn half() -> Self {
        Rational(BigRational::new(1.into(), 2.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The value as an `i64` if it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self, ExactError> {
        if rhs.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| parse_err(s, "bad numerator"))?;
        let den: BigInt = den.parse().map_err(|_| parse_err(s, "bad denominator"))?;
        if den.is_negative() {
            return Err(parse_err(s, "denominator must be positive"));
        }
        Rational::from_big(num, den)
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// Sign behaviour of a homogeneous form over all positive parameter values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignClass {
    /// All coefficients `>= 0`, at least one `> 0`.
    GenericPositive,
    /// All coefficients `<= 0`, at least one `< 0`.
    GenericNegative,
    Zero,
    /// Sign depends on the assignment.
    Mixed,
}

impl fmt::Display for SignClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SignClass::GenericPositive => "generic-positive",
            SignClass::GenericNegative => "generic-negative",
            SignClass::Zero => "zero",
            SignClass::Mixed => "mixed",
        };
        f.write_str(s)
    }
}

/// `c1*m1 + c2*m2 + c3*m3 + c4*m4 + constant` with exact rational coefficients.
///
/// Parameter indices are 0-based in the API (`coeff(0)` is the coefficient
/// of `m1`); the text form uses the 1-based names.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinForm {
    coeffs: [Rational; NUM_PARAMS],
    constant: Rational,
}

impl LinForm {
    pub fn new(coeffs: [Rational; NUM_PARAMS], constant: Rational) -> Self {
        LinForm { coeffs, constant }
    }

    pub fn zero() -> Self {
        LinForm {
            coeffs: std::array::from_fn(|_| Rational::zero()),
            constant: Rational::zero(),
        }
    }

    /// The basis form `m_{index+1}`.
    ///
    /// Panics if `index >= NUM_PARAMS`.
    pub fn basis(index: usize) -> Self {
        assert!(index < NUM_PARAMS, "parameter index {index} out of range");
        let mut f = LinForm::zero();
        f.coeffs[index] = Rational::one();
        f
    }

    pub fn constant(value: Rational) -> Self {
        LinForm {
            coeffs: std::array::from_fn(|_| Rational::zero()),
            constant: value,
        }
    }

    /// Homogeneous form with small integer coefficients.
    pub fn from_ints(coeffs: [i64; NUM_PARAMS]) -> Self {
        LinForm {
            coeffs: coeffs.map(Rational::integer),
            constant: Rational::zero(),
        }
    }

    pub fn coeffs(&self) -> &[Rational; NUM_PARAMS] {
        &self.coeffs
    }

    pub fn coeff(&self, index: usize) -> &Rational {
        &self.coeffs[index]
    }

    pub fn constant_term(&self) -> &Rational {
        &self.constant
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.is_homogeneous_zero()
    }

    fn is_homogeneous_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.constant.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.is_homogeneous_zero()
    }

    pub fn as_constant(&self) -> Option<&Rational> {
        self.is_constant().then_some(&self.constant)
    }

    /// `Some(i)` iff the form is exactly the basis form `m_{i+1}`.
    pub fn basis_index(&self) -> Option<usize> {
        if !self.constant.is_zero() {
            return None;
        }
        let mut found = None;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if found.is_some() || *c != Rational::one() {
                return None;
            }
            found = Some(i);
        }
        found
    }

    pub fn eval(&self, values: &[Rational; NUM_PARAMS]) -> Rational {
        self.coeffs
            .iter()
            .zip(values)
            .map(|(c, v)| c * v)
            .sum::<Rational>()
            + &self.constant
    }

    pub fn eval_ints(&self, values: &[i64; NUM_PARAMS]) -> Rational {
        self.eval(&values.map(Rational::integer))
    }

    /// Substitutes `m_i -> subst[i]`, which are forms themselves.
    pub fn compose(&self, subst: &[LinForm; NUM_PARAMS]) -> LinForm {
        let mut out = LinForm::constant(self.constant.clone());
        for (c, f) in self.coeffs.iter().zip(subst) {
            if !c.is_zero() {
                out += &f.scale(c);
            }
        }
        out
    }

    pub fn scale(&self, k: &Rational) -> LinForm {
        LinForm {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] * k),
            constant: &self.constant * k,
        }
    }

    /// Product of two forms; defined only when at least one side is constant.
    pub fn checked_mul(&self, rhs: &LinForm) -> Result<LinForm, ExactError> {
        match (self.as_constant(), rhs.as_constant()) {
            (Some(k), _) => Ok(rhs.scale(k)),
            (_, Some(k)) => Ok(self.scale(k)),
            _ => Err(ExactError::NonLinearProduct),
        }
    }

    pub fn sign_class(&self) -> Result<SignClass, ExactError> {
        if !self.constant.is_zero() {
            return Err(ExactError::NonHomogeneous(self.to_string()));
        }
        let any_pos = self.coeffs.iter().any(Rational::is_positive);
        let any_neg = self.coeffs.iter().any(Rational::is_negative);
        Ok(match (any_pos, any_neg) {
            (true, false) => SignClass::GenericPositive,
            (false, true) => SignClass::GenericNegative,
            (false, false) => SignClass::Zero,
            (true, true) => SignClass::Mixed,
        })
    }

    /// Sign over all assignments with every `m_i > 0`, constant term included.
    /// Constants classify by their value; for example `m1+1` is generic-positive.
    pub fn sign_over_positive(&self) -> SignClass {
        let pos = self
            .coeffs
            .iter()
            .chain([&self.constant])
            .any(Rational::is_positive);
        let neg = self
            .coeffs
            .iter()
            .chain([&self.constant])
            .any(Rational::is_negative);
        match (pos, neg) {
            (true, false) => SignClass::GenericPositive,
            (false, true) => SignClass::GenericNegative,
            (false, false) => SignClass::Zero,
            (true, true) => SignClass::Mixed,
        }
    }
}

impl Add<&LinForm> for &LinForm {
    type Output = LinForm;
    fn add(self, rhs: &LinForm) -> LinForm {
        LinForm {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] + &rhs.coeffs[i]),
            constant: &self.constant + &rhs.constant,
        }
    }
}

impl Add for LinForm {
    type Output = LinForm;
    fn add(self, rhs: LinForm) -> LinForm {
        &self + &rhs
    }
}

impl Sub<&LinForm> for &LinForm {
    type Output = LinForm;
    fn sub(self, rhs: &LinForm) -> LinForm {
        LinForm {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] - &rhs.coeffs[i]),
            constant: &self.constant - &rhs.constant,
        }
    }
}

impl Sub for LinForm {
    type Output = LinForm;
    fn sub(self, rhs: LinForm) -> LinForm {
        &self - &rhs
    }
}

impl Neg for &LinForm {
    type Output = LinForm;
    fn neg(self) -> LinForm {
        LinForm {
            coeffs: std::array::from_fn(|i| -&self.coeffs[i]),
            constant: -&self.constant,
        }
    }
}

impl Neg for LinForm {
    type Output = LinForm;
    fn neg(self) -> LinForm {
        -&self
    }
}

impl Mul<&Rational> for &LinForm {
    type Output = LinForm;
    fn mul(self, rhs: &Rational) -> LinForm {
        self.scale(rhs)
    }
}

impl AddAssign<&LinForm> for LinForm {
    fn add_assign(&mut self, rhs: &LinForm) {
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.constant += &rhs.constant;
    }
}

impl SubAssign<&LinForm> for LinForm {
    fn sub_assign(&mut self, rhs: &LinForm) {
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        self.constant -= &rhs.constant;
    }
}

impl Sum for LinForm {
    fn sum<I: Iterator<Item = LinForm>>(iter: I) -> Self {
        iter.fold(LinForm::zero(), |acc, x| acc + x)
    }
}

/// Canonical rendering: terms in order `m1..m4`, then the constant;
/// unit coefficients are elided, others written `p/q*mi`. The zero form is `0`.
impl fmt::Display for LinForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut term = |f: &mut fmt::Formatter<'_>, c: &Rational, var: Option<usize>| {
            let sign = if c.is_negative() {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            first = false;
            let mag = c.abs();
            match var {
                Some(i) if mag == Rational::one() => write!(f, "{sign}m{}", i + 1),
                Some(i) => write!(f, "{sign}{mag}*m{}", i + 1),
                None => write!(f, "{sign}{mag}"),
            }
        };
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                term(f, c, Some(i))?;
            }
        }
        if !self.constant.is_zero() {
            term(f, &self.constant, None)?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LinForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinForm({self})")
    }
}

/// Parses the canonical syntax and a few lenient variants: whitespace,
/// repeated variables (`m1+m1`), and juxtaposed coefficients (`2m1`).
impl FromStr for LinForm {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(parse_err(s, "empty form"));
        }
        let bytes = compact.as_bytes();
        let mut out = LinForm::zero();
        let mut pos = 0;
        while pos < bytes.len() {
            let negative = match bytes[pos] {
                b'+' => {
                    pos += 1;
                    false
                }
                b'-' => {
                    pos += 1;
                    true
                }
                _ if pos == 0 => false,
                other => {
                    return Err(parse_err(s, format!("unexpected {:?}", other as char)));
                }
            };
            let start = pos;
            while pos < bytes.len() && (bytes[pos].is_ascii_digit() || bytes[pos] == b'/') {
                pos += 1;
            }
            let coef = if pos > start {
                compact[start..pos].parse::<Rational>()?
            } else {
                Rational::one()
            };
            let had_coef = pos > start;
            if pos < bytes.len() && bytes[pos] == b'*' {
                if !had_coef {
                    return Err(parse_err(s, "'*' without coefficient"));
                }
                pos += 1;
                if pos >= bytes.len() || bytes[pos] != b'm' {
                    return Err(parse_err(s, "expected variable after '*'"));
                }
            }
            let coef = if negative { -coef } else { coef };
            if pos < bytes.len() && bytes[pos] == b'm' {
                pos += 1;
                let var_start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                let idx: usize = compact[var_start..pos]
                    .parse()
                    .map_err(|_| parse_err(s, "missing variable index"))?;
                if !(1..=NUM_PARAMS).contains(&idx) {
                    return Err(parse_err(s, format!("variable m{idx} out of range")));
                }
                out.coeffs[idx - 1] += &coef;
            } else if had_coef {
                out.constant += &coef;
            } else {
                return Err(parse_err(s, "empty term"));
            }
        }
        Ok(out)
    }
}

impl Serialize for LinForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LinForm {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// Solves the square system `matrix * x = rhs` by Gaussian elimination.
pub fn solve(matrix: &[Vec<Rational>], rhs: &[Rational]) -> Result<Vec<Rational>, ExactError> {
    let n = matrix.len();
    if rhs.len() != n {
        return Err(ExactError::Dimension {
            expected: n,
            got: rhs.len(),
        });
    }
    let mut aug: Vec<Vec<Rational>> = Vec::with_capacity(n);
    for (row, b) in matrix.iter().zip(rhs) {
        if row.len() != n {
            return Err(ExactError::Dimension {
                expected: n,
                got: row.len(),
            });
        }
        let mut r = row.clone();
        r.push(b.clone());
        aug.push(r);
    }
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !aug[r][col].is_zero())
            .ok_or(ExactError::Singular)?;
        aug.swap(col, pivot);
        let inv = aug[col][col].recip()?;
        for v in aug[col].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = aug[col].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x -= &(&factor * p);
            }
        }
    }
    Ok(aug
        .into_iter()
        .map(|mut r| r.pop().expect("augmented column"))
        .collect())
}
