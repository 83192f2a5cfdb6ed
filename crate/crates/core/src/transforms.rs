//! Integer polynomials and the f/h/g/gamma vector transforms.
//!
//! Every value here is an arbitrary-precision integer. Polynomials and count
//! vectors compare equal when they agree after trailing zeros are stripped.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Polynomial with exact integer coefficients, `coeffs[i]` is the coefficient of `t^i`.
#[derive(Clone, Debug, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        Self { coeffs }
    }

    pub fn from_ints<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Self::new(coeffs.into_iter().map(Into::into).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn monomial(coeff: BigInt, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = coeff;
        Self { coeffs }
    }

    /// `(1 + t)^n`.
    pub fn one_plus_t_pow(n: usize) -> Self {
        Self::new((0..=n).map(|k| binomial(n, k as i64)).collect())
    }

    /// `(1 - t)^n`.
    pub fn one_minus_t_pow(n: usize) -> Self {
        Self::new(
            (0..=n)
                .map(|k| {
                    let b = binomial(n, k as i64);
                    if k % 2 == 0 {
                        b
                    } else {
                        -b
                    }
                })
                .collect(),
        )
    }

    /// Raw coefficients, possibly with trailing zeros.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficients without trailing zeros.
    pub fn trimmed(&self) -> &[BigInt] {
        let len = self
            .coeffs
            .iter()
            .rposition(|c| !c.is_zero())
            .map_or(0, |p| p + 1);
        &self.coeffs[..len]
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Degree of the polynomial, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.trimmed().len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.trimmed().is_empty()
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Whether `p_i = p_{degree - i}` for `0 <= i <= degree` and nothing lives above `degree`.
    pub fn is_symmetric(&self, degree: usize) -> bool {
        self.first_asymmetry(degree).is_none()
    }

    fn first_asymmetry(&self, degree: usize) -> Option<usize> {
        (0..=degree).find(|&i| self.coeff(i) != self.coeff(degree - i))
    }

    /// Evaluates at an integer point.
    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }
}

impl PartialEq for IntPolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl Eq for IntPolynomial {}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .trimmed()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let mag = c.abs();
                let sign = if c.is_negative() { "-" } else { "+" };
                let body = match (i, mag.is_one()) {
                    (0, _) => mag.to_string(),
                    (1, true) => "t".to_string(),
                    (1, false) => format!("{mag}t"),
                    (_, true) => format!("t^{i}"),
                    (_, false) => format!("{mag}t^{i}"),
                };
                format!("{sign}{body}")
            })
            .collect();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, term) in terms.iter().enumerate() {
            let (sign, body) = term.split_at(1);
            match (k, sign) {
                (0, "-") => write!(f, "-{body}")?,
                (0, _) => write!(f, "{body}")?,
                (_, s) => write!(f, " {s} {body}")?,
            }
        }
        Ok(())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: IntPolynomial) -> IntPolynomial {
        &self + &rhs
    }
}

impl AddAssign<&IntPolynomial> for IntPolynomial {
    fn add_assign(&mut self, rhs: &IntPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        let (a, b) = (self.trimmed(), rhs.trimmed());
        if a.is_empty() || b.is_empty() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

impl Sum for IntPolynomial {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(IntPolynomial::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

/// Which classical vector a [`CountVector`] holds. Metadata only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    F,
    H,
    G,
    Gamma,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Role::F => "f",
            Role::H => "h",
            Role::G => "g",
            Role::Gamma => "gamma",
        })
    }
}

/// Exact integer sequence used as an f-, h-, g- or gamma-vector.
///
/// Equality ignores the role and trailing zeros, so `(1, 8)` and `(1, 8, 0)`
/// are the same vector.
#[derive(Clone, Debug)]
pub struct CountVector {
    entries: Vec<BigInt>,
    role: Role,
}

impl CountVector {
    pub fn new(role: Role, entries: Vec<BigInt>) -> Self {
        Self { entries, role }
    }

    pub fn from_ints<I, T>(role: Role, entries: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Self::new(role, entries.into_iter().map(Into::into).collect())
    }

    pub fn f<I: IntoIterator<Item = i64>>(entries: I) -> Self {
        Self::from_ints(Role::F, entries)
    }

    pub fn h<I: IntoIterator<Item = i64>>(entries: I) -> Self {
        Self::from_ints(Role::H, entries)
    }

    pub fn g<I: IntoIterator<Item = i64>>(entries: I) -> Self {
        Self::from_ints(Role::G, entries)
    }

    pub fn gamma<I: IntoIterator<Item = i64>>(entries: I) -> Self {
        Self::from_ints(Role::Gamma, entries)
    }

    pub fn zeros(role: Role, len: usize) -> Self {
        Self::new(role, vec![BigInt::zero(); len])
    }

    pub fn role(&self) -> Role {
        self.role
    }

    pub fn with_role(mut self, role: Role) -> Self {
        self.role = role;
        self
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<BigInt> {
        self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entry `i`, zero past the end.
    pub fn get(&self, i: usize) -> BigInt {
        self.entries.get(i).cloned().unwrap_or_default()
    }

    /// Length once trailing zeros are removed.
    pub fn support_len(&self) -> usize {
        self.entries
            .iter()
            .rposition(|c| !c.is_zero())
            .map_or(0, |p| p + 1)
    }

    pub fn trimmed(&self) -> CountVector {
        Self::new(self.role, self.entries[..self.support_len()].to_vec())
    }

    pub fn padded(&self, len: usize) -> CountVector {
        let mut entries = self.entries.clone();
        if entries.len() < len {
            entries.resize(len, BigInt::zero());
        }
        Self::new(self.role, entries)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|c| !c.is_negative())
    }

    /// `v_i = v_{len-1-i}` for all `i`.
    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetry().is_none()
    }

    /// First index `i` with `v_i != v_{len-1-i}`.
    pub fn first_asymmetry(&self) -> Option<usize> {
        let n = self.entries.len();
        (0..n).find(|&i| self.entries[i] != self.entries[n - 1 - i])
    }

    /// The vector `(0, v_0, v_1, ...)`.
    pub fn shifted(&self) -> CountVector {
        let mut entries = Vec::with_capacity(self.entries.len() + 1);
        entries.push(BigInt::zero());
        entries.extend(self.entries.iter().cloned());
        Self::new(self.role, entries)
    }

    pub fn scale(&self, c: &BigInt) -> CountVector {
        Self::new(self.role, self.entries.iter().map(|x| x * c).collect())
    }

    pub fn to_polynomial(&self) -> IntPolynomial {
        IntPolynomial::new(self.entries.clone())
    }

    pub fn from_polynomial(role: Role, p: &IntPolynomial, len: usize) -> CountVector {
        Self::new(role, (0..len).map(|i| p.coeff(i)).collect())
    }
}

impl PartialEq for CountVector {
    fn eq(&self, other: &Self) -> bool {
        self.entries[..self.support_len()] == other.entries[..other.support_len()]
    }
}

impl Eq for CountVector {}

impl std::hash::Hash for CountVector {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.entries[..self.support_len()].hash(state);
    }
}

impl fmt::Display for CountVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl Add for &CountVector {
    type Output = CountVector;

    fn add(self, rhs: &CountVector) -> CountVector {
        let len = self.len().max(rhs.len());
        CountVector::new(self.role, (0..len).map(|i| self.get(i) + rhs.get(i)).collect())
    }
}

impl AddAssign<&CountVector> for CountVector {
    fn add_assign(&mut self, rhs: &CountVector) {
        if self.entries.len() < rhs.entries.len() {
            self.entries.resize(rhs.entries.len(), BigInt::zero());
        }
        for (a, b) in self.entries.iter_mut().zip(&rhs.entries) {
            *a += b;
        }
    }
}

/// `binom(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: usize, k: i64) -> BigInt {
    if k < 0 || k as usize > n {
        return BigInt::zero();
    }
    let k = (k as usize).min(n - k as usize);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn check_len(v: &CountVector, expected: usize) -> Result<()> {
    if v.len() != expected {
        return Err(Error::DimensionMismatch {
            expected,
            found: v.len(),
        });
    }
    Ok(())
}

/// h-vector of a `(d-1)`-dimensional complex from its f-vector:
/// `h(t) = sum_i f_i t^i (1-t)^(d-i)`.
pub fn h_from_f(f: &CountVector, d: usize) -> Result<CountVector> {
    check_len(f, d + 1)?;
    let h: IntPolynomial = f
        .entries()
        .iter()
        .enumerate()
        .map(|(i, fi)| IntPolynomial::one_minus_t_pow(d - i).shift(i).scale(fi))
        .sum();
    Ok(CountVector::from_polynomial(Role::H, &h, d + 1))
}

/// Inverse of [`h_from_f`]: `f(t) = sum_i h_i t^i (1+t)^(d-i)`.
pub fn f_from_h(h: &CountVector, d: usize) -> Result<CountVector> {
    check_len(h, d + 1)?;
    let f: IntPolynomial = h
        .entries()
        .iter()
        .enumerate()
        .map(|(i, hi)| IntPolynomial::one_plus_t_pow(d - i).shift(i).scale(hi))
        .sum();
    Ok(CountVector::from_polynomial(Role::F, &f, d + 1))
}

/// `(g_0, ..., g_{floor(d/2)})` with `g_0 = h_0` and `g_i = h_i - h_{i-1}`, where `d = len(h) - 1`.
pub fn g_from_h(h: &CountVector) -> CountVector {
    let d = h.len().saturating_sub(1);
    let entries = (0..=d / 2)
        .map(|i| {
            if i == 0 {
                h.get(0)
            } else {
                h.get(i) - h.get(i - 1)
            }
        })
        .collect();
    CountVector::new(Role::G, entries)
}

/// Gamma-vector of a polynomial symmetric about `degree / 2`, i.e. the
/// coefficients of `p` in the basis `t^i (1+t)^(degree-2i)`.
pub fn gamma_from_symmetric(p: &IntPolynomial, degree: usize) -> Result<CountVector> {
    if let Some(deg) = p.degree() {
        if deg > degree {
            return Err(Error::DegreeExceeded { degree: deg, bound: degree });
        }
    }
    if let Some(index) = p.first_asymmetry(degree) {
        return Err(Error::SymmetryViolation {
            index,
            mirror: degree - index,
            degree,
        });
    }
    // Peel basis elements off from the bottom; symmetry makes the residue vanish.
    let mut residue = p.clone();
    let mut gamma = Vec::with_capacity(degree / 2 + 1);
    for i in 0..=degree / 2 {
        let c = residue.coeff(i);
        if !c.is_zero() {
            residue = &residue - &IntPolynomial::one_plus_t_pow(degree - 2 * i).shift(i).scale(&c);
        }
        gamma.push(c);
    }
    debug_assert!(residue.is_zero());
    Ok(CountVector::new(Role::Gamma, gamma))
}

/// `sum_i gamma_i t^i (1+t)^(degree-2i)`.
pub fn gamma_to_poly(gamma: &CountVector, degree: usize) -> Result<IntPolynomial> {
    if gamma.len() > degree / 2 + 1 {
        return Err(Error::DimensionMismatch {
            expected: degree / 2 + 1,
            found: gamma.len(),
        });
    }
    Ok(gamma
        .entries()
        .iter()
        .enumerate()
        .map(|(i, g)| IntPolynomial::one_plus_t_pow(degree - 2 * i).shift(i).scale(g))
        .sum())
}

/// The full symmetric h-vector `(h_0, ..., h_d)` with the given gamma-vector.
pub fn h_from_gamma(gamma: &CountVector, d: usize) -> Result<CountVector> {
    let p = gamma_to_poly(gamma, d)?;
    Ok(CountVector::from_polynomial(Role::H, &p, d + 1))
}

/// `h_i = sum_j gamma_j binom(d-2j, i-j)` for `0 <= i <= floor(d/2)` (the lower half of h).
pub fn h_half_from_gamma(gamma: &CountVector, d: usize) -> Result<CountVector> {
    gamma_matrix_apply(gamma, d, |n, k| binomial(n, k))
}

/// `g_i = sum_j gamma_j (binom(d-2j, i-j) - binom(d-2j, i-j-1))`.
pub fn g_from_gamma(gamma: &CountVector, d: usize) -> Result<CountVector> {
    gamma_matrix_apply(gamma, d, |n, k| binomial(n, k) - binomial(n, k - 1))
        .map(|v| v.with_role(Role::G))
}

fn gamma_matrix_apply(
    gamma: &CountVector,
    d: usize,
    entry: impl Fn(usize, i64) -> BigInt,
) -> Result<CountVector> {
    if gamma.len() > d / 2 + 1 {
        return Err(Error::DimensionMismatch {
            expected: d / 2 + 1,
            found: gamma.len(),
        });
    }
    let out = (0..=d / 2)
        .map(|i| {
            (0..=i)
                .map(|j| gamma.get(j) * entry(d - 2 * j, i as i64 - j as i64))
                .sum()
        })
        .collect();
    Ok(CountVector::new(Role::H, out))
}
