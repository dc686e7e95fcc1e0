//! Dense matrices over exact scalars.

use std::fmt::Debug;

use super::complex::ComplexAlgebraic;
use super::cyclotomic::CyclotomicElement;

/// Exact field element usable as a matrix entry.
pub trait Scalar: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn conj(&self) -> Self;
    /// `None` on division by zero.
    fn div(&self, o: &Self) -> Option<Self>;
    fn is_zero(&self) -> bool;
}

impl Scalar for CyclotomicElement {
    fn zero() -> Self {
        CyclotomicElement::zero()
    }
    fn one() -> Self {
        CyclotomicElement::one()
    }
    fn from_i64(v: i64) -> Self {
        CyclotomicElement::from_int(v)
    }
    fn add(&self, o: &Self) -> Self {
        CyclotomicElement::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        CyclotomicElement::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        CyclotomicElement::mul(self, o)
    }
    fn neg(&self) -> Self {
        CyclotomicElement::neg(self)
    }
    fn conj(&self) -> Self {
        CyclotomicElement::conj(self)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        CyclotomicElement::div(self, o).ok()
    }
    fn is_zero(&self) -> bool {
        CyclotomicElement::is_zero(self)
    }
}

impl Scalar for ComplexAlgebraic {
    fn zero() -> Self {
        ComplexAlgebraic::from_int(0)
    }
    fn one() -> Self {
        ComplexAlgebraic::from_int(1)
    }
    fn from_i64(v: i64) -> Self {
        ComplexAlgebraic::from_int(v)
    }
    fn add(&self, o: &Self) -> Self {
        ComplexAlgebraic::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        ComplexAlgebraic::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        ComplexAlgebraic::mul(self, o)
    }
    fn neg(&self) -> Self {
        ComplexAlgebraic::neg(self)
    }
    fn conj(&self) -> Self {
        ComplexAlgebraic::conj(self)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        ComplexAlgebraic::div(self, o).ok()
    }
    fn is_zero(&self) -> bool {
        ComplexAlgebraic::is_zero(self)
    }
}

pub type Matrix<T> = Vec<Vec<T>>;

pub fn from_ints<T: Scalar>(m: &[Vec<i64>]) -> Matrix<T> {
    m.iter().map(|r| r.iter().map(|&v| T::from_i64(v)).collect()).collect()
}

pub fn mat_mul<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut acc = T::zero();
                    for (k, aik) in a[i].iter().enumerate() {
                        if !aik.is_zero() && !b[k][j].is_zero() {
                            acc = acc.add(&aik.mul(&b[k][j]));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn conjugate<T: Scalar>(a: &Matrix<T>) -> Matrix<T> {
    a.iter().map(|r| r.iter().map(|x| x.conj()).collect()).collect()
}

pub fn transpose<T: Scalar>(a: &Matrix<T>) -> Matrix<T> {
    let m = a.first().map_or(0, |r| r.len());
    (0..m).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

/// First (i, j) with a_ij ≠ a_ji.
pub fn asymmetry<T: Scalar>(a: &Matrix<T>) -> Option<(usize, usize)> {
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if a[i][j] != a[j][i] {
                return Some((i, j));
            }
        }
    }
    None
}

/// First (i, j) where `a` differs from `c·b`.
pub fn differs_from_scaled<T: Scalar>(a: &Matrix<T>, c: &T, b: &Matrix<T>) -> Option<(usize, usize)> {
    for (i, row) in a.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            let target = if b[i][j].is_zero() { T::zero() } else { c.mul(&b[i][j]) };
            if *x != target {
                return Some((i, j));
            }
        }
    }
    None
}

pub fn identity<T: Scalar>(n: usize) -> Matrix<T> {
    (0..n).map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect()).collect()
}

/// Search for a permutation P and diagonal D′ with `s_prime = s·D′·P`.
///
/// Returns `(perm, scales)` meaning column `j` of `s_prime` equals
/// `scales[j]` times column `perm[j]` of `s`.
pub fn match_diagonalizers<T: Scalar>(s: &Matrix<T>, s_prime: &Matrix<T>) -> Option<(Vec<usize>, Vec<T>)> {
    let n = s.len();
    if s_prime.len() != n || s.iter().chain(s_prime).any(|r| r.len() != n) {
        return None;
    }
    // compat[j][k] = Some(scale) if column j of S′ is scale·(column k of S)
    let compat: Vec<Vec<Option<T>>> =
        (0..n).map(|j| (0..n).map(|k| column_ratio(s, k, s_prime, j)).collect()).collect();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if !assign(0, &compat, &mut perm, &mut used) {
        return None;
    }
    let scales = (0..n).map(|j| compat[j][perm[j]].clone().expect("matched")).collect();
    Some((perm, scales))
}

fn assign<T>(j: usize, compat: &[Vec<Option<T>>], perm: &mut [usize], used: &mut [bool]) -> bool {
    if j == compat.len() {
        return true;
    }
    for k in 0..compat.len() {
        if !used[k] && compat[j][k].is_some() {
            used[k] = true;
            perm[j] = k;
            if assign(j + 1, compat, perm, used) {
                return true;
            }
            used[k] = false;
        }
    }
    false
}

// Nonzero c with S′[·][j] = c·S[·][k], via the pivot-row cross-ratio test.
fn column_ratio<T: Scalar>(s: &Matrix<T>, k: usize, sp: &Matrix<T>, j: usize) -> Option<T> {
    let p = (0..s.len()).find(|&i| !s[i][k].is_zero())?;
    if sp[p][j].is_zero() {
        return None;
    }
    for i in 0..s.len() {
        if s[i][k].is_zero() != sp[i][j].is_zero() {
            return None;
        }
        if i != p && !s[i][k].is_zero() && sp[i][j].mul(&s[p][k]) != sp[p][j].mul(&s[i][k]) {
            return None;
        }
    }
    sp[p][j].div(&s[p][k])
}
