//! Elements of cyclotomic fields ℚ(ζ_n) in the power basis 1, ζ, …, ζ^(φ(n)−1).

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::complex::ComplexAlgebraic;
use super::poly::{rat_divrem, rat_mul, IntPoly, Rat};
use super::real::AlgebraicReal;
use super::AlgebraError;

static PHI_CACHE: OnceLock<RwLock<HashMap<u32, Arc<Vec<Rat>>>>> = OnceLock::new();

/// Coefficients of the n-th cyclotomic polynomial Φ_n.
pub fn cyclotomic_poly(n: u32) -> Arc<Vec<Rat>> {
    let cache = PHI_CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(p) = cache.read().unwrap().get(&n) {
        return p.clone();
    }
    // x^n − 1 = ∏_{d | n} Φ_d
    let mut num = vec![Rat::zero(); n as usize + 1];
    num[0] = -Rat::one();
    num[n as usize] = Rat::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let (q, r) = rat_divrem(&num, &cyclotomic_poly(d));
            debug_assert!(r.is_empty());
            num = q;
        }
    }
    let p = Arc::new(num);
    cache.write().unwrap().insert(n, p.clone());
    p
}

fn totient(n: u32) -> usize {
    (1..=n).filter(|k| k.gcd(&n) == 1).count()
}

/// Element of ℚ(ζ_n), ζ_n = exp(2πi/n).
///
/// Equality compares after lifting both sides to the lcm conductor, so
/// elements of different stated conductors compare correctly.
#[derive(Clone, Debug)]
pub struct CyclotomicElement {
    n: u32,
    c: Vec<Rat>,
}

impl CyclotomicElement {
    fn reduce(n: u32, c: Vec<Rat>) -> Self {
        let phi = cyclotomic_poly(n);
        let (_, mut r) = rat_divrem(&c, &phi);
        r.resize(phi.len() - 1, Rat::zero());
        CyclotomicElement { n, c: r }
    }

    /// Element with the given coefficients of 1, ζ_n, ζ_n², …
    pub fn from_coeffs(n: u32, c: Vec<Rat>) -> Result<Self, AlgebraError> {
        if n == 0 {
            return Err(AlgebraError::BadConductor);
        }
        Ok(Self::reduce(n, c))
    }

    pub fn from_rational(q: Rat) -> Self {
        CyclotomicElement { n: 1, c: vec![q] }
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(Rat::from_integer(BigInt::from(v)))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// ζ_n^k.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        let e = k.rem_euclid(n as i64) as usize;
        let mut c = vec![Rat::zero(); e + 1];
        c[e] = Rat::one();
        Self::reduce(n, c)
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    /// Re-express in ℚ(ζ_m); requires n | m.
    pub fn lift(&self, m: u32) -> Self {
        assert!(m.is_multiple_of(self.n), "conductor {} does not divide {}", self.n, m);
        if m == self.n {
            return self.clone();
        }
        let step = (m / self.n) as usize;
        let mut c = vec![Rat::zero(); (self.c.len().max(1) - 1) * step + 1];
        for (i, a) in self.c.iter().enumerate() {
            c[i * step] = a.clone();
        }
        Self::reduce(m, c)
    }

    fn common(&self, o: &Self) -> (Self, Self) {
        let m = self.n.lcm(&o.n);
        (self.lift(m), o.lift(m))
    }

    pub fn add(&self, o: &Self) -> Self {
        let (a, b) = self.common(o);
        CyclotomicElement { n: a.n, c: a.c.iter().zip(&b.c).map(|(x, y)| x + y).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        CyclotomicElement { n: self.n, c: self.c.iter().map(|x| -x).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (a, b) = self.common(o);
        Self::reduce(a.n, rat_mul(&a.c, &b.c))
    }

    pub fn scale(&self, q: &Rat) -> Self {
        CyclotomicElement { n: self.n, c: self.c.iter().map(|x| x * q).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// The Galois automorphism ζ ↦ ζ^k (k coprime to the conductor).
    pub fn galois(&self, k: i64) -> Self {
        let n = self.n as i64;
        let mut c = vec![Rat::zero(); self.n as usize];
        for (i, a) in self.c.iter().enumerate() {
            let e = (i as i64 * k).rem_euclid(n) as usize;
            c[e] += a;
        }
        Self::reduce(self.n, c)
    }

    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn as_rational(&self) -> Option<Rat> {
        if self.c.iter().skip(1).all(|x| x.is_zero()) {
            Some(self.c.first().cloned().unwrap_or_else(Rat::zero))
        } else {
            None
        }
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// Multiplicative inverse via the norm: x⁻¹ = (∏_{σ ≠ 1} σx) / N(x).
    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rational(q.recip()));
        }
        let n = self.n as i64;
        let mut prod = Self::one();
        for k in 2..n {
            if k.gcd(&n) == 1 {
                prod = prod.mul(&self.galois(k));
            }
        }
        let norm = self.mul(&prod).as_rational().expect("norm is rational");
        Ok(prod.scale(&norm.recip()))
    }

    pub fn div(&self, o: &Self) -> Result<Self, AlgebraError> {
        Ok(self.mul(&o.inverse()?))
    }

    pub fn to_complex64(&self) -> Complex64 {
        let w = 2.0 * std::f64::consts::PI / self.n as f64;
        self.c
            .iter()
            .enumerate()
            .map(|(k, a)| Complex64::from_polar(a.to_f64().unwrap_or(f64::NAN), w * k as f64))
            .sum()
    }

    /// Distinct Galois conjugates, in order of the exponent k.
    pub fn conjugates(&self) -> Vec<Self> {
        let n = self.n as i64;
        let mut out: Vec<Self> = vec![];
        for k in 1..=n.max(1) {
            if k.gcd(&n) != 1 {
                continue;
            }
            let g = self.galois(k);
            if !out.contains(&g) {
                out.push(g);
            }
        }
        out
    }

    /// Monic minimal polynomial over ℚ, ascending coefficients.
    pub fn minimal_polynomial(&self) -> Vec<Rat> {
        let mut p = vec![Self::one()];
        for g in self.conjugates() {
            // p ← p·(X − g)
            let mut np = vec![Self::zero(); p.len() + 1];
            for (i, a) in p.iter().enumerate() {
                np[i + 1] = np[i + 1].add(a);
                np[i] = np[i].sub(&a.mul(&g));
            }
            p = np;
        }
        p.iter().map(|a| a.as_rational().expect("rational coefficient")).collect()
    }

    /// Convert a real element to an exact [`AlgebraicReal`].
    pub fn to_algebraic_real(&self) -> Result<AlgebraicReal, AlgebraError> {
        if let Some(q) = self.as_rational() {
            return Ok(AlgebraicReal::from_rational(q));
        }
        if !self.is_real() {
            return Err(AlgebraError::NotReal);
        }
        let poly = IntPoly::from_rat(&self.minimal_polynomial());
        // The floating value only picks which conjugate is meant; Sturm
        // certifies that the window holds exactly one root.
        let v = self.to_complex64().re;
        let mag: f64 = self.c.iter().map(|a| a.abs().to_f64().unwrap_or(f64::INFINITY)).sum();
        let err = 1e-9 * (1.0 + mag);
        AlgebraicReal::from_approximation(&poly, v, err)
    }

    /// Convert to an exact complex number (real and imaginary parts).
    pub fn to_complex_algebraic(&self) -> Result<ComplexAlgebraic, AlgebraError> {
        let half = Rat::new(BigInt::one(), BigInt::from(2));
        let cj = self.conj();
        let re = self.add(&cj).scale(&half);
        // (x − x̄)/(2i) = −i(x − x̄)/2
        let minus_i = Self::root_of_unity(4, 3);
        let im = self.sub(&cj).mul(&minus_i).scale(&half);
        Ok(ComplexAlgebraic::new(re.to_algebraic_real()?, im.to_algebraic_real()?))
    }

    /// Re-express in the smallest conductor dividing the current one that
    /// still contains the element.
    pub fn simplify_conductor(&self) -> Self {
        let mut divisors: Vec<u32> = (1..=self.n).filter(|d| self.n.is_multiple_of(*d)).collect();
        divisors.sort_unstable();
        for d in divisors {
            if d == self.n {
                break;
            }
            if let Some(e) = self.try_descend(d) {
                return e;
            }
        }
        self.clone()
    }

    // Express self in ℚ(ζ_d) if possible: lift a generic element of ℚ(ζ_d)
    // and solve the linear system over ℚ.
    fn try_descend(&self, d: u32) -> Option<Self> {
        let k = totient(d);
        let images: Vec<Self> = (0..k).map(|i| Self::root_of_unity(d, i as i64).lift(self.n)).collect();
        let rows = self.c.len();
        // augmented matrix: rows × (k + 1)
        let mut m: Vec<Vec<Rat>> = (0..rows)
            .map(|r| {
                let mut row: Vec<Rat> = images.iter().map(|e| e.c[r].clone()).collect();
                row.push(self.c[r].clone());
                row
            })
            .collect();
        let mut pivots = vec![];
        let mut row = 0;
        for col in 0..k {
            let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else { continue };
            m.swap(row, p);
            let inv = m[row][col].recip();
            for x in m[row].iter_mut() {
                *x *= &inv;
            }
            for r in 0..rows {
                if r != row && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for cc in 0..=k {
                        let v = &m[row][cc] * &f;
                        m[r][cc] -= v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        if m[row..].iter().any(|r| !r[k].is_zero()) {
            return None;
        }
        let mut c = vec![Rat::zero(); k];
        for (i, &col) in pivots.iter().enumerate() {
            c[col] = m[i][k].clone();
        }
        Some(Self::reduce(d, c))
    }
}

impl PartialEq for CyclotomicElement {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.common(other);
        a.c == b.c
    }
}

impl Eq for CyclotomicElement {}

impl fmt::Display for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = vec![];
        for (k, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            parts.push(match k {
                0 => format!("{a}"),
                _ => format!("{a}·ζ{}^{k}", self.n),
            });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// A root of unity exp(2πi·num/den), kept as a reduced fraction in [0, 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootOfUnity {
    num: i64,
    den: i64,
}

impl RootOfUnity {
    pub fn new(num: i64, den: i64) -> Result<Self, AlgebraError> {
        if den <= 0 {
            return Err(AlgebraError::BadConductor);
        }
        let num = num.rem_euclid(den);
        let g = num.gcd(&den).max(1);
        Ok(RootOfUnity { num: num / g, den: den / g })
    }

    pub fn one() -> Self {
        RootOfUnity { num: 0, den: 1 }
    }

    pub fn minus_one() -> Self {
        RootOfUnity { num: 1, den: 2 }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(self.num * o.den + o.num * self.den, self.den * o.den).expect("positive denominator")
    }

    pub fn inv(&self) -> Self {
        Self::new(-self.num, self.den).expect("positive denominator")
    }

    pub fn pow(&self, e: i64) -> Self {
        Self::new(self.num * e, self.den).expect("positive denominator")
    }

    pub fn to_cyclotomic(&self) -> CyclotomicElement {
        CyclotomicElement::root_of_unity(self.den as u32, self.num)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "exp(2πi·{}/{})", self.num, self.den)
    }
}
