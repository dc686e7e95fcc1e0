//! Exact real algebraic numbers: a squarefree defining polynomial together
//! with a rational interval that isolates one of its real roots.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::numeric;
use super::poly::{self, rat_sign, IntPoly, Rat, Sturm};
use super::AlgebraError;

/// A real algebraic number.
///
/// Invariant: either `lo == hi` (a rational, `poly` linear) or `lo < hi`,
/// `poly` has exactly one root in `(lo, hi)`, and `poly` changes sign
/// strictly across the interval. `poly` is primitive, squarefree, with
/// positive leading coefficient. It is a defining polynomial; it is reduced
/// to the minimal polynomial whenever a factor can be confirmed exactly.
#[derive(Clone, Debug)]
pub struct AlgebraicReal {
    poly: IntPoly,
    lo: Rat,
    hi: Rat,
}

/// The four field operations accepted by [`arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Apply one field operation.
pub fn arith(op: ArithOp, a: &AlgebraicReal, b: &AlgebraicReal) -> Result<AlgebraicReal, AlgebraError> {
    match op {
        ArithOp::Add => Ok(a.add(b)),
        ArithOp::Sub => Ok(a.sub(b)),
        ArithOp::Mul => Ok(a.mul(b)),
        ArithOp::Div => a.div(b),
    }
}

/// Build the root of `coeffs` (ascending integer coefficients) isolated by
/// `[lo, hi]`.
pub fn make_algebraic(coeffs: &[BigInt], lo: Rat, hi: Rat) -> Result<AlgebraicReal, AlgebraError> {
    AlgebraicReal::new(IntPoly::new(coeffs.to_vec()), lo, hi)
}

fn two() -> Rat {
    Rat::from_integer(BigInt::from(2))
}

fn pow2_inv(bits: u32) -> Rat {
    Rat::new(BigInt::one(), BigInt::one() << bits)
}

/// Closed rational interval used for enclosures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatInterval {
    pub lo: Rat,
    pub hi: Rat,
}

impl RatInterval {
    pub fn point(q: Rat) -> Self {
        RatInterval { lo: q.clone(), hi: q }
    }

    pub fn add(&self, o: &Self) -> Self {
        RatInterval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    pub fn neg(&self) -> Self {
        RatInterval { lo: -&self.hi, hi: -&self.lo }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        RatInterval { lo, hi }
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// 1/x; `None` if the interval meets zero.
    pub fn recip(&self) -> Option<Self> {
        if self.contains_zero() {
            return None;
        }
        Some(RatInterval { lo: self.hi.recip(), hi: self.lo.recip() })
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }
}

impl AlgebraicReal {
    /// Designate the unique root of `poly` in `[lo, hi]`.
    pub fn new(poly: IntPoly, lo: Rat, hi: Rat) -> Result<Self, AlgebraError> {
        if poly.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        if lo > hi {
            return Err(AlgebraError::EmptyInterval);
        }
        let p = poly.squarefree();
        if p.degree() == 0 {
            return Err(AlgebraError::NoRootInInterval);
        }
        let count = Sturm::new(&p).count_closed(&lo, &hi);
        match count {
            0 => Err(AlgebraError::NoRootInInterval),
            1 => Ok(Self::settle(p, lo, hi).reduced()),
            n => Err(AlgebraError::MultipleRootsInInterval(n)),
        }
    }

    // Normalize a closed isolating interval into the stored invariant.
    fn settle(p: IntPoly, lo: Rat, hi: Rat) -> Self {
        if p.sign_at(&lo) == 0 {
            return Self::from_rational(lo);
        }
        if p.sign_at(&hi) == 0 {
            return Self::from_rational(hi);
        }
        if p.degree() == 1 {
            let q = Rat::new(-p.coeff(0), p.coeff(1));
            return Self::from_rational(q);
        }
        AlgebraicReal { poly: p, lo, hi }
    }

    /// Designate the root of `poly` nearest to a floating approximation.
    /// The window `x ± err` is shrunk until Sturm certifies a single root.
    pub fn from_approximation(poly: &IntPoly, x: f64, err: f64) -> Result<Self, AlgebraError> {
        if poly.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        let p = poly.squarefree();
        let sturm = Sturm::new(&p);
        let mut e = err;
        for _ in 0..24 {
            let lo = Rat::from_float(x - e).ok_or(AlgebraError::IsolationFailed)?;
            let hi = Rat::from_float(x + e).ok_or(AlgebraError::IsolationFailed)?;
            match sturm.count_closed(&lo, &hi) {
                0 => return Err(AlgebraError::NoRootInInterval),
                1 => return Ok(Self::settle(p, lo, hi).reduced()),
                _ => e /= 16.0,
            }
        }
        Err(AlgebraError::IsolationFailed)
    }

    pub fn from_rational(q: Rat) -> Self {
        AlgebraicReal { poly: IntPoly::linear_for(&q), lo: q.clone(), hi: q }
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

    /// Square root of a non-negative rational.
    pub fn sqrt_rational(q: &Rat) -> Result<Self, AlgebraError> {
        Self::from_rational(q.clone()).sqrt()
    }

    /// Defining polynomial (minimal whenever reduction succeeded).
    pub fn minpoly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn interval(&self) -> (Rat, Rat) {
        (self.lo.clone(), self.hi.clone())
    }

    pub fn degree(&self) -> usize {
        self.poly.degree()
    }

    pub fn as_rational(&self) -> Option<Rat> {
        (self.lo == self.hi).then(|| self.lo.clone())
    }

    pub fn is_rational(&self) -> bool {
        self.lo == self.hi
    }

    fn bisect(&mut self) {
        if self.lo == self.hi {
            return;
        }
        let mid = (&self.lo + &self.hi) / two();
        let s = self.poly.sign_at(&mid);
        if s == 0 {
            *self = Self::from_rational(mid);
            return;
        }
        if s == self.poly.sign_at(&self.lo) {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    fn refine_in_place(&mut self, eps: &Rat) {
        while &self.hi - &self.lo >= *eps && self.lo != self.hi {
            self.bisect();
        }
    }

    /// Isolating interval of width < eps around the designated root; the
    /// result is contained in the stored interval.
    pub fn refine(&self, eps: &Rat) -> (Rat, Rat) {
        let mut a = self.clone();
        a.refine_in_place(eps);
        (a.lo, a.hi)
    }

    /// Same number, with its stored interval narrowed below eps.
    pub fn refined(&self, eps: &Rat) -> Self {
        let mut a = self.clone();
        a.refine_in_place(eps);
        a
    }

    pub fn enclosure(&self, bits: u32) -> RatInterval {
        let (lo, hi) = self.refine(&pow2_inv(bits));
        RatInterval { lo, hi }
    }

    pub fn to_f64(&self) -> f64 {
        if let Some(q) = self.as_rational() {
            return q.to_f64().unwrap_or(f64::NAN);
        }
        let mag = self.hi.abs().max(self.lo.abs());
        let scale = mag.to_f64().unwrap_or(1.0).max(1.0);
        let eps = Rat::from_float(scale * 1e-17).unwrap_or_else(|| pow2_inv(60));
        let (lo, hi) = self.refine(&eps);
        ((lo + hi) / two()).to_f64().unwrap_or(f64::NAN)
    }

    /// Exact sign.
    pub fn sign(&self) -> i8 {
        if let Some(q) = self.as_rational() {
            return rat_sign(&q);
        }
        // the stored root is irrational here, so it is not 0 unless poly(0) = 0
        // with 0 inside; poly would then have the rational root 0 in the
        // interval, which `settle`/`bisect` would have collapsed on sight
        let mut a = self.clone();
        let zero = Rat::zero();
        loop {
            if a.lo > zero {
                return 1;
            }
            if a.hi < zero {
                return -1;
            }
            if a.poly.sign_at(&zero) == 0 {
                return 0;
            }
            a.bisect();
            if let Some(q) = a.as_rational() {
                return rat_sign(&q);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.sign() == 0
    }

    /// Exact comparison.
    pub fn cmp_exact(&self, other: &Self) -> Ordering {
        if let (Some(a), Some(b)) = (self.as_rational(), other.as_rational()) {
            return a.cmp(&b);
        }
        if self.same_number(other) {
            return Ordering::Equal;
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        loop {
            if a.hi < b.lo {
                return Ordering::Less;
            }
            if b.hi < a.lo {
                return Ordering::Greater;
            }
            if &a.hi - &a.lo >= &b.hi - &b.lo && a.lo != a.hi {
                a.bisect();
            } else {
                b.bisect();
            }
        }
    }

    // Exact equality test via a common factor of the defining polynomials.
    fn same_number(&self, other: &Self) -> bool {
        if let Some(q) = other.as_rational() {
            return self.poly.sign_at(&q) == 0 && self.lo <= q && q <= self.hi;
        }
        if self.as_rational().is_some() {
            return other.same_number(self);
        }
        let g = if self.poly == other.poly { self.poly.clone() } else { self.poly.gcd(&other.poly) };
        if g.degree() == 0 {
            return false;
        }
        let sg = Sturm::new(&g);
        if sg.count_closed(&self.lo, &self.hi) == 0 || sg.count_closed(&other.lo, &other.hi) == 0 {
            return false;
        }
        // both are roots of g; they coincide iff the intervals share that root
        let lo = (&self.lo).max(&other.lo).clone();
        let hi = (&self.hi).min(&other.hi).clone();
        lo <= hi && sg.count_closed(&lo, &hi) == 1
    }

    pub fn neg(&self) -> Self {
        if let Some(q) = self.as_rational() {
            return Self::from_rational(-q);
        }
        AlgebraicReal { poly: self.poly.reflect().primitive(), lo: -&self.hi, hi: -&self.lo }
    }

    pub fn add(&self, o: &Self) -> Self {
        match (self.as_rational(), o.as_rational()) {
            (Some(a), Some(b)) => Self::from_rational(a + b),
            (Some(q), None) => o.shift(&q),
            (None, Some(q)) => self.shift(&q),
            (None, None) => {
                let r = poly::resultant_sum(&self.poly, &o.poly);
                let (mut a, mut b) = (self.clone(), o.clone());
                Self::isolate_with(&r, move |bits| {
                    let eps = pow2_inv(bits);
                    a.refine_in_place(&eps);
                    b.refine_in_place(&eps);
                    a.iv().add(&b.iv())
                })
            }
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        match (self.as_rational(), o.as_rational()) {
            (Some(a), Some(b)) => Self::from_rational(a * b),
            (Some(q), None) => o.scale(&q),
            (None, Some(q)) => self.scale(&q),
            (None, None) => {
                let (a, b) = (self.away_from_zero(), o.away_from_zero());
                let r = poly::resultant_product(&a.poly, &b.poly);
                let (mut a, mut b) = (a, b);
                Self::isolate_with(&r, move |bits| {
                    let eps = pow2_inv(bits);
                    a.refine_in_place(&eps);
                    b.refine_in_place(&eps);
                    a.iv().mul(&b.iv())
                })
            }
        }
    }

    pub fn recip(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rational(q.recip()));
        }
        let a = self.away_from_zero();
        Ok(AlgebraicReal { poly: a.poly.reverse().primitive(), lo: a.hi.recip(), hi: a.lo.recip() })
    }

    pub fn div(&self, o: &Self) -> Result<Self, AlgebraError> {
        Ok(self.mul(&o.recip()?))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Non-negative square root.
    pub fn sqrt(&self) -> Result<Self, AlgebraError> {
        match self.sign() {
            -1 => return Err(AlgebraError::NegativeSqrt),
            0 => return Ok(Self::zero()),
            _ => {}
        }
        if let Some(q) = self.as_rational() {
            let (n, d) = (q.numer(), q.denom());
            let (sn, sd) = (n.sqrt(), d.sqrt());
            if &(&sn * &sn) == n && &(&sd * &sd) == d {
                return Ok(Self::from_rational(Rat::new(sn, sd)));
            }
        }
        let p = self.poly.compose_square();
        let mut a = self.away_from_zero();
        Ok(Self::isolate_with(&p, move |bits| {
            a.refine_in_place(&pow2_inv(bits));
            RatInterval { lo: sqrt_lower(&a.lo, bits + 2), hi: sqrt_upper(&a.hi, bits + 2) }
        }))
    }

    fn iv(&self) -> RatInterval {
        RatInterval { lo: self.lo.clone(), hi: self.hi.clone() }
    }

    fn shift(&self, q: &Rat) -> Self {
        AlgebraicReal { poly: self.poly.shift_roots(q), lo: &self.lo + q, hi: &self.hi + q }
    }

    fn scale(&self, q: &Rat) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        let (lo, hi) = if q.is_positive() { (&self.lo * q, &self.hi * q) } else { (&self.hi * q, &self.lo * q) };
        AlgebraicReal { poly: self.poly.scale_roots(q), lo, hi }
    }

    // Irrational non-zero value with 0 outside the interval and x ∤ poly.
    fn away_from_zero(&self) -> Self {
        let mut a = self.clone();
        let zero = Rat::zero();
        while a.lo <= zero && zero <= a.hi && a.lo != a.hi {
            a.bisect();
        }
        if a.poly.coeff(0).is_zero() && a.lo != a.hi {
            let x = IntPoly::x();
            a.poly = a.poly.div_exact(&x).expect("x divides").primitive();
        }
        a
    }

    /// Designate the root of `r` that lies in every enclosure produced by
    /// `enclose` (which must shrink to the value as `bits` grows).
    pub(crate) fn isolate_with(r: &IntPoly, mut enclose: impl FnMut(u32) -> RatInterval) -> Self {
        let p = r.squarefree();
        let sturm = Sturm::new(&p);
        let mut bits = 8;
        loop {
            let iv = enclose(bits);
            if iv.lo == iv.hi {
                return Self::from_rational(iv.lo);
            }
            let n = sturm.count_closed(&iv.lo, &iv.hi);
            assert!(n > 0, "enclosure does not contain a root of the defining polynomial");
            if n == 1 {
                return Self::settle(p, iv.lo, iv.hi).reduced();
            }
            bits += 16;
        }
    }

    /// Try to replace the defining polynomial by a proper factor that still
    /// vanishes at the designated root. Candidates come from floating-point
    /// roots; acceptance is exact (integral division and a sign change).
    fn reduced(self) -> Self {
        if self.poly.degree() <= 1 || self.poly.max_coeff_bits() > 900 {
            return self;
        }
        match find_factor(&self) {
            Some(q) => Self::settle(q, self.lo, self.hi),
            None => self,
        }
    }
}

const SUBSET_LIMIT: usize = 40_000;

fn find_factor(a: &AlgebraicReal) -> Option<IntPoly> {
    let p = &a.poly;
    let n = p.degree();
    let roots = numeric::complex_roots(p)?;
    let scale = a.hi.abs().max(a.lo.abs()).to_f64()?.max(1.0);
    let mid = a.refine(&Rat::from_float(scale * 1e-12)?);
    let mid = ((mid.0 + mid.1) / two()).to_f64()?;
    // group into units: real roots, and conjugate pairs
    let tol = |z: f64| 1e-7 * (1.0 + z.abs());
    let mut used = vec![false; n];
    let mut units: Vec<Vec<usize>> = vec![];
    for i in 0..n {
        if used[i] {
            continue;
        }
        used[i] = true;
        if roots[i].im.abs() <= tol(roots[i].re) {
            units.push(vec![i]);
            continue;
        }
        let target = roots[i].conj();
        let j = (0..n)
            .filter(|&j| !used[j])
            .min_by(|&x, &y| (roots[x] - target).norm().partial_cmp(&(roots[y] - target).norm()).unwrap())?;
        if (roots[j] - target).norm() > 1e-6 * (1.0 + target.norm()) {
            return None;
        }
        used[j] = true;
        units.push(vec![i, j]);
    }
    let ours = units.iter().position(|u| u.len() == 1 && (roots[u[0]].re - mid).abs() <= 1e-6 * (1.0 + mid.abs()))?;
    let others: Vec<usize> = (0..units.len()).filter(|&u| u != ours).collect();
    // subsets of the other units, by increasing total degree
    let mut subsets: Vec<(usize, Vec<usize>)> = vec![(0, vec![])];
    let mut frontier: Vec<(usize, Vec<usize>)> = vec![(0, vec![])];
    while !frontier.is_empty() && subsets.len() < SUBSET_LIMIT {
        let mut next = vec![];
        for (_, s) in &frontier {
            let start = s.last().map_or(0, |&l| l + 1);
            for k in start..others.len() {
                let mut t = s.clone();
                t.push(k);
                let d: usize = t.iter().map(|&u| units[others[u]].len()).sum();
                next.push((d, t));
                if subsets.len() + next.len() >= SUBSET_LIMIT {
                    break;
                }
            }
        }
        subsets.extend(next.iter().cloned());
        frontier = next;
    }
    subsets.sort_by_key(|(d, _)| *d);
    let lc = p.lc().to_f64()?;
    for (d, s) in subsets {
        if d + 1 >= n {
            break;
        }
        let mut rs = vec![roots[units[ours][0]]];
        for &u in &s {
            rs.extend(units[others[u]].iter().map(|&i| roots[i]));
        }
        let c = numeric::expand_real(&rs, lc);
        if c.iter().any(|x| x.abs() > 4e15) {
            continue;
        }
        if c.iter().any(|x| (x - x.round()).abs() > 1e-5 * (1.0 + x.abs().sqrt())) {
            continue;
        }
        let cand = IntPoly::new(c.iter().map(|x| BigInt::from(x.round() as i64)).collect()).primitive();
        if cand.degree() != d + 1 {
            continue;
        }
        if p.div_exact(&cand).is_none() {
            continue;
        }
        if cand.sign_at(&a.lo) * cand.sign_at(&a.hi) < 0 {
            return Some(cand);
        }
    }
    None
}

// floor-style rational lower bound for √x with 2^-bits resolution
fn sqrt_lower(x: &Rat, bits: u32) -> Rat {
    if !x.is_positive() {
        return Rat::zero();
    }
    let s = BigInt::one() << (2 * bits);
    let v = (x * Rat::from_integer(s)).floor().to_integer();
    Rat::new(v.sqrt(), BigInt::one() << bits)
}

fn sqrt_upper(x: &Rat, bits: u32) -> Rat {
    let s = BigInt::one() << (2 * bits);
    let v = (x * Rat::from_integer(s)).ceil().to_integer();
    Rat::new(v.sqrt() + BigInt::one(), BigInt::one() << bits)
}

impl PartialEq for AlgebraicReal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_exact(other) == Ordering::Equal
    }
}

impl Eq for AlgebraicReal {}

impl PartialOrd for AlgebraicReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgebraicReal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_exact(other)
    }
}

impl fmt::Display for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        write!(f, "root of {} in [{}, {}] (≈ {:.8})", self.poly, self.lo, self.hi, self.to_f64())
    }
}

impl From<i64> for AlgebraicReal {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

impl From<BigRational> for AlgebraicReal {
    fn from(q: BigRational) -> Self {
        Self::from_rational(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> Rat {
        Rat::new(BigInt::from(a), BigInt::from(b))
    }

    fn root(c: &[i64], lo: i64, hi: i64) -> AlgebraicReal {
        AlgebraicReal::new(IntPoly::from_i64(c), q(lo, 1), q(hi, 1)).unwrap()
    }

    #[test]
    fn sqrt2_squared_is_two() {
        let s = root(&[-2, 0, 1], 1, 2);
        assert_eq!(s.mul(&s).as_rational(), Some(q(2, 1)));
    }

    #[test]
    fn one_plus_sqrt2_has_expected_minpoly() {
        let s = root(&[-2, 0, 1], 1, 2);
        let d = s.add(&AlgebraicReal::one());
        assert_eq!(d.minpoly(), &IntPoly::from_i64(&[-1, -2, 1]));
        let (lo, hi) = d.interval();
        assert!(lo >= q(2, 1) && hi <= q(3, 1));
    }

    #[test]
    fn rejects_bad_intervals() {
        let p = IntPoly::from_i64(&[-2, 0, 1]);
        assert_eq!(AlgebraicReal::new(p.clone(), q(2, 1), q(3, 1)).unwrap_err(), AlgebraError::NoRootInInterval);
        assert_eq!(AlgebraicReal::new(p, q(-2, 1), q(2, 1)).unwrap_err(), AlgebraError::MultipleRootsInInterval(2));
        assert_eq!(AlgebraicReal::new(IntPoly::zero(), q(0, 1), q(1, 1)).unwrap_err(), AlgebraError::ZeroPolynomial);
    }

    #[test]
    fn sqrt_of_rational() {
        let s = AlgebraicReal::sqrt_rational(&q(3, 1)).unwrap();
        assert_eq!(s.minpoly(), &IntPoly::from_i64(&[-3, 0, 1]));
        assert_eq!(AlgebraicReal::sqrt_rational(&q(9, 4)).unwrap().as_rational(), Some(q(3, 2)));
    }

    #[test]
    fn division_by_zero() {
        let s = root(&[-2, 0, 1], 1, 2);
        let z = s.sub(&s);
        assert!(z.is_zero());
        assert_eq!(s.div(&z).unwrap_err(), AlgebraError::DivisionByZero);
    }

    #[test]
    fn heptagon_quotient_dimension() {
        let d1 = root(&[1, -1, -2, 1], 2, 3);
        let d2 = d1.div(&d1.sub(&AlgebraicReal::one())).unwrap();
        assert_eq!(d2.minpoly(), &IntPoly::from_i64(&[1, -2, -1, 1]));
        assert!((d2.to_f64() - 1.8019377358).abs() < 1e-9);
    }

    #[test]
    fn ordering_and_refinement() {
        let r3 = AlgebraicReal::sqrt_rational(&q(3, 1)).unwrap();
        let a = r3.add(&AlgebraicReal::one());
        let b = r3.add(&AlgebraicReal::from_int(2));
        assert_eq!(a.sub(&b).sign(), -1);
        let eps = q(1, 1_000_000);
        let (lo, hi) = b.refine(&eps);
        assert!(&hi - &lo < eps);
        let (olo, ohi) = b.interval();
        assert!(olo <= lo && hi <= ohi);
        assert!(lo.to_f64().unwrap() < 3.7320509 && hi.to_f64().unwrap() > 3.7320507);
    }

    #[test]
    fn nested_identity_cancels() {
        let a = AlgebraicReal::sqrt_rational(&q(2, 1)).unwrap();
        let b = AlgebraicReal::sqrt_rational(&q(3, 1)).unwrap().add(&AlgebraicReal::one());
        let s = a.add(&b);
        let lhs = s.mul(&s);
        let rhs = a.mul(&a).add(&a.mul(&b).scale(&q(2, 1))).add(&b.mul(&b));
        assert!(lhs.sub(&rhs).is_zero());
    }
}
