//! Dense univariate polynomials over ℤ, with the handful of exact algorithms
//! the rest of the crate leans on: gcd, squarefree part, Sturm sequences,
//! real root isolation and resultants by evaluation/interpolation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

pub type Rat = BigRational;

/// Integer polynomial, coefficients in ascending order, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct IntPoly {
    c: Vec<BigInt>,
}

fn trim(mut c: Vec<BigInt>) -> Vec<BigInt> {
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
    c
}

impl IntPoly {
    pub fn new(c: Vec<BigInt>) -> Self {
        IntPoly { c: trim(c) }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { c: vec![] }
    }

    pub fn constant(v: BigInt) -> Self {
        Self::new(vec![v])
    }

    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `den·x − num`, the primitive linear polynomial of a rational.
    pub fn linear_for(q: &Rat) -> Self {
        Self::new(vec![-q.numer().clone(), q.denom().clone()]).primitive()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lc(&self) -> BigInt {
        self.c.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.c.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    pub fn eval_rat(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + Rat::from_integer(a.clone());
        }
        acc
    }

    /// Sign of p(x), computed on the homogenized integer form to avoid
    /// rational normalization in the inner loop.
    pub fn sign_at(&self, x: &Rat) -> i8 {
        if self.c.is_empty() {
            return 0;
        }
        let (a, b) = (x.numer(), x.denom());
        // Horner on Σ c_i a^i b^(n−i); b > 0 so the sign is that of p(x)
        let mut acc = BigInt::zero();
        let mut bpow = BigInt::one();
        for ci in self.c.iter().rev() {
            acc = acc * a + ci * &bpow;
            bpow *= b;
        }
        sign_of(&acc)
    }

    pub fn neg(&self) -> Self {
        IntPoly { c: self.c.iter().map(|x| -x).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut r = vec![BigInt::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                r[i + j] += a * b;
            }
        }
        Self::new(r)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.c.iter().map(|x| x * k).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::constant(BigInt::one());
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.c.iter().enumerate().skip(1).map(|(i, a)| a * BigInt::from(i)).collect())
    }

    /// Positive gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.c.iter().fold(BigInt::zero(), |g, a| g.gcd(a))
    }

    /// Divide out the content and make the leading coefficient positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        IntPoly { c: self.c.iter().map(|x| x / &g).collect() }
    }

    pub fn to_rat(&self) -> Vec<Rat> {
        self.c.iter().map(|a| Rat::from_integer(a.clone())).collect()
    }

    /// Clear denominators of a rational coefficient vector and take the
    /// primitive part.
    pub fn from_rat(c: &[Rat]) -> Self {
        let l = c.iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
        Self::new(c.iter().map(|q| (q * Rat::from_integer(l.clone())).to_integer()).collect()).primitive()
    }

    /// Exact quotient over ℚ, returned only when it is integral.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = rat_divrem(&self.to_rat(), &d.to_rat());
        if !r.is_empty() {
            return None;
        }
        if q.iter().any(|x| !x.is_integer()) {
            return None;
        }
        Some(Self::new(q.iter().map(|x| x.to_integer()).collect()))
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.primitive();
        }
        if o.is_zero() {
            return self.primitive();
        }
        let (mut a, mut b) = if self.degree() >= o.degree() {
            (self.primitive(), o.primitive())
        } else {
            (o.primitive(), self.primitive())
        };
        while !b.is_zero() {
            let r = a.prem(&b).primitive();
            a = b;
            b = r;
        }
        a.primitive()
    }

    /// Pseudo-remainder lc(b)^(δ+1)·a mod b.
    pub fn prem(&self, b: &Self) -> Self {
        assert!(!b.is_zero());
        let mut r = self.clone();
        let db = b.degree();
        let lb = b.lc();
        while !r.is_zero() && r.degree() >= db {
            let shift = r.degree() - db;
            let lr = r.lc();
            let mut t = vec![BigInt::zero(); shift];
            t.extend(b.c.iter().map(|x| x * &lr));
            r = r.scale(&lb).sub(&Self::new(t));
        }
        r
    }

    /// p / gcd(p, p'), primitive.
    pub fn squarefree(&self) -> Self {
        if self.degree() == 0 {
            return self.primitive();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.primitive();
        }
        self.div_exact(&g).expect("gcd divides").primitive()
    }

    /// p(−x).
    pub fn reflect(&self) -> Self {
        Self::new(self.c.iter().enumerate().map(|(i, a)| if i % 2 == 1 { -a } else { a.clone() }).collect())
    }

    /// x^n·p(1/x).
    pub fn reverse(&self) -> Self {
        let mut c = self.c.clone();
        c.reverse();
        Self::new(c)
    }

    /// Primitive polynomial whose roots are those of p shifted by +q.
    pub fn shift_roots(&self, q: &Rat) -> Self {
        // p(x − u/v)·v^n = Σ c_i (v x − u)^i v^(n−i)
        let (u, v) = (q.numer().clone(), q.denom().clone());
        let lin = Self::new(vec![-u, v.clone()]);
        let n = self.degree();
        let mut acc = Self::zero();
        let mut pw = Self::constant(BigInt::one());
        for (i, ci) in self.c.iter().enumerate() {
            let vp = num_traits::pow(v.clone(), n - i);
            acc = acc.add(&pw.scale(&(ci * vp)));
            pw = pw.mul(&lin);
        }
        acc.primitive()
    }

    /// Primitive polynomial whose roots are those of p multiplied by q ≠ 0.
    pub fn scale_roots(&self, q: &Rat) -> Self {
        // p(v x / u)·u^n = Σ c_i v^i u^(n−i) x^i
        let (u, v) = (q.numer().clone(), q.denom().clone());
        let n = self.degree();
        Self::new(
            self.c
                .iter()
                .enumerate()
                .map(|(i, ci)| ci * num_traits::pow(v.clone(), i) * num_traits::pow(u.clone(), n - i))
                .collect(),
        )
        .primitive()
    }

    /// p(x²).
    pub fn compose_square(&self) -> Self {
        let mut c = vec![BigInt::zero(); 2 * self.c.len()];
        for (i, a) in self.c.iter().enumerate() {
            c[2 * i] = a.clone();
        }
        Self::new(c)
    }

    /// Cauchy bound: every complex root has |z| < bound.
    pub fn root_bound(&self) -> Rat {
        let lc = Rat::from_integer(self.lc().abs());
        let m = self.c[..self.c.len().saturating_sub(1)]
            .iter()
            .map(|a| Rat::from_integer(a.abs()) / &lc)
            .fold(Rat::zero(), |m, x| if x > m { x } else { m });
        m + Rat::one()
    }

    pub fn to_f64_coeffs(&self) -> Option<Vec<f64>> {
        self.c.iter().map(|a| a.to_f64().filter(|x| x.is_finite())).collect()
    }

    pub fn max_coeff_bits(&self) -> u64 {
        self.c.iter().map(|a| a.bits()).max().unwrap_or(0)
    }
}

pub fn sign_of(x: &BigInt) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

pub fn rat_sign(x: &Rat) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

fn rat_trim(mut c: Vec<Rat>) -> Vec<Rat> {
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
    c
}

/// Division with remainder over ℚ; both outputs trimmed.
pub fn rat_divrem(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let b = rat_trim(b.to_vec());
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r = rat_trim(a.to_vec());
    if r.len() < b.len() {
        return (vec![], r);
    }
    let mut q = vec![Rat::zero(); r.len() - b.len() + 1];
    let lb = b.last().unwrap().clone();
    while r.len() >= b.len() && !r.is_empty() {
        let s = r.len() - b.len();
        let f = r.last().unwrap() / &lb;
        for (i, bi) in b.iter().enumerate() {
            r[s + i] -= &f * bi;
        }
        q[s] = f;
        r.pop();
        r = rat_trim(r);
    }
    (rat_trim(q), r)
}

pub fn rat_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut r = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    rat_trim(r)
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let neg = a.is_negative();
            let abs = a.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = i == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Sturm sequences and real roots

/// Sturm sequence of a squarefree polynomial, each member scaled by a positive
/// constant to stay in ℤ[x].
#[derive(Clone, Debug)]
pub struct Sturm {
    seq: Vec<IntPoly>,
}

impl Sturm {
    pub fn new(p: &IntPoly) -> Self {
        let mut seq = vec![p.clone()];
        if p.degree() == 0 {
            return Sturm { seq };
        }
        seq.push(p.derivative());
        loop {
            let n = seq.len();
            let (_, r) = rat_divrem(&seq[n - 2].to_rat(), &seq[n - 1].to_rat());
            if r.is_empty() {
                break;
            }
            // −rem, cleared by a positive factor
            let neg: Vec<Rat> = r.iter().map(|x| -x).collect();
            let l = neg.iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
            let ip = IntPoly::new(neg.iter().map(|q| (q * Rat::from_integer(l.clone())).to_integer()).collect());
            let g = ip.content();
            seq.push(IntPoly::new(ip.c.iter().map(|x| x / &g).collect()));
        }
        Sturm { seq }
    }

    fn variations(signs: impl Iterator<Item = i8>) -> usize {
        let mut last = 0i8;
        let mut v = 0;
        for s in signs {
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    pub fn variations_at(&self, x: &Rat) -> usize {
        Self::variations(self.seq.iter().map(|p| p.sign_at(x)))
    }

    /// Variations at ±∞.
    pub fn variations_at_inf(&self, positive: bool) -> usize {
        Self::variations(self.seq.iter().map(|p| {
            let s = sign_of(&p.lc());
            if positive || p.degree() % 2 == 0 {
                s
            } else {
                -s
            }
        }))
    }

    /// Number of distinct roots in the closed interval [lo, hi].
    pub fn count_closed(&self, lo: &Rat, hi: &Rat) -> usize {
        let at_lo = usize::from(self.seq[0].sign_at(lo) == 0);
        self.variations_at(lo) - self.variations_at(hi) + at_lo
    }

    /// Number of distinct roots in the open ray (x, ∞).
    pub fn count_above(&self, x: &Rat) -> usize {
        self.variations_at(x) - self.variations_at_inf(true)
    }

    pub fn count_all(&self) -> usize {
        self.variations_at_inf(false) - self.variations_at_inf(true)
    }
}

/// An isolated real root: either exact (lo == hi) or lo < hi with a strict
/// sign change of the polynomial across the open interval and exactly one
/// root inside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rat,
    pub hi: Rat,
}

/// Isolate every real root of a squarefree polynomial, in increasing order.
pub fn isolate_real_roots(p: &IntPoly) -> Vec<RootInterval> {
    if p.degree() == 0 {
        return vec![];
    }
    let sturm = Sturm::new(p);
    let b = p.root_bound();
    let mut out = vec![];
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        // lo and hi are never roots here
        let n = sturm.variations_at(&lo) - sturm.variations_at(&hi);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push(RootInterval { lo, hi });
            continue;
        }
        let mid = (&lo + &hi) / Rat::from_integer(BigInt::from(2));
        if p.sign_at(&mid) == 0 {
            out.push(RootInterval { lo: mid.clone(), hi: mid.clone() });
            // nudge the split point off the root
            let (l2, h2) = nudge_off_root(p, &lo, &mid, &hi);
            stack.push((h2, hi));
            stack.push((lo, l2));
        } else {
            stack.push((mid.clone(), hi));
            stack.push((lo, mid));
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

// Find l < mid < h with no roots in [l, mid) ∪ (mid, h] other than mid.
fn nudge_off_root(p: &IntPoly, lo: &Rat, mid: &Rat, hi: &Rat) -> (Rat, Rat) {
    let sturm = Sturm::new(p);
    let two = Rat::from_integer(BigInt::from(2));
    let mut l = (lo + mid) / &two;
    let mut h = (mid + hi) / &two;
    loop {
        if p.sign_at(&l) != 0 && p.sign_at(&h) != 0 && sturm.count_closed(&l, &h) == 1 {
            return (l, h);
        }
        l = (&l + mid) / &two;
        h = (&h + mid) / &two;
    }
}

// ---------------------------------------------------------------------------
// Determinants, resultants, interpolation

/// Determinant of a square integer matrix by fraction-free Bareiss elimination.
pub fn det_bareiss(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(sw) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, sw);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Determinant of the Sylvester matrix with formal degrees `dp`, `dq`
/// (coefficients beyond the true degree are taken as zero).
pub fn sylvester_det(p: &IntPoly, dp: usize, q: &IntPoly, dq: usize) -> BigInt {
    let n = dp + dq;
    if n == 0 {
        return BigInt::one();
    }
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for r in 0..dq {
        for i in 0..=dp {
            m[r][r + i] = p.coeff(dp - i);
        }
    }
    for r in 0..dp {
        for i in 0..=dq {
            m[dq + r][r + i] = q.coeff(dq - i);
        }
    }
    det_bareiss(&m)
}

/// Interpolate integer samples at integer nodes; panics if the interpolant is
/// not integral (callers only interpolate integer polynomials).
pub fn interpolate(xs: &[BigInt], ys: &[BigInt]) -> IntPoly {
    let n = xs.len();
    let mut coef: Vec<Rat> = ys.iter().map(|y| Rat::from_integer(y.clone())).collect();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = &coef[i] - &coef[i - 1];
            let den = Rat::from_integer(&xs[i] - &xs[i - j]);
            coef[i] = num / den;
        }
    }
    // Newton form to monomial form
    let mut poly: Vec<Rat> = vec![coef[n - 1].clone()];
    for i in (0..n - 1).rev() {
        // poly = poly·(x − xs[i]) + coef[i]
        let mut np = vec![Rat::zero(); poly.len() + 1];
        for (k, a) in poly.iter().enumerate() {
            np[k + 1] += a;
            np[k] -= a * Rat::from_integer(xs[i].clone());
        }
        np[0] += &coef[i];
        poly = np;
    }
    IntPoly::new(
        poly.into_iter()
            .map(|q| {
                assert!(q.is_integer(), "non-integral interpolant");
                q.to_integer()
            })
            .collect(),
    )
}

/// Build the polynomial of degree ≤ `deg` whose value at each integer node is
/// `f(node)`. Nodes are 0, 1, −1, 2, −2, …
pub fn interpolate_fn(deg: usize, f: impl Fn(&BigInt) -> BigInt) -> IntPoly {
    let xs: Vec<BigInt> =
        (0..=deg as i64).map(|i| BigInt::from(if i % 2 == 1 { (i + 1) / 2 } else { -(i / 2) })).collect();
    let ys: Vec<BigInt> = xs.iter().map(&f).collect();
    interpolate(&xs, &ys)
}

/// Res_y(p(y), q(x − y)): roots are all sums α + β.
pub fn resultant_sum(p: &IntPoly, q: &IntPoly) -> IntPoly {
    let (dp, dq) = (p.degree(), q.degree());
    interpolate_fn(dp * dq, |x| {
        // q(x − y) as a polynomial in y
        let lin = IntPoly::new(vec![x.clone(), BigInt::from(-1)]);
        let qs = compose(q, &lin);
        sylvester_det(p, dp, &qs, dq)
    })
}

/// Res_y(p(y), y^m q(x / y)): roots are all products α·β (q(0) ≠ 0).
pub fn resultant_product(p: &IntPoly, q: &IntPoly) -> IntPoly {
    let (dp, dq) = (p.degree(), q.degree());
    interpolate_fn(dp * dq, |x| {
        let c: Vec<BigInt> = (0..=dq).map(|k| q.coeff(dq - k) * num_traits::pow(x.clone(), dq - k)).collect();
        // coefficient of y^k is q_{m−k} x^{m−k}
        let qs = IntPoly::new(c);
        sylvester_det(p, dp, &qs, dq)
    })
}

/// Res_y(p(y), x·den(y) − num(y)): roots include num(α)/den(α) for every
/// root α of p with den(α) ≠ 0.
pub fn resultant_rational_fn(p: &IntPoly, num: &IntPoly, den: &IntPoly) -> IntPoly {
    let dp = p.degree();
    let dq = num.degree().max(den.degree());
    interpolate_fn(dp, |x| {
        let qs = den.scale(x).sub(num);
        sylvester_det(p, dp, &qs, dq)
    })
}

/// p(r(x)) for polynomials p, r.
pub fn compose(p: &IntPoly, r: &IntPoly) -> IntPoly {
    let mut acc = IntPoly::zero();
    for a in p.coeffs().iter().rev() {
        acc = acc.mul(r).add(&IntPoly::constant(a.clone()));
    }
    acc
}

/// Characteristic polynomial det(xI − M) of an integer matrix.
pub fn charpoly(m: &[Vec<i64>]) -> IntPoly {
    let n = m.len();
    interpolate_fn(n, |x| {
        let a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let v = BigInt::from(-m[i][j]);
                        if i == j {
                            v + x
                        } else {
                            v
                        }
                    })
                    .collect()
            })
            .collect();
        det_bareiss(&a)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64, b: i64) -> Rat {
        Rat::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn sign_at_matches_eval() {
        let p = IntPoly::from_i64(&[1, -1, -2, 1]);
        for (a, b) in [(0, 1), (5, 2), (-7, 3), (9, 4), (2, 1)] {
            let x = r(a, b);
            assert_eq!(p.sign_at(&x), rat_sign(&p.eval_rat(&x)));
        }
    }

    #[test]
    fn gcd_and_squarefree() {
        // (x−1)²(x+2)
        let p = IntPoly::from_i64(&[2, -3, 0, 1]);
        assert_eq!(p.squarefree(), IntPoly::from_i64(&[-2, 1, 1]));
        let q = IntPoly::from_i64(&[-1, 0, 1]);
        assert_eq!(p.gcd(&q), IntPoly::from_i64(&[-1, 1]));
    }

    #[test]
    fn isolates_roots_of_cubic() {
        let p = IntPoly::from_i64(&[1, -1, -2, 1]);
        let roots = isolate_real_roots(&p);
        assert_eq!(roots.len(), 3);
        for ri in &roots {
            assert!(ri.lo < ri.hi);
            assert_eq!(p.sign_at(&ri.lo), -p.sign_at(&ri.hi));
        }
        assert!(roots[2].hi > r(2, 1));
    }

    #[test]
    fn isolates_rational_roots() {
        let p = IntPoly::from_i64(&[0, -1, 0, 1]); // x³ − x
        let roots = isolate_real_roots(&p);
        assert_eq!(roots.len(), 3);
        assert!(roots.iter().any(|ri| ri.lo == ri.hi && ri.lo.is_zero()));
    }

    #[test]
    fn resultant_sum_of_sqrt2_and_one() {
        let p = IntPoly::from_i64(&[-2, 0, 1]);
        let one = IntPoly::from_i64(&[-1, 1]);
        assert_eq!(resultant_sum(&p, &one).primitive(), IntPoly::from_i64(&[-1, -2, 1]));
    }

    #[test]
    fn charpoly_of_swap() {
        assert_eq!(charpoly(&[vec![0, 1], vec![1, 0]]), IntPoly::from_i64(&[-1, 0, 1]));
    }

    #[test]
    fn shift_and_scale() {
        let p = IntPoly::from_i64(&[-2, 0, 1]);
        assert_eq!(p.shift_roots(&r(1, 1)), IntPoly::from_i64(&[-1, -2, 1]));
        assert_eq!(p.scale_roots(&r(1, 2)), IntPoly::from_i64(&[-1, 0, 2]));
    }
}
