//! Exact character tables of commutative fusion rings.
//!
//! A generic integer combination G = Σ cᵢ Nᵢ has simple spectrum; each
//! eigenvalue λ determines a character through the adjugate column
//! adj(G − λI)·e₀, so φ(x_k) = A_k(λ)/A_0(λ) for integer polynomials A_k.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{FusionError, FusionRing};
use crate::algebra::numeric::complex_roots;
use crate::algebra::poly::{
    compose, det_bareiss, interpolate_fn, isolate_real_roots, resultant_rational_fn, sylvester_det,
};
use crate::algebra::real::RatInterval;
use crate::algebra::{AlgebraicReal, ComplexAlgebraic, IntPoly, Rat};

/// `values[c][k] = φ_c(x_k)`; `fp` indexes the Frobenius–Perron character.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub values: Vec<Vec<ComplexAlgebraic>>,
    pub fp: usize,
}

impl CharacterTable {
    /// FP dimensions read off the FP character.
    pub fn fp_dims(&self) -> Vec<AlgebraicReal> {
        self.values[self.fp].iter().map(|z| z.re.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_real(&self) -> bool {
        self.values.iter().flatten().all(|z| z.is_real())
    }
}

fn err(msg: impl Into<String>) -> FusionError {
    FusionError::CharacterTable(msg.into())
}

pub(super) fn compute(ring: &FusionRing) -> Result<CharacterTable, FusionError> {
    let r = ring.rank();
    if r == 1 {
        return Ok(CharacterTable { values: vec![vec![ComplexAlgebraic::from_int(1)]], fp: 0 });
    }
    let mats: Vec<Vec<Vec<i64>>> = (0..r).map(|i| ring.fusion_matrix(i)).collect();
    let (g, chi) = generic_element(&mats)?;
    let eig = eigenvalues(&chi)?;

    // A_k(x) = adj(G − xI)_{k,0} = (−1)^k det(minor without row 0, column k)
    let adj: Vec<IntPoly> = (0..r)
        .map(|k| {
            interpolate_fn(r - 1, |x| {
                let m: Vec<Vec<BigInt>> = (1..r)
                    .map(|i| {
                        (0..r)
                            .filter(|&j| j != k)
                            .map(|j| {
                                let v = BigInt::from(g[i][j]);
                                if i == j {
                                    v - x
                                } else {
                                    v
                                }
                            })
                            .collect()
                    })
                    .collect();
                let d = det_bareiss(&m);
                if k % 2 == 1 {
                    -d
                } else {
                    d
                }
            })
        })
        .collect();

    let mut values = Vec::with_capacity(r);
    for lam in &eig {
        let row = match lam {
            Eigen::Real(l) => real_character(l, &adj)?,
            Eigen::Complex(z) => complex_character(z, &adj)?,
        };
        values.push(row);
    }

    let fp: Vec<usize> = (0..r).filter(|&c| values[c].iter().all(|z| z.is_real() && z.re.sign() > 0)).collect();
    if fp.len() != 1 {
        return Err(err(format!("{} characters are real and positive, expected 1", fp.len())));
    }
    Ok(CharacterTable { values, fp: fp[0] })
}

// Pick G = Σ_{i≥1} s^{i−1} N_i with squarefree characteristic polynomial.
fn generic_element(mats: &[Vec<Vec<i64>>]) -> Result<(Vec<Vec<i64>>, IntPoly), FusionError> {
    let r = mats.len();
    for s in 2i64..40 {
        let mut g = vec![vec![0i64; r]; r];
        let mut c = 1i64;
        for m in &mats[1..] {
            for (grow, mrow) in g.iter_mut().zip(m) {
                for (x, y) in grow.iter_mut().zip(mrow) {
                    *x += c * y;
                }
            }
            c = c.saturating_mul(s);
        }
        let chi = crate::algebra::poly::charpoly(&g);
        if chi.squarefree().degree() == r {
            return Ok((g, chi));
        }
    }
    Err(err("no generic element with simple spectrum (ring may not be semisimple)"))
}

enum Eigen {
    Real(AlgebraicReal),
    Complex(ComplexAlgebraic),
}

// All roots of a squarefree χ: real ones by Sturm isolation, conjugate pairs
// from floating approximations certified exactly by χ(λ) = 0.
fn eigenvalues(chi: &IntPoly) -> Result<Vec<Eigen>, FusionError> {
    let r = chi.degree();
    let mut out: Vec<Eigen> = isolate_real_roots(chi)
        .into_iter()
        .map(|iv| AlgebraicReal::new(chi.clone(), iv.lo, iv.hi).map(Eigen::Real))
        .collect::<Result<_, _>>()
        .map_err(|e| err(e.to_string()))?;
    if out.len() == r {
        return Ok(out);
    }
    let approx = complex_roots(chi).ok_or_else(|| err("root approximation failed"))?;
    let mut upper: Vec<_> = approx.into_iter().filter(|z| z.im > 1e-9 * (1.0 + z.norm())).collect();
    upper.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap().then(a.im.partial_cmp(&b.im).unwrap()));
    if 2 * upper.len() + out.len() != r {
        return Err(err("complex root count mismatch"));
    }
    let ru = real_part_poly(chi);
    let rv = imag_part_poly(chi)?;
    for z in upper {
        let tol = 1e-8 * (1.0 + z.norm());
        let u = AlgebraicReal::from_approximation(&ru, z.re, tol).map_err(|e| err(e.to_string()))?;
        let v = AlgebraicReal::from_approximation(&rv, z.im, tol).map_err(|e| err(e.to_string()))?;
        let lam = ComplexAlgebraic::new(u, v);
        if !horner(chi, &lam).is_zero() {
            return Err(err("candidate eigenvalue failed exact certification"));
        }
        out.push(Eigen::Complex(lam.conj()));
        out.push(Eigen::Complex(lam));
    }
    Ok(out)
}

// Res_y(χ(y), χ(2x − y)): roots (λ_a + λ_b)/2, containing every Re λ.
fn real_part_poly(chi: &IntPoly) -> IntPoly {
    let r = chi.degree();
    interpolate_fn(r * r, |x| {
        let lin = IntPoly::new(vec![BigInt::from(2) * x, -BigInt::one()]);
        sylvester_det(chi, r, &compose(chi, &lin), r)
    })
}

// From T(w) = Res_y(χ(y), χ(y + w)) = w^r·P(w²), form P(−4x²); its roots
// include Im λ for every non-real root λ (since λ − λ̄ = 2i·Im λ).
fn imag_part_poly(chi: &IntPoly) -> Result<IntPoly, FusionError> {
    let r = chi.degree();
    let t = interpolate_fn(r * r, |w| {
        let lin = IntPoly::new(vec![w.clone(), BigInt::one()]);
        sylvester_det(chi, r, &compose(chi, &lin), r)
    });
    let c = t.coeffs();
    let first = c.iter().position(|a| !a.is_zero()).ok_or_else(|| err("difference resultant vanished"))?;
    let stripped = &c[first..];
    if stripped.iter().skip(1).step_by(2).any(|a| !a.is_zero()) {
        return Err(err("difference resultant is not even"));
    }
    let mut q = vec![BigInt::zero(); stripped.len()];
    let mut pow = BigInt::one();
    for (k, a) in stripped.iter().step_by(2).enumerate() {
        q[2 * k] = a * &pow;
        pow *= -4;
    }
    Ok(IntPoly::new(q).primitive())
}

fn horner(p: &IntPoly, z: &ComplexAlgebraic) -> ComplexAlgebraic {
    let mut acc = ComplexAlgebraic::from_int(0);
    for a in p.coeffs().iter().rev() {
        let c = ComplexAlgebraic::real(AlgebraicReal::from_rational(Rat::from_integer(a.clone())));
        acc = acc.mul(z).add(&c);
    }
    acc
}

fn real_character(lam: &AlgebraicReal, adj: &[IntPoly]) -> Result<Vec<ComplexAlgebraic>, FusionError> {
    let den = &adj[0];
    let mut row = vec![ComplexAlgebraic::from_int(1)];
    for num in &adj[1..] {
        let v = eval_ratio(lam, num, den)?;
        row.push(ComplexAlgebraic::real(v));
    }
    Ok(row)
}

// num(λ)/den(λ) as an exact real, via Res_y(p(y), x·den(y) − num(y)).
fn eval_ratio(lam: &AlgebraicReal, num: &IntPoly, den: &IntPoly) -> Result<AlgebraicReal, FusionError> {
    if let Some(q) = lam.as_rational() {
        let d = den.eval_rat(&q);
        if d.is_zero() {
            return Err(err("adjugate column vanished"));
        }
        return Ok(AlgebraicReal::from_rational(num.eval_rat(&q) / d));
    }
    let res = resultant_rational_fn(lam.minpoly(), num, den);
    if res.is_zero() {
        return Err(err("adjugate column vanished"));
    }
    Ok(AlgebraicReal::isolate_with(&res, |bits| ratio_enclosure(lam, num, den, bits)))
}

// Interval for num(λ)/den(λ); den(λ) ≠ 0, so enough precision clears zero.
fn ratio_enclosure(l: &AlgebraicReal, num: &IntPoly, den: &IntPoly, mut bits: u32) -> RatInterval {
    loop {
        let iv = l.enclosure(bits);
        if let Some(dinv) = eval_interval(den, &iv).recip() {
            return eval_interval(num, &iv).mul(&dinv);
        }
        bits += 8;
    }
}

fn eval_interval(p: &IntPoly, x: &RatInterval) -> RatInterval {
    let mut acc = RatInterval::point(Rat::zero());
    for a in p.coeffs().iter().rev() {
        acc = acc.mul(x).add(&RatInterval::point(Rat::from_integer(a.clone())));
    }
    acc
}

fn complex_character(lam: &ComplexAlgebraic, adj: &[IntPoly]) -> Result<Vec<ComplexAlgebraic>, FusionError> {
    let den = horner(&adj[0], lam);
    let mut row = vec![ComplexAlgebraic::from_int(1)];
    for num in &adj[1..] {
        let v = horner(num, lam).div(&den).map_err(|_| err("adjugate column vanished"))?;
        row.push(v);
    }
    Ok(row)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z3_characters_are_cube_roots() {
        let r = FusionRing::cyclic(3);
        let t = r.character_table().unwrap();
        assert_eq!(t.len(), 3);
        for row in &t.values {
            let w = &row[1];
            assert_eq!(w.mul(w).mul(w), ComplexAlgebraic::from_int(1));
        }
        assert!(t.values[t.fp].iter().all(|z| *z == ComplexAlgebraic::from_int(1)));
    }

    #[test]
    fn fibonacci_characters() {
        let r = FusionRing::from_rule(2, vec![0, 1], |i, j| match (i, j) {
            (0, x) | (x, 0) => vec![x],
            _ => vec![0, 1],
        })
        .unwrap();
        let t = r.character_table().unwrap();
        let phi = &t.values[t.fp][1];
        assert_eq!(phi.re.minpoly(), &IntPoly::from_i64(&[-1, -1, 1]));
        assert!(t.is_real());
    }
}
