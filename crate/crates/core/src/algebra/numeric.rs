//! Floating-point helpers. Nothing here decides a verdict: results are only
//! used to propose candidates that are then confirmed exactly.

use num_complex::Complex64;

use super::poly::IntPoly;

/// All complex roots of `p` by Aberth–Ehrlich iteration, or `None` if the
/// coefficients do not fit in f64 or the iteration fails to settle.
pub fn complex_roots(p: &IntPoly) -> Option<Vec<Complex64>> {
    let c = p.to_f64_coeffs()?;
    let n = c.len().checked_sub(1)?;
    if n == 0 {
        return Some(vec![]);
    }
    let lc = c[n];
    let a: Vec<f64> = c.iter().map(|x| x / lc).collect();
    let bound = 1.0 + a[..n].iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let eval = |z: Complex64| -> (Complex64, Complex64) {
        let mut p = Complex64::new(1.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for k in (0..n).rev() {
            dp = dp * z + p;
            p = p * z + a[k];
        }
        (p, dp)
    };
    let r0 = bound.min(1e6) * 0.5 + 0.1;
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let th = 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64 + 0.4;
            Complex64::from_polar(r0, th)
        })
        .collect();
    for _ in 0..2000 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (pv, dv) = eval(z[i]);
            if pv.norm() == 0.0 {
                continue;
            }
            let ratio = pv / dv;
            let s: Complex64 = (0..n).filter(|&j| j != i).map(|j| 1.0 / (z[i] - z[j])).sum();
            let w = ratio / (1.0 - ratio * s);
            if !w.re.is_finite() || !w.im.is_finite() {
                return None;
            }
            z[i] -= w;
            moved = moved.max(w.norm() / (1.0 + z[i].norm()));
        }
        if moved < 1e-15 {
            return Some(z);
        }
    }
    // accept a slow finish; downstream checks are exact anyway
    Some(z)
}

/// Polynomial with the given (complex) roots, times `scale`; real parts only.
pub fn expand_real(roots: &[Complex64], scale: f64) -> Vec<f64> {
    let mut c = vec![Complex64::new(scale, 0.0)];
    for r in roots {
        let mut n = vec![Complex64::new(0.0, 0.0); c.len() + 1];
        for (k, a) in c.iter().enumerate() {
            n[k + 1] += a;
            n[k] -= a * r;
        }
        c = n;
    }
    c.into_iter().map(|x| x.re).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_cyclotomic_like() {
        let p = IntPoly::from_i64(&[1, 1, 1]);
        let r = complex_roots(&p).unwrap();
        assert_eq!(r.len(), 2);
        for z in r {
            assert!((z.norm() - 1.0).abs() < 1e-9);
        }
    }
}
