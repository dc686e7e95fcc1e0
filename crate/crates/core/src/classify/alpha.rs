//! Indicator feasibility for the one-parameter family
//! (k, ℓ, m, n) = (2α, 1, 2α², α).

use serde::Serialize;

use crate::algebra::{AlgebraicReal, Rat};

/// Exact inequality data for one α.
#[derive(Clone, Debug, Serialize)]
pub struct AlphaCertificate {
    pub alpha: u32,
    /// d₂ = α + √(α²+2), as "minpoly | interval".
    pub d2: String,
    pub d1: String,
    /// A = 2α d₁² + α d₂² (diagonal terms of the indicator sum for X₂).
    pub a: String,
    /// B = 2(d₁d₂ + d₂) (largest possible off-diagonal contribution).
    pub b: String,
    /// D²/2 = 1 + d₁² + d₂².
    pub half_dsq: String,
    /// A − B − D²/2; positive means ±D²/2 lies outside [A − B, A + B].
    pub gap: String,
    /// Rational lower bound for the gap (when the gap is positive).
    pub gap_lower_bound: Option<String>,
    /// d₂, d₁, A − B, D²/2, gap rounded to f64, for human readers only.
    #[serde(rename = "approx_f64_d2_d1_amb_halfdsq_gap")]
    pub approx: [f64; 5],
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum AlphaVerdict {
    Feasible(AlphaCertificate),
    Infeasible(AlphaCertificate),
}

impl AlphaVerdict {
    pub fn is_feasible(&self) -> bool {
        matches!(self, AlphaVerdict::Feasible(_))
    }

    pub fn certificate(&self) -> &AlphaCertificate {
        match self {
            AlphaVerdict::Feasible(c) | AlphaVerdict::Infeasible(c) => c,
        }
    }
}

fn describe(x: &AlgebraicReal) -> String {
    match x.as_rational() {
        Some(q) => q.to_string(),
        None => {
            let (lo, hi) = x.interval();
            format!("root of {} in [{lo}, {hi}]", x.minpoly())
        }
    }
}

/// Exact d₁, d₂, A, B, D²/2 and A − B − D²/2 for one α.
#[derive(Clone, Debug)]
pub struct AlphaQuantities {
    pub d1: AlgebraicReal,
    pub d2: AlgebraicReal,
    pub a: AlgebraicReal,
    pub b: AlgebraicReal,
    pub half_dsq: AlgebraicReal,
    pub gap: AlgebraicReal,
}

pub fn alpha_quantities(alpha: u32) -> AlphaQuantities {
    let a_ = AlgebraicReal::from_int(alpha as i64);
    let two = AlgebraicReal::from_int(2);
    let root =
        AlgebraicReal::sqrt_rational(&Rat::from_integer((alpha as i64 * alpha as i64 + 2).into())).expect("positive");
    let d2 = a_.add(&root);
    let d1 = AlgebraicReal::one().add(&a_.mul(&d2));
    let d1sq = d1.mul(&d1);
    let d2sq = d2.mul(&d2);
    let a = two.mul(&a_).mul(&d1sq).add(&a_.mul(&d2sq));
    let b = two.mul(&d1.mul(&d2).add(&d2));
    let half_dsq = AlgebraicReal::one().add(&d1sq).add(&d2sq);
    let gap = a.sub(&b).sub(&half_dsq);
    AlphaQuantities { d1, d2, a, b, half_dsq, gap }
}

/// Whether ν₂(X₂) = ±1 is compatible with |Re(θ-ratios)| ≤ 1.
///
/// The indicator sum equals A + (terms bounded in absolute value by B), so
/// ±D²/2 must lie in [A − B, A + B]. Since A − B > 0 for the relevant α,
/// only +D²/2 can work, and it fails exactly when A − B > D²/2.
pub fn alpha_feasibility(alpha: u32) -> AlphaVerdict {
    let AlphaQuantities { d1, d2, a, b, half_dsq: half, gap } = alpha_quantities(alpha);
    let lo = a.sub(&b);
    let hi = a.add(&b);
    let fits = |v: &AlgebraicReal| lo <= *v && *v <= hi;
    let feasible = fits(&half) || fits(&half.neg());
    let gap_lower_bound = (gap.sign() > 0).then(|| {
        // narrow until the lower end is itself positive
        let mut eps = Rat::new(1.into(), 1.into());
        loop {
            let (l, _) = gap.refine(&eps);
            if l > Rat::from_integer(0.into()) {
                return l.to_string();
            }
            eps /= Rat::from_integer(16.into());
        }
    });
    let cert = AlphaCertificate {
        alpha,
        d2: describe(&d2),
        d1: describe(&d1),
        a: describe(&a),
        b: describe(&b),
        half_dsq: describe(&half),
        gap: describe(&gap),
        gap_lower_bound,
        approx: [d1.to_f64(), d2.to_f64(), a.to_f64(), b.to_f64(), half.to_f64()],
    };
    if feasible {
        AlphaVerdict::Feasible(cert)
    } else {
        AlphaVerdict::Infeasible(cert)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_alphas() {
        assert!(alpha_feasibility(0).is_feasible());
        assert!(alpha_feasibility(1).is_feasible());
        let v = alpha_feasibility(2);
        assert!(!v.is_feasible());
        assert!(v.certificate().gap_lower_bound.is_some());
    }
}
