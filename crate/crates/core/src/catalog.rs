//! Closed-form oracle categories: SU(2)_K and its even-label part PSU(2)_K
//! at q = exp(πi·t/(K+2)), sVec, pointed ℤ₃, and the rank ≤ 3 modular list.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::algebra::{CyclotomicElement, Matrix, RootOfUnity};
use crate::fusion_ring::FusionRing;
use crate::premodular::PremodularData;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("bad parameters: {0}")]
    BadParameters(String),
}

/// Where an entry's data came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub family: String,
    pub level: Option<u32>,
    pub galois_t: Option<i64>,
    pub conductor: u32,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub data: PremodularData,
    pub provenance: Provenance,
}

// [n]_q = q^{n−1} + q^{n−3} + … + q^{−(n−1)} with q = ζ_{2(K+2)}^t.
fn q_integer(n: i64, two_l: u32, t: i64) -> CyclotomicElement {
    let mut acc = CyclotomicElement::zero();
    for m in 0..n {
        acc = acc.add(&CyclotomicElement::root_of_unity(two_l, t * (n - 1 - 2 * m)));
    }
    acc
}

fn su2_fuses(level: usize, a: usize, b: usize, c: usize) -> bool {
    let lo = a.abs_diff(b);
    let hi = (a + b).min(2 * level - a - b);
    lo <= c && c <= hi && (a + b + c).is_multiple_of(2)
}

fn su2_family(
    level: u32,
    t: i64,
    labels: Vec<usize>,
    family: &str,
    name: String,
) -> Result<CatalogEntry, CatalogError> {
    let l = level as i64 + 2;
    if t.gcd(&(4 * l)) != 1 {
        return Err(CatalogError::BadParameters(format!("t = {t} is not coprime to {}", 4 * l)));
    }
    let r = labels.len();
    let k = level as usize;
    let ring = FusionRing::from_rule(r, (0..r).collect(), |i, j| {
        (0..r).filter(|&c| su2_fuses(k, labels[i], labels[j], labels[c])).collect()
    })
    .expect("label ranges are consistent");
    let two_l = 2 * l as u32;
    let s: Matrix<CyclotomicElement> = labels
        .iter()
        .map(|&a| labels.iter().map(|&b| q_integer(((a + 1) * (b + 1)) as i64, two_l, t)).collect())
        .collect();
    let theta = labels.iter().map(|&j| RootOfUnity::new(t * (j * (j + 2)) as i64, 4 * l).expect("positive")).collect();
    let names = labels.iter().map(|j| format!("j={j}")).collect();
    let data = PremodularData::new(name.clone(), ring).with_stilde(s).with_twists(theta).with_labels(names);
    Ok(CatalogEntry {
        name,
        data,
        provenance: Provenance {
            family: family.into(),
            level: Some(level),
            galois_t: Some(t),
            conductor: 4 * l as u32,
        },
    })
}

/// SU(2)_K with all labels 0..=K.
pub fn su2(level: u32, t: i64) -> Result<CatalogEntry, CatalogError> {
    let name = if t == 1 { format!("SU(2)_{level}") } else { format!("SU(2)_{level}^(t={t})") };
    su2_family(level, t, (0..=level as usize).collect(), "SU(2)", name)
}

/// PSU(2)_K: the even labels 0, 2, …, of SU(2)_K.
pub fn psu2(level: u32, t: i64) -> Result<CatalogEntry, CatalogError> {
    let name = if t == 1 { format!("PSU(2)_{level}") } else { format!("PSU(2)_{level}^(t={t})") };
    su2_family(level, t, (0..=level as usize).step_by(2).collect(), "PSU(2)", name)
}

/// PSU(2)_{4k+2} for k ∈ {0, 1, 2}, with gcd(t, 4k+4) = 1.
pub fn psu2_adjoint(k: u32, t: i64) -> Result<CatalogEntry, CatalogError> {
    if k > 2 {
        return Err(CatalogError::BadParameters(format!("k = {k} is outside 0..=2")));
    }
    let m = 4 * k as i64 + 4;
    if t.gcd(&m) != 1 {
        return Err(CatalogError::BadParameters(format!("gcd({t}, {m}) ≠ 1")));
    }
    let mut e = psu2(4 * k + 2, t)?;
    let labels: Vec<&str> = match k {
        0 => vec!["1", "f"],
        1 => vec!["1", "X1", "fX1", "f"],
        _ => vec!["1", "X1", "X2", "fX2", "fX1", "f"],
    };
    e.data.labels = Some(labels.into_iter().map(String::from).collect());
    Ok(e)
}

pub fn svec() -> CatalogEntry {
    let one = CyclotomicElement::one();
    let s = vec![vec![one.clone(), one.clone()], vec![one.clone(), one]];
    let data = PremodularData::new("sVec", FusionRing::cyclic(2))
        .with_stilde(s)
        .with_twists(vec![RootOfUnity::one(), RootOfUnity::minus_one()])
        .with_labels(vec!["1".into(), "f".into()]);
    CatalogEntry {
        name: "sVec".into(),
        data,
        provenance: Provenance { family: "sVec".into(), level: None, galois_t: None, conductor: 2 },
    }
}

/// Pointed modular ℤ₃ with θ = (1, ω, ω).
pub fn pointed_z3() -> CatalogEntry {
    let w = |k: i64| CyclotomicElement::root_of_unity(3, k);
    let s = vec![vec![w(0), w(0), w(0)], vec![w(0), w(1), w(2)], vec![w(0), w(2), w(1)]];
    let theta = vec![RootOfUnity::one(), RootOfUnity::new(1, 3).unwrap(), RootOfUnity::new(1, 3).unwrap()];
    let data = PremodularData::new("Z3", FusionRing::cyclic(3)).with_stilde(s).with_twists(theta).with_labels(vec![
        "1".into(),
        "g".into(),
        "g2".into(),
    ]);
    CatalogEntry {
        name: "Z3".into(),
        data,
        provenance: Provenance { family: "pointed".into(), level: None, galois_t: None, conductor: 3 },
    }
}

pub fn semion() -> CatalogEntry {
    let mut e = su2(1, 1).expect("valid");
    e.name = "semion".into();
    e.data.name = e.name.clone();
    e.data.labels = Some(vec!["1".into(), "s".into()]);
    e
}

pub fn fibonacci() -> CatalogEntry {
    let mut e = psu2(3, 1).expect("valid");
    e.name = "Fib".into();
    e.data.name = e.name.clone();
    e.data.labels = Some(vec!["1".into(), "tau".into()]);
    e
}

/// Ising-type data, realised as SU(2)_2 (labels 1, σ, ψ).
pub fn ising() -> CatalogEntry {
    let mut e = su2(2, 1).expect("valid");
    e.name = "Ising".into();
    e.data.name = e.name.clone();
    e.data.labels = Some(vec!["1".into(), "sigma".into(), "psi".into()]);
    e
}

pub fn ising_rules() -> FusionRing {
    ising().data.ring
}

pub fn psu2_5() -> CatalogEntry {
    let mut e = psu2(5, 1).expect("valid");
    e.data.labels = Some(vec!["1".into(), "X1".into(), "X2".into()]);
    e
}

/// Semion, Fibonacci, ℤ₃, Ising, PSU(2)₅ with their modular data.
pub fn rank_le3_modular_entries() -> Vec<CatalogEntry> {
    vec![semion(), fibonacci(), pointed_z3(), ising(), psu2_5()]
}

pub fn rank_le3_modular_list() -> Vec<FusionRing> {
    rank_le3_modular_entries().into_iter().map(|e| e.data.ring).collect()
}

/// Every entry written by `catalog emit`.
pub fn all_entries() -> Vec<CatalogEntry> {
    let mut ising_rules_only = ising();
    ising_rules_only.name = "Ising-rules".into();
    ising_rules_only.data.name = ising_rules_only.name.clone();
    ising_rules_only.data.stilde = None;
    ising_rules_only.data.twists = None;
    ising_rules_only.provenance.family = "fusion rules only".into();
    vec![
        svec(),
        psu2_adjoint(0, 1).expect("valid"),
        psu2_adjoint(1, 1).expect("valid"),
        psu2_adjoint(2, 1).expect("valid"),
        semion(),
        fibonacci(),
        pointed_z3(),
        ising(),
        ising_rules_only,
        psu2_5(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn psu2_2_is_svec() {
        let a = psu2_adjoint(0, 1).unwrap();
        let b = svec();
        assert_eq!(a.data.stilde, b.data.stilde);
        assert_eq!(a.data.twists, b.data.twists);
    }

    #[test]
    fn bad_galois_parameter() {
        assert!(matches!(psu2_adjoint(1, 2), Err(CatalogError::BadParameters(_))));
        assert!(matches!(psu2_adjoint(3, 1), Err(CatalogError::BadParameters(_))));
    }
}
