//! Premodular data: verification of S̃/θ, Müger center, fermions and
//! fusion-level split detection.

use serde::{Deserialize, Serialize};

use crate::algebra::matrix::{asymmetry, Matrix};
use crate::algebra::{AlgebraError, AlgebraicReal, CyclotomicElement, RootOfUnity};
use crate::fusion_ring::{DimensionVector, FusionError, FusionRing};
use crate::report::ValidationReport;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum PremodularError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("S̃ matrix is required for this operation")]
    MissingS,
    #[error("twists are required for this operation")]
    MissingTwists,
    #[error("data is not super-modular")]
    NotSuperModular,
    #[error("dimension is not a positive real number at label {0}")]
    BadDimension(usize),
    #[error(transparent)]
    Fusion(#[from] FusionError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Fusion ring with optional S̃ and twists.
#[derive(Clone, Debug)]
pub struct PremodularData {
    pub name: String,
    pub labels: Option<Vec<String>>,
    pub ring: FusionRing,
    pub stilde: Option<Matrix<CyclotomicElement>>,
    pub twists: Option<Vec<RootOfUnity>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Modular,
    SuperModular,
    Symmetric,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterReport {
    pub transparent: Vec<usize>,
    pub verdict: Verdict,
    /// The fermion, when the center is sVec (this includes sVec itself,
    /// whose verdict is `Symmetric`).
    pub fermion: Option<usize>,
    pub notes: Vec<String>,
}

impl CenterReport {
    /// Center equal to {0, f} with f a fermion.
    pub fn is_super_modular(&self) -> bool {
        self.fermion.is_some() && self.transparent.len() == 2
    }
}

/// A fusion-level factorization `ring ≅ factor ⊠ sVec`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitWitness {
    /// Component-0 labels of the grading, unit first.
    pub factor_labels: Vec<usize>,
    pub factor: FusionRing,
    pub grading: Vec<u8>,
    /// `iso[x]` is the label of `ring` matching label `x` of `factor ⊠ sVec`.
    pub iso: Vec<usize>,
    /// FPdim(factor) = FPdim(ring)/2 held exactly.
    pub fpdim_criterion: bool,
}

impl PremodularData {
    pub fn new(name: impl Into<String>, ring: FusionRing) -> Self {
        PremodularData { name: name.into(), labels: None, ring, stilde: None, twists: None }
    }

    pub fn with_stilde(mut self, s: Matrix<CyclotomicElement>) -> Self {
        self.stilde = Some(s);
        self
    }

    pub fn with_twists(mut self, t: Vec<RootOfUnity>) -> Self {
        self.twists = Some(t);
        self
    }

    pub fn with_labels(mut self, l: Vec<String>) -> Self {
        self.labels = Some(l);
        self
    }

    pub fn rank(&self) -> usize {
        self.ring.rank()
    }

    pub fn label(&self, i: usize) -> String {
        self.labels.as_ref().and_then(|l| l.get(i).cloned()).unwrap_or_else(|| i.to_string())
    }

    pub fn s(&self) -> Result<&Matrix<CyclotomicElement>, PremodularError> {
        self.stilde.as_ref().ok_or(PremodularError::MissingS)
    }

    pub fn theta(&self) -> Result<&[RootOfUnity], PremodularError> {
        self.twists.as_deref().ok_or(PremodularError::MissingTwists)
    }

    fn check_shape(&self) -> Result<(), PremodularError> {
        let r = self.rank();
        if let Some(s) = &self.stilde {
            if s.len() != r || s.iter().any(|row| row.len() != r) {
                return Err(PremodularError::ShapeMismatch(format!("S̃ must be {r}×{r}")));
            }
        }
        if let Some(t) = &self.twists {
            if t.len() != r {
                return Err(PremodularError::ShapeMismatch(format!("{} twists for rank {r}", t.len())));
            }
        }
        Ok(())
    }

    /// d_i = S̃_{0,i} as exact reals, with D² = Σ d_i².
    pub fn dims(&self) -> Result<DimensionVector, PremodularError> {
        let s = self.s()?;
        let mut entries = Vec::with_capacity(self.rank());
        let mut total = CyclotomicElement::zero();
        for (i, d) in s[0].iter().enumerate() {
            let v = d.to_algebraic_real().map_err(|_| PremodularError::BadDimension(i))?;
            entries.push(v);
            total = total.add(&d.mul(d));
        }
        Ok(DimensionVector { entries, total: total.to_algebraic_real()? })
    }

    /// D² = Σ S̃_{0,i}² as a cyclotomic element.
    pub fn global_dim_cyc(&self) -> Result<CyclotomicElement, PremodularError> {
        let s = self.s()?;
        Ok(s[0].iter().fold(CyclotomicElement::zero(), |acc, d| acc.add(&d.mul(d))))
    }

    /// The label f·i (f invertible).
    pub fn act(&self, f: usize, i: usize) -> usize {
        fusion_act(&self.ring, f, i)
    }
}

/// The unique k with N_{f,i}^k ≠ 0, for invertible f.
pub fn fusion_act(ring: &FusionRing, f: usize, i: usize) -> usize {
    (0..ring.rank()).find(|&k| ring.n(f, i, k) != 0).expect("f ⊗ X is nonzero")
}

/// Check S̃ and θ against the fusion ring; see the individual check names.
pub fn verify_premodular(data: &PremodularData) -> Result<ValidationReport, PremodularError> {
    data.check_shape()?;
    let r = data.rank();
    let ring = &data.ring;
    let mut rep = ValidationReport::new(format!("premodular data '{}'", data.name));
    let fr = ring.validate();
    match fr.first_failure() {
        Some(c) => rep.fail("fusion_ring", format!("{} failed", c.name), c.witness.clone()),
        None => rep.pass("fusion_ring"),
    }

    let Some(s) = &data.stilde else {
        for name in ["stilde_symmetric", "dims_positive", "dual_conjugation", "character_property", "balancing"] {
            rep.skip(name, "missing data: S̃");
        }
        match &data.twists {
            Some(t) => rep.record("twist_unit", (t[0] != RootOfUnity::one()).then(|| ("θ_0 ≠ 1".into(), vec![0]))),
            None => rep.skip("twist_unit", "missing data: twists"),
        }
        return Ok(rep);
    };

    rep.record("stilde_symmetric", asymmetry(s).map(|(i, j)| ("S̃_{ij} ≠ S̃_{ji}".into(), vec![i, j])));

    let mut pos = None;
    if s[0][0] != CyclotomicElement::one() {
        pos = Some(("S̃_{00} ≠ 1".to_string(), vec![0]));
    } else {
        for (i, d) in s[0].iter().enumerate() {
            let ok = d.to_algebraic_real().map(|v| v.sign() > 0).unwrap_or(false);
            if !ok {
                pos = Some((format!("d_{i} = S̃_{{0,{i}}} is not a positive real"), vec![i]));
                break;
            }
        }
    }
    rep.record("dims_positive", pos);

    let mut conj = None;
    'c: for i in 0..r {
        for j in 0..r {
            if s[i][ring.dual(j)] != s[i][j].conj() {
                conj = Some(("S̃_{i,j*} ≠ conj S̃_{i,j}".into(), vec![i, j]));
                break 'c;
            }
        }
    }
    rep.record("dual_conjugation", conj);

    rep.record(
        "character_property",
        character_violation(ring, s).map(|w| ("S̃_{ij}S̃_{ik} ≠ S̃_{0i} Σ_m N_{jk}^m S̃_{im}".into(), w)),
    );

    match &data.twists {
        None => {
            rep.skip("twist_unit", "missing data: twists");
            rep.skip("balancing", "missing data: twists");
        }
        Some(t) => {
            rep.record("twist_unit", (t[0] != RootOfUnity::one()).then(|| ("θ_0 ≠ 1".into(), vec![0])));
            rep.record(
                "balancing",
                balancing_violation(ring, s, t).map(|w| ("θ_iθ_jS̃_{ij} ≠ Σ_k N_{i*j}^k θ_k d_k".into(), w)),
            );
        }
    }
    Ok(rep)
}

fn character_violation(ring: &FusionRing, s: &Matrix<CyclotomicElement>) -> Option<Vec<usize>> {
    let r = ring.rank();
    for i in 0..r {
        for j in 0..r {
            for k in j..r {
                let lhs = s[i][j].mul(&s[i][k]);
                let mut acc = CyclotomicElement::zero();
                for m in 0..r {
                    let c = ring.n(j, k, m);
                    if c != 0 {
                        acc = acc.add(&s[i][m].scale(&crate::algebra::Rat::from_integer(c.into())));
                    }
                }
                if lhs != s[0][i].mul(&acc) {
                    return Some(vec![i, j, k]);
                }
            }
        }
    }
    None
}

fn balancing_violation(ring: &FusionRing, s: &Matrix<CyclotomicElement>, t: &[RootOfUnity]) -> Option<Vec<usize>> {
    let r = ring.rank();
    let th: Vec<CyclotomicElement> = t.iter().map(|x| x.to_cyclotomic()).collect();
    for i in 0..r {
        for j in i..r {
            let lhs = th[i].mul(&th[j]).mul(&s[i][j]);
            let mut rhs = CyclotomicElement::zero();
            for k in 0..r {
                let c = ring.n(ring.dual(i), j, k);
                if c != 0 {
                    rhs = rhs.add(&th[k].mul(&s[0][k]).scale(&crate::algebra::Rat::from_integer(c.into())));
                }
            }
            if lhs != rhs {
                return Some(vec![i, j]);
            }
        }
    }
    None
}

/// Transparent labels and the modular / super-modular / symmetric verdict.
pub fn muger_center(data: &PremodularData) -> Result<CenterReport, PremodularError> {
    data.check_shape()?;
    let s = data.s()?;
    let r = data.rank();
    let transparent: Vec<usize> = (0..r).filter(|&i| (0..r).all(|j| s[i][j] == s[0][i].mul(&s[0][j]))).collect();
    let mut notes = vec![];
    if transparent.len() == 1 {
        return Ok(CenterReport { transparent, verdict: Verdict::Modular, fermion: None, notes });
    }
    let symmetric = transparent.len() == r;
    let mut fermion = None;
    if transparent.len() == 2 {
        let f = transparent[1];
        let twists = data.theta()?;
        let invertible = data.ring.invertibles().contains(&f) && data.ring.n(f, f, 0) == 1;
        if !invertible {
            notes.push(format!("transparent label {f} is not an invertible of order 2"));
        } else if twists[f] != RootOfUnity::minus_one() {
            notes.push(format!("transparent label {f} has θ = {}; not a fermion", twists[f]));
        } else {
            match fermion_consistency(data, f, twists) {
                Ok(()) => fermion = Some(f),
                Err(msg) => notes.push(msg),
            }
        }
    }
    let verdict = match (symmetric, fermion) {
        (true, _) => Verdict::Symmetric,
        (false, Some(_)) => Verdict::SuperModular,
        (false, None) => Verdict::Other,
    };
    if verdict == Verdict::Symmetric && fermion.is_some() {
        notes.push("center is sVec and the whole category is symmetric".into());
    }
    Ok(CenterReport { transparent, verdict, fermion, notes })
}

// f acts freely, preserves dimensions, and flips twists.
fn fermion_consistency(data: &PremodularData, f: usize, twists: &[RootOfUnity]) -> Result<(), String> {
    let s = data.s().map_err(|e| e.to_string())?;
    for i in 0..data.rank() {
        let fi = data.act(f, i);
        if fi == i {
            return Err(format!("fermion fixes label {i}"));
        }
        if s[0][fi] != s[0][i] {
            return Err(format!("d_(f·{i}) ≠ d_{i}"));
        }
        if twists[fi] != twists[i].mul(&RootOfUnity::minus_one()) {
            return Err(format!("θ_(f·{i}) ≠ −θ_{i}"));
        }
    }
    Ok(())
}

/// Deligne product of premodular data; label `(i, j)` is `i·r₂ + j`.
pub fn deligne_product(a: &PremodularData, b: &PremodularData) -> PremodularData {
    let r2 = b.rank();
    let n = a.rank() * r2;
    let ring = a.ring.deligne_product(&b.ring);
    let mut out = PremodularData::new(format!("{} ⊠ {}", a.name, b.name), ring)
        .with_labels((0..n).map(|x| format!("{}⊠{}", a.label(x / r2), b.label(x % r2))).collect());
    if let (Some(sa), Some(sb)) = (&a.stilde, &b.stilde) {
        out.stilde =
            Some((0..n).map(|x| (0..n).map(|y| sa[x / r2][y / r2].mul(&sb[x % r2][y % r2])).collect()).collect());
    }
    if let (Some(ta), Some(tb)) = (&a.twists, &b.twists) {
        out.twists = Some((0..n).map(|x| ta[x / r2].mul(&tb[x % r2])).collect());
    }
    out
}

/// Split detection for super-modular data with fermion f.
pub fn split_detect(data: &PremodularData, f: usize) -> Result<Option<SplitWitness>, PremodularError> {
    let c = muger_center(data)?;
    if !c.is_super_modular() || c.fermion != Some(f) {
        return Err(PremodularError::NotSuperModular);
    }
    Ok(fusion_split_witness(&data.ring, f)?)
}

/// Fusion-level split test: a ℤ₂ grading with f in the odd part whose even
/// part `B₀` satisfies `B₀ ⊠ sVec ≅ ring`.
pub fn fusion_split_witness(ring: &FusionRing, f: usize) -> Result<Option<SplitWitness>, FusionError> {
    let svec = FusionRing::cyclic(2);
    for g in ring.z2_gradings() {
        if g[f] != 1 {
            continue;
        }
        let labels: Vec<usize> = (0..ring.rank()).filter(|&i| g[i] == 0).collect();
        let Some(factor) = ring.subring(&labels) else { continue };
        let prod = factor.deligne_product(&svec);
        let isos = prod.find_isomorphisms(ring);
        let Some(iso) = isos.into_iter().next() else { continue };
        let fpdim_criterion = fpdim_criterion(ring, &factor)?;
        return Ok(Some(SplitWitness { factor_labels: labels, factor, grading: g, iso, fpdim_criterion }));
    }
    Ok(None)
}

/// FPdim(sub) = FPdim(ring) / FPdim(sVec), exactly.
pub fn fpdim_criterion(ring: &FusionRing, sub: &FusionRing) -> Result<bool, FusionError> {
    let a = ring.fpdims()?.total;
    let b = sub.fpdims()?.total;
    Ok(b.mul(&AlgebraicReal::from_int(2)) == a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn svec(theta_f: RootOfUnity) -> PremodularData {
        let one = CyclotomicElement::one();
        PremodularData::new("sVec", FusionRing::cyclic(2))
            .with_stilde(vec![vec![one.clone(), one.clone()], vec![one.clone(), one]])
            .with_twists(vec![RootOfUnity::one(), theta_f])
    }

    #[test]
    fn svec_passes_and_is_symmetric() {
        let d = svec(RootOfUnity::minus_one());
        assert!(verify_premodular(&d).unwrap().passed());
        let c = muger_center(&d).unwrap();
        assert_eq!(c.verdict, Verdict::Symmetric);
        assert_eq!(c.fermion, Some(1));
        let w = split_detect(&d, 1).unwrap().unwrap();
        assert_eq!(w.factor.rank(), 1);
        assert!(w.fpdim_criterion);
    }

    #[test]
    fn boson_is_not_a_fermion() {
        let d = svec(RootOfUnity::one());
        let c = muger_center(&d).unwrap();
        assert_eq!(c.fermion, None);
        assert!(matches!(split_detect(&d, 1), Err(PremodularError::NotSuperModular)));
    }

    #[test]
    fn asymmetric_s_is_reported() {
        let mut d = svec(RootOfUnity::minus_one());
        d.stilde.as_mut().unwrap()[0][1] = CyclotomicElement::from_int(2);
        let rep = verify_premodular(&d).unwrap();
        let c = rep.check("stilde_symmetric").unwrap();
        assert_eq!(c.witness, Some(vec![0, 1]));
    }

    #[test]
    fn missing_s_skips() {
        let d = PremodularData::new("z2", FusionRing::cyclic(2));
        let rep = verify_premodular(&d).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.status("character_property"), Some(crate::report::Status::Skipped));
    }
}
