//! Spin modular categories: the ℤ₂-grading by a fermion, sector sizes,
//! admissible rank profiles, and the structural table up to rank 11.

use serde::Serialize;

use crate::algebra::CyclotomicElement;
use crate::catalog;
use crate::premodular::{muger_center, PremodularData, PremodularError, Verdict};
use crate::report::ValidationReport;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum SpinError {
    #[error("not spin modular: {0}")]
    NotSpinModular(String),
    #[error("total rank {total} is outside 2..=11{}", note.as_ref().map(|n| format!(" ({n})")).unwrap_or_default())]
    OutOfRange { total: usize, note: Option<String> },
    #[error(transparent)]
    Premodular(#[from] PremodularError),
}

/// |C|, |C₀|, |C_v|, |C_σ|.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SectorProfile {
    pub total: usize,
    pub c0: usize,
    pub cv: usize,
    pub csigma: usize,
}

impl SectorProfile {
    pub fn new(total: usize, c0: usize, cv: usize, csigma: usize) -> Self {
        SectorProfile { total, c0, cv, csigma }
    }

    /// The sector identities and bounds, one check each.
    pub fn check(&self) -> ValidationReport {
        let SectorProfile { total, c0, cv, csigma } = *self;
        let mut rep = ValidationReport::new(format!("profile {self:?}"));
        let fail = |ok: bool, s: String| (!ok).then(|| (s, vec![]));
        rep.record("c0_is_cv_plus_2csigma", fail(c0 == cv + 2 * csigma, format!("{c0} ≠ {cv} + 2·{csigma}")));
        rep.record("total_is_2c0_minus_csigma", fail(total + csigma == 2 * c0, format!("{total} ≠ 2·{c0} − {csigma}")));
        rep.record(
            "total_bounds",
            fail(3 * c0 <= 2 * total && total <= 2 * c0, format!("need 3·{c0}/2 ≤ {total} ≤ 2·{c0}")),
        );
        rep.record("even_sectors", fail(c0 % 2 == 0 && cv % 2 == 0, format!("c0 = {c0}, cv = {cv} must be even")));
        rep
    }

    pub fn is_consistent(&self) -> bool {
        self.check().passed()
    }
}

/// Labels of each sector and the block-structure checks on S̃.
#[derive(Clone, Debug)]
pub struct Sectors {
    pub c0: Vec<usize>,
    pub cv: Vec<usize>,
    pub csigma: Vec<usize>,
    pub profile: SectorProfile,
    pub blocks: ValidationReport,
}

/// Split a modular category with fermion f into C₀, C_v and C_σ.
pub fn sectorize(data: &PremodularData, f: usize) -> Result<Sectors, SpinError> {
    let r = data.rank();
    if f == 0 || f >= r {
        return Err(SpinError::NotSpinModular(format!("label {f} cannot be a fermion")));
    }
    let center = muger_center(data)?;
    if center.verdict != Verdict::Modular {
        return Err(SpinError::NotSpinModular(format!("Müger center is {:?}, not trivial", center.transparent)));
    }
    let ring = &data.ring;
    if !ring.invertibles().contains(&f) || ring.n(f, f, 0) != 1 {
        return Err(SpinError::NotSpinModular(format!("label {f} is not an invertible of order 2")));
    }
    if data.theta()?[f] != crate::algebra::RootOfUnity::minus_one() {
        return Err(SpinError::NotSpinModular(format!("θ_{f} ≠ −1")));
    }
    let s = data.s()?;
    let df = &s[0][f];
    // grading sign ε(X): S̃_{f,X} = ε(X)·d_f·d_X
    let mut eps = vec![0i8; r];
    for x in 0..r {
        eps[x] =
            grading_sign(s, f, x).ok_or_else(|| SpinError::NotSpinModular(format!("S̃_(f,{x}) is not ±d_f·d_{x}")))?;
    }
    let c0: Vec<usize> = (0..r).filter(|&x| eps[x] == 1).collect();
    let (cv, csigma): (Vec<usize>, Vec<usize>) = (0..r).filter(|&x| eps[x] == -1).partition(|&x| data.act(f, x) != x);
    let profile = SectorProfile::new(r, c0.len(), cv.len(), csigma.len());

    let mut blocks = ValidationReport::new(format!("S̃ blocks of {}", data.name));
    // S̃_{fX,Y} = ε(Y)·d_f·S̃_{X,Y}
    let mut bad = None;
    'outer: for x in 0..r {
        let fx = data.act(f, x);
        for y in 0..r {
            let rhs = df.mul(&s[x][y]);
            let rhs = if eps[y] == 1 { rhs } else { rhs.neg() };
            if s[fx][y] != rhs {
                bad = Some((format!("S̃_(f·{x},{y}) ≠ ±d_f·S̃_({x},{y})"), vec![x, y]));
                break 'outer;
            }
        }
    }
    blocks.record("fermion_sign_rule", bad);
    let mut bad = None;
    for &y in cv.iter().chain(&csigma) {
        if let Some(&z) = csigma.iter().find(|&&z| !s[y][z].is_zero()) {
            bad = Some((format!("S̃_({y},{z}) ≠ 0"), vec![y, z]));
            break;
        }
    }
    blocks.record("sigma_block_zero", bad);
    let consistency = profile.check();
    if !consistency.passed() {
        let c = consistency.first_failure().expect("a failure");
        return Err(SpinError::NotSpinModular(format!("{}: {}", c.name, c.detail)));
    }
    blocks.extend(consistency);
    Ok(Sectors { c0, cv, csigma, profile, blocks })
}

/// Profiles allowed for a total rank, with exclusion notes.
#[derive(Clone, Debug, Serialize)]
pub struct RankProfiles {
    pub total: usize,
    pub profiles: Vec<SectorProfile>,
    pub excluded: bool,
    pub notes: Vec<String>,
}

fn profiles_for(total: usize) -> Vec<SectorProfile> {
    (0..=total)
        .filter_map(|c0| {
            let csigma = (2 * c0).checked_sub(total)?;
            let cv = c0.checked_sub(2 * csigma)?;
            let p = SectorProfile::new(total, c0, cv, csigma);
            p.is_consistent().then_some(p)
        })
        .collect()
}

/// Every profile satisfying the sector identities for `total`.
pub fn rank_profiles(total: usize) -> Result<RankProfiles, SpinError> {
    if !(2..=11).contains(&total) {
        let note = (total == 12).then(|| {
            let c0: Vec<String> = profiles_for(12).iter().map(|p| p.c0.to_string()).collect();
            format!("total 12 would allow c0 ∈ {{{}}}", c0.join(", "))
        });
        return Err(SpinError::OutOfRange { total, note });
    }
    let profiles = profiles_for(total);
    let mut notes = vec![];
    if profiles.is_empty() {
        // the upper bound alone forces the largest even c0 with 3·c0 ≤ 2·total
        let c0 = (2 * total / 3) & !1;
        notes.push(format!(
            "c0 even with 3·c0/2 ≤ {total} forces c0 ≤ {c0}, and then total ≤ 2·c0 = {} < {total}; no spin modular category has this rank",
            2 * c0
        ));
    }
    Ok(RankProfiles { total, excluded: profiles.is_empty(), profiles, notes })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

/// One (|D|, N-parity) combination with |D|·rank(SO(N)₁) = total.
#[derive(Clone, Debug, Serialize)]
pub struct ProductForm {
    pub d_rank: usize,
    pub n_parity: Parity,
    pub profile: SectorProfile,
    /// Modular fusion classes of rank |D| from the rank ≤ 3 list.
    pub candidates_for_d: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SpinDescriptor {
    /// D ⊠ SO(N)₁ with |D| ≤ 3 and N ≤ 16; `forms` may be empty.
    Product { forms: Vec<ProductForm>, text: String },
    /// One of the 16 minimal modular extensions of a non-split super-modular category.
    Extension { of: String, count: usize, profile: Option<SectorProfile>, text: String },
}

#[derive(Clone, Debug, Serialize)]
pub struct SpinClassification {
    pub total: usize,
    pub profiles: Vec<SectorProfile>,
    pub descriptors: Vec<SpinDescriptor>,
    pub dependencies: Vec<String>,
    pub notes: Vec<String>,
}

// rank(SO(N)₁): derived from the profile identities, not quoted.
fn so_n_rank(p: Parity) -> usize {
    match p {
        Parity::Odd => 3,
        Parity::Even => 4,
    }
}

fn pool_names(rank: usize) -> Vec<String> {
    if rank == 1 {
        return vec!["Vec".into()];
    }
    catalog::rank_le3_modular_entries().into_iter().filter(|e| e.data.rank() == rank).map(|e| e.name).collect()
}

/// Structural descriptors for spin modular categories of a given rank.
pub fn classify_spin(total: usize) -> Result<SpinClassification, SpinError> {
    let rp = rank_profiles(total)?;
    let mut deps = vec![];
    let mut forms = vec![];
    for d_rank in 1..=3 {
        for parity in [Parity::Odd, Parity::Even] {
            if d_rank * so_n_rank(parity) != total {
                continue;
            }
            // odd N: SO(N)₁ has one f-fixed simple, so csigma = |D|
            let csigma = if parity == Parity::Odd { d_rank } else { 0 };
            let Some(&profile) = rp.profiles.iter().find(|p| p.csigma == csigma) else { continue };
            forms.push(ProductForm { d_rank, n_parity: parity, profile, candidates_for_d: pool_names(d_rank) });
        }
    }
    let text = if forms.is_empty() {
        format!("D ⊠ SO(N)_1 with N ≤ 16, |D| ≤ 3: no |D|·rank(SO(N)_1) equals {total}")
    } else {
        "D ⊠ SO(N)_1 with N ≤ 16 and D modular, |D| ≤ 3".to_string()
    };
    let mut descriptors = vec![SpinDescriptor::Product { forms, text }];
    let ext = match total {
        7 => Some("PSU(2)_6"),
        10 | 11 => Some("PSU(2)_10"),
        _ => None,
    };
    if let Some(of) = ext {
        let c0 = if of == "PSU(2)_6" { 4 } else { 6 };
        descriptors.push(SpinDescriptor::Extension {
            of: of.into(),
            count: 16,
            profile: rp.profiles.iter().find(|p| p.c0 == c0).copied(),
            text: format!("one of the 16 minimal modular extensions of {of}"),
        });
        deps.push("[KLW] sixteen minimal modular extensions".to_string());
    }
    if (3..=5).contains(&total) {
        deps.push("[kitaev] spin modular categories of dimension 4".into());
    }
    let mut notes = rp.notes.clone();
    notes.push("rank(SO(N)_1) = 3 for odd N and 4 for even N is derived metadata".into());
    Ok(SpinClassification { total, profiles: rp.profiles, descriptors, dependencies: deps, notes })
}

/// ε(X) with S̃_{f,X} = ε(X)·d_f·d_X, if X is homogeneous.
pub fn grading_sign(s: &[Vec<CyclotomicElement>], f: usize, x: usize) -> Option<i8> {
    let dd = s[0][f].mul(&s[0][x]);
    if s[f][x] == dd {
        Some(1)
    } else if s[f][x] == dd.neg() {
        Some(-1)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ising_profile() {
        let e = catalog::ising();
        let s = sectorize(&e.data, 2).unwrap();
        assert_eq!(s.profile, SectorProfile::new(3, 2, 0, 1));
        assert!(s.blocks.passed(), "{}", s.blocks);
    }

    #[test]
    fn violation_is_reported() {
        let bad = SectorProfile::new(7, 4, 1, 1);
        let rep = bad.check();
        assert!(!rep.passed());
        assert_eq!(rep.first_failure().unwrap().name, "c0_is_cv_plus_2csigma");
    }

    #[test]
    fn rank_five_excluded_and_twelve_out_of_range() {
        let r = rank_profiles(5).unwrap();
        assert!(r.excluded && r.profiles.is_empty());
        match rank_profiles(12) {
            Err(SpinError::OutOfRange { note: Some(n), .. }) => assert!(n.contains("6, 8"), "{n}"),
            other => panic!("{other:?}"),
        }
    }
}
