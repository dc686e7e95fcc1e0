//! Classification of super-modular fusion rules of rank 2, 4 and 6 by
//! bounded enumeration of quotient rules followed by lifting.

mod alpha;
mod enumerate;
mod lift;

use serde::Serialize;

pub use alpha::{alpha_feasibility, alpha_quantities, AlphaCertificate, AlphaQuantities, AlphaVerdict};
pub use enumerate::{
    enumerate_quotients, enumerate_selfdual_rank6_quotients, indicator_relaxation, quotient_rules,
    symmetric_diagonalizer, EnumerationOutcome, FilterStats, QuotientCandidate, QuotientShape,
};
pub use lift::{factor_dependency, lift_to_supermodular, LiftOutcome, LiftSolution, OrbitSplit, RejectedLift};

use crate::algebra::matrix::match_diagonalizers;
use crate::algebra::{ComplexAlgebraic, Matrix};
use crate::catalog::{self, CatalogEntry};
use crate::fusion_ring::{FusionError, FusionRing};
use crate::premodular::SplitWitness;

/// Default parameter bound: twice the largest parameter in any solution.
pub const DEFAULT_BOUND: u32 = 8;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("unsupported rank {0}: expected 2, 4 or 6")]
    UnsupportedRank(usize),
    #[error("parameter bound {0} is below the largest known solution parameter (2)")]
    BoundTooSmall(u32),
    #[error(transparent)]
    Fusion(#[from] FusionError),
}

#[derive(Clone, Debug)]
pub struct ClassificationRecord {
    pub rank: usize,
    pub name: String,
    /// Lift-labeled ring: Π₀ first, then f·Π₀ in the same order.
    pub representative: FusionRing,
    pub fermion: usize,
    pub split: bool,
    pub witness: Option<SplitWitness>,
    /// Which enumeration path produced the record.
    pub provenance: String,
    /// External results the verdict relies on.
    pub dependencies: Vec<String>,
    pub quotient: QuotientCandidate,
    pub lift: LiftSolution,
    pub notes: Vec<String>,
}

impl ClassificationRecord {
    pub fn shat(&self) -> &Matrix<ComplexAlgebraic> {
        &self.quotient.shat
    }
}

/// Everything a classification run produced, for reports.
#[derive(Clone, Debug)]
pub struct ClassificationRun {
    pub rank: usize,
    pub bound: u32,
    pub records: Vec<ClassificationRecord>,
    pub enumerations: Vec<EnumerationOutcome>,
    pub lifts: Vec<(String, LiftOutcome)>,
}

impl ClassificationRun {
    pub fn split_count(&self) -> usize {
        self.records.iter().filter(|r| r.split).count()
    }

    pub fn non_split_count(&self) -> usize {
        self.records.len() - self.split_count()
    }
}

fn shapes_for(rank: usize) -> Result<&'static [QuotientShape], ClassifyError> {
    match rank {
        2 => Ok(&[QuotientShape::Trivial]),
        4 => Ok(&[QuotientShape::Rank2]),
        6 => Ok(&[QuotientShape::SelfDual3, QuotientShape::NonSelfDual3]),
        r => Err(ClassifyError::UnsupportedRank(r)),
    }
}

// The trivial quotient has no parameters, so no enumeration bound applies.
fn trivial_outcome() -> EnumerationOutcome {
    let nhat = crate::fusion_ring::trivial_ring();
    let one = crate::algebra::AlgebraicReal::one();
    let c = QuotientCandidate {
        shape: QuotientShape::Trivial,
        params: vec![],
        nhat,
        dims: crate::fusion_ring::DimensionVector { entries: vec![one.clone()], total: one },
        shat: vec![vec![ComplexAlgebraic::from_int(1)]],
        alpha: None,
        equivalent: vec![vec![]],
    };
    EnumerationOutcome {
        shape: QuotientShape::Trivial,
        bound: 0,
        stats: FilterStats { scanned: 1, commuting: 1, symmetric_s: 1, indicator: 1 },
        families: vec![c],
        indicator_rejections: vec![],
    }
}

fn non_split_name(ring: &FusionRing) -> Option<String> {
    (0..=2)
        .map(|k| catalog::psu2_adjoint(k, 1).expect("valid"))
        .find(|e| e.data.ring.is_isomorphic(ring))
        .map(|e| e.name)
}

/// Lex-least relabeling with the unit fixed; identical for isomorphic rings.
pub fn canonical_form(ring: &FusionRing) -> FusionRing {
    let r = ring.rank();
    let rest: Vec<usize> = (1..r).collect();
    let mut best: Option<FusionRing> = None;
    permute_each(&rest, &mut vec![], &mut |p| {
        let sigma: Vec<usize> = std::iter::once(0).chain(p.iter().copied()).collect();
        let cand = ring.permuted(&sigma);
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    });
    best.expect("at least one relabeling")
}

fn permute_each(rest: &[usize], acc: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if rest.is_empty() {
        f(acc);
        return;
    }
    for i in 0..rest.len() {
        let mut r = rest.to_vec();
        acc.push(r.remove(i));
        permute_each(&r, acc, f);
        acc.pop();
    }
}

/// Records of exactly one rank, with the supporting search data.
pub fn classify_run(rank: usize, bound: u32) -> Result<ClassificationRun, ClassifyError> {
    let shapes = shapes_for(rank)?;
    if bound < 2 {
        return Err(ClassifyError::BoundTooSmall(bound));
    }
    let pool = catalog::rank_le3_modular_entries();
    let mut enumerations = vec![];
    let mut lifts = vec![];
    let mut records: Vec<ClassificationRecord> = vec![];
    for &shape in shapes {
        let outcome =
            if shape == QuotientShape::Trivial { trivial_outcome() } else { enumerate_quotients(shape, bound)? };
        for cand in &outcome.families {
            let lo = lift_to_supermodular(cand, &pool);
            let mut deps: Vec<String> = vec![];
            if shape == QuotientShape::SelfDual3 {
                deps.push("|Re| <= 1 indicator relaxation".into());
            }
            deps.extend(lo.rejected.iter().map(|r| r.dependency.clone()));
            for l in &lo.accepted {
                let (name, mut notes) = match &l.witness {
                    Some(w) if w.factor.rank() == 1 => (
                        "sVec".to_string(),
                        vec!["fusion-level class only: PSU(2)_2 has the same Z2 rules; its split status as a category is not adjudicated".into()],
                    ),
                    Some(w) => {
                        let f = lift::factor_name(&w.factor, &pool).expect("accepted split lifts have pool factors");
                        (format!("{f} ⊠ sVec"), vec![])
                    }
                    None => (non_split_name(&l.ring).unwrap_or_else(|| "non-split (unnamed)".into()), vec![]),
                };
                let mut dependencies = deps.clone();
                if l.split && l.witness.as_ref().is_some_and(|w| w.factor.rank() > 1) {
                    dependencies.push("[rank<=3 modular list]".into());
                }
                dependencies.sort();
                dependencies.dedup();
                if let Some(a) = cand.alpha {
                    notes.push(format!("quotient is the alpha = {a} member of (2a, 1, 2a^2, a)"));
                }
                let rec = ClassificationRecord {
                    rank,
                    name,
                    representative: l.ring.clone(),
                    fermion: l.fermion,
                    split: l.split,
                    witness: l.witness.clone(),
                    provenance: format!("{} -> {} lift", cand.describe(), if l.split { "split" } else { "non-split" }),
                    dependencies,
                    quotient: cand.clone(),
                    lift: l.clone(),
                    notes,
                };
                if !records.iter().any(|r| r.representative.is_isomorphic(&rec.representative)) {
                    records.push(rec);
                }
            }
            lifts.push((cand.describe(), lo));
        }
        enumerations.push(outcome);
    }
    let mut keyed: Vec<(FusionRing, ClassificationRecord)> =
        records.into_iter().map(|r| (canonical_form(&r.representative), r)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(ClassificationRun { rank, bound, records: keyed.into_iter().map(|(_, r)| r).collect(), enumerations, lifts })
}

/// Super-modular fusion classes of the given rank at the default bound.
pub fn classify_supermodular(rank: usize) -> Result<Vec<ClassificationRecord>, ClassifyError> {
    Ok(classify_run(rank, DEFAULT_BOUND)?.records)
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanEntry {
    pub record: String,
    pub split: bool,
    /// Pool entries whose S-matrix matches Ŝ up to relabeling and rescaling.
    pub matches: Vec<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ConjectureReport {
    pub entries: Vec<ScanEntry>,
    /// Non-split records whose Ŝ matched a modular S-matrix.
    pub counterexamples: Vec<String>,
}

/// Compare every record's quotient Ŝ with the S-matrices in `pool`.
pub fn conjecture_scan(records: &[ClassificationRecord], pool: &[CatalogEntry]) -> ConjectureReport {
    let mut rep = ConjectureReport::default();
    if pool.is_empty() {
        return rep;
    }
    let pool_s: Vec<(String, Matrix<ComplexAlgebraic>)> = pool
        .iter()
        .filter_map(|e| {
            let s = e.data.stilde.as_ref()?;
            let m = s
                .iter()
                .map(|row| row.iter().map(|x| x.to_complex_algebraic().ok()).collect::<Option<Vec<_>>>())
                .collect::<Option<Vec<_>>>()?;
            Some((e.name.clone(), m))
        })
        .collect();
    for r in records {
        let shat = r.shat();
        let q = shat.len();
        let mut matches = vec![];
        for (name, s) in &pool_s {
            if s.len() != q {
                continue;
            }
            let rest: Vec<usize> = (1..q).collect();
            let mut hit = false;
            permute_each(&rest, &mut vec![], &mut |p| {
                if hit {
                    return;
                }
                let rows: Matrix<ComplexAlgebraic> =
                    std::iter::once(0).chain(p.iter().copied()).map(|i| s[i].clone()).collect();
                hit = match_diagonalizers(shat, &rows).is_some();
            });
            if hit {
                matches.push(name.clone());
            }
        }
        if !r.split && !matches.is_empty() {
            rep.counterexamples.push(r.name.clone());
        }
        rep.entries.push(ScanEntry { record: r.name.clone(), split: r.split, matches });
    }
    rep
}
