//! Fermionic quotients: the partition Π = Π₀ ⊔ fΠ₀, naive fusion rules N̂,
//! the quotient matrix Ŝ, and their verification.

use crate::algebra::matrix::{asymmetry, conjugate, differs_from_scaled, mat_mul, Matrix};
use crate::algebra::{AlgebraicReal, CyclotomicElement, Rat};
use crate::fusion_ring::FusionRing;
use crate::premodular::{fusion_act, muger_center, PremodularData, PremodularError};
use crate::report::ValidationReport;

pub use crate::algebra::matrix::match_diagonalizers;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum QuotientError {
    #[error("data is not super-modular")]
    NotSuperModular,
    #[error("the fermion fixes label {0}")]
    FixedPointFermion(usize),
    #[error("label {0} has dual f·{0}; Π₀ cannot be closed under duals")]
    DualIsFermionPartner(usize),
    #[error("S̃ is not of block form [[Ŝ, Ŝ], [Ŝ, Ŝ]] at ({0}, {1})")]
    BlockMismatch(usize, usize),
    #[error("label {0} is not self-dual")]
    NotSelfDual(usize),
    #[error("label {0} is not in Π₀")]
    NotInPi0(usize),
    #[error("twists are required")]
    MissingTwists,
    #[error("indicator of label {0} is {1}, not ±1")]
    IndicatorNotPlusMinusOne(usize, String),
    #[error(transparent)]
    Premodular(#[from] PremodularError),
}

/// Π₀ in scan order (unit first) and the action i ↦ f·i on all labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPartition {
    pub pi0: Vec<usize>,
    pub pairing: Vec<usize>,
    pub fermion: usize,
}

impl QuotientPartition {
    /// Position in Π₀ of label `x` or of its partner f·x.
    pub fn class_of(&self, x: usize) -> usize {
        self.pi0.iter().position(|&p| p == x || self.pairing[p] == x).expect("partition covers every label")
    }

    /// Replace the representative at position `pos` (and its dual's) by the
    /// f-partner. Position 0 is never swapped.
    pub fn swapped(&self, ring: &FusionRing, pos: usize) -> QuotientPartition {
        assert!(pos > 0, "the unit stays in Π₀");
        let mut pi0 = self.pi0.clone();
        let x = pi0[pos];
        let xd = ring.dual(x);
        pi0[pos] = self.pairing[x];
        if xd != x {
            let dpos = self.class_of(xd);
            pi0[dpos] = self.pairing[xd];
        }
        QuotientPartition { pi0, pairing: self.pairing.clone(), fermion: self.fermion }
    }
}

/// Numerical shadow of a super-modular category.
#[derive(Clone, Debug)]
pub struct FermionicQuotient {
    pub partition: QuotientPartition,
    pub nhat: FusionRing,
    pub shat: Matrix<CyclotomicElement>,
    /// Ambient D² = Σ over all labels of d².
    pub dsq: CyclotomicElement,
}

impl FermionicQuotient {
    pub fn dsq_real(&self) -> AlgebraicReal {
        self.dsq.to_algebraic_real().expect("D² is real")
    }
}

/// Deterministic partition for the fermion `f`; see [`partition_ring`].
pub fn make_partition(data: &PremodularData, f: usize) -> Result<QuotientPartition, QuotientError> {
    let c = muger_center(data)?;
    if !c.is_super_modular() || c.fermion != Some(f) {
        return Err(QuotientError::NotSuperModular);
    }
    partition_ring(&data.ring, f)
}

/// Scan labels in order; an unassigned label joins Π₀ together with its
/// dual, and their f-partners form fΠ₀.
pub fn partition_ring(ring: &FusionRing, f: usize) -> Result<QuotientPartition, QuotientError> {
    let r = ring.rank();
    let pairing: Vec<usize> = (0..r).map(|i| fusion_act(ring, f, i)).collect();
    let mut assigned = vec![false; r];
    let mut pi0 = vec![];
    for i in 0..r {
        if assigned[i] {
            continue;
        }
        if pairing[i] == i {
            return Err(QuotientError::FixedPointFermion(i));
        }
        let d = ring.dual(i);
        if d == pairing[i] {
            return Err(QuotientError::DualIsFermionPartner(i));
        }
        for x in [i, d] {
            if !assigned[x] {
                assigned[x] = true;
                assigned[pairing[x]] = true;
                pi0.push(x);
            }
        }
    }
    Ok(QuotientPartition { pi0, pairing, fermion: f })
}

/// N̂_{a,b}^c = N_{a,b}^c + N_{a,b}^{f·c} over Π₀ (positions in `pi0`).
pub fn naive_rules(ring: &FusionRing, p: &QuotientPartition) -> FusionRing {
    let q = p.pi0.len();
    let mut t = vec![0u32; q * q * q];
    for (a, &x) in p.pi0.iter().enumerate() {
        for (b, &y) in p.pi0.iter().enumerate() {
            for (c, &z) in p.pi0.iter().enumerate() {
                t[(a * q + b) * q + c] = ring.n(x, y, z) + ring.n(x, y, p.pairing[z]);
            }
        }
    }
    let dual = p.pi0.iter().map(|&x| p.class_of(ring.dual(x))).collect();
    FusionRing::new(q, t, dual).expect("consistent shape")
}

/// The Π₀ × Π₀ block of S̃, after checking the other three blocks agree.
pub fn quotient_s(data: &PremodularData, p: &QuotientPartition) -> Result<Matrix<CyclotomicElement>, QuotientError> {
    let s = data.s()?;
    let mut out = vec![];
    for &x in &p.pi0 {
        let mut row = vec![];
        for &y in &p.pi0 {
            let v = &s[x][y];
            let (fx, fy) = (p.pairing[x], p.pairing[y]);
            if s[fx][y] != *v || s[x][fy] != *v || s[fx][fy] != *v {
                return Err(QuotientError::BlockMismatch(x, y));
            }
            row.push(v.clone());
        }
        out.push(row);
    }
    Ok(out)
}

pub fn fermionic_quotient(data: &PremodularData, f: usize) -> Result<FermionicQuotient, QuotientError> {
    let partition = make_partition(data, f)?;
    quotient_with(data, partition)
}

pub fn quotient_with(data: &PremodularData, partition: QuotientPartition) -> Result<FermionicQuotient, QuotientError> {
    let nhat = naive_rules(&data.ring, &partition);
    let shat = quotient_s(data, &partition)?;
    let dsq = data.global_dim_cyc()?;
    Ok(FermionicQuotient { partition, nhat, shat, dsq })
}

fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

/// Mock-S properties (a)–(d), each reported separately.
pub fn verify_quotient(q: &FermionicQuotient) -> ValidationReport {
    let s = &q.shat;
    let n = s.len();
    let nh = &q.nhat;
    let half = q.dsq.scale(&rat(1, 2));
    let mut rep = ValidationReport::new(format!("fermionic quotient of rank {n}"));

    rep.record("symmetric", asymmetry(s).map(|(i, j)| ("Ŝ_{ij} ≠ Ŝ_{ji}".into(), vec![i, j])));
    let sbar = conjugate(s);
    let prod = mat_mul(s, &sbar);
    let id: Matrix<CyclotomicElement> = crate::algebra::matrix::identity(n);
    rep.record(
        "unitarity",
        differs_from_scaled(&prod, &half, &id).map(|(i, j)| ("Ŝ·conj(Ŝ) ≠ (D²/2)·I".into(), vec![i, j])),
    );
    let charge: Matrix<CyclotomicElement> =
        (0..n).map(|i| (0..n).map(|j| CyclotomicElement::from_int((nh.dual(i) == j) as i64)).collect()).collect();
    let sq = mat_mul(s, s);
    rep.record(
        "square_is_charge",
        differs_from_scaled(&sq, &half, &charge).map(|(i, j)| ("Ŝ² ≠ (D²/2)·C".into(), vec![i, j])),
    );
    let col0 = s[0].iter().fold(CyclotomicElement::zero(), |acc, d| acc.add(&d.mul(d)));
    rep.record("half_dimension", (col0 != half).then(|| ("Σ_{Π₀} d_i² ≠ D²/2".into(), vec![])));

    let v = nh.validate();
    let bad = v.first_failure().map(|c| (format!("{} failed", c.name), c.witness.clone().unwrap_or_default()));
    let bad = bad.or_else(|| (!nh.is_commutative()).then(|| ("N̂ is not commutative".to_string(), vec![])));
    rep.record("commutative_fusion_rule", bad);

    rep.record("eigenvectors", eigen_violation(nh, s).map(|w| ("N̂_i Ŝ ≠ Ŝ Λ^(i)".into(), w)));
    rep.record("verlinde", verlinde_violation(nh, s, &q.dsq).map(|(w, got)| (format!("reconstructed value {got}"), w)));
    rep
}

// Ŝ_{ij}Ŝ_{kj} = Ŝ_{0j} Σ_m N̂_{ik}^m Ŝ_{mj}
fn eigen_violation(nh: &FusionRing, s: &Matrix<CyclotomicElement>) -> Option<Vec<usize>> {
    let n = s.len();
    for i in 0..n {
        for k in 0..n {
            for j in 0..n {
                let mut acc = CyclotomicElement::zero();
                for m in 0..n {
                    let c = nh.n(i, k, m);
                    if c != 0 {
                        acc = acc.add(&s[m][j].scale(&rat(c as i64, 1)));
                    }
                }
                if s[i][j].mul(&s[k][j]) != s[0][j].mul(&acc) {
                    return Some(vec![i, k, j]);
                }
            }
        }
    }
    None
}

/// Verlinde reconstruction of N̂ from Ŝ, exact.
pub fn verlinde_value(
    s: &Matrix<CyclotomicElement>,
    dsq: &CyclotomicElement,
    i: usize,
    j: usize,
    k: usize,
) -> CyclotomicElement {
    let two_over = dsq.inverse().expect("D² ≠ 0").scale(&rat(2, 1));
    let mut acc = CyclotomicElement::zero();
    for m in 0..s.len() {
        let term = s[i][m].mul(&s[j][m]).mul(&s[k][m].conj()).div(&s[0][m]).expect("Ŝ_{0m} ≠ 0");
        acc = acc.add(&term);
    }
    acc.mul(&two_over)
}

fn verlinde_violation(
    nh: &FusionRing,
    s: &Matrix<CyclotomicElement>,
    dsq: &CyclotomicElement,
) -> Option<(Vec<usize>, String)> {
    if s.iter().flatten().count() != nh.rank() * nh.rank() || s[0].iter().any(|x| x.is_zero()) {
        return Some((vec![], "Ŝ has a zero in row 0".into()));
    }
    let n = s.len();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = verlinde_value(s, dsq, i, j, k);
                if v != CyclotomicElement::from_int(nh.n(i, j, k) as i64) {
                    return Some((vec![i, j, k], v.to_string()));
                }
            }
        }
    }
    None
}

/// ν₂(X_j) = (2/D²) Σ_{a,b ∈ Π₀} N̂_{a,b}^j d_a d_b (θ_a/θ_b)², for the label
/// `j` of the ambient data (which must be a Π₀ representative).
pub fn fs_indicator(
    data: &PremodularData,
    p: &QuotientPartition,
    j: usize,
) -> Result<CyclotomicElement, QuotientError> {
    if data.ring.dual(j) != j {
        return Err(QuotientError::NotSelfDual(j));
    }
    let jpos = p.pi0.iter().position(|&x| x == j).ok_or(QuotientError::NotInPi0(j))?;
    let theta = data.twists.as_ref().ok_or(QuotientError::MissingTwists)?;
    let s = data.s()?;
    let nh = naive_rules(&data.ring, p);
    let mut acc = CyclotomicElement::zero();
    for (a, &x) in p.pi0.iter().enumerate() {
        for (b, &y) in p.pi0.iter().enumerate() {
            let c = nh.n(a, b, jpos);
            if c == 0 {
                continue;
            }
            let ratio = theta[x].mul(&theta[y].inv()).pow(2).to_cyclotomic();
            acc = acc.add(&s[0][x].mul(&s[0][y]).mul(&ratio).scale(&rat(c as i64, 1)));
        }
    }
    let dsq = data.global_dim_cyc()?;
    let v = acc.scale(&rat(2, 1)).div(&dsq).map_err(PremodularError::from)?;
    if v != CyclotomicElement::one() && v != CyclotomicElement::from_int(-1) {
        return Err(QuotientError::IndicatorNotPlusMinusOne(j, v.to_string()));
    }
    Ok(v)
}
