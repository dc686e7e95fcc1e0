//! Lifting quotient rules to super-modular fusion rules.
//!
//! Labels of the lift: X_i = i and f·X_i = q + i for i < q, so the fermion
//! is q. Each quotient constant splits as N̂_{ab}^c = N_{ab}^c + N_{ab}^{fc}
//! and the f-action fixes the rest by parity.

use serde::Serialize;

use super::enumerate::{free_orbits, QuotientCandidate};
use crate::catalog::CatalogEntry;
use crate::fusion_ring::FusionRing;
use crate::premodular::{fusion_split_witness, SplitWitness};

/// How one quotient constant (orbit of triples in Π₀) is refined.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitSplit {
    pub triple: [usize; 3],
    /// N̂ value.
    pub total: u32,
    /// N_{ab}^c with c ∈ Π₀.
    pub even: u32,
    /// N_{ab}^{f·c}.
    pub odd: u32,
}

#[derive(Clone, Debug)]
pub struct LiftSolution {
    pub splits: Vec<OrbitSplit>,
    pub ring: FusionRing,
    pub fermion: usize,
    pub split: bool,
    pub witness: Option<SplitWitness>,
}

impl LiftSolution {
    /// (even, odd) for every constant with N̂ ≥ 2, flattened; for the α = 1
    /// candidate this is (a, b, c, d).
    pub fn coefficients(&self) -> Vec<u32> {
        self.splits.iter().filter(|s| s.total >= 2).flat_map(|s| [s.even, s.odd]).collect()
    }
}

#[derive(Clone, Debug)]
pub struct RejectedLift {
    pub lift: LiftSolution,
    pub reason: String,
    /// External result the rejection rests on.
    pub dependency: String,
}

#[derive(Clone, Debug)]
pub struct LiftOutcome {
    /// Associative lifts up to the X_i ↔ f·X_i swaps, before any filter.
    pub associative: Vec<LiftSolution>,
    pub accepted: Vec<LiftSolution>,
    pub rejected: Vec<RejectedLift>,
}

/// Tag for the external classification a split factor of this rank rests on.
pub fn factor_dependency(rank: usize) -> &'static str {
    match rank {
        2 => "[B2 4.10]",
        3 => "[O4 3.5]",
        _ => "[rank<=3 modular list]",
    }
}

fn build(nhat: &FusionRing, even: &[u32]) -> FusionRing {
    let q = nhat.rank();
    let r = 2 * q;
    let mut t = vec![0u32; r * r * r];
    for a in 0..r {
        for b in 0..r {
            for c in 0..r {
                let (x, y, z) = (a % q, b % q, c % q);
                let parity = (a / q + b / q + c / q) % 2;
                let e = even[(x * q + y) * q + z];
                t[(a * r + b) * r + c] = if parity == 0 { e } else { nhat.n(x, y, z) - e };
            }
        }
    }
    let dual = (0..r).map(|a| nhat.dual(a % q) + q * (a / q)).collect();
    FusionRing::new(r, t, dual).expect("consistent shape")
}

// Greatest relabeling under the swaps X_i ↔ f·X_i (dual pairs swap together).
fn swap_canonical(ring: &FusionRing, nhat: &FusionRing) -> FusionRing {
    let q = nhat.rank();
    let groups: Vec<Vec<usize>> = (1..q)
        .filter(|&i| nhat.dual(i) >= i)
        .map(|i| if nhat.dual(i) == i { vec![i] } else { vec![i, nhat.dual(i)] })
        .collect();
    let mut best = ring.clone();
    for mask in 1u32..(1 << groups.len()) {
        let mut sigma: Vec<usize> = (0..2 * q).collect();
        for (g, labels) in groups.iter().enumerate() {
            if mask >> g & 1 == 1 {
                for &i in labels {
                    sigma.swap(i, q + i);
                }
            }
        }
        let p = ring.permuted(&sigma);
        if p > best {
            best = p;
        }
    }
    best
}

fn splits_of(ring: &FusionRing, nhat: &FusionRing) -> Vec<OrbitSplit> {
    let q = nhat.rank();
    free_orbits(nhat.duals())
        .into_iter()
        .map(|o| {
            let [a, b, c] = o[0];
            let total = nhat.n(a, b, c);
            let even = ring.n(a, b, c);
            OrbitSplit { triple: o[0], total, even, odd: ring.n(a, b, q + c) }
        })
        .collect()
}

fn factor_in_pool(factor: &FusionRing, pool: &[CatalogEntry]) -> Option<String> {
    if factor.rank() == 1 {
        return Some("Vec".into());
    }
    pool.iter().find(|e| e.data.ring.is_isomorphic(factor)).map(|e| e.name.clone())
}

/// All associative lifts of a candidate; split lifts whose even factor is
/// not a known modular fusion ring of rank ≤ 3 are rejected.
pub fn lift_to_supermodular(candidate: &QuotientCandidate, pool: &[CatalogEntry]) -> LiftOutcome {
    let nhat = &candidate.nhat;
    let q = nhat.rank();
    let orbits = free_orbits(nhat.duals());
    let base = super::enumerate::fixed_entries(nhat.duals());
    let totals: Vec<u32> = orbits.iter().map(|o| nhat.n(o[0][0], o[0][1], o[0][2])).collect();

    let mut seen = std::collections::BTreeSet::new();
    let mut associative = vec![];
    let mut choice = vec![0u32; orbits.len()];
    loop {
        let mut even = base.clone();
        for (o, &v) in orbits.iter().zip(&choice) {
            for &[a, b, c] in o {
                even[(a * q + b) * q + c] = v;
            }
        }
        let ring = build(nhat, &even);
        if ring.validate().passed() {
            let canon = swap_canonical(&ring, nhat);
            if seen.insert(canon.clone()) {
                associative.push(canon);
            }
        }
        // odometer over 0..=total per orbit
        let mut pos = 0;
        while pos < choice.len() && choice[pos] == totals[pos] {
            choice[pos] = 0;
            pos += 1;
        }
        if pos == choice.len() {
            break;
        }
        choice[pos] += 1;
    }
    associative.sort();

    let fermion = q;
    let associative: Vec<LiftSolution> = associative
        .into_iter()
        .map(|ring| {
            let witness = fusion_split_witness(&ring, fermion).expect("validated ring");
            LiftSolution { splits: splits_of(&ring, nhat), split: witness.is_some(), witness, ring, fermion }
        })
        .collect();
    let mut accepted = vec![];
    let mut rejected = vec![];
    for l in &associative {
        match &l.witness {
            Some(w) if factor_in_pool(&w.factor, pool).is_none() => rejected.push(RejectedLift {
                lift: l.clone(),
                reason: format!(
                    "even part closes into a rank-{} sub-ring that is not a modular fusion ring of rank ≤ 3",
                    w.factor.rank()
                ),
                dependency: factor_dependency(w.factor.rank()).into(),
            }),
            _ => accepted.push(l.clone()),
        }
    }
    LiftOutcome { associative, accepted, rejected }
}

/// Name of the pool entry matching a split factor.
pub fn factor_name(factor: &FusionRing, pool: &[CatalogEntry]) -> Option<String> {
    factor_in_pool(factor, pool)
}
