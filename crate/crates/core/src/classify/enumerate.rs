//! Bounded enumeration of candidate quotient fusion rules.
//!
//! A quotient ring of rank q has unit and dual entries fixed; the remaining
//! structure constants fall into orbits of label triples under
//! (i, j, k) ↦ (j, i, k) and (i, j, k) ↦ (i*, k, j), one parameter per orbit.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use super::ClassifyError;
use crate::algebra::real::RatInterval;
use crate::algebra::{AlgebraicReal, ComplexAlgebraic, Matrix, Rat};
use crate::fusion_ring::{CharacterTable, DimensionVector, FusionRing};

/// Which quotient rules are scanned.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuotientShape {
    /// Rank 1; lifts to rank 2.
    Trivial,
    /// N̂₁ = [[0,1],[1,m]].
    Rank2,
    /// Self-dual rank 3 with parameters (k, ℓ, m, n).
    SelfDual3,
    /// Rank 3 with X₁* = X₂; parameters p = N̂₁₁¹, q = N̂₁₁².
    NonSelfDual3,
}

impl QuotientShape {
    pub fn rank(self) -> usize {
        match self {
            QuotientShape::Trivial => 1,
            QuotientShape::Rank2 => 2,
            _ => 3,
        }
    }

    pub fn dual(self) -> Vec<usize> {
        match self {
            QuotientShape::NonSelfDual3 => vec![0, 2, 1],
            s => (0..s.rank()).collect(),
        }
    }

    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            QuotientShape::Trivial => &[],
            QuotientShape::Rank2 => &["m"],
            QuotientShape::SelfDual3 => &["k", "l", "m", "n"],
            QuotientShape::NonSelfDual3 => &["p", "q"],
        }
    }

    // One triple from the orbit each parameter fills.
    fn param_triples(self) -> &'static [[usize; 3]] {
        match self {
            QuotientShape::Trivial => &[],
            QuotientShape::Rank2 => &[[1, 1, 1]],
            QuotientShape::SelfDual3 => &[[1, 1, 2], [1, 2, 2], [1, 1, 1], [2, 2, 2]],
            QuotientShape::NonSelfDual3 => &[[1, 1, 1], [1, 1, 2]],
        }
    }
}

/// Orbit of a triple of non-unit labels under commutativity and the
/// transpose law, sorted.
pub(crate) fn triple_orbit(dual: &[usize], t: [usize; 3]) -> Vec<[usize; 3]> {
    let mut seen = BTreeSet::from([t]);
    let mut stack = vec![t];
    while let Some([i, j, k]) = stack.pop() {
        for n in [[j, i, k], [dual[i], k, j]] {
            if seen.insert(n) {
                stack.push(n);
            }
        }
    }
    seen.into_iter().collect()
}

/// All orbits of triples in {1, …, r−1}³, ordered by smallest member.
pub(crate) fn free_orbits(dual: &[usize]) -> Vec<Vec<[usize; 3]>> {
    let r = dual.len();
    let mut done = BTreeSet::new();
    let mut out = vec![];
    for i in 1..r {
        for j in 1..r {
            for k in 1..r {
                if done.contains(&[i, j, k]) {
                    continue;
                }
                let o = triple_orbit(dual, [i, j, k]);
                done.extend(o.iter().copied());
                out.push(o);
            }
        }
    }
    out
}

/// Unit and dual entries: `N_{0j}^k = δ_{jk}`, `N_{i0}^k = δ_{ik}`,
/// `N_{ij}^0 = δ_{j,i*}`; everything else zero.
pub(crate) fn fixed_entries(dual: &[usize]) -> Vec<u32> {
    let r = dual.len();
    let mut t = vec![0u32; r * r * r];
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                let v = if i == 0 {
                    j == k
                } else if j == 0 {
                    i == k
                } else if k == 0 {
                    j == dual[i]
                } else {
                    false
                };
                t[(i * r + j) * r + k] = v as u32;
            }
        }
    }
    t
}

/// Quotient rules for a parameter tuple.
pub fn quotient_rules(shape: QuotientShape, params: &[u32]) -> FusionRing {
    let dual = shape.dual();
    let r = dual.len();
    let mut t = fixed_entries(&dual);
    for (&p, &rep) in params.iter().zip(shape.param_triples()) {
        for [i, j, k] in triple_orbit(&dual, rep) {
            t[(i * r + j) * r + k] = p;
        }
    }
    FusionRing::new(r, t, dual).expect("consistent shape")
}

/// A quotient fusion rule that survived every filter.
#[derive(Clone, Debug)]
pub struct QuotientCandidate {
    pub shape: QuotientShape,
    pub params: Vec<u32>,
    pub nhat: FusionRing,
    pub dims: DimensionVector,
    /// Symmetric Ŝ with Ŝ·conj(Ŝ) = (Σ d²)·Id diagonalizing the rules.
    pub shat: Matrix<ComplexAlgebraic>,
    /// α when (k, ℓ, m, n) = (2α, 1, 2α², α).
    pub alpha: Option<u32>,
    /// Surviving parameter tuples with isomorphic rules (including `params`).
    pub equivalent: Vec<Vec<u32>>,
}

impl QuotientCandidate {
    /// (k, ℓ, m, n) for the self-dual rank-3 shape.
    pub fn klmn(&self) -> Option<[u32; 4]> {
        (self.shape == QuotientShape::SelfDual3)
            .then(|| [self.params[0], self.params[1], self.params[2], self.params[3]])
    }

    pub fn describe(&self) -> String {
        let kv: Vec<String> =
            self.shape.param_names().iter().zip(&self.params).map(|(n, v)| format!("{n}={v}")).collect();
        format!("{:?}({})", self.shape, kv.join(","))
    }
}

fn alpha_of(shape: QuotientShape, p: &[u32]) -> Option<u32> {
    if shape != QuotientShape::SelfDual3 {
        return None;
    }
    let a = p[3];
    (p[0] == 2 * a && p[1] == 1 && p[2] == 2 * a * a).then_some(a)
}

/// How many tuples reached each stage.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FilterStats {
    pub scanned: usize,
    /// Fusion matrices commute (associativity of the commutative ring).
    pub commuting: usize,
    pub symmetric_s: usize,
    pub indicator: usize,
}

#[derive(Clone, Debug)]
pub struct EnumerationOutcome {
    pub shape: QuotientShape,
    pub bound: u32,
    pub stats: FilterStats,
    /// Survivors up to isomorphism of the quotient rules.
    pub families: Vec<QuotientCandidate>,
    /// Tuples passing (i) and (ii) but refuted by the indicator test.
    pub indicator_rejections: Vec<(Vec<u32>, String)>,
}

enum Stage {
    Axioms,
    Diagonalizer,
    Indicator(String),
}

const BITS: u32 = 48;

fn disjoint(a: &RatInterval, b: &RatInterval) -> bool {
    a.hi < b.lo || b.hi < a.lo
}

fn scale(d: &AlgebraicReal, z: &ComplexAlgebraic) -> ComplexAlgebraic {
    ComplexAlgebraic::new(d.mul(&z.re), d.mul(&z.im))
}

// d_a·z_a = d_b·z_b, settled by enclosures when they separate.
fn scaled_eq(da: &AlgebraicReal, za: &ComplexAlgebraic, db: &AlgebraicReal, zb: &ComplexAlgebraic) -> bool {
    let (ea, eb) = (da.enclosure(BITS), db.enclosure(BITS));
    let (ra, ia) = za.enclosure(BITS);
    let (rb, ib) = zb.enclosure(BITS);
    if disjoint(&ea.mul(&ra), &eb.mul(&rb)) || disjoint(&ea.mul(&ia), &eb.mul(&ib)) {
        return false;
    }
    scale(da, za) == scale(db, zb)
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = vec![];
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Search for Ŝ_{ij} = d_j·φ_{π(j)}(x_i) with π(0) the FP character that is
/// symmetric and satisfies Ŝ·conj(Ŝ) = (Σ d²)·Id.
pub fn symmetric_diagonalizer(ct: &CharacterTable) -> Option<Matrix<ComplexAlgebraic>> {
    let q = ct.len();
    let d = ct.fp_dims();
    let sq = |x: &RatInterval| x.mul(x);
    let d_enc: Vec<RatInterval> = d.iter().map(|x| x.enclosure(BITS)).collect();
    let dsq_enc = d_enc.iter().fold(RatInterval::point(Rat::from_integer(0.into())), |a, x| a.add(&sq(x)));
    // formal codegrees Σ_k |φ_c(x_k)|²; the columns are orthogonal already
    let codeg_enc: Vec<RatInterval> = ct
        .values
        .iter()
        .map(|row| {
            row.iter().fold(RatInterval::point(Rat::from_integer(0.into())), |a, z| {
                let (re, im) = z.enclosure(BITS);
                a.add(&sq(&re)).add(&sq(&im))
            })
        })
        .collect();
    let codeg = |c: usize| ct.values[c].iter().fold(AlgebraicReal::zero(), |a, z| a.add(&z.norm_sqr()));
    let dsq = std::cell::OnceCell::new();
    let others: Vec<usize> = (0..q).filter(|&c| c != ct.fp).collect();
    'perm: for rest in permutations(&others) {
        let pi: Vec<usize> = std::iter::once(ct.fp).chain(rest).collect();
        for a in 1..q {
            if disjoint(&sq(&d_enc[a]).mul(&codeg_enc[pi[a]]), &dsq_enc) {
                continue 'perm;
            }
        }
        for i in 0..q {
            for j in i + 1..q {
                if !scaled_eq(&d[j], &ct.values[pi[j]][i], &d[i], &ct.values[pi[i]][j]) {
                    continue 'perm;
                }
            }
        }
        let dsq = dsq.get_or_init(|| d.iter().fold(AlgebraicReal::zero(), |a, x| a.add(&x.mul(x))));
        for a in 1..q {
            if d[a].mul(&d[a]).mul(&codeg(pi[a])) != *dsq {
                continue 'perm;
            }
        }
        return Some((0..q).map(|i| (0..q).map(|j| scale(&d[j], &ct.values[pi[j]][i])).collect()).collect());
    }
    None
}

/// The |Re| ≤ 1 relaxation of ν₂(X_j) = ±1 for each self-dual j ≠ 0:
/// ±Σd² must lie in [A − B, A + B] with A = Σ_a N̂_{aa}^j d_a² and
/// B = 2 Σ_{a<b} N̂_{ab}^j d_a d_b. Returns the first refuted label.
pub fn indicator_relaxation(nhat: &FusionRing, d: &[AlgebraicReal]) -> Result<(), (usize, String)> {
    let q = nhat.rank();
    let half = d.iter().fold(AlgebraicReal::zero(), |a, x| a.add(&x.mul(x)));
    for j in 1..q {
        if nhat.dual(j) != j {
            continue;
        }
        let mut a = AlgebraicReal::zero();
        let mut b = AlgebraicReal::zero();
        for x in 0..q {
            let n = nhat.n(x, x, j);
            if n > 0 {
                a = a.add(&AlgebraicReal::from_int(n as i64).mul(&d[x].mul(&d[x])));
            }
            for y in x + 1..q {
                let n = nhat.n(x, y, j);
                if n > 0 {
                    b = b.add(&AlgebraicReal::from_int(2 * n as i64).mul(&d[x].mul(&d[y])));
                }
            }
        }
        let lo = a.sub(&b);
        let hi = a.add(&b);
        let fits = |v: &AlgebraicReal| lo <= *v && *v <= hi;
        if !fits(&half) && !fits(&half.neg()) {
            return Err((
                j,
                format!(
                    "label {j}: ±{:.6} outside [A−B, A+B] = [{:.6}, {:.6}]",
                    half.to_f64(),
                    lo.to_f64(),
                    hi.to_f64()
                ),
            ));
        }
    }
    Ok(())
}

fn examine(shape: QuotientShape, params: &[u32]) -> Result<QuotientCandidate, Stage> {
    let nhat = quotient_rules(shape, params);
    if !nhat.validate().passed() {
        return Err(Stage::Axioms);
    }
    let ct = nhat.character_table().map_err(|_| Stage::Diagonalizer)?;
    let shat = symmetric_diagonalizer(&ct).ok_or(Stage::Diagonalizer)?;
    let entries = ct.fp_dims();
    indicator_relaxation(&nhat, &entries).map_err(|(_, s)| Stage::Indicator(s))?;
    let dims = DimensionVector { total: entries.iter().fold(AlgebraicReal::zero(), |a, x| a.add(&x.mul(x))), entries };
    Ok(QuotientCandidate {
        shape,
        params: params.to_vec(),
        nhat,
        dims,
        shat,
        alpha: alpha_of(shape, params),
        equivalent: vec![],
    })
}

fn tuples(len: usize, bound: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out.into_iter().flat_map(|t| (0..=bound).map(move |v| [t.clone(), vec![v]].concat())).collect();
    }
    out
}

/// Scan every parameter tuple with entries in 0..=bound.
pub fn enumerate_quotients(shape: QuotientShape, bound: u32) -> Result<EnumerationOutcome, ClassifyError> {
    // the largest parameter in a known solution is 2
    if bound < 2 {
        return Err(ClassifyError::BoundTooSmall(bound));
    }
    let all = tuples(shape.param_names().len(), bound);
    let results: Vec<(Vec<u32>, Result<QuotientCandidate, Stage>)> = all
        .into_par_iter()
        .map(|p| {
            let r = examine(shape, &p);
            (p, r)
        })
        .collect();
    let mut stats = FilterStats { scanned: results.len(), ..Default::default() };
    let mut survivors = vec![];
    let mut indicator_rejections = vec![];
    for (p, r) in results {
        match r {
            Err(Stage::Axioms) => {}
            Err(Stage::Diagonalizer) => stats.commuting += 1,
            Err(Stage::Indicator(s)) => {
                stats.commuting += 1;
                stats.symmetric_s += 1;
                indicator_rejections.push((p, s));
            }
            Ok(c) => {
                stats.commuting += 1;
                stats.symmetric_s += 1;
                stats.indicator += 1;
                survivors.push(c);
            }
        }
    }
    survivors.sort_by(|a, b| a.params.cmp(&b.params));
    indicator_rejections.sort();
    Ok(EnumerationOutcome { shape, bound, stats, families: group_families(survivors), indicator_rejections })
}

// Group by isomorphism; prefer the (2α, 1, 2α², α) member, else the
// lexicographically smallest tuple.
fn group_families(survivors: Vec<QuotientCandidate>) -> Vec<QuotientCandidate> {
    let mut groups: Vec<Vec<QuotientCandidate>> = vec![];
    for c in survivors {
        match groups.iter_mut().find(|g| g[0].nhat.is_isomorphic(&c.nhat)) {
            Some(g) => g.push(c),
            None => groups.push(vec![c]),
        }
    }
    groups
        .into_iter()
        .map(|g| {
            let equivalent: Vec<Vec<u32>> = g.iter().map(|c| c.params.clone()).collect();
            let pick = g.iter().position(|c| c.alpha.is_some()).unwrap_or(0);
            let mut rep = g.into_iter().nth(pick).expect("non-empty group");
            rep.equivalent = equivalent;
            rep
        })
        .collect()
}

/// Self-dual rank-3 quotient families (the rank-6 self-dual branch).
pub fn enumerate_selfdual_rank6_quotients(bound: u32) -> Result<Vec<QuotientCandidate>, ClassifyError> {
    Ok(enumerate_quotients(QuotientShape::SelfDual3, bound)?.families)
}
