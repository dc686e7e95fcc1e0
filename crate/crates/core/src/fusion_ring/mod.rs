//! Fusion rings: based-ring axioms, Frobenius–Perron dimensions,
//! isomorphisms, ℤ₂ gradings and Deligne products.

mod characters;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::algebra::poly::{charpoly, isolate_real_roots, Sturm};
use crate::algebra::{AlgebraicReal, IntPoly};
use crate::report::ValidationReport;

pub use characters::CharacterTable;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum FusionError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("ring failed validation ({0})")]
    NotValidated(String),
    #[error("ring is not commutative")]
    NotCommutative,
    #[error("character table: {0}")]
    CharacterTable(String),
}

/// Structure constants `N_{i,j}^k` of a unital based ring with duality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FusionRing {
    rank: usize,
    n: Vec<u32>,
    dual: Vec<usize>,
}

/// Frobenius–Perron dimensions of the simple objects, and Σ FPdim².
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionVector {
    pub entries: Vec<AlgebraicReal>,
    pub total: AlgebraicReal,
}

impl FusionRing {
    /// Build from a flat tensor indexed `(i·r + j)·r + k`.
    pub fn new(rank: usize, tensor: Vec<u32>, dual: Vec<usize>) -> Result<Self, FusionError> {
        if rank == 0 {
            return Err(FusionError::ShapeMismatch("rank must be positive".into()));
        }
        if tensor.len() != rank * rank * rank {
            return Err(FusionError::ShapeMismatch(format!(
                "tensor has {} entries, rank {rank} needs {}",
                tensor.len(),
                rank * rank * rank
            )));
        }
        if dual.len() != rank {
            return Err(FusionError::ShapeMismatch(format!("dual has {} entries, rank is {rank}", dual.len())));
        }
        if let Some(&d) = dual.iter().find(|&&d| d >= rank) {
            return Err(FusionError::ShapeMismatch(format!("dual label {d} out of range")));
        }
        Ok(FusionRing { rank, n: tensor, dual })
    }

    /// Build from nested `mats[i][j][k] = N_{i,j}^k`.
    pub fn from_nested(mats: &[Vec<Vec<u32>>], dual: Vec<usize>) -> Result<Self, FusionError> {
        let r = mats.len();
        let mut t = Vec::with_capacity(r * r * r);
        for (i, m) in mats.iter().enumerate() {
            if m.len() != r || m.iter().any(|row| row.len() != r) {
                return Err(FusionError::ShapeMismatch(format!("N_{i} is not {r}×{r}")));
            }
            t.extend(m.iter().flatten().copied());
        }
        Self::new(r, t, dual)
    }

    /// Build from a product rule returning the summands of `X_i ⊗ X_j`
    /// (repeated labels give multiplicities).
    pub fn from_rule(
        rank: usize,
        dual: Vec<usize>,
        rule: impl Fn(usize, usize) -> Vec<usize>,
    ) -> Result<Self, FusionError> {
        let mut t = vec![0u32; rank * rank * rank];
        for i in 0..rank {
            for j in 0..rank {
                for k in rule(i, j) {
                    if k >= rank {
                        return Err(FusionError::ShapeMismatch(format!("label {k} out of range")));
                    }
                    t[(i * rank + j) * rank + k] += 1;
                }
            }
        }
        Self::new(rank, t, dual)
    }

    /// Group ring of ℤ_n with labels 0..n.
    pub fn cyclic(n: usize) -> Self {
        Self::from_rule(n, (0..n).map(|i| (n - i) % n).collect(), |i, j| vec![(i + j) % n]).expect("valid shape")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    #[inline]
    pub fn n(&self, i: usize, j: usize, k: usize) -> u32 {
        self.n[(i * self.rank + j) * self.rank + k]
    }

    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    pub fn duals(&self) -> &[usize] {
        &self.dual
    }

    pub fn tensor(&self) -> &[u32] {
        &self.n
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<u32>>> {
        let r = self.rank;
        (0..r).map(|i| (0..r).map(|j| (0..r).map(|k| self.n(i, j, k)).collect()).collect()).collect()
    }

    /// `(N_i)_{j,k} = N_{i,j}^k`; the character vector is a column eigenvector.
    pub fn fusion_matrix(&self, i: usize) -> Vec<Vec<i64>> {
        let r = self.rank;
        (0..r).map(|j| (0..r).map(|k| self.n(i, j, k) as i64).collect()).collect()
    }

    pub fn is_self_dual(&self) -> bool {
        (0..self.rank).all(|i| self.dual[i] == i)
    }

    pub fn is_commutative(&self) -> bool {
        self.first_noncommuting().is_none()
    }

    fn first_noncommuting(&self) -> Option<Vec<usize>> {
        let r = self.rank;
        for i in 0..r {
            for j in i + 1..r {
                for k in 0..r {
                    if self.n(i, j, k) != self.n(j, i, k) {
                        return Some(vec![i, j, k]);
                    }
                }
            }
        }
        None
    }

    /// Check the based-ring axioms; commutativity is reported as a flag.
    pub fn validate(&self) -> ValidationReport {
        let r = self.rank;
        let mut rep = ValidationReport::new(format!("fusion ring of rank {r}"));

        let inv = if self.dual[0] != 0 {
            Some(("0* ≠ 0".to_string(), vec![0]))
        } else {
            (0..r).find(|&i| self.dual[self.dual[i]] != i).map(|i| ("dual is not an involution".to_string(), vec![i]))
        };
        rep.record("dual_involution", inv);

        let mut unit = None;
        'u: for j in 0..r {
            for k in 0..r {
                let want = u32::from(j == k);
                if self.n(0, j, k) != want || self.n(j, 0, k) != want {
                    unit = Some(("unit row or column is not the identity".to_string(), vec![j, k]));
                    break 'u;
                }
            }
        }
        rep.record("unit", unit);

        let mut pairing = None;
        'p: for i in 0..r {
            for j in 0..r {
                if self.n(i, j, 0) != u32::from(j == self.dual[i]) {
                    pairing = Some((format!("N_{{{i},{j}}}^0 = {}", self.n(i, j, 0)), vec![i, j]));
                    break 'p;
                }
            }
        }
        rep.record("dual_pairing", pairing);

        let mut transpose = None;
        't: for i in 0..r {
            let is = self.dual[i];
            for j in 0..r {
                for k in 0..r {
                    if self.n(is, j, k) != self.n(i, k, j) {
                        transpose = Some(("N_{i*} ≠ N_iᵀ".to_string(), vec![i, j, k]));
                        break 't;
                    }
                }
            }
        }
        rep.record("transpose", transpose);

        rep.record(
            "associativity",
            self.first_nonassociative().map(|w| ("(x_i x_j) x_k ≠ x_i (x_j x_k)".to_string(), w)),
        );

        let nc = self.first_noncommuting();
        let detail = nc.as_ref().map_or(String::new(), |w| format!("first asymmetry at {w:?}"));
        rep.info("commutativity", nc.is_none(), detail);
        rep
    }

    fn first_nonassociative(&self) -> Option<Vec<usize>> {
        let r = self.rank;
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    for l in 0..r {
                        let lhs: u64 = (0..r).map(|m| self.n(i, j, m) as u64 * self.n(m, k, l) as u64).sum();
                        let rhs: u64 = (0..r).map(|m| self.n(j, k, m) as u64 * self.n(i, m, l) as u64).sum();
                        if lhs != rhs {
                            return Some(vec![i, j, k, l]);
                        }
                    }
                }
            }
        }
        None
    }

    fn require_valid(&self) -> Result<(), FusionError> {
        let rep = self.validate();
        match rep.first_failure() {
            Some(c) => Err(FusionError::NotValidated(c.name.clone())),
            None => Ok(()),
        }
    }

    /// Exact Frobenius–Perron dimensions.
    ///
    /// Each FPdim is the largest real root of the characteristic polynomial
    /// of `N_i`, certified by a Sturm count of zero above its interval.
    /// The total is the FP eigenvalue of `Σ_i N_i N_{i*}`, whose positive
    /// eigenvector is the dimension vector itself.
    pub fn fpdims(&self) -> Result<DimensionVector, FusionError> {
        self.require_valid()?;
        let r = self.rank;
        let entries = (0..r).map(|i| largest_real_eigenvalue(&self.fusion_matrix(i))).collect::<Vec<_>>();
        let mut m = vec![vec![0i64; r]; r];
        for i in 0..r {
            let a = self.fusion_matrix(i);
            let b = self.fusion_matrix(self.dual[i]);
            for (x, row) in m.iter_mut().enumerate() {
                for (y, v) in row.iter_mut().enumerate() {
                    *v += (0..r).map(|z| a[x][z] * b[z][y]).sum::<i64>();
                }
            }
        }
        let total = largest_real_eigenvalue(&m);
        Ok(DimensionVector { entries, total })
    }

    /// Labels of invertible objects (`x_i x_{i*} = 1`, equivalently FPdim 1).
    pub fn invertibles(&self) -> Vec<usize> {
        (0..self.rank)
            .filter(|&i| {
                let is = self.dual[i];
                (0..self.rank).map(|k| self.n(i, is, k)).sum::<u32>() == 1
            })
            .collect()
    }

    /// All 2-colorings `c` with `c[0] = 0` such that `N_{i,j}^k ≠ 0` implies
    /// `c[k] = c[i] + c[j] mod 2`. Includes the trivial grading.
    pub fn z2_gradings(&self) -> Vec<Vec<u8>> {
        let r = self.rank;
        let support: Vec<(usize, usize, usize)> = (0..r)
            .flat_map(|i| (0..r).flat_map(move |j| (0..r).map(move |k| (i, j, k))))
            .filter(|&(i, j, k)| self.n(i, j, k) != 0)
            .collect();
        let mut out = vec![];
        for mask in 0u64..(1u64 << (r - 1)) {
            let c: Vec<u8> = (0..r).map(|i| if i == 0 { 0 } else { ((mask >> (i - 1)) & 1) as u8 }).collect();
            if support.iter().all(|&(i, j, k)| c[k] == (c[i] ^ c[j])) {
                out.push(c);
            }
        }
        out
    }

    pub fn invertibles_and_z2_gradings(&self) -> (Vec<usize>, Vec<Vec<u8>>) {
        (self.invertibles(), self.z2_gradings())
    }

    /// Label `(i, j)` of the product is `i·r₂ + j`.
    pub fn deligne_product(&self, other: &FusionRing) -> FusionRing {
        let (r1, r2) = (self.rank, other.rank);
        let r = r1 * r2;
        let mut t = vec![0u32; r * r * r];
        for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    t[(a * r + b) * r + c] = self.n(a / r2, b / r2, c / r2) * other.n(a % r2, b % r2, c % r2);
                }
            }
        }
        let dual = (0..r).map(|a| self.dual[a / r2] * r2 + other.dual[a % r2]).collect();
        FusionRing { rank: r, n: t, dual }
    }

    /// The ring with label `sigma[i]` playing the role of old label `i`.
    pub fn permuted(&self, sigma: &[usize]) -> FusionRing {
        let r = self.rank;
        let mut t = vec![0u32; r * r * r];
        let mut dual = vec![0; r];
        for i in 0..r {
            dual[sigma[i]] = sigma[self.dual[i]];
            for j in 0..r {
                for k in 0..r {
                    t[(sigma[i] * r + sigma[j]) * r + sigma[k]] = self.n(i, j, k);
                }
            }
        }
        FusionRing { rank: r, n: t, dual }
    }

    /// Restriction to `labels` (in the given order) if they span a based
    /// sub-ring containing the unit.
    pub fn subring(&self, labels: &[usize]) -> Option<FusionRing> {
        let set: BTreeSet<usize> = labels.iter().copied().collect();
        if labels.first() != Some(&0) || set.len() != labels.len() {
            return None;
        }
        for &i in labels {
            if !set.contains(&self.dual[i]) {
                return None;
            }
            for &j in labels {
                if (0..self.rank).any(|k| self.n(i, j, k) != 0 && !set.contains(&k)) {
                    return None;
                }
            }
        }
        let pos = |x: usize| labels.iter().position(|&y| y == x).expect("closed");
        let r = labels.len();
        let mut t = vec![0u32; r * r * r];
        for (a, &i) in labels.iter().enumerate() {
            for (b, &j) in labels.iter().enumerate() {
                for (c, &k) in labels.iter().enumerate() {
                    t[(a * r + b) * r + c] = self.n(i, j, k);
                }
            }
        }
        let dual = labels.iter().map(|&i| pos(self.dual[i])).collect();
        Some(FusionRing { rank: r, n: t, dual })
    }

    // Relabeling-invariant data per label, used to prune isomorphism search.
    fn label_signature(&self, i: usize) -> (bool, u32, Vec<BigInt>) {
        (self.dual[i] == i, self.n(i, i, i), charpoly(&self.fusion_matrix(i)).coeffs().to_vec())
    }

    /// All label bijections σ (σ(0) = 0) with `N'_{σi,σj}^{σk} = N_{i,j}^k`
    /// and `σ(i*) = σ(i)*`, in lexicographic order.
    pub fn find_isomorphisms(&self, other: &FusionRing) -> Vec<Vec<usize>> {
        let r = self.rank;
        if other.rank != r {
            return vec![];
        }
        let sa: Vec<_> = (0..r).map(|i| self.label_signature(i)).collect();
        let sb: Vec<_> = (0..r).map(|i| other.label_signature(i)).collect();
        let mut ms: Vec<_> = sa.clone();
        let mut mo: Vec<_> = sb.clone();
        ms.sort();
        mo.sort();
        if ms != mo {
            return vec![];
        }
        let cands: Vec<Vec<usize>> = (0..r).map(|i| (0..r).filter(|&j| sa[i] == sb[j]).collect()).collect();
        let mut out = vec![];
        let mut sigma = vec![usize::MAX; r];
        let mut used = vec![false; r];
        if cands[0].contains(&0) {
            sigma[0] = 0;
            used[0] = true;
            self.extend_iso(other, 1, &cands, &mut sigma, &mut used, &mut out);
        }
        out
    }

    fn extend_iso(
        &self,
        other: &FusionRing,
        pos: usize,
        cands: &[Vec<usize>],
        sigma: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let r = self.rank;
        if pos == r {
            out.push(sigma.clone());
            return;
        }
        for &c in &cands[pos] {
            if used[c] {
                continue;
            }
            sigma[pos] = c;
            used[c] = true;
            if self.partial_ok(other, pos, sigma) {
                self.extend_iso(other, pos + 1, cands, sigma, used, out);
            }
            used[c] = false;
            sigma[pos] = usize::MAX;
        }
    }

    // Check every constraint involving label `p` and labels assigned before it.
    fn partial_ok(&self, other: &FusionRing, p: usize, sigma: &[usize]) -> bool {
        let d = self.dual[p];
        if d <= p && other.dual[sigma[p]] != sigma[d] {
            return false;
        }
        for a in 0..=p {
            for b in 0..=p {
                for c in 0..=p {
                    if a != p && b != p && c != p {
                        continue;
                    }
                    if self.n(a, b, c) != other.n(sigma[a], sigma[b], sigma[c]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_isomorphic(&self, other: &FusionRing) -> bool {
        !self.find_isomorphisms(other).is_empty()
    }

    /// Character table of a commutative ring.
    pub fn character_table(&self) -> Result<CharacterTable, FusionError> {
        if !self.is_commutative() {
            return Err(FusionError::NotCommutative);
        }
        characters::compute(self)
    }
}

// Largest real eigenvalue of a square integer matrix.
pub(crate) fn largest_real_eigenvalue(m: &[Vec<i64>]) -> AlgebraicReal {
    let p = charpoly(m).squarefree();
    let roots = isolate_real_roots(&p);
    let top = roots.last().expect("a nonnegative integer matrix has a real eigenvalue");
    let a = AlgebraicReal::new(p.clone(), top.lo.clone(), top.hi.clone()).expect("isolated root");
    debug_assert_eq!(Sturm::new(&p).count_above(&top.hi), 0);
    a
}

/// Characteristic polynomial of `N_i`, exposed for invariants and tests.
pub fn fusion_charpoly(ring: &FusionRing, i: usize) -> IntPoly {
    charpoly(&ring.fusion_matrix(i))
}

impl DimensionVector {
    /// Σ d_i² computed directly from the entries.
    pub fn sum_of_squares(&self) -> AlgebraicReal {
        self.entries.iter().fold(AlgebraicReal::zero(), |acc, d| acc.add(&d.mul(d)))
    }
}

/// The ring with a single label.
pub fn trivial_ring() -> FusionRing {
    FusionRing::cyclic(1)
}
