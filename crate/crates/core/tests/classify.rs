use std::sync::OnceLock;

use supermod::algebra::{AlgebraicReal, Rat};
use supermod::catalog::{self, psu2_adjoint};
use supermod::classify::*;
use supermod::fusion_ring::FusionRing;
use supermod::premodular::fusion_split_witness;
use supermod::quotient::{naive_rules, partition_ring};

fn rank6() -> &'static ClassificationRun {
    static RUN: OnceLock<ClassificationRun> = OnceLock::new();
    RUN.get_or_init(|| classify_run(6, 8).unwrap())
}

fn rank4() -> &'static ClassificationRun {
    static RUN: OnceLock<ClassificationRun> = OnceLock::new();
    RUN.get_or_init(|| classify_run(4, 8).unwrap())
}

fn sqrt(n: i64) -> AlgebraicReal {
    AlgebraicReal::sqrt_rational(&Rat::from_integer(n.into())).unwrap()
}

fn int(n: i64) -> AlgebraicReal {
    AlgebraicReal::from_int(n)
}

fn selfdual_families(run: &ClassificationRun) -> Vec<QuotientCandidate> {
    run.enumerations.iter().find(|e| e.shape == QuotientShape::SelfDual3).unwrap().families.clone()
}

#[test]
fn alpha_zero_and_one_are_feasible() {
    assert!(alpha_feasibility(0).is_feasible());
    assert!(alpha_feasibility(1).is_feasible());
}

#[test]
fn alpha_two_through_ten_are_refuted() {
    for a in 2..=10 {
        let v = alpha_feasibility(a);
        assert!(!v.is_feasible(), "alpha = {a}");
        let lb: Rat = v.certificate().gap_lower_bound.as_ref().unwrap().parse().unwrap();
        assert!(lb > Rat::from_integer(0.into()));
    }
}

#[test]
fn gap_matches_the_displayed_chain() {
    for a in 2..=6i64 {
        let q = alpha_quantities(a as u32);
        let (d1, d2) = (&q.d1, &q.d2);
        let sq = |x: &AlgebraicReal| x.mul(x);
        // (2α−1)d₁² + (α−1)d₂² − 2d₁d₂ − 2d₂ − 1
        let first = int(2 * a - 1)
            .mul(&sq(d1))
            .add(&int(a - 1).mul(&sq(d2)))
            .sub(&int(2).mul(&d1.mul(d2)))
            .sub(&int(2).mul(d2))
            .sub(&int(1));
        assert_eq!(q.gap, first);
        let second = int(3).mul(&sq(d1)).add(&sq(d2)).sub(&int(2).mul(&d1.mul(d2))).sub(&int(2).mul(d2)).sub(&int(1));
        let third = sq(d1).add(&int(2 * a - 2).mul(d2)).sub(&int(1));
        assert!(first >= second && second > third && third > int(0));
        assert!(*d1 > *d2 && *d2 > int(2 * a));
    }
}

#[test]
fn alpha_two_numbers() {
    let q = alpha_quantities(2);
    assert_eq!(q.d2, int(2).add(&sqrt(6)));
    assert!((q.a.sub(&q.b).to_f64() - 334.565).abs() < 1e-2);
    assert!((q.half_dsq.to_f64() - 118.788).abs() < 1e-2);
}

#[test]
fn three_selfdual_families() {
    let fams = selfdual_families(rank6());
    let params: Vec<Vec<u32>> = fams.iter().map(|c| c.params.clone()).collect();
    assert_eq!(params, vec![vec![0, 1, 0, 0], vec![1, 1, 0, 1], vec![2, 1, 2, 1]]);
    assert_eq!(fams[0].alpha, Some(0));
    assert_eq!(fams[1].alpha, None);
    assert_eq!(fams[2].alpha, Some(1));
    assert!(fams[0].nhat.is_isomorphic(&catalog::ising_rules()));
    assert!(fams[1].nhat.is_isomorphic(&catalog::psu2_5().data.ring));
    // α = 1: d₂ = 1 + √3 and d₁ = 2 + √3
    let d = &fams[2].dims.entries;
    assert_eq!(d[2], int(1).add(&sqrt(3)));
    assert_eq!(d[1], int(2).add(&sqrt(3)));
}

#[test]
fn bound_four_and_eight_agree() {
    let small = enumerate_selfdual_rank6_quotients(4).unwrap();
    let big = selfdual_families(rank6());
    let p = |v: &[QuotientCandidate]| v.iter().map(|c| (c.params.clone(), c.equivalent.clone())).collect::<Vec<_>>();
    assert_eq!(p(&small), p(&big));
    let r4 = classify_run(6, 4).unwrap();
    let forms = |r: &ClassificationRun| r.records.iter().map(|x| canonical_form(&x.representative)).collect::<Vec<_>>();
    assert_eq!(forms(&r4), forms(rank6()));
}

#[test]
fn stage_counts_at_bound_eight() {
    let e = rank6().enumerations.iter().find(|e| e.shape == QuotientShape::SelfDual3).unwrap();
    assert_eq!(e.stats.scanned, 9usize.pow(4));
    assert_eq!(e.stats.commuting, 92);
    // the α = 2 tuple and its relabeling fall to the indicator test
    let refuted: Vec<&Vec<u32>> = e.indicator_rejections.iter().map(|r| &r.0).collect();
    assert_eq!(refuted, vec![&vec![1, 4, 2, 8], &vec![4, 1, 8, 2]]);
}

#[test]
fn lift_counts() {
    let run = rank6();
    let lifts = |tag: &str| &run.lifts.iter().find(|(d, _)| d.contains(tag)).unwrap().1;
    let ising = lifts("k=0,l=1,m=0,n=0");
    assert_eq!(ising.accepted.len(), 1);
    let w = ising.accepted[0].witness.as_ref().unwrap();
    assert!(w.factor.is_isomorphic(&catalog::ising_rules()));

    let a = lifts("k=1,l=1,m=0,n=1");
    assert_eq!(a.associative.len(), 1);
    assert!(a.accepted[0].split);
    assert!(a.accepted[0].splits.iter().all(|s| s.odd == 0 && s.even == s.total));

    let alpha1 = lifts("k=2,l=1,m=2,n=1");
    assert_eq!(alpha1.associative.len(), 2);
    assert_eq!(alpha1.accepted.len(), 1);
    assert_eq!(alpha1.accepted[0].coefficients(), vec![1, 1, 1, 1]);
    assert_eq!(alpha1.rejected.len(), 1);
    assert_eq!(alpha1.rejected[0].lift.coefficients(), vec![2, 0, 2, 0]);
    assert_eq!(alpha1.rejected[0].dependency, "[O4 3.5]");
    for l in &alpha1.associative {
        for s in &l.splits {
            assert_eq!(s.even + s.odd, s.total);
        }
    }
}

#[test]
fn rank_four_records() {
    let run = rank4();
    assert_eq!(run.records.len(), 3);
    assert_eq!(run.non_split_count(), 1);
    let ns = run.records.iter().find(|r| !r.split).unwrap();
    let psu6 = psu2_adjoint(1, 1).unwrap().data.ring;
    assert!(!ns.representative.find_isomorphisms(&psu6).is_empty());
    // lift labels 1, X1, f, fX1: the swap X1 ↔ fX1 is an automorphism
    assert!(ns.representative.find_isomorphisms(&ns.representative).contains(&vec![0, 3, 2, 1]));
    let names: Vec<&str> = run.records.iter().filter(|r| r.split).map(|r| r.name.as_str()).collect();
    assert!(names.contains(&"semion ⊠ sVec") && names.contains(&"Fib ⊠ sVec"));
}

#[test]
fn rank_six_records() {
    let run = rank6();
    assert_eq!(run.records.len(), 4);
    assert_eq!(run.non_split_count(), 1);
    let ns = run.records.iter().find(|r| !r.split).unwrap();
    assert!(ns.representative.is_isomorphic(&psu2_adjoint(2, 1).unwrap().data.ring));
    assert!(ns.dependencies.iter().any(|d| d == "[O4 3.5]"));
    let mut split: Vec<&str> = run.records.iter().filter(|r| r.split).map(|r| r.name.as_str()).collect();
    split.sort();
    assert_eq!(split, vec!["Ising ⊠ sVec", "PSU(2)_5 ⊠ sVec", "Z3 ⊠ sVec"]);
    let z3 = run.records.iter().find(|r| r.name == "Z3 ⊠ sVec").unwrap();
    assert_eq!(z3.quotient.shape, QuotientShape::NonSelfDual3);
}

#[test]
fn pipeline_closure() {
    let svec = FusionRing::cyclic(2);
    for run in [rank4(), rank6()] {
        for (i, r) in run.records.iter().enumerate() {
            assert!(r.representative.validate().passed(), "{}", r.name);
            let w = fusion_split_witness(&r.representative, r.fermion).unwrap();
            assert_eq!(w.is_some(), r.split, "{}", r.name);
            if let Some(w) = &r.witness {
                assert!(w.factor.deligne_product(&svec).is_isomorphic(&r.representative));
                assert!(w.fpdim_criterion);
            }
            for other in &run.records[i + 1..] {
                assert!(r.representative.find_isomorphisms(&other.representative).is_empty());
            }
        }
    }
}

#[test]
fn quotient_round_trip() {
    for run in [rank4(), rank6()] {
        for r in &run.records {
            let p = partition_ring(&r.representative, r.fermion).unwrap();
            assert_eq!(naive_rules(&r.representative, &p), r.quotient.nhat, "{}", r.name);
        }
    }
}

#[test]
fn records_are_sorted_and_deterministic() {
    let again = classify_run(4, 8).unwrap();
    let names = |r: &ClassificationRun| r.records.iter().map(|x| x.name.clone()).collect::<Vec<_>>();
    assert_eq!(names(&again), names(rank4()));
    let forms: Vec<FusionRing> = rank6().records.iter().map(|x| canonical_form(&x.representative)).collect();
    let mut sorted = forms.clone();
    sorted.sort();
    assert_eq!(forms, sorted);
}

#[test]
fn conjecture_scan_finds_no_counterexample() {
    let pool = catalog::rank_le3_modular_entries();
    let mut records = rank4().records.clone();
    records.extend(rank6().records.iter().cloned());
    let rep = conjecture_scan(&records, &pool);
    assert!(rep.counterexamples.is_empty());
    for e in &rep.entries {
        if !e.split {
            assert!(e.matches.is_empty(), "{}", e.record);
        }
    }
    let ising = rep.entries.iter().find(|e| e.record == "Ising ⊠ sVec").unwrap();
    assert_eq!(ising.matches, vec!["Ising".to_string()]);
    assert!(conjecture_scan(&records, &[]).entries.is_empty());
}

#[test]
fn rank_two_has_one_flagged_class() {
    let recs = classify_supermodular(2).unwrap();
    assert_eq!(recs.len(), 1);
    assert!(recs[0].representative.is_isomorphic(&psu2_adjoint(0, 1).unwrap().data.ring));
    assert!(recs[0].notes.iter().any(|n| n.contains("not adjudicated")));
}
