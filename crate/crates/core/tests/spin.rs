use supermod::catalog::{self, su2};
use supermod::premodular::{deligne_product, verify_premodular};
use supermod::spin::*;

fn profile_of(level: u32, t: i64) -> SectorProfile {
    let e = su2(level, t).unwrap();
    let s = sectorize(&e.data, level as usize).unwrap();
    assert!(s.blocks.passed(), "{}", s.blocks);
    s.profile
}

#[test]
fn su2_spin_profiles() {
    assert_eq!(profile_of(2, 1), SectorProfile::new(3, 2, 0, 1));
    assert_eq!(profile_of(6, 1), SectorProfile::new(7, 4, 2, 1));
    assert_eq!(profile_of(10, 1), SectorProfile::new(11, 6, 4, 1));
    // Galois conjugates have the same sectors
    for t in [3, 5, 7, 11, 13] {
        assert_eq!(profile_of(6, t), SectorProfile::new(7, 4, 2, 1), "t = {t}");
    }
}

#[test]
fn sector_labels_of_su2_6() {
    let e = su2(6, 1).unwrap();
    let s = sectorize(&e.data, 6).unwrap();
    assert_eq!(s.c0, vec![0, 2, 4, 6]);
    assert_eq!(s.cv, vec![1, 5]);
    assert_eq!(s.csigma, vec![3]);
}

#[test]
fn catalog_spin_data_lands_in_the_table() {
    for level in [2u32, 6, 10] {
        let p = profile_of(level, 1);
        assert!(rank_profiles(p.total).unwrap().profiles.contains(&p));
    }
}

#[test]
fn products_with_ising() {
    let ising = catalog::ising().data;
    for (e, expect) in [
        (catalog::semion(), SectorProfile::new(6, 4, 0, 2)),
        (catalog::fibonacci(), SectorProfile::new(6, 4, 0, 2)),
        (catalog::pointed_z3(), SectorProfile::new(9, 6, 0, 3)),
        (catalog::psu2_5(), SectorProfile::new(9, 6, 0, 3)),
    ] {
        let d = deligne_product(&e.data, &ising);
        assert!(verify_premodular(&d).unwrap().passed());
        // ψ of the Ising factor sits at label (0, 2)
        let s = sectorize(&d, 2).unwrap();
        assert_eq!(s.profile, expect, "{}", e.name);
        assert!(s.profile.is_consistent());
        assert!(s.blocks.passed());
        assert!(rank_profiles(s.profile.total).unwrap().profiles.contains(&s.profile));
    }
}

#[test]
fn su2_with_even_level_product() {
    // SU(2)_6 ⊠ semion with f = (6, 0)
    let d = deligne_product(&su2(6, 1).unwrap().data, &catalog::semion().data);
    let s = sectorize(&d, 12).unwrap();
    assert_eq!(s.profile, SectorProfile::new(14, 8, 4, 2));
    assert!(s.blocks.passed());
}

#[test]
fn non_modular_or_bosonic_input_is_rejected() {
    let sv = catalog::svec().data;
    assert!(matches!(sectorize(&sv, 1), Err(SpinError::NotSpinModular(_))));
    // SU(2)_4: the label 4 has θ = 1
    let e = su2(4, 1).unwrap();
    assert!(matches!(sectorize(&e.data, 4), Err(SpinError::NotSpinModular(_))));
    let ising = catalog::ising().data;
    assert!(matches!(sectorize(&ising, 1), Err(SpinError::NotSpinModular(_))));
}

#[test]
fn profile_table() {
    let c0 = |t: usize| rank_profiles(t).unwrap().profiles.iter().map(|p| (p.c0, p.cv, p.csigma)).collect::<Vec<_>>();
    assert_eq!(c0(3), vec![(2, 0, 1)]);
    assert_eq!(c0(4), vec![(2, 2, 0)]);
    assert_eq!(c0(6), vec![(4, 0, 2)]);
    assert_eq!(c0(7), vec![(4, 2, 1)]);
    assert_eq!(c0(8), vec![(4, 4, 0)]);
    assert_eq!(c0(9), vec![(6, 0, 3)]);
    assert_eq!(c0(10), vec![(6, 2, 2)]);
    assert_eq!(c0(11), vec![(6, 4, 1)]);
    let five = rank_profiles(5).unwrap();
    assert!(five.excluded && five.profiles.is_empty() && !five.notes.is_empty());
    assert!(matches!(rank_profiles(1), Err(SpinError::OutOfRange { note: None, .. })));
}

#[test]
fn structural_table() {
    let c7 = classify_spin(7).unwrap();
    assert_eq!(c7.descriptors.len(), 2);
    assert!(matches!(&c7.descriptors[0], SpinDescriptor::Product { forms, .. } if forms.is_empty()));
    assert!(matches!(&c7.descriptors[1], SpinDescriptor::Extension { of, count: 16, .. } if of == "PSU(2)_6"));
    for t in [10, 11] {
        let c = classify_spin(t).unwrap();
        assert!(c.descriptors.iter().any(|d| matches!(d, SpinDescriptor::Extension { of, .. } if of == "PSU(2)_10")));
        assert!(c.dependencies.iter().any(|d| d.contains("[KLW]")));
    }
    let c9 = classify_spin(9).unwrap();
    match &c9.descriptors[0] {
        SpinDescriptor::Product { forms, .. } => {
            assert_eq!(forms.len(), 1);
            assert_eq!((forms[0].d_rank, forms[0].n_parity), (3, Parity::Odd));
            assert_eq!(forms[0].candidates_for_d, vec!["Z3", "Ising", "PSU(2)_5"]);
        }
        other => panic!("{other:?}"),
    }
    for t in 3..=5 {
        assert!(classify_spin(t).unwrap().dependencies.iter().any(|d| d.contains("[kitaev]")));
    }
    assert!(matches!(classify_spin(12), Err(SpinError::OutOfRange { note: Some(_), .. })));
}
