//! End-to-end acceptance suite: one pass/fail line per criterion.

use num_bigint::BigInt;

use gyralab_core::correspondence::{
    hexagon_tilings_weighted, k_factor, k_triangoloid, macmahon_count, psi_lambda, verify_df,
    verify_ordinary_rs, verify_t0_fpl, verify_theorem_main, KForm,
};
use gyralab_core::domains::{
    build_domain, symmetry_class_domain, DihedralDomain, DomainSpec, SymmetryClass,
};
use gyralab_core::exactmath::Poly;
use gyralab_core::fplenum::{enumerate_sector, refinement_histogram, Sector};
use gyralab_core::gyration::check_gyration_suite;
use gyralab_core::linkpat::{enumerate_patterns, PatternKind};
use gyralab_core::tlops::{
    check_ground_state_shape, check_t0_recursion, check_tl_relations, ground_state_scattering,
};

fn dom(spec: DomainSpec) -> DihedralDomain {
    build_domain(&spec).unwrap()
}

fn square(n: usize) -> DihedralDomain {
    dom(DomainSpec::first(n, n, [0, 0, 0, 0]))
}

fn poly(cs: &[i64]) -> Poly {
    Poly::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
}

fn criterion_1() -> Result<(), String> {
    let expected: [usize; 5] = [1, 2, 7, 42, 429];
    for (n, want) in (1..=5).zip(expected) {
        let got = enumerate_sector(&square(n), Sector::Plus).len();
        if got != want {
            return Err(format!("square {n}: {got} != {want}"));
        }
    }
    Ok(())
}

fn criterion_2() -> Result<(), String> {
    let expected: [&[u64]; 3] = [&[2, 3, 2], &[7, 14, 14, 7], &[42, 105, 135, 105, 42]];
    for (n, want) in (3..=5).zip(expected) {
        let d = square(n);
        let cfgs = enumerate_sector(&d, Sector::Plus);
        let got = refinement_histogram(&d, &cfgs);
        if got != want {
            return Err(format!("square {n}: {got:?} != {want:?}"));
        }
    }
    Ok(())
}

fn criterion_3() -> Result<(), String> {
    let spaces = [
        (PatternKind::Plain, 2),
        (PatternKind::Plain, 4),
        (PatternKind::Plain, 6),
        (PatternKind::PuncturedEven, 6),
        (PatternKind::PuncturedOdd, 5),
        (PatternKind::PuncturedOdd, 7),
    ];
    for (kind, n) in spaces {
        let space = enumerate_patterns(kind, n).map_err(|e| e.to_string())?;
        let rep = check_tl_relations(&space);
        if !rep.ok() {
            return Err(format!("{kind} N={n}: {:?}", rep.witness));
        }
    }
    Ok(())
}

fn criterion_4() -> Result<(), String> {
    let gs = ground_state_scattering(PatternKind::Plain, 6).map_err(|e| e.to_string())?;
    let mut comps: Vec<Vec<BigInt>> = gs
        .space
        .patterns
        .iter()
        .map(|p| gs.coeff(p).coeffs().to_vec())
        .collect();
    comps.sort();
    let mut want: Vec<Vec<BigInt>> = [
        poly(&[1]),
        poly(&[0, 1]),
        poly(&[0, 0, 1]),
        poly(&[1, 1]),
        poly(&[0, 1, 1]),
    ]
    .iter()
    .map(|p| p.coeffs().to_vec())
    .collect();
    want.sort();
    if comps != want {
        return Err("LP(6) components differ".into());
    }
    let gs4 = ground_state_scattering(PatternKind::Plain, 4).map_err(|e| e.to_string())?;
    let mut c4: Vec<Vec<BigInt>> = gs4
        .space
        .patterns
        .iter()
        .map(|p| gs4.coeff(p).coeffs().to_vec())
        .collect();
    c4.sort();
    let mut w4: Vec<Vec<BigInt>> = [poly(&[1]), poly(&[0, 1])]
        .iter()
        .map(|p| p.coeffs().to_vec())
        .collect();
    w4.sort();
    if c4 != w4 {
        return Err("LP(4) components differ".into());
    }
    let spaces = [
        (PatternKind::Plain, 2),
        (PatternKind::Plain, 4),
        (PatternKind::Plain, 6),
        (PatternKind::PuncturedEven, 2),
        (PatternKind::PuncturedEven, 4),
        (PatternKind::PuncturedEven, 6),
        (PatternKind::PuncturedOdd, 3),
        (PatternKind::PuncturedOdd, 5),
        (PatternKind::PuncturedOdd, 7),
    ];
    for (kind, n) in spaces {
        let gs = ground_state_scattering(kind, n).map_err(|e| e.to_string())?;
        let rep = check_ground_state_shape(&gs);
        if !rep.ok() {
            return Err(format!("{kind} N={n}: {:?}", rep.witness));
        }
    }
    Ok(())
}

fn criterion_5() -> Result<(), String> {
    let specs = [
        DomainSpec::first(3, 3, [0, 0, 0, 0]),
        DomainSpec::first(4, 4, [0, 0, 0, 0]),
        DomainSpec::first(4, 4, [0, 0, 0, 2]),
        DomainSpec::first(5, 4, [0, 0, 2, 1]),
        symmetry_class_domain(SymmetryClass::Htasm, 5).unwrap(),
        symmetry_class_domain(SymmetryClass::Htasm, 6).unwrap(),
    ];
    for spec in specs {
        let name = spec.name();
        let rep = verify_theorem_main(&dom(spec))?;
        if !rep.ok() {
            return Err(format!("{name}: {:?}", rep.notes));
        }
    }
    Ok(())
}

fn criterion_6() -> Result<(), String> {
    for n in 3..=4 {
        if k_factor(&square(n))? != Poly::one() {
            return Err(format!("square {n}: K != 1"));
        }
    }
    if k_factor(&dom(DomainSpec::first(4, 4, [0, 0, 0, 2])))? != poly(&[1, 1]) {
        return Err("one-corner cut: K != 1 + t".into());
    }
    for a in 1..=4 {
        for b in 1..=4 {
            for g in 0..=4 {
                let det = k_triangoloid(a, b, g, KForm::Determinant)?;
                let cl = k_triangoloid(a, b, g, KForm::Closed)?;
                if det != cl {
                    return Err(format!("({a},{b},{g}): determinant != closed form"));
                }
            }
        }
    }
    for a in 1..=3 {
        for b in 1..=3 {
            for g in 1..=3 {
                let w = hexagon_tilings_weighted(a, b, g);
                if w != k_triangoloid(a, b, g, KForm::Determinant)? {
                    return Err(format!("({a},{b},{g}): tilings != formula"));
                }
                if w.eval_one() != macmahon_count(a, b, g) {
                    return Err(format!("({a},{b},{g}): tiling count != product formula"));
                }
            }
        }
    }
    Ok(())
}

fn criterion_7() -> Result<(), String> {
    let specs = [
        DomainSpec::first(2, 2, [0, 0, 0, 0]),
        DomainSpec::first(3, 3, [0, 0, 0, 0]),
        DomainSpec::first(4, 4, [0, 0, 0, 0]),
        DomainSpec::first(4, 4, [0, 0, 0, 2]),
        DomainSpec::second(5, 4, [0, 2, 0, 2]),
    ];
    for spec in specs {
        let name = spec.name();
        let rep = check_gyration_suite(&dom(spec)).map_err(|e| e.to_string())?;
        if !rep.ok() {
            return Err(format!("{name}: {:?}", rep.notes));
        }
    }
    Ok(())
}

fn criterion_8() -> Result<(), String> {
    let specs = [
        DomainSpec::first(3, 3, [0, 0, 0, 0]),
        DomainSpec::first(4, 4, [0, 0, 0, 0]),
        DomainSpec::first(4, 4, [0, 0, 0, 2]),
    ];
    for spec in specs {
        let d = dom(spec.clone());
        let rep = verify_df(&d)?;
        if !rep.ok() {
            return Err(format!("{}: {:?}", spec.name(), rep.notes));
        }
        let rep = verify_ordinary_rs(&d)?;
        if !rep.ok() {
            return Err(format!("{}: {:?}", spec.name(), rep.notes));
        }
    }
    Ok(())
}

fn criterion_9() -> Result<(), String> {
    let d = dom(DomainSpec::first(8, 8, [0, 2, 2, 2]));
    let rep = verify_t0_fpl(&d)?;
    if !rep.ok() {
        return Err(format!("{:?}", rep.notes));
    }
    let reduced = psi_lambda(&square(4))?;
    if reduced.sym().eval_one() != BigInt::from(42) {
        return Err("reduced domain total != 42".into());
    }
    for (kind, n) in [(PatternKind::Plain, 6), (PatternKind::PuncturedEven, 6)] {
        let gs = ground_state_scattering(kind, n).map_err(|e| e.to_string())?;
        let rep = check_t0_recursion(&gs);
        if !rep.ok() {
            return Err(format!("{kind} N={n}: {:?}", rep.witness));
        }
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Result<(), String>); 9] = [
        ("counting on squares", criterion_1),
        ("refined counting on squares", criterion_2),
        ("algebra relations", criterion_3),
        ("scattering ground states", criterion_4),
        ("refined correspondence", criterion_5),
        ("K-factor formulas", criterion_6),
        ("gyration suite", criterion_7),
        ("symmetrized and unrefined correspondence", criterion_8),
        ("t -> 0 reduction", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(()) => println!("criterion {} ({name}): PASS", i + 1),
            Err(w) => {
                println!("criterion {} ({name}): FAIL - {w}", i + 1);
                failed += 1;
            }
        }
    }
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
