//! Property tests for the decision procedures: agreement with the oracle on
//! every profile, basis invariance of the verdict, and the symbolic
//! index-swap symmetry of the invariants.

mod common;

use quartic_forms::algebra::{rat_int, MultiPoly};
use quartic_forms::invariants::{closed_invariants, symbolic_invariants};
use quartic_forms::oracle::{oracle_positive, FormGenerator, Profile};
use quartic_forms::positivity::decide;
use quartic_forms::tensor::{transform_form, BasisChange};
use quartic_forms::verify::criterion_equivalence_fuzz;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn decide_matches_oracle_on_every_profile_smoke() {
    for profile in [
        Profile::Uniform,
        Profile::Sos,
        Profile::Indefinite,
        Profile::Boundary,
    ] {
        let report = criterion_equivalence_fuzz(1000, 0xFADE, profile);
        assert!(report.passed(), "{profile}: {:?}", report.disagreements);
    }
}

#[test]
fn verdict_is_basis_invariant_on_1000_changes() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xBA515);
    let source = FormGenerator::new(0xBA, Profile::Uniform);
    for i in 0..1000u64 {
        let form = source.form_at(i);
        let basis = loop {
            let s = [
                [
                    rat_int(rng.gen_range(-5i64..=5)),
                    rat_int(rng.gen_range(-5i64..=5)),
                ],
                [
                    rat_int(rng.gen_range(-5i64..=5)),
                    rat_int(rng.gen_range(-5i64..=5)),
                ],
            ];
            if let Ok(b) = BasisChange::from_direct(s) {
                break b;
            }
        };
        let moved = transform_form(&form, &basis);
        let v1 = decide(&form).expect("criteria agree");
        let v2 = decide(&moved).expect("criteria agree");
        assert_eq!(
            v1.positive, v2.positive,
            "basis change altered the verdict on {form}"
        );
        assert_eq!(v2.positive, oracle_positive(&moved));
    }
}

#[test]
fn exhaustive_small_lattice_agrees_with_the_oracle() {
    // every integer form with entries in {-2..2}: 5^5 = 3125 forms, loaded
    // with degenerate and boundary cases (zeros, perfect powers, squares)
    use quartic_forms::invariants::{compute_invariants, FormCoefficients};
    use quartic_forms::positivity::{positive_by_t41, positive_by_t42};
    let range = [-2i64, -1, 0, 1, 2];
    let mut tested = 0u32;
    for a in range {
        for b in range {
            for c in range {
                for d in range {
                    for e in range {
                        let form = FormCoefficients::from_ints([a, b, c, d, e]);
                        let inv = compute_invariants(&form);
                        let v41 = positive_by_t41(&form, &inv).positive;
                        let v42 = positive_by_t42(&form, &inv).positive;
                        let truth = oracle_positive(&form);
                        assert_eq!(v41, v42, "criteria disagree on {form}");
                        assert_eq!(v41, truth, "criterion vs oracle on {form}");
                        tested += 1;
                    }
                }
            }
        }
    }
    assert_eq!(tested, 3125);
}

#[test]
fn reduced_quartic_tests_match_sturm_counts() {
    // the classical no-real-roots tests against direct root counting on
    // z^4 + q z^2 + r z + s, over a small exhaustive lattice
    use quartic_forms::algebra::{rat, sturm_count_real_roots, UniPoly};
    use quartic_forms::invariants::ReducedQuartic;
    use quartic_forms::positivity::{dickson_no_real_roots, rees_no_real_roots};
    let range: Vec<quartic_forms::algebra::Rational> = [-3i64, -2, -1, 0, 1, 2, 3]
        .map(|n| rat(n, 1))
        .into_iter()
        .collect();
    let halves: Vec<quartic_forms::algebra::Rational> =
        [-3i64, -1, 1, 3].map(|n| rat(n, 2)).into_iter().collect();
    let values: Vec<_> = range.iter().chain(halves.iter()).cloned().collect();
    for q in &values {
        for r in &values {
            for s in &values {
                let rq = ReducedQuartic::new(q.clone(), r.clone(), s.clone());
                let verdict = if r == &rat(0, 1) {
                    rees_no_real_roots(&rq).unwrap()
                } else {
                    dickson_no_real_roots(&rq).unwrap()
                };
                let poly = UniPoly::from_coeffs(vec![
                    s.clone(),
                    r.clone(),
                    q.clone(),
                    rat(0, 1),
                    rat(1, 1),
                ]);
                let no_roots = sturm_count_real_roots(&poly).unwrap() == 0;
                assert_eq!(verdict, no_roots, "q={q} r={r} s={s}");
            }
        }
    }
}

#[test]
fn index_swap_maps_the_invariants_into_each_other() {
    // swapping the variables exchanges the paired invariants and fixes the
    // pseudoscalars, as exact polynomial identities
    let direct = symbolic_invariants();
    let g = MultiPoly::generators();
    let swapped = [
        g[4].clone(),
        g[3].clone(),
        g[2].clone(),
        g[1].clone(),
        g[0].clone(),
    ];
    let mirrored = closed_invariants(&swapped);
    assert_eq!(direct.i0, mirrored.i0);
    assert_eq!(direct.beta, mirrored.beta);
    assert_eq!(direct.gamma, mirrored.gamma);
    assert_eq!(direct.i1, mirrored.i2);
    assert_eq!(direct.i2, mirrored.i1);
    assert_eq!(direct.i3, mirrored.i4);
    assert_eq!(direct.i4, mirrored.i3);
    assert_eq!(direct.i5, mirrored.i6);
    assert_eq!(direct.i6, mirrored.i5);
    assert_eq!(direct.i7, mirrored.i8);
    assert_eq!(direct.i8, mirrored.i7);
}

#[test]
fn same_seed_reproduces_identical_reports() {
    use quartic_forms::verify::run_identity_suite;
    let a = criterion_equivalence_fuzz(500, 99, Profile::Uniform);
    let b = criterion_equivalence_fuzz(500, 99, Profile::Uniform);
    assert_eq!(a.disagreements, b.disagreements);
    assert_eq!(a.tested, b.tested);
    let ra = run_identity_suite();
    let rb = run_identity_suite();
    let content = |r: &quartic_forms::verify::IdentityReport| {
        r.entries
            .iter()
            .map(|e| (e.id, e.status, e.difference_text()))
            .collect::<Vec<_>>()
    };
    assert_eq!(content(&ra), content(&rb));
}

#[test]
fn positivity_is_invariant_under_positive_scaling() {
    use quartic_forms::algebra::rat;
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5CA1E);
    let source = FormGenerator::new(0x5CA, Profile::Uniform);
    for i in 0..500u64 {
        let form = source.form_at(i);
        let lambda = rat(rng.gen_range(1i64..=40), rng.gen_range(1i64..=40));
        let scaled = quartic_forms::invariants::FormCoefficients::from_array(
            form.to_array().map(|x| x * &lambda),
        );
        let v1 = decide(&form).expect("criteria agree");
        let v2 = decide(&scaled).expect("criteria agree");
        assert_eq!(
            v1.positive, v2.positive,
            "flag changed under scaling: {form}"
        );
        assert_eq!(v1.path, v2.path, "path changed under scaling: {form}");
    }
}

#[test]
fn discriminant_of_reduction_scales_to_i0_on_1000_forms() {
    // D4(first reduction) * a1111^6 = 256 * I0 whenever the reduction exists
    let source = FormGenerator::new(0xD15C, Profile::Uniform);
    let mut checked = 0u32;
    let mut i = 0u64;
    while checked < 1000 {
        let form = source.form_at(i);
        i += 1;
        let inv = quartic_forms::invariants::compute_invariants(&form);
        let Some(rq) = inv.first.clone() else {
            continue;
        };
        let d4 = quartic_forms::invariants::quartic_discriminant(&rq);
        let a6 = form.a1111.clone()
            * &form.a1111
            * &form.a1111
            * &form.a1111
            * &form.a1111
            * &form.a1111;
        assert_eq!(d4 * a6, rat_int(256) * &inv.i0, "scaling failed on {form}");
        checked += 1;
    }
}
