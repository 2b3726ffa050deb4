//! Acceptance suite: one test per criterion, each printing a PASS line
//! (visible with `cargo test --test acceptance -- --nocapture`).

use std::time::{Duration, Instant};

use biracks::congruence::{approx, bsim, is_congruence, join, quotient, sim};
use biracks::group::{center, groups_commute, nilpotency_class, orbits};
use biracks::retract::{
    self, is_left_m_permutational, is_left_m_reductive, multipermutation_level,
};
use biracks::theorems::{
    self, survey_nondistributive, verify_full_nilpotency, verify_left_nilpotency,
    verify_rack_nilpotency, DEFAULT_TUPLE_BUDGET,
};
use biracks::{census, construct, Birack, CensusEntry, Perm, Solution};

fn finish(id: usize, name: &str, started: Instant, bound: Duration) {
    let elapsed = started.elapsed();
    assert!(
        elapsed < bound,
        "criterion {id} exceeded its runtime bound: {elapsed:?} >= {bound:?}"
    );
    println!("acceptance {id} ({name}): PASS in {elapsed:?}");
}

/// Both censuses the distributive-only criteria range over: every valid
/// birack on up to three points plus the distributive census on four.
fn distributive_pool() -> Vec<CensusEntry> {
    let mut pool = Vec::new();
    for n in 1..=3 {
        pool.extend(
            census::enumerate_biracks(n)
                .unwrap()
                .into_iter()
                .filter(|e| e.report.distributive),
        );
    }
    pool.extend(census::enumerate_distributive(4).unwrap());
    pool
}

#[test]
fn criterion_1_six_element_fixture_regression() {
    let started = Instant::now();
    let b = construct::example6();
    assert!(b.is_distributive().unwrap());

    let lmlt = b.lmlt().unwrap();
    let rmlt = b.rmlt().unwrap();
    let mlt = b.mlt().unwrap();
    assert_eq!(lmlt.order(), 8);
    assert!(!lmlt.is_abelian());
    assert_eq!(rmlt.order(), 2);
    assert_eq!(center(&lmlt), rmlt);
    assert_eq!(orbits(&lmlt), vec![vec![0, 1], vec![2, 3, 4, 5]]);
    assert_eq!(
        orbits(&rmlt),
        vec![vec![0], vec![1], vec![2, 3], vec![4, 5]]
    );
    assert_eq!(nilpotency_class(&mlt), Some(2));
    assert_eq!(multipermutation_level(&b).unwrap(), Some(3));

    let report =
        verify_full_nilpotency(&b, "six-element fixture", 5, DEFAULT_TUPLE_BUDGET).unwrap();
    assert!(report.holds());
    finish(
        1,
        "six-element fixture regression",
        started,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_2_wada_sweep_over_order_eight_groups() {
    let started = Instant::now();
    let z8 = construct::cyclic(8).unwrap();
    let z4xz2 = construct::direct_product(
        &construct::cyclic(4).unwrap(),
        &construct::cyclic(2).unwrap(),
    )
    .unwrap();
    let d8 = construct::dihedral(8).unwrap();
    let q8 = construct::quaternion8();
    let e8 = construct::elementary_abelian(3).unwrap();

    for (group, distributive, involutive, projection) in [
        (&z8, false, false, false),
        (&z4xz2, true, false, false),
        (&d8, true, false, false),
        (&q8, true, false, false),
        (&e8, true, true, true),
    ] {
        let b = construct::wada(group);
        assert_eq!(
            b.is_distributive().unwrap(),
            distributive,
            "distributivity of the Wada switch on {}",
            group.name()
        );
        assert_eq!(b.is_involutive(), involutive, "{}", group.name());
        assert_eq!(b.is_projection(), projection, "{}", group.name());
    }

    let wada_q8 = construct::wada(&q8);
    let q = quotient(&wada_q8, &approx(&wada_q8)).unwrap();
    assert_eq!(q, construct::projection(4));
    finish(
        2,
        "Wada sweep over the order-8 groups",
        started,
        Duration::from_secs(5),
    );
}

#[test]
fn criterion_3_braid_validation_cross_oracle() {
    let started = Instant::now();
    for n in 1..=3usize {
        let mut mismatches = 0usize;
        census::for_each_table_pair(n, |circ, bullet| {
            let valid = Birack::validate(n, circ.to_vec(), bullet.to_vec()).is_ok();
            let mut tau = vec![0usize; n * n];
            for x in 0..n {
                for y in 0..n {
                    tau[y * n + x] = bullet[x * n + y];
                }
            }
            let s = Solution::new(n, circ.to_vec(), tau).unwrap();
            // Bijective rows/columns make every candidate non-degenerate.
            assert!(s.is_nondegenerate());
            if valid != s.braid_check() {
                mismatches += 1;
            }
        })
        .unwrap();
        assert_eq!(mismatches, 0, "bridge mismatch at n = {n}");
    }
    finish(
        3,
        "braid/validation cross-oracle",
        started,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_4_nilpotency_equivalences_exhaustive() {
    let started = Instant::now();
    let mut full = 0usize;
    let mut left = 0usize;
    let mut check = |entry: &CensusEntry| {
        if entry.report.distributive {
            let report =
                verify_full_nilpotency(&entry.birack, "census", 6, DEFAULT_TUPLE_BUDGET).unwrap();
            assert!(report.holds(), "full equivalence fails: {report:?}");
            assert!(
                report
                    .rows
                    .iter()
                    .all(|r| r.reductive.is_some() && r.permutational.is_some()),
                "reductivity checks must fit the budget at census sizes"
            );
            full += 1;
        }
        if entry.report.left_distributive {
            let report =
                verify_left_nilpotency(&entry.birack, "census", 6, DEFAULT_TUPLE_BUDGET).unwrap();
            assert!(report.holds(), "left equivalence fails: {report:?}");
            if entry.report.idempotent {
                assert_eq!(report.rows[0].k, 1, "idempotent entries start at k = 1");
            }
            left += 1;
        }
    };
    let mut nondistributive_pool = Vec::new();
    for n in 1..=3 {
        for entry in census::enumerate_biracks(n).unwrap() {
            check(&entry);
            nondistributive_pool.push(entry);
        }
    }
    for entry in census::enumerate_distributive(4).unwrap() {
        check(&entry);
    }
    assert!(full >= 61 + 1428 && left >= 66 + 1428);

    // Informational: scan the non-distributive census entries for levels
    // separating tower collapse from nilpotency. Nothing is asserted
    // about existence either way; the census simply reports.
    let survey = survey_nondistributive(&nondistributive_pool, 6);
    println!(
        "non-distributive survey: {} entries checked, {} equivalence mismatches",
        survey.checked,
        survey.mismatches.len()
    );
    finish(
        4,
        "nilpotency equivalences, exhaustive",
        started,
        Duration::from_secs(600),
    );
}

#[test]
fn criterion_5_congruence_properties_on_the_census() {
    let started = Instant::now();
    for n in 1..=3 {
        for entry in census::enumerate_biracks(n).unwrap() {
            let b = &entry.birack;
            assert!(is_congruence(b, &approx(b)), "approx must be a congruence");
            if entry.report.left_distributive {
                assert!(
                    is_congruence(b, &sim(b)),
                    "sim on a left distributive birack"
                );
            }
            if entry.report.right_distributive {
                assert!(
                    is_congruence(b, &bsim(b)),
                    "bsim on a right distributive birack"
                );
            }
            if entry.report.involutive {
                assert_eq!(sim(b), bsim(b), "involutive biracks identify the kernels");
            }
        }
    }
    for entry in distributive_pool() {
        let b = &entry.birack;
        assert!(retract::ret(b).unwrap().is_idempotent());
        let theta = join(b, &sim(b), &bsim(b)).unwrap();
        assert!(quotient(b, &theta).unwrap().is_projection());
    }
    finish(
        5,
        "congruence properties on the census",
        started,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_6_rack_reductivity_equivalence() {
    let started = Instant::now();
    let mut checked = 0usize;
    for n in 1..=4 {
        for rack in census::enumerate_left_racks(n).unwrap() {
            let report = verify_rack_nilpotency(&rack, "census", 5, DEFAULT_TUPLE_BUDGET).unwrap();
            assert!(report.holds(), "rack equivalence fails: {report:?}");
            checked += 1;
        }
    }
    assert_eq!(checked, 1 + 2 + 13 + 114);
    finish(
        6,
        "rack reductivity equivalence",
        started,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_7_commuting_translation_groups_and_class() {
    let started = Instant::now();
    for entry in distributive_pool() {
        let b = &entry.birack;
        let lmlt = b.lmlt().unwrap();
        let rmlt = b.rmlt().unwrap();
        assert!(groups_commute(&lmlt, &rmlt).unwrap());
        let expected = match (nilpotency_class(&lmlt), nilpotency_class(&rmlt)) {
            (Some(a), Some(b)) => Some(a.max(b)),
            _ => None,
        };
        assert_eq!(nilpotency_class(&b.mlt().unwrap()), expected);
    }
    finish(
        7,
        "commuting translation groups and class",
        started,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_8_derived_fixtures() {
    let started = Instant::now();
    let wada_z4 = construct::wada(&construct::cyclic(4).unwrap());
    assert_eq!(multipermutation_level(&wada_z4).unwrap(), Some(2));
    let mlt = wada_z4.mlt().unwrap();
    assert_eq!(mlt.order(), 4);
    assert!(mlt.is_abelian());

    let f = Perm::from_cycles(3, &[&[0, 1, 2]]);
    let b = construct::permutational(3, &f, &Perm::identity(3)).unwrap();
    assert!(is_left_m_permutational(&b, 1));
    assert!(!is_left_m_reductive(&b, 1));
    assert_eq!(retract::lret(&b).unwrap().n(), 1);
    assert!(!b.lmlt().unwrap().is_trivial());

    // The theorem harnesses exclude k = 1 here, so the exception above
    // never contradicts them.
    let report =
        theorems::verify_left_nilpotency(&b, "exception", 4, DEFAULT_TUPLE_BUDGET).unwrap();
    assert!(report.holds());
    assert_eq!(report.rows[0].k, 2);
    finish(8, "derived fixtures", started, Duration::from_secs(10));
}
