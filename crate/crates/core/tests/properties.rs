use magic_compound::*;
use proptest::prelude::*;

fn small_square(max_order: usize, range: i64) -> impl Strategy<Value = IntSquare> {
    (1..=max_order).prop_flat_map(move |n| {
        proptest::collection::vec(-range..=range, n * n)
            .prop_map(move |e| IntSquare::new(n, e).unwrap())
    })
}

fn square_of(n: usize, range: i64) -> impl Strategy<Value = IntSquare> {
    proptest::collection::vec(-range..=range, n * n)
        .prop_map(move |e| IntSquare::new(n, e).unwrap())
}

fn magic_seed() -> impl Strategy<Value = IntSquare> {
    let seeds = ["M3", "M4", "M4_PANDIAGONAL"];
    (0..seeds.len(), 0..Phase::ALL.len())
        .prop_map(move |(s, p)| Phase::ALL[p].apply(&fixture_square(seeds[s]).unwrap()))
}

fn phase() -> impl Strategy<Value = Phase> {
    (0..Phase::ALL.len()).prop_map(|i| Phase::ALL[i])
}

proptest! {
    #[test]
    fn kron_mixed_product(
        (a, c) in (1usize..=3).prop_flat_map(|n| (square_of(n, 9), square_of(n, 9))),
        (b, d) in (1usize..=3).prop_flat_map(|n| (square_of(n, 9), square_of(n, 9))),
    ) {
        let lhs = a.kron(&b).unwrap().mul(&c.kron(&d).unwrap()).unwrap();
        let rhs = a.mul(&c).unwrap().kron(&b.mul(&d).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn charpoly_invariants(m in small_square(5, 20)) {
        let n = m.order();
        let p = charpoly_exact(&m);
        prop_assert_eq!(p.degree(), Some(n));
        prop_assert_eq!(p.leading_coefficient().unwrap(), &1.into());
        prop_assert_eq!(&p.coefficients()[n - 1], &(-m.trace()).into());
        prop_assert_eq!(charpoly_exact(&m.transpose()), p.clone());
        // similarity by any permutation keeps the spectrum
        let r = flip_matrix(n);
        prop_assert_eq!(charpoly_exact(&r.mul(&m).unwrap().mul(&r).unwrap()), p);
    }

    #[test]
    fn phases_preserve_magic_and_regularity(m in magic_seed(), p in phase()) {
        let image = p.apply(&m);
        let (before, after) = (PropertyReport::of(&m), PropertyReport::of(&image));
        prop_assert_eq!(before, after);
        prop_assert_eq!(p.inverse().apply(&image), m);
    }

    #[test]
    fn corresponding_phases_commute(seed_m in magic_seed(), seed_n in magic_seed(), p in phase()) {
        let pair = CompoundPair::from_seeds(&seed_m, &seed_n).unwrap();
        let c = check_commute(&p.apply(pair.a()), &p.apply(pair.b())).unwrap();
        prop_assert!(c.commutes);
    }

    #[test]
    fn compound_pairs_are_orthogonal_and_natural(seed_m in magic_seed(), seed_n in magic_seed()) {
        let pair = CompoundPair::from_seeds(&seed_m, &seed_n).unwrap();
        prop_assert!(check_orthogonal_pair(pair.a(), pair.b()).unwrap());
        let (ma, mb) = euler_compose(&pair).unwrap();
        let k = pair.order();
        for sq in [&ma, &mb] {
            prop_assert!(check_natural(sq));
            prop_assert_eq!(check_magic(sq).summation_index, Some(magic_sum(k)));
        }
        let mu = magic_sum(seed_m.order()) * magic_sum(seed_n.order());
        prop_assert_eq!(check_commute(pair.a(), pair.b()).unwrap().product_scalar, Some(mu as i64));
    }

    #[test]
    fn pandiagonal_seeds_propagate(p in phase(), q in phase()) {
        let base = fixture_square("M4_PANDIAGONAL").unwrap();
        let pair = CompoundPair::from_seeds(&p.apply(&base), &q.apply(&base)).unwrap();
        let (ma, mb) = euler_compose(&pair).unwrap();
        for sq in [pair.a(), pair.b(), &ma, &mb] {
            prop_assert!(check_pandiagonal(sq));
        }
    }

    #[test]
    fn shuffle_conjugation_swaps_factors(seed in magic_seed()) {
        let x = seed.kron(&IntSquare::ones(seed.order())).unwrap();
        let p = shuffle_permutation(seed.order());
        let swapped = IntSquare::ones(seed.order()).kron(&seed).unwrap();
        prop_assert_eq!(apply_shuffle(&p, &x).unwrap(), swapped);
    }

    #[test]
    fn overflow_is_reported(k in 2i64..1000) {
        let big = IntSquare::new(1, vec![i64::MAX / k + 1]).unwrap();
        let overflowed = matches!(big.scale(k), Err(Error::Overflow { .. }));
        prop_assert!(overflowed);
    }
}

#[test]
fn ones_and_flip_identities() {
    for n in 1..12 {
        let e = ones_matrix(n);
        let r = flip_matrix(n);
        let i = IntSquare::identity(n);
        assert_eq!(e.mul(&e).unwrap(), e.scale(n as i64).unwrap());
        assert_eq!(r.mul(&r).unwrap(), i);
        assert_eq!(r.mul(&e).unwrap(), e);
        assert_eq!(e.mul(&r).unwrap(), e);
        let p = shuffle_permutation(n);
        assert_eq!(p.mul(&p).unwrap(), IntSquare::identity(n * n));
        assert_eq!(p.transpose(), p);
    }
}

#[test]
fn regular_constants_of_seeds() {
    let m3 = check_regular(&fixture_square("M3").unwrap());
    assert_eq!((m3.is_regular, m3.constant), (true, Some(8)));
    let m4 = check_regular(&fixture_square("M4").unwrap());
    assert_eq!((m4.is_regular, m4.constant), (true, Some(15)));
    // 13 + 14 = 27 on one centrally symmetric pair, so no single constant
    assert!(!check_regular(&fixture_square("M4_PANDIAGONAL").unwrap()).is_regular);
}

#[test]
fn fixture_profiles() {
    let expect = [
        ("M3", true, true, false),
        ("M4", true, true, false),
        ("M4_PANDIAGONAL", true, false, true),
        ("M9_A", true, true, false),
        ("M9_B", true, true, false),
        ("M12_A", true, true, false),
        ("M12_B_HAT", true, true, false),
        ("M16_A", true, false, true),
        ("M16_B", true, false, true),
    ];
    for (name, natural, regular, pandiagonal) in expect {
        let r = PropertyReport::of(&fixture_square(name).unwrap());
        assert!(r.is_magic, "{name}");
        assert_eq!(
            (r.is_natural, r.is_regular, r.is_pandiagonal),
            (natural, regular, pandiagonal),
            "{name}"
        );
    }
}

#[test]
fn generalized_grid_matches_fixture() {
    let tilde = fixture_square("A9_TILDE").unwrap();
    let cells: Vec<IntSquare> = (0..3)
        .flat_map(|i| (0..3).map(move |j| (i, j)))
        .map(|(i, j)| {
            let rows: Vec<Vec<i64>> = (0..3)
                .map(|r| (0..3).map(|c| tilde.get(3 * i + r, 3 * j + c)).collect())
                .collect();
            IntSquare::from_rows(&rows).unwrap()
        })
        .collect();
    let grid = SubsquareGrid::new(3, cells).unwrap();
    let pair = CompoundPair::generalized(&grid, &fixture_square("M3").unwrap()).unwrap();
    assert_eq!(pair.a(), &tilde);
    assert_eq!(pair.b(), &fixture_square("B9").unwrap());
}

#[test]
fn order_81_chain() {
    let chain = compound_chain(&fixture_square("M3").unwrap(), 2, ChainFeed::A).unwrap();
    assert_eq!(chain.len(), 2);
    assert_eq!(chain[0].ma, fixture_square("M9_A").unwrap());
    assert_eq!(chain[1].ma.order(), 81);
    assert_eq!(check_magic(&chain[1].ma).summation_index, Some(265_680));
}
