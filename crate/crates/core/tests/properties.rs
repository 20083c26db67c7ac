use ising_core::braid::{self, generator_matrix, monodromy, qubit_count, word_matrix, BraidWord, Letter};
use ising_core::state::{embed, measure_pair, AnyonState, Sector};
use ising_core::teleport::{prepare_bell, tangle};
use ising_core::{Complex64, CycScalar, Matrix, Scalar};
use proptest::prelude::*;

type C = CycScalar;

fn cyc() -> impl Strategy<Value = C> {
    (prop::array::uniform4(-64i64..64), 0u32..6).prop_map(|(c, k)| C::new(c, k))
}

fn word(anyons: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1..anyons, prop_oneof![Just(-2i32), Just(-1), Just(1), Just(2)]), 0..max_len)
        .prop_map(move |ls| BraidWord::from_letters(anyons, ls.into_iter().map(|(g, p)| Letter::new(g, p)).collect()).unwrap())
}

proptest! {
    #[test]
    fn field_axioms(a in cyc(), b in cyc(), c in cyc()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.sub(&a), C::zero());
        prop_assert_eq!(a.mul(&C::one()), a.clone());
        prop_assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
        prop_assert!(a.norm_sqr().is_real());
    }

    #[test]
    fn float_conversion_is_multiplicative_on_units(j in 0i64..8, k in 0i64..8, s in 0i32..2) {
        let a = C::zeta_pow(j);
        let b = C::zeta_pow(k).mul(&C::sqrt2_pow(s)).mul(&C::sqrt2_pow(-s));
        let lhs = a.mul(&b).to_c64();
        let rhs = a.to_c64() * b.to_c64();
        prop_assert!((lhs - rhs).norm() <= 1e-14);
    }

    #[test]
    fn text_round_trip(a in cyc()) {
        prop_assert_eq!(a.to_string().parse::<C>().unwrap(), a);
    }

    #[test]
    fn superselection_preserved((k, w, idx) in (4usize..=12).prop_flat_map(|k| (Just(k), word(k, 24), 0usize..64))) {
        let n = qubit_count(k);
        let start = AnyonState::<C>::basis_index(k, idx % (1 << n));
        let out = braid::apply(&w, &start).unwrap();
        out.validate(0.0).unwrap();
        prop_assert_eq!(out.sector(), start.sector());
        prop_assert!(out.norm_sqr().is_one());
    }

    #[test]
    fn inverse_word_undoes(w in word(7, 30), seed in any::<u64>()) {
        let s = AnyonState::<C>::random(7, Sector::Sigma, seed).unwrap();
        let back = braid::apply(&w.inverse(), &braid::apply(&w, &s).unwrap()).unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn measurement_branches_are_eigenvectors(seed in any::<u64>(), j in 1usize..8) {
        let s = AnyonState::<C>::random(8, Sector::Odd, seed).unwrap();
        let recs = measure_pair(&s, j).unwrap();
        prop_assert!(recs[0].probability.add(&recs[1].probability).is_one());
        let mono = monodromy::<C>(8, j).unwrap();
        for (r, sign) in recs.iter().zip([1i64, -1]) {
            if let Some(post) = &r.post_state {
                prop_assert_eq!(post.sector(), Sector::Odd);
                let mut v = post.amplitudes().to_vec();
                mono.apply_in_place(&mut v, 4).unwrap();
                let expect: Vec<C> = post.amplitudes().iter().map(|a| if sign == 1 { a.clone() } else { a.neg() }).collect();
                prop_assert_eq!(v, expect);
            }
        }
    }
}

/// Superselection over 1000 seeded words on up to 12 anyons.
#[test]
fn thousand_random_words_keep_sector_support() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..1000 {
        let k = rng.random_range(4..=12usize);
        let len = rng.random_range(1..40);
        let letters: Vec<Letter> =
            (0..len).map(|_| Letter::new(rng.random_range(1..k), if rng.random_bool(0.5) { 1 } else { -1 })).collect();
        let w = BraidWord::from_letters(k, letters).unwrap();
        let idx = rng.random_range(0..1usize << qubit_count(k));
        let start = AnyonState::<C>::basis_index(k, idx);
        let out = braid::apply(&w, &start).unwrap();
        for (i, a) in out.amplitudes().iter().enumerate() {
            if !a.is_zero() {
                assert!(start.sector().contains(i), "K={k} word {w} leaks into index {i}");
            }
        }
    }
}

// Dense oracle: generators assembled with Kronecker products of the small
// published blocks, independent of the structured kernels.
fn oracle_generator(k: usize, j: usize) -> Matrix<C> {
    let n = qubit_count(k);
    let eye = |q: usize| Matrix::<C>::identity(1 << q);
    let p = C::zeta().mul(&C::inv_sqrt2());
    let q = p.mul(&C::i().neg());
    let z = C::zero();
    if j % 2 == 1 {
        let d = Matrix::diagonal(&[C::one(), C::i()]);
        let pos = j.div_ceil(2);
        return eye(pos - 1).kron(&d).kron(&eye(n - pos));
    }
    let pos = j / 2;
    if k % 2 == 1 && j == k - 1 {
        let b = Matrix::from_rows(vec![vec![p.clone(), q.clone()], vec![q, p]]);
        return eye(n - 1).kron(&b);
    }
    let b = Matrix::from_rows(vec![
        vec![p.clone(), z.clone(), z.clone(), q.clone()],
        vec![z.clone(), p.clone(), q.clone(), z.clone()],
        vec![z.clone(), q.clone(), p.clone(), z.clone()],
        vec![q, z.clone(), z, p],
    ]);
    eye(pos - 1).kron(&b).kron(&eye(n - pos - 1))
}

#[test]
fn structured_generators_match_dense_oracle() {
    for k in 2..=13 {
        for j in 1..k {
            assert_eq!(generator_matrix::<C>(k, j).unwrap(), oracle_generator(k, j), "K={k} j={j}");
        }
    }
}

#[test]
fn unitarity_up_to_twelve_anyons() {
    for k in 2..=12 {
        for j in 1..k {
            assert!(generator_matrix::<C>(k, j).unwrap().is_unitary(0.0), "K={k} j={j}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn apply_matches_dense_product(k in 2usize..=13, seed in any::<u64>(), len in 0usize..12) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        prop_assume!(qubit_count(k) <= 6);
        let letters: Vec<Letter> = (0..len)
            .map(|_| Letter::new(rng.random_range(1..k), [-2, -1, 1, 2, 3][rng.random_range(0..5)]))
            .collect();
        let w = BraidWord::from_letters(k, letters).unwrap();
        let mut dense = Matrix::identity(1 << qubit_count(k));
        for l in w.letters() {
            let g = oracle_generator(k, l.generator);
            let g = if l.power < 0 { g.adjoint() } else { g };
            dense = dense.matmul(&g.pow(l.power.unsigned_abs()));
        }
        prop_assert_eq!(word_matrix::<C>(&w).unwrap(), dense.clone());
        let idx = rng.random_range(0..1usize << qubit_count(k));
        let out = braid::apply(&w, &AnyonState::<C>::basis_index(k, idx)).unwrap();
        prop_assert_eq!(out.amplitudes(), &dense.column(idx)[..]);
    }
}

#[test]
fn bell_braiding_leaves_phi_untouched() {
    for (m, n, sector) in [(3, 1, Sector::Sigma), (4, 2, Sector::Odd), (2, 1, Sector::Even), (5, 2, Sector::Sigma)] {
        let phi = AnyonState::<C>::random(m, sector, 77).unwrap();
        let e = embed(&phi, n).unwrap();
        let out = braid::apply(&tangle(e.anyons(), 2 * n + 1, 0).unwrap(), &e).unwrap();
        let bell = prepare_bell::<C>(n).unwrap();
        let expect = Matrix::from_columns(vec![bell.amplitudes().to_vec()])
            .kron(&Matrix::from_columns(vec![phi.amplitudes().to_vec()]))
            .column(0);
        assert_eq!(out.amplitudes(), &expect[..], "M={m} N={n}");
        assert_eq!(out.sector(), e.sector());
    }
}

#[test]
fn float_and_exact_agree_on_words() {
    let w = BraidWord::parse(9, "b8 b3^-1 b2 b5^2 b1 b7^-2 b4 b6").unwrap();
    let a = word_matrix::<C>(&w).unwrap();
    let b = word_matrix::<Complex64>(&w).unwrap();
    for r in 0..16 {
        for c in 0..16 {
            assert!((a.get(r, c).to_c64() - b.get(r, c)).norm() < 1e-14);
        }
    }
}
