//! Property-based invariants over random kets and matrices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use orbitdim::ket::{derealify, realify, scalar_mul_i};
use orbitdim::lie::{apply_generator, Generator, GeneratorKind, GroupKind};
use orbitdim::matrix::RationalMatrix;
use orbitdim::orbit::{ket_orbit_dim, state_matrix, state_orbit_dim, witness_w1, Ilo};
use orbitdim::rank::{exact_rank, float_rank_default};
use orbitdim::scalar::GaussianRational;
use orbitdim::PureKet;

fn rational() -> impl Strategy<Value = BigRational> {
    (-4i64..=4, 1i64..=3)
        .prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn amplitude() -> impl Strategy<Value = GaussianRational> {
    (rational(), rational()).prop_map(|(re, im)| GaussianRational::new(re, im))
}

/// A nonzero ket on `n` qubits; a zero draw is patched to |0…0⟩ + the rest.
fn ket(n: u32) -> impl Strategy<Value = PureKet> {
    proptest::collection::vec(amplitude(), 1 << n).prop_map(move |mut amps| {
        if amps.iter().all(GaussianRational::is_zero) {
            amps[0] = GaussianRational::one();
        }
        PureKet::new(n, amps).unwrap()
    })
}

fn any_ket() -> impl Strategy<Value = PureKet> {
    (1u32..=3).prop_flat_map(ket)
}

fn generator_kind() -> impl Strategy<Value = GeneratorKind> {
    proptest::sample::select(GeneratorKind::ALL.to_vec())
}

proptest! {
    #[test]
    fn realify_round_trips(ket in any_ket()) {
        prop_assert_eq!(derealify(&realify(&ket)).unwrap(), ket);
    }

    #[test]
    fn realify_is_linear_over_rational_scalars(ket in any_ket(), q in rational()) {
        prop_assume!(!q.is_zero());
        let scaled = ket.scaled(&GaussianRational::new(q.clone(), BigRational::zero())).unwrap();
        let lhs = realify(&scaled);
        let rhs: Vec<BigRational> = realify(&ket).entries().iter().map(|e| e * &q).collect();
        prop_assert_eq!(lhs.entries(), &rhs[..]);
    }

    #[test]
    fn scalar_mul_i_squares_to_negation(ket in any_ket()) {
        let v = realify(&ket);
        prop_assert_eq!(scalar_mul_i(&scalar_mul_i(&v)), v.negated());
    }

    #[test]
    fn q_and_e_act_as_identity_and_i(ket in any_ket(), qubit_pick in 0u32..8) {
        let qubit = qubit_pick % ket.n() + 1;
        let q_image = apply_generator(Generator { kind: GeneratorKind::Q, qubit }, &ket).unwrap();
        prop_assert_eq!(&q_image[..], ket.amps());
        let e_image = apply_generator(Generator { kind: GeneratorKind::E, qubit }, &ket).unwrap();
        let i_psi: Vec<GaussianRational> = ket.amps().iter().map(GaussianRational::mul_i).collect();
        prop_assert_eq!(e_image, i_psi);
    }

    #[test]
    fn generator_application_is_additive(
        a in ket(2),
        b in ket(2),
        kind in generator_kind(),
        qubit in 1u32..=2,
    ) {
        let gen = Generator { kind, qubit };
        let on_a = apply_generator(gen, &a).unwrap();
        let on_b = apply_generator(gen, &b).unwrap();
        let summed: Vec<GaussianRational> =
            a.amps().iter().zip(b.amps()).map(|(x, y)| x + y).collect();
        if let Ok(sum_ket) = PureKet::new(2, summed) {
            let on_sum = apply_generator(gen, &sum_ket).unwrap();
            let expected: Vec<GaussianRational> =
                on_a.iter().zip(&on_b).map(|(x, y)| x + y).collect();
            prop_assert_eq!(on_sum, expected);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn state_space_dimension_relations(ket in any_ket()) {
        let ket_gl = ket_orbit_dim(&ket, GroupKind::GL);
        let state_gl = state_orbit_dim(&ket, GroupKind::GL);
        let state_sl = state_orbit_dim(&ket, GroupKind::SL);
        prop_assert_eq!(state_gl, ket_gl - 2);
        prop_assert_eq!(state_gl, state_sl);

        // ψ and iψ already lie in the span of the GL tangent columns.
        let m = state_matrix(&ket, GroupKind::GL);
        prop_assert_eq!(exact_rank(&m).rank, ket_gl);

        let w1 = witness_w1(&ket);
        prop_assert!(w1 == 0 || w1 == 2, "W1 = {}", w1);
    }

    #[test]
    fn witness_vanishes_on_product_kets(
        factors in proptest::collection::vec((amplitude(), amplitude()), 2..=3)
    ) {
        // Tensor the single-qubit kets; patch degenerate zero factors.
        let factors: Vec<[GaussianRational; 2]> = factors
            .into_iter()
            .map(|(a, b)| {
                if a.is_zero() && b.is_zero() {
                    [GaussianRational::one(), b]
                } else {
                    [a, b]
                }
            })
            .collect();
        let n = factors.len();
        let amps: Vec<GaussianRational> = (0..1usize << n)
            .map(|j| {
                factors.iter().enumerate().fold(GaussianRational::one(), |acc, (k, f)| {
                    &acc * &f[j >> (n - 1 - k) & 1]
                })
            })
            .collect();
        let ket = PureKet::new(n as u32, amps).unwrap();
        prop_assert_eq!(witness_w1(&ket), 0);
    }

    #[test]
    fn orbit_dimensions_are_ilo_invariant(ket in any_ket(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ilo = Ilo::random(ket.n(), &mut rng, 3).unwrap();
        let moved = ilo.apply(&ket).unwrap();
        for group in [GroupKind::GL, GroupKind::SL] {
            prop_assert_eq!(ket_orbit_dim(&moved, group), ket_orbit_dim(&ket, group));
        }
        prop_assert_eq!(
            state_orbit_dim(&moved, GroupKind::GL),
            state_orbit_dim(&ket, GroupKind::GL)
        );
    }
}

fn small_matrix() -> impl Strategy<Value = RationalMatrix> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(rows, cols)| {
        proptest::collection::vec(rational(), rows * cols).prop_map(move |data| {
            RationalMatrix::from_rows(
                data.chunks(cols).map(|chunk| chunk.to_vec()).collect::<Vec<_>>(),
            )
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn rank_is_invariant_under_transpose_and_permutation(
        m in small_matrix(),
        row_a in 0usize..6,
        col_a in 0usize..6,
        scale in rational(),
    ) {
        let base = exact_rank(&m).rank;
        prop_assert_eq!(exact_rank(&m.transposed()).rank, base);

        // Swap two rows.
        let mut rows: Vec<Vec<BigRational>> = (0..m.rows())
            .map(|r| (0..m.cols()).map(|c| m.entry(r, c).clone()).collect())
            .collect();
        rows.swap(row_a % m.rows(), 0);
        prop_assert_eq!(exact_rank(&RationalMatrix::from_rows(rows)).rank, base);

        // Scale one column by a nonzero rational.
        prop_assume!(!scale.is_zero());
        let mut scaled = m.clone();
        let c = col_a % m.cols();
        for r in 0..m.rows() {
            let v = scaled.entry(r, c) * &scale;
            scaled.set(r, c, v);
        }
        prop_assert_eq!(exact_rank(&scaled).rank, base);
    }

    #[test]
    fn appending_a_spanned_column_keeps_rank(
        m in small_matrix(),
        weights in proptest::collection::vec(rational(), 6),
    ) {
        let combo: Vec<BigRational> = (0..m.rows())
            .map(|r| {
                (0..m.cols())
                    .map(|c| m.entry(r, c) * &weights[c % weights.len()])
                    .fold(BigRational::zero(), |acc, v| acc + v)
            })
            .collect();
        let extended = m.with_appended_columns(&[combo]);
        prop_assert_eq!(exact_rank(&extended).rank, exact_rank(&m).rank);
    }

    #[test]
    fn float_rank_matches_exact_rank_on_small_matrices(m in small_matrix()) {
        let exact = exact_rank(&m).rank;
        let float = float_rank_default(&m).expect("small rational spectra are unambiguous");
        prop_assert_eq!(float.rank, exact);
    }
}
