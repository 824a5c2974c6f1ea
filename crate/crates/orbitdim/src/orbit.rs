//! Orbit dimensions in ket space and state space, the entanglement
//! witnesses built from them, and the Monte Carlo principal-orbit sampling
//! behind the quotient dimension.
//!
//! Ket space: dim = rank of the realified tangent columns. State space:
//! dim = rank(M) − 2, where M is the tangent matrix extended by the columns
//! −ψ and −iψ that absorb the ray equivalence.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::OrbitError;
use crate::ket::{realify, scalar_mul_i, PureKet};
use crate::lie::{apply_one_qubit, tangent_matrix, GroupKind, Mat2};
use crate::matrix::RationalMatrix;
use crate::rank::exact_rank;
use crate::scalar::GaussianRational;

/// Default entry bound for random Gaussian-integer sampling.
pub const DEFAULT_ILO_RANGE: u32 = 9;
/// Default number of principal-orbit trials.
pub const DEFAULT_TRIALS: u32 = 5;
/// Resampling cap before giving up on a degenerate random draw.
const MAX_RESAMPLES: u32 = 1000;

/// Orbit dimensions of one ket under one group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    pub group: GroupKind,
    pub ket_dim: usize,
    pub state_dim: usize,
}

/// Dimension of the group orbit through `ket` in ket space.
pub fn ket_orbit_dim(ket: &PureKet, group: GroupKind) -> usize {
    exact_rank(tangent_matrix(ket, group).matrix()).rank
}

/// The matrix M whose rank determines the state-space orbit dimension:
/// the tangent columns extended by −ψ and −iψ.
pub fn state_matrix(ket: &PureKet, group: GroupKind) -> RationalMatrix {
    let tangent = tangent_matrix(ket, group);
    extend_to_state_matrix(tangent.matrix(), ket)
}

pub(crate) fn extend_to_state_matrix(tangent: &RationalMatrix, ket: &PureKet) -> RationalMatrix {
    let psi = realify(ket);
    let minus_psi = psi.negated().into_entries();
    let minus_i_psi = scalar_mul_i(&psi).negated().into_entries();
    tangent.with_appended_columns(&[minus_psi, minus_i_psi])
}

/// Dimension of the group orbit through `[ket]` in state space.
pub fn state_orbit_dim(ket: &PureKet, group: GroupKind) -> usize {
    let rank = exact_rank(&state_matrix(ket, group)).rank;
    // ψ and iψ are nonzero and realify to orthogonal columns, so rank ≥ 2.
    rank - 2
}

/// Ket- and state-space dimensions from a single tangent construction.
pub fn orbit_report(ket: &PureKet, group: GroupKind) -> OrbitReport {
    let tangent = tangent_matrix(ket, group);
    let ket_dim = exact_rank(tangent.matrix()).rank;
    let state_dim = exact_rank(&extend_to_state_matrix(tangent.matrix(), ket)).rank - 2;
    OrbitReport {
        group,
        ket_dim,
        state_dim,
    }
}

/// The witness `W₁ = dim(O^GL) − dim(O^SL)` in ket space; 2 signals
/// GHZ-type entanglement, 0 otherwise.
pub fn witness_w1(ket: &PureKet) -> usize {
    // The SL generator set is a subset of the GL one, so this cannot underflow.
    ket_orbit_dim(ket, GroupKind::GL) - ket_orbit_dim(ket, GroupKind::SL)
}

/// An invertible local operator: one invertible 2×2 Gaussian-integer matrix
/// per qubit, applied as their tensor product.
#[derive(Clone, Debug)]
pub struct Ilo {
    factors: Vec<Mat2>,
}

impl Ilo {
    /// Validates that every factor has nonzero determinant.
    pub fn new(factors: Vec<Mat2>) -> Result<Self, OrbitError> {
        for (index, f) in factors.iter().enumerate() {
            if det2(f).is_zero() {
                return Err(OrbitError::SingularFactor { index });
            }
        }
        Ok(Self { factors })
    }

    pub fn identity(n: u32) -> Self {
        let id = || {
            [
                [GaussianRational::one(), GaussianRational::zero()],
                [GaussianRational::zero(), GaussianRational::one()],
            ]
        };
        Self {
            factors: (0..n).map(|_| id()).collect(),
        }
    }

    /// Samples an ILO with entries `a + bi`, `a, b` uniform integers in
    /// `[−range, range]`; zero-determinant factors are rejected and redrawn.
    pub fn random<R: Rng + ?Sized>(n: u32, rng: &mut R, range: u32) -> Result<Self, OrbitError> {
        assert!(range >= 1);
        let mut factors = Vec::with_capacity(n as usize);
        for _ in 0..n {
            factors.push(random_invertible_factor(rng, range)?);
        }
        Ok(Self { factors })
    }

    pub fn n(&self) -> u32 {
        self.factors.len() as u32
    }

    pub fn factors(&self) -> &[Mat2] {
        &self.factors
    }

    /// Applies the operator qubit by qubit. Invertibility guarantees the
    /// image is nonzero.
    pub fn apply(&self, ket: &PureKet) -> Result<PureKet, OrbitError> {
        if self.n() != ket.n() {
            return Err(OrbitError::QubitCountMismatch {
                op: self.n(),
                ket: ket.n(),
            });
        }
        let mut amps = ket.amps().to_vec();
        for (k, factor) in self.factors.iter().enumerate() {
            amps = apply_one_qubit(factor, k as u32 + 1, ket.n(), &amps);
        }
        Ok(PureKet::new(ket.n(), amps).expect("invertible local operators preserve nonzero kets"))
    }
}

fn det2(m: &Mat2) -> GaussianRational {
    &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0])
}

fn random_gaussian_integer<R: Rng + ?Sized>(rng: &mut R, range: u32) -> GaussianRational {
    let bound = range as i64;
    GaussianRational::from_integers(
        rng.gen_range(-bound..=bound),
        rng.gen_range(-bound..=bound),
    )
}

fn random_invertible_factor<R: Rng + ?Sized>(
    rng: &mut R,
    range: u32,
) -> Result<Mat2, OrbitError> {
    for _ in 0..MAX_RESAMPLES {
        let factor = [
            [
                random_gaussian_integer(rng, range),
                random_gaussian_integer(rng, range),
            ],
            [
                random_gaussian_integer(rng, range),
                random_gaussian_integer(rng, range),
            ],
        ];
        if !det2(&factor).is_zero() {
            return Ok(factor);
        }
    }
    Err(OrbitError::IloSampling {
        attempts: MAX_RESAMPLES,
    })
}

/// One principal-orbit trial: the randomized ket and its U(2) state-space
/// orbit dimension.
#[derive(Clone, Debug)]
pub struct PrincipalTrial {
    pub ket: PureKet,
    pub dim: usize,
}

/// Result of the principal-orbit sampling.
#[derive(Clone, Debug)]
pub struct PrincipalOrbit {
    /// Maximum U(2) state-orbit dimension over the trials.
    pub d2: usize,
    pub trials: Vec<PrincipalTrial>,
    /// Set when the trials disagreed; the maximum is still reported.
    pub warning: Option<String>,
}

impl PrincipalOrbit {
    pub fn trial_values(&self) -> Vec<usize> {
        self.trials.iter().map(|t| t.dim).collect()
    }
}

/// Estimates the principal U(2) orbit dimension inside the SLOCC class of
/// `ket`: each trial pushes the state along a random invertible local
/// operator, landing in the dense principal-orbit union almost surely, and
/// measures the U(2) state-orbit dimension there.
///
/// Trials draw from generators split deterministically off `rng`, so a
/// fixed master seed reproduces every trial exactly.
pub fn principal_u2_dim<R: Rng + ?Sized>(
    ket: &PureKet,
    trials: u32,
    rng: &mut R,
    range: u32,
) -> Result<PrincipalOrbit, OrbitError> {
    assert!(trials >= 1);
    let trial_seeds: Vec<u64> = (0..trials).map(|_| rng.gen()).collect();
    let mut results = Vec::with_capacity(trials as usize);
    for seed in trial_seeds {
        let mut trial_rng = ChaCha8Rng::seed_from_u64(seed);
        let ilo = Ilo::random(ket.n(), &mut trial_rng, range)?;
        let moved = ilo.apply(ket)?;
        let dim = state_orbit_dim(&moved, GroupKind::U2);
        results.push(PrincipalTrial { ket: moved, dim });
    }
    let d2 = results.iter().map(|t| t.dim).max().expect("trials >= 1");
    let warning = if results.iter().any(|t| t.dim != d2) {
        Some(format!(
            "principal-orbit trials disagree ({:?}); reporting the maximum",
            results.iter().map(|t| t.dim).collect::<Vec<_>>()
        ))
    } else {
        None
    };
    Ok(PrincipalOrbit {
        d2,
        trials: results,
        warning,
    })
}

/// The three class dimensions: D1 = SLOCC-class dimension in state space,
/// D2 = principal U(2)-orbit dimension inside it, D3 = D1 − D2, the number
/// of free parameters left after local-unitary gluing.
#[derive(Clone, Debug, Serialize)]
pub struct ClassDimensions {
    pub d1: usize,
    pub d2: usize,
    pub d3: usize,
    pub trials_used: u32,
    pub trial_values: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

pub fn class_dimensions<R: Rng + ?Sized>(
    ket: &PureKet,
    trials: u32,
    rng: &mut R,
    range: u32,
) -> Result<ClassDimensions, OrbitError> {
    let d1 = state_orbit_dim(ket, GroupKind::GL);
    let principal = principal_u2_dim(ket, trials, rng, range)?;
    let d2 = principal.d2;
    // The U(2) orbit lies inside the SLOCC class, so d2 ≤ d1.
    let d3 = d1
        .checked_sub(d2)
        .expect("principal orbit dimension cannot exceed the class dimension");
    Ok(ClassDimensions {
        d1,
        d2,
        d3,
        trials_used: trials,
        trial_values: principal.trial_values(),
        warning: principal.warning,
    })
}

/// Samples a ket with Gaussian-integer amplitudes bounded by `range`,
/// rejecting the (practically unreachable) all-zero draw.
pub fn random_ket<R: Rng + ?Sized>(
    n: u32,
    rng: &mut R,
    range: u32,
) -> Result<PureKet, OrbitError> {
    assert!(n >= 1 && range >= 1);
    for _ in 0..MAX_RESAMPLES {
        let amps: Vec<GaussianRational> = (0..1usize << n)
            .map(|_| random_gaussian_integer(rng, range))
            .collect();
        if let Ok(ket) = PureKet::new(n, amps) {
            return Ok(ket);
        }
    }
    Err(OrbitError::KetSampling {
        attempts: MAX_RESAMPLES,
    })
}

/// D1 of a randomly sampled ket: the dimension of the largest SLOCC class,
/// almost surely.
pub fn generic_state_d1<R: Rng + ?Sized>(
    n: u32,
    rng: &mut R,
    range: u32,
) -> Result<(PureKet, usize), OrbitError> {
    let ket = random_ket(n, rng, range)?;
    let d1 = state_orbit_dim(&ket, GroupKind::GL);
    Ok((ket, d1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{corpus, ghz, w_state};

    fn bell() -> PureKet {
        corpus("Bell").unwrap().ket
    }

    #[test]
    fn one_qubit_ket_dims() {
        let ket = PureKet::basis(1, 0).unwrap();
        assert_eq!(ket_orbit_dim(&ket, GroupKind::GL), 4);
        assert_eq!(ket_orbit_dim(&ket, GroupKind::SL), 4);
    }

    #[test]
    fn two_qubit_ket_dims() {
        let product = PureKet::basis(2, 0).unwrap();
        assert_eq!(ket_orbit_dim(&product, GroupKind::GL), 6);
        assert_eq!(ket_orbit_dim(&product, GroupKind::SL), 6);
        assert_eq!(ket_orbit_dim(&bell(), GroupKind::GL), 8);
        assert_eq!(ket_orbit_dim(&bell(), GroupKind::SL), 6);
    }

    #[test]
    fn three_qubit_ket_dims() {
        let ghz3 = ghz(3).unwrap();
        let w3 = w_state(3).unwrap();
        assert_eq!(ket_orbit_dim(&ghz3, GroupKind::GL), 16);
        assert_eq!(ket_orbit_dim(&ghz3, GroupKind::SL), 14);
        assert_eq!(ket_orbit_dim(&w3, GroupKind::GL), 14);
        assert_eq!(ket_orbit_dim(&w3, GroupKind::SL), 14);
    }

    #[test]
    fn state_dims_match_reference_values() {
        assert_eq!(state_orbit_dim(&ghz(3).unwrap(), GroupKind::GL), 14);
        assert_eq!(state_orbit_dim(&bell(), GroupKind::GL), 6);
        assert_eq!(state_orbit_dim(&bell(), GroupKind::SL), 6);
        assert_eq!(
            state_orbit_dim(&PureKet::basis(4, 0).unwrap(), GroupKind::GL),
            8
        );
    }

    #[test]
    fn witness_detects_ghz_type_entanglement() {
        assert_eq!(witness_w1(&bell()), 2);
        assert_eq!(witness_w1(&PureKet::basis(2, 0).unwrap()), 0);
        assert_eq!(witness_w1(&ghz(3).unwrap()), 2);
        assert_eq!(witness_w1(&w_state(3).unwrap()), 0);
        assert_eq!(witness_w1(&PureKet::basis(3, 0).unwrap()), 0);
    }

    #[test]
    fn identity_ilo_fixes_kets() {
        let ket = corpus("C4").unwrap().ket;
        assert_eq!(Ilo::identity(4).apply(&ket).unwrap(), ket);
    }

    #[test]
    fn permutation_factor_flips_a_qubit() {
        let g = GaussianRational::from_integers;
        let swap = [[g(0, 0), g(1, 0)], [g(1, 0), g(0, 0)]];
        let id = [[g(1, 0), g(0, 0)], [g(0, 0), g(1, 0)]];
        let ilo = Ilo::new(vec![swap, id]).unwrap();
        let moved = ilo.apply(&PureKet::basis(2, 0).unwrap()).unwrap();
        assert_eq!(moved, PureKet::basis(2, 2).unwrap());
    }

    #[test]
    fn singular_factor_is_rejected() {
        let g = GaussianRational::from_integers;
        let singular = [[g(1, 0), g(1, 0)], [g(1, 0), g(1, 0)]];
        assert!(matches!(
            Ilo::new(vec![singular]),
            Err(OrbitError::SingularFactor { index: 0 })
        ));
    }

    #[test]
    fn random_ilo_is_deterministic_per_seed() {
        let draw = || {
            let mut rng = ChaCha8Rng::seed_from_u64(42);
            Ilo::random(3, &mut rng, 9).unwrap()
        };
        let a = draw();
        let b = draw();
        for (fa, fb) in a.factors().iter().zip(b.factors()) {
            assert_eq!(fa, fb);
        }
    }

    #[test]
    fn orbit_dimension_is_ilo_invariant() {
        let ghz3 = ghz(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let ilo = Ilo::random(3, &mut rng, 9).unwrap();
        let moved = ilo.apply(&ghz3).unwrap();
        assert_eq!(ket_orbit_dim(&moved, GroupKind::GL), 16);
        assert_eq!(state_orbit_dim(&moved, GroupKind::GL), 14);
    }

    #[test]
    fn principal_orbit_dimensions() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let p = principal_u2_dim(&ghz(3).unwrap(), 5, &mut rng, 9).unwrap();
        assert_eq!(p.d2, 9);
        assert!(p.warning.is_none(), "trials should agree: {:?}", p.trial_values());

        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert_eq!(principal_u2_dim(&bell(), 5, &mut rng, 9).unwrap().d2, 5);

        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let product = PureKet::basis(2, 0).unwrap();
        assert_eq!(principal_u2_dim(&product, 5, &mut rng, 9).unwrap().d2, 4);
    }

    #[test]
    fn sub_principal_trial_attaches_a_warning() {
        // With entry bound 1 a random ILO occasionally degenerates enough to
        // land in a sub-principal orbit; the maximum still wins and the
        // disagreement is surfaced.
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let p = principal_u2_dim(&ghz(3).unwrap(), 5, &mut rng, 1).unwrap();
        assert_eq!(p.trial_values(), vec![8, 9, 9, 9, 9]);
        assert_eq!(p.d2, 9);
        assert!(p.warning.is_some());
    }

    #[test]
    fn class_dimensions_for_four_qubit_families() {
        let cases = [("W4", (16, 12, 4)), ("A-GHZ", (16, 11, 5)), ("GHZ4", (18, 12, 6))];
        for (name, (d1, d2, d3)) in cases {
            let ket = corpus(name).unwrap().ket;
            let mut rng = ChaCha8Rng::seed_from_u64(0);
            let dims = class_dimensions(&ket, 5, &mut rng, 9).unwrap();
            assert_eq!((dims.d1, dims.d2, dims.d3), (d1, d2, d3), "class {name}");
            assert_eq!(dims.trial_values.len(), 5);
        }
    }

    #[test]
    fn generic_kets_land_in_the_largest_class() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let (_, d1) = generic_state_d1(4, &mut rng, 9).unwrap();
        assert_eq!(d1, 24);

        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let (_, d1) = generic_state_d1(2, &mut rng, 9).unwrap();
        assert_eq!(d1, 6);

        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let (_, d1) = generic_state_d1(3, &mut rng, 9).unwrap();
        assert_eq!(d1, 14);
    }
}
