//! Single-qubit Lie-algebra basis matrices, the generator subsets spanning
//! each group's algebra, and tangent matrices of group orbits.
//!
//! A generator acts on qubit k of an n-qubit ket through the index-pair
//! traversal over amplitude indices differing only in bit k; the full
//! 2ⁿ×2ⁿ Kronecker matrix is never materialized.

use std::fmt::Write as _;

use crate::error::LieError;
use crate::ket::{realify_amps, PureKet};
use crate::matrix::RationalMatrix;
use crate::scalar::GaussianRational;

/// A 2×2 complex matrix with exact entries, row-major.
pub type Mat2 = [[GaussianRational; 2]; 2];

/// The eight basis matrices of 𝔤𝔩(2,ℂ) as a real Lie algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    /// [[0, 1], [-1, 0]]
    R,
    /// [[0, i], [i, 0]]
    S,
    /// [[i, 0], [0, -i]]
    T,
    /// [[i, 0], [0, i]]
    E,
    /// [[0, 1], [1, 0]]
    U,
    /// [[0, i], [-i, 0]]
    V,
    /// [[1, 0], [0, -1]]
    W,
    /// [[1, 0], [0, 1]]
    Q,
}

impl GeneratorKind {
    pub const ALL: [GeneratorKind; 8] = [
        Self::R,
        Self::S,
        Self::T,
        Self::E,
        Self::U,
        Self::V,
        Self::W,
        Self::Q,
    ];

    pub fn matrix(self) -> Mat2 {
        let g = GaussianRational::from_integers;
        match self {
            Self::R => [[g(0, 0), g(1, 0)], [g(-1, 0), g(0, 0)]],
            Self::S => [[g(0, 0), g(0, 1)], [g(0, 1), g(0, 0)]],
            Self::T => [[g(0, 1), g(0, 0)], [g(0, 0), g(0, -1)]],
            Self::E => [[g(0, 1), g(0, 0)], [g(0, 0), g(0, 1)]],
            Self::U => [[g(0, 0), g(1, 0)], [g(1, 0), g(0, 0)]],
            Self::V => [[g(0, 0), g(0, 1)], [g(0, -1), g(0, 0)]],
            Self::W => [[g(1, 0), g(0, 0)], [g(0, 0), g(-1, 0)]],
            Self::Q => [[g(1, 0), g(0, 0)], [g(0, 0), g(1, 0)]],
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Self::R => "R",
            Self::S => "S",
            Self::T => "T",
            Self::E => "E",
            Self::U => "U",
            Self::V => "V",
            Self::W => "W",
            Self::Q => "Q",
        }
    }
}

/// One basis matrix tagged with the qubit it acts on (1-based, qubit 1 is
/// the most significant bit of the amplitude index).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub kind: GeneratorKind,
    pub qubit: u32,
}

/// The local group whose orbit is being measured.
#[allow(clippy::upper_case_acronyms)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum GroupKind {
    GL,
    SL,
    U2,
    SU2,
}

impl GroupKind {
    pub const ALL: [GroupKind; 4] = [Self::GL, Self::SL, Self::U2, Self::SU2];

    /// The generator subset spanning this group's Lie algebra, in fixed
    /// column order.
    pub fn generator_kinds(self) -> &'static [GeneratorKind] {
        use GeneratorKind::*;
        match self {
            // Full 𝔤𝔩(2,ℂ).
            Self::GL => &[R, S, T, E, U, V, W, Q],
            // Traceless: the identity-trace coordinates drop out.
            Self::SL => &[R, S, T, U, V, W],
            // Anti-Hermitian.
            Self::U2 => &[R, S, T, E],
            // Anti-Hermitian and traceless.
            Self::SU2 => &[R, S, T],
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Self::GL => "GL",
            Self::SL => "SL",
            Self::U2 => "U2",
            Self::SU2 => "SU2",
        }
    }
}

impl std::fmt::Display for GroupKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

impl std::str::FromStr for GroupKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "GL" | "GL2" | "GL(2,C)" => Ok(Self::GL),
            "SL" | "SL2" | "SL(2,C)" => Ok(Self::SL),
            "U2" | "U(2)" => Ok(Self::U2),
            "SU2" | "SU(2)" => Ok(Self::SU2),
            other => Err(format!("unknown group {other:?}")),
        }
    }
}

/// Applies a 2×2 matrix to one qubit of an amplitude vector by pairing the
/// indices that differ only in that qubit's bit.
pub(crate) fn apply_one_qubit(
    mat: &Mat2,
    qubit: u32,
    n: u32,
    amps: &[GaussianRational],
) -> Vec<GaussianRational> {
    debug_assert!(qubit >= 1 && qubit <= n);
    let mask = 1usize << (n - qubit);
    let mut out = vec![GaussianRational::zero(); amps.len()];
    for j0 in 0..amps.len() {
        if j0 & mask != 0 {
            continue;
        }
        let j1 = j0 | mask;
        let a0 = &amps[j0];
        let a1 = &amps[j1];
        out[j0] = &(&mat[0][0] * a0) + &(&mat[0][1] * a1);
        out[j1] = &(&mat[1][0] * a0) + &(&mat[1][1] * a1);
    }
    out
}

/// The tangent vector `X_kind,qubit · ψ`. The result may be the zero vector,
/// so it is returned as a bare amplitude vector rather than a ket.
pub fn apply_generator(gen: Generator, ket: &PureKet) -> Result<Vec<GaussianRational>, LieError> {
    if gen.qubit == 0 || gen.qubit > ket.n() {
        return Err(LieError::QubitOutOfRange {
            qubit: gen.qubit,
            n: ket.n(),
        });
    }
    Ok(apply_one_qubit(
        &gen.kind.matrix(),
        gen.qubit,
        ket.n(),
        ket.amps(),
    ))
}

/// The matrix whose columns are the realified generator images of a ket.
///
/// Columns are ordered qubit-major, generator-minor in the group's listed
/// order, so the layout is reproducible across runs.
#[derive(Clone, Debug)]
pub struct TangentMatrix {
    matrix: RationalMatrix,
    labels: Vec<Generator>,
    group: GroupKind,
    n: u32,
}

impl TangentMatrix {
    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn labels(&self) -> &[Generator] {
        &self.labels
    }

    pub fn group(&self) -> GroupKind {
        self.group
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Debug dump: one row per real dimension, columns labeled `k:KIND`,
    /// tab-separated.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        let mut header: Vec<String> = Vec::with_capacity(self.labels.len());
        for gen in &self.labels {
            header.push(format!("{}:{}", gen.qubit, gen.kind.label()));
        }
        let _ = writeln!(out, "{}", header.join("\t"));
        for r in 0..self.matrix.rows() {
            let row: Vec<String> = (0..self.matrix.cols())
                .map(|c| self.matrix.entry(r, c).to_string())
                .collect();
            let _ = writeln!(out, "{}", row.join("\t"));
        }
        out
    }
}

/// Builds the tangent matrix of the group orbit through `ket`.
pub fn tangent_matrix(ket: &PureKet, group: GroupKind) -> TangentMatrix {
    let kinds = group.generator_kinds();
    let mut columns = Vec::with_capacity(kinds.len() * ket.n() as usize);
    let mut labels = Vec::with_capacity(columns.capacity());
    for qubit in 1..=ket.n() {
        for &kind in kinds {
            let image = apply_one_qubit(&kind.matrix(), qubit, ket.n(), ket.amps());
            columns.push(realify_amps(&image));
            labels.push(Generator { kind, qubit });
        }
    }
    TangentMatrix {
        matrix: RationalMatrix::from_columns(&columns),
        labels,
        group,
        n: ket.n(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ket::realify;
    use num_rational::BigRational;
    use num_traits::Zero;

    fn g(a: i64, b: i64) -> GaussianRational {
        GaussianRational::from_integers(a, b)
    }

    fn gen(kind: GeneratorKind, qubit: u32) -> Generator {
        Generator { kind, qubit }
    }

    #[test]
    fn diagonal_generators_on_basis_kets() {
        // W|0> = |0>, W|1> = -|1>
        let ket0 = PureKet::basis(1, 0).unwrap();
        let ket1 = PureKet::basis(1, 1).unwrap();
        assert_eq!(
            apply_generator(gen(GeneratorKind::W, 1), &ket0).unwrap(),
            vec![g(1, 0), g(0, 0)]
        );
        assert_eq!(
            apply_generator(gen(GeneratorKind::W, 1), &ket1).unwrap(),
            vec![g(0, 0), g(-1, 0)]
        );
    }

    #[test]
    fn bit_flip_on_most_significant_qubit() {
        // U on qubit 1 of |00> -> |10>
        let ket = PureKet::basis(2, 0).unwrap();
        let image = apply_generator(gen(GeneratorKind::U, 1), &ket).unwrap();
        assert_eq!(image, vec![g(0, 0), g(0, 0), g(1, 0), g(0, 0)]);
    }

    #[test]
    fn phase_generator_on_second_qubit() {
        // T on qubit 2 of |01> -> -i|01>
        let ket = PureKet::basis(2, 1).unwrap();
        let image = apply_generator(gen(GeneratorKind::T, 2), &ket).unwrap();
        assert_eq!(image, vec![g(0, 0), g(0, -1), g(0, 0), g(0, 0)]);
    }

    #[test]
    fn identity_like_generators() {
        // Q_k ψ = ψ and E_k ψ = iψ for every qubit.
        let ket = PureKet::from_terms(3, &[(1, g(2, 1)), (6, g(0, -3))]).unwrap();
        for qubit in 1..=3 {
            let q_image = apply_generator(gen(GeneratorKind::Q, qubit), &ket).unwrap();
            assert_eq!(q_image, ket.amps());
            let e_image = apply_generator(gen(GeneratorKind::E, qubit), &ket).unwrap();
            let expected: Vec<_> = ket.amps().iter().map(GaussianRational::mul_i).collect();
            assert_eq!(e_image, expected);
        }
    }

    #[test]
    fn qubit_out_of_range() {
        let ket = PureKet::basis(2, 0).unwrap();
        assert!(apply_generator(gen(GeneratorKind::R, 3), &ket).is_err());
        assert!(apply_generator(gen(GeneratorKind::R, 0), &ket).is_err());
    }

    #[test]
    fn column_counts_per_group() {
        let ket = PureKet::basis(3, 5).unwrap();
        assert_eq!(tangent_matrix(&ket, GroupKind::GL).matrix().cols(), 24);
        assert_eq!(tangent_matrix(&ket, GroupKind::SL).matrix().cols(), 18);
        assert_eq!(tangent_matrix(&ket, GroupKind::U2).matrix().cols(), 12);
        assert_eq!(tangent_matrix(&ket, GroupKind::SU2).matrix().cols(), 9);
        assert_eq!(tangent_matrix(&ket, GroupKind::GL).matrix().rows(), 16);
    }

    #[test]
    fn su2_columns_of_ground_state() {
        // Columns for |0>: R -> (0,0,-1,0), S -> (0,0,0,1), T -> (0,1,0,0).
        let ket = PureKet::basis(1, 0).unwrap();
        let t = tangent_matrix(&ket, GroupKind::SU2);
        let m = t.matrix();
        let int = |v: i64| BigRational::from_integer(v.into());
        assert_eq!(m.column(0), vec![int(0), int(0), int(-1), int(0)]);
        assert_eq!(m.column(1), vec![int(0), int(0), int(0), int(1)]);
        assert_eq!(m.column(2), vec![int(0), int(1), int(0), int(0)]);
    }

    #[test]
    fn tangent_columns_match_generator_images() {
        let ket = PureKet::from_terms(2, &[(0, g(1, 0)), (3, g(0, 2))]).unwrap();
        let t = tangent_matrix(&ket, GroupKind::SL);
        for (c, gen) in t.labels().iter().enumerate() {
            let image = apply_generator(*gen, &ket).unwrap();
            assert_eq!(t.matrix().column(c), realify_amps(&image));
        }
        // A zero tangent column is legal; the realified ket itself is not zero.
        assert!(!realify(&ket).entries().iter().all(Zero::is_zero));
    }

    #[test]
    fn group_names_parse() {
        assert_eq!("GL".parse::<GroupKind>().unwrap(), GroupKind::GL);
        assert_eq!("su2".parse::<GroupKind>().unwrap(), GroupKind::SU2);
        assert_eq!("U(2)".parse::<GroupKind>().unwrap(), GroupKind::U2);
        assert!("O3".parse::<GroupKind>().is_err());
        assert_eq!(GroupKind::SL.to_string(), "SL");
    }

    #[test]
    fn tsv_dump_has_labeled_columns() {
        let ket = PureKet::basis(1, 0).unwrap();
        let tsv = tangent_matrix(&ket, GroupKind::SU2).to_tsv();
        let mut lines = tsv.lines();
        assert_eq!(lines.next().unwrap(), "1:R\t1:S\t1:T");
        assert_eq!(lines.clone().count(), 4);
        assert_eq!(lines.next().unwrap(), "0\t0\t0");
    }
}
