//! The catalog of named states used by the report tables: one- through
//! four-qubit class representatives with their reference dimensions, plus
//! GHZ(n) and W(n) generators for arbitrary qubit counts.

use crate::error::StateError;
use crate::ket::{label_to_index, PureKet};
use crate::scalar::GaussianRational;

/// Reference class dimensions `(D1, D2, D3)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExpectedDims {
    pub d1: usize,
    pub d2: usize,
    pub d3: usize,
}

/// Reference ket-space orbit dimensions under GL and SL.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExpectedKetDims {
    pub gl: usize,
    pub sl: usize,
}

/// A cataloged state: representative ket plus whatever reference values
/// exist for it.
#[derive(Clone, Debug)]
pub struct NamedState {
    pub name: String,
    pub ket: PureKet,
    pub expected: Option<ExpectedDims>,
    pub expected_ket: Option<ExpectedKetDims>,
}

struct Entry {
    name: &'static str,
    aliases: &'static [&'static str],
    n: u32,
    terms: &'static [(&'static str, i64)],
    expected: Option<(usize, usize, usize)>,
    expected_ket: Option<(usize, usize)>,
}

const CATALOG: &[Entry] = &[
    // One qubit: a single class covering everything.
    Entry {
        name: "A",
        aliases: &["Single"],
        n: 1,
        terms: &[("0", 1)],
        expected: Some((2, 2, 0)),
        expected_ket: Some((4, 4)),
    },
    // Two qubits.
    Entry {
        name: "Entangled",
        aliases: &["Bell", "GHZ2"],
        n: 2,
        terms: &[("00", 1), ("11", 1)],
        expected: Some((6, 5, 1)),
        expected_ket: Some((8, 6)),
    },
    Entry {
        name: "Disentangled",
        aliases: &["A-B", "Product2"],
        n: 2,
        terms: &[("00", 1)],
        expected: Some((4, 4, 0)),
        expected_ket: Some((6, 6)),
    },
    // Three qubits.
    Entry {
        name: "GHZ3",
        aliases: &[],
        n: 3,
        terms: &[("000", 1), ("111", 1)],
        expected: Some((14, 9, 5)),
        expected_ket: Some((16, 14)),
    },
    Entry {
        name: "W3",
        aliases: &[],
        n: 3,
        terms: &[("100", 1), ("010", 1), ("001", 1)],
        expected: Some((12, 9, 3)),
        expected_ket: Some((14, 14)),
    },
    Entry {
        name: "Biseparable",
        aliases: &["Bisep3"],
        n: 3,
        terms: &[("000", 1), ("011", 1)],
        expected: Some((8, 7, 1)),
        expected_ket: Some((10, 10)),
    },
    Entry {
        name: "Product",
        aliases: &["Product3", "A-B-C"],
        n: 3,
        terms: &[("000", 1)],
        expected: Some((6, 6, 0)),
        expected_ket: Some((8, 8)),
    },
    // Four qubits, genuinely entangled classes.
    Entry {
        name: "GHZ4",
        aliases: &[],
        n: 4,
        terms: &[("0000", 1), ("1111", 1)],
        expected: Some((18, 12, 6)),
        expected_ket: None,
    },
    Entry {
        name: "W4",
        aliases: &[],
        n: 4,
        terms: &[("1000", 1), ("0100", 1), ("0010", 1), ("0001", 1)],
        expected: Some((16, 12, 4)),
        expected_ket: None,
    },
    Entry {
        name: "C4",
        aliases: &[],
        n: 4,
        terms: &[
            ("0011", 1),
            ("1100", 1),
            ("0101", 1),
            ("1010", 1),
            ("0110", 1),
            ("1001", 1),
        ],
        expected: Some((22, 12, 10)),
        expected_ket: None,
    },
    Entry {
        name: "kappa4",
        aliases: &["κ4"],
        n: 4,
        terms: &[("0000", 1), ("0011", 1), ("1010", 1), ("1111", -1)],
        expected: Some((22, 12, 10)),
        expected_ket: None,
    },
    Entry {
        name: "E4",
        aliases: &[],
        n: 4,
        terms: &[("0000", 1), ("0101", 1), ("1001", 1), ("1111", -1)],
        expected: Some((22, 12, 10)),
        expected_ket: None,
    },
    Entry {
        name: "L4",
        aliases: &[],
        n: 4,
        terms: &[("0000", 1), ("0011", 1), ("1001", 1), ("1111", -1)],
        expected: Some((22, 12, 10)),
        expected_ket: None,
    },
    Entry {
        name: "H4",
        aliases: &[],
        n: 4,
        terms: &[("0011", 1), ("0110", 1), ("1100", 1)],
        expected: Some((20, 12, 8)),
        expected_ket: None,
    },
    Entry {
        name: "lambda4",
        aliases: &["λ4"],
        n: 4,
        terms: &[("0101", 1), ("0110", 1), ("1010", 1)],
        expected: Some((20, 12, 8)),
        expected_ket: None,
    },
    Entry {
        name: "M4",
        aliases: &[],
        n: 4,
        terms: &[("0011", 1), ("0101", 1), ("1100", 1)],
        expected: Some((20, 12, 8)),
        expected_ket: None,
    },
    Entry {
        name: "pi4",
        aliases: &["π4"],
        n: 4,
        terms: &[
            ("0000", 1),
            ("0011", 1),
            ("0101", 1),
            ("0110", 1),
            ("1010", 1),
            ("1111", 1),
        ],
        expected: Some((20, 12, 8)),
        expected_ket: None,
    },
    Entry {
        name: "theta4",
        aliases: &["θ4"],
        n: 4,
        terms: &[
            ("0000", 1),
            ("0101", 1),
            ("0110", 1),
            ("1010", 1),
            ("1100", 1),
            ("1111", 1),
        ],
        expected: Some((20, 12, 8)),
        expected_ket: None,
    },
    Entry {
        name: "sigma4",
        aliases: &["σ4"],
        n: 4,
        terms: &[
            ("0000", 1),
            ("0011", 1),
            ("1001", 1),
            ("1010", 1),
            ("1100", 1),
            ("1111", 1),
        ],
        expected: Some((20, 12, 8)),
        expected_ket: None,
    },
    Entry {
        name: "rho4",
        aliases: &["ρ4"],
        n: 4,
        terms: &[
            ("0000", 1),
            ("0011", 1),
            ("0110", 1),
            ("1010", 1),
            ("1100", 1),
            ("1111", 1),
        ],
        expected: Some((20, 12, 8)),
        expected_ket: None,
    },
    Entry {
        name: "xi4",
        aliases: &["ξ4"],
        n: 4,
        terms: &[
            ("0000", 1),
            ("0110", 1),
            ("1001", 1),
            ("1010", 1),
            ("1100", 1),
            ("1111", 1),
        ],
        expected: Some((20, 12, 8)),
        expected_ket: None,
    },
    Entry {
        name: "epsilon4",
        aliases: &["ε4"],
        n: 4,
        terms: &[
            ("0000", 1),
            ("0011", 1),
            ("0110", 1),
            ("1001", 1),
            ("1010", 1),
            ("1111", 1),
        ],
        expected: Some((20, 12, 8)),
        expected_ket: None,
    },
    Entry {
        name: "chi4",
        aliases: &["χ4"],
        n: 4,
        terms: &[
            ("0000", 1),
            ("0011", 1),
            ("0110", 1),
            ("1010", 1),
            ("1100", 1),
            ("1111", -1),
        ],
        expected: Some((24, 12, 12)),
        expected_ket: None,
    },
    Entry {
        name: "psi4",
        aliases: &["ψ4"],
        n: 4,
        terms: &[("0000", 1), ("0101", 1), ("1010", 1), ("1111", -1)],
        expected: Some((20, 12, 8)),
        expected_ket: None,
    },
    Entry {
        name: "phi4",
        aliases: &["ϕ4"],
        n: 4,
        terms: &[("0000", 1), ("0011", 1), ("1100", 1), ("1111", -1)],
        expected: Some((20, 12, 8)),
        expected_ket: None,
    },
    Entry {
        name: "mu4",
        aliases: &["μ4"],
        n: 4,
        terms: &[("0000", 1), ("0110", 1), ("1001", 1), ("1111", -1)],
        expected: Some((20, 12, 8)),
        expected_ket: None,
    },
    Entry {
        name: "varphi4",
        aliases: &["φ4"],
        n: 4,
        terms: &[("0001", 1), ("0110", 1), ("1011", 1)],
        expected: Some((18, 12, 6)),
        expected_ket: None,
    },
    Entry {
        name: "vartheta4",
        aliases: &["ϑ4"],
        n: 4,
        terms: &[("0010", 1), ("0101", 1), ("1011", 1)],
        expected: Some((18, 12, 6)),
        expected_ket: None,
    },
    Entry {
        name: "tau4",
        aliases: &["τ4"],
        n: 4,
        terms: &[("0001", 1), ("0111", 1), ("1010", 1)],
        expected: Some((18, 12, 6)),
        expected_ket: None,
    },
    Entry {
        name: "varrho4",
        aliases: &["ϱ4"],
        n: 4,
        terms: &[("0010", 1), ("0111", 1), ("1001", 1)],
        expected: Some((18, 12, 6)),
        expected_ket: None,
    },
    Entry {
        name: "zeta4",
        aliases: &["ζ4"],
        n: 4,
        terms: &[("0000", 1), ("1011", 1), ("1100", 1)],
        expected: Some((18, 12, 6)),
        expected_ket: None,
    },
    Entry {
        name: "iota4",
        aliases: &["ι4"],
        n: 4,
        terms: &[("0000", 1), ("0011", 1), ("1101", 1)],
        expected: Some((18, 12, 6)),
        expected_ket: None,
    },
    Entry {
        name: "nu4",
        aliases: &["ν4"],
        n: 4,
        terms: &[("0010", 1), ("0101", 1), ("1001", 1), ("1011", 1)],
        expected: Some((20, 12, 8)),
        expected_ket: None,
    },
    Entry {
        name: "omega4",
        aliases: &["ω4"],
        n: 4,
        terms: &[("0000", 1), ("0101", 1), ("1000", 1), ("1110", 1)],
        expected: Some((20, 12, 8)),
        expected_ket: None,
    },
    Entry {
        name: "varpi4",
        aliases: &["ϖ4"],
        n: 4,
        terms: &[("0010", 1), ("0101", 1), ("1000", 1), ("1100", 1)],
        expected: Some((20, 12, 8)),
        expected_ket: None,
    },
    // Four qubits, non-genuine separability types.
    Entry {
        name: "A-B-C-D",
        aliases: &[],
        n: 4,
        terms: &[("0000", 1)],
        expected: Some((8, 8, 0)),
        expected_ket: None,
    },
    Entry {
        name: "A-B-CD",
        aliases: &[],
        n: 4,
        terms: &[("0000", 1), ("0011", 1)],
        expected: Some((10, 9, 1)),
        expected_ket: None,
    },
    Entry {
        name: "AB-CD",
        aliases: &[],
        n: 4,
        terms: &[("0000", 1), ("0011", 1), ("1100", 1), ("1111", 1)],
        expected: Some((12, 10, 2)),
        expected_ket: None,
    },
    Entry {
        name: "A-GHZ",
        aliases: &[],
        n: 4,
        terms: &[("0000", 1), ("0111", 1)],
        expected: Some((16, 11, 5)),
        expected_ket: None,
    },
    Entry {
        name: "A-W",
        aliases: &[],
        n: 4,
        terms: &[("0100", 1), ("0010", 1), ("0001", 1)],
        expected: Some((14, 11, 3)),
        expected_ket: None,
    },
];

fn build(entry: &Entry) -> NamedState {
    let terms: Vec<(usize, GaussianRational)> = entry
        .terms
        .iter()
        .map(|(label, sign)| {
            let index = label_to_index(entry.n, label).expect("catalog labels are valid");
            (index, GaussianRational::from_integers(*sign, 0))
        })
        .collect();
    NamedState {
        name: entry.name.to_owned(),
        ket: PureKet::from_terms(entry.n, &terms).expect("catalog kets are nonzero"),
        expected: entry
            .expected
            .map(|(d1, d2, d3)| ExpectedDims { d1, d2, d3 }),
        expected_ket: entry.expected_ket.map(|(gl, sl)| ExpectedKetDims { gl, sl }),
    }
}

/// `|0…0⟩ + |1…1⟩` on n qubits.
pub fn ghz(n: u32) -> Result<PureKet, StateError> {
    let one = GaussianRational::one;
    PureKet::from_terms(n, &[(0, one()), ((1usize << n) - 1, one())])
}

/// Equal superposition of the n single-excitation basis kets.
pub fn w_state(n: u32) -> Result<PureKet, StateError> {
    let terms: Vec<(usize, GaussianRational)> = (0..n)
        .map(|k| (1usize << (n - 1 - k), GaussianRational::one()))
        .collect();
    PureKet::from_terms(n, &terms)
}

/// Looks up a state by name. Catalog names and aliases match first
/// (exactly, then case-insensitively); `GHZ<n>` and `W<n>` build the
/// generic family members for counts not in the catalog.
pub fn corpus(name: &str) -> Result<NamedState, StateError> {
    for entry in CATALOG {
        if entry.name == name || entry.aliases.contains(&name) {
            return Ok(build(entry));
        }
    }
    let lower = name.to_lowercase();
    for entry in CATALOG {
        if entry.name.to_lowercase() == lower
            || entry.aliases.iter().any(|a| a.to_lowercase() == lower)
        {
            return Ok(build(entry));
        }
    }
    if let Some(rest) = lower.strip_prefix("ghz") {
        if let Ok(n) = rest.parse::<u32>() {
            if n >= 1 {
                return Ok(NamedState {
                    name: format!("GHZ{n}"),
                    ket: ghz(n)?,
                    expected: None,
                    expected_ket: None,
                });
            }
        }
    }
    if let Some(rest) = lower.strip_prefix('w') {
        if let Ok(n) = rest.parse::<u32>() {
            if n >= 1 {
                return Ok(NamedState {
                    name: format!("W{n}"),
                    ket: w_state(n)?,
                    expected: None,
                    expected_ket: None,
                });
            }
        }
    }
    Err(StateError::UnknownName {
        name: name.to_owned(),
    })
}

/// All catalog rows for a given qubit count, in table order. For n ≥ 5 the
/// rows are the GHZ(n) and W(n) predictions, which have no reference values.
pub fn corpus_for_n(n: u32) -> Result<Vec<NamedState>, StateError> {
    if n == 0 {
        return Err(StateError::InvalidQubitCount);
    }
    if n <= 4 {
        return Ok(CATALOG.iter().filter(|e| e.n == n).map(build).collect());
    }
    Ok(vec![
        NamedState {
            name: format!("GHZ{n}"),
            ket: ghz(n)?,
            expected: None,
            expected_ket: None,
        },
        NamedState {
            name: format!("W{n}"),
            ket: w_state(n)?,
            expected: None,
            expected_ket: None,
        },
    ])
}

/// Every catalog entry with reference data (n = 1 through 4).
pub fn all_corpus() -> Vec<NamedState> {
    CATALOG.iter().map(build).collect()
}

/// The entanglement-type label that a principal-orbit dimension corresponds
/// to for small qubit counts.
pub fn ladder_label(n: u32, d2: usize) -> Option<&'static str> {
    match (n, d2) {
        (1, 2) => Some("single qubit"),
        (2, 5) => Some("entangled"),
        (2, 4) => Some("disentangled"),
        (3, 9) => Some("genuine"),
        (3, 7) => Some("biseparable"),
        (3, 6) => Some("product"),
        (4, 12) => Some("genuine"),
        (4, 11) => Some("A-BCD"),
        (4, 10) => Some("AB-CD"),
        (4, 9) => Some("A-B-CD"),
        (4, 8) => Some("A-B-C-D"),
        _ => None,
    }
}
