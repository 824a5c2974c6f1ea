//! n-qubit pure kets and their realification.
//!
//! A ket over n qubits is a vector of 2ⁿ exact complex amplitudes. The basis
//! label `i₁…iₙ` maps to the amplitude index `Σ iₖ·2^(n−k)`, i.e. qubit 1 is
//! the most significant bit. Realification identifies ℂ^(2ⁿ) with ℝ^(2^(n+1))
//! by interleaving real and imaginary parts amplitude by amplitude.

use std::fmt;

use num_rational::BigRational;


use crate::error::StateError;
use crate::scalar::GaussianRational;

/// A nonzero, unnormalized n-qubit ket with exact amplitudes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PureKet {
    n: u32,
    amps: Vec<GaussianRational>,
}

impl PureKet {
    /// Builds a ket from its full amplitude vector of length 2ⁿ.
    pub fn new(n: u32, amps: Vec<GaussianRational>) -> Result<Self, StateError> {
        if n == 0 {
            return Err(StateError::InvalidQubitCount);
        }
        let expected = 1usize << n;
        if amps.len() != expected {
            return Err(StateError::BadLength {
                expected,
                got: amps.len(),
            });
        }
        if amps.iter().all(GaussianRational::is_zero) {
            return Err(StateError::ZeroKet);
        }
        Ok(Self { n, amps })
    }

    /// Builds a ket from sparse `(amplitude index, value)` terms.
    pub fn from_terms(n: u32, terms: &[(usize, GaussianRational)]) -> Result<Self, StateError> {
        if n == 0 {
            return Err(StateError::InvalidQubitCount);
        }
        let len = 1usize << n;
        let mut amps = vec![GaussianRational::zero(); len];
        for (index, amp) in terms {
            if *index >= len {
                return Err(StateError::BadIndex {
                    label: format!("{index}"),
                    n,
                });
            }
            amps[*index] = &amps[*index] + amp;
        }
        Self::new(n, amps)
    }

    /// The computational basis ket `|i₁…iₙ⟩` for a given amplitude index.
    pub fn basis(n: u32, index: usize) -> Result<Self, StateError> {
        Self::from_terms(n, &[(index, GaussianRational::one())])
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.amps.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn amps(&self) -> &[GaussianRational] {
        &self.amps
    }

    pub fn amp(&self, index: usize) -> &GaussianRational {
        &self.amps[index]
    }

    /// Multiplies every amplitude by `factor`. The factor must be nonzero so
    /// the result is still a valid ket.
    pub fn scaled(&self, factor: &GaussianRational) -> Result<Self, StateError> {
        if factor.is_zero() {
            return Err(StateError::ZeroKet);
        }
        Ok(Self {
            n: self.n,
            amps: self.amps.iter().map(|a| a * factor).collect(),
        })
    }

    /// Indices of nonzero amplitudes, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.amps
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(j, _)| j)
            .collect()
    }

    /// Renders an amplitude index as its binary basis label `i₁…iₙ`.
    pub fn basis_label(&self, index: usize) -> String {
        index_to_label(self.n, index)
    }
}

pub(crate) fn index_to_label(n: u32, index: usize) -> String {
    (0..n)
        .map(|k| {
            if index >> (n - 1 - k) & 1 == 1 {
                '1'
            } else {
                '0'
            }
        })
        .collect()
}

pub(crate) fn label_to_index(n: u32, label: &str) -> Result<usize, StateError> {
    if label.len() != n as usize {
        return Err(StateError::BadIndex {
            label: label.to_owned(),
            n,
        });
    }
    let mut index = 0usize;
    for c in label.chars() {
        index <<= 1;
        match c {
            '0' => {}
            '1' => index |= 1,
            _ => {
                return Err(StateError::BadIndex {
                    label: label.to_owned(),
                    n,
                })
            }
        }
    }
    Ok(index)
}

impl fmt::Display for PureKet {
    /// Writes the ket as a signed sum of basis terms, e.g. `|00>+|11>`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for j in self.support() {
            let amp = self.amp(j);
            let text = amp.to_string();
            if text == "1" {
                if !first {
                    write!(f, "+")?;
                }
            } else if text == "-1" {
                write!(f, "-")?;
            } else if first {
                write!(f, "({text})")?;
            } else if let Some(magnitude) = text.strip_prefix('-') {
                write!(f, "-({magnitude})")?;
            } else {
                write!(f, "+({text})")?;
            }
            write!(f, "|{}>", self.basis_label(j))?;
            first = false;
        }
        Ok(())
    }
}

/// A realified vector in ℝ^(2^(n+1)): entries `(a₀, b₀, a₁, b₁, …)` where
/// `aⱼ + i·bⱼ` is the j-th amplitude.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealVector {
    entries: Vec<BigRational>,
}

impl RealVector {
    pub(crate) fn from_entries(entries: Vec<BigRational>) -> Self {
        debug_assert!(entries.len().is_power_of_two() && entries.len() >= 4);
        Self { entries }
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn negated(&self) -> Self {
        Self {
            entries: self.entries.iter().map(|e| -e.clone()).collect(),
        }
    }

    pub fn into_entries(self) -> Vec<BigRational> {
        self.entries
    }
}

/// Realifies a ket: `entries[2j] = Re(amps[j])`, `entries[2j+1] = Im(amps[j])`.
pub fn realify(ket: &PureKet) -> RealVector {
    RealVector::from_entries(realify_amps(ket.amps()))
}

/// Realification of a bare amplitude vector; unlike kets, tangent vectors may
/// be zero, so no invariant is enforced here.
pub(crate) fn realify_amps(amps: &[GaussianRational]) -> Vec<BigRational> {
    let mut entries = Vec::with_capacity(amps.len() * 2);
    for a in amps {
        entries.push(a.re().clone());
        entries.push(a.im().clone());
    }
    entries
}

/// Inverse of [`realify`]; fails with `ZeroKet` if every entry is zero.
pub fn derealify(vec: &RealVector) -> Result<PureKet, StateError> {
    let pairs = vec.len() / 2;
    debug_assert!(pairs.is_power_of_two());
    let n = pairs.trailing_zeros();
    let amps = (0..pairs)
        .map(|j| GaussianRational::new(vec.entries[2 * j].clone(), vec.entries[2 * j + 1].clone()))
        .collect();
    PureKet::new(n, amps)
}

/// Realified multiplication by i: per amplitude pair, `(a, b) ↦ (−b, a)`.
pub fn scalar_mul_i(vec: &RealVector) -> RealVector {
    let mut entries = Vec::with_capacity(vec.len());
    for pair in vec.entries.chunks_exact(2) {
        entries.push(-pair[1].clone());
        entries.push(pair[0].clone());
    }
    RealVector::from_entries(entries)
}
