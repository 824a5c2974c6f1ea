//! On-disk state files.
//!
//! Schema: `{"n": <int>, "terms": [{"basis": "<binary>", "re": "<p/q>",
//! "im": "<p/q>"}, ...]}`. Omitted basis labels mean amplitude zero;
//! duplicate labels are rejected.

use std::str::FromStr;

use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::StateError;
use crate::ket::{label_to_index, PureKet};
use crate::scalar::GaussianRational;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StateFile {
    pub n: u32,
    pub terms: Vec<StateTerm>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StateTerm {
    pub basis: String,
    pub re: String,
    pub im: String,
}

fn parse_rational(text: &str) -> Result<BigRational, StateError> {
    BigRational::from_str(text).map_err(|_| StateError::BadRational {
        text: text.to_owned(),
    })
}

/// Builds the exact ket described by an already-deserialized state file.
pub fn ket_from_file(file: &StateFile) -> Result<PureKet, StateError> {
    if file.n == 0 {
        return Err(StateError::InvalidQubitCount);
    }
    let len = 1usize << file.n;
    let mut amps = vec![GaussianRational::zero(); len];
    let mut seen = vec![false; len];
    for term in &file.terms {
        let index = label_to_index(file.n, &term.basis)?;
        if seen[index] {
            return Err(StateError::DuplicateIndex {
                label: term.basis.clone(),
            });
        }
        seen[index] = true;
        amps[index] = GaussianRational::new(parse_rational(&term.re)?, parse_rational(&term.im)?);
    }
    PureKet::new(file.n, amps)
}

/// Parses a JSON state document into an exact ket.
pub fn parse_state(text: &str) -> Result<PureKet, StateError> {
    let file: StateFile = serde_json::from_str(text)?;
    ket_from_file(&file)
}

/// The state-file form of a ket; only nonzero amplitudes are listed, in
/// ascending basis order.
pub fn state_to_file(ket: &PureKet) -> StateFile {
    let terms = ket
        .support()
        .into_iter()
        .map(|j| {
            let amp = ket.amp(j);
            StateTerm {
                basis: ket.basis_label(j),
                re: render_rational(amp.re()),
                im: render_rational(amp.im()),
            }
        })
        .collect();
    StateFile { n: ket.n(), terms }
}

/// Serializes a ket to its JSON state document.
pub fn serialize_state(ket: &PureKet) -> String {
    serde_json::to_string(&state_to_file(ket)).expect("state files serialize infallibly")
}

fn render_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_ghz2_document() {
        let text = r#"{"n":2, "terms":[{"basis":"00","re":"1","im":"0"},{"basis":"11","re":"1","im":"0"}]}"#;
        let ket = parse_state(text).unwrap();
        assert_eq!(ket.n(), 2);
        assert_eq!(ket.amp(0), &GaussianRational::one());
        assert_eq!(ket.amp(3), &GaussianRational::one());
        assert!(ket.amp(1).is_zero() && ket.amp(2).is_zero());
    }

    #[test]
    fn empty_terms_is_zero_ket() {
        let text = r#"{"n":1, "terms":[]}"#;
        assert!(matches!(parse_state(text), Err(StateError::ZeroKet)));
    }

    #[test]
    fn rational_amplitudes_parse_exactly() {
        let text = r#"{"n":3, "terms":[{"basis":"000","re":"1/2","im":"-1/3"}]}"#;
        let ket = parse_state(text).unwrap();
        let expected = GaussianRational::new(
            BigRational::new(1.into(), 2.into()),
            BigRational::new((-1).into(), 3.into()),
        );
        assert_eq!(ket.amp(0), &expected);
    }

    #[test]
    fn error_cases() {
        let bad_label = r#"{"n":2, "terms":[{"basis":"012","re":"1","im":"0"}]}"#;
        assert!(matches!(parse_state(bad_label), Err(StateError::BadIndex { .. })));

        let short_label = r#"{"n":3, "terms":[{"basis":"01","re":"1","im":"0"}]}"#;
        assert!(matches!(parse_state(short_label), Err(StateError::BadIndex { .. })));

        let bad_rational = r#"{"n":1, "terms":[{"basis":"0","re":"1//2","im":"0"}]}"#;
        assert!(matches!(parse_state(bad_rational), Err(StateError::BadRational { .. })));

        let zero_denominator = r#"{"n":1, "terms":[{"basis":"0","re":"1/0","im":"0"}]}"#;
        assert!(matches!(parse_state(zero_denominator), Err(StateError::BadRational { .. })));

        let duplicate = r#"{"n":1, "terms":[{"basis":"0","re":"1","im":"0"},{"basis":"0","re":"2","im":"0"}]}"#;
        assert!(matches!(parse_state(duplicate), Err(StateError::DuplicateIndex { .. })));

        let not_json = "nope";
        assert!(matches!(parse_state(not_json), Err(StateError::Json(_))));
    }

    #[test]
    fn round_trip_preserves_the_ket() {
        let text = r#"{"n":2, "terms":[{"basis":"01","re":"-3/7","im":"2"},{"basis":"10","re":"0","im":"1/2"}]}"#;
        let ket = parse_state(text).unwrap();
        let round = parse_state(&serialize_state(&ket)).unwrap();
        assert_eq!(round, ket);
    }
}
