//! On-disk family specification: the JSON schema accepted by `rudin corank`.
//!
//! The file mirrors the mathematical data exactly — one multiplicity profile
//! per (variable, prime) pair — plus a `monotone` declaration per variable
//! that the monotone route uses to pick its partition. Unknown fields are
//! rejected so that typos fail loudly instead of silently changing the family.

use rudin_core::{DiscPoint, MultiplicityProfile, RudinFamily, Window};
use serde::{Deserialize, Serialize};

/// Root object of a family specification file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct FamilySpecFile {
    /// Number of variables; must match `variables.len()`.
    pub n: usize,
    pub window: WindowSpec,
    pub variables: Vec<VariableSpec>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct WindowSpec {
    pub k_min: i64,
    pub k_max: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct VariableSpec {
    /// Declared direction, consumed by `--method monotone`. The general
    /// route ignores it.
    pub monotone: MonotoneDeclaration,
    pub primes: Vec<PrimeSpec>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonotoneDeclaration {
    Increasing,
    Decreasing,
    None,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct PrimeSpec {
    pub re: f64,
    pub im: f64,
    pub profile: ProfileSpec,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct ProfileSpec {
    pub left_tail: u32,
    /// One multiplicity per window index, `kMin..=kMax` in order.
    pub window: Vec<u32>,
    pub right_tail: u32,
}

impl FamilySpecFile {
    /// Parses a spec from JSON text. Errors carry the JSON path to the
    /// offending field plus the line/column from the underlying parser.
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut de = serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(&mut de).map_err(|err| {
            let path = err.path().to_string();
            let inner = err.into_inner();
            if path == "." {
                format!("{inner}")
            } else {
                format!("at {path}: {inner}")
            }
        })
    }

    /// Builds the validated core family. Returns the family together with
    /// the indices of the variables declared `increasing` (the partition
    /// handed to the monotone route).
    pub fn to_family(&self) -> Result<(RudinFamily, Vec<usize>), String> {
        if self.n != self.variables.len() {
            return Err(format!(
                "n is {} but {} variables are given",
                self.n,
                self.variables.len()
            ));
        }
        let window =
            Window::new(self.window.k_min, self.window.k_max).map_err(|e| e.to_string())?;
        let mut variables = Vec::with_capacity(self.variables.len());
        for (i, var) in self.variables.iter().enumerate() {
            let mut primes = Vec::with_capacity(var.primes.len());
            for (j, prime) in var.primes.iter().enumerate() {
                let point = DiscPoint::new(prime.re, prime.im)
                    .map_err(|e| format!("variables[{i}].primes[{j}]: {e}"))?;
                let profile = MultiplicityProfile::new(
                    prime.profile.left_tail,
                    prime.profile.window.clone(),
                    prime.profile.right_tail,
                );
                primes.push((point, profile));
            }
            variables.push(primes);
        }
        let family = RudinFamily::new(window, variables).map_err(|e| e.to_string())?;
        let increasing = self
            .variables
            .iter()
            .enumerate()
            .filter(|(_, v)| v.monotone == MonotoneDeclaration::Increasing)
            .map(|(i, _)| i)
            .collect();
        Ok((family, increasing))
    }

    /// True when some variable carries no usable declaration, which rules
    /// out the monotone route for the whole file.
    pub fn has_undeclared_variable(&self) -> bool {
        self.variables
            .iter()
            .any(|v| v.monotone == MonotoneDeclaration::None)
    }
}

/// Serializes a core family back into the file schema, attaching the given
/// per-variable declarations. Inverse of [`FamilySpecFile::to_family`] up to
/// prime ordering.
pub fn from_family(family: &RudinFamily, increasing: &[usize]) -> FamilySpecFile {
    let window = family.window();
    let variables = (0..family.n())
        .map(|i| VariableSpec {
            monotone: if increasing.contains(&i) {
                MonotoneDeclaration::Increasing
            } else {
                MonotoneDeclaration::Decreasing
            },
            primes: family
                .variable(i)
                .iter()
                .map(|(point, profile)| PrimeSpec {
                    re: point.re(),
                    im: point.im(),
                    profile: ProfileSpec {
                        left_tail: profile.left_tail(),
                        window: profile.window().to_vec(),
                        right_tail: profile.right_tail(),
                    },
                })
                .collect(),
        })
        .collect();
    FamilySpecFile {
        n: family.n(),
        window: WindowSpec {
            k_min: window.k_min,
            k_max: window.k_max,
        },
        variables,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"{
        "n": 2,
        "window": {"kMin": 0, "kMax": 1},
        "variables": [
            {"monotone": "decreasing",
             "primes": [{"re": 0.5, "im": 0.0,
                         "profile": {"leftTail": 1, "window": [1, 0], "rightTail": 0}}]},
            {"monotone": "increasing",
             "primes": [{"re": -0.4, "im": 0.2,
                         "profile": {"leftTail": 0, "window": [0, 1], "rightTail": 1}}]}
        ]
    }"#;

    #[test]
    fn parses_and_builds() {
        let spec = FamilySpecFile::parse(MINIMAL).unwrap();
        let (family, increasing) = spec.to_family().unwrap();
        assert_eq!(family.n(), 2);
        assert_eq!(increasing, vec![1]);
        assert!(!spec.has_undeclared_variable());
    }

    #[test]
    fn round_trips_through_core() {
        let spec = FamilySpecFile::parse(MINIMAL).unwrap();
        let (family, increasing) = spec.to_family().unwrap();
        let back = from_family(&family, &increasing);
        assert_eq!(back, spec);
    }

    #[test]
    fn unknown_field_is_rejected_with_path() {
        let bad = MINIMAL.replace("\"kMin\"", "\"kMinimum\"");
        let err = FamilySpecFile::parse(&bad).unwrap_err();
        assert!(err.contains("window"), "path missing from: {err}");
    }

    #[test]
    fn syntax_error_reports_position() {
        let err = FamilySpecFile::parse("{\"n\": 2,").unwrap_err();
        assert!(err.contains("line"), "position missing from: {err}");
    }

    #[test]
    fn arity_mismatch_is_rejected() {
        let spec = FamilySpecFile {
            n: 3,
            ..FamilySpecFile::parse(MINIMAL).unwrap()
        };
        assert!(spec.to_family().unwrap_err().contains("variables"));
    }
}
