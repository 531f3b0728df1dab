//! Compares complete labellings with the 3-valued models of the encoding.

use std::collections::BTreeSet;
use std::fmt;

use crate::encoder::encode;
use crate::error::Result;
use crate::framework::Framework;
use crate::logic::{check_cap, enumerate_models3_over};
use crate::semantics::{enumerate_complete, Labelling3};
use crate::text_io::{write_labellings, LabelMode};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    /// Labellings found by both sides.
    pub shared: usize,
    pub only_complete: Vec<Labelling3>,
    pub only_models: Vec<Labelling3>,
}

impl EquivalenceReport {
    pub fn passed(&self) -> bool {
        self.only_complete.is_empty() && self.only_models.is_empty()
    }
}

impl fmt::Display for EquivalenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            let noun = if self.shared == 1 { "labelling" } else { "labellings" };
            return write!(f, "PASS complete≡PL3 models ({} {noun})", self.shared);
        }
        write!(
            f,
            "FAIL complete≢PL3 models ({} shared, {} complete only, {} models only)",
            self.shared,
            self.only_complete.len(),
            self.only_models.len()
        )?;
        for (tag, set) in [("complete only", &self.only_complete), ("models only", &self.only_models)] {
            for line in write_labellings(set, LabelMode::ThreeValued).map_err(|_| fmt::Error)?.lines() {
                write!(f, "\n{tag}: {line}")?;
            }
        }
        Ok(())
    }
}

/// Runs both enumerations and reports their symmetric difference.
pub fn check_equivalence(framework: &Framework, cap: u128) -> Result<EquivalenceReport> {
    check_equivalence_with(framework, cap, enumerate_complete)
}

/// Like [`check_equivalence`] with a replaceable complete-semantics side.
pub fn check_equivalence_with(
    framework: &Framework,
    cap: u128,
    oracle: impl Fn(&Framework, u128) -> Result<Vec<Labelling3>>,
) -> Result<EquivalenceReport> {
    let encoded = encode(framework)?;
    check_cap(encoded.variables.len(), cap)?;
    let complete: BTreeSet<Labelling3> = oracle(framework, cap)?.into_iter().collect();
    let models: BTreeSet<Labelling3> = enumerate_models3_over(&encoded.formula, &encoded.variables, cap)?.into_iter().collect();
    Ok(EquivalenceReport {
        shared: complete.intersection(&models).count(),
        only_complete: complete.difference(&models).cloned().collect(),
        only_models: models.difference(&complete).cloned().collect(),
    })
}
