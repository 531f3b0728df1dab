//! Complete labellings, checked straight from the per-kind case definitions.
//!
//! Nothing here goes through formulas: this module is the oracle the encoder
//! and the equational systems are compared against.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::framework::{ElementId, Framework, FrameworkKind, Layout};
use crate::logic::{check_cap, for_each_point, Truth3};

pub type Labelling3 = BTreeMap<ElementId, Truth3>;

use Truth3::{Half, One, Zero};

/// Which of the three case conditions hold for one element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Cases {
    pub one: bool,
    pub zero: bool,
    pub half: bool,
}

impl Cases {
    fn admits(self, value: Truth3) -> bool {
        (value == One) == self.one && (value == Zero) == self.zero && (value == Half) == self.half
    }
}

/// HLAF (and DAF): pairs of attacking argument and attack value.
fn hlaf_cases(pairs: &[(Truth3, Truth3)]) -> Cases {
    let defeated = |&(a, r): &(Truth3, Truth3)| a == Zero || r == Zero;
    let undecided = |&(a, r): &(Truth3, Truth3)| matches!((a, r), (One, Half) | (Half, One) | (Half, Half));
    Cases {
        one: pairs.is_empty() || pairs.iter().all(defeated),
        zero: pairs.iter().any(|&(a, r)| a == One && r == One),
        half: pairs.iter().all(|p| defeated(p) || undecided(p)) && pairs.iter().any(undecided),
    }
}

/// BHAF: like HLAF, but the imaginary pair (⊥ = 0, arrow = 1) is always
/// present and ½ is the remaining case.
fn bhaf_cases(pairs: &[(Truth3, Truth3)]) -> Cases {
    let all = pairs.iter().copied().chain(std::iter::once((Zero, One)));
    let one = all.clone().all(|(a, r)| a == Zero || r == Zero);
    let zero = all.clone().any(|(a, r)| a == One && r == One);
    Cases { one, zero, half: !one && !zero }
}

/// SETAF: source sets of argument values.
fn setaf_cases(sets: &[Vec<Truth3>]) -> Cases {
    let one = sets.is_empty() || sets.iter().all(|s| s.contains(&Zero));
    let zero = sets.iter().any(|s| s.iter().all(|&b| b == One));
    Cases { one, zero, half: !one && !zero }
}

/// HSAF: (attack value, source values) per set attacker, plus ({⊥}, β).
fn hsaf_cases(attackers: &[(Truth3, Vec<Truth3>)]) -> Cases {
    let bottom = (One, vec![Zero]);
    let all = attackers.iter().chain(std::iter::once(&bottom));
    let one = all.clone().all(|(r, s)| s.contains(&Zero) || *r == Zero);
    let zero = all.clone().any(|(r, s)| s.iter().all(|&b| b == One) && *r == One);
    Cases { one, zero, half: !one && !zero }
}

pub(crate) fn cases_at(kind: FrameworkKind, layout: &Layout, values: &[Truth3], beta: usize) -> Cases {
    let attackers = &layout.attackers[beta];
    let label = |i: Option<usize>| values[i.expect("attacks are labellable for this kind")];
    match kind {
        FrameworkKind::Daf | FrameworkKind::Hlaf | FrameworkKind::Bhaf => {
            let pairs: Vec<(Truth3, Truth3)> = attackers.iter().map(|a| (values[a.sources[0]], label(a.label))).collect();
            if kind == FrameworkKind::Bhaf {
                bhaf_cases(&pairs)
            } else {
                hlaf_cases(&pairs)
            }
        }
        FrameworkKind::Setaf => {
            let sets: Vec<Vec<Truth3>> =
                attackers.iter().map(|a| a.sources.iter().map(|&s| values[s]).collect()).collect();
            setaf_cases(&sets)
        }
        FrameworkKind::Hsaf => {
            let sets: Vec<(Truth3, Vec<Truth3>)> = attackers
                .iter()
                .map(|a| (label(a.label), a.sources.iter().map(|&s| values[s]).collect()))
                .collect();
            hsaf_cases(&sets)
        }
    }
}

pub(crate) fn is_complete_point(kind: FrameworkKind, layout: &Layout, values: &[Truth3]) -> bool {
    (0..layout.len()).all(|beta| cases_at(kind, layout, values, beta).admits(values[beta]))
}

/// Orders a labelling by the layout, rejecting missing or foreign elements.
pub(crate) fn point_of(layout: &Layout, labelling: &Labelling3) -> Result<Vec<Truth3>> {
    if let Some(extra) = labelling.keys().find(|k| layout.position(k).is_none()) {
        return Err(Error::NotLabellable(extra.clone()));
    }
    layout
        .elements
        .iter()
        .map(|e| labelling.get(e).copied().ok_or_else(|| Error::Partial(e.clone())))
        .collect()
}

pub(crate) fn labelling_of(layout: &Layout, values: &[Truth3]) -> Labelling3 {
    layout.elements.iter().cloned().zip(values.iter().copied()).collect()
}

/// Whether `labelling` is a complete labelling of `framework`.
pub fn check_complete(framework: &Framework, labelling: &Labelling3) -> Result<bool> {
    let layout = framework.layout()?;
    let values = point_of(&layout, labelling)?;
    Ok(is_complete_point(framework.kind(), &layout, &values))
}

/// Every complete labelling, in lexicographic order over the canonical
/// element order with 0 < ½ < 1.
pub fn enumerate_complete(framework: &Framework, cap: u128) -> Result<Vec<Labelling3>> {
    let layout = framework.layout()?;
    check_cap(layout.len(), cap)?;
    let kind = framework.kind();
    let mut out = Vec::new();
    for_each_point(layout.len(), |values| {
        if is_complete_point(kind, &layout, values) {
            out.push(labelling_of(&layout, values));
        }
    });
    Ok(out)
}
