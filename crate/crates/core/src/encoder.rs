//! Normal encodings of frameworks into propositional formulas.
//!
//! Every labellable element β contributes one conjunct `β <-> inner`, where
//! `inner` conjoins one negated term per attacker of β. The imaginary bottom
//! argument (value 0) and its arrows (value 1) are compiled to constants: an
//! unattacked β gets `inner = !0`, and the arrows that BHAF/HSAF attach to
//! attacked elements contribute the neutral term `!(0 & 1)`, which is dropped.

use crate::error::Result;
use crate::framework::{AttackerRef, ElementId, Framework, FrameworkKind, Layout};
use crate::logic::{Formula, Truth3};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodedFrame {
    pub formula: Formula,
    /// The labellable elements, in canonical order.
    pub variables: Vec<ElementId>,
    pub kind: FrameworkKind,
}

/// The normal encoding of `framework` according to its kind.
pub fn encode(framework: &Framework) -> Result<EncodedFrame> {
    build(framework, false)
}

/// Like [`encode`], but keeps an explicit imaginary-arrow term `!(0 & 1)` in
/// the inner conjunction of every attacked element.
pub fn encode_with_imaginary_arrows(framework: &Framework) -> Result<EncodedFrame> {
    build(framework, true)
}

fn build(framework: &Framework, explicit_arrows: bool) -> Result<EncodedFrame> {
    let layout = framework.layout()?;
    let kind = framework.kind();
    let conjuncts: Vec<Formula> = (0..layout.len())
        .map(|beta| {
            let mut terms: Vec<Formula> =
                layout.attackers[beta].iter().map(|atk| attacker_term(kind, &layout, atk)).collect();
            let inner = if terms.is_empty() {
                Formula::neg(Formula::Const(Truth3::Zero))
            } else {
                if explicit_arrows {
                    terms.push(imaginary_arrow_term());
                }
                single_or_and(terms)
            };
            Formula::iff(Formula::var(layout.elements[beta].clone()), inner)
        })
        .collect();
    let formula = if conjuncts.is_empty() {
        Formula::Const(Truth3::One)
    } else {
        single_or_and(conjuncts)
    };
    Ok(EncodedFrame { formula, variables: layout.elements, kind })
}

/// The term contributed by the imaginary arrow (⊥, β): `!(0 & 1)`.
pub fn imaginary_arrow_term() -> Formula {
    Formula::neg(Formula::and(vec![Formula::Const(Truth3::Zero), Formula::Const(Truth3::One)]))
}

fn attacker_term(kind: FrameworkKind, layout: &Layout, atk: &AttackerRef) -> Formula {
    let var = |i: usize| Formula::var(layout.elements[i].clone());
    let sources = atk.sources.iter().map(|&i| var(i));
    let members: Vec<Formula> = match (kind, atk.label) {
        (FrameworkKind::Setaf, _) | (_, None) => sources.collect(),
        // The attack variable leads for set attackers.
        (FrameworkKind::Hsaf, Some(label)) => std::iter::once(var(label)).chain(sources).collect(),
        (_, Some(label)) => sources.chain(std::iter::once(var(label))).collect(),
    };
    Formula::neg(single_or_and(members))
}

fn single_or_and(mut items: Vec<Formula>) -> Formula {
    if items.len() == 1 {
        items.pop().expect("one item")
    } else {
        Formula::and(items)
    }
}
