//! Rewriting higher-order frameworks as SETAFs over arguments and attack names.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::framework::{Attack, ElementId, Framework, FrameworkKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformResult {
    pub setaf: Framework,
    /// Original labellable element to SETAF argument; the identity on names.
    pub mapping: BTreeMap<ElementId, ElementId>,
}

/// Turns every attack into an argument of the same name and every attack
/// (S, β) into the set attacker S ∪ {attack} of β.
///
/// The new SETAF attacks need names of their own; each one is the attack name
/// with a `_s` suffix, extended until it is unused. A SETAF input is returned
/// unchanged.
pub fn to_setaf(framework: &Framework) -> Result<TransformResult> {
    framework.ensure_valid()?;
    let labellable = framework.labellable();
    let mapping = labellable.iter().map(|e| (e.clone(), e.clone())).collect();
    if framework.kind() == FrameworkKind::Setaf {
        return Ok(TransformResult { setaf: framework.clone(), mapping });
    }

    let mut taken: std::collections::HashSet<String> = labellable.iter().map(|e| e.as_str().to_string()).collect();
    let attacks: Vec<Attack> = framework
        .attacks()
        .iter()
        .map(|atk| {
            let mut name = format!("{}_s", atk.id);
            while taken.contains(&name) {
                name.push('_');
            }
            taken.insert(name.clone());
            let id = ElementId::new(name).expect("suffixing keeps identifiers valid");
            Attack::new(id, atk.source.iter().cloned().chain(std::iter::once(atk.id.clone())), atk.target.clone())
        })
        .collect();
    let setaf = Framework::new(FrameworkKind::Setaf, labellable, attacks);
    setaf.ensure_valid()?;
    Ok(TransformResult { setaf, mapping })
}
