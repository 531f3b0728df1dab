//! The unified framework model shared by all five kinds.
//!
//! A [`Framework`] is a kind tag, a set of arguments and an ordered table of
//! named attacks. Every attack has a nonempty source set and a single target;
//! the kind decides which elements may appear on either side. Attacks may only
//! reference arguments and attacks declared before them, which keeps the
//! attack hierarchy well founded.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Name of an argument or of an attack.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(String);

impl ElementId {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if is_identifier(&name) {
            Ok(Self(name))
        } else {
            Err(Error::InvalidId(name))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::borrow::Borrow<str> for ElementId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl FromStr for ElementId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(s)
    }
}

/// Shorthand for building ids in tests and examples. Panics on a malformed name.
pub fn id(name: &str) -> ElementId {
    ElementId::new(name).unwrap_or_else(|_| panic!("`{name}` is not a valid identifier"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FrameworkKind {
    Daf,
    Hlaf,
    Bhaf,
    Setaf,
    Hsaf,
}

impl FrameworkKind {
    pub const ALL: [FrameworkKind; 5] = [Self::Daf, Self::Hlaf, Self::Bhaf, Self::Setaf, Self::Hsaf];

    pub fn name(self) -> &'static str {
        match self {
            Self::Daf => "daf",
            Self::Hlaf => "hlaf",
            Self::Bhaf => "bhaf",
            Self::Setaf => "setaf",
            Self::Hsaf => "hsaf",
        }
    }

    /// Whether attacks of this kind carry truth values of their own.
    pub fn labels_attacks(self) -> bool {
        self != Self::Setaf
    }

    fn allows_set_sources(self) -> bool {
        matches!(self, Self::Setaf | Self::Hsaf)
    }
}

impl fmt::Display for FrameworkKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FrameworkKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown framework kind `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Attack {
    pub id: ElementId,
    /// Source members without duplicates. Inside a [`Framework`] they are kept
    /// in canonical order: arguments first, then attacks, each alphabetical.
    pub source: Vec<ElementId>,
    pub target: ElementId,
}

impl Attack {
    pub fn new(id: ElementId, source: impl IntoIterator<Item = ElementId>, target: ElementId) -> Self {
        let source = source.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        Self { id, source, target }
    }

    /// Builds an attack from plain names. Panics on a malformed name.
    pub fn named(attack: &str, source: &[&str], target: &str) -> Self {
        Self::new(id(attack), source.iter().map(|s| id(s)), id(target))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub code: &'static str,
    pub message: String,
    pub ids: Vec<ElementId>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub warnings: Vec<String>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn violation(&mut self, code: &'static str, message: impl Into<String>, ids: Vec<ElementId>) {
        self.violations.push(Violation { code, message: message.into(), ids });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            return f.write_str("ok");
        }
        let parts: Vec<String> = self
            .violations
            .iter()
            .map(|v| {
                let ids: Vec<&str> = v.ids.iter().map(ElementId::as_str).collect();
                format!("[{}] {} ({})", v.code, v.message, ids.join(", "))
            })
            .collect();
        f.write_str(&parts.join("; "))
    }
}

/// One attack on a labellable element, resolved to element positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttackerRef {
    /// Position of the attack in [`Framework::attacks`].
    pub attack: usize,
    /// Position of the attack among the labellable elements, when attacks are labellable.
    pub label: Option<usize>,
    /// Positions of the source members among the labellable elements.
    pub sources: Vec<usize>,
}

/// Labellable elements in canonical order, with each element's attackers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layout {
    pub elements: Vec<ElementId>,
    pub attackers: Vec<Vec<AttackerRef>>,
}

impl Layout {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, id: &ElementId) -> Option<usize> {
        self.elements.iter().position(|e| e == id)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Framework {
    kind: FrameworkKind,
    arguments: BTreeSet<ElementId>,
    attacks: Vec<Attack>,
}

impl Framework {
    /// Assembles a framework without validating it; see [`Framework::validate`].
    pub fn new(
        kind: FrameworkKind,
        arguments: impl IntoIterator<Item = ElementId>,
        attacks: impl IntoIterator<Item = Attack>,
    ) -> Self {
        let arguments: BTreeSet<ElementId> = arguments.into_iter().collect();
        let attacks = attacks
            .into_iter()
            .map(|mut atk| {
                atk.source.sort_by(|a, b| {
                    let rank = |e: &ElementId| !arguments.contains(e);
                    rank(a).cmp(&rank(b)).then_with(|| a.cmp(b))
                });
                atk
            })
            .collect();
        Self { kind, arguments, attacks }
    }

    /// Builds a framework from plain names. Panics on a malformed name.
    pub fn from_names(kind: FrameworkKind, arguments: &[&str], attacks: &[(&str, &[&str], &str)]) -> Self {
        Self::new(
            kind,
            arguments.iter().map(|a| id(a)),
            attacks.iter().map(|(name, source, target)| Attack::named(name, source, target)),
        )
    }

    pub fn kind(&self) -> FrameworkKind {
        self.kind
    }

    pub fn arguments(&self) -> &BTreeSet<ElementId> {
        &self.arguments
    }

    pub fn attacks(&self) -> &[Attack] {
        &self.attacks
    }

    /// The same arguments and attacks under another kind tag.
    pub fn with_kind(&self, kind: FrameworkKind) -> Self {
        Self { kind, ..self.clone() }
    }

    pub fn is_argument(&self, id: &ElementId) -> bool {
        self.arguments.contains(id)
    }

    pub fn attack(&self, id: &ElementId) -> Option<&Attack> {
        self.attacks.iter().find(|a| &a.id == id)
    }

    pub fn attackers_of<'a>(&'a self, target: &'a ElementId) -> impl Iterator<Item = &'a Attack> + 'a {
        self.attacks.iter().filter(move |a| &a.target == target)
    }

    /// Elements that receive a truth value: arguments alphabetically, then
    /// (except for SETAFs) attacks in declaration order.
    pub fn labellable(&self) -> Vec<ElementId> {
        let mut out: Vec<ElementId> = self.arguments.iter().cloned().collect();
        if self.kind.labels_attacks() {
            out.extend(self.attacks.iter().map(|a| a.id.clone()));
        }
        out
    }

    /// Resolves the attack table against the labellable elements.
    ///
    /// Requires a valid framework; returns an error otherwise.
    pub fn layout(&self) -> Result<Layout> {
        self.ensure_valid()?;
        let elements = self.labellable();
        let position: HashMap<&ElementId, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut attackers = vec![Vec::new(); elements.len()];
        for (index, atk) in self.attacks.iter().enumerate() {
            let target = position[&atk.target];
            attackers[target].push(AttackerRef {
                attack: index,
                label: position.get(&atk.id).copied(),
                sources: atk.source.iter().map(|s| position[s]).collect(),
            });
        }
        Ok(Layout { elements, attackers })
    }

    pub(crate) fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.ok() {
            Ok(())
        } else {
            Err(Error::Invalid(report))
        }
    }

    /// Checks identifier uniqueness, well-foundedness and the kind constraints.
    ///
    /// Non-minimal set attackers of SETAFs and HSAFs produce warnings only.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let kind = self.kind;
        let mut declared_attacks: BTreeSet<&ElementId> = BTreeSet::new();

        for atk in &self.attacks {
            if self.arguments.contains(&atk.id) || declared_attacks.contains(&atk.id) {
                report.violation("duplicate-id", format!("`{}` is declared more than once", atk.id), vec![atk.id.clone()]);
            }
            if atk.source.is_empty() {
                report.violation("empty-source", "attack source must be nonempty", vec![atk.id.clone()]);
            }

            for member in atk.source.iter().chain(std::iter::once(&atk.target)) {
                if self.arguments.contains(member) || declared_attacks.contains(member) {
                    continue;
                }
                if member == &atk.id || self.attack(member).is_some() {
                    report.violation(
                        "ill-founded",
                        format!("`{}` references attack `{member}` before its declaration", atk.id),
                        vec![atk.id.clone(), member.clone()],
                    );
                } else {
                    report.violation(
                        "unknown-reference",
                        format!("`{}` references unknown id `{member}`", atk.id),
                        vec![atk.id.clone(), member.clone()],
                    );
                }
            }

            let source_args = atk.source.iter().all(|s| self.arguments.contains(s));
            let target_arg = self.arguments.contains(&atk.target);
            if !kind.allows_set_sources() && atk.source.len() > 1 {
                report.violation(
                    "source-not-singleton",
                    format!("{} source must be a single element", kind.name().to_uppercase()),
                    vec![atk.id.clone()],
                );
            }
            match kind {
                FrameworkKind::Daf => {
                    if !source_args {
                        report.violation("source-not-argument", "DAF source must be an argument", vec![atk.id.clone()]);
                    }
                    if !target_arg {
                        report.violation("target-not-argument", "DAF target must be an argument", vec![atk.id.clone()]);
                    }
                }
                FrameworkKind::Hlaf => {
                    if !source_args {
                        report.violation("source-not-argument", "HLAF source must be an argument", vec![atk.id.clone()]);
                    }
                }
                FrameworkKind::Setaf => {
                    if !source_args {
                        report.violation(
                            "source-not-argument",
                            "SETAF source must contain only arguments",
                            vec![atk.id.clone()],
                        );
                    }
                    if !target_arg {
                        report.violation("target-not-argument", "SETAF target must be an argument", vec![atk.id.clone()]);
                    }
                }
                FrameworkKind::Bhaf | FrameworkKind::Hsaf => {}
            }
            declared_attacks.insert(&atk.id);
        }

        if kind == FrameworkKind::Setaf {
            for (i, a) in self.attacks.iter().enumerate() {
                if let Some(b) = self.attacks[..i].iter().find(|b| b.target == a.target && b.source == a.source) {
                    report.violation(
                        "duplicate-set-attack",
                        format!("`{}` repeats the set attack `{}`", a.id, b.id),
                        vec![b.id.clone(), a.id.clone()],
                    );
                }
            }
        }

        if kind.allows_set_sources() {
            for a in &self.attacks {
                for b in &self.attacks {
                    if a.target == b.target && a.source.len() < b.source.len() && a.source.iter().all(|s| b.source.contains(s)) {
                        report.warnings.push(format!(
                            "`{}` is not a minimal attacker of `{}`: `{}` uses a strict subset of its source",
                            b.id, b.target, a.id
                        ));
                    }
                }
            }
        }

        report
    }

    /// Least n such that every attack fits the n-level attack relation.
    pub fn level(&self) -> Result<usize> {
        self.ensure_valid()?;
        let mut levels: HashMap<&ElementId, usize> = HashMap::new();
        let mut overall = 0;
        for atk in &self.attacks {
            let nested = atk
                .source
                .iter()
                .chain(std::iter::once(&atk.target))
                .filter_map(|m| levels.get(m).copied())
                .max();
            let level = nested.map_or(0, |l| l + 1);
            levels.insert(&atk.id, level);
            overall = overall.max(level);
        }
        Ok(overall)
    }
}

/// Free-function form of [`Framework::validate`].
pub fn validate(framework: &Framework) -> ValidationReport {
    framework.validate()
}

/// Free-function form of [`Framework::level`].
pub fn compute_level(framework: &Framework) -> Result<usize> {
    framework.level()
}
