//! Seeded random frameworks for property tests and benchmarks.

use std::collections::BTreeMap;

use rand::seq::{IteratorRandom, SliceRandom};
use rand::Rng;

use crate::framework::{id, Attack, ElementId, Framework, FrameworkKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenConfig {
    pub max_arguments: usize,
    pub max_attacks: usize,
    pub max_level: usize,
    /// Largest source set for SETAFs and HSAFs.
    pub max_source: usize,
}

impl Default for GenConfig {
    fn default() -> Self {
        Self { max_arguments: 4, max_attacks: 4, max_level: 2, max_source: 3 }
    }
}

const ARGUMENTS: [&str; 8] = ["a", "b", "c", "d", "e", "f", "g", "h"];

/// A valid framework of `kind` with 1..=max_arguments arguments and
/// 0..=max_attacks attacks, none above `max_level`.
pub fn random_framework<R: Rng + ?Sized>(rng: &mut R, kind: FrameworkKind, config: &GenConfig) -> Framework {
    let n_args = rng.gen_range(1..=config.max_arguments.clamp(1, ARGUMENTS.len()));
    let arguments: Vec<ElementId> = ARGUMENTS[..n_args].iter().map(|a| id(a)).collect();
    let n_attacks = rng.gen_range(0..=config.max_attacks);
    let mut attacks: Vec<Attack> = Vec::new();
    let mut levels: BTreeMap<ElementId, usize> = BTreeMap::new();

    for i in 1..=n_attacks {
        let name = id(&format!("r{i}"));
        for _ in 0..20 {
            let Some((source, target)) = propose(rng, kind, config, &arguments, &attacks) else {
                break;
            };
            let level = source
                .iter()
                .chain(std::iter::once(&target))
                .filter_map(|e| levels.get(e).map(|l| l + 1))
                .max()
                .unwrap_or(0);
            let mut sorted = source.clone();
            sorted.sort();
            let duplicate = kind == FrameworkKind::Setaf
                && attacks.iter().any(|a| a.target == target && {
                    let mut s = a.source.clone();
                    s.sort();
                    s == sorted
                });
            if level <= config.max_level && !duplicate {
                levels.insert(name.clone(), level);
                attacks.push(Attack::new(name.clone(), source, target));
                break;
            }
        }
    }
    let framework = Framework::new(kind, arguments, attacks);
    debug_assert!(framework.validate().ok(), "{}", framework.validate());
    framework
}

fn propose<R: Rng + ?Sized>(
    rng: &mut R,
    kind: FrameworkKind,
    config: &GenConfig,
    arguments: &[ElementId],
    attacks: &[Attack],
) -> Option<(Vec<ElementId>, ElementId)> {
    let arg = |rng: &mut R| arguments.choose(rng).cloned().expect("at least one argument");
    let element = |rng: &mut R| {
        let index = rng.gen_range(0..arguments.len() + attacks.len());
        if index < arguments.len() {
            arguments[index].clone()
        } else {
            attacks[index - arguments.len()].id.clone()
        }
    };
    let set = |rng: &mut R, pool: Vec<ElementId>| {
        let size = rng.gen_range(1..=config.max_source.clamp(1, pool.len()));
        pool.into_iter().choose_multiple(rng, size)
    };
    Some(match kind {
        FrameworkKind::Daf => (vec![arg(rng)], arg(rng)),
        FrameworkKind::Hlaf => (vec![arg(rng)], element(rng)),
        FrameworkKind::Bhaf => (vec![element(rng)], element(rng)),
        FrameworkKind::Setaf => (set(rng, arguments.to_vec()), arg(rng)),
        FrameworkKind::Hsaf => {
            let pool = arguments.iter().cloned().chain(attacks.iter().map(|a| a.id.clone())).collect();
            (set(rng, pool), element(rng))
        }
    })
}
