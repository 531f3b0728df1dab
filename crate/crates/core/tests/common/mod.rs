#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use afsa::generate::{random_framework, GenConfig};
use afsa::{parse_frame, Framework, FrameworkKind, Labelling3};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Small frames: at most six labellable elements.
pub fn small_frame(kind: FrameworkKind, seed: u64) -> Framework {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let f = random_framework(&mut rng, kind, &GenConfig { max_arguments: 4, max_attacks: 3, ..GenConfig::default() });
        if f.labellable().len() <= 6 {
            return f;
        }
    }
}

pub fn as_set(labellings: Vec<Labelling3>) -> BTreeSet<Labelling3> {
    labellings.into_iter().collect()
}

fn workspace_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

/// The bundled example frames, sorted by file name.
pub fn corpus() -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> = std::fs::read_dir(workspace_root().join("frames"))
        .expect("frames directory")
        .map(|e| e.expect("dir entry").path())
        .filter(|p| p.extension().is_some_and(|x| x == "af"))
        .map(|p| (p.file_name().unwrap().to_string_lossy().into_owned(), std::fs::read_to_string(&p).unwrap()))
        .collect();
    out.sort();
    out
}

/// The frozen solver regression suite, one framework per `frame` header.
pub fn regression_suite() -> Vec<Framework> {
    let text = std::fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data/regression.af"))
        .expect("regression suite");
    let mut docs: Vec<String> = Vec::new();
    for line in text.lines() {
        if line.starts_with("frame ") {
            docs.push(String::new());
        }
        if let Some(doc) = docs.last_mut() {
            doc.push_str(line);
            doc.push('\n');
        }
    }
    docs.iter().map(|d| parse_frame(d).expect("regression frames parse")).collect()
}
