//! Shared helpers for the binary tests: process invocation and synthetic
//! corpora with known ground truth.
#![allow(dead_code)] // each test binary uses a different subset

use std::path::Path;
use std::process::{Command, Output};

use carpo_core::io::arff::write_arff_path;
use carpo_core::io::image::save_png;
use carpo_core::ml::LabeledDataset;
use carpo_core::synth::{gaussian_blobs, SceneBuilder};
use carpo_core::RgbRaster;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Run the compiled binary with the given arguments.
pub fn carpo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_carpo"))
        .args(args)
        .output()
        .expect("binary should spawn")
}

pub fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

pub fn stderr_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

pub fn assert_exit(out: &Output, code: i32) {
    assert_eq!(
        out.status.code(),
        Some(code),
        "stdout:\n{}\nstderr:\n{}",
        stdout_of(out),
        stderr_of(out)
    );
}

/// Hues of the four synthetic seed classes. Everything else about the
/// classes — shape range, brightness, noise — is drawn from one shared
/// distribution, so colour carries the entire class signal.
pub const CLASS_HUES: [(&str, f64); 4] = [
    ("red", 0.0),
    ("orange", 0.083),
    ("yellow", 0.167),
    ("green", 0.333),
];

/// One scanned sheet: four seeds of one class on a noisy blue background.
pub fn class_scene(hue: f64, noise_seed: u64, shape_rng: &mut ChaCha8Rng) -> RgbRaster {
    let mut scene = SceneBuilder::new(260, 200, noise_seed).noise(10);
    for (sx, sy) in [(65.0, 55.0), (195.0, 55.0), (65.0, 145.0), (195.0, 145.0)] {
        let a = shape_rng.gen_range(14.0..22.0);
        let b = shape_rng.gen_range(9.0..14.0);
        let theta = shape_rng.gen_range(0.0..180.0);
        let cx = sx + shape_rng.gen_range(-6.0..6.0);
        let cy = sy + shape_rng.gen_range(-6.0..6.0);
        scene = scene.add_ellipse_seed(cx, cy, a, b, theta, hue, 0.9, 150.0);
    }
    scene.build()
}

/// Write a labeled image tree: `root/<class>/sheet<i>.png`.
pub fn build_corpus(root: &Path, images_per_class: usize) {
    let mut shape_rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for (ci, (name, hue)) in CLASS_HUES.iter().enumerate() {
        let dir = root.join(name);
        std::fs::create_dir_all(&dir).unwrap();
        for i in 0..images_per_class {
            let noise_seed = (ci * images_per_class + i) as u64;
            let img = class_scene(*hue, noise_seed, &mut shape_rng);
            save_png(&dir.join(format!("sheet{i}.png")), &img).unwrap();
        }
    }
}

/// Well-separated Gaussian clusters written as an ARFF table.
pub fn write_blobs_arff(path: &Path, classes: usize, per_class: usize, dims: usize, seed: u64) {
    let (rows, labels) = gaussian_blobs(classes, per_class, dims, 8.0, seed);
    let class_names: Vec<String> = (0..classes).map(|c| format!("c{c}")).collect();
    let feature_names: Vec<String> = (0..dims).map(|d| format!("f{d}")).collect();
    let data = LabeledDataset::new(rows, labels, class_names, feature_names).unwrap();
    write_arff_path(path, "blobs", &data).unwrap();
}
