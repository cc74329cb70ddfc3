//! Versioned binary persistence of trained models.
//!
//! Layout: an 8-byte magic, a little-endian u32 format version, a u64
//! payload length, the payload, then a SHA-256 digest of the payload.
//! Loading verifies magic, version and digest before parsing, so corrupted
//! or truncated files fail loudly instead of predicting garbage.

use std::fs;
use std::path::Path;

use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::ml::{
    ClassGaussians, ClassifierKind, ClassifierSpec, ForestModel, KnnModel, ModelKind, NbModel,
    Node, PairwiseHyperplane, Standardizer, SvmModel, TrainedModel, Tree,
};
use crate::num::Real;

pub const MODEL_MAGIC: [u8; 8] = *b"CARPOMDL";
pub const MODEL_VERSION: u32 = 1;

/// Model file failures.
#[derive(Debug, Error)]
pub enum ModelIoError {
    #[error("not a model file: bad magic bytes")]
    NotAModelFile,
    #[error("unsupported model version {found} (this build reads version {MODEL_VERSION})")]
    VersionUnsupported { found: u32 },
    #[error("digest mismatch: model file is corrupted")]
    DigestMismatch,
    #[error("malformed model payload: {detail}")]
    MalformedModel { detail: String },
    #[error(
        "feature schema mismatch: model was trained on [{expected}] but data provides [{got}]"
    )]
    FeatureSchemaMismatch { expected: String, got: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn bad(detail: impl Into<String>) -> ModelIoError {
    ModelIoError::MalformedModel {
        detail: detail.into(),
    }
}

/// Error unless the model's feature columns match `names` exactly.
pub fn ensure_schema<F: Real>(
    model: &TrainedModel<F>,
    names: &[String],
) -> Result<(), ModelIoError> {
    if model.feature_names() != names {
        return Err(ModelIoError::FeatureSchemaMismatch {
            expected: model.feature_names().join(", "),
            got: names.join(", "),
        });
    }
    Ok(())
}

// ---- little-endian payload primitives ----

struct Out(Vec<u8>);

impl Out {
    fn u8(&mut self, v: u8) {
        self.0.push(v);
    }
    fn u32(&mut self, v: u32) {
        self.0.extend_from_slice(&v.to_le_bytes());
    }
    fn u64(&mut self, v: u64) {
        self.0.extend_from_slice(&v.to_le_bytes());
    }
    fn f64(&mut self, v: f64) {
        self.0.extend_from_slice(&v.to_le_bytes());
    }
    fn real<F: Real>(&mut self, v: F) {
        self.f64(v.as_f64());
    }
    fn str(&mut self, s: &str) {
        self.u32(s.len() as u32);
        self.0.extend_from_slice(s.as_bytes());
    }
    fn strs(&mut self, ss: &[String]) {
        self.u32(ss.len() as u32);
        for s in ss {
            self.str(s);
        }
    }
    fn reals<F: Real>(&mut self, vs: &[F]) {
        self.u32(vs.len() as u32);
        for &v in vs {
            self.real(v);
        }
    }
}

struct In<'a> {
    buf: &'a [u8],
    pos: usize,
}

impl<'a> In<'a> {
    fn take(&mut self, n: usize) -> Result<&'a [u8], ModelIoError> {
        if self.pos + n > self.buf.len() {
            return Err(bad("unexpected end of payload"));
        }
        let s = &self.buf[self.pos..self.pos + n];
        self.pos += n;
        Ok(s)
    }
    fn u8(&mut self) -> Result<u8, ModelIoError> {
        Ok(self.take(1)?[0])
    }
    fn u32(&mut self) -> Result<u32, ModelIoError> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }
    fn u64(&mut self) -> Result<u64, ModelIoError> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }
    fn f64(&mut self) -> Result<f64, ModelIoError> {
        Ok(f64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }
    fn real<F: Real>(&mut self) -> Result<F, ModelIoError> {
        Ok(F::of(self.f64()?))
    }
    fn str(&mut self) -> Result<String, ModelIoError> {
        let n = self.u32()? as usize;
        String::from_utf8(self.take(n)?.to_vec()).map_err(|_| bad("invalid utf-8 string"))
    }
    fn strs(&mut self) -> Result<Vec<String>, ModelIoError> {
        let n = self.u32()? as usize;
        (0..n).map(|_| self.str()).collect()
    }
    fn reals<F: Real>(&mut self) -> Result<Vec<F>, ModelIoError> {
        let n = self.u32()? as usize;
        (0..n).map(|_| self.real()).collect()
    }
    fn done(&self) -> Result<(), ModelIoError> {
        if self.pos == self.buf.len() {
            Ok(())
        } else {
            Err(bad("trailing bytes after payload"))
        }
    }
}

fn kind_tag(kind: ClassifierKind) -> u8 {
    match kind {
        ClassifierKind::Knn => 0,
        ClassifierKind::NaiveBayes => 1,
        ClassifierKind::RandomForest => 2,
        ClassifierKind::Svm => 3,
    }
}

fn tag_kind(tag: u8) -> Result<ClassifierKind, ModelIoError> {
    Ok(match tag {
        0 => ClassifierKind::Knn,
        1 => ClassifierKind::NaiveBayes,
        2 => ClassifierKind::RandomForest,
        3 => ClassifierKind::Svm,
        other => return Err(bad(format!("unknown classifier tag {other}"))),
    })
}

fn encode_payload<F: Real>(model: &TrainedModel<F>) -> Vec<u8> {
    let mut out = Out(Vec::new());
    let spec = &model.spec;
    out.u8(kind_tag(spec.kind));
    out.u64(spec.k as u64);
    out.u64(spec.trees as u64);
    out.f64(spec.cost);
    out.u64(spec.seed);
    out.strs(&model.class_names);
    out.strs(&model.feature_names);
    out.reals(&model.standardizer.mean);
    out.reals(&model.standardizer.std);
    match &model.inner {
        ModelKind::Knn(m) => {
            out.u32(m.classes as u32);
            out.u64(m.k as u64);
            out.u32(m.points.len() as u32);
            for p in &m.points {
                out.reals(p);
            }
            out.u32(m.labels.len() as u32);
            for &l in &m.labels {
                out.u32(l as u32);
            }
        }
        ModelKind::NaiveBayes(m) => {
            out.u32(m.classes as u32);
            out.reals(&m.log_priors);
            for g in &m.gaussians {
                match g {
                    None => out.u8(0),
                    Some(g) => {
                        out.u8(1);
                        out.reals(&g.means);
                        out.reals(&g.vars);
                    }
                }
            }
        }
        ModelKind::Forest(m) => {
            out.u32(m.classes as u32);
            out.u32(m.trees.len() as u32);
            for tree in &m.trees {
                out.u32(tree.nodes.len() as u32);
                for node in &tree.nodes {
                    match node {
                        Node::Leaf { class } => {
                            out.u8(0);
                            out.u32(*class as u32);
                        }
                        Node::Split {
                            feature,
                            threshold,
                            left,
                            right,
                        } => {
                            out.u8(1);
                            out.u32(*feature as u32);
                            out.real(*threshold);
                            out.u32(*left as u32);
                            out.u32(*right as u32);
                        }
                    }
                }
            }
        }
        ModelKind::Svm(m) => {
            out.u32(m.classes as u32);
            out.u32(m.planes.len() as u32);
            for p in &m.planes {
                out.u32(p.positive as u32);
                out.u32(p.negative as u32);
                out.reals(&p.weights);
            }
        }
    }
    out.0
}

fn decode_payload<F: Real>(payload: &[u8]) -> Result<TrainedModel<F>, ModelIoError> {
    let mut r = In {
        buf: payload,
        pos: 0,
    };
    let kind = tag_kind(r.u8()?)?;
    let spec = ClassifierSpec {
        kind,
        k: r.u64()? as usize,
        trees: r.u64()? as usize,
        cost: r.f64()?,
        seed: r.u64()?,
    };
    let class_names = r.strs()?;
    let feature_names = r.strs()?;
    let mean = r.reals()?;
    let std = r.reals()?;
    if mean.len() != feature_names.len() || std.len() != feature_names.len() {
        return Err(bad("standardizer width disagrees with feature names"));
    }
    let standardizer = Standardizer::from_parts(mean, std);
    let inner = match kind {
        ClassifierKind::Knn => {
            let classes = r.u32()? as usize;
            let k = r.u64()? as usize;
            let rows = r.u32()? as usize;
            let points: Vec<Vec<F>> = (0..rows).map(|_| r.reals()).collect::<Result<_, _>>()?;
            let nl = r.u32()? as usize;
            if nl != rows {
                return Err(bad("label count disagrees with point count"));
            }
            let mut labels = Vec::with_capacity(nl);
            for _ in 0..nl {
                let l = r.u32()? as usize;
                if l >= classes {
                    return Err(bad("label out of class range"));
                }
                labels.push(l);
            }
            if points.is_empty() || k == 0 {
                return Err(bad("empty nearest-neighbour store"));
            }
            ModelKind::Knn(KnnModel {
                k,
                points,
                labels,
                classes,
            })
        }
        ClassifierKind::NaiveBayes => {
            let classes = r.u32()? as usize;
            let log_priors = r.reals()?;
            if log_priors.len() != classes {
                return Err(bad("prior count disagrees with class count"));
            }
            let mut gaussians = Vec::with_capacity(classes);
            for _ in 0..classes {
                gaussians.push(match r.u8()? {
                    0 => None,
                    1 => Some(ClassGaussians {
                        means: r.reals()?,
                        vars: r.reals()?,
                    }),
                    other => return Err(bad(format!("bad gaussian flag {other}"))),
                });
            }
            ModelKind::NaiveBayes(NbModel {
                classes,
                log_priors,
                gaussians,
            })
        }
        ClassifierKind::RandomForest => {
            let classes = r.u32()? as usize;
            let ntrees = r.u32()? as usize;
            let mut trees = Vec::with_capacity(ntrees);
            for _ in 0..ntrees {
                let nnodes = r.u32()? as usize;
                let mut nodes = Vec::with_capacity(nnodes);
                for _ in 0..nnodes {
                    nodes.push(match r.u8()? {
                        0 => Node::Leaf {
                            class: r.u32()? as usize,
                        },
                        1 => Node::Split {
                            feature: r.u32()? as usize,
                            threshold: r.real()?,
                            left: r.u32()? as usize,
                            right: r.u32()? as usize,
                        },
                        other => return Err(bad(format!("bad node tag {other}"))),
                    });
                }
                if nodes.is_empty() {
                    return Err(bad("empty tree"));
                }
                for node in &nodes {
                    if let Node::Split { left, right, .. } = node {
                        if *left >= nodes.len() || *right >= nodes.len() {
                            return Err(bad("tree child index out of range"));
                        }
                    }
                }
                trees.push(Tree { nodes });
            }
            ModelKind::Forest(ForestModel { trees, classes })
        }
        ClassifierKind::Svm => {
            let classes = r.u32()? as usize;
            let nplanes = r.u32()? as usize;
            let mut planes = Vec::with_capacity(nplanes);
            for _ in 0..nplanes {
                let positive = r.u32()? as usize;
                let negative = r.u32()? as usize;
                let weights = r.reals()?;
                if positive >= classes || negative >= classes {
                    return Err(bad("hyperplane class out of range"));
                }
                if weights.len() != feature_names.len() + 1 {
                    return Err(bad("hyperplane width disagrees with feature names"));
                }
                planes.push(PairwiseHyperplane {
                    positive,
                    negative,
                    weights,
                });
            }
            ModelKind::Svm(SvmModel { classes, planes })
        }
    };
    r.done()?;
    Ok(TrainedModel {
        spec,
        class_names,
        feature_names,
        standardizer,
        inner,
    })
}

/// Serialize a model to bytes.
pub fn model_to_bytes<F: Real>(model: &TrainedModel<F>) -> Vec<u8> {
    let payload = encode_payload(model);
    let digest = Sha256::digest(&payload);
    let mut out = Vec::with_capacity(8 + 4 + 8 + payload.len() + 32);
    out.extend_from_slice(&MODEL_MAGIC);
    out.extend_from_slice(&MODEL_VERSION.to_le_bytes());
    out.extend_from_slice(&(payload.len() as u64).to_le_bytes());
    out.extend_from_slice(&payload);
    out.extend_from_slice(&digest);
    out
}

/// Parse a model from bytes, verifying magic, version and digest.
pub fn model_from_bytes<F: Real>(bytes: &[u8]) -> Result<TrainedModel<F>, ModelIoError> {
    if bytes.len() < 8 + 4 + 8 + 32 || bytes[..8] != MODEL_MAGIC {
        return Err(ModelIoError::NotAModelFile);
    }
    let version = u32::from_le_bytes(bytes[8..12].try_into().unwrap());
    if version != MODEL_VERSION {
        return Err(ModelIoError::VersionUnsupported { found: version });
    }
    let len = u64::from_le_bytes(bytes[12..20].try_into().unwrap()) as usize;
    let body = &bytes[20..];
    if body.len() != len + 32 {
        return Err(bad(format!(
            "payload length field says {len}, file holds {}",
            body.len().saturating_sub(32)
        )));
    }
    let (payload, digest) = body.split_at(len);
    if Sha256::digest(payload).as_slice() != digest {
        return Err(ModelIoError::DigestMismatch);
    }
    decode_payload(payload)
}

pub fn save_model<F: Real>(path: &Path, model: &TrainedModel<F>) -> Result<(), ModelIoError> {
    Ok(fs::write(path, model_to_bytes(model))?)
}

pub fn load_model<F: Real>(path: &Path) -> Result<TrainedModel<F>, ModelIoError> {
    model_from_bytes(&fs::read(path)?)
}
