//! Robust classifier training under noisy labels.
//!
//! The crate trains a small feedforward softmax classifier with a joint loss:
//! online uncertainty sample mining (the K highest-loss samples of each
//! mini-batch are masked out of the gradient) combined with per-sample
//! re-weighting driven by probabilistic Local Outlier Factor scores computed
//! on the network's pre-softmax features. Around that core sit a label-noise
//! injection protocol (random symmetric and difficulty-ranked), a synthetic
//! two-Gaussian benchmark generator, and a sweep/memorization experiment
//! harness with deterministic seeding and machine-readable outputs.
//!
//! Everything is deterministic for a fixed seed: the `parallel` feature
//! (enabled by default) runs the per-sample inner loops on rayon, but all
//! parallel maps collect in index order, so results are bit-identical with
//! and without it.

pub mod data;
pub mod error;
pub mod lof;
pub mod loss;
pub mod metrics;
pub mod model;
pub mod noise;
pub mod seeds;
pub mod sweep;
pub mod synth;
pub mod trainer;

mod par;

pub use data::{FeatureMatrix, LabeledDataset};
pub use error::{Error, Result};
pub use lof::{ByClassScores, LofScores};
pub use model::{FeatureMode, MlpModel};
pub use noise::{NoiseMode, NoiseSpec};
pub use sweep::{ExperimentResult, Method, SweepOptions};
pub use synth::SyntheticSpec;
pub use trainer::{SampleWeights, TrainConfig, TrainLog};
