//! Benchmark models: simulator, prior, observed data, and distance.

mod bimodal;
mod emd;
mod lotka_volterra;
mod toy;
mod tuberculosis;

use std::collections::BTreeMap;

use crate::error::Error;
use crate::lds::RandomStream;
use crate::transform::{box_map, triangle_density, triangle_map, BoxBounds};

pub use bimodal::{bimodal_model, BimodalModel, BIMODAL_REFERENCE_THETA};
pub use emd::emd;
pub use lotka_volterra::{
    lotka_volterra, simulate_lv_series, LotkaVolterraModel, LvRates, LV_EVENT_CAP,
    LV_REFERENCE_LOG_RATES,
};
pub use toy::{toy_model, ToyModel};
pub use tuberculosis::{
    simulate_tb_clusters, tb_summary, tuberculosis, TbSim, TuberculosisModel, TB_OBSERVED_TABLE,
    TB_POPULATION_TARGET, TB_SAMPLE_SIZE,
};

/// One simulated dataset, in the shape the owning model produces.
#[derive(Debug, Clone, PartialEq)]
pub enum Dataset {
    /// A d-dimensional observation (toy model).
    Vector(Vec<f64>),
    /// Two integer time series of equal length (Lotka-Volterra).
    TimeSeriesPair { prey: Vec<u32>, predators: Vec<u32> },
    /// Genotype cluster-size histogram: cluster size -> number of clusters.
    ClusterCounts(BTreeMap<u32, u32>),
    /// An n x 2 cloud of real points (bimodal model).
    SampleCloud(Vec<[f64; 2]>),
}

/// Result of one simulator call.
///
/// `dataset` is `None` when the simulation failed in a model-defined way
/// (exploded trajectory, exhausted restart budget); the distance to any
/// observation is then +inf. `cost` counts dataset-generation attempts,
/// including restarts, so CPU accounting stays honest.
#[derive(Debug, Clone)]
pub struct SimOutput {
    pub dataset: Option<Dataset>,
    pub cost: u64,
}

impl SimOutput {
    fn ok(dataset: Dataset) -> Self {
        SimOutput { dataset: Some(dataset), cost: 1 }
    }
}

/// Prior distribution over the sampler-facing parameter space.
#[derive(Debug, Clone, PartialEq)]
pub enum PriorDist {
    /// Uniform on an axis-aligned box.
    Box(BoxBounds),
    /// Uniform on the triangle {0 < gamma < alpha, alpha + gamma < 1},
    /// density 4 (tuberculosis birth/death rates).
    Triangle,
}

impl PriorDist {
    pub fn dim(&self) -> usize {
        match self {
            PriorDist::Box(b) => b.dim(),
            PriorDist::Triangle => 2,
        }
    }

    /// Map a unit-hypercube point onto the prior support.
    pub fn map(&self, u: &[f64]) -> Vec<f64> {
        match self {
            PriorDist::Box(b) => box_map(u, b),
            PriorDist::Triangle => {
                let (a, g) = triangle_map([u[0], u[1]]);
                vec![a, g]
            }
        }
    }

    /// Prior density at `theta` (0 outside the support).
    pub fn density(&self, theta: &[f64]) -> f64 {
        match self {
            PriorDist::Box(b) => {
                if b.contains(theta) {
                    1.0 / b.volume()
                } else {
                    0.0
                }
            }
            PriorDist::Triangle => triangle_density(theta[0], theta[1]),
        }
    }
}

/// A simulator bundle: prior, forward simulator, distance, observed data.
pub trait Model: Send + Sync {
    fn name(&self) -> &'static str;

    fn theta_dim(&self) -> usize;

    fn prior(&self) -> &PriorDist;

    fn observed(&self) -> &Dataset;

    /// Draw one dataset at `theta`; deterministic given the stream.
    fn simulate(&self, theta: &[f64], stream: &mut RandomStream) -> SimOutput;

    /// Distance between two datasets of this model's shape.
    fn distance(&self, a: &Dataset, b: &Dataset) -> f64;

    /// Distance of a simulation to the observed data; +inf for failures.
    fn distance_to_observed(&self, sim: &SimOutput) -> f64 {
        match &sim.dataset {
            Some(d) => self.distance(d, self.observed()),
            None => f64::INFINITY,
        }
    }
}

/// Construct a model by name (CLI entry point).
pub fn model_by_name(name: &str, dim: Option<usize>) -> Result<Box<dyn Model>, Error> {
    match name {
        "toy" => Ok(Box::new(toy_model(dim.unwrap_or(1))?)),
        "lotka_volterra" => Ok(Box::new(lotka_volterra())),
        "tuberculosis" => Ok(Box::new(tuberculosis())),
        "bimodal" => Ok(Box::new(bimodal_model())),
        other => Err(Error::UnknownModel(other.to_string())),
    }
}

/// Names and shapes of the built-in models, for `models list`.
pub fn model_catalog() -> Vec<(&'static str, usize, &'static str)> {
    vec![
        ("toy", 1, "Vector(d); dim configurable, Euclidean distance, analytic oracle for d=1"),
        ("lotka_volterra", 3, "TimeSeriesPair(16+16); Gillespie simulation, log-rate box prior"),
        ("tuberculosis", 2, "ClusterCounts; genotype chain to 10^4, subsample 473, triangle prior"),
        ("bimodal", 2, "SampleCloud(100x2); earth-mover distance, box prior"),
    ]
}
