//! Point sets in the unit hypercube: Monte Carlo, Sobol quasi-Monte Carlo,
//! and two randomized quasi-Monte Carlo variants (random shift, nested Owen
//! scrambling), plus counter-based uniform streams for simulator noise.

mod joe_kuo;
mod sobol;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Error;

pub use sobol::MAX_DIM;
pub(crate) use sobol::{mix2, mix64};

/// Randomized outputs are kept away from 0 and 1 so that quantile transforms
/// stay finite.
pub const UNIT_CLAMP: f64 = 1.0 / 4294967296.0; // 2^-32

const SCALE: f64 = 1.0 / 4294967296.0;

const SALT_MC: u64 = 0x4d43_5f53_414c_5400;
const SALT_SHIFT: u64 = 0x5348_4946_545f_5341;
const SALT_OWEN: u64 = 0x4f57_454e_5f53_4154;

/// How a point set is generated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SequenceKind {
    /// Independent uniforms from a seeded stream.
    Mc,
    /// Deterministic Sobol sequence (Joe-Kuo direction numbers).
    QmcSobol,
    /// Sobol sequence shifted by a single uniform vector modulo 1.
    RqmcShift,
    /// Sobol sequence under nested Owen scrambling of the base-2 digits.
    RqmcOwen,
}

impl SequenceKind {
    /// Every kind except the plain deterministic Sobol sequence needs a seed.
    pub fn requires_seed(self) -> bool {
        self != SequenceKind::QmcSobol
    }
}

/// An N x d block of points in the unit hypercube together with its
/// generation metadata. Regenerating with identical metadata is bit-identical.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    points: Vec<f64>, // row-major, n * dim
    n: usize,
    dim: usize,
    kind: SequenceKind,
    seed: Option<u64>,
    start_index: u64,
}

impl PointSet {
    /// Generate `n` points of dimension `dim`.
    ///
    /// Sobol-based kinds start at sequence index 1, skipping the all-zeros
    /// point at index 0 (which maps to -inf under Gaussian quantile
    /// transforms).
    pub fn generate(
        kind: SequenceKind,
        dim: usize,
        n: usize,
        seed: Option<u64>,
    ) -> Result<Self, Error> {
        let start = if kind == SequenceKind::Mc { 0 } else { 1 };
        Self::generate_from(kind, dim, n, seed, start)
    }

    /// Generate `n` points starting at an explicit sequence index.
    ///
    /// `start_index = 0` exposes the raw digital net including the origin;
    /// useful for net-property checks, not for sampling.
    pub fn generate_from(
        kind: SequenceKind,
        dim: usize,
        n: usize,
        seed: Option<u64>,
        start_index: u64,
    ) -> Result<Self, Error> {
        if dim == 0 || dim > MAX_DIM {
            return Err(Error::DimensionOutOfRange { dim, max: MAX_DIM });
        }
        if n == 0 {
            return Err(Error::EmptyPointSet);
        }
        if kind.requires_seed() && seed.is_none() {
            return Err(Error::MissingSeed(kind));
        }
        if kind != SequenceKind::Mc && start_index + n as u64 > (1u64 << 32) {
            return Err(Error::SequenceExhausted {
                requested: start_index + n as u64,
            });
        }

        let mut points = vec![0.0; n * dim];
        match kind {
            SequenceKind::Mc => {
                let mut stream = fresh_uniform_stream(mix2(seed.unwrap(), SALT_MC), 0);
                for p in points.iter_mut() {
                    *p = stream.next_f64();
                }
            }
            SequenceKind::QmcSobol => {
                for i in 0..n {
                    for j in 0..dim {
                        points[i * dim + j] =
                            sobol::sobol_u32(j, start_index + i as u64) as f64 * SCALE;
                    }
                }
            }
            SequenceKind::RqmcShift => {
                let mut stream = fresh_uniform_stream(mix2(seed.unwrap(), SALT_SHIFT), 0);
                let shift: Vec<f64> = (0..dim).map(|_| stream.next_f64()).collect();
                for i in 0..n {
                    for j in 0..dim {
                        let u = sobol::sobol_u32(j, start_index + i as u64) as f64 * SCALE;
                        points[i * dim + j] = clamp_unit((u + shift[j]).fract());
                    }
                }
            }
            SequenceKind::RqmcOwen => {
                let base = mix2(seed.unwrap(), SALT_OWEN);
                let keys: Vec<u64> = (0..dim).map(|j| mix2(base, j as u64)).collect();
                for i in 0..n {
                    for j in 0..dim {
                        let raw = sobol::sobol_u32(j, start_index + i as u64);
                        let scrambled = sobol::owen_scramble(raw, keys[j]);
                        points[i * dim + j] = clamp_unit(scrambled as f64 * SCALE);
                    }
                }
            }
        }

        Ok(PointSet {
            points,
            n,
            dim,
            kind,
            seed: if kind.requires_seed() { seed } else { None },
            start_index: if kind == SequenceKind::Mc { 0 } else { start_index },
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    pub fn start_index(&self) -> u64 {
        self.start_index
    }

    /// Point `i` as a coordinate slice of length `dim`.
    pub fn row(&self, i: usize) -> &[f64] {
        &self.points[i * self.dim..(i + 1) * self.dim]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.points.chunks_exact(self.dim)
    }
}

fn clamp_unit(u: f64) -> f64 {
    u.clamp(UNIT_CLAMP, 1.0 - UNIT_CLAMP)
}

/// A counter-based uniform random stream.
///
/// Streams with distinct `stream_id` under the same seed are statistically
/// independent, and the output for a given `(seed, stream_id)` does not
/// depend on thread scheduling, which is what makes concurrent per-particle
/// weighting reproducible.
#[derive(Debug, Clone)]
pub struct RandomStream(ChaCha8Rng);

/// Open a stream keyed by `(seed, stream_id)`.
pub fn fresh_uniform_stream(seed: u64, stream_id: u64) -> RandomStream {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream_id);
    RandomStream(rng)
}

impl RandomStream {
    /// Uniform draw in [0, 1).
    pub fn next_f64(&mut self) -> f64 {
        self.0.gen::<f64>()
    }

    /// Standard normal draw.
    pub fn next_standard_normal(&mut self) -> f64 {
        self.0.sample(rand_distr::StandardNormal)
    }

    /// Uniform index in [0, n).
    pub fn next_index(&mut self, n: usize) -> usize {
        self.0.gen_range(0..n)
    }
}

impl RngCore for RandomStream {
    fn next_u32(&mut self) -> u32 {
        self.0.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    fn fill_bytes(&mut self, dest: &mut [u8]) {
        self.0.fill_bytes(dest)
    }

    fn try_fill_bytes(&mut self, dest: &mut [u8]) -> Result<(), rand::Error> {
        self.0.try_fill_bytes(dest)
    }
}
