//! Microbenchmarks for the exterior and Clifford product kernels.

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use polymetric::random::{random_metric, random_multivector};
use polymetric::{clifford_product, exterior_product, BasisTag, Metric, Multivector};

use crate::output::OutputRecord;

pub const MAX_BENCH_DIM: usize = 12;

#[derive(Clone, Debug)]
pub struct BenchParams {
    pub n: usize,
    pub density: f64,
    pub iters: usize,
    pub seed: u64,
    /// Uses this metric instead of a seeded random one.
    pub metric: Option<Metric>,
}

#[derive(Debug, Error, PartialEq)]
pub enum BenchError {
    #[error("--n must be in 1..{MAX_BENCH_DIM}, got {0}")]
    Dimension(usize),
    #[error("--density must be in (0, 1], got {0}")]
    Density(f64),
    #[error("--iters must be at least 1")]
    Iters,
    #[error("config metric has dimension {found}, expected {expected}")]
    MetricDimension { expected: usize, found: usize },
}

impl BenchParams {
    pub fn validate(&self) -> Result<(), BenchError> {
        if self.n == 0 || self.n > MAX_BENCH_DIM {
            return Err(BenchError::Dimension(self.n));
        }
        if !(self.density > 0.0 && self.density <= 1.0) {
            return Err(BenchError::Density(self.density));
        }
        if self.iters == 0 {
            return Err(BenchError::Iters);
        }
        if let Some(g) = &self.metric {
            if g.dim() != self.n {
                return Err(BenchError::MetricDimension {
                    expected: self.n,
                    found: g.dim(),
                });
            }
        }
        Ok(())
    }
}

/// Seeded operands: one metric and `iters` Grassmann pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchInputs {
    pub metric: Metric,
    pub pairs: Vec<(Multivector, Multivector)>,
}

impl BenchInputs {
    /// Stable digest of the operands, for comparing runs.
    pub fn fingerprint(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.metric.to_string().hash(&mut h);
        for (u, v) in &self.pairs {
            OutputRecord::from_multivector(u).to_json().hash(&mut h);
            OutputRecord::from_multivector(v).to_json().hash(&mut h);
        }
        h.finish()
    }
}

pub fn generate_inputs(params: &BenchParams) -> Result<BenchInputs, BenchError> {
    params.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let metric = match &params.metric {
        Some(g) => g.clone(),
        None => random_metric(&mut rng, params.n),
    };
    let pairs = (0..params.iters)
        .map(|_| {
            let u = random_multivector(&mut rng, params.n, BasisTag::Grassmann, params.density);
            let v = random_multivector(&mut rng, params.n, BasisTag::Grassmann, params.density);
            (u, v)
        })
        .collect();
    Ok(BenchInputs { metric, pairs })
}

#[derive(Clone, Debug)]
pub struct OpStats {
    pub name: &'static str,
    pub samples: usize,
    pub mean: Duration,
    pub min: Duration,
    pub mean_terms: f64,
    pub max_terms: usize,
}

impl OpStats {
    fn collect(name: &'static str, runs: &[(Duration, usize)]) -> Self {
        let total: Duration = runs.iter().map(|r| r.0).sum();
        OpStats {
            name,
            samples: runs.len(),
            mean: total / runs.len() as u32,
            min: runs.iter().map(|r| r.0).min().unwrap_or_default(),
            mean_terms: runs.iter().map(|r| r.1 as f64).sum::<f64>() / runs.len() as f64,
            max_terms: runs.iter().map(|r| r.1).max().unwrap_or(0),
        }
    }
}

#[derive(Clone, Debug)]
pub struct BenchReport {
    pub params: BenchParams,
    pub fingerprint: u64,
    pub mean_input_terms: f64,
    pub ops: Vec<OpStats>,
}

impl fmt::Display for BenchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = &self.params;
        writeln!(
            f,
            "n={} density={} iters={} seed={} inputs={:016x}",
            p.n, p.density, p.iters, p.seed, self.fingerprint
        )?;
        writeln!(f, "mean input terms: {:.1}", self.mean_input_terms)?;
        writeln!(
            f,
            "{:<10} {:>8} {:>12} {:>12} {:>12} {:>10}",
            "op", "samples", "mean_us", "min_us", "mean_terms", "max_terms"
        )?;
        for op in &self.ops {
            writeln!(
                f,
                "{:<10} {:>8} {:>12.2} {:>12.2} {:>12.1} {:>10}",
                op.name,
                op.samples,
                op.mean.as_secs_f64() * 1e6,
                op.min.as_secs_f64() * 1e6,
                op.mean_terms,
                op.max_terms
            )?;
        }
        Ok(())
    }
}

fn time<F: FnMut() -> Multivector>(mut f: F) -> (Duration, usize) {
    let start = Instant::now();
    let out = f();
    (start.elapsed(), out.len())
}

pub fn run_bench(params: &BenchParams) -> Result<BenchReport, BenchError> {
    let inputs = generate_inputs(params)?;
    let g = &inputs.metric;
    let mut wedge = Vec::with_capacity(params.iters);
    let mut clifford = Vec::with_capacity(params.iters);
    for (u, v) in &inputs.pairs {
        wedge.push(time(|| exterior_product(u, v).expect("same dimension")));
        clifford.push(time(|| clifford_product(u, v, g).expect("same dimension")));
    }
    let input_terms: usize = inputs.pairs.iter().map(|(u, v)| u.len() + v.len()).sum();
    Ok(BenchReport {
        params: params.clone(),
        fingerprint: inputs.fingerprint(),
        mean_input_terms: input_terms as f64 / (2 * params.iters) as f64,
        ops: vec![
            OpStats::collect("exterior", &wedge),
            OpStats::collect("clifford", &clifford),
        ],
    })
}
