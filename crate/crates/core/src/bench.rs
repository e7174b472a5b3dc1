//! Per-frame interpolation cost of each engine. Reports only; nothing here
//! is a pass/fail gate.

use std::fmt;
use std::hint::black_box;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::engines::{EngineKind, InterpRequest};
use crate::sample::random_request;

pub const DEFAULT_CALLS: usize = 1_000_000;
const REQUEST_POOL: usize = 1024;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub calls: usize,
    pub rows: Vec<(EngineKind, f64)>,
}

impl BenchReport {
    pub fn ns_per_frame(&self, engine: EngineKind) -> Option<f64> {
        self.rows.iter().find(|r| r.0 == engine).map(|r| r.1)
    }

    /// `DualQuat ns / Baseline ns`.
    pub fn dq_over_baseline(&self) -> Option<f64> {
        Some(self.ns_per_frame(EngineKind::DualQuat)? / self.ns_per_frame(EngineKind::Baseline)?)
    }
}

impl fmt::Display for BenchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:<14} {:>12}   ({} calls each)", "engine", "ns/frame", self.calls)?;
        for (engine, ns) in &self.rows {
            writeln!(f, "{:<14} {:>12.1}", engine.name(), ns)?;
        }
        if let Some(ratio) = self.dq_over_baseline() {
            writeln!(f, "{:<14} {:>12.3}", "DualQuat/Baseline", ratio)?;
        }
        Ok(())
    }
}

/// Times `calls` interpolations per engine over a fixed pool of seeded
/// random requests.
pub fn run_bench(calls: usize, seed: u64, engines: &[EngineKind]) -> BenchReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool: Vec<InterpRequest> = (0..REQUEST_POOL)
        .map(|_| random_request(&mut rng, 1.0))
        .collect();

    let rows = engines
        .iter()
        .map(|&engine| {
            let started = Instant::now();
            for i in 0..calls {
                let r = black_box(&pool[i % REQUEST_POOL]);
                // near-antipodal blends can fail for the LERP engines; the
                // cost of the attempt is what is measured
                let _ = black_box(engine.interpolate(r));
            }
            let ns = started.elapsed().as_nanos() as f64 / calls.max(1) as f64;
            (engine, ns)
        })
        .collect();

    BenchReport { calls, rows }
}
