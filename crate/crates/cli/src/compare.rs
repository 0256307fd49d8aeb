use std::fs;
use std::path::Path;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use oneconn::generator::{GenConfig, Variant};
use oneconn::oracle::connectivity_flow;
use oneconn::{vertex_connectivity, SearchOptions};

use crate::Failure;

const FRACTIONS: [f64; 3] = [0.0, 0.2, 0.5];

#[derive(Serialize)]
pub struct Trial {
    trial: usize,
    seed: u64,
    n: usize,
    variant: &'static str,
    crossing_percent: u32,
    crossings: usize,
    kappa_cycle: Option<usize>,
    kappa_oracle: usize,
    method: Option<&'static str>,
    cycle_len: Option<usize>,
    error: Option<String>,
    agree: bool,
}

pub struct Report {
    trials: Vec<Trial>,
}

struct Plan {
    trial: usize,
    seed: u64,
    config: GenConfig,
}

fn plan(trials: usize, seed: u64, nmin: usize, nmax: usize) -> Vec<Plan> {
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    (0..trials)
        .map(|i| {
            let s = master.next_u64();
            let n = master.gen_range(nmin..=nmax);
            let variant = if (i / 3) % 2 == 0 { Variant::Triangulation } else { Variant::Sparse };
            Plan {
                trial: i,
                seed: s,
                config: GenConfig { n, crossing_fraction: FRACTIONS[i % 3], seed: s, variant },
            }
        })
        .collect()
}

fn run_one(p: &Plan, dump_dir: &Path) -> Result<Trial, Failure> {
    let emb = p.config.generate()?;
    let oracle = connectivity_flow(emb.graph());
    let found = vertex_connectivity(&emb, SearchOptions::default());
    let mut t = Trial {
        trial: p.trial,
        seed: p.seed,
        n: p.config.n,
        variant: match p.config.variant {
            Variant::Triangulation => "triangulation",
            Variant::Sparse => "sparse",
        },
        crossing_percent: (p.config.crossing_fraction * 100.0).round() as u32,
        crossings: emb.crossing_count(),
        kappa_cycle: None,
        kappa_oracle: oracle.kappa,
        method: None,
        cycle_len: None,
        error: None,
        agree: false,
    };
    match found {
        Ok(r) => {
            t.agree = r.kappa == oracle.kappa;
            t.kappa_cycle = Some(r.kappa);
            t.method = Some(r.method.as_str());
            t.cycle_len = r.cycle.map(|x| x.len());
        }
        Err(e) => t.error = Some(e.to_string()),
    }
    if !t.agree {
        let path = dump_dir.join(format!("compare-fail-{}-{}.json", p.seed, p.trial));
        fs::write(&path, emb.to_file().to_json())
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(t)
}

pub fn run(trials: usize, seed: u64, nmin: usize, nmax: usize, dump_dir: &Path) -> Result<Report, Failure> {
    let plans = plan(trials, seed, nmin, nmax);
    let trials = plans.par_iter().map(|p| run_one(p, dump_dir)).collect::<Result<Vec<_>, _>>()?;
    Ok(Report { trials })
}

impl Report {
    pub fn len(&self) -> usize {
        self.trials.len()
    }

    pub fn agreeing(&self) -> usize {
        self.trials.iter().filter(|t| t.agree).count()
    }

    pub fn disagreements(&self) -> Vec<String> {
        self.trials
            .iter()
            .filter(|t| !t.agree)
            .map(|t| {
                format!(
                    "trial {} (seed {}, n {}): cycle {:?}, oracle {}{}",
                    t.trial,
                    t.seed,
                    t.n,
                    t.kappa_cycle,
                    t.kappa_oracle,
                    t.error.as_deref().map(|e| format!(", error: {e}")).unwrap_or_default()
                )
            })
            .collect()
    }

    pub fn to_json(&self, seed: u64) -> Value {
        json!({
            "schema": 1,
            "seed": seed,
            "trials": self.len(),
            "agree": self.agreeing(),
            "results": serde_json::to_value(&self.trials).expect("trials serialize"),
        })
    }
}
