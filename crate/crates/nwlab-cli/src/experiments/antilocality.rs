//! `antilocality`: smallest singular value of the off-region block of
//! H^p, swept over every contiguous proper region and the four powers
//! p ∈ {1, −1, 1/2, −1/2}.
//!
//! A strictly positive defect for every proper region means no data
//! supported inside the region stays inside under H^p — the operator is
//! anti-local. The defect floor shrinks with growing mass, so the default
//! lattice uses m = 0.5 where the floor clears 1e-8 with a wide margin.
//!
//! CSV schema: `n, spacing, mass, power, region_start, region_len,
//! defect` — one row per region and power.

use nwlab_core::lattice::Region;
use nwlab_core::localization::antilocality_defect;

use crate::config::Config;
use crate::experiments::{core, lattice_cells, lattice_from, Check, CliError, RunOutcome};
use crate::output::{float_cell, int_cell};

const POWERS: [f64; 4] = [1.0, -1.0, 0.5, -0.5];

pub fn run(cfg: &Config) -> Result<RunOutcome, CliError> {
    let spec = lattice_from(cfg, 16, 0.5)?;
    let min_defect: f64 = cfg.get_or("min_defect", "a positive number", 1e-8)?;
    cfg.reject_unknown("antilocality")?;

    let n = spec.n_sites();
    let mut rows = Vec::with_capacity(n * (n - 1) * POWERS.len());
    let mut floor = f64::INFINITY;
    let mut floor_at = (0.0, 0, 0);
    for start in 0..n {
        for len in 1..n {
            let region = core(Region::contiguous(n, start, len))?;
            for &power in &POWERS {
                let defect = core(antilocality_defect(&spec, power, &region))?;
                if defect < floor {
                    floor = defect;
                    floor_at = (power, start, len);
                }
                let mut row = lattice_cells(&spec);
                row.extend([
                    float_cell(power),
                    int_cell(start),
                    int_cell(len),
                    float_cell(defect),
                ]);
                rows.push(row);
            }
        }
    }

    let checks = vec![Check::above(
        "anti-locality defect positive on every contiguous proper region",
        floor,
        min_defect,
    )];

    Ok(RunOutcome {
        csv_name: "antilocality".into(),
        header: [
            "n",
            "spacing",
            "mass",
            "power",
            "region_start",
            "region_len",
            "defect",
        ]
        .map(String::from)
        .to_vec(),
        rows,
        checks,
        warnings: Vec::new(),
        notes: vec![format!(
            "defect floor {floor:.3e} at power {}, region start {}, len {}",
            floor_at.0, floor_at.1, floor_at.2
        )],
    })
}
