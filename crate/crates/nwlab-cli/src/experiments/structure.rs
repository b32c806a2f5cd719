//! `structure-check`: the defining identities of the one-particle
//! structure on a seeded random sample.
//!
//! CSV schema: `n, spacing, mass, tolerance, symplectic_residual,
//! re_pairing_residual, intertwining_residual, complex_rank, pass` —
//! one row per run.

use nwlab_core::oneparticle::verify_one_particle_structure;

use crate::config::Config;
use crate::experiments::{core, lattice_cells, lattice_from, Check, CliError, RunOutcome};
use crate::output::{float_cell, int_cell};

pub fn run(cfg: &Config) -> Result<RunOutcome, CliError> {
    let spec = lattice_from(cfg, 64, 1.0)?;
    let tolerance: f64 = cfg.get_or("tolerance", "a positive number", 1e-10)?;
    cfg.reject_unknown("structure-check")?;
    if !(tolerance > 0.0 && tolerance.is_finite()) {
        return Err(cfg
            .error_at("tolerance", "tolerance must be positive")
            .into());
    }

    let report = core(verify_one_particle_structure(&spec, tolerance))?;

    let mut row = lattice_cells(&spec);
    row.extend([
        float_cell(tolerance),
        float_cell(report.symplectic_residual),
        float_cell(report.mu_residual),
        float_cell(report.intertwining_residual),
        int_cell(report.complex_rank),
        report.pass.to_string(),
    ]);

    let checks = vec![
        Check::below(
            "symplectic pairing reproduced by the generator map",
            report.symplectic_residual,
            tolerance,
        ),
        Check::below(
            "Re-pairing reproduced by the generator map",
            report.mu_residual,
            tolerance,
        ),
        Check::below(
            "time evolution intertwined with the one-particle dynamics",
            report.intertwining_residual,
            tolerance,
        ),
        Check::equals(
            "generator images complex-span the one-particle space",
            report.complex_rank,
            spec.n_sites(),
        ),
    ];

    Ok(RunOutcome {
        csv_name: "structure-check".into(),
        header: [
            "n",
            "spacing",
            "mass",
            "tolerance",
            "symplectic_residual",
            "re_pairing_residual",
            "intertwining_residual",
            "complex_rank",
            "pass",
        ]
        .map(String::from)
        .to_vec(),
        rows: vec![row],
        checks,
        warnings: Vec::new(),
        notes: vec![format!(
            "worst residual {:.3e} against tolerance {tolerance:.1e}",
            report
                .symplectic_residual
                .max(report.mu_residual)
                .max(report.intertwining_residual)
        )],
    })
}
