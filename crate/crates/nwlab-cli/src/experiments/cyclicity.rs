//! `cyclicity`: subspace ranks of the two localization schemes for a
//! single region.
//!
//! The standard scheme hands a region 2|G| real generators whose complex
//! span doubles until it saturates the whole space at 2|G| ≥ N — the
//! finite-volume face of vacuum cyclicity. Newton-Wigner subspaces stay at
//! dimension |G| no matter what. The standard rank decision runs in
//! extended precision: the smallest nonzero directions sit far below what
//! double precision can resolve.
//!
//! CSV schema: `n, spacing, mass, region_start, region_len,
//! standard_rank, nw_rank` — one row per run.

use nwlab_core::lattice::Region;
use nwlab_core::localization::{complex_rank, nw_subspace_basis, standard_rank};

use crate::config::Config;
use crate::experiments::{core, lattice_cells, lattice_from, Check, CliError, RunOutcome};
use crate::output::int_cell;

pub fn run(cfg: &Config) -> Result<RunOutcome, CliError> {
    let spec = lattice_from(cfg, 32, 1.0)?;
    let start: usize = cfg.get_or("region_start", "a site index", 0)?;
    let len: usize = cfg.require("region_len", "a positive region size")?;
    cfg.reject_unknown("cyclicity")?;

    let n = spec.n_sites();
    let region = core(Region::contiguous(n, start, len))?;

    let standard = core(standard_rank(&spec, &region, None))?;
    let nw_basis = core(nw_subspace_basis(&spec, &region))?;
    let nw = core(complex_rank(&nw_basis, None))?;
    let expected_standard = (2 * len).min(n);

    let mut row = lattice_cells(&spec);
    row.extend([
        int_cell(start),
        int_cell(len),
        int_cell(standard),
        int_cell(nw),
    ]);

    let checks = vec![
        Check::equals(
            "standard-scheme rank doubles until saturation",
            standard,
            expected_standard,
        ),
        Check::equals("Newton-Wigner rank stays at the region size", nw, len),
    ];

    Ok(RunOutcome {
        csv_name: "cyclicity".into(),
        header: [
            "n",
            "spacing",
            "mass",
            "region_start",
            "region_len",
            "standard_rank",
            "nw_rank",
        ]
        .map(String::from)
        .to_vec(),
        rows: vec![row],
        checks,
        warnings: Vec::new(),
        notes: vec![format!(
            "standard rank {standard} (want {expected_standard}), Newton-Wigner rank {nw} (want {len})"
        )],
    })
}
