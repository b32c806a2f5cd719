//! `entanglement`: the Gaussian restriction of the vacuum to a region's
//! mode family, in both schemes.
//!
//! Newton-Wigner restrictions are pure (all symplectic eigenvalues 1/2)
//! and carry exactly zero logarithmic negativity against the complement:
//! the vacuum is a product state over a Newton-Wigner split. Standard
//! restrictions are mixed and entangled, most visibly at small mass.
//!
//! CSV schema: `n, spacing, mass, region_start, region_len, scheme,
//! entropy, log_negativity, max_nu` — one row per scheme.

use nwlab_core::gaussian::{
    build_covariance, covariance_from_quadratures, entanglement_entropy, log_negativity,
    QuadratureFamily,
};
use nwlab_core::lattice::Region;
use nwlab_core::localization::{nw_subspace_basis, standard_subspace_basis};

use crate::config::Config;
use crate::experiments::{core, lattice_cells, lattice_from, Check, CliError, RunOutcome};
use crate::output::{float_cell, int_cell};

pub fn run(cfg: &Config) -> Result<RunOutcome, CliError> {
    let spec = lattice_from(cfg, 64, 0.1)?;
    let n = spec.n_sites();
    let start: usize = cfg.get_or("region_start", "a site index", 0)?;
    let len: usize = cfg.get_or("region_len", "a positive region size", n / 2)?;
    let max_nw_entropy: f64 = cfg.get_or("max_nw_entropy", "a positive number", 1e-10)?;
    let min_standard_entropy: f64 = cfg.get_or("min_standard_entropy", "a positive number", 0.1)?;
    let min_standard_negativity: f64 =
        cfg.get_or("min_standard_negativity", "a positive number", 0.01)?;
    cfg.reject_unknown("entanglement")?;
    if len >= n {
        return Err(cfg
            .error_at(
                "region_len",
                "the split needs a proper region with a nonempty complement",
            )
            .into());
    }

    let region = core(Region::contiguous(n, start, len))?;
    let complement = region.complement();

    // Newton-Wigner restriction and split
    let nw_modes = core(nw_subspace_basis(&spec, &region))?;
    let nw_cov = core(build_covariance(&spec, &nw_modes))?;
    let nw_entropy = entanglement_entropy(&nw_cov);
    let nw_max_nu = nw_cov.nu().iter().cloned().fold(0.0_f64, f64::max);
    let nw_a = core(QuadratureFamily::from_complex_modes(&spec, &nw_modes))?;
    let nw_b = core(QuadratureFamily::from_complex_modes(
        &spec,
        &core(nw_subspace_basis(&spec, &complement))?,
    ))?;
    let nw_ln = core(log_negativity(&nw_a, &nw_b))?;

    // standard restriction and split
    let st_a = core(QuadratureFamily::from_quadratures(
        &spec,
        core(standard_subspace_basis(&spec, &region))?,
    ))?;
    let st_cov = core(covariance_from_quadratures(&st_a))?;
    let st_entropy = entanglement_entropy(&st_cov);
    let st_max_nu = st_cov.nu().iter().cloned().fold(0.0_f64, f64::max);
    let st_b = core(QuadratureFamily::from_quadratures(
        &spec,
        core(standard_subspace_basis(&spec, &complement))?,
    ))?;
    let st_ln = core(log_negativity(&st_a, &st_b))?;

    let mut rows = Vec::with_capacity(2);
    for (scheme, entropy, ln, max_nu) in [
        ("standard", st_entropy, st_ln, st_max_nu),
        ("newton-wigner", nw_entropy, nw_ln, nw_max_nu),
    ] {
        let mut row = lattice_cells(&spec);
        row.extend([
            int_cell(start),
            int_cell(len),
            scheme.to_string(),
            float_cell(entropy),
            float_cell(ln),
            float_cell(max_nu),
        ]);
        rows.push(row);
    }

    let checks = vec![
        Check::below(
            "Newton-Wigner restriction entropy",
            nw_entropy,
            max_nw_entropy,
        ),
        Check::exactly_zero("Newton-Wigner log-negativity", nw_ln),
        Check::above(
            "standard restriction entropy",
            st_entropy,
            min_standard_entropy,
        ),
        Check::above("standard log-negativity", st_ln, min_standard_negativity),
    ];

    Ok(RunOutcome {
        csv_name: "entanglement".into(),
        header: [
            "n",
            "spacing",
            "mass",
            "region_start",
            "region_len",
            "scheme",
            "entropy",
            "log_negativity",
            "max_nu",
        ]
        .map(String::from)
        .to_vec(),
        rows,
        checks,
        warnings: Vec::new(),
        notes: vec![
            format!("standard: entropy {st_entropy:.6}, log-negativity {st_ln:.6}"),
            format!("newton-wigner: entropy {nw_entropy:.3e}, log-negativity {nw_ln:.1}"),
        ],
    })
}
