//! `numberops`: number-operator expectations of a coherent excitation,
//! restricted to a region in both schemes.
//!
//! When the region's standard rank saturates the whole one-particle space
//! (2·|G| ≥ N), the standard local number operator already sees the full
//! particle content ‖g‖²/2 of the coherent state built from g. The
//! Newton-Wigner local number operator only ever sees the share of g
//! supported inside the region, which stays strictly below the total for
//! any proper region.
//!
//! CSV schema: `n, spacing, mass, region_start, region_len, seed,
//! displacement_norm, standard_number, nw_number, nw_share, total_number`.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use nwlab_core::lattice::Region;
use nwlab_core::localization::{nw_subspace_basis, standard_subspace_basis};
use nwlab_core::oneparticle::OneParticleVector;
use nwlab_core::weyl::number_expectation;

use crate::config::Config;
use crate::experiments::{core, lattice_cells, lattice_from, Check, CliError, RunOutcome};
use crate::output::{float_cell, int_cell};

pub fn run(cfg: &Config) -> Result<RunOutcome, CliError> {
    let spec = lattice_from(cfg, 32, 1.0)?;
    let n = spec.n_sites();
    let start: usize = cfg.get_or("region_start", "a site index", 0)?;
    let len: usize = cfg.require("region_len", "a positive region size")?;
    let seed: u64 = cfg.require("seed", "a 64-bit unsigned integer")?;
    let displacement_norm: f64 = cfg.get_or("displacement_norm", "a positive number", 2.0)?;
    let collapse_tolerance: f64 = cfg.get_or("collapse_tolerance", "a positive number", 1e-8)?;
    cfg.reject_unknown("numberops")?;
    if !(displacement_norm > 0.0 && displacement_norm.is_finite()) {
        return Err(cfg
            .error_at(
                "displacement_norm",
                "the displacement norm must be positive",
            )
            .into());
    }
    if 2 * len < n {
        return Err(cfg
            .error_at(
                "region_len",
                "standard collapse needs 2*region_len >= n so the region's \
                 standard rank saturates the one-particle space",
            )
            .into());
    }

    let region = core(Region::contiguous(n, start, len))?;

    // Seeded coherent amplitude g, scaled to the requested norm.
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let amps: Vec<Complex64> = (0..n)
        .map(|_| {
            let re: f64 = StandardNormal.sample(&mut rng);
            let im: f64 = StandardNormal.sample(&mut rng);
            Complex64::new(re, im)
        })
        .collect();
    let raw = core(OneParticleVector::new(spec, amps))?;
    let g_vec = raw.scale(Complex64::new(displacement_norm / raw.norm(), 0.0));
    let total = g_vec.norm_sqr() / 2.0;

    let st_basis = core(standard_subspace_basis(&spec, &region))?;
    let standard_number = core(number_expectation(&st_basis, &g_vec))?;
    let nw_basis = core(nw_subspace_basis(&spec, &region))?;
    let nw_number = core(number_expectation(&nw_basis, &g_vec))?;
    let nw_share: f64 = region
        .sites()
        .iter()
        .map(|&j| spec.spacing() * g_vec.amplitudes()[j].norm_sqr())
        .sum::<f64>()
        / 2.0;

    let mut checks = vec![
        Check::below(
            "standard number collapses to the total",
            (standard_number - total).abs(),
            collapse_tolerance,
        ),
        Check::below(
            "Newton-Wigner number equals the in-region share",
            (nw_number - nw_share).abs(),
            1e-10,
        ),
    ];
    let mut warnings = Vec::new();
    if len == n {
        warnings.push("region covers the whole lattice; the strict locality gap is vacuous".into());
    } else {
        checks.push(Check::above(
            "Newton-Wigner number stays below the total",
            total - nw_number,
            1e-12,
        ));
    }

    let mut row = lattice_cells(&spec);
    row.extend([
        int_cell(start),
        int_cell(len),
        seed.to_string(),
        float_cell(displacement_norm),
        float_cell(standard_number),
        float_cell(nw_number),
        float_cell(nw_share),
        float_cell(total),
    ]);

    Ok(RunOutcome {
        csv_name: "numberops".into(),
        header: [
            "n",
            "spacing",
            "mass",
            "region_start",
            "region_len",
            "seed",
            "displacement_norm",
            "standard_number",
            "nw_number",
            "nw_share",
            "total_number",
        ]
        .map(String::from)
        .to_vec(),
        rows: vec![row],
        checks,
        warnings,
        notes: vec![format!(
            "total {total:.6}; standard {standard_number:.6}; \
             newton-wigner {nw_number:.6} (share {nw_share:.6})"
        )],
    })
}
