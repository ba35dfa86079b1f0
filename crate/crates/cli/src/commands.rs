//! The three commands, each turning a [`RunConfig`] into a [`Report`].

use bgbc_core::invariants::{basis_character, invariant_table, product_character, Comparison, InvariantContext};
use bgbc_core::vecfields::parse_vector_field;
use bgbc_core::verify::{run_suite, SuiteConfig};
use bgbc_core::{Flavor, Rational, SpaceCache};

use crate::config::RunConfig;
use crate::report::{Dims, Grade, Property, Report, Status, TableRow};

pub fn cmd_basis(cfg: RunConfig) -> Result<Report, String> {
    let bound = cfg.gamma_bound;
    let cache = SpaceCache::new(cfg.flavor(), cfg.n, bound).map_err(|e| e.to_string())?;
    let mut tables = Vec::new();
    for k in 0..=cfg.k_max {
        for l in cache.charges(k) {
            if cfg.in_window(l) {
                let dims = Dims { basis: cache.get(k, l).dim(), ..Dims::default() };
                tables.push(TableRow { grade: Grade { k, l }, dims, comparison: None, witness: None });
            }
        }
    }
    let mut properties = Vec::new();
    let mut header = vec![format!(
        "weight spaces, {} flavor, N = {}, k <= {}",
        if cfg.flavor() == Flavor::Plus { "PLUS" } else { "FULL" },
        cfg.n,
        cfg.k_max
    )];
    if cfg.flavor() == Flavor::Plus && cfg.k_max >= 0 {
        let enumerated = basis_character(cfg.n, cfg.k_max).map_err(|e| e.to_string())?;
        let product = product_character(cfg.n, cfg.k_max);
        let failure = enumerated
            .keys()
            .chain(product.keys())
            .find(|g| enumerated.get(g) != product.get(g))
            .map(|g| format!("grade {g:?}: enumerated {:?}, product {:?}", enumerated.get(g), product.get(g)));
        properties.push(Property::verdict("basis.product_character", failure));
    } else if cfg.flavor() == Flavor::Full {
        header.push(format!("gamma_(-1) degree <= {}", bound.unwrap_or_default()));
    }
    Ok(Report { config: cfg, header, tables, properties })
}

pub fn cmd_invariants(cfg: RunConfig) -> Result<Report, String> {
    let g1 = match &cfg.g1 {
        Some(text) => Some(parse_vector_field::<Rational>(text, cfg.n).map_err(|e| e.to_string())?),
        None => None,
    };
    let ctx = InvariantContext::new(cfg.algebra(), cfg.n, g1).map_err(|e| e.to_string())?;
    let rows = invariant_table(&ctx, cfg.k_max, cfg.charges()).map_err(|e| e.to_string())?;
    let equality_gated = cfg.n == 2;
    let mut header = vec![
        format!("invariants of type {} for N = {}, k <= {}", cfg.algebra(), cfg.n, cfg.k_max),
        format!("g1 = {}", ctx.g1),
    ];
    if !equality_gated {
        header.push("evidence only: equality with the generated subalgebra is not asserted at this N".into());
    }
    let mut tables = Vec::with_capacity(rows.len());
    let mut not_contained = None;
    let mut mismatch = None;
    let mut gaps = 0;
    for row in &rows {
        let r = &row.report;
        let (k, l) = r.grade;
        let witness = match &row.comparison {
            Comparison::Match => None,
            Comparison::Gap { witness } => {
                gaps += 1;
                Some(witness.clone())
            }
            Comparison::NotContained { witness } => {
                not_contained.get_or_insert_with(|| format!("W[{k},{l}]: {witness} is not invariant"));
                Some(witness.clone())
            }
        };
        if row.comparison != Comparison::Match {
            mismatch.get_or_insert_with(|| format!("W[{k},{l}]: {}", row.comparison));
        }
        tables.push(TableRow {
            grade: Grade { k, l },
            dims: Dims {
                basis: r.dim_basis,
                g0_inv: Some(r.dim_g0_invariants),
                full_inv: Some(r.dim_full_invariants),
                oracle: r.dim_oracle_span,
            },
            comparison: Some(row.comparison.to_string()),
            witness,
        });
    }
    let mut properties = vec![Property::verdict("invariants.containment", not_contained)];
    if equality_gated {
        properties.push(Property::verdict("invariants.equality", mismatch));
    } else {
        properties.push(Property {
            name: "invariants.gaps".into(),
            status: Status::Info,
            witness: Some(format!("{gaps} of {} grades", rows.len())),
        });
    }
    Ok(Report { config: cfg, header, tables, properties })
}

pub fn cmd_verify(cfg: RunConfig) -> Result<Report, String> {
    let suite = SuiteConfig { seed: cfg.seed, inject_sign_flip: cfg.inject_sign_flip };
    let properties = run_suite(&suite)
        .into_iter()
        .map(|r| Property {
            name: r.name.to_string(),
            status: if r.passed { Status::Pass } else { Status::Fail },
            witness: r.witness,
        })
        .collect();
    let header = vec![format!("property suite, seed {}", cfg.seed)];
    Ok(Report { config: cfg, header, tables: Vec::new(), properties })
}
