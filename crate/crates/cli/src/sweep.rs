//! Batch bound evaluation over factor lists and a k range, rendered as
//! CSV or JSON with deterministic row order.

use gdka_core::{
    cartesian_min_bound, corona_bound, corona_equality, edge_corona_bound, hierarchical_bound,
    lex_pcode_bound, lex_shift_bound, verify_bound, AllianceValue, BoundOutcome, BoundReport,
    TheoremId, VertexSet, SOLVER_LIMIT,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::errors::CliError;
use crate::input::{parse_id_list, LoadedGraph};

pub struct SweepConfig<'a> {
    pub theorems: &'a [TheoremId],
    pub lefts: &'a [LoadedGraph],
    pub rights: &'a [LoadedGraph],
    pub k_min: i64,
    pub k_max: i64,
    /// Distinguished-set override for hierarchical bounds, as an id list.
    pub set: Option<&'a str>,
    pub skip_exact: bool,
    pub cap: usize,
}

#[derive(Serialize)]
pub struct SweepRow {
    pub theorem: TheoremId,
    pub k: i64,
    pub g: String,
    pub h: String,
    pub report: BoundReport,
}

pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<SweepRow>, CliError> {
    if cfg.k_min > cfg.k_max {
        return Err(CliError::Usage(format!(
            "empty k range: {} > {}",
            cfg.k_min, cfg.k_max
        )));
    }
    for lg in cfg.lefts.iter().chain(cfg.rights.iter()) {
        if lg.graph.n() > SOLVER_LIMIT {
            return Err(CliError::Cap(format!(
                "factor {} has {} vertices, above the solver limit of {SOLVER_LIMIT}",
                lg.name,
                lg.graph.n()
            )));
        }
    }

    let mut cells = Vec::new();
    for &theorem in cfg.theorems {
        for (gi, _) in cfg.lefts.iter().enumerate() {
            for (hi, _) in cfg.rights.iter().enumerate() {
                for k in cfg.k_min..=cfg.k_max {
                    cells.push((theorem, gi, hi, k));
                }
            }
        }
    }

    let cap = if cfg.skip_exact { 0 } else { cfg.cap };
    let mut rows = cells
        .into_par_iter()
        .map(|(theorem, gi, hi, k)| evaluate_cell(cfg, theorem, gi, hi, k, cap))
        .collect::<Result<Vec<_>, CliError>>()?;
    rows.sort_by(|a, b| {
        (a.theorem.name(), a.k, &a.g, &a.h).cmp(&(b.theorem.name(), b.k, &b.g, &b.h))
    });
    Ok(rows)
}

fn evaluate_cell(
    cfg: &SweepConfig,
    theorem: TheoremId,
    gi: usize,
    hi: usize,
    k: i64,
    cap: usize,
) -> Result<SweepRow, CliError> {
    let left = &cfg.lefts[gi];
    let right = &cfg.rights[hi];
    let g = &left.graph;
    let h = &right.graph;
    let mut outcome: BoundOutcome = match theorem {
        TheoremId::Hier => {
            let u = match cfg.set {
                Some(ids) => parse_id_list(ids, g.n())?,
                None => left.set.clone().unwrap_or_else(|| VertexSet::full(g.n())),
            };
            hierarchical_bound(g, &u, h, k)?
        }
        TheoremId::CartesianMin => cartesian_min_bound(g, h, k)?,
        TheoremId::LexShift => lex_shift_bound(g, h, k)?,
        TheoremId::LexPcode => lex_pcode_bound(g, h, k)?,
        TheoremId::Corona => corona_bound(g, h, k)?,
        TheoremId::CoronaEq => corona_equality(g, h, k)?,
        TheoremId::EdgeCorona => edge_corona_bound(g, h, k)?,
    };
    if outcome.report.applicable {
        verify_bound(&mut outcome.report, &outcome.product, cap)?;
    }
    Ok(SweepRow {
        theorem,
        k,
        g: left.name.clone(),
        h: right.name.clone(),
        report: outcome.report,
    })
}

pub fn render_csv(rows: &[SweepRow]) -> Result<String, CliError> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record([
            "theorem",
            "k",
            "G",
            "H",
            "bound",
            "exact",
            "gap",
            "witness_valid",
            "sharp",
        ])
        .map_err(|e| CliError::Internal(e.to_string()))?;
    for row in rows {
        let r = &row.report;
        let skipped = r.exact_skipped == Some(true);
        let value_col = |v: Option<AllianceValue>| -> String {
            if !r.applicable {
                "na".to_string()
            } else if skipped {
                "skipped".to_string()
            } else {
                v.map_or_else(|| "na".to_string(), |x| x.to_string())
            }
        };
        let bound = if r.applicable {
            r.bound.map_or_else(|| "na".to_string(), |b| b.to_string())
        } else {
            "na".to_string()
        };
        let witness_valid = r
            .witness_valid
            .map_or_else(|| "na".to_string(), |b| b.to_string());
        let sharp = if !r.applicable {
            "na".to_string()
        } else if skipped {
            "skipped".to_string()
        } else {
            r.sharp.map_or_else(|| "na".to_string(), |b| b.to_string())
        };
        writer
            .write_record([
                row.theorem.name().to_string(),
                row.k.to_string(),
                row.g.clone(),
                row.h.clone(),
                bound,
                value_col(r.exact),
                value_col(r.gap),
                witness_valid,
                sharp,
            ])
            .map_err(|e| CliError::Internal(e.to_string()))?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| CliError::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Internal(e.to_string()))
}

pub fn render_json(rows: &[SweepRow]) -> Result<String, CliError> {
    serde_json::to_string_pretty(rows).map_err(|e| CliError::Internal(e.to_string()))
}
