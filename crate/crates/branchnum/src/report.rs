//! Human-readable and JSON views of engine results.
//!
//! JSON field names are stable: `n`, `q`, `branch_diff`, `branch_lin`,
//! `classification`, `algorithm`, `vectors_evaluated`, `field_mults`,
//! `field_mults_full`, `counters_deterministic`, `elapsed`. Work counters
//! are emitted as decimal strings so that arbitrarily large counts survive
//! any JSON parser untruncated.

use serde_json::{json, Value};

use crate::branch::BranchReport;
use crate::cost::CostEstimate;
use crate::field::Field;

/// Which branch numbers a report is about, for labelling text output.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportKind {
    Differential,
    Linear,
    Both,
}

pub fn report_to_json(r: &BranchReport) -> Value {
    json!({
        "n": r.n,
        "q": r.q,
        "branch_diff": r.branch_diff,
        "branch_lin": r.branch_lin,
        "classification": r.classification.map(|c| c.as_str()),
        "algorithm": r.algorithm.as_str(),
        "vectors_evaluated": r.vectors_evaluated.to_string(),
        "field_mults": r.field_mults.to_string(),
        "field_mults_full": r.field_mults_full.to_string(),
        "counters_deterministic": r.counters_deterministic,
        "elapsed": r.elapsed.as_secs_f64(),
    })
}

fn field_label(field: &Field) -> String {
    if field.is_binary() {
        format!(
            "GF(2^{}), defining polynomial 0x{:X}",
            field.degree(),
            field.poly_encoded()
        )
    } else {
        format!(
            "GF({}^{}), defining polynomial code {}",
            field.characteristic(),
            field.degree(),
            field.poly_encoded()
        )
    }
}

pub fn report_to_text(
    r: &BranchReport,
    field: &Field,
    kind: ReportKind,
    source: Option<&str>,
) -> String {
    let mut out = String::new();
    if let Some(src) = source {
        out.push_str(&format!("matrix: {src}\n"));
    }
    out.push_str(&format!("field: {}\n", field_label(field)));
    out.push_str(&format!("matrix order: {}\n", r.n));
    out.push_str(&format!("algorithm: {}\n", r.algorithm));
    match kind {
        ReportKind::Differential => {
            out.push_str(&format!("differential branch number: {}\n", r.branch_diff));
        }
        ReportKind::Linear => {
            out.push_str(&format!(
                "linear branch number: {}\n",
                r.branch_lin.unwrap_or(r.branch_diff)
            ));
        }
        ReportKind::Both => {
            out.push_str(&format!("differential branch number: {}\n", r.branch_diff));
            if let Some(lin) = r.branch_lin {
                out.push_str(&format!("linear branch number: {lin}\n"));
            }
        }
    }
    out.push_str(&format!("vectors evaluated: {}\n", r.vectors_evaluated));
    out.push_str(&format!(
        "field multiplications: {} (full-product equivalent {})\n",
        r.field_mults, r.field_mults_full
    ));
    if !r.counters_deterministic {
        out.push_str("work counters are approximate under sharded execution\n");
    }
    out.push_str(&format!("elapsed: {:.3}s\n", r.elapsed.as_secs_f64()));

    let class = match r.classification {
        Some(c) => c.as_str().to_string(),
        None => "undetermined; linear branch number required".to_string(),
    };
    let headline = match kind {
        ReportKind::Linear => r.branch_lin.unwrap_or(r.branch_diff),
        _ => r.branch_diff,
    };
    let label = if kind == ReportKind::Linear { "linear branch number" } else { "branch number" };
    out.push_str(&format!("{label}: {headline} ({class})\n"));
    out
}

pub fn cost_to_json(c: &CostEstimate) -> Value {
    json!({
        "n": c.n,
        "q": c.q,
        "mults_new": c.mults_new.to_string(),
        "mults_new_involutory": c.mults_new_involutory.to_string(),
        "mults_exhaustive": c.mults_exhaustive.to_string(),
        "log2_new": c.log2_new,
        "log2_exhaustive": c.log2_exhaustive,
    })
}

pub fn cost_to_text(c: &CostEstimate) -> String {
    format!(
        "field multiplications for n = {}, q = {}\n\
         \x20 exhaustive approach: {} (2^{:.2})\n\
         \x20 representative scan: {} (2^{:.2})\n\
         \x20 involutory/Hadamard: {} (2^{:.2})\n",
        c.n,
        c.q,
        c.mults_exhaustive,
        c.log2_exhaustive,
        c.mults_new,
        c.log2_new,
        c.mults_new_involutory,
        crate::cost::log2_biguint(&c.mults_new_involutory),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::branch::{branch_both, branch_new, BranchAlgo, BranchOptions};
    use crate::samples;

    #[test]
    fn json_round_trips() {
        let m = samples::aes_mixcolumns();
        let rep = branch_both(&m, BranchAlgo::New, &BranchOptions::default()).unwrap();
        let value = report_to_json(&rep);
        let text = serde_json::to_string(&value).unwrap();
        let back: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(back, value);
        assert_eq!(back["n"], 4);
        assert_eq!(back["q"], 256);
        assert_eq!(back["branch_diff"], 5);
        assert_eq!(back["branch_lin"], 5);
        assert_eq!(back["classification"], "MDS");
        assert_eq!(
            back["vectors_evaluated"].as_str().unwrap().parse::<u64>().unwrap(),
            rep.vectors_evaluated
        );
        assert_eq!(
            back["field_mults"].as_str().unwrap().parse::<u64>().unwrap(),
            rep.field_mults
        );
    }

    #[test]
    fn text_report_headline() {
        let m = samples::low_branch_8x8();
        let rep = branch_both(&m, BranchAlgo::New, &BranchOptions::default()).unwrap();
        let text = report_to_text(&rep, m.field(), ReportKind::Both, Some("demo.mat"));
        assert!(text.starts_with("matrix: demo.mat\n"));
        assert!(text.ends_with(&format!("branch number: {} (Other)\n", rep.branch_diff)));
    }

    #[test]
    fn undetermined_classification_spelled_out() {
        let m = samples::aes_mixcolumns();
        let mut rep = branch_new(&m).unwrap();
        rep.branch_diff = rep.n; // forced into the ambiguous band
        rep.classification = None;
        let text = report_to_text(&rep, m.field(), ReportKind::Differential, None);
        assert!(text.contains("undetermined"));
    }

    #[test]
    fn cost_text_mentions_both_scales() {
        let est = CostEstimate::compute(4, 256);
        let text = cost_to_text(&est);
        assert!(text.contains("2^36.00"));
        assert!(text.contains("2^13.58"));

        let value = cost_to_json(&est);
        assert_eq!(value["mults_new"], "12240");
        assert_eq!(value["mults_exhaustive"], "68719476736");
    }
}
