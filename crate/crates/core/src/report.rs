//! Deterministic per-weight reports shared by the CLI JSON and CSV outputs.

use serde::Serialize;

use crate::depth::{dmatrix, rank_law};
use crate::error::Result;
use crate::numeric::{verify_relation_numeric, RelationCertificate};
use crate::rat::rat_to_string;
use crate::rels::{normalized_relation, relations, verify_exactness, ExactnessReport};
use crate::sym::{admissible_space, verify_lemma_sym, verify_membership};

pub const SCHEMA_VERSION: &str = "1";

pub const CSV_HEADER: &str = "weight,generators,dim_w_plus,dim_w_minus,rank,predicted_rank,\
relation_count,cert_d_then_v_zero,cert_j_full_rank,cert_middle_exact,cert_xi_basis";

#[derive(Debug, Clone, Serialize)]
pub struct LemmaBlock {
    /// identity (e) of the symmetrization lemma at K = (N-1)/2
    pub lemma_identity: bool,
    pub admissible_dim: usize,
    /// admissible dimension equals dim W^+_{N-1} + dim W^-_{N+1}
    pub dims_match: bool,
    /// every admissible C decomposes with p in W^+, q in W^-, and the
    /// three-way identity holds
    pub membership: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct WeightBlock {
    pub weight: i64,
    pub generators: usize,
    /// rationals as "num/den" strings; entries here are always integers
    pub dmatrix: Vec<Vec<String>>,
    pub rank: usize,
    pub predicted_rank: usize,
    pub dim_w_plus: usize,
    pub dim_w_minus: usize,
    /// integer-normalized relation basis, coefficients over odd r ascending
    pub relations: Vec<Vec<String>>,
    pub exactness: ExactnessReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lemmas: Option<LemmaBlock>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numeric: Option<Vec<RelationCertificate>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: String,
    pub weights: Vec<WeightBlock>,
}

pub fn lemma_block(n: i64) -> Result<LemmaBlock> {
    let k = (n - 1) / 2;
    let lemma_identity = if k >= 2 { verify_lemma_sym(k)? } else { true };
    let adm = admissible_space(n)?;
    let rep = verify_exactness(n)?;
    Ok(LemmaBlock {
        lemma_identity,
        admissible_dim: adm.len(),
        dims_match: adm.len() == rep.dim_w_plus + rep.dim_w_minus,
        membership: verify_membership(n)?,
    })
}

pub fn weight_block(
    n: i64,
    with_lemmas: bool,
    with_numeric: bool,
    eps: f64,
) -> Result<WeightBlock> {
    let m = dmatrix(n)?;
    let (rank, predicted_rank) = rank_law(n)?;
    let exactness = verify_exactness(n)?;
    let rels = relations(n)?;
    let numeric = if with_numeric {
        let certs = rels
            .iter()
            .map(|r| verify_relation_numeric(n, r, eps))
            .collect::<Result<Vec<_>>>()?;
        Some(certs)
    } else {
        None
    };
    Ok(WeightBlock {
        weight: n,
        generators: m.rows(),
        dmatrix: (0..m.rows())
            .map(|i| m.row(i).iter().map(rat_to_string).collect())
            .collect(),
        rank,
        predicted_rank,
        dim_w_plus: exactness.dim_w_plus,
        dim_w_minus: exactness.dim_w_minus,
        relations: rels
            .iter()
            .map(|r| normalized_relation(r).iter().map(rat_to_string).collect())
            .collect(),
        exactness,
        lemmas: if with_lemmas { Some(lemma_block(n)?) } else { None },
        numeric,
    })
}

impl WeightBlock {
    pub fn all_pass(&self) -> bool {
        self.rank == self.predicted_rank
            && self.exactness.all_pass()
            && self
                .lemmas
                .as_ref()
                .map(|l| l.lemma_identity && l.dims_match && l.membership)
                .unwrap_or(true)
            && self
                .numeric
                .as_ref()
                .map(|c| c.iter().all(|x| x.passes))
                .unwrap_or(true)
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.weight,
            self.generators,
            self.dim_w_plus,
            self.dim_w_minus,
            self.rank,
            self.predicted_rank,
            self.relations.len(),
            self.exactness.cert_d_then_v_zero,
            self.exactness.cert_j_full_rank,
            self.exactness.cert_middle_exact,
            self.exactness.cert_xi_basis,
        )
    }
}

impl Report {
    pub fn new(weights: Vec<WeightBlock>) -> Self {
        Report {
            schema_version: SCHEMA_VERSION.to_string(),
            weights,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for w in &self.weights {
            out.push_str(&w.csv_row());
            out.push('\n');
        }
        out
    }
}
