//! JSON-serializable records emitted by the CLI. Element values are the integer
//! encodings used by the core field type.

use prm_core::separation::{ContradictionReport, RegimeOutcome};
use prm_core::{CodeParams, Elem, Flat, GenMatrix, HomPoly, ProjPoint};
use serde::{Deserialize, Serialize};

pub fn encode(coords: &[Elem]) -> Vec<u32> {
    coords.iter().map(|x| x.value()).collect()
}

pub fn encode_points(points: &[ProjPoint]) -> Vec<Vec<u32>> {
    points.iter().map(|p| encode(p.coords())).collect()
}

pub fn encode_matrix(rows: &[Vec<Elem>]) -> Vec<Vec<u32>> {
    rows.iter().map(|r| encode(r)).collect()
}

pub fn encode_flat(flat: &Flat) -> Vec<Vec<u32>> {
    encode_matrix(flat.basis())
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ParamsRecord {
    pub q: u32,
    pub m: usize,
    pub nu: u32,
    pub n: u64,
    pub k: u64,
    pub d: u64,
    pub r: u64,
    pub s: u64,
}

impl From<CodeParams> for ParamsRecord {
    fn from(p: CodeParams) -> Self {
        ParamsRecord {
            q: p.q,
            m: p.m,
            nu: p.nu,
            n: p.n,
            k: p.k,
            d: p.d,
            r: p.r,
            s: p.s,
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct MatrixRecord {
    pub q: u32,
    pub m: usize,
    pub nu: u32,
    /// exponent vector of each row's monomial
    pub rows: Vec<Vec<u32>>,
    /// canonical coordinates of each column's point
    pub points: Vec<Vec<u32>>,
    pub entries: Vec<Vec<u32>>,
}

impl From<&GenMatrix> for MatrixRecord {
    fn from(g: &GenMatrix) -> Self {
        MatrixRecord {
            q: g.q,
            m: g.m,
            nu: g.nu,
            rows: g.monomials.clone(),
            points: encode_points(&g.points),
            entries: encode_matrix(&g.entries),
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Match,
    Mismatch,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Match => "MATCH",
            Status::Mismatch => "MISMATCH",
            Status::Skipped => "SKIPPED",
        }
    }
}

/// One `(q, m, nu)` row of formula-versus-oracle results. `d_search` is absent
/// when the exhaustive search would exceed the budget.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct CheckRow {
    pub q: u32,
    pub m: usize,
    pub nu: u32,
    pub n: u64,
    pub k_formula: u64,
    pub k_rank: u64,
    pub d_formula: u64,
    pub d_search: Option<u64>,
    pub status: Status,
}

impl CheckRow {
    pub fn k_matches(&self) -> bool {
        self.k_formula == self.k_rank
    }

    pub fn d_matches(&self) -> Option<bool> {
        self.d_search.map(|d| d == self.d_formula)
    }
}

pub const SWEEP_CSV_HEADER: &str = "q,m,nu,n,k_formula,k_rank,d_formula,d_search,status";

impl CheckRow {
    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.q,
            self.m,
            self.nu,
            self.n,
            self.k_formula,
            self.k_rank,
            self.d_formula,
            self.d_search.map_or(String::new(), |d| d.to_string()),
            self.status.as_str()
        )
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct TermRecord {
    pub coeff: u32,
    pub exponents: Vec<u32>,
}

pub fn encode_poly(poly: &HomPoly) -> Vec<TermRecord> {
    poly.terms()
        .map(|(e, c)| TermRecord {
            coeff: c.value(),
            exponents: e.to_vec(),
        })
        .collect()
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct SeparatorRecord {
    /// 1-based index into the instance
    pub target: usize,
    pub point: Vec<u32>,
    /// basis matrices of V_0, ..., V_{m-1}
    pub chain: Vec<Vec<Vec<u32>>>,
    pub hyperplane: Vec<Vec<u32>>,
    pub form: Vec<TermRecord>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct SeparationRecord {
    pub q: u32,
    pub m: usize,
    pub points: Vec<Vec<u32>>,
    pub separators: Vec<SeparatorRecord>,
    /// `table[i][j] = G_i(P_j)` for each emitted separator `i`
    pub table: Vec<Vec<u32>>,
    pub verified: bool,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct RegimeRecord {
    pub s: u32,
    pub t: usize,
    pub threshold: usize,
    pub outcome: String,
}

impl From<&ContradictionReport> for RegimeRecord {
    fn from(r: &ContradictionReport) -> Self {
        let outcome = match &r.outcome {
            RegimeOutcome::VanishesEverywhere => "vanishes-everywhere",
            RegimeOutcome::Holds => "holds",
            RegimeOutcome::Counterexample(_) => "counterexample",
        };
        RegimeRecord {
            s: r.s,
            t: r.t,
            threshold: r.threshold,
            outcome: outcome.to_string(),
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct GapRecord {
    pub q: u32,
    pub m: usize,
    pub nu: u32,
    pub seed: Option<u64>,
    pub attempts: usize,
    pub poly: Vec<TermRecord>,
    pub t: usize,
    /// instance order; the last point is the distinguished one
    pub points: Vec<Vec<u32>>,
    pub product: Vec<TermRecord>,
    pub product_degree: u32,
    pub degree_bound: u32,
    pub within_bound: bool,
    pub zero_count: usize,
    pub nonvanishing: Vec<Vec<u32>>,
    pub isolated: bool,
    pub regime: Option<RegimeRecord>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct FlatsRecord {
    pub q: u32,
    pub m: usize,
    pub flat: Vec<Vec<u32>>,
    pub dim: usize,
    pub count: usize,
    pub formula: usize,
    pub partition: bool,
    pub status: Status,
    pub extensions: Vec<Vec<Vec<u32>>>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct DegreeWeight {
    pub nu: u32,
    pub min_weight: usize,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct Lemma4Record {
    pub q: u32,
    pub m: usize,
    pub weights: Vec<DegreeWeight>,
    pub holds: bool,
}
