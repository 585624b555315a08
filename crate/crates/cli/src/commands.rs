//! Subcommand implementations. Each returns the text to print on success; a
//! failure carries its exit code and, for verification mismatches, the report.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use prm_core::prm::{generator_matrix, rank_gf, CodeParams, PrmError};
use prm_core::sample::{random_flat, sample_sparse_support};
use prm_core::separation::{
    contradiction_report, evaluation_table, gap_witness, separator_for, SeparationError,
    SeparationInstance,
};
use prm_core::{Field, HomPoly, ProjPoint, ProjectiveSpace};
use rand_xoshiro::rand_core::SeedableRng;
use rand_xoshiro::SplitMix64;
use serde::Serialize;
use thiserror::Error;

use crate::formats::{emit_matrix_csv, emit_points, emit_poly, format_coords, parse_points, parse_poly};
use crate::records::*;
use crate::search::{default_partitions, min_weight_parallel};

pub const DEFAULT_BUDGET: u64 = 2_000_000;
pub const DEFAULT_ATTEMPTS: usize = 20_000;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Budget(String),
    #[error("{message}")]
    Mismatch { report: String, message: String },
    #[error("{0}")]
    Infeasible(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Mismatch { .. } => 4,
            CliError::Infeasible(_) => 5,
        }
    }

    /// Output to print before the diagnostic.
    pub fn report(&self) -> Option<&str> {
        match self {
            CliError::Mismatch { report, .. } => Some(report),
            _ => None,
        }
    }
}

fn invalid(e: impl ToString) -> CliError {
    CliError::Invalid(e.to_string())
}

impl From<PrmError> for CliError {
    fn from(e: PrmError) -> Self {
        match e {
            PrmError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<SeparationError> for CliError {
    fn from(e: SeparationError) -> Self {
        match e {
            SeparationError::NoAvoidingExtension { .. } => CliError::Mismatch {
                report: String::new(),
                message: e.to_string(),
            },
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "prm", version, about = "Projective Reed-Muller code toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
pub struct FieldArgs {
    /// Field order (a prime power)
    #[arg(long, conflicts_with_all = ["p", "e"])]
    pub q: Option<u64>,
    /// Field characteristic, with --e
    #[arg(long, requires = "e")]
    pub p: Option<u32>,
    /// Extension degree, with --p
    #[arg(long, requires = "p")]
    pub e: Option<u32>,
}

impl FieldArgs {
    pub fn field(&self) -> Result<Field, CliError> {
        match (self.q, self.p, self.e) {
            (Some(q), _, _) => Field::from_order(q).map_err(invalid),
            (None, Some(p), Some(e)) => Field::new(p, e).map_err(invalid),
            _ => Err(invalid("give the field as --q or as --p and --e")),
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Closed-form n, k, d, r, s
    Params {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        nu: u32,
    },
    /// Recompute k by rank and d by exhaustive search and compare
    Verify {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        nu: u32,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Separating hyperplanes for a point set
    Separate {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        m: usize,
        /// Point file, one point per line
        #[arg(long)]
        points: PathBuf,
        /// 1-based point to separate; all points if omitted
        #[arg(long)]
        target: Option<usize>,
    },
    /// Sample F with a small non-vanishing set and run the gap product
    Gapdemo {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        nu: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Maximum number of sampled polynomials
        #[arg(long, default_value_t = DEFAULT_ATTEMPTS)]
        attempts: usize,
        /// 1-based index, in point order, of the non-vanishing point to keep
        /// (default: the last)
        #[arg(long)]
        distinguished: Option<usize>,
    },
    /// Gap product for a polynomial read from a file
    Gap {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        m: usize,
        /// Polynomial file, one `coeff; e0,...,em` term per line
        #[arg(long)]
        poly: PathBuf,
        #[arg(long)]
        distinguished: Option<usize>,
    },
    /// Formula-versus-oracle table over lists of q and m
    Sweep {
        /// Field orders, comma separated
        #[arg(long = "q", value_delimiter = ',')]
        qs: Vec<u64>,
        /// Projective dimensions, comma separated
        #[arg(long = "m", value_delimiter = ',')]
        ms: Vec<usize>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Generator matrix
    Matrix {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        nu: u32,
    },
    /// Extensions of a flat, checked against the count formula
    Flats {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        m: usize,
        /// Generators of the flat in point format
        #[arg(long, conflicts_with = "dim")]
        flat: Option<PathBuf>,
        /// Dimension of a random flat, drawn with --seed
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check that no code in range has a weight-1 codeword
    Lemma4 {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
}

fn space(field: &Field, m: usize) -> Result<ProjectiveSpace<'_>, CliError> {
    ProjectiveSpace::new(field, m).map_err(invalid)
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("records serialize") + "\n"
}

fn no_csv(command: &str) -> CliError {
    invalid(format!("csv output is not available for `{command}`"))
}

pub fn run(cli: &Cli) -> Result<String, CliError> {
    let format = cli.format;
    match &cli.command {
        Command::Params { field, m, nu } => params(&field.field()?, *m, *nu, format),
        Command::Verify { field, m, nu, budget } => verify(&field.field()?, *m, *nu, *budget, format),
        Command::Separate { field, m, points, target } => {
            let f = field.field()?;
            let s = space(&f, *m)?;
            let pts = parse_points(&read(points)?, &s).map_err(invalid)?;
            separate(&s, pts, *target, format)
        }
        Command::Gapdemo { field, m, nu, seed, attempts, distinguished } => {
            gapdemo(&field.field()?, *m, *nu, *seed, *attempts, *distinguished, format)
        }
        Command::Gap { field, m, poly, distinguished } => {
            let f = field.field()?;
            let s = space(&f, *m)?;
            let poly = parse_poly(&read(poly)?, &f, m + 1).map_err(invalid)?;
            gap(&s, &poly, None, 0, *distinguished, format)
        }
        Command::Sweep { qs, ms, budget } => sweep(qs, ms, *budget, format),
        Command::Matrix { field, m, nu } => matrix(&field.field()?, *m, *nu, format),
        Command::Flats { field, m, flat, dim, seed } => {
            let f = field.field()?;
            let s = space(&f, *m)?;
            let flat = match (flat, dim) {
                (Some(path), _) => {
                    let gens = parse_points(&read(path)?, &s).map_err(invalid)?;
                    s.span(&gens).map_err(invalid)?
                }
                (None, Some(dim)) => {
                    if *dim >= *m {
                        return Err(invalid(format!("flat dimension {dim} must be below m={m}")));
                    }
                    random_flat(&s, *dim, &mut SplitMix64::seed_from_u64(*seed))
                }
                (None, None) => return Err(invalid("give --flat or --dim")),
            };
            flats(&s, &flat, format)
        }
        Command::Lemma4 { field, m, budget } => lemma4(&field.field()?, *m, *budget, format),
    }
}

pub fn params(field: &Field, m: usize, nu: u32, format: Format) -> Result<String, CliError> {
    let p = CodeParams::compute(field.order(), m, nu)?;
    Ok(match format {
        Format::Text => format!(
            "n={}\nk={}\nd={}\nr={}\ns={}\n",
            p.n, p.k, p.d, p.r, p.s
        ),
        Format::Json => json(&ParamsRecord::from(p)),
        Format::Csv => format!(
            "q,m,nu,n,k,d,r,s\n{},{},{},{},{},{},{},{}\n",
            p.q, p.m, p.nu, p.n, p.k, p.d, p.r, p.s
        ),
    })
}

/// One table row: k by rank, d by search when the budget allows.
pub fn check_row(field: &Field, m: usize, nu: u32, budget: u64) -> Result<CheckRow, CliError> {
    let p = CodeParams::compute(field.order(), m, nu)?;
    let s = space(field, m)?;
    let gen = generator_matrix(&s, nu)?;
    let k_rank = rank_gf(field, &gen.entries) as u64;
    let d_search = match prm_core::prm::prepare_search(&s, nu, budget) {
        Ok(search) => Some(min_weight_parallel(&search, default_partitions()).expect("nonzero code") as u64),
        Err(PrmError::BudgetExceeded { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let k_ok = k_rank == p.k;
    let status = match d_search {
        _ if !k_ok => Status::Mismatch,
        Some(d) if d != p.d => Status::Mismatch,
        Some(_) => Status::Match,
        None => Status::Skipped,
    };
    Ok(CheckRow {
        q: p.q,
        m,
        nu,
        n: p.n,
        k_formula: p.k,
        k_rank,
        d_formula: p.d,
        d_search,
        status,
    })
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "MATCH"
    } else {
        "MISMATCH"
    }
}

pub fn verify(field: &Field, m: usize, nu: u32, budget: u64, format: Format) -> Result<String, CliError> {
    CodeParams::compute(field.order(), m, nu)?;
    // the budget check comes first so an oversized search fails fast
    let s = space(field, m)?;
    let gen = generator_matrix(&s, nu)?;
    let search = prm_core::WeightSearch::new(field, &gen.entries);
    if search.class_count().is_none_or(|c| c > budget) {
        return Err(PrmError::BudgetExceeded {
            required: search.required(),
            budget,
        }
        .into());
    }
    let row = check_row(field, m, nu, budget)?;
    let d = row.d_search.expect("within budget");
    let report = match format {
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "q={} m={} nu={} n={}", row.q, m, nu, row.n).unwrap();
            writeln!(out, "k: {}={} {}", row.k_formula, row.k_rank, verdict(row.k_matches())).unwrap();
            writeln!(out, "d: {}={} {}", row.d_formula, d, verdict(d == row.d_formula)).unwrap();
            let single = if d == 1 { "present" } else { "absent" };
            writeln!(out, "weight-1 codeword: {single}").unwrap();
            out
        }
        Format::Json => json(&row),
        Format::Csv => format!("{SWEEP_CSV_HEADER}\n{}\n", row.csv_line()),
    };
    if row.status == Status::Mismatch {
        return Err(CliError::Mismatch {
            report,
            message: format!("q={} m={m} nu={nu}: formula and oracle disagree", row.q),
        });
    }
    Ok(report)
}

pub fn separate(
    space: &ProjectiveSpace<'_>,
    points: Vec<ProjPoint>,
    target: Option<usize>,
    format: Format,
) -> Result<String, CliError> {
    let inst = SeparationInstance::new(space, points)?;
    let targets: Vec<usize> = match target {
        Some(0) => return Err(invalid("targets are 1-based")),
        Some(i) if i > inst.len() => {
            return Err(invalid(format!("target {i} out of range for {} points", inst.len())))
        }
        Some(i) => vec![i - 1],
        None => (0..inst.len()).collect(),
    };
    let family = targets
        .iter()
        .map(|&i| separator_for(space, &inst, i))
        .collect::<Result<Vec<_>, _>>()?;
    let table = evaluation_table(space, &inst, &family);
    let verified = table
        .iter()
        .zip(&targets)
        .all(|(row, &i)| row.iter().enumerate().all(|(j, v)| v.is_zero() == (i == j)));

    let record = SeparationRecord {
        q: space.field().order(),
        m: space.dim(),
        points: encode_points(inst.points()),
        separators: family
            .iter()
            .zip(&targets)
            .map(|(sep, &i)| SeparatorRecord {
                target: i + 1,
                point: encode(inst.points()[i].coords()),
                chain: sep.chain.flats.iter().map(encode_flat).collect(),
                hyperplane: encode_flat(sep.hyperplane()),
                form: encode_poly(&sep.form),
            })
            .collect(),
        table: table.iter().map(|r| encode(r)).collect(),
        verified,
    };
    let out = match format {
        Format::Json => json(&record),
        Format::Csv => return Err(no_csv("separate")),
        Format::Text => {
            let mut out = String::new();
            for (sep, &i) in family.iter().zip(&targets) {
                writeln!(out, "target {}: {}", i + 1, format_coords(inst.points()[i].coords())).unwrap();
                for flat in &sep.chain.flats {
                    let rows: Vec<String> = flat.basis().iter().map(|r| format_coords(r)).collect();
                    writeln!(out, "  V{}: [{}]", flat.dim(), rows.join(" | ")).unwrap();
                }
                writeln!(out, "  G:").unwrap();
                for line in emit_poly(&sep.form).lines() {
                    writeln!(out, "    {line}").unwrap();
                }
            }
            writeln!(out, "table (row i: G_i at P_1..P_t):").unwrap();
            for (row, &i) in table.iter().zip(&targets) {
                writeln!(out, "  G_{}: {}", i + 1, format_coords(row)).unwrap();
            }
            writeln!(out, "separation: {}", if verified { "verified" } else { "FAILED" }).unwrap();
            out
        }
    };
    if !verified {
        return Err(CliError::Mismatch {
            report: out,
            message: "separation table check failed".into(),
        });
    }
    Ok(out)
}

pub fn gapdemo(
    field: &Field,
    m: usize,
    nu: u32,
    seed: u64,
    attempts: usize,
    distinguished: Option<usize>,
    format: Format,
) -> Result<String, CliError> {
    let s = space(field, m)?;
    if nu == 0 {
        return Err(PrmError::NuTooSmall.into());
    }
    let max_t = field.order() as usize + 1;
    let mut rng = SplitMix64::seed_from_u64(seed);
    let (poly, _) = sample_sparse_support(&s, nu, 2, max_t, attempts, &mut rng).ok_or_else(|| {
        CliError::Infeasible(format!(
            "no degree-{nu} polynomial with 2 <= t <= {max_t} non-vanishing points found in {attempts} attempts"
        ))
    })?;
    gap(&s, &poly, Some(seed), attempts, distinguished, format)
}

pub fn gap(
    space: &ProjectiveSpace<'_>,
    poly: &HomPoly,
    seed: Option<u64>,
    attempts: usize,
    distinguished: Option<usize>,
    format: Format,
) -> Result<String, CliError> {
    let mut support = poly.nonvanishing_set(space);
    let t = support.len();
    match distinguished {
        Some(i) if i == 0 || i > t => {
            return Err(invalid(format!("distinguished index {i} out of range for t={t}")))
        }
        Some(i) => {
            let p = support.remove(i - 1);
            support.push(p);
        }
        None => {}
    }
    let inst = SeparationInstance::new(space, support)?;
    let witness = gap_witness(space, poly, &inst)?;
    let last = inst.points().last().expect("t >= 2").clone();
    let isolated = witness.isolates(&last);
    let degree_ok = witness.degree == poly.degree() + t as u32 - 1;
    let regime = contradiction_report(space, poly.degree(), poly).ok();

    let record = GapRecord {
        q: space.field().order(),
        m: space.dim(),
        nu: poly.degree(),
        seed,
        attempts,
        poly: encode_poly(poly),
        t,
        points: encode_points(inst.points()),
        product: encode_poly(&witness.product),
        product_degree: witness.degree,
        degree_bound: witness.degree_bound,
        within_bound: witness.within_bound,
        zero_count: witness.zero_count,
        nonvanishing: encode_points(&witness.nonvanishing),
        isolated,
        regime: regime.as_ref().map(RegimeRecord::from),
    };
    let out = match format {
        Format::Json => json(&record),
        Format::Csv => return Err(no_csv("gap")),
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "F (degree {}):", poly.degree()).unwrap();
            out.push_str(&emit_poly(poly));
            writeln!(out, "t={t}").unwrap();
            writeln!(out, "non-vanishing points of F (last is P_t):").unwrap();
            out.push_str(&emit_points(inst.points()));
            writeln!(out, "deg H={} (deg F + t - 1 = {})", witness.degree, poly.degree() + t as u32 - 1).unwrap();
            writeln!(
                out,
                "degree bound m(q-1)={}: {}",
                witness.degree_bound,
                if witness.within_bound { "within" } else { "exceeded" }
            )
            .unwrap();
            writeln!(out, "|Z(H)|={} of n={}", witness.zero_count, space.num_points()).unwrap();
            let nv: Vec<String> = witness.nonvanishing.iter().map(|p| format_coords(p.coords())).collect();
            writeln!(out, "non-vanishing point of H: {}", nv.join(" ")).unwrap();
            match &regime {
                Some(r) => writeln!(
                    out,
                    "regime: s={} t={} threshold q-s={} -> {}",
                    r.s,
                    r.t,
                    r.threshold,
                    RegimeRecord::from(r).outcome
                )
                .unwrap(),
                None => writeln!(out, "regime: degree outside (m-1)(q-1)+1..=m(q-1), not checked").unwrap(),
            }
            out
        }
    };
    if !isolated || !degree_ok {
        return Err(CliError::Mismatch {
            report: out,
            message: "product does not isolate the distinguished point".into(),
        });
    }
    Ok(out)
}

pub fn sweep(qs: &[u64], ms: &[usize], budget: u64, format: Format) -> Result<String, CliError> {
    let fields = qs
        .iter()
        .map(|&q| Field::from_order(q).map_err(invalid))
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(&m) = ms.iter().find(|&&m| m == 0) {
        return Err(invalid(format!("m={m}: projective dimension must be at least 1")));
    }
    let mut rows = Vec::new();
    for f in &fields {
        for &m in ms {
            for nu in 1..=m as u32 * (f.order() - 1) {
                rows.push(check_row(f, m, nu, budget)?);
            }
        }
    }
    Ok(match format {
        Format::Json => json(&rows),
        Format::Csv => {
            let mut out = String::from(SWEEP_CSV_HEADER) + "\n";
            for r in &rows {
                out += &r.csv_line();
                out.push('\n');
            }
            out
        }
        Format::Text => {
            let mut out = format!(
                "{:>3} {:>2} {:>3} {:>8} {:>8} {:>8} {:>8} {:>8}  status\n",
                "q", "m", "nu", "n", "k", "k_rank", "d", "d_search"
            );
            for r in &rows {
                writeln!(
                    out,
                    "{:>3} {:>2} {:>3} {:>8} {:>8} {:>8} {:>8} {:>8}  {}",
                    r.q,
                    r.m,
                    r.nu,
                    r.n,
                    r.k_formula,
                    r.k_rank,
                    r.d_formula,
                    r.d_search.map_or("-".to_string(), |d| d.to_string()),
                    r.status.as_str()
                )
                .unwrap();
            }
            out
        }
    })
}

pub fn matrix(field: &Field, m: usize, nu: u32, format: Format) -> Result<String, CliError> {
    prm_core::prm::check_nu(field.order(), m, nu)?;
    let s = space(field, m)?;
    let g = generator_matrix(&s, nu)?;
    Ok(match format {
        Format::Json => json(&MatrixRecord::from(&g)),
        Format::Csv => emit_matrix_csv(&g.entries),
        Format::Text => {
            let mut out = String::new();
            for (mono, row) in g.monomials.iter().zip(&g.entries) {
                let e: Vec<String> = mono.iter().map(u32::to_string).collect();
                writeln!(out, "[{}] {}", e.join(","), format_coords(row)).unwrap();
            }
            out
        }
    })
}

pub fn flats(space: &ProjectiveSpace<'_>, flat: &prm_core::Flat, format: Format) -> Result<String, CliError> {
    let exts = space.extensions(flat).map_err(invalid)?;
    let inside = space.flat_points(flat);
    let mut covered = vec![0usize; space.num_points()];
    for e in &exts {
        for p in space.flat_points(e) {
            covered[space.index_of(&p)] += 1;
        }
    }
    let inside_idx: std::collections::BTreeSet<usize> = inside.iter().map(|p| space.index_of(p)).collect();
    let partition = covered
        .iter()
        .enumerate()
        .all(|(i, &c)| if inside_idx.contains(&i) { c == exts.len() } else { c == 1 });
    let formula = space.extension_count(flat.dim());
    let ok = partition && exts.len() == formula;
    let record = FlatsRecord {
        q: space.field().order(),
        m: space.dim(),
        flat: encode_flat(flat),
        dim: flat.dim(),
        count: exts.len(),
        formula,
        partition,
        status: if ok { Status::Match } else { Status::Mismatch },
        extensions: exts.iter().map(encode_flat).collect(),
    };
    let out = match format {
        Format::Json => json(&record),
        Format::Csv => return Err(no_csv("flats")),
        Format::Text => {
            let mut out = String::new();
            let rows: Vec<String> = flat.basis().iter().map(|r| format_coords(r)).collect();
            writeln!(out, "flat (dim {}): [{}]", flat.dim(), rows.join(" | ")).unwrap();
            writeln!(out, "extensions: {}={} {}", exts.len(), formula, verdict(exts.len() == formula)).unwrap();
            writeln!(out, "partition of complement: {}", if partition { "yes" } else { "no" }).unwrap();
            for e in &exts {
                let rows: Vec<String> = e.basis().iter().map(|r| format_coords(r)).collect();
                writeln!(out, "  [{}]", rows.join(" | ")).unwrap();
            }
            out
        }
    };
    if !ok {
        return Err(CliError::Mismatch {
            report: out,
            message: "extension count or partition check failed".into(),
        });
    }
    Ok(out)
}

pub fn lemma4(field: &Field, m: usize, budget: u64, format: Format) -> Result<String, CliError> {
    let s = space(field, m)?;
    let weights = crate::search::min_weights_all_degrees(&s, budget)?;
    let holds = weights.iter().all(|&(_, w)| w >= 2);
    let record = Lemma4Record {
        q: field.order(),
        m,
        weights: weights
            .iter()
            .map(|&(nu, min_weight)| DegreeWeight { nu, min_weight })
            .collect(),
        holds,
    };
    let out = match format {
        Format::Json => json(&record),
        Format::Csv => {
            let mut out = String::from("nu,min_weight\n");
            for w in &record.weights {
                writeln!(out, "{},{}", w.nu, w.min_weight).unwrap();
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for w in &record.weights {
                writeln!(out, "nu={} min weight {}", w.nu, w.min_weight).unwrap();
            }
            writeln!(
                out,
                "single non-vanishing point: {}",
                if holds { "impossible for every degree" } else { "FOUND" }
            )
            .unwrap();
            out
        }
    };
    if !holds {
        return Err(CliError::Mismatch {
            report: out,
            message: "a codeword of weight 1 exists".into(),
        });
    }
    Ok(out)
}
