//! Acceptance suite. Prints one PASS/FAIL line per criterion, with the
//! measured runtime against its bound, and exits nonzero if any fails.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use prm_cli::commands::{self, Format};
use prm_cli::search::{default_partitions, min_weight_parallel};
use prm_core::prm::{
    dimension_formula, generator_matrix, length_formula, prepare_search, rank_gf,
    verify_no_single_nonvanishing,
};
use prm_core::sample::{random_flat, random_points, sample_sparse_support};
use prm_core::separation::{
    evaluation_table, gap_witness, separating_family, SeparationError, SeparationInstance,
};
use prm_core::{Elem, Field, HomPoly, ProjPoint, ProjectiveSpace};
use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

const SEARCH_LIMIT: u128 = 2_000_000;

type Outcome = Result<String, String>;
type Criterion = (&'static str, &'static str, Duration, fn() -> Outcome);

fn field(q: u64) -> Field {
    Field::from_order(q).unwrap()
}

fn ipow(b: u128, e: u32) -> u128 {
    (0..e).fold(1, |acc, _| acc * b)
}

/// Points of P^m by brute force: canonical forms of every nonzero vector.
fn count_points_by_scaling(f: &Field, m: usize) -> usize {
    let s = ProjectiveSpace::new(f, m).unwrap();
    let q = f.order() as u64;
    let total = q.pow(m as u32 + 1);
    let mut seen = BTreeSet::new();
    for code in 1..total {
        let mut c = code;
        let v: Vec<Elem> = (0..=m)
            .map(|_| {
                let x = f.element(c % q).unwrap();
                c /= q;
                x
            })
            .collect();
        seen.insert(s.canonicalize(&v).unwrap());
    }
    seen.len()
}

fn c1_length() -> Outcome {
    let mut checked = 0;
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        let f = field(q);
        for m in 1..=3usize {
            let s = ProjectiveSpace::new(&f, m).unwrap();
            let expected = ((ipow(q as u128, m as u32 + 1) - 1) / (q as u128 - 1)) as usize;
            let enumerated = s.points().len();
            let scaled = count_points_by_scaling(&f, m);
            let formula = length_formula(q as u32, m).unwrap() as usize;
            if enumerated != expected || scaled != expected || formula != expected {
                return Err(format!(
                    "q={q} m={m}: enumerated {enumerated}, by scaling {scaled}, formula {formula}, expected {expected}"
                ));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} (q,m) pairs"))
}

fn c2_grid() -> Vec<(u64, usize, u32)> {
    let mut grid = Vec::new();
    for q in [2u64, 3, 4, 5] {
        for m in 1..=2usize {
            for nu in 1..=m as u32 * (q as u32 - 1) {
                grid.push((q, m, nu));
            }
        }
    }
    for q in [2u64, 3] {
        for nu in 1..=(3 * (q as u32 - 1)).min(4) {
            grid.push((q, 3, nu));
        }
    }
    grid
}

fn c2_dimension() -> Outcome {
    let grid = c2_grid();
    for &(q, m, nu) in &grid {
        let f = field(q);
        let s = ProjectiveSpace::new(&f, m).unwrap();
        let g = generator_matrix(&s, nu).unwrap();
        let rank = rank_gf(&f, &g.entries) as u64;
        let k = dimension_formula(q as u32, m, nu).unwrap();
        if rank != k {
            return Err(format!("q={q} m={m} nu={nu}: rank {rank}, formula {k}"));
        }
    }
    Ok(format!("{} (q,m,nu) cases", grid.len()))
}

/// `(q - s) q^(m - r - 1)` with `nu - 1 = r (q - 1) + s`, computed here
/// independently of the library.
fn distance_oracle(q: u64, m: usize, nu: u32) -> u64 {
    let r = (nu as u64 - 1) / (q - 1);
    let s = (nu as u64 - 1) % (q - 1);
    (q - s) * q.pow(m as u32 - r as u32 - 1)
}

fn c3_distance() -> Outcome {
    let mut checked = Vec::new();
    let mut skipped = 0;
    for (q, m, nu) in c2_grid() {
        let f = field(q);
        let s = ProjectiveSpace::new(&f, m).unwrap();
        let k = dimension_formula(q as u32, m, nu).unwrap() as u32;
        let classes = (ipow(q as u128, k) - 1) / (q as u128 - 1);
        if classes > SEARCH_LIMIT {
            skipped += 1;
            continue;
        }
        let search = prepare_search(&s, nu, SEARCH_LIMIT as u64).map_err(|e| e.to_string())?;
        let w = min_weight_parallel(&search, default_partitions()).unwrap() as u64;
        let d = distance_oracle(q, m, nu);
        if w != d {
            return Err(format!("q={q} m={m} nu={nu}: search {w}, formula {d}"));
        }
        checked.push((q, m, nu, w));
    }
    let must = [(2, 2, 1, 4), (3, 2, 2, 6)];
    for c in must {
        if !checked.contains(&c) {
            return Err(format!("required case {c:?} not covered"));
        }
    }
    let tops = checked
        .iter()
        .filter(|&&(q, m, nu, _)| nu == m as u32 * (q as u32 - 1))
        .collect::<Vec<_>>();
    if tops.iter().any(|&&(.., w)| w != 2) {
        return Err("top-degree case with d != 2".into());
    }
    Ok(format!(
        "{} cases searched ({} top-degree), {skipped} over the 2e6 limit",
        checked.len(),
        tops.len()
    ))
}

fn c4_extensions() -> Outcome {
    let mut rng = SplitMix64::seed_from_u64(0x4);
    let mut flats = 0;
    for q in [2u64, 3, 4] {
        let f = field(q);
        for m in 2..=3usize {
            let s = ProjectiveSpace::new(&f, m).unwrap();
            for j in 0..=m - 2 {
                let expected = ((ipow(q as u128, (m - j) as u32) - 1) / (q as u128 - 1)) as usize;
                for _ in 0..20 {
                    let flat = random_flat(&s, j, &mut rng);
                    let exts = s.extensions(&flat).map_err(|e| e.to_string())?;
                    if exts.len() != expected {
                        return Err(format!("q={q} m={m} j={j}: {} extensions, expected {expected}", exts.len()));
                    }
                    let inside: BTreeSet<ProjPoint> = s.flat_points(&flat).into_iter().collect();
                    let mut covered = BTreeSet::new();
                    for e in &exts {
                        let pts = s.flat_points(e);
                        if e.dim() != j + 1 || !inside.iter().all(|p| pts.contains(p)) {
                            return Err(format!("q={q} m={m} j={j}: extension does not contain the flat"));
                        }
                        for p in pts.into_iter().filter(|p| !inside.contains(p)) {
                            if !covered.insert(p) {
                                return Err(format!("q={q} m={m} j={j}: extensions overlap outside the flat"));
                            }
                        }
                    }
                    if covered.len() + inside.len() != s.num_points() {
                        return Err(format!("q={q} m={m} j={j}: complement not covered"));
                    }
                    flats += 1;
                }
            }
        }
    }
    Ok(format!("{flats} flats"))
}

fn c5_separation() -> Outcome {
    let mut instances = 0;
    for q in [2u64, 3, 4, 5] {
        let f = field(q);
        for m in 1..=3usize {
            let s = ProjectiveSpace::new(&f, m).unwrap();
            let mut rng = SplitMix64::seed_from_u64(q * 10 + m as u64);
            for _ in 0..1000 {
                let t = rng.gen_range(1..=q as usize + 1);
                let pts = random_points(&s, t, &mut rng);
                let inst = SeparationInstance::new(&s, pts.clone()).map_err(|e| e.to_string())?;
                let family = separating_family(&s, &inst).map_err(|e| format!("q={q} m={m} t={t}: {e}"))?;
                for (i, sep) in family.iter().enumerate() {
                    if sep.chain.flats.len() != m {
                        return Err(format!("q={q} m={m}: chain has {} flats", sep.chain.flats.len()));
                    }
                    for (dim, flat) in sep.chain.flats.iter().enumerate() {
                        if flat.dim() != dim {
                            return Err(format!("q={q} m={m}: step {dim} has dimension {}", flat.dim()));
                        }
                        for (j, p) in pts.iter().enumerate() {
                            if s.contains(flat, p).unwrap() != (i == j) {
                                return Err(format!("q={q} m={m} t={t}: step {dim} of chain {i} fails at point {j}"));
                            }
                        }
                    }
                }
                let table = evaluation_table(&s, &inst, &family);
                for (i, row) in table.iter().enumerate() {
                    if row.iter().enumerate().any(|(j, v)| v.is_zero() != (i == j)) {
                        return Err(format!("q={q} m={m} t={t}: separation table row {i}"));
                    }
                }
                let again = separating_family(&s, &inst).unwrap();
                if again != family {
                    return Err(format!("q={q} m={m} t={t}: second run differs"));
                }
                instances += 1;
            }
        }
    }
    Ok(format!("{instances} instances"))
}

/// Every nonzero degree-`nu` form over P^m, by coefficient vector.
fn all_forms(f: &Field, m: usize, nu: u32) -> impl Iterator<Item = HomPoly> + '_ {
    let monos = prm_core::prm::monomials(m, nu);
    let q = f.order() as u64;
    let total = q.pow(monos.len() as u32);
    (1..total).map(move |code| {
        let mut c = code;
        let terms = monos.iter().map(|e| {
            let x = f.element(c % q).unwrap();
            c /= q;
            (e.clone(), x)
        });
        HomPoly::from_terms(f, m + 1, nu, terms.collect::<Vec<_>>()).unwrap()
    })
}

fn c6_gap() -> Outcome {
    const WANTED: usize = 500;
    const ATTEMPTS_PER_SAMPLE: usize = 20_000;
    let mut notes = Vec::new();
    let mut failures = Vec::new();
    for (q, m, nu) in [(2u64, 2usize, 2u32), (3, 2, 2), (3, 2, 3), (2, 3, 3)] {
        let f = field(q);
        let s = ProjectiveSpace::new(&f, m).unwrap();
        let max_t = q as usize + 1;
        let mut rng = SplitMix64::seed_from_u64(q << 16 | (m as u64) << 8 | nu as u64);
        let mut ok = 0;
        while ok < WANTED {
            let Some((poly, support)) = sample_sparse_support(&s, nu, 2, max_t, ATTEMPTS_PER_SAMPLE, &mut rng) else {
                let eligible = all_forms(&f, m, nu)
                    .filter(|p| (2..=max_t).contains(&p.nonvanishing_set(&s).len()))
                    .count();
                let n_forms = ipow(q as u128, prm_core::prm::monomials(m, nu).len() as u32) - 1;
                let d = distance_oracle(q, m, nu);
                failures.push(format!(
                    "({q},{m},{nu}): {ok}/{WANTED} sampled; exhaustive check of all {n_forms} nonzero forms finds \
                     {eligible} with 2 <= t <= {max_t} (minimum non-vanishing count is d={d})"
                ));
                break;
            };
            let t = support.len();
            let inst = SeparationInstance::new(&s, support.clone()).map_err(|e| e.to_string())?;
            let w = gap_witness(&s, &poly, &inst).map_err(|e| format!("({q},{m},{nu}): {e}"))?;
            if !w.isolates(support.last().unwrap()) {
                return Err(format!("({q},{m},{nu}) t={t}: product does not isolate P_t"));
            }
            if w.degree != nu + t as u32 - 1 {
                return Err(format!("({q},{m},{nu}) t={t}: deg H = {}", w.degree));
            }
            ok += 1;
        }
        if ok == WANTED {
            notes.push(format!("({q},{m},{nu}) {ok}/{WANTED}"));
        }
    }
    if failures.is_empty() {
        Ok(notes.join(", "))
    } else {
        Err(format!("{}; passed: {}", failures.join("; "), notes.join(", ")))
    }
}

fn c7_lemma4() -> Outcome {
    for (q, m) in [(2u64, 2usize), (2, 3), (3, 2)] {
        let f = field(q);
        let s = ProjectiveSpace::new(&f, m).unwrap();
        match verify_no_single_nonvanishing(&s, SEARCH_LIMIT as u64) {
            Ok(true) => {}
            Ok(false) => return Err(format!("(q,m)=({q},{m}): weight-1 codeword found")),
            Err(e) => return Err(format!("(q,m)=({q},{m}): {e}")),
        }
    }
    Ok("(2,2), (2,3), (3,2) hold".into())
}

fn c8_negative() -> Outcome {
    for q in [2u64, 3, 4, 5] {
        let f = field(q);
        for m in 2..=3usize {
            let s = ProjectiveSpace::new(&f, m).unwrap();
            let t = q as usize + 2;
            let mut rng = SplitMix64::seed_from_u64(q + m as u64);
            let pts = random_points(&s, t, &mut rng);
            match SeparationInstance::new(&s, pts) {
                Err(SeparationError::TooManyPoints { t: got, max }) if got == t && max == t - 1 => {}
                other => return Err(format!("q={q} m={m}: t=q+2 gave {other:?}")),
            }
            let nu = m as u32 * (q as u32 - 1) + 1;
            let bound = format!("nu exceeds m(q-1)={}", nu - 1);
            match commands::params(&f, m, nu, Format::Text) {
                Err(e) if e.exit_code() == 2 && e.to_string().contains(&bound) => {}
                other => return Err(format!("q={q} m={m} nu={nu}: params gave {other:?}")),
            }
            let out = Command::new(env!("CARGO_BIN_EXE_prm"))
                .args(["params", "--q", &q.to_string(), "--m", &m.to_string(), "--nu", &nu.to_string()])
                .output()
                .map_err(|e| e.to_string())?;
            if out.status.code() != Some(2) || !String::from_utf8_lossy(&out.stderr).contains(&bound) {
                return Err(format!("q={q} m={m} nu={nu}: binary exit {:?}", out.status.code()));
            }
        }
    }
    Ok("t=q+2 rejected; nu=m(q-1)+1 exits 2".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1", "length formula", Duration::from_secs(1), c1_length),
        ("2", "dimension = rank", Duration::from_secs(60), c2_dimension),
        ("3", "distance = exhaustive minimum weight", Duration::from_secs(600), c3_distance),
        ("4", "extension count and partition", Duration::from_secs(30), c4_extensions),
        ("5", "separating chains", Duration::from_secs(60), c5_separation),
        ("6", "gap product", Duration::from_secs(120), c6_gap),
        ("7", "no single non-vanishing point", Duration::from_secs(300), c7_lemma4),
        ("8", "out-of-scope inputs rejected", Duration::from_secs(5), c8_negative),
    ];
    let mut failed = 0;
    for (id, name, bound, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let (verdict, detail) = match outcome {
            Ok(d) if elapsed <= bound => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; over the time bound")),
            Err(e) => ("FAIL", e),
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!(
            "{verdict} criterion {id} ({name}): {detail} [{:.2}s / {}s]",
            elapsed.as_secs_f64(),
            bound.as_secs()
        );
    }
    println!("{} of 8 criteria passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
