//! The projective Reed-Muller code `PC_nu(m, q)`.
//!
//! The code is the image of the homogeneous degree-`nu` polynomials under
//! evaluation at the canonical representatives of all points of P^m, taken in
//! canonical point order. Closed-form parameters live next to two brute-force
//! oracles: the rank of the generator matrix and an exhaustive search for the
//! minimum codeword weight.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::gf::{Elem, Field};
use crate::linalg;
use crate::projgeom::{ProjPoint, ProjectiveSpace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrmError {
    #[error("projective dimension must be at least 1")]
    InvalidDimension,
    #[error("field order must be at least 2, got {0}")]
    InvalidOrder(u32),
    #[error("nu must be at least 1")]
    NuTooSmall,
    #[error("nu exceeds m(q-1)={max}")]
    NuOutOfRange { nu: u32, max: u64 },
    #[error("parameter does not fit in 64 bits")]
    Overflow,
    #[error("exhaustive search needs {required} codewords, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
}

/// Parameters `[n, k, d]` of `PC_nu(m, q)` from the closed-form formulas, with
/// `nu - 1 = r (q - 1) + s`, `0 <= s < q - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CodeParams {
    pub q: u32,
    pub m: usize,
    pub nu: u32,
    pub n: u64,
    pub k: u64,
    pub d: u64,
    pub r: u64,
    pub s: u64,
}

/// Checks `1 <= nu <= m (q - 1)`.
pub fn check_nu(q: u32, m: usize, nu: u32) -> Result<(), PrmError> {
    if q < 2 {
        return Err(PrmError::InvalidOrder(q));
    }
    if m == 0 {
        return Err(PrmError::InvalidDimension);
    }
    if nu == 0 {
        return Err(PrmError::NuTooSmall);
    }
    let max = (m as u64)
        .checked_mul(u64::from(q - 1))
        .ok_or(PrmError::Overflow)?;
    if u64::from(nu) > max {
        return Err(PrmError::NuOutOfRange { nu, max });
    }
    Ok(())
}

/// `(q^(m+1) - 1) / (q - 1)`.
pub fn length_formula(q: u32, m: usize) -> Result<u64, PrmError> {
    let q = u64::from(q);
    let mut acc = 1u64;
    let mut n = 1u64;
    for _ in 0..m {
        acc = acc.checked_mul(q).ok_or(PrmError::Overflow)?;
        n = n.checked_add(acc).ok_or(PrmError::Overflow)?;
    }
    Ok(n)
}

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// The dimension
///
/// `k = sum_{0 < t <= nu, t = nu mod (q-1)} sum_{j=0}^{m+1} (-1)^j C(m+1, j) C(t - jq + m, t - jq)`
///
/// with `C(a, b) = 0` whenever `b < 0`. For `q = 2` the congruence holds for
/// every `t`.
pub fn dimension_formula(q: u32, m: usize, nu: u32) -> Result<u64, PrmError> {
    check_nu(q, m, nu)?;
    let modulus = u64::from(q - 1);
    let target = u64::from(nu) % modulus;
    let m64 = m as u64;
    let mut positive = BigUint::zero();
    let mut negative = BigUint::zero();
    for t in 1..=u64::from(nu) {
        if t % modulus != target {
            continue;
        }
        for j in 0..=m64 + 1 {
            let Some(b) = t.checked_sub(j * u64::from(q)) else {
                break;
            };
            let term = binomial(m64 + 1, j) * binomial(b + m64, b);
            if j % 2 == 0 {
                positive += term;
            } else {
                negative += term;
            }
        }
    }
    // the total is a dimension, hence nonnegative
    (positive - negative).to_u64().ok_or(PrmError::Overflow)
}

impl CodeParams {
    /// Evaluates the closed-form `n`, `k` and `d = (q - s) q^(m - r - 1)`.
    pub fn compute(q: u32, m: usize, nu: u32) -> Result<Self, PrmError> {
        check_nu(q, m, nu)?;
        let qm1 = u64::from(q - 1);
        let r = u64::from(nu - 1) / qm1;
        let s = u64::from(nu - 1) % qm1;
        // r <= m - 1 because nu <= m (q - 1)
        let exp = u32::try_from(m as u64 - r - 1).map_err(|_| PrmError::Overflow)?;
        let d = u64::from(q)
            .checked_pow(exp)
            .and_then(|x| x.checked_mul(u64::from(q) - s))
            .ok_or(PrmError::Overflow)?;
        Ok(CodeParams {
            q,
            m,
            nu,
            n: length_formula(q, m)?,
            k: dimension_formula(q, m, nu)?,
            d,
            r,
            s,
        })
    }
}

/// All exponent vectors of length `m + 1` summing to `degree`, lexicographically
/// descending.
pub fn monomials(m: usize, degree: u32) -> Vec<Vec<u32>> {
    fn rec(pos: usize, remaining: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos + 1 == cur.len() {
            cur[pos] = remaining;
            out.push(cur.clone());
            return;
        }
        for e in (0..=remaining).rev() {
            cur[pos] = e;
            rec(pos + 1, remaining - e, cur, out);
        }
    }
    let mut out = Vec::new();
    rec(0, degree, &mut vec![0; m + 1], &mut out);
    out
}

/// Generator matrix: one row per degree-`nu` monomial, one column per point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenMatrix {
    pub q: u32,
    pub m: usize,
    pub nu: u32,
    pub monomials: Vec<Vec<u32>>,
    pub points: Vec<ProjPoint>,
    pub entries: Vec<Vec<Elem>>,
}

pub fn generator_matrix(space: &ProjectiveSpace<'_>, nu: u32) -> Result<GenMatrix, PrmError> {
    let field = space.field();
    let m = space.dim();
    check_nu(field.order(), m, nu)?;
    let monos = monomials(m, nu);
    let points = space.points();
    let deg = nu as usize;

    // powers[col][var][e] = coord^e
    let powers: Vec<Vec<Vec<Elem>>> = points
        .iter()
        .map(|p| {
            p.coords()
                .iter()
                .map(|&x| (0..=deg).map(|e| field.pow(x, e as u64)).collect())
                .collect()
        })
        .collect();

    let entries = monos
        .iter()
        .map(|mono| {
            powers
                .iter()
                .map(|pw| {
                    mono.iter()
                        .enumerate()
                        .fold(Elem::ONE, |acc, (var, &e)| field.mul(acc, pw[var][e as usize]))
                })
                .collect()
        })
        .collect();

    Ok(GenMatrix {
        q: field.order(),
        m,
        nu,
        monomials: monos,
        points,
        entries,
    })
}

/// Rank over GF(q) by Gaussian elimination.
pub fn rank_gf(field: &Field, matrix: &[Vec<Elem>]) -> usize {
    linalg::rank(field, matrix)
}

/// Splits `0..total` into at most `parts` contiguous, nearly equal ranges.
pub fn partition(total: u64, parts: usize) -> Vec<Range<u64>> {
    let parts = (parts.max(1) as u64).min(total.max(1));
    let base = total / parts;
    let extra = total % parts;
    let mut out = Vec::with_capacity(parts as usize);
    let mut start = 0;
    for i in 0..parts {
        let len = base + u64::from(i < extra);
        out.push(start..start + len);
        start += len;
    }
    out
}

/// Exhaustive minimum-weight search over a linear code.
///
/// Messages are enumerated one per scalar class: the first nonzero message
/// coordinate is fixed to 1. Classes are indexed block by block: first the
/// `q^(k-1)` messages leading at position 0, then the `q^(k-2)` leading at
/// position 1, and so on, with trailing coordinates counting upward,
/// rightmost fastest. Any contiguous index range can be searched on its own.
#[derive(Clone, Debug)]
pub struct WeightSearch<'f> {
    field: &'f Field,
    len: usize,
    // scaled[i][c] = c * basis row i
    scaled: Vec<Vec<Vec<Elem>>>,
    block_sizes: Vec<u64>,
    class_count: Option<u64>,
    add_table: Option<Vec<Elem>>,
}

impl<'f> WeightSearch<'f> {
    /// Prepares a search over the row space of `generators`.
    pub fn new(field: &'f Field, generators: &[Vec<Elem>]) -> Self {
        let mut basis = generators.to_vec();
        let k = linalg::rref(field, &mut basis).len();
        basis.truncate(k);
        let len = generators.first().map_or(0, Vec::len);
        let q = field.order();

        let scaled = basis
            .iter()
            .map(|row| {
                field
                    .elements()
                    .map(|c| row.iter().map(|&x| field.mul(c, x)).collect())
                    .collect()
            })
            .collect();

        let mut block_sizes = Vec::with_capacity(k);
        let mut class_count = Some(0u64);
        for lead in 0..k {
            let size = u64::from(q).checked_pow((k - 1 - lead) as u32);
            block_sizes.push(size.unwrap_or(u64::MAX));
            class_count = class_count.zip(size).and_then(|(a, b)| a.checked_add(b));
        }

        let add_table = (q <= 256).then(|| {
            let mut t = Vec::with_capacity((q * q) as usize);
            for a in field.elements() {
                for b in field.elements() {
                    t.push(field.add(a, b));
                }
            }
            t
        });

        WeightSearch {
            field,
            len,
            scaled,
            block_sizes,
            class_count,
            add_table,
        }
    }

    /// Dimension of the code.
    pub fn dimension(&self) -> usize {
        self.scaled.len()
    }

    /// `(q^k - 1) / (q - 1)`, or `None` if it does not fit in a `u64`.
    pub fn class_count(&self) -> Option<u64> {
        self.class_count
    }

    /// The class count as an exact `u128`, saturating.
    pub fn required(&self) -> u128 {
        let q = u128::from(self.field.order());
        let mut acc = 0u128;
        for _ in 0..self.dimension() {
            acc = acc.saturating_mul(q).saturating_add(1);
        }
        acc
    }

    #[inline]
    fn add_into(&self, acc: &mut [Elem], base: &[Elem], row: &[Elem]) {
        match &self.add_table {
            Some(t) => {
                let q = self.field.order() as usize;
                for ((a, &b), &r) in acc.iter_mut().zip(base).zip(row) {
                    *a = t[b.value() as usize * q + r.value() as usize];
                }
            }
            None => {
                for ((a, &b), &r) in acc.iter_mut().zip(base).zip(row) {
                    *a = self.field.add(b, r);
                }
            }
        }
    }

    /// Minimum weight over the classes with indices in `range`, or `None` if
    /// the range is empty.
    pub fn min_weight_in(&self, range: Range<u64>) -> Option<usize> {
        let total = self.class_count.unwrap_or(u64::MAX);
        let end = range.end.min(total);
        let mut idx = range.start;
        let mut best: Option<usize> = None;
        let mut lead = 0;
        let mut offset = idx;
        while idx < end {
            while offset >= self.block_sizes[lead] {
                offset -= self.block_sizes[lead];
                lead += 1;
            }
            let run = (self.block_sizes[lead] - offset).min(end - idx);
            let w = self.scan_block(lead, offset, run);
            best = Some(best.map_or(w, |b| b.min(w)));
            idx += run;
            offset += run;
        }
        best
    }

    /// Scans `count` consecutive messages of the block leading at `lead`,
    /// starting at offset `from`.
    fn scan_block(&self, lead: usize, from: u64, count: u64) -> usize {
        let k = self.dimension();
        let q = u64::from(self.field.order());
        let free = k - 1 - lead;

        let mut digits = vec![0usize; free];
        let mut rest = from;
        for d in digits.iter_mut().rev() {
            *d = (rest % q) as usize;
            rest /= q;
        }

        // acc[l] = row(lead) + sum of the first l free coordinates' contributions
        let mut acc: Vec<Vec<Elem>> = vec![self.scaled[lead][1].clone(); free + 1];
        let refresh = |acc: &mut Vec<Vec<Elem>>, digits: &[usize], from_level: usize| {
            for l in from_level..free {
                let (done, todo) = acc.split_at_mut(l + 1);
                self.add_into(&mut todo[0], &done[l], &self.scaled[lead + 1 + l][digits[l]]);
            }
        };
        refresh(&mut acc, &digits, 0);

        let weight = |v: &[Elem]| v.iter().filter(|x| !x.is_zero()).count();
        let mut best = weight(&acc[free]);
        for _ in 1..count {
            // odometer step, rightmost digit fastest
            let mut pos = free;
            loop {
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < q as usize {
                    break;
                }
                digits[pos] = 0;
            }
            refresh(&mut acc, &digits, pos);
            best = best.min(weight(&acc[free]));
            if best == 1 {
                break;
            }
        }
        debug_assert!(acc[free].len() == self.len);
        best
    }

    /// Minimum weight over all nonzero codewords, splitting the class range
    /// into `partitions` pieces searched one after another.
    pub fn min_weight(&self, partitions: usize) -> Option<usize> {
        let total = self.class_count?;
        partition(total, partitions)
            .into_iter()
            .filter_map(|r| self.min_weight_in(r))
            .min()
    }
}

/// Minimum weight of `PC_nu(m, q)`, found by enumerating every scalar class of
/// nonzero messages. Fails if that needs more than `budget` codewords.
pub fn min_weight_exhaustive(
    space: &ProjectiveSpace<'_>,
    nu: u32,
    budget: u64,
) -> Result<usize, PrmError> {
    let search = prepare_search(space, nu, budget)?;
    Ok(search.min_weight(1).expect("codes in range are nonzero"))
}

/// Builds the search for `PC_nu(m, q)` after checking it fits `budget`.
pub fn prepare_search<'f>(
    space: &ProjectiveSpace<'f>,
    nu: u32,
    budget: u64,
) -> Result<WeightSearch<'f>, PrmError> {
    let gen = generator_matrix(space, nu)?;
    let search = WeightSearch::new(space.field(), &gen.entries);
    match search.class_count() {
        Some(c) if c <= budget => Ok(search),
        _ => Err(PrmError::BudgetExceeded {
            required: search.required(),
            budget,
        }),
    }
}

/// Minimum weight for every `nu` in `1..=m(q-1)`.
pub fn min_weights_all_degrees(
    space: &ProjectiveSpace<'_>,
    budget: u64,
) -> Result<Vec<(u32, usize)>, PrmError> {
    let top = space.dim() as u32 * (space.field().order() - 1);
    (1..=top)
        .map(|nu| min_weight_exhaustive(space, nu, budget).map(|w| (nu, w)))
        .collect()
}

/// True iff no nonzero homogeneous polynomial of degree at most `m(q-1)`
/// is nonzero at exactly one point of P^m, i.e. every code in range has
/// minimum weight at least 2.
pub fn verify_no_single_nonvanishing(
    space: &ProjectiveSpace<'_>,
    budget: u64,
) -> Result<bool, PrmError> {
    Ok(min_weights_all_degrees(space, budget)?
        .iter()
        .all(|&(_, w)| w >= 2))
}
