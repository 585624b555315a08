//! Separating hyperplanes for small point sets, and the product polynomial
//! built from them.
//!
//! Given distinct points `P_1, ..., P_t` of P^m with `t <= q + 1`, a hyperplane
//! through `P_i` that misses every other `P_j` is found by growing a chain of
//! flats `V_0 = {P_i} < V_1 < ... < V_{m-1}`. At each step the flats of the next
//! dimension through the current one cover P^m and meet pairwise only in it, so
//! each other point blocks at most one of them. There are
//! `(q^(m-j) - 1) / (q - 1) >= q + 1 > t - 1` candidates when extending a
//! `j`-flat, hence an unblocked one always exists. Every member of the chain
//! avoids the other points, not just the final hyperplane.
//!
//! Ties are broken by taking the first unblocked extension in basis order, so
//! the output is a deterministic function of the input.

use alloc::vec::Vec;

use thiserror::Error;

use crate::gf::Elem;
use crate::homopoly::{HomPoly, PolyError};
use crate::projgeom::{Flat, GeomError, ProjPoint, ProjectiveSpace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeparationError {
    #[error("instance has no points")]
    Empty,
    #[error("{t} points exceed the limit q+1={max}")]
    TooManyPoints { t: usize, max: usize },
    #[error("gap product needs at least 2 points, got {t}")]
    TooFewPoints { t: usize },
    #[error("points {first} and {second} coincide")]
    DuplicatePoints { first: usize, second: usize },
    #[error("target index {index} out of range for {t} points")]
    TargetOutOfRange { index: usize, t: usize },
    #[error("no extension of the dimension-{dim} flat avoids the other points")]
    NoAvoidingExtension { dim: usize },
    #[error("instance points are not the non-vanishing set of the polynomial")]
    NonvanishingSetMismatch,
    #[error("degree {nu} is not of the form (m-1)(q-1)+s+1 with 0 <= s < q-1")]
    WrongRegime { nu: u32 },
    #[error("polynomial has degree {found}, expected {expected}")]
    DegreeMismatch { expected: u32, found: u32 },
    #[error(transparent)]
    Geometry(#[from] GeomError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Distinct points `P_1, ..., P_t` with `1 <= t <= q + 1`. The last point is the
/// distinguished one for [`gap_product`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationInstance {
    points: Vec<ProjPoint>,
}

impl SeparationInstance {
    pub fn new(space: &ProjectiveSpace<'_>, points: Vec<ProjPoint>) -> Result<Self, SeparationError> {
        let t = points.len();
        if t == 0 {
            return Err(SeparationError::Empty);
        }
        let max = space.field().order() as usize + 1;
        if t > max {
            return Err(SeparationError::TooManyPoints { t, max });
        }
        for p in &points {
            if p.coords().len() != space.dim() + 1 {
                return Err(GeomError::ArityMismatch {
                    expected: space.dim() + 1,
                    found: p.coords().len(),
                }
                .into());
            }
        }
        for i in 0..t {
            for j in i + 1..t {
                if points[i] == points[j] {
                    return Err(SeparationError::DuplicatePoints { first: i, second: j });
                }
            }
        }
        Ok(SeparationInstance { points })
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// `V_0 < V_1 < ... < V_{m-1}` with `V_0` the point-flat of the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatChain {
    pub target: usize,
    pub flats: Vec<Flat>,
}

impl FlatChain {
    pub fn hyperplane(&self) -> &Flat {
        self.flats.last().expect("chains are never empty")
    }
}

/// A separating hyperplane for one target point together with its linear form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separator {
    pub chain: FlatChain,
    pub form: HomPoly,
}

impl Separator {
    pub fn hyperplane(&self) -> &Flat {
        self.chain.hyperplane()
    }
}

/// Finds a hyperplane containing point `target` (0-based) and no other instance
/// point, returned as the final flat of the witnessing chain.
pub fn separating_hyperplane(
    space: &ProjectiveSpace<'_>,
    inst: &SeparationInstance,
    target: usize,
) -> Result<FlatChain, SeparationError> {
    let t = inst.len();
    if target >= t {
        return Err(SeparationError::TargetOutOfRange { index: target, t });
    }
    let others: Vec<&ProjPoint> = inst
        .points
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != target)
        .map(|(_, p)| p)
        .collect();

    let mut current = space.point_flat(&inst.points[target]);
    let mut flats = Vec::with_capacity(space.dim());
    flats.push(current.clone());
    for dim in 0..space.dim() - 1 {
        let mut next = None;
        for candidate in space.extensions(&current)? {
            let pivots = candidate.pivots();
            let blocked = others
                .iter()
                .any(|p| contains_with(space, &candidate, &pivots, p));
            if !blocked {
                next = Some(candidate);
                break;
            }
        }
        current = next.ok_or(SeparationError::NoAvoidingExtension { dim })?;
        flats.push(current.clone());
    }
    Ok(FlatChain { target, flats })
}

fn contains_with(space: &ProjectiveSpace<'_>, flat: &Flat, pivots: &[usize], p: &ProjPoint) -> bool {
    crate::linalg::reduce(space.field(), flat.basis(), pivots, p.coords())
        .iter()
        .all(|x| x.is_zero())
}

/// One separator per instance point: `G_i(P_i) = 0` and `G_i(P_j) != 0` for
/// every `j != i`.
pub fn separating_family(
    space: &ProjectiveSpace<'_>,
    inst: &SeparationInstance,
) -> Result<Vec<Separator>, SeparationError> {
    (0..inst.len())
        .map(|i| separator_for(space, inst, i))
        .collect()
}

pub fn separator_for(
    space: &ProjectiveSpace<'_>,
    inst: &SeparationInstance,
    target: usize,
) -> Result<Separator, SeparationError> {
    let chain = separating_hyperplane(space, inst, target)?;
    let form = space.hyperplane_form(chain.hyperplane())?;
    Ok(Separator { chain, form })
}

/// `table[i][j] = G_i(P_j)`.
pub fn evaluation_table(
    space: &ProjectiveSpace<'_>,
    inst: &SeparationInstance,
    family: &[Separator],
) -> Vec<Vec<Elem>> {
    family
        .iter()
        .map(|s| {
            inst.points
                .iter()
                .map(|p| s.form.eval_unchecked(space.field(), p.coords()))
                .collect()
        })
        .collect()
}

/// `F * G_1 * ... * G_{t-1}`, where `G_i` separates `P_i` from the rest of the
/// instance. Requires the instance to be exactly the non-vanishing set of `F`;
/// the result then vanishes everywhere except at the last instance point.
pub fn gap_product(
    space: &ProjectiveSpace<'_>,
    poly: &HomPoly,
    inst: &SeparationInstance,
) -> Result<HomPoly, SeparationError> {
    if inst.len() < 2 {
        return Err(SeparationError::TooFewPoints { t: inst.len() });
    }
    build_product(space, poly, inst)
}

fn build_product(
    space: &ProjectiveSpace<'_>,
    poly: &HomPoly,
    inst: &SeparationInstance,
) -> Result<HomPoly, SeparationError> {
    if poly.nvars() != space.dim() + 1 {
        return Err(PolyError::ArityMismatch {
            expected: space.dim() + 1,
            found: poly.nvars(),
        }
        .into());
    }
    let mut support = poly.nonvanishing_set(space);
    let mut wanted = inst.points.clone();
    support.sort();
    wanted.sort();
    if support != wanted {
        return Err(SeparationError::NonvanishingSetMismatch);
    }
    let field = space.field();
    let mut product = poly.clone();
    for i in 0..inst.len() - 1 {
        let sep = separator_for(space, inst, i)?;
        product = product.mul(field, &sep.form)?;
    }
    Ok(product)
}

/// What the product construction produced, checked against P^m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapWitness {
    pub product: HomPoly,
    pub degree: u32,
    /// `m (q - 1)`
    pub degree_bound: u32,
    pub within_bound: bool,
    pub zero_count: usize,
    pub nonvanishing: Vec<ProjPoint>,
}

impl GapWitness {
    /// True iff the product vanishes everywhere except at exactly `point`.
    pub fn isolates(&self, point: &ProjPoint) -> bool {
        self.nonvanishing.len() == 1 && &self.nonvanishing[0] == point
    }
}

/// Runs [`gap_product`] and measures the result.
pub fn gap_witness(
    space: &ProjectiveSpace<'_>,
    poly: &HomPoly,
    inst: &SeparationInstance,
) -> Result<GapWitness, SeparationError> {
    let product = gap_product(space, poly, inst)?;
    Ok(witness_of(space, product))
}

fn witness_of(space: &ProjectiveSpace<'_>, product: HomPoly) -> GapWitness {
    let degree_bound = space.dim() as u32 * (space.field().order() - 1);
    let nonvanishing = product.nonvanishing_set(space);
    GapWitness {
        degree: product.degree(),
        degree_bound,
        within_bound: product.degree() <= degree_bound,
        zero_count: space.num_points() - nonvanishing.len(),
        nonvanishing,
        product,
    }
}

/// Outcome of testing one polynomial against the dichotomy
/// `|Z(F)| = n` or `|Z(F)| <= n - (q - s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RegimeOutcome {
    /// `F` vanishes at every point (`t = 0`).
    VanishesEverywhere,
    /// `t >= q - s`: the dichotomy holds for this `F`.
    Holds,
    /// `0 < t < q - s`: the product construction, which would contradict the
    /// impossibility of a single non-vanishing point.
    Counterexample(GapWitness),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContradictionReport {
    pub nu: u32,
    pub s: u32,
    /// size of the non-vanishing set
    pub t: usize,
    /// `q - s`
    pub threshold: usize,
    pub outcome: RegimeOutcome,
}

impl ContradictionReport {
    pub fn holds(&self) -> bool {
        !matches!(self.outcome, RegimeOutcome::Counterexample(_))
    }
}

/// Checks a degree-`nu` polynomial with `nu = (m-1)(q-1) + s + 1`,
/// `0 <= s < q - 1`, against the dichotomy above.
pub fn contradiction_report(
    space: &ProjectiveSpace<'_>,
    nu: u32,
    poly: &HomPoly,
) -> Result<ContradictionReport, SeparationError> {
    let q = space.field().order();
    let m = space.dim() as u32;
    let floor = (m - 1) * (q - 1) + 1;
    if nu < floor || nu > m * (q - 1) {
        return Err(SeparationError::WrongRegime { nu });
    }
    if poly.degree() != nu {
        return Err(SeparationError::DegreeMismatch {
            expected: nu,
            found: poly.degree(),
        });
    }
    let s = nu - floor;
    let threshold = (q - s) as usize;
    let nonvanishing = poly.nonvanishing_set(space);
    let t = nonvanishing.len();
    let outcome = if t == 0 {
        RegimeOutcome::VanishesEverywhere
    } else if t >= threshold {
        RegimeOutcome::Holds
    } else {
        let inst = SeparationInstance::new(space, nonvanishing)?;
        let product = build_product(space, poly, &inst)?;
        RegimeOutcome::Counterexample(witness_of(space, product))
    };
    Ok(ContradictionReport {
        nu,
        s,
        t,
        threshold,
        outcome,
    })
}
