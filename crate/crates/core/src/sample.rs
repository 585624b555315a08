//! Random instances for demos and property checks. Everything is driven by a
//! caller-supplied generator, so a fixed seed reproduces the same output.

use alloc::vec::Vec;

use rand::seq::index;
use rand::Rng;

use crate::gf::{Elem, Field};
use crate::homopoly::HomPoly;
use crate::linalg;
use crate::prm::monomials;
use crate::projgeom::{Flat, ProjPoint, ProjectiveSpace};

pub fn random_element<R: Rng + ?Sized>(field: &Field, rng: &mut R) -> Elem {
    Elem::new(rng.gen_range(0..field.order()) as u16)
}

pub fn random_nonzero<R: Rng + ?Sized>(field: &Field, rng: &mut R) -> Elem {
    Elem::new(rng.gen_range(1..field.order()) as u16)
}

/// `t` distinct points chosen uniformly, in random order.
pub fn random_points<R: Rng + ?Sized>(
    space: &ProjectiveSpace<'_>,
    t: usize,
    rng: &mut R,
) -> Vec<ProjPoint> {
    index::sample(rng, space.num_points(), t)
        .into_iter()
        .map(|i| space.point_at(i))
        .collect()
}

/// A flat of projective dimension `dim`, spanned by random independent vectors.
pub fn random_flat<R: Rng + ?Sized>(space: &ProjectiveSpace<'_>, dim: usize, rng: &mut R) -> Flat {
    assert!(dim <= space.dim());
    let field = space.field();
    loop {
        let gens: Vec<Vec<Elem>> = (0..=dim)
            .map(|_| (0..=space.dim()).map(|_| random_element(field, rng)).collect())
            .collect();
        if linalg::rank(field, &gens) == dim + 1 {
            return space.span(&gens).expect("independent generators");
        }
    }
}

/// A nonzero homogeneous polynomial with every coefficient drawn uniformly.
pub fn random_hompoly<R: Rng + ?Sized>(field: &Field, nvars: usize, degree: u32, rng: &mut R) -> HomPoly {
    let monos = monomials(nvars - 1, degree);
    loop {
        let terms = monos
            .iter()
            .map(|e| (e.clone(), random_element(field, rng)))
            .collect::<Vec<_>>();
        let p = HomPoly::from_terms(field, nvars, degree, terms).expect("monomials have the right shape");
        if !p.is_zero() {
            return p;
        }
    }
}

/// A product of `degree` random nonzero linear forms. These have large zero
/// sets, so they are a cheap source of polynomials with few non-vanishing
/// points.
pub fn random_linear_product<R: Rng + ?Sized>(
    field: &Field,
    nvars: usize,
    degree: u32,
    rng: &mut R,
) -> HomPoly {
    let mut acc = HomPoly::monomial(alloc::vec![0; nvars], Elem::ONE);
    for _ in 0..degree {
        let form = loop {
            let coeffs: Vec<Elem> = (0..nvars).map(|_| random_element(field, rng)).collect();
            if coeffs.iter().any(|c| !c.is_zero()) {
                break HomPoly::linear(&coeffs);
            }
        };
        acc = acc.mul(field, &form).expect("same arity");
    }
    acc
}

/// Draws degree-`degree` polynomials until one has between `min_t` and `max_t`
/// non-vanishing points, alternating between uniform coefficients and
/// products of linear forms. Gives up after `attempts` draws.
pub fn sample_sparse_support<R: Rng + ?Sized>(
    space: &ProjectiveSpace<'_>,
    degree: u32,
    min_t: usize,
    max_t: usize,
    attempts: usize,
    rng: &mut R,
) -> Option<(HomPoly, Vec<ProjPoint>)> {
    let field = space.field();
    let nvars = space.dim() + 1;
    for attempt in 0..attempts {
        let poly = if attempt % 2 == 0 {
            random_hompoly(field, nvars, degree, rng)
        } else {
            random_linear_product(field, nvars, degree, rng)
        };
        let support = poly.nonvanishing_set(space);
        if (min_t..=max_t).contains(&support.len()) {
            return Some((poly, support));
        }
    }
    None
}
