//! Sparse homogeneous polynomials over GF(q).
//!
//! Terms are keyed by exponent vector. Iteration runs in lexicographically
//! descending exponent order, the same order used for generator-matrix rows.
//! There is no reduction modulo `x^q - x`.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use thiserror::Error;

use crate::gf::{Elem, Field};
use crate::projgeom::{ProjPoint, ProjectiveSpace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("expected {expected} variables, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("term of degree {found} in a polynomial of degree {expected}")]
    DegreeMismatch { expected: u32, found: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomPoly {
    nvars: usize,
    degree: u32,
    terms: BTreeMap<Vec<u32>, Elem>,
}

impl HomPoly {
    pub fn zero(nvars: usize, degree: u32) -> Self {
        HomPoly {
            nvars,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// `c_0 x_0 + ... + c_m x_m`.
    pub fn linear(coeffs: &[Elem]) -> Self {
        let nvars = coeffs.len();
        let terms = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, &c)| {
                let mut e = alloc::vec![0; nvars];
                e[i] = 1;
                (e, c)
            })
            .collect();
        HomPoly {
            nvars,
            degree: 1,
            terms,
        }
    }

    pub fn monomial(exponents: Vec<u32>, coeff: Elem) -> Self {
        let mut p = HomPoly::zero(exponents.len(), exponents.iter().sum());
        if !coeff.is_zero() {
            p.terms.insert(exponents, coeff);
        }
        p
    }

    /// Builds a polynomial from terms, adding up repeated exponent vectors and
    /// dropping zero coefficients.
    pub fn from_terms<I>(field: &Field, nvars: usize, degree: u32, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Vec<u32>, Elem)>,
    {
        let mut p = HomPoly::zero(nvars, degree);
        for (exps, c) in terms {
            if exps.len() != nvars {
                return Err(PolyError::ArityMismatch {
                    expected: nvars,
                    found: exps.len(),
                });
            }
            let d: u32 = exps.iter().sum();
            if d != degree {
                return Err(PolyError::DegreeMismatch {
                    expected: degree,
                    found: d,
                });
            }
            p.add_term(field, exps, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, field: &Field, exps: Vec<u32>, c: Elem) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                let sum = field.add(*slot.get(), c);
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms in lexicographically descending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], Elem)> + '_ {
        self.terms.iter().rev().map(|(e, &c)| (e.as_slice(), c))
    }

    pub fn coefficient(&self, exponents: &[u32]) -> Elem {
        self.terms.get(exponents).copied().unwrap_or(Elem::ZERO)
    }

    fn check_arity(&self, found: usize) -> Result<(), PolyError> {
        if found != self.nvars {
            return Err(PolyError::ArityMismatch {
                expected: self.nvars,
                found,
            });
        }
        Ok(())
    }

    /// Value at an arbitrary coordinate vector (not necessarily canonical),
    /// with `0^0 = 1`.
    pub fn evaluate(&self, field: &Field, coords: &[Elem]) -> Result<Elem, PolyError> {
        self.check_arity(coords.len())?;
        Ok(self.eval_unchecked(field, coords))
    }

    pub(crate) fn eval_unchecked(&self, field: &Field, coords: &[Elem]) -> Elem {
        let mut acc = Elem::ZERO;
        for (exps, &c) in &self.terms {
            let mut term = c;
            for (&x, &e) in coords.iter().zip(exps) {
                if e > 0 {
                    term = field.mul(term, field.pow(x, u64::from(e)));
                }
            }
            acc = field.add(acc, term);
        }
        acc
    }

    pub fn add(&self, field: &Field, other: &HomPoly) -> Result<HomPoly, PolyError> {
        self.check_arity(other.nvars)?;
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(PolyError::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        let degree = if self.is_zero() { other.degree } else { self.degree };
        let mut out = self.clone();
        out.degree = degree;
        for (e, &c) in &other.terms {
            out.add_term(field, e.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, field: &Field, c: Elem) -> HomPoly {
        let mut out = HomPoly::zero(self.nvars, self.degree);
        if !c.is_zero() {
            out.terms = self
                .terms
                .iter()
                .map(|(e, &x)| (e.clone(), field.mul(x, c)))
                .collect();
        }
        out
    }

    /// Product of degree `deg F + deg G`, with cancelled terms removed.
    pub fn mul(&self, field: &Field, other: &HomPoly) -> Result<HomPoly, PolyError> {
        self.check_arity(other.nvars)?;
        let mut out = HomPoly::zero(self.nvars, self.degree + other.degree);
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let slot = out.terms.entry(exps).or_insert(Elem::ZERO);
                *slot = field.add(*slot, field.mul(ca, cb));
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    fn points_where(&self, space: &ProjectiveSpace<'_>, vanish: bool) -> Vec<ProjPoint> {
        assert_eq!(self.nvars, space.dim() + 1, "polynomial arity and space dimension differ");
        let field = space.field();
        space
            .points()
            .into_iter()
            .filter(|p| self.eval_unchecked(field, p.coords()).is_zero() == vanish)
            .collect()
    }

    /// Points of P^m where the polynomial vanishes, in canonical order.
    ///
    /// Panics if the arity does not match `m + 1`.
    pub fn zero_set(&self, space: &ProjectiveSpace<'_>) -> Vec<ProjPoint> {
        self.points_where(space, true)
    }

    /// Complement of [`HomPoly::zero_set`].
    pub fn nonvanishing_set(&self, space: &ProjectiveSpace<'_>) -> Vec<ProjPoint> {
        self.points_where(space, false)
    }
}
