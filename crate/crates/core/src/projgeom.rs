//! Points and flats of the projective space P^m(F_q).
//!
//! Points are stored by their canonical representative, the one whose leftmost
//! nonzero coordinate is 1. The point order used throughout the crate (and for
//! codeword coordinates) lists the `q^m` points `(1, *, ..., *)` first, then the
//! `q^(m-1)` points `(0, 1, *, ..., *)`, and so on down to `(0, ..., 0, 1)`;
//! inside a block the free coordinates count upward, rightmost fastest.
//!
//! A flat of projective dimension `j` is the row space of a `(j+1) x (m+1)`
//! matrix kept in reduced row echelon form, so two flats are equal exactly when
//! their basis matrices are.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use thiserror::Error;

use crate::gf::{Elem, Field};
use crate::homopoly::HomPoly;
use crate::linalg;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("projective dimension must be at least 1")]
    InvalidDimension,
    #[error("P^{m}(F_{q}) has too many points to index")]
    SpaceTooLarge { m: usize, q: u32 },
    #[error("the zero vector is not a projective point")]
    ZeroVector,
    #[error("expected {expected} coordinates, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("coordinate {value} is not an element of GF({q})")]
    NotInField { value: u32, q: u32 },
    #[error("all generators are zero")]
    ZeroSpan,
    #[error("flat of dimension {dim} is already a hyperplane of P^{m}")]
    AlreadyHyperplane { dim: usize, m: usize },
    #[error("flat of dimension {dim} is not a hyperplane of P^{m}")]
    NotHyperplane { dim: usize, m: usize },
    #[error("flat lives in P^{found}, expected P^{expected}")]
    DimensionMismatch { expected: usize, found: usize },
}

/// A point of P^m in canonical form (leftmost nonzero coordinate is 1).
///
/// `Ord` is the canonical point order described in the module docs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjPoint(Vec<Elem>);

impl ProjPoint {
    pub fn coords(&self) -> &[Elem] {
        &self.0
    }

    /// Index of the leading 1.
    pub fn lead(&self) -> usize {
        self.0
            .iter()
            .position(|x| !x.is_zero())
            .expect("points are nonzero")
    }

    pub fn into_coords(self) -> Vec<Elem> {
        self.0
    }
}

impl AsRef<[Elem]> for ProjPoint {
    fn as_ref(&self) -> &[Elem] {
        &self.0
    }
}

impl Ord for ProjPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lead()
            .cmp(&other.lead())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ProjPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A projective subspace given by its RREF basis. `Ord` compares basis
/// matrices row-major by element encoding.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flat {
    basis: Vec<Vec<Elem>>,
}

impl Flat {
    /// Projective dimension (rank minus one).
    pub fn dim(&self) -> usize {
        self.basis.len() - 1
    }

    /// The `m` of the ambient P^m.
    pub fn ambient_dim(&self) -> usize {
        self.basis[0].len() - 1
    }

    pub fn basis(&self) -> &[Vec<Elem>] {
        &self.basis
    }

    pub fn pivots(&self) -> Vec<usize> {
        linalg::pivots_of(&self.basis)
    }
}

/// P^m over a borrowed field.
#[derive(Clone, Debug)]
pub struct ProjectiveSpace<'f> {
    field: &'f Field,
    m: usize,
    // q^0, q^1, ..., q^m
    powers: Vec<usize>,
    n: usize,
}

impl<'f> ProjectiveSpace<'f> {
    pub fn new(field: &'f Field, m: usize) -> Result<Self, GeomError> {
        if m == 0 {
            return Err(GeomError::InvalidDimension);
        }
        let q = field.order() as usize;
        let too_large = GeomError::SpaceTooLarge {
            m,
            q: field.order(),
        };
        let mut powers = Vec::with_capacity(m + 1);
        let mut acc = 1usize;
        let mut n = 0usize;
        for i in 0..=m {
            if i > 0 {
                acc = acc.checked_mul(q).ok_or(too_large.clone())?;
            }
            powers.push(acc);
            n = n.checked_add(acc).ok_or(too_large.clone())?;
        }
        Ok(ProjectiveSpace {
            field,
            m,
            powers,
            n,
        })
    }

    pub fn field(&self) -> &'f Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    /// `(q^(m+1) - 1) / (q - 1)`.
    pub fn num_points(&self) -> usize {
        self.n
    }

    /// Number of points on a flat of projective dimension `j`.
    pub fn points_on_flat(&self, j: usize) -> usize {
        self.powers[..=j].iter().sum()
    }

    /// The point at position `index` of the canonical order.
    pub fn point_at(&self, mut index: usize) -> ProjPoint {
        assert!(index < self.n, "point index {index} out of range");
        let mut lead = 0;
        while index >= self.powers[self.m - lead] {
            index -= self.powers[self.m - lead];
            lead += 1;
        }
        let mut coords = vec![Elem::ZERO; self.m + 1];
        coords[lead] = Elem::ONE;
        let q = self.field.order() as usize;
        for c in coords[lead + 1..].iter_mut().rev() {
            *c = Elem::new((index % q) as u16);
            index /= q;
        }
        ProjPoint(coords)
    }

    /// Position of `point` in the canonical order.
    pub fn index_of(&self, point: &ProjPoint) -> usize {
        let lead = point.lead();
        let offset: usize = (0..lead).map(|l| self.powers[self.m - l]).sum();
        let q = self.field.order() as usize;
        let within = point.0[lead + 1..]
            .iter()
            .fold(0usize, |acc, c| acc * q + c.value() as usize);
        offset + within
    }

    /// Every point exactly once, in canonical order.
    pub fn points(&self) -> Vec<ProjPoint> {
        (0..self.n).map(|i| self.point_at(i)).collect()
    }

    fn check_vector(&self, v: &[Elem]) -> Result<(), GeomError> {
        if v.len() != self.m + 1 {
            return Err(GeomError::ArityMismatch {
                expected: self.m + 1,
                found: v.len(),
            });
        }
        let q = self.field.order();
        match v.iter().find(|x| x.value() >= q) {
            Some(x) => Err(GeomError::NotInField { value: x.value(), q }),
            None => Ok(()),
        }
    }

    /// Scales a nonzero vector so that its leftmost nonzero coordinate is 1.
    pub fn canonicalize(&self, v: &[Elem]) -> Result<ProjPoint, GeomError> {
        self.check_vector(v)?;
        let lead = v
            .iter()
            .copied()
            .find(|x| !x.is_zero())
            .ok_or(GeomError::ZeroVector)?;
        let scale = self.field.inv_nonzero(lead);
        Ok(ProjPoint(
            v.iter().map(|&x| self.field.mul(x, scale)).collect(),
        ))
    }

    /// The flat spanned by the given vectors.
    pub fn span<V: AsRef<[Elem]>>(&self, generators: &[V]) -> Result<Flat, GeomError> {
        let mut rows = Vec::with_capacity(generators.len());
        for g in generators {
            self.check_vector(g.as_ref())?;
            rows.push(g.as_ref().to_vec());
        }
        let rank = linalg::rref(self.field, &mut rows).len();
        if rank == 0 {
            return Err(GeomError::ZeroSpan);
        }
        rows.truncate(rank);
        Ok(Flat { basis: rows })
    }

    pub fn point_flat(&self, point: &ProjPoint) -> Flat {
        Flat {
            basis: vec![point.0.clone()],
        }
    }

    fn check_flat(&self, flat: &Flat) -> Result<(), GeomError> {
        if flat.ambient_dim() != self.m {
            return Err(GeomError::DimensionMismatch {
                expected: self.m,
                found: flat.ambient_dim(),
            });
        }
        Ok(())
    }

    pub fn contains(&self, flat: &Flat, point: &ProjPoint) -> Result<bool, GeomError> {
        self.check_flat(flat)?;
        self.check_vector(point.coords())?;
        Ok(self.contains_unchecked(flat, &flat.pivots(), point))
    }

    fn contains_unchecked(&self, flat: &Flat, pivots: &[usize], point: &ProjPoint) -> bool {
        linalg::reduce(self.field, &flat.basis, pivots, point.coords())
            .iter()
            .all(|x| x.is_zero())
    }

    /// All points on `flat`, in canonical order.
    pub fn flat_points(&self, flat: &Flat) -> Vec<ProjPoint> {
        let field = self.field;
        let q = field.order() as usize;
        let rows = &flat.basis;
        let k = rows.len();
        let mut out = Vec::with_capacity(self.points_on_flat(k - 1));
        // Coefficient vectors with leading coefficient 1 at position `lead`.
        // Because the basis is in RREF the resulting combination is already
        // canonical.
        for lead in 0..k {
            let free = k - 1 - lead;
            for mut code in 0..self.powers[free] {
                let mut v = rows[lead].clone();
                for row in rows[lead + 1..].iter().rev() {
                    let c = Elem::new((code % q) as u16);
                    code /= q;
                    if !c.is_zero() {
                        for (x, &r) in v.iter_mut().zip(row) {
                            *x = field.add(*x, field.mul(c, r));
                        }
                    }
                }
                debug_assert_eq!(v.iter().find(|x| !x.is_zero()), Some(&Elem::ONE));
                out.push(ProjPoint(v));
            }
        }
        out.sort();
        out
    }

    /// All flats of dimension `dim + 1` that contain `flat`, each once, sorted
    /// by basis matrix. Together they cover P^m and pairwise meet in `flat`.
    pub fn extensions(&self, flat: &Flat) -> Result<Vec<Flat>, GeomError> {
        self.check_flat(flat)?;
        if flat.dim() + 1 >= self.m {
            return Err(GeomError::AlreadyHyperplane {
                dim: flat.dim(),
                m: self.m,
            });
        }
        let mut covered = vec![false; self.n];
        for p in self.flat_points(flat) {
            covered[self.index_of(&p)] = true;
        }
        let mut out = Vec::new();
        let mut gens = flat.basis.clone();
        for idx in 0..self.n {
            if covered[idx] {
                continue;
            }
            gens.push(self.point_at(idx).0);
            let ext = self.span(&gens)?;
            gens.pop();
            for p in self.flat_points(&ext) {
                covered[self.index_of(&p)] = true;
            }
            out.push(ext);
        }
        out.sort();
        Ok(out)
    }

    /// Number of `(j+1)`-flats through a `j`-flat: `(q^(m-j) - 1) / (q - 1)`.
    pub fn extension_count(&self, j: usize) -> usize {
        self.powers[..self.m - j].iter().sum()
    }

    /// The linear form vanishing exactly on the hyperplane `flat`, scaled so its
    /// leftmost nonzero coefficient is 1.
    pub fn hyperplane_form(&self, flat: &Flat) -> Result<HomPoly, GeomError> {
        self.check_flat(flat)?;
        if flat.dim() + 1 != self.m {
            return Err(GeomError::NotHyperplane {
                dim: flat.dim(),
                m: self.m,
            });
        }
        let field = self.field;
        let pivots = flat.pivots();
        let free = (0..=self.m)
            .find(|c| !pivots.contains(c))
            .expect("a hyperplane basis has exactly one free column");
        let mut normal = vec![Elem::ZERO; self.m + 1];
        normal[free] = Elem::ONE;
        for (row, &col) in flat.basis.iter().zip(&pivots) {
            normal[col] = field.neg(row[free]);
        }
        let lead = *normal.iter().find(|x| !x.is_zero()).expect("nonzero");
        let scale = field.inv_nonzero(lead);
        for x in normal.iter_mut() {
            *x = field.mul(*x, scale);
        }
        Ok(HomPoly::linear(&normal))
    }
}
