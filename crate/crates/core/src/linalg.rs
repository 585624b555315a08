//! Dense Gaussian elimination over GF(q).

use alloc::vec::Vec;

use crate::gf::{Elem, Field};

/// Reduces `rows` in place to reduced row echelon form and returns the pivot
/// column of each nonzero row. Zero rows are moved to the bottom and kept.
///
/// Columns are scanned left to right; within a column the pivot is the first
/// row (top to bottom, among rows not yet used) with a nonzero entry.
pub fn rref(field: &Field, rows: &mut [Vec<Elem>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..ncols {
        if next == rows.len() {
            break;
        }
        let Some(found) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next, found);
        let scale = field.inv_nonzero(rows[next][col]);
        if scale != Elem::ONE {
            for x in rows[next].iter_mut() {
                *x = field.mul(*x, scale);
            }
        }
        let (head, tail) = rows.split_at_mut(next);
        let (pivot_row, below) = tail.split_first_mut().expect("pivot row exists");
        for other in head.iter_mut().chain(below.iter_mut()) {
            let factor = other[col];
            if !factor.is_zero() {
                sub_scaled(field, other, pivot_row, factor);
            }
        }
        pivots.push(col);
        next += 1;
    }
    pivots
}

/// `target -= factor * source`, entrywise.
pub fn sub_scaled(field: &Field, target: &mut [Elem], source: &[Elem], factor: Elem) {
    for (t, &s) in target.iter_mut().zip(source) {
        if !s.is_zero() {
            *t = field.sub(*t, field.mul(factor, s));
        }
    }
}

pub fn rank(field: &Field, rows: &[Vec<Elem>]) -> usize {
    let mut work = rows.to_vec();
    rref(field, &mut work).len()
}

/// Reduces `v` against an RREF basis with the given pivots. The result is zero
/// iff `v` lies in the row space.
pub fn reduce(field: &Field, basis: &[Vec<Elem>], pivots: &[usize], v: &[Elem]) -> Vec<Elem> {
    let mut out = v.to_vec();
    for (row, &col) in basis.iter().zip(pivots) {
        let factor = out[col];
        if !factor.is_zero() {
            sub_scaled(field, &mut out, row, factor);
        }
    }
    out
}

/// Pivot columns of a matrix that is already in RREF with no zero rows.
pub fn pivots_of(basis: &[Vec<Elem>]) -> Vec<usize> {
    basis
        .iter()
        .map(|row| row.iter().position(|x| !x.is_zero()).expect("nonzero row"))
        .collect()
}
