//! Dense matrices over GF(p), rank by Gaussian elimination, and an
//! incremental row space used for graded dimension and membership checks.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::PrimeField;

/// Default cap on dense matrix entries.
pub const MAX_MATRIX_ENTRIES: usize = 4_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

impl FieldMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        let entries = rows.saturating_mul(cols);
        if entries > MAX_MATRIX_ENTRIES {
            return Err(Error::MatrixTooLarge { entries, cap: MAX_MATRIX_ENTRIES });
        }
        Ok(Self { rows, cols, entries: vec![0; entries] })
    }

    /// Builds a matrix from rows of equal length, reducing entries mod `p`.
    pub fn from_rows(field: &PrimeField, cols: usize, rows: &[Vec<u64>]) -> Result<Self> {
        let mut m = Self::zeros(rows.len(), cols)?;
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::InvalidArgument("ragged matrix rows".into()));
            }
            for (c, &v) in row.iter().enumerate() {
                m.entries[r * cols + c] = v % field.modulus();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

/// Rank over GF(p). Columns are scanned left to right and the pivot is the
/// first nonzero entry at or below the current row.
pub fn rank(field: &PrimeField, m: &FieldMatrix) -> usize {
    let mut work = m.clone();
    let mut row = 0;
    for col in 0..work.cols {
        if row == work.rows {
            break;
        }
        let Some(pivot) = (row..work.rows).find(|&r| work.get(r, col) != 0) else {
            continue;
        };
        work.swap_rows(row, pivot);
        let inv = field.inv(work.get(row, col)).expect("pivot is nonzero");
        for c in col..work.cols {
            let v = field.mul(work.get(row, c), inv);
            work.set(row, c, v);
        }
        for r in row + 1..work.rows {
            let factor = work.get(r, col);
            if factor == 0 {
                continue;
            }
            for c in col..work.cols {
                let v = field.sub(work.get(r, c), field.mul(factor, work.get(row, c)));
                work.set(r, c, v);
            }
        }
        row += 1;
    }
    row
}

/// Incrementally maintained row echelon basis of a subspace of GF(p)^cols.
///
/// With tracking enabled every basis row also stores its expression as a
/// combination of the inserted vectors, so membership queries can return
/// explicit witnesses.
#[derive(Debug, Clone)]
pub struct RowSpace {
    field: PrimeField,
    cols: usize,
    rows: Vec<Vec<u64>>,
    combos: Vec<Vec<u64>>,
    pivot_row: Vec<Option<usize>>,
    tracked: bool,
    inserted: usize,
}

impl RowSpace {
    pub fn new(field: PrimeField, cols: usize) -> Self {
        Self {
            field,
            cols,
            rows: Vec::new(),
            combos: Vec::new(),
            pivot_row: vec![None; cols],
            tracked: false,
            inserted: 0,
        }
    }

    /// Row space that records combinations of the inserted vectors.
    pub fn tracked(field: PrimeField, cols: usize) -> Self {
        Self { tracked: true, ..Self::new(field, cols) }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    /// Reduces `v` against the basis. Returns the residue and, when tracking,
    /// the combination of inserted vectors that was subtracted.
    fn reduce(&self, v: &mut [u64]) -> Vec<u64> {
        let f = &self.field;
        let mut used = if self.tracked { vec![0u64; self.inserted] } else { Vec::new() };
        for col in 0..self.cols {
            if v[col] == 0 {
                continue;
            }
            let Some(r) = self.pivot_row[col] else { continue };
            let factor = v[col];
            let row = &self.rows[r];
            for c in col..self.cols {
                if row[c] != 0 {
                    v[c] = f.sub(v[c], f.mul(factor, row[c]));
                }
            }
            if self.tracked {
                for (u, &k) in used.iter_mut().zip(&self.combos[r]) {
                    if k != 0 {
                        *u = f.add(*u, f.mul(factor, k));
                    }
                }
            }
        }
        used
    }

    /// Inserts a vector; returns whether it enlarged the space.
    pub fn insert(&mut self, vector: &[u64]) -> bool {
        assert_eq!(vector.len(), self.cols, "vector length mismatch");
        let mut v = vector.to_vec();
        let index = self.inserted;
        let used = self.reduce(&mut v);
        self.inserted += 1;
        if self.tracked {
            for combo in &mut self.combos {
                combo.push(0);
            }
        }
        let Some(lead) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let f = self.field;
        let inv = f.inv(v[lead]).expect("leading entry is nonzero");
        for x in &mut v[lead..] {
            *x = f.mul(*x, inv);
        }
        if self.tracked {
            // basis row = inv * (e_index - used)
            let mut combo: Vec<u64> = used.iter().map(|&u| f.mul(f.neg(u), inv)).collect();
            combo.push(inv);
            debug_assert_eq!(combo.len(), index + 1);
            self.combos.push(combo);
        }
        self.pivot_row[lead] = Some(self.rows.len());
        self.rows.push(v);
        true
    }

    pub fn contains(&self, vector: &[u64]) -> bool {
        let mut v = vector.to_vec();
        self.reduce(&mut v);
        v.iter().all(|&x| x == 0)
    }

    /// Coefficients over the inserted vectors that sum to `vector`, or `None`
    /// if it lies outside the span. Requires tracking.
    pub fn express(&self, vector: &[u64]) -> Option<Vec<u64>> {
        assert!(self.tracked, "express needs a tracked row space");
        let mut v = vector.to_vec();
        let used = self.reduce(&mut v);
        v.iter().all(|&x| x == 0).then_some(used)
    }
}
