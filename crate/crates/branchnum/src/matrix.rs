//! Dense vectors and square matrices over GF(q).
//!
//! Everything here is an immutable value: products, inverses and transposes
//! return fresh matrices, so instances can be shared freely across threads.

use std::fmt;
use std::sync::Arc;

use crate::field::{Field, FieldElement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixError {
    DimensionMismatch { expected: usize, got: usize },
    FieldMismatch,
    /// Entry encoding outside the field, by row-major position.
    EntryOutOfField { row: usize, col: usize, value: u64 },
    NotSquare { rows: usize, cols: usize },
    /// The matrix has no inverse over GF(q).
    Singular,
}

impl fmt::Display for MatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixError::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            MatrixError::FieldMismatch => write!(f, "operands belong to different fields"),
            MatrixError::EntryOutOfField { row, col, value } => {
                write!(f, "entry {value} at ({row}, {col}) is not a field element")
            }
            MatrixError::NotSquare { rows, cols } => {
                write!(f, "matrix must be square, got {rows}x{cols}")
            }
            MatrixError::Singular => write!(f, "matrix is singular"),
        }
    }
}

impl std::error::Error for MatrixError {}

/// Outcome of a weight computation capped by a budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundedWeight {
    /// The true Hamming weight, guaranteed <= budget.
    Within(usize),
    /// The weight exceeds the budget; remaining rows may be skipped.
    Exceeded,
}

/// Hamming weight: number of non-zero entries.
pub fn weight(entries: &[FieldElement]) -> usize {
    entries.iter().filter(|e| !e.is_zero()).count()
}

/// A length-n vector over a shared field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FqVector {
    field: Arc<Field>,
    entries: Vec<FieldElement>,
}

impl FqVector {
    pub fn new(field: Arc<Field>, entries: Vec<FieldElement>) -> Self {
        FqVector { field, entries }
    }

    pub fn from_encodings(field: Arc<Field>, encodings: &[u64]) -> Result<Self, MatrixError> {
        let entries = encodings
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                field.element(v).map_err(|_| MatrixError::EntryOutOfField {
                    row: 0,
                    col: i,
                    value: v,
                })
            })
            .collect::<Result<_, _>>()?;
        Ok(FqVector { field, entries })
    }

    pub fn zero(field: Arc<Field>, n: usize) -> Self {
        FqVector { field, entries: vec![FieldElement::ZERO; n] }
    }

    /// Standard basis vector with a one at `index`.
    pub fn unit(field: Arc<Field>, n: usize, index: usize) -> Self {
        let mut entries = vec![FieldElement::ZERO; n];
        entries[index] = field.one();
        FqVector { field, entries }
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.entries
    }

    pub fn weight(&self) -> usize {
        weight(&self.entries)
    }

    /// Scales every entry by a scalar.
    pub fn scaled(&self, c: FieldElement) -> FqVector {
        let entries = self.entries.iter().map(|&e| self.field.mul(e, c)).collect();
        FqVector { field: Arc::clone(&self.field), entries }
    }
}

/// A dense n x n matrix over GF(q), stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FqMatrix {
    field: Arc<Field>,
    n: usize,
    entries: Vec<FieldElement>,
}

impl FqMatrix {
    pub fn from_elements(
        field: Arc<Field>,
        n: usize,
        entries: Vec<FieldElement>,
    ) -> Result<Self, MatrixError> {
        if entries.len() != n * n {
            return Err(MatrixError::DimensionMismatch { expected: n * n, got: entries.len() });
        }
        Ok(FqMatrix { field, n, entries })
    }

    /// Builds a matrix from row-major encoded entries, validating each one.
    pub fn from_rows(field: Arc<Field>, rows: &[Vec<u64>]) -> Result<Self, MatrixError> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(MatrixError::NotSquare { rows: n, cols: row.len() });
            }
            for (j, &v) in row.iter().enumerate() {
                let e = field
                    .element(v)
                    .map_err(|_| MatrixError::EntryOutOfField { row: i, col: j, value: v })?;
                entries.push(e);
            }
        }
        Ok(FqMatrix { field, n, entries })
    }

    pub fn identity(field: Arc<Field>, n: usize) -> Self {
        let mut entries = vec![FieldElement::ZERO; n * n];
        for i in 0..n {
            entries[i * n + i] = field.one();
        }
        FqMatrix { field, n, entries }
    }

    /// Finite-field Hadamard construction: entry (i, j) is `first_row[i ^ j]`.
    /// Requires characteristic 2 and a power-of-two length.
    pub fn hadamard(field: Arc<Field>, first_row: &[u64]) -> Result<Self, MatrixError> {
        let n = first_row.len();
        if !n.is_power_of_two() {
            return Err(MatrixError::NotSquare { rows: n, cols: n });
        }
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            rows.push((0..n).map(|j| first_row[i ^ j]).collect());
        }
        FqMatrix::from_rows(field, &rows)
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> FieldElement {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    fn check_vector(&self, x: &FqVector) -> Result<(), MatrixError> {
        if self.field.as_ref() != x.field().as_ref() {
            return Err(MatrixError::FieldMismatch);
        }
        if x.len() != self.n {
            return Err(MatrixError::DimensionMismatch { expected: self.n, got: x.len() });
        }
        Ok(())
    }

    /// Matrix-vector product Mx.
    pub fn mat_vec(&self, x: &FqVector) -> Result<FqVector, MatrixError> {
        self.check_vector(x)?;
        let f = &self.field;
        let out = (0..self.n)
            .map(|i| {
                let row = self.row(i);
                let mut acc = FieldElement::ZERO;
                for (m, &v) in row.iter().zip(x.entries()) {
                    acc = f.add(acc, f.mul(*m, v));
                }
                acc
            })
            .collect();
        Ok(FqVector::new(Arc::clone(&self.field), out))
    }

    /// Hamming weight of Mx, abandoned as soon as it exceeds `budget`.
    /// A returned weight is always the true weight of the full product.
    pub fn mat_vec_weight_bounded(
        &self,
        x: &FqVector,
        budget: usize,
    ) -> Result<BoundedWeight, MatrixError> {
        self.check_vector(x)?;
        let f = &self.field;
        let mut count = 0usize;
        for i in 0..self.n {
            let row = self.row(i);
            let mut acc = FieldElement::ZERO;
            for (m, &v) in row.iter().zip(x.entries()) {
                acc = f.add(acc, f.mul(*m, v));
            }
            if !acc.is_zero() {
                count += 1;
                if count > budget {
                    return Ok(BoundedWeight::Exceeded);
                }
            }
        }
        Ok(BoundedWeight::Within(count))
    }

    /// Matrix product self * other.
    pub fn mat_mul(&self, other: &FqMatrix) -> Result<FqMatrix, MatrixError> {
        if self.field.as_ref() != other.field.as_ref() {
            return Err(MatrixError::FieldMismatch);
        }
        if self.n != other.n {
            return Err(MatrixError::DimensionMismatch { expected: self.n, got: other.n });
        }
        let f = &self.field;
        let n = self.n;
        let mut entries = vec![FieldElement::ZERO; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let idx = i * n + j;
                    entries[idx] = f.add(entries[idx], f.mul(a, other.entry(k, j)));
                }
            }
        }
        Ok(FqMatrix { field: Arc::clone(&self.field), n, entries })
    }

    /// Inverse by Gauss-Jordan elimination; pivots are the first non-zero
    /// entry in column order, which is deterministic in exact arithmetic.
    pub fn inverse(&self) -> Result<FqMatrix, MatrixError> {
        let f = &self.field;
        let n = self.n;
        let mut work = self.entries.clone();
        let mut inv = FqMatrix::identity(Arc::clone(&self.field), n).entries;

        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !work[r * n + col].is_zero())
                .ok_or(MatrixError::Singular)?;
            if pivot != col {
                for j in 0..n {
                    work.swap(col * n + j, pivot * n + j);
                    inv.swap(col * n + j, pivot * n + j);
                }
            }
            let scale = f.inv(work[col * n + col]).expect("pivot is non-zero");
            for j in 0..n {
                work[col * n + j] = f.mul(work[col * n + j], scale);
                inv[col * n + j] = f.mul(inv[col * n + j], scale);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = work[r * n + col];
                if factor.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let w = f.mul(factor, work[col * n + j]);
                    work[r * n + j] = f.sub(work[r * n + j], w);
                    let v = f.mul(factor, inv[col * n + j]);
                    inv[r * n + j] = f.sub(inv[r * n + j], v);
                }
            }
        }
        Ok(FqMatrix { field: Arc::clone(&self.field), n, entries: inv })
    }

    pub fn transpose(&self) -> FqMatrix {
        let n = self.n;
        let mut entries = vec![FieldElement::ZERO; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entry(i, j);
            }
        }
        FqMatrix { field: Arc::clone(&self.field), n, entries }
    }

    /// True iff M * M = I.
    pub fn is_involutory(&self) -> bool {
        match self.mat_mul(self) {
            Ok(sq) => sq == FqMatrix::identity(Arc::clone(&self.field), self.n),
            Err(_) => false,
        }
    }

    /// Structural Hadamard test over characteristic 2: n is a power of two
    /// and the matrix recursively decomposes as [[U, V], [V, U]].
    pub fn is_hadamard_char2(&self) -> bool {
        if self.field.characteristic() != 2 || !self.n.is_power_of_two() {
            return false;
        }
        self.hadamard_block(0, 0, self.n)
    }

    fn hadamard_block(&self, r0: usize, c0: usize, size: usize) -> bool {
        if size == 1 {
            return true;
        }
        let half = size / 2;
        for i in 0..half {
            for j in 0..half {
                if self.entry(r0 + i, c0 + j) != self.entry(r0 + half + i, c0 + half + j) {
                    return false;
                }
                if self.entry(r0 + i, c0 + half + j) != self.entry(r0 + half + i, c0 + j) {
                    return false;
                }
            }
        }
        self.hadamard_block(r0, c0, half) && self.hadamard_block(r0, c0 + half, half)
    }

    /// Sum of the first-row entries; for a characteristic-2 Hadamard matrix
    /// this is the constant c with M^2 = c^2 I.
    pub fn first_row_sum(&self) -> FieldElement {
        let f = &self.field;
        self.row(0).iter().fold(FieldElement::ZERO, |acc, &e| f.add(acc, e))
    }
}
