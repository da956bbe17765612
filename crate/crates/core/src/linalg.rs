//! Exact dense linear algebra and the structured matrices used by the
//! interpolation solvers.
//!
//! Everything here works over an arbitrary [`FieldSpec`] with exact
//! arithmetic: determinants and kernels come out identical across routes, not
//! merely close. The structured builders produce, for a list of nodes with
//! multiplicities:
//!
//! * the confluent Vandermonde matrix, whose transpose expresses Taylor
//!   (divided-derivative) conditions on polynomial coefficients;
//! * the data matrix pairing node powers with prescribed Taylor values;
//! * the shifted-Wronskian matrix of divided derivatives of `x^t * g`.
//!
//! A [`BorderedMatrix`] is a square matrix whose last column holds
//! polynomials; its determinant — expanded by cofactors along that column,
//! each minor evaluated exactly — is a polynomial.

use std::fmt;

use thiserror::Error;

use crate::field::{FieldElement, FieldSpec};
use crate::poly::Polynomial;

/// Errors raised by matrix construction and elimination.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    /// Entry count does not match the declared shape.
    #[error("expected {rows} x {cols} = {expected} entries, got {got}")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        expected: usize,
        got: usize,
    },
    /// A determinant was requested of a non-square matrix.
    #[error("determinant of a non-square {rows} x {cols} matrix")]
    NonSquare { rows: usize, cols: usize },
    /// Two node blocks share the same node value.
    #[error("repeated node {0}")]
    RepeatedNode(String),
    /// A node's data block length disagrees with its multiplicity.
    #[error("node {node_index}: data block has length {got}, multiplicity says {expected}")]
    DataLengthMismatch {
        node_index: usize,
        expected: usize,
        got: usize,
    },
    /// A divided derivative needed `j!^{-1}` but `j!` is zero in the field.
    #[error("factorial {0}! is not invertible in this field")]
    NonInvertibleFactorial(usize),
    /// A linear solve met a singular matrix.
    #[error("singular matrix")]
    Singular,
    /// A bordered matrix was built with inconsistent body/border sizes.
    #[error("bordered matrix needs an n x (n-1) body and n border entries; got {body_rows} x {body_cols} with {border_len}")]
    BorderMismatch {
        body_rows: usize,
        body_cols: usize,
        border_len: usize,
    },
    /// Right-hand side length does not match the matrix.
    #[error("right-hand side has length {got}, expected {expected}")]
    RhsMismatch { expected: usize, got: usize },
}

/// A dense row-major matrix of exact field elements.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    spec: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    /// Build from row-major entries.
    pub fn new(
        spec: FieldSpec,
        rows: usize,
        cols: usize,
        data: Vec<FieldElement>,
    ) -> Result<Matrix, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::ShapeMismatch {
                rows,
                cols,
                expected: rows * cols,
                got: data.len(),
            });
        }
        for e in &data {
            assert_eq!(e.spec(), &spec, "entry from a different field");
        }
        Ok(Matrix {
            spec,
            rows,
            cols,
            data,
        })
    }

    /// Build entry-by-entry from a function of (row, column).
    pub fn from_fn(
        spec: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> FieldElement,
    ) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix::new(spec, rows, cols, data).expect("shape matches by construction")
    }

    /// The all-zero matrix.
    pub fn zero(spec: &FieldSpec, rows: usize, cols: usize) -> Matrix {
        Matrix {
            spec: spec.clone(),
            rows,
            cols,
            data: vec![spec.zero(); rows * cols],
        }
    }

    /// The coefficient field.
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// The entry at (row, col).
    pub fn get(&self, row: usize, col: usize) -> &FieldElement {
        assert!(row < self.rows && col < self.cols, "index out of range");
        &self.data[row * self.cols + col]
    }

    /// Replace the entry at (row, col).
    pub fn set(&mut self, row: usize, col: usize, value: FieldElement) {
        assert!(row < self.rows && col < self.cols, "index out of range");
        assert_eq!(value.spec(), &self.spec, "entry from a different field");
        self.data[row * self.cols + col] = value;
    }

    /// The transpose.
    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.spec.clone(), self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    /// Stack `self` on top of `other` (same column count, same field).
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.cols {
            return Err(LinalgError::ShapeMismatch {
                rows: self.rows + other.rows,
                cols: self.cols,
                expected: (self.rows + other.rows) * self.cols,
                got: self.rows * self.cols + other.rows * other.cols,
            });
        }
        assert_eq!(self.spec, other.spec, "matrices from different fields");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix::new(self.spec.clone(), self.rows + other.rows, self.cols, data)
    }

    /// A copy with one row deleted.
    pub fn without_row(&self, row: usize) -> Matrix {
        assert!(row < self.rows, "row out of range");
        let mut data = Vec::with_capacity((self.rows - 1) * self.cols);
        for i in 0..self.rows {
            if i == row {
                continue;
            }
            data.extend_from_slice(&self.data[i * self.cols..(i + 1) * self.cols]);
        }
        Matrix {
            spec: self.spec.clone(),
            rows: self.rows - 1,
            cols: self.cols,
            data,
        }
    }

    /// The determinant, by exact Gaussian elimination with row swaps. The
    /// empty 0 x 0 matrix has determinant 1.
    pub fn det(&self) -> Result<FieldElement, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = self.spec.one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m.get(r, col).is_zero());
            let Some(pivot) = pivot else {
                return Ok(self.spec.zero());
            };
            if pivot != col {
                for j in 0..n {
                    let a = m.get(col, j).clone();
                    let b = m.get(pivot, j).clone();
                    m.set(col, j, b);
                    m.set(pivot, j, a);
                }
                det = -&det;
            }
            let pivot_val = m.get(col, col).clone();
            det = &det * &pivot_val;
            let inv = pivot_val.inv().expect("pivot is nonzero");
            for r in col + 1..n {
                let factor = m.get(r, col) * &inv;
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let delta = &factor * m.get(col, j);
                    m.set(r, j, m.get(r, j) - &delta);
                }
            }
        }
        Ok(det)
    }

    /// Solve the square system `self * x = rhs` with a unique solution.
    pub fn solve(&self, rhs: &[FieldElement]) -> Result<Vec<FieldElement>, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if rhs.len() != self.rows {
            return Err(LinalgError::RhsMismatch {
                expected: self.rows,
                got: rhs.len(),
            });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut b: Vec<FieldElement> = rhs.to_vec();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !m.get(r, col).is_zero())
                .ok_or(LinalgError::Singular)?;
            if pivot != col {
                for j in 0..n {
                    let a = m.get(col, j).clone();
                    let v = m.get(pivot, j).clone();
                    m.set(col, j, v);
                    m.set(pivot, j, a);
                }
                b.swap(col, pivot);
            }
            let inv = m.get(col, col).inv().expect("pivot is nonzero");
            for r in col + 1..n {
                let factor = m.get(r, col) * &inv;
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let delta = &factor * m.get(col, j);
                    m.set(r, j, m.get(r, j) - &delta);
                }
                b[r] = &b[r] - &(&factor * &b[col]);
            }
        }
        // Back substitution.
        let mut x = vec![self.spec.zero(); n];
        for row in (0..n).rev() {
            let mut acc = b[row].clone();
            for j in row + 1..n {
                acc = &acc - &(m.get(row, j) * &x[j]);
            }
            x[row] = acc
                .div(m.get(row, row))
                .expect("diagonal is nonzero after elimination");
        }
        Ok(x)
    }

    /// A basis of the right kernel `{ v : self * v = 0 }`.
    pub fn nullspace(&self) -> Vec<Vec<FieldElement>> {
        let mut m = self.clone();
        let rows = self.rows;
        let cols = self.cols;
        // Reduced row echelon form.
        let mut pivot_cols: Vec<usize> = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(pivot) = (r..rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if pivot != r {
                for j in 0..cols {
                    let a = m.get(r, j).clone();
                    let b = m.get(pivot, j).clone();
                    m.set(r, j, b);
                    m.set(pivot, j, a);
                }
            }
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in 0..cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in 0..cols {
                    let delta = &factor * m.get(r, j);
                    m.set(i, j, m.get(i, j) - &delta);
                }
            }
            pivot_cols.push(c);
            r += 1;
            if r == rows {
                break;
            }
        }
        let free_cols: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
        let mut basis = Vec::with_capacity(free_cols.len());
        for &fc in &free_cols {
            let mut v = vec![self.spec.zero(); cols];
            v[fc] = self.spec.one();
            for (row, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -m.get(row, fc);
            }
            basis.push(v);
        }
        basis
    }

    /// Row-major text rendering, one string per row, entries in the scalar
    /// text format separated by single spaces.
    pub fn render_rows(&self) -> Vec<String> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.get(i, j).to_text())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.spec)?;
        for row in self.render_rows() {
            writeln!(f, "  [{row}]")?;
        }
        Ok(())
    }
}

fn check_nodes_distinct(nodes: &[(FieldElement, usize)]) -> Result<(), LinalgError> {
    for (i, (x, _)) in nodes.iter().enumerate() {
        for (y, _) in &nodes[..i] {
            if y == x {
                return Err(LinalgError::RepeatedNode(x.to_text()));
            }
        }
    }
    Ok(())
}

fn total_multiplicity(nodes: &[(FieldElement, usize)]) -> usize {
    nodes.iter().map(|(_, m)| m).sum()
}

/// The confluent Vandermonde matrix for distinct nodes with multiplicities.
/// It has `max_power + 1` rows and one column per derivative order per node
/// (total multiplicity columns): the entry in power-row `k` and the column
/// for derivative order `j` at node `x` is `C(k, j) * x^{k-j}`, zero when
/// `k < j`.
pub fn build_confluent_vandermonde(
    spec: &FieldSpec,
    nodes: &[(FieldElement, usize)],
    max_power: usize,
) -> Result<Matrix, LinalgError> {
    check_nodes_distinct(nodes)?;
    let cols = total_multiplicity(nodes);
    let rows = max_power + 1;
    let mut data = Vec::with_capacity(rows * cols);
    for k in 0..rows {
        for (x, mult) in nodes {
            for j in 0..*mult {
                data.push(if j > k {
                    spec.zero()
                } else {
                    &spec.binomial(k, j) * &x.pow(k - j)
                });
            }
        }
    }
    Matrix::new(spec.clone(), rows, cols, data)
}

/// The data matrix pairing node powers with prescribed Taylor values: same
/// shape as the confluent Vandermonde, but the entry in power-row `k` and the
/// column for order `l` at node `x` with values `y_0..` is
/// `sum_{j=0..l} C(k, j) * y_{l-j} * x^{k-j}` (terms with `j > k` drop out).
pub fn build_data_matrix(
    spec: &FieldSpec,
    points: &[(FieldElement, Vec<FieldElement>)],
    max_power: usize,
) -> Result<Matrix, LinalgError> {
    let nodes: Vec<(FieldElement, usize)> = points
        .iter()
        .map(|(x, vals)| (x.clone(), vals.len()))
        .collect();
    check_nodes_distinct(&nodes)?;
    let cols = total_multiplicity(&nodes);
    let rows = max_power + 1;
    let mut data = Vec::with_capacity(rows * cols);
    for k in 0..rows {
        for (x, values) in points {
            for l in 0..values.len() {
                let mut acc = spec.zero();
                for j in 0..=l.min(k) {
                    let term = &(&spec.binomial(k, j) * &values[l - j]) * &x.pow(k - j);
                    acc = &acc + &term;
                }
                data.push(acc);
            }
        }
    }
    Matrix::new(spec.clone(), rows, cols, data)
}

/// The shifted-Wronskian matrix of a polynomial `g` at the given nodes: row
/// `t` (for `t = 0..rows`) holds, per node and derivative order `j`, the
/// divided derivative `(x^t * g)^{(j)}(x_i) / j!`. Errors when some needed
/// `j!` is not invertible in the field.
pub fn build_wronskian(
    spec: &FieldSpec,
    nodes: &[(FieldElement, usize)],
    g: &Polynomial,
    rows: usize,
) -> Result<Matrix, LinalgError> {
    check_nodes_distinct(nodes)?;
    let cols = total_multiplicity(nodes);
    let max_mult = nodes.iter().map(|(_, m)| *m).max().unwrap_or(0);
    let mut inv_factorials = Vec::with_capacity(max_mult);
    for j in 0..max_mult {
        inv_factorials.push(
            spec.factorial(j)
                .inv()
                .map_err(|_| LinalgError::NonInvertibleFactorial(j))?,
        );
    }
    let mut data = Vec::with_capacity(rows * cols);
    for t in 0..rows {
        let shifted = g.shift_up(t);
        for (x, mult) in nodes {
            for j in 0..*mult {
                let val = shifted.formal_derivative(j).eval(x);
                data.push(&val * &inv_factorials[j]);
            }
        }
    }
    Matrix::new(spec.clone(), rows, cols, data)
}

/// A square matrix presented as an `n x (n-1)` scalar body plus a final
/// column of polynomials.
#[derive(Clone)]
pub struct BorderedMatrix {
    body: Matrix,
    border: Vec<Polynomial>,
}

impl BorderedMatrix {
    /// Build from a body and its polynomial border column.
    pub fn new(body: Matrix, border: Vec<Polynomial>) -> Result<BorderedMatrix, LinalgError> {
        if border.len() != body.rows() || body.cols() + 1 != body.rows() {
            return Err(LinalgError::BorderMismatch {
                body_rows: body.rows(),
                body_cols: body.cols(),
                border_len: border.len(),
            });
        }
        Ok(BorderedMatrix { body, border })
    }

    /// The scalar body.
    pub fn body(&self) -> &Matrix {
        &self.body
    }

    /// The polynomial border column.
    pub fn border(&self) -> &[Polynomial] {
        &self.border
    }

    /// The polynomial determinant, by cofactor expansion along the border
    /// column; each scalar minor is evaluated by exact elimination.
    pub fn det(&self) -> Result<Polynomial, LinalgError> {
        let minors = row_deleted_minors(&self.body)?;
        let spec = self.body.spec().clone();
        let n = self.body.rows();
        let mut acc = Polynomial::zero(&spec);
        for (i, border_poly) in self.border.iter().enumerate() {
            if border_poly.is_zero() {
                continue;
            }
            let signed = if (i + n - 1) % 2 == 0 {
                minors[i].clone()
            } else {
                -&minors[i]
            };
            acc = &acc + &border_poly.scale(&signed);
        }
        Ok(acc)
    }
}

/// For an `n x (n-1)` matrix, the `n` minors obtained by deleting each row in
/// turn (unsigned). Shared by the bordered determinant and the subresultant
/// builder, which combines one set of minors with several border columns.
pub fn row_deleted_minors(body: &Matrix) -> Result<Vec<FieldElement>, LinalgError> {
    if body.cols() + 1 != body.rows() {
        return Err(LinalgError::BorderMismatch {
            body_rows: body.rows(),
            body_cols: body.cols(),
            border_len: body.rows(),
        });
    }
    (0..body.rows()).map(|i| body.without_row(i).det()).collect()
}

/// The bordered determinant of [`BorderedMatrix::det`], as a free function
/// mirroring the builder naming.
pub fn det_bordered(m: &BorderedMatrix) -> Result<Polynomial, LinalgError> {
    m.det()
}
