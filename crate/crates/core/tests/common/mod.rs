//! Self-contained oracles for the acceptance suite.
//!
//! Everything here recomputes results through deliberately different code
//! paths than the library: determinants by cofactor expansion instead of
//! Gaussian elimination, and solvability by a direct homogeneous linear
//! system built from the raw data instead of subresultants.

use ratinterp::field::{FieldElement, FieldSpec};
use ratinterp::interp::InterpolationProblem;
use ratinterp::linalg::Matrix;

/// Determinant by recursive cofactor expansion along the first column.
/// Exponential, fine for the small matrices the suite uses.
pub fn det_cofactor_oracle(m: &Matrix) -> FieldElement {
    assert_eq!(m.rows(), m.cols(), "oracle needs a square matrix");
    let grid: Vec<Vec<FieldElement>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).clone()).collect())
        .collect();
    det_grid(m.spec(), &grid)
}

fn det_grid(spec: &FieldSpec, grid: &[Vec<FieldElement>]) -> FieldElement {
    let n = grid.len();
    if n == 0 {
        return spec.one();
    }
    if n == 1 {
        return grid[0][0].clone();
    }
    let mut acc = spec.zero();
    for (i, row) in grid.iter().enumerate() {
        if row[0].is_zero() {
            continue;
        }
        let minor: Vec<Vec<FieldElement>> = grid
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, r)| r[1..].to_vec())
            .collect();
        let term = &row[0] * &det_grid(spec, &minor);
        acc = if i % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Exact reduced row echelon form of `rows`, in place; returns the pivot
/// column of each pivot row.
fn rref(rows: &mut [Vec<FieldElement>]) -> Vec<usize> {
    let height = rows.len();
    if height == 0 {
        return Vec::new();
    }
    let width = rows[0].len();
    let mut pivot_cols = Vec::new();
    let mut rank = 0usize;
    for col in 0..width {
        let Some(src) = (rank..height).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, src);
        let inv = rows[rank][col].inv().expect("pivot is nonzero");
        for c in col..width {
            rows[rank][c] = &rows[rank][c] * &inv;
        }
        for r in 0..height {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..width {
                    rows[r][c] = &rows[r][c] - &(&factor * &rows[rank][c]);
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
        if rank == height {
            break;
        }
    }
    pivot_cols
}

/// Kernel basis of the homogeneous system `rows * v = 0`.
fn kernel_basis(spec: &FieldSpec, mut rows: Vec<Vec<FieldElement>>, width: usize) -> Vec<Vec<FieldElement>> {
    let pivot_cols = rref(&mut rows);
    let free_cols: Vec<usize> = (0..width).filter(|c| !pivot_cols.contains(c)).collect();
    free_cols
        .iter()
        .map(|&free| {
            let mut v = vec![spec.zero(); width];
            v[free] = spec.one();
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -&rows[r][free];
            }
            v
        })
        .collect()
}

/// Whether an admissible pair `(A, B)` exists, decided by brute force: build
/// the homogeneous Taylor-condition system in the `a + b + 2` coefficients of
/// `A` and `B`, take its kernel, and check that no node forces `B` to vanish
/// on the whole kernel. Valid over the rationals and over prime fields with
/// more elements than there are nodes.
pub fn brute_force_solvable(p: &InterpolationProblem) -> bool {
    let spec = p.field().clone();
    let a = p.num_degree();
    let b = p.den_degree();
    let width = a + b + 2;

    // One row per condition (node i, order t): the t-th Taylor coefficient
    // of A - B*h at x_i is zero, where h carries the data values y_{i,j}.
    let mut rows: Vec<Vec<FieldElement>> = Vec::new();
    for node in p.nodes() {
        let x = &node.x;
        for t in 0..node.values.len() {
            let mut row = Vec::with_capacity(width);
            for k in 0..=a {
                row.push(taylor_of_monomial(&spec, k, t, x));
            }
            for m in 0..=b {
                let mut acc = spec.zero();
                for j in 0..=t.min(m) {
                    let term = &taylor_of_monomial(&spec, m, j, x) * &node.values[t - j];
                    acc = &acc + &term;
                }
                row.push(-&acc);
            }
            rows.push(row);
        }
    }

    let basis = kernel_basis(&spec, rows, width);
    if basis.is_empty() {
        return false;
    }
    // B = 0 forces A = 0, so every nonzero kernel vector has B != 0; the
    // problem is solvable iff no single node kills B across the whole kernel.
    p.nodes().iter().all(|node| {
        basis
            .iter()
            .any(|v| !eval_tail(&spec, &v[a + 1..], &node.x).is_zero())
    })
}

/// The t-th Taylor coefficient of `x^k` at the point: `C(k, t) x^{k-t}`.
fn taylor_of_monomial(
    spec: &FieldSpec,
    k: usize,
    t: usize,
    x: &FieldElement,
) -> FieldElement {
    if t > k {
        return spec.zero();
    }
    &spec.binomial(k, t) * &x.pow(k - t)
}

fn eval_tail(spec: &FieldSpec, coeffs: &[FieldElement], x: &FieldElement) -> FieldElement {
    let mut acc = spec.zero();
    for c in coeffs.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}
