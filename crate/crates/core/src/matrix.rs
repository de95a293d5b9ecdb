//! Dense square matrices over the exact scalar field, plus the linear algebra
//! the rest of the crate needs: products, solving, determinants, rank and
//! nullspaces. Everything is exact; there is no pivot-magnitude heuristic,
//! only zero/nonzero pivoting.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::exact::Scalar;

/// Dense `dim x dim` matrix over [`Scalar`], row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    dim: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(dim: usize) -> Self {
        Matrix {
            dim,
            entries: vec![Scalar::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Matrix::zeros(dim);
        for k in 0..dim {
            m.set(k, k, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            assert_eq!(row.len(), dim, "matrix must be square");
            entries.extend(row);
        }
        Matrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.dim + c] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        self == &Matrix::identity(self.dim)
    }

    /// Matrix product, skipping exact zeros (the generator matrices are very
    /// sparse and products of a few of them stay sparse).
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.dim, rhs.dim);
        let d = self.dim;
        let mut out = Matrix::zeros(d);
        for r in 0..d {
            for k in 0..d {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..d {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = &*out.get(r, c) + &(a * b);
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    /// Apply to a column vector.
    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.dim);
        let mut out = vec![Scalar::zero(); self.dim];
        for r in 0..self.dim {
            let mut acc = Scalar::zero();
            for c in 0..self.dim {
                let a = self.get(r, c);
                if a.is_zero() || v[c].is_zero() {
                    continue;
                }
                acc = &acc + &(a * &v[c]);
            }
            out[r] = acc;
        }
        out
    }

    /// First position where the two matrices differ, with both values.
    pub fn first_difference(&self, rhs: &Matrix) -> Option<(usize, usize, Scalar, Scalar)> {
        assert_eq!(self.dim, rhs.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                if self.get(r, c) != rhs.get(r, c) {
                    return Some((r, c, self.get(r, c).clone(), rhs.get(r, c).clone()));
                }
            }
        }
        None
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Scalar {
        let d = self.dim;
        if d == 0 {
            return Scalar::one();
        }
        let mut a = self.clone();
        let mut sign = false;
        let mut prev = Scalar::one();
        for k in 0..d - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..d).find(|&r| !a.get(r, k).is_zero()) {
                    Some(r) => {
                        a.swap_rows(k, r);
                        sign = !sign;
                    }
                    None => return Scalar::zero(),
                }
            }
            for r in k + 1..d {
                for c in k + 1..d {
                    let num = &(a.get(k, k) * a.get(r, c)) - &(a.get(r, k) * a.get(k, c));
                    let v = num.div(&prev).expect("Bareiss division is exact");
                    a.set(r, c, v);
                }
                a.set(r, k, Scalar::zero());
            }
            prev = a.get(k, k).clone();
        }
        let det = a.get(d - 1, d - 1).clone();
        if sign {
            -&det
        } else {
            det
        }
    }

    fn swap_rows(&mut self, r1: usize, r2: usize) {
        if r1 == r2 {
            return;
        }
        for c in 0..self.dim {
            self.entries.swap(r1 * self.dim + c, r2 * self.dim + c);
        }
    }

    /// Solve `self * x = b`. `Ok(None)` when the system is inconsistent or the
    /// solution is not unique.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>, Error> {
        assert_eq!(b.len(), self.dim);
        let d = self.dim;
        let mut aug: Vec<Vec<Scalar>> = (0..d)
            .map(|r| {
                let mut row: Vec<Scalar> = (0..d).map(|c| self.get(r, c).clone()).collect();
                row.push(b[r].clone());
                row
            })
            .collect();
        let rank = rref(&mut aug, d);
        // inconsistent: pivot in the rhs column
        for row in aug.iter().skip(rank) {
            if !row[d].is_zero() {
                return Ok(None);
            }
        }
        if rank < d {
            return Ok(None);
        }
        Ok(Some(aug.into_iter().map(|mut row| row.pop().unwrap()).collect()))
    }

    /// Inverse, if it exists.
    pub fn inverse(&self) -> Option<Matrix> {
        let d = self.dim;
        let mut aug: Vec<Vec<Scalar>> = (0..d)
            .map(|r| {
                let mut row: Vec<Scalar> = (0..d).map(|c| self.get(r, c).clone()).collect();
                for c in 0..d {
                    row.push(if r == c { Scalar::one() } else { Scalar::zero() });
                }
                row
            })
            .collect();
        let rank = rref(&mut aug, d);
        if rank < d {
            return None;
        }
        let mut out = Matrix::zeros(d);
        for r in 0..d {
            for c in 0..d {
                out.set(r, c, aug[r][d + c].clone());
            }
        }
        Some(out)
    }
}

/// Reduced row echelon form over the first `ncols` columns of a rectangular
/// row list (rows may be longer, e.g. augmented). Returns the rank.
pub fn rref(rows: &mut [Vec<Scalar>], ncols: usize) -> usize {
    let nrows = rows.len();
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inv().expect("pivot nonzero");
        for c in col..width {
            rows[rank][c] = &rows[rank][c] * &inv;
        }
        for r in 0..nrows {
            if r == rank || rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            for c in col..width {
                rows[r][c] = &rows[r][c] - &(&factor * &rows[rank][c]);
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// Rank of a rectangular matrix given as rows.
pub fn rank_of(rows: &[Vec<Scalar>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut work: Vec<Vec<Scalar>> = rows.to_vec();
    rref(&mut work, ncols)
}

/// Basis of the right nullspace of a rectangular matrix given as rows.
pub fn nullspace(rows: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    let mut work: Vec<Vec<Scalar>> = rows.to_vec();
    let rank = rref(&mut work, ncols);
    // locate pivot columns
    let mut pivot_cols = Vec::with_capacity(rank);
    for row in work.iter().take(rank) {
        if let Some(col) = (0..ncols).find(|&c| row[c].is_one()) {
            pivot_cols.push(col);
        }
    }
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![Scalar::zero(); ncols];
        v[free] = Scalar::one();
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -&work[r][free];
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Scalar;

    fn m2(a: i64, b: i64, c: i64, d: i64) -> Matrix {
        Matrix::from_rows(vec![
            vec![Scalar::from_i64(a), Scalar::from_i64(b)],
            vec![Scalar::from_i64(c), Scalar::from_i64(d)],
        ])
    }

    #[test]
    fn det_and_inverse() {
        let m = m2(2, 1, 1, 1);
        assert_eq!(m.det(), Scalar::one());
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(m2(1, 2, 2, 4).inverse().is_none());
        assert_eq!(m2(1, 2, 2, 4).det(), Scalar::zero());
    }

    #[test]
    fn det_needs_row_swap() {
        let m = m2(0, 1, 1, 0);
        assert_eq!(m.det(), Scalar::from_i64(-1));
    }

    #[test]
    fn solve_unique_and_singular() {
        let m = m2(2, 1, 1, 1);
        let x = m.solve(&[Scalar::from_i64(3), Scalar::from_i64(2)]).unwrap().unwrap();
        assert_eq!(x, vec![Scalar::one(), Scalar::one()]);
        let s = m2(1, 2, 2, 4);
        assert!(s.solve(&[Scalar::one(), Scalar::zero()]).unwrap().is_none());
    }

    #[test]
    fn nullspace_dimension() {
        let rows = vec![vec![Scalar::one(), Scalar::from_i64(2), Scalar::from_i64(3)]];
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let dot = &(&rows[0][0] * &v[0]) + &(&(&rows[0][1] * &v[1]) + &(&rows[0][2] * &v[2]));
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn symbolic_determinant() {
        // det [[mu, 1], [1, 1]] = mu - 1
        let mu = Scalar::mu();
        let m = Matrix::from_rows(vec![
            vec![mu.clone(), Scalar::one()],
            vec![Scalar::one(), Scalar::one()],
        ]);
        assert_eq!(m.det(), &mu - &Scalar::one());
    }
}
