//! Exact dense linear algebra over the small finite fields of [`crate::field`].

use crate::field::{Elt, Field};

/// Row-major matrix over a finite field. The field lives outside the matrix;
/// every operation takes it as context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Elt>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Elt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend(row);
        }
        Mat { rows: r, cols: c, data }
    }

    pub fn row(&self, i: usize) -> &[Elt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, other: &Mat, f: &Field) -> Mat {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other[(k, j)];
                    if b != 0 {
                        out[(i, j)] = f.add(out[(i, j)], f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Mat, f: &Field) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Mat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, c: Elt, f: &Field) -> Mat {
        let data = self.data.iter().map(|&a| f.mul(a, c)).collect();
        Mat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    pub fn apply(&self, v: &[Elt], f: &Field) -> Vec<Elt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = 0;
                for j in 0..self.cols {
                    acc = f.add(acc, f.mul(self[(i, j)], v[j]));
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form, returning pivot column indices.
    pub fn rref(&mut self, f: &Field) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self[(i, c)] != 0) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = f.inv(self[(r, c)]);
            for j in c..self.cols {
                self[(r, j)] = f.mul(self[(r, j)], inv);
            }
            for i in 0..self.rows {
                if i != r && self[(i, c)] != 0 {
                    let factor = self[(i, c)];
                    for j in c..self.cols {
                        let sub = f.mul(factor, self[(r, j)]);
                        self[(i, j)] = f.sub(self[(i, j)], sub);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self, f: &Field) -> usize {
        let mut m = self.clone();
        m.rref(f).len()
    }

    pub fn det(&self, f: &Field) -> Elt {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let mut det = f.one();
        for c in 0..m.cols {
            let Some(pr) = (c..m.rows).find(|&i| m[(i, c)] != 0) else {
                return 0;
            };
            if pr != c {
                m.swap_rows(c, pr);
                det = f.neg(det);
            }
            det = f.mul(det, m[(c, c)]);
            let inv = f.inv(m[(c, c)]);
            for i in c + 1..m.rows {
                if m[(i, c)] != 0 {
                    let factor = f.mul(m[(i, c)], inv);
                    for j in c..m.cols {
                        let sub = f.mul(factor, m[(c, j)]);
                        m[(i, j)] = f.sub(m[(i, j)], sub);
                    }
                }
            }
        }
        det
    }

    pub fn inverse(&self, f: &Field) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Mat::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, n + i)] = 1;
        }
        let pivots = aug.rref(f);
        if pivots.len() < n || pivots.iter().enumerate().any(|(k, &c)| c != k) {
            return None;
        }
        let mut out = Mat::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = aug[(i, n + j)];
            }
        }
        Some(out)
    }

    /// Basis of the right kernel, as rows.
    pub fn kernel(&self, f: &Field) -> Mat {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Mat::zero(free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            out[(k, fc)] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                out[(k, pc)] = f.neg(m[(r, fc)]);
            }
        }
        out
    }

    /// One solution x of self * x = b, if any.
    pub fn solve(&self, b: &[Elt], f: &Field) -> Option<Vec<Elt>> {
        assert_eq!(self.rows, b.len());
        let mut aug = Mat::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, self.cols)] = b[i];
        }
        let pivots = aug.rref(f);
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![0; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug[(r, self.cols)];
        }
        Some(x)
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = Elt;
    fn index(&self, (i, j): (usize, usize)) -> &Elt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Elt {
        &mut self.data[i * self.cols + j]
    }
}

/// Row span membership and related subspace computations, built on one rref pass.
pub struct RowSpace {
    reduced: Mat,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(rows: Mat, f: &Field) -> Self {
        let mut reduced = rows;
        let pivots = reduced.rref(f);
        reduced.rows = pivots.len();
        reduced.data.truncate(pivots.len() * reduced.cols);
        RowSpace { reduced, pivots }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// Reduce v against the space; returns the residual (zero iff contained).
    pub fn residual(&self, v: &[Elt], f: &Field) -> Vec<Elt> {
        let mut v = v.to_vec();
        for (r, &c) in self.pivots.iter().enumerate() {
            if v[c] != 0 {
                let factor = v[c];
                for j in 0..v.len() {
                    let sub = f.mul(factor, self.reduced[(r, j)]);
                    v[j] = f.sub(v[j], sub);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Elt], f: &Field) -> bool {
        self.residual(v, f).iter().all(|&x| x == 0)
    }

    pub fn basis(&self) -> &Mat {
        &self.reduced
    }

    /// Coordinates of v against the original spanning rows are not tracked;
    /// this expresses v against the reduced basis instead.
    pub fn coords(&self, v: &[Elt], f: &Field) -> Option<Vec<Elt>> {
        let mut v = v.to_vec();
        let mut coords = vec![0; self.pivots.len()];
        for (r, &c) in self.pivots.iter().enumerate() {
            if v[c] != 0 {
                coords[r] = v[c];
                let factor = v[c];
                for j in 0..v.len() {
                    let sub = f.mul(factor, self.reduced[(r, j)]);
                    v[j] = f.sub(v[j], sub);
                }
            }
        }
        if v.iter().all(|&x| x == 0) {
            Some(coords)
        } else {
            None
        }
    }
}

/// Do two row spans coincide?
pub fn same_span(a: &Mat, b: &Mat, f: &Field) -> bool {
    let sa = RowSpace::new(a.clone(), f);
    let sb = RowSpace::new(b.clone(), f);
    sa.dim() == sb.dim() && (0..b.rows).all(|i| sa.contains(b.row(i), f))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_solve_kernel_gf3() {
        let f = Field::new(3, 1);
        let m = Mat::from_rows(vec![vec![1, 2, 0], vec![0, 1, 1]]);
        assert_eq!(m.rank(&f), 2);
        let k = m.kernel(&f);
        assert_eq!(k.rows, 1);
        assert!(m.apply(k.row(0), &f).iter().all(|&x| x == 0));
        let sol = m.solve(&[1, 2], &f).unwrap();
        assert_eq!(m.apply(&sol, &f), vec![1, 2]);
    }

    #[test]
    fn inverse_round_trip() {
        let f = Field::new(3, 2);
        let m = Mat::from_rows(vec![vec![1, 2], vec![3, 1]]);
        let inv = m.inverse(&f).unwrap();
        assert_eq!(m.mul(&inv, &f), Mat::identity(2));
        assert_ne!(m.det(&f), 0);
    }

    #[test]
    fn singular_has_no_inverse() {
        let f = Field::new(2, 1);
        let m = Mat::from_rows(vec![vec![1, 1], vec![1, 1]]);
        assert!(m.inverse(&f).is_none());
        assert_eq!(m.det(&f), 0);
    }
}
