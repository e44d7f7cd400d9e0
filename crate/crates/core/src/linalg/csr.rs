//! Compressed sparse row storage for the symmetric operators assembled on
//! the grid. Duplicate triplets are summed; column indices are sorted
//! within each row.

use super::LinearOp;

#[derive(Debug, Clone)]
pub struct Csr {
    n: usize,
    indptr: Vec<usize>,
    indices: Vec<usize>,
    values: Vec<f64>,
}

impl Csr {
    pub fn from_triplets(n: usize, triplets: &[(usize, usize, f64)]) -> Self {
        let mut counts = vec![0usize; n + 1];
        for &(i, _, _) in triplets {
            counts[i + 1] += 1;
        }
        for i in 0..n {
            counts[i + 1] += counts[i];
        }
        let mut cols = vec![0usize; triplets.len()];
        let mut vals = vec![0.0; triplets.len()];
        let mut fill = counts.clone();
        for &(i, j, v) in triplets {
            cols[fill[i]] = j;
            vals[fill[i]] = v;
            fill[i] += 1;
        }
        // Sort each row and merge duplicates.
        let mut indptr = vec![0usize; n + 1];
        let mut indices = Vec::with_capacity(triplets.len());
        let mut values = Vec::with_capacity(triplets.len());
        for i in 0..n {
            let lo = counts[i];
            let hi = counts[i + 1];
            let mut row: Vec<(usize, f64)> =
                (lo..hi).map(|k| (cols[k], vals[k])).collect();
            row.sort_unstable_by_key(|&(j, _)| j);
            for (j, v) in row {
                if let Some(last) = indices.last() {
                    if *last == j && indices.len() > indptr[i] {
                        *values.last_mut().unwrap() += v;
                        continue;
                    }
                }
                indices.push(j);
                values.push(v);
            }
            indptr[i + 1] = indices.len();
        }
        Self {
            n,
            indptr,
            indices,
            values,
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn nnz(&self) -> usize {
        self.indices.len()
    }

    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        let lo = self.indptr[i];
        let hi = self.indptr[i + 1];
        self.indices[lo..hi]
            .iter()
            .copied()
            .zip(self.values[lo..hi].iter().copied())
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        (0..self.n).flat_map(move |i| self.row(i).map(move |(j, v)| (i, j, v)))
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.row(i)
            .find(|&(col, _)| col == j)
            .map_or(0.0, |(_, v)| v)
    }

    /// Largest asymmetry |a_ij - a_ji| relative to the largest entry.
    pub fn asymmetry(&self) -> f64 {
        let scale = self
            .values
            .iter()
            .fold(0.0f64, |m, v| m.max(v.abs()))
            .max(1e-300);
        let mut worst = 0.0f64;
        for (i, j, v) in self.entries() {
            if j > i {
                worst = worst.max((v - self.get(j, i)).abs());
            }
        }
        worst / scale
    }

    /// Smallest Gershgorin disc lower bound min_i (a_ii - sum_{j != i} |a_ij|).
    pub fn gershgorin_min(&self) -> f64 {
        (0..self.n)
            .map(|i| {
                let mut center = 0.0;
                let mut radius = 0.0;
                for (j, v) in self.row(i) {
                    if j == i {
                        center = v;
                    } else {
                        radius += v.abs();
                    }
                }
                center - radius
            })
            .fold(f64::INFINITY, f64::min)
    }

    pub fn bandwidth(&self) -> usize {
        self.entries()
            .map(|(i, j, _)| i.abs_diff(j))
            .max()
            .unwrap_or(0)
    }

    /// A + delta * I. Every diagonal entry is assumed present (true for the
    /// grid operators, which always carry a potential term).
    pub fn shifted(&self, delta: f64) -> Csr {
        let mut out = self.clone();
        for i in 0..out.n {
            let lo = out.indptr[i];
            let hi = out.indptr[i + 1];
            for k in lo..hi {
                if out.indices[k] == i {
                    out.values[k] += delta;
                }
            }
        }
        out
    }
}

impl LinearOp for Csr {
    fn dim(&self) -> usize {
        self.n
    }

    fn apply(&self, x: &[f64], y: &mut [f64]) {
        debug_assert_eq!(x.len(), self.n);
        for i in 0..self.n {
            let mut acc = 0.0;
            for k in self.indptr[i]..self.indptr[i + 1] {
                acc += self.values[k] * x[self.indices[k]];
            }
            y[i] = acc;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triplets_merge_and_sort() {
        let m = Csr::from_triplets(3, &[(0, 2, 1.0), (0, 0, 2.0), (0, 2, 0.5), (2, 1, -1.0)]);
        assert_eq!(m.get(0, 0), 2.0);
        assert_eq!(m.get(0, 2), 1.5);
        assert_eq!(m.get(2, 1), -1.0);
        assert_eq!(m.get(1, 1), 0.0);
        assert_eq!(m.nnz(), 3);
    }

    #[test]
    fn matvec_matches_dense() {
        let m = Csr::from_triplets(2, &[(0, 0, 2.0), (0, 1, 1.0), (1, 0, 1.0), (1, 1, 3.0)]);
        let y = m.apply_vec(&[1.0, -1.0]);
        assert_eq!(y, vec![1.0, -2.0]);
    }

    #[test]
    fn gershgorin_bound() {
        let m = Csr::from_triplets(2, &[(0, 0, 2.0), (0, 1, -1.0), (1, 0, -1.0), (1, 1, 5.0)]);
        assert_eq!(m.gershgorin_min(), 1.0);
    }
}
