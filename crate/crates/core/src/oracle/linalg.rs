//! Exact integer elimination. Rows are kept primitive (content divided out)
//! after every update, so entries stay integral without fraction blow-up.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix {
            rows,
            cols,
            data: vec![vec![BigInt::zero(); cols]; rows],
        }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> IntMatrix {
        let cols = rows.first().map_or(0, Vec::len);
        let data: Vec<Vec<BigInt>> = rows
            .into_iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged matrix");
                r.into_iter().map(BigInt::from).collect()
            })
            .collect();
        IntMatrix {
            rows: data.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r][c]
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: i64) {
        self.data[r][c] += v;
    }

    /// Appends `extra` columns of zeros and returns the index of the first.
    pub fn widen(&mut self, extra: usize) -> usize {
        let first = self.cols;
        for row in &mut self.data {
            row.resize(first + extra, BigInt::zero());
        }
        self.cols += extra;
        first
    }

    /// Reduced echelon form (up to row scaling) and the pivot columns.
    pub fn echelon(&self, reduce_above: bool) -> (Vec<Vec<BigInt>>, Vec<usize>) {
        let mut a = self.data.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !a[i][col].is_zero()) else {
                continue;
            };
            a.swap(p, r);
            let start = if reduce_above { 0 } else { r + 1 };
            for k in start..self.rows {
                if k == r || a[k][col].is_zero() {
                    continue;
                }
                let (pv, f) = (a[r][col].clone(), a[k][col].clone());
                let (head, tail) = if k < r {
                    let (h, t) = a.split_at_mut(r);
                    (&mut h[k], &t[0])
                } else {
                    let (h, t) = a.split_at_mut(k);
                    (&mut t[0], &h[r])
                };
                for j in 0..self.cols {
                    head[j] = &pv * &head[j] - &f * &tail[j];
                }
                make_primitive(head);
            }
            pivots.push(col);
            r += 1;
        }
        a.truncate(r);
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.echelon(false).1.len()
    }

    /// Integer basis of the right kernel, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<BigInt>> {
        let (rref, pivots) = self.echelon(true);
        let l = pivots
            .iter()
            .enumerate()
            .fold(BigInt::one(), |acc, (i, &p)| acc.lcm(&rref[i][p]));
        let mut basis = Vec::new();
        for f in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![BigInt::zero(); self.cols];
            v[f] = l.clone();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -(&rref[i][f] * (&l / &rref[i][p]));
            }
            make_primitive(&mut v);
            basis.push(v);
        }
        basis
    }
}

fn make_primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
    // Keep a positive leading entry so results are canonical.
    if let Some(first) = row.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in row.iter_mut() {
                *x = -&*x;
            }
        }
    }
}
