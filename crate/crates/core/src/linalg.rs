//! Exact linear algebra over the rationals.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rational = BigRational;
pub type Vector = Vec<Rational>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero_vector(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

/// Standard basis vector `e_i`, 1-based.
pub fn unit(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i - 1] = Rational::one();
    v
}

/// `sum of coeff * e_index` over the given terms (1-based indices).
pub fn combination(n: usize, terms: &[(Rational, usize)]) -> Vector {
    let mut v = zero_vector(n);
    for (c, i) in terms {
        v[i - 1] += c;
    }
    v
}

/// Dimension of the span of `vectors`.
pub fn rank<'a>(vectors: impl IntoIterator<Item = &'a Vector>) -> usize {
    let mut rows: Vec<Vector> = vectors.into_iter().cloned().collect();
    let Some(width) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut r = 0;
    for col in 0..width {
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot);
        let inv = rows[r][col].recip();
        let pivot_row: Vector = rows[r].iter().map(|x| x * &inv).collect();
        for row in rows.iter_mut().skip(r + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x -= &factor * p;
            }
        }
        rows[r] = pivot_row;
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Square matrix stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl SquareMatrix {
    pub fn identity(n: usize) -> Self {
        let mut m = Self {
            n,
            entries: vec![Rational::zero(); n * n],
        };
        for i in 1..=n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vector>) -> Option<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return None;
        }
        Some(Self {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry at 1-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[(row - 1) * self.n + (col - 1)]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        self.entries[(row - 1) * self.n + (col - 1)] = value;
    }

    pub fn mul_vec(&self, v: &Vector) -> Vector {
        (0..self.n)
            .map(|r| {
                self.entries[r * self.n..(r + 1) * self.n]
                    .iter()
                    .zip(v)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (1..=self.n)
            .map(|c| (1..=self.n).map(|r| self.get(r, c).clone()).collect())
            .collect()
    }

    pub fn is_invertible(&self) -> bool {
        rank(&self.columns()) == self.n
    }

    /// True when all entries outside the `p x p` upper-left and the
    /// `(n-p) x (n-p)` lower-right blocks vanish.
    pub fn is_block_diagonal(&self, p: usize) -> bool {
        (1..=self.n).all(|r| (1..=self.n).all(|c| (r <= p) == (c <= p) || self.get(r, c).is_zero()))
    }
}
