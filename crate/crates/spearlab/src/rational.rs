//! Exact scalars, vectors and matrices.
//!
//! Every quantity in the crate is a `Rational` (arbitrary-precision, always
//! reduced, positive denominator); no floating point enters any decision
//! path. `RatVector` and `RatMatrix` are thin dense containers with the
//! dimension checks required at operation boundaries.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::Index;

pub type Rational = num_rational::BigRational;

/// `n/d` as an exact rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p"` or `"p/q"` with integer `p`, `q` and `q > 0`.
pub fn parse_scalar(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::InvalidInput(format!("`{s}` is not an integer or p/q rational"));
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q <= BigInt::zero() {
            return Err(Error::InvalidInput(format!(
                "`{s}` has a non-positive denominator"
            )));
        }
        Ok(Rational::new(p, q))
    } else {
        let p: BigInt = s.parse().map_err(|_| bad())?;
        Ok(Rational::from_integer(p))
    }
}

/// Formats as `"p"` for integers and `"p/q"` otherwise.
pub fn format_scalar(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A dense vector of exact rationals, ordered lexicographically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatVector {
    coords: Vec<Rational>,
}

impl RatVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        RatVector { coords }
    }

    pub fn zero(dim: usize) -> Self {
        RatVector {
            coords: vec![Rational::zero(); dim],
        }
    }

    /// Standard basis vector `e_i`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.coords[i] = Rational::one();
        v
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        RatVector {
            coords: entries.iter().map(|&n| rat_int(n)).collect(),
        }
    }

    /// Parses a comma-separated scalar list such as `"1,1/2,-1"`.
    pub fn parse_list(s: &str) -> Result<Self> {
        let coords = s
            .split(',')
            .map(parse_scalar)
            .collect::<Result<Vec<_>>>()?;
        if coords.is_empty() {
            return Err(Error::InvalidInput("empty vector literal".into()));
        }
        Ok(RatVector { coords })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.coords
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.coords.iter()
    }

    pub fn check_dim(&self, expected: usize) -> Result<()> {
        if self.dim() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                got: self.dim(),
            });
        }
        Ok(())
    }

    pub fn dot(&self, other: &RatVector) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn add(&self, other: &RatVector) -> RatVector {
        debug_assert_eq!(self.dim(), other.dim());
        RatVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &RatVector) -> RatVector {
        debug_assert_eq!(self.dim(), other.dim());
        RatVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> RatVector {
        RatVector {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, by: &Rational) -> RatVector {
        RatVector {
            coords: self.coords.iter().map(|a| a * by).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|a| a.is_zero())
    }

    /// Concatenates blocks into one long vector.
    pub fn concat(blocks: &[&RatVector]) -> RatVector {
        let mut coords = Vec::new();
        for b in blocks {
            coords.extend(b.coords.iter().cloned());
        }
        RatVector { coords }
    }

    /// The representative of `{v, -v}` whose first nonzero entry is positive.
    pub fn sign_canonical(&self) -> RatVector {
        for c in &self.coords {
            if c.is_positive() {
                return self.clone();
            }
            if c.is_negative() {
                return self.neg();
            }
        }
        self.clone()
    }

    /// Scales to the primitive integer vector with the same direction.
    /// The zero vector is returned unchanged.
    pub fn primitive(&self) -> RatVector {
        if self.is_zero() {
            return self.clone();
        }
        let mut lcm = BigInt::one();
        for c in &self.coords {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coords
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut gcd = BigInt::zero();
        for n in &ints {
            gcd = gcd.gcd(n);
        }
        RatVector {
            coords: ints
                .into_iter()
                .map(|n| Rational::from_integer(n / &gcd))
                .collect(),
        }
    }

    pub fn to_f64s(&self) -> Vec<f64> {
        self.coords
            .iter()
            .map(|c| c.to_f64().expect("rational out of f64 range"))
            .collect()
    }
}

impl Index<usize> for RatVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.coords[i]
    }
}

impl From<Vec<Rational>> for RatVector {
    fn from(coords: Vec<Rational>) -> Self {
        RatVector { coords }
    }
}

impl fmt::Display for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_scalar(c))?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<RatVector>) -> Result<Self> {
        let r = rows.len();
        if r == 0 {
            return Err(Error::InvalidInput("matrix needs at least one row".into()));
        }
        let c = rows[0].dim();
        let mut data = Vec::with_capacity(r * c);
        for row in &rows {
            row.check_dim(c)?;
            data.extend(row.iter().cloned());
        }
        Ok(RatMatrix { rows: r, cols: c, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row_vec(&self, i: usize) -> RatVector {
        RatVector::new(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn mul_vec(&self, x: &RatVector) -> Result<RatVector> {
        x.check_dim(self.cols)?;
        let coords = (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.get(i, j) * &x[j])
                    .sum::<Rational>()
            })
            .collect();
        Ok(RatVector::new(coords))
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = RatMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Rank-one matrix `y xᵀ`, mapping `v ↦ (x·v) y`.
    pub fn outer(y: &RatVector, x: &RatVector) -> RatMatrix {
        let mut m = RatMatrix::zeros(y.dim(), x.dim());
        for i in 0..y.dim() {
            for j in 0..x.dim() {
                m.set(i, j, &y[i] * &x[j]);
            }
        }
        m
    }

    pub fn block_diag(blocks: &[&RatMatrix]) -> RatMatrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = RatMatrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    pub fn add(&self, other: &RatMatrix) -> RatMatrix {
        debug_assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &RatMatrix) -> RatMatrix {
        debug_assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, by: &Rational) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * by).collect(),
        }
    }

    /// Matrix product `self · other`.
    pub fn mul_mat(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut m = RatMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let s = (0..self.cols)
                    .map(|k| self.get(i, k) * other.get(k, j))
                    .sum::<Rational>();
                m.set(i, j, s);
            }
        }
        Ok(m)
    }

    pub fn to_f64s(&self) -> Vec<Vec<f64>> {
        (0..self.rows)
            .map(|i| self.row_vec(i).to_f64s())
            .collect()
    }
}
