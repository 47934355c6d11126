use num_traits::{One, Zero};

use crate::algebra::{sparse_rational, Algebra, RotaBaxter, SampleRng, Sampled, UnitalAlgebra};
use crate::arith::{int, Rational};

/// Square rational matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn zero(n: usize) -> Self {
        RatMatrix { n, entries: vec![Rational::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.entries[i * n + i] = Rational::one();
        }
        m
    }

    /// Matrix unit `E_{ij}` with 1-based indices.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zero(n);
        m.entries[(i - 1) * n + (j - 1)] = Rational::one();
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        RatMatrix { n, entries: (0..n * n).map(|k| f(k / n, k % n)).collect() }
    }

    /// Rows of integers, for literals in tests and fixtures.
    pub fn from_rows(rows: &[&[i64]]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Self::from_fn(n, |i, j| int(rows[i][j]))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Entry at 0-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.n + col]
    }

    pub fn map(&self, f: impl Fn(usize, usize, &Rational) -> Rational) -> Self {
        Self::from_fn(self.n, |i, j| f(i, j, self.get(i, j)))
    }

    pub fn add(&self, other: &Self) -> Self {
        self.map(|i, j, v| v + other.get(i, j))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|_, _, v| c * v)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Self) -> Self {
        let (p, q) = (self.n, other.n);
        Self::from_fn(p * q, |r, c| self.get(r / q, c / q) * other.get(r % q, c % q))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }
}

/// Keeps entries with `row <= col` (upper triangle including the diagonal).
pub fn triangular_projection(m: &RatMatrix) -> RatMatrix {
    m.map(|i, j, v| if i <= j { v.clone() } else { Rational::zero() })
}

/// `n × n` rational matrices with the upper-triangular projector, weight −1.
/// The complementary projector maps onto strictly lower triangular
/// matrices, which form a (non-unital) subalgebra.
#[derive(Debug, Clone)]
pub struct MatrixAlgebra {
    n: usize,
}

impl MatrixAlgebra {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "matrix dimension must be positive");
        MatrixAlgebra { n }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn unit(&self, i: usize, j: usize) -> RatMatrix {
        RatMatrix::unit(self.n, i, j)
    }
}

impl Algebra for MatrixAlgebra {
    type Elem = RatMatrix;

    fn name(&self) -> String {
        format!("matrix({})", self.n)
    }
    fn zero(&self) -> RatMatrix {
        RatMatrix::zero(self.n)
    }
    fn add(&self, a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
        a.add(b)
    }
    fn neg(&self, a: &RatMatrix) -> RatMatrix {
        a.map(|_, _, v| -v)
    }
    fn scale(&self, c: &Rational, a: &RatMatrix) -> RatMatrix {
        a.scale(c)
    }
    fn mul(&self, a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
        a.mul(b)
    }
    fn render(&self, a: &RatMatrix) -> String {
        let rows: Vec<String> = (0..a.n)
            .map(|i| {
                let row: Vec<String> = (0..a.n).map(|j| a.get(i, j).to_string()).collect();
                row.join(" ")
            })
            .collect();
        format!("[{}]", rows.join("; "))
    }
    fn contains(&self, a: &RatMatrix) -> bool {
        a.n == self.n
    }
    fn is_zero(&self, a: &RatMatrix) -> bool {
        a.is_zero()
    }
}

impl UnitalAlgebra for MatrixAlgebra {
    fn one(&self) -> RatMatrix {
        RatMatrix::identity(self.n)
    }
}

impl RotaBaxter for MatrixAlgebra {
    fn weight(&self) -> Rational {
        int(-1)
    }
    fn operator(&self, x: &RatMatrix) -> RatMatrix {
        triangular_projection(x)
    }
}

impl Sampled for MatrixAlgebra {
    /// The matrix units `E_{ij}`.
    fn basis(&self) -> Vec<RatMatrix> {
        (1..=self.n)
            .flat_map(|i| (1..=self.n).map(move |j| (i, j)))
            .map(|(i, j)| self.unit(i, j))
            .collect()
    }

    fn random_element(&self, rng: &mut SampleRng) -> RatMatrix {
        RatMatrix::from_fn(self.n, |_, _| sparse_rational(rng, 0.6))
    }
}
