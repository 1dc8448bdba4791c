//! Exact integer lattice linear algebra on `Z^n`.
//!
//! Everything here is arbitrary precision. Matrices act on column vectors:
//! column `j` of a square matrix is the image of the `j`-th standard basis
//! vector. A single Smith normal form engine backs kernels, saturation tests,
//! direct complements and unimodular inverses.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;

use crate::error::{Error, Result};

/// Default search radius for [`decompose_into_unimodular`].
pub const DEFAULT_DECOMPOSITION_RADIUS: u32 = 8;

/// Dense integer matrix, row-major.
///
/// Most operations in this crate expect square matrices (the action of an
/// automorphism on the abelianization); kernel computations also accept
/// rectangular ones.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn diagonal<T: Into<BigInt> + Clone>(entries: &[T]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone().into();
        }
        m
    }

    /// Builds a matrix from its rows. All rows must have the same, nonzero length.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 {
            return Err(Error::DimensionMismatch("empty matrix".into()));
        }
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor for literals. Panics on ragged input.
    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Self::from_rows(rows).expect("well-formed matrix literal")
    }

    /// Builds a `rows x columns.len()` matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Result<Self> {
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::DimensionMismatch("column length".into()));
        }
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<BigInt>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| {
                self.data[i * self.cols..(i + 1) * self.cols]
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rows)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// `true` iff the matrix is square and squares to the identity.
    pub fn is_involution(&self) -> bool {
        self.is_square() && (self * self).is_identity()
    }

    pub fn pow(&self, k: u32) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Concatenates columns of `self` and `other`.
    pub fn hstack(&self, other: &IntMatrix) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hstack row count".into()));
        }
        let mut cols = self.columns();
        cols.extend(other.columns());
        Self::from_columns(self.rows, &cols)
    }

    /// Stacks rows of `other` below `self`.
    pub fn vstack(&self, other: &IntMatrix) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("vstack column count".into()));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(IntMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.to_rows();
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        negate = !negate;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if negate { -d } else { d })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[target] += k * row[source]
    fn add_row_multiple(&mut self, target: usize, source: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self.get(source, j) * k;
            self.data[target * self.cols + j] += v;
        }
    }

    /// col[target] += k * col[source]
    fn add_col_multiple(&mut self, target: usize, source: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = self.get(i, source) * k;
            self.data[i * self.cols + target] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j);
            self.data[i * self.cols + j] = v;
        }
    }

    /// JSON array of rows. Entries outside the `i64` range are written as
    /// decimal strings.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.to_rows()
                .iter()
                .map(|row| Value::Array(row.iter().map(int_to_json).collect()))
                .collect(),
        )
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let rows = value
            .as_array()
            .ok_or_else(|| Error::Json("matrix must be an array of rows".into()))?;
        let rows = rows
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| Error::Json("matrix row must be an array".into()))?
                    .iter()
                    .map(int_from_json)
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }

    /// Parses the matrix text format (JSON array of rows).
    pub fn parse_json(text: &str) -> Result<Self> {
        Self::from_json(&serde_json::from_str(text)?)
    }
}

pub(crate) fn int_to_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(x.to_string()),
    }
}

pub(crate) fn int_from_json(v: &Value) -> Result<BigInt> {
    if let Some(i) = v.as_i64() {
        return Ok(BigInt::from(i));
    }
    if let Some(u) = v.as_u64() {
        return Ok(BigInt::from(u));
    }
    if let Some(s) = v.as_str() {
        return s
            .trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Json(format!("not a decimal integer: {s:?}")));
    }
    Err(Error::Json(format!("not an integer: {v}")))
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimensions");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &IntMatrix {
    type Output = IntMatrix;

    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;

    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &IntMatrix {
    type Output = IntMatrix;

    fn neg(self) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

/// `left * m * right == diagonal`, with `left` and `right` unimodular and the
/// nonzero diagonal entries positive, forming a divisibility chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub left: IntMatrix,
    pub diagonal: IntMatrix,
    pub right: IntMatrix,
}

impl SmithDecomposition {
    /// Nonzero diagonal entries `d_1 | d_2 | ...`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let k = self.diagonal.rows().min(self.diagonal.cols());
        (0..k)
            .map(|i| self.diagonal.get(i, i).clone())
            .take_while(|d| !d.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Smith normal form with transforms. Works for any shape.
pub fn smith_decompose(m: &IntMatrix) -> SmithDecomposition {
    let (r, c) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut left = IntMatrix::identity(r);
    let mut right = IntMatrix::identity(c);

    for t in 0..r.min(c) {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    let x = a.get(i, j);
                    if !x.is_zero()
                        && pivot.map_or(true, |(pi, pj)| x.abs() < a.get(pi, pj).abs())
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                return finish_smith(a, left, right);
            };
            a.swap_rows(t, pi);
            left.swap_rows(t, pi);
            a.swap_cols(t, pj);
            right.swap_cols(t, pj);

            let p = a.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..r {
                let q = a.get(i, t) / &p;
                let q = -q;
                a.add_row_multiple(i, t, &q);
                left.add_row_multiple(i, t, &q);
                clean &= a.get(i, t).is_zero();
            }
            for j in t + 1..c {
                let q = a.get(t, j) / &p;
                let q = -q;
                a.add_col_multiple(j, t, &q);
                right.add_col_multiple(j, t, &q);
                clean &= a.get(t, j).is_zero();
            }
            if !clean {
                continue;
            }
            // pivot must divide the whole trailing block
            let offender = (t + 1..r).find(|&i| {
                (t + 1..c).any(|j| !a.get(i, j).is_multiple_of(&p))
            });
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    a.add_row_multiple(t, i, &one);
                    left.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            left.negate_row(t);
        }
    }
    finish_smith(a, left, right)
}

fn finish_smith(diagonal: IntMatrix, left: IntMatrix, right: IntMatrix) -> SmithDecomposition {
    SmithDecomposition {
        left,
        diagonal,
        right,
    }
}

/// Rank over the rationals.
pub fn rank(m: &IntMatrix) -> usize {
    smith_decompose(m).rank()
}

/// A list of linearly independent vectors in `Z^n`.
///
/// The `summand` flag records whether the spanned subgroup is saturated
/// (a direct summand of `Z^n`); it is computed on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBasis {
    ambient: usize,
    vectors: Vec<Vec<BigInt>>,
    summand: bool,
}

impl LatticeBasis {
    pub fn new(ambient: usize, vectors: Vec<Vec<BigInt>>) -> Result<Self> {
        if vectors.iter().any(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch("basis vector length".into()));
        }
        if vectors.is_empty() {
            return Ok(Self::empty(ambient));
        }
        let snf = smith_decompose(&IntMatrix::from_columns(ambient, &vectors)?);
        let factors = snf.invariant_factors();
        if factors.len() != vectors.len() {
            return Err(Error::InvalidArgument(
                "basis vectors are linearly dependent".into(),
            ));
        }
        let summand = factors.iter().all(One::is_one);
        Ok(LatticeBasis {
            ambient,
            vectors,
            summand,
        })
    }

    pub fn empty(ambient: usize) -> Self {
        LatticeBasis {
            ambient,
            vectors: Vec::new(),
            summand: true,
        }
    }

    pub fn standard(ambient: usize) -> Self {
        let vectors = IntMatrix::identity(ambient).columns();
        LatticeBasis {
            ambient,
            vectors,
            summand: true,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn vectors(&self) -> &[Vec<BigInt>] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn is_summand(&self) -> bool {
        self.summand
    }

    /// `ambient x len` matrix with the basis vectors as columns.
    pub fn to_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.ambient, self.vectors.len());
        for (j, v) in self.vectors.iter().enumerate() {
            for (i, x) in v.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }
}

/// Row-style Hermite normal form of a list of vectors: echelon, positive
/// pivots, entries above each pivot reduced into `[0, pivot)`. Zero rows are
/// dropped. Gives a canonical basis of the spanned lattice.
pub(crate) fn hermite_rows(vectors: &[Vec<BigInt>], width: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vectors.to_vec();
    let mut pivot_row = 0;
    for col in 0..width {
        if pivot_row == rows.len() {
            break;
        }
        loop {
            let best = (pivot_row..rows.len())
                .filter(|&i| !rows[i][col].is_zero())
                .min_by(|&x, &y| rows[x][col].abs().cmp(&rows[y][col].abs()));
            let Some(b) = best else { break };
            rows.swap(pivot_row, b);
            let mut done = true;
            for i in pivot_row + 1..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                let q = &rows[i][col] / &rows[pivot_row][col];
                let src = rows[pivot_row].clone();
                for (x, s) in rows[i].iter_mut().zip(&src) {
                    *x -= &q * s;
                }
                done &= rows[i][col].is_zero();
            }
            if done {
                break;
            }
        }
        if pivot_row < rows.len() && !rows[pivot_row][col].is_zero() {
            if rows[pivot_row][col].is_negative() {
                for x in rows[pivot_row].iter_mut() {
                    *x = -&*x;
                }
            }
            let p = rows[pivot_row][col].clone();
            let src = rows[pivot_row].clone();
            for row in rows.iter_mut().take(pivot_row) {
                let q = row[col].div_floor(&p);
                for (x, s) in row.iter_mut().zip(&src) {
                    *x -= &q * s;
                }
            }
            pivot_row += 1;
        }
    }
    rows.truncate(pivot_row);
    rows
}

/// Basis of the saturation of `ker m` (a direct summand), in Hermite form.
/// Empty when the kernel is trivial.
pub fn kernel_summand_basis(m: &IntMatrix) -> LatticeBasis {
    let snf = smith_decompose(m);
    let r = snf.rank();
    let n = m.cols();
    let raw: Vec<Vec<BigInt>> = (r..n).map(|j| snf.right.column(j)).collect();
    LatticeBasis {
        ambient: n,
        vectors: hermite_rows(&raw, n),
        summand: true,
    }
}

/// Some `C` such that `S ∪ C` is a basis of `Z^n`.
pub fn direct_complement(s: &LatticeBasis) -> Result<LatticeBasis> {
    let n = s.ambient();
    if s.is_empty() {
        return Ok(LatticeBasis::standard(n));
    }
    if !s.is_summand() {
        return Err(Error::NotASummand);
    }
    let snf = smith_decompose(&s.to_matrix());
    // columns of S span left^{-1} * span(e_1..e_k)
    let left_inv = inverse_unimodular(&snf.left)?;
    let vectors = (s.len()..n).map(|j| left_inv.column(j)).collect();
    Ok(LatticeBasis {
        ambient: n,
        vectors,
        summand: true,
    })
}

pub fn gcd_of(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// `true` iff the entries have gcd 1.
pub fn is_unimodular_vector(v: &[BigInt]) -> Result<bool> {
    let g = gcd_of(v);
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(g.is_one())
}

/// `true` iff `m` is square with determinant ±1.
pub fn is_unimodular_matrix(m: &IntMatrix) -> bool {
    m.det().map_or(false, |d| d.abs().is_one())
}

pub fn inverse_unimodular(m: &IntMatrix) -> Result<IntMatrix> {
    let det = m.det()?;
    if !det.abs().is_one() {
        return Err(Error::NotUnimodular {
            det: det.to_string(),
        });
    }
    // left * m * right = I  =>  m^{-1} = right * left
    let snf = smith_decompose(m);
    Ok(&snf.right * &snf.left)
}

/// Writes `v` as a sum of at most `max_parts` unimodular vectors, using the
/// default search radius.
pub fn decompose_into_unimodular(v: &[BigInt], max_parts: usize) -> Result<Vec<Vec<BigInt>>> {
    decompose_into_unimodular_within(v, max_parts, DEFAULT_DECOMPOSITION_RADIUS)
}

/// Bounded exhaustive search: summands other than the last are drawn from the
/// box `[-radius, radius]^n`, smallest max-norm first.
pub fn decompose_into_unimodular_within(
    v: &[BigInt],
    max_parts: usize,
    radius: u32,
) -> Result<Vec<Vec<BigInt>>> {
    if v.len() < 2 {
        return Err(Error::InvalidArgument("rank must be at least 2".into()));
    }
    if !(2..=3).contains(&max_parts) {
        return Err(Error::InvalidArgument("max_parts must be 2 or 3".into()));
    }
    let unimodular = |w: &[BigInt]| gcd_of(w).is_one();
    if unimodular(v) {
        return Ok(vec![v.to_vec()]);
    }
    if let Some(parts) = two_parts(v, radius, &unimodular) {
        return Ok(parts);
    }
    if max_parts == 3 {
        // the outer search is kept small; the inner one does the heavy lifting
        for r in 0..=radius.min(2) {
            for u in ShellIter::new(v.len(), r) {
                if !unimodular(&u) {
                    continue;
                }
                let rest = vec_sub(v, &u);
                if let Some(mut parts) = two_parts(&rest, radius, &unimodular) {
                    parts.insert(0, u);
                    return Ok(parts);
                }
            }
        }
    }
    Err(Error::DecompositionNotFound { max_parts, radius })
}

fn two_parts(
    v: &[BigInt],
    radius: u32,
    unimodular: &dyn Fn(&[BigInt]) -> bool,
) -> Option<Vec<Vec<BigInt>>> {
    for r in 1..=radius {
        for u in ShellIter::new(v.len(), r) {
            if !unimodular(&u) {
                continue;
            }
            let w = vec_sub(v, &u);
            if !w.iter().all(Zero::is_zero) && unimodular(&w) {
                return Some(vec![u, w]);
            }
        }
    }
    None
}

/// Vectors of `Z^n` with max-norm exactly `r`, in a fixed order.
struct ShellIter {
    r: i64,
    current: Option<Vec<i64>>,
}

impl ShellIter {
    fn new(n: usize, r: u32) -> Self {
        let r = r as i64;
        ShellIter {
            r,
            current: Some(vec![-r; n]),
        }
    }

    fn advance(&mut self) {
        let Some(cur) = self.current.as_mut() else { return };
        for x in cur.iter_mut().rev() {
            if *x < self.r {
                *x += 1;
                return;
            }
            *x = -self.r;
        }
        self.current = None;
    }
}

impl Iterator for ShellIter {
    type Item = Vec<BigInt>;

    fn next(&mut self) -> Option<Vec<BigInt>> {
        loop {
            let cur = self.current.clone()?;
            self.advance();
            if cur.iter().map(|x| x.abs()).max().unwrap_or(0) == self.r {
                return Some(cur.into_iter().map(BigInt::from).collect());
            }
        }
    }
}

pub(crate) fn vec_sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn vec_add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub(crate) fn vec_scale(a: &[BigInt], k: &BigInt) -> Vec<BigInt> {
    a.iter().map(|x| x * k).collect()
}

pub fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}
