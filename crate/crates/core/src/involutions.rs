//! Involutions of `Z^n`: the fixed and negated sublattices, diagonalizability,
//! canonical bases, commuting pairs, square roots and the explicit witness
//! matrices for products of conjugates.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::autgroup::Automorphism;
use crate::error::{Error, Result};
use crate::sampling::{random_ia, random_unimodular, MAX_CONJUGATOR_LENGTH};
use crate::seeding::trial_rng;
use crate::zlinalg::{
    direct_complement, inverse_unimodular, kernel_summand_basis, vec_add, vec_scale, vec_sub, IntMatrix,
    LatticeBasis,
};

/// The fixed sublattice `A+` and the negated sublattice `A-` of an involution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlusMinusPair {
    pub plus: LatticeBasis,
    pub minus: LatticeBasis,
}

impl PlusMinusPair {
    fn combined(&self) -> IntMatrix {
        let n = self.plus.ambient();
        let mut cols = self.plus.vectors().to_vec();
        cols.extend_from_slice(self.minus.vectors());
        IntMatrix::from_columns(n, &cols).expect("vectors of ambient length")
    }

    /// `s` with `|det [plus | minus]| = 2^s`.
    pub fn defect(&self) -> usize {
        let det = self.combined().det().expect("square").abs();
        debug_assert!(!det.is_zero());
        det.trailing_zeros().unwrap_or(0) as usize
    }

    pub fn is_diagonalizable(&self) -> bool {
        self.combined().det().expect("square").abs().is_one()
    }
}

fn check_involution(f: &IntMatrix) -> Result<()> {
    if !f.is_square() {
        return Err(Error::NotSquare {
            rows: f.rows(),
            cols: f.cols(),
        });
    }
    if !f.is_involution() {
        return Err(Error::NotInvolution);
    }
    Ok(())
}

pub fn plus_minus(f: &IntMatrix) -> Result<PlusMinusPair> {
    check_involution(f)?;
    let id = IntMatrix::identity(f.rows());
    Ok(PlusMinusPair {
        plus: kernel_summand_basis(&(f - &id)),
        minus: kernel_summand_basis(&(f + &id)),
    })
}

pub fn is_diagonalizable(f: &IntMatrix) -> Result<bool> {
    Ok(plus_minus(f)?.is_diagonalizable())
}

pub fn defect(f: &IntMatrix) -> Result<usize> {
    Ok(plus_minus(f)?.defect())
}

/// `min(rank A+, rank A-)` for a diagonalizable involution.
pub fn kappa(f: &IntMatrix) -> Result<usize> {
    let pm = plus_minus(f)?;
    if !pm.is_diagonalizable() {
        return Err(Error::NotDiagonalizable);
    }
    Ok(pm.plus.len().min(pm.minus.len()))
}

/// How an involution acts on one canonical basis column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BasisRole {
    Fixed,
    Negated,
    /// Swapped with the column at `partner`.
    Swapped { partner: usize },
}

/// A basis in which the involution fixes, negates or swaps basis vectors.
/// Columns are ordered: fixed, negated, then swapped pairs `(b, F b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionCanonicalForm {
    basis: IntMatrix,
    roles: Vec<BasisRole>,
    fixed: usize,
    negated: usize,
    swapped: usize,
}

impl InvolutionCanonicalForm {
    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn roles(&self) -> &[BasisRole] {
        &self.roles
    }

    /// `(p, m, s)`: fixed columns, negated columns, swapped pairs.
    pub fn block_type(&self) -> (usize, usize, usize) {
        (self.fixed, self.negated, self.swapped)
    }

    /// The matrix of the involution in the canonical basis.
    pub fn block_matrix(&self) -> IntMatrix {
        canonical_matrix(self.fixed, self.negated, self.swapped)
    }

    /// Checks every column contract and unimodularity of the basis against `f`.
    pub fn validate(&self, f: &IntMatrix) -> Result<()> {
        let fail = |msg: String| Err(Error::CanonicalizationPostconditionFailed(msg));
        let n = f.rows();
        if self.basis.rows() != n || self.basis.cols() != n || self.roles.len() != n {
            return fail("basis shape".into());
        }
        if self.fixed + self.negated + 2 * self.swapped != n {
            return fail("block counts".into());
        }
        if !self.basis.det()?.abs().is_one() {
            return fail("basis is not unimodular".into());
        }
        for (j, role) in self.roles.iter().enumerate() {
            let b = self.basis.column(j);
            let fb = f.mul_vec(&b);
            let ok = match role {
                BasisRole::Fixed => fb == b,
                BasisRole::Negated => fb.iter().zip(&b).all(|(x, y)| *x == -y),
                BasisRole::Swapped { partner } => {
                    *partner < n
                        && self.roles[*partner] == BasisRole::Swapped { partner: j }
                        && fb == self.basis.column(*partner)
                }
            };
            if !ok {
                return fail(format!("column {j} violates its {role:?} role"));
            }
        }
        Ok(())
    }
}

impl fmt::Display for InvolutionCanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, m, s) = self.block_type();
        write!(f, "type ({p},{m},{s}) basis {}", self.basis.transpose())
    }
}

/// `blockdiag(I_p, -I_m, S, ..., S)` with `s` copies of `S = [[0,1],[1,0]]`.
pub fn canonical_matrix(p: usize, m: usize, s: usize) -> IntMatrix {
    let n = p + m + 2 * s;
    let mut c = IntMatrix::zeros(n, n);
    for i in 0..p {
        c.set(i, i, BigInt::one());
    }
    for i in p..p + m {
        c.set(i, i, -BigInt::one());
    }
    for k in 0..s {
        let a = p + m + 2 * k;
        c.set(a, a + 1, BigInt::one());
        c.set(a + 1, a, BigInt::one());
    }
    c
}

/// Canonical basis of an involution: fixed, negated and swapped columns.
///
/// Starts from a basis `P` of `A+` and a complement `R`. For `r` in `R` the
/// vector `F r + r` lies in `A+`; its coordinates in `P` form a matrix `Q`.
/// Eliminating `Q` modulo 2 (row moves on `P`, column moves on `R`) and then
/// shifting each `r` by multiples of `P` turns `Q` into `[I_s 0; 0 0]`.
pub fn hua_reiner_canonicalize(f: &IntMatrix) -> Result<InvolutionCanonicalForm> {
    check_involution(f)?;
    let n = f.rows();
    let pm = plus_minus(f)?;
    let mut plus: Vec<Vec<BigInt>> = pm.plus.vectors().to_vec();
    let mut comp: Vec<Vec<BigInt>> = direct_complement(&pm.plus)?.vectors().to_vec();
    let (pc, mc) = (plus.len(), comp.len());

    let mut cols = plus.clone();
    cols.extend(comp.iter().cloned());
    let basis_inv = inverse_unimodular(&IntMatrix::from_columns(n, &cols)?)?;

    let mut q: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); mc]; pc];
    for (j, r) in comp.iter().enumerate() {
        let u = vec_add(&f.mul_vec(r), r);
        let coords = basis_inv.mul_vec(&u);
        if coords[pc..].iter().any(|x| !x.is_zero()) {
            return Err(Error::CanonicalizationPostconditionFailed(
                "F r + r is not fixed".into(),
            ));
        }
        for i in 0..pc {
            q[i][j] = coords[i].clone();
        }
    }

    let odd = |x: &BigInt| x.is_odd();
    let mut s = 0;
    loop {
        let pivot = (s..pc).find_map(|i| (s..mc).find(|&j| odd(&q[i][j])).map(|j| (i, j)));
        let Some((pi, pj)) = pivot else { break };
        q.swap(s, pi);
        plus.swap(s, pi);
        for row in q.iter_mut() {
            row.swap(s, pj);
        }
        comp.swap(s, pj);
        // row_i -= row_s on Q corresponds to p_s += p_i
        for i in 0..pc {
            if i != s && odd(&q[i][s]) {
                let src = q[s].clone();
                for (x, y) in q[i].iter_mut().zip(&src) {
                    *x -= y;
                }
                plus[s] = vec_add(&plus[s], &plus[i]);
            }
        }
        // col_j -= col_s on Q corresponds to r_j -= r_s
        for j in 0..mc {
            if j != s && odd(&q[s][j]) {
                for row in q.iter_mut() {
                    let v = row[s].clone();
                    row[j] -= v;
                }
                comp[j] = vec_sub(&comp[j], &comp[s]);
            }
        }
        s += 1;
    }

    for j in 0..mc {
        for i in 0..pc {
            let target = if i == j && i < s {
                BigInt::one()
            } else {
                BigInt::zero()
            };
            let diff = &q[i][j] - &target;
            if diff.is_zero() {
                continue;
            }
            let (half, rem) = diff.div_rem(&BigInt::from(2));
            if !rem.is_zero() {
                return Err(Error::CanonicalizationPostconditionFailed(
                    "odd residue after elimination".into(),
                ));
            }
            let shift = vec_scale(&plus[i], &half);
            comp[j] = vec_sub(&comp[j], &shift);
            q[i][j] = target;
        }
    }

    let mut columns = Vec::with_capacity(n);
    let mut roles = Vec::with_capacity(n);
    for p in &plus[s..] {
        columns.push(p.clone());
        roles.push(BasisRole::Fixed);
    }
    for r in &comp[s..] {
        columns.push(r.clone());
        roles.push(BasisRole::Negated);
    }
    for r in &comp[..s] {
        let k = columns.len();
        columns.push(r.clone());
        columns.push(f.mul_vec(r));
        roles.push(BasisRole::Swapped { partner: k + 1 });
        roles.push(BasisRole::Swapped { partner: k });
    }
    let form = InvolutionCanonicalForm {
        basis: IntMatrix::from_columns(n, &columns)?,
        roles,
        fixed: pc - s,
        negated: mc - s,
        swapped: s,
    };
    form.validate(f)?;
    Ok(form)
}

/// The four intersections `A(±f) ∩ A(±g)` of two diagonalizable involutions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutingDecomposition {
    pub plus_plus: LatticeBasis,
    pub plus_minus: LatticeBasis,
    pub minus_plus: LatticeBasis,
    pub minus_minus: LatticeBasis,
}

impl CommutingDecomposition {
    pub fn ranks(&self) -> (usize, usize, usize, usize) {
        (
            self.plus_plus.len(),
            self.plus_minus.len(),
            self.minus_plus.len(),
            self.minus_minus.len(),
        )
    }

    /// Whether the four pieces together form a basis of `Z^n`.
    pub fn is_direct_sum(&self) -> bool {
        let n = self.plus_plus.ambient();
        let cols: Vec<Vec<BigInt>> = [
            &self.plus_plus,
            &self.plus_minus,
            &self.minus_plus,
            &self.minus_minus,
        ]
        .iter()
        .flat_map(|b| b.vectors().iter().cloned())
        .collect();
        if cols.len() != n {
            return false;
        }
        IntMatrix::from_columns(n, &cols)
            .and_then(|m| m.det())
            .map_or(false, |d| d.abs().is_one())
    }
}

pub fn commuting_decomposition(f: &IntMatrix, g: &IntMatrix) -> Result<CommutingDecomposition> {
    check_involution(f)?;
    check_involution(g)?;
    if f.rows() != g.rows() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} vs {}x{}",
            f.rows(),
            f.cols(),
            g.rows(),
            g.cols()
        )));
    }
    if !is_diagonalizable(f)? || !is_diagonalizable(g)? {
        return Err(Error::NotDiagonalizable);
    }
    let id = IntMatrix::identity(f.rows());
    let (fp, fm) = (f - &id, f + &id);
    let (gp, gm) = (g - &id, g + &id);
    let meet = |a: &IntMatrix, b: &IntMatrix| -> Result<LatticeBasis> {
        Ok(kernel_summand_basis(&a.vstack(b)?))
    };
    Ok(CommutingDecomposition {
        plus_plus: meet(&fp, &gp)?,
        plus_minus: meet(&fp, &gm)?,
        minus_plus: meet(&fm, &gp)?,
        minus_minus: meet(&fm, &gm)?,
    })
}

/// `[[0,-1],[1,0]]`, whose square is `-I`.
pub fn rotation() -> IntMatrix {
    IntMatrix::from_i64_rows(&[[0, -1], [1, 0]])
}

/// `H` with `H^2 = F`: identity on `A+`, rotation blocks on pairs of `A-`.
pub fn sqrt_of_involution(f: &IntMatrix) -> Result<IntMatrix> {
    let pm = plus_minus(f)?;
    if !pm.is_diagonalizable() {
        return Err(Error::NotDiagonalizable);
    }
    let m = pm.minus.len();
    if m % 2 == 1 {
        return Err(Error::OddNegativeRank(m));
    }
    let n = f.rows();
    let mut cols = pm.plus.vectors().to_vec();
    cols.extend_from_slice(pm.minus.vectors());
    let p = IntMatrix::from_columns(n, &cols)?;
    let mut h0 = IntMatrix::identity(n);
    for k in 0..m / 2 {
        let a = pm.plus.len() + 2 * k;
        h0.set(a, a, BigInt::zero());
        h0.set(a + 1, a + 1, BigInt::zero());
        h0.set(a, a + 1, -BigInt::one());
        h0.set(a + 1, a, BigInt::one());
    }
    Ok(&(&p * &h0) * &inverse_unimodular(&p)?)
}

/// Two extremal involutions whose product has order three: on the first two
/// coordinates `F' u = -v, F' v = -u` and `F'' u = u + v, F'' v = -v`.
pub fn order3_witness(n: usize) -> Result<(IntMatrix, IntMatrix)> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("rank {n} is below 2")));
    }
    let mut f1 = IntMatrix::identity(n);
    let mut f2 = IntMatrix::identity(n);
    let set2 = |m: &mut IntMatrix, block: [[i64; 2]; 2]| {
        for (i, row) in block.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(*x));
            }
        }
    };
    set2(&mut f1, [[0, -1], [-1, 0]]);
    set2(&mut f2, [[1, 0], [1, -1]]);
    Ok((f1, f2))
}

/// Three conjugates of `diag(1,-1)` whose product is not an involution.
pub fn x_conjugates() -> [IntMatrix; 3] {
    [
        IntMatrix::from_i64_rows(&[[1, 0], [0, -1]]),
        IntMatrix::from_i64_rows(&[[1, 0], [2, -1]]),
        IntMatrix::from_i64_rows(&[[-1, 2], [0, 1]]),
    ]
}

/// Three conjugates of `[[1,0],[1,-1]]` whose product is not an involution.
pub fn y_conjugates() -> [IntMatrix; 3] {
    [
        IntMatrix::from_i64_rows(&[[1, 0], [1, -1]]),
        IntMatrix::from_i64_rows(&[[1, 0], [-1, -1]]),
        IntMatrix::from_i64_rows(&[[0, 1], [1, 0]]),
    ]
}

pub fn matrix_product(factors: &[IntMatrix]) -> IntMatrix {
    let n = factors.first().map_or(0, IntMatrix::rows);
    factors.iter().fold(IntMatrix::identity(n), |acc, m| &acc * m)
}

/// Outcome of searching for three conjugates whose product is not an
/// involution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProbeResult<T> {
    NoCounterexample {
        trials: usize,
    },
    Counterexample {
        trial: usize,
        conjugates: Vec<T>,
        product: T,
    },
}

impl<T> ProbeResult<T> {
    pub fn is_counterexample(&self) -> bool {
        matches!(self, ProbeResult::Counterexample { .. })
    }
}

/// Label used for the per-trial seed derivation of the probes.
pub const PROBE_LABEL: &str = "three_conjugates";

pub fn three_conjugates_probe_matrix(
    f: &IntMatrix,
    trials: usize,
    seed: u64,
) -> Result<ProbeResult<IntMatrix>> {
    check_involution(f)?;
    let n = f.rows();
    for t in 0..trials {
        let mut rng = trial_rng(seed, PROBE_LABEL, t as u64);
        let mut conjugates = Vec::with_capacity(3);
        for _ in 0..3 {
            let p = random_unimodular(&mut rng, n, MAX_CONJUGATOR_LENGTH);
            conjugates.push(&(&p * f) * &inverse_unimodular(&p)?);
        }
        let product = matrix_product(&conjugates);
        if !product.is_involution() {
            return Ok(ProbeResult::Counterexample {
                trial: t,
                conjugates,
                product,
            });
        }
    }
    Ok(ProbeResult::NoCounterexample { trials })
}

/// Conjugators are `lift(P) ∘ α` with `P` a random unimodular word and `α` a
/// random IA automorphism.
pub fn three_conjugates_probe(
    sigma: &Automorphism,
    trials: usize,
    seed: u64,
) -> Result<ProbeResult<Automorphism>> {
    if !sigma.is_involution() {
        return Err(Error::NotInvolution);
    }
    let n = sigma.rank();
    for t in 0..trials {
        let mut rng = trial_rng(seed, PROBE_LABEL, t as u64);
        let mut conjugates = Vec::with_capacity(3);
        for _ in 0..3 {
            let p = random_unimodular(&mut rng, n, MAX_CONJUGATOR_LENGTH);
            let rho = Automorphism::lift(&p)?.compose(&random_ia(&mut rng, n, 2))?;
            conjugates.push(sigma.conjugate_by(&rho)?);
        }
        let product = conjugates[0].compose(&conjugates[1])?.compose(&conjugates[2])?;
        if !product.is_involution() {
            return Ok(ProbeResult::Counterexample {
                trial: t,
                conjugates,
                product,
            });
        }
    }
    Ok(ProbeResult::NoCounterexample { trials })
}
