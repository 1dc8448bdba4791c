//! Automorphisms of `N_n`, given by the images of the standard generators.
//!
//! Composition follows function notation: `a.compose(&b)` is `a ∘ b`, i.e.
//! `b` is applied first. The abelianization of an automorphism is the integer
//! matrix whose column `i` is the abelian part of the image of `x_i`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::involutions;
use crate::nilcore::{commutator_pattern, pair_count, pair_index, pairs, Element};
use crate::zlinalg::{self, IntMatrix};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Automorphism {
    images: Vec<Element>,
}

/// Coarse classification of an automorphism as an involution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum InvolutionKind {
    /// Involution whose abelianization is `-I`.
    SymmetryModIA,
    /// Involution whose abelianization is diagonalizable over `Z` with a
    /// rank one negated part.
    ExtremalModIA,
    OtherInvolution,
    NotInvolution,
}

impl fmt::Display for InvolutionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Automorphism {
    /// Validates that the images define an automorphism: equal ranks and an
    /// abelianized matrix of determinant ±1.
    pub fn from_images(images: Vec<Element>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidAutomorphism("no images".into()));
        }
        if let Some(g) = images.iter().find(|g| g.rank() != n) {
            return Err(Error::RankMismatch {
                left: n,
                right: g.rank(),
            });
        }
        let sigma = Automorphism { images };
        let det = sigma.abelianize().det()?;
        if !det.abs().is_one() {
            return Err(Error::InvalidAutomorphism(format!(
                "abelianized determinant is {det}"
            )));
        }
        Ok(sigma)
    }

    pub fn identity(rank: usize) -> Self {
        Automorphism {
            images: (0..rank)
                .map(|i| Element::generator(rank, i).expect("index in range"))
                .collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[Element] {
        &self.images
    }

    /// Image of the generator `x_{i+1}`.
    pub fn image(&self, i: usize) -> &Element {
        &self.images[i]
    }

    fn check_rank(&self, rank: usize) -> Result<()> {
        if self.rank() != rank {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: rank,
            });
        }
        Ok(())
    }

    /// Homomorphic extension from the generators.
    pub fn apply(&self, g: &Element) -> Result<Element> {
        self.check_rank(g.rank())?;
        let n = self.rank();
        let mut out = Element::identity(n);
        for (img, a) in self.images.iter().zip(g.abelian()) {
            if !a.is_zero() {
                out = out.mul(&img.pow(a))?;
            }
        }
        let mut central = vec![BigInt::zero(); pair_count(n)];
        for ((i, j), c) in pairs(n).zip(g.comm()) {
            if c.is_zero() {
                continue;
            }
            let pattern = commutator_pattern(self.images[i].abelian(), self.images[j].abelian());
            for (acc, p) in central.iter_mut().zip(pattern) {
                *acc += c * p;
            }
        }
        out.mul(&Element::central(n, central)?)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Automorphism) -> Result<Automorphism> {
        self.check_rank(other.rank())?;
        let images = other
            .images
            .iter()
            .map(|g| self.apply(g))
            .collect::<Result<Vec<_>>>()?;
        Ok(Automorphism { images })
    }

    /// Left-to-right product `a ∘ b ∘ c ∘ ...` of a non-empty list.
    pub fn compose_all(factors: &[&Automorphism]) -> Result<Automorphism> {
        let (first, rest) = factors
            .split_first()
            .ok_or_else(|| Error::InvalidArgument("empty product".into()))?;
        rest.iter().try_fold((*first).clone(), |acc, f| acc.compose(f))
    }

    /// Inverse via the abelianized inverse followed by an IA correction.
    pub fn invert(&self) -> Automorphism {
        let m = self.abelianize();
        let m_inv = zlinalg::inverse_unimodular(&m).expect("automorphism invariant");
        let rho = Automorphism::lift(&m_inv).expect("unimodular");
        let beta = self.compose(&rho).expect("same rank");
        rho.compose(&beta.invert_ia().expect("σ ∘ lift(M^-1) is IA"))
            .expect("same rank")
    }

    /// Inverse of an IA automorphism: negate every commutator offset.
    pub fn invert_ia(&self) -> Result<Automorphism> {
        let offsets = self.ia_offsets()?;
        let negated = offsets
            .into_iter()
            .map(|o| o.into_iter().map(|x| -x).collect())
            .collect();
        Automorphism::from_ia_offsets(self.rank(), negated)
    }

    pub fn pow(&self, k: i64) -> Automorphism {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut acc = Automorphism::identity(self.rank());
        for _ in 0..k.unsigned_abs() {
            acc = acc.compose(&base).expect("same rank");
        }
        acc
    }

    /// `rho ∘ self ∘ rho^-1`.
    pub fn conjugate_by(&self, rho: &Automorphism) -> Result<Automorphism> {
        rho.compose(self)?.compose(&rho.invert())
    }

    pub fn commutes_with(&self, other: &Automorphism) -> Result<bool> {
        Ok(self.compose(other)? == other.compose(self)?)
    }

    /// The induced map on `A = N/N'`.
    pub fn abelianize(&self) -> IntMatrix {
        let n = self.rank();
        let cols: Vec<Vec<BigInt>> = self.images.iter().map(|g| g.abelian().to_vec()).collect();
        IntMatrix::from_columns(n, &cols).expect("square")
    }

    /// Automorphism with abelianization `m` and no commutator offsets.
    pub fn lift(m: &IntMatrix) -> Result<Automorphism> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        if !zlinalg::is_unimodular_matrix(m) {
            return Err(Error::NotUnimodular {
                det: m.det()?.to_string(),
            });
        }
        let n = m.rows();
        let images = m
            .columns()
            .into_iter()
            .map(|c| Element::from_parts(c, vec![BigInt::zero(); pair_count(n)]))
            .collect::<Result<Vec<_>>>()?;
        Ok(Automorphism { images })
    }

    pub fn is_identity(&self) -> bool {
        *self == Automorphism::identity(self.rank())
    }

    pub fn is_ia(&self) -> bool {
        self.abelianize().is_identity()
    }

    pub fn is_involution(&self) -> bool {
        self.compose(self).expect("same rank").is_identity()
    }

    /// Commutator offsets `c_i` of an IA automorphism, `x_i ↦ x_i c_i`.
    pub fn ia_offsets(&self) -> Result<Vec<Vec<BigInt>>> {
        if !self.is_ia() {
            return Err(Error::NotIA);
        }
        Ok(self.images.iter().map(|g| g.comm().to_vec()).collect())
    }

    /// The IA automorphism `x_i ↦ x_i c_i`.
    pub fn from_ia_offsets(rank: usize, offsets: Vec<Vec<BigInt>>) -> Result<Automorphism> {
        if offsets.len() != rank {
            return Err(Error::DimensionMismatch("one offset per generator".into()));
        }
        let images = offsets
            .into_iter()
            .enumerate()
            .map(|(i, c)| {
                let mut a = vec![BigInt::zero(); rank];
                a[i] = BigInt::one();
                Element::from_parts(a, c)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Automorphism { images })
    }

    /// Inner automorphism `τ_a : g ↦ a g a^-1`.
    pub fn conjugation(a: &Element) -> Automorphism {
        let n = a.rank();
        let a_inv = a.inv();
        let images = (0..n)
            .map(|i| {
                let x = Element::generator(n, i).expect("index in range");
                a.mul(&x).and_then(|y| y.mul(&a_inv)).expect("same rank")
            })
            .collect();
        Automorphism { images }
    }

    /// Solves `τ_a = self` for `a` with zero commutator part.
    ///
    /// `τ_a(x_i) = x_i [x_i, a]^-1`, so the offset of `x_i` has entry `-a_k`
    /// at the pair `(i, k)` for `k > i`, entry `a_k` at `(k, i)` for `k < i`,
    /// and zeros on pairs avoiding `i`. Each `a_k` is read off one equation
    /// and the whole system is then checked.
    pub fn inner_witness(&self) -> Result<Option<Element>> {
        let offsets = self.ia_offsets()?;
        let n = self.rank();
        if n == 1 {
            return Ok(Some(Element::identity(1)));
        }
        let a: Vec<BigInt> = (0..n)
            .map(|k| {
                if k == 0 {
                    offsets[1][pair_index(n, 0, 1)].clone()
                } else {
                    -offsets[0][pair_index(n, 0, k)].clone()
                }
            })
            .collect();
        let candidate = Element::from_parts(a, vec![BigInt::zero(); pair_count(n)])?;
        Ok((Automorphism::conjugation(&candidate) == *self).then_some(candidate))
    }

    /// `θ*`: every generator inverted.
    pub fn symmetry_standard(rank: usize) -> Result<Automorphism> {
        if rank == 0 {
            return Err(Error::InvalidArgument("rank must be positive".into()));
        }
        Ok(Automorphism {
            images: (0..rank)
                .map(|i| Element::generator(rank, i).map(|x| x.inv()))
                .collect::<Result<Vec<_>>>()?,
        })
    }

    /// Inverts `x_{index+1}` and fixes the other generators.
    pub fn extremal_standard(rank: usize, index: usize) -> Result<Automorphism> {
        if index >= rank {
            return Err(Error::IndexOutOfRank {
                index: index + 1,
                rank,
            });
        }
        let mut sigma = Automorphism::identity(rank);
        sigma.images[index] = sigma.images[index].inv();
        Ok(sigma)
    }

    /// `x_i ↦ x_{perm[i]}` (zero-based).
    pub fn basis_permutation(rank: usize, perm: &[usize]) -> Result<Automorphism> {
        if perm.len() != rank {
            return Err(Error::DimensionMismatch("permutation length".into()));
        }
        let mut seen = vec![false; rank];
        for &p in perm {
            if p >= rank {
                return Err(Error::IndexOutOfRank { index: p + 1, rank });
            }
            if std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidArgument("not a permutation".into()));
            }
        }
        Ok(Automorphism {
            images: perm
                .iter()
                .map(|&p| Element::generator(rank, p))
                .collect::<Result<Vec<_>>>()?,
        })
    }

    pub fn classify_involution(&self) -> InvolutionKind {
        if !self.is_involution() {
            return InvolutionKind::NotInvolution;
        }
        let m = self.abelianize();
        if m == -&IntMatrix::identity(self.rank()) {
            return InvolutionKind::SymmetryModIA;
        }
        let pm = involutions::plus_minus(&m).expect("abelianization of an involution");
        if pm.is_diagonalizable() && pm.minus.len() == 1 {
            InvolutionKind::ExtremalModIA
        } else {
            InvolutionKind::OtherInvolution
        }
    }
}

impl fmt::Debug for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Automorphism{}", crate::wordlang::format_automorphism(self))
    }
}

fn witness_matrix(taus: &[Automorphism]) -> Result<(usize, Vec<Element>)> {
    let n = taus
        .first()
        .ok_or_else(|| Error::InvalidArgument("empty conjugation set".into()))?
        .rank();
    let witnesses = taus
        .iter()
        .map(|t| {
            t.check_rank(n)?;
            t.inner_witness()?.ok_or(Error::NotInner)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((n, witnesses))
}

/// `true` iff the conjugations form a basis of `Inn N ≅ Z^n`.
pub fn is_basis_conjugation_set(taus: &[Automorphism]) -> Result<bool> {
    let (n, witnesses) = witness_matrix(taus)?;
    if witnesses.len() != n {
        return Ok(false);
    }
    let cols: Vec<Vec<BigInt>> = witnesses.iter().map(|w| w.abelian().to_vec()).collect();
    Ok(zlinalg::is_unimodular_matrix(&IntMatrix::from_columns(n, &cols)?))
}

/// The symmetry `θ_B` inverting the zero-commutator witnesses of a basis set
/// of conjugations.
pub fn basis_symmetry(taus: &[Automorphism]) -> Result<Automorphism> {
    if !is_basis_conjugation_set(taus)? {
        return Err(Error::NotABasisSet);
    }
    let (n, witnesses) = witness_matrix(taus)?;
    let cols: Vec<Vec<BigInt>> = witnesses.iter().map(|w| w.abelian().to_vec()).collect();
    // ρ sends x_k to the k-th witness, so ρ θ* ρ^-1 inverts each witness
    let rho = Automorphism::lift(&IntMatrix::from_columns(n, &cols)?)?;
    Automorphism::symmetry_standard(n)?.conjugate_by(&rho)
}

/// Whether `θ = θ_B α²` for an IA automorphism `α`, i.e. `θ_B ∘ θ` has only
/// even commutator offsets.
pub fn is_attached_symmetry(theta: &Automorphism, taus: &[Automorphism]) -> Result<bool> {
    if theta.classify_involution() != InvolutionKind::SymmetryModIA {
        return Err(Error::NotSymmetryModIA);
    }
    let theta_b = basis_symmetry(taus)?;
    let beta = theta_b.compose(theta)?;
    Ok(beta
        .ia_offsets()?
        .iter()
        .flatten()
        .all(|x| x.is_even()))
}
