//! IA automorphisms measured against a fixed generator `x_i`: the split into
//! the parts commuting with and inverted by the extremal involution at `x_i`,
//! stabilizers of primitive elements, the `ψ` criterion, and decoding of
//! primitive elements from triplets `(τ, B, θ)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rand::Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::autgroup::{basis_symmetry, is_attached_symmetry, Automorphism, InvolutionKind};
use crate::error::{Error, Result};
use crate::nilcore::{pair_count, pairs, Element};
use crate::report::CheckResult;
use crate::seeding::trial_rng;
use crate::wordlang::automorphism_to_json;

/// Behaviour of an IA automorphism `α` under conjugation by an extremal
/// involution `φ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PMClass {
    /// `φ α φ = α`. Reported for the identity as well.
    Plus,
    /// `φ α φ = α^-1`.
    Minus,
    Neither,
}

impl fmt::Display for PMClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Mask over commutator coordinates: `true` on pairs containing `i`.
fn touches(rank: usize, i: usize) -> Vec<bool> {
    pairs(rank).map(|(a, b)| a == i || b == i).collect()
}

fn supported_on(v: &[BigInt], mask: &[bool], on: bool) -> bool {
    v.iter().zip(mask).all(|(x, &m)| m == on || x.is_zero())
}

fn check_index(rank: usize, i: usize) -> Result<()> {
    if i >= rank {
        return Err(Error::IndexOutOfRank {
            index: i + 1,
            rank,
        });
    }
    Ok(())
}

/// Classifies `α` against `extremal_standard(n, i)` by the supports of its
/// offsets.
pub fn classify_wrt_extremal(alpha: &Automorphism, i: usize) -> Result<PMClass> {
    let offsets = alpha.ia_offsets()?;
    let n = alpha.rank();
    check_index(n, i)?;
    let mask = touches(n, i);
    let pattern = |own: bool| {
        offsets
            .iter()
            .enumerate()
            .all(|(j, o)| supported_on(o, &mask, (j == i) == own))
    };
    Ok(if pattern(true) {
        PMClass::Plus
    } else if pattern(false) {
        PMClass::Minus
    } else {
        PMClass::Neither
    })
}

/// Whether `α` fixes the primitive element `x`; such an `α` then fixes the
/// whole coset `x N'`.
pub fn ia_tau_contains(alpha: &Automorphism, x: &Element) -> Result<bool> {
    if !alpha.is_ia() {
        return Err(Error::NotIA);
    }
    if !x.is_primitive().unwrap_or(false) {
        return Err(Error::NotPrimitive);
    }
    Ok(alpha.apply(x)? == *x)
}

/// `α = plus ∘ minus` for an IA automorphism fixing `x_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IASplit {
    /// Offsets avoiding `x_i`; commutes with the extremal involution at `x_i`.
    pub plus: Automorphism,
    /// Offsets of the form `[x_i, a]`; inverted by that involution.
    pub minus: Automorphism,
}

pub fn ia_tau_split(alpha: &Automorphism, i: usize) -> Result<IASplit> {
    let offsets = alpha.ia_offsets()?;
    let n = alpha.rank();
    check_index(n, i)?;
    if offsets[i].iter().any(|x| !x.is_zero()) {
        return Err(Error::DoesNotFixGenerator(i + 1));
    }
    let mask = touches(n, i);
    let (mut plus, mut minus) = (Vec::with_capacity(n), Vec::with_capacity(n));
    for o in offsets {
        let keep = |on: bool| -> Vec<BigInt> {
            o.iter()
                .zip(&mask)
                .map(|(x, &m)| if m == on { x.clone() } else { BigInt::zero() })
                .collect()
        };
        plus.push(keep(false));
        minus.push(keep(true));
    }
    Ok(IASplit {
        plus: Automorphism::from_ia_offsets(n, plus)?,
        minus: Automorphism::from_ia_offsets(n, minus)?,
    })
}

/// `ψ : x_i ↦ x_i^-1, x_j ↦ x_i x_j`, fixing the other generators.
pub fn psi_involution(rank: usize, i: usize, j: usize) -> Result<Automorphism> {
    check_index(rank, i)?;
    check_index(rank, j)?;
    if i == j {
        return Err(Error::InvalidArgument("psi needs two distinct indices".into()));
    }
    let mut images: Vec<Element> = (0..rank)
        .map(|k| Element::generator(rank, k))
        .collect::<Result<_>>()?;
    images[i] = images[i].inv();
    images[j] = Element::generator(rank, i)?.mul(&images[j])?;
    Automorphism::from_images(images)
}

/// Random member of `L = {λ IA : φ_i λ φ_i = λ^-1}`; the offset of `x_i` is
/// zeroed when `with_c` is false, giving a member of `IA⁻`.
pub fn random_l_member<R: Rng + ?Sized>(
    rng: &mut R,
    rank: usize,
    i: usize,
    bound: i64,
    with_c: bool,
) -> Automorphism {
    let mask = touches(rank, i);
    let offsets = (0..rank)
        .map(|k| {
            mask.iter()
                .map(|&m| {
                    let allowed = if k == i { with_c && !m } else { m };
                    if allowed {
                        BigInt::from(rng.random_range(-bound..=bound))
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    Automorphism::from_ia_offsets(rank, offsets).expect("one offset per generator")
}

/// Checks that for `λ ∈ L`, `ψ λ ψ = λ^-1` holds exactly when the offset of
/// `x_i` vanishes. Trials alternate between members of `IA⁻` and members of
/// `L` with a free `x_i` offset; trial 0 is the identity.
pub fn psi_criterion_check(
    rank: usize,
    i: usize,
    j: usize,
    trials: usize,
    seed: u64,
) -> CheckResult {
    let name = "psi_criterion";
    let psi = match psi_involution(rank, i, j) {
        Ok(p) if p.is_involution() => p,
        Ok(p) => {
            return CheckResult::fail(
                name,
                0,
                json!({"reason": "psi is not an involution", "psi": automorphism_to_json(&p)}),
            )
        }
        Err(e) => return CheckResult::fail(name, 0, json!({"reason": e.to_string()})),
    };
    for t in 0..trials {
        let mut rng = trial_rng(seed, name, t as u64);
        let lambda = if t == 0 {
            Automorphism::identity(rank)
        } else {
            random_l_member(&mut rng, rank, i, 3, t % 2 == 0)
        };
        let in_minus = lambda.ia_offsets().expect("IA")[i].iter().all(Zero::is_zero);
        let conj = psi.compose(&lambda).and_then(|x| x.compose(&psi));
        let inverted = conj.map(|c| c == lambda.invert()).unwrap_or(false);
        if inverted != in_minus {
            return CheckResult::fail(
                name,
                t + 1,
                json!({
                    "rank": rank,
                    "i": i + 1,
                    "j": j + 1,
                    "lambda": automorphism_to_json(&lambda),
                }),
            );
        }
    }
    CheckResult::pass(name, trials)
}

/// A conjugation `τ`, a basis set of conjugations containing it, and a
/// symmetry `θ` attached to that set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triplet {
    pub tau: Automorphism,
    pub taus: Vec<Automorphism>,
    pub theta: Automorphism,
}

/// The unique element `r` of `y N'` with `θ(r) = r^-1`, where `τ = τ_y`.
pub fn decode_triplet(
    tau: &Automorphism,
    theta: &Automorphism,
    taus: &[Automorphism],
) -> Result<Element> {
    if !taus.contains(tau) {
        return Err(Error::NotInBasisSet);
    }
    basis_symmetry(taus)?;
    if theta.classify_involution() != InvolutionKind::SymmetryModIA {
        return Err(Error::NotAttached);
    }
    let y = tau.inner_witness()?.ok_or(Error::NotInner)?;
    let d = y.mul(&theta.apply(&y)?)?;
    debug_assert!(d.is_central());
    if d.comm().iter().any(|x| x.is_odd()) {
        return Err(Error::NoInvertedRepresentative);
    }
    if !is_attached_symmetry(theta, taus)? {
        return Err(Error::NotAttached);
    }
    let c: Vec<BigInt> = d.comm().iter().map(|x| -(x / BigInt::from(2))).collect();
    debug_assert_eq!(c.len(), pair_count(y.rank()));
    y.mul(&Element::central(y.rank(), c)?)
}

impl Triplet {
    pub fn decode(&self) -> Result<Element> {
        decode_triplet(&self.tau, &self.theta, &self.taus)
    }
}

/// Whether two triplets code the same primitive element.
pub fn triplets_equivalent(a: &Triplet, b: &Triplet) -> Result<bool> {
    Ok(a.decode()? == b.decode()?)
}
