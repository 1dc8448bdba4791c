//! Random test objects: elements, IA automorphisms, unimodular matrices and
//! involutions of prescribed type.

use num_bigint::BigInt;
use rand::Rng;

use crate::autgroup::Automorphism;
use crate::involutions::canonical_matrix;
use crate::nilcore::{pair_count, Element};
use crate::zlinalg::IntMatrix;

/// Longest conjugator word used when sampling conjugacy classes.
pub const MAX_CONJUGATOR_LENGTH: usize = 8;

fn ints<R: Rng + ?Sized>(rng: &mut R, len: usize, bound: i64) -> Vec<BigInt> {
    (0..len).map(|_| BigInt::from(rng.random_range(-bound..=bound))).collect()
}

pub fn random_element<R: Rng + ?Sized>(rng: &mut R, rank: usize, bound: i64) -> Element {
    Element::from_parts(ints(rng, rank, bound), ints(rng, pair_count(rank), bound))
        .expect("consistent lengths")
}

/// Central element with exponents in `[-bound, bound]`.
pub fn random_central<R: Rng + ?Sized>(rng: &mut R, rank: usize, bound: i64) -> Element {
    Element::central(rank, ints(rng, pair_count(rank), bound)).expect("consistent lengths")
}

/// IA automorphism with offsets in `[-bound, bound]`.
pub fn random_ia<R: Rng + ?Sized>(rng: &mut R, rank: usize, bound: i64) -> Automorphism {
    let offsets = (0..rank).map(|_| ints(rng, pair_count(rank), bound)).collect();
    Automorphism::from_ia_offsets(rank, offsets).expect("consistent lengths")
}

/// Product of `1..=max_len` random elementary transvections, transpositions
/// and sign flips.
pub fn random_unimodular<R: Rng + ?Sized>(rng: &mut R, rank: usize, max_len: usize) -> IntMatrix {
    let len = rng.random_range(1..=max_len.max(1));
    let mut m = IntMatrix::identity(rank);
    for _ in 0..len {
        m = &m * &random_elementary(rng, rank);
    }
    m
}

fn random_elementary<R: Rng + ?Sized>(rng: &mut R, rank: usize) -> IntMatrix {
    let mut e = IntMatrix::identity(rank);
    let kind = if rank < 2 { 2 } else { rng.random_range(0..3) };
    match kind {
        0 => {
            let i = rng.random_range(0..rank);
            let mut j = rng.random_range(0..rank - 1);
            if j >= i {
                j += 1;
            }
            let v = if rng.random_bool(0.5) { 1 } else { -1 };
            e.set(i, j, BigInt::from(v));
        }
        1 => {
            let i = rng.random_range(0..rank);
            let mut j = rng.random_range(0..rank - 1);
            if j >= i {
                j += 1;
            }
            e.set(i, i, BigInt::from(0));
            e.set(j, j, BigInt::from(0));
            e.set(i, j, BigInt::from(1));
            e.set(j, i, BigInt::from(1));
        }
        _ => {
            let i = rng.random_range(0..rank);
            e.set(i, i, BigInt::from(-1));
        }
    }
    e
}

/// Random automorphism `lift(P) ∘ α` with `P` a random unimodular word and `α`
/// a random IA automorphism.
pub fn random_automorphism<R: Rng + ?Sized>(rng: &mut R, rank: usize, bound: i64) -> Automorphism {
    let p = random_unimodular(rng, rank, MAX_CONJUGATOR_LENGTH);
    Automorphism::lift(&p)
        .expect("unimodular")
        .compose(&random_ia(rng, rank, bound))
        .expect("same rank")
}

/// A random block type `(p, m, s)` with `p + m + 2s = rank`.
pub fn random_involution_type<R: Rng + ?Sized>(rng: &mut R, rank: usize) -> (usize, usize, usize) {
    let s = rng.random_range(0..=rank / 2);
    let p = rng.random_range(0..=rank - 2 * s);
    (p, rank - 2 * s - p, s)
}

/// Random involution `P C P^-1` with `C` of the given block type.
pub fn random_involution<R: Rng + ?Sized>(
    rng: &mut R,
    block_type: (usize, usize, usize),
) -> IntMatrix {
    let c = canonical_matrix(block_type.0, block_type.1, block_type.2);
    let p = random_unimodular(rng, c.rows(), MAX_CONJUGATOR_LENGTH);
    let p_inv = crate::zlinalg::inverse_unimodular(&p).expect("unimodular");
    &(&p * &c) * &p_inv
}
