//! Elements of the free two-step nilpotent group `N_n` in normal form.
//!
//! An element is stored as
//! `x_1^{a_1} ... x_n^{a_n} * prod_{i<j} [x_i, x_j]^{c_ij}`
//! with the commutator convention `[a, b] = a^-1 b^-1 a b`. Generators and
//! commutator pairs are indexed from zero; pairs `(i, j)`, `i < j`, are ordered
//! lexicographically.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::zlinalg;

/// Number of basis commutators `[x_i, x_j]`, `i < j`.
pub fn pair_count(rank: usize) -> usize {
    rank * rank.saturating_sub(1) / 2
}

/// Position of `[x_i, x_j]` (`i < j`) in the commutator vector.
pub fn pair_index(rank: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < rank);
    i * (2 * rank - i - 1) / 2 + (j - i - 1)
}

/// All pairs `(i, j)`, `i < j`, in storage order.
pub fn pairs(rank: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..rank).flat_map(move |i| (i + 1..rank).map(move |j| (i, j)))
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element {
    abelian: Vec<BigInt>,
    comm: Vec<BigInt>,
}

impl Element {
    pub fn identity(rank: usize) -> Self {
        Element {
            abelian: vec![BigInt::zero(); rank],
            comm: vec![BigInt::zero(); pair_count(rank)],
        }
    }

    /// The generator `x_{index+1}`.
    pub fn generator(rank: usize, index: usize) -> Result<Self> {
        if index >= rank {
            return Err(Error::IndexOutOfRank { index: index + 1, rank });
        }
        let mut g = Self::identity(rank);
        g.abelian[index] = BigInt::one();
        Ok(g)
    }

    /// The basis commutator `[x_{i+1}, x_{j+1}]`; `i > j` is normalized by
    /// antisymmetry and `i == j` gives the identity.
    pub fn basis_commutator(rank: usize, i: usize, j: usize) -> Result<Self> {
        for k in [i, j] {
            if k >= rank {
                return Err(Error::IndexOutOfRank { index: k + 1, rank });
            }
        }
        let mut g = Self::identity(rank);
        if i < j {
            g.comm[pair_index(rank, i, j)] = BigInt::one();
        } else if i > j {
            g.comm[pair_index(rank, j, i)] = -BigInt::one();
        }
        Ok(g)
    }

    pub fn from_parts(abelian: Vec<BigInt>, comm: Vec<BigInt>) -> Result<Self> {
        if abelian.is_empty() {
            return Err(Error::InvalidArgument("rank must be positive".into()));
        }
        if comm.len() != pair_count(abelian.len()) {
            return Err(Error::DimensionMismatch(format!(
                "rank {} needs {} commutator exponents, got {}",
                abelian.len(),
                pair_count(abelian.len()),
                comm.len()
            )));
        }
        Ok(Element { abelian, comm })
    }

    pub fn from_i64(abelian: &[i64], comm: &[i64]) -> Result<Self> {
        Self::from_parts(zlinalg::ints(abelian), zlinalg::ints(comm))
    }

    /// Central element with the given commutator exponents.
    pub fn central(rank: usize, comm: Vec<BigInt>) -> Result<Self> {
        Self::from_parts(vec![BigInt::zero(); rank], comm)
    }

    pub fn rank(&self) -> usize {
        self.abelian.len()
    }

    /// Image in the abelianization `A = N/N'`.
    pub fn abelian(&self) -> &[BigInt] {
        &self.abelian
    }

    pub fn comm(&self) -> &[BigInt] {
        &self.comm
    }

    /// Exponent of `[x_{i+1}, x_{j+1}]`, `i < j`.
    pub fn comm_at(&self, i: usize, j: usize) -> &BigInt {
        &self.comm[pair_index(self.rank(), i, j)]
    }

    pub fn is_identity(&self) -> bool {
        self.abelian.iter().all(Zero::is_zero) && self.comm.iter().all(Zero::is_zero)
    }

    /// Central elements are exactly those of `N'`.
    pub fn is_central(&self) -> bool {
        self.abelian.iter().all(Zero::is_zero)
    }

    fn check_rank(&self, other: &Element) -> Result<()> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Element) -> Result<Element> {
        self.check_rank(other)?;
        let n = self.rank();
        let abelian = zlinalg::vec_add(&self.abelian, &other.abelian);
        let mut comm = zlinalg::vec_add(&self.comm, &other.comm);
        // moving x_i^{b_i} left past x_j^{a_j}, j > i
        for (k, (i, j)) in pairs(n).enumerate() {
            comm[k] -= &self.abelian[j] * &other.abelian[i];
        }
        Ok(Element { abelian, comm })
    }

    pub fn inv(&self) -> Element {
        let n = self.rank();
        let abelian = self.abelian.iter().map(|a| -a).collect();
        let comm = pairs(n)
            .enumerate()
            .map(|(k, (i, j))| -&self.comm[k] - &self.abelian[i] * &self.abelian[j])
            .collect();
        Element { abelian, comm }
    }

    /// `g^k` in closed form: abelian `k a`, commutators `k c - C(k,2) a_i a_j`.
    pub fn pow(&self, k: &BigInt) -> Element {
        let n = self.rank();
        let binom = k * (k - 1) / 2;
        let abelian = self.abelian.iter().map(|a| a * k).collect();
        let comm = pairs(n)
            .enumerate()
            .map(|(idx, (i, j))| &self.comm[idx] * k - &binom * &self.abelian[i] * &self.abelian[j])
            .collect();
        Element { abelian, comm }
    }

    pub fn pow_i64(&self, k: i64) -> Element {
        self.pow(&BigInt::from(k))
    }

    /// `[g, h] = g^-1 h^-1 g h`. Depends only on abelian parts.
    pub fn commutator(&self, other: &Element) -> Result<Element> {
        self.check_rank(other)?;
        let n = self.rank();
        let comm = commutator_pattern(&self.abelian, &other.abelian);
        Ok(Element {
            abelian: vec![BigInt::zero(); n],
            comm,
        })
    }

    /// Member of some basis of `N`, i.e. the abelian part is unimodular.
    pub fn is_primitive(&self) -> Result<bool> {
        zlinalg::is_unimodular_vector(&self.abelian)
    }
}

/// Commutator exponents `a_i b_j - a_j b_i` of `[g, h]` for abelian parts `a`, `b`.
pub fn commutator_pattern(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    pairs(a.len())
        .map(|(i, j)| &a[i] * &b[j] - &a[j] * &b[i])
        .collect()
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({})", crate::wordlang::format_element(self))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::wordlang::format_element(self))
    }
}

/// A single letter `x_{generator+1}^{±1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Letter { generator, inverse }
    }

    fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

/// A finite word in the generators and their inverses.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorWord {
    rank: usize,
    letters: Vec<Letter>,
}

impl GeneratorWord {
    pub fn new(rank: usize, letters: Vec<Letter>) -> Result<Self> {
        if let Some(l) = letters.iter().find(|l| l.generator >= rank) {
            return Err(Error::IndexOutOfRank {
                index: l.generator + 1,
                rank,
            });
        }
        Ok(GeneratorWord { rank, letters })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Product of the letters computed with [`Element::mul`].
    pub fn fold_mul(&self) -> Element {
        self.letters.iter().fold(Element::identity(self.rank), |acc, l| {
            let x = Element::generator(self.rank, l.generator).expect("validated index");
            let x = if l.inverse { x.inv() } else { x };
            acc.mul(&x).expect("same rank")
        })
    }
}

/// Normal form of a word by literal symbol pushing.
///
/// Letters are bubble-sorted into generator order; each swap of adjacent
/// `x_j^e x_i^d` (`j > i`) uses `ab = ba[a, b]` and records the central
/// factor `[x_j, x_i]^{ed} = [x_i, x_j]^{-ed}`. Deliberately quadratic and
/// independent of the closed-form product, so it can serve as an oracle.
pub fn reduce_word(word: &GeneratorWord) -> Element {
    let n = word.rank();
    let mut letters: Vec<Letter> = word.letters().to_vec();
    let mut comm = vec![BigInt::zero(); pair_count(n)];
    let mut swapped = true;
    while swapped {
        swapped = false;
        for k in 1..letters.len() {
            let (left, right) = (letters[k - 1], letters[k]);
            if left.generator > right.generator {
                let idx = pair_index(n, right.generator, left.generator);
                comm[idx] -= BigInt::from(left.sign() * right.sign());
                letters.swap(k - 1, k);
                swapped = true;
            }
        }
    }
    let mut abelian = vec![BigInt::zero(); n];
    for l in &letters {
        abelian[l.generator] += BigInt::from(l.sign());
    }
    Element { abelian, comm }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn el(a: &[i64], c: &[i64]) -> Element {
        Element::from_i64(a, c).unwrap()
    }

    fn word(rank: usize, letters: &[(usize, bool)]) -> GeneratorWord {
        GeneratorWord::new(
            rank,
            letters.iter().map(|&(g, inv)| Letter::new(g, inv)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn pair_indexing_is_lexicographic() {
        let got: Vec<usize> = pairs(4).map(|(i, j)| pair_index(4, i, j)).collect();
        assert_eq!(got, (0..6).collect::<Vec<_>>());
        assert_eq!(pairs(4).collect::<Vec<_>>()[3], (1, 2));
    }

    #[test]
    fn mul_examples() {
        let g = el(&[3, -1], &[5]);
        assert_eq!(Element::identity(2).mul(&g).unwrap(), g);

        let x1 = Element::generator(2, 0).unwrap();
        let x2 = Element::generator(2, 1).unwrap();
        // x2 * x1 = x1 x2 [x1,x2]^-1, checked against the rewriting oracle
        let expected = el(&[1, 1], &[-1]);
        assert_eq!(x2.mul(&x1).unwrap(), expected);
        assert_eq!(reduce_word(&word(2, &[(1, false), (0, false)])), expected);

        let prod = el(&[1, 1], &[0]).mul(&el(&[-1, -1], &[-1])).unwrap();
        assert!(prod.is_identity());
        assert_eq!(
            reduce_word(&word(2, &[(0, false), (1, false), (1, true), (0, true)])),
            Element::identity(2)
        );
    }

    #[test]
    fn rank_mismatch() {
        let a = Element::identity(2);
        let b = Element::identity(3);
        assert_eq!(a.mul(&b), Err(Error::RankMismatch { left: 2, right: 3 }));
        assert!(a.commutator(&b).is_err());
    }

    #[test]
    fn inv_examples() {
        assert!(Element::identity(3).inv().is_identity());
        assert_eq!(el(&[1, 1], &[0]).inv(), el(&[-1, -1], &[-1]));
        // (x1 x2)^-1 by the rewriting oracle
        assert_eq!(
            reduce_word(&word(2, &[(1, true), (0, true)])),
            el(&[-1, -1], &[-1])
        );
        assert_eq!(el(&[0, 0, 0], &[1, -2, 3]).inv(), el(&[0, 0, 0], &[-1, 2, -3]));
    }

    #[test]
    fn commutator_examples() {
        let x1 = Element::generator(2, 0).unwrap();
        let x2 = Element::generator(2, 1).unwrap();
        assert_eq!(x1.commutator(&x2).unwrap(), el(&[0, 0], &[1]));
        let g = el(&[2, 1], &[4]);
        assert!(g.commutator(&g).unwrap().is_identity());
        // [x1^2 x2, x1 x2] by letters: g^-1 h^-1 g h
        let g_word = [(0, false), (0, false), (1, false)];
        let h_word = [(0, false), (1, false)];
        let mut letters = Vec::new();
        letters.extend(g_word.iter().rev().map(|&(i, inv): &(usize, bool)| (i, !inv)));
        letters.extend(h_word.iter().rev().map(|&(i, inv): &(usize, bool)| (i, !inv)));
        letters.extend(g_word);
        letters.extend(h_word);
        let oracle = reduce_word(&word(2, &letters));
        assert_eq!(oracle, el(&[0, 0], &[1]));
        assert_eq!(el(&[2, 1], &[0]).commutator(&el(&[1, 1], &[0])).unwrap(), oracle);
    }

    #[test]
    fn primitivity() {
        assert!(Element::generator(3, 0).unwrap().is_primitive().unwrap());
        assert!(!el(&[2, 0], &[0]).is_primitive().unwrap());
        assert!(el(&[6, 10, 15], &[7, 0, -1]).is_primitive().unwrap());
        assert_eq!(el(&[0, 0], &[3]).is_primitive(), Err(Error::ZeroVector));
    }

    #[test]
    fn reduce_word_examples() {
        assert!(reduce_word(&word(2, &[])).is_identity());
        let w = word(2, &[(0, false), (1, false), (0, true), (1, true)]);
        // x1 x2 x1^-1 x2^-1 = [x1^-1, x2^-1] = [x1, x2]
        assert_eq!(reduce_word(&w), el(&[0, 0], &[1]));
        assert_eq!(w.fold_mul(), reduce_word(&w));
    }

    #[test]
    fn word_index_checked() {
        assert!(GeneratorWord::new(2, vec![Letter::new(2, false)]).is_err());
        assert!(Element::generator(2, 2).is_err());
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let g = el(&[2, -1, 3], &[1, 0, -2]);
        let mut acc = Element::identity(3);
        for k in 0..6 {
            assert_eq!(g.pow_i64(k), acc);
            assert_eq!(g.pow_i64(-k), acc.inv());
            acc = acc.mul(&g).unwrap();
        }
    }

    fn arb_element(rank: usize) -> impl Strategy<Value = Element> {
        (
            prop::collection::vec(-5i64..=5, rank),
            prop::collection::vec(-5i64..=5, pair_count(rank)),
        )
            .prop_map(|(a, c)| Element::from_i64(&a, &c).unwrap())
    }

    fn arb_triple() -> impl Strategy<Value = (Element, Element, Element)> {
        (1usize..=5).prop_flat_map(|n| (arb_element(n), arb_element(n), arb_element(n)))
    }

    fn arb_word() -> impl Strategy<Value = GeneratorWord> {
        (1usize..=4).prop_flat_map(|n| {
            prop::collection::vec((0..n, any::<bool>()), 0..=16).prop_map(move |ls| {
                GeneratorWord::new(n, ls.into_iter().map(|(g, i)| Letter::new(g, i)).collect())
                    .unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn group_axioms((g, h, k) in arb_triple()) {
            let n = g.rank();
            prop_assert_eq!(g.mul(&h).unwrap().mul(&k).unwrap(), g.mul(&h.mul(&k).unwrap()).unwrap());
            prop_assert_eq!(g.mul(&Element::identity(n)).unwrap(), g.clone());
            prop_assert!(g.mul(&g.inv()).unwrap().is_identity());
            prop_assert!(g.inv().mul(&g).unwrap().is_identity());
        }

        #[test]
        fn centre_is_commutator_subgroup(g in (1usize..=5).prop_flat_map(arb_element)) {
            let n = g.rank();
            let commutes_with_generators = (0..n).all(|i| {
                let x = Element::generator(n, i).unwrap();
                g.mul(&x).unwrap() == x.mul(&g).unwrap()
            });
            prop_assert_eq!(commutes_with_generators, g.is_central() || n == 1);
        }

        #[test]
        fn commutator_laws((g, h1, h2) in arb_triple()) {
            let lhs = g.commutator(&h1.mul(&h2).unwrap()).unwrap();
            let rhs = g.commutator(&h1).unwrap().mul(&g.commutator(&h2).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(g.commutator(&h1).unwrap(), h1.commutator(&g).unwrap().inv());
            // agrees with the defining word g^-1 h^-1 g h
            let direct = g.inv().mul(&h1.inv()).unwrap().mul(&g).unwrap().mul(&h1).unwrap();
            prop_assert_eq!(g.commutator(&h1).unwrap(), direct);
        }

        #[test]
        fn fold_mul_matches_rewriting(w in arb_word()) {
            prop_assert_eq!(w.fold_mul(), reduce_word(&w));
        }
    }
}
