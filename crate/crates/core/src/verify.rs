//! The verification harness: every structural statement the toolkit relies on,
//! rerun on random inputs at every requested rank.
//!
//! Each trial draws from its own generator seeded by
//! `hash(seed, check name, rank, trial)`, so reports are deterministic and
//! independent of scheduling. Checks run in parallel and the report lists them
//! sorted by name.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::autgroup::{basis_symmetry, is_attached_symmetry, Automorphism, InvolutionKind};
use crate::error::{Error, Result};
use crate::iastruct::{
    classify_wrt_extremal, decode_triplet, ia_tau_split, psi_criterion_check, random_l_member,
    PMClass,
};
use crate::involutions::{
    canonical_matrix, commuting_decomposition, hua_reiner_canonicalize, matrix_product,
    order3_witness, plus_minus, rotation, sqrt_of_involution, three_conjugates_probe,
    x_conjugates, y_conjugates,
};
use crate::nilcore::{pair_count, pairs, reduce_word, Element, GeneratorWord, Letter};
use crate::report::{CheckResult, VerificationReport};
use crate::sampling::{
    random_automorphism, random_central, random_element, random_ia, random_involution,
    random_involution_type, random_unimodular, MAX_CONJUGATOR_LENGTH,
};
use crate::seeding::trial_rng;
use crate::wordlang::{automorphism_to_json, format_element};
use crate::zlinalg::{
    decompose_into_unimodular, direct_complement, inverse_unimodular, is_unimodular_matrix,
    is_unimodular_vector, IntMatrix, LatticeBasis,
};

pub const MIN_RANK: usize = 2;
pub const MAX_RANK: usize = 8;

/// Deliberate defects used to confirm that the harness notices broken
/// arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutant {
    /// Flips the sign of the commutator correction in the product.
    MulSign,
}

impl std::str::FromStr for Mutant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mul-sign" => Ok(Mutant::MulSign),
            other => Err(Error::InvalidArgument(format!("unknown mutant {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub rank_min: usize,
    pub rank_max: usize,
    pub trials: usize,
    pub seed: u64,
    pub mutant: Option<Mutant>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            rank_min: 2,
            rank_max: 5,
            trials: 200,
            seed: 0,
            mutant: None,
        }
    }
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<()> {
        if self.rank_min < MIN_RANK || self.rank_max > MAX_RANK || self.rank_min > self.rank_max {
            return Err(Error::InvalidArgument(format!(
                "rank range {}..{} must satisfy {MIN_RANK} <= min <= max <= {MAX_RANK}",
                self.rank_min, self.rank_max
            )));
        }
        if self.trials == 0 {
            return Err(Error::InvalidArgument("trials must be positive".into()));
        }
        Ok(())
    }
}

struct Ctx {
    mutant: Option<Mutant>,
}

impl Ctx {
    fn mul(&self, a: &Element, b: &Element) -> Element {
        match self.mutant {
            None => a.mul(b).expect("same rank"),
            Some(Mutant::MulSign) => {
                let n = a.rank();
                let abelian = a.abelian().iter().zip(b.abelian()).map(|(x, y)| x + y).collect();
                let comm = pairs(n)
                    .zip(a.comm().iter().zip(b.comm()))
                    .map(|((i, j), (c, d))| c + d + &a.abelian()[j] * &b.abelian()[i])
                    .collect();
                Element::from_parts(abelian, comm).expect("same rank")
            }
        }
    }
}

struct Fail(Value);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(json!({ "error": e.to_string() }))
    }
}

type Trial = std::result::Result<(), Fail>;

fn ensure(cond: bool, ce: impl FnOnce() -> Value) -> Trial {
    if cond {
        Ok(())
    } else {
        Err(Fail(ce()))
    }
}

fn aj(a: &Automorphism) -> Value {
    automorphism_to_json(a)
}

fn ej(g: &Element) -> Value {
    Value::String(format_element(g))
}

type TrialFn = fn(&Ctx, usize, usize, &mut ChaCha8Rng) -> Trial;

struct Check {
    name: &'static str,
    /// `Some(k)` for checks with a fixed number of trials per rank.
    fixed_trials: Option<usize>,
    run: TrialFn,
}

const fn check(name: &'static str, run: TrialFn) -> Check {
    Check {
        name,
        fixed_trials: None,
        run,
    }
}

const fn fixed(name: &'static str, trials: usize, run: TrialFn) -> Check {
    Check {
        name,
        fixed_trials: Some(trials),
        run,
    }
}

fn checks() -> Vec<Check> {
    vec![
        check("centreless", centreless),
        check("commutator_laws", commutator_laws),
        check("conjs_by_ppe_forward", conjs_by_ppe_forward),
        fixed("extremal_order3", 1, extremal_order3),
        check("extremal_sqrt", extremal_sqrt),
        check("group_axioms", group_axioms),
        check("hr_canonical_forms", hr_canonical_forms),
        check("ia_tau_split", ia_tau_split_check),
        check("ias_are_def", ias_are_def),
        check("inner_homomorphism", inner_homomorphism),
        check("inner_witness", inner_witness),
        check("lift_and_invert", lift_and_invert),
        check("only_conjs_attached", only_conjs_attached),
        check("pms_of_an_ext", pms_of_an_ext),
        fixed("psi_criterion", 1, psi_criterion),
        check("soft_comm", soft_comm),
        check("symms_basics_a", symms_basics_a),
        check("symms_basics_c_forward", symms_basics_c_forward),
        fixed("symms_basics_c_witnesses", 1, symms_basics_c_witnesses),
        check("triplet_decode", triplet_decode),
        check("unimodular_decomposition", unimodular_decomposition),
    ]
}

/// Names of all checks, sorted.
pub fn check_names() -> Vec<&'static str> {
    let mut names: Vec<_> = checks().iter().map(|c| c.name).collect();
    names.sort_unstable();
    names
}

fn run_check(c: &Check, ctx: &Ctx, config: &VerifyConfig) -> CheckResult {
    let mut total = 0;
    for rank in config.rank_min..=config.rank_max {
        let trials = c.fixed_trials.unwrap_or(config.trials);
        let label = format!("{}/{rank}", c.name);
        for t in 0..trials {
            let mut rng = trial_rng(config.seed, &label, t as u64);
            total += 1;
            let outcome = (c.run)(ctx, rank, trials.max(config.trials), &mut rng);
            if let Err(Fail(ce)) = outcome {
                return CheckResult::fail(
                    c.name,
                    total,
                    json!({ "rank": rank, "trial": t, "detail": ce }),
                );
            }
        }
    }
    CheckResult::pass(c.name, total)
}

/// Runs every check at every rank in the configured range.
pub fn run(config: &VerifyConfig) -> Result<VerificationReport> {
    config.validate()?;
    let ctx = Ctx {
        mutant: config.mutant,
    };
    let results: Vec<CheckResult> = checks()
        .par_iter()
        .map(|c| run_check(c, &ctx, config))
        .collect();
    Ok(VerificationReport::new(
        (config.rank_min..=config.rank_max).collect(),
        config.seed,
        config.trials,
        results,
    ))
}

fn random_symmetry(rng: &mut ChaCha8Rng, n: usize) -> Result<Automorphism> {
    Automorphism::symmetry_standard(n)?.compose(&random_ia(rng, n, 3))
}

fn embed(m: &IntMatrix, n: usize) -> IntMatrix {
    let mut out = IntMatrix::identity(n);
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            out.set(i, j, m.get(i, j).clone());
        }
    }
    out
}

fn centreless(_: &Ctx, n: usize, _: usize, rng: &mut ChaCha8Rng) -> Trial {
    let sigma = random_automorphism(rng, n, 2);
    if sigma.is_identity() {
        return Ok(());
    }
    let mut pool = Vec::new();
    for i in 0..n {
        pool.push(Automorphism::conjugation(&Element::generator(n, i)?));
    }
    pool.push(Automorphism::symmetry_standard(n)?);
    pool.push(Automorphism::extremal_standard(n, 0)?);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let mut e = IntMatrix::identity(n);
                e.set(i, j, BigInt::one());
                pool.push(Automorphism::lift(&e)?);
            }
        }
    }
    for w in &pool {
        if !sigma.commutes_with(w)? {
            return Ok(());
        }
    }
    Err(Fail(json!({ "central": aj(&sigma) })))
}

fn commutator_laws(_: &Ctx, n: usize, _: usize, rng: &mut ChaCha8Rng) -> Trial {
    let a = random_element(rng, n, 5);
    let b = random_element(rng, n, 5);
    let c = random_element(rng, n, 5);
    let ce = || json!({ "a": ej(&a), "b": ej(&b), "c": ej(&c) });
    let ab = a.commutator(&b)?;
    ensure(ab.is_central(), ce)?;
    ensure(ab.mul(&b.commutator(&a)?)?.is_identity(), ce)?;
    let direct = a.inv().mul(&b.inv())?.mul(&a)?.mul(&b)?;
    ensure(direct == ab, ce)?;
    let left = a.mul(&b)?.commutator(&c)?;
    ensure(left == a.commutator(&c)?.mul(&b.commutator(&c)?)?, ce)?;
    let right = a.commutator(&b.mul(&c)?)?;
    ensure(right == ab.mul(&a.commutator(&c)?)?, ce)?;
    ensure(a.commutator(&a)?.is_identity(), ce)
}

/// For primitive `x` extend `x` to a basis, move the extremal involution at
/// `x_1` onto it, and check that it inverts conjugation by a power of `x`.
fn conjs_by_ppe_forward(_: &Ctx, n: usize, _: usize, rng: &mut ChaCha8Rng) -> Trial {
    let p = random_unimodular(rng, n, MAX_CONJUGATOR_LENGTH);
    let x = Element::from_parts(p.column(0), random_central(rng, n, 3).comm().to_vec())?;
    let k = rng.random_range(1..=3i64) * if rng.random_bool(0.5) { 1 } else { -1 };
    let alpha = Automorphism::conjugation(&x.pow_i64(k));
    let span = LatticeBasis::new(n, vec![x.abelian().to_vec()])?;
    let mut cols = vec![x.abelian().to_vec()];
    cols.extend(direct_complement(&span)?.vectors().iter().cloned());
    let rho = Automorphism::lift(&IntMatrix::from_columns(n, &cols)?)?;
    let phi = Automorphism::extremal_standard(n, 0)?.conjugate_by(&rho)?;
    let ce = || json!({ "x": ej(&x), "k": k, "phi": aj(&phi) });
    ensure(phi.classify_involution() == InvolutionKind::ExtremalModIA, ce)?;
    let conj = phi.compose(&alpha)?.compose(&phi)?;
    ensure(conj == alpha.invert(), ce)
}

fn extremal_order3(_: &Ctx, n: usize, _: usize, _: &mut ChaCha8Rng) -> Trial {
    let (f1, f2) = order3_witness(n)?;
    let prod = &f1 * &f2;
    let ce = || json!({ "f1": f1.to_json(), "f2": f2.to_json() });
    ensure(f1.is_involution() && f2.is_involution(), ce)?;
    ensure(plus_minus(&f1)?.minus.len() == 1, ce)?;
    ensure(plus_minus(&f2)?.minus.len() == 1, ce)?;
    ensure(!prod.is_identity() && !prod.pow(2).is_identity(), ce)?;
    ensure(prod.pow(3).is_identity(), ce)
}

fn extremal_sqrt(_: &Ctx, n: usize, _: usize, rng: &mut ChaCha8Rng) -> Trial {
    let r = rotation();
    ensure(&r * &r == -&IntMatrix::identity(2), || json!({ "rotation": r.to_json() }))?;
    let m = rng.random_range(0..=n);
    let f = random_involution(rng, (n - m, m, 0));
    let ce = || json!({ "f": f.to_json() });
    match sqrt_of_involution(&f) {
        Ok(h) => {
            ensure(m % 2 == 0, ce)?;
            ensure(&h * &h == f && is_unimodular_matrix(&h), ce)
        }
        Err(Error::OddNegativeRank(k)) => ensure(k == m && m % 2 == 1, ce),
        Err(e) => Err(e.into()),
    }
}

fn group_axioms(ctx: &Ctx, n: usize, _: usize, rng: &mut ChaCha8Rng) -> Trial {
    let a = random_element(rng, n, 5);
    let b = random_element(rng, n, 5);
    let c = random_element(rng, n, 5);
    let ce = || json!({ "a": ej(&a), "b": ej(&b), "c": ej(&c) });
    let id = Element::identity(n);
    ensure(
        ctx.mul(&ctx.mul(&a, &b), &c) == ctx.mul(&a, &ctx.mul(&b, &c)),
        ce,
    )?;
    ensure(ctx.mul(&a, &id) == a && ctx.mul(&id, &a) == a, ce)?;
    ensure(ctx.mul(&a, &a.inv()).is_identity(), ce)?;
    ensure(ctx.mul(&a.inv(), &a).is_identity(), ce)?;

    let len = rng.random_range(0..=12);
    let letters: Vec<Letter> = (0..len)
        .map(|_| Letter::new(rng.random_range(0..n), rng.random_bool(0.5)))
        .collect();
    let word = GeneratorWord::new(n, letters)?;
    let folded = word.letters().iter().fold(id.clone(), |acc, l| {
        let x = Element::generator(n, l.generator).expect("in range");
        ctx.mul(&acc, &if l.inverse { x.inv() } else { x })
    });
    ensure(folded == reduce_word(&word), || {
        json!({ "word": format!("{:?}", word.letters()) })
    })
}

fn hr_canonical_forms(_: &Ctx, n: usize, _: usize, rng: &mut ChaCha8Rng) -> Trial {
    let ty = random_involution_type(rng, n);
    let f = random_involution(rng, ty);
    let ce = || json!({ "f": f.to_json(), "type": [ty.0, ty.1, ty.2] });
    let form = hua_reiner_canonicalize(&f)?;
    form.validate(&f)?;
    let pm = plus_minus(&f)?;
    let s = pm.defect();
    ensure(pm.plus.len() + pm.minus.len() == n, ce)?;
    ensure(form.block_type() == (pm.plus.len() - s, pm.minus.len() - s, s), ce)?;
    ensure(form.block_type() == ty, ce)?;
    let b = form.basis();
    ensure(&(&inverse_unimodular(b)? * &f) * b == canonical_matrix(ty.0, ty.1, ty.2), ce)
}

fn ia_tau_split_check(_: &Ctx, n: usize, _: usize, rng: &mut ChaCha8Rng) -> Trial {
    let i = rng.random_range(0..n);
    let mut offsets = random_ia(rng, n, 3).ia_offsets()?;
    offsets[i] = vec![BigInt::zero(); pair_count(n)];
    let alpha = Automorphism::from_ia_offsets(n, offsets)?;
    let ce = || json!({ "alpha": aj(&alpha), "i": i + 1 });
    let split = ia_tau_split(&alpha, i)?;
    ensure(split.plus.compose(&split.minus)? == alpha, ce)?;
    ensure(split.plus.commutes_with(&split.minus)?, ce)?;
    let phi = Automorphism::extremal_standard(n, i)?;
    let conj = |a: &Automorphism| phi.compose(a).and_then(|x| x.compose(&phi));
    ensure(conj(&split.plus)? == split.plus, ce)?;
    ensure(conj(&split.minus)? == split.minus.invert(), ce)?;
    let again = ia_tau_split(&split.minus, i)?;
    ensure(again.plus.is_identity() && again.minus == split.minus, ce)
}

fn ias_are_def(_: &Ctx, n: usize, _: usize, rng: &mut ChaCha8Rng) -> Trial {
    let alpha = random_ia(rng, n, 4);
    let theta = Automorphism::symmetry_standard(n)?;
    let second = theta.compose(&alpha)?;
    let ce = || json!({ "alpha": aj(&alpha) });
    let minus = -&IntMatrix::identity(n);
    ensure(theta.compose(&second)? == alpha, ce)?;
    ensure(theta.is_involution() && second.is_involution(), ce)?;
    ensure(theta.abelianize() == minus && second.abelianize() == minus, ce)
}

fn inner_homomorphism(_: &Ctx, n: usize, _: usize, rng: &mut ChaCha8Rng) -> Trial {
    let g = random_element(rng, n, 4);
    let h = random_element(rng, n, 4);
    let c = random_central(rng, n, 4);
    let ce = || json!({ "g": ej(&g), "h": ej(&h) });
    let tg = Automorphism::conjugation(&g);
    ensure(
        tg.compose(&Automorphism::conjugation(&h))? == Automorphism::conjugation(&g.mul(&h)?),
        ce,
    )?;
    ensure(Automorphism::conjugation(&c).is_identity(), ce)?;
    ensure(tg.is_ia(), ce)?;
    ensure(tg.is_identity() == g.is_central(), ce)?;
    ensure(tg == Automorphism::conjugation(&g.mul(&c)?), ce)
}

fn brute_force_witness(sigma: &Automorphism, bound: i64) -> Option<Vec<BigInt>> {
    let n = sigma.rank();
    let mut a = vec![-bound; n];
    loop {
        let cand = Element::from_i64(&a, &vec![0; pair_count(n)]).expect("lengths");
        if Automorphism::conjugation(&cand) == *sigma {
            return Some(cand.abelian().to_vec());
        }
        let mut k = 0;
        loop {
            if k == n {
                return None;
            }
            if a[k] < bound {
                a[k] += 1;
                break;
            }
            a[k] = -bound;
            k += 1;
        }
    }
}

fn inner_witness(_: &Ctx, n: usize, _: usize, rng: &mut ChaCha8Rng) -> Trial {
    let (sigma, expected) = if rng.random_bool(0.5) {
        let a = random_element(rng, n, 3);
        (Automorphism::conjugation(&a), Some(a.abelian().to_vec()))
    } else {
        (random_ia(rng, n, 1), None)
    };
    let ce = || json!({ "sigma": aj(&sigma) });
    let w = sigma.inner_witness()?;
    if let Some(w) = &w {
        ensure(w.comm().iter().all(Zero::is_zero), ce)?;
        ensure(Automorphism::conjugation(w) == sigma, ce)?;
    }
    if let Some(a) = expected {
        ensure(w.as_ref().map(|w| w.abelian().to_vec()) == Some(a), ce)?;
    } else if n <= 4 {
        let brute = brute_force_witness(&sigma, 2);
        let solved = w.map(|w| w.abelian().to_vec());
        let in_box = solved
            .as_ref()
            .is_some_and(|v| v.iter().all(|x| x.abs() <= BigInt::from(2)));
        ensure(brute == if in_box { solved } else { None }, ce)?;
    }
    Ok(())
}

fn lift_and_invert(_: &Ctx, n: usize, _: usize, rng: &mut ChaCha8Rng) -> Trial {
    let sigma = random_automorphism(rng, n, 3);
    let rho = random_automorphism(rng, n, 3);
    let g = random_element(rng, n, 4);
    let h = random_element(rng, n, 4);
    let ce = || json!({ "sigma": aj(&sigma), "rho": aj(&rho) });
    let inv = sigma.invert();
    ensure(sigma.compose(&inv)?.is_identity() && inv.compose(&sigma)?.is_identity(), ce)?;
    let m = sigma.abelianize();
    ensure(Automorphism::lift(&m)?.abelianize() == m, ce)?;
    ensure(sigma.compose(&rho)?.abelianize() == &m * &rho.abelianize(), ce)?;
    ensure(
        sigma.apply(&g.mul(&h)?)? == sigma.apply(&g)?.mul(&sigma.apply(&h)?)?,
        ce,
    )?;
    ensure(
        sigma.apply(&g.commutator(&h)?)? == sigma.apply(&g)?.commutator(&sigma.apply(&h)?)?,
        ce,
    )
}

fn random_basis_set(rng: &mut ChaCha8Rng, n: usize) -> Result<Vec<Automorphism>> {
    let p = random_unimodular(rng, n, MAX_CONJUGATOR_LENGTH);
    (0..n)
        .map(|k| {
            let comm = random_central(rng, n, 2).comm().to_vec();
            Ok(Automorphism::conjugation(&Element::from_parts(
                p.column(k),
                comm,
            )?))
        })
        .collect()
}

fn only_conjs_attached(_: &Ctx, n: usize, _: usize, rng: &mut ChaCha8Rng) -> Trial {
    let taus = random_basis_set(rng, n)?;
    let theta_b = basis_symmetry(&taus)?;
    let beta = random_ia(rng, n, 3);
    let theta = theta_b.conjugate_by(&beta.invert())?;
    let ce = || json!({ "taus": taus.iter().map(aj).collect::<Vec<_>>(), "beta": aj(&beta) });
    ensure(theta.classify_involution() == InvolutionKind::SymmetryModIA, ce)?;
    ensure(is_attached_symmetry(&theta, &taus)?, ce)?;
    for tau in &taus {
        ensure(theta.compose(tau)?.compose(&theta)? == tau.invert(), ce)?;
    }
    let mut offsets = random_ia(rng, n, 3).ia_offsets()?;
    let k = rng.random_range(0..n);
    let c = rng.random_range(0..pair_count(n));
    if offsets[k][c].is_even() {
        offsets[k][c] += 1;
    }
    let gamma = Automorphism::from_ia_offsets(n, offsets)?;
    ensure(!is_attached_symmetry(&theta_b.compose(&gamma)?, &taus)?, ce)
}

fn pm_oracle(alpha: &Automorphism, i: usize) -> Result<PMClass> {
    let phi = Automorphism::extremal_standard(alpha.rank(), i)?;
    let conj = phi.compose(alpha)?.compose(&phi)?;
    Ok(if conj == *alpha {
        PMClass::Plus
    } else if conj == alpha.invert() {
        PMClass::Minus
    } else {
        PMClass::Neither
    })
}

fn pms_of_an_ext(_: &Ctx, n: usize, _: usize, rng: &mut ChaCha8Rng) -> Trial {
    let i = rng.random_range(0..n);
    let alpha = match rng.random_range(0..3) {
        0 => random_ia(rng, n, 2),
        1 => random_l_member(rng, n, i, 2, true),
        _ => {
            let l = random_l_member(rng, n, i, 2, true);
            ia_tau_split(&Automorphism::from_ia_offsets(n, {
                let mut o = random_ia(rng, n, 2).ia_offsets()?;
                o[i] = vec![BigInt::zero(); pair_count(n)];
                o
            })?, i)?
            .plus
            .compose(&l.invert())?
            .compose(&l)?
        }
    };
    let got = classify_wrt_extremal(&alpha, i)?;
    ensure(got == pm_oracle(&alpha, i)?, || {
        json!({ "alpha": aj(&alpha), "i": i + 1, "got": got.to_string() })
    })
}

fn psi_criterion(_: &Ctx, n: usize, trials: usize, rng: &mut ChaCha8Rng) -> Trial {
    for (i, j) in [(0, 1), (n - 1, 0)] {
        let r = psi_criterion_check(n, i, j, trials, rng.random());
        if let Some(ce) = r.counterexample {
            return Err(Fail(ce));
        }
    }
    Ok(())
}

fn soft_comm(_: &Ctx, n: usize, _: usize, rng: &mut ChaCha8Rng) -> Trial {
    let signs = |rng: &mut ChaCha8Rng| -> Vec<i64> {
        (0..n).map(|_| if rng.random_bool(0.5) { 1 } else { -1 }).collect()
    };
    let p = random_unimodular(rng, n, MAX_CONJUGATOR_LENGTH);
    let q = if rng.random_bool(0.5) {
        p.clone()
    } else {
        random_unimodular(rng, n, MAX_CONJUGATOR_LENGTH)
    };
    let f = &(&p * &IntMatrix::diagonal(&signs(rng))) * &inverse_unimodular(&p)?;
    let g = &(&q * &IntMatrix::diagonal(&signs(rng))) * &inverse_unimodular(&q)?;
    let d = commuting_decomposition(&f, &g)?;
    ensure(d.is_direct_sum() == (&f * &g == &g * &f), || {
        json!({ "f": f.to_json(), "g": g.to_json() })
    })
}

fn symms_basics_a(_: &Ctx, n: usize, _: usize, rng: &mut ChaCha8Rng) -> Trial {
    let theta = random_symmetry(rng, n)?;
    let alpha = random_ia(rng, n, 4);
    let ce = || json!({ "theta": aj(&theta), "alpha": aj(&alpha) });
    ensure(theta.classify_involution() == InvolutionKind::SymmetryModIA, ce)?;
    ensure(theta.compose(&alpha)?.compose(&theta)? == alpha.invert(), ce)?;
    ensure(theta.compose(&alpha)?.is_involution(), ce)
}

fn symms_basics_c_forward(_: &Ctx, n: usize, _: usize, rng: &mut ChaCha8Rng) -> Trial {
    let theta = random_symmetry(rng, n)?;
    let probe = three_conjugates_probe(&theta, 1, rng.random())?;
    ensure(!probe.is_counterexample(), || json!({ "theta": aj(&theta) }))
}

fn symms_basics_c_witnesses(_: &Ctx, n: usize, _: usize, _: &mut ChaCha8Rng) -> Trial {
    for (triple, ty) in [(x_conjugates(), (n - 1, 1, 0)), (y_conjugates(), (n - 2, 0, 1))] {
        let lifted: Vec<IntMatrix> = triple.iter().map(|m| embed(m, n)).collect();
        let ce = || json!({ "conjugates": lifted.iter().map(IntMatrix::to_json).collect::<Vec<_>>() });
        for m in &lifted {
            ensure(hua_reiner_canonicalize(m)?.block_type() == ty, ce)?;
        }
        ensure(!matrix_product(&lifted).is_involution(), ce)?;
    }
    Ok(())
}

fn triplet_decode(_: &Ctx, n: usize, _: usize, rng: &mut ChaCha8Rng) -> Trial {
    let taus = random_basis_set(rng, n)?;
    let beta = random_ia(rng, n, 3);
    let theta = basis_symmetry(&taus)?.compose(&beta.pow(2))?;
    let ce = || json!({ "taus": taus.iter().map(aj).collect::<Vec<_>>(), "theta": aj(&theta) });
    for tau in &taus {
        let r = decode_triplet(tau, &theta, &taus)?;
        let y = tau.inner_witness()?.ok_or(Error::NotInner)?;
        ensure(r.abelian() == y.abelian(), ce)?;
        ensure(theta.apply(&r)? == r.inv(), ce)?;
        for _ in 0..10 {
            let c = random_central(rng, n, 2);
            if c.is_identity() {
                continue;
            }
            let other = r.mul(&c)?;
            ensure(theta.apply(&other)? != other.inv(), ce)?;
        }
    }
    Ok(())
}

fn unimodular_decomposition(_: &Ctx, n: usize, _: usize, rng: &mut ChaCha8Rng) -> Trial {
    let mut v: Vec<BigInt> = (0..n).map(|_| BigInt::from(rng.random_range(-20..=20))).collect();
    if v.iter().all(Zero::is_zero) {
        v[0] = BigInt::from(6);
    }
    let parts = decompose_into_unimodular(&v, 2)?;
    let ce = || json!({ "v": v.iter().map(|x| x.to_string()).collect::<Vec<_>>() });
    ensure(!parts.is_empty() && parts.len() <= 2, ce)?;
    for p in &parts {
        ensure(is_unimodular_vector(p)?, ce)?;
    }
    let sum = parts.iter().fold(vec![BigInt::zero(); n], |acc, p| {
        acc.iter().zip(p).map(|(a, b)| a + b).collect()
    });
    ensure(sum == v, ce)?;
    let zero = vec![BigInt::zero(); pair_count(n)];
    let tau = |a: &[BigInt]| -> Result<Automorphism> {
        Ok(Automorphism::conjugation(&Element::from_parts(a.to_vec(), zero.clone())?))
    };
    let mut prod = Automorphism::identity(n);
    for p in &parts {
        prod = prod.compose(&tau(p)?)?;
    }
    ensure(prod == tau(&v)?, ce)
}
