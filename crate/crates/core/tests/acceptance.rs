//! Acceptance criteria 1-14, one PASS/FAIL line each. Run with
//! `cargo test -p nilaut-core --test acceptance`.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use nilaut_core::autgroup::{basis_symmetry, Automorphism, InvolutionKind};
use nilaut_core::iastruct::{
    classify_wrt_extremal, decode_triplet, ia_tau_split, psi_involution, random_l_member, PMClass,
};
use nilaut_core::involutions::{
    hua_reiner_canonicalize, matrix_product, order3_witness, plus_minus, rotation,
    sqrt_of_involution, three_conjugates_probe, x_conjugates, y_conjugates, ProbeResult,
};
use nilaut_core::nilcore::{pair_count, reduce_word, Element, GeneratorWord, Letter};
use nilaut_core::sampling::{
    random_automorphism, random_central, random_element, random_ia, random_involution,
    random_involution_type,
};
use nilaut_core::seeding::trial_rng;
use nilaut_core::{IntMatrix, Result};
use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 2024;

type Outcome = std::result::Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn within(elapsed: Duration, limit: Duration) -> std::result::Result<(), String> {
    check(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

fn rng(criterion: u32, index: u64) -> ChaCha8Rng {
    trial_rng(SEED, &format!("acceptance-{criterion}"), index)
}

fn c1_x_witness() -> Outcome {
    let start = Instant::now();
    let p = matrix_product(&x_conjugates());
    let sq = p.pow(2);
    let elapsed = start.elapsed();
    check(!sq.is_identity(), || format!("square is {sq}"))?;
    check(sq == IntMatrix::from_i64_rows(&[[5, -8], [-8, 13]]), || format!("square {sq}"))?;
    within(elapsed, Duration::from_millis(1))?;
    Ok(format!("product {p}, square {sq}, {elapsed:?}"))
}

fn c2_y_witness() -> Outcome {
    let start = Instant::now();
    let p = matrix_product(&y_conjugates());
    let sq = p.pow(2);
    let elapsed = start.elapsed();
    check(!sq.is_identity(), || format!("square is {sq}"))?;
    check(sq == IntMatrix::from_i64_rows(&[[1, 2], [2, 5]]), || format!("square {sq}"))?;
    within(elapsed, Duration::from_millis(1))?;
    Ok(format!("product {p}, square {sq}, {elapsed:?}"))
}

fn c3_rotation_and_sqrt() -> Outcome {
    let r = rotation();
    check(&r * &r == -&IntMatrix::identity(2), || "rotation squared".into())?;
    let f = IntMatrix::diagonal(&[1, -1, -1]);
    let h = lib(sqrt_of_involution(&f))?;
    check(&h * &h == f, || format!("H = {h}"))?;
    Ok(format!("H = {h}"))
}

fn c4_order3() -> Outcome {
    for n in 2..=8 {
        let (a, b) = lib(order3_witness(n))?;
        let p = &a * &b;
        check(!p.is_identity(), || format!("rank {n}: product is I"))?;
        check(!p.pow(2).is_identity(), || format!("rank {n}: square is I"))?;
        check(p.pow(3).is_identity(), || format!("rank {n}: cube is {}", p.pow(3)))?;
    }
    Ok("ranks 2-8".into())
}

fn random_symmetry(rng: &mut ChaCha8Rng, n: usize) -> Result<Automorphism> {
    let theta = Automorphism::symmetry_standard(n)?.compose(&random_ia(rng, n, 3))?;
    theta.conjugate_by(&random_automorphism(rng, n, 2))
}

fn c5_symms_basics_a() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for n in 2..=5 {
        for t in 0..200 {
            let mut rng = rng(5, (n * 1000 + t) as u64);
            let theta = lib(random_symmetry(&mut rng, n))?;
            let alpha = random_ia(&mut rng, n, 4);
            check(
                theta.classify_involution() == InvolutionKind::SymmetryModIA,
                || format!("{theta:?} not a symmetry mod IA"),
            )?;
            let conj = lib(Automorphism::compose_all(&[&theta, &alpha, &theta]))?;
            check(conj == alpha.invert(), || format!("theta {theta:?} alpha {alpha:?}"))?;
            check(lib(theta.compose(&alpha))?.pow(2).is_identity(), || {
                format!("(theta alpha)^2 for {theta:?} {alpha:?}")
            })?;
            count += 1;
        }
    }
    within(start.elapsed(), Duration::from_secs(5))?;
    Ok(format!("{count} pairs in {:?}", start.elapsed()))
}

fn c6_three_conjugates() -> Outcome {
    let mut count = 0;
    for n in 2..=5 {
        for k in 0..4 {
            let mut rng = rng(6, (n * 10 + k) as u64);
            let theta = lib(random_symmetry(&mut rng, n))?;
            let trials = 50;
            match lib(three_conjugates_probe(&theta, trials, rng.random()))? {
                ProbeResult::NoCounterexample { trials: t } => count += t,
                ProbeResult::Counterexample { product, .. } => {
                    return Err(format!("product {product:?} is not an involution"))
                }
            }
        }
    }
    check(count >= 200, || format!("only {count} triples"))?;
    Ok(format!("{count} triples"))
}

fn c7_hua_reiner() -> Outcome {
    let start = Instant::now();
    for n in 2..=5 {
        for t in 0..500 {
            let mut rng = rng(7, (n * 1000 + t) as u64);
            let ty = random_involution_type(&mut rng, n);
            let f = random_involution(&mut rng, ty);
            let form = lib(hua_reiner_canonicalize(&f))?;
            lib(form.validate(&f))?;
            let pm = lib(plus_minus(&f))?;
            let s = pm.defect();
            let expected = (pm.plus.len() - s, pm.minus.len() - s, s);
            check(form.block_type() == expected, || {
                format!("{f}: type {:?}, expected {expected:?}", form.block_type())
            })?;
            check(form.block_type() == ty, || format!("{f}: sampled type {ty:?}"))?;
        }
    }
    within(start.elapsed(), Duration::from_secs(10))?;
    Ok(format!("2000 involutions in {:?}", start.elapsed()))
}

fn random_word(rng: &mut ChaCha8Rng, n: usize) -> GeneratorWord {
    let len = rng.random_range(0..=12);
    let letters = (0..len)
        .map(|_| Letter::new(rng.random_range(0..n), rng.random_bool(0.5)))
        .collect();
    GeneratorWord::new(n, letters).unwrap()
}

fn c8_oracle_equivalence() -> Outcome {
    for t in 0..1000u64 {
        let mut rng = rng(8, t);
        let n = rng.random_range(1..=4);
        let (u, v) = (random_word(&mut rng, n), random_word(&mut rng, n));
        let joined: Vec<Letter> = u.letters().iter().chain(v.letters()).copied().collect();
        let joined = GeneratorWord::new(n, joined).unwrap();
        let product = lib(u.fold_mul().mul(&v.fold_mul()))?;
        check(product == reduce_word(&joined), || format!("{u:?} * {v:?}"))?;
        let inverse: Vec<Letter> = u
            .letters()
            .iter()
            .rev()
            .map(|l| Letter::new(l.generator, !l.inverse))
            .collect();
        let inverse = GeneratorWord::new(n, inverse).unwrap();
        check(u.fold_mul().inv() == reduce_word(&inverse), || format!("inverse of {u:?}"))?;
    }
    Ok("1000 word pairs".into())
}

fn brute_force_witness(sigma: &Automorphism) -> Option<Vec<BigInt>> {
    let n = sigma.rank();
    let x1 = Element::generator(n, 0).unwrap();
    let mut a = vec![-3i64; n];
    loop {
        let cand = Element::from_i64(&a, &vec![0; pair_count(n)]).unwrap();
        let first = cand.mul(&x1).unwrap().mul(&cand.inv()).unwrap();
        if first == *sigma.image(0) && Automorphism::conjugation(&cand) == *sigma {
            return Some(cand.abelian().to_vec());
        }
        let mut k = 0;
        loop {
            if k == n {
                return None;
            }
            if a[k] < 3 {
                a[k] += 1;
                break;
            }
            a[k] = -3;
            k += 1;
        }
    }
}

fn c9_inner_witness() -> Outcome {
    let mut inner = 0;
    for n in 2..=4 {
        for t in 0..300 {
            let mut rng = rng(9, (n * 1000 + t) as u64);
            let sigma = if t % 2 == 0 {
                let a: Vec<i64> = (0..n).map(|_| rng.random_range(-3..=3)).collect();
                let c = random_central(&mut rng, n, 3);
                let g = lib(Element::from_parts(
                    a.iter().map(|&x| BigInt::from(x)).collect(),
                    c.comm().to_vec(),
                ))?;
                Automorphism::conjugation(&g)
            } else {
                random_ia(&mut rng, n, 1)
            };
            let solved = lib(sigma.inner_witness())?.map(|w| w.abelian().to_vec());
            let brute = brute_force_witness(&sigma);
            check(solved == brute, || {
                format!("{sigma:?}: solver {solved:?}, search {brute:?}")
            })?;
            inner += solved.is_some() as usize;
        }
    }
    for t in 0..300u64 {
        let mut rng = rng(9, 100_000 + t);
        let n = rng.random_range(2..=5);
        let g = random_element(&mut rng, n, 5);
        let h = random_element(&mut rng, n, 5);
        let lhs = lib(Automorphism::conjugation(&g).compose(&Automorphism::conjugation(&h)))?;
        let rhs = Automorphism::conjugation(&lib(g.mul(&h))?);
        check(lhs == rhs, || format!("tau_g tau_h != tau_gh for {g}, {h}"))?;
    }
    Ok(format!("900 automorphisms ({inner} inner), 300 pairs"))
}

fn pm_oracle(alpha: &Automorphism, i: usize) -> PMClass {
    let phi = Automorphism::extremal_standard(alpha.rank(), i).unwrap();
    let conj = Automorphism::compose_all(&[&phi, alpha, &phi]).unwrap();
    if conj == *alpha {
        PMClass::Plus
    } else if conj == alpha.invert() {
        PMClass::Minus
    } else {
        PMClass::Neither
    }
}

fn plus_member(rng: &mut ChaCha8Rng, n: usize, i: usize) -> Automorphism {
    let mut offsets = random_ia(rng, n, 2).ia_offsets().unwrap();
    offsets[i] = vec![BigInt::zero(); pair_count(n)];
    let fixing = Automorphism::from_ia_offsets(n, offsets).unwrap();
    let plus = ia_tau_split(&fixing, i).unwrap().plus;
    // add an [x_i, .] offset to x_i itself
    let mut offsets = plus.ia_offsets().unwrap();
    for (idx, (a, b)) in nilaut_core::nilcore::pairs(n).enumerate() {
        if a == i || b == i {
            offsets[i][idx] = BigInt::from(rng.random_range(-2..=2));
        }
    }
    Automorphism::from_ia_offsets(n, offsets).unwrap()
}

fn c10_pms_of_an_ext() -> Outcome {
    let mut tally = [0usize; 3];
    for n in 2..=5 {
        for t in 0..300 {
            let mut rng = rng(10, (n * 1000 + t) as u64);
            let i = rng.random_range(0..n);
            let alpha = match t % 3 {
                0 => random_ia(&mut rng, n, 2),
                1 => random_l_member(&mut rng, n, i, 2, true),
                _ => plus_member(&mut rng, n, i),
            };
            let got = lib(classify_wrt_extremal(&alpha, i))?;
            let want = pm_oracle(&alpha, i);
            check(got == want, || format!("{alpha:?} at x{}: {got} vs {want}", i + 1))?;
            tally[got as usize] += 1;
        }
    }
    Ok(format!(
        "1200 elements: {} plus, {} minus, {} neither",
        tally[0], tally[1], tally[2]
    ))
}

fn c11_split() -> Outcome {
    for n in 3..=5 {
        for t in 0..300 {
            let mut rng = rng(11, (n * 1000 + t) as u64);
            let i = rng.random_range(0..n);
            let mut offsets = random_ia(&mut rng, n, 3).ia_offsets().unwrap();
            offsets[i] = vec![BigInt::zero(); pair_count(n)];
            let alpha = lib(Automorphism::from_ia_offsets(n, offsets))?;
            let s = lib(ia_tau_split(&alpha, i))?;
            check(lib(s.plus.compose(&s.minus))? == alpha, || format!("{alpha:?}"))?;
            check(lib(s.plus.commutes_with(&s.minus))?, || format!("{alpha:?}"))?;
        }
    }
    Ok("900 members".into())
}

fn c12_psi() -> Outcome {
    let (mut held, mut failed) = (0, 0);
    for n in 3..=5 {
        let psi = lib(psi_involution(n, 0, 1))?;
        check(psi.is_involution(), || "psi is not an involution".into())?;
        for t in 0..80 {
            let mut rng = rng(12, (n * 1000 + t) as u64);
            let with_c = t % 2 == 1;
            let mut lambda = random_l_member(&mut rng, n, 0, 3, with_c);
            if with_c && lambda.ia_offsets().unwrap()[0].iter().all(Zero::is_zero) {
                // force a nontrivial c(λ) on [x2, x3]
                let mut o = lambda.ia_offsets().unwrap();
                o[0][nilaut_core::nilcore::pair_index(n, 1, 2)] = BigInt::from(1);
                lambda = lib(Automorphism::from_ia_offsets(n, o))?;
            }
            let conj = lib(Automorphism::compose_all(&[&psi, &lambda, &psi]))?;
            let inverted = conj == lambda.invert();
            check(inverted != with_c, || format!("lambda {lambda:?}"))?;
            if with_c {
                failed += 1;
            } else {
                held += 1;
            }
        }
    }
    check(held >= 100 && failed >= 20, || format!("{held} held, {failed} failed"))?;
    Ok(format!("holds for {held} IA- members, fails for {failed} with c != 1"))
}

fn c13_triplets() -> Outcome {
    let mut count = 0;
    for n in 2..=5 {
        let taus: Vec<Automorphism> = (0..n)
            .map(|i| Automorphism::conjugation(&Element::generator(n, i).unwrap()))
            .collect();
        let theta_b = lib(basis_symmetry(&taus))?;
        check(theta_b == Automorphism::symmetry_standard(n).unwrap(), || {
            "standard basis symmetry".into()
        })?;
        for t in 0..25 {
            let mut rng = rng(13, (n * 1000 + t) as u64);
            let beta = random_ia(&mut rng, n, 3);
            let theta = lib(theta_b.compose(&beta.pow(2)))?;
            for tau in &taus {
                let r = lib(decode_triplet(tau, &theta, &taus))?;
                check(lib(theta.apply(&r))? == r.inv(), || format!("{theta:?} on {r}"))?;
                let mut perturbed = 0;
                while perturbed < 10 {
                    let c = random_central(&mut rng, n, 3);
                    if c.is_identity() {
                        continue;
                    }
                    let other = lib(r.mul(&c))?;
                    check(lib(theta.apply(&other))? != other.inv(), || {
                        format!("{theta:?} also inverts {other}")
                    })?;
                    perturbed += 1;
                }
            }
            count += 1;
        }
    }
    check(count >= 100, || format!("only {count} symmetries"))?;
    Ok(format!("{count} attached symmetries"))
}

fn c14_ias_are_def() -> Outcome {
    for t in 0..200u64 {
        let mut rng = rng(14, t);
        let n = rng.random_range(2..=6);
        let alpha = random_ia(&mut rng, n, 5);
        let theta = lib(Automorphism::symmetry_standard(n))?;
        let second = lib(theta.compose(&alpha))?;
        let minus = -&IntMatrix::identity(n);
        check(lib(theta.compose(&second))? == alpha, || format!("{alpha:?}"))?;
        check(theta.is_involution() && second.is_involution(), || format!("{alpha:?}"))?;
        check(
            theta.abelianize() == minus && second.abelianize() == minus,
            || format!("{alpha:?}"),
        )?;
    }
    Ok("200 IA automorphisms".into())
}

fn main() {
    let criteria: Vec<(u32, &str, fn() -> Outcome)> = vec![
        (1, "X-witness product is not an involution", c1_x_witness),
        (2, "Y-witness product is not an involution", c2_y_witness),
        (3, "rotation relation and square root", c3_rotation_and_sqrt),
        (4, "order-3 witness", c4_order3),
        (5, "symmetries invert IA elements", c5_symms_basics_a),
        (6, "three conjugates of a symmetry", c6_three_conjugates),
        (7, "canonical forms of involutions", c7_hua_reiner),
        (8, "normal form agrees with word rewriting", c8_oracle_equivalence),
        (9, "inner witness agrees with search", c9_inner_witness),
        (10, "plus/minus classification", c10_pms_of_an_ext),
        (11, "stabilizer split", c11_split),
        (12, "psi criterion", c12_psi),
        (13, "triplet decoding", c13_triplets),
        (14, "IA as a product of two involutions", c14_ias_are_def),
    ];
    let mut failures = Vec::new();
    for (id, title, f) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(f))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(detail) => println!("criterion {id:>2} PASS  {title}: {detail}"),
            Err(why) => {
                println!("criterion {id:>2} FAIL  {title}: {why}");
                failures.push(id);
            }
        }
    }
    if !failures.is_empty() {
        println!("failed criteria: {failures:?}");
        std::process::exit(1);
    }
    println!("all 14 criteria passed");
}
