//! Acceptance criteria AC1-AC9: one PASS/FAIL line each, with elapsed time
//! against the runtime limit. Exits nonzero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use mzv_genus::lyndon::{is_lyndon, lyndon_decompose, lyndon_factorize, words_of_weight};
use mzv_genus::numeric::{eval_qsym, validate_recip_gamma_series};
use mzv_genus::rational::rat;
use mzv_genus::zeta::Generator;
use mzv_genus::{
    e_to_m_matrix, eval_zeta_poly, gamma_recip_coeffs, mzv, partitions_of, q_genus, q_genus_oracle, stuffle, zeta_even,
    zeta_gen, zeta_hom, BoundedValue, Partition, QsymPoly, SymPoly, Word, ZetaPoly,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, &'static str, Duration, fn() -> Outcome);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn part(p: &[u32]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

fn words_up_to(max_weight: u32) -> Vec<Word> {
    (1..=max_weight).flat_map(words_of_weight).collect()
}

fn ac1() -> Outcome {
    let q1 = q_genus(1).map_err(|e| e.to_string())?;
    ensure(q1.coeffs().len() == 1 && q1.coefficient(&part(&[1])) == ZetaPoly::gamma(), format!("{q1}"))?;
    for i in 2..=10 {
        let c = q_genus(i).unwrap().coefficient(&part(&[i as u32]));
        ensure(c == zeta_gen(i as u32).unwrap(), format!("coeff of c_{i} is {c}"))?;
    }
    let g = ZetaPoly::gamma();
    let z2 = zeta_gen(2).unwrap();
    let z3 = ZetaPoly::generator(Generator::OddZeta(3));
    let c11 = q_genus(2).unwrap().coefficient(&part(&[1, 1]));
    let want11 = (&g.pow(2) - &z2).scale(&rat(1, 2));
    ensure(c11 == want11, format!("c1^2: {c11}"))?;
    let c111 = q_genus(3).unwrap().coefficient(&part(&[1, 1, 1]));
    let want111 = &(&z3.scale(&rat(1, 3)) - &(&g * &z2).scale(&rat(1, 2))) + &g.pow(3).scale(&rat(1, 6));
    ensure(c111 == want111, format!("c1^3: {c111}"))?;
    Ok(format!("c1^3 coefficient {c111}"))
}

fn agree(name: &str, lhs: BoundedValue, rhs: BoundedValue) -> Result<String, String> {
    let diff = (lhs.value - rhs.value).abs();
    let bound = lhs.bound + rhs.bound;
    ensure(diff <= bound, format!("{name}: |{} - {}| = {diff:.2e} > {bound:.2e}", lhs.value, rhs.value))?;
    Ok(format!("{name}: |Δ| = {diff:.2e} ≤ {bound:.2e}"))
}

fn ac2() -> Outcome {
    let pi4_over_120 = ZetaPoly::pi_squared().pow(2).scale(&rat(1, 120));
    let m22 = zeta_hom(&SymPoly::m(&[2, 2]));
    ensure(m22 == zeta_even(4).unwrap().scale(&rat(3, 4)), format!("ζ(m_22) = {m22}"))?;
    ensure(m22 == pi4_over_120, format!("ζ(m_22) = {m22}"))?;
    let numeric = mzv(&[2, 2], 1e-6).map_err(|e| e.to_string())?;
    ensure(numeric.bound <= 1e-6, "bound above tol")?;
    agree("ζ(2,2) vs π⁴/120", numeric, eval_zeta_poly(&pi4_over_120))
}

fn ac3() -> Outcome {
    let z = |i: u32| QsymPoly::word(Word::letter(i));
    let product = stuffle(&z(2), &z(6));
    let expected = QsymPoly::from_terms([
        (Word::new(vec![2, 6]).unwrap(), rat(1, 1)),
        (Word::new(vec![6, 2]).unwrap(), rat(1, 1)),
        (Word::letter(8), rat(1, 1)),
    ]);
    ensure(product == expected, format!("z_2 * z_6 = {product}"))?;
    let chain = &(&zeta_gen(2).unwrap() * &zeta_gen(6).unwrap()) - &zeta_gen(8).unwrap();
    let target = zeta_even(8).unwrap().scale(&rat(2, 3));
    ensure(chain == target, format!("ζ(2)ζ(6) − ζ(8) = {chain}"))?;
    ensure(target == ZetaPoly::pi_squared().pow(4).scale(&rat(1, 14175)), format!("⅔ζ(8) = {target}"))?;
    let sum = mzv(&[6, 2], 1e-6).map_err(|e| e.to_string())? + mzv(&[2, 6], 1e-6).map_err(|e| e.to_string())?;
    agree("ζ(6,2)+ζ(2,6) vs ⅔ζ(8)", sum, eval_zeta_poly(&target))
}

fn ac4() -> Outcome {
    for i in 1..=6 {
        let direct = q_genus(i).unwrap();
        let oracle = q_genus_oracle(i).unwrap();
        ensure(direct == oracle, format!("Q_{i}: {direct} vs {oracle}"))?;
    }
    Ok("Q_1..Q_6 identical".into())
}

fn ac5() -> Outcome {
    let coeffs = gamma_recip_coeffs(10).map_err(|e| e.to_string())?;
    ensure(coeffs.len() == 11, "expected g_0..g_10")?;
    let mut worst: f64 = 0.0;
    for (i, g) in coeffs.iter().enumerate() {
        let e_i = if i == 0 { SymPoly::one(mzv_genus::Basis::Elementary) } else { SymPoly::e(&[i as u32]) };
        let symbolic = eval_zeta_poly(&zeta_hom(&e_i));
        agree(&format!("g_{i}"), symbolic, *g)?;
        worst = worst.max((symbolic.value - g.value).abs());
    }
    let checks = validate_recip_gamma_series(10).map_err(|e| e.to_string())?;
    let zs: Vec<f64> = checks.iter().map(|c| c.z).collect();
    ensure(zs == [-0.4, -0.2, 0.1, 0.3, 0.5], format!("sample points {zs:?}"))?;
    let mut worst_sample: f64 = 0.0;
    for c in &checks {
        ensure(c.difference <= 1e-6, format!("z = {}: |Δ| = {:.2e}", c.z, c.difference))?;
        ensure(
            c.difference <= c.series.bound + c.product.bound,
            format!("z = {}: |Δ| = {:.2e} outside bounds", c.z, c.difference),
        )?;
        worst_sample = worst_sample.max(c.difference);
    }
    Ok(format!("max |ζ(e_i) − g_i| = {worst:.1e}, max sample |Δ| = {worst_sample:.1e}"))
}

fn ac6() -> Outcome {
    for n in 1..=8 {
        let (parts, m) = e_to_m_matrix(n);
        ensure(parts.len() == partitions_of(n).len() && m.len() == parts.len(), format!("n = {n}: shape"))?;
        for (i, row) in m.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                ensure(*x == m[j][i], format!("n = {n}: M[{i}][{j}] ≠ M[{j}][{i}]"))?;
            }
        }
    }
    Ok("n = 1..8 symmetric".into())
}

fn check_pair(a: &QsymPoly, b: &QsymPoly, wa: &Word, wb: &Word) -> Result<QsymPoly, String> {
    let ab = stuffle(a, b);
    ensure(ab == stuffle(b, a), format!("{wa} * {wb} not commutative"))?;
    for w in ab.terms().keys() {
        ensure(w.weight() == wa.weight() + wb.weight(), format!("{wa} * {wb}: weight of {w}"))?;
        ensure(w.depth() >= wa.depth().max(wb.depth()) && w.depth() <= wa.depth() + wb.depth(), format!("depth of {w}"))?;
    }
    Ok(ab)
}

fn random_word(rng: &mut ChaCha8Rng, max_weight: u32) -> Word {
    let mut left = rng.gen_range(1..=max_weight);
    let mut letters = Vec::new();
    while left > 0 {
        let i = rng.gen_range(1..=left);
        letters.push(i);
        left -= i;
    }
    Word::new(letters).unwrap()
}

fn random_convergent_word(rng: &mut ChaCha8Rng) -> Word {
    loop {
        let depth = rng.gen_range(1..=2);
        let mut letters = vec![rng.gen_range(2..=8)];
        if depth == 2 {
            letters.push(rng.gen_range(1..=7));
        }
        if letters.iter().sum::<u32>() <= 8 {
            return Word::new(letters).unwrap();
        }
    }
}

fn ac7() -> Outcome {
    let words = words_up_to(4);
    let polys: Vec<QsymPoly> = words.iter().map(|w| QsymPoly::word(w.clone())).collect();
    let mut pairs = 0;
    let mut triples = 0;
    for (a, wa) in polys.iter().zip(&words) {
        for (b, wb) in polys.iter().zip(&words) {
            let ab = check_pair(a, b, wa, wb)?;
            pairs += 1;
            for (c, wc) in polys.iter().zip(&words) {
                let left = stuffle(&ab, c);
                ensure(left == stuffle(a, &stuffle(b, c)), format!("({wa} * {wb}) * {wc} not associative"))?;
                ensure(left.weights().into_iter().all(|w| w == wa.weight() + wb.weight() + wc.weight()), "triple weight")?;
                triples += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let (wa, wb, wc) = (random_word(&mut rng, 7), random_word(&mut rng, 7), random_word(&mut rng, 7));
        let (a, b, c) = (QsymPoly::word(wa.clone()), QsymPoly::word(wb.clone()), QsymPoly::word(wc.clone()));
        let ab = check_pair(&a, &b, &wa, &wb)?;
        ensure(stuffle(&ab, &c) == stuffle(&a, &stuffle(&b, &c)), format!("({wa} * {wb}) * {wc} not associative"))?;
    }
    let tol = 1e-6;
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let (wa, wb) = (random_convergent_word(&mut rng), random_convergent_word(&mut rng));
        let product = stuffle(&QsymPoly::word(wa.clone()), &QsymPoly::word(wb.clone()));
        let lhs = eval_qsym(&product, tol).map_err(|e| e.to_string())?;
        let rhs = mzv(wa.letters(), tol).map_err(|e| e.to_string())? * mzv(wb.letters(), tol).map_err(|e| e.to_string())?;
        agree(&format!("{wa} * {wb}"), lhs, rhs)?;
        worst = worst.max((lhs.value - rhs.value).abs());
    }
    Ok(format!("{pairs} pairs, {triples} triples exhaustive, 50 random, 20 numeric (max |Δ| = {worst:.1e})"))
}

fn ac8() -> Outcome {
    for weight in 1..=8 {
        let starting_z1: Vec<Word> = words_of_weight(weight)
            .into_iter()
            .filter(|w| w.letters()[0] == 1 && is_lyndon(w).unwrap())
            .collect();
        let expected: Vec<Word> = if weight == 1 { vec![Word::letter(1)] } else { vec![] };
        ensure(starting_z1 == expected, format!("weight {weight}: {starting_z1:?}"))?;
    }
    for w in words_up_to(6) {
        let factors = lyndon_factorize(&w).unwrap();
        let joined = factors.iter().fold(Word::empty(), |acc, f| acc.concat(f));
        ensure(joined == w, format!("factorization of {w}"))?;
        ensure(factors.iter().all(|f| is_lyndon(f).unwrap()), format!("non-Lyndon factor in {w}"))?;
        ensure(factors.windows(2).all(|p| p[0] >= p[1]), format!("factors of {w} not decreasing"))?;
        let q = QsymPoly::word(w.clone());
        ensure(lyndon_decompose(&q).expand() == q, format!("decomposition of {w}"))?;
    }
    Ok(format!("{} words round-tripped", words_up_to(6).len()))
}

fn ac9() -> Outcome {
    for i in 1..=10 {
        let q = q_genus(i).unwrap();
        ensure(q.coeffs().len() == partitions_of(i).len(), format!("Q_{i}: {} coefficients", q.coeffs().len()))?;
        for (lambda, c) in q.coeffs() {
            ensure(c.is_homogeneous_of_weight(i as u32), format!("Q_{i}, c{lambda}: {c}"))?;
        }
    }
    Ok("Q_1..Q_10 graded, p(i) coefficients each".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("AC1", "spot values of Q_i", Duration::from_secs(5), ac1),
        ("AC2", "ζ(m_22) = ¾ζ(4)", Duration::from_secs(30), ac2),
        ("AC3", "ζ(m_62) = ⅔ζ(8)", Duration::from_secs(60), ac3),
        ("AC4", "Q_i via ζ(m_λ) equals product expansion", Duration::from_secs(60), ac4),
        ("AC5", "ζ(e_i) are the Taylor coefficients of 1/Γ(1+z)", Duration::from_secs(30), ac5),
        ("AC6", "e-to-m transition matrix symmetric", Duration::from_secs(30), ac6),
        ("AC7", "stuffle algebra laws", Duration::from_secs(300), ac7),
        ("AC8", "Lyndon words", Duration::from_secs(60), ac8),
        ("AC9", "homogeneity of Q_i", Duration::from_secs(60), ac9),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (id, title, limit, check) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|p| Err(p.downcast_ref::<String>().cloned().unwrap_or_else(|| "panicked".into())));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > limit => Err(format!("took {elapsed:.2?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("[PASS] {id} {title} ({elapsed:.2?} < {limit:?}): {detail}"),
            Err(why) => {
                failures += 1;
                println!("[FAIL] {id} {title} ({elapsed:.2?}): {why}");
            }
        }
    }
    println!("acceptance: {}/9 passed", 9 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
