//! Self-check suites: each invariant of the crate as a named, reportable check.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::genus::{mzv_expansion, q_genus, q_genus_oracle};
use crate::lyndon::{is_lyndon, lyndon_decompose, lyndon_factorize, words_of_weight};
use crate::numeric::{
    eval_mzv_terms, eval_qsym, eval_zeta_poly, gamma_recip_coeffs, mzv, mzv_with_budget, mzv_with_cutoff,
    validate_recip_gamma_series, BoundedValue, DEFAULT_CUTOFF_BUDGET,
};
use crate::partition::{partitions_of, Partition};
use crate::rational::rat;
use crate::sym::{e_to_m_matrix, expand_in_vars, mul_via_expansion, Basis, SymPoly};
use crate::words::{stuffle, stuffle_words, sym_to_words, QsymPoly, Word};
use crate::zeta::{reduce_symmetric_orbits, zeta_even, zeta_gen, zeta_hom, zeta_qsym, Generator, Notation, ZetaPoly};

/// Seed for the randomized checks; fixed so reports are reproducible.
pub const RANDOM_SEED: u64 = 0x5eed_2e7a;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub description: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    pub bound: Option<f64>,
}

impl CheckRecord {
    fn new(id: &str, description: &str, ok: bool, expected: impl Into<String>, actual: impl Into<String>) -> Self {
        CheckRecord {
            id: id.into(),
            description: description.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            expected: expected.into(),
            actual: actual.into(),
            bound: None,
        }
    }

    fn with_bound(mut self, bound: f64) -> Self {
        self.bound = Some(bound);
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<CheckRecord>,
    pub status: Status,
}

impl Report {
    fn new(suite: Suite, checks: Vec<CheckRecord>) -> Self {
        let status = if checks.iter().all(CheckRecord::passed) { Status::Pass } else { Status::Fail };
        Report { suite: suite.to_string(), checks, status }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = if c.passed() { "PASS" } else { "FAIL" };
            out.push_str(&format!("{tag}  {:<28} {}\n", c.id, c.description));
            if !c.passed() {
                out.push_str(&format!("      expected: {}\n      actual:   {}\n", c.expected, c.actual));
            }
            if let Some(b) = c.bound {
                out.push_str(&format!("      bound: {b:.3e}\n"));
            }
        }
        let n_pass = self.checks.iter().filter(|c| c.passed()).count();
        out.push_str(&format!(
            "suite {}: {}/{} passed, {}\n",
            self.suite,
            n_pass,
            self.checks.len(),
            if self.passed() { "PASS" } else { "FAIL" }
        ));
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Symbolic,
    Numeric,
    Words,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Suite::All),
            "symbolic" => Ok(Suite::Symbolic),
            "numeric" => Ok(Suite::Numeric),
            "words" => Ok(Suite::Words),
            _ => Err(Error::Parse(format!("unknown suite {s:?} (expected all, symbolic, numeric or words)"))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::All => "all",
            Suite::Symbolic => "symbolic",
            Suite::Numeric => "numeric",
            Suite::Words => "words",
        })
    }
}

pub fn run_suite(suite: Suite) -> Report {
    let checks = match suite {
        Suite::Symbolic => symbolic_checks(),
        Suite::Words => word_checks(),
        Suite::Numeric => numeric_checks(),
        Suite::All => {
            let mut v = symbolic_checks();
            v.extend(word_checks());
            v.extend(numeric_checks());
            v
        }
    };
    Report::new(suite, checks)
}

fn part(p: &[u32]) -> Partition {
    Partition::new(p.to_vec()).expect("positive parts")
}

fn show(p: &ZetaPoly) -> String {
    p.render(Notation::Unicode)
}

// ---------------------------------------------------------------------------
// symbolic

pub fn symbolic_checks() -> Vec<CheckRecord> {
    vec![
        check_q1(),
        check_leading_coefficients(),
        check_c1_squared(),
        check_c1_cubed(),
        check_m22(),
        check_m62_symbolic(),
        check_oracle_equivalence(),
        check_homogeneity_and_count(),
        check_matrix_symmetry(),
        check_basis_round_trip(),
        check_expansion_consistency(),
        check_m_products(),
        check_zeta_hom_multiplicative(),
        check_path_independence(),
    ]
}

fn check_q1() -> CheckRecord {
    let q = q_genus(1).expect("degree 1");
    let ok = q.coeffs().len() == 1 && q.coefficient(&part(&[1])) == ZetaPoly::gamma();
    CheckRecord::new("genus.q1", "Q_1 = γ·c1", ok, "Q_1 = γ·c1", q.to_string())
}

fn check_leading_coefficients() -> CheckRecord {
    let mut bad = Vec::new();
    for i in 2..=10 {
        let c = q_genus(i).expect("within budget").coefficient(&part(&[i as u32]));
        if c != zeta_gen(i as u32).expect("i >= 2") {
            bad.push(format!("i={i}: {}", show(&c)));
        }
    }
    CheckRecord::new(
        "genus.leading",
        "coeff(c_i, Q_i) = ζ(i) for 2 ≤ i ≤ 10",
        bad.is_empty(),
        "ζ(i)",
        if bad.is_empty() { "all equal".into() } else { bad.join("; ") },
    )
}

fn expected_c1_squared() -> ZetaPoly {
    (&ZetaPoly::gamma().pow(2) - &zeta_gen(2).expect("ζ(2)")).scale(&rat(1, 2))
}

fn expected_c1_cubed() -> ZetaPoly {
    let g = ZetaPoly::gamma();
    let z3 = ZetaPoly::generator(Generator::OddZeta(3)).scale(&rat(1, 3));
    let mid = (&g * &zeta_gen(2).expect("ζ(2)")).scale(&rat(1, 2));
    &(&z3 - &mid) + &g.pow(3).scale(&rat(1, 6))
}

fn check_c1_squared() -> CheckRecord {
    let c = q_genus(2).expect("degree 2").coefficient(&part(&[1, 1]));
    let e = expected_c1_squared();
    CheckRecord::new("genus.c1^2", "coeff(c_1², Q_2) = ½(γ² − ζ(2))", c == e, show(&e), show(&c))
}

fn check_c1_cubed() -> CheckRecord {
    let c = q_genus(3).expect("degree 3").coefficient(&part(&[1, 1, 1]));
    let e = expected_c1_cubed();
    CheckRecord::new("genus.c1^3", "coeff(c_1³, Q_3) = ⅓ζ(3) − ½γζ(2) + ⅙γ³", c == e, show(&e), show(&c))
}

fn check_m22() -> CheckRecord {
    let got = zeta_hom(&SymPoly::m(&[2, 2]));
    let e = zeta_even(4).expect("ζ(4)").scale(&rat(3, 4));
    CheckRecord::new("zeta.m22", "ζ(m_22) = ¾ζ(4)", got == e, show(&e), show(&got))
}

fn check_m62_symbolic() -> CheckRecord {
    let product = stuffle(&QsymPoly::word(Word::letter(2)), &QsymPoly::word(Word::letter(6)));
    let expected_words = QsymPoly::from_terms([
        (Word::new(vec![2, 6]).expect("word"), rat(1, 1)),
        (Word::new(vec![6, 2]).expect("word"), rat(1, 1)),
        (Word::letter(8), rat(1, 1)),
    ]);
    // ζ(6,2) + ζ(2,6) = ζ(2)ζ(6) − ζ(8)
    let reduced = &(&zeta_gen(2).expect("ζ(2)") * &zeta_gen(6).expect("ζ(6)")) - &zeta_gen(8).expect("ζ(8)");
    let target = zeta_even(8).expect("ζ(8)").scale(&rat(2, 3));
    let via_hom = zeta_hom(&SymPoly::m(&[6, 2]));
    let ok = product == expected_words && reduced == target && via_hom == target;
    CheckRecord::new(
        "zeta.m62",
        "z_2*z_6 = z_2z_6 + z_6z_2 + z_8, so ζ(6,2)+ζ(2,6) = ζ(2)ζ(6) − ζ(8) = ⅔ζ(8)",
        ok,
        format!("{expected_words}; {}", show(&target)),
        format!("{product}; {}; ζ(m_62) = {}", show(&reduced), show(&via_hom)),
    )
}

fn check_oracle_equivalence() -> CheckRecord {
    let bad: Vec<usize> = (1..=6)
        .filter(|&i| q_genus_oracle(i).ok() != q_genus(i).ok())
        .collect();
    CheckRecord::new(
        "genus.oracle",
        "Q_i from ζ(m_λ) equals direct expansion of Π 1/Γ(1+t_j), 1 ≤ i ≤ 6",
        bad.is_empty(),
        "equal for i = 1..6",
        if bad.is_empty() { "equal".into() } else { format!("differs at {bad:?}") },
    )
}

fn check_homogeneity_and_count() -> CheckRecord {
    let mut bad = Vec::new();
    for i in 1..=10 {
        let q = q_genus(i).expect("within budget");
        if !q.is_graded() {
            bad.push(format!("Q_{i} not homogeneous"));
        }
        if q.coeffs().len() != partitions_of(i).len() {
            bad.push(format!("Q_{i} has {} coefficients", q.coeffs().len()));
        }
    }
    CheckRecord::new(
        "genus.homogeneity",
        "Q_i coefficients are weight-i homogeneous and number p(i), i ≤ 10",
        bad.is_empty(),
        "homogeneous, p(i) terms",
        if bad.is_empty() { "ok".into() } else { bad.join("; ") },
    )
}

fn check_matrix_symmetry() -> CheckRecord {
    let bad: Vec<usize> = (1..=8)
        .filter(|&n| {
            let (_, m) = e_to_m_matrix(n);
            (0..m.len()).any(|i| (0..m.len()).any(|j| m[i][j] != m[j][i]))
        })
        .collect();
    CheckRecord::new(
        "sym.e_to_m_symmetric",
        "e-to-m transition matrix is symmetric, n ≤ 8",
        bad.is_empty(),
        "M = Mᵀ",
        if bad.is_empty() { "symmetric".into() } else { format!("asymmetric at {bad:?}") },
    )
}

fn check_basis_round_trip() -> CheckRecord {
    let mut bad = Vec::new();
    for d in 0..=8 {
        for lambda in partitions_of(d) {
            for a in Basis::ALL {
                let f = SymPoly::element(a, lambda.clone());
                for b in Basis::ALL {
                    if f.to_basis(b).to_basis(a) != f {
                        bad.push(format!("{}{lambda} via {}", a.tag(), b.tag()));
                    }
                }
            }
        }
    }
    CheckRecord::new(
        "sym.round_trip",
        "basis round trips are the identity, |λ| ≤ 8",
        bad.is_empty(),
        "identity",
        if bad.is_empty() { "identity".into() } else { bad.join("; ") },
    )
}

fn check_expansion_consistency() -> CheckRecord {
    let mut bad = Vec::new();
    for d in 1..=6 {
        for lambda in partitions_of(d) {
            for a in Basis::ALL {
                let f = SymPoly::element(a, lambda.clone());
                let base = expand_in_vars(&f, d).expect("n = |λ|");
                for b in Basis::ALL {
                    if expand_in_vars(&f.to_basis(b), d).expect("n = |λ|") != base {
                        bad.push(format!("{}{lambda} as {}", a.tag(), b.tag()));
                    }
                }
            }
        }
    }
    CheckRecord::new(
        "sym.expansion",
        "explicit expansions agree across bases, |λ| ≤ 6",
        bad.is_empty(),
        "identical expansions",
        if bad.is_empty() { "identical".into() } else { bad.join("; ") },
    )
}

fn check_m_products() -> CheckRecord {
    let mut bad = Vec::new();
    for d1 in 1..=3 {
        for d2 in d1..=(6 - d1).min(3) {
            for l1 in partitions_of(d1) {
                for l2 in partitions_of(d2) {
                    let f = SymPoly::element(Basis::Monomial, l1.clone());
                    let g = SymPoly::element(Basis::Monomial, l2.clone());
                    if f.mul(&g) != mul_via_expansion(&f, &g) {
                        bad.push(format!("m{l1}·m{l2}"));
                    }
                }
            }
        }
    }
    CheckRecord::new(
        "sym.m_products",
        "m-basis products via p basis equal expand-and-recollect, weight ≤ 6",
        bad.is_empty(),
        "equal",
        if bad.is_empty() { "equal".into() } else { bad.join("; ") },
    )
}

fn check_zeta_hom_multiplicative() -> CheckRecord {
    let mut bad = Vec::new();
    for d1 in 1..=5 {
        for d2 in 1..=(6 - d1) {
            for l1 in partitions_of(d1) {
                for l2 in partitions_of(d2) {
                    let f = SymPoly::element(Basis::Monomial, l1.clone());
                    let g = SymPoly::element(Basis::Monomial, l2.clone());
                    if zeta_hom(&f.mul(&g)) != &zeta_hom(&f) * &zeta_hom(&g) {
                        bad.push(format!("m{l1}·m{l2}"));
                    }
                }
            }
        }
    }
    CheckRecord::new(
        "zeta.multiplicative",
        "ζ(f·g) = ζ(f)ζ(g) on m-basis products of weight ≤ 6",
        bad.is_empty(),
        "equal",
        if bad.is_empty() { "equal".into() } else { bad.join("; ") },
    )
}

fn check_path_independence() -> CheckRecord {
    let mut bad = Vec::new();
    for d in 2..=8 {
        for lambda in partitions_of(d).into_iter().filter(|l| !l.has_part_one()) {
            let f = SymPoly::element(Basis::Monomial, lambda.clone());
            let via_words = zeta_qsym(&sym_to_words(&f));
            let reduced = if via_words.is_gamma_free() && via_words.zeta_part().is_empty() {
                reduce_symmetric_orbits(&via_words.mzv_terms())
            } else {
                None
            };
            if reduced.as_ref() != Some(&zeta_hom(&f)) {
                bad.push(format!("{lambda}"));
            }
        }
    }
    CheckRecord::new(
        "zeta.path_independence",
        "ζ(m_λ) via power sums equals ζ on words with stuffle-forced reductions, no 1s, |λ| ≤ 8",
        bad.is_empty(),
        "equal",
        if bad.is_empty() { "equal".into() } else { bad.join("; ") },
    )
}

// ---------------------------------------------------------------------------
// words

pub fn word_checks() -> Vec<CheckRecord> {
    vec![
        check_stuffle_exhaustive(),
        check_stuffle_random(),
        check_only_z1(),
        check_factorization_round_trip(),
        check_decomposition_round_trip(),
        check_embedding_homomorphism(),
    ]
}

pub(crate) fn words_up_to(max_weight: u32) -> Vec<Word> {
    (1..=max_weight).flat_map(words_of_weight).collect()
}

type Counts = HashMap<Vec<u32>, u64>;

fn stuffle_counts(a: &Counts, b: &[u32]) -> Counts {
    let mut out = Counts::new();
    for (w, n) in a {
        for (v, k) in stuffle_words(w, b) {
            *out.entry(v).or_insert(0) += n * k;
        }
    }
    out
}

/// Weight additivity and the depth window for one pair, plus commutativity.
fn pair_violations(a: &Word, b: &Word) -> Option<String> {
    let ab = stuffle_words(a.letters(), b.letters());
    if ab != stuffle_words(b.letters(), a.letters()) {
        return Some(format!("{a} * {b} not commutative"));
    }
    let w = a.weight() + b.weight();
    let (lo, hi) = (a.depth().max(b.depth()), a.depth() + b.depth());
    for v in ab.keys() {
        if v.iter().sum::<u32>() != w {
            return Some(format!("{a} * {b}: weight of {v:?}"));
        }
        if v.len() < lo || v.len() > hi {
            return Some(format!("{a} * {b}: depth of {v:?}"));
        }
    }
    None
}

fn triple_violation(a: &Word, b: &Word, c: &Word) -> Option<String> {
    let left = stuffle_counts(&stuffle_words(a.letters(), b.letters()), c.letters());
    let right = stuffle_counts(&stuffle_words(b.letters(), c.letters()), a.letters());
    (left != right).then(|| format!("({a} * {b}) * {c} ≠ {a} * ({b} * {c})"))
}

fn check_stuffle_exhaustive() -> CheckRecord {
    let words = words_up_to(4);
    let mut bad = Vec::new();
    for a in &words {
        for b in &words {
            bad.extend(pair_violations(a, b));
            for c in &words {
                bad.extend(triple_violation(a, b, c));
            }
        }
    }
    CheckRecord::new(
        "stuffle.exhaustive",
        "stuffle commutative, associative, weight-additive, depth-bounded on words of weight ≤ 4",
        bad.is_empty(),
        "no violations",
        if bad.is_empty() { format!("{} words checked", words.len()) } else { bad.join("; ") },
    )
}

pub(crate) fn random_word(rng: &mut ChaCha8Rng, max_weight: u32) -> Word {
    let weight = rng.gen_range(1..=max_weight);
    let mut letters = Vec::new();
    let mut left = weight;
    while left > 0 {
        let i = rng.gen_range(1..=left);
        letters.push(i);
        left -= i;
    }
    Word::new(letters).expect("positive letters")
}

fn check_stuffle_random() -> CheckRecord {
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    let mut bad = Vec::new();
    for _ in 0..50 {
        let (a, b, c) = (random_word(&mut rng, 7), random_word(&mut rng, 7), random_word(&mut rng, 7));
        bad.extend(pair_violations(&a, &b));
        bad.extend(triple_violation(&a, &b, &c));
    }
    CheckRecord::new(
        "stuffle.random",
        "stuffle laws on 50 random pairs and triples of weight ≤ 7",
        bad.is_empty(),
        "no violations",
        if bad.is_empty() { "ok".into() } else { bad.join("; ") },
    )
}

fn check_only_z1() -> CheckRecord {
    let mut bad = Vec::new();
    for weight in 1..=8 {
        for w in words_of_weight(weight) {
            if w.letters()[0] == 1 && is_lyndon(&w).unwrap_or(false) && w.letters() != [1] {
                bad.push(w.to_string());
            }
        }
    }
    let z1 = is_lyndon(&Word::letter(1)).unwrap_or(false);
    CheckRecord::new(
        "lyndon.only_z1",
        "z_1 is the only Lyndon word starting with z_1, weight ≤ 8",
        bad.is_empty() && z1,
        "only z_1",
        if bad.is_empty() { "only z_1".into() } else { bad.join(", ") },
    )
}

fn check_factorization_round_trip() -> CheckRecord {
    let mut bad = Vec::new();
    for w in words_up_to(7) {
        let f = lyndon_factorize(&w).expect("nonempty");
        let joined = f.iter().fold(Word::empty(), |acc, l| acc.concat(l));
        let lyndon = f.iter().all(|l| is_lyndon(l).unwrap_or(false));
        let decreasing = f.windows(2).all(|p| p[0] >= p[1]);
        if joined != w || !lyndon || !decreasing {
            bad.push(w.to_string());
        }
    }
    CheckRecord::new(
        "lyndon.factorization",
        "Lyndon factorization is decreasing and concatenates back, weight ≤ 7",
        bad.is_empty(),
        "round trip",
        if bad.is_empty() { "ok".into() } else { bad.join(", ") },
    )
}

fn check_decomposition_round_trip() -> CheckRecord {
    let mut bad = Vec::new();
    for w in words_up_to(6) {
        let q = QsymPoly::word(w.clone());
        if lyndon_decompose(&q).expand() != q {
            bad.push(w.to_string());
        }
    }
    CheckRecord::new(
        "lyndon.decomposition",
        "re-expanding the Lyndon decomposition returns the word, weight ≤ 6",
        bad.is_empty(),
        "round trip",
        if bad.is_empty() { "ok".into() } else { bad.join(", ") },
    )
}

fn check_embedding_homomorphism() -> CheckRecord {
    let mut bad = Vec::new();
    for d1 in 1..=5 {
        for d2 in 1..=(6 - d1) {
            for basis in Basis::ALL {
                for l1 in partitions_of(d1) {
                    for l2 in partitions_of(d2) {
                        let f = SymPoly::element(basis, l1.clone());
                        let g = SymPoly::element(basis, l2.clone());
                        if sym_to_words(&f.mul(&g)) != stuffle(&sym_to_words(&f), &sym_to_words(&g)) {
                            bad.push(format!("{}{l1}·{}{l2}", basis.tag(), basis.tag()));
                        }
                    }
                }
            }
        }
    }
    CheckRecord::new(
        "words.embedding",
        "Sym → H¹ takes products to stuffle products, weight ≤ 6",
        bad.is_empty(),
        "homomorphism",
        if bad.is_empty() { "ok".into() } else { bad.join("; ") },
    )
}

// ---------------------------------------------------------------------------
// numeric

pub fn numeric_checks() -> Vec<CheckRecord> {
    vec![
        check_mzv22_numeric(),
        check_mzv62_numeric(),
        check_eq2_numeric(),
        check_gamma_sample_points(),
        check_even_zeta_sums(),
        check_tail_soundness(),
        check_stuffle_numeric(),
        check_cy_numeric(),
    ]
}

fn numeric_record(id: &str, description: &str, lhs: Result<BoundedValue>, rhs: BoundedValue) -> CheckRecord {
    match lhs {
        Ok(l) => CheckRecord::new(id, description, l.agrees_with(&rhs), rhs.to_string(), l.to_string())
            .with_bound(l.bound + rhs.bound),
        Err(e) => CheckRecord::new(id, description, false, rhs.to_string(), format!("error: {e}")),
    }
}

fn check_mzv22_numeric() -> CheckRecord {
    let target = eval_zeta_poly(&zeta_even(4).expect("ζ(4)").scale(&rat(3, 4)));
    numeric_record("mzv.22", "ζ(2,2) vs π⁴/120 at tol 1e-6", mzv(&[2, 2], 1e-6), target)
}

fn check_mzv62_numeric() -> CheckRecord {
    let target = eval_zeta_poly(&zeta_even(8).expect("ζ(8)").scale(&rat(2, 3)));
    let sum = mzv(&[6, 2], 1e-6).and_then(|a| Ok(a + mzv(&[2, 6], 1e-6)?));
    numeric_record("mzv.62", "ζ(6,2)+ζ(2,6) vs ⅔ζ(8) at tol 1e-6", sum, target)
}

fn check_eq2_numeric() -> CheckRecord {
    let coeffs = match gamma_recip_coeffs(10) {
        Ok(c) => c,
        Err(e) => return CheckRecord::new("gamma.eq2", "ζ(e_i) = g_i", false, "coefficients", e.to_string()),
    };
    let mut bad = Vec::new();
    let mut worst: f64 = 0.0;
    for (i, g) in coeffs.iter().enumerate() {
        let symbolic = if i == 0 { BoundedValue::one() } else { eval_zeta_poly(&zeta_hom(&SymPoly::e(&[i as u32]))) };
        worst = worst.max(symbolic.bound + g.bound);
        if !symbolic.agrees_with(g) {
            bad.push(format!("i={i}: {symbolic} vs {g}"));
        }
    }
    CheckRecord::new(
        "gamma.eq2",
        "numeric ζ(e_i) equals the Taylor coefficient g_i of 1/Γ(1+z), i ≤ 10",
        bad.is_empty(),
        "agreement within bounds",
        if bad.is_empty() { "ok".into() } else { bad.join("; ") },
    )
    .with_bound(worst)
}

fn check_gamma_sample_points() -> CheckRecord {
    match validate_recip_gamma_series(12) {
        Ok(checks) => {
            let bad: Vec<String> = checks
                .iter()
                .filter(|c| !c.passes(1e-6))
                .map(|c| format!("z={}: |Δ|={:.2e}", c.z, c.difference))
                .collect();
            let worst = checks.iter().map(|c| c.difference).fold(0.0, f64::max);
            CheckRecord::new(
                "gamma.sample_points",
                "degree-12 Taylor polynomial matches the Weierstrass product within 1e-6",
                bad.is_empty(),
                "|Δ| ≤ 1e-6 and within bounds",
                if bad.is_empty() { format!("max |Δ| = {worst:.2e}") } else { bad.join("; ") },
            )
            .with_bound(1e-6)
        }
        Err(e) => CheckRecord::new("gamma.sample_points", "series vs product", false, "ok", e.to_string()),
    }
}

fn check_even_zeta_sums() -> CheckRecord {
    let mut bad = Vec::new();
    for two_k in (2..=12).step_by(2) {
        let symbolic = eval_zeta_poly(&zeta_even(two_k).expect("even"));
        match mzv(&[two_k], 1e-10) {
            Ok(direct) if direct.agrees_with(&symbolic) => {}
            Ok(direct) => bad.push(format!("ζ({two_k}): {symbolic} vs {direct}")),
            Err(e) => bad.push(e.to_string()),
        }
    }
    CheckRecord::new(
        "zeta.even_numeric",
        "Euler's normalization of ζ(2k) matches direct summation, 2k ≤ 12",
        bad.is_empty(),
        "agreement",
        if bad.is_empty() { "ok".into() } else { bad.join("; ") },
    )
}

fn check_tail_soundness() -> CheckRecord {
    let cases: [&[u32]; 7] = [&[2], &[3], &[2, 2], &[2, 1], &[6, 2], &[3, 1, 2], &[2, 2, 1]];
    let mut bad = Vec::new();
    for args in cases {
        let result = mzv_with_budget(args, 1e-6, DEFAULT_CUTOFF_BUDGET)
            .and_then(|a| Ok((a.clone(), mzv_with_cutoff(args, 2 * a.cutoff)?)));
        match result {
            Ok((a, b)) if (a.value.value - b.value.value).abs() < a.value.bound => {}
            Ok((a, b)) => bad.push(format!("{args:?}: N={} {} vs 2N {}", a.cutoff, a.value, b.value)),
            Err(e) => bad.push(e.to_string()),
        }
    }
    CheckRecord::new(
        "mzv.tail_soundness",
        "doubling the cutoff moves the value by less than the reported bound",
        bad.is_empty(),
        "within bound",
        if bad.is_empty() { "ok".into() } else { bad.join("; ") },
    )
}

pub(crate) fn random_convergent_word(rng: &mut ChaCha8Rng, max_weight: u32, max_depth: usize) -> Word {
    loop {
        let depth = rng.gen_range(1..=max_depth);
        let mut letters = vec![rng.gen_range(2..=max_weight)];
        for _ in 1..depth {
            letters.push(rng.gen_range(1..=max_weight));
        }
        if letters.iter().sum::<u32>() <= max_weight {
            return Word::new(letters).expect("positive letters");
        }
    }
}

/// Tolerance for each word in numeric stuffle checks.
pub const STUFFLE_NUMERIC_TOL: f64 = 1e-6;

fn check_stuffle_numeric() -> CheckRecord {
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    let mut bad = Vec::new();
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let a = random_convergent_word(&mut rng, 8, 2);
        let b = random_convergent_word(&mut rng, 8, 2);
        let product = stuffle(&QsymPoly::word(a.clone()), &QsymPoly::word(b.clone()));
        let lhs = eval_qsym(&product, STUFFLE_NUMERIC_TOL);
        let rhs = mzv(a.letters(), STUFFLE_NUMERIC_TOL)
            .and_then(|x| Ok(x * mzv(b.letters(), STUFFLE_NUMERIC_TOL)?));
        match (lhs, rhs) {
            (Ok(l), Ok(r)) => {
                worst = worst.max(l.bound + r.bound);
                if !l.agrees_with(&r) {
                    bad.push(format!("{a} * {b}: {l} vs {r}"));
                }
            }
            (Err(e), _) | (_, Err(e)) => bad.push(format!("{a} * {b}: {e}")),
        }
    }
    CheckRecord::new(
        "mzv.stuffle_numeric",
        "ζ(w1 * w2) = ζ(w1)ζ(w2) numerically, 20 random convergent pairs (weight ≤ 8, depth ≤ 2)",
        bad.is_empty(),
        "agreement within bounds",
        if bad.is_empty() { "ok".into() } else { bad.join("; ") },
    )
    .with_bound(worst)
}

fn check_cy_numeric() -> CheckRecord {
    let mut bad = Vec::new();
    for d in 2..=8 {
        for lambda in partitions_of(d).into_iter().filter(|l| !l.has_part_one()) {
            let symbolic = eval_zeta_poly(&zeta_hom(&SymPoly::element(Basis::Monomial, lambda.clone())));
            match mzv_expansion(&lambda).and_then(|t| eval_mzv_terms(&t, 1e-7)) {
                Ok(v) if v.agrees_with(&symbolic) => {}
                Ok(v) => bad.push(format!("{lambda}: {v} vs {symbolic}")),
                Err(e) => bad.push(format!("{lambda}: {e}")),
            }
        }
    }
    CheckRecord::new(
        "genus.cy_numeric",
        "Σ of multiple zeta values in ζ(m_λ) matches the ring value, no 1s, |λ| ≤ 8",
        bad.is_empty(),
        "agreement within bounds",
        if bad.is_empty() { "ok".into() } else { bad.join("; ") },
    )
}
