//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p gradalg --test acceptance -- --nocapture` to see
//! the report. Every comparison is exact; there are no tolerances.

use gradalg::conjectures::{check_genkos, koszul_regime, Sampling};
use gradalg::generic::{
    construct_anick, construct_lie_strongly_free, construct_strongly_free, corpus_entry, generic_estimate,
    sample_presentation,
};
use gradalg::series::{
    anick_polynomial, exp_op, froberg_series, log_op, quadratic_inverse, quadratic_inverse_positivity,
    vanishing_threshold,
};
use gradalg::{
    degree3_span_test, embed, hilbert_series, ideal_slices, koszul_dual, lie_series, strongly_free_test,
    AlgebraType, Flavor, Form, Matrix, Monomial, PowerSeries, Presentation, PrimeField,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SAMPLES: usize = 3;
const SEED: u64 = 0;

type Outcome = Result<String, String>;

/// Every series computed along the way, for the bound checks of criterion 9.
#[derive(Default)]
struct Seen {
    words: Vec<(AlgebraType, PowerSeries)>,
    commutative: Vec<(AlgebraType, PowerSeries)>,
}

impl Seen {
    fn series(&mut self, p: &Presentation, d: usize) -> PowerSeries {
        let s = hilbert_series(p, d).series;
        self.record(p, &s);
        s
    }

    fn record(&mut self, p: &Presentation, s: &PowerSeries) {
        let entry = (p.presentation_type(), s.clone());
        match p.flavor() {
            Flavor::Commutative => self.commutative.push(entry),
            _ => self.words.push(entry),
        }
    }
}

fn ints(s: &PowerSeries) -> Vec<i64> {
    s.to_i64s()
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

/// `[1/(1 - n z + r z^2)]` by its integer recurrence.
fn bracketed_quadratic_inverse(n: i64, r: i64, d: usize) -> Vec<i64> {
    let mut a = vec![1i64, n];
    while a.len() <= d {
        let k = a.len();
        a.push(n * a[k - 1] - r * a[k - 2]);
    }
    a.truncate(d + 1);
    if let Some(k) = a.iter().position(|&x| x <= 0) {
        a[k..].iter_mut().for_each(|x| *x = 0);
    }
    a
}

fn criterion_1(seen: &mut Seen) -> Outcome {
    let cases: [(&str, [i64; 5]); 4] = [
        ("exAt_i", [1, 2, 1, 0, 0]),
        ("exAt_ii", [1, 2, 1, 1, 0]),
        ("exAt_iii", [1, 3, 3, 0, 0]),
        ("exAt_iv", [1, 4, 5, 0, 0]),
    ];
    for (name, expected) in cases {
        let p = corpus_entry(name).map_err(|e| e.to_string())?;
        let got = ints(&seen.series(&p, 4));
        ensure(got == expected, format!("{name}: got {got:?}, expected {expected:?}"))?;
    }
    Ok("exAt_i..exAt_iv exact at D=4".into())
}

fn criterion_2(_: &mut Seen) -> Outcome {
    for (name, dual, rels) in [
        ("thm_ex_a", "thm_ex_a_dual", 4),
        ("thm_ex_b", "thm_ex_b_dual", 3),
        ("thm_ex_c", "thm_ex_c_dual", 3),
    ] {
        let p = corpus_entry(name).map_err(|e| e.to_string())?;
        let expected = corpus_entry(dual).map_err(|e| e.to_string())?;
        let got = koszul_dual(&p).map_err(|e| e.to_string())?;
        ensure(got.flavor() == expected.flavor(), format!("{name}: flavor {}", got.flavor()))?;
        ensure(got.relations().len() == rels, format!("{name}: {} relations", got.relations().len()))?;
        let (a, b) = (embed(&got).unwrap(), embed(&expected).unwrap());
        ensure(a == b, format!("{name}: dual subspace differs from {dual}"))?;
    }
    Ok("three duals equal as subspaces (rref)".into())
}

fn criterion_3(seen: &mut Seen) -> Outcome {
    // 1/(1 - 4z + 3z^2 - z^4) by its recurrence
    let mut oracle = vec![1i64];
    for k in 1..=4usize {
        let at = |j: usize| if j <= k { oracle[k - j] } else { 0 };
        oracle.push(4 * at(1) - 3 * at(2) + at(4));
    }
    let b = corpus_entry("thm_ex_b_dual").map_err(|e| e.to_string())?;
    let got = ints(&seen.series(&b, 4));
    ensure(got == oracle && oracle == [1, 4, 13, 40, 122], format!("B^!: got {got:?}, oracle {oracle:?}"))?;
    let a = corpus_entry("thm_ex_a_dual").map_err(|e| e.to_string())?;
    seen.series(&a.expand_lie().unwrap(), 4);
    let l = ints(&lie_series(&a, 4).map_err(|e| e.to_string())?);
    ensure(l == [0, 4, 6, 4, 7], format!("L(z) of A^!: got {l:?}"))?;
    Ok("B^! = 1,4,13,40,122; L = 4z+6z^2+4z^3+7z^4".into())
}

fn criterion_4(seen: &mut Seen) -> Outcome {
    let f = PrimeField::default();
    let mut cases = 0;
    for n in 1..=4usize {
        for r in 1..=n * n {
            let t = AlgebraType::quadratic(n, r);
            let rep = generic_estimate(Flavor::Noncommutative, &t, 6, SAMPLES, SEED, f).map_err(|e| e.to_string())?;
            for (i, s) in rep.per_sample_series.iter().enumerate() {
                let p = sample_presentation(Flavor::Noncommutative, &t, f, rep.seeds[i]).unwrap();
                seen.record(&p, s);
            }
            let expected = bracketed_quadratic_inverse(n as i64, r as i64, 6);
            let got = ints(&rep.estimate);
            ensure(got == expected, format!("(n,r)=({n},{r}): got {got:?}, expected {expected:?}"))?;
            ensure(rep.all_unanimous(), format!("(n,r)=({n},{r}): samples disagree"))?;
            ensure(
                ints(&quadratic_inverse(n, r, 6).bracket()) == expected,
                format!("(n,r)=({n},{r}): series module disagrees with the recurrence"),
            )?;
            cases += 1;
        }
    }
    Ok(format!("{cases} (n,r) pairs, n<=4, D=6, unanimous"))
}

fn criterion_5(seen: &mut Seen) -> Outcome {
    let mut checked = 0;
    for n in 2..=5 {
        let p = construct_strongly_free(n).map_err(|e| e.to_string())?;
        let v = strongly_free_test(&p, 8).unwrap();
        seen.record(&p, &hilbert_series(&p, 8).series);
        ensure(v.strongly_free, format!("n={n}: product {}", v.product))?;
        let r = p.relations().len();
        for drop in 0..r {
            let keep: Vec<usize> = (0..r).filter(|&i| i != drop).collect();
            let q = p.subsequence(&keep).unwrap();
            let v = strongly_free_test(&q, 8).unwrap();
            ensure(v.strongly_free, format!("n={n} without relation {drop}: product {}", v.product))?;
            checked += 1;
        }
    }
    Ok(format!("n=2..5 strongly free at D=8, {checked} deletions"))
}

fn criterion_6(_: &mut Seen) -> Outcome {
    let span = |p: &Presentation| degree3_span_test(p).map_err(|e| e.to_string());
    let s = span(&construct_anick(2, false).unwrap())?;
    ensure(s.independent && s.spanning && s.rank == 8, format!("n=2: {s:?}"))?;
    let s = span(&construct_anick(3, false).unwrap())?;
    ensure(s.independent && !s.spanning && s.rank == 24, format!("n=3, 4 forms: {s:?}"))?;
    let s = span(&construct_anick(3, true).unwrap())?;
    ensure(s.spanning, format!("n=3, 5 forms: {s:?}"))?;
    let f = PrimeField::default();
    for r in 1..=16 {
        for i in 0..SAMPLES as u64 {
            let p = sample_presentation(Flavor::Noncommutative, &AlgebraType::quadratic(4, r), f, SEED + i).unwrap();
            let s = span(&p)?;
            ensure(s.independent == (r <= 8), format!("n=4 r={r}: independent={}", s.independent))?;
            ensure(s.spanning == (r >= 8), format!("n=4 r={r}: spanning={}", s.spanning))?;
        }
    }
    Ok("Anick constructions and n=4 samples switch at r=8".into())
}

fn criterion_7(seen: &mut Seen) -> Outcome {
    let f = PrimeField::default();
    for r in 1..=6 {
        for i in 0..SAMPLES as u64 {
            let p = sample_presentation(Flavor::Lie, &AlgebraType::quadratic(3, r), f, SEED + i).unwrap();
            seen.series(&p, 3);
            let l = lie_series(&p, 3).map_err(|e| e.to_string())?;
            let l3 = ints(&l)[3];
            ensure((l3 == 0) == (r >= 3), format!("n=3 r={r} seed {i}: L_3 = {l3}"))?;
        }
    }
    for n in 2..=4 {
        let p = construct_lie_strongly_free(n).unwrap();
        let r = p.relations().len();
        seen.series(&p, 6);
        let l = lie_series(&p, 6).map_err(|e| e.to_string())?;
        let expected = log_op(&quadratic_inverse(n, r, 6)).unwrap();
        ensure(l == expected, format!("n={n}: L = {l}, expected {expected}"))?;
    }
    Ok("L_3 = 0 iff r >= 3 at n=3; Lie strongly free n=2..4 at D=6".into())
}

fn criterion_8(_: &mut Seen) -> Outcome {
    let mut cases = 0;
    for n in 2..=3 {
        for r in 1..=n * n {
            let v = check_genkos(n, r, Sampling::new(6, SAMPLES, SEED)).map_err(|e| e.to_string())?;
            let passes = v.sample_passes.clone().unwrap();
            let want = koszul_regime(n, r);
            ensure(
                passes.iter().all(|&p| p == want),
                format!("(n,r)=({n},{r}): passes {passes:?}, Koszul regime {want}"),
            )?;
            cases += 1;
        }
    }
    Ok(format!("{cases} (n,r) pairs agree with the Koszul regime"))
}

// ---- criterion 9 helpers ----

fn dense_rank(p: u64, mut rows: Vec<Vec<u64>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = modpow(rows[rank][c], p - 2, p);
        for v in rows[rank].iter_mut() {
            *v = *v * inv % p;
        }
        for i in 0..rows.len() {
            if i != rank && rows[i][c] != 0 {
                let factor = rows[i][c];
                for j in 0..cols {
                    rows[i][j] = (rows[i][j] + p - factor * rows[rank][j] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn modpow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

fn words(n: usize, len: usize) -> Vec<Vec<u16>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..n as u16).map(move |x| {
                    let mut v = w.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

/// `dim I_d` as the rank of all monomial multiples of the relations.
fn brute_force_dim(p: &Presentation, d: usize) -> usize {
    let n = p.n();
    let modulus = p.field().modulus();
    let comm = p.flavor() == Flavor::Commutative;
    let columns: Vec<Vec<u16>> = words(n, d)
        .into_iter()
        .filter(|w| !comm || w.windows(2).all(|x| x[0] <= x[1]))
        .collect();
    let col = |w: &[u16]| {
        let mut w = w.to_vec();
        if comm {
            w.sort_unstable();
        }
        columns.iter().position(|c| *c == w).unwrap()
    };
    let mut rows = Vec::new();
    for f in p.relations().iter().filter(|f| f.degree() <= d) {
        let rest = d - f.degree();
        for a in 0..=rest {
            if comm && a < rest {
                continue;
            }
            for left in words(n, a) {
                for right in words(n, rest - a) {
                    let mut row = vec![0u64; columns.len()];
                    for (m, c) in f.terms() {
                        let w: Vec<u16> = left.iter().chain(m.letters()).chain(&right).copied().collect();
                        let k = col(&w);
                        row[k] = (row[k] + c.value()) % modulus;
                    }
                    rows.push(row);
                }
            }
        }
    }
    dense_rank(modulus, rows)
}

fn random_presentation(rng: &mut ChaCha8Rng, flavor: Flavor, field: PrimeField) -> Presentation {
    let n = rng.gen_range(1..=3usize);
    let r = rng.gen_range(0..=3usize);
    let mut rels = Vec::new();
    for _ in 0..r {
        let d = rng.gen_range(2..=3usize);
        let mut form = Form::zero(d);
        for m in gradalg::presentation::enumerate_monomials(flavor, n, d) {
            if rng.gen_bool(0.4) {
                let c = field.from_canonical(rng.gen_range(1..field.modulus()));
                form.add_term(&field, m, c);
            }
        }
        rels.push(form);
    }
    Presentation::new(flavor, Presentation::default_names(n), rels, field).unwrap()
}

fn random_quadratic(rng: &mut ChaCha8Rng, field: PrimeField) -> Presentation {
    let n = rng.gen_range(1..=4usize);
    let flavor = [Flavor::Commutative, Flavor::Noncommutative, Flavor::Lie][rng.gen_range(0..3)];
    let mut rels = Vec::new();
    let max = if flavor == Flavor::Noncommutative { n * n } else { n * (n + 1) / 2 };
    for _ in 0..rng.gen_range(0..=max) {
        let mut form = Form::zero(2);
        for j in 0..n as u16 {
            for l in 0..n as u16 {
                let skip = match flavor {
                    Flavor::Noncommutative => false,
                    _ => l < j,
                };
                if skip || !rng.gen_bool(0.5) {
                    continue;
                }
                let c = field.from_canonical(rng.gen_range(1..field.modulus()));
                match flavor {
                    Flavor::Lie => {
                        form.add_term(&field, Monomial::word(vec![j, l]), c);
                        if j != l {
                            form.add_term(&field, Monomial::word(vec![l, j]), c);
                        }
                    }
                    _ => form.add_term(&field, Monomial::for_flavor(flavor, vec![j, l]), c),
                }
            }
        }
        rels.push(form);
    }
    Presentation::new(flavor, Presentation::default_names(n), rels, field).unwrap()
}

fn criterion_9(seen: &mut Seen) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    // linear algebra identities
    let f7 = PrimeField::new(7).unwrap();
    for i in 0..200 {
        let rows = rng.gen_range(0..8usize);
        let cols = rng.gen_range(1..8usize);
        let dense: Vec<Vec<i64>> = (0..rows)
            .map(|_| (0..cols).map(|_| if rng.gen_bool(0.5) { 0 } else { rng.gen_range(0..7) }).collect())
            .collect();
        let m = Matrix::from_dense(f7, cols, &dense);
        let k = m.nullspace();
        let oracle = dense_rank(7, dense.iter().map(|r| r.iter().map(|&x| x as u64).collect()).collect());
        ensure(m.rank() == oracle, format!("matrix {i}: rank {} vs oracle {oracle}", m.rank()))?;
        ensure(m.rank() + k.n_rows() == cols, format!("matrix {i}: rank-nullity"))?;
        ensure(k.rows().iter().all(|v| m.mul_vec(v).iter().all(|x| x.is_zero())), format!("matrix {i}: M K != 0"))?;
        ensure(m.rref().rref() == m.rref(), format!("matrix {i}: rref not idempotent"))?;
    }
    // ideal slices against the brute-force oracle
    let mut oracle_cases = 0;
    for i in 0..60 {
        let flavor = if i % 2 == 0 { Flavor::Noncommutative } else { Flavor::Commutative };
        let p = random_presentation(&mut rng, flavor, f7);
        let d = rng.gen_range(2..=5usize);
        let slices = ideal_slices(&p, d);
        let h = hilbert_series(&p, d);
        seen.record(&p, &h.series);
        for k in 0..=d {
            let brute = brute_force_dim(&p, k);
            ensure(
                slices[k].dim() == brute && h.slice_dims[k] == brute,
                format!("case {i} degree {k}: slices {} engine {} oracle {brute}", slices[k].dim(), h.slice_dims[k]),
            )?;
        }
        oracle_cases += 1;
    }
    // exp/log round trip
    for i in 0..50 {
        let coeffs: Vec<i64> = (0..=8).map(|k| if k == 0 { 0 } else { rng.gen_range(0..5) }).collect();
        let l = PowerSeries::from_ints(coeffs, 8);
        let back = log_op(&exp_op(&l).unwrap()).unwrap();
        ensure(back == l, format!("series {i}: Log(Exp(L)) = {back}, L = {l}"))?;
    }
    // Koszul involution
    let big = PrimeField::default();
    for i in 0..50 {
        let p = random_quadratic(&mut rng, big);
        let u = embed(&p).unwrap();
        let dual = koszul_dual(&p).unwrap();
        let u0 = embed(&dual).unwrap();
        let n2 = p.n() * p.n();
        ensure(u.dim() + u0.dim() == n2, format!("subspace {i}: dimensions {} + {}", u.dim(), u0.dim()))?;
        for a in u.basis.rows() {
            for b in u0.basis.rows() {
                ensure(gradalg::linalg::dot(&big, a, b).is_zero(), format!("subspace {i}: pairing nonzero"))?;
            }
        }
        let back = embed(&koszul_dual(&dual).unwrap()).unwrap();
        ensure(back == u, format!("subspace {i}: involution fails"))?;
    }
    // series bounds on everything computed
    let mut unbracketed_violations = Vec::new();
    for (t, b) in &seen.words {
        let d = b.trunc();
        let pt = anick_polynomial(t, d);
        let inv = pt.inverse().unwrap();
        ensure(b.mul(&pt).coeffwise_ge(&PowerSeries::one(d)).unwrap(), format!("type {t}: B p_t >= 1 fails for {b}"))?;
        ensure(b.lex_compare(&inv).unwrap().is_ge(), format!("type {t}: B >=lex 1/p_t fails for {b}"))?;
        ensure(b.coeffwise_ge(&inv.bracket()).unwrap(), format!("type {t}: B >= [1/p_t] fails for {b}"))?;
        if !b.coeffwise_ge(&inv).unwrap() {
            unbracketed_violations.push(format!("type {t}: B = {b}, 1/p_t = {inv}"));
        }
    }
    for (t, a) in &seen.commutative {
        let ft = froberg_series(t, a.trunc());
        ensure(a.lex_compare(&ft).unwrap().is_ge(), format!("type {t}: {a} <lex {ft}"))?;
    }
    if let Some(first) = unbracketed_violations.first() {
        return Err(format!(
            "coefficientwise B >= 1/p_t fails on {} of {} word series (first: {first}); \
             B p_t >= 1, B >=lex 1/p_t and B >= [1/p_t] hold on all of them, as do the other suites",
            unbracketed_violations.len(),
            seen.words.len()
        ));
    }
    Ok(format!(
        "200 matrices, {oracle_cases} oracle cases, 50 round trips, 50 involutions, bounds on {} word and {} commutative series",
        seen.words.len(),
        seen.commutative.len()
    ))
}

fn criterion_10(_: &mut Seen) -> Outcome {
    for n in 1..=6u64 {
        for r in 0..=n * n {
            let pos = quadratic_inverse_positivity(n, r, 60);
            ensure(pos.all_positive == (4 * r <= n * n), format!("(n,r)=({n},{r}): positivity {pos:?}"))?;
            if 4 * r > n * n {
                let k = vanishing_threshold(n, r).map_err(|e| e.to_string())?;
                ensure(
                    pos.first_nonpositive_degree == Some(k as usize),
                    format!("(n,r)=({n},{r}): first nonpositive {:?}, threshold {k}", pos.first_nonpositive_degree),
                )?;
            }
        }
    }
    Ok("n<=6, r<=n^2, D=60".into())
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn(&mut Seen) -> Outcome); 10] = [
        ("corpus series exactness", criterion_1),
        ("Koszul-dual exactness", criterion_2),
        ("dual series", criterion_3),
        ("generic quadratic words", criterion_4),
        ("strong freeness", criterion_5),
        ("degree-3 thresholds", criterion_6),
        ("Lie thresholds", criterion_7),
        ("Koszul regime sweep", criterion_8),
        ("property suites", criterion_9),
        ("positivity and vanishing", criterion_10),
    ];
    let mut seen = Seen::default();
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        let outcome = run(&mut seen);
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.1}s)", i + 1),
            Err(detail) => {
                println!("FAIL {:>2} {name}: {detail} ({secs:.1}s)", i + 1);
                failed.push(i + 1);
            }
        }
    }
    // Criterion 9 asks for the unbracketed coefficientwise bound B >= 1/p_t,
    // which is false in general: k<x>/(x^2) has B = 1 + z while 1/(1 - z + z^2)
    // has coefficient 1 at z^6. It is reported as FAIL above and must stay
    // the only failure.
    assert_eq!(failed, UNATTAINABLE, "failed criteria: {failed:?}");
}

const UNATTAINABLE: &[usize] = &[9];
