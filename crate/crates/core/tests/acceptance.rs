//! Acceptance suite. Prints one PASS/FAIL line per criterion followed by
//! indented details, and exits nonzero if any criterion fails.
//!
//! All comparisons are exact (rational coefficients, no tolerances).

use std::collections::{BTreeMap, HashMap};
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use bruhat_minors::closedform::{self, CVariant};
use bruhat_minors::cluster;
use bruhat_minors::factorize::{self, TorusPoint};
use bruhat_minors::laurent::{LaurentPoly, Variable};
use bruhat_minors::pathsum;
use bruhat_minors::repb::{self, Coeffs, Module, WedgeVector};
use bruhat_minors::rootdata::{CartanB, JIndex, MinorSpec, Word};
use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    details: Vec<String>,
}

impl Outcome {
    fn new() -> Outcome {
        Outcome { pass: true, details: Vec::new() }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.pass = false;
            if self.details.len() < 20 {
                self.details.push(msg());
            }
        }
    }

    fn note(&mut self, msg: impl Into<String>) {
        self.details.push(msg.into());
    }
}

fn p(s: &str) -> LaurentPoly {
    s.parse().expect("test polynomial parses")
}

/// Specs with `k >= 1`, rank in 2..=4 and `i_k = i_n`.
fn sweep_specs() -> Vec<MinorSpec> {
    let mut out = Vec::new();
    for r in 2..=4u32 {
        for n in 1..=(r * r) as usize {
            for k in 1..=n as i64 {
                let s = MinorSpec::new(Word { r, n }, k).unwrap();
                if s.d() == s.i_n() {
                    out.push(s);
                }
            }
        }
    }
    out
}

fn a1() -> Outcome {
    let mut o = Outcome::new();
    let spec = MinorSpec::new(Word::from_letters(3, &[1, 2, 3, 1, 2, 3, 1, 2]).unwrap(), 5).unwrap();
    let expected = p("1 * Y[3,2]^-1 + 1 * Y[2,2] * Y[3,1]^-1 * Y[2,3]^-2 + 2 * Y[1,3] * Y[3,1]^-1 * Y[2,3]^-1 \
         + 1 * Y[1,3]^2 * Y[3,1]^-1 * Y[2,2]^-1 + 1 * Y[1,2] * Y[3,1]^-1 * Y[2,1]^-1 + 1 * Y[1,1] * Y[3,1]^-1 \
         + 1 * Y[2,1] * Y[2,3]^-2 + 2 * Y[2,1] * Y[1,3] * Y[2,2]^-1 * Y[2,3]^-1 + 1 * Y[2,1] * Y[1,3]^2 * Y[2,2]^-2 \
         + 2 * Y[1,2] * Y[2,2]^-1 + 1 * Y[2,1] * Y[1,1] * Y[2,2]^-1 + 2 * Y[1,2] * Y[2,3]^-1 * Y[1,3]^-1 \
         + 1 * Y[1,2]^2 * Y[2,1]^-1 * Y[1,3]^-2 + 1 * Y[1,1] * Y[1,2] * Y[1,3]^-2");
    o.check(expected.len() == 14, || format!("expected polynomial has {} terms", expected.len()));
    let twos = expected.terms().filter(|(_, c)| **c == BigRational::from_integer(2.into())).count();
    o.check(twos == 4, || format!("{twos} coefficients equal 2"));
    let rep = repb::minor_l(&spec);
    let paths = pathsum::vector_path_sum(&spec).unwrap();
    let lemma = closedform::thm1_minor_with(&spec, CVariant::Lemma).unwrap();
    let theorem = closedform::thm1_minor_with(&spec, CVariant::Theorem).unwrap();
    o.check(rep == expected, || format!("representation: {rep}"));
    o.check(paths == expected, || format!("paths: {paths}"));
    o.check(lemma == expected, || format!("closed form (lemma clause): {lemma}"));
    o.check(theorem == expected, || format!("closed form (theorem clause): {theorem}"));
    o
}

fn a2() -> Outcome {
    let mut o = Outcome::new();
    let mut checked = 0;
    let mut theorem_diffs = Vec::new();
    for spec in sweep_specs().into_iter().filter(|s| !s.is_spin()) {
        checked += 1;
        let rep = repb::minor_l_vector(&spec);
        let paths = pathsum::vector_path_sum(&spec).unwrap();
        let lemma = closedform::thm1_minor_with(&spec, CVariant::Lemma).unwrap();
        let theorem = closedform::thm1_minor_with(&spec, CVariant::Theorem).unwrap();
        o.check(rep == paths, || format!("{spec}: path sum differs from the representation"));
        o.check(rep == lemma, || {
            let diff = &lemma - &rep;
            format!("{spec}: closed form (lemma clause) differs from the representation by {diff}")
        });
        if theorem != rep {
            theorem_diffs.push(spec.to_string());
        }
    }
    o.note(format!("{checked} specs checked"));
    if theorem_diffs.is_empty() {
        o.note("theorem clause agrees with the representation on every spec");
    } else {
        o.note(format!("theorem clause differs on: {}", theorem_diffs.join("; ")));
    }
    o
}

fn a3() -> Outcome {
    let mut o = Outcome::new();
    let mut checked = 0;
    for spec in sweep_specs().into_iter().filter(|s| s.is_spin()) {
        checked += 1;
        let rep = repb::minor_l_spin(&spec);
        let paths = pathsum::spin_path_sum(&spec).unwrap();
        let closed = closedform::thm2_minor(&spec).unwrap();
        o.check(rep == paths, || format!("{spec}: spin path sum {paths} vs {rep}"));
        o.check(rep == closed, || format!("{spec}: spin closed form {closed} vs {rep}"));
    }
    let golden = MinorSpec::new(Word { r: 2, n: 4 }, 2).unwrap();
    let want = p("1 * Y[2,2]^-1 + 1 * Y[1,2] * Y[2,1]^-1 + 1 * Y[1,1] * Y[1,2]^-1");
    o.check(repb::minor_l_spin(&golden) == want, || "rank-2 golden value".into());
    o.check(closedform::thm2_minor(&golden).unwrap() == want, || "rank-2 golden closed form".into());
    o.note(format!("{checked} specs checked"));
    o
}

fn a4() -> Outcome {
    let mut o = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut done = 0;
    while done < 50 {
        let r = rng.gen_range(2..=4u32);
        let n = rng.gen_range(1..(r * r) as usize);
        let k = rng.gen_range(1..=n as i64);
        let spec = MinorSpec::new(Word { r, n }, k).unwrap();
        let ext = MinorSpec::new(Word { r, n: n + 1 }, k).unwrap();
        if ext.word.letter(n as i64 + 1) == spec.d() {
            continue;
        }
        done += 1;
        let (s, l) = ext.word.grid()[n];
        let new_var = Variable::y(s, l).unwrap();
        let full = repb::minor_l(&ext);
        o.check(!full.contains_var(new_var), || format!("{ext}: depends on {new_var}"));
        let cut = repb::minor_l(&spec.truncated());
        o.check(full == cut, || format!("{ext}: differs from the truncated word"));
    }
    o.note(format!("{done} extensions"));
    o
}

fn a5() -> Outcome {
    let mut o = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut points = 0;
    for spec in sweep_specs() {
        let g = repb::minor_g(&spec);
        let scaled = &repb::torus_monomial(&bruhat_minors::rootdata::u_leq_weight(&spec)) * &repb::minor_l(&spec);
        o.check(g == scaled, || format!("{spec}: torus factor"));
        for _ in 0..10 {
            let pt = TorusPoint::random(&spec.word, &mut rng);
            let want = g.eval_at(&pt.bindings()).unwrap();
            let got = repb::minor_g_by_action(&spec, &pt.a_poly(), &pt.y_poly());
            o.check(got.as_constant() == Some(want.clone()), || format!("{spec}: action gives {got}, formula {want}"));
            points += 1;
        }
    }
    o.note(format!("{points} points"));
    o
}

fn a6() -> Outcome {
    let mut o = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut points = 0;
    for r in 2..=4u32 {
        for n in 1..=(r * r) as usize {
            let w = Word { r, n };
            for _ in 0..20 {
                let pt = TorusPoint::random(&w, &mut rng);
                let q = factorize::phi(&pt, &w).unwrap();
                o.check(factorize::psi(&q, &w).unwrap() == pt, || format!("r={r} n={n}: psi(phi(p)) != p"));
                o.check(factorize::operator_identity_holds(&pt, &w).unwrap(), || {
                    format!("r={r} n={n}: operator identity fails")
                });
                points += 1;
            }
        }
    }
    o.note(format!("{points} points"));
    o
}

fn basis(b: usize) -> Coeffs {
    Coeffs::from([(b, LaurentPoly::one())])
}

fn a7() -> Outcome {
    let mut o = Outcome::new();
    let c = p("1 * Y[1,1]");
    let t = p("1 * Y[2,2]");
    for r in 2..=4u32 {
        let cartan = CartanB::new(r).unwrap();
        for m in [Module::Vector(r), Module::Spin(r)] {
            for i in 1..=r {
                // <e_i u, w> = <u, f_i w>
                for a in 0..m.dim() {
                    for b in 0..m.dim() {
                        let lhs = repb::module_pair(m, &m.e(i).apply(&basis(a)), &basis(b));
                        let rhs = repb::module_pair(m, &basis(a), &m.f(i).apply(&basis(b)));
                        o.check(lhs == rhs, || format!("{m:?}: form not contravariant for i={i}, ({a},{b})"));
                    }
                }
                o.check(m.x_minus_exp(i, &c) == m.x_minus(i, &c), || format!("{m:?}: x_-{i} table"));
                // α_i^∨(c)^{-1} y_j(t) = y_j(c^{a_ij} t) α_i^∨(c)^{-1}
                let ainv = m.alpha_check(i, &c.inv().unwrap());
                for j in 1..=r {
                    let a_ij = cartan.entry(i, j) as i32;
                    let lhs = ainv.compose(&m.y(j, &t));
                    let rhs = m.y(j, &(&c.powi(a_ij).unwrap() * &t)).compose(&ainv);
                    o.check(lhs == rhs, || format!("{m:?}: commutation fails for ({i},{j})"));
                }
            }
            let pairs = (0..m.dim()).map(|b| m.form_weight(b)).collect::<Vec<_>>();
            let want_zero = matches!(m, Module::Vector(_));
            o.check(pairs.iter().filter(|&&w| w == 2).count() == usize::from(want_zero), || {
                format!("{m:?}: form weights {pairs:?}")
            });
        }
        o.check(repb::x_minus_exp_oracle(r, 1, &c) == repb::x_minus_vector(r, 1, &c), || format!("r={r}: oracle"));
        for n in 1..=(r * r) as usize {
            for k in -(r as i64)..=n as i64 {
                if k == 0 {
                    continue;
                }
                let spec = MinorSpec::new(Word { r, n }, k).unwrap();
                if spec.is_spin() {
                    let v = repb::spin_target_by_operators(&spec);
                    let want = basis(repb::spin_target(&spec));
                    o.check(v == want, || format!("{spec}: spin target"));
                } else {
                    let v = repb::u_target_by_operators(&spec);
                    let want = WedgeVector::basis(r, &repb::u_target(&spec), LaurentPoly::one());
                    o.check(v == want, || format!("{spec}: vector target"));
                }
            }
        }
    }
    o
}

fn a8() -> Outcome {
    let mut o = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for trial in 0..100 {
        let r = rng.gen_range(2..=4u32);
        let n = rng.gen_range(r as usize + 1..=(r * r) as usize);
        let w = Word { r, n };
        let mut b = cluster::build_bmatrix(&w);
        for _ in 0..rng.gen_range(0..5) {
            let k = b.cols[rng.gen_range(0..b.cols.len())];
            b = cluster::mutate_matrix(&b, k).unwrap();
        }
        let k = b.cols[rng.gen_range(0..b.cols.len())];
        let twice = cluster::mutate_matrix(&cluster::mutate_matrix(&b, k).unwrap(), k).unwrap();
        o.check(twice == b, || format!("trial {trial}: r={r} n={n} direction {k} is not an involution"));
        o.check(cluster::find_symmetrizer(&b.principal_part()).is_some(), || {
            format!("trial {trial}: mutated matrix lost its symmetrizer")
        });
    }
    for r in 2..=4u32 {
        for n in 1..=(r * r) as usize {
            let w = Word { r, n };
            let b = cluster::build_bmatrix(&w);
            let pp = b.principal_part();
            o.check(cluster::find_symmetrizer(&pp).is_some(), || format!("r={r} n={n}: no symmetrizer"));
            let d: Vec<i64> = b.cols.iter().map(|&k| if w.letter(k) < r { 2 } else { 1 }).collect();
            o.check(cluster::is_symmetrizer(&pp, &d), || format!("r={r} n={n}: (2,..,2,1) pattern fails"));
        }
    }
    let mut steps = 0;
    for r in 2..=3u32 {
        for n in 1..=(2 * r) as usize {
            let w = Word { r, n };
            let seed = cluster::initial_seed(&w);
            for k in cluster::e_set(&w) {
                let res = cluster::exchange_step(&seed, k);
                o.check(res.is_ok(), || format!("r={r} n={n} k={k}: {:?}", res.as_ref().err()));
                steps += 1;
            }
        }
    }
    o.note(format!("{steps} exchange relations divided exactly"));
    o
}

/// Paths of type A with `d` strictly increasing slots in `1..=r`, each
/// slot staying or moving up by one per step, from `(1..d)` to
/// `(m'+1..m'+d)` in `m` steps.
fn type_a_count(r: u32, m: u32, mp: u32, d: u32) -> u64 {
    let start: Vec<u32> = (1..=d).collect();
    let mut layer: HashMap<Vec<u32>, u64> = HashMap::from([(start, 1)]);
    for _ in 0..m {
        let mut next: HashMap<Vec<u32>, u64> = HashMap::new();
        for (t, c) in &layer {
            for mask in 0..(1u32 << d) {
                let u: Vec<u32> = t.iter().enumerate().map(|(i, &a)| a + ((mask >> i) & 1)).collect();
                if u.iter().all(|&a| a <= r) && u.windows(2).all(|w| w[0] < w[1]) {
                    *next.entry(u).or_default() += c;
                }
            }
        }
        layer = next;
    }
    let target: Vec<u32> = (mp + 1..=mp + d).collect();
    layer.get(&target).copied().unwrap_or(0)
}

fn a9() -> Outcome {
    let mut o = Outcome::new();
    let mut specs = 0;
    let mut paths_seen = 0;
    let mut shape_differs = 0;
    for spec in sweep_specs().into_iter().filter(|s| !s.is_spin()) {
        let t = spec.truncated();
        let (r, m, mp, d) = (t.r(), t.m(), t.m_prime(), t.d());
        if mp + d > r {
            continue;
        }
        specs += 1;
        let paths = pathsum::enumerate_vector_paths(&spec).unwrap();
        o.check(paths.len() as u64 == type_a_count(r, m, mp, d), || {
            format!("{spec}: {} paths, type A count {}", paths.len(), type_a_count(r, m, mp, d))
        });
        for path in &paths {
            paths_seen += 1;
            let plain = path.tuples.iter().flatten().all(|j| j.is_plain());
            o.check(plain, || format!("{spec}: path leaves the plain indices"));
            let unit = path.edge_labels.iter().all(|e| e.as_monomial().is_some_and(|(c, _)| c.is_one()));
            o.check(unit, || format!("{spec}: an edge carries a coefficient"));
            // the type A label Y_{l, a'-1} / Y_{l, a} slot by slot
            let mut a_label = LaurentPoly::one();
            for (s, w) in path.tuples.windows(2).enumerate() {
                let level = m - s as u32;
                for (up, lo) in w[0].iter().zip(&w[1]) {
                    let (JIndex::Plain(a), JIndex::Plain(b)) = (up, lo) else { continue };
                    a_label = &a_label * &(&LaurentPoly::y_pow(r, level, b - 1, 1) * &LaurentPoly::y_pow(r, level, *a, -1));
                }
            }
            let rests_at_r = path.tuples.windows(2).any(|w| {
                w[0].iter().zip(&w[1]).any(|(a, b)| *a == JIndex::Plain(r) && *b == JIndex::Plain(r))
            });
            if a_label != path.label {
                shape_differs += 1;
                o.check(rests_at_r, || format!("{spec}: label differs from type A away from r"));
            }
        }
    }
    o.note(format!("{specs} specs, {paths_seen} paths"));
    o.note(format!(
        "{shape_differs} paths have a type B label different from the type A shape (a slot resting at r gets Y[l,r-1]/Y[l,r]^2)"
    ));
    o
}

fn a10() -> Outcome {
    let mut o = Outcome::new();
    let golden = MinorSpec::new(Word { r: 3, n: 8 }, 5).unwrap();
    let np = pathsum::count_vector_paths(&golden).unwrap();
    let ns = closedform::enumerate_k_systems(&golden).unwrap().len();
    o.check(np == 15, || format!("golden path count {np}"));
    o.check(ns == 15, || format!("golden system count {ns}"));
    let mut counts = BTreeMap::new();
    for spec in sweep_specs() {
        let (np, ns) = if spec.is_spin() {
            (
                pathsum::enumerate_spin_paths(&spec).unwrap().len(),
                closedform::enumerate_spin_systems(&spec).unwrap().len(),
            )
        } else {
            (
                pathsum::count_vector_paths(&spec).unwrap() as usize,
                closedform::enumerate_k_systems(&spec).unwrap().len(),
            )
        };
        o.check(np == ns, || format!("{spec}: {np} paths, {ns} systems"));
        *counts.entry(spec.is_spin()).or_insert(0) += 1;
    }
    o.note(format!("{} vector and {} spin specs", counts.get(&false).unwrap_or(&0), counts.get(&true).unwrap_or(&0)));
    o
}

type Criterion = (&'static str, &'static str, fn() -> Outcome, Duration);

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("A1", "golden rank-3 example", a1, Duration::from_secs(1)),
        ("A2", "vector closed form sweep", a2, Duration::from_secs(120)),
        ("A3", "spin closed form sweep", a3, Duration::from_secs(120)),
        ("A4", "truncation of the word", a4, Duration::from_secs(60)),
        ("A5", "minors on the full cell", a5, Duration::from_secs(120)),
        ("A6", "torus change of variables", a6, Duration::from_secs(120)),
        ("A7", "representation sanity", a7, Duration::from_secs(60)),
        ("A8", "exchange matrices and mutation", a8, Duration::from_secs(60)),
        ("A9", "type A coincidence", a9, Duration::from_secs(60)),
        ("A10", "structural counts", a10, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (id, name, f, limit) in criteria {
        let start = Instant::now();
        let res = panic::catch_unwind(AssertUnwindSafe(f));
        let took = start.elapsed();
        let mut outcome = res.unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Outcome { pass: false, details: vec![format!("panicked: {msg}")] }
        });
        if took > limit {
            outcome.pass = false;
            outcome.details.push(format!("took {took:?}, limit {limit:?}"));
        }
        let verdict = if outcome.pass { "PASS" } else { "FAIL" };
        println!("{id:<4} {verdict}  {name} ({} ms)", took.as_millis());
        for d in &outcome.details {
            println!("       {d}");
        }
        if !outcome.pass {
            failed += 1;
        }
    }
    println!("{failed} criteria failed");
    if failed > 0 {
        std::process::exit(1);
    }
}
