//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test --test acceptance` (add `--release` for timings
//! close to the stated budgets). All comparisons are exact.

mod common;

use std::cmp::Ordering;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use common::*;
use rand::Rng;
use tensor_gsb::lift::{delta, delta_poly, eps_lift, tensor_lift, u_set};
use tensor_gsb::monoids::{CommMonomial, Letter, Word};
use tensor_gsb::oracle::{leading_divisibility, IdealSlice};
use tensor_gsb::orders::{CommOrder, MixedOrder, TensorOrder, WordOrder};
use tensor_gsb::par::Parallelism;
use tensor_gsb::poly::{Polynomial, Ring};
use tensor_gsb::rewrite::{
    check_gsb, complete, irr_up_to, minimalize, normal_form, reduce, word_problem, BasisState,
    CompletionConfig, Status,
};
use tensor_gsb::scalar::Field;
use tensor_gsb::universe::{CommUniverse, FreeUniverse, MixedUniverse, TensorUniverse, Universe};

const PROPERTY_CASES: usize = 10_000;
const DIAMOND_CASES: usize = 1_000;
const MEMBERS_PER_BASIS: usize = 500;

/// Bases collected by criteria 1-5 for the cross-cutting checks, each with
/// the degree up to which it is trusted.
#[derive(Default)]
struct Collected {
    free: Vec<(String, BasisState<FreeUniverse>, usize)>,
    comm: Vec<(String, BasisState<CommUniverse>, usize)>,
    tensor: Vec<(String, BasisState<TensorUniverse>, usize)>,
    mixed: Vec<(String, BasisState<MixedUniverse>, usize)>,
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn irr_counts<U: Universe>(u: &U, basis: &[Polynomial<U>], d: usize) -> Vec<usize> {
    irr_up_to(u, basis, d).iter().map(Vec::len).collect()
}

fn criterion_1(col: &mut Collected) -> Outcome {
    let start = Instant::now();
    let cfg = CompletionConfig {
        max_degree: 8,
        param_bound: 2,
        ..Default::default()
    };
    for nx in 1..=3 {
        for ny in 1..=3 {
            let r = union_ring(nx, ny);
            let t = polys(&r, &t_relations(nx, ny));
            let st = complete(&r, &t, cfg).unwrap();
            if st.stats.additions != 0 || !check_gsb(&r, &t, cfg).unwrap().failures.is_empty() {
                return outcome(false, format!("T not closed for |X|={nx} |Y|={ny}"));
            }
            let got = irr_counts(&r.universe, &st.elements, 8);
            let want: Vec<usize> = (0..=8).map(|d| tensor_count(nx, ny, d)).collect();
            if got != want {
                return outcome(false, format!("|X|={nx} |Y|={ny}: irr {got:?} != {want:?}"));
            }
            col.free.push((format!("T({nx},{ny})"), st, 8));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(
        secs < 5.0,
        format!("9 alphabets, zero additions, irr = closed form to d=8; {secs:.2}s (limit 5s)"),
    )
}

/// A saturated free basis on `n` letters from 1-2 random relations of degree ≤ 3.
fn random_saturated_free(
    rng: &mut impl Rng,
    r: &Arc<Ring<FreeUniverse>>,
) -> Option<BasisState<FreeUniverse>> {
    let k = rng.gen_range(1..=2);
    let inputs: Vec<_> = (0..k)
        .map(|_| {
            let hi = rng.gen_range(2..=3);
            random_relation(rng, r, 0, hi, 3)
        })
        .collect();
    let cfg = CompletionConfig {
        max_degree: 12,
        budget: 20_000,
        ..Default::default()
    };
    match complete(r, &inputs, cfg) {
        Ok(st) if st.status == Status::Saturated && st.elements.len() <= 12 => Some(st),
        _ => None,
    }
}

fn criterion_2(col: &mut Collected) -> Outcome {
    let start = Instant::now();
    let mut rng = rng(2);
    let cfg = CompletionConfig::with_degree(7);
    let (mut done, mut resampled) = (0, 0);
    while done < 20 {
        let nx = rng.gen_range(1..=2);
        let ny = rng.gen_range(1..=2);
        let (rx, ry) = (
            free_ring(nx, Field::Rational),
            free_y_ring(ny, Field::Rational),
        );
        let (Some(s1), Some(s2)) = (
            random_saturated_free(&mut rng, &rx),
            random_saturated_free(&mut rng, &ry),
        ) else {
            resampled += 1;
            continue;
        };
        let rt = tensor_ring(nx, ny, TensorOrder::default());
        let mut union: Vec<String> = s1.elements.iter().map(|f| f.to_string()).collect();
        union.extend(s2.elements.iter().map(|f| f.to_string()));
        let s = polys(&rt, &union);
        let st = check_gsb(&rt, &s, cfg).unwrap();
        if !st.failures.is_empty() {
            return outcome(
                false,
                format!("pair {done}: {:?} not closed: {}", union, st.failures[0]),
            );
        }
        let added = complete(&rt, &s, cfg).unwrap().stats.additions;
        if added != 0 {
            return outcome(false, format!("pair {done}: completion added {added}"));
        }
        col.tensor.push((format!("S1+S2 pair {done}"), st, 7));
        done += 1;
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(
        secs < 60.0,
        format!("20 pairs closed at D=7 with zero additions ({resampled} unsaturated draws resampled); {secs:.2}s (limit 60s)"),
    )
}

fn criterion_3(col: &mut Collected) -> Outcome {
    let cfg = CompletionConfig {
        max_degree: 6,
        param_bound: 6,
        ..Default::default()
    };
    for nx in 1..=3 {
        for ny in 1..=2 {
            let want: Vec<usize> = (0..=6).map(|d| mixed_count(nx, ny, d)).collect();
            // in k<X ∪ Y>
            let r = union_ring(nx, ny);
            let mut texts = t_relations(nx, ny);
            texts.extend(commutator_relations(nx));
            let s = polys(&r, &texts);
            let st = check_gsb(&r, &s, cfg).unwrap();
            if !st.failures.is_empty() {
                return outcome(false, format!("|X|={nx} |Y|={ny} free: {}", st.failures[0]));
            }
            let irr = irr_counts(&r.universe, &s, 6);
            let dims =
                IdealSlice::new(&s, &r.universe, r.field, 6, Parallelism::Parallel).quotient_dims();
            if irr != want || dims != want {
                return outcome(
                    false,
                    format!("|X|={nx} |Y|={ny} free: irr {irr:?} oracle {dims:?} want {want:?}"),
                );
            }
            col.free
                .push((format!("commuting X free ({nx},{ny})"), st, 6));
            // in k<X> ⊗ k<Y>
            let rt = tensor_ring(nx, ny, TensorOrder::default());
            let s = polys(&rt, &commutator_relations(nx));
            let st = check_gsb(&rt, &s, cfg).unwrap();
            if !st.failures.is_empty() {
                return outcome(
                    false,
                    format!("|X|={nx} |Y|={ny} tensor: {}", st.failures[0]),
                );
            }
            let irr = irr_counts(&rt.universe, &s, 6);
            let dims = IdealSlice::new(&s, &rt.universe, rt.field, 6, Parallelism::Parallel)
                .quotient_dims();
            if irr != want || dims != want {
                return outcome(
                    false,
                    format!("|X|={nx} |Y|={ny} tensor: irr {irr:?} oracle {dims:?} want {want:?}"),
                );
            }
            col.tensor
                .push((format!("commuting X tensor ({nx},{ny})"), st, 6));
        }
    }
    outcome(
        true,
        "6 alphabet pairs, free and tensor forms, irr = oracle = closed form to d=6",
    )
}

fn criterion_4(col: &mut Collected) -> Outcome {
    let mut rng = rng(4);
    let d = 6;
    let (mut done, mut resampled, mut lifted, mut interior) = (0, 0, 0, 0);
    while done < 10 {
        let n = rng.gen_range(2..=3);
        let r = comm_ring(n);
        let k = rng.gen_range(1..=3);
        let inputs: Vec<_> = (0..k)
            .map(|_| {
                let hi = rng.gen_range(2..=3);
                random_relation(&mut rng, &r, 0, hi, 3)
            })
            .collect();
        let cfg = CompletionConfig {
            max_degree: 16,
            budget: 50_000,
            ..Default::default()
        };
        let st = match complete(&r, &inputs, cfg) {
            Ok(st) if st.status == Status::Saturated => st,
            _ => {
                resampled += 1;
                continue;
            }
        };
        let s = minimalize(&st.elements);
        let lift = match eps_lift(&r, &s, CompletionConfig::with_degree(d)) {
            Ok(l) => l,
            Err(e) => return outcome(false, format!("basis {done}: {e}")),
        };
        let chk = check_gsb(&lift.ring, &lift.elements, CompletionConfig::with_degree(d)).unwrap();
        if !chk.failures.is_empty() {
            return outcome(
                false,
                format!("basis {done}: lift not closed: {}", chk.failures[0]),
            );
        }
        let want = irr_counts(&r.universe, &s, d);
        let dims = IdealSlice::new(
            &lift.elements,
            &lift.ring.universe,
            lift.ring.field,
            d,
            Parallelism::Parallel,
        )
        .quotient_dims();
        let irr = irr_counts(&lift.ring.universe, &lift.elements, d);
        if dims != want || irr != want {
            return outcome(
                false,
                format!("basis {done}: comm {want:?} lifted irr {irr:?} oracle {dims:?}"),
            );
        }
        lifted += lift.lifted;
        interior += usize::from(lift.warning.is_some());
        col.comm.push((format!("comm basis {done}"), st, 8));
        col.free.push((format!("eps lift {done}"), chk, d));
        done += 1;
    }
    outcome(true, format!(
            "10 minimal comm bases lifted ({lifted} lifted relations, {interior} with nonempty U), closed at D=6, oracle = standard monomials ({resampled} resampled)"
        ))
}

/// Homogeneous relation in `k[X]⊗k<Y>` whose lead has a nonempty `Y` part.
fn random_mixed_relation(
    rng: &mut impl Rng,
    r: &Arc<Ring<MixedUniverse>>,
) -> Polynomial<MixedUniverse> {
    loop {
        let d = rng.gen_range(2..=3);
        let f = random_relation(rng, r, d, d, 3);
        if !f.lead_mono().unwrap().y.is_empty() {
            return f;
        }
    }
}

fn criterion_5(col: &mut Collected) -> Outcome {
    let mut rng = rng(5);
    let d = 5;
    let cfg = CompletionConfig {
        max_degree: d,
        param_bound: 2,
        budget: 200_000,
        ..Default::default()
    };
    let (mut c3_families, mut additions, mut lifted) = (0, 0, 0);
    for done in 0..10 {
        let nx = rng.gen_range(2..=3);
        let ny = rng.gen_range(1..=2);
        let r = mixed_ring(nx, ny);
        let k = rng.gen_range(1..=2);
        let inputs: Vec<_> = (0..k)
            .map(|_| random_mixed_relation(&mut rng, &r))
            .collect();
        let st = match complete(&r, &inputs, cfg) {
            Ok(st) => st,
            Err(e) => return outcome(false, format!("basis {done}: {e}")),
        };
        c3_families += st.stats.param_truncated;
        additions += st.stats.additions;
        let s = minimalize(&st.elements);
        let lift = match tensor_lift(&r, &s, cfg) {
            Ok(l) => l,
            Err(e) => return outcome(false, format!("basis {done}: {e}")),
        };
        let chk = check_gsb(&lift.ring, &lift.elements, cfg).unwrap();
        if !chk.failures.is_empty() {
            return outcome(
                false,
                format!("basis {done}: lift not closed: {}", chk.failures[0]),
            );
        }
        let want = irr_counts(&r.universe, &s, d);
        let mixed_dims = IdealSlice::new(&inputs, &r.universe, r.field, d, Parallelism::Parallel)
            .quotient_dims();
        let dims = IdealSlice::new(
            &lift.elements,
            &lift.ring.universe,
            lift.ring.field,
            d,
            Parallelism::Parallel,
        )
        .quotient_dims();
        let irr = irr_counts(&lift.ring.universe, &lift.elements, d);
        if dims != want || irr != want || mixed_dims != want {
            return outcome(
                false,
                format!("basis {done}: mixed irr {want:?} mixed oracle {mixed_dims:?} lifted irr {irr:?} lifted oracle {dims:?}"),
            );
        }
        lifted += lift.lifted;
        col.mixed.push((format!("mixed basis {done}"), st, d));
        col.tensor.push((format!("tensor lift {done}"), chk, d));
    }
    outcome(true, format!(
            "10 mixed bases (P=2, {c3_families} parametric C3 families, {additions} completion additions, {lifted} lifted relations), lifts closed at D=5, irr = oracle"
        ))
}

fn members_and_agreement<U: Universe>(
    rng: &mut impl Rng,
    name: &str,
    st: &BasisState<U>,
    d: usize,
) -> Result<usize, String> {
    let r = &st.ring;
    let s = &st.elements;
    for _ in 0..MEMBERS_PER_BASIS {
        let Some(f) = random_member(rng, r, s, d) else {
            break;
        };
        if f.is_zero() {
            continue;
        }
        if !normal_form(&f, s).is_zero() {
            return Err(format!("{name}: member {f} does not reduce to 0"));
        }
        if !leading_divisibility(&f, s).unwrap() {
            return Err(format!("{name}: lead of member {f} not divisible"));
        }
    }
    let u = &r.universe;
    let slice = IdealSlice::new(s, u, r.field, 3, Parallelism::Parallel);
    let monos: Vec<U::Mono> = (0..=3).flat_map(|k| u.monomials_of_degree(k)).collect();
    let mut compared = 0;
    let mut query = |f: Polynomial<U>| -> Result<(), String> {
        compared += 1;
        let a = slice.member(&f).unwrap();
        let b = word_problem(&f, st).map_err(|e| e.to_string())?;
        if a != b {
            return Err(format!("{name}: oracle {a} vs word problem {b} on {f}"));
        }
        Ok(())
    };
    for (i, m) in monos.iter().enumerate() {
        query(Polynomial::monomial(r, m.clone(), r.field.one()))?;
        for n in &monos[i + 1..] {
            let f = Polynomial::from_terms(
                r,
                [(m.clone(), r.field.one()), (n.clone(), r.field.one().neg())],
            );
            query(f)?;
        }
    }
    Ok(compared)
}

fn criterion_6(col: &Collected) -> Outcome {
    let mut rng = rng(6);
    let mut bases = 0;
    let mut compared = 0;
    macro_rules! each {
        ($list:expr) => {
            for (name, st, d) in &$list {
                match members_and_agreement(&mut rng, name, st, *d) {
                    Ok(n) => compared += n,
                    Err(e) => return outcome(false, e),
                }
                bases += 1;
            }
        };
    }
    each!(col.free);
    each!(col.comm);
    each!(col.tensor);
    each!(col.mixed);
    outcome(
        true,
        format!("{bases} bases: {MEMBERS_PER_BASIS} members each reduce to 0 with divisible leads; {compared} oracle/word-problem queries agree"),
    )
}

fn order_axioms<U: Universe>(rng: &mut impl Rng, u: &U, cases: usize) -> Result<(), String> {
    for _ in 0..cases {
        let mut ms: Vec<U::Mono> = Vec::with_capacity(5);
        for _ in 0..5 {
            let d = rng.gen_range(0..=4);
            ms.push(random_mono(rng, u, d));
        }
        let [a, b, c, l, r]: [U::Mono; 5] = ms.try_into().unwrap();
        let ab = u.cmp(&a, &b);
        if ab != u.cmp(&b, &a).reverse() || (ab == Ordering::Equal) != (a == b) {
            return Err(format!("{u:?}: antisymmetry fails on {a:?}, {b:?}"));
        }
        if ab == Ordering::Less
            && u.cmp(&b, &c) == Ordering::Less
            && u.cmp(&a, &c) != Ordering::Less
        {
            return Err(format!("{u:?}: transitivity fails"));
        }
        if u.cmp(&u.mul3(&l, &a, &r), &u.mul3(&l, &b, &r)) != ab {
            return Err(format!("{u:?}: not compatible with multiplication"));
        }
        if u.cmp(&u.one(), &a) == Ordering::Greater {
            return Err(format!("{u:?}: 1 above {a:?}"));
        }
    }
    Ok(())
}

fn lead_of_product<U: Universe>(
    rng: &mut impl Rng,
    r: &Arc<Ring<U>>,
    cases: usize,
) -> Result<(), String> {
    let u = &r.universe;
    for _ in 0..cases {
        let f = random_poly(rng, r, 0, 3, 4);
        if f.is_zero() {
            continue;
        }
        let (da, db) = (rng.gen_range(0..=3), rng.gen_range(0..=3));
        let (a, b) = (random_mono(rng, u, da), random_mono(rng, u, db));
        if f.mono_mul(&a, &b).lead_mono() != Some(&u.mul3(&a, f.lead_mono().unwrap(), &b)) {
            return Err(format!("lead of a·({f})·b is not a·lead·b"));
        }
    }
    Ok(())
}

fn commutators(r: &Arc<Ring<FreeUniverse>>, n: usize) -> Vec<Polynomial<FreeUniverse>> {
    polys(r, &commutator_relations(n))
}

fn eps_ring(n: usize, order: CommOrder) -> (Arc<Ring<CommUniverse>>, Arc<Ring<FreeUniverse>>) {
    (
        Ring::new(Field::Rational, CommUniverse::new(xs(n), order)),
        Ring::new(
            Field::Rational,
            FreeUniverse::new(xs(n), WordOrder::EpsLift(order)),
        ),
    )
}

fn clip(m: &CommMonomial, keep: impl Fn(usize) -> bool) -> CommMonomial {
    let e: Vec<u32> = m
        .exponents()
        .iter()
        .enumerate()
        .map(|(i, &x)| if keep(i) { x } else { 0 })
        .collect();
    CommMonomial::from_exponents(&e)
}

fn ascending_sandwich(rng: &mut impl Rng, cases: usize) -> Result<(), String> {
    let n = 4;
    let (r, fr) = eps_ring(n, CommOrder::DegLex);
    let s1 = commutators(&fr, n);
    for _ in 0..cases {
        let s = random_poly(rng, &r, 0, 3, 4);
        let Some(sbar) = s.lead_mono().cloned() else {
            continue;
        };
        let (lo, hi) = sbar.index_range().unwrap_or((0, (n - 1) as Letter));
        let (da, db) = (rng.gen_range(0..=3), rng.gen_range(0..=3));
        let a = clip(&random_mono(rng, &r.universe, da), |i| i <= lo as usize);
        let b = clip(&random_mono(rng, &r.universe, db), |i| i >= hi as usize);
        let w = Word::concat3(&delta(&a), &delta(&sbar), &delta(&b));
        let gab = a.mul(&b);
        if w != delta(&gab.mul(&sbar)) {
            return Err(format!("a·δ(s̄)·b is not δ(γ(ab)s̄) for s = {s}"));
        }
        let lhs = delta_poly(&fr, &s).mono_mul(&delta(&a), &delta(&b));
        let rhs = delta_poly(&fr, &s.mono_mul(&gab, &CommMonomial::one()));
        let h = lhs.try_sub(&rhs).unwrap();
        if h.lead_mono()
            .is_some_and(|m| fr.universe.cmp(m, &w) != Ordering::Less)
        {
            return Err(format!("lead of the difference is not below w for s = {s}"));
        }
        if !normal_form(&h, &s1).is_zero() {
            return Err(format!("a·δ(s)·b ≢ δ(γ(ab)s) mod S1 for s = {s}"));
        }
    }
    Ok(())
}

fn u_factorization(rng: &mut impl Rng, cases: usize) -> Result<(), String> {
    let n = 4;
    let (r, fr) = eps_ring(n, CommOrder::DegLex);
    let s1 = commutators(&fr, n);
    for _ in 0..cases {
        let f = random_poly(rng, &r, 0, 3, 4);
        let g = random_poly(rng, &r, 0, 3, 4);
        if f.is_zero() || g.is_zero() {
            continue;
        }
        let gbar = g.lead_mono().unwrap().clone();
        let (lo, hi) = gbar.index_range().unwrap_or((0, 0));
        let (lo, hi) = (lo as usize, hi as usize);
        let w = delta(&f.lead_mono().unwrap().mul(&gbar));
        let tail = f.tail();
        let lhs = delta_poly(&fr, &tail.try_mul(&g).unwrap());
        let allowed = u_set(&gbar, 6);
        let mut rhs = Polynomial::zero(&fr);
        let mut image = Polynomial::zero(&r);
        for (m, c) in tail.terms() {
            let a = clip(m, |i| i <= lo);
            let b = clip(m, |i| i > lo && i >= hi);
            let u = clip(m, |i| i > lo && i < hi);
            if !allowed.contains(&u) {
                return Err(format!("{u:?} not in U({gbar:?})"));
            }
            let term = delta_poly(&fr, &g.mono_mul(&u, &CommMonomial::one())).term_mul(
                c,
                &delta(&a),
                &delta(&b),
            );
            if fr.universe.cmp(term.lead_mono().unwrap(), &w) != Ordering::Less {
                return Err(format!("a·δ(ug)·b not below w for f = {f}, g = {g}"));
            }
            rhs = rhs.try_add(&term).unwrap();
            image = image
                .try_add(&Polynomial::monomial(&r, a.mul(&u).mul(&b), c.clone()))
                .unwrap();
        }
        if image != tail {
            return Err(format!("γ(Σ a u b) != f - f̄ for f = {f}"));
        }
        if normal_form(&lhs, &s1) != normal_form(&rhs, &s1) {
            return Err(format!(
                "δ((f-f̄)g) ≢ Σ a δ(ug) b mod S1 for f = {f}, g = {g}"
            ));
        }
    }
    Ok(())
}

fn trace_soundness<U: Universe>(
    rng: &mut impl Rng,
    r: &Arc<Ring<U>>,
    cases: usize,
) -> Result<(), String> {
    let u = &r.universe;
    for _ in 0..cases {
        let k = rng.gen_range(1..=3);
        let basis: Vec<_> = (0..k).map(|_| random_relation(rng, r, 0, 2, 3)).collect();
        let f = random_poly(rng, r, 0, 4, 5);
        let tr = reduce(&f, &basis);
        if tr.replay(&basis) != f {
            return Err(format!("replay of {f} differs"));
        }
        if let Some(top) = f.lead_mono() {
            for st in &tr.steps {
                let w = u.mul3(&st.left, basis[st.index].lead_mono().unwrap(), &st.right);
                if u.cmp(&w, top) == Ordering::Greater {
                    return Err(format!("step above the lead of {f}"));
                }
            }
        }
        if tr
            .remainder
            .terms()
            .iter()
            .any(|(m, _)| basis.iter().any(|s| u.divides(s.lead_mono().unwrap(), m)))
        {
            return Err(format!("remainder of {f} is reducible"));
        }
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    let mut rng = rng(7);
    let n = PROPERTY_CASES;
    let mut suites: Vec<(&str, Result<(), String>)> = Vec::new();
    let lifted = tensor_ring(2, 2, TensorOrder::Lifted(MixedOrder::default()));
    let product = tensor_ring(2, 2, TensorOrder::default());
    suites.push((
        "lead-of-product",
        lead_of_product(&mut rng, &product, n / 2).and(lead_of_product(&mut rng, &lifted, n / 2)),
    ));
    suites.push(("ascending-sandwich", ascending_sandwich(&mut rng, n)));
    suites.push(("u-factorization", u_factorization(&mut rng, n)));
    let per = n / 8;
    let orders = (|| {
        order_axioms(&mut rng, &free_ring(3, Field::Rational).universe, per)?;
        for o in [CommOrder::DegLex, CommOrder::Lex, CommOrder::DegRevLex] {
            order_axioms(&mut rng, &CommUniverse::new(xs(3), o), per)?;
        }
        order_axioms(
            &mut rng,
            &FreeUniverse::new(xs(3), WordOrder::EpsLift(CommOrder::DegRevLex)),
            per,
        )?;
        order_axioms(&mut rng, &product.universe, per)?;
        order_axioms(&mut rng, &lifted.universe, per)?;
        order_axioms(&mut rng, &mixed_ring(2, 2).universe, per)
    })();
    suites.push(("order-axioms", orders));
    let traces = trace_soundness(&mut rng, &free_ring(2, Field::Rational), n / 4)
        .and_then(|_| trace_soundness(&mut rng, &free_ring(2, Field::prime(5).unwrap()), n / 4))
        .and_then(|_| trace_soundness(&mut rng, &product, n / 4))
        .and_then(|_| trace_soundness(&mut rng, &mixed_ring(2, 2), n / 4));
    suites.push(("trace-soundness", traces));
    let failed: Vec<String> = suites
        .iter()
        .filter_map(|(name, r)| r.as_ref().err().map(|e| format!("{name}: {e}")))
        .collect();
    if failed.is_empty() {
        let names: Vec<&str> = suites.iter().map(|s| s.0).collect();
        outcome(
            true,
            format!("{} suites x {n} cases: {}", suites.len(), names.join(", ")),
        )
    } else {
        outcome(false, failed.join("; "))
    }
}

/// One double factorization `a1·s̄1·b1 = a2·s̄2·b2`; `None` when `w` has a single one.
fn diamond<U: Universe>(
    rng: &mut impl Rng,
    st: &BasisState<U>,
    d: usize,
) -> Option<Result<(), String>> {
    let u = st.universe();
    let s = &st.elements;
    let idx: Vec<usize> = (0..s.len()).filter(|&i| s[i].degree() <= d).collect();
    if idx.is_empty() {
        return None;
    }
    let i = idx[rng.gen_range(0..idx.len())];
    let room = d - s[i].degree();
    let da = rng.gen_range(0..=room);
    let db = rng.gen_range(0..=room - da);
    let a1 = random_mono(rng, u, da);
    let rights = u.right_multipliers(db);
    let b1 = if rights.is_empty() {
        u.one()
    } else {
        rights[rng.gen_range(0..rights.len())].clone()
    };
    let w = u.mul3(&a1, s[i].lead_mono().unwrap(), &b1);
    let mut others = Vec::new();
    for (j, sj) in s.iter().enumerate() {
        for (a2, b2) in u.occurrences(&w, sj.lead_mono().unwrap()) {
            if (j, &a2, &b2) != (i, &a1, &b1) {
                others.push((j, a2, b2));
            }
        }
    }
    if others.is_empty() {
        return None;
    }
    let (j, a2, b2) = &others[rng.gen_range(0..others.len())];
    let h = s[i]
        .mono_mul(&a1, &b1)
        .try_sub(&s[*j].mono_mul(a2, b2))
        .unwrap();
    Some(if normal_form(&h, s).is_zero() {
        Ok(())
    } else {
        Err(format!("w = {}: s{i} and s{j} disagree", u.display(&w)))
    })
}

fn criterion_8(col: &Collected) -> Outcome {
    let mut rng = rng(8);
    let (mut done, mut attempts) = (0, 0);
    let pools = col.free.len() + col.comm.len() + col.tensor.len() + col.mixed.len();
    while done < DIAMOND_CASES && attempts < 100 * DIAMOND_CASES {
        attempts += 1;
        let k = rng.gen_range(0..pools);
        let (f, c, t) = (col.free.len(), col.comm.len(), col.tensor.len());
        let res = if k < f {
            diamond(&mut rng, &col.free[k].1, col.free[k].2)
        } else if k < f + c {
            diamond(&mut rng, &col.comm[k - f].1, col.comm[k - f].2)
        } else if k < f + c + t {
            let k = k - f - c;
            diamond(&mut rng, &col.tensor[k].1, col.tensor[k].2)
        } else {
            let k = k - f - c - t;
            diamond(&mut rng, &col.mixed[k].1, col.mixed[k].2)
        };
        match res {
            None => {}
            Some(Ok(())) => done += 1,
            Some(Err(e)) => return outcome(false, e),
        }
    }
    outcome(
        done == DIAMOND_CASES,
        format!("{done} double factorizations over {pools} bases, all resolve ({attempts} draws)"),
    )
}

fn main() -> ExitCode {
    println!("acceptance seed = {SEED:#018x}; tolerance: exact equality throughout");
    let mut col = Collected::default();
    let mut results = Vec::new();
    let mut run = |n: usize, f: &mut dyn FnMut() -> Outcome| {
        let t = Instant::now();
        let o = f();
        println!(
            "criterion {n}: {} [{:.2}s] {}",
            if o.pass { "PASS" } else { "FAIL" },
            t.elapsed().as_secs_f64(),
            o.detail
        );
        results.push(o.pass);
    };
    run(1, &mut || criterion_1(&mut col));
    run(2, &mut || criterion_2(&mut col));
    run(3, &mut || criterion_3(&mut col));
    run(4, &mut || criterion_4(&mut col));
    run(5, &mut || criterion_5(&mut col));
    run(6, &mut || criterion_6(&col));
    run(7, &mut criterion_7);
    run(8, &mut || criterion_8(&col));
    let passed = results.iter().filter(|&&p| p).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
