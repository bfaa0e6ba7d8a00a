#![allow(dead_code)]

use std::sync::Arc;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tensor_gsb::monoids::{Alphabet, Side};
use tensor_gsb::orders::{CommOrder, MixedOrder, TensorOrder, WordOrder};
use tensor_gsb::poly::{Polynomial, Ring};
use tensor_gsb::presentation::parse_polynomial;
use tensor_gsb::scalar::Field;
use tensor_gsb::universe::{
    free_on_union, CommUniverse, FreeUniverse, MixedUniverse, TensorUniverse, Universe,
};

pub const SEED: u64 = 0x7e45_0c0d_ec0d_e5ee;

pub fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

pub fn xs(n: usize) -> Alphabet {
    Alphabet::indexed(Side::X, "x", n)
}

pub fn ys(n: usize) -> Alphabet {
    Alphabet::indexed(Side::Y, "y", n)
}

pub fn free_ring(n: usize, field: Field) -> Arc<Ring<FreeUniverse>> {
    Ring::new(field, FreeUniverse::new(xs(n), WordOrder::DegLex))
}

pub fn free_y_ring(n: usize, field: Field) -> Arc<Ring<FreeUniverse>> {
    Ring::new(field, FreeUniverse::new(ys(n), WordOrder::DegLex))
}

/// `k⟨X ∪ Y⟩` with every `y` above every `x`.
pub fn union_ring(nx: usize, ny: usize) -> Arc<Ring<FreeUniverse>> {
    Ring::new(Field::Rational, free_on_union(&xs(nx), &ys(ny)).unwrap())
}

pub fn tensor_ring(nx: usize, ny: usize, order: TensorOrder) -> Arc<Ring<TensorUniverse>> {
    Ring::new(Field::Rational, TensorUniverse::new(xs(nx), ys(ny), order))
}

pub fn comm_ring(n: usize) -> Arc<Ring<CommUniverse>> {
    Ring::new(Field::Rational, CommUniverse::new(xs(n), CommOrder::DegLex))
}

pub fn mixed_ring(nx: usize, ny: usize) -> Arc<Ring<MixedUniverse>> {
    Ring::new(
        Field::Rational,
        MixedUniverse::new(xs(nx), ys(ny), MixedOrder::default()),
    )
}

pub fn polys<U: Universe>(r: &Arc<Ring<U>>, texts: &[String]) -> Vec<Polynomial<U>> {
    texts
        .iter()
        .map(|t| parse_polynomial(r, t).unwrap())
        .collect()
}

/// `T = {y_j x_i - x_i y_j}`.
pub fn t_relations(nx: usize, ny: usize) -> Vec<String> {
    let mut out = Vec::new();
    for j in 1..=ny {
        for i in 1..=nx {
            out.push(format!("y{j}*x{i} - x{i}*y{j}"));
        }
    }
    out
}

/// `{x_i x_j - x_j x_i : i > j}`.
pub fn commutator_relations(nx: usize) -> Vec<String> {
    let mut out = Vec::new();
    for i in 1..=nx {
        for j in 1..i {
            out.push(format!("x{i}*x{j} - x{j}*x{i}"));
        }
    }
    out
}

pub fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Normal words `u^X u^Y` of degree `d`.
pub fn tensor_count(nx: usize, ny: usize, d: usize) -> usize {
    (0..=d)
        .map(|i| nx.pow(i as u32) * ny.pow((d - i) as u32))
        .sum()
}

/// Commutative monomials on `n` variables of degree `d`.
pub fn comm_count(n: usize, d: usize) -> usize {
    if n == 0 {
        return usize::from(d == 0);
    }
    binom(n + d - 1, d)
}

/// Commutative monomials in `X` times words in `Y`, total degree `d`.
pub fn mixed_count(nx: usize, ny: usize, d: usize) -> usize {
    (0..=d)
        .map(|i| comm_count(nx, i) * ny.pow((d - i) as u32))
        .sum()
}

pub fn random_mono<U: Universe>(rng: &mut impl Rng, u: &U, d: usize) -> U::Mono {
    let gens = u.generators();
    (0..d).fold(u.one(), |m, _| {
        u.mul(&m, &gens[rng.gen_range(0..gens.len())])
    })
}

fn coeff(rng: &mut impl Rng) -> i64 {
    let c = rng.gen_range(1..=4);
    if rng.gen_bool(0.5) {
        -c
    } else {
        c
    }
}

/// Random polynomial with up to `terms` terms of degree `lo..=hi`.
pub fn random_poly<U: Universe>(
    rng: &mut impl Rng,
    r: &Arc<Ring<U>>,
    lo: usize,
    hi: usize,
    terms: usize,
) -> Polynomial<U> {
    let n = rng.gen_range(1..=terms);
    let ts: Vec<(U::Mono, _)> = (0..n)
        .map(|_| {
            let d = rng.gen_range(lo..=hi);
            (
                random_mono(rng, &r.universe, d),
                r.field.from_i64(coeff(rng)),
            )
        })
        .collect();
    Polynomial::from_terms(r, ts)
}

/// Nonzero random polynomial; the lead is made to have degree `hi`.
pub fn random_relation<U: Universe>(
    rng: &mut impl Rng,
    r: &Arc<Ring<U>>,
    lo: usize,
    hi: usize,
    terms: usize,
) -> Polynomial<U> {
    loop {
        let lead = Polynomial::monomial(r, random_mono(rng, &r.universe, hi), r.field.one());
        let p = lead
            .try_add(&random_poly(rng, r, lo, hi, terms.saturating_sub(1).max(1)))
            .unwrap();
        if !p.is_zero() && p.len() > 1 {
            return p;
        }
    }
}

/// Random `Σ c·a·s·b` with every term of degree at most `max_degree`.
pub fn random_member<U: Universe>(
    rng: &mut impl Rng,
    r: &Arc<Ring<U>>,
    basis: &[Polynomial<U>],
    max_degree: usize,
) -> Option<Polynomial<U>> {
    let u = &r.universe;
    let usable: Vec<&Polynomial<U>> = basis.iter().filter(|s| s.degree() <= max_degree).collect();
    if usable.is_empty() {
        return None;
    }
    let mut acc = Polynomial::zero(r);
    for _ in 0..rng.gen_range(1..=3) {
        let s = usable[rng.gen_range(0..usable.len())];
        let room = max_degree - s.degree();
        let da = rng.gen_range(0..=room);
        let db = rng.gen_range(0..=room - da);
        let a = random_mono(rng, u, da);
        let rights = u.right_multipliers(db);
        let b = if rights.is_empty() {
            u.one()
        } else {
            rights[rng.gen_range(0..rights.len())].clone()
        };
        acc = acc
            .try_add(&s.term_mul(&r.field.from_i64(coeff(rng)), &a, &b))
            .unwrap();
    }
    Some(acc)
}
