//! Lifting commutative bases to free ones through the abelianization `γ`
//! and its lexicographic splitting `δ`.

use std::sync::Arc;

use thiserror::Error;

use crate::monoids::{CommMonomial, Letter, MixedMonomial, NormalWord, Word};
use crate::orders::{CommOrder, TensorOrder, WordOrder};
use crate::poly::{Polynomial, Ring};
use crate::rewrite::{check_gsb, is_minimal, CompletionConfig};
use crate::universe::{
    comm_monomials_of_degree, CommUniverse, FreeUniverse, MixedUniverse, TensorUniverse, Universe,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftError {
    #[error("input is not minimal: leading monomial {divisor} of relation {j} divides {lead} of relation {i}")]
    NotMinimal {
        i: usize,
        j: usize,
        lead: String,
        divisor: String,
    },
    #[error("input is not a Gröbner basis: {count} nontrivial compositions, first {first}")]
    NotGroebner { count: usize, first: String },
    #[error("input check failed: {0}")]
    Check(String),
}

/// A lifted basis together with its scope.
#[derive(Debug, Clone)]
pub struct Lift<U: Universe> {
    pub ring: Arc<Ring<U>>,
    /// `δ(us)` by input index then `u` ascending, followed by the commutators.
    pub elements: Vec<Polynomial<U>>,
    pub lifted: usize,
    pub commutators: usize,
    /// `deg(u·s̄)` cap for the infinite families.
    pub degree_cap: usize,
    /// Present when some `U(s̄)` was cut off by the cap.
    pub warning: Option<String>,
}

pub fn gamma(u: &Word) -> CommMonomial {
    u.abelianize()
}

pub fn gamma_tensor(u: &NormalWord) -> MixedMonomial {
    MixedMonomial::new(u.x.abelianize(), u.y.clone())
}

pub fn delta(m: &CommMonomial) -> Word {
    m.ascending_word()
}

pub fn delta_tensor(m: &MixedMonomial) -> NormalWord {
    NormalWord::new(m.x.ascending_word(), m.y.clone())
}

/// `γ` on polynomials, into `target`.
pub fn gamma_poly(
    target: &Arc<Ring<CommUniverse>>,
    f: &Polynomial<FreeUniverse>,
) -> Polynomial<CommUniverse> {
    Polynomial::from_terms(target, f.terms().iter().map(|(m, c)| (gamma(m), c.clone())))
}

/// `δ` on polynomials, into `target`.
pub fn delta_poly(
    target: &Arc<Ring<FreeUniverse>>,
    f: &Polynomial<CommUniverse>,
) -> Polynomial<FreeUniverse> {
    Polynomial::from_terms(target, f.terms().iter().map(|(m, c)| (delta(m), c.clone())))
}

pub fn gamma_tensor_poly(
    target: &Arc<Ring<MixedUniverse>>,
    f: &Polynomial<TensorUniverse>,
) -> Polynomial<MixedUniverse> {
    Polynomial::from_terms(
        target,
        f.terms().iter().map(|(m, c)| (gamma_tensor(m), c.clone())),
    )
}

pub fn delta_tensor_poly(
    target: &Arc<Ring<TensorUniverse>>,
    f: &Polynomial<MixedUniverse>,
) -> Polynomial<TensorUniverse> {
    Polynomial::from_terms(
        target,
        f.terms().iter().map(|(m, c)| (delta_tensor(m), c.clone())),
    )
}

/// Variables strictly between the least and greatest index in `m`.
fn interior(m: &CommMonomial) -> std::ops::Range<Letter> {
    match m.index_range() {
        Some((lo, hi)) if hi > lo + 1 => lo + 1..hi,
        _ => 0..0,
    }
}

/// `U(m)` up to total degree `cap`, by degree then ascending under deg-lex.
pub fn u_set(m: &CommMonomial, cap: usize) -> Vec<CommMonomial> {
    let r = interior(m);
    if r.is_empty() {
        return vec![CommMonomial::one()];
    }
    let width = r.len();
    let mut out = Vec::new();
    for d in 0..=cap {
        let mut ms: Vec<CommMonomial> = comm_monomials_of_degree(width, d)
            .into_iter()
            .map(|u| {
                let mut e = vec![0u32; r.start as usize];
                e.extend_from_slice(u.exponents());
                CommMonomial::from_exponents(&e)
            })
            .collect();
        ms.sort_by(|a, b| CommOrder::DegLex.cmp(a, b));
        out.extend(ms);
    }
    out
}

fn check_input<U: Universe>(
    ring: &Arc<Ring<U>>,
    s: &[Polynomial<U>],
    cfg: CompletionConfig,
) -> Result<Vec<Polynomial<U>>, LiftError> {
    let monic: Vec<Polynomial<U>> = s
        .iter()
        .enumerate()
        .map(|(i, f)| {
            f.make_monic()
                .map_err(|_| LiftError::Check(format!("relation {i} is zero")))
        })
        .collect::<Result<_, _>>()?;
    if let Some((i, j)) = is_minimal(&monic) {
        let u = &ring.universe;
        return Err(LiftError::NotMinimal {
            i,
            j,
            lead: u.display(monic[i].lead_mono().unwrap()).to_string(),
            divisor: u.display(monic[j].lead_mono().unwrap()).to_string(),
        });
    }
    let st = check_gsb(ring, &monic, cfg).map_err(|e| LiftError::Check(e.to_string()))?;
    if let Some(first) = st.failures.first() {
        return Err(LiftError::NotGroebner {
            count: st.failures.len(),
            first: first.clone(),
        });
    }
    Ok(monic)
}

fn truncation_warning(cut: &[String], cap: usize) -> Option<String> {
    (!cut.is_empty()).then(|| {
        format!(
            "U({}) infinite; lifted relations emitted only up to degree {cap}",
            cut.join("), U(")
        )
    })
}

/// Lifts a minimal Gröbner basis of `k[X]` to `k⟨X⟩` under the lifted order.
/// The input is checked for minimality and closure up to `cfg.max_degree`,
/// which also caps `deg(u·s̄)`.
pub fn eps_lift(
    ring: &Arc<Ring<CommUniverse>>,
    s: &[Polynomial<CommUniverse>],
    cfg: CompletionConfig,
) -> Result<Lift<FreeUniverse>, LiftError> {
    let s = check_input(ring, s, cfg)?;
    let cu = &ring.universe;
    let target = Ring::new(
        ring.field,
        FreeUniverse::new(cu.alphabet.clone(), WordOrder::EpsLift(cu.order)),
    );
    let cap = cfg.max_degree;
    let mut elements = Vec::new();
    let mut cut = Vec::new();
    for f in &s {
        let lead = f.lead_mono().unwrap();
        let room = cap.saturating_sub(lead.degree());
        if !interior(lead).is_empty() {
            cut.push(cu.display(lead).to_string());
        }
        let mut us = u_set(lead, room);
        us.sort_by(|a, b| cu.cmp(a, b));
        for u in us {
            let one = CommMonomial::one();
            let us = f.mono_mul(&u, &one);
            elements.push(delta_poly(&target, &us));
        }
    }
    let lifted = elements.len();
    let n = cu.alphabet.len() as Letter;
    let before = elements.len();
    for i in 0..n {
        for j in 0..i {
            let hij = Polynomial::from_terms(
                &target,
                [
                    (Word::from_letters(&[i, j]), ring.field.one()),
                    (Word::from_letters(&[j, i]), ring.field.one().neg()),
                ],
            );
            elements.push(hij);
        }
    }
    Ok(Lift {
        ring: target,
        commutators: elements.len() - before,
        elements,
        lifted,
        degree_cap: cap,
        warning: truncation_warning(&cut, cap),
    })
}

/// Lifts a minimal basis of `k[X]⊗k⟨Y⟩` to `k⟨X⟩⊗k⟨Y⟩` under the lifted
/// tensor order, with `δ⊗1` and `U(s̄^X)`.
pub fn tensor_lift(
    ring: &Arc<Ring<MixedUniverse>>,
    s: &[Polynomial<MixedUniverse>],
    cfg: CompletionConfig,
) -> Result<Lift<TensorUniverse>, LiftError> {
    let s = check_input(ring, s, cfg)?;
    let mu = &ring.universe;
    let target = Ring::new(
        ring.field,
        TensorUniverse::new(mu.x.clone(), mu.y.clone(), TensorOrder::Lifted(mu.order)),
    );
    let cap = cfg.max_degree;
    let mut elements = Vec::new();
    let mut cut = Vec::new();
    for f in &s {
        let lead = f.lead_mono().unwrap();
        let room = cap.saturating_sub(lead.degree());
        if !interior(&lead.x).is_empty() {
            cut.push(lead.x.fmt_with(&mu.x).to_string());
        }
        let mut us = u_set(&lead.x, room);
        us.sort_by(|a, b| mu.order.x.cmp(a, b));
        for u in us {
            let um = MixedMonomial::new(u, Word::one());
            let prod = f.mono_mul(&um, &MixedMonomial::one());
            elements.push(delta_tensor_poly(&target, &prod));
        }
    }
    let lifted = elements.len();
    let n = mu.x.len() as Letter;
    for i in 0..n {
        for j in 0..i {
            let word =
                |a: Letter, b: Letter| NormalWord::new(Word::from_letters(&[a, b]), Word::one());
            elements.push(Polynomial::from_terms(
                &target,
                [
                    (word(i, j), ring.field.one()),
                    (word(j, i), ring.field.one().neg()),
                ],
            ));
        }
    }
    Ok(Lift {
        ring: target,
        commutators: elements.len() - lifted,
        elements,
        lifted,
        degree_cap: cap,
        warning: truncation_warning(&cut, cap),
    })
}
