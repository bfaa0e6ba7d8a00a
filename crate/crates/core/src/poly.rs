//! Polynomials over a monomial universe with exact coefficients.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::scalar::{Field, Scalar};
use crate::universe::Universe;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("polynomials belong to different universes or orders")]
    UniverseMismatch,
}

/// A coefficient field plus a monomial universe with its order.
#[derive(Debug, Clone, PartialEq)]
pub struct Ring<U: Universe> {
    pub field: Field,
    pub universe: U,
}

impl<U: Universe> Ring<U> {
    pub fn new(field: Field, universe: U) -> Arc<Self> {
        Arc::new(Ring { field, universe })
    }
}

/// Terms sorted strictly descending under the ring's order, no zero
/// coefficients. The zero polynomial has no terms.
#[derive(Clone)]
pub struct Polynomial<U: Universe> {
    ring: Arc<Ring<U>>,
    terms: Vec<(U::Mono, Scalar)>,
}

impl<U: Universe> PartialEq for Polynomial<U> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && same_ring(&self.ring, &other.ring)
    }
}

impl<U: Universe> Eq for Polynomial<U> {}

impl<U: Universe> fmt::Debug for Polynomial<U> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

fn same_ring<U: Universe>(a: &Arc<Ring<U>>, b: &Arc<Ring<U>>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl<U: Universe> Polynomial<U> {
    pub fn zero(ring: &Arc<Ring<U>>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn monomial(ring: &Arc<Ring<U>>, m: U::Mono, c: Scalar) -> Self {
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(m, c)]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn one(ring: &Arc<Ring<U>>) -> Self {
        Self::monomial(ring, ring.universe.one(), ring.field.one())
    }

    /// Merges duplicate monomials, drops zeros and sorts descending.
    pub fn from_terms(
        ring: &Arc<Ring<U>>,
        terms: impl IntoIterator<Item = (U::Mono, Scalar)>,
    ) -> Self {
        let mut acc: HashMap<U::Mono, Scalar> = HashMap::new();
        let mut order = Vec::new();
        for (m, c) in terms {
            match acc.get_mut(&m) {
                Some(v) => *v = &*v + &c,
                None => {
                    order.push(m.clone());
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<(U::Mono, Scalar)> = order
            .into_iter()
            .filter_map(|m| {
                let c = acc.remove(&m)?;
                (!c.is_zero()).then_some((m, c))
            })
            .collect();
        let u = &ring.universe;
        terms.sort_by(|a, b| u.cmp(&b.0, &a.0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Wraps terms that are already normalized.
    pub(crate) fn from_sorted(ring: &Arc<Ring<U>>, terms: Vec<(U::Mono, Scalar)>) -> Self {
        let p = Polynomial {
            ring: ring.clone(),
            terms,
        };
        debug_assert!(p.is_normalized());
        p
    }

    pub fn ring(&self) -> &Arc<Ring<U>> {
        &self.ring
    }

    pub fn universe(&self) -> &U {
        &self.ring.universe
    }

    pub fn terms(&self) -> &[(U::Mono, Scalar)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(U::Mono, Scalar)> {
        self.terms
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_normalized(&self) -> bool {
        let u = &self.ring.universe;
        self.terms.iter().all(|(_, c)| !c.is_zero())
            && self
                .terms
                .windows(2)
                .all(|w| u.cmp(&w[0].0, &w[1].0) == Ordering::Greater)
    }

    pub fn lead(&self) -> Result<(&Scalar, &U::Mono), PolyError> {
        self.terms
            .first()
            .map(|(m, c)| (c, m))
            .ok_or(PolyError::ZeroPolynomial)
    }

    pub fn lead_mono(&self) -> Option<&U::Mono> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn is_monic(&self) -> bool {
        self.terms.first().is_some_and(|(_, c)| c.is_one())
    }

    pub fn make_monic(&self) -> Result<Self, PolyError> {
        let (c, _) = self.lead()?;
        let inv = c.inv().expect("nonzero leading coefficient");
        Ok(self.scalar_mul(&inv))
    }

    /// Largest total degree among the terms; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        let u = &self.ring.universe;
        self.terms
            .iter()
            .map(|(m, _)| u.degree(m))
            .max()
            .unwrap_or(0)
    }

    pub fn scalar_mul(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), -a)).collect(),
        }
    }

    fn check_ring(&self, other: &Self) -> Result<(), PolyError> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(PolyError::UniverseMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other.terms.iter().cloned()))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other.terms.iter().map(|(m, c)| (m.clone(), -c))))
    }

    /// `a·f·b` for monomials `a`, `b`. Monomial orders keep the term order.
    pub fn mono_mul(&self, a: &U::Mono, b: &U::Mono) -> Self {
        let u = &self.ring.universe;
        Polynomial::from_sorted(
            &self.ring,
            self.terms
                .iter()
                .map(|(m, c)| (u.mul3(a, m, b), c.clone()))
                .collect(),
        )
    }

    /// `c·a·f·b`.
    pub fn term_mul(&self, c: &Scalar, a: &U::Mono, b: &U::Mono) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let u = &self.ring.universe;
        Polynomial::from_sorted(
            &self.ring,
            self.terms
                .iter()
                .map(|(m, x)| (u.mul3(a, m, b), x * c))
                .collect(),
        )
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        let u = &self.ring.universe;
        let mut terms = Vec::with_capacity(self.len() * other.len());
        for (m, a) in &self.terms {
            for (n, b) in &other.terms {
                terms.push((u.mul(m, n), a * b));
            }
        }
        Ok(Polynomial::from_terms(&self.ring, terms))
    }

    /// `self - c·a·g·b`, the single step used by reduction.
    pub(crate) fn sub_term_mul(&self, c: &Scalar, a: &U::Mono, g: &Self, b: &U::Mono) -> Self {
        let u = &self.ring.universe;
        let neg = -c;
        self.merge(g.terms.iter().map(|(m, x)| (u.mul3(a, m, b), x * &neg)))
    }

    /// Adds a descending stream of terms.
    fn merge(&self, other: impl Iterator<Item = (U::Mono, Scalar)>) -> Self {
        let u = &self.ring.universe;
        let mut out = Vec::with_capacity(self.terms.len());
        let mut left = self.terms.iter().peekable();
        let mut right = other.peekable();
        loop {
            match (left.peek(), right.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(left.next().unwrap().clone()),
                (None, Some(_)) => out.push(right.next().unwrap()),
                (Some((lm, _)), Some((rm, _))) => match u.cmp(lm, rm) {
                    Ordering::Greater => out.push(left.next().unwrap().clone()),
                    Ordering::Less => out.push(right.next().unwrap()),
                    Ordering::Equal => {
                        let (m, a) = left.next().unwrap();
                        let (_, b) = right.next().unwrap();
                        let s = a + &b;
                        if !s.is_zero() {
                            out.push((m.clone(), s));
                        }
                    }
                },
            }
        }
        Polynomial::from_sorted(&self.ring, out)
    }

    /// Drops the leading term.
    pub fn tail(&self) -> Self {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().skip(1).cloned().collect(),
        }
    }

    pub fn coefficient(&self, m: &U::Mono) -> Option<&Scalar> {
        self.terms.iter().find(|(n, _)| n == m).map(|(_, c)| c)
    }
}

impl<U: Universe> fmt::Display for Polynomial<U> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let u = &self.ring.universe;
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let is_one_mono = *m == u.one();
            if is_one_mono {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", u.display(m))?;
            } else {
                write!(f, "{abs}*{}", u.display(m))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoids::{NormalWord, Side, Word};
    use crate::orders::TensorOrder;
    use crate::universe::{side_alphabet, TensorUniverse};

    fn ring() -> Arc<Ring<TensorUniverse>> {
        Ring::new(
            Field::Rational,
            TensorUniverse::new(
                side_alphabet(Side::X, 2),
                side_alphabet(Side::Y, 2),
                TensorOrder::default(),
            ),
        )
    }

    fn nw(x: &[u16], y: &[u16]) -> NormalWord {
        NormalWord::new(Word::from_letters(x), Word::from_letters(y))
    }

    fn q(n: i64) -> Scalar {
        Field::Rational.from_i64(n)
    }

    #[test]
    fn normalize_examples() {
        let r = ring();
        let u = nw(&[0], &[]);
        let v = nw(&[1], &[]);
        assert!(Polynomial::from_terms(&r, [(u.clone(), q(1)), (u.clone(), q(-1))]).is_zero());
        let p = Polynomial::from_terms(&r, [(u.clone(), q(2)), (v.clone(), q(3))]);
        assert_eq!(p.terms(), &[(v, q(3)), (u.clone(), q(2))]);
        let half = Field::Rational.parse("1/2").unwrap();
        let p = Polynomial::from_terms(&r, [(u.clone(), half.clone()), (u.clone(), half)]);
        assert_eq!(p.terms(), &[(u, q(1))]);
    }

    #[test]
    fn lead_examples() {
        let r = ring();
        let f = Polynomial::from_terms(&r, [(nw(&[1], &[0]), q(1)), (nw(&[0], &[]), q(1))]);
        assert_eq!(f.lead().unwrap(), (&q(1), &nw(&[1], &[0])));
        let g = f.scalar_mul(&q(5)).make_monic().unwrap();
        assert!(g.lead().unwrap().0.is_one());
        assert_eq!(Polynomial::zero(&r).lead(), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn mono_mul_distributes() {
        let r = ring();
        let f = Polynomial::from_terms(&r, [(nw(&[1], &[0]), q(1)), (nw(&[], &[0]), q(-1))]);
        let got = f.mono_mul(&nw(&[0], &[]), &nw(&[], &[1]));
        let want = Polynomial::from_terms(
            &r,
            [(nw(&[0, 1], &[0, 1]), q(1)), (nw(&[0], &[0, 1]), q(-1))],
        );
        assert_eq!(got, want);
        assert_eq!(f.mono_mul(&NormalWord::one(), &NormalWord::one()), f);
    }

    #[test]
    fn ring_ops() {
        let r = ring();
        let f = Polynomial::from_terms(&r, [(nw(&[1], &[0]), q(1)), (nw(&[], &[0]), q(-1))]);
        assert!(f.try_sub(&f).unwrap().is_zero());
        assert!(f.scalar_mul(&q(0)).is_zero());
        let other = Ring::new(
            Field::Rational,
            TensorUniverse::new(
                side_alphabet(Side::X, 2),
                side_alphabet(Side::Y, 2),
                TensorOrder::Lifted(Default::default()),
            ),
        );
        let g = Polynomial::monomial(&other, nw(&[0], &[]), q(1));
        assert_eq!(f.try_add(&g), Err(PolyError::UniverseMismatch));
    }

    #[test]
    fn display() {
        let r = ring();
        let f = Polynomial::from_terms(
            &r,
            [
                (nw(&[0, 1], &[0]), Field::Rational.parse("3/2").unwrap()),
                (nw(&[0], &[0]), q(-1)),
                (NormalWord::one(), q(1)),
            ],
        );
        assert_eq!(f.to_string(), "3/2*x1*x2;y1 - x1;y1 + 1");
    }
}
