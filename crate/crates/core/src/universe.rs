//! The four monomial universes behind one trait, each with its active order.

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;

use crate::compositions::{self, Ambiguity, CompositionError, CompositionFamily, ParamSlot};
use crate::monoids::{
    factorizations, Alphabet, CommMonomial, Letter, MixedMonomial, NormalWord, Side, Word,
};
use crate::orders::{CommOrder, MixedOrder, TensorOrder, WordOrder};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UniverseKind {
    Free,
    Commutative,
    Tensor,
    Mixed,
}

impl fmt::Display for UniverseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            UniverseKind::Free => "free",
            UniverseKind::Commutative => "commutative",
            UniverseKind::Tensor => "tensor",
            UniverseKind::Mixed => "mixed",
        })
    }
}

/// A monoid of monomials together with a monomial order on it.
pub trait Universe: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    type Mono: Clone + Eq + Hash + Ord + fmt::Debug + Send + Sync + 'static;

    fn kind(&self) -> UniverseKind;
    fn one(&self) -> Self::Mono;
    fn mul(&self, a: &Self::Mono, b: &Self::Mono) -> Self::Mono;
    fn mul3(&self, a: &Self::Mono, m: &Self::Mono, b: &Self::Mono) -> Self::Mono {
        self.mul(&self.mul(a, m), b)
    }
    fn degree(&self, m: &Self::Mono) -> usize;
    fn cmp(&self, a: &Self::Mono, b: &Self::Mono) -> Ordering;

    /// Every `(a, b)` with `m = a·pattern·b`, leftmost first.
    fn occurrences(&self, m: &Self::Mono, pattern: &Self::Mono) -> Vec<(Self::Mono, Self::Mono)>;
    fn first_occurrence(
        &self,
        m: &Self::Mono,
        pattern: &Self::Mono,
    ) -> Option<(Self::Mono, Self::Mono)> {
        self.occurrences(m, pattern).into_iter().next()
    }
    fn divides(&self, pattern: &Self::Mono, m: &Self::Mono) -> bool {
        self.first_occurrence(m, pattern).is_some()
    }

    /// Degree-one monomials in generator order.
    fn generators(&self) -> Vec<Self::Mono>;
    fn monomials_of_degree(&self, d: usize) -> Vec<Self::Mono>;
    /// Monomials `b` of degree `d` such that the products `a·m·b` over all
    /// `a` and these `b` reach every two-sided multiple of `m`.
    fn right_multipliers(&self, d: usize) -> Vec<Self::Mono> {
        self.monomials_of_degree(d)
    }

    /// Composition families of two leading monomials; `self_pair` when both
    /// come from the same basis element.
    fn compositions(
        &self,
        f: &Self::Mono,
        g: &Self::Mono,
        self_pair: bool,
    ) -> Vec<CompositionFamily<Self::Mono>>;
    fn instantiate(
        &self,
        fam: &CompositionFamily<Self::Mono>,
        param: &Word,
    ) -> Result<Ambiguity<Self::Mono>, CompositionError>;
    fn param_alphabet(&self, slot: ParamSlot) -> Option<&Alphabet>;

    fn fmt_mono(&self, m: &Self::Mono, f: &mut fmt::Formatter<'_>) -> fmt::Result;
    fn parse_generator(&self, name: &str) -> Option<Self::Mono>;
    fn generator_names(&self) -> Vec<String>;

    fn display<'a>(&'a self, m: &'a Self::Mono) -> MonoDisplay<'a, Self> {
        MonoDisplay {
            universe: self,
            mono: m,
        }
    }
}

pub struct MonoDisplay<'a, U: Universe> {
    universe: &'a U,
    mono: &'a U::Mono,
}

impl<U: Universe> fmt::Display for MonoDisplay<'_, U> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.universe.fmt_mono(self.mono, f)
    }
}

/// All words of length `d` over `n` letters, lexicographically ascending.
pub(crate) fn words_of_length(n: usize, d: usize) -> Vec<Word> {
    let mut out = vec![Word::one()];
    for _ in 0..d {
        let mut next = Vec::with_capacity(out.len() * n);
        for w in &out {
            for l in 0..n as Letter {
                next.push(w.concat(&Word::letter(l)));
            }
        }
        out = next;
    }
    out
}

pub(crate) fn comm_monomials_of_degree(n: usize, d: usize) -> Vec<CommMonomial> {
    fn rec(n: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<CommMonomial>) {
        if i + 1 == n {
            cur.push(left);
            out.push(CommMonomial::from_exponents(cur));
            cur.pop();
            return;
        }
        for e in 0..=left {
            cur.push(e);
            rec(n, i + 1, left - e, cur, out);
            cur.pop();
        }
    }
    if n == 0 {
        return if d == 0 {
            vec![CommMonomial::one()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    rec(n, 0, d as u32, &mut Vec::new(), &mut out);
    out
}

/// `k⟨X⟩` under a word order.
#[derive(Debug, Clone, PartialEq)]
pub struct FreeUniverse {
    pub alphabet: Alphabet,
    pub order: WordOrder,
}

impl FreeUniverse {
    pub fn new(alphabet: Alphabet, order: WordOrder) -> Self {
        FreeUniverse { alphabet, order }
    }
}

impl Universe for FreeUniverse {
    type Mono = Word;

    fn kind(&self) -> UniverseKind {
        UniverseKind::Free
    }
    fn one(&self) -> Word {
        Word::one()
    }
    fn mul(&self, a: &Word, b: &Word) -> Word {
        a.concat(b)
    }
    fn mul3(&self, a: &Word, m: &Word, b: &Word) -> Word {
        Word::concat3(a, m, b)
    }
    fn degree(&self, m: &Word) -> usize {
        m.len()
    }
    fn cmp(&self, a: &Word, b: &Word) -> Ordering {
        self.order.cmp(a, b)
    }
    fn occurrences(&self, m: &Word, pattern: &Word) -> Vec<(Word, Word)> {
        factorizations(m, pattern)
    }
    fn first_occurrence(&self, m: &Word, pattern: &Word) -> Option<(Word, Word)> {
        m.find_from(pattern, 0)
            .map(|i| (m.slice(0, i), m.slice(i + pattern.len(), m.len())))
    }
    fn divides(&self, pattern: &Word, m: &Word) -> bool {
        m.contains(pattern)
    }
    fn generators(&self) -> Vec<Word> {
        (0..self.alphabet.len() as Letter)
            .map(Word::letter)
            .collect()
    }
    fn monomials_of_degree(&self, d: usize) -> Vec<Word> {
        words_of_length(self.alphabet.len(), d)
    }
    fn compositions(&self, f: &Word, g: &Word, self_pair: bool) -> Vec<CompositionFamily<Word>> {
        compositions::free_families(f, g, self_pair)
    }
    fn instantiate(
        &self,
        fam: &CompositionFamily<Word>,
        param: &Word,
    ) -> Result<Ambiguity<Word>, CompositionError> {
        compositions::check_param(fam, param, self)?;
        Ok(compositions::instantiate_free(fam))
    }
    fn param_alphabet(&self, _slot: ParamSlot) -> Option<&Alphabet> {
        None
    }
    fn fmt_mono(&self, m: &Word, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", m.fmt_with(&self.alphabet))
    }
    fn parse_generator(&self, name: &str) -> Option<Word> {
        self.alphabet.index_of(name).map(Word::letter)
    }
    fn generator_names(&self) -> Vec<String> {
        self.alphabet.names().to_vec()
    }
}

/// `k[X]` under a commutative order.
#[derive(Debug, Clone, PartialEq)]
pub struct CommUniverse {
    pub alphabet: Alphabet,
    pub order: CommOrder,
}

impl CommUniverse {
    pub fn new(alphabet: Alphabet, order: CommOrder) -> Self {
        CommUniverse { alphabet, order }
    }
}

impl Universe for CommUniverse {
    type Mono = CommMonomial;

    fn kind(&self) -> UniverseKind {
        UniverseKind::Commutative
    }
    fn one(&self) -> CommMonomial {
        CommMonomial::one()
    }
    fn mul(&self, a: &CommMonomial, b: &CommMonomial) -> CommMonomial {
        a.mul(b)
    }
    fn degree(&self, m: &CommMonomial) -> usize {
        m.degree()
    }
    fn cmp(&self, a: &CommMonomial, b: &CommMonomial) -> Ordering {
        self.order.cmp(a, b)
    }
    fn occurrences(
        &self,
        m: &CommMonomial,
        pattern: &CommMonomial,
    ) -> Vec<(CommMonomial, CommMonomial)> {
        m.quotient(pattern)
            .map(|q| vec![(q, CommMonomial::one())])
            .unwrap_or_default()
    }
    fn divides(&self, pattern: &CommMonomial, m: &CommMonomial) -> bool {
        pattern.divides(m)
    }
    fn generators(&self) -> Vec<CommMonomial> {
        (0..self.alphabet.len() as Letter)
            .map(CommMonomial::var)
            .collect()
    }
    fn monomials_of_degree(&self, d: usize) -> Vec<CommMonomial> {
        comm_monomials_of_degree(self.alphabet.len(), d)
    }
    fn right_multipliers(&self, d: usize) -> Vec<CommMonomial> {
        if d == 0 {
            vec![CommMonomial::one()]
        } else {
            Vec::new()
        }
    }
    fn compositions(
        &self,
        f: &CommMonomial,
        g: &CommMonomial,
        self_pair: bool,
    ) -> Vec<CompositionFamily<CommMonomial>> {
        if self_pair {
            return Vec::new();
        }
        vec![compositions::comm_family(f, g)]
    }
    fn instantiate(
        &self,
        fam: &CompositionFamily<CommMonomial>,
        param: &Word,
    ) -> Result<Ambiguity<CommMonomial>, CompositionError> {
        compositions::check_param(fam, param, self)?;
        Ok(compositions::instantiate_comm(fam))
    }
    fn param_alphabet(&self, _slot: ParamSlot) -> Option<&Alphabet> {
        None
    }
    fn fmt_mono(&self, m: &CommMonomial, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", m.fmt_with(&self.alphabet))
    }
    fn parse_generator(&self, name: &str) -> Option<CommMonomial> {
        self.alphabet.index_of(name).map(CommMonomial::var)
    }
    fn generator_names(&self) -> Vec<String> {
        self.alphabet.names().to_vec()
    }
}

/// `k⟨X⟩ ⊗ k⟨Y⟩` on normal words `X*Y*`.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorUniverse {
    pub x: Alphabet,
    pub y: Alphabet,
    pub order: TensorOrder,
}

impl TensorUniverse {
    pub fn new(x: Alphabet, y: Alphabet, order: TensorOrder) -> Self {
        TensorUniverse { x, y, order }
    }
}

impl Universe for TensorUniverse {
    type Mono = NormalWord;

    fn kind(&self) -> UniverseKind {
        UniverseKind::Tensor
    }
    fn one(&self) -> NormalWord {
        NormalWord::one()
    }
    fn mul(&self, a: &NormalWord, b: &NormalWord) -> NormalWord {
        a.concat(b)
    }
    fn mul3(&self, a: &NormalWord, m: &NormalWord, b: &NormalWord) -> NormalWord {
        NormalWord::new(
            Word::concat3(&a.x, &m.x, &b.x),
            Word::concat3(&a.y, &m.y, &b.y),
        )
    }
    fn degree(&self, m: &NormalWord) -> usize {
        m.degree()
    }
    fn cmp(&self, a: &NormalWord, b: &NormalWord) -> Ordering {
        self.order.cmp(a, b)
    }
    fn occurrences(&self, m: &NormalWord, pattern: &NormalWord) -> Vec<(NormalWord, NormalWord)> {
        let ys = factorizations(&m.y, &pattern.y);
        if ys.is_empty() {
            return Vec::new();
        }
        let mut out = Vec::new();
        for (ax, bx) in factorizations(&m.x, &pattern.x) {
            for (ay, by) in &ys {
                out.push((
                    NormalWord::new(ax.clone(), ay.clone()),
                    NormalWord::new(bx.clone(), by.clone()),
                ));
            }
        }
        out
    }
    fn first_occurrence(
        &self,
        m: &NormalWord,
        pattern: &NormalWord,
    ) -> Option<(NormalWord, NormalWord)> {
        let i = m.x.find_from(&pattern.x, 0)?;
        let j = m.y.find_from(&pattern.y, 0)?;
        Some((
            NormalWord::new(m.x.slice(0, i), m.y.slice(0, j)),
            NormalWord::new(
                m.x.slice(i + pattern.x.len(), m.x.len()),
                m.y.slice(j + pattern.y.len(), m.y.len()),
            ),
        ))
    }
    fn divides(&self, pattern: &NormalWord, m: &NormalWord) -> bool {
        m.x.contains(&pattern.x) && m.y.contains(&pattern.y)
    }
    fn generators(&self) -> Vec<NormalWord> {
        let xs = (0..self.x.len() as Letter).map(|l| NormalWord::new(Word::letter(l), Word::one()));
        let ys = (0..self.y.len() as Letter).map(|l| NormalWord::new(Word::one(), Word::letter(l)));
        xs.chain(ys).collect()
    }
    fn monomials_of_degree(&self, d: usize) -> Vec<NormalWord> {
        let mut out = Vec::new();
        for i in 0..=d {
            let xs = words_of_length(self.x.len(), i);
            let ys = words_of_length(self.y.len(), d - i);
            for x in &xs {
                for y in &ys {
                    out.push(NormalWord::new(x.clone(), y.clone()));
                }
            }
        }
        out
    }
    fn compositions(
        &self,
        f: &NormalWord,
        g: &NormalWord,
        self_pair: bool,
    ) -> Vec<CompositionFamily<NormalWord>> {
        compositions::tensor_families(f, g, self_pair, !self.x.is_empty(), !self.y.is_empty())
    }
    fn instantiate(
        &self,
        fam: &CompositionFamily<NormalWord>,
        param: &Word,
    ) -> Result<Ambiguity<NormalWord>, CompositionError> {
        compositions::check_param(fam, param, self)?;
        Ok(compositions::instantiate_tensor(fam, param))
    }
    fn param_alphabet(&self, slot: ParamSlot) -> Option<&Alphabet> {
        match slot {
            ParamSlot::None => None,
            ParamSlot::X => Some(&self.x),
            ParamSlot::Y => Some(&self.y),
        }
    }
    fn fmt_mono(&self, m: &NormalWord, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::monoids::fmt_pair(
            f,
            &m.x.fmt_with(&self.x),
            m.x.is_empty(),
            &m.y.fmt_with(&self.y),
            m.y.is_empty(),
        )
    }
    fn parse_generator(&self, name: &str) -> Option<NormalWord> {
        if let Some(l) = self.x.index_of(name) {
            return Some(NormalWord::new(Word::letter(l), Word::one()));
        }
        self.y
            .index_of(name)
            .map(|l| NormalWord::new(Word::one(), Word::letter(l)))
    }
    fn generator_names(&self) -> Vec<String> {
        self.x
            .names()
            .iter()
            .chain(self.y.names())
            .cloned()
            .collect()
    }
}

/// `k[X] ⊗ k⟨Y⟩` on mixed monomials `[X]Y*`.
#[derive(Debug, Clone, PartialEq)]
pub struct MixedUniverse {
    pub x: Alphabet,
    pub y: Alphabet,
    pub order: MixedOrder,
}

impl MixedUniverse {
    pub fn new(x: Alphabet, y: Alphabet, order: MixedOrder) -> Self {
        MixedUniverse { x, y, order }
    }
}

impl Universe for MixedUniverse {
    type Mono = MixedMonomial;

    fn kind(&self) -> UniverseKind {
        UniverseKind::Mixed
    }
    fn one(&self) -> MixedMonomial {
        MixedMonomial::one()
    }
    fn mul(&self, a: &MixedMonomial, b: &MixedMonomial) -> MixedMonomial {
        a.mul(b)
    }
    fn degree(&self, m: &MixedMonomial) -> usize {
        m.degree()
    }
    fn cmp(&self, a: &MixedMonomial, b: &MixedMonomial) -> Ordering {
        self.order.cmp(a, b)
    }
    fn occurrences(
        &self,
        m: &MixedMonomial,
        pattern: &MixedMonomial,
    ) -> Vec<(MixedMonomial, MixedMonomial)> {
        let Some(q) = m.x.quotient(&pattern.x) else {
            return Vec::new();
        };
        factorizations(&m.y, &pattern.y)
            .into_iter()
            .map(|(a, b)| {
                (
                    MixedMonomial::new(q.clone(), a),
                    MixedMonomial::new(CommMonomial::one(), b),
                )
            })
            .collect()
    }
    fn first_occurrence(
        &self,
        m: &MixedMonomial,
        pattern: &MixedMonomial,
    ) -> Option<(MixedMonomial, MixedMonomial)> {
        let q = m.x.quotient(&pattern.x)?;
        let j = m.y.find_from(&pattern.y, 0)?;
        Some((
            MixedMonomial::new(q, m.y.slice(0, j)),
            MixedMonomial::new(
                CommMonomial::one(),
                m.y.slice(j + pattern.y.len(), m.y.len()),
            ),
        ))
    }
    fn divides(&self, pattern: &MixedMonomial, m: &MixedMonomial) -> bool {
        pattern.x.divides(&m.x) && m.y.contains(&pattern.y)
    }
    fn generators(&self) -> Vec<MixedMonomial> {
        let xs = (0..self.x.len() as Letter)
            .map(|l| MixedMonomial::new(CommMonomial::var(l), Word::one()));
        let ys = (0..self.y.len() as Letter)
            .map(|l| MixedMonomial::new(CommMonomial::one(), Word::letter(l)));
        xs.chain(ys).collect()
    }
    fn monomials_of_degree(&self, d: usize) -> Vec<MixedMonomial> {
        let mut out = Vec::new();
        for i in 0..=d {
            let xs = comm_monomials_of_degree(self.x.len(), i);
            let ys = words_of_length(self.y.len(), d - i);
            for x in &xs {
                for y in &ys {
                    out.push(MixedMonomial::new(x.clone(), y.clone()));
                }
            }
        }
        out
    }
    fn right_multipliers(&self, d: usize) -> Vec<MixedMonomial> {
        words_of_length(self.y.len(), d)
            .into_iter()
            .map(|y| MixedMonomial::new(CommMonomial::one(), y))
            .collect()
    }
    fn compositions(
        &self,
        f: &MixedMonomial,
        g: &MixedMonomial,
        self_pair: bool,
    ) -> Vec<CompositionFamily<MixedMonomial>> {
        compositions::mixed_families(f, g, self_pair, self.order.x)
    }
    fn instantiate(
        &self,
        fam: &CompositionFamily<MixedMonomial>,
        param: &Word,
    ) -> Result<Ambiguity<MixedMonomial>, CompositionError> {
        compositions::check_param(fam, param, self)?;
        Ok(compositions::instantiate_mixed(fam, param))
    }
    fn param_alphabet(&self, slot: ParamSlot) -> Option<&Alphabet> {
        match slot {
            ParamSlot::Y => Some(&self.y),
            _ => None,
        }
    }
    fn fmt_mono(&self, m: &MixedMonomial, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::monoids::fmt_pair(
            f,
            &m.x.fmt_with(&self.x),
            m.x.is_one(),
            &m.y.fmt_with(&self.y),
            m.y.is_empty(),
        )
    }
    fn parse_generator(&self, name: &str) -> Option<MixedMonomial> {
        if let Some(l) = self.x.index_of(name) {
            return Some(MixedMonomial::new(CommMonomial::var(l), Word::one()));
        }
        self.y
            .index_of(name)
            .map(|l| MixedMonomial::new(CommMonomial::one(), Word::letter(l)))
    }
    fn generator_names(&self) -> Vec<String> {
        self.x
            .names()
            .iter()
            .chain(self.y.names())
            .cloned()
            .collect()
    }
}

/// The free algebra on `X ∪ Y` with every `y` above every `x`.
pub fn free_on_union(
    x: &Alphabet,
    y: &Alphabet,
) -> Result<FreeUniverse, crate::monoids::MonoidError> {
    Ok(FreeUniverse::new(x.join(y)?, WordOrder::DegLex))
}

pub fn side_alphabet(side: Side, n: usize) -> Alphabet {
    match side {
        Side::X => Alphabet::indexed(Side::X, "x", n),
        Side::Y => Alphabet::indexed(Side::Y, "y", n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_counts() {
        assert_eq!(words_of_length(3, 2).len(), 9);
        assert_eq!(comm_monomials_of_degree(3, 2).len(), 6);
        assert_eq!(comm_monomials_of_degree(0, 0), vec![CommMonomial::one()]);
        let t = TensorUniverse::new(
            side_alphabet(Side::X, 2),
            side_alphabet(Side::Y, 1),
            TensorOrder::default(),
        );
        // sum_i 2^i * 1 for i = 0..=2
        assert_eq!(t.monomials_of_degree(2).len(), 7);
        let m = MixedUniverse::new(
            side_alphabet(Side::X, 2),
            side_alphabet(Side::Y, 1),
            MixedOrder::default(),
        );
        assert_eq!(m.monomials_of_degree(2).len(), 3 + 2 + 1);
    }

    #[test]
    fn tensor_occurrences() {
        let t = TensorUniverse::new(
            side_alphabet(Side::X, 2),
            side_alphabet(Side::Y, 2),
            TensorOrder::default(),
        );
        let m = NormalWord::new(Word::from_letters(&[0, 0]), Word::from_letters(&[1, 1]));
        let p = NormalWord::new(Word::from_letters(&[0]), Word::from_letters(&[1]));
        let occ = t.occurrences(&m, &p);
        assert_eq!(occ.len(), 4);
        for (a, b) in &occ {
            assert_eq!(&t.mul3(a, &p, b), &m);
        }
        assert_eq!(t.first_occurrence(&m, &p), Some(occ[0].clone()));
    }

    #[test]
    fn mixed_occurrences() {
        let u = MixedUniverse::new(
            side_alphabet(Side::X, 2),
            side_alphabet(Side::Y, 2),
            MixedOrder::default(),
        );
        let m = MixedMonomial::new(
            CommMonomial::from_exponents(&[1, 2]),
            Word::from_letters(&[0, 1, 0]),
        );
        let p = MixedMonomial::new(
            CommMonomial::from_exponents(&[0, 1]),
            Word::from_letters(&[0]),
        );
        let occ = u.occurrences(&m, &p);
        assert_eq!(occ.len(), 2);
        for (a, b) in &occ {
            assert_eq!(&u.mul3(a, &p, b), &m);
        }
    }
}
