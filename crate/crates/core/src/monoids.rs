//! Alphabets and the four monomial universes: free words, commutative
//! monomials, normal words `X*Y*` and mixed monomials `[X]Y*`.

use std::fmt;

use smallvec::SmallVec;
use thiserror::Error;

/// Index of a generator in its alphabet. Declaration order is the letter order.
pub type Letter = u16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    #[error("alphabet mismatch")]
    AlphabetMismatch,
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    X,
    Y,
}

/// Ordered, duplicate-free list of generator names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<String>,
    side: Side,
}

impl Alphabet {
    pub fn new<S: Into<String>>(
        side: Side,
        names: impl IntoIterator<Item = S>,
    ) -> Result<Self, MonoidError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(MonoidError::DuplicateGenerator(n.clone()));
            }
        }
        Ok(Alphabet { names, side })
    }

    /// `prefix1 < prefix2 < ... < prefix{n}`.
    pub fn indexed(side: Side, prefix: &str, n: usize) -> Self {
        Alphabet {
            names: (1..=n).map(|i| format!("{prefix}{i}")).collect(),
            side,
        }
    }

    pub fn empty(side: Side) -> Self {
        Alphabet {
            names: Vec::new(),
            side,
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, l: Letter) -> &str {
        &self.names[l as usize]
    }

    pub fn index_of(&self, name: &str) -> Option<Letter> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| i as Letter)
    }

    /// Concatenation of two alphabets; letters of `other` come after (and
    /// compare above) those of `self`.
    pub fn join(&self, other: &Alphabet) -> Result<Alphabet, MonoidError> {
        Alphabet::new(
            self.side,
            self.names.iter().chain(other.names.iter()).cloned(),
        )
    }
}

/// Element of a free monoid.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub SmallVec<[Letter; 8]>);

impl Word {
    pub fn one() -> Self {
        Word(SmallVec::new())
    }

    pub fn from_letters(letters: &[Letter]) -> Self {
        Word(SmallVec::from_slice(letters))
    }

    pub fn letter(l: Letter) -> Self {
        Word(smallvec::smallvec![l])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn concat3(a: &Word, m: &Word, b: &Word) -> Word {
        let mut v = SmallVec::with_capacity(a.len() + m.len() + b.len());
        v.extend_from_slice(&a.0);
        v.extend_from_slice(&m.0);
        v.extend_from_slice(&b.0);
        Word(v)
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word::from_letters(&self.0[from..to])
    }

    pub fn find_from(&self, pattern: &Word, start: usize) -> Option<usize> {
        let (n, m) = (self.len(), pattern.len());
        if m > n {
            return None;
        }
        (start..=n - m).find(|&i| self.0[i..i + m] == pattern.0[..])
    }

    pub fn contains(&self, pattern: &Word) -> bool {
        self.find_from(pattern, 0).is_some()
    }

    /// Letter counts: the image of the word in the free commutative monoid.
    pub fn abelianize(&self) -> CommMonomial {
        let mut exps: SmallVec<[u32; 6]> = SmallVec::new();
        for &l in self.letters() {
            if exps.len() <= l as usize {
                exps.resize(l as usize + 1, 0);
            }
            exps[l as usize] += 1;
        }
        CommMonomial(exps)
    }

    pub fn fmt_with<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        WordDisplay {
            word: self,
            alphabet,
        }
    }
}

struct WordDisplay<'a> {
    word: &'a Word,
    alphabet: &'a Alphabet,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let letters = self.word.letters();
        let mut i = 0;
        while i < letters.len() {
            let mut j = i;
            while j < letters.len() && letters[j] == letters[i] {
                j += 1;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.alphabet.name(letters[i]))?;
            if j - i > 1 {
                write!(f, "^{}", j - i)?;
            }
            i = j;
        }
        Ok(())
    }
}

/// Every `(a, b)` with `u = a·v·b`, left to right. Overlapping occurrences
/// are all reported.
pub fn factorizations(u: &Word, v: &Word) -> Vec<(Word, Word)> {
    let mut out = Vec::new();
    let mut start = 0;
    while let Some(i) = u.find_from(v, start) {
        out.push((u.slice(0, i), u.slice(i + v.len(), u.len())));
        start = i + 1;
    }
    out
}

/// Every `(b, a)` with `u·a = b·v` where a proper nonempty suffix of `u`
/// equals a proper prefix of `v`, i.e. the overlap is shorter than both
/// words. Ordered by decreasing overlap length.
pub fn overlaps(u: &Word, v: &Word) -> Vec<(Word, Word)> {
    let max = u.len().min(v.len());
    let mut out = Vec::new();
    for k in (1..max).rev() {
        if u.0[u.len() - k..] == v.0[..k] {
            out.push((u.slice(0, u.len() - k), v.slice(k, v.len())));
        }
    }
    out
}

/// Overlap lengths `k` with `0 < k < min(|u|,|v|)` such that the last `k`
/// letters of `u` are the first `k` letters of `v`.
pub(crate) fn overlap_lengths<'a>(
    u: &'a [Letter],
    v: &'a [Letter],
) -> impl Iterator<Item = usize> + 'a {
    let max = u.len().min(v.len());
    (1..max).filter(move |&k| u[u.len() - k..] == v[..k])
}

/// Element of the free commutative monoid, stored as an exponent vector
/// without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CommMonomial(SmallVec<[u32; 6]>);

impl CommMonomial {
    pub fn one() -> Self {
        CommMonomial(SmallVec::new())
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        let mut m = CommMonomial(SmallVec::from_slice(exps));
        m.trim();
        m
    }

    pub fn var(i: Letter) -> Self {
        let mut v = SmallVec::from_elem(0, i as usize + 1);
        v[i as usize] = 1;
        CommMonomial(v)
    }

    fn trim(&mut self) {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }

    pub fn exponent(&self, i: Letter) -> u32 {
        self.0.get(i as usize).copied().unwrap_or(0)
    }

    /// Exponents `l_1, l_2, ...` up to the last nonzero one.
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &CommMonomial) -> CommMonomial {
        let n = self.0.len().max(other.0.len());
        CommMonomial(
            (0..n as Letter)
                .map(|i| self.exponent(i) + other.exponent(i))
                .collect(),
        )
    }

    pub fn divides(&self, other: &CommMonomial) -> bool {
        self.0.len() <= other.0.len() && self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn quotient(&self, other: &CommMonomial) -> Option<CommMonomial> {
        if !other.divides(self) {
            return None;
        }
        let mut m = CommMonomial(
            (0..self.0.len() as Letter)
                .map(|i| self.exponent(i) - other.exponent(i))
                .collect(),
        );
        m.trim();
        Some(m)
    }

    pub fn lcm(&self, other: &CommMonomial) -> CommMonomial {
        let n = self.0.len().max(other.0.len());
        CommMonomial(
            (0..n as Letter)
                .map(|i| self.exponent(i).max(other.exponent(i)))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &CommMonomial) -> CommMonomial {
        let n = self.0.len().min(other.0.len());
        let mut m = CommMonomial(
            (0..n as Letter)
                .map(|i| self.exponent(i).min(other.exponent(i)))
                .collect(),
        );
        m.trim();
        m
    }

    /// The word listing the variables in ascending index order.
    pub fn ascending_word(&self) -> Word {
        let mut v = SmallVec::with_capacity(self.degree());
        for (i, &e) in self.0.iter().enumerate() {
            for _ in 0..e {
                v.push(i as Letter);
            }
        }
        Word(v)
    }

    /// Smallest and largest variable index occurring, or `None` for `1`.
    pub fn index_range(&self) -> Option<(Letter, Letter)> {
        let lo = self.0.iter().position(|&e| e > 0)?;
        Some((lo as Letter, (self.0.len() - 1) as Letter))
    }

    pub fn fmt_with<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        CommDisplay { m: self, alphabet }
    }
}

/// `(lcm, gcd)` of two commutative monomials.
pub fn comm_lcm_gcd(m: &CommMonomial, n: &CommMonomial) -> (CommMonomial, CommMonomial) {
    (m.lcm(n), m.gcd(n))
}

struct CommDisplay<'a> {
    m: &'a CommMonomial,
    alphabet: &'a Alphabet,
}

impl fmt::Display for CommDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.alphabet.name(i as Letter))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A normal word `u^X u^Y` of the tensor product.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct NormalWord {
    pub x: Word,
    pub y: Word,
}

impl NormalWord {
    pub fn new(x: Word, y: Word) -> Self {
        NormalWord { x, y }
    }

    pub fn one() -> Self {
        NormalWord::default()
    }

    pub fn degree(&self) -> usize {
        self.x.len() + self.y.len()
    }

    /// `uv = u^X v^X u^Y v^Y`.
    pub fn concat(&self, other: &NormalWord) -> NormalWord {
        NormalWord {
            x: self.x.concat(&other.x),
            y: self.y.concat(&other.y),
        }
    }
}

/// A mixed monomial `u^X u^Y` with commutative `X` part.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MixedMonomial {
    pub x: CommMonomial,
    pub y: Word,
}

impl MixedMonomial {
    pub fn new(x: CommMonomial, y: Word) -> Self {
        MixedMonomial { x, y }
    }

    pub fn one() -> Self {
        MixedMonomial::default()
    }

    pub fn degree(&self) -> usize {
        self.x.degree() + self.y.len()
    }

    pub fn mul(&self, other: &MixedMonomial) -> MixedMonomial {
        MixedMonomial {
            x: self.x.mul(&other.x),
            y: self.y.concat(&other.y),
        }
    }
}

/// Two-sided monomial formatting for `X;Y` pairs: the `;` part is omitted
/// when either side is trivial.
pub(crate) fn fmt_pair(
    f: &mut fmt::Formatter<'_>,
    x: &dyn fmt::Display,
    x_one: bool,
    y: &dyn fmt::Display,
    y_one: bool,
) -> fmt::Result {
    match (x_one, y_one) {
        (true, true) => write!(f, "1"),
        (false, true) => write!(f, "{x}"),
        (true, false) => write!(f, "{y}"),
        (false, false) => write!(f, "{x};{y}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(letters: &[Letter]) -> Word {
        Word::from_letters(letters)
    }

    #[test]
    fn normal_word_product() {
        let u = NormalWord::new(w(&[0]), w(&[0]));
        let v = NormalWord::new(w(&[1]), w(&[1]));
        assert_eq!(u.concat(&v), NormalWord::new(w(&[0, 1]), w(&[0, 1])));
        assert_eq!(NormalWord::one().concat(&u), u);
        let a = NormalWord::new(w(&[0, 1]), Word::one());
        let b = NormalWord::new(Word::one(), w(&[0]));
        assert_eq!(a.concat(&b), NormalWord::new(w(&[0, 1]), w(&[0])));
    }

    #[test]
    fn factorization_examples() {
        assert_eq!(
            factorizations(&w(&[0, 1, 0]), &w(&[0])),
            vec![(Word::one(), w(&[1, 0])), (w(&[0, 1]), Word::one())]
        );
        assert_eq!(
            factorizations(&w(&[0, 1]), &w(&[0, 1])),
            vec![(Word::one(), Word::one())]
        );
        assert_eq!(
            factorizations(&w(&[0, 0, 0]), &w(&[0, 0])),
            vec![(Word::one(), w(&[0])), (w(&[0]), Word::one())]
        );
        assert_eq!(factorizations(&w(&[0, 1]), &Word::one()).len(), 3);
        assert!(factorizations(&w(&[0]), &w(&[1])).is_empty());
    }

    #[test]
    fn overlap_examples() {
        assert_eq!(overlaps(&w(&[0, 1]), &w(&[1, 0])), vec![(w(&[0]), w(&[0]))]);
        assert_eq!(overlaps(&w(&[0, 0]), &w(&[0, 0])), vec![(w(&[0]), w(&[0]))]);
        assert!(overlaps(&w(&[0]), &w(&[1])).is_empty());
    }

    #[test]
    fn lcm_gcd_examples() {
        let m = CommMonomial::from_exponents(&[2, 1]);
        let n = CommMonomial::from_exponents(&[0, 1, 1]);
        let (l, g) = comm_lcm_gcd(&m, &n);
        assert_eq!(l, CommMonomial::from_exponents(&[2, 1, 1]));
        assert_eq!(g, CommMonomial::from_exponents(&[0, 1]));
        assert_eq!(
            comm_lcm_gcd(&m, &CommMonomial::one()),
            (m.clone(), CommMonomial::one())
        );
        let x1 = CommMonomial::var(0);
        assert_eq!(comm_lcm_gcd(&x1, &x1), (x1.clone(), x1.clone()));
    }

    #[test]
    fn display() {
        let a = Alphabet::indexed(Side::X, "x", 3);
        assert_eq!(w(&[0, 1, 0]).fmt_with(&a).to_string(), "x1*x2*x1");
        assert_eq!(w(&[0, 0, 2]).fmt_with(&a).to_string(), "x1^2*x3");
        assert_eq!(
            CommMonomial::from_exponents(&[2, 0, 1])
                .fmt_with(&a)
                .to_string(),
            "x1^2*x3"
        );
        assert_eq!(Word::one().fmt_with(&a).to_string(), "1");
        assert!(Alphabet::new(Side::X, ["a", "a"]).is_err());
    }

    fn word(max_len: usize) -> impl Strategy<Value = Word> {
        proptest::collection::vec(0u16..3, 0..=max_len).prop_map(|v| Word::from_letters(&v))
    }

    fn normal() -> impl Strategy<Value = NormalWord> {
        (word(4), word(4)).prop_map(|(x, y)| NormalWord::new(x, y))
    }

    proptest! {
        #[test]
        fn concat_monoid_laws(a in normal(), b in normal(), c in normal()) {
            prop_assert_eq!(a.concat(&b).concat(&c), a.concat(&b.concat(&c)));
            prop_assert_eq!(a.concat(&NormalWord::one()), a.clone());
            prop_assert_eq!(NormalWord::one().concat(&a), a);
        }

        #[test]
        fn factorizations_match_position_scan(u in word(12), v in word(4)) {
            let mut brute = Vec::new();
            for i in 0..=u.len() {
                if i + v.len() <= u.len() && u.letters()[i..i + v.len()] == v.letters()[..] {
                    brute.push((u.slice(0, i), u.slice(i + v.len(), u.len())));
                }
            }
            prop_assert_eq!(factorizations(&u, &v), brute);
        }

        #[test]
        fn overlaps_match_position_scan(u in word(12), v in word(12)) {
            let mut brute = Vec::new();
            for len in 1..=u.len() + v.len() {
                // u·a = b·v with |u| < len, |v| < len, len < |u| + |v|
                if len <= u.len() || len <= v.len() || len >= u.len() + v.len() {
                    continue;
                }
                let a = v.slice(u.len() + v.len() - len, v.len());
                let b = u.slice(0, len - v.len());
                if u.concat(&a) == b.concat(&v) {
                    brute.push((b, a));
                }
            }
            prop_assert_eq!(overlaps(&u, &v), brute);
        }
    }
}
