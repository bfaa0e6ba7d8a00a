//! Monomial orders for each universe.
//!
//! Generators are ranked by declaration order, `x1 < x2 < ...`. Every order
//! here is a monomial well order on its universe.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::monoids::{CommMonomial, MixedMonomial, NormalWord, Word};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown order `{0}`")]
pub struct UnknownOrder(pub String);

/// Orders on the free commutative monoid `[X]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum CommOrder {
    /// Total degree, ties broken by [`CommOrder::Lex`].
    #[default]
    DegLex,
    /// Exponent of the largest variable first; the larger exponent wins.
    Lex,
    /// Total degree, then exponent of the smallest variable first; the
    /// smaller exponent wins.
    DegRevLex,
}

impl CommOrder {
    pub fn cmp(&self, u: &CommMonomial, v: &CommMonomial) -> Ordering {
        match self {
            CommOrder::Lex => lex_comm(u, v),
            CommOrder::DegLex => u.degree().cmp(&v.degree()).then_with(|| lex_comm(u, v)),
            CommOrder::DegRevLex => u.degree().cmp(&v.degree()).then_with(|| {
                let n = u.exponents().len().max(v.exponents().len());
                for i in 0..n as u16 {
                    match u.exponent(i).cmp(&v.exponent(i)) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

fn lex_comm(u: &CommMonomial, v: &CommMonomial) -> Ordering {
    let n = u.exponents().len().max(v.exponents().len());
    for i in (0..n as u16).rev() {
        match u.exponent(i).cmp(&v.exponent(i)) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

impl fmt::Display for CommOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CommOrder::DegLex => "deglex",
            CommOrder::Lex => "lex",
            CommOrder::DegRevLex => "degrevlex",
        })
    }
}

impl FromStr for CommOrder {
    type Err = UnknownOrder;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "deglex" => Ok(CommOrder::DegLex),
            "lex" => Ok(CommOrder::Lex),
            "degrevlex" => Ok(CommOrder::DegRevLex),
            other => Err(UnknownOrder(other.to_string())),
        }
    }
}

/// Plain deg-lex on words: length first, then left-to-right lexicographic.
pub fn deglex_words(u: &Word, v: &Word) -> Ordering {
    u.len()
        .cmp(&v.len())
        .then_with(|| u.letters().cmp(v.letters()))
}

/// Orders on a free monoid `X*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum WordOrder {
    #[default]
    DegLex,
    /// Compare abelianizations under the commutative order, then break ties
    /// left-to-right lexicographically.
    EpsLift(CommOrder),
}

impl WordOrder {
    pub fn cmp(&self, u: &Word, v: &Word) -> Ordering {
        match self {
            WordOrder::DegLex => deglex_words(u, v),
            WordOrder::EpsLift(c) => cmp_eps(*c, u, v),
        }
    }
}

/// The lifted order on `X*`: `γ(u)` vs `γ(v)` in `[X]`, then lexicographic.
pub fn cmp_eps(order: CommOrder, u: &Word, v: &Word) -> Ordering {
    order
        .cmp(&u.abelianize(), &v.abelianize())
        .then_with(|| u.letters().cmp(v.letters()))
}

impl fmt::Display for WordOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordOrder::DegLex => write!(f, "deglex"),
            WordOrder::EpsLift(CommOrder::DegLex) => write!(f, "eps-lift"),
            WordOrder::EpsLift(c) => write!(f, "eps-lift({c})"),
        }
    }
}

impl FromStr for WordOrder {
    type Err = UnknownOrder;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s {
            "deglex" => return Ok(WordOrder::DegLex),
            "eps-lift" => return Ok(WordOrder::EpsLift(CommOrder::DegLex)),
            _ => {}
        }
        if let Some(inner) = call_args(s, "eps-lift") {
            return Ok(WordOrder::EpsLift(
                inner.parse().map_err(|_| UnknownOrder(s.to_string()))?,
            ));
        }
        Err(UnknownOrder(s.to_string()))
    }
}

/// Order on `[X]Y*`: the `Y` part decides first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct MixedOrder {
    pub x: CommOrder,
    pub y: WordOrder,
}

impl MixedOrder {
    pub fn cmp(&self, u: &MixedMonomial, v: &MixedMonomial) -> Ordering {
        self.y.cmp(&u.y, &v.y).then_with(|| self.x.cmp(&u.x, &v.x))
    }
}

impl fmt::Display for MixedOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == MixedOrder::default() {
            write!(f, "mixed-yfirst")
        } else {
            write!(f, "mixed-yfirst({},{})", self.x, self.y)
        }
    }
}

impl FromStr for MixedOrder {
    type Err = UnknownOrder;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "mixed-yfirst" {
            return Ok(MixedOrder::default());
        }
        let bad = || UnknownOrder(s.to_string());
        let inner = call_args(s, "mixed-yfirst").ok_or_else(bad)?;
        let (x, y) = split_pair(inner).ok_or_else(bad)?;
        Ok(MixedOrder {
            x: x.parse().map_err(|_| bad())?,
            y: y.parse().map_err(|_| bad())?,
        })
    }
}

/// Orders on normal words `X*Y*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TensorOrder {
    /// `u > v` iff `u^X > v^X`, or `u^X = v^X` and `u^Y > v^Y`.
    Product { x: WordOrder, y: WordOrder },
    /// Compare `γ(u^X)u^Y` in `[X]Y*`, then `u^X` lexicographically.
    Lifted(MixedOrder),
}

impl Default for TensorOrder {
    fn default() -> Self {
        TensorOrder::Product {
            x: WordOrder::DegLex,
            y: WordOrder::DegLex,
        }
    }
}

impl TensorOrder {
    pub fn cmp(&self, u: &NormalWord, v: &NormalWord) -> Ordering {
        match self {
            TensorOrder::Product { x, y } => x.cmp(&u.x, &v.x).then_with(|| y.cmp(&u.y, &v.y)),
            TensorOrder::Lifted(m) => cmp_lifted_tensor(m, u, v),
        }
    }
}

pub fn cmp_lifted_tensor(order: &MixedOrder, u: &NormalWord, v: &NormalWord) -> Ordering {
    let gu = MixedMonomial::new(u.x.abelianize(), u.y.clone());
    let gv = MixedMonomial::new(v.x.abelianize(), v.y.clone());
    order
        .cmp(&gu, &gv)
        .then_with(|| u.x.letters().cmp(v.x.letters()))
}

impl fmt::Display for TensorOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TensorOrder::Product { x, y } => write!(f, "tensor({x},{y})"),
            TensorOrder::Lifted(m) if *m == MixedOrder::default() => write!(f, "lifted-tensor"),
            TensorOrder::Lifted(m) => write!(f, "lifted-tensor({},{})", m.x, m.y),
        }
    }
}

impl FromStr for TensorOrder {
    type Err = UnknownOrder;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || UnknownOrder(s.to_string());
        match s {
            "deglex" | "tensor" => return Ok(TensorOrder::default()),
            "lifted-tensor" => return Ok(TensorOrder::Lifted(MixedOrder::default())),
            _ => {}
        }
        if let Some(inner) = call_args(s, "tensor") {
            let (x, y) = split_pair(inner).ok_or_else(bad)?;
            return Ok(TensorOrder::Product {
                x: x.parse().map_err(|_| bad())?,
                y: y.parse().map_err(|_| bad())?,
            });
        }
        if let Some(inner) = call_args(s, "lifted-tensor") {
            let (x, y) = split_pair(inner).ok_or_else(bad)?;
            return Ok(TensorOrder::Lifted(MixedOrder {
                x: x.parse().map_err(|_| bad())?,
                y: y.parse().map_err(|_| bad())?,
            }));
        }
        Err(bad())
    }
}

/// `name(args)` → `args`.
fn call_args<'a>(s: &'a str, name: &str) -> Option<&'a str> {
    s.strip_prefix(name)?
        .trim()
        .strip_prefix('(')?
        .strip_suffix(')')
}

/// Splits `a,b` at the top-level comma.
fn split_pair(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}
