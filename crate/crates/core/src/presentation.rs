//! Line-oriented presentation files.
//!
//! ```text
//! # comment
//! field Q                  # or F7
//! alphabet X: x1 < x2
//! alphabet Y: y1
//! universe tensor          # free | commutative | tensor | mixed
//! order tensor(deglex,deglex)
//! rel y1*x1 = x1*y1
//! rel 3/2*x1^2;y1 - x2 + 1
//! ```
//!
//! With `universe free` and both alphabets declared, the relations live in
//! the free algebra on `X ∪ Y` with every `y` above every `x`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use thiserror::Error;

use crate::monoids::{Alphabet, Side};
use crate::orders::{CommOrder, MixedOrder, TensorOrder, WordOrder};
use crate::poly::{Polynomial, Ring};
use crate::scalar::{Field, Scalar};
use crate::universe::{
    CommUniverse, FreeUniverse, MixedUniverse, TensorUniverse, Universe, UniverseKind,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{line}:{col}: syntax error: {msg}")]
    Syntax {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("{line}:{col}: unknown generator `{name}`")]
    UnknownGenerator {
        line: usize,
        col: usize,
        name: String,
    },
    #[error("{line}:{col}: order `{order}` does not apply to the {universe} universe")]
    OrderMismatch {
        line: usize,
        col: usize,
        order: String,
        universe: UniverseKind,
    },
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        col,
        msg: msg.into(),
    }
}

/// Parsed relations together with the ring they live in.
#[derive(Debug, Clone)]
pub enum Relations {
    Free(Arc<Ring<FreeUniverse>>, Vec<Polynomial<FreeUniverse>>),
    Commutative(Arc<Ring<CommUniverse>>, Vec<Polynomial<CommUniverse>>),
    Tensor(Arc<Ring<TensorUniverse>>, Vec<Polynomial<TensorUniverse>>),
    Mixed(Arc<Ring<MixedUniverse>>, Vec<Polynomial<MixedUniverse>>),
}

impl Relations {
    pub fn kind(&self) -> UniverseKind {
        match self {
            Relations::Free(..) => UniverseKind::Free,
            Relations::Commutative(..) => UniverseKind::Commutative,
            Relations::Tensor(..) => UniverseKind::Tensor,
            Relations::Mixed(..) => UniverseKind::Mixed,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Relations::Free(_, v) => v.len(),
            Relations::Commutative(_, v) => v.len(),
            Relations::Tensor(_, v) => v.len(),
            Relations::Mixed(_, v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn order_name(&self) -> String {
        match self {
            Relations::Free(r, _) => r.universe.order.to_string(),
            Relations::Commutative(r, _) => r.universe.order.to_string(),
            Relations::Tensor(r, _) => r.universe.order.to_string(),
            Relations::Mixed(r, _) => r.universe.order.to_string(),
        }
    }

    fn lines(&self) -> Vec<String> {
        fn show<U: Universe>(v: &[Polynomial<U>]) -> Vec<String> {
            v.iter().map(|p| p.to_string()).collect()
        }
        match self {
            Relations::Free(_, v) => show(v),
            Relations::Commutative(_, v) => show(v),
            Relations::Tensor(_, v) => show(v),
            Relations::Mixed(_, v) => show(v),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Presentation {
    pub field: Field,
    pub x: Alphabet,
    pub y: Option<Alphabet>,
    pub relations: Relations,
    /// Remarks made while reading, e.g. relations that vanished.
    pub notes: Vec<String>,
}

/// Command-line replacements for the file's `field` and `order` lines.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub field: Option<Field>,
    pub order: Option<String>,
}

impl Presentation {
    pub fn kind(&self) -> UniverseKind {
        self.relations.kind()
    }

    pub fn parse(text: &str) -> Result<Presentation, ParseError> {
        Presentation::parse_with(text, &Overrides::default())
    }

    pub fn parse_with(text: &str, ov: &Overrides) -> Result<Presentation, ParseError> {
        let mut field = Field::Rational;
        let mut x: Option<Alphabet> = None;
        let mut y: Option<Alphabet> = None;
        let mut universe: Option<(UniverseKind, usize)> = None;
        let mut order: Option<(String, usize, usize)> = None;
        let mut rels: Vec<(String, usize, usize)> = Vec::new();
        for (ln, raw) in text.lines().enumerate() {
            let line = ln + 1;
            let content = raw.split('#').next().unwrap_or("");
            let trimmed = content.trim_start();
            if trimmed.trim().is_empty() {
                continue;
            }
            let indent = content.len() - trimmed.len();
            let (word, rest) = trimmed
                .split_once(char::is_whitespace)
                .unwrap_or((trimmed, ""));
            let rest_col = indent + word.len() + 2 + (rest.len() - rest.trim_start().len());
            let rest_t = rest.trim();
            match word {
                "field" => {
                    field = rest_t
                        .parse()
                        .map_err(|_| syntax(line, rest_col, format!("unknown field `{rest_t}`")))?;
                }
                "alphabet" => {
                    let (side, names) = rest_t.split_once(':').ok_or_else(|| {
                        syntax(line, rest_col, "expected `alphabet X: a < b < ...`")
                    })?;
                    let side = match side.trim() {
                        "X" => Side::X,
                        "Y" => Side::Y,
                        s => {
                            return Err(syntax(
                                line,
                                rest_col,
                                format!("unknown alphabet `{s}`, expected X or Y"),
                            ))
                        }
                    };
                    let names: Vec<&str> = if names.trim().is_empty() {
                        Vec::new()
                    } else {
                        names.split('<').map(str::trim).collect()
                    };
                    for n in &names {
                        if !is_ident(n) || n.chars().all(|c| c.is_ascii_digit()) {
                            return Err(syntax(
                                line,
                                rest_col,
                                format!("bad generator name `{n}`"),
                            ));
                        }
                    }
                    let a = Alphabet::new(side, names.iter().copied())
                        .map_err(|e| syntax(line, rest_col, e.to_string()))?;
                    match side {
                        Side::X => x = Some(a),
                        Side::Y => y = Some(a),
                    }
                }
                "universe" => {
                    let k = match rest_t {
                        "free" => UniverseKind::Free,
                        "commutative" => UniverseKind::Commutative,
                        "tensor" => UniverseKind::Tensor,
                        "mixed" => UniverseKind::Mixed,
                        s => return Err(syntax(line, rest_col, format!("unknown universe `{s}`"))),
                    };
                    universe = Some((k, line));
                }
                "order" => order = Some((rest_t.to_string(), line, rest_col)),
                "rel" => rels.push((rest.to_string(), line, indent + word.len() + 2)),
                w => return Err(syntax(line, indent + 1, format!("unknown directive `{w}`"))),
            }
        }
        if let Some(f) = ov.field {
            field = f;
        }
        if let Some(o) = &ov.order {
            order = Some((o.clone(), 0, 0));
        }
        let x = x.unwrap_or_else(|| Alphabet::empty(Side::X));
        if let Some(y) = &y {
            if let Some(n) = y.names().iter().find(|n| x.index_of(n).is_some()) {
                return Err(syntax(
                    0,
                    0,
                    format!("generator `{n}` declared in both alphabets"),
                ));
            }
        }
        let kind = universe.map(|u| u.0).unwrap_or(if y.is_some() {
            UniverseKind::Tensor
        } else {
            UniverseKind::Free
        });
        if kind == UniverseKind::Commutative && y.as_ref().is_some_and(|a| !a.is_empty()) {
            let line = universe.map_or(0, |u| u.1);
            return Err(syntax(
                line,
                1,
                "the commutative universe takes a single alphabet X",
            ));
        }
        let y_alpha = y.clone().unwrap_or_else(|| Alphabet::empty(Side::Y));
        let mismatch = |(o, line, col): &(String, usize, usize)| ParseError::OrderMismatch {
            line: *line,
            col: *col,
            order: o.clone(),
            universe: kind,
        };
        let mut notes = Vec::new();
        let relations = match kind {
            UniverseKind::Free => {
                let ord: WordOrder = match &order {
                    Some(o) => o.0.parse().map_err(|_| mismatch(o))?,
                    None => WordOrder::DegLex,
                };
                let alphabet = x.join(&y_alpha).map_err(|e| syntax(0, 0, e.to_string()))?;
                let ring = Ring::new(field, FreeUniverse::new(alphabet, ord));
                let ps = parse_all(&ring, &rels, &mut notes)?;
                Relations::Free(ring, ps)
            }
            UniverseKind::Commutative => {
                let ord: CommOrder = match &order {
                    Some(o) => o.0.parse().map_err(|_| mismatch(o))?,
                    None => CommOrder::DegLex,
                };
                let ring = Ring::new(field, CommUniverse::new(x.clone(), ord));
                let ps = parse_all(&ring, &rels, &mut notes)?;
                Relations::Commutative(ring, ps)
            }
            UniverseKind::Tensor => {
                let ord: TensorOrder = match &order {
                    Some(o) => o.0.parse().map_err(|_| mismatch(o))?,
                    None => TensorOrder::default(),
                };
                let ring = Ring::new(field, TensorUniverse::new(x.clone(), y_alpha.clone(), ord));
                let ps = parse_all(&ring, &rels, &mut notes)?;
                Relations::Tensor(ring, ps)
            }
            UniverseKind::Mixed => {
                let ord: MixedOrder = match &order {
                    Some(o) => o.0.parse().map_err(|_| mismatch(o))?,
                    None => MixedOrder::default(),
                };
                let ring = Ring::new(field, MixedUniverse::new(x.clone(), y_alpha.clone(), ord));
                let ps = parse_all(&ring, &rels, &mut notes)?;
                Relations::Mixed(ring, ps)
            }
        };
        Ok(Presentation {
            field,
            x,
            y,
            relations,
            notes,
        })
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "field {}", self.field)?;
        writeln!(f, "alphabet X: {}", self.x.names().join(" < "))?;
        if let Some(y) = &self.y {
            writeln!(f, "alphabet Y: {}", y.names().join(" < "))?;
        }
        writeln!(f, "universe {}", self.kind())?;
        writeln!(f, "order {}", self.relations.order_name())?;
        for r in self.relations.lines() {
            writeln!(f, "rel {r}")?;
        }
        Ok(())
    }
}

fn is_ident(s: &str) -> bool {
    let mut cs = s.chars();
    matches!(cs.next(), Some(c) if c.is_alphabetic() || c == '_')
        && cs.all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

fn parse_all<U: Universe>(
    ring: &Arc<Ring<U>>,
    rels: &[(String, usize, usize)],
    notes: &mut Vec<String>,
) -> Result<Vec<Polynomial<U>>, ParseError> {
    let mut out = Vec::new();
    for (text, line, col) in rels {
        let p = parse_relation(ring, text, *line, *col)?;
        if p.is_zero() {
            notes.push(format!(
                "line {line}: relation `{}` is zero in this universe; dropped",
                text.trim()
            ));
            continue;
        }
        out.push(p);
    }
    Ok(out)
}

/// `u = v` or a bare polynomial; `col` is the column of `text` in its line.
pub fn parse_relation<U: Universe>(
    ring: &Arc<Ring<U>>,
    text: &str,
    line: usize,
    col: usize,
) -> Result<Polynomial<U>, ParseError> {
    match text.find('=') {
        Some(i) => {
            let lhs = parse_polynomial_at(ring, &text[..i], line, col)?;
            let rhs = parse_polynomial_at(ring, &text[i + 1..], line, col + i + 1)?;
            Ok(lhs.try_sub(&rhs).expect("same ring"))
        }
        None => parse_polynomial_at(ring, text, line, col),
    }
}

pub fn parse_polynomial<U: Universe>(
    ring: &Arc<Ring<U>>,
    text: &str,
) -> Result<Polynomial<U>, ParseError> {
    parse_polynomial_at(ring, text, 1, 1)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Semi,
    Slash,
    Caret,
}

fn lex(text: &str, line: usize, col: usize) -> Result<Vec<(Tok, usize)>, ParseError> {
    let cs: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let (pos, c) = cs[i];
        let at = col + text[..pos].chars().count();
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            ';' => Some(Tok::Semi),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            _ => None,
        };
        if let Some(t) = single {
            out.push((t, at));
            i += 1;
            continue;
        }
        let start = i;
        if c.is_ascii_digit() {
            while i < cs.len() && cs[i].1.is_ascii_digit() {
                i += 1;
            }
            let s: String = cs[start..i].iter().map(|p| p.1).collect();
            out.push((Tok::Num(s), at));
        } else if c.is_alphabetic() || c == '_' {
            while i < cs.len() && (cs[i].1.is_alphanumeric() || cs[i].1 == '_' || cs[i].1 == '\'') {
                i += 1;
            }
            let s: String = cs[start..i].iter().map(|p| p.1).collect();
            out.push((Tok::Ident(s), at));
        } else {
            return Err(syntax(line, at, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

fn parse_polynomial_at<U: Universe>(
    ring: &Arc<Ring<U>>,
    text: &str,
    line: usize,
    col: usize,
) -> Result<Polynomial<U>, ParseError> {
    let toks = lex(text, line, col)?;
    let u = &ring.universe;
    let field = ring.field;
    let end_col = col + text.chars().count();
    let mut terms: Vec<(U::Mono, Scalar)> = Vec::new();
    let mut k = 0;
    let peek = |k: usize| toks.get(k).map(|t| &t.0);
    let at = |k: usize| toks.get(k).map_or(end_col, |t| t.1);
    if toks.is_empty() {
        return Err(syntax(line, col, "empty polynomial"));
    }
    let mut first = true;
    while k < toks.len() {
        let mut sign = 1i64;
        match peek(k) {
            Some(Tok::Plus) => k += 1,
            Some(Tok::Minus) => {
                sign = -1;
                k += 1;
            }
            _ if first => {}
            _ => return Err(syntax(line, at(k), "expected `+` or `-`")),
        }
        first = false;
        let mut coeff = field.from_i64(sign);
        let mut mono = u.one();
        let mut factors = 0;
        loop {
            match peek(k) {
                Some(Tok::Num(n)) => {
                    let num: BigInt = n.parse().expect("digits");
                    k += 1;
                    let c = if peek(k) == Some(&Tok::Slash) {
                        k += 1;
                        let Some(Tok::Num(d)) = peek(k) else {
                            return Err(syntax(line, at(k), "expected a denominator"));
                        };
                        let den: BigInt = d.parse().expect("digits");
                        let c = field
                            .from_ratio(&num, &den)
                            .map_err(|e| syntax(line, at(k), e.to_string()))?;
                        k += 1;
                        c
                    } else {
                        field.from_bigint(&num)
                    };
                    coeff = &coeff * &c;
                }
                Some(Tok::Ident(name)) => {
                    let g =
                        u.parse_generator(name)
                            .ok_or_else(|| ParseError::UnknownGenerator {
                                line,
                                col: at(k),
                                name: name.clone(),
                            })?;
                    k += 1;
                    let mut exp = 1u32;
                    if peek(k) == Some(&Tok::Caret) {
                        k += 1;
                        let Some(Tok::Num(e)) = peek(k) else {
                            return Err(syntax(line, at(k), "expected an exponent"));
                        };
                        exp = e
                            .parse()
                            .map_err(|_| syntax(line, at(k), "exponent too large"))?;
                        k += 1;
                    }
                    for _ in 0..exp {
                        mono = u.mul(&mono, &g);
                    }
                }
                _ => return Err(syntax(line, at(k), "expected a coefficient or generator")),
            }
            factors += 1;
            match peek(k) {
                Some(Tok::Star) | Some(Tok::Semi) => k += 1,
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) => {}
                _ => break,
            }
        }
        debug_assert!(factors > 0);
        terms.push((mono, coeff));
    }
    Ok(Polynomial::from_terms(ring, terms))
}
