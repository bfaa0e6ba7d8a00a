//! Brute-force certification by exact linear algebra.
//!
//! The slice of `Id(S)` at degree `d` is spanned by all products `a·s·b`
//! whose terms have degree at most `d`. Columns are monomials of degree
//! `≤ d`, sorted by degree and then by the active order, both descending,
//! so pivots of a semi-echelon form are leading monomials and per-degree
//! pivot counts give per-degree ranks. None of this uses the rewriting
//! machinery.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::par::{self, Parallelism};
use crate::poly::Polynomial;
use crate::scalar::{Field, Scalar};
use crate::universe::Universe;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("degree {degree} exceeds the slice bound {bound}")]
    DegreeOutOfBound { degree: usize, bound: usize },
    #[error("zero polynomial has no leading monomial")]
    ZeroPolynomial,
}

type Row<C> = Vec<(usize, C)>;

/// Row operations for one coefficient domain.
trait Kernel {
    type C: Clone + Send + Sync;
    fn convert(&self, row: Vec<(usize, &Scalar)>) -> Row<Self::C>;
    /// Cancels the first entry of `r` (same column as `p`'s first entry).
    fn eliminate(&self, r: &Row<Self::C>, p: &Row<Self::C>) -> Row<Self::C>;
    fn normalize(&self, r: &mut Row<Self::C>);
}

/// Fraction-free integer rows: `r ← p₀·r − r₀·p`, then divide by content.
struct IntKernel;

impl Kernel for IntKernel {
    type C = BigInt;

    fn convert(&self, row: Vec<(usize, &Scalar)>) -> Row<BigInt> {
        let mut den = BigInt::one();
        for (_, c) in &row {
            den = den.lcm(c.as_ratio().expect("rational scalar").1);
        }
        row.into_iter()
            .map(|(i, c)| {
                let (n, d) = c.as_ratio().unwrap();
                (i, n * (&den / d))
            })
            .collect()
    }

    fn eliminate(&self, r: &Row<BigInt>, p: &Row<BigInt>) -> Row<BigInt> {
        let (r0, p0) = (&r[0].1, &p[0].1);
        let g = r0.gcd(p0);
        let (a, b) = (p0 / &g, r0 / &g);
        let mut out = merge(r, p, |x| &a * x, |y| -(&b * y), |v: &BigInt| v.is_zero());
        self.normalize(&mut out);
        out
    }

    fn normalize(&self, r: &mut Row<BigInt>) {
        let Some(first) = r.first() else { return };
        let mut g = first.1.abs();
        for (_, c) in r.iter().skip(1) {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        let flip = first.1.is_negative();
        if !g.is_one() || flip {
            let g = if flip { -g } else { g };
            for (_, c) in r.iter_mut() {
                *c = &*c / &g;
            }
        }
    }
}

/// Rows over `F_p`, kept monic.
struct ModKernel {
    p: u64,
}

impl ModKernel {
    fn inv(&self, a: u64) -> u64 {
        // Fermat: a^(p-2)
        let (mut base, mut e, mut acc) = (a % self.p, self.p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        acc
    }
}

impl Kernel for ModKernel {
    type C = u64;

    fn convert(&self, row: Vec<(usize, &Scalar)>) -> Row<u64> {
        row.into_iter()
            .map(|(i, c)| match c {
                Scalar::Fp { v, .. } => (i, *v as u64),
                Scalar::Q(_) => unreachable!("field checked on entry"),
            })
            .collect()
    }

    fn eliminate(&self, r: &Row<u64>, p: &Row<u64>) -> Row<u64> {
        let m = self.p;
        let r0 = r[0].1;
        merge(r, p, |x| *x, |y| (m - y * r0 % m) % m, |_| false)
            .into_iter()
            .map(|(i, v)| (i, v % m))
            .filter(|(_, v)| *v != 0)
            .collect()
    }

    fn normalize(&self, r: &mut Row<u64>) {
        let Some(first) = r.first() else { return };
        if first.1 != 1 {
            let inv = self.inv(first.1);
            for (_, c) in r.iter_mut() {
                *c = *c * inv % self.p;
            }
        }
    }
}

/// `f(r) + g(p)` over the union of columns, dropping entries `zero` flags.
fn merge<C: Clone>(
    r: &Row<C>,
    p: &Row<C>,
    f: impl Fn(&C) -> C,
    g: impl Fn(&C) -> C,
    zero: impl Fn(&C) -> bool,
) -> Row<C>
where
    for<'a> &'a C: std::ops::Add<&'a C, Output = C>,
{
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < p.len() {
        let take = match (r.get(i), p.get(j)) {
            (Some(a), Some(b)) => a.0.cmp(&b.0),
            (Some(_), None) => std::cmp::Ordering::Less,
            _ => std::cmp::Ordering::Greater,
        };
        let entry = match take {
            std::cmp::Ordering::Less => {
                i += 1;
                (r[i - 1].0, f(&r[i - 1].1))
            }
            std::cmp::Ordering::Greater => {
                j += 1;
                (p[j - 1].0, g(&p[j - 1].1))
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
                (r[i - 1].0, &f(&r[i - 1].1) + &g(&p[j - 1].1))
            }
        };
        if !zero(&entry.1) {
            out.push(entry);
        }
    }
    out
}

struct Echelon<K: Kernel> {
    kernel: K,
    pivots: HashMap<usize, Row<K::C>>,
}

impl<K: Kernel> Echelon<K> {
    /// Reduces `r` by leading columns until its lead is not a pivot.
    fn reduce(&self, mut r: Row<K::C>) -> Row<K::C> {
        while let Some(&(c, _)) = r.first() {
            match self.pivots.get(&c) {
                Some(p) => r = self.kernel.eliminate(&r, p),
                None => break,
            }
        }
        r
    }

    fn insert(&mut self, r: Row<K::C>) {
        let mut r = self.reduce(r);
        if let Some(&(c, _)) = r.first() {
            self.kernel.normalize(&mut r);
            self.pivots.insert(c, r);
        }
    }
}

enum Elim {
    Int(Echelon<IntKernel>),
    Mod(Echelon<ModKernel>),
}

/// The degree-`≤ d` slice of `Id(S)` in semi-echelon form.
pub struct IdealSlice<U: Universe> {
    universe: U,
    field: Field,
    bound: usize,
    columns: HashMap<U::Mono, usize>,
    monomials: Vec<U::Mono>,
    elim: Elim,
}

fn max_degree<U: Universe>(f: &Polynomial<U>) -> usize {
    f.terms()
        .iter()
        .map(|(m, _)| f.universe().degree(m))
        .max()
        .unwrap_or(0)
}

impl<U: Universe> IdealSlice<U> {
    pub fn new(
        basis: &[Polynomial<U>],
        universe: &U,
        field: Field,
        bound: usize,
        mode: Parallelism,
    ) -> Self {
        let u = universe;
        let mut monomials = Vec::new();
        for d in (0..=bound).rev() {
            let mut ms = u.monomials_of_degree(d);
            ms.sort_by(|a, b| u.cmp(b, a));
            monomials.extend(ms);
        }
        let columns: HashMap<U::Mono, usize> = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        // rows a·s·b, built in parallel per (s, deg a, deg b)
        let mut jobs = Vec::new();
        for (k, s) in basis.iter().enumerate() {
            let ds = max_degree(s);
            if s.is_zero() || ds > bound {
                continue;
            }
            for da in 0..=bound - ds {
                for db in 0..=bound - ds - da {
                    jobs.push((k, da, db));
                }
            }
        }
        let columns_ref = &columns;
        let blocks: Vec<Vec<Vec<(usize, Scalar)>>> = par::map(mode, &jobs, |&(k, da, db)| {
            let s = &basis[k];
            let lefts = u.monomials_of_degree(da);
            let rights = u.right_multipliers(db);
            let mut rows = Vec::with_capacity(lefts.len() * rights.len());
            for a in &lefts {
                for b in &rights {
                    let mut row: Vec<(usize, Scalar)> = s
                        .terms()
                        .iter()
                        .map(|(m, c)| (columns_ref[&u.mul3(a, m, b)], c.clone()))
                        .collect();
                    row.sort_by_key(|e| e.0);
                    rows.push(row);
                }
            }
            rows
        });
        let mut elim = match field {
            Field::Rational => Elim::Int(Echelon {
                kernel: IntKernel,
                pivots: HashMap::new(),
            }),
            Field::Prime(p) => Elim::Mod(Echelon {
                kernel: ModKernel { p: p as u64 },
                pivots: HashMap::new(),
            }),
        };
        for row in blocks.into_iter().flatten() {
            let entries: Vec<(usize, &Scalar)> = row.iter().map(|(i, c)| (*i, c)).collect();
            match &mut elim {
                Elim::Int(e) => {
                    let r = e.kernel.convert(entries);
                    e.insert(r);
                }
                Elim::Mod(e) => {
                    let r = e.kernel.convert(entries);
                    e.insert(r);
                }
            }
        }
        IdealSlice {
            universe: u.clone(),
            field,
            bound,
            columns,
            monomials,
            elim,
        }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn rank(&self) -> usize {
        match &self.elim {
            Elim::Int(e) => e.pivots.len(),
            Elim::Mod(e) => e.pivots.len(),
        }
    }

    fn pivot_columns(&self) -> Vec<usize> {
        match &self.elim {
            Elim::Int(e) => e.pivots.keys().copied().collect(),
            Elim::Mod(e) => e.pivots.keys().copied().collect(),
        }
    }

    /// Leading monomials of the slice.
    pub fn pivot_monomials(&self) -> Vec<U::Mono> {
        let mut cols = self.pivot_columns();
        cols.sort_unstable();
        cols.into_iter()
            .map(|c| self.monomials[c].clone())
            .collect()
    }

    /// `dim` of the quotient in each degree `0..=bound`.
    pub fn quotient_dims(&self) -> Vec<usize> {
        let mut dims: Vec<usize> = (0..=self.bound)
            .map(|d| {
                self.monomials
                    .iter()
                    .filter(|m| self.universe.degree(m) == d)
                    .count()
            })
            .collect();
        for c in self.pivot_columns() {
            dims[self.universe.degree(&self.monomials[c])] -= 1;
        }
        dims
    }

    pub fn member(&self, f: &Polynomial<U>) -> Result<bool, OracleError> {
        let degree = max_degree(f);
        if degree > self.bound {
            return Err(OracleError::DegreeOutOfBound {
                degree,
                bound: self.bound,
            });
        }
        assert_eq!(
            f.ring().field,
            self.field,
            "polynomial over a different field"
        );
        let mut row: Vec<(usize, &Scalar)> = f
            .terms()
            .iter()
            .map(|(m, c)| (self.columns[m], c))
            .collect();
        row.sort_by_key(|e| e.0);
        Ok(match &self.elim {
            Elim::Int(e) => e.reduce(e.kernel.convert(row)).is_empty(),
            Elim::Mod(e) => e.reduce(e.kernel.convert(row)).is_empty(),
        })
    }
}

/// Whether `f ∈ Id(S)` within degree `d`.
pub fn member<U: Universe>(
    f: &Polynomial<U>,
    basis: &[Polynomial<U>],
    d: usize,
) -> Result<bool, OracleError> {
    let degree = max_degree(f);
    if degree > d {
        return Err(OracleError::DegreeOutOfBound { degree, bound: d });
    }
    IdealSlice::new(
        basis,
        f.universe(),
        f.ring().field,
        d,
        Parallelism::default(),
    )
    .member(f)
}

/// Quotient dimensions in degrees `0..=d`.
pub fn quotient_dim<U: Universe>(
    basis: &[Polynomial<U>],
    universe: &U,
    field: Field,
    d: usize,
) -> Vec<usize> {
    IdealSlice::new(basis, universe, field, d, Parallelism::default()).quotient_dims()
}

/// Whether some leading monomial of `basis` divides the leading monomial of `f`.
pub fn leading_divisibility<U: Universe>(
    f: &Polynomial<U>,
    basis: &[Polynomial<U>],
) -> Result<bool, OracleError> {
    let m = f.lead_mono().ok_or(OracleError::ZeroPolynomial)?;
    let u = f.universe();
    Ok(basis
        .iter()
        .filter_map(|s| s.lead_mono())
        .any(|l| u.divides(l, m)))
}
