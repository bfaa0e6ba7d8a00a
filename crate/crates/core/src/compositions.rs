//! Compositions of pairs of monic polynomials.
//!
//! Leading monomials of the tensor universe are pairs of words, so an
//! ambiguity is described per component: the `X` parts of the two leading
//! words either contain one another, overlap properly, or sit apart with a
//! gap; likewise the `Y` parts. Every pairing except "apart in both" is a
//! composition case. Gaps carry a free word (the family parameter).
//!
//! A family is instantiated to an [`Ambiguity`] `w = fl·f̄·fr = gl·ḡ·gr`; the
//! composition polynomial is always `fl·f·fr - gl·g·gr`.

use std::fmt;

use thiserror::Error;

use crate::monoids::{overlap_lengths, Alphabet, CommMonomial, MixedMonomial, NormalWord, Word};
use crate::orders::CommOrder;
use crate::poly::Polynomial;
use crate::universe::{CommUniverse, FreeUniverse, MixedUniverse, TensorUniverse, Universe};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompositionError {
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("parameter does not apply to this family")]
    ParamNotApplicable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    First,
    Second,
}

/// Case tags. `Variant::First` is the variant whose free or overlapping
/// component has `f` on the left.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CompositionKind {
    FreeIntersection,
    FreeInclusion,
    XInclusionOnly(Variant),
    YInclusionOnly(Variant),
    XYInclusion,
    XYSkewInclusion,
    XIntersectionOnly(Variant),
    YIntersectionOnly(Variant),
    XYIntersection,
    XYSkewIntersection,
    XInclYInter(Variant),
    XInterYIncl(Variant),
    CommSPair,
    MzC1,
    MzC2,
    MzC3,
}

impl fmt::Display for CompositionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = |v: &Variant| if *v == Variant::First { 1 } else { 2 };
        match self {
            CompositionKind::FreeIntersection => write!(f, "Free-Intersection"),
            CompositionKind::FreeInclusion => write!(f, "Free-Inclusion"),
            CompositionKind::XInclusionOnly(x) => write!(f, "X-Inclusion-Only/w{}", v(x)),
            CompositionKind::YInclusionOnly(x) => write!(f, "Y-Inclusion-Only/w{}", v(x)),
            CompositionKind::XYInclusion => write!(f, "XY-Inclusion"),
            CompositionKind::XYSkewInclusion => write!(f, "XY-SkewInclusion"),
            CompositionKind::XIntersectionOnly(x) => write!(f, "X-Intersection-Only/w{}", v(x)),
            CompositionKind::YIntersectionOnly(x) => write!(f, "Y-Intersection-Only/w{}", v(x)),
            CompositionKind::XYIntersection => write!(f, "XY-Intersection"),
            CompositionKind::XYSkewIntersection => write!(f, "XY-SkewIntersection"),
            CompositionKind::XInclYInter(x) => write!(f, "XIncl-YInter/{}", v(x)),
            CompositionKind::XInterYIncl(x) => write!(f, "XInter-YIncl/{}", v(x)),
            CompositionKind::CommSPair => write!(f, "Comm-SPair"),
            CompositionKind::MzC1 => write!(f, "MZ-C1"),
            CompositionKind::MzC2 => write!(f, "MZ-C2"),
            CompositionKind::MzC3 => write!(f, "MZ-C3"),
        }
    }
}

/// Relative position of `p` (from `f̄`) and `q` (from `ḡ`) inside the
/// smallest word containing both.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Placement {
    /// `p = a·q·b`.
    Contains { a: Word, b: Word },
    /// `q = a·p·b` with `p ≠ q`.
    Within { a: Word, b: Word },
    /// Proper overlap of length `len`; `f_left` says which word starts first.
    Overlap { f_left: bool, len: usize },
    /// Disjoint, separated by the family parameter.
    Gap { f_left: bool },
}

impl Placement {
    fn mirror(&self) -> Placement {
        match self {
            Placement::Contains { a, b } if a.is_empty() && b.is_empty() => self.clone(),
            Placement::Contains { a, b } => Placement::Within {
                a: a.clone(),
                b: b.clone(),
            },
            Placement::Within { a, b } => Placement::Contains {
                a: a.clone(),
                b: b.clone(),
            },
            Placement::Overlap { f_left, len } => Placement::Overlap {
                f_left: !f_left,
                len: *len,
            },
            Placement::Gap { f_left } => Placement::Gap { f_left: !f_left },
        }
    }

    fn is_identity(&self) -> bool {
        matches!(self, Placement::Contains { a, b } if a.is_empty() && b.is_empty())
    }

    /// An inclusion of an empty word at an end of the other word: the two
    /// parts merely touch, the same shape as a gap filled with `ε`.
    fn is_adjacency(&self, p: &Word, q: &Word) -> bool {
        match self {
            Placement::Contains { a, b } => q.is_empty() && (a.is_empty() || b.is_empty()),
            Placement::Within { a, b } => p.is_empty() && (a.is_empty() || b.is_empty()),
            _ => false,
        }
    }

    fn is_inclusion(&self) -> bool {
        matches!(self, Placement::Contains { .. } | Placement::Within { .. })
    }

    /// Instantiates against the component words; returns the hull and the
    /// left/right cofactors of `p` and `q`.
    pub fn place(&self, p: &Word, q: &Word, param: &Word) -> ComponentWitness {
        let e = Word::one;
        match self {
            Placement::Contains { a, b } => ComponentWitness {
                hull: p.clone(),
                fl: e(),
                fr: e(),
                gl: a.clone(),
                gr: b.clone(),
            },
            Placement::Within { a, b } => ComponentWitness {
                hull: q.clone(),
                fl: a.clone(),
                fr: b.clone(),
                gl: e(),
                gr: e(),
            },
            Placement::Overlap { f_left: true, len } => {
                let ext = q.slice(*len, q.len());
                ComponentWitness {
                    hull: p.concat(&ext),
                    fl: e(),
                    fr: ext,
                    gl: p.slice(0, p.len() - len),
                    gr: e(),
                }
            }
            Placement::Overlap { f_left: false, len } => {
                let ext = p.slice(*len, p.len());
                ComponentWitness {
                    hull: q.concat(&ext),
                    fl: q.slice(0, q.len() - len),
                    fr: e(),
                    gl: e(),
                    gr: ext,
                }
            }
            Placement::Gap { f_left: true } => ComponentWitness {
                hull: Word::concat3(p, param, q),
                fl: e(),
                fr: param.concat(q),
                gl: p.concat(param),
                gr: e(),
            },
            Placement::Gap { f_left: false } => ComponentWitness {
                hull: Word::concat3(q, param, p),
                fl: q.concat(param),
                fr: e(),
                gl: e(),
                gr: param.concat(p),
            },
        }
    }
}

/// One component of an instantiated ambiguity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentWitness {
    pub hull: Word,
    pub fl: Word,
    pub fr: Word,
    pub gl: Word,
    pub gr: Word,
}

impl Default for ComponentWitness {
    fn default() -> Self {
        let e = Word::one();
        ComponentWitness {
            hull: e.clone(),
            fl: e.clone(),
            fr: e.clone(),
            gl: e.clone(),
            gr: e,
        }
    }
}

/// Which alphabet the free parameter of a family ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParamSlot {
    None,
    X,
    Y,
}

/// One composition case for a pair of leading monomials, with the
/// parameter (if any) left open.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CompositionFamily<M> {
    pub kind: CompositionKind,
    /// The case applies with the roles of `f` and `g` exchanged.
    pub reversed: bool,
    pub f_lead: M,
    pub g_lead: M,
    pub x: Option<Placement>,
    pub y: Option<Placement>,
    pub param: ParamSlot,
    /// Commutative S-pair with coprime leading monomials.
    pub coprime: bool,
}

/// `w = f_left·f̄·f_right = g_left·ḡ·g_right`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ambiguity<M> {
    pub w: M,
    pub f_left: M,
    pub f_right: M,
    pub g_left: M,
    pub g_right: M,
}

impl<M: Clone> Ambiguity<M> {
    /// The same ambiguity seen from the other element of the pair.
    pub fn swapped(&self) -> Ambiguity<M> {
        Ambiguity {
            w: self.w.clone(),
            f_left: self.g_left.clone(),
            f_right: self.g_right.clone(),
            g_left: self.f_left.clone(),
            g_right: self.f_right.clone(),
        }
    }
}

impl<M> Ambiguity<M> {
    /// `f_left·f·f_right - g_left·g·g_right`.
    pub fn polynomial<U: Universe<Mono = M>>(
        &self,
        f: &Polynomial<U>,
        g: &Polynomial<U>,
    ) -> Polynomial<U> {
        f.mono_mul(&self.f_left, &self.f_right).sub_term_mul(
            &f.ring().field.one(),
            &self.g_left,
            g,
            &self.g_right,
        )
    }
}

impl<M: Clone> CompositionFamily<M> {
    pub fn has_param(&self) -> bool {
        self.param != ParamSlot::None
    }

    /// Same ambiguities with `f` and `g` exchanged.
    pub fn mirrored(&self) -> CompositionFamily<M> {
        CompositionFamily {
            kind: self.kind,
            reversed: !self.reversed,
            f_lead: self.g_lead.clone(),
            g_lead: self.f_lead.clone(),
            x: self.x.as_ref().map(Placement::mirror),
            y: self.y.as_ref().map(Placement::mirror),
            param: self.param,
            coprime: self.coprime,
        }
    }
}

pub(crate) fn check_param<U: Universe>(
    fam: &CompositionFamily<U::Mono>,
    param: &Word,
    u: &U,
) -> Result<(), CompositionError> {
    match u.param_alphabet(fam.param) {
        None if param.is_empty() => Ok(()),
        None => Err(CompositionError::ParamNotApplicable),
        Some(a) if param.letters().iter().all(|&l| (l as usize) < a.len()) => Ok(()),
        Some(_) => Err(CompositionError::ParamNotApplicable),
    }
}

/// Placements of `p` and `q` in one word component. `gaps` controls whether
/// disjoint placements (which need a parameter alphabet) are produced.
fn word_placements(p: &Word, q: &Word, gaps: bool) -> Vec<Placement> {
    let mut out = Vec::new();
    for (a, b) in crate::monoids::factorizations(p, q) {
        out.push(Placement::Contains { a, b });
    }
    if p != q {
        for (a, b) in crate::monoids::factorizations(q, p) {
            out.push(Placement::Within { a, b });
        }
    }
    for len in overlap_lengths(p.letters(), q.letters()) {
        out.push(Placement::Overlap { f_left: true, len });
    }
    for len in overlap_lengths(q.letters(), p.letters()) {
        out.push(Placement::Overlap { f_left: false, len });
    }
    if gaps {
        out.push(Placement::Gap { f_left: true });
        out.push(Placement::Gap { f_left: false });
    }
    out
}

fn variant(f_left: bool, reversed: bool) -> Variant {
    if f_left != reversed {
        Variant::First
    } else {
        Variant::Second
    }
}

/// Case tag of a pair of component placements; `None` when both components
/// are disjoint (no composition).
fn tensor_kind(x: &Placement, y: &Placement) -> Option<(CompositionKind, bool)> {
    use CompositionKind as K;
    use Placement as P;
    let rev_incl = |p: &Placement| matches!(p, P::Within { .. });
    let rev_over = |p: &Placement| matches!(p, P::Overlap { f_left: false, .. });
    Some(match (x, y) {
        (P::Gap { .. }, P::Gap { .. }) => return None,
        (xi, P::Gap { f_left }) if xi.is_inclusion() => {
            let r = rev_incl(xi);
            (K::XInclusionOnly(variant(*f_left, r)), r)
        }
        (P::Gap { f_left }, yi) if yi.is_inclusion() => {
            let r = rev_incl(yi);
            (K::YInclusionOnly(variant(*f_left, r)), r)
        }
        (P::Overlap { .. }, P::Gap { f_left }) => {
            let r = rev_over(x);
            (K::XIntersectionOnly(variant(*f_left, r)), r)
        }
        (P::Gap { f_left }, P::Overlap { .. }) => {
            let r = rev_over(y);
            (K::YIntersectionOnly(variant(*f_left, r)), r)
        }
        (xi, yi) if xi.is_inclusion() && yi.is_inclusion() => {
            let r = rev_incl(xi);
            if rev_incl(xi) == rev_incl(yi) {
                (K::XYInclusion, r)
            } else {
                (K::XYSkewInclusion, r)
            }
        }
        (P::Overlap { f_left: fx, .. }, P::Overlap { f_left: fy, .. }) => {
            let r = !fx;
            if fx == fy {
                (K::XYIntersection, r)
            } else {
                (K::XYSkewIntersection, r)
            }
        }
        (xi, P::Overlap { f_left, .. }) => {
            let r = rev_incl(xi);
            (K::XInclYInter(variant(*f_left, r)), r)
        }
        (P::Overlap { .. }, yi) => {
            let r = rev_over(x);
            (K::XInterYIncl(variant(!rev_incl(yi), r)), r)
        }
        _ => unreachable!("all placement pairs covered"),
    })
}

/// Families of the tensor product for leading words `f`, `g`. `x_gaps` and
/// `y_gaps` say whether each alphabet is nonempty (so a gap parameter can
/// be anything but the empty word).
pub(crate) fn tensor_families(
    f: &NormalWord,
    g: &NormalWord,
    self_pair: bool,
    x_gaps: bool,
    y_gaps: bool,
) -> Vec<CompositionFamily<NormalWord>> {
    let xs = word_placements(&f.x, &g.x, x_gaps);
    let ys = word_placements(&f.y, &g.y, y_gaps);
    let mut out = Vec::new();
    for x in &xs {
        for y in &ys {
            if self_pair && x.is_identity() && y.is_identity() {
                continue;
            }
            if self_pair && (x.mirror(), y.mirror()) < (x.clone(), y.clone()) {
                continue;
            }
            // apart in one part and touching in the other: disjoint leads
            let gap_x = matches!(x, Placement::Gap { .. });
            let gap_y = matches!(y, Placement::Gap { .. });
            if (gap_x && y.is_adjacency(&f.y, &g.y)) || (gap_y && x.is_adjacency(&f.x, &g.x)) {
                continue;
            }
            let Some((kind, reversed)) = tensor_kind(x, y) else {
                continue;
            };
            let param = match (x, y) {
                (Placement::Gap { .. }, _) => ParamSlot::X,
                (_, Placement::Gap { .. }) => ParamSlot::Y,
                _ => ParamSlot::None,
            };
            out.push(CompositionFamily {
                kind,
                reversed,
                f_lead: f.clone(),
                g_lead: g.clone(),
                x: Some(x.clone()),
                y: Some(y.clone()),
                param,
                coprime: false,
            });
        }
    }
    out
}

pub(crate) fn instantiate_tensor(
    fam: &CompositionFamily<NormalWord>,
    param: &Word,
) -> Ambiguity<NormalWord> {
    let empty = Word::one();
    let (px, py) = match fam.param {
        ParamSlot::X => (param, &empty),
        ParamSlot::Y => (&empty, param),
        ParamSlot::None => (&empty, &empty),
    };
    let x = fam
        .x
        .as_ref()
        .expect("tensor family has an X placement")
        .place(&fam.f_lead.x, &fam.g_lead.x, px);
    let y = fam
        .y
        .as_ref()
        .expect("tensor family has a Y placement")
        .place(&fam.f_lead.y, &fam.g_lead.y, py);
    Ambiguity {
        w: NormalWord::new(x.hull, y.hull),
        f_left: NormalWord::new(x.fl, y.fl),
        f_right: NormalWord::new(x.fr, y.fr),
        g_left: NormalWord::new(x.gl, y.gl),
        g_right: NormalWord::new(x.gr, y.gr),
    }
}

pub(crate) fn free_families(f: &Word, g: &Word, self_pair: bool) -> Vec<CompositionFamily<Word>> {
    let mut out = Vec::new();
    for x in word_placements(f, g, false) {
        if self_pair && (x.is_identity() || x.mirror() < x) {
            continue;
        }
        let (kind, reversed) = match &x {
            Placement::Contains { .. } => (CompositionKind::FreeInclusion, false),
            Placement::Within { .. } => (CompositionKind::FreeInclusion, true),
            Placement::Overlap { f_left, .. } => (CompositionKind::FreeIntersection, !f_left),
            Placement::Gap { .. } => continue,
        };
        out.push(CompositionFamily {
            kind,
            reversed,
            f_lead: f.clone(),
            g_lead: g.clone(),
            x: Some(x),
            y: None,
            param: ParamSlot::None,
            coprime: false,
        });
    }
    out
}

pub(crate) fn instantiate_free(fam: &CompositionFamily<Word>) -> Ambiguity<Word> {
    let c = fam.x.as_ref().expect("free family has a placement").place(
        &fam.f_lead,
        &fam.g_lead,
        &Word::one(),
    );
    Ambiguity {
        w: c.hull,
        f_left: c.fl,
        f_right: c.fr,
        g_left: c.gl,
        g_right: c.gr,
    }
}

pub(crate) fn comm_family(f: &CommMonomial, g: &CommMonomial) -> CompositionFamily<CommMonomial> {
    CompositionFamily {
        kind: CompositionKind::CommSPair,
        reversed: false,
        f_lead: f.clone(),
        g_lead: g.clone(),
        x: None,
        y: None,
        param: ParamSlot::None,
        coprime: f.gcd(g).is_one(),
    }
}

pub(crate) fn instantiate_comm(fam: &CompositionFamily<CommMonomial>) -> Ambiguity<CommMonomial> {
    let w = fam.f_lead.lcm(&fam.g_lead);
    Ambiguity {
        f_left: w.quotient(&fam.f_lead).expect("lcm is a multiple"),
        g_left: w.quotient(&fam.g_lead).expect("lcm is a multiple"),
        f_right: CommMonomial::one(),
        g_right: CommMonomial::one(),
        w,
    }
}

/// `Y`-placements of the mixed compositions oriented from `f` to `g`:
/// `ḡ^Y` inside `f̄^Y`, `f̄^Y` overlapping into `ḡ^Y`, and `f̄^Y` before
/// `ḡ^Y` with a gap (only when the `X` parts share a variable).
fn mz_oriented(p: &Word, q: &Word, share_x: bool) -> Vec<Placement> {
    let mut out = Vec::new();
    if q.is_empty() {
        out.push(Placement::Contains {
            a: Word::one(),
            b: p.clone(),
        });
    } else {
        for (a, b) in crate::monoids::factorizations(p, q) {
            out.push(Placement::Contains { a, b });
        }
    }
    for len in overlap_lengths(p.letters(), q.letters()) {
        out.push(Placement::Overlap { f_left: true, len });
    }
    if share_x && !p.is_empty() && !q.is_empty() {
        out.push(Placement::Gap { f_left: true });
    }
    out
}

pub(crate) fn mixed_families(
    f: &MixedMonomial,
    g: &MixedMonomial,
    self_pair: bool,
    xorder: CommOrder,
) -> Vec<CompositionFamily<MixedMonomial>> {
    let share_x = !f.x.gcd(&g.x).is_one();
    let mut placements = mz_oriented(&f.y, &g.y, share_x);
    for pl in mz_oriented(&g.y, &f.y, share_x) {
        let pl = pl.mirror();
        // equal Y parts: one C1, oriented so the larger X part plays `f`
        if f.y == g.y && pl.is_identity() {
            continue;
        }
        placements.push(pl);
    }
    let mut out = Vec::new();
    for y in placements {
        if self_pair && (y.is_identity() || y.mirror() < y) {
            continue;
        }
        let (kind, reversed) = match &y {
            Placement::Contains { a, b } if a.is_empty() && b.is_empty() && f.y == g.y => {
                (CompositionKind::MzC1, xorder.cmp(&f.x, &g.x).is_lt())
            }
            Placement::Contains { .. } => (CompositionKind::MzC1, false),
            Placement::Within { .. } => (CompositionKind::MzC1, true),
            Placement::Overlap { f_left, .. } => (CompositionKind::MzC2, !f_left),
            Placement::Gap { f_left } => (CompositionKind::MzC3, !f_left),
        };
        out.push(CompositionFamily {
            kind,
            reversed,
            f_lead: f.clone(),
            g_lead: g.clone(),
            x: None,
            param: if matches!(y, Placement::Gap { .. }) {
                ParamSlot::Y
            } else {
                ParamSlot::None
            },
            y: Some(y),
            coprime: false,
        });
    }
    out
}

pub(crate) fn instantiate_mixed(
    fam: &CompositionFamily<MixedMonomial>,
    param: &Word,
) -> Ambiguity<MixedMonomial> {
    let l = fam.f_lead.x.lcm(&fam.g_lead.x);
    let y = fam
        .y
        .as_ref()
        .expect("mixed family has a Y placement")
        .place(&fam.f_lead.y, &fam.g_lead.y, param);
    let one = CommMonomial::one();
    Ambiguity {
        w: MixedMonomial::new(l.clone(), y.hull),
        f_left: MixedMonomial::new(l.quotient(&fam.f_lead.x).expect("lcm is a multiple"), y.fl),
        f_right: MixedMonomial::new(one.clone(), y.fr),
        g_left: MixedMonomial::new(l.quotient(&fam.g_lead.x).expect("lcm is a multiple"), y.gl),
        g_right: MixedMonomial::new(one, y.gr),
    }
}

fn require_monic<U: Universe>(f: &Polynomial<U>) -> Result<&U::Mono, CompositionError> {
    if !f.is_monic() {
        return Err(CompositionError::NotMonic);
    }
    Ok(f.lead_mono().expect("monic implies nonzero"))
}

/// All compositions of `f` and `g` in `k⟨X⟩ ⊗ k⟨Y⟩`.
pub fn tensor_compositions(
    f: &Polynomial<TensorUniverse>,
    g: &Polynomial<TensorUniverse>,
) -> Result<Vec<CompositionFamily<NormalWord>>, CompositionError> {
    let (fl, gl) = (require_monic(f)?, require_monic(g)?);
    Ok(f.universe().compositions(fl, gl, f == g))
}

/// Intersection and inclusion compositions in `k⟨X⟩`.
pub fn free_compositions(
    f: &Polynomial<FreeUniverse>,
    g: &Polynomial<FreeUniverse>,
) -> Result<Vec<CompositionFamily<Word>>, CompositionError> {
    let (fl, gl) = (require_monic(f)?, require_monic(g)?);
    Ok(free_families(fl, gl, f == g))
}

/// The S-pair of two monic commutative polynomials; `coprime` is set when
/// the leading monomials share no variable.
pub fn comm_spair(
    f: &Polynomial<CommUniverse>,
    g: &Polynomial<CommUniverse>,
) -> Result<CompositionFamily<CommMonomial>, CompositionError> {
    let (fl, gl) = (require_monic(f)?, require_monic(g)?);
    Ok(comm_family(fl, gl))
}

/// Compositions `C1`, `C2`, `C3` of `f` with `g` in `k[X] ⊗ k⟨Y⟩`, in the
/// orientation where `f` contains, overlaps into, or precedes `g`.
pub fn mz_compositions(
    f: &Polynomial<MixedUniverse>,
    g: &Polynomial<MixedUniverse>,
) -> Result<Vec<CompositionFamily<MixedMonomial>>, CompositionError> {
    let (fl, gl) = (require_monic(f)?, require_monic(g)?);
    let xorder = f.universe().order.x;
    let share_x = !fl.x.gcd(&gl.x).is_one();
    let self_pair = f == g;
    let mut out = Vec::new();
    for y in mz_oriented(&fl.y, &gl.y, share_x) {
        if y.is_identity() && (self_pair || (fl.y == gl.y && xorder.cmp(&fl.x, &gl.x).is_lt())) {
            continue;
        }
        let kind = match y {
            Placement::Contains { .. } => CompositionKind::MzC1,
            Placement::Overlap { .. } => CompositionKind::MzC2,
            _ => CompositionKind::MzC3,
        };
        out.push(CompositionFamily {
            kind,
            reversed: false,
            f_lead: fl.clone(),
            g_lead: gl.clone(),
            x: None,
            param: if kind == CompositionKind::MzC3 {
                ParamSlot::Y
            } else {
                ParamSlot::None
            },
            y: Some(y),
            coprime: false,
        });
    }
    Ok(out)
}

/// Instantiates a family and builds its composition polynomial.
pub fn instantiate<U: Universe>(
    fam: &CompositionFamily<U::Mono>,
    f: &Polynomial<U>,
    g: &Polynomial<U>,
    param: &Word,
) -> Result<(Ambiguity<U::Mono>, Polynomial<U>), CompositionError> {
    let amb = f.universe().instantiate(fam, param)?;
    let p = amb.polynomial(f, g);
    Ok((amb, p))
}

/// Diagnostic line, e.g. `kind=XY-SkewInclusion w=x^2;y^2 a=1 b=x c=1 d=y`.
pub fn describe<U: Universe>(u: &U, fam: &CompositionFamily<U::Mono>) -> String {
    let mut s = format!("kind={}", fam.kind);
    if fam.reversed {
        s.push_str(" (g,f)");
    }
    if let Ok(amb) = u.instantiate(fam, &Word::one()) {
        s.push_str(&format!(" w={}", u.display(&amb.w)));
    }
    let names = u.generator_names();
    let wd = |w: &Word, off: usize| -> String {
        if w.is_empty() {
            "1".to_string()
        } else {
            w.letters()
                .iter()
                .map(|&l| names[l as usize + off].clone())
                .collect::<Vec<_>>()
                .join("*")
        }
    };
    let y_offset = match u.kind() {
        crate::universe::UniverseKind::Tensor | crate::universe::UniverseKind::Mixed => {
            names.len() - u.param_alphabet(ParamSlot::Y).map_or(0, Alphabet::len)
        }
        _ => 0,
    };
    for (pl, (l, r), off) in [(&fam.x, ("a", "b"), 0usize), (&fam.y, ("c", "d"), y_offset)] {
        let Some(pl) = pl else { continue };
        match pl {
            Placement::Contains { a, b } | Placement::Within { a, b } => {
                s.push_str(&format!(" {l}={} {r}={}", wd(a, off), wd(b, off)));
            }
            Placement::Overlap { f_left, len } => {
                s.push_str(&format!(
                    " {l}{r}-overlap={len}{}",
                    if *f_left { "" } else { "(g first)" }
                ));
            }
            Placement::Gap { .. } => s.push_str(&format!(" {l}=*")),
        }
    }
    if fam.has_param() {
        s.push_str(&format!(" param={:?}", fam.param));
    }
    if fam.coprime {
        s.push_str(" coprime");
    }
    s
}
