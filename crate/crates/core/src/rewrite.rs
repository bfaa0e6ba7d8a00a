//! Division by a set of monic polynomials, triviality of compositions,
//! bounded Shirshov completion, minimalization, `Irr(S)` and the word
//! problem, generic over the monomial universe.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::compositions::{self, Ambiguity, CompositionError, CompositionFamily};
use crate::monoids::Word;
use crate::par::{self, Parallelism};
use crate::poly::{Polynomial, Ring};
use crate::scalar::Scalar;
use crate::universe::{words_of_length, Universe};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error("degree {degree} exceeds the verified bound {bound}")]
    DegreeOutOfBound { degree: usize, bound: usize },
    #[error("input relation {0} is zero")]
    ZeroInput(usize),
    #[error(transparent)]
    Composition(#[from] CompositionError),
}

/// Completion stopped at its step budget. The partial state, including the
/// unverified queue, is kept for inspection or resumption.
#[derive(Debug, Error)]
#[error("budget of {budget} composition checks exhausted with {pending} pending")]
pub struct BudgetExceeded<U: Universe> {
    pub budget: usize,
    pub pending: usize,
    pub state: Box<BasisState<U>>,
}

#[derive(Debug, Error)]
pub enum CompletionError<U: Universe> {
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Budget(BudgetExceeded<U>),
}

/// One elimination `f ↦ f - α·a·s·b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step<M> {
    pub coeff: Scalar,
    pub left: M,
    pub index: usize,
    pub right: M,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace<U: Universe> {
    pub steps: Vec<Step<U::Mono>>,
    pub remainder: Polynomial<U>,
}

impl<U: Universe> ReductionTrace<U> {
    /// `Σ α·a·s·b + remainder`.
    pub fn replay(&self, basis: &[Polynomial<U>]) -> Polynomial<U> {
        let mut acc = self.remainder.clone();
        for st in &self.steps {
            acc = acc.sub_term_mul(&-&st.coeff, &st.left, &basis[st.index], &st.right);
        }
        acc
    }
}

/// Reduces `f` modulo `basis`: always the largest reducible monomial, the
/// earliest element whose leading monomial divides it, leftmost occurrence.
pub fn reduce<U: Universe>(f: &Polynomial<U>, basis: &[Polynomial<U>]) -> ReductionTrace<U> {
    reduce_impl(f, basis, true)
}

/// [`reduce`] without recording steps.
pub fn normal_form<U: Universe>(f: &Polynomial<U>, basis: &[Polynomial<U>]) -> Polynomial<U> {
    reduce_impl(f, basis, false).remainder
}

fn reduce_impl<U: Universe>(
    f: &Polynomial<U>,
    basis: &[Polynomial<U>],
    trace: bool,
) -> ReductionTrace<U> {
    let u = f.universe();
    let leads: Vec<(&U::Mono, usize)> = basis
        .iter()
        .map(|s| {
            let m = s.lead_mono().expect("basis elements are nonzero");
            (m, u.degree(m))
        })
        .collect();
    let mut cur = f.clone();
    let mut steps = Vec::new();
    // terms before `k` are irreducible and never touched again: every
    // elimination only adds terms below the one it cancels
    let mut k = 0;
    while k < cur.len() {
        let (m, c) = &cur.terms()[k];
        let deg = u.degree(m);
        let hit = leads
            .iter()
            .enumerate()
            .filter(|(_, (_, d))| *d <= deg)
            .find_map(|(i, (lead, _))| u.first_occurrence(m, lead).map(|(a, b)| (i, a, b)));
        match hit {
            Some((i, a, b)) => {
                let c = scale(c, &basis[i]);
                cur = cur.sub_term_mul(&c, &a, &basis[i], &b);
                if trace {
                    steps.push(Step {
                        coeff: c,
                        left: a,
                        index: i,
                        right: b,
                    });
                }
            }
            None => k += 1,
        }
    }
    ReductionTrace {
        steps,
        remainder: cur,
    }
}

/// The multiple of `s` that cancels a term with coefficient `c`.
fn scale<U: Universe>(c: &Scalar, s: &Polynomial<U>) -> Scalar {
    let lc = s.lead().expect("basis elements are nonzero").0;
    if lc.is_one() {
        c.clone()
    } else {
        c.div(lc).expect("nonzero leading coefficient")
    }
}

/// Reduction with caller-chosen steps: `choose(n)` picks one of `n`
/// candidates, first among reducible terms, then among dividing elements,
/// then among occurrences. Used to test confluence.
pub fn reduce_by<U: Universe>(
    f: &Polynomial<U>,
    basis: &[Polynomial<U>],
    choose: &mut dyn FnMut(usize) -> usize,
) -> ReductionTrace<U> {
    let u = f.universe();
    let mut cur = f.clone();
    let mut steps = Vec::new();
    loop {
        let reducible: Vec<usize> = (0..cur.len())
            .filter(|&k| {
                basis
                    .iter()
                    .any(|s| u.divides(s.lead_mono().unwrap(), &cur.terms()[k].0))
            })
            .collect();
        if reducible.is_empty() {
            break;
        }
        let (m, c) = cur.terms()[reducible[choose(reducible.len())]].clone();
        let divs: Vec<usize> = (0..basis.len())
            .filter(|&i| u.divides(basis[i].lead_mono().unwrap(), &m))
            .collect();
        let i = divs[choose(divs.len())];
        let occ = u.occurrences(&m, basis[i].lead_mono().unwrap());
        let (a, b) = occ[choose(occ.len())].clone();
        let c = scale(&c, &basis[i]);
        cur = cur.sub_term_mul(&c, &a, &basis[i], &b);
        steps.push(Step {
            coeff: c,
            left: a,
            index: i,
            right: b,
        });
    }
    ReductionTrace {
        steps,
        remainder: cur,
    }
}

/// Whether the composition `fam` of `basis[i]` with `basis[j]` at `param`
/// reduces to zero.
pub fn is_trivial<U: Universe>(
    fam: &CompositionFamily<U::Mono>,
    i: usize,
    j: usize,
    basis: &[Polynomial<U>],
    param: &Word,
) -> Result<(bool, ReductionTrace<U>), RewriteError> {
    let (_, p) = compositions::instantiate(fam, &basis[i], &basis[j], param)?;
    let tr = reduce(&p, basis);
    Ok((tr.remainder.is_zero(), tr))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompletionConfig {
    /// Ambiguities of higher degree are not examined.
    pub max_degree: usize,
    /// Parametric families are instantiated with every word up to this length.
    pub param_bound: usize,
    /// Maximum number of instantiated compositions to check.
    pub budget: usize,
    /// Skip commutative S-pairs of coprime leading monomials.
    pub coprime_criterion: bool,
    pub parallelism: Parallelism,
    /// Compositions reduced against one snapshot of the basis.
    pub batch: usize,
}

impl Default for CompletionConfig {
    fn default() -> Self {
        CompletionConfig {
            max_degree: 8,
            param_bound: 2,
            budget: 1_000_000,
            coprime_criterion: true,
            parallelism: Parallelism::default(),
            batch: 256,
        }
    }
}

impl CompletionConfig {
    pub fn with_degree(max_degree: usize) -> Self {
        CompletionConfig {
            max_degree,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    /// Every instantiated composition with `deg w ≤ D` is trivial.
    CompleteUpTo(usize),
    /// Nothing was cut off by the degree or parameter bound: a genuine basis.
    Saturated,
    /// The budget ran out first.
    Exhausted,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::CompleteUpTo(d) => write!(f, "complete-up-to({d})"),
            Status::Saturated => write!(f, "saturated"),
            Status::Exhausted => write!(f, "exhausted"),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Stats {
    pub additions: usize,
    pub pairs_checked: usize,
    pub trivial: usize,
    pub coprime_skipped: usize,
    /// Instantiations dropped for `deg w > D`.
    pub beyond_degree: usize,
    /// Parametric families, whose longer parameters stay unverified.
    pub param_truncated: usize,
}

/// A composition instantiated at one parameter, waiting to be checked.
#[derive(Debug, Clone)]
pub struct QueueItem<M> {
    pub i: usize,
    pub j: usize,
    pub family: CompositionFamily<M>,
    pub param: Word,
    pub ambiguity: Ambiguity<M>,
}

#[derive(Debug, Clone)]
pub struct BasisState<U: Universe> {
    pub ring: Arc<Ring<U>>,
    pub elements: Vec<Polynomial<U>>,
    /// Unchecked compositions keyed by `(deg w, insertion order)`.
    pub queue: BTreeMap<(usize, u64), QueueItem<U::Mono>>,
    pub config: CompletionConfig,
    pub status: Status,
    pub stats: Stats,
    /// One line per checked composition.
    pub log: Vec<String>,
    /// Instantiations that failed to reduce to zero (check mode only).
    pub failures: Vec<String>,
    seen: HashSet<(usize, usize, Ambiguity<U::Mono>)>,
    seq: u64,
}

impl<U: Universe> BasisState<U> {
    fn new(ring: Arc<Ring<U>>, elements: Vec<Polynomial<U>>, config: CompletionConfig) -> Self {
        BasisState {
            ring,
            elements,
            queue: BTreeMap::new(),
            config,
            status: Status::CompleteUpTo(config.max_degree),
            stats: Stats::default(),
            log: Vec::new(),
            failures: Vec::new(),
            seen: HashSet::new(),
            seq: 0,
        }
    }

    pub fn universe(&self) -> &U {
        &self.ring.universe
    }

    /// Degree up to which membership answers are certified.
    pub fn verified_degree(&self) -> Option<usize> {
        match self.status {
            Status::Saturated => None,
            Status::CompleteUpTo(d) => Some(d),
            Status::Exhausted => Some(0),
        }
    }

    /// Queues every instantiation of every composition of `s_k` with
    /// `s_j`, `j ≤ k`.
    fn enqueue_pairs_with(&mut self, k: usize) {
        for j in 0..=k {
            self.enqueue_pair(k, j);
        }
    }

    fn enqueue_pair(&mut self, i: usize, j: usize) {
        let u = self.ring.universe.clone();
        let cfg = self.config;
        let fi = self.elements[i].lead_mono().unwrap().clone();
        let fj = self.elements[j].lead_mono().unwrap().clone();
        for fam in u.compositions(&fi, &fj, i == j) {
            if fam.coprime && cfg.coprime_criterion {
                self.stats.coprime_skipped += 1;
                continue;
            }
            let params: Vec<Word> = match u.param_alphabet(fam.param) {
                None => vec![Word::one()],
                Some(a) => {
                    self.stats.param_truncated += 1;
                    (0..=cfg.param_bound)
                        .flat_map(|l| words_of_length(a.len(), l))
                        .collect()
                }
            };
            for c in params {
                let amb = u
                    .instantiate(&fam, &c)
                    .expect("parameter drawn from its alphabet");
                let deg = u.degree(&amb.w);
                if deg > cfg.max_degree {
                    self.stats.beyond_degree += 1;
                    continue;
                }
                let key = if i == j {
                    amb.clone().min(amb.swapped())
                } else {
                    amb.clone()
                };
                if !self.seen.insert((i, j, key)) {
                    continue;
                }
                self.seq += 1;
                self.queue.insert(
                    (deg, self.seq),
                    QueueItem {
                        i,
                        j,
                        family: fam.clone(),
                        param: c,
                        ambiguity: amb,
                    },
                );
            }
        }
    }

    fn describe_item(&self, item: &QueueItem<U::Mono>) -> String {
        let u = self.universe();
        let mut s = format!(
            "pair#({},{}) kind={} w={}",
            item.i,
            item.j,
            item.family.kind,
            u.display(&item.ambiguity.w)
        );
        if item.family.has_param() {
            let names = u.generator_names();
            let off = if item.family.param == compositions::ParamSlot::Y {
                names.len() - u.param_alphabet(item.family.param).map_or(0, |a| a.len())
            } else {
                0
            };
            let p = if item.param.is_empty() {
                "1".to_string()
            } else {
                item.param
                    .letters()
                    .iter()
                    .map(|&l| names[l as usize + off].as_str())
                    .collect::<Vec<_>>()
                    .join("*")
            };
            s.push_str(&format!(" param={p}"));
        }
        s
    }

    /// Checks queued compositions in degree order. With `extend`, nonzero
    /// remainders join the basis; otherwise they are recorded as failures.
    fn run(&mut self, extend: bool) -> Result<(), BudgetExceeded<U>> {
        while !self.queue.is_empty() {
            if self.stats.pairs_checked >= self.config.budget {
                self.status = Status::Exhausted;
                return Err(BudgetExceeded {
                    budget: self.config.budget,
                    pending: self.queue.len(),
                    state: Box::new(self.clone()),
                });
            }
            let room =
                (self.config.budget - self.stats.pairs_checked).min(self.config.batch.max(1));
            let keys: Vec<(usize, u64)> = self.queue.keys().take(room).copied().collect();
            let batch: Vec<QueueItem<U::Mono>> =
                keys.iter().map(|k| self.queue.remove(k).unwrap()).collect();
            let snapshot = &self.elements;
            let remainders = par::map(self.config.parallelism, &batch, |item| {
                let p = item
                    .ambiguity
                    .polynomial(&snapshot[item.i], &snapshot[item.j]);
                normal_form(&p, snapshot)
            });
            for (item, rem) in batch.iter().zip(remainders) {
                self.stats.pairs_checked += 1;
                let desc = self.describe_item(item);
                let rem = if rem.is_zero() {
                    rem
                } else {
                    normal_form(&rem, &self.elements)
                };
                if rem.is_zero() {
                    self.stats.trivial += 1;
                    self.log.push(format!("{desc} → trivial"));
                    continue;
                }
                if !extend {
                    self.log.push(format!("{desc} → nontrivial {rem}"));
                    self.failures.push(desc);
                    continue;
                }
                let k = self.elements.len();
                let s = rem.make_monic().expect("nonzero remainder");
                self.log.push(format!("{desc} → added s_{k} = {s}"));
                self.elements.push(s);
                self.stats.additions += 1;
                self.enqueue_pairs_with(k);
            }
        }
        self.status = if self.stats.beyond_degree == 0 && self.stats.param_truncated == 0 {
            Status::Saturated
        } else {
            Status::CompleteUpTo(self.config.max_degree)
        };
        Ok(())
    }

    /// Key-value summary block.
    pub fn summary(&self) -> String {
        let s = &self.stats;
        format!(
            "status={}\nmax_degree={}\nparam_bound={}\nbasis_size={}\nadditions={}\npairs_checked={}\ntrivial={}\ncoprime_skipped={}\nbeyond_degree={}\nparam_truncated={}\nnontrivial={}\n",
            self.status,
            self.config.max_degree,
            self.config.param_bound,
            self.elements.len(),
            s.additions,
            s.pairs_checked,
            s.trivial,
            s.coprime_skipped,
            s.beyond_degree,
            s.param_truncated,
            self.failures.len()
        )
    }
}

fn prepare<U: Universe>(
    ring: &Arc<Ring<U>>,
    inputs: &[Polynomial<U>],
) -> Result<Vec<Polynomial<U>>, RewriteError> {
    let mut out: Vec<Polynomial<U>> = Vec::new();
    for (i, f) in inputs.iter().enumerate() {
        let Ok(m) = f.make_monic() else {
            return Err(RewriteError::ZeroInput(i));
        };
        debug_assert!(Arc::ptr_eq(f.ring(), ring) || **f.ring() == **ring);
        if !out.contains(&m) {
            out.push(m);
        }
    }
    Ok(out)
}

/// Shirshov completion up to the configured degree. Inputs are made monic
/// and kept as given; every nontrivial composition is reduced, made monic
/// and appended.
pub fn complete<U: Universe>(
    ring: &Arc<Ring<U>>,
    inputs: &[Polynomial<U>],
    config: CompletionConfig,
) -> Result<BasisState<U>, CompletionError<U>> {
    let elements = prepare(ring, inputs)?;
    let mut st = BasisState::new(ring.clone(), elements, config);
    for k in 0..st.elements.len() {
        st.enqueue_pairs_with(k);
    }
    st.run(true).map_err(CompletionError::Budget)?;
    Ok(st)
}

/// Checks whether `inputs` is closed under compositions up to the configured
/// degree, without adding anything. `failures` lists the nontrivial ones.
pub fn check_gsb<U: Universe>(
    ring: &Arc<Ring<U>>,
    inputs: &[Polynomial<U>],
    config: CompletionConfig,
) -> Result<BasisState<U>, CompletionError<U>> {
    let elements = prepare(ring, inputs)?;
    let mut st = BasisState::new(ring.clone(), elements, config);
    for k in 0..st.elements.len() {
        st.enqueue_pairs_with(k);
    }
    st.run(false).map_err(CompletionError::Budget)?;
    Ok(st)
}

/// Drops elements whose leading monomial is divisible by another's (the
/// earlier one wins on equal leads), then tail-reduces each survivor
/// against the others.
pub fn minimalize<U: Universe>(elements: &[Polynomial<U>]) -> Vec<Polynomial<U>> {
    let Some(first) = elements.first() else {
        return Vec::new();
    };
    let u = first.universe();
    let leads: Vec<&U::Mono> = elements.iter().map(|s| s.lead_mono().unwrap()).collect();
    let keep: Vec<usize> = (0..elements.len())
        .filter(|&i| {
            !(0..elements.len())
                .any(|j| j != i && u.divides(leads[j], leads[i]) && (leads[j] != leads[i] || j < i))
        })
        .collect();
    let kept: Vec<Polynomial<U>> = keep.iter().map(|&i| elements[i].clone()).collect();
    (0..kept.len())
        .map(|i| {
            let others: Vec<Polynomial<U>> = kept
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, s)| s.clone())
                .collect();
            let s = &kept[i];
            let (c, m) = s.lead().unwrap();
            let tail = normal_form(&s.tail(), &others);
            Polynomial::monomial(s.ring(), m.clone(), c.clone())
                .try_add(&tail)
                .expect("same ring")
        })
        .collect()
}

/// Whether no leading monomial divides another.
pub fn is_minimal<U: Universe>(elements: &[Polynomial<U>]) -> Option<(usize, usize)> {
    let u = elements.first()?.universe();
    for i in 0..elements.len() {
        for j in 0..elements.len() {
            if i != j && u.divides(elements[j].lead_mono()?, elements[i].lead_mono()?) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Monomials of degree `0..=d` avoiding every leading monomial, grouped by
/// degree, each group in descending order.
pub fn irr_up_to<U: Universe>(u: &U, basis: &[Polynomial<U>], d: usize) -> Vec<Vec<U::Mono>> {
    let leads: Vec<&U::Mono> = basis.iter().filter_map(|s| s.lead_mono()).collect();
    let gens = u.generators();
    let reducible = |m: &U::Mono| leads.iter().any(|l| u.divides(l, m));
    let mut out: Vec<Vec<U::Mono>> = Vec::with_capacity(d + 1);
    let one = u.one();
    out.push(if reducible(&one) {
        Vec::new()
    } else {
        vec![one]
    });
    for _ in 1..=d {
        let prev = out.last().unwrap();
        let mut next: Vec<U::Mono> = Vec::new();
        let mut seen = HashSet::new();
        for m in prev {
            for g in &gens {
                let n = u.mul(m, g);
                if !reducible(&n) && seen.insert(n.clone()) {
                    next.push(n);
                }
            }
        }
        next.sort_by(|a, b| u.cmp(b, a));
        out.push(next);
    }
    out
}

/// Irreducible monomials of degree exactly `d`, descending.
pub fn irr<U: Universe>(u: &U, basis: &[Polynomial<U>], d: usize) -> Vec<U::Mono> {
    irr_up_to(u, basis, d).pop().unwrap_or_default()
}

/// Membership via reduction, certified only within the verified degree.
pub fn word_problem<U: Universe>(
    f: &Polynomial<U>,
    state: &BasisState<U>,
) -> Result<bool, RewriteError> {
    if let Some(bound) = state.verified_degree() {
        let degree = f
            .terms()
            .iter()
            .map(|(m, _)| f.universe().degree(m))
            .max()
            .unwrap_or(0);
        if degree > bound {
            return Err(RewriteError::DegreeOutOfBound { degree, bound });
        }
    }
    Ok(normal_form(f, &state.elements).is_zero())
}
