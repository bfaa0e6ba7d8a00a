//! The `tgsb` command line.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use crate::lift::{eps_lift, tensor_lift, Lift, LiftError};
use crate::monoids::Alphabet;
use crate::oracle::{IdealSlice, OracleError};
use crate::par::Parallelism;
use crate::poly::{Polynomial, Ring};
use crate::presentation::{parse_polynomial, Overrides, ParseError, Presentation, Relations};
use crate::rewrite::{
    check_gsb, complete, irr_up_to, reduce, word_problem, BasisState, CompletionConfig,
    CompletionError, RewriteError,
};
use crate::scalar::Field;
use crate::universe::{Universe, UniverseKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "tgsb",
    version,
    about = "Gröbner-Shirshov bases for free algebras and their tensor products"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Largest ambiguity degree examined.
    #[arg(long, global = true, default_value_t = 8)]
    pub max_degree: usize,
    /// Longest parameter word tried in parametric compositions.
    #[arg(long, global = true, default_value_t = 2)]
    pub param_bound: usize,
    /// `q` or `p=<prime>`; overrides the file.
    #[arg(long, global = true, value_parser = parse_field)]
    pub field: Option<Field>,
    /// Monomial order; overrides the file.
    #[arg(long, global = true)]
    pub order: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = LogMode::Quiet)]
    pub log: LogMode,
    /// Maximum number of compositions checked.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub budget: usize,
    /// Run without the thread pool.
    #[arg(long, global = true)]
    pub sequential: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LogMode {
    Pairs,
    Quiet,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Complete the relations to a basis up to the degree bound.
    Complete { file: PathBuf },
    /// Check that the relations are closed under compositions.
    Check { file: PathBuf },
    /// Reduce a polynomial by the relations as given.
    Reduce {
        file: PathBuf,
        #[arg(long)]
        poly: String,
    },
    /// Irreducible monomials of the completed basis, by degree.
    Irr {
        file: PathBuf,
        #[arg(long)]
        degree: usize,
    },
    /// Decide membership by completion and reduction.
    Wordproblem {
        file: PathBuf,
        #[arg(long)]
        poly: String,
    },
    /// Lift a commutative or mixed basis to the free or tensor side.
    #[command(subcommand)]
    Lift(LiftCommand),
    /// Brute-force linear algebra on the ideal.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Debug, Subcommand)]
pub enum LiftCommand {
    /// Commutative basis to the free algebra.
    Eps { file: PathBuf },
    /// Mixed basis to the tensor product.
    Tensor { file: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// Ideal membership by linear algebra.
    Member {
        file: PathBuf,
        #[arg(long)]
        poly: String,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Quotient dimension in each degree.
    Dims {
        file: PathBuf,
        #[arg(long)]
        degree: usize,
    },
}

fn parse_field(s: &str) -> Result<Field, String> {
    let t = s.trim().to_ascii_lowercase();
    if t == "q" {
        return Ok(Field::Rational);
    }
    let p = t
        .strip_prefix("p=")
        .ok_or_else(|| format!("expected `q` or `p=<prime>`, got `{s}`"))?;
    let p: u64 = p.parse().map_err(|_| format!("bad prime `{p}`"))?;
    Field::prime(p).map_err(|e| e.to_string())
}

/// A failure that ends the command with a given exit status.
struct Exit(i32, String);

impl From<ParseError> for Exit {
    fn from(e: ParseError) -> Self {
        Exit(EXIT_USAGE, e.to_string())
    }
}

impl From<io::Error> for Exit {
    fn from(e: io::Error) -> Self {
        Exit(EXIT_USAGE, e.to_string())
    }
}

impl From<RewriteError> for Exit {
    fn from(e: RewriteError) -> Self {
        Exit(EXIT_USAGE, e.to_string())
    }
}

impl From<OracleError> for Exit {
    fn from(e: OracleError) -> Self {
        Exit(EXIT_USAGE, e.to_string())
    }
}

impl From<LiftError> for Exit {
    fn from(e: LiftError) -> Self {
        match e {
            LiftError::Check(_) => Exit(EXIT_USAGE, e.to_string()),
            _ => Exit(EXIT_NEGATIVE, e.to_string()),
        }
    }
}

struct Ctx<'a> {
    cli: &'a Cli,
    cfg: CompletionConfig,
    out: &'a mut dyn Write,
}

/// Runs one command, writing the report to `out` and diagnostics to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cfg = CompletionConfig {
        max_degree: cli.max_degree,
        param_bound: cli.param_bound,
        budget: cli.budget,
        parallelism: if cli.sequential {
            Parallelism::Sequential
        } else {
            Parallelism::Parallel
        },
        ..CompletionConfig::default()
    };
    let mut ctx = Ctx { cli, cfg, out };
    match dispatch(&mut ctx) {
        Ok(code) => code,
        Err(Exit(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn load(ctx: &Ctx, file: &PathBuf) -> Result<Presentation, Exit> {
    let text = fs::read_to_string(file)
        .map_err(|e| Exit(EXIT_USAGE, format!("{}: {e}", file.display())))?;
    let ov = Overrides {
        field: ctx.cli.field,
        order: ctx.cli.order.clone(),
    };
    Ok(Presentation::parse_with(&text, &ov)?)
}

macro_rules! on_relations {
    ($rels:expr, $f:ident ( $($arg:expr),* )) => {
        match $rels {
            Relations::Free(r, s) => $f(r, s, $($arg),*),
            Relations::Commutative(r, s) => $f(r, s, $($arg),*),
            Relations::Tensor(r, s) => $f(r, s, $($arg),*),
            Relations::Mixed(r, s) => $f(r, s, $($arg),*),
        }
    };
}

fn dispatch(ctx: &mut Ctx) -> Result<i32, Exit> {
    let cli = ctx.cli;
    match &cli.command {
        Command::Complete { file } => {
            let p = load(ctx, file)?;
            notes(ctx, &p)?;
            on_relations!(&p.relations, cmd_complete(ctx, &p))
        }
        Command::Check { file } => {
            let p = load(ctx, file)?;
            notes(ctx, &p)?;
            on_relations!(&p.relations, cmd_check(ctx))
        }
        Command::Reduce { file, poly } => {
            let p = load(ctx, file)?;
            on_relations!(&p.relations, cmd_reduce(ctx, poly))
        }
        Command::Irr { file, degree } => {
            let p = load(ctx, file)?;
            on_relations!(&p.relations, cmd_irr(ctx, *degree))
        }
        Command::Wordproblem { file, poly } => {
            let p = load(ctx, file)?;
            on_relations!(&p.relations, cmd_wordproblem(ctx, poly))
        }
        Command::Lift(LiftCommand::Eps { file }) => {
            let p = load(ctx, file)?;
            let Relations::Commutative(r, s) = &p.relations else {
                return Err(Exit(
                    EXIT_USAGE,
                    format!(
                        "lift eps needs a commutative presentation, got {}",
                        p.kind()
                    ),
                ));
            };
            let l = eps_lift(r, s, ctx.cfg)?;
            emit_lift(
                ctx,
                &p,
                UniverseKind::Free,
                l.ring.universe.order.to_string(),
                &l,
            )
        }
        Command::Lift(LiftCommand::Tensor { file }) => {
            let p = load(ctx, file)?;
            let Relations::Mixed(r, s) = &p.relations else {
                return Err(Exit(
                    EXIT_USAGE,
                    format!("lift tensor needs a mixed presentation, got {}", p.kind()),
                ));
            };
            let l = tensor_lift(r, s, ctx.cfg)?;
            emit_lift(
                ctx,
                &p,
                UniverseKind::Tensor,
                l.ring.universe.order.to_string(),
                &l,
            )
        }
        Command::Oracle(OracleCommand::Member { file, poly, degree }) => {
            let p = load(ctx, file)?;
            on_relations!(&p.relations, cmd_oracle_member(ctx, poly, *degree))
        }
        Command::Oracle(OracleCommand::Dims { file, degree }) => {
            let p = load(ctx, file)?;
            on_relations!(&p.relations, cmd_oracle_dims(ctx, *degree))
        }
    }
}

fn notes(ctx: &mut Ctx, p: &Presentation) -> Result<(), Exit> {
    for n in &p.notes {
        writeln!(ctx.out, "# {n}")?;
    }
    Ok(())
}

fn log_lines<U: Universe>(ctx: &mut Ctx, st: &BasisState<U>) -> Result<(), Exit> {
    if ctx.cli.log == LogMode::Pairs {
        for l in &st.log {
            writeln!(ctx.out, "{l}")?;
        }
    }
    Ok(())
}

/// Runs completion; a spent budget prints the partial state and exits 3.
fn completed<U: Universe>(
    ctx: &mut Ctx,
    ring: &Arc<Ring<U>>,
    s: &[Polynomial<U>],
) -> Result<BasisState<U>, Exit> {
    match complete(ring, s, ctx.cfg) {
        Ok(st) => Ok(st),
        Err(CompletionError::Rewrite(e)) => Err(e.into()),
        Err(CompletionError::Budget(b)) => {
            log_lines(ctx, &b.state)?;
            write!(ctx.out, "{}", b.state.summary())?;
            Err(Exit(EXIT_BUDGET, b.to_string()))
        }
    }
}

fn cmd_complete<U: Universe>(
    ring: &Arc<Ring<U>>,
    s: &[Polynomial<U>],
    ctx: &mut Ctx,
    p: &Presentation,
) -> Result<i32, Exit> {
    let st = completed(ctx, ring, s)?;
    log_lines(ctx, &st)?;
    write!(ctx.out, "{}", st.summary())?;
    write_presentation(
        ctx.out,
        p.field,
        &p.x,
        p.y.as_ref(),
        p.kind(),
        &p.relations.order_name(),
        &st.elements,
    )?;
    Ok(EXIT_OK)
}

fn cmd_check<U: Universe>(
    ring: &Arc<Ring<U>>,
    s: &[Polynomial<U>],
    ctx: &mut Ctx,
) -> Result<i32, Exit> {
    let st = match check_gsb(ring, s, ctx.cfg) {
        Ok(st) => st,
        Err(CompletionError::Rewrite(e)) => return Err(e.into()),
        Err(CompletionError::Budget(b)) => {
            write!(ctx.out, "{}", b.state.summary())?;
            return Err(Exit(EXIT_BUDGET, b.to_string()));
        }
    };
    log_lines(ctx, &st)?;
    write!(ctx.out, "{}", st.summary())?;
    if st.failures.is_empty() {
        writeln!(ctx.out, "GSB verified up to degree {}", ctx.cfg.max_degree)?;
        Ok(EXIT_OK)
    } else {
        for f in &st.failures {
            writeln!(ctx.out, "nontrivial: {f}")?;
        }
        writeln!(
            ctx.out,
            "not a GSB: {} nontrivial compositions",
            st.failures.len()
        )?;
        Ok(EXIT_NEGATIVE)
    }
}

fn cmd_reduce<U: Universe>(
    ring: &Arc<Ring<U>>,
    s: &[Polynomial<U>],
    ctx: &mut Ctx,
    poly: &str,
) -> Result<i32, Exit> {
    let f = parse_polynomial(ring, poly)?;
    let tr = reduce(&f, s);
    let u = &ring.universe;
    for st in &tr.steps {
        writeln!(
            ctx.out,
            "step {}*({})*s{}*({})",
            st.coeff,
            u.display(&st.left),
            st.index,
            u.display(&st.right)
        )?;
    }
    writeln!(ctx.out, "remainder {}", tr.remainder)?;
    Ok(EXIT_OK)
}

fn cmd_irr<U: Universe>(
    ring: &Arc<Ring<U>>,
    s: &[Polynomial<U>],
    ctx: &mut Ctx,
    degree: usize,
) -> Result<i32, Exit> {
    let st = completed(ctx, ring, s)?;
    if let Some(bound) = st.verified_degree() {
        if degree > bound {
            return Err(Exit(
                EXIT_USAGE,
                format!("degree {degree} exceeds the verified bound {bound}"),
            ));
        }
    }
    writeln!(ctx.out, "status={}", st.status)?;
    let u = &ring.universe;
    for (d, ms) in irr_up_to(u, &st.elements, degree).iter().enumerate() {
        let shown: Vec<String> = ms.iter().map(|m| u.display(m).to_string()).collect();
        writeln!(ctx.out, "d={d} count={} {}", ms.len(), shown.join(" "))?;
    }
    Ok(EXIT_OK)
}

fn cmd_wordproblem<U: Universe>(
    ring: &Arc<Ring<U>>,
    s: &[Polynomial<U>],
    ctx: &mut Ctx,
    poly: &str,
) -> Result<i32, Exit> {
    let f = parse_polynomial(ring, poly)?;
    let st = completed(ctx, ring, s)?;
    writeln!(ctx.out, "status={}", st.status)?;
    if word_problem(&f, &st)? {
        writeln!(ctx.out, "member")?;
        Ok(EXIT_OK)
    } else {
        writeln!(
            ctx.out,
            "not a member; normal form {}",
            crate::rewrite::normal_form(&f, &st.elements)
        )?;
        Ok(EXIT_NEGATIVE)
    }
}

fn cmd_oracle_member<U: Universe>(
    ring: &Arc<Ring<U>>,
    s: &[Polynomial<U>],
    ctx: &mut Ctx,
    poly: &str,
    degree: Option<usize>,
) -> Result<i32, Exit> {
    let f = parse_polynomial(ring, poly)?;
    let d = degree.unwrap_or_else(|| f.degree());
    let slice = IdealSlice::new(s, &ring.universe, ring.field, d, ctx.cfg.parallelism);
    if slice.member(&f)? {
        writeln!(ctx.out, "member within degree {d}")?;
        Ok(EXIT_OK)
    } else {
        writeln!(ctx.out, "not a member within degree {d}")?;
        Ok(EXIT_NEGATIVE)
    }
}

fn cmd_oracle_dims<U: Universe>(
    ring: &Arc<Ring<U>>,
    s: &[Polynomial<U>],
    ctx: &mut Ctx,
    degree: usize,
) -> Result<i32, Exit> {
    let slice = IdealSlice::new(s, &ring.universe, ring.field, degree, ctx.cfg.parallelism);
    for (d, n) in slice.quotient_dims().iter().enumerate() {
        writeln!(ctx.out, "d={d} dim={n}")?;
    }
    Ok(EXIT_OK)
}

fn emit_lift<U: Universe>(
    ctx: &mut Ctx,
    p: &Presentation,
    kind: UniverseKind,
    order: String,
    l: &Lift<U>,
) -> Result<i32, Exit> {
    writeln!(
        ctx.out,
        "# lifted={} commutators={} degree_cap={}",
        l.lifted, l.commutators, l.degree_cap
    )?;
    if let Some(w) = &l.warning {
        writeln!(ctx.out, "# warning: {w}")?;
    }
    write_presentation(
        ctx.out,
        p.field,
        &p.x,
        p.y.as_ref(),
        kind,
        &order,
        &l.elements,
    )?;
    Ok(EXIT_OK)
}

/// Writes a presentation file that re-parses to the same relations.
pub fn write_presentation<U: Universe>(
    out: &mut dyn Write,
    field: Field,
    x: &Alphabet,
    y: Option<&Alphabet>,
    kind: UniverseKind,
    order: &str,
    elements: &[Polynomial<U>],
) -> io::Result<()> {
    writeln!(out, "field {field}")?;
    writeln!(out, "alphabet X: {}", x.names().join(" < "))?;
    if let Some(y) = y {
        writeln!(out, "alphabet Y: {}", y.names().join(" < "))?;
    }
    writeln!(out, "universe {kind}")?;
    writeln!(out, "order {order}")?;
    for f in elements {
        writeln!(out, "rel {f}")?;
    }
    Ok(())
}
