//! Argument parsing and the commands.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use diopkit_core::dioperad::{
    arities, associativity_a, associativity_b, box_table, check_algebra, equivariance_c, free_slice, ideal_sweep,
    quotient_dim, DimTable, FreeElement, FreeSlice, Presentation, SLOTS, WEIGHT_LIMIT,
};
use diopkit_core::koszul::{
    cobar_slice, complement_dims_add_up, distributive_check, koszulity_row, pairing_is_equivariant, quadratic_dual,
    same_relations, DistributiveRow as CoreDistRow, Orientation,
};
use diopkit_core::ratlin::homology_dims;
use diopkit_core::{Perm, Rat};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::cache::{sha256_hex, Cache};
use crate::report::*;
use crate::{load, CliError, Document};

#[derive(Debug, Parser)]
#[command(name = "diopkit", version, about = "Dioperads by generators and relations")]
pub struct Cli {
    #[command(flatten)]
    pub opts: Opts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Args)]
pub struct Opts {
    /// Largest weight computed; bi-arities satisfy m+n <= W+2
    #[arg(long, global = true, default_value_t = 4)]
    pub max_weight: usize,
    /// Result cache directory
    #[arg(long, global = true, default_value = ".diopkit-cache")]
    pub cache: PathBuf,
    /// Do not read or write the cache
    #[arg(long, global = true)]
    pub no_cache: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Worker threads (defaults to the number of CPUs)
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Seed for randomized checks
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Free and quotient dimensions
    Dims { presentation: String },
    /// Print the quadratic dual
    Dual { presentation: String },
    /// Cobar complex cohomology against the dual
    Cobar { presentation: String },
    /// Koszul complex homology
    Koszul {
        presentation: String,
        /// Also decide concentration of the cobar complex
        #[arg(long)]
        cobar: bool,
    },
    /// Dimensions of the box product of two presentations
    Box { first: String, second: String },
    /// Structural checks, distributive decomposition and koszulity
    Check { presentation: String },
    /// Check that structure maps on k^d define an algebra
    VerifyAlgebra {
        presentation: String,
        #[arg(long)]
        algebra: PathBuf,
    },
}

pub struct Context {
    pub cache: Cache,
    pub max_weight: usize,
    pub seed: u64,
}

impl Context {
    pub fn new(opts: &Opts) -> Self {
        let cache = if opts.no_cache { Cache::disabled() } else { Cache::new(Some(opts.cache.clone())) };
        Context { cache, max_weight: opts.max_weight, seed: opts.seed }
    }
}

struct Loaded {
    doc: Document,
    info: PresentationInfo,
}

fn load_info(spec: &str) -> Result<Loaded, CliError> {
    let doc = load(spec)?;
    let info =
        PresentationInfo { name: doc.presentation.name().to_string(), digest: sha256_hex(doc.print().as_bytes()) };
    Ok(Loaded { doc, info })
}

fn complex_row(arity: (usize, usize), c: &diopkit_core::ChainComplex, homology: BTreeMap<i32, usize>) -> ComplexRow {
    ComplexRow {
        arity,
        lowest: c.lowest(),
        dims: c.dims().to_vec(),
        homology: homology_list(&homology),
        euler: c.euler_characteristic(),
    }
}

fn dims_rows(ctx: &Context, l: &Loaded) -> Result<Vec<DimRow>, CliError> {
    let p = &l.doc.presentation;
    arities(ctx.max_weight)
        .into_par_iter()
        .map(|(m, n)| {
            ctx.cache.get_or_compute(&l.info.digest, "dims", (m, n), || {
                Ok(DimRow { arity: (m, n), free: free_slice(p, m, n)?.dim(), dim: quotient_dim(p, m, n)? })
            })
        })
        .collect()
}

fn koszul_rows(ctx: &Context, l: &Loaded, with_cobar: bool) -> Result<Vec<KoszulRow>, CliError> {
    let p = &l.doc.presentation;
    let module = if with_cobar { "koszul+cobar" } else { "koszul" };
    arities(ctx.max_weight)
        .into_par_iter()
        .map(|(m, n)| {
            ctx.cache.get_or_compute(&l.info.digest, module, (m, n), || {
                let r = koszulity_row(p, m, n, with_cobar)?;
                let euler = r.euler_characteristic();
                let exact = r.exact();
                Ok(KoszulRow {
                    complex: ComplexRow {
                        arity: r.arity,
                        lowest: r.lowest,
                        dims: r.dims,
                        homology: homology_list(&r.homology),
                        euler,
                    },
                    exact,
                    cobar_concentrated: r.cobar_concentrated,
                })
            })
        })
        .collect()
}

fn cobar_rows(ctx: &Context, l: &Loaded) -> Result<Vec<CobarRow>, CliError> {
    let p = &l.doc.presentation;
    let dual = quadratic_dual(p)?;
    arities(ctx.max_weight)
        .into_par_iter()
        .map(|(m, n)| {
            ctx.cache.get_or_compute(&l.info.digest, "cobar", (m, n), || {
                let slice = cobar_slice(p, m, n)?;
                let h = homology_dims(slice.complex())?;
                let h0 = h.get(&0).copied().unwrap_or(0);
                let concentrated = h.iter().all(|(&q, &d)| q == 0 || d == 0);
                let top_dim = slice.complex().dim(0);
                let dual_free_dim = free_slice(&dual, m, n)?.dim();
                let dual_dim = quotient_dim(&dual, m, n)?;
                Ok(CobarRow {
                    complex: complex_row((m, n), slice.complex(), h),
                    h0,
                    dual_dim,
                    top_dim,
                    dual_free_dim,
                    h0_matches_dual: h0 == dual_dim && top_dim == dual_free_dim,
                    concentrated,
                })
            })
        })
        .collect()
}

fn dim_table(rows: &[DimRow]) -> DimTable {
    let mut t = DimTable::new();
    t.insert((1, 1), 1);
    for r in rows {
        t.insert(r.arity, r.dim);
    }
    t
}

fn dist_row(r: &CoreDistRow) -> DistributiveRow {
    DistributiveRow {
        arity: r.arity,
        dim: r.dim,
        box_ab: r.box_dims[0],
        box_ba: r.box_dims[1],
        spanned_ab: r.spanned[0],
        spanned_ba: r.spanned[1],
    }
}

fn verdict_word(o: Option<Orientation>) -> String {
    match o {
        Some(o) => format!("DECOMPOSES {o}"),
        None => "NEITHER".into(),
    }
}

fn item(name: &str, passed: bool, detail: impl Into<String>) -> CheckItem {
    CheckItem { name: name.into(), passed, detail: detail.into() }
}

fn random_element(
    e: &diopkit_core::sbimod::Generators,
    shapes: &[(usize, usize)],
    rng: &mut ChaCha8Rng,
) -> Option<FreeElement> {
    let (m, n) = *shapes.choose(rng)?;
    let slice = FreeSlice::new(e, m, n);
    if slice.dim() == 0 {
        return None;
    }
    let mut x = FreeElement::zero(m, n);
    for _ in 0..rng.gen_range(1..=2) {
        let b = rng.gen_range(0..slice.dim());
        let c = Rat::from_int(rng.gen_range(1..=3));
        x = x.add(&slice.basis_element(b).scale(&c)).ok()?;
    }
    Some(x)
}

fn random_perm(n: usize, rng: &mut ChaCha8Rng) -> Perm {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    Perm::from_images(v).expect("a shuffle is a permutation")
}

/// Axioms (a), (b) and (c) on seeded random elements of the free dioperad.
fn axioms_on_samples(p: &Presentation, seed: u64, samples: usize) -> Result<Option<String>, CliError> {
    let e = p.generators();
    let shapes: Vec<(usize, usize)> = [(1, 2), (2, 1), (1, 3), (2, 2), (3, 1)]
        .into_iter()
        .filter(|&(m, n)| FreeSlice::new(e, m, n).dim() > 0)
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let (Some(f), Some(g), Some(h)) = (
            random_element(e, &shapes, &mut rng),
            random_element(e, &shapes, &mut rng),
            random_element(e, &shapes, &mut rng),
        ) else {
            return Ok(None);
        };
        if let Some(at) = associativity_a(e, &f, &g, &h)? {
            return Ok(Some(at));
        }
        if let Some(at) = associativity_b(e, &f, &g, &h)? {
            return Ok(Some(at));
        }
        let ((m1, n1), (m2, n2)) = (f.arity(), g.arity());
        let (p1, s1, p2, s2) = (
            random_perm(m1, &mut rng),
            random_perm(n1, &mut rng),
            random_perm(m2, &mut rng),
            random_perm(n2, &mut rng),
        );
        let (i, j) = (rng.gen_range(1..=n1), rng.gen_range(1..=m2));
        if !equivariance_c(e, &f, &g, (&p1, &s1), (&p2, &s2), i, j)? {
            return Ok(Some(format!("(c) at i={i} j={j}")));
        }
    }
    Ok(None)
}

fn check(ctx: &Context, l: &Loaded) -> Result<(Outcome, String, i32), CliError> {
    let p = &l.doc.presentation;
    let low = ctx.max_weight.min(3);
    let mut checks = Vec::new();

    let axioms = axioms_on_samples(p, ctx.seed, 20)?;
    checks.push(item("axioms", axioms.is_none(), axioms.unwrap_or_else(|| "20 seeded triples".into())));

    checks.push(item("pairing_equivariant", pairing_is_equivariant(p)?, ""));

    let dual = quadratic_dual(p)?;
    let dims: Vec<String> = SLOTS
        .iter()
        .map(|&s| format!("{}+{}={}", p.relation(s).dim(), dual.relation(s).dim(), p.relation(s).ambient_dim()))
        .collect();
    checks.push(item("dual_dimensions", complement_dims_add_up(p, &dual), dims.join(" ")));
    checks.push(item("double_dual", same_relations(p, &quadratic_dual(&dual)?), ""));

    checks.push(item("ideal_sweep", ideal_sweep(p, low)?, format!("weight <= {low}")));

    let cobar = cobar_rows(&Context { cache: Cache::disabled(), max_weight: low, seed: ctx.seed }, l)?;
    let bad: Vec<String> = cobar
        .iter()
        .filter(|r| !r.h0_matches_dual)
        .map(|r| format!("({},{})", r.complex.arity.0, r.complex.arity.1))
        .collect();
    checks.push(item(
        "h0_is_dual",
        bad.is_empty(),
        if bad.is_empty() { format!("weight <= {low}") } else { bad.join(" ") },
    ));

    let d = distributive_check(p)?;
    let distributive = Distributive {
        verdict: verdict_word(d.verdict),
        rows: d.rows.iter().map(dist_row).collect(),
        dual_rows: d.dual_rows.iter().map(dist_row).collect(),
        dual_holds: d.dual_holds(),
    };
    if let Some(false) = distributive.dual_holds {
        checks.push(item("dual_distributive", false, "dual does not decompose in the flipped order"));
    }

    let koszul = koszul_rows(ctx, l, true)?;
    let inconsistent: Vec<String> = koszul
        .iter()
        .filter(|r| r.cobar_concentrated.is_some_and(|c| c != r.exact))
        .map(|r| format!("({},{})", r.complex.arity.0, r.complex.arity.1))
        .collect();
    if !inconsistent.is_empty() {
        checks.push(item("koszul_cobar_agree", false, inconsistent.join(" ")));
    }
    let first_nonexact = koszul.iter().find(|r| !r.exact).map(|r| r.complex.arity);

    let all_pass = checks.iter().all(|c| c.passed);
    let verdict = format!(
        "{} distributive={} koszulity={}",
        if all_pass { "PASS" } else { "FAIL" },
        distributive.verdict,
        if first_nonexact.is_some() { "NONEXACT" } else { "EXACT" }
    );
    let code = if all_pass && d.verdict.is_some() && first_nonexact.is_none() { 0 } else { 1 };
    Ok((Outcome::Check { checks, distributive, koszul, first_nonexact }, verdict, code))
}

/// Runs a parsed command line and returns its report.
pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let ctx = Context::new(&cli.opts);
    run_with(&ctx, &cli.command)
}

pub fn run_with(ctx: &Context, command: &Command) -> Result<Report, CliError> {
    if ctx.max_weight == 0 || ctx.max_weight > WEIGHT_LIMIT {
        return Err(CliError::Usage(format!("--max-weight must be between 1 and {WEIGHT_LIMIT}")));
    }
    let mut args = BTreeMap::new();
    args.insert("max_weight".to_string(), ctx.max_weight.to_string());
    let (name, loaded, outcome, verdict, exit_code) = match command {
        Command::Dims { presentation } => {
            let l = load_info(presentation)?;
            let rows = dims_rows(ctx, &l)?;
            ("dims", vec![l], Outcome::Dims { rows }, "OK".to_string(), 0)
        }
        Command::Dual { presentation } => {
            let l = load_info(presentation)?;
            let d = l.doc.dual()?;
            let generators = d
                .gens
                .iter()
                .map(|g| GeneratorInfo { name: g.name.clone(), arity: g.arity(), dim: g.space.dim() })
                .collect();
            let relation_dims = SLOTS.iter().map(|&s| (s, d.presentation.relation(s).dim())).collect();
            let outcome =
                Outcome::Dual { name: d.presentation.name().to_string(), generators, relation_dims, text: d.print() };
            ("dual", vec![l], outcome, "OK".to_string(), 0)
        }
        Command::Cobar { presentation } => {
            let l = load_info(presentation)?;
            let rows = cobar_rows(ctx, &l)?;
            let ok = rows.iter().all(|r| r.concentrated && r.h0_matches_dual);
            let v = if ok { "CONCENTRATED" } else { "NOT CONCENTRATED" };
            ("cobar", vec![l], Outcome::Cobar { rows }, v.to_string(), if ok { 0 } else { 1 })
        }
        Command::Koszul { presentation, cobar } => {
            args.insert("cobar".to_string(), cobar.to_string());
            let l = load_info(presentation)?;
            let rows = koszul_rows(ctx, &l, *cobar)?;
            let first_nonexact = rows.iter().find(|r| !r.exact).map(|r| r.complex.arity);
            let v = if first_nonexact.is_some() { "NONEXACT" } else { "EXACT" };
            let code = if first_nonexact.is_some() { 1 } else { 0 };
            ("koszul", vec![l], Outcome::Koszul { rows, first_nonexact }, v.to_string(), code)
        }
        Command::Box { first, second } => {
            let (a, b) = (load_info(first)?, load_info(second)?);
            let (ta, tb) = (dim_table(&dims_rows(ctx, &a)?), dim_table(&dims_rows(ctx, &b)?));
            let t = box_table(&ta, &tb, ctx.max_weight)?;
            let rows =
                arities(ctx.max_weight).into_iter().map(|k| BoxRow { arity: k, dim: t.get(k).unwrap_or(0) }).collect();
            ("box", vec![a, b], Outcome::Box { rows }, "OK".to_string(), 0)
        }
        Command::Check { presentation } => {
            args.insert("seed".to_string(), ctx.seed.to_string());
            let l = load_info(presentation)?;
            let (outcome, v, code) = check(ctx, &l)?;
            ("check", vec![l], outcome, v, code)
        }
        Command::VerifyAlgebra { presentation, algebra } => {
            args.remove("max_weight");
            let l = load_info(presentation)?;
            let text = std::fs::read_to_string(algebra).map_err(|e| CliError::Io(algebra.display().to_string(), e))?;
            let alg = crate::algebra::parse_algebra(&text, &l.doc)?;
            let r = check_algebra(&l.doc.presentation, &alg)?;
            let ok = r.is_morphism();
            let outcome = Outcome::VerifyAlgebra { symmetry_violations: r.symmetry_violations, violated: r.violated };
            (
                "verify-algebra",
                vec![l],
                outcome,
                if ok { "ALGEBRA" } else { "NOT AN ALGEBRA" }.to_string(),
                if ok { 0 } else { 1 },
            )
        }
    };
    Ok(Report {
        schema: SCHEMA.to_string(),
        command: name.to_string(),
        args,
        presentations: loaded.into_iter().map(|l| l.info).collect(),
        outcome,
        verdict,
        exit_code,
    })
}
