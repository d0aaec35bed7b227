use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use preord::category::{Morph, PreObj};
use preord::decompose::{core_partition, quotient_poset};
use preord::dot::{export_dot, DotOptions};
use preord::enumerate::{count_objects, enumerate_objects, objects_up_to, EnumSpec, ObjectKind};
use preord::exactness::{self, Seq};
use preord::io::{load_morphism, load_object, save_morphism, save_object};
use preord::pretorsion::{pretorsion_verify, ObjClass};
use preord::stable;
use preord::topology::{clopen_enumerate, components, minimal_part};
use preord::DEFAULT_BUDGET;

#[derive(Parser)]
#[command(name = "preord", version, about = "Finite preorders, their prekernels and the stable category")]
struct Cli {
    /// Maximum number of candidate maps a single search may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET as u64)]
    budget: u64,

    /// Write the main result to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate an object file, optionally with a morphism into a codomain.
    Check { object: PathBuf, morphism: Option<PathBuf>, codomain: Option<PathBuf> },
    /// Symmetric-core blocks and the quotient poset.
    Decompose { object: PathBuf },
    /// Connected components, clopen count and minimal part.
    Components { object: PathBuf },
    /// Canonical prekernel of a morphism.
    Prekernel { dom: PathBuf, cod: PathBuf, morphism: PathBuf },
    /// Canonical precokernel of a morphism.
    Precokernel { dom: PathBuf, cod: PathBuf, morphism: PathBuf },
    /// Is X --f--> Y --g--> Z short preexact?
    SequenceCheck { x: PathBuf, y: PathBuf, z: PathBuf, f: PathBuf, g: PathBuf },
    /// Are two morphisms equal in the stable category?
    StableEq { dom: PathBuf, cod: PathBuf, f: PathBuf, g: PathBuf },
    /// Are two objects isomorphic in the stable category?
    StableIso { a: PathBuf, b: PathBuf },
    /// Compare a short exact sequence of the stable category with the canonical row.
    ClassifyExact {
        x: PathBuf,
        y: PathBuf,
        z: PathBuf,
        f: PathBuf,
        g: PathBuf,
        /// Largest test object used by the kernel and cokernel checks.
        #[arg(long, default_value_t = 2)]
        max_n: usize,
    },
    /// Check the pretorsion axioms on all objects up to a size.
    VerifyPretorsion {
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = ClassArg::Equiv)]
        torsion: ClassArg,
        #[arg(long, value_enum, default_value_t = ClassArg::Parord)]
        torsionfree: ClassArg,
    },
    /// Count (or list) all labeled objects of a kind.
    Enumerate {
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = KindArg::Preorder)]
        kind: KindArg,
        /// Print every object in canonical form.
        #[arg(long)]
        list: bool,
    },
    /// Graphviz rendering of an object.
    Dot {
        object: PathBuf,
        #[arg(long)]
        hasse: bool,
        #[arg(long)]
        color_components: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Triv,
    Equiv,
    Parord,
    All,
}

impl ClassArg {
    fn class(self) -> ObjClass {
        match self {
            ClassArg::Triv => ObjClass::triv(),
            ClassArg::Equiv => ObjClass::equiv(),
            ClassArg::Parord => ObjClass::par_ord(),
            ClassArg::All => ObjClass::all(),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Preorder,
    Equivalence,
    PartialOrder,
    Trivial,
}

impl From<KindArg> for ObjectKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Preorder => ObjectKind::Preorder,
            KindArg::Equivalence => ObjectKind::Equivalence,
            KindArg::PartialOrder => ObjectKind::PartialOrder,
            KindArg::Trivial => ObjectKind::Trivial,
        }
    }
}

enum Outcome {
    Pass(String),
    Fail(String),
}

struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type Run = Result<Outcome, UsageError>;

fn read(path: &Path) -> Result<String, UsageError> {
    fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

fn object(path: &Path) -> Result<PreObj, UsageError> {
    load_object(&read(path)?).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

fn morphism(path: &Path, dom: &PreObj, cod: &PreObj) -> Result<Morph, UsageError> {
    load_morphism(&read(path)?, dom, cod).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

fn describe(a: &PreObj) -> String {
    let pairs: Vec<String> = a.rel().off_diagonal_pairs().map(|(x, y)| format!("{x}<={y}")).collect();
    format!("n={} [{}]", a.n(), pairs.join(", "))
}

fn blocks(b: &[Vec<usize>]) -> String {
    let parts: Vec<String> =
        b.iter().map(|blk| format!("{{{}}}", blk.iter().map(usize::to_string).collect::<Vec<_>>().join(","))).collect();
    parts.join(" ")
}

fn check(obj: &Path, morph: Option<&Path>, cod: Option<&Path>) -> Run {
    let a = object(obj)?;
    let mut s = String::new();
    writeln!(s, "object: {}", describe(&a))?;
    writeln!(s, "trivial: {}", a.is_trivial())?;
    writeln!(s, "equivalence: {}", a.is_equivalence())?;
    writeln!(s, "partial order: {}", a.is_partial_order())?;
    match (morph, cod) {
        (Some(m), Some(c)) => {
            let b = object(c)?;
            let f = morphism(m, &a, &b)?;
            writeln!(s, "morphism: {}", save_morphism(&f))?;
            writeln!(s, "trivial morphism: {}", f.is_trivial())?;
            writeln!(s, "mono: {}, epi: {}, iso: {}", f.is_mono(), f.is_epi(), f.is_iso())?;
        }
        (None, None) => {}
        _ => return Err(UsageError("a morphism needs both a map file and a codomain file".into())),
    }
    Ok(Outcome::Pass(s))
}

fn decompose(obj: &Path) -> Run {
    let a = object(obj)?;
    let (q, pi) = quotient_poset(&a);
    let mut s = String::new();
    writeln!(s, "blocks: {}", blocks(core_partition(&a).blocks()))?;
    writeln!(s, "projection: {}", save_morphism(&pi))?;
    writeln!(s, "quotient poset: {}", save_object(&q))?;
    Ok(Outcome::Pass(s))
}

fn components_cmd(obj: &Path) -> Run {
    let a = object(obj)?;
    let parts = components(&a);
    let mut s = String::new();
    writeln!(s, "components: {}", blocks(parts.blocks()))?;
    writeln!(s, "clopen sets: {}", clopen_enumerate(&a)?.len())?;
    let star: Vec<String> = minimal_part(&a).elements().iter().map(usize::to_string).collect();
    writeln!(s, "minimal part: {{{}}}", star.join(","))?;
    Ok(Outcome::Pass(s))
}

fn construction(dom: &Path, cod: &Path, m: &Path, kernel: bool) -> Run {
    let a = object(dom)?;
    let b = object(cod)?;
    let f = morphism(m, &a, &b)?;
    let (obj, map) = if kernel {
        let k = exactness::prekernel(&f);
        (k.dom().clone(), k)
    } else {
        let p = exactness::precokernel(&f);
        (p.cod().clone(), p)
    };
    let mut s = String::new();
    writeln!(s, "object: {}", save_object(&obj))?;
    writeln!(s, "map: {}", save_morphism(&map))?;
    Ok(Outcome::Pass(s))
}

fn load_sequence(x: &Path, y: &Path, z: &Path, f: &Path, g: &Path) -> Result<(Morph, Morph), UsageError> {
    let (x, y, z) = (object(x)?, object(y)?, object(z)?);
    Ok((morphism(f, &x, &y)?, morphism(g, &y, &z)?))
}

fn sequence_check(x: &Path, y: &Path, z: &Path, f: &Path, g: &Path) -> Run {
    let (f, g) = load_sequence(x, y, z, f, g)?;
    let seq = Seq::new(f, g)?;
    Ok(match exactness::preexact_failure(&seq) {
        None => Outcome::Pass("short preexact: yes\n".into()),
        Some(why) => Outcome::Fail(format!("short preexact: no\ncounterexample: {why}\n")),
    })
}

fn stable_eq(dom: &Path, cod: &Path, f: &Path, g: &Path) -> Run {
    let a = object(dom)?;
    let b = object(cod)?;
    let f = morphism(f, &a, &b)?;
    let g = morphism(g, &a, &b)?;
    if stable::stable_eq(&f, &g)? {
        return Ok(Outcome::Pass("stably equal: yes\n".into()));
    }
    let parts = components(&a);
    let witness = parts
        .blocks()
        .iter()
        .find(|blk| blk.iter().any(|&x| f.apply(x) != g.apply(x)))
        .expect("maps differ somewhere");
    Ok(Outcome::Fail(format!(
        "stably equal: no\ncounterexample: component {} where the maps differ and are not both trivial\n",
        blocks(std::slice::from_ref(witness))
    )))
}

fn stable_iso(a: &Path, b: &Path) -> Run {
    let (a, b) = (object(a)?, object(b)?);
    Ok(match stable::stable_iso(&a, &b) {
        Some((f, g)) => Outcome::Pass(format!(
            "stably isomorphic: yes\nforward: {}\nbackward: {}\n",
            save_morphism(&f),
            save_morphism(&g)
        )),
        None => {
            let star = |o: &PreObj| minimal_part(o).len();
            Outcome::Fail(format!(
                "stably isomorphic: no\ncounterexample: minimal parts of sizes {} and {} are not isomorphic\n",
                star(&a),
                star(&b)
            ))
        }
    })
}

fn classify(x: &Path, y: &Path, z: &Path, f: &Path, g: &Path, max_n: usize, budget: u128) -> Run {
    let (f, g) = load_sequence(x, y, z, f, g)?;
    let tests = objects_up_to(max_n, ObjectKind::Preorder)?;
    match stable::classify_short_exact(&f, &g, &tests, budget) {
        Ok(d) => {
            let mut s = String::new();
            let sim = preord::Partition::from_equivalence(&d.sim)?;
            writeln!(s, "short exact: yes")?;
            writeln!(s, "equivalence classes: {}", blocks(sim.blocks()))?;
            writeln!(s, "kernel object: {}", save_object(d.kernel.dom()))?;
            writeln!(s, "quotient object: {}", save_object(d.projection.cod()))?;
            writeln!(s, "left: {}", save_morphism(&d.left))?;
            writeln!(s, "right: {}", save_morphism(&d.right))?;
            Ok(Outcome::Pass(s))
        }
        Err(preord::Error::NotShortExact(why)) => {
            Ok(Outcome::Fail(format!("short exact: no\ncounterexample: {why}\n")))
        }
        Err(e) => Err(e.into()),
    }
}

fn verify_pretorsion(max_n: usize, t: ClassArg, f: ClassArg, budget: u128) -> Run {
    let r = pretorsion_verify(&t.class(), &f.class(), max_n, budget)?;
    let mut s = String::new();
    writeln!(s, "theory: ({}, {}), objects up to size {}", r.torsion, r.torsionfree, r.max_n)?;
    writeln!(
        s,
        "axiom 1: {} ({} objects, {} via torsion sequence, {} via identity)",
        if r.axiom_one_holds() { "pass" } else { "fail" },
        r.objects_checked,
        r.via_torsion_sequence,
        r.via_identity
    )?;
    writeln!(s, "axiom 2: {} ({} maps)", if r.axiom_two_holds() { "pass" } else { "fail" }, r.maps_checked)?;
    if r.z_search_bounded {
        writeln!(s, "note: factorizations were searched through objects no larger than the domain")?;
    }
    if let Some((b, why)) = &r.axiom_one_witness {
        writeln!(s, "counterexample (axiom 1): {} ({why})", save_object(b))?;
    }
    if let Some(h) = &r.axiom_two_witness {
        writeln!(
            s,
            "counterexample (axiom 2): {} from {} to {}",
            save_morphism(h),
            save_object(h.dom()),
            save_object(h.cod())
        )?;
    }
    Ok(if r.passes() { Outcome::Pass(s) } else { Outcome::Fail(s) })
}

fn enumerate(max_n: usize, kind: ObjectKind, list: bool) -> Run {
    let mut s = String::new();
    for n in 1..=max_n {
        let spec = EnumSpec::new(n, kind)?;
        if list {
            for a in enumerate_objects(spec) {
                writeln!(s, "{}", save_object(&a))?;
            }
        } else {
            writeln!(s, "n={n}: {}", count_objects(spec))?;
        }
    }
    Ok(Outcome::Pass(s))
}

fn run(cli: &Cli) -> Run {
    let budget = cli.budget as u128;
    match &cli.command {
        Command::Check { object, morphism, codomain } => check(object, morphism.as_deref(), codomain.as_deref()),
        Command::Decompose { object } => decompose(object),
        Command::Components { object } => components_cmd(object),
        Command::Prekernel { dom, cod, morphism } => construction(dom, cod, morphism, true),
        Command::Precokernel { dom, cod, morphism } => construction(dom, cod, morphism, false),
        Command::SequenceCheck { x, y, z, f, g } => sequence_check(x, y, z, f, g),
        Command::StableEq { dom, cod, f, g } => stable_eq(dom, cod, f, g),
        Command::StableIso { a, b } => stable_iso(a, b),
        Command::ClassifyExact { x, y, z, f, g, max_n } => classify(x, y, z, f, g, *max_n, budget),
        Command::VerifyPretorsion { max_n, torsion, torsionfree } => {
            verify_pretorsion(*max_n, *torsion, *torsionfree, budget)
        }
        Command::Enumerate { max_n, kind, list } => enumerate(*max_n, (*kind).into(), *list),
        Command::Dot { object: path, hasse, color_components } => {
            let a = object(path)?;
            let options = DotOptions { hasse: *hasse, color_components: *color_components };
            Ok(Outcome::Pass(export_dot(&a, options)))
        }
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), UsageError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| UsageError(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|outcome| match outcome {
        Outcome::Pass(text) => emit(&text, cli.out.as_deref()).map(|_| ExitCode::SUCCESS),
        Outcome::Fail(text) => {
            // counterexamples always go to stdout
            print!("{text}");
            Ok(ExitCode::from(1))
        }
    });
    match result {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

