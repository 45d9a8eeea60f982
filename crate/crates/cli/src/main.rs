use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use loopfold::classalgebra::{inversion_table, shipped, ClassAlgebra, GroupClassAlgebra};
use loopfold::commgraph::{build_graph, Mode};
use loopfold::gfq::survey::survey_cell;
use loopfold::gfq::ClassicalKind;
use loopfold::loopfolder::{check_folder, search_folders, FolderSpec, Requirements, SearchOptions};
use loopfold::permgroup::catalog::by_name;
use loopfold::permgroup::GroupHandle;
use loopfold::verifier::{self, emit_report, fsp_certificate, Budget, Format};
use loopfold::{Error, Permutation};

#[derive(Parser)]
#[command(name = "loopfold", version, about = "Finite group checks for loop folders")]
struct Cli {
    /// Enumeration cap on group orders; overrides MAX_ENUM.
    #[arg(long, global = true, value_name = "N")]
    max_enum: Option<u128>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run or list verification scenarios.
    Verify {
        #[command(subcommand)]
        action: VerifyAction,
    },
    /// Conjugacy classes of a catalog group.
    Classes {
        group: String,
        #[arg(long)]
        json: bool,
    },
    /// One class multiplication coefficient a_ijk, classes given by name.
    Structconst {
        group: String,
        i: String,
        j: String,
        k: String,
        /// Use the bundled character table named GROUP instead of enumeration.
        #[arg(long)]
        table: bool,
    },
    /// Which involution classes invert which classes of odd prime order.
    InvertTable {
        group: String,
        #[arg(long)]
        table: bool,
        #[arg(long)]
        json: bool,
    },
    /// Components of a commuting graph on elements of odd order.
    Commgraph {
        group: String,
        /// all_odd, odd_prime, or the name of a class of odd order.
        #[arg(long, default_value = "odd_prime")]
        mode: String,
        /// One vertex per cyclic subgroup.
        #[arg(long)]
        collapsed: bool,
        #[arg(long, value_enum, default_value_t = GraphFormat::Text)]
        format: GraphFormat,
    },
    /// Loop folders (G, H, K).
    Folder {
        #[command(subcommand)]
        action: FolderAction,
    },
    /// Decompose random conjugates of elements of a given order and validate.
    Decompose {
        /// GL, Sp, GU, GO+, GO-, Omega+ or Omega-.
        kind: String,
        n: usize,
        #[arg(long)]
        order: u64,
        /// Conjugates per seed element.
        #[arg(long, default_value_t = 100)]
        per_seed: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// FS_p certificate for every class of order p.
    Fsp {
        group: String,
        p: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum VerifyAction {
    Run {
        names: Vec<String>,
        /// Every scenario within the budget.
        #[arg(long)]
        all: bool,
        /// Also write the JSON report to this file.
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
        /// Largest runtime class to run: fast, medium or slow.
        #[arg(long, default_value = "medium")]
        budget: String,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    List,
}

#[derive(Subcommand)]
enum FolderAction {
    /// Check a folder spec file.
    Check {
        spec: PathBuf,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        emit: ReportFormat,
    },
    /// Print the loop table of a folder spec file.
    Loop {
        spec: PathBuf,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        emit: ReportFormat,
    },
    /// Search K inside a pool for loops passing the chosen checks.
    Search {
        group: String,
        /// Generator of H in cycle notation; repeat for more.
        #[arg(long = "subgroup", value_name = "CYCLES")]
        subgroup: Vec<String>,
        /// involutions, all, or outer:<catalog group> for involutions outside it.
        #[arg(long, default_value = "involutions")]
        pool: String,
        #[arg(long)]
        bol: bool,
        #[arg(long)]
        aip: bool,
        #[arg(long)]
        two_power: bool,
        #[arg(long, default_value_t = 12)]
        max_index: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Text,
    Json,
    Dot,
}

/// Failures on bad input exit with 2, failed computations with 1.
enum Failure {
    Usage(String),
    Failed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownGroup(_) | Error::UnknownScenario(_) | Error::Parse(_) | Error::Io(_) | Error::Json(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Failed(e.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.max_enum {
        std::env::set_var("MAX_ENUM", n.to_string());
    }
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Failed(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Verify { action } => verify(action),
        Command::Classes { group, json } => classes(&group, json),
        Command::Structconst { group, i, j, k, table } => structconst(&group, [&i, &j, &k], table),
        Command::InvertTable { group, table, json } => invert_table(&group, table, json),
        Command::Commgraph { group, mode, collapsed, format } => commgraph(&group, &mode, collapsed, format),
        Command::Folder { action } => folder(action),
        Command::Decompose { kind, n, order, per_seed, seed } => decompose(&kind, n, order, per_seed, seed),
        Command::Fsp { group, p, json } => fsp(&group, p, json),
    }
}

fn verify(action: VerifyAction) -> Outcome {
    match action {
        VerifyAction::List => {
            for s in verifier::list_scenarios() {
                println!("{:<30} {:<6} {}", s.name, s.budget.to_string(), s.claim);
            }
            Ok(true)
        }
        VerifyAction::Run { names, all, json, budget, format } => {
            let budget: Budget = budget.parse()?;
            let mut chosen: Vec<&str> = Vec::new();
            if all {
                chosen.extend(verifier::scenarios_within(budget));
            }
            for n in &names {
                let s = verifier::find_scenario(n)?;
                if s.budget > budget {
                    eprintln!("skipping {n}: budget {} exceeds --budget {budget}", s.budget);
                } else {
                    chosen.push(s.name);
                }
            }
            let report = verifier::run_scenarios(&chosen)?;
            for s in &report.scenarios {
                eprintln!("{:<30} {} in {:.2} s", s.name, if s.passed { "pass" } else { "FAIL" }, s.elapsed.as_secs_f64());
            }
            let fmt = match format {
                ReportFormat::Text => Format::Text,
                ReportFormat::Json => Format::Json,
            };
            print!("{}", emit_report(&report, fmt));
            if let Some(path) = json {
                std::fs::write(path, emit_report(&report, Format::Json)).map_err(Error::from)?;
            }
            Ok(report.passed)
        }
    }
}

fn group(name: &str) -> Result<GroupHandle, Failure> {
    Ok(by_name(name)?)
}

fn classes(name: &str, as_json: bool) -> Outcome {
    let g = group(name)?;
    let table = g.conjugacy_classes()?;
    if as_json {
        let rows: Vec<_> = table
            .classes()
            .iter()
            .enumerate()
            .map(|(i, c)| {
                json!({
                    "name": c.name,
                    "order": c.element_order,
                    "size": c.size,
                    "centralizer_order": table.centralizer_order(i),
                    "representative": c.representative.to_cycle_string(),
                })
            })
            .collect();
        let out = json!({ "group": g.name(), "order": g.order().to_string(), "classes": rows });
        println!("{}", serde_json::to_string_pretty(&out).map_err(Error::from)?);
    } else {
        println!("{} of order {}: {} classes", g.name(), g.order(), table.len());
        for (i, c) in table.classes().iter().enumerate() {
            println!(
                "{:<6} order {:<4} size {:<10} |C| {:<10} {}",
                c.name,
                c.element_order,
                c.size,
                table.centralizer_order(i),
                c.representative.to_cycle_string()
            );
        }
    }
    Ok(true)
}

fn class_index<A: ClassAlgebra + ?Sized>(a: &A, name: &str) -> Result<usize, Failure> {
    (0..a.class_count())
        .find(|&i| a.class_name(i) == name)
        .ok_or_else(|| Failure::Usage(format!("{} has no class {name}", a.group_name())))
}

fn structconst(name: &str, idx: [&String; 3], table: bool) -> Outcome {
    let algebra: Box<dyn ClassAlgebra> = if table {
        Box::new(shipped(name)?)
    } else {
        Box::new(GroupClassAlgebra::new(&group(name)?)?)
    };
    let [i, j, k] = idx.map(|n| class_index(algebra.as_ref(), n));
    let (i, j, k) = (i?, j?, k?);
    println!("{}", algebra.structure_constant(i, j, k)?);
    Ok(true)
}

fn invert_table(name: &str, table: bool, as_json: bool) -> Outcome {
    let t = if table {
        inversion_table(&shipped(name)?)?
    } else {
        inversion_table(&GroupClassAlgebra::new(&group(name)?)?)?
    };
    if as_json {
        println!("{}", serde_json::to_string_pretty(&t).map_err(Error::from)?);
        return Ok(true);
    }
    let header: Vec<String> = t.odd_classes.iter().map(|c| format!("{:>5}", c.name)).collect();
    println!("{:<12}{}", "", header.join(""));
    for (row, l) in t.inverts.iter().zip(&t.involutions) {
        let cells: Vec<String> = row.iter().map(|&b| format!("{:>5}", if b { "+" } else { "." })).collect();
        println!("{:<12}{}", format!("{} ({})", l.name, l.size), cells.join(""));
    }
    Ok(true)
}

fn commgraph(name: &str, mode: &str, collapsed: bool, format: GraphFormat) -> Outcome {
    let g = group(name)?;
    let mode = match mode.parse::<Mode>() {
        Ok(m) => m,
        Err(_) => {
            let classes = g.conjugacy_classes()?;
            let i = classes
                .index_by_name(mode)
                .ok_or_else(|| Failure::Usage(format!("unknown mode or class {mode:?}")))?;
            Mode::SingleClass(i)
        }
    };
    let graph = build_graph(&g, mode, collapsed)?;
    let report = graph.components();
    match format {
        GraphFormat::Json => println!("{}", report.to_json()),
        GraphFormat::Dot => print!("{}", graph.to_dot()),
        GraphFormat::Text => {
            println!(
                "{} {}{}: {} vertices, {} edges, {} components",
                report.group,
                report.mode,
                if collapsed { " collapsed" } else { "" },
                report.vertex_count,
                report.edge_count,
                report.components.len()
            );
            for (i, c) in report.components.iter().enumerate() {
                let big = if report.big_component == Some(i) { " big" } else { "" };
                println!("  {i}: {} elements, orders {:?}{big}", c.elements, c.element_orders);
            }
        }
    }
    Ok(true)
}

fn read_spec(path: &PathBuf) -> Result<FolderSpec, Failure> {
    let text = std::fs::read_to_string(path).map_err(Error::from)?;
    Ok(FolderSpec::parse(&text)?)
}

fn folder(action: FolderAction) -> Outcome {
    match action {
        FolderAction::Check { spec, emit } => {
            let (g, h, k) = read_spec(&spec)?.resolve()?;
            let report = check_folder(&g, &h, k)?;
            match emit {
                ReportFormat::Json => println!("{}", serde_json::to_string_pretty(&report).map_err(Error::from)?),
                ReportFormat::Text => {
                    println!("{:?}", report.flags);
                    for w in &report.witnesses {
                        println!("  {} fails at {:?}", w.check, w.elements);
                    }
                    if let Some(e) = &report.transversal_error {
                        println!("  transversal: {e}");
                    }
                    if let Some(o) = report.mult_group_order {
                        println!("  multiplication group order {o}");
                    }
                }
            }
            Ok(report.flags.transversal && report.flags.latin)
        }
        FolderAction::Loop { spec, emit } => {
            let f = read_spec(&spec)?.build()?;
            let t = f.loop_table();
            match emit {
                ReportFormat::Json => println!("{}", t.to_json()),
                ReportFormat::Text => print!("{}", t.to_text()),
            }
            Ok(true)
        }
        FolderAction::Search { group: name, subgroup, pool, bol, aip, two_power, max_index } => {
            let g = group(&name)?;
            let d = g.degree();
            let gens: Vec<Permutation> =
                subgroup.iter().map(|s| Permutation::parse_cycles(s, d)).collect::<loopfold::Result<_>>()?;
            let h = if gens.is_empty() { GroupHandle::trivial(d, g.cap()) } else { g.subgroup(gens)? };
            let store = g.elements()?;
            let all: Vec<Permutation> = store.iter().map(|x| store.perm(x)).collect();
            let mut pool: Vec<Permutation> = match pool.as_str() {
                "all" => all,
                "involutions" => all.into_iter().filter(|x| x.order() == 2).collect(),
                other => match other.strip_prefix("outer:") {
                    Some(sub) => {
                        let n = group(sub)?;
                        all.into_iter().filter(|x| x.order() == 2 && !n.contains(x)).collect()
                    }
                    None => return Err(Failure::Usage(format!("unknown pool {other:?}"))),
                },
            };
            pool.push(g.identity());
            let require = Requirements { left_bol: bol, aip, two_power_exponent: two_power };
            let options = SearchOptions { max_index, ..Default::default() };
            let found = search_folders(&g, &h, &pool, require, options)?;
            println!("{} folders", found.len());
            for k in &found {
                let cells: Vec<String> = k.iter().map(|x| x.to_cycle_string()).collect();
                println!("  {}", cells.join(" "));
            }
            Ok(true)
        }
    }
}

fn parse_kind(s: &str) -> Result<ClassicalKind, Failure> {
    Ok(match s.to_ascii_lowercase().as_str() {
        "gl" => ClassicalKind::Linear,
        "sp" => ClassicalKind::Symplectic,
        "gu" => ClassicalKind::Unitary,
        "go+" => ClassicalKind::OrthogonalPlus,
        "go-" => ClassicalKind::OrthogonalMinus,
        "omega+" => ClassicalKind::OmegaPlus,
        "omega-" => ClassicalKind::OmegaMinus,
        _ => return Err(Failure::Usage(format!("unknown classical kind {s:?}"))),
    })
}

fn decompose(kind: &str, n: usize, order: u64, per_seed: usize, seed: u64) -> Outcome {
    let kind = parse_kind(kind)?;
    let report = survey_cell(kind, n, order, per_seed, seed)?;
    println!(
        "{} order {}: seeds with dim [V,x] {:?}, {} conjugates checked, {} failures",
        report.group,
        report.order,
        report.seed_dims,
        report.checked,
        report.failures.len()
    );
    for f in &report.failures {
        println!("  {f}");
    }
    Ok(report.passed())
}

fn fsp(name: &str, p: u64, as_json: bool) -> Outcome {
    let g = group(name)?;
    let report = fsp_certificate(&g, p)?;
    if as_json {
        println!("{}", serde_json::to_string_pretty(&report).map_err(Error::from)?);
    } else {
        for c in &report.classes {
            let how = match c.condition_used {
                Some(cond) => serde_json::to_string(&cond).map_err(Error::from)?,
                None => format!("possible failure, factors {:?}", c.bad_factors),
            };
            println!("{} p={} {} |C|={}: {how}", report.group, p, c.class, c.centralizer_order);
        }
    }
    Ok(report.all_certified())
}
