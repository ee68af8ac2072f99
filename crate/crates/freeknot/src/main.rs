use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use freeknot::dot::combination_dot;
use freeknot::generate::{random_diagram, seeded};
use freeknot::input::read_diagram;
use freeknot::schema::{parse_kind, ConfigurationJson, InvariantJson, MoveSiteJson};
use freeknot::survey::survey;
use freeknot_core::moves::{
    apply_elementary_cobordism, apply_r1, apply_r2, apply_r3, find_r1_sites, find_r2_sites, find_r3_sites,
    find_symmetric_configurations, shrink, verify_symmetric_configuration, R1Edit, R2Edit,
};
use freeknot_core::{delta_levels, i_of_combination, nullity_components, trace_components, ChordDiagram, MoveKind};
use serde_json::json;

/// Cobordism invariants of free knots given as Gauss words.
///
/// A diagram is written as space-separated labels per circle, circles
/// separated by `|`, with `-` for an empty circle: `1 2 1 2`, `1 | 1 2 2`.
#[derive(Parser)]
#[command(name = "freeknot", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// I⁽ⁿ⁾ of a one-circle diagram. Exits 0 when nonzero, 1 when zero.
    Invariant {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Δⁿ of a diagram, one surviving class per line.
    Delta {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Reidemeister sites, symmetric configurations and their application.
    Moves {
        #[command(subcommand)]
        action: MovesAction,
    },
    /// Seeded uniformly random diagrams.
    Random {
        #[arg(long, default_value_t = 4)]
        chords: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        circles: u32,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// All one-circle classes within the chord bounds whose invariant is
    /// nonzero at some level up to n.
    Survey {
        #[arg(long, default_value_t = 6)]
        chords: usize,
        #[arg(long, default_value_t = 0)]
        min_chords: usize,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Component count after smoothing a chord set, by orbit trace and by
    /// GF(2) nullity. Exits 1 if the two disagree.
    Oracle {
        #[command(flatten)]
        input: Input,
        /// Space-separated labels; all chords when omitted.
        #[arg(long)]
        subset: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum MovesAction {
    /// Every R1, R2, R3 site and symmetric configuration.
    List {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..=2))]
        max_segments: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Applies one move, chosen by kind and index into `list` output or by a
    /// JSON site or configuration descriptor.
    Apply {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, required_unless_present = "site")]
        kind: Option<ApplyKind>,
        #[arg(long, default_value_t = 0)]
        index: usize,
        #[arg(long, conflicts_with = "kind")]
        site: Option<String>,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..=2))]
        max_segments: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Smallest diagram reachable by R3 moves and cobordism deletions.
    Shrink {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1000)]
        budget: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args)]
struct Input {
    /// Gauss word; quote it.
    word: Option<String>,
    /// Read the diagram from a file instead.
    #[arg(long)]
    file: Option<PathBuf>,
}

impl Input {
    fn diagram(&self) -> anyhow::Result<ChordDiagram> {
        read_diagram(self.word.as_deref(), self.file.as_deref())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ApplyKind {
    R1,
    R2,
    R3,
    Cobordism,
}

/// Stdout writes that fail with an error instead of panicking, so a closed
/// pipe ends the program quietly.
macro_rules! out {
    ($($arg:tt)*) => {
        writeln!(std::io::stdout().lock(), $($arg)*)?
    };
}

macro_rules! put {
    ($($arg:tt)*) => {
        write!(std::io::stdout().lock(), $($arg)*)?
    };
}

fn no_dot(format: Format, command: &str) -> anyhow::Result<()> {
    if format == Format::Dot {
        bail!("{command} has no dot output");
    }
    Ok(())
}

fn print_json(value: &impl serde::Serialize) -> anyhow::Result<()> {
    out!("{}", serde_json::to_string(value)?);
    Ok(())
}

fn print_diagram(d: &ChordDiagram, format: Format) -> anyhow::Result<()> {
    match format {
        Format::Json => print_json(&json!({ "diagram": d.serialize() })),
        _ => {
            out!("{d}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Invariant { input, n, format } => {
            let d = input.diagram()?;
            if d.circle_count() != 1 {
                bail!(
                    "the invariant is defined for one-circle diagrams, got {} circles",
                    d.circle_count()
                );
            }
            let levels = delta_levels(&d, n as usize);
            let top = levels.last().expect("n >= 1");
            let value = i_of_combination(top);
            match format {
                Format::Text => out!("{value}"),
                Format::Json => print_json(&InvariantJson::from(&value))?,
                Format::Dot => put!("{}", combination_dot(top)),
            }
            Ok(if value.is_zero() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Delta { input, n, format } => {
            let d = input.diagram()?;
            let levels = delta_levels(&d, n as usize);
            let top = levels.last().expect("n >= 1");
            let words: Vec<String> = top.iter().map(|(_, d)| d.serialize()).collect();
            match format {
                Format::Text if words.is_empty() => out!("0"),
                Format::Text => out!("{}", words.join("\n")),
                Format::Json => print_json(&words)?,
                Format::Dot => put!("{}", combination_dot(top)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Moves { action } => moves(action),
        Command::Random {
            chords,
            seed,
            circles,
            count,
            format,
        } => {
            no_dot(format, "random")?;
            let mut rng = seeded(seed);
            let words: Vec<String> = (0..count)
                .map(|_| random_diagram(chords, circles as usize, &mut rng).serialize())
                .collect();
            match format {
                Format::Json => print_json(&words)?,
                _ if words.is_empty() => {}
                _ => out!("{}", words.join("\n")),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Survey {
            chords,
            min_chords,
            n,
            format,
        } => {
            no_dot(format, "survey")?;
            let rows = survey(min_chords, chords, n as usize);
            match format {
                Format::Json => {
                    let rows: Vec<_> = rows
                        .iter()
                        .map(|r| {
                            json!({
                                "diagram": r.diagram.serialize(),
                                "chords": r.diagram.chord_count(),
                                "levels": r.levels.iter().map(InvariantJson::from).collect::<Vec<_>>(),
                            })
                        })
                        .collect();
                    print_json(&rows)?;
                }
                _ => {
                    for r in &rows {
                        let levels: Vec<String> = r.levels.iter().map(ToString::to_string).collect();
                        out!("{}\t{}", r.diagram, levels.join("\t"));
                    }
                    eprintln!(
                        "{} classes with {min_chords}..={chords} chords and a nonzero invariant",
                        rows.len()
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { input, subset, format } => {
            no_dot(format, "oracle")?;
            let d = input.diagram()?;
            let subset: Vec<String> = match subset {
                Some(s) => s.split_whitespace().map(str::to_owned).collect(),
                None => d.labels().iter().map(|l| l.as_str().to_owned()).collect(),
            };
            let refs: Vec<&str> = subset.iter().map(String::as_str).collect();
            let trace = trace_components(&d, &refs)?;
            let nullity = nullity_components(&d, &refs)?;
            match format {
                Format::Json => print_json(&json!({ "subset": subset, "trace": trace, "nullity": nullity }))?,
                _ => out!("trace {trace}\nnullity {nullity}"),
            }
            Ok(if trace == nullity {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn moves(action: MovesAction) -> anyhow::Result<ExitCode> {
    match action {
        MovesAction::List {
            input,
            max_segments,
            format,
        } => {
            no_dot(format, "moves list")?;
            let d = input.diagram()?;
            let sites = [find_r1_sites(&d), find_r2_sites(&d), find_r3_sites(&d)];
            let configs = find_symmetric_configurations(&d, max_segments as usize);
            match format {
                Format::Json => {
                    let js = |i: usize| sites[i].iter().map(MoveSiteJson::from).collect::<Vec<_>>();
                    print_json(&json!({
                        "r1": js(0),
                        "r2": js(1),
                        "r3": js(2),
                        "configurations": configs.iter().map(ConfigurationJson::from).collect::<Vec<_>>(),
                    }))?;
                }
                _ => {
                    for site in sites.iter().flatten() {
                        let chords: Vec<&str> = site.chords.iter().map(|l| l.as_str()).collect();
                        let slots: Vec<String> = site.slots.iter().map(|s| format!("{}:{}", s.circle, s.pos)).collect();
                        out!("{} {} at {}", site.kind, chords.join(" "), slots.join(" "));
                    }
                    for c in &configs {
                        let segs: Vec<String> = c.segments.iter().map(|s| format!("{}+{}", s.start, s.len)).collect();
                        let deleted: Vec<String> = c.deleted().iter().map(ToString::to_string).collect();
                        out!("cobordism {} deletes {}", segs.join(" "), deleted.join(" "));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        MovesAction::Apply {
            input,
            kind,
            index,
            site,
            max_segments,
            format,
        } => {
            no_dot(format, "moves apply")?;
            let d = input.diagram()?;
            let out = match (kind, site) {
                (_, Some(json)) => apply_descriptor(&d, &json)?,
                (Some(ApplyKind::Cobordism), None) => {
                    let configs = find_symmetric_configurations(&d, max_segments as usize);
                    let c = configs
                        .get(index)
                        .with_context(|| format!("no configuration {index}"))?;
                    apply_elementary_cobordism(&d, c)?
                }
                (Some(k), None) => {
                    let kind = match k {
                        ApplyKind::R1 => MoveKind::R1,
                        ApplyKind::R2 => MoveKind::R2,
                        _ => MoveKind::R3,
                    };
                    let sites = match kind {
                        MoveKind::R1 => find_r1_sites(&d),
                        MoveKind::R2 => find_r2_sites(&d),
                        MoveKind::R3 => find_r3_sites(&d),
                    };
                    let s = sites.get(index).with_context(|| format!("no {kind} site {index}"))?;
                    apply_site(&d, s)?
                }
                (None, None) => bail!("give --kind or --site"),
            };
            print_diagram(&out, format)?;
            Ok(ExitCode::SUCCESS)
        }
        MovesAction::Shrink { input, budget, format } => {
            no_dot(format, "moves shrink")?;
            let d = input.diagram()?;
            print_diagram(&shrink(&d, budget), format)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn apply_site(d: &ChordDiagram, site: &freeknot_core::MoveSite) -> anyhow::Result<ChordDiagram> {
    Ok(match site.kind {
        MoveKind::R1 => apply_r1(d, &R1Edit::Remove(site.clone()))?,
        MoveKind::R2 => apply_r2(d, &R2Edit::Remove(site.clone()))?,
        MoveKind::R3 => apply_r3(d, site)?,
    })
}

/// A descriptor with a `kind` field is a move site; one with `segments` is a
/// configuration.
fn apply_descriptor(d: &ChordDiagram, text: &str) -> anyhow::Result<ChordDiagram> {
    let value: serde_json::Value = serde_json::from_str(text).context("descriptor is not JSON")?;
    if value.get("kind").is_some() {
        let site: MoveSiteJson = serde_json::from_value(value).context("bad move site")?;
        parse_kind(&site.kind)?;
        return apply_site(d, &site.to_site()?);
    }
    let config: ConfigurationJson = serde_json::from_value(value).context("bad configuration")?;
    if d.circle_count() != 1 {
        bail!("configurations live on one-circle diagrams");
    }
    let segments = config.to_segments(d.circle(0).len())?;
    let verified = verify_symmetric_configuration(d, &segments)?;
    Ok(apply_elementary_cobordism(d, &verified)?)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e)
            if e.downcast_ref::<std::io::Error>()
                .is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe) =>
        {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
