mod error;
mod graphs;
mod ops;
mod recipe;
mod render;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{error::ErrorKind, Parser, Subcommand};

use crate::error::{CliError, CliResult, EXIT_INPUT, EXIT_OK};
use crate::graphs::{Ctx, SPEC_HELP};
use crate::ops::{Artifact, Op};
use crate::recipe::Recipe;

#[derive(Parser)]
#[command(
    name = "topochrom",
    version,
    about = "Coloring experiments on Kneser, Schrijver, Mycielski and Borsuk graphs",
    after_help = format!("Graph arguments: {SPEC_HELP}.\n\nExit codes: 0 ok, 2 failed check or expectation, 3 inexact result, 4 bad input.")
)]
struct Cli {
    /// Print the summary as JSON
    #[arg(long, global = true)]
    json: bool,
    /// Write the artifact (graph, coloring, certificate) here; for `run`, the output directory
    #[arg(short = 'o', long = "out", global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    #[command(flatten)]
    Op(Op),
    /// Run a JSON recipe and check its expectations
    Run { recipe: PathBuf },
}

fn print(text: &str) {
    let mut out = std::io::stdout().lock();
    // A closed pipe is not worth a panic.
    let _ = out.write_all(text.as_bytes());
}

fn write_file(path: &Path, artifact: &Artifact) -> CliResult<()> {
    let text = match artifact {
        Artifact::Json(v) => serde_json::to_string_pretty(v)? + "\n",
        Artifact::Text(t) => t.clone(),
    };
    std::fs::write(path, text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> CliResult<u8> {
    match cli.command {
        Command::Op(op) => {
            let out = op.run(&Ctx::default())?;
            let artifact = out.artifact();
            match (&cli.out, &artifact) {
                (Some(path), _) => write_file(path, &artifact)?,
                // Exported text goes to stdout when there is no file.
                (None, Artifact::Text(t)) => {
                    print(t);
                    return Ok(out.status);
                }
                _ => {}
            }
            if cli.json {
                print(&(serde_json::to_string(&out.summary)? + "\n"));
            } else {
                print(&render::summary(&out.summary));
            }
            Ok(out.status)
        }
        Command::Run { recipe } => {
            let r = Recipe::load(&recipe)?;
            let base = recipe.parent().map(Path::to_path_buf).unwrap_or_default();
            let result = r.run(&base, cli.out.as_deref())?;
            if cli.json {
                print(&(serde_json::to_string_pretty(&result.report)? + "\n"));
            } else {
                print(&render::recipe(&result.report));
            }
            Ok(result.code)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => EXIT_OK,
                _ => EXIT_INPUT,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code)
        }
    }
}
