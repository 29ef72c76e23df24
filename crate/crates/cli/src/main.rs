use std::io::{self, IsTerminal, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hfset_cli::command::parse_command;
use hfset_cli::{repl, run_script, Config, Format, Outcome, Session, Status};
use hfset_core::obligations::DEFAULT_DEPTH_LIMIT;
use hfset_core::Limits;

#[derive(Parser)]
#[command(name = "hfset", version, about = "Hereditarily finite set calculator")]
struct Cli {
    /// Largest set an enumeration (pow, prod, funs, numerals) may build.
    #[arg(long, global = true, default_value_t = Limits::default().max_card)]
    max_card: usize,
    /// Depth limit for obligation discharge.
    #[arg(long, global = true, default_value_t = DEFAULT_DEPTH_LIMIT)]
    depth: usize,
    /// Print full proof traces for `check`.
    #[arg(long, global = true)]
    trace: bool,
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Text)]
    format: OutFormat,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Json,
}

#[derive(Args)]
struct Prelude {
    /// Bind a name first: `NAME=EXPR`.
    #[arg(long = "let", value_name = "NAME=EXPR")]
    lets: Vec<String>,
    /// Add a hypothesis first: `NAME : kind A B`.
    #[arg(long = "assume", value_name = "HYP")]
    assumes: Vec<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate one expression.
    Eval {
        #[arg(short = 'e', long = "expr")]
        expr: String,
        #[command(flatten)]
        prelude: Prelude,
    },
    /// Interactive session.
    Repl,
    /// Run a script, one command per line.
    Run {
        script: std::path::PathBuf,
        /// Keep going after a failed command.
        #[arg(long)]
        keep_going: bool,
    },
    /// Discharge `kind TERM : A -> B`.
    Check {
        #[command(flatten)]
        prelude: Prelude,
        #[arg(required = true, trailing_var_arg = true, allow_hyphen_values = true)]
        words: Vec<String>,
    },
    /// `search A B`, `csb f g A B` or `curry A B C`.
    Iso {
        #[command(flatten)]
        prelude: Prelude,
        #[arg(required = true, trailing_var_arg = true, allow_hyphen_values = true)]
        words: Vec<String>,
    },
}

fn one_shot(session: &mut Session, prelude: &Prelude, line: &str, format: Format) -> ExitCode {
    let mut prefix: Vec<String> = prelude
        .lets
        .iter()
        .map(|b| format!("let {}", b.replacen('=', " = ", 1)))
        .collect();
    prefix.extend(prelude.assumes.iter().map(|h| format!("assume {h}")));
    prefix.push(line.to_string());
    let mut out = io::stdout().lock();
    let mut outcome = Outcome::error("empty command");
    for text in &prefix {
        outcome = match parse_command(text) {
            Ok(Some(cmd)) => session.execute(&cmd),
            Ok(None) => continue,
            Err(e) => Outcome::error(format!("parse: {e}")),
        };
        if outcome.status != Status::Ok {
            break;
        }
    }
    let _ = out.write_all(hfset_cli::driver::render(&outcome, format).as_bytes());
    ExitCode::from(outcome.status.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        OutFormat::Text => Format::Text,
        OutFormat::Json => Format::Json,
    };
    let mut session = Session::new(Config {
        limits: Limits::new(cli.max_card),
        depth: cli.depth,
        trace: cli.trace,
    });
    match cli.cmd {
        Cmd::Eval { expr, prelude } => {
            one_shot(&mut session, &prelude, &format!("eval {expr}"), format)
        }
        Cmd::Check { prelude, words } => one_shot(
            &mut session,
            &prelude,
            &format!("check {}", words.join(" ")),
            format,
        ),
        Cmd::Iso { prelude, words } => one_shot(
            &mut session,
            &prelude,
            &format!("iso {}", words.join(" ")),
            format,
        ),
        Cmd::Repl => {
            let stdin = io::stdin();
            let echo = !stdin.is_terminal();
            match repl(
                &mut session,
                stdin.lock(),
                &mut io::stdout().lock(),
                format,
                echo,
            ) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("hfset: {e}");
                    ExitCode::from(3)
                }
            }
        }
        Cmd::Run { script, keep_going } => {
            let text = match std::fs::read_to_string(&script) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("hfset: {}: {e}", script.display());
                    return ExitCode::from(3);
                }
            };
            match run_script(
                &mut session,
                &text,
                &mut io::stdout().lock(),
                format,
                keep_going,
            ) {
                Ok(failed) => ExitCode::from(failed as u8),
                Err(e) => {
                    eprintln!("hfset: {e}");
                    ExitCode::from(3)
                }
            }
        }
    }
}
