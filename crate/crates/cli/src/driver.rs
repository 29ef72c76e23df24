//! Line-oriented front ends: the interactive loop and script runner.

use std::io::{self, BufRead, Write};

use crate::command::{parse_command, Command};
use crate::session::{Outcome, Session, Status};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

pub fn render(o: &Outcome, format: Format) -> String {
    match format {
        Format::Text => o.text(),
        Format::Json => format!("{}\n", o.to_json()),
    }
}

/// Reads commands until end of input or `:quit`. With `echo`, each command
/// is printed after the prompt, so a piped session reads like a terminal one.
pub fn repl<R: BufRead, W: Write>(
    session: &mut Session,
    input: R,
    out: &mut W,
    format: Format,
    echo: bool,
) -> io::Result<()> {
    let mut lines = input.lines();
    loop {
        write!(out, "hf> ")?;
        out.flush()?;
        let Some(line) = lines.next() else {
            writeln!(out)?;
            return Ok(());
        };
        let line = line?;
        if echo {
            writeln!(out, "{line}")?;
        }
        let outcome = match parse_command(&line) {
            Ok(None) => continue,
            Ok(Some(Command::Quit)) => return Ok(()),
            Ok(Some(cmd)) => session.execute(&cmd),
            Err(e) => Outcome::error(format!("parse: {e}")),
        };
        out.write_all(render(&outcome, format).as_bytes())?;
    }
}

/// Runs a script and returns how many commands failed, capped at 125.
/// Without `keep_going` the run stops at the first failure.
pub fn run_script<W: Write>(
    session: &mut Session,
    script: &str,
    out: &mut W,
    format: Format,
    keep_going: bool,
) -> io::Result<i32> {
    let mut failed = 0i32;
    for (i, line) in script.lines().enumerate() {
        let outcome = match parse_command(line) {
            Ok(None) => continue,
            Ok(Some(Command::Quit)) => break,
            Ok(Some(cmd)) => session.execute(&cmd),
            Err(e) => Outcome::error(format!("parse: {e}")),
        };
        out.write_all(render(&outcome, format).as_bytes())?;
        if outcome.status != Status::Ok {
            failed += 1;
            if format == Format::Text {
                writeln!(out, "  (line {})", i + 1)?;
            }
            if !keep_going {
                break;
            }
        }
    }
    Ok(failed.min(125))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(script: &str, keep_going: bool) -> (i32, String) {
        let mut out = Vec::new();
        let code = run_script(
            &mut Session::default(),
            script,
            &mut out,
            Format::Text,
            keep_going,
        )
        .unwrap();
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn script_exit_codes() {
        assert_eq!(run("", false).0, 0);
        assert_eq!(run("# only a comment\n\n", false).0, 0);
        let bad = "let B = 2\ncheck fun {{}} : B -> B\ncheck fun {{}} : B -> B\n";
        let (code, text) = run(bad, false);
        assert_eq!(code, 1);
        assert!(text.contains("(line 2)"));
        assert!(!text.contains("(line 3)"));
        assert_eq!(run(bad, true).0, 2);
    }

    #[test]
    fn repl_echoes_and_quits() {
        let mut out = Vec::new();
        let input = "eval #1\n:quit\neval #2\n";
        repl(
            &mut Session::default(),
            input.as_bytes(),
            &mut out,
            Format::Text,
            true,
        )
        .unwrap();
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "hf> eval #1\n{{}}\nhf> :quit\n"
        );
    }

    #[test]
    fn json_lines() {
        let mut out = Vec::new();
        run_script(
            &mut Session::default(),
            "eval pair(0, 1)",
            &mut out,
            Format::Json,
            false,
        )
        .unwrap();
        let v: serde_json::Value = serde_json::from_slice(&out).unwrap();
        assert_eq!(v["status"], "ok");
        assert_eq!(v["value"], "{{{}},{{},{{}}}}");
    }
}
