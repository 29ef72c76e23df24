//! The command language shared by the REPL, scripts and subcommands.

use hfset_core::obligations::Kind;

use crate::syntax::{Expr, ParseError, Parser, Tok};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecodeKind {
    Nat,
    Int,
    Bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoMode {
    Search { a: Expr, b: Expr },
    Csb { f: Expr, g: Expr, a: Expr, b: Expr },
    Curry { a: Expr, b: Expr, c: Expr },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Let(String, Expr),
    /// `assume NAME : kind A B`
    Assume {
        name: String,
        kind: Kind,
        src: Expr,
        dst: Expr,
    },
    Eval(Expr),
    /// `assert e1 = e2`: the two sides denote the same set.
    Assert(Expr, Expr),
    /// `check kind TERM : A -> B`
    Check {
        kind: Kind,
        term: Expr,
        src: Expr,
        dst: Expr,
    },
    Iso(IsoMode),
    Decode(DecodeKind, Expr),
    Simp(Expr),
    Quit,
}

const COMMANDS: [&str; 9] = [
    "`let`", "`assume`", "`eval`", "`assert`", "`check`", "`iso`", "`decode`", "`simp`", "`:quit`",
];

fn kind(p: &mut Parser) -> Result<Kind, ParseError> {
    for k in [Kind::Rel, Kind::PFunc, Kind::Func] {
        if p.keyword(k.keyword()) {
            return Ok(k);
        }
    }
    Err(p.error(&["`rel`", "`pfun`", "`fun`"]))
}

/// Parses one line. Blank lines and `#` comments give `None`.
pub fn parse_command(line: &str) -> Result<Option<Command>, ParseError> {
    let trimmed = line.trim();
    if trimmed.is_empty() || trimmed.starts_with('#') {
        return Ok(None);
    }
    if trimmed == ":quit" || trimmed == ":q" {
        return Ok(Some(Command::Quit));
    }
    let mut p = Parser::new(line)?;
    let cmd = if p.keyword("let") {
        let name = p.ident()?;
        p.expect(Tok::Equals)?;
        Command::Let(name, p.expr()?)
    } else if p.keyword("assume") {
        let name = p.ident()?;
        p.expect(Tok::Colon)?;
        let kind = kind(&mut p)?;
        let src = p.expr()?;
        let dst = p.expr()?;
        Command::Assume {
            name,
            kind,
            src,
            dst,
        }
    } else if p.keyword("eval") {
        Command::Eval(p.expr()?)
    } else if p.keyword("assert") {
        let lhs = p.expr()?;
        p.expect(Tok::Equals)?;
        Command::Assert(lhs, p.expr()?)
    } else if p.keyword("check") {
        let kind = kind(&mut p)?;
        let term = p.expr()?;
        p.expect(Tok::Colon)?;
        let src = p.expr()?;
        p.expect(Tok::Arrow)?;
        let dst = p.expr()?;
        Command::Check {
            kind,
            term,
            src,
            dst,
        }
    } else if p.keyword("iso") {
        Command::Iso(if p.keyword("search") {
            IsoMode::Search {
                a: p.expr()?,
                b: p.expr()?,
            }
        } else if p.keyword("csb") {
            IsoMode::Csb {
                f: p.expr()?,
                g: p.expr()?,
                a: p.expr()?,
                b: p.expr()?,
            }
        } else if p.keyword("curry") {
            IsoMode::Curry {
                a: p.expr()?,
                b: p.expr()?,
                c: p.expr()?,
            }
        } else {
            return Err(p.error(&["`search`", "`csb`", "`curry`"]));
        })
    } else if p.keyword("decode") {
        let k = if p.keyword("nat") {
            DecodeKind::Nat
        } else if p.keyword("int") {
            DecodeKind::Int
        } else if p.keyword("bool") {
            DecodeKind::Bool
        } else {
            return Err(p.error(&["`nat`", "`int`", "`bool`"]));
        };
        Command::Decode(k, p.expr()?)
    } else if p.keyword("simp") {
        Command::Simp(p.expr()?)
    } else {
        return Err(p.error(&COMMANDS));
    };
    p.finish()?;
    Ok(Some(cmd))
}
