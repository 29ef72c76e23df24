//! Expression language: tokens, syntax tree, parser and printer.

use std::fmt;

use thiserror::Error;

/// Deepest bracket nesting the parser accepts.
pub const MAX_NESTING: usize = 256;

/// Built-in operators with the argument counts they accept.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    Pair,
    Pi1,
    Pi2,
    Union,
    Inter,
    Diff,
    BigUnion,
    BigInter,
    Pow,
    Prod,
    Id,
    Conv,
    Comp,
    Dom,
    Range,
    Image,
    Funs,
    Apply,
    Sum,
    Inl,
    Inr,
    Curry,
    Uncurry,
}

impl Op {
    pub const ALL: [Op; 23] = [
        Op::Pair,
        Op::Pi1,
        Op::Pi2,
        Op::Union,
        Op::Inter,
        Op::Diff,
        Op::BigUnion,
        Op::BigInter,
        Op::Pow,
        Op::Prod,
        Op::Id,
        Op::Conv,
        Op::Comp,
        Op::Dom,
        Op::Range,
        Op::Image,
        Op::Funs,
        Op::Apply,
        Op::Sum,
        Op::Inl,
        Op::Inr,
        Op::Curry,
        Op::Uncurry,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Op::Pair => "pair",
            Op::Pi1 => "pi1",
            Op::Pi2 => "pi2",
            Op::Union => "union",
            Op::Inter => "inter",
            Op::Diff => "diff",
            Op::BigUnion => "bigunion",
            Op::BigInter => "biginter",
            Op::Pow => "pow",
            Op::Prod => "prod",
            Op::Id => "id",
            Op::Conv => "conv",
            Op::Comp => "comp",
            Op::Dom => "dom",
            Op::Range => "range",
            Op::Image => "image",
            Op::Funs => "funs",
            Op::Apply => "apply",
            Op::Sum => "sum",
            Op::Inl => "inl",
            Op::Inr => "inr",
            Op::Curry => "curry",
            Op::Uncurry => "uncurry",
        }
    }

    pub fn from_name(s: &str) -> Option<Op> {
        Op::ALL.into_iter().find(|op| op.name() == s)
    }

    /// `conv` and `comp` also come in a carrier-free short form used in
    /// `check` and `simp` terms.
    pub fn arities(self) -> &'static [usize] {
        match self {
            Op::Pi1 | Op::Pi2 | Op::BigUnion | Op::BigInter | Op::Pow | Op::Id => &[1],
            Op::Pair | Op::Union | Op::Inter | Op::Diff | Op::Prod | Op::Funs | Op::Sum => &[2],
            Op::Dom | Op::Range | Op::Inl | Op::Inr | Op::Curry | Op::Uncurry => &[3],
            Op::Image | Op::Apply => &[4],
            Op::Conv => &[1, 3],
            Op::Comp => &[2, 5],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Set(Vec<Expr>),
    Num(usize),
    Bool(bool),
    Ident(String),
    Call(Op, Vec<Expr>),
    /// `lam(x : src => body, dst)`
    Lam {
        var: String,
        src: Box<Expr>,
        body: Box<Expr>,
        dst: Box<Expr>,
    },
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Set(xs) => {
                f.write_str("{")?;
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str("}")
            }
            Expr::Num(n) => write!(f, "#{n}"),
            Expr::Bool(b) => write!(f, "{b}"),
            Expr::Ident(s) => f.write_str(s),
            Expr::Call(op, args) => {
                write!(f, "{}(", op.name())?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
            Expr::Lam {
                var,
                src,
                body,
                dst,
            } => write!(f, "lam({var} : {src} => {body}, {dst})"),
        }
    }
}

pub fn serialize_expr(e: &Expr) -> String {
    e.to_string()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    LBrace,
    RBrace,
    LParen,
    RParen,
    Comma,
    Colon,
    Equals,
    /// `=>`
    FatArrow,
    /// `->`
    Arrow,
    /// `#n`
    Numeral(usize),
    /// A bare decimal, read as a numeral.
    Int(usize),
    Ident(String),
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Equals => "`=`".into(),
            Tok::FatArrow => "`=>`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Numeral(n) => format!("`#{n}`"),
            Tok::Int(n) => format!("`{n}`"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: expected {}, found {found}", .expected.join(" or "))]
pub struct ParseError {
    pub line: usize,
    /// 1-based, counted in characters.
    pub column: usize,
    pub expected: Vec<String>,
    pub found: String,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars<'_>>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            c
        };
        let err = |expected: &str, found: String| ParseError {
            line: l,
            column: col,
            expected: vec![expected.to_string()],
            found,
        };
        let tok = match c {
            c if c.is_whitespace() => {
                bump(&mut chars);
                continue;
            }
            '{' | '}' | '(' | ')' | ',' | ':' => {
                bump(&mut chars);
                match c {
                    '{' => Tok::LBrace,
                    '}' => Tok::RBrace,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    ',' => Tok::Comma,
                    _ => Tok::Colon,
                }
            }
            '=' => {
                bump(&mut chars);
                if chars.peek() == Some(&'>') {
                    bump(&mut chars);
                    Tok::FatArrow
                } else {
                    Tok::Equals
                }
            }
            '-' => {
                bump(&mut chars);
                if chars.peek() == Some(&'>') {
                    bump(&mut chars);
                    Tok::Arrow
                } else {
                    return Err(err("`->`", "`-`".into()));
                }
            }
            '#' | '0'..='9' => {
                let hash = c == '#';
                if hash {
                    bump(&mut chars);
                }
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    digits.push(d);
                    bump(&mut chars);
                }
                let n = digits
                    .parse::<usize>()
                    .map_err(|_| err("a numeral", format!("`#{digits}`")))?;
                if hash {
                    Tok::Numeral(n)
                } else {
                    Tok::Int(n)
                }
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if !(d.is_alphanumeric() || d == '_' || d == '\'') {
                        break;
                    }
                    s.push(d);
                    bump(&mut chars);
                }
                Tok::Ident(s)
            }
            other => return Err(err("a token", format!("`{other}`"))),
        };
        out.push(Spanned {
            tok,
            line: l,
            column: col,
        });
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(out)
}

/// Recursive-descent parser over a token stream.
pub struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    depth: usize,
}

impl Parser {
    pub fn new(text: &str) -> Result<Parser, ParseError> {
        Ok(Parser {
            toks: lex(text)?,
            pos: 0,
            depth: 0,
        })
    }

    pub fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn advance(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    pub fn error(&self, expected: &[&str]) -> ParseError {
        let s = &self.toks[self.pos];
        ParseError {
            line: s.line,
            column: s.column,
            expected: expected.iter().map(|e| e.to_string()).collect(),
            found: s.tok.describe(),
        }
    }

    pub fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.advance();
            Ok(())
        } else {
            Err(self.error(&[&tok.describe()]))
        }
    }

    pub fn ident(&mut self) -> Result<String, ParseError> {
        match self.peek() {
            Tok::Ident(_) => match self.advance() {
                Tok::Ident(s) => Ok(s),
                _ => unreachable!(),
            },
            _ => Err(self.error(&["an identifier"])),
        }
    }

    /// Consumes the keyword `word` if it is next.
    pub fn keyword(&mut self, word: &str) -> bool {
        if matches!(self.peek(), Tok::Ident(s) if s == word) {
            self.advance();
            true
        } else {
            false
        }
    }

    pub fn at_end(&self) -> bool {
        *self.peek() == Tok::Eof
    }

    pub fn finish(&self) -> Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error(&["end of input"]))
        }
    }

    fn nest(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_NESTING {
            return Err(self.error(&["shallower nesting"]));
        }
        Ok(())
    }

    pub fn expr(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::LBrace => {
                self.nest()?;
                self.advance();
                let mut xs = Vec::new();
                if *self.peek() == Tok::RBrace {
                    self.advance();
                } else {
                    loop {
                        xs.push(self.expr_or(&["an expression", "`}`"])?);
                        match self.peek() {
                            Tok::Comma => {
                                self.advance();
                            }
                            Tok::RBrace => {
                                self.advance();
                                break;
                            }
                            _ => return Err(self.error(&["`,`", "`}`"])),
                        }
                    }
                }
                self.depth -= 1;
                Ok(Expr::Set(xs))
            }
            Tok::Numeral(n) | Tok::Int(n) => {
                self.advance();
                Ok(Expr::Num(n))
            }
            Tok::Ident(name) => {
                self.advance();
                if *self.peek() != Tok::LParen {
                    return Ok(match name.as_str() {
                        "true" => Expr::Bool(true),
                        "false" => Expr::Bool(false),
                        _ => Expr::Ident(name),
                    });
                }
                if name == "lam" {
                    return self.lam();
                }
                let Some(op) = Op::from_name(&name) else {
                    self.pos -= 1;
                    return Err(self.error(&["an operator name"]));
                };
                self.nest()?;
                self.advance();
                let mut args = Vec::new();
                if *self.peek() != Tok::RParen {
                    loop {
                        args.push(self.expr()?);
                        match self.peek() {
                            Tok::Comma => {
                                self.advance();
                            }
                            Tok::RParen => break,
                            _ => return Err(self.error(&["`,`", "`)`"])),
                        }
                    }
                }
                if !op.arities().contains(&args.len()) {
                    let want: Vec<String> = op
                        .arities()
                        .iter()
                        .map(|n| format!("{n} argument(s) to `{}`", op.name()))
                        .collect();
                    let refs: Vec<&str> = want.iter().map(String::as_str).collect();
                    return Err(self.error(&refs));
                }
                self.advance();
                self.depth -= 1;
                Ok(Expr::Call(op, args))
            }
            _ => Err(self.error(&["an expression"])),
        }
    }

    fn expr_or(&mut self, expected: &[&str]) -> Result<Expr, ParseError> {
        match self.peek() {
            Tok::LBrace | Tok::Numeral(_) | Tok::Int(_) | Tok::Ident(_) => self.expr(),
            _ => Err(self.error(expected)),
        }
    }

    /// After `lam`: `(x : src => body, dst)`.
    fn lam(&mut self) -> Result<Expr, ParseError> {
        self.nest()?;
        self.expect(Tok::LParen)?;
        let var = self.ident()?;
        self.expect(Tok::Colon)?;
        let src = self.expr()?;
        self.expect(Tok::FatArrow)?;
        let body = self.expr()?;
        self.expect(Tok::Comma)?;
        let dst = self.expr()?;
        self.expect(Tok::RParen)?;
        self.depth -= 1;
        Ok(Expr::Lam {
            var,
            src: Box::new(src),
            body: Box::new(body),
            dst: Box::new(dst),
        })
    }
}

/// Parses a complete expression.
pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser::new(text)?;
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_trees() {
        let e = parse_expr("pi1(pair({},{{}}))").unwrap();
        assert_eq!(
            e,
            Expr::Call(
                Op::Pi1,
                vec![Expr::Call(
                    Op::Pair,
                    vec![Expr::Set(vec![]), Expr::Set(vec![Expr::Set(vec![])])]
                )]
            )
        );
        assert_eq!(parse_expr("#2").unwrap(), Expr::Num(2));
        assert_eq!(parse_expr("2").unwrap(), Expr::Num(2));
        assert_eq!(parse_expr("true").unwrap(), Expr::Bool(true));
    }

    #[test]
    fn error_positions() {
        let e = parse_expr("{,}").unwrap_err();
        assert_eq!((e.line, e.column), (1, 2));
        assert!(e.expected.contains(&"an expression".to_string()));
        let e = parse_expr("pair({})").unwrap_err();
        assert_eq!(e.column, 8);
        let e = parse_expr("{}\n  }").unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
        let e = parse_expr("frob({})").unwrap_err();
        assert_eq!(e.column, 1);
    }

    #[test]
    fn lambda_round_trip() {
        let text = "lam(x : #2 => pair(x, x), prod(#2, #2))";
        let e = parse_expr(text).unwrap();
        assert_eq!(parse_expr(&serialize_expr(&e)).unwrap(), e);
    }

    #[test]
    fn nesting_is_bounded() {
        let deep = "{".repeat(MAX_NESTING + 5);
        assert!(parse_expr(&deep).is_err());
    }
}
