//! Evaluation of expressions and commands against a session.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};
use thiserror::Error;

use hfset_core::bridges::{bool_decode_set, int_decode_set, nat_decode, BridgeError};
use hfset_core::canon::{inl, inr, sum_set};
use hfset_core::funcs::{fapply, funs, try_lambda, HostMap};
use hfset_core::iso::{csb, curry, find_bijection, uncurry, verify_curry_iso};
use hfset_core::kernel::{
    bin_inter, bin_union, diff, inter_all, kpair, pi1, pi2, pow, prod, union_all,
};
use hfset_core::obligations::{
    discharge_with, eval_term, simp_normalize, DischargeOptions, Env, FailureKind, Judgment,
    RelTerm, RuleSet, DEFAULT_DEPTH_LIMIT,
};
use hfset_core::relcalc::{compose, converse, domain, identity, image, range};
use hfset_core::{HFSet, Limits};

use crate::command::{Command, DecodeKind, IsoMode};
use crate::syntax::{serialize_expr, Expr, Op};

#[derive(Debug, Clone)]
pub struct Config {
    pub limits: Limits,
    pub depth: usize,
    pub trace: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            limits: Limits::default(),
            depth: DEFAULT_DEPTH_LIMIT,
            trace: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("unbound identifier `{0}`")]
    Unbound(String),
    #[error("in `{expr}`: {source}")]
    Op {
        expr: String,
        source: hfset_core::Error,
    },
    #[error("decode: {0}")]
    Decode(#[from] BridgeError),
}

fn at(e: &Expr) -> impl FnOnce(hfset_core::Error) -> EvalError + '_ {
    move |source| EvalError::Op {
        expr: serialize_expr(e),
        source,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// The command ran but its claim does not hold.
    Fail,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }
}

/// What a command printed, plus a structured copy for `--format json`.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub status: Status,
    pub lines: Vec<String>,
    pub data: Map<String, Value>,
}

impl Outcome {
    fn ok(line: String) -> Self {
        Outcome {
            status: Status::Ok,
            lines: vec![line],
            data: Map::new(),
        }
    }

    fn with(mut self, key: &str, v: Value) -> Self {
        self.data.insert(key.to_string(), v);
        self
    }

    pub fn error(msg: impl std::fmt::Display) -> Self {
        let msg = format!("error: {msg}");
        Outcome {
            status: Status::Error,
            lines: vec![msg.clone()],
            data: Map::new(),
        }
        .with("message", json!(msg))
    }

    pub fn text(&self) -> String {
        let mut s = String::new();
        for l in &self.lines {
            s.push_str(l);
            s.push('\n');
        }
        s
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("status".into(), json!(self.status.name()));
        m.insert("output".into(), json!(self.lines));
        m.extend(self.data.clone());
        Value::Object(m)
    }
}

#[derive(Debug, Clone, Default)]
pub struct Session {
    pub bindings: BTreeMap<String, HFSet>,
    pub hypotheses: BTreeMap<String, Judgment>,
    pub config: Config,
    pub rules: RuleSet,
}

impl Session {
    pub fn new(config: Config) -> Self {
        Session {
            config,
            ..Session::default()
        }
    }

    fn env(&self) -> Env {
        self.bindings.clone()
    }

    pub fn eval_expr(&self, e: &Expr) -> Result<HFSet, EvalError> {
        eval_in(e, self, &mut Vec::new())
    }

    /// Reads an expression as a symbolic relational term: identifiers stay
    /// variables, `id`/`conv`/`comp`/`lam` stay structural, and anything
    /// else is evaluated to a literal.
    pub fn to_term(&self, e: &Expr) -> Result<RelTerm, EvalError> {
        Ok(match e {
            Expr::Ident(name) => RelTerm::var(name),
            Expr::Call(Op::Id, args) => RelTerm::id(self.to_term(&args[0])?),
            Expr::Call(Op::Conv, args) => RelTerm::conv(self.to_term(&args[0])?),
            Expr::Call(Op::Comp, args) => {
                RelTerm::comp(self.to_term(&args[0])?, self.to_term(&args[1])?)
            }
            Expr::Lam {
                var,
                src,
                body,
                dst,
            } => {
                let src_t = self.to_term(src)?;
                let dst_t = self.to_term(dst)?;
                // Surface body errors now; the map itself cannot fail.
                if let Ok(a) = eval_term(&src_t, &self.env()) {
                    for x in a.members() {
                        eval_in(body, self, &mut vec![(var.clone(), x)])?;
                    }
                }
                let snapshot = self.clone();
                let (var, body) = (var.clone(), (**body).clone());
                let map = HostMap::new(&serialize_expr(e), move |x| {
                    eval_in(&body, &snapshot, &mut vec![(var.clone(), x)])
                        .unwrap_or_else(|_| HFSet::empty())
                });
                RelTerm::lambda(src_t, dst_t, map)
            }
            other => RelTerm::Lit(self.eval_expr(other)?),
        })
    }

    pub fn execute(&mut self, cmd: &Command) -> Outcome {
        match self.run(cmd) {
            Ok(o) => o,
            Err(e) => Outcome::error(e),
        }
    }

    fn run(&mut self, cmd: &Command) -> Result<Outcome, EvalError> {
        Ok(match cmd {
            Command::Let(name, e) => {
                let v = self.eval_expr(e)?;
                self.bindings.insert(name.clone(), v);
                Outcome::ok(format!("{name} = {v}")).with("value", json!(v.to_string()))
            }
            Command::Assume {
                name,
                kind,
                src,
                dst,
            } => {
                let j = Judgment::new(
                    *kind,
                    RelTerm::var(name),
                    self.to_term(src)?,
                    self.to_term(dst)?,
                );
                let line = format!("assumed {j}");
                self.hypotheses.insert(name.clone(), j);
                Outcome::ok(line)
            }
            Command::Eval(e) => {
                let v = self.eval_expr(e)?;
                Outcome::ok(v.to_string()).with("value", json!(v.to_string()))
            }
            Command::Assert(lhs, rhs) => {
                let (x, y) = (self.eval_expr(lhs)?, self.eval_expr(rhs)?);
                if x == y {
                    Outcome::ok("equal".into())
                } else {
                    Outcome {
                        status: Status::Fail,
                        lines: vec![format!("differ: {x} vs {y}")],
                        data: Map::new(),
                    }
                }
            }
            Command::Check {
                kind,
                term,
                src,
                dst,
            } => {
                let goal = Judgment::new(
                    *kind,
                    self.to_term(term)?,
                    self.to_term(src)?,
                    self.to_term(dst)?,
                );
                self.check(&goal)
            }
            Command::Iso(mode) => self.iso(mode)?,
            Command::Decode(k, e) => {
                let x = self.eval_expr(e)?;
                let v = match k {
                    DecodeKind::Nat => json!(nat_decode(x)?),
                    DecodeKind::Int => json!(int_decode_set(x)?),
                    DecodeKind::Bool => json!(bool_decode_set(x)?),
                };
                Outcome::ok(v.to_string()).with("value", v)
            }
            Command::Simp(e) => {
                let t = simp_normalize(&self.to_term(e)?);
                Outcome::ok(t.to_string())
            }
            Command::Quit => Outcome {
                status: Status::Ok,
                lines: vec![],
                data: Map::new(),
            },
        })
    }

    fn check(&self, goal: &Judgment) -> Outcome {
        let hyps: Vec<Judgment> = self.hypotheses.values().cloned().collect();
        let opts = DischargeOptions {
            depth_limit: self.config.depth.max(1),
            env: self.env(),
        };
        match discharge_with(goal, &hyps, &self.rules, &opts) {
            Ok(trace) => {
                let mut lines = vec![format!("ok: {}", trace.label())];
                let text = trace.to_string();
                if self.config.trace {
                    lines.extend(text.lines().map(str::to_string));
                }
                Outcome {
                    status: Status::Ok,
                    lines,
                    data: Map::new(),
                }
                .with("goal", json!(goal.to_string()))
                .with("rule", json!(trace.label()))
                .with("trace", json!(text.lines().collect::<Vec<_>>()))
            }
            Err(fail) => {
                let why = match fail.kind {
                    FailureKind::DepthExceeded => "depth limit exceeded",
                    FailureKind::NoRuleApplies => "no derivation found",
                };
                let mut lines = vec![format!("fail: {why}")];
                let frontier = fail.to_string();
                lines.extend(frontier.lines().map(str::to_string));
                Outcome {
                    status: Status::Fail,
                    lines,
                    data: Map::new(),
                }
                .with("goal", json!(goal.to_string()))
                .with("frontier", json!(frontier.lines().collect::<Vec<_>>()))
            }
        }
    }

    fn iso(&self, mode: &IsoMode) -> Result<Outcome, EvalError> {
        let ev = |e: &Expr| self.eval_expr(e);
        Ok(match mode {
            IsoMode::Search { a, b } => {
                let (sa, sb) = (ev(a)?, ev(b)?);
                match find_bijection(sa, sb) {
                    Some(w) => Outcome::ok(format!("bijection: {}", w.forward))
                        .with("forward", json!(w.forward.to_string()))
                        .with("backward", json!(w.backward.to_string())),
                    None => Outcome {
                        status: Status::Fail,
                        lines: vec![format!(
                            "no bijection: |A| = {}, |B| = {}",
                            sa.len(),
                            sb.len()
                        )],
                        data: Map::new(),
                    },
                }
            }
            IsoMode::Csb { f, g, a, b } => {
                let (sf, sg, sa, sb) = (ev(f)?, ev(g)?, ev(a)?, ev(b)?);
                let whole = Expr::Call(Op::Pair, vec![f.clone(), g.clone()]);
                let r = csb(sf, sg, sa, sb).map_err(at(&whole))?;
                let mut o = Outcome::ok(format!("bijection: {}", r.witness.forward));
                o.lines.push(format!(
                    "stable set: {} of {} points",
                    r.stable.len(),
                    sa.len()
                ));
                o.with("forward", json!(r.witness.forward.to_string()))
                    .with("stable", json!(r.stable.len()))
            }
            IsoMode::Curry { a, b, c } => {
                let (sa, sb, sc) = (ev(a)?, ev(b)?, ev(c)?);
                let whole = Expr::Call(Op::Curry, vec![a.clone(), b.clone(), c.clone()]);
                let r = verify_curry_iso(sa, sb, sc, &self.config.limits).map_err(at(&whole))?;
                let verdict = |b: bool| if b { "ok" } else { "failed" };
                let points = r.uncurried.len();
                let bij = match &r.witness {
                    Ok(_) => format!("ok ({points} points)"),
                    Err(e) => format!("failed ({e})"),
                };
                let all = r.left_inv && r.right_inv && r.witness.is_ok();
                Outcome {
                    status: if all { Status::Ok } else { Status::Fail },
                    lines: vec![format!(
                        "left_inv: {}, right_inv: {}, bijection: {bij}",
                        verdict(r.left_inv),
                        verdict(r.right_inv)
                    )],
                    data: Map::new(),
                }
                .with("left_inv", json!(r.left_inv))
                .with("right_inv", json!(r.right_inv))
                .with("bijection", json!(r.witness.is_ok()))
                .with("points", json!(points))
            }
        })
    }
}

fn eval_in(e: &Expr, s: &Session, locals: &mut Vec<(String, HFSet)>) -> Result<HFSet, EvalError> {
    let limits = &s.config.limits;
    Ok(match e {
        Expr::Set(xs) => {
            let mut out = Vec::with_capacity(xs.len());
            for x in xs {
                out.push(eval_in(x, s, locals)?);
            }
            HFSet::from_elements(out)
        }
        Expr::Num(n) => {
            if *n > limits.max_card {
                return Err(at(e)(hfset_core::Error::LimitExceeded {
                    requested: *n as u128,
                    limit: limits.max_card,
                }));
            }
            HFSet::numeral(*n)
        }
        Expr::Bool(b) => HFSet::numeral(usize::from(*b)),
        Expr::Ident(name) => locals
            .iter()
            .rev()
            .find(|(n, _)| n == name)
            .map(|(_, v)| *v)
            .or_else(|| s.bindings.get(name).copied())
            .ok_or_else(|| EvalError::Unbound(name.clone()))?,
        Expr::Lam {
            var,
            src,
            body,
            dst,
        } => {
            let a = eval_in(src, s, locals)?;
            let b = eval_in(dst, s, locals)?;
            try_lambda(a, b, |x| {
                locals.push((var.clone(), x));
                let y = eval_in(body, s, locals);
                locals.pop();
                y
            })?
        }
        Expr::Call(op, args) => {
            let mut v = Vec::with_capacity(args.len());
            for a in args {
                v.push(eval_in(a, s, locals)?);
            }
            apply_op(*op, &v, limits).map_err(at(e))?
        }
    })
}

fn apply_op(op: Op, v: &[HFSet], limits: &Limits) -> hfset_core::Result<HFSet> {
    let sym = |t: RelTerm| eval_term(&t, &Env::new());
    Ok(match (op, v) {
        (Op::Pair, [x, y]) => kpair(*x, *y),
        (Op::Pi1, [z]) => pi1(*z),
        (Op::Pi2, [z]) => pi2(*z),
        (Op::Union, [x, y]) => bin_union(*x, *y),
        (Op::Inter, [x, y]) => bin_inter(*x, *y),
        (Op::Diff, [x, y]) => diff(*x, *y),
        (Op::BigUnion, [x]) => union_all(*x),
        (Op::BigInter, [x]) => inter_all(*x),
        (Op::Pow, [x]) => pow(*x, limits)?,
        (Op::Prod, [a, b]) => prod(*a, *b, limits)?,
        (Op::Id, [a]) => identity(*a),
        (Op::Conv, [r]) => sym(RelTerm::conv(RelTerm::Lit(*r)))?,
        (Op::Conv, [r, a, b]) => converse(*r, *a, *b)?,
        (Op::Comp, [g, f]) => sym(RelTerm::comp(RelTerm::Lit(*g), RelTerm::Lit(*f)))?,
        (Op::Comp, [g, f, a, b, c]) => compose(*g, *f, *a, *b, *c),
        (Op::Dom, [r, a, b]) => domain(*r, *a, *b)?,
        (Op::Range, [r, a, b]) => range(*r, *a, *b)?,
        (Op::Image, [r, x, a, b]) => image(*r, *x, *a, *b)?,
        (Op::Funs, [a, b]) => funs(*a, *b, limits)?,
        (Op::Apply, [f, x, a, b]) => fapply(*f, *x, *a, *b)?,
        (Op::Sum, [a, b]) => sum_set(*a, *b),
        (Op::Inl, [x, a, b]) => inl(*x, *a, *b)?.underlying(),
        (Op::Inr, [y, a, b]) => inr(*y, *a, *b)?.underlying(),
        (Op::Curry, [a, b, c]) => curry(*a, *b, *c, limits)?,
        (Op::Uncurry, [a, b, c]) => uncurry(*a, *b, *c, limits)?,
        _ => unreachable!("arity is checked by the parser"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::command::parse_command;
    use crate::syntax::parse_expr;

    fn eval(s: &Session, text: &str) -> HFSet {
        s.eval_expr(&parse_expr(text).unwrap()).unwrap()
    }

    fn exec(s: &mut Session, line: &str) -> Outcome {
        s.execute(&parse_command(line).unwrap().unwrap())
    }

    #[test]
    fn evaluates_examples() {
        let s = Session::default();
        assert_eq!(eval(&s, "pi1(pair({},{{}}))"), HFSet::empty());
        assert_eq!(eval(&s, "#2").to_string(), "{{},{{}}}");
        assert_eq!(
            eval(&s, "range(id({{},{{}}}), {{},{{}}}, {{},{{}}})"),
            HFSet::numeral(2)
        );
        assert_eq!(eval(&s, "true"), HFSet::numeral(1));
        let f = eval(&s, "lam(x : 3 => union(x, {x}), 4)");
        assert_eq!(
            eval(&s, "apply(lam(x : 3 => union(x, {x}), 4), 2, 3, 4)"),
            HFSet::numeral(3)
        );
        assert_eq!(f.len(), 3);
    }

    #[test]
    fn errors_name_the_subexpression() {
        let s = Session::default();
        let err = s.eval_expr(&parse_expr("apply(id(2), 5, 2, 2)").unwrap());
        let msg = err.unwrap_err().to_string();
        assert!(msg.starts_with("in `apply(id(#2), #5, #2, #2)`"), "{msg}");
        assert_eq!(
            s.eval_expr(&parse_expr("union(x, {})").unwrap()),
            Err(EvalError::Unbound("x".into()))
        );
    }

    #[test]
    fn referentially_transparent() {
        let s = Session::default();
        let e = parse_expr("funs(prod(2, 2), 2)").unwrap();
        assert_eq!(s.eval_expr(&e), s.eval_expr(&e));
    }

    #[test]
    fn check_outcomes() {
        let mut s = Session::default();
        exec(&mut s, "let B = 2");
        let o = exec(&mut s, "check fun id(B) : B -> B");
        assert_eq!(o.status, Status::Ok);
        assert_eq!(o.lines, vec!["ok: Id.IsFunc"]);
        exec(&mut s, "assume R : rel A B");
        let o = exec(&mut s, "check rel conv(R) : B -> A");
        assert_eq!(o.lines, vec!["ok: subset_prod_inv"]);
        let o = exec(&mut s, "check fun {{}} : B -> B");
        assert_eq!(o.status, Status::Fail);
        assert!(
            o.lines[1].contains("ground decision: false"),
            "{:?}",
            o.lines
        );
        let o = exec(&mut s, "check fun lam(x : B => x, B) : B -> B");
        assert_eq!(o.lines, vec!["ok: lambda_IsFunc"]);
        let o = exec(&mut s, "check fun lam(x : B => {x}, B) : B -> B");
        assert_eq!(o.status, Status::Fail);
    }

    #[test]
    fn iso_curry_report() {
        let mut s = Session::default();
        let o = exec(&mut s, "iso curry 2 2 2");
        assert_eq!(
            o.lines,
            vec!["left_inv: ok, right_inv: ok, bijection: ok (16 points)"]
        );
    }

    #[test]
    fn limits_apply_to_numerals() {
        let s = Session::new(Config {
            limits: Limits::new(10),
            ..Config::default()
        });
        assert!(s.eval_expr(&parse_expr("#11").unwrap()).is_err());
        assert!(s.eval_expr(&parse_expr("pow(4)").unwrap()).is_err());
    }
}
