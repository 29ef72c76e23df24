//! Backward-chaining discharge of relation and function side conditions
//! over symbolic relational terms, plus the oriented rewriter used by `simp`.

mod rules;
mod search;

use std::collections::BTreeMap;
use std::fmt;

use crate::funcs::{lambda, HostMap};
use crate::kernel::{as_pair, kpair, HFSet};
use crate::relcalc::{identity, is_func, is_pfunc, is_relation};
use crate::{Error, Result};

pub use rules::{builtin_rules, Rule, RuleSet, SideCheck, Tag};
pub use search::{
    discharge, discharge_with, replay, replay_ground, DischargeOptions, Failure, FailureKind,
    FrontierReason, ProofTrace, Step, DEFAULT_DEPTH_LIMIT,
};

/// Values for the free variables of terms.
pub type Env = BTreeMap<String, HFSet>;

/// A symbolic relation. Carriers of `Id` and `Lambda` are terms themselves,
/// so hypotheses can be schematic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RelTerm {
    Lit(HFSet),
    Var(String),
    /// Pattern variable; only appears in rules and while searching.
    Meta(u32),
    Id(Box<RelTerm>),
    Conv(Box<RelTerm>),
    /// `Comp(g, f)` is `g ∘ f`.
    Comp(Box<RelTerm>, Box<RelTerm>),
    Lambda(Box<RelTerm>, Box<RelTerm>, HostMap),
}

impl RelTerm {
    pub fn var(name: &str) -> RelTerm {
        RelTerm::Var(name.to_string())
    }

    pub fn id(a: RelTerm) -> RelTerm {
        RelTerm::Id(Box::new(a))
    }

    pub fn conv(t: RelTerm) -> RelTerm {
        RelTerm::Conv(Box::new(t))
    }

    pub fn comp(g: RelTerm, f: RelTerm) -> RelTerm {
        RelTerm::Comp(Box::new(g), Box::new(f))
    }

    pub fn lambda(a: RelTerm, b: RelTerm, e: HostMap) -> RelTerm {
        RelTerm::Lambda(Box::new(a), Box::new(b), e)
    }

    /// True when every variable is bound in `env` and no metavariable occurs.
    pub fn is_ground(&self, env: &Env) -> bool {
        match self {
            RelTerm::Lit(_) => true,
            RelTerm::Var(v) => env.contains_key(v),
            RelTerm::Meta(_) => false,
            RelTerm::Id(a) | RelTerm::Conv(a) => a.is_ground(env),
            RelTerm::Comp(g, f) => g.is_ground(env) && f.is_ground(env),
            RelTerm::Lambda(a, b, _) => a.is_ground(env) && b.is_ground(env),
        }
    }
}

impl fmt::Display for RelTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelTerm::Lit(x) => write!(f, "{x}"),
            RelTerm::Var(v) => f.write_str(v),
            RelTerm::Meta(m) => write!(f, "?{m}"),
            RelTerm::Id(a) => write!(f, "id({a})"),
            RelTerm::Conv(t) => write!(f, "conv({t})"),
            RelTerm::Comp(g, h) => write!(f, "comp({g}, {h})"),
            RelTerm::Lambda(a, b, e) => write!(f, "lam[{}]({a}, {b})", e.name()),
        }
    }
}

/// Which predicate a judgment asserts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    /// `R ⊆ A × B`
    Rel,
    /// `IsPFunc(f, A, B)`
    PFunc,
    /// `IsFunc(A, B, f)`
    Func,
}

impl Kind {
    pub fn keyword(self) -> &'static str {
        match self {
            Kind::Rel => "rel",
            Kind::PFunc => "pfun",
            Kind::Func => "fun",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Judgment {
    pub kind: Kind,
    pub term: RelTerm,
    pub src: RelTerm,
    pub dst: RelTerm,
}

impl Judgment {
    pub fn new(kind: Kind, term: RelTerm, src: RelTerm, dst: RelTerm) -> Self {
        Judgment {
            kind,
            term,
            src,
            dst,
        }
    }

    pub fn is_ground(&self, env: &Env) -> bool {
        self.term.is_ground(env) && self.src.is_ground(env) && self.dst.is_ground(env)
    }

    /// Runs the matching relcalc decider on the denotations.
    pub fn decide(&self, env: &Env) -> Result<bool> {
        let r = eval_term(&self.term, env)?;
        let a = eval_term(&self.src, env)?;
        let b = eval_term(&self.dst, env)?;
        Ok(match self.kind {
            Kind::Rel => is_relation(r, a, b),
            Kind::PFunc => is_pfunc(r, a, b),
            Kind::Func => is_func(r, a, b),
        })
    }
}

impl fmt::Display for Judgment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} : {} -> {}",
            self.kind.keyword(),
            self.term,
            self.src,
            self.dst
        )
    }
}

/// Denotation of a term.
///
/// `Conv` and `Comp` act on the pairs of their arguments directly; for a
/// relation `R ⊆ A × B` this is `converse(R, A, B)` and likewise for
/// composition, without the carriers having to be spelled out.
pub fn eval_term(t: &RelTerm, env: &Env) -> Result<HFSet> {
    Ok(match t {
        RelTerm::Lit(x) => *x,
        RelTerm::Var(v) => *env.get(v).ok_or_else(|| Error::UnboundVar(v.clone()))?,
        RelTerm::Meta(m) => return Err(Error::UnboundVar(format!("?{m}"))),
        RelTerm::Id(a) => identity(eval_term(a, env)?),
        RelTerm::Conv(r) => {
            let r = eval_term(r, env)?;
            HFSet::from_elements(r.members().filter_map(as_pair).map(|(x, y)| kpair(y, x)))
        }
        RelTerm::Comp(g, f) => {
            let g = eval_term(g, env)?;
            let f = eval_term(f, env)?;
            let gs: Vec<(HFSet, HFSet)> = g.members().filter_map(as_pair).collect();
            HFSet::from_elements(f.members().filter_map(as_pair).flat_map(|(x, y)| {
                gs.iter()
                    .filter(move |(p, _)| *p == y)
                    .map(move |(_, z)| kpair(x, *z))
            }))
        }
        RelTerm::Lambda(a, b, e) => lambda(eval_term(a, env)?, eval_term(b, env)?, |x| e.apply(x)),
    })
}

/// Oriented rewriting to normal form: double converses cancel, converse
/// distributes over composition (reversing it) and fixes identities,
/// identities disappear under composition, composition associates to the
/// right.
///
/// Every rule shrinks the term or moves a `Comp` node rightward, so the
/// rewriting terminates. Denotation is preserved for terms whose parts are
/// relations between the carriers their `Id`s mention.
pub fn simp_normalize(t: &RelTerm) -> RelTerm {
    match t {
        RelTerm::Conv(x) => match simp_normalize(x) {
            RelTerm::Conv(y) => *y,
            RelTerm::Comp(g, f) => {
                simp_normalize(&RelTerm::comp(RelTerm::Conv(f), RelTerm::Conv(g)))
            }
            id @ RelTerm::Id(_) => id,
            y => RelTerm::conv(y),
        },
        RelTerm::Comp(g, f) => match (simp_normalize(g), simp_normalize(f)) {
            (RelTerm::Id(_), f) => f,
            (g, RelTerm::Id(_)) => g,
            (RelTerm::Comp(h, g1), f) => {
                simp_normalize(&RelTerm::Comp(h, Box::new(RelTerm::Comp(g1, Box::new(f)))))
            }
            (g, f) => RelTerm::comp(g, f),
        },
        RelTerm::Id(a) => RelTerm::id(simp_normalize(a)),
        RelTerm::Lambda(a, b, e) => {
            RelTerm::lambda(simp_normalize(a), simp_normalize(b), e.clone())
        }
        RelTerm::Lit(_) | RelTerm::Var(_) | RelTerm::Meta(_) => t.clone(),
    }
}
