use std::collections::HashMap;
use std::fmt;

use super::rules::RuleSet;
use super::{Env, Judgment, RelTerm};

pub const DEFAULT_DEPTH_LIMIT: usize = 32;

/// How a goal was closed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step {
    /// Index into the hypothesis list.
    Hypothesis(usize),
    /// Decided on the denotations of a ground goal.
    Ground,
    Rule {
        name: String,
        premises: Vec<ProofTrace>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofTrace {
    pub goal: Judgment,
    pub step: Step,
}

impl ProofTrace {
    pub fn label(&self) -> &str {
        match &self.step {
            Step::Hypothesis(_) => "hypothesis",
            Step::Ground => "ground",
            Step::Rule { name, .. } => name,
        }
    }

    pub fn children(&self) -> &[ProofTrace] {
        match &self.step {
            Step::Rule { premises, .. } => premises,
            _ => &[],
        }
    }

    /// Visits every node, parents first.
    pub fn walk<'t>(&'t self, f: &mut impl FnMut(&'t ProofTrace)) {
        f(self);
        for c in self.children() {
            c.walk(f);
        }
    }

    fn render(&self, depth: usize, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            out,
            "{:indent$}{}({})",
            "",
            self.label(),
            self.goal,
            indent = 2 * depth
        )?;
        for c in self.children() {
            c.render(depth + 1, out)?;
        }
        Ok(())
    }
}

/// One `rule-name(goal)` line per node, children indented by two spaces.
impl fmt::Display for ProofTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.render(0, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrontierReason {
    NoRuleApplies,
    GroundFalse,
    DepthExceeded,
}

impl fmt::Display for FrontierReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FrontierReason::NoRuleApplies => "no rule applies",
            FrontierReason::GroundFalse => "ground decision: false",
            FrontierReason::DepthExceeded => "depth limit reached",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailureKind {
    DepthExceeded,
    NoRuleApplies,
}

/// The subgoals that could not be closed, in the order they were met.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub kind: FailureKind,
    pub frontier: Vec<(Judgment, FrontierReason)>,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (g, why) in &self.frontier {
            writeln!(f, "open: {g}  [{why}]")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct DischargeOptions {
    pub depth_limit: usize,
    /// Values of variables; goals whose variables are all bound here can be
    /// decided directly.
    pub env: Env,
}

impl Default for DischargeOptions {
    fn default() -> Self {
        DischargeOptions {
            depth_limit: DEFAULT_DEPTH_LIMIT,
            env: Env::new(),
        }
    }
}

const FRONTIER_CAP: usize = 64;

type Subst = HashMap<u32, RelTerm>;

fn walk<'t>(mut t: &'t RelTerm, s: &'t Subst) -> &'t RelTerm {
    while let RelTerm::Meta(m) = t {
        match s.get(m) {
            Some(u) => t = u,
            None => break,
        }
    }
    t
}

fn resolve(t: &RelTerm, s: &Subst) -> RelTerm {
    match walk(t, s) {
        RelTerm::Id(a) => RelTerm::id(resolve(a, s)),
        RelTerm::Conv(a) => RelTerm::conv(resolve(a, s)),
        RelTerm::Comp(g, f) => RelTerm::comp(resolve(g, s), resolve(f, s)),
        RelTerm::Lambda(a, b, e) => RelTerm::lambda(resolve(a, s), resolve(b, s), e.clone()),
        other => other.clone(),
    }
}

fn resolve_j(j: &Judgment, s: &Subst) -> Judgment {
    Judgment::new(
        j.kind,
        resolve(&j.term, s),
        resolve(&j.src, s),
        resolve(&j.dst, s),
    )
}

fn occurs(m: u32, t: &RelTerm, s: &Subst) -> bool {
    match walk(t, s) {
        RelTerm::Meta(n) => *n == m,
        RelTerm::Id(a) | RelTerm::Conv(a) => occurs(m, a, s),
        RelTerm::Comp(g, f) => occurs(m, g, s) || occurs(m, f, s),
        RelTerm::Lambda(a, b, _) => occurs(m, a, s) || occurs(m, b, s),
        RelTerm::Lit(_) | RelTerm::Var(_) => false,
    }
}

fn unify(a: &RelTerm, b: &RelTerm, s: &mut Subst) -> bool {
    let (a, b) = (walk(a, s).clone(), walk(b, s).clone());
    match (&a, &b) {
        (RelTerm::Meta(x), RelTerm::Meta(y)) if x == y => true,
        (RelTerm::Meta(x), t) | (t, RelTerm::Meta(x)) => {
            if occurs(*x, t, s) {
                return false;
            }
            s.insert(*x, t.clone());
            true
        }
        (RelTerm::Lit(x), RelTerm::Lit(y)) => x == y,
        (RelTerm::Var(x), RelTerm::Var(y)) => x == y,
        (RelTerm::Id(x), RelTerm::Id(y)) | (RelTerm::Conv(x), RelTerm::Conv(y)) => unify(x, y, s),
        (RelTerm::Comp(g1, f1), RelTerm::Comp(g2, f2)) => unify(g1, g2, s) && unify(f1, f2, s),
        (RelTerm::Lambda(a1, b1, e1), RelTerm::Lambda(a2, b2, e2)) => {
            (e1 == e2 || e1.is_wildcard() || e2.is_wildcard())
                && unify(a1, a2, s)
                && unify(b1, b2, s)
        }
        _ => false,
    }
}

fn unify_j(a: &Judgment, b: &Judgment, s: &mut Subst) -> bool {
    a.kind == b.kind
        && unify(&a.term, &b.term, s)
        && unify(&a.src, &b.src, s)
        && unify(&a.dst, &b.dst, s)
}

fn shift(t: &RelTerm, off: u32) -> RelTerm {
    match t {
        RelTerm::Meta(m) => RelTerm::Meta(m + off),
        RelTerm::Id(a) => RelTerm::id(shift(a, off)),
        RelTerm::Conv(a) => RelTerm::conv(shift(a, off)),
        RelTerm::Comp(g, f) => RelTerm::comp(shift(g, off), shift(f, off)),
        RelTerm::Lambda(a, b, e) => RelTerm::lambda(shift(a, off), shift(b, off), e.clone()),
        RelTerm::Lit(_) | RelTerm::Var(_) => t.clone(),
    }
}

fn shift_j(j: &Judgment, off: u32) -> Judgment {
    Judgment::new(
        j.kind,
        shift(&j.term, off),
        shift(&j.src, off),
        shift(&j.dst, off),
    )
}

fn resolve_trace(t: ProofTrace, s: &Subst) -> ProofTrace {
    ProofTrace {
        goal: resolve_j(&t.goal, s),
        step: match t.step {
            Step::Rule { name, premises } => Step::Rule {
                name,
                premises: premises.into_iter().map(|p| resolve_trace(p, s)).collect(),
            },
            other => other,
        },
    }
}

/// Metavariables introduced by the search start here, well above anything a
/// rule author writes.
const FRESH_BASE: u32 = 1 << 24;

struct Search<'a> {
    hyps: &'a [Judgment],
    rules: &'a RuleSet,
    opts: &'a DischargeOptions,
    next_meta: u32,
    frontier: Vec<(Judgment, FrontierReason)>,
    depth_hit: bool,
    ground_cache: HashMap<Judgment, bool>,
}

type Cont<'k> = dyn FnMut(&mut Search<'_>, Subst, ProofTrace) -> bool + 'k;
type ContAll<'k> = dyn FnMut(&mut Search<'_>, Subst, Vec<ProofTrace>) -> bool + 'k;

impl<'a> Search<'a> {
    fn note(&mut self, g: Judgment, why: FrontierReason) {
        if self.frontier.len() < FRONTIER_CAP && !self.frontier.iter().any(|(h, _)| *h == g) {
            self.frontier.push((g, why));
        }
    }

    fn ground(&mut self, g: &Judgment) -> bool {
        if let Some(v) = self.ground_cache.get(g) {
            return *v;
        }
        let v = g.decide(&self.opts.env).unwrap_or(false);
        self.ground_cache.insert(g.clone(), v);
        v
    }

    /// Calls `k` with every way of closing `goal`, stopping once `k` accepts.
    fn solve(&mut self, goal: &Judgment, s: &Subst, depth: usize, k: &mut Cont<'_>) -> bool {
        let g = resolve_j(goal, s);
        if depth > self.opts.depth_limit {
            self.depth_hit = true;
            self.note(g, FrontierReason::DepthExceeded);
            return false;
        }
        let mut applied = false;
        let hyps = self.hyps;
        for (i, h) in hyps.iter().enumerate() {
            let mut s2 = s.clone();
            if unify_j(&g, h, &mut s2) {
                applied = true;
                let tr = ProofTrace {
                    goal: g.clone(),
                    step: Step::Hypothesis(i),
                };
                if k(self, s2, tr) {
                    return true;
                }
            }
        }
        let rules = self.rules;
        for rule in rules.rules() {
            if rule.conclusion.kind != g.kind {
                continue;
            }
            let off = self.next_meta;
            self.next_meta += rule.meta_span();
            let concl = shift_j(&rule.conclusion, off);
            let mut s2 = s.clone();
            if !unify_j(&concl, &g, &mut s2) {
                continue;
            }
            if let Some(side) = &rule.side {
                if !side.holds(&resolve_j(&g, &s2), &self.opts.env) {
                    continue;
                }
            }
            applied = true;
            let premises: Vec<Judgment> = rule.premises.iter().map(|p| shift_j(p, off)).collect();
            let found = self.solve_all(
                &premises,
                0,
                s2,
                depth + 1,
                Vec::new(),
                &mut |this, s3, children| {
                    let tr = ProofTrace {
                        goal: g.clone(),
                        step: Step::Rule {
                            name: rule.name.clone(),
                            premises: children,
                        },
                    };
                    k(this, s3, tr)
                },
            );
            if found {
                return true;
            }
        }
        if g.is_ground(&self.opts.env) {
            applied = true;
            if self.ground(&g) {
                let tr = ProofTrace {
                    goal: g.clone(),
                    step: Step::Ground,
                };
                if k(self, s.clone(), tr) {
                    return true;
                }
            } else {
                self.note(g.clone(), FrontierReason::GroundFalse);
            }
        }
        if !applied {
            self.note(g, FrontierReason::NoRuleApplies);
        }
        false
    }

    fn solve_all(
        &mut self,
        premises: &[Judgment],
        i: usize,
        s: Subst,
        depth: usize,
        acc: Vec<ProofTrace>,
        k: &mut ContAll<'_>,
    ) -> bool {
        if i == premises.len() {
            return k(self, s, acc);
        }
        self.solve(&premises[i], &s, depth, &mut |this, s2, t| {
            let mut acc2 = acc.clone();
            acc2.push(t);
            this.solve_all(premises, i + 1, s2, depth, acc2, k)
        })
    }
}

/// Proves `goal` from `hyps` by backward chaining: hypotheses first, then
/// rules in registration order, then a direct decision when the goal is
/// ground. Backtracks over all alternatives.
pub fn discharge(
    goal: &Judgment,
    hyps: &[Judgment],
    rules: &RuleSet,
    depth_limit: usize,
) -> Result<ProofTrace, Failure> {
    let opts = DischargeOptions {
        depth_limit,
        ..DischargeOptions::default()
    };
    discharge_with(goal, hyps, rules, &opts)
}

pub fn discharge_with(
    goal: &Judgment,
    hyps: &[Judgment],
    rules: &RuleSet,
    opts: &DischargeOptions,
) -> Result<ProofTrace, Failure> {
    assert!(opts.depth_limit >= 1, "depth limit must be positive");
    let mut search = Search {
        hyps,
        rules,
        opts,
        next_meta: FRESH_BASE,
        frontier: Vec::new(),
        depth_hit: false,
        ground_cache: HashMap::new(),
    };
    let mut found = None;
    search.solve(goal, &Subst::new(), 1, &mut |_, s, tr| {
        found = Some(resolve_trace(tr, &s));
        true
    });
    found.ok_or(Failure {
        kind: if search.depth_hit {
            FailureKind::DepthExceeded
        } else {
            FailureKind::NoRuleApplies
        },
        frontier: search.frontier,
    })
}

/// Re-checks that `trace` is a derivation: hypothesis leaves name a listed
/// hypothesis, ground leaves decide true, and each rule node is an instance
/// of its rule whose premises are the children's goals.
pub fn replay(trace: &ProofTrace, hyps: &[Judgment], rules: &RuleSet, env: &Env) -> bool {
    match &trace.step {
        Step::Hypothesis(i) => hyps.get(*i) == Some(&trace.goal),
        Step::Ground => trace.goal.is_ground(env) && trace.goal.decide(env) == Ok(true),
        Step::Rule { name, premises } => {
            let Some(rule) = rules.get(name) else {
                return false;
            };
            if rule.premises.len() != premises.len() {
                return false;
            }
            let mut s = Subst::new();
            let concl = shift_j(&rule.conclusion, FRESH_BASE);
            if !unify_j(&concl, &trace.goal, &mut s) {
                return false;
            }
            for (p, child) in rule.premises.iter().zip(premises) {
                if !unify_j(&shift_j(p, FRESH_BASE), &child.goal, &mut s) {
                    return false;
                }
            }
            if let Some(side) = &rule.side {
                if !side.holds(&trace.goal, env) {
                    return false;
                }
            }
            premises.iter().all(|c| replay(c, hyps, rules, env))
        }
    }
}

/// Every ground judgment in the trace holds according to the direct
/// deciders.
pub fn replay_ground(trace: &ProofTrace, env: &Env) -> bool {
    let mut ok = true;
    trace.walk(&mut |node| {
        if node.goal.is_ground(env) && node.goal.decide(env) != Ok(true) {
            ok = false;
        }
    });
    ok
}
