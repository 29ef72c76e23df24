use std::fmt;
use std::sync::Arc;

use super::{eval_term, Env, Judgment, Kind, RelTerm};
use crate::funcs::HostMap;
use crate::kernel::mem;

/// Attribute naming the goal family a rule concludes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tag {
    Zrel,
    Zpfun,
    Zfun,
}

impl Tag {
    pub fn of(kind: Kind) -> Tag {
        match kind {
            Kind::Rel => Tag::Zrel,
            Kind::PFunc => Tag::Zpfun,
            Kind::Func => Tag::Zfun,
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tag::Zrel => "zrel",
            Tag::Zpfun => "zpfun",
            Tag::Zfun => "zfun",
        })
    }
}

type Guard = dyn Fn(&Judgment, &Env) -> bool + Send + Sync;

/// A semantic guard evaluated on the instantiated conclusion. Returns false
/// when it does not hold or cannot be evaluated.
#[derive(Clone)]
pub struct SideCheck {
    name: Arc<str>,
    check: Arc<Guard>,
}

impl SideCheck {
    pub fn new<F>(name: &str, check: F) -> Self
    where
        F: Fn(&Judgment, &Env) -> bool + Send + Sync + 'static,
    {
        SideCheck {
            name: name.into(),
            check: Arc::new(check),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn holds(&self, goal: &Judgment, env: &Env) -> bool {
        (self.check)(goal, env)
    }
}

impl fmt::Debug for SideCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SideCheck({})", self.name)
    }
}

/// `premises ⊢ conclusion`, with metavariables `RelTerm::Meta` shared
/// between them. Lambda bodies in patterns should be [`HostMap::wildcard`].
#[derive(Debug, Clone)]
pub struct Rule {
    pub name: String,
    pub premises: Vec<Judgment>,
    pub conclusion: Judgment,
    pub side: Option<SideCheck>,
}

impl Rule {
    pub fn new(name: &str, premises: Vec<Judgment>, conclusion: Judgment) -> Self {
        Rule {
            name: name.to_string(),
            premises,
            conclusion,
            side: None,
        }
    }

    pub fn with_side(mut self, side: SideCheck) -> Self {
        self.side = Some(side);
        self
    }

    pub fn tag(&self) -> Tag {
        Tag::of(self.conclusion.kind)
    }

    /// One past the largest metavariable used.
    pub(super) fn meta_span(&self) -> u32 {
        fn walk(t: &RelTerm, acc: &mut u32) {
            match t {
                RelTerm::Meta(m) => *acc = (*acc).max(m + 1),
                RelTerm::Id(a) | RelTerm::Conv(a) => walk(a, acc),
                RelTerm::Comp(g, f) => {
                    walk(g, acc);
                    walk(f, acc);
                }
                RelTerm::Lambda(a, b, _) => {
                    walk(a, acc);
                    walk(b, acc);
                }
                RelTerm::Lit(_) | RelTerm::Var(_) => {}
            }
        }
        let mut acc = 0;
        for j in self.premises.iter().chain([&self.conclusion]) {
            walk(&j.term, &mut acc);
            walk(&j.src, &mut acc);
            walk(&j.dst, &mut acc);
        }
        acc
    }
}

/// An ordered, shareable rule collection. Extending returns a new set and
/// leaves the original untouched.
#[derive(Debug, Clone)]
pub struct RuleSet {
    rules: Arc<Vec<Rule>>,
}

impl RuleSet {
    pub fn new(rules: Vec<Rule>) -> Self {
        RuleSet {
            rules: Arc::new(rules),
        }
    }

    pub fn extended(&self, rule: Rule) -> RuleSet {
        let mut rules = (*self.rules).clone();
        rules.push(rule);
        RuleSet::new(rules)
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn get(&self, name: &str) -> Option<&Rule> {
        self.rules.iter().find(|r| r.name == name)
    }
}

impl Default for RuleSet {
    fn default() -> Self {
        builtin_rules()
    }
}

fn m(i: u32) -> RelTerm {
    RelTerm::Meta(i)
}

fn j(kind: Kind, term: RelTerm, src: RelTerm, dst: RelTerm) -> Judgment {
    Judgment::new(kind, term, src, dst)
}

/// Every point of the source is sent into the target by the λ body.
fn lambda_total(goal: &Judgment, env: &Env) -> bool {
    let RelTerm::Lambda(_, _, e) = &goal.term else {
        return false;
    };
    let (Ok(a), Ok(b)) = (eval_term(&goal.src, env), eval_term(&goal.dst, env)) else {
        return false;
    };
    a.members().all(|x| mem(e.apply(x), b))
}

/// The tagged rules, in the order the search tries them.
pub fn builtin_rules() -> RuleSet {
    use Kind::*;
    let lam = || RelTerm::lambda(m(0), m(1), HostMap::wildcard());
    RuleSet::new(vec![
        // zrel
        Rule::new(
            "subset_prod_inv",
            vec![j(Rel, m(0), m(1), m(2))],
            j(Rel, RelTerm::conv(m(0)), m(2), m(1)),
        ),
        Rule::new(
            "subset_prod_comp",
            vec![j(Rel, m(1), m(2), m(3)), j(Rel, m(0), m(3), m(4))],
            j(Rel, RelTerm::comp(m(0), m(1)), m(2), m(4)),
        ),
        Rule::new(
            "IsPFunc.subset_prod",
            vec![j(PFunc, m(0), m(1), m(2))],
            j(Rel, m(0), m(1), m(2)),
        ),
        // zpfun
        Rule::new(
            "Id.IsPFunc",
            vec![],
            j(PFunc, RelTerm::id(m(0)), m(0), m(0)),
        ),
        Rule::new("lambda_IsPFunc", vec![], j(PFunc, lam(), m(0), m(1))),
        Rule::new(
            "IsFunc.IsPFunc",
            vec![j(Func, m(0), m(1), m(2))],
            j(PFunc, m(0), m(1), m(2)),
        ),
        // zfun
        Rule::new("Id.IsFunc", vec![], j(Func, RelTerm::id(m(0)), m(0), m(0))),
        Rule::new(
            "IsFunc_of_composition_IsFunc",
            vec![j(Func, m(1), m(2), m(3)), j(Func, m(0), m(3), m(4))],
            j(Func, RelTerm::comp(m(0), m(1)), m(2), m(4)),
        ),
        Rule::new("lambda_IsFunc", vec![], j(Func, lam(), m(0), m(1)))
            .with_side(SideCheck::new("lambda-total", lambda_total)),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tags_follow_conclusions() {
        let rs = builtin_rules();
        assert_eq!(rs.get("subset_prod_inv").unwrap().tag(), Tag::Zrel);
        assert_eq!(rs.get("Id.IsPFunc").unwrap().tag(), Tag::Zpfun);
        assert_eq!(
            rs.get("IsFunc_of_composition_IsFunc").unwrap().tag(),
            Tag::Zfun
        );
        assert_eq!(
            rs.get("IsFunc_of_composition_IsFunc").unwrap().meta_span(),
            5
        );
    }

    #[test]
    fn extension_is_copy_on_write() {
        let rs = builtin_rules();
        let n = rs.rules().len();
        let more = rs.extended(Rule::new(
            "extra",
            vec![],
            j(Kind::Rel, RelTerm::var("X"), m(0), m(1)),
        ));
        assert_eq!(rs.rules().len(), n);
        assert_eq!(more.rules().len(), n + 1);
    }
}
