//! Function evaluation, λ-abstraction and exponential objects.

use std::fmt;
use std::sync::Arc;

use crate::kernel::{as_pair, kpair, mem, HFSet, Limits};
use crate::relcalc::{is_pfunc, require_func};
use crate::{Error, Result, Side};

/// A named host-level map `HFSet -> HFSet` used as a λ body.
///
/// Two `HostMap`s compare equal when their names do; the name is what
/// symbolic terms refer to.
#[derive(Clone)]
pub struct HostMap {
    name: Arc<str>,
    map: Arc<dyn Fn(HFSet) -> HFSet + Send + Sync>,
}

impl HostMap {
    pub fn new<F>(name: &str, map: F) -> Self
    where
        F: Fn(HFSet) -> HFSet + Send + Sync + 'static,
    {
        HostMap {
            name: name.into(),
            map: Arc::new(map),
        }
    }

    /// A body that matches any other in rule patterns.
    pub fn wildcard() -> Self {
        HostMap::new("_", |x| x)
    }

    pub fn is_wildcard(&self) -> bool {
        &*self.name == "_"
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn apply(&self, x: HFSet) -> HFSet {
        (self.map)(x)
    }
}

impl PartialEq for HostMap {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
    }
}

impl Eq for HostMap {}

impl std::hash::Hash for HostMap {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.name.hash(state);
    }
}

impl fmt::Debug for HostMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HostMap({})", self.name)
    }
}

/// `f @ x`: the unique `y` with `(x, y) ∈ f`.
///
/// Requires `f` to be a partial function from `A` to `B` and `x ∈ Dom(f)`.
pub fn fapply(f: HFSet, x: HFSet, a: HFSet, b: HFSet) -> Result<HFSet> {
    if !is_pfunc(f, a, b) {
        return Err(Error::NotAPFunc);
    }
    fapply_unchecked(f, x).ok_or(Error::NotInDomain(x))
}

/// Evaluation without the functionality check: first pair `(x, y)` in
/// canonical order. Only meaningful when `f` is known to be functional.
pub(crate) fn fapply_unchecked(f: HFSet, x: HFSet) -> Option<HFSet> {
    f.members()
        .filter_map(as_pair)
        .find(|(p, _)| *p == x)
        .map(|(_, y)| y)
}

/// `λ x ∈ A. e(x)` into `B`: `{ (x, e(x)) | x ∈ A, e(x) ∈ B }`.
pub fn lambda<F: FnMut(HFSet) -> HFSet>(a: HFSet, b: HFSet, mut e: F) -> HFSet {
    HFSet::from_elements(a.members().filter_map(|x| {
        let y = e(x);
        mem(y, b).then(|| kpair(x, y))
    }))
}

/// Fallible variant of [`lambda`] for bodies that can fail to evaluate.
pub fn try_lambda<F, E>(a: HFSet, b: HFSet, mut e: F) -> std::result::Result<HFSet, E>
where
    F: FnMut(HFSet) -> std::result::Result<HFSet, E>,
{
    let mut out = Vec::with_capacity(a.len());
    for x in a.members() {
        let y = e(x)?;
        if mem(y, b) {
            out.push(kpair(x, y));
        }
    }
    Ok(HFSet::from_elements(out))
}

/// The exponential object `B^A` of all total functions from `A` to `B`,
/// enumerated assignment by assignment.
pub fn funs(a: HFSet, b: HFSet, limits: &Limits) -> Result<HFSet> {
    let count = (b.len() as u128)
        .checked_pow(a.len() as u32)
        .unwrap_or(u128::MAX);
    limits.check(count)?;
    let xs = a.to_vec();
    let ys = b.to_vec();
    if ys.is_empty() {
        // B^∅ = {∅}; otherwise no total function into ∅
        return Ok(if xs.is_empty() {
            HFSet::from_elements([HFSet::empty()])
        } else {
            HFSet::empty()
        });
    }
    let mut digits = vec![0usize; xs.len()];
    let mut out = Vec::with_capacity(count as usize);
    loop {
        out.push(HFSet::from_elements(
            xs.iter().zip(&digits).map(|(x, d)| kpair(*x, ys[*d])),
        ));
        // odometer increment
        let mut i = 0;
        loop {
            if i == digits.len() {
                return Ok(HFSet::from_elements(out));
            }
            digits[i] += 1;
            if digits[i] < ys.len() {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// Outcome of a pointwise comparison of two functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FuncExt {
    Equal,
    /// A point of `A` where the two functions disagree.
    Differ(HFSet),
}

impl FuncExt {
    pub fn is_equal(self) -> bool {
        matches!(self, FuncExt::Equal)
    }
}

/// Pointwise comparison of `f, g ∈ B^A`.
pub fn func_ext(f: HFSet, g: HFSet, a: HFSet, b: HFSet) -> Result<FuncExt> {
    require_func(f, a, b, Side::Left)?;
    require_func(g, a, b, Side::Right)?;
    for x in a.members() {
        if fapply_unchecked(f, x) != fapply_unchecked(g, x) {
            return Ok(FuncExt::Differ(x));
        }
    }
    Ok(FuncExt::Equal)
}
