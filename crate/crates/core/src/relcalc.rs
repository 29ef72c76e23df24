//! Carrier-relative relational calculus.
//!
//! Carriers are always explicit: `converse(R, A, B)` is the converse of `R`
//! seen as a relation between `A` and `B`, and the side condition `R ⊆ A×B`
//! is checked rather than assumed.

use std::collections::HashMap;

use crate::kernel::{as_pair, kpair, mem, subset, HFSet};
use crate::{Error, Result, Side};

/// Source and target carriers of a relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CarrierPair {
    pub src: HFSet,
    pub dst: HFSet,
}

impl CarrierPair {
    pub fn new(src: HFSet, dst: HFSet) -> Self {
        CarrierPair { src, dst }
    }

    pub fn flip(self) -> Self {
        CarrierPair::new(self.dst, self.src)
    }
}

/// Members of `r` that are pairs `(x, y)` with `x ∈ A`, `y ∈ B`.
fn pairs_within(r: HFSet, a: HFSet, b: HFSet) -> impl Iterator<Item = (HFSet, HFSet)> {
    r.members()
        .filter_map(as_pair)
        .filter(move |(x, y)| mem(*x, a) && mem(*y, b))
}

/// `𝟙A = { (a, a) | a ∈ A }`.
pub fn identity(a: HFSet) -> HFSet {
    HFSet::from_elements(a.members().map(|x| kpair(x, x)))
}

/// `R ⊆ A × B`.
pub fn is_relation(r: HFSet, a: HFSet, b: HFSet) -> bool {
    r.members()
        .all(|z| as_pair(z).is_some_and(|(x, y)| mem(x, a) && mem(y, b)))
}

/// Relation that relates every `x` to at most one `y`.
pub fn is_pfunc(f: HFSet, a: HFSet, b: HFSet) -> bool {
    if !is_relation(f, a, b) {
        return false;
    }
    let mut seen: HashMap<HFSet, HFSet> = HashMap::with_capacity(f.len());
    for (x, y) in f.members().filter_map(as_pair) {
        if let Some(prev) = seen.insert(x, y) {
            if prev != y {
                return false;
            }
        }
    }
    true
}

/// Partial function whose domain is exactly `A`.
pub fn is_func(f: HFSet, a: HFSet, b: HFSet) -> bool {
    // functional and one pair per element of A ⇔ |f| = |A| with every x hit
    is_pfunc(f, a, b) && f.len() == a.len()
}

fn require_relation(r: HFSet, a: HFSet, b: HFSet) -> Result<()> {
    if is_relation(r, a, b) {
        Ok(())
    } else {
        Err(Error::NotARelation)
    }
}

pub(crate) fn require_func(f: HFSet, a: HFSet, b: HFSet, side: Side) -> Result<()> {
    if is_func(f, a, b) {
        Ok(())
    } else {
        Err(Error::NotAFunction(side))
    }
}

/// `R⁻¹ ⊆ B × A`. Requires `R ⊆ A × B`.
pub fn converse(r: HFSet, a: HFSet, b: HFSet) -> Result<HFSet> {
    require_relation(r, a, b)?;
    Ok(HFSet::from_elements(
        pairs_within(r, a, b).map(|(x, y)| kpair(y, x)),
    ))
}

/// `S ∘ R = { (x, z) ∈ A × C | ∃ y ∈ B, (x, y) ∈ R ∧ (y, z) ∈ S }`.
///
/// Nothing is required of `R` and `S`; stray members that are not pairs in
/// the right carriers simply never contribute.
pub fn compose(s: HFSet, r: HFSet, a: HFSet, b: HFSet, c: HFSet) -> HFSet {
    let mut by_mid: HashMap<HFSet, Vec<HFSet>> = HashMap::new();
    for (y, z) in pairs_within(s, b, c) {
        by_mid.entry(y).or_default().push(z);
    }
    let mut out = Vec::new();
    for (x, y) in pairs_within(r, a, b) {
        if let Some(zs) = by_mid.get(&y) {
            out.extend(zs.iter().map(|z| kpair(x, *z)));
        }
    }
    HFSet::from_elements(out)
}

/// Composition of total functions `g ∘ f : A → C`.
pub fn fcompose(g: HFSet, f: HFSet, a: HFSet, b: HFSet, c: HFSet) -> Result<HFSet> {
    require_func(f, a, b, Side::Left)?;
    require_func(g, b, c, Side::Right)?;
    Ok(compose(g, f, a, b, c))
}

/// `Dom(R) = { x ∈ A | ∃ y ∈ B, (x, y) ∈ R }`.
pub fn domain(r: HFSet, a: HFSet, b: HFSet) -> Result<HFSet> {
    require_relation(r, a, b)?;
    Ok(HFSet::from_elements(pairs_within(r, a, b).map(|(x, _)| x)))
}

/// `Range(R) = { y ∈ B | ∃ x ∈ Dom(R), (x, y) ∈ R }`.
pub fn range(r: HFSet, a: HFSet, b: HFSet) -> Result<HFSet> {
    require_relation(r, a, b)?;
    Ok(HFSet::from_elements(pairs_within(r, a, b).map(|(_, y)| y)))
}

/// `R[X] = { y ∈ B | ∃ x ∈ X, (x, y) ∈ R }` for `X ⊆ A`.
pub fn image(r: HFSet, x: HFSet, a: HFSet, b: HFSet) -> Result<HFSet> {
    require_relation(r, a, b)?;
    if !subset(x, a) {
        return Err(Error::NotASubset);
    }
    Ok(HFSet::from_elements(
        pairs_within(r, a, b)
            .filter(|(p, _)| mem(*p, x))
            .map(|(_, y)| y),
    ))
}

pub fn is_injective(f: HFSet, a: HFSet, b: HFSet) -> Result<bool> {
    require_func(f, a, b, Side::Left)?;
    let targets = HFSet::from_elements(f.members().filter_map(as_pair).map(|(_, y)| y));
    Ok(targets.len() == f.len())
}

pub fn is_surjective(f: HFSet, a: HFSet, b: HFSet) -> Result<bool> {
    require_func(f, a, b, Side::Left)?;
    let targets = HFSet::from_elements(f.members().filter_map(as_pair).map(|(_, y)| y));
    Ok(targets == b)
}

pub fn is_bijective(f: HFSet, a: HFSet, b: HFSet) -> Result<bool> {
    Ok(is_injective(f, a, b)? && is_surjective(f, a, b)?)
}
