use std::cmp::Ordering;

use super::{set_compare, HFSet, Limits};
use crate::Result;

/// `x ∈ X`.
pub fn mem(x: HFSet, big: HFSet) -> bool {
    if let Some(n) = big.as_numeral() {
        return x.as_numeral().is_some_and(|k| k < n);
    }
    big.flat()
        .expect("non-numeral sets are stored flat")
        .binary_search_by(|c| set_compare(*c, x))
        .is_ok()
}

/// `x ⊆ y`.
pub fn subset(x: HFSet, y: HFSet) -> bool {
    if let (Some(a), Some(b)) = (x.as_numeral(), y.as_numeral()) {
        return a <= b;
    }
    if x.len() > y.len() {
        return false;
    }
    let mut ys = y.members().peekable();
    'outer: for a in x.members() {
        while let Some(&b) = ys.peek() {
            match set_compare(b, a) {
                Ordering::Less => {
                    ys.next();
                }
                Ordering::Equal => {
                    ys.next();
                    continue 'outer;
                }
                Ordering::Greater => return false,
            }
        }
        return false;
    }
    true
}

pub fn singleton(x: HFSet) -> HFSet {
    HFSet::from_sorted(vec![x])
}

/// `X ∪ {x}`.
pub fn insert(x: HFSet, big: HFSet) -> HFSet {
    bin_union(big, singleton(x))
}

#[derive(Clone, Copy)]
enum Keep {
    Union,
    Inter,
    Diff,
}

fn merge(x: HFSet, y: HFSet, keep: Keep) -> HFSet {
    let mut out = Vec::with_capacity(match keep {
        Keep::Union => x.len() + y.len(),
        Keep::Inter => x.len().min(y.len()),
        Keep::Diff => x.len(),
    });
    let mut xs = x.members().peekable();
    let mut ys = y.members().peekable();
    loop {
        match (xs.peek().copied(), ys.peek().copied()) {
            (None, None) => break,
            (Some(_), None) => {
                if matches!(keep, Keep::Union | Keep::Diff) {
                    out.extend(xs);
                }
                break;
            }
            (None, Some(_)) => {
                if matches!(keep, Keep::Union) {
                    out.extend(ys);
                }
                break;
            }
            (Some(a), Some(b)) => match set_compare(a, b) {
                Ordering::Less => {
                    if matches!(keep, Keep::Union | Keep::Diff) {
                        out.push(a);
                    }
                    xs.next();
                }
                Ordering::Greater => {
                    if matches!(keep, Keep::Union) {
                        out.push(b);
                    }
                    ys.next();
                }
                Ordering::Equal => {
                    if matches!(keep, Keep::Union | Keep::Inter) {
                        out.push(a);
                    }
                    xs.next();
                    ys.next();
                }
            },
        }
    }
    HFSet::from_sorted(out)
}

pub fn bin_union(x: HFSet, y: HFSet) -> HFSet {
    if let (Some(a), Some(b)) = (x.as_numeral(), y.as_numeral()) {
        return if a >= b { x } else { y };
    }
    merge(x, y, Keep::Union)
}

pub fn bin_inter(x: HFSet, y: HFSet) -> HFSet {
    if let (Some(a), Some(b)) = (x.as_numeral(), y.as_numeral()) {
        return if a <= b { x } else { y };
    }
    merge(x, y, Keep::Inter)
}

/// `x \ y`.
pub fn diff(x: HFSet, y: HFSet) -> HFSet {
    merge(x, y, Keep::Diff)
}

/// `⋃X`.
pub fn union_all(big: HFSet) -> HFSet {
    HFSet::from_elements(big.members().flat_map(|m| m.members()))
}

/// `⋂X`, with `⋂∅ = ∅` so the operator is total.
pub fn inter_all(big: HFSet) -> HFSet {
    let mut it = big.members();
    match it.next() {
        None => HFSet::empty(),
        Some(first) => it.fold(first, bin_inter),
    }
}

/// `𝒫(X)`. Refuses when `2^|X|` exceeds the limit.
pub fn pow(big: HFSet, limits: &Limits) -> Result<HFSet> {
    let n = big.len();
    let requested = if n >= 127 { u128::MAX } else { 1u128 << n };
    limits.check(requested)?;
    let elems = big.to_vec();
    let subsets = (0u64..(1u64 << n)).map(|mask| {
        // members of X are sorted, so any sub-selection stays sorted
        let picked = elems
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, e)| *e)
            .collect();
        HFSet::from_sorted(picked)
    });
    Ok(HFSet::from_elements(subsets))
}

/// `{ x ∈ X | pred(x) }`.
pub fn separation<P: FnMut(HFSet) -> bool>(big: HFSet, mut pred: P) -> HFSet {
    HFSet::from_sorted(big.members().filter(|x| pred(*x)).collect())
}
