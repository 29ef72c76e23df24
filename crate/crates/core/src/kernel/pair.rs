//! Kuratowski pairs `{{x},{x,y}}`, their projections and cartesian products.

use super::{diff, inter_all, mem, singleton, union_all, HFSet, Limits};
use crate::Result;

pub fn kpair(x: HFSet, y: HFSet) -> HFSet {
    HFSet::from_elements([singleton(x), HFSet::from_elements([x, y])])
}

/// First projection `⋃⋂z`. Total: meaningful only on pairs.
pub fn pi1(z: HFSet) -> HFSet {
    union_all(inter_all(z))
}

/// Second projection: `π₁ z` when `⋃z \ ⋂z` is empty, `⋃(⋃z \ ⋂z)` otherwise.
pub fn pi2(z: HFSet) -> HFSet {
    let rest = diff(union_all(z), inter_all(z));
    if rest.is_empty() {
        pi1(z)
    } else {
        union_all(rest)
    }
}

/// Whether `z = (π₁ z, π₂ z)`.
pub fn is_kpair(z: HFSet) -> bool {
    kpair(pi1(z), pi2(z)) == z
}

/// Structural decoding of a Kuratowski pair. Agrees with
/// `is_kpair(z).then(|| (pi1(z), pi2(z)))` but avoids rebuilding the pair.
pub fn as_pair(z: HFSet) -> Option<(HFSet, HFSet)> {
    match z.len() {
        1 => {
            let only = z.member(0)?;
            (only.len() == 1).then(|| {
                let x = only.member(0).unwrap();
                (x, x)
            })
        }
        2 => {
            let (a, b) = (z.member(0)?, z.member(1)?);
            let (single, double) = match (a.len(), b.len()) {
                (1, 2) => (a, b),
                (2, 1) => (b, a),
                _ => return None,
            };
            let x = single.member(0).unwrap();
            if !mem(x, double) {
                return None;
            }
            // the member of `double` that is not x
            let y = double.members().find(|m| *m != x).unwrap();
            Some((x, y))
        }
        _ => None,
    }
}

/// `A × B`.
pub fn prod(a: HFSet, b: HFSet, limits: &Limits) -> Result<HFSet> {
    limits.check(a.len() as u128 * b.len() as u128)?;
    let bs = b.to_vec();
    Ok(HFSet::from_elements(
        a.members()
            .flat_map(|x| bs.iter().map(move |y| kpair(x, *y))),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(xs: &[HFSet]) -> HFSet {
        HFSet::from_elements(xs.iter().copied())
    }

    #[test]
    fn degenerate_pair_collapses() {
        let e = HFSet::empty();
        assert_eq!(kpair(e, e), s(&[s(&[e])]));
        assert_eq!(kpair(e, e).to_string(), "{{{}}}");
        assert_eq!(pi2(kpair(e, e)), e);
    }

    #[test]
    fn pair_of_empty_and_one() {
        let e = HFSet::empty();
        let one = s(&[e]);
        let p = kpair(e, one);
        assert_eq!(p, s(&[s(&[e]), s(&[e, one])]));
        assert_eq!(pi1(p), e);
        assert_eq!(pi2(p), one);
        assert!(is_kpair(p));
        assert_eq!(as_pair(p), Some((e, one)));
    }

    #[test]
    fn non_pairs() {
        let e = HFSet::empty();
        assert!(!is_kpair(e));
        assert!(!is_kpair(s(&[e])));
        assert_eq!(as_pair(e), None);
        assert_eq!(as_pair(s(&[e])), None);
        // {{∅},{{∅}}} has a singleton but the other member misses ∅
        let odd = s(&[s(&[e]), s(&[s(&[e])])]);
        assert!(!is_kpair(odd));
        assert_eq!(as_pair(odd), None);
    }

    #[test]
    fn product_of_singletons() {
        let e = HFSet::empty();
        let one = s(&[e]);
        let p = prod(one, one, &Limits::default()).unwrap();
        assert_eq!(p, s(&[kpair(e, e)]));
        assert_eq!(p.to_string(), "{{{{}}}}");
        assert!(prod(HFSet::numeral(4), HFSet::numeral(4), &Limits::new(15)).is_err());
    }
}
