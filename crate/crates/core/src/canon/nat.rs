//! Von Neumann naturals with the primitive-recursive arithmetic
//! `add n m = rec n m succ`, `sub n m = rec m n pred`,
//! `mul n m = rec n 0 (· + m)`.

use std::cmp::Ordering;
use std::fmt;

use crate::kernel::{mem, HFSet};

/// A von Neumann numeral `{0, 1, ..., n - 1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ZFNat(HFSet);

impl ZFNat {
    /// Packages `x` when it is a von Neumann numeral.
    pub fn new(x: HFSet) -> Option<ZFNat> {
        is_von_neumann(x).then_some(ZFNat(x))
    }

    pub fn value(self) -> HFSet {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn from_chain(x: HFSet) -> ZFNat {
        debug_assert!(x.as_numeral().is_some());
        ZFNat(x)
    }
}

impl fmt::Debug for ZFNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0.len())
    }
}

impl PartialOrd for ZFNat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ZFNat {
    fn cmp(&self, other: &Self) -> Ordering {
        if nat_lt(*self, *other) {
            Ordering::Less
        } else if self == other {
            Ordering::Equal
        } else {
            Ordering::Greater
        }
    }
}

/// Transitive and totally ordered by `∈`, i.e. reachable from `∅` by
/// successor. Canonical numerals always live on the numeral chain, so this is
/// a tag check.
pub fn is_von_neumann(x: HFSet) -> bool {
    x.as_numeral().is_some()
}

pub fn nat_zero() -> ZFNat {
    ZFNat(HFSet::empty())
}

pub fn nat_one() -> ZFNat {
    nat_succ(nat_zero())
}

/// `n ∪ {n}`.
pub fn nat_succ(n: ZFNat) -> ZFNat {
    ZFNat(n.0.succ())
}

/// Structural recursion: `rec 0 = base`, `rec (succ k) = step(k, rec k)`.
///
/// The members of `n` are exactly its predecessors `0, ..., n - 1` in
/// increasing order, so the recursion unfolds as a left fold over them.
pub fn nat_rec<T, F>(n: ZFNat, base: T, mut step: F) -> T
where
    F: FnMut(ZFNat, T) -> T,
{
    n.0.members()
        .fold(base, |acc, k| step(ZFNat::from_chain(k), acc))
}

/// `pred 0 = 0`, `pred (succ k) = k`.
///
/// This is `rec m 0 (fun k _ ↦ k)`; only the last step matters, so it is
/// read off directly as the largest member.
pub fn nat_pred(m: ZFNat) -> ZFNat {
    ZFNat(m.0.last().unwrap_or_else(HFSet::empty))
}

/// `rec n m (fun _ ↦ succ)`.
pub fn nat_add(n: ZFNat, m: ZFNat) -> ZFNat {
    nat_rec(n, m, |_, acc| nat_succ(acc))
}

/// Truncated subtraction `rec m n (fun _ ↦ pred)`.
pub fn nat_sub(n: ZFNat, m: ZFNat) -> ZFNat {
    nat_rec(m, n, |_, acc| nat_pred(acc))
}

/// `rec n 0 (fun _ ↦ (· + m))`.
pub fn nat_mul(n: ZFNat, m: ZFNat) -> ZFNat {
    nat_rec(n, nat_zero(), |_, acc| nat_add(acc, m))
}

/// `m < n ≜ m ∈ n`.
pub fn nat_lt(m: ZFNat, n: ZFNat) -> bool {
    mem(m.0, n.0)
}

/// `m ≤ n ≜ m < n ∨ m = n`.
pub fn nat_le(m: ZFNat, n: ZFNat) -> bool {
    nat_lt(m, n) || m == n
}

/// Quotient and remainder by repeated subtraction. `None` when `d = 0`.
pub fn nat_divmod(n: ZFNat, d: ZFNat) -> Option<(ZFNat, ZFNat)> {
    if d.is_zero() {
        return None;
    }
    let mut q = nat_zero();
    let mut r = n;
    while nat_le(d, r) {
        r = nat_sub(r, d);
        q = nat_succ(q);
    }
    Some((q, r))
}

/// Euclid's algorithm; `gcd(0, 0) = 0`.
pub fn nat_gcd(a: ZFNat, b: ZFNat) -> ZFNat {
    let (mut a, mut b) = (a, b);
    while let Some((_, r)) = nat_divmod(a, b) {
        a = b;
        b = r;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::subset;

    fn n(k: usize) -> ZFNat {
        ZFNat(HFSet::numeral(k))
    }

    /// Transitivity plus trichotomy under `∈`, checked member by member.
    fn von_neumann_by_definition(x: HFSet) -> bool {
        let ms = x.to_vec();
        let transitive = ms.iter().all(|m| subset(*m, x));
        let total = ms
            .iter()
            .all(|a| ms.iter().all(|b| a == b || mem(*a, *b) || mem(*b, *a)));
        transitive && total
    }

    #[test]
    fn succ_and_pred() {
        assert_eq!(
            nat_succ(nat_zero()).value(),
            HFSet::from_elements([HFSet::empty()])
        );
        assert_eq!(nat_pred(nat_zero()), nat_zero());
        for k in 0..=64 {
            assert_eq!(nat_pred(nat_succ(n(k))), n(k));
        }
    }

    #[test]
    fn pred_matches_recursor_definition() {
        for k in 0..40 {
            let by_rec = nat_rec(n(k), nat_zero(), |x, _| x);
            assert_eq!(nat_pred(n(k)), by_rec);
        }
    }

    #[test]
    fn recursor_unfolds() {
        assert_eq!(nat_rec(nat_zero(), 7u32, |_, a| a + 1), 7);
        for k in 0..10 {
            let lhs = nat_rec(nat_succ(n(k)), Vec::new(), |x, mut acc: Vec<ZFNat>| {
                acc.push(x);
                acc
            });
            let mut rhs = nat_rec(n(k), Vec::new(), |x, mut acc: Vec<ZFNat>| {
                acc.push(x);
                acc
            });
            rhs.push(n(k));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn arithmetic_small() {
        assert_eq!(nat_add(n(2), n(3)), n(5));
        assert_eq!(nat_sub(n(2), n(5)), n(0));
        assert_eq!(nat_sub(n(5), n(2)), n(3));
        assert_eq!(nat_mul(n(4), n(3)), n(12));
        assert_eq!(nat_mul(n(0), n(3)), n(0));
        assert_eq!(nat_divmod(n(17), n(5)), Some((n(3), n(2))));
        assert_eq!(nat_divmod(n(17), n(0)), None);
        assert_eq!(nat_gcd(n(12), n(18)), n(6));
        assert_eq!(nat_gcd(n(0), n(7)), n(7));
    }

    #[test]
    fn order_is_membership() {
        assert!(nat_lt(n(2), n(3)));
        for k in 0..=64 {
            assert!(!nat_lt(n(k), n(k)));
            assert!(nat_lt(n(k), nat_succ(n(k))));
        }
    }

    #[test]
    fn von_neumann_predicate() {
        assert!(is_von_neumann(HFSet::numeral(7)));
        assert!(is_von_neumann(HFSet::empty()));
        let odd = HFSet::from_elements([HFSet::numeral(1)]);
        assert!(!is_von_neumann(odd));
        assert!(ZFNat::new(odd).is_none());
        for k in 0..12 {
            assert!(von_neumann_by_definition(HFSet::numeral(k)));
        }
        assert!(!von_neumann_by_definition(odd));
    }
}
