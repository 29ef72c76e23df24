use std::fmt;

use crate::kernel::{bin_inter, bin_union, HFSet};

/// A member of `𝔹 = {⊥, ⊤}` where `⊥ = ∅` and `⊤ = {∅}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ZFBool(HFSet);

/// The carrier `𝔹 = {∅, {∅}}`.
pub fn bool_carrier() -> HFSet {
    HFSet::numeral(2)
}

impl ZFBool {
    pub fn bot() -> ZFBool {
        ZFBool(HFSet::empty())
    }

    pub fn top() -> ZFBool {
        ZFBool(HFSet::numeral(1))
    }

    /// Packages `x` when `x ∈ 𝔹`.
    pub fn new(x: HFSet) -> Option<ZFBool> {
        (x == HFSet::empty() || x == HFSet::numeral(1)).then_some(ZFBool(x))
    }

    pub fn value(self) -> HFSet {
        self.0
    }

    pub fn is_top(self) -> bool {
        !self.0.is_empty()
    }
}

impl fmt::Debug for ZFBool {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.is_top() { "⊤" } else { "⊥" })
    }
}

/// Case analysis on an internal Boolean.
pub fn bool_cases<T>(p: ZFBool, on_false: T, on_true: T) -> T {
    if p.0 == HFSet::empty() {
        on_false
    } else {
        on_true
    }
}

/// Conjunction as intersection.
pub fn band(p: ZFBool, q: ZFBool) -> ZFBool {
    ZFBool(bin_inter(p.0, q.0))
}

/// Disjunction as union.
pub fn bor(p: ZFBool, q: ZFBool) -> ZFBool {
    ZFBool(bin_union(p.0, q.0))
}

pub fn bnot(p: ZFBool) -> ZFBool {
    bool_cases(p, ZFBool::top(), ZFBool::bot())
}

/// `p → q` as `¬p ∨ q`.
pub fn bimp(p: ZFBool, q: ZFBool) -> ZFBool {
    bor(bnot(p), q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{diff, mem};

    fn all() -> [ZFBool; 2] {
        [ZFBool::bot(), ZFBool::top()]
    }

    #[test]
    fn carrier_and_cases() {
        let b = bool_carrier();
        assert!(mem(ZFBool::bot().value(), b));
        assert!(mem(ZFBool::top().value(), b));
        assert_eq!(bool_cases(ZFBool::bot(), 1, 2), 1);
        assert_eq!(bool_cases(ZFBool::top(), 1, 2), 2);
        assert_eq!(ZFBool::new(HFSet::numeral(2)), None);
    }

    #[test]
    fn negation_truth_table() {
        assert_eq!(bnot(ZFBool::bot()), ZFBool::top());
        assert_eq!(bnot(ZFBool::top()), ZFBool::bot());
        // ⊤ \ p reading of "complement relative to 𝔹" agrees
        for p in all() {
            assert_eq!(bnot(p).value(), diff(ZFBool::top().value(), p.value()));
        }
    }

    #[test]
    fn and_laws() {
        assert_eq!(band(ZFBool::top(), ZFBool::top()), ZFBool::top());
        for p in all() {
            assert_eq!(band(p, ZFBool::top()), p);
            for q in all() {
                assert_eq!(band(p, q), band(q, p));
                for r in all() {
                    assert_eq!(band(p, bor(q, r)), bor(band(p, q), band(p, r)));
                }
            }
        }
    }
}
