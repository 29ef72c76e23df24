//! Integers as canonical representatives of `(ℕ × ℕ)/∼` with
//! `(a, b) ∼ (c, d) ⟺ a + d = b + c`.

use std::cmp::Ordering;
use std::fmt;

use super::nat::{nat_add, nat_le, nat_lt, nat_mul, nat_one, nat_sub, nat_zero, ZFNat};
use crate::kernel::{kpair, HFSet};

/// The class of `(pos, neg)`, read `pos - neg`, kept with one side zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ZFInt {
    pos: ZFNat,
    neg: ZFNat,
}

impl ZFInt {
    pub fn pos(self) -> ZFNat {
        self.pos
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> ZFNat {
        self.neg
    }

    pub fn is_zero(self) -> bool {
        self.pos.is_zero() && self.neg.is_zero()
    }

    pub fn is_negative(self) -> bool {
        !self.neg.is_zero()
    }

    /// The underlying set: the pair `(pos, neg)`, a member of
    /// `ℕ × {0} ∪ {0} × ℕ`.
    pub fn to_set(self) -> HFSet {
        kpair(self.pos.value(), self.neg.value())
    }

    /// `|z|` as a natural.
    pub fn magnitude(self) -> ZFNat {
        if self.is_negative() {
            self.neg
        } else {
            self.pos
        }
    }
}

impl fmt::Debug for ZFInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_negative() {
            write!(f, "-{:?}", self.neg)
        } else {
            write!(f, "{:?}", self.pos)
        }
    }
}

impl PartialOrd for ZFInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ZFInt {
    fn cmp(&self, other: &Self) -> Ordering {
        if int_lt(*self, *other) {
            Ordering::Less
        } else if self == other {
            Ordering::Equal
        } else {
            Ordering::Greater
        }
    }
}

/// Canonical representative of the class of `(a, b)`.
pub fn int_mk(a: ZFNat, b: ZFNat) -> ZFInt {
    if nat_le(b, a) {
        ZFInt {
            pos: nat_sub(a, b),
            neg: nat_zero(),
        }
    } else {
        ZFInt {
            pos: nat_zero(),
            neg: nat_sub(b, a),
        }
    }
}

pub fn int_zero() -> ZFInt {
    int_mk(nat_zero(), nat_zero())
}

pub fn int_one() -> ZFInt {
    int_mk(nat_one(), nat_zero())
}

pub fn int_from_nat(n: ZFNat) -> ZFInt {
    int_mk(n, nat_zero())
}

pub fn int_add(x: ZFInt, y: ZFInt) -> ZFInt {
    int_mk(nat_add(x.pos, y.pos), nat_add(x.neg, y.neg))
}

/// Opposite: flip the pair.
pub fn int_neg(x: ZFInt) -> ZFInt {
    int_mk(x.neg, x.pos)
}

pub fn int_sub(x: ZFInt, y: ZFInt) -> ZFInt {
    int_add(x, int_neg(y))
}

/// Product of naturals with the recursion running over the smaller factor.
fn mul_small_first(a: ZFNat, b: ZFNat) -> ZFNat {
    if nat_lt(b, a) {
        nat_mul(b, a)
    } else {
        nat_mul(a, b)
    }
}

/// `(a, b) · (c, d) = (ac + bd, ad + bc)`.
pub fn int_mul(x: ZFInt, y: ZFInt) -> ZFInt {
    let (a, b, c, d) = (x.pos, x.neg, y.pos, y.neg);
    int_mk(
        nat_add(mul_small_first(a, c), mul_small_first(b, d)),
        nat_add(mul_small_first(a, d), mul_small_first(b, c)),
    )
}

/// `(a, b) < (c, d) ⟺ a + d < b + c`.
pub fn int_lt(x: ZFInt, y: ZFInt) -> bool {
    nat_lt(nat_add(x.pos, y.neg), nat_add(x.neg, y.pos))
}
