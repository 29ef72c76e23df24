//! Rationals as reduced fractions with positive denominator, realizing
//! `(a, b) ∼ (c, d) ⟺ a·d = b·c`.

use std::fmt;

use super::int::{int_add, int_from_nat, int_mul, int_neg, int_one, int_zero, ZFInt};
use super::nat::{nat_divmod, nat_gcd, ZFNat};
use crate::kernel::{kpair, HFSet};
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ZFRat {
    num: ZFInt,
    den: ZFInt,
}

impl ZFRat {
    pub fn num(self) -> ZFInt {
        self.num
    }

    pub fn den(self) -> ZFInt {
        self.den
    }

    pub fn is_zero(self) -> bool {
        self.num.is_zero()
    }

    /// The underlying set `(num, den)` of integer pairs.
    pub fn to_set(self) -> HFSet {
        kpair(self.num.to_set(), self.den.to_set())
    }
}

impl fmt::Debug for ZFRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}/{:?}", self.num, self.den)
    }
}

fn exact_div(n: ZFNat, d: ZFNat) -> ZFNat {
    nat_divmod(n, d).expect("nonzero divisor").0
}

/// Reduced fraction `num/den`.
pub fn rat_mk(num: ZFInt, den: ZFInt) -> Result<ZFRat> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let (num, den) = if den.is_negative() {
        (int_neg(num), int_neg(den))
    } else {
        (num, den)
    };
    let g = nat_gcd(num.magnitude(), den.magnitude());
    let scale = |z: ZFInt| {
        let m = int_from_nat(exact_div(z.magnitude(), g));
        if z.is_negative() {
            int_neg(m)
        } else {
            m
        }
    };
    Ok(ZFRat {
        num: scale(num),
        den: scale(den),
    })
}

pub fn rat_from_int(z: ZFInt) -> ZFRat {
    ZFRat {
        num: z,
        den: int_one(),
    }
}

pub fn rat_zero() -> ZFRat {
    rat_from_int(int_zero())
}

pub fn rat_one() -> ZFRat {
    rat_from_int(int_one())
}

pub fn rat_add(x: ZFRat, y: ZFRat) -> ZFRat {
    let num = int_add(int_mul(x.num, y.den), int_mul(y.num, x.den));
    rat_mk(num, int_mul(x.den, y.den)).expect("denominators stay positive")
}

pub fn rat_neg(x: ZFRat) -> ZFRat {
    ZFRat {
        num: int_neg(x.num),
        den: x.den,
    }
}

pub fn rat_sub(x: ZFRat, y: ZFRat) -> ZFRat {
    rat_add(x, rat_neg(y))
}

pub fn rat_mul(x: ZFRat, y: ZFRat) -> ZFRat {
    rat_mk(int_mul(x.num, y.num), int_mul(x.den, y.den)).expect("denominators stay positive")
}

pub fn rat_inv(x: ZFRat) -> Result<ZFRat> {
    if x.is_zero() {
        return Err(Error::DivisionByZero);
    }
    rat_mk(x.den, x.num)
}

pub fn rat_div(x: ZFRat, y: ZFRat) -> Result<ZFRat> {
    Ok(rat_mul(x, rat_inv(y)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::int::int_mk;
    use crate::canon::nat::ZFNat;

    fn z(k: i64) -> ZFInt {
        let n = |v: u64| ZFNat::new(HFSet::numeral(v as usize)).unwrap();
        if k >= 0 {
            int_mk(n(k as u64), n(0))
        } else {
            int_mk(n(0), n((-k) as u64))
        }
    }

    fn q(a: i64, b: i64) -> ZFRat {
        rat_mk(z(a), z(b)).unwrap()
    }

    #[test]
    fn reduction() {
        let half = q(2, 4);
        assert_eq!((half.num(), half.den()), (z(1), z(2)));
        let neg = q(3, -6);
        assert_eq!((neg.num(), neg.den()), (z(-1), z(2)));
        assert_eq!(q(0, 5), rat_zero());
        assert_eq!(rat_mk(z(1), z(0)), Err(Error::ZeroDenominator));
    }

    #[test]
    fn field_ops() {
        assert_eq!(rat_add(q(1, 2), q(1, 3)), q(5, 6));
        assert_eq!(rat_sub(q(1, 2), q(1, 3)), q(1, 6));
        assert_eq!(rat_mul(q(2, 3), q(9, 4)), q(3, 2));
        assert_eq!(rat_div(q(1, 2), q(1, 4)).unwrap(), q(2, 1));
        assert_eq!(rat_mul(q(-7, 3), rat_inv(q(-7, 3)).unwrap()), rat_one());
        assert_eq!(rat_inv(rat_zero()), Err(Error::DivisionByZero));
        assert_eq!(rat_div(q(1, 2), rat_zero()), Err(Error::DivisionByZero));
    }
}
