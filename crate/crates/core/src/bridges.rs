//! Encoding and decoding between canonical sets and machine values.

use std::fmt;

use thiserror::Error;

use crate::canon::{
    inl, inr, int_mk, opt_none, opt_some, OptionElem, SumElem, ZFBool, ZFInt, ZFNat,
};
use crate::kernel::HFSet;

/// Largest natural the bridges encode or decode unless told otherwise.
pub const DEFAULT_NAT_BOUND: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BridgeErrorKind {
    NotNumeral,
    NotBoolean,
    NotTagged,
    Overflow,
}

impl fmt::Display for BridgeErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BridgeErrorKind::NotNumeral => "not a von Neumann numeral",
            BridgeErrorKind::NotBoolean => "not a Boolean",
            BridgeErrorKind::NotTagged => "not a tagged pair",
            BridgeErrorKind::Overflow => "exceeds the bridge bound",
        })
    }
}

/// A failed encode or decode. `offending` is the set that failed the check;
/// it is absent when the input was a machine value too large to encode.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind}{}", .offending.map(|s| format!(": {s}")).unwrap_or_default())]
pub struct BridgeError {
    pub kind: BridgeErrorKind,
    pub offending: Option<HFSet>,
}

impl BridgeError {
    fn on(kind: BridgeErrorKind, x: HFSet) -> Self {
        BridgeError {
            kind,
            offending: Some(x),
        }
    }

    fn overflow() -> Self {
        BridgeError {
            kind: BridgeErrorKind::Overflow,
            offending: None,
        }
    }
}

pub fn bool_encode(b: bool) -> ZFBool {
    if b {
        ZFBool::top()
    } else {
        ZFBool::bot()
    }
}

pub fn bool_decode(p: ZFBool) -> bool {
    p.is_top()
}

/// Decodes a raw set that should be `⊥` or `⊤`.
pub fn bool_decode_set(x: HFSet) -> Result<bool, BridgeError> {
    ZFBool::new(x)
        .map(bool_decode)
        .ok_or(BridgeError::on(BridgeErrorKind::NotBoolean, x))
}

pub fn nat_encode(n: usize) -> Result<ZFNat, BridgeError> {
    nat_encode_within(n, DEFAULT_NAT_BOUND)
}

pub fn nat_encode_within(n: usize, bound: usize) -> Result<ZFNat, BridgeError> {
    if n > bound {
        return Err(BridgeError::overflow());
    }
    Ok(ZFNat::new(HFSet::numeral(n)).expect("numerals are von Neumann"))
}

/// Cardinality of `x` once it is known to be a numeral.
pub fn nat_decode(x: HFSet) -> Result<usize, BridgeError> {
    nat_decode_within(x, DEFAULT_NAT_BOUND)
}

pub fn nat_decode_within(x: HFSet, bound: usize) -> Result<usize, BridgeError> {
    let n = ZFNat::new(x).ok_or(BridgeError::on(BridgeErrorKind::NotNumeral, x))?;
    let k = n.value().len();
    if k > bound {
        return Err(BridgeError::on(BridgeErrorKind::Overflow, x));
    }
    Ok(k)
}

pub fn int_encode(k: i64) -> Result<ZFInt, BridgeError> {
    int_encode_within(k, DEFAULT_NAT_BOUND)
}

pub fn int_encode_within(k: i64, bound: usize) -> Result<ZFInt, BridgeError> {
    let m = usize::try_from(k.unsigned_abs()).map_err(|_| BridgeError::overflow())?;
    let m = nat_encode_within(m, bound)?;
    let zero = nat_encode_within(0, bound)?;
    Ok(if k >= 0 {
        int_mk(m, zero)
    } else {
        int_mk(zero, m)
    })
}

/// Signed difference `pos - neg`.
pub fn int_decode(z: ZFInt) -> Result<i64, BridgeError> {
    let too_big = || BridgeError::on(BridgeErrorKind::Overflow, z.to_set());
    let m = i64::try_from(z.magnitude().value().len()).map_err(|_| too_big())?;
    Ok(if z.is_negative() { -m } else { m })
}

/// Decodes a raw set of the form `(pos, neg)` with one side zero.
pub fn int_decode_set(x: HFSet) -> Result<i64, BridgeError> {
    let not_int = || BridgeError::on(BridgeErrorKind::NotNumeral, x);
    let (p, n) = crate::kernel::as_pair(x).ok_or_else(not_int)?;
    let p = ZFNat::new(p).ok_or_else(not_int)?;
    let n = ZFNat::new(n).ok_or_else(not_int)?;
    let z = int_mk(p, n);
    if z.pos() != p || z.neg() != n {
        return Err(not_int());
    }
    int_decode(z)
}

/// Machine-side view of a coproduct element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Either {
    Left(HFSet),
    Right(HFSet),
}

/// Checks that `x` is in `A ⊎ B` and splits it by tag.
pub fn sum_decode(x: HFSet, a: HFSet, b: HFSet) -> Result<Either, BridgeError> {
    let not_tagged = || BridgeError::on(BridgeErrorKind::NotTagged, x);
    let s = SumElem::from_set(x).ok_or_else(not_tagged)?;
    if s.is_left() {
        inl(s.payload(), a, b).map_err(|_| not_tagged())?;
        Ok(Either::Left(s.payload()))
    } else {
        inr(s.payload(), a, b).map_err(|_| not_tagged())?;
        Ok(Either::Right(s.payload()))
    }
}

pub fn sum_encode(e: Either, a: HFSet, b: HFSet) -> crate::Result<SumElem> {
    match e {
        Either::Left(x) => inl(x, a, b),
        Either::Right(y) => inr(y, a, b),
    }
}

pub fn option_decode(x: HFSet, a: HFSet) -> Result<Option<HFSet>, BridgeError> {
    match sum_decode(x, crate::kernel::singleton(HFSet::empty()), a)? {
        Either::Left(_) => Ok(None),
        Either::Right(y) => Ok(Some(y)),
    }
}

pub fn option_encode(o: Option<HFSet>, a: HFSet) -> crate::Result<OptionElem> {
    match o {
        None => Ok(opt_none(a)),
        Some(x) => opt_some(x, a),
    }
}
