//! Coproducts `A ⊎ B = ({⊥} × A) ∪ ({⊤} × B)` and options `{∅} ⊎ A`.

use super::boolean::ZFBool;
use crate::kernel::{as_pair, kpair, mem, singleton, HFSet};
use crate::{Error, Result};

/// A tagged element `(tag, payload)` of a coproduct.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SumElem {
    tag: ZFBool,
    payload: HFSet,
}

impl SumElem {
    pub fn tag(self) -> ZFBool {
        self.tag
    }

    pub fn payload(self) -> HFSet {
        self.payload
    }

    pub fn is_left(self) -> bool {
        !self.tag.is_top()
    }

    pub fn underlying(self) -> HFSet {
        kpair(self.tag.value(), self.payload)
    }

    /// Reads a set back as a tagged pair. `None` unless it is a pair whose
    /// first component lies in `𝔹`.
    pub fn from_set(x: HFSet) -> Option<SumElem> {
        let (t, payload) = as_pair(x)?;
        Some(SumElem {
            tag: ZFBool::new(t)?,
            payload,
        })
    }
}

pub fn sum_set(a: HFSet, b: HFSet) -> HFSet {
    let l = a.members().map(|x| kpair(ZFBool::bot().value(), x));
    let r = b.members().map(|y| kpair(ZFBool::top().value(), y));
    HFSet::from_elements(l.chain(r))
}

pub fn inl(x: HFSet, a: HFSet, _b: HFSet) -> Result<SumElem> {
    if !mem(x, a) {
        return Err(Error::NotAMember(x));
    }
    Ok(SumElem {
        tag: ZFBool::bot(),
        payload: x,
    })
}

pub fn inr(y: HFSet, _a: HFSet, b: HFSet) -> Result<SumElem> {
    if !mem(y, b) {
        return Err(Error::NotAMember(y));
    }
    Ok(SumElem {
        tag: ZFBool::top(),
        payload: y,
    })
}

/// Dispatch on the tag `π₁ s`.
pub fn sum_cases<T>(
    s: SumElem,
    on_left: impl FnOnce(HFSet) -> T,
    on_right: impl FnOnce(HFSet) -> T,
) -> T {
    if s.is_left() {
        on_left(s.payload)
    } else {
        on_right(s.payload)
    }
}

pub type OptionElem = SumElem;

fn unit() -> HFSet {
    singleton(HFSet::empty())
}

pub fn option_set(a: HFSet) -> HFSet {
    sum_set(unit(), a)
}

/// `none = inl(∅)`.
pub fn opt_none(a: HFSet) -> OptionElem {
    inl(HFSet::empty(), unit(), a).expect("∅ ∈ {∅}")
}

/// `some = inr`.
pub fn opt_some(x: HFSet, a: HFSet) -> Result<OptionElem> {
    inr(x, unit(), a)
}

pub fn option_cases<T>(o: OptionElem, on_none: T, on_some: impl FnOnce(HFSet) -> T) -> T {
    if o.is_left() {
        on_none
    } else {
        on_some(o.payload)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tagged_pairs() {
        let a = HFSet::numeral(2);
        let b = HFSet::numeral(3);
        let x = HFSet::numeral(1);
        assert_eq!(inl(x, a, b).unwrap().underlying(), kpair(HFSet::empty(), x));
        assert_eq!(
            inl(HFSet::numeral(2), a, b),
            Err(Error::NotAMember(HFSet::numeral(2)))
        );
        assert_eq!(
            sum_cases(inl(x, a, b).unwrap(), |p| (0, p), |p| (1, p)),
            (0, x)
        );
        assert_eq!(
            sum_cases(inr(x, a, b).unwrap(), |p| (0, p), |p| (1, p)),
            (1, x)
        );
    }

    #[test]
    fn sum_sizes_and_cover() {
        for i in 0..=5 {
            for j in 0..=5 {
                let (a, b) = (HFSet::numeral(i), HFSet::numeral(j));
                let s = sum_set(a, b);
                assert_eq!(s.len(), i + j);
                for z in s.members() {
                    let e = SumElem::from_set(z).unwrap();
                    let back = if e.is_left() {
                        inl(e.payload(), a, b)
                    } else {
                        inr(e.payload(), a, b)
                    };
                    assert_eq!(back.unwrap().underlying(), z);
                }
            }
        }
    }

    #[test]
    fn options() {
        let a = HFSet::numeral(3);
        assert_eq!(
            opt_none(a).underlying(),
            kpair(HFSet::empty(), HFSet::empty())
        );
        assert_eq!(option_set(a).len(), 4);
        let x = HFSet::numeral(2);
        assert_eq!(option_cases(opt_some(x, a).unwrap(), None, Some), Some(x));
        assert_eq!(option_cases(opt_none(a), None, Some), None);
    }
}
