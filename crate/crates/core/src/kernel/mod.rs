//! Canonical hereditarily finite sets.
//!
//! Every [`HFSet`] is hash-consed: a set is built only after its members, its
//! members are kept strictly sorted under [`set_compare`], and structurally
//! equal sets share one interned node. Extensional equality therefore reduces
//! to pointer equality.
//!
//! Von Neumann numerals are stored as a successor chain rather than as a flat
//! member array. Numeral `k` links to `k - 1` and lazily to `k + 1`, so the
//! numeral `k` costs constant memory while [`HFSet::members`] still yields
//! `0, 1, ..., k - 1` in canonical order.

mod ops;
mod pair;
mod text;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::sync::{LazyLock, OnceLock};

use dashmap::DashMap;
use rustc_hash::FxBuildHasher;

pub use ops::*;
pub use pair::*;
pub use text::{parse_set, parse_set_prefix, serialize, ParseError};

/// Enumeration guard for constructions whose output size is exponential or
/// multiplicative in their inputs (`pow`, `prod`, `funs`, ...).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest number of elements an enumeration may produce.
    pub max_card: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_card: 1 << 20 }
    }
}

impl Limits {
    pub fn new(max_card: usize) -> Self {
        Limits { max_card }
    }

    pub(crate) fn check(&self, requested: u128) -> crate::Result<()> {
        if requested > self.max_card as u128 {
            Err(crate::Error::LimitExceeded {
                requested,
                limit: self.max_card,
            })
        } else {
            Ok(())
        }
    }
}

/// A canonical hereditarily finite set.
///
/// Values are cheap `Copy` handles onto interned nodes that live for the rest
/// of the process.
#[derive(Clone, Copy)]
pub struct HFSet(&'static Node);

pub(crate) struct Node {
    id: u64,
    repr: Repr,
}

enum Repr {
    Flat(Box<[HFSet]>),
    Numeral {
        n: usize,
        pred: Option<HFSet>,
        next: OnceLock<HFSet>,
    },
}

static EMPTY: Node = Node {
    id: 0,
    repr: Repr::Numeral {
        n: 0,
        pred: None,
        next: OnceLock::new(),
    },
};

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

type Table = DashMap<&'static [HFSet], HFSet, FxBuildHasher>;

static TABLE: LazyLock<Table> = LazyLock::new(|| DashMap::with_hasher(FxBuildHasher));

fn fresh_id() -> u64 {
    NEXT_ID.fetch_add(1, AtomicOrdering::Relaxed)
}

/// Number of distinct non-numeral sets interned so far.
pub fn interned_count() -> usize {
    TABLE.len()
}

impl HFSet {
    /// The empty set, which is also the numeral zero.
    pub fn empty() -> HFSet {
        HFSet(&EMPTY)
    }

    /// Builds the set whose members are the distinct elements of `xs`.
    pub fn from_elements<I: IntoIterator<Item = HFSet>>(xs: I) -> HFSet {
        let mut v: Vec<HFSet> = xs.into_iter().collect();
        v.sort_unstable_by(|a, b| set_compare(*a, *b));
        v.dedup();
        HFSet::from_sorted(v)
    }

    /// Builds a set from members already strictly increasing under
    /// [`set_compare`].
    pub(crate) fn from_sorted(v: Vec<HFSet>) -> HFSet {
        debug_assert!(v
            .windows(2)
            .all(|w| set_compare(w[0], w[1]) == Ordering::Less));
        if v.is_empty() {
            return HFSet::empty();
        }
        if v.iter().enumerate().all(|(i, c)| c.as_numeral() == Some(i)) {
            return v[v.len() - 1].numeral_succ();
        }
        if let Some(hit) = TABLE.get(v.as_slice()) {
            return *hit;
        }
        let node: &'static Node = Box::leak(Box::new(Node {
            id: fresh_id(),
            repr: Repr::Flat(v.into_boxed_slice()),
        }));
        let key = match &node.repr {
            Repr::Flat(children) => &children[..],
            Repr::Numeral { .. } => unreachable!(),
        };
        *TABLE.entry(key).or_insert(HFSet(node))
    }

    /// The von Neumann numeral `k`, i.e. `{0, 1, ..., k - 1}`.
    pub fn numeral(k: usize) -> HFSet {
        let mut cur = HFSet::empty();
        for _ in 0..k {
            cur = cur.numeral_succ();
        }
        cur
    }

    /// `n ∪ {n}` along the numeral chain. Only valid on numerals.
    fn numeral_succ(self) -> HFSet {
        match &self.0.repr {
            Repr::Numeral { n, next, .. } => *next.get_or_init(|| {
                HFSet(Box::leak(Box::new(Node {
                    id: fresh_id(),
                    repr: Repr::Numeral {
                        n: n + 1,
                        pred: Some(self),
                        next: OnceLock::new(),
                    },
                })))
            }),
            Repr::Flat(_) => unreachable!("numeral_succ on a non-numeral"),
        }
    }

    /// `Some(k)` when this set is the von Neumann numeral `k`.
    pub fn as_numeral(self) -> Option<usize> {
        match &self.0.repr {
            Repr::Numeral { n, .. } => Some(*n),
            Repr::Flat(_) => None,
        }
    }

    /// Successor `x ∪ {x}` for an arbitrary set.
    pub fn succ(self) -> HFSet {
        match &self.0.repr {
            Repr::Numeral { .. } => self.numeral_succ(),
            Repr::Flat(_) => insert(self, self),
        }
    }

    /// Interning id; equal ids mean equal sets.
    pub fn id(self) -> u64 {
        self.0.id
    }

    pub fn len(self) -> usize {
        match &self.0.repr {
            Repr::Flat(c) => c.len(),
            Repr::Numeral { n, .. } => *n,
        }
    }

    pub fn is_empty(self) -> bool {
        self.len() == 0
    }

    /// Members in ascending canonical order.
    pub fn members(self) -> Members {
        match &self.0.repr {
            Repr::Flat(c) => Members::Flat(c.iter()),
            Repr::Numeral { n, pred, .. } => Members::Chain {
                front: HFSet::empty(),
                back: *pred,
                left: *n,
            },
        }
    }

    /// Members as a slice, when stored flat.
    pub(crate) fn flat(self) -> Option<&'static [HFSet]> {
        match &self.0.repr {
            Repr::Flat(c) => Some(c),
            Repr::Numeral { .. } => None,
        }
    }

    /// Members collected into a vector.
    pub fn to_vec(self) -> Vec<HFSet> {
        self.members().collect()
    }

    /// The `i`-th member in canonical order.
    pub fn member(self, i: usize) -> Option<HFSet> {
        match &self.0.repr {
            Repr::Flat(c) => c.get(i).copied(),
            Repr::Numeral { n, .. } => (i < *n).then(|| HFSet::numeral(i)),
        }
    }

    /// Largest member, if any.
    pub fn last(self) -> Option<HFSet> {
        match &self.0.repr {
            Repr::Flat(c) => c.last().copied(),
            Repr::Numeral { pred, .. } => *pred,
        }
    }

    /// Von Neumann rank: the height of the membership tree.
    pub fn rank(self) -> usize {
        fn go(x: HFSet, memo: &mut std::collections::HashMap<u64, usize>) -> usize {
            if let Some(n) = x.as_numeral() {
                return n;
            }
            if let Some(r) = memo.get(&x.id()) {
                return *r;
            }
            let r = x.members().map(|m| go(m, memo) + 1).max().unwrap_or(0);
            memo.insert(x.id(), r);
            r
        }
        go(self, &mut Default::default())
    }
}

/// Iterator over the members of a set in canonical order.
#[derive(Clone)]
pub enum Members {
    #[doc(hidden)]
    Flat(std::slice::Iter<'static, HFSet>),
    #[doc(hidden)]
    Chain {
        front: HFSet,
        back: Option<HFSet>,
        left: usize,
    },
}

impl Iterator for Members {
    type Item = HFSet;

    fn next(&mut self) -> Option<HFSet> {
        match self {
            Members::Flat(it) => it.next().copied(),
            Members::Chain { front, left, .. } => {
                if *left == 0 {
                    return None;
                }
                let cur = *front;
                *left -= 1;
                if *left > 0 {
                    *front = cur.numeral_succ();
                }
                Some(cur)
            }
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = match self {
            Members::Flat(it) => it.len(),
            Members::Chain { left, .. } => *left,
        };
        (n, Some(n))
    }
}

impl DoubleEndedIterator for Members {
    fn next_back(&mut self) -> Option<HFSet> {
        match self {
            Members::Flat(it) => it.next_back().copied(),
            Members::Chain { back, left, .. } => {
                if *left == 0 {
                    return None;
                }
                let cur = back.expect("chain numeral has a predecessor");
                *left -= 1;
                if let Repr::Numeral { pred, .. } = &cur.0.repr {
                    *back = *pred;
                }
                Some(cur)
            }
        }
    }
}

impl ExactSizeIterator for Members {}

/// Total order on canonical sets: lexicographic comparison of the sorted
/// member sequences, a proper prefix comparing less.
pub fn set_compare(x: HFSet, y: HFSet) -> Ordering {
    if x == y {
        return Ordering::Equal;
    }
    if let (Some(a), Some(b)) = (x.as_numeral(), y.as_numeral()) {
        return a.cmp(&b);
    }
    let mut xs = x.members();
    let mut ys = y.members();
    loop {
        match (xs.next(), ys.next()) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some(a), Some(b)) => match set_compare(a, b) {
                Ordering::Equal => continue,
                other => return other,
            },
        }
    }
}

impl PartialEq for HFSet {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.0, other.0)
    }
}

impl Eq for HFSet {}

impl Hash for HFSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.id.hash(state);
    }
}

impl PartialOrd for HFSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HFSet {
    fn cmp(&self, other: &Self) -> Ordering {
        set_compare(*self, *other)
    }
}

impl Default for HFSet {
    fn default() -> Self {
        HFSet::empty()
    }
}

impl fmt::Debug for HFSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_numeral() {
            Some(n) if n > 4 => write!(f, "#{n}"),
            _ => text::write_set(*self, f),
        }
    }
}

impl fmt::Display for HFSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        text::write_set(*self, f)
    }
}

/// Outcome of [`check_canonical`] when an invariant is broken.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CanonViolation {
    Unsorted(HFSet),
    SelfMember(HFSet),
    Cycle(HFSet),
    UnfoldedNumeral(HFSet),
}

/// Walks the DAG under `x` and checks the canonical-form invariants: sorted
/// and deduplicated members, no set containing itself, no membership cycle,
/// and every numeral-shaped member list stored on the numeral chain.
pub fn check_canonical(x: HFSet) -> Result<(), CanonViolation> {
    use std::collections::HashMap;

    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        Open,
        Done,
    }

    fn walk(x: HFSet, marks: &mut HashMap<u64, Mark>) -> Result<(), CanonViolation> {
        match marks.get(&x.id()) {
            Some(Mark::Done) => return Ok(()),
            Some(Mark::Open) => return Err(CanonViolation::Cycle(x)),
            None => {}
        }
        marks.insert(x.id(), Mark::Open);
        if let Some(children) = x.flat() {
            if children
                .windows(2)
                .any(|w| set_compare(w[0], w[1]) != Ordering::Less)
            {
                return Err(CanonViolation::Unsorted(x));
            }
            if children
                .iter()
                .enumerate()
                .all(|(i, c)| c.as_numeral() == Some(i))
            {
                return Err(CanonViolation::UnfoldedNumeral(x));
            }
            if children.contains(&x) {
                return Err(CanonViolation::SelfMember(x));
            }
            for &c in children {
                walk(c, marks)?;
            }
        } else if let Some(p) = x.last() {
            // numeral members are reached through the predecessor chain
            walk(p, marks)?;
        }
        marks.insert(x.id(), Mark::Done);
        Ok(())
    }

    walk(x, &mut HashMap::new())
}
