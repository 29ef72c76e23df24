//! Embeddings, isomorphisms, Cantor–Schröder–Bernstein and the currying
//! isomorphism `C^(A×B) ≅ (C^B)^A`.

use crate::funcs::{fapply_unchecked, func_ext, funs, lambda, FuncExt};
use crate::kernel::{as_pair, bin_union, diff, kpair, prod, HFSet, Limits};
use crate::relcalc::{converse, fcompose, identity, image, is_func, is_injective, require_func};
use crate::{Error, Result, Side};

/// A pair of mutually inverse total functions between `src` and `dst`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsoWitness {
    pub forward: HFSet,
    pub backward: HFSet,
    pub src: HFSet,
    pub dst: HFSet,
}

impl IsoWitness {
    /// Replays every invariant from scratch.
    pub fn validate(&self) -> Result<()> {
        two_sided_inverse(self.forward, self.backward, self.src, self.dst).map(|_| ())
    }

    /// The same isomorphism read from `dst` to `src`.
    pub fn inverse(self) -> IsoWitness {
        IsoWitness {
            forward: self.backward,
            backward: self.forward,
            src: self.dst,
            dst: self.src,
        }
    }

    /// `A ≅ B` and `B ≅ C` give `A ≅ C`.
    pub fn then(self, next: IsoWitness) -> Result<IsoWitness> {
        let (a, b, c) = (self.src, self.dst, next.dst);
        Ok(IsoWitness {
            forward: fcompose(next.forward, self.forward, a, b, c)?,
            backward: fcompose(self.backward, next.backward, c, b, a)?,
            src: a,
            dst: c,
        })
    }
}

/// Injective total function from `A` to `B`.
pub fn check_embedding(f: HFSet, a: HFSet, b: HFSet) -> bool {
    is_func(f, a, b) && is_injective(f, a, b).unwrap_or(false)
}

/// Packages `f` and `g` once `g ∘ f = 𝟙_A` and `f ∘ g = 𝟙_B`.
pub fn two_sided_inverse(f: HFSet, g: HFSet, a: HFSet, b: HFSet) -> Result<IsoWitness> {
    require_func(f, a, b, Side::Left)?;
    require_func(g, b, a, Side::Right)?;
    for (side, comp, carrier) in [
        (Side::Left, fcompose(g, f, a, b, a)?, a),
        (Side::Right, fcompose(f, g, b, a, b)?, b),
    ] {
        if let FuncExt::Differ(point) = func_ext(comp, identity(carrier), carrier, carrier)? {
            return Err(Error::NotInverse { side, point });
        }
    }
    Ok(IsoWitness {
        forward: f,
        backward: g,
        src: a,
        dst: b,
    })
}

/// Result of the Cantor–Schröder–Bernstein construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Csb {
    pub witness: IsoWitness,
    /// The union of `X₀ = A ∖ g[B]`, `Xₙ₊₁ = g[f[Xₙ]]`, on which the
    /// bijection agrees with `f`.
    pub stable: HFSet,
}

/// Bijection `A → B` from embeddings `f : A ↪ B` and `g : B ↪ A`.
pub fn csb(f: HFSet, g: HFSet, a: HFSet, b: HFSet) -> Result<Csb> {
    if !check_embedding(f, a, b) {
        return Err(Error::NotAnEmbedding(Side::Left));
    }
    if !check_embedding(g, b, a) {
        return Err(Error::NotAnEmbedding(Side::Right));
    }
    let mut layer = diff(a, image(g, b, b, a)?);
    let mut stable = layer;
    while !layer.is_empty() {
        let next = image(g, image(f, layer, a, b)?, b, a)?;
        layer = diff(next, stable);
        stable = bin_union(stable, layer);
    }
    let g_inv = converse(g, b, a)?;
    let h = lambda(a, b, |x| {
        let via = if crate::kernel::mem(x, stable) {
            f
        } else {
            g_inv
        };
        fapply_unchecked(via, x).expect("outside the stable set x lies in g[B]")
    });
    let witness = two_sided_inverse(h, converse(h, a, b)?, a, b)?;
    Ok(Csb { witness, stable })
}

/// The three exponentials involved in currying.
struct CurryCarriers {
    pairs: HFSet,
    inner: HFSet,
    /// `C^(A×B)`
    uncurried: HFSet,
    /// `(C^B)^A`
    curried: HFSet,
}

fn curry_carriers(a: HFSet, b: HFSet, c: HFSet, limits: &Limits) -> Result<CurryCarriers> {
    let pairs = prod(a, b, limits)?;
    let inner = funs(b, c, limits)?;
    Ok(CurryCarriers {
        pairs,
        inner,
        uncurried: funs(pairs, c, limits)?,
        curried: funs(a, inner, limits)?,
    })
}

fn app(f: HFSet, x: HFSet) -> HFSet {
    fapply_unchecked(f, x).expect("total function")
}

fn build_curry(a: HFSet, b: HFSet, c: HFSet, cs: &CurryCarriers) -> HFSet {
    lambda(cs.uncurried, cs.curried, |f| {
        lambda(a, cs.inner, |x| lambda(b, c, |y| app(f, kpair(x, y))))
    })
}

fn build_uncurry(c: HFSet, cs: &CurryCarriers) -> HFSet {
    lambda(cs.curried, cs.uncurried, |f| {
        lambda(cs.pairs, c, |p| {
            let (x, y) = as_pair(p).expect("member of a product");
            app(app(f, x), y)
        })
    })
}

/// `curry : C^(A×B) → (C^B)^A`, `f ↦ λ a. λ b. f (a, b)`.
pub fn curry(a: HFSet, b: HFSet, c: HFSet, limits: &Limits) -> Result<HFSet> {
    let cs = curry_carriers(a, b, c, limits)?;
    Ok(build_curry(a, b, c, &cs))
}

/// `uncurry : (C^B)^A → C^(A×B)`, `f ↦ λ p. f (π₁ p) (π₂ p)`.
pub fn uncurry(a: HFSet, b: HFSet, c: HFSet, limits: &Limits) -> Result<HFSet> {
    let cs = curry_carriers(a, b, c, limits)?;
    Ok(build_uncurry(c, &cs))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurryReport {
    /// `uncurry ∘ curry = 𝟙`
    pub left_inv: bool,
    /// `curry ∘ uncurry = 𝟙`
    pub right_inv: bool,
    pub witness: Result<IsoWitness>,
    pub curry: HFSet,
    pub uncurry: HFSet,
    pub uncurried: HFSet,
    pub curried: HFSet,
}

/// Checks both composite identities and packages the isomorphism.
pub fn verify_curry_iso(a: HFSet, b: HFSet, c: HFSet, limits: &Limits) -> Result<CurryReport> {
    let cs = curry_carriers(a, b, c, limits)?;
    let cur = build_curry(a, b, c, &cs);
    let unc = build_uncurry(c, &cs);
    let (dom, cod) = (cs.uncurried, cs.curried);
    let is_identity = |comp: Result<HFSet>, carrier: HFSet| {
        comp.and_then(|h| func_ext(h, identity(carrier), carrier, carrier))
            .map(FuncExt::is_equal)
            .unwrap_or(false)
    };
    let left_inv = is_identity(fcompose(unc, cur, dom, cod, dom), dom);
    let right_inv = is_identity(fcompose(cur, unc, cod, dom, cod), cod);
    Ok(CurryReport {
        left_inv,
        right_inv,
        witness: two_sided_inverse(cur, unc, dom, cod),
        curry: cur,
        uncurry: unc,
        uncurried: dom,
        curried: cod,
    })
}

/// Pairs the members of `A` and `B` in canonical order when `|A| = |B|`.
pub fn find_bijection(a: HFSet, b: HFSet) -> Option<IsoWitness> {
    if a.len() != b.len() {
        return None;
    }
    let forward = HFSet::from_elements(a.members().zip(b.members()).map(|(x, y)| kpair(x, y)));
    let backward = HFSet::from_elements(a.members().zip(b.members()).map(|(x, y)| kpair(y, x)));
    Some(IsoWitness {
        forward,
        backward,
        src: a,
        dst: b,
    })
}
