use hfset_core::funcs::{fapply, funs};
use hfset_core::iso::*;
use hfset_core::kernel::{kpair, mem, prod, HFSet, Limits};
use hfset_core::relcalc::{is_bijective, is_func};
use hfset_core::{Error, Side};
use proptest::prelude::*;

fn n(k: usize) -> HFSet {
    HFSet::numeral(k)
}

/// The graph of `i -> targets[i]` on numerals.
fn graph(targets: &[usize]) -> HFSet {
    HFSet::from_elements(targets.iter().enumerate().map(|(i, &j)| kpair(n(i), n(j))))
}

fn arb_injection(size: usize, into: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..into).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(move |v| v[..size].to_vec())
}

proptest! {
    #[test]
    fn csb_builds_a_bijection(
        (size, f, g) in (1usize..=10).prop_flat_map(|k| {
            (Just(k), arb_injection(k, k), arb_injection(k, k))
        })
    ) {
        let a = n(size);
        let (hf, hg) = (graph(&f), graph(&g));
        let out = csb(hf, hg, a, a).unwrap();
        prop_assert!(is_bijective(out.witness.forward, a, a).unwrap());
        prop_assert!(out.witness.validate().is_ok());
        for x in out.stable.members() {
            prop_assert_eq!(
                fapply(out.witness.forward, x, a, a),
                fapply(hf, x, a, a)
            );
        }
    }

    #[test]
    fn search_and_inverse(k in 0usize..=6) {
        let a = n(k);
        let b = HFSet::from_elements((0..k).map(|i| n(i + 10)));
        let w = find_bijection(a, b).unwrap();
        prop_assert!(w.validate().is_ok());
        prop_assert!(w.inverse().validate().is_ok());
        let round = w.then(w.inverse()).unwrap();
        prop_assert_eq!(round.forward, hfset_core::relcalc::identity(a));
        prop_assert!(find_bijection(a, n(k + 1)).is_none());
    }
}

#[test]
fn csb_rejects_non_embeddings() {
    let a = n(3);
    let constant = graph(&[0, 0, 0]);
    let id = graph(&[0, 1, 2]);
    assert_eq!(
        csb(constant, id, a, a).unwrap_err(),
        Error::NotAnEmbedding(Side::Left)
    );
    assert_eq!(
        csb(id, constant, a, a).unwrap_err(),
        Error::NotAnEmbedding(Side::Right)
    );
}

#[test]
fn two_sided_inverse_reports_the_failing_point() {
    let a = n(2);
    let swap = graph(&[1, 0]);
    let id = graph(&[0, 1]);
    assert!(two_sided_inverse(swap, swap, a, a).is_ok());
    match two_sided_inverse(swap, id, a, a) {
        Err(Error::NotInverse { side, point }) => {
            assert_eq!(side, Side::Left);
            assert!(mem(point, a));
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn currying_small_cubes() {
    let limits = Limits::default();
    for a in 0..=2 {
        for b in 0..=2 {
            for c in 0..=2 {
                let (ha, hb, hc) = (n(a), n(b), n(c));
                let r = verify_curry_iso(ha, hb, hc, &limits).unwrap();
                assert!(r.left_inv && r.right_inv, "{a} {b} {c}");
                assert!(r.witness.is_ok());
                let x = funs(prod(ha, hb, &limits).unwrap(), hc, &limits).unwrap();
                let y = funs(ha, funs(hb, hc, &limits).unwrap(), &limits).unwrap();
                assert!(is_func(r.curry, x, y));
                for f in x.members() {
                    let cf = fapply(r.curry, f, x, y).unwrap();
                    let bc = funs(hb, hc, &limits).unwrap();
                    for p in ha.members() {
                        let g = fapply(cf, p, ha, bc).unwrap();
                        for q in hb.members() {
                            let ab = prod(ha, hb, &limits).unwrap();
                            assert_eq!(fapply(g, q, hb, hc), fapply(f, kpair(p, q), ab, hc));
                        }
                    }
                }
            }
        }
    }
}
