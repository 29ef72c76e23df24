use hfset_core::funcs::HostMap;
use hfset_core::kernel::{kpair, HFSet};
use hfset_core::obligations::*;
use proptest::prelude::*;

fn lit(k: usize) -> RelTerm {
    RelTerm::Lit(HFSet::numeral(k))
}

fn rel_lit(pairs: &[(usize, usize)]) -> RelTerm {
    RelTerm::Lit(HFSet::from_elements(
        pairs
            .iter()
            .map(|&(x, y)| kpair(HFSet::numeral(x), HFSet::numeral(y))),
    ))
}

/// Carrier sizes range over 0..=3.
fn arb_pairs(a: usize, b: usize) -> impl Strategy<Value = Vec<(usize, usize)>> {
    prop::collection::vec((0..a.max(1), 0..b.max(1)), 0..5)
        .prop_map(move |v| v.into_iter().filter(|&(x, y)| x < a && y < b).collect())
}

fn body(k: u8) -> HostMap {
    match k % 3 {
        0 => HostMap::new("x", |x| x),
        1 => HostMap::new("0", |_| HFSet::empty()),
        _ => HostMap::new("succ x", |x| x.succ()),
    }
}

/// A term whose intended type is `a -> b`; leaves may still fail to be
/// relations of that type, which is what the engine has to notice.
fn arb_typed(a: usize, b: usize, depth: u32) -> BoxedStrategy<RelTerm> {
    let leaf = prop_oneof![
        arb_pairs(a, b).prop_map(|p| rel_lit(&p)),
        any::<u8>().prop_map(move |k| RelTerm::lambda(lit(a), lit(b), body(k))),
    ];
    let leaf = if a == b {
        prop_oneof![leaf, Just(RelTerm::id(lit(a)))].boxed()
    } else {
        leaf.boxed()
    };
    if depth == 0 {
        return leaf;
    }
    prop_oneof![
        2 => leaf,
        1 => arb_typed(b, a, depth - 1).prop_map(RelTerm::conv),
        1 => (0usize..=3).prop_flat_map(move |c| {
            (arb_typed(c, b, depth - 1), arb_typed(a, c, depth - 1))
                .prop_map(|(g, f)| RelTerm::comp(g, f))
        }),
    ]
    .boxed()
}

fn arb_goal() -> impl Strategy<Value = Judgment> {
    (0usize..=3, 0usize..=3, 0u8..3).prop_flat_map(|(a, b, k)| {
        let kind = [Kind::Rel, Kind::PFunc, Kind::Func][k as usize];
        arb_typed(a, b, 3).prop_map(move |t| Judgment::new(kind, t, lit(a), lit(b)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn discharge_is_sound_and_complete_on_ground_goals(goal in arb_goal()) {
        let env = Env::new();
        let rules = builtin_rules();
        let truth = goal.decide(&env).unwrap();
        match discharge(&goal, &[], &rules, DEFAULT_DEPTH_LIMIT) {
            Ok(trace) => {
                prop_assert!(truth, "proved a false goal: {}", goal);
                prop_assert!(replay(&trace, &[], &rules, &env));
                prop_assert!(replay_ground(&trace, &env));
            }
            Err(fail) => {
                prop_assert!(!truth, "missed a true goal: {}", goal);
                prop_assert!(!fail.frontier.is_empty());
            }
        }
    }

    #[test]
    fn simp_preserves_denotation(t in (0usize..=3, 0usize..=3).prop_flat_map(|(a, b)| arb_typed(a, b, 4))) {
        let env = Env::new();
        let s = simp_normalize(&t);
        prop_assert_eq!(eval_term(&s, &env).unwrap(), eval_term(&t, &env).unwrap());
        prop_assert_eq!(simp_normalize(&s), s);
    }
}

#[test]
fn schematic_goals_from_hypotheses() {
    let v = RelTerm::var;
    let rules = builtin_rules();
    let hyps = [
        Judgment::new(Kind::Func, v("g"), v("B"), v("C")),
        Judgment::new(Kind::Func, v("f"), v("A"), v("B")),
    ];
    let goal = Judgment::new(
        Kind::Rel,
        RelTerm::conv(RelTerm::comp(v("g"), v("f"))),
        v("C"),
        v("A"),
    );
    let tr = discharge(&goal, &hyps, &rules, DEFAULT_DEPTH_LIMIT).unwrap();
    assert_eq!(tr.label(), "subset_prod_inv");
    assert!(replay(&tr, &hyps, &rules, &Env::new()));

    let missing = Judgment::new(Kind::Func, RelTerm::comp(v("f"), v("g")), v("B"), v("B"));
    let fail = discharge(&missing, &hyps, &rules, DEFAULT_DEPTH_LIMIT).unwrap_err();
    assert!(!fail.frontier.is_empty());
}
