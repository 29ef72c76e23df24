use hfset_core::bridges::*;
use hfset_core::canon::*;
use num_rational::Rational64;
use proptest::prelude::*;

fn nat(k: usize) -> ZFNat {
    nat_encode(k).unwrap()
}

fn int(k: i64) -> ZFInt {
    int_encode(k).unwrap()
}

fn rat(p: i64, q: i64) -> ZFRat {
    rat_mk(int(p), int(q)).unwrap()
}

fn rat_oracle(x: ZFRat) -> Rational64 {
    Rational64::new_raw(int_decode(x.num()).unwrap(), int_decode(x.den()).unwrap())
}

proptest! {
    #[test]
    fn nat_matches_machine(a in 0usize..64, b in 0usize..64) {
        prop_assert_eq!(nat_decode(nat_add(nat(a), nat(b)).value()), Ok(a + b));
        prop_assert_eq!(nat_decode(nat_mul(nat(a), nat(b)).value()), Ok(a * b));
        prop_assert_eq!(nat_decode(nat_sub(nat(a), nat(b)).value()), Ok(a.saturating_sub(b)));
        prop_assert_eq!(nat_lt(nat(a), nat(b)), a < b);
        prop_assert_eq!(nat_le(nat(a), nat(b)), a <= b);
        if b > 0 {
            let (q, r) = nat_divmod(nat(a), nat(b)).unwrap();
            prop_assert_eq!((nat_decode(q.value()), nat_decode(r.value())), (Ok(a / b), Ok(a % b)));
        }
    }

    #[test]
    fn nat_semiring(a in 0usize..10, b in 0usize..10, c in 0usize..10) {
        let (x, y, z) = (nat(a), nat(b), nat(c));
        prop_assert_eq!(nat_add(x, nat_add(y, z)), nat_add(nat_add(x, y), z));
        prop_assert_eq!(nat_add(x, y), nat_add(y, x));
        prop_assert_eq!(nat_mul(x, nat_mul(y, z)), nat_mul(nat_mul(x, y), z));
        prop_assert_eq!(nat_mul(x, y), nat_mul(y, x));
        prop_assert_eq!(nat_mul(x, nat_add(y, z)), nat_add(nat_mul(x, y), nat_mul(x, z)));
        prop_assert_eq!(nat_mul(x, nat_one()), x);
        prop_assert_eq!(nat_add(x, nat_zero()), x);
    }

    #[test]
    fn int_ring(a in -30i64..=30, b in -30i64..=30, c in -30i64..=30) {
        let (x, y, z) = (int(a), int(b), int(c));
        prop_assert_eq!(int_decode(int_add(x, y)), Ok(a + b));
        prop_assert_eq!(int_decode(int_sub(x, y)), Ok(a - b));
        prop_assert_eq!(int_decode(int_mul(x, y)), Ok(a * b));
        prop_assert_eq!(int_decode(int_neg(x)), Ok(-a));
        prop_assert_eq!(int_lt(x, y), a < b);
        prop_assert_eq!(int_mul(x, int_add(y, z)), int_add(int_mul(x, y), int_mul(x, z)));
        prop_assert_eq!(int_add(x, int_neg(x)), int_zero());
    }

    #[test]
    fn int_respects_the_quotient(a in 0usize..=10, b in 0usize..=10, c in 0usize..=10, d in 0usize..=10) {
        // (a, b) ~ (c, d) iff a + d = b + c
        let same = a + d == b + c;
        prop_assert_eq!(int_mk(nat(a), nat(b)) == int_mk(nat(c), nat(d)), same);
    }

    #[test]
    fn rat_field(
        (p1, q1) in (-20i64..=20, 1i64..=20),
        (p2, q2) in (-20i64..=20, 1i64..=20),
        (p3, q3) in (-20i64..=20, 1i64..=20),
    ) {
        let (x, y, z) = (rat(p1, q1), rat(p2, q2), rat(p3, q3));
        let (ox, oy) = (Rational64::new(p1, q1), Rational64::new(p2, q2));
        prop_assert_eq!(rat_oracle(x), ox);
        prop_assert_eq!(rat_oracle(rat_add(x, y)), ox + oy);
        prop_assert_eq!(rat_oracle(rat_sub(x, y)), ox - oy);
        prop_assert_eq!(rat_oracle(rat_mul(x, y)), ox * oy);
        prop_assert_eq!(rat_mul(x, rat_add(y, z)), rat_add(rat_mul(x, y), rat_mul(x, z)));
        if p2 != 0 {
            prop_assert_eq!(rat_oracle(rat_div(x, y).unwrap()), ox / oy);
            prop_assert_eq!(rat_mul(y, rat_inv(y).unwrap()), rat_one());
        } else {
            prop_assert!(rat_inv(y).is_err());
        }
    }

    #[test]
    fn bridges_round_trip(n in 0usize..=300, k in -300i64..=300) {
        prop_assert_eq!(nat_decode(nat_encode(n).unwrap().value()), Ok(n));
        prop_assert_eq!(int_decode(int_encode(k).unwrap()), Ok(k));
        prop_assert_eq!(int_decode_set(int_encode(k).unwrap().to_set()), Ok(k));
    }
}

#[test]
fn booleans_exhaustive() {
    let both = [false, true];
    for p in both {
        let zp = bool_encode(p);
        assert_eq!(bool_decode(bnot(bnot(zp))), p);
        for q in both {
            let zq = bool_encode(q);
            assert_eq!(bool_decode(band(zp, zq)), p && q);
            assert_eq!(bool_decode(bor(zp, zq)), p || q);
            assert_eq!(bool_decode(bimp(zp, zq)), !p || q);
            assert_eq!(band(zp, zq), band(zq, zp));
            assert_eq!(bnot(band(zp, zq)), bor(bnot(zp), bnot(zq)));
            for r in both {
                let zr = bool_encode(r);
                assert_eq!(band(zp, bor(zq, zr)), bor(band(zp, zq), band(zp, zr)));
                assert_eq!(bor(zp, band(zq, zr)), band(bor(zp, zq), bor(zp, zr)));
            }
        }
    }
}
