//! Cross-module checks: constructed sign witnesses really carry the
//! claimed multiplicity, at weights where characters are cheap.

use kronfold::coefficients::verify_sign_theorem;
use kronfold::selfconj::{construct_self_conjugate, X_A, X_S};
use kronfold::{Nat, Sign};

#[test]
fn constructed_witnesses_carry_multiplicity_one() {
    for a in 1..=16u64 {
        for sign in [Sign::Plus, Sign::Minus] {
            let exceptional = (sign == Sign::Plus && X_S.contains(&a))
                || (sign == Sign::Minus && X_A.contains(&a));
            if exceptional {
                continue;
            }
            let witness = construct_self_conjugate(a, sign).unwrap().partition;
            let report = verify_sign_theorem(&witness).unwrap();
            assert!(report.consistent, "witness {witness} for a = {a}");
            match sign {
                Sign::Plus => assert_eq!(report.sk, Nat::from(1u32), "sk at {witness}"),
                Sign::Minus => assert_eq!(report.ak, Nat::from(1u32), "ak at {witness}"),
            }
        }
    }
}
