mod common;

use common::lemmas::{edge_move_trial, edge_release_trial, two_switch_trial};
use hyperspec::{degree_sequence, validate_supertree};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-10;

#[test]
fn edge_moving_increases_rho() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..150 {
        let t = edge_move_trial(&mut rng);
        assert_eq!(t.after.n(), t.before.n());
        assert!(t.gain() > 10.0 * TOL, "{t:?}");
    }
}

#[test]
fn edge_releasing_increases_rho() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..150 {
        let t = edge_release_trial(&mut rng);
        assert_eq!(t.after.n(), t.before.n());
        assert_eq!(t.after.m(), t.before.m());
        assert!(validate_supertree(&t.after).is_ok());
        assert!(t.gain() > 10.0 * TOL, "{t:?}");
    }
}

#[test]
fn two_switch_does_not_decrease_rho() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let mut strict = 0;
    for _ in 0..150 {
        let t = two_switch_trial(&mut rng);
        assert_eq!(t.after.n(), t.before.n());
        assert_eq!(degree_sequence(&t.after), degree_sequence(&t.before));
        assert!(t.gain() >= -10.0 * TOL, "{t:?}");
        // the old Perron vector already gains exactly the predicted amount
        assert!(
            (t.rayleigh_after - t.rho_before - t.predicted_gain).abs() < 1e-9,
            "{t:?}"
        );
        if t.lead > 1e-6 {
            strict += 1;
            assert!(t.gain() > 0.0, "{t:?}");
        }
    }
    assert!(strict > 0);
}
