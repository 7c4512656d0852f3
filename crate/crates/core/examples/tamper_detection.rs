//! Per-triplet failure rates for each adversary, then how often a whole
//! batch is rejected as the number of sacrificed triplets grows.

use cqt::cli::{cmd_verify, VerifyConfig};
use cqt::sdc::{run_session, AdversaryModel, AttackTarget, MessageBits, SessionConfig, VerificationPolicy};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> cqt::Result<()> {
    let b = AttackTarget::QubitB;
    let adversaries = [
        ("none", AdversaryModel::NONE),
        ("intercept-resend Z", AdversaryModel::intercept_resend_z(b)),
        ("intercept-resend X", AdversaryModel::intercept_resend_x(b)),
        ("depolarize 0.2", AdversaryModel::depolarize(0.2, b)?),
        ("depolarize 1.0", AdversaryModel::depolarize(1.0, b)?),
    ];
    println!("{:<20} {:>8} {:>8}", "adversary", "Z fail", "X fail");
    for (name, adversary) in adversaries {
        let cfg = VerifyConfig { trials: 20_000, seed: 11, adversary, policy: VerificationPolicy::default() };
        let s = cmd_verify(&cfg)?.summary;
        println!("{name:<20} {:>8.4} {:>8.4}", s.z_rate.unwrap_or(0.0), s.x_rate.unwrap_or(0.0));
    }

    println!("\nintercept-resend Z, rejection rate over 500 sessions");
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for min_sacrifice in [1, 2, 5, 10, 20] {
        let policy = VerificationPolicy { sacrifice_fraction: 0.01, min_sacrifice, ..VerificationPolicy::default() };
        let mut rejected = 0;
        for seed in 0..500 {
            let mut cfg = SessionConfig::new(MessageBits::random(16, &mut rng)?, true);
            cfg.policy = policy;
            cfg.adversary = AdversaryModel::intercept_resend_z(b);
            if run_session(&cfg, seed)?.aborted() {
                rejected += 1;
            }
        }
        let expected = 1.0 - 0.75f64.powi(min_sacrifice as i32);
        println!("  {min_sacrifice:>2} sacrificed: {:.3} (1 - (3/4)^n = {expected:.3})", rejected as f64 / 500.0);
    }
    Ok(())
}
