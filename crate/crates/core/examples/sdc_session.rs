//! One controlled secure direct communication session, bit by bit.
//!
//!     cargo run --example sdc_session -- 1100101

use cqt::sdc::{run_session, MessageBits, SessionConfig};

fn main() -> cqt::Result<()> {
    let message: MessageBits = std::env::args().nth(1).as_deref().unwrap_or("101001").parse()?;
    let transcript = run_session(&SessionConfig::new(message.clone(), true), 7)?;

    let v = transcript.verification.expect("verification always runs");
    println!(
        "prepared {} triplets, sacrificed {} ({} Z, {} X), failures {}",
        transcript.triplets_prepared,
        v.tested,
        v.z_tested,
        v.x_tested,
        v.z_failures + v.x_failures
    );
    println!("bit  sent  C  Alice      fix  read");
    for e in &transcript.entries {
        let fix = e.correction.map_or("-".to_string(), |c| c.to_string());
        println!("{:>3}  {:>4}  {}  {:<9}  {:<3}  {}", e.index, e.encoded, e.charlie, format!("{:?}", e.bell), fix, e.decoded);
    }
    println!("sent    {message}");
    match &transcript.decoded {
        Some(d) => println!("decoded {d}"),
        None => println!("aborted: {}", transcript.aborted_reason.unwrap_or_default()),
    }
    Ok(())
}
