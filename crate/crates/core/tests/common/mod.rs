#![allow(dead_code)]

pub mod oracle;
pub mod props;

use std::f64::consts::PI;

use num_complex::Complex64;

/// Bloch-sphere grid: both poles, five polar angles × eight phases, and a
/// few hand-picked states with awkward amplitudes.
pub fn bloch_grid() -> Vec<(Complex64, Complex64)> {
    let mut out = vec![
        (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)),
        (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)),
    ];
    for k in 1..=5 {
        let theta = PI * k as f64 / 6.0;
        for j in 0..8 {
            let phi = 2.0 * PI * j as f64 / 8.0;
            out.push((Complex64::new((theta / 2.0).cos(), 0.0), Complex64::from_polar((theta / 2.0).sin(), phi)));
        }
    }
    out.push((Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8)));
    out.push((Complex64::new(0.0, 0.6), Complex64::new(-0.8, 0.0)));
    let s = 0.5;
    out.push((Complex64::new(s, s), Complex64::new(s, -s)));
    out
}

pub fn qubit(a: Complex64, b: Complex64) -> cqt::statevec::PureState {
    cqt::statevec::PureState::qubit(a, b).expect("grid states are normalized")
}
