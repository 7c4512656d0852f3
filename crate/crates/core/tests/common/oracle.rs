//! Brute-force reference computations on raw amplitude arrays. Nothing here
//! calls into `cqt`.

use num_complex::Complex64 as C;
use std::f64::consts::FRAC_1_SQRT_2;

pub type Mat = Vec<Vec<C>>;

fn c(re: f64) -> C {
    C::new(re, 0.0)
}

pub fn zeros(n: usize) -> Mat {
    vec![vec![C::new(0.0, 0.0); n]; n]
}

pub fn eye(n: usize) -> Mat {
    let mut m = zeros(n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = c(1.0);
    }
    m
}

pub fn mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut out = zeros(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

pub fn dagger(a: &Mat) -> Mat {
    let n = a.len();
    let mut out = zeros(n);
    for i in 0..n {
        for j in 0..n {
            out[i][j] = a[j][i].conj();
        }
    }
    out
}

pub fn kron(a: &Mat, b: &Mat) -> Mat {
    let (n, m) = (a.len(), b.len());
    let mut out = zeros(n * m);
    for i in 0..n {
        for j in 0..n {
            for k in 0..m {
                for l in 0..m {
                    out[i * m + k][j * m + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

fn add_scaled(acc: &mut Mat, w: f64, m: &Mat) {
    for (ra, rm) in acc.iter_mut().zip(m) {
        for (x, y) in ra.iter_mut().zip(rm) {
            *x += y * w;
        }
    }
}

pub fn x() -> Mat {
    vec![vec![c(0.0), c(1.0)], vec![c(1.0), c(0.0)]]
}

pub fn y() -> Mat {
    vec![vec![c(0.0), C::new(0.0, -1.0)], vec![C::new(0.0, 1.0), c(0.0)]]
}

pub fn z() -> Mat {
    vec![vec![c(1.0), c(0.0)], vec![c(0.0), c(-1.0)]]
}

pub fn h() -> Mat {
    let s = FRAC_1_SQRT_2;
    vec![vec![c(s), c(s)], vec![c(s), c(-s)]]
}

fn proj(bit: usize) -> Mat {
    let mut m = zeros(2);
    m[bit][bit] = c(1.0);
    m
}

/// `op` on qubit `slot` of `n`, identity elsewhere; slot 0 is the leftmost factor.
pub fn on_qubit(op: &Mat, slot: usize, n: usize) -> Mat {
    let id = eye(2);
    (0..n).fold(eye(1), |acc, q| kron(&acc, if q == slot { op } else { &id }))
}

pub fn outer(v: &[C]) -> Mat {
    v.iter().map(|a| v.iter().map(|b| a * b.conj()).collect()).collect()
}

fn conj_by(u: &Mat, rho: &Mat) -> Mat {
    mul(&mul(u, rho), &dagger(u))
}

/// `½(|000⟩+|110⟩+|011⟩+|101⟩)`.
pub fn xi() -> Vec<C> {
    let mut v = vec![c(0.0); 8];
    for i in [0b000, 0b110, 0b011, 0b101] {
        v[i] = c(0.5);
    }
    v
}

/// `(|+++⟩ + |−−−⟩)/√2`, built from the definition of `|±⟩`.
pub fn ghz_hadamard() -> Vec<C> {
    let amp = 1.0 / (2.0 * 2f64.sqrt());
    (0..8usize)
        .map(|i| {
            let minus = if i.count_ones() % 2 == 0 { amp } else { -amp };
            c((amp + minus) * FRAC_1_SQRT_2)
        })
        .collect()
}

#[derive(Debug, Clone, Copy)]
pub enum Attack {
    None,
    InterceptZ { slot: usize },
    InterceptX { slot: usize },
    Depolarize { p: f64, slot: usize },
}

/// Density matrix of one channel triplet after the attack.
pub fn attacked_channel(attack: Attack) -> Mat {
    let rho = outer(&xi());
    match attack {
        Attack::None => rho,
        Attack::InterceptZ { slot } => {
            let mut out = zeros(8);
            for bit in 0..2 {
                add_scaled(&mut out, 1.0, &conj_by(&on_qubit(&proj(bit), slot, 3), &rho));
            }
            out
        }
        Attack::InterceptX { slot } => {
            let mut out = zeros(8);
            for bit in 0..2 {
                let p = mul(&mul(&h(), &proj(bit)), &h());
                add_scaled(&mut out, 1.0, &conj_by(&on_qubit(&p, slot, 3), &rho));
            }
            out
        }
        Attack::Depolarize { p, slot } => {
            let mut out = zeros(8);
            add_scaled(&mut out, 1.0 - p, &rho);
            for pauli in [eye(2), x(), y(), z()] {
                add_scaled(&mut out, p / 4.0, &conj_by(&on_qubit(&pauli, slot, 3), &rho));
            }
            out
        }
    }
}

/// Probability that measuring all three qubits in `{|0⟩, |1⟩}` gives odd parity.
pub fn z_test_failure(rho: &Mat) -> f64 {
    (0..8usize).filter(|i| i.count_ones() % 2 == 1).map(|i| rho[i][i].re).sum()
}

/// Probability that measuring all three qubits in `{|+⟩, |−⟩}` gives a mixed result.
pub fn x_test_failure(rho: &Mat) -> f64 {
    let hhh = kron(&kron(&h(), &h()), &h());
    let r = conj_by(&hhh, rho);
    (1..7).map(|i| r[i][i].re).sum()
}

/// `(a|0⟩ + b|1⟩)_M ⊗ |ξ⟩_ABC`, 16 amplitudes with `M` leftmost.
pub fn joint(a: C, b: C) -> Vec<C> {
    let xi = xi();
    let mut v = vec![c(0.0); 16];
    for (k, amp) in xi.iter().enumerate() {
        v[k] = a * amp;
        v[8 + k] = b * amp;
    }
    v
}

/// Bell vector over `|m a⟩` in the order `Φ⁺, Ψ⁺, Φ⁻, Ψ⁻`.
pub fn bell(index: usize) -> [C; 4] {
    let s = FRAC_1_SQRT_2;
    let o = c(0.0);
    match index {
        0 => [c(s), o, o, c(s)],
        1 => [o, c(s), c(s), o],
        2 => [c(s), o, o, c(-s)],
        3 => [o, c(s), c(-s), o],
        _ => panic!("bell index {index}"),
    }
}

/// Bob's unnormalized amplitudes after Charlie reads `charlie` on `C` and
/// Alice gets Bell outcome `bell` on `M, A`. The squared norm is the branch
/// probability.
pub fn bob_branch(a: C, b: C, charlie: usize, bell_index: usize) -> [C; 2] {
    let v = joint(a, b);
    let phi = bell(bell_index);
    let mut bob = [c(0.0); 2];
    for (slot, out) in bob.iter_mut().enumerate() {
        for (ma, p) in phi.iter().enumerate() {
            // index bits: m a b c
            let idx = (ma << 2) | (slot << 1) | charlie;
            *out += p.conj() * v[idx];
        }
    }
    bob
}

pub fn apply2(m: &Mat, v: [C; 2]) -> [C; 2] {
    [m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]]
}

pub fn norm_sqr2(v: [C; 2]) -> f64 {
    v[0].norm_sqr() + v[1].norm_sqr()
}

/// `Σ |bob⟩⟨bob|` over all eight branches, uncorrected.
pub fn uncorrected_ensemble(a: C, b: C) -> Mat {
    let mut rho = zeros(2);
    for charlie in 0..2 {
        for bell_index in 0..4 {
            add_scaled(&mut rho, 1.0, &outer(&bob_branch(a, b, charlie, bell_index)));
        }
    }
    rho
}

pub fn max_abs_diff(a: &Mat, b: &Mat) -> f64 {
    a.iter()
        .flatten()
        .zip(b.iter().flatten())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}
