//! The product generating function F_m(x, y, z) = prod_{j=1}^{m-1} (x + z y^j)
//! and its exact closed form at roots of unity y = e^(2*pi*i*u/m):
//! F = (1 - (-z)^alpha)^beta / (1 + z) with alpha = m/(m,u), beta = (m,u).
//!
//! The closed coefficient rows are exact integers; complex evaluation is used
//! only to cross-check the DFT route to the congruence-filtered zero-free
//! counts, with pinned tolerances.

use crate::numtheory::{binomial, divisors, gcd_u64, ramanujan_sum, ExactCount, SignedExact};
use crate::partitions::q_nonzero;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use std::f64::consts::PI;

pub type Complex = num_complex::Complex64;

/// Direct product evaluation. F_0 = 0 and F_1 = 1 (empty product) by
/// convention.
pub fn f_direct(m: u64, x: Complex, y: Complex, z: Complex) -> Complex {
    match m {
        0 => Complex::zero(),
        1 => Complex::one(),
        _ => {
            let mut acc = Complex::one();
            let mut yj = Complex::one();
            for _ in 1..m {
                yj *= y;
                acc *= x + z * yj;
            }
            acc
        }
    }
}

/// The shape parameters of the closed form at the u-th root of unity:
/// alpha = m / gcd(m, u), beta = gcd(m, u), so alpha * beta = m.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlphaBeta {
    pub alpha: u64,
    pub beta: u64,
}

impl AlphaBeta {
    pub fn new(m: u64, u: u64) -> Self {
        assert!(m >= 1 && u >= 1, "AlphaBeta requires m, u >= 1");
        let beta = gcd_u64(m, u);
        AlphaBeta { alpha: m / beta, beta }
    }

    /// Normalize an arbitrary DFT index: u is reduced mod m, and the zero
    /// frequency is treated as u = m (so beta = m, alpha = 1).
    pub fn for_dft_index(m: u64, u: i64) -> Self {
        assert!(m >= 1);
        let r = (u as i128).rem_euclid(m as i128) as u64;
        if r == 0 {
            AlphaBeta::new(m, m)
        } else {
            AlphaBeta::new(m, r)
        }
    }
}

/// Signed integer polynomial, dense coefficients with trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPolynomial {
    coeffs: Vec<SignedExact>,
}

impl SignedPolynomial {
    pub fn new(mut coeffs: Vec<SignedExact>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        SignedPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[SignedExact] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation in complex arithmetic.
    pub fn eval_complex(&self, z: Complex) -> Complex {
        let mut acc = Complex::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * z + Complex::new(c.to_f64().expect("coefficient fits f64"), 0.0);
        }
        acc
    }

    /// Exact evaluation at integer points.
    pub fn eval_int(&self, x: i64) -> SignedExact {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

/// Exact coefficient row of F_m(1, e^(2*pi*i*u/m), z) as a polynomial in z:
/// coefficient j is (-1)^(floor(j/alpha) + j) * C(beta - 1, floor(j/alpha))
/// for 0 <= j <= m-1.
pub fn f_closed_coeffs(m: u64, u: u64) -> SignedPolynomial {
    let ab = AlphaBeta::new(m, u);
    let mut coeffs = Vec::with_capacity(m as usize);
    for j in 0..m {
        let q = j / ab.alpha;
        let mag = BigInt::from(binomial(ab.beta - 1, q as i64));
        let c = if (j + q) % 2 == 1 { -mag } else { mag };
        coeffs.push(c);
    }
    SignedPolynomial::new(coeffs)
}

/// Stable evaluation of the closed form near its removable singularity at
/// z = -1, via the factored grouping
/// (1 + (-z) + .. + (-z)^(alpha-1)) * (1 - (-z)^alpha)^(beta-1),
/// which expands to exactly the f_closed_coeffs polynomial.
fn f_factored_eval(ab: AlphaBeta, z: Complex) -> Complex {
    let nz = -z;
    let mut geo = Complex::one();
    let mut pw = Complex::one();
    for _ in 1..ab.alpha {
        pw *= nz;
        geo += pw;
    }
    let top = pw * nz; // (-z)^alpha
    geo * (Complex::one() - top).powu(ab.beta as u32 - 1)
}

/// Evaluate F_m(1, e^(2*pi*i*u/m), z) by the closed form
/// (1 - (-z)^alpha)^beta / (1 + z), switching to the factored polynomial
/// evaluation when z is within 1e-6 of -1.
pub fn f_closed_eval(m: u64, u: u64, z: Complex) -> Complex {
    assert!(m >= 1 && u >= 1, "f_closed_eval requires m, u >= 1");
    let ab = AlphaBeta::new(m, u);
    if (Complex::one() + z).norm() < 1e-6 {
        return f_factored_eval(ab, z);
    }
    let top = (-z).powu(ab.alpha as u32);
    (Complex::one() - top).powu(ab.beta as u32) / (Complex::one() + z)
}

/// Sum of the closed coefficient row over indices j = t (mod s),
/// 0 <= j < alpha*beta. This is the exact value of the DFT (at frequency
/// alpha*beta / alpha) of the congruence-filtered zero-free counts.
pub fn filtered_coeff_sum(s: u64, t: i64, alpha: u64, beta: u64) -> SignedExact {
    assert!(s >= 1 && alpha >= 1 && beta >= 1);
    let tr = t.rem_euclid(s as i64) as u64;
    let mut acc = BigInt::zero();
    let mut j = tr;
    while j < alpha * beta {
        let q = j / alpha;
        let mag = BigInt::from(binomial(beta - 1, q as i64));
        if (j + q) % 2 == 1 {
            acc -= mag;
        } else {
            acc += mag;
        }
        j += s;
    }
    acc
}

/// Congruence-filtered zero-free count, by direct summation:
/// sum of q_nonzero(m, u, n) over u = t (mod s), 0 <= u <= m.
pub fn q_nonzero_congruence_sum(m: u64, t: i64, s: u64, n: i64) -> ExactCount {
    assert!(m >= 1 && s >= 1);
    let mut acc = BigUint::zero();
    let mut u = t.rem_euclid(s as i64);
    while u <= m as i64 {
        acc += q_nonzero(m, u, n);
        u += s as i64;
    }
    acc
}

/// Forward DFT of the congruence-filtered zero-free counts:
/// sum over n of q_nonzero_congruence_sum(m, t, s, n) * e^(2*pi*i*u*n/m).
/// Built from the recursion-backed counts, so it is an independent check on
/// filtered_coeff_sum.
pub fn q_nonzero_dft(m: u64, t: i64, s: u64, u: i64) -> Complex {
    assert!(m >= 1 && s >= 1);
    let mut acc = Complex::zero();
    for n in 0..m {
        let q = q_nonzero_congruence_sum(m, t, s, n as i64)
            .to_f64()
            .expect("count fits f64");
        let phase = (u as i128 * n as i128).rem_euclid(m as i128) as f64;
        let angle = 2.0 * PI * phase / m as f64;
        acc += q * Complex::new(angle.cos(), angle.sin());
    }
    acc
}

/// Inverse route: rebuild the congruence-filtered zero-free count from the
/// exact coefficient sums,
/// (1/m) * sum over d | m of filtered_coeff_sum(s, t, d, m/d) * c_d(n).
pub fn q_nonzero_via_dft(m: u64, t: i64, s: u64, n: i64) -> ExactCount {
    assert!(m >= 1 && s >= 1);
    let mut acc = BigInt::zero();
    for d in divisors(m) {
        acc += filtered_coeff_sum(s, t, d, m / d) * BigInt::from(ramanujan_sum(d, n));
    }
    let (q, r) = acc.div_rem(&BigInt::from(m));
    assert!(r.is_zero(), "q_nonzero_via_dft: sum {acc} not divisible by m={m}");
    q.to_biguint()
        .unwrap_or_else(|| panic!("q_nonzero_via_dft: negative count {q}"))
}

/// Exact bivariate expansion of prod_{j=1}^{m-1} (1 + z y^j):
/// result[t][n] is the coefficient of z^t y^n, equal to the number of
/// partitions of n into t distinct parts from {1, .., m-1}.
pub fn bivariate_coeffs(m: u64) -> Vec<Vec<ExactCount>> {
    assert!(m >= 1);
    let zdeg = (m as usize).saturating_sub(1);
    let ydeg = (m * m.saturating_sub(1) / 2) as usize;
    let mut c = vec![vec![BigUint::zero(); ydeg + 1]; zdeg + 1];
    c[0][0] = BigUint::one();
    for j in 1..m as usize {
        for t in (1..=zdeg).rev() {
            for n in (j..=ydeg).rev() {
                let add = c[t - 1][n - j].clone();
                c[t][n] += add;
            }
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::q_recursive;

    fn bigi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn close(a: Complex, b: Complex, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn f_direct_conventions() {
        let z = Complex::new(0.3, -0.7);
        assert_eq!(f_direct(0, Complex::one(), z, z), Complex::zero());
        assert_eq!(f_direct(1, Complex::one(), z, z), Complex::one());
        // x = y = z = 1 gives 2^(m-1)
        let v = f_direct(7, Complex::one(), Complex::one(), Complex::one());
        assert!(close(v, Complex::new(64.0, 0.0), 1e-9));
    }

    #[test]
    fn alpha_beta_shapes() {
        let ab = AlphaBeta::new(6, 2);
        assert_eq!((ab.alpha, ab.beta), (3, 2));
        assert_eq!(ab.alpha * ab.beta, 6);
        let ab = AlphaBeta::for_dft_index(6, 0);
        assert_eq!((ab.alpha, ab.beta), (1, 6));
        let ab = AlphaBeta::for_dft_index(6, -1);
        assert_eq!((ab.alpha, ab.beta), (6, 1));
    }

    #[test]
    fn closed_coeff_rows() {
        let r = f_closed_coeffs(6, 2);
        assert_eq!(
            r.coeffs().to_vec(),
            vec![bigi(1), bigi(-1), bigi(1), bigi(1), bigi(-1), bigi(1)]
        );
        let r = f_closed_coeffs(5, 1);
        assert_eq!(
            r.coeffs().to_vec(),
            vec![bigi(1), bigi(-1), bigi(1), bigi(-1), bigi(1)]
        );
        // u = m collapses to the plain binomial row
        let r = f_closed_coeffs(5, 5);
        assert_eq!(
            r.coeffs().to_vec(),
            vec![bigi(1), bigi(4), bigi(6), bigi(4), bigi(1)]
        );
    }

    #[test]
    fn closed_rows_match_direct_product() {
        // expanding the product at y = e^(2 pi i u / m) must reproduce the row
        for m in 1u64..=12 {
            for u in 1u64..=m {
                let row = f_closed_coeffs(m, u);
                let y = Complex::from_polar(1.0, 2.0 * PI * u as f64 / m as f64);
                for probe in [
                    Complex::new(0.37, 0.21),
                    Complex::new(-0.4, 0.9),
                    Complex::new(1.1, -0.3),
                ] {
                    let direct = f_direct(m, Complex::one(), y, probe);
                    let via_row = row.eval_complex(probe);
                    assert!(
                        close(direct, via_row, 1e-6 * (1.0 + direct.norm())),
                        "m={m} u={u} probe={probe}: {direct} vs {via_row}"
                    );
                }
            }
        }
    }

    #[test]
    fn closed_eval_matches_direct() {
        for m in 1u64..=12 {
            for u in 1u64..=m {
                let y = Complex::from_polar(1.0, 2.0 * PI * u as f64 / m as f64);
                for probe in [
                    Complex::new(0.5, 0.5),
                    Complex::new(-0.2, -1.1),
                    Complex::new(0.9, 0.0),
                ] {
                    let a = f_closed_eval(m, u, probe);
                    let b = f_direct(m, Complex::one(), y, probe);
                    assert!(close(a, b, 1e-9 * (1.0 + b.norm())), "m={m} u={u}");
                }
            }
        }
    }

    #[test]
    fn closed_eval_at_removable_singularity() {
        // limit at z = -1 is alpha when beta = 1, else 0
        for m in 1u64..=20 {
            for u in 1u64..=m {
                let ab = AlphaBeta::new(m, u);
                let v = f_closed_eval(m, u, Complex::new(-1.0, 0.0));
                let want = if ab.beta == 1 { ab.alpha as f64 } else { 0.0 };
                assert!(close(v, Complex::new(want, 0.0), 1e-9), "m={m} u={u}");
                // and the perturbed direct product agrees
                let y = Complex::from_polar(1.0, 2.0 * PI * u as f64 / m as f64);
                let near = Complex::new(-1.0 + 1e-7, 0.0);
                let direct = f_direct(m, Complex::one(), y, near);
                assert!(
                    close(v, direct, 1e-4),
                    "perturbed mismatch m={m} u={u}: {v} vs {direct}"
                );
            }
        }
    }

    #[test]
    fn filtered_coeff_sums() {
        assert_eq!(filtered_coeff_sum(7, 0, 6, 1), bigi(1));
        assert_eq!(filtered_coeff_sum(2, 0, 1, 2), bigi(1));
        // s = 1 sums the whole row: 2^(beta-1) for odd alpha, 0 for even
        for m in 1u64..=12 {
            for u in 1u64..=m {
                let ab = AlphaBeta::new(m, u);
                let whole = filtered_coeff_sum(1, 0, ab.alpha, ab.beta);
                let want = if ab.alpha % 2 == 1 {
                    BigInt::from(2u32).pow(ab.beta as u32 - 1)
                } else {
                    BigInt::zero()
                };
                assert_eq!(whole, want, "m={m} u={u}");
            }
        }
    }

    #[test]
    fn dft_of_counts_matches_coeff_sums() {
        // spot values first
        let j = q_nonzero_dft(6, 2, 7, 1);
        assert!(close(j, Complex::new(1.0, 0.0), 1e-6));
        let ab = AlphaBeta::for_dft_index(6, 2);
        assert_eq!((ab.alpha, ab.beta), (3, 2));
        let j = q_nonzero_dft(6, 0, 1, 2);
        let want = filtered_coeff_sum(1, 0, 3, 2).to_f64().unwrap();
        assert!(close(j, Complex::new(want, 0.0), 1e-6));

        for m in 1u64..=8 {
            for s in 1u64..=m + 1 {
                for t in 0..s as i64 {
                    for u in 0..m as i64 {
                        let ab = AlphaBeta::for_dft_index(m, u);
                        let want = filtered_coeff_sum(s, t, ab.alpha, ab.beta)
                            .to_f64()
                            .unwrap();
                        let got = q_nonzero_dft(m, t, s, u);
                        assert!(
                            close(got, Complex::new(want, 0.0), 1e-6),
                            "m={m} t={t} s={s} u={u}: {got} vs {want}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_dft_reconstructs_counts() {
        assert_eq!(q_nonzero_via_dft(6, 2, 7, 0), BigUint::from(2u32));
        assert_eq!(q_nonzero_via_dft(6, 2, 7, 1), BigUint::from(2u32));
        // s > m and t = 0: only the empty subset
        for m in 1u64..=10 {
            assert_eq!(q_nonzero_via_dft(m, 0, m + 1, 0), BigUint::one());
        }
        for m in 1u64..=8 {
            for s in 1u64..=m + 1 {
                for t in 0..s as i64 {
                    for n in 0..m as i64 {
                        assert_eq!(
                            q_nonzero_via_dft(m, t, s, n),
                            q_nonzero_congruence_sum(m, t, s, n),
                            "m={m} t={t} s={s} n={n}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn bivariate_expansion_matches_recursion() {
        for m in 1u64..=8 {
            let c = bivariate_coeffs(m);
            for (t, row) in c.iter().enumerate() {
                for (n, v) in row.iter().enumerate() {
                    assert_eq!(
                        *v,
                        q_recursive(m as i64 - 1, t as i64, n as i64),
                        "m={m} t={t} n={n}"
                    );
                }
            }
        }
    }
}
