use super::qpoly::QPoly;

/// `[n]_q = 1 + q + ... + q^(n-1)`, with `[0]_q = 0`.
pub fn q_int(n: usize) -> QPoly {
    QPoly::from_terms((0..n as u32).map(|e| (e, 1)))
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: usize) -> QPoly {
    (1..=n).fold(QPoly::one(), |acc, i| &acc * &q_int(i))
}

/// The Gaussian binomial coefficient; zero when `k > n`.
///
/// Panics if the factorial quotient is not exact, which would indicate an
/// arithmetic bug rather than a user error.
pub fn q_binomial(n: usize, k: usize) -> QPoly {
    if k > n {
        return QPoly::zero();
    }
    q_multinomial(&[k, n - k])
}

/// `[n]_q! / ([nu_1]_q! ... [nu_l]_q!)` with `n = sum(nu)`.
pub fn q_multinomial(nu: &[usize]) -> QPoly {
    let n: usize = nu.iter().sum();
    let den = nu
        .iter()
        .fold(QPoly::one(), |acc, &p| &acc * &q_factorial(p));
    q_factorial(n)
        .div_exact(&den)
        .unwrap_or_else(|| panic!("q-multinomial {nu:?} is not an exact quotient"))
}
