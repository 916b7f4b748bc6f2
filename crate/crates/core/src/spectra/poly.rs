//! Exact integer polynomials: characteristic polynomials and square-free
//! factorisation.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{strong_components, SignedDigraph};

/// Polynomial with arbitrary-precision integer coefficients, stored in
/// ascending powers. The zero polynomial has no coefficients; otherwise the
/// leading coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `x^k`
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn max_abs_coefficient(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|c| c.abs().to_f64().unwrap_or(f64::INFINITY))
            .fold(0.0, f64::max)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self { coeffs: Vec::new() };
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = BigInt::zero();
        Self::new(
            (0..len)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) - other.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Pseudo-remainder of `self` by `divisor`.
    fn pseudo_rem(&self, divisor: &Self) -> Self {
        let mut r = self.coeffs.clone();
        let d = divisor.degree();
        let lc = divisor.leading().expect("nonzero divisor").clone();
        while r.len() > d && !r.is_empty() {
            let shift = r.len() - 1 - d;
            let top = r.last().unwrap().clone();
            for c in r.iter_mut() {
                *c *= &lc;
            }
            for (i, b) in divisor.coeffs.iter().enumerate() {
                r[i + shift] -= &top * b;
            }
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        Self::new(r)
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    /// Exact division. Panics if `divisor` does not divide `self` over the
    /// integers.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        let d = divisor.degree();
        let lc = divisor.leading().expect("nonzero divisor");
        let mut r = self.coeffs.clone();
        if r.len() <= d {
            assert!(self.is_zero(), "inexact polynomial division");
            return Self { coeffs: Vec::new() };
        }
        let mut q = vec![BigInt::zero(); r.len() - d];
        for shift in (0..q.len()).rev() {
            let top = &r[shift + d];
            let (quot, rem) = top.div_rem(lc);
            assert!(rem.is_zero(), "inexact polynomial division");
            for (i, b) in divisor.coeffs.iter().enumerate() {
                r[i + shift] -= &quot * b;
            }
            q[shift] = quot;
        }
        assert!(r.iter().all(Zero::is_zero), "inexact polynomial division");
        Self::new(q)
    }

    /// Number of roots at zero, i.e. the largest `m` with `x^m | self`.
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// `self / x^m` where `m` is the zero-root multiplicity.
    pub fn strip_zero_roots(&self) -> Self {
        Self::new(self.coeffs[self.zero_root_multiplicity()..].to_vec())
    }

    /// Square-free decomposition (Yun): returns `(factor, multiplicity)` with
    /// pairwise coprime primitive factors of positive degree such that
    /// `self` equals the product of `factor^multiplicity` up to a constant.
    pub fn square_free_factors(&self) -> Vec<(IntPolynomial, usize)> {
        let f = self.primitive_part();
        if f.degree() == 0 {
            return Vec::new();
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.exact_div(&a0);
        let c = df.exact_div(&a0);
        let mut d = c.sub(&b.derivative());
        let mut out = Vec::new();
        let mut i = 1;
        while b.degree() > 0 {
            let a = b.gcd(&d);
            let b_next = b.exact_div(&a);
            let c_next = d.exact_div(&a);
            d = c_next.sub(&b_next.derivative());
            if a.degree() > 0 {
                out.push((a, i));
            }
            b = b_next;
            i += 1;
        }
        out
    }

    pub fn eval_f64(&self, x: num_complex::Complex64) -> num_complex::Complex64 {
        self.to_f64()
            .iter()
            .rev()
            .fold(num_complex::Complex64::new(0.0, 0.0), |acc, &c| acc * x + c)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = !mag.is_one() || i == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strs: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        strs.serialize(s)
    }
}

/// Characteristic polynomial `det(xI - A)` of the whole adjacency matrix,
/// by Faddeev-LeVerrier in exact integer arithmetic.
pub fn char_poly(g: &SignedDigraph) -> IntPolynomial {
    let n = g.vertex_count();
    let rows: Vec<Vec<(usize, BigInt)>> = (0..n)
        .map(|i| g.successors(i).map(|(j, s)| (j, BigInt::from(s.value()))).collect())
        .collect();

    // coeffs[n - k] holds c_{n-k}; M_k = A M_{k-1} + c_{n-k+1} I
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        let mut am = vec![vec![BigInt::zero(); n]; n];
        for (i, row) in rows.iter().enumerate() {
            for (l, a) in row {
                for j in 0..n {
                    if !m[*l][j].is_zero() {
                        am[i][j] += a * &m[*l][j];
                    }
                }
            }
        }
        for (i, r) in am.iter_mut().enumerate() {
            r[i] += &coeffs[n - k + 1];
        }
        m = am;
        let mut trace = BigInt::zero();
        for (i, row) in rows.iter().enumerate() {
            for (l, a) in row {
                trace += a * &m[*l][i];
            }
        }
        let (quot, rem) = (-trace).div_rem(&BigInt::from(k));
        debug_assert!(rem.is_zero(), "Faddeev-LeVerrier trace not divisible");
        coeffs[n - k] = quot;
    }
    IntPolynomial::new(coeffs)
}

/// Characteristic polynomial as the product over strong components. The
/// adjacency matrix is block triangular in a topological order of the
/// condensation, so this equals [`char_poly`].
pub fn char_poly_by_components(g: &SignedDigraph) -> Result<IntPolynomial> {
    let mut out = IntPolynomial::one();
    for component in strong_components(g).components() {
        let sub = g.induced(component)?;
        out = out.mul(&char_poly(&sub));
    }
    if out.degree() != g.vertex_count() {
        return Err(Error::Precondition("component degrees do not sum to n".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_adjacency, BicyclicConfig, Sign};

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    fn cycle(k: usize, sign: Sign) -> SignedDigraph {
        SignedDigraph::from_arcs(
            k,
            (0..k).map(|j| (j, (j + 1) % k, if j == k - 1 { sign } else { Sign::Positive })),
        )
        .unwrap()
    }

    /// Cofactor expansion of det(xI - A), evaluated at an integer point.
    fn det_at(a: &[Vec<i64>], x: i64) -> i64 {
        let n = a.len();
        let m: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { x } else { 0 } - a[i][j]).collect())
            .collect();
        fn det(m: &[Vec<i64>]) -> i64 {
            if m.len() == 1 {
                return m[0][0];
            }
            (0..m.len())
                .map(|j| {
                    let minor: Vec<Vec<i64>> = m[1..]
                        .iter()
                        .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect())
                        .collect();
                    let s = if j % 2 == 0 { 1 } else { -1 };
                    s * m[0][j] * det(&minor)
                })
                .sum()
        }
        det(&m)
    }

    #[test]
    fn positive_three_cycle() {
        assert_eq!(char_poly(&cycle(3, Sign::Positive)), p(&[-1, 0, 0, 1]));
    }

    #[test]
    fn negative_two_cycle() {
        assert_eq!(char_poly(&cycle(2, Sign::Negative)), p(&[1, 0, 1]));
    }

    #[test]
    fn signed_cycle_is_x_k_minus_sign() {
        for k in 2..=12 {
            for s in [Sign::Positive, Sign::Negative] {
                let mut c = vec![0; k + 1];
                c[0] = -s.value();
                c[k] = 1;
                assert_eq!(char_poly(&cycle(k, s)), p(&c), "k={k} s={s:?}");
            }
        }
    }

    #[test]
    fn disjoint_union_is_block_product() {
        let cfg = BicyclicConfig::from_parts(5, 2, Sign::Positive, 3, Sign::Positive).unwrap();
        let expected = p(&[-1, 0, 1]).mul(&p(&[-1, 0, 0, 1]));
        assert_eq!(char_poly(&build_adjacency(&cfg)), expected);
    }

    #[test]
    fn matches_cofactor_expansion_on_dense_example() {
        let g = SignedDigraph::from_arcs(
            5,
            [
                (0, 1, Sign::Positive),
                (1, 2, Sign::Negative),
                (2, 0, Sign::Positive),
                (1, 3, Sign::Positive),
                (3, 1, Sign::Negative),
                (3, 4, Sign::Positive),
                (4, 3, Sign::Positive),
                (2, 2, Sign::Negative),
            ],
        )
        .unwrap();
        let cp = char_poly(&g);
        let a = g.adjacency_matrix();
        for x in -3..=3 {
            let at = cp
                .coefficients()
                .iter()
                .rev()
                .fold(BigInt::zero(), |acc, c| acc * x + c);
            assert_eq!(at, BigInt::from(det_at(&a, x)), "x = {x}");
        }
        assert_eq!(char_poly_by_components(&g).unwrap(), cp);
    }

    #[test]
    fn gcd_and_exact_division() {
        let a = p(&[-1, 0, 1]).mul(&p(&[1, 1]));
        let b = p(&[-1, 1]).mul(&p(&[2, 0, 1]));
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        assert_eq!(a.exact_div(&p(&[1, 1])), p(&[-1, 0, 1]));
    }

    #[test]
    fn square_free_of_repeated_roots() {
        // (x^2 - 1)(x^3 - 1) = (x - 1)^2 (x + 1)(x^2 + x + 1)
        let f = p(&[-1, 0, 1]).mul(&p(&[-1, 0, 0, 1]));
        let factors = f.square_free_factors();
        assert_eq!(
            factors,
            vec![(p(&[1, 2, 2, 1]), 1), (p(&[-1, 1]), 2)]
        );
        let x5 = IntPolynomial::monomial(5).mul(&p(&[1, 0, 1]));
        assert_eq!(x5.zero_root_multiplicity(), 5);
        assert_eq!(x5.strip_zero_roots(), p(&[1, 0, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 0, -2, 1]).to_string(), "x^3 - 2x^2 + 1");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
    }
}
