//! Exact univariate polynomials over the rationals, plus a double-precision
//! complex root finder used by the dimension-2 spectrum oracle.
//!
//! Coefficients are stored in ascending order with no trailing zeros; the
//! zero polynomial is the empty vector.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficients without trailing zeros.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero when out of range).
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs =
            vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(coeffs)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from(BigInt::from(k as u64)))
                .collect(),
        )
    }

    /// Exact Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let mut rem = self.coeffs.clone();
        let dlen = divisor.coeffs.len();
        if rem.len() < dlen {
            return (Self::zero(), self.clone());
        }
        let lead = divisor.coeffs.last().unwrap().clone();
        let mut quot = vec![BigRational::zero(); rem.len() - dlen + 1];
        for k in (0..quot.len()).rev() {
            let top = rem[k + dlen - 1].clone();
            if top.is_zero() {
                continue;
            }
            let q = top / &lead;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                let sub = &q * d;
                rem[k + j] -= sub;
            }
            quot[k] = q;
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.coeffs.last().unwrap().clone();
        a.scale(&(BigRational::one() / lead))
    }

    /// Square-free decomposition by Yun's algorithm: returns `(g_i, i)` with
    /// `self = lc * prod g_i^i`, each `g_i` monic square-free, pairwise
    /// coprime. Constant input yields an empty list.
    pub fn square_free_decomposition(&self) -> Vec<(Self, usize)> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let lead = self.coeffs.last().unwrap().clone();
        let f = self.scale(&(BigRational::one() / lead));
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.div_rem(&a0).0;
        let mut c = fp.div_rem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut out = Vec::new();
        let mut i = 1usize;
        loop {
            let g = b.gcd(&d);
            if g.degree().unwrap_or(0) > 0 {
                out.push((g.clone(), i));
            }
            b = b.div_rem(&g).0;
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = d.div_rem(&g).0;
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    /// All complex roots with multiplicity. Exact zero roots are stripped
    /// first, every square-free factor is solved by Durand-Kerner with a
    /// Newton polish, and multiplicities come from the exact square-free
    /// decomposition, so clustered roots do not lose accuracy.
    pub fn complex_roots(&self) -> Vec<Complex64> {
        assert!(!self.is_zero(), "the zero polynomial has no root multiset");
        let mut roots = Vec::new();
        let mut f = self.clone();
        let zero_mult = f.coeffs.iter().take_while(|c| c.is_zero()).count();
        if zero_mult > 0 {
            roots.extend(std::iter::repeat(Complex64::new(0.0, 0.0)).take(zero_mult));
            f = Self::new(f.coeffs[zero_mult..].to_vec());
        }
        for (factor, mult) in f.square_free_decomposition() {
            for root in durand_kerner(&factor) {
                roots.extend(std::iter::repeat(root).take(mult));
            }
        }
        roots
    }
}

/// Lagrange interpolation through `points` (distinct abscissae), exact.
pub fn interpolate(points: &[(BigRational, BigRational)]) -> RatPoly {
    let mut acc = RatPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = RatPoly::constant(BigRational::one());
        let mut denom = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = basis.mul(&RatPoly::new(vec![-xj.clone(), BigRational::one()]));
            denom *= xi - xj;
        }
        acc = acc.add(&basis.scale(&(yi / denom)));
    }
    acc
}

/// Durand-Kerner on a square-free monic-normalized polynomial, followed by
/// Newton polishing of each root.
fn durand_kerner(f: &RatPoly) -> Vec<Complex64> {
    let deg = f.degree().expect("nonconstant factor");
    if deg == 0 {
        return Vec::new();
    }
    let lead = f.coeffs().last().unwrap().clone();
    let monic = f.scale(&(BigRational::one() / lead));
    if deg == 1 {
        let c = monic.coeff(0).to_f64().unwrap_or(f64::NAN);
        return vec![Complex64::new(-c, 0.0)];
    }
    let radius = 1.0
        + monic
            .coeffs()
            .iter()
            .take(deg)
            .map(|c| c.to_f64().unwrap_or(0.0).abs())
            .fold(0.0f64, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| seed.powu(k as u32 + 1) * radius)
        .collect();
    for _ in 0..1000 {
        let mut max_step = 0.0f64;
        for k in 0..deg {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..deg {
                if j != k {
                    denom *= z[k] - z[j];
                }
            }
            if denom.norm() == 0.0 {
                // Perturb coincident iterates.
                z[k] += Complex64::new(1e-8, 1e-8);
                max_step = f64::MAX;
                continue;
            }
            let step = monic.eval_complex(z[k]) / denom;
            z[k] -= step;
            max_step = max_step.max(step.norm());
        }
        if max_step < 1e-14 * radius.max(1.0) {
            break;
        }
    }
    let deriv = monic.derivative();
    for zk in z.iter_mut() {
        for _ in 0..8 {
            let d = deriv.eval_complex(*zk);
            if d.norm() == 0.0 {
                break;
            }
            *zk -= monic.eval_complex(*zk) / d;
        }
        // Snap tiny imaginary parts of genuinely real roots.
        if zk.im.abs() < 1e-12 * (1.0 + zk.re.abs()) {
            let real = Complex64::new(zk.re, 0.0);
            if monic.eval_complex(real).norm() <= monic.eval_complex(*zk).norm() + 1e-18 {
                *zk = real;
            }
        }
    }
    z
}
