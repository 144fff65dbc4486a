use std::fmt;
use std::hash::{Hash, Hasher};
use std::marker::PhantomData;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

/// A rank-4 ring `Z[x]/(x^4 - r0 - r1 x - r2 x^2 - r3 x^3)` together with
/// the complex values of its basis powers.
pub trait RingSpec: Copy + Eq + Ord + Hash + fmt::Debug + Default + Send + Sync + 'static {
    const NAME: &'static str;
    /// `x^4 = r0 + r1 x + r2 x^2 + r3 x^3`.
    const REDUCTION: [i64; 4];
    /// Embedded values of `1, x, x^2, x^3` as `(re, im)`.
    fn basis() -> [(f64, f64); 4];
}

/// Cyclotomic integers of order 10, `ζ = e^{iπ/5}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cyclo10;

/// Cyclotomic integers of order 8, `ζ = e^{iπ/4}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cyclo8;

/// The real ring `Z[λ]` with `λ^4 = 1 - λ^2`, `λ ≈ 0.786151`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lambda;

fn unit_root_basis(n: f64) -> [(f64, f64); 4] {
    let step = std::f64::consts::PI / n;
    let mut out = [(1.0, 0.0); 4];
    for (k, slot) in out.iter_mut().enumerate().skip(1) {
        let a = step * k as f64;
        *slot = (a.cos(), a.sin());
    }
    out
}

/// Positive root of `x^4 + x^2 - 1`.
pub fn lambda_value() -> f64 {
    ((5f64.sqrt() - 1.0) / 2.0).sqrt()
}

impl RingSpec for Cyclo10 {
    const NAME: &'static str = "cyclotomic-10";
    const REDUCTION: [i64; 4] = [-1, 1, -1, 1];
    fn basis() -> [(f64, f64); 4] {
        unit_root_basis(5.0)
    }
}

impl RingSpec for Cyclo8 {
    const NAME: &'static str = "cyclotomic-8";
    const REDUCTION: [i64; 4] = [-1, 0, 0, 0];
    fn basis() -> [(f64, f64); 4] {
        unit_root_basis(4.0)
    }
}

impl RingSpec for Lambda {
    const NAME: &'static str = "lambda";
    const REDUCTION: [i64; 4] = [1, 0, -1, 0];
    fn basis() -> [(f64, f64); 4] {
        let l = lambda_value();
        [(1.0, 0.0), (l, 0.0), (l * l, 0.0), (l * l * l, 0.0)]
    }
}

/// Rings whose generator is a root of unity, so complex conjugation is a
/// ring automorphism.
pub trait Cyclotomic: RingSpec {
    /// Number of generator steps in a full turn.
    const ORDER: i64;
}

impl Cyclotomic for Cyclo10 {
    const ORDER: i64 = 10;
}

impl Cyclotomic for Cyclo8 {
    const ORDER: i64 = 8;
}

/// A reduced ring element: coefficients over `1, x, x^2, x^3`.
pub struct Scalar<R> {
    coeffs: [BigInt; 4],
    ring: PhantomData<R>,
}

impl<R: RingSpec> Scalar<R> {
    pub fn from_coeffs(coeffs: [BigInt; 4]) -> Self {
        Scalar {
            coeffs,
            ring: PhantomData,
        }
    }

    pub fn from_i64(coeffs: [i64; 4]) -> Self {
        Self::from_coeffs(coeffs.map(BigInt::from))
    }

    /// Rewrites an arbitrary-length polynomial in the generator down to
    /// degree 3 using the minimal polynomial.
    pub fn reduce(poly: &[BigInt]) -> Self {
        let mut c: Vec<BigInt> = poly.to_vec();
        if c.len() < 4 {
            c.resize(4, BigInt::zero());
        }
        for d in (4..c.len()).rev() {
            let top = std::mem::take(&mut c[d]);
            if top.is_zero() {
                continue;
            }
            for (j, r) in R::REDUCTION.iter().enumerate() {
                if *r != 0 {
                    c[d - 4 + j] += &top * r;
                }
            }
        }
        c.truncate(4);
        let [a, b, cc, d]: [BigInt; 4] = c.try_into().expect("four coefficients");
        Self::from_coeffs([a, b, cc, d])
    }

    pub fn zero() -> Self {
        Self::from_i64([0, 0, 0, 0])
    }

    pub fn one() -> Self {
        Self::from_i64([1, 0, 0, 0])
    }

    pub fn integer(n: i64) -> Self {
        Self::from_i64([n, 0, 0, 0])
    }

    /// The generator `x^k` for `0 <= k`, reduced.
    pub fn generator_pow(k: u32) -> Self {
        let mut poly = vec![BigInt::zero(); k as usize + 1];
        poly[k as usize] = BigInt::from(1);
        Self::reduce(&poly)
    }

    pub fn coeffs(&self) -> &[BigInt; 4] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale_int(&self, k: i64) -> Self {
        Self::from_coeffs(self.coeffs.clone().map(|c| c * k))
    }

    /// Complex image under the fixed basis embedding.
    pub fn embed(&self) -> (f64, f64) {
        let basis = R::basis();
        let mut re = 0.0;
        let mut im = 0.0;
        for (c, (bre, bim)) in self.coeffs.iter().zip(basis) {
            let c = c.to_f64().unwrap_or(f64::NAN);
            re += c * bre;
            im += c * bim;
        }
        (re, im)
    }

    /// Real part of the embedding.
    pub fn value(&self) -> f64 {
        self.embed().0
    }
}

impl<R: Cyclotomic> Scalar<R> {
    /// Complex conjugation, `ζ^k -> ζ^{-k}`.
    pub fn conj(&self) -> Self {
        let mut poly = vec![BigInt::zero(); R::ORDER as usize];
        poly[0] = self.coeffs[0].clone();
        for k in 1..4 {
            poly[R::ORDER as usize - k] = self.coeffs[k].clone();
        }
        Self::reduce(&poly)
    }

    /// `ζ^k` for any integer `k`.
    pub fn root_of_unity(k: i64) -> Self {
        Self::generator_pow(k.rem_euclid(R::ORDER) as u32)
    }
}

impl<R> Clone for Scalar<R> {
    fn clone(&self) -> Self {
        Scalar {
            coeffs: self.coeffs.clone(),
            ring: PhantomData,
        }
    }
}

impl<R> PartialEq for Scalar<R> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<R> Eq for Scalar<R> {}

impl<R> PartialOrd for Scalar<R> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<R> Ord for Scalar<R> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coeffs.cmp(&other.coeffs)
    }
}

impl<R> Hash for Scalar<R> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl<R: RingSpec> fmt::Debug for Scalar<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}, {}, {}]",
            self.coeffs[0], self.coeffs[1], self.coeffs[2], self.coeffs[3]
        )
    }
}

impl<R: RingSpec> fmt::Display for Scalar<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl<R: RingSpec> Default for Scalar<R> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<'a, R: RingSpec> Add<&'a Scalar<R>> for &'a Scalar<R> {
    type Output = Scalar<R>;
    fn add(self, rhs: &Scalar<R>) -> Scalar<R> {
        let [a, b, c, d] = &self.coeffs;
        let [e, f, g, h] = &rhs.coeffs;
        Scalar::from_coeffs([a + e, b + f, c + g, d + h])
    }
}

impl<'a, R: RingSpec> Sub<&'a Scalar<R>> for &'a Scalar<R> {
    type Output = Scalar<R>;
    fn sub(self, rhs: &Scalar<R>) -> Scalar<R> {
        let [a, b, c, d] = &self.coeffs;
        let [e, f, g, h] = &rhs.coeffs;
        Scalar::from_coeffs([a - e, b - f, c - g, d - h])
    }
}

impl<R: RingSpec> Neg for &Scalar<R> {
    type Output = Scalar<R>;
    fn neg(self) -> Scalar<R> {
        Scalar::from_coeffs(self.coeffs.clone().map(|c| -c))
    }
}

impl<'a, R: RingSpec> Mul<&'a Scalar<R>> for &'a Scalar<R> {
    type Output = Scalar<R>;
    fn mul(self, rhs: &Scalar<R>) -> Scalar<R> {
        let mut prod = vec![BigInt::zero(); 7];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Scalar::reduce(&prod)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<R: RingSpec> $tr<Scalar<R>> for Scalar<R> {
            type Output = Scalar<R>;
            fn $m(self, rhs: Scalar<R>) -> Scalar<R> {
                (&self).$m(&rhs)
            }
        }
        impl<'a, R: RingSpec> $tr<&'a Scalar<R>> for Scalar<R> {
            type Output = Scalar<R>;
            fn $m(self, rhs: &Scalar<R>) -> Scalar<R> {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl<R: RingSpec> Neg for Scalar<R> {
    type Output = Scalar<R>;
    fn neg(self) -> Scalar<R> {
        -&self
    }
}

/// `Φ = ζ + ζ^{-1} = 1 + ζ^2 - ζ^3` in the order-10 ring.
pub fn golden() -> Scalar<Cyclo10> {
    Scalar::from_i64([1, 0, 1, -1])
}

/// `Φ^{-1} = ζ^2 - ζ^3`.
pub fn golden_inverse() -> Scalar<Cyclo10> {
    Scalar::from_i64([0, 0, 1, -1])
}

/// `1 + √2 = 1 + ζ - ζ^3` in the order-8 ring.
pub fn silver() -> Scalar<Cyclo8> {
    Scalar::from_i64([1, 1, 0, -1])
}

/// `√2 - 1 = -1 + ζ - ζ^3`.
pub fn silver_inverse() -> Scalar<Cyclo8> {
    Scalar::from_i64([-1, 1, 0, -1])
}

/// `Ψ = λ^{-1} = λ^3 + λ ≈ 1.272020`.
pub fn psi() -> Scalar<Lambda> {
    Scalar::from_i64([0, 1, 0, 1])
}

/// `λ`.
pub fn lambda() -> Scalar<Lambda> {
    Scalar::from_i64([0, 1, 0, 0])
}
