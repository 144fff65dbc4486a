use std::fmt;
use std::hash::Hash;

use super::scalar::{Cyclo10, Cyclo8, Cyclotomic, Lambda, RingSpec, Scalar};

/// An exact point in the plane over one of the coordinate rings.
///
/// Rotations are by the family's base angle; `reflect` is a fixed mirror
/// satisfying `reflect(rotate(p, k)) = rotate(reflect(p), -k)`.
pub trait PlanePoint: Clone + Eq + Ord + Hash + fmt::Debug + Send + Sync + 'static {
    type Ring: RingSpec;

    /// Rotation steps in a full turn.
    const TURN: i64;

    fn origin() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, s: &Scalar<Self::Ring>) -> Self;
    fn rotate(&self, steps: i64) -> Self;
    fn reflect(&self) -> Self;
    fn embed(&self) -> (f64, f64);

    /// An exact ring element that vanishes iff `self` and `other` are parallel
    /// (a nonzero multiple of their cross product).
    fn wedge(&self, other: &Self) -> Scalar<Self::Ring>;

    /// Exact keys for the x and y coordinates: equal keys iff equal coordinates.
    fn x_key(&self) -> Scalar<Self::Ring>;
    fn y_key(&self) -> Scalar<Self::Ring>;

    /// Exact squared length, up to a fixed ring-dependent factor.
    fn norm_key(&self) -> Scalar<Self::Ring>;
}

/// A point of a cyclotomic ring, read as a complex number.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycloPoint<R>(pub Scalar<R>);

pub type Point10 = CycloPoint<Cyclo10>;
pub type Point8 = CycloPoint<Cyclo8>;

impl<R: Cyclotomic> CycloPoint<R> {
    pub fn new(s: Scalar<R>) -> Self {
        CycloPoint(s)
    }

    pub fn from_i64(c: [i64; 4]) -> Self {
        CycloPoint(Scalar::from_i64(c))
    }

    /// `ζ^k`.
    pub fn unit(k: i64) -> Self {
        CycloPoint(Scalar::root_of_unity(k))
    }

    pub fn scalar(&self) -> &Scalar<R> {
        &self.0
    }
}

impl<R: RingSpec> fmt::Debug for CycloPoint<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl<R: Cyclotomic> PlanePoint for CycloPoint<R> {
    type Ring = R;
    const TURN: i64 = R::ORDER;

    fn origin() -> Self {
        CycloPoint(Scalar::zero())
    }
    fn add(&self, other: &Self) -> Self {
        CycloPoint(&self.0 + &other.0)
    }
    fn sub(&self, other: &Self) -> Self {
        CycloPoint(&self.0 - &other.0)
    }
    fn neg(&self) -> Self {
        CycloPoint(-&self.0)
    }
    fn scale(&self, s: &Scalar<R>) -> Self {
        CycloPoint(&self.0 * s)
    }
    fn rotate(&self, steps: i64) -> Self {
        let k = steps.rem_euclid(R::ORDER);
        if k == 0 {
            return self.clone();
        }
        CycloPoint(&self.0 * &Scalar::root_of_unity(k))
    }
    fn reflect(&self) -> Self {
        CycloPoint(self.0.conj())
    }
    fn embed(&self) -> (f64, f64) {
        self.0.embed()
    }
    // conj(u)·v - u·conj(v) = 2i·cross(u, v)
    fn wedge(&self, other: &Self) -> Scalar<R> {
        let w = &self.0.conj() * &other.0;
        &w - &w.conj()
    }
    fn x_key(&self) -> Scalar<R> {
        &self.0 + &self.0.conj()
    }
    fn y_key(&self) -> Scalar<R> {
        &self.0 - &self.0.conj()
    }
    fn norm_key(&self) -> Scalar<R> {
        &self.0 * &self.0.conj()
    }
}

/// A point of the A2 family: a pair of `Z[λ]` coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct A2Point {
    pub x: Scalar<Lambda>,
    pub y: Scalar<Lambda>,
}

impl A2Point {
    pub fn new(x: Scalar<Lambda>, y: Scalar<Lambda>) -> Self {
        A2Point { x, y }
    }

    pub fn from_i64(x: [i64; 4], y: [i64; 4]) -> Self {
        A2Point::new(Scalar::from_i64(x), Scalar::from_i64(y))
    }
}

impl fmt::Debug for A2Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.x, self.y)
    }
}

impl PlanePoint for A2Point {
    type Ring = Lambda;
    const TURN: i64 = 4;

    fn origin() -> Self {
        A2Point::new(Scalar::zero(), Scalar::zero())
    }
    fn add(&self, o: &Self) -> Self {
        A2Point::new(&self.x + &o.x, &self.y + &o.y)
    }
    fn sub(&self, o: &Self) -> Self {
        A2Point::new(&self.x - &o.x, &self.y - &o.y)
    }
    fn neg(&self) -> Self {
        A2Point::new(-&self.x, -&self.y)
    }
    fn scale(&self, s: &Scalar<Lambda>) -> Self {
        A2Point::new(&self.x * s, &self.y * s)
    }
    /// Quarter turns clockwise: `(x, y) -> (y, -x)`.
    fn rotate(&self, steps: i64) -> Self {
        match steps.rem_euclid(4) {
            0 => self.clone(),
            1 => A2Point::new(self.y.clone(), -&self.x),
            2 => A2Point::new(-&self.x, -&self.y),
            _ => A2Point::new(-&self.y, self.x.clone()),
        }
    }
    /// Vertical flip `(x, y) -> (x, -y)`.
    fn reflect(&self) -> Self {
        A2Point::new(self.x.clone(), -&self.y)
    }
    fn embed(&self) -> (f64, f64) {
        (self.x.value(), self.y.value())
    }
    fn wedge(&self, o: &Self) -> Scalar<Lambda> {
        &(&self.x * &o.y) - &(&self.y * &o.x)
    }
    fn x_key(&self) -> Scalar<Lambda> {
        self.x.clone()
    }
    fn y_key(&self) -> Scalar<Lambda> {
        self.y.clone()
    }
    fn norm_key(&self) -> Scalar<Lambda> {
        &(&self.x * &self.x) + &(&self.y * &self.y)
    }
}
