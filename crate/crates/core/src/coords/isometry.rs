use super::point::PlanePoint;
use super::scalar::Scalar;

/// `p -> translation + rotate(reflect^m(p), rotation)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Isometry<P> {
    pub rotation: i64,
    pub reflect: bool,
    pub translation: P,
}

impl<P: PlanePoint> Isometry<P> {
    pub fn identity() -> Self {
        Isometry {
            rotation: 0,
            reflect: false,
            translation: P::origin(),
        }
    }

    pub fn new(rotation: i64, reflect: bool, translation: P) -> Self {
        Isometry {
            rotation: rotation.rem_euclid(P::TURN),
            reflect,
            translation,
        }
    }

    pub fn translate(translation: P) -> Self {
        Self::new(0, false, translation)
    }

    pub fn apply_linear(&self, p: &P) -> P {
        let q = if self.reflect { p.reflect() } else { p.clone() };
        q.rotate(self.rotation)
    }

    pub fn apply(&self, p: &P) -> P {
        self.apply_linear(p).add(&self.translation)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Self) -> Self {
        let turn = if self.reflect {
            -inner.rotation
        } else {
            inner.rotation
        };
        Isometry::new(
            self.rotation + turn,
            self.reflect ^ inner.reflect,
            self.apply(&inner.translation),
        )
    }

    /// The same map after all coordinates are multiplied by `unit`.
    pub fn inflated(&self, unit: &Scalar<P::Ring>) -> Self {
        Isometry {
            rotation: self.rotation,
            reflect: self.reflect,
            translation: self.translation.scale(unit),
        }
    }

    pub fn inverse(&self) -> Self {
        let linear = Isometry::new(
            if self.reflect {
                self.rotation
            } else {
                -self.rotation
            },
            self.reflect,
            P::origin(),
        );
        let t = linear.apply_linear(&self.translation).neg();
        Isometry::new(linear.rotation, linear.reflect, t)
    }
}
