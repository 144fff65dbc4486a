use aperiodic::coords::*;
use num_bigint::BigInt;
use proptest::prelude::*;

fn close(a: (f64, f64), b: (f64, f64), tol: f64) -> bool {
    (a.0 - b.0).abs() <= tol && (a.1 - b.1).abs() <= tol
}

fn poly(c: &[i64]) -> Vec<BigInt> {
    c.iter().map(|&x| BigInt::from(x)).collect()
}

#[test]
fn reduce_examples() {
    let z5 = Scalar::<Cyclo10>::reduce(&poly(&[0, 0, 0, 0, 0, 1]));
    assert_eq!(z5, Scalar::from_i64([-1, 0, 0, 0]));
    let z4 = Scalar::<Cyclo8>::reduce(&poly(&[0, 0, 0, 0, 1]));
    assert_eq!(z4, Scalar::from_i64([-1, 0, 0, 0]));
    let l4 = Scalar::<Lambda>::reduce(&poly(&[0, 0, 0, 0, 1]));
    assert_eq!(l4, Scalar::from_i64([1, 0, -1, 0]));
}

#[test]
fn reduce_long_input_keeps_value() {
    let c = poly(&[3, -1, 4, 1, -5, 9, 2, -6, 5, 3]);
    let s = Scalar::<Cyclo10>::reduce(&c);
    let mut want = (0.0, 0.0);
    for (k, ck) in [3.0, -1.0, 4.0, 1.0, -5.0, 9.0, 2.0, -6.0, 5.0, 3.0]
        .iter()
        .enumerate()
    {
        let a = 36f64.to_radians() * k as f64;
        want.0 += ck * a.cos();
        want.1 += ck * a.sin();
    }
    assert!(
        close(s.embed(), want, 1e-9),
        "{:?} vs {:?}",
        s.embed(),
        want
    );
}

#[test]
fn rotate_examples() {
    assert_eq!(Point10::unit(0).rotate(5), Point10::from_i64([-1, 0, 0, 0]));
    let p = Point8::unit(0).rotate(2);
    assert_eq!(p, Point8::from_i64([0, 0, 1, 0]));
    assert!(close(p.embed(), (0.0, 1.0), 1e-12));
    let q = A2Point::from_i64([2, 0, 0, 0], [5, 0, 0, 0]);
    assert_eq!(q.rotate(1), A2Point::from_i64([5, 0, 0, 0], [-2, 0, 0, 0]));
    assert_eq!(q.rotate(4), q);
}

#[test]
fn inflation_units() {
    assert!((golden().value() - 1.6180339887).abs() < 1e-10);
    assert!(golden().embed().1.abs() < 1e-15);
    assert!((silver().value() - 2.4142135624).abs() < 1e-10);
    assert!((psi().value() - 1.2720196495).abs() < 1e-10);
    // Φ² = Φ + 1, (1+√2)² = 2(1+√2) + 1, Ψ² = 1 + λ²
    assert_eq!(golden().pow(2), &golden() + &Scalar::one());
    assert_eq!(silver().pow(2), &silver().scale_int(2) + &Scalar::one());
    assert_eq!(psi().pow(2), &Scalar::one() + &lambda().pow(2));
    assert_eq!(&golden() * &golden_inverse(), Scalar::one());
    assert_eq!(&silver() * &silver_inverse(), Scalar::one());
    assert_eq!(&psi() * &lambda(), Scalar::one());
}

#[test]
fn lambda_is_root_of_quartic() {
    let l = lambda_value();
    assert!((l - 0.7861513778).abs() < 1e-10);
    assert!((l.powi(4) + l * l - 1.0).abs() < 1e-15);
    // oracle: bisection for the positive root, then invert
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..100 {
        let mid = (lo + hi) / 2.0;
        if mid.powi(4) + mid * mid - 1.0 < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    assert!((1.0 / lo - 1.2720196495).abs() < 1e-10);
}

#[test]
fn embed_examples() {
    assert!((lambda().value() - 0.7861513778).abs() < 1e-10);
    assert!(close(
        Point10::unit(1).embed(),
        (0.8090169944, 0.5877852523),
        1e-10
    ));
    assert_eq!(Point10::origin().embed(), (0.0, 0.0));
    assert_eq!(A2Point::origin().embed(), (0.0, 0.0));
}

#[test]
fn conjugation_reflects() {
    for k in 0..10 {
        let p = Point10::unit(k);
        let (x, y) = p.embed();
        assert!(close(p.reflect().embed(), (x, -y), 1e-12));
    }
    for k in 0..8 {
        let p = Point8::unit(k);
        let (x, y) = p.embed();
        assert!(close(p.reflect().embed(), (x, -y), 1e-12));
    }
}

#[test]
fn isometry_compose_and_inverse() {
    let g = Isometry::new(3, true, Point10::from_i64([1, 2, 0, -1]));
    let h = Isometry::new(7, false, Point10::from_i64([0, -1, 1, 1]));
    let p = Point10::from_i64([2, 0, -3, 1]);
    assert_eq!(g.compose(&h).apply(&p), g.apply(&h.apply(&p)));
    assert_eq!(g.inverse().apply(&g.apply(&p)), p);
    let a = Isometry::new(1, true, A2Point::from_i64([1, 1, 0, 0], [0, 0, 2, 0]));
    let q = A2Point::from_i64([0, 1, 0, 0], [3, 0, 0, 1]);
    assert_eq!(a.inverse().apply(&a.apply(&q)), q);
    assert_eq!(a.compose(&a.inverse()), Isometry::identity());
}

#[test]
fn wedge_detects_parallel() {
    let u = Point10::unit(2);
    assert!(u.wedge(&u.scale(&golden())).is_zero());
    assert!(u.wedge(&u.rotate(5)).is_zero());
    assert!(!u.wedge(&u.rotate(1)).is_zero());
    let v = A2Point::from_i64([0, 1, 0, 0], [0, 0, 1, 0]);
    assert!(v.wedge(&v.scale(&psi())).is_zero());
    assert!(!v.wedge(&v.rotate(1)).is_zero());
}

fn coeffs() -> impl Strategy<Value = [i64; 4]> {
    prop::array::uniform4(-1000i64..=1000)
}

fn scalar_close<R: RingSpec>(s: &Scalar<R>, want: (f64, f64), tol: f64) -> bool {
    let got = s.embed();
    let scale = 1.0 + want.0.abs() + want.1.abs();
    (got.0 - want.0).abs() <= tol * scale && (got.1 - want.1).abs() <= tol * scale
}

fn cmul(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

macro_rules! ring_props {
    ($name:ident, $ring:ty) => {
        mod $name {
            use super::*;
            type S = Scalar<$ring>;
            proptest! {
                #[test]
                fn axioms(a in coeffs(), b in coeffs(), c in coeffs()) {
                    let (a, b, c) = (S::from_i64(a), S::from_i64(b), S::from_i64(c));
                    prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                    prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
                    prop_assert_eq!(&a * &b, &b * &a);
                    prop_assert_eq!(&a + &b, &b + &a);
                    prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                    prop_assert!((&a + &(-&a)).is_zero());
                    prop_assert_eq!(&a * &S::one(), a.clone());
                }

                #[test]
                fn embedding_is_homomorphism(a in coeffs(), b in coeffs()) {
                    let (a, b) = (S::from_i64(a), S::from_i64(b));
                    let (ea, eb) = (a.embed(), b.embed());
                    prop_assert!(scalar_close(&(&a + &b), (ea.0 + eb.0, ea.1 + eb.1), 1e-12));
                    // products of coefficients up to 1e3 reach 1e7; 1e-9 relative to the operands
                    let prod = cmul(ea, eb);
                    let tol = 1e-9 * (1.0 + ea.0.abs() + ea.1.abs()) * (1.0 + eb.0.abs() + eb.1.abs());
                    let got = (&a * &b).embed();
                    prop_assert!((got.0 - prod.0).abs() <= tol && (got.1 - prod.1).abs() <= tol);
                }

                #[test]
                fn distinct_scalars_embed_apart(a in coeffs(), b in coeffs()) {
                    prop_assume!(a != b);
                    let (ea, eb) = (S::from_i64(a).embed(), S::from_i64(b).embed());
                    prop_assert!((ea.0 - eb.0).hypot(ea.1 - eb.1) > 1e-9);
                }
            }
        }
    };
}

ring_props!(cyclo10, Cyclo10);
ring_props!(cyclo8, Cyclo8);
ring_props!(lambda_ring, Lambda);

proptest! {
    #[test]
    fn inflate_then_deflate_is_identity(a in coeffs(), b in coeffs()) {
        let p = Point10::from_i64(a);
        prop_assert_eq!(p.scale(&golden()).scale(&golden_inverse()), p);
        let q = Point8::from_i64(a);
        prop_assert_eq!(q.scale(&silver()).scale(&silver_inverse()), q);
        let r = A2Point::from_i64(a, b);
        prop_assert_eq!(r.scale(&psi()).scale(&lambda()), r);
    }

    #[test]
    fn inflate_scales_embedding(a in coeffs(), b in coeffs()) {
        let p = A2Point::from_i64(a, b);
        let (x, y) = p.embed();
        let (sx, sy) = p.scale(&psi()).embed();
        let u = psi().value();
        prop_assert!((sx - u * x).abs() < 1e-9 * (1.0 + x.abs()));
        prop_assert!((sy - u * y).abs() < 1e-9 * (1.0 + y.abs()));
    }

    #[test]
    fn reflection_reverses_rotation(a in coeffs(), k in -20i64..20) {
        let p = Point10::from_i64(a);
        prop_assert_eq!(p.rotate(k).reflect(), p.reflect().rotate(-k));
        let q = Point8::from_i64(a);
        prop_assert_eq!(q.rotate(k).reflect(), q.reflect().rotate(-k));
        let r = A2Point::from_i64(a, a);
        prop_assert_eq!(r.rotate(k).reflect(), r.reflect().rotate(-k));
    }

    #[test]
    fn equal_points_embed_equal(a in coeffs()) {
        let p = Point10::from_i64(a);
        let q = Point10::from_i64(a);
        prop_assert_eq!(p.embed(), q.embed());
    }
}
