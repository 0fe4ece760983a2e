use std::array;
use std::fmt;

use super::GroupError;
use crate::scalar::{parse_scalar, Scalar};
use crate::screw::{MultiScrew, Twist};

pub type Matrix3<S> = [[S; 3]; 3];
pub type Matrix6<S> = [[S; 6]; 6];

pub fn mat_mul<S: Scalar, const N: usize>(a: &[[S; N]; N], b: &[[S; N]; N]) -> [[S; N]; N] {
    array::from_fn(|i| {
        array::from_fn(|j| {
            let mut s = S::zero();
            for k in 0..N {
                s.add_assign_ref(&a[i][k].mul_ref(&b[k][j]));
            }
            s
        })
    })
}

pub fn mat_vec<S: Scalar, const N: usize>(a: &[[S; N]; N], x: &[S; N]) -> [S; N] {
    array::from_fn(|i| {
        let mut s = S::zero();
        for k in 0..N {
            s.add_assign_ref(&a[i][k].mul_ref(&x[k]));
        }
        s
    })
}

pub fn identity<S: Scalar, const N: usize>() -> [[S; N]; N] {
    array::from_fn(|i| array::from_fn(|j| if i == j { S::one() } else { S::zero() }))
}

fn transpose3<S: Scalar>(a: &Matrix3<S>) -> Matrix3<S> {
    array::from_fn(|i| array::from_fn(|j| a[j][i].clone()))
}

fn det3<S: Scalar>(a: &Matrix3<S>) -> S {
    let minor = |i: usize, j: usize, k: usize, l: usize| a[i][k].mul_ref(&a[j][l]) - a[i][l].mul_ref(&a[j][k]);
    a[0][0].mul_ref(&minor(1, 2, 1, 2)) - a[0][1].mul_ref(&minor(1, 2, 0, 2)) + a[0][2].mul_ref(&minor(1, 2, 0, 1))
}

/// Skew matrix `T` with `T x = t × x`.
pub fn skew<S: Scalar>(t: &[S; 3]) -> Matrix3<S> {
    let z = S::zero;
    [
        [z(), -t[2].clone(), t[1].clone()],
        [t[2].clone(), z(), -t[0].clone()],
        [-t[1].clone(), t[0].clone(), z()],
    ]
}

pub fn cross<S: Scalar>(a: &[S; 3], b: &[S; 3]) -> [S; 3] {
    mat_vec(&skew(a), b)
}

/// Nonzero quaternion `(q0, q1, q2, q3)`, used as an exact rational
/// parametrization of rotations.
#[derive(Clone, Debug, PartialEq)]
pub struct Quaternion<S>(pub [S; 4]);

impl<S: Scalar> Quaternion<S> {
    pub fn new(q: [S; 4]) -> Result<Self, GroupError> {
        if q.iter().all(S::is_zero) {
            return Err(GroupError::ZeroQuaternion);
        }
        Ok(Quaternion(q))
    }

    pub fn from_ints(q: [i64; 4]) -> Result<Self, GroupError> {
        Self::new(q.map(S::from_i64))
    }

    pub fn norm_squared(&self) -> S {
        self.0.iter().fold(S::zero(), |acc, x| acc + x.mul_ref(x))
    }

    /// The rotation matrix before division by the squared norm; every entry
    /// is a quadratic form in the components.
    pub fn unnormalized_matrix(&self) -> Matrix3<S> {
        let [a, b, c, d] = &self.0;
        let two = S::from_i64(2);
        let sq = |x: &S| x.mul_ref(x);
        let m = |x: &S, y: &S| x.mul_ref(y);
        [
            [
                sq(a) + sq(b) - sq(c) - sq(d),
                two.clone() * (m(b, c) - m(a, d)),
                two.clone() * (m(b, d) + m(a, c)),
            ],
            [
                two.clone() * (m(b, c) + m(a, d)),
                sq(a) - sq(b) + sq(c) - sq(d),
                two.clone() * (m(c, d) - m(a, b)),
            ],
            [
                two.clone() * (m(b, d) - m(a, c)),
                two * (m(c, d) + m(a, b)),
                sq(a) - sq(b) - sq(c) + sq(d),
            ],
        ]
    }
}

/// Exact element of SO(3). Construction checks `RᵀR = I` and `det R = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Rotation<S> {
    m: Matrix3<S>,
}

impl<S: Scalar> Rotation<S> {
    pub fn new(m: Matrix3<S>) -> Result<Self, GroupError> {
        if mat_mul(&transpose3(&m), &m) != identity() || !det3(&m).is_one() {
            return Err(GroupError::NotARotation);
        }
        Ok(Rotation { m })
    }

    pub fn identity() -> Self {
        Rotation { m: identity() }
    }

    pub fn from_quaternion(q: &Quaternion<S>) -> Self {
        let n = q.norm_squared();
        let m = q.unnormalized_matrix().map(|row| row.map(|x| x / n.clone()));
        Self::new(m).expect("unit quaternion formula yields a rotation")
    }

    pub fn matrix(&self) -> &Matrix3<S> {
        &self.m
    }

    pub fn apply(&self, x: &[S; 3]) -> [S; 3] {
        mat_vec(&self.m, x)
    }

    pub fn compose(&self, other: &Self) -> Self {
        Rotation {
            m: mat_mul(&self.m, &other.m),
        }
    }
}

/// `(R, r)` acting on twists by `(ω, v) ↦ (Rω, T R ω + R v)` with `T` the
/// skew matrix of `r`.
#[derive(Clone, Debug, PartialEq)]
pub struct EuclideanElement<S> {
    pub rotation: Rotation<S>,
    pub translation: [S; 3],
}

impl<S: Scalar> EuclideanElement<S> {
    pub fn new(rotation: Rotation<S>, translation: [S; 3]) -> Self {
        EuclideanElement { rotation, translation }
    }

    pub fn identity() -> Self {
        Self::new(Rotation::identity(), array::from_fn(|_| S::zero()))
    }

    pub fn translation(t: [S; 3]) -> Self {
        Self::new(Rotation::identity(), t)
    }

    pub fn rotation(r: Rotation<S>) -> Self {
        Self::new(r, array::from_fn(|_| S::zero()))
    }

    /// `self · other = (R₂R₁, R₂r₁ + r₂)` with `self = (R₂, r₂)`.
    pub fn compose(&self, other: &Self) -> Self {
        let rotated = self.rotation.apply(&other.translation);
        Self::new(
            self.rotation.compose(&other.rotation),
            array::from_fn(|i| rotated[i].clone() + self.translation[i].clone()),
        )
    }

    /// Block matrix `[[R, 0], [T R, R]]`.
    pub fn adjoint_matrix(&self) -> Matrix6<S> {
        let r = self.rotation.matrix();
        let tr = mat_mul(&skew(&self.translation), r);
        array::from_fn(|i| {
            array::from_fn(|j| match (i < 3, j < 3) {
                (true, true) => r[i][j].clone(),
                (true, false) => S::zero(),
                (false, true) => tr[i - 3][j].clone(),
                (false, false) => r[i - 3][j - 3].clone(),
            })
        })
    }

    pub fn apply_twist(&self, s: &Twist<S>) -> Twist<S> {
        let omega = self.rotation.apply(&s.omega);
        let rv = self.rotation.apply(&s.vee);
        let tw = cross(&self.translation, &omega);
        let vee = array::from_fn(|i| tw[i].clone() + rv[i].clone());
        Twist { omega, vee }
    }
}

/// The adjoint action applied to each twist of a multi-screw.
pub fn apply_adjoint<S: Scalar>(g: &EuclideanElement<S>, s: &MultiScrew<S>) -> MultiScrew<S> {
    MultiScrew {
        twists: s.twists.iter().map(|t| g.apply_twist(t)).collect(),
    }
}

/// A group element given by a quaternion and a translation; this is the
/// serialized form `q: a b c d; t: x y z`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuaternionElement<S> {
    pub quaternion: Quaternion<S>,
    pub translation: [S; 3],
}

impl<S: Scalar> QuaternionElement<S> {
    pub fn element(&self) -> EuclideanElement<S> {
        EuclideanElement::new(Rotation::from_quaternion(&self.quaternion), self.translation.clone())
    }

    pub fn parse(text: &str) -> Result<Self, GroupError> {
        let bad = |m: &str| GroupError::Parse(m.to_string());
        let (qpart, tpart) = text
            .split_once(';')
            .ok_or_else(|| bad("expected `q: a b c d; t: x y z`"))?;
        let values = |part: &str, key: &str, n: usize| -> Result<Vec<S>, GroupError> {
            let rest = part
                .trim()
                .strip_prefix(key)
                .ok_or_else(|| bad(&format!("expected `{key}`")))?;
            let v = rest
                .split_whitespace()
                .map(|x| parse_scalar::<S>(x).ok_or_else(|| bad(&format!("`{x}` is not a rational"))))
                .collect::<Result<Vec<_>, _>>()?;
            if v.len() != n {
                return Err(bad(&format!("`{key}` needs {n} values")));
            }
            Ok(v)
        };
        let q = values(qpart, "q:", 4)?;
        let t = values(tpart, "t:", 3)?;
        let q: [S; 4] = q.try_into().expect("length checked");
        let t: [S; 3] = t.try_into().expect("length checked");
        Ok(QuaternionElement {
            quaternion: Quaternion::new(q)?,
            translation: t,
        })
    }
}

impl<S: Scalar> fmt::Display for QuaternionElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q: Vec<String> = self.quaternion.0.iter().map(ToString::to_string).collect();
        let t: Vec<String> = self.translation.iter().map(ToString::to_string).collect();
        write!(f, "q: {}; t: {}", q.join(" "), t.join(" "))
    }
}
