//! Exact arithmetic in the golden ring Z[φ] and the coplanarity predicate.
//!
//! Every platonic solid has a vertex embedding with coordinates of the form
//! `a + bφ` with integer `a`, `b`, where `φ² = φ + 1`. Working in that ring
//! makes the planarity test an exact zero test instead of an epsilon compare.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Floating-point value of φ used only for export and test oracles.
pub const PHI: f64 = 1.618_033_988_749_895;

/// Largest coordinate component accepted from user solids.
///
/// With `|a|, |b| <= COORDINATE_LIMIT` every triple product of coordinate
/// differences stays inside `i64`.
pub const COORDINATE_LIMIT: i64 = 1 << 17;

/// An element `a + bφ` of Z[φ].
///
/// Serialized as the two-element array `[a, b]`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct GoldenNumber {
    pub a: i64,
    pub b: i64,
}

impl From<[i64; 2]> for GoldenNumber {
    fn from([a, b]: [i64; 2]) -> Self {
        GoldenNumber { a, b }
    }
}

impl From<GoldenNumber> for [i64; 2] {
    fn from(x: GoldenNumber) -> Self {
        [x.a, x.b]
    }
}

impl From<i64> for GoldenNumber {
    fn from(a: i64) -> Self {
        GoldenNumber { a, b: 0 }
    }
}

impl GoldenNumber {
    pub const ZERO: GoldenNumber = GoldenNumber { a: 0, b: 0 };
    pub const ONE: GoldenNumber = GoldenNumber { a: 1, b: 0 };
    pub const PHI: GoldenNumber = GoldenNumber { a: 0, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        GoldenNumber { a, b }
    }

    pub const fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn checked_add(self, rhs: Self) -> Option<Self> {
        Some(GoldenNumber {
            a: self.a.checked_add(rhs.a)?,
            b: self.b.checked_add(rhs.b)?,
        })
    }

    pub fn checked_sub(self, rhs: Self) -> Option<Self> {
        Some(GoldenNumber {
            a: self.a.checked_sub(rhs.a)?,
            b: self.b.checked_sub(rhs.b)?,
        })
    }

    /// `(a₁ + b₁φ)(a₂ + b₂φ) = (a₁a₂ + b₁b₂) + (a₁b₂ + a₂b₁ + b₁b₂)φ`
    pub fn checked_mul(self, rhs: Self) -> Option<Self> {
        let bb = self.b.checked_mul(rhs.b)?;
        let a = self.a.checked_mul(rhs.a)?.checked_add(bb)?;
        let b = self
            .a
            .checked_mul(rhs.b)?
            .checked_add(rhs.a.checked_mul(self.b)?)?
            .checked_add(bb)?;
        Some(GoldenNumber { a, b })
    }

    pub fn checked_neg(self) -> Option<Self> {
        Some(GoldenNumber {
            a: self.a.checked_neg()?,
            b: self.b.checked_neg()?,
        })
    }

    /// Sign of the real number `a + bφ`, computed exactly.
    pub fn signum(self) -> i32 {
        surd_sign(self.a as i128, self.b as i128)
    }

    pub fn to_f64(self) -> f64 {
        self.a as f64 + self.b as f64 * PHI
    }

    /// Largest absolute component, used for scale checks.
    pub fn magnitude(self) -> i64 {
        self.a.saturating_abs().max(self.b.saturating_abs())
    }
}

/// Sign of `a + bφ`. Exact while `|a|, |b| < 2^62`, which covers differences
/// of any two golden numbers with components below `2^61`.
fn surd_sign(a: i128, b: i128) -> i32 {
    debug_assert!(a.abs() < 1 << 62 && b.abs() < 1 << 62);
    // 2(a + bφ) = s + b√5 with s = 2a + b.
    let s = 2 * a + b;
    if s >= 0 && b >= 0 {
        ((s | b) != 0) as i32
    } else if s <= 0 && b <= 0 {
        -1
    } else if (s > 0) == (s * s > 5 * b * b) {
        1
    } else {
        -1
    }
}

impl Ord for GoldenNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        let a = self.a as i128 - other.a as i128;
        let b = self.b as i128 - other.b as i128;
        surd_sign(a, b).cmp(&0)
    }
}

impl PartialOrd for GoldenNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for GoldenNumber {
    type Output = GoldenNumber;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs)
            .expect("golden number addition overflow")
    }
}

impl Sub for GoldenNumber {
    type Output = GoldenNumber;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(rhs)
            .expect("golden number subtraction overflow")
    }
}

impl Mul for GoldenNumber {
    type Output = GoldenNumber;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(rhs)
            .expect("golden number multiplication overflow")
    }
}

impl Neg for GoldenNumber {
    type Output = GoldenNumber;
    fn neg(self) -> Self {
        self.checked_neg().expect("golden number negation overflow")
    }
}

impl fmt::Debug for GoldenNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for GoldenNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}φ"),
            (a, b) if b < 0 => write!(f, "{a} - {}φ", -(b as i128)),
            (a, b) => write!(f, "{a} + {b}φ"),
        }
    }
}

/// A point (or vector) with exact golden-ring coordinates.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[GoldenNumber; 3]", into = "[GoldenNumber; 3]")]
pub struct Point3 {
    pub x: GoldenNumber,
    pub y: GoldenNumber,
    pub z: GoldenNumber,
}

impl From<[GoldenNumber; 3]> for Point3 {
    fn from([x, y, z]: [GoldenNumber; 3]) -> Self {
        Point3 { x, y, z }
    }
}

impl From<Point3> for [GoldenNumber; 3] {
    fn from(p: Point3) -> Self {
        [p.x, p.y, p.z]
    }
}

impl fmt::Debug for Point3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

impl Point3 {
    pub const fn new(x: GoldenNumber, y: GoldenNumber, z: GoldenNumber) -> Self {
        Point3 { x, y, z }
    }

    /// Point with integer coordinates.
    pub const fn int(x: i64, y: i64, z: i64) -> Self {
        Point3 {
            x: GoldenNumber::new(x, 0),
            y: GoldenNumber::new(y, 0),
            z: GoldenNumber::new(z, 0),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn checked_sub(&self, rhs: &Point3) -> Option<Point3> {
        Some(Point3 {
            x: self.x.checked_sub(rhs.x)?,
            y: self.y.checked_sub(rhs.y)?,
            z: self.z.checked_sub(rhs.z)?,
        })
    }

    pub fn checked_cross(&self, rhs: &Point3) -> Option<Point3> {
        let det = |p: GoldenNumber, q: GoldenNumber, r: GoldenNumber, s: GoldenNumber| {
            p.checked_mul(q)?.checked_sub(r.checked_mul(s)?)
        };
        Some(Point3 {
            x: det(self.y, rhs.z, self.z, rhs.y)?,
            y: det(self.z, rhs.x, self.x, rhs.z)?,
            z: det(self.x, rhs.y, self.y, rhs.x)?,
        })
    }

    pub fn checked_dot(&self, rhs: &Point3) -> Option<GoldenNumber> {
        self.x
            .checked_mul(rhs.x)?
            .checked_add(self.y.checked_mul(rhs.y)?)?
            .checked_add(self.z.checked_mul(rhs.z)?)
    }

    /// Squared Euclidean distance to `other`.
    pub fn checked_distance_squared(&self, other: &Point3) -> Option<GoldenNumber> {
        let d = self.checked_sub(other)?;
        d.checked_dot(&d)
    }

    pub fn to_f64(&self) -> [f64; 3] {
        [self.x.to_f64(), self.y.to_f64(), self.z.to_f64()]
    }

    pub fn magnitude(&self) -> i64 {
        self.x
            .magnitude()
            .max(self.y.magnitude())
            .max(self.z.magnitude())
    }
}

impl Sub for Point3 {
    type Output = Point3;
    fn sub(self, rhs: Point3) -> Point3 {
        self.checked_sub(&rhs).expect("point subtraction overflow")
    }
}

/// The scalar triple product `(u × v) · w`, computed exactly.
pub fn triple_product(u: &Point3, v: &Point3, w: &Point3) -> Result<GoldenNumber> {
    u.checked_cross(v)
        .and_then(|n| n.checked_dot(w))
        .ok_or(Error::Overflow)
}

/// Whether all `points` lie in one common plane.
///
/// The reference triangle is the first affinely independent triple found by
/// scanning in order: `p₀` is the first point, `p₁` the first point distinct
/// from it, `p₂` the first point off the line through them. Every point is
/// then tested against the normal `(p₁ - p₀) × (p₂ - p₀)`.
///
/// Panics if the arithmetic overflows; solids accepted by
/// [`crate::solids::Solid::new`] keep coordinates small enough that this
/// cannot happen. Use [`try_coplanar`] for arbitrary input.
pub fn coplanar(points: &[Point3]) -> bool {
    try_coplanar(points).expect("coordinate scale too large for exact coplanarity test")
}

/// Overflow-checked form of [`coplanar`].
pub fn try_coplanar(points: &[Point3]) -> Result<bool> {
    debug_assert!(!points.is_empty(), "coplanar needs at least one point");
    let mut fit = PlaneFit::default();
    for p in points {
        if !fit.push(p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Incremental coplanarity check over a stream of points, using the same
/// reference-triangle selection as [`coplanar`].
#[derive(Clone, Debug, Default)]
pub struct PlaneFit {
    origin: Option<Point3>,
    direction: Option<Point3>,
    normal: Option<Point3>,
}

impl PlaneFit {
    /// Adds a point. Returns `Ok(false)` once the points seen so far no
    /// longer lie in a common plane.
    pub fn push(&mut self, p: &Point3) -> Result<bool> {
        let Some(origin) = &self.origin else {
            self.origin = Some(*p);
            return Ok(true);
        };
        let d = p.checked_sub(origin).ok_or(Error::Overflow)?;
        match (&self.direction, &self.normal) {
            (None, _) => {
                if !d.is_zero() {
                    self.direction = Some(d);
                }
                Ok(true)
            }
            (Some(v1), None) => {
                let n = v1.checked_cross(&d).ok_or(Error::Overflow)?;
                if !n.is_zero() {
                    self.normal = Some(n);
                }
                Ok(true)
            }
            (Some(_), Some(n)) => Ok(n.checked_dot(&d).ok_or(Error::Overflow)?.is_zero()),
        }
    }
}
