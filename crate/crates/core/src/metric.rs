//! Plane metrics, the β parameter, and lens regions.
//!
//! A lens is the region whose emptiness decides a β-skeleton edge. For
//! `0 < β < ∞` it is the intersection of two metric discs; `β = 0` and
//! `β = ∞` use the limiting shapes (the closed segment and the slab between
//! the two perpendiculars through the generators).

use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative tolerance applied to every geometric equality test. Scaled by
/// the generator distance of the lens in question.
pub const EPS_REL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn try_new(x: f64, y: f64) -> Result<Self> {
        if x.is_finite() && y.is_finite() {
            Ok(Self { x, y })
        } else {
            Err(Error::NonFinite)
        }
    }

    pub fn dot(self, other: Point2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn cross(self, other: Point2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm2(self) -> f64 {
        self.x.hypot(self.y)
    }

    /// Counter-clockwise perpendicular.
    pub fn perp(self) -> Point2 {
        Point2::new(-self.y, self.x)
    }

    pub fn lerp(self, other: Point2, t: f64) -> Point2 {
        Point2::new(self.x + (other.x - self.x) * t, self.y + (other.y - self.y) * t)
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, o: Point2) -> Point2 {
        Point2::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, o: Point2) -> Point2 {
        Point2::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    fn mul(self, s: f64) -> Point2 {
        Point2::new(self.x * s, self.y * s)
    }
}

impl From<(f64, f64)> for Point2 {
    fn from((x, y): (f64, f64)) -> Self {
        Point2::new(x, y)
    }
}

/// Which plane metric is in force.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Metric {
    /// `l_p` with `1 < p < ∞`.
    Lp(f64),
    L1,
    Linf,
}

impl Metric {
    pub const L2: Metric = Metric::Lp(2.0);

    pub fn lp(p: f64) -> Result<Metric> {
        if p.is_finite() && p > 1.0 {
            Ok(Metric::Lp(p))
        } else {
            Err(Error::InvalidMetric(format!(
                "l_p requires 1 < p < inf, got {p}"
            )))
        }
    }

    pub fn is_euclidean(self) -> bool {
        matches!(self, Metric::Lp(p) if p == 2.0)
    }

    /// Norm of the vector `(dx, dy)`.
    #[inline]
    pub fn norm(self, dx: f64, dy: f64) -> f64 {
        let (ax, ay) = (dx.abs(), dy.abs());
        match self {
            Metric::L1 => ax + ay,
            Metric::Linf => ax.max(ay),
            Metric::Lp(p) if p == 2.0 => ax.hypot(ay),
            Metric::Lp(p) => {
                let m = ax.max(ay);
                if m == 0.0 {
                    return 0.0;
                }
                // scale first so that large/small coordinates do not overflow
                let (sx, sy) = (ax / m, ay / m);
                m * (sx.powf(p) + sy.powf(p)).powf(1.0 / p)
            }
        }
    }

    #[inline]
    pub fn distance(self, a: Point2, b: Point2) -> f64 {
        self.norm(a.x - b.x, a.y - b.y)
    }
}

/// Distance between two points under `metric`.
pub fn distance(metric: Metric, a: Point2, b: Point2) -> f64 {
    metric.distance(a, b)
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Metric::Lp(p) => write!(f, "lp:{p}"),
            Metric::L1 => f.write_str("l1"),
            Metric::Linf => f.write_str("linf"),
        }
    }
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Metric> {
        match s.trim().to_ascii_lowercase().as_str() {
            "l1" => Ok(Metric::L1),
            "linf" | "l_inf" => Ok(Metric::Linf),
            "l2" => Ok(Metric::L2),
            other => {
                let p = other
                    .strip_prefix("lp:")
                    .ok_or_else(|| Error::InvalidMetric(s.to_string()))?;
                let p: f64 = p
                    .parse()
                    .map_err(|_| Error::InvalidMetric(s.to_string()))?;
                Metric::lp(p)
            }
        }
    }
}

/// The skeleton parameter: a non-negative real or infinity.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub enum Beta {
    Finite(f64),
    Infinity,
}

impl Beta {
    pub const ZERO: Beta = Beta::Finite(0.0);

    pub fn new(value: f64) -> Result<Beta> {
        if value.is_nan() || value < 0.0 {
            Err(Error::InvalidBeta(format!("{value}")))
        } else if value.is_infinite() {
            Ok(Beta::Infinity)
        } else {
            Ok(Beta::Finite(value))
        }
    }

    /// Numeric value; `f64::INFINITY` for `Beta::Infinity`.
    pub fn value(self) -> f64 {
        match self {
            Beta::Finite(b) => b,
            Beta::Infinity => f64::INFINITY,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Beta::ZERO
    }

    pub fn is_infinite(self) -> bool {
        self == Beta::Infinity
    }
}

impl fmt::Display for Beta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Beta::Finite(b) => write!(f, "{b}"),
            Beta::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for Beta {
    type Err = Error;

    fn from_str(s: &str) -> Result<Beta> {
        match s.trim().to_ascii_lowercase().as_str() {
            "inf" | "infinity" | "∞" => Ok(Beta::Infinity),
            v => v
                .parse::<f64>()
                .map_err(|_| Error::InvalidBeta(s.to_string()))
                .and_then(Beta::new),
        }
    }
}

/// Whether the lens boundary belongs to the lens.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Open,
    Closed,
}

impl Variant {
    /// Closed below β = 2 (the Gabriel convention), open from β = 2 on (the
    /// relative neighbourhood graph convention).
    pub fn default_for(beta: Beta) -> Variant {
        if beta.value() >= 2.0 {
            Variant::Open
        } else {
            Variant::Closed
        }
    }

    /// Tie-aware `value ◁ bound`: within `eps`, closed says inside and
    /// open says outside.
    #[inline]
    pub fn within(self, value: f64, bound: f64, eps: f64) -> bool {
        match self {
            Variant::Closed => value <= bound + eps,
            Variant::Open => value < bound - eps,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Open => "open",
            Variant::Closed => "closed",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Variant> {
        match s.trim().to_ascii_lowercase().as_str() {
            "open" => Ok(Variant::Open),
            "closed" => Ok(Variant::Closed),
            _ => Err(Error::Parse(format!("unknown variant {s}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LensForm {
    /// β = 0: the segment between the generators.
    Segment,
    /// 0 < β < ∞: intersection of two discs of equal radius.
    TwoDiscs { c1: Point2, c2: Point2, radius: f64 },
    /// β = ∞: the slab between the perpendiculars through the generators.
    Strip,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lens {
    pub metric: Metric,
    pub form: LensForm,
    pub v1: Point2,
    pub v2: Point2,
    pub beta: Beta,
    /// Absolute tie tolerance, `EPS_REL · d(v1, v2)`.
    pub eps: f64,
}

/// Builds the lens of `(v1, v2)` for an `l_p` metric with `1 < p < ∞`.
///
/// For `β ≥ 1` the centers are `(1 - β/2)·v1 + (β/2)·v2` and its mirror, so
/// `d(v1, c1) = d(v2, c2) = β·d/2`. For `0 < β < 1` both disc boundaries pass
/// through both generators; `c1` lies to the left of the directed line
/// `v1 → v2`.
pub fn lens_construct(metric: Metric, v1: Point2, v2: Point2, beta: Beta) -> Result<Lens> {
    if !matches!(metric, Metric::Lp(_)) {
        return Err(Error::UnsupportedMetric(format!(
            "{metric}: centers are not unique, use the l1 lens families"
        )));
    }
    let d = metric.distance(v1, v2);
    if d == 0.0 {
        return Err(Error::DegenerateGenerators);
    }
    let form = match beta {
        Beta::Infinity => LensForm::Strip,
        Beta::Finite(b) if b == 0.0 => LensForm::Segment,
        Beta::Finite(b) if b >= 1.0 => LensForm::TwoDiscs {
            c1: v1.lerp(v2, b / 2.0),
            c2: v2.lerp(v1, b / 2.0),
            radius: b * d / 2.0,
        },
        Beta::Finite(b) => {
            let radius = d / (2.0 * b);
            LensForm::TwoDiscs {
                c1: equidistant_center(metric, v1, v2, radius, true),
                c2: equidistant_center(metric, v1, v2, radius, false),
                radius,
            }
        }
    };
    Ok(Lens {
        metric,
        form,
        v1,
        v2,
        beta,
        eps: EPS_REL * d,
    })
}

/// Point `c` with `d(c, v1) = d(c, v2) = radius` (requires `radius > d/2`),
/// on the left (`left = true`) or right of `v1 → v2`.
///
/// Walks the metric circle of `radius` around `v1`; the distance to `v2`
/// rises monotonically from `radius - d` to `radius + d` over the half turn,
/// so a bracketed root in the angle is unique.
fn equidistant_center(metric: Metric, v1: Point2, v2: Point2, radius: f64, left: bool) -> Point2 {
    let dir = v2 - v1;
    let theta0 = dir.y.atan2(dir.x);
    let sign = if left { 1.0 } else { -1.0 };
    let on_circle = |theta: f64| {
        let (s, c) = theta.sin_cos();
        let unit = metric.norm(c, s);
        v1 + Point2::new(c, s) * (radius / unit)
    };
    let residual = |t: f64| metric.distance(on_circle(theta0 + sign * t), v2) - radius;
    let t = bracketed_root(residual, 0.0, std::f64::consts::PI, 1e-15);
    on_circle(theta0 + sign * t)
}

/// Root of `f` in `[a, b]` given `f(a) < 0 < f(b)`. Illinois-style false
/// position with a bisection step whenever progress stalls.
pub(crate) fn bracketed_root(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    let (mut lo, mut hi) = (a, b);
    let (mut flo, mut fhi) = (f(lo), f(hi));
    if flo == 0.0 {
        return lo;
    }
    if fhi == 0.0 {
        return hi;
    }
    debug_assert!(flo < 0.0 && fhi > 0.0, "root not bracketed");
    let mut side = 0i8;
    for _ in 0..200 {
        let width = hi - lo;
        if width <= tol * (1.0 + lo.abs().max(hi.abs())) {
            break;
        }
        let mut x = (lo * fhi - hi * flo) / (fhi - flo);
        if !(x > lo && x < hi) {
            x = 0.5 * (lo + hi);
        }
        let fx = f(x);
        if fx == 0.0 {
            return x;
        }
        if fx < 0.0 {
            lo = x;
            flo = fx;
            if side == -1 {
                fhi *= 0.5;
            }
            side = -1;
        } else {
            hi = x;
            fhi = fx;
            if side == 1 {
                flo *= 0.5;
            }
            side = 1;
        }
        if hi - lo > 0.5 * width {
            // false position crawled from one side: force a bisection
            let mid = 0.5 * (lo + hi);
            let fm = f(mid);
            if fm < 0.0 {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
                fhi = fm;
            }
            side = 0;
        }
    }
    if flo.abs() < fhi.abs() {
        lo
    } else {
        hi
    }
}

impl Lens {
    /// Membership of `q` with the tie rule of `variant`.
    pub fn contains(&self, q: Point2, variant: Variant) -> bool {
        match self.form {
            LensForm::TwoDiscs { c1, c2, radius } => {
                variant.within(self.metric.distance(q, c1), radius, self.eps)
                    && variant.within(self.metric.distance(q, c2), radius, self.eps)
            }
            LensForm::Segment => on_segment(self.v1, self.v2, q, variant),
            LensForm::Strip => in_strip(self.v1, self.v2, q, variant),
        }
    }

    /// Largest violation of the center distance conditions, relative to
    /// `d(v1, v2)`. Zero for the `Segment` and `Strip` forms.
    pub fn center_residual(&self) -> f64 {
        let LensForm::TwoDiscs { c1, c2, radius } = self.form else {
            return 0.0;
        };
        let m = self.metric;
        let d = m.distance(self.v1, self.v2);
        let b = self.beta.value();
        let errs = if b >= 1.0 {
            [
                m.distance(c1, c2) - (b - 1.0) * d,
                m.distance(self.v1, c2) - (b - 2.0).abs() * d / 2.0,
                m.distance(self.v2, c1) - (b - 2.0).abs() * d / 2.0,
                radius - b * d / 2.0,
            ]
        } else {
            [
                m.distance(c1, self.v1) - radius,
                m.distance(c1, self.v2) - radius,
                m.distance(c2, self.v1) - radius,
                m.distance(c2, self.v2) - radius,
            ]
        };
        errs.iter().fold(0.0f64, |acc, e| acc.max(e.abs())) / d
    }
}

/// `point_in_lens` from the operation list.
pub fn point_in_lens(lens: &Lens, q: Point2, variant: Variant) -> bool {
    lens.contains(q, variant)
}

/// Euclidean projection parameter of `q` on `v1 → v2`.
fn projection(v1: Point2, v2: Point2, q: Point2) -> f64 {
    let dir = v2 - v1;
    (q - v1).dot(dir) / dir.dot(dir)
}

fn in_unit_range(t: f64, variant: Variant) -> bool {
    match variant {
        Variant::Closed => (-EPS_REL..=1.0 + EPS_REL).contains(&t),
        Variant::Open => t > EPS_REL && t < 1.0 - EPS_REL,
    }
}

fn on_segment(v1: Point2, v2: Point2, q: Point2, variant: Variant) -> bool {
    let dir = v2 - v1;
    let len = dir.norm2();
    let off = (q - v1).cross(dir).abs() / len;
    off <= EPS_REL * len && in_unit_range(projection(v1, v2, q), variant)
}

fn in_strip(v1: Point2, v2: Point2, q: Point2, variant: Variant) -> bool {
    in_unit_range(projection(v1, v2, q), variant)
}

/// Membership in the limiting lens for `β ∈ {0, ∞}` (closed).
///
/// `β = 0` is the straight segment (the unique geodesic for `1 < p < ∞`);
/// `β = ∞` is the Euclidean slab between the perpendiculars through the
/// generators for every `l_p`. See [`large_beta_membership`] for the
/// large-β approximation, which differs from the slab when `p ≠ 2`.
pub fn limit_membership(
    metric: Metric,
    v1: Point2,
    v2: Point2,
    beta: Beta,
    q: Point2,
) -> Result<bool> {
    if metric.distance(v1, v2) == 0.0 {
        return Err(Error::DegenerateGenerators);
    }
    match beta {
        Beta::Infinity => Ok(in_strip(v1, v2, q, Variant::Closed)),
        b if b.is_zero() => Ok(on_segment(v1, v2, q, Variant::Closed)),
        b => Err(Error::InvalidBeta(format!(
            "limit membership needs beta 0 or inf, got {b}"
        ))),
    }
}

/// Membership in the finite lens for a large β, as a stand-in for the
/// set-limit as β → ∞.
pub fn large_beta_membership(
    metric: Metric,
    v1: Point2,
    v2: Point2,
    big_beta: f64,
    q: Point2,
) -> Result<bool> {
    let lens = lens_construct(metric, v1, v2, Beta::new(big_beta)?)?;
    Ok(lens.contains(q, Variant::Closed))
}
