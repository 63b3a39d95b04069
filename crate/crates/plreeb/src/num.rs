//! Exact rational scalars and tiny planar vector helpers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact scalar used for all image coordinates.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses the "p/q" (or plain "p") serialization of a rational.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((num, den)) => {
            let n: BigInt = num.parse().ok()?;
            let d: BigInt = den.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(BigRational::from_integer(n))
        }
    }
}

/// Serializes a rational as "p" or "p/q".
pub fn format_q(x: &Q) -> String {
    if x.denom().is_one() {
        format!("{}", x.numer())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// A point or direction in the exact rational plane.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct P2 {
    pub x: Q,
    pub y: Q,
}

impl P2 {
    pub fn new(x: Q, y: Q) -> Self {
        P2 { x, y }
    }

    pub fn from_i64(x: i64, y: i64) -> Self {
        P2::new(q(x), q(y))
    }

    pub fn zero() -> Self {
        P2::new(Q::zero(), Q::zero())
    }

    pub fn add(&self, o: &P2) -> P2 {
        P2::new(&self.x + &o.x, &self.y + &o.y)
    }

    pub fn sub(&self, o: &P2) -> P2 {
        P2::new(&self.x - &o.x, &self.y - &o.y)
    }

    pub fn scale(&self, s: &Q) -> P2 {
        P2::new(&self.x * s, &self.y * s)
    }

    pub fn dot(&self, o: &P2) -> Q {
        &self.x * &o.x + &self.y * &o.y
    }

    pub fn cross(&self, o: &P2) -> Q {
        &self.x * &o.y - &self.y * &o.x
    }

    /// Counterclockwise quarter turn.
    pub fn perp(&self) -> P2 {
        P2::new(-self.y.clone(), self.x.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// Linear interpolation self + t * (other - self).
    pub fn lerp(&self, o: &P2, t: &Q) -> P2 {
        self.add(&o.sub(self).scale(t))
    }
}

/// Sign of `orient(a, b, c)`: +1 if the triangle a,b,c turns counterclockwise.
pub fn orient_sign(a: &P2, b: &P2, c: &P2) -> i32 {
    let v = b.sub(a).cross(&c.sub(a));
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

/// Exact point-in-convex-hull test against an axis-aligned rectangle is kept
/// in `plmaps`; here only the generic hull machinery lives.
///
/// Monotone-chain convex hull of exact points (returns CCW, no duplicates).
pub fn convex_hull(points: &[P2]) -> Vec<P2> {
    let mut pts: Vec<P2> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<P2> = Vec::new();
    for p in &pts {
        while lower.len() >= 2
            && orient_sign(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= 0
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<P2> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && orient_sign(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= 0
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.is_empty() {
        // all points collinear: keep extreme pair
        lower = vec![pts[0].clone(), pts[pts.len() - 1].clone()];
        lower.dedup();
    }
    lower
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_round_trip() {
        for s in ["3", "-7/2", "0", "22/7"] {
            let v = parse_q(s).unwrap();
            assert_eq!(parse_q(&format_q(&v)).unwrap(), v);
        }
        assert!(parse_q("1/0").is_none());
        assert!(parse_q("x").is_none());
    }

    #[test]
    fn hull_of_square() {
        let pts = vec![
            P2::from_i64(0, 0),
            P2::from_i64(1, 0),
            P2::from_i64(1, 1),
            P2::from_i64(0, 1),
            P2::new(qr(1, 2), qr(1, 2)),
        ];
        let hull = convex_hull(&pts);
        assert_eq!(hull.len(), 4);
    }

    #[test]
    fn hull_collinear() {
        let pts = vec![P2::from_i64(0, 0), P2::from_i64(1, 1), P2::from_i64(2, 2)];
        let hull = convex_hull(&pts);
        assert_eq!(hull.len(), 2);
    }
}
