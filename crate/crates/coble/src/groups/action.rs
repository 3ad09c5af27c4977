//! Permutation actions on projective points with exact coordinates.

use std::collections::BTreeSet;

use super::perm::Perm;
use super::subgroup::Subgroup;
use super::GroupError;
use crate::algebra::Scalar;

/// How a permutation acts on a point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// `(x_1..x_6) -> (x_g(1)..x_g(6))`, with `x_0` (if present) fixed.
    Natural,
    /// As `Natural`, with `x_0` multiplied by the sign of `g`.
    Twisted,
}

/// A point of projective space; coordinates scaled so the first nonzero one is 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Point(pub Vec<Scalar>);

impl Point {
    pub fn new(coords: Vec<Scalar>) -> Result<Point, GroupError> {
        let Some(lead) = coords.iter().find(|c| !c.is_zero()) else {
            return Err(GroupError::ZeroPoint);
        };
        let inv = lead.inv().expect("nonzero");
        Ok(Point(coords.iter().map(|c| c * &inv).collect()))
    }

    pub fn from_ints(c: &[i64]) -> Point {
        Point::new(c.iter().map(|&x| Scalar::int(x)).collect()).expect("nonzero point")
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }
}

impl std::fmt::Display for Point {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(":"))
    }
}

impl PartialOrd for Point {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Point {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        self.to_string().cmp(&o.to_string())
    }
}

/// Acts on a 6-coordinate point, or a 7-coordinate point with `x_0` first.
pub fn act_on_point(g: &Perm, p: &Point, mode: Mode) -> Result<Point, GroupError> {
    let c = p.coords();
    let (x0, xs) = match c.len() {
        6 => (None, c),
        7 => (Some(&c[0]), &c[1..]),
        n => return Err(GroupError::Dimension(n)),
    };
    let mut out = Vec::with_capacity(c.len());
    if let Some(x0) = x0 {
        out.push(match mode {
            Mode::Twisted if g.sign() < 0 => -x0,
            _ => x0.clone(),
        });
    }
    out.extend((0..6).map(|i| xs[g.at(i)].clone()));
    Point::new(out)
}

/// The Galois involution `x_0 -> -x_0` on a 7-coordinate point.
pub fn galois(p: &Point) -> Result<Point, GroupError> {
    if p.dim() != 7 {
        return Err(GroupError::Dimension(p.dim()));
    }
    let mut c = p.0.clone();
    c[0] = -&c[0];
    Point::new(c)
}

/// The orbit of `p` under `h`, as a sorted set.
pub fn orbit(h: &Subgroup, p: &Point, mode: Mode) -> Result<BTreeSet<Point>, GroupError> {
    let mut out = BTreeSet::new();
    for g in h.elements() {
        out.insert(act_on_point(&g, p, mode)?);
    }
    Ok(out)
}

/// Order of the stabilizer of `p` in `h`.
pub fn stabilizer_order(h: &Subgroup, p: &Point, mode: Mode) -> Result<usize, GroupError> {
    let mut n = 0;
    for g in h.elements() {
        if act_on_point(&g, p, mode)? == *p {
            n += 1;
        }
    }
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn natural_action_rescales() {
        let p = Point::from_ints(&[1, -1, 0, 0, 0, 0]);
        let q = act_on_point(&Perm::c("(1 2)"), &p, Mode::Natural).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn orbit_sizes() {
        let s6 = Subgroup::symmetric();
        let p = Point::from_ints(&[1, 1, 1, -1, -1, -1]);
        let orb = orbit(&s6, &p, Mode::Natural).unwrap();
        assert_eq!(orb.len(), 10);
        assert_eq!(orb.len() * stabilizer_order(&s6, &p, Mode::Natural).unwrap(), 720);
        let q = Point::from_ints(&[2, 2, -1, -1, -1, -1]);
        assert_eq!(orbit(&s6, &q, Mode::Natural).unwrap().len(), 15);
    }

    #[test]
    fn twisted_negates_x0() {
        let p = Point::from_ints(&[1, 1, 2, 3, 4, 5, 6]);
        let q = act_on_point(&Perm::c("(1 2)"), &p, Mode::Twisted).unwrap();
        assert_eq!(q, Point::from_ints(&[-1, 2, 1, 3, 4, 5, 6]));
    }
}
