//! The special S6-orbits in the hyperplane `sum x_i = 0`: 76 points in five
//! orbits, the last one over Q(sqrt(-3)).

use std::sync::OnceLock;

use crate::algebra::Scalar;
use crate::groups::{orbit, Mode, Point, Subgroup};

/// Primitive cube root of unity `(-1 + sqrt(-3))/2`.
pub fn omega() -> Scalar {
    (Scalar::int(-1) + Scalar::sqrt_of(-3)) / Scalar::int(2)
}

#[derive(Clone, Debug)]
pub struct NamedOrbit {
    pub name: &'static str,
    pub representative: Point,
    /// Sorted orbit under the natural action.
    pub points: Vec<Point>,
}

#[derive(Debug)]
pub struct OrbitCatalog {
    pub orbits: Vec<NamedOrbit>,
}

impl OrbitCatalog {
    pub fn get(&self, name: &str) -> Option<&NamedOrbit> {
        self.orbits.iter().find(|o| o.name.eq_ignore_ascii_case(name))
    }

    pub fn total_points(&self) -> usize {
        self.orbits.iter().map(|o| o.points.len()).sum()
    }

    /// Every catalog point with the name of its orbit.
    pub fn all_points(&self) -> impl Iterator<Item = (&'static str, &Point)> {
        self.orbits.iter().flat_map(|o| o.points.iter().map(move |p| (o.name, p)))
    }
}

fn representatives() -> Vec<(&'static str, Point)> {
    let w = omega();
    let w2 = &w * &w;
    let one = Scalar::one();
    vec![
        ("Sigma6", Point::from_ints(&[5, -1, -1, -1, -1, -1])),
        ("Sigma10", Point::from_ints(&[1, 1, 1, -1, -1, -1])),
        ("Sigma15", Point::from_ints(&[1, -1, 0, 0, 0, 0])),
        ("Sigma30", Point::new(vec![one.clone(), one, w.clone(), w, w2.clone(), w2]).expect("nonzero")),
        ("Upsilon15", Point::from_ints(&[2, 2, -1, -1, -1, -1])),
    ]
}

/// The cached orbit catalog.
pub fn orbit_catalog() -> &'static OrbitCatalog {
    static C: OnceLock<OrbitCatalog> = OnceLock::new();
    C.get_or_init(|| {
        let s6 = Subgroup::symmetric();
        let orbits = representatives()
            .into_iter()
            .map(|(name, rep)| {
                let points = orbit(&s6, &rep, Mode::Natural).expect("six coordinates").into_iter().collect();
                NamedOrbit { name, representative: rep, points }
            })
            .collect();
        OrbitCatalog { orbits }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_sizes() {
        let c = orbit_catalog();
        let sizes: Vec<usize> = c.orbits.iter().map(|o| o.points.len()).collect();
        assert_eq!(sizes, vec![6, 10, 15, 30, 15]);
        assert_eq!(c.total_points(), 76);
    }
}
