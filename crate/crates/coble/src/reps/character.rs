//! Class functions stored element by element on a subgroup of S6.

use std::fmt;

use num_traits::Signed;

use super::partition::{mn_character, Partition};
use super::RepError;
use crate::algebra::Scalar;
use crate::groups::{outer_automorphism, Perm, Subgroup, Table};

/// Values of a class function, aligned with `group.indices()`.
#[derive(Clone)]
pub struct ClassFunction {
    group: Subgroup,
    values: Vec<Scalar>,
}

impl fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ClassFunction(order {}, dim {})", self.group.order(), self.values[0])
    }
}

/// Complex conjugation: the Galois conjugate for imaginary quadratic fields.
fn cconj(x: &Scalar) -> Scalar {
    if x.field() < 0 {
        x.conj()
    } else {
        x.clone()
    }
}

impl ClassFunction {
    pub fn new(group: &Subgroup, values: Vec<Scalar>) -> Result<ClassFunction, RepError> {
        if values.len() != group.order() {
            return Err(RepError::Carrier(format!("{} values for a group of order {}", values.len(), group.order())));
        }
        Ok(ClassFunction { group: group.clone(), values })
    }

    pub fn from_fn(group: &Subgroup, f: impl Fn(&Perm) -> Scalar) -> ClassFunction {
        let values = group.elements().iter().map(f).collect();
        ClassFunction { group: group.clone(), values }
    }

    pub fn trivial(group: &Subgroup) -> ClassFunction {
        ClassFunction::from_fn(group, |_| Scalar::one())
    }

    pub fn sign(group: &Subgroup) -> ClassFunction {
        ClassFunction::from_fn(group, |g| Scalar::int(g.sign() as i64))
    }

    /// `chi_lambda` of S_n (n = |lambda|) evaluated through the cycle type of
    /// each element on the points {1..n}; elements must fix n+1..6.
    pub fn symmetric(group: &Subgroup, lambda: &Partition) -> Result<ClassFunction, RepError> {
        let n = lambda.weight();
        let mut values = Vec::with_capacity(group.order());
        for g in group.elements() {
            if (n..6).any(|i| g.at(i) != i) {
                return Err(RepError::Carrier(format!("{g} moves points beyond {n}")));
            }
            let mut ct: Vec<usize> = g.cycle_type();
            for _ in n..6 {
                let pos = ct.iter().rposition(|&x| x == 1).expect("fixed point");
                ct.remove(pos);
            }
            values.push(Scalar::int(mn_character(lambda, &ct)?));
        }
        Ok(ClassFunction { group: group.clone(), values })
    }

    pub fn group(&self) -> &Subgroup {
        &self.group
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    /// Value at `g`, which must lie in the carrier.
    pub fn at(&self, g: usize) -> Option<&Scalar> {
        self.group.indices().binary_search(&g).ok().map(|k| &self.values[k])
    }

    pub fn dim(&self) -> &Scalar {
        &self.values[0]
    }

    fn same_carrier(&self, o: &ClassFunction) -> Result<(), RepError> {
        if self.group != o.group {
            return Err(RepError::Carrier("class functions live on different groups".into()));
        }
        Ok(())
    }

    pub fn add(&self, o: &ClassFunction) -> Result<ClassFunction, RepError> {
        self.same_carrier(o)?;
        Ok(ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().zip(&o.values).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, o: &ClassFunction) -> Result<ClassFunction, RepError> {
        self.same_carrier(o)?;
        Ok(ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().zip(&o.values).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn mul(&self, o: &ClassFunction) -> Result<ClassFunction, RepError> {
        self.same_carrier(o)?;
        Ok(ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().zip(&o.values).map(|(a, b)| a * b).collect(),
        })
    }

    pub fn scale(&self, c: &Scalar) -> ClassFunction {
        ClassFunction { group: self.group.clone(), values: self.values.iter().map(|v| v * c).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    /// Whether the function is constant on conjugacy classes of its carrier.
    pub fn is_class_function(&self) -> bool {
        let t = Table::get();
        let idx = self.group.indices();
        let gens: Vec<usize> = self.group.generators().iter().map(|g| g.index()).collect();
        idx.iter().enumerate().all(|(k, &g)| gens.iter().all(|&h| self.at(t.conj(h, g)) == Some(&self.values[k])))
    }

    /// `<self, o>` = average of `self(g) * conj(o(g))`.
    pub fn inner(&self, o: &ClassFunction) -> Result<Scalar, RepError> {
        self.same_carrier(o)?;
        let mut acc = Scalar::zero();
        for (a, b) in self.values.iter().zip(&o.values) {
            acc = &acc + &(a * &cconj(b));
        }
        Ok(acc / Scalar::int(self.group.order() as i64))
    }

    /// Multiplicity of the trivial character, checked to be a nonnegative integer.
    pub fn invariant_rank(&self) -> Result<u32, RepError> {
        let avg = self.values.iter().fold(Scalar::zero(), |acc, v| &acc + v) / Scalar::int(self.group.order() as i64);
        as_multiplicity(&avg)
    }

    pub fn restrict(&self, h: &Subgroup) -> Result<ClassFunction, RepError> {
        if !h.is_subgroup_of(&self.group) {
            return Err(RepError::Carrier("restriction to a non-subgroup".into()));
        }
        let values = h.indices().iter().map(|&g| self.at(g).expect("contained").clone()).collect();
        Ok(ClassFunction { group: h.clone(), values })
    }

    /// Induction to `g` over left coset representatives of the carrier.
    pub fn induce(&self, g: &Subgroup) -> Result<ClassFunction, RepError> {
        if !self.group.is_subgroup_of(g) {
            return Err(RepError::Carrier("induction from a group not contained in the target".into()));
        }
        let t = Table::get();
        let mut covered = crate::groups::ElemSet::empty();
        let mut reps = Vec::new();
        for &x in g.indices() {
            if covered.contains(x) {
                continue;
            }
            reps.push(x);
            for &h in self.group.indices() {
                covered.insert(t.mul(x, h));
            }
        }
        let values = g
            .indices()
            .iter()
            .map(|&y| {
                reps.iter().fold(Scalar::zero(), |acc, &x| {
                    let c = t.mul(t.mul(t.inv(x), y), x);
                    match self.at(c) {
                        Some(v) => &acc + v,
                        None => acc,
                    }
                })
            })
            .collect();
        Ok(ClassFunction { group: g.clone(), values })
    }

    /// Character of the k-th symmetric power, by the Newton recursion.
    pub fn sym_power(&self, k: usize) -> ClassFunction {
        let t = Table::get();
        let idx = self.group.indices();
        let values = idx
            .iter()
            .map(|&g| {
                let mut powers = vec![g];
                for m in 1..k {
                    powers.push(t.mul(powers[m - 1], g));
                }
                let chi: Vec<Scalar> = powers.iter().map(|&p| self.at(p).expect("closed").clone()).collect();
                let mut sym = vec![Scalar::one()];
                for j in 1..=k {
                    let mut acc = Scalar::zero();
                    for m in 1..=j {
                        acc = &acc + &(&chi[m - 1] * &sym[j - m]);
                    }
                    sym.push(acc / Scalar::int(j as i64));
                }
                sym[k].clone()
            })
            .collect();
        ClassFunction { group: self.group.clone(), values }
    }

    /// Product with the sign character.
    pub fn sign_twist(&self) -> ClassFunction {
        let t = Table::get();
        let values = self
            .group
            .indices()
            .iter()
            .zip(&self.values)
            .map(|(&g, v)| if t.sign(g) < 0 { -v } else { v.clone() })
            .collect();
        ClassFunction { group: self.group.clone(), values }
    }

    /// `chi o alpha` for a class function on all of S6.
    pub fn outer_twist(&self) -> Result<ClassFunction, RepError> {
        if self.group.order() != 720 {
            return Err(RepError::Carrier("outer twist needs the full symmetric group".into()));
        }
        let a = outer_automorphism();
        let values = self.group.indices().iter().map(|&g| self.at(a.apply_index(g)).unwrap().clone()).collect();
        Ok(ClassFunction { group: self.group.clone(), values })
    }

    /// Multiplicities against an orthonormal list of irreducibles; fails on a
    /// non-integral or negative multiplicity or a nonzero residual.
    pub fn decompose(&self, table: &[(String, ClassFunction)]) -> Result<Vec<(String, u32)>, RepError> {
        let mut rest = self.clone();
        let mut out = Vec::new();
        for (label, chi) in table {
            let m = as_multiplicity(&self.inner(chi)?)?;
            if m > 0 {
                rest = rest.sub(&chi.scale(&Scalar::int(m as i64)))?;
                out.push((label.clone(), m));
            }
        }
        if !rest.is_zero() {
            return Err(RepError::Residual);
        }
        Ok(out)
    }
}

fn as_multiplicity(x: &Scalar) -> Result<u32, RepError> {
    let q = x.as_rational().ok_or_else(|| RepError::NotIntegral(x.to_string()))?;
    if !q.is_integer() || q.is_negative() {
        return Err(RepError::NotIntegral(x.to_string()));
    }
    q.to_integer().try_into().map_err(|_| RepError::NotIntegral(x.to_string()))
}

/// Renders a decomposition as `R(6) + 2*R(3,3)`.
pub fn format_decomposition(d: &[(String, u32)]) -> String {
    if d.is_empty() {
        return "0".into();
    }
    d.iter()
        .map(|(l, m)| if *m == 1 { l.clone() } else { format!("{m}*{l}") })
        .collect::<Vec<_>>()
        .join(" + ")
}
