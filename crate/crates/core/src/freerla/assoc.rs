//! Truncated free associative algebra on `r` letters, used as the
//! restricted enveloping algebra of the truncated free restricted Lie
//! algebra. A word of length `d` is stored as its base-`r` code with the
//! first letter most significant, so lexicographic order on words of one
//! length is numeric order on codes.

use std::collections::{BTreeMap, HashMap};

use crate::field::{FiniteField, Fq};

/// Homogeneous polynomial: `(word code, coefficient)` pairs sorted by code.
pub(crate) type Homog = Vec<(u64, Fq)>;

#[derive(Clone, Debug)]
pub(crate) struct Shape {
    pub r: u64,
    pub max_degree: usize,
    // r^d
    pub pow: Vec<u64>,
}

impl Shape {
    pub fn new(r: usize, max_degree: usize) -> Option<Self> {
        let mut pow = vec![1u64];
        for _ in 0..max_degree {
            let next = pow.last()?.checked_mul(r as u64).filter(|&x| x < (1 << 62))?;
            pow.push(next);
        }
        Some(Shape { r: r as u64, max_degree, pow })
    }

    pub fn encode(&self, w: &[usize]) -> u64 {
        w.iter().fold(0, |acc, &l| acc * self.r + l as u64)
    }
}

/// Inhomogeneous element truncated above `max_degree`; `parts[d]` is the
/// degree-`d` component.
#[derive(Clone, Debug)]
pub(crate) struct Assoc {
    pub parts: Vec<HashMap<u64, Fq>>,
}

impl Assoc {
    pub fn zero(shape: &Shape) -> Self {
        Assoc { parts: vec![HashMap::new(); shape.max_degree + 1] }
    }

    pub fn add_scaled(&mut self, field: &FiniteField, degree: usize, h: &[(u64, Fq)], c: Fq) {
        let part = &mut self.parts[degree];
        for &(w, x) in h {
            let e = part.entry(w).or_insert(Fq::ZERO);
            *e = field.mul_add(*e, c, x);
        }
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.parts.iter().position(|p| p.values().any(|c| !c.is_zero()))
    }

    pub fn mul(&self, other: &Self, field: &FiniteField, shape: &Shape) -> Self {
        let n = shape.max_degree;
        let mut out = Assoc::zero(shape);
        for da in 1..=n {
            if self.parts[da].is_empty() {
                continue;
            }
            for db in 1..=n - da {
                if other.parts[db].is_empty() {
                    continue;
                }
                let shift = shape.pow[db];
                let target = &mut out.parts[da + db];
                for (&wa, &ca) in &self.parts[da] {
                    if ca.is_zero() {
                        continue;
                    }
                    for (&wb, &cb) in &other.parts[db] {
                        let e = target.entry(wa * shift + wb).or_insert(Fq::ZERO);
                        *e = field.mul_add(*e, ca, cb);
                    }
                }
            }
        }
        out
    }

    pub fn sub_assign(&mut self, other: &Self, field: &FiniteField) {
        for (mine, theirs) in self.parts.iter_mut().zip(&other.parts) {
            for (&w, &c) in theirs {
                let e = mine.entry(w).or_insert(Fq::ZERO);
                *e = field.sub(*e, c);
            }
        }
    }

    pub fn pow(&self, e: u32, field: &FiniteField, shape: &Shape) -> Self {
        let mut out = self.clone();
        for _ in 1..e {
            if out.min_degree().is_none() {
                break;
            }
            out = out.mul(self, field, shape);
        }
        out
    }

    pub fn sorted_part(&self, degree: usize) -> BTreeMap<u64, Fq> {
        self.parts[degree].iter().filter(|(_, c)| !c.is_zero()).map(|(&w, &c)| (w, c)).collect()
    }
}

/// Product of homogeneous polynomials of degrees `da` and `db`.
pub(crate) fn homog_mul(a: &[(u64, Fq)], b: &[(u64, Fq)], db: usize, field: &FiniteField, shape: &Shape) -> Homog {
    let shift = shape.pow[db];
    let mut acc: HashMap<u64, Fq> = HashMap::new();
    for &(wa, ca) in a {
        for &(wb, cb) in b {
            let e = acc.entry(wa * shift + wb).or_insert(Fq::ZERO);
            *e = field.mul_add(*e, ca, cb);
        }
    }
    let mut out: Homog = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    out.sort_unstable_by_key(|&(w, _)| w);
    out
}

pub(crate) fn homog_sub(a: &[(u64, Fq)], b: &[(u64, Fq)], field: &FiniteField) -> Homog {
    let mut acc: BTreeMap<u64, Fq> = a.iter().copied().collect();
    for &(w, c) in b {
        let e = acc.entry(w).or_insert(Fq::ZERO);
        *e = field.sub(*e, c);
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutator_of_letters() {
        let f = FiniteField::prime(3).unwrap();
        let shape = Shape::new(2, 4).unwrap();
        let x = vec![(0u64, Fq::ONE)];
        let y = vec![(1u64, Fq::ONE)];
        let xy = homog_mul(&x, &y, 1, &f, &shape);
        let yx = homog_mul(&y, &x, 1, &f, &shape);
        // xy - yx = code(01) - code(10)
        assert_eq!(homog_sub(&xy, &yx, &f), vec![(1, Fq::ONE), (2, f.from_int(-1))]);
    }

    #[test]
    fn truncation_drops_high_degrees() {
        let f = FiniteField::prime(2).unwrap();
        let shape = Shape::new(2, 3).unwrap();
        let mut a = Assoc::zero(&shape);
        a.add_scaled(&f, 2, &[(0, Fq::ONE)], Fq::ONE);
        assert!(a.mul(&a, &f, &shape).min_degree().is_none());
        assert!(Shape::new(4, 40).is_none());
        assert_eq!(shape.encode(&[1, 0, 1]), 5);
    }
}
