use crate::exact::{int, zero, Scalar};
use num_traits::Zero;
use std::ops::{Add, Mul, Neg, Sub};

/// `a + b i + c j + d k` with rational components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quaternion(pub [Scalar; 4]);

impl Quaternion {
    pub fn zero() -> Self {
        Quaternion([zero(), zero(), zero(), zero()])
    }

    /// Basis unit by name: `"1"`, `"i"`, `"j"` or `"k"`.
    pub fn unit(name: &str) -> Option<Self> {
        let idx = ["1", "i", "j", "k"].iter().position(|u| *u == name)?;
        let mut q = Self::zero();
        q.0[idx] = int(1);
        Some(q)
    }

    pub fn real(x: Scalar) -> Self {
        Quaternion([x, zero(), zero(), zero()])
    }

    pub fn conj(&self) -> Self {
        let [a, b, c, d] = &self.0;
        Quaternion([a.clone(), -b, -c, -d])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
}

impl Add for &Quaternion {
    type Output = Quaternion;
    fn add(self, o: &Quaternion) -> Quaternion {
        Quaternion(std::array::from_fn(|i| &self.0[i] + &o.0[i]))
    }
}

impl Sub for &Quaternion {
    type Output = Quaternion;
    fn sub(self, o: &Quaternion) -> Quaternion {
        Quaternion(std::array::from_fn(|i| &self.0[i] - &o.0[i]))
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion(std::array::from_fn(|i| -&self.0[i]))
    }
}

impl Mul for &Quaternion {
    type Output = Quaternion;
    fn mul(self, o: &Quaternion) -> Quaternion {
        let [a1, b1, c1, d1] = &self.0;
        let [a2, b2, c2, d2] = &o.0;
        Quaternion([
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        ])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(s: &str) -> Quaternion {
        Quaternion::unit(s).unwrap()
    }

    #[test]
    fn hamilton_relations() {
        let minus_one = Quaternion::real(int(-1));
        for s in ["i", "j", "k"] {
            assert_eq!(&u(s) * &u(s), minus_one);
        }
        assert_eq!(&u("i") * &u("j"), u("k"));
        assert_eq!(&u("j") * &u("k"), u("i"));
        assert_eq!(&u("k") * &u("i"), u("j"));
        assert_eq!(&u("j") * &u("i"), -&u("k"));
        assert_eq!(&(&u("i") * &u("j")) * &u("k"), minus_one);
    }

    #[test]
    fn conjugation_reverses_products() {
        let p = &u("1") + &u("j");
        let q = &u("i") + &u("k");
        assert_eq!((&p * &q).conj(), &q.conj() * &p.conj());
    }
}
