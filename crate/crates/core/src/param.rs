//! Parameter points and affine parameter forms.
//!
//! A `ParamPoint` fixes the symplectic form: the base-sphere area μ and the
//! four blow-up capacities c₁..c₄. A `ParamForm` is an affine expression
//! a₀ + a_μ·μ + Σ a_{c_i}·c_i with exact rational coefficients; every moment
//! and area label in a polytope or decorated graph lives here.

use crate::rational::Rat;
use crate::Error;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// A point (μ; c₁,c₂,c₃,c₄) in the parameter space of blow-up forms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamPoint {
    pub mu: Rat,
    pub c: [Rat; 4],
}

impl ParamPoint {
    pub fn new(mu: Rat, c: [Rat; 4]) -> Self {
        ParamPoint { mu, c }
    }

    /// The default working point on the MA edge: μ=2, c=(1/2,1/2,1/2,1/2).
    pub fn ma2() -> Self {
        ParamPoint::ma(Rat::int(2))
    }

    /// MA-edge point with the given μ.
    pub fn ma(mu: Rat) -> Self {
        let h = Rat::new(1, 2);
        ParamPoint::new(mu, [h.clone(), h.clone(), h.clone(), h])
    }

    /// A fixed generic point: distinct c's, pairwise sums < 1 < μ.
    pub fn generic() -> Self {
        ParamPoint::new(
            Rat::int(3),
            [
                Rat::new(2, 5),
                Rat::new(7, 20),
                Rat::new(3, 10),
                Rat::new(1, 4),
            ],
        )
    }

    /// True on the MA edge: μ > 1 and all c_i = 1/2.
    pub fn is_ma_edge(&self) -> bool {
        let h = Rat::new(1, 2);
        self.mu > Rat::one() && self.c.iter().all(|ci| *ci == h)
    }

    /// Bounds of the reduced form in blow-up parameters:
    /// 0 < c₄ ≤ c₃ ≤ c₂ ≤ c₁ ≤ 1 ≤ μ and c_i + c_j ≤ 1.
    pub fn is_reduced(&self) -> bool {
        let one = Rat::one();
        self.c[3].is_positive()
            && self.c[3] <= self.c[2]
            && self.c[2] <= self.c[1]
            && self.c[1] <= self.c[0]
            && self.c[0] <= one
            && one <= self.mu
            && &self.c[0] + &self.c[1] <= one
    }

    /// Strict version of the reduced bounds (all inequalities strict), the
    /// "generic case" of the polytope constructions.
    pub fn is_strictly_generic(&self) -> bool {
        let one = Rat::one();
        self.c[3].is_positive()
            && self.c[3] < self.c[2]
            && self.c[2] < self.c[1]
            && self.c[1] < self.c[0]
            && self.c[0] < one
            && one < self.mu
            && &self.c[0] + &self.c[1] < one
    }
}

impl fmt::Display for ParamPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(mu={}; c={},{},{},{})",
            self.mu, self.c[0], self.c[1], self.c[2], self.c[3]
        )
    }
}

/// Affine form a₀ + a_μ·μ + Σ a_{c_i}·c_i. Equality is coefficientwise.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, Default)]
pub struct ParamForm {
    #[serde(rename = "const")]
    pub constant: Rat,
    pub mu: Rat,
    pub c: [Rat; 4],
}

impl ParamForm {
    pub fn zero() -> Self {
        ParamForm::default()
    }

    pub fn constant(r: Rat) -> Self {
        ParamForm {
            constant: r,
            ..Default::default()
        }
    }

    pub fn int(n: i64) -> Self {
        ParamForm::constant(Rat::int(n))
    }

    pub fn mu() -> Self {
        ParamForm {
            mu: Rat::one(),
            ..Default::default()
        }
    }

    /// c_i for i in 1..=4.
    pub fn c(i: usize) -> Self {
        assert!((1..=4).contains(&i), "c index out of range");
        let mut f = ParamForm::default();
        f.c[i - 1] = Rat::one();
        f
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.mu.is_zero() && self.c.iter().all(Rat::is_zero)
    }

    pub fn scale(&self, r: &Rat) -> Self {
        ParamForm {
            constant: &self.constant * r,
            mu: &self.mu * r,
            c: [
                &self.c[0] * r,
                &self.c[1] * r,
                &self.c[2] * r,
                &self.c[3] * r,
            ],
        }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&Rat::int(n))
    }

    /// Exact evaluation at a parameter point.
    pub fn eval(&self, p: &ParamPoint) -> Rat {
        let mut v = self.constant.clone();
        v += &(&self.mu * &p.mu);
        for i in 0..4 {
            v += &(&self.c[i] * &p.c[i]);
        }
        v
    }

    pub fn positive_at(&self, p: &ParamPoint) -> bool {
        self.eval(p).is_positive()
    }

    /// Exact division by a rational scalar.
    pub fn div_rat(&self, r: &Rat) -> Self {
        self.scale(&r.recip())
    }

    /// Applies a permutation of the blow-up indices to the c-coefficients:
    /// c_i ↦ c_{sigma(i)} (sigma maps old index to new index, 1-based).
    pub fn permute_c(&self, sigma: &[usize; 4]) -> Self {
        let mut c = [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()];
        for i in 0..4 {
            c[sigma[i] - 1] = self.c[i].clone();
        }
        ParamForm {
            constant: self.constant.clone(),
            mu: self.mu.clone(),
            c,
        }
    }

    /// Parses a compact form description like "mu + k - 2" is not supported;
    /// forms are built programmatically. This parses the JSON object instead.
    pub fn from_json(v: &serde_json::Value) -> Result<Self, Error> {
        serde_json::from_value(v.clone()).map_err(|e| Error::BadDocument(e.to_string()))
    }
}

impl fmt::Display for ParamForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if !self.constant.is_zero() {
            parts.push(self.constant.to_string());
        }
        let push_term = |parts: &mut Vec<String>, coeff: &Rat, name: &str| {
            if coeff.is_zero() {
                return;
            }
            if *coeff == Rat::one() {
                parts.push(name.to_string());
            } else if *coeff == Rat::int(-1) {
                parts.push(format!("-{name}"));
            } else {
                parts.push(format!("{coeff}*{name}"));
            }
        };
        push_term(&mut parts, &self.mu, "mu");
        for i in 0..4 {
            push_term(&mut parts, &self.c[i], &format!("c{}", i + 1));
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        let mut s = parts[0].clone();
        for part in &parts[1..] {
            if let Some(rest) = part.strip_prefix('-') {
                s.push_str(" - ");
                s.push_str(rest);
            } else {
                s.push_str(" + ");
                s.push_str(part);
            }
        }
        write!(f, "{s}")
    }
}

impl fmt::Debug for ParamForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &ParamForm {
    type Output = ParamForm;
    fn add(self, rhs: &ParamForm) -> ParamForm {
        ParamForm {
            constant: &self.constant + &rhs.constant,
            mu: &self.mu + &rhs.mu,
            c: [
                &self.c[0] + &rhs.c[0],
                &self.c[1] + &rhs.c[1],
                &self.c[2] + &rhs.c[2],
                &self.c[3] + &rhs.c[3],
            ],
        }
    }
}

impl Add for ParamForm {
    type Output = ParamForm;
    fn add(self, rhs: ParamForm) -> ParamForm {
        (&self).add(&rhs)
    }
}

impl Sub for &ParamForm {
    type Output = ParamForm;
    fn sub(self, rhs: &ParamForm) -> ParamForm {
        self + &(-rhs)
    }
}

impl Sub for ParamForm {
    type Output = ParamForm;
    fn sub(self, rhs: ParamForm) -> ParamForm {
        (&self).sub(&rhs)
    }
}

impl Neg for &ParamForm {
    type Output = ParamForm;
    fn neg(self) -> ParamForm {
        self.scale_int(-1)
    }
}

impl Neg for ParamForm {
    type Output = ParamForm;
    fn neg(self) -> ParamForm {
        (&self).neg()
    }
}

impl AddAssign<&ParamForm> for ParamForm {
    fn add_assign(&mut self, rhs: &ParamForm) {
        *self = (&*self).add(rhs);
    }
}

impl SubAssign<&ParamForm> for ParamForm {
    fn sub_assign(&mut self, rhs: &ParamForm) {
        *self = (&*self).sub(rhs);
    }
}

impl Mul<&Rat> for &ParamForm {
    type Output = ParamForm;
    fn mul(self, r: &Rat) -> ParamForm {
        self.scale(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn mu_plus(k: i64, off: i64) -> ParamForm {
        // mu + k + off, used as mu+k-2 style labels
        ParamForm::mu() + ParamForm::int(k + off)
    }

    #[test]
    fn eval_examples() {
        let ma2 = ParamPoint::ma2();
        // mu - 1 at (2; 1/2^4) = 1
        let f = ParamForm::mu() - ParamForm::int(1);
        assert_eq!(f.eval(&ma2), Rat::int(1));
        // mu + k - 2 with k = 1 -> 1 at MA2 (area label of z_k's top sphere)
        assert_eq!(mu_plus(1, -2).eval(&ma2), Rat::int(1));
        // mu - k - 2 with k = 0 -> 0 at MA2 (existence boundary)
        assert_eq!(mu_plus(0, -2).eval(&ma2), Rat::int(0));
    }

    #[test]
    fn positivity_examples() {
        // mu - 3/2 at mu = 7/4 is positive
        let f = ParamForm::mu() - ParamForm::constant(rat(3, 2));
        assert!(f.positive_at(&ParamPoint::ma(rat(7, 4))));
        // the zero form is not positive
        assert!(!ParamForm::zero().positive_at(&ParamPoint::ma2()));
        // mu - 2 at mu = 3/2 is not positive
        let g = ParamForm::mu() - ParamForm::int(2);
        assert!(!g.positive_at(&ParamPoint::ma(rat(3, 2))));
    }

    #[test]
    fn ring_homomorphism_into_rat() {
        let p = ParamPoint::generic();
        let f = ParamForm::mu() + ParamForm::c(1).scale_int(3) - ParamForm::int(2);
        let g = ParamForm::c(4) - ParamForm::c(2);
        assert_eq!((&f + &g).eval(&p), f.eval(&p) + g.eval(&p));
        assert_eq!((&f + &g), (&g + &f));
        let h = ParamForm::c(3);
        assert_eq!((&f + &g) + h.clone(), f.clone() + (&g + &h));
        assert_eq!(f.scale_int(5).eval(&p), f.eval(&p).scale(5));
    }

    #[test]
    fn reduced_bounds() {
        assert!(ParamPoint::ma2().is_reduced());
        assert!(ParamPoint::generic().is_strictly_generic());
        let bad = ParamPoint::new(rat(1, 2), ParamPoint::ma2().c);
        assert!(!bad.is_reduced());
    }
}
