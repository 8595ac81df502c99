//! The second homology lattice of S²×S² # 4CP̄² (equivalently CP² # 5CP̄²).
//!
//! The canonical internal basis is BFE = (B, F, E₁, E₂, E₃, E₄); the LV basis
//! (L, V₁..V₅) is a view obtained through L = B+F−E₁, V₁ = B−E₁, V₂ = F−E₁,
//! V_i = E_{i−1} for i ≥ 3.

use crate::param::{ParamForm, ParamPoint};
use crate::rational::Rat;
use crate::Error;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Neg, Sub};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "BFE")]
    Bfe,
    #[serde(rename = "LV")]
    Lv,
}

/// Integer homology class in one of the two bases. Six coefficients:
/// (B,F,E₁..E₄) for BFE, (L,V₁..V₅) for LV.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct H2Class {
    pub basis: Basis,
    pub coeffs: [i64; 6],
}

impl H2Class {
    pub fn bfe(coeffs: [i64; 6]) -> Self {
        H2Class {
            basis: Basis::Bfe,
            coeffs,
        }
    }

    pub fn lv(coeffs: [i64; 6]) -> Self {
        H2Class {
            basis: Basis::Lv,
            coeffs,
        }
    }

    pub fn zero() -> Self {
        H2Class::bfe([0; 6])
    }

    pub fn b() -> Self {
        H2Class::bfe([1, 0, 0, 0, 0, 0])
    }

    pub fn f() -> Self {
        H2Class::bfe([0, 1, 0, 0, 0, 0])
    }

    /// E_i for i in 1..=4.
    pub fn e(i: usize) -> Self {
        assert!((1..=4).contains(&i));
        let mut c = [0i64; 6];
        c[1 + i] = 1;
        H2Class::bfe(c)
    }

    /// aB + bF − Σ_{i∈cut} E_i, the ubiquitous facet-class shape.
    pub fn bf_minus(a: i64, b: i64, cut: &[usize]) -> Self {
        let mut c = [a, b, 0, 0, 0, 0];
        for &i in cut {
            assert!((1..=4).contains(&i));
            c[1 + i] -= 1;
        }
        H2Class::bfe(c)
    }

    /// Conversion to the BFE basis (identity if already there).
    pub fn to_bfe(&self) -> H2Class {
        match self.basis {
            Basis::Bfe => self.clone(),
            Basis::Lv => {
                let [l, v1, v2, v3, v4, v5] = self.coeffs;
                // L = B+F-E1, V1 = B-E1, V2 = F-E1, V3 = E2, V4 = E3, V5 = E4
                H2Class::bfe([
                    l + v1,
                    l + v2,
                    -l - v1 - v2,
                    v3,
                    v4,
                    v5,
                ])
            }
        }
    }

    /// Conversion to the LV basis.
    pub fn to_lv(&self) -> H2Class {
        match self.basis {
            Basis::Lv => self.clone(),
            Basis::Bfe => {
                let [b, f, e1, e2, e3, e4] = self.coeffs;
                // B = L-V2, F = L-V1, E1 = L-V1-V2, E2 = V3, ...
                H2Class::lv([
                    b + f + e1,
                    -f - e1,
                    -b - e1,
                    e2,
                    e3,
                    e4,
                ])
            }
        }
    }

    /// Intersection pairing: B·F = 1, E_i·E_j = −δ_ij, B² = F² = B·E_i = 0.
    pub fn intersect(&self, other: &H2Class) -> i64 {
        let a = self.to_bfe().coeffs;
        let b = other.to_bfe().coeffs;
        let mut v = a[0] * b[1] + a[1] * b[0];
        for i in 2..6 {
            v -= a[i] * b[i];
        }
        v
    }

    pub fn self_intersection(&self) -> i64 {
        self.intersect(self)
    }

    /// First Chern number: pairing with −K = 2B+2F−E₁−E₂−E₃−E₄
    /// (equal to 3L−ΣV_i under the basis change).
    pub fn chern(&self) -> i64 {
        let anticanonical = H2Class::bfe([2, 2, -1, -1, -1, -1]);
        self.intersect(&anticanonical)
    }

    /// Symbolic ω-area: ω(B)=μ, ω(F)=1, ω(E_i)=c_i.
    pub fn area_form(&self) -> ParamForm {
        let a = self.to_bfe().coeffs;
        let mut f = ParamForm::mu().scale_int(a[0]) + ParamForm::int(a[1]);
        for i in 0..4 {
            f += &ParamForm::c(i + 1).scale_int(a[2 + i]);
        }
        f
    }

    /// Exact ω-area at a parameter point.
    pub fn area(&self, p: &ParamPoint) -> Rat {
        self.area_form().eval(p)
    }

    /// E_i ↦ E_{sigma(i)} relabeling (1-based permutation of 1..4).
    pub fn permute_e(&self, sigma: &[usize; 4]) -> H2Class {
        let a = self.to_bfe().coeffs;
        let mut c = [a[0], a[1], 0, 0, 0, 0];
        for i in 0..4 {
            c[1 + sigma[i]] = a[2 + i];
        }
        H2Class::bfe(c)
    }
}

impl fmt::Display for H2Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: [&str; 6] = match self.basis {
            Basis::Bfe => ["B", "F", "E1", "E2", "E3", "E4"],
            Basis::Lv => ["L", "V1", "V2", "V3", "V4", "V5"],
        };
        let mut out = String::new();
        for (k, name) in names.iter().enumerate() {
            let coeff = self.coeffs[k];
            if coeff == 0 {
                continue;
            }
            if out.is_empty() {
                match coeff {
                    1 => out.push_str(name),
                    -1 => out.push_str(&format!("-{name}")),
                    _ => out.push_str(&format!("{coeff}{name}")),
                }
            } else {
                let sign = if coeff > 0 { "+" } else { "-" };
                let mag = coeff.abs();
                if mag == 1 {
                    out.push_str(&format!("{sign}{name}"));
                } else {
                    out.push_str(&format!("{sign}{mag}{name}"));
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        write!(f, "{out}")
    }
}

impl fmt::Debug for H2Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &H2Class {
    type Output = H2Class;
    fn add(self, rhs: &H2Class) -> H2Class {
        let a = self.to_bfe().coeffs;
        let b = rhs.to_bfe().coeffs;
        let mut c = [0i64; 6];
        for i in 0..6 {
            c[i] = a[i] + b[i];
        }
        H2Class::bfe(c)
    }
}

impl Sub for &H2Class {
    type Output = H2Class;
    fn sub(self, rhs: &H2Class) -> H2Class {
        self + &(-rhs)
    }
}

impl Neg for &H2Class {
    type Output = H2Class;
    fn neg(self) -> H2Class {
        let mut c = self.to_bfe().coeffs;
        for x in &mut c {
            *x = -*x;
        }
        H2Class::bfe(c)
    }
}

/// Cohomology-side parameters of a form on X₅: ω-areas (ν; δ₁..δ₅) of (L, V₁..V₅).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomClassParams {
    pub nu: Rat,
    pub delta: [Rat; 5],
}

impl CohomClassParams {
    pub fn new(nu: Rat, delta: [Rat; 5]) -> Self {
        CohomClassParams { nu, delta }
    }

    /// Reduced form test: ν > δ₁ ≥ … ≥ δ₅ > 0 and ν ≥ δ_i + δ_j + δ_k
    /// for all triples of distinct indices.
    pub fn is_reduced(&self) -> bool {
        if !(self.nu > self.delta[0]) || !self.delta[4].is_positive() {
            return false;
        }
        for i in 0..4 {
            if self.delta[i] < self.delta[i + 1] {
                return false;
            }
        }
        for i in 0..5 {
            for j in (i + 1)..5 {
                for k in (j + 1)..5 {
                    if &(&self.delta[i] + &self.delta[j]) + &self.delta[k] > self.nu {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The birational equivalence with the blow-up picture:
    /// μ = (ν−δ₂)/(ν−δ₁), c₁ = (ν−δ₁−δ₂)/(ν−δ₁), c_i = δ_{i+1}/(ν−δ₁).
    pub fn to_blowup_params(&self) -> Result<ParamPoint, Error> {
        if !self.is_reduced() {
            return Err(Error::NotReduced(format!(
                "(nu={}; delta={},{},{},{},{}) violates nu > d1 >= ... >= d5 > 0, nu >= di+dj+dk",
                self.nu,
                self.delta[0],
                self.delta[1],
                self.delta[2],
                self.delta[3],
                self.delta[4]
            )));
        }
        let scale = &self.nu - &self.delta[0];
        if !scale.is_positive() {
            return Err(Error::NotReduced("nu - delta1 must be positive".into()));
        }
        let mu = (&self.nu - &self.delta[1]) / scale.clone();
        let c1 = (&(&self.nu - &self.delta[0]) - &self.delta[1]) / scale.clone();
        let c2 = &self.delta[2] / &scale;
        let c3 = &self.delta[3] / &scale;
        let c4 = &self.delta[4] / &scale;
        Ok(ParamPoint::new(mu, [c1, c2, c3, c4]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn pairing_examples() {
        assert_eq!(H2Class::b().intersect(&H2Class::f()), 1);
        assert_eq!(H2Class::e(1).intersect(&H2Class::e(1)), -1);
        // (B-E1-E2)·(B-E3-E4) = 1 by bilinear expansion (only B·B=0 cross with
        // nothing: check against the brute-force expansion)
        let a = H2Class::bf_minus(1, 0, &[1, 2]);
        let b = H2Class::bf_minus(1, 0, &[3, 4]);
        let mut brute = 0i64;
        let basis: Vec<(H2Class, i64)> = vec![
            (H2Class::b(), 1),
            (H2Class::e(1), -1),
            (H2Class::e(2), -1),
        ];
        let basis2: Vec<(H2Class, i64)> = vec![
            (H2Class::b(), 1),
            (H2Class::e(3), -1),
            (H2Class::e(4), -1),
        ];
        for (x, sx) in &basis {
            for (y, sy) in &basis2 {
                brute += sx * sy * x.intersect(y);
            }
        }
        assert_eq!(brute, 0);
        assert_eq!(a.intersect(&b), 0);
        // and the honest positive example from the product table: B·F-type
        assert_eq!(
            H2Class::bf_minus(1, 1, &[1, 2]).intersect(&H2Class::bf_minus(1, 0, &[3, 4])),
            1
        );
    }

    #[test]
    fn chern_examples() {
        // c1(B-F-E4) = -1 (the non-NEF obstruction of §4.3's z_{1,4} route)
        assert_eq!(H2Class::bfe([1, -1, 0, 0, 0, -1]).chern(), -1);
        assert_eq!(H2Class::bfe([1, 1, -1, -1, -1, -1]).chern(), 0);
        // V_k classes have chern 1
        for k in 1..=5 {
            let mut c = [0i64; 6];
            c[k] = 1;
            assert_eq!(H2Class::lv(c).chern(), 1);
        }
    }

    #[test]
    fn basis_round_trip_and_signature() {
        // involutive bijection on a spread of classes
        let samples = [
            H2Class::b(),
            H2Class::f(),
            H2Class::e(3),
            H2Class::bf_minus(2, 1, &[1, 2, 3, 4]),
            H2Class::bfe([-1, 4, 2, 0, -3, 7]),
        ];
        for a in &samples {
            assert_eq!(a.to_lv().to_bfe(), a.to_bfe());
            assert_eq!(a.to_bfe().to_lv(), a.to_lv());
        }
        // LV basis pairing is diag(1,-1,-1,-1,-1,-1)
        for i in 0..6 {
            for j in 0..6 {
                let mut ci = [0i64; 6];
                let mut cj = [0i64; 6];
                ci[i] = 1;
                cj[j] = 1;
                let expect = if i != j {
                    0
                } else if i == 0 {
                    1
                } else {
                    -1
                };
                assert_eq!(H2Class::lv(ci).intersect(&H2Class::lv(cj)), expect);
            }
        }
    }

    #[test]
    fn area_examples() {
        let ma2 = ParamPoint::ma2();
        assert_eq!(H2Class::f().area(&ParamPoint::generic()), Rat::one());
        assert_eq!(H2Class::bf_minus(1, 0, &[3, 4]).area(&ma2), Rat::one());
        // B + kF - E1..E4 at k=1, MA2 -> 1 (the "1, mu+k-2" label)
        assert_eq!(H2Class::bf_minus(1, 1, &[1, 2, 3, 4]).area(&ma2), Rat::one());
        // area agrees across bases
        let a = H2Class::bfe([2, -1, 1, 0, -2, 3]);
        let p = ParamPoint::generic();
        assert_eq!(a.to_lv().area(&p), a.area(&p));
    }

    #[test]
    fn blowup_params_examples() {
        // monotone vertex M = (1/3,...,1/3) with nu = 1 -> (1; 1/2,...)
        let third = rat(1, 3);
        let m = CohomClassParams::new(
            Rat::one(),
            [third.clone(), third.clone(), third.clone(), third.clone(), third],
        );
        assert!(m.is_reduced());
        let p = m.to_blowup_params().unwrap();
        assert_eq!(p.mu, Rat::one());
        assert!(p.c.iter().all(|ci| *ci == rat(1, 2)));
        assert!(p.is_reduced());

        // MA-edge point
        let q = CohomClassParams::new(
            Rat::one(),
            [rat(2, 5), rat(3, 10), rat(3, 10), rat(3, 10), rat(3, 10)],
        );
        let p = q.to_blowup_params().unwrap();
        assert_eq!(p.mu, rat(7, 6));
        assert!(p.c.iter().all(|ci| *ci == rat(1, 2)));
        assert!(p.is_reduced());
    }

    #[test]
    fn reduced_rejections() {
        // A = (1,0,0,0,0) is a ray endpoint, not reduced (delta5 = 0)
        let a = CohomClassParams::new(
            Rat::one(),
            [Rat::one(), Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()],
        );
        assert!(!a.is_reduced());
        assert!(a.to_blowup_params().is_err());
        // triple-sum violation
        let b = CohomClassParams::new(
            Rat::one(),
            [rat(1, 2), rat(2, 5), rat(3, 10), rat(1, 10), rat(1, 20)],
        );
        assert!(!b.is_reduced());
    }
}
