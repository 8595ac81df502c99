//! Delzant polytope engine.
//!
//! A polytope is stored as its cyclically ordered facets (counterclockwise),
//! each one an inward primitive integer normal together with a ParamForm
//! support: the facet lies on ⟨x,n⟩ = s and the polytope on ⟨x,n⟩ ≥ s.
//! Vertex i is the intersection of facets i and i+1, so facet i runs from
//! vertex i−1 to vertex i when walking counterclockwise.

use crate::homology::H2Class;
use crate::param::{ParamForm, ParamPoint};
use crate::rational::Rat;
use crate::Error;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Primitive integer (co)vector in the plane.
pub type IVec = (i64, i64);

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn is_primitive(v: IVec) -> bool {
    gcd(v.0, v.1) == 1
}

pub fn det(a: IVec, b: IVec) -> i64 {
    a.0 * b.1 - a.1 * b.0
}

/// Counterclockwise travel direction along a facet with inward normal `n`.
pub fn travel_dir(n: IVec) -> IVec {
    (n.1, -n.0)
}

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Facet {
    pub normal: IVec,
    pub support: ParamForm,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<H2Class>,
}

impl Facet {
    pub fn new(normal: IVec, support: ParamForm, class: H2Class) -> Self {
        assert!(is_primitive(normal), "facet normal must be primitive");
        Facet {
            normal,
            support,
            class: Some(class),
        }
    }
}

impl fmt::Debug for Facet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Facet(n=({},{}), s={}, class={})",
            self.normal.0,
            self.normal.1,
            self.support,
            self.class
                .as_ref()
                .map(|c| c.to_string())
                .unwrap_or_else(|| "-".into())
        )
    }
}

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DelzantPolytope {
    pub facets: Vec<Facet>,
}

impl fmt::Debug for DelzantPolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DelzantPolytope[")?;
        for facet in &self.facets {
            writeln!(f, "  {facet:?}")?;
        }
        write!(f, "]")
    }
}

/// Outcome of a validity check, reporting the first violation found.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub valid: bool,
    pub violations: Vec<String>,
}

impl CheckReport {
    fn ok() -> Self {
        CheckReport {
            valid: true,
            violations: Vec::new(),
        }
    }

    fn fail(msg: String) -> Self {
        CheckReport {
            valid: false,
            violations: vec![msg],
        }
    }
}

impl DelzantPolytope {
    pub fn new(facets: Vec<Facet>) -> Self {
        DelzantPolytope { facets }
    }

    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// Vertex i = facet i ∩ facet i+1, coordinates affine in the parameters.
    /// Errors when the adjacent normals are parallel.
    pub fn vertex(&self, i: usize) -> Result<(ParamForm, ParamForm), Error> {
        let n = self.len();
        let f1 = &self.facets[i % n];
        let f2 = &self.facets[(i + 1) % n];
        let d = det(f1.normal, f2.normal);
        if d == 0 {
            return Err(Error::Degenerate(format!(
                "parallel adjacent normals at facet {i}"
            )));
        }
        // Cramer on  n1·x = s1, n2·x = s2
        let dr = Rat::int(d);
        let x = (f1.support.scale_int(f2.normal.1) - f2.support.scale_int(f1.normal.1)).div_rat(&dr);
        let y = (f2.support.scale_int(f1.normal.0) - f1.support.scale_int(f2.normal.0)).div_rat(&dr);
        Ok((x, y))
    }

    /// All vertices; vertex i is shared by facets i and i+1.
    pub fn vertices(&self) -> Result<Vec<(ParamForm, ParamForm)>, Error> {
        (0..self.len()).map(|i| self.vertex(i)).collect()
    }

    /// Lattice length of facet i as a ParamForm (number of primitive steps
    /// along the facet direction).
    pub fn facet_length_form(&self, i: usize) -> Result<ParamForm, Error> {
        let n = self.len();
        let start = self.vertex((i + n - 1) % n)?;
        let end = self.vertex(i)?;
        let d = travel_dir(self.facets[i].normal);
        let delta = (&end.0 - &start.0, &end.1 - &start.1);
        // delta = t * d with t the lattice length
        if d.0 != 0 {
            Ok(delta.0.div_rat(&Rat::int(d.0)))
        } else {
            Ok(delta.1.div_rat(&Rat::int(d.1)))
        }
    }

    pub fn facet_length(&self, i: usize, p: &ParamPoint) -> Result<Rat, Error> {
        Ok(self.facet_length_form(i)?.eval(p))
    }

    /// Delzant validity at a parameter point: smoothness (det(n_i, n_{i+1}) = 1
    /// in counterclockwise order, which is also convexity) and positive facet
    /// lengths. Simplicity and rationality hold by construction.
    pub fn check_delzant(&self, p: &ParamPoint) -> CheckReport {
        if self.len() < 3 {
            return CheckReport::fail("fewer than three facets".into());
        }
        let n = self.len();
        for i in 0..n {
            let a = self.facets[i].normal;
            let b = self.facets[(i + 1) % n].normal;
            let d = det(a, b);
            if d.abs() != 1 {
                return CheckReport::fail(format!(
                    "smoothness failure at vertex {i}: det(({},{}),({},{})) = {d}",
                    a.0, a.1, b.0, b.1
                ));
            }
            if d != 1 {
                return CheckReport::fail(format!(
                    "orientation failure at vertex {i}: facets not counterclockwise"
                ));
            }
        }
        for i in 0..n {
            match self.facet_length(i, p) {
                Ok(len) => {
                    if !len.is_positive() {
                        return CheckReport::fail(format!(
                            "facet {i} has non-positive length {len} at {p}"
                        ));
                    }
                }
                Err(e) => return CheckReport::fail(e.to_string()),
            }
        }
        CheckReport::ok()
    }

    /// Image of the polytope under x ↦ Mx + shift with |det M| = 1.
    /// Normals map by the inverse transpose, supports follow, classes are
    /// carried along unchanged. A determinant −1 reverses the cyclic
    /// orientation, so the facet list is reversed to stay counterclockwise.
    pub fn gl2_transform(
        &self,
        m: [[i64; 2]; 2],
        shift: (ParamForm, ParamForm),
    ) -> Result<DelzantPolytope, Error> {
        let d = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        if d.abs() != 1 {
            return Err(Error::BadMatrix(format!("determinant {d}, need ±1")));
        }
        // inverse transpose of M, integral because det = ±1
        let inv_t = [
            [d * m[1][1], -d * m[1][0]],
            [-d * m[0][1], d * m[0][0]],
        ];
        let mut facets: Vec<Facet> = self
            .facets
            .iter()
            .map(|f| {
                let n = (
                    inv_t[0][0] * f.normal.0 + inv_t[0][1] * f.normal.1,
                    inv_t[1][0] * f.normal.0 + inv_t[1][1] * f.normal.1,
                );
                let support = &f.support
                    + &(shift.0.scale_int(n.0) + shift.1.scale_int(n.1));
                Facet {
                    normal: n,
                    support,
                    class: f.class.clone(),
                }
            })
            .collect();
        if d == -1 {
            facets.reverse();
        }
        Ok(DelzantPolytope::new(facets))
    }

    /// Corner cut (toric blow-up) of lattice size `c` at vertex i (between
    /// facets i and i+1). The new facet carries `class`, and the two adjacent
    /// facets' classes each lose it (strict transform).
    pub fn corner_cut(&self, i: usize, c: ParamForm, class: H2Class) -> DelzantPolytope {
        let n = self.len();
        let f1 = &self.facets[i % n];
        let f2 = &self.facets[(i + 1) % n];
        debug_assert_eq!(det(f1.normal, f2.normal), 1, "cut at a smooth corner");
        let normal = (f1.normal.0 + f2.normal.0, f1.normal.1 + f2.normal.1);
        let support = &(&f1.support + &f2.support) + &c;
        let mut facets = Vec::with_capacity(n + 1);
        for (k, f) in self.facets.iter().enumerate() {
            let mut f = f.clone();
            if k == i % n || k == (i + 1) % n {
                if let Some(cl) = &f.class {
                    f.class = Some(cl - &class);
                }
            }
            facets.push(f);
            if k == i % n {
                facets.push(Facet {
                    normal,
                    support: support.clone(),
                    class: Some(class.clone()),
                });
            }
        }
        DelzantPolytope::new(facets)
    }

    /// Fan/divisor consistency of the decorations:
    /// adjacent classes pair to 1, n_{i−1}+n_{i+1} = −(A_i²)·n_i, the symbolic
    /// area of A_i equals the facet length form, and adjunction c₁(A) = A²+2.
    pub fn verify_facet_classes(&self) -> Result<CheckReport, Error> {
        let n = self.len();
        let class = |i: usize| -> Result<&H2Class, Error> {
            self.facets[i % n]
                .class
                .as_ref()
                .ok_or_else(|| Error::Undecorated(i % n))
        };
        for i in 0..n {
            let a = class(i)?;
            let nxt = class(i + 1)?;
            if a.intersect(nxt) != 1 {
                return Ok(CheckReport::fail(format!(
                    "facets {i},{}: {}·{} = {} ≠ 1",
                    (i + 1) % n,
                    a,
                    nxt,
                    a.intersect(nxt)
                )));
            }
            let prev = self.facets[(i + n - 1) % n].normal;
            let here = self.facets[i].normal;
            let next = self.facets[(i + 1) % n].normal;
            let sq = a.self_intersection();
            if prev.0 + next.0 != -sq * here.0 || prev.1 + next.1 != -sq * here.1 {
                return Ok(CheckReport::fail(format!(
                    "fan relation fails at facet {i} ({a}): n_prev+n_next ≠ −(A²)n"
                )));
            }
            if a.area_form() != self.facet_length_form(i)? {
                return Ok(CheckReport::fail(format!(
                    "facet {i}: symbolic area {} ≠ length {}",
                    a.area_form(),
                    self.facet_length_form(i)?
                )));
            }
            if a.chern() != sq + 2 {
                return Ok(CheckReport::fail(format!(
                    "adjunction fails at facet {i}: c1({a}) = {} ≠ {}",
                    a.chern(),
                    sq + 2
                )));
            }
        }
        Ok(CheckReport::ok())
    }

    /// Exact area centroid at a parameter point, by the shoelace moments.
    pub fn centroid(&self, p: &ParamPoint) -> Result<(Rat, Rat), Error> {
        let verts: Vec<(Rat, Rat)> = self
            .vertices()?
            .into_iter()
            .map(|(x, y)| (x.eval(p), y.eval(p)))
            .collect();
        let n = verts.len();
        let mut twice_area = Rat::zero();
        let mut cx = Rat::zero();
        let mut cy = Rat::zero();
        for i in 0..n {
            let (x0, y0) = &verts[i];
            let (x1, y1) = &verts[(i + 1) % n];
            let cross = &(x0 * y1) - &(x1 * y0);
            twice_area += &cross;
            cx += &(&(x0 + x1) * &cross);
            cy += &(&(y0 + y1) * &cross);
        }
        if twice_area.is_zero() {
            return Err(Error::Degenerate(format!("zero-area polygon at {p}")));
        }
        let scale = (Rat::int(3) * twice_area.clone()).recip();
        Ok((cx * scale.clone(), cy * scale))
    }

    /// Polygon area at a parameter point.
    pub fn area(&self, p: &ParamPoint) -> Result<Rat, Error> {
        let verts: Vec<(Rat, Rat)> = self
            .vertices()?
            .into_iter()
            .map(|(x, y)| (x.eval(p), y.eval(p)))
            .collect();
        let mut twice = Rat::zero();
        for i in 0..verts.len() {
            let (x0, y0) = &verts[i];
            let (x1, y1) = &verts[(i + 1) % verts.len()];
            twice += &(&(x0 * y1) - &(x1 * y0));
        }
        Ok(twice * Rat::new(1, 2))
    }

    /// Relabels blow-up indices: classes via E_i ↦ E_{sigma(i)} and supports
    /// via c_i ↦ c_{sigma(i)}.
    pub fn permute_e(&self, sigma: &[usize; 4]) -> DelzantPolytope {
        DelzantPolytope::new(
            self.facets
                .iter()
                .map(|f| Facet {
                    normal: f.normal,
                    support: f.support.permute_c(sigma),
                    class: f.class.as_ref().map(|c| c.permute_e(sigma)),
                })
                .collect(),
        )
    }

    /// Finds the facet whose inward normal is exactly −ξ (the facet on which
    /// ⟨·,ξ⟩ is maximal, when it exists).
    pub fn max_facet(&self, xi: IVec) -> Option<usize> {
        self.facets
            .iter()
            .position(|f| f.normal == (-xi.0, -xi.1))
    }
}

pub const IDENTITY: [[i64; 2]; 2] = [[1, 0], [0, 1]];

pub fn zero_shift() -> (ParamForm, ParamForm) {
    (ParamForm::zero(), ParamForm::zero())
}

/// The μ×1 rectangle [0,1]×[0,μ] with classes B,F,B,F (the product S²×S²).
/// Width 1 along x (fiber direction), height μ along y.
pub fn product_rectangle() -> DelzantPolytope {
    DelzantPolytope::new(vec![
        Facet::new((0, 1), ParamForm::zero(), H2Class::f()),
        Facet::new((-1, 0), ParamForm::int(-1), H2Class::b()),
        Facet::new((0, -1), -ParamForm::mu(), H2Class::f()),
        Facet::new((1, 0), ParamForm::zero(), H2Class::b()),
    ])
}

/// Unit square with undecorated facets, for plumbing tests.
pub fn unit_square() -> DelzantPolytope {
    DelzantPolytope::new(vec![
        Facet {
            normal: (0, 1),
            support: ParamForm::zero(),
            class: None,
        },
        Facet {
            normal: (-1, 0),
            support: ParamForm::int(-1),
            class: None,
        },
        Facet {
            normal: (0, -1),
            support: ParamForm::int(-1),
            class: None,
        },
        Facet {
            normal: (1, 0),
            support: ParamForm::zero(),
            class: None,
        },
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn unit_square_vertices() {
        let sq = unit_square();
        let p = ParamPoint::ma2();
        let verts: Vec<(Rat, Rat)> = sq
            .vertices()
            .unwrap()
            .into_iter()
            .map(|(x, y)| (x.eval(&p), y.eval(&p)))
            .collect();
        // facet 0 is the bottom, so vertex 0 = bottom ∩ right = (1,0)
        assert_eq!(
            verts,
            vec![
                (Rat::one(), Rat::zero()),
                (Rat::one(), Rat::one()),
                (Rat::zero(), Rat::one()),
                (Rat::zero(), Rat::zero()),
            ]
        );
        assert!(sq.check_delzant(&p).valid);
        assert_eq!(sq.facet_length(0, &p).unwrap(), Rat::one());
        assert_eq!(sq.centroid(&p).unwrap(), (rat(1, 2), rat(1, 2)));
    }

    #[test]
    fn triangle_centroid() {
        // (0,0),(1,0),(0,1) triangle: facets bottom, hypotenuse, left
        let tri = DelzantPolytope::new(vec![
            Facet {
                normal: (0, 1),
                support: ParamForm::zero(),
                class: None,
            },
            Facet {
                normal: (-1, -1),
                support: ParamForm::int(-1),
                class: None,
            },
            Facet {
                normal: (1, 0),
                support: ParamForm::zero(),
                class: None,
            },
        ]);
        let p = ParamPoint::generic();
        assert_eq!(tri.centroid(&p).unwrap(), (rat(1, 3), rat(1, 3)));
    }

    #[test]
    fn smoothness_failure_detected() {
        let bad = DelzantPolytope::new(vec![
            Facet {
                normal: (1, 0),
                support: ParamForm::zero(),
                class: None,
            },
            Facet {
                normal: (1, 2),
                support: ParamForm::zero(),
                class: None,
            },
            Facet {
                normal: (-1, -1),
                support: ParamForm::int(-1),
                class: None,
            },
        ]);
        let report = bad.check_delzant(&ParamPoint::ma2());
        assert!(!report.valid);
        assert!(report.violations[0].contains("smoothness") || report.violations[0].contains("orientation"));
    }

    #[test]
    fn product_rectangle_classes() {
        let rect = product_rectangle();
        let p = ParamPoint::generic();
        assert!(rect.check_delzant(&p).valid);
        assert!(rect.verify_facet_classes().unwrap().valid);
        assert_eq!(rect.area(&p).unwrap(), p.mu);
    }

    #[test]
    fn gl2_identity_and_invariance() {
        let rect = product_rectangle();
        let id = rect.gl2_transform(IDENTITY, zero_shift()).unwrap();
        assert_eq!(id, rect);
        let p = ParamPoint::generic();
        let m = [[1i64, 0], [3, -1]];
        let t = rect.gl2_transform(m, zero_shift()).unwrap();
        assert!(t.check_delzant(&p).valid);
        assert!(t.verify_facet_classes().unwrap().valid);
        assert_eq!(t.area(&p).unwrap(), rect.area(&p).unwrap());
        assert!(rect.gl2_transform([[2, 0], [0, 1]], zero_shift()).is_err());
    }

    #[test]
    fn corner_cut_is_smooth_blowup() {
        let rect = product_rectangle();
        // cut the vertex between facets 0 (bottom) and 1 (right) by c1
        let cut = rect.corner_cut(0, ParamForm::c(1), H2Class::e(1));
        let p = ParamPoint::generic();
        assert_eq!(cut.len(), 5);
        assert!(cut.check_delzant(&p).valid);
        assert!(cut.verify_facet_classes().unwrap().valid);
        // area drops by c1^2/2
        let drop = rect.area(&p).unwrap() - cut.area(&p).unwrap();
        assert_eq!(drop, &(&p.c[0] * &p.c[0]) * &rat(1, 2));
    }
}
