//! Decorated graphs of Hamiltonian circle actions and their extraction from
//! Delzant polytopes.
//!
//! The isotropy rule: a polytope edge with primitive direction d maps, under
//! projection along ξ, to an invariant sphere with isotropy |⟨ξ,d⟩|; value 0
//! means the facet is pointwise fixed (and must sit at an extreme of the
//! moment interval), value 1 is a free gradient sphere, and values ≥ 2 become
//! labeled edges of the graph.

use crate::names::{ActionName, CutSet};
use crate::param::{ParamForm, ParamPoint};
use crate::polytope::{det, is_primitive, travel_dir, DelzantPolytope, IVec};
use crate::rational::Rat;
use crate::Error;
use crate::homology::H2Class;
use serde::Serialize;
use std::fmt;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct FatVertex {
    pub moment: ParamForm,
    pub area: ParamForm,
    pub genus: i64,
    pub class: Option<H2Class>,
}

/// Edge of a decorated graph, kept by its endpoint moments (lower first at
/// the working point) and the isotropy label k ≥ 2.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct GraphEdge {
    pub lo: ParamForm,
    pub hi: ParamForm,
    pub isotropy: i64,
}

#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct KarshonGraph {
    pub fat_vertices: Vec<FatVertex>,
    pub fixed_points: Vec<ParamForm>,
    pub edges: Vec<GraphEdge>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum GraphRelation {
    Equal,
    FlipEqual,
    Distinct,
}

impl fmt::Debug for KarshonGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "KarshonGraph[")?;
        for fat in &self.fat_vertices {
            writeln!(
                f,
                "  fat: moment={}, area={}, class={}",
                fat.moment,
                fat.area,
                fat.class
                    .as_ref()
                    .map(|c| c.to_string())
                    .unwrap_or_else(|| "-".into())
            )?;
        }
        for pt in &self.fixed_points {
            writeln!(f, "  point: {pt}")?;
        }
        for e in &self.edges {
            writeln!(f, "  edge {}: {} -- {}", e.isotropy, e.lo, e.hi)?;
        }
        write!(f, "]")
    }
}

impl KarshonGraph {
    /// Canonical form at a working point: sorted components, all moments
    /// translated so the minimum is 0.
    pub fn normalize(&self, p: &ParamPoint) -> KarshonGraph {
        let mut g = self.clone();
        let mut moments: Vec<ParamForm> = g
            .fat_vertices
            .iter()
            .map(|v| v.moment.clone())
            .chain(g.fixed_points.iter().cloned())
            .collect();
        if moments.is_empty() {
            return g;
        }
        moments.sort_by(|a, b| a.eval(p).cmp(&b.eval(p)).then_with(|| a.cmp(b)));
        let min = moments[0].clone();
        for v in &mut g.fat_vertices {
            v.moment = &v.moment - &min;
        }
        for f in &mut g.fixed_points {
            *f = &*f - &min;
        }
        for e in &mut g.edges {
            e.lo = &e.lo - &min;
            e.hi = &e.hi - &min;
        }
        let key = |f: &ParamForm| (f.eval(p), f.clone());
        g.fat_vertices
            .sort_by(|a, b| key(&a.moment).cmp(&key(&b.moment)).then_with(|| a.cmp(b)));
        g.fixed_points.sort_by(|a, b| key(a).cmp(&key(b)));
        g.edges.sort_by(|a, b| {
            (key(&a.lo), key(&a.hi), a.isotropy).cmp(&(key(&b.lo), key(&b.hi), b.isotropy))
        });
        g
    }

    /// Moment reversal (the inverse loop).
    pub fn flip(&self) -> KarshonGraph {
        KarshonGraph {
            fat_vertices: self
                .fat_vertices
                .iter()
                .map(|v| FatVertex {
                    moment: -&v.moment,
                    area: v.area.clone(),
                    genus: v.genus,
                    class: v.class.clone(),
                })
                .collect(),
            fixed_points: self.fixed_points.iter().map(|f| -f).collect(),
            edges: self
                .edges
                .iter()
                .map(|e| GraphEdge {
                    lo: -&e.hi,
                    hi: -&e.lo,
                    isotropy: e.isotropy,
                })
                .collect(),
        }
    }

    /// Substitutes fixed values for c₁..c₄ in every label (used to specialize
    /// generic graphs to the MA edge).
    pub fn substitute_c(&self, c: &[Rat; 4]) -> KarshonGraph {
        let sub = |f: &ParamForm| -> ParamForm {
            let mut constant = f.constant.clone();
            for i in 0..4 {
                constant += &(&f.c[i] * &c[i]);
            }
            ParamForm {
                constant,
                mu: f.mu.clone(),
                c: Default::default(),
            }
        };
        KarshonGraph {
            fat_vertices: self
                .fat_vertices
                .iter()
                .map(|v| FatVertex {
                    moment: sub(&v.moment),
                    area: sub(&v.area),
                    genus: v.genus,
                    class: v.class.clone(),
                })
                .collect(),
            fixed_points: self.fixed_points.iter().map(sub).collect(),
            edges: self
                .edges
                .iter()
                .map(|e| GraphEdge {
                    lo: sub(&e.lo),
                    hi: sub(&e.hi),
                    isotropy: e.isotropy,
                })
                .collect(),
        }
    }

    /// All area labels positive at p.
    pub fn labels_positive(&self, p: &ParamPoint) -> bool {
        self.fat_vertices.iter().all(|v| v.area.positive_at(p))
    }
}

/// Equality of decorated graphs up to translation, and up to translation
/// after a flip. Labels (including homology classes) compare exactly.
pub fn graphs_equal(g: &KarshonGraph, h: &KarshonGraph, p: &ParamPoint) -> GraphRelation {
    let gn = g.normalize(p);
    if gn == h.normalize(p) {
        return GraphRelation::Equal;
    }
    if gn == h.flip().normalize(p) {
        return GraphRelation::FlipEqual;
    }
    GraphRelation::Distinct
}

/// Projection of a toric polytope along the primitive direction ξ.
///
/// Facets perpendicular to ξ become fat vertices (they must sit at the
/// extremes of the moment interval), all other vertices become isolated
/// fixed points, and polytope edges with |⟨ξ,d⟩| ≥ 2 become labeled edges.
pub fn project(poly: &DelzantPolytope, xi: IVec, p: &ParamPoint) -> Result<KarshonGraph, Error> {
    if !is_primitive(xi) {
        return Err(Error::NonPrimitive(format!("({},{})", xi.0, xi.1)));
    }
    let report = poly.check_delzant(p);
    if !report.valid {
        return Err(Error::Degenerate(format!(
            "projection needs a valid polytope: {}",
            report.violations.join("; ")
        )));
    }
    let n = poly.len();
    let verts = poly.vertices()?;
    let moment =
        |v: &(ParamForm, ParamForm)| -> ParamForm { v.0.scale_int(xi.0) + v.1.scale_int(xi.1) };
    let vertex_moments: Vec<ParamForm> = verts.iter().map(moment).collect();
    let evals: Vec<Rat> = vertex_moments.iter().map(|m| m.eval(p)).collect();
    let min = evals.iter().min().unwrap().clone();
    let max = evals.iter().max().unwrap().clone();

    let pairing: Vec<i64> = poly
        .facets
        .iter()
        .map(|f| {
            let d = travel_dir(f.normal);
            xi.0 * d.0 + xi.1 * d.1
        })
        .collect();

    let mut fat_vertices = Vec::new();
    for i in 0..n {
        if pairing[i] != 0 {
            continue;
        }
        // facet i runs from vertex i-1 to vertex i; both have the same moment
        let m = vertex_moments[i % n].clone();
        let val = m.eval(p);
        if val != min && val != max {
            return Err(Error::Inconsistent(format!(
                "facet {i} is fixed by xi=({},{}) but not extremal",
                xi.0, xi.1
            )));
        }
        for adj in [(i + n - 1) % n, (i + 1) % n] {
            if pairing[adj].abs() != 1 {
                return Err(Error::Inconsistent(format!(
                    "isotropy edge (facet {adj}) touches the fixed facet {i}"
                )));
            }
        }
        fat_vertices.push(FatVertex {
            moment: m,
            area: poly.facet_length_form(i)?,
            genus: 0,
            class: poly.facets[i].class.clone(),
        });
    }
    if fat_vertices.len() > 2 {
        return Err(Error::Inconsistent(
            "more than two fixed facets in one projection".into(),
        ));
    }

    let on_fixed_facet = |v: usize| pairing[v] == 0 || pairing[(v + 1) % n] == 0;
    let fixed_points: Vec<ParamForm> = (0..n)
        .filter(|&v| !on_fixed_facet(v))
        .map(|v| vertex_moments[v].clone())
        .collect();

    let mut edges = Vec::new();
    for i in 0..n {
        let iso = pairing[i].abs();
        if iso < 2 {
            continue;
        }
        let a = (i + n - 1) % n;
        let b = i % n;
        if on_fixed_facet(a) || on_fixed_facet(b) {
            return Err(Error::Inconsistent(format!(
                "isotropy-{iso} sphere (facet {i}) has an endpoint on a fixed surface"
            )));
        }
        let (ma, mb) = (vertex_moments[a].clone(), vertex_moments[b].clone());
        let (lo, hi) = if ma.eval(p) <= mb.eval(p) {
            (ma, mb)
        } else {
            (mb, ma)
        };
        // Karshon's moment-difference identity: Δmoment = isotropy × lattice length
        debug_assert_eq!(
            (&hi - &lo).eval(p),
            poly.facet_length_form(i)?.eval(p).scale(iso),
            "moment difference must equal isotropy times lattice length"
        );
        edges.push(GraphEdge { lo, hi, isotropy: iso });
    }

    Ok(KarshonGraph {
        fat_vertices,
        fixed_points,
        edges,
    }
    .normalize(p))
}

/// The generic-case graph of the circle action z_{k,S} (Figure catalog):
/// bottom sphere B−kF−E_S at moment 0, top sphere B+kF−E_{∁S} at moment 1,
/// isolated points at c_i (i ∈ S) and 1−c_m (m ∉ S).
pub fn family_graph_generic(k: i64, cut: CutSet) -> KarshonGraph {
    let mut bottom_area = ParamForm::mu() - ParamForm::int(k);
    for i in cut.iter() {
        bottom_area -= &ParamForm::c(i);
    }
    let mut top_area = ParamForm::mu() + ParamForm::int(k);
    for m in cut.complement().iter() {
        top_area -= &ParamForm::c(m);
    }
    let mut fixed_points: Vec<ParamForm> = cut.iter().map(ParamForm::c).collect();
    for m in cut.complement().iter() {
        fixed_points.push(ParamForm::int(1) - ParamForm::c(m));
    }
    let bottom_class: Vec<usize> = cut.indices();
    let top_class: Vec<usize> = cut.complement().indices();
    KarshonGraph {
        fat_vertices: vec![
            FatVertex {
                moment: ParamForm::zero(),
                area: bottom_area,
                genus: 0,
                class: Some(H2Class::bf_minus(1, -k, &bottom_class)),
            },
            FatVertex {
                moment: ParamForm::int(1),
                area: top_area,
                genus: 0,
                class: Some(H2Class::bf_minus(1, k, &top_class)),
            },
        ],
        fixed_points,
        edges: Vec::new(),
    }
}

/// The same graph specialized to the MA edge (c_i = 1/2).
pub fn family_graph_ma(k: i64, cut: CutSet) -> KarshonGraph {
    let h = Rat::new(1, 2);
    family_graph_generic(k, cut).substitute_c(&[h.clone(), h.clone(), h.clone(), h])
}

/// Blow-up at a point inside the invariant surface at the minimum of Φ:
/// the fat vertex keeps its moment, loses area c, and a new fixed point
/// appears at Φ(S)+c. When the fat class and an exceptional index are known
/// the class becomes its strict transform.
pub fn blowup_min_surface(
    g: &KarshonGraph,
    c: &ParamForm,
    exceptional: Option<usize>,
    p: &ParamPoint,
) -> Result<KarshonGraph, Error> {
    let mut g = g.normalize(p);
    if g.fat_vertices.is_empty() {
        return Err(Error::Inconsistent("no fat vertex at the minimum".into()));
    }
    let min_moment = g
        .fixed_points
        .iter()
        .map(|f| f.eval(p))
        .chain(g.fat_vertices.iter().map(|v| v.moment.eval(p)))
        .min()
        .unwrap();
    let fat = &mut g.fat_vertices[0];
    if fat.moment.eval(p) != min_moment {
        return Err(Error::Inconsistent("no fat vertex at the minimum".into()));
    }
    let remaining = &fat.area - c;
    if !remaining.positive_at(p) || !c.positive_at(p) {
        return Err(Error::Degenerate(format!(
            "capacity {c} does not fit in the surface of area {}",
            fat.area
        )));
    }
    fat.area = remaining;
    if let (Some(cl), Some(e)) = (&fat.class, exceptional) {
        fat.class = Some(cl - &H2Class::e(e));
    }
    let new_point = &fat.moment + c;
    g.fixed_points.push(new_point);
    Ok(g.normalize(p))
}

/// Blow-up at an interior fixed point with incident isotropies m (above) and
/// n (below): the point splits into Φ(p)+mc and Φ(p)−nc joined by an
/// (m+n)-edge, and the outer edges keep their labels.
pub fn blowup_interior(
    g: &KarshonGraph,
    point_index: usize,
    c: &ParamForm,
    p: &ParamPoint,
) -> Result<KarshonGraph, Error> {
    let mut g = g.normalize(p);
    let phi = g
        .fixed_points
        .get(point_index)
        .cloned()
        .ok_or_else(|| Error::Inconsistent("no such fixed point".into()))?;
    if !c.positive_at(p) {
        return Err(Error::Degenerate("capacity must be positive".into()));
    }
    let phi_val = phi.eval(p);
    let mut m = 1i64; // isotropy above
    let mut n = 1i64; // isotropy below
    let mut kept_edges = Vec::new();
    for e in g.edges.drain(..) {
        if e.lo == phi {
            m = e.isotropy;
            kept_edges.push(e);
        } else if e.hi == phi {
            n = e.isotropy;
            kept_edges.push(e);
        } else {
            kept_edges.push(e);
        }
    }
    let above = &phi + &c.scale_int(m);
    let below = &phi - &c.scale_int(n);
    // the new points must not pass the neighboring labels
    let too_far = g
        .fixed_points
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != point_index)
        .map(|(_, f)| f.eval(p))
        .chain(g.fat_vertices.iter().map(|v| v.moment.eval(p)))
        .any(|other| {
            (other > phi_val && above.eval(p) >= other)
                || (other < phi_val && below.eval(p) <= other)
        });
    if too_far {
        return Err(Error::Degenerate(format!(
            "capacity {c} too large at fixed point {phi}"
        )));
    }
    for e in &mut kept_edges {
        if e.lo == phi {
            e.lo = above.clone();
        } else if e.hi == phi {
            e.hi = below.clone();
        }
    }
    kept_edges.push(GraphEdge {
        lo: below.clone(),
        hi: above.clone(),
        isotropy: m + n,
    });
    g.fixed_points.remove(point_index);
    g.fixed_points.push(above);
    g.fixed_points.push(below);
    g.edges = kept_edges;
    Ok(g.normalize(p))
}

/// Report of the MA-edge enumeration.
#[derive(Clone, Serialize)]
pub struct MaEnumeration {
    pub mu: Rat,
    pub actions: Vec<(ActionName, KarshonGraph)>,
    pub warnings: Vec<String>,
}

/// All Hamiltonian circle actions on the MA edge at the given μ: the
/// z_{k,S}-family graphs whose area labels are all positive, de-duplicated up
/// to flip. Emits the documented warning where the Proposition-style
/// inequality (μ > k + |S|/2) differs from label positivity.
pub fn enumerate_ma_actions(mu: &Rat) -> Result<MaEnumeration, Error> {
    if *mu <= Rat::one() {
        return Err(Error::Degenerate("the MA edge needs mu > 1".into()));
    }
    let p = ParamPoint::ma(mu.clone());
    let mut kept: Vec<(ActionName, KarshonGraph)> = Vec::new();
    let mut warnings = Vec::new();
    let mut k = 0i64;
    while Rat::int(k) < *mu {
        for cut in CutSet::all() {
            let g = family_graph_ma(k, cut);
            let name = ActionName::Z { k, cut };
            let prop_threshold = Rat::int(k) + Rat::new(cut.len() as i64, 2);
            let prop_exists = *mu > prop_threshold;
            let labels_exist = g.labels_positive(&p);
            if prop_exists && !labels_exist {
                warnings.push(format!(
                    "{name}: existence condition mu > {prop_threshold} holds but the top \
                     sphere label {} is not positive at mu = {mu}; label positivity wins",
                    g.fat_vertices[1].area
                ));
            }
            if !labels_exist {
                continue;
            }
            if kept
                .iter()
                .all(|(_, h)| graphs_equal(&g, h, &p) == GraphRelation::Distinct)
            {
                kept.push((name, g));
            }
        }
        k += 1;
    }
    Ok(MaEnumeration {
        mu: mu.clone(),
        actions: kept,
        warnings,
    })
}

/// Matches a graph against the named z_{k,S} catalog (generic or MA-edge
/// labels, depending on the working point). Returns the sign −1 when the
/// match is up to flip.
pub fn identify(g: &KarshonGraph, p: &ParamPoint) -> Option<(i64, ActionName)> {
    let bound = {
        // k never exceeds μ in an existing action
        let mut k = 0i64;
        while Rat::int(k) < p.mu {
            k += 1;
        }
        k + 2
    };
    let ma = p.is_ma_edge();
    let mut flip_hit = None;
    for k in 0..=bound {
        for cut in CutSet::all() {
            let candidate = if ma {
                family_graph_ma(k, cut)
            } else {
                family_graph_generic(k, cut)
            };
            match graphs_equal(g, &candidate, p) {
                GraphRelation::Equal => return Some((1, ActionName::Z { k, cut })),
                GraphRelation::FlipEqual => {
                    flip_hit.get_or_insert((-1, ActionName::Z { k, cut }));
                }
                GraphRelation::Distinct => {}
            }
        }
    }
    flip_hit
}

/// Verify that det(±ξ) conventions stay coherent: projecting along −ξ flips.
pub fn project_flip_invariance(
    poly: &DelzantPolytope,
    xi: IVec,
    p: &ParamPoint,
) -> Result<bool, Error> {
    let g = project(poly, xi, p)?;
    let h = project(poly, (-xi.0, -xi.1), p)?;
    Ok(graphs_equal(&g, &h, p) == GraphRelation::FlipEqual
        || graphs_equal(&g, &h, p) == GraphRelation::Equal)
}

pub fn assert_det_one(a: IVec, b: IVec) -> bool {
    det(a, b) == 1
}
