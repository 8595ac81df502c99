//! The polytope catalog.
//!
//! Entries come in two kinds: hand-transcribed figures (reconstructed from
//! facet classes, corner smoothness, the fan relation and the printed vertex
//! labels — drawn coordinates in the source figures are schematic), and
//! builder-generated toric models T_{k,S} obtained from the Hirzebruch
//! trapezoid by corner cuts. Where a figure leaves facets unlabeled or a
//! label underdetermines the polytope, the entry is completed by requiring
//! verify_facet_classes to pass; such reconstructions are noted on the entry.

use crate::homology::H2Class;
use crate::names::{ActionName, CutSet, Sigma, SIGMA_ID};
use crate::param::{ParamForm, ParamPoint};
use crate::polytope::{DelzantPolytope, Facet};
use crate::rational::Rat;
use crate::Error;

#[derive(Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub polytope: DelzantPolytope,
    pub x_action: Option<ActionName>,
    pub y_action: Option<ActionName>,
    /// Documented parameter range, as prose.
    pub range: String,
    /// A representative point of the documented range where check_delzant
    /// and verify_facet_classes must pass.
    pub validity_point: ParamPoint,
}

fn mu() -> ParamForm {
    ParamForm::mu()
}

fn c(i: usize) -> ParamForm {
    ParamForm::c(i)
}

fn int(n: i64) -> ParamForm {
    ParamForm::int(n)
}

fn facet(normal: (i64, i64), support: ParamForm, class: H2Class) -> Facet {
    Facet::new(normal, support, class)
}

/// A generic point heavy enough for T_{k,S}-type entries with the given k.
pub fn generic_point_for_k(k: i64) -> ParamPoint {
    let g = ParamPoint::generic();
    ParamPoint::new(Rat::int(k.abs() + 3), g.c)
}

/// Hirzebruch trapezoid H_k: facets F (bottom, slope −k), B+kF (right, x=1),
/// F (top, slope −k), B−kF (left, x=0); height μ−k on the left.
pub fn hirzebruch(k: i64) -> DelzantPolytope {
    DelzantPolytope::new(vec![
        facet((k, 1), ParamForm::zero(), H2Class::f()),
        facet((-1, 0), int(-1), H2Class::bf_minus(1, k, &[])),
        facet((k, -1), int(k) - mu(), H2Class::f()),
        facet((1, 0), ParamForm::zero(), H2Class::bf_minus(1, -k, &[])),
    ])
}

/// The toric model T_{k,S}: H_k with corner cuts E_m (m ∉ S) chained at the
/// bottom-right corner and cuts E_i (i ∈ S) chained at the bottom-left
/// corner. Its projections are the circle actions (z_{k,S}, w_{k,S})
/// (w replaced by y_{0,S} when k = 0).
pub fn t_ks(k: i64, cut: CutSet) -> DelzantPolytope {
    let mut p = hirzebruch(k);
    let mut corner = 0usize; // vertex between the bottom chain end and the right facet
    for m in cut.complement().iter() {
        p = p.corner_cut(corner, c(m), H2Class::e(m));
        corner += 1;
    }
    let left_pos = p.len() - 1; // the left facet stays at this index
    for i in cut.iter() {
        p = p.corner_cut(left_pos, c(i), H2Class::e(i));
    }
    p
}

pub fn t_ks_entry(k: i64, cut: CutSet) -> CatalogEntry {
    let y_action = if k >= 1 {
        Some(ActionName::W { k, cut })
    } else {
        Some(ActionName::Y0 { cut })
    };
    CatalogEntry {
        name: if cut.is_empty() {
            format!("T_{k}")
        } else {
            format!("T_{{{k},{cut}}}")
        },
        polytope: t_ks(k, cut),
        x_action: Some(ActionName::Z { k, cut }),
        y_action,
        range: format!("generic reduced points with mu > {k} + sum of the cut capacities"),
        validity_point: generic_point_for_k(k),
    }
}

/// Figure "Toric action T_{0,12}": octagon with the six labeled classes
/// E₁..E₄, B−E₁−E₂, B−E₃−E₄; the two unlabeled horizontal facets are forced
/// to F−E₁−E₄ (bottom) and F−E₂−E₃ (top) by the fan relations and ΣA = −K.
pub fn paper_t012() -> DelzantPolytope {
    DelzantPolytope::new(vec![
        facet((0, 1), ParamForm::zero(), H2Class::bf_minus(0, 1, &[1, 4])),
        facet((-1, 1), c(4) - int(1), H2Class::e(4)),
        facet((-1, 0), int(-1), H2Class::bf_minus(1, 0, &[3, 4])),
        facet((-1, -1), c(3) - mu() - int(1), H2Class::e(3)),
        facet((0, -1), -mu(), H2Class::bf_minus(0, 1, &[2, 3])),
        facet((1, -1), c(2) - mu(), H2Class::e(2)),
        facet((1, 0), ParamForm::zero(), H2Class::bf_minus(1, 0, &[1, 2])),
        facet((1, 1), c(1), H2Class::e(1)),
    ])
}

/// T_{0,1i} for i = 2,3,4: index 2 ↔ i relabeling of the T_{0,12} figure.
pub fn paper_t01i(i: usize) -> DelzantPolytope {
    match i {
        2 => paper_t012(),
        3 => paper_t012().permute_e(&[1, 3, 2, 4]),
        4 => paper_t012().permute_e(&[1, 4, 3, 2]),
        _ => panic!("T_{{0,1i}} needs i in 2..=4"),
    }
}

/// Figure "Toric action T₁" of §4.3 (the octagon computing S(z₁)).
/// Left facet B−F from (0,0) to (0,μ−1); the top horizontal is E₂−E₄ and the
/// bottom horizontal E₁−E₃ as labeled.
pub fn paper_z1() -> DelzantPolytope {
    DelzantPolytope::new(vec![
        facet((0, 1), c(1) - int(1), H2Class::bfe([0, 0, 1, 0, -1, 0])),
        facet((-1, 1), c(1) + c(3) - int(2), H2Class::e(3)),
        facet((-1, 0), int(-1), H2Class::bf_minus(1, 1, &[1, 2, 3, 4])),
        facet((-1, -1), c(2) + c(4) - mu() - int(1), H2Class::e(4)),
        facet((0, -1), c(2) - mu(), H2Class::bfe([0, 0, 0, 1, 0, -1])),
        facet((1, -1), int(1) - mu(), H2Class::bf_minus(0, 1, &[2])),
        facet((1, 0), ParamForm::zero(), H2Class::bf_minus(1, -1, &[])),
        facet((1, 1), ParamForm::zero(), H2Class::bf_minus(0, 1, &[1])),
    ])
}

/// Figure "Toric action (z_{1,4}, s_{1,4})": the non-NEF polytope (its left
/// facet class B−F−E₄ has c₁ = −1).
pub fn paper_z14() -> DelzantPolytope {
    DelzantPolytope::new(vec![
        facet((0, 1), c(3) - int(1), H2Class::e(3)),
        facet((-1, 0), int(-1), H2Class::bf_minus(1, 1, &[1, 2, 3])),
        facet((-1, -1), c(1) + c(2) - mu() - int(1), H2Class::e(2)),
        facet((0, -1), c(1) - mu(), H2Class::bfe([0, 0, 1, -1, 0, 0])),
        facet((1, -1), int(1) - mu(), H2Class::bf_minus(0, 1, &[1])),
        facet((1, 0), ParamForm::zero(), H2Class::bfe([1, -1, 0, 0, 0, -1])),
        facet((2, 1), c(4), H2Class::e(4)),
        facet((1, 1), ParamForm::zero(), H2Class::bf_minus(0, 1, &[3, 4])),
    ])
}

/// Figure "NEF polytope" (left): the NEF auxiliary whose [[1,0],[1,1]]
/// transform projects to t_{1,4}.
pub fn paper_nef_t14() -> DelzantPolytope {
    DelzantPolytope::new(vec![
        facet((0, 1), c(3) - int(1), H2Class::bfe([0, 0, 0, 0, 1, -1])),
        facet((-1, 0), int(-1), H2Class::bf_minus(1, 1, &[1, 2, 3])),
        facet((-1, -1), c(1) + c(2) - mu() - int(1), H2Class::e(2)),
        facet((0, -1), c(1) - mu(), H2Class::bfe([0, 0, 1, -1, 0, 0])),
        facet((1, -1), int(1) - mu(), H2Class::bf_minus(0, 1, &[1])),
        facet((1, 0), ParamForm::zero(), H2Class::bf_minus(1, -1, &[])),
        facet((1, 1), ParamForm::zero(), H2Class::bf_minus(0, 1, &[3, 4])),
        facet((1, 2), c(3) + c(4) - int(1), H2Class::e(4)),
    ])
}

/// Figure "Toric action (x₁,y₁)" of §4.3 (left): the NEF auxiliary whose
/// [[1,0],[1,1]] transform projects to s_{1,4} (up to translation). The top
/// horizontal facet is F−E₁−E₂ (reconstructed; the figure prints "F−E₂",
/// which fails the fan square −2 and ΣA = −K).
pub fn paper_nef_x1y1() -> DelzantPolytope {
    DelzantPolytope::new(vec![
        facet((0, 1), ParamForm::zero(), H2Class::bf_minus(0, 1, &[3, 4])),
        facet((-1, 1), c(4) - int(1), H2Class::e(4)),
        facet((-1, 0), int(-1), H2Class::bf_minus(1, 0, &[1, 4])),
        facet((-1, -1), c(1) - mu() - int(1), H2Class::bfe([0, 0, 1, -1, 0, 0])),
        facet((-1, -2), c(1) + c(2) - mu().scale_int(2) - int(1), H2Class::e(2)),
        facet((0, -1), -mu(), H2Class::bf_minus(0, 1, &[1, 2])),
        facet((1, 0), ParamForm::zero(), H2Class::bf_minus(1, 0, &[3])),
        facet((1, 1), c(3), H2Class::e(3)),
    ])
}

/// Generalized appendix-chain polytope, right flavor: H₁ with the top-right
/// chain over ∁(S'∪{j}), the bottom-left chain over S', and a single
/// bottom-right cut E_j. Projections: (z_{1,S'}, c-action).
/// (base = ∅, j = 4) is the paper's APP_T1 of Figure "Auxiliary toric actions".
pub fn gc_right(base: CutSet, j: usize) -> DelzantPolytope {
    assert!(!base.contains(j));
    let mut p = hirzebruch(1);
    for m in base.insert(j).complement().iter() {
        p = p.corner_cut(1, c(m), H2Class::e(m));
    }
    p = p.corner_cut(0, c(j), H2Class::e(j));
    let left_pos = p.len() - 1;
    for i in base.iter() {
        p = p.corner_cut(left_pos, c(i), H2Class::e(i));
    }
    p
}

/// Left flavor: the E_j cut moved to the bottom-left chain.
/// Projections: (z_{1,S'∪{j}}, c-action). (∅, 4) is the paper's APP_T14.
pub fn gc_left(base: CutSet, j: usize) -> DelzantPolytope {
    assert!(!base.contains(j));
    let mut p = hirzebruch(1);
    for m in base.insert(j).complement().iter() {
        p = p.corner_cut(1, c(m), H2Class::e(m));
    }
    let left_pos = p.len() - 1;
    for i in base.insert(j).iter() {
        p = p.corner_cut(left_pos, c(i), H2Class::e(i));
    }
    p
}

/// The rectangle companions of the generalized chain ((∅,4) gives the
/// paper's (a₁,b₁) and (a_{1,4},b_{1,4}) polytopes). Right flavor:
/// μ×1-rectangle with the top-left chain over ∁(S'∪{j}), bottom-left chain
/// over S', and a bottom-right cut E_j. Projections: (z_{0,∁{j}}, b-action).
pub fn gc_ab_right(base: CutSet, j: usize) -> DelzantPolytope {
    assert!(!base.contains(j));
    let mut p = hirzebruch(0);
    let mut pos = 2usize; // index of the top facet
    for m in base.insert(j).complement().iter() {
        p = p.corner_cut(pos, c(m), H2Class::e(m));
        pos += 1;
    }
    p = p.corner_cut(0, c(j), H2Class::e(j));
    let left_pos = p.len() - 1;
    for i in base.iter() {
        p = p.corner_cut(left_pos, c(i), H2Class::e(i));
    }
    p
}

/// Left flavor: projections (z_{0,1234}, b-action).
pub fn gc_ab_left(base: CutSet, j: usize) -> DelzantPolytope {
    assert!(!base.contains(j));
    let mut p = hirzebruch(0);
    let mut pos = 2usize;
    for m in base.insert(j).complement().iter() {
        p = p.corner_cut(pos, c(m), H2Class::e(m));
        pos += 1;
    }
    let left_pos = p.len() - 1;
    for i in base.insert(j).iter() {
        p = p.corner_cut(left_pos, c(i), H2Class::e(i));
    }
    p
}

/// Appendix Figure "Auxiliary Delzant polytopes" (aux1), polytopes 1..6,
/// with the implicit classes completed by the fan relations.
pub fn aux1(n: u8) -> DelzantPolytope {
    let f = |nrm, s, cl| facet(nrm, s, cl);
    match n {
        1 => DelzantPolytope::new(vec![
            f((1, 1), ParamForm::zero(), H2Class::bf_minus(0, 1, &[3])),
            f((-1, 0), int(-1), H2Class::bf_minus(1, 1, &[1, 2])),
            f((-1, -1), c(1) + c(2) - mu() - int(1), H2Class::e(2)),
            f((0, -1), c(1) - mu(), H2Class::bfe([0, 0, 1, -1, 0, 0])),
            f((1, -1), int(1) - mu(), H2Class::bf_minus(0, 1, &[1])),
            f((1, 0), ParamForm::zero(), H2Class::bfe([1, -1, 0, 0, -1, -1])),
            f((3, 1), c(3) + c(4), H2Class::e(4)),
            f((2, 1), c(3), H2Class::bfe([0, 0, 0, 0, 1, -1])),
        ]),
        2 => DelzantPolytope::new(vec![
            f((1, 1), ParamForm::zero(), H2Class::bf_minus(0, 1, &[3])),
            f((-1, 0), int(-1), H2Class::bf_minus(1, 1, &[1, 2])),
            f((-1, -1), c(1) + c(2) - mu() - int(1), H2Class::e(2)),
            f((0, -1), c(1) - mu(), H2Class::bfe([0, 0, 1, -1, 0, 0])),
            f((1, -1), int(1) - mu(), H2Class::bf_minus(0, 1, &[1, 4])),
            f((2, -1), int(1) + c(4) - mu(), H2Class::e(4)),
            f((1, 0), ParamForm::zero(), H2Class::bfe([1, -1, 0, 0, -1, -1])),
            f((2, 1), c(3), H2Class::e(3)),
        ]),
        3 => DelzantPolytope::new(vec![
            f((1, 1), ParamForm::zero(), H2Class::bf_minus(0, 1, &[4])),
            f((-1, 0), int(-1), H2Class::bf_minus(1, 1, &[1, 2])),
            f((-1, -1), c(1) + c(2) - mu() - int(1), H2Class::e(2)),
            f((0, -1), c(1) - mu(), H2Class::bfe([0, 0, 1, -1, 0, 0])),
            f((1, -1), int(1) - mu(), H2Class::bf_minus(0, 1, &[1, 3])),
            f((2, -1), int(1) + c(3) - mu(), H2Class::e(3)),
            f((1, 0), ParamForm::zero(), H2Class::bfe([1, -1, 0, -1, 0, 0])),
            f((2, 1), c(4), H2Class::e(4)),
        ]),
        4 => DelzantPolytope::new(vec![
            f((0, 1), c(4) - int(1), H2Class::e(4)),
            f((-1, 0), int(-1), H2Class::bf_minus(1, 1, &[1, 2, 4])),
            f((-1, -1), c(1) + c(2) - mu() - int(1), H2Class::e(2)),
            f((0, -1), c(1) - mu(), H2Class::bfe([0, 0, 1, -1, 0, 0])),
            f((1, -1), int(1) - mu(), H2Class::bf_minus(0, 1, &[1, 3])),
            f((2, -1), int(1) + c(3) - mu(), H2Class::e(3)),
            f((1, 0), ParamForm::zero(), H2Class::bfe([1, -1, 0, -1, 0, 0])),
            f((1, 1), ParamForm::zero(), H2Class::bf_minus(0, 1, &[4])),
        ]),
        5 => DelzantPolytope::new(vec![
            f((0, 1), c(4) - int(1), H2Class::e(4)),
            f((-1, 0), int(-1), H2Class::bf_minus(1, 1, &[1, 2, 4])),
            f((-1, -1), c(1) + c(2) - mu() - int(1), H2Class::e(2)),
            f((0, -1), c(1) - mu(), H2Class::bfe([0, 0, 1, -1, 0, 0])),
            f((1, -1), int(1) - mu(), H2Class::bf_minus(0, 1, &[1])),
            f((1, 0), ParamForm::zero(), H2Class::bfe([1, -1, 0, -1, 0, 0])),
            f((2, 1), c(3), H2Class::e(3)),
            f((1, 1), ParamForm::zero(), H2Class::bf_minus(0, 1, &[3, 4])),
        ]),
        6 => DelzantPolytope::new(vec![
            f((1, 1), ParamForm::zero(), H2Class::bf_minus(0, 1, &[3, 4])),
            f((-1, 0), int(-1), H2Class::bf_minus(1, 1, &[1, 2])),
            f((-1, -1), c(1) + c(2) - mu() - int(1), H2Class::e(2)),
            f((0, -1), c(1) - mu(), H2Class::bfe([0, 0, 1, -1, 0, 0])),
            f((1, -1), int(1) - mu(), H2Class::bf_minus(0, 1, &[1])),
            f((1, 0), ParamForm::zero(), H2Class::bfe([1, -1, 0, -1, 0, 0])),
            f((2, 1), c(3), H2Class::bfe([0, 0, 0, 0, 1, -1])),
            f((3, 2), c(3) + c(4), H2Class::e(4)),
        ]),
        _ => panic!("aux1 index must be 1..=6"),
    }
}

/// Appendix Figure "Auxiliary Delzant polytopes" (aux2), polytopes 1..6.
pub fn aux2(n: u8) -> DelzantPolytope {
    let f = |nrm, s, cl| facet(nrm, s, cl);
    match n {
        1 => DelzantPolytope::new(vec![
            f((0, 1), ParamForm::zero(), H2Class::bf_minus(0, 1, &[3])),
            f((-1, 0), int(-1), H2Class::b()),
            f((0, -1), -mu(), H2Class::bf_minus(0, 1, &[1])),
            f((1, -1), c(1) - mu(), H2Class::bfe([0, 0, 1, -1, 0, 0])),
            f((2, -1), c(1) + c(2) - mu(), H2Class::e(2)),
            f((1, 0), ParamForm::zero(), H2Class::bf_minus(1, 0, &[1, 2, 3, 4])),
            f((2, 1), c(3) + c(4), H2Class::e(4)),
            f((1, 1), c(3), H2Class::bfe([0, 0, 0, 0, 1, -1])),
        ]),
        2 => DelzantPolytope::new(vec![
            f((0, 1), ParamForm::zero(), H2Class::bf_minus(0, 1, &[3])),
            f((-1, 0), int(-1), H2Class::bf_minus(1, 0, &[4])),
            f((-1, -1), c(4) - mu() - int(1), H2Class::e(4)),
            f((0, -1), -mu(), H2Class::bf_minus(0, 1, &[1, 4])),
            f((1, -1), c(1) - mu(), H2Class::bfe([0, 0, 1, -1, 0, 0])),
            f((2, -1), c(1) + c(2) - mu(), H2Class::e(2)),
            f((1, 0), ParamForm::zero(), H2Class::bf_minus(1, 0, &[1, 2, 3])),
            f((1, 1), c(3), H2Class::e(3)),
        ]),
        3 => DelzantPolytope::new(vec![
            f((0, 1), ParamForm::zero(), H2Class::bf_minus(0, 1, &[4])),
            f((-1, 0), int(-1), H2Class::bf_minus(1, 0, &[3])),
            f((-1, -1), c(3) - mu() - int(1), H2Class::e(3)),
            f((0, -1), -mu(), H2Class::bf_minus(0, 1, &[1, 3])),
            f((1, -1), c(1) - mu(), H2Class::bfe([0, 0, 1, -1, 0, 0])),
            f((2, -1), c(1) + c(2) - mu(), H2Class::e(2)),
            f((1, 0), ParamForm::zero(), H2Class::bf_minus(1, 0, &[1, 2, 4])),
            f((1, 1), c(4), H2Class::e(4)),
        ]),
        4 => DelzantPolytope::new(vec![
            f((0, 1), ParamForm::zero(), H2Class::bf_minus(0, 1, &[4])),
            f((-1, 1), c(4) - int(1), H2Class::e(4)),
            f((-1, 0), int(-1), H2Class::bf_minus(1, 0, &[3, 4])),
            f((-1, -1), c(3) - mu() - int(1), H2Class::e(3)),
            f((0, -1), -mu(), H2Class::bf_minus(0, 1, &[1, 3])),
            f((1, -1), c(1) - mu(), H2Class::bfe([0, 0, 1, -1, 0, 0])),
            f((2, -1), c(1) + c(2) - mu(), H2Class::e(2)),
            f((1, 0), ParamForm::zero(), H2Class::bf_minus(1, 0, &[1, 2])),
        ]),
        5 => DelzantPolytope::new(vec![
            f((0, 1), ParamForm::zero(), H2Class::bf_minus(0, 1, &[3, 4])),
            f((-1, 1), c(4) - int(1), H2Class::e(4)),
            f((-1, 0), int(-1), H2Class::bf_minus(1, 0, &[4])),
            f((0, -1), -mu(), H2Class::bf_minus(0, 1, &[1])),
            f((1, -1), c(1) - mu(), H2Class::bfe([0, 0, 1, -1, 0, 0])),
            f((2, -1), c(1) + c(2) - mu(), H2Class::e(2)),
            f((1, 0), ParamForm::zero(), H2Class::bf_minus(1, 0, &[1, 2, 3])),
            f((1, 1), c(3), H2Class::e(3)),
        ]),
        6 => DelzantPolytope::new(vec![
            f((0, 1), ParamForm::zero(), H2Class::bf_minus(0, 1, &[3, 4])),
            f((-1, 0), int(-1), H2Class::b()),
            f((0, -1), -mu(), H2Class::bf_minus(0, 1, &[1])),
            f((1, -1), c(1) - mu(), H2Class::bfe([0, 0, 1, -1, 0, 0])),
            f((2, -1), c(1) + c(2) - mu(), H2Class::e(2)),
            f((1, 0), ParamForm::zero(), H2Class::bf_minus(1, 0, &[1, 2, 3])),
            f((1, 1), c(3), H2Class::bfe([0, 0, 0, 0, 1, -1])),
            f((1, 2), c(3) + c(4), H2Class::e(4)),
        ]),
        _ => panic!("aux2 index must be 1..=6"),
    }
}

/// Generic point adapted to a chain permutation: the c-values are permuted
/// along with the blow-up indices so every relabeled facet length stays
/// positive.
pub fn sigma_point(sigma: &Sigma) -> ParamPoint {
    let g = ParamPoint::generic();
    let mut c: [Rat; 4] = g.c.clone();
    for i in 0..4 {
        c[sigma[i] - 1] = g.c[i].clone();
    }
    ParamPoint::new(g.mu, c)
}

fn named(name: &str, polytope: DelzantPolytope, x: Option<ActionName>, y: Option<ActionName>, range: &str) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        polytope,
        x_action: x,
        y_action: y,
        range: range.to_string(),
        validity_point: ParamPoint::generic(),
    }
}

/// All fixed (non-parametric) entries, for validation sweeps.
pub fn fixed_entries() -> Vec<CatalogEntry> {
    let mut out = vec![
        named(
            "T012",
            paper_t012(),
            Some(ActionName::z(0, &[1, 2])),
            None,
            "generic; on the MA edge the two F-facets degenerate",
        ),
        named(
            "T013",
            paper_t01i(3),
            Some(ActionName::z(0, &[1, 3])),
            None,
            "generic",
        ),
        named(
            "T014",
            paper_t01i(4),
            Some(ActionName::z(0, &[1, 4])),
            None,
            "generic",
        ),
        named(
            "Z1",
            paper_z1(),
            Some(ActionName::z1()),
            None,
            "generic with mu > 1",
        ),
        named(
            "Z14",
            paper_z14(),
            Some(ActionName::z14()),
            Some(ActionName::S14),
            "generic with mu > 1 + c4 (not NEF: c1(B-F-E4) = -1)",
        ),
        named("NEF_T14", paper_nef_t14(), None, None, "generic with mu > 1"),
        named("NEF_X1Y1", paper_nef_x1y1(), None, None, "generic with mu > 1"),
        named(
            "APP_T1",
            gc_right(CutSet::EMPTY, 4),
            Some(ActionName::z1()),
            Some(ActionName::GcC {
                base: CutSet::EMPTY,
                j: 4,
                left: false,
            }),
            "generic with mu > 1",
        ),
        named(
            "APP_T14",
            gc_left(CutSet::EMPTY, 4),
            Some(ActionName::z14()),
            Some(ActionName::GcC {
                base: CutSet::EMPTY,
                j: 4,
                left: true,
            }),
            "generic with mu > 1 + c4",
        ),
        named(
            "AB1",
            gc_ab_right(CutSet::EMPTY, 4),
            Some(ActionName::z(0, &[1, 2, 3])),
            Some(ActionName::GcB {
                base: CutSet::EMPTY,
                j: 4,
                left: false,
            }),
            "generic",
        ),
        named(
            "AB14",
            gc_ab_left(CutSet::EMPTY, 4),
            Some(ActionName::z(0, &[1, 2, 3, 4])),
            Some(ActionName::GcB {
                base: CutSet::EMPTY,
                j: 4,
                left: true,
            }),
            "generic with mu > sum of the c_i",
        ),
    ];
    for n in 1..=6u8 {
        out.push(named(
            &format!("AUX1_{n}"),
            aux1(n),
            Some(ActionName::Aux1X { n, sigma: SIGMA_ID }),
            Some(ActionName::Aux1Y { n, sigma: SIGMA_ID }),
            "generic with mu > 1 + c3 + c4",
        ));
        out.push(named(
            &format!("AUX2_{n}"),
            aux2(n),
            Some(ActionName::Aux2S { n, sigma: SIGMA_ID }),
            Some(ActionName::Aux2T { n, sigma: SIGMA_ID }),
            "generic",
        ));
    }
    // the T_{k,S} toric models for small k
    for k in 0..=3i64 {
        for cut in CutSet::all() {
            out.push(t_ks_entry(k, cut));
        }
    }
    out
}

/// Lookup by name for the CLI: "T_k"/"T_{k,S}" take k from the argument,
/// literal names like "T_{0,12}" or "T012", "Z14", "AUX2_3" are fixed.
pub fn lookup(name: &str, k: Option<i64>) -> Result<CatalogEntry, Error> {
    let norm: String = name
        .chars()
        .filter(|ch| !ch.is_whitespace())
        .collect::<String>();
    let bare = norm.replace(['{', '}'], "");
    match bare.as_str() {
        "T_k" | "Tk" => {
            let k = k.ok_or_else(|| Error::UnknownCatalog("T_k needs k".into()))?;
            return Ok(t_ks_entry(k, CutSet::EMPTY));
        }
        "T_k,4" | "Tk4" => {
            let k = k.ok_or_else(|| Error::UnknownCatalog("T_{k,4} needs k".into()))?;
            return Ok(t_ks_entry(k, CutSet::from_indices(&[4])));
        }
        _ => {}
    }
    // the paper's T_{0,1i} figures take precedence over the builder models
    let fixed_alias = match bare.as_str() {
        "T_0,12" | "T0,12" | "T012" => Some("T012"),
        "T_0,13" | "T0,13" | "T013" => Some("T013"),
        "T_0,14" | "T0,14" | "T014" => Some("T014"),
        _ => None,
    };
    if let Some(key) = fixed_alias {
        return fixed_entries()
            .into_iter()
            .find(|e| e.name == key)
            .ok_or_else(|| Error::UnknownCatalog(name.to_string()));
    }
    // T_<k> or T_<k>,<digits> builder names
    if let Some(rest) = bare.strip_prefix("T_") {
        let (kpart, cutpart) = match rest.split_once(',') {
            Some((a, b)) => (a, Some(b)),
            None => (rest, None),
        };
        if let Ok(kk) = kpart.parse::<i64>() {
            let cut = match cutpart {
                Some(digits) => {
                    let idx: Option<Vec<usize>> = digits
                        .chars()
                        .map(|d| d.to_digit(10).map(|v| v as usize))
                        .collect();
                    match idx {
                        Some(v) if v.iter().all(|i| (1..=4).contains(i)) => {
                            CutSet::from_indices(&v)
                        }
                        _ => return Err(Error::UnknownCatalog(name.to_string())),
                    }
                }
                None => CutSet::EMPTY,
            };
            // the paper's T_{0,12} etc. are the figure entries, not the
            // builder models; those are reachable by their plain names below
            return Ok(t_ks_entry(kk, cut));
        }
    }
    fixed_entries()
        .into_iter()
        .find(|e| e.name == bare)
        .ok_or_else(|| Error::UnknownCatalog(name.to_string()))
}
