//! The quantum homology ring of the 4-fold blow-up, over the truncated
//! Novikov series, with the closed product formula of the rational-surface
//! computation: for classes a, b in H₂,
//!
//!   a∗b = (a·b)·pt  +  Σ_{A exceptional} (a·A)(b·A)·A·q^{−1} t^{−ω(A)}
//!                   +  Σ_{A conic}      (a·A)(b·A)·X·q^{−2} t^{−ω(A)} ,
//!
//! where the 16 exceptional classes have c₁ = 1 and the 10 conic classes
//! have c₁ = 2, and X (the fundamental class) is the unit.

use crate::homology::H2Class;
use crate::novikov::{geom_expand, TSeries};
use crate::param::ParamPoint;
use crate::rational::Rat;
use crate::Error;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// Component label of a quantum class: the point class, a basis vector of
/// H₂ (BFE order), or the fundamental class.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub enum CompClass {
    Pt,
    H2(usize),
    X,
}

impl CompClass {
    pub fn degree(self) -> i64 {
        match self {
            CompClass::Pt => 0,
            CompClass::H2(_) => 2,
            CompClass::X => 4,
        }
    }

    pub fn label(self) -> String {
        match self {
            CompClass::Pt => "pt".into(),
            CompClass::H2(i) => ["B", "F", "E1", "E2", "E3", "E4"][i].into(),
            CompClass::X => "X".into(),
        }
    }
}

/// Element of QH_*(M): finitely many components (class, q-power) → series.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QHElement {
    pub components: BTreeMap<(CompClass, i64), TSeries>,
}

impl QHElement {
    pub fn zero() -> Self {
        QHElement::default()
    }

    pub fn insert(&mut self, class: CompClass, qpow: i64, series: TSeries) {
        if series.is_zero() {
            // keep the floor information by merging with an existing entry
            if let Some(existing) = self.components.get_mut(&(class, qpow)) {
                *existing = existing.add(&series);
            }
            return;
        }
        match self.components.entry((class, qpow)) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(series);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&series);
                if sum.is_zero() {
                    let floor = sum.floor().clone();
                    o.insert(TSeries::zero(floor));
                } else {
                    o.insert(sum);
                }
            }
        }
    }

    /// a ⊗ q^d · series for an integral homology class a.
    pub fn from_h2(class: &H2Class, qpow: i64, series: TSeries) -> Self {
        let mut out = QHElement::zero();
        let coeffs = class.to_bfe().coeffs;
        for (i, coeff) in coeffs.iter().enumerate() {
            if *coeff != 0 {
                out.insert(CompClass::H2(i), qpow, series.scale(&Rat::int(*coeff)));
            }
        }
        out
    }

    /// scalar ⊗ q^d (an X-component).
    pub fn from_scalar(qpow: i64, series: TSeries) -> Self {
        let mut out = QHElement::zero();
        out.insert(CompClass::X, qpow, series);
        out
    }

    pub fn unit(floor: Rat) -> Self {
        QHElement::from_scalar(0, TSeries::one(floor))
    }

    pub fn add(&self, other: &QHElement) -> QHElement {
        let mut out = self.clone();
        for ((class, q), s) in &other.components {
            out.insert(*class, *q, s.clone());
        }
        out
    }

    pub fn sub(&self, other: &QHElement) -> QHElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> QHElement {
        QHElement {
            components: self
                .components
                .iter()
                .map(|(k, s)| (*k, s.neg()))
                .collect(),
        }
    }

    pub fn scale_series(&self, s: &TSeries) -> QHElement {
        QHElement {
            components: self
                .components
                .iter()
                .map(|(k, t)| (*k, t.mul(s)))
                .collect(),
        }
    }

    pub fn shift_q(&self, dq: i64) -> QHElement {
        QHElement {
            components: self
                .components
                .iter()
                .map(|((c, q), s)| ((*c, q + dq), s.clone()))
                .collect(),
        }
    }

    /// Collapses q (sets q = 1), merging components of the same class.
    pub fn forget_q(&self) -> QHElement {
        let mut out = QHElement::zero();
        for ((class, _), s) in &self.components {
            out.insert(*class, 0, s.clone());
        }
        out
    }

    /// Drops exact-zero component series.
    pub fn pruned(&self) -> QHElement {
        QHElement {
            components: self
                .components
                .iter()
                .filter(|(_, s)| !s.is_zero())
                .map(|(k, s)| (*k, s.clone()))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components.values().all(TSeries::is_zero)
    }

    /// True when every component satisfies deg(class) + 2·qpow = degree.
    pub fn is_homogeneous(&self, degree: i64) -> bool {
        self.components
            .iter()
            .all(|((c, q), s)| s.is_zero() || c.degree() + 2 * q == degree)
    }

    pub fn component(&self, class: CompClass, qpow: i64) -> Option<&TSeries> {
        self.components.get(&(class, qpow))
    }

    /// The pt-components (any q-power), summed with q forgotten.
    pub fn pt_part(&self) -> TSeries {
        let mut acc: Option<TSeries> = None;
        for ((class, _), s) in &self.components {
            if *class == CompClass::Pt {
                acc = Some(match acc {
                    None => s.clone(),
                    Some(a) => a.add(s),
                });
            }
        }
        acc.unwrap_or_else(|| TSeries::zero(Rat::int(0)))
    }

    pub fn truncate(&self, floor: &Rat) -> QHElement {
        QHElement {
            components: self
                .components
                .iter()
                .map(|(k, s)| (*k, s.truncate(floor)))
                .filter(|(_, s)| !s.is_zero())
                .collect(),
        }
    }
}

impl fmt::Debug for QHElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "0");
        }
        for ((class, q), s) in &self.components {
            writeln!(f, "  {} (x) q^{q}:  {s:?}", class.label())?;
        }
        Ok(())
    }
}

/// The fixed contribution table: 16 exceptional classes (c₁ = 1) and 10
/// conic classes (c₁ = 2) of the 5-point blow-up of CP².
pub struct ContributionTable {
    pub exceptional: Vec<H2Class>,
    pub conic: Vec<H2Class>,
}

impl ContributionTable {
    pub fn new() -> Self {
        let mut exceptional = Vec::new();
        // V_k
        for k in 1..=5 {
            let mut c = [0i64; 6];
            c[k] = 1;
            exceptional.push(H2Class::lv(c).to_bfe());
        }
        // L − V_j − V_k
        for j in 1..=5 {
            for k in (j + 1)..=5 {
                let mut c = [0i64; 6];
                c[0] = 1;
                c[j] = -1;
                c[k] = -1;
                exceptional.push(H2Class::lv(c).to_bfe());
            }
        }
        // 2L − V₁ − … − V₅
        exceptional.push(H2Class::lv([2, -1, -1, -1, -1, -1]).to_bfe());

        let mut conic = Vec::new();
        // L − V_j
        for j in 1..=5 {
            let mut c = [0i64; 6];
            c[0] = 1;
            c[j] = -1;
            conic.push(H2Class::lv(c).to_bfe());
        }
        // 2L − V_j − V_k − V_l − V_n (omit one index)
        for omit in 1..=5 {
            let mut c = [2i64, -1, -1, -1, -1, -1];
            c[omit] = 0;
            conic.push(H2Class::lv(c).to_bfe());
        }
        ContributionTable { exceptional, conic }
    }
}

impl Default for ContributionTable {
    fn default() -> Self {
        ContributionTable::new()
    }
}

/// Quantum product. Point-class factors are unsupported (the closed formula
/// does not cover them); X acts as the unit.
pub fn qh_mul(
    u: &QHElement,
    v: &QHElement,
    p: &ParamPoint,
    table: &ContributionTable,
) -> Result<QHElement, Error> {
    for ((class, _), s) in u.components.iter().chain(v.components.iter()) {
        if *class == CompClass::Pt && !s.is_zero() {
            return Err(Error::PointFactor);
        }
    }
    let mut out = QHElement::zero();
    // X is the unit
    for ((cu, qu), su) in &u.components {
        if *cu != CompClass::X {
            continue;
        }
        for ((cv, qv), sv) in &v.components {
            out.insert(*cv, qu + qv, su.mul(sv));
        }
    }
    for ((cv, qv), sv) in &v.components {
        if *cv != CompClass::X {
            continue;
        }
        for ((cu, qu), su) in &u.components {
            if *cu == CompClass::X {
                continue; // X·X already counted above
            }
            out.insert(*cu, qu + qv, su.mul(sv));
        }
    }
    // H₂ × H₂ via the contribution table
    let basis = |i: usize| -> H2Class {
        let mut c = [0i64; 6];
        c[i] = 1;
        H2Class::bfe(c)
    };
    for ((cu, qu), su) in &u.components {
        let CompClass::H2(i) = cu else { continue };
        let a = basis(*i);
        for ((cv, qv), sv) in &v.components {
            let CompClass::H2(j) = cv else { continue };
            let b = basis(*j);
            let series = su.mul(sv);
            let q = qu + qv;
            // classical part: (a·b)·pt
            let ab = a.intersect(&b);
            if ab != 0 {
                out.insert(CompClass::Pt, q, series.scale(&Rat::int(ab)));
            }
            for cls in &table.exceptional {
                let coeff = a.intersect(cls) * b.intersect(cls);
                if coeff == 0 {
                    continue;
                }
                let shifted = series.shift(&-cls.area(p)).scale(&Rat::int(coeff));
                let contrib = QHElement::from_h2(cls, q - 1, shifted);
                out = out.add(&contrib);
            }
            for cls in &table.conic {
                let coeff = a.intersect(cls) * b.intersect(cls);
                if coeff == 0 {
                    continue;
                }
                out.insert(
                    CompClass::X,
                    q - 2,
                    series.shift(&-cls.area(p)).scale(&Rat::int(coeff)),
                );
            }
        }
    }
    Ok(out)
}

/// Componentwise equality of the kept terms above the common floors,
/// optionally with q collapsed.
pub fn qh_equal(u: &QHElement, v: &QHElement, floor: &Rat, forget_q: bool) -> bool {
    let (a, b) = if forget_q {
        (u.forget_q(), v.forget_q())
    } else {
        (u.clone(), v.clone())
    };
    let a = a.truncate(floor);
    let b = b.truncate(floor);
    let keys: Vec<(CompClass, i64)> = a
        .components
        .keys()
        .chain(b.components.keys())
        .copied()
        .collect();
    for key in keys {
        let za = TSeries::zero(floor.clone());
        let sa = a.components.get(&key).unwrap_or(&za);
        let sb = b.components.get(&key).unwrap_or(&za);
        if !sa.eq_above_common_floor(sb) {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// the ring presentation on the MA edge
// ---------------------------------------------------------------------------

/// Generators of the MA-edge presentation: f_ij = q(F−E_i−E_j),
/// b_ij = q(B−E_i−E_j), e_i = qE_i, and rational powers of t.
pub struct RingGenerators {
    pub floor: Rat,
}

impl RingGenerators {
    pub fn new(floor: Rat) -> Self {
        RingGenerators { floor }
    }

    pub fn f(&self, i: usize, j: usize) -> QHElement {
        QHElement::from_h2(
            &H2Class::bf_minus(0, 1, &[i, j]),
            1,
            TSeries::one(self.floor.clone()),
        )
    }

    pub fn b(&self, i: usize, j: usize) -> QHElement {
        QHElement::from_h2(
            &H2Class::bf_minus(1, 0, &[i, j]),
            1,
            TSeries::one(self.floor.clone()),
        )
    }

    pub fn e(&self, i: usize) -> QHElement {
        QHElement::from_h2(&H2Class::e(i), 1, TSeries::one(self.floor.clone()))
    }

    pub fn t_pow(&self, e: Rat) -> QHElement {
        QHElement::from_scalar(0, TSeries::monomial(e, Rat::one(), self.floor.clone()))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RingRelationReport {
    pub id: u8,
    pub indices: Vec<usize>,
    pub relation: String,
    /// exact-zero of LHS−RHS with q forgotten, above the requested floor
    pub zero: bool,
    /// floor at which the diff is complete (≤ requested floor when zero)
    pub effective_floor: String,
    pub corrected_reading: Option<String>,
    /// diff of the literal text against the corrected reading, when the two
    /// parse differently
    pub literal_matches: Option<bool>,
    pub diff: String,
}

/// Checks one of the ten presentation relations at an MA-edge point, with q
/// forgotten. Relations 5 and 7 are checked in their corrected readings
/// ("1−1t^{1−μ}" as 1−t^{1−μ}, "y^{−1/2}" as t^{−1/2}); for 7 the literal
/// text has no parse as a series, which the report records.
pub fn check_ring_relation(
    rel: u8,
    idx: &[usize],
    p: &ParamPoint,
    floor: &Rat,
) -> Result<RingRelationReport, Error> {
    if !p.is_ma_edge() {
        return Err(Error::Degenerate(
            "the ring presentation is stated on the MA edge (c_i = 1/2, mu > 1)".into(),
        ));
    }
    let mu = &p.mu;
    let table = ContributionTable::new();
    // slack below the requested floor so every kept term of the diff above
    // `floor` is complete
    let work = floor - &Rat::int(8);
    let g = RingGenerators::new(work.clone());
    let one = Rat::one();
    let half = Rat::new(1, 2);
    let mul = |a: &QHElement, b: &QHElement| qh_mul(a, b, p, &table);

    let (indices, relation, corrected, literal_matches, lhs, rhs): (
        Vec<usize>,
        String,
        Option<String>,
        Option<bool>,
        QHElement,
        QHElement,
    );
    match rel {
        1 => {
            let [i, j, k] = [idx[0], idx[1], idx[2]];
            indices = vec![i, j, k];
            relation = format!("f_{i}{k}(b_{i}{j} + t^(-1/2)(1-t^(1-mu))) = 0");
            corrected = None;
            literal_matches = None;
            let factor = g.b(i, j).add(&g.t_pow(-half.clone())).sub(&g.t_pow(&half - mu));
            lhs = mul(&g.f(i, k), &factor)?;
            rhs = QHElement::zero();
        }
        2 => {
            let [i, j, k, l] = [idx[0], idx[1], idx[2], idx[3]];
            indices = vec![i, j, k, l];
            relation = format!("b_{i}{j}*b_{k}{l} = t^(-1)(1-t^(1-mu))^2");
            corrected = None;
            literal_matches = None;
            lhs = mul(&g.b(i, j), &g.b(k, l))?;
            rhs = g
                .t_pow(Rat::int(-1))
                .sub(&g.t_pow(-mu).scale_series(&TSeries::monomial(
                    Rat::zero(),
                    Rat::int(2),
                    work.clone(),
                )))
                .add(&g.t_pow(&one - &(mu * &Rat::int(2))));
        }
        3 => {
            let [i, j, k, l] = [idx[0], idx[1], idx[2], idx[3]];
            indices = vec![i, j, k, l];
            relation = format!("f_{i}{j}*f_{k}{l} = 0");
            corrected = None;
            literal_matches = None;
            lhs = mul(&g.f(i, j), &g.f(k, l))?;
            rhs = QHElement::zero();
        }
        4 => {
            let [i, j, k] = [idx[0], idx[1], idx[2]];
            indices = vec![i, j, k];
            relation = format!("f_{i}{j}(e_{k} + t^(1/2-mu)) = 0");
            corrected = None;
            literal_matches = None;
            lhs = mul(&g.f(i, j), &g.e(k).add(&g.t_pow(&half - mu)))?;
            rhs = QHElement::zero();
        }
        5 => {
            let [i, j] = [idx[0], idx[1]];
            indices = vec![i, j];
            relation = format!(
                "b_{i}{j}(f_{i}{j}+e_{i}+t^(1/2-mu)) = t^(-mu)(1-t^(1-mu))(1+e_{j} t^(mu-1/2))"
            );
            corrected = Some("read (1-1t^(1-mu)) as (1-t^(1-mu))".into());
            literal_matches = Some(true); // 1-1t and 1-t parse identically
            let factor = g.f(i, j).add(&g.e(i)).add(&g.t_pow(&half - mu));
            lhs = mul(&g.b(i, j), &factor)?;
            let scalar = g.t_pow(-mu.clone()).sub(&g.t_pow(&one - &(mu * &Rat::int(2))));
            let ej_part = mul(
                &g.e(j),
                &g.t_pow(-half.clone()).sub(&g.t_pow(&half - mu)),
            )?;
            rhs = scalar.add(&ej_part);
        }
        6 => {
            let [i, j, k] = [idx[0], idx[1], idx[2]];
            indices = vec![i, j, k];
            relation = format!(
                "b_{i}{j}(e_{k}+t^(1/2-mu)) = t^(-mu)(1-t^(1-mu))(1+(f_{k}{j}+e_{j})t^(mu-1/2))"
            );
            corrected = None;
            literal_matches = None;
            lhs = mul(&g.b(i, j), &g.e(k).add(&g.t_pow(&half - mu)))?;
            let scalar = g.t_pow(-mu.clone()).sub(&g.t_pow(&one - &(mu * &Rat::int(2))));
            let bracket = g.f(k, j).add(&g.e(j));
            let shifted = mul(
                &bracket,
                &g.t_pow(-half.clone()).sub(&g.t_pow(&half - mu)),
            )?;
            rhs = scalar.add(&shifted);
        }
        7 => {
            let [i, j] = [idx[0], idx[1]];
            indices = vec![i, j];
            relation = format!("f_{i}{j}(b_{i}{j}+e_{i}+t^(-1/2)) = 0");
            corrected = Some("read y^(-1/2) as t^(-1/2)".into());
            literal_matches = Some(false); // the literal "y" has no series parse
            let factor = g.b(i, j).add(&g.e(i)).add(&g.t_pow(-half.clone()));
            lhs = mul(&g.f(i, j), &factor)?;
            rhs = QHElement::zero();
        }
        8 => {
            let [i, j, k] = [idx[0], idx[1], idx[2]];
            indices = vec![i, j, k];
            relation = format!("f_{i}{j}(f_{i}{k}+e_{i}+t^(1/2-mu)) = 0");
            corrected = None;
            literal_matches = None;
            let factor = g.f(i, k).add(&g.e(i)).add(&g.t_pow(&half - mu));
            lhs = mul(&g.f(i, j), &factor)?;
            rhs = QHElement::zero();
        }
        9 => {
            let [i, j, k, l] = [idx[0], idx[1], idx[2], idx[3]];
            indices = vec![i, j, k, l];
            relation =
                format!("e_{i}^2 = f_{i}{j}*f_{i}{k} + (e_{l}-e_{i})t^(1/2-mu) + e_{i}*e_{l}");
            corrected = None;
            literal_matches = None;
            lhs = mul(&g.e(i), &g.e(i))?;
            let t_part = mul(&g.e(l).sub(&g.e(i)), &g.t_pow(&half - mu))?;
            rhs = mul(&g.f(i, j), &g.f(i, k))?
                .add(&t_part)
                .add(&mul(&g.e(i), &g.e(l))?);
        }
        10 => {
            let [i, j, k, l] = [idx[0], idx[1], idx[2], idx[3]];
            indices = vec![i, j, k, l];
            relation = format!("f_{i}{j}^2 = f_{i}{j}(f_{i}{k}+f_{i}{l})");
            corrected = None;
            literal_matches = None;
            lhs = mul(&g.f(i, j), &g.f(i, j))?;
            rhs = mul(&g.f(i, j), &g.f(i, k).add(&g.f(i, l)))?;
        }
        _ => return Err(Error::Other(format!("no ring relation {rel}"))),
    }

    let diff = lhs.forget_q().sub(&rhs.forget_q());
    let effective_floor = diff
        .components
        .values()
        .map(|s| s.floor().clone())
        .max()
        .unwrap_or_else(|| work.clone());
    let truncated = diff.truncate(floor).pruned();
    let zero = truncated.is_zero() && effective_floor <= *floor;
    Ok(RingRelationReport {
        id: rel,
        indices,
        relation,
        zero,
        effective_floor: effective_floor.to_string(),
        corrected_reading: corrected,
        literal_matches,
        diff: if truncated.is_zero() {
            "0".into()
        } else {
            format!("{truncated:?}")
        },
    })
}

/// All ten relations at one canonical index assignment each.
pub fn check_all_ring_relations(p: &ParamPoint, floor: &Rat) -> Result<Vec<RingRelationReport>, Error> {
    let assignments: Vec<(u8, Vec<usize>)> = vec![
        (1, vec![1, 2, 3]),
        (2, vec![1, 2, 3, 4]),
        (3, vec![1, 2, 3, 4]),
        (4, vec![1, 2, 3]),
        (5, vec![1, 2]),
        (6, vec![1, 2, 3]),
        (7, vec![1, 2]),
        (8, vec![1, 2, 3]),
        (9, vec![1, 2, 3, 4]),
        (10, vec![1, 2, 3, 4]),
    ];
    let reports = crate::exec::par_map(assignments, |(rel, idx)| {
        check_ring_relation(rel, &idx, p, floor)
    });
    reports.into_iter().collect()
}
