//! Truncated generalized Laurent series in t with rational exponents and
//! coefficients.
//!
//! A `TSeries` keeps finitely many terms together with a floor: the series is
//! guaranteed complete for exponents ≥ floor and silently truncated below.
//! Multiplication propagates floors honestly: a product term is kept only
//! where every contributing pair is known, so equality checks above the
//! resulting floor are exact statements.

use crate::rational::Rat;
use crate::Error;
use serde::ser::SerializeSeq;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct TSeries {
    terms: BTreeMap<Rat, Rat>,
    floor: Rat,
}

impl TSeries {
    pub fn zero(floor: Rat) -> Self {
        TSeries {
            terms: BTreeMap::new(),
            floor,
        }
    }

    pub fn one(floor: Rat) -> Self {
        TSeries::monomial(Rat::zero(), Rat::one(), floor)
    }

    /// c·t^e, complete above `floor`.
    pub fn monomial(exponent: Rat, coeff: Rat, floor: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() && exponent >= floor {
            terms.insert(exponent, coeff);
        }
        TSeries { terms, floor }
    }

    pub fn from_terms(pairs: Vec<(Rat, Rat)>, floor: Rat) -> Self {
        let mut s = TSeries::zero(floor);
        for (e, c) in pairs {
            s.add_term(e, c);
        }
        s
    }

    pub fn floor(&self) -> &Rat {
        &self.floor
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Rat, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn max_exponent(&self) -> Option<&Rat> {
        self.terms.keys().next_back()
    }

    pub fn leading(&self) -> Option<(&Rat, &Rat)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, exponent: Rat, coeff: Rat) {
        if coeff.is_zero() || exponent < self.floor {
            return;
        }
        let entry = self.terms.entry(exponent.clone()).or_insert_with(Rat::zero);
        *entry += &coeff;
        if entry.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn add(&self, other: &TSeries) -> TSeries {
        let floor = self.floor.clone().max(other.floor.clone());
        let mut out = TSeries::zero(floor);
        for (e, c) in self.terms.iter().chain(other.terms.iter()) {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TSeries) -> TSeries {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> TSeries {
        TSeries {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
            floor: self.floor.clone(),
        }
    }

    pub fn scale(&self, r: &Rat) -> TSeries {
        if r.is_zero() {
            return TSeries::zero(self.floor.clone());
        }
        TSeries {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * r)).collect(),
            floor: self.floor.clone(),
        }
    }

    /// Multiplies by t^e exactly (shifts terms and floor).
    pub fn shift(&self, e: &Rat) -> TSeries {
        TSeries {
            terms: self
                .terms
                .iter()
                .map(|(ex, c)| (ex + e, c.clone()))
                .collect(),
            floor: &self.floor + e,
        }
    }

    /// Truncated product. The result's floor is the honest completeness
    /// bound max(floor_a + maxexp_b, floor_b + maxexp_a).
    pub fn mul(&self, other: &TSeries) -> TSeries {
        let max_a = self
            .max_exponent()
            .cloned()
            .unwrap_or_else(|| self.floor.clone());
        let max_b = other
            .max_exponent()
            .cloned()
            .unwrap_or_else(|| other.floor.clone());
        let floor = (&self.floor + &max_b).max(&other.floor + &max_a);
        let mut out = TSeries::zero(floor);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }

    /// Drops terms below the new floor (which may only rise).
    pub fn truncate(&self, new_floor: &Rat) -> TSeries {
        let floor = self.floor.clone().max(new_floor.clone());
        TSeries {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| **e >= floor)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
            floor,
        }
    }

    /// Equality of all kept terms above the common floor.
    pub fn eq_above_common_floor(&self, other: &TSeries) -> bool {
        let floor = self.floor.clone().max(other.floor.clone());
        self.truncate(&floor).terms == other.truncate(&floor).terms
    }
}

impl fmt::Debug for TSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            write!(f, "0")?;
        } else {
            let mut first = true;
            for (e, c) in self.terms.iter().rev() {
                if !first {
                    write!(f, " + ")?;
                }
                write!(f, "{c}*t^({e})")?;
                first = false;
            }
        }
        write!(f, "  [floor {}]", self.floor)
    }
}

impl Serialize for TSeries {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        // descending exponents, as [exponent, coefficient] string pairs
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in self.terms.iter().rev() {
            seq.serialize_element(&[e.to_string(), c.to_string()])?;
        }
        seq.end()
    }
}

/// Expansion of 1/(1−t^{−w}) = Σ_{n≥0} t^{−nw}, truncated at the floor.
/// The weight must be positive for the series to live in the Novikov ring.
pub fn geom_expand(w: &Rat, floor: &Rat) -> Result<TSeries, Error> {
    if !w.is_positive() {
        return Err(Error::NonPositiveWeight(w.clone()));
    }
    let mut out = TSeries::zero(floor.clone());
    let mut e = Rat::zero();
    while e >= *floor {
        out.add_term(e.clone(), Rat::one());
        e -= w;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn geom_examples() {
        // w = 1, floor −5/2 → 1 + t^{-1} + t^{-2}
        let s = geom_expand(&Rat::one(), &rat(-5, 2)).unwrap();
        let expected = TSeries::from_terms(
            vec![
                (Rat::zero(), Rat::one()),
                (Rat::int(-1), Rat::one()),
                (Rat::int(-2), Rat::one()),
            ],
            rat(-5, 2),
        );
        assert_eq!(s, expected);
        // w = mu−1 at MA2 (=1), floor −3/2 → 1 + t^{-1}
        let s = geom_expand(&Rat::one(), &rat(-3, 2)).unwrap();
        assert_eq!(s.num_terms(), 2);
        // w = 0 rejected
        assert!(geom_expand(&Rat::zero(), &rat(-2, 1)).is_err());
    }

    #[test]
    fn inversion_identity() {
        // (1 − t^{−w})·geom_expand(w) = 1 up to terms below floor + w
        for w in [Rat::one(), rat(1, 3), rat(5, 2)] {
            let floor = Rat::int(-7);
            let geom = geom_expand(&w, &floor).unwrap();
            let one_minus = TSeries::from_terms(
                vec![(Rat::zero(), Rat::one()), (-&w, Rat::int(-1))],
                floor.clone(),
            );
            let prod = one_minus.mul(&geom);
            let one = TSeries::one(&floor + &w);
            assert!(prod.truncate(&(&floor + &w)).eq_above_common_floor(&one));
        }
    }

    #[test]
    fn floor_propagation_is_honest() {
        // dropping a deep term of a factor must not corrupt kept terms
        let floor = Rat::int(-3);
        let a = TSeries::from_terms(
            vec![(Rat::int(2), Rat::one()), (Rat::int(-3), Rat::one())],
            floor.clone(),
        );
        let b = geom_expand(&Rat::one(), &floor).unwrap();
        let prod = a.mul(&b);
        // completeness bound: max(-3+0, -3+2) = -1
        assert_eq!(prod.floor(), &Rat::int(-1));
        // above −1 the product is exact: t^2+t+1+... from the t^2 part plus
        // the t^{-3} part contributing t^{-1} = below the floor only
        let exact =
            geom_expand(&Rat::one(), &Rat::int(-1)).unwrap().shift(&Rat::int(2));
        let tail = geom_expand(&Rat::one(), &Rat::int(-1))
            .unwrap()
            .shift(&Rat::int(-3));
        assert!(prod.eq_above_common_floor(&exact.add(&tail)));
    }
}
