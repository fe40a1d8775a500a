//! Crisp substructures of a ≤-hypergroupoid: subgroupoids, ideals, filters.
//!
//! Every predicate quantifies directly over the carrier. Operands must be
//! nonempty subsets of the carrier of `S`, and the relation must live on the
//! same carrier.

use std::fmt;
use std::str::FromStr;

use crate::error::PredicateError;
use crate::structures::{BinaryRelation, CrispSubset, FiniteHypergroupoid};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdealSide {
    Left,
    Right,
    TwoSided,
}

impl IdealSide {
    pub const ALL: [IdealSide; 3] = [IdealSide::Left, IdealSide::Right, IdealSide::TwoSided];

    pub fn name(self) -> &'static str {
        match self {
            IdealSide::Left => "left",
            IdealSide::Right => "right",
            IdealSide::TwoSided => "two-sided",
        }
    }
}

impl fmt::Display for IdealSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdealSide {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "left" => Ok(IdealSide::Left),
            "right" => Ok(IdealSide::Right),
            "two-sided" | "both" => Ok(IdealSide::TwoSided),
            other => Err(format!("unknown ideal side `{other}`")),
        }
    }
}

/// Verdicts of the four filter conditions, each evaluated independently.
///
/// * `c1`: `x, y ∈ F ⟹ x∘y ⊆ F`
/// * `c2`: `x∘y ⊆ F ⟹ x, y ∈ F`
/// * `c3`: `x∘y ⊆ F` or `x∘y ∩ F = ∅`
/// * `c4`: `x ∈ F, x ≤ y ⟹ y ∈ F`
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct FilterConditionProfile {
    pub c1: bool,
    pub c2: bool,
    pub c3: bool,
    pub c4: bool,
}

impl FilterConditionProfile {
    pub fn all(self) -> bool {
        self.c1 && self.c2 && self.c3 && self.c4
    }

    pub fn as_array(self) -> [bool; 4] {
        [self.c1, self.c2, self.c3, self.c4]
    }
}

pub(crate) fn check_operands(
    s: &FiniteHypergroupoid,
    r: &BinaryRelation,
    a: CrispSubset,
) -> Result<(), PredicateError> {
    if r.order() != s.order() || !a.is_subset(s.carrier().full()) {
        return Err(PredicateError::CarrierMismatch);
    }
    if a.is_empty() {
        return Err(PredicateError::EmptyOperand);
    }
    Ok(())
}

pub fn is_subgroupoid(s: &FiniteHypergroupoid, a: CrispSubset) -> Result<bool, PredicateError> {
    if !a.is_subset(s.carrier().full()) {
        return Err(PredicateError::CarrierMismatch);
    }
    Ok(s.star(a, a)?.is_subset(a))
}

/// `b ≤ a` with `a ∈ A` forces `b ∈ A`.
pub fn is_downward_closed(r: &BinaryRelation, a: CrispSubset) -> bool {
    (0..r.order())
        .map(crate::structures::ElementId::new)
        .all(|b| a.contains(b) || r.above(b).is_disjoint(a))
}

/// `a ∈ F` and `a ≤ y` forces `y ∈ F`.
pub fn is_upward_closed(r: &BinaryRelation, f: CrispSubset) -> bool {
    f.iter().all(|x| r.above(x).is_subset(f))
}

/// The product condition of an ideal in star form: `H*A ⊆ A` and/or `A*H ⊆ A`.
pub(crate) fn star_closed(s: &FiniteHypergroupoid, a: CrispSubset, side: IdealSide) -> bool {
    let h = s.carrier().full();
    let left = || s.star_unchecked(h, a).is_subset(a);
    let right = || s.star_unchecked(a, h).is_subset(a);
    match side {
        IdealSide::Left => left(),
        IdealSide::Right => right(),
        IdealSide::TwoSided => left() && right(),
    }
}

/// The product condition of an ideal, elementwise: `h∘a ⊆ A` and/or `a∘h ⊆ A`.
pub(crate) fn elementwise_closed(s: &FiniteHypergroupoid, a: CrispSubset, side: IdealSide) -> bool {
    let carrier = s.carrier();
    let left = || {
        carrier
            .elements()
            .all(|h| a.iter().all(|x| s.hyperproduct(h, x).is_subset(a)))
    };
    let right = || {
        carrier
            .elements()
            .all(|h| a.iter().all(|x| s.hyperproduct(x, h).is_subset(a)))
    };
    match side {
        IdealSide::Left => left(),
        IdealSide::Right => right(),
        IdealSide::TwoSided => left() && right(),
    }
}

/// Ideal test through the induced product on subsets.
pub fn is_ideal(
    s: &FiniteHypergroupoid,
    r: &BinaryRelation,
    a: CrispSubset,
    side: IdealSide,
) -> Result<bool, PredicateError> {
    check_operands(s, r, a)?;
    Ok(star_closed(s, a, side) && is_downward_closed(r, a))
}

/// Ideal test through individual hyperproducts `h∘a`, `a∘h`.
pub fn is_ideal_elementwise(
    s: &FiniteHypergroupoid,
    r: &BinaryRelation,
    a: CrispSubset,
    side: IdealSide,
) -> Result<bool, PredicateError> {
    check_operands(s, r, a)?;
    Ok(elementwise_closed(s, a, side) && is_downward_closed(r, a))
}

pub fn filter_condition_profile(
    s: &FiniteHypergroupoid,
    r: &BinaryRelation,
    f: CrispSubset,
) -> Result<FilterConditionProfile, PredicateError> {
    check_operands(s, r, f)?;
    let mut c1 = true;
    let mut c2 = true;
    let mut c3 = true;
    for (x, y, cell) in s.products() {
        let inside = cell.is_subset(f);
        if f.contains(x) && f.contains(y) && !inside {
            c1 = false;
        }
        if inside && !(f.contains(x) && f.contains(y)) {
            c2 = false;
        }
        if !inside && !cell.is_disjoint(f) {
            c3 = false;
        }
    }
    let c4 = is_upward_closed(r, f);
    Ok(FilterConditionProfile { c1, c2, c3, c4 })
}

pub fn is_filter(
    s: &FiniteHypergroupoid,
    r: &BinaryRelation,
    f: CrispSubset,
) -> Result<bool, PredicateError> {
    Ok(filter_condition_profile(s, r, f)?.all())
}

/// Alternate form of condition (3): whenever `x ∉ F` or `y ∉ F`, `x∘y` misses `F`.
pub fn outside_products_disjoint(s: &FiniteHypergroupoid, f: CrispSubset) -> bool {
    s.products()
        .all(|(x, y, cell)| (f.contains(x) && f.contains(y)) || cell.is_disjoint(f))
}
