//! Exhaustive and sampled verification of the crisp/fuzzy correspondences,
//! and counterexample search under relaxed hypotheses.
//!
//! A check quantifies over ≤-hypergroupoids `(S, R)` and, inside each pair,
//! over nonempty subsets or grid fuzzy subsets. Pairs are evaluated in
//! parallel on the ambient rayon pool; aggregation sums the check counts and
//! keeps the witness with the smallest canonical ordinal, so the result does
//! not depend on the number of workers.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use rayon::prelude::*;

use crate::crisp::{
    filter_condition_profile, is_filter, is_ideal, is_ideal_elementwise, outside_products_disjoint,
    star_closed, IdealSide,
};
use crate::enumeration::{
    sample_structure_at, Domain, GridFuzzySpace, HyperoperationSpace, RelationSpace, SubsetSpace,
    MAX_ENUM_ORDER,
};
use crate::error::{EnumerationError, SearchError};
use crate::fuzzy::{
    fuzzy_ideal_product_condition, is_fuzzy_filter, is_fuzzy_ideal, is_fuzzy_prime_ideal,
    is_fuzzy_prime_subset, max_product_condition, min_product_condition, FuzzySubset,
};
use crate::structures::{BinaryRelation, CrispSubset, FiniteHypergroupoid};

/// A checkable statement.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// Star-form and elementwise ideal conditions agree (left and right).
    Lemma5,
    /// Left ideal ⟺ characteristic function is a fuzzy left ideal.
    Prop6,
    /// Right ideal ⟺ characteristic function is a fuzzy right ideal.
    Prop7,
    /// Ideal ⟺ characteristic function is a fuzzy ideal.
    Prop8,
    /// The three ideal correspondences at once.
    Prop678,
    /// Filter ⟺ characteristic function is a fuzzy filter.
    Prop12,
    /// Under filter conditions (1), (2), (4): condition (3) ⟺ products
    /// involving an outside element miss the filter.
    Remark10,
    /// Fuzzy filter ⟺ complement is a fuzzy prime ideal.
    Prop17,
    /// `f(u) = min` on every product ⟺ `f'(u) = max` on every product.
    Remark15,
    /// Fuzzy prime ideal ⟺ fuzzy ideal that is a fuzzy prime subset.
    PrimeDecomposition,
}

impl TheoremId {
    /// The selector `all`.
    pub const PRIMARY: [TheoremId; 6] = [
        TheoremId::Prop6,
        TheoremId::Prop7,
        TheoremId::Prop8,
        TheoremId::Prop12,
        TheoremId::Prop17,
        TheoremId::Lemma5,
    ];

    pub const EVERY: [TheoremId; 10] = [
        TheoremId::Lemma5,
        TheoremId::Prop6,
        TheoremId::Prop7,
        TheoremId::Prop8,
        TheoremId::Prop678,
        TheoremId::Prop12,
        TheoremId::Remark10,
        TheoremId::Prop17,
        TheoremId::Remark15,
        TheoremId::PrimeDecomposition,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Lemma5 => "lemma5",
            TheoremId::Prop6 => "prop6",
            TheoremId::Prop7 => "prop7",
            TheoremId::Prop8 => "prop8",
            TheoremId::Prop678 => "prop6_7_8",
            TheoremId::Prop12 => "prop12",
            TheoremId::Remark10 => "remark10",
            TheoremId::Prop17 => "prop17",
            TheoremId::Remark15 => "remark15",
            TheoremId::PrimeDecomposition => "prime_decomposition",
        }
    }

    /// Whether the statement quantifies over grid fuzzy subsets rather than
    /// nonempty crisp subsets.
    pub fn is_fuzzy(self) -> bool {
        matches!(
            self,
            TheoremId::Prop17 | TheoremId::Remark15 | TheoremId::PrimeDecomposition
        )
    }

    fn sides(self) -> &'static [IdealSide] {
        match self {
            TheoremId::Lemma5 => &[IdealSide::Left, IdealSide::Right],
            TheoremId::Prop6 => &[IdealSide::Left],
            TheoremId::Prop7 => &[IdealSide::Right],
            TheoremId::Prop8 => &[IdealSide::TwoSided],
            TheoremId::Prop678 => &IdealSide::ALL,
            _ => &[],
        }
    }

    /// Checks performed per subset or fuzzy subset.
    fn checks_per_item(self) -> u64 {
        self.sides().len().max(1) as u64
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        TheoremId::EVERY
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| format!("unknown theorem `{s}`"))
    }
}

/// A hypothesis dropped for counterexample search.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Relaxation {
    DropFilterC1,
    DropFilterC2,
    DropFilterC3,
    DropFilterC4,
    /// Left ideal without downward closure.
    DropIdealDownclosed,
    /// Fuzzy left ideal without the relation condition.
    DropFuzzyIdealRelation,
}

impl Relaxation {
    pub const ALL: [Relaxation; 6] = [
        Relaxation::DropFilterC1,
        Relaxation::DropFilterC2,
        Relaxation::DropFilterC3,
        Relaxation::DropFilterC4,
        Relaxation::DropIdealDownclosed,
        Relaxation::DropFuzzyIdealRelation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Relaxation::DropFilterC1 => "drop-filter-c1",
            Relaxation::DropFilterC2 => "drop-filter-c2",
            Relaxation::DropFilterC3 => "drop-filter-c3",
            Relaxation::DropFilterC4 => "drop-filter-c4",
            Relaxation::DropIdealDownclosed => "drop-ideal-downclosed",
            Relaxation::DropFuzzyIdealRelation => "drop-fuzzyideal-relation",
        }
    }
}

impl fmt::Display for Relaxation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Relaxation {
    type Err = SearchError;

    fn from_str(s: &str) -> Result<Self, SearchError> {
        Relaxation::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| SearchError::UnknownRelaxation(s.to_owned()))
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum WitnessOrigin {
    Theorem(TheoremId),
    Relaxation(Relaxation),
}

impl fmt::Display for WitnessOrigin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessOrigin::Theorem(t) => write!(f, "{t}"),
            WitnessOrigin::Relaxation(r) => write!(f, "{r}"),
        }
    }
}

/// A concrete input on which a statement fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub origin: WitnessOrigin,
    pub structure: FiniteHypergroupoid,
    pub relation: BinaryRelation,
    pub subset: Option<CrispSubset>,
    pub fuzzy: Option<FuzzySubset>,
    pub failed_clause: String,
}

impl Witness {
    /// Re-evaluates the witness from scratch and returns the failing clause,
    /// or `None` if the input does not fail.
    pub fn replay(&self) -> Option<String> {
        let (s, r) = (&self.structure, &self.relation);
        match self.origin {
            WitnessOrigin::Theorem(t) if t.is_fuzzy() => {
                evaluate_fuzzy(t, s, r, self.fuzzy.as_ref()?)
            }
            WitnessOrigin::Theorem(t) => evaluate_subset(t, s, r, self.subset?),
            WitnessOrigin::Relaxation(x) => evaluate_relaxed(x, s, r, self.subset?),
        }
    }
}

/// Outcome of checking one statement over a domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub theorem: TheoremId,
    pub domain: String,
    pub checks_performed: u64,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

/// Evaluates a crisp-subset statement at one subset; `Some(clause)` on failure.
fn evaluate_subset(
    t: TheoremId,
    s: &FiniteHypergroupoid,
    r: &BinaryRelation,
    a: CrispSubset,
) -> Option<String> {
    match t {
        TheoremId::Lemma5 => t.sides().iter().find_map(|&side| {
            let star = is_ideal(s, r, a, side).ok()?;
            let elem = is_ideal_elementwise(s, r, a, side).ok()?;
            (star != elem).then(|| {
                format!(
                    "{side} ideal: star_form={} elementwise_form={}",
                    yes(star),
                    yes(elem)
                )
            })
        }),
        TheoremId::Prop6 | TheoremId::Prop7 | TheoremId::Prop8 | TheoremId::Prop678 => {
            let chi = FuzzySubset::characteristic(s.carrier(), a);
            t.sides().iter().find_map(|&side| {
                let crisp = is_ideal(s, r, a, side).ok()?;
                let fuzzy = is_fuzzy_ideal(s, r, &chi, side).ok()?;
                (crisp != fuzzy).then(|| {
                    format!(
                        "{side} ideal={} characteristic fuzzy {side} ideal={}",
                        yes(crisp),
                        yes(fuzzy)
                    )
                })
            })
        }
        TheoremId::Prop12 => {
            let chi = FuzzySubset::characteristic(s.carrier(), a);
            let crisp = is_filter(s, r, a).ok()?;
            let fuzzy = is_fuzzy_filter(s, r, &chi).ok()?;
            (crisp != fuzzy).then(|| {
                format!(
                    "filter={} characteristic fuzzy filter={}",
                    yes(crisp),
                    yes(fuzzy)
                )
            })
        }
        TheoremId::Remark10 => {
            let p = filter_condition_profile(s, r, a).ok()?;
            if !(p.c1 && p.c2 && p.c4) {
                return None;
            }
            let alt = outside_products_disjoint(s, a);
            (p.c3 != alt).then(|| {
                format!(
                    "filter condition (3)={} outside products disjoint={}",
                    yes(p.c3),
                    yes(alt)
                )
            })
        }
        _ => None,
    }
}

/// Evaluates a fuzzy statement at one fuzzy subset; `Some(clause)` on failure.
fn evaluate_fuzzy(
    t: TheoremId,
    s: &FiniteHypergroupoid,
    r: &BinaryRelation,
    f: &FuzzySubset,
) -> Option<String> {
    match t {
        TheoremId::Prop17 => {
            let filter = is_fuzzy_filter(s, r, f).ok()?;
            let prime = is_fuzzy_prime_ideal(s, r, &f.complement()).ok()?;
            (filter != prime).then(|| {
                format!(
                    "fuzzy filter={} complement fuzzy prime ideal={}",
                    yes(filter),
                    yes(prime)
                )
            })
        }
        TheoremId::Remark15 => {
            let min_form = min_product_condition(s, f);
            let max_form = max_product_condition(s, &f.complement());
            (min_form != max_form).then(|| {
                format!(
                    "min product condition={} complement max product condition={}",
                    yes(min_form),
                    yes(max_form)
                )
            })
        }
        TheoremId::PrimeDecomposition => {
            let prime_ideal = is_fuzzy_prime_ideal(s, r, f).ok()?;
            let ideal = is_fuzzy_ideal(s, r, f, IdealSide::TwoSided).ok()?;
            let prime = is_fuzzy_prime_subset(s, f).ok()?;
            (prime_ideal != (ideal && prime)).then(|| {
                format!(
                    "fuzzy prime ideal={} fuzzy ideal={} prime subset={}",
                    yes(prime_ideal),
                    yes(ideal),
                    yes(prime)
                )
            })
        }
        _ => None,
    }
}

/// Per-pair result: number of checks and the first failing input, if any.
struct PairOutcome {
    checks: u64,
    failure: Option<Witness>,
}

fn check_pair(
    t: TheoremId,
    s: &FiniteHypergroupoid,
    r: &BinaryRelation,
    grid: u64,
) -> Result<PairOutcome, EnumerationError> {
    let mut checks = 0;
    if t.is_fuzzy() {
        let space = GridFuzzySpace::new(s.carrier().clone(), grid)?;
        for f in space.iter() {
            checks += 1;
            if let Some(clause) = evaluate_fuzzy(t, s, r, &f) {
                return Ok(PairOutcome {
                    checks: space.total(),
                    failure: Some(Witness {
                        origin: WitnessOrigin::Theorem(t),
                        structure: s.clone(),
                        relation: r.clone(),
                        subset: None,
                        fuzzy: Some(f),
                        failed_clause: clause,
                    }),
                });
            }
        }
    } else {
        let space = SubsetSpace::new(s.order())?;
        for a in space.iter() {
            checks += t.checks_per_item();
            if let Some(clause) = evaluate_subset(t, s, r, a) {
                return Ok(PairOutcome {
                    checks: space.total() * t.checks_per_item(),
                    failure: Some(Witness {
                        origin: WitnessOrigin::Theorem(t),
                        structure: s.clone(),
                        relation: r.clone(),
                        subset: Some(a),
                        fuzzy: None,
                        failed_clause: clause,
                    }),
                });
            }
        }
    }
    Ok(PairOutcome {
        checks,
        failure: None,
    })
}

fn pair_verdict(
    t: TheoremId,
    s: &FiniteHypergroupoid,
    r: &BinaryRelation,
    grid: u64,
) -> Result<Verdict, EnumerationError> {
    let out = check_pair(t, s, r, grid)?;
    let per = if t.is_fuzzy() {
        format!("grid={grid}")
    } else {
        format!("sides={}", t.checks_per_item())
    };
    Ok(Verdict {
        theorem: t,
        domain: format!("single pair order={} {per}", s.order()),
        checks_performed: out.checks,
        witness: out.failure,
    })
}

/// Checks any statement on a single ≤-hypergroupoid.
pub fn check(
    t: TheoremId,
    s: &FiniteHypergroupoid,
    r: &BinaryRelation,
    grid: u64,
) -> Result<Verdict, EnumerationError> {
    pair_verdict(t, s, r, grid)
}

/// Crisp ideal versus characteristic fuzzy ideal, every nonempty subset and every side.
pub fn check_prop6_7_8(s: &FiniteHypergroupoid, r: &BinaryRelation) -> Verdict {
    pair_verdict(TheoremId::Prop678, s, r, 1).expect("structure order fits a subset space")
}

pub fn check_prop12(s: &FiniteHypergroupoid, r: &BinaryRelation) -> Verdict {
    pair_verdict(TheoremId::Prop12, s, r, 1).expect("structure order fits a subset space")
}

pub fn check_lemma5(s: &FiniteHypergroupoid, r: &BinaryRelation) -> Verdict {
    pair_verdict(TheoremId::Lemma5, s, r, 1).expect("structure order fits a subset space")
}

pub fn check_prop17(
    s: &FiniteHypergroupoid,
    r: &BinaryRelation,
    grid: u64,
) -> Result<Verdict, EnumerationError> {
    pair_verdict(TheoremId::Prop17, s, r, grid)
}

/// The set of ≤-hypergroupoids a verification run quantifies over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerifyDomain {
    /// Every hyperoperation paired with every relation.
    Exhaustive { order: usize },
    /// `samples` seeded random pairs.
    Sampled {
        order: usize,
        seed: u64,
        samples: u64,
    },
    /// A range of hyperoperation ordinals with one fixed relation.
    FixedRelation {
        relation: BinaryRelation,
        range: Option<Range<u64>>,
    },
}

type Found = Option<(u64, Witness)>;

fn earliest(a: Found, b: Found) -> Found {
    match (a, b) {
        (Some(x), Some(y)) => Some(if x.0 <= y.0 { x } else { y }),
        (x, None) => x,
        (None, y) => y,
    }
}

/// Runs `per_pair` over ordinals `0..count` in parallel and aggregates
/// deterministically.
fn aggregate<F>(count: u64, per_pair: F) -> Result<(u64, Found), EnumerationError>
where
    F: Fn(u64) -> Result<PairOutcome, EnumerationError> + Sync,
{
    (0..count)
        .into_par_iter()
        .map(|i| per_pair(i).map(|o| (o.checks, o.failure.map(|w| (i, w)))))
        .try_reduce(|| (0, None), |a, b| Ok((a.0 + b.0, earliest(a.1, b.1))))
}

/// Verifies `t` over `domain`. `grid` is the fuzzy grid denominator.
pub fn verify(t: TheoremId, domain: &VerifyDomain, grid: u64) -> Result<Verdict, EnumerationError> {
    if t.is_fuzzy() && grid == 0 {
        return Err(EnumerationError::ZeroGrid);
    }
    let (description, checks, found) = match domain {
        VerifyDomain::Exhaustive { order } => {
            let ops = HyperoperationSpace::new(*order)?;
            let rels = RelationSpace::new(*order)?;
            let per = rels.total();
            let count = ops
                .total()
                .checked_mul(per)
                .ok_or(EnumerationError::OrderTooLarge(*order))?;
            let (checks, found) = aggregate(count, |i| {
                check_pair(t, &ops.get(i / per), &rels.get(i % per), grid)
            })?;
            (
                format!(
                    "exhaustive order={order} structures={} relations={per}",
                    ops.total()
                ),
                checks,
                found,
            )
        }
        VerifyDomain::Sampled {
            order,
            seed,
            samples,
        } => {
            if *order == 0 {
                return Err(EnumerationError::ZeroOrder);
            }
            if *order > MAX_ENUM_ORDER {
                return Err(EnumerationError::OrderTooLarge(*order));
            }
            let (checks, found) = aggregate(*samples, |i| {
                let (s, r) = sample_structure_at(*order, *seed, i);
                check_pair(t, &s, &r, grid)
            })?;
            (
                format!("sampled order={order} seed={seed} samples={samples}"),
                checks,
                found,
            )
        }
        VerifyDomain::FixedRelation { relation, range } => {
            let order = relation.order();
            let ops = HyperoperationSpace::new(order)?;
            let range = range.clone().unwrap_or(0..ops.total());
            // validates bounds
            ops.range(range.clone())?;
            let (checks, found) = aggregate(range.end - range.start, |i| {
                check_pair(t, &ops.get(range.start + i), relation, grid)
            })?;
            (
                format!(
                    "fixed relation order={order} structures={}..{}",
                    range.start, range.end
                ),
                checks,
                found,
            )
        }
    };
    let per_item = if t.is_fuzzy() {
        format!(" fuzzy grid={grid}")
    } else {
        format!(" subsets sides={}", t.checks_per_item())
    };
    Ok(Verdict {
        theorem: t,
        domain: description + &per_item,
        checks_performed: checks,
        witness: found.map(|(_, w)| w),
    })
}

/// Closed-form size of an exhaustive run of `t` at `order`.
pub fn exhaustive_domain_size(
    t: TheoremId,
    order: usize,
    grid: u64,
) -> Result<u64, EnumerationError> {
    let pairs = HyperoperationSpace::new(order)?.total() * RelationSpace::new(order)?.total();
    let per = if t.is_fuzzy() {
        GridFuzzySpace::new(
            crate::structures::Carrier::standard(order).expect("order checked"),
            grid,
        )?
        .total()
    } else {
        SubsetSpace::new(order)?.total() * t.checks_per_item()
    };
    Ok(pairs * per)
}

/// Evaluates a relaxation at one `(S, R, A)`: `Some(clause)` when the relaxed
/// hypothesis holds but the conclusion of the full statement fails.
fn evaluate_relaxed(
    x: Relaxation,
    s: &FiniteHypergroupoid,
    r: &BinaryRelation,
    a: CrispSubset,
) -> Option<String> {
    let chi = || FuzzySubset::characteristic(s.carrier(), a);
    match x {
        Relaxation::DropFilterC1
        | Relaxation::DropFilterC2
        | Relaxation::DropFilterC3
        | Relaxation::DropFilterC4 => {
            let dropped = match x {
                Relaxation::DropFilterC1 => 0,
                Relaxation::DropFilterC2 => 1,
                Relaxation::DropFilterC3 => 2,
                _ => 3,
            };
            let conds = filter_condition_profile(s, r, a).ok()?.as_array();
            let others_hold = conds.iter().enumerate().all(|(i, &c)| i == dropped || c);
            if !others_hold || conds[dropped] || is_fuzzy_filter(s, r, &chi()).ok()? {
                return None;
            }
            Some(format!("filter.c{}", dropped + 1))
        }
        Relaxation::DropIdealDownclosed => {
            let relaxed = star_closed(s, a, IdealSide::Left);
            (relaxed
                && !is_ideal(s, r, a, IdealSide::Left).ok()?
                && !is_fuzzy_ideal(s, r, &chi(), IdealSide::Left).ok()?)
            .then(|| "left_ideal.downward_closure".to_owned())
        }
        Relaxation::DropFuzzyIdealRelation => {
            let f = chi();
            let relaxed = fuzzy_ideal_product_condition(s, &f, IdealSide::Left);
            (relaxed
                && !is_fuzzy_ideal(s, r, &f, IdealSide::Left).ok()?
                && !is_ideal(s, r, a, IdealSide::Left).ok()?)
            .then(|| "fuzzy_left_ideal.relation".to_owned())
        }
    }
}

/// Result of a counterexample search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub witness: Option<Witness>,
    /// `(S, R, A)` candidates examined.
    pub examined: u64,
}

/// Looks for `(S, R, A)` satisfying the relaxed hypothesis while the
/// conclusion fails.
///
/// Orders `1..=max_order` are visited in turn. Orders up to 2 are exhausted in
/// canonical order (structure, relation, subset); larger orders draw seeded
/// samples. `budget` caps the number of candidates examined.
pub fn search_counterexample(
    relaxation: Relaxation,
    max_order: usize,
    budget: u64,
    seed: u64,
) -> Result<SearchOutcome, SearchError> {
    if max_order == 0 {
        return Err(EnumerationError::ZeroOrder.into());
    }
    if max_order > MAX_ENUM_ORDER {
        return Err(EnumerationError::OrderTooLarge(max_order).into());
    }
    let mut examined = 0u64;
    let mut visit = |s: &FiniteHypergroupoid, r: &BinaryRelation| -> Option<Option<Witness>> {
        for a in SubsetSpace::new(s.order()).ok()?.iter() {
            if examined >= budget {
                return None;
            }
            examined += 1;
            if let Some(clause) = evaluate_relaxed(relaxation, s, r, a) {
                return Some(Some(Witness {
                    origin: WitnessOrigin::Relaxation(relaxation),
                    structure: s.clone(),
                    relation: r.clone(),
                    subset: Some(a),
                    fuzzy: None,
                    failed_clause: clause,
                }));
            }
        }
        Some(None)
    };

    'orders: for order in 1..=max_order {
        if order <= 2 {
            let rels = RelationSpace::new(order)?;
            for s in HyperoperationSpace::new(order)?.iter() {
                for r in rels.iter() {
                    match visit(&s, &r) {
                        None => break 'orders,
                        Some(Some(w)) => {
                            return Ok(SearchOutcome {
                                witness: Some(w),
                                examined,
                            })
                        }
                        Some(None) => {}
                    }
                }
            }
        } else {
            for i in 0.. {
                let (s, r) = sample_structure_at(order, seed, i);
                match visit(&s, &r) {
                    None => break 'orders,
                    Some(Some(w)) => {
                        return Ok(SearchOutcome {
                            witness: Some(w),
                            examined,
                        })
                    }
                    Some(None) => {}
                }
            }
        }
    }
    Ok(SearchOutcome {
        witness: None,
        examined,
    })
}

/// Number of ≤-structure/subset triples at `order` with each property.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Census {
    pub left_ideals: u64,
    pub right_ideals: u64,
    pub ideals: u64,
    pub filters: u64,
    pub triples: u64,
}

/// Counts ideals and filters over every `(S, R, A)` of `order` (≤ 2).
pub fn census(order: usize) -> Result<Census, EnumerationError> {
    if order > 2 {
        return Err(EnumerationError::OrderTooLarge(order));
    }
    let ops = HyperoperationSpace::new(order)?;
    let rels = RelationSpace::new(order)?;
    let subsets = SubsetSpace::new(order)?;
    let mut c = Census::default();
    for s in ops.iter() {
        for r in rels.iter() {
            for a in subsets.iter() {
                let left = is_ideal(&s, &r, a, IdealSide::Left).unwrap_or(false);
                let right = is_ideal(&s, &r, a, IdealSide::Right).unwrap_or(false);
                c.left_ideals += left as u64;
                c.right_ideals += right as u64;
                c.ideals += (left && right) as u64;
                c.filters += is_filter(&s, &r, a).unwrap_or(false) as u64;
                c.triples += 1;
            }
        }
    }
    Ok(c)
}
