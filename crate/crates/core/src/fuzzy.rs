//! Fuzzy subsets with exact rational grades and the fuzzy ideal, filter and
//! prime predicates.
//!
//! Each predicate that mentions a product `f(x∘y)` is read elementwise: the
//! stated (in)equality must hold for every `u ∈ x∘y`. Equalities are exact.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::crisp::IdealSide;
use crate::error::{GradeError, PredicateError};
use crate::structures::{BinaryRelation, Carrier, CrispSubset, ElementId, FiniteHypergroupoid};

/// A membership grade, an exact rational in `[0, 1]`.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Grade(Ratio<u64>);

impl Grade {
    pub const ZERO: Grade = Grade(Ratio::new_raw(0, 1));
    pub const ONE: Grade = Grade(Ratio::new_raw(1, 1));

    pub fn new(numer: u64, denom: u64) -> Result<Self, GradeError> {
        if denom == 0 {
            return Err(GradeError::ZeroDenominator);
        }
        if numer > denom {
            return Err(GradeError::OutOfRange(format!("{numer}/{denom}")));
        }
        Ok(Grade(Ratio::new(numer, denom)))
    }

    pub fn numer(self) -> u64 {
        *self.0.numer()
    }

    pub fn denom(self) -> u64 {
        *self.0.denom()
    }

    /// `1 − g`.
    #[inline]
    pub fn complement(self) -> Grade {
        Grade(Ratio::one() - self.0)
    }

    pub fn is_zero(self) -> bool {
        self.0.is_zero()
    }

    pub fn from_bool(b: bool) -> Grade {
        if b {
            Grade::ONE
        } else {
            Grade::ZERO
        }
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Parses `p/q` or a bare integer; a leading `-` parses but is out of range.
impl FromStr for Grade {
    type Err = GradeParseError;

    fn from_str(s: &str) -> Result<Self, GradeParseError> {
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
        let negative = num.starts_with('-') && digits(&num[1..]) && digits(den);
        if negative {
            return Err(GradeParseError::OutOfRange);
        }
        if !digits(num) || !digits(den) {
            return Err(GradeParseError::Syntax);
        }
        let n: u64 = num.parse().map_err(|_| GradeParseError::Syntax)?;
        let d: u64 = den.parse().map_err(|_| GradeParseError::Syntax)?;
        match Grade::new(n, d) {
            Ok(g) => Ok(g),
            Err(GradeError::ZeroDenominator) => Err(GradeParseError::Syntax),
            Err(GradeError::OutOfRange(_)) => Err(GradeParseError::OutOfRange),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GradeParseError {
    Syntax,
    OutOfRange,
}

/// A total map from a carrier into `[0, 1]`.
#[derive(Clone, PartialEq, Eq)]
pub struct FuzzySubset {
    carrier: Carrier,
    grades: Box<[Grade]>,
}

impl FuzzySubset {
    pub fn new(carrier: Carrier, grades: Vec<Grade>) -> Result<Self, PredicateError> {
        if grades.len() != carrier.len() {
            return Err(PredicateError::CarrierMismatch);
        }
        Ok(FuzzySubset {
            carrier,
            grades: grades.into_boxed_slice(),
        })
    }

    pub fn constant(carrier: Carrier, g: Grade) -> Self {
        let grades = vec![g; carrier.len()].into_boxed_slice();
        FuzzySubset { carrier, grades }
    }

    /// `f_A`: grade 1 on `A`, 0 elsewhere. `A = ∅` gives the zero function.
    pub fn characteristic(carrier: &Carrier, a: CrispSubset) -> Self {
        FuzzySubset {
            carrier: carrier.clone(),
            grades: carrier
                .elements()
                .map(|e| Grade::from_bool(a.contains(e)))
                .collect(),
        }
    }

    /// `f'(x) = 1 − f(x)`.
    pub fn complement(&self) -> Self {
        FuzzySubset {
            carrier: self.carrier.clone(),
            grades: self.grades.iter().map(|g| g.complement()).collect(),
        }
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    #[inline]
    pub fn grade(&self, e: ElementId) -> Grade {
        self.grades[e.index()]
    }

    pub fn grades(&self) -> &[Grade] {
        &self.grades
    }
}

impl fmt::Debug for FuzzySubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for e in self.carrier.elements() {
            m.entry(&self.carrier.label(e), &self.grade(e));
        }
        m.finish()
    }
}

fn check_carriers(
    s: &FiniteHypergroupoid,
    r: Option<&BinaryRelation>,
    f: &FuzzySubset,
) -> Result<(), PredicateError> {
    if f.carrier() != s.carrier() || r.is_some_and(|r| r.order() != s.order()) {
        return Err(PredicateError::CarrierMismatch);
    }
    Ok(())
}

/// `x ≤ y ⟹ f(x) ≥ f(y)`.
pub fn is_antitone(r: &BinaryRelation, f: &FuzzySubset) -> bool {
    r.pairs().all(|(x, y)| f.grade(x) >= f.grade(y))
}

/// `x ≤ y ⟹ f(x) ≤ f(y)`.
pub fn is_monotone(r: &BinaryRelation, f: &FuzzySubset) -> bool {
    r.pairs().all(|(x, y)| f.grade(x) <= f.grade(y))
}

/// True when `cond(f(u), f(x), f(y))` holds for every `u ∈ x∘y`.
fn all_products(
    s: &FiniteHypergroupoid,
    f: &FuzzySubset,
    cond: impl Fn(Grade, Grade, Grade) -> bool,
) -> bool {
    s.products().all(|(x, y, cell)| {
        let (fx, fy) = (f.grade(x), f.grade(y));
        cell.iter().all(|u| cond(f.grade(u), fx, fy))
    })
}

/// The product half of a fuzzy ideal, without the relation condition.
pub fn fuzzy_ideal_product_condition(
    s: &FiniteHypergroupoid,
    f: &FuzzySubset,
    side: IdealSide,
) -> bool {
    match side {
        IdealSide::Left => all_products(s, f, |fu, _, fy| fu >= fy),
        IdealSide::Right => all_products(s, f, |fu, fx, _| fu >= fx),
        IdealSide::TwoSided => all_products(s, f, |fu, fx, fy| fu >= fx.max(fy)),
    }
}

pub fn is_fuzzy_ideal(
    s: &FiniteHypergroupoid,
    r: &BinaryRelation,
    f: &FuzzySubset,
    side: IdealSide,
) -> Result<bool, PredicateError> {
    check_carriers(s, Some(r), f)?;
    Ok(is_antitone(r, f) && fuzzy_ideal_product_condition(s, f, side))
}

/// `f(u) = min{f(x), f(y)}` for every `u ∈ x∘y`.
pub fn min_product_condition(s: &FiniteHypergroupoid, f: &FuzzySubset) -> bool {
    all_products(s, f, |fu, fx, fy| fu == fx.min(fy))
}

/// `f(u) = max{f(x), f(y)}` for every `u ∈ x∘y`.
pub fn max_product_condition(s: &FiniteHypergroupoid, f: &FuzzySubset) -> bool {
    all_products(s, f, |fu, fx, fy| fu == fx.max(fy))
}

pub fn is_fuzzy_filter(
    s: &FiniteHypergroupoid,
    r: &BinaryRelation,
    f: &FuzzySubset,
) -> Result<bool, PredicateError> {
    check_carriers(s, Some(r), f)?;
    Ok(is_monotone(r, f) && min_product_condition(s, f))
}

pub fn is_fuzzy_prime_subset(
    s: &FiniteHypergroupoid,
    f: &FuzzySubset,
) -> Result<bool, PredicateError> {
    check_carriers(s, None, f)?;
    Ok(all_products(s, f, |fu, fx, fy| fu <= fx.max(fy)))
}

pub fn is_fuzzy_prime_ideal(
    s: &FiniteHypergroupoid,
    r: &BinaryRelation,
    f: &FuzzySubset,
) -> Result<bool, PredicateError> {
    check_carriers(s, Some(r), f)?;
    Ok(is_antitone(r, f) && max_product_condition(s, f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::fixtures::*;

    fn g(n: u64, d: u64) -> Grade {
        Grade::new(n, d).unwrap()
    }

    fn fz(grades: &[Grade]) -> FuzzySubset {
        FuzzySubset::new(Carrier::standard(grades.len()).unwrap(), grades.to_vec()).unwrap()
    }

    fn chi(bits: u64) -> FuzzySubset {
        FuzzySubset::characteristic(&Carrier::standard(2).unwrap(), set(bits))
    }

    #[test]
    fn grade_construction() {
        assert_eq!(g(2, 4), g(1, 2));
        assert_eq!(g(1, 2).to_string(), "1/2");
        assert_eq!(Grade::ONE.to_string(), "1");
        assert!(Grade::new(3, 2).is_err());
        assert_eq!(Grade::new(1, 0), Err(GradeError::ZeroDenominator));
        assert_eq!(g(1, 3).complement(), g(2, 3));
    }

    #[test]
    fn grade_parsing() {
        assert_eq!("1/2".parse::<Grade>(), Ok(g(1, 2)));
        assert_eq!("0".parse::<Grade>(), Ok(Grade::ZERO));
        assert_eq!("2/2".parse::<Grade>(), Ok(Grade::ONE));
        assert_eq!("3/2".parse::<Grade>(), Err(GradeParseError::OutOfRange));
        assert_eq!("-1".parse::<Grade>(), Err(GradeParseError::OutOfRange));
        assert_eq!("1/0".parse::<Grade>(), Err(GradeParseError::Syntax));
        assert_eq!("0.5".parse::<Grade>(), Err(GradeParseError::Syntax));
        assert_eq!("".parse::<Grade>(), Err(GradeParseError::Syntax));
    }

    #[test]
    fn characteristic_functions() {
        let c = Carrier::standard(2).unwrap();
        assert_eq!(
            FuzzySubset::characteristic(&c, CrispSubset::EMPTY),
            FuzzySubset::constant(c.clone(), Grade::ZERO)
        );
        assert_eq!(
            FuzzySubset::characteristic(&c, c.full()),
            FuzzySubset::constant(c.clone(), Grade::ONE)
        );
        assert_eq!(chi(A).grades(), &[Grade::ONE, Grade::ZERO]);
        assert_eq!(chi(A).complement().grades(), &[Grade::ZERO, Grade::ONE]);
    }

    #[test]
    fn complement_of_constant() {
        let c = Carrier::standard(3).unwrap();
        let f = FuzzySubset::constant(c.clone(), g(1, 3));
        assert_eq!(f.complement(), FuzzySubset::constant(c, g(2, 3)));
        assert_eq!(f.complement().complement(), f);
    }

    #[test]
    fn fuzzy_ideal_examples() {
        let r = rel(&[(0, 1)]);
        assert!(is_fuzzy_ideal(&e2(), &r, &chi(A), IdealSide::Left).unwrap());
        let empty = BinaryRelation::empty(2);
        assert!(!is_fuzzy_ideal(&e1(), &empty, &chi(B), IdealSide::Left).unwrap());
        assert!(is_fuzzy_ideal(&e1(), &empty, &chi(B), IdealSide::Right).unwrap());
        for s in [e1(), e2(), e3()] {
            for side in IdealSide::ALL {
                let f = fz(&[g(1, 3), g(1, 3)]);
                assert!(is_fuzzy_ideal(&s, &rel(&[(0, 1), (1, 0)]), &f, side).unwrap());
            }
        }
    }

    #[test]
    fn fuzzy_filter_examples() {
        let empty = BinaryRelation::empty(2);
        assert!(!is_fuzzy_filter(&e1(), &empty, &chi(A)).unwrap());
        assert!(is_fuzzy_filter(&e1(), &empty, &chi(AB)).unwrap());
        let f = fz(&[g(2, 5), g(2, 5)]);
        assert!(is_fuzzy_filter(&e3(), &rel(&[(0, 1)]), &f).unwrap());
    }

    #[test]
    fn prime_examples() {
        assert!(is_fuzzy_prime_subset(&e1(), &chi(A)).unwrap());
        assert!(!is_fuzzy_prime_subset(&e3(), &chi(A)).unwrap());
        let empty = BinaryRelation::empty(2);
        assert!(!is_fuzzy_prime_ideal(&e2(), &empty, &chi(A)).unwrap());
        let f = fz(&[g(1, 2), g(1, 2)]);
        assert!(is_fuzzy_prime_ideal(&e1(), &empty, &f).unwrap());
        assert!(is_fuzzy_prime_ideal(&e1(), &empty, &f.complement()).unwrap());
    }

    #[test]
    fn carrier_mismatch() {
        let f = fz(&[Grade::ONE, Grade::ONE, Grade::ONE]);
        let empty = BinaryRelation::empty(2);
        assert_eq!(
            is_fuzzy_filter(&e1(), &empty, &f),
            Err(PredicateError::CarrierMismatch)
        );
        let relabelled =
            FuzzySubset::constant(Carrier::with_labels(["p", "q"]).unwrap(), Grade::ONE);
        assert_eq!(
            is_fuzzy_prime_subset(&e1(), &relabelled),
            Err(PredicateError::CarrierMismatch)
        );
        assert_eq!(
            FuzzySubset::new(Carrier::standard(2).unwrap(), vec![Grade::ONE]),
            Err(PredicateError::CarrierMismatch)
        );
    }

    #[test]
    fn lemma14_example() {
        let (a, b) = (g(1, 4), g(2, 3));
        assert_eq!(a.min(b).complement(), a.complement().max(b.complement()));
        assert_eq!(a.min(b).complement(), g(3, 4));
    }
}
