//! Finite hypergroupoids, subsets of their carrier, and the relation `≤`.
//!
//! A hyperoperation maps every ordered pair of the carrier to a nonempty
//! subset. Subsets are bitmasks over carrier indices, so a carrier holds at
//! most [`MAX_CARRIER`] elements. The induced product on nonempty subsets is
//! [`FiniteHypergroupoid::star`].

use std::fmt;
use std::sync::Arc;

use crate::error::{PredicateError, StructureError};

/// Largest carrier a [`CrispSubset`] bitmask can address.
pub const MAX_CARRIER: usize = 64;

/// Dense index of a carrier element.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(u8);

impl ElementId {
    pub fn new(index: usize) -> Self {
        assert!(index < MAX_CARRIER, "element index {index} out of range");
        ElementId(index as u8)
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A subset of the carrier, stored as a bitmask over element indices.
#[derive(Copy, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CrispSubset(u64);

impl CrispSubset {
    pub const EMPTY: CrispSubset = CrispSubset(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        CrispSubset(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The whole carrier of size `n`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_CARRIER);
        if n >= 64 {
            CrispSubset(u64::MAX)
        } else {
            CrispSubset((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(e: ElementId) -> Self {
        CrispSubset(1u64 << e.0)
    }

    #[inline]
    pub fn contains(self, e: ElementId) -> bool {
        self.0 >> e.0 & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, e: ElementId) {
        self.0 |= 1u64 << e.0;
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_subset(self, other: CrispSubset) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: CrispSubset) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub fn union(self, other: CrispSubset) -> CrispSubset {
        CrispSubset(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: CrispSubset) -> CrispSubset {
        CrispSubset(self.0 & other.0)
    }

    /// Members in increasing index order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }
}

impl fmt::Debug for CrispSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.iter().map(ElementId::index))
            .finish()
    }
}

impl FromIterator<ElementId> for CrispSubset {
    fn from_iter<I: IntoIterator<Item = ElementId>>(iter: I) -> Self {
        let mut s = CrispSubset::EMPTY;
        for e in iter {
            s.insert(e);
        }
        s
    }
}

impl IntoIterator for CrispSubset {
    type Item = ElementId;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

/// Iterator over the members of a [`CrispSubset`].
#[derive(Clone, Debug)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = ElementId;

    #[inline]
    fn next(&mut self) -> Option<ElementId> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(ElementId(i as u8))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

/// Ordered, labelled carrier. Cloning shares the label storage.
#[derive(Clone)]
pub struct Carrier {
    labels: Arc<[String]>,
}

impl Carrier {
    /// Carrier of size `n` labelled `a`, `b`, `c`, … in index order.
    pub fn standard(n: usize) -> Result<Self, StructureError> {
        if n == 0 {
            return Err(StructureError::EmptyCarrier);
        }
        if n > MAX_CARRIER {
            return Err(StructureError::CarrierTooLarge(n));
        }
        Ok(Carrier {
            labels: (0..n).map(default_label).collect(),
        })
    }

    pub fn with_labels<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
    ) -> Result<Self, StructureError> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(StructureError::EmptyCarrier);
        }
        if labels.len() > MAX_CARRIER {
            return Err(StructureError::CarrierTooLarge(labels.len()));
        }
        for (i, l) in labels.iter().enumerate() {
            if !is_valid_label(l) {
                return Err(StructureError::InvalidLabel(l.clone()));
            }
            if labels[..i].contains(l) {
                return Err(StructureError::DuplicateLabel(l.clone()));
            }
        }
        Ok(Carrier {
            labels: labels.into(),
        })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, e: ElementId) -> &str {
        &self.labels[e.index()]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<ElementId> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(ElementId::new)
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + Clone {
        (0..self.len()).map(ElementId::new)
    }

    #[inline]
    pub fn full(&self) -> CrispSubset {
        CrispSubset::full(self.len())
    }

    /// Labels of the members of `s`, in index order.
    pub fn labels_of(&self, s: CrispSubset) -> Vec<&str> {
        s.iter().map(|e| self.label(e)).collect()
    }
}

impl PartialEq for Carrier {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.labels, &other.labels) || self.labels == other.labels
    }
}

impl Eq for Carrier {}

impl fmt::Debug for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.labels.iter()).finish()
    }
}

fn default_label(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("e{i}")
    }
}

/// Labels must survive the whitespace-separated text format.
pub fn is_valid_label(l: &str) -> bool {
    !l.is_empty()
        && l != "->"
        && !l.ends_with(':')
        && l.chars()
            .all(|c| !c.is_whitespace() && !c.is_control() && c != '#' && c != '=')
}

/// A nonempty carrier with a total hyperoperation table.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteHypergroupoid {
    carrier: Carrier,
    // row-major: cell (x, y) at x * n + y
    table: Box<[CrispSubset]>,
}

impl FiniteHypergroupoid {
    /// Validates a row-major table of `n²` cells over `carrier`.
    pub fn new(carrier: Carrier, table: Vec<CrispSubset>) -> Result<Self, StructureError> {
        let n = carrier.len();
        if table.len() != n * n {
            return Err(StructureError::TableShape {
                expected: n * n,
                found: table.len(),
            });
        }
        let full = carrier.full();
        for (i, cell) in table.iter().enumerate() {
            let (x, y) = (ElementId::new(i / n), ElementId::new(i % n));
            if cell.is_empty() {
                return Err(StructureError::EmptyImage {
                    x: carrier.label(x).to_owned(),
                    y: carrier.label(y).to_owned(),
                });
            }
            if !cell.is_subset(full) {
                return Err(StructureError::OutOfCarrier {
                    x: carrier.label(x).to_owned(),
                    y: carrier.label(y).to_owned(),
                });
            }
        }
        Ok(FiniteHypergroupoid {
            carrier,
            table: table.into_boxed_slice(),
        })
    }

    /// Builds a structure on the standard carrier `a, b, …` of size `n`.
    pub fn with_standard_carrier(
        n: usize,
        table: Vec<CrispSubset>,
    ) -> Result<Self, StructureError> {
        Self::new(Carrier::standard(n)?, table)
    }

    /// Builds a structure from an `n × n` array of rows.
    pub fn from_rows(
        carrier: Carrier,
        rows: Vec<Vec<CrispSubset>>,
    ) -> Result<Self, StructureError> {
        let n = carrier.len();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(StructureError::TableShape {
                expected: n * n,
                found: rows.iter().map(Vec::len).sum(),
            });
        }
        Self::new(carrier, rows.into_iter().flatten().collect())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.carrier.len()
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn cells(&self) -> &[CrispSubset] {
        &self.table
    }

    /// `x ∘ y`.
    #[inline]
    pub fn hyperproduct(&self, x: ElementId, y: ElementId) -> CrispSubset {
        self.table[x.index() * self.order() + y.index()]
    }

    /// All `(x, y, x ∘ y)` in row-major order.
    pub fn products(&self) -> impl Iterator<Item = (ElementId, ElementId, CrispSubset)> + '_ {
        let n = self.order();
        self.table
            .iter()
            .enumerate()
            .map(move |(i, &c)| (ElementId::new(i / n), ElementId::new(i % n), c))
    }

    /// `A * B`, the union of `a ∘ b` over `a ∈ A`, `b ∈ B`.
    pub fn star(&self, a: CrispSubset, b: CrispSubset) -> Result<CrispSubset, PredicateError> {
        if a.is_empty() || b.is_empty() {
            return Err(PredicateError::EmptyOperand);
        }
        Ok(self.star_unchecked(a, b))
    }

    /// `A * B` without the nonempty-operand check; empty operands give `∅`.
    #[inline]
    pub(crate) fn star_unchecked(&self, a: CrispSubset, b: CrispSubset) -> CrispSubset {
        let mut out = CrispSubset::EMPTY;
        for x in a {
            for y in b {
                out = out.union(self.hyperproduct(x, y));
            }
        }
        out
    }
}

impl fmt::Debug for FiniteHypergroupoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (x, y, c) in self.products() {
            m.entry(
                &format_args!("{}∘{}", self.carrier.label(x), self.carrier.label(y)),
                &self.carrier.labels_of(c),
            );
        }
        m.finish()
    }
}

/// An arbitrary relation `≤` on a carrier of fixed size.
///
/// `rows[x]` holds every `y` with `x ≤ y`. No order axioms are assumed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryRelation {
    rows: Box<[CrispSubset]>,
}

impl BinaryRelation {
    pub fn empty(n: usize) -> Self {
        BinaryRelation {
            rows: vec![CrispSubset::EMPTY; n].into_boxed_slice(),
        }
    }

    pub fn identity(n: usize) -> Self {
        BinaryRelation {
            rows: (0..n)
                .map(|i| CrispSubset::singleton(ElementId::new(i)))
                .collect(),
        }
    }

    pub fn from_pairs(
        n: usize,
        pairs: impl IntoIterator<Item = (ElementId, ElementId)>,
    ) -> Result<Self, StructureError> {
        let mut r = Self::empty(n);
        for (x, y) in pairs {
            if x.index() >= n || y.index() >= n {
                return Err(StructureError::RelationOutOfCarrier);
            }
            r.rows[x.index()].insert(y);
        }
        Ok(r)
    }

    /// Decodes a bitmask in which bit `x * n + y` encodes `x ≤ y`.
    pub fn from_bits(n: usize, bits: u64) -> Self {
        assert!(n * n <= 64, "relation bitmask needs n² ≤ 64");
        let row_mask = CrispSubset::full(n).bits();
        BinaryRelation {
            rows: (0..n)
                .map(|x| CrispSubset::from_bits((bits >> (x * n)) & row_mask))
                .collect(),
        }
    }

    /// Inverse of [`BinaryRelation::from_bits`].
    pub fn to_bits(&self) -> Option<u64> {
        let n = self.order();
        if n * n > 64 {
            return None;
        }
        Some(
            self.rows
                .iter()
                .enumerate()
                .fold(0u64, |acc, (x, r)| acc | (r.bits() << (x * n))),
        )
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    /// `x ≤ y`.
    #[inline]
    pub fn relates(&self, x: ElementId, y: ElementId) -> bool {
        self.rows[x.index()].contains(y)
    }

    /// Everything above `x`: `{ y : x ≤ y }`.
    #[inline]
    pub fn above(&self, x: ElementId) -> CrispSubset {
        self.rows[x.index()]
    }

    pub fn pairs(&self) -> impl Iterator<Item = (ElementId, ElementId)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(x, r)| r.iter().map(move |y| (ElementId::new(x), y)))
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    /// Informational only; a relation is never rejected for lacking these.
    pub fn diagnostics(&self) -> RelationDiagnostics {
        let n = self.order();
        let ids = || (0..n).map(ElementId::new);
        let reflexive = ids().all(|x| self.relates(x, x));
        let transitive = self
            .pairs()
            .all(|(x, y)| self.above(y).is_subset(self.above(x)));
        let antisymmetric = self.pairs().all(|(x, y)| x == y || !self.relates(y, x));
        RelationDiagnostics {
            reflexive,
            transitive,
            antisymmetric,
        }
    }
}

impl fmt::Debug for BinaryRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.pairs().map(|(x, y)| (x.index(), y.index())))
            .finish()
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct RelationDiagnostics {
    pub reflexive: bool,
    pub transitive: bool,
    pub antisymmetric: bool,
}

/// Checks that `r` lives on the carrier of `s`.
pub fn relation_diagnostics(
    s: &FiniteHypergroupoid,
    r: &BinaryRelation,
) -> Result<RelationDiagnostics, PredicateError> {
    if s.order() != r.order() {
        return Err(PredicateError::CarrierMismatch);
    }
    Ok(r.diagnostics())
}
