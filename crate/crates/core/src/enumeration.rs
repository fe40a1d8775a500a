//! Canonical, range-addressable enumeration of the finite quantification
//! domains, and seeded sampling of ≤-hypergroupoids.
//!
//! Every domain maps an ordinal in `0..total` to an object, so any contiguous
//! ordinal range can be materialised on its own and disjoint ranges can be
//! handed to separate workers.
//!
//! Canonical orders:
//! * hyperoperation tables: row-major cells, cell `(a, a)` most significant,
//!   each cell ranging over the nonempty subset bitmasks `1..2ⁿ`;
//! * relations: bitmask `0..2^(n²)` with bit `x·n + y` meaning `x ≤ y`;
//! * nonempty subsets: bitmask `1..2ⁿ`;
//! * grid fuzzy subsets: odometer over `{0, 1/k, …, 1}` with the first
//!   element most significant.
//!
//! Sampling uses ChaCha8 (`rand_chacha`) seeded from a `u64`; sample `i` of a
//! run reads stream `i` of that generator, so samples are independent of the
//! worker that draws them.

use std::ops::Range;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::EnumerationError;
use crate::fuzzy::{FuzzySubset, Grade};
use crate::structures::{BinaryRelation, Carrier, CrispSubset, FiniteHypergroupoid};

/// Largest order for which the full domains are addressable.
pub const MAX_ENUM_ORDER: usize = 4;

fn check_order(n: usize) -> Result<(), EnumerationError> {
    match n {
        0 => Err(EnumerationError::ZeroOrder),
        n if n > MAX_ENUM_ORDER => Err(EnumerationError::OrderTooLarge(n)),
        _ => Ok(()),
    }
}

/// A finite domain addressed by ordinals in `0..total()`.
pub trait Domain: Clone {
    type Item;

    fn total(&self) -> u64;

    /// The object at `ordinal`. Panics when `ordinal >= total()`.
    fn get(&self, ordinal: u64) -> Self::Item;

    fn iter(&self) -> EnumerationCursor<Self> {
        EnumerationCursor {
            domain: self.clone(),
            position: 0,
            end: self.total(),
        }
    }

    fn range(&self, r: Range<u64>) -> Result<EnumerationCursor<Self>, EnumerationError> {
        let total = self.total();
        if r.start > r.end || r.end > total {
            return Err(EnumerationError::RangeOutOfBounds {
                start: r.start,
                end: r.end,
                total,
            });
        }
        Ok(EnumerationCursor {
            domain: self.clone(),
            position: r.start,
            end: r.end,
        })
    }
}

/// Position within a domain; yields objects in canonical order.
#[derive(Clone, Debug)]
pub struct EnumerationCursor<D> {
    domain: D,
    position: u64,
    end: u64,
}

impl<D: Domain> EnumerationCursor<D> {
    pub fn position(&self) -> u64 {
        self.position
    }

    pub fn total(&self) -> u64 {
        self.domain.total()
    }

    pub fn domain(&self) -> &D {
        &self.domain
    }
}

impl<D: Domain> Iterator for EnumerationCursor<D> {
    type Item = D::Item;

    fn next(&mut self) -> Option<D::Item> {
        if self.position >= self.end {
            return None;
        }
        let item = self.domain.get(self.position);
        self.position += 1;
        Some(item)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = usize::try_from(self.end - self.position).ok();
        (left.unwrap_or(usize::MAX), left)
    }
}

/// All hyperoperations on the standard carrier of order `n`.
#[derive(Clone, Debug)]
pub struct HyperoperationSpace {
    carrier: Carrier,
    base: u64,
    total: u64,
}

impl HyperoperationSpace {
    pub fn new(n: usize) -> Result<Self, EnumerationError> {
        check_order(n)?;
        let base = (1u64 << n) - 1;
        // 15^16 < 2^64
        let total = base.pow((n * n) as u32);
        Ok(HyperoperationSpace {
            carrier: Carrier::standard(n).expect("order checked"),
            base,
            total,
        })
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn order(&self) -> usize {
        self.carrier.len()
    }

    /// Canonical ordinal of `s`, or `None` if it is not on the standard carrier.
    pub fn ordinal_of(&self, s: &FiniteHypergroupoid) -> Option<u64> {
        if s.carrier() != &self.carrier {
            return None;
        }
        Some(
            s.cells()
                .iter()
                .fold(0u64, |acc, c| acc * self.base + (c.bits() - 1)),
        )
    }
}

impl Domain for HyperoperationSpace {
    type Item = FiniteHypergroupoid;

    fn total(&self) -> u64 {
        self.total
    }

    fn get(&self, ordinal: u64) -> FiniteHypergroupoid {
        assert!(ordinal < self.total, "ordinal {ordinal} out of range");
        let n = self.order();
        let mut cells = vec![CrispSubset::EMPTY; n * n];
        let mut rest = ordinal;
        for cell in cells.iter_mut().rev() {
            *cell = CrispSubset::from_bits(rest % self.base + 1);
            rest /= self.base;
        }
        FiniteHypergroupoid::new(self.carrier.clone(), cells).expect("cells are nonempty")
    }
}

/// All binary relations on a carrier of order `n`.
#[derive(Clone, Copy, Debug)]
pub struct RelationSpace {
    n: usize,
}

impl RelationSpace {
    pub fn new(n: usize) -> Result<Self, EnumerationError> {
        check_order(n)?;
        Ok(RelationSpace { n })
    }
}

impl Domain for RelationSpace {
    type Item = BinaryRelation;

    fn total(&self) -> u64 {
        1u64 << (self.n * self.n)
    }

    fn get(&self, ordinal: u64) -> BinaryRelation {
        assert!(ordinal < self.total(), "ordinal {ordinal} out of range");
        BinaryRelation::from_bits(self.n, ordinal)
    }
}

/// Nonempty subsets of a carrier of order `n`, by increasing bitmask.
#[derive(Clone, Copy, Debug)]
pub struct SubsetSpace {
    n: usize,
}

impl SubsetSpace {
    pub fn new(n: usize) -> Result<Self, EnumerationError> {
        if n == 0 {
            return Err(EnumerationError::ZeroOrder);
        }
        if n > 63 {
            return Err(EnumerationError::OrderTooLarge(n));
        }
        Ok(SubsetSpace { n })
    }
}

impl Domain for SubsetSpace {
    type Item = CrispSubset;

    fn total(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    fn get(&self, ordinal: u64) -> CrispSubset {
        assert!(ordinal < self.total(), "ordinal {ordinal} out of range");
        CrispSubset::from_bits(ordinal + 1)
    }
}

/// Fuzzy subsets with grades in `{0, 1/k, …, 1}`.
#[derive(Clone, Debug)]
pub struct GridFuzzySpace {
    carrier: Carrier,
    levels: Vec<Grade>,
    total: u64,
}

impl GridFuzzySpace {
    pub fn new(carrier: Carrier, k: u64) -> Result<Self, EnumerationError> {
        if k == 0 {
            return Err(EnumerationError::ZeroGrid);
        }
        let n = carrier.len();
        let total = (k + 1)
            .checked_pow(n as u32)
            .ok_or(EnumerationError::OrderTooLarge(n))?;
        let levels = (0..=k).map(|i| Grade::new(i, k).expect("i ≤ k")).collect();
        Ok(GridFuzzySpace {
            carrier,
            levels,
            total,
        })
    }

    pub fn grid(&self) -> u64 {
        self.levels.len() as u64 - 1
    }
}

impl Domain for GridFuzzySpace {
    type Item = FuzzySubset;

    fn total(&self) -> u64 {
        self.total
    }

    fn get(&self, ordinal: u64) -> FuzzySubset {
        assert!(ordinal < self.total, "ordinal {ordinal} out of range");
        let base = self.levels.len() as u64;
        let mut grades = vec![Grade::ZERO; self.carrier.len()];
        let mut rest = ordinal;
        for g in grades.iter_mut().rev() {
            *g = self.levels[(rest % base) as usize];
            rest /= base;
        }
        FuzzySubset::new(self.carrier.clone(), grades).expect("one grade per element")
    }
}

pub fn enum_hyperoperations(
    n: usize,
) -> Result<EnumerationCursor<HyperoperationSpace>, EnumerationError> {
    Ok(HyperoperationSpace::new(n)?.iter())
}

pub fn enum_relations(n: usize) -> Result<EnumerationCursor<RelationSpace>, EnumerationError> {
    Ok(RelationSpace::new(n)?.iter())
}

pub fn enum_nonempty_subsets(n: usize) -> Result<EnumerationCursor<SubsetSpace>, EnumerationError> {
    Ok(SubsetSpace::new(n)?.iter())
}

pub fn enum_grid_fuzzy(
    n: usize,
    k: u64,
) -> Result<EnumerationCursor<GridFuzzySpace>, EnumerationError> {
    let carrier = Carrier::standard(n).map_err(|_| EnumerationError::OrderTooLarge(n))?;
    Ok(GridFuzzySpace::new(carrier, k)?.iter())
}

/// One random ≤-hypergroupoid of order `n`: every cell uniform over the
/// nonempty subsets, every relation pair present with probability 1/2.
pub fn sample_structure(n: usize, seed: u64) -> (FiniteHypergroupoid, BinaryRelation) {
    sample_structure_at(n, seed, 0)
}

/// Sample number `index` of the run seeded with `seed`.
pub fn sample_structure_at(
    n: usize,
    seed: u64,
    index: u64,
) -> (FiniteHypergroupoid, BinaryRelation) {
    let carrier = Carrier::standard(n).expect("sample order within carrier bounds");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let top = carrier.full().bits();
    let cells = (0..n * n)
        .map(|_| CrispSubset::from_bits(rng.random_range(1..=top)))
        .collect();
    let mut pairs = Vec::new();
    for x in carrier.elements() {
        for y in carrier.elements() {
            if rng.random_bool(0.5) {
                pairs.push((x, y));
            }
        }
    }
    let s = FiniteHypergroupoid::new(carrier, cells).expect("cells are nonempty");
    let r = BinaryRelation::from_pairs(n, pairs).expect("pairs lie in the carrier");
    (s, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::ElementId;

    #[test]
    fn closed_form_totals() {
        assert_eq!(enum_hyperoperations(1).unwrap().count(), 1);
        assert_eq!(enum_hyperoperations(2).unwrap().count(), 81);
        assert_eq!(HyperoperationSpace::new(3).unwrap().total(), 40_353_607);
        assert_eq!(HyperoperationSpace::new(4).unwrap().total(), 15u64.pow(16));
        assert_eq!(enum_relations(1).unwrap().count(), 2);
        assert_eq!(enum_relations(2).unwrap().count(), 16);
        assert_eq!(RelationSpace::new(3).unwrap().total(), 512);
        assert_eq!(enum_nonempty_subsets(3).unwrap().count(), 7);
        assert_eq!(enum_grid_fuzzy(2, 2).unwrap().count(), 9);
        assert_eq!(enum_grid_fuzzy(3, 1).unwrap().count(), 8);
    }

    #[test]
    fn order_caps() {
        assert_eq!(
            HyperoperationSpace::new(5).unwrap_err(),
            EnumerationError::OrderTooLarge(5)
        );
        assert_eq!(
            RelationSpace::new(0).unwrap_err(),
            EnumerationError::ZeroOrder
        );
        assert_eq!(
            enum_grid_fuzzy(2, 0).unwrap_err(),
            EnumerationError::ZeroGrid
        );
    }

    #[test]
    fn single_structure_of_order_one() {
        let s = enum_hyperoperations(1).unwrap().next().unwrap();
        assert_eq!(
            s.hyperproduct(ElementId::new(0), ElementId::new(0)),
            CrispSubset::from_bits(1)
        );
    }

    #[test]
    fn first_relation_is_empty() {
        let r = enum_relations(2).unwrap().next().unwrap();
        assert!(r.is_empty());
        let all: Vec<_> = enum_relations(1).unwrap().collect();
        assert_eq!(all[1], BinaryRelation::identity(1));
    }

    #[test]
    fn subsets_in_bitmask_order() {
        let v: Vec<u64> = enum_nonempty_subsets(2)
            .unwrap()
            .map(|s| s.bits())
            .collect();
        assert_eq!(v, vec![1, 2, 3]);
        let v: Vec<u64> = enum_nonempty_subsets(1)
            .unwrap()
            .map(|s| s.bits())
            .collect();
        assert_eq!(v, vec![1]);
    }

    #[test]
    fn grid_odometer() {
        let v: Vec<_> = enum_grid_fuzzy(2, 1).unwrap().collect();
        let c = Carrier::standard(2).unwrap();
        assert_eq!(v[0], FuzzySubset::constant(c.clone(), Grade::ZERO));
        // every characteristic function appears exactly once
        for bits in 0..4 {
            let chi = FuzzySubset::characteristic(&c, CrispSubset::from_bits(bits));
            assert_eq!(v.iter().filter(|f| **f == chi).count(), 1);
        }
        // last element varies fastest
        assert_eq!(v[1].grades(), &[Grade::ZERO, Grade::ONE]);
    }

    #[test]
    fn table_order_is_lexicographic() {
        let space = HyperoperationSpace::new(2).unwrap();
        let first = space.get(0);
        assert!(first.cells().iter().all(|c| c.bits() == 1));
        let second = space.get(1);
        assert_eq!(
            second.cells().iter().map(|c| c.bits()).collect::<Vec<_>>(),
            vec![1, 1, 1, 2]
        );
        let last = space.get(80);
        assert!(last.cells().iter().all(|c| c.bits() == 3));
        for (i, s) in space.iter().enumerate() {
            assert_eq!(space.ordinal_of(&s), Some(i as u64));
        }
    }

    #[test]
    fn ranges_partition_the_domain() {
        let space = HyperoperationSpace::new(2).unwrap();
        let whole: Vec<_> = space.iter().collect();
        let mut pieces = Vec::new();
        for r in [0..10, 10..11, 11..50, 50..81] {
            pieces.extend(space.range(r).unwrap());
        }
        assert_eq!(whole, pieces);
        assert!(space.range(70..82).is_err());
        let mut cur = space.range(5..7).unwrap();
        assert_eq!(cur.position(), 5);
        cur.next();
        assert_eq!(cur.position(), 6);
        assert_eq!(cur.total(), 81);
    }

    #[test]
    fn order_four_is_addressable() {
        let space = HyperoperationSpace::new(4).unwrap();
        let s = space.get(space.total() - 1);
        assert!(s.cells().iter().all(|c| c.bits() == 15));
        assert_eq!(space.ordinal_of(&s), Some(space.total() - 1));
    }

    #[test]
    fn sampling_is_deterministic() {
        let a = sample_structure(3, 7);
        let b = sample_structure(3, 7);
        assert_eq!(a, b);
        let c = sample_structure_at(3, 7, 1);
        assert_ne!(a, c);
        let (s, r) = sample_structure(2, 99);
        assert_eq!(s.order(), 2);
        assert_eq!(r.order(), 2);
        assert!(s.cells().iter().all(|c| !c.is_empty()));
    }
}
