//! Base-exchange witnesses built from list colourings.
//!
//! Each multi-element exchange is computed the same way: make the two bases
//! disjoint by giving shared elements a parallel copy, restrict to their
//! union, replace one side by parallel instances where needed, hand out lists
//! whose sizes make the canonical lists colourable, and read the exchange off
//! the colour classes. Every output is re-checked with rank queries on the
//! original matroid before it is returned.

use serde::Serialize;

use crate::coloring::{color_from_lists, Coloring, ColoringOutcome, ListAssignment};
use crate::error::{Error, Result};
use crate::matroid::{Matroid, RankOracle};
use crate::set::ElementSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    Single,
    Multi,
    PartitionInto,
    PartitionFrom,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExchangeOutput {
    Element(usize),
    Subset(ElementSet),
    Partition(Vec<ElementSet>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BaseCheck {
    pub set: ElementSet,
    pub is_basis: bool,
}

/// Which input basis a derived element stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    First,
    Second,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Instance {
    pub element: usize,
    pub side: Side,
}

/// The auxiliary matroid and lists a witness was read from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Construction {
    pub instances: Vec<Instance>,
    pub lists: ListAssignment,
    pub coloring: Coloring,
}

impl Construction {
    /// List sizes on the derived elements standing for `side`.
    pub fn sizes_on(&self, side: Side) -> Vec<usize> {
        self.instances
            .iter()
            .zip(self.lists.lists())
            .filter(|(inst, _)| inst.side == side)
            .map(|(_, l)| l.len())
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExchangeWitness {
    pub variant: Variant,
    pub first: ElementSet,
    pub second: ElementSet,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub element: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subset: Option<ElementSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parts: Option<Vec<ElementSet>>,
    pub output: ExchangeOutput,
    pub checks: Vec<BaseCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub construction: Option<Construction>,
}

impl ExchangeWitness {
    /// Re-runs every recorded check against `m`.
    pub fn verify(&self, m: &Matroid) -> bool {
        self.checks.iter().all(|c| c.is_basis && m.is_basis(c.set) == Ok(true))
    }
}

fn ensure_basis(m: &Matroid, set: ElementSet, name: &str) -> Result<()> {
    if m.is_basis(set)? {
        Ok(())
    } else {
        Err(Error::Argument(format!("{name} {set:?} is not a basis")))
    }
}

fn record(m: &Matroid, sets: impl IntoIterator<Item = ElementSet>) -> Result<Vec<BaseCheck>> {
    let checks: Vec<BaseCheck> = sets
        .into_iter()
        .map(|set| BaseCheck { set, is_basis: m.is_basis(set) == Ok(true) })
        .collect();
    if let Some(bad) = checks.iter().find(|c| !c.is_basis) {
        return Err(Error::Internal(format!("exchanged set {:?} is not a basis", bad.set)));
    }
    Ok(checks)
}

fn ensure_parts(b: ElementSet, parts: &[ElementSet]) -> Result<()> {
    if parts.is_empty() {
        return Err(Error::Argument("at least one part is required".into()));
    }
    let mut union = ElementSet::EMPTY;
    for (i, &part) in parts.iter().enumerate() {
        if !union.intersection(part).is_empty() {
            return Err(Error::Argument(format!("part {i} overlaps an earlier part")));
        }
        union = union.union(part);
    }
    if union != b {
        return Err(Error::Argument("parts do not partition the basis".into()));
    }
    Ok(())
}

/// Single symmetric exchange: the first `f ∈ B2 \ B1` (by id) such that both
/// `B1 - e + f` and `B2 - f + e` are bases.
pub fn symmetric_exchange(m: &Matroid, b1: ElementSet, b2: ElementSet, e: usize) -> Result<ExchangeWitness> {
    ensure_basis(m, b1, "first set")?;
    ensure_basis(m, b2, "second set")?;
    if !b1.difference(b2).contains(e) {
        return Err(Error::Argument(format!("element {e} must lie in the first basis but not the second")));
    }
    let r = m.full_rank();
    let swapped = |f: usize| (b1.without(e).with(f), b2.without(f).with(e));
    let f = b2
        .difference(b1)
        .iter()
        .find(|&f| {
            let (x, y) = swapped(f);
            m.rank_of(x) == r && m.rank_of(y) == r
        })
        .ok_or_else(|| Error::Internal(format!("no symmetric exchange partner for {e}")))?;
    let (x, y) = swapped(f);
    Ok(ExchangeWitness {
        variant: Variant::Single,
        first: b1,
        second: b2,
        element: Some(e),
        subset: None,
        parts: None,
        output: ExchangeOutput::Element(f),
        checks: record(m, [x, y])?,
        construction: None,
    })
}

/// Two bases made disjoint and restricted to their union, with each
/// surviving element replaced by `copies` parallel instances of its side.
/// A side with zero copies is deleted.
fn disjoint_extension(
    m: &Matroid,
    first: ElementSet,
    second: ElementSet,
    first_copies: usize,
    second_copies: usize,
) -> Result<(Matroid, Vec<Instance>)> {
    let shared = first.intersection(second);
    let counts: Vec<usize> = (0..m.size()).map(|e| if shared.contains(e) { 2 } else { 1 }).collect();
    let (doubled, doubled_map) = m.add_parallel(&counts)?;

    // shared elements: the original instance stays with `first`, the copy
    // goes to `second`
    let mut side_of = vec![None; doubled.size()];
    for e in first {
        side_of[doubled_map.instances(e)[0]] = Some(Side::First);
    }
    for e in second {
        let inst = doubled_map.instances(e);
        side_of[inst[usize::from(shared.contains(e))]] = Some(Side::Second);
    }
    let copies = |side: Side| match side {
        Side::First => first_copies,
        Side::Second => second_copies,
    };
    let keep: ElementSet = (0..doubled.size())
        .filter(|&x| side_of[x].is_some_and(|s| copies(s) > 0))
        .collect();
    let (union, union_map) = doubled.restrict(keep)?;

    let union_sides: Vec<Side> = (0..union.size()).map(|x| side_of[union_map.image(x)].unwrap()).collect();
    let counts: Vec<usize> = union_sides.iter().map(|&s| copies(s)).collect();
    let (extended, extended_map) = union.add_parallel(&counts)?;

    let to_original = extended_map.then(&union_map).then(&doubled_map);
    let instances = (0..extended.size())
        .map(|x| Instance { element: to_original.image(x), side: union_sides[extended_map.image(x)] })
        .collect();
    Ok((extended, instances))
}

fn color_construction(extended: &Matroid, lists: &ListAssignment, what: &str) -> Result<Coloring> {
    match color_from_lists(extended, lists)? {
        ColoringOutcome::Colored(c) => Ok(c),
        ColoringOutcome::Deficient(cert) => Err(Error::Internal(format!(
            "{what}: construction lists are not colourable (deficient set {:?})",
            cert.set
        ))),
    }
}

/// Parallel instances of one element must all get different colours.
fn ensure_distinct_colors(instances: &[Instance], coloring: &Coloring, side: Side) -> Result<()> {
    let mut seen: Vec<(usize, usize)> = instances
        .iter()
        .enumerate()
        .filter(|(_, inst)| inst.side == side)
        .map(|(x, inst)| (inst.element, coloring.color(x)))
        .collect();
    seen.sort_unstable();
    if seen.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Internal("two parallel instances share a colour".into()));
    }
    Ok(())
}

/// Multiple symmetric exchange: for `A1 ⊆ B1` finds `A2 ⊆ B2` such that
/// `(B1 \ A1) ∪ A2` and `(B2 \ A2) ∪ A1` are both bases.
///
/// Lists are `{1}` on `A1`, `{2}` on `B1 \ A1` and `{1, 2}` on the instances
/// of `B2`; `A2` is what colour 2 picks from `B2`.
pub fn multi_symmetric_exchange(m: &Matroid, b1: ElementSet, b2: ElementSet, a1: ElementSet) -> Result<ExchangeWitness> {
    ensure_basis(m, b1, "first set")?;
    ensure_basis(m, b2, "second set")?;
    if !a1.is_subset(b1) {
        return Err(Error::Argument(format!("{a1:?} is not contained in the first basis")));
    }
    let (extended, instances) = disjoint_extension(m, b1, b2, 1, 1)?;
    let lists = instances
        .iter()
        .map(|inst| match inst.side {
            Side::First if a1.contains(inst.element) => vec![1],
            Side::First => vec![2],
            Side::Second => vec![1, 2],
        })
        .collect();
    let lists = ListAssignment::new(2, lists)?;
    let coloring = color_construction(&extended, &lists, "multiple symmetric exchange")?;

    let a2: ElementSet = instances
        .iter()
        .enumerate()
        .filter(|&(x, inst)| inst.side == Side::Second && coloring.color(x) == 2)
        .map(|(_, inst)| inst.element)
        .collect();
    let checks = record(m, [b1.difference(a1).union(a2), b2.difference(a2).union(a1)])?;
    Ok(ExchangeWitness {
        variant: Variant::Multi,
        first: b1,
        second: b2,
        element: None,
        subset: Some(a1),
        parts: None,
        output: ExchangeOutput::Subset(a2),
        checks,
        construction: Some(Construction { instances, lists, coloring }),
    })
}

/// For a partition `B_1..B_k` of `B`, a partition `A_1..A_k` of `A` with
/// every `(B \ B_i) ∪ A_i` a basis.
///
/// Each element of `B_i` becomes `k - 1` parallel instances with lists
/// `{1..k} \ {i}`; elements of `A` get `{1..k}`; `A_i` is colour class `i`
/// within `A`.
pub fn partition_exchange_into(
    m: &Matroid,
    a: ElementSet,
    b: ElementSet,
    parts: &[ElementSet],
) -> Result<ExchangeWitness> {
    ensure_basis(m, a, "first set")?;
    ensure_basis(m, b, "second set")?;
    ensure_parts(b, parts)?;
    let k = parts.len();
    let part_of = |e: usize| parts.iter().position(|p| p.contains(e)).expect("parts cover the basis");

    let (extended, instances) = disjoint_extension(m, a, b, 1, k - 1)?;
    let lists = instances
        .iter()
        .map(|inst| match inst.side {
            Side::First => (1..=k).collect(),
            Side::Second => {
                let own = part_of(inst.element) + 1;
                (1..=k).filter(|&c| c != own).collect()
            }
        })
        .collect();
    let lists = ListAssignment::new(k, lists)?;
    let coloring = color_construction(&extended, &lists, "partition exchange")?;
    ensure_distinct_colors(&instances, &coloring, Side::Second)?;

    let mut a_parts = vec![ElementSet::EMPTY; k];
    for (x, inst) in instances.iter().enumerate() {
        if inst.side == Side::First {
            a_parts[coloring.color(x) - 1].insert(inst.element);
        }
    }
    let checks = record(m, parts.iter().zip(&a_parts).map(|(&b_i, &a_i)| b.difference(b_i).union(a_i)))?;
    Ok(ExchangeWitness {
        variant: Variant::PartitionInto,
        first: a,
        second: b,
        element: None,
        subset: None,
        parts: Some(parts.to_vec()),
        output: ExchangeOutput::Partition(a_parts),
        checks,
        construction: Some(Construction { instances, lists, coloring }),
    })
}

/// For a partition `B_1..B_k` of `B`, a partition `A_1..A_k` of `A` with
/// every `(A \ A_i) ∪ B_i` a basis.
///
/// Each element of `A` becomes `k - 1` parallel instances with lists
/// `{1..k}`; elements of `B_i` get `{i}`. The instances of `a` take `k - 1`
/// distinct colours, and `a` goes to the part of the colour it misses.
pub fn partition_exchange_from(
    m: &Matroid,
    a: ElementSet,
    b: ElementSet,
    parts: &[ElementSet],
) -> Result<ExchangeWitness> {
    ensure_basis(m, a, "first set")?;
    ensure_basis(m, b, "second set")?;
    ensure_parts(b, parts)?;
    let k = parts.len();
    let part_of = |e: usize| parts.iter().position(|p| p.contains(e)).expect("parts cover the basis");

    let (extended, instances) = disjoint_extension(m, a, b, k - 1, 1)?;
    let lists = instances
        .iter()
        .map(|inst| match inst.side {
            Side::First => (1..=k).collect(),
            Side::Second => vec![part_of(inst.element) + 1],
        })
        .collect();
    let lists = ListAssignment::new(k, lists)?;
    let coloring = color_construction(&extended, &lists, "partition exchange")?;
    ensure_distinct_colors(&instances, &coloring, Side::First)?;

    let mut used = vec![ElementSet::EMPTY; k];
    for (x, inst) in instances.iter().enumerate() {
        if inst.side == Side::First {
            used[coloring.color(x) - 1].insert(inst.element);
        }
    }
    let a_parts: Vec<ElementSet> = used.iter().map(|&u| a.difference(u)).collect();
    // each element misses exactly one colour
    let total: usize = a_parts.iter().map(|p| p.len()).sum();
    if total != a.len() || a_parts.iter().fold(ElementSet::EMPTY, |acc, p| acc.union(*p)) != a {
        return Err(Error::Internal("missing colours do not partition the basis".into()));
    }
    let checks = record(m, parts.iter().zip(&a_parts).map(|(&b_i, &a_i)| a.difference(a_i).union(b_i)))?;
    Ok(ExchangeWitness {
        variant: Variant::PartitionFrom,
        first: a,
        second: b,
        element: None,
        subset: None,
        parts: Some(parts.to_vec()),
        output: ExchangeOutput::Partition(a_parts),
        checks,
        construction: Some(Construction { instances, lists, coloring }),
    })
}
