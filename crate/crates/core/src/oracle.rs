//! Exhaustive ground truth at desk scale.
//!
//! Nothing here shares code with the partition engine: colourings come from a
//! plain depth-first search over list choices, bases from subset enumeration.
//! Every routine refuses inputs above its budget with an error.

use serde::Serialize;

use crate::coloring::{Coloring, ListAssignment};
use crate::error::{Error, Result};
use crate::matroid::RankOracle;
use crate::set::ElementSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_ground_set: usize,
    /// Cap on search nodes for the colouring DFS.
    pub max_assignments: u64,
}

impl OracleBudget {
    pub const fn coloring() -> Self {
        OracleBudget { max_ground_set: 12, max_assignments: 50_000_000 }
    }

    pub const fn subsets() -> Self {
        OracleBudget { max_ground_set: 20, max_assignments: u64::MAX }
    }

    pub const fn with_ground_set(self, max_ground_set: usize) -> Self {
        OracleBudget { max_ground_set, ..self }
    }

    fn admit(&self, n: usize) -> Result<()> {
        if n > self.max_ground_set {
            return Err(Error::BudgetExceeded { size: n, budget: self.max_ground_set });
        }
        Ok(())
    }
}

/// Rank axiom checks are over all pairs of subsets.
pub const AXIOM_BUDGET: usize = 10;
/// Exchange checks are over all pairs of bases.
pub const EXCHANGE_BUDGET: usize = 9;

fn independent<M: RankOracle + ?Sized>(m: &M, set: ElementSet) -> bool {
    m.rank_of(set) == set.len()
}

/// Lexicographically first proper colouring from `lists`, or `None`.
pub fn bf_color_from_lists<M: RankOracle + ?Sized>(m: &M, lists: &ListAssignment) -> Result<Option<Coloring>> {
    bf_color_from_lists_with_budget(m, lists, OracleBudget::coloring())
}

pub fn bf_color_from_lists_with_budget<M: RankOracle + ?Sized>(
    m: &M,
    lists: &ListAssignment,
    budget: OracleBudget,
) -> Result<Option<Coloring>> {
    let n = m.ground_size();
    budget.admit(n)?;
    if lists.len() != n {
        return Err(Error::Argument(format!("{} lists for {n} elements", lists.len())));
    }
    let mut search = Dfs {
        m,
        lists,
        classes: vec![ElementSet::EMPTY; lists.universe() + 1],
        colors: vec![0; n],
        nodes: 0,
        limit: budget.max_assignments,
    };
    if search.extend(0)? {
        Ok(Some(Coloring(search.colors)))
    } else {
        Ok(None)
    }
}

struct Dfs<'a, M: ?Sized> {
    m: &'a M,
    lists: &'a ListAssignment,
    classes: Vec<ElementSet>,
    colors: Vec<usize>,
    nodes: u64,
    limit: u64,
}

impl<M: RankOracle + ?Sized> Dfs<'_, M> {
    fn extend(&mut self, e: usize) -> Result<bool> {
        if e == self.colors.len() {
            return Ok(true);
        }
        for &c in self.lists.list(e) {
            self.nodes += 1;
            if self.nodes > self.limit {
                return Err(Error::BudgetExceeded { size: self.colors.len(), budget: self.limit as usize });
            }
            let grown = self.classes[c].with(e);
            if !independent(self.m, grown) {
                continue;
            }
            self.classes[c] = grown;
            self.colors[e] = c;
            if self.extend(e + 1)? {
                return Ok(true);
            }
            self.classes[c].remove(e);
        }
        Ok(false)
    }
}

/// All `r(E)`-subsets of full rank, in lexicographic order of their sorted
/// element lists.
pub fn bf_all_bases<M: RankOracle + ?Sized>(m: &M) -> Result<Vec<ElementSet>> {
    let n = m.ground_size();
    OracleBudget::subsets().admit(n)?;
    let r = m.rank_of(ElementSet::full(n));
    let mut bases = Vec::new();
    let mut current = Vec::with_capacity(r);
    combinations(n, r, 0, &mut current, &mut |c| {
        let set: ElementSet = c.iter().copied().collect();
        if independent(m, set) {
            bases.push(set);
        }
    });
    Ok(bases)
}

fn combinations(n: usize, k: usize, start: usize, current: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    if current.len() == k {
        visit(current);
        return;
    }
    for e in start..n {
        if n - e < k - current.len() {
            break;
        }
        current.push(e);
        combinations(n, k, e + 1, current, visit);
        current.pop();
    }
}

/// Checks `r(∅) = 0`, `0 ≤ r(A) ≤ |A|`, monotonicity and submodularity over
/// every pair of subsets.
pub fn bf_check_rank_axioms<M: RankOracle + ?Sized>(m: &M) -> Result<bool> {
    let n = m.ground_size();
    if n > AXIOM_BUDGET {
        return Err(Error::BudgetExceeded { size: n, budget: AXIOM_BUDGET });
    }
    let size = 1usize << n;
    let table: Vec<usize> = (0..size as u64).map(|bits| m.rank_of(ElementSet::from_bits(bits))).collect();
    if table[0] != 0 {
        return Ok(false);
    }
    for a in 0..size {
        if table[a] > (a as u64).count_ones() as usize {
            return Ok(false);
        }
        for b in 0..size {
            if a & b == a && table[a] > table[b] {
                return Ok(false);
            }
            if table[a | b] + table[a & b] > table[a] + table[b] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Outcome of checking the exchange axioms on a family of sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExchangeAxiomReport {
    /// Ordered pairs `(B1, B2)` examined.
    pub pairs_checked: usize,
    /// Triples `(B1, B2, e)` with `e ∈ B1 \ B2`.
    pub triples_checked: usize,
    pub exchange: bool,
    pub symmetric_exchange: bool,
}

impl ExchangeAxiomReport {
    pub fn holds(&self) -> bool {
        self.exchange && self.symmetric_exchange
    }
}

/// Basis exchange and symmetric exchange over an arbitrary family.
pub fn exchange_axioms(family: &[ElementSet]) -> ExchangeAxiomReport {
    let mut sorted = family.to_vec();
    sorted.sort_unstable();
    let member = |s: ElementSet| sorted.binary_search(&s).is_ok();
    let mut report = ExchangeAxiomReport {
        pairs_checked: 0,
        triples_checked: 0,
        exchange: !family.is_empty(),
        symmetric_exchange: !family.is_empty(),
    };
    for &b1 in family {
        for &b2 in family {
            report.pairs_checked += 1;
            for e in b1.difference(b2) {
                report.triples_checked += 1;
                let candidates = b2.difference(b1);
                let forward = |f: usize| member(b1.without(e).with(f));
                if !candidates.iter().any(forward) {
                    report.exchange = false;
                }
                if !candidates.iter().any(|f| forward(f) && member(b2.without(f).with(e))) {
                    report.symmetric_exchange = false;
                }
            }
        }
    }
    report
}

pub fn bf_base_exchange_report<M: RankOracle + ?Sized>(m: &M) -> Result<ExchangeAxiomReport> {
    let n = m.ground_size();
    if n > EXCHANGE_BUDGET {
        return Err(Error::BudgetExceeded { size: n, budget: EXCHANGE_BUDGET });
    }
    Ok(exchange_axioms(&bf_all_bases(m)?))
}

pub fn bf_base_exchange_axiom<M: RankOracle + ?Sized>(m: &M) -> Result<bool> {
    Ok(bf_base_exchange_report(m)?.holds())
}

/// Per-element multiplicities across the two families agree.
pub fn multiset_union_equal(qs: &[ElementSet], rs: &[ElementSet]) -> bool {
    let count = |family: &[ElementSet], e: usize| family.iter().filter(|s| s.contains(e)).count();
    let support = qs.iter().chain(rs).fold(ElementSet::EMPTY, |acc, s| acc.union(*s));
    support.iter().all(|e| count(qs, e) == count(rs, e))
}

/// Every assignment of the elements of `set` to `k` labelled parts (parts may
/// be empty), as `k` disjoint sets covering `set`.
pub fn labeled_partitions(set: ElementSet, k: usize) -> Vec<Vec<ElementSet>> {
    let elements = set.to_vec();
    let mut out = Vec::new();
    if k == 0 {
        if elements.is_empty() {
            out.push(Vec::new());
        }
        return out;
    }
    let mut parts = vec![ElementSet::EMPTY; k];
    fn go(elements: &[usize], parts: &mut Vec<ElementSet>, out: &mut Vec<Vec<ElementSet>>) {
        let Some((&e, rest)) = elements.split_first() else {
            out.push(parts.clone());
            return;
        };
        for i in 0..parts.len() {
            parts[i].insert(e);
            go(rest, parts, out);
            parts[i].remove(e);
        }
    }
    go(&elements, &mut parts, &mut out);
    out
}

/// Set partitions of `set` into exactly `k` non-empty blocks, each listed
/// with blocks ordered by smallest element.
pub fn set_partitions(set: ElementSet, k: usize) -> Vec<Vec<ElementSet>> {
    let elements = set.to_vec();
    let mut out = Vec::new();
    fn go(elements: &[usize], k: usize, blocks: &mut Vec<ElementSet>, out: &mut Vec<Vec<ElementSet>>) {
        let Some((&e, rest)) = elements.split_first() else {
            if blocks.len() == k {
                out.push(blocks.clone());
            }
            return;
        };
        if blocks.len() + elements.len() < k {
            return;
        }
        for i in 0..blocks.len() {
            blocks[i].insert(e);
            go(rest, k, blocks, out);
            blocks[i].remove(e);
        }
        if blocks.len() < k {
            blocks.push(ElementSet::singleton(e));
            go(rest, k, blocks, out);
            blocks.pop();
        }
    }
    go(&elements, k, &mut Vec::new(), &mut out);
    out
}

fn basis<M: RankOracle + ?Sized>(m: &M, set: ElementSet, r: usize) -> bool {
    set.len() == r && independent(m, set)
}

/// Every `A2 ⊆ B2` making both `(B1 \ A1) ∪ A2` and `(B2 \ A2) ∪ A1` bases.
pub fn bf_multi_exchange_outputs<M: RankOracle + ?Sized>(
    m: &M,
    b1: ElementSet,
    b2: ElementSet,
    a1: ElementSet,
) -> Result<Vec<ElementSet>> {
    OracleBudget::subsets().admit(m.ground_size())?;
    let r = m.rank_of(ElementSet::full(m.ground_size()));
    Ok(b2
        .subsets()
        .filter(|&a2| {
            basis(m, b1.difference(a1).union(a2), r) && basis(m, b2.difference(a2).union(a1), r)
        })
        .collect())
}

/// Every partition `A_1..A_k` of `A` (labelled, parts may be empty) with each
/// `(B \ B_i) ∪ A_i` a basis.
pub fn bf_partition_into_outputs<M: RankOracle + ?Sized>(
    m: &M,
    a: ElementSet,
    b: ElementSet,
    parts: &[ElementSet],
) -> Result<Vec<Vec<ElementSet>>> {
    OracleBudget::subsets().admit(m.ground_size())?;
    let r = m.rank_of(ElementSet::full(m.ground_size()));
    Ok(labeled_partitions(a, parts.len())
        .into_iter()
        .filter(|ai| ai.iter().zip(parts).all(|(&a_i, &b_i)| basis(m, b.difference(b_i).union(a_i), r)))
        .collect())
}

/// Every partition `A_1..A_k` of `A` with each `(A \ A_i) ∪ B_i` a basis.
pub fn bf_partition_from_outputs<M: RankOracle + ?Sized>(
    m: &M,
    a: ElementSet,
    parts: &[ElementSet],
) -> Result<Vec<Vec<ElementSet>>> {
    OracleBudget::subsets().admit(m.ground_size())?;
    let r = m.rank_of(ElementSet::full(m.ground_size()));
    Ok(labeled_partitions(a, parts.len())
        .into_iter()
        .filter(|ai| ai.iter().zip(parts).all(|(&a_i, &b_i)| basis(m, a.difference(a_i).union(b_i), r)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::Matroid;

    fn set(ids: &[usize]) -> ElementSet {
        ids.iter().copied().collect()
    }

    struct Bumped(Matroid);

    impl RankOracle for Bumped {
        fn ground_size(&self) -> usize {
            self.0.size()
        }

        fn rank_of(&self, s: ElementSet) -> usize {
            self.0.rank_of(s) + usize::from(s == self.0.elements())
        }
    }

    #[test]
    fn bf_coloring_examples() {
        let u12 = Matroid::uniform(1, 2).unwrap();
        let ones = ListAssignment::from_lists(vec![vec![1], vec![1]]).unwrap();
        assert_eq!(bf_color_from_lists(&u12, &ones), Ok(None));
        let free = Matroid::free(3).unwrap();
        let l = ListAssignment::from_lists(vec![vec![2, 3], vec![1], vec![3, 4]]).unwrap();
        assert_eq!(bf_color_from_lists(&free, &l), Ok(Some(Coloring(vec![2, 1, 3]))));
        let big = Matroid::free(13).unwrap();
        assert!(matches!(
            bf_color_from_lists(&big, &ListAssignment::constant(1, 13).unwrap()),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn dfs_node_budget_is_a_hard_error() {
        let m = Matroid::uniform(1, 6).unwrap();
        let l = ListAssignment::constant(5, 6).unwrap();
        let tight = OracleBudget { max_ground_set: 12, max_assignments: 10 };
        assert!(matches!(
            bf_color_from_lists_with_budget(&m, &l, tight),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn all_bases_examples() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        let bases = bf_all_bases(&u24).unwrap();
        assert_eq!(
            bases,
            vec![set(&[0, 1]), set(&[0, 2]), set(&[0, 3]), set(&[1, 2]), set(&[1, 3]), set(&[2, 3])]
        );
        let with_loop = Matroid::graphic(3, &[(0, 1), (1, 1), (1, 2), (0, 2)]).unwrap();
        assert!(bf_all_bases(&with_loop).unwrap().iter().all(|b| !b.contains(1)));
    }

    #[test]
    fn rank_axiom_checker_catches_corruption() {
        let m = Matroid::uniform(2, 4).unwrap();
        assert_eq!(bf_check_rank_axioms(&m), Ok(true));
        assert_eq!(bf_check_rank_axioms(&Bumped(m)), Ok(false));
        assert_eq!(bf_check_rank_axioms(&Matroid::free(0).unwrap()), Ok(true));
        assert!(bf_check_rank_axioms(&Matroid::free(11).unwrap()).is_err());
    }

    #[test]
    fn exchange_axiom_counts_on_u24() {
        let report = bf_base_exchange_report(&Matroid::uniform(2, 4).unwrap()).unwrap();
        assert!(report.holds());
        assert_eq!(report.pairs_checked, 36);
        // each 2-set has one disjoint partner (2 choices of e) and four
        // partners sharing an element (1 choice): 6 * (2 + 4)
        assert_eq!(report.triples_checked, 36);
    }

    #[test]
    fn non_matroid_family_fails_exchange() {
        let report = exchange_axioms(&[set(&[0, 1]), set(&[2, 3])]);
        assert!(!report.exchange);
        assert!(!report.symmetric_exchange);
    }

    #[test]
    fn multiset_union_examples() {
        let f = [set(&[0, 2]), set(&[1])];
        assert!(multiset_union_equal(&f, &f));
        assert!(multiset_union_equal(&[set(&[0]), set(&[1])], &[set(&[0, 1]), ElementSet::EMPTY]));
        assert!(!multiset_union_equal(&[set(&[0]), set(&[0])], &[set(&[0]), ElementSet::EMPTY]));
    }

    #[test]
    fn partition_enumerators() {
        let s = set(&[0, 1, 2, 3]);
        assert_eq!(labeled_partitions(s, 3).len(), 81);
        assert_eq!(labeled_partitions(ElementSet::EMPTY, 2), vec![vec![ElementSet::EMPTY; 2]]);
        // Stirling numbers of the second kind S(4, k)
        assert_eq!(set_partitions(s, 1).len(), 1);
        assert_eq!(set_partitions(s, 2).len(), 7);
        assert_eq!(set_partitions(s, 3).len(), 6);
        assert_eq!(set_partitions(s, 5).len(), 0);
        for p in set_partitions(s, 3) {
            assert_eq!(p.iter().fold(ElementSet::EMPTY, |a, b| a.union(*b)), s);
            assert!(p.iter().all(|b| !b.is_empty()));
        }
    }

    #[test]
    fn exchange_enumerators_on_u24() {
        let m = Matroid::uniform(2, 4).unwrap();
        let all = bf_multi_exchange_outputs(&m, set(&[0, 1]), set(&[2, 3]), set(&[0, 1])).unwrap();
        assert_eq!(all, vec![set(&[2, 3])]);
        let into = bf_partition_into_outputs(&m, set(&[0, 1]), set(&[2, 3]), &[set(&[2]), set(&[3])]).unwrap();
        assert_eq!(into.len(), 2);
    }
}
