//! Matroid partition by shortest augmenting paths.
//!
//! Given matroids `M_1..M_d` on one ground set `E`, either split `E` into
//! classes `I_i` independent in `M_i`, or return a set `A` with
//! `Σ r_i(A) < |A|`, which proves no such split exists.
//!
//! Elements are inserted one at a time in increasing id order. For each new
//! element a breadth-first search runs over the exchange digraph: from an
//! element `y` there is an arc to sink `i` when `I_i + y` is independent in
//! `M_i`, and an arc to every `x ≠ y` on the fundamental circuit of `y` in
//! `I_i` otherwise. Neighbours are visited in increasing order (sinks by
//! colour, then elements by id). Exchanging along a shortest path keeps every
//! class independent; when no sink is reachable, the set of reachable
//! elements is deficient by exactly one.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matroid::{Matroid, RankOracle};
use crate::set::ElementSet;

/// Largest ground set [`min_deficiency_bruteforce`] will scan.
pub const BRUTEFORCE_LIMIT: usize = 20;

#[derive(Clone, Debug)]
pub struct PartitionProblem {
    matroids: Vec<Matroid>,
}

impl PartitionProblem {
    pub fn new(matroids: Vec<Matroid>) -> Result<Self> {
        let Some(first) = matroids.first() else {
            return Err(Error::Argument("a partition problem needs at least one matroid".into()));
        };
        let n = first.size();
        if let Some(i) = matroids.iter().position(|m| m.size() != n) {
            return Err(Error::Argument(format!(
                "matroid {i} has {} elements, expected {n}",
                matroids[i].size()
            )));
        }
        Ok(PartitionProblem { matroids })
    }

    pub fn matroids(&self) -> &[Matroid] {
        &self.matroids
    }

    pub fn size(&self) -> usize {
        self.matroids[0].size()
    }

    pub fn elements(&self) -> ElementSet {
        self.matroids[0].elements()
    }

    /// `Σ_i r_i(set)`.
    pub fn rank_sum(&self, set: ElementSet) -> usize {
        self.matroids.iter().map(|m| m.rank_of(set)).sum()
    }

    /// Adds another matroid to the list.
    pub fn with_matroid(&self, m: Matroid) -> Result<Self> {
        let mut matroids = self.matroids.clone();
        matroids.push(m);
        PartitionProblem::new(matroids)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionSolution {
    pub classes: Vec<ElementSet>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeficiencyCertificate {
    pub set: ElementSet,
    /// `|A| - Σ_i r_i(A)`, always positive.
    pub deficiency: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartitionOutcome {
    Partitioned(PartitionSolution),
    Deficient(DeficiencyCertificate),
}

impl PartitionOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, PartitionOutcome::Partitioned(_))
    }
}

/// Counters from one run of [`partition_with_stats`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PartitionStats {
    pub augmentations: usize,
    /// Length (in exchanges) of the longest augmenting path used.
    pub longest_path: usize,
}

pub fn partition(problem: &PartitionProblem) -> PartitionOutcome {
    partition_with_stats(problem).0
}

pub fn partition_with_stats(problem: &PartitionProblem) -> (PartitionOutcome, PartitionStats) {
    let mut engine = Engine::new(problem);
    let mut stats = PartitionStats::default();
    for source in problem.elements() {
        let covered_before = engine.covered();
        match engine.augment_from(source) {
            Ok(path_len) => {
                stats.augmentations += 1;
                stats.longest_path = stats.longest_path.max(path_len);
                assert_eq!(engine.covered(), covered_before + 1, "augmentation must add one element");
            }
            Err(reachable) => {
                let certificate = DeficiencyCertificate {
                    set: reachable,
                    deficiency: reachable.len() - problem.rank_sum(reachable),
                };
                assert!(verify_certificate(problem, &certificate), "engine produced an invalid certificate");
                return (PartitionOutcome::Deficient(certificate), stats);
            }
        }
    }
    let solution = PartitionSolution { classes: engine.classes };
    assert!(verify_partition(problem, &solution), "engine produced an invalid partition");
    (PartitionOutcome::Partitioned(solution), stats)
}

struct Engine<'a> {
    matroids: &'a [Matroid],
    classes: Vec<ElementSet>,
    class_of: Vec<Option<usize>>,
}

#[derive(Clone, Copy)]
enum Step {
    Unseen,
    Source,
    From(usize),
}

impl<'a> Engine<'a> {
    fn new(problem: &'a PartitionProblem) -> Self {
        Engine {
            matroids: &problem.matroids,
            classes: vec![ElementSet::EMPTY; problem.matroids.len()],
            class_of: vec![None; problem.size()],
        }
    }

    fn covered(&self) -> usize {
        self.classes.iter().map(|c| c.len()).sum()
    }

    /// Inserts `source` along a shortest augmenting path and returns the
    /// path length, or returns the reachable set when no path exists.
    fn augment_from(&mut self, source: usize) -> Result<usize, ElementSet> {
        let n = self.class_of.len();
        let mut step = vec![Step::Unseen; n];
        step[source] = Step::Source;
        let mut reached = ElementSet::singleton(source);
        let mut queue = VecDeque::from([source]);

        while let Some(y) = queue.pop_front() {
            let home = self.class_of[y];
            let mut circuits = Vec::with_capacity(self.matroids.len());
            for (i, m) in self.matroids.iter().enumerate() {
                if home == Some(i) {
                    continue;
                }
                let class = self.classes[i];
                if m.rank_of(class.with(y)) > class.len() {
                    return Ok(self.apply(&step, y, i));
                }
                circuits.push(m.circuit_unchecked(class, y));
            }
            let mut next = ElementSet::EMPTY;
            for circuit in circuits {
                next = next.union(circuit);
            }
            for x in next.difference(reached) {
                step[x] = Step::From(y);
                reached.insert(x);
                queue.push_back(x);
            }
        }
        Err(reached)
    }

    /// Walks back from `last` (which joins class `sink`) to the source,
    /// moving each element into the class of its successor.
    fn apply(&mut self, step: &[Step], last: usize, sink: usize) -> usize {
        let mut target = sink;
        let mut current = last;
        let mut exchanges = 0;
        loop {
            let previous_home = self.class_of[current];
            if let Some(h) = previous_home {
                self.classes[h].remove(current);
            }
            self.classes[target].insert(current);
            self.class_of[current] = Some(target);
            match step[current] {
                Step::Source => break,
                Step::From(y) => {
                    target = previous_home.expect("path interior elements are covered");
                    current = y;
                    exchanges += 1;
                }
                Step::Unseen => unreachable!("path runs through unvisited element"),
            }
        }
        debug_assert!(self
            .matroids
            .iter()
            .zip(&self.classes)
            .all(|(m, &c)| m.rank_of(c) == c.len()));
        exchanges
    }
}

pub fn verify_partition(problem: &PartitionProblem, solution: &PartitionSolution) -> bool {
    if solution.classes.len() != problem.matroids.len() {
        return false;
    }
    let mut union = ElementSet::EMPTY;
    for (m, &class) in problem.matroids.iter().zip(&solution.classes) {
        if !union.intersection(class).is_empty() || !class.is_subset(problem.elements()) {
            return false;
        }
        if m.rank_of(class) != class.len() {
            return false;
        }
        union = union.union(class);
    }
    union == problem.elements()
}

pub fn verify_certificate(problem: &PartitionProblem, certificate: &DeficiencyCertificate) -> bool {
    certificate.set.is_subset(problem.elements()) && problem.rank_sum(certificate.set) < certificate.set.len()
}

/// Exhaustive `min_A Σ_i r_i(A) - |A|` over all `A ⊆ E` (including `∅` and
/// `E`). Ties go to the smallest mask. The problem is feasible iff the value
/// is non-negative.
pub fn min_deficiency_bruteforce(problem: &PartitionProblem) -> Result<(ElementSet, i64)> {
    let n = problem.size();
    if n > BRUTEFORCE_LIMIT {
        return Err(Error::BudgetExceeded { size: n, budget: BRUTEFORCE_LIMIT });
    }
    let mut best = (ElementSet::EMPTY, 0i64);
    for a in problem.elements().subsets() {
        let value = problem.rank_sum(a) as i64 - a.len() as i64;
        if value < best.1 {
            best = (a, value);
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(ids: &[usize]) -> ElementSet {
        ids.iter().copied().collect()
    }

    fn problem(ms: Vec<Matroid>) -> PartitionProblem {
        PartitionProblem::new(ms).unwrap()
    }

    #[test]
    fn free_matroid_takes_everything() {
        let p = problem(vec![Matroid::free(3).unwrap()]);
        assert_eq!(
            partition(&p),
            PartitionOutcome::Partitioned(PartitionSolution { classes: vec![set(&[0, 1, 2])] })
        );
    }

    #[test]
    fn two_rank_one_matroids_split_a_pair() {
        let u12 = Matroid::uniform(1, 2).unwrap();
        let p = problem(vec![u12.clone(), u12]);
        let PartitionOutcome::Partitioned(sol) = partition(&p) else { panic!("feasible") };
        let mut classes = sol.classes.clone();
        classes.sort();
        assert_eq!(classes, vec![set(&[0]), set(&[1])]);
    }

    #[test]
    fn single_rank_one_matroid_is_deficient() {
        let p = problem(vec![Matroid::uniform(1, 2).unwrap()]);
        let PartitionOutcome::Deficient(cert) = partition(&p) else { panic!("infeasible") };
        assert_eq!(cert, DeficiencyCertificate { set: set(&[0, 1]), deficiency: 1 });
        assert!(verify_certificate(&p, &cert));
        assert_eq!(min_deficiency_bruteforce(&p), Ok((set(&[0, 1]), -1)));
    }

    #[test]
    fn empty_ground_set_is_vacuously_partitioned() {
        let p = problem(vec![Matroid::free(0).unwrap(), Matroid::uniform(0, 0).unwrap()]);
        let sol = PartitionSolution { classes: vec![ElementSet::EMPTY; 2] };
        assert!(verify_partition(&p, &sol));
        assert_eq!(partition(&p), PartitionOutcome::Partitioned(sol));
    }

    #[test]
    fn swapping_classes_between_restrictions_breaks_validity() {
        let u12 = Matroid::uniform(1, 2).unwrap();
        let p = problem(vec![
            u12.restrict_extended(set(&[0])).unwrap(),
            u12.restrict_extended(set(&[1])).unwrap(),
        ]);
        let good = PartitionSolution { classes: vec![set(&[0]), set(&[1])] };
        let swapped = PartitionSolution { classes: vec![set(&[1]), set(&[0])] };
        assert!(verify_partition(&p, &good));
        assert!(!verify_partition(&p, &swapped));
    }

    #[test]
    fn verify_rejects_overlap_and_gaps() {
        let p = problem(vec![Matroid::free(2).unwrap(), Matroid::free(2).unwrap()]);
        assert!(!verify_partition(&p, &PartitionSolution { classes: vec![set(&[0, 1]), set(&[1])] }));
        assert!(!verify_partition(&p, &PartitionSolution { classes: vec![set(&[0]), ElementSet::EMPTY] }));
        assert!(!verify_partition(&p, &PartitionSolution { classes: vec![set(&[0, 1])] }));
    }

    #[test]
    fn empty_set_never_certifies() {
        let p = problem(vec![Matroid::uniform(1, 2).unwrap()]);
        assert!(!verify_certificate(&p, &DeficiencyCertificate { set: ElementSet::EMPTY, deficiency: 0 }));
    }

    #[test]
    fn feasible_problem_has_no_certificate_anywhere() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        let p = problem(vec![u24.clone(), u24]);
        assert!(partition(&p).is_feasible());
        for a in p.elements().subsets() {
            assert!(!verify_certificate(&p, &DeficiencyCertificate { set: a, deficiency: 1 }));
        }
        assert_eq!(min_deficiency_bruteforce(&p), Ok((ElementSet::EMPTY, 0)));
    }

    #[test]
    fn augmentations_count_elements() {
        // K4 into two forests needs exchanges along longer paths
        let k4 = Matroid::graphic(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let p = problem(vec![k4.clone(), k4]);
        let (outcome, stats) = partition_with_stats(&p);
        assert!(outcome.is_feasible());
        assert_eq!(stats.augmentations, 6);
    }

    #[test]
    fn mismatched_ground_sets_are_rejected() {
        let err = PartitionProblem::new(vec![Matroid::free(2).unwrap(), Matroid::free(3).unwrap()]);
        assert!(matches!(err, Err(Error::Argument(_))));
        assert!(PartitionProblem::new(vec![]).is_err());
    }

    #[test]
    fn bruteforce_budget() {
        let p = problem(vec![Matroid::free(21).unwrap()]);
        assert_eq!(min_deficiency_bruteforce(&p), Err(Error::BudgetExceeded { size: 21, budget: 20 }));
    }
}
