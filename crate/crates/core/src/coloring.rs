//! Colouring matroids from lists.
//!
//! A list assignment `L` is turned into a partition problem: colour `i`
//! becomes the matroid `M` restricted to `Q_i = {e : i ∈ L(e)}` (kept on the
//! full ground set), and a proper colouring from `L` is exactly a partition
//! of `E` into sets independent in those restrictions. Everything here is
//! exact; colours are the integers `1..=universe`.

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::{Matroid, RankOracle};
use crate::partition::{self, DeficiencyCertificate, PartitionOutcome, PartitionProblem, BRUTEFORCE_LIMIT};
use crate::set::ElementSet;

/// Universe size floor for random lists in [`check_theorem2`].
pub const MIN_RANDOM_UNIVERSE: usize = 8;

/// List sizes `ℓ(e) ≥ 1`, one per element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct SizeFunction(Vec<usize>);

impl SizeFunction {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if let Some(e) = sizes.iter().position(|&s| s == 0) {
            return Err(Error::Argument(format!("element {e} has list size 0")));
        }
        Ok(SizeFunction(sizes))
    }

    pub fn constant(k: usize, n: usize) -> Result<Self> {
        SizeFunction::new(vec![k; n])
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

impl TryFrom<Vec<usize>> for SizeFunction {
    type Error = Error;

    fn try_from(sizes: Vec<usize>) -> Result<Self> {
        SizeFunction::new(sizes)
    }
}

impl From<SizeFunction> for Vec<usize> {
    fn from(sizes: SizeFunction) -> Vec<usize> {
        sizes.0
    }
}

/// Per-element colour lists over the universe `{1, ..., universe}`.
/// Lists are stored sorted and de-duplicated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ListFile", into = "ListFile")]
pub struct ListAssignment {
    universe: usize,
    lists: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ListFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    universe: Option<usize>,
    lists: Vec<Vec<usize>>,
}

impl TryFrom<ListFile> for ListAssignment {
    type Error = Error;

    fn try_from(file: ListFile) -> Result<Self> {
        match file.universe {
            Some(d) => ListAssignment::new(d, file.lists),
            None => ListAssignment::from_lists(file.lists),
        }
    }
}

impl From<ListAssignment> for ListFile {
    fn from(lists: ListAssignment) -> ListFile {
        ListFile { universe: Some(lists.universe), lists: lists.lists }
    }
}

impl ListAssignment {
    pub fn new(universe: usize, lists: Vec<Vec<usize>>) -> Result<Self> {
        let mut normalised = Vec::with_capacity(lists.len());
        for (e, mut list) in lists.into_iter().enumerate() {
            list.sort_unstable();
            list.dedup();
            if list.is_empty() {
                return Err(Error::Argument(format!("element {e} has an empty list")));
            }
            if list[0] == 0 || *list.last().unwrap() > universe {
                return Err(Error::Argument(format!(
                    "list of element {e} leaves the colour universe 1..={universe}"
                )));
            }
            normalised.push(list);
        }
        Ok(ListAssignment { universe, lists: normalised })
    }

    /// Universe defaults to the largest colour mentioned.
    pub fn from_lists(lists: Vec<Vec<usize>>) -> Result<Self> {
        let universe = lists.iter().flatten().copied().max().unwrap_or(0);
        ListAssignment::new(universe, lists)
    }

    /// `{1..k}` on every one of `n` elements.
    pub fn constant(k: usize, n: usize) -> Result<Self> {
        canonical_lists(&SizeFunction::constant(k, n)?)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn list(&self, e: usize) -> &[usize] {
        &self.lists[e]
    }

    pub fn lists(&self) -> &[Vec<usize>] {
        &self.lists
    }

    pub fn sizes(&self) -> SizeFunction {
        SizeFunction(self.lists.iter().map(Vec::len).collect())
    }

    /// `Q_i = {e : i ∈ L(e)}` for `i = 1..=universe`, returned 0-indexed.
    pub fn color_sets(&self) -> Vec<ElementSet> {
        let mut qs = vec![ElementSet::EMPTY; self.universe];
        for (e, list) in self.lists.iter().enumerate() {
            for &c in list {
                qs[c - 1].insert(e);
            }
        }
        qs
    }

    /// Same lists with `color` added to the list of `e`.
    pub fn with_extra_color(&self, e: usize, color: usize) -> Result<Self> {
        let mut lists = self.lists.clone();
        lists[e].push(color);
        ListAssignment::new(self.universe.max(color), lists)
    }
}

/// Colour of each element (colours start at 1).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coloring(pub Vec<usize>);

impl Coloring {
    pub fn color(&self, e: usize) -> usize {
        self.0[e]
    }

    /// Elements of colour `c`.
    pub fn class(&self, c: usize) -> ElementSet {
        self.0.iter().enumerate().filter(|&(_, &x)| x == c).map(|(e, _)| e).collect()
    }

    pub fn max_color(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColoringOutcome {
    Colored(Coloring),
    Deficient(DeficiencyCertificate),
}

impl ColoringOutcome {
    pub fn is_colorable(&self) -> bool {
        matches!(self, ColoringOutcome::Colored(_))
    }

    pub fn coloring(&self) -> Option<&Coloring> {
        match self {
            ColoringOutcome::Colored(c) => Some(c),
            ColoringOutcome::Deficient(_) => None,
        }
    }
}

/// `L_ℓ(e) = {1, ..., ℓ(e)}`.
pub fn canonical_lists(sizes: &SizeFunction) -> Result<ListAssignment> {
    let lists = sizes.sizes().iter().map(|&s| (1..=s).collect()).collect();
    ListAssignment::new(sizes.max(), lists)
}

/// The partition problem whose solutions are the colourings from `lists`.
pub fn list_problem(m: &Matroid, lists: &ListAssignment) -> Result<PartitionProblem> {
    if lists.len() != m.size() {
        return Err(Error::Argument(format!(
            "{} lists for a ground set of {} elements",
            lists.len(),
            m.size()
        )));
    }
    let restrictions = lists
        .color_sets()
        .into_iter()
        .map(|q| m.restrict_extended(q))
        .collect::<Result<Vec<_>>>()?;
    if restrictions.is_empty() {
        // empty ground set with empty universe: one dummy colour
        return PartitionProblem::new(vec![m.restrict_extended(ElementSet::EMPTY)?]);
    }
    PartitionProblem::new(restrictions)
}

pub fn color_from_lists(m: &Matroid, lists: &ListAssignment) -> Result<ColoringOutcome> {
    let problem = list_problem(m, lists)?;
    if let Some(e) = m.first_loop() {
        return Ok(ColoringOutcome::Deficient(DeficiencyCertificate {
            set: ElementSet::singleton(e),
            deficiency: 1,
        }));
    }
    Ok(match partition::partition(&problem) {
        PartitionOutcome::Partitioned(solution) => {
            let mut colors = vec![0; m.size()];
            for (i, class) in solution.classes.iter().enumerate() {
                for e in *class {
                    colors[e] = i + 1;
                }
            }
            ColoringOutcome::Colored(Coloring(colors))
        }
        PartitionOutcome::Deficient(cert) => ColoringOutcome::Deficient(cert),
    })
}

/// Every colour class independent and, when `lists` is given, every element
/// coloured from its list.
pub fn is_proper(m: &Matroid, coloring: &Coloring, lists: Option<&ListAssignment>) -> bool {
    if coloring.0.len() != m.size() {
        return false;
    }
    if let Some(lists) = lists {
        if lists.len() != m.size() {
            return false;
        }
        if (0..m.size()).any(|e| lists.list(e).binary_search(&coloring.color(e)).is_err()) {
            return false;
        }
    }
    let mut colors = coloring.0.clone();
    colors.sort_unstable();
    colors.dedup();
    colors.into_iter().all(|c| {
        let class = coloring.class(c);
        m.rank_of(class) == class.len()
    })
}

fn require_loopless(m: &Matroid) -> Result<()> {
    match m.first_loop() {
        Some(element) => Err(Error::Loop { element }),
        None => Ok(()),
    }
}

/// `χ(M)`: the fewest colours in a proper colouring. The search starts at
/// `⌈|E| / r(E)⌉`, which no colouring can beat. The empty matroid gets 1.
pub fn chromatic_number(m: &Matroid) -> Result<usize> {
    require_loopless(m)?;
    let n = m.size();
    if n == 0 {
        return Ok(1);
    }
    let mut k = n.div_ceil(m.full_rank()).max(1);
    loop {
        if color_from_lists(m, &ListAssignment::constant(k, n)?)?.is_colorable() {
            return Ok(k);
        }
        k += 1;
    }
}

/// `max_{∅ ≠ A ⊆ E} ⌈|A| / r(A)⌉` by scanning every subset.
pub fn edmonds_formula_bruteforce(m: &Matroid) -> Result<usize> {
    require_loopless(m)?;
    if m.size() > BRUTEFORCE_LIMIT {
        return Err(Error::BudgetExceeded { size: m.size(), budget: BRUTEFORCE_LIMIT });
    }
    let best = m
        .elements()
        .subsets()
        .skip(1)
        .map(|a| a.len().div_ceil(m.rank_of(a)))
        .max()
        .unwrap_or(1);
    Ok(best)
}

/// Sizes from a `k`-colouring: classes sorted by decreasing size get the
/// indices `1..=k`, and `ℓ(e)` is the index of the class holding `e`.
///
/// With that ordering the mean of `ℓ` never exceeds `(k + 1) / 2`.
pub fn corollary_lists(m: &Matroid, k: usize) -> Result<SizeFunction> {
    require_loopless(m)?;
    if k == 0 {
        return Err(Error::Infeasible("no colouring uses zero colours".into()));
    }
    let n = m.size();
    let coloring = match color_from_lists(m, &ListAssignment::constant(k, n)?)? {
        ColoringOutcome::Colored(c) => c,
        ColoringOutcome::Deficient(cert) => {
            return Err(Error::Infeasible(format!(
                "matroid is not {k}-colourable; {:?} is deficient by {}",
                cert.set, cert.deficiency
            )))
        }
    };
    let mut classes: Vec<ElementSet> = (1..=k).map(|c| coloring.class(c)).collect();
    // stable: equal sizes keep engine order
    classes.sort_by_key(|c| std::cmp::Reverse(c.len()));
    let mut sizes = vec![0; n];
    for (i, class) in classes.iter().enumerate() {
        for e in *class {
            sizes[e] = i + 1;
        }
    }
    let sizes = SizeFunction::new(sizes)?;
    if 2 * sizes.total() > n * (k + 1) {
        return Err(Error::Internal("corollary sizes exceed the (k+1)/2 average bound".into()));
    }
    Ok(sizes)
}

/// One random or canonical trial that could not be coloured.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrialFailure {
    pub trial: usize,
    pub lists: ListAssignment,
    pub certificate: DeficiencyCertificate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PremiseStatus {
    /// Canonical lists are colourable; random trials were run.
    Holds,
    /// Canonical lists are not colourable; no trials were run.
    PremiseFalse,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem2Report {
    pub seed: u64,
    pub trials: usize,
    pub sizes: SizeFunction,
    pub universe: usize,
    pub premise: PremiseStatus,
    pub colored: usize,
    /// Must be empty whenever the premise holds.
    pub failures: Vec<TrialFailure>,
    /// The canonical lists' certificate when the premise is false, followed
    /// by the certificate of each failure.
    pub certificates: Vec<DeficiencyCertificate>,
}

impl Theorem2Report {
    pub fn violated(&self) -> bool {
        self.premise == PremiseStatus::Holds && !self.failures.is_empty()
    }
}

/// Uniform random lists of the given sizes over `1..=universe`, drawn
/// element by element.
pub fn random_lists(sizes: &SizeFunction, universe: usize, rng: &mut ChaCha8Rng) -> Result<ListAssignment> {
    if sizes.max() > universe {
        return Err(Error::Argument(format!("list size {} exceeds universe {universe}", sizes.max())));
    }
    let lists = sizes
        .sizes()
        .iter()
        .map(|&s| {
            let mut list: Vec<usize> = index::sample(rng, universe, s).into_iter().map(|c| c + 1).collect();
            list.sort_unstable();
            list
        })
        .collect();
    ListAssignment::new(universe, lists)
}

/// If the canonical lists for `sizes` are colourable, every list assignment
/// of those sizes must be. Samples `trials` random assignments to check it.
pub fn check_theorem2(m: &Matroid, sizes: &SizeFunction, trials: usize, seed: u64) -> Result<Theorem2Report> {
    if trials == 0 {
        return Err(Error::Argument("at least one trial is required".into()));
    }
    let universe = sizes.max().max(MIN_RANDOM_UNIVERSE);
    let canonical = canonical_lists(sizes)?;
    let mut report = Theorem2Report {
        seed,
        trials,
        sizes: sizes.clone(),
        universe,
        premise: PremiseStatus::Holds,
        colored: 0,
        failures: Vec::new(),
        certificates: Vec::new(),
    };
    if let ColoringOutcome::Deficient(cert) = color_from_lists(m, &canonical)? {
        report.premise = PremiseStatus::PremiseFalse;
        report.certificates.push(cert);
        return Ok(report);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..trials {
        let lists = random_lists(sizes, universe, &mut rng)?;
        match color_from_lists(m, &lists)? {
            ColoringOutcome::Colored(_) => report.colored += 1,
            ColoringOutcome::Deficient(certificate) => {
                report.certificates.push(certificate.clone());
                report.failures.push(TrialFailure { trial, lists, certificate });
            }
        }
    }
    Ok(report)
}

/// One replacement `(Q_k, Q_l) → (Q_k ∪ Q_l, Q_k ∩ Q_l)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UncrossStep {
    pub pair: (usize, usize),
    pub incomparable_before: usize,
    pub incomparable_after: usize,
    /// `Σ r(A ∩ Q_i)` before and after the step.
    pub lhs_before: usize,
    pub lhs_after: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UncrossTrace {
    pub subset: ElementSet,
    pub initial: Vec<ElementSet>,
    pub canonical: Vec<ElementSet>,
    pub steps: Vec<UncrossStep>,
    pub final_family: Vec<ElementSet>,
    pub initial_lhs: usize,
    pub final_lhs: usize,
    /// `Σ r(A ∩ Q^ℓ_i)` for the canonical chain.
    pub rhs: usize,
    /// Sorted final family equals the sorted canonical chain, set by set.
    pub final_matches_canonical: bool,
}

impl UncrossTrace {
    pub fn pairs_strictly_decrease(&self) -> bool {
        self.steps.iter().all(|s| s.incomparable_after < s.incomparable_before)
            && self.steps.windows(2).all(|w| w[1].incomparable_before == w[0].incomparable_after)
    }

    pub fn lhs_non_increasing(&self) -> bool {
        self.steps.iter().all(|s| s.lhs_after <= s.lhs_before)
    }

    /// All trace invariants, plus `Σ r(A ∩ Q_i) ≥ Σ r(A ∩ Q^ℓ_i)`.
    pub fn holds(&self) -> bool {
        self.pairs_strictly_decrease()
            && self.lhs_non_increasing()
            && self.final_matches_canonical
            && self.final_lhs == self.rhs
            && self.initial_lhs >= self.rhs
    }
}

fn incomparable_pairs(family: &[ElementSet]) -> usize {
    let mut count = 0;
    for (k, a) in family.iter().enumerate() {
        count += family[k + 1..].iter().filter(|b| a.is_incomparable(**b)).count();
    }
    count
}

fn first_incomparable_pair(family: &[ElementSet]) -> Option<(usize, usize)> {
    (0..family.len()).find_map(|k| (k + 1..family.len()).find(|&l| family[k].is_incomparable(family[l])).map(|l| (k, l)))
}

/// Sorted by decreasing size, then by mask, for set-by-set comparison.
fn sorted_family(family: &[ElementSet]) -> Vec<ElementSet> {
    let mut sorted = family.to_vec();
    sorted.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    sorted
}

fn rank_sum(m: &Matroid, subset: ElementSet, family: &[ElementSet]) -> usize {
    family.iter().map(|&q| m.rank_of(subset.intersection(q))).sum()
}

/// Runs the uncrossing induction on `family` towards the chain `canonical`
/// and records both sides of the rank-sum inequality at `subset`.
pub fn uncross_verify(
    m: &Matroid,
    family: &[ElementSet],
    canonical: &[ElementSet],
    subset: ElementSet,
) -> Result<UncrossTrace> {
    let all = m.elements();
    if !subset.is_subset(all) || family.iter().chain(canonical).any(|q| !q.is_subset(all)) {
        return Err(Error::Argument("sets must lie inside the ground set".into()));
    }
    if family.len() != canonical.len() {
        return Err(Error::Argument(format!(
            "families have {} and {} members",
            family.len(),
            canonical.len()
        )));
    }
    if !crate::oracle::multiset_union_equal(family, canonical) {
        return Err(Error::Argument("the two families differ as multisets".into()));
    }
    let chain = sorted_family(canonical);
    if chain.windows(2).any(|w| !w[1].is_subset(w[0])) {
        return Err(Error::Argument("the canonical family is not a chain".into()));
    }

    let rhs = rank_sum(m, subset, canonical);
    let mut current = family.to_vec();
    let initial_lhs = rank_sum(m, subset, &current);
    let mut steps = Vec::new();
    let mut pairs = incomparable_pairs(&current);
    while let Some((k, l)) = first_incomparable_pair(&current) {
        let lhs_before = rank_sum(m, subset, &current);
        let (a, b) = (current[k], current[l]);
        current[k] = a.union(b);
        current[l] = a.intersection(b);
        let after = incomparable_pairs(&current);
        steps.push(UncrossStep {
            pair: (k, l),
            incomparable_before: pairs,
            incomparable_after: after,
            lhs_before,
            lhs_after: rank_sum(m, subset, &current),
        });
        if after >= pairs {
            // cannot happen for sets; stop rather than loop forever
            break;
        }
        pairs = after;
    }
    let final_lhs = rank_sum(m, subset, &current);
    Ok(UncrossTrace {
        subset,
        initial: family.to_vec(),
        canonical: canonical.to_vec(),
        final_matches_canonical: sorted_family(&current) == chain,
        steps,
        final_family: current,
        initial_lhs,
        final_lhs,
        rhs,
    })
}

/// Uncrossing run for a list assignment against the canonical lists of the
/// same sizes, both written as `d = universe` colour sets.
pub fn uncross_lists(m: &Matroid, lists: &ListAssignment, subset: ElementSet) -> Result<UncrossTrace> {
    let family = lists.color_sets();
    let sizes = lists.sizes();
    let canonical: Vec<ElementSet> = (1..=lists.universe())
        .map(|i| (0..lists.len()).filter(|&e| sizes.sizes()[e] >= i).collect())
        .collect();
    uncross_verify(m, &family, &canonical, subset)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(ids: &[usize]) -> ElementSet {
        ids.iter().copied().collect()
    }

    fn k4() -> Matroid {
        Matroid::graphic(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn lists(ls: &[&[usize]]) -> ListAssignment {
        ListAssignment::from_lists(ls.iter().map(|l| l.to_vec()).collect()).unwrap()
    }

    #[test]
    fn canonical_lists_examples() {
        let ones = canonical_lists(&SizeFunction::constant(1, 3).unwrap()).unwrap();
        assert_eq!(ones.lists(), &[vec![1], vec![1], vec![1]]);
        let mixed = canonical_lists(&SizeFunction::new(vec![1, 3]).unwrap()).unwrap();
        assert_eq!(mixed.lists(), &[vec![1], vec![1, 2, 3]]);
        assert_eq!(mixed.universe(), 3);
        let k = canonical_lists(&SizeFunction::constant(4, 2).unwrap()).unwrap();
        assert_eq!(k.lists(), &[vec![1, 2, 3, 4], vec![1, 2, 3, 4]]);
        assert!(SizeFunction::new(vec![1, 0]).is_err());
    }

    #[test]
    fn forced_singletons_on_a_parallel_pair() {
        let u12 = Matroid::uniform(1, 2).unwrap();
        let out = color_from_lists(&u12, &lists(&[&[1], &[2]])).unwrap();
        assert_eq!(out, ColoringOutcome::Colored(Coloring(vec![1, 2])));
        let out = color_from_lists(&u12, &lists(&[&[1], &[1]])).unwrap();
        let ColoringOutcome::Deficient(cert) = out else { panic!("one colour cannot split a parallel pair") };
        assert_eq!(cert.set, set(&[0, 1]));
        assert_eq!(u12.rank_of(cert.set.intersection(set(&[0, 1]))), 1);
    }

    #[test]
    fn k4_two_colors_from_constant_lists() {
        let m = k4();
        let l = ListAssignment::constant(2, 6).unwrap();
        let out = color_from_lists(&m, &l).unwrap();
        let c = out.coloring().expect("arboricity of K4 is 2");
        assert!(is_proper(&m, c, Some(&l)));
        assert!(!color_from_lists(&m, &ListAssignment::constant(1, 6).unwrap()).unwrap().is_colorable());
    }

    #[test]
    fn loops_always_yield_a_certificate_containing_them() {
        let m = Matroid::graphic(2, &[(0, 1), (1, 1), (0, 1)]).unwrap();
        let l = ListAssignment::constant(5, 3).unwrap();
        let ColoringOutcome::Deficient(cert) = color_from_lists(&m, &l).unwrap() else { panic!() };
        assert!(cert.set.contains(1));
    }

    #[test]
    fn list_count_must_match_ground_set() {
        let m = Matroid::free(3).unwrap();
        assert!(matches!(color_from_lists(&m, &lists(&[&[1]])), Err(Error::Argument(_))));
        assert!(ListAssignment::new(3, vec![vec![]]).is_err());
        assert!(ListAssignment::new(3, vec![vec![4]]).is_err());
        assert!(ListAssignment::new(3, vec![vec![0]]).is_err());
    }

    #[test]
    fn chromatic_number_examples() {
        assert_eq!(chromatic_number(&Matroid::free(4).unwrap()), Ok(1));
        assert_eq!(chromatic_number(&Matroid::uniform(2, 4).unwrap()), Ok(2));
        let k5_edges: Vec<_> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        let k5 = Matroid::graphic(5, &k5_edges).unwrap();
        assert_eq!(chromatic_number(&k5), Ok(3));
        assert_eq!(
            chromatic_number(&Matroid::uniform(0, 1).unwrap()),
            Err(Error::Loop { element: 0 })
        );
    }

    #[test]
    fn edmonds_formula_examples() {
        assert_eq!(edmonds_formula_bruteforce(&Matroid::uniform(2, 4).unwrap()), Ok(2));
        assert_eq!(edmonds_formula_bruteforce(&k4()), Ok(2));
        for n in 1..6 {
            assert_eq!(edmonds_formula_bruteforce(&Matroid::uniform(1, n).unwrap()), Ok(n));
        }
        assert!(matches!(
            edmonds_formula_bruteforce(&Matroid::uniform(0, 2).unwrap()),
            Err(Error::Loop { .. })
        ));
        assert!(matches!(
            edmonds_formula_bruteforce(&Matroid::free(21).unwrap()),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn theorem2_on_a_parallel_pair() {
        let u12 = Matroid::uniform(1, 2).unwrap();
        let r = check_theorem2(&u12, &SizeFunction::constant(1, 2).unwrap(), 10, 0).unwrap();
        assert_eq!(r.premise, PremiseStatus::PremiseFalse);
        assert_eq!(r.certificates.len(), 1);
        let r = check_theorem2(&u12, &SizeFunction::constant(2, 2).unwrap(), 50, 3).unwrap();
        assert_eq!(r.premise, PremiseStatus::Holds);
        assert_eq!(r.colored, 50);
        assert!(r.failures.is_empty());
        assert_eq!(r.universe, 8);
    }

    #[test]
    fn theorem2_on_k4_corollary_sizes() {
        let m = k4();
        let sizes = corollary_lists(&m, 2).unwrap();
        assert!(sizes.sizes().iter().all(|&s| s == 1 || s == 2));
        let r = check_theorem2(&m, &sizes, 200, 7).unwrap();
        assert_eq!(r.premise, PremiseStatus::Holds);
        assert!(r.failures.is_empty(), "theorem violation: {:?}", r.failures);
    }

    #[test]
    fn theorem2_reports_are_seed_deterministic() {
        let m = k4();
        let sizes = SizeFunction::new(vec![1, 2, 2, 1, 3, 2]).unwrap();
        let a = check_theorem2(&m, &sizes, 30, 11).unwrap();
        let b = check_theorem2(&m, &sizes, 30, 11).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn corollary_lists_examples() {
        assert_eq!(corollary_lists(&Matroid::free(3).unwrap(), 1).unwrap().sizes(), &[1, 1, 1]);
        let mut s = corollary_lists(&Matroid::uniform(1, 2).unwrap(), 2).unwrap().sizes().to_vec();
        s.sort();
        assert_eq!(s, vec![1, 2]);
        assert!(matches!(corollary_lists(&k4(), 1), Err(Error::Infeasible(_))));
    }

    #[test]
    fn is_proper_examples() {
        let triangle = Matroid::graphic(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(!is_proper(&triangle, &Coloring(vec![1, 1, 1]), None));
        assert!(is_proper(&triangle, &Coloring(vec![1, 1, 2]), None));
        let l = lists(&[&[1], &[1], &[2]]);
        assert!(is_proper(&triangle, &Coloring(vec![1, 1, 2]), Some(&l)));
        assert!(!is_proper(&triangle, &Coloring(vec![1, 2, 2]), Some(&l)));
    }

    #[test]
    fn uncross_chain_needs_no_steps() {
        let m = Matroid::uniform(2, 3).unwrap();
        let chain = vec![set(&[0, 1, 2]), set(&[0, 1]), set(&[1])];
        let t = uncross_verify(&m, &chain, &chain, m.elements()).unwrap();
        assert!(t.steps.is_empty());
        assert_eq!(t.initial_lhs, t.rhs);
        assert!(t.holds());
    }

    #[test]
    fn uncross_single_step_on_u12() {
        let m = Matroid::uniform(1, 2).unwrap();
        let t = uncross_verify(&m, &[set(&[0]), set(&[1])], &[set(&[0, 1]), ElementSet::EMPTY], m.elements()).unwrap();
        assert_eq!(t.steps.len(), 1);
        assert_eq!(t.initial_lhs, 2);
        assert_eq!(t.rhs, 1);
        assert_eq!(t.steps[0].incomparable_before, 1);
        assert_eq!(t.steps[0].incomparable_after, 0);
        assert!(t.holds());
    }

    #[test]
    fn uncross_rejects_bad_inputs() {
        let m = Matroid::free(3).unwrap();
        let err = uncross_verify(&m, &[set(&[0]), set(&[0])], &[set(&[0]), ElementSet::EMPTY], m.elements());
        assert!(matches!(err, Err(Error::Argument(_))));
        let not_chain = [set(&[0]), set(&[1])];
        let err = uncross_verify(&m, &not_chain, &not_chain, m.elements());
        assert!(matches!(err, Err(Error::Argument(_))));
    }

    #[test]
    fn enlarging_a_list_keeps_colorability() {
        let m = k4();
        let l = lists(&[&[1], &[1, 2], &[2], &[1, 2], &[2], &[1]]);
        let before = color_from_lists(&m, &l).unwrap().is_colorable();
        for e in 0..6 {
            for c in 1..=3 {
                let bigger = l.with_extra_color(e, c).unwrap();
                if before {
                    assert!(color_from_lists(&m, &bigger).unwrap().is_colorable());
                }
            }
        }
    }

    #[test]
    fn list_json_format() {
        let l: ListAssignment = serde_json::from_str(r#"{"universe": 3, "lists": [[2,1],[3]]}"#).unwrap();
        assert_eq!(l.lists(), &[vec![1, 2], vec![3]]);
        assert_eq!(serde_json::to_string(&l).unwrap(), r#"{"universe":3,"lists":[[1,2],[3]]}"#);
        let inferred: ListAssignment = serde_json::from_str(r#"{"lists": [[1],[4]]}"#).unwrap();
        assert_eq!(inferred.universe(), 4);
        assert!(serde_json::from_str::<ListAssignment>(r#"{"lists": [[]]}"#).is_err());
        assert_eq!(serde_json::to_string(&Coloring(vec![1, 2])).unwrap(), "[1,2]");
    }
}
