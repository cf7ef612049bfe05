//! Matroids as rank oracles over a dense ground set.
//!
//! Every representation (uniform, graphic, linear over GF(p), partition) and
//! every combinator (restriction, parallel extension) is exposed through the
//! same [`Matroid`] handle. Values are immutable and cheap to clone; the rank
//! memo for expensive oracles lives behind the handle and is lock-free for
//! ground sets of at most 16 elements.

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU8, Ordering};
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::{ElementSet, MAX_ELEMENTS};

/// Anything that can answer rank queries on a ground set `0..ground_size()`.
///
/// `rank_of` may assume its argument lies in the ground set. The brute-force
/// checkers accept any oracle so that deliberately broken ones can be fed to
/// them.
pub trait RankOracle: Send + Sync {
    fn ground_size(&self) -> usize;

    fn rank_of(&self, set: ElementSet) -> usize;
}

impl<T: RankOracle + ?Sized> RankOracle for &T {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }

    fn rank_of(&self, set: ElementSet) -> usize {
        (**self).rank_of(set)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Uniform,
    Graphic,
    Linear,
    Partition,
    Free,
    Restriction,
    ParallelExtension,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundSet {
    size: usize,
    labels: Option<Vec<String>>,
}

impl GroundSet {
    pub fn new(size: usize) -> Result<Self> {
        if size > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge { size, limit: MAX_ELEMENTS });
        }
        Ok(GroundSet { size, labels: None })
    }

    pub fn with_labels(labels: Vec<String>) -> Result<Self> {
        let mut ground = GroundSet::new(labels.len())?;
        let mut sorted: Vec<&String> = labels.iter().collect();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Construction("element labels must be distinct".into()));
        }
        ground.labels = Some(labels);
        Ok(ground)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn all(&self) -> ElementSet {
        ElementSet::full(self.size)
    }
}

/// Pulls elements of a derived matroid back to the matroid it came from.
///
/// `add_parallel` returns a surjective map (every base element has at least
/// one instance); `restrict` returns an injective one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementMap {
    images: Vec<usize>,
    base_size: usize,
}

impl ElementMap {
    pub fn identity(n: usize) -> Self {
        ElementMap { images: (0..n).collect(), base_size: n }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn base_size(&self) -> usize {
        self.base_size
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn image(&self, e: usize) -> usize {
        self.images[e]
    }

    /// Image of a set, with duplicates collapsed.
    pub fn image_of(&self, set: ElementSet) -> ElementSet {
        set.iter().map(|e| self.images[e]).collect()
    }

    /// Derived elements mapping to `base_element`, in increasing order.
    pub fn instances(&self, base_element: usize) -> Vec<usize> {
        (0..self.images.len()).filter(|&e| self.images[e] == base_element).collect()
    }

    pub fn is_surjective(&self) -> bool {
        let hit: ElementSet = self.images.iter().copied().collect();
        hit == ElementSet::full(self.base_size)
    }

    /// Composes `inner ∘ self`: `self` maps into the ground set that `inner`
    /// maps from.
    pub fn then(&self, inner: &ElementMap) -> ElementMap {
        assert_eq!(self.base_size, inner.images.len(), "maps do not compose");
        ElementMap {
            images: self.images.iter().map(|&e| inner.images[e]).collect(),
            base_size: inner.base_size,
        }
    }
}

#[derive(Debug)]
enum Repr {
    Uniform { rank: usize },
    Free,
    Graphic { vertices: usize, edges: Vec<(usize, usize)> },
    Linear { field: Field, matrix: Vec<Vec<u32>> },
    Partition { blocks: Vec<ElementSet>, capacities: Vec<usize> },
    Restriction { base: Matroid, keep: ElementSet },
    Mapped { base: Matroid, map: ElementMap, kind: Kind },
}

#[derive(Debug)]
enum Field {
    /// Columns packed as bit vectors (at most 64 rows).
    Binary { columns: Vec<u64> },
    Prime { p: u32, columns: Vec<Vec<u32>> },
}

const UNKNOWN: u8 = u8::MAX;
const DENSE_CACHE_LIMIT: usize = 16;

enum RankCache {
    None,
    Dense(Box<[AtomicU8]>),
    Sparse(Mutex<HashMap<u64, u8>>),
}

impl RankCache {
    fn for_size(n: usize) -> Self {
        if n <= DENSE_CACHE_LIMIT {
            RankCache::Dense((0..1usize << n).map(|_| AtomicU8::new(UNKNOWN)).collect())
        } else {
            RankCache::Sparse(Mutex::new(HashMap::new()))
        }
    }

    fn get_or_compute(&self, set: ElementSet, compute: impl FnOnce() -> usize) -> usize {
        match self {
            RankCache::None => compute(),
            RankCache::Dense(table) => {
                let slot = &table[set.bits() as usize];
                let cached = slot.load(Ordering::Relaxed);
                if cached != UNKNOWN {
                    return cached as usize;
                }
                let r = compute();
                slot.store(r as u8, Ordering::Relaxed);
                r
            }
            RankCache::Sparse(map) => {
                if let Some(&r) = map.lock().unwrap().get(&set.bits()) {
                    return r as usize;
                }
                let r = compute();
                map.lock().unwrap().insert(set.bits(), r as u8);
                r
            }
        }
    }
}

struct Inner {
    ground: GroundSet,
    repr: Repr,
    cache: RankCache,
}

/// A matroid on `0..n`, accessed only through its rank function.
#[derive(Clone)]
pub struct Matroid(Arc<Inner>);

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("kind", &self.kind())
            .field("size", &self.size())
            .field("repr", &self.0.repr)
            .finish()
    }
}

impl Matroid {
    fn build(ground: GroundSet, repr: Repr) -> Self {
        let cache = match repr {
            Repr::Graphic { .. } | Repr::Linear { .. } => RankCache::for_size(ground.size),
            _ => RankCache::None,
        };
        Matroid(Arc::new(Inner { ground, repr, cache }))
    }

    /// Uniform matroid `U_{k,n}`: `r(A) = min(|A|, k)`.
    pub fn uniform(k: usize, n: usize) -> Result<Self> {
        if k > n {
            return Err(Error::Construction(format!("uniform rank {k} exceeds ground set size {n}")));
        }
        Ok(Matroid::build(GroundSet::new(n)?, Repr::Uniform { rank: k }))
    }

    /// Every subset independent.
    pub fn free(n: usize) -> Result<Self> {
        Ok(Matroid::build(GroundSet::new(n)?, Repr::Free))
    }

    /// Cycle matroid of a multigraph; element `i` is `edges[i]`.
    /// Self-loops become matroid loops.
    pub fn graphic(vertices: usize, edges: &[(usize, usize)]) -> Result<Self> {
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= vertices || v >= vertices {
                return Err(Error::Construction(format!(
                    "edge {i} = ({u}, {v}) has an endpoint outside 0..{vertices}"
                )));
            }
        }
        let ground = GroundSet::new(edges.len())?;
        Ok(Matroid::build(ground, Repr::Graphic { vertices, edges: edges.to_vec() }))
    }

    /// Column matroid of `matrix` (given row by row) over GF(p); element `j`
    /// is column `j`.
    pub fn linear(p: u32, matrix: &[Vec<u32>]) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Construction(format!("{p} is not a prime")));
        }
        if p > 1 << 16 {
            return Err(Error::Construction(format!("prime {p} exceeds 2^16")));
        }
        let cols = matrix.first().map_or(0, Vec::len);
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Construction(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= p) {
                return Err(Error::Construction(format!("entry {x} in row {i} is not reduced mod {p}")));
            }
        }
        let ground = GroundSet::new(cols)?;
        let field = if p == 2 && matrix.len() <= 64 {
            let columns = (0..cols)
                .map(|j| {
                    matrix
                        .iter()
                        .enumerate()
                        .fold(0u64, |acc, (i, row)| acc | (row[j] as u64) << i)
                })
                .collect();
            Field::Binary { columns }
        } else {
            let columns = (0..cols).map(|j| matrix.iter().map(|row| row[j]).collect()).collect();
            Field::Prime { p, columns }
        };
        Ok(Matroid::build(ground, Repr::Linear { field, matrix: matrix.to_vec() }))
    }

    /// Partition matroid: `r(A) = Σ_b min(|A ∩ block_b|, capacity_b)`.
    pub fn partition(n: usize, blocks: &[ElementSet], capacities: &[usize]) -> Result<Self> {
        let ground = GroundSet::new(n)?;
        if blocks.len() != capacities.len() {
            return Err(Error::Construction(format!(
                "{} blocks but {} capacities",
                blocks.len(),
                capacities.len()
            )));
        }
        let mut covered = ElementSet::EMPTY;
        for (i, &block) in blocks.iter().enumerate() {
            if !block.is_subset(ground.all()) {
                return Err(Error::Construction(format!("block {i} leaves the ground set")));
            }
            if !covered.intersection(block).is_empty() {
                return Err(Error::Construction(format!("block {i} overlaps an earlier block")));
            }
            covered = covered.union(block);
        }
        if covered != ground.all() {
            return Err(Error::Construction("blocks do not cover the ground set".into()));
        }
        Ok(Matroid::build(
            ground,
            Repr::Partition { blocks: blocks.to_vec(), capacities: capacities.to_vec() },
        ))
    }

    /// Attaches element labels. Labels play no part in rank computations.
    pub fn with_labels(self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.size() {
            return Err(Error::Construction(format!(
                "{} labels for {} elements",
                labels.len(),
                self.size()
            )));
        }
        let ground = GroundSet::with_labels(labels)?;
        let inner = Arc::try_unwrap(self.0).unwrap_or_else(|shared| Inner {
            ground: shared.ground.clone(),
            repr: shared.repr.clone_shallow(),
            cache: RankCache::for_size(shared.ground.size),
        });
        Ok(Matroid(Arc::new(Inner { ground, ..inner })))
    }

    pub fn kind(&self) -> Kind {
        match &self.0.repr {
            Repr::Uniform { .. } => Kind::Uniform,
            Repr::Free => Kind::Free,
            Repr::Graphic { .. } => Kind::Graphic,
            Repr::Linear { .. } => Kind::Linear,
            Repr::Partition { .. } => Kind::Partition,
            Repr::Restriction { .. } => Kind::Restriction,
            Repr::Mapped { kind, .. } => *kind,
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.0.ground
    }

    pub fn size(&self) -> usize {
        self.0.ground.size
    }

    /// The whole ground set `E`.
    pub fn elements(&self) -> ElementSet {
        self.0.ground.all()
    }

    fn check(&self, set: ElementSet) -> Result<()> {
        match set.difference(self.elements()).first() {
            Some(e) => Err(Error::ElementOutOfRange { element: e, size: self.size() }),
            None => Ok(()),
        }
    }

    fn check_element(&self, e: usize) -> Result<()> {
        if e < self.size() {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange { element: e, size: self.size() })
        }
    }

    pub fn rank(&self, set: ElementSet) -> Result<usize> {
        self.check(set)?;
        Ok(self.rank_of(set))
    }

    /// `r(E)`.
    pub fn full_rank(&self) -> usize {
        self.rank_of(self.elements())
    }

    pub fn is_independent(&self, set: ElementSet) -> Result<bool> {
        Ok(self.rank(set)? == set.len())
    }

    pub fn is_basis(&self, set: ElementSet) -> Result<bool> {
        Ok(self.is_independent(set)? && set.len() == self.full_rank())
    }

    pub fn loops(&self) -> ElementSet {
        self.elements()
            .iter()
            .filter(|&e| self.rank_of(ElementSet::singleton(e)) == 0)
            .collect()
    }

    pub fn first_loop(&self) -> Option<usize> {
        self.elements().iter().find(|&e| self.rank_of(ElementSet::singleton(e)) == 0)
    }

    /// Restriction to `keep` on the same ground set: `r'(A) = r(A ∩ keep)`,
    /// so every element outside `keep` becomes a loop.
    pub fn restrict_extended(&self, keep: ElementSet) -> Result<Matroid> {
        self.check(keep)?;
        Ok(Matroid::build(self.0.ground.clone(), Repr::Restriction { base: self.clone(), keep }))
    }

    /// Restriction to `keep` as a matroid on `0..|keep|`; derived element `i`
    /// is the `i`-th smallest element of `keep`.
    pub fn restrict(&self, keep: ElementSet) -> Result<(Matroid, ElementMap)> {
        self.check(keep)?;
        let map = ElementMap { images: keep.to_vec(), base_size: self.size() };
        let ground = GroundSet::new(map.len())?;
        let restricted = Matroid::build(
            ground,
            Repr::Mapped { base: self.clone(), map: map.clone(), kind: Kind::Restriction },
        );
        Ok((restricted, map))
    }

    /// Replaces each element `e` by `copies[e]` mutually parallel instances.
    /// Instances of `e` are numbered consecutively, in order of `e`.
    pub fn add_parallel(&self, copies: &[usize]) -> Result<(Matroid, ElementMap)> {
        if copies.len() != self.size() {
            return Err(Error::Argument(format!(
                "{} copy counts for {} elements",
                copies.len(),
                self.size()
            )));
        }
        if let Some(e) = copies.iter().position(|&c| c == 0) {
            return Err(Error::Argument(format!("element {e} would have no instances")));
        }
        let images: Vec<usize> = copies
            .iter()
            .enumerate()
            .flat_map(|(e, &c)| std::iter::repeat_n(e, c))
            .collect();
        let map = ElementMap { images, base_size: self.size() };
        let ground = GroundSet::new(map.len())?;
        let extended = Matroid::build(
            ground,
            Repr::Mapped { base: self.clone(), map: map.clone(), kind: Kind::ParallelExtension },
        );
        Ok((extended, map))
    }

    /// The unique circuit of `independent ∪ {y}`.
    pub fn fundamental_circuit(&self, independent: ElementSet, y: usize) -> Result<ElementSet> {
        self.check(independent)?;
        self.check_element(y)?;
        if independent.contains(y) {
            return Err(Error::Contract(format!("element {y} already lies in the independent set")));
        }
        let r = self.rank_of(independent);
        if r != independent.len() {
            return Err(Error::Contract("the given set is dependent".into()));
        }
        let extended = independent.with(y);
        if self.rank_of(extended) == extended.len() {
            return Err(Error::Contract(format!("adding element {y} keeps the set independent")));
        }
        Ok(self.circuit_unchecked(independent, y))
    }

    /// Assumes `independent` is independent and `independent + y` is not.
    pub(crate) fn circuit_unchecked(&self, independent: ElementSet, y: usize) -> ElementSet {
        let extended = independent.with(y);
        let r = independent.len();
        independent
            .iter()
            .filter(|&x| self.rank_of(extended.without(x)) == r)
            .collect::<ElementSet>()
            .with(y)
    }

    pub(crate) fn graphic_data(&self) -> Option<(usize, &[(usize, usize)])> {
        match &self.0.repr {
            Repr::Graphic { vertices, edges } => Some((*vertices, edges)),
            _ => None,
        }
    }

    pub(crate) fn linear_data(&self) -> Option<(u32, &[Vec<u32>])> {
        match &self.0.repr {
            Repr::Linear { field, matrix } => {
                let p = match field {
                    Field::Binary { .. } => 2,
                    Field::Prime { p, .. } => *p,
                };
                Some((p, matrix))
            }
            _ => None,
        }
    }

    pub(crate) fn partition_data(&self) -> Option<(&[ElementSet], &[usize])> {
        match &self.0.repr {
            Repr::Partition { blocks, capacities } => Some((blocks, capacities)),
            _ => None,
        }
    }

    pub(crate) fn uniform_rank(&self) -> Option<usize> {
        match &self.0.repr {
            Repr::Uniform { rank } => Some(*rank),
            _ => None,
        }
    }

    fn compute_rank(&self, set: ElementSet) -> usize {
        match &self.0.repr {
            Repr::Uniform { rank } => set.len().min(*rank),
            Repr::Free => set.len(),
            Repr::Graphic { vertices, edges } => forest_size(*vertices, edges, set),
            Repr::Linear { field, .. } => match field {
                Field::Binary { columns } => binary_rank(set.iter().map(|j| columns[j])),
                Field::Prime { p, columns } => prime_rank(*p, set.iter().map(|j| columns[j].as_slice())),
            },
            Repr::Partition { blocks, capacities } => blocks
                .iter()
                .zip(capacities)
                .map(|(block, &cap)| set.intersection(*block).len().min(cap))
                .sum(),
            Repr::Restriction { base, keep } => base.rank_of(set.intersection(*keep)),
            Repr::Mapped { base, map, .. } => base.rank_of(map.image_of(set)),
        }
    }
}

impl Repr {
    // Used only when relabelling a shared handle; child matroids are shared.
    fn clone_shallow(&self) -> Repr {
        match self {
            Repr::Uniform { rank } => Repr::Uniform { rank: *rank },
            Repr::Free => Repr::Free,
            Repr::Graphic { vertices, edges } => Repr::Graphic { vertices: *vertices, edges: edges.clone() },
            Repr::Linear { field, matrix } => Repr::Linear {
                field: match field {
                    Field::Binary { columns } => Field::Binary { columns: columns.clone() },
                    Field::Prime { p, columns } => Field::Prime { p: *p, columns: columns.clone() },
                },
                matrix: matrix.clone(),
            },
            Repr::Partition { blocks, capacities } => {
                Repr::Partition { blocks: blocks.clone(), capacities: capacities.clone() }
            }
            Repr::Restriction { base, keep } => Repr::Restriction { base: base.clone(), keep: *keep },
            Repr::Mapped { base, map, kind } => Repr::Mapped { base: base.clone(), map: map.clone(), kind: *kind },
        }
    }
}

impl RankOracle for Matroid {
    fn ground_size(&self) -> usize {
        self.size()
    }

    fn rank_of(&self, set: ElementSet) -> usize {
        debug_assert!(set.is_subset(self.elements()), "rank query outside the ground set");
        self.0.cache.get_or_compute(set, || self.compute_rank(set))
    }
}

/// Number of edges in a spanning forest of the subgraph formed by `set`.
fn forest_size(vertices: usize, edges: &[(usize, usize)], set: ElementSet) -> usize {
    let mut parent: Vec<usize> = (0..vertices).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    let mut merged = 0;
    for e in set {
        let (u, v) = edges[e];
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru != rv {
            parent[ru] = rv;
            merged += 1;
        }
    }
    merged
}

fn binary_rank(columns: impl Iterator<Item = u64>) -> usize {
    // XOR basis indexed by leading bit
    let mut basis = [0u64; 64];
    let mut rank = 0;
    for mut v in columns {
        while v != 0 {
            let top = 63 - v.leading_zeros() as usize;
            if basis[top] == 0 {
                basis[top] = v;
                rank += 1;
                break;
            }
            v ^= basis[top];
        }
    }
    rank
}

fn prime_rank<'a>(p: u32, columns: impl Iterator<Item = &'a [u32]>) -> usize {
    let p64 = p as u64;
    // echelon vectors, each normalised to 1 at its pivot
    let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();
    for column in columns {
        let mut v: Vec<u64> = column.iter().map(|&x| x as u64).collect();
        for (pivot, b) in &basis {
            let factor = v[*pivot];
            if factor != 0 {
                for (x, &y) in v.iter_mut().zip(b) {
                    *x = (*x + (p64 - factor) * y) % p64;
                }
            }
        }
        if let Some(pivot) = v.iter().position(|&x| x != 0) {
            let inv = mod_inverse(v[pivot], p64);
            for x in v.iter_mut() {
                *x = *x * inv % p64;
            }
            basis.push((pivot, v));
        }
    }
    basis.len()
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
