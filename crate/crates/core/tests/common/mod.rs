#![allow(dead_code)]

use matroid_lists::{ElementSet, Matroid};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Entry {
    pub name: String,
    pub matroid: Matroid,
}

fn entry(name: impl Into<String>, matroid: Matroid) -> Entry {
    Entry { name: name.into(), matroid }
}

pub fn set(ids: &[usize]) -> ElementSet {
    ids.iter().copied().collect()
}

pub fn complete_graph(n: usize) -> Matroid {
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Matroid::graphic(n, &edges).unwrap()
}

pub fn random_gf2(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matroid {
    let matrix: Vec<Vec<u32>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(0..2)).collect()).collect();
    Matroid::linear(2, &matrix).unwrap()
}

/// Uniform, graphic, 10 random binary 4x8, 5 partition matroids, and a few
/// restriction / parallel-extension derivatives.
pub fn corpus() -> Vec<Entry> {
    let mut out = vec![
        entry("U(1,3)", Matroid::uniform(1, 3).unwrap()),
        entry("U(2,4)", Matroid::uniform(2, 4).unwrap()),
        entry("U(3,6)", Matroid::uniform(3, 6).unwrap()),
        entry("M(K4)", complete_graph(4)),
        entry("M(K5)", complete_graph(5)),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d61_7472);
    for i in 0..10 {
        out.push(entry(format!("GF2[{i}]"), random_gf2(&mut rng, 4, 8)));
    }
    type Spec = (usize, &'static [&'static [usize]], &'static [usize]);
    let partitions: [Spec; 5] = [
        (6, &[&[0, 1, 2], &[3, 4, 5]], &[1, 2]),
        (5, &[&[0, 1], &[2, 3], &[4]], &[1, 1, 1]),
        (7, &[&[0, 1, 2, 3], &[4, 5, 6]], &[2, 2]),
        (4, &[&[0, 1, 2, 3]], &[3]),
        (8, &[&[0, 1], &[2, 3, 4], &[5, 6, 7]], &[1, 2, 0]),
    ];
    for (i, (n, blocks, caps)) in partitions.iter().enumerate() {
        let blocks: Vec<ElementSet> = blocks.iter().map(|b| set(b)).collect();
        out.push(entry(format!("P[{i}]"), Matroid::partition(*n, &blocks, caps).unwrap()));
    }
    let u24 = Matroid::uniform(2, 4).unwrap();
    out.push(entry("U(2,4)+parallel", u24.add_parallel(&[2, 1, 1, 1]).unwrap().0));
    let k4 = complete_graph(4);
    out.push(entry("M(K4)+parallel", k4.add_parallel(&[1, 2, 1, 1, 1, 2]).unwrap().0));
    out.push(entry("M(K4)|ext{0,1,2,3}", k4.restrict_extended(set(&[0, 1, 2, 3])).unwrap()));
    out.push(entry("M(K5)|{0..6}", complete_graph(5).restrict(set(&[0, 1, 2, 3, 4, 5, 6])).unwrap().0));
    let gf = out[5].matroid.clone();
    out.push(entry("GF2[0]+parallel", gf.add_parallel(&[2, 1, 1, 1, 1, 1, 1, 1]).unwrap().0));
    out.push(entry("U(3,6)|ext{0..3}", Matroid::uniform(3, 6).unwrap().restrict_extended(set(&[0, 1, 2, 3])).unwrap()));
    out
}

pub fn loopless(entries: &[Entry]) -> impl Iterator<Item = &Entry> {
    entries.iter().filter(|e| e.matroid.loops().is_empty())
}

/// Random lists: a universe of 1..=4 colours, list sizes up to the universe.
pub fn random_list_assignment(rng: &mut ChaCha8Rng, n: usize) -> matroid_lists::ListAssignment {
    let universe = rng.gen_range(1..=4);
    let lists = (0..n)
        .map(|_| {
            let size = rng.gen_range(1..=universe);
            let mut list: Vec<usize> =
                rand::seq::index::sample(rng, universe, size).into_iter().map(|c| c + 1).collect();
            list.sort_unstable();
            list
        })
        .collect();
    matroid_lists::ListAssignment::new(universe, lists).unwrap()
}
