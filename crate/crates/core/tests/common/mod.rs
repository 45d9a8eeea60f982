//! Brute-force oracles that do not use the library's stabilizer chains or
//! element stores.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet, VecDeque};

use loopfold::Permutation;

pub type Images = Vec<u32>;

pub fn compose(a: &[u32], b: &[u32]) -> Images {
    a.iter().map(|&x| b[x as usize]).collect()
}

pub fn inverse(a: &[u32]) -> Images {
    let mut out = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x as usize] = i as u32;
    }
    out
}

pub fn order(a: &[u32]) -> u64 {
    let id: Images = (0..a.len() as u32).collect();
    let mut x = a.to_vec();
    let mut k = 1;
    while x != id {
        x = compose(&x, a);
        k += 1;
    }
    k
}

/// All elements by breadth-first closure under right multiplication.
pub fn elements(gens: &[Permutation]) -> Vec<Images> {
    let degree = gens[0].degree();
    let id: Images = (0..degree as u32).collect();
    let mut seen: HashSet<Images> = HashSet::new();
    seen.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    let mut out = Vec::new();
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = compose(&x, g.images());
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
        out.push(x);
    }
    out
}

/// Conjugacy classes as sets of image arrays, by orbit closure under
/// conjugation by the generators.
pub fn classes(gens: &[Permutation]) -> Vec<Vec<Images>> {
    let elems = elements(gens);
    let mut assigned: HashSet<Images> = HashSet::new();
    let mut out = Vec::new();
    for e in elems {
        if assigned.contains(&e) {
            continue;
        }
        let mut class = vec![e.clone()];
        assigned.insert(e.clone());
        let mut i = 0;
        while i < class.len() {
            let x = class[i].clone();
            for g in gens {
                let y = compose(&compose(&inverse(g.images()), &x), g.images());
                if assigned.insert(y.clone()) {
                    class.push(y);
                }
            }
            i += 1;
        }
        out.push(class);
    }
    out
}

/// Multiset of class sizes keyed by element order.
pub fn class_profile(gens: &[Permutation]) -> BTreeMap<(u64, usize), usize> {
    let mut out = BTreeMap::new();
    for c in classes(gens) {
        *out.entry((order(&c[0]), c.len())).or_insert(0) += 1;
    }
    out
}

pub fn centralizer_order(gens: &[Permutation], x: &[u32]) -> usize {
    elements(gens)
        .iter()
        .filter(|g| compose(g, x) == compose(x, g))
        .count()
}

/// Index of the class containing each element.
pub fn class_lookup(classes: &[Vec<Images>]) -> std::collections::HashMap<Images, usize> {
    classes
        .iter()
        .enumerate()
        .flat_map(|(i, c)| c.iter().map(move |x| (x.clone(), i)))
        .collect()
}

/// Pairs `(a, b) ∈ C_i × C_j` with `ab = z` for the first member `z` of `C_k`.
pub fn pair_count(
    classes: &[Vec<Images>],
    lookup: &std::collections::HashMap<Images, usize>,
    i: usize,
    j: usize,
    k: usize,
) -> u64 {
    let z = &classes[k][0];
    classes[i]
        .iter()
        .filter(|a| lookup[&compose(&inverse(a), z)] == j)
        .count() as u64
}

/// Some `t ∈ C_t` and `x ∈ C_x` with `t⁻¹xt = x⁻¹`, by scanning both classes.
pub fn inverts_by_search(classes: &[Vec<Images>], t: usize, x: usize) -> bool {
    classes[x].iter().any(|x| {
        let xi = inverse(x);
        classes[t]
            .iter()
            .any(|t| compose(&compose(&inverse(t), x), t) == xi)
    })
}

pub fn commute(a: &[u32], b: &[u32]) -> bool {
    compose(a, b) == compose(b, a)
}

/// Component label of each vertex of the commuting graph on `vertices`, by
/// all-pairs comparison; labels follow first appearance.
pub fn commuting_components(vertices: &[Images]) -> Vec<usize> {
    let n = vertices.len();
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = next;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for w in 0..n {
                if label[w] == usize::MAX && commute(&vertices[v], &vertices[w]) {
                    label[w] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    label
}

/// Number of vertices on a shortest commuting chain from `s` to `t`.
pub fn commuting_distance(vertices: &[Images], s: usize, t: usize) -> Option<usize> {
    let mut dist = vec![usize::MAX; vertices.len()];
    dist[s] = 1;
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        if v == t {
            return Some(dist[v]);
        }
        for w in 0..vertices.len() {
            if dist[w] == usize::MAX && w != v && commute(&vertices[v], &vertices[w]) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    None
}
