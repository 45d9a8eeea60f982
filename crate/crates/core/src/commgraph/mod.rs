//! Commuting graphs on elements of odd order, of odd prime order, or of one
//! class, with connected components and shortest paths.
//!
//! Vertices are elements, or in collapsed form the cyclic subgroups they
//! generate. Two distinct vertices are adjacent when their elements commute.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::permgroup::{ConjugacyClassTable, ElemId, ElementStore, GroupHandle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    AllOdd,
    OddPrime,
    /// All elements of one conjugacy class, by class index.
    SingleClass(usize),
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::AllOdd => f.write_str("all_odd"),
            Mode::OddPrime => f.write_str("odd_prime"),
            Mode::SingleClass(i) => write!(f, "single_class({i})"),
        }
    }
}

impl FromStr for Mode {
    type Err = Error;

    /// `all_odd` or `odd_prime`; single classes need a class index and are
    /// built directly.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all_odd" => Ok(Mode::AllOdd),
            "odd_prime" => Ok(Mode::OddPrime),
            _ => Err(Error::Parse(format!("unknown commuting graph mode {s:?}"))),
        }
    }
}

pub struct CommutingGraph {
    group: GroupHandle,
    mode: Mode,
    collapsed: bool,
    store: Arc<ElementStore>,
    /// Element id of each vertex; the least selected element of the
    /// subgroup when collapsed.
    vertices: Vec<ElemId>,
    /// Vertex of each element of the group, `u32::MAX` when not selected.
    vertex_of: Vec<u32>,
    /// Number of selected elements in each vertex.
    weight: Vec<u32>,
    adjacency: Vec<Vec<u32>>,
    component: Vec<u32>,
    component_count: usize,
}

const NONE: u32 = u32::MAX;

fn selected(mode: Mode, store: &ElementStore, classes: &ConjugacyClassTable, x: ElemId) -> bool {
    let o = store.order(x);
    match mode {
        Mode::AllOdd => o > 1 && o % 2 == 1,
        Mode::OddPrime => o > 2 && is_prime(o as u128),
        Mode::SingleClass(i) => classes.class_of_id(x) == i,
    }
}

/// Least element id among the generators of `⟨x⟩`.
fn cyclic_key(store: &ElementStore, x: ElemId) -> ElemId {
    let o = store.order(x);
    let mut best = x;
    let mut p = x;
    for k in 2..o {
        p = store.mul(p, x);
        if num_integer::gcd(k, o) == 1 && p < best {
            best = p;
        }
    }
    best
}

struct UnionFind(Vec<u32>);

impl UnionFind {
    fn find(&mut self, mut x: u32) -> u32 {
        while self.0[x as usize] != x {
            let parent = self.0[self.0[x as usize] as usize];
            self.0[x as usize] = parent;
            x = parent;
        }
        x
    }

    /// Keeps the smaller root, so roots are independent of edge order.
    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.0[hi as usize] = lo;
        }
    }
}

/// Builds the graph on the selected elements, collapsed to cyclic subgroups
/// if asked. Class centralizers are computed once and transported to each
/// class member.
pub fn build_graph(g: &GroupHandle, mode: Mode, collapsed: bool) -> Result<CommutingGraph> {
    let store = g.elements()?;
    let classes = g.conjugacy_classes()?;
    if let Mode::SingleClass(i) = mode {
        if i >= classes.len() {
            return Err(Error::Precondition(format!("class index {i} out of range")));
        }
    }
    let mut vertex_of = vec![NONE; store.len()];
    let mut key_vertex = vec![NONE; store.len()];
    let mut vertices = Vec::new();
    let mut weight = Vec::new();
    for x in store.iter() {
        if !selected(mode, &store, &classes, x) {
            continue;
        }
        let key = if collapsed { cyclic_key(&store, x) } else { x };
        if key_vertex[key as usize] == NONE {
            key_vertex[key as usize] = vertices.len() as u32;
            vertices.push(x);
            weight.push(0);
        }
        let v = key_vertex[key as usize];
        vertex_of[x as usize] = v;
        weight[v as usize] += 1;
    }

    let mut class_centralizer: Vec<Option<Vec<ElemId>>> = vec![None; classes.len()];
    let mut adjacency = Vec::with_capacity(vertices.len());
    for (v, &x) in vertices.iter().enumerate() {
        let c = classes.class_of_id(x);
        let cent = class_centralizer[c].get_or_insert_with(|| {
            let r = classes.class(c).rep_id;
            store.iter().filter(|&h| store.commute(h, r)).collect()
        });
        let t = classes.transporter(x);
        let mut nbrs: Vec<u32> = cent
            .iter()
            .map(|&h| vertex_of[store.conj(h, t) as usize])
            .filter(|&w| w != NONE && w != v as u32)
            .collect();
        nbrs.sort_unstable();
        nbrs.dedup();
        adjacency.push(nbrs);
    }

    let mut uf = UnionFind((0..vertices.len() as u32).collect());
    for (v, nbrs) in adjacency.iter().enumerate() {
        for &w in nbrs {
            uf.union(v as u32, w);
        }
    }
    let mut component = vec![NONE; vertices.len()];
    let mut root_component = vec![NONE; vertices.len()];
    let mut count = 0u32;
    for v in 0..vertices.len() as u32 {
        let r = uf.find(v) as usize;
        if root_component[r] == NONE {
            root_component[r] = count;
            count += 1;
        }
        component[v as usize] = root_component[r];
    }

    Ok(CommutingGraph {
        group: g.clone(),
        mode,
        collapsed,
        store,
        vertices,
        vertex_of,
        weight,
        adjacency,
        component,
        component_count: count as usize,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentSummary {
    pub vertices: usize,
    /// Selected elements in the component; equals `vertices` unless collapsed.
    pub elements: usize,
    pub sample: Vec<String>,
    pub element_orders: BTreeSet<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    pub group: String,
    pub mode: String,
    pub collapsed: bool,
    pub vertex_count: usize,
    pub element_count: usize,
    pub edge_count: usize,
    pub components: Vec<ComponentSummary>,
    /// The component holding more than half of the selected elements.
    pub big_component: Option<usize>,
}

impl ComponentReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Component sizes in elements, largest first.
    pub fn element_sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.components.iter().map(|c| c.elements).collect();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }
}

impl CommutingGraph {
    pub fn group(&self) -> &GroupHandle {
        &self.group
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn is_collapsed(&self) -> bool {
        self.collapsed
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Number of selected elements.
    pub fn element_count(&self) -> usize {
        self.weight.iter().map(|&w| w as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    pub fn vertex_element(&self, v: usize) -> Permutation {
        self.store.perm(self.vertices[v])
    }

    pub fn neighbours(&self, v: usize) -> &[u32] {
        &self.adjacency[v]
    }

    fn vertex(&self, x: &Permutation) -> Result<usize> {
        let id = self.store.index_of(x).ok_or(Error::NotMember)?;
        match self.vertex_of[id as usize] {
            NONE => Err(Error::Precondition(format!("{} is not a vertex", x.to_cycle_string()))),
            v => Ok(v as usize),
        }
    }

    /// Component index of a selected element.
    pub fn component_of(&self, x: &Permutation) -> Result<usize> {
        Ok(self.component[self.vertex(x)?] as usize)
    }

    pub fn same_component(&self, x: &Permutation, y: &Permutation) -> Result<bool> {
        Ok(self.component_of(x)? == self.component_of(y)?)
    }

    /// Component index of every selected element, by element id.
    pub fn element_partition(&self) -> Vec<(ElemId, u32)> {
        self.vertex_of
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != NONE)
            .map(|(x, &v)| (x as ElemId, self.component[v as usize]))
            .collect()
    }

    /// A shortest chain of pairwise commuting selected elements from `x` to
    /// `y`, or `None` across components.
    pub fn path_witness(&self, x: &Permutation, y: &Permutation) -> Result<Option<Vec<Permutation>>> {
        let (s, t) = (self.vertex(x)?, self.vertex(y)?);
        if x == y {
            return Ok(Some(vec![x.clone()]));
        }
        if s == t {
            return Ok(Some(vec![x.clone(), y.clone()]));
        }
        if self.component[s] != self.component[t] {
            return Ok(None);
        }
        let mut prev = vec![NONE; self.vertices.len()];
        prev[s] = s as u32;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            if v == t {
                break;
            }
            for &w in &self.adjacency[v] {
                if prev[w as usize] == NONE {
                    prev[w as usize] = v as u32;
                    queue.push_back(w as usize);
                }
            }
        }
        let mut chain = vec![t];
        while *chain.last().expect("nonempty") != s {
            let v = *chain.last().expect("nonempty");
            chain.push(prev[v] as usize);
        }
        chain.reverse();
        // Ends are replaced by x and y, which commute with everything their
        // cyclic subgroup's generator commutes with.
        let last = chain.len() - 1;
        Ok(Some(
            chain
                .iter()
                .enumerate()
                .map(|(i, &v)| match i {
                    0 => x.clone(),
                    i if i == last => y.clone(),
                    _ => self.vertex_element(v),
                })
                .collect(),
        ))
    }

    pub fn components(&self) -> ComponentReport {
        let mut summaries: Vec<ComponentSummary> = (0..self.component_count)
            .map(|_| ComponentSummary {
                vertices: 0,
                elements: 0,
                sample: Vec::new(),
                element_orders: BTreeSet::new(),
            })
            .collect();
        for (v, &c) in self.component.iter().enumerate() {
            let s = &mut summaries[c as usize];
            s.vertices += 1;
            s.elements += self.weight[v] as usize;
            if s.sample.len() < 3 {
                s.sample.push(self.vertex_element(v).to_cycle_string());
            }
        }
        for (x, c) in self.element_partition() {
            summaries[c as usize].element_orders.insert(self.store.order(x));
        }
        let total = self.element_count();
        let big_component = summaries.iter().position(|s| 2 * s.elements > total);
        ComponentReport {
            group: self.group.name().to_string(),
            mode: self.mode.to_string(),
            collapsed: self.collapsed,
            vertex_count: self.vertex_count(),
            element_count: total,
            edge_count: self.edge_count(),
            components: summaries,
            big_component,
        }
    }

    /// Graphviz rendering with 1-based cycle labels.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph commuting {\n");
        for v in 0..self.vertices.len() {
            let _ = writeln!(
                s,
                "  v{v} [label=\"{}\", component={}];",
                self.vertex_element(v).to_cycle_string(),
                self.component[v]
            );
        }
        for (v, nbrs) in self.adjacency.iter().enumerate() {
            for &w in nbrs.iter().filter(|&&w| w as usize > v) {
                let _ = writeln!(s, "  v{v} -- v{w};");
            }
        }
        s.push_str("}\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::catalog::{alternating, symmetric};

    #[test]
    fn a5_odd_prime() {
        let g = alternating(5).unwrap();
        let graph = build_graph(&g, Mode::OddPrime, false).unwrap();
        assert_eq!(graph.vertex_count(), 44);
        let r = graph.components();
        assert_eq!(r.components.len(), 16);
        assert_eq!(r.big_component, None);
        let collapsed = build_graph(&g, Mode::OddPrime, true).unwrap();
        assert_eq!(collapsed.vertex_count(), 16);
        assert_eq!(collapsed.edge_count(), 0);
        assert_eq!(collapsed.element_partition(), graph.element_partition());
    }

    #[test]
    fn paths() {
        let g = symmetric(5).unwrap();
        let graph = build_graph(&g, Mode::OddPrime, false).unwrap();
        let x = Permutation::parse_cycles("(1,2,3)", 5).unwrap();
        let y = x.inverse();
        assert_eq!(graph.path_witness(&x, &y).unwrap().unwrap().len(), 2);
        assert_eq!(graph.path_witness(&x, &x).unwrap().unwrap(), vec![x.clone()]);
        let z = Permutation::parse_cycles("(1,2,4)", 5).unwrap();
        assert!(graph.path_witness(&x, &z).unwrap().is_none());
        let t = Permutation::parse_cycles("(1,2)", 5).unwrap();
        assert!(graph.component_of(&t).is_err());
    }

    #[test]
    fn modes_parse() {
        assert_eq!("all_odd".parse::<Mode>().unwrap(), Mode::AllOdd);
        assert!("bogus".parse::<Mode>().is_err());
    }

    #[test]
    fn dot_output() {
        let g = alternating(4).unwrap();
        let dot = build_graph(&g, Mode::OddPrime, true).unwrap().to_dot();
        assert!(dot.starts_with("graph commuting {"));
        assert_eq!(dot.matches("label=").count(), 4);
    }
}
