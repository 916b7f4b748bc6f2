//! Signed digraphs, signed cycles and the class of vertex-disjoint bicyclic
//! signed digraphs.
//!
//! A [`BicyclicConfig`] names an isomorphism class: two disjoint signed
//! directed cycles plus `n - p - q` isolated vertices. [`build_adjacency`]
//! realises it as a concrete [`SignedDigraph`] for the spectral oracle.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weight of a signed arc. `Positive < Negative` so canonical forms list a
/// positive cycle before a negative cycle of the same order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn negate(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn product(self, other: Sign) -> Sign {
        if self == other {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self.negate()
    }
}

/// A signed directed cycle of order `k >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CycleSpec {
    order: usize,
    sign: Sign,
}

impl CycleSpec {
    pub fn new(order: usize, sign: Sign) -> Result<Self> {
        if order < 2 {
            return Err(Error::CycleOrder(order));
        }
        Ok(Self { order, sign })
    }

    pub fn positive(order: usize) -> Result<Self> {
        Self::new(order, Sign::Positive)
    }

    pub fn negative(order: usize) -> Result<Self> {
        Self::new(order, Sign::Negative)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn is_odd(&self) -> bool {
        self.order % 2 == 1
    }

    /// Same cycle with the sign forced to `+1` when the order is odd. Odd
    /// cycles of either sign share a spectrum up to rotation, hence energy.
    pub fn odd_sign_canonical(self) -> Self {
        if self.is_odd() {
            Self {
                order: self.order,
                sign: Sign::Positive,
            }
        } else {
            self
        }
    }
}

impl fmt::Display for CycleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.order, self.sign.symbol())
    }
}

/// An element of the bicyclic class on `n` vertices, up to isomorphism.
///
/// Construction canonicalises the pair so that `first <= second` under the
/// lexicographic order on `(order, sign)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BicyclicConfig {
    n: usize,
    first: CycleSpec,
    second: CycleSpec,
}

impl BicyclicConfig {
    pub fn new(n: usize, a: CycleSpec, b: CycleSpec) -> Result<Self> {
        if a.order + b.order > n {
            return Err(Error::OrdersExceedVertexCount {
                n,
                p: a.order,
                q: b.order,
            });
        }
        let (first, second) = if a <= b { (a, b) } else { (b, a) };
        Ok(Self { n, first, second })
    }

    /// Shorthand used heavily by tests and the chain catalog.
    pub fn from_parts(n: usize, p: usize, sp: Sign, q: usize, sq: Sign) -> Result<Self> {
        Self::new(n, CycleSpec::new(p, sp)?, CycleSpec::new(q, sq)?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn first(&self) -> CycleSpec {
        self.first
    }

    pub fn second(&self) -> CycleSpec {
        self.second
    }

    pub fn cycles(&self) -> [CycleSpec; 2] {
        [self.first, self.second]
    }

    pub fn isolated_vertices(&self) -> usize {
        self.n - self.first.order - self.second.order
    }

    /// Canonical form with odd-cycle signs forced to `+1`.
    pub fn odd_sign_canonical(&self) -> Self {
        Self::new(
            self.n,
            self.first.odd_sign_canonical(),
            self.second.odd_sign_canonical(),
        )
        .expect("orders unchanged")
    }

    /// Compact label such as `(2,+)(6,-)`.
    pub fn label(&self) -> String {
        format!("{}{}", self.first, self.second)
    }
}

impl PartialOrd for BicyclicConfig {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BicyclicConfig {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.first.order, self.second.order, self.first.sign, self.second.sign).cmp(&(
            other.n,
            other.first.order,
            other.second.order,
            other.first.sign,
            other.second.sign,
        ))
    }
}

impl fmt::Display for BicyclicConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// A signed digraph with at most one arc per ordered vertex pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedDigraph {
    vertex_count: usize,
    arcs: BTreeMap<(usize, usize), Sign>,
}

impl SignedDigraph {
    pub fn new(vertex_count: usize) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::EmptyDigraph);
        }
        Ok(Self {
            vertex_count,
            arcs: BTreeMap::new(),
        })
    }

    pub fn from_arcs<I>(vertex_count: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Sign)>,
    {
        let mut g = Self::new(vertex_count)?;
        for (from, to, sign) in arcs {
            g.add_arc(from, to, sign)?;
        }
        Ok(g)
    }

    pub fn add_arc(&mut self, from: usize, to: usize, sign: Sign) -> Result<()> {
        for vertex in [from, to] {
            if vertex >= self.vertex_count {
                return Err(Error::VertexOutOfRange {
                    vertex,
                    vertex_count: self.vertex_count,
                });
            }
        }
        if self.arcs.insert((from, to), sign).is_some() {
            return Err(Error::DuplicateArc { from, to });
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Arcs in ascending `(from, to)` order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize, Sign)> + '_ {
        self.arcs.iter().map(|(&(u, w), &s)| (u, w, s))
    }

    pub fn arc_sign(&self, from: usize, to: usize) -> Option<Sign> {
        self.arcs.get(&(from, to)).copied()
    }

    pub fn successors(&self, vertex: usize) -> impl Iterator<Item = (usize, Sign)> + '_ {
        self.arcs
            .range((vertex, 0)..(vertex + 1, 0))
            .map(|(&(_, w), &s)| (w, s))
    }

    /// Dense adjacency matrix with entries in `{-1, 0, 1}`.
    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        let mut a = vec![vec![0; self.vertex_count]; self.vertex_count];
        for (u, w, s) in self.arcs() {
            a[u][w] = s.value();
        }
        a
    }

    /// Induced subdigraph on `vertices`, relabelled `0..vertices.len()` in
    /// the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self> {
        let index: BTreeMap<usize, usize> =
            vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut g = Self::new(vertices.len())?;
        for (u, w, s) in self.arcs() {
            if let (Some(&iu), Some(&iw)) = (index.get(&u), index.get(&w)) {
                g.add_arc(iu, iw, s)?;
            }
        }
        Ok(g)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        assert_eq!(perm.len(), self.vertex_count, "permutation length");
        Self::from_arcs(
            self.vertex_count,
            self.arcs().map(|(u, w, s)| (perm[u], perm[w], s)),
        )
    }

    /// If the digraph is exactly one directed cycle through all of its
    /// vertices (order >= 2), returns that cycle's signed spec.
    pub fn as_single_cycle(&self) -> Option<CycleSpec> {
        let n = self.vertex_count;
        if n < 2 || self.arcs.len() != n {
            return None;
        }
        let mut next = vec![usize::MAX; n];
        let mut sign = Sign::Positive;
        for (u, w, s) in self.arcs() {
            if u == w || next[u] != usize::MAX {
                return None;
            }
            next[u] = w;
            sign = sign.product(s);
        }
        let mut seen = vec![false; n];
        let mut v = 0;
        for _ in 0..n {
            if seen[v] {
                return None;
            }
            seen[v] = true;
            v = next[v];
        }
        (v == 0).then_some(CycleSpec { order: n, sign })
    }
}

/// Strongly connected components. Each component lists its vertices in
/// ascending order; components are ordered by their smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentList {
    components: Vec<Vec<usize>>,
}

impl ComponentList {
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.components.iter().map(Vec::len).collect()
    }
}

/// Realises `config` on vertices `0..n`: the first cycle on `0..p`, the second
/// on `p..p+q`, the rest isolated. Each cycle's sign sits on its closing arc
/// `w_k -> w_1`.
pub fn build_adjacency(config: &BicyclicConfig) -> SignedDigraph {
    let [a, b] = config.cycles();
    build_adjacency_placed(config, [a.order() - 1, b.order() - 1])
        .expect("canonical config is always realisable")
}

/// Like [`build_adjacency`] but the signed arc of cycle `i` is its
/// `placement[i]`-th arc (`j -> j+1`, wrapping). Only the sign product is
/// spectrally relevant, so every placement is isospectral.
pub fn build_adjacency_placed(config: &BicyclicConfig, placement: [usize; 2]) -> Result<SignedDigraph> {
    let mut g = SignedDigraph::new(config.n())?;
    let mut offset = 0;
    for (cycle, at) in config.cycles().into_iter().zip(placement) {
        let k = cycle.order();
        for j in 0..k {
            let sign = if j == at % k { cycle.sign() } else { Sign::Positive };
            g.add_arc(offset + j, offset + (j + 1) % k, sign)?;
        }
        offset += k;
    }
    Ok(g)
}

/// Tarjan's algorithm, iterative so deep paths cannot overflow the stack.
pub fn strong_components(g: &SignedDigraph) -> ComponentList {
    const UNVISITED: usize = usize::MAX;
    let n = g.vertex_count();
    let succ: Vec<Vec<usize>> = (0..n).map(|v| g.successors(v).map(|(w, _)| w).collect()).collect();

    let mut index = vec![UNVISITED; n];
    let mut lowlink = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut next_index = 0;
    let mut components = Vec::new();
    // (vertex, position of the next successor to examine)
    let mut call: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNVISITED {
            continue;
        }
        call.push((root, 0));
        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            if *pos == 0 {
                index[v] = next_index;
                lowlink[v] = next_index;
                next_index += 1;
                stack.push(v);
                on_stack[v] = true;
            }
            if let Some(&w) = succ[v].get(*pos) {
                *pos += 1;
                if index[w] == UNVISITED {
                    call.push((w, 0));
                } else if on_stack[w] {
                    lowlink[v] = lowlink[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                lowlink[parent] = lowlink[parent].min(lowlink[v]);
            }
            if lowlink[v] == index[v] {
                let mut component = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    component.push(w);
                    if w == v {
                        break;
                    }
                }
                component.sort_unstable();
                components.push(component);
            }
        }
    }
    components.sort_by_key(|c| c[0]);
    ComponentList { components }
}

/// Every canonical configuration on `n` vertices with `2 <= p <= q` and
/// `p + q <= n`, ordered by `p`, then `q`, then the sign pair.
pub fn enumerate_class(n: usize) -> Result<Vec<BicyclicConfig>> {
    if n < 4 {
        return Err(Error::ClassTooSmall(n));
    }
    let signs = [Sign::Positive, Sign::Negative];
    let mut out = Vec::new();
    for p in 2..=n / 2 {
        for q in p..=n - p {
            for sp in signs {
                for sq in signs {
                    if p == q && sp > sq {
                        continue;
                    }
                    out.push(BicyclicConfig::from_parts(n, p, sp, q, sq)?);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::{Negative as N, Positive as P};

    fn cfg(n: usize, p: usize, sp: Sign, q: usize, sq: Sign) -> BicyclicConfig {
        BicyclicConfig::from_parts(n, p, sp, q, sq).unwrap()
    }

    #[test]
    fn sign_negation_is_an_involution() {
        for s in [P, N] {
            assert_eq!(-(-s), s);
            assert_ne!(-s, s);
        }
        assert_eq!(N.product(N), P);
    }

    #[test]
    fn cycle_order_must_be_at_least_two() {
        assert_eq!(CycleSpec::positive(1), Err(Error::CycleOrder(1)));
        assert!(CycleSpec::negative(2).is_ok());
    }

    #[test]
    fn config_is_canonicalised() {
        let a = cfg(8, 6, P, 2, N);
        let b = cfg(8, 2, N, 6, P);
        assert_eq!(a, b);
        assert_eq!(a.first(), CycleSpec::negative(2).unwrap());
        // same order: + before -
        let c = cfg(6, 3, N, 3, P);
        assert_eq!(c.first().sign(), P);
    }

    #[test]
    fn two_positive_two_cycles() {
        let g = build_adjacency(&cfg(4, 2, P, 2, P));
        let arcs: Vec<_> = g.arcs().collect();
        assert_eq!(arcs, vec![(0, 1, P), (1, 0, P), (2, 3, P), (3, 2, P)]);
    }

    #[test]
    fn negative_two_cycle_with_isolated_vertex() {
        let g = build_adjacency(&cfg(5, 2, N, 2, P));
        assert_eq!(g.vertex_count(), 5);
        let negatives: Vec<_> = g.arcs().filter(|a| a.2 == N).collect();
        assert_eq!(negatives.len(), 1);
        assert!(negatives[0].0 / 2 == negatives[0].1 / 2 && negatives[0].0 < 4);
        assert_eq!(g.successors(4).count(), 0);
        assert!(g.arcs().all(|(u, w, _)| u != 4 && w != 4));
    }

    #[test]
    fn orders_exceeding_n_are_rejected() {
        assert_eq!(
            BicyclicConfig::from_parts(4, 3, P, 2, P),
            Err(Error::OrdersExceedVertexCount { n: 4, p: 3, q: 2 })
        );
    }

    #[test]
    fn duplicate_and_out_of_range_arcs() {
        let mut g = SignedDigraph::new(2).unwrap();
        g.add_arc(0, 1, P).unwrap();
        assert_eq!(g.add_arc(0, 1, N), Err(Error::DuplicateArc { from: 0, to: 1 }));
        assert!(matches!(g.add_arc(0, 2, P), Err(Error::VertexOutOfRange { .. })));
        assert_eq!(SignedDigraph::new(0), Err(Error::EmptyDigraph));
    }

    #[test]
    fn components_of_two_disjoint_two_cycles() {
        let g = build_adjacency(&cfg(4, 2, P, 2, P));
        let c = strong_components(&g);
        assert_eq!(c.components(), &[vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn path_has_singleton_components() {
        let g = SignedDigraph::from_arcs(3, [(0, 1, P), (1, 2, N)]).unwrap();
        let c = strong_components(&g);
        assert_eq!(c.components(), &[vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn isolated_vertex_is_its_own_component() {
        let g = build_adjacency(&cfg(6, 2, P, 3, N));
        let mut sizes = strong_components(&g).sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
    }

    #[test]
    fn components_merge_through_shared_vertex() {
        // two cycles sharing vertex 0: one component
        let g = SignedDigraph::from_arcs(
            4,
            [(0, 1, P), (1, 0, P), (0, 2, P), (2, 3, N), (3, 0, P)],
        )
        .unwrap();
        assert_eq!(strong_components(&g).components(), &[vec![0, 1, 2, 3]]);
    }

    #[test]
    fn deep_path_does_not_overflow() {
        let n = 200_000;
        let g = SignedDigraph::from_arcs(n, (0..n - 1).map(|i| (i, i + 1, P))).unwrap();
        assert_eq!(strong_components(&g).len(), n);
    }

    #[test]
    fn single_cycle_detection() {
        let g = build_adjacency_placed(&cfg(5, 2, P, 3, N), [0, 1]).unwrap();
        assert_eq!(g.induced(&[2, 3, 4]).unwrap().as_single_cycle(), CycleSpec::negative(3).ok());
        assert_eq!(g.as_single_cycle(), None);
        let path = SignedDigraph::from_arcs(2, [(0, 1, P)]).unwrap();
        assert_eq!(path.as_single_cycle(), None);
    }

    #[test]
    fn class_sizes_for_small_n() {
        let four = enumerate_class(4).unwrap();
        assert_eq!(
            four,
            vec![cfg(4, 2, P, 2, P), cfg(4, 2, P, 2, N), cfg(4, 2, N, 2, N)]
        );
        assert_eq!(enumerate_class(5).unwrap().len(), 7);
        let six = enumerate_class(6).unwrap();
        assert!(six.contains(&cfg(6, 3, P, 3, P)));
        for (sp, sq) in [(P, P), (P, N), (N, P), (N, N)] {
            assert!(six.contains(&cfg(6, 2, sp, 4, sq)));
        }
        assert_eq!(enumerate_class(3), Err(Error::ClassTooSmall(3)));
    }

    /// Independent count: all ordered sign/order tuples, deduplicated as
    /// unordered pairs.
    fn brute_force_count(n: usize) -> usize {
        let mut seen = std::collections::BTreeSet::new();
        for p in 2..=n {
            for q in 2..=n {
                if p + q > n {
                    continue;
                }
                for sp in [1i8, -1] {
                    for sq in [1i8, -1] {
                        let a = (p, -sp);
                        let b = (q, -sq);
                        seen.insert(if a <= b { (a, b) } else { (b, a) });
                    }
                }
            }
        }
        seen.len()
    }

    #[test]
    fn class_matches_brute_force_count() {
        for n in 4..=30 {
            let class = enumerate_class(n).unwrap();
            assert_eq!(class.len(), brute_force_count(n), "n = {n}");
            let mut sorted = class.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted, class, "sorted and duplicate free at n = {n}");
        }
    }
}
