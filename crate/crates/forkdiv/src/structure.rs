//! Structural predicates: homogeneous sets and their expansion closure,
//! bisimplicial and trisimplicial vertex tests, anticonnected components,
//! and the audit of the two-consecutive-neighbors property of odd holes in
//! fork-free graphs.

use crate::graph::{Graph, VertexSet};
use crate::patterns::all_odd_holes;
use crate::solve;

/// A verified homogeneous set: every outside vertex lands on one of the two
/// sides.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomogeneousWitness {
    pub x: VertexSet,
    pub complete_side: VertexSet,
    pub anti_side: VertexSet,
}

impl HomogeneousWitness {
    /// Re-verifies the witness edge by edge.
    pub fn verify(&self, g: &Graph) -> bool {
        let n = g.n();
        if !(1 < self.x.len() && self.x.len() < n) {
            return false;
        }
        if self.complete_side | self.anti_side | self.x != g.vertex_set() {
            return false;
        }
        if self.complete_side.intersects(self.anti_side)
            || self.complete_side.intersects(self.x)
            || self.anti_side.intersects(self.x)
        {
            return false;
        }
        self.complete_side
            .iter()
            .all(|v| self.x.is_subset_of(g.neighbors(v)))
            && self
                .anti_side
                .iter()
                .all(|v| !g.neighbors(v).intersects(self.x))
    }
}

/// True iff 1 < |x| < n and every outside vertex is complete or anticomplete
/// to `x`.
pub fn is_homogeneous_set(g: &Graph, x: VertexSet) -> bool {
    let n = g.n();
    if !(1 < x.len() && x.len() < n) {
        return false;
    }
    (g.vertex_set() - x).iter().all(|v| {
        let inter = g.neighbors(v) & x;
        inter == x || inter.is_empty()
    })
}

/// Grows `x0` by repeatedly adding the lowest-index vertex that has both a
/// neighbor and a non-neighbor in the current set, until none remains. The
/// result is independent of addition order (the growth rule is monotone), and
/// by maximality every outside vertex is complete or anticomplete to it.
pub fn expand_homogeneous(g: &Graph, x0: VertexSet) -> VertexSet {
    assert!(x0.len() >= 2, "expansion needs a seed of at least two vertices");
    let mut x = x0;
    loop {
        let eligible = (g.vertex_set() - x).iter().find(|&v| {
            let inter = g.neighbors(v) & x;
            !inter.is_empty() && inter != x
        });
        match eligible {
            Some(v) => x.insert(v),
            None => return x,
        }
    }
}

/// Searches for a homogeneous set by expanding every seed pair. Sound and
/// complete for existence: any homogeneous set contains a pair, and the
/// expansion from a pair inside it can never escape it.
pub fn find_homogeneous_set(g: &Graph) -> Option<HomogeneousWitness> {
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            let x = expand_homogeneous(g, VertexSet::singleton(u).with(v));
            if x.len() < n {
                let mut complete_side = VertexSet::EMPTY;
                let mut anti_side = VertexSet::EMPTY;
                for w in (g.vertex_set() - x).iter() {
                    if x.is_subset_of(g.neighbors(w)) {
                        complete_side.insert(w);
                    } else {
                        anti_side.insert(w);
                    }
                }
                let witness = HomogeneousWitness {
                    x,
                    complete_side,
                    anti_side,
                };
                debug_assert!(witness.verify(g));
                return Some(witness);
            }
        }
    }
    None
}

/// True iff N(v) is the union of two cliques, tested as bipartiteness of the
/// complement of the neighborhood subgraph.
pub fn is_bisimplicial(g: &Graph, v: usize) -> bool {
    solve::is_bipartite(&g.induced(g.neighbors(v)).complement())
}

/// True iff N(v) is the union of three cliques, tested as 3-colorability of
/// the complement of the neighborhood subgraph via the exact solver.
pub fn is_trisimplicial(g: &Graph, v: usize) -> bool {
    solve::chromatic_number(&g.induced(g.neighbors(v)).complement()) <= 3
}

/// A counterexample to the consecutive-pair property: an odd hole C, an edge
/// uv with v anticomplete to C, u with neighbors on C forming neither a
/// consecutive pair nor all of C.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Lemma24Violation {
    pub hole: Vec<usize>,
    pub u: usize,
    pub v: usize,
    pub neighborhood: VertexSet,
}

/// Audits every induced odd hole of `g` against the property that a vertex u
/// with a pendant-like neighbor v off the hole sees either exactly two
/// consecutive hole vertices or the whole hole. Fork-free graphs admit no
/// violation; the empty return on every fork-free input is the point.
pub fn audit_lemma_2_4(g: &Graph) -> Vec<Lemma24Violation> {
    let mut violations = Vec::new();
    for hole in all_odd_holes(g) {
        let hole_set: VertexSet = hole.iter().copied().collect();
        let outside = g.vertex_set() - hole_set;
        for u in outside.iter() {
            let on_hole = g.neighbors(u) & hole_set;
            if on_hole.is_empty() {
                continue;
            }
            let ok = on_hole == hole_set || {
                on_hole.len() == 2 && {
                    let pair: Vec<usize> = on_hole.iter().collect();
                    g.has_edge(pair[0], pair[1])
                }
            };
            if ok {
                continue;
            }
            for v in (g.neighbors(u) & outside).iter() {
                if (g.neighbors(v) & hole_set).is_empty() {
                    violations.push(Lemma24Violation {
                        hole: hole.clone(),
                        u,
                        v,
                        neighborhood: on_hole,
                    });
                }
            }
        }
    }
    violations
}

/// Connected components of the complement restricted to `x`, i.e. the
/// anticonnected pieces of `x` in `g`. Ordered by smallest member.
pub fn anticonnected_components(g: &Graph, x: VertexSet) -> Vec<VertexSet> {
    g.complement().components_within(x)
}
