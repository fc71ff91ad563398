//! Induced-subgraph detection: the named forbidden configurations, a pruned
//! backtracking matcher with a naive all-injections oracle, odd hole and odd
//! antihole search, perfection via the strong perfect graph theorem, and odd
//! balloon search with minimality.

use std::fmt;

use crate::graph::{Graph, VertexSet};

/// A named forbidden configuration. Fixed names map to exactly one canonical
/// graph; `Hole`, `Antihole` and `Balloon` are parameterized families.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum PatternId {
    Claw,
    Fork,
    Paw,
    Dart,
    Banner,
    CoDart,
    Bull,
    Diamond,
    CoCricket,
    Hammer,
    Gem,
    Butterfly,
    Antifork,
    P4,
    P6,
    C4,
    K4,
    /// Chordless cycle of length k >= 4.
    Hole(usize),
    /// Complement of a hole of length k >= 4.
    Antihole(usize),
    /// A k-hole plus a center adjacent to two consecutive hole vertices and a
    /// pendant leaf on the center; k >= 4.
    Balloon(usize),
}

impl PatternId {
    /// Every fixed (non-parameterized) pattern.
    pub const FIXED: [PatternId; 17] = [
        PatternId::Claw,
        PatternId::Fork,
        PatternId::Paw,
        PatternId::Dart,
        PatternId::Banner,
        PatternId::CoDart,
        PatternId::Bull,
        PatternId::Diamond,
        PatternId::CoCricket,
        PatternId::Hammer,
        PatternId::Gem,
        PatternId::Butterfly,
        PatternId::Antifork,
        PatternId::P4,
        PatternId::P6,
        PatternId::C4,
        PatternId::K4,
    ];

    pub fn name(&self) -> String {
        match self {
            PatternId::Claw => "claw".into(),
            PatternId::Fork => "fork".into(),
            PatternId::Paw => "paw".into(),
            PatternId::Dart => "dart".into(),
            PatternId::Banner => "banner".into(),
            PatternId::CoDart => "co-dart".into(),
            PatternId::Bull => "bull".into(),
            PatternId::Diamond => "diamond".into(),
            PatternId::CoCricket => "co-cricket".into(),
            PatternId::Hammer => "hammer".into(),
            PatternId::Gem => "gem".into(),
            PatternId::Butterfly => "butterfly".into(),
            PatternId::Antifork => "antifork".into(),
            PatternId::P4 => "P4".into(),
            PatternId::P6 => "P6".into(),
            PatternId::C4 => "C4".into(),
            PatternId::K4 => "K4".into(),
            PatternId::Hole(k) => format!("hole:{k}"),
            PatternId::Antihole(k) => format!("antihole:{k}"),
            PatternId::Balloon(k) => format!("balloon:{k}"),
        }
    }

    /// Parses `fork`, `hole:7`, `balloon:5`, ...
    pub fn parse(s: &str) -> Option<PatternId> {
        let fixed = PatternId::FIXED
            .iter()
            .find(|p| p.name() == s)
            .copied();
        if fixed.is_some() {
            return fixed;
        }
        let (family, k) = s.split_once(':')?;
        let k: usize = k.parse().ok()?;
        match family {
            "hole" if k >= 4 => Some(PatternId::Hole(k)),
            "antihole" if k >= 4 => Some(PatternId::Antihole(k)),
            "balloon" if k >= 4 => Some(PatternId::Balloon(k)),
            _ => None,
        }
    }

    /// The canonical graph of this configuration.
    pub fn graph(&self) -> Graph {
        let g = |n, edges: &[(usize, usize)]| Graph::from_edges(n, edges).unwrap();
        match *self {
            // K_{1,3}: center 0 with three leaves.
            PatternId::Claw => g(4, &[(0, 1), (0, 2), (0, 3)]),
            // claw with one edge subdivided: leaves 0,1 on center 2, path 2-3-4.
            PatternId::Fork => g(5, &[(0, 2), (1, 2), (2, 3), (3, 4)]),
            // triangle 0,1,2 with pendant 3 on 0.
            PatternId::Paw => g(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]),
            // K1 + (K1 ∪ P3): apex over a path 0-1-2 and an isolated 3.
            PatternId::Dart => Graph::empty(1)
                .unwrap()
                .join(&g(4, &[(0, 1), (1, 2)]))
                .unwrap(),
            // C4 0-1-2-3 with pendant 4 on 0.
            PatternId::Banner => g(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]),
            // K1 ∪ paw.
            PatternId::CoDart => PatternId::Paw
                .graph()
                .disjoint_union(&Graph::empty(1).unwrap())
                .unwrap(),
            // triangle 0,1,2 with pendants 3 on 0 and 4 on 1.
            PatternId::Bull => g(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)]),
            // K1 + P3.
            PatternId::Diamond => Graph::empty(1)
                .unwrap()
                .join(&Graph::path(3).unwrap())
                .unwrap(),
            // K1 ∪ diamond.
            PatternId::CoCricket => PatternId::Diamond
                .graph()
                .disjoint_union(&Graph::empty(1).unwrap())
                .unwrap(),
            // triangle 0,1,2 sharing vertex 2 with an end of the path 2-3-4.
            PatternId::Hammer => g(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)]),
            // K1 + P4.
            PatternId::Gem => Graph::empty(1)
                .unwrap()
                .join(&Graph::path(4).unwrap())
                .unwrap(),
            // K1 + 2K2: two triangles sharing the apex.
            PatternId::Butterfly => {
                let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
                Graph::empty(1)
                    .unwrap()
                    .join(&k2.disjoint_union(&k2).unwrap())
                    .unwrap()
            }
            PatternId::Antifork => PatternId::Fork.graph().complement(),
            PatternId::P4 => Graph::path(4).unwrap(),
            PatternId::P6 => Graph::path(6).unwrap(),
            PatternId::C4 => Graph::cycle(4).unwrap(),
            PatternId::K4 => Graph::complete(4).unwrap(),
            PatternId::Hole(k) => {
                assert!(k >= 4, "hole length must be at least 4");
                Graph::cycle(k).unwrap()
            }
            PatternId::Antihole(k) => {
                assert!(k >= 4, "antihole length must be at least 4");
                Graph::cycle(k).unwrap().complement()
            }
            PatternId::Balloon(k) => {
                assert!(k >= 4, "balloon hole must have at least 4 vertices");
                let mut edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
                edges.push((k, 0)); // center to two consecutive hole vertices
                edges.push((k, 1));
                edges.push((k, k + 1)); // pendant leaf
                Graph::from_edges(k + 2, &edges).unwrap()
            }
        }
    }
}

impl fmt::Display for PatternId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// A witnessed induced occurrence: `map[i]` is the host vertex playing the
/// role of pattern vertex i. Edges and non-edges are both preserved.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Occurrence {
    pub pattern: PatternId,
    pub map: Vec<usize>,
}

impl Occurrence {
    /// Re-verifies that the mapped vertices induce the pattern in `host`.
    pub fn verify(&self, host: &Graph) -> bool {
        let pat = self.pattern.graph();
        if self.map.len() != pat.n() {
            return false;
        }
        let distinct: VertexSet = self.map.iter().copied().collect();
        if distinct.len() != self.map.len() || self.map.iter().any(|&v| v >= host.n()) {
            return false;
        }
        for i in 0..pat.n() {
            for j in i + 1..pat.n() {
                if pat.has_edge(i, j) != host.has_edge(self.map[i], self.map[j]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Searches for an induced copy of `pattern` in `host` by backtracking over
/// pattern vertices in index order, host candidates in ascending order, with
/// degree and partial-adjacency pruning. Returns the lexicographically least
/// map when one exists.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let k = pattern.n();
    if k > host.n() {
        return None;
    }
    if k == 0 {
        return Some(vec![]);
    }
    let mut map = vec![usize::MAX; k];
    let mut used = VertexSet::EMPTY;
    if assign(host, pattern, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn assign(host: &Graph, pattern: &Graph, i: usize, map: &mut [usize], used: &mut VertexSet) -> bool {
    if i == pattern.n() {
        return true;
    }
    let pat_deg = pattern.degree(i);
    for h in host.vertices() {
        if used.contains(h) || host.degree(h) < pat_deg {
            continue;
        }
        let hn = host.neighbors(h);
        let ok = (0..i).all(|j| pattern.has_edge(j, i) == hn.contains(map[j]));
        if !ok {
            continue;
        }
        map[i] = h;
        used.insert(h);
        if assign(host, pattern, i + 1, map, used) {
            return true;
        }
        used.remove(h);
    }
    false
}

/// The all-injections oracle for `contains_induced`, kept for testing: tries
/// every injective map in lexicographic order with no pruning.
pub fn contains_induced_naive(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let k = pattern.n();
    if k > host.n() {
        return None;
    }
    if k == 0 {
        return Some(vec![]);
    }
    let mut map = vec![usize::MAX; k];
    fn rec(host: &Graph, pattern: &Graph, i: usize, map: &mut Vec<usize>) -> bool {
        if i == pattern.n() {
            for a in 0..pattern.n() {
                for b in a + 1..pattern.n() {
                    if pattern.has_edge(a, b) != host.has_edge(map[a], map[b]) {
                        return false;
                    }
                }
            }
            return true;
        }
        for h in host.vertices() {
            if map[..i].contains(&h) {
                continue;
            }
            map[i] = h;
            if rec(host, pattern, i + 1, map) {
                return true;
            }
        }
        false
    }
    if rec(host, pattern, 0, &mut map) {
        Some(map)
    } else {
        None
    }
}

/// Finds an induced occurrence of the named configuration.
pub fn find_pattern(host: &Graph, id: PatternId) -> Option<Occurrence> {
    contains_induced(host, &id.graph()).map(|map| Occurrence { pattern: id, map })
}

/// True iff `g` has no induced copy of the named configuration.
pub fn is_free(g: &Graph, id: PatternId) -> bool {
    find_pattern(g, id).is_none()
}

pub fn is_fork_free(g: &Graph) -> bool {
    is_free(g, PatternId::Fork)
}

pub fn is_claw_free(g: &Graph) -> bool {
    is_free(g, PatternId::Claw)
}

pub fn is_gem_free(g: &Graph) -> bool {
    is_free(g, PatternId::Gem)
}

pub fn is_butterfly_free(g: &Graph) -> bool {
    is_free(g, PatternId::Butterfly)
}

/// Walks the cycle order of a vertex subset known to induce a cycle: starts
/// at the smallest vertex and moves toward its smaller neighbor.
fn cycle_order(g: &Graph, subset: VertexSet) -> Vec<usize> {
    let start = subset.min().expect("nonempty cycle");
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = (g.neighbors(start) & subset).min().expect("cycle degree 2");
    while cur != start {
        order.push(cur);
        let next = (g.neighbors(cur) & subset)
            .iter()
            .find(|&w| w != prev)
            .expect("cycle degree 2");
        prev = cur;
        cur = next;
    }
    order
}

/// True iff `subset` induces a chordless cycle in `g`.
fn induces_cycle(g: &Graph, subset: VertexSet) -> bool {
    let k = subset.len();
    if k < 3 {
        return false;
    }
    subset
        .iter()
        .all(|v| (g.neighbors(v) & subset).len() == 2)
        && g.components_within(subset).len() == 1
}

/// All k-element subsets of `universe` in lexicographic order of their sorted
/// vertex lists.
fn k_subsets(universe: &[usize], k: usize) -> impl Iterator<Item = VertexSet> + '_ {
    use itertools::Itertools;
    universe
        .iter()
        .copied()
        .combinations(k)
        .map(|c| c.into_iter().collect())
}

/// The first odd hole of length >= `min_len` in subset-lexicographic order,
/// scanning lengths in increasing order. `min_len` must be odd and >= 5.
pub fn find_odd_hole(g: &Graph, min_len: usize) -> Option<Vec<usize>> {
    assert!(min_len >= 5 && min_len % 2 == 1, "min_len must be odd, >= 5");
    let verts: Vec<usize> = g.vertices().collect();
    let mut k = min_len;
    while k <= g.n() {
        for subset in k_subsets(&verts, k) {
            if induces_cycle(g, subset) {
                return Some(cycle_order(g, subset));
            }
        }
        k += 2;
    }
    None
}

/// The first odd antihole of length >= 5: a hole search on the complement.
/// The 5-antihole equals the 5-hole, so SPGT reporting counts it once as a
/// hole (see [`is_perfect`]).
pub fn find_odd_antihole(g: &Graph) -> Option<Vec<usize>> {
    find_odd_hole(&g.complement(), 5)
}

/// Every induced odd hole of `g` with length >= 5, lengths ascending and
/// subsets lexicographic within a length. Each hole is given in cycle order.
pub fn all_odd_holes(g: &Graph) -> Vec<Vec<usize>> {
    let verts: Vec<usize> = g.vertices().collect();
    let mut holes = Vec::new();
    let mut k = 5;
    while k <= g.n() {
        for subset in k_subsets(&verts, k) {
            if induces_cycle(g, subset) {
                holes.push(cycle_order(g, subset));
            }
        }
        k += 2;
    }
    holes
}

/// Perfection by the strong perfect graph theorem: no odd hole and no odd
/// antihole. Antiholes of length 5 coincide with holes of length 5, so the
/// antihole scan starts at length 7.
pub fn is_perfect(g: &Graph) -> bool {
    find_odd_hole(g, 5).is_none()
        && (g.n() < 7 || find_odd_hole(&g.complement(), 7).is_none())
}

/// A witnessed odd balloon: an odd hole, a center adjacent to exactly two
/// consecutive hole vertices, and a leaf adjacent only to the center among
/// these n+2 vertices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OddBalloon {
    /// The hole in cycle order; odd length >= 5.
    pub hole: Vec<usize>,
    pub center: usize,
    pub leaf: usize,
}

impl OddBalloon {
    pub fn hole_len(&self) -> usize {
        self.hole.len()
    }

    pub fn vertex_set(&self) -> VertexSet {
        let mut s: VertexSet = self.hole.iter().copied().collect();
        s.insert(self.center);
        s.insert(self.leaf);
        s
    }

    /// Re-verifies every type invariant against the host graph by direct
    /// edge inspection.
    pub fn verify(&self, g: &Graph) -> bool {
        let k = self.hole.len();
        if k < 5 || k.is_multiple_of(2) {
            return false;
        }
        let hole_set: VertexSet = self.hole.iter().copied().collect();
        if hole_set.len() != k
            || hole_set.contains(self.center)
            || hole_set.contains(self.leaf)
            || self.center == self.leaf
            || self.center >= g.n()
            || self.leaf >= g.n()
        {
            return false;
        }
        // hole order must be a chordless cycle
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if g.has_edge(self.hole[i], self.hole[j]) != consecutive {
                    return false;
                }
            }
        }
        // center sees exactly two consecutive hole vertices plus the leaf
        let on_hole = g.neighbors(self.center) & hole_set;
        if on_hole.len() != 2 {
            return false;
        }
        let pair: Vec<usize> = on_hole.iter().collect();
        if !g.has_edge(pair[0], pair[1]) {
            return false;
        }
        if !g.has_edge(self.center, self.leaf) {
            return false;
        }
        // leaf anticomplete to the hole
        g.neighbors(self.leaf) & hole_set == VertexSet::EMPTY
    }
}

/// Searches induced odd balloons, holes in increasing length and
/// lexicographic subset order, centers and leaves ascending; the first hit is
/// returned, so the witness has minimum hole length.
pub fn find_odd_balloon(g: &Graph) -> Option<OddBalloon> {
    let verts: Vec<usize> = g.vertices().collect();
    let mut k = 5;
    while k + 2 <= g.n() {
        for subset in k_subsets(&verts, k) {
            if !induces_cycle(g, subset) {
                continue;
            }
            let hole = cycle_order(g, subset);
            for center in g.vertices() {
                if subset.contains(center) {
                    continue;
                }
                let on_hole = g.neighbors(center) & subset;
                if on_hole.len() != 2 {
                    continue;
                }
                let pair: Vec<usize> = on_hole.iter().collect();
                if !g.has_edge(pair[0], pair[1]) {
                    continue;
                }
                for leaf in g.neighbors(center).iter() {
                    if subset.contains(leaf) || leaf == center {
                        continue;
                    }
                    if (g.neighbors(leaf) & subset).is_empty() {
                        let balloon = OddBalloon {
                            hole: hole.clone(),
                            center,
                            leaf,
                        };
                        debug_assert!(balloon.verify(g));
                        return Some(balloon);
                    }
                }
            }
        }
        k += 2;
    }
    None
}

/// A witness whose hole length is minimum over all induced odd balloons of
/// `g`; ties broken by the lexicographic scan order of [`find_odd_balloon`].
pub fn minimum_odd_balloon(g: &Graph) -> Option<OddBalloon> {
    // the scan already visits hole lengths in increasing order
    find_odd_balloon(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pattern_library_sizes_and_degrees() {
        let expect: &[(PatternId, usize, &[usize])] = &[
            (PatternId::Claw, 4, &[1, 1, 1, 3]),
            (PatternId::Fork, 5, &[1, 1, 1, 2, 3]),
            (PatternId::Paw, 4, &[1, 2, 2, 3]),
            (PatternId::Dart, 5, &[1, 2, 2, 3, 4]),
            (PatternId::Banner, 5, &[1, 2, 2, 2, 3]),
            (PatternId::CoDart, 5, &[0, 1, 2, 2, 3]),
            (PatternId::Bull, 5, &[1, 1, 2, 3, 3]),
            (PatternId::Diamond, 4, &[2, 2, 3, 3]),
            (PatternId::CoCricket, 5, &[0, 2, 2, 3, 3]),
            (PatternId::Hammer, 5, &[1, 2, 2, 2, 3]),
            (PatternId::Gem, 5, &[2, 2, 3, 3, 4]),
            (PatternId::Butterfly, 5, &[2, 2, 2, 2, 4]),
            (PatternId::Antifork, 5, &[1, 2, 3, 3, 3]),
            (PatternId::P4, 4, &[1, 1, 2, 2]),
            (PatternId::P6, 6, &[1, 1, 2, 2, 2, 2]),
            (PatternId::C4, 4, &[2, 2, 2, 2]),
            (PatternId::K4, 4, &[3, 3, 3, 3]),
            (PatternId::Hole(5), 5, &[2, 2, 2, 2, 2]),
            (PatternId::Antihole(7), 7, &[4, 4, 4, 4, 4, 4, 4]),
            (PatternId::Balloon(5), 7, &[1, 2, 2, 2, 3, 3, 3]),
            (PatternId::Balloon(4), 6, &[1, 2, 2, 3, 3, 3]),
        ];
        for (id, n, degs) in expect {
            let g = id.graph();
            assert_eq!(g.n(), *n, "{id}");
            assert_eq!(g.degree_sequence(), degs.to_vec(), "{id}");
        }
    }

    #[test]
    fn banner_and_hammer_are_not_isomorphic() {
        // same degree sequence, different cycle structure
        use crate::canon::canonical_form;
        assert_ne!(
            canonical_form(&PatternId::Banner.graph()).unwrap(),
            canonical_form(&PatternId::Hammer.graph()).unwrap()
        );
    }

    #[test]
    fn matcher_finds_p4_in_c5() {
        let occ = find_pattern(&Graph::cycle(5).unwrap(), PatternId::P4).unwrap();
        assert!(occ.verify(&Graph::cycle(5).unwrap()));
    }

    #[test]
    fn k4_has_no_induced_p3() {
        let p3 = Graph::path(3).unwrap();
        assert!(contains_induced(&Graph::complete(4).unwrap(), &p3).is_none());
        assert!(contains_induced_naive(&Graph::complete(4).unwrap(), &p3).is_none());
    }

    #[test]
    fn petersen_contains_fork_matching_oracle() {
        let mut edges = vec![];
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        let petersen = Graph::from_edges(10, &edges).unwrap();
        let fork = PatternId::Fork.graph();
        let fast = contains_induced(&petersen, &fork);
        let naive = contains_induced_naive(&petersen, &fork);
        assert!(fast.is_some());
        assert_eq!(fast, naive);
    }

    #[test]
    fn b5_freeness() {
        let b5 = PatternId::Balloon(5).graph();
        assert!(is_fork_free(&b5));
        assert!(is_gem_free(&b5));
        assert!(is_claw_free(&b5));
        assert!(is_butterfly_free(&b5));
        assert!(!is_fork_free(&PatternId::Fork.graph()));
    }

    #[test]
    fn odd_hole_search() {
        let c7 = Graph::cycle(7).unwrap();
        let hole = find_odd_hole(&c7, 5).unwrap();
        assert_eq!(hole.len(), 7);
        assert!(find_odd_hole(&Graph::cycle(6).unwrap(), 5).is_none());
        let co_c7 = Graph::cycle(7).unwrap().complement();
        assert_eq!(find_odd_antihole(&co_c7).unwrap().len(), 7);
    }

    #[test]
    fn spgt_examples() {
        assert!(!is_perfect(&Graph::cycle(5).unwrap()));
        assert!(is_perfect(&Graph::path(4).unwrap()));
        assert!(is_perfect(&Graph::cycle(6).unwrap()));
        assert!(!is_perfect(&Graph::cycle(7).unwrap().complement()));
        assert!(is_perfect(&Graph::empty(0).unwrap()));
    }

    #[test]
    fn c6_perfect_cross_checked_definitionally() {
        use crate::solve::chi_equals_omega_hereditarily;
        let c6 = Graph::cycle(6).unwrap();
        assert!(chi_equals_omega_hereditarily(&c6));
        assert!(is_perfect(&c6));
    }

    #[test]
    fn balloon_detection() {
        let b5 = PatternId::Balloon(5).graph();
        let found = find_odd_balloon(&b5).unwrap();
        assert_eq!(found.hole_len(), 5);
        assert_eq!(found.vertex_set(), b5.vertex_set());
        assert_eq!(found.center, 5);
        assert_eq!(found.leaf, 6);
        assert!(found.verify(&b5));

        assert!(find_odd_balloon(&Graph::cycle(7).unwrap()).is_none());
        assert!(find_odd_balloon(&PatternId::Gem.graph()).is_none());
    }

    #[test]
    fn minimum_balloon_prefers_shorter_hole() {
        // B7 plus a disjoint B5 sharing nothing: minimum must report length 5
        let b7 = PatternId::Balloon(7).graph();
        let b5 = PatternId::Balloon(5).graph();
        let both = b7.disjoint_union(&b5).unwrap();
        let min = minimum_odd_balloon(&both).unwrap();
        assert_eq!(min.hole_len(), 5);
        assert!(min.verify(&both));
    }

    #[test]
    fn balloon_and_hole_scans_agree_with_generic_matcher() {
        // on up to 7 vertices the only odd balloon is the 5-balloon and the
        // only odd holes are C5 and C7, so the family scanners must agree
        // with fixed-pattern matching
        let b5 = PatternId::Balloon(5).graph();
        let c5 = PatternId::Hole(5).graph();
        let c7 = PatternId::Hole(7).graph();
        for n in 1..=7usize {
            for g in crate::enumerate::enumerate_graphs(n, |_| true).unwrap() {
                assert_eq!(
                    find_odd_balloon(&g).is_some(),
                    contains_induced(&g, &b5).is_some(),
                    "balloon scan vs matcher on {g:?}"
                );
                let has_odd_hole =
                    contains_induced(&g, &c5).is_some() || contains_induced(&g, &c7).is_some();
                assert_eq!(
                    find_odd_hole(&g, 5).is_some(),
                    has_odd_hole,
                    "hole scan vs matcher on {g:?}"
                );
            }
        }
    }

    #[test]
    fn pattern_parse_round_trip() {
        for id in PatternId::FIXED {
            assert_eq!(PatternId::parse(&id.name()), Some(id));
        }
        assert_eq!(PatternId::parse("hole:7"), Some(PatternId::Hole(7)));
        assert_eq!(PatternId::parse("balloon:5"), Some(PatternId::Balloon(5)));
        assert_eq!(PatternId::parse("balloon:3"), None);
        assert_eq!(PatternId::parse("nonsense"), None);
    }
}
