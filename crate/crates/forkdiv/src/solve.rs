//! Exact clique-number and chromatic-number solvers. Branch-and-bound with
//! greedy-coloring bounds, deterministic by construction: candidates are
//! always scanned in ascending vertex order, so repeated runs on the same
//! graph produce bit-identical witnesses.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A color assignment, one 0-based color index per vertex. Properness is not
/// an invariant of the type; assert it with [`is_proper`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coloring {
    pub colors: Vec<usize>,
}

impl Coloring {
    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colors used.
    pub fn colors_used(&self) -> usize {
        let mut seen = std::collections::BTreeSet::new();
        seen.extend(self.colors.iter().copied());
        seen.len()
    }

    /// Largest color index plus one; 0 for the empty coloring.
    pub fn palette_span(&self) -> usize {
        self.colors.iter().max().map_or(0, |m| m + 1)
    }
}

/// True iff no edge of `g` is monochromatic under `c`.
pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool> {
    if c.colors.len() != g.n() {
        return Err(Error::ColoringLength {
            expected: g.n(),
            got: c.colors.len(),
        });
    }
    Ok(g.edges().iter().all(|&(u, v)| c.colors[u] != c.colors[v]))
}

/// Exact clique number. ω of the empty-vertex graph is 0.
pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}

/// A maximum clique, found by branch and bound with a greedy-coloring upper
/// bound. Deterministic given the graph.
pub fn max_clique(g: &Graph) -> VertexSet {
    let mut best = VertexSet::EMPTY;
    let mut current = VertexSet::EMPTY;
    expand_clique(g, &mut current, g.vertex_set(), &mut best);
    best
}

fn expand_clique(g: &Graph, current: &mut VertexSet, candidates: VertexSet, best: &mut VertexSet) {
    if current.len() > best.len() {
        *best = *current;
    }
    if candidates.is_empty() {
        return;
    }
    // Greedy-color the candidate subgraph; a vertex in color class c can
    // extend the current clique by at most c+1 vertices.
    let order: Vec<usize> = candidates.iter().collect();
    let mut color_of = vec![0usize; order.len()];
    let mut classes: Vec<VertexSet> = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        let nv = g.neighbors(v);
        let c = classes
            .iter()
            .position(|class| !class.intersects(nv))
            .unwrap_or_else(|| {
                classes.push(VertexSet::EMPTY);
                classes.len() - 1
            });
        classes[c].insert(v);
        color_of[i] = c;
    }
    // Branch on candidates in descending color, ascending vertex index within
    // a color; the bound current + color + 1 <= best prunes the tail.
    let mut branch: Vec<(usize, usize)> = order
        .iter()
        .enumerate()
        .map(|(i, &v)| (color_of[i], v))
        .collect();
    branch.sort_unstable();
    let mut remaining = candidates;
    for &(color, v) in branch.iter().rev() {
        if current.len() + color < best.len() {
            return;
        }
        remaining.remove(v);
        current.insert(v);
        expand_clique(g, current, remaining & g.neighbors(v), best);
        current.remove(v);
    }
}

/// Exact chromatic number with a witnessing proper coloring. χ of the
/// empty-vertex graph is 0. Deterministic given the graph.
pub fn exact_coloring(g: &Graph) -> Coloring {
    let n = g.n();
    if n == 0 {
        return Coloring { colors: vec![] };
    }
    let lower = clique_number(g).max(1);
    let greedy = greedy_coloring(g);
    let upper = greedy.palette_span();
    for k in lower..upper {
        let mut colors = vec![usize::MAX; n];
        if color_with(g, k, 0, 0, &mut colors) {
            return Coloring { colors };
        }
    }
    greedy_or_exact_upper(g, greedy, upper)
}

fn greedy_or_exact_upper(g: &Graph, greedy: Coloring, upper: usize) -> Coloring {
    // The greedy coloring witnesses the upper bound, but for determinism of
    // the reported witness we re-run the backtracking at k = upper, which
    // must succeed.
    let mut colors = vec![usize::MAX; g.n()];
    let ok = color_with(g, upper, 0, 0, &mut colors);
    debug_assert!(ok, "backtracking must succeed at the greedy bound");
    if ok {
        Coloring { colors }
    } else {
        greedy
    }
}

/// Exact chromatic number.
pub fn chromatic_number(g: &Graph) -> usize {
    exact_coloring(g).colors_used()
}

fn color_with(g: &Graph, k: usize, v: usize, max_used: usize, colors: &mut [usize]) -> bool {
    if v == g.n() {
        return true;
    }
    // Symmetry break: a fresh color may only be the smallest unused index.
    let limit = k.min(max_used + 1);
    for c in 0..limit {
        if g.neighbors(v).iter().all(|w| colors[w] != c) {
            colors[v] = c;
            if color_with(g, k, v + 1, max_used.max(c + 1), colors) {
                return true;
            }
            colors[v] = usize::MAX;
        }
    }
    false
}

/// Sequential greedy coloring in vertex order; an upper bound for χ.
pub fn greedy_coloring(g: &Graph) -> Coloring {
    let mut colors = vec![0usize; g.n()];
    for v in 0..g.n() {
        let used: Vec<usize> = g
            .neighbors(v)
            .iter()
            .filter(|&w| w < v)
            .map(|w| colors[w])
            .collect();
        colors[v] = (0..).find(|c| !used.contains(c)).unwrap();
    }
    Coloring { colors }
}

/// True iff the complement of `g` is 2-colorable, checked by BFS.
pub fn is_bipartite(g: &Graph) -> bool {
    let mut side = vec![None::<bool>; g.n()];
    for start in 0..g.n() {
        if side[start].is_some() {
            continue;
        }
        side[start] = Some(false);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v).iter() {
                match side[w] {
                    None => {
                        side[w] = Some(!side[v].unwrap());
                        queue.push_back(w);
                    }
                    Some(s) if s == side[v].unwrap() => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

/// The definitional perfect-graph check: χ(H) = ω(H) for every induced
/// subgraph H. Exponential in n; used as the independent cross-check for the
/// odd-hole/odd-antihole recognizer and by the certificate replayer.
pub fn chi_equals_omega_hereditarily(g: &Graph) -> bool {
    let n = g.n();
    debug_assert!(n <= 16, "definitional perfect check is 2^n");
    for mask in 0..1u64 << n {
        let h = g.induced(VertexSet::from_bits(mask));
        if chromatic_number(&h) != clique_number(&h) {
            return false;
        }
    }
    true
}

/// C(ω+1, 2) = ω(ω+1)/2, the color budget for perfectly divisible graphs.
pub fn chi_bound(omega: usize) -> usize {
    omega * (omega + 1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        // outer C5: 0..4, inner 5-star: 5..9, spokes i -> i+5
        let mut edges = vec![];
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edges(10, &edges).unwrap()
    }

    /// Brute-force ω: maximum size over all vertex subsets that are cliques.
    fn clique_brute(g: &Graph) -> usize {
        let n = g.n();
        let mut best = 0;
        for mask in 0..1u64 << n {
            let s = VertexSet::from_bits(mask);
            let is_clique = s
                .iter()
                .all(|u| (s - VertexSet::singleton(u)).is_subset_of(g.neighbors(u)));
            if is_clique {
                best = best.max(s.len());
            }
        }
        best
    }

    /// Brute-force χ: least k such that some assignment in k^n is proper.
    fn chromatic_brute(g: &Graph) -> usize {
        let n = g.n();
        if n == 0 {
            return 0;
        }
        for k in 1..=n {
            let mut assignment = vec![0usize; n];
            loop {
                let c = Coloring {
                    colors: assignment.clone(),
                };
                if is_proper(g, &c).unwrap() {
                    return k;
                }
                // odometer increment in base k
                let mut i = 0;
                while i < n {
                    assignment[i] += 1;
                    if assignment[i] < k {
                        break;
                    }
                    assignment[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
            }
        }
        unreachable!("n colors always suffice")
    }

    #[test]
    fn clique_number_basics() {
        assert_eq!(clique_number(&Graph::complete(4).unwrap()), 4);
        assert_eq!(clique_number(&Graph::cycle(5).unwrap()), 2);
        assert_eq!(clique_number(&Graph::empty(0).unwrap()), 0);
        assert_eq!(clique_number(&Graph::empty(1).unwrap()), 1);
    }

    #[test]
    fn petersen_is_triangle_free() {
        let p = petersen();
        // oracle: no triangle among all vertex triples
        let n = p.n();
        let mut triangle = false;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if p.has_edge(a, b) && p.has_edge(b, c) && p.has_edge(a, c) {
                        triangle = true;
                    }
                }
            }
        }
        assert!(!triangle);
        assert_eq!(clique_number(&p), 2);
    }

    #[test]
    fn petersen_chromatic_three() {
        let p = petersen();
        // cross-check: no proper 2-coloring exists
        let mut two_colorable = false;
        for mask in 0..1u64 << p.n() {
            let colors: Vec<usize> = (0..p.n()).map(|v| (mask >> v & 1) as usize).collect();
            if is_proper(&p, &Coloring { colors }).unwrap() {
                two_colorable = true;
            }
        }
        assert!(!two_colorable);
        // explicit proper 3-coloring
        let explicit = Coloring {
            colors: vec![0, 1, 0, 1, 2, 1, 2, 2, 0, 0],
        };
        assert!(is_proper(&p, &explicit).unwrap());
        assert_eq!(chromatic_number(&p), 3);
    }

    #[test]
    fn chromatic_basics() {
        assert_eq!(chromatic_number(&Graph::cycle(5).unwrap()), 3);
        assert_eq!(chromatic_number(&Graph::complete(4).unwrap()), 4);
        assert_eq!(chromatic_number(&Graph::empty(7).unwrap()), 1);
        assert_eq!(chromatic_number(&Graph::empty(0).unwrap()), 0);
    }

    #[test]
    fn exact_coloring_is_proper_and_deterministic() {
        let p = petersen();
        let c1 = exact_coloring(&p);
        let c2 = exact_coloring(&p);
        assert_eq!(c1, c2);
        assert!(is_proper(&p, &c1).unwrap());
        assert_eq!(c1.colors_used(), 3);
    }

    #[test]
    fn is_proper_examples() {
        let c5 = Graph::cycle(5).unwrap();
        let good = Coloring {
            colors: vec![0, 1, 0, 1, 2],
        };
        let bad = Coloring {
            colors: vec![0, 1, 0, 1, 0],
        };
        assert!(is_proper(&c5, &good).unwrap());
        assert!(!is_proper(&c5, &bad).unwrap());
        let k1 = Graph::empty(1).unwrap();
        assert!(is_proper(&k1, &Coloring { colors: vec![0] }).unwrap());
        assert!(matches!(
            is_proper(&c5, &Coloring { colors: vec![0] }),
            Err(Error::ColoringLength { .. })
        ));
    }

    #[test]
    fn solvers_match_brute_force_on_small_graphs() {
        // every labeled graph on up to 5 vertices
        for n in 0..=5usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .collect();
            for mask in 0..1u64 << pairs.len() {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                assert_eq!(clique_number(&g), clique_brute(&g));
                assert_eq!(chromatic_number(&g), chromatic_brute(&g));
            }
        }
        // and one representative per isomorphism class at 6
        for g in crate::enumerate::enumerate_graphs(6, |_| true).unwrap() {
            assert_eq!(clique_number(&g), clique_brute(&g));
            assert_eq!(chromatic_number(&g), chromatic_brute(&g));
        }
    }

    #[test]
    fn bipartite_check() {
        assert!(is_bipartite(&Graph::cycle(6).unwrap()));
        assert!(!is_bipartite(&Graph::cycle(5).unwrap()));
        assert!(is_bipartite(&Graph::empty(3).unwrap()));
    }

    #[test]
    fn chi_bound_values() {
        assert_eq!(chi_bound(0), 0);
        assert_eq!(chi_bound(2), 3);
        assert_eq!(chi_bound(3), 6);
        assert_eq!(chi_bound(4), 10);
    }
}
