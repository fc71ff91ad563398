//! Canonical forms for small graphs by exhaustive relabeling. The key is the
//! minimum upper-triangle bit encoding over every permutation that lists
//! vertices in non-increasing degree order; the degree constraint prunes the
//! factorial search and the minimum over the remaining class is still
//! isomorphism-invariant. Adequate up to the documented 9-vertex limit.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const CANON_LIMIT: usize = 9;

/// A total-order key identical for isomorphic graphs: the vertex count
/// followed by the minimal upper-triangle encoding, big-endian.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalForm {
    bytes: Vec<u8>,
}

impl CanonicalForm {
    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    fn new(n: usize, bits: u64) -> CanonicalForm {
        let mut bytes = vec![n as u8];
        bytes.extend_from_slice(&bits.to_be_bytes());
        CanonicalForm { bytes }
    }

    fn n(&self) -> usize {
        self.bytes[0] as usize
    }

    fn bits(&self) -> u64 {
        u64::from_be_bytes(self.bytes[1..9].try_into().unwrap())
    }

    /// Decodes the canonically labeled graph this key encodes.
    pub fn graph(&self) -> Graph {
        let n = self.n();
        let total = n * n.saturating_sub(1) / 2;
        let bits = self.bits();
        let mut edges = Vec::new();
        let mut idx = 0;
        for col in 1..n {
            for row in 0..col {
                if bits >> (total - 1 - idx) & 1 == 1 {
                    edges.push((row, col));
                }
                idx += 1;
            }
        }
        Graph::from_edges(n, &edges).expect("canonical bits decode to a valid graph")
    }
}

/// Canonical form of `g`. Errors above the 9-vertex limit.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.n();
    if n > CANON_LIMIT {
        return Err(Error::CanonicalLimit {
            n,
            limit: CANON_LIMIT,
        });
    }
    if n <= 1 {
        return Ok(CanonicalForm::new(n, 0));
    }
    // Position p must receive a vertex of the p-th largest degree.
    let mut sorted_degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    sorted_degrees.sort_unstable_by(|a, b| b.cmp(a));
    let total = n * (n - 1) / 2;

    let mut best: Option<u64> = None;
    let mut placed = vec![usize::MAX; n]; // position -> vertex
    let mut used = 0u64;
    search(
        g,
        &sorted_degrees,
        total,
        0,
        0,
        0,
        &mut placed,
        &mut used,
        &mut best,
    );
    Ok(CanonicalForm::new(n, best.expect("search visits a leaf")))
}

#[allow(clippy::too_many_arguments)]
fn search(
    g: &Graph,
    sorted_degrees: &[usize],
    total: usize,
    pos: usize,
    acc: u64,
    nbits: usize,
    placed: &mut [usize],
    used: &mut u64,
    best: &mut Option<u64>,
) {
    let n = g.n();
    if pos == n {
        if best.is_none_or(|b| acc < b) {
            *best = Some(acc);
        }
        return;
    }
    for v in 0..n {
        if *used >> v & 1 == 1 || g.degree(v) != sorted_degrees[pos] {
            continue;
        }
        // Column of bits this placement appends: adjacency to positions 0..pos.
        let mut acc2 = acc;
        for &u in &placed[..pos] {
            acc2 = acc2 << 1 | g.has_edge(u, v) as u64;
        }
        let nbits2 = nbits + pos;
        // Prefix prune: a partial encoding already above the best full
        // encoding's prefix can never improve on it.
        if let Some(b) = *best {
            if acc2 > b >> (total - nbits2) {
                continue;
            }
        }
        placed[pos] = v;
        *used |= 1 << v;
        search(g, sorted_degrees, total, pos + 1, acc2, nbits2, placed, used, best);
        *used &= !(1 << v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn relabel(g: &Graph, perm: &[usize]) -> Graph {
        let edges: Vec<_> = g
            .edges()
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Graph::from_edges(g.n(), &edges).unwrap()
    }

    #[test]
    fn invariant_under_relabeling() {
        use itertools::Itertools;
        let c5 = Graph::cycle(5).unwrap();
        let base = canonical_form(&c5).unwrap();
        for perm in (0..5).permutations(5) {
            assert_eq!(canonical_form(&relabel(&c5, &perm)).unwrap(), base);
        }
        let k3_k1 = Graph::complete(3)
            .unwrap()
            .disjoint_union(&Graph::empty(1).unwrap())
            .unwrap();
        let base = canonical_form(&k3_k1).unwrap();
        for perm in (0..4).permutations(4) {
            assert_eq!(canonical_form(&relabel(&k3_k1, &perm)).unwrap(), base);
        }
    }

    #[test]
    fn distinguishes_p5_from_c5() {
        let p5 = Graph::path(5).unwrap();
        let c5 = Graph::cycle(5).unwrap();
        assert_ne!(canonical_form(&p5).unwrap(), canonical_form(&c5).unwrap());
    }

    #[test]
    fn decode_round_trip() {
        let g = Graph::from_edges(6, &[(0, 3), (1, 4), (2, 5), (0, 1), (4, 5)]).unwrap();
        let key = canonical_form(&g).unwrap();
        let rep = key.graph();
        assert_eq!(canonical_form(&rep).unwrap(), key);
        assert_eq!(rep.degree_sequence(), g.degree_sequence());
    }

    #[test]
    fn rejects_above_limit() {
        let g = Graph::empty(10).unwrap();
        assert!(matches!(
            canonical_form(&g),
            Err(Error::CanonicalLimit { n: 10, limit: 9 })
        ));
    }

    #[test]
    fn empty_and_singleton() {
        assert_eq!(
            canonical_form(&Graph::empty(0).unwrap()).unwrap(),
            CanonicalForm::new(0, 0)
        );
        let k1 = canonical_form(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!(k1.graph().n(), 1);
    }
}
