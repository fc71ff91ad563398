//! Exhaustive enumeration of small graphs up to isomorphism: labeled
//! incremental growth with hereditary pruning, deduplicated by canonical
//! form. One representative per isomorphism class, in canonical-key order.

use std::collections::HashSet;

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const ENUM_LIMIT: usize = 8;

/// Extends every graph in `reps` by one vertex attached in all 2^n ways,
/// keeps those passing `filter`, and returns one canonically labeled
/// representative per isomorphism class, sorted by canonical key.
///
/// Sound for hereditary filters: every (n+1)-vertex class member arises from
/// some n-vertex class member this way. The new size must stay within the
/// canonical-form limit of 9 vertices.
pub fn extend_with_vertex<F>(reps: &[Graph], filter: F) -> Result<Vec<Graph>>
where
    F: Fn(&Graph) -> bool,
{
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    let mut keys: Vec<CanonicalForm> = Vec::new();
    for g in reps {
        let n = g.n();
        let mut edges = g.edges();
        let base_len = edges.len();
        for mask in 0..1u64 << n {
            edges.truncate(base_len);
            for v in 0..n {
                if mask >> v & 1 == 1 {
                    edges.push((v, n));
                }
            }
            let candidate = Graph::from_edges(n + 1, &edges)?;
            if !filter(&candidate) {
                continue;
            }
            let key = canonical_form(&candidate)?;
            if seen.insert(key.clone()) {
                keys.push(key);
            }
        }
    }
    keys.sort_unstable();
    Ok(keys.into_iter().map(|k| k.graph()).collect())
}

/// One representative per isomorphism class for every size 1..=n_max,
/// restricted to graphs passing the hereditary `filter`. Level i of the
/// result holds the (i+1)-vertex classes.
pub fn enumerate_levels<F>(n_max: usize, filter: F) -> Result<Vec<Vec<Graph>>>
where
    F: Fn(&Graph) -> bool,
{
    if n_max > ENUM_LIMIT {
        return Err(Error::EnumerationLimit {
            n: n_max,
            limit: ENUM_LIMIT,
        });
    }
    let mut levels: Vec<Vec<Graph>> = Vec::new();
    if n_max == 0 {
        return Ok(levels);
    }
    let k1 = Graph::empty(1)?;
    levels.push(if filter(&k1) { vec![k1] } else { vec![] });
    for _ in 1..n_max {
        let next = extend_with_vertex(levels.last().unwrap(), &filter)?;
        levels.push(next);
    }
    Ok(levels)
}

/// Exactly one representative per isomorphism class of n-vertex graphs
/// satisfying the hereditary `filter`. Internal enumeration is limited to
/// n <= 8; larger sizes are ingested from external graph6 streams.
pub fn enumerate_graphs<F>(n: usize, filter: F) -> Result<Vec<Graph>>
where
    F: Fn(&Graph) -> bool,
{
    if n == 0 {
        let empty = Graph::empty(0)?;
        return Ok(if filter(&empty) { vec![empty] } else { vec![] });
    }
    let mut levels = enumerate_levels(n, filter)?;
    Ok(levels.pop().unwrap_or_default())
}
