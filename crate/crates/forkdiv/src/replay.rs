//! Independent certificate replayer. Parses the line-oriented certificate
//! form, re-derives the coloring step by step, and validates every
//! certificate invariant using only the graph substrate and the exact
//! solvers — none of the detector, structure or coloring code that produced
//! the certificate. Balloon validity and simpliciality are re-checked here
//! from first principles (direct edge inspection, brute-force clique
//! covers).

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::graph6::parse_graph6;
use crate::solve::{chi_bound, chi_equals_omega_hereditarily, clique_number, exact_coloring};

#[derive(Clone, Debug)]
pub struct ReplayReport {
    pub class: String,
    pub bound: usize,
    pub colors_used: usize,
    pub peels: usize,
    pub divides: usize,
    pub fallbacks: usize,
}

#[derive(Clone, Debug)]
enum ReplayStep {
    Peel {
        vertex: usize,
        kind: String,
        omega: usize,
        degree: usize,
        hole: Vec<usize>,
        leaf: usize,
    },
    Divide {
        a: VertexSet,
        b: VertexSet,
        colors_on_a: usize,
        omega: usize,
    },
    ExactFallback {
        active: VertexSet,
        omega: usize,
        colors: Vec<(usize, usize)>,
    },
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::CertificateInvalid { msg: msg.into() }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::CertificateParse {
        line,
        msg: msg.into(),
    }
}

fn field<'a>(tokens: &'a [&str], key: &str, line: usize) -> Result<&'a str> {
    tokens
        .iter()
        .find_map(|t| t.strip_prefix(key).and_then(|rest| rest.strip_prefix('=')))
        .ok_or_else(|| parse_err(line, format!("missing field {key}")))
}

fn parse_usize(s: &str, line: usize) -> Result<usize> {
    s.parse()
        .map_err(|_| parse_err(line, format!("expected a number, got {s:?}")))
}

fn parse_list(s: &str, line: usize) -> Result<Vec<usize>> {
    if s == "-" || s.is_empty() {
        return Ok(vec![]);
    }
    s.split(',').map(|t| parse_usize(t, line)).collect()
}

fn parse_set(s: &str, line: usize) -> Result<VertexSet> {
    Ok(parse_list(s, line)?.into_iter().collect())
}

/// Parses and fully validates a serialized certificate, returning summary
/// statistics on success. Every failure is reported as a parse or
/// invalid-certificate error naming the violated condition.
pub fn validate_certificate(text: &str) -> Result<ReplayReport> {
    let (graph, class, bound, steps, final_colors) = parse_certificate(text)?;
    replay(&graph, &class, bound, &steps, &final_colors)?;
    Ok(ReplayReport {
        class,
        bound,
        colors_used: {
            let mut distinct: Vec<usize> = final_colors.clone();
            distinct.sort_unstable();
            distinct.dedup();
            distinct.len()
        },
        peels: steps
            .iter()
            .filter(|s| matches!(s, ReplayStep::Peel { .. }))
            .count(),
        divides: steps
            .iter()
            .filter(|s| matches!(s, ReplayStep::Divide { .. }))
            .count(),
        fallbacks: steps
            .iter()
            .filter(|s| matches!(s, ReplayStep::ExactFallback { .. }))
            .count(),
    })
}

type Parsed = (Graph, String, usize, Vec<ReplayStep>, Vec<usize>);

fn parse_certificate(text: &str) -> Result<Parsed> {
    let mut lines = text.lines().enumerate();
    let mut expect = |want: &str| -> Result<(usize, String)> {
        let (i, l) = lines
            .next()
            .ok_or_else(|| parse_err(0, format!("unexpected end, wanted {want}")))?;
        Ok((i + 1, l.to_string()))
    };

    let (i, header) = expect("cert v1")?;
    if header != "cert v1" {
        return Err(parse_err(i, "expected header `cert v1`"));
    }
    let (i, class_line) = expect("class")?;
    let class = class_line
        .strip_prefix("class ")
        .ok_or_else(|| parse_err(i, "expected `class <name>`"))?
        .to_string();
    let (i, graph_line) = expect("graph")?;
    let graph = parse_graph6(
        graph_line
            .strip_prefix("graph ")
            .ok_or_else(|| parse_err(i, "expected `graph <graph6>`"))?,
    )?;
    let (i, bound_line) = expect("bound")?;
    let bound = parse_usize(
        bound_line
            .strip_prefix("bound ")
            .ok_or_else(|| parse_err(i, "expected `bound <k>`"))?,
        i,
    )?;

    let mut steps = Vec::new();
    let final_colors;
    loop {
        let (i, line) = expect("step, final or end")?;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.first().copied() {
            Some("peel") => steps.push(ReplayStep::Peel {
                vertex: parse_usize(field(&tokens, "u", i)?, i)?,
                kind: field(&tokens, "kind", i)?.to_string(),
                omega: parse_usize(field(&tokens, "omega", i)?, i)?,
                degree: parse_usize(field(&tokens, "degree", i)?, i)?,
                hole: parse_list(field(&tokens, "hole", i)?, i)?,
                leaf: parse_usize(field(&tokens, "leaf", i)?, i)?,
            }),
            Some("divide") => steps.push(ReplayStep::Divide {
                a: parse_set(field(&tokens, "a", i)?, i)?,
                b: parse_set(field(&tokens, "b", i)?, i)?,
                colors_on_a: parse_usize(field(&tokens, "colors-on-a", i)?, i)?,
                omega: parse_usize(field(&tokens, "omega", i)?, i)?,
            }),
            Some("exact-fallback") => {
                let colors_raw = field(&tokens, "colors", i)?;
                let mut colors = Vec::new();
                if colors_raw != "-" && !colors_raw.is_empty() {
                    for pair in colors_raw.split(',') {
                        let (v, c) = pair
                            .split_once(':')
                            .ok_or_else(|| parse_err(i, "expected v:c pair"))?;
                        colors.push((parse_usize(v, i)?, parse_usize(c, i)?));
                    }
                }
                steps.push(ReplayStep::ExactFallback {
                    active: parse_set(field(&tokens, "active", i)?, i)?,
                    omega: parse_usize(field(&tokens, "omega", i)?, i)?,
                    colors,
                });
            }
            Some("final") => {
                let raw = line
                    .strip_prefix("final ")
                    .ok_or_else(|| parse_err(i, "expected `final <colors>`"))?;
                final_colors = parse_list(raw, i)?;
                break;
            }
            other => return Err(parse_err(i, format!("unexpected line start {other:?}"))),
        }
    }
    let (i, end) = expect("end")?;
    if end != "end" {
        return Err(parse_err(i, "expected trailing `end`"));
    }
    Ok((graph, class, bound, steps, final_colors))
}

/// Checks that the listed hole plus center and leaf form an odd balloon of
/// the graph restricted to `active`, by direct edge inspection.
fn check_balloon(
    g: &Graph,
    active: VertexSet,
    hole: &[usize],
    center: usize,
    leaf: usize,
) -> Result<()> {
    let k = hole.len();
    if k < 5 || k.is_multiple_of(2) {
        return Err(invalid(format!("balloon hole length {k} is not odd >= 5")));
    }
    let hole_set: VertexSet = hole.iter().copied().collect();
    let all = hole_set.with(center).with(leaf);
    if hole_set.len() != k || all.len() != k + 2 {
        return Err(invalid("balloon vertices are not distinct"));
    }
    if !all.is_subset_of(active) {
        return Err(invalid("balloon leaves the active vertex set"));
    }
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.has_edge(hole[i], hole[j]) != consecutive {
                return Err(invalid("balloon hole is not a chordless cycle"));
            }
        }
    }
    let on_hole = g.neighbors(center) & hole_set;
    if on_hole.len() != 2 {
        return Err(invalid("balloon center must see exactly two hole vertices"));
    }
    let pair: Vec<usize> = on_hole.iter().collect();
    if !g.has_edge(pair[0], pair[1]) {
        return Err(invalid("balloon center must see two consecutive hole vertices"));
    }
    if !g.has_edge(center, leaf) {
        return Err(invalid("balloon leaf must be adjacent to the center"));
    }
    if g.neighbors(leaf).intersects(hole_set) {
        return Err(invalid("balloon leaf must be anticomplete to the hole"));
    }
    Ok(())
}

/// Brute force: can the neighborhood of `v` within `active` be partitioned
/// into at most `parts` cliques?
fn neighborhood_is_union_of_cliques(
    g: &Graph,
    active: VertexSet,
    v: usize,
    parts: usize,
) -> bool {
    let nbrs: Vec<usize> = (g.neighbors(v) & active).iter().collect();
    let d = nbrs.len();
    if d == 0 {
        return true;
    }
    let mut assignment = vec![0usize; d];
    loop {
        let ok = (0..parts).all(|p| {
            let class: Vec<usize> = nbrs
                .iter()
                .zip(&assignment)
                .filter(|(_, &a)| a == p)
                .map(|(&w, _)| w)
                .collect();
            class
                .iter()
                .enumerate()
                .all(|(x, &u)| class[x + 1..].iter().all(|&w| g.has_edge(u, w)))
        });
        if ok {
            return true;
        }
        let mut i = 0;
        while i < d {
            assignment[i] += 1;
            if assignment[i] < parts {
                break;
            }
            assignment[i] = 0;
            i += 1;
        }
        if i == d {
            return false;
        }
    }
}

fn replay(
    g: &Graph,
    class: &str,
    bound: usize,
    steps: &[ReplayStep],
    final_colors: &[usize],
) -> Result<()> {
    let n = g.n();
    if final_colors.len() != n {
        return Err(invalid(format!(
            "final coloring has {} entries for {} vertices",
            final_colors.len(),
            n
        )));
    }
    if bound != chi_bound(clique_number(g)) {
        return Err(invalid("bound is not C(omega+1, 2) of the input graph"));
    }

    let mut active = g.vertex_set();
    let mut colors: Vec<Option<usize>> = vec![None; n];
    let mut palette_offset = 0usize;
    let mut peeled: Vec<usize> = Vec::new();

    for step in steps {
        match step {
            ReplayStep::Peel {
                vertex,
                kind,
                omega,
                degree,
                hole,
                leaf,
            } => {
                if !active.contains(*vertex) {
                    return Err(invalid(format!("peeled vertex {vertex} is not active")));
                }
                check_balloon(g, active, hole, *vertex, *leaf)?;
                let h = g.induced(active);
                let omega_now = clique_number(&h);
                if omega_now != *omega {
                    return Err(invalid(format!(
                        "recorded omega {omega} differs from recomputed {omega_now}"
                    )));
                }
                let deg_now = (g.neighbors(*vertex) & active).len();
                if deg_now != *degree {
                    return Err(invalid(format!(
                        "recorded degree {degree} differs from recomputed {deg_now}"
                    )));
                }
                let (parts, cap) = match kind.as_str() {
                    "bisimplicial" => (2, 2 * omega_now - 2),
                    "trisimplicial" => (3, 3 * omega_now - 3),
                    other => return Err(invalid(format!("unknown peel kind {other:?}"))),
                };
                if !neighborhood_is_union_of_cliques(g, active, *vertex, parts) {
                    return Err(invalid(format!(
                        "peeled vertex {vertex} is not {kind} in the current graph"
                    )));
                }
                if deg_now > cap {
                    return Err(invalid(format!(
                        "peel degree {deg_now} exceeds the {kind} cap {cap}"
                    )));
                }
                active.remove(*vertex);
                peeled.push(*vertex);
            }
            ReplayStep::Divide {
                a,
                b,
                colors_on_a,
                omega,
            } => {
                if a.intersects(*b) || (*a | *b) != active {
                    return Err(invalid("divide sides do not partition the active set"));
                }
                let omega_now = clique_number(&g.induced(active));
                if omega_now != *omega {
                    return Err(invalid(format!(
                        "recorded omega {omega} differs from recomputed {omega_now}"
                    )));
                }
                let ga = g.induced(*a);
                // perfection of the A side; definitional when small enough,
                // top-level chi = omega otherwise
                if a.len() <= 12 {
                    if !chi_equals_omega_hereditarily(&ga) {
                        return Err(invalid("divide side A is not perfect"));
                    }
                } else if clique_number(&ga) != exact_coloring(&ga).colors_used() {
                    return Err(invalid("divide side A has chi above omega"));
                }
                let ca = exact_coloring(&ga);
                if ca.colors_used() != *colors_on_a {
                    return Err(invalid(format!(
                        "recorded colors-on-a {colors_on_a} differs from chi {}",
                        ca.colors_used()
                    )));
                }
                if *colors_on_a > omega_now {
                    return Err(invalid(
                        "a division level used more colors than the current omega",
                    ));
                }
                for (i, orig) in Graph::induced_labels(*a).into_iter().enumerate() {
                    colors[orig] = Some(ca.colors[i] + palette_offset);
                }
                palette_offset += colors_on_a;
                active = *b;
            }
            ReplayStep::ExactFallback {
                active: recorded,
                omega,
                colors: pairs,
            } => {
                if *recorded != active {
                    return Err(invalid("fallback active set does not match replay state"));
                }
                let omega_now = clique_number(&g.induced(active));
                if omega_now != *omega {
                    return Err(invalid(format!(
                        "recorded omega {omega} differs from recomputed {omega_now}"
                    )));
                }
                let covered: VertexSet = pairs.iter().map(|&(v, _)| v).collect();
                if covered != active || pairs.len() != active.len() {
                    return Err(invalid("fallback colors do not cover the active set"));
                }
                for &(v, c) in pairs {
                    for w in (g.neighbors(v) & active).iter() {
                        if pairs.iter().any(|&(x, cx)| x == w && cx == c) {
                            return Err(invalid("fallback coloring is not proper"));
                        }
                    }
                }
                let mut distinct: Vec<usize> = pairs.iter().map(|&(_, c)| c).collect();
                distinct.sort_unstable();
                distinct.dedup();
                let cap = match omega_now {
                    0 | 1 => omega_now,
                    2 => 3,
                    _ => 4,
                };
                if omega_now <= 3 && distinct.len() > cap {
                    return Err(invalid(format!(
                        "fallback used {} colors above the small-omega cap {cap}",
                        distinct.len()
                    )));
                }
                for &(v, c) in pairs {
                    colors[v] = Some(c);
                }
                active = VertexSet::EMPTY;
            }
        }
    }

    if !active.is_empty() {
        return Err(invalid("steps leave part of the graph uncolored"));
    }

    // re-add the peeled vertices in reverse removal order
    for &u in peeled.iter().rev() {
        let mut taken = vec![false; bound];
        for w in g.neighbors(u).iter() {
            if let Some(c) = colors[w] {
                if c < bound {
                    taken[c] = true;
                }
            }
        }
        let c = taken
            .iter()
            .position(|t| !t)
            .ok_or_else(|| invalid(format!("no color below the bound left for vertex {u}")))?;
        colors[u] = Some(c);
    }

    // reconstruction must match the recorded final coloring bit-identically
    for v in 0..n {
        match colors[v] {
            Some(c) if c == final_colors[v] => {}
            got => {
                return Err(invalid(format!(
                    "replayed color {got:?} at vertex {v} differs from recorded {}",
                    final_colors[v]
                )))
            }
        }
    }
    for &(u, v) in &g.edges() {
        if final_colors[u] == final_colors[v] {
            return Err(invalid(format!("final coloring repeats on edge ({u},{v})")));
        }
    }
    if let Some(&c) = final_colors.iter().max() {
        if c >= bound {
            return Err(invalid(format!("color {c} is not below the bound {bound}")));
        }
    }
    // `class` is informational here; membership is the producer's check
    let _ = class;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{color_fork_butterfly, color_fork_gem, divide_and_color};
    use crate::patterns::PatternId;

    #[test]
    fn validates_gem_butterfly_and_division_certificates() {
        let b5 = PatternId::Balloon(5).graph();
        let (_, cert) = color_fork_gem(&b5).unwrap();
        let report = validate_certificate(&cert.to_text(&b5)).unwrap();
        assert_eq!(report.peels, 1);
        assert_eq!(report.colors_used, 3);

        let (_, cert) = color_fork_butterfly(&b5).unwrap();
        let report = validate_certificate(&cert.to_text(&b5)).unwrap();
        assert_eq!(report.fallbacks, 1);

        let c5 = Graph::cycle(5).unwrap();
        let (_, cert) = divide_and_color(&c5).unwrap();
        let report = validate_certificate(&cert.to_text(&c5)).unwrap();
        assert_eq!(report.divides, 2);
        assert_eq!(report.bound, 3);
    }

    #[test]
    fn rejects_tampered_final_coloring() {
        let c5 = Graph::cycle(5).unwrap();
        let (_, cert) = divide_and_color(&c5).unwrap();
        let text = cert.to_text(&c5);
        let tampered = text.replace("final ", "final 9,");
        assert!(validate_certificate(&tampered).is_err());
    }

    #[test]
    fn rejects_tampered_bound() {
        let c5 = Graph::cycle(5).unwrap();
        let (_, cert) = divide_and_color(&c5).unwrap();
        let tampered = cert.to_text(&c5).replace("bound 3", "bound 4");
        assert!(validate_certificate(&tampered).is_err());
    }

    #[test]
    fn rejects_wrong_graph() {
        let b5 = PatternId::Balloon(5).graph();
        let (_, cert) = color_fork_gem(&b5).unwrap();
        let text = cert.to_text(&b5);
        // swap in a different 7-vertex graph
        let other = crate::graph6::to_graph6(&Graph::cycle(7).unwrap());
        let g6 = crate::graph6::to_graph6(&b5);
        let tampered = text.replace(&g6, &other);
        assert!(validate_certificate(&tampered).is_err());
    }

    #[test]
    fn rejects_truncated_text() {
        let c5 = Graph::cycle(5).unwrap();
        let (_, cert) = divide_and_color(&c5).unwrap();
        let text = cert.to_text(&c5);
        let truncated = text.rsplit_once("end").unwrap().0;
        assert!(matches!(
            validate_certificate(truncated),
            Err(Error::CertificateParse { .. })
        ));
    }

    #[test]
    fn rejects_tampered_peel_fields() {
        let b5 = PatternId::Balloon(5).graph();
        let (_, cert) = color_fork_gem(&b5).unwrap();
        let text = cert.to_text(&b5);
        assert!(text.contains("omega=3"), "{text}");

        let wrong_omega = text.replacen("omega=3", "omega=4", 1);
        assert!(validate_certificate(&wrong_omega).is_err());

        let wrong_hole = text.replace("hole=0,1,2,3,4", "hole=0,1,2,3,5");
        assert!(validate_certificate(&wrong_hole).is_err());

        let wrong_degree = text.replace("degree=3", "degree=2");
        assert!(validate_certificate(&wrong_degree).is_err());
    }

    #[test]
    fn rejects_dropped_peel_step() {
        let b5 = PatternId::Balloon(5).graph();
        let (_, cert) = color_fork_gem(&b5).unwrap();
        let text = cert.to_text(&b5);
        let dropped: String = text
            .lines()
            .filter(|l| !l.starts_with("peel"))
            .map(|l| format!("{l}\n"))
            .collect();
        assert!(validate_certificate(&dropped).is_err());
    }
}
