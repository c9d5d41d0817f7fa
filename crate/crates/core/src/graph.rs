//! The `r`-noncommuting graph: vertex set all of `R`, distinct `x`, `y` adjacent when
//! neither `[x, y]` nor `[y, x]` equals `r`.

use std::fmt::Write as _;

#[cfg(feature = "parallel")]
use crate::commutators::PARALLEL_MIN_ORDER;
use crate::commutators::pr_bruteforce;
use crate::error::{Error, Result};
use crate::probability::{ExactProbability, Fraction};
use crate::ring::{FiniteRing, RingElement};

pub const MAX_GRAPH_ORDER: usize = 1024;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NoncommGraph {
    r: RingElement,
    vertices: Vec<RingElement>,
    /// Index pairs `(i, j)` with `i < j`, sorted.
    edges: Vec<(usize, usize)>,
}

impl NoncommGraph {
    pub fn r(&self) -> &RingElement {
        &self.r
    }

    pub fn vertices(&self) -> &[RingElement] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        let key = if i < j { (i, j) } else { (j, i) };
        self.edges.binary_search(&key).is_ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for &(i, j) in &self.edges {
            deg[i] += 1;
            deg[j] += 1;
        }
        deg
    }
}

fn check_graph_order(ring: &FiniteRing) -> Result<()> {
    if ring.order() > MAX_GRAPH_ORDER {
        return Err(Error::OrderOverflow {
            order: ring.order() as u64,
            limit: MAX_GRAPH_ORDER as u64,
        });
    }
    Ok(())
}

pub fn build_graph(ring: &FiniteRing, r: &RingElement) -> Result<NoncommGraph> {
    check_graph_order(ring)?;
    ring.shape().check(r)?;
    let elems = ring.elements();
    let row = |i: usize| -> Vec<(usize, usize)> {
        (i + 1..elems.len())
            .filter(|&j| {
                let c = ring.comm(&elems[i], &elems[j]);
                // [y, x] = -[x, y]
                &c != r && &ring.shape().neg(&c) != r
            })
            .map(|j| (i, j))
            .collect()
    };
    #[cfg(feature = "parallel")]
    let edges = if elems.len() >= PARALLEL_MIN_ORDER {
        use rayon::prelude::*;
        (0..elems.len()).into_par_iter().flat_map_iter(row).collect()
    } else {
        (0..elems.len()).flat_map(row).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let edges = (0..elems.len()).flat_map(row).collect();
    Ok(NoncommGraph {
        r: r.clone(),
        vertices: elems.to_vec(),
        edges,
    })
}

/// Edge counts of the graph for every `r` at once, indexed by element position.
///
/// An unordered pair `{x, y}` is a non-edge exactly for `r` in `{[x, y], -[x, y]}`.
pub fn edge_counts(ring: &FiniteRing) -> Result<Vec<u64>> {
    check_graph_order(ring)?;
    let n = ring.order();
    let elems = ring.elements();
    let mut missing = vec![0u64; n];
    for i in 0..n {
        for j in i + 1..n {
            let c = ring.comm(&elems[i], &elems[j]);
            let minus = ring.shape().neg(&c);
            missing[ring.index_of(&c)] += 1;
            if minus != c {
                missing[ring.index_of(&minus)] += 1;
            }
        }
    }
    let pairs = (n * (n - 1) / 2) as u64;
    Ok(missing.into_iter().map(|m| pairs - m).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeCase {
    /// `r = 0`
    Zero,
    /// `r != 0`, `2r = 0`
    Involutive,
    /// `2r != 0`
    Generic,
}

impl EdgeCase {
    pub fn of(ring: &FiniteRing, r: &RingElement) -> Self {
        if r.is_zero() {
            EdgeCase::Zero
        } else if ring.shape().add(r, r).is_zero() {
            EdgeCase::Involutive
        } else {
            EdgeCase::Generic
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeIdentityReport {
    pub case: EdgeCase,
    pub edge_count: u64,
    pub pr_r: ExactProbability,
    /// Right-hand side computed from the edge count.
    pub from_edges: Fraction,
    pub holds: bool,
}

/// The probability predicted by an edge count in the given case.
pub fn probability_from_edges(case: EdgeCase, order: u64, edge_count: u64) -> Fraction {
    let n = order as i64;
    let one = Fraction::from_integer(1);
    let edge_term = Fraction::new(2 * edge_count as i64, n * n);
    match case {
        EdgeCase::Zero => one - edge_term,
        EdgeCase::Involutive => one - Fraction::new(1, n) - edge_term,
        EdgeCase::Generic => (one - Fraction::new(1, n) - edge_term) / Fraction::from_integer(2),
    }
}

pub fn identity_report(
    ring: &FiniteRing,
    r: &RingElement,
    edge_count: u64,
    pr_r: ExactProbability,
) -> EdgeIdentityReport {
    let case = EdgeCase::of(ring, r);
    let from_edges = probability_from_edges(case, ring.order() as u64, edge_count);
    EdgeIdentityReport {
        case,
        edge_count,
        pr_r,
        from_edges,
        holds: from_edges == pr_r.value(),
    }
}

pub fn verify_edge_identity(ring: &FiniteRing, r: &RingElement) -> Result<EdgeIdentityReport> {
    let graph = build_graph(ring, r)?;
    let pr_r = pr_bruteforce(ring, r)?;
    Ok(identity_report(ring, r, graph.edge_count() as u64, pr_r))
}

/// Deterministic DOT text: every vertex declared, then edges in lexicographic order.
pub fn export_dot(graph: &NoncommGraph) -> String {
    let mut out = String::from("graph G {\n");
    for v in &graph.vertices {
        let _ = writeln!(out, "  \"{v}\";");
    }
    for &(i, j) in &graph.edges {
        let _ = writeln!(out, "  \"{}\" -- \"{}\";", graph.vertices[i], graph.vertices[j]);
    }
    out.push_str("}\n");
    out
}
