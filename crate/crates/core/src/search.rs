//! Seeded randomized search for `[[n, 1, d]]` codes.
//!
//! A graph state on `n + 1` vertices whose nontrivial stabilizer elements
//! all have weight at least `d + 1` yields an `[[n, 1, ≥d]]` code once one
//! qubit is traced out. The search hill-climbs over graphs by flipping
//! single edges, minimizing the total weight deficit of the light
//! stabilizer elements, with random restarts.

use rand::Rng;

use crate::code::{distance, StabilizerCode, WeightBound};
use crate::error::{Error, Result};
use crate::rng::stream_rng;
use crate::symplectic::{BitMatrix, PauliString};

/// Largest vertex count the exhaustive cost function accepts.
pub const MAX_GRAPH_VERTICES: usize = 24;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GraphSearchConfig {
    pub seed: u64,
    pub restarts: usize,
    pub steps_per_restart: usize,
}

impl Default for GraphSearchConfig {
    fn default() -> Self {
        GraphSearchConfig {
            seed: 1,
            restarts: 200,
            steps_per_restart: 4000,
        }
    }
}

/// Adjacency matrix as one bit mask per vertex.
pub type Graph = Vec<u32>;

/// Sum of `min_weight - wt(S)` over the nontrivial stabilizer elements `S`
/// of the graph state that are lighter than `min_weight`.
pub fn weight_deficit(graph: &[u32], min_weight: usize) -> usize {
    let v = graph.len();
    let mut z = 0u32;
    let mut deficit = 0;
    for i in 1u32..(1u32 << v) {
        // Gray code: the subset differs from the previous one in one vertex
        let flip = i.trailing_zeros() as usize;
        z ^= graph[flip];
        let x = i ^ (i >> 1);
        let w = (x | z).count_ones() as usize;
        if w < min_weight {
            deficit += min_weight - w;
        }
    }
    deficit
}

/// Generators `X_v Z_{N(v)}` of the graph state.
pub fn graph_state_generators(graph: &[u32]) -> Vec<PauliString> {
    let v = graph.len();
    (0..v)
        .map(|a| {
            let mut s = PauliString::identity(v);
            s.set(a, crate::symplectic::Pauli::X);
            for b in 0..v {
                if graph[a] >> b & 1 == 1 {
                    s.set(b, crate::symplectic::Pauli::Z);
                }
            }
            s
        })
        .collect()
}

/// Traces out `qubit`: keeps the stabilizer elements acting trivially on it
/// and drops that qubit.
pub fn shorten(generators: &[PauliString], qubit: usize) -> Result<StabilizerCode> {
    let n = generators.first().map(PauliString::n).unwrap_or(0);
    if qubit >= n {
        return Err(Error::Precondition(format!(
            "qubit {qubit} out of range {n}"
        )));
    }
    let mut m = BitMatrix::from_rows(2 * n, generators.iter().map(|g| g.error_vector()).collect())?;
    let mut pivot_rows = Vec::new();
    for col in [qubit, n + qubit] {
        let Some(p) = (0..m.nrows()).find(|r| !pivot_rows.contains(r) && m.get(*r, col)) else {
            continue;
        };
        for r in 0..m.nrows() {
            if r != p && m.get(r, col) {
                m.add_row(p, r);
            }
        }
        pivot_rows.push(p);
    }
    let kept: Vec<PauliString> = (0..m.nrows())
        .filter(|r| !pivot_rows.contains(r))
        .map(|r| {
            let g = PauliString::from_error_vector(m.row(r)).expect("even length");
            let mut out = PauliString::identity(n - 1);
            for q in (0..n).filter(|&q| q != qubit) {
                out.set(if q < qubit { q } else { q - 1 }, g.get(q));
            }
            out
        })
        .collect();
    StabilizerCode::new(kept)
}

/// Hill-climbs for a graph on `vertices` vertices whose graph state has no
/// nontrivial stabilizer element lighter than `min_weight`.
pub fn search_graph_state(
    vertices: usize,
    min_weight: usize,
    cfg: &GraphSearchConfig,
) -> Result<Graph> {
    if !(2..=MAX_GRAPH_VERTICES).contains(&vertices) {
        return Err(Error::Precondition(format!(
            "graph search supports 2..={MAX_GRAPH_VERTICES} vertices, got {vertices}"
        )));
    }
    let mut best = usize::MAX;
    for restart in 0..cfg.restarts {
        let mut rng = stream_rng(cfg.seed, restart as u64);
        let mut g: Graph = vec![0; vertices];
        for a in 0..vertices {
            for b in a + 1..vertices {
                if rng.gen_bool(0.5) {
                    g[a] |= 1 << b;
                    g[b] |= 1 << a;
                }
            }
        }
        let mut cost = weight_deficit(&g, min_weight);
        for _ in 0..cfg.steps_per_restart {
            if cost == 0 {
                return Ok(g);
            }
            let a = rng.gen_range(0..vertices);
            let mut b = rng.gen_range(0..vertices - 1);
            if b >= a {
                b += 1;
            }
            g[a] ^= 1 << b;
            g[b] ^= 1 << a;
            let c = weight_deficit(&g, min_weight);
            if c <= cost || rng.gen_bool(0.05) {
                cost = c;
            } else {
                g[a] ^= 1 << b;
                g[b] ^= 1 << a;
            }
        }
        if cost == 0 {
            return Ok(g);
        }
        best = best.min(cost);
    }
    Err(Error::SearchFailed {
        attempts: cfg.restarts,
        detail: format!("lowest weight deficit reached: {best}"),
    })
}

/// Finds an `[[n, 1, ≥d]]` code and certifies it with the exhaustive
/// distance search.
pub fn search_code(n: usize, d: usize, cfg: &GraphSearchConfig) -> Result<StabilizerCode> {
    if d < 2 || d > n {
        return Err(Error::Precondition(format!(
            "need 2 <= d <= n, got d={d} n={n}"
        )));
    }
    let graph = search_graph_state(n + 1, d + 1, cfg)?;
    let code = shorten(&graph_state_generators(&graph), 0)?;
    match distance(&code, d - 1)? {
        WeightBound::Above(_) => Ok(code),
        WeightBound::Exact(w) => Err(Error::SearchFailed {
            attempts: cfg.restarts,
            detail: format!("shortened code has distance {w} < {d}"),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::distances;

    #[test]
    fn deficit_of_a_triangle() {
        // GHZ-like triangle: generators XZZ, ZXZ, ZZX, all of weight 3
        let g = vec![0b110, 0b101, 0b011];
        assert_eq!(weight_deficit(&g, 1), 0);
        // elements: XZZ ZXZ ZZX YYI YIY IYY XXX ... all have weight >= 2
        assert_eq!(weight_deficit(&g, 2), 0);
        let gens = graph_state_generators(&g);
        assert_eq!(gens[0].to_string(), "XZZ");
        assert_eq!(gens[2].to_string(), "ZZX");
    }

    #[test]
    fn deficit_matches_direct_enumeration() {
        let g: Graph = vec![0b0110, 0b1001, 0b1001, 0b0110];
        let gens = graph_state_generators(&g);
        let code = StabilizerCode::new(gens).unwrap();
        let direct: usize = code
            .elements()
            .iter()
            .skip(1)
            .map(|e| PauliString::from_error_vector(e).unwrap().weight())
            .filter(|&w| w < 3)
            .map(|w| 3 - w)
            .sum();
        assert_eq!(weight_deficit(&g, 3), direct);
    }

    #[test]
    fn shorten_gives_one_logical_qubit() {
        let g: Graph = vec![0b10010, 0b00101, 0b01010, 0b10100, 0b01001];
        let code = shorten(&graph_state_generators(&g), 0).unwrap();
        assert_eq!((code.n(), code.k()), (4, 1));
    }

    #[test]
    fn finds_a_five_qubit_code() {
        let cfg = GraphSearchConfig {
            seed: 3,
            restarts: 50,
            steps_per_restart: 500,
        };
        let code = search_code(5, 3, &cfg).unwrap();
        assert_eq!((code.n(), code.k()), (5, 1));
        assert_eq!(distances(&code, 5).unwrap().distance, WeightBound::Exact(3));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(search_code(5, 1, &GraphSearchConfig::default()).is_err());
        assert!(search_graph_state(30, 3, &GraphSearchConfig::default()).is_err());
    }
}
