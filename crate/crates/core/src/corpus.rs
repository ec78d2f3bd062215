//! A bundled corpus of named resolution graphs used by the CLI and the
//! test suites.
//!
//! Fixed graphs: `ex-dimim`, `ex-notclosed-g1`, `ex-notclosed-g2`,
//! `ex-nonfibration`, `ex-445`, `ex-whsing`, `ell-star`, `e8`; parametric
//! families `a<n>` and `d<n>` (all `-2` chains and forks).

use crate::graph::{parse_graph, GraphError, ResolutionGraph};

pub const NAMES: &[&str] = &[
    "ex-dimim",
    "ex-notclosed-g1",
    "ex-notclosed-g2",
    "ex-nonfibration",
    "ex-445",
    "ex-whsing",
    "ell-star",
    "e8",
    "a3",
    "a5",
    "d4",
    "d5",
];

/// Fetch a corpus graph by name; `a<n>` and `d<n>` accept any admissible
/// `n`.
pub fn get(name: &str) -> Result<ResolutionGraph, GraphError> {
    let text =
        source(name).ok_or_else(|| GraphError::Parse(format!("unknown corpus graph `{name}`")))?;
    parse_graph(&text)
}

/// The graph file contents for a corpus name, if known.
pub fn source(name: &str) -> Option<String> {
    match name {
        // chain -2 -1 -7 -2 with a -3 attached to the -1 vertex
        "ex-dimim" => Some(
            "vertex a -2\nvertex b -1\nvertex c -7\nvertex d -2\nvertex e -3\n\
             edge a b\nedge b c\nedge c d\nedge b e\n"
                .into(),
        ),
        // chain -3 -1 -13 -1 -3 with -2 cusps under both -1 vertices
        "ex-notclosed-g1" => Some(
            "vertex v1 -3\nvertex v2 -1\nvertex v3 -13\nvertex v4 -1\nvertex v5 -3\n\
             vertex c1 -2\nvertex c2 -2\n\
             edge v1 v2\nedge v2 v3\nedge v3 v4\nedge v4 v5\nedge v2 c1\nedge v4 c2\n"
                .into(),
        ),
        // same with one more -2 glued to the -13 vertex
        "ex-notclosed-g2" => Some(
            "vertex v1 -3\nvertex v2 -1\nvertex v3 -13\nvertex v4 -1\nvertex v5 -3\n\
             vertex c1 -2\nvertex c2 -2\nvertex p -2\n\
             edge v1 v2\nedge v2 v3\nedge v3 v4\nedge v4 v5\nedge v2 c1\nedge v4 c2\nedge v3 p\n"
                .into(),
        ),
        // chain -2 -1 -8 -2 with a -3 attached to the -1 vertex
        "ex-nonfibration" => Some(
            "vertex a -2\nvertex b -1\nvertex c -8\nvertex d -2\nvertex e -3\n\
             edge a b\nedge b c\nedge c d\nedge b e\n"
                .into(),
        ),
        // x^4 + y^4 + z^5: central -1 with four -5 legs
        "ex-445" => Some(star(-1, &[-5, -5, -5, -5])),
        // b0 = 4 with eight (8,1) legs
        "ex-whsing" => Some(star(-4, &[-8; 8])),
        // minimally elliptic star: central -1 with three -5 legs
        "ell-star" => Some(star(-1, &[-5, -5, -5])),
        "e8" => Some(
            "vertex v1 -2\nvertex v2 -2\nvertex v3 -2\nvertex v4 -2\nvertex v5 -2\n\
             vertex v6 -2\nvertex v7 -2\nvertex v8 -2\n\
             edge v1 v2\nedge v2 v3\nedge v3 v4\nedge v4 v5\nedge v5 v6\nedge v6 v7\nedge v5 v8\n"
                .into(),
        ),
        _ => {
            if let Some(n) = name.strip_prefix('a').and_then(|s| s.parse::<usize>().ok()) {
                if n >= 1 {
                    return Some(chain(n));
                }
            }
            if let Some(n) = name.strip_prefix('d').and_then(|s| s.parse::<usize>().ok()) {
                if n >= 4 {
                    return Some(dn(n));
                }
            }
            None
        }
    }
}

fn star(center: i64, legs: &[i64]) -> String {
    let mut s = format!("vertex c {center}\n");
    for (i, e) in legs.iter().enumerate() {
        s.push_str(&format!("vertex l{} {e}\n", i + 1));
    }
    for i in 0..legs.len() {
        s.push_str(&format!("edge c l{}\n", i + 1));
    }
    s
}

fn chain(n: usize) -> String {
    let mut s = String::new();
    for i in 1..=n {
        s.push_str(&format!("vertex v{i} -2\n"));
    }
    for i in 1..n {
        s.push_str(&format!("edge v{i} v{}\n", i + 1));
    }
    s
}

fn dn(n: usize) -> String {
    // fork: two -2 tails on the first vertex of a chain of n-2
    let mut s = String::new();
    for i in 1..=n - 2 {
        s.push_str(&format!("vertex v{i} -2\n"));
    }
    s.push_str("vertex f1 -2\nvertex f2 -2\n");
    for i in 1..n - 2 {
        s.push_str(&format!("edge v{i} v{}\n", i + 1));
    }
    s.push_str("edge v1 f1\nedge v1 f2\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn all_names_parse() {
        for name in NAMES {
            let g = get(name).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(g.n() >= 1);
        }
    }

    #[test]
    fn family_discriminants() {
        assert_eq!(get("a3").unwrap().discriminant(), BigInt::from(4));
        assert_eq!(get("a5").unwrap().discriminant(), BigInt::from(6));
        assert_eq!(get("d4").unwrap().discriminant(), BigInt::from(4));
        assert_eq!(get("e8").unwrap().discriminant(), BigInt::from(1));
        // star with four (5,1) legs over a -1 center: 5^4 * (1 - 4/5)
        assert_eq!(get("ex-445").unwrap().discriminant(), BigInt::from(125));
    }

    #[test]
    fn ex445_shape() {
        let g = get("ex-445").unwrap();
        assert_eq!(g.n(), 5);
        let c = g.vertex("c").unwrap();
        assert_eq!(g.degree(c), 4);
        assert_eq!(g.euler[c], -1);
    }
}
