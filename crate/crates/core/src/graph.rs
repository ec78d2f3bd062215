//! Resolution graphs and their intersection lattice.
//!
//! A [`ResolutionGraph`] is a decorated tree: each vertex carries an Euler
//! number (the self-intersection of the corresponding exceptional curve),
//! all genus decorations are zero, and the intersection matrix `M` with
//! `M_vv = e_v`, `M_vw = 1` for edges must be negative definite.
//!
//! Cycles are stored in the `E`-basis, indexed by the graph's vertex order.
//! [`IntCycle`] has integer coordinates, [`RatCycle`] rational ones; the
//! dual lattice `L'` consists of those rational cycles pairing integrally
//! with every `E_v`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::linalg::{det_bareiss, is_positive_definite, Mat};
use crate::rat::{is_int, rat_i, rat_str, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    DuplicateVertex(String),
    NotATree,
    NotNegativeDefinite,
    GenusNonzero(String),
    UnknownVertex(String),
    Parse(String),
    NotInDualLattice,
    NotStarShaped,
    NonEffectiveZ,
    EcaEmpty,
    ExponentOutOfBound,
    BoundInsufficient,
    NotStabilized,
    ComponentNotSupported(String),
    NotCoprime,
    BadRange,
    PoleAtEvaluationPoint,
    InconsistentTruncation,
    TruncationInsufficient,
    HypothesisViolated(String),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::DuplicateVertex(v) => write!(f, "DuplicateVertex: {v}"),
            GraphError::NotATree => write!(f, "NotATree"),
            GraphError::NotNegativeDefinite => write!(f, "NotNegativeDefinite"),
            GraphError::GenusNonzero(v) => write!(f, "GenusNonzero: {v}"),
            GraphError::UnknownVertex(v) => write!(f, "UnknownVertex: {v}"),
            GraphError::Parse(m) => write!(f, "Parse: {m}"),
            GraphError::NotInDualLattice => write!(f, "NotInDualLattice"),
            GraphError::NotStarShaped => write!(f, "NotStarShaped"),
            GraphError::NonEffectiveZ => write!(f, "NonEffectiveZ"),
            GraphError::EcaEmpty => write!(f, "EcaEmpty"),
            GraphError::ExponentOutOfBound => write!(f, "ExponentOutOfBound"),
            GraphError::BoundInsufficient => write!(f, "BoundInsufficient"),
            GraphError::NotStabilized => write!(f, "NotStabilized"),
            GraphError::ComponentNotSupported(c) => write!(f, "ComponentNotSupported: {c}"),
            GraphError::NotCoprime => write!(f, "NotCoprime"),
            GraphError::BadRange => write!(f, "BadRange"),
            GraphError::PoleAtEvaluationPoint => write!(f, "PoleAtEvaluationPoint"),
            GraphError::InconsistentTruncation => write!(f, "InconsistentTruncation"),
            GraphError::TruncationInsufficient => write!(f, "TruncationInsufficient"),
            GraphError::HypothesisViolated(m) => write!(f, "HypothesisViolated: {m}"),
        }
    }
}

impl std::error::Error for GraphError {}

/// Integer cycle in the `E`-basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntCycle(pub Vec<BigInt>);

/// Rational cycle in the `E`-basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatCycle(pub Vec<Rat>);

impl IntCycle {
    pub fn zero(n: usize) -> Self {
        IntCycle(vec![BigInt::zero(); n])
    }

    pub fn from_i64(v: &[i64]) -> Self {
        IntCycle(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn to_rat(&self) -> RatCycle {
        RatCycle(
            self.0
                .iter()
                .map(|x| Rat::from_integer(x.clone()))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    pub fn is_effective(&self) -> bool {
        self.0.iter().all(|x| !x.is_negative())
    }

    /// `self >= other` coordinatewise.
    pub fn ge(&self, other: &IntCycle) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    /// Coordinatewise minimum.
    pub fn meet(&self, other: &IntCycle) -> IntCycle {
        IntCycle(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.min(b).clone())
                .collect(),
        )
    }

    pub fn add(&self, other: &IntCycle) -> IntCycle {
        IntCycle(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, _)| i)
            .collect()
    }
}

impl RatCycle {
    pub fn zero(n: usize) -> Self {
        RatCycle(vec![Rat::zero(); n])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    pub fn add(&self, other: &RatCycle) -> RatCycle {
        RatCycle(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &RatCycle) -> RatCycle {
        RatCycle(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> RatCycle {
        RatCycle(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, s: &Rat) -> RatCycle {
        RatCycle(self.0.iter().map(|a| a * s).collect())
    }

    pub fn add_int(&self, other: &IntCycle) -> RatCycle {
        RatCycle(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + Rat::from_integer(b.clone()))
                .collect(),
        )
    }

    /// Integer part test: all coordinates integers.
    pub fn is_integral(&self) -> bool {
        self.0.iter().all(is_int)
    }

    pub fn to_int(&self) -> Option<IntCycle> {
        if self.is_integral() {
            Some(IntCycle(self.0.iter().map(|x| x.numer().clone()).collect()))
        } else {
            None
        }
    }

    /// `self >= other` coordinatewise.
    pub fn ge(&self, other: &RatCycle) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    pub fn meet(&self, other: &RatCycle) -> RatCycle {
        RatCycle(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.min(b).clone())
                .collect(),
        )
    }
}

/// A validated resolution graph.
#[derive(Debug)]
pub struct ResolutionGraph {
    ids: Vec<String>,
    index: BTreeMap<String, usize>,
    pub euler: Vec<i64>,
    pub edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    /// lazily computed `M^{-1}` and `Z_K`, reused by the hot lattice loops
    cache: std::sync::OnceLock<(Mat, RatCycle)>,
}

impl Clone for ResolutionGraph {
    fn clone(&self) -> Self {
        ResolutionGraph {
            ids: self.ids.clone(),
            index: self.index.clone(),
            euler: self.euler.clone(),
            edges: self.edges.clone(),
            adj: self.adj.clone(),
            cache: std::sync::OnceLock::new(),
        }
    }
}

impl ResolutionGraph {
    /// Build and validate a graph from vertex ids, Euler numbers and edges
    /// given by id pairs.
    pub fn new(
        vertices: Vec<(String, i64)>,
        edge_ids: Vec<(String, String)>,
    ) -> Result<Self, GraphError> {
        let mut ids = Vec::with_capacity(vertices.len());
        let mut euler = Vec::with_capacity(vertices.len());
        let mut index = BTreeMap::new();
        for (id, e) in vertices {
            if index.insert(id.clone(), ids.len()).is_some() {
                return Err(GraphError::DuplicateVertex(id));
            }
            ids.push(id);
            euler.push(e);
        }
        let n = ids.len();
        if n == 0 {
            return Err(GraphError::NotATree);
        }
        let mut edges = Vec::with_capacity(edge_ids.len());
        let mut adj = vec![Vec::new(); n];
        for (a, b) in edge_ids {
            let ia = *index.get(&a).ok_or(GraphError::UnknownVertex(a.clone()))?;
            let ib = *index.get(&b).ok_or(GraphError::UnknownVertex(b.clone()))?;
            if ia == ib {
                return Err(GraphError::NotATree);
            }
            edges.push((ia.min(ib), ia.max(ib)));
            adj[ia].push(ib);
            adj[ib].push(ia);
        }
        let g = ResolutionGraph {
            ids,
            index,
            euler,
            edges,
            adj,
            cache: std::sync::OnceLock::new(),
        };
        if !g.is_tree() {
            return Err(GraphError::NotATree);
        }
        // -M must be positive definite.
        let neg_m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| -g.m_entry(i, j)).collect())
            .collect();
        if !is_positive_definite(&neg_m) {
            return Err(GraphError::NotNegativeDefinite);
        }
        Ok(g)
    }

    fn is_tree(&self) -> bool {
        let n = self.ids.len();
        if self.edges.len() != n - 1 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    pub fn n(&self) -> usize {
        self.ids.len()
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn id(&self, v: usize) -> &str {
        &self.ids[v]
    }

    pub fn vertex(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Valency of a vertex.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    fn m_entry(&self, i: usize, j: usize) -> BigInt {
        if i == j {
            BigInt::from(self.euler[i])
        } else if self.adj[i].contains(&j) {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    }

    /// The intersection matrix `M` as a rational matrix.
    pub fn intersection_matrix(&self) -> Mat {
        let n = self.n();
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, Rat::from_integer(self.m_entry(i, j)));
            }
        }
        m
    }

    /// The intersection pairing `(x, y) = x^T M y`, exact.
    pub fn pairing(&self, x: &RatCycle, y: &RatCycle) -> Rat {
        assert_eq!(x.0.len(), self.n());
        assert_eq!(y.0.len(), self.n());
        let mut s = Rat::zero();
        for i in 0..self.n() {
            if x.0[i].is_zero() {
                continue;
            }
            // diagonal
            s += &x.0[i] * rat_i(self.euler[i]) * &y.0[i];
            for &j in &self.adj[i] {
                s += &x.0[i] * &y.0[j];
            }
        }
        s
    }

    /// `(x, E_v)` for all `v`, i.e. the vector `M x`.
    pub fn pair_with_base(&self, x: &RatCycle) -> Vec<Rat> {
        (0..self.n())
            .map(|v| {
                let mut s = &x.0[v] * rat_i(self.euler[v]);
                for &w in &self.adj[v] {
                    s += &x.0[w];
                }
                s
            })
            .collect()
    }

    /// Membership in the dual lattice `L'`: all pairings with `E_v` integral.
    pub fn in_dual_lattice(&self, x: &RatCycle) -> bool {
        self.pair_with_base(x).iter().all(is_int)
    }

    fn cached(&self) -> &(Mat, RatCycle) {
        self.cache.get_or_init(|| {
            let m = self.intersection_matrix();
            let inv = m
                .inverse()
                .expect("negative definite matrices are invertible");
            let b: Vec<Rat> = (0..self.n()).map(|v| rat_i(self.euler[v] + 2)).collect();
            let zk = RatCycle(
                m.solve(&b)
                    .expect("negative definite matrices are invertible"),
            );
            (inv, zk)
        })
    }

    /// `M^{-1}`, computed once per graph.
    pub fn inverse_matrix(&self) -> &Mat {
        &self.cached().0
    }

    /// The dual base: `E*_v` is the `v`-th column of `-M^{-1}`.
    pub fn dual_base(&self) -> Vec<RatCycle> {
        let inv = self.inverse_matrix();
        (0..self.n())
            .map(|v| RatCycle((0..self.n()).map(|w| -inv.at(w, v)).collect()))
            .collect()
    }

    /// `det(-M)`, the order of `H = L'/L`.
    pub fn discriminant(&self) -> BigInt {
        let n = self.n();
        let neg_m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| -self.m_entry(i, j)).collect())
            .collect();
        det_bareiss(&neg_m)
    }

    /// The (anti)canonical cycle: the unique solution of
    /// `(Z_K, E_v) = e_v + 2` for all `v`.
    pub fn canonical_cycle(&self) -> RatCycle {
        self.cached().1.clone()
    }

    /// Riemann-Roch: `chi(x) = -(x, x - Z_K)/2`.
    pub fn chi(&self, x: &RatCycle) -> Rat {
        let zk = &self.cached().1;
        let d = x.sub(zk);
        -self.pairing(x, &d) / rat_i(2)
    }

    /// The representative of the class of `l' in L'/L` inside the semi-open
    /// cube `[0,1)^n`.
    pub fn class_rep(&self, lp: &RatCycle) -> Result<RatCycle, GraphError> {
        if !self.in_dual_lattice(lp) {
            return Err(GraphError::NotInDualLattice);
        }
        Ok(RatCycle(lp.0.iter().map(|x| x - x.floor()).collect()))
    }

    /// Lipman (antinef) cone membership: `(l', E_v) <= 0` for all `v`.
    /// `ECa^{l'}(Z)` is nonempty iff `-l'` lies here, i.e. `l'` in `-S'`.
    pub fn in_lipman_cone(&self, lp: &RatCycle) -> bool {
        self.pair_with_base(lp).iter().all(|p| !p.is_positive())
    }

    /// `E*`-coordinates of `l'`: `a_v = -(l', E_v)`.  For `l'` in the Lipman
    /// cone these are the nonnegative exponents of the monoid decomposition
    /// `l' = sum a_v E*_v`.
    pub fn dual_coords(&self, lp: &RatCycle) -> Vec<Rat> {
        self.pair_with_base(lp).iter().map(|p| -p).collect()
    }

    /// The induced subgraph on a vertex subset, which must be nonempty and
    /// connected; vertex ids are preserved.
    pub fn induced_subgraph(&self, verts: &[usize]) -> Result<ResolutionGraph, GraphError> {
        let set: std::collections::BTreeSet<usize> = verts.iter().copied().collect();
        let vertices: Vec<(String, i64)> = verts
            .iter()
            .map(|&v| (self.ids[v].clone(), self.euler[v]))
            .collect();
        let edges: Vec<(String, String)> = self
            .edges
            .iter()
            .filter(|(a, b)| set.contains(a) && set.contains(b))
            .map(|&(a, b)| (self.ids[a].clone(), self.ids[b].clone()))
            .collect();
        ResolutionGraph::new(vertices, edges)
    }

    /// Connected components of the induced subgraph on `verts`.
    pub fn components(&self, verts: &[usize]) -> Vec<Vec<usize>> {
        let set: std::collections::BTreeSet<usize> = verts.iter().copied().collect();
        let mut seen: std::collections::BTreeSet<usize> = std::collections::BTreeSet::new();
        let mut comps = Vec::new();
        for &start in verts {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = vec![start];
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if set.contains(&w) && !seen.contains(&w) {
                        seen.insert(w);
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort();
            comps.push(comp);
        }
        comps.sort();
        comps
    }

    /// Cycle keyed by vertex id, for I/O.
    pub fn cycle_map(&self, x: &RatCycle) -> BTreeMap<String, String> {
        self.ids
            .iter()
            .zip(&x.0)
            .map(|(id, v)| (id.clone(), rat_str(v)))
            .collect()
    }

    pub fn cycle_from_map(&self, m: &BTreeMap<String, Rat>) -> Result<RatCycle, GraphError> {
        let mut out = RatCycle::zero(self.n());
        for (id, v) in m {
            let i = self
                .vertex(id)
                .ok_or_else(|| GraphError::UnknownVertex(id.clone()))?;
            out.0[i] = v.clone();
        }
        Ok(out)
    }
}

/// Parse the line-oriented graph file format:
/// `vertex <id> <euler> [genus]` lines, then `edge <id> <id>` lines,
/// `#` comments.
pub fn parse_graph(text: &str) -> Result<ResolutionGraph, GraphError> {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "vertex" => {
                if toks.len() < 3 || toks.len() > 4 {
                    return Err(GraphError::Parse(format!(
                        "line {}: expected `vertex <id> <euler> [genus]`",
                        lineno + 1
                    )));
                }
                let e: i64 = toks[2].parse().map_err(|_| {
                    GraphError::Parse(format!("line {}: bad euler number", lineno + 1))
                })?;
                if toks.len() == 4 {
                    let gen: i64 = toks[3].parse().map_err(|_| {
                        GraphError::Parse(format!("line {}: bad genus", lineno + 1))
                    })?;
                    if gen != 0 {
                        return Err(GraphError::GenusNonzero(toks[1].to_string()));
                    }
                }
                vertices.push((toks[1].to_string(), e));
            }
            "edge" => {
                if toks.len() != 3 {
                    return Err(GraphError::Parse(format!(
                        "line {}: expected `edge <id> <id>`",
                        lineno + 1
                    )));
                }
                edges.push((toks[1].to_string(), toks[2].to_string()));
            }
            other => {
                return Err(GraphError::Parse(format!(
                    "line {}: unknown directive `{other}`",
                    lineno + 1
                )));
            }
        }
    }
    ResolutionGraph::new(vertices, edges)
}

/// JSON-friendly view of a graph.
#[derive(Serialize)]
pub struct GraphJson {
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<(String, String)>,
    pub discriminant: String,
    /// Intersection matrix rows, in vertex order.
    pub matrix: Vec<Vec<i64>>,
}

#[derive(Serialize)]
pub struct VertexJson {
    pub id: String,
    pub euler: i64,
    pub degree: usize,
}

impl ResolutionGraph {
    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            vertices: (0..self.n())
                .map(|v| VertexJson {
                    id: self.ids[v].clone(),
                    euler: self.euler[v],
                    degree: self.degree(v),
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|&(a, b)| (self.ids[a].clone(), self.ids[b].clone()))
                .collect(),
            discriminant: self.discriminant().to_string(),
            matrix: (0..self.n())
                .map(|i| {
                    (0..self.n())
                        .map(|j| {
                            use num_traits::ToPrimitive;
                            self.m_entry(i, j).to_i64().expect("euler numbers fit i64")
                        })
                        .collect()
                })
                .collect(),
        }
    }
}
