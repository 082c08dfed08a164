//! Metric graphs and their combinatorial matrices.
//!
//! A [`MetricGraph`] is a finite, connected, simple network whose edges are
//! parameterized on `[0,1]`. Edge `j` carries a constant diffusivity `c_j > 0`
//! and a node-weight coefficient `mu_j > 0`. Every vertex has degree at least
//! two. From a validated graph we derive
//!
//! * the incidence matrices `Φ⁺`, `Φ⁻` (tails/heads), `Φ = Φ⁺ − Φ⁻`,
//! * the weighted incidence matrices `Φ_w±` with entries `μ_j c_j`,
//! * the combinatorial Laplacian `ℒ = D − 𝔸`,
//! * the random-walk transition matrix `ℙ = D⁻¹𝔸`,
//! * edge connectivity, diameter, and bipartition data.
//!
//! All matrices are dense; graphs of a few hundred vertices are the intended
//! scale.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use thiserror::Error;

/// Raw, unvalidated graph description as read from a file or built in code.
#[derive(Debug, Clone)]
pub struct RawGraph {
    pub vertices: Vec<String>,
    pub edges: Vec<RawEdge>,
}

/// One edge record of a [`RawGraph`].
#[derive(Debug, Clone)]
pub struct RawEdge {
    pub id: String,
    pub from: String,
    pub to: String,
    pub c: f64,
    pub mu: f64,
}

/// Validation errors. Each variant names the offending element.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum GraphError {
    #[error("graph has no vertices or no edges")]
    EmptyGraph,
    #[error("duplicate vertex id `{0}`")]
    DuplicateVertexId(String),
    #[error("duplicate edge id `{0}`")]
    DuplicateEdgeId(String),
    #[error("edge `{edge}` references unknown vertex `{vertex}`")]
    UnknownVertex { edge: String, vertex: String },
    #[error("edge `{0}` is a loop")]
    LoopEdge(String),
    #[error("edges `{first}` and `{second}` are parallel")]
    ParallelEdge { first: String, second: String },
    #[error("vertex `{vertex}` has degree {degree} < 2")]
    DegreeBelowTwo { vertex: String, degree: usize },
    #[error("edge `{edge}`: {field} = {value} is not positive")]
    NonpositiveWeight {
        edge: String,
        field: &'static str,
        value: f64,
    },
    #[error("vertex `{0}` is not reachable from `{1}`: graph is disconnected")]
    Disconnected(String, String),
}

/// A directed, parameterized edge of a validated graph.
///
/// The edge runs from `tail` (parameter 0) to `head` (parameter 1).
#[derive(Debug, Clone, PartialEq)]
pub struct Edge {
    pub id: String,
    pub tail: usize,
    pub head: usize,
    pub c: f64,
    pub mu: f64,
}

/// The five incidence-type matrices of a graph, all `n × m`.
///
/// `phi = phi_plus − phi_minus`; `phi_w_plus`/`phi_w_minus` carry `μ_j c_j`
/// exactly where `phi_plus`/`phi_minus` carry a one.
#[derive(Debug, Clone)]
pub struct IncidenceSet {
    pub phi_plus: DMatrix<f64>,
    pub phi_minus: DMatrix<f64>,
    pub phi: DMatrix<f64>,
    pub phi_w_plus: DMatrix<f64>,
    pub phi_w_minus: DMatrix<f64>,
}

/// Scalar graph parameters derived from the combinatorial structure.
#[derive(Debug, Clone)]
pub struct GraphParams {
    pub degrees: Vec<usize>,
    /// Common degree if the graph is regular.
    pub gamma: Option<usize>,
    /// The two color classes if the graph is bipartite.
    pub bipartition: Option<(Vec<usize>, Vec<usize>)>,
    /// Edge connectivity.
    pub eta: usize,
    /// Diameter in edge counts.
    pub diam: usize,
    /// Eigenvalues of `ℒ = D − 𝔸`, ascending.
    pub nu: Vec<f64>,
}

/// Immutable, validated metric graph.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricGraph {
    vertex_ids: Vec<String>,
    edges: Vec<Edge>,
    /// Edge indices incident to each vertex.
    incident: Vec<Vec<usize>>,
}

impl MetricGraph {
    /// Validate a raw description and normalize ids to dense indices.
    pub fn validate(raw: &RawGraph) -> Result<MetricGraph, GraphError> {
        if raw.vertices.is_empty() || raw.edges.is_empty() {
            return Err(GraphError::EmptyGraph);
        }
        let mut index = std::collections::BTreeMap::new();
        for (i, id) in raw.vertices.iter().enumerate() {
            if index.insert(id.clone(), i).is_some() {
                return Err(GraphError::DuplicateVertexId(id.clone()));
            }
        }
        let mut seen_edges = std::collections::BTreeMap::new();
        let mut seen_pairs: std::collections::BTreeMap<(usize, usize), String> =
            std::collections::BTreeMap::new();
        let mut edges = Vec::with_capacity(raw.edges.len());
        for e in &raw.edges {
            if seen_edges.insert(e.id.clone(), ()).is_some() {
                return Err(GraphError::DuplicateEdgeId(e.id.clone()));
            }
            let tail = *index.get(&e.from).ok_or_else(|| GraphError::UnknownVertex {
                edge: e.id.clone(),
                vertex: e.from.clone(),
            })?;
            let head = *index.get(&e.to).ok_or_else(|| GraphError::UnknownVertex {
                edge: e.id.clone(),
                vertex: e.to.clone(),
            })?;
            if tail == head {
                return Err(GraphError::LoopEdge(e.id.clone()));
            }
            // u->v and v->u count as parallel.
            let key = (tail.min(head), tail.max(head));
            if let Some(first) = seen_pairs.insert(key, e.id.clone()) {
                return Err(GraphError::ParallelEdge {
                    first,
                    second: e.id.clone(),
                });
            }
            if !(e.c > 0.0) || !e.c.is_finite() {
                return Err(GraphError::NonpositiveWeight {
                    edge: e.id.clone(),
                    field: "c",
                    value: e.c,
                });
            }
            if !(e.mu > 0.0) || !e.mu.is_finite() {
                return Err(GraphError::NonpositiveWeight {
                    edge: e.id.clone(),
                    field: "mu",
                    value: e.mu,
                });
            }
            edges.push(Edge {
                id: e.id.clone(),
                tail,
                head,
                c: e.c,
                mu: e.mu,
            });
        }
        let n = raw.vertices.len();
        let mut incident = vec![Vec::new(); n];
        for (j, e) in edges.iter().enumerate() {
            incident[e.tail].push(j);
            incident[e.head].push(j);
        }
        for (i, inc) in incident.iter().enumerate() {
            if inc.len() < 2 {
                return Err(GraphError::DegreeBelowTwo {
                    vertex: raw.vertices[i].clone(),
                    degree: inc.len(),
                });
            }
        }
        // Connectivity by BFS from vertex 0.
        let mut seen = vec![false; n];
        let mut queue = std::collections::VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &j in &incident[v] {
                let w = edges[j].other_end(v);
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(GraphError::Disconnected(
                raw.vertices[i].clone(),
                raw.vertices[0].clone(),
            ));
        }
        Ok(MetricGraph {
            vertex_ids: raw.vertices.clone(),
            edges,
            incident,
        })
    }

    /// Unit-weight graph from an explicit edge list on vertices `0..n`.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<MetricGraph, GraphError> {
        let weighted: Vec<(usize, usize, f64, f64)> =
            edges.iter().map(|&(a, b)| (a, b, 1.0, 1.0)).collect();
        Self::from_weighted_edge_list(n, &weighted)
    }

    /// Graph from an edge list with explicit `(tail, head, c, mu)` per edge.
    pub fn from_weighted_edge_list(
        n: usize,
        edges: &[(usize, usize, f64, f64)],
    ) -> Result<MetricGraph, GraphError> {
        let raw = RawGraph {
            vertices: (1..=n).map(|i| format!("v{i}")).collect(),
            edges: edges
                .iter()
                .enumerate()
                .map(|(j, &(a, b, c, mu))| RawEdge {
                    id: format!("e{}", j + 1),
                    from: format!("v{}", a + 1),
                    to: format!("v{}", b + 1),
                    c,
                    mu,
                })
                .collect(),
        };
        Self::validate(&raw)
    }

    /// The cycle `C_n` with unit weights.
    pub fn cycle(n: usize) -> MetricGraph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edge_list(n, &edges).expect("cycle is valid")
    }

    /// The complete graph `K_n` with unit weights.
    pub fn complete(n: usize) -> MetricGraph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                edges.push((i, j));
            }
        }
        Self::from_edge_list(n, &edges).expect("complete graph is valid")
    }

    /// Same graph with edge `j` reversed. Spectral output must not change.
    pub fn flip_edge(&self, j: usize) -> MetricGraph {
        let mut g = self.clone();
        let e = &mut g.edges[j];
        std::mem::swap(&mut e.tail, &mut e.head);
        g
    }

    /// Same graph with new diffusivities.
    pub fn with_speeds(&self, c: &[f64]) -> Result<MetricGraph, GraphError> {
        assert_eq!(c.len(), self.edge_count());
        let edges: Vec<(usize, usize, f64, f64)> = self
            .edges
            .iter()
            .zip(c)
            .map(|(e, &c)| (e.tail, e.head, c, e.mu))
            .collect();
        Self::from_weighted_edge_list(self.vertex_count(), &edges)
    }

    /// Same graph with new node weights.
    pub fn with_node_weights(&self, mu: &[f64]) -> Result<MetricGraph, GraphError> {
        assert_eq!(mu.len(), self.edge_count());
        let edges: Vec<(usize, usize, f64, f64)> = self
            .edges
            .iter()
            .zip(mu)
            .map(|(e, &mu)| (e.tail, e.head, e.c, mu))
            .collect();
        Self::from_weighted_edge_list(self.vertex_count(), &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_id(&self, i: usize) -> &str {
        &self.vertex_ids[i]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, j: usize) -> &Edge {
        &self.edges[j]
    }

    /// Indices of the edges incident to vertex `i`.
    pub fn incident_edges(&self, i: usize) -> &[usize] {
        &self.incident[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.incident[i].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.incident.iter().map(|v| v.len()).collect()
    }

    /// Common degree if the graph is regular.
    pub fn gamma(&self) -> Option<usize> {
        let d0 = self.degree(0);
        self.incident.iter().all(|v| v.len() == d0).then_some(d0)
    }

    pub fn is_unit_speed(&self) -> bool {
        self.edges.iter().all(|e| (e.c - 1.0).abs() < 1e-12)
    }

    /// Common node weight if all `μ_j` agree.
    pub fn uniform_mu(&self) -> Option<f64> {
        let mu0 = self.edges[0].mu;
        self.edges
            .iter()
            .all(|e| (e.mu - mu0).abs() < 1e-12 * mu0.abs())
            .then_some(mu0)
    }

    /// Total node weight `Σ_j μ_j`.
    pub fn total_mu(&self) -> f64 {
        self.edges.iter().map(|e| e.mu).sum()
    }

    /// The five incidence matrices, deterministic in the input ordering.
    pub fn incidence(&self) -> IncidenceSet {
        let (n, m) = (self.vertex_count(), self.edge_count());
        let mut phi_plus = DMatrix::zeros(n, m);
        let mut phi_minus = DMatrix::zeros(n, m);
        let mut phi_w_plus = DMatrix::zeros(n, m);
        let mut phi_w_minus = DMatrix::zeros(n, m);
        for (j, e) in self.edges.iter().enumerate() {
            phi_plus[(e.tail, j)] = 1.0;
            phi_minus[(e.head, j)] = 1.0;
            phi_w_plus[(e.tail, j)] = e.mu * e.c;
            phi_w_minus[(e.head, j)] = e.mu * e.c;
        }
        let phi = &phi_plus - &phi_minus;
        IncidenceSet {
            phi_plus,
            phi_minus,
            phi,
            phi_w_plus,
            phi_w_minus,
        }
    }

    /// Standard 0-1 adjacency matrix `𝔸`.
    pub fn adjacency(&self) -> DMatrix<f64> {
        let n = self.vertex_count();
        let mut a = DMatrix::zeros(n, n);
        for e in &self.edges {
            a[(e.tail, e.head)] = 1.0;
            a[(e.head, e.tail)] = 1.0;
        }
        a
    }

    /// Combinatorial Laplacian `ℒ = D − 𝔸`.
    pub fn laplacian(&self) -> DMatrix<f64> {
        let n = self.vertex_count();
        let mut l = -self.adjacency();
        for i in 0..n {
            l[(i, i)] = self.degree(i) as f64;
        }
        l
    }

    /// Eigenvalues of `ℒ`, ascending. `nu[0] = 0`, `nu[1] > 0` for connected graphs.
    pub fn laplacian_eigenvalues(&self) -> Vec<f64> {
        let eig = SymmetricEigen::new(self.laplacian());
        let mut nu: Vec<f64> = eig.eigenvalues.iter().copied().collect();
        nu.sort_by(|a, b| a.total_cmp(b));
        nu
    }

    /// Algebraic connectivity `ν₂`, the second-smallest eigenvalue of `ℒ`.
    pub fn nu2(&self) -> f64 {
        self.laplacian_eigenvalues()[1]
    }

    /// Random-walk transition matrix `ℙ = D⁻¹𝔸`. Row-stochastic; the spectrum
    /// is real because `ℙ` is similar to `D^{-1/2} 𝔸 D^{-1/2}`.
    pub fn transition_matrix(&self) -> DMatrix<f64> {
        let n = self.vertex_count();
        let mut p = self.adjacency();
        for i in 0..n {
            let d = self.degree(i) as f64;
            for k in 0..n {
                p[(i, k)] /= d;
            }
        }
        p
    }

    /// Eigenvalues of `ℙ`, descending, via the symmetric similarity transform.
    pub fn transition_eigenvalues(&self) -> Vec<f64> {
        let n = self.vertex_count();
        let a = self.adjacency();
        let mut s = DMatrix::zeros(n, n);
        for i in 0..n {
            for k in 0..n {
                let di = (self.degree(i) as f64).sqrt();
                let dk = (self.degree(k) as f64).sqrt();
                s[(i, k)] = a[(i, k)] / (di * dk);
            }
        }
        let eig = SymmetricEigen::new(s);
        let mut alphas: Vec<f64> = eig.eigenvalues.iter().copied().collect();
        alphas.sort_by(|a, b| b.total_cmp(a));
        alphas
    }

    /// Two color classes if the graph has no odd cycle, else `None`.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let n = self.vertex_count();
        let mut color = vec![u8::MAX; n];
        color[0] = 0;
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(v) = queue.pop_front() {
            for &j in &self.incident[v] {
                let w = self.edges[j].other_end(v);
                if color[w] == u8::MAX {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if color[w] == color[v] {
                    return None;
                }
            }
        }
        let left = (0..n).filter(|&i| color[i] == 0).collect();
        let right = (0..n).filter(|&i| color[i] == 1).collect();
        Some((left, right))
    }

    /// Edge connectivity `η`: exact, by unit-capacity max-flow from vertex 0
    /// to every other vertex.
    pub fn edge_connectivity(&self) -> usize {
        let n = self.vertex_count();
        (1..n)
            .map(|t| self.max_flow_unit(0, t))
            .min()
            .expect("graph has at least two vertices")
    }

    fn max_flow_unit(&self, s: usize, t: usize) -> usize {
        let n = self.vertex_count();
        // Residual capacities; each undirected edge becomes two unit arcs.
        let mut cap = vec![vec![0i32; n]; n];
        for e in &self.edges {
            cap[e.tail][e.head] = 1;
            cap[e.head][e.tail] = 1;
        }
        let mut flow = 0;
        loop {
            let mut parent = vec![usize::MAX; n];
            parent[s] = s;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for w in 0..n {
                    if parent[w] == usize::MAX && cap[v][w] > 0 {
                        parent[w] = v;
                        queue.push_back(w);
                    }
                }
            }
            if parent[t] == usize::MAX {
                return flow;
            }
            let mut w = t;
            while w != s {
                let v = parent[w];
                cap[v][w] -= 1;
                cap[w][v] += 1;
                w = v;
            }
            flow += 1;
        }
    }

    /// Diameter in edge counts: the maximum over vertex pairs of the
    /// shortest-path length.
    pub fn diameter(&self) -> usize {
        let n = self.vertex_count();
        let mut diam = 0;
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &j in &self.incident[v] {
                    let w = self.edges[j].other_end(v);
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
            diam = diam.max(*dist.iter().max().unwrap());
        }
        diam
    }

    /// All derived scalar parameters in one struct.
    pub fn params(&self) -> GraphParams {
        GraphParams {
            degrees: self.degrees(),
            gamma: self.gamma(),
            bipartition: self.bipartition(),
            eta: self.edge_connectivity(),
            diam: self.diameter(),
            nu: self.laplacian_eigenvalues(),
        }
    }

    /// Degree vector as a `DVector`, for matrix identities.
    pub fn degree_vector(&self) -> DVector<f64> {
        DVector::from_iterator(
            self.vertex_count(),
            self.incident.iter().map(|v| v.len() as f64),
        )
    }
}

impl Edge {
    /// The endpoint of this edge that is not `v`.
    pub fn other_end(&self, v: usize) -> usize {
        if self.tail == v {
            self.head
        } else {
            self.tail
        }
    }

    /// Parameter value (0 or 1) at which this edge meets vertex `v`.
    pub fn endpoint_parameter(&self, v: usize) -> f64 {
        if self.tail == v {
            0.0
        } else {
            1.0
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> MetricGraph {
        MetricGraph::complete(3)
    }

    #[test]
    fn validate_triangle() {
        let g = triangle();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn validate_single_edge_fails_degree() {
        let err = MetricGraph::from_edge_list(2, &[(0, 1)]).unwrap_err();
        assert!(matches!(err, GraphError::DegreeBelowTwo { .. }));
    }

    #[test]
    fn validate_disjoint_triangles_fails_connected() {
        let err = MetricGraph::from_edge_list(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)],
        )
        .unwrap_err();
        assert!(matches!(err, GraphError::Disconnected(..)));
    }

    #[test]
    fn validate_loop_and_parallel() {
        let err = MetricGraph::from_edge_list(3, &[(0, 0), (0, 1), (1, 2)]).unwrap_err();
        assert!(matches!(err, GraphError::LoopEdge(_)));
        // Reversed duplicates count as parallel.
        let err = MetricGraph::from_edge_list(3, &[(0, 1), (1, 0), (1, 2), (2, 0)]).unwrap_err();
        assert!(matches!(err, GraphError::ParallelEdge { .. }));
    }

    #[test]
    fn validate_nonpositive_weight() {
        let err =
            MetricGraph::from_weighted_edge_list(3, &[(0, 1, -1.0, 1.0), (1, 2, 1.0, 1.0), (2, 0, 1.0, 1.0)])
                .unwrap_err();
        assert!(matches!(
            err,
            GraphError::NonpositiveWeight { field: "c", .. }
        ));
    }

    #[test]
    fn incidence_column_sums_vanish() {
        let inc = triangle().incidence();
        for j in 0..3 {
            let s: f64 = (0..3).map(|i| inc.phi[(i, j)]).sum();
            assert_eq!(s, 0.0);
        }
    }

    #[test]
    fn incidence_rank_is_n_minus_one() {
        // Rank of the incidence matrix of a connected graph.
        let g = MetricGraph::cycle(4);
        let inc = g.incidence();
        let svd = inc.phi.clone().svd(false, false);
        let max = svd.singular_values.iter().cloned().fold(0.0, f64::max);
        let rank = svd
            .singular_values
            .iter()
            .filter(|&&s| s > 1e-10 * max)
            .count();
        assert_eq!(rank, g.vertex_count() - 1);
    }

    #[test]
    fn weighted_incidence_entries() {
        let g = MetricGraph::from_weighted_edge_list(
            3,
            &[(0, 1, 2.0, 3.0), (1, 2, 0.5, 1.5), (2, 0, 4.0, 0.25)],
        )
        .unwrap();
        let inc = g.incidence();
        for (j, e) in g.edges().iter().enumerate() {
            for i in 0..3 {
                let expect = if inc.phi_plus[(i, j)] == 1.0 { e.mu * e.c } else { 0.0 };
                assert_eq!(inc.phi_w_plus[(i, j)], expect);
                let expect = if inc.phi_minus[(i, j)] == 1.0 { e.mu * e.c } else { 0.0 };
                assert_eq!(inc.phi_w_minus[(i, j)], expect);
            }
        }
    }

    #[test]
    fn laplacian_k3_and_c4_eigenvalues() {
        let nu = triangle().laplacian_eigenvalues();
        for (got, want) in nu.iter().zip([0.0, 3.0, 3.0]) {
            assert!((got - want).abs() < 1e-12, "K3 nu: {nu:?}");
        }
        let nu = MetricGraph::cycle(4).laplacian_eigenvalues();
        for (got, want) in nu.iter().zip([0.0, 2.0, 2.0, 4.0]) {
            assert!((got - want).abs() < 1e-12, "C4 nu: {nu:?}");
        }
    }

    #[test]
    fn laplacian_row_sums_vanish() {
        for g in [triangle(), MetricGraph::cycle(5), MetricGraph::complete(4)] {
            let l = g.laplacian();
            let ones = DVector::from_element(g.vertex_count(), 1.0);
            assert!((&l * &ones).norm() < 1e-12);
        }
    }

    #[test]
    fn transition_matrix_k3_and_c4() {
        // 3x3 eigencomputation, cross-checked against 1 - nu/gamma.
        let g = triangle();
        let alphas = g.transition_eigenvalues();
        for (got, want) in alphas.iter().zip([1.0, -0.5, -0.5]) {
            assert!((got - want).abs() < 1e-12, "K3 alphas: {alphas:?}");
        }
        let from_nu: Vec<f64> = g
            .laplacian_eigenvalues()
            .iter()
            .map(|nu| 1.0 - nu / 2.0)
            .collect();
        for a in &alphas {
            assert!(from_nu.iter().any(|b| (a - b).abs() < 1e-12));
        }

        let alphas = MetricGraph::cycle(4).transition_eigenvalues();
        for (got, want) in alphas.iter().zip([1.0, 0.0, 0.0, -1.0]) {
            assert!((got - want).abs() < 1e-12, "C4 alphas: {alphas:?}");
        }
    }

    #[test]
    fn transition_rows_sum_to_one() {
        for g in [triangle(), MetricGraph::cycle(6), MetricGraph::complete(5)] {
            let p = g.transition_matrix();
            for i in 0..g.vertex_count() {
                let s: f64 = (0..g.vertex_count()).map(|k| p[(i, k)]).sum();
                assert!((s - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn bipartition_examples() {
        let (left, right) = MetricGraph::cycle(4).bipartition().unwrap();
        assert_eq!(left, vec![0, 2]);
        assert_eq!(right, vec![1, 3]);
        assert!(triangle().bipartition().is_none());
    }

    /// Brute-force edge connectivity: smallest edge set whose removal disconnects.
    fn eta_brute_force(g: &MetricGraph) -> usize {
        let m = g.edge_count();
        for size in 1..=m {
            // All subsets of the given size.
            for mask in 0u32..(1 << m) {
                if mask.count_ones() as usize != size {
                    continue;
                }
                let kept: Vec<(usize, usize)> = g
                    .edges()
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| mask & (1 << j) == 0)
                    .map(|(_, e)| (e.tail, e.head))
                    .collect();
                if !is_connected_edge_list(g.vertex_count(), &kept) {
                    return size;
                }
            }
        }
        m
    }

    fn is_connected_edge_list(n: usize, edges: &[(usize, usize)]) -> bool {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    #[test]
    fn edge_connectivity_examples() {
        assert_eq!(MetricGraph::cycle(5).edge_connectivity(), 2);
        assert_eq!(MetricGraph::cycle(7).edge_connectivity(), 2);
        let k4 = MetricGraph::complete(4);
        assert_eq!(k4.edge_connectivity(), 3);
        assert_eq!(k4.edge_connectivity(), eta_brute_force(&k4));
        let k3 = triangle();
        assert_eq!(k3.edge_connectivity(), 2);
        assert_eq!(k3.edge_connectivity(), eta_brute_force(&k3));
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(MetricGraph::complete(4).diameter(), 1);
        assert_eq!(MetricGraph::complete(6).diameter(), 1);
        assert_eq!(MetricGraph::cycle(4).diameter(), 2);
        assert_eq!(MetricGraph::cycle(6).diameter(), 3);
    }

    #[test]
    fn degree_identity() {
        for g in [triangle(), MetricGraph::cycle(6), MetricGraph::complete(5)] {
            let inc = g.incidence();
            let ones = DVector::from_element(g.edge_count(), 1.0);
            let deg = &inc.phi_plus * &ones + &inc.phi_minus * &ones;
            assert_eq!(deg, g.degree_vector());
        }
    }

    #[test]
    fn laplacian_equals_phi_phi_t_for_unit_weights() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let n = rng.random_range(3..=7);
            let g = crate::enumerate::random_connected_min_deg2(n, &mut rng);
            let inc = g.incidence();
            let lhs = g.laplacian();
            let rhs = &inc.phi * inc.phi.transpose();
            assert!((lhs - rhs).abs().max() < 1e-12);
        }
    }

    #[test]
    fn transition_spectrum_in_unit_interval_and_one_simple() {
        for n in [3usize, 4, 5, 6] {
            let g = MetricGraph::complete(n);
            let alphas = g.transition_eigenvalues();
            assert!(alphas.iter().all(|a| (-1.0 - 1e-12..=1.0 + 1e-12).contains(a)));
            let ones = alphas.iter().filter(|a| (*a - 1.0).abs() < 1e-9).count();
            assert_eq!(ones, 1);
        }
    }

    #[test]
    fn flip_edge_preserves_combinatorics() {
        let g = MetricGraph::cycle(5);
        let f = g.flip_edge(2);
        assert_eq!(g.laplacian(), f.laplacian());
        assert_eq!(g.degrees(), f.degrees());
    }
}
