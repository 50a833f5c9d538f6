//! Surgery presentations: Seifert invariants, star-shaped plumbing graphs,
//! almost simple linear graphs, exact tree determinants, and DOT/JSON
//! export.
//!
//! The intersection matrix of a plumbing graph has the vertex weights on
//! the diagonal and 1 in the entries of adjacent vertices; a plumbed
//! homology sphere is detected by `|det| = 1`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::arith::{cmul, csub, gcd, mod_inv, neg_cont_frac};
use crate::error::Error;
use crate::triples::Triple;
use crate::Result;

/// A Seifert triple `1 < p < q < r`, pairwise coprime — the relaxed input
/// for the star presentation (no almost-simple-linear condition).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SeifertTriple {
    p: i64,
    q: i64,
    r: i64,
}

impl SeifertTriple {
    pub fn new(p: i64, q: i64, r: i64) -> Result<Self> {
        if !(1 < p && p < q && q < r) {
            return Err(Error::InvalidArgument("need 1 < p < q < r"));
        }
        for (a, b) in [(p, q), (q, r), (r, p)] {
            if gcd(a, b) != 1 {
                return Err(Error::NotCoprime { a, b });
            }
        }
        Ok(SeifertTriple { p, q, r })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn r(&self) -> i64 {
        self.r
    }
}

impl From<&Triple> for SeifertTriple {
    fn from(t: &Triple) -> Self {
        SeifertTriple {
            p: t.p(),
            q: t.q(),
            r: t.r(),
        }
    }
}

/// The unique solution of the Diophantine equation
/// `e0*pqr + p'*qr + p*q'*r + p*q*r' = -1` with `0 < p' < p`, `0 < q' < q`,
/// `0 < r' < r`. For triples with `pq + pr - qr = 1` it is always
/// `(-2, 1, q-1, r-1)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SeifertData {
    pub e0: i64,
    pub p_prime: i64,
    pub q_prime: i64,
    pub r_prime: i64,
}

/// Solves the Diophantine equation by inverting modulo each multiplicity.
pub fn seifert_data(st: &SeifertTriple) -> Result<SeifertData> {
    let (p, q, r) = (st.p as i128, st.q as i128, st.r as i128);
    let inv = |a: i128, m: i128| mod_inv(a, m).ok_or(Error::Integrity("pairwise coprimality lost"));
    // p'*qr = -1 (mod p), and symmetrically
    let p_prime = (-inv(q * r % p, p)?).rem_euclid(p);
    let q_prime = (-inv(p * r % q, q)?).rem_euclid(q);
    let r_prime = (-inv(p * q % r, r)?).rem_euclid(r);
    let num = -1 - p_prime * q * r - p * q_prime * r - p * q * r_prime;
    let pqr = p * q * r;
    if num % pqr != 0 {
        return Err(Error::Integrity("Seifert equation has no integer e0"));
    }
    Ok(SeifertData {
        e0: (num / pqr) as i64,
        p_prime: p_prime as i64,
        q_prime: q_prime as i64,
        r_prime: r_prime as i64,
    })
}

/// Shape tag of a plumbing presentation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GraphShape {
    Star,
    AlmostSimpleLinear,
}

impl GraphShape {
    pub fn as_str(&self) -> &'static str {
        match self {
            GraphShape::Star => "star",
            GraphShape::AlmostSimpleLinear => "almost-simple-linear",
        }
    }
}

/// A weighted tree with an intersection matrix of determinant ±1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlumbingGraph {
    vertices: Vec<i64>,
    edges: Vec<(usize, usize)>,
    shape: GraphShape,
}

impl PlumbingGraph {
    /// Validates that the data forms a nonempty tree.
    pub fn new(vertices: Vec<i64>, edges: Vec<(usize, usize)>, shape: GraphShape) -> Result<Self> {
        let n = vertices.len();
        if n == 0 {
            return Err(Error::MalformedGraph("graph is empty"));
        }
        if edges.len() != n - 1 {
            return Err(Error::MalformedGraph("a tree needs |V| - 1 edges"));
        }
        for &(a, b) in &edges {
            if a >= n || b >= n {
                return Err(Error::MalformedGraph("edge endpoint out of range"));
            }
        }
        let g = PlumbingGraph {
            vertices,
            edges,
            shape,
        };
        if g.preorder().len() != n {
            return Err(Error::MalformedGraph("graph is not connected"));
        }
        Ok(g)
    }

    pub fn vertices(&self) -> &[i64] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn shape(&self) -> GraphShape {
        self.shape
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = alloc::vec![Vec::new(); self.vertices.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Preorder rooted at 0, with the parent of each visited vertex.
    fn preorder(&self) -> Vec<(usize, usize)> {
        let adj = self.adjacency();
        let n = self.vertices.len();
        let mut visited = alloc::vec![false; n];
        let mut out = Vec::with_capacity(n);
        let mut stack = alloc::vec![(0usize, usize::MAX)];
        while let Some((v, parent)) = stack.pop() {
            if visited[v] {
                continue;
            }
            visited[v] = true;
            out.push((v, parent));
            for &w in &adj[v] {
                if !visited[w] {
                    stack.push((w, v));
                }
            }
        }
        out
    }

    /// Exact determinant of the intersection matrix, by integer-preserving
    /// leaf-to-root elimination on the tree:
    ///
    /// ```text
    /// D(v) = w_v * prod_c D(c) - sum_c E(c) * prod_{c' != c} D(c')
    /// ```
    ///
    /// where `D(c)` is the subtree determinant below child `c` and `E(c)`
    /// the same with `c` itself removed.
    pub fn determinant(&self) -> Result<i128> {
        let n = self.vertices.len();
        let adj = self.adjacency();
        let order = self.preorder();
        let mut det_sub = alloc::vec![0i128; n];
        let mut det_below = alloc::vec![1i128; n]; // product of children determinants
        for &(v, parent) in order.iter().rev() {
            let children = adj[v].iter().copied().filter(|&w| w != parent);
            let mut zeros = 0usize;
            let mut zero_child = usize::MAX;
            let mut prod_nonzero = 1i128;
            for c in children.clone() {
                if det_sub[c] == 0 {
                    zeros += 1;
                    zero_child = c;
                } else {
                    prod_nonzero = cmul(prod_nonzero, det_sub[c])?;
                }
            }
            let full_prod = if zeros > 0 { 0 } else { prod_nonzero };
            let mut dv = cmul(self.vertices[v] as i128, full_prod)?;
            for c in children {
                let others = match zeros {
                    0 => prod_nonzero / det_sub[c],
                    1 if c == zero_child => prod_nonzero,
                    _ => 0,
                };
                dv = csub(dv, cmul(det_below[c], others)?)?;
            }
            det_sub[v] = dv;
            det_below[v] = full_prod;
        }
        Ok(det_sub[0])
    }

    /// Undirected DOT output with weight labels.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph plumbing {\n");
        out.push_str(&format!("  // shape: {}\n", self.shape.as_str()));
        for (i, w) in self.vertices.iter().enumerate() {
            out.push_str(&format!("  v{i} [label=\"{w}\"];\n"));
        }
        for &(a, b) in &self.edges {
            out.push_str(&format!("  v{a} -- v{b};\n"));
        }
        out.push('}');
        out
    }

    /// JSON output: `{"vertices":[...],"edges":[[i,j],...],"shape":"..."}`
    /// with 0-based vertex indices.
    pub fn to_json(&self) -> String {
        let mut out = String::from("{\"vertices\":[");
        for (i, w) in self.vertices.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&format!("{w}"));
        }
        out.push_str("],\"edges\":[");
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&format!("[{a},{b}]"));
        }
        out.push_str(&format!("],\"shape\":\"{}\"}}", self.shape.as_str()));
        out
    }
}

/// Star presentation: a central `e0` vertex with three legs carrying the
/// Hirzebruch–Jung expansions of `-p/p'`, `-q/q'`, `-r/r'`.
pub fn star_graph(st: &SeifertTriple) -> Result<PlumbingGraph> {
    let sd = seifert_data(st)?;
    let mut vertices = alloc::vec![sd.e0];
    let mut edges = Vec::new();
    for (mult, prime) in [(st.p, sd.p_prime), (st.q, sd.q_prime), (st.r, sd.r_prime)] {
        let leg = neg_cont_frac(mult, prime)?;
        let mut prev = 0usize; // center
        for &w in leg.coefficients() {
            vertices.push(w);
            edges.push((prev, vertices.len() - 1));
            prev = vertices.len() - 1;
        }
    }
    let g = PlumbingGraph::new(vertices, edges, GraphShape::Star)?;
    if g.determinant()?.abs() != 1 {
        return Err(Error::Integrity("star graph determinant is not ±1"));
    }
    Ok(g)
}

/// Almost simple linear presentation of a `pq + pr - qr = 1` triple: a
/// `(q-1) + 1 + (r-1)` chain of `-2` vertices with a single `-p` leaf
/// attached at position `q` (1-indexed from the `q-1` side), `q + r`
/// vertices in total.
pub fn almost_simple_linear_graph(t: &Triple) -> Result<PlumbingGraph> {
    let (p, q, r) = (t.p(), t.q() as usize, t.r() as usize);
    let chain_len = q + r - 1;
    let mut vertices = alloc::vec![-2i64; chain_len];
    vertices.push(-p);
    let mut edges: Vec<(usize, usize)> = (0..chain_len - 1).map(|i| (i, i + 1)).collect();
    edges.push((q - 1, chain_len)); // leaf hangs off the center of the chain
    let g = PlumbingGraph::new(vertices, edges, GraphShape::AlmostSimpleLinear)?;
    if g.determinant()?.abs() != 1 {
        return Err(Error::Integrity(
            "almost simple linear graph determinant is not ±1",
        ));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tr(p: i64, q: i64) -> Triple {
        Triple::new(p, q).unwrap()
    }

    #[test]
    fn seifert_data_examples() {
        let sd = seifert_data(&(&tr(2, 3)).into()).unwrap();
        assert_eq!((sd.e0, sd.p_prime, sd.q_prime, sd.r_prime), (-2, 1, 2, 4));
        let sd = seifert_data(&(&tr(3, 4)).into()).unwrap();
        assert_eq!((sd.e0, sd.p_prime, sd.q_prime, sd.r_prime), (-2, 1, 3, 10));
        let sd = seifert_data(&(&tr(3, 5)).into()).unwrap();
        assert_eq!((sd.e0, sd.p_prime, sd.q_prime, sd.r_prime), (-2, 1, 4, 6));
    }

    #[test]
    fn seifert_data_relaxed_triple() {
        // Sigma(2,3,7): not almost simple linear (2*3+2*7-3*7 = -1)
        let st = SeifertTriple::new(2, 3, 7).unwrap();
        let sd = seifert_data(&st).unwrap();
        let (p, q, r) = (2i128, 3i128, 7i128);
        let (e0, pp, qp, rp) = (
            sd.e0 as i128,
            sd.p_prime as i128,
            sd.q_prime as i128,
            sd.r_prime as i128,
        );
        assert_eq!(e0 * p * q * r + pp * q * r + p * qp * r + p * q * rp, -1);
        assert!(0 < pp && pp < p && 0 < qp && qp < q && 0 < rp && rp < r);
    }

    #[test]
    fn seifert_triple_validation() {
        assert!(SeifertTriple::new(2, 3, 7).is_ok());
        assert!(matches!(
            SeifertTriple::new(2, 4, 7),
            Err(Error::NotCoprime { .. })
        ));
        assert!(SeifertTriple::new(3, 2, 7).is_err());
    }

    #[test]
    fn star_graph_of_poincare_sphere_is_e8() {
        let g = star_graph(&(&tr(2, 3)).into()).unwrap();
        assert_eq!(g.vertices().len(), 8);
        assert!(g.vertices().iter().all(|&w| w == -2));
        assert_eq!(g.shape(), GraphShape::Star);
        assert_eq!(g.determinant().unwrap().abs(), 1);
    }

    #[test]
    fn star_graph_structure() {
        // (3,4,11): center -2, legs [-3], [-2,-2,-2], ten -2's
        let g = star_graph(&(&tr(3, 4)).into()).unwrap();
        assert_eq!(g.vertices().len(), 15);
        assert_eq!(g.vertices()[0], -2);
        assert_eq!(g.vertices()[1], -3);
        assert_eq!(g.vertices()[2..].iter().filter(|&&w| w == -2).count(), 13);
    }

    #[test]
    fn asl_graph_of_poincare_sphere_is_e8() {
        let g = almost_simple_linear_graph(&tr(2, 3)).unwrap();
        assert_eq!(g.vertices().len(), 8);
        assert!(g.vertices().iter().all(|&w| w == -2));
        // leaf attached at chain position 3 (0-based index 2)
        assert!(g.edges().contains(&(2, 7)));
    }

    #[test]
    fn asl_graph_structure() {
        let g = almost_simple_linear_graph(&tr(3, 4)).unwrap();
        assert_eq!(g.vertices().len(), 15);
        assert_eq!(g.vertices()[14], -3);
        assert_eq!(g.vertices()[..14], alloc::vec![-2; 14]);
        assert!(g.edges().contains(&(3, 14)));
        assert_eq!(g.determinant().unwrap().abs(), 1);
    }

    #[test]
    fn vertex_count_is_q_plus_r() {
        for t in crate::triples::enumerate(30, None) {
            let g = almost_simple_linear_graph(&t).unwrap();
            assert_eq!(g.vertices().len() as i64, t.q() + t.r());
        }
    }

    #[test]
    fn star_and_asl_weights_agree() {
        for t in crate::triples::enumerate(30, None) {
            let a = star_graph(&(&t).into()).unwrap();
            let b = almost_simple_linear_graph(&t).unwrap();
            let mut wa = a.vertices().to_vec();
            let mut wb = b.vertices().to_vec();
            wa.sort_unstable();
            wb.sort_unstable();
            assert_eq!(wa, wb, "{t}");
        }
    }

    #[test]
    fn determinant_single_vertex() {
        let g = PlumbingGraph::new(alloc::vec![-7], alloc::vec![], GraphShape::Star).unwrap();
        assert_eq!(g.determinant().unwrap(), -7);
    }

    #[test]
    fn determinant_known_small_matrix() {
        // [[-2, 1], [1, -3]] has determinant 5
        let g =
            PlumbingGraph::new(alloc::vec![-2, -3], alloc::vec![(0, 1)], GraphShape::Star).unwrap();
        assert_eq!(g.determinant().unwrap(), 5);
    }

    #[test]
    fn malformed_graphs_rejected() {
        assert!(matches!(
            PlumbingGraph::new(alloc::vec![], alloc::vec![], GraphShape::Star),
            Err(Error::MalformedGraph(_))
        ));
        assert!(PlumbingGraph::new(alloc::vec![-2, -2], alloc::vec![], GraphShape::Star).is_err());
        assert!(PlumbingGraph::new(
            alloc::vec![-2, -2, -2],
            alloc::vec![(0, 1), (0, 3)],
            GraphShape::Star
        )
        .is_err());
        // right edge count but disconnected (self loop)
        assert!(
            PlumbingGraph::new(alloc::vec![-2, -2], alloc::vec![(0, 0)], GraphShape::Star).is_err()
        );
    }

    #[test]
    fn dot_output() {
        let g =
            PlumbingGraph::new(alloc::vec![-2, -3], alloc::vec![(0, 1)], GraphShape::Star).unwrap();
        let dot = g.to_dot();
        assert!(dot.starts_with("graph plumbing {"));
        assert!(dot.contains("v0 [label=\"-2\"];"));
        assert!(dot.contains("v0 -- v1;"));
    }

    #[test]
    fn json_output() {
        let g = PlumbingGraph::new(
            alloc::vec![-2, -3],
            alloc::vec![(0, 1)],
            GraphShape::AlmostSimpleLinear,
        )
        .unwrap();
        assert_eq!(
            g.to_json(),
            "{\"vertices\":[-2,-3],\"edges\":[[0,1]],\"shape\":\"almost-simple-linear\"}"
        );
    }
}
