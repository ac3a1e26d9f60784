//! Named graph families with stable vertex numbering.
//!
//! Numbering is fixed: cycle (or core) vertices first, then pendant paths in
//! role order. Each constructor that has named vertices also returns a
//! [`VertexRoleMap`] so checkers can refer to `w1`, `u2`, ... by role.
//!
//! Roles used by [`make_kite`] (triangle `u1 u2 v2`, pendant path
//! `v1 w1 ... w{n-4}` hanging from `u1`) and [`make_h_graph`] (the tree with
//! path `w{n-4} ... w1` and two branches `w1 u1 u2`, `w1 v1 v2`):
//!
//! ```text
//!   kite                           H_n
//!                 u2
//!  w{n-4}..w1-v1-u1 |             w{n-4}..w2-w1-u1-u2
//!                 v2                          \
//!                                              v1-v2
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VertexRoleMap(BTreeMap<String, Vertex>);

impl VertexRoleMap {
    fn insert(&mut self, role: impl Into<String>, v: Vertex) {
        let role = role.into();
        let prev = self.0.insert(role.clone(), v);
        debug_assert!(prev.is_none(), "duplicate role {role}");
    }

    pub fn get(&self, role: &str) -> Option<Vertex> {
        self.0.get(role).copied()
    }

    /// Like [`get`](Self::get) but panics on an unknown role.
    pub fn vertex(&self, role: &str) -> Vertex {
        self.get(role).unwrap_or_else(|| panic!("no vertex with role {role}"))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, Vertex)> {
        self.0.iter().map(|(k, &v)| (k.as_str(), v))
    }
}

fn path_edges(vertices: &[Vertex]) -> Vec<(Vertex, Vertex)> {
    vertices.windows(2).map(|w| (w[0], w[1])).collect()
}

pub fn make_path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::BadOrder { family: "path", n });
    }
    Graph::from_edges(n, &path_edges(&(0..n).collect::<Vec<_>>()))
}

pub fn make_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::BadOrder { family: "cycle", n });
    }
    make_path(n)?.add_edge(n - 1, 0)
}

pub fn make_complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::BadOrder { family: "complete", n });
    }
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::from_edges(n, &edges)
}

/// `Ki_{n,3}`: a triangle with a path on `n - 3` vertices joined to one of its
/// vertices. `n = 3` gives the bare triangle.
///
/// Vertices: `u1 = 0`, `u2 = 1`, `v2 = 2` (triangle), `v1 = 3`, `w_i = 3 + i`.
/// The pendant vertex is `w{n-4}` for `n >= 5` and `v1` for `n = 4`; it is
/// also exposed as role `pendant`.
pub fn make_kite(n: usize) -> Result<(Graph, VertexRoleMap)> {
    if n < 3 {
        return Err(Error::BadOrder { family: "kite", n });
    }
    let mut roles = VertexRoleMap::default();
    roles.insert("u1", 0);
    roles.insert("u2", 1);
    roles.insert("v2", 2);
    let mut edges = vec![(0, 1), (0, 2), (1, 2)];
    if n > 3 {
        roles.insert("v1", 3);
        for i in 1..=n - 4 {
            roles.insert(format!("w{i}"), 3 + i);
        }
        let tail: Vec<Vertex> = std::iter::once(0).chain(3..n).collect();
        edges.extend(path_edges(&tail));
        roles.insert("pendant", n - 1);
    }
    Ok((Graph::from_edges(n, &edges)?, roles))
}

/// `H_n`: the tree with a path `w{n-4} ... w1` and two branches of length two,
/// `w1 u1 u2` and `w1 v1 v2`, at `w1`. It has `n` vertices and `n - 1` edges.
///
/// Vertices: `w1 = 0`, `u1 = 1`, `u2 = 2`, `v1 = 3`, `v2 = 4`, `w_i = i + 3`
/// for `i >= 2`.
pub fn make_h_graph(n: usize) -> Result<(Graph, VertexRoleMap)> {
    if n < 6 {
        return Err(Error::BadOrder { family: "h", n });
    }
    let mut roles = VertexRoleMap::default();
    for (role, v) in [("w1", 0), ("u1", 1), ("u2", 2), ("v1", 3), ("v2", 4)] {
        roles.insert(role, v);
    }
    for i in 2..=n - 4 {
        roles.insert(format!("w{i}"), i + 3);
    }
    let mut edges = vec![(0, 1), (1, 2), (0, 3), (3, 4)];
    let spine: Vec<Vertex> = std::iter::once(0).chain(5..n).collect();
    edges.extend(path_edges(&spine));
    let g = Graph::from_edges(n, &edges)?;
    #[cfg(debug_assertions)]
    {
        let d = crate::spectra::apsp(&g)?;
        let tr = |role: &str| d.transmission(roles.vertex(role)) as usize;
        let far = format!("w{}", n - 4);
        debug_assert_eq!(2 * tr(&far), n * n - n - 8);
        debug_assert_eq!(2 * tr("u1"), n * n + 24 - 7 * n);
        debug_assert_eq!(2 * tr("v1"), n * n + 24 - 7 * n);
        debug_assert_eq!(2 * tr("u2"), n * n + 20 - 5 * n);
        debug_assert_eq!(2 * tr("v2"), n * n + 20 - 5 * n);
    }
    Ok((g, roles))
}

/// `C_n(l1, l2, l3, l4)`: the 4-cycle `w1 w2 w3 w4` with a pendant path of
/// `l_i` vertices at `w_i`.
///
/// Vertices: `w1..w4 = 0..3`, then the path at `w1` (`u1..`), at `w2`
/// (`v1..`), at `w3` (`z1..`) and at `w4` (`y1..`), each numbered outward.
pub fn make_c4_spider(lengths: [usize; 4]) -> Result<(Graph, VertexRoleMap)> {
    const PREFIX: [&str; 4] = ["u", "v", "z", "y"];
    let n = 4 + lengths.iter().sum::<usize>();
    let mut roles = VertexRoleMap::default();
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 0)];
    let mut next = 4;
    for (i, &len) in lengths.iter().enumerate() {
        roles.insert(format!("w{}", i + 1), i);
        let mut path = vec![i];
        for j in 1..=len {
            roles.insert(format!("{}{j}", PREFIX[i]), next);
            path.push(next);
            next += 1;
        }
        edges.extend(path_edges(&path));
    }
    Ok((Graph::from_edges(n, &edges)?, roles))
}

fn attach_path(g: Graph, at: Vertex, len: usize) -> Graph {
    let start = g.n();
    let mut g = g.with_new_vertices(len);
    let mut prev = at;
    for v in start..start + len {
        g = g.add_edge(prev, v).expect("fresh vertex");
        prev = v;
    }
    g
}

/// `G_u(k, l)`: fresh pendant paths of lengths `k` and `l` at `u`
/// (`l = 0` attaches a single path). New vertices follow the existing ones,
/// the `k`-path first.
pub fn attach_two_paths(g: &Graph, u: Vertex, k: usize, l: usize) -> Result<Graph> {
    if g.n() < 2 || !g.is_connected() {
        return Err(Error::BadParams("base graph must be nontrivial and connected".into()));
    }
    if u >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: u, n: g.n() });
    }
    if k < 1 {
        return Err(Error::BadParams(format!("k must be at least 1, got {k}")));
    }
    Ok(attach_path(attach_path(g.clone(), u, k), u, l))
}

/// `G_{u,v}(k, l)`: a pendant path of length `k` at `u` and one of length `l`
/// at `v`. Both anchors need degree at least 2.
pub fn attach_at_two_vertices(g: &Graph, u: Vertex, v: Vertex, k: usize, l: usize) -> Result<Graph> {
    for w in [u, v] {
        if w >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: w, n: g.n() });
        }
    }
    if u == v {
        return Err(Error::BadParams("anchors must be distinct".into()));
    }
    if k < 1 {
        return Err(Error::BadParams(format!("k must be at least 1, got {k}")));
    }
    for w in [u, v] {
        if g.degree(w) < 2 {
            return Err(Error::DegreeTooSmall { vertex: w, degree: g.degree(w) });
        }
    }
    Ok(attach_path(attach_path(g.clone(), u, k), v, l))
}

/// Small base graphs for the attachment families: `c<m>`, `k<m>`, `p<m>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseGraph {
    Cycle(usize),
    Complete(usize),
    Path(usize),
}

impl BaseGraph {
    pub fn build(self) -> Result<Graph> {
        match self {
            BaseGraph::Cycle(m) => make_cycle(m),
            BaseGraph::Complete(m) => make_complete(m),
            BaseGraph::Path(m) => make_path(m),
        }
    }
}

impl fmt::Display for BaseGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseGraph::Cycle(m) => write!(f, "c{m}"),
            BaseGraph::Complete(m) => write!(f, "k{m}"),
            BaseGraph::Path(m) => write!(f, "p{m}"),
        }
    }
}

impl FromStr for BaseGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseFamily(s.to_string());
        let (kind, m) = s.split_at_checked(1).ok_or_else(bad)?;
        let m: usize = m.parse().map_err(|_| bad())?;
        match kind {
            "c" => Ok(BaseGraph::Cycle(m)),
            "k" => Ok(BaseGraph::Complete(m)),
            "p" => Ok(BaseGraph::Path(m)),
            _ => Err(bad()),
        }
    }
}

/// A buildable family member. Text form: `path:n=5`, `cycle:n=5`, `kite:n=7`,
/// `h:n=8`, `c4spider:2,1,0,0`, `twopath:base=c3,u=0,k=2,l=1`,
/// `twovertex:base=k4,u=0,v=1,k=2,l=1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Kite { n: usize },
    HGraph { n: usize },
    C4Spider { lengths: [usize; 4] },
    TwoPathAttach { base: BaseGraph, u: Vertex, k: usize, l: usize },
    TwoVertexAttach { base: BaseGraph, u: Vertex, v: Vertex, k: usize, l: usize },
}

impl FamilySpec {
    pub fn build(&self) -> Result<(Graph, VertexRoleMap)> {
        let plain = |g: Result<Graph>| g.map(|g| (g, VertexRoleMap::default()));
        match *self {
            FamilySpec::Path { n } => plain(make_path(n)),
            FamilySpec::Cycle { n } => plain(make_cycle(n)),
            FamilySpec::Kite { n } => make_kite(n),
            FamilySpec::HGraph { n } => make_h_graph(n),
            FamilySpec::C4Spider { lengths } => make_c4_spider(lengths),
            FamilySpec::TwoPathAttach { base, u, k, l } => plain(attach_two_paths(&base.build()?, u, k, l)),
            FamilySpec::TwoVertexAttach { base, u, v, k, l } => {
                plain(attach_at_two_vertices(&base.build()?, u, v, k, l))
            }
        }
    }

    pub fn graph(&self) -> Result<Graph> {
        self.build().map(|(g, _)| g)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path { n } => write!(f, "path:n={n}"),
            FamilySpec::Cycle { n } => write!(f, "cycle:n={n}"),
            FamilySpec::Kite { n } => write!(f, "kite:n={n}"),
            FamilySpec::HGraph { n } => write!(f, "h:n={n}"),
            FamilySpec::C4Spider { lengths: [a, b, c, d] } => write!(f, "c4spider:{a},{b},{c},{d}"),
            FamilySpec::TwoPathAttach { base, u, k, l } => write!(f, "twopath:base={base},u={u},k={k},l={l}"),
            FamilySpec::TwoVertexAttach { base, u, v, k, l } => {
                write!(f, "twovertex:base={base},u={u},v={v},k={k},l={l}")
            }
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseFamily(s.to_string());
        let (kind, rest) = s.trim().split_once(':').ok_or_else(bad)?;
        if kind == "c4spider" {
            let parts: Vec<usize> = rest
                .split(',')
                .map(|p| p.trim().parse().map_err(|_| bad()))
                .collect::<Result<_>>()?;
            let lengths: [usize; 4] = parts.try_into().map_err(|_| bad())?;
            return Ok(FamilySpec::C4Spider { lengths });
        }
        let mut kv = BTreeMap::new();
        for part in rest.split(',') {
            let (k, v) = part.split_once('=').ok_or_else(bad)?;
            if kv.insert(k.trim(), v.trim()).is_some() {
                return Err(bad());
            }
        }
        let num = |key: &str| -> Result<usize> { kv.get(key).ok_or_else(bad)?.parse().map_err(|_| bad()) };
        let base = || -> Result<BaseGraph> { kv.get("base").ok_or_else(bad)?.parse() };
        let spec = match kind {
            "path" => FamilySpec::Path { n: num("n")? },
            "cycle" => FamilySpec::Cycle { n: num("n")? },
            "kite" => FamilySpec::Kite { n: num("n")? },
            "h" => FamilySpec::HGraph { n: num("n")? },
            "twopath" => FamilySpec::TwoPathAttach {
                base: base()?,
                u: num("u")?,
                k: num("k")?,
                l: num("l")?,
            },
            "twovertex" => FamilySpec::TwoVertexAttach {
                base: base()?,
                u: num("u")?,
                v: num("v")?,
                k: num("k")?,
                l: num("l")?,
            },
            _ => return Err(bad()),
        };
        let expected = match spec {
            FamilySpec::TwoPathAttach { .. } => 4,
            FamilySpec::TwoVertexAttach { .. } => 5,
            _ => 1,
        };
        if kv.len() != expected {
            return Err(bad());
        }
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::spectra::{apsp, spectral_radius};

    #[test]
    fn paths_and_cycles() {
        let c3 = make_cycle(3).unwrap();
        assert_eq!(c3.edge_count(), 3);
        assert_eq!(make_path(2).unwrap().edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert!(make_cycle(4).unwrap().degrees().iter().all(|&d| d == 2));
        assert!(make_cycle(2).is_err());
        assert!(make_path(0).is_err());
    }

    #[test]
    fn kite_shape() {
        let (k3, _) = make_kite(3).unwrap();
        assert!(are_isomorphic(&k3, &make_cycle(3).unwrap()).unwrap());
        let (k6, roles) = make_kite(6).unwrap();
        assert_eq!(k6.edge_count(), 6);
        assert!(k6.is_unicyclic());
        assert_eq!(roles.vertex("pendant"), roles.vertex("w2"));
        assert_eq!(k6.degree(roles.vertex("u1")), 3);
        assert_eq!(k6.degree(roles.vertex("pendant")), 1);
        assert_eq!(k6.cycle_vertices(), vec![0, 1, 2]);
        let (k4, roles4) = make_kite(4).unwrap();
        assert_eq!(roles4.vertex("pendant"), roles4.vertex("v1"));
        assert_eq!(k4.degree_sequence(), vec![3, 2, 2, 1]);
    }

    #[test]
    fn kite4_radius_is_seven() {
        let (k4, _) = make_kite(4).unwrap();
        assert!((spectral_radius(&k4).unwrap() - 7.0).abs() < 1e-10);
    }

    #[test]
    fn h_graph_shape() {
        let (h, roles) = make_h_graph(6).unwrap();
        assert!(h.is_tree());
        assert_eq!(h.degree(roles.vertex("w1")), 3);
        let d = apsp(&h).unwrap();
        // (36 - 6 - 8) / 2
        assert_eq!(d.transmission(roles.vertex("w2")), 11);
        let (h8, r8) = make_h_graph(8).unwrap();
        // (64 - 40 + 20) / 2
        assert_eq!(apsp(&h8).unwrap().transmission(r8.vertex("u2")), 22);
        assert!(make_h_graph(5).is_err());
    }

    #[test]
    fn c4_spider_shape() {
        let (g, _) = make_c4_spider([0, 0, 0, 0]).unwrap();
        assert!(are_isomorphic(&g, &make_cycle(4).unwrap()).unwrap());
        let (g, roles) = make_c4_spider([2, 1, 0, 0]).unwrap();
        assert_eq!((g.n(), g.edge_count()), (7, 7));
        assert!(g.is_unicyclic());
        assert!(g.has_edge(roles.vertex("u1"), roles.vertex("u2")));
        assert!(g.has_edge(roles.vertex("w2"), roles.vertex("v1")));
        assert_eq!(g.degree(roles.vertex("u2")), 1);
    }

    #[test]
    fn two_path_attachments() {
        let c3 = make_cycle(3).unwrap();
        let g = attach_two_paths(&c3, 0, 1, 1).unwrap();
        assert_eq!(g.n(), 5);
        assert!(g.is_unicyclic());
        assert_eq!(g.degree(0), 4);
        assert_eq!(attach_two_paths(&c3, 0, 2, 1).unwrap().n(), 6);
        assert!(attach_two_paths(&c3, 0, 0, 1).is_err());
        assert!(attach_two_paths(&Graph::empty(1).unwrap(), 0, 1, 0).is_err());
        for n in 4..=12 {
            let g = attach_two_paths(&c3, 0, n - 3, 0).unwrap();
            assert!(are_isomorphic(&g, &make_kite(n).unwrap().0).unwrap());
        }
    }

    #[test]
    fn two_vertex_attachments() {
        let c4 = make_cycle(4).unwrap();
        let g = attach_at_two_vertices(&c4, 0, 1, 1, 1).unwrap();
        assert!(are_isomorphic(&g, &make_c4_spider([1, 1, 0, 0]).unwrap().0).unwrap());
        let c3 = make_cycle(3).unwrap();
        for (k, l) in [(1, 0), (2, 1), (3, 2)] {
            let g = attach_at_two_vertices(&c3, 0, 1, k, l).unwrap();
            assert!(g.is_unicyclic());
            assert_eq!(g.n(), 3 + k + l);
        }
        let p3 = make_path(3).unwrap();
        assert_eq!(
            attach_at_two_vertices(&p3, 1, 0, 1, 1),
            Err(Error::DegreeTooSmall { vertex: 0, degree: 1 })
        );
    }

    #[test]
    fn spec_text_round_trip() {
        for s in [
            "path:n=5",
            "cycle:n=5",
            "kite:n=7",
            "h:n=8",
            "c4spider:2,1,0,0",
            "twopath:base=c3,u=0,k=2,l=1",
            "twovertex:base=k4,u=0,v=1,k=2,l=1",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
            assert!(spec.build().is_ok(), "{s}");
        }
        for bad in ["kite", "kite:7", "kite:n=x", "kite:n=7,n=8", "c4spider:1,2,3", "blob:n=3", "kite:n=7,m=2"] {
            assert!(bad.parse::<FamilySpec>().is_err(), "{bad}");
        }
    }
}
