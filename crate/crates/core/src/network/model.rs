//! Perfect networks on a disk or a cylinder, and their validation.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{Gen, ObjectId};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Surface {
    Disk,
    Cylinder,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Source,
    Sink,
}

/// `Through` marks the 2-valent points left behind by gluing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    White,
    Black,
    Through,
}

// Field order is alphabetical so that serialization has sorted keys.

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundaryVertex {
    pub id: String,
    /// 1-based position among the vertices of the same role, top to bottom.
    pub index: usize,
    pub role: Role,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InternalVertex {
    /// Incident edges counter-clockwise, distinguished edge last.
    pub ccw: Vec<String>,
    pub color: Color,
    pub id: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Edge {
    /// Signed number of crossings with the cut.
    #[serde(default)]
    pub cut: i32,
    pub head: String,
    pub id: String,
    /// `None` for an identity-labeled edge.
    pub label: Option<String>,
    pub tail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Network {
    pub boundary: Vec<BoundaryVertex>,
    pub edges: Vec<Edge>,
    pub internal: Vec<InternalVertex>,
    pub surface: Surface,
}

/// One failed validation rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub location: String,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexRef {
    Boundary(usize),
    Internal(usize),
}

/// Lookup tables derived from a network. Generators are edge positions.
#[derive(Clone, Debug)]
pub struct NetIndex {
    pub edge_of: HashMap<String, usize>,
    pub vertex_of: HashMap<String, VertexRef>,
    pub out_edges: HashMap<String, Vec<usize>>,
    pub in_edges: HashMap<String, Vec<usize>>,
    /// Boundary positions of sources, ordered by index.
    pub sources: Vec<usize>,
    /// Boundary positions of sinks, ordered by index.
    pub sinks: Vec<usize>,
}

impl Network {
    pub fn index(&self) -> NetIndex {
        let mut edge_of = HashMap::new();
        for (i, e) in self.edges.iter().enumerate() {
            edge_of.entry(e.id.clone()).or_insert(i);
        }
        let mut vertex_of = HashMap::new();
        for (i, b) in self.boundary.iter().enumerate() {
            vertex_of.entry(b.id.clone()).or_insert(VertexRef::Boundary(i));
        }
        for (i, v) in self.internal.iter().enumerate() {
            vertex_of.entry(v.id.clone()).or_insert(VertexRef::Internal(i));
        }
        let mut out_edges: HashMap<String, Vec<usize>> = HashMap::new();
        let mut in_edges: HashMap<String, Vec<usize>> = HashMap::new();
        for (i, e) in self.edges.iter().enumerate() {
            out_edges.entry(e.tail.clone()).or_default().push(i);
            in_edges.entry(e.head.clone()).or_default().push(i);
        }
        let by_role = |role: Role| {
            let mut v: Vec<usize> =
                (0..self.boundary.len()).filter(|&i| self.boundary[i].role == role).collect();
            v.sort_by_key(|&i| self.boundary[i].index);
            v
        };
        NetIndex { edge_of, vertex_of, out_edges, in_edges, sources: by_role(Role::Source), sinks: by_role(Role::Sink) }
    }

    pub fn num_sources(&self) -> usize {
        self.boundary.iter().filter(|b| b.role == Role::Source).count()
    }

    pub fn num_sinks(&self) -> usize {
        self.boundary.iter().filter(|b| b.role == Role::Sink).count()
    }

    /// Object of a boundary vertex: its position in `boundary`.
    pub fn object(&self, boundary_pos: usize) -> ObjectId {
        ObjectId(boundary_pos as u32)
    }

    pub fn source_objects(&self) -> Vec<ObjectId> {
        self.index().sources.iter().map(|&i| self.object(i)).collect()
    }

    pub fn sink_objects(&self) -> Vec<ObjectId> {
        self.index().sinks.iter().map(|&i| self.object(i)).collect()
    }

    pub fn object_name(&self, o: ObjectId) -> &str {
        &self.boundary[o.0 as usize].id
    }

    pub fn edge(&self, g: Gen) -> &Edge {
        &self.edges[g.0 as usize]
    }

    pub fn gen_of(&self, edge_id: &str) -> Result<Gen> {
        self.edges
            .iter()
            .position(|e| e.id == edge_id)
            .map(|i| Gen(i as u32))
            .ok_or_else(|| Error::UnknownEdge(edge_id.to_string()))
    }

    /// Generator carrying a given label.
    pub fn gen_of_label(&self, label: &str) -> Result<Gen> {
        self.edges
            .iter()
            .position(|e| e.label.as_deref() == Some(label))
            .map(|i| Gen(i as u32))
            .ok_or_else(|| Error::UnknownEdge(label.to_string()))
    }

    pub fn label(&self, g: Gen) -> Option<&str> {
        self.edges.get(g.0 as usize).and_then(|e| e.label.as_deref())
    }

    /// Sorts every array by id; the canonical form used for files.
    pub fn canonicalize(&mut self) {
        self.boundary.sort_by(|a, b| a.id.cmp(&b.id));
        self.internal.sort_by(|a, b| a.id.cmp(&b.id));
        self.edges.sort_by(|a, b| a.id.cmp(&b.id));
    }

    /// Internal vertices in topological order, or the id of a vertex on a cycle.
    pub fn topological_order(&self) -> Result<Vec<String>> {
        let idx = self.index();
        let mut indeg: BTreeMap<&str, usize> = BTreeMap::new();
        for b in &self.boundary {
            indeg.insert(&b.id, 0);
        }
        for v in &self.internal {
            indeg.insert(&v.id, 0);
        }
        for e in &self.edges {
            if let Some(d) = indeg.get_mut(e.head.as_str()) {
                *d += 1;
            }
        }
        let mut ready: Vec<&str> = indeg.iter().filter(|(_, d)| **d == 0).map(|(v, _)| *v).collect();
        ready.reverse();
        let mut order = Vec::new();
        while let Some(v) = ready.pop() {
            order.push(v.to_string());
            for &e in idx.out_edges.get(v).map(Vec::as_slice).unwrap_or(&[]) {
                let h = self.edges[e].head.as_str();
                if let Some(d) = indeg.get_mut(h) {
                    *d -= 1;
                    if *d == 0 {
                        ready.push(h);
                    }
                }
            }
        }
        if order.len() < indeg.len() {
            let stuck = indeg
                .iter()
                .find(|(v, _)| !order.iter().any(|o| o == *v))
                .map(|(v, _)| v.to_string())
                .unwrap_or_default();
            return Err(Error::Cyclic(stuck));
        }
        Ok(order)
    }

    /// All violations of the network invariants; empty iff valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut push = |loc: &str, msg: String| out.push(Violation { location: loc.to_string(), message: msg });

        let mut ids = HashSet::new();
        for id in self.boundary.iter().map(|b| &b.id).chain(self.internal.iter().map(|v| &v.id)) {
            if !ids.insert(id.as_str()) {
                push(id, "duplicate vertex id".into());
            }
        }
        let mut eids = HashSet::new();
        let mut labels = HashSet::new();
        for e in &self.edges {
            if !eids.insert(e.id.as_str()) {
                push(&e.id, "duplicate edge id".into());
            }
            if let Some(l) = &e.label {
                if !labels.insert(l.as_str()) {
                    push(&e.id, format!("label {l:?} used by more than one edge"));
                }
                if l.is_empty() || l.contains(['.', ' ', '(', ')', '*', '+']) || l.starts_with("1_") || l.starts_with("cyc:") {
                    push(&e.id, format!("label {l:?} is not a valid generator name"));
                }
            }
            for end in [&e.tail, &e.head] {
                if !ids.contains(end.as_str()) {
                    push(&e.id, format!("endpoint {end:?} is not a vertex"));
                }
            }
            if e.tail == e.head {
                push(&e.id, "edge is a self-loop".into());
            }
            if self.surface == Surface::Disk && e.cut != 0 {
                push(&e.id, "nonzero cut on a disk network".into());
            }
        }
        let idx = self.index();
        let deg = |m: &HashMap<String, Vec<usize>>, v: &str| m.get(v).map(Vec::len).unwrap_or(0);

        let mut seen_index: HashMap<(Role, usize), &str> = HashMap::new();
        for b in &self.boundary {
            let (i, o) = (deg(&idx.in_edges, &b.id), deg(&idx.out_edges, &b.id));
            if i + o != 1 {
                push(&b.id, format!("boundary vertex has degree {}, expected 1", i + o));
            } else if b.role == Role::Source && o != 1 {
                push(&b.id, "source has an incoming edge".into());
            } else if b.role == Role::Sink && i != 1 {
                push(&b.id, "sink has an outgoing edge".into());
            }
            if let Some(prev) = seen_index.insert((b.role, b.index), &b.id) {
                push(&b.id, format!("index {} repeated (also {prev})", b.index));
            }
        }
        for role in [Role::Source, Role::Sink] {
            let n = self.boundary.iter().filter(|b| b.role == role).count();
            for b in self.boundary.iter().filter(|b| b.role == role) {
                if b.index == 0 || b.index > n {
                    push(&b.id, format!("index {} outside 1..={n}", b.index));
                }
            }
        }

        for v in &self.internal {
            let ins = idx.in_edges.get(&v.id).cloned().unwrap_or_default();
            let outs = idx.out_edges.get(&v.id).cloned().unwrap_or_default();
            let expected = if v.color == Color::Through { 2 } else { 3 };
            if ins.len() + outs.len() != expected {
                push(&v.id, format!("vertex has degree {}, expected {expected}", ins.len() + outs.len()));
                continue;
            }
            if v.color != Color::Through {
                if outs.len() == 3 {
                    push(&v.id, "internal source".into());
                    continue;
                }
                if ins.len() == 3 {
                    push(&v.id, "internal sink".into());
                    continue;
                }
            }
            let mut incident: Vec<&str> = ins.iter().chain(&outs).map(|&e| self.edges[e].id.as_str()).collect();
            let mut listed: Vec<&str> = v.ccw.iter().map(String::as_str).collect();
            incident.sort_unstable();
            listed.sort_unstable();
            if incident != listed {
                push(&v.id, format!("ccw {:?} does not list the incident edges {:?}", v.ccw, incident));
                continue;
            }
            let last = v.ccw.last().map(String::as_str).unwrap_or("");
            let last_in = ins.iter().any(|&e| self.edges[e].id == last);
            match v.color {
                Color::White => {
                    if ins.len() != 1 {
                        push(&v.id, format!("white vertex has {} incoming edges, expected 1", ins.len()));
                    } else if !last_in {
                        push(&v.id, "the unique incoming edge of a white vertex must be last in ccw".into());
                    }
                }
                Color::Black => {
                    if outs.len() != 1 {
                        push(&v.id, format!("black vertex has {} outgoing edges, expected 1", outs.len()));
                    } else if last_in {
                        push(&v.id, "the unique outgoing edge of a black vertex must be last in ccw".into());
                    }
                }
                Color::Through => {
                    if ins.len() != 1 || outs.len() != 1 {
                        push(&v.id, "through point needs one incoming and one outgoing edge".into());
                    } else if v.ccw[0] != self.edges[ins[0]].id {
                        push(&v.id, "through point lists its incoming edge first".into());
                    }
                }
            }
        }
        if out.is_empty() {
            if let Err(Error::Cyclic(v)) = self.topological_order() {
                out.push(Violation { location: v, message: "oriented cycle".into() });
            }
        }
        out
    }

    /// `Ok` when valid, otherwise an error listing every violation.
    pub fn check(&self) -> Result<()> {
        let v = self.validate();
        if v.is_empty() {
            Ok(())
        } else {
            let msgs: Vec<String> = v.iter().map(ToString::to_string).collect();
            Err(Error::InvalidNetwork(msgs.join("; ")))
        }
    }
}
