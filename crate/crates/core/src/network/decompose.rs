//! Peeling a network into elementary one-vertex layers and gluing them back.

use super::glue::glue;
use super::model::{BoundaryVertex, Color, Edge, InternalVertex, Network, Role, Surface};
use crate::error::{Error, Result};

/// One peeled vertex together with the layer network that re-attaches it:
/// identity wires everywhere except at `position`.
#[derive(Clone, Debug)]
pub struct ElementaryPiece {
    pub color: Color,
    /// Id of the vertex in the original network.
    pub vertex: String,
    /// 1-based sink position of the layer input (white, through) or output (black).
    pub position: usize,
    pub layer: Network,
}

/// The wires left after peeling, and the pieces in gluing order.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub base: Network,
    pub pieces: Vec<ElementaryPiece>,
}

fn sinks_in_order(w: &Network) -> Vec<usize> {
    w.index().sinks
}

fn boundary(id: String, role: Role, index: usize) -> BoundaryVertex {
    BoundaryVertex { id, index, role }
}

/// Identity wires from each new position to the old position of the same sink.
fn layer_wires(
    step: usize,
    surface: Surface,
    n_in: usize,
    n_out: usize,
    wires: &[(usize, usize)],
) -> Network {
    let mut net = Network { boundary: Vec::new(), edges: Vec::new(), internal: Vec::new(), surface };
    for i in 1..=n_in {
        net.boundary.push(boundary(format!("L{step}s{i}"), Role::Source, i));
    }
    for j in 1..=n_out {
        net.boundary.push(boundary(format!("L{step}k{j}"), Role::Sink, j));
    }
    for &(a, o) in wires {
        net.edges.push(Edge {
            cut: 0,
            head: format!("L{step}k{o}"),
            id: format!("L{step}w{a}"),
            label: None,
            tail: format!("L{step}s{a}"),
        });
    }
    net
}

fn sink_index(w: &Network, id: &str) -> Option<usize> {
    w.boundary.iter().find(|b| b.id == id && b.role == Role::Sink).map(|b| b.index)
}

/// Replaces the sinks of `w` by `order` (ids, top to bottom), returning the
/// (new index, old index) pairs of sinks that survived.
fn renumber_sinks(w: &mut Network, order: &[String]) -> Vec<(usize, usize)> {
    let mut kept = Vec::new();
    for (pos, id) in order.iter().enumerate() {
        if let Some(b) = w.boundary.iter_mut().find(|b| &b.id == id) {
            if b.role == Role::Sink {
                if b.index != usize::MAX {
                    kept.push((pos + 1, b.index));
                }
                b.index = pos + 1;
            }
        }
    }
    kept
}

fn adjacent(a: usize, b: usize, n: usize, surface: Surface) -> bool {
    let (lo, hi) = (a.min(b), a.max(b));
    hi == lo + 1 || (surface == Surface::Cylinder && lo == 1 && hi == n && n > 2)
}

/// Repeatedly peels a white vertex feeding two adjacent sinks (preferred) or a
/// black vertex feeding a sink, smallest vertex id first.
pub fn decompose(net: &Network) -> Result<Decomposition> {
    net.topological_order()?;
    net.check()?;
    let mut w = net.clone();
    let mut pieces = Vec::new();
    let mut step = 0;
    while !w.internal.is_empty() {
        step += 1;
        let idx = w.index();
        let n = idx.sinks.len();
        let outs = |v: &str| idx.out_edges.get(v).cloned().unwrap_or_default();
        let to_sink = |e: usize| sink_index(&w, &w.edges[e].head);

        let mut type1: Option<(String, usize, usize)> = None;
        let mut type2: Option<(String, usize)> = None;
        let mut through: Option<(String, usize)> = None;
        let mut ids: Vec<&InternalVertex> = w.internal.iter().collect();
        ids.sort_by(|a, b| a.id.cmp(&b.id));
        for v in ids {
            let o = outs(&v.id);
            match v.color {
                Color::White => {
                    if let (Some(a), Some(b)) = (to_sink(o[0]), to_sink(o[1])) {
                        if type1.is_none() && adjacent(a, b, n, w.surface) {
                            type1 = Some((v.id.clone(), a, b));
                        }
                    }
                }
                Color::Black => {
                    if let Some(j) = to_sink(o[0]) {
                        type2.get_or_insert((v.id.clone(), j));
                    }
                }
                Color::Through => {
                    if let Some(j) = to_sink(o[0]) {
                        through.get_or_insert((v.id.clone(), j));
                    }
                }
            }
        }

        let order: Vec<String> = sinks_in_order(&w).iter().map(|&s| w.boundary[s].id.clone()).collect();
        if let Some((v, a, b)) = type1 {
            let vert = w.internal.iter().find(|x| x.id == v).cloned().expect("vertex");
            let x_in = idx.in_edges[&v][0];
            let out_edges: Vec<Edge> = outs(&v).iter().map(|&e| w.edges[e].clone()).collect();
            let (sa, sb) = (order[a - 1].clone(), order[b - 1].clone());
            let jm = a.min(b);
            let new_sink = format!("{v}^in");
            let mut new_order: Vec<String> = order.iter().filter(|s| **s != sa && **s != sb).cloned().collect();
            new_order.insert(jm - 1, new_sink.clone());

            w.edges[x_in].head = new_sink.clone();
            let x_in_id = w.edges[x_in].id.clone();
            w.edges.retain(|e| e.tail != v);
            w.internal.retain(|x| x.id != v);
            w.boundary.retain(|x| x.id != sa && x.id != sb);
            w.boundary.push(boundary(new_sink, Role::Sink, usize::MAX));
            let kept = renumber_sinks(&mut w, &new_order);

            let mut layer = layer_wires(step, w.surface, n - 1, n, &kept);
            let stub = format!("L{step}stub");
            layer.edges.push(Edge { cut: 0, head: v.clone(), id: stub.clone(), label: None, tail: format!("L{step}s{jm}") });
            for e in &out_edges {
                let j = if e.head == sa { a } else { b };
                let mut e2 = e.clone();
                e2.head = format!("L{step}k{j}");
                layer.edges.push(e2);
            }
            let ccw = vert.ccw.iter().map(|e| if *e == x_in_id { stub.clone() } else { e.clone() }).collect();
            layer.internal.push(InternalVertex { ccw, color: Color::White, id: v.clone() });
            pieces.push(ElementaryPiece { color: Color::White, vertex: v, position: jm, layer });
        } else if let Some((v, j)) = type2.or(through) {
            let vert = w.internal.iter().find(|x| x.id == v).cloned().expect("vertex");
            let out = w.edges[outs(&v)[0]].clone();
            let ins: Vec<usize> = vert
                .ccw
                .iter()
                .filter(|e| **e != out.id)
                .map(|e| w.edges.iter().position(|x| &x.id == e).expect("edge"))
                .collect();
            let sj = order[j - 1].clone();
            let new_sinks: Vec<String> = (1..=ins.len()).map(|i| format!("{v}^in{i}")).collect();
            let mut new_order = order.clone();
            new_order.splice(j - 1..j, new_sinks.iter().cloned());
            let in_ids: Vec<String> = ins.iter().map(|&e| w.edges[e].id.clone()).collect();
            for (&e, s) in ins.iter().zip(&new_sinks) {
                w.edges[e].head = s.clone();
            }
            w.edges.retain(|e| e.id != out.id);
            w.internal.retain(|x| x.id != v);
            w.boundary.retain(|x| x.id != sj);
            for s in &new_sinks {
                w.boundary.push(boundary(s.clone(), Role::Sink, usize::MAX));
            }
            let kept = renumber_sinks(&mut w, &new_order);

            let n_in = n - 1 + ins.len();
            let mut layer = layer_wires(step, w.surface, n_in, n, &kept);
            let mut ccw = Vec::new();
            for (i, id) in in_ids.iter().enumerate() {
                let stub = format!("L{step}stub{}", i + 1);
                layer.edges.push(Edge {
                    cut: 0,
                    head: v.clone(),
                    id: stub.clone(),
                    label: None,
                    tail: format!("L{step}s{}", j + i),
                });
                ccw.push((id.clone(), stub));
            }
            let mut e2 = out.clone();
            e2.head = format!("L{step}k{j}");
            layer.edges.push(e2);
            let ccw = vert
                .ccw
                .iter()
                .map(|e| ccw.iter().find(|(o, _)| o == e).map(|(_, s)| s.clone()).unwrap_or_else(|| e.clone()))
                .collect();
            layer.internal.push(InternalVertex { ccw, color: vert.color, id: v.clone() });
            pieces.push(ElementaryPiece { color: vert.color, vertex: v, position: j, layer });
        } else {
            let v = w.internal.iter().map(|x| x.id.clone()).min().unwrap_or_default();
            return Err(Error::Cyclic(v));
        }
    }
    pieces.reverse();
    Ok(Decomposition { base: w, pieces })
}

/// Glues the base wires and every layer back together.
pub fn reglue(d: &Decomposition) -> Result<Network> {
    let mut net = d.base.clone();
    for p in &d.pieces {
        net = glue(&net, &p.layer)?;
    }
    Ok(net)
}
