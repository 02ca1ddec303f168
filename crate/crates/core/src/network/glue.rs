//! Gluing networks along matching boundary points, and closing a cylinder to a torus.

use std::collections::{HashMap, HashSet};

use super::measure::{boundary_matrix, MeasurementMatrix};
use super::model::{Color, InternalVertex, Network, Role, Surface};
use crate::algebra::ObjectId;
use crate::error::{Error, Result};

fn fresh(base: &str, taken: &HashSet<String>) -> String {
    let mut s = base.to_string();
    while taken.contains(&s) {
        s.push('\'');
    }
    s
}

/// Identifies sink `j` of `g1` with source `j` of `g2`; each identified point
/// becomes a 2-valent through point.
pub fn glue(g1: &Network, g2: &Network) -> Result<Network> {
    if g1.surface != g2.surface {
        return Err(Error::Surface(format!("cannot glue {:?} to {:?}", g1.surface, g2.surface)));
    }
    let (i1, i2) = (g1.index(), g2.index());
    if i1.sinks.len() != i2.sources.len() {
        return Err(Error::SizeMismatch(format!(
            "{} sinks against {} sources",
            i1.sinks.len(),
            i2.sources.len()
        )));
    }
    let labels1: HashSet<&str> = g1.edges.iter().filter_map(|e| e.label.as_deref()).collect();
    if let Some(l) = g2.edges.iter().filter_map(|e| e.label.as_deref()).find(|l| labels1.contains(l)) {
        return Err(Error::InvalidNetwork(format!("label {l:?} occurs in both networks")));
    }

    let mut out = g1.clone();
    let sink_ids: HashSet<&str> = i1.sinks.iter().map(|&s| g1.boundary[s].id.as_str()).collect();
    out.boundary.retain(|b| !sink_ids.contains(b.id.as_str()));

    let mut taken_v: HashSet<String> =
        out.boundary.iter().map(|b| b.id.clone()).chain(out.internal.iter().map(|v| v.id.clone())).collect();
    let mut taken_e: HashSet<String> = out.edges.iter().map(|e| e.id.clone()).collect();

    let source_ids2: HashSet<&str> = i2.sources.iter().map(|&s| g2.boundary[s].id.as_str()).collect();
    let mut vmap: HashMap<&str, String> = HashMap::new();
    for id in g2.boundary.iter().map(|b| &b.id).chain(g2.internal.iter().map(|v| &v.id)) {
        if source_ids2.contains(id.as_str()) {
            continue;
        }
        let n = fresh(id, &taken_v);
        taken_v.insert(n.clone());
        vmap.insert(id, n);
    }
    let mut emap: HashMap<&str, String> = HashMap::new();
    for e in &g2.edges {
        let n = fresh(&e.id, &taken_e);
        taken_e.insert(n.clone());
        emap.insert(&e.id, n);
    }

    // Through points replace each identified pair.
    let mut through_of_sink: HashMap<&str, String> = HashMap::new();
    let mut through_of_source: HashMap<&str, String> = HashMap::new();
    for (j, (&s1, &s2)) in i1.sinks.iter().zip(&i2.sources).enumerate() {
        let t = fresh(&format!("t{}", j + 1), &taken_v);
        taken_v.insert(t.clone());
        through_of_sink.insert(&g1.boundary[s1].id, t.clone());
        through_of_source.insert(&g2.boundary[s2].id, t);
    }
    for e in out.edges.iter_mut() {
        if let Some(t) = through_of_sink.get(e.head.as_str()) {
            e.head = t.clone();
        }
    }
    let mut new_edges = Vec::new();
    for e in &g2.edges {
        let mut e2 = e.clone();
        e2.id = emap[e.id.as_str()].clone();
        e2.tail = through_of_source.get(e.tail.as_str()).cloned().unwrap_or_else(|| vmap[e.tail.as_str()].clone());
        e2.head = vmap[e.head.as_str()].clone();
        new_edges.push(e2);
    }
    for (&s1, &s2) in i1.sinks.iter().zip(&i2.sources) {
        let t = &through_of_sink[g1.boundary[s1].id.as_str()];
        let e_in = g1.edges[i1.in_edges[&g1.boundary[s1].id][0]].id.clone();
        let e_out = emap[g2.edges[i2.out_edges[&g2.boundary[s2].id][0]].id.as_str()].clone();
        out.internal.push(InternalVertex { ccw: vec![e_in, e_out], color: Color::Through, id: t.clone() });
    }
    for v in &g2.internal {
        let mut v2 = v.clone();
        v2.id = vmap[v.id.as_str()].clone();
        v2.ccw = v.ccw.iter().map(|e| emap[e.as_str()].clone()).collect();
        out.internal.push(v2);
    }
    for b in &g2.boundary {
        if b.role == Role::Sink {
            let mut b2 = b.clone();
            b2.id = vmap[b.id.as_str()].clone();
            out.boundary.push(b2);
        }
    }
    out.edges.extend(new_edges);
    Ok(out)
}

/// A cylindrical network whose sink `j` is identified with source `j`.
#[derive(Clone, Debug)]
pub struct TorusContext {
    pub net: Network,
    /// Source objects; columns of `b` are relabeled onto them.
    pub objects: Vec<ObjectId>,
    /// Square boundary matrix with composable powers.
    pub b: MeasurementMatrix,
}

pub fn glue_to_torus(net: &Network) -> Result<TorusContext> {
    if net.surface != Surface::Cylinder {
        return Err(Error::Surface("torus gluing needs a cylindrical network".into()));
    }
    if net.num_sources() != net.num_sinks() {
        return Err(Error::SizeMismatch(format!(
            "{} sources and {} sinks",
            net.num_sources(),
            net.num_sinks()
        )));
    }
    let objects = net.source_objects();
    let b = boundary_matrix(net)?.with_cols(objects.clone())?;
    Ok(TorusContext { net: net.clone(), objects, b })
}
