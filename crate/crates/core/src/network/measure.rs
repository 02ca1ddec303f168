//! Boundary measurement: path generating functions between sources and sinks.

use std::collections::{BTreeMap, HashMap};

use super::model::{Network, VertexRef};
use crate::algebra::{Element, Gen, Matrix, Word};
use crate::error::Result;
use crate::scalar::{Scalar, Var};

/// Rows are sources, columns are sinks, both in index order.
pub type MeasurementMatrix = Matrix;

/// Paths from one source keyed by sink position, each as (edge word, winding).
pub type PathsBySink = BTreeMap<usize, Vec<(Word, i32)>>;

/// Every directed path from each source, as (edge word, winding), grouped by sink position.
pub fn boundary_paths(net: &Network) -> Result<Vec<PathsBySink>> {
    let order = net.topological_order()?;
    let idx = net.index();
    let mut result = Vec::new();
    for &s in &idx.sources {
        let mut at: HashMap<&str, Vec<(Word, i32)>> = HashMap::new();
        at.insert(net.boundary[s].id.as_str(), vec![(Word::new(), 0)]);
        let mut by_sink: BTreeMap<usize, Vec<(Word, i32)>> = BTreeMap::new();
        for v in &order {
            let Some(paths) = at.remove(v.as_str()) else { continue };
            if let Some(VertexRef::Boundary(b)) = idx.vertex_of.get(v.as_str()) {
                if idx.sinks.contains(b) {
                    by_sink.entry(*b).or_default().extend(paths);
                    continue;
                }
            }
            for &e in idx.out_edges.get(v.as_str()).map(Vec::as_slice).unwrap_or(&[]) {
                let edge = &net.edges[e];
                let bucket = at.entry(edge.head.as_str()).or_default();
                for (w, d) in &paths {
                    let mut w2 = w.clone();
                    w2.push(Gen(e as u32));
                    bucket.push((w2, d + edge.cut));
                }
            }
        }
        result.push(by_sink);
    }
    Ok(result)
}

/// `b_ij = Σ λ^d · path` over directed paths from source i to sink j.
pub fn boundary_matrix(net: &Network) -> Result<MeasurementMatrix> {
    net.check()?;
    let idx = net.index();
    let rows: Vec<_> = idx.sources.iter().map(|&i| net.object(i)).collect();
    let cols: Vec<_> = idx.sinks.iter().map(|&i| net.object(i)).collect();
    let mut m = Matrix::zero(rows.clone(), cols.clone());
    for (i, by_sink) in boundary_paths(net)?.into_iter().enumerate() {
        for (sink, paths) in by_sink {
            let j = idx.sinks.iter().position(|&x| x == sink).expect("sink");
            let mut e = Element::zero(rows[i], cols[j]);
            for (w, d) in paths {
                e.add_term(w, Scalar::var_pow(Var::Lambda, d));
            }
            m.set(i, j, e);
        }
    }
    Ok(m)
}
