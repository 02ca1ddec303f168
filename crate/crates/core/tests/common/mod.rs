#![allow(dead_code)]

use ncnet::algebra::{Element, Matrix, TensorElement};
use ncnet::io::{serialize_element, serialize_tensor};
use ncnet::network::Network;

pub fn show(net: &Network, e: &Element) -> String {
    serialize_element(e, net)
}

pub fn show_t(net: &Network, t: &TensorElement) -> String {
    serialize_tensor(t, net)
}

pub fn show_matrix(net: &Network, m: &Matrix) -> Vec<Vec<String>> {
    (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| show(net, m.get(i, j))).collect()).collect()
}

/// Parses an element of `net` between two boundary vertices named by id.
pub fn el(net: &Network, s: &str, src: &str, dst: &str) -> Element {
    let obj = |id: &str| net.object(net.boundary.iter().position(|b| b.id == id).expect("boundary id"));
    ncnet::io::parse_element(s, obj(src), obj(dst), &|l| net.gen_of_label(l).ok()).expect("parses")
}
