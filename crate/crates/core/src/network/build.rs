//! Fixture networks and layered construction of random valid networks.
//!
//! Wire positions run from the top (position 0) to the bottom. On a cylinder the
//! top and bottom of the strip are identified along the cut; an edge leaving
//! through the top and re-entering at the bottom crosses the cut with sign +1.

use rand::Rng;

use super::glue::glue;
use super::model::{BoundaryVertex, Color, Edge, InternalVertex, Network, Role, Surface};

fn edge(id: &str, tail: &str, head: &str, label: Option<&str>, cut: i32) -> Edge {
    Edge { cut, head: head.into(), id: id.into(), label: label.map(Into::into), tail: tail.into() }
}

fn bv(id: &str, role: Role, index: usize) -> BoundaryVertex {
    BoundaryVertex { id: id.into(), index, role }
}

fn iv(id: &str, color: Color, ccw: &[&str]) -> InternalVertex {
    InternalVertex { ccw: ccw.iter().map(|s| s.to_string()).collect(), color, id: id.into() }
}

/// One white vertex: `x3` in, `x2` to sink 1, `x1` to sink 2.
pub fn gamma_white_on(surface: Surface) -> Network {
    Network {
        boundary: vec![bv("p1", Role::Source, 1), bv("q1", Role::Sink, 1), bv("q2", Role::Sink, 2)],
        edges: vec![
            edge("x1", "w", "q2", Some("x1"), 0),
            edge("x2", "w", "q1", Some("x2"), 0),
            edge("x3", "p1", "w", Some("x3"), 0),
        ],
        internal: vec![iv("w", Color::White, &["x1", "x2", "x3"])],
        surface,
    }
}

pub fn gamma_white() -> Network {
    gamma_white_on(Surface::Disk)
}

/// One black vertex: `y1` from source 1, `y2` from source 2, `y3` to the sink.
pub fn gamma_black_on(surface: Surface) -> Network {
    Network {
        boundary: vec![bv("p1", Role::Source, 1), bv("p2", Role::Source, 2), bv("q1", Role::Sink, 1)],
        edges: vec![
            edge("y1", "p1", "v", Some("y1"), 0),
            edge("y2", "p2", "v", Some("y2"), 0),
            edge("y3", "v", "q1", Some("y3"), 0),
        ],
        internal: vec![iv("v", Color::Black, &["y1", "y2", "y3"])],
        surface,
    }
}

pub fn gamma_black() -> Network {
    gamma_black_on(Surface::Disk)
}

/// The black piece on a cylinder with `y2` crossing the cut; rows come out permuted,
/// `B = (λ·y2y3 ; y1y3)`.
pub fn gamma_black_cut() -> Network {
    Network {
        boundary: vec![bv("p1", Role::Source, 1), bv("p2", Role::Source, 2), bv("q1", Role::Sink, 1)],
        edges: vec![
            edge("y1", "p2", "v", Some("y1"), 0),
            edge("y2", "p1", "v", Some("y2"), 1),
            edge("y3", "v", "q1", Some("y3"), 0),
        ],
        internal: vec![iv("v", Color::Black, &["y1", "y2", "y3"])],
        surface: Surface::Cylinder,
    }
}

/// The square network with edges a, b, c, d and identity-labeled boundary stubs.
pub fn fig1() -> Network {
    Network {
        boundary: vec![
            bv("b1", Role::Source, 1),
            bv("b2", Role::Source, 2),
            bv("b3", Role::Sink, 2),
            bv("b4", Role::Sink, 1),
        ],
        edges: vec![
            edge("a", "i2", "i1", Some("a"), 0),
            edge("b", "i2", "i3", Some("b"), 0),
            edge("c", "i4", "i3", Some("c"), 0),
            edge("d", "i1", "i4", Some("d"), 0),
            edge("s1", "b1", "i1", None, 0),
            edge("s2", "b2", "i2", None, 0),
            edge("s3", "i3", "b3", None, 0),
            edge("s4", "i4", "b4", None, 0),
        ],
        internal: vec![
            iv("i1", Color::Black, &["s1", "a", "d"]),
            iv("i2", Color::White, &["b", "a", "s2"]),
            iv("i3", Color::Black, &["c", "b", "s3"]),
            iv("i4", Color::White, &["c", "s4", "d"]),
        ],
        surface: Surface::Disk,
    }
}

/// `k` parallel identity-labeled wires.
pub fn identity_wires(surface: Surface, k: usize, prefix: &str) -> Network {
    let mut boundary = Vec::new();
    let mut edges = Vec::new();
    for i in 1..=k {
        let (s, t) = (format!("{prefix}in{i}"), format!("{prefix}out{i}"));
        edges.push(edge(&format!("{prefix}w{i}"), &s, &t, None, 0));
        boundary.push(bv(&s, Role::Source, i));
        boundary.push(bv(&t, Role::Sink, i));
    }
    Network { boundary, edges, internal: Vec::new(), surface }
}

/// The two-point torus fixture: the cut-crossing black piece glued to a white piece.
pub fn torus_fixture() -> Network {
    glue(&gamma_black_cut(), &gamma_white_on(Surface::Cylinder)).expect("fixture pieces glue")
}

/// Builds networks left to right, one trivalent vertex per layer.
#[derive(Clone, Debug)]
pub struct LayeredBuilder {
    surface: Surface,
    prefix: String,
    boundary: Vec<BoundaryVertex>,
    internal: Vec<InternalVertex>,
    edges: Vec<Edge>,
    /// Open edge at each wire position.
    wires: Vec<usize>,
    labeled: bool,
}

impl LayeredBuilder {
    pub fn new(surface: Surface, k: usize, prefix: &str) -> LayeredBuilder {
        assert!(k >= 1, "at least one wire");
        let mut b = LayeredBuilder {
            surface,
            prefix: prefix.to_string(),
            boundary: Vec::new(),
            internal: Vec::new(),
            edges: Vec::new(),
            wires: Vec::new(),
            labeled: true,
        };
        for i in 1..=k {
            let s = format!("{prefix}s{i}");
            b.boundary.push(bv(&s, Role::Source, i));
            let e = b.new_edge(&s, 0);
            b.wires.push(e);
        }
        b
    }

    /// Makes every subsequently created edge identity-labeled (or named again).
    pub fn labeled(mut self, on: bool) -> LayeredBuilder {
        self.labeled = on;
        self
    }

    pub fn width(&self) -> usize {
        self.wires.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.internal.len()
    }

    fn new_edge(&mut self, tail: &str, cut: i32) -> usize {
        let id = format!("{}e{}", self.prefix, self.edges.len() + 1);
        let label = if self.labeled { Some(id.as_str()) } else { None };
        self.edges.push(edge(&id, tail, "", label, cut));
        self.edges.len() - 1
    }

    fn new_vertex(&mut self, color: Color) -> String {
        let id = format!("{}v{}", self.prefix, self.internal.len() + 1);
        self.internal.push(iv(&id, color, &[]));
        id
    }

    fn close(&mut self, e: usize, head: &str) {
        self.edges[e].head = head.to_string();
    }

    fn set_ccw(&mut self, v: &str, ccw: [usize; 3]) {
        let ids = ccw.map(|e| self.edges[e].id.clone()).to_vec();
        self.internal.iter_mut().find(|x| x.id == v).expect("vertex").ccw = ids;
    }

    fn white_at(&mut self, input: usize, x1_cut: i32, x2_cut: i32) -> (String, usize, usize) {
        let v = self.new_vertex(Color::White);
        self.close(input, &v);
        let x1 = self.new_edge(&v, x1_cut);
        let x2 = self.new_edge(&v, x2_cut);
        self.set_ccw(&v, [x1, x2, input]);
        (v, x1, x2)
    }

    fn black_at(&mut self, y1: usize, y2: usize) -> usize {
        let v = self.new_vertex(Color::Black);
        self.close(y1, &v);
        self.close(y2, &v);
        let y3 = self.new_edge(&v, 0);
        self.set_ccw(&v, [y1, y2, y3]);
        y3
    }

    /// Splits wire `p` into an upper output at `p` and a lower one at `p + 1`.
    pub fn white(&mut self, p: usize) {
        let input = self.wires[p];
        let (_, x1, x2) = self.white_at(input, 0, 0);
        self.wires[p] = x2;
        self.wires.insert(p + 1, x1);
    }

    /// Merges wires `p` (upper) and `p + 1` (lower) into one at `p`.
    pub fn black(&mut self, p: usize) {
        let (y1, y2) = (self.wires[p], self.wires[p + 1]);
        let y3 = self.black_at(y1, y2);
        self.wires.splice(p..p + 2, [y3]);
    }

    fn require_cylinder(&self) {
        assert_eq!(self.surface, Surface::Cylinder, "wrapping moves need a cylinder");
    }

    /// Splits the top wire; the upper output crosses the cut upward and lands at the bottom.
    pub fn white_wrap_top(&mut self) {
        self.require_cylinder();
        let input = self.wires[0];
        let (_, x1, x2) = self.white_at(input, 0, 1);
        self.wires[0] = x1;
        self.wires.push(x2);
    }

    /// Splits the bottom wire; the lower output crosses the cut downward and lands at the top.
    pub fn white_wrap_bottom(&mut self) {
        self.require_cylinder();
        let k = self.width() - 1;
        let input = self.wires[k];
        let (_, x1, x2) = self.white_at(input, -1, 0);
        self.wires[k] = x2;
        self.wires.insert(0, x1);
    }

    /// Merges the bottom wire with the top wire brought down across the cut; output at the bottom.
    pub fn black_wrap_bottom(&mut self) {
        self.require_cylinder();
        let k = self.width();
        assert!(k >= 2, "two wires needed");
        let (y1, y2) = (self.wires[k - 1], self.wires[0]);
        self.edges[y2].cut += 1;
        let y3 = self.black_at(y1, y2);
        self.wires.remove(k - 1);
        self.wires.remove(0);
        self.wires.push(y3);
    }

    /// Merges the top wire with the bottom wire brought up across the cut; output at the top.
    pub fn black_wrap_top(&mut self) {
        self.require_cylinder();
        let k = self.width();
        assert!(k >= 2, "two wires needed");
        let (y1, y2) = (self.wires[k - 1], self.wires[0]);
        self.edges[y1].cut -= 1;
        let y3 = self.black_at(y1, y2);
        self.wires.remove(k - 1);
        self.wires[0] = y3;
    }

    /// Moves the top wire across the cut to the bottom.
    pub fn rotate_up(&mut self) {
        self.require_cylinder();
        let e = self.wires.remove(0);
        self.edges[e].cut += 1;
        self.wires.push(e);
    }

    /// Moves the bottom wire across the cut to the top.
    pub fn rotate_down(&mut self) {
        self.require_cylinder();
        let e = self.wires.pop().expect("nonempty");
        self.edges[e].cut -= 1;
        self.wires.insert(0, e);
    }

    pub fn finish(mut self) -> Network {
        let wires = self.wires.clone();
        for (j, e) in wires.into_iter().enumerate() {
            let t = format!("{}k{}", self.prefix, j + 1);
            self.boundary.push(bv(&t, Role::Sink, j + 1));
            self.close(e, &t);
        }
        Network { boundary: self.boundary, edges: self.edges, internal: self.internal, surface: self.surface }
    }
}

/// A random planar network with between one and `max_vertices` trivalent vertices.
pub fn random_planar<R: Rng>(rng: &mut R, max_vertices: usize, prefix: &str) -> Network {
    let mut b = LayeredBuilder::new(Surface::Disk, rng.gen_range(1..=3), prefix);
    let n = rng.gen_range(1..=max_vertices.max(1));
    while b.vertex_count() < n {
        let k = b.width();
        if k >= 2 && (k >= 4 || rng.gen_bool(0.5)) {
            b.black(rng.gen_range(0..k - 1));
        } else {
            b.white(rng.gen_range(0..k));
        }
    }
    b.finish()
}

/// A random cylindrical network built from planar and cut-crossing layers,
/// followed by random cut moves across vertices keeping every cut in {-1, 0, 1}.
pub fn random_cylindrical<R: Rng>(rng: &mut R, max_vertices: usize, prefix: &str) -> Network {
    let mut b = LayeredBuilder::new(Surface::Cylinder, rng.gen_range(1..=3), prefix);
    let n = rng.gen_range(1..=max_vertices.max(1));
    while b.vertex_count() < n {
        let k = b.width();
        let merge = k >= 2 && (k >= 4 || rng.gen_bool(0.5));
        match (merge, rng.gen_range(0..4)) {
            (true, 0) => b.black_wrap_bottom(),
            (true, 1) => b.black_wrap_top(),
            (true, _) => b.black(rng.gen_range(0..k - 1)),
            (false, 0) => b.white_wrap_top(),
            (false, 1) => b.white_wrap_bottom(),
            (false, _) => b.white(rng.gen_range(0..k)),
        }
        if b.width() >= 2 && rng.gen_bool(0.15) {
            if rng.gen_bool(0.5) {
                b.rotate_up()
            } else {
                b.rotate_down()
            }
        }
    }
    let mut net = b.finish();
    for _ in 0..net.internal.len() {
        let v = net.internal[rng.gen_range(0..net.internal.len())].id.clone();
        let s: i32 = if rng.gen_bool(0.5) { 1 } else { -1 };
        let shifted: Vec<(usize, i32)> = net
            .edges
            .iter()
            .enumerate()
            .filter_map(|(i, e)| {
                if e.head == v {
                    Some((i, e.cut + s))
                } else if e.tail == v {
                    Some((i, e.cut - s))
                } else {
                    None
                }
            })
            .collect();
        if shifted.iter().all(|(_, c)| c.abs() <= 1) {
            for (i, c) in shifted {
                net.edges[i].cut = c;
            }
        }
    }
    net
}

/// The shipped fixture corpus by file stem.
pub fn named_fixtures() -> Vec<(&'static str, Network)> {
    vec![
        ("fig1", fig1()),
        ("gamma_white", gamma_white()),
        ("gamma_black", gamma_black()),
        ("gamma_black_cut", gamma_black_cut()),
        ("gamma_white_cyl", gamma_white_on(Surface::Cylinder)),
        ("torus", torus_fixture()),
    ]
}
