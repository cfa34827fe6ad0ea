//! Weighted graph families whose perfect matchings model the cluster
//! variables.
//!
//! * [`build_h`]: the `2 x m` grid `H_m`.
//! * [`build_g22`]: `G_n = H_{2n-4}` for the `(2,2)` recurrence.
//! * [`build_g14`]: chains of octagons and squares joined by arcs for the
//!   `(1,4)` recurrence, one shape per residue class of `n`.
//! * [`build_tilde_g14`]: `G_m` with its outer right square removed (`m >= 5`)
//!   or adjoined (`m <= -1`).
//!
//! Vertices of every chain are numbered left to right so that the matching
//! engine, which always branches on the lowest unmatched vertex, only ever
//! carries a narrow frontier.

use std::collections::HashMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use petgraph::graph::UnGraph;
use serde::{Deserialize, Serialize};

use crate::{Error, Monomial, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeWeight {
    One,
    X1,
    X2,
}

impl EdgeWeight {
    pub fn as_str(self) -> &'static str {
        match self {
            EdgeWeight::One => "1",
            EdgeWeight::X1 => "x1",
            EdgeWeight::X2 => "x2",
        }
    }

    pub fn monomial(self) -> Monomial {
        match self {
            EdgeWeight::One => Monomial::ONE,
            EdgeWeight::X1 => Monomial::new(1, 0),
            EdgeWeight::X2 => Monomial::new(0, 1),
        }
    }
}

impl fmt::Display for EdgeWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EdgeWeight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "1" => Ok(EdgeWeight::One),
            "x1" => Ok(EdgeWeight::X1),
            "x2" => Ok(EdgeWeight::X2),
            other => Err(Error::MalformedGraph(format!("unknown edge weight `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: EdgeWeight,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CellKind {
    Square,
    Octagon,
}

impl CellKind {
    pub fn size(self) -> usize {
        match self {
            CellKind::Square => 4,
            CellKind::Octagon => 8,
        }
    }
}

/// A face of the chain, listed by the indices of its boundary edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub kind: CellKind,
    pub edges: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct WeightedGraph {
    pub vertex_count: usize,
    pub edges: Vec<Edge>,
    pub cells: Vec<Cell>,
    /// Indices into `edges` of the arc edges joining neighbouring octagons.
    pub arcs: Vec<usize>,
    pub tag: String,
}

impl WeightedGraph {
    pub fn empty(tag: impl Into<String>) -> Self {
        WeightedGraph {
            tag: tag.into(),
            ..WeightedGraph::default()
        }
    }

    /// Two vertices joined by one weight-1 edge.
    pub fn k2() -> Self {
        WeightedGraph {
            vertex_count: 2,
            edges: vec![Edge {
                u: 0,
                v: 1,
                weight: EdgeWeight::One,
            }],
            tag: "K_2".into(),
            ..WeightedGraph::default()
        }
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// `(squares, octagons)` from the cell metadata.
    pub fn cell_counts(&self) -> (usize, usize) {
        let squares = self.cells.iter().filter(|c| c.kind == CellKind::Square).count();
        (squares, self.cells.len() - squares)
    }

    /// Checks indices, simplicity and cell sizes.
    pub fn validate(&self) -> Result<()> {
        let mut seen = std::collections::HashSet::new();
        for (i, e) in self.edges.iter().enumerate() {
            if e.u >= self.vertex_count || e.v >= self.vertex_count {
                return Err(Error::MalformedGraph(format!("edge {i} has an endpoint out of range")));
            }
            if e.u == e.v {
                return Err(Error::MalformedGraph(format!("edge {i} is a loop")));
            }
            if !seen.insert((e.u.min(e.v), e.u.max(e.v))) {
                return Err(Error::MalformedGraph(format!("edge {i} duplicates an earlier edge")));
            }
        }
        for (i, c) in self.cells.iter().enumerate() {
            if c.edges.len() != c.kind.size() {
                return Err(Error::MalformedGraph(format!(
                    "cell {i} has {} edges, expected {}",
                    c.edges.len(),
                    c.kind.size()
                )));
            }
            if c.edges.iter().any(|&e| e >= self.edges.len()) {
                return Err(Error::MalformedGraph(format!("cell {i} references a missing edge")));
            }
        }
        if self.arcs.iter().any(|&e| e >= self.edges.len()) {
            return Err(Error::MalformedGraph("arc references a missing edge".into()));
        }
        Ok(())
    }

    pub fn export(&self, format: ExportFormat) -> String {
        match format {
            ExportFormat::Json => self.to_json(),
            ExportFormat::Dot => self.to_dot(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&GraphJson::from(self)).expect("graph json is always serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: GraphJson = serde_json::from_str(text)?;
        let g = WeightedGraph::try_from(raw)?;
        g.validate()?;
        Ok(g)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let arcs: std::collections::HashSet<usize> = self.arcs.iter().copied().collect();
        writeln!(out, "graph G {{").unwrap();
        writeln!(out, "  label=\"{}\";", self.tag.replace('"', "'")).unwrap();
        for v in 0..self.vertex_count {
            writeln!(out, "  {v};").unwrap();
        }
        for (i, e) in self.edges.iter().enumerate() {
            let style = if arcs.contains(&i) {
                ", style=dashed, color=blue, arc=true"
            } else {
                ""
            };
            writeln!(out, "  {} -- {} [label=\"{}\"{style}];", e.u, e.v, e.weight).unwrap();
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "dot" => Ok(ExportFormat::Dot),
            "json" => Ok(ExportFormat::Json),
            _ => Err(Error::UnknownFormat(s.to_string())),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: usize,
    edges: Vec<(usize, usize, String)>,
    cells: Vec<Cell>,
    arcs: Vec<usize>,
    tag: String,
}

impl From<&WeightedGraph> for GraphJson {
    fn from(g: &WeightedGraph) -> Self {
        GraphJson {
            vertices: g.vertex_count,
            edges: g.edges.iter().map(|e| (e.u, e.v, e.weight.to_string())).collect(),
            cells: g.cells.clone(),
            arcs: g.arcs.clone(),
            tag: g.tag.clone(),
        }
    }
}

impl TryFrom<GraphJson> for WeightedGraph {
    type Error = Error;

    fn try_from(raw: GraphJson) -> Result<Self> {
        let edges = raw
            .edges
            .into_iter()
            .map(|(u, v, w)| {
                Ok(Edge {
                    u,
                    v,
                    weight: w.parse()?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(WeightedGraph {
            vertex_count: raw.vertices,
            edges,
            cells: raw.cells,
            arcs: raw.arcs,
            tag: raw.tag,
        })
    }
}

/// Places `b` beside `a` with no identifications.
pub fn disjoint_union(a: &WeightedGraph, b: &WeightedGraph) -> WeightedGraph {
    let dv = a.vertex_count;
    let de = a.edges.len();
    let mut out = a.clone();
    out.vertex_count += b.vertex_count;
    out.edges.extend(b.edges.iter().map(|e| Edge {
        u: e.u + dv,
        v: e.v + dv,
        weight: e.weight,
    }));
    out.cells.extend(b.cells.iter().map(|c| Cell {
        kind: c.kind,
        edges: c.edges.iter().map(|i| i + de).collect(),
    }));
    out.arcs.extend(b.arcs.iter().map(|i| i + de));
    out.tag = match (a.tag.is_empty(), b.tag.is_empty()) {
        (true, _) => b.tag.clone(),
        (false, true) => a.tag.clone(),
        (false, false) => format!("{} + {}", a.tag, b.tag),
    };
    out
}

/// The `2 x m` grid. Column `j` has top vertex `2j` and bottom vertex
/// `2j + 1`; verticals weigh 1 and the horizontal pair between columns `j`
/// and `j + 1` weighs `x2` for even `j`, `x1` for odd `j`.
pub fn build_h(m: u32) -> Result<WeightedGraph> {
    if m == 0 {
        return Err(Error::IndexOutOfFamily { family: "H", index: 0 });
    }
    let m = m as usize;
    let mut g = WeightedGraph {
        vertex_count: 2 * m,
        tag: format!("H_{m}"),
        ..WeightedGraph::default()
    };
    g.edges.push(Edge {
        u: 0,
        v: 1,
        weight: EdgeWeight::One,
    });
    for j in 0..m - 1 {
        let weight = if j % 2 == 0 { EdgeWeight::X2 } else { EdgeWeight::X1 };
        let left = g.edges.len() - 1;
        let (t, b) = (2 * j, 2 * j + 1);
        g.edges.push(Edge { u: t, v: t + 2, weight });
        g.edges.push(Edge { u: b, v: b + 2, weight });
        g.edges.push(Edge {
            u: t + 2,
            v: b + 2,
            weight: EdgeWeight::One,
        });
        let n = g.edges.len();
        g.cells.push(Cell {
            kind: CellKind::Square,
            edges: vec![left, n - 3, n - 1, n - 2],
        });
    }
    Ok(g)
}

/// `(2,2)` graph `G_n = H_{2n-4}`, `n >= 3`.
pub fn build_g22(n: i64) -> Result<WeightedGraph> {
    if n < 3 {
        return Err(Error::IndexOutOfFamily {
            family: "(2,2)",
            index: n,
        });
    }
    let mut g = build_h((2 * n - 4) as u32)?;
    g.tag = format!("G_{n} (2,2)");
    Ok(g)
}

/// Position of a chain vertex: which cell group owns it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Site {
    LeftEnd,
    Octagon(usize),
    RightEnd,
}

/// Named corner of a chain cell. Octagon corners run `T1 T2` along the top,
/// `R1 R2` down the right, `B2 B1` along the bottom and `L2 L1` up the left.
/// `NL NR` / `SL SR` are the outer corners of the squares hanging above and
/// below an octagon; `P Q` are the outer top and bottom corners of an end
/// square. The declaration order is the left-to-right numbering order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Corner {
    P,
    Q,
    L1,
    L2,
    T1,
    B1,
    NL,
    SL,
    NR,
    SR,
    T2,
    B2,
    R1,
    R2,
}

impl Corner {
    /// Image under rotation by a half turn.
    fn half_turn(self) -> Corner {
        use Corner::*;
        match self {
            T1 => B2,
            B2 => T1,
            T2 => B1,
            B1 => T2,
            R1 => L2,
            L2 => R1,
            R2 => L1,
            L1 => R2,
            NL => SR,
            SR => NL,
            NR => SL,
            SL => NR,
            P => Q,
            Q => P,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    North,
    South,
}

impl Side {
    fn flip(self) -> Side {
        match self {
            Side::North => Side::South,
            Side::South => Side::North,
        }
    }

    fn near_left(self) -> Corner {
        match self {
            Side::North => Corner::T1,
            Side::South => Corner::B1,
        }
    }

    fn near_right(self) -> Corner {
        match self {
            Side::North => Corner::T2,
            Side::South => Corner::B2,
        }
    }

    fn far(self) -> (Corner, Corner) {
        match self {
            Side::North => (Corner::NL, Corner::NR),
            Side::South => (Corner::SL, Corner::SR),
        }
    }
}

/// Which vertical edge of a hanging square carries `x2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Vertical {
    Left,
    Right,
}

struct ChainLayout {
    octagons: usize,
    hang: Vec<Vec<Side>>,
    left_end: bool,
    right_end: bool,
    arcs: Vec<(usize, Corner, usize, Corner)>,
    hang_x2: Box<dyn Fn(usize, Side) -> Vertical>,
    /// Axis squares (end squares and squares between octagons, counted from
    /// the left) carry `x2` on the bottom when their offset from this index
    /// is even, on the top otherwise.
    anchor: i64,
}

/// A chain graph together with the name of each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledChain {
    pub graph: WeightedGraph,
    pub labels: Vec<(Site, Corner)>,
}

#[derive(Default)]
struct ChainBuilder {
    labels: Vec<(Site, Corner)>,
    ids: HashMap<(Site, Corner), usize>,
    edges: Vec<Edge>,
    cells: Vec<Cell>,
    arcs: Vec<usize>,
}

impl ChainBuilder {
    fn vertex(&mut self, site: Site, corner: Corner) -> usize {
        *self.ids.entry((site, corner)).or_insert_with(|| {
            self.labels.push((site, corner));
            self.labels.len() - 1
        })
    }

    fn edge(&mut self, a: (Site, Corner), b: (Site, Corner), weight: EdgeWeight) -> usize {
        let u = self.vertex(a.0, a.1);
        let v = self.vertex(b.0, b.1);
        self.edges.push(Edge { u, v, weight });
        self.edges.len() - 1
    }

    fn cell(&mut self, kind: CellKind, edges: Vec<usize>) {
        self.cells.push(Cell { kind, edges });
    }

    /// Renumbers vertices in chain order.
    fn finish(self, tag: String) -> LabeledChain {
        let mut order: Vec<usize> = (0..self.labels.len()).collect();
        order.sort_by_key(|&i| self.labels[i]);
        let mut new_id = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            new_id[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                u: new_id[e.u],
                v: new_id[e.v],
                weight: e.weight,
            })
            .collect();
        LabeledChain {
            graph: WeightedGraph {
                vertex_count: order.len(),
                edges,
                cells: self.cells,
                arcs: self.arcs,
                tag,
            },
            labels: order.iter().map(|&i| self.labels[i]).collect(),
        }
    }
}

fn build_chain(layout: &ChainLayout, tag: String) -> LabeledChain {
    use Corner::*;
    let mut b = ChainBuilder::default();
    let k_count = layout.octagons;
    // boundary edge ids per octagon: top, right, bottom, left
    let mut sides = Vec::with_capacity(k_count);
    for k in 0..k_count {
        let o = Site::Octagon(k);
        let ring = [
            (T1, T2, EdgeWeight::One),
            (T2, R1, EdgeWeight::X1),
            (R1, R2, EdgeWeight::One),
            (R2, B2, EdgeWeight::X1),
            (B2, B1, EdgeWeight::One),
            (B1, L2, EdgeWeight::X1),
            (L2, L1, EdgeWeight::One),
            (L1, T1, EdgeWeight::X1),
        ];
        let ids: Vec<usize> = ring.iter().map(|&(x, y, w)| b.edge((o, x), (o, y), w)).collect();
        sides.push([ids[0], ids[2], ids[4], ids[6]]);
        b.cell(CellKind::Octagon, ids);
    }

    type End = (Site, Corner);
    // (top endpoints, bottom endpoints, the two remaining edge ids)
    type AxisSquare = ((End, End), (End, End), [usize; 2]);
    let mut axis: Vec<AxisSquare> = Vec::new();
    if layout.left_end {
        let far = b.edge((Site::LeftEnd, P), (Site::LeftEnd, Q), EdgeWeight::One);
        let o = Site::Octagon(0);
        axis.push((
            ((Site::LeftEnd, P), (o, L1)),
            ((Site::LeftEnd, Q), (o, L2)),
            [far, sides[0][3]],
        ));
    }
    for k in 0..k_count.saturating_sub(1) {
        let (l, r) = (Site::Octagon(k), Site::Octagon(k + 1));
        axis.push((((l, R1), (r, L1)), ((l, R2), (r, L2)), [sides[k][1], sides[k + 1][3]]));
    }
    if layout.right_end {
        let far = b.edge((Site::RightEnd, P), (Site::RightEnd, Q), EdgeWeight::One);
        let o = Site::Octagon(k_count - 1);
        axis.push((
            ((o, R1), (Site::RightEnd, P)),
            ((o, R2), (Site::RightEnd, Q)),
            [sides[k_count - 1][1], far],
        ));
    }
    for (i, (top, bottom, [s0, s1])) in axis.into_iter().enumerate() {
        let x2_bottom = (i as i64 - layout.anchor).rem_euclid(2) == 0;
        let (wt, wb) = if x2_bottom {
            (EdgeWeight::One, EdgeWeight::X2)
        } else {
            (EdgeWeight::X2, EdgeWeight::One)
        };
        let t = b.edge(top.0, top.1, wt);
        let bt = b.edge(bottom.0, bottom.1, wb);
        b.cell(CellKind::Square, vec![s0, t, s1, bt]);
    }

    for (k, hang) in layout.hang.iter().enumerate() {
        let o = Site::Octagon(k);
        for &side in hang {
            let (fl, fr) = side.far();
            let far = b.edge((o, fl), (o, fr), EdgeWeight::One);
            let x2 = (layout.hang_x2)(k, side);
            let w = |v: Vertical| if v == x2 { EdgeWeight::X2 } else { EdgeWeight::One };
            let left = b.edge((o, side.near_left()), (o, fl), w(Vertical::Left));
            let right = b.edge((o, side.near_right()), (o, fr), w(Vertical::Right));
            let shared = match side {
                Side::North => sides[k][0],
                Side::South => sides[k][2],
            };
            b.cell(CellKind::Square, vec![shared, left, far, right]);
        }
    }

    for &(k1, c1, k2, c2) in &layout.arcs {
        let e = b.edge((Site::Octagon(k1), c1), (Site::Octagon(k2), c2), EdgeWeight::One);
        b.arcs.push(e);
    }
    b.finish(tag)
}

fn single_side(hang: &[Side]) -> Side {
    debug_assert_eq!(hang.len(), 1);
    hang[0]
}

/// Odd `n = 2k + 1 >= 5`: `k - 1` octagons with both end squares.
fn layout_odd_positive(k: usize, right_end: bool) -> ChainLayout {
    let count = k - 1;
    let hang: Vec<Vec<Side>> = (0..count)
        .map(|j| {
            vec![if (count - 1 - j).is_multiple_of(2) {
                Side::South
            } else {
                Side::North
            }]
        })
        .collect();
    let arcs = (0..count.saturating_sub(1))
        .map(|j| {
            (
                j,
                single_side(&hang[j]).near_right(),
                j + 1,
                single_side(&hang[j + 1]).near_right(),
            )
        })
        .collect();
    ChainLayout {
        octagons: count,
        hang,
        left_end: true,
        right_end,
        arcs,
        hang_x2: Box::new(|_, _| Vertical::Left),
        anchor: count as i64,
    }
}

/// Odd `n = 1 - 2k <= -1`: `k` octagons, no end squares.
fn layout_odd_negative(k: usize, right_end: bool) -> ChainLayout {
    let count = k;
    let hang: Vec<Vec<Side>> = (0..count)
        .map(|j| {
            vec![if (count - 1 - j).is_multiple_of(2) {
                Side::North
            } else {
                Side::South
            }]
        })
        .collect();
    let arcs = (0..count.saturating_sub(1))
        .map(|j| {
            (
                j,
                single_side(&hang[j]).near_left(),
                j + 1,
                single_side(&hang[j + 1]).near_left(),
            )
        })
        .collect();
    ChainLayout {
        octagons: count,
        hang,
        left_end: false,
        right_end,
        arcs,
        hang_x2: Box::new(|_, _| Vertical::Right),
        anchor: count as i64 - 1,
    }
}

/// Even `n = 2k + 2 >= 4`: `2k - 1` octagons around a centre octagon that
/// carries squares on both sides, with both end squares.
fn layout_even_positive(k: usize) -> ChainLayout {
    let count = 2 * k - 1;
    let center = k - 1;
    let mut hang = vec![Vec::new(); count];
    hang[center] = vec![Side::North, Side::South];
    for j in 1..k {
        let s = if j % 2 == 1 { Side::South } else { Side::North };
        hang[center - j] = vec![s];
        hang[center + j] = vec![s.flip()];
    }
    let side_at = |idx: usize, partner: Side| {
        if idx == center {
            partner.flip()
        } else {
            single_side(&hang[idx])
        }
    };
    let mut arcs = Vec::new();
    for j in 1..k {
        let new_left = single_side(&hang[center - j]);
        let old_left = side_at(center - j + 1, new_left);
        arcs.push((center - j, new_left.near_right(), center - j + 1, old_left.near_right()));
        let new_right = single_side(&hang[center + j]);
        let old_right = side_at(center + j - 1, new_right);
        arcs.push((center + j - 1, old_right.near_left(), center + j, new_right.near_left()));
    }
    ChainLayout {
        octagons: count,
        hang,
        left_end: true,
        right_end: true,
        arcs,
        hang_x2: Box::new(move |idx, side| match idx.cmp(&center) {
            std::cmp::Ordering::Equal if side == Side::North => Vertical::Left,
            std::cmp::Ordering::Equal => Vertical::Right,
            std::cmp::Ordering::Less => Vertical::Left,
            std::cmp::Ordering::Greater => Vertical::Right,
        }),
        anchor: center as i64,
    }
}

/// Even `n = 2 - 2k <= 0`: `2k - 1` octagons with a bare centre, no end
/// squares.
fn layout_even_negative(k: usize) -> ChainLayout {
    let count = 2 * k - 1;
    let center = k - 1;
    let mut hang = vec![Vec::new(); count];
    for j in 1..k {
        let s = if j % 2 == 1 { Side::North } else { Side::South };
        hang[center - j] = vec![s];
        hang[center + j] = vec![s.flip()];
    }
    let side_at = |idx: usize, partner: Side| {
        if idx == center {
            partner.flip()
        } else {
            single_side(&hang[idx])
        }
    };
    let mut arcs = Vec::new();
    for j in 1..k {
        let new_left = single_side(&hang[center - j]);
        let old_left = side_at(center - j + 1, new_left);
        arcs.push((center - j, new_left.near_left(), center - j + 1, old_left.near_left()));
        let new_right = single_side(&hang[center + j]);
        let old_right = side_at(center + j - 1, new_right);
        arcs.push((
            center + j - 1,
            old_right.near_right(),
            center + j,
            new_right.near_right(),
        ));
    }
    ChainLayout {
        octagons: count,
        hang,
        left_end: false,
        right_end: false,
        arcs,
        hang_x2: Box::new(move |idx, _| if idx < center { Vertical::Left } else { Vertical::Right }),
        anchor: center as i64 - 1,
    }
}

/// The lone square `G_3`: three edges of weight 1 and one of weight `x2`.
fn single_square(tag: String) -> LabeledChain {
    use Corner::*;
    let mut b = ChainBuilder::default();
    let l = b.edge((Site::LeftEnd, P), (Site::LeftEnd, Q), EdgeWeight::One);
    let t = b.edge((Site::LeftEnd, P), (Site::RightEnd, P), EdgeWeight::One);
    let r = b.edge((Site::RightEnd, P), (Site::RightEnd, Q), EdgeWeight::One);
    let bt = b.edge((Site::LeftEnd, Q), (Site::RightEnd, Q), EdgeWeight::X2);
    b.cell(CellKind::Square, vec![l, t, r, bt]);
    b.finish(tag)
}

/// `(1,4)` graph `G_n` with vertex names, `n` not in `{1, 2}`.
pub fn build_g14_labeled(n: i64) -> Result<LabeledChain> {
    let tag = format!("G_{n} (1,4)");
    let layout = match n {
        1 | 2 => {
            return Err(Error::IndexOutOfFamily {
                family: "(1,4)",
                index: n,
            })
        }
        3 => return Ok(single_square(tag)),
        _ if n % 2 != 0 && n > 0 => layout_odd_positive(((n - 1) / 2) as usize, true),
        _ if n % 2 != 0 => layout_odd_negative(((1 - n) / 2) as usize, false),
        _ if n > 0 => layout_even_positive(((n - 2) / 2) as usize),
        _ => layout_even_negative(((2 - n) / 2) as usize),
    };
    Ok(build_chain(&layout, tag))
}

/// `(1,4)` graph `G_n`, `n` not in `{1, 2}`.
pub fn build_g14(n: i64) -> Result<WeightedGraph> {
    Ok(build_g14_labeled(n)?.graph)
}

/// Tilde graph for odd `m`: `G_m` without its right end square for `m >= 5`,
/// with an extra right end square for `m <= -1`, and empty for `m = 3`.
pub fn build_tilde_g14_labeled(m: i64) -> Result<LabeledChain> {
    let tag = format!("tilde G_{m} (1,4)");
    let layout = match m {
        3 => {
            return Ok(LabeledChain {
                graph: WeightedGraph::empty(tag),
                labels: Vec::new(),
            })
        }
        _ if m % 2 == 0 || m == 1 => {
            return Err(Error::IndexOutOfFamily {
                family: "tilde (1,4)",
                index: m,
            })
        }
        _ if m > 0 => layout_odd_positive(((m - 1) / 2) as usize, false),
        _ => layout_odd_negative(((1 - m) / 2) as usize, true),
    };
    Ok(build_chain(&layout, tag))
}

pub fn build_tilde_g14(m: i64) -> Result<WeightedGraph> {
    Ok(build_tilde_g14_labeled(m)?.graph)
}

/// Vertex permutation of `G_n` (even `n`) induced by rotating the chain a
/// half turn.
pub fn half_turn_map(n: i64) -> Result<Vec<usize>> {
    if n % 2 != 0 || n == 2 {
        return Err(Error::IndexOutOfFamily {
            family: "even (1,4)",
            index: n,
        });
    }
    let chain = build_g14_labeled(n)?;
    let octagons = chain
        .labels
        .iter()
        .filter_map(|(s, _)| match s {
            Site::Octagon(k) => Some(k + 1),
            _ => None,
        })
        .max()
        .unwrap_or(0);
    let index: HashMap<(Site, Corner), usize> = chain.labels.iter().enumerate().map(|(i, l)| (*l, i)).collect();
    chain
        .labels
        .iter()
        .map(|&(site, corner)| {
            let image_site = match site {
                Site::LeftEnd => Site::RightEnd,
                Site::RightEnd => Site::LeftEnd,
                Site::Octagon(k) => Site::Octagon(octagons - 1 - k),
            };
            index
                .get(&(image_site, corner.half_turn()))
                .copied()
                .ok_or_else(|| Error::MalformedGraph(format!("{site:?}/{corner:?} has no half-turn image")))
        })
        .collect()
}

/// True when `map` is an involution of the vertices carrying every edge to
/// an edge of the same weight.
pub fn is_weighted_involution(g: &WeightedGraph, map: &[usize]) -> bool {
    if map.len() != g.vertex_count || map.iter().enumerate().any(|(v, &w)| w >= map.len() || map[w] != v) {
        return false;
    }
    let weights: HashMap<(usize, usize), EdgeWeight> = g
        .edges
        .iter()
        .map(|e| ((e.u.min(e.v), e.u.max(e.v)), e.weight))
        .collect();
    g.edges.iter().all(|e| {
        let (a, b) = (map[e.u], map[e.v]);
        weights.get(&(a.min(b), a.max(b))) == Some(&e.weight)
    })
}

fn to_petgraph(g: &WeightedGraph) -> UnGraph<(), EdgeWeight> {
    let mut pg = UnGraph::with_capacity(g.vertex_count, g.edges.len());
    let nodes: Vec<_> = (0..g.vertex_count).map(|_| pg.add_node(())).collect();
    for e in &g.edges {
        pg.add_edge(nodes[e.u], nodes[e.v], e.weight);
    }
    pg
}

/// Weight-preserving graph isomorphism test.
pub fn is_weighted_isomorphic(a: &WeightedGraph, b: &WeightedGraph) -> bool {
    if a.vertex_count != b.vertex_count || a.edges.len() != b.edges.len() {
        return false;
    }
    let (ga, gb) = (to_petgraph(a), to_petgraph(b));
    petgraph::algo::is_isomorphic_matching(&ga, &gb, |_, _| true, |x, y| x == y)
}
