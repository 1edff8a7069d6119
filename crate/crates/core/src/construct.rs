//! The near-complete block `K_{r+1} - e` and the two regular families built
//! from it that have no `{k, r-k}`-factor.
//!
//! Labelling is fixed: blocks occupy consecutive id ranges, each block's
//! unsaturated pair sits at local offsets 0 and 1, and hubs take the highest
//! ids.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("block degree must be even and at least 2, got {0}")]
    BadBlockDegree(usize),
    #[error("G1 needs r >= 6 with r/2 odd, got r = {0}")]
    BadG1Degree(usize),
    #[error("G2 needs r >= 8 with r/2 even, got r = {0}")]
    BadG2Degree(usize),
}

/// `K_{r+1}` with the edge between its two unsaturated vertices removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub graph: Graph,
    pub unsaturated: (Vertex, Vertex),
}

pub fn near_complete_block(r: usize) -> Result<Block, ConstructionError> {
    if r < 2 || r % 2 == 1 {
        return Err(ConstructionError::BadBlockDegree(r));
    }
    let pairs = block_pairs(r, 0);
    let graph = Graph::from_edges(r + 1, pairs).expect("block is simple");
    Ok(Block { graph, unsaturated: (0, 1) })
}

fn block_pairs(r: usize, offset: usize) -> impl Iterator<Item = (Vertex, Vertex)> {
    (0..=r)
        .flat_map(move |a| (a + 1..=r).map(move |b| (a, b)))
        .filter(|&p| p != (0, 1))
        .map(move |(a, b)| (a + offset, b + offset))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "H")]
    Block,
    G1,
    G2,
}

/// One block's placement inside a composite graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockRange {
    /// First and last vertex id (inclusive).
    pub range: (Vertex, Vertex),
    pub unsaturated: (Vertex, Vertex),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionOutput {
    pub r: usize,
    pub family: Family,
    pub graph: Graph,
    pub hubs: Vec<Vertex>,
    pub blocks: Vec<BlockRange>,
}

/// The JSON-facing part of a [`ConstructionOutput`] (everything but the
/// edge set).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Descriptor {
    pub r: usize,
    pub family: Family,
    pub hubs: Vec<Vertex>,
    pub blocks: Vec<BlockRange>,
}

impl ConstructionOutput {
    pub fn descriptor(&self) -> Descriptor {
        Descriptor { r: self.r, family: self.family, hubs: self.hubs.clone(), blocks: self.blocks.clone() }
    }
}

impl From<Block> for ConstructionOutput {
    fn from(b: Block) -> Self {
        let r = b.graph.n() - 1;
        ConstructionOutput {
            r,
            family: Family::Block,
            blocks: vec![BlockRange { range: (0, r), unsaturated: b.unsaturated }],
            hubs: Vec::new(),
            graph: b.graph,
        }
    }
}

fn place_blocks(r: usize, count: usize) -> (Vec<(Vertex, Vertex)>, Vec<BlockRange>) {
    let mut pairs = Vec::new();
    let mut blocks = Vec::new();
    for i in 0..count {
        let off = i * (r + 1);
        pairs.extend(block_pairs(r, off));
        blocks.push(BlockRange { range: (off, off + r), unsaturated: (off, off + 1) });
    }
    (pairs, blocks)
}

/// One hub joined to both unsaturated vertices of each of `r/2` blocks.
pub fn build_g1(r: usize) -> Result<ConstructionOutput, ConstructionError> {
    if r < 6 || r % 2 == 1 || (r / 2).is_multiple_of(2) {
        return Err(ConstructionError::BadG1Degree(r));
    }
    let (mut pairs, blocks) = place_blocks(r, r / 2);
    let hub = blocks.len() * (r + 1);
    for b in &blocks {
        pairs.push((b.unsaturated.0, hub));
        pairs.push((b.unsaturated.1, hub));
    }
    let graph = Graph::from_edges(hub + 1, pairs).expect("G1 is simple");
    Ok(ConstructionOutput { r, family: Family::G1, graph, hubs: vec![hub], blocks })
}

/// Two non-adjacent hubs over `r` blocks. `u` takes both unsaturated
/// vertices of blocks `1..r/2-1` and the first unsaturated vertex of the last
/// two blocks; `v` takes blocks `r/2..r-2` and the second unsaturated vertex
/// of the last two.
pub fn build_g2(r: usize) -> Result<ConstructionOutput, ConstructionError> {
    if r < 8 || r % 2 == 1 || (r / 2) % 2 == 1 {
        return Err(ConstructionError::BadG2Degree(r));
    }
    let (mut pairs, blocks) = place_blocks(r, r);
    let u = r * (r + 1);
    let v = u + 1;
    let half = r / 2;
    for (i, b) in blocks.iter().enumerate() {
        let (a, c) = b.unsaturated;
        if i < half - 1 {
            pairs.extend([(a, u), (c, u)]);
        } else if i < r - 2 {
            pairs.extend([(a, v), (c, v)]);
        } else {
            pairs.extend([(a, u), (c, v)]);
        }
    }
    let graph = Graph::from_edges(v + 1, pairs).expect("G2 is simple");
    Ok(ConstructionOutput { r, family: Family::G2, graph, hubs: vec![u, v], blocks })
}

/// Which argument settles the `{k, r-k}`-factor question for even `r`, odd
/// `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CaseLabel {
    /// `k = r/2` (so `r/2` is odd): a factor exists iff the order is even.
    GallaiHalf,
    /// `r/2` odd, `k <= r/2 - 2`: [`build_g1`] has no factor.
    G1Case,
    /// `r/2` even, `k <= r/2 - 3`: [`build_g2`] has no factor.
    G2Case,
    /// `r/2` even, `k = r/2 - 1`: settled by a separate construction not
    /// provided here.
    ExternalLu,
    Invalid,
}

pub fn classify_case(r: usize, k: usize) -> CaseLabel {
    if r < 2 || r % 2 == 1 || k.is_multiple_of(2) || k > r / 2 {
        return CaseLabel::Invalid;
    }
    let half = r / 2;
    if k == half {
        CaseLabel::GallaiHalf
    } else if half % 2 == 1 {
        CaseLabel::G1Case
    } else if k + 1 == half {
        CaseLabel::ExternalLu
    } else {
        CaseLabel::G2Case
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formats::encode_graph6;

    #[test]
    fn blocks() {
        let b2 = near_complete_block(2).unwrap();
        assert_eq!(b2.graph.degree_profile().degrees, vec![1, 1, 2]);
        let b6 = near_complete_block(6).unwrap();
        assert_eq!((b6.graph.n(), b6.graph.edge_count()), (7, 20));
        let low: Vec<_> = (0..7).filter(|&v| b6.graph.degree(v) == 5).collect();
        assert_eq!(low, vec![0, 1]);
        assert!(!b6.graph.has_edge(0, 1));
        let b4 = near_complete_block(4).unwrap();
        assert_eq!((b4.graph.n(), b4.graph.edge_count()), (5, 9));
        assert_eq!(near_complete_block(3), Err(ConstructionError::BadBlockDegree(3)));
        assert_eq!(near_complete_block(0), Err(ConstructionError::BadBlockDegree(0)));
    }

    #[test]
    fn g1_shape() {
        let g1 = build_g1(6).unwrap();
        assert_eq!(g1.graph.n(), 22);
        assert_eq!(g1.graph.edge_count(), 66);
        assert_eq!(g1.graph.regularity(), Some(6));
        assert_eq!(g1.hubs, vec![21]);
        assert_eq!(g1.graph.neighbors(21), &[0, 1, 7, 8, 14, 15]);
        let g10 = build_g1(10).unwrap();
        assert_eq!(g10.graph.n(), 56);
        assert_eq!(g10.graph.regularity(), Some(10));
        assert_eq!(build_g1(8), Err(ConstructionError::BadG1Degree(8)));
        assert_eq!(build_g1(2), Err(ConstructionError::BadG1Degree(2)));
    }

    #[test]
    fn g2_shape() {
        let g2 = build_g2(8).unwrap();
        assert_eq!(g2.graph.n(), 74);
        assert_eq!(g2.graph.edge_count(), 296);
        assert_eq!(g2.graph.regularity(), Some(8));
        let (u, v) = (72, 73);
        assert_eq!(g2.hubs, vec![u, v]);
        assert!(!g2.graph.has_edge(u, v));
        assert_eq!(g2.graph.neighbors(u), &[0, 1, 9, 10, 18, 19, 54, 63]);
        assert_eq!(g2.graph.neighbors(v), &[27, 28, 36, 37, 45, 46, 55, 64]);
        let g12 = build_g2(12).unwrap();
        assert_eq!(g12.graph.n(), 158);
        assert_eq!(g12.graph.regularity(), Some(12));
        assert_eq!(build_g2(6), Err(ConstructionError::BadG2Degree(6)));
        assert_eq!(build_g2(4), Err(ConstructionError::BadG2Degree(4)));
    }

    #[test]
    fn hub_removal_leaves_blocks() {
        for r in [6, 10] {
            let g = build_g1(r).unwrap();
            let comps = g.graph.components_avoiding(&g.hubs);
            assert_eq!(comps.len(), r / 2);
            for c in comps {
                assert_eq!(c.len(), r + 1);
                assert_eq!(g.graph.induced(&c).edge_count(), (r + 1) * r / 2 - 1);
            }
        }
        for r in [8, 12] {
            let g = build_g2(r).unwrap();
            assert_eq!(g.graph.components_avoiding(&g.hubs).len(), r);
        }
    }

    #[test]
    fn case_split() {
        assert_eq!(classify_case(6, 1), CaseLabel::G1Case);
        assert_eq!(classify_case(8, 1), CaseLabel::G2Case);
        assert_eq!(classify_case(8, 3), CaseLabel::ExternalLu);
        assert_eq!(classify_case(6, 3), CaseLabel::GallaiHalf);
        assert_eq!(classify_case(6, 2), CaseLabel::Invalid);
        assert_eq!(classify_case(7, 1), CaseLabel::Invalid);
        assert_eq!(classify_case(6, 5), CaseLabel::Invalid);
        assert_eq!(classify_case(4, 1), CaseLabel::ExternalLu);
        assert_eq!(classify_case(2, 1), CaseLabel::GallaiHalf);
        for r in (2..40).step_by(2) {
            for k in (1..=r / 2).step_by(2) {
                match classify_case(r, k) {
                    CaseLabel::G1Case => assert!(build_g1(r).is_ok()),
                    CaseLabel::G2Case => assert!(build_g2(r).is_ok()),
                    CaseLabel::Invalid => panic!("({r}, {k}) is in the domain"),
                    _ => {}
                }
            }
        }
    }

    #[test]
    fn deterministic_and_descriptor() {
        let a = encode_graph6(&build_g2(8).unwrap().graph).unwrap();
        let b = encode_graph6(&build_g2(8).unwrap().graph).unwrap();
        assert_eq!(a, b);
        let d = build_g1(6).unwrap().descriptor();
        let json = serde_json::to_value(&d).unwrap();
        assert_eq!(json["family"], "G1");
        assert_eq!(json["hubs"], serde_json::json!([21]));
        assert_eq!(json["blocks"][1], serde_json::json!({"range": [7, 13], "unsaturated": [7, 8]}));
    }
}
