//! JSON file formats.
//!
//! Floats are written in shortest round-trip form, so a drawing read back
//! from its own output has bit-identical coordinates.

use serde::{Deserialize, Serialize};

use plyforge_core::lowerbound::{
    AnnulusAnalysis, Certificate, CertificateCase, LowerBoundInstance,
};
use plyforge_core::{Drawing, Error, HeavyPathDecomposition, PlyResult, Point, RootedTree};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Invalid(#[from] Error),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TreeFile {
    pub root: usize,
    pub nodes: Vec<TreeNode>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TreeNode {
    pub id: usize,
    #[serde(default)]
    pub children: Vec<usize>,
}

impl TreeFile {
    pub fn from_tree(t: &RootedTree) -> Self {
        TreeFile {
            root: t.root(),
            nodes: (0..t.len())
                .map(|id| TreeNode {
                    id,
                    children: t.children(id).to_vec(),
                })
                .collect(),
        }
    }

    pub fn to_tree(&self) -> Result<RootedTree, Error> {
        let n = self.nodes.len();
        let mut children: Vec<Option<Vec<usize>>> = vec![None; n];
        for node in &self.nodes {
            let slot = children.get_mut(node.id).ok_or_else(|| {
                Error::MalformedTree(format!("nodes[].id {} is not in 0..{n}", node.id))
            })?;
            if slot.is_some() {
                return Err(Error::MalformedTree(format!(
                    "nodes[].id {} appears twice",
                    node.id
                )));
            }
            *slot = Some(node.children.clone());
        }
        RootedTree::from_children(
            self.root,
            children
                .into_iter()
                .map(Option::unwrap_or_default)
                .collect(),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DrawingFile {
    pub alpha: f64,
    pub vertices: Vec<VertexRecord>,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexRecord {
    pub id: usize,
    pub x: f64,
    pub y: f64,
}

impl DrawingFile {
    pub fn from_drawing(d: &Drawing) -> Self {
        DrawingFile {
            alpha: d.alpha(),
            vertices: d
                .positions()
                .iter()
                .enumerate()
                .map(|(id, p)| VertexRecord { id, x: p.x, y: p.y })
                .collect(),
            edges: d.edges().iter().map(|&(u, v)| [u, v]).collect(),
        }
    }

    /// Vertex ids must be exactly `0..n`, in any order.
    pub fn to_drawing(&self) -> Result<Drawing, Error> {
        let n = self.vertices.len();
        let mut pos: Vec<Option<Point>> = vec![None; n];
        for v in &self.vertices {
            let slot = pos.get_mut(v.id).ok_or_else(|| {
                Error::MalformedDrawing(format!("vertices[].id {} is not in 0..{n}", v.id))
            })?;
            if slot.is_some() {
                return Err(Error::MalformedDrawing(format!(
                    "vertices[].id {} appears twice",
                    v.id
                )));
            }
            *slot = Some(Point::new(v.x, v.y));
        }
        let positions = pos.into_iter().map(|p| p.expect("ids checked")).collect();
        let edges = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        Drawing::new(self.alpha, positions, edges)
    }
}

/// Lower-bound instance: parameters plus the 2-tree and its construction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub n_target: usize,
    pub h: usize,
    pub m: usize,
    pub apex: usize,
    pub vertex_count: usize,
    /// Edges of the 2-tree; the instance graph drops the root-to-root edges.
    pub two_tree_edges: Vec<[usize; 2]>,
    pub base: [usize; 2],
    pub construction: Vec<AttachmentRecord>,
    pub instance_edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AttachmentRecord {
    pub vertex: usize,
    pub parents: [usize; 2],
}

impl InstanceFile {
    pub fn from_instance(inst: &LowerBoundInstance) -> Self {
        let g = &inst.graph;
        InstanceFile {
            n_target: inst.n_target,
            h: inst.h,
            m: inst.m,
            apex: inst.apex,
            vertex_count: inst.vertex_count(),
            two_tree_edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
            base: [g.base().0, g.base().1],
            construction: g
                .attachments()
                .iter()
                .map(|a| AttachmentRecord {
                    vertex: a.vertex,
                    parents: [a.parents.0, a.parents.1],
                })
                .collect(),
            instance_edges: inst.edges().iter().map(|&(u, v)| [u, v]).collect(),
        }
    }

    /// Rebuilds the instance from `h` and `m` and checks it against the file.
    pub fn to_instance(&self) -> Result<LowerBoundInstance, Error> {
        let mut inst = plyforge_core::lowerbound::build_instance_with(self.h, self.m)?;
        inst.n_target = self.n_target;
        if InstanceFile::from_instance(&inst) != *self {
            return Err(Error::InstanceMismatch(format!(
                "file does not match the instance with h = {}, m = {}",
                self.h, self.m
            )));
        }
        Ok(inst)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecompositionFile {
    pub height: usize,
    pub paths: Vec<PathRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PathRecord {
    pub id: usize,
    pub vertices: Vec<usize>,
    pub anchor: Option<usize>,
    pub parent_path: Option<usize>,
    pub level: usize,
}

impl DecompositionFile {
    pub fn from_decomposition(hpd: &HeavyPathDecomposition) -> Self {
        DecompositionFile {
            height: hpd.total_height(),
            paths: (0..hpd.paths().len())
                .map(|id| PathRecord {
                    id,
                    vertices: hpd.path(id).to_vec(),
                    anchor: hpd.anchor(id),
                    parent_path: hpd.parent_path(id),
                    level: hpd.level(id),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PlyMethod {
    Exact,
    Sampled,
}

/// Output of the `ply` command.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlyReport {
    pub ply: usize,
    pub witness: [f64; 2],
    pub method: PlyMethod,
}

impl PlyReport {
    pub fn exact(r: &PlyResult) -> Self {
        PlyReport {
            ply: r.ply,
            witness: [r.witness.x, r.witness.y],
            method: PlyMethod::Exact,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CertificateReport {
    pub bound: f64,
    pub case: CaseRecord,
    pub h: usize,
    pub m: usize,
    pub covered_trees: Vec<usize>,
    pub annuli: Vec<AnnulusRecord>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseRecord {
    ApexCover,
    Annulus { tree: usize },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnnulusRecord {
    pub tree: usize,
    pub unit: f64,
    pub c: f64,
    /// Vertex counts of rings `-h..h`.
    pub counts: Vec<usize>,
    pub best_index: i64,
    pub enclosing_radius: f64,
    pub contained: Vec<usize>,
    pub induction_violations: Vec<usize>,
    pub bound: f64,
}

impl CertificateReport {
    pub fn new(cert: &Certificate, inst: &LowerBoundInstance) -> Self {
        CertificateReport {
            bound: cert.bound,
            case: match cert.case {
                CertificateCase::ApexCover => CaseRecord::ApexCover,
                CertificateCase::Annulus { tree } => CaseRecord::Annulus { tree },
            },
            h: inst.h,
            m: inst.m,
            covered_trees: cert.covered_trees.clone(),
            annuli: cert.annuli.iter().map(AnnulusRecord::from).collect(),
        }
    }
}

impl From<&AnnulusAnalysis> for AnnulusRecord {
    fn from(a: &AnnulusAnalysis) -> Self {
        AnnulusRecord {
            tree: a.tree,
            unit: a.unit,
            c: a.c,
            counts: a.counts.clone(),
            best_index: a.best_index,
            enclosing_radius: a.enclosing_radius,
            contained: a.contained.clone(),
            induction_violations: a.induction_violations.clone(),
            bound: a.bound,
        }
    }
}

pub fn parse_tree(s: &str) -> Result<RootedTree, FormatError> {
    Ok(serde_json::from_str::<TreeFile>(s)?.to_tree()?)
}

pub fn parse_drawing(s: &str) -> Result<Drawing, FormatError> {
    Ok(serde_json::from_str::<DrawingFile>(s)?.to_drawing()?)
}

pub fn parse_instance(s: &str) -> Result<LowerBoundInstance, FormatError> {
    Ok(serde_json::from_str::<InstanceFile>(s)?.to_instance()?)
}

pub fn tree_json(t: &RootedTree) -> String {
    to_json(&TreeFile::from_tree(t))
}

pub fn drawing_json(d: &Drawing) -> String {
    to_json(&DrawingFile::from_drawing(d))
}

pub fn instance_json(inst: &LowerBoundInstance) -> String {
    to_json(&InstanceFile::from_instance(inst))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data always serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use plyforge_core::lowerbound::build_instance;
    use plyforge_core::TreeFamily;

    #[test]
    fn tree_round_trip() {
        let t = TreeFamily::Random {
            n: 40,
            max_degree: 4,
            seed: 1,
        }
        .generate()
        .unwrap();
        assert_eq!(parse_tree(&tree_json(&t)).unwrap(), t);
    }

    #[test]
    fn drawing_round_trip_is_exact() {
        let pts = vec![
            Point::new(0.1, 1.0 / 3.0),
            Point::new(-2e-300, 7.123456789012345e12),
        ];
        let d = Drawing::new(0.3, pts, vec![(0, 1)]).unwrap();
        let text = drawing_json(&d);
        let back = parse_drawing(&text).unwrap();
        assert_eq!(back, d);
        assert_eq!(drawing_json(&back), text);
    }

    #[test]
    fn drawing_ids_may_be_shuffled_but_not_sparse() {
        let ok = r#"{"alpha":0.5,"vertices":[{"id":1,"x":1,"y":0},{"id":0,"x":0,"y":0}],"edges":[[0,1]]}"#;
        assert_eq!(parse_drawing(ok).unwrap().position(1), Point::new(1.0, 0.0));
        let sparse =
            r#"{"alpha":0.5,"vertices":[{"id":0,"x":1,"y":0},{"id":2,"x":0,"y":0}],"edges":[]}"#;
        assert!(matches!(
            parse_drawing(sparse),
            Err(FormatError::Invalid(_))
        ));
    }

    #[test]
    fn missing_field_is_named() {
        let err = parse_drawing(r#"{"vertices":[],"edges":[]}"#).unwrap_err();
        assert!(err.to_string().contains("alpha"));
    }

    #[test]
    fn instance_round_trip() {
        let inst = build_instance(64).unwrap();
        assert_eq!(parse_instance(&instance_json(&inst)).unwrap(), inst);
        let mut file = InstanceFile::from_instance(&inst);
        file.instance_edges.pop();
        assert!(file.to_instance().is_err());
    }
}
