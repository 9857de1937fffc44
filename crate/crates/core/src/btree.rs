//! Binary tree of all continued fraction expansions of `p/q` whose partial
//! quotients are at least two in absolute value.
//!
//! Each vertex carries the subexpansion `r` still to be expanded. The next
//! partial quotient `a` must satisfy `|a - 1/r| < 1`, so it is either
//! `floor(1/r)` or `ceil(1/r)`, and the child carries `1/r - a`. A label of
//! `+-1` ends the branch in a dead leaf; a zero remainder ends it in a live
//! leaf whose path is a boundary slope continued fraction.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::cf::ContinuedFraction;
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeKind {
    Internal,
    /// Path from the root is a complete boundary slope expansion.
    Leaf,
    /// Path reached a `+-1` term.
    Dead,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub label: i64,
    pub child: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    /// Subexpansion at this vertex; `None` on dead leaves.
    pub remainder: Option<Rational>,
    /// Edge labels from the root: integral component first, then terms.
    pub path: Vec<i64>,
    pub kind: NodeKind,
    pub children: Vec<Edge>,
}

impl TreeNode {
    /// The expansion spelled by a live leaf.
    pub fn leaf_cf(&self) -> Option<ContinuedFraction> {
        match self.kind {
            NodeKind::Leaf => ContinuedFraction::from_flat(&self.path).ok(),
            _ => None,
        }
    }
}

/// Arena-backed tree; node 0 is the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryTree {
    nodes: Vec<TreeNode>,
}

impl BoundaryTree {
    pub fn root(&self) -> &TreeNode {
        &self.nodes[0]
    }

    pub fn nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    pub fn node(&self, index: usize) -> &TreeNode {
        &self.nodes[index]
    }

    pub fn fraction(&self) -> Rational {
        self.root().remainder.expect("root carries the fraction")
    }

    pub fn live_leaf_count(&self) -> usize {
        self.count(NodeKind::Leaf)
    }

    pub fn dead_leaf_count(&self) -> usize {
        self.count(NodeKind::Dead)
    }

    fn count(&self, kind: NodeKind) -> usize {
        self.nodes.iter().filter(|n| n.kind == kind).count()
    }

    pub fn depth(&self) -> usize {
        self.nodes.iter().map(|n| n.path.len()).max().unwrap_or(0)
    }
}

/// Builds the tree for `0 < r < 1`.
///
/// Every non-root subexpansion is checked against `|r| < 1` during
/// construction; a violation is reported as [`Error::SubexpansionBound`].
pub fn build_tree(r: Rational) -> Result<BoundaryTree> {
    if !r.in_unit_interval() {
        return Err(Error::OutOfRange(r));
    }
    let mut nodes = vec![TreeNode {
        remainder: Some(r),
        path: Vec::new(),
        kind: NodeKind::Internal,
        children: Vec::new(),
    }];

    // The integral component is floor or ceil of r itself, i.e. 0 or 1.
    let mut stack = Vec::new();
    for label in [r.floor(), r.ceil()] {
        let remainder = r.add_int(-label)?;
        let child = push_child(&mut nodes, 0, label, Some(remainder), NodeKind::Internal);
        stack.push(child);
    }

    while let Some(index) = stack.pop() {
        let remainder = nodes[index].remainder.expect("internal vertex has a remainder");
        if remainder.abs() >= Rational::ONE {
            return Err(Error::SubexpansionBound {
                remainder,
                depth: nodes[index].path.len(),
            });
        }
        let inverse = remainder.recip()?;
        let labels: &[i64] = if inverse.is_integer() {
            &[inverse.floor()]
        } else {
            &[inverse.floor(), inverse.ceil()]
        };
        for &label in labels {
            let child = if label.abs() == 1 {
                push_child(&mut nodes, index, label, None, NodeKind::Dead)
            } else {
                let next = inverse.add_int(-label)?;
                let kind = if next.is_zero() {
                    NodeKind::Leaf
                } else {
                    NodeKind::Internal
                };
                let child = push_child(&mut nodes, index, label, Some(next), kind);
                if kind == NodeKind::Internal {
                    stack.push(child);
                }
                child
            };
            debug_assert!(nodes[child].path.len() == nodes[index].path.len() + 1);
        }
    }
    Ok(BoundaryTree { nodes })
}

fn push_child(
    nodes: &mut Vec<TreeNode>,
    parent: usize,
    label: i64,
    remainder: Option<Rational>,
    kind: NodeKind,
) -> usize {
    let mut path = nodes[parent].path.clone();
    path.push(label);
    let child = nodes.len();
    nodes.push(TreeNode {
        remainder,
        path,
        kind,
        children: Vec::new(),
    });
    nodes[parent].children.push(Edge { label, child });
    child
}

/// Expansions spelled by the live leaves.
pub fn leaves(tree: &BoundaryTree) -> BTreeSet<ContinuedFraction> {
    tree.nodes.iter().filter_map(TreeNode::leaf_cf).collect()
}

/// Graphviz rendering. Internal vertices show their subexpansion, live
/// leaves their expansion, dead leaves `∄` (or `DNE` when `ascii` is set).
pub fn to_dot(tree: &BoundaryTree, ascii: bool) -> String {
    let dead = if ascii { "DNE" } else { "∄" };
    let mut out = String::new();
    out.push_str("digraph boundary_slope_tree {\n");
    let _ = writeln!(out, "  label=\"{}\";", tree.fraction());
    out.push_str("  node [shape=box];\n");
    for (i, node) in tree.nodes.iter().enumerate() {
        let (label, shape) = match node.kind {
            NodeKind::Internal => (node.remainder.unwrap().to_string(), "box"),
            NodeKind::Leaf => (node.leaf_cf().unwrap().to_string(), "ellipse"),
            NodeKind::Dead => (dead.to_string(), "plaintext"),
        };
        let _ = writeln!(out, "  n{i} [label=\"{label}\", shape={shape}];");
    }
    for (i, node) in tree.nodes.iter().enumerate() {
        for edge in &node.children {
            let _ = writeln!(out, "  n{i} -> n{} [label=\"{}\"];", edge.child, edge.label);
        }
    }
    out.push_str("}\n");
    out
}
