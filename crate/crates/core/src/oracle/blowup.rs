//! Delta by repeated blow-ups: Noether's formula over the infinitely near
//! points of the germ, with Galois orbits of tangent directions carried as
//! single weighted nodes.

use std::sync::Arc;

use crate::algebra::factor::{extend_field, factor_over};
use crate::algebra::field::{NfElem, NumberField};
use crate::algebra::{Coeff, ExtensionConfig, MPoly, UPoly};
use crate::curve::LocalPoly;
use crate::local::shear;
use crate::Error;

const FACTOR_LIMIT: usize = 64;
const MAX_DEPTH: u32 = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeNode {
    pub depth: u32,
    pub multiplicity: u32,
    /// Number of conjugate points this node stands for.
    pub orbit_degree: usize,
    pub parent: Option<usize>,
}

/// Infinitely near points of a germ; node 0 is the singular point itself.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InfinitelyNearTree {
    pub nodes: Vec<TreeNode>,
}

impl InfinitelyNearTree {
    pub fn delta(&self) -> u32 {
        self.nodes
            .iter()
            .map(|n| {
                n.orbit_degree as u32 * n.multiplicity * (n.multiplicity.saturating_sub(1)) / 2
            })
            .sum()
    }

    /// Multiplicities of the singular nodes, weighted, in tree order.
    pub fn multiplicity_sequence(&self) -> Vec<(u32, usize)> {
        self.nodes
            .iter()
            .filter(|n| n.multiplicity > 1)
            .map(|n| (n.multiplicity, n.orbit_degree))
            .collect()
    }

    fn children(&self, i: usize) -> impl Iterator<Item = &TreeNode> {
        self.nodes.iter().filter(move |n| n.parent == Some(i))
    }

    /// Children of every node have total multiplicity at most the node's.
    pub fn proximity_ok(&self) -> bool {
        (0..self.nodes.len()).all(|i| {
            let parent = &self.nodes[i];
            let below: usize = self
                .children(i)
                .map(|c| c.multiplicity as usize * c.orbit_degree / parent.orbit_degree)
                .sum();
            below <= parent.multiplicity as usize
        })
    }
}

/// Blow up the origin until every strict transform is smooth; return the
/// resulting delta and the tree of infinitely near points.
pub fn blowup_delta(
    f: &LocalPoly,
    cfg: &ExtensionConfig,
) -> Result<(u32, InfinitelyNearTree), Error> {
    let m = f.order();
    if f.poly.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if m == 0 {
        return Err(Error::NotOnCurve);
    }
    let mut tree = InfinitelyNearTree::default();
    tree.nodes.push(TreeNode {
        depth: 0,
        multiplicity: m,
        orbit_degree: 1,
        parent: None,
    });
    expand(&f.poly, f.field.clone(), 0, &mut tree, cfg)?;
    debug_assert!(tree.proximity_ok());
    Ok((tree.delta(), tree))
}

/// Strict transform in the chart `y = x t`, after shearing so that the
/// direction `x = 0` is not tangent. Returns it with the tangent polynomial
/// `f_m(1, t)`.
fn strict_transform(f: &MPoly<NfElem>) -> (MPoly<NfElem>, UPoly<NfElem>) {
    let m = f.order().unwrap();
    let cone = f.homogeneous_part(m);
    let k = (0..)
        .find(|&k| !cone.eval(&[NfElem::from_i64(k), NfElem::one()]).is_zero())
        .unwrap();
    let g = shear(f, k);
    let mut out = MPoly::zero(2);
    let mut tangent = vec![NfElem::zero(); m as usize + 1];
    for (e, c) in g.terms() {
        let (i, j) = (e[0], e[1]);
        out.add_term(vec![i + j - m, j], c.clone());
        if i + j == m {
            tangent[j as usize] = c.clone();
        }
    }
    (out, UPoly::new(tangent))
}

fn expand(
    f: &MPoly<NfElem>,
    field: Option<Arc<NumberField>>,
    node: usize,
    tree: &mut InfinitelyNearTree,
    cfg: &ExtensionConfig,
) -> Result<(), Error> {
    let (depth, m, weight) = {
        let n = &tree.nodes[node];
        (n.depth, n.multiplicity, n.orbit_degree)
    };
    if m <= 1 {
        return Ok(());
    }
    if depth >= MAX_DEPTH {
        return Err(Error::NonIsolated);
    }
    let (transform, tangent) = strict_transform(f);
    let parts = tangent
        .try_squarefree_decomposition()
        .ok_or(Error::Precision)?;
    for (idx, part) in parts.iter().enumerate() {
        if part.degree().unwrap_or(0) == 0 {
            continue;
        }
        let split = factor_over(part, field.as_ref(), FACTOR_LIMIT);
        let mut pieces: Vec<(UPoly<NfElem>, bool)> =
            split.factors.iter().map(|p| (p.clone(), true)).collect();
        if split.leftover.degree().unwrap_or(0) > 0 {
            pieces.push((split.leftover.clone(), split.leftover_irreducible));
        }
        for (psi, irreducible) in pieces {
            let deg = psi.degree().unwrap();
            if idx == 0 {
                // simple directions: smooth points meeting the exceptional line transversally
                tree.nodes.push(TreeNode {
                    depth: depth + 1,
                    multiplicity: 1,
                    orbit_degree: weight * deg,
                    parent: Some(node),
                });
                continue;
            }
            let base = field.as_ref().map_or(1, |k| k.degree());
            if !irreducible || base * deg > cfg.product_bound {
                return Err(Error::ExtensionOverflow {
                    certificate: format!("{:?}", psi.coeffs()),
                });
            }
            let ext = extend_field(field.as_ref(), &psi);
            let lifted = transform.map_coeffs(|c| ext.map.apply(c));
            let moved = lifted.substitute(&[
                MPoly::var(2, 0),
                MPoly::var(2, 1).add(&MPoly::constant(2, ext.root.clone())),
            ]);
            let child_m = moved.order().ok_or(Error::NonIsolated)?;
            tree.nodes.push(TreeNode {
                depth: depth + 1,
                multiplicity: child_m,
                orbit_degree: weight * deg,
                parent: Some(node),
            });
            let child = tree.nodes.len() - 1;
            expand(&moved, ext.field.clone(), child, tree, cfg)?;
        }
    }
    Ok(())
}
