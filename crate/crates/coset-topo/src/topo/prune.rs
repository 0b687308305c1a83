//! Homotopy-preserving poset pruning certified by cone fibers.

use super::Poset;
use crate::{Error, Result};

/// Removes `remove[i]`-marked elements from the poset, but only after
/// verifying that for every removed element x the surviving fiber
/// `{y not removed : y > x}` is nonempty and a cone. Surviving elements
/// have themselves as the minimum of their fiber, so only removed
/// elements need checking.
///
/// Refuses (with the offending element) when a fiber fails the test; a
/// removed maximal element always fails since its fiber is empty.
pub fn prune_with_cone_fibers(p: &Poset, remove: &[bool]) -> Result<Poset> {
    assert_eq!(remove.len(), p.len());
    for x in 0..p.len() {
        if !remove[x] {
            continue;
        }
        let fiber: Vec<usize> = p.above(x).filter(|&y| !remove[y]).collect();
        if fiber.is_empty() {
            return Err(Error::PruneRefused {
                element: p.labels[x].clone(),
                reason: "no surviving element above it".into(),
            });
        }
        let is_cone = fiber
            .iter()
            .any(|&z| fiber.iter().all(|&y| p.comparable(z, y)));
        if !is_cone {
            return Err(Error::PruneRefused {
                element: p.labels[x].clone(),
                reason: format!("surviving fiber of {} elements is not a cone", fiber.len()),
            });
        }
    }
    let keep: Vec<bool> = remove.iter().map(|&r| !r).collect();
    Ok(p.restrict(&keep))
}

/// Convenience: removes all cosets whose subgroup has the given lattice
/// indices.
pub fn remove_mask_for_subgroups(p: &Poset, subgroup_indices: &[usize]) -> Vec<bool> {
    let cosets = p.cosets.as_ref().expect("coset poset required");
    cosets
        .iter()
        .map(|e| subgroup_indices.contains(&e.subgroup))
        .collect()
}
