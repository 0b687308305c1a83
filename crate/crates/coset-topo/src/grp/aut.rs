//! Automorphism counting by enumerating images of a minimal generating
//! tuple.

use super::FiniteGroup;
use crate::{Error, Result};
use rayon::prelude::*;

/// Finds a generating tuple of size <= 3, greedily preferring elements of
/// large order.
fn generating_tuple(g: &FiniteGroup) -> Option<Vec<usize>> {
    let n = g.order();
    if n == 1 {
        return Some(vec![]);
    }
    let mut by_order: Vec<usize> = (1..n).collect();
    by_order.sort_by_key(|&x| std::cmp::Reverse(g.element_order(x)));
    for &a in &by_order {
        if g.generated_by(&[a]).len() == n {
            return Some(vec![a]);
        }
    }
    for &a in &by_order {
        for &b in &by_order {
            if b != a && g.generated_by(&[a, b]).len() == n {
                return Some(vec![a, b]);
            }
        }
    }
    // triples: restrict the first two to a modest prefix to bound the search
    let prefix: Vec<usize> = by_order.iter().copied().take(64).collect();
    for &a in &prefix {
        for &b in &prefix {
            if b == a {
                continue;
            }
            for &c in &by_order {
                if c != a && c != b && g.generated_by(&[a, b, c]).len() == n {
                    return Some(vec![a, b, c]);
                }
            }
        }
    }
    None
}

/// Expresses every element as a word in the tuple: `parent[x] = (prev, k)`
/// with `x = prev * tuple[k]`.
fn word_dag(g: &FiniteGroup, tuple: &[usize]) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut parent = vec![(usize::MAX, usize::MAX); n];
    parent[0] = (0, usize::MAX);
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (k, &t) in tuple.iter().enumerate() {
            let y = g.mul(x, t);
            if parent[y].0 == usize::MAX {
                parent[y] = (x, k);
                queue.push_back(y);
            }
        }
    }
    parent
}

/// |Aut(G)| by enumerating candidate images of a fixed minimal generating
/// tuple and keeping those that induce a table automorphism.
///
/// Errors when no generating tuple of size <= 3 is found.
pub fn automorphism_count(g: &FiniteGroup) -> Result<usize> {
    let n = g.order();
    let tuple = generating_tuple(g)
        .ok_or_else(|| Error::Guard("no generating tuple of size <= 3 found".into()))?;
    if tuple.is_empty() {
        return Ok(1);
    }
    let parent = word_dag(g, &tuple);
    let orders: Vec<usize> = tuple.iter().map(|&t| g.element_order(t)).collect();
    // candidate images must match element orders
    let pools: Vec<Vec<usize>> = orders
        .iter()
        .map(|&o| (0..n).filter(|&x| g.element_order(x) == o).collect())
        .collect();
    let mut candidates: Vec<Vec<usize>> = vec![vec![]];
    for pool in &pools {
        let mut next = Vec::new();
        for c in &candidates {
            for &y in pool {
                let mut c2 = c.clone();
                c2.push(y);
                next.push(c2);
            }
        }
        candidates = next;
    }

    let count = candidates
        .par_iter()
        .filter(|images| is_automorphism(g, &tuple, &parent, images))
        .count();
    Ok(count)
}

fn is_automorphism(
    g: &FiniteGroup,
    tuple: &[usize],
    parent: &[(usize, usize)],
    images: &[usize],
) -> bool {
    let n = g.order();
    // phi(x) via the word DAG, in BFS discovery order
    let mut phi = vec![usize::MAX; n];
    phi[0] = 0;
    // process in an order where parents come first
    let mut order: Vec<usize> = (0..n).collect();
    // BFS discovery order is not stored; compute via repeated passes
    // over unresolved nodes (the DAG has depth <= n).
    let mut resolved = 1;
    while resolved < n {
        let mut progressed = false;
        for x in order.iter().copied() {
            if phi[x] != usize::MAX {
                continue;
            }
            let (prev, k) = parent[x];
            if prev == usize::MAX {
                return false; // not generated
            }
            if phi[prev] != usize::MAX {
                phi[x] = g.mul(phi[prev], images[k]);
                resolved += 1;
                progressed = true;
            }
        }
        if !progressed {
            return false;
        }
        order.retain(|&x| phi[x] == usize::MAX);
    }
    // bijectivity
    let mut seen = vec![false; n];
    for &y in &phi {
        if seen[y] {
            return false;
        }
        seen[y] = true;
    }
    // multiplicativity on generator * element pairs extends to all products
    for (k, &t) in tuple.iter().enumerate() {
        for b in 0..n {
            if phi[g.mul(t, b)] != g.mul(images[k], phi[b]) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::{make_alternating, make_cyclic, make_quaternion};

    #[test]
    fn cyclic_aut_is_unit_group() {
        assert_eq!(automorphism_count(&make_cyclic(7).unwrap()).unwrap(), 6);
        assert_eq!(automorphism_count(&make_cyclic(12).unwrap()).unwrap(), 4);
        assert_eq!(automorphism_count(&make_cyclic(1).unwrap()).unwrap(), 1);
    }

    #[test]
    fn quaternion_aut() {
        // Aut(Q8) ≅ S4
        assert_eq!(automorphism_count(&make_quaternion().unwrap()).unwrap(), 24);
    }

    #[test]
    fn alternating_five_aut() {
        assert_eq!(
            automorphism_count(&make_alternating(5).unwrap()).unwrap(),
            120
        );
    }
}
