//! PSL2(F_p) as SL2 matrices modulo ±I.
//!
//! Elements are canonicalized to the lexicographically smaller of {A, -A}
//! (as tuples (a, b, c, d)); the identity is forced to index 0 and the
//! remaining representatives follow in lexicographic order.

use super::{FiniteGroup, ORDER_CAP};
use crate::{Error, Result};

/// Canonical matrix representative (a, b, c, d) for x -> (ax+b)/(cx+d).
pub type Mat2 = [u64; 4];

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn canonical(m: Mat2, p: u64) -> Mat2 {
    let neg = [(p - m[0]) % p, (p - m[1]) % p, (p - m[2]) % p, (p - m[3]) % p];
    if neg < m {
        neg
    } else {
        m
    }
}

/// The canonical matrix representatives of PSL2(F_p), identity first and
/// then lexicographic. `psl2_matrices(p)[i]` is the matrix of element `i`
/// of `make_psl2(p)`.
pub fn psl2_matrices(p: u64) -> Result<Vec<Mat2>> {
    if !is_prime(p) {
        return Err(Error::BadInput(format!("{p} is not prime")));
    }
    if !(5..=13).contains(&p) {
        return Err(Error::Guard(format!("psl2 prime {p} outside 5..=13")));
    }
    let mut reps = std::collections::BTreeSet::new();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    if (a * d + p * p - b * c) % p == 1 {
                        reps.insert(canonical([a, b, c, d], p));
                    }
                }
            }
        }
    }
    let identity = [1, 0, 0, 1];
    let mut out = vec![identity];
    out.extend(reps.into_iter().filter(|m| *m != identity));
    Ok(out)
}

/// Trace squared of an element, well-defined on PSL2.
pub fn trace_squared(m: Mat2, p: u64) -> u64 {
    let t = (m[0] + m[3]) % p;
    (t * t) % p
}

/// PSL2(F_p) of order p(p^2-1)/2, for primes 5 <= p <= 13.
pub fn make_psl2(p: u64) -> Result<FiniteGroup> {
    let mats = psl2_matrices(p)?;
    let order = mats.len();
    let expected = (p * (p * p - 1) / 2) as usize;
    if order != expected {
        return Err(Error::Invariant(format!(
            "psl2({p}) enumeration produced {order} elements, expected {expected}"
        )));
    }
    if order > ORDER_CAP {
        return Err(Error::Guard(format!("order {order} exceeds cap {ORDER_CAP}")));
    }
    let index: std::collections::HashMap<Mat2, usize> = mats
        .iter()
        .enumerate()
        .map(|(i, &m)| (m, i))
        .collect();
    let labels = mats
        .iter()
        .map(|m| format!("[[{},{}],[{},{}]]", m[0], m[1], m[2], m[3]))
        .collect();
    let table: Vec<Vec<u16>> = (0..order)
        .map(|x| {
            (0..order)
                .map(|y| {
                    let (a, b) = (mats[x], mats[y]);
                    let prod = canonical(
                        [
                            (a[0] * b[0] + a[1] * b[2]) % p,
                            (a[0] * b[1] + a[1] * b[3]) % p,
                            (a[2] * b[0] + a[3] * b[2]) % p,
                            (a[2] * b[1] + a[3] * b[3]) % p,
                        ],
                        p,
                    );
                    index[&prod] as u16
                })
                .collect()
        })
        .collect();
    FiniteGroup::from_table(table, Some(labels), format!("PSL2({p})"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(make_psl2(5).unwrap().order(), 60);
        assert_eq!(make_psl2(7).unwrap().order(), 168);
        assert!(make_psl2(6).is_err());
        assert!(make_psl2(17).is_err());
    }

    #[test]
    fn translation_has_order_p() {
        // (x+1)^n = x+n, so x+1 has order 7 in PSL2(F_7)
        let g = make_psl2(7).unwrap();
        let mats = psl2_matrices(7).unwrap();
        let shift = mats.iter().position(|&m| m == [1, 1, 0, 1]).unwrap();
        assert_eq!(g.element_order(shift), 7);
    }

    #[test]
    fn trace_order_table_full_sweep() {
        // order of every nonidentity element is determined by tr^2
        let g = make_psl2(7).unwrap();
        let mats = psl2_matrices(7).unwrap();
        for i in 1..g.order() {
            let expected = match trace_squared(mats[i], 7) {
                0 => 2,
                1 => 3,
                2 => 4,
                4 => 7,
                t => panic!("unexpected trace squared {t} for a nonidentity element"),
            };
            assert_eq!(g.element_order(i), expected, "element {i}");
        }
    }

    #[test]
    fn two_three_generation() {
        // <g,h> = PSL2(F_7) iff o(gh) = 7, over all (order 2, order 3) pairs
        let g = make_psl2(7).unwrap();
        let n = g.order();
        let twos: Vec<usize> = (0..n).filter(|&x| g.element_order(x) == 2).collect();
        let threes: Vec<usize> = (0..n).filter(|&x| g.element_order(x) == 3).collect();
        assert_eq!(twos.len(), 21);
        assert_eq!(threes.len(), 56);
        for &a in &twos {
            for &b in &threes {
                let generates = g.generated_by(&[a, b]).len() == n;
                let product_order = g.element_order(g.mul(a, b));
                assert_eq!(generates, product_order == 7);
            }
        }
    }
}
