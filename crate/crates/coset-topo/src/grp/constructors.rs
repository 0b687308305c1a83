//! Group constructors: cyclic, dihedral, quaternion, alternating/symmetric,
//! semidirect and direct products.

use super::{FiniteGroup, ProductMeta, ORDER_CAP};
use crate::{Error, Result};

fn build(
    n: usize,
    label: String,
    labels: Vec<String>,
    mul: impl Fn(usize, usize) -> usize,
) -> Result<FiniteGroup> {
    let table: Vec<Vec<u16>> = (0..n)
        .map(|a| (0..n).map(|b| mul(a, b) as u16).collect())
        .collect();
    FiniteGroup::from_table(table, Some(labels), label)
}

/// Z/n with addition.
pub fn make_cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::BadInput("cyclic group needs n >= 1".into()));
    }
    if n > ORDER_CAP {
        return Err(Error::Guard(format!("order {n} exceeds cap {ORDER_CAP}")));
    }
    build(
        n,
        format!("Z/{n}"),
        (0..n).map(|i| i.to_string()).collect(),
        |a, b| (a + b) % n,
    )
}

/// Dihedral group of order 2n, elements `r^a s^e` indexed as `a + n*e`.
pub fn make_dihedral(n: usize) -> Result<FiniteGroup> {
    if n < 2 {
        return Err(Error::BadInput("dihedral group needs n >= 2".into()));
    }
    if 2 * n > ORDER_CAP {
        return Err(Error::Guard(format!("order {} exceeds cap {ORDER_CAP}", 2 * n)));
    }
    let labels = (0..2 * n)
        .map(|i| {
            let (a, e) = (i % n, i / n);
            if e == 0 {
                format!("r{a}")
            } else {
                format!("r{a}s")
            }
        })
        .collect();
    build(2 * n, format!("D{}", 2 * n), labels, |x, y| {
        let (a, e) = (x % n, x / n);
        let (b, f) = (y % n, y / n);
        // (r^a s^e)(r^b s^f) = r^(a + (-1)^e b) s^(e+f)
        let c = if e == 0 { (a + b) % n } else { (a + n - b % n) % n };
        c + n * ((e + f) % 2)
    })
}

/// The quaternion group {±1, ±i, ±j, ±k}.
pub fn make_quaternion() -> Result<FiniteGroup> {
    // encode g = (axis, sign): axis 0 = 1, 1 = i, 2 = j, 3 = k
    let decode = |g: usize| (g / 2, g % 2); // (axis, sign): sign 1 means negative
    let encode = |axis: usize, sign: usize| axis * 2 + sign;
    // axis multiplication table with sign: i*j = k, j*k = i, k*i = j
    let axis_mul = |a: usize, b: usize| -> (usize, usize) {
        match (a, b) {
            (0, x) => (x, 0),
            (x, 0) => (x, 0),
            (x, y) if x == y => (0, 1), // i*i = -1
            (1, 2) => (3, 0),
            (2, 3) => (1, 0),
            (3, 1) => (2, 0),
            (2, 1) => (3, 1),
            (3, 2) => (1, 1),
            (1, 3) => (2, 1),
            _ => unreachable!(),
        }
    };
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    build(8, "Q8".into(), labels, |x, y| {
        let (ax, sx) = decode(x);
        let (ay, sy) = decode(y);
        let (az, s) = axis_mul(ax, ay);
        encode(az, (sx + sy + s) % 2)
    })
}

fn perm_group(n: usize, even_only: bool, label: String) -> Result<FiniteGroup> {
    if !(2..=8).contains(&n) {
        return Err(Error::BadInput("permutation degree must be in 2..=8".into()));
    }
    // enumerate permutations of 0..n in lexicographic order
    let mut perms: Vec<Vec<u8>> = Vec::new();
    let mut p: Vec<u8> = (0..n as u8).collect();
    loop {
        let parity_even = {
            let mut seen = vec![false; n];
            let mut transpositions = 0;
            for start in 0..n {
                if seen[start] {
                    continue;
                }
                let mut len = 0;
                let mut cur = start;
                while !seen[cur] {
                    seen[cur] = true;
                    cur = p[cur] as usize;
                    len += 1;
                }
                transpositions += len - 1;
            }
            transpositions % 2 == 0
        };
        if !even_only || parity_even {
            perms.push(p.clone());
        }
        // next_permutation
        let mut i = n - 1;
        while i > 0 && p[i - 1] >= p[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = n - 1;
        while p[j] <= p[i - 1] {
            j -= 1;
        }
        p.swap(i - 1, j);
        p[i..].reverse();
    }
    let order = perms.len();
    if order > ORDER_CAP {
        return Err(Error::Guard(format!("order {order} exceeds cap {ORDER_CAP}")));
    }
    // identity is lexicographically first, hence index 0
    let index: std::collections::HashMap<Vec<u8>, usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    let labels = perms
        .iter()
        .map(|p| {
            let body: String = p.iter().map(|&x| char::from(b'0' + x)).collect();
            format!("[{body}]")
        })
        .collect();
    let perms2 = perms.clone();
    build(order, label, labels, move |a, b| {
        // (a∘b)(x) = a(b(x))
        let comp: Vec<u8> = (0..n).map(|x| perms2[a][perms2[b][x] as usize]).collect();
        index[&comp]
    })
}

/// Alternating group A_n from permutation composition, 2 <= n <= 8
/// (subject to the global order cap).
pub fn make_alternating(n: usize) -> Result<FiniteGroup> {
    perm_group(n, true, format!("A{n}"))
}

/// Symmetric group S_n from permutation composition, 2 <= n <= 8
/// (subject to the global order cap).
pub fn make_symmetric(n: usize) -> Result<FiniteGroup> {
    perm_group(n, false, format!("S{n}"))
}

/// Semidirect product N ⋊ H for an explicit action table:
/// `action[h][x]` is the image of N-element `x` under the automorphism
/// attached to H-element `h`. The action is verified to consist of
/// automorphisms and to be a homomorphism H -> Aut(N).
pub fn make_semidirect(
    n_grp: &FiniteGroup,
    h_grp: &FiniteGroup,
    action: Vec<Vec<u16>>,
) -> Result<FiniteGroup> {
    let n = n_grp.order();
    let h = h_grp.order();
    if n * h > ORDER_CAP {
        return Err(Error::Guard(format!("order {} exceeds cap {ORDER_CAP}", n * h)));
    }
    if action.len() != h || action.iter().any(|a| a.len() != n) {
        return Err(Error::BadInput("action table has wrong shape".into()));
    }
    // each action[h] must be an automorphism of N
    for (hi, a) in action.iter().enumerate() {
        let mut seen = vec![false; n];
        for &img in a {
            let img = img as usize;
            if img >= n || seen[img] {
                return Err(Error::BadInput(format!(
                    "action of h={hi} is not a bijection"
                )));
            }
            seen[img] = true;
        }
        for x in 0..n {
            for y in 0..n {
                if a[n_grp.mul(x, y)] != {
                    let ax = a[x] as usize;
                    let ay = a[y] as usize;
                    n_grp.mul(ax, ay) as u16
                } {
                    return Err(Error::BadInput(format!(
                        "action of h={hi} is not a homomorphism of N"
                    )));
                }
            }
        }
    }
    // the action must be a homomorphism H -> Aut(N)
    for h1 in 0..h {
        for h2 in 0..h {
            let h12 = h_grp.mul(h1, h2);
            for x in 0..n {
                if action[h12][x] != action[h1][action[h2][x] as usize] {
                    return Err(Error::BadInput(
                        "action is not a homomorphism into Aut(N)".into(),
                    ));
                }
            }
        }
    }
    if action[0].iter().enumerate().any(|(x, &y)| y as usize != x) {
        return Err(Error::BadInput("identity of H must act trivially".into()));
    }

    let labels = (0..n * h)
        .map(|i| {
            format!(
                "({},{})",
                n_grp.element_label(i / h),
                h_grp.element_label(i % h)
            )
        })
        .collect();
    let semidirect = action.iter().any(|a| a.iter().enumerate().any(|(x, &y)| y as usize != x));
    let label = if semidirect {
        format!("{}:{}", n_grp.label(), h_grp.label())
    } else {
        format!("{}x{}", n_grp.label(), h_grp.label())
    };
    let act = action.clone();
    let mut g = build(n * h, label, labels, move |x, y| {
        let (nx, hx) = (x / h, x % h);
        let (ny, hy) = (y / h, y % h);
        // (n1, h1)(n2, h2) = (n1 · h1(n2), h1 h2)
        let moved = act[hx][ny] as usize;
        n_grp.mul(nx, moved) * h + h_grp.mul(hx, hy)
    })?;
    g.set_product_meta(ProductMeta {
        left_order: n,
        right_order: h,
        action,
        semidirect,
    });
    Ok(g)
}

/// Direct product with componentwise multiplication.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup> {
    let trivial_action: Vec<Vec<u16>> = vec![(0..a.order() as u16).collect(); b.order()];
    make_semidirect(a, b, trivial_action)
}
