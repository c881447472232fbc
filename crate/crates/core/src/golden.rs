//! Reference data for the cascade tables, Hasse diagrams and classification
//! lists, written down from closed formulas rather than computed by the
//! cascade recursion. Used by `verify` and the test suites.

use std::collections::BTreeSet;

use crate::cascade::Cascade;
use crate::rootsys::{Family, RootSystem, SimpleType};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GoldenElement {
    pub coeffs: Vec<i32>,
    pub parent: Option<Vec<i32>>,
    /// 1-based `Φ` labels.
    pub phi: Vec<usize>,
}

/// Simple-root coordinates of a vector given in `ε`-coordinates.
fn from_epsilon(stype: SimpleType, e: &[i32]) -> Vec<i32> {
    let n = stype.rank();
    let partial: Vec<i32> = e
        .iter()
        .scan(0, |s, &x| {
            *s += x;
            Some(*s)
        })
        .collect();
    let mut c = partial.clone();
    match stype.family() {
        Family::B => {}
        Family::C => c[n - 1] = partial[n - 1] / 2,
        Family::D => {
            c[n - 1] = partial[n - 1] / 2;
            c[n - 2] = (partial[n - 2] - e[n - 1]) / 2;
        }
        _ => unreachable!("ε-coordinates only for B, C, D"),
    }
    c
}

fn eps(n: usize, terms: &[(usize, i32)]) -> Vec<i32> {
    let mut v = vec![0; n];
    for &(i, s) in terms {
        v[i - 1] += s;
    }
    v
}

fn simple(n: usize, i: usize) -> Vec<i32> {
    let mut v = vec![0; n];
    v[i - 1] = 1;
    v
}

fn chain(roots: Vec<Vec<i32>>, phis: Vec<Vec<usize>>) -> Vec<GoldenElement> {
    let mut out = Vec::new();
    for (k, (r, phi)) in roots.iter().zip(phis).enumerate() {
        out.push(GoldenElement {
            coeffs: r.clone(),
            parent: k.checked_sub(1).map(|p| roots[p].clone()),
            phi,
        });
    }
    out
}

fn with_edges(roots: Vec<Vec<i32>>, edges: &[(usize, usize)], phis: Vec<Vec<usize>>) -> Vec<GoldenElement> {
    roots
        .iter()
        .zip(phis)
        .enumerate()
        .map(|(k, (r, phi))| GoldenElement {
            coeffs: r.clone(),
            parent: edges
                .iter()
                .find(|&&(_, c)| c == k + 1)
                .map(|&(p, _)| roots[p - 1].clone()),
            phi,
        })
        .collect()
}

/// The `B`/`D` pattern `β_{2i-1} = ε_{2i-1} + ε_{2i}`, `β_{2i} = α_{2i-1}`.
fn orthogonal(stype: SimpleType) -> Vec<GoldenElement> {
    let n = stype.rank();
    let d = stype.family() == Family::D;
    let pairs = n / 2;
    let mut roots = Vec::new();
    let mut edges = Vec::new();
    let mut phis = Vec::new();
    for i in 1..=pairs {
        let top = 2 * i - 1;
        roots.push(from_epsilon(stype, &eps(n, &[(2 * i - 1, 1), (2 * i, 1)])));
        roots.push(simple(n, 2 * i - 1));
        if i > 1 {
            edges.push((top - 2, top));
        }
        edges.push((top, top + 1));
        phis.push(vec![2 * i]);
        phis.push(vec![2 * i - 1]);
    }
    if !d && n % 2 == 1 {
        roots.push(simple(n, n));
        edges.push((n - 2, n));
        phis.push(vec![n]);
    }
    if d && n.is_multiple_of(2) {
        // The last two cascade roots hang off the same parent.
        let last = edges.len() - 1;
        edges[last] = (n - 3, n);
        phis[n - 2] = vec![n];
        phis[n - 1] = vec![n - 1];
    }
    if d && n % 2 == 1 {
        phis[n - 3] = vec![n - 1, n];
    }
    with_edges(roots, &edges, phis)
}

/// Cascade of the given type as listed in the classical tables.
pub fn expected_cascade(stype: SimpleType) -> Vec<GoldenElement> {
    let n = stype.rank();
    match stype.family() {
        Family::A => {
            let m = n.div_ceil(2);
            let roots = (1..=m)
                .map(|i| (1..=n).map(|j| (i <= j && j <= n + 1 - i) as i32).collect())
                .collect();
            let phis = (1..=m)
                .map(|i| if i == n + 1 - i { vec![i] } else { vec![i, n + 1 - i] })
                .collect();
            chain(roots, phis)
        }
        Family::C => {
            let roots = (1..=n).map(|i| from_epsilon(stype, &eps(n, &[(i, 2)]))).collect();
            chain(roots, (1..=n).map(|i| vec![i]).collect())
        }
        Family::B | Family::D => orthogonal(stype),
        Family::G => chain(vec![vec![3, 2], vec![1, 0]], vec![vec![2], vec![1]]),
        Family::F => chain(
            vec![vec![2, 4, 3, 2], vec![2, 2, 1, 0], vec![0, 2, 1, 0], vec![0, 0, 1, 0]],
            vec![vec![4], vec![1], vec![2], vec![3]],
        ),
        Family::E => match n {
            6 => chain(
                vec![
                    vec![1, 2, 3, 2, 1, 2],
                    vec![1, 1, 1, 1, 1, 0],
                    vec![0, 1, 1, 1, 0, 0],
                    vec![0, 0, 1, 0, 0, 0],
                ],
                vec![vec![6], vec![1, 5], vec![2, 4], vec![3]],
            ),
            7 => with_edges(
                vec![
                    vec![1, 2, 3, 4, 3, 2, 2],
                    vec![1, 2, 2, 2, 1, 0, 1],
                    simple(7, 1),
                    vec![0, 0, 1, 2, 1, 0, 1],
                    simple(7, 3),
                    simple(7, 5),
                    simple(7, 7),
                ],
                &[(1, 2), (2, 3), (2, 4), (4, 5), (4, 6), (4, 7)],
                vec![vec![6], vec![2], vec![1], vec![4], vec![3], vec![5], vec![7]],
            ),
            8 => with_edges(
                vec![
                    vec![2, 3, 4, 5, 6, 4, 2, 3],
                    vec![0, 1, 2, 3, 4, 3, 2, 2],
                    vec![0, 1, 2, 2, 2, 1, 0, 1],
                    simple(8, 2),
                    vec![0, 0, 0, 1, 2, 1, 0, 1],
                    simple(8, 4),
                    simple(8, 6),
                    simple(8, 8),
                ],
                &[(1, 2), (2, 3), (3, 4), (3, 5), (5, 6), (5, 7), (5, 8)],
                vec![vec![1], vec![7], vec![3], vec![2], vec![5], vec![4], vec![6], vec![8]],
            ),
            _ => unreachable!("validated rank"),
        },
    }
}

/// `{α : β - α ∈ Δ⁺ ∪ {0}}`, straight from the definition.
pub fn phi_by_definition(rs: &RootSystem, coeffs: &[i32]) -> Vec<usize> {
    (0..rs.rank())
        .filter(|&i| {
            let mut v = coeffs.to_vec();
            v[i] -= 1;
            v.iter().all(|&c| c == 0) || rs.find(&v).is_some()
        })
        .map(|i| i + 1)
        .collect()
}

/// The computed cascade in the same shape as [`expected_cascade`].
pub fn computed_cascade(rs: &RootSystem, cascade: &Cascade) -> Vec<GoldenElement> {
    cascade
        .elements()
        .iter()
        .map(|el| GoldenElement {
            coeffs: rs.root(el.root).coeffs().to_vec(),
            parent: el.parent.map(|p| rs.root(cascade.root(p)).coeffs().to_vec()),
            phi: el.phi.iter().map(|a| a + 1).collect(),
        })
        .collect()
}

/// Compares computed and expected cascades as labelled posets keyed by root
/// value. Returns a description of the first difference.
pub fn compare_cascade(rs: &RootSystem, cascade: &Cascade) -> Result<(), String> {
    let want: BTreeSet<GoldenElement> = expected_cascade(rs.stype()).into_iter().collect();
    let got: BTreeSet<GoldenElement> = computed_cascade(rs, cascade).into_iter().collect();
    if let Some(missing) = want.difference(&got).next() {
        return Err(format!("{}: expected cascade element {missing:?} not found", rs.stype()));
    }
    if let Some(extra) = got.difference(&want).next() {
        return Err(format!("{}: unexpected cascade element {extra:?}", rs.stype()));
    }
    for el in &want {
        let def = phi_by_definition(rs, &el.coeffs);
        if def != el.phi {
            return Err(format!("{}: Φ of {:?} is {def:?} by definition, table says {:?}", rs.stype(), el.coeffs, el.phi));
        }
    }
    Ok(())
}

/// `|K|` for each type: the rank, except `A_n` (`n ≥ 2`), `D_{2n+1}`, `E_6`.
pub fn expected_cascade_size(stype: SimpleType) -> usize {
    let n = stype.rank();
    match stype.family() {
        Family::A => n.div_ceil(2),
        Family::D if n % 2 == 1 => n - 1,
        Family::E if n == 6 => 4,
        _ => n,
    }
}

/// The quasi-quadratic classification, in 1-based labels. `k_simple` is the
/// set of simple roots that are cascade elements.
pub fn expected_quasi_quadratic(stype: SimpleType, t: &[usize], k_simple: &BTreeSet<usize>) -> bool {
    let n = stype.rank();
    match stype.family() {
        Family::A => t.len() == 1,
        Family::D if n % 2 == 1 => {
            let m = (n - 1) / 2;
            let evens_ok = t.iter().all(|&a| a % 2 == 1 || a >= 2 * m - 1);
            let tail = t.iter().filter(|&&a| a >= 2 * m - 1).count();
            evens_ok && tail <= 1
        }
        Family::E if n == 6 => t.len() == 1 && t[0] != 6,
        _ => t.iter().all(|a| k_simple.contains(a)),
    }
}

/// Square-integrable nilradicals of depth two, in 1-based labels.
pub fn expected_square_integrable_depth_two(stype: SimpleType) -> BTreeSet<Vec<usize>> {
    let n = stype.rank();
    let mut out = BTreeSet::new();
    match stype.family() {
        Family::A => {
            for k in 1..=n {
                if 2 * k < n + 1 {
                    out.insert(vec![k, n + 1 - k]);
                }
            }
        }
        Family::C => out.extend((1..n).map(|k| vec![k])),
        Family::B => out.extend((1..=n / 2).map(|k| vec![2 * k])),
        Family::D => {
            out.extend((1..n / 2).map(|k| vec![2 * k]));
            if n % 2 == 1 {
                out.insert(vec![n - 1, n]);
            }
        }
        Family::E => match n {
            6 => out.extend([vec![6], vec![1, 5]]),
            7 => out.extend([vec![6], vec![2]]),
            _ => out.extend([vec![1], vec![7]]),
        },
        Family::F => out.extend([vec![4], vec![1]]),
        Family::G => {
            out.insert(vec![2]);
        }
    }
    out
}

/// Every type covered by the tables: `A_1–A_8`, `B_2–B_8`, `C_1–C_8`,
/// `D_4–D_8` and the exceptional types.
pub fn table_types() -> Vec<SimpleType> {
    SimpleType::all_up_to(8)
}
