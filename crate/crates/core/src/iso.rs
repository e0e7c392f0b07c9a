//! Order isomorphism of finite posets by backtracking.

use alloc::vec;
use alloc::vec::Vec;

use crate::poset::Poset;

/// Per-element invariant used to prune candidates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Signature {
    colour: u32,
    down: usize,
    up: usize,
    lower_covers: usize,
    upper_covers: usize,
}

fn signatures(p: &Poset, colours: Option<&[u32]>) -> Vec<Signature> {
    let n = p.len();
    let mut lower = vec![0; n];
    let mut upper = vec![0; n];
    for (a, b) in p.covers() {
        upper[a] += 1;
        lower[b] += 1;
    }
    (0..n)
        .map(|a| Signature {
            colour: colours.map_or(0, |c| c[a]),
            down: p.down_size(a),
            up: p.up_size(a),
            lower_covers: lower[a],
            upper_covers: upper[a],
        })
        .collect()
}

/// An order isomorphism `p -> q` as `map[a] = image of a`, or `None`.
pub fn poset_isomorphic(p: &Poset, q: &Poset) -> Option<Vec<usize>> {
    isomorphism(p, q, None, None)
}

/// Like [`poset_isomorphic`], additionally requiring
/// `colours_q[map[a]] == colours_p[a]`.
pub fn poset_isomorphic_coloured(p: &Poset, q: &Poset, colours_p: &[u32], colours_q: &[u32]) -> Option<Vec<usize>> {
    if colours_p.len() != p.len() || colours_q.len() != q.len() {
        return None;
    }
    isomorphism(p, q, Some(colours_p), Some(colours_q))
}

fn isomorphism(p: &Poset, q: &Poset, cp: Option<&[u32]>, cq: Option<&[u32]>) -> Option<Vec<usize>> {
    let n = p.len();
    if n != q.len() {
        return None;
    }
    let sp = signatures(p, cp);
    let sq = signatures(q, cq);
    let mut a = sp.clone();
    let mut b = sq.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return None;
    }
    // Place elements in order of increasing down-set size so that each new
    // element is constrained by the ones below it.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (sp[x].down, x));
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).filter(|&y| sq[y] == sp[x]).collect())
        .collect();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if search(p, q, &order, &candidates, 0, &mut map, &mut used) {
        debug_assert!(verify(p, q, &map));
        verify(p, q, &map).then_some(map)
    } else {
        None
    }
}

fn search(
    p: &Poset,
    q: &Poset,
    order: &[usize],
    candidates: &[Vec<usize>],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&x) = order.get(depth) else {
        return true;
    };
    for &y in &candidates[x] {
        if used[y] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&w| {
            let v = map[w];
            p.leq(w, x) == q.leq(v, y) && p.leq(x, w) == q.leq(y, v)
        });
        if !consistent {
            continue;
        }
        map[x] = y;
        used[y] = true;
        if search(p, q, order, candidates, depth + 1, map, used) {
            return true;
        }
        used[y] = false;
        map[x] = usize::MAX;
    }
    false
}

/// Checks that `map` is a bijection with `a <= b  <=>  map[a] <= map[b]`.
pub fn verify(p: &Poset, q: &Poset, map: &[usize]) -> bool {
    let n = p.len();
    if q.len() != n || map.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for &y in map {
        if y >= n || core::mem::replace(&mut hit[y], true) {
            return false;
        }
    }
    (0..n).all(|a| (0..n).all(|b| p.leq(a, b) == q.leq(map[a], map[b])))
}
