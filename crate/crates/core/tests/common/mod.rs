//! Brute-force oracles shared by the integration tests. Nothing here uses
//! bitmasks, shift tables or pruning from the library.

#![allow(dead_code)]

use std::collections::BTreeSet;

pub type Set = BTreeSet<u64>;

pub fn set(el: &[u64]) -> Set {
    el.iter().copied().collect()
}

pub fn sumset(a: &Set, b: &Set) -> Set {
    a.iter().flat_map(|x| b.iter().map(move |y| x + y)).collect()
}

/// Non-empty subsets of `x`, shortlex order.
pub fn subsets(x: &[u64]) -> Vec<Set> {
    let mut out = vec![Set::new()];
    for &e in x {
        let more: Vec<Set> = out
            .iter()
            .map(|s| {
                let mut t = s.clone();
                t.insert(e);
                t
            })
            .collect();
        out.extend(more);
    }
    out.retain(|s| !s.is_empty());
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.iter().cmp(b.iter())));
    out
}

pub struct Families {
    pub non_sumsets: Vec<Set>,
    pub non_summands: Vec<Set>,
    pub neither: Vec<Set>,
}

/// Double loop over all ordered pairs of subsets. `allow_equal` admits
/// `A + A`.
pub fn classify(x: &[u64], allow_equal: bool) -> Families {
    let all = subsets(x);
    let xs: Set = x.iter().copied().collect();
    let zero = set(&[0]);
    let mut sums = BTreeSet::new();
    let mut summands = BTreeSet::new();
    for a in &all {
        for b in &all {
            if *a == zero || *b == zero || (a == b && !allow_equal) {
                continue;
            }
            let s = sumset(a, b);
            if s.is_subset(&xs) {
                sums.insert(s);
                summands.insert(a.clone());
            }
        }
    }
    let rest: Vec<Set> = all.into_iter().filter(|s| *s != zero).collect();
    let non_sumsets: Vec<Set> = rest.iter().filter(|s| !sums.contains(*s)).cloned().collect();
    let non_summands: Vec<Set> = rest.iter().filter(|s| !summands.contains(*s)).cloned().collect();
    let neither = non_sumsets.iter().filter(|s| non_summands.contains(s)).cloned().collect();
    Families { non_sumsets, non_summands, neither }
}

/// Whether `labels` (one per vertex) is an IASGL of the graph over `x`.
pub fn is_iasgl(edges: &[(usize, usize)], labels: &[Set], x: &[u64]) -> bool {
    let xs: Set = x.iter().copied().collect();
    let distinct: BTreeSet<&Set> = labels.iter().collect();
    if distinct.len() != labels.len() {
        return false;
    }
    let mut seen = BTreeSet::new();
    for &(u, v) in edges {
        let s = sumset(&labels[u], &labels[v]);
        if !s.is_subset(&xs) || !seen.insert(s) {
            return false;
        }
    }
    let targets: BTreeSet<Set> = subsets(x).into_iter().filter(|s| *s != set(&[0])).collect();
    seen == targets
}

/// Every IASGL of the graph over `x`, by plain enumeration of injective
/// labelings.
pub fn all_iasgl(order: usize, edges: &[(usize, usize)], x: &[u64]) -> Vec<Vec<Set>> {
    let pool = subsets(x);
    let mut out = Vec::new();
    let mut cur: Vec<Set> = Vec::new();
    let mut used = vec![false; pool.len()];
    fn rec(
        order: usize,
        edges: &[(usize, usize)],
        x: &[u64],
        pool: &[Set],
        used: &mut [bool],
        cur: &mut Vec<Set>,
        out: &mut Vec<Vec<Set>>,
    ) {
        if cur.len() == order {
            if is_iasgl(edges, cur, x) {
                out.push(cur.clone());
            }
            return;
        }
        for i in 0..pool.len() {
            if !used[i] {
                used[i] = true;
                cur.push(pool[i].clone());
                rec(order, edges, x, pool, used, cur, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    if order <= pool.len() {
        rec(order, edges, x, &pool, &mut used, &mut cur, &mut out);
    }
    out
}

/// Whether the graph has a cycle of odd length (BFS two-colouring).
pub fn has_odd_cycle(order: usize, edges: &[(usize, usize)]) -> bool {
    let mut adj = vec![Vec::new(); order];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut colour = vec![None; order];
    for s in 0..order {
        if colour[s].is_some() {
            continue;
        }
        colour[s] = Some(false);
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                match colour[w] {
                    None => {
                        colour[w] = Some(!colour[u].unwrap());
                        queue.push_back(w);
                    }
                    Some(c) if Some(c) == colour[u] => return true,
                    _ => {}
                }
            }
        }
    }
    false
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `{0} ∪ T` for every `T ⊂ [1, max]` of size `n - 1` with gcd 1, in
/// lexicographic order.
pub fn canonical_family(n: usize, max: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut cur = vec![0u64];
    fn rec(n: usize, max: u64, start: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == n {
            if cur[1..].iter().fold(0, |g, &v| gcd(g, v)) == 1 {
                out.push(cur.clone());
            }
            return;
        }
        for v in start..=max {
            cur.push(v);
            rec(n, max, v + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, max, 1, &mut cur, &mut out);
    out
}

pub fn to_set(s: &iasgl::IntegerSet) -> Set {
    s.iter().collect()
}
