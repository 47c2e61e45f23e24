use super::Graph;
use crate::error::{Error, Result};

/// Largest order accepted by [`treewidth_exact`].
pub const TREEWIDTH_CAP: usize = 16;

/// Exact treewidth by dynamic programming over vertex subsets:
/// TW(S) = min over v in S of max(TW(S \ v), |Q(S \ v, v)|), where
/// Q(S, v) are the vertices outside S ∪ {v} reachable from v through S.
pub fn treewidth_exact(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n > TREEWIDTH_CAP {
        return Err(Error::Capacity(format!("treewidth is limited to order {TREEWIDTH_CAP}")));
    }
    let adj: Vec<u64> = (0..n).map(|i| g.mask(i)).collect();
    let full = (1u64 << n) - 1;
    let q = |s: u64, v: usize| -> u32 {
        let mut seen = 1u64 << v;
        let mut frontier = 1u64 << v;
        let mut out = 0u64;
        while frontier != 0 {
            let x = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let nb = adj[x] & !seen;
            seen |= nb;
            out |= nb & !s;
            frontier |= nb & s;
        }
        (out & full).count_ones()
    };
    let mut tw = vec![u32::MAX; 1 << n];
    tw[0] = 0;
    for s in 1u64..=full {
        let mut best = u32::MAX;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let without = s & !(1 << v);
            let val = tw[without as usize].max(q(without, v));
            best = best.min(val);
        }
        tw[s as usize] = best;
    }
    Ok(tw[full as usize] as usize)
}

/// Degeneracy: the largest minimum degree met while repeatedly deleting a
/// vertex of minimum degree.
pub fn degeneracy(g: &Graph) -> usize {
    let n = g.order();
    let mut deg: Vec<usize> = (0..n).map(|i| g.degree(i)).collect();
    let mut alive = vec![true; n];
    let mut best = 0;
    for _ in 0..n {
        let v = (0..n).filter(|&i| alive[i]).min_by_key(|&i| deg[i]).expect("a live vertex");
        best = best.max(deg[v]);
        alive[v] = false;
        for u in g.neighbors(v) {
            if alive[u] {
                deg[u] -= 1;
            }
        }
    }
    best
}
