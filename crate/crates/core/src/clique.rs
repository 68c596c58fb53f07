//! Exact maximum clique by branch and bound over bitset adjacency, with a
//! greedy colouring bound.

use fixedbitset::FixedBitSet;

struct Search<'a> {
    adj: &'a [FixedBitSet],
    best: Vec<usize>,
}

impl Search<'_> {
    /// Greedy sequential colouring of `candidates`; returns vertices in
    /// non-decreasing colour order with their colour numbers.
    fn colour_order(&self, candidates: &FixedBitSet) -> Vec<(usize, usize)> {
        let mut order = Vec::with_capacity(candidates.count_ones(..));
        let mut uncoloured = candidates.clone();
        let mut colour = 0;
        while !uncoloured.is_clear() {
            colour += 1;
            let mut available = uncoloured.clone();
            while let Some(v) = available.minimum() {
                available.set(v, false);
                available.difference_with(&self.adj[v]);
                uncoloured.set(v, false);
                order.push((v, colour));
            }
        }
        order
    }

    fn expand(&mut self, clique: &mut Vec<usize>, mut candidates: FixedBitSet) {
        let order = self.colour_order(&candidates);
        for &(v, colour) in order.iter().rev() {
            if clique.len() + colour <= self.best.len() {
                return;
            }
            clique.push(v);
            let mut next = candidates.clone();
            next.intersect_with(&self.adj[v]);
            if next.is_clear() {
                if clique.len() > self.best.len() {
                    self.best = clique.clone();
                }
            } else {
                self.expand(clique, next);
            }
            clique.pop();
            candidates.set(v, false);
        }
    }
}

/// A maximum clique of the graph with symmetric, irreflexive adjacency rows
/// `adj`, returned in ascending vertex order.
///
/// If `seed` is a clique, the result contains it whenever some maximum
/// clique does.
pub fn max_clique(adj: &[FixedBitSet], seed: &[usize]) -> Vec<usize> {
    let n = adj.len();
    let mut search = Search {
        adj,
        best: Vec::new(),
    };
    let seed_is_clique = seed
        .iter()
        .enumerate()
        .all(|(i, &a)| seed[i + 1..].iter().all(|&b| adj[a].contains(b)));
    if !seed.is_empty() && seed_is_clique {
        let mut candidates = FixedBitSet::with_capacity(n);
        candidates.insert_range(..);
        for &s in seed {
            candidates.intersect_with(&adj[s]);
        }
        search.best = seed.to_vec();
        let mut clique = seed.to_vec();
        if !candidates.is_clear() {
            search.expand(&mut clique, candidates);
        }
    }
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    if n > 0 {
        search.expand(&mut Vec::new(), all);
    }
    let mut best = search.best;
    best.sort_unstable();
    best
}
