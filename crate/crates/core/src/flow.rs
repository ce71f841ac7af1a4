//! Min-cost flow by the primal-dual method: Dijkstra with potentials finds
//! the current shortest distance, then a Dinic blocking flow saturates all
//! shortest augmenting paths at once. Costs must be non-negative.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

const INF: i64 = i64::MAX / 4;

#[derive(Clone, Debug)]
struct Arc {
    to: usize,
    cap: i64,
    cost: i64,
}

#[derive(Clone, Debug, Default)]
pub struct MinCostFlow {
    adj: Vec<Vec<usize>>,
    arcs: Vec<Arc>,
    orig_cap: Vec<i64>,
    supply: Vec<i64>,
    /// Node potentials keeping reduced residual costs non-negative after a solve.
    pot: Vec<i64>,
}

impl MinCostFlow {
    pub fn new(n: usize) -> Self {
        MinCostFlow {
            adj: vec![Vec::new(); n],
            arcs: Vec::new(),
            orig_cap: Vec::new(),
            supply: vec![0; n],
            pot: Vec::new(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    /// Adds an arc and returns its id.
    pub fn add_arc(&mut self, from: usize, to: usize, cap: i64, cost: i64) -> usize {
        debug_assert!(cost >= 0 && cap >= 0);
        let id = self.arcs.len();
        self.arcs.push(Arc { to, cap, cost });
        self.arcs.push(Arc { to: from, cap: 0, cost: -cost });
        self.orig_cap.push(cap);
        self.orig_cap.push(0);
        self.adj[from].push(id);
        self.adj[to].push(id + 1);
        id
    }

    /// Positive values are supplies, negative values demands.
    pub fn add_supply(&mut self, v: usize, amount: i64) {
        self.supply[v] += amount;
    }

    /// Flow on an arc after solving.
    pub fn flow(&self, arc: usize) -> i64 {
        self.orig_cap[arc] - self.arcs[arc].cap
    }

    /// Routes all supplies to all demands at minimum cost. Returns the cost,
    /// or `None` if supplies and demands cannot be balanced.
    pub fn solve(&mut self) -> Option<i64> {
        let total: i64 = self.supply.iter().sum();
        if total != 0 {
            return None;
        }
        let need: i64 = self.supply.iter().filter(|&&s| s > 0).sum();
        let n = self.adj.len();
        let s = n;
        let t = n + 1;
        self.adj.push(Vec::new());
        self.adj.push(Vec::new());
        let mut helper = Vec::new();
        for v in 0..n {
            let sup = self.supply[v];
            if sup > 0 {
                helper.push(self.add_arc(s, v, sup, 0));
            } else if sup < 0 {
                helper.push(self.add_arc(v, t, -sup, 0));
            }
        }
        let (f, cost) = self.run(s, t, need);
        // drop the helper arcs so that arc ids stay stable for callers
        for &id in helper.iter().rev() {
            let (a, b) = (self.arcs[id + 1].to, self.arcs[id].to);
            self.adj[a].pop();
            self.adj[b].pop();
        }
        let keep = helper.first().copied().unwrap_or(self.arcs.len());
        self.arcs.truncate(keep);
        self.orig_cap.truncate(keep);
        self.adj.truncate(n);
        self.pot.truncate(n);
        if f == need {
            Some(cost)
        } else {
            None
        }
    }

    fn run(&mut self, s: usize, t: usize, need: i64) -> (i64, i64) {
        let n = self.adj.len();
        let mut pot = vec![0i64; n];
        let mut flow = 0i64;
        let mut cost = 0i64;
        let mut dist = vec![INF; n];
        let mut level = vec![usize::MAX; n];
        let mut iter = vec![0usize; n];
        while flow < need {
            // Dijkstra on reduced costs
            dist.iter_mut().for_each(|d| *d = INF);
            dist[s] = 0;
            let mut heap = BinaryHeap::new();
            heap.push(Reverse((0i64, s)));
            while let Some(Reverse((d, v))) = heap.pop() {
                if d > dist[v] {
                    continue;
                }
                for &id in &self.adj[v] {
                    let a = &self.arcs[id];
                    if a.cap <= 0 {
                        continue;
                    }
                    let nd = d + a.cost + pot[v] - pot[a.to];
                    if nd < dist[a.to] {
                        dist[a.to] = nd;
                        heap.push(Reverse((nd, a.to)));
                    }
                }
            }
            if dist[t] >= INF {
                break;
            }
            let dt = dist[t];
            for v in 0..n {
                pot[v] += dist[v].min(dt);
            }
            // blocking flows on the admissible subgraph
            loop {
                level.iter_mut().for_each(|l| *l = usize::MAX);
                level[s] = 0;
                let mut q = VecDeque::from([s]);
                while let Some(v) = q.pop_front() {
                    for &id in &self.adj[v] {
                        let a = &self.arcs[id];
                        if a.cap > 0 && level[a.to] == usize::MAX && a.cost + pot[v] - pot[a.to] == 0 {
                            level[a.to] = level[v] + 1;
                            q.push_back(a.to);
                        }
                    }
                }
                if level[t] == usize::MAX {
                    break;
                }
                iter.iter_mut().for_each(|i| *i = 0);
                loop {
                    let pushed = self.augment(s, t, need - flow, &level, &mut iter, &pot);
                    if pushed == 0 {
                        break;
                    }
                    flow += pushed;
                    cost += pushed * (pot[t] - pot[s]);
                    if flow == need {
                        break;
                    }
                }
                if flow == need {
                    break;
                }
            }
        }
        self.pot = pot;
        (flow, cost)
    }

    /// After a successful `solve`, moves `amount` units of supply from node
    /// `from` to node `to` and restores optimality by shortest augmenting
    /// paths. Returns the cost change, or `None` if the flow cannot be routed.
    pub fn reroute(&mut self, from: usize, to: usize, mut amount: i64) -> Option<i64> {
        let n = self.adj.len();
        if self.pot.len() != n {
            return None;
        }
        self.supply[from] += amount;
        self.supply[to] -= amount;
        let mut extra = 0;
        let mut dist = vec![INF; n];
        let mut via = vec![usize::MAX; n];
        while amount > 0 {
            dist.iter_mut().for_each(|d| *d = INF);
            via.iter_mut().for_each(|d| *d = usize::MAX);
            dist[from] = 0;
            let mut heap = BinaryHeap::from([Reverse((0i64, from))]);
            while let Some(Reverse((d, v))) = heap.pop() {
                if d > dist[v] {
                    continue;
                }
                for &id in &self.adj[v] {
                    let a = &self.arcs[id];
                    if a.cap <= 0 {
                        continue;
                    }
                    let nd = d + a.cost + self.pot[v] - self.pot[a.to];
                    if nd < dist[a.to] {
                        dist[a.to] = nd;
                        via[a.to] = id;
                        heap.push(Reverse((nd, a.to)));
                    }
                }
            }
            let dt = dist[to];
            if dt >= INF {
                return None;
            }
            for v in 0..n {
                self.pot[v] += dist[v].min(dt);
            }
            let mut f = amount;
            let mut v = to;
            while v != from {
                let id = via[v];
                f = f.min(self.arcs[id].cap);
                v = self.arcs[id ^ 1].to;
            }
            let mut v = to;
            while v != from {
                let id = via[v];
                self.arcs[id].cap -= f;
                self.arcs[id ^ 1].cap += f;
                extra += f * self.arcs[id].cost;
                v = self.arcs[id ^ 1].to;
            }
            amount -= f;
        }
        Some(extra)
    }

    /// One augmenting path in the level graph (iterative DFS).
    fn augment(&mut self, s: usize, t: usize, limit: i64, level: &[usize], iter: &mut [usize], pot: &[i64]) -> i64 {
        let mut path: Vec<usize> = Vec::new();
        let mut v = s;
        loop {
            if v == t {
                let mut f = limit;
                for &id in &path {
                    f = f.min(self.arcs[id].cap);
                }
                for &id in &path {
                    self.arcs[id].cap -= f;
                    self.arcs[id ^ 1].cap += f;
                }
                return f;
            }
            let mut advanced = false;
            while iter[v] < self.adj[v].len() {
                let id = self.adj[v][iter[v]];
                let a = &self.arcs[id];
                if a.cap > 0 && level[a.to] == level[v] + 1 && a.cost + pot[v] - pot[a.to] == 0 {
                    path.push(id);
                    v = a.to;
                    advanced = true;
                    break;
                }
                iter[v] += 1;
            }
            if !advanced {
                if v == s {
                    return 0;
                }
                // dead end: retreat and skip the arc that led here
                let id = path.pop().unwrap();
                let u = self.arcs[id ^ 1].to;
                iter[u] += 1;
                v = u;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_transport() {
        let mut f = MinCostFlow::new(4);
        let a = f.add_arc(0, 1, 2, 1);
        let b = f.add_arc(0, 2, 2, 3);
        f.add_arc(1, 3, 1, 1);
        f.add_arc(2, 3, 5, 0);
        f.add_arc(1, 2, 5, 1);
        f.add_supply(0, 3);
        f.add_supply(3, -3);
        assert_eq!(f.solve(), Some(2 + 2 + 3));
        assert_eq!(f.flow(a), 2);
        assert_eq!(f.flow(b), 1);
    }

    #[test]
    fn reroute_matches_fresh_solve() {
        let build = |a: usize, b: usize| {
            let mut f = MinCostFlow::new(4);
            f.add_arc(0, 1, 3, 1);
            f.add_arc(0, 2, 3, 4);
            f.add_arc(1, 3, 2, 2);
            f.add_arc(2, 3, 5, 1);
            f.add_arc(1, 2, 5, 1);
            f.add_arc(3, 1, 5, 1);
            f.add_supply(a, 3);
            f.add_supply(b, -3);
            f
        };
        let mut f = build(0, 3);
        let c0 = f.solve().unwrap();
        let extra = f.reroute(3, 2, 3).unwrap();
        // supplies now: 0 → 3 units, 3 → 0, 2 → −3
        let fresh = build(0, 2).solve().unwrap();
        assert_eq!(c0 + extra, fresh);
    }

    #[test]
    fn infeasible_is_reported() {
        let mut f = MinCostFlow::new(2);
        f.add_arc(0, 1, 1, 0);
        f.add_supply(0, 2);
        f.add_supply(1, -2);
        assert_eq!(f.solve(), None);
    }

    #[test]
    fn convex_unit_arcs_fill_cheapest_first() {
        let mut f = MinCostFlow::new(2);
        let c = [f.add_arc(0, 1, 1, 5), f.add_arc(0, 1, 1, 1), f.add_arc(0, 1, 1, 3)];
        f.add_supply(0, 2);
        f.add_supply(1, -2);
        assert_eq!(f.solve(), Some(4));
        assert_eq!([f.flow(c[0]), f.flow(c[1]), f.flow(c[2])], [0, 1, 1]);
    }
}
