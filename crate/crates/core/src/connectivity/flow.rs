//! Dinic max-flow on small integer-capacity networks.

use std::collections::VecDeque;

pub(crate) const INF: u32 = u32::MAX / 2;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: u32,
}

/// Arcs are stored in pairs: arc `2k` and its residual twin `2k + 1`.
#[derive(Debug, Clone)]
pub(crate) struct FlowNetwork {
    arcs: Vec<Arc>,
    initial: Vec<u32>,
    out: Vec<Vec<usize>>,
    level: Vec<u32>,
    cursor: Vec<usize>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        Self {
            arcs: Vec::new(),
            initial: Vec::new(),
            out: vec![Vec::new(); nodes],
            level: vec![0; nodes],
            cursor: vec![0; nodes],
        }
    }

    pub fn add_arc(&mut self, u: usize, v: usize, cap: u32) {
        self.push_pair(u, v, cap, 0);
    }

    /// An undirected edge: capacity `cap` in each direction.
    pub fn add_edge(&mut self, u: usize, v: usize, cap: u32) {
        self.push_pair(u, v, cap, cap);
    }

    fn push_pair(&mut self, u: usize, v: usize, fwd: u32, bwd: u32) {
        let k = self.arcs.len();
        self.arcs.push(Arc { to: v, cap: fwd });
        self.arcs.push(Arc { to: u, cap: bwd });
        self.initial.push(fwd);
        self.initial.push(bwd);
        self.out[u].push(k);
        self.out[v].push(k + 1);
    }

    /// Restores every capacity to its value at insertion time.
    pub fn reset(&mut self) {
        for (a, &c) in self.arcs.iter_mut().zip(&self.initial) {
            a.cap = c;
        }
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = u32::MAX);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &k in &self.out[u] {
                let a = &self.arcs[k];
                if a.cap > 0 && self.level[a.to] == u32::MAX {
                    self.level[a.to] = self.level[u] + 1;
                    queue.push_back(a.to);
                }
            }
        }
        self.level[t] != u32::MAX
    }

    fn dfs(&mut self, u: usize, t: usize, pushed: u32) -> u32 {
        if u == t {
            return pushed;
        }
        while self.cursor[u] < self.out[u].len() {
            let k = self.out[u][self.cursor[u]];
            let (to, cap) = (self.arcs[k].to, self.arcs[k].cap);
            if cap > 0 && self.level[to] == self.level[u] + 1 {
                let got = self.dfs(to, t, pushed.min(cap));
                if got > 0 {
                    self.arcs[k].cap -= got;
                    self.arcs[k ^ 1].cap += got;
                    return got;
                }
            }
            self.cursor[u] += 1;
        }
        0
    }

    /// Max flow from `s` to `t`, stopping once `limit` units are routed.
    pub fn max_flow(&mut self, s: usize, t: usize, limit: u32) -> u32 {
        let mut flow = 0;
        while flow < limit && self.bfs(s, t) {
            self.cursor.iter_mut().for_each(|c| *c = 0);
            loop {
                let got = self.dfs(s, t, limit - flow);
                if got == 0 {
                    break;
                }
                flow += got;
                if flow >= limit {
                    break;
                }
            }
        }
        flow
    }

    /// Nodes reachable from `s` in the residual network.
    pub fn residual_reach(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &k in &self.out[u] {
                let a = &self.arcs[k];
                if a.cap > 0 && !seen[a.to] {
                    seen[a.to] = true;
                    stack.push(a.to);
                }
            }
        }
        seen
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classic_small_network() {
        // s=0, t=3, two disjoint unit paths plus a cross arc.
        let mut net = FlowNetwork::new(4);
        net.add_arc(0, 1, 1);
        net.add_arc(0, 2, 1);
        net.add_arc(1, 2, 1);
        net.add_arc(1, 3, 1);
        net.add_arc(2, 3, 1);
        assert_eq!(net.max_flow(0, 3, INF), 2);
        net.reset();
        assert_eq!(net.max_flow(0, 3, 1), 1);
    }

    #[test]
    fn undirected_cycle() {
        let mut net = FlowNetwork::new(4);
        for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 0)] {
            net.add_edge(u, v, 1);
        }
        assert_eq!(net.max_flow(0, 2, INF), 2);
        let reach = net.residual_reach(0);
        assert!(reach[0] && !reach[2]);
    }
}
