//! Left-right planarity test with embedding construction.
//!
//! Follows the three DFS passes of the left-right criterion (orientation,
//! testing, embedding). Edges are identified by index; half-edge `2e` runs
//! from the first stored endpoint of edge `e` to the second, `2e + 1` back.

use super::SimpleGraph;

const NONE: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, Default)]
struct Interval {
    low: u32,
    high: u32,
}

impl Interval {
    fn empty() -> Self {
        Interval { low: NONE, high: NONE }
    }

    fn is_empty(&self) -> bool {
        self.low == NONE && self.high == NONE
    }
}

#[derive(Clone, Copy, Debug)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn new() -> Self {
        ConflictPair {
            left: Interval::empty(),
            right: Interval::empty(),
        }
    }

    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

/// A rotation system: for each half-edge, the next half-edge clockwise and
/// counter-clockwise around its tail.
#[derive(Clone, Debug)]
pub struct Rotation {
    pub cw: Vec<u32>,
    pub ccw: Vec<u32>,
}

struct State<'g> {
    g: &'g SimpleGraph,
    height: Vec<u32>,
    parent_edge: Vec<u32>,
    /// tail of each edge once oriented
    tail: Vec<u32>,
    lowpt: Vec<u32>,
    lowpt2: Vec<u32>,
    nesting: Vec<i64>,
    ordered: Vec<Vec<u32>>,
    refs: Vec<u32>,
    side: Vec<i8>,
    lowpt_edge: Vec<u32>,
    stack_bottom: Vec<usize>,
    stack: Vec<ConflictPair>,
    roots: Vec<u32>,
    left_ref: Vec<u32>,
    right_ref: Vec<u32>,
    cw: Vec<u32>,
    ccw: Vec<u32>,
    first: Vec<u32>,
}

impl<'g> State<'g> {
    fn new(g: &'g SimpleGraph) -> Self {
        let (n, m) = (g.n, g.edges.len());
        State {
            g,
            height: vec![NONE; n],
            parent_edge: vec![NONE; n],
            tail: vec![NONE; m],
            lowpt: vec![0; m],
            lowpt2: vec![0; m],
            nesting: vec![0; m],
            ordered: vec![Vec::new(); n],
            refs: vec![NONE; m],
            side: vec![1; m],
            lowpt_edge: vec![NONE; m],
            stack_bottom: vec![0; m],
            stack: Vec::new(),
            roots: Vec::new(),
            left_ref: vec![NONE; n],
            right_ref: vec![NONE; n],
            cw: Vec::new(),
            ccw: Vec::new(),
            first: Vec::new(),
        }
    }

    #[inline]
    fn head(&self, e: u32) -> u32 {
        let (x, y) = self.g.edges[e as usize];
        if self.tail[e as usize] == x {
            y
        } else {
            x
        }
    }

    /// Half-edge of `e` leaving `v`.
    #[inline]
    fn half(&self, e: u32, v: u32) -> u32 {
        2 * e + u32::from(self.g.edges[e as usize].0 != v)
    }

    fn orient(&mut self, v: u32) {
        let e = self.parent_edge[v as usize];
        for i in 0..self.g.adj[v as usize].len() {
            let (w, vw) = self.g.adj[v as usize][i];
            let vwi = vw as usize;
            if self.tail[vwi] != NONE {
                continue;
            }
            self.tail[vwi] = v;
            self.lowpt[vwi] = self.height[v as usize];
            self.lowpt2[vwi] = self.height[v as usize];
            if self.height[w as usize] == NONE {
                self.parent_edge[w as usize] = vw;
                self.height[w as usize] = self.height[v as usize] + 1;
                self.orient(w);
            } else {
                self.lowpt[vwi] = self.height[w as usize];
            }
            self.nesting[vwi] = 2 * self.lowpt[vwi] as i64;
            if self.lowpt2[vwi] < self.height[v as usize] {
                self.nesting[vwi] += 1;
            }
            if e != NONE {
                let ei = e as usize;
                if self.lowpt[vwi] < self.lowpt[ei] {
                    self.lowpt2[ei] = self.lowpt[ei].min(self.lowpt2[vwi]);
                    self.lowpt[ei] = self.lowpt[vwi];
                } else if self.lowpt[vwi] > self.lowpt[ei] {
                    self.lowpt2[ei] = self.lowpt2[ei].min(self.lowpt[vwi]);
                } else {
                    self.lowpt2[ei] = self.lowpt2[ei].min(self.lowpt2[vwi]);
                }
            }
        }
    }

    fn conflicting(&self, i: &Interval, b: u32) -> bool {
        !i.is_empty() && self.lowpt[i.high as usize] > self.lowpt[b as usize]
    }

    fn lowest(&self, p: &ConflictPair) -> u32 {
        if p.left.is_empty() {
            return self.lowpt[p.right.low as usize];
        }
        if p.right.is_empty() {
            return self.lowpt[p.left.low as usize];
        }
        self.lowpt[p.left.low as usize].min(self.lowpt[p.right.low as usize])
    }

    fn test(&mut self, v: u32) -> bool {
        let e = self.parent_edge[v as usize];
        let out = std::mem::take(&mut self.ordered[v as usize]);
        let mut ok = true;
        for (idx, &ei) in out.iter().enumerate() {
            let w = self.head(ei);
            self.stack_bottom[ei as usize] = self.stack.len();
            if ei == self.parent_edge[w as usize] {
                if !self.test(w) {
                    ok = false;
                    break;
                }
            } else {
                self.lowpt_edge[ei as usize] = ei;
                self.stack.push(ConflictPair {
                    left: Interval::empty(),
                    right: Interval { low: ei, high: ei },
                });
            }
            if self.lowpt[ei as usize] < self.height[v as usize] {
                if idx == 0 {
                    self.lowpt_edge[e as usize] = self.lowpt_edge[ei as usize];
                } else if !self.add_constraints(ei, e) {
                    ok = false;
                    break;
                }
            }
        }
        self.ordered[v as usize] = out;
        if ok && e != NONE {
            self.remove_back_edges(e);
        }
        ok
    }

    fn add_constraints(&mut self, ei: u32, e: u32) -> bool {
        let mut p = ConflictPair::new();
        loop {
            let mut q = self.stack.pop().expect("return edges on the stack");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            if self.lowpt[q.right.low as usize] > self.lowpt[e as usize] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.refs[p.right.low as usize] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.refs[q.right.low as usize] = self.lowpt_edge[e as usize];
            }
            if self.stack.len() == self.stack_bottom[ei as usize] {
                break;
            }
        }
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if p.right.low != NONE {
                self.refs[p.right.low as usize] = q.right.high;
            }
            if q.right.low != NONE {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else {
                self.refs[p.left.low as usize] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: u32) {
        let u = self.tail[e as usize];
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u as usize] {
                break;
            }
            let p = self.stack.pop().unwrap();
            if p.left.low != NONE {
                self.side[p.left.low as usize] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while p.left.high != NONE && self.head(p.left.high) == u {
                p.left.high = self.refs[p.left.high as usize];
            }
            if p.left.high == NONE && p.left.low != NONE {
                self.refs[p.left.low as usize] = p.right.low;
                self.side[p.left.low as usize] = -1;
                p.left.low = NONE;
            }
            while p.right.high != NONE && self.head(p.right.high) == u {
                p.right.high = self.refs[p.right.high as usize];
            }
            if p.right.high == NONE && p.right.low != NONE {
                self.refs[p.right.low as usize] = p.left.low;
                self.side[p.right.low as usize] = -1;
                p.right.low = NONE;
            }
            self.stack.push(p);
        }
        if self.lowpt[e as usize] < self.height[u as usize] {
            let top = self.stack.last().expect("pending return edge");
            let (hl, hr) = (top.left.high, top.right.high);
            self.refs[e as usize] = if hl != NONE && (hr == NONE || self.lowpt[hl as usize] > self.lowpt[hr as usize]) {
                hl
            } else {
                hr
            };
        }
    }

    fn sign(&mut self, e: u32) -> i8 {
        let mut chain = Vec::new();
        let mut x = e;
        while self.refs[x as usize] != NONE {
            chain.push(x);
            x = self.refs[x as usize];
        }
        for &y in chain.iter().rev() {
            let r = self.refs[y as usize];
            self.side[y as usize] *= self.side[r as usize];
            self.refs[y as usize] = NONE;
        }
        self.side[e as usize]
    }

    fn add_cw(&mut self, v: u32, h: u32, reference: u32) {
        if reference == NONE {
            self.cw[h as usize] = h;
            self.ccw[h as usize] = h;
            self.first[v as usize] = h;
        } else {
            let next = self.cw[reference as usize];
            self.cw[reference as usize] = h;
            self.ccw[h as usize] = reference;
            self.cw[h as usize] = next;
            self.ccw[next as usize] = h;
        }
    }

    fn add_ccw(&mut self, v: u32, h: u32, reference: u32) {
        if reference == NONE {
            self.add_cw(v, h, NONE);
        } else {
            let before = self.ccw[reference as usize];
            self.add_cw(v, h, before);
            if self.first[v as usize] == reference {
                self.first[v as usize] = h;
            }
        }
    }

    fn embed(&mut self, v: u32) {
        let out = std::mem::take(&mut self.ordered[v as usize]);
        for &ei in &out {
            let w = self.head(ei);
            let back = self.half(ei, w);
            if ei == self.parent_edge[w as usize] {
                let f = self.first[w as usize];
                self.add_ccw(w, back, f);
                let fwd = self.half(ei, v);
                self.left_ref[v as usize] = fwd;
                self.right_ref[v as usize] = fwd;
                self.embed(w);
            } else if self.side[ei as usize] == 1 {
                let r = self.right_ref[w as usize];
                self.add_cw(w, back, r);
            } else {
                let l = self.left_ref[w as usize];
                self.add_ccw(w, back, l);
                self.left_ref[w as usize] = back;
            }
        }
        self.ordered[v as usize] = out;
    }

    fn sort_out_edges(&mut self) {
        let mut out: Vec<Vec<u32>> = vec![Vec::new(); self.g.n];
        for e in 0..self.g.edges.len() as u32 {
            out[self.tail[e as usize] as usize].push(e);
        }
        for list in &mut out {
            list.sort_by_key(|&e| self.nesting[e as usize]);
        }
        self.ordered = out;
    }

    /// Orientation and testing passes.
    fn run_test(&mut self) -> bool {
        for v in 0..self.g.n as u32 {
            if self.height[v as usize] == NONE {
                self.height[v as usize] = 0;
                self.roots.push(v);
                self.orient(v);
            }
        }
        self.sort_out_edges();
        for i in 0..self.roots.len() {
            let r = self.roots[i];
            if !self.test(r) {
                return false;
            }
        }
        true
    }

    fn run_embedding(&mut self) -> Rotation {
        for e in 0..self.g.edges.len() as u32 {
            let s = self.sign(e) as i64;
            self.nesting[e as usize] *= s;
        }
        self.sort_out_edges();
        let m2 = 2 * self.g.edges.len();
        self.cw = vec![NONE; m2];
        self.ccw = vec![NONE; m2];
        self.first = vec![NONE; self.g.n];
        for v in 0..self.g.n as u32 {
            let out = self.ordered[v as usize].clone();
            let mut prev = NONE;
            for e in out {
                let h = self.half(e, v);
                self.add_cw(v, h, prev);
                prev = h;
            }
        }
        for i in 0..self.roots.len() {
            let r = self.roots[i];
            self.embed(r);
        }
        Rotation {
            cw: std::mem::take(&mut self.cw),
            ccw: std::mem::take(&mut self.ccw),
        }
    }
}

/// Recursion depth is bounded by the vertex count; large inputs run on a
/// thread with a generous stack.
fn with_stack<T: Send>(n: usize, f: impl FnOnce() -> T + Send) -> T {
    if n < 2000 {
        return f();
    }
    std::thread::scope(|s| {
        std::thread::Builder::new()
            .stack_size((16 << 20) + n * 2048)
            .spawn_scoped(s, f)
            .expect("spawn planarity worker")
            .join()
            .expect("planarity worker panicked")
    })
}

/// Planarity decision only.
pub fn lr_is_planar(g: &SimpleGraph) -> bool {
    if g.n > 2 && g.edges.len() > 3 * g.n - 6 {
        return false;
    }
    with_stack(g.n, || State::new(g).run_test())
}

/// A planar rotation system, or `None` when the graph is not planar.
pub fn lr_embedding(g: &SimpleGraph) -> Option<Rotation> {
    if g.n > 2 && g.edges.len() > 3 * g.n - 6 {
        return None;
    }
    with_stack(g.n, || {
        let mut st = State::new(g);
        if !st.run_test() {
            return None;
        }
        Some(st.run_embedding())
    })
}
