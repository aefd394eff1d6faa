use crate::hypercore::{Hypergraph, Profile, VertexSet};

/// Streams the `A`-transversals of a hypergraph in increasing mask order.
///
/// Vertices are decided from the highest index down, "out" before "in", so
/// leaves come out sorted by mask value. Every edge tracks how many of its
/// vertices are already in the set and how many are still undecided; a branch
/// is cut as soon as some edge's reachable range `[count, count + undecided]`
/// misses the profile.
#[derive(Debug, Clone)]
pub struct Transversals {
    profile: Profile,
    n: usize,
    // edge indices incident to each vertex
    incidence: Vec<Vec<u32>>,
    count: Vec<u8>,
    undecided: Vec<u8>,
    forced: VertexSet,
    // choice taken at each depth; depth d decides vertex n - 1 - d
    choices: Vec<bool>,
    current: u64,
    state: State,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    AtLeaf,
    Done,
}

impl Transversals {
    pub fn new(h: &Hypergraph, profile: Profile) -> Self {
        Self::containing(h, profile, VertexSet::EMPTY)
    }

    /// Only transversals that contain every vertex of `forced`.
    pub fn containing(h: &Hypergraph, profile: Profile, forced: VertexSet) -> Self {
        let n = h.n();
        let mut incidence = vec![Vec::new(); n];
        for (i, e) in h.edges().iter().enumerate() {
            for v in e.iter() {
                incidence[v].push(i as u32);
            }
        }
        let m = h.edge_count();
        Transversals {
            profile,
            n,
            incidence,
            count: vec![0; m],
            undecided: vec![h.r() as u8; m],
            forced,
            choices: Vec::with_capacity(n),
            current: 0,
            state: State::Fresh,
        }
    }

    fn root_feasible(&self) -> bool {
        self.undecided.iter().all(|&u| self.profile.meets_range(0, u as usize))
    }

    #[inline]
    fn apply(&mut self, v: usize, take: bool) -> bool {
        let mut ok = true;
        for &e in &self.incidence[v] {
            let e = e as usize;
            self.undecided[e] -= 1;
            self.count[e] += take as u8;
            ok &= self.profile.meets_range(self.count[e] as usize, self.undecided[e] as usize);
        }
        ok
    }

    #[inline]
    fn revert(&mut self, v: usize, take: bool) {
        for &e in &self.incidence[v] {
            let e = e as usize;
            self.undecided[e] += 1;
            self.count[e] -= take as u8;
        }
    }

    fn try_push(&mut self, take: bool) -> bool {
        let v = self.n - 1 - self.choices.len();
        if !take && self.forced.contains(v) {
            return false;
        }
        if self.apply(v, take) {
            self.choices.push(take);
            if take {
                self.current |= 1u64 << v;
            }
            true
        } else {
            self.revert(v, take);
            false
        }
    }

    fn pop(&mut self) -> Option<bool> {
        let take = self.choices.pop()?;
        let v = self.n - 1 - self.choices.len();
        self.revert(v, take);
        if take {
            self.current &= !(1u64 << v);
        }
        Some(take)
    }

    /// Moves to the next untried sibling, unwinding as needed.
    fn backtrack(&mut self) -> bool {
        while let Some(take) = self.pop() {
            if !take && self.try_push(true) {
                return true;
            }
        }
        false
    }
}

impl Iterator for Transversals {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        match self.state {
            State::Done => return None,
            State::Fresh => {
                if !self.root_feasible() {
                    self.state = State::Done;
                    return None;
                }
            }
            State::AtLeaf => {
                if !self.backtrack() {
                    self.state = State::Done;
                    return None;
                }
            }
        }
        loop {
            if self.choices.len() == self.n {
                self.state = State::AtLeaf;
                return Some(VertexSet::from_mask(self.current));
            }
            if self.try_push(false) || self.try_push(true) {
                continue;
            }
            if !self.backtrack() {
                self.state = State::Done;
                return None;
            }
        }
    }
}
