//! Disjoint-set forests.

/// Union by size with path halving.
#[derive(Clone, Debug)]
pub struct DisjointSet {
    parent: Vec<u32>,
    size: Vec<u32>,
    components: usize,
}

impl DisjointSet {
    pub fn new(n: usize) -> Self {
        DisjointSet {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
            components: n,
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let grand = self.parent[self.parent[x] as usize];
            self.parent[x] = grand;
            x = grand as usize;
        }
        x
    }

    /// Returns `true` if two different components were merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a as u32;
        self.size[a] += self.size[b];
        self.components -= 1;
        true
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    pub fn components(&self) -> usize {
        self.components
    }
}

/// Union by size without path compression, so that unions can be undone in
/// LIFO order. Used by the depth-first searches.
#[derive(Clone, Debug)]
pub struct RollbackDisjointSet {
    parent: Vec<u32>,
    size: Vec<u32>,
    components: usize,
    history: Vec<Option<(u32, u32)>>,
}

impl RollbackDisjointSet {
    pub fn new(n: usize) -> Self {
        RollbackDisjointSet {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
            components: n,
            history: Vec::new(),
        }
    }

    pub fn find(&self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            x = self.parent[x] as usize;
        }
        x
    }

    /// Records one history entry whether or not a merge happened.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            self.history.push(None);
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a as u32;
        self.size[a] += self.size[b];
        self.components -= 1;
        self.history.push(Some((a as u32, b as u32)));
        true
    }

    /// Undoes the most recent `union` call.
    pub fn undo(&mut self) {
        if let Some(Some((a, b))) = self.history.pop() {
            self.parent[b as usize] = b;
            self.size[a as usize] -= self.size[b as usize];
            self.components += 1;
        }
    }

    pub fn components(&self) -> usize {
        self.components
    }
}
