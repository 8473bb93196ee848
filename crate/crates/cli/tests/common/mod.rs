//! Brute-force reference implementations working directly on arc lists.
//! Nothing here goes through the library's precedence tables or path search.

#![allow(dead_code)]

use std::collections::BTreeSet;

use hyperarena::{Hypertournament, SimpleGraph, VertexId};

pub type Edges = BTreeSet<(usize, usize)>;

pub struct Naive {
    pub n: usize,
    pub arcs: Vec<Vec<usize>>,
}

impl Naive {
    pub fn new(n: usize, arcs: Vec<Vec<usize>>) -> Self {
        Naive { n, arcs }
    }

    pub fn of(t: &Hypertournament) -> Self {
        Naive {
            n: t.n(),
            arcs: t.arc_lists(),
        }
    }

    /// Every path from `x` of length 1..=max_len never touching `avoid`, as
    /// (end vertex, arcs used).
    pub fn paths(
        &self,
        x: usize,
        avoid: Option<usize>,
        max_len: usize,
    ) -> Vec<(usize, Vec<usize>)> {
        let mut seen = vec![false; self.n];
        seen[x] = true;
        if let Some(a) = avoid {
            seen[a] = true;
        }
        let mut out = Vec::new();
        self.extend(x, max_len, &mut seen, &mut Vec::new(), &mut out);
        out
    }

    fn extend(
        &self,
        v: usize,
        left: usize,
        seen: &mut [bool],
        used: &mut Vec<usize>,
        out: &mut Vec<(usize, Vec<usize>)>,
    ) {
        if left == 0 {
            return;
        }
        for (id, arc) in self.arcs.iter().enumerate() {
            if used.contains(&id) {
                continue;
            }
            let Some(pos) = arc.iter().position(|&u| u == v) else {
                continue;
            };
            for &w in &arc[pos + 1..] {
                if seen[w] {
                    continue;
                }
                seen[w] = true;
                used.push(id);
                out.push((w, used.clone()));
                self.extend(w, left - 1, seen, used, out);
                used.pop();
                seen[w] = false;
            }
        }
    }

    pub fn competes(&self, x: usize, y: usize, i: usize, j: usize) -> bool {
        let reach = i.max(j);
        let ps = self.paths(x, Some(y), reach);
        let qs = self.paths(y, Some(x), reach);
        ps.iter().any(|(z, p)| {
            qs.iter().any(|(z2, q)| {
                z == z2
                    && ((p.len() <= i && q.len() <= j) || (q.len() <= i && p.len() <= j))
                    && p.iter().all(|a| !q.contains(a))
            })
        })
    }

    pub fn graph(&self, i: usize, j: usize) -> Edges {
        let mut e = Edges::new();
        for x in 0..self.n {
            for y in x + 1..self.n {
                if self.competes(x, y, i, j) {
                    e.insert((x, y));
                }
            }
        }
        e
    }

    pub fn strong(&self) -> bool {
        (0..self.n).all(|x| {
            let ends: BTreeSet<usize> = self
                .paths(x, None, self.n)
                .into_iter()
                .map(|(z, _)| z)
                .collect();
            ends.len() == self.n - 1
        })
    }

    pub fn out(&self, x: usize, skip: Option<usize>) -> BTreeSet<usize> {
        let mut s = BTreeSet::new();
        for (id, arc) in self.arcs.iter().enumerate() {
            if Some(id) == skip {
                continue;
            }
            if let Some(pos) = arc.iter().position(|&u| u == x) {
                s.extend(&arc[pos + 1..]);
            }
        }
        s
    }

    /// Conditions (a)-(e) of the missing-edge characterization, read literally.
    pub fn characterized_missing(&self, x: usize, y: usize) -> bool {
        let (ox, oy) = (self.out(x, None), self.out(y, None));
        if ox.is_empty() || oy.is_empty() {
            return true;
        }
        if ox == BTreeSet::from([y]) || oy == BTreeSet::from([x]) {
            return true;
        }
        let star: Vec<usize> = (0..self.arcs.len())
            .filter(|&id| {
                let arc = &self.arcs[id];
                let last = *arc.last().unwrap();
                arc.contains(&x) && arc.contains(&y) && last != x && last != y
            })
            .collect();
        if let [a] = star[..] {
            return self.out(x, Some(a)).iter().all(|&v| v == y)
                && self.out(y, Some(a)).iter().all(|&v| v == x);
        }
        false
    }

    pub fn characterized_graph(&self) -> Edges {
        let mut e = Edges::new();
        for x in 0..self.n {
            for y in x + 1..self.n {
                if !self.characterized_missing(x, y) {
                    e.insert((x, y));
                }
            }
        }
        e
    }

    pub fn sink(&self) -> Option<usize> {
        (0..self.n).find(|&v| self.out(v, None).is_empty())
    }
}

pub fn edges_of(g: &SimpleGraph) -> Edges {
    g.edges().collect()
}

pub fn complete(n: usize) -> Edges {
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect()
}

/// `K_n` minus the listed 1-based pairs.
pub fn complete_minus(n: usize, missing: &[(usize, usize)]) -> Edges {
    let mut e = complete(n);
    for &(a, b) in missing {
        assert!(e.remove(&(a.min(b) - 1, a.max(b) - 1)));
    }
    e
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Shape {
    Complete,
    MinusP2,
    MinusP3,
    CliquePlusIsolated(usize),
    Other,
}

pub fn shape(n: usize, e: &Edges) -> Shape {
    let missing: Vec<(usize, usize)> = complete(n).difference(e).copied().collect();
    match missing.len() {
        0 => return Shape::Complete,
        1 => return Shape::MinusP2,
        2 => {
            let [(a, b), (c, d)] = [missing[0], missing[1]];
            if a == c || a == d || b == c || b == d {
                return Shape::MinusP3;
            }
        }
        _ => {}
    }
    for v in 0..n {
        let star: Edges = (0..n)
            .filter(|&u| u != v)
            .map(|u| (u.min(v), u.max(v)))
            .collect();
        if missing.iter().copied().collect::<Edges>() == star {
            return Shape::CliquePlusIsolated(v);
        }
    }
    Shape::Other
}

/// Complement forbidden-subgraph test, by direct search over vertex tuples.
pub fn complement_has(n: usize, e: &Edges) -> (bool, bool, bool) {
    let miss = |a: usize, b: usize| a != b && !e.contains(&(a.min(b), a.max(b)));
    let mut disjoint = false;
    let mut triangle = false;
    let mut claw = false;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let distinct = [a, b, c, d].iter().collect::<BTreeSet<_>>().len() == 4;
                    if distinct && miss(a, b) && miss(c, d) {
                        disjoint = true;
                    }
                    if distinct && miss(a, b) && miss(a, c) && miss(a, d) {
                        claw = true;
                    }
                }
                if a != b && b != c && a != c && miss(a, b) && miss(b, c) && miss(a, c) {
                    triangle = true;
                }
            }
        }
    }
    (disjoint, triangle, claw)
}

/// All k-hypertournaments on n vertices, by an explicit product over the
/// orderings of every k-subset (independent of the library's enumeration).
pub fn all_instances(n: usize, k: usize) -> Vec<Vec<Vec<usize>>> {
    let mut subsets = Vec::new();
    choose(n, k, 0, &mut Vec::new(), &mut subsets);
    let orders: Vec<Vec<Vec<usize>>> = subsets.iter().map(|s| orderings(s)).collect();
    let mut out = vec![Vec::new()];
    for opts in &orders {
        let mut next = Vec::with_capacity(out.len() * opts.len());
        for prefix in &out {
            for o in opts {
                let mut p: Vec<Vec<usize>> = prefix.clone();
                p.push(o.clone());
                next.push(p);
            }
        }
        out = next;
    }
    out
}

fn choose(n: usize, k: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for v in from..n {
        cur.push(v);
        choose(n, k, v + 1, cur, out);
        cur.pop();
    }
}

fn orderings(s: &[usize]) -> Vec<Vec<usize>> {
    if s.len() <= 1 {
        return vec![s.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..s.len() {
        let mut rest = s.to_vec();
        let head = rest.remove(i);
        for mut tail in orderings(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

pub fn build(n: usize, k: usize, arcs: &[Vec<usize>]) -> Hypertournament {
    Hypertournament::build(n, k, arcs).expect("oracle instances are valid")
}

pub fn v(label: usize) -> VertexId {
    VertexId::from_label(label)
}
