//! Brute-force oracles that share no code with the library beyond the
//! object and morphism types.

#![allow(dead_code)]

use preord::{Morph, PreObj, Rel};

pub type Matrix = Vec<Vec<bool>>;

/// All reflexive transitive relations on `n` points, by direct filtering of
/// every `n×n` boolean matrix.
pub fn brute_preorders(n: usize) -> Vec<Matrix> {
    let mut out = Vec::new();
    for mask in 0u64..1 << (n * n) {
        let m: Matrix = (0..n).map(|i| (0..n).map(|j| mask >> (i * n + j) & 1 == 1).collect()).collect();
        let reflexive = (0..n).all(|i| m[i][i]);
        let transitive = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(m[a][b] && m[b][c]) || m[a][c])));
        if reflexive && transitive {
            out.push(m);
        }
    }
    out
}

pub fn to_obj(m: &Matrix) -> PreObj {
    PreObj::new(Rel::from_fn(m.len(), |a, b| m[a][b])).unwrap()
}

pub fn matrix(a: &PreObj) -> Matrix {
    (0..a.n()).map(|i| (0..a.n()).map(|j| a.related(i, j)).collect()).collect()
}

pub fn objects_up_to(n: usize) -> Vec<PreObj> {
    (1..=n).flat_map(|k| brute_preorders(k).iter().map(to_obj).collect::<Vec<_>>()).collect()
}

pub fn is_symmetric(m: &Matrix) -> bool {
    (0..m.len()).all(|a| (0..m.len()).all(|b| m[a][b] == m[b][a]))
}

pub fn is_antisymmetric(m: &Matrix) -> bool {
    (0..m.len()).all(|a| (0..m.len()).all(|b| a == b || !(m[a][b] && m[b][a])))
}

pub fn is_diagonal(m: &Matrix) -> bool {
    (0..m.len()).all(|a| (0..m.len()).all(|b| m[a][b] == (a == b)))
}

/// Every function `{0..m} → {0..n}` as a vector, odometer order.
pub fn all_functions(m: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut f = vec![0; m];
    loop {
        out.push(f.clone());
        let mut i = 0;
        while i < m {
            f[i] += 1;
            if f[i] < n {
                break;
            }
            f[i] = 0;
            i += 1;
        }
        if i == m {
            return out;
        }
    }
}

pub fn monotone(f: &[usize], a: &Matrix, b: &Matrix) -> bool {
    (0..a.len()).all(|x| (0..a.len()).all(|y| !a[x][y] || b[f[x]][f[y]]))
}

pub fn brute_homs(a: &Matrix, b: &Matrix) -> Vec<Vec<usize>> {
    all_functions(a.len(), b.len()).into_iter().filter(|f| monotone(f, a, b)).collect()
}

/// Whether `f: a → b` equals `h ∘ g` for some monotone `g: a → T`,
/// `h: T → b`, with `T` a trivial object of at most `a.len()` points.
pub fn factors_through_trivial(f: &[usize], a: &Matrix, b: &Matrix) -> bool {
    (1..=a.len()).any(|k| {
        let t: Matrix = (0..k).map(|i| (0..k).map(|j| i == j).collect()).collect();
        brute_homs(a, &t).iter().any(|g| {
            brute_homs(&t, b).iter().any(|h| (0..a.len()).all(|x| h[g[x]] == f[x]))
        })
    })
}

pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let p = self.parent[x];
        if p == x {
            return x;
        }
        let r = self.find(p);
        self.parent[x] = r;
        r
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Components as sorted member lists, ordered by smallest member.
pub fn uf_components(m: &Matrix) -> Vec<Vec<usize>> {
    let n = m.len();
    let mut uf = UnionFind::new(n);
    for a in 0..n {
        for b in 0..n {
            if m[a][b] {
                uf.union(a, b);
            }
        }
    }
    group(&(0..n).map(|x| uf.find(x)).collect::<Vec<_>>())
}

fn group(labels: &[usize]) -> Vec<Vec<usize>> {
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for (x, &l) in labels.iter().enumerate() {
        match blocks.iter_mut().find(|b| labels[b[0]] == l) {
            Some(b) => b.push(x),
            None => blocks.push(vec![x]),
        }
    }
    blocks
}

/// Strongly connected components by Tarjan's algorithm, ordered by
/// smallest member.
pub fn tarjan_scc(m: &Matrix) -> Vec<Vec<usize>> {
    struct State<'a> {
        m: &'a Matrix,
        index: Vec<Option<usize>>,
        low: Vec<usize>,
        on_stack: Vec<bool>,
        stack: Vec<usize>,
        next: usize,
        comp: Vec<usize>,
        ncomp: usize,
    }
    fn visit(s: &mut State, v: usize) {
        s.index[v] = Some(s.next);
        s.low[v] = s.next;
        s.next += 1;
        s.stack.push(v);
        s.on_stack[v] = true;
        for w in 0..s.m.len() {
            if w == v || !s.m[v][w] {
                continue;
            }
            match s.index[w] {
                None => {
                    visit(s, w);
                    s.low[v] = s.low[v].min(s.low[w]);
                }
                Some(iw) if s.on_stack[w] => s.low[v] = s.low[v].min(iw),
                _ => {}
            }
        }
        if Some(s.low[v]) == s.index[v] {
            loop {
                let w = s.stack.pop().unwrap();
                s.on_stack[w] = false;
                s.comp[w] = s.ncomp;
                if w == v {
                    break;
                }
            }
            s.ncomp += 1;
        }
    }
    let n = m.len();
    let mut s = State {
        m,
        index: vec![None; n],
        low: vec![0; n],
        on_stack: vec![false; n],
        stack: Vec::new(),
        next: 0,
        comp: vec![0; n],
        ncomp: 0,
    };
    for v in 0..n {
        if s.index[v].is_none() {
            visit(&mut s, v);
        }
    }
    group(&s.comp)
}

pub fn blocks_to_equivalence(n: usize, blocks: &[Vec<usize>]) -> Rel {
    Rel::from_fn(n, |a, b| blocks.iter().any(|blk| blk.contains(&a) && blk.contains(&b)))
}

/// `f R g` decided over every subset of the domain: some subset with no
/// relation crossing its boundary carries trivial restrictions of both
/// maps, and the maps agree outside it.
pub fn literal_stable_eq(f: &Morph, g: &Morph) -> bool {
    let a = matrix(f.dom());
    let n = a.len();
    (0u32..1 << n).any(|bits| {
        let inside = |x: usize| bits >> x & 1 == 1;
        let clopen = (0..n).all(|x| (0..n).all(|y| !a[x][y] || inside(x) == inside(y)));
        let trivial = |h: &Morph| {
            (0..n).all(|x| (0..n).all(|y| !(a[x][y] && inside(x) && inside(y)) || h.apply(x) == h.apply(y)))
        };
        clopen && trivial(f) && trivial(g) && (0..n).all(|x| inside(x) || f.apply(x) == g.apply(x))
    })
}

/// Some `f: a → b`, `g: b → a` with both composites literally
/// stable-equal to identities.
pub fn brute_stable_iso(a: &PreObj, b: &PreObj) -> bool {
    let (ma, mb) = (matrix(a), matrix(b));
    let fs: Vec<Morph> = brute_homs(&ma, &mb).into_iter().map(|f| Morph::new(a.clone(), b.clone(), f).unwrap()).collect();
    let gs: Vec<Morph> = brute_homs(&mb, &ma).into_iter().map(|g| Morph::new(b.clone(), a.clone(), g).unwrap()).collect();
    let (ida, idb) = (Morph::identity(a), Morph::identity(b));
    fs.iter().any(|f| {
        gs.iter().any(|g| {
            literal_stable_eq(&g.compose(f).unwrap(), &ida) && literal_stable_eq(&f.compose(g).unwrap(), &idb)
        })
    })
}

/// All permutations of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    all_functions(n, n)
        .into_iter()
        .filter(|p| (0..n).all(|i| p.contains(&i)))
        .collect()
}
