//! The category of non-empty finite preordered sets and monotone maps.

use std::fmt;
use std::ops::ControlFlow;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::relation::Rel;

/// Default cap on the number of candidate maps an enumeration may visit.
pub const DEFAULT_BUDGET: u128 = 1_000_000;

/// How [`PreObj::make`] treats a generating pair list.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuildMode {
    /// Add the diagonal, then require transitivity.
    Strict,
    /// Take the reflexive-transitive closure.
    Close,
}

/// A non-empty finite preordered set on `{0..n-1}`.
///
/// Equality is structural: same carrier size, same relation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PreObj {
    rel: Arc<Rel>,
}

impl PreObj {
    pub fn new(rel: Rel) -> Result<Self> {
        if rel.n() == 0 {
            return Err(Error::EmptyCarrier);
        }
        if !rel.is_reflexive() {
            return Err(Error::NotPreorder);
        }
        if let Some((a, b, c)) = rel.transitivity_violation() {
            return Err(Error::NotTransitive { a, b, c });
        }
        Ok(PreObj { rel: Arc::new(rel) })
    }

    pub fn make(n: usize, pairs: &[(usize, usize)], mode: BuildMode) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        let generators = Rel::from_pairs(n, pairs)?;
        match mode {
            BuildMode::Strict => PreObj::new(generators.reflexive_closure()),
            BuildMode::Close => PreObj::new(generators.preorder_closure()),
        }
    }

    /// The trivial object `(n, =)`.
    ///
    /// Panics if `n == 0`.
    pub fn trivial(n: usize) -> Self {
        assert!(n >= 1, "preordered sets are non-empty");
        PreObj { rel: Arc::new(Rel::diagonal(n)) }
    }

    /// The chain `0 ≤ 1 ≤ … ≤ n-1`.
    pub fn chain(n: usize) -> Self {
        PreObj::new(Rel::from_fn(n, |a, b| a <= b)).expect("chain is a preorder")
    }

    /// The full relation on `n` elements (one equivalence class).
    pub fn indiscrete(n: usize) -> Self {
        PreObj::new(Rel::full(n)).expect("full relation is a preorder")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.rel.n()
    }

    #[inline]
    pub fn rel(&self) -> &Rel {
        &self.rel
    }

    #[inline]
    pub fn related(&self, a: usize, b: usize) -> bool {
        self.rel.get(a, b)
    }

    /// Whether the preorder is the equality relation.
    pub fn is_trivial(&self) -> bool {
        self.rel.is_diagonal()
    }

    pub fn is_equivalence(&self) -> bool {
        self.rel.is_symmetric()
    }

    pub fn is_partial_order(&self) -> bool {
        self.rel.is_antisymmetric()
    }

    /// The sub-preorder induced on `members` (reindexed in list order), or
    /// `None` for an empty list.
    pub fn induced(&self, members: &[usize]) -> Option<PreObj> {
        if members.is_empty() {
            return None;
        }
        Some(PreObj { rel: Arc::new(self.rel.restrict(members)) })
    }

    /// Same carrier with a different preorder.
    pub fn with_rel(&self, rel: Rel) -> Result<PreObj> {
        if rel.n() != self.n() {
            return Err(Error::SizeMismatch { left: self.n(), right: rel.n() });
        }
        PreObj::new(rel)
    }
}

impl fmt::Debug for PreObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PreObj(n={}, ", self.n())?;
        f.debug_list().entries(self.rel.off_diagonal_pairs()).finish()?;
        write!(f, ")")
    }
}

/// A monotone map between preordered sets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Morph {
    dom: PreObj,
    cod: PreObj,
    map: Vec<usize>,
}

impl fmt::Debug for Morph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Morph({:?} : {:?} -> {:?})", self.map, self.dom, self.cod)
    }
}

fn check_shape(map: &[usize], dom: &PreObj, cod: &PreObj) -> Result<()> {
    if map.len() != dom.n() {
        return Err(Error::ShapeMismatch { expected: dom.n(), got: map.len() });
    }
    if let Some(&bad) = map.iter().find(|&&x| x >= cod.n()) {
        return Err(Error::IndexOutOfRange { index: bad, n: cod.n() });
    }
    Ok(())
}

fn monotone_violation(map: &[usize], dom: &PreObj, cod: &PreObj) -> Option<(usize, usize)> {
    dom.rel().pairs().find(|&(a, b)| !cod.related(map[a], map[b]))
}

/// Whether `map` is monotone from `a` to `b`.
pub fn is_morphism(map: &[usize], a: &PreObj, b: &PreObj) -> Result<bool> {
    check_shape(map, a, b)?;
    Ok(monotone_violation(map, a, b).is_none())
}

impl Morph {
    pub fn new(dom: PreObj, cod: PreObj, map: Vec<usize>) -> Result<Self> {
        check_shape(&map, &dom, &cod)?;
        if let Some((a, b)) = monotone_violation(&map, &dom, &cod) {
            return Err(Error::NotMonotone { a, b, fa: map[a], fb: map[b] });
        }
        Ok(Morph { dom, cod, map })
    }

    /// Caller guarantees shape and monotonicity.
    pub(crate) fn new_unchecked(dom: PreObj, cod: PreObj, map: Vec<usize>) -> Self {
        debug_assert!(is_morphism(&map, &dom, &cod).unwrap_or(false));
        Morph { dom, cod, map }
    }

    pub fn identity(a: &PreObj) -> Self {
        Morph { dom: a.clone(), cod: a.clone(), map: (0..a.n()).collect() }
    }

    pub fn constant(dom: &PreObj, cod: &PreObj, value: usize) -> Result<Self> {
        Morph::new(dom.clone(), cod.clone(), vec![value; dom.n()])
    }

    #[inline]
    pub fn dom(&self) -> &PreObj {
        &self.dom
    }

    #[inline]
    pub fn cod(&self) -> &PreObj {
        &self.cod
    }

    #[inline]
    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    /// `self ∘ f`.
    pub fn compose(&self, f: &Morph) -> Result<Morph> {
        if f.cod != self.dom {
            return Err(Error::EndpointMismatch);
        }
        Ok(Morph {
            dom: f.dom.clone(),
            cod: self.cod.clone(),
            map: f.map.iter().map(|&x| self.map[x]).collect(),
        })
    }

    /// Trivial morphisms factor through a trivial object; equivalently
    /// `a ρ b` forces `f(a) = f(b)`.
    pub fn is_trivial(&self) -> bool {
        self.dom.rel().pairs().all(|(a, b)| self.map[a] == self.map[b])
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod.n()];
        self.map.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.cod.n()];
        for &x in &self.map {
            seen[x] = true;
        }
        seen.into_iter().all(|s| s)
    }

    /// Monomorphisms are exactly the injective morphisms.
    pub fn is_mono(&self) -> bool {
        self.is_injective()
    }

    /// Epimorphisms are exactly the surjective morphisms.
    pub fn is_epi(&self) -> bool {
        self.is_surjective()
    }

    /// Inverse morphism, if `self` is bijective with monotone inverse.
    pub fn inverse(&self) -> Option<Morph> {
        if self.dom.n() != self.cod.n() || !self.is_injective() {
            return None;
        }
        let mut inv = vec![0; self.cod.n()];
        for (a, &b) in self.map.iter().enumerate() {
            inv[b] = a;
        }
        Morph::new(self.cod.clone(), self.dom.clone(), inv).ok()
    }

    pub fn is_iso(&self) -> bool {
        self.inverse().is_some()
    }

    /// Same underlying map with new endpoints, if still monotone.
    pub fn retarget(&self, dom: &PreObj, cod: &PreObj) -> Result<Morph> {
        Morph::new(dom.clone(), cod.clone(), self.map.clone())
    }
}

/// `g ∘ f`.
pub fn compose(g: &Morph, f: &Morph) -> Result<Morph> {
    g.compose(f)
}

/// Product of candidate-list lengths, saturating.
pub(crate) fn candidate_count(candidates: &[Vec<usize>]) -> u128 {
    candidates.iter().fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128))
}

pub(crate) fn power_count(base: usize, exp: usize) -> u128 {
    (0..exp).fold(1u128, |acc, _| acc.saturating_mul(base as u128))
}

pub(crate) fn check_budget(needed: u128, budget: u128) -> Result<()> {
    if needed > budget {
        Err(Error::BudgetExceeded { needed, budget })
    } else {
        Ok(())
    }
}

/// Depth-first search over monotone maps `dom → cod` whose value at `x` is
/// drawn from `candidates[x]`. Visits complete maps in lexicographic order of
/// candidate position; the visitor may stop the search early.
pub(crate) fn search_maps(
    dom: &PreObj,
    cod: &PreObj,
    candidates: &[Vec<usize>],
    mut visit: impl FnMut(&[usize]) -> ControlFlow<()>,
) {
    fn go(
        i: usize,
        dom: &PreObj,
        cod: &PreObj,
        candidates: &[Vec<usize>],
        map: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if i == dom.n() {
            return visit(map);
        }
        for &v in &candidates[i] {
            if !cod.related(v, v) {
                continue;
            }
            let ok = (0..i).all(|j| {
                (!dom.related(j, i) || cod.related(map[j], v))
                    && (!dom.related(i, j) || cod.related(v, map[j]))
            });
            if ok {
                map.push(v);
                go(i + 1, dom, cod, candidates, map, visit)?;
                map.pop();
            }
        }
        ControlFlow::Continue(())
    }
    debug_assert_eq!(candidates.len(), dom.n());
    let mut map = Vec::with_capacity(dom.n());
    let _ = go(0, dom, cod, candidates, &mut map, &mut visit);
}

/// Visits every monotone map `a → b` in lexicographic order.
pub fn for_each_hom(
    a: &PreObj,
    b: &PreObj,
    budget: u128,
    visit: impl FnMut(&[usize]) -> ControlFlow<()>,
) -> Result<()> {
    check_budget(power_count(b.n(), a.n()), budget)?;
    let all: Vec<usize> = (0..b.n()).collect();
    let candidates = vec![all; a.n()];
    search_maps(a, b, &candidates, visit);
    Ok(())
}

/// `Hom(a, b)` in lexicographic map order.
pub fn hom_enumerate(a: &PreObj, b: &PreObj, budget: u128) -> Result<Vec<Morph>> {
    let mut out = Vec::new();
    for_each_hom(a, b, budget, |m| {
        out.push(Morph::new_unchecked(a.clone(), b.clone(), m.to_vec()));
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// `Triv(a, b)` in lexicographic map order.
pub fn triv_enumerate(a: &PreObj, b: &PreObj, budget: u128) -> Result<Vec<Morph>> {
    Ok(hom_enumerate(a, b, budget)?.into_iter().filter(Morph::is_trivial).collect())
}

/// Disjoint union with the block-diagonal preorder, plus the offset
/// injections.
pub fn coproduct(objs: &[PreObj]) -> Result<(PreObj, Vec<Morph>)> {
    if objs.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let mut offsets = Vec::with_capacity(objs.len());
    let mut total = 0;
    for o in objs {
        offsets.push(total);
        total += o.n();
    }
    let mut owner = Vec::with_capacity(total);
    for (i, o) in objs.iter().enumerate() {
        owner.extend(std::iter::repeat_n(i, o.n()));
    }
    let rel = Rel::from_fn(total, |x, y| {
        let (i, j) = (owner[x], owner[y]);
        i == j && objs[i].related(x - offsets[i], y - offsets[i])
    });
    let sum = PreObj::new(rel)?;
    let injections = objs
        .iter()
        .zip(&offsets)
        .map(|(o, &off)| Morph::new_unchecked(o.clone(), sum.clone(), (off..off + o.n()).collect()))
        .collect();
    Ok((sum, injections))
}

/// The unique map out of a coproduct restricting to `parts[i]` on block `i`.
pub fn copair(sum: &PreObj, injections: &[Morph], parts: &[Morph]) -> Result<Morph> {
    if injections.len() != parts.len() || parts.is_empty() {
        return Err(Error::ShapeMismatch { expected: injections.len(), got: parts.len() });
    }
    let target = parts[0].cod().clone();
    let mut map = vec![0; sum.n()];
    for (inj, part) in injections.iter().zip(parts) {
        if inj.dom() != part.dom() || part.cod() != &target || inj.cod() != sum {
            return Err(Error::EndpointMismatch);
        }
        for (x, &y) in inj.map().iter().enumerate() {
            map[y] = part.apply(x);
        }
    }
    Morph::new(sum.clone(), target, map)
}

/// Cartesian product with the componentwise preorder. Tuples are indexed
/// row-major: `(x_0, …, x_{k-1})` sits at `((x_0·n_1 + x_1)·n_2 + …)`.
/// `budget` bounds the size of the product relation matrix.
pub fn product(objs: &[PreObj], budget: u128) -> Result<(PreObj, Vec<Morph>)> {
    if objs.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let size = objs.iter().fold(1u128, |acc, o| acc.saturating_mul(o.n() as u128));
    check_budget(size.saturating_mul(size), budget)?;
    let total = size as usize;
    let decode = |mut x: usize| -> Vec<usize> {
        let mut coords = vec![0; objs.len()];
        for (i, o) in objs.iter().enumerate().rev() {
            coords[i] = x % o.n();
            x /= o.n();
        }
        coords
    };
    let tuples: Vec<Vec<usize>> = (0..total).map(decode).collect();
    let rel = Rel::from_fn(total, |x, y| {
        objs.iter().enumerate().all(|(i, o)| o.related(tuples[x][i], tuples[y][i]))
    });
    let prod = PreObj::new(rel)?;
    let projections = objs
        .iter()
        .enumerate()
        .map(|(i, o)| {
            Morph::new_unchecked(prod.clone(), o.clone(), tuples.iter().map(|t| t[i]).collect())
        })
        .collect();
    Ok((prod, projections))
}

/// The unique map into a product whose `i`-th projection is `parts[i]`.
pub fn tuple(prod: &PreObj, projections: &[Morph], parts: &[Morph]) -> Result<Morph> {
    if projections.len() != parts.len() || parts.is_empty() {
        return Err(Error::ShapeMismatch { expected: projections.len(), got: parts.len() });
    }
    let source = parts[0].dom().clone();
    for (proj, part) in projections.iter().zip(parts) {
        if part.dom() != &source || proj.cod() != part.cod() || proj.dom() != prod {
            return Err(Error::EndpointMismatch);
        }
    }
    let map = (0..source.n())
        .map(|x| parts.iter().fold(0, |acc, p| acc * p.cod().n() + p.apply(x)))
        .collect();
    Morph::new(source, prod.clone(), map)
}

/// First isomorphism `a → b` in lexicographic order, if any.
pub fn iso_search(a: &PreObj, b: &PreObj) -> Option<Morph> {
    let n = a.n();
    if n != b.n() || a.rel().count() != b.rel().count() {
        return None;
    }
    let signature = |o: &PreObj, x: usize| (o.rel().out_degree(x), o.rel().in_degree(x));
    let sig_a: Vec<_> = (0..n).map(|x| signature(a, x)).collect();
    let sig_b: Vec<_> = (0..n).map(|x| signature(b, x)).collect();
    let mut sorted_a = sig_a.clone();
    let mut sorted_b = sig_b.clone();
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return None;
    }

    fn go(
        i: usize,
        a: &PreObj,
        b: &PreObj,
        sig_a: &[(usize, usize)],
        sig_b: &[(usize, usize)],
        map: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let n = a.n();
        if i == n {
            return true;
        }
        for v in 0..n {
            if used[v] || sig_a[i] != sig_b[v] || a.related(i, i) != b.related(v, v) {
                continue;
            }
            let ok = (0..i).all(|j| {
                a.related(j, i) == b.related(map[j], v) && a.related(i, j) == b.related(v, map[j])
            });
            if ok {
                map.push(v);
                used[v] = true;
                if go(i + 1, a, b, sig_a, sig_b, map, used) {
                    return true;
                }
                used[v] = false;
                map.pop();
            }
        }
        false
    }

    let mut map = Vec::with_capacity(n);
    let mut used = vec![false; n];
    if go(0, a, b, &sig_a, &sig_b, &mut map, &mut used) {
        Some(Morph::new_unchecked(a.clone(), b.clone(), map))
    } else {
        None
    }
}

/// A morphism `h: g.dom → f.dom` with `f ∘ h = g`, if one exists.
pub fn find_lift(g: &Morph, f: &Morph, budget: u128) -> Result<Option<Morph>> {
    if g.cod() != f.cod() {
        return Err(Error::EndpointMismatch);
    }
    let candidates: Vec<Vec<usize>> = g
        .map()
        .iter()
        .map(|&target| (0..f.dom().n()).filter(|&a| f.apply(a) == target).collect())
        .collect();
    check_budget(candidate_count(&candidates), budget)?;
    let mut found = None;
    search_maps(g.dom(), f.dom(), &candidates, |m| {
        found = Some(m.to_vec());
        ControlFlow::Break(())
    });
    Ok(found.map(|m| Morph::new_unchecked(g.dom().clone(), f.dom().clone(), m)))
}
