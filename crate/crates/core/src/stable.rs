//! The stable category: morphisms modulo the congruence `R`, under which two
//! maps agree when they differ only on a clopen part where both are trivial.
//!
//! Clopens are unions of components, so `R` is decided component by
//! component. Trivial objects become zero objects and the prekernel and
//! precokernel constructions become kernels and cokernels.

use std::ops::ControlFlow;

use crate::category::{check_budget, copair, coproduct, for_each_hom, hom_enumerate, iso_search, Morph, PreObj};
use crate::error::{Error, Result};
use crate::exactness::{precokernel, prekernel, zeta};
use crate::relation::Rel;
use crate::topology::{clopen_enumerate, components, minimal_part};

/// A morphism of the stable category, held by an arbitrary representative.
/// Equality is `R`-equivalence of representatives.
#[derive(Clone, Debug)]
pub struct StableHom {
    rep: Morph,
}

impl StableHom {
    pub fn new(rep: Morph) -> Self {
        StableHom { rep }
    }

    pub fn rep(&self) -> &Morph {
        &self.rep
    }

    pub fn dom(&self) -> &PreObj {
        self.rep.dom()
    }

    pub fn cod(&self) -> &PreObj {
        self.rep.cod()
    }

    pub fn compose(&self, f: &StableHom) -> Result<StableHom> {
        Ok(StableHom::new(self.rep.compose(&f.rep)?))
    }

    pub fn is_zero(&self) -> bool {
        is_stable_zero(&self.rep)
    }
}

impl PartialEq for StableHom {
    fn eq(&self, other: &Self) -> bool {
        stable_eq(&self.rep, &other.rep).unwrap_or(false)
    }
}

impl Eq for StableHom {}

fn check_parallel(f: &Morph, g: &Morph) -> Result<()> {
    if f.dom() != g.dom() || f.cod() != g.cod() {
        return Err(Error::EndpointMismatch);
    }
    Ok(())
}

fn trivial_on(f: &Morph, block: &[usize]) -> bool {
    let a = f.dom();
    block.iter().all(|&x| (0..a.n()).all(|y| !a.related(x, y) || f.apply(x) == f.apply(y)))
}

/// `f R g`: on every component of the domain, `f` and `g` agree or are both
/// trivial.
pub fn stable_eq(f: &Morph, g: &Morph) -> Result<bool> {
    check_parallel(f, g)?;
    let parts = components(f.dom());
    Ok(parts.blocks().iter().all(|block| {
        block.iter().all(|&x| f.apply(x) == g.apply(x)) || (trivial_on(f, block) && trivial_on(g, block))
    }))
}

/// `f R g` decided literally: some clopen `B` has `f|_B`, `g|_B` trivial and
/// `f = g` off `B`.
pub fn stable_eq_oracle(f: &Morph, g: &Morph) -> Result<bool> {
    check_parallel(f, g)?;
    let a = f.dom();
    let trivial_inside = |h: &Morph, b: &crate::topology::SubsetMask| {
        a.rel().pairs().all(|(x, y)| !(b.contains(x) && b.contains(y)) || h.apply(x) == h.apply(y))
    };
    Ok(clopen_enumerate(a)?.iter().any(|b| {
        trivial_inside(f, b)
            && trivial_inside(g, b)
            && (0..a.n()).all(|x| b.contains(x) || f.apply(x) == g.apply(x))
    }))
}

/// The zero morphisms of the stable category are the classes of trivial
/// morphisms.
pub fn is_stable_zero(f: &Morph) -> bool {
    f.is_trivial()
}

/// Whether `f R g` implies `l∘f∘h R l∘g∘h`.
pub fn congruence_check(f: &Morph, g: &Morph, h: &Morph, l: &Morph) -> Result<bool> {
    check_parallel(f, g)?;
    if h.cod() != f.dom() || l.dom() != f.cod() {
        return Err(Error::EndpointMismatch);
    }
    if !stable_eq(f, g)? {
        return Ok(true);
    }
    stable_eq(&l.compose(&f.compose(h)?)?, &l.compose(&g.compose(h)?)?)
}

/// Decides stable isomorphism by comparing minimal parts. On success returns
/// `f: a → b` and `g: b → a` with both composites `R`-equivalent to
/// identities: an isomorphism between the minimal parts, extended by a
/// constant on the remaining singleton components.
pub fn stable_iso(a: &PreObj, b: &PreObj) -> Option<(Morph, Morph)> {
    let a_star = minimal_part(a).elements();
    let b_star = minimal_part(b).elements();
    match (a_star.is_empty(), b_star.is_empty()) {
        (true, true) => {
            let f = Morph::constant(a, b, 0).expect("in range");
            let g = Morph::constant(b, a, 0).expect("in range");
            return Some((f, g));
        }
        (true, false) | (false, true) => return None,
        (false, false) => {}
    }
    let sub_a = a.induced(&a_star).expect("non-empty");
    let sub_b = b.induced(&b_star).expect("non-empty");
    let phi = iso_search(&sub_a, &sub_b)?;
    let extend = |dom: &PreObj, cod: &PreObj, star: &[usize], target_star: &[usize], iso: &Morph| {
        let mut map = vec![target_star[0]; dom.n()];
        for (i, &x) in star.iter().enumerate() {
            map[x] = target_star[iso.apply(i)];
        }
        Morph::new(dom.clone(), cod.clone(), map).expect("singleton components are unconstrained")
    };
    let psi = phi.inverse().expect("iso");
    Some((extend(a, b, &a_star, &b_star, &phi), extend(b, a, &b_star, &a_star, &psi)))
}

pub fn stable_kernel(f: &Morph) -> StableHom {
    StableHom::new(prekernel(f))
}

pub fn stable_cokernel(f: &Morph) -> StableHom {
    StableHom::new(precokernel(f))
}

/// Every candidate satisfying `pred` is `R`-equivalent to the first
/// one, and there is at least one.
fn unique_up_to_r(candidates: Vec<Morph>, mut pred: impl FnMut(&Morph) -> Result<bool>) -> Result<bool> {
    let mut first: Option<Morph> = None;
    for c in candidates {
        if !pred(&c)? {
            continue;
        }
        match &first {
            None => first = Some(c),
            Some(m) => {
                if !stable_eq(m, &c)? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(first.is_some())
}

/// Literal check that `k` is a kernel of `f` in the stable category, with
/// test objects `tests`.
pub fn verify_stable_kernel(k: &StableHom, f: &Morph, tests: &[PreObj], budget: u128) -> Result<bool> {
    let k = k.rep();
    if k.cod() != f.dom() {
        return Err(Error::EndpointMismatch);
    }
    if !is_stable_zero(&f.compose(k)?) {
        return Ok(false);
    }
    for y in tests {
        for lambda in hom_enumerate(y, f.dom(), budget)? {
            if !is_stable_zero(&f.compose(&lambda)?) {
                continue;
            }
            let factors = hom_enumerate(y, k.dom(), budget)?;
            if !unique_up_to_r(factors, |l| stable_eq(&k.compose(l)?, &lambda))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Literal check that `p` is a cokernel of `f` in the stable category.
pub fn verify_stable_cokernel(p: &StableHom, f: &Morph, tests: &[PreObj], budget: u128) -> Result<bool> {
    let p = p.rep();
    if p.dom() != f.cod() {
        return Err(Error::EndpointMismatch);
    }
    if !is_stable_zero(&p.compose(f)?) {
        return Ok(false);
    }
    for y in tests {
        for lambda in hom_enumerate(f.cod(), y, budget)? {
            if !is_stable_zero(&lambda.compose(f)?) {
                continue;
            }
            let factors = hom_enumerate(p.cod(), y, budget)?;
            if !unique_up_to_r(factors, |l| stable_eq(&l.compose(p)?, &lambda))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A short exact sequence `A --f--> B --g--> C` of the stable category
/// compared with the row `(B, ρ∩∼) --kernel--> (B, ρ) --projection-->
/// (B/∼, ρ∨∼)`. Both squares commute up to `R`, and `left`, `right` are
/// stable isomorphisms with the given inverses.
#[derive(Clone, Debug)]
pub struct ShortExactDiagram {
    pub sim: Rel,
    pub kernel: Morph,
    pub projection: Morph,
    pub left: Morph,
    pub left_inverse: Morph,
    pub right: Morph,
    pub right_inverse: Morph,
}

impl ShortExactDiagram {
    /// Re-checks every commutativity and invertibility claim.
    pub fn check(&self, f: &Morph, g: &Morph) -> Result<bool> {
        Ok(stable_eq(&self.kernel.compose(&self.left)?, f)?
            && stable_eq(&f.compose(&self.left_inverse)?, &self.kernel)?
            && stable_eq(&self.right.compose(g)?, &self.projection)?
            && stable_eq(&self.right_inverse.compose(&self.projection)?, g)?
            && stable_eq(&self.left_inverse.compose(&self.left)?, &Morph::identity(f.dom()))?
            && stable_eq(&self.left.compose(&self.left_inverse)?, &Morph::identity(self.kernel.dom()))?
            && stable_eq(&self.right_inverse.compose(&self.right)?, &Morph::identity(g.cod()))?
            && stable_eq(&self.right.compose(&self.right_inverse)?, &Morph::identity(self.projection.cod()))?)
    }
}

/// First `h: dom → cod` with `pred(h)`, trying `preferred` before the
/// lexicographic scan.
fn find_map(
    dom: &PreObj,
    cod: &PreObj,
    preferred: Option<Morph>,
    budget: u128,
    mut pred: impl FnMut(&Morph) -> Result<bool>,
) -> Result<Option<Morph>> {
    if let Some(h) = preferred {
        if pred(&h)? {
            return Ok(Some(h));
        }
    }
    let mut found = None;
    let mut failure = None;
    for_each_hom(dom, cod, budget, |m| {
        let h = Morph::new(dom.clone(), cod.clone(), m.to_vec()).expect("monotone");
        match pred(&h) {
            Ok(true) => {
                found = Some(h);
                ControlFlow::Break(())
            }
            Ok(false) => ControlFlow::Continue(()),
            Err(e) => {
                failure = Some(e);
                ControlFlow::Break(())
            }
        }
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(found),
    }
}

/// Factors `p` through the surjection `g`, if the result is monotone.
fn descend(g: &Morph, p: &Morph) -> Option<Morph> {
    let mut map = vec![usize::MAX; g.cod().n()];
    for y in 0..g.dom().n() {
        let slot = &mut map[g.apply(y)];
        if *slot != usize::MAX && *slot != p.apply(y) {
            return None;
        }
        *slot = p.apply(y);
    }
    if map.contains(&usize::MAX) {
        return None;
    }
    Morph::new(g.cod().clone(), p.cod().clone(), map).ok()
}

/// Identifies a short exact sequence of the stable category with the
/// canonical row built from `∼ = ζ_k`, where `k` is the prekernel of `g`.
pub fn classify_short_exact(f: &Morph, g: &Morph, tests: &[PreObj], budget: u128) -> Result<ShortExactDiagram> {
    if f.cod() != g.dom() {
        return Err(Error::EndpointMismatch);
    }
    if !verify_stable_kernel(&StableHom::new(f.clone()), g, tests, budget)? {
        return Err(Error::NotShortExact("f is not a kernel of g in the stable category".into()));
    }
    if !verify_stable_cokernel(&StableHom::new(g.clone()), f, tests, budget)? {
        return Err(Error::NotShortExact("g is not a cokernel of f in the stable category".into()));
    }
    let kernel = prekernel(g);
    let sim = zeta(&kernel);
    let projection = precokernel(&kernel);
    let k_obj = kernel.dom();
    let q_obj = projection.cod();

    let missing = |what: &str| Error::InvariantViolated(format!("no {what} found"));
    let left = find_map(f.dom(), k_obj, f.retarget(f.dom(), k_obj).ok(), budget, |u| {
        stable_eq(&kernel.compose(u)?, f)
    })?
    .ok_or_else(|| missing("left comparison map"))?;
    let left_inverse = find_map(k_obj, f.dom(), left.inverse(), budget, |u| stable_eq(&f.compose(u)?, &kernel))?
        .ok_or_else(|| missing("inverse of the left comparison map"))?;
    let right = find_map(g.cod(), q_obj, descend(g, &projection), budget, |v| {
        stable_eq(&v.compose(g)?, &projection)
    })?
    .ok_or_else(|| missing("right comparison map"))?;
    let right_inverse = find_map(q_obj, g.cod(), right.inverse(), budget, |v| {
        stable_eq(&v.compose(&projection)?, g)
    })?
    .ok_or_else(|| missing("inverse of the right comparison map"))?;

    let diagram = ShortExactDiagram { sim, kernel, projection, left, left_inverse, right, right_inverse };
    if !diagram.check(f, g)? {
        return Err(Error::InvariantViolated("comparison maps are not stable isomorphisms".into()));
    }
    Ok(diagram)
}

/// For every family `λ_i: A_i → Y` with `Y` in `tests`, the maps
/// `g: ∐A_i → Y` with `g∘ι_i R λ_i` for all `i` are exactly the `R`-class of
/// the copairing.
pub fn verify_coproduct_preservation(objs: &[PreObj], tests: &[PreObj], budget: u128) -> Result<bool> {
    let (sum, injections) = coproduct(objs)?;
    for y in tests {
        let homs: Vec<Vec<Morph>> = objs.iter().map(|a| hom_enumerate(a, y, budget)).collect::<Result<_>>()?;
        let out = hom_enumerate(&sum, y, budget)?;
        let families = homs.iter().fold(1u128, |acc, h| acc.saturating_mul(h.len() as u128));
        check_budget(families.saturating_mul(out.len() as u128), budget.saturating_mul(budget))?;
        if homs.iter().any(Vec::is_empty) {
            continue;
        }
        // agrees[i][g][j]: out[g] restricted along ι_i is R-equivalent to homs[i][j]
        let agrees: Vec<Vec<Vec<bool>>> = homs
            .iter()
            .zip(&injections)
            .map(|(hs, inj)| {
                out.iter()
                    .map(|g| {
                        let restricted = g.compose(inj)?;
                        hs.iter().map(|l| stable_eq(&restricted, l)).collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        let mut choice = vec![0usize; objs.len()];
        loop {
            let parts: Vec<Morph> = choice.iter().zip(&homs).map(|(&j, hs)| hs[j].clone()).collect();
            let h = copair(&sum, &injections, &parts)?;
            for (gi, g) in out.iter().enumerate() {
                let commutes = choice.iter().enumerate().all(|(i, &j)| agrees[i][gi][j]);
                if commutes != stable_eq(g, &h)? {
                    return Ok(false);
                }
            }
            let mut i = 0;
            loop {
                if i == choice.len() {
                    break;
                }
                choice[i] += 1;
                if choice[i] < homs[i].len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
            if i == choice.len() {
                break;
            }
        }
    }
    Ok(true)
}
