//! Prekernels, precokernels and short preexact sequences.
//!
//! Trivial morphisms play the role of zero maps. The canonical prekernel of
//! `f: (A,ρ) → (A',ρ')` is the identity-carried `(A, ρ ∩ ∼_f) → (A, ρ)`; the
//! canonical precokernel is the projection `(A',ρ') → (A'/ζ_f, ρ' ∨ ζ_f)`.
//! Both are unique up to a unique isomorphism, so [`is_prekernel`] and
//! [`is_precokernel`] decide by comparison with the canonical construction.
//! The `verify_*_definitional` functions check the universal property
//! literally over a finite list of test objects and serve as oracles.

use std::ops::ControlFlow;

use crate::category::{check_budget, hom_enumerate, search_maps, Morph, PreObj};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::relation::Rel;

/// A composable pair `X --f--> Y --g--> Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seq {
    f: Morph,
    g: Morph,
}

impl Seq {
    pub fn new(f: Morph, g: Morph) -> Result<Self> {
        if f.cod() != g.dom() {
            return Err(Error::EndpointMismatch);
        }
        Ok(Seq { f, g })
    }

    pub fn f(&self) -> &Morph {
        &self.f
    }

    pub fn g(&self) -> &Morph {
        &self.g
    }
}

/// `a ∼_f b` iff `f(a) = f(b)`.
pub fn kernel_pair_equiv(f: &Morph) -> Rel {
    Rel::from_fn(f.dom().n(), |a, b| f.apply(a) == f.apply(b))
}

/// The identity-carried morphism `(A, ρ ∩ ∼_f) → (A, ρ)`.
pub fn prekernel(f: &Morph) -> Morph {
    let a = f.dom();
    let rel = a.rel().meet(&kernel_pair_equiv(f)).expect("same size");
    let dom = PreObj::new(rel).expect("meet of preorders is a preorder");
    Morph::new(dom, a.clone(), (0..a.n()).collect()).expect("identity into a larger preorder")
}

/// The quotient of `a` by an equivalence `sim ⊆ ρ`, ordered by
/// `[x] ρ' [y]` iff `x ρ y`, with its projection.
pub fn quotient_object(a: &PreObj, sim: &Rel) -> Result<(PreObj, Morph)> {
    if !sim.is_equivalence() {
        return Err(Error::NotEquivalence);
    }
    if !sim.is_subset(a.rel()) {
        return Err(Error::NotContained);
    }
    let parts = Partition::from_equivalence(sim)?;
    let q = PreObj::new(a.rel().restrict(&parts.representatives()))?;
    let pi = Morph::new(a.clone(), q.clone(), parts.class_map().to_vec())?;
    Ok((q, pi))
}

/// The equivalence on `f.cod` generated by `(f(a₁), f(a₂))` for `a₁ ρ a₂`.
pub fn zeta(f: &Morph) -> Rel {
    let pairs: Vec<(usize, usize)> = f.dom().rel().pairs().map(|(a, b)| (f.apply(a), f.apply(b))).collect();
    Rel::generated_equivalence(&pairs, f.cod().n()).expect("images are in range")
}

/// The projection `(A', ρ') → (A'/ζ_f, ρ' ∨ ζ_f)`.
pub fn precokernel(f: &Morph) -> Morph {
    let cod = f.cod();
    let z = zeta(f);
    let joined = cod.rel().join_preorders(&z).expect("both are preorders");
    let widened = PreObj::new(joined).expect("join is a preorder");
    let (q, pi) = quotient_object(&widened, &z).expect("ζ_f is contained in ρ' ∨ ζ_f");
    Morph::new(cod.clone(), q, pi.map().to_vec()).expect("ρ' ⊆ ρ' ∨ ζ_f")
}

/// If `k` is a prekernel of `f`, the unique isomorphism `u` from `k.dom` to
/// the canonical prekernel domain with `canonical ∘ u = k`.
pub fn is_prekernel(k: &Morph, f: &Morph) -> Result<Option<Morph>> {
    if k.cod() != f.dom() {
        return Err(Error::EndpointMismatch);
    }
    if !f.compose(k)?.is_trivial() {
        return Ok(None);
    }
    let canonical = prekernel(f);
    // canonical is identity-carried, so u has the same underlying map as k
    let Ok(u) = k.retarget(k.dom(), canonical.dom()) else {
        return Ok(None);
    };
    Ok(u.is_iso().then_some(u))
}

/// If `p` is a precokernel of `f`, the unique isomorphism `φ` from the
/// canonical precokernel codomain to `p.cod` with `φ ∘ canonical = p`.
pub fn is_precokernel(p: &Morph, f: &Morph) -> Result<Option<Morph>> {
    if p.dom() != f.cod() {
        return Err(Error::EndpointMismatch);
    }
    if !p.compose(f)?.is_trivial() {
        return Ok(None);
    }
    let canonical = precokernel(f);
    let q = canonical.cod();
    let mut phi = vec![usize::MAX; q.n()];
    for y in 0..p.dom().n() {
        let slot = &mut phi[canonical.apply(y)];
        if *slot == usize::MAX {
            *slot = p.apply(y);
        } else if *slot != p.apply(y) {
            return Ok(None);
        }
    }
    let Ok(phi) = Morph::new(q.clone(), p.cod().clone(), phi) else {
        return Ok(None);
    };
    Ok(phi.is_iso().then_some(phi))
}

/// Number of monotone maps `h` from `source` to `target` with `along ∘ h =
/// goal` (as maps), capped at `limit`.
pub(crate) fn count_factorizations(source: &PreObj, along: &Morph, goal: &[usize], limit: usize, budget: u128) -> Result<usize> {
    let candidates: Vec<Vec<usize>> = goal
        .iter()
        .map(|&t| (0..along.dom().n()).filter(|&x| along.apply(x) == t).collect())
        .collect();
    check_budget(crate::category::candidate_count(&candidates), budget)?;
    let mut count = 0;
    search_maps(source, along.dom(), &candidates, |_| {
        count += 1;
        if count >= limit {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(count)
}

/// Number of monotone `h: through.cod → target` with `h ∘ through = goal`,
/// capped at `limit`.
pub(crate) fn count_cofactorizations(through: &Morph, target: &PreObj, goal: &[usize], limit: usize, budget: u128) -> Result<usize> {
    let q = through.cod();
    let mut fixed = vec![None; q.n()];
    for (y, &z) in through.map().iter().enumerate() {
        match fixed[z] {
            None => fixed[z] = Some(goal[y]),
            Some(v) if v != goal[y] => return Ok(0),
            Some(_) => {}
        }
    }
    let candidates: Vec<Vec<usize>> = fixed
        .iter()
        .map(|v| match v {
            Some(v) => vec![*v],
            None => (0..target.n()).collect(),
        })
        .collect();
    check_budget(crate::category::candidate_count(&candidates), budget)?;
    let mut count = 0;
    search_maps(q, target, &candidates, |_| {
        count += 1;
        if count >= limit {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(count)
}

/// Literal check of the prekernel universal property against `tests`:
/// `f ∘ k` is trivial, and every `λ: Y → f.dom` with `f ∘ λ` trivial factors
/// through `k` in exactly one way.
pub fn verify_prekernel_definitional(k: &Morph, f: &Morph, tests: &[PreObj], budget: u128) -> Result<bool> {
    if k.cod() != f.dom() {
        return Err(Error::EndpointMismatch);
    }
    if !f.compose(k)?.is_trivial() {
        return Ok(false);
    }
    for y in tests {
        for lambda in hom_enumerate(y, f.dom(), budget)? {
            if !f.compose(&lambda)?.is_trivial() {
                continue;
            }
            if count_factorizations(y, k, lambda.map(), 2, budget)? != 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Literal check of the precokernel universal property against `tests`.
pub fn verify_precokernel_definitional(p: &Morph, f: &Morph, tests: &[PreObj], budget: u128) -> Result<bool> {
    if p.dom() != f.cod() {
        return Err(Error::EndpointMismatch);
    }
    if !p.compose(f)?.is_trivial() {
        return Ok(false);
    }
    for y in tests {
        for lambda in hom_enumerate(f.cod(), y, budget)? {
            if !lambda.compose(f)?.is_trivial() {
                continue;
            }
            if count_cofactorizations(p, y, lambda.map(), 2, budget)? != 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `f` is a prekernel of `g` and `g` is a precokernel of `f`.
pub fn is_short_preexact(s: &Seq) -> bool {
    preexact_failure(s).is_none()
}

/// Which half of preexactness fails, if any.
pub fn preexact_failure(s: &Seq) -> Option<&'static str> {
    if is_prekernel(&s.f, &s.g).ok().flatten().is_none() {
        return Some("f is not a prekernel of g");
    }
    if is_precokernel(&s.g, &s.f).ok().flatten().is_none() {
        return Some("g is not a precokernel of f");
    }
    None
}

/// `(A, ρ ∩ ∼_f) --k--> (A, ρ) --π--> (A/ζ_k, ρ ∨ ζ_k)`.
pub fn canonical_preexact_from_morphism(f: &Morph) -> Seq {
    let k = prekernel(f);
    let pi = precokernel(&k);
    Seq::new(k, pi).expect("composable by construction")
}

/// For a short preexact `X --f--> Y --g--> Z`, isomorphisms
/// `X → (Y, σ ∩ ∼_g)` and `Z → (Y/ζ_k, ζ_k ∨ σ)` (with `k` the canonical
/// prekernel of `g` and `π` its canonical precokernel) satisfying
/// `k ∘ left = f` and `right ∘ g = π`.
pub fn characterize_preexact(s: &Seq) -> Result<(Morph, Morph)> {
    if let Some(why) = preexact_failure(s) {
        return Err(Error::NotPreexact(why.to_string()));
    }
    let left = is_prekernel(&s.f, &s.g)?.expect("checked above");
    let k = prekernel(&s.g);
    let pi = precokernel(&k);
    // g is surjective (precokernels are epi), so right is determined by π
    let z = s.g.cod();
    let mut right = vec![usize::MAX; z.n()];
    for y in 0..s.g.dom().n() {
        let slot = &mut right[s.g.apply(y)];
        if *slot == usize::MAX {
            *slot = pi.apply(y);
        } else if *slot != pi.apply(y) {
            return Err(Error::InvariantViolated("π does not factor through g".into()));
        }
    }
    let right = Morph::new(z.clone(), pi.cod().clone(), right)
        .map_err(|e| Error::InvariantViolated(format!("comparison map is not monotone: {e}")))?;
    if !right.is_iso() {
        return Err(Error::InvariantViolated("comparison map is not an isomorphism".into()));
    }
    debug_assert_eq!(k.compose(&left)?, s.f);
    debug_assert_eq!(right.compose(&s.g)?, pi);
    Ok((left, right))
}

/// Whether the identity `(A,σ) → (A,ρ)` is the prekernel of some morphism,
/// decided by `σ = ρ ∩ ≡_σ`. When it holds, the identity is checked to be a
/// prekernel of the projection `(A,ρ) → (A/≡_σ, ρ ∨ ≡_σ)`.
pub fn identity_prekernel_test(sigma: &Rel, rho: &Rel) -> Result<bool> {
    Ok(identity_prekernel_witness(sigma, rho)?.is_some())
}

/// The projection `(A,ρ) → (A/≡_σ, ρ ∨ ≡_σ)` when `σ = ρ ∩ ≡_σ`.
pub fn identity_prekernel_witness(sigma: &Rel, rho: &Rel) -> Result<Option<Morph>> {
    if sigma.n() != rho.n() {
        return Err(Error::SizeMismatch { left: sigma.n(), right: rho.n() });
    }
    let small = PreObj::new(sigma.clone())?;
    let big = PreObj::new(rho.clone())?;
    if !sigma.is_subset(rho) {
        return Err(Error::NotContained);
    }
    let generated = sigma.equivalence_closure();
    if *sigma != rho.meet(&generated)? {
        return Ok(None);
    }
    let widened = PreObj::new(rho.join_preorders(&generated)?)?;
    let (q, pi) = quotient_object(&widened, &generated)?;
    let pi = Morph::new(big.clone(), q, pi.map().to_vec())?;
    let k = Morph::new(small, big, (0..sigma.n()).collect())?;
    if is_prekernel(&k, &pi)?.is_none() {
        return Err(Error::InvariantViolated(
            "identity is not a prekernel of the projection onto A/≡_σ".into(),
        ));
    }
    Ok(Some(pi))
}
