//! Upper bounds on pointlike sets from bounded codomains, lower bounds from
//! moduli, and the squeeze between them.

use crate::complex::{FaceSet, SComplex};
use crate::enumerate::{members_up_to, semigroups_up_to};
use crate::error::{Error, Result};
use crate::moduli::{
    ctx_operator_member, monad_completion, points_member, restrict_modulus, Context, Modulus,
};
use crate::pseudovariety::Pseudovariety;
use crate::relmorph::{minimal_graphs, RelationalMorphism};
use crate::semigroup::Semigroup;

/// Intersection of nerves over relational morphisms into small members of
/// a pseudovariety. Always contains the true pointlike complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub value: SComplex,
    pub bound: usize,
    /// Number of codomains (up to isomorphism) tried.
    pub codomains_used: usize,
    pub graphs_intersected: usize,
    /// A single relational morphism whose nerve is already `value`.
    pub witness: Option<RelationalMorphism>,
}

/// Meets the nerves of all minimal graphs `S ⇸ T` over members `T` of `pv`
/// with `|T| ≤ k`, starting from `P(S)`.
pub fn oracle_pointlikes(s: &Semigroup, pv: Pseudovariety, k: usize) -> Result<OracleResult> {
    let full = SComplex::full(s)?;
    let gens = s.greedy_generators();
    let codomains = members_up_to(pv, k)?;
    let mut acc: FaceSet = full.faces().clone();
    let mut graphs = 0;
    for t in &codomains {
        for rho in minimal_graphs(s, t, gens)? {
            acc = acc.intersection(rho.nerve()?.faces());
            graphs += 1;
        }
    }
    let value = SComplex::from_faces(s, acc)?;
    let mut witness = None;
    'search: for t in &codomains {
        for rho in minimal_graphs(s, t, gens)? {
            if rho.nerve()? == value {
                witness = Some(rho);
                break 'search;
            }
        }
    }
    Ok(OracleResult {
        value,
        bound: k,
        codomains_used: codomains.len(),
        graphs_intersected: graphs,
        witness,
    })
}

/// The monad completion of `Λ` at `S`; below the pointlikes of every
/// pseudovariety contained in the points of `Λ`.
pub fn lower_bound(s: &Semigroup, m: &Modulus) -> Result<SComplex> {
    Ok(monad_completion(m, s)?.value)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub semigroup: Semigroup,
    pub pseudovariety: Pseudovariety,
    pub modulus: Modulus,
    pub lower: SComplex,
    pub upper: OracleResult,
    /// `lower == upper.value`, which pins down the pointlike complex.
    pub exact: bool,
}

/// Computes both bounds and compares them.
///
/// Fails with `PointsMismatch` when some member of `pv` of order at most
/// `k` is not a point of `Λ`, since then the completion need not be a lower
/// bound.
pub fn certify_exact(s: &Semigroup, pv: Pseudovariety, m: &Modulus, k: usize) -> Result<Certificate> {
    for t in members_up_to(pv, k)? {
        if !points_member(m, &t)? {
            return Err(Error::PointsMismatch { table: t.rows() });
        }
    }
    let lower = lower_bound(s, m)?;
    let upper = oracle_pointlikes(s, pv, k)?;
    if !lower.is_subcomplex_of(&upper.value) {
        return Err(Error::BoundsCrossed);
    }
    let exact = lower == upper.value;
    Ok(Certificate {
        semigroup: s.clone(),
        pseudovariety: pv,
        modulus: m.clone(),
        lower,
        upper,
        exact,
    })
}

/// Compares the oracle for `V^rev` at `S` with the reversed oracle for `V`
/// at `S^rev`.
pub fn reversal_transfer_check(s: &Semigroup, pv: Pseudovariety, k: usize) -> Result<bool> {
    let direct = oracle_pointlikes(s, pv.reversed(), k)?;
    let mirrored = oracle_pointlikes(&s.reverse(), pv, k)?;
    Ok(direct.value.faces() == mirrored.value.faces())
}

/// Outcome of [`fptc_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FptcReport {
    pub context: Context,
    pub modulus: Modulus,
    pub points: Pseudovariety,
    pub max_order: usize,
    pub checked: usize,
    /// Tables on which the two memberships disagree.
    pub counterexamples: Vec<Vec<Vec<usize>>>,
}

/// Compares the points of `Λ|_𝒪` with `𝒪⁻¹[points(Λ)]` on every semigroup
/// of order at most `max_order`.
pub fn fptc_check(ctx: &Context, m: &Modulus, max_order: usize) -> Result<FptcReport> {
    let points = m.wired_points().ok_or(Error::NoWiredPoints)?;
    let restricted = restrict_modulus(m, ctx);
    let universe = semigroups_up_to(max_order)?;
    let mut counterexamples = Vec::new();
    for s in &universe {
        if points_member(&restricted, s)? != ctx_operator_member(ctx, points, s)? {
            counterexamples.push(s.rows());
        }
    }
    Ok(FptcReport {
        context: ctx.clone(),
        modulus: m.clone(),
        points,
        max_order,
        checked: universe.len(),
        counterexamples,
    })
}
