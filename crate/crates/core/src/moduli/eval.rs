use crate::complex::{SComplex, MAX_COMPLEX_ORDER};
use crate::enumerate::members_up_to;
use crate::error::{Error, Result};
use crate::pseudovariety::{pv_member, Pseudovariety};
use crate::relmorph::minimal_graphs;
use crate::semigroup::{GreenRelation, Semigroup, SubsemigroupKind};
use crate::subset::Subset;

use super::{BuiltinContext, BuiltinModulus, Context, Modulus};

/// `Λ_S`, sorted by mask and without repeats.
pub fn eval_modulus(m: &Modulus, s: &Semigroup) -> Result<Vec<Subset>> {
    if s.is_empty() {
        return Err(Error::EmptyBase);
    }
    m.check_params()?;
    let mut out = match m {
        Modulus::Builtin(b) => eval_builtin(*b, s),
        Modulus::Join(a, b) => {
            let mut v = eval_modulus(a, s)?;
            v.extend(eval_modulus(b, s)?);
            v
        }
        Modulus::FromContext(c) => eval_context(c, s)?,
        Modulus::Restrict(inner, ctx) => {
            let mut v = Vec::new();
            for u in eval_context(ctx, s)? {
                let (su, embed) = s.induced(u)?;
                v.extend(eval_modulus(inner, &su)?.into_iter().map(|x| x.map(&embed)));
            }
            v
        }
    };
    out.sort();
    out.dedup();
    Ok(out)
}

fn eval_builtin(b: BuiltinModulus, s: &Semigroup) -> Vec<Subset> {
    use BuiltinModulus as B;
    let n = s.order();
    match b {
        B::Grp => s.subgroups(),
        B::CycGrp => s.special_subsemigroups(SubsemigroupKind::CyclicSubgroups),
        B::RCl => s.green_partition(GreenRelation::R),
        B::LCl => s.green_partition(GreenRelation::L),
        B::JCl => s.green_partition(GreenRelation::J),
        B::PrinR => (0..n).map(|x| s.right_ideal(x)).collect(),
        B::PrinL => (0..n).map(|x| s.left_ideal(x)).collect(),
        B::PrinJ => (0..n).map(|x| s.two_sided_ideal(x)).collect(),
        B::Prod(k) => vec![s.k_products(k)],
        // a k-fold product times anything on the left is again a k-fold
        // product, so the tuples never need to be listed
        B::Suffix(k) => s.k_products(k).iter().map(|p| s.left_ideal(p)).collect(),
        B::Prefix(k) => s.k_products(k).iter().map(|p| s.right_ideal(p)).collect(),
        B::E => vec![s.idempotents()],
        B::Reg => vec![s.regular_elements()],
    }
}

/// `𝒪(S)`, a sorted list of subsemigroups.
pub fn eval_context(c: &Context, s: &Semigroup) -> Result<Vec<Subset>> {
    if s.is_empty() {
        return Err(Error::EmptyBase);
    }
    c.check_params()?;
    let mut out = match c {
        Context::Builtin(b) => {
            let kind = match b {
                BuiltinContext::Grp => SubsemigroupKind::Subgroups,
                BuiltinContext::CycGrp => SubsemigroupKind::CyclicSubgroups,
                BuiltinContext::Loc => SubsemigroupKind::LocalMonoids,
                BuiltinContext::EGen => SubsemigroupKind::IdempotentGenerated,
                BuiltinContext::RegGen => SubsemigroupKind::RegularGenerated,
                BuiltinContext::Full => return Ok(vec![s.elements()]),
            };
            s.special_subsemigroups(kind)
        }
        Context::FromModulus(m) => eval_modulus(m, s)?
            .into_iter()
            .map(|x| s.generate(x))
            .collect(),
        Context::EPApprox(pv, k) => idempotent_pointlike_approx(s, *pv, *k)?,
    };
    out.sort();
    out.dedup();
    Ok(out)
}

/// Subsemigroups `T` such that every minimal graph into a member of `pv`
/// of order at most `k` sends `T` into the fiber of one idempotent.
fn idempotent_pointlike_approx(s: &Semigroup, pv: Pseudovariety, k: usize) -> Result<Vec<Subset>> {
    if s.order() > MAX_COMPLEX_ORDER {
        return Err(Error::SizeCap {
            what: "semigroup order for idempotent pointlike search",
            got: s.order(),
            cap: MAX_COMPLEX_ORDER,
        });
    }
    let gens = s.greedy_generators();
    let mut constraints: Vec<Vec<Subset>> = Vec::new();
    for v in members_up_to(pv, k)? {
        let idem = v.idempotents();
        for rho in minimal_graphs(s, &v, gens)? {
            let fibers: Vec<Subset> = idem
                .iter()
                .map(|e| rho.fiber(e))
                .filter(|f| !f.is_empty())
                .collect();
            constraints.push(fibers);
        }
    }
    constraints.sort();
    constraints.dedup();
    Ok(s
        .elements()
        .nonempty_subsets()
        .filter(|&t| s.is_product_closed(t))
        .filter(|&t| constraints.iter().all(|fs| fs.iter().any(|&f| t.is_subset(f))))
        .collect())
}

/// `Λ|_𝒪`.
pub fn restrict_modulus(m: &Modulus, c: &Context) -> Modulus {
    m.clone().restrict(c.clone())
}

/// Whether `Λ_S` consists of singletons only. Always true on the empty
/// semigroup.
pub fn points_member(m: &Modulus, s: &Semigroup) -> Result<bool> {
    if s.is_empty() {
        return Ok(true);
    }
    Ok(eval_modulus(m, s)?.iter().all(|x| x.len() == 1))
}

/// `𝒞_Λ(S) = ⟨Λ_S⟩_S`.
pub fn functor_value(m: &Modulus, s: &Semigroup) -> Result<SComplex> {
    SComplex::generate(s, eval_modulus(m, s)?)
}

/// Membership of `S` in `𝒪⁻¹[V]`: every member of `𝒪(S)` lies in `V`.
pub fn ctx_operator_member(c: &Context, pv: Pseudovariety, s: &Semigroup) -> Result<bool> {
    if s.is_empty() {
        return Ok(true);
    }
    for u in eval_context(c, s)? {
        if !pv_member(pv, &s.induced(u)?.0) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> Subset {
        xs.iter().copied().collect()
    }

    fn m(text: &str) -> Modulus {
        text.parse().unwrap()
    }

    fn c(text: &str) -> Context {
        text.parse().unwrap()
    }

    #[test]
    fn builtin_examples() {
        let z2 = Semigroup::cyclic_group(2);
        assert_eq!(eval_modulus(&m("grp"), &z2).unwrap(), vec![set(&[0]), set(&[0, 1])]);
        assert_eq!(eval_modulus(&m("prod:2"), &Semigroup::null(2)).unwrap(), vec![set(&[0])]);
        assert_eq!(eval_modulus(&m("jcl"), &z2).unwrap(), vec![set(&[0, 1])]);
        let lz2 = Semigroup::left_zero(2);
        assert_eq!(eval_modulus(&m("prinr"), &lz2).unwrap(), vec![set(&[0]), set(&[1])]);
        assert_eq!(eval_modulus(&m("prinl"), &lz2).unwrap(), vec![set(&[0, 1])]);
        assert_eq!(eval_modulus(&m("suffix:1"), &lz2).unwrap(), vec![set(&[0, 1])]);
        assert_eq!(eval_modulus(&m("prefix:1"), &lz2).unwrap(), vec![set(&[0]), set(&[1])]);
        assert_eq!(eval_modulus(&m("grp"), &Semigroup::empty()), Err(Error::EmptyBase));
    }

    #[test]
    fn suffix_matches_tuple_listing() {
        for s in crate::enumerate::semigroups_up_to(3).unwrap() {
            let n = s.order();
            for k in 1..=3usize {
                let mut expect: Vec<Subset> = (0..n.pow(k as u32))
                    .map(|mut code| {
                        let mut p = code % n;
                        for _ in 1..k {
                            code /= n;
                            p = s.mul(p, code % n);
                        }
                        (0..n).map(|y| s.mul(y, p)).collect::<Subset>().with(p)
                    })
                    .collect();
                expect.sort();
                expect.dedup();
                assert_eq!(eval_modulus(&Modulus::Builtin(BuiltinModulus::Suffix(k)), &s).unwrap(), expect);
            }
        }
    }

    #[test]
    fn context_examples() {
        let sl2 = Semigroup::chain_semilattice(2);
        assert_eq!(eval_context(&c("ctx:loc"), &sl2).unwrap(), vec![set(&[0]), set(&[0, 1])]);
        assert_eq!(eval_context(&c("ctx:full"), &sl2).unwrap(), vec![set(&[0, 1])]);
        let lz2 = Semigroup::left_zero(2);
        assert_eq!(eval_context(&c("gen(e)"), &lz2).unwrap(), vec![set(&[0, 1])]);
    }

    #[test]
    fn restriction_examples() {
        for s in crate::enumerate::semigroups_up_to(3).unwrap() {
            let grp = m("grp");
            assert_eq!(
                eval_modulus(&m("restrict(grp,ctx:full)"), &s).unwrap(),
                eval_modulus(&grp, &s).unwrap()
            );
        }
        let z3 = Semigroup::cyclic_group(3);
        assert_eq!(
            eval_modulus(&m("restrict(grp,ctx:loc)"), &z3).unwrap(),
            eval_modulus(&m("grp"), &z3).unwrap()
        );
    }

    #[test]
    fn points_examples() {
        assert!(!points_member(&m("prinj"), &Semigroup::cyclic_group(2)).unwrap());
        assert!(points_member(&m("grp"), &Semigroup::chain_semilattice(2)).unwrap());
        assert!(points_member(&m("prod:2"), &Semigroup::null(2)).unwrap());
        assert!(points_member(&m("grp"), &Semigroup::empty()).unwrap());
    }

    #[test]
    fn functor_examples() {
        let sl2 = Semigroup::chain_semilattice(2);
        assert!(functor_value(&m("grp"), &sl2).unwrap().is_singletons());
        assert!(functor_value(&m("grp"), &Semigroup::cyclic_group(2)).unwrap().is_full());
        for b in BuiltinModulus::all_with(&[1, 2]) {
            assert!(functor_value(&b.into(), &Semigroup::trivial()).unwrap().is_singletons());
        }
    }

    #[test]
    fn operator_examples() {
        let grp = c("ctx:grp");
        assert!(ctx_operator_member(&grp, Pseudovariety::Trivial, &Semigroup::chain_semilattice(2)).unwrap());
        assert!(!ctx_operator_member(&grp, Pseudovariety::Trivial, &Semigroup::cyclic_group(2)).unwrap());
        for s in crate::enumerate::semigroups_up_to(3).unwrap() {
            assert_eq!(
                ctx_operator_member(&c("ctx:loc"), Pseudovariety::Trivial, &s).unwrap(),
                pv_member(Pseudovariety::LocallyTrivial, &s)
            );
        }
    }

    #[test]
    fn epapprox_examples() {
        // with W trivial every fiber is the whole semigroup
        for s in crate::enumerate::semigroups_up_to(3).unwrap() {
            let all: Vec<Subset> = s
                .elements()
                .nonempty_subsets()
                .filter(|&t| s.is_product_closed(t))
                .collect();
            assert_eq!(eval_context(&c("epapprox:trivial:1"), &s).unwrap(), all);
        }
        // into aperiodics a group collapses onto its identity's fiber
        let z2 = Semigroup::cyclic_group(2);
        let got = eval_context(&c("epapprox:aperiodic:2"), &z2).unwrap();
        assert_eq!(got, vec![set(&[0]), set(&[0, 1])]);
    }
}
