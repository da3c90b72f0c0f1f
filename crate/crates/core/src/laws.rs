//! Named property suites over exhaustively enumerated small semigroups.
//!
//! Every suite takes a requested order and runs at `min(order, cap)`. Large
//! instance spaces are sampled with a fixed seed, so reports are
//! reproducible.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{
    all_complexes, complex_product, transport, Direction, FaceSet, SComplex,
};
use crate::congruence::congruences;
use crate::enumerate::{enumerate_semigroups, members_up_to, semigroups_up_to, Dedup};
use crate::error::Result;
use crate::moduli::{
    completion_step, ctx_operator_member, eval_context, eval_modulus, functor_value, monad_completion,
    points_member, BuiltinContext, BuiltinModulus, Context, Modulus,
};
use crate::morphism::{homomorphisms, Morphism};
use crate::pointlikes::{certify_exact, fptc_check, oracle_pointlikes, reversal_transfer_check};
use crate::pseudovariety::{pv_member, Pseudovariety};
use crate::relmorph::{all_relational_morphisms, change_of_base, minimal_graphs, RelationalMorphism};
use crate::semigroup::{GreenRelation, Semigroup, SubsemigroupKind};
use crate::subset::Subset;

const SEED: u64 = 0x5eed_0fc0_ffee;
const MAX_EXAMPLES: usize = 8;

/// Published numbers of semigroups of order 1..=5: raw tables, up to
/// isomorphism, up to isomorphism or anti-isomorphism.
pub const KNOWN_COUNTS: [[usize; 3]; 5] = [
    [1, 1, 1],
    [8, 5, 4],
    [113, 24, 18],
    [3492, 188, 126],
    [183732, 1915, 1160],
];

/// Outcome of one suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub order: usize,
    pub cases: usize,
    pub failures: usize,
    /// The first few failing instances.
    pub examples: Vec<String>,
    /// Observations that are reported but not asserted.
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// A registered suite.
pub struct Suite {
    pub name: &'static str,
    pub about: &'static str,
    /// Largest order the suite will run at.
    pub cap: usize,
    run: fn(&mut Tally, usize) -> Result<()>,
}

impl Suite {
    pub fn run(&self, order: usize) -> Result<SuiteReport> {
        let order = order.min(self.cap);
        let mut t = Tally::default();
        (self.run)(&mut t, order)?;
        Ok(SuiteReport {
            name: self.name,
            order,
            cases: t.cases,
            failures: t.failures,
            examples: t.examples,
            notes: t.notes,
        })
    }
}

#[derive(Default)]
struct Tally {
    cases: usize,
    failures: usize,
    examples: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < MAX_EXAMPLES {
                self.examples.push(what());
            }
        }
    }
}

macro_rules! suite {
    ($name:literal, $cap:expr, $about:literal, $f:ident) => {
        Suite {
            name: $name,
            about: $about,
            cap: $cap,
            run: $f,
        }
    };
}

/// Every suite, in a fixed order.
pub fn suites() -> &'static [Suite] {
    static SUITES: &[Suite] = &[
        suite!("green-refinement", 4, "H-classes refine R- and L-classes", green_refinement),
        suite!("group-elements", 4, "group elements are the union of subgroups; subgroup search matches a filter", group_elements),
        suite!("pv-reversal", 4, "membership in V^rev matches membership of the reversed semigroup", pv_reversal),
        suite!("pv-isomorphism", 4, "membership is invariant under relabeling", pv_isomorphism),
        suite!("quotients", 3, "congruence projections are surjective homomorphisms", quotients),
        suite!("enumeration", 4, "enumeration counts and canonical forms", enumeration),
        suite!("closure", 3, "complex generation is a closure operator", closure),
        suite!("galois", 3, "pushforward is left adjoint to pullback", galois),
        suite!("surjective-image", 3, "pushforward along a surjection adds only images of faces", surjective_image),
        suite!("lattice", 3, "meets and joins of complexes", lattice),
        suite!("nerve-monotone", 3, "larger graphs have larger nerves", nerve_monotone),
        suite!("nerve-laws", 3, "nerves of direct sums, products, base changes and divisions", nerve_laws),
        suite!("composition", 3, "composites with morphisms have the expected graphs", composition),
        suite!("modulus-axioms", 3, "builtin moduli satisfy the push and lift axioms", modulus_axioms),
        suite!("context-axioms", 3, "contexts satisfy the push and lift axioms", context_axioms),
        suite!("points", 4, "points of every builtin match the wired pseudovariety", points),
        suite!("fix", 4, "functor value, completion and points agree on fixed points", fix),
        suite!("join-preserving", 3, "the functor value of a join is the join of values", join_preserving),
        suite!("completion-closure", 3, "completion is extensive, monotone and stable", completion_closure),
        suite!("monad", 3, "union law at the completion and termination", monad),
        suite!("points-pseudovariety", 3, "points are closed under subsemigroups, quotients and products", points_pseudovariety),
        suite!("restriction", 3, "restricted moduli refine the original; points match the context operator", restriction),
        suite!("lower-soundness", 3, "functor values and completions lie below nerves into points", lower_soundness),
        suite!("oracle-monotone", 3, "the oracle shrinks as the codomain bound grows", oracle_monotone),
        suite!("fixed-points", 3, "members of V have singleton oracle values", fixed_points),
        suite!("lower-upper", 3, "completion lies below the oracle of its points", lower_upper),
        suite!("known-values", 3, "exact certificates for groups and for members of V", known_values),
        suite!("squeeze-stable", 3, "exact certificates do not move with a larger bound", squeeze_stable),
        suite!("iso-codomains", 3, "isomorphic codomains give the same nerves", iso_codomains),
        suite!("reversal-pltc", 3, "pointlikes commute with reversal", reversal_pltc),
        suite!("fptc", 4, "points of restrictions match the context operator", fptc),
    ];
    SUITES
}

pub fn find_suite(name: &str) -> Option<&'static Suite> {
    suites().iter().find(|s| s.name == name)
}

/// Runs every suite at `order`.
pub fn run_all(order: usize) -> Result<Vec<SuiteReport>> {
    suites().iter().map(|s| s.run(order)).collect()
}

fn show(s: &Semigroup) -> String {
    let mut out = String::from("[");
    for (i, row) in s.rows().iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "{row:?}");
    }
    out.push(']');
    out.replace(' ', "")
}

/// Builtin moduli with the parameterized ones at `k ∈ {1, 2, 3}`.
pub fn builtin_moduli() -> Vec<Modulus> {
    BuiltinModulus::all_with(&[1, 2, 3]).into_iter().map(Modulus::Builtin).collect()
}

fn wired(m: &Modulus) -> Pseudovariety {
    m.wired_points().expect("builtins are wired")
}

fn universe(order: usize) -> Result<Vec<Semigroup>> {
    semigroups_up_to(order)
}

/// Every raw table up to order 3, then iso classes above that.
fn broad_universe(order: usize) -> Result<Vec<Semigroup>> {
    let mut out = Vec::new();
    for n in 1..=order {
        let dedup = if n <= 3 { Dedup::Raw } else { Dedup::UpToIso };
        out.extend(enumerate_semigroups(n, dedup)?);
    }
    Ok(out)
}

fn pairs_of(u: &[Semigroup]) -> impl Iterator<Item = (&Semigroup, &Semigroup)> {
    u.iter().flat_map(move |a| u.iter().map(move |b| (a, b)))
}

fn green_refinement(t: &mut Tally, order: usize) -> Result<()> {
    for s in universe(order)? {
        let r = s.green_partition(GreenRelation::R);
        let l = s.green_partition(GreenRelation::L);
        for h in s.green_partition(GreenRelation::H) {
            let ok = r.iter().any(|c| h.is_subset(*c)) && l.iter().any(|c| h.is_subset(*c));
            t.check(ok, || format!("{} H-class {h:?}", show(&s)));
        }
    }
    Ok(())
}

fn is_subgroup(s: &Semigroup, x: Subset) -> bool {
    if !s.is_product_closed(x) {
        return false;
    }
    let (g, _) = s.induced(x).expect("closed");
    pv_member(Pseudovariety::Groups, &g)
}

fn group_elements(t: &mut Tally, order: usize) -> Result<()> {
    for s in universe(order)? {
        let subs = s.special_subsemigroups(SubsemigroupKind::Subgroups);
        let union = subs.iter().fold(Subset::EMPTY, |a, &b| a.union(b));
        t.check(union == s.group_elements(), || show(&s));
        let filtered: Vec<Subset> = s
            .elements()
            .nonempty_subsets()
            .filter(|&x| is_subgroup(&s, x))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        t.check(filtered == subs, || format!("{} subgroups {subs:?} vs {filtered:?}", show(&s)));
    }
    Ok(())
}

fn all_pseudovarieties() -> Vec<Pseudovariety> {
    let mut v = Pseudovariety::SIMPLE.to_vec();
    for k in 1..=3 {
        v.extend([
            Pseudovariety::NilpotentK(k),
            Pseudovariety::DelayK(k),
            Pseudovariety::ReverseDelayK(k),
        ]);
    }
    v
}

fn pv_reversal(t: &mut Tally, order: usize) -> Result<()> {
    for s in universe(order)? {
        let r = s.reverse();
        for pv in all_pseudovarieties() {
            t.check(pv_member(pv, &s) == pv_member(pv.reversed(), &r), || {
                format!("{pv} on {}", show(&s))
            });
        }
    }
    Ok(())
}

fn pv_isomorphism(t: &mut Tally, order: usize) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for s in universe(order)? {
        let mut perm: Vec<usize> = (0..s.order()).collect();
        for _ in 0..3 {
            perm.shuffle(&mut rng);
            let p = s.permuted(&perm);
            for pv in all_pseudovarieties() {
                t.check(pv_member(pv, &s) == pv_member(pv, &p), || {
                    format!("{pv} on {} under {perm:?}", show(&s))
                });
            }
        }
    }
    Ok(())
}

fn quotients(t: &mut Tally, order: usize) -> Result<()> {
    for s in universe(order)? {
        for c in congruences(&s)? {
            let p = &c.projection;
            let ok = p.is_surjective()
                && Morphism::new(s.clone(), c.quotient.clone(), p.map().to_vec()).is_ok()
                && (0..s.order()).all(|x| p.apply(x) == c.classes[x]);
            t.check(ok, || format!("{} classes {:?}", show(&s), c.classes));
        }
    }
    Ok(())
}

fn enumeration(t: &mut Tally, order: usize) -> Result<()> {
    for n in 1..=order {
        let raw = enumerate_semigroups(n, Dedup::Raw)?;
        let iso = enumerate_semigroups(n, Dedup::UpToIso)?;
        let anti = enumerate_semigroups(n, Dedup::UpToIsoAntiIso)?;
        let got = [raw.len(), iso.len(), anti.len()];
        t.check(got == KNOWN_COUNTS[n - 1], || format!("order {n}: {got:?}"));
        let canon: BTreeSet<Vec<usize>> = iso.iter().map(|s| s.canonical_table(false)).collect();
        t.check(canon.len() == iso.len(), || format!("order {n}: repeated canonical form"));
        if n <= 3 {
            let all_hit = raw.iter().all(|s| canon.contains(&s.canonical_table(false)));
            t.check(all_hit, || format!("order {n}: raw table without representative"));
        }
    }
    Ok(())
}

/// Families of at most two nonempty subsets.
fn small_families(s: &Semigroup) -> Vec<Vec<Subset>> {
    let subsets: Vec<Subset> = s.elements().nonempty_subsets().collect();
    let mut out = vec![vec![]];
    for (i, &a) in subsets.iter().enumerate() {
        out.push(vec![a]);
        for &b in &subsets[i + 1..] {
            out.push(vec![a, b]);
        }
    }
    out
}

fn closure(t: &mut Tally, order: usize) -> Result<()> {
    for s in broad_universe(order)? {
        for fam in small_families(&s) {
            let g = SComplex::generate(&s, fam.iter().copied())?;
            t.check(fam.iter().all(|&x| g.contains(x)), || {
                format!("{} not increasing on {fam:?}", show(&s))
            });
            let again = SComplex::generate(&s, g.faces().iter())?;
            t.check(again == g, || format!("{} not idempotent on {fam:?}", show(&s)));
            for &x in &fam {
                let smaller = SComplex::generate(&s, [x])?;
                t.check(smaller.is_subcomplex_of(&g), || {
                    format!("{} not monotone on {fam:?}", show(&s))
                });
            }
        }
    }
    Ok(())
}

fn complexes_of(cache: &mut HashMap<Semigroup, Vec<SComplex>>, s: &Semigroup) -> Result<Vec<SComplex>> {
    if let Some(v) = cache.get(s) {
        return Ok(v.clone());
    }
    let v = all_complexes(s)?;
    cache.insert(s.clone(), v.clone());
    Ok(v)
}

fn galois(t: &mut Tally, order: usize) -> Result<()> {
    let u = universe(order)?;
    let mut cache = HashMap::new();
    for (s, r) in pairs_of(&u) {
        let ks = complexes_of(&mut cache, s)?;
        let kt = complexes_of(&mut cache, r)?;
        for phi in homomorphisms(s, r) {
            let pushed: Vec<SComplex> = ks
                .iter()
                .map(|k| transport(&phi, Direction::Pushforward, k))
                .collect::<Result<_>>()?;
            let pulled: Vec<SComplex> = kt
                .iter()
                .map(|k| transport(&phi, Direction::Pullback, k))
                .collect::<Result<_>>()?;
            for (a, pa) in ks.iter().zip(&pushed) {
                for (b, pb) in kt.iter().zip(&pulled) {
                    t.check(pa.is_subcomplex_of(b) == a.is_subcomplex_of(pb), || {
                        format!("{} -> {} map {:?}", show(s), show(r), phi.map())
                    });
                }
            }
            for (i, b1) in kt.iter().enumerate() {
                for (j, b2) in kt.iter().enumerate().skip(i) {
                    let meet = transport(&phi, Direction::Pullback, &b1.meet(b2)?)?;
                    t.check(meet == pulled[i].meet(&pulled[j])?, || {
                        format!("pullback of meet, map {:?}", phi.map())
                    });
                }
            }
            for (i, a1) in ks.iter().enumerate() {
                for (j, a2) in ks.iter().enumerate().skip(i) {
                    let join = transport(&phi, Direction::Pushforward, &a1.join(a2)?)?;
                    t.check(join == pushed[i].join(&pushed[j])?, || {
                        format!("pushforward of join, map {:?}", phi.map())
                    });
                }
            }
        }
    }
    Ok(())
}

fn surjective_image(t: &mut Tally, order: usize) -> Result<()> {
    let u = universe(order)?;
    let mut cache = HashMap::new();
    for (s, r) in pairs_of(&u) {
        let ks = complexes_of(&mut cache, s)?;
        for phi in homomorphisms(s, r).into_iter().filter(Morphism::is_surjective) {
            for k in &ks {
                let pushed = transport(&phi, Direction::Pushforward, k)?;
                let images: BTreeSet<Subset> = k.faces().iter().map(|x| phi.image(x)).collect();
                let ok = pushed.faces().iter().all(|y| images.contains(&y));
                t.check(ok, || format!("{} -> {} map {:?}", show(s), show(r), phi.map()));
            }
        }
    }
    Ok(())
}

fn lattice(t: &mut Tally, order: usize) -> Result<()> {
    for s in universe(order)? {
        let all = all_complexes(&s)?;
        let full = SComplex::full(&s)?;
        let sing = SComplex::singletons(&s)?;
        t.check(all.contains(&full) && all.contains(&sing), || show(&s));
        for a in &all {
            for b in &all {
                let m = a.meet(b)?;
                let j = a.join(b)?;
                let ok = all.contains(&m)
                    && all.contains(&j)
                    && m.faces() == &a.faces().intersection(b.faces())
                    && a.is_subcomplex_of(&j)
                    && b.is_subcomplex_of(&j)
                    && all
                        .iter()
                        .filter(|c| a.is_subcomplex_of(c) && b.is_subcomplex_of(c))
                        .all(|c| j.is_subcomplex_of(c));
                t.check(ok, || format!("{} {:?} {:?}", show(&s), a.max_faces(), b.max_faces()));
            }
        }
        // descending chains: the running meet is the pointwise intersection
        let mut chain: Vec<&SComplex> = all.iter().collect();
        chain.sort_by_key(|c| std::cmp::Reverse(c.face_count()));
        let mut running = full.clone();
        let mut pointwise: FaceSet = full.faces().clone();
        for c in chain {
            if !c.is_subcomplex_of(&running) {
                continue;
            }
            running = running.meet(c)?;
            pointwise = pointwise.intersection(c.faces());
            t.check(running.faces() == &pointwise, || show(&s));
        }
    }
    Ok(())
}

/// Pairs of graphs, all of them at order 2 and a seeded sample at order 3.
fn sample_pairs<'a, A, B>(a: &'a [A], b: &'a [B], limit: usize, rng: &mut ChaCha8Rng) -> Vec<(&'a A, &'a B)> {
    let total = a.len() * b.len();
    if total <= limit {
        return a.iter().flat_map(|x| b.iter().map(move |y| (x, y))).collect();
    }
    (0..limit)
        .map(|_| (&a[rng.gen_range(0..a.len())], &b[rng.gen_range(0..b.len())]))
        .collect()
}

fn nerve_monotone(t: &mut Tally, order: usize) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let u = universe(order)?;
    for (s, r) in pairs_of(&u) {
        let graphs = all_relational_morphisms(s, r)?;
        let nerves: Vec<SComplex> = graphs.iter().map(|g| g.nerve()).collect::<Result<_>>()?;
        let idx: Vec<usize> = (0..graphs.len()).collect();
        let limit = if s.order().max(r.order()) <= 2 { usize::MAX } else { 400 };
        for (&i, &j) in sample_pairs(&idx, &idx, limit, &mut rng) {
            let contained = graphs[i].images().iter().zip(graphs[j].images()).all(|(a, b)| a.is_subset(*b));
            if contained {
                t.check(nerves[i].is_subcomplex_of(&nerves[j]), || {
                    format!("{:?} inside {:?}", graphs[i].pairs(), graphs[j].pairs())
                });
            }
        }
    }
    Ok(())
}

/// Minimal graphs from `s` into every semigroup of the universe.
fn graphs_from(s: &Semigroup, u: &[Semigroup]) -> Result<Vec<RelationalMorphism>> {
    let gens = s.greedy_generators();
    let mut out = Vec::new();
    for r in u {
        out.extend(minimal_graphs(s, r, gens)?);
    }
    Ok(out)
}

fn nerve_laws(t: &mut Tally, order: usize) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let u = universe(order)?;
    let graphs: Vec<Vec<RelationalMorphism>> =
        u.iter().map(|s| graphs_from(s, &u)).collect::<Result<_>>()?;
    let limit = 2_000;
    for (si, gs) in graphs.iter().enumerate() {
        for rho in gs {
            let n = rho.nerve()?;
            t.check(rho.is_division() == n.is_singletons(), || {
                format!("division {:?}", rho.pairs())
            });
        }
        for (a, b) in sample_pairs(gs, gs, limit, &mut rng) {
            let sum = a.direct_sum(b)?.nerve()?;
            t.check(sum == a.nerve()?.meet(&b.nerve()?)?, || {
                format!("direct sum on {}: {:?} {:?}", show(&u[si]), a.pairs(), b.pairs())
            });
        }
        for (sj, hs) in graphs.iter().enumerate() {
            let per = if u[si].order().max(u[sj].order()) <= 2 { usize::MAX } else { 40 };
            for (a, b) in sample_pairs(gs, hs, per, &mut rng) {
                let prod = a.product(b)?.nerve()?;
                t.check(prod == complex_product(&a.nerve()?, &b.nerve()?)?, || {
                    format!("product {:?} x {:?}", a.pairs(), b.pairs())
                });
            }
            for phi in homomorphisms(&u[sj], &u[si]) {
                let picks: Vec<&RelationalMorphism> = if gs.len() <= 30 {
                    gs.iter().collect()
                } else {
                    gs.choose_multiple(&mut rng, 30).collect()
                };
                for rho in picks {
                    let lhs = change_of_base(&phi, rho)?.nerve()?;
                    let rhs = transport(&phi, Direction::Pullback, &rho.nerve()?)?;
                    t.check(lhs == rhs, || format!("base change {:?} {:?}", phi.map(), rho.pairs()));
                }
            }
        }
    }
    Ok(())
}

fn composition(t: &mut Tally, order: usize) -> Result<()> {
    let u = universe(order)?;
    for (s, r) in pairs_of(&u) {
        let graphs = graphs_from(r, &u)?;
        for phi in homomorphisms(s, r) {
            for rho in &graphs {
                let got = change_of_base(&phi, rho)?;
                let expect: Vec<(usize, usize)> = (0..s.order())
                    .flat_map(|x| rho.images()[phi.apply(x)].iter().map(move |y| (x, y)))
                    .collect();
                t.check(got.pairs() == expect, || format!("pre {:?} {:?}", phi.map(), rho.pairs()));
            }
        }
        // post-composition: ρ followed by ψ is {(x, yψ)}
        for rho in graphs_from(s, &u)?.iter().take(60) {
            for psi in homomorphisms(rho.cod(), r) {
                let got = rho.compose(&RelationalMorphism::from_morphism(&psi))?;
                let expect: BTreeSet<(usize, usize)> =
                    rho.pairs().into_iter().map(|(x, y)| (x, psi.apply(y))).collect();
                t.check(got.pairs() == expect.into_iter().collect::<Vec<_>>(), || {
                    format!("post {:?} {:?}", rho.pairs(), psi.map())
                });
            }
        }
    }
    Ok(())
}

/// Surjections used for the lift axiom: congruence quotients and the
/// surjective morphisms within the universe.
fn surjections(u: &[Semigroup]) -> Result<Vec<Morphism>> {
    let mut out = Vec::new();
    for s in u {
        for c in congruences(s)? {
            out.push(c.projection);
        }
    }
    for (s, r) in pairs_of(u) {
        if r.order() <= s.order() {
            out.extend(homomorphisms(s, r).into_iter().filter(Morphism::is_surjective));
        }
    }
    Ok(out)
}

fn check_axioms<F>(t: &mut Tally, order: usize, label: &str, eval: F) -> Result<()>
where
    F: Fn(&Semigroup) -> Result<Vec<Subset>>,
{
    let u = universe(order)?;
    for (s, r) in pairs_of(&u) {
        let (ls, lr) = (eval(s)?, eval(r)?);
        for phi in homomorphisms(s, r) {
            for &x in &ls {
                let img = phi.image(x);
                t.check(lr.iter().any(|y| img.is_subset(*y)), || {
                    format!("{label}: push {x:?} along {:?} from {}", phi.map(), show(s))
                });
            }
        }
    }
    for phi in surjections(&u)? {
        let (ls, lr) = (eval(phi.dom())?, eval(phi.cod())?);
        for &y in &lr {
            t.check(ls.iter().any(|&x| phi.image(x) == y), || {
                format!("{label}: lift {y:?} along {:?} from {}", phi.map(), show(phi.dom()))
            });
        }
    }
    Ok(())
}

fn modulus_axioms(t: &mut Tally, order: usize) -> Result<()> {
    for m in builtin_moduli() {
        check_axioms(t, order, &m.to_string(), |s| eval_modulus(&m, s))?;
    }
    Ok(())
}

fn contexts() -> Vec<Context> {
    let mut v: Vec<Context> = BuiltinContext::ALL.iter().map(|&b| b.into()).collect();
    v.extend(builtin_moduli().into_iter().map(|m| Context::FromModulus(Box::new(m))));
    v
}

fn context_axioms(t: &mut Tally, order: usize) -> Result<()> {
    for c in contexts() {
        let label = c.to_string();
        check_axioms(t, order, &label, |s| {
            let v = eval_context(&c, s)?;
            Ok(v)
        })?;
        for s in universe(order)? {
            let ok = eval_context(&c, &s)?.iter().all(|&x| s.is_product_closed(x));
            t.check(ok, || format!("{label}: non-subsemigroup on {}", show(&s)));
        }
    }
    Ok(())
}

fn points(t: &mut Tally, order: usize) -> Result<()> {
    for s in broad_universe(order)? {
        for m in builtin_moduli() {
            let pv = wired(&m);
            t.check(points_member(&m, &s)? == pv_member(pv, &s), || {
                format!("{m} vs {pv} on {}", show(&s))
            });
        }
    }
    Ok(())
}

fn fix(t: &mut Tally, order: usize) -> Result<()> {
    let mut max_levels = 0;
    for s in broad_universe(order)? {
        for m in builtin_moduli() {
            let p = points_member(&m, &s)?;
            let f = functor_value(&m, &s)?.is_singletons();
            let c = monad_completion(&m, &s)?;
            max_levels = max_levels.max(c.levels);
            t.check(p == f && f == c.value.is_singletons(), || {
                format!("{m} on {}: points {p}, functor {f}", show(&s))
            });
        }
    }
    t.notes.push(format!("largest completion level count: {max_levels}"));
    Ok(())
}

fn join_preserving(t: &mut Tally, order: usize) -> Result<()> {
    let ms = builtin_moduli();
    for s in universe(order)? {
        let values: Vec<SComplex> = ms.iter().map(|m| functor_value(m, &s)).collect::<Result<_>>()?;
        for (i, a) in ms.iter().enumerate() {
            for (j, b) in ms.iter().enumerate().skip(i + 1) {
                let joined = functor_value(&Modulus::join(a.clone(), b.clone()), &s)?;
                t.check(joined == values[i].join(&values[j])?, || {
                    format!("join({a},{b}) on {}", show(&s))
                });
            }
        }
    }
    Ok(())
}

fn completion_closure(t: &mut Tally, order: usize) -> Result<()> {
    let ms = builtin_moduli();
    for s in universe(order)? {
        let done: Vec<SComplex> = ms
            .iter()
            .map(|m| monad_completion(m, &s).map(|c| c.value))
            .collect::<Result<_>>()?;
        for (i, m) in ms.iter().enumerate() {
            t.check(functor_value(m, &s)?.is_subcomplex_of(&done[i]), || {
                format!("{m} on {}: functor value escapes completion", show(&s))
            });
            t.check(completion_step(m, &done[i])? == done[i], || {
                format!("{m} on {}: completion not stable", show(&s))
            });
            // Λ ≤ join(Λ, Λ') pointwise
            for (j, other) in ms.iter().enumerate().skip(i + 1) {
                let both = monad_completion(&Modulus::join(m.clone(), other.clone()), &s)?.value;
                t.check(done[i].is_subcomplex_of(&both) && done[j].is_subcomplex_of(&both), || {
                    format!("join({m},{other}) on {}: not monotone", show(&s))
                });
            }
        }
    }
    Ok(())
}

fn monad(t: &mut Tally, order: usize) -> Result<()> {
    let mut max_levels = 0;
    let mut histogram: HashMap<usize, usize> = HashMap::new();
    for s in universe(order)? {
        for m in builtin_moduli() {
            let c = monad_completion(&m, &s)?;
            max_levels = max_levels.max(c.levels);
            *histogram.entry(c.levels).or_default() += 1;
            let (q, faces) = c.value.face_semigroup()?;
            let over_q = functor_value(&m, &q);
            match over_q {
                Ok(cq) => {
                    for a in cq.max_faces() {
                        let union = a.iter().fold(Subset::EMPTY, |acc, i| acc.union(faces[i]));
                        t.check(c.value.contains(union), || {
                            format!("{m} on {}: union of {a:?} missing", show(&s))
                        });
                    }
                }
                // face semigroups beyond the dense cap: use the sparse step
                Err(_) => t.check(completion_step(&m, &c.value)? == c.value, || {
                    format!("{m} on {}: step moves the completion", show(&s))
                }),
            }
        }
    }
    let mut h: Vec<_> = histogram.into_iter().collect();
    h.sort();
    t.notes.push(format!("largest level count: {max_levels}; histogram {h:?}"));
    Ok(())
}

fn points_pseudovariety(t: &mut Tally, order: usize) -> Result<()> {
    let u = universe(order)?;
    for m in builtin_moduli() {
        let pts: Vec<&Semigroup> = u
            .iter()
            .filter(|s| points_member(&m, s).unwrap_or(false))
            .collect();
        for s in &pts {
            for x in s.elements().nonempty_subsets().filter(|&x| s.is_product_closed(x)) {
                let (sub, _) = s.induced(x)?;
                t.check(points_member(&m, &sub)?, || format!("{m}: subsemigroup of {}", show(s)));
            }
            for c in congruences(s)? {
                t.check(points_member(&m, &c.quotient)?, || format!("{m}: quotient of {}", show(s)));
            }
        }
        for a in &pts {
            for b in &pts {
                let p = a.direct_product(b)?;
                t.check(points_member(&m, &p)?, || format!("{m}: {} x {}", show(a), show(b)));
            }
        }
    }
    Ok(())
}

fn restriction(t: &mut Tally, order: usize) -> Result<()> {
    for s in universe(order)? {
        for m in builtin_moduli() {
            let base = eval_modulus(&m, &s)?;
            for b in BuiltinContext::ALL {
                let c: Context = b.into();
                let r = m.clone().restrict(c.clone());
                let refined = eval_modulus(&r, &s)?
                    .iter()
                    .all(|x| base.iter().any(|y| x.is_subset(*y)));
                t.check(refined, || format!("{r} on {} does not refine", show(&s)));
                let pv = wired(&m);
                t.check(points_member(&r, &s)? == ctx_operator_member(&c, pv, &s)?, || {
                    format!("{r} on {}: points vs operator", show(&s))
                });
            }
        }
    }
    Ok(())
}

fn lower_soundness(t: &mut Tally, order: usize) -> Result<()> {
    let u = universe(order)?;
    for s in &u {
        let gens = s.greedy_generators();
        let per_codomain: Vec<Vec<SComplex>> = u
            .iter()
            .map(|r| {
                minimal_graphs(s, r, gens)?
                    .map(|g| g.nerve())
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        for m in builtin_moduli() {
            let f = functor_value(&m, s)?;
            let c = monad_completion(&m, s)?.value;
            for (r, nerves) in u.iter().zip(&per_codomain) {
                if !points_member(&m, r)? {
                    continue;
                }
                for n in nerves {
                    t.check(f.is_subcomplex_of(n) && c.is_subcomplex_of(n), || {
                        format!("{m}: {} into {}", show(s), show(r))
                    });
                }
            }
        }
    }
    Ok(())
}

const ORACLE_PVS: [Pseudovariety; 3] = [
    Pseudovariety::Trivial,
    Pseudovariety::Aperiodic,
    Pseudovariety::JTrivial,
];

fn oracle_monotone(t: &mut Tally, order: usize) -> Result<()> {
    for s in universe(order)? {
        for pv in ORACLE_PVS {
            let values: Vec<SComplex> = (1..=3)
                .map(|k| oracle_pointlikes(&s, pv, k).map(|r| r.value))
                .collect::<Result<_>>()?;
            for w in values.windows(2) {
                t.check(w[1].is_subcomplex_of(&w[0]), || format!("{pv} on {}", show(&s)));
            }
        }
    }
    Ok(())
}

fn fixed_points(t: &mut Tally, order: usize) -> Result<()> {
    for s in universe(order)? {
        for pv in Pseudovariety::SIMPLE {
            if pv_member(pv, &s) {
                let v = oracle_pointlikes(&s, pv, 3)?.value;
                t.check(v.is_singletons(), || format!("{pv} on {}", show(&s)));
            }
        }
    }
    Ok(())
}

type OracleCache = HashMap<(Semigroup, Pseudovariety), SComplex>;

fn cached_oracle(cache: &mut OracleCache, s: &Semigroup, pv: Pseudovariety) -> Result<SComplex> {
    let key = (s.clone(), pv);
    if let Some(v) = cache.get(&key) {
        return Ok(v.clone());
    }
    let v = oracle_pointlikes(s, pv, 3)?.value;
    cache.insert(key, v.clone());
    Ok(v)
}

fn lower_upper(t: &mut Tally, order: usize) -> Result<()> {
    let mut cache = OracleCache::new();
    for s in broad_universe(order)? {
        for m in builtin_moduli() {
            let lower = monad_completion(&m, &s)?.value;
            let upper = cached_oracle(&mut cache, &s, wired(&m))?;
            t.check(lower.is_subcomplex_of(&upper), || format!("{m} on {}", show(&s)));
        }
    }
    Ok(())
}

/// Pseudovarieties paired with a modulus whose points they are.
pub const MATCHED: [(Pseudovariety, BuiltinModulus); 4] = [
    (Pseudovariety::Aperiodic, BuiltinModulus::Grp),
    (Pseudovariety::RTrivial, BuiltinModulus::RCl),
    (Pseudovariety::LTrivial, BuiltinModulus::LCl),
    (Pseudovariety::JTrivial, BuiltinModulus::JCl),
];

fn known_values(t: &mut Tally, order: usize) -> Result<()> {
    let grp = Modulus::Builtin(BuiltinModulus::Grp);
    for n in 2..=3 {
        let g = Semigroup::cyclic_group(n);
        let c = certify_exact(&g, Pseudovariety::Aperiodic, &grp, 3)?;
        t.check(c.exact && c.lower.is_full(), || format!("Z{n}"));
    }
    for (pv, b) in MATCHED {
        let m = Modulus::Builtin(b);
        for s in members_up_to(pv, order)? {
            let c = certify_exact(&s, pv, &m, 3)?;
            t.check(c.exact && c.upper.value.is_singletons(), || format!("{pv} on {}", show(&s)));
        }
    }
    Ok(())
}

fn squeeze_stable(t: &mut Tally, order: usize) -> Result<()> {
    for s in universe(order)? {
        for (pv, b) in MATCHED {
            let m = Modulus::Builtin(b);
            let small = certify_exact(&s, pv, &m, 2)?;
            if small.exact {
                let large = certify_exact(&s, pv, &m, 3)?;
                t.check(large.exact && large.lower == small.lower, || {
                    format!("{pv} on {}", show(&s))
                });
            }
        }
    }
    Ok(())
}

fn iso_codomains(t: &mut Tally, order: usize) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let u = universe(order)?;
    for s in &u {
        let gens = s.greedy_generators();
        for r in &u {
            let mut perm: Vec<usize> = (0..r.order()).collect();
            perm.shuffle(&mut rng);
            let copy = r.permuted(&perm);
            let family = |target: &Semigroup| -> Result<BTreeSet<Vec<Subset>>> {
                minimal_graphs(s, target, gens)?
                    .map(|g| g.nerve().map(|n| n.faces().iter().collect()))
                    .collect()
            };
            t.check(family(r)? == family(&copy)?, || format!("{} into {}", show(s), show(r)));
        }
    }
    Ok(())
}

fn reversal_pltc(t: &mut Tally, order: usize) -> Result<()> {
    use Pseudovariety::*;
    for s in broad_universe(order)? {
        for pv in [Aperiodic, JTrivial, RTrivial, LTrivial] {
            t.check(reversal_transfer_check(&s, pv, 3)?, || format!("{pv} on {}", show(&s)));
        }
    }
    Ok(())
}

/// Context and modulus pairs checked by the fptc suite.
pub fn fptc_pairs() -> [(Context, Modulus); 3] {
    [
        (BuiltinContext::Grp.into(), BuiltinModulus::Grp.into()),
        (BuiltinContext::Loc.into(), BuiltinModulus::JCl.into()),
        (BuiltinContext::EGen.into(), BuiltinModulus::Grp.into()),
    ]
}

fn fptc(t: &mut Tally, order: usize) -> Result<()> {
    for (c, m) in fptc_pairs() {
        let r = fptc_check(&c, &m, order)?;
        t.cases += r.checked - 1;
        t.check(r.counterexamples.is_empty(), || {
            format!("({c}, {m}): {:?}", r.counterexamples)
        });
        t.notes.push(format!(
            "({c}, {m}): no counterexample at order <= {order} among {} semigroups",
            r.checked
        ));
    }
    Ok(())
}
