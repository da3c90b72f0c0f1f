//! Relational morphisms `S ⇸ T`, stored by their graphs.
//!
//! The graph `Γ ⊆ S × T` is kept as the image set `(s)ρ` of every domain
//! element. It must be a subsemigroup of `S × T` whose projection onto `S`
//! is onto.

use crate::complex::{FaceSet, SComplex, MAX_COMPLEX_ORDER};
use crate::error::{Error, Result};
use crate::morphism::Morphism;
use crate::semigroup::Semigroup;
use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RelationalMorphism {
    dom: Semigroup,
    cod: Semigroup,
    images: Vec<Subset>,
}

impl RelationalMorphism {
    /// Validates an explicit list of pairs: indices in range, product
    /// closed, every domain element related to something.
    pub fn new<I>(dom: Semigroup, cod: Semigroup, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let images = collect_pairs(&dom, &cod, pairs)?;
        let rel = RelationalMorphism { dom, cod, images };
        if let Some(bad) = rel.first_unclosed_product() {
            return Err(bad);
        }
        rel.check_onto_domain()?;
        Ok(rel)
    }

    /// The relational morphism whose graph is generated by `pairs`.
    pub fn generated<I>(dom: Semigroup, cod: Semigroup, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let seeds = collect_pairs(&dom, &cod, pairs)?;
        let images = close_graph(&dom, &cod, &seeds);
        let rel = RelationalMorphism { dom, cod, images };
        rel.check_onto_domain()?;
        Ok(rel)
    }

    /// The graph of a homomorphism.
    pub fn from_morphism(phi: &Morphism) -> Self {
        RelationalMorphism {
            dom: phi.dom().clone(),
            cod: phi.cod().clone(),
            images: phi.map().iter().map(|&t| Subset::singleton(t)).collect(),
        }
    }

    /// `S ⇸ 1` relating everything to the single point.
    pub fn terminal(s: &Semigroup) -> Self {
        RelationalMorphism {
            dom: s.clone(),
            cod: Semigroup::trivial(),
            images: vec![Subset::singleton(0); s.order()],
        }
    }

    pub fn dom(&self) -> &Semigroup {
        &self.dom
    }

    pub fn cod(&self) -> &Semigroup {
        &self.cod
    }

    /// `(s)ρ` for every domain element.
    pub fn images(&self) -> &[Subset] {
        &self.images
    }

    /// Graph pairs in lexicographic order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.images
            .iter()
            .enumerate()
            .flat_map(|(s, img)| img.iter().map(move |t| (s, t)))
            .collect()
    }

    pub fn graph_size(&self) -> usize {
        self.images.iter().map(|i| i.len()).sum()
    }

    pub fn relates(&self, s: usize, t: usize) -> bool {
        self.images.get(s).is_some_and(|i| i.contains(t))
    }

    /// `(t)ρ⁻¹`.
    pub fn fiber(&self, t: usize) -> Subset {
        self.images
            .iter()
            .enumerate()
            .filter(|(_, img)| img.contains(t))
            .map(|(s, _)| s)
            .collect()
    }

    /// `Img(ρ)`.
    pub fn image(&self) -> Subset {
        self.images.iter().fold(Subset::EMPTY, |a, &b| a.union(b))
    }

    fn first_unclosed_product(&self) -> Option<Error> {
        for (s, &is) in self.images.iter().enumerate() {
            for (s2, &is2) in self.images.iter().enumerate() {
                let target = self.images[self.dom.mul(s, s2)];
                for t in is.iter() {
                    for t2 in is2.iter() {
                        if !target.contains(self.cod.mul(t, t2)) {
                            return Some(Error::NotProductClosed(s, t, s2, t2));
                        }
                    }
                }
            }
        }
        None
    }

    fn check_onto_domain(&self) -> Result<()> {
        match self.images.iter().position(|i| i.is_empty()) {
            Some(s) => Err(Error::NotSurjectiveOntoDomain(s)),
            None => Ok(()),
        }
    }

    /// `self` followed by `next`: `(s, u)` whenever `(s, t)` and `(t, u)`.
    pub fn compose(&self, next: &RelationalMorphism) -> Result<RelationalMorphism> {
        if self.cod != next.dom {
            return Err(Error::CodDomMismatch);
        }
        let images = self
            .images
            .iter()
            .map(|img| img.iter().fold(Subset::EMPTY, |acc, t| acc.union(next.images[t])))
            .collect();
        Ok(RelationalMorphism {
            dom: self.dom.clone(),
            cod: next.cod.clone(),
            images,
        })
    }

    /// `S ⇸ T1 × T2` relating `s` to `(t1, t2)` when `s ρ1 t1` and `s ρ2 t2`.
    pub fn direct_sum(&self, other: &RelationalMorphism) -> Result<RelationalMorphism> {
        if self.dom != other.dom {
            return Err(Error::DomMismatch);
        }
        let cod = self.cod.direct_product(&other.cod)?;
        let m = other.cod.order();
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(&a, &b)| pair_set(a, b, m))
            .collect();
        Ok(RelationalMorphism {
            dom: self.dom.clone(),
            cod,
            images,
        })
    }

    /// `ρ1 × ρ2 : S1 × S2 ⇸ T1 × T2`.
    pub fn product(&self, other: &RelationalMorphism) -> Result<RelationalMorphism> {
        let dom = self.dom.direct_product(&other.dom)?;
        let cod = self.cod.direct_product(&other.cod)?;
        let (n2, m2) = (other.dom.order(), other.cod.order());
        let images = (0..dom.order())
            .map(|z| pair_set(self.images[z / n2], other.images[z % n2], m2))
            .collect();
        Ok(RelationalMorphism { dom, cod, images })
    }

    /// Checks that `(α, β)` sends the graph of `self` into that of `target`.
    pub fn check_morphism_to(
        &self,
        alpha: &Morphism,
        beta: &Morphism,
        target: &RelationalMorphism,
    ) -> Result<()> {
        if alpha.dom() != &self.dom
            || beta.dom() != &self.cod
            || alpha.cod() != &target.dom
            || beta.cod() != &target.cod
        {
            return Err(Error::BaseMismatch);
        }
        for (x, y) in self.pairs() {
            if !target.relates(alpha.apply(x), beta.apply(y)) {
                return Err(Error::MorphismConditionViolated(x, y));
            }
        }
        Ok(())
    }

    /// Reversal: same pairs between the reversed semigroups.
    pub fn reverse(&self) -> RelationalMorphism {
        RelationalMorphism {
            dom: self.dom.reverse(),
            cod: self.cod.reverse(),
            images: self.images.clone(),
        }
    }

    /// A division: distinct domain elements never share an image point.
    pub fn is_division(&self) -> bool {
        let mut seen = Subset::EMPTY;
        for &img in &self.images {
            if !img.intersection(seen).is_empty() {
                return false;
            }
            seen = seen.union(img);
        }
        true
    }

    /// Downward closure of the fibers `(t)ρ⁻¹` over `t ∈ Img(ρ)`.
    ///
    /// Debug builds also compute the family of sets whose image sets have a
    /// common point and assert the two agree.
    pub fn nerve(&self) -> Result<SComplex> {
        if self.dom.order() > MAX_COMPLEX_ORDER || self.dom.is_empty() {
            // let the complex constructor report the cap
            return SComplex::singletons(&self.dom);
        }
        let mut faces = FaceSet::new(self.dom.order());
        for t in self.image().iter() {
            faces.insert(self.fiber(t));
        }
        faces.downward_close();
        debug_assert_eq!(&faces, self.nerve_via_intersections()?.faces());
        SComplex::from_faces(&self.dom, faces)
    }

    /// The nerve as `{X : ⋂_{x ∈ X} (x)ρ ≠ ∅}`.
    pub fn nerve_via_intersections(&self) -> Result<SComplex> {
        if self.dom.order() > MAX_COMPLEX_ORDER || self.dom.is_empty() {
            return SComplex::singletons(&self.dom);
        }
        let mut faces = FaceSet::new(self.dom.order());
        for x in self.dom.elements().nonempty_subsets() {
            let common = x
                .iter()
                .fold(self.cod.elements(), |acc, s| acc.intersection(self.images[s]));
            if !common.is_empty() {
                faces.insert(x);
            }
        }
        SComplex::from_faces(&self.dom, faces)
    }
}

/// `φ` followed by `ρ`: the change of base of `ρ` along `φ`.
pub fn change_of_base(phi: &Morphism, rho: &RelationalMorphism) -> Result<RelationalMorphism> {
    RelationalMorphism::from_morphism(phi).compose(rho)
}

/// Pullback in the category of relational morphisms.
#[derive(Debug, Clone)]
pub struct RelPullback {
    pub rel: RelationalMorphism,
    /// `(s1, s2)` behind each element of the domain fiber.
    pub dom_pairs: Vec<(usize, usize)>,
    /// `(t1, t2)` behind each element of the codomain fiber.
    pub cod_pairs: Vec<(usize, usize)>,
}

/// Morphism data `(α, β)` from a relational morphism into a common target.
#[derive(Debug, Clone, Copy)]
pub struct Leg<'a> {
    pub rel: &'a RelationalMorphism,
    pub alpha: &'a Morphism,
    pub beta: &'a Morphism,
}

/// Fiber product of two legs over `target`: the product graph cut down to
/// (domain fiber) × (codomain fiber).
pub fn pullback(first: Leg<'_>, second: Leg<'_>, target: &RelationalMorphism) -> Result<RelPullback> {
    first.rel.check_morphism_to(first.alpha, first.beta, target)?;
    second.rel.check_morphism_to(second.alpha, second.beta, target)?;
    let (r1, r2) = (first.rel, second.rel);
    let dom_prod = r1.dom.direct_product(&r2.dom)?;
    let cod_prod = r1.cod.direct_product(&r2.cod)?;
    let (n2, m2) = (r2.dom.order(), r2.cod.order());
    let dom_fiber: Subset = (0..dom_prod.order())
        .filter(|&z| first.alpha.apply(z / n2) == second.alpha.apply(z % n2))
        .collect();
    let cod_fiber: Subset = (0..cod_prod.order())
        .filter(|&z| first.beta.apply(z / m2) == second.beta.apply(z % m2))
        .collect();
    let (dom, dom_embed) = dom_prod.induced(dom_fiber)?;
    let (cod, cod_embed) = cod_prod.induced(cod_fiber)?;
    let mut cod_index = vec![usize::MAX; cod_prod.order()];
    for (k, &z) in cod_embed.iter().enumerate() {
        cod_index[z] = k;
    }
    let images: Vec<Subset> = dom_embed
        .iter()
        .map(|&z| {
            pair_set(r1.images[z / n2], r2.images[z % n2], m2)
                .intersection(cod_fiber)
                .map(&cod_index)
        })
        .collect();
    let rel = RelationalMorphism { dom, cod, images };
    rel.check_onto_domain()?;
    debug_assert!(rel.first_unclosed_product().is_none());
    Ok(RelPullback {
        rel,
        dom_pairs: dom_embed.iter().map(|&z| (z / n2, z % n2)).collect(),
        cod_pairs: cod_embed.iter().map(|&z| (z / m2, z % m2)).collect(),
    })
}

/// Relational morphisms `S ⇸ T` generated by one pair per generator.
///
/// Every relational morphism `S ⇸ T` contains one of these graphs, so their
/// nerves are cofinal from below among all nerves.
pub fn minimal_graphs(s: &Semigroup, t: &Semigroup, gens: Subset) -> Result<MinimalGraphs> {
    if s.generate(gens) != s.elements() || gens.iter().any(|g| g >= s.order()) {
        return Err(Error::NotGenerating);
    }
    let gens = gens.to_vec();
    let exhausted = t.is_empty() && !gens.is_empty();
    Ok(MinimalGraphs {
        dom: s.clone(),
        cod: t.clone(),
        choice: vec![0; gens.len()],
        gens,
        done: exhausted,
    })
}

/// Iterator over [`minimal_graphs`]; the choice of images runs as an
/// odometer with the last generator varying fastest.
pub struct MinimalGraphs {
    dom: Semigroup,
    cod: Semigroup,
    gens: Vec<usize>,
    choice: Vec<usize>,
    done: bool,
}

impl MinimalGraphs {
    /// `|T|^|gens|`.
    pub fn total(&self) -> usize {
        self.cod.order().pow(self.gens.len() as u32)
    }
}

impl Iterator for MinimalGraphs {
    type Item = RelationalMorphism;

    fn next(&mut self) -> Option<RelationalMorphism> {
        if self.done {
            return None;
        }
        let seeds: Vec<Subset> = {
            let mut v = vec![Subset::EMPTY; self.dom.order()];
            for (&g, &c) in self.gens.iter().zip(&self.choice) {
                v[g].insert(c);
            }
            v
        };
        let images = close_graph(&self.dom, &self.cod, &seeds);
        let mut k = self.choice.len();
        loop {
            if k == 0 {
                self.done = true;
                break;
            }
            k -= 1;
            self.choice[k] += 1;
            if self.choice[k] < self.cod.order() {
                break;
            }
            self.choice[k] = 0;
        }
        Some(RelationalMorphism {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            images,
        })
    }
}

/// Every relational morphism `S ⇸ T`, by brute force over subsets of
/// `S × T`. Needs `|S|·|T| ≤ 20`.
pub fn all_relational_morphisms(s: &Semigroup, t: &Semigroup) -> Result<Vec<RelationalMorphism>> {
    const CAP: usize = 20;
    let (n, m) = (s.order(), t.order());
    if n * m > CAP {
        return Err(Error::SizeCap {
            what: "graph search space |S|·|T|",
            got: n * m,
            cap: CAP,
        });
    }
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << (n * m)) {
        let images: Vec<Subset> = (0..n)
            .map(|x| Subset::from_bits((mask >> (x * m)) & ((1u64 << m) - 1)))
            .collect();
        let rel = RelationalMorphism {
            dom: s.clone(),
            cod: t.clone(),
            images,
        };
        if rel.check_onto_domain().is_ok() && rel.first_unclosed_product().is_none() {
            out.push(rel);
        }
    }
    Ok(out)
}

fn collect_pairs<I>(dom: &Semigroup, cod: &Semigroup, pairs: I) -> Result<Vec<Subset>>
where
    I: IntoIterator<Item = (usize, usize)>,
{
    let mut images = vec![Subset::EMPTY; dom.order()];
    for (s, t) in pairs {
        if s >= dom.order() {
            return Err(Error::IndexOutOfRange {
                index: s,
                order: dom.order(),
            });
        }
        if t >= cod.order() {
            return Err(Error::IndexOutOfRange {
                index: t,
                order: cod.order(),
            });
        }
        images[s].insert(t);
    }
    Ok(images)
}

/// Subsemigroup of `S × T` generated by the seed pairs.
fn close_graph(dom: &Semigroup, cod: &Semigroup, seeds: &[Subset]) -> Vec<Subset> {
    let gens: Vec<(usize, usize)> = seeds
        .iter()
        .enumerate()
        .flat_map(|(s, img)| img.iter().map(move |t| (s, t)))
        .collect();
    let mut images = seeds.to_vec();
    let mut queue = gens.clone();
    while let Some((s, t)) = queue.pop() {
        for &(g, h) in &gens {
            let (a, b) = (dom.mul(s, g), cod.mul(t, h));
            if !images[a].contains(b) {
                images[a].insert(b);
                queue.push((a, b));
            }
        }
    }
    images
}

/// `A × B` encoded as `a·m + b`.
fn pair_set(a: Subset, b: Subset, m: usize) -> Subset {
    let mut out = Subset::EMPTY;
    for x in a.iter() {
        for y in b.iter() {
            out.insert(x * m + y);
        }
    }
    out
}
