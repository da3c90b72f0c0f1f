use crate::error::{Error, Result};
use crate::semigroup::Semigroup;
use crate::subset::Subset;

/// A semigroup homomorphism, stored as the image of each domain element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    dom: Semigroup,
    cod: Semigroup,
    map: Vec<usize>,
}

impl Morphism {
    pub fn new(dom: Semigroup, cod: Semigroup, map: Vec<usize>) -> Result<Self> {
        if map.len() != dom.order() {
            return Err(Error::InvalidTable(format!(
                "map has {} entries for a domain of order {}",
                map.len(),
                dom.order()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&y| y >= cod.order()) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                order: cod.order(),
            });
        }
        for i in 0..dom.order() {
            for j in 0..dom.order() {
                if map[dom.mul(i, j)] != cod.mul(map[i], map[j]) {
                    return Err(Error::NotHomomorphism(i, j));
                }
            }
        }
        Ok(Morphism { dom, cod, map })
    }

    pub(crate) fn new_unchecked(dom: Semigroup, cod: Semigroup, map: Vec<usize>) -> Self {
        debug_assert!(Morphism::new(dom.clone(), cod.clone(), map.clone()).is_ok());
        Morphism { dom, cod, map }
    }

    pub fn identity(s: &Semigroup) -> Self {
        Morphism {
            dom: s.clone(),
            cod: s.clone(),
            map: (0..s.order()).collect(),
        }
    }

    /// The unique map onto the trivial semigroup.
    pub fn terminal(s: &Semigroup) -> Self {
        Morphism {
            dom: s.clone(),
            cod: Semigroup::trivial(),
            map: vec![0; s.order()],
        }
    }

    /// Projection of `s × t` onto its first factor.
    pub fn first_projection(s: &Semigroup, t: &Semigroup) -> Result<Self> {
        let p = s.direct_product(t)?;
        let map = (0..p.order()).map(|k| k / t.order()).collect();
        Ok(Morphism::new_unchecked(p, s.clone(), map))
    }

    /// Projection of `s × t` onto its second factor.
    pub fn second_projection(s: &Semigroup, t: &Semigroup) -> Result<Self> {
        let p = s.direct_product(t)?;
        let map = (0..p.order()).map(|k| k % t.order()).collect();
        Ok(Morphism::new_unchecked(p, t.clone(), map))
    }

    pub fn dom(&self) -> &Semigroup {
        &self.dom
    }

    pub fn cod(&self) -> &Semigroup {
        &self.cod
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `(X)φ` for a subset of the domain.
    pub fn image(&self, x: Subset) -> Subset {
        x.map(&self.map)
    }

    pub fn is_injective(&self) -> bool {
        let img = Subset::EMPTY;
        self.map.iter().fold(img, |acc, &y| acc.with(y)).len() == self.map.len()
    }

    pub fn is_surjective(&self) -> bool {
        self.image(self.dom.elements()) == self.cod.elements()
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Morphism) -> Result<Morphism> {
        if self.cod != next.dom {
            return Err(Error::CodDomMismatch);
        }
        let map = self.map.iter().map(|&y| next.map[y]).collect();
        Ok(Morphism {
            dom: self.dom.clone(),
            cod: next.cod.clone(),
            map,
        })
    }
}

/// All homomorphisms `s → t`, in lexicographic order of their maps.
pub fn homomorphisms(s: &Semigroup, t: &Semigroup) -> Vec<Morphism> {
    if s.is_empty() {
        return vec![Morphism {
            dom: s.clone(),
            cod: t.clone(),
            map: vec![],
        }];
    }
    if t.is_empty() {
        return vec![];
    }
    let gens = s.greedy_generators().to_vec();
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    loop {
        if let Some(map) = extend_from_generators(s, t, &gens, &choice) {
            out.push(Morphism {
                dom: s.clone(),
                cod: t.clone(),
                map,
            });
        }
        // odometer over |t|^|gens|
        let mut k = 0;
        loop {
            if k == choice.len() {
                out.sort_by(|a, b| a.map.cmp(&b.map));
                return out;
            }
            choice[k] += 1;
            if choice[k] < t.order() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

fn extend_from_generators(
    s: &Semigroup,
    t: &Semigroup,
    gens: &[usize],
    images: &[usize],
) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; s.order()];
    let mut queue = Vec::new();
    for (&g, &v) in gens.iter().zip(images) {
        map[g] = v;
        queue.push(g);
    }
    while let Some(x) = queue.pop() {
        for (&g, &v) in gens.iter().zip(images) {
            let p = s.mul(x, g);
            let img = t.mul(map[x], v);
            if map[p] == usize::MAX {
                map[p] = img;
                queue.push(p);
            } else if map[p] != img {
                return None;
            }
        }
    }
    for i in 0..s.order() {
        for j in 0..s.order() {
            if map[s.mul(i, j)] != t.mul(map[i], map[j]) {
                return None;
            }
        }
    }
    Some(map)
}
