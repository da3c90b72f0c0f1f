//! Semigroup complexes: families of nonempty subsets containing every
//! singleton, closed under nonempty subsets and under setwise product.
//!
//! A complex over a base of order `n` keeps its faces as a dense bit
//! vector indexed by subset mask (`2^n` bits), so `n` is capped at
//! [`MAX_COMPLEX_ORDER`].

use std::fmt;

use crate::error::{Error, Result};
use crate::morphism::Morphism;
use crate::semigroup::Semigroup;
use crate::subset::Subset;

/// Largest base order for complex-level operations.
pub const MAX_COMPLEX_ORDER: usize = 16;

/// A family of subsets of `0..order`, one bit per mask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FaceSet {
    order: usize,
    bits: Vec<u64>,
}

impl FaceSet {
    pub fn new(order: usize) -> Self {
        assert!(order <= MAX_COMPLEX_ORDER);
        let words = (1usize << order).div_ceil(64);
        FaceSet {
            order,
            bits: vec![0; words],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn contains(&self, x: Subset) -> bool {
        let m = x.bits();
        if m >> self.order != 0 {
            return false;
        }
        let m = m as usize;
        self.bits[m / 64] >> (m % 64) & 1 == 1
    }

    /// Returns true if `x` was not present.
    #[inline]
    pub fn insert(&mut self, x: Subset) -> bool {
        let m = x.bits();
        assert!(m >> self.order == 0, "subset outside the base");
        let m = m as usize;
        let word = &mut self.bits[m / 64];
        let bit = 1u64 << (m % 64);
        let fresh = *word & bit == 0;
        *word |= bit;
        fresh
    }

    pub fn remove(&mut self, x: Subset) {
        let m = x.bits() as usize;
        if x.bits() >> self.order == 0 {
            self.bits[m / 64] &= !(1u64 << (m % 64));
        }
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// Members in increasing mask order.
    pub fn iter(&self) -> impl Iterator<Item = Subset> + '_ {
        self.bits.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as u64;
                    w &= w - 1;
                    Some(Subset::from_bits(k as u64 * 64 + b))
                }
            })
        })
    }

    pub fn is_subset(&self, other: &FaceSet) -> bool {
        self.order == other.order && self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &FaceSet) -> FaceSet {
        assert_eq!(self.order, other.order);
        FaceSet {
            order: self.order,
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn union(&self, other: &FaceSet) -> FaceSet {
        assert_eq!(self.order, other.order);
        FaceSet {
            order: self.order,
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a | b).collect(),
        }
    }

    /// Adds every nonempty subset of every member.
    pub fn downward_close(&mut self) {
        // masks of bit positions (within a word) whose index has bit i set
        const HIGH: [u64; 6] = [
            0xAAAA_AAAA_AAAA_AAAA,
            0xCCCC_CCCC_CCCC_CCCC,
            0xF0F0_F0F0_F0F0_F0F0,
            0xFF00_FF00_FF00_FF00,
            0xFFFF_0000_FFFF_0000,
            0xFFFF_FFFF_0000_0000,
        ];
        for i in 0..self.order {
            if i < 6 {
                let shift = 1u32 << i;
                for w in self.bits.iter_mut() {
                    *w |= (*w & HIGH[i]) >> shift;
                }
            } else {
                let stride = 1usize << (i - 6);
                for k in 0..self.bits.len() {
                    if k & stride != 0 {
                        let v = self.bits[k];
                        self.bits[k - stride] |= v;
                    }
                }
            }
        }
        self.bits[0] &= !1;
    }

    pub fn is_downward_closed(&self) -> bool {
        let mut c = self.clone();
        c.downward_close();
        c == *self
    }

    /// Members not strictly contained in another member.
    pub fn maximal(&self) -> Vec<Subset> {
        self.iter()
            .filter(|&x| {
                (0..self.order)
                    .filter(|&i| !x.contains(i))
                    .all(|i| !self.contains(x.with(i)))
            })
            .collect()
    }
}

impl fmt::Debug for FaceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// `X·Y` for nonempty `X`, `Y`.
pub fn setwise_product(s: &Semigroup, x: Subset, y: Subset) -> Result<Subset> {
    if x.is_empty() || y.is_empty() {
        return Err(Error::EmptyOperand);
    }
    Ok(s.product_set(x, y))
}

/// All nonempty subsets of members of `family`, in increasing mask order.
pub fn downward_close(order: usize, family: &[Subset]) -> Result<Vec<Subset>> {
    check_complex_order(order)?;
    let mut f = FaceSet::new(order);
    for &x in family {
        check_within(order, x)?;
        if !x.is_empty() {
            f.insert(x);
        }
    }
    f.downward_close();
    Ok(f.iter().collect())
}

fn check_complex_order(order: usize) -> Result<()> {
    if order == 0 {
        return Err(Error::EmptyBase);
    }
    if order > MAX_COMPLEX_ORDER {
        return Err(Error::SizeCap {
            what: "complex base order",
            got: order,
            cap: MAX_COMPLEX_ORDER,
        });
    }
    Ok(())
}

fn check_within(order: usize, x: Subset) -> Result<()> {
    match x.iter().find(|&i| i >= order) {
        Some(i) => Err(Error::IndexOutOfRange { index: i, order }),
        None => Ok(()),
    }
}

/// Lattice operations on complexes over a common base.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeOp {
    Meet,
    Join,
}

/// Direction of transport along a morphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Lower adjoint: generate the complex of images.
    Pushforward,
    /// Upper adjoint: all subsets whose image is a face.
    Pullback,
}

/// A semigroup complex over `base`.
#[derive(Clone)]
pub struct SComplex {
    base: Semigroup,
    faces: FaceSet,
    max_faces: Vec<Subset>,
}

impl PartialEq for SComplex {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && self.faces == other.faces
    }
}

impl Eq for SComplex {}

impl fmt::Debug for SComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SComplex")
            .field("base_order", &self.base.order())
            .field("max_faces", &self.max_faces)
            .finish()
    }
}

impl SComplex {
    fn from_closed(base: Semigroup, faces: FaceSet) -> Self {
        debug_assert!(is_complex(&base, &faces), "not a complex: {faces:?}");
        let max_faces = faces.maximal();
        SComplex {
            base,
            faces,
            max_faces,
        }
    }

    /// Wraps a face family after checking every complex invariant.
    pub fn from_faces(base: &Semigroup, faces: FaceSet) -> Result<Self> {
        check_complex_order(base.order())?;
        if faces.order() != base.order() {
            return Err(Error::BaseMismatch);
        }
        if !is_complex(base, &faces) {
            return Err(Error::InvalidTable("face family is not a complex".into()));
        }
        Ok(Self::from_closed(base.clone(), faces))
    }

    /// `sing(S)`, the least complex.
    pub fn singletons(base: &Semigroup) -> Result<Self> {
        check_complex_order(base.order())?;
        let mut f = FaceSet::new(base.order());
        for i in 0..base.order() {
            f.insert(Subset::singleton(i));
        }
        Ok(Self::from_closed(base.clone(), f))
    }

    /// `P(S)`, the greatest complex.
    pub fn full(base: &Semigroup) -> Result<Self> {
        check_complex_order(base.order())?;
        let mut f = FaceSet::new(base.order());
        f.insert(base.elements());
        f.downward_close();
        Ok(Self::from_closed(base.clone(), f))
    }

    /// The least complex containing `family`: the subsemigroup of `P(S)`
    /// generated by `family` and the singletons, closed downward.
    pub fn generate<I>(base: &Semigroup, family: I) -> Result<Self>
    where
        I: IntoIterator<Item = Subset>,
    {
        let n = base.order();
        check_complex_order(n)?;
        let mut seen = FaceSet::new(n);
        let mut gens = Vec::new();
        for x in family.into_iter().chain((0..n).map(Subset::singleton)) {
            if x.is_empty() {
                return Err(Error::EmptyOperand);
            }
            check_within(n, x)?;
            if seen.insert(x) {
                gens.push(x);
            }
        }
        // every element of the generated subsemigroup is a word in the
        // generators, so right multiplication by generators reaches it
        let mut queue = gens.clone();
        while let Some(x) = queue.pop() {
            for &g in &gens {
                let p = base.product_set(x, g);
                if seen.insert(p) {
                    queue.push(p);
                }
            }
        }
        seen.downward_close();
        debug_assert!(is_product_closed(base, &seen));
        Ok(Self::from_closed(base.clone(), seen))
    }

    pub fn base(&self) -> &Semigroup {
        &self.base
    }

    pub fn faces(&self) -> &FaceSet {
        &self.faces
    }

    /// The antichain of inclusion-maximal faces, in increasing mask order.
    pub fn max_faces(&self) -> &[Subset] {
        &self.max_faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn contains(&self, x: Subset) -> bool {
        self.faces.contains(x)
    }

    /// Face-wise containment; false for different bases.
    pub fn is_subcomplex_of(&self, other: &SComplex) -> bool {
        self.base == other.base && self.faces.is_subset(&other.faces)
    }

    pub fn is_singletons(&self) -> bool {
        self.max_faces.iter().all(|f| f.len() == 1)
    }

    pub fn is_full(&self) -> bool {
        self.contains(self.base.elements())
    }

    pub fn meet(&self, other: &SComplex) -> Result<SComplex> {
        self.lattice(LatticeOp::Meet, other)
    }

    pub fn join(&self, other: &SComplex) -> Result<SComplex> {
        self.lattice(LatticeOp::Join, other)
    }

    pub fn lattice(&self, op: LatticeOp, other: &SComplex) -> Result<SComplex> {
        if self.base != other.base {
            return Err(Error::BaseMismatch);
        }
        match op {
            LatticeOp::Meet => Ok(Self::from_closed(
                self.base.clone(),
                self.faces.intersection(&other.faces),
            )),
            LatticeOp::Join => SComplex::generate(
                &self.base,
                self.max_faces.iter().chain(&other.max_faces).copied(),
            ),
        }
    }

    /// The same face family over the reversed base.
    pub fn reversed(&self) -> SComplex {
        SComplex {
            base: self.base.reverse(),
            faces: self.faces.clone(),
            max_faces: self.max_faces.clone(),
        }
    }

    /// The face semigroup: faces in increasing mask order under setwise
    /// product. Returns the semigroup and the face behind each element.
    pub fn face_semigroup(&self) -> Result<(Semigroup, Vec<Subset>)> {
        let faces: Vec<Subset> = self.faces.iter().collect();
        let m = faces.len();
        if m > crate::semigroup::MAX_ORDER {
            return Err(Error::SizeCap {
                what: "face semigroup order",
                got: m,
                cap: crate::semigroup::MAX_ORDER,
            });
        }
        let mut index = std::collections::HashMap::with_capacity(m);
        for (k, &f) in faces.iter().enumerate() {
            index.insert(f, k);
        }
        let mut table = Vec::with_capacity(m * m);
        for &a in &faces {
            for &b in &faces {
                table.push(index[&self.base.product_set(a, b)]);
            }
        }
        Ok((Semigroup::from_flat_unchecked(m, table), faces))
    }
}

/// Checks the three complex axioms for a face family over `base`.
pub fn is_complex(base: &Semigroup, faces: &FaceSet) -> bool {
    faces.order() == base.order()
        && (0..base.order()).all(|i| faces.contains(Subset::singleton(i)))
        && !faces.contains(Subset::EMPTY)
        && faces.is_downward_closed()
        && is_product_closed(base, faces)
}

fn is_product_closed(base: &Semigroup, faces: &FaceSet) -> bool {
    // for a downward closed family it suffices to check maximal faces
    let max = faces.maximal();
    max.iter()
        .all(|&x| max.iter().all(|&y| faces.contains(base.product_set(x, y))))
}

/// Transport of a complex along a morphism.
pub fn transport(phi: &Morphism, dir: Direction, k: &SComplex) -> Result<SComplex> {
    match dir {
        Direction::Pushforward => {
            if k.base() != phi.dom() {
                return Err(Error::BaseMismatch);
            }
            SComplex::generate(phi.cod(), k.max_faces().iter().map(|&x| phi.image(x)))
        }
        Direction::Pullback => {
            if k.base() != phi.cod() {
                return Err(Error::BaseMismatch);
            }
            let dom = phi.dom();
            check_complex_order(dom.order())?;
            let mut f = FaceSet::new(dom.order());
            for x in dom.elements().nonempty_subsets() {
                if k.contains(phi.image(x)) {
                    f.insert(x);
                }
            }
            Ok(SComplex::from_closed(dom.clone(), f))
        }
    }
}

/// `K1 ⊗ K2` over `S1 × S2`: subsets whose projections are faces.
pub fn complex_product(k1: &SComplex, k2: &SComplex) -> Result<SComplex> {
    let n2 = k2.base().order();
    let base = k1
        .base()
        .direct_product_capped(k2.base(), MAX_COMPLEX_ORDER)?;
    let pairs: Vec<(usize, usize)> = (0..base.order()).map(|z| (z / n2, z % n2)).collect();
    let faces = product_faces(base.order(), &pairs, k1, k2);
    Ok(SComplex::from_closed(base, faces))
}

fn product_faces(order: usize, pairs: &[(usize, usize)], k1: &SComplex, k2: &SComplex) -> FaceSet {
    let mut f = FaceSet::new(order);
    for z in Subset::full(order).nonempty_subsets() {
        let (mut p1, mut p2) = (Subset::EMPTY, Subset::EMPTY);
        for i in z.iter() {
            p1.insert(pairs[i].0);
            p2.insert(pairs[i].1);
        }
        if k1.contains(p1) && k2.contains(p2) {
            f.insert(z);
        }
    }
    f
}

/// Apex of the pullback of a cospan of complexes.
#[derive(Debug, Clone)]
pub struct FiberProduct {
    /// `K1 ⊗_L K2` over the fiber subsemigroup.
    pub complex: SComplex,
    /// The pair `(s1, s2)` behind each element of the fiber base.
    pub pairs: Vec<(usize, usize)>,
}

/// `K1 ⊗_L K2` for complex morphisms `φ1: K1 → L`, `φ2: K2 → L`.
///
/// The base is the fiber subsemigroup `{(s1, s2) : s1φ1 = s2φ2}`,
/// re-indexed in increasing order of the pair encoding `s1·|S2| + s2`.
pub fn fiber_product(
    k1: &SComplex,
    k2: &SComplex,
    phi1: &Morphism,
    phi2: &Morphism,
    target: &SComplex,
) -> Result<FiberProduct> {
    if phi1.dom() != k1.base() || phi2.dom() != k2.base() {
        return Err(Error::BaseMismatch);
    }
    if phi1.cod() != target.base() || phi2.cod() != target.base() {
        return Err(Error::BaseMismatch);
    }
    for (phi, k) in [(phi1, k1), (phi2, k2)] {
        if k.max_faces().iter().any(|&x| !target.contains(phi.image(x))) {
            return Err(Error::NotComplexMorphism);
        }
    }
    let prod = k1.base().direct_product(k2.base())?;
    let n2 = k2.base().order();
    let fiber: Subset = (0..prod.order())
        .filter(|&z| phi1.apply(z / n2) == phi2.apply(z % n2))
        .collect();
    let (base, embed) = prod.induced(fiber)?;
    check_complex_order(base.order())?;
    let pairs: Vec<(usize, usize)> = embed.iter().map(|&z| (z / n2, z % n2)).collect();
    let faces = product_faces(base.order(), &pairs, k1, k2);
    Ok(FiberProduct {
        complex: SComplex::from_closed(base, faces),
        pairs,
    })
}

/// Every complex over `base`, for bases of order at most 4.
pub fn all_complexes(base: &Semigroup) -> Result<Vec<SComplex>> {
    let n = base.order();
    check_complex_order(n)?;
    if n > 4 {
        return Err(Error::SizeCap {
            what: "complex lattice base order",
            got: n,
            cap: 4,
        });
    }
    let wide: Vec<Subset> = base
        .elements()
        .nonempty_subsets()
        .filter(|x| x.len() > 1)
        .collect();
    let mut out = Vec::new();
    for choice in 0u64..(1 << wide.len()) {
        let mut f = FaceSet::new(n);
        for i in 0..n {
            f.insert(Subset::singleton(i));
        }
        for (k, &x) in wide.iter().enumerate() {
            if choice >> k & 1 == 1 {
                f.insert(x);
            }
        }
        if f.is_downward_closed() && is_product_closed(base, &f) {
            out.push(SComplex::from_closed(base.clone(), f));
        }
    }
    Ok(out)
}
