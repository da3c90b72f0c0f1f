//! Brute-force reference implementations. Nothing here calls the library;
//! every quantity is computed straight from its definition.

use std::collections::{BTreeMap, BTreeSet, HashSet};

pub type Set = u32;
pub type Faces = BTreeSet<Set>;

pub fn bits(x: Set) -> impl Iterator<Item = usize> {
    (0..32).filter(move |i| x >> i & 1 == 1)
}

pub fn single(i: usize) -> Set {
    1 << i
}

/// Nonempty subsets of `x`, ascending.
pub fn subsets(x: Set) -> Vec<Set> {
    (1..=x).filter(|s| s & !x == 0).collect()
}

pub fn image(map: &[usize], x: Set) -> Set {
    bits(x).fold(0, |acc, i| acc | single(map[i]))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tab {
    pub n: usize,
    pub m: Vec<usize>,
}

impl Tab {
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.m[a * self.n + b]
    }

    pub fn full(&self) -> Set {
        ((1u64 << self.n) - 1) as Set
    }

    pub fn prod(&self, a: Set, b: Set) -> Set {
        let mut r = 0;
        for x in bits(a) {
            for y in bits(b) {
                r |= single(self.mul(x, y));
            }
        }
        r
    }

    pub fn closed(&self, a: Set) -> bool {
        self.prod(a, a) & !a == 0
    }

    pub fn gen(&self, a: Set) -> Set {
        let mut x = a;
        loop {
            let y = x | self.prod(x, x);
            if y == x {
                return x;
            }
            x = y;
        }
    }

    pub fn right_ideal(&self, x: usize) -> Set {
        (0..self.n).fold(single(x), |acc, s| acc | single(self.mul(x, s)))
    }

    pub fn left_ideal(&self, x: usize) -> Set {
        (0..self.n).fold(single(x), |acc, s| acc | single(self.mul(s, x)))
    }

    pub fn ideal(&self, x: usize) -> Set {
        let l = self.left_ideal(x);
        bits(l).fold(l, |acc, y| acc | self.right_ideal(y))
    }

    pub fn idempotents(&self) -> Set {
        (0..self.n).filter(|&x| self.mul(x, x) == x).fold(0, |a, x| a | single(x))
    }

    pub fn regular(&self) -> Set {
        (0..self.n)
            .filter(|&x| (0..self.n).any(|y| self.mul(self.mul(x, y), x) == x))
            .fold(0, |a, x| a | single(x))
    }

    pub fn reverse(&self) -> Tab {
        let n = self.n;
        Tab {
            n,
            m: (0..n * n).map(|i| self.mul(i % n, i / n)).collect(),
        }
    }

    /// The subsemigroup on `u`, with its elements in increasing order.
    pub fn induced(&self, u: Set) -> (Tab, Vec<usize>) {
        let elems: Vec<usize> = bits(u).collect();
        let pos = |x: usize| elems.iter().position(|&e| e == x).expect("closed subset");
        let k = elems.len();
        let mut m = Vec::with_capacity(k * k);
        for &a in &elems {
            for &b in &elems {
                m.push(pos(self.mul(a, b)));
            }
        }
        (Tab { n: k, m }, elems)
    }

    /// Pairs `(a, b)` encoded as `a·|other| + b`.
    pub fn times(&self, other: &Tab) -> Tab {
        let n = self.n * other.n;
        let mut m = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                let (a1, b1) = (x / other.n, x % other.n);
                let (a2, b2) = (y / other.n, y % other.n);
                m[x * n + y] = self.mul(a1, a2) * other.n + other.mul(b1, b2);
            }
        }
        Tab { n, m }
    }

    /// Every product of `k` elements.
    pub fn kprods(&self, k: usize) -> Set {
        let mut r = 0;
        for_tuples(self.n, k, |t| {
            let p = t[1..].iter().fold(t[0], |acc, &x| self.mul(acc, x));
            r |= single(p);
        });
        r
    }
}

/// Calls `f` on every `k`-tuple over `0..n`.
pub fn for_tuples(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    let mut t = vec![0; k];
    loop {
        f(&t);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            t[i] += 1;
            if t[i] < n {
                break;
            }
            t[i] = 0;
        }
    }
}

pub fn associative(n: usize, m: &[usize]) -> bool {
    (0..n).all(|a| {
        (0..n).all(|b| (0..n).all(|c| m[m[a * n + b] * n + c] == m[a * n + m[b * n + c]]))
    })
}

/// Every associative table on `0..n`, by filtering all `n^(n²)` tables.
pub fn all_tables(n: usize) -> Vec<Tab> {
    let mut out = Vec::new();
    for_tuples(n, n * n, |m| {
        if associative(n, m) {
            out.push(Tab { n, m: m.to_vec() });
        }
    });
    out
}

pub fn perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in perms(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn relabel(t: &Tab, p: &[usize]) -> Tab {
    let n = t.n;
    let mut m = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            m[p[a] * n + p[b]] = p[t.mul(a, b)];
        }
    }
    Tab { n, m }
}

/// Least relabelled table, optionally also over the reversed table.
pub fn canon(t: &Tab, anti: bool) -> Vec<usize> {
    let mut cands = vec![t.clone()];
    if anti {
        cands.push(t.reverse());
    }
    let ps = perms(t.n);
    cands
        .iter()
        .flat_map(|c| ps.iter().map(move |p| relabel(c, p).m))
        .min()
        .expect("at least one permutation")
}

/// One representative per class, keyed by canonical form.
pub fn classes(tables: &[Tab], anti: bool) -> BTreeMap<Vec<usize>, Tab> {
    let mut out = BTreeMap::new();
    for t in tables {
        out.entry(canon(t, anti)).or_insert_with(|| t.clone());
    }
    out
}

// ---- complexes ----

pub fn down<I: IntoIterator<Item = Set>>(fam: I) -> Faces {
    let mut out = Faces::new();
    for x in fam {
        if !out.contains(&x) {
            out.extend(subsets(x));
        }
    }
    out
}

pub fn sing(t: &Tab) -> Faces {
    (0..t.n).map(single).collect()
}

pub fn power(t: &Tab) -> Faces {
    subsets(t.full()).into_iter().collect()
}

/// Least downward- and product-closed family holding `fam` and singletons.
pub fn generate(t: &Tab, fam: &[Set]) -> Faces {
    let mut f = down(fam.iter().copied().chain((0..t.n).map(single)));
    loop {
        let cur: Vec<Set> = f.iter().copied().collect();
        let mut fresh = Vec::new();
        for &a in &cur {
            for &b in &cur {
                let p = t.prod(a, b);
                if !f.contains(&p) {
                    fresh.push(p);
                }
            }
        }
        if fresh.is_empty() {
            return f;
        }
        f.extend(down(fresh));
    }
}

pub fn is_complex(t: &Tab, f: &Faces) -> bool {
    (0..t.n).all(|i| f.contains(&single(i)))
        && f.iter().all(|&x| subsets(x).iter().all(|y| f.contains(y)))
        && f.iter().all(|&a| f.iter().all(|&b| f.contains(&t.prod(a, b))))
}

pub fn all_complexes(t: &Tab) -> Vec<Faces> {
    let big: Vec<Set> = subsets(t.full()).into_iter().filter(|x| x.count_ones() >= 2).collect();
    let mut out = Vec::new();
    for choice in 0u64..1 << big.len() {
        let mut f = sing(t);
        for (i, &x) in big.iter().enumerate() {
            if choice >> i & 1 == 1 {
                f.insert(x);
            }
        }
        if is_complex(t, &f) {
            out.push(f);
        }
    }
    out
}

pub fn homs(s: &Tab, t: &Tab) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_tuples(t.n, s.n, |f| {
        let ok = (0..s.n).all(|a| (0..s.n).all(|b| f[s.mul(a, b)] == t.mul(f[a], f[b])));
        if ok {
            out.push(f.to_vec());
        }
    });
    out
}

pub fn push(cod: &Tab, map: &[usize], k: &Faces) -> Faces {
    let imgs: Vec<Set> = k.iter().map(|&x| image(map, x)).collect();
    generate(cod, &imgs)
}

pub fn pull(dom: &Tab, map: &[usize], l: &Faces) -> Faces {
    subsets(dom.full()).into_iter().filter(|&x| l.contains(&image(map, x))).collect()
}

/// Faces whose two projections are faces.
pub fn tensor(k1: &Faces, k2: &Faces, n2: usize, order: usize) -> Faces {
    subsets(((1u64 << order) - 1) as Set)
        .into_iter()
        .filter(|&z| {
            let p1 = bits(z).fold(0, |a, i| a | single(i / n2));
            let p2 = bits(z).fold(0, |a, i| a | single(i % n2));
            k1.contains(&p1) && k2.contains(&p2)
        })
        .collect()
}

// ---- relational morphisms, as image lists ----

pub fn rel_valid(s: &Tab, t: &Tab, img: &[Set]) -> bool {
    img.iter().all(|&x| x != 0)
        && (0..s.n).all(|a| (0..s.n).all(|b| t.prod(img[a], img[b]) & !img[s.mul(a, b)] == 0))
}

/// Subsets of the domain whose images share a point.
pub fn nerve(s: &Tab, img: &[Set]) -> Faces {
    subsets(s.full())
        .into_iter()
        .filter(|&x| bits(x).fold(u32::MAX, |acc, i| acc & img[i]) != 0)
        .collect()
}

/// Closes a set of pairs under the componentwise product.
pub fn close(s: &Tab, t: &Tab, pairs: &[(usize, usize)]) -> Vec<Set> {
    let mut all: HashSet<(usize, usize)> = pairs.iter().copied().collect();
    loop {
        let cur: Vec<_> = all.iter().copied().collect();
        let mut grew = false;
        for &(a, x) in &cur {
            for &(b, y) in &cur {
                grew |= all.insert((s.mul(a, b), t.mul(x, y)));
            }
        }
        if !grew {
            break;
        }
    }
    let mut img = vec![0; s.n];
    for (a, x) in all {
        img[a] |= single(x);
    }
    img
}

/// Every relational morphism `S ⇸ T`.
pub fn all_rels(s: &Tab, t: &Tab) -> Vec<Vec<Set>> {
    let choices = subsets(t.full());
    let mut out = Vec::new();
    for_tuples(choices.len(), s.n, |c| {
        let img: Vec<Set> = c.iter().map(|&i| choices[i]).collect();
        if rel_valid(s, t, &img) {
            out.push(img);
        }
    });
    out
}

// ---- congruences ----

/// Class index per element, for every congruence.
pub fn congruences(s: &Tab) -> Vec<Vec<usize>> {
    let n = s.n;
    let mut out = Vec::new();
    for_tuples(n, n, |c| {
        // restricted growth strings only
        let mut top = 0;
        for (i, &x) in c.iter().enumerate() {
            if (i == 0 && x != 0) || x > top + usize::from(i > 0) {
                return;
            }
            if i > 0 {
                top = top.max(x);
            }
        }
        let ok = (0..n).all(|a| {
            (0..n).all(|b| {
                c[a] != c[b]
                    || (0..n).all(|x| {
                        c[s.mul(a, x)] == c[s.mul(b, x)] && c[s.mul(x, a)] == c[s.mul(x, b)]
                    })
            })
        });
        if ok {
            out.push(c.to_vec());
        }
    });
    out
}

pub fn quotient(s: &Tab, c: &[usize]) -> Tab {
    let k = c.iter().max().map_or(0, |m| m + 1);
    let mut m = vec![0; k * k];
    for a in 0..s.n {
        for b in 0..s.n {
            m[c[a] * k + c[b]] = c[s.mul(a, b)];
        }
    }
    Tab { n: k, m }
}

// ---- moduli and contexts ----

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Md {
    Grp,
    CycGrp,
    RCl,
    LCl,
    JCl,
    PrinR,
    PrinL,
    PrinJ,
    Prod(usize),
    Suffix(usize),
    Prefix(usize),
    E,
    Reg,
}

pub fn subgroups(t: &Tab) -> Vec<Set> {
    subsets(t.full())
        .into_iter()
        .filter(|&x| {
            t.closed(x)
                && bits(x).any(|e| {
                    bits(x).all(|g| t.mul(e, g) == g && t.mul(g, e) == g)
                        && bits(x).all(|g| bits(x).any(|h| t.mul(g, h) == e && t.mul(h, e) == h && t.mul(h, g) == e))
                })
        })
        .collect()
}

fn partition_by(n: usize, key: impl Fn(usize) -> Set) -> Vec<Set> {
    let mut groups: BTreeMap<Set, Set> = BTreeMap::new();
    for x in 0..n {
        *groups.entry(key(x)).or_default() |= single(x);
    }
    groups.into_values().collect()
}

pub fn r_classes(t: &Tab) -> Vec<Set> {
    partition_by(t.n, |x| t.right_ideal(x))
}

pub fn l_classes(t: &Tab) -> Vec<Set> {
    partition_by(t.n, |x| t.left_ideal(x))
}

pub fn j_classes(t: &Tab) -> Vec<Set> {
    partition_by(t.n, |x| t.ideal(x))
}

pub fn h_classes(t: &Tab) -> Vec<Set> {
    let r = r_classes(t);
    let l = l_classes(t);
    r.iter()
        .flat_map(|a| l.iter().map(move |b| a & b))
        .filter(|&x| x != 0)
        .collect()
}

pub fn eval(t: &Tab, m: Md) -> BTreeSet<Set> {
    let n = t.n;
    let each = |f: &dyn Fn(usize) -> Set| (0..n).map(f).collect::<BTreeSet<Set>>();
    match m {
        Md::Grp => subgroups(t).into_iter().collect(),
        Md::CycGrp => {
            let ge = subgroups(t).into_iter().fold(0, |a, g| a | g);
            bits(ge).map(|g| t.gen(single(g))).collect()
        }
        Md::RCl => r_classes(t).into_iter().collect(),
        Md::LCl => l_classes(t).into_iter().collect(),
        Md::JCl => j_classes(t).into_iter().collect(),
        Md::PrinR => each(&|x| t.right_ideal(x)),
        Md::PrinL => each(&|x| t.left_ideal(x)),
        Md::PrinJ => each(&|x| t.ideal(x)),
        Md::Prod(k) => [t.kprods(k)].into(),
        Md::Suffix(k) | Md::Prefix(k) => {
            let mut out = BTreeSet::new();
            for_tuples(n, k, |tu| {
                let p = tu[1..].iter().fold(tu[0], |acc, &x| t.mul(acc, x));
                out.insert(if matches!(m, Md::Suffix(_)) {
                    t.left_ideal(p)
                } else {
                    t.right_ideal(p)
                });
            });
            out
        }
        Md::E => [t.idempotents()].into(),
        Md::Reg => [t.regular()].into(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cx {
    Grp,
    CycGrp,
    Loc,
    EGen,
    RegGen,
    Full,
    From(Md),
}

pub fn eval_ctx(t: &Tab, c: Cx) -> BTreeSet<Set> {
    match c {
        Cx::Grp => eval(t, Md::Grp),
        Cx::CycGrp => eval(t, Md::CycGrp),
        Cx::Loc => bits(t.idempotents())
            .map(|e| (0..t.n).fold(0, |acc, s| acc | single(t.mul(t.mul(e, s), e))))
            .collect(),
        Cx::EGen => [t.gen(t.idempotents())].into(),
        Cx::RegGen => [t.gen(t.regular())].into(),
        Cx::Full => [t.full()].into(),
        Cx::From(m) => eval(t, m).into_iter().map(|x| t.gen(x)).collect(),
    }
}

// ---- pseudovarieties ----

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pv {
    Trivial,
    Aperiodic,
    RTrivial,
    LTrivial,
    JTrivial,
    LeftZero,
    RightZero,
    NilpotentK(usize),
    DelayK(usize),
    ReverseDelayK(usize),
    UniqueIdempotent,
    Nilpotent,
    LocallyTrivial,
}

impl Pv {
    pub fn reversed(self) -> Pv {
        match self {
            Pv::RTrivial => Pv::LTrivial,
            Pv::LTrivial => Pv::RTrivial,
            Pv::LeftZero => Pv::RightZero,
            Pv::RightZero => Pv::LeftZero,
            Pv::DelayK(k) => Pv::ReverseDelayK(k),
            Pv::ReverseDelayK(k) => Pv::DelayK(k),
            p => p,
        }
    }
}

fn singletons(parts: &[Set]) -> bool {
    parts.iter().all(|x| x.count_ones() == 1)
}

pub fn member(p: Pv, t: &Tab) -> bool {
    let n = t.n;
    let pairs = || (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)));
    let every_kprod = |k: usize, f: &dyn Fn(usize) -> bool| {
        let mut ok = true;
        for_tuples(n, k, |tu| {
            let p = tu[1..].iter().fold(tu[0], |acc, &x| t.mul(acc, x));
            ok &= f(p);
        });
        ok
    };
    match p {
        Pv::Trivial => n == 1,
        Pv::Aperiodic => singletons(&h_classes(t)),
        Pv::RTrivial => singletons(&r_classes(t)),
        Pv::LTrivial => singletons(&l_classes(t)),
        Pv::JTrivial => singletons(&j_classes(t)),
        Pv::LeftZero => pairs().all(|(x, y)| t.mul(x, y) == x),
        Pv::RightZero => pairs().all(|(x, y)| t.mul(x, y) == y),
        Pv::NilpotentK(k) => t.kprods(k).count_ones() == 1,
        Pv::DelayK(k) => every_kprod(k, &|p| (0..n).all(|y| t.mul(y, p) == p)),
        Pv::ReverseDelayK(k) => every_kprod(k, &|p| (0..n).all(|y| t.mul(p, y) == p)),
        Pv::UniqueIdempotent => t.idempotents().count_ones() == 1,
        Pv::Nilpotent => t.kprods(n).count_ones() == 1,
        Pv::LocallyTrivial => eval_ctx(t, Cx::Loc).iter().all(|x| x.count_ones() == 1),
    }
}

// ---- completion and oracle ----

/// Union-closure iteration from the singletons. Returns the fixpoint and
/// the number of strict growth steps.
pub fn completion(t: &Tab, m: Md) -> (Faces, usize) {
    let mut level = sing(t);
    let mut steps = 0;
    loop {
        let next = completion_step(t, m, &level);
        if next == level {
            return (level, steps);
        }
        level = next;
        steps += 1;
    }
}

/// The face semigroup of `k`: faces in ascending mask order.
pub fn face_semigroup(t: &Tab, k: &Faces) -> (Tab, Vec<Set>) {
    let faces: Vec<Set> = k.iter().copied().collect();
    let q = faces.len();
    let pos = |x: Set| faces.iter().position(|&f| f == x).expect("product of faces is a face");
    let mut m = Vec::with_capacity(q * q);
    for &a in &faces {
        for &b in &faces {
            m.push(pos(t.prod(a, b)));
        }
    }
    (Tab { n: q, m }, faces)
}

/// Unions of the faces of the functor value of `m` on the face semigroup.
pub fn completion_step(t: &Tab, m: Md, k: &Faces) -> Faces {
    let (q, faces) = face_semigroup(t, k);
    let fam: Vec<Set> = eval(&q, m).into_iter().collect();
    let cq = generate(&q, &fam);
    down(cq.iter().map(|&a| bits(a).fold(0, |acc, i| acc | faces[i])))
}

/// Meet of nerves of every relational morphism into the given codomains.
pub fn oracle(s: &Tab, codomains: &[Tab]) -> Faces {
    let mut acc = power(s);
    for t in codomains {
        for img in all_rels(s, t) {
            let nv = nerve(s, &img);
            acc.retain(|x| nv.contains(x));
        }
    }
    acc
}
