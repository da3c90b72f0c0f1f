use pointlike_core::complex::{downward_close, FaceSet, SComplex};
use pointlike_core::enumerate::semigroups_up_to;
use pointlike_core::moduli::{Expr, Modulus};
use pointlike_core::pseudovariety::{pv_member, Pseudovariety};
use pointlike_core::relmorph::RelationalMorphism;
use pointlike_core::{Semigroup, Subset};
use proptest::prelude::*;
use proptest::sample::{select, subsequence};

fn small_semigroup() -> impl Strategy<Value = Semigroup> {
    let all = semigroups_up_to(4).unwrap();
    (select(all), any::<u64>()).prop_map(|(s, seed)| {
        // relabel with a permutation drawn from the seed
        let mut perm: Vec<usize> = (0..s.order()).collect();
        let mut x = seed;
        for i in (1..perm.len()).rev() {
            perm.swap(i, (x % (i as u64 + 1)) as usize);
            x /= i as u64 + 1;
        }
        s.permuted(&perm)
    })
}

fn family(order: usize) -> impl Strategy<Value = Vec<Subset>> {
    let top = (1u64 << order) - 1;
    prop::collection::vec(1..=top, 0..4)
        .prop_map(|v| v.into_iter().map(Subset::from_bits).collect())
}

fn modulus_expr() -> impl Strategy<Value = String> {
    let leaf = prop_oneof![
        select(vec!["grp", "cycgrp", "rcl", "lcl", "jcl", "prinr", "prinl", "prinj", "e", "reg"])
            .prop_map(str::to_string),
        (select(vec!["prod", "suffix", "prefix"]), 1usize..5).prop_map(|(n, k)| format!("{n}:{k}")),
        select(vec!["ctx:loc", "ctx:egen", "ctx:full", "ctx:grp", "epapprox:aperiodic:2"])
            .prop_map(str::to_string),
    ];
    leaf.prop_recursive(3, 16, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("join({a},{b})")),
            (inner.clone(), select(vec!["ctx:loc", "ctx:grp", "gen(e)"]))
                .prop_map(|(a, c)| format!("restrict({a},{c})")),
            inner.prop_map(|a| format!("gen({a})")),
        ]
    })
}

proptest! {
    #[test]
    fn downward_close_is_idempotent(order in 1usize..8, fam in family(7)) {
        let fam: Vec<Subset> = fam.into_iter().map(|x| x.intersection(Subset::full(order))).filter(|x| !x.is_empty()).collect();
        let once = downward_close(order, &fam).unwrap();
        let twice = downward_close(order, &once).unwrap();
        prop_assert_eq!(&once, &twice);
        prop_assert!(fam.iter().all(|x| once.contains(x)));
    }

    #[test]
    fn reverse_is_an_involution(s in small_semigroup()) {
        prop_assert_eq!(s.reverse().reverse(), s);
    }

    #[test]
    fn membership_ignores_labels(s in small_semigroup(), pv in select(Pseudovariety::SIMPLE.to_vec())) {
        let canon = Semigroup::from_flat(s.order(), s.canonical_table(false)).unwrap();
        prop_assert_eq!(pv_member(pv, &s), pv_member(pv, &canon));
    }

    #[test]
    fn generation_is_a_closure(s in small_semigroup(), fam in family(4)) {
        let n = s.order();
        let fam: Vec<Subset> = fam.into_iter().map(|x| x.intersection(Subset::full(n))).filter(|x| !x.is_empty()).collect();
        let k = SComplex::generate(&s, fam.clone()).unwrap();
        prop_assert!(fam.iter().all(|&x| k.contains(x)));
        prop_assert_eq!(SComplex::generate(&s, k.max_faces().to_vec()).unwrap(), k.clone());
        let mut faces = FaceSet::new(n);
        for x in k.faces().iter() { faces.insert(x); }
        prop_assert_eq!(SComplex::from_faces(&s, faces).unwrap(), k);
    }

    #[test]
    fn nerve_descriptions_agree(
        s in small_semigroup(),
        t in small_semigroup(),
        picks in subsequence((0..16usize).collect::<Vec<_>>(), 0..6),
    ) {
        let (n, m) = (s.order(), t.order());
        let mut pairs: Vec<(usize, usize)> = (0..n).map(|x| (x, x % m)).collect();
        pairs.extend(picks.into_iter().map(|p| (p % n, (p / n) % m)));
        let rho = RelationalMorphism::generated(s, t, pairs).unwrap();
        prop_assert_eq!(rho.nerve().unwrap(), rho.nerve_via_intersections().unwrap());
    }

    #[test]
    fn expressions_round_trip(text in modulus_expr()) {
        let e: Expr = text.parse().unwrap();
        let m = e.into_modulus();
        let again: Modulus = m.to_string().parse().unwrap();
        prop_assert_eq!(again, m);
    }
}
