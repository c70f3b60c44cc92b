mod common;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use toricode::codes::monomials_of_degree;
use toricode::gfq::Field;
use toricode::intlat::{kernel_basis, smith_invariants, snf, solve, Lattice};
use toricode::points::{enumerate_points, length_count, length_snf};
use toricode::poly::{
    buchberger, eliminate, is_homogeneous, normal_form, saturate, PolyRing, Polynomial,
};
use toricode::toric::{degree_of, derive_beta};
use toricode::vanish::{ideal_via_lattice, in_l1, lattice_l, lattice_via_colon};
use toricode::{Error, IntLattice, IntMatrix};

use common::{fans, field, instance, FIELDS};

fn matrix(max_rows: usize, max_cols: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(move |(r, c)| {
        prop::collection::vec(-bound..=bound, r * c).prop_map(move |xs| {
            let rows: Vec<&[i64]> = xs.chunks(c).collect();
            IntMatrix::from_i64_rows(&rows, c)
        })
    })
}

fn vectors(dim: usize, count: usize, bound: i64) -> impl Strategy<Value = Vec<Vec<BigInt>>> {
    prop::collection::vec(prop::collection::vec(-bound..=bound, dim), 0..=count).prop_map(|vs| {
        vs.into_iter()
            .map(|v| v.into_iter().map(BigInt::from).collect())
            .collect()
    })
}

fn lattice(dim: usize) -> impl Strategy<Value = IntLattice> {
    vectors(dim, 3, 6).prop_map(move |g| Lattice::from_generators(dim, &g))
}

fn is_unimodular(m: &IntMatrix) -> bool {
    m.determinant().abs().is_one()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn smith_form_factorization(m in matrix(4, 4, 9)) {
        let (d, p, k) = snf(&m);
        prop_assert_eq!(&(&(&p * &m) * &k), &d);
        prop_assert!(is_unimodular(&p) && is_unimodular(&k));
        let inv = smith_invariants(&m);
        for w in inv.windows(2) {
            prop_assert!(w[0].is_zero() && w[1].is_zero() || (&w[1] % &w[0]).is_zero());
        }
    }

    #[test]
    fn kernel_is_canonical(m in matrix(3, 5, 5)) {
        let k = kernel_basis(&m);
        for v in k.columns() {
            prop_assert!(m.mul_vec(&v).iter().all(Zero::is_zero));
        }
        let l = Lattice::image(&k);
        prop_assert_eq!(Lattice::image(l.basis()), l.clone());
        prop_assert_eq!(l.basis(), &k);
    }

    #[test]
    fn sum_and_intersection_laws(a in lattice(3), b in lattice(3), c in lattice(3)) {
        prop_assert_eq!(a.sum(&b).unwrap(), b.sum(&a).unwrap());
        prop_assert_eq!(a.sum(&a).unwrap(), a.clone());
        prop_assert_eq!(
            a.sum(&b).unwrap().sum(&c).unwrap(),
            a.sum(&b.sum(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.intersect(&b).unwrap(), b.intersect(&a).unwrap());
        prop_assert_eq!(a.intersect(&a).unwrap(), a.clone());
        prop_assert_eq!(
            a.intersect(&b).unwrap().intersect(&c).unwrap(),
            a.intersect(&b.intersect(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn colon_contains_lattice(a in lattice(3), c in 1i64..8) {
        let colon = a.colon(&BigInt::from(c)).unwrap();
        prop_assert!(a.is_subset_of(&colon));
        prop_assert_eq!(a.colon(&BigInt::one()).unwrap(), a.clone());
        for v in colon.basis_vectors() {
            let scaled: Vec<BigInt> = v.iter().map(|x| x * c).collect();
            prop_assert!(a.contains(&scaled));
        }
    }

    #[test]
    fn membership_round_trip(a in lattice(3), coeffs in prop::collection::vec(-4i64..=4, 3), probe in prop::collection::vec(-6i64..=6, 3)) {
        let mut inside = vec![BigInt::zero(); 3];
        for (b, c) in a.basis_vectors().iter().zip(&coeffs) {
            for (x, y) in inside.iter_mut().zip(b) {
                *x += y * c;
            }
        }
        prop_assert!(a.contains(&inside));
        let probe: Vec<BigInt> = probe.into_iter().map(BigInt::from).collect();
        prop_assert_eq!(a.contains(&probe), solve(a.basis(), &probe).is_some());
    }
}

#[test]
fn fermat_in_every_small_field() {
    for q in 2..=64u64 {
        let Ok(f) = Field::new(q) else { continue };
        for x in f.elements().filter(|x| !x.is_zero()) {
            assert_eq!(f.pow(x, (q - 1) as i64).unwrap(), f.elem(1), "q = {q}");
            assert_eq!(f.eta_pow(f.dlog(x).unwrap() as i64), x);
        }
        for h in 0..2 * f.unit_order() as i64 {
            assert_eq!(
                f.dlog(f.eta_pow(h)).unwrap() as i64,
                h % f.unit_order() as i64
            );
        }
    }
}

#[test]
fn prime_fields_match_integers() {
    for p in [2u32, 3, 5, 7, 11, 13] {
        let f = Field::new(p as u64).unwrap();
        for a in 0..p {
            for b in 0..p {
                let (x, y) = (f.from_int(a as i64), f.from_int(b as i64));
                assert_eq!(f.add(x, y), f.from_int(((a + b) % p) as i64));
                assert_eq!(f.mul(x, y), f.from_int(((a * b) % p) as i64));
            }
        }
    }
}

fn small_phi() -> impl Strategy<Value = IntMatrix> {
    (2usize..=4, 1usize..=2).prop_flat_map(|(r, n)| {
        prop::collection::vec(-3i64..=3, r * n).prop_map(move |xs| {
            let rows: Vec<&[i64]> = xs.chunks(n).collect();
            IntMatrix::from_i64_rows(&rows, n)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn derived_grading_is_exact(phi in small_phi(), m1 in prop::collection::vec(-5i64..=5, 4), m2 in prop::collection::vec(-5i64..=5, 4)) {
        let beta = match derive_beta(&phi) {
            Ok(b) => b,
            Err(_) => return Err(TestCaseError::reject("torsion or rank-deficient")),
        };
        prop_assert!((&beta * &phi).is_zero());
        prop_assert!(smith_invariants(&beta).iter().all(One::is_one));
        prop_assert_eq!(Lattice::kernel(&beta), Lattice::image(&phi));
        let r = phi.rows();
        let a: Vec<BigInt> = m1[..r].iter().map(|&x| BigInt::from(x)).collect();
        let b: Vec<BigInt> = m2[..r].iter().map(|&x| BigInt::from(x)).collect();
        let sum: Vec<BigInt> = a.iter().zip(&b).map(|(x, y)| x - 3 * y).collect();
        let lhs = degree_of(&beta, &sum);
        let rhs: Vec<BigInt> = degree_of(&beta, &a).iter().zip(degree_of(&beta, &b)).map(|(x, y)| x - 3 * y).collect();
        prop_assert_eq!(lhs, rhs);
    }
}

/// Binomial `x^a - x^b`, or `x^a - 1` style relations when `b` is zero.
fn binomial(ring: &PolyRing, a: &[u32], b: &[u32]) -> Polynomial {
    let f = ring.field();
    ring.from_terms(vec![
        (f.elem(1), a.to_vec()),
        (f.neg(f.elem(1)), b.to_vec()),
    ])
}

type BinomialPairs = Vec<(Vec<u32>, Vec<u32>)>;

fn binomial_system(nvars: usize) -> impl Strategy<Value = (u64, BinomialPairs)> {
    let exp = prop::collection::vec(0u32..=3, nvars);
    (
        prop::sample::select(FIELDS.to_vec()),
        prop::collection::vec((exp.clone(), exp), 1..=3),
    )
}

fn ring_and_gens(
    q: u64,
    nvars: usize,
    pairs: &[(Vec<u32>, Vec<u32>)],
) -> (PolyRing, Vec<Polynomial>) {
    let ring = PolyRing::standard(field(q), nvars).with_max_basis(400);
    let gens = pairs
        .iter()
        .map(|(a, b)| binomial(&ring, a, b))
        .filter(|g| !g.is_zero())
        .collect();
    (ring, gens)
}

fn guarded<T>(r: toricode::Result<T>) -> Result<T, TestCaseError> {
    match r {
        Ok(v) => Ok(v),
        Err(Error::ResourceGuard { .. }) => Err(TestCaseError::reject("basis size guard")),
        Err(e) => Err(TestCaseError::fail(e.to_string())),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn groebner_basis_is_fixed_point((q, pairs) in binomial_system(3)) {
        let (ring, gens) = ring_and_gens(q, 3, &pairs);
        let gb = guarded(buchberger(&ring, &gens))?;
        let again = guarded(buchberger(&ring, &gb.generators))?;
        prop_assert_eq!(&again.generators, &gb.generators);
        for g in &gb.generators {
            prop_assert!(g.len() <= 2, "not a binomial: {}", ring.render(g));
            prop_assert!(g.leading_term().unwrap().coeff == ring.field().elem(1));
        }
        for f in &gens {
            prop_assert!(normal_form(&ring, f, &gb.generators).is_zero());
        }
    }

    #[test]
    fn ideal_members_reduce_to_zero((q, pairs) in binomial_system(3), e1 in prop::collection::vec(0u32..=2, 3), e2 in prop::collection::vec(0u32..=2, 3), c in 1u32..4) {
        let (ring, gens) = ring_and_gens(q, 3, &pairs);
        prop_assume!(!gens.is_empty());
        let gb = guarded(buchberger(&ring, &gens))?;
        let f = ring.field();
        let k = f.from_int(c as i64);
        let mut member = ring.mul_term(&gens[0], k, &e1);
        if let Some(g) = gens.last() {
            member = ring.add(&member, &ring.mul_term(g, f.elem(1), &e2));
        }
        prop_assert!(normal_form(&ring, &member, &gb.generators).is_zero());
        let probe = ring.add(&ring.term(f.elem(1), e1.clone()), &ring.term(k, e2.clone()));
        let shifted = ring.add(&probe, &member);
        prop_assert_eq!(
            normal_form(&ring, &shifted, &gb.generators),
            normal_form(&ring, &probe, &gb.generators)
        );
    }

    #[test]
    fn elimination_stays_in_ideal((q, pairs) in binomial_system(4)) {
        let (ring, gens) = ring_and_gens(q, 4, &pairs);
        let gb = guarded(buchberger(&ring, &gens))?;
        let kept = guarded(eliminate(&ring, &gens, &[0]))?;
        for g in &kept {
            prop_assert!(g.avoids(&[0]));
            prop_assert!(normal_form(&ring, g, &gb.generators).is_zero());
        }
        // every basis element free of x_1 is in the elimination ideal
        let kept_gb = guarded(buchberger(&ring, &kept))?;
        for g in gb.generators.iter().filter(|g| g.avoids(&[0])) {
            prop_assert!(normal_form(&ring, g, &kept_gb.generators).is_zero());
        }
    }

    #[test]
    fn saturation_is_idempotent((q, pairs) in binomial_system(3), var in 0usize..3) {
        let (ring, gens) = ring_and_gens(q, 3, &pairs);
        let x = ring.var(var);
        let sat = guarded(saturate(&ring, &gens, &x))?;
        let sat_gb = guarded(buchberger(&ring, &sat))?;
        for f in &gens {
            prop_assert!(normal_form(&ring, f, &sat_gb.generators).is_zero());
        }
        let twice = guarded(saturate(&ring, &sat, &x))?;
        let twice_gb = guarded(buchberger(&ring, &twice))?;
        prop_assert_eq!(twice_gb.generators, sat_gb.generators);
    }
}

/// Some `w` with `w . beta_j > 0` for every column.
fn positive_functional(beta: &IntMatrix) -> Option<Vec<i64>> {
    let d = beta.rows();
    let mut w = vec![-12i64; d];
    loop {
        let ok = (0..beta.cols()).all(|j| {
            let col = beta.column(j);
            w.iter()
                .zip(&col)
                .map(|(a, b)| a * i64::try_from(b).unwrap())
                .sum::<i64>()
                > 0
        });
        if ok {
            return Some(w);
        }
        let mut i = 0;
        while i < d {
            w[i] += 1;
            if w[i] <= 12 {
                break;
            }
            w[i] = -12;
            i += 1;
        }
        if i == d {
            return None;
        }
    }
}

fn random_instance() -> impl Strategy<Value = toricode::toric::ToricInstance> {
    let fans = fans();
    (
        0..fans.len(),
        prop::sample::select(FIELDS.to_vec()),
        1usize..=2,
        prop::collection::vec(-3i64..=3, 8),
    )
        .prop_map(move |(i, q, s, entries)| {
            let phi = &fans[i].1;
            let r = phi.rows();
            let rows: Vec<&[i64]> = entries[..s * r].chunks(r).collect();
            instance(q, phi, IntMatrix::from_i64_rows(&rows, r))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn three_lengths_agree(inst in random_instance()) {
        let pts = enumerate_points(&inst).unwrap();
        let count = length_count(&inst).unwrap();
        prop_assert_eq!(pts.len() as u64, count.length);
        prop_assert_eq!(BigInt::from(count.length), length_snf(&inst));
    }

    #[test]
    fn keys_form_a_subgroup(inst in random_instance()) {
        let m = inst.field.unit_order();
        let keys: BTreeSet<Vec<u32>> = enumerate_points(&inst).unwrap().into_iter().map(|c| c.key).collect();
        prop_assert!(keys.contains(&vec![0; inst.n]));
        for a in &keys {
            for b in &keys {
                let c: Vec<u32> = a.iter().zip(b).map(|(x, y)| (x + y) % m).collect();
                prop_assert!(keys.contains(&c));
            }
        }
    }

    #[test]
    fn colon_lattice_lies_in_l1(inst in random_instance()) {
        let colon = lattice_via_colon(&inst).unwrap();
        for v in colon.lattice.basis_vectors() {
            prop_assert!(in_l1(&inst, &v));
        }
        if colon.condition_holds {
            prop_assert_eq!(colon.lattice, lattice_l(&inst));
        }
    }

    #[test]
    fn generators_are_homogeneous(inst in random_instance()) {
        let ideal = ideal_via_lattice(&inst).unwrap();
        for g in &ideal.generators {
            prop_assert!(g.is_binomial() && is_homogeneous(g, &inst.beta));
        }
    }

    #[test]
    fn monomial_list_is_complete(inst in random_instance(), m in prop::collection::vec(0i64..=3, 4)) {
        let m: Vec<BigInt> = m[..inst.r].iter().map(|&x| BigInt::from(x)).collect();
        let alpha = inst.beta.mul_vec(&m);
        let basis = monomials_of_degree(&inst, &alpha).unwrap();
        let listed: BTreeSet<Vec<u32>> = basis.monomials.iter().cloned().collect();
        prop_assert_eq!(listed.len(), basis.len());
        // a functional positive on every variable degree bounds each
        // exponent of the fibre independently of the listing
        let weights = positive_functional(&inst.beta).expect("projective fan");
        let dot = |w: &[i64], v: &[BigInt]| -> i64 {
            w.iter().zip(v).map(|(a, b)| a * i64::try_from(b).unwrap()).sum()
        };
        let total = dot(&weights, &alpha);
        let bound = (0..inst.r)
            .map(|j| total / dot(&weights, &inst.beta.column(j)))
            .max()
            .unwrap_or(0) as u32;
        let mut brute = BTreeSet::new();
        let mut e = vec![0u32; inst.r];
        loop {
            let big: Vec<BigInt> = e.iter().map(|&x| BigInt::from(x)).collect();
            if inst.beta.mul_vec(&big) == alpha {
                brute.insert(e.clone());
            }
            let mut i = 0;
            while i < e.len() {
                e[i] += 1;
                if e[i] <= bound {
                    break;
                }
                e[i] = 0;
                i += 1;
            }
            if i == e.len() {
                break;
            }
        }
        prop_assert_eq!(listed, brute);
    }
}

#[test]
fn seeded_cases_are_reproducible() {
    let a = common::random_cases(&mut ChaCha8Rng::seed_from_u64(7), 5);
    let b = common::random_cases(&mut ChaCha8Rng::seed_from_u64(7), 5);
    let labels = |v: &[common::Case]| v.iter().map(|c| c.label.clone()).collect::<Vec<_>>();
    assert_eq!(labels(&a), labels(&b));
}
