//! Randomized structural suites shared by the property and acceptance
//! targets. Each suite runs [`CASES`] cases from a fixed seed.

use std::collections::{BTreeMap, HashSet};
use std::sync::OnceLock;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

use ainerve::ainf::{
    catalog, check_ainf_relations, check_strict_units, degenerate_extension, full_subcategory,
    is_fully_faithful_embedding, is_quasi_equivalence, sufficient_dmax, AInfCategory, StrictFunctor,
};
use ainerve::colimit::{build_colimit, constant_diagram};
use ainerve::gf2::{Gf2Matrix, Gf2Vector};
use ainerve::nerve::{
    fill_inner_horn, horn_missing, is_nerve_simplex, nerve_truncation, Enumerator, NerveSimplex, NerveTruncation,
};
use ainerve::simplicial::{standard_simplex, OrdinalMap, SimplexRef, SimplicialSet};

pub const CASES: u32 = 500;

pub const SEED_SIMPLICIAL: u64 = 0x5eed_0001;
pub const SEED_EZ: u64 = 0x5eed_0002;
pub const SEED_FILLER: u64 = 0x5eed_0003;
pub const SEED_EXTENSION: u64 = 0x5eed_0004;
pub const SEED_GF2: u64 = 0x5eed_0005;

/// Runs `test` on `CASES` values of `strategy` drawn from `seed`; the
/// message names the suite, the case count and the seed.
pub fn run_suite<S: Strategy>(
    name: &str,
    seed: u64,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<String, String> {
    let mut bytes = [0u8; 32];
    bytes[..8].copy_from_slice(&seed.to_le_bytes());
    let config = Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    };
    let mut runner = TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &bytes));
    let line = format!("{name}: {CASES} cases, seed {seed:#x}");
    match runner.run(&strategy, test) {
        Ok(()) => Ok(line),
        Err(e) => Err(format!("{line}: {e}")),
    }
}

/// A simplicial set with, when it is a nerve, its category and simplices.
pub struct Fixture {
    pub name: &'static str,
    pub set: SimplicialSet,
    pub nerve: Option<(AInfCategory, NerveTruncation)>,
}

fn nerve_fixture(name: &'static str, cat: AInfCategory) -> Fixture {
    let t = nerve_truncation(&cat, 3).unwrap();
    Fixture {
        name,
        set: t.set.clone(),
        nerve: Some((cat, t)),
    }
}

/// Nerves, colimits of nerves and a standard simplex, all truncated at 3.
pub fn fixtures() -> &'static [Fixture] {
    static F: OnceLock<Vec<Fixture>> = OnceLock::new();
    F.get_or_init(|| {
        let edge = standard_simplex(1).with_cap(3).unwrap();
        let colimit = |a: &AInfCategory| build_colimit(&constant_diagram(&edge, a).unwrap(), 3).unwrap().total;
        vec![
            nerve_fixture("poset1", catalog::poset(1)),
            nerve_fixture("iso_pair", catalog::iso_pair()),
            nerve_fixture("acyclic_pair", catalog::acyclic_pair()),
            Fixture {
                name: "colimit(poset1)",
                set: colimit(&catalog::poset(1)),
                nerve: None,
            },
            Fixture {
                name: "colimit(discrete1)",
                set: colimit(&catalog::discrete(1)),
                nerve: None,
            },
            Fixture {
                name: "delta3",
                set: standard_simplex(3),
                nerve: None,
            },
        ]
    })
}

/// A random simplex of dimension `n` of `x`: a nondegenerate cell of
/// dimension `m ≤ n` under a surjection `[n] → [m]`.
fn pick_simplex(x: &SimplicialSet, n: usize, a: usize, b: usize) -> SimplexRef {
    let dims: Vec<usize> = (0..=n).filter(|&m| x.count(m) > 0).collect();
    let m = dims[a % dims.len()];
    let surjections = OrdinalMap::surjections(n, m);
    SimplexRef {
        base: b % x.count(m),
        degeneracy: surjections[b / x.count(m) % surjections.len()].clone(),
    }
}

fn check_eq<T: PartialEq + std::fmt::Debug>(a: T, b: T, what: &str) -> Result<(), TestCaseError> {
    prop_assert_eq!(a, b, "{}", what);
    Ok(())
}

/// Face and degeneracy identities on random simplices, at the level of
/// simplicial sets and, for nerves, of nerve simplices.
pub fn simplicial_identities() -> Result<String, String> {
    let fx = fixtures();
    let strategy = (0..fx.len(), 0usize..=3, any::<usize>(), any::<usize>());
    run_suite("simplicial identities", SEED_SIMPLICIAL, strategy, |(f, n, a, b)| {
        let x = &fx[f].set;
        let s = pick_simplex(x, n, a, b);
        let d = |s: &SimplexRef, i| x.face(s, i).unwrap();
        let sd = |s: &SimplexRef, i| x.degeneracy(s, i).unwrap();
        let cap = x.cap();
        for j in 0..=n {
            for i in 0..j {
                if n >= 2 {
                    check_eq(d(&d(&s, j), i), d(&d(&s, i), j - 1), "d_i d_j = d_{j-1} d_i")?;
                }
            }
        }
        if n < cap {
            for j in 0..=n {
                let t = sd(&s, j);
                check_eq(d(&t, j), s.clone(), "d_j s_j = id")?;
                check_eq(d(&t, j + 1), s.clone(), "d_{j+1} s_j = id")?;
                for i in 0..=n + 1 {
                    if i < j && n >= 1 {
                        check_eq(d(&t, i), sd(&d(&s, i), j - 1), "d_i s_j = s_{j-1} d_i")?;
                    } else if i > j + 1 && n >= 1 {
                        check_eq(d(&t, i), sd(&d(&s, i - 1), j), "d_i s_j = s_j d_{i-1}")?;
                    }
                }
            }
        }
        if n + 2 <= cap {
            for j in 0..=n {
                for i in 0..=j {
                    check_eq(sd(&sd(&s, j), i), sd(&sd(&s, i), j + 1), "s_i s_j = s_{j+1} s_i")?;
                }
            }
        }
        if let Some((cat, t)) = &fx[f].nerve {
            let c = t.simplex(cat, &s);
            for i in (0..=n).filter(|_| n > 0) {
                check_eq(
                    t.simplex(cat, &d(&s, i)),
                    c.face(cat, i),
                    "faces agree with nerve simplices",
                )?;
            }
            if n < cap {
                for i in 0..=n {
                    check_eq(t.simplex(cat, &sd(&s, i)), c.degeneracy(cat, i), "degeneracies agree")?;
                }
            }
        }
        Ok(())
    })
}

/// Degenerating a nondegenerate nerve simplex by a random word and
/// normalizing recovers the simplex and the word's surjection; simplicial
/// sets agree on the normal form.
pub fn ez_uniqueness() -> Result<String, String> {
    let fx = fixtures();
    let nerves: Vec<&Fixture> = fx.iter().filter(|f| f.nerve.is_some()).collect();
    let strategy = (
        0..nerves.len(),
        0usize..=3,
        any::<usize>(),
        prop::collection::vec(any::<usize>(), 0..=3),
    );
    run_suite("Eilenberg-Zilber uniqueness", SEED_EZ, strategy, |(f, m, a, raw)| {
        let (cat, t) = nerves[f].nerve.as_ref().unwrap();
        let x = &nerves[f].set;
        let base = a % x.count(m);
        let c = t.cell(m, base).clone();
        let word: Vec<usize> = raw
            .iter()
            .enumerate()
            .map(|(step, r)| r % (m + raw.len() - step))
            .collect();
        let n = m + word.len();
        let sigma = OrdinalMap::from_degeneracy_word(n, &word).unwrap();
        let mut y = c.clone();
        for &i in word.iter().rev() {
            y = y.degeneracy(cat, i);
        }
        check_eq(y.clone(), c.act(cat, &sigma), "letters agree with the surjection")?;
        let (b, s) = y.normalize(cat);
        check_eq(b, c.clone(), "normal form recovers the base")?;
        check_eq(s.clone(), sigma.clone(), "normal form recovers the surjection")?;
        check_eq(
            OrdinalMap::from_degeneracy_word(n, &sigma.degeneracy_word()).unwrap(),
            sigma.clone(),
            "canonical word round trip",
        )?;
        if n <= x.cap() {
            let mut r = SimplexRef::nondegenerate(m, base);
            for &i in word.iter().rev() {
                r = x.degeneracy(&r, i).unwrap();
            }
            check_eq(
                r.clone(),
                SimplexRef {
                    base,
                    degeneracy: sigma,
                },
                "set-level normal form",
            )?;
            check_eq(t.simplex(cat, &r), y, "set and nerve agree")?;
        }
        Ok(())
    })
}

/// Horns `Λ⁴_k` of a few categories, found by solving the nerve equations
/// on the horn's subsets for fixed vertex tuples.
fn four_horns() -> &'static [(usize, usize, NerveSimplex)] {
    static H: OnceLock<Vec<(usize, usize, NerveSimplex)>> = OnceLock::new();
    H.get_or_init(|| {
        let cats = filler_categories();
        let mut out = Vec::new();
        let tuples: [(usize, [usize; 5]); 3] = [(0, [0, 0, 1, 1, 1]), (2, [0, 1, 2, 3, 3]), (1, [0, 1, 0, 1, 0])];
        for (ci, vertices) in tuples {
            let cat = &cats[ci];
            for k in 1..4 {
                let [top, missing] = horn_missing(4, k);
                let family: Vec<u32> = (0u32..32)
                    .filter(|m| m.count_ones() >= 2 && *m != top && *m != missing)
                    .collect();
                let e = Enumerator::with_family(cat, 4, &family);
                let mut seen = 0usize;
                e.for_each(&vertices, &BTreeMap::new(), &mut |h| {
                    if seen % 7 == 0 && out.len() < 3000 {
                        out.push((ci, k, h.clone()));
                    }
                    seen += 1;
                });
            }
        }
        out
    })
}

fn filler_categories() -> &'static [AInfCategory] {
    static C: OnceLock<Vec<AInfCategory>> = OnceLock::new();
    C.get_or_init(|| {
        vec![
            catalog::poset(1),
            catalog::iso_pair(),
            catalog::linear_mu3(),
            catalog::acyclic_pair(),
        ]
    })
}

fn filler_truncations() -> &'static [NerveTruncation] {
    static T: OnceLock<Vec<NerveTruncation>> = OnceLock::new();
    T.get_or_init(|| {
        filler_categories()
            .iter()
            .map(|c| nerve_truncation(c, 3).unwrap())
            .collect()
    })
}

/// The explicit filler of a random inner horn agrees with the horn on
/// every subset the horn determines and is a nerve simplex.
pub fn filler_restricts_to_horn() -> Result<String, String> {
    let cats = filler_categories();
    let truncations = filler_truncations();
    let horns = four_horns();
    let strategy = (0..cats.len(), 2usize..=4, any::<usize>(), any::<usize>(), any::<u64>());
    run_suite(
        "filler restricts to horn",
        SEED_FILLER,
        strategy,
        |(ci, n, a, kr, noise)| {
            let (cat, horn, k) = if n == 4 {
                let (hc, k, h) = &horns[a % horns.len()];
                (&cats[*hc], h.clone(), *k)
            } else {
                let t = &truncations[ci];
                let cat = &cats[ci];
                let m = (kr / 7) % (n + 1);
                let m = if t.set.count(m) == 0 { 0 } else { m };
                let surj = OrdinalMap::surjections(n, m);
                let s = SimplexRef {
                    base: a % t.set.count(m),
                    degeneracy: surj[(a / t.set.count(m)) % surj.len()].clone(),
                };
                (cat, t.simplex(cat, &s), 1 + kr % (n - 1))
            };
            let [top, missing] = horn_missing(n, k);
            let mut scrambled = horn.clone();
            let (x, y) = (horn.vertices()[0], horn.vertices()[n]);
            let dim = cat.hom_dim(x, y);
            for (shift, mask) in [(0, top), (32, missing)] {
                let mut v = Gf2Vector::zero(dim);
                for i in 0..dim {
                    v.set(i, noise >> ((shift + i) % 64) & 1 == 1);
                }
                scrambled.set_mask(mask, v).unwrap();
            }
            let filler = fill_inner_horn(cat, &scrambled, k).map_err(|e| TestCaseError::fail(e.to_string()))?;
            prop_assert!(is_nerve_simplex(cat, &filler));
            for mask in (0u32..1 << (n + 1)).filter(|m| m.count_ones() >= 2 && *m != top && *m != missing) {
                prop_assert_eq!(filler.get_mask(mask), horn.get_mask(mask));
            }
            for i in (0..=n).filter(|&i| i != k) {
                prop_assert_eq!(filler.face(cat, i), horn.face(cat, i));
            }
            Ok(())
        },
    )
}

fn extension_categories() -> &'static [AInfCategory] {
    static C: OnceLock<Vec<AInfCategory>> = OnceLock::new();
    C.get_or_init(|| {
        vec![
            catalog::poset(1),
            catalog::poset(2),
            catalog::discrete(3),
            catalog::iso_pair(),
            catalog::acyclic_pair(),
            catalog::linear_mu3(),
        ]
    })
}

/// The degenerate extension along the inclusion of a random full
/// subcategory is a strictly unital A∞-category whose structure functors
/// are fully faithful and compose correctly.
pub fn degenerate_extension_validity() -> Result<String, String> {
    let cats = extension_categories();
    let strategy = (0..cats.len(), 1u32..16);
    run_suite(
        "degenerate extension validity",
        SEED_EXTENSION,
        strategy,
        |(ci, mask)| {
            let c = &cats[ci];
            let k = c.object_count();
            let mut objects: Vec<usize> = (0..k).filter(|&x| mask >> x & 1 == 1).collect();
            if objects.is_empty() {
                objects.push(mask as usize % k);
            }
            let (d, i) = full_subcategory(c, &objects).unwrap();
            let ext = degenerate_extension(c, &d, &i).map_err(|e| TestCaseError::fail(e.to_string()))?;
            let e = &ext.category;
            prop_assert_eq!(e.object_count(), k + objects.len());
            prop_assert!(check_strict_units(e).is_none());
            prop_assert!(check_ainf_relations(e, sufficient_dmax(e)).is_none());
            ext.projection.validate(e, c).unwrap();
            ext.embed_old.validate(c, e).unwrap();
            ext.embed_copy.validate(&d, e).unwrap();
            prop_assert!(is_fully_faithful_embedding(&ext.embed_old, c, e));
            prop_assert!(is_fully_faithful_embedding(&ext.embed_copy, &d, e));
            prop_assert_eq!(ext.embed_old.then(&ext.projection).unwrap(), StrictFunctor::identity(c));
            prop_assert_eq!(ext.embed_copy.then(&ext.projection).unwrap(), i.clone());
            prop_assert!(is_quasi_equivalence(&ext.projection, e, c));
            Ok(())
        },
    )
}

fn matrix_strategy() -> impl Strategy<Value = (Gf2Matrix, Gf2Vector)> {
    (1usize..=7, 1usize..=7).prop_flat_map(|(r, c)| {
        (
            prop::collection::vec(prop::collection::vec(any::<bool>(), c), r),
            prop::collection::vec(any::<bool>(), r),
        )
            .prop_map(move |(rows, b)| {
                let rows = rows.iter().map(|row| Gf2Vector::from_bits(row)).collect();
                (Gf2Matrix::from_rows(c, rows).unwrap(), Gf2Vector::from_bits(&b))
            })
    })
}

/// Solving, rank, kernel and inverse against enumeration of all vectors.
pub fn gf2_solver() -> Result<String, String> {
    run_suite("GF(2) solver vs brute force", SEED_GF2, matrix_strategy(), |(m, b)| {
        let n = m.cols();
        let solutions: HashSet<Gf2Vector> = Gf2Vector::all(n).filter(|x| m.mul_vec(x).unwrap() == b).collect();
        let kernel_size = Gf2Vector::all(n).filter(|x| m.mul_vec(x).unwrap().is_zero()).count();
        prop_assert_eq!(1usize << (n - m.rank()), kernel_size);
        let kernel = m.kernel();
        prop_assert_eq!(kernel.len(), n - m.rank());
        for v in &kernel {
            prop_assert!(m.mul_vec(v).unwrap().is_zero());
        }
        match m.solve_affine(&b).unwrap() {
            None => prop_assert!(solutions.is_empty()),
            Some(sol) => {
                prop_assert!(solutions.contains(&sol.particular));
                let k = sol.kernel_basis.len();
                prop_assert_eq!(1usize << k, solutions.len());
                let mut span = HashSet::new();
                for bits in 0u32..1 << k {
                    let mut x = sol.particular.clone();
                    for (i, v) in sol.kernel_basis.iter().enumerate() {
                        if bits >> i & 1 == 1 {
                            x.add_assign(v).unwrap();
                        }
                    }
                    span.insert(x);
                }
                prop_assert_eq!(span, solutions);
            }
        }
        if m.rows() == n {
            let invertible = kernel_size == 1;
            match m.inverse() {
                Some(inv) => {
                    prop_assert!(invertible);
                    prop_assert_eq!(m.mul(&inv).unwrap(), Gf2Matrix::identity(n));
                    prop_assert_eq!(inv.mul(&m).unwrap(), Gf2Matrix::identity(n));
                }
                None => prop_assert!(!invertible),
            }
        }
        Ok(())
    })
}

/// Every suite, in a fixed order.
pub fn all_suites() -> Vec<(&'static str, fn() -> Result<String, String>)> {
    vec![
        ("simplicial identities", simplicial_identities),
        ("Eilenberg-Zilber uniqueness", ez_uniqueness),
        ("filler restricts to horn", filler_restricts_to_horn),
        ("degenerate extension validity", degenerate_extension_validity),
        ("GF(2) solver", gf2_solver),
    ]
}
