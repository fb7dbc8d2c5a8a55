//! The published numeric claims, each as a self-contained check. Run by the
//! `verify-paper` command and by the acceptance test target.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::constants::{
    check_cyclic, cyclic_conjugate, d_lambda, f_lambda, h_set, lambda_sigma, psi_h, psi_v, verify_identity,
    DisjointChecker, Fit, WordClasses,
};
use crate::insertion::insert;
use crate::korder::{
    all_chains, chain_inversions, chain_to_word, cm_chain, dcm_chain, dcm_chain_by_symmetry, leq_k,
    Chain, MarkedInterval,
};
use crate::perm::{Composition, Partition, Permutation};
use crate::umonoid::{
    canonical_word, count_reduced_words, evaluate_word, rank_polynomial, reduced_words,
    rewrite_closure, universal_length, universal_length_by_interval, universal_length_closed_form,
    zero_relation_sites, Generator, MaybePermutation, Word,
};

/// A check's summary on success, or a description of the first failure.
pub type Outcome = std::result::Result<String, String>;

pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    run: fn() -> Outcome,
}

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl Criterion {
    pub fn run(&self) -> CriterionResult {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(self.run)
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let (passed, detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        CriterionResult {
            id: self.id,
            title: self.title,
            passed,
            detail,
            elapsed: start.elapsed(),
        }
    }
}

pub const CRITERIA: [Criterion; 11] = [
    Criterion { id: 1, title: "rank polynomials P_1..P_8", run: rank_polynomials },
    Criterion { id: 2, title: "five-chain interval, canonical words and closure", run: five_chain_interval },
    Criterion { id: 3, title: "CM and DCM chains of [216435, 456123]_3", run: displayed_chains },
    Criterion { id: 4, title: "constants of 254163", run: example_constants },
    Criterion { id: 5, title: "nonnegative λ_σ for λ = (2,1,1,1)", run: lambda_sigma_list },
    Criterion { id: 6, title: "rewriting soundness", run: rewriting_soundness },
    Criterion { id: 7, title: "symmetries of c_λ and of chain classes", run: symmetry_suite },
    Criterion { id: 8, title: "cyclic shift identity", run: cyclic_shift },
    Criterion { id: 9, title: "disjoint product identity", run: disjoint_products },
    Criterion { id: 10, title: "insertion bijectivity", run: insertion_bijectivity },
    Criterion { id: 11, title: "oracle equivalences", run: oracle_equivalences },
];

pub fn run_all() -> Vec<CriterionResult> {
    CRITERIA.iter().map(Criterion::run).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn perm(s: &str) -> Permutation {
    s.parse().expect("literal permutation")
}

fn lam(s: &str) -> Partition {
    s.parse().expect("literal partition")
}

fn paper_word(pairs: &[(usize, usize)]) -> Word {
    Word::from_paper_pairs(pairs).expect("literal word")
}

fn sweep<T: Sync>(items: &[T], f: impl Fn(&T) -> std::result::Result<(), String> + Sync) -> std::result::Result<(), String> {
    items.par_iter().try_for_each(&f)
}

fn all_intervals(n: usize) -> Vec<MarkedInterval> {
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    (1..n)
        .flat_map(|k| {
            let perms = &perms;
            perms.iter().flat_map(move |u| {
                perms
                    .iter()
                    .filter(move |w| leq_k(u, w, k))
                    .map(move |w| MarkedInterval { u: u.clone(), w: w.clone(), k })
            })
        })
        .collect()
}

fn rank_polynomials() -> Outcome {
    let expected: [&[i64]; 8] = [
        &[1],
        &[1, 1],
        &[1, 3, 2],
        &[1, 6, 10, 6, 1],
        &[1, 10, 30, 40, 27, 10, 2],
        &[1, 15, 70, 155, 195, 156, 86, 33, 8, 1],
        &[1, 21, 140, 455, 875, 1120, 1038, 735, 406, 175, 58, 14, 2],
        &[1, 28, 252, 1120, 2996, 5432, 7252, 7562, 6398, 4492, 2652, 1324, 556, 192, 52, 10, 1],
    ];
    for (i, coeffs) in expected.iter().enumerate() {
        let n = i + 1;
        let p = rank_polynomial(n).map_err(|e| e.to_string())?;
        ensure(p.coeffs() == *coeffs, || format!("P_{n} = {p}"))?;
    }
    Ok("P_1..P_8 match coefficient for coefficient".into())
}

fn five_chain_interval() -> Outcome {
    let iv = MarkedInterval::new(perm("2,1,4,3,5"), perm("4,5,1,2,3"), 2).map_err(|e| e.to_string())?;
    let chains = all_chains(&iv);
    ensure(chains.len() == 5, || format!("{} chains", chains.len()))?;
    let cm = chain_to_word(&cm_chain(&iv).map_err(|e| e.to_string())?);
    ensure(cm == paper_word(&[(3, 4), (2, 3), (4, 5), (1, 4)]), || format!("CM word {cm}"))?;
    let dcm = chain_to_word(&dcm_chain(&iv).map_err(|e| e.to_string())?);
    ensure(dcm == paper_word(&[(3, 4), (4, 5), (2, 3), (1, 4)]), || format!("DCM word {dcm}"))?;
    let closure: BTreeSet<Word> = rewrite_closure(&cm).map_err(|e| e.to_string())?.into_iter().collect();
    let words: BTreeSet<Word> = chains.iter().map(chain_to_word).collect();
    ensure(closure == words, || "closure differs from the chain words".into())?;
    for w in [paper_word(&[(3, 5), (2, 3), (1, 2), (2, 4)]), paper_word(&[(3, 5), (1, 3), (3, 4), (2, 3)])] {
        ensure(closure.contains(&w), || format!("closure lacks {w}"))?;
    }
    Ok("5 chains; CM, DCM and closure as displayed".into())
}

fn displayed_chains() -> Outcome {
    let iv = MarkedInterval::new(perm("2,1,6,4,3,5"), perm("4,5,6,1,2,3"), 3).map_err(|e| e.to_string())?;
    let column = |steps: &[&str]| Chain::from_steps(steps.iter().map(|s| perm(s)).collect());
    let cm = cm_chain(&iv).map_err(|e| e.to_string())?;
    let cm_expected = column(&["2,1,6,4,3,5", "2,4,6,1,3,5", "2,5,6,1,3,4", "3,5,6,1,2,4", "4,5,6,1,2,3"]);
    ensure(cm == cm_expected, || format!("CM chain {:?}", cm.steps()))?;
    ensure(cm.positions()[0] == (2, 4), || format!("first CM step {:?}", cm.positions()[0]))?;
    let dcm = dcm_chain(&iv).map_err(|e| e.to_string())?;
    let dcm_expected = column(&["2,1,6,4,3,5", "2,4,6,1,3,5", "3,4,6,1,2,5", "3,5,6,1,2,4", "4,5,6,1,2,3"]);
    ensure(dcm == dcm_expected, || format!("DCM chain {:?}", dcm.steps()))?;
    let middle = column(&["2,1,6,4,3,5", "3,1,6,4,2,5", "4,1,6,3,2,5", "4,3,6,1,2,5", "4,5,6,1,2,3"]);
    ensure(all_chains(&iv).contains(&middle), || "middle chain is not maximal".into())?;
    let inv = chain_inversions(&middle, &iv.w);
    ensure(inv == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)], || format!("inversions {inv:?}"))?;
    Ok("CM, DCM and middle-chain inversions as displayed".into())
}

fn example_constants() -> Outcome {
    let z = perm("2,5,4,1,6,3");
    let words = reduced_words(&z);
    ensure(words.len() == 14, || format!("|R_u| = {}", words.len()))?;
    let c = |s: &str| s.parse::<Composition>().expect("literal composition");
    let h221: BTreeSet<Word> = h_set(&z, &c("2,2,1")).into_iter().collect();
    let listed: BTreeSet<Word> = [
        paper_word(&[(1, 2), (3, 5), (2, 3), (5, 6), (3, 4)]),
        paper_word(&[(3, 4), (4, 5), (1, 2), (5, 6), (2, 4)]),
    ]
    .into_iter()
    .collect();
    ensure(h221 == listed, || format!("H_(2,2,1) = {h221:?}"))?;
    for (p, size) in [("1,3,1", 0), ("2,0,3", 0), ("2,1,1,1", 5), ("2,1,0,2", 2), ("2,0,2,1", 2)] {
        let got = h_set(&z, &c(p)).len();
        ensure(got == size, || format!("|H_({p})| = {got}"))?;
    }
    let report = verify_identity(&z).map_err(|e| e.to_string())?;
    for entry in &report.c {
        let expected = if entry.lambda == lam("2,2,1") {
            2
        } else if entry.lambda == lam("2,1,1,1") {
            1
        } else {
            0
        };
        ensure(entry.value == expected, || format!("c_({}) = {}", entry.lambda, entry.value))?;
    }
    let total = f_lambda(&lam("2,2,1")) * 2 + f_lambda(&lam("2,1,1,1"));
    ensure(report.identity_ok && report.chains == 14 && total == 14, || "14 = 5·2 + 4·1 fails".into())?;
    let d = d_lambda(&z, &lam("2,1,1,1")).map_err(|e| e.to_string())?;
    ensure(d.len() == 9, || format!("|D_(2,1,1,1)| = {}", d.len()))?;
    Ok("14 chains; H sets, c_(2,2,1) = 2, c_(2,1,1,1) = 1, 14 = 5·2 + 4·1, |D| = 9".into())
}

fn lambda_sigma_list() -> Outcome {
    let l = lam("2,1,1,1");
    let found: BTreeSet<Composition> = Permutation::all(4)
        .map(|s| lambda_sigma(&l, &s))
        .filter(|c| !c.has_negative())
        .collect();
    let expected: BTreeSet<Composition> = [
        "2,1,1,1", "2,1,0,2", "2,0,2,1", "2,0,0,3", "0,3,1,1", "0,3,0,2", "0,0,4,1", "0,0,0,5",
    ]
    .iter()
    .map(|s| s.parse().expect("literal composition"))
    .collect();
    ensure(found == expected, || format!("{found:?}"))?;
    Ok("8 compositions as listed".into())
}

fn rewriting_soundness() -> Outcome {
    let s5: Vec<Permutation> = Permutation::all(5).collect();
    sweep(&s5, |z| {
        let closure = rewrite_closure(&canonical_word(z)).map_err(|e| format!("{z}: {e}"))?;
        ensure(closure == reduced_words(z), || format!("closure of {z} is not R_u"))
    })?;
    let gens: Vec<Generator> = (1..5)
        .flat_map(|a| (a + 1..=5).map(move |b| Generator::new(a, b).expect("valid generator")))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let samples: Vec<Word> = (0..10_000)
        .map(|_| {
            let len = rng.random_range(0..=5);
            Word::new((0..len).map(|_| gens[rng.random_range(0..gens.len())]).collect())
        })
        .collect();
    let nonzero = samples.iter().filter(|x| !evaluate_word(x).is_zero()).count();
    sweep(&samples, |x| match evaluate_word(x) {
        MaybePermutation::Zero => {
            let product = x
                .gens()
                .iter()
                .fold(Permutation::identity(), |acc, g| g.transposition().compose(&acc));
            ensure(!reduced_words(&product).contains(x), || format!("zero word {x} is reduced"))
        }
        MaybePermutation::Perm(z) => {
            let closure = rewrite_closure(x).map_err(|e| format!("{x}: {e}"))?;
            ensure(closure == reduced_words(&z), || format!("closure of {x} is not R_u({z})"))?;
            ensure(
                closure.iter().all(|y| zero_relation_sites(y).is_empty()),
                || format!("relation (4) or (5) applies inside the class of {x}"),
            )
        }
    })?;
    Ok(format!("S_5 closures equal R_u; 10000 random words ({nonzero} non-zero) consistent"))
}

fn symmetry_suite() -> Outcome {
    check_constant_symmetries(5)?;
    check_word_maps(4)?;
    Ok("inverse/conjugate, ω₀, dual routes on S_5; φ*_a and Ψ bijections on S_4".into())
}

/// `c_λ(ζ) = c_λᵗ(ζ⁻¹) = c_λᵗ(ω₀ζω₀)`, and both dual sums equal `c_λ`, for
/// every `ζ ∈ S_n`.
pub fn check_constant_symmetries(n: usize) -> Outcome {
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    sweep(&perms, |z| {
        let here = WordClasses::new(z).map_err(|e| e.to_string())?;
        let inverse = WordClasses::new(&z.inverse()).map_err(|e| e.to_string())?;
        let flipped = WordClasses::new(&z.omega_conjugate(n).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        for lambda in Partition::all_of(here.rank()) {
            let c = here.c_constant(&lambda).map_err(|e| e.to_string())?;
            let t = lambda.conjugate();
            let a = inverse.c_constant(&t).map_err(|e| e.to_string())?;
            let b = flipped.c_constant(&t).map_err(|e| e.to_string())?;
            let dual = here.c_constant_dual(&lambda).map_err(|e| e.to_string())?;
            ensure(c == a, || format!("c_{lambda}({z}) = {c} but inverse gives {a}"))?;
            ensure(c == b, || format!("c_{lambda}({z}) = {c} but ω₀-conjugate gives {b}"))?;
            ensure(c == dual, || format!("c_{lambda}({z}) = {c} but dual routes give {dual}"))?;
        }
        Ok(())
    })?;
    Ok(format!("constant symmetries hold on S_{n} ({} permutations)", perms.len()))
}

/// `φ*_a` preserves every constant for `a ≤ n + 2`, and `Ψ_h`, `Ψ_v` map
/// each `H_p(ζ)` bijectively onto `E_{←p}(ζ⁻¹)` and `E′_p(ω₀ζω₀)`, for every
/// `ζ ∈ S_n`.
pub fn check_word_maps(n: usize) -> Outcome {
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    sweep(&perms, |z| {
        let here = WordClasses::new(z).map_err(|e| e.to_string())?;
        let table = here.table().map_err(|e| e.to_string())?;
        for a in 1..=n + 2 {
            let shifted = WordClasses::new(&z.phi_star(a)).map_err(|e| e.to_string())?;
            ensure(shifted.table().map_err(|e| e.to_string())? == table, || format!("φ*_{a} changes c of {z}"))?;
        }
        let inverse = WordClasses::new(&z.inverse()).map_err(|e| e.to_string())?;
        let flipped = WordClasses::new(&z.omega_conjugate(n).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        for r in 1..=here.rank() + 1 {
            for p in Composition::all_weak(here.rank(), r) {
                let h = here.set(&p, Fit::IncreasingAlpha);
                let by_h: BTreeSet<Word> = h.iter().map(psi_h).collect();
                let e: BTreeSet<Word> = inverse.set(&p.reversed(), Fit::DecreasingAlpha).into_iter().collect();
                ensure(by_h.len() == h.len() && by_h == e, || format!("Ψ_h on H_{p:?}({z})"))?;
                let by_v = h
                    .iter()
                    .map(|x| psi_v(x, n))
                    .collect::<crate::Result<BTreeSet<Word>>>()
                    .map_err(|e| e.to_string())?;
                let e_prime: BTreeSet<Word> = flipped.set(&p, Fit::DecreasingBeta).into_iter().collect();
                ensure(by_v.len() == h.len() && by_v == e_prime, || format!("Ψ_v on H_{p:?}({z})"))?;
            }
        }
        Ok(())
    })?;
    Ok(format!("φ*_a, Ψ_h and Ψ_v behave on S_{n} ({} permutations)", perms.len()))
}

fn cyclic_shift() -> Outcome {
    check_cyclic_all(5)?;
    check_cyclic_counts(6)?;
    Ok("all constants agree on S_5; chain counts agree on S_6".into())
}

/// [`check_cyclic`] for every `ζ ∈ S_n`.
pub fn check_cyclic_all(n: usize) -> Outcome {
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    sweep(&perms, |z| {
        ensure(check_cyclic(z, n).map_err(|e| e.to_string())?, || format!("constants of {z} change"))
    })?;
    Ok(format!("all constants agree under cyclic conjugation on S_{n}"))
}

/// `|R_u(ζ)| = |R_u(γζγ⁻¹)|` for every `ζ ∈ S_n`.
pub fn check_cyclic_counts(n: usize) -> Outcome {
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    sweep(&perms, |z| {
        let conj = cyclic_conjugate(z, n).map_err(|e| e.to_string())?;
        let (a, b) = (count_reduced_words(z), count_reduced_words(&conj));
        ensure(a == b, || format!("|R_u({z})| = {a} but {b} after conjugation"))
    })?;
    Ok(format!("chain counts agree under cyclic conjugation on S_{n}"))
}

fn disjoint_products() -> Outcome {
    check_disjoint_sweep(6, 3)
}

/// The product identity for every u-disjoint pair in `S_n` whose factors
/// have `ℓ_u ≤ max_len`.
pub fn check_disjoint_sweep(n: usize, max_len: usize) -> Outcome {
    let small: Vec<Permutation> = Permutation::all(n)
        .filter(|z| !z.is_identity() && universal_length(z) <= max_len)
        .collect();
    let chunks: Vec<&[Permutation]> = small.chunks(small.len().div_ceil(32).max(1)).collect();
    let counts = chunks
        .par_iter()
        .map(|chunk| {
            let mut checker = DisjointChecker::default();
            let mut pairs = 0usize;
            for e in *chunk {
                for z in &small {
                    if checker.is_u_disjoint(e, z).map_err(|err| err.to_string())? {
                        pairs += 1;
                        let ok = checker.check(e, z).map_err(|err| err.to_string())?;
                        ensure(ok, || format!("identity fails for η = {e}, ζ = {z}"))?;
                    }
                }
            }
            Ok(pairs)
        })
        .collect::<std::result::Result<Vec<usize>, String>>()?;
    let pairs: usize = counts.iter().sum();
    ensure(pairs > 0, || "no disjoint pairs found".into())?;
    Ok(format!("{pairs} u-disjoint pairs checked"))
}

fn insertion_bijectivity() -> Outcome {
    let s5: Vec<Permutation> = Permutation::all(5)
        .filter(|z| (1..=4).contains(&universal_length(z)))
        .collect();
    sweep(&s5, |z| {
        let n = universal_length(z) as i64 - 1;
        let source = h_set(z, &Composition::new(vec![1, n]));
        let target: BTreeSet<Word> = h_set(z, &Composition::new(vec![n, 1])).into_iter().collect();
        let mut image = BTreeSet::new();
        for x in &source {
            let trace = insert(x).map_err(|e| format!("{x}: {e}"))?;
            ensure(
                evaluate_word(&trace.result) == MaybePermutation::Perm(z.clone()),
                || format!("insertion of {x} changes the evaluation"),
            )?;
            image.insert(trace.result);
        }
        ensure(image.len() == source.len(), || format!("insertion is not injective on {z}"))?;
        ensure(image == target, || format!("insertion image differs from H_(n,1)({z})"))
    })?;
    Ok(format!("{} permutations, bijective and evaluation preserving", s5.len()))
}

fn oracle_equivalences() -> Outcome {
    let s6: Vec<Permutation> = Permutation::all(6).collect();
    sweep(&s6, |z| {
        let (a, b) = (universal_length_closed_form(z), universal_length_by_interval(z));
        ensure(a == b, || format!("ℓ_u({z}): closed form {a}, interval {b}"))
    })?;
    let intervals = all_intervals(5);
    sweep(&intervals, |iv| {
        let err = |e: crate::Error| e.to_string();
        let direct = dcm_chain(iv).map_err(err)?;
        let mirrored = dcm_chain_by_symmetry(iv).map_err(err)?;
        ensure(direct == mirrored, || format!("DCM routes differ on [{}, {}]_{}", iv.u, iv.w, iv.k))?;
        let cm = cm_chain(iv).map_err(err)?;
        for c in all_chains(iv) {
            let no_inversions = chain_inversions(&c, &iv.w).is_empty();
            ensure(no_inversions == (c == cm), || format!("inversion criterion fails on [{}, {}]_{}", iv.u, iv.w, iv.k))?;
        }
        Ok(())
    })?;
    Ok(format!("ℓ_u on S_6; DCM and inversion criterion on {} intervals of S_5", intervals.len()))
}
