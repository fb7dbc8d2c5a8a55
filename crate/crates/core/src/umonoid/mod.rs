//! The monoid `ℳ` with zero, generated by `u_{αβ}` (`α < β`), acting on
//! `S_∞ ∪ {0}`.
//!
//! `û_{αβ}` sends `η` to `(α β)η` when that raises the universal rank `ℓ_u`
//! by one and to zero otherwise. A word is evaluated by applying its factors
//! to the identity; non-zero words for `ζ` are exactly the maximal chains of
//! `[1, ζ]_⪯`, which are enumerated through the k-Bruhat interval built by
//! [`standard_interval`].

pub mod hasse;
pub mod poly;
pub mod rewrite;
pub mod word;

use crate::korder::{self, leq_k, MarkedInterval};
use crate::perm::Permutation;

pub use hasse::{mobius, universal_interval, HasseGraph};
pub use poly::{rank_polynomial, rank_polynomial_bounded, IntPolynomial, DEFAULT_MAX_N};
pub use rewrite::{rewrite_closure, rewrite_neighbors, zero_relation_sites, Relation};
pub use word::{Generator, MaybePermutation, Word, WordJson, WordOrder};

/// `ℓ_u(ζ)` from the four-term inversion count over `up(ζ)` and `dw(ζ)`.
pub fn universal_length_closed_form(z: &Permutation) -> usize {
    let m = z.support_bound();
    let sets = z.up_dw_fix();
    let rises: Vec<usize> = (1..=m).filter(|&a| a < z.apply(a)).collect();
    let falls: Vec<usize> = (1..=m).filter(|&a| a > z.apply(a)).collect();
    let crossing = |xs: &[usize], ys: &[usize]| {
        xs.iter()
            .map(|&i| ys.iter().filter(|&&j| i > j).count())
            .sum::<usize>()
    };
    let inversions = |xs: &[usize]| {
        let mut n = 0;
        for (p, &i) in xs.iter().enumerate() {
            for &j in &xs[p + 1..] {
                if z.apply(i) > z.apply(j) {
                    n += 1;
                }
            }
        }
        n
    };
    let positive = crossing(&sets.up, &sets.dw);
    let negative = crossing(&rises, &falls) + inversions(&rises) + inversions(&falls);
    assert!(positive >= negative, "negative universal length for {z}");
    positive - negative
}

/// `ℓ_u(ζ) = ℓ(ζu) − ℓ(u)` on the standard interval of `ζ`.
pub fn universal_length_by_interval(z: &Permutation) -> usize {
    let iv = standard_interval(z);
    iv.w.length() - iv.u.length()
}

/// The rank of `ζ` in the universal order. Both routes are evaluated and
/// must agree.
pub fn universal_length(z: &Permutation) -> usize {
    let closed = universal_length_closed_form(z);
    let by_interval = universal_length_by_interval(z);
    assert_eq!(
        closed, by_interval,
        "closed-form and interval universal lengths disagree for {z}"
    );
    closed
}

/// The interval `[ζ⁻¹w, w]_k` where `w` lists `up(ζ)` in increasing order
/// followed by the remaining values in increasing order and `k = |up(ζ)|`.
pub fn standard_interval(z: &Permutation) -> MarkedInterval {
    let sets = z.up_dw_fix();
    let k = sets.up.len();
    let mut window = sets.up;
    window.extend(sets.dw);
    window.extend(sets.fix);
    window[k..].sort_unstable();
    let w = Permutation::from_window_unchecked(window);
    let u = z.inverse().compose(&w);
    debug_assert!(leq_k(&u, &w, k), "standard interval of {z} is empty");
    MarkedInterval { u, w, k }
}

/// `ζ` covers `η` in `⪯`: one rank higher and above `η`.
pub fn covers_universal(eta: &Permutation, z: &Permutation) -> bool {
    universal_length(z) == universal_length(eta) + 1 && leq_universal(eta, z)
}

/// `û_{αβ} h`: `(α β)h` when it covers `h` in `⪯`, zero otherwise. A rise
/// of `ℓ_u` by one is necessary but not sufficient, e.g. `(1 5)·(4 5)` has
/// rank 2 without lying above `(4 5)`.
pub fn apply_generator(g: Generator, h: &MaybePermutation) -> MaybePermutation {
    match h {
        MaybePermutation::Zero => MaybePermutation::Zero,
        MaybePermutation::Perm(eta) => {
            let next = eta.swap_values(g.alpha(), g.beta());
            if covers_universal(eta, &next) {
                MaybePermutation::Perm(next)
            } else {
                MaybePermutation::Zero
            }
        }
    }
}

/// `x̂ 1`: the factors applied in order to the identity.
pub fn evaluate_word(x: &Word) -> MaybePermutation {
    x.gens()
        .iter()
        .fold(MaybePermutation::Perm(Permutation::identity()), |acc, &g| {
            apply_generator(g, &acc)
        })
}

/// `η ⪯ ζ`, decided on the standard interval `[u, ζu]_k` of `ζ` as
/// `u ≤_k ηu ≤_k ζu`.
pub fn leq_universal(eta: &Permutation, z: &Permutation) -> bool {
    let iv = standard_interval(z);
    let mid = eta.compose(&iv.u);
    leq_k(&iv.u, &mid, iv.k) && leq_k(&mid, &iv.w, iv.k)
}

/// `η ⪯ ζ` read off the values of `η` and `ζ` alone. With `R` the
/// positions `ζ` raises and `F` those it lowers or fixes:
///
/// - `α ≤ η(α) ≤ ζ(α)` on `R` and `α ≥ η(α) ≥ ζ(α)` on `F`;
/// - for `α < β` in the same class with `ζ(α) < ζ(β)`, also
///   `η(α) < η(β)`.
///
/// These are the conditions `u ≤_k ηu ≤_k ζu` unpack to on the standard
/// interval, where `u` lists `R` then `F`, each ordered by `ζ`.
pub fn leq_universal_direct(eta: &Permutation, z: &Permutation) -> bool {
    let m = z.support_bound().max(eta.support_bound());
    let (rises, rest): (Vec<usize>, Vec<usize>) = (1..=m).partition(|&a| a < z.apply(a));
    let between = rises
        .iter()
        .all(|&a| a <= eta.apply(a) && eta.apply(a) <= z.apply(a))
        && rest
            .iter()
            .all(|&a| a >= eta.apply(a) && eta.apply(a) >= z.apply(a));
    let keeps = |xs: &[usize]| {
        xs.iter().enumerate().all(|(p, &a)| {
            xs[p + 1..]
                .iter()
                .all(|&b| z.apply(a) > z.apply(b) || eta.apply(a) < eta.apply(b))
        })
    };
    between && keeps(&rises) && keeps(&rest)
}

/// All u-reduced words of `ζ`, in lexicographic order of their generator
/// sequences.
pub fn reduced_words(z: &Permutation) -> Vec<Word> {
    korder::all_chains(&standard_interval(z))
        .iter()
        .map(korder::chain_to_word)
        .collect()
}

/// `|R_u(ζ)|` without materialising the words.
pub fn count_reduced_words(z: &Permutation) -> u64 {
    korder::count_chains(&standard_interval(z))
}

/// The CM-chain of the standard interval, as a word.
pub fn canonical_word(z: &Permutation) -> Word {
    let chain = korder::cm_chain(&standard_interval(z))
        .expect("the CM-chain of a standard interval exists");
    korder::chain_to_word(&chain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::korder::{count_chains, MarkedInterval};

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn g(a: usize, b: usize) -> Generator {
        Generator::new(a, b).unwrap()
    }

    #[test]
    fn universal_length_examples() {
        assert_eq!(universal_length(&Permutation::identity()), 0);
        assert_eq!(universal_length(&Permutation::transposition(1, 4)), 1);
        assert_eq!(
            p("4,1,2,3").length() - p("1,4,2,3").length(),
            1,
            "hand-computed standard interval of (1 4)"
        );
        assert_eq!(universal_length(&p("2,5,4,1,6,3")), 5);
    }

    #[test]
    fn closed_form_matches_interval_route_on_s6() {
        for z in Permutation::all(6) {
            assert_eq!(
                universal_length_closed_form(&z),
                universal_length_by_interval(&z),
                "{z}"
            );
        }
    }

    #[test]
    fn standard_interval_examples() {
        let s = standard_interval(&Permutation::identity());
        assert_eq!((s.u, s.w, s.k), (Permutation::identity(), Permutation::identity(), 0));
        let s = standard_interval(&p("2,5,4,1,6,3"));
        assert_eq!((s.u, s.w, s.k), (p("1,3,2,5,4,6"), p("2,4,5,6,1,3"), 4));
        let s = standard_interval(&p("2,1"));
        assert_eq!((s.u, s.w, s.k), (Permutation::identity(), p("2,1"), 1));
        let s = standard_interval(&p("5,4,2,1,3"));
        assert_eq!((s.u, s.w, s.k), (p("2,1,4,3,5"), p("4,5,1,2,3"), 2));
    }

    #[test]
    fn apply_generator_examples() {
        let id = MaybePermutation::Perm(Permutation::identity());
        assert_eq!(apply_generator(g(1, 2), &id), MaybePermutation::Perm(p("2,1")));
        assert_eq!(
            apply_generator(g(1, 2), &MaybePermutation::Perm(p("2,1"))),
            MaybePermutation::Zero
        );
        assert_eq!(apply_generator(g(1, 2), &MaybePermutation::Zero), MaybePermutation::Zero);
    }

    #[test]
    fn evaluate_word_examples() {
        assert_eq!(evaluate_word(&Word::empty()), MaybePermutation::Perm(Permutation::identity()));
        let cm = Word::from_pairs(&[(1, 4), (4, 5), (2, 3), (3, 4)]).unwrap();
        assert_eq!(evaluate_word(&cm), MaybePermutation::Perm(p("5,4,2,1,3")));
        let twice = Word::from_pairs(&[(1, 2), (1, 2)]).unwrap();
        assert!(evaluate_word(&twice).is_zero());
    }

    #[test]
    fn evaluation_agrees_with_generator_fold() {
        let words = reduced_words(&p("2,5,4,1,6,3"));
        for w in words.iter().take(5) {
            let folded = w
                .gens()
                .iter()
                .fold(MaybePermutation::Perm(Permutation::identity()), |acc, &g| {
                    apply_generator(g, &acc)
                });
            assert_eq!(folded, evaluate_word(w));
        }
    }

    #[test]
    fn leq_universal_examples() {
        for z in Permutation::all(4) {
            assert!(leq_universal(&Permutation::identity(), &z));
            assert!(leq_universal(&z, &z));
        }
        assert!(leq_universal(&p("4,2,3,1"), &p("5,4,2,1,3")));
        assert!(!leq_universal(&p("2,1"), &p("1,3,2")));
    }

    // A non-zero application is a top cover `ηu <_k ζu` inside the standard
    // interval of `ζ = (α β)η`.
    #[test]
    fn generator_action_matches_k_covers_in_s5() {
        for eta in Permutation::all(5) {
            for a in 1..5 {
                for b in a + 1..=5 {
                    let next = eta.swap_values(a, b);
                    let iv = standard_interval(&next);
                    let mid = eta.compose(&iv.u);
                    let is_cover = leq_k(&iv.u, &mid, iv.k)
                        && korder::covers_k(&mid, iv.k, &iv.w).iter().any(|c| c.perm == iv.w);
                    let applied = apply_generator(g(a, b), &MaybePermutation::Perm(eta.clone()));
                    assert_eq!(!applied.is_zero(), is_cover, "{eta} by ({a},{b})");
                }
            }
        }
    }

    #[test]
    fn rank_rise_alone_is_not_a_cover() {
        let eta = Permutation::transposition(4, 5);
        let next = eta.swap_values(1, 5);
        assert_eq!(universal_length(&next), universal_length(&eta) + 1);
        assert!(!leq_universal(&eta, &next));
        assert!(apply_generator(g(1, 5), &MaybePermutation::Perm(eta)).is_zero());
    }

    #[test]
    fn direct_conditions_match_interval_definition_in_s5() {
        let perms: Vec<_> = Permutation::all(5).collect();
        for z in &perms {
            for eta in &perms {
                assert_eq!(leq_universal_direct(eta, z), leq_universal(eta, z), "{eta} ⪯ {z}");
            }
        }
    }

    // Requiring instead that ascents of η stay ascents of ζ inside each class
    // rejects the bottom element.
    #[test]
    fn ascent_preservation_is_not_the_right_condition() {
        let z = p("3,4,2,1");
        let falls = [3, 4];
        let id = Permutation::identity();
        assert!(leq_universal(&id, &z));
        assert!(id.apply(falls[0]) < id.apply(falls[1]));
        assert!(z.apply(falls[0]) > z.apply(falls[1]));
    }

    #[test]
    fn reduced_word_examples() {
        assert_eq!(reduced_words(&Permutation::identity()), vec![Word::empty()]);
        let words = reduced_words(&p("5,4,2,1,3"));
        assert_eq!(words.len(), 5);
        for pairs in [
            [(3, 4), (2, 3), (4, 5), (1, 4)],
            [(3, 4), (4, 5), (2, 3), (1, 4)],
            [(3, 4), (4, 5), (1, 4), (2, 3)],
            [(3, 5), (1, 3), (3, 4), (2, 3)],
            [(3, 5), (2, 3), (1, 2), (2, 4)],
        ] {
            assert!(words.contains(&Word::from_paper_pairs(&pairs).unwrap()));
        }
        assert_eq!(reduced_words(&p("2,5,4,1,6,3")).len(), 14);
        assert_eq!(count_reduced_words(&p("2,5,4,1,6,3")), 14);
    }

    #[test]
    fn reduced_words_are_graded_by_universal_length() {
        for z in Permutation::all(5) {
            let lu = universal_length(&z);
            for w in reduced_words(&z) {
                assert_eq!(w.len(), lu);
                assert_eq!(evaluate_word(&w), MaybePermutation::Perm(z.clone()));
                let mut prefix = Word::empty();
                for &gen in w.gens() {
                    prefix.push(gen);
                    let eta = evaluate_word(&prefix).into_perm().expect("prefix is non-zero");
                    assert_eq!(universal_length(&eta), prefix.len());
                }
            }
        }
    }

    #[test]
    fn reversal_inverts_the_evaluation() {
        for z in Permutation::all(5) {
            for w in reduced_words(&z) {
                assert_eq!(evaluate_word(&w.reversed()), MaybePermutation::Perm(z.inverse()));
            }
        }
    }

    // Every interval [u, ζu]_k has the chain count of [1, ζ]_⪯.
    #[test]
    fn chain_counts_depend_only_on_zeta_in_s5() {
        let perms: Vec<_> = Permutation::all(5).collect();
        for u in &perms {
            for z in &perms {
                let w = z.compose(u);
                for k in 0..=5 {
                    if leq_k(u, &w, k) {
                        let iv = MarkedInterval::new(u.clone(), w.clone(), k).unwrap();
                        assert_eq!(count_chains(&iv), count_reduced_words(z), "{u} {z} {k}");
                        assert_eq!(iv.rank(), universal_length(z));
                    }
                }
            }
        }
    }
}
