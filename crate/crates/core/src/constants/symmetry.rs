use std::collections::HashMap;
use std::rc::Rc;

use super::{lr_coefficient, WordClasses};
use crate::error::{Error, Result};
use crate::perm::{Partition, Permutation};
use crate::umonoid::{evaluate_word, reduced_words, Generator, Word};

/// `u_{αβ} ↦ u_{ω₀(β) ω₀(α)}` with `ω₀` the longest element of `S_m`.
pub fn psi_v(x: &Word, m: usize) -> Result<Word> {
    if let Some(&big) = x.betas().collect::<Vec<_>>().iter().max() {
        if big > m {
            return Err(Error::SupportExceedsBound { support: big, m });
        }
    }
    Ok(Word::new(
        x.gens()
            .iter()
            .map(|g| Generator::new_unchecked(m + 1 - g.beta(), m + 1 - g.alpha()))
            .collect(),
    ))
}

/// Reverses the factors.
pub fn psi_h(x: &Word) -> Word {
    x.reversed()
}

/// Shifts every letter `≥ a` up by one.
pub fn phi_star_word(x: &Word, a: usize) -> Word {
    let shift = |i: usize| if i < a { i } else { i + 1 };
    Word::new(
        x.gens()
            .iter()
            .map(|g| Generator::new_unchecked(shift(g.alpha()), shift(g.beta())))
            .collect(),
    )
}

/// `γζγ⁻¹` for the cycle `γ = (1 2 … n)`.
pub fn cyclic_conjugate(z: &Permutation, n: usize) -> Result<Permutation> {
    if z.support_bound() > n {
        return Err(Error::SupportExceedsBound {
            support: z.support_bound(),
            m: n,
        });
    }
    let gamma = Permutation::from_window((1..=n).map(|i| i % n + 1).collect())?;
    Ok(gamma.compose(z).compose(&gamma.inverse()))
}

/// Whether every `c_λ` of `ζ` equals that of `γζγ⁻¹`.
pub fn check_cyclic(z: &Permutation, n: usize) -> Result<bool> {
    let conj = cyclic_conjugate(z, n)?;
    Ok(WordClasses::new(z)?.table()? == WordClasses::new(&conj)?.table()?)
}

/// `η`, `ζ` have reduced words on disjoint letters whose concatenation
/// (`η` first) is non-zero. One choice of words decides this.
pub fn is_u_disjoint(e: &Permutation, z: &Permutation) -> bool {
    let (Some(x), Some(y)) = (reduced_words(e).into_iter().next(), reduced_words(z).into_iter().next())
    else {
        return false;
    };
    disjoint_words(&x, &y)
}

fn disjoint_words(x: &Word, y: &Word) -> bool {
    let lx = x.letters();
    let ly = y.letters();
    lx.iter().all(|a| ly.binary_search(a).is_err()) && !evaluate_word(&y.after(x)).is_zero()
}

/// `c_λ^{ζη} = Σ_{ν,μ} c_{νμ}^λ c_ν^ζ c_μ^η` for every `λ ⊢ ℓ_u(ζη)`.
pub fn check_disjoint(e: &Permutation, z: &Permutation) -> Result<bool> {
    DisjointChecker::default().check(e, z)
}

/// [`check_disjoint`] with constant tables and LR coefficients cached
/// across calls.
#[derive(Default)]
pub struct DisjointChecker {
    classes: HashMap<Permutation, Rc<WordClasses>>,
    tables: HashMap<Permutation, Rc<Vec<(Partition, i64)>>>,
    lr: HashMap<(Partition, Partition, Partition), u64>,
}

impl DisjointChecker {
    fn classes(&mut self, z: &Permutation) -> Result<Rc<WordClasses>> {
        if let Some(c) = self.classes.get(z) {
            return Ok(c.clone());
        }
        let c = Rc::new(WordClasses::new(z)?);
        self.classes.insert(z.clone(), c.clone());
        Ok(c)
    }

    fn table(&mut self, z: &Permutation) -> Result<Rc<Vec<(Partition, i64)>>> {
        if let Some(t) = self.tables.get(z) {
            return Ok(t.clone());
        }
        let t = Rc::new(self.classes(z)?.table()?);
        self.tables.insert(z.clone(), t.clone());
        Ok(t)
    }

    fn lr(&mut self, nu: &Partition, mu: &Partition, lambda: &Partition) -> u64 {
        *self
            .lr
            .entry((nu.clone(), mu.clone(), lambda.clone()))
            .or_insert_with(|| lr_coefficient(nu, mu, lambda))
    }

    pub fn is_u_disjoint(&mut self, e: &Permutation, z: &Permutation) -> Result<bool> {
        let ce = self.classes(e)?;
        let cz = self.classes(z)?;
        Ok(disjoint_words(&ce.words()[0], &cz.words()[0]))
    }

    pub fn check(&mut self, e: &Permutation, z: &Permutation) -> Result<bool> {
        if !self.is_u_disjoint(e, z)? {
            return Err(Error::Precondition(format!("{e} and {z} are not u-disjoint")));
        }
        let product = z.compose(e);
        let te = self.table(e)?;
        let tz = self.table(z)?;
        let tp = self.table(&product)?;
        for (lambda, lhs) in tp.iter() {
            let mut rhs = 0i64;
            for (nu, cz) in tz.iter().filter(|(_, c)| *c != 0) {
                for (mu, ce) in te.iter().filter(|(_, c)| *c != 0) {
                    rhs += self.lr(nu, mu, lambda) as i64 * cz * ce;
                }
            }
            if *lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
