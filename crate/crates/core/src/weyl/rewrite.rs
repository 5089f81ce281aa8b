//! Normal ordering by explicit application of `a·a† → a†·a + 1`.
//!
//! This engine works on raw words and lets the caller pick which pending
//! redex to rewrite next, so the result can be checked for independence of
//! the rewrite schedule. [`WeylPoly::multiply`] uses a closed-form
//! contraction count instead; the two must agree.

use super::{Monomial, WeylPoly};
use crate::field::Coeff;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    A,
    ADag,
}

/// The word `(a†)^p a^q`.
pub fn word_of(m: Monomial) -> Vec<Letter> {
    let mut w = vec![Letter::ADag; m.p as usize];
    w.extend(std::iter::repeat_n(Letter::A, m.q as usize));
    w
}

fn redexes(word: &[Letter]) -> Vec<usize> {
    word.windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] == Letter::A && w[1] == Letter::ADag)
        .map(|(i, _)| i)
        .collect()
}

fn normal_monomial(word: &[Letter]) -> Monomial {
    let p = word.iter().take_while(|l| **l == Letter::ADag).count();
    debug_assert!(word[p..].iter().all(|l| *l == Letter::A));
    Monomial::new(p as u32, (word.len() - p) as u32)
}

/// Rewrites `coeff·word` to normal order.
///
/// `choose(n)` must return an index in `0..n`; it is called once to pick a
/// pending term and once to pick a redex inside it, at every step.
pub fn normal_order_word<F>(word: &[Letter], coeff: Coeff, mut choose: F) -> WeylPoly
where
    F: FnMut(usize) -> usize,
{
    let mut pending: Vec<(Coeff, Vec<Letter>)> = vec![(coeff, word.to_vec())];
    let mut done = WeylPoly::zero();
    while !pending.is_empty() {
        let ti = choose(pending.len());
        let sites = redexes(&pending[ti].1);
        if sites.is_empty() {
            let (c, w) = pending.swap_remove(ti);
            done.add_term(normal_monomial(&w), &c);
            continue;
        }
        let site = sites[choose(sites.len())];
        let (c, w) = pending.swap_remove(ti);
        let mut swapped = w.clone();
        swapped.swap(site, site + 1);
        let mut contracted = w;
        contracted.drain(site..site + 2);
        pending.push((c.clone(), swapped));
        pending.push((c, contracted));
    }
    done
}

/// Product of two polynomials computed by concatenating words and rewriting.
pub fn multiply_by_rewriting<F>(x: &WeylPoly, y: &WeylPoly, mut choose: F) -> WeylPoly
where
    F: FnMut(usize) -> usize,
{
    let mut out = WeylPoly::zero();
    for (m1, c1) in x.terms() {
        for (m2, c2) in y.terms() {
            let mut word = word_of(*m1);
            word.extend(word_of(*m2));
            let part = normal_order_word(&word, c1 * c2, &mut choose);
            out = &out + &part;
        }
    }
    out
}
