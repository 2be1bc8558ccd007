//! Seeded random expressions for self-checks.

use nbracket_core::expand::Sequential;
use nbracket_core::{BracketExpr, Expander};
use rand::seq::SliceRandom;
use rand::Rng;

const FIXED: [char; 3] = ['A', 'D', 'Z'];

/// Any expression tree, indices possibly repeated.
pub fn random_expr<R: Rng>(rng: &mut R, depth: u32) -> BracketExpr {
    if depth == 0 || rng.gen_bool(0.4) {
        return if rng.gen_bool(0.3) {
            BracketExpr::fixed(*FIXED.choose(rng).unwrap())
        } else {
            BracketExpr::anti(rng.gen_range(1..40))
        };
    }
    let children = (0..rng.gen_range(1..=4)).map(|_| random_expr(rng, depth - 1)).collect();
    if rng.gen_bool(0.3) {
        BracketExpr::Product(children)
    } else {
        BracketExpr::Bracket(children)
    }
}

/// Shape with placeholder antisymmetrized leaves numbered later.
fn supported_shape<R: Rng>(rng: &mut R, depth: u32, leaves: &mut u32) -> BracketExpr {
    let roll: f64 = rng.gen();
    if depth == 0 || roll < 0.45 {
        if roll < 0.1 {
            return BracketExpr::fixed(*FIXED.choose(rng).unwrap());
        }
        *leaves += 1;
        return BracketExpr::anti(*leaves);
    }
    if roll < 0.55 {
        let children = (0..rng.gen_range(1..=3)).map(|_| supported_shape(rng, depth - 1, leaves)).collect();
        return BracketExpr::Product(children);
    }
    let arity = rng.gen_range(1..=5);
    let mut nested = 0;
    let mut children = Vec::with_capacity(arity);
    for _ in 0..arity {
        // the fast path takes at most two non-atomic entries per bracket
        let child = if nested < 2 {
            supported_shape(rng, depth - 1, leaves)
        } else {
            *leaves += 1;
            BracketExpr::anti(*leaves)
        };
        nested += usize::from(!child.is_atom());
        children.push(child);
    }
    BracketExpr::Bracket(children)
}

fn relabel(e: &mut BracketExpr, labels: &[u32]) {
    match e {
        BracketExpr::Atom(_) => {
            if let Some(i) = e.as_anti_atom() {
                *e = BracketExpr::anti(labels[i.get() as usize - 1]);
            }
        }
        BracketExpr::Product(c) | BracketExpr::Bracket(c) => c.iter_mut().for_each(|c| relabel(c, labels)),
    }
}

/// Multilinear expression the fast path accepts, with at most `max_naive`
/// words in its naive expansion and at least one bracket.
pub fn random_supported<R: Rng>(rng: &mut R, max_naive: u128) -> BracketExpr {
    loop {
        let mut leaves = 0;
        let mut e = supported_shape(rng, 3, &mut leaves);
        if !matches!(e, BracketExpr::Bracket(_)) || e.naive_word_count() > max_naive {
            continue;
        }
        let mut labels: Vec<u32> = (1..=leaves).collect();
        labels.shuffle(rng);
        relabel(&mut e, &labels);
        return e;
    }
}

/// Outcome of comparing both expansion routes on random shapes.
#[derive(Debug, Default)]
pub struct SelfCheck {
    pub cases: usize,
    pub mismatches: Vec<String>,
    /// Largest naive word count among the cases.
    pub max_naive_words: u128,
}

/// Compares oracle and fast path on `cases` random supported shapes.
pub fn oracle_fast_check<R: Rng>(rng: &mut R, cases: usize, max_naive: u128) -> SelfCheck {
    let x = Expander::default();
    let mut out = SelfCheck::default();
    for _ in 0..cases {
        let e = random_supported(rng, max_naive);
        out.max_naive_words = out.max_naive_words.max(e.naive_word_count());
        let oracle = x.oracle_run(&e, &Sequential).map(|r| r.profile);
        let fast = x.fast_profile(&e);
        if oracle != fast {
            out.mismatches.push(e.to_string());
        }
        out.cases += 1;
    }
    out
}
