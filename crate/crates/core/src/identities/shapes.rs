//! Expressions the identity suite is built from. `A` is the fixed entry and
//! `b1, b2, ...` the antisymmetrized family.

use alloc::vec::Vec;

use crate::lang::BracketExpr;

fn run(first: u32, last: u32) -> impl Iterator<Item = BracketExpr> {
    (first..=last).map(BracketExpr::anti)
}

fn bracket(parts: impl IntoIterator<Item = BracketExpr>) -> BracketExpr {
    BracketExpr::Bracket(parts.into_iter().collect())
}

fn a() -> BracketExpr {
    BracketExpr::fixed('A')
}

/// `[b1 ... b_{N-1} [b_N ... b_{2N-1}]]`.
pub fn double_bracket(n: u32) -> BracketExpr {
    bracket(run(1, n - 1).chain([BracketExpr::anti_bracket(n, 2 * n - 1)]))
}

/// `[b1 ... b_k]`.
pub fn flat_bracket(k: u32) -> BracketExpr {
    BracketExpr::anti_bracket(1, k)
}

/// `[[A b1 ... b_2L] [b_{2L+1} ... b_{4L+1}] b_{4L+2} ... b_6L]`.
pub fn bremner_side1(l: u32) -> BracketExpr {
    let first = bracket([a()].into_iter().chain(run(1, 2 * l)));
    let second = BracketExpr::anti_bracket(2 * l + 1, 4 * l + 1);
    bracket([first, second].into_iter().chain(run(4 * l + 2, 6 * l)))
}

/// `[[A [b1 ... b_{2L+1}] b_{2L+2} ... b_4L] b_{4L+1} ... b_6L]`.
pub fn bremner_side2(l: u32) -> BracketExpr {
    let inner = BracketExpr::anti_bracket(1, 2 * l + 1);
    let middle = bracket([a(), inner].into_iter().chain(run(2 * l + 2, 4 * l)));
    bracket([middle].into_iter().chain(run(4 * l + 1, 6 * l)))
}

/// The two presentations of a `(6L+1)`-bracket used as a decomposition basis:
/// `[A b1 ... b_6L]` and `[A [b1 ... b_{2L+1}] [b_{2L+2} ... b_{4L+2}] b_{4L+3} ... b_6L]`.
pub fn decomposition_basis(l: u32) -> Vec<BracketExpr> {
    let flat = bracket([a()].into_iter().chain(run(1, 6 * l)));
    let split = bracket(
        [a(), BracketExpr::anti_bracket(1, 2 * l + 1), BracketExpr::anti_bracket(2 * l + 2, 4 * l + 2)]
            .into_iter()
            .chain(run(4 * l + 3, 6 * l)),
    );
    alloc::vec![flat, split]
}
