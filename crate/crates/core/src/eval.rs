//! Evaluation of *-polynomials on algebra elements.
//!
//! `evaluate` substitutes term by term; `evaluate_standard_fast` computes
//! the standard polynomial by dynamic programming over argument subsets,
//! in `O(2^d * d)` element multiplications instead of the `O(d! * d)` of
//! the term-by-term route. Both are exact and agree on every input; the
//! test suite and the `bench` command cross-validate them.

use std::collections::BTreeMap;

use crate::algebra::{Element, StarAlgebra};
use crate::error::{Error, Result};
use crate::poly::{StarPolynomial, VarRef};

/// Variable assignment for evaluation. `y1` and `z1` are distinct
/// variables and may both be assigned.
pub type Assignment = BTreeMap<VarRef, Element>;

/// Substitutes `assignment` into `p` and sums the terms.
pub fn evaluate(p: &StarPolynomial, alg: &StarAlgebra, assignment: &Assignment) -> Result<Element> {
    for var in p.variables() {
        let e = assignment
            .get(&var)
            .ok_or_else(|| Error::UnassignedVariable(var.to_string()))?;
        if !alg.contains(e) {
            return Err(Error::ShapeMismatch(format!(
                "value assigned to {var} does not belong to {}",
                alg.descriptor()
            )));
        }
    }
    let mut acc = alg.zero();
    for (mono, coeff) in p.terms() {
        let mut factors = mono.factors().iter();
        let first = factors.next().expect("monomials are nonempty");
        let mut value = assignment[first].clone();
        for var in factors {
            value = alg.multiply_unchecked(&value, &assignment[var]);
        }
        acc = &acc + &value.scale(coeff);
    }
    Ok(acc)
}

/// Largest argument count the subset table accepts; `2^d` intermediate
/// elements are materialized per call.
pub const MAX_FAST_DEGREE: usize = 16;

/// Evaluates the standard polynomial of degree `args.len()` at `args`.
///
/// State: for each argument subset `S`, the signed sum over all orderings
/// of `S` of the corresponding products, where the sign of an ordering is
/// its parity as a permutation of the sorted subset. Appending an unused
/// argument `j` to every ordering of `S` contributes to `S + {j}` with
/// sign `(-1)^(number of members of S above j)`, which turns the factorial
/// sum into `d * 2^(d-1)` multiplications.
pub fn evaluate_standard_fast(alg: &StarAlgebra, args: &[Element]) -> Result<Element> {
    let d = args.len();
    if d == 0 {
        return Err(Error::InvalidInput("standard polynomial needs degree >= 1".into()));
    }
    if d > MAX_FAST_DEGREE {
        return Err(Error::BudgetExceeded {
            what: "subset evaluation table".into(),
            required: 1u64.checked_shl(d as u32).unwrap_or(u64::MAX),
            allowed: 1u64 << MAX_FAST_DEGREE,
        });
    }
    for e in args {
        if !alg.contains(e) {
            return Err(Error::ShapeMismatch(format!(
                "argument does not belong to {}",
                alg.descriptor()
            )));
        }
    }

    let full = (1usize << d) - 1;
    let mut table: Vec<Option<Element>> = vec![None; 1 << d];
    for (j, arg) in args.iter().enumerate() {
        table[1 << j] = Some(arg.clone());
    }
    for s in 1..full {
        let Some(current) = table[s].take() else {
            continue;
        };
        for j in 0..d {
            if s & (1 << j) != 0 {
                continue;
            }
            let product = alg.multiply_unchecked(&current, &args[j]);
            let above_j_is_odd = ((s >> (j + 1)) as u32).count_ones() % 2 == 1;
            let signed = if above_j_is_odd { -&product } else { product };
            let slot = &mut table[s | (1 << j)];
            *slot = Some(match slot.take() {
                None => signed,
                Some(acc) => &acc + &signed,
            });
        }
    }
    Ok(table[full].take().expect("full subset is always populated"))
}
