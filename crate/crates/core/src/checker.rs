//! Deciding *-identity questions.
//!
//! The engine is the multilinearity reduction: a multilinear *-polynomial
//! is an identity of an algebra iff it vanishes on every tuple of basis
//! elements matching its signature, so exhaustive verdicts are finite,
//! sound and complete. Standard polynomials additionally alternate, which
//! cuts the tuple space to strictly increasing basis-index combinations.
//! Randomized mode is a cheap pre-screen; an "identity" verdict from it is
//! flagged probabilistic and never reported as exact.

use serde::Serialize;

use crate::algebra::{Element, Parity, StarAlgebra};
use crate::error::{Error, Result};
use crate::eval::evaluate_standard_fast;
use crate::linalg::{subspace_contains, RowReducer, SubspaceBasis};
use crate::parallel::{find_first, fold_chunks};
use crate::poly::{factorial, for_each_permutation, Signature, StarMonomial, StarPolynomial, VarRef};
use crate::rat::Rat;

/// Enumeration limits. Checks refuse to start when the tuple space or the
/// signature degree exceeds them, reporting what would have been required.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Budget {
    /// Largest signature degree `identity_subspace` and containment accept.
    pub max_degree: usize,
    /// Largest number of basis tuples (or combinations, or trials) a single
    /// enumeration may visit.
    pub max_tuples: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_degree: 5, max_tuples: 10_000_000 }
    }
}

/// Hard ceiling on signature degrees regardless of configured budget;
/// `d!`-dimensional coefficient spaces stop fitting machine words past it.
pub const HARD_DEGREE_CAP: usize = 20;

impl Budget {
    pub fn admit_tuples(&self, what: &str, required: u64) -> Result<()> {
        if required > self.max_tuples {
            return Err(Error::BudgetExceeded {
                what: what.to_string(),
                required,
                allowed: self.max_tuples,
            });
        }
        Ok(())
    }

    pub fn admit_degree(&self, degree: usize) -> Result<()> {
        let allowed = self.max_degree.min(HARD_DEGREE_CAP);
        if degree > allowed {
            return Err(Error::BudgetExceeded {
                what: "signature degree".to_string(),
                required: degree as u64,
                allowed: allowed as u64,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "identity")]
    Identity,
    #[serde(rename = "non-identity")]
    NonIdentity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CheckMethod {
    #[serde(rename = "exhaustive")]
    Exhaustive,
    #[serde(rename = "alternating-combinations")]
    AlternatingCombinations,
    #[serde(rename = "randomized")]
    Randomized,
}

/// How to run an identity check.
#[derive(Clone, Copy, Debug)]
pub enum CheckMode {
    /// Complete basis-substitution check; requires a multilinear input.
    Exhaustive,
    /// Samples `trials` random substitutions with integer entries in
    /// `[-3, 3]` projected to each variable's parity.
    Randomized { seed: u64, trials: u64 },
}

/// One substituted variable of a witness: which basis element (when the
/// substitution came from a basis) and the element itself.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessEntry {
    pub var: VarRef,
    pub basis_index: Option<usize>,
    pub element: Element,
}

/// A constructive refutation: an assignment on which the polynomial
/// evaluates to the stored nonzero value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub assignment: Vec<WitnessEntry>,
    pub value: Element,
}

impl Witness {
    /// Re-evaluates the stored assignment and checks it reproduces the
    /// stored nonzero value exactly.
    pub fn verify(&self, p: &StarPolynomial, alg: &StarAlgebra) -> bool {
        let assignment: crate::eval::Assignment = self
            .assignment
            .iter()
            .map(|e| (e.var, e.element.clone()))
            .collect();
        match crate::eval::evaluate(p, alg, &assignment) {
            Ok(v) => !v.is_zero() && v == self.value,
            Err(_) => false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub verdict: Verdict,
    pub method: CheckMethod,
    pub tuples_checked: u64,
    pub witness: Option<Witness>,
    pub seed: Option<u64>,
    /// True only for a randomized "identity" verdict, which carries no
    /// false-negative claim.
    pub probabilistic: bool,
}

impl CheckReport {
    pub fn is_identity(&self) -> bool {
        self.verdict == Verdict::Identity
    }
}

/// Decides whether `p` is a *-polynomial identity of `alg`.
///
/// Exhaustive mode rejects non-multilinear input rather than silently
/// sampling; use randomized mode for those.
pub fn is_star_identity(
    p: &StarPolynomial,
    alg: &StarAlgebra,
    mode: CheckMode,
    budget: &Budget,
    workers: usize,
) -> Result<CheckReport> {
    if p.is_zero() {
        return Ok(CheckReport {
            verdict: Verdict::Identity,
            method: CheckMethod::Exhaustive,
            tuples_checked: 0,
            witness: None,
            seed: None,
            probabilistic: false,
        });
    }
    match mode {
        CheckMode::Exhaustive => {
            if let Some((d, parity, coeff)) = p.as_scaled_standard() {
                return check_standard_combinations(alg, parity, d, &coeff, budget, workers);
            }
            let Some((_, sig)) = p.multilinear_signature() else {
                return Err(Error::NotMultilinear(
                    "exhaustive mode is only sound for multilinear polynomials \
                     (every index used exactly once per monomial, consistent parities); \
                     use randomized mode instead"
                        .into(),
                ));
            };
            exhaustive_scan(p, alg, &sig, budget, workers)
        }
        CheckMode::Randomized { seed, trials } => {
            if trials == 0 {
                return Err(Error::InvalidInput("randomized mode needs trials >= 1".into()));
            }
            budget.admit_tuples("randomized trials", trials)?;
            randomized_scan(p, alg, seed, trials, workers)
        }
    }
}

/// Complete check of `coeff * St_d` in a single parity, using alternation:
/// the standard polynomial vanishes identically iff it vanishes on all
/// strictly increasing basis-index combinations.
pub fn check_standard_combinations(
    alg: &StarAlgebra,
    parity: Parity,
    degree: usize,
    coeff: &Rat,
    budget: &Budget,
    workers: usize,
) -> Result<CheckReport> {
    let basis = alg.space_basis(parity);
    let total = binomial(basis.len() as u64, degree as u64);
    budget.admit_tuples("alternating combinations", total)?;

    let hit = find_first(total, workers, |rank| {
        let indices = unrank_combination(basis.len() as u64, degree as u64, rank);
        let args: Vec<Element> = indices.iter().map(|&i| basis[i].clone()).collect();
        let value = evaluate_standard_fast(alg, &args).expect("basis args are members");
        if value.is_zero() {
            None
        } else {
            Some(witness_from_basis(alg, parity, &indices, value.scale(coeff)))
        }
    });

    Ok(match hit {
        Some((rank, witness)) => CheckReport {
            verdict: Verdict::NonIdentity,
            method: CheckMethod::AlternatingCombinations,
            tuples_checked: rank + 1,
            witness: Some(witness),
            seed: None,
            probabilistic: false,
        },
        None => CheckReport {
            verdict: Verdict::Identity,
            method: CheckMethod::AlternatingCombinations,
            tuples_checked: total,
            witness: None,
            seed: None,
            probabilistic: false,
        },
    })
}

/// Full scan of the standard polynomial over every basis tuple (not just
/// increasing combinations). This is the independent oracle the
/// alternating-combinations shortcut is validated against.
pub fn check_standard_full_scan(
    alg: &StarAlgebra,
    parity: Parity,
    degree: usize,
    budget: &Budget,
    workers: usize,
) -> Result<CheckReport> {
    let basis = alg.space_basis(parity);
    let dims = vec![basis.len(); degree];
    let total = tuple_count(&dims)?;
    budget.admit_tuples("full basis tuples", total)?;

    let hit = find_first(total, workers, |index| {
        let digits = decode_mixed_radix(index, &dims);
        let args: Vec<Element> = digits.iter().map(|&i| basis[i].clone()).collect();
        let value = evaluate_standard_fast(alg, &args).expect("basis args are members");
        if value.is_zero() {
            None
        } else {
            Some(witness_from_basis(alg, parity, &digits, value))
        }
    });

    Ok(match hit {
        Some((index, witness)) => CheckReport {
            verdict: Verdict::NonIdentity,
            method: CheckMethod::Exhaustive,
            tuples_checked: index + 1,
            witness: Some(witness),
            seed: None,
            probabilistic: false,
        },
        None => CheckReport {
            verdict: Verdict::Identity,
            method: CheckMethod::Exhaustive,
            tuples_checked: total,
            witness: None,
            seed: None,
            probabilistic: false,
        },
    })
}

fn exhaustive_scan(
    p: &StarPolynomial,
    alg: &StarAlgebra,
    sig: &Signature,
    budget: &Budget,
    workers: usize,
) -> Result<CheckReport> {
    let bases: Vec<&[Element]> = sig.parities().iter().map(|&q| alg.space_basis(q)).collect();
    let dims: Vec<usize> = bases.iter().map(|b| b.len()).collect();
    let total = tuple_count(&dims)?;
    budget.admit_tuples("signature basis tuples", total)?;

    let hit = find_first(total, workers, |index| {
        let digits = decode_mixed_radix(index, &dims);
        let assignment: crate::eval::Assignment = digits
            .iter()
            .enumerate()
            .map(|(i, &b)| {
                (
                    VarRef::new(i as u32 + 1, sig.parities()[i]),
                    bases[i][b].clone(),
                )
            })
            .collect();
        let value = crate::eval::evaluate(p, alg, &assignment).expect("basis args are members");
        if value.is_zero() {
            None
        } else {
            let entries = digits
                .iter()
                .enumerate()
                .map(|(i, &b)| WitnessEntry {
                    var: VarRef::new(i as u32 + 1, sig.parities()[i]),
                    basis_index: Some(b),
                    element: bases[i][b].clone(),
                })
                .collect();
            Some(Witness { assignment: entries, value })
        }
    });

    Ok(match hit {
        Some((index, witness)) => CheckReport {
            verdict: Verdict::NonIdentity,
            method: CheckMethod::Exhaustive,
            tuples_checked: index + 1,
            witness: Some(witness),
            seed: None,
            probabilistic: false,
        },
        None => CheckReport {
            verdict: Verdict::Identity,
            method: CheckMethod::Exhaustive,
            tuples_checked: total,
            witness: None,
            seed: None,
            probabilistic: false,
        },
    })
}

fn randomized_scan(
    p: &StarPolynomial,
    alg: &StarAlgebra,
    seed: u64,
    trials: u64,
    workers: usize,
) -> Result<CheckReport> {
    let vars = p.variables();
    let hit = find_first(trials, workers, |trial| {
        let mut rng = trial_rng(seed, trial);
        let assignment: Vec<(VarRef, Element)> = vars
            .iter()
            .map(|&v| (v, random_parity_element(&mut rng, alg, v.parity)))
            .collect();
        let map: crate::eval::Assignment = assignment.iter().cloned().collect();
        let value = crate::eval::evaluate(p, alg, &map).expect("sampled args are members");
        if value.is_zero() {
            None
        } else {
            let entries = assignment
                .into_iter()
                .map(|(var, element)| WitnessEntry { var, basis_index: None, element })
                .collect();
            Some(Witness { assignment: entries, value })
        }
    });

    Ok(match hit {
        Some((trial, witness)) => CheckReport {
            verdict: Verdict::NonIdentity,
            method: CheckMethod::Randomized,
            tuples_checked: trial + 1,
            witness: Some(witness),
            seed: Some(seed),
            probabilistic: false,
        },
        None => CheckReport {
            verdict: Verdict::Identity,
            method: CheckMethod::Randomized,
            tuples_checked: trials,
            witness: None,
            seed: Some(seed),
            probabilistic: true,
        },
    })
}

/// Per-degree outcome of the minimal-degree search.
#[derive(Clone, Debug, Serialize)]
pub struct DegreeCheck {
    pub degree: usize,
    #[serde(flatten)]
    pub report: CheckReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct MinDegreeReport {
    pub algebra: String,
    pub parity: Parity,
    pub d_max: usize,
    /// Smallest degree whose standard polynomial is an identity, if any
    /// exists up to `d_max`.
    pub found: Option<usize>,
    /// Reports for every degree checked, in order; each non-identity
    /// degree stores a witness.
    pub per_degree: Vec<DegreeCheck>,
}

/// Finds the smallest `d <= d_max` with `St_d` (variables all of `parity`)
/// an identity of `alg`, recording a witness at every lower degree.
pub fn min_standard_degree_report(
    alg: &StarAlgebra,
    parity: Parity,
    d_max: usize,
    budget: &Budget,
    workers: usize,
) -> Result<MinDegreeReport> {
    if d_max < 1 {
        return Err(Error::InvalidInput("d_max must be >= 1".into()));
    }
    let mut per_degree = Vec::new();
    let mut found = None;
    for d in 1..=d_max {
        let report = check_standard_combinations(alg, parity, d, &Rat::from_integer(1.into()), budget, workers)?;
        let identity = report.is_identity();
        per_degree.push(DegreeCheck { degree: d, report });
        if identity {
            found = Some(d);
            break;
        }
    }
    Ok(MinDegreeReport {
        algebra: alg.descriptor(),
        parity,
        d_max,
        found,
        per_degree,
    })
}

/// The minimal degree alone; see `min_standard_degree_report`.
pub fn min_standard_degree(
    alg: &StarAlgebra,
    parity: Parity,
    d_max: usize,
    budget: &Budget,
    workers: usize,
) -> Result<Option<usize>> {
    Ok(min_standard_degree_report(alg, parity, d_max, budget, workers)?.found)
}

/// The monomials of the multilinear component of `sig`, in canonical
/// order. Coefficient vectors over this ordering are the coordinates used
/// by `identity_subspace` and the containment check.
pub fn signature_monomials(sig: &Signature) -> Vec<StarMonomial> {
    let d = sig.degree();
    let mut monomials = Vec::with_capacity(factorial(d) as usize);
    for_each_permutation(d, |perm, _| {
        let factors = perm
            .iter()
            .map(|&i| VarRef::new(i as u32 + 1, sig.parities()[i]))
            .collect();
        monomials.push(StarMonomial::new(factors));
    });
    monomials.sort();
    monomials
}

/// Assembles a polynomial from a coefficient vector over
/// `signature_monomials(sig)`.
pub fn polynomial_from_coefficients(monomials: &[StarMonomial], coeffs: &[Rat]) -> StarPolynomial {
    assert_eq!(monomials.len(), coeffs.len());
    let mut p = StarPolynomial::zero();
    for (m, c) in monomials.iter().zip(coeffs) {
        p.add_term(m.clone(), c.clone());
    }
    p
}

/// Canonical basis of the space of coefficient vectors `c` such that
/// `sum_sigma c_sigma . monomial_sigma` is a *-identity of `alg`: the
/// kernel of the evaluation map from the `d!`-dimensional span of the
/// signature's monomials to stacked evaluations over all basis tuples.
pub fn identity_subspace(
    alg: &StarAlgebra,
    sig: &Signature,
    budget: &Budget,
    workers: usize,
) -> Result<SubspaceBasis> {
    let d = sig.degree();
    budget.admit_degree(d)?;
    let monomials = signature_monomials(sig);
    let n_monos = monomials.len();
    // Permutation view of each monomial: factor j is variable perm[j]+1.
    let perms: Vec<Vec<usize>> = monomials
        .iter()
        .map(|m| m.factors().iter().map(|v| v.index as usize - 1).collect())
        .collect();

    let bases: Vec<&[Element]> = sig.parities().iter().map(|&q| alg.space_basis(q)).collect();
    let dims: Vec<usize> = bases.iter().map(|b| b.len()).collect();
    let total = tuple_count(&dims)?;
    budget.admit_tuples("signature basis tuples", total)?;

    let reducer = fold_chunks(
        total,
        workers,
        || RowReducer::new(n_monos),
        |reducer, index| {
            if reducer.is_full_rank() {
                return true;
            }
            let digits = decode_mixed_radix(index, &dims);
            let elements: Vec<&Element> = digits.iter().enumerate().map(|(i, &b)| &bases[i][b]).collect();
            // Column sigma of the evaluation block for this tuple.
            let values: Vec<Vec<Rat>> = perms
                .iter()
                .map(|perm| {
                    let mut v = elements[perm[0]].clone();
                    for &slot in &perm[1..] {
                        v = alg.multiply_unchecked(&v, elements[slot]);
                    }
                    alg.coords(&v)
                })
                .collect();
            for entry in 0..alg.dim() {
                let row: Vec<Rat> = values.iter().map(|coords| coords[entry].clone()).collect();
                reducer.insert(row);
                if reducer.is_full_rank() {
                    return true;
                }
            }
            false
        },
        |mut a, b| {
            a.absorb(b);
            a
        },
    );

    Ok(reducer.kernel_basis())
}

/// One signature's worth of the containment comparison.
#[derive(Clone, Debug, Serialize)]
pub struct SignatureCheck {
    pub signature: Signature,
    /// Dimension of the identity subspace of `a` at this signature.
    pub dim_a: usize,
    /// Dimension of the identity subspace of `b` at this signature.
    pub dim_b: usize,
    pub contained: bool,
    /// On failure: a *-identity of `a` that is not one of `b`, scaled to
    /// primitive integer coefficients, plus a substitution in `b`
    /// witnessing the nonzero value.
    pub separating: Option<SeparatingWitness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SeparatingWitness {
    pub polynomial: StarPolynomial,
    pub witness: Witness,
}

/// Degree-truncated comparison of identity ideals. `contained` means every
/// multilinear *-identity of `a` of degree `<= truncated_at` is an
/// identity of `b`; this is evidence about the full T*-ideals, not proof.
#[derive(Clone, Debug, Serialize)]
pub struct ContainmentReport {
    pub a: String,
    pub b: String,
    pub truncated_at: usize,
    pub contained: bool,
    pub signatures: Vec<SignatureCheck>,
}

/// Compares the multilinear identity subspaces of `a` and `b` over every
/// `{Y,Z}` signature of degree `<= d_max`.
pub fn check_containment(
    a: &StarAlgebra,
    b: &StarAlgebra,
    d_max: usize,
    budget: &Budget,
    workers: usize,
) -> Result<ContainmentReport> {
    if d_max < 1 {
        return Err(Error::InvalidInput("d_max must be >= 1".into()));
    }
    budget.admit_degree(d_max)?;
    let mut signatures = Vec::new();
    let mut contained = true;
    for d in 1..=d_max {
        for sig in Signature::all_yz_of_degree(d) {
            let id_a = identity_subspace(a, &sig, budget, workers)?;
            let id_b = identity_subspace(b, &sig, budget, workers)?;
            let ok = subspace_contains(&id_b, &id_a)?;
            let separating = if ok {
                None
            } else {
                Some(separating_witness(b, &sig, &id_a, &id_b, workers))
            };
            contained &= ok;
            signatures.push(SignatureCheck {
                signature: sig,
                dim_a: id_a.dim(),
                dim_b: id_b.dim(),
                contained: ok,
                separating,
            });
        }
    }
    Ok(ContainmentReport {
        a: a.descriptor(),
        b: b.descriptor(),
        truncated_at: d_max,
        contained,
        signatures,
    })
}

/// First identity of `a` (in canonical basis order) outside the identities
/// of `b`, with a witnessing substitution in `b`.
fn separating_witness(
    b: &StarAlgebra,
    sig: &Signature,
    id_a: &SubspaceBasis,
    id_b: &SubspaceBasis,
    workers: usize,
) -> SeparatingWitness {
    let monomials = signature_monomials(sig);
    let vector = id_a
        .vectors()
        .iter()
        .find(|v| !id_b.contains_vector(v))
        .expect("non-containment provides a separating vector");
    let polynomial = primitive_integer_form(&polynomial_from_coefficients(&monomials, vector));

    let bases: Vec<&[Element]> = sig.parities().iter().map(|&q| b.space_basis(q)).collect();
    let dims: Vec<usize> = bases.iter().map(|bb| bb.len()).collect();
    let total = tuple_count(&dims).expect("witness search space fits u64");
    let hit = find_first(total, workers, |index| {
        let digits = decode_mixed_radix(index, &dims);
        let assignment: crate::eval::Assignment = digits
            .iter()
            .enumerate()
            .map(|(i, &k)| (VarRef::new(i as u32 + 1, sig.parities()[i]), bases[i][k].clone()))
            .collect();
        let value = crate::eval::evaluate(&polynomial, b, &assignment).expect("members");
        if value.is_zero() {
            None
        } else {
            let entries = digits
                .iter()
                .enumerate()
                .map(|(i, &k)| WitnessEntry {
                    var: VarRef::new(i as u32 + 1, sig.parities()[i]),
                    basis_index: Some(k),
                    element: bases[i][k].clone(),
                })
                .collect();
            Some(Witness { assignment: entries, value })
        }
    });
    let witness = hit.expect("a non-identity evaluates nonzero somewhere on the basis").1;
    SeparatingWitness { polynomial, witness }
}

/// Clears denominators and divides out the integer content, keeping the
/// leading (canonical-order) coefficient positive. Scaling by a nonzero
/// rational never changes identity verdicts.
pub fn primitive_integer_form(p: &StarPolynomial) -> StarPolynomial {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{One, Signed, Zero};

    if p.is_zero() {
        return p.clone();
    }
    let mut denom_lcm = BigInt::one();
    for (_, c) in p.terms() {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let mut numer_gcd = BigInt::zero();
    for (_, c) in p.terms() {
        numer_gcd = numer_gcd.gcd(&(c.numer() * &denom_lcm / c.denom()));
    }
    let scaled = p.scale(&Rat::new(denom_lcm, numer_gcd));
    if scaled.terms().next().expect("nonzero").1.is_negative() {
        scaled.neg()
    } else {
        scaled
    }
}

fn witness_from_basis(alg: &StarAlgebra, parity: Parity, indices: &[usize], value: Element) -> Witness {
    let basis = alg.space_basis(parity);
    let assignment = indices
        .iter()
        .enumerate()
        .map(|(slot, &i)| WitnessEntry {
            var: VarRef::new(slot as u32 + 1, parity),
            basis_index: Some(i),
            element: basis[i].clone(),
        })
        .collect();
    Witness { assignment, value }
}

fn random_parity_element(
    rng: &mut rand_chacha::ChaCha8Rng,
    alg: &StarAlgebra,
    parity: Parity,
) -> Element {
    use rand_core::RngCore;
    let coords: Vec<Rat> = (0..alg.dim())
        .map(|_| Rat::from_integer(((rng.next_u64() % 7) as i64 - 3).into()))
        .collect();
    let raw = alg.element_from_coords(&coords).expect("full-length coords");
    match parity {
        Parity::X => raw,
        Parity::Y => alg.decompose(&raw).expect("member").0,
        Parity::Z => alg.decompose(&raw).expect("member").1,
    }
}

fn trial_rng(seed: u64, trial: u64) -> rand_chacha::ChaCha8Rng {
    use rand_core::SeedableRng;
    // splitmix64 of (seed, trial) so trials are independently seeded and
    // the scan parallelizes without coupling worker count to the stream.
    let mut x = seed ^ trial.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^= x >> 31;
    rand_chacha::ChaCha8Rng::seed_from_u64(x)
}

/// Number of tuples in a mixed-radix space, or a budget error if it
/// overflows u64.
fn tuple_count(dims: &[usize]) -> Result<u64> {
    let mut total = 1u64;
    for &d in dims {
        total = total
            .checked_mul(d as u64)
            .ok_or_else(|| Error::BudgetExceeded {
                what: "tuple space".into(),
                required: u64::MAX,
                allowed: u64::MAX,
            })?;
    }
    Ok(total)
}

/// Decodes `index` into digits, first position most significant, so that
/// ascending indices enumerate tuples in lexicographic order.
fn decode_mixed_radix(mut index: u64, dims: &[usize]) -> Vec<usize> {
    let mut digits = vec![0usize; dims.len()];
    for (slot, &dim) in dims.iter().enumerate().rev() {
        digits[slot] = (index % dim as u64) as usize;
        index /= dim as u64;
    }
    digits
}

/// `C(n, k)`, saturating at `u64::MAX`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// The `rank`-th strictly increasing `k`-subset of `0..n` in lexicographic
/// order.
fn unrank_combination(n: u64, k: u64, mut rank: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(k as usize);
    let mut next = 0u64;
    for slot in 0..k {
        let mut c = next;
        loop {
            let with_c = binomial(n - 1 - c, k - 1 - slot);
            if rank < with_c {
                out.push(c as usize);
                next = c + 1;
                break;
            }
            rank -= with_c;
            c += 1;
        }
    }
    out
}
