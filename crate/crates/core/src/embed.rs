//! Involution-preserving embeddings between *-simple algebras:
//! construction, exact verification, and the case analysis that picks a
//! construction for a given source/target pair.
//!
//! Five primitive maps cover every construction the library emits:
//!
//! - corner: pad `M_m` into the upper-left corner of `M_n` (transpose to
//!   transpose);
//! - symplectic-pad: pad each `m x m` block of `M_2m` into the matching
//!   `n x n` block of `M_2n` (symplectic to symplectic);
//! - diagonal-double: `a -> diag(a, a)` from `(M_m, t)` into `(M_2m, s)`;
//! - exchange-pad: corner-pad both coordinates of an exchange pair;
//! - exchange-to-symplectic: `(A, B) -> diag(A, B^t)` into `(M_2k, s)`.
//!
//! All are injective homomorphisms but not necessarily unital (a corner
//! embedding with `m < n` sends the unit to a proper idempotent), so
//! unitality is tracked as a flag and never assumed.

use serde::Serialize;

use crate::algebra::{Element, InvolutionKind, Parity, StarAlgebra};
use crate::checker::{check_containment, Budget, ContainmentReport};
use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::parallel::find_first;
use crate::rat::{rat, Rat};

/// One building block of an embedding plan.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrimitiveMap {
    /// `(M_m, t) -> (M_n, t)`, upper-left corner.
    Corner { from: usize, to: usize },
    /// `(M_2m, s) -> (M_2n, s)`, blockwise corner padding.
    SymplecticPad { from: usize, to: usize },
    /// `(M_m, t) -> (M_2m, s)`, `a -> diag(a, a)` in the block convention
    /// of the symplectic conjugator.
    DiagonalDouble { size: usize },
    /// `ex:k -> ex:l`, corner padding in both coordinates.
    ExchangePad { from: usize, to: usize },
    /// `ex:k -> (M_2k, s)`, `(A, B) -> diag(A, B^t)`.
    ExchangeToSymplectic { size: usize },
    /// Negative control: symplectic padding with the sign of the image's
    /// upper-left block flipped. Not a homomorphism; it claims to preserve
    /// the involution so the verifier can demonstrate the failure.
    CorruptedSymplecticPad { from: usize, to: usize },
}

impl PrimitiveMap {
    pub fn source_kind(&self) -> InvolutionKind {
        match *self {
            PrimitiveMap::Corner { from, .. } => InvolutionKind::Transpose(from),
            PrimitiveMap::SymplecticPad { from, .. } => InvolutionKind::Symplectic(from),
            PrimitiveMap::DiagonalDouble { size } => InvolutionKind::Transpose(size),
            PrimitiveMap::ExchangePad { from, .. } => InvolutionKind::Exchange(from),
            PrimitiveMap::ExchangeToSymplectic { size } => InvolutionKind::Exchange(size),
            PrimitiveMap::CorruptedSymplecticPad { from, .. } => InvolutionKind::Symplectic(from),
        }
    }

    pub fn target_kind(&self) -> InvolutionKind {
        match *self {
            PrimitiveMap::Corner { to, .. } => InvolutionKind::Transpose(to),
            PrimitiveMap::SymplecticPad { to, .. } => InvolutionKind::Symplectic(to),
            PrimitiveMap::DiagonalDouble { size } => InvolutionKind::Symplectic(2 * size),
            PrimitiveMap::ExchangePad { to, .. } => InvolutionKind::Exchange(to),
            PrimitiveMap::ExchangeToSymplectic { size } => InvolutionKind::Symplectic(2 * size),
            PrimitiveMap::CorruptedSymplecticPad { to, .. } => InvolutionKind::Symplectic(to),
        }
    }

    /// Whether the map sends the unit to the unit.
    pub fn is_unital(&self) -> bool {
        match *self {
            PrimitiveMap::Corner { from, to } | PrimitiveMap::SymplecticPad { from, to } => from == to,
            PrimitiveMap::ExchangePad { from, to } => from == to,
            PrimitiveMap::DiagonalDouble { .. } | PrimitiveMap::ExchangeToSymplectic { .. } => true,
            PrimitiveMap::CorruptedSymplecticPad { .. } => false,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            PrimitiveMap::Corner { .. } => "corner",
            PrimitiveMap::SymplecticPad { .. } => "symplectic-pad",
            PrimitiveMap::DiagonalDouble { .. } => "diagonal-double",
            PrimitiveMap::ExchangePad { .. } => "exchange-pad",
            PrimitiveMap::ExchangeToSymplectic { .. } => "exchange-to-symplectic",
            PrimitiveMap::CorruptedSymplecticPad { .. } => "corrupted-symplectic-pad",
        }
    }

    fn validate(&self) -> Result<()> {
        self.source_kind().validate()?;
        self.target_kind().validate()?;
        let ok = match *self {
            PrimitiveMap::Corner { from, to } | PrimitiveMap::ExchangePad { from, to } => from <= to,
            PrimitiveMap::SymplecticPad { from, to }
            | PrimitiveMap::CorruptedSymplecticPad { from, to } => from <= to,
            PrimitiveMap::DiagonalDouble { .. } | PrimitiveMap::ExchangeToSymplectic { .. } => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::SizeConstraint(format!(
                "{}: source size must not exceed target size",
                self.label()
            )))
        }
    }

    /// Applies the map to an element of the source algebra.
    fn apply(&self, e: &Element) -> Element {
        match *self {
            PrimitiveMap::Corner { to, .. } => {
                let mut out = RatMatrix::zero(to, to);
                out.set_block(0, 0, e.matrix());
                Element::Matrix(out)
            }
            PrimitiveMap::SymplecticPad { from, to } => {
                Element::Matrix(pad_symplectic_blocks(e.matrix(), from / 2, to / 2, false))
            }
            PrimitiveMap::CorruptedSymplecticPad { from, to } => {
                Element::Matrix(pad_symplectic_blocks(e.matrix(), from / 2, to / 2, true))
            }
            PrimitiveMap::DiagonalDouble { size } => {
                let m = e.matrix();
                let mut out = RatMatrix::zero(2 * size, 2 * size);
                out.set_block(0, 0, m);
                out.set_block(size, size, m);
                Element::Matrix(out)
            }
            PrimitiveMap::ExchangePad { to, .. } => {
                let (a, b) = e.pair();
                let mut pa = RatMatrix::zero(to, to);
                let mut pb = RatMatrix::zero(to, to);
                pa.set_block(0, 0, a);
                pb.set_block(0, 0, b);
                Element::Pair(pa, pb)
            }
            PrimitiveMap::ExchangeToSymplectic { size } => {
                let (a, b) = e.pair();
                let mut out = RatMatrix::zero(2 * size, 2 * size);
                out.set_block(0, 0, a);
                out.set_block(size, size, &b.transpose());
                Element::Matrix(out)
            }
        }
    }
}

/// Pads each `m x m` block of a `2m x 2m` matrix into the matching
/// `n x n` block of a `2n x 2n` matrix. `flip_top_left` negates the image
/// of the upper-left block (the corrupted variant).
fn pad_symplectic_blocks(x: &RatMatrix, m: usize, n: usize, flip_top_left: bool) -> RatMatrix {
    let mut out = RatMatrix::zero(2 * n, 2 * n);
    for (bi, bj) in [(0usize, 0usize), (0, 1), (1, 0), (1, 1)] {
        let block = x.block(bi * m, bj * m, m, m);
        let block = if flip_top_left && (bi, bj) == (0, 0) { -&block } else { block };
        out.set_block(bi * n, bj * n, &block);
    }
    out
}

impl Serialize for PrimitiveMap {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("PrimitiveMap", 3)?;
        st.serialize_field("kind", self.label())?;
        st.serialize_field("from", &self.source_kind().to_string())?;
        st.serialize_field("to", &self.target_kind().to_string())?;
        st.end()
    }
}

/// A named, composable, concretely applicable map between *-algebras.
#[derive(Clone, Debug, Serialize)]
pub struct EmbeddingPlan {
    #[serde(serialize_with = "descriptor_of")]
    source: StarAlgebra,
    #[serde(serialize_with = "descriptor_of")]
    target: StarAlgebra,
    steps: Vec<PrimitiveMap>,
    preserves_involution: bool,
    unital: bool,
}

fn descriptor_of<S: serde::Serializer>(a: &StarAlgebra, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(&a.descriptor())
}

impl EmbeddingPlan {
    /// Plan whose declared source and target are the natural *-algebras of
    /// the step chain; involution preservation is claimed for every step.
    pub fn from_steps(steps: Vec<PrimitiveMap>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::InvalidInput("a plan needs at least one step".into()));
        }
        for step in &steps {
            step.validate()?;
        }
        for pair in steps.windows(2) {
            if pair[0].target_kind() != pair[1].source_kind() {
                return Err(Error::SizeConstraint(format!(
                    "steps do not compose: {} ends at {} but {} starts at {}",
                    pair[0].label(),
                    pair[0].target_kind(),
                    pair[1].label(),
                    pair[1].source_kind()
                )));
            }
        }
        let unital = steps.iter().all(PrimitiveMap::is_unital);
        let source = StarAlgebra::new(steps.first().expect("nonempty").source_kind())?;
        let target = StarAlgebra::new(steps.last().expect("nonempty").target_kind())?;
        Ok(EmbeddingPlan { source, target, steps, preserves_involution: true, unital })
    }

    /// Plan that only claims to be an embedding of plain algebras: the
    /// declared source involution may disagree with the steps' natural
    /// source, and the involution-preservation check is skipped.
    pub fn algebra_only(source: StarAlgebra, steps: Vec<PrimitiveMap>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::InvalidInput("a plan needs at least one step".into()));
        }
        for step in &steps {
            step.validate()?;
        }
        if source.kind().matrix_size() != steps[0].source_kind().matrix_size()
            || matches!(source.kind(), InvolutionKind::Exchange(_))
                != matches!(steps[0].source_kind(), InvolutionKind::Exchange(_))
        {
            return Err(Error::ShapeMismatch(
                "declared source elements do not fit the first step".into(),
            ));
        }
        for pair in steps.windows(2) {
            if pair[0].target_kind() != pair[1].source_kind() {
                return Err(Error::SizeConstraint("steps do not compose".into()));
            }
        }
        let unital = steps.iter().all(PrimitiveMap::is_unital);
        let target = StarAlgebra::new(steps.last().expect("nonempty").target_kind())?;
        Ok(EmbeddingPlan { source, target, steps, preserves_involution: false, unital })
    }

    pub fn corner(from: usize, to: usize) -> Result<Self> {
        Self::from_steps(vec![PrimitiveMap::Corner { from, to }])
    }

    pub fn symplectic_pad(from: usize, to: usize) -> Result<Self> {
        Self::from_steps(vec![PrimitiveMap::SymplecticPad { from, to }])
    }

    pub fn diagonal_double(size: usize) -> Result<Self> {
        Self::from_steps(vec![PrimitiveMap::DiagonalDouble { size }])
    }

    pub fn exchange_pad(from: usize, to: usize) -> Result<Self> {
        Self::from_steps(vec![PrimitiveMap::ExchangePad { from, to }])
    }

    pub fn exchange_to_symplectic(size: usize) -> Result<Self> {
        Self::from_steps(vec![PrimitiveMap::ExchangeToSymplectic { size }])
    }

    /// The deliberately broken symplectic padding; `verify` must fail its
    /// involution-preservation and multiplicativity checks.
    pub fn corrupted_symplectic_pad(from: usize, to: usize) -> Result<Self> {
        Self::from_steps(vec![PrimitiveMap::CorruptedSymplecticPad { from, to }])
    }

    /// Composition `other . self` (apply `self` first).
    pub fn compose(&self, other: &EmbeddingPlan) -> Result<EmbeddingPlan> {
        if self.target.kind() != other.source.kind() {
            return Err(Error::SizeConstraint(format!(
                "plans do not compose: {} then {}",
                self.target.descriptor(),
                other.source.descriptor()
            )));
        }
        let mut steps = self.steps.clone();
        steps.extend(other.steps.iter().copied());
        Ok(EmbeddingPlan {
            source: self.source.clone(),
            target: other.target.clone(),
            steps,
            preserves_involution: self.preserves_involution && other.preserves_involution,
            unital: self.unital && other.unital,
        })
    }

    pub fn source(&self) -> &StarAlgebra {
        &self.source
    }

    pub fn target(&self) -> &StarAlgebra {
        &self.target
    }

    pub fn steps(&self) -> &[PrimitiveMap] {
        &self.steps
    }

    pub fn preserves_involution(&self) -> bool {
        self.preserves_involution
    }

    pub fn is_unital(&self) -> bool {
        self.unital
    }

    /// Applies the composite map.
    pub fn apply(&self, e: &Element) -> Result<Element> {
        if !self.source.contains(e) {
            return Err(Error::ShapeMismatch(format!(
                "element does not belong to the plan source {}",
                self.source.descriptor()
            )));
        }
        Ok(self.steps.iter().fold(e.clone(), |acc, step| step.apply(&acc)))
    }

    /// Runs the exact finite verification suite; see `VerificationReport`.
    pub fn verify(&self, workers: usize) -> VerificationReport {
        verify_plan(self, workers)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "kebab-case")]
pub enum CheckOutcome {
    Pass,
    Fail(String),
    Skipped(String),
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationCheck {
    pub name: &'static str,
    #[serde(flatten)]
    pub outcome: CheckOutcome,
}

/// Outcome of the exact finite checks, each sufficient by (bi)linearity:
/// additivity and scalar compatibility on the basis, multiplicativity on
/// all basis pairs, involution preservation on the basis (skipped with a
/// notice when the plan does not claim it), injectivity by rank of the
/// linearized map, and consistency of the unitality flag.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<VerificationCheck>,
    pub all_passed: bool,
}

impl VerificationReport {
    pub fn check(&self, name: &str) -> Option<&VerificationCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn verify_plan(plan: &EmbeddingPlan, workers: usize) -> VerificationReport {
    let src = &plan.source;
    let tgt = &plan.target;
    let basis = src.space_basis(Parity::X);
    let images: Vec<Element> = basis.iter().map(|b| plan.apply(b).expect("basis member")).collect();
    let mut checks = Vec::new();

    // Additivity on basis pairs.
    let additivity = find_first(
        (basis.len() * basis.len()) as u64,
        workers,
        |idx| {
            let (i, j) = (idx as usize / basis.len(), idx as usize % basis.len());
            let lhs = plan.apply(&(&basis[i] + &basis[j])).expect("member");
            let rhs = &images[i] + &images[j];
            (lhs != rhs).then(|| format!("basis pair ({i}, {j}): f(b{i} + b{j}) != f(b{i}) + f(b{j})"))
        },
    );
    checks.push(VerificationCheck {
        name: "additivity",
        outcome: match additivity {
            None => CheckOutcome::Pass,
            Some((_, msg)) => CheckOutcome::Fail(msg),
        },
    });

    // Scalar compatibility on the basis.
    let scalars = [rat(2, 1), rat(-1, 1), rat(3, 2)];
    let mut scalar_outcome = CheckOutcome::Pass;
    'scalar: for (i, b) in basis.iter().enumerate() {
        for c in &scalars {
            let lhs = plan.apply(&b.scale(c)).expect("member");
            if lhs != images[i].scale(c) {
                scalar_outcome =
                    CheckOutcome::Fail(format!("basis {i}, scalar {}: f(c*b) != c*f(b)", c));
                break 'scalar;
            }
        }
    }
    checks.push(VerificationCheck { name: "scalar-compatibility", outcome: scalar_outcome });

    // Multiplicativity on all basis pairs.
    let multiplicativity = find_first(
        (basis.len() * basis.len()) as u64,
        workers,
        |idx| {
            let (i, j) = (idx as usize / basis.len(), idx as usize % basis.len());
            let product = src.multiply_unchecked(&basis[i], &basis[j]);
            let lhs = plan.apply(&product).expect("member");
            let rhs = tgt.multiply_unchecked(&images[i], &images[j]);
            (lhs != rhs).then(|| {
                format!(
                    "basis pair ({i}, {j}): f(b{i} * b{j}) = {} but f(b{i}) * f(b{j}) = {}",
                    lhs.render(),
                    rhs.render()
                )
            })
        },
    );
    checks.push(VerificationCheck {
        name: "multiplicativity",
        outcome: match multiplicativity {
            None => CheckOutcome::Pass,
            Some((_, msg)) => CheckOutcome::Fail(msg),
        },
    });

    // Involution preservation on the basis.
    let involution_outcome = if plan.preserves_involution {
        let mut outcome = CheckOutcome::Pass;
        for (i, b) in basis.iter().enumerate() {
            let lhs = plan.apply(&src.involute_unchecked(b)).expect("member");
            let rhs = tgt.involute_unchecked(&images[i]);
            if lhs != rhs {
                outcome = CheckOutcome::Fail(format!(
                    "basis {i} ({}): f(b*) = {} but f(b)* = {}",
                    b.render(),
                    lhs.render(),
                    rhs.render()
                ));
                break;
            }
        }
        outcome
    } else {
        CheckOutcome::Skipped("plan does not claim involution preservation".into())
    };
    checks.push(VerificationCheck { name: "involution-preservation", outcome: involution_outcome });

    // Injectivity via the rank of the linearized map.
    let columns: Vec<Vec<Rat>> = images.iter().map(|im| tgt.coords(im)).collect();
    let mut linearized = RatMatrix::zero(tgt.dim(), src.dim());
    for (j, col) in columns.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            linearized[(i, j)] = v.clone();
        }
    }
    let rank = crate::linalg::rank(&linearized);
    checks.push(VerificationCheck {
        name: "injectivity-rank",
        outcome: if rank == src.dim() {
            CheckOutcome::Pass
        } else {
            CheckOutcome::Fail(format!("rank {} < source dimension {}", rank, src.dim()))
        },
    });

    // The unitality flag must match what the map actually does.
    let maps_unit_to_unit = plan.apply(&src.identity()).expect("member") == tgt.identity();
    checks.push(VerificationCheck {
        name: "unitality-flag",
        outcome: if maps_unit_to_unit == plan.unital {
            CheckOutcome::Pass
        } else {
            CheckOutcome::Fail(format!(
                "flag says unital = {}, map says {}",
                plan.unital, maps_unit_to_unit
            ))
        },
    });

    let all_passed = checks.iter().all(|c| !matches!(c.outcome, CheckOutcome::Fail(_)));
    VerificationReport { checks, all_passed }
}

/// What `decide` concluded for a source/target pair.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum DecideOutcome {
    /// An involution-preserving embedding.
    StarEmbedding { plan: EmbeddingPlan },
    /// An embedding of plain algebras only.
    AlgebraEmbedding { plan: EmbeddingPlan },
    /// No construction is available for this pair.
    NoConstruction { reason: String },
}

#[derive(Clone, Debug, Serialize)]
pub struct DecideReport {
    pub source: String,
    pub target: String,
    /// Empirical premise: every identity of the target holds in the
    /// source, checked degree by degree up to the truncation bound. This
    /// is evidence, never proof; the construction is chosen from the
    /// descriptor shapes alone.
    pub premise: ContainmentReport,
    pub premise_holds_truncated: bool,
    pub outcome: DecideOutcome,
    pub note: Option<String>,
}

impl DecideReport {
    pub fn plan(&self) -> Option<&EmbeddingPlan> {
        match &self.outcome {
            DecideOutcome::StarEmbedding { plan } | DecideOutcome::AlgebraEmbedding { plan } => {
                Some(plan)
            }
            DecideOutcome::NoConstruction { .. } => None,
        }
    }
}

/// Picks the construction embedding `from` into `to` (or reports why none
/// applies), after running the truncated identity-containment premise
/// check `Id(to) <= Id(from)`.
pub fn decide(
    from: &StarAlgebra,
    to: &StarAlgebra,
    d_max: usize,
    budget: &Budget,
    workers: usize,
) -> Result<DecideReport> {
    let premise = check_containment(to, from, d_max, budget, workers)?;
    let premise_holds_truncated = premise.contained;
    let mut note = None;

    use InvolutionKind::*;
    let outcome = match (from.kind(), to.kind()) {
        (Transpose(m), Transpose(n)) => {
            if m <= n {
                DecideOutcome::StarEmbedding { plan: EmbeddingPlan::corner(m, n)? }
            } else {
                DecideOutcome::NoConstruction {
                    reason: format!(
                        "minimal-degree obstruction: the skew standard identity of degree {} \
                         holds in t:{n} but the minimal skew standard degree of t:{m} is {}, \
                         so the identities of t:{n} cannot all hold in t:{m}",
                        2 * n - 2,
                        2 * m - 2
                    ),
                }
            }
        }
        (Symplectic(m2), Symplectic(n2)) => {
            if m2 <= n2 {
                DecideOutcome::StarEmbedding { plan: EmbeddingPlan::symplectic_pad(m2, n2)? }
            } else {
                DecideOutcome::NoConstruction {
                    reason: format!(
                        "minimal-degree obstruction: the skew standard identity of degree {} \
                         holds in s:{n2} but the minimal skew standard degree of s:{m2} is {}",
                        2 * n2,
                        2 * m2
                    ),
                }
            }
        }
        (Transpose(n), Symplectic(m2)) => {
            let m = m2 / 2;
            if n <= m {
                let plan = EmbeddingPlan::corner(n, m)?.compose(&EmbeddingPlan::diagonal_double(m)?)?;
                DecideOutcome::StarEmbedding { plan }
            } else {
                DecideOutcome::NoConstruction {
                    reason: format!(
                        "identity-ideal obstruction: for half-size {m} < {n} the identities \
                         of s:{m2} are not all identities of t:{n}, so no involution-preserving \
                         embedding of t:{n} into s:{m2} exists"
                    ),
                }
            }
        }
        (Symplectic(n2), Transpose(m)) => {
            if m > n2 {
                note = Some(
                    "only an embedding of plain algebras is available in this direction; \
                     no involution-preserving construction is known"
                        .to_string(),
                );
                let plan = EmbeddingPlan::algebra_only(
                    from.clone(),
                    vec![PrimitiveMap::Corner { from: n2, to: m }],
                )?;
                DecideOutcome::AlgebraEmbedding { plan }
            } else {
                DecideOutcome::NoConstruction {
                    reason: format!(
                        "minimal-degree obstruction: the identities of t:{m} can only all hold \
                         in s:{n2} when {} >= {}, i.e. target size > {n2}",
                        2 * m - 2,
                        2 * n2
                    ),
                }
            }
        }
        (Exchange(l), Symplectic(n)) => {
            if 2 * l <= n {
                let mut steps = vec![PrimitiveMap::ExchangeToSymplectic { size: l }];
                if 2 * l < n {
                    steps.push(PrimitiveMap::SymplecticPad { from: 2 * l, to: n });
                }
                DecideOutcome::StarEmbedding { plan: EmbeddingPlan::from_steps(steps)? }
            } else if l <= n {
                note = Some(format!(
                    "target doubled to s:{}: an exchange source of size {l} does not fit \
                     s:{n}, and the guaranteed involution-preserving target is the symplectic \
                     algebra of twice the requested size",
                    2 * n
                ));
                let plan = EmbeddingPlan::from_steps(vec![
                    PrimitiveMap::ExchangeToSymplectic { size: l },
                    PrimitiveMap::SymplecticPad { from: 2 * l, to: 2 * n },
                ])?;
                DecideOutcome::StarEmbedding { plan }
            } else {
                DecideOutcome::NoConstruction {
                    reason: format!(
                        "minimal-degree obstruction: the symmetric standard identity of degree \
                         {} holds in s:{n} but the minimal symmetric standard degree of ex:{l} \
                         is {}",
                        2 * n - 2,
                        2 * l
                    ),
                }
            }
        }
        (Exchange(k), Exchange(l)) => {
            if k <= l {
                DecideOutcome::StarEmbedding { plan: EmbeddingPlan::exchange_pad(k, l)? }
            } else {
                DecideOutcome::NoConstruction {
                    reason: format!(
                        "minimal-degree obstruction: the symmetric standard identity of degree \
                         {} holds in ex:{l} but the minimal symmetric standard degree of ex:{k} \
                         is {}",
                        2 * l,
                        2 * k
                    ),
                }
            }
        }
        (Transpose(_), Exchange(_)) | (Symplectic(_), Exchange(_)) | (Exchange(_), Transpose(_)) => {
            DecideOutcome::NoConstruction {
                reason: format!(
                    "no construction is available from {} into {}",
                    from.descriptor(),
                    to.descriptor()
                ),
            }
        }
    };

    Ok(DecideReport {
        source: from.descriptor(),
        target: to.descriptor(),
        premise,
        premise_holds_truncated,
        outcome,
        note,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checker::check_containment;
    use crate::rat::rat_int;

    fn alg(desc: &str) -> StarAlgebra {
        StarAlgebra::from_descriptor(desc).unwrap()
    }

    #[test]
    fn symplectic_pad_matches_the_displayed_pattern() {
        let plan = EmbeddingPlan::symplectic_pad(2, 4).unwrap();
        let x = Element::Matrix(RatMatrix::from_int_rows(&[&[1, 2], &[3, 4]]));
        let image = plan.apply(&x).unwrap();
        let expected = RatMatrix::from_int_rows(&[
            &[1, 0, 2, 0],
            &[0, 0, 0, 0],
            &[3, 0, 4, 0],
            &[0, 0, 0, 0],
        ]);
        assert_eq!(image, Element::Matrix(expected));
    }

    #[test]
    fn corner_keeps_units_in_place() {
        let plan = EmbeddingPlan::corner(2, 3).unwrap();
        let e22 = Element::Matrix(RatMatrix::unit(2, 1, 1));
        assert_eq!(plan.apply(&e22).unwrap(), Element::Matrix(RatMatrix::unit(3, 1, 1)));
        assert!(plan.apply(&alg("t:2").zero()).unwrap().is_zero());
    }

    #[test]
    fn diagonal_double_commutes_with_involutions() {
        let plan = EmbeddingPlan::diagonal_double(1).unwrap();
        let a = Element::Matrix(RatMatrix::new(1, 1, vec![rat_int(5)]));
        let image = plan.apply(&a).unwrap();
        assert_eq!(image, Element::Matrix(RatMatrix::from_int_rows(&[&[5, 0], &[0, 5]])));
        let s2 = alg("s:2");
        let t1 = alg("t:1");
        assert_eq!(
            s2.involute(&image).unwrap(),
            plan.apply(&t1.involute(&a).unwrap()).unwrap()
        );
    }

    #[test]
    fn exchange_to_symplectic_is_diag_and_star_compatible() {
        let plan = EmbeddingPlan::exchange_to_symplectic(1).unwrap();
        let x = Element::Pair(
            RatMatrix::new(1, 1, vec![rat_int(2)]),
            RatMatrix::new(1, 1, vec![rat_int(7)]),
        );
        let image = plan.apply(&x).unwrap();
        assert_eq!(image, Element::Matrix(RatMatrix::from_int_rows(&[&[2, 0], &[0, 7]])));

        let ex1 = alg("ex:1");
        let s2 = alg("s:2");
        let swapped = plan.apply(&ex1.involute(&x).unwrap()).unwrap();
        assert_eq!(swapped, s2.involute(&image).unwrap());
    }

    #[test]
    fn composition_follows_the_block_convention() {
        let plan = EmbeddingPlan::corner(1, 2)
            .unwrap()
            .compose(&EmbeddingPlan::diagonal_double(2).unwrap())
            .unwrap();
        let a = Element::Matrix(RatMatrix::new(1, 1, vec![rat_int(3)]));
        let image = plan.apply(&a).unwrap();
        let expected = RatMatrix::from_int_rows(&[
            &[3, 0, 0, 0],
            &[0, 0, 0, 0],
            &[0, 0, 3, 0],
            &[0, 0, 0, 0],
        ]);
        assert_eq!(image, Element::Matrix(expected));
        assert_eq!(plan.source().descriptor(), "t:1");
        assert_eq!(plan.target().descriptor(), "s:4");
        assert!(!plan.is_unital());
    }

    #[test]
    fn verify_passes_for_all_primitive_constructions() {
        let mut plans = vec![
            EmbeddingPlan::corner(2, 3).unwrap(),
            EmbeddingPlan::corner(3, 3).unwrap(),
            EmbeddingPlan::symplectic_pad(2, 4).unwrap(),
            EmbeddingPlan::diagonal_double(2).unwrap(),
            EmbeddingPlan::exchange_pad(1, 2).unwrap(),
            EmbeddingPlan::exchange_to_symplectic(2).unwrap(),
        ];
        plans.push(
            EmbeddingPlan::corner(1, 2)
                .unwrap()
                .compose(&EmbeddingPlan::diagonal_double(2).unwrap())
                .unwrap(),
        );
        for plan in &plans {
            let report = plan.verify(1);
            assert!(
                report.all_passed,
                "{:?}: {:?}",
                plan.steps(),
                report.checks.iter().find(|c| matches!(c.outcome, CheckOutcome::Fail(_)))
            );
        }
    }

    #[test]
    fn corrupted_pad_fails_with_a_named_counterexample() {
        let plan = EmbeddingPlan::corrupted_symplectic_pad(2, 4).unwrap();
        let report = plan.verify(1);
        assert!(!report.all_passed);
        let involution = report.check("involution-preservation").unwrap();
        match &involution.outcome {
            CheckOutcome::Fail(msg) => assert!(msg.contains("basis"), "{msg}"),
            other => panic!("involution check should fail, got {other:?}"),
        }
        match &report.check("multiplicativity").unwrap().outcome {
            CheckOutcome::Fail(msg) => assert!(msg.contains("basis pair"), "{msg}"),
            other => panic!("multiplicativity should fail, got {other:?}"),
        }
    }

    #[test]
    fn algebra_only_plans_skip_the_involution_check() {
        let plan = EmbeddingPlan::algebra_only(
            alg("s:2"),
            vec![PrimitiveMap::Corner { from: 2, to: 3 }],
        )
        .unwrap();
        let report = plan.verify(1);
        assert!(report.all_passed);
        assert!(matches!(
            report.check("involution-preservation").unwrap().outcome,
            CheckOutcome::Skipped(_)
        ));
    }

    #[test]
    fn size_constraints_are_enforced() {
        assert!(EmbeddingPlan::corner(3, 2).is_err());
        assert!(EmbeddingPlan::symplectic_pad(4, 2).is_err());
        assert!(EmbeddingPlan::exchange_pad(3, 1).is_err());
        assert!(EmbeddingPlan::symplectic_pad(3, 5).is_err());
    }

    #[test]
    fn decide_transpose_to_transpose() {
        let b = Budget::default();
        let r = decide(&alg("t:2"), &alg("t:3"), 2, &b, 1).unwrap();
        let plan = r.plan().expect("construction exists");
        assert_eq!(plan.steps(), &[PrimitiveMap::Corner { from: 2, to: 3 }]);
        assert!(plan.preserves_involution());
        assert!(matches!(r.outcome, DecideOutcome::StarEmbedding { .. }));
        assert!(r.premise_holds_truncated);
    }

    #[test]
    fn decide_exchange_to_symplectic() {
        let b = Budget::default();
        let r = decide(&alg("ex:1"), &alg("s:2"), 2, &b, 1).unwrap();
        let plan = r.plan().expect("construction exists");
        assert_eq!(plan.steps(), &[PrimitiveMap::ExchangeToSymplectic { size: 1 }]);
        assert!(plan.verify(1).all_passed);
    }

    #[test]
    fn decide_rejects_transpose_into_too_small_symplectic() {
        let b = Budget::default();
        let r = decide(&alg("t:3"), &alg("s:4"), 2, &b, 1).unwrap();
        match &r.outcome {
            DecideOutcome::NoConstruction { reason } => {
                assert!(reason.contains("obstruction"), "{reason}");
            }
            other => panic!("expected no construction, got {other:?}"),
        }
    }

    #[test]
    fn decide_transpose_into_symplectic_goes_through_the_double() {
        let b = Budget::default();
        let r = decide(&alg("t:2"), &alg("s:4"), 2, &b, 1).unwrap();
        let plan = r.plan().expect("construction exists");
        assert_eq!(
            plan.steps(),
            &[
                PrimitiveMap::Corner { from: 2, to: 2 },
                PrimitiveMap::DiagonalDouble { size: 2 }
            ]
        );
        assert!(plan.verify(1).all_passed);
        assert!(r.premise_holds_truncated);
    }

    #[test]
    fn decide_symplectic_into_large_transpose_is_algebra_only() {
        let b = Budget::default();
        let r = decide(&alg("s:2"), &alg("t:3"), 2, &b, 1).unwrap();
        match &r.outcome {
            DecideOutcome::AlgebraEmbedding { plan } => {
                assert!(!plan.preserves_involution());
                assert_eq!(plan.steps(), &[PrimitiveMap::Corner { from: 2, to: 3 }]);
                assert!(plan.verify(1).all_passed);
            }
            other => panic!("expected an algebra-only embedding, got {other:?}"),
        }
        assert!(r.note.is_some());

        // m <= 2n: not even a plain-algebra construction is emitted.
        let r = decide(&alg("s:4"), &alg("t:4"), 2, &b, 1).unwrap();
        assert!(matches!(r.outcome, DecideOutcome::NoConstruction { .. }));
    }

    #[test]
    fn decide_exchange_cases() {
        let b = Budget::default();

        let r = decide(&alg("ex:1"), &alg("ex:2"), 2, &b, 1).unwrap();
        let plan = r.plan().unwrap();
        assert_eq!(plan.steps(), &[PrimitiveMap::ExchangePad { from: 1, to: 2 }]);

        // ex:2 into s:2 does not fit; the guaranteed target is s:4.
        let r = decide(&alg("ex:2"), &alg("s:2"), 2, &b, 1).unwrap();
        let plan = r.plan().unwrap();
        assert_eq!(plan.target().descriptor(), "s:4");
        assert!(r.note.as_deref().unwrap_or("").contains("doubled"));
        assert!(plan.verify(1).all_passed);

        // ex:1 into s:4 fits with padding.
        let r = decide(&alg("ex:1"), &alg("s:4"), 2, &b, 1).unwrap();
        let plan = r.plan().unwrap();
        assert_eq!(
            plan.steps(),
            &[
                PrimitiveMap::ExchangeToSymplectic { size: 1 },
                PrimitiveMap::SymplecticPad { from: 2, to: 4 }
            ]
        );
        assert!(plan.verify(1).all_passed);

        // No constructions into or out of exchange otherwise.
        for (a, bb) in [("t:2", "ex:2"), ("s:2", "ex:2"), ("ex:2", "t:2")] {
            let r = decide(&alg(a), &alg(bb), 1, &b, 1).unwrap();
            assert!(matches!(r.outcome, DecideOutcome::NoConstruction { .. }), "{a} -> {bb}");
        }
    }

    #[test]
    fn star_plans_inherit_identities_from_the_target() {
        let b = Budget::default();
        let plans = [
            EmbeddingPlan::corner(1, 3).unwrap(),
            EmbeddingPlan::symplectic_pad(2, 4).unwrap(),
            EmbeddingPlan::diagonal_double(2).unwrap(),
            EmbeddingPlan::exchange_pad(1, 2).unwrap(),
            EmbeddingPlan::exchange_to_symplectic(1).unwrap(),
        ];
        for plan in &plans {
            let r = check_containment(plan.target(), plan.source(), 2, &b, 1).unwrap();
            assert!(
                r.contained,
                "{} -> {}",
                plan.source().descriptor(),
                plan.target().descriptor()
            );
        }
    }

    #[test]
    fn diagonal_double_maps_parities_into_parities() {
        let plan = EmbeddingPlan::diagonal_double(3).unwrap();
        let (src, tgt) = (plan.source().clone(), plan.target().clone());
        for y in src.space_basis(Parity::Y) {
            let im = plan.apply(y).unwrap();
            assert_eq!(tgt.involute(&im).unwrap(), im);
        }
        for z in src.space_basis(Parity::Z) {
            let im = plan.apply(z).unwrap();
            assert_eq!(tgt.involute(&im).unwrap(), -&im);
        }
    }

    #[test]
    fn exchange_to_symplectic_maps_parities_into_parities() {
        let plan = EmbeddingPlan::exchange_to_symplectic(2).unwrap();
        let (src, tgt) = (plan.source().clone(), plan.target().clone());
        for y in src.space_basis(Parity::Y) {
            let im = plan.apply(y).unwrap();
            assert_eq!(tgt.involute(&im).unwrap(), im);
        }
        for z in src.space_basis(Parity::Z) {
            let im = plan.apply(z).unwrap();
            assert_eq!(tgt.involute(&im).unwrap(), -&im);
        }
    }

    #[test]
    fn composition_of_verified_plans_verifies() {
        let pairs = [
            (
                EmbeddingPlan::corner(1, 2).unwrap(),
                EmbeddingPlan::corner(2, 4).unwrap(),
            ),
            (
                EmbeddingPlan::corner(2, 3).unwrap(),
                EmbeddingPlan::diagonal_double(3).unwrap(),
            ),
            (
                EmbeddingPlan::exchange_to_symplectic(1).unwrap(),
                EmbeddingPlan::symplectic_pad(2, 6).unwrap(),
            ),
        ];
        for (p, q) in &pairs {
            assert!(p.verify(1).all_passed);
            assert!(q.verify(1).all_passed);
            let composed = p.compose(q).unwrap();
            assert!(composed.verify(1).all_passed);
        }
        // Mismatched shapes refuse to compose.
        assert!(EmbeddingPlan::corner(1, 2)
            .unwrap()
            .compose(&EmbeddingPlan::corner(3, 4).unwrap())
            .is_err());
    }

    #[test]
    fn plan_verification_is_worker_independent() {
        let plan = EmbeddingPlan::corrupted_symplectic_pad(2, 4).unwrap();
        let baseline = serde_json::to_string(&plan.verify(1)).unwrap();
        for workers in [2, 8] {
            assert_eq!(serde_json::to_string(&plan.verify(workers)).unwrap(), baseline);
        }
    }
}
