//! Γ-dimensions of finitely presented modules and the rank function
//! `A ↦ dim_Γ(image of A)`, with one backend per group family.

mod free_oracle;
mod induction;

use std::fmt;
use std::sync::Arc;

use num_traits::{Signed, Zero};

pub use free_oracle::{forced_rank_bounds, FreeRankOracle, MatrixEvaluationOracle, OracleConfig};
pub use induction::{base_inclusion, induce, section_inclusion};

use crate::error::{Error, Result};
use crate::group::Group;
use crate::group_ring::{regular_representation_matrix, restriction_index, GroupRingMatrix};
use crate::scalars::linalg::{rank_gaussian, rank_laurent};
use crate::scalars::{rational, Rational};

/// Which procedure produced a dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Backend {
    Abelian,
    Finite,
    Crossed,
    FreeOracle,
    /// Trace of an explicit idempotent.
    Trace,
}

impl Backend {
    pub fn tag(self) -> &'static str {
        match self {
            Self::Abelian => "abelian",
            Self::Finite => "finite",
            Self::Crossed => "crossed",
            Self::FreeOracle => "free-oracle",
            Self::Trace => "trace",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        [Self::Abelian, Self::Finite, Self::Crossed, Self::FreeOracle, Self::Trace].into_iter().find(|b| b.tag() == tag)
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Certainty {
    Exact,
    MonteCarlo,
}

impl Certainty {
    pub fn tag(self) -> &'static str {
        match self {
            Self::Exact => "exact",
            Self::MonteCarlo => "monte-carlo",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        match tag {
            "exact" => Some(Self::Exact),
            "monte-carlo" => Some(Self::MonteCarlo),
            _ => None,
        }
    }

    /// Exact only if both are.
    pub fn and(self, other: Self) -> Self {
        if self == Self::Exact && other == Self::Exact { Self::Exact } else { Self::MonteCarlo }
    }
}

/// A nonnegative rational dimension together with how it was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionValue {
    value: Rational,
    backend: Backend,
    certainty: Certainty,
}

impl DimensionValue {
    pub fn new(value: Rational, backend: Backend, certainty: Certainty) -> Self {
        assert!(!value.is_negative(), "dimensions are nonnegative, got {value}");
        Self { value, backend, certainty }
    }

    pub fn exact(value: Rational, backend: Backend) -> Self {
        Self::new(value, backend, Certainty::Exact)
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    pub fn certainty(&self) -> Certainty {
        self.certainty
    }

    pub fn is_exact(&self) -> bool {
        self.certainty == Certainty::Exact
    }

    /// `n − self`, keeping backend and certainty.
    pub fn complement(&self, n: usize) -> Self {
        Self::new(rational(n as i64, 1) - &self.value, self.backend, self.certainty)
    }
}

impl fmt::Display for DimensionValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Cokernel of `A: ℂΓᵐ → ℂΓⁿ`; rows of `A` index the generators, columns
/// the relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentedModule {
    matrix: GroupRingMatrix,
}

impl PresentedModule {
    pub fn new(matrix: GroupRingMatrix) -> Self {
        Self { matrix }
    }

    /// The free module of rank `n` (no relations).
    pub fn free(group: &Group, n: usize) -> Self {
        Self::new(GroupRingMatrix::zeros(group, n, 0))
    }

    pub fn group(&self) -> &Group {
        self.matrix.group()
    }

    pub fn matrix(&self) -> &GroupRingMatrix {
        &self.matrix
    }

    /// Number of generators.
    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    /// Number of relations.
    pub fn m(&self) -> usize {
        self.matrix.cols()
    }
}

/// Dispatches rank computations by group family. The free-group oracle is
/// pluggable; all other backends are exact.
#[derive(Clone)]
pub struct DimensionEngine {
    config: OracleConfig,
    oracle: Arc<dyn FreeRankOracle>,
}

impl Default for DimensionEngine {
    fn default() -> Self {
        Self::new(OracleConfig::default())
    }
}

impl fmt::Debug for DimensionEngine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DimensionEngine").field("config", &self.config).finish_non_exhaustive()
    }
}

impl DimensionEngine {
    pub fn new(config: OracleConfig) -> Self {
        Self { config, oracle: Arc::new(MatrixEvaluationOracle) }
    }

    pub fn with_oracle(mut self, oracle: Arc<dyn FreeRankOracle>) -> Self {
        self.oracle = oracle;
        self
    }

    pub fn config(&self) -> &OracleConfig {
        &self.config
    }

    /// `dim_Γ` of the image of `A`.
    ///
    /// ℤⁿ: rank over the rational-function field. A nonzero Laurent
    /// polynomial vanishes only on a null set of the torus, so a square
    /// Laurent matrix is invertible over measurable functions exactly when
    /// its determinant is nonzero.
    ///
    /// Finite groups and crossed products with finite H: rank of the
    /// restriction to the base, divided by the index.
    ///
    /// Free groups: exact when the forced bounds meet, otherwise the oracle.
    pub fn rank_gamma(&self, a: &GroupRingMatrix) -> Result<DimensionValue> {
        if a.rows() == 0 || a.cols() == 0 {
            let backend = match a.group() {
                Group::FreeAbelian(_) => Backend::Abelian,
                Group::Finite(_) => Backend::Finite,
                Group::Crossed(_) => Backend::Crossed,
                Group::Free(_) => Backend::FreeOracle,
            };
            return Ok(DimensionValue::exact(Rational::zero(), backend));
        }
        match a.group() {
            Group::FreeAbelian(_) => {
                let r = rank_laurent(&a.to_laurent()?);
                Ok(DimensionValue::exact(rational(r as i64, 1), Backend::Abelian))
            }
            Group::Finite(f) => {
                let rho = regular_representation_matrix(a)?.to_scalars()?;
                Ok(DimensionValue::exact(rational(rank_gaussian(&rho) as i64, f.order() as i64), Backend::Finite))
            }
            Group::Crossed(_) => {
                let index = restriction_index(a.group())?;
                let inner = self.rank_gamma(&regular_representation_matrix(a)?)?;
                Ok(DimensionValue::new(
                    inner.value() / rational(index as i64, 1),
                    Backend::Crossed,
                    inner.certainty(),
                ))
            }
            Group::Free(_) => {
                let (lo, hi) = forced_rank_bounds(a);
                if lo == hi {
                    return Ok(DimensionValue::exact(rational(lo as i64, 1), Backend::FreeOracle));
                }
                let (est, certainty) = self.oracle.rank(a, &self.config)?;
                let clamped = est.max(rational(lo as i64, 1)).min(rational(hi as i64, 1));
                Ok(DimensionValue::new(clamped, Backend::FreeOracle, certainty))
            }
        }
    }

    /// `dim_𝒰Γ(M ⊗ 𝒰Γ) = n − rank_Γ(A)`.
    pub fn dim_fp(&self, m: &PresentedModule) -> Result<DimensionValue> {
        Ok(self.rank_gamma(m.matrix())?.complement(m.n()))
    }

    /// Checks `dim M = dim L + dim N` for the extension presented by
    /// `[[A_sub, A_sub·X + Y·A_quot], [0, A_quot]]`.
    ///
    /// The coupling is assembled from the factors `X` (`m_sub × m_quot`) and
    /// `Y` (`n_sub × n_quot`), which is exactly the form that makes
    /// `0 → L → M → N → 0` exact; `None` means zero.
    pub fn additivity_check(
        &self,
        sub: &PresentedModule,
        quot: &PresentedModule,
        x: Option<&GroupRingMatrix>,
        y: Option<&GroupRingMatrix>,
    ) -> Result<bool> {
        let assembled = extension_presentation(sub, quot, x, y)?;
        let total = self.dim_fp(&assembled)?;
        let parts = self.dim_fp(sub)?.value() + self.dim_fp(quot)?.value();
        Ok(*total.value() == parts)
    }
}

/// The block-triangular presentation used by
/// [`DimensionEngine::additivity_check`].
pub fn extension_presentation(
    sub: &PresentedModule,
    quot: &PresentedModule,
    x: Option<&GroupRingMatrix>,
    y: Option<&GroupRingMatrix>,
) -> Result<PresentedModule> {
    let g = sub.group();
    if quot.group() != g {
        return Err(Error::MismatchedGroups);
    }
    let a = sub.matrix();
    let b = quot.matrix();
    let mut coupling = GroupRingMatrix::zeros(g, a.rows(), b.cols());
    if let Some(x) = x {
        coupling = coupling.add(&a.mul(x)?)?;
    }
    if let Some(y) = y {
        coupling = coupling.add(&y.mul(b)?)?;
    }
    let top = a.hconcat(&coupling)?;
    let bottom = GroupRingMatrix::zeros(g, b.rows(), a.cols()).hconcat(b)?;
    Ok(PresentedModule::new(top.vconcat(&bottom)?))
}

/// [`DimensionEngine::rank_gamma`] with default settings.
pub fn rank_gamma(a: &GroupRingMatrix) -> Result<DimensionValue> {
    DimensionEngine::default().rank_gamma(a)
}

/// [`DimensionEngine::dim_fp`] with default settings.
pub fn dim_fp(m: &PresentedModule) -> Result<DimensionValue> {
    DimensionEngine::default().dim_fp(m)
}
