//! Integrality of dimensions against the lattice generated by reciprocals
//! of finite-subgroup orders, and instance-level rank-function checks.

use num_integer::Integer;
use num_traits::{One, Signed};

use crate::dimension::{DimensionEngine, DimensionValue, PresentedModule};
use crate::error::Result;
use crate::group::Group;
use crate::group_ring::GroupRingMatrix;
use crate::scalars::{rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralityVerdict {
    pub dimension: DimensionValue,
    /// lcm of the finite-subgroup orders.
    pub lcm: u64,
    /// `dimension · lcm ∈ ℤ`.
    pub pass: bool,
    /// The dimension is exact, so the verdict is certain.
    pub certified: bool,
    /// The order set was declared rather than enumerated.
    pub conditional: bool,
}

impl IntegralityVerdict {
    pub fn status(&self) -> &'static str {
        match (self.pass, self.certified) {
            (true, true) => "pass",
            (false, true) => "fail",
            (true, false) => "pass-uncertified",
            (false, false) => "fail-uncertified",
        }
    }
}

pub fn subgroup_lcm(group: &Group) -> u64 {
    group.finite_subgroup_orders().iter().fold(1u64, |acc, &k| acc.lcm(&k))
}

/// Whether `dim_fp(M)` lies in `(1/l)ℤ`.
pub fn atiyah_check(engine: &DimensionEngine, m: &PresentedModule) -> Result<IntegralityVerdict> {
    let dimension = engine.dim_fp(m)?;
    let lcm = subgroup_lcm(m.group());
    let scaled: Rational = dimension.value() * rational(lcm as i64, 1);
    Ok(IntegralityVerdict {
        pass: scaled.is_integer(),
        certified: dimension.is_exact(),
        conditional: matches!(m.group(), Group::Crossed(_)),
        dimension,
        lcm,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankFunctionReport {
    pub dims: Vec<DimensionValue>,
    /// `ρ(ℂΓ) = 1` for every group that occurs.
    pub normalized: bool,
    pub nonnegative: bool,
    /// `ρ(M_i ⊕ M_{i+1}) = ρ(M_i) + ρ(M_{i+1})` for consecutive samples over
    /// the same group.
    pub additive: bool,
}

impl RankFunctionReport {
    pub fn pass(&self) -> bool {
        self.normalized && self.nonnegative && self.additive
    }
}

/// Checks that `M ↦ dim_fp(M)` behaves as a projective rank function on
/// the samples.
pub fn rank_function_report(engine: &DimensionEngine, samples: &[PresentedModule]) -> Result<RankFunctionReport> {
    let dims = samples.iter().map(|m| engine.dim_fp(m)).collect::<Result<Vec<_>>>()?;
    let mut normalized = true;
    let mut seen: Vec<&Group> = Vec::new();
    for m in samples {
        if !seen.contains(&m.group()) {
            seen.push(m.group());
            normalized &= engine.dim_fp(&PresentedModule::free(m.group(), 1))?.value().is_one();
        }
    }
    let nonnegative = dims.iter().all(|d| !d.value().is_negative());
    let mut additive = true;
    for (i, pair) in samples.windows(2).enumerate() {
        if pair[0].group() != pair[1].group() {
            continue;
        }
        let sum: GroupRingMatrix = pair[0].matrix().block_diag(pair[1].matrix())?;
        let total = engine.dim_fp(&PresentedModule::new(sum))?;
        additive &= *total.value() == dims[i].value() + dims[i + 1].value();
    }
    Ok(RankFunctionReport { dims, normalized, nonnegative, additive })
}
