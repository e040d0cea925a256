//! L²-Betti numbers, Euler characteristics and Tor dimensions of finite
//! free chain complexes, computed from ranks of the boundary maps.

use num_traits::{Signed, Zero};

use crate::dimension::{Certainty, DimensionEngine, DimensionValue, PresentedModule};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::group_ring::GroupRingMatrix;
use crate::scalars::{rational, Rational};

/// `0 ← C₀ ← C₁ ← … ← C_N` with `C_p = ℂΓ^{n_p}` and `d_p` an
/// `n_{p−1} × n_p` matrix acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeChainComplex {
    group: Group,
    ranks: Vec<usize>,
    /// `d_1, …, d_N`.
    boundaries: Vec<GroupRingMatrix>,
}

impl FreeChainComplex {
    /// Validates shapes, groups and `d_p·d_{p+1} = 0`.
    pub fn new(group: &Group, ranks: Vec<usize>, boundaries: Vec<GroupRingMatrix>) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidComplex(m));
        if boundaries.len() + 1 != ranks.len().max(1) {
            return bad(format!("{} ranks need {} boundary maps, got {}", ranks.len(), ranks.len().saturating_sub(1), boundaries.len()));
        }
        for (i, d) in boundaries.iter().enumerate() {
            let p = i + 1;
            if d.group() != group {
                return bad(format!("d{p} is over {}, not {group}", d.group()));
            }
            if d.shape() != (ranks[p - 1], ranks[p]) {
                return bad(format!("d{p} must be {}x{}, got {}x{}", ranks[p - 1], ranks[p], d.rows(), d.cols()));
            }
        }
        for (i, pair) in boundaries.windows(2).enumerate() {
            if !pair[0].mul(&pair[1])?.is_zero() {
                return bad(format!("d{}·d{} is not zero", i + 1, i + 2));
            }
        }
        Ok(Self { group: group.clone(), ranks, boundaries })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn boundaries(&self) -> &[GroupRingMatrix] {
        &self.boundaries
    }

    /// Top degree `N`, or `None` for the empty complex.
    pub fn top_degree(&self) -> Option<usize> {
        self.ranks.len().checked_sub(1)
    }

    /// `d_p`, for `1 ≤ p ≤ N`.
    pub fn boundary(&self, p: usize) -> Option<&GroupRingMatrix> {
        p.checked_sub(1).and_then(|i| self.boundaries.get(i))
    }

    /// The complex moved up one degree, with `C₀ = 0`.
    pub fn shifted(&self) -> Self {
        let mut ranks = vec![0];
        ranks.extend(&self.ranks);
        let mut boundaries = Vec::with_capacity(self.boundaries.len() + 1);
        if let Some(&n0) = self.ranks.first() {
            boundaries.push(GroupRingMatrix::zeros(&self.group, 0, n0));
        }
        boundaries.extend(self.boundaries.iter().cloned());
        Self { group: self.group.clone(), ranks, boundaries }
    }

    /// `Σ (−1)^p n_p`.
    pub fn naive_euler(&self) -> Rational {
        alternating(self.ranks.iter().map(|&n| rational(n as i64, 1)))
    }
}

fn alternating(values: impl Iterator<Item = Rational>) -> Rational {
    values.enumerate().fold(Rational::zero(), |acc, (p, v)| if p % 2 == 0 { acc + v } else { acc - v })
}

/// Per-degree `n_p − r_p − r_{p+1}`, where `r_p = rank_Γ(d_p)`.
fn homology_dims(engine: &DimensionEngine, c: &FreeChainComplex) -> Result<Vec<DimensionValue>> {
    let ranks: Vec<DimensionValue> = c.boundaries.iter().map(|d| engine.rank_gamma(d)).collect::<Result<_>>()?;
    let zero = Rational::zero();
    let mut out = Vec::with_capacity(c.ranks.len());
    for (p, &n) in c.ranks.iter().enumerate() {
        let incoming = if p == 0 { None } else { ranks.get(p - 1) };
        let outgoing = ranks.get(p);
        let value = rational(n as i64, 1)
            - incoming.map_or(&zero, |r| r.value())
            - outgoing.map_or(&zero, |r| r.value());
        if value.is_negative() {
            return Err(Error::VerificationFailed(format!("negative homology dimension {value} in degree {p}")));
        }
        let certainty = [incoming, outgoing]
            .into_iter()
            .flatten()
            .fold(Certainty::Exact, |acc, r| acc.and(r.certainty()));
        let backend = incoming.or(outgoing).map(|r| r.backend()).unwrap_or_else(|| backend_for(&c.group));
        out.push(DimensionValue::new(value, backend, certainty));
    }
    Ok(out)
}

fn backend_for(g: &Group) -> crate::dimension::Backend {
    use crate::dimension::Backend;
    match g {
        Group::FreeAbelian(_) => Backend::Abelian,
        Group::Finite(_) => Backend::Finite,
        Group::Crossed(_) => Backend::Crossed,
        Group::Free(_) => Backend::FreeOracle,
    }
}

/// Backends over which `− ⊗ 𝒰Γ` is exact, so supplied resolutions must
/// stay exact after tensoring.
fn is_flat(g: &Group) -> bool {
    match g {
        Group::FreeAbelian(_) | Group::Finite(_) => true,
        Group::Crossed(c) => c.acting_finite().is_some(),
        Group::Free(_) => false,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiReport {
    pub betti: Vec<DimensionValue>,
    pub euler: Rational,
    /// `Σ (−1)^p n_p`.
    pub naive_euler: Rational,
}

impl BettiReport {
    pub fn is_exact(&self) -> bool {
        self.betti.iter().all(DimensionValue::is_exact)
    }
}

/// `b_p = n_p − r_p − r_{p+1}`. For exact backends the Euler
/// characteristic is also checked against the ranks of the chain modules.
pub fn l2_betti(engine: &DimensionEngine, c: &FreeChainComplex) -> Result<BettiReport> {
    let betti = homology_dims(engine, c)?;
    let euler = alternating(betti.iter().map(|b| b.value().clone()));
    let naive_euler = c.naive_euler();
    let report = BettiReport { betti, euler, naive_euler };
    if report.is_exact() && report.euler != report.naive_euler {
        return Err(Error::VerificationFailed(format!(
            "euler characteristic {} differs from {}",
            report.euler, report.naive_euler
        )));
    }
    Ok(report)
}

pub fn euler(engine: &DimensionEngine, c: &FreeChainComplex) -> Result<Rational> {
    Ok(l2_betti(engine, c)?.euler)
}

/// Note attached to every Tor report: exactness of the supplied resolution
/// over the group ring is assumed, only `d∘d = 0` and the rank conditions
/// are checked.
pub const GENERIC_CAVEAT: &str = "resolution validated generically";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorReport {
    /// `dim Tor_p` for `p = 0, …, N`; higher Tor vanish.
    pub dims: Vec<DimensionValue>,
    pub notes: Vec<String>,
}

impl TorReport {
    /// `dim Tor_p`, zero beyond the resolution's length.
    pub fn dim(&self, p: usize) -> Rational {
        self.dims.get(p).map_or_else(Rational::zero, |d| d.value().clone())
    }
}

/// Dimensions of `Tor_p(M; 𝒰Γ)` from a supplied free resolution `R` of `M`.
///
/// `R` must have `C₀ = ℂΓⁿ` and `d₁` equal to the presentation matrix of
/// `M` (or `N = 0` and `M` free). Over flat backends every positive-degree
/// Tor must vanish; a resolution violating this is rejected.
pub fn tor_dims(engine: &DimensionEngine, m: &PresentedModule, r: &FreeChainComplex) -> Result<TorReport> {
    let bad = |s: String| Err(Error::InvalidResolution(s));
    if r.group() != m.group() {
        return bad(format!("resolution over {} but module over {}", r.group(), m.group()));
    }
    if r.ranks().first() != Some(&m.n()) {
        return bad(format!("resolution must start with rank {}", m.n()));
    }
    match r.boundary(1) {
        Some(d1) if d1 == m.matrix() => {}
        Some(_) => return bad("d1 differs from the presentation matrix".into()),
        None if m.matrix().is_zero() => {}
        None => return bad("length-0 resolution of a module with relations".into()),
    }
    let dims = homology_dims(engine, r)?;
    let mut notes = vec![GENERIC_CAVEAT.to_string()];
    if is_flat(r.group()) {
        if let Some((p, d)) = dims.iter().enumerate().skip(1).find(|(_, d)| !d.value().is_zero()) {
            return bad(format!("not exact after tensoring: degree {p} has dimension {d}"));
        }
    }
    if matches!(r.group(), Group::Free(_)) && r.ranks().len() <= 2 {
        notes.push("length-1 resolution over a free group: Tor_p = 0 for p >= 2".into());
    }
    Ok(TorReport { dims, notes })
}

/// Homology of a complex in one degree, as a presented module together with
/// a free resolution of it.
#[derive(Clone, Debug)]
pub struct HomologyDatum {
    pub module: PresentedModule,
    pub resolution: FreeChainComplex,
}

impl HomologyDatum {
    /// The zero module with the zero resolution.
    pub fn zero(group: &Group) -> Self {
        let resolution = FreeChainComplex::new(group, vec![0], Vec::new()).expect("zero complex is valid");
        Self { module: PresentedModule::free(group, 0), resolution }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UctLine {
    pub degree: usize,
    pub betti: Rational,
    /// `dim(H_n ⊗ 𝒰Γ)`.
    pub tensor: Rational,
    /// `dim Tor₁(H_{n−1}; 𝒰Γ)`.
    pub tor1_previous: Rational,
}

impl UctLine {
    pub fn holds(&self) -> bool {
        self.betti == &self.tensor + &self.tor1_previous
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UctReport {
    pub lines: Vec<UctLine>,
}

impl UctReport {
    pub fn holds(&self) -> bool {
        self.lines.iter().all(UctLine::holds)
    }
}

/// Checks `b_n = dim(H_n ⊗ 𝒰Γ) + dim Tor₁(H_{n−1}; 𝒰Γ)` in every degree,
/// given the homology modules of `c` (one per degree) with resolutions.
pub fn uct_check(engine: &DimensionEngine, c: &FreeChainComplex, homology: &[HomologyDatum]) -> Result<UctReport> {
    if homology.len() != c.ranks().len() {
        return Err(Error::InvalidResolution(format!(
            "expected homology data for {} degrees, got {}",
            c.ranks().len(),
            homology.len()
        )));
    }
    let betti = l2_betti(engine, c)?;
    let tors = homology.iter().map(|h| tor_dims(engine, &h.module, &h.resolution)).collect::<Result<Vec<_>>>()?;
    let lines = (0..homology.len())
        .map(|n| UctLine {
            degree: n,
            betti: betti.betti[n].value().clone(),
            tensor: tors[n].dim(0),
            tor1_previous: if n == 0 { Rational::zero() } else { tors[n - 1].dim(1) },
        })
        .collect();
    Ok(UctReport { lines })
}
