//! One function per subcommand, each turning parsed input into a report.

use std::fmt::Display;

use l2dim::atiyah::atiyah_check;
use l2dim::dimension::{Certainty, DimensionEngine, DimensionValue, PresentedModule};
use l2dim::group::Group;
use l2dim::homology::{l2_betti, tor_dims, FreeChainComplex};
use l2dim::localization::{
    cramer_factorize, ore_add, ore_eq, ore_failure_certificate, ore_mul, rational_closure_linearize, FreeGroupNonzero,
    GroupElements, NonzeroElements, OreFraction, OreSet, PowersOf,
};
use l2dim::scalars::linalg::determinant_laurent;
use l2dim::scalars::{Matrix, RationalFunction, ReducePolicy};

use crate::input::{self, ComplexData, OreSetSpec};
use crate::report::{MatrixDisplay, Report};
use crate::{CliError, Command, Options};

pub fn dispatch(command: Command, src: &str, options: &Options) -> Result<Report, CliError> {
    let engine = DimensionEngine::new(options.oracle_config());
    let policy = ReducePolicy::from(options.reduce);
    match command {
        Command::Dim => batch(input::parse_modules(src)?, |m| dim(&engine, m)),
        Command::Atiyah => batch(input::parse_modules(src)?, |m| atiyah(&engine, m)),
        Command::Betti => betti(&engine, input::parse_complex(src)?, true),
        Command::Euler => betti(&engine, input::parse_complex(src)?, false),
        Command::Tor => {
            let (m, c) = input::parse_tor(src)?;
            tor(&engine, &m, c)
        }
        Command::OreCheck => ore_check(input::parse_ore(src)?),
        Command::Cramer => {
            let (_, rows) = input::parse_cramer(src)?;
            cramer(rows, policy)
        }
        Command::Linearize => batch_named(input::parse_linearize(src)?, "f", |f| linearize(f, policy)),
        Command::CertifyOreFailure => Ok(certify(options.radius)),
    }
}

/// Single item: plain keys. Several: `module1.`, `module2.`, … prefixes.
fn batch<T>(items: Vec<T>, f: impl FnMut(&T) -> Result<Report, CliError>) -> Result<Report, CliError> {
    batch_named(items, "module", f)
}

fn batch_named<T>(
    items: Vec<T>,
    prefix: &str,
    mut f: impl FnMut(&T) -> Result<Report, CliError>,
) -> Result<Report, CliError> {
    if items.len() == 1 {
        return f(&items[0]);
    }
    let mut out = Report::new();
    for (i, item) in items.iter().enumerate() {
        out.extend_prefixed(&format!("{prefix}{}", i + 1), f(item)?);
    }
    Ok(out)
}

fn push_provenance(r: &mut Report, d: &DimensionValue) {
    r.push("backend", d.backend().tag());
    r.push("certainty", d.certainty().tag());
}

fn dim(engine: &DimensionEngine, m: &PresentedModule) -> Result<Report, CliError> {
    let d = engine.dim_fp(m)?;
    let mut r = Report::new();
    r.push("dim", d.value());
    push_provenance(&mut r, &d);
    Ok(r)
}

fn atiyah(engine: &DimensionEngine, m: &PresentedModule) -> Result<Report, CliError> {
    let v = atiyah_check(engine, m)?;
    let mut r = Report::new();
    r.push("dim", v.dimension.value());
    r.push("lcm", v.lcm);
    r.push("status", v.status());
    r.push("conditional", v.conditional);
    push_provenance(&mut r, &v.dimension);
    Ok(r)
}

fn complex(c: ComplexData) -> Result<FreeChainComplex, CliError> {
    Ok(FreeChainComplex::new(&c.group, c.ranks, c.boundaries)?)
}

fn combined(values: &[DimensionValue]) -> Certainty {
    values.iter().fold(Certainty::Exact, |acc, d| acc.and(d.certainty()))
}

fn betti(engine: &DimensionEngine, c: ComplexData, per_degree: bool) -> Result<Report, CliError> {
    let c = complex(c)?;
    let report = l2_betti(engine, &c)?;
    let mut r = Report::new();
    if per_degree {
        for (p, b) in report.betti.iter().enumerate() {
            r.push(format!("b{p}"), b.value());
        }
    }
    r.push("euler", &report.euler);
    r.push("certainty", combined(&report.betti).tag());
    Ok(r)
}

fn tor(engine: &DimensionEngine, m: &PresentedModule, c: ComplexData) -> Result<Report, CliError> {
    let c = complex(c)?;
    let report = tor_dims(engine, m, &c)?;
    let mut r = Report::new();
    for (p, d) in report.dims.iter().enumerate() {
        r.push(format!("tor{p}"), d.value());
    }
    r.push("certainty", combined(&report.dims).tag());
    for (i, note) in report.notes.iter().enumerate() {
        r.push(format!("note{}", i + 1), note);
    }
    Ok(r)
}

fn ore_report<S: OreSet>(set: &S, fracs: [(S::Elem, S::Elem); 2]) -> Result<Report, CliError>
where
    S::Elem: Display,
{
    let [(a, t), (b, s)] = fracs;
    let f = OreFraction::new(set, a, t)?;
    let g = OreFraction::new(set, b, s)?;
    let mut r = Report::new();
    r.push("set", set.describe());
    r.push("equal", ore_eq(set, &f, &g)?);
    let sum = ore_add(set, &f, &g)?;
    r.push("sum.num", sum.num());
    r.push("sum.den", sum.den());
    let product = ore_mul(set, &f, &g)?;
    r.push("product.num", product.num());
    r.push("product.den", product.den());
    Ok(r)
}

fn ore_check(input: input::OreInput) -> Result<Report, CliError> {
    let [f, g] = input.fractions;
    let laurent = |(n, d): (l2dim::group_ring::GroupRingElement, l2dim::group_ring::GroupRingElement)| {
        Ok::<_, l2dim::Error>((n.to_laurent()?, d.to_laurent()?))
    };
    match (input.set, &input.group) {
        (OreSetSpec::Units, group) => ore_report(&GroupElements::new(group.clone()), [f, g]),
        (OreSetSpec::Nonzero, Group::Free(free)) => ore_report(&FreeGroupNonzero::new(free.rank()), [f, g]),
        (OreSetSpec::Nonzero, Group::FreeAbelian(a)) => {
            ore_report(&NonzeroElements::new(a.rank()), [laurent(f)?, laurent(g)?])
        }
        (OreSetSpec::Powers(p), Group::FreeAbelian(_)) => {
            ore_report(&PowersOf::new(p.to_laurent()?)?, [laurent(f)?, laurent(g)?])
        }
        (_, group) => Err(l2dim::Error::UnsupportedGroup(format!(
            "this denominator set is only available over abelian groups, not {group}"
        ))
        .into()),
    }
}

fn cramer(rows: Vec<Vec<RationalFunction>>, policy: ReducePolicy) -> Result<Report, CliError> {
    let rows = rows.into_iter().map(|r| r.iter().map(|f| f.normalized(policy)).collect()).collect();
    let a = Matrix::from_rows(rows)?;
    let w = cramer_factorize(&a)?;
    let mut r = Report::new();
    r.push("s", MatrixDisplay(&w.s));
    r.push("x", MatrixDisplay(&w.x.map(|f| f.normalized(policy))));
    r.push("b", MatrixDisplay(&w.b));
    r.push("det_s", determinant_laurent(&w.s, w.nvars)?);
    w.verify()?;
    r.push("verified", true);
    Ok(r)
}

fn linearize(f: &RationalFunction, policy: ReducePolicy) -> Result<Report, CliError> {
    let l = rational_closure_linearize(&f.normalized(policy))?;
    let mut r = Report::new();
    r.push("matrix", MatrixDisplay(&l.matrix));
    r.push("inverse", MatrixDisplay(&l.inverse.map(|g| g.normalized(policy))));
    r.push("entry", l.entry().normalized(policy));
    let det = determinant_laurent(&l.matrix, f.nvars())?;
    r.push("sigma", !det.is_zero());
    Ok(r)
}

fn certify(radius: usize) -> Report {
    let c = ore_failure_certificate(radius);
    let mut r = Report::new();
    r.push("radius", c.radius);
    r.push("domain_dim", c.domain_dim);
    r.push("codomain_dim", c.codomain_dim);
    r.push("kernel_dim", c.kernel_dim);
    r.push("certified", c.certified);
    r
}
