//! Line-oriented input formats: groups, modules, complexes and the
//! localization payloads.

use l2dim::group::{FiniteGroup, Group};
use l2dim::group_ring::{GroupRingElement, GroupRingMatrix};
use l2dim::dimension::PresentedModule;
use l2dim::scalars::RationalFunction;

use crate::expr::{parse_expr, parse_row, Algebra, GroupRingAlgebra, ParseError, RationalAlgebra};

/// One significant input line, with comments stripped.
#[derive(Clone, Debug)]
pub struct Line {
    pub no: usize,
    pub text: String,
    /// Column of the first character of `text`.
    pub col0: usize,
}

impl Line {
    fn keyword(&self) -> &str {
        self.text.split_whitespace().next().unwrap_or("")
    }

    fn is_row(&self) -> bool {
        self.text.starts_with('[')
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.no, self.col0, msg)
    }

    /// Whitespace-separated words after the keyword, with their columns.
    fn args(&self) -> Vec<(usize, &str)> {
        let mut out = Vec::new();
        let mut start = None;
        for (i, c) in self.text.char_indices().chain(std::iter::once((self.text.len(), ' '))) {
            match (c.is_whitespace(), start) {
                (true, Some(s)) => {
                    out.push((self.col0 + self.text[..s].chars().count(), &self.text[s..i]));
                    start = None;
                }
                (false, None) => start = Some(i),
                _ => {}
            }
        }
        out.into_iter().skip(1).collect()
    }

    /// Everything after the keyword, with its column.
    fn rest(&self) -> (String, usize) {
        let kw = self.keyword();
        let after = &self.text[kw.len()..];
        let trimmed = after.trim_start();
        let skipped = after.len() - trimmed.len();
        (trimmed.to_string(), self.col0 + self.text[..kw.len() + skipped].chars().count())
    }
}

/// Splits source text into significant lines. `#` starts a comment.
pub fn lines(src: &str) -> Vec<Line> {
    let mut out = Vec::new();
    for (i, raw) in src.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let trimmed = body.trim_start();
        let text = trimmed.trim_end();
        if text.is_empty() {
            continue;
        }
        let col0 = body[..body.len() - trimmed.len()].chars().count() + 1;
        out.push(Line { no: i + 1, text: text.to_string(), col0 });
    }
    out
}

/// Sequential reader over significant lines.
pub struct Cursor {
    lines: Vec<Line>,
    pos: usize,
    end_line: usize,
}

impl Cursor {
    pub fn new(src: &str) -> Self {
        Self { lines: lines(src), pos: 0, end_line: src.lines().count().max(1) }
    }

    pub fn peek(&self) -> Option<&Line> {
        self.lines.get(self.pos)
    }

    pub fn next_line(&mut self) -> Option<Line> {
        let l = self.lines.get(self.pos).cloned();
        self.pos += 1;
        l
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.lines.len()
    }

    fn eof(&self, msg: &str) -> ParseError {
        ParseError::new(self.end_line, 1, format!("unexpected end of input: {msg}"))
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<Line, ParseError> {
        match self.next_line() {
            Some(l) if l.keyword() == kw => Ok(l),
            Some(l) => Err(l.err(format!("expected '{kw}'"))),
            None => Err(self.eof(&format!("expected '{kw}'"))),
        }
    }

    pub fn finish(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(l) => Err(l.err("unexpected line")),
        }
    }
}

fn number(col: usize, line: usize, s: &str) -> Result<usize, ParseError> {
    s.parse().map_err(|_| ParseError::new(line, col, format!("expected a nonnegative integer, got '{s}'")))
}

/// `group finite cyclic n | finite dihedral n | abelian n | free n |
/// dihedral_inf | trivial`.
pub fn parse_group(line: &Line) -> Result<Group, ParseError> {
    let args = line.args();
    let words: Vec<&str> = args.iter().map(|(_, w)| *w).collect();
    let col = |i: usize| args.get(i).map_or(line.col0, |(c, _)| *c);
    let positive = |i: usize| -> Result<usize, ParseError> {
        let s = words.get(i).ok_or_else(|| ParseError::new(line.no, col(i.saturating_sub(1)), "missing group size"))?;
        let n = number(col(i), line.no, s)?;
        if n == 0 {
            return Err(ParseError::new(line.no, col(i), "group size must be positive"));
        }
        Ok(n)
    };
    let (group, used) = match words.first().copied() {
        Some("finite") => match words.get(1).copied() {
            Some("cyclic") => (Group::finite(FiniteGroup::cyclic(positive(2)?)), 3),
            Some("dihedral") => (Group::finite(FiniteGroup::dihedral(positive(2)?)), 3),
            _ => return Err(ParseError::new(line.no, col(1), "expected 'cyclic' or 'dihedral'")),
        },
        Some("abelian") => (Group::free_abelian(positive(1)?), 2),
        Some("free") => (Group::free(positive(1)?), 2),
        Some("dihedral_inf") => (Group::infinite_dihedral(), 1),
        Some("trivial") => (Group::trivial(), 1),
        _ => return Err(ParseError::new(line.no, col(0), "unknown group")),
    };
    if words.len() > used {
        return Err(ParseError::new(line.no, col(used), "unexpected trailing input"));
    }
    Ok(group)
}

/// Reads consecutive bracketed rows; every row must have `cols` entries
/// once the first row fixes it.
fn read_rows<A: Algebra>(
    cur: &mut Cursor,
    alg: &A,
    limit: Option<usize>,
    mut cols: Option<usize>,
) -> Result<(Vec<Vec<A::V>>, Option<usize>), ParseError> {
    let mut rows = Vec::new();
    while limit.is_none_or(|n| rows.len() < n) {
        match cur.peek() {
            Some(l) if l.is_row() => {}
            _ => break,
        }
        let l = cur.next_line().expect("peeked");
        let row = parse_row(alg, &l.text, l.no, l.col0)?;
        match cols {
            Some(c) if c != row.len() => {
                return Err(l.err(format!("row has {} entries, expected {c}", row.len())));
            }
            _ => cols = Some(row.len()),
        }
        rows.push(row);
    }
    Ok((rows, cols))
}

fn group_matrix(group: &Group, rows: Vec<Vec<GroupRingElement>>, cols: usize) -> GroupRingMatrix {
    GroupRingMatrix::from_rows(group, rows, cols).expect("rows checked by the parser")
}

/// `module n m` followed by `n` rows, or one or more bare rows.
fn read_module(cur: &mut Cursor, group: &Group) -> Result<PresentedModule, ParseError> {
    let alg = GroupRingAlgebra::new(group);
    let header = cur.peek().filter(|l| l.keyword() == "module").cloned();
    let Some(header) = header else {
        let start = cur.peek().cloned();
        let (rows, cols) = read_rows(cur, &alg, None, None)?;
        if rows.is_empty() {
            return Err(match start {
                Some(l) => l.err("expected a matrix row"),
                None => cur.eof("expected a matrix row"),
            });
        }
        return Ok(PresentedModule::new(group_matrix(group, rows, cols.unwrap_or(0))));
    };
    cur.next_line();
    let args = header.args();
    if args.len() != 2 {
        return Err(header.err("expected 'module <generators> <relations>'"));
    }
    let n = number(args[0].0, header.no, args[0].1)?;
    let m = number(args[1].0, header.no, args[1].1)?;
    let (rows, _) = read_rows(cur, &alg, Some(n), Some(m))?;
    if rows.len() != n && !(m == 0 && rows.is_empty()) {
        return Err(header.err(format!("module declares {n} rows, found {}", rows.len())));
    }
    if rows.is_empty() {
        return Ok(PresentedModule::new(GroupRingMatrix::zeros(group, n, m)));
    }
    Ok(PresentedModule::new(group_matrix(group, rows, m)))
}

/// `dim` and `atiyah` input: a `group` line followed by one or more
/// modules. Later `group` lines switch the group for the modules after
/// them.
pub fn parse_modules(src: &str) -> Result<Vec<PresentedModule>, ParseError> {
    let mut cur = Cursor::new(src);
    let first = cur.expect_keyword("group").map_err(|e| ParseError { msg: "expected 'group' line".into(), ..e })?;
    let mut group = parse_group(&first)?;
    let mut out = Vec::new();
    while let Some(l) = cur.peek().cloned() {
        if l.keyword() == "group" {
            cur.next_line();
            group = parse_group(&l)?;
            continue;
        }
        if l.keyword() != "module" && !l.is_row() {
            return Err(l.err("expected 'group', 'module' or a matrix row"));
        }
        out.push(read_module(&mut cur, &group)?);
    }
    if out.is_empty() {
        return Err(cur.eof("expected a module"));
    }
    Ok(out)
}

/// Raw complex data; validation of `d∘d = 0` is left to the engine.
#[derive(Clone, Debug)]
pub struct ComplexData {
    pub group: Group,
    pub ranks: Vec<usize>,
    pub boundaries: Vec<GroupRingMatrix>,
}

/// `ranks n0 n1 …` followed by `d1`, `d2`, … blocks of rows.
fn read_complex(cur: &mut Cursor, group: &Group) -> Result<ComplexData, ParseError> {
    let header = cur.expect_keyword("ranks")?;
    let args = header.args();
    if args.is_empty() {
        return Err(header.err("expected at least one rank"));
    }
    let ranks = args.iter().map(|(c, w)| number(*c, header.no, w)).collect::<Result<Vec<_>, _>>()?;
    let alg = GroupRingAlgebra::new(group);
    let mut boundaries = Vec::new();
    for p in 1..ranks.len() {
        let (rows_n, cols_n) = (ranks[p - 1], ranks[p]);
        let label = format!("d{p}");
        let has_block = cur.peek().is_some_and(|l| l.keyword() == label);
        if !has_block {
            if rows_n == 0 || cols_n == 0 {
                boundaries.push(GroupRingMatrix::zeros(group, rows_n, cols_n));
                continue;
            }
            return Err(match cur.peek() {
                Some(l) => l.err(format!("expected '{label}'")),
                None => cur.eof(&format!("expected '{label}'")),
            });
        }
        let block = cur.next_line().expect("peeked");
        if !block.args().is_empty() {
            return Err(block.err(format!("'{label}' takes no arguments")));
        }
        let (rows, _) = read_rows(cur, &alg, Some(rows_n), Some(cols_n))?;
        if rows.len() != rows_n {
            return Err(block.err(format!("{label} needs {rows_n} rows, found {}", rows.len())));
        }
        boundaries.push(if rows.is_empty() {
            GroupRingMatrix::zeros(group, rows_n, cols_n)
        } else {
            group_matrix(group, rows, cols_n)
        });
    }
    Ok(ComplexData { group: group.clone(), ranks, boundaries })
}

/// `betti` and `euler` input.
pub fn parse_complex(src: &str) -> Result<ComplexData, ParseError> {
    let mut cur = Cursor::new(src);
    let group = parse_group(&cur.expect_keyword("group")?)?;
    let c = read_complex(&mut cur, &group)?;
    cur.finish()?;
    Ok(c)
}

/// `tor` input: a group, one module, then its resolution.
pub fn parse_tor(src: &str) -> Result<(PresentedModule, ComplexData), ParseError> {
    let mut cur = Cursor::new(src);
    let group = parse_group(&cur.expect_keyword("group")?)?;
    let module = read_module(&mut cur, &group)?;
    let c = read_complex(&mut cur, &group)?;
    cur.finish()?;
    Ok((module, c))
}

/// Denominator set for `ore-check`.
#[derive(Clone, Debug)]
pub enum OreSetSpec {
    Powers(GroupRingElement),
    Nonzero,
    Units,
}

#[derive(Clone, Debug)]
pub struct OreInput {
    pub group: Group,
    pub set: OreSetSpec,
    pub fractions: [(GroupRingElement, GroupRingElement); 2],
}

fn read_fraction(cur: &mut Cursor, alg: &GroupRingAlgebra) -> Result<(GroupRingElement, GroupRingElement), ParseError> {
    let l = cur.expect_keyword("frac")?;
    let (rest, col) = l.rest();
    let row = parse_row(alg, &rest, l.no, col)?;
    let [num, den]: [GroupRingElement; 2] =
        row.try_into().map_err(|_| ParseError::new(l.no, col, "expected '[numerator, denominator]'"))?;
    Ok((num, den))
}

/// `group …`, `set powers <expr> | set nonzero | set units`, then two
/// `frac [num, den]` lines.
pub fn parse_ore(src: &str) -> Result<OreInput, ParseError> {
    let mut cur = Cursor::new(src);
    let group = parse_group(&cur.expect_keyword("group")?)?;
    let alg = GroupRingAlgebra::new(&group);
    let l = cur.expect_keyword("set")?;
    let (rest, col) = l.rest();
    let kind = rest.split_whitespace().next().unwrap_or("");
    let set = match kind {
        "powers" => {
            let expr = rest["powers".len()..].trim_start();
            let offset = rest.chars().count() - expr.chars().count();
            OreSetSpec::Powers(parse_expr(&alg, expr, l.no, col + offset)?)
        }
        "nonzero" | "units" if rest.split_whitespace().count() > 1 => {
            return Err(ParseError::new(l.no, col + kind.len() + 1, "unexpected trailing input"));
        }
        "nonzero" => OreSetSpec::Nonzero,
        "units" => OreSetSpec::Units,
        _ => return Err(ParseError::new(l.no, col, "expected 'powers <expr>', 'nonzero' or 'units'")),
    };
    let f = read_fraction(&mut cur, &alg)?;
    let g = read_fraction(&mut cur, &alg)?;
    cur.finish()?;
    Ok(OreInput { group, set, fractions: [f, g] })
}

fn abelian_rank(line: &Line) -> Result<usize, ParseError> {
    match parse_group(line)? {
        Group::FreeAbelian(a) => Ok(a.rank()),
        _ => Err(line.err("rational functions need 'group abelian <n>'")),
    }
}

/// `cramer` input: `group abelian n` then the rows of a matrix of rational
/// functions.
pub fn parse_cramer(src: &str) -> Result<(usize, Vec<Vec<RationalFunction>>), ParseError> {
    let mut cur = Cursor::new(src);
    let nvars = abelian_rank(&cur.expect_keyword("group")?)?;
    let alg = RationalAlgebra::new(nvars);
    let (rows, _) = read_rows(&mut cur, &alg, None, None)?;
    if rows.is_empty() || rows[0].is_empty() {
        return Err(match cur.peek() {
            Some(l) => l.err("expected a nonempty matrix row"),
            None => cur.eof("expected a nonempty matrix row"),
        });
    }
    cur.finish()?;
    Ok((nvars, rows))
}

/// `linearize` input: `group abelian n` then one rational function per
/// line.
pub fn parse_linearize(src: &str) -> Result<Vec<RationalFunction>, ParseError> {
    let mut cur = Cursor::new(src);
    let nvars = abelian_rank(&cur.expect_keyword("group")?)?;
    let alg = RationalAlgebra::new(nvars);
    let mut out = Vec::new();
    while let Some(l) = cur.next_line() {
        out.push(parse_expr(&alg, &l.text, l.no, l.col0)?);
    }
    if out.is_empty() {
        return Err(cur.eof("expected a rational function"));
    }
    Ok(out)
}
