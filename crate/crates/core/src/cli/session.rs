//! Session files.
//!
//! ```text
//! ring vars X1 X2 X3 ord deglex over QQ
//! let F = [X1^2 + X2; X1^2 + X3]
//! set budget 500
//! cmd member F "X2 - X3"
//! ```
//!
//! A ring line reads `ring <universe> ord <ordering> over <domain>` followed
//! by optional `red <relation>`, `side <side>` and `bound <n>` clauses. The
//! universe is one of `vars ...`, `letters ... [rules l->r ...]`,
//! `solvable ... rules l->r ...`, `table ... products x*y=r ...`, or
//! `coefficients` (no `ord` clause) for arithmetic in the domain alone.
//! Rule sides are sums of words without spaces; `.` is the empty word and
//! `0` the zero sum. Every `let` and command belongs to the latest ring.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::coefficients::{Domain, Integers, IntegersMod, PrimeField, Rationals, SumDomain};
use crate::error::Error;
use crate::polys::FunctionRing;
use crate::reduction::Side;
use crate::terms::{
    ConstructionReport, ElemSum, Reductive, Rule, TableSystem, TermOrder, TermSpace, Universe, Word, WordKind, WordSum,
    WordSystem,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for ParseError {}

/// Source text with its position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Located {
    pub text: String,
    pub line: usize,
    pub col: usize,
}

impl Located {
    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError { line: self.line, col: self.col, msg: msg.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SetRef {
    Named(String),
    Inline(Vec<Located>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HandArg {
    Right,
    Left,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cmd {
    Gb(SetRef),
    Member(SetRef, Located),
    Represent(SetRef, Located),
    Nf(SetRef, Located),
    Spol(Located, Located),
    Sat(Located),
    SatCheck(SetRef),
    IsGb(SetRef),
    Include(SetRef, SetRef),
    Equal(SetRef, SetRef),
    Trivial(SetRef),
    Sum(SetRef, SetRef),
    Product(SetRef, SetRef),
    Intersect(SetRef, SetRef),
    Radical(SetRef, Located),
    Inverse { poly: Located, hand: HandArg, modulo: Option<SetRef> },
    Quotient(SetRef, usize),
    Congruent(SetRef, Located, Located),
    Kernel(SetRef),
    Image(SetRef, Located),
    Onto(SetRef),
    Solve(SetRef, Located),
    Reduce(Located, Located),
    CoeffNf(Located, SetRef),
    CoeffGb(SetRef),
    Probe(usize),
    ModGb(Vec<Vec<BigInt>>),
}

impl Cmd {
    /// Works on coefficients only.
    pub fn is_coefficient(&self) -> bool {
        matches!(self, Cmd::Reduce(..) | Cmd::CoeffNf(..) | Cmd::CoeffGb(..) | Cmd::Probe(..) | Cmd::ModGb(..))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetKey {
    Budget,
    Steps,
    Bound,
    Seed,
}

#[derive(Debug, Clone)]
pub enum ItemKind {
    Ring(usize),
    Let(String, Vec<Located>),
    Set(SetKey, u64),
    Cmd { ring: usize, text: String, cmd: Cmd },
}

#[derive(Debug, Clone)]
pub struct Item {
    pub line: usize,
    pub kind: ItemKind,
}

/// A domain that carries polynomials, or one used for coefficient arithmetic only.
#[derive(Debug, Clone)]
pub enum AnyRing {
    Q(FunctionRing<Rationals>),
    Z(FunctionRing<Integers>),
    Gf(FunctionRing<PrimeField>),
    Divisor(Integers),
    Mod(IntegersMod),
    Pair(SumDomain<Integers, Integers>),
    /// Rationals, integers or a prime field without terms.
    QOnly(Rationals),
    ZOnly(Integers),
    GfOnly(PrimeField),
}

impl AnyRing {
    pub fn has_polys(&self) -> bool {
        matches!(self, AnyRing::Q(_) | AnyRing::Z(_) | AnyRing::Gf(_))
    }

    fn parse_poly(&self, s: &str) -> Result<(), Error> {
        match self {
            AnyRing::Q(r) => r.parse(s).map(drop),
            AnyRing::Z(r) => r.parse(s).map(drop),
            AnyRing::Gf(r) => r.parse(s).map(drop),
            _ => self.parse_elem(s),
        }
    }

    fn parse_elem(&self, s: &str) -> Result<(), Error> {
        match self {
            AnyRing::Q(r) => r.domain.parse_elem(s).map(drop),
            AnyRing::Z(r) => r.domain.parse_elem(s).map(drop),
            AnyRing::Gf(r) => r.domain.parse_elem(s).map(drop),
            AnyRing::Divisor(d) | AnyRing::ZOnly(d) => d.parse_elem(s).map(drop),
            AnyRing::Mod(d) => d.parse_elem(s).map(drop),
            AnyRing::Pair(d) => d.parse_elem(s).map(drop),
            AnyRing::QOnly(d) => d.parse_elem(s).map(drop),
            AnyRing::GfOnly(d) => d.parse_elem(s).map(drop),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RingEntry {
    pub line: usize,
    pub ring: AnyRing,
    pub side: Side,
    pub description: String,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct Session {
    pub rings: Vec<RingEntry>,
    pub items: Vec<Item>,
}

// ---------------------------------------------------------------------------
// Lexing

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Word(String),
    Quoted(String),
    List(Vec<Located>),
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

impl Token {
    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError { line: self.line, col: self.col, msg: msg.into() }
    }

    fn word(&self) -> Option<&str> {
        match &self.tok {
            Tok::Word(w) => Some(w),
            _ => None,
        }
    }

    fn located(&self, text: &str) -> Located {
        Located { text: text.to_string(), line: self.line, col: self.col }
    }
}

/// A statement possibly spanning lines, with the position of every byte.
struct Logical {
    text: String,
    pos: Vec<(usize, usize)>,
}

impl Logical {
    fn at(&self, i: usize) -> (usize, usize) {
        self.pos.get(i).copied().unwrap_or_else(|| {
            let (l, c) = self.pos.last().copied().unwrap_or((1, 0));
            (l, c + 1)
        })
    }

    fn err(&self, i: usize, msg: impl Into<String>) -> ParseError {
        let (line, col) = self.at(i);
        ParseError { line, col, msg: msg.into() }
    }
}

fn strip_comment(line: &str) -> &str {
    let mut quoted = false;
    for (i, c) in line.char_indices() {
        match c {
            '"' => quoted = !quoted,
            '#' if !quoted => return &line[..i],
            _ => {}
        }
    }
    line
}

fn bracket_depth(s: &str) -> i64 {
    let mut quoted = false;
    let mut d = 0;
    for c in s.chars() {
        match c {
            '"' => quoted = !quoted,
            '[' if !quoted => d += 1,
            ']' if !quoted => d -= 1,
            _ => {}
        }
    }
    d
}

fn logical_lines(text: &str) -> Vec<Logical> {
    let mut out = Vec::new();
    let mut cur: Option<Logical> = None;
    for (k, raw) in text.lines().enumerate() {
        let line = strip_comment(raw);
        let logical = cur.get_or_insert_with(|| Logical { text: String::new(), pos: Vec::new() });
        if !logical.text.is_empty() {
            logical.text.push('\n');
            logical.pos.push((k, raw.len() + 1));
        }
        for (i, _) in line.bytes().enumerate() {
            logical.pos.push((k + 1, i + 1));
        }
        logical.text.push_str(line);
        if bracket_depth(&logical.text) <= 0 {
            let l = cur.take().unwrap();
            if !l.text.trim().is_empty() {
                out.push(l);
            }
        }
    }
    if let Some(l) = cur {
        out.push(l);
    }
    out
}

fn tokenize(src: &Logical, start: usize) -> Result<Vec<Token>, ParseError> {
    let b = src.text.as_bytes();
    let mut out = Vec::new();
    let mut i = start;
    while i < b.len() {
        let c = b[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let (line, col) = src.at(i);
        match c {
            b'"' => {
                let end = src.text[i + 1..].find('"').ok_or_else(|| src.err(i, "unterminated string"))?;
                let s = &src.text[i + 1..i + 1 + end];
                if s.contains('\n') {
                    return Err(src.err(i, "unterminated string"));
                }
                out.push(Token { tok: Tok::Quoted(s.to_string()), line, col: col + 1 });
                i += end + 2;
            }
            b'[' => {
                let mut depth = 0;
                let mut j = i;
                while j < b.len() {
                    match b[j] {
                        b'[' => depth += 1,
                        b']' => {
                            depth -= 1;
                            if depth == 0 {
                                break;
                            }
                        }
                        _ => {}
                    }
                    j += 1;
                }
                if j >= b.len() {
                    return Err(src.err(i, "unterminated list"));
                }
                let mut items = Vec::new();
                let mut k = i + 1;
                for part in src.text[i + 1..j].split(';') {
                    let lead = part.len() - part.trim_start().len();
                    let t = part.trim();
                    if !t.is_empty() {
                        let (l, c) = src.at(k + lead);
                        items.push(Located { text: t.to_string(), line: l, col: c });
                    }
                    k += part.len() + 1;
                }
                out.push(Token { tok: Tok::List(items), line, col });
                i = j + 1;
            }
            b']' => return Err(src.err(i, "unbalanced ']'")),
            _ => {
                let mut depth = 0i32;
                let mut j = i;
                while j < b.len() {
                    let d = b[j];
                    if depth == 0 && (d.is_ascii_whitespace() || d == b'"' || d == b'[') {
                        break;
                    }
                    if d == b'(' {
                        depth += 1;
                    } else if d == b')' {
                        depth -= 1;
                    }
                    j += 1;
                }
                let w: String = src.text[i..j].split_whitespace().collect::<Vec<_>>().join("");
                out.push(Token { tok: Tok::Word(w), line, col });
                i = j;
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Ring declarations

fn longest_match(s: &str, names: &[String]) -> Option<(usize, usize)> {
    names.iter().enumerate().filter(|(_, n)| s.starts_with(n.as_str())).max_by_key(|(_, n)| n.len()).map(|(i, n)| (i, n.len()))
}

fn parse_word(s: &str, names: &[String]) -> Result<Word, String> {
    if s == "." {
        return Ok(vec![]);
    }
    let mut w = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        let (k, n) = longest_match(rest, names).ok_or_else(|| format!("unknown letter at \"{rest}\""))?;
        w.push(k as u16);
        rest = &rest[n..];
    }
    Ok(w)
}

fn parse_coeff(s: &str) -> Result<BigRational, String> {
    let bad = || format!("bad coefficient \"{s}\"");
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| bad())?;
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// A sum like `2ab-1/2.+b` of words over `names`.
fn parse_word_sum(s: &str, names: &[String]) -> Result<WordSum, String> {
    if s == "0" {
        return Ok(vec![]);
    }
    let mut out = Vec::new();
    let b = s.as_bytes();
    let mut i = 0;
    while i < b.len() {
        let mut sign = BigRational::one();
        if b[i] == b'+' || b[i] == b'-' {
            if b[i] == b'-' {
                sign = -sign;
            }
            i += 1;
        } else if i > 0 {
            return Err(format!("expected + or - in \"{s}\""));
        }
        let mut j = i;
        while j < b.len() && b[j] != b'+' && b[j] != b'-' {
            j += 1;
        }
        let term = &s[i..j];
        if term.is_empty() {
            return Err(format!("empty summand in \"{s}\""));
        }
        let digits = term.bytes().take_while(|c| c.is_ascii_digit() || *c == b'/').count();
        let (c, w) = term.split_at(digits);
        let coeff = if c.is_empty() { BigRational::one() } else { parse_coeff(c)? };
        let word = if w.is_empty() { vec![] } else { parse_word(w, names)? };
        if !coeff.is_zero() {
            out.push((sign * coeff, word));
        }
        i = j;
    }
    Ok(out)
}

fn check_symbols(names: &[&Token]) -> Result<Vec<String>, ParseError> {
    let mut out: Vec<String> = Vec::new();
    for t in names {
        let w = t.word().ok_or_else(|| t.err("expected a symbol"))?;
        if w.starts_with('$') {
            return Err(t.err(format!("symbol {w} collides with tag names")));
        }
        if !w.chars().next().is_some_and(|c| c.is_alphabetic()) || !w.chars().all(|c| c.is_alphanumeric() || c == '_') {
            return Err(t.err(format!("bad symbol \"{w}\"")));
        }
        if out.iter().any(|o| o == w) {
            return Err(t.err(format!("duplicate symbol {w}")));
        }
        out.push(w.to_string());
    }
    if out.is_empty() {
        return Err(ParseError { line: 0, col: 0, msg: "no symbols declared".into() });
    }
    Ok(out)
}

enum UniverseDecl {
    Vars(Vec<String>),
    Letters(Vec<String>, Vec<Rule>),
    Solvable(Vec<String>, Vec<Rule>),
    Table(Vec<String>, Vec<Vec<Option<ElemSum>>>),
    Coefficients,
}

fn parse_rule(t: &Token, names: &[String]) -> Result<Rule, ParseError> {
    let w = t.word().ok_or_else(|| t.err("expected a rule l->r"))?;
    let (l, r) = w.split_once("->").ok_or_else(|| t.err(format!("expected a rule l->r, found \"{w}\"")))?;
    let lhs = parse_word(l, names).map_err(|m| t.err(m))?;
    if lhs.is_empty() {
        return Err(t.err("empty left-hand side"));
    }
    let rhs = parse_word_sum(r, names).map_err(|m| t.err(m))?;
    Ok(Rule { lhs, rhs })
}

fn parse_product(t: &Token, names: &[String], prod: &mut [Vec<Option<ElemSum>>]) -> Result<(), ParseError> {
    let w = t.word().ok_or_else(|| t.err("expected a product x*y=r"))?;
    let bad = || t.err(format!("expected a product x*y=r, found \"{w}\""));
    let (lhs, rhs) = w.split_once('=').ok_or_else(bad)?;
    let (x, y) = lhs.split_once('*').ok_or_else(bad)?;
    let find = |s: &str| names.iter().position(|n| n == s).ok_or_else(|| t.err(format!("unknown element {s}")));
    let (i, j) = (find(x)?, find(y)?);
    let mut sum = Vec::new();
    for (c, word) in parse_word_sum(rhs, names).map_err(|m| t.err(m))? {
        match word[..] {
            [e] => sum.push((c, e)),
            _ => return Err(t.err("table entries are sums of single elements")),
        }
    }
    if prod[i][j].replace(sum).is_some() {
        return Err(t.err(format!("product {x}*{y} given twice")));
    }
    Ok(())
}

fn parse_universe(toks: &[Token], head: &Token) -> Result<UniverseDecl, ParseError> {
    let kind = toks.first().and_then(Token::word).ok_or_else(|| head.err("expected a universe clause"))?;
    let rest = &toks[1..];
    let split = |kw: &str| rest.iter().position(|t| t.word() == Some(kw));
    let symbols = |end: usize| -> Result<Vec<String>, ParseError> {
        check_symbols(&rest[..end].iter().collect::<Vec<_>>()).map_err(|e| if e.line == 0 { toks[0].err(e.msg) } else { e })
    };
    match kind {
        "vars" => Ok(UniverseDecl::Vars(symbols(rest.len())?)),
        "letters" | "solvable" => {
            let end = split("rules").unwrap_or(rest.len());
            let names = symbols(end)?;
            let rules = rest.get(end + 1..).unwrap_or(&[]).iter().map(|t| parse_rule(t, &names)).collect::<Result<Vec<_>, _>>()?;
            if kind == "letters" {
                Ok(UniverseDecl::Letters(names, rules))
            } else {
                Ok(UniverseDecl::Solvable(names, rules))
            }
        }
        "table" => {
            let end = split("products").ok_or_else(|| toks[0].err("table needs a products clause"))?;
            let names = symbols(end)?;
            let mut prod = vec![vec![None; names.len()]; names.len()];
            for t in &rest[end + 1..] {
                parse_product(t, &names, &mut prod)?;
            }
            Ok(UniverseDecl::Table(names, prod))
        }
        "coefficients" if rest.is_empty() => Ok(UniverseDecl::Coefficients),
        _ => Err(toks[0].err(format!("unknown universe \"{kind}\""))),
    }
}

fn symbols_of(u: &UniverseDecl) -> &[String] {
    match u {
        UniverseDecl::Vars(n) | UniverseDecl::Letters(n, _) | UniverseDecl::Solvable(n, _) | UniverseDecl::Table(n, _) => n,
        UniverseDecl::Coefficients => &[],
    }
}

fn parse_order(t: &Token, names: &[String]) -> Result<TermOrder, ParseError> {
    let w = t.word().ok_or_else(|| t.err("expected an ordering"))?;
    let (name, prec) = match w.split_once('(') {
        Some((n, p)) => {
            let p = p.strip_suffix(')').ok_or_else(|| t.err("missing ')'"))?;
            let mut idx = Vec::new();
            for s in p.split('>') {
                let k = names.iter().position(|n| n == s).ok_or_else(|| t.err(format!("unknown symbol {s} in precedence")))?;
                if idx.contains(&k) {
                    return Err(t.err(format!("{s} appears twice in precedence")));
                }
                idx.push(k);
            }
            if idx.len() != names.len() {
                return Err(t.err("precedence must list every symbol"));
            }
            (n, idx)
        }
        None => (w, (0..names.len()).collect()),
    };
    match name {
        "deglex" => Ok(TermOrder::deglex(&prec)),
        "lex" => Ok(TermOrder::lex(&prec)),
        "lenlex" => Ok(TermOrder::lenlex(&prec)),
        "revlenlex" => Ok(TermOrder::revlenlex(&prec)),
        "rank" => Ok(TermOrder::rank(&prec)),
        _ => Err(t.err(format!("unknown ordering \"{name}\""))),
    }
}

enum DomainDecl {
    Q,
    Z,
    Divisor,
    Gf(u64),
    Mod(BigInt),
    Pair,
}

fn parse_domain(t: &Token) -> Result<DomainDecl, ParseError> {
    let w = t.word().ok_or_else(|| t.err("expected a domain"))?;
    let bad = || t.err(format!("unknown domain \"{w}\""));
    Ok(match w {
        "QQ" => DomainDecl::Q,
        "ZZ" => DomainDecl::Z,
        "ZZ(divisor)" => DomainDecl::Divisor,
        "ZZ(+)ZZ" => DomainDecl::Pair,
        _ => {
            if let Some(p) = w.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')) {
                DomainDecl::Gf(p.parse().map_err(|_| bad())?)
            } else if let Some(m) = w.strip_prefix("ZZ/") {
                DomainDecl::Mod(m.parse().map_err(|_| bad())?)
            } else {
                return Err(bad());
            }
        }
    })
}

fn parse_reductive(t: &Token) -> Result<Reductive, ParseError> {
    let w = t.word().ok_or_else(|| t.err("expected a reductive relation"))?;
    match w {
        "divides" => Ok(Reductive::Divides),
        "prefix" => Ok(Reductive::Prefix),
        "subword" => Ok(Reductive::Subword),
        _ => {
            let n = w
                .strip_prefix("multiple(")
                .and_then(|r| r.strip_suffix(')'))
                .and_then(|n| n.parse().ok())
                .ok_or_else(|| t.err(format!("unknown reductive relation \"{w}\"")))?;
            Ok(Reductive::Multiple { bound: n })
        }
    }
}

fn report_warnings(r: &ConstructionReport) -> Vec<String> {
    let mut out = Vec::new();
    for (k, v) in [
        ("ordering", &r.ordering),
        ("confluence", &r.confluence),
        ("associativity", &r.associativity),
        ("reductive", &r.reductive),
        ("stability", &r.stability),
    ] {
        out.extend(v.iter().map(|m| format!("{k}: {m}")));
    }
    out
}

fn parse_ring(toks: &[Token], line: usize) -> Result<RingEntry, ParseError> {
    let head = &toks[0];
    let body = &toks[1..];
    let find = |kw: &str| body.iter().position(|t| t.word() == Some(kw));
    let over = find("over").ok_or_else(|| head.err("ring needs an over clause"))?;
    let ord = find("ord").filter(|&k| k < over);
    let udecl = parse_universe(&body[..ord.unwrap_or(over)], head)?;
    let names = symbols_of(&udecl).to_vec();
    let order = match (ord, &udecl) {
        (None, UniverseDecl::Coefficients) => None,
        (Some(k), UniverseDecl::Coefficients) => return Err(body[k].err("a coefficients ring takes no ordering")),
        (None, _) => return Err(head.err("ring needs an ord clause")),
        (Some(k), _) => Some(parse_order(body.get(k + 1).ok_or_else(|| body[k].err("missing ordering"))?, &names)?),
    };
    if let Some(k) = ord {
        if k + 2 != over {
            return Err(body[k + 1].err("unexpected tokens before over"));
        }
    }
    let dtok = body.get(over + 1).ok_or_else(|| body[over].err("missing domain"))?;
    let domain = parse_domain(dtok)?;

    let mut reductive = None;
    let mut side = Side::Right;
    let mut bound = None;
    let mut k = over + 2;
    while k < body.len() {
        let key = &body[k];
        let val = body.get(k + 1).ok_or_else(|| key.err("missing value"))?;
        match key.word() {
            Some("red") => reductive = Some(parse_reductive(val)?),
            Some("side") => {
                side = match val.word() {
                    Some("right") => Side::Right,
                    Some("two-sided") => Side::TwoSided,
                    _ => return Err(val.err("side is right or two-sided")),
                }
            }
            Some("bound") => {
                bound = Some(val.word().and_then(|w| w.parse::<usize>().ok()).ok_or_else(|| val.err("expected a number"))?)
            }
            _ => return Err(key.err("expected red, side or bound")),
        }
        k += 2;
    }

    let coeff_only = |ring: AnyRing, description: String| RingEntry { line, ring, side, description, warnings: vec![] };
    let domain_err = |e: Error| dtok.err(e.to_string());
    let (universe, default_red) = match udecl {
        UniverseDecl::Coefficients => {
            let ring = match domain {
                DomainDecl::Q => AnyRing::QOnly(Rationals),
                DomainDecl::Z => AnyRing::ZOnly(Integers::div_rem()),
                DomainDecl::Divisor => AnyRing::Divisor(Integers::divisor()),
                DomainDecl::Gf(p) => AnyRing::GfOnly(PrimeField::new(p).map_err(domain_err)?),
                DomainDecl::Mod(m) => AnyRing::Mod(IntegersMod::new(m).map_err(domain_err)?),
                DomainDecl::Pair => AnyRing::Pair(SumDomain::new(Integers::div_rem(), Integers::div_rem())),
            };
            let d = dtok.word().unwrap_or_default().to_string();
            return Ok(coeff_only(ring, format!("coefficients over {d}")));
        }
        UniverseDecl::Vars(n) => (Universe::commutative(n), Reductive::Divides),
        UniverseDecl::Letters(n, rules) => {
            let kind = if rules.iter().all(Rule::is_monomial) { WordKind::Monoid } else { WordKind::Algebra };
            let red = if side == Side::Right { Reductive::Prefix } else { Reductive::Subword };
            (Universe::words(WordSystem::new(n, rules, kind)), red)
        }
        UniverseDecl::Solvable(n, rules) => (Universe::words(WordSystem::new(n, rules, WordKind::Solvable)), Reductive::Divides),
        UniverseDecl::Table(n, prod) => {
            let mut full = Vec::new();
            for (i, row) in prod.into_iter().enumerate() {
                let mut r = Vec::new();
                for (j, e) in row.into_iter().enumerate() {
                    r.push(e.ok_or_else(|| head.err(format!("table is missing the product {}*{}", n[i], n[j])))?);
                }
                full.push(r);
            }
            (Universe::table(TableSystem::new(n, full).map_err(|e| head.err(e.to_string()))?), Reductive::Multiple { bound: 2 })
        }
    };
    let red = reductive.unwrap_or(default_red);
    let ord_tok = &body[ord.map_or(0, |k| k + 1)];
    let (space, report) =
        TermSpace::new_unchecked(universe, order.expect("ordering"), red).map_err(|e| ord_tok.err(e.to_string()))?;
    let space = match bound {
        Some(b) => space.with_bound(b),
        None => space,
    };
    let description = space.describe();
    let warnings = report_warnings(&report);
    let ring_err = |e: Error| dtok.err(e.to_string());
    let ring = match domain {
        DomainDecl::Q => AnyRing::Q(FunctionRing::new(space, Rationals).map_err(ring_err)?),
        DomainDecl::Z => AnyRing::Z(FunctionRing::new(space, Integers::div_rem()).map_err(ring_err)?),
        DomainDecl::Gf(p) => AnyRing::Gf(FunctionRing::new(space, PrimeField::new(p).map_err(ring_err)?).map_err(ring_err)?),
        DomainDecl::Divisor => AnyRing::Divisor(Integers::divisor()),
        DomainDecl::Mod(m) => AnyRing::Mod(IntegersMod::new(m).map_err(ring_err)?),
        DomainDecl::Pair => AnyRing::Pair(SumDomain::new(Integers::div_rem(), Integers::div_rem())),
    };
    let description = if ring.has_polys() {
        description
    } else {
        format!("coefficients over {} (no polynomial arithmetic)", dtok.word().unwrap_or_default())
    };
    Ok(RingEntry { line, ring, side, description, warnings })
}

// ---------------------------------------------------------------------------
// Commands

struct Args<'a> {
    head: &'a Token,
    toks: &'a [Token],
    k: usize,
    lets: &'a HashMap<String, Vec<Located>>,
}

impl<'a> Args<'a> {
    fn next(&mut self, what: &str) -> Result<&'a Token, ParseError> {
        let t = self.toks.get(self.k).ok_or_else(|| self.head.err(format!("missing {what}")))?;
        self.k += 1;
        Ok(t)
    }

    fn set(&mut self) -> Result<SetRef, ParseError> {
        let t = self.next("a polynomial list")?;
        match &t.tok {
            Tok::List(items) => Ok(SetRef::Inline(items.clone())),
            Tok::Word(w) if self.lets.contains_key(w) => Ok(SetRef::Named(w.clone())),
            Tok::Word(w) => Err(t.err(format!("unknown name {w}"))),
            Tok::Quoted(_) => Err(t.err("expected a name or [list]")),
        }
    }

    fn poly(&mut self) -> Result<Located, ParseError> {
        let t = self.next("a quoted polynomial")?;
        match &t.tok {
            Tok::Quoted(s) => Ok(t.located(s)),
            _ => Err(t.err("expected a quoted polynomial")),
        }
    }

    fn number(&mut self) -> Result<usize, ParseError> {
        let t = self.next("a number")?;
        t.word().and_then(|w| w.parse().ok()).ok_or_else(|| t.err("expected a number"))
    }

    fn peek_word(&self) -> Option<&'a str> {
        self.toks.get(self.k).and_then(Token::word)
    }

    fn done(&self) -> Result<(), ParseError> {
        match self.toks.get(self.k) {
            Some(t) => Err(t.err("unexpected argument")),
            None => Ok(()),
        }
    }
}

fn parse_vectors(t: &Token) -> Result<Vec<Vec<BigInt>>, ParseError> {
    let Tok::List(items) = &t.tok else { return Err(t.err("expected [v1; v2; ...]")) };
    let mut out: Vec<Vec<BigInt>> = Vec::new();
    for it in items {
        let v = it
            .text
            .split(',')
            .map(|x| x.trim().parse::<BigInt>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| it.err("expected comma separated integers"))?;
        if out.first().is_some_and(|f| f.len() != v.len()) {
            return Err(it.err("vectors of mixed length"));
        }
        out.push(v);
    }
    Ok(out)
}

fn parse_cmd(head: &Token, toks: &[Token], lets: &HashMap<String, Vec<Located>>) -> Result<Cmd, ParseError> {
    let name = toks.first().and_then(Token::word).ok_or_else(|| head.err("expected a command name"))?;
    let mut a = Args { head: &toks[0], toks, k: 1, lets };
    let cmd = match name {
        "gb" => Cmd::Gb(a.set()?),
        "member" => Cmd::Member(a.set()?, a.poly()?),
        "represent" => Cmd::Represent(a.set()?, a.poly()?),
        "nf" => Cmd::Nf(a.set()?, a.poly()?),
        "spol" => Cmd::Spol(a.poly()?, a.poly()?),
        "sat" => Cmd::Sat(a.poly()?),
        "satcheck" => Cmd::SatCheck(a.set()?),
        "isgb" => Cmd::IsGb(a.set()?),
        "include" => Cmd::Include(a.set()?, a.set()?),
        "equal" => Cmd::Equal(a.set()?, a.set()?),
        "trivial" => Cmd::Trivial(a.set()?),
        "sum" => Cmd::Sum(a.set()?, a.set()?),
        "product" => Cmd::Product(a.set()?, a.set()?),
        "intersect" => Cmd::Intersect(a.set()?, a.set()?),
        "radical" => Cmd::Radical(a.set()?, a.poly()?),
        "inverse" => {
            let poly = a.poly()?;
            let hand = match a.peek_word() {
                Some("right") => {
                    a.k += 1;
                    HandArg::Right
                }
                Some("left") => {
                    a.k += 1;
                    HandArg::Left
                }
                _ => HandArg::Right,
            };
            let modulo = if a.peek_word() == Some("mod") {
                a.k += 1;
                Some(a.set()?)
            } else {
                None
            };
            Cmd::Inverse { poly, hand, modulo }
        }
        "quotient" => Cmd::Quotient(a.set()?, a.number()?),
        "congruent" => Cmd::Congruent(a.set()?, a.poly()?, a.poly()?),
        "kernel" => Cmd::Kernel(a.set()?),
        "image" => Cmd::Image(a.set()?, a.poly()?),
        "onto" => Cmd::Onto(a.set()?),
        "solve" => Cmd::Solve(a.set()?, a.poly()?),
        "reduce" => Cmd::Reduce(a.poly()?, a.poly()?),
        "coeffnf" => Cmd::CoeffNf(a.poly()?, a.set()?),
        "coeffgb" => Cmd::CoeffGb(a.set()?),
        "probe" => Cmd::Probe(a.number()?),
        "modgb" => Cmd::ModGb(parse_vectors(a.next("a vector list")?)?),
        _ => return Err(toks[0].err(format!("unknown command {name}"))),
    };
    a.done()?;
    Ok(cmd)
}

fn set_items<'a>(s: &'a SetRef, lets: &'a HashMap<String, Vec<Located>>) -> &'a [Located] {
    match s {
        SetRef::Named(n) => &lets[n],
        SetRef::Inline(v) => v,
    }
}

/// Every polynomial and coefficient argument parses in the ring.
fn check_args(cmd: &Cmd, ring: &AnyRing, lets: &HashMap<String, Vec<Located>>) -> Result<(), ParseError> {
    let poly = |l: &Located| ring.parse_poly(&l.text).map_err(|e| l.err(e.to_string()));
    let elem = |l: &Located| ring.parse_elem(&l.text).map_err(|e| l.err(e.to_string()));
    let set = |s: &SetRef| set_items(s, lets).iter().try_for_each(poly);
    let elems = |s: &SetRef| set_items(s, lets).iter().try_for_each(elem);
    match cmd {
        Cmd::Gb(f) | Cmd::SatCheck(f) | Cmd::IsGb(f) | Cmd::Trivial(f) | Cmd::Kernel(f) | Cmd::Onto(f) => set(f),
        Cmd::Quotient(f, _) => set(f),
        Cmd::Member(f, p) | Cmd::Represent(f, p) | Cmd::Nf(f, p) | Cmd::Radical(f, p) | Cmd::Image(f, p) | Cmd::Solve(f, p) => {
            set(f)?;
            poly(p)
        }
        Cmd::Spol(p, q) => {
            poly(p)?;
            poly(q)
        }
        Cmd::Sat(p) => poly(p),
        Cmd::Include(f, g) | Cmd::Equal(f, g) | Cmd::Sum(f, g) | Cmd::Product(f, g) | Cmd::Intersect(f, g) => {
            set(f)?;
            set(g)
        }
        Cmd::Inverse { poly: p, modulo, .. } => {
            poly(p)?;
            modulo.as_ref().map_or(Ok(()), set)
        }
        Cmd::Congruent(f, p, q) => {
            set(f)?;
            poly(p)?;
            poly(q)
        }
        Cmd::Reduce(a, b) => {
            elem(a)?;
            elem(b)
        }
        Cmd::CoeffNf(a, g) => {
            elem(a)?;
            elems(g)
        }
        Cmd::CoeffGb(g) => elems(g),
        Cmd::Probe(_) | Cmd::ModGb(_) => Ok(()),
    }
}

// ---------------------------------------------------------------------------

pub fn parse_session(text: &str) -> Result<Session, ParseError> {
    let mut rings: Vec<RingEntry> = Vec::new();
    let mut items = Vec::new();
    let mut lets: HashMap<String, Vec<Located>> = HashMap::new();
    for src in logical_lines(text) {
        let start = src.text.len() - src.text.trim_start().len();
        let (line, _) = src.at(start);
        let toks = tokenize(&src, start)?;
        let head = &toks[0];
        let kw = head.word().ok_or_else(|| head.err("expected ring, let, set or cmd"))?;
        match kw {
            "ring" => {
                rings.push(parse_ring(&toks, line)?);
                lets.clear();
                items.push(Item { line, kind: ItemKind::Ring(rings.len() - 1) });
            }
            "let" => {
                let ring = rings.last().ok_or_else(|| head.err("let before any ring"))?;
                let body = &src.text[start + 3..];
                let eq = body.find('=').ok_or_else(|| head.err("expected let NAME = [...]"))?;
                let name = body[..eq].trim();
                if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
                    return Err(head.err(format!("bad name \"{name}\"")));
                }
                let rest = tokenize(&src, start + 3 + eq + 1)?;
                let polys = match &rest[..] {
                    [Token { tok: Tok::List(items), .. }] => items.clone(),
                    [t, ..] => return Err(t.err("expected a single [list]")),
                    [] => return Err(head.err("expected [list]")),
                };
                for p in &polys {
                    ring.ring.parse_poly(&p.text).map_err(|e| p.err(e.to_string()))?;
                }
                lets.insert(name.to_string(), polys.clone());
                items.push(Item { line, kind: ItemKind::Let(name.to_string(), polys) });
            }
            "set" => {
                let key = match toks.get(1).and_then(Token::word) {
                    Some("budget") => SetKey::Budget,
                    Some("steps") => SetKey::Steps,
                    Some("bound") => SetKey::Bound,
                    Some("seed") => SetKey::Seed,
                    _ => return Err(toks.get(1).unwrap_or(head).err("expected budget, steps, bound or seed")),
                };
                let v = toks.get(2).ok_or_else(|| toks[1].err("missing value"))?;
                let value = v.word().and_then(|w| w.parse().ok()).ok_or_else(|| v.err("expected a number"))?;
                if let Some(t) = toks.get(3) {
                    return Err(t.err("unexpected token"));
                }
                items.push(Item { line, kind: ItemKind::Set(key, value) });
            }
            "cmd" => {
                let ring = rings.last().ok_or_else(|| head.err("cmd before any ring"))?;
                let cmd = parse_cmd(head, &toks[1..], &lets)?;
                if !cmd.is_coefficient() && !ring.ring.has_polys() {
                    return Err(toks[1].err("this ring supports coefficient commands only"));
                }
                check_args(&cmd, &ring.ring, &lets)?;
                let text = src.text[start..].trim()["cmd".len()..].split_whitespace().collect::<Vec<_>>().join(" ");
                items.push(Item { line, kind: ItemKind::Cmd { ring: rings.len() - 1, text, cmd } });
            }
            _ => return Err(head.err(format!("expected ring, let, set or cmd, found \"{kw}\""))),
        }
    }
    Ok(Session { rings, items })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn err(text: &str) -> ParseError {
        parse_session(text).unwrap_err()
    }

    #[test]
    fn intro_session() {
        let s = parse_session("ring vars X1 X2 X3 ord deglex over QQ\nlet F=[X1^2+X2; X1^2+X3]\ncmd gb F\n").unwrap();
        assert_eq!(s.rings.len(), 1);
        assert_eq!(s.items.len(), 3);
        let ItemKind::Let(name, polys) = &s.items[1].kind else { panic!() };
        assert_eq!(name, "F");
        assert_eq!(polys[1], Located { text: "X1^2+X3".into(), line: 2, col: 17 });
    }

    #[test]
    fn word_rings() {
        let s = parse_session("ring letters a b rules ab->. ba->. ord lenlex(a>b) over QQ").unwrap();
        assert!(s.rings[0].warnings.is_empty());
        let s = parse_session("ring letters a b rules ab->. ord lenlex(a>b) over ZZ").unwrap();
        assert!(s.rings[0].warnings.iter().any(|w| w.starts_with("stability")));
        let s = parse_session("ring letters a b c rules ab->a ba->bb-b aa->0 ord revlenlex(a>b>c) over QQ").unwrap();
        assert!(s.rings[0].ring.has_polys());
    }

    #[test]
    fn word_sums() {
        let n: Vec<String> = ["a", "ab", "b"].iter().map(|s| s.to_string()).collect();
        let one = BigRational::one();
        assert_eq!(parse_word_sum("abb-2.", &n).unwrap(), vec![(one.clone(), vec![1, 2]), (BigRational::from_integer((-2).into()), vec![])]);
        assert_eq!(parse_word_sum("0", &n).unwrap(), vec![]);
        assert_eq!(parse_word_sum("1/2a", &n).unwrap(), vec![(BigRational::new(1.into(), 2.into()), vec![0])]);
        assert!(parse_word_sum("ac", &n).is_err());
    }

    #[test]
    fn multiline_lets_and_comments() {
        let s = parse_session("ring vars X ord deglex over GF(5) # field\nlet F = [X^2;\n  X + 1]\ncmd gb F").unwrap();
        let ItemKind::Let(_, polys) = &s.items[1].kind else { panic!() };
        assert_eq!(polys[1].line, 3);
        assert_eq!(polys[1].col, 3);
    }

    #[test]
    fn diagnostics() {
        assert_eq!(err("ring vars X Y ord deglex over QQ\nlet F = [X + Z]").line, 2);
        let e = err("ring vars X Y ord deglex over QQ\ncmd member G \"X\"");
        assert_eq!((e.line, e.col), (2, 12));
        assert!(e.msg.contains("unknown name G"));
        assert!(err("ring vars X $z ord deglex over QQ").msg.contains("collides"));
        assert!(err("ring letters a b rules ac->. ord lenlex over QQ").msg.contains("unknown letter"));
        assert!(err("ring vars X ord deglex(X>Y) over QQ").msg.contains("unknown symbol Y"));
        assert!(err("ring vars X ord deglex over GF(6)").msg.contains("not prime"));
        assert!(err("ring vars X ord deglex over ZZ/6\ncmd gb [X]").msg.contains("coefficient commands only"));
        assert!(err("cmd gb F").msg.contains("before any ring"));
        assert!(err("ring vars X ord deglex over QQ\ncmd frob").msg.contains("unknown command"));
        assert!(err("ring vars X ord deglex over QQ\nlet F = [X").msg.contains("unterminated"));
        assert!(err("ring table e x products e*e=e e*x=x x*e=x ord rank over QQ").msg.contains("missing the product x*x"));
        let e = err("ring vars X ord deglex over QQ\ncmd member [X] \"X +* 1\"");
        assert_eq!((e.line, e.col), (2, 17));
    }

    #[test]
    fn coefficient_rings() {
        let s = parse_session("ring coefficients over ZZ(divisor)\nlet G = [4]\ncmd reduce \"5\" \"4\"\ncmd coeffnf \"7\" G").unwrap();
        assert!(!s.rings[0].ring.has_polys());
        let s = parse_session("ring coefficients over ZZ(+)ZZ\ncmd reduce \"(5,3)\" \"(4,2)\"").unwrap();
        assert_eq!(s.items.len(), 2);
        assert!(err("ring coefficients over ZZ(+)ZZ\ncmd reduce \"5\" \"4\"").msg.contains("pair"));
    }
}
