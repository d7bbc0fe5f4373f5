//! Command-line front end: expression and presentation-file parsing,
//! command dispatch, text and structured (JSON) output.
//!
//! Exit codes: 0 success; 1 verification failure or NOT-MEMBER; 2 parse
//! error; 3 mathematical error (NotDivisible, WindowExceeded,
//! NonTerminating); 4 INCONCLUSIVE membership.

use crate::catalog;
use crate::classical::{self, LimitMarker};
use crate::drinfeld::{self, Verdict};
use crate::hopf;
use crate::ncalg::{
    Classification, GenId, LatticeKind, LatticeSpec, NcElement, Presentation, RuleKind, TExpr,
    Word,
};
use crate::qcoeff::{rat, LaurentPoly, Rat};
use crate::tensor::{self, TensorElement};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt::Write as _;

// ---------------------------------------------------------------------------
// Expression parsing
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
pub enum ParseError {
    Syntax { line: usize, col: usize, message: String },
    UnknownGenerator(String),
    ArityMismatch(String),
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParseError::Syntax { line, col, message } => {
                write!(f, "parse error at {}:{}: {}", line, col, message)
            }
            ParseError::UnknownGenerator(g) => write!(f, "unknown generator `{}`", g),
            ParseError::ArityMismatch(m) => write!(f, "arity mismatch: {}", m),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(num::BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    At,
    Slash,
    LParen,
    RParen,
    Eof,
}

struct Lexer {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
}

fn lex(src: &str) -> Result<Lexer, ParseError> {
    let mut toks = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut it = src.chars().peekable();
    while let Some(&ch) = it.peek() {
        let (l, c) = (line, col);
        match ch {
            '\n' => {
                it.next();
                line += 1;
                col = 1;
            }
            '#' => {
                for ch in it.by_ref() {
                    if ch == '\n' {
                        break;
                    }
                }
                line += 1;
                col = 1;
            }
            ch if ch.is_whitespace() => {
                it.next();
                col += 1;
            }
            '+' | '-' | '*' | '^' | '@' | '/' | '(' | ')' => {
                it.next();
                col += 1;
                toks.push((
                    match ch {
                        '+' => Tok::Plus,
                        '-' => Tok::Minus,
                        '*' => Tok::Star,
                        '^' => Tok::Caret,
                        '@' => Tok::At,
                        '/' => Tok::Slash,
                        '(' => Tok::LParen,
                        _ => Tok::RParen,
                    },
                    l,
                    c,
                ));
            }
            ch if ch.is_ascii_digit() => {
                let mut s = String::new();
                while let Some(&d) = it.peek() {
                    if d.is_ascii_digit() {
                        s.push(d);
                        it.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                toks.push((Tok::Int(s.parse().unwrap()), l, c));
            }
            ch if ch.is_ascii_alphabetic() || ch == '_' => {
                let mut s = String::new();
                while let Some(&d) = it.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        s.push(d);
                        it.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                toks.push((Tok::Ident(s), l, c));
            }
            other => {
                return Err(ParseError::Syntax {
                    line,
                    col,
                    message: format!("unexpected character `{}`", other),
                })
            }
        }
    }
    toks.push((Tok::Eof, line, col));
    Ok(Lexer { toks, pos: 0 })
}

impl Lexer {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }
    fn loc(&self) -> (usize, usize) {
        (self.toks[self.pos].1, self.toks[self.pos].2)
    }
    fn next(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }
    fn err(&self, message: impl Into<String>) -> ParseError {
        let (line, col) = self.loc();
        ParseError::Syntax { line, col, message: message.into() }
    }
}

/// Parsed value: a plain element or a tensor of arity >= 2.
#[derive(Debug, Clone, PartialEq)]
pub enum Parsed {
    Nc(NcElement),
    Tensor(TensorElement),
}

impl Parsed {
    fn is_scalar(&self) -> Option<LaurentPoly> {
        match self {
            Parsed::Nc(x) => {
                if x.is_zero() {
                    return Some(LaurentPoly::zero());
                }
                if x.terms.len() == 1 {
                    if let Some(c) = x.terms.get(&Word::empty()) {
                        return Some(c.clone());
                    }
                }
                None
            }
            Parsed::Tensor(_) => None,
        }
    }
}

struct ExprParser<'a> {
    lx: Lexer,
    pres: &'a Presentation,
}

impl<'a> ExprParser<'a> {
    // sum := product (('+'|'-') product)*
    fn sum(&mut self) -> Result<Parsed, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.lx.peek() {
                Tok::Plus => {
                    self.lx.next();
                    let rhs = self.unary()?;
                    acc = add(acc, rhs)?;
                }
                Tok::Minus => {
                    self.lx.next();
                    let rhs = self.unary()?;
                    acc = add(acc, negate(rhs))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    // unary := '-' unary | tensor
    fn unary(&mut self) -> Result<Parsed, ParseError> {
        if matches!(self.lx.peek(), Tok::Minus) {
            self.lx.next();
            return Ok(negate(self.unary()?));
        }
        self.tensor()
    }

    // tensor := product ('@' product)*
    fn tensor(&mut self) -> Result<Parsed, ParseError> {
        let mut parts = vec![self.product()?];
        while matches!(self.lx.peek(), Tok::At) {
            self.lx.next();
            parts.push(self.product()?);
        }
        if parts.len() == 1 {
            return Ok(parts.pop().unwrap());
        }
        // Each part must be a plain element; combine multilinearly.
        let mut elems = Vec::new();
        for p in parts {
            match p {
                Parsed::Nc(x) => elems.push(x),
                Parsed::Tensor(_) => {
                    return Err(ParseError::ArityMismatch(
                        "nested tensors are not supported".into(),
                    ))
                }
            }
        }
        Ok(Parsed::Tensor(tensor::tensor_of(&elems)))
    }

    // product := power (('*' power) | power-adjacent)*  -- explicit '*' only
    fn product(&mut self) -> Result<Parsed, ParseError> {
        let mut acc = self.power()?;
        while matches!(self.lx.peek(), Tok::Star) {
            self.lx.next();
            let rhs = self.power()?;
            acc = multiply(self.pres, acc, rhs)?;
        }
        Ok(acc)
    }

    // power := atom ('^' exponent)?
    fn power(&mut self) -> Result<Parsed, ParseError> {
        let base = self.atom()?;
        if !matches!(self.lx.peek(), Tok::Caret) {
            return Ok(base);
        }
        self.lx.next();
        let neg = if matches!(self.lx.peek(), Tok::Minus) {
            self.lx.next();
            true
        } else {
            false
        };
        let Tok::Int(n) = self.lx.peek().clone() else {
            return Err(self.lx.err("expected integer exponent after ^"));
        };
        self.lx.next();
        let n: i64 = n.to_string().parse().map_err(|_| self.lx.err("exponent too large"))?;
        let n = if neg { -n } else { n };
        if let Some(c) = base.is_scalar() {
            if n >= 0 {
                return Ok(Parsed::Nc(NcElement::scalar(c.pow(n as u32))));
            }
            // negative power of a scalar: only unit monomials invert
            if c.is_unit() {
                let (k, r) = c.terms().next().map(|(k, r)| (k, r.clone())).unwrap();
                let inv = LaurentPoly::monomial(Rat::from(rat(1)) / r, -k);
                return Ok(Parsed::Nc(NcElement::scalar(inv.pow((-n) as u32))));
            }
            return Err(self.lx.err("cannot invert a non-monomial scalar"));
        }
        if n < 0 {
            return Err(self.lx.err("negative exponent on a non-scalar"));
        }
        match base {
            Parsed::Nc(x) => {
                let p = self
                    .pres
                    .pow(&x, n as u32)
                    .map_err(|e| self.lx.err(e.to_string()))?;
                Ok(Parsed::Nc(p))
            }
            Parsed::Tensor(_) => Err(self.lx.err("cannot exponentiate a tensor")),
        }
    }

    fn atom(&mut self) -> Result<Parsed, ParseError> {
        match self.lx.peek().clone() {
            Tok::LParen => {
                self.lx.next();
                let inner = self.sum()?;
                if !matches!(self.lx.peek(), Tok::RParen) {
                    return Err(self.lx.err("expected )"));
                }
                self.lx.next();
                Ok(inner)
            }
            Tok::Int(n) => {
                self.lx.next();
                // INT or INT/INT rational literal
                if matches!(self.lx.peek(), Tok::Slash) {
                    self.lx.next();
                    let Tok::Int(d) = self.lx.peek().clone() else {
                        return Err(self.lx.err("expected denominator"));
                    };
                    self.lx.next();
                    if d == 0.into() {
                        return Err(self.lx.err("zero denominator"));
                    }
                    let r = Rat::new(n, d);
                    return Ok(Parsed::Nc(NcElement::scalar(LaurentPoly::from_rat(r))));
                }
                Ok(Parsed::Nc(NcElement::scalar(LaurentPoly::from_rat(Rat::from(n)))))
            }
            Tok::Ident(name) => {
                self.lx.next();
                if name == "q" {
                    return Ok(Parsed::Nc(NcElement::scalar(LaurentPoly::q())));
                }
                if name == "T" {
                    return Err(self.lx.err("T is reserved for Cartan declarations"));
                }
                match self.pres.resolve(&name) {
                    Some(x) => Ok(Parsed::Nc(x)),
                    None => Err(ParseError::UnknownGenerator(name)),
                }
            }
            other => Err(self.lx.err(format!("unexpected token {:?}", other))),
        }
    }
}

fn negate(v: Parsed) -> Parsed {
    match v {
        Parsed::Nc(x) => Parsed::Nc(x.neg()),
        Parsed::Tensor(t) => Parsed::Tensor(t.scale(&-&LaurentPoly::one())),
    }
}

fn add(a: Parsed, b: Parsed) -> Result<Parsed, ParseError> {
    match (a, b) {
        (Parsed::Nc(x), Parsed::Nc(y)) => Ok(Parsed::Nc(x.add(&y))),
        (Parsed::Tensor(x), Parsed::Tensor(y)) if x.arity == y.arity => {
            Ok(Parsed::Tensor(x.add(&y)))
        }
        _ => Err(ParseError::ArityMismatch(
            "cannot add values of different tensor arity".into(),
        )),
    }
}

fn multiply(p: &Presentation, a: Parsed, b: Parsed) -> Result<Parsed, ParseError> {
    if let Some(c) = a.is_scalar() {
        return Ok(match b {
            Parsed::Nc(x) => Parsed::Nc(x.scale(&c)),
            Parsed::Tensor(t) => Parsed::Tensor(t.scale(&c)),
        });
    }
    if let Some(c) = b.is_scalar() {
        return Ok(match a {
            Parsed::Nc(x) => Parsed::Nc(x.scale(&c)),
            Parsed::Tensor(t) => Parsed::Tensor(t.scale(&c)),
        });
    }
    match (a, b) {
        (Parsed::Nc(x), Parsed::Nc(y)) => Ok(Parsed::Nc(
            p.multiply(&x, &y)
                .map_err(|e| ParseError::ArityMismatch(e.to_string()))?,
        )),
        (Parsed::Tensor(x), Parsed::Tensor(y)) if x.arity == y.arity => Ok(Parsed::Tensor(
            tensor::tensor_multiply(p, &x, &y)
                .map_err(|e| ParseError::ArityMismatch(e.to_string()))?,
        )),
        _ => Err(ParseError::ArityMismatch(
            "cannot multiply values of different tensor arity".into(),
        )),
    }
}

/// Parse an expression against a presentation; the result is normalized.
pub fn parse_expression(src: &str, p: &Presentation) -> Result<Parsed, ParseError> {
    let lx = lex(src)?;
    let mut ep = ExprParser { lx, pres: p };
    let v = ep.sum()?;
    if !matches!(ep.lx.peek(), Tok::Eof) {
        return Err(ep.lx.err("trailing input"));
    }
    match v {
        Parsed::Nc(x) => Ok(Parsed::Nc(
            p.normal_form(&x)
                .map_err(|e| ParseError::ArityMismatch(e.to_string()))?,
        )),
        Parsed::Tensor(t) => Ok(Parsed::Tensor(
            tensor::normalize(p, &t)
                .map_err(|e| ParseError::ArityMismatch(e.to_string()))?,
        )),
    }
}

/// Scalar-only expression (coefficients in presentation files).
fn parse_scalar(src: &str, p: &Presentation) -> Result<LaurentPoly, ParseError> {
    match parse_expression(src, p)? {
        Parsed::Nc(x) => {
            if x.is_zero() {
                return Ok(LaurentPoly::zero());
            }
            if x.terms.len() == 1 {
                if let Some(c) = x.terms.get(&Word::empty()) {
                    return Ok(c.clone());
                }
            }
            Err(ParseError::ArityMismatch("expected a scalar".into()))
        }
        Parsed::Tensor(_) => Err(ParseError::ArityMismatch("expected a scalar".into())),
    }
}

// ---------------------------------------------------------------------------
// Presentation files
// ---------------------------------------------------------------------------

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("line {0}: {1}")]
    Format(usize, String),
    #[error("Hopf check failed: {0}")]
    HopfCheckFailed(String),
}

/// Parse the line-oriented presentation format and verify the Hopf axioms.
pub fn parse_presentation_file(src: &str) -> Result<Presentation, LoadError> {
    // First pass: collect generator declarations so expressions can parse.
    let mut name = String::from("anonymous");
    let mut classification = Classification::Qfa;
    let mut gen_names: Vec<String> = Vec::new();
    let mut weights: BTreeMap<String, u32> = BTreeMap::new();
    let mut inverses: Vec<(String, String)> = Vec::new();
    let lines: Vec<(usize, String)> = src
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim().to_string()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    for (ln, line) in &lines {
        let (kw, rest) = line.split_once(' ').unwrap_or((line.as_str(), ""));
        match kw {
            "algebra" => name = rest.trim().to_string(),
            "class" => {
                classification = match rest.trim() {
                    "quea" => Classification::Quea,
                    "qfa" => Classification::Qfa,
                    "classical" => Classification::Classical,
                    other => {
                        return Err(LoadError::Format(*ln, format!("unknown class `{}`", other)))
                    }
                }
            }
            "generators" => {
                for g in rest.split(',') {
                    let g = g.trim();
                    if g.is_empty() {
                        return Err(LoadError::Format(*ln, "empty generator name".into()));
                    }
                    gen_names.push(g.to_string());
                }
            }
            "weight" => {
                let (g, w) = rest
                    .split_once('=')
                    .ok_or_else(|| LoadError::Format(*ln, "expected `weight g = INT`".into()))?;
                let w: u32 = w.trim().parse().map_err(|_| {
                    LoadError::Format(*ln, "expected a positive integer weight".into())
                })?;
                weights.insert(g.trim().to_string(), w);
            }
            "inverse" => {
                let parts: Vec<&str> = rest.split(',').map(|s| s.trim()).collect();
                if parts.len() != 2 {
                    return Err(LoadError::Format(*ln, "expected `inverse g, ginv`".into()));
                }
                inverses.push((parts[0].to_string(), parts[1].to_string()));
            }
            _ => {}
        }
    }
    if gen_names.is_empty() {
        return Err(LoadError::Format(0, "no generators declared".into()));
    }

    let mut b = crate::ncalg::PresentationBuilder::new(&name, classification);
    for g in &gen_names {
        let w = weights.get(g).copied().unwrap_or(1);
        b.add_gen_weighted(g, w);
    }
    for (g, gi) in &inverses {
        let g = b
            .gens
            .iter()
            .position(|x| &x.name == g)
            .ok_or_else(|| LoadError::Format(0, format!("unknown generator `{}`", g)))?;
        let gi = b
            .gens
            .iter()
            .position(|x| &x.name == gi)
            .ok_or_else(|| LoadError::Format(0, format!("unknown generator `{}`", gi)))?;
        b.mark_inverse_pair(g, gi);
    }

    // Second pass: aliases first (they may appear in later expressions),
    // then relations, identities, Hopf data, lattice, grading, cartan.
    let mut coproduct: BTreeMap<GenId, TensorElement> = BTreeMap::new();
    let mut counit: BTreeMap<GenId, LaurentPoly> = BTreeMap::new();
    let mut antipode: BTreeMap<GenId, NcElement> = BTreeMap::new();
    let mut lattice_kind = LatticeKind::Free;
    let mut family = String::new();
    let mut grading: BTreeMap<GenId, i64> = BTreeMap::new();
    let mut relations: Vec<(usize, NcElement)> = Vec::new();
    let mut identities: Vec<NcElement> = Vec::new();

    for (ln, line) in &lines {
        let (kw, rest) = line.split_once(' ').unwrap_or((line.as_str(), ""));
        let pp = b.partial();
        let gen_of = |s: &str| -> Result<GenId, LoadError> {
            pp.gen_id(s.trim())
                .ok_or_else(|| LoadError::Format(*ln, format!("unknown generator `{}`", s.trim())))
        };
        match kw {
            "algebra" | "class" | "generators" | "weight" | "inverse" => {}
            "alias" => {
                let (nm, expr) = rest
                    .split_once('=')
                    .ok_or_else(|| LoadError::Format(*ln, "expected `alias NAME = EXPR`".into()))?;
                let v = match parse_expression(expr, &pp)? {
                    Parsed::Nc(x) => x,
                    _ => return Err(LoadError::Format(*ln, "alias must be a plain element".into())),
                };
                b.alias(nm.trim(), v);
            }
            "relation" | "identity" | "central" => {
                let v = match parse_expression(rest, &b.partial())? {
                    Parsed::Nc(x) => x,
                    _ => return Err(LoadError::Format(*ln, "relation must be a plain element".into())),
                };
                if kw == "identity" {
                    identities.push(v);
                } else if kw == "central" {
                    b.central(v);
                } else {
                    relations.push((*ln, v));
                }
            }
            "coproduct" => {
                let (g, expr) = rest
                    .split_once('=')
                    .ok_or_else(|| LoadError::Format(*ln, "expected `coproduct g = TEXPR`".into()))?;
                let g = gen_of(g)?;
                let t = match parse_expression(expr, &pp)? {
                    Parsed::Tensor(t) if t.arity == 2 => t,
                    Parsed::Nc(x) => {
                        // allow scalar-like entries such as `1 @ 1` typed plainly
                        let mut t = TensorElement::zero(2);
                        for (w, c) in &x.terms {
                            if w.is_empty() {
                                t.add_term(vec![Word::empty(), Word::empty()], c.clone());
                            } else {
                                return Err(LoadError::Format(
                                    *ln,
                                    "coproduct must be an arity-2 tensor".into(),
                                ));
                            }
                        }
                        t
                    }
                    _ => {
                        return Err(LoadError::Format(
                            *ln,
                            "coproduct must be an arity-2 tensor".into(),
                        ))
                    }
                };
                coproduct.insert(g, t);
            }
            "counit" => {
                let (g, expr) = rest
                    .split_once('=')
                    .ok_or_else(|| LoadError::Format(*ln, "expected `counit g = QEXPR`".into()))?;
                let g = gen_of(g)?;
                counit.insert(g, parse_scalar(expr, &pp)?);
            }
            "antipode" => {
                let (g, expr) = rest
                    .split_once('=')
                    .ok_or_else(|| LoadError::Format(*ln, "expected `antipode g = EXPR`".into()))?;
                let g = gen_of(g)?;
                let v = match parse_expression(expr, &pp)? {
                    Parsed::Nc(x) => x,
                    _ => return Err(LoadError::Format(*ln, "antipode must be a plain element".into())),
                };
                antipode.insert(g, v);
            }
            "lattice" => {
                let (kind, fam) = rest
                    .split_once(':')
                    .ok_or_else(|| LoadError::Format(*ln, "expected `lattice free|span: PATTERN`".into()))?;
                lattice_kind = match kind.trim() {
                    "free" => LatticeKind::Free,
                    "span" => LatticeKind::Spanning,
                    other => {
                        return Err(LoadError::Format(*ln, format!("unknown lattice kind `{}`", other)))
                    }
                };
                family = fam.trim().to_string();
            }
            "grading" => {
                let (g, w) = rest
                    .split_once('=')
                    .ok_or_else(|| LoadError::Format(*ln, "expected `grading g = INT`".into()))?;
                let g = gen_of(g)?;
                let w: i64 = w
                    .trim()
                    .parse()
                    .map_err(|_| LoadError::Format(*ln, "expected an integer".into()))?;
                grading.insert(g, w);
            }
            "cartan" => {
                // cartan g = d1 d2 | exp: QEXPR, exp: QEXPR, ...
                let (g, spec) = rest
                    .split_once('=')
                    .ok_or_else(|| LoadError::Format(*ln, "expected `cartan g = d1 d2 | ...`".into()))?;
                let g = gen_of(g)?;
                let (dens, terms) = spec
                    .split_once('|')
                    .ok_or_else(|| LoadError::Format(*ln, "expected `d1 d2 | terms`".into()))?;
                let dens: Vec<u32> = dens
                    .split_whitespace()
                    .map(|s| s.parse())
                    .collect::<Result<_, _>>()
                    .map_err(|_| LoadError::Format(*ln, "bad denominator powers".into()))?;
                if dens.len() != 2 {
                    return Err(LoadError::Format(*ln, "expected two denominator powers".into()));
                }
                let mut num = BTreeMap::new();
                for term in terms.split(',') {
                    let (e, coeff) = term
                        .split_once(':')
                        .ok_or_else(|| LoadError::Format(*ln, "expected `exp: coeff`".into()))?;
                    let e: i64 = e
                        .trim()
                        .parse()
                        .map_err(|_| LoadError::Format(*ln, "bad T exponent".into()))?;
                    let c = parse_scalar(coeff, &pp)?;
                    if !c.is_zero() {
                        num.insert(e, c);
                    }
                }
                b.cartan_var(g, TExpr { num, den1: dens[0], den2: dens[1] });
            }
            other => {
                return Err(LoadError::Format(*ln, format!("unknown directive `{}`", other)));
            }
        }
    }

    // Orient relations along the term order; the largest word must carry a
    // unit coefficient. Non-orientable relations must use `identity`.
    for (ln, rel) in relations {
        let pp = b.partial();
        let Some(lead) = rel.terms.keys().max_by(|x, y| pp.word_cmp(x, y)).cloned() else {
            continue;
        };
        let c = rel.terms.get(&lead).unwrap().clone();
        if !c.is_unit() {
            return Err(LoadError::Format(
                ln,
                format!(
                    "relation cannot be oriented: leading word {} has non-unit coefficient {}",
                    pp.render_word(&lead),
                    c
                ),
            ));
        }
        let (k, r) = c.terms().next().map(|(k, r)| (k, r.clone())).unwrap();
        let inv = LaurentPoly::monomial(Rat::from(rat(1)) / r, -k);
        let mut rest = rel.clone();
        rest.terms.remove(&lead);
        let rhs = rest.neg().scale(&inv);
        let sorted = lead.0.windows(2).all(|w| w[0] <= w[1]);
        let kind = if lead.len() >= 2 && sorted && b.gens[lead.0[0]].grouplike_inverse != Some(*lead.0.get(1).unwrap_or(&0)) {
            RuleKind::Completion
        } else {
            RuleKind::Straightening
        };
        if kind == RuleKind::Completion {
            b.completion_rule(&lead.0.clone(), rhs);
        } else {
            b.rule(&lead.0.clone(), rhs);
        }
    }
    for id in identities {
        b.identity(id);
    }

    let ngens = b.gens.len();
    for g in 0..ngens {
        if !coproduct.contains_key(&g) || !counit.contains_key(&g) || !antipode.contains_key(&g) {
            return Err(LoadError::Format(
                0,
                format!(
                    "incomplete Hopf data: missing coproduct/counit/antipode for `{}`",
                    b.gens[g].name
                ),
            ));
        }
    }
    let hopf = hopf::HopfData {
        coproduct: (0..ngens).map(|g| coproduct[&g].clone()).collect(),
        counit: (0..ngens).map(|g| counit[&g].clone()).collect(),
        antipode: (0..ngens).map(|g| antipode[&g].clone()).collect(),
    };
    let lattice = LatticeSpec { kind: lattice_kind, family, grading };
    let p = b.finish(hopf, lattice);

    let report = hopf::check_hopf(&p, 100_000);
    if !report.all_pass() {
        let failing: Vec<String> = report
            .items
            .iter()
            .filter(|i| !i.pass)
            .map(|i| i.name.clone())
            .collect();
        return Err(LoadError::HopfCheckFailed(failing.join("; ")));
    }
    Ok(p)
}

/// Serialize a presentation to the file format.
pub fn serialize_presentation(p: &Presentation) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "algebra {}", p.name);
    let cls = match p.classification {
        Classification::Quea => "quea",
        Classification::Qfa => "qfa",
        Classification::Classical => "classical",
    };
    let _ = writeln!(out, "class {}", cls);
    let names: Vec<&str> = p.gens.iter().map(|g| g.name.as_str()).collect();
    let _ = writeln!(out, "generators {}", names.join(", "));
    for g in &p.gens {
        if g.weight != 1 {
            let _ = writeln!(out, "weight {} = {}", g.name, g.weight);
        }
    }
    for (i, g) in p.gens.iter().enumerate() {
        if let Some(gi) = g.grouplike_inverse {
            if i < gi {
                let _ = writeln!(out, "inverse {}, {}", g.name, p.gens[gi].name);
            }
        }
    }
    for (name, v) in &p.aliases {
        let _ = writeln!(out, "alias {} = {}", name, p.render(v));
    }
    for r in &p.rules {
        // skip the grouplike cancellations; `inverse` implies them
        if r.lhs.len() == 2 && p.gens[r.lhs.0[0]].grouplike_inverse == Some(r.lhs.0[1]) {
            continue;
        }
        let lhs = NcElement::from_word(r.lhs.clone());
        let rel = lhs.sub(&r.rhs);
        let _ = writeln!(out, "relation {}", p.render(&rel));
    }
    for id in &p.identities {
        let _ = writeln!(out, "identity {}", p.render(id));
    }
    if let Some(c) = &p.central_quotient {
        let _ = writeln!(out, "central {}", p.render(c));
    }
    for (g, gen) in p.gens.iter().enumerate() {
        let _ = writeln!(out, "coproduct {} = {}", gen.name, tensor::render(p, &p.hopf.coproduct[g]));
        let _ = writeln!(out, "counit {} = {}", gen.name, scalar_expr(&p.hopf.counit[g]));
        let _ = writeln!(out, "antipode {} = {}", gen.name, p.render(&p.hopf.antipode[g]));
    }
    let kind = match p.lattice.kind {
        LatticeKind::Free => "free",
        LatticeKind::Spanning => "span",
    };
    let _ = writeln!(out, "lattice {}: {}", kind, p.lattice.family);
    for (g, w) in &p.lattice.grading {
        let _ = writeln!(out, "grading {} = {}", p.gens[*g].name, w);
    }
    if let Some(spec) = &p.cartan {
        for (g, v) in &spec.vars {
            let terms: Vec<String> = v
                .num
                .iter()
                .map(|(e, c)| format!("{}: {}", e, scalar_expr(c)))
                .collect();
            let _ = writeln!(
                out,
                "cartan {} = {} {} | {}",
                p.gens[*g].name,
                v.den1,
                v.den2,
                terms.join(", ")
            );
        }
    }
    out
}

/// Render a Laurent polynomial so the expression parser reads it back.
fn scalar_expr(c: &LaurentPoly) -> String {
    if c.is_zero() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for (k, r) in c.terms() {
        let num = r.numer().clone();
        let den = r.denom().clone();
        let mut s = String::new();
        if num == (-1).into() && k != 0 {
            s.push('-');
        } else if num != 1.into() || k == 0 {
            s.push_str(&num.to_string());
            if den != 1.into() {
                s.push('/');
                s.push_str(&den.to_string());
            }
            if k != 0 {
                s.push('*');
            }
        } else if den != 1.into() {
            s.push_str(&format!("1/{}*", den));
        }
        if k == 1 {
            s.push('q');
        } else if k != 0 {
            s.push_str(&format!("q^{}", k));
        }
        if k == 0 && den != 1.into() {
            // INT/INT already emitted
        }
        parts.push(s);
    }
    parts.join(" + ").replace("+ -", "- ")
}

/// Structural equality of what the file format carries.
pub fn semantically_equal(a: &Presentation, b: &Presentation) -> bool {
    let gens_eq = a.gens.len() == b.gens.len()
        && a.gens.iter().zip(&b.gens).all(|(x, y)| {
            x.name == y.name && x.weight == y.weight && x.grouplike_inverse == y.grouplike_inverse
        });
    let rules_a: BTreeMap<&Word, &NcElement> = a.rules.iter().map(|r| (&r.lhs, &r.rhs)).collect();
    let rules_b: BTreeMap<&Word, &NcElement> = b.rules.iter().map(|r| (&r.lhs, &r.rhs)).collect();
    gens_eq
        && rules_a == rules_b
        && a.hopf == b.hopf
        && a.identities == b.identities
        && a.central_quotient == b.central_quotient
        && a.lattice.kind == b.lattice.kind
        && a.lattice.grading == b.lattice.grading
        && a.classification == b.classification
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

pub struct Outcome {
    pub code: i32,
    pub output: String,
}

enum Algebra {
    Entry(std::sync::Arc<catalog::CatalogEntry>),
    File(Box<Presentation>),
}

impl Algebra {
    fn presentation(&self) -> &Presentation {
        match self {
            Algebra::Entry(e) => &e.presentation,
            Algebra::File(p) => p,
        }
    }
    fn entry(&self) -> Option<&catalog::CatalogEntry> {
        match self {
            Algebra::Entry(e) => Some(e),
            Algebra::File(_) => None,
        }
    }
}

fn load_algebra(spec: &str) -> Result<Algebra, Outcome> {
    if std::path::Path::new(spec).exists() {
        let src = std::fs::read_to_string(spec).map_err(|e| Outcome {
            code: 2,
            output: format!("cannot read {}: {}", spec, e),
        })?;
        let p = parse_presentation_file(&src).map_err(|e| Outcome {
            code: 2,
            output: format!("cannot load {}: {}", spec, e),
        })?;
        return Ok(Algebra::File(Box::new(p)));
    }
    match catalog::get(spec) {
        Ok(e) => Ok(Algebra::Entry(e)),
        Err(e) => Err(Outcome { code: 2, output: e.to_string() }),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Structured,
}

fn structured(command: &str, algebra: &str, inputs: Value, result: Value, diagnostics: Value) -> String {
    let doc = json!({
        "command": command,
        "algebra": algebra,
        "inputs": inputs,
        "result": result,
        "diagnostics": diagnostics,
    });
    serde_json::to_string_pretty(&doc).unwrap()
}

fn math_err(e: impl std::fmt::Display) -> Outcome {
    Outcome { code: 3, output: format!("error: {}", e) }
}

/// Entry point used by the binary and the tests: parses argv (without the
/// program name) and runs one command.
pub fn dispatch(argv: &[String]) -> Outcome {
    match dispatch_inner(argv) {
        Ok(o) => o,
        Err(o) => o,
    }
}

fn get_flag(args: &[String], name: &str) -> Option<String> {
    args.iter()
        .position(|a| a == name)
        .and_then(|i| args.get(i + 1).cloned())
}

fn has_flag(args: &[String], name: &str) -> bool {
    args.iter().any(|a| a == name)
}

fn format_of(args: &[String]) -> Result<Format, Outcome> {
    match get_flag(args, "--format").as_deref() {
        None | Some("text") => Ok(Format::Text),
        Some("structured") => Ok(Format::Structured),
        Some(other) => Err(Outcome {
            code: 2,
            output: format!("unknown format `{}`", other),
        }),
    }
}

const USAGE: &str = "usage: qdual <command> [options]
commands:
  catalog list
  normalize    --algebra A --expr E [--format text|structured]
  coproduct    --algebra A --expr E [--n N] [--format ...]
  delta        --algebra A --expr E --n N [--subsets] [--format ...]
  member       --algebra A --expr E --max-n N [--format ...]
  tilde        --algebra A
  tilde-f      --algebra A
  double-tilde --algebra A --max-n N
  limit        --algebra A [--poisson-table|--cobracket-table]
  checkmap     --algebra A
  verify       --algebra A --suite hopf|pbw|drinfeld|limits|all
environment: QDUAL_MAX_REWRITE_STEPS, QDUAL_WINDOW_SLACK";

fn dispatch_inner(argv: &[String]) -> Result<Outcome, Outcome> {
    let Some(cmd) = argv.first() else {
        return Ok(Outcome { code: 2, output: USAGE.into() });
    };
    let rest = &argv[1..];
    match cmd.as_str() {
        "catalog" => {
            if rest.first().map(|s| s.as_str()) == Some("list") {
                let fmt = format_of(rest)?;
                let names = catalog::list();
                Ok(Outcome {
                    code: 0,
                    output: match fmt {
                        Format::Text => names.join("\n"),
                        Format::Structured => structured(
                            "catalog list",
                            "",
                            json!({}),
                            json!(names),
                            json!([]),
                        ),
                    },
                })
            } else {
                Ok(Outcome { code: 2, output: USAGE.into() })
            }
        }
        "normalize" => cmd_normalize(rest),
        "coproduct" => cmd_coproduct(rest),
        "delta" => cmd_delta(rest),
        "member" => cmd_member(rest),
        "tilde" => cmd_tilde(rest, false),
        "tilde-f" => cmd_tilde(rest, true),
        "double-tilde" => cmd_double_tilde(rest),
        "limit" => cmd_limit(rest),
        "checkmap" => cmd_checkmap(rest),
        "verify" => cmd_verify(rest),
        _ => Ok(Outcome {
            code: 2,
            output: format!("unknown command `{}`\n{}", cmd, USAGE),
        }),
    }
}

fn required(args: &[String], name: &str) -> Result<String, Outcome> {
    get_flag(args, name).ok_or(Outcome {
        code: 2,
        output: format!("missing required option {}", name),
    })
}

fn parse_expr_arg(p: &Presentation, src: &str) -> Result<Parsed, Outcome> {
    parse_expression(src, p).map_err(|e| Outcome { code: 2, output: e.to_string() })
}

fn cmd_normalize(args: &[String]) -> Result<Outcome, Outcome> {
    let alg = required(args, "--algebra")?;
    let expr = required(args, "--expr")?;
    let fmt = format_of(args)?;
    let a = load_algebra(&alg)?;
    let p = a.presentation();
    let v = parse_expr_arg(p, &expr)?;
    let rendered = match &v {
        Parsed::Nc(x) => p.render(x),
        Parsed::Tensor(t) => tensor::render(p, t),
    };
    Ok(Outcome {
        code: 0,
        output: match fmt {
            Format::Text => rendered,
            Format::Structured => structured(
                "normalize",
                &alg,
                json!({ "expr": expr }),
                json!(rendered),
                json!([]),
            ),
        },
    })
}

fn cmd_coproduct(args: &[String]) -> Result<Outcome, Outcome> {
    let alg = required(args, "--algebra")?;
    let expr = required(args, "--expr")?;
    let n: usize = get_flag(args, "--n").map(|s| s.parse()).transpose().map_err(|_| Outcome {
        code: 2,
        output: "--n must be a natural number".into(),
    })?.unwrap_or(2);
    let fmt = format_of(args)?;
    let a = load_algebra(&alg)?;
    let p = a.presentation();
    let v = parse_expr_arg(p, &expr)?;
    let Parsed::Nc(x) = v else {
        return Err(Outcome { code: 2, output: "coproduct expects a plain element".into() });
    };
    let t = hopf::iterated_coproduct(p, &x, n).map_err(math_err)?;
    let rendered = tensor::render(p, &t);
    Ok(Outcome {
        code: 0,
        output: match fmt {
            Format::Text => rendered,
            Format::Structured => structured(
                "coproduct",
                &alg,
                json!({ "expr": expr, "n": n }),
                json!(rendered),
                json!([]),
            ),
        },
    })
}

fn cmd_delta(args: &[String]) -> Result<Outcome, Outcome> {
    let alg = required(args, "--algebra")?;
    let expr = required(args, "--expr")?;
    let n: usize = required(args, "--n")?.parse().map_err(|_| Outcome {
        code: 2,
        output: "--n must be a natural number".into(),
    })?;
    let fmt = format_of(args)?;
    let a = load_algebra(&alg)?;
    let p = a.presentation();
    let Parsed::Nc(x) = parse_expr_arg(p, &expr)? else {
        return Err(Outcome { code: 2, output: "delta expects a plain element".into() });
    };
    let t = if has_flag(args, "--subsets") {
        hopf::delta_via_subsets(p, &x, n).map_err(math_err)?
    } else {
        hopf::delta_n(p, &x, n).map_err(math_err)?
    };
    let rendered = tensor::render(p, &t);
    Ok(Outcome {
        code: 0,
        output: match fmt {
            Format::Text => rendered,
            Format::Structured => structured(
                "delta",
                &alg,
                json!({ "expr": expr, "n": n, "subsets": has_flag(args, "--subsets") }),
                json!(rendered),
                json!([]),
            ),
        },
    })
}

fn cmd_member(args: &[String]) -> Result<Outcome, Outcome> {
    let alg = required(args, "--algebra")?;
    let expr = required(args, "--expr")?;
    let n: usize = required(args, "--max-n")?.parse().map_err(|_| Outcome {
        code: 2,
        output: "--max-n must be a natural number".into(),
    })?;
    let fmt = format_of(args)?;
    let a = load_algebra(&alg)?;
    let p = a.presentation();
    let Parsed::Nc(x) = parse_expr_arg(p, &expr)? else {
        return Err(Outcome { code: 2, output: "member expects a plain element".into() });
    };
    let v = drinfeld::tilde_member(p, &x, n).map_err(math_err)?;
    let profile: Vec<String> = v
        .profile
        .iter()
        .map(|(n, val)| match val {
            None => format!("n={}: delta vanishes", n),
            Some(v) => format!("n={}: valuation {}", n, v),
        })
        .collect();
    let (code, verdict) = match v.verdict {
        Verdict::MemberUpToBound => (0, "MEMBER-UP-TO-BOUND (bounded evidence, not a proof)"),
        Verdict::NotMember { witness } => {
            return Ok(Outcome {
                code: 1,
                output: match fmt {
                    Format::Text => format!(
                        "NOT-MEMBER (witness n = {})\n{}",
                        witness,
                        profile.join("\n")
                    ),
                    Format::Structured => structured(
                        "member",
                        &alg,
                        json!({ "expr": expr, "max_n": n }),
                        json!({ "verdict": "NOT-MEMBER", "witness": witness, "profile": profile }),
                        json!([]),
                    ),
                },
            })
        }
        Verdict::Inconclusive => (4, "INCONCLUSIVE"),
    };
    Ok(Outcome {
        code,
        output: match fmt {
            Format::Text => format!("{}\n{}", verdict, profile.join("\n")),
            Format::Structured => structured(
                "member",
                &alg,
                json!({ "expr": expr, "max_n": n }),
                json!({ "verdict": verdict, "profile": profile }),
                json!([]),
            ),
        },
    })
}

fn cmd_tilde(args: &[String], f_side: bool) -> Result<Outcome, Outcome> {
    let alg = required(args, "--algebra")?;
    let a = load_algebra(&alg)?;
    let entry = a.entry().ok_or(Outcome {
        code: 3,
        output: "tilde construction requires a catalog entry".into(),
    })?;
    let want = if f_side { Classification::Qfa } else { Classification::Quea };
    if entry.presentation.classification != want {
        return Err(Outcome {
            code: 3,
            output: format!(
                "{} expects a {} entry",
                if f_side { "tilde-f" } else { "tilde" },
                if f_side { "QFA-form" } else { "QUEA-form" }
            ),
        });
    }
    let tilde = entry.tilde.as_ref().ok_or(Outcome {
        code: 3,
        output: "entry carries no tilde data".into(),
    })?;
    drinfeld::verify_tilde(&entry.presentation, tilde)
        .map_err(|e| Outcome { code: 1, output: e.to_string() })?;
    Ok(Outcome {
        code: 0,
        output: serialize_presentation(&tilde.presentation),
    })
}

fn cmd_double_tilde(args: &[String]) -> Result<Outcome, Outcome> {
    let alg = required(args, "--algebra")?;
    let n: usize = get_flag(args, "--max-n")
        .map(|s| s.parse())
        .transpose()
        .map_err(|_| Outcome { code: 2, output: "--max-n must be a natural number".into() })?
        .unwrap_or(3);
    let a = load_algebra(&alg)?;
    let entry = a.entry().ok_or(Outcome {
        code: 3,
        output: "double-tilde requires a catalog entry".into(),
    })?;
    let rep = drinfeld::double_tilde_check(entry, n).map_err(math_err)?;
    let mut out = String::new();
    for item in &rep.items {
        let _ = writeln!(out, "{} {}", if item.pass { "PASS" } else { "FAIL" }, item.name);
    }
    Ok(Outcome {
        code: if rep.all_pass() { 0 } else { 1 },
        output: out.trim_end().to_string(),
    })
}

fn cmd_limit(args: &[String]) -> Result<Outcome, Outcome> {
    let alg = required(args, "--algebra")?;
    let a = load_algebra(&alg)?;
    let p = a.presentation();
    let sp = classical::specialize(p).map_err(math_err)?;
    let mut out = String::new();
    let marker = match sp.marker {
        LimitMarker::Poisson => "POISSON (commutative limit)",
        LimitMarker::CoPoisson => "CO-POISSON (cocommutative limit)",
    };
    if has_flag(args, "--poisson-table") {
        if sp.marker != LimitMarker::Poisson {
            return Err(Outcome {
                code: 3,
                output: "entry has a co-Poisson limit; use --cobracket-table".into(),
            });
        }
        for ((i, j), v) in &sp.bracket {
            let _ = writeln!(
                out,
                "{{{}, {}}} = {}",
                sp.pres.gens[*i].name,
                sp.pres.gens[*j].name,
                sp.pres.render(v)
            );
        }
    } else if has_flag(args, "--cobracket-table") {
        if sp.marker != LimitMarker::CoPoisson {
            return Err(Outcome {
                code: 3,
                output: "entry has a Poisson limit; use --poisson-table".into(),
            });
        }
        for (g, v) in &sp.cobracket {
            let _ = writeln!(
                out,
                "delta({}) = {}",
                sp.pres.gens[*g].name,
                tensor::render(&sp.pres, v)
            );
        }
    } else {
        let _ = writeln!(out, "limit marker: {}", marker);
        for r in &sp.pres.rules {
            let rel = NcElement::from_word(r.lhs.clone()).sub(&r.rhs);
            let _ = writeln!(out, "relation at q=1: {}", sp.pres.render(&rel));
        }
    }
    Ok(Outcome { code: 0, output: out.trim_end().to_string() })
}

fn cmd_checkmap(args: &[String]) -> Result<Outcome, Outcome> {
    let alg = required(args, "--algebra")?;
    let a = load_algebra(&alg)?;
    let entry = a.entry().ok_or(Outcome {
        code: 3,
        output: "checkmap requires a catalog entry".into(),
    })?;
    let m = catalog::generator_map(entry)
        .map_err(|e| Outcome { code: 2, output: e.to_string() })?
        .ok_or(Outcome { code: 3, output: "entry declares no specialization map".into() })?;
    let rep = classical::check_generator_map(&m).map_err(math_err)?;
    let mut out = String::new();
    for item in &rep.items {
        let _ = writeln!(out, "{} {}", if item.pass { "PASS" } else { "FAIL" }, item.name);
    }
    Ok(Outcome {
        code: if rep.all_pass() { 0 } else { 1 },
        output: out.trim_end().to_string(),
    })
}

fn cmd_verify(args: &[String]) -> Result<Outcome, Outcome> {
    let alg = required(args, "--algebra")?;
    let suite = required(args, "--suite")?;
    let a = load_algebra(&alg)?;
    let mut lines: Vec<(bool, String)> = Vec::new();

    let run_hopf = |lines: &mut Vec<(bool, String)>| {
        let rep = hopf::check_hopf(a.presentation(), 100_000);
        for item in rep.items {
            lines.push((
                item.pass,
                format!(
                    "hopf: {}{}",
                    item.name,
                    if item.pass || item.detail.is_empty() {
                        String::new()
                    } else {
                        format!(" [{}]", item.detail)
                    }
                ),
            ));
        }
    };
    let run_pbw = |lines: &mut Vec<(bool, String)>| {
        let p = a.presentation();
        let rep = crate::ncalg::overlap_check(p, 100_000);
        lines.push((
            rep.all_resolve(),
            format!(
                "pbw: {} overlaps resolve ({} checked){}",
                p.name,
                rep.checked,
                if rep.failures.is_empty() {
                    String::new()
                } else {
                    format!(" [{}]", rep.failures.join("; "))
                }
            ),
        ));
        for r in &p.rules {
            let rel = NcElement::from_word(r.lhs.clone()).sub(&r.rhs);
            let ok = p.normal_form(&rel).map(|x| x.is_zero()).unwrap_or(false);
            lines.push((ok, format!("pbw: rule {} reduces to zero", p.render_word(&r.lhs))));
        }
    };
    let run_drinfeld = |lines: &mut Vec<(bool, String)>| -> Result<(), Outcome> {
        let Some(entry) = a.entry() else {
            lines.push((true, "drinfeld: skipped (file presentation)".into()));
            return Ok(());
        };
        if let Some(tilde) = &entry.tilde {
            match drinfeld::verify_tilde(&entry.presentation, tilde) {
                Ok(()) => lines.push((true, format!("drinfeld: tilde table of {} verified", entry.name))),
                Err(e) => lines.push((false, format!("drinfeld: tilde table failed: {}", e))),
            }
            // declared tilde generators are members
            for (g, img) in tilde.recipe.iter().enumerate() {
                if img.den > 0 {
                    continue;
                }
                let v = drinfeld::tilde_member(&entry.presentation, &img.num, 4).map_err(math_err)?;
                lines.push((
                    matches!(v.verdict, Verdict::MemberUpToBound),
                    format!(
                        "drinfeld: tilde generator {} is a member (profile {:?})",
                        tilde.presentation.gens[g].name, v.profile
                    ),
                ));
            }
            for &g in &entry.excluded_unscaled {
                let v = drinfeld::tilde_member(&entry.presentation, &NcElement::gen(g), 3)
                    .map_err(math_err)?;
                lines.push((
                    matches!(v.verdict, Verdict::NotMember { .. }),
                    format!(
                        "drinfeld: unscaled {} is not a member ({:?})",
                        entry.presentation.gens[g].name, v.verdict
                    ),
                ));
            }
            match drinfeld::double_tilde_check(entry, 3) {
                Ok(rep) => {
                    for item in rep.items {
                        lines.push((item.pass, format!("drinfeld: {}", item.name)));
                    }
                }
                Err(e) => lines.push((false, format!("drinfeld: double tilde failed: {}", e))),
            }
        } else {
            lines.push((true, "drinfeld: entry has no tilde data".into()));
        }
        Ok(())
    };
    let run_limits = |lines: &mut Vec<(bool, String)>| -> Result<(), Outcome> {
        let p = a.presentation();
        match classical::specialize(p) {
            Ok(sp) => {
                lines.push((true, format!("limits: {} specializes ({:?})", p.name, sp.marker)));
            }
            Err(e) => lines.push((false, format!("limits: specialize failed: {}", e))),
        }
        if let Some(entry) = a.entry() {
            if let Some(tilde) = &entry.tilde {
                match classical::specialize(&tilde.presentation) {
                    Ok(_) => lines.push((true, format!("limits: {} specializes", tilde.presentation.name))),
                    Err(e) => lines.push((false, format!("limits: tilde specialize failed: {}", e))),
                }
            }
            match catalog::generator_map(entry) {
                Ok(Some(m)) => match classical::check_generator_map(&m) {
                    Ok(rep) => {
                        for item in rep.items {
                            lines.push((item.pass, format!("limits: {}", item.name)));
                        }
                    }
                    Err(e) => lines.push((false, format!("limits: map check failed: {}", e))),
                },
                Ok(None) => {}
                Err(e) => lines.push((false, format!("limits: {}", e))),
            }
        }
        Ok(())
    };

    match suite.as_str() {
        "hopf" => run_hopf(&mut lines),
        "pbw" => run_pbw(&mut lines),
        "drinfeld" => run_drinfeld(&mut lines)?,
        "limits" => run_limits(&mut lines)?,
        "all" => {
            run_hopf(&mut lines);
            run_pbw(&mut lines);
            run_drinfeld(&mut lines)?;
            run_limits(&mut lines)?;
        }
        other => {
            return Err(Outcome {
                code: 2,
                output: format!("unknown suite `{}`", other),
            })
        }
    }
    let all_pass = lines.iter().all(|(p, _)| *p);
    let mut out = String::new();
    for (pass, name) in &lines {
        let _ = writeln!(out, "{} {}", if *pass { "PASS" } else { "FAIL" }, name);
    }
    Ok(Outcome {
        code: if all_pass { 0 } else { 1 },
        output: out.trim_end().to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres() -> Presentation {
        catalog::get("Uq_sl2_hat").unwrap().presentation.clone()
    }

    #[test]
    fn expression_examples() {
        let p = pres();
        // "E*F - F*E" normalizes to G
        let v = parse_expression("E*F - F*E", &p).unwrap();
        assert_eq!(v, Parsed::Nc(p.resolve("G").unwrap()));
        // "1" is the unit element
        let v = parse_expression("1", &p).unwrap();
        assert_eq!(v, Parsed::Nc(NcElement::one()));
        // "(q-1)*H @ E" is a tensor
        let v = parse_expression("(q-1)*H @ E", &p).unwrap();
        let h = p.gen_id("H").unwrap();
        let e = p.gen_id("E").unwrap();
        let expected = TensorElement::term(
            vec![Word::single(h), Word::single(e)],
            LaurentPoly::q_minus_1(),
        );
        assert_eq!(v, Parsed::Tensor(expected));
    }

    #[test]
    fn rational_and_power_literals() {
        let p = pres();
        let v = parse_expression("1/2 * q^-2 + q", &p).unwrap();
        let expected = LaurentPoly::canonical([
            (-2, crate::qcoeff::rat_frac(1, 2)),
            (1, rat(1)),
        ]);
        assert_eq!(v, Parsed::Nc(NcElement::scalar(expected)));
        assert!(matches!(
            parse_expression("E*", &p),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_expression("Zed", &p),
            Err(ParseError::UnknownGenerator(_))
        ));
        assert!(matches!(
            parse_expression("H @ E + H", &p),
            Err(ParseError::ArityMismatch(_))
        ));
    }

    #[test]
    fn comments_and_whitespace() {
        let p = pres();
        let v = parse_expression("E * F # tail comment\n - F*E", &p).unwrap();
        assert_eq!(v, Parsed::Nc(p.resolve("G").unwrap()));
    }

    #[test]
    fn roundtrip_fq_e2() {
        let entry = catalog::get("Fq_E2_hat").unwrap();
        let text = serialize_presentation(&entry.presentation);
        let reloaded = parse_presentation_file(&text).unwrap();
        assert!(semantically_equal(&entry.presentation, &reloaded));
    }

    #[test]
    fn incomplete_hopf_data_fails() {
        let entry = catalog::get("Fq_E2_hat").unwrap();
        let text = serialize_presentation(&entry.presentation);
        let without: String = text
            .lines()
            .filter(|l| !l.starts_with("antipode b"))
            .collect::<Vec<_>>()
            .join("\n");
        let err = parse_presentation_file(&without).unwrap_err();
        assert!(matches!(err, LoadError::Format(_, _)), "{:?}", err);
    }

    #[test]
    fn file_with_e2_relation_loads() {
        let entry = catalog::get("Fq_E2_hat").unwrap();
        let text = serialize_presentation(&entry.presentation);
        // the serialized file contains the a*b - q*b*a relation
        assert!(text.contains("relation"));
        let reloaded = parse_presentation_file(&text).unwrap();
        let a = reloaded.resolve("a").unwrap();
        let bb = reloaded.resolve("b").unwrap();
        let ab = reloaded.multiply(&a, &bb).unwrap();
        let ba = reloaded.multiply(&bb, &a).unwrap().scale(&LaurentPoly::q());
        assert_eq!(ab, ba);
    }

    #[test]
    fn dispatch_normalize_fq_sl2() {
        let out = dispatch(&[
            "normalize".into(),
            "--algebra".into(),
            "Fq_SL2_hat".into(),
            "--expr".into(),
            "a*d - d*a".into(),
        ]);
        assert_eq!(out.code, 0);
        assert_eq!(out.output, "(-q^-1 + q)*b*c");
    }

    #[test]
    fn dispatch_member_witness() {
        let out = dispatch(&[
            "member".into(),
            "--algebra".into(),
            "Uq_sl2_hat".into(),
            "--expr".into(),
            "E".into(),
            "--max-n".into(),
            "4".into(),
        ]);
        assert_eq!(out.code, 1);
        assert!(out.output.contains("NOT-MEMBER"));
        assert!(out.output.contains("witness n = 1"));
    }

    #[test]
    fn dispatch_exit_codes() {
        let out = dispatch(&["normalize".into(), "--algebra".into(), "nope".into(), "--expr".into(), "1".into()]);
        assert_eq!(out.code, 2);
        let out = dispatch(&[
            "normalize".into(),
            "--algebra".into(),
            "Uq_sl2_hat".into(),
            "--expr".into(),
            "E*".into(),
        ]);
        assert_eq!(out.code, 2);
    }

    #[test]
    fn structured_output_is_stable() {
        let args = vec![
            "normalize".to_string(),
            "--algebra".into(),
            "Uq_sl2_hat".into(),
            "--expr".into(),
            "E*F".into(),
            "--format".into(),
            "structured".into(),
        ];
        let a = dispatch(&args);
        let b = dispatch(&args);
        assert_eq!(a.output, b.output);
        assert!(a.output.contains("\"command\""));
    }
}
