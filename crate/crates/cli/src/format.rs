//! The line-oriented presentation file format.
//!
//! ```text
//! name bilie
//! gen l (1,2) dim=1 act_in=[[-1]]
//! gen d (2,1) dim=1 act_out=[[-1]]
//! rel (1,3) jacobi = comp(l,1,1,l) + act(in:(1 2 3), comp(l,1,1,l)) + act(in:(1 3 2), comp(l,1,1,l))
//! ```
//!
//! `act(out:P, in:S, T)` is `P . T . S`: `P` permutes outputs and `S` acts on
//! the right of inputs. A generator of dimension `K > 1` names its basis
//! vectors `NAME.1 .. NAME.K`.

use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;

use diopkit_core::dioperad::{FreeElement, FreeSlice, NamedRelation, Presentation, SLOTS};
use diopkit_core::ratlin::{rank, rref_rows, SparseVec};
use diopkit_core::sbimod::{Generators, SBimoduleSpace, TwistKind};
use diopkit_core::{Mat, Perm, Rat};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {col}: {msg} (at `{token}`)")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub token: String,
    pub msg: String,
}

/// A named block of generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenDecl {
    pub name: String,
    pub space: SBimoduleSpace,
}

impl GenDecl {
    pub fn arity(&self) -> (usize, usize) {
        self.space.arity()
    }
}

/// A presentation together with the generator names used to write it.
#[derive(Clone, Debug)]
pub struct Document {
    pub presentation: Presentation,
    pub gens: Vec<GenDecl>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(String),
    Sym(char),
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    col: usize,
}

impl Token {
    fn text(&self) -> String {
        match &self.tok {
            Tok::Ident(s) | Tok::Num(s) => s.clone(),
            Tok::Sym(c) => c.to_string(),
            Tok::End => "end of line".into(),
        }
    }
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '.' | '!' | '\'' | '^')
}

fn lex(line: &str, lineno: usize) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = line.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let s: String = chars[i..].iter().take_while(|c| c.is_ascii_digit()).collect();
            i += s.len();
            out.push(Token { tok: Tok::Num(s), col });
        } else if c.is_alphabetic() || c == '_' {
            let s: String = chars[i..].iter().take_while(|&&c| is_ident_char(c)).collect();
            i += s.chars().count();
            out.push(Token { tok: Tok::Ident(s), col });
        } else if "()[],=+-*/:".contains(c) {
            out.push(Token { tok: Tok::Sym(c), col });
            i += 1;
        } else {
            return Err(ParseError { line: lineno, col, token: c.to_string(), msg: "unexpected character".into() });
        }
    }
    out.push(Token { tok: Tok::End, col: chars.len() + 1 });
    Ok(out)
}

#[derive(Clone, Debug)]
enum Term {
    Gen { name: String, col: usize },
    Comp { f: Box<Term>, i: (usize, usize), j: (usize, usize), g: Box<Term> },
    Act { out: Option<(Vec<Vec<usize>>, usize)>, inp: Option<(Vec<Vec<usize>>, usize)>, t: Box<Term> },
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    line: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    fn col(&self) -> usize {
        self.toks[self.pos].col
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        let t = &self.toks[self.pos];
        Err(ParseError { line: self.line, col: t.col, token: t.text(), msg: msg.into() })
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn sym(&mut self, c: char) -> Result<(), ParseError> {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            Ok(())
        } else {
            self.err(format!("expected `{c}`"))
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(s)
            }
            _ => self.err("expected a name"),
        }
    }

    fn keyword(&mut self, k: &str) -> Result<(), ParseError> {
        match self.peek() {
            Tok::Ident(s) if s == k => {
                self.bump();
                Ok(())
            }
            _ => self.err(format!("expected `{k}`")),
        }
    }

    fn int(&mut self) -> Result<(usize, usize), ParseError> {
        let col = self.col();
        match self.peek().clone() {
            Tok::Num(s) => match s.parse::<usize>() {
                Ok(v) => {
                    self.bump();
                    Ok((v, col))
                }
                Err(_) => self.err("integer out of range"),
            },
            _ => self.err("expected an integer"),
        }
    }

    fn end(&mut self) -> Result<(), ParseError> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            self.err("unexpected trailing input")
        }
    }

    fn rational(&mut self) -> Result<Rat, ParseError> {
        let neg = self.eat('-');
        let (p, _) = self.int()?;
        let mut x = Rat::from_int(p as i64);
        if self.eat('/') {
            let (q, _) = self.int()?;
            if q == 0 {
                return self.err("zero denominator");
            }
            x = &x / &Rat::from_int(q as i64);
        }
        Ok(if neg { -x } else { x })
    }

    fn arity(&mut self) -> Result<(usize, usize), ParseError> {
        self.sym('(')?;
        let (m, _) = self.int()?;
        self.sym(',')?;
        let (n, _) = self.int()?;
        self.sym(')')?;
        Ok((m, n))
    }

    fn matrix(&mut self) -> Result<Vec<Vec<Rat>>, ParseError> {
        self.sym('[')?;
        let mut rows = Vec::new();
        loop {
            self.sym('[')?;
            let mut row = Vec::new();
            if !self.eat(']') {
                loop {
                    row.push(self.rational()?);
                    if self.eat(']') {
                        break;
                    }
                    self.sym(',')?;
                }
            }
            rows.push(row);
            if self.eat(']') {
                break;
            }
            self.sym(',')?;
        }
        Ok(rows)
    }

    fn cycles(&mut self) -> Result<(Vec<Vec<usize>>, usize), ParseError> {
        let col = self.col();
        if matches!(self.peek(), Tok::Ident(s) if s == "id") {
            self.bump();
            return Ok((Vec::new(), col));
        }
        let mut out = Vec::new();
        self.sym('(')?;
        loop {
            let mut c = Vec::new();
            while let Tok::Num(_) = self.peek() {
                c.push(self.int()?.0);
            }
            self.sym(')')?;
            if !c.is_empty() {
                out.push(c);
            }
            if *self.peek() != Tok::Sym('(') {
                break;
            }
            self.bump();
        }
        Ok((out, col))
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let col = self.col();
        let name = self.ident()?;
        match name.as_str() {
            "comp" if *self.peek() == Tok::Sym('(') => {
                self.bump();
                let f = self.term()?;
                self.sym(',')?;
                let i = self.int()?;
                self.sym(',')?;
                let j = self.int()?;
                self.sym(',')?;
                let g = self.term()?;
                self.sym(')')?;
                Ok(Term::Comp { f: Box::new(f), i, j, g: Box::new(g) })
            }
            "act" if *self.peek() == Tok::Sym('(') => {
                self.bump();
                let (mut out, mut inp) = (None, None);
                loop {
                    let side = match (self.peek(), self.peek_at(1)) {
                        (Tok::Ident(s), Tok::Sym(':')) if s == "out" || s == "in" => s.clone(),
                        _ => break,
                    };
                    self.bump();
                    self.bump();
                    let c = self.cycles()?;
                    if side == "out" {
                        out = Some(c);
                    } else {
                        inp = Some(c);
                    }
                    self.sym(',')?;
                }
                let t = self.term()?;
                self.sym(')')?;
                Ok(Term::Act { out, inp, t: Box::new(t) })
            }
            _ => Ok(Term::Gen { name, col }),
        }
    }

    fn expr(&mut self) -> Result<Vec<(Rat, Term)>, ParseError> {
        let mut out = Vec::new();
        let mut sign = if self.eat('-') {
            -Rat::one()
        } else {
            self.eat('+');
            Rat::one()
        };
        loop {
            let c = if let Tok::Num(_) = self.peek() {
                let c = self.rational()?;
                self.sym('*')?;
                c
            } else {
                Rat::one()
            };
            out.push((&sign * &c, self.term()?));
            if self.eat('+') {
                sign = Rat::one();
            } else if self.eat('-') {
                sign = -Rat::one();
            } else {
                break;
            }
        }
        Ok(out)
    }
}

struct GenInfo {
    arity: (usize, usize),
    offset: usize,
    dim: usize,
}

struct Env {
    e: Generators,
    gens: BTreeMap<String, GenInfo>,
}

fn to_mat(rows: &[Vec<Rat>], dim: usize) -> Option<Mat> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return None;
    }
    Mat::from_dense(dim, rows).ok()
}

impl Env {
    fn new(decls: &[GenDecl]) -> Result<Env, diopkit_core::Error> {
        let mut gens = BTreeMap::new();
        let mut sides: BTreeMap<(usize, usize), Vec<SBimoduleSpace>> = BTreeMap::new();
        for d in decls {
            let side = sides.entry(d.arity()).or_default();
            let offset = side.iter().map(SBimoduleSpace::dim).sum();
            gens.insert(d.name.clone(), GenInfo { arity: d.arity(), offset, dim: d.space.dim() });
            side.push(d.space.clone());
        }
        let mut e = Generators::new();
        for shape in [(1, 2), (2, 1)] {
            e.insert(side_space(&sides, shape)?);
        }
        Ok(Env { e, gens })
    }

    fn basis(&self, name: &str) -> Option<((usize, usize), u32)> {
        if let Some(g) = self.gens.get(name) {
            return (g.dim == 1).then_some((g.arity, g.offset as u32));
        }
        let (base, k) = name.rsplit_once('.')?;
        let k: usize = k.parse().ok()?;
        let g = self.gens.get(base)?;
        (1..=g.dim).contains(&k).then_some((g.arity, (g.offset + k - 1) as u32))
    }

    fn eval(&self, t: &Term, line: usize) -> Result<FreeElement, ParseError> {
        let fail = |col: usize, token: String, msg: String| Err(ParseError { line, col, token, msg });
        match t {
            Term::Gen { name, col } => match self.basis(name) {
                Some(((m, n), k)) => Ok(FreeElement::generator(m, n, k)),
                None if self.gens.contains_key(name) => {
                    fail(*col, name.clone(), format!("generator `{name}` has several basis vectors, write `{name}.k`"))
                }
                None => fail(*col, name.clone(), "unknown generator".into()),
            },
            Term::Comp { f, i, j, g } => {
                let (x, y) = (self.eval(f, line)?, self.eval(g, line)?);
                let (n1, m2) = (x.arity().1, y.arity().0);
                if i.0 == 0 || i.0 > n1 {
                    return fail(
                        i.1,
                        i.0.to_string(),
                        format!("arity mismatch in comp: input {} of a term with {n1} inputs", i.0),
                    );
                }
                if j.0 == 0 || j.0 > m2 {
                    return fail(
                        j.1,
                        j.0.to_string(),
                        format!("arity mismatch in comp: output {} of a term with {m2} outputs", j.0),
                    );
                }
                x.compose(i.0, j.0, &y, &self.e).or_else(|e| fail(i.1, i.0.to_string(), e.to_string()))
            }
            Term::Act { out, inp, t } => {
                let x = self.eval(t, line)?;
                let (m, n) = x.arity();
                let perm = |c: &Option<(Vec<Vec<usize>>, usize)>, size: usize| -> Result<Perm, ParseError> {
                    match c {
                        None => Ok(Perm::identity(size)),
                        Some((cs, col)) => Perm::from_cycles(size, cs).map_err(|e| ParseError {
                            line,
                            col: *col,
                            token: format!("{cs:?}"),
                            msg: e.to_string(),
                        }),
                    }
                };
                let (pi, sigma) = (perm(out, m)?, perm(inp, n)?);
                x.act(&pi, &sigma.inverse(), &self.e).or_else(|e| fail(0, String::new(), e.to_string()))
            }
        }
    }
}

fn side_space(
    sides: &BTreeMap<(usize, usize), Vec<SBimoduleSpace>>,
    shape: (usize, usize),
) -> Result<SBimoduleSpace, diopkit_core::Error> {
    match sides.get(&shape) {
        Some(parts) if !parts.is_empty() => SBimoduleSpace::direct_sum(parts),
        _ => Ok(SBimoduleSpace::zero(shape.0, shape.1)),
    }
}

const RESERVED: [&str; 3] = ["comp", "act", "id"];

/// Parses a presentation file. `default_name` is used when the file has no
/// `name` line.
pub fn parse(text: &str, default_name: &str) -> Result<Document, ParseError> {
    let mut name = default_name.to_string();
    let mut gens: Vec<GenDecl> = Vec::new();
    let mut rels: Vec<(usize, (usize, usize), Option<String>, Vec<(Rat, Term)>)> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let toks = lex(raw, line)?;
        let mut p = Parser { toks, pos: 0, line };
        let kw = match p.peek().clone() {
            Tok::End => continue,
            Tok::Ident(s) => s,
            _ => return p.err("expected `name`, `gen` or `rel`"),
        };
        p.bump();
        match kw.as_str() {
            "name" => {
                name = p.ident()?;
                p.end()?;
            }
            "gen" => {
                let gname = p.ident()?;
                if RESERVED.contains(&gname.as_str()) || gname.contains('.') {
                    p.pos -= 1;
                    return p.err("reserved or malformed generator name");
                }
                if gens.iter().any(|g| g.name == gname) {
                    p.pos -= 1;
                    return p.err("duplicate generator");
                }
                let acol = p.col();
                let (m, n) = p.arity()?;
                if (m, n) != (1, 2) && (m, n) != (2, 1) {
                    return Err(ParseError {
                        line,
                        col: acol,
                        token: format!("({m},{n})"),
                        msg: "generators live in bi-arity (1,2) or (2,1)".into(),
                    });
                }
                p.keyword("dim")?;
                p.sym('=')?;
                let (dim, dcol) = p.int()?;
                if dim == 0 {
                    return Err(ParseError {
                        line,
                        col: dcol,
                        token: "0".into(),
                        msg: "dimension must be positive".into(),
                    });
                }
                let (mut out, mut inp) = (None, None);
                while let Tok::Ident(s) = p.peek().clone() {
                    let col = p.col();
                    p.bump();
                    p.sym('=')?;
                    let rows = p.matrix()?;
                    let Some(mat) = to_mat(&rows, dim) else {
                        return Err(ParseError {
                            line,
                            col,
                            token: s,
                            msg: format!("action matrix must be {dim}x{dim}"),
                        });
                    };
                    match s.as_str() {
                        "act_out" => out = Some((mat, col)),
                        "act_in" => inp = Some((mat, col)),
                        _ => {
                            return Err(ParseError {
                                line,
                                col,
                                token: s,
                                msg: "expected `act_out` or `act_in`".into(),
                            })
                        }
                    }
                }
                p.end()?;
                let mut left = Vec::new();
                let mut right = Vec::new();
                for (side, size, dst) in [(out, m, &mut left), (inp, n, &mut right)] {
                    match side {
                        Some((mat, _)) if size == 2 => dst.push(mat),
                        Some((mat, col)) => {
                            if mat != Mat::identity(dim) {
                                return Err(ParseError {
                                    line,
                                    col,
                                    token: "S_1".into(),
                                    msg: "S_1 acts trivially".into(),
                                });
                            }
                        }
                        None if size == 2 => dst.push(Mat::identity(dim)),
                        None => {}
                    }
                }
                let space = SBimoduleSpace::new(m, n, dim, left, right, 0).map_err(|e| ParseError {
                    line,
                    col: acol,
                    token: gname.clone(),
                    msg: format!("non-involutive action matrix: {e}"),
                })?;
                gens.push(GenDecl { name: gname, space });
            }
            "rel" => {
                let slot = p.arity()?;
                if !SLOTS.contains(&slot) {
                    p.pos -= 1;
                    return p.err("relations live in bi-arity (1,3), (2,2) or (3,1)");
                }
                let rname = if let Tok::Ident(_) = p.peek() { Some(p.ident()?) } else { None };
                p.sym('=')?;
                let terms = p.expr()?;
                p.end()?;
                rels.push((line, slot, rname, terms));
            }
            _ => {
                p.pos -= 1;
                return p.err("expected `name`, `gen` or `rel`");
            }
        }
    }
    let env = Env::new(&gens).map_err(|e| ParseError { line: 1, col: 1, token: String::new(), msg: e.to_string() })?;
    let mut declared = Vec::new();
    for (k, (line, slot, rname, terms)) in rels.into_iter().enumerate() {
        let mut x = FreeElement::zero(slot.0, slot.1);
        for (c, t) in &terms {
            let y = env.eval(t, line)?;
            if y.arity() != slot {
                return Err(ParseError {
                    line,
                    col: 1,
                    token: format!("{slot:?}"),
                    msg: format!("arity mismatch: term has bi-arity {:?}", y.arity()),
                });
            }
            x = x.add(&y.scale(c)).expect("same arity");
        }
        declared.push(NamedRelation { name: rname.unwrap_or_else(|| format!("r{}", k + 1)), element: x });
    }
    let e12 = env.e.get((1, 2)).cloned().unwrap_or_else(|| SBimoduleSpace::zero(1, 2));
    let e21 = env.e.get((2, 1)).cloned().unwrap_or_else(|| SBimoduleSpace::zero(2, 1));
    let presentation = Presentation::new(name, e12, e21, declared).map_err(|e| ParseError {
        line: 1,
        col: 1,
        token: String::new(),
        msg: e.to_string(),
    })?;
    Ok(Document { presentation, gens })
}

fn fmt_matrix(m: &Mat) -> String {
    let rows: Vec<String> = m
        .to_dense()
        .iter()
        .map(|r| format!("[{}]", r.iter().map(Rat::to_string).collect::<Vec<_>>().join(",")))
        .collect();
    format!("[{}]", rows.join(","))
}

/// A spanning set of the slot made of relabeled two-vertex composites, and
/// the inverse of the chosen basis.
struct Writer<'a> {
    e: &'a Generators,
    names: Vec<((usize, usize), u32, String)>,
}

#[derive(Clone)]
struct Candidate {
    text: String,
    vec: SparseVec,
}

impl Writer<'_> {
    fn basis_name(&self, shape: (usize, usize), k: u32) -> &str {
        &self.names.iter().find(|(s, i, _)| *s == shape && *i == k).expect("named basis vector").2
    }

    fn candidates(&self, slot: (usize, usize), slice: &FreeSlice) -> Vec<Candidate> {
        let mut out = Vec::new();
        let perms = |n: usize| -> Vec<Perm> { all_perms(n) };
        for (sa, sb) in [((1, 2), (1, 2)), ((1, 2), (2, 1)), ((2, 1), (1, 2)), ((2, 1), (2, 1))] {
            let (ma, na) = sa;
            let (mb, nb) = sb;
            if (ma + mb - 1, na + nb - 1) != slot {
                continue;
            }
            let (da, db) = (self.e.get(sa).map_or(0, |s| s.dim()), self.e.get(sb).map_or(0, |s| s.dim()));
            for a in 0..da as u32 {
                for b in 0..db as u32 {
                    for i in 1..=na {
                        for j in 1..=mb {
                            let x = FreeElement::generator(ma, na, a)
                                .compose(i, j, &FreeElement::generator(mb, nb, b), self.e)
                                .expect("composable generators");
                            let base = format!("comp({},{i},{j},{})", self.basis_name(sa, a), self.basis_name(sb, b));
                            for pi in perms(slot.0) {
                                for sigma in perms(slot.1) {
                                    let y = x.act(&pi, &sigma.inverse(), self.e).expect("action in range");
                                    let text = match (pi.is_identity(), sigma.is_identity()) {
                                        (true, true) => base.clone(),
                                        (false, true) => format!("act(out:{}, {base})", pi.cycle_string()),
                                        (true, false) => format!("act(in:{}, {base})", sigma.cycle_string()),
                                        (false, false) => {
                                            format!(
                                                "act(out:{}, in:{}, {base})",
                                                pi.cycle_string(),
                                                sigma.cycle_string()
                                            )
                                        }
                                    };
                                    out.push(Candidate { text, vec: slice.to_vec(&y).expect("slot element") });
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Greedy basis of the slot among the candidates, with the inverse
    /// change of basis as rows `e_t -> coefficients`.
    fn basis(&self, slot: (usize, usize)) -> (Vec<Candidate>, Vec<SparseVec>) {
        let slice = FreeSlice::new(self.e, slot.0, slot.1);
        let n = slice.dim();
        let mut chosen: Vec<Candidate> = Vec::new();
        let mut rows: Vec<SparseVec> = Vec::new();
        for c in self.candidates(slot, &slice) {
            if chosen.len() == n {
                break;
            }
            let mut trial = rows.clone();
            trial.push(c.vec.clone());
            if rank(&Mat::from_rows(n, trial.clone()).expect("rows in range")) == trial.len() {
                rows = trial;
                chosen.push(c);
            }
        }
        let aug: Vec<SparseVec> = chosen
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let mut r = c.vec.clone();
                r.push((n + k, Rat::one()));
                r
            })
            .collect();
        let reduced = rref_rows(&aug, 2 * n);
        let inv: Vec<SparseVec> = reduced
            .iter()
            .map(|r| r.iter().filter(|(c, _)| *c >= n).map(|(c, x)| (c - n, x.clone())).collect())
            .collect();
        (chosen, inv)
    }
}

fn all_perms(n: usize) -> Vec<Perm> {
    fn rec(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Perm>) {
        if prefix.len() == n {
            out.push(Perm::from_images(prefix.clone()).expect("permutation"));
            return;
        }
        for k in 0..n {
            if !prefix.contains(&k) {
                prefix.push(k);
                rec(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), n, &mut out);
    out
}

fn fmt_sum(terms: &[(Rat, String)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, (c, t)) in terms.iter().enumerate() {
        let a = c.abs();
        if k == 0 {
            if c.is_negative() {
                s.push('-');
            }
        } else {
            s.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if !a.is_one() {
            let _ = write!(s, "{a}*");
        }
        s.push_str(t);
    }
    s
}

impl Document {
    /// Canonical text: one `gen` line per generator block, and every declared
    /// relation written in a fixed basis of relabeled composites.
    pub fn print(&self) -> String {
        let p = &self.presentation;
        let mut names = Vec::new();
        let mut offsets: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        let mut out = format!("name {}\n", p.name());
        for g in &self.gens {
            let (m, n) = g.arity();
            let off = offsets.entry((m, n)).or_insert(0);
            for k in 0..g.space.dim() as u32 {
                let nm = if g.space.dim() == 1 { g.name.clone() } else { format!("{}.{}", g.name, k + 1) };
                names.push(((m, n), *off + k, nm));
            }
            *off += g.space.dim() as u32;
            let _ = write!(out, "gen {} ({m},{n}) dim={}", g.name, g.space.dim());
            let id = Mat::identity(g.space.dim());
            if let Some(a) = g.space.left().first().filter(|a| **a != id) {
                let _ = write!(out, " act_out={}", fmt_matrix(a));
            }
            if let Some(a) = g.space.right().first().filter(|a| **a != id) {
                let _ = write!(out, " act_in={}", fmt_matrix(a));
            }
            out.push('\n');
        }
        let w = Writer { e: p.generators(), names };
        let mut bases = BTreeMap::new();
        for r in p.declared() {
            let slot = r.element.arity();
            let (chosen, inv) = bases.entry(slot).or_insert_with(|| w.basis(slot));
            let slice = FreeSlice::new(p.generators(), slot.0, slot.1);
            let v = slice.to_vec(&r.element).expect("relation in its slot");
            let mut coef: BTreeMap<usize, Rat> = BTreeMap::new();
            for (t, x) in &v {
                for (j, y) in &inv[*t] {
                    let s = coef.entry(*j).or_insert_with(Rat::zero);
                    *s = &*s + &(x * y);
                }
            }
            let terms: Vec<(Rat, String)> =
                coef.into_iter().filter(|(_, c)| !c.is_zero()).map(|(j, c)| (c, chosen[j].text.clone())).collect();
            let _ = writeln!(out, "rel ({},{}) {} = {}", slot.0, slot.1, r.name, fmt_sum(&terms));
        }
        out
    }

    /// The quadratic dual, with generator names primed (or unprimed).
    pub fn dual(&self) -> Result<Document, diopkit_core::Error> {
        let presentation = diopkit_core::koszul::quadratic_dual(&self.presentation)?;
        let gens = self
            .gens
            .iter()
            .map(|g| GenDecl {
                name: match g.name.strip_suffix('\'') {
                    Some(b) => b.to_string(),
                    None => format!("{}'", g.name),
                },
                space: g.space.twist(TwistKind::Vee),
            })
            .collect();
        Ok(Document { presentation, gens })
    }

    pub fn opposite(&self) -> Result<Document, diopkit_core::Error> {
        let presentation = self.presentation.opposite()?;
        let mut gens: Vec<GenDecl> =
            self.gens.iter().map(|g| GenDecl { name: g.name.clone(), space: g.space.opposite() }).collect();
        gens.sort_by_key(|g| g.arity());
        Ok(Document { presentation, gens })
    }

    pub fn with_relation_deleted(&self, slot: (usize, usize)) -> Result<Document, diopkit_core::Error> {
        let p = &self.presentation;
        let zero = diopkit_core::Subspace::zero(p.relation(slot).ambient_dim());
        Ok(Document { presentation: p.with_relation(slot, zero)?, gens: self.gens.clone() })
    }
}

impl fmt::Display for Document {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.print())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const BILIE: &str = include_str!("../presentations/bilie.diop");

    #[test]
    fn lexer_positions() {
        let t = lex("rel (1,3) = comp(l, 1,1,l)", 4).unwrap();
        assert_eq!(t[0].col, 1);
        assert_eq!(t[1].tok, Tok::Sym('('));
        assert_eq!(t.last().unwrap().tok, Tok::End);
        assert!(lex("gen l $", 1).is_err());
    }

    #[test]
    fn bilie_parses() {
        let d = parse(BILIE, "x").unwrap();
        assert_eq!(d.presentation.name(), "bilie");
        assert_eq!(d.gens.len(), 2);
        for slot in SLOTS {
            assert_eq!(d.presentation.relation(slot).dim(), 1);
        }
    }

    #[test]
    fn comp_out_of_range() {
        let text = "gen l (1,2) dim=1 act_in=[[-1]]\nrel (1,3) = comp(l,3,1,l)\n";
        let e = parse(text, "x").unwrap_err();
        assert_eq!((e.line, e.col, e.token.as_str()), (2, 20, "3"));
        assert!(e.msg.contains("arity mismatch"));
    }

    #[test]
    fn errors_name_the_token() {
        let e = parse("gen l (1,2) dim=1\nrel (1,3) = comp(m,1,1,l)", "x").unwrap_err();
        assert_eq!((e.line, e.token.as_str()), (2, "m"));
        let e = parse("gen l (1,2) dim=1 act_in=[[2]]", "x").unwrap_err();
        assert!(e.msg.contains("non-involutive"));
        let e = parse("gen l (1,2) dim=1\nrel (2,2) = comp(l,1,1,l)", "x").unwrap_err();
        assert!(e.msg.contains("arity mismatch"));
        let e = parse("frobnicate", "x").unwrap_err();
        assert_eq!(e.col, 1);
        let e = parse("gen l (1,3) dim=1", "x").unwrap_err();
        assert!(e.msg.contains("bi-arity"));
    }

    #[test]
    fn empty_relations_give_free() {
        let d = parse("gen l (1,2) dim=1\ngen d (2,1) dim=1\n", "free").unwrap();
        assert!(SLOTS.iter().all(|&s| d.presentation.relation(s).dim() == 0));
    }

    #[test]
    fn coefficients_and_signs() {
        let text = "gen m (1,2) dim=1\nrel (1,3) a = -1/2*comp(m,1,1,m) + 3*comp(m,2,1,m) - comp(m,1,1,m)\n";
        let d = parse(text, "x").unwrap();
        let x = &d.presentation.declared()[0].element;
        assert_eq!(x.len(), 2);
    }
}
