//! Lexer and recursive-descent parser with statement-level recovery.

use super::{Diagnostic, DiagnosticKind, DocContact, ManifoldDoc, Span};
use crate::frame::{Tensor3, VectorField};
use crate::ring::{ParamRing, Poly, Rational};
use num::BigInt;
use std::collections::BTreeMap;
use std::str::FromStr;

#[derive(Clone, PartialEq, Debug)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Str(String),
    Comma,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Eq,
    Semi,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Int(n) => format!("integer `{n}`"),
            Tok::Str(s) => format!("string \"{s}\""),
            Tok::Comma => "`,`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Caret => "`^`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

struct Lexer<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

struct Spanned {
    tok: Tok,
    span: Span,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src, bytes: src.as_bytes(), pos: 0 }
    }

    fn run(mut self) -> (Vec<Spanned>, Vec<(Span, String)>) {
        let mut toks = Vec::new();
        let mut errs = Vec::new();
        loop {
            self.skip_trivia();
            let start = self.pos;
            if self.pos >= self.bytes.len() {
                toks.push(Spanned { tok: Tok::Eof, span: Span { start, len: 0 } });
                return (toks, errs);
            }
            let b = self.bytes[self.pos];
            let tok = match b {
                b',' => Some(Tok::Comma),
                b'(' => Some(Tok::LParen),
                b')' => Some(Tok::RParen),
                b'[' => Some(Tok::LBracket),
                b']' => Some(Tok::RBracket),
                b'{' => Some(Tok::LBrace),
                b'}' => Some(Tok::RBrace),
                b'=' => Some(Tok::Eq),
                b';' => Some(Tok::Semi),
                b'+' => Some(Tok::Plus),
                b'-' => Some(Tok::Minus),
                b'*' => Some(Tok::Star),
                b'^' => Some(Tok::Caret),
                b'/' => Some(Tok::Slash),
                _ => None,
            };
            if let Some(tok) = tok {
                self.pos += 1;
                toks.push(Spanned { tok, span: Span { start, len: 1 } });
                continue;
            }
            if b == b'"' {
                self.pos += 1;
                let lit_start = self.pos;
                while self.pos < self.bytes.len() && self.bytes[self.pos] != b'"' {
                    self.pos += 1;
                }
                if self.pos >= self.bytes.len() {
                    errs.push((Span { start, len: self.pos - start }, "unterminated string".into()));
                    toks.push(Spanned { tok: Tok::Eof, span: Span { start: self.pos, len: 0 } });
                    return (toks, errs);
                }
                let text = self.src[lit_start..self.pos].to_string();
                self.pos += 1;
                toks.push(Spanned { tok: Tok::Str(text), span: Span { start, len: self.pos - start } });
                continue;
            }
            if b.is_ascii_digit() {
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n = BigInt::from_str(&self.src[start..self.pos]).expect("digits");
                toks.push(Spanned { tok: Tok::Int(n), span: Span { start, len: self.pos - start } });
                continue;
            }
            if b.is_ascii_alphabetic() || b == b'_' {
                while self.pos < self.bytes.len()
                    && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                toks.push(Spanned {
                    tok: Tok::Ident(self.src[start..self.pos].to_string()),
                    span: Span { start, len: self.pos - start },
                });
                continue;
            }
            // unknown byte: report and skip
            self.pos += 1;
            errs.push((
                Span { start, len: 1 },
                format!("unexpected character `{}`", &self.src[start..self.pos]),
            ));
        }
    }

    fn skip_trivia(&mut self) {
        loop {
            while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
                self.pos += 1;
            }
            if self.pos < self.bytes.len() && self.bytes[self.pos] == b'#' {
                while self.pos < self.bytes.len() && self.bytes[self.pos] != b'\n' {
                    self.pos += 1;
                }
                continue;
            }
            return;
        }
    }
}

const STATEMENT_KEYWORDS: [&str; 8] = [
    "params",
    "dim",
    "frame",
    "metric",
    "bracket",
    "connection",
    "contact",
    "submanifold",
];

fn line_col(src: &str, offset: usize) -> (usize, usize) {
    let mut line = 1;
    let mut col = 1;
    for (i, ch) in src.char_indices() {
        if i >= offset {
            break;
        }
        if ch == '\n' {
            line += 1;
            col = 1;
        } else {
            col += 1;
        }
    }
    (line, col)
}

/// Either a scalar polynomial or a frame-vector combination.
enum Val {
    Scalar(Poly),
    Vector(Vec<Poly>),
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<Spanned>,
    pos: usize,
    diags: Vec<Diagnostic>,
    // document state
    name: Option<String>,
    params: Vec<String>,
    ring: ParamRing,
    frame: Vec<String>,
    declared_dim: Option<(usize, Span)>,
    metric: Option<Vec<Vec<Rational>>>,
    brackets: Option<Tensor3>,
    bracket_seen: Vec<(usize, usize)>,
    connections: BTreeMap<String, Tensor3>,
    connection_seen: BTreeMap<String, Vec<(usize, usize)>>,
    connection_entry_count: usize,
    contact: Option<DocContact>,
    submanifolds: Vec<(String, Vec<usize>)>,
}

struct Bail;

type Step<T> = Result<T, Bail>;

impl<'a> Parser<'a> {
    fn diag(&mut self, span: Span, kind: DiagnosticKind, message: String) {
        let (line, col) = line_col(self.src, span.start);
        self.diags.push(Diagnostic { span, line, col, kind, message });
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_span(&self) -> Span {
        self.toks[self.pos].span
    }

    fn next(&mut self) -> (Tok, Span) {
        let t = self.toks[self.pos].tok.clone();
        let s = self.toks[self.pos].span;
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        (t, s)
    }

    fn expect(&mut self, want: &Tok, ctx: &str) -> Step<Span> {
        if self.peek() == want {
            Ok(self.next().1)
        } else {
            let got = self.peek().describe();
            let span = self.peek_span();
            self.diag(
                span,
                DiagnosticKind::Syntax,
                format!("expected {} {ctx}, found {got}", want.describe()),
            );
            Err(Bail)
        }
    }

    fn expect_ident(&mut self, ctx: &str) -> Step<(String, Span)> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                let span = self.next().1;
                Ok((s, span))
            }
            other => {
                let span = self.peek_span();
                self.diag(
                    span,
                    DiagnosticKind::Syntax,
                    format!("expected identifier {ctx}, found {}", other.describe()),
                );
                Err(Bail)
            }
        }
    }

    fn frame_index(&mut self, name: &str, span: Span) -> Step<usize> {
        match self.frame.iter().position(|f| f == name) {
            Some(i) => Ok(i),
            None => {
                self.diag(
                    span,
                    DiagnosticKind::Reference,
                    format!("unknown frame vector `{name}`"),
                );
                Err(Bail)
            }
        }
    }

    fn require_frame(&mut self, span: Span, what: &str) -> Step<()> {
        if self.frame.is_empty() {
            self.diag(
                span,
                DiagnosticKind::Syntax,
                format!("`{what}` requires a preceding `frame` statement"),
            );
            return Err(Bail);
        }
        Ok(())
    }

    /// Skips tokens until a plausible statement start.
    fn recover(&mut self) {
        loop {
            match self.peek() {
                Tok::Eof => return,
                Tok::Ident(s) if STATEMENT_KEYWORDS.contains(&s.as_str()) => return,
                _ => {
                    self.next();
                }
            }
        }
    }

    fn parse_rational(&mut self) -> Step<Rational> {
        let neg = if matches!(self.peek(), Tok::Minus) {
            self.next();
            true
        } else {
            false
        };
        let (tok, span) = self.next();
        let Tok::Int(n) = tok else {
            self.diag(
                span,
                DiagnosticKind::Syntax,
                format!("expected a rational literal, found {}", tok.describe()),
            );
            return Err(Bail);
        };
        let mut num = n;
        let mut den = BigInt::from(1);
        if matches!(self.peek(), Tok::Slash) {
            self.next();
            let (tok, span) = self.next();
            let Tok::Int(d) = tok else {
                self.diag(
                    span,
                    DiagnosticKind::Syntax,
                    format!("expected an integer denominator, found {}", tok.describe()),
                );
                return Err(Bail);
            };
            den = d;
        }
        if neg {
            num = -num;
        }
        match Rational::from_big(num, den) {
            Ok(r) => Ok(r),
            Err(_) => {
                self.diag(span, DiagnosticKind::Syntax, "zero denominator in rational".into());
                Err(Bail)
            }
        }
    }

    // ----- vexpr -----

    fn vexpr(&mut self) -> Step<Val> {
        let mut acc = self.vterm()?;
        loop {
            let negate = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => return Ok(acc),
            };
            let op_span = self.peek_span();
            self.next();
            let rhs = self.vterm()?;
            let rhs = if negate { self.val_neg(rhs) } else { rhs };
            acc = self.val_add(acc, rhs, op_span)?;
        }
    }

    fn vterm(&mut self) -> Step<Val> {
        let mut acc = self.vpow()?;
        loop {
            if !matches!(self.peek(), Tok::Star) {
                return Ok(acc);
            }
            let op_span = self.peek_span();
            self.next();
            let rhs = self.vpow()?;
            acc = self.val_mul(acc, rhs, op_span)?;
        }
    }

    fn vpow(&mut self) -> Step<Val> {
        let base = self.vatom()?;
        if !matches!(self.peek(), Tok::Caret) {
            return Ok(base);
        }
        let caret_span = self.peek_span();
        self.next();
        let (tok, span) = self.next();
        let Tok::Int(e) = tok else {
            self.diag(
                span,
                DiagnosticKind::Syntax,
                format!("expected a non-negative integer exponent, found {}", tok.describe()),
            );
            return Err(Bail);
        };
        let e: u32 = match e.to_string().parse() {
            Ok(v) => v,
            Err(_) => {
                self.diag(span, DiagnosticKind::Syntax, "exponent too large".into());
                return Err(Bail);
            }
        };
        match base {
            Val::Scalar(p) => Ok(Val::Scalar(p.pow(e))),
            Val::Vector(_) => {
                self.diag(
                    caret_span,
                    DiagnosticKind::Syntax,
                    "frame vectors cannot be raised to a power".into(),
                );
                Err(Bail)
            }
        }
    }

    fn vatom(&mut self) -> Step<Val> {
        match self.peek().clone() {
            Tok::Minus => {
                self.next();
                let v = self.vatom()?;
                Ok(self.val_neg(v))
            }
            Tok::LParen => {
                self.next();
                let v = self.vexpr()?;
                self.expect(&Tok::RParen, "to close the parenthesized expression")?;
                Ok(v)
            }
            Tok::Int(_) => {
                let r = self.parse_rational()?;
                Ok(Val::Scalar(Poly::constant(&self.ring, r)))
            }
            Tok::Ident(name) => {
                let span = self.peek_span();
                self.next();
                if let Some(i) = self.frame.iter().position(|f| f == &name) {
                    let mut coeffs = vec![Poly::zero(&self.ring); self.frame.len()];
                    coeffs[i] = Poly::one(&self.ring);
                    return Ok(Val::Vector(coeffs));
                }
                if self.ring.index_of(&name).is_some() {
                    return Ok(Val::Scalar(Poly::var(&self.ring, &name).expect("declared")));
                }
                self.diag(
                    span,
                    DiagnosticKind::Reference,
                    format!("unknown frame vector or parameter `{name}`"),
                );
                Err(Bail)
            }
            other => {
                let span = self.peek_span();
                self.diag(
                    span,
                    DiagnosticKind::Syntax,
                    format!("expected an expression, found {}", other.describe()),
                );
                Err(Bail)
            }
        }
    }

    fn val_neg(&self, v: Val) -> Val {
        match v {
            Val::Scalar(p) => Val::Scalar(p.neg()),
            Val::Vector(cs) => Val::Vector(cs.iter().map(Poly::neg).collect()),
        }
    }

    fn val_add(&mut self, a: Val, b: Val, span: Span) -> Step<Val> {
        match (a, b) {
            (Val::Scalar(p), Val::Scalar(q)) => Ok(Val::Scalar(p.add(&q))),
            (Val::Vector(x), Val::Vector(y)) => {
                Ok(Val::Vector(x.iter().zip(&y).map(|(p, q)| p.add(q)).collect()))
            }
            (Val::Scalar(p), Val::Vector(v)) | (Val::Vector(v), Val::Scalar(p)) => {
                if p.is_zero() {
                    Ok(Val::Vector(v))
                } else {
                    self.diag(
                        span,
                        DiagnosticKind::Syntax,
                        "cannot add a scalar to a frame-vector expression".into(),
                    );
                    Err(Bail)
                }
            }
        }
    }

    fn val_mul(&mut self, a: Val, b: Val, span: Span) -> Step<Val> {
        match (a, b) {
            (Val::Scalar(p), Val::Scalar(q)) => Ok(Val::Scalar(p.mul(&q))),
            (Val::Scalar(p), Val::Vector(v)) | (Val::Vector(v), Val::Scalar(p)) => {
                Ok(Val::Vector(v.iter().map(|c| c.mul(&p)).collect()))
            }
            (Val::Vector(_), Val::Vector(_)) => {
                self.diag(
                    span,
                    DiagnosticKind::Syntax,
                    "frame vectors cannot be multiplied".into(),
                );
                Err(Bail)
            }
        }
    }

    fn vexpr_vector(&mut self) -> Step<Vec<Poly>> {
        let span = self.peek_span();
        match self.vexpr()? {
            Val::Vector(v) => Ok(v),
            Val::Scalar(p) if p.is_zero() => Ok(vec![Poly::zero(&self.ring); self.frame.len()]),
            Val::Scalar(_) => {
                self.diag(
                    span,
                    DiagnosticKind::Syntax,
                    "expected a frame-vector expression (a nonzero scalar is not one)".into(),
                );
                Err(Bail)
            }
        }
    }

    // ----- statements -----

    fn stmt_params(&mut self) -> Step<()> {
        let span = self.peek_span();
        if !self.params.is_empty() {
            self.diag(span, DiagnosticKind::Syntax, "`params` specified twice".into());
            return Err(Bail);
        }
        loop {
            let (name, span) = self.expect_ident("as a parameter name")?;
            if self.params.contains(&name) {
                self.diag(span, DiagnosticKind::Reference, format!("duplicate parameter `{name}`"));
                return Err(Bail);
            }
            self.params.push(name);
            if matches!(self.peek(), Tok::Comma) {
                self.next();
            } else {
                break;
            }
        }
        self.ring = ParamRing::new(self.params.clone()).expect("duplicates rejected above");
        Ok(())
    }

    fn stmt_frame(&mut self) -> Step<()> {
        let span = self.peek_span();
        if !self.frame.is_empty() {
            self.diag(span, DiagnosticKind::Syntax, "`frame` specified twice".into());
            return Err(Bail);
        }
        while let Tok::Ident(next) = self.peek() {
            if STATEMENT_KEYWORDS.contains(&next.as_str()) {
                break;
            }
            let (name, span) = self.expect_ident("as a frame name")?;
            if self.frame.contains(&name) {
                self.diag(span, DiagnosticKind::Reference, format!("duplicate frame name `{name}`"));
                return Err(Bail);
            }
            if self.params.contains(&name) {
                self.diag(
                    span,
                    DiagnosticKind::Reference,
                    format!("`{name}` is already a parameter"),
                );
                return Err(Bail);
            }
            self.frame.push(name);
        }
        if self.frame.is_empty() {
            let span = self.peek_span();
            self.diag(span, DiagnosticKind::Syntax, "`frame` needs at least one name".into());
            return Err(Bail);
        }
        self.brackets = Some(Tensor3::zeros(&self.ring, self.frame.len()));
        Ok(())
    }

    fn stmt_dim(&mut self) -> Step<()> {
        let (tok, span) = self.next();
        let Tok::Int(n) = tok else {
            self.diag(span, DiagnosticKind::Syntax, "expected a dimension".into());
            return Err(Bail);
        };
        let n: usize = n.to_string().parse().unwrap_or(usize::MAX);
        self.declared_dim = Some((n, span));
        Ok(())
    }

    fn stmt_metric(&mut self) -> Step<()> {
        let kw_span = self.peek_span();
        self.require_frame(kw_span, "metric")?;
        let n = self.frame.len();
        if self.metric.is_some() {
            self.diag(kw_span, DiagnosticKind::Syntax, "`metric` specified twice".into());
            return Err(Bail);
        }
        let mut m = vec![vec![Rational::zero(); n]; n];
        if matches!(self.peek(), Tok::Ident(s) if s == "diag") {
            self.next();
            self.expect(&Tok::LParen, "after `diag`")?;
            let mut vals = Vec::new();
            loop {
                vals.push(self.parse_rational()?);
                if matches!(self.peek(), Tok::Comma) {
                    self.next();
                } else {
                    break;
                }
            }
            let close = self.expect(&Tok::RParen, "to close `diag`")?;
            if vals.len() != n {
                self.diag(
                    close,
                    DiagnosticKind::Syntax,
                    format!("diag lists {} entries for a frame of {}", vals.len(), n),
                );
                return Err(Bail);
            }
            for (i, v) in vals.into_iter().enumerate() {
                m[i][i] = v;
            }
        } else {
            let mut any = false;
            while let Tok::Ident(name) = self.peek().clone() {
                // stop at the next statement keyword
                if STATEMENT_KEYWORDS.contains(&name.as_str()) {
                    break;
                }
                let (a, sa) = self.expect_ident("as a frame name")?;
                let i = self.frame_index(&a, sa)?;
                let (b, sb) = self.expect_ident("as a frame name")?;
                let j = self.frame_index(&b, sb)?;
                self.expect(&Tok::Eq, "in the metric entry")?;
                let v = self.parse_rational()?;
                m[i][j] = v.clone();
                m[j][i] = v;
                any = true;
            }
            if !any {
                self.diag(kw_span, DiagnosticKind::Syntax, "empty metric statement".into());
                return Err(Bail);
            }
        }
        self.metric = Some(m);
        Ok(())
    }

    fn stmt_bracket(&mut self) -> Step<()> {
        let kw_span = self.peek_span();
        self.require_frame(kw_span, "bracket")?;
        self.expect(&Tok::LBracket, "after `bracket`")?;
        let (a, sa) = self.expect_ident("as a frame name")?;
        let i = self.frame_index(&a, sa)?;
        self.expect(&Tok::Comma, "between the bracket arguments")?;
        let (b, sb) = self.expect_ident("as a frame name")?;
        let j = self.frame_index(&b, sb)?;
        self.expect(&Tok::RBracket, "to close the bracket")?;
        self.expect(&Tok::Eq, "in the bracket statement")?;
        let v = self.vexpr_vector()?;
        if i == j {
            self.diag(sa, DiagnosticKind::Syntax, "bracket of a vector with itself is zero".into());
            return Err(Bail);
        }
        if self.bracket_seen.contains(&(i, j)) || self.bracket_seen.contains(&(j, i)) {
            self.diag(
                sb,
                DiagnosticKind::Syntax,
                format!("bracket [{a}, {b}] already specified"),
            );
            return Err(Bail);
        }
        self.bracket_seen.push((i, j));
        let br = self.brackets.as_mut().expect("frame declared");
        for (k, c) in v.iter().enumerate() {
            br.set(i, j, k, c.clone());
            br.set(j, i, k, c.neg());
        }
        Ok(())
    }

    fn stmt_connection(&mut self) -> Step<()> {
        let kw_span = self.peek_span();
        self.require_frame(kw_span, "connection")?;
        let (cname, cspan) = self.expect_ident("as the connection name")?;
        if self.connections.contains_key(&cname) {
            self.diag(cspan, DiagnosticKind::Syntax, format!("connection `{cname}` specified twice"));
            return Err(Bail);
        }
        self.expect(&Tok::LBrace, "to open the connection table")?;
        let n = self.frame.len();
        let mut gamma = Tensor3::zeros(&self.ring, n);
        let mut seen: Vec<(usize, usize)> = Vec::new();
        while !matches!(self.peek(), Tok::RBrace | Tok::Eof) {
            let (a, sa) = self.expect_ident("as a frame name")?;
            let i = self.frame_index(&a, sa)?;
            let (b, sb) = self.expect_ident("as a frame name")?;
            let j = self.frame_index(&b, sb)?;
            self.expect(&Tok::Eq, "in the connection entry")?;
            let v = self.vexpr_vector()?;
            self.expect(&Tok::Semi, "after the connection entry")?;
            if seen.contains(&(i, j)) {
                self.diag(
                    sb,
                    DiagnosticKind::Syntax,
                    format!("connection entry ({a}, {b}) already specified"),
                );
                return Err(Bail);
            }
            seen.push((i, j));
            self.connection_entry_count += 1;
            for (k, c) in v.iter().enumerate() {
                gamma.set(i, j, k, c.clone());
            }
        }
        self.expect(&Tok::RBrace, "to close the connection table")?;
        self.connection_seen.insert(cname.clone(), seen);
        self.connections.insert(cname, gamma);
        Ok(())
    }

    fn stmt_contact(&mut self) -> Step<()> {
        let kw_span = self.peek_span();
        self.require_frame(kw_span, "contact")?;
        if self.contact.is_some() {
            self.diag(kw_span, DiagnosticKind::Syntax, "`contact` specified twice".into());
            return Err(Bail);
        }
        self.expect(&Tok::LBrace, "to open the contact block")?;
        let n = self.frame.len();
        let mut phi: Vec<Option<Vec<Poly>>> = vec![None; n];
        let xi_index: usize;
        loop {
            match self.peek().clone() {
                Tok::Ident(s) if s == "phi" => {
                    self.next();
                    let (a, sa) = self.expect_ident("after `phi`")?;
                    let i = self.frame_index(&a, sa)?;
                    self.expect(&Tok::Eq, "in the phi entry")?;
                    let v = self.vexpr_vector()?;
                    self.expect(&Tok::Semi, "after the phi entry")?;
                    if phi[i].is_some() {
                        self.diag(sa, DiagnosticKind::Syntax, format!("phi {a} already specified"));
                        return Err(Bail);
                    }
                    phi[i] = Some(v);
                }
                Tok::Ident(s) if s == "xi" => {
                    self.next();
                    self.expect(&Tok::Eq, "after `xi`")?;
                    let (a, sa) = self.expect_ident("as the xi frame name")?;
                    let i = self.frame_index(&a, sa)?;
                    self.expect(&Tok::Semi, "after the xi entry")?;
                    xi_index = i;
                    break;
                }
                other => {
                    let span = self.peek_span();
                    self.diag(
                        span,
                        DiagnosticKind::Syntax,
                        format!("expected `phi` or `xi` in the contact block, found {}", other.describe()),
                    );
                    return Err(Bail);
                }
            }
        }
        self.expect(&Tok::RBrace, "to close the contact block")?;
        let phi_images = phi
            .into_iter()
            .map(|o| VectorField::new(o.unwrap_or_else(|| vec![Poly::zero(&self.ring); n])))
            .collect();
        self.contact = Some(DocContact { phi_images, xi_index });
        Ok(())
    }

    fn stmt_submanifold(&mut self) -> Step<()> {
        let kw_span = self.peek_span();
        self.require_frame(kw_span, "submanifold")?;
        let (sname, sspan) = self.expect_ident("as the submanifold name")?;
        if self.submanifolds.iter().any(|(existing, _)| existing == &sname) {
            self.diag(sspan, DiagnosticKind::Syntax, format!("submanifold `{sname}` specified twice"));
            return Err(Bail);
        }
        self.expect(&Tok::LBrace, "to open the submanifold block")?;
        let (kw, kspan) = self.expect_ident("inside the submanifold block")?;
        if kw != "tangent" {
            self.diag(kspan, DiagnosticKind::Syntax, "expected `tangent`".into());
            return Err(Bail);
        }
        let mut idx = Vec::new();
        loop {
            let (a, sa) = self.expect_ident("as a tangent frame name")?;
            let i = self.frame_index(&a, sa)?;
            if idx.contains(&i) {
                self.diag(sa, DiagnosticKind::Reference, format!("duplicate tangent vector `{a}`"));
                return Err(Bail);
            }
            idx.push(i);
            if matches!(self.peek(), Tok::Comma) {
                self.next();
            } else {
                break;
            }
        }
        self.expect(&Tok::Semi, "after the tangent list")?;
        self.expect(&Tok::RBrace, "to close the submanifold block")?;
        self.submanifolds.push((sname, idx));
        Ok(())
    }

    fn document(&mut self) {
        // header
        let header = (|| -> Step<()> {
            let (kw, span) = self.expect_ident("at the start of the document")?;
            if kw != "manifold" {
                self.diag(span, DiagnosticKind::Syntax, "document must start with `manifold`".into());
                return Err(Bail);
            }
            match self.peek().clone() {
                Tok::Str(s) => {
                    self.next();
                    self.name = Some(s);
                    Ok(())
                }
                other => {
                    let span = self.peek_span();
                    self.diag(
                        span,
                        DiagnosticKind::Syntax,
                        format!("expected a quoted manifold name, found {}", other.describe()),
                    );
                    Err(Bail)
                }
            }
        })();
        if header.is_err() {
            self.recover();
        }

        loop {
            match self.peek().clone() {
                Tok::Eof => break,
                Tok::Ident(kw) => {
                    self.next();
                    let res = match kw.as_str() {
                        "params" => self.stmt_params(),
                        "dim" => self.stmt_dim(),
                        "frame" => self.stmt_frame(),
                        "metric" => self.stmt_metric(),
                        "bracket" => self.stmt_bracket(),
                        "connection" => self.stmt_connection(),
                        "contact" => self.stmt_contact(),
                        "submanifold" => self.stmt_submanifold(),
                        other => {
                            let span = self.peek_span();
                            self.diag(
                                span,
                                DiagnosticKind::Syntax,
                                format!("unknown statement `{other}`"),
                            );
                            Err(Bail)
                        }
                    };
                    if res.is_err() {
                        self.recover();
                    }
                }
                other => {
                    let span = self.peek_span();
                    self.diag(
                        span,
                        DiagnosticKind::Syntax,
                        format!("expected a statement, found {}", other.describe()),
                    );
                    self.next();
                    self.recover();
                }
            }
        }

        // document-level validation
        if self.frame.is_empty() && self.diags.is_empty() {
            self.diag(
                Span { start: 0, len: 0 },
                DiagnosticKind::Syntax,
                "document declares no frame".into(),
            );
        }
        if let Some((d, span)) = self.declared_dim {
            if !self.frame.is_empty() && d != self.frame.len() {
                self.diag(
                    span,
                    DiagnosticKind::Syntax,
                    format!("declared dim {} but the frame has {} vectors", d, self.frame.len()),
                );
            }
        }
    }
}

/// Parses a standalone frame-vector expression against a known ring and
/// frame, for command-line flags like potentials and section planes.
pub fn parse_vector_expr(
    text: &str,
    ring: &ParamRing,
    frame: &[String],
) -> Result<VectorField, Vec<Diagnostic>> {
    let (toks, lex_errs) = Lexer::new(text).run();
    let mut p = Parser {
        src: text,
        toks,
        pos: 0,
        diags: Vec::new(),
        name: None,
        params: ring.names().to_vec(),
        ring: ring.clone(),
        frame: frame.to_vec(),
        declared_dim: None,
        metric: None,
        brackets: None,
        bracket_seen: Vec::new(),
        connections: BTreeMap::new(),
        connection_seen: BTreeMap::new(),
        connection_entry_count: 0,
        contact: None,
        submanifolds: Vec::new(),
    };
    for (span, msg) in lex_errs {
        p.diag(span, DiagnosticKind::Lexical, msg);
    }
    let v = p.vexpr_vector();
    if let Ok(coeffs) = v {
        if matches!(p.peek(), Tok::Eof) && p.diags.is_empty() {
            return Ok(VectorField::new(coeffs));
        }
        if p.diags.is_empty() {
            let span = p.peek_span();
            p.diag(
                span,
                DiagnosticKind::Syntax,
                format!("trailing input after the expression: {}", p.peek().describe()),
            );
        }
    }
    Err(p.diags)
}

/// Parses a manifold document; returns every diagnostic found when the
/// text is not well-formed.
pub fn parse(text: &str) -> Result<ManifoldDoc, Vec<Diagnostic>> {
    let (toks, lex_errs) = Lexer::new(text).run();
    let mut p = Parser {
        src: text,
        toks,
        pos: 0,
        diags: Vec::new(),
        name: None,
        params: Vec::new(),
        ring: ParamRing::empty(),
        frame: Vec::new(),
        declared_dim: None,
        metric: None,
        brackets: None,
        bracket_seen: Vec::new(),
        connections: BTreeMap::new(),
        connection_seen: BTreeMap::new(),
        connection_entry_count: 0,
        contact: None,
        submanifolds: Vec::new(),
    };
    for (span, msg) in lex_errs {
        p.diag(span, DiagnosticKind::Lexical, msg);
    }
    p.document();
    if !p.diags.is_empty() {
        let mut diags = p.diags;
        diags.sort_by_key(|d| d.span.start);
        return Err(diags);
    }
    let n = p.frame.len();
    Ok(ManifoldDoc {
        name: p.name.unwrap_or_default(),
        ring: p.ring.clone(),
        params: p.params,
        frame: p.frame,
        metric: p.metric.unwrap_or_else(|| {
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                        .collect()
                })
                .collect()
        }),
        brackets: p.brackets.expect("frame declared"),
        connections: p.connections,
        contact: p.contact,
        submanifolds: p.submanifolds,
        connection_entry_count: p.connection_entry_count,
    })
}
