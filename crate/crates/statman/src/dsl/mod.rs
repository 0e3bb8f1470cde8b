//! Manifold-presentation text format: parser with source-span
//! diagnostics, canonical pretty-printer, and the bridge to frame
//! presentations.
//!
//! Grammar (whitespace-insensitive, `#` starts a line comment):
//!
//! ```text
//! document    = header stmt*
//! header      = "manifold" STRING
//! stmt        = params | dim | frame | metric | bracket | connection
//!             | contact | submanifold
//! params      = "params" IDENT ("," IDENT)*
//! dim         = "dim" NAT
//! frame       = "frame" IDENT+
//! metric      = "metric" ("diag" "(" rational ("," rational)* ")" | entry+)
//! entry       = IDENT IDENT "=" rational
//! bracket     = "bracket" "[" IDENT "," IDENT "]" "=" vexpr
//! connection  = "connection" IDENT "{" (IDENT IDENT "=" vexpr ";")* "}"
//! contact     = "contact" "{" ("phi" IDENT "=" vexpr ";")* "xi" "=" IDENT ";" "}"
//! submanifold = "submanifold" IDENT "{" "tangent" IDENT ("," IDENT)* ";" "}"
//! vexpr       = linear combination of frame names with polynomial
//!               coefficients over the declared params; rational literals
//!               are INT or INT "/" INT; "*", "^", unary "-", parentheses
//! ```
//!
//! Unspecified bracket, metric, connection, and φ entries default to zero.

mod parse;
mod print;

pub use parse::{parse, parse_vector_expr};
pub use print::print_doc;

use crate::error::{Error, Result};
use crate::frame::{Connection, ConnectionRole, FramePresentation, Tensor3, VectorField};
use crate::ring::{ParamRing, Rational};
use crate::structures::ContactTriple;
use std::collections::BTreeMap;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Span {
    pub start: usize,
    pub len: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DiagnosticKind {
    Lexical,
    Syntax,
    Reference,
}

impl DiagnosticKind {
    fn as_str(&self) -> &'static str {
        match self {
            DiagnosticKind::Lexical => "lexical error",
            DiagnosticKind::Syntax => "syntax error",
            DiagnosticKind::Reference => "reference error",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Diagnostic {
    pub span: Span,
    pub line: usize,
    pub col: usize,
    pub kind: DiagnosticKind,
    pub message: String,
}

/// Renders diagnostics with the offending source line and a caret.
pub fn render_diagnostics(text: &str, diags: &[Diagnostic]) -> String {
    let lines: Vec<&str> = text.lines().collect();
    let mut out = String::new();
    for d in diags {
        out.push_str(&format!(
            "{}:{}: {}: {}\n",
            d.line,
            d.col,
            d.kind.as_str(),
            d.message
        ));
        if d.line >= 1 && d.line <= lines.len() {
            let src = lines[d.line - 1];
            out.push_str(&format!("  | {src}\n"));
            let pad: String = src
                .chars()
                .take(d.col.saturating_sub(1))
                .map(|c| if c == '\t' { '\t' } else { ' ' })
                .collect();
            let carets = "^".repeat(d.len().max(1).min(src.chars().count().saturating_sub(d.col - 1).max(1)));
            out.push_str(&format!("  | {pad}{carets}\n"));
        }
    }
    out
}

impl Diagnostic {
    fn len(&self) -> usize {
        self.span.len
    }
}

/// Contact block in document form.
#[derive(Clone, PartialEq, Debug)]
pub struct DocContact {
    pub phi_images: Vec<VectorField>,
    pub xi_index: usize,
}

/// A parsed and reference-resolved manifold document. Equality compares
/// resolved content (not source trivia), which is what the print / parse
/// fixpoint is stated over.
#[derive(Clone, Debug)]
pub struct ManifoldDoc {
    pub name: String,
    pub ring: ParamRing,
    pub params: Vec<String>,
    pub frame: Vec<String>,
    pub metric: Vec<Vec<Rational>>,
    pub brackets: Tensor3,
    pub connections: BTreeMap<String, Tensor3>,
    pub contact: Option<DocContact>,
    pub submanifolds: Vec<(String, Vec<usize>)>,
    /// Number of connection entries written in the source (sparse tables
    /// may list zeros explicitly).
    pub connection_entry_count: usize,
}

impl PartialEq for ManifoldDoc {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.params == other.params
            && self.frame == other.frame
            && self.metric == other.metric
            && self.brackets == other.brackets
            && self.connections == other.connections
            && self.contact == other.contact
            && self.submanifolds == other.submanifolds
    }
}

impl ManifoldDoc {
    /// Builds the frame presentation and contact triple. Structural
    /// problems (singular metric, Jacobi failure) surface as engine
    /// errors, not parse diagnostics.
    pub fn build(&self) -> Result<(FramePresentation, Option<ContactTriple>)> {
        let mut pres = FramePresentation::new(
            self.name.clone(),
            self.frame.clone(),
            self.ring.clone(),
            self.metric.clone(),
            self.brackets.clone(),
        )?;
        for (name, gamma) in &self.connections {
            let role = match name.as_str() {
                "nabla_star" => ConnectionRole::Dual,
                "levi_civita" => ConnectionRole::LeviCivita,
                _ => ConnectionRole::Given,
            };
            pres.add_connection(name.clone(), Connection::new(gamma.clone(), role))?;
        }
        let contact = match &self.contact {
            None => None,
            Some(c) => Some(ContactTriple::new(
                &pres,
                c.phi_images.clone(),
                VectorField::basis(&self.ring, self.frame.len(), c.xi_index),
            )?),
        };
        Ok((pres, contact))
    }

    pub fn submanifold(&self, name: &str) -> Result<&[usize]> {
        self.submanifolds
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, idx)| idx.as_slice())
            .ok_or_else(|| Error::Unsupported(format!("no submanifold named `{name}`")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Poly;

    const SAMPLE: &str = r#"
# a tiny presentation
manifold "demo"
dim 2
params a
frame e1 xi
metric diag(1, 1)
bracket [e1, xi] = e1
connection nabla {
  e1 e1 = -xi ;
  e1 xi = e1 ;
  xi xi = a*xi ;
}
contact {
  phi e1 = e1 ;
  xi = xi ;
}
submanifold line { tangent e1 ; }
"#;

    #[test]
    fn parses_and_builds() {
        let doc = parse(SAMPLE).expect("parses");
        assert_eq!(doc.name, "demo");
        assert_eq!(doc.frame, vec!["e1".to_string(), "xi".to_string()]);
        assert_eq!(doc.params, vec!["a".to_string()]);
        assert_eq!(doc.connection_entry_count, 3);
        let (pres, ct) = doc.build().unwrap();
        assert_eq!(pres.dim(), 2);
        assert!(ct.is_some());
        let nabla = pres.connection("nabla").unwrap();
        let a = Poly::var(pres.ring(), "a").unwrap();
        assert_eq!(nabla.entry(1, 1), VectorField::basis(pres.ring(), 2, 1).scale_poly(&a));
        assert_eq!(doc.submanifold("line").unwrap(), &[0]);
    }

    #[test]
    fn undeclared_frame_vector_is_a_reference_error() {
        let text = r#"
manifold "bad"
frame e1 e2
metric diag(1, 1)
bracket [e1, e9] = e1
"#;
        let diags = parse(text).unwrap_err();
        assert!(diags
            .iter()
            .any(|d| d.kind == DiagnosticKind::Reference && d.message.contains("e9")));
    }

    #[test]
    fn diag_metric_expands() {
        let text = r#"
manifold "m"
frame a b c d e
metric diag(1, 1, 1, 1, 1)
"#;
        let doc = parse(text).unwrap();
        assert_eq!(doc.metric.len(), 5);
        for i in 0..5 {
            for j in 0..5 {
                let expect = if i == j { Rational::one() } else { Rational::zero() };
                assert_eq!(doc.metric[i][j], expect);
            }
        }
    }

    #[test]
    fn metric_entries_form() {
        let text = r#"
manifold "m"
frame x y
metric
  x x = 2
  x y = 1/2
  y y = 1
"#;
        let doc = parse(text).unwrap();
        assert_eq!(doc.metric[0][1], Rational::new(1, 2).unwrap());
        assert_eq!(doc.metric[1][0], Rational::new(1, 2).unwrap());
    }

    #[test]
    fn frame_vectors_cannot_be_multiplied() {
        let text = r#"
manifold "m"
frame x y
metric diag(1, 1)
bracket [x, y] = x*y
"#;
        let diags = parse(text).unwrap_err();
        assert!(diags.iter().any(|d| d.message.contains("multiplied")));
    }

    #[test]
    fn lexical_error_has_span() {
        let text = "manifold \"m\"\nframe x ?\n";
        let diags = parse(text).unwrap_err();
        let d = diags.iter().find(|d| d.kind == DiagnosticKind::Lexical).unwrap();
        assert_eq!(d.line, 2);
        assert!(d.col >= 9);
    }

    #[test]
    fn print_parse_fixpoint() {
        let doc = parse(SAMPLE).unwrap();
        let printed = print_doc(&doc);
        let doc2 = parse(&printed).expect("printed form parses");
        assert_eq!(doc, doc2);
        // and printing is idempotent byte-for-byte
        assert_eq!(printed, print_doc(&doc2));
    }

    #[test]
    fn duplicate_bracket_rejected() {
        let text = r#"
manifold "m"
frame x y
metric diag(1, 1)
bracket [x, y] = x
bracket [y, x] = y
"#;
        let diags = parse(text).unwrap_err();
        assert!(diags.iter().any(|d| d.message.contains("already specified")));
    }

    #[test]
    fn rational_literals_in_coefficients() {
        let text = r#"
manifold "m"
params b
frame x y
metric diag(1, 1)
connection nabla { x x = 1/2*b^2*y ; }
"#;
        let doc = parse(text).unwrap();
        let g = doc.connections.get("nabla").unwrap();
        let b = Poly::var(&doc.ring, "b").unwrap();
        assert_eq!(
            *g.get(0, 0, 1),
            b.pow(2).scale(&Rational::new(1, 2).unwrap())
        );
    }
}
