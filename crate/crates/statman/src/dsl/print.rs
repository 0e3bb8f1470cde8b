//! Canonical pretty-printer. Re-parsing the output yields a structurally
//! identical document, and printing is byte-stable.

use super::ManifoldDoc;
use crate::frame::VectorField;
use std::fmt::Write as _;

pub fn print_doc(doc: &ManifoldDoc) -> String {
    let n = doc.frame.len();
    let mut out = String::new();
    let _ = writeln!(out, "manifold \"{}\"", doc.name);
    let _ = writeln!(out, "dim {n}");
    if !doc.params.is_empty() {
        let _ = writeln!(out, "params {}", doc.params.join(", "));
    }
    let _ = writeln!(out, "frame {}", doc.frame.join(" "));

    let diagonal = (0..n).all(|i| (0..n).all(|j| i == j || doc.metric[i][j].is_zero()));
    if diagonal {
        let entries: Vec<String> = (0..n).map(|i| doc.metric[i][i].to_string()).collect();
        let _ = writeln!(out, "metric diag({})", entries.join(", "));
    } else {
        let _ = writeln!(out, "metric");
        for i in 0..n {
            for j in i..n {
                if !doc.metric[i][j].is_zero() {
                    let _ = writeln!(out, "  {} {} = {}", doc.frame[i], doc.frame[j], doc.metric[i][j]);
                }
            }
        }
    }

    for i in 0..n {
        for j in (i + 1)..n {
            let v = doc.brackets.row(i, j);
            if !v.is_zero() {
                let _ = writeln!(
                    out,
                    "bracket [{}, {}] = {}",
                    doc.frame[i],
                    doc.frame[j],
                    v.display(&doc.frame)
                );
            }
        }
    }

    for (cname, gamma) in &doc.connections {
        let _ = writeln!(out, "connection {cname} {{");
        for i in 0..n {
            for j in 0..n {
                let v = gamma.row(i, j);
                if !v.is_zero() {
                    let _ = writeln!(
                        out,
                        "  {} {} = {} ;",
                        doc.frame[i],
                        doc.frame[j],
                        v.display(&doc.frame)
                    );
                }
            }
        }
        let _ = writeln!(out, "}}");
    }

    if let Some(ct) = &doc.contact {
        let _ = writeln!(out, "contact {{");
        for (i, img) in ct.phi_images.iter().enumerate() {
            if !img.is_zero() {
                let _ = writeln!(out, "  phi {} = {} ;", doc.frame[i], display_of(img, &doc.frame));
            }
        }
        let _ = writeln!(out, "  xi = {} ;", doc.frame[ct.xi_index]);
        let _ = writeln!(out, "}}");
    }

    for (sname, idx) in &doc.submanifolds {
        let names: Vec<String> = idx.iter().map(|&i| doc.frame[i].clone()).collect();
        let _ = writeln!(out, "submanifold {sname} {{ tangent {} ; }}", names.join(", "));
    }

    out
}

fn display_of(v: &VectorField, frame: &[String]) -> String {
    v.display(frame)
}
