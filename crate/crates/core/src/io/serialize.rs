use std::fmt::Write;

use crate::algebra::presentation::Presentation;

/// Writes a presentation in the file format read by [`super::parse::parse_algebra_file`].
pub fn serialize_presentation(p: &Presentation) -> String {
    let q = &p.quiver;
    let mut s = String::new();
    if let Some(n) = &p.name {
        let _ = writeln!(s, "name = {n}");
    }
    let _ = writeln!(s, "field = {}", p.field.kind);
    let vs: Vec<String> = q.vertices.iter().map(i64::to_string).collect();
    let _ = writeln!(s, "vertices = [{}]", vs.join(", "));
    s.push_str("arrows:\n");
    for a in &q.arrows {
        let _ = writeln!(s, "  {}: {} -> {}", a.name, q.vertices[a.src], q.vertices[a.tgt]);
    }
    if !p.relations.is_empty() {
        s.push_str("relations:\n");
        for r in &p.relations {
            let _ = writeln!(s, "  {}", r.display(q));
        }
    }
    if p.field.lambda.is_some() || p.field.lambda_generic {
        s.push_str("params:\n");
        if let Some(l) = &p.field.lambda {
            let _ = writeln!(s, "  lambda = {l}");
        }
        if p.field.lambda_generic {
            s.push_str("  generic = lambda\n");
        }
    }
    s
}
