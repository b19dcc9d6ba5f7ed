//! Text and Graphviz renderings of stored objects.

use std::collections::HashSet;
use std::fmt::Write;

use fibrancy::SSet;

/// Nondegenerate edges as `(source, target, simplex)` with source `d₁` and target `d₀`.
pub fn edges(x: &SSet) -> Vec<(usize, usize, usize)> {
    if x.dim() == 0 {
        return Vec::new();
    }
    x.nondegenerate(1).map(|e| (x.face(1, 1, e), x.face(1, 0, e), e)).collect()
}

/// Edges `u → v` for which some edge `v → u` exists and `u ≠ v`.
pub fn iso_edges(x: &SSet) -> HashSet<usize> {
    let es = edges(x);
    let dirs: HashSet<(usize, usize)> = es.iter().map(|&(s, t, _)| (s, t)).collect();
    es.iter().filter(|&&(s, t, _)| s != t && dirs.contains(&(t, s))).map(|&(_, _, e)| e).collect()
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn dot(name: &str, x: &SSet) -> String {
    let mut out = String::new();
    let iso = iso_edges(x);
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    for v in 0..x.count(0) {
        writeln!(out, "  v{v} [label={}];", quote(&x.label(0, v).to_string())).unwrap();
    }
    for (s, t, e) in edges(x) {
        let label = quote(&x.label(1, e).to_string());
        if iso.contains(&e) {
            writeln!(out, "  v{s} -> v{t} [label={label}, class=\"iso\", color=\"black:invis:black\"];").unwrap();
        } else {
            writeln!(out, "  v{s} -> v{t} [label={label}];").unwrap();
        }
    }
    out.push_str("}\n");
    out
}

pub fn text(name: &str, x: &SSet) -> String {
    let mut out = String::new();
    writeln!(out, "{name}: truncated at {}", x.dim()).unwrap();
    for n in 0..=x.dim() {
        let nondeg: Vec<String> = x.nondegenerate(n).map(|k| x.label(n, k).to_string()).collect();
        writeln!(out, "  dim {n}: {} simplices, {} nondegenerate", x.count(n), nondeg.len()).unwrap();
        if !nondeg.is_empty() {
            writeln!(out, "    {}", nondeg.join(" ")).unwrap();
        }
    }
    out
}
