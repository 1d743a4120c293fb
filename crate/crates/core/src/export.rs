//! Macaulay2 scripts that recompute a toric ideal independently.

use crate::graph::Graph;

/// A script defining `I = ker(R -> S)` for `e_i -> v_j v_k` and printing
/// its Gröbner basis.
pub fn macaulay2_script(g: &Graph) -> String {
    let labels = g.labels();
    let edge_vars: Vec<String> = labels.iter().map(|l| format!("e{l}")).collect();
    let images: Vec<String> = g.edges().iter().map(|e| format!("v{}*v{}", e.u, e.v)).collect();
    let mut out = String::new();
    out.push_str(&format!("R = QQ[{}];\n", edge_vars.join(",")));
    out.push_str(&format!("S = QQ[v1..v{}];\n", g.vertex_count().max(1)));
    out.push_str(&format!("f = map(S, R, {{{}}});\n", images.join(", ")));
    out.push_str("I = ker f;\n");
    out.push_str("print toString gens gb I;\n");
    out
}
