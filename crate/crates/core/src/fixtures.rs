//! Small named graphs used in examples, tests and documentation.

use crate::graph::{parse_edge_list, Graph};

pub const THREE_ROUTES: &str = "\
x w1
w1 w2
w2 w3
w3 t
u6 u2
u6 u5
u4 u2
u5 u2
u4 u5
u1 u4
u1 u5
x u1
x w4
u2 u3
t u3
w4 t
";

/// Three parallel routes between `x` and `t`, one of
/// which contains a rigid K4 core.
pub fn three_routes() -> Graph {
    parse_edge_list(THREE_ROUTES).expect("fixture parses")
}

/// `three_routes` extended with extra blocks hanging off `x` and `y`.
pub fn three_routes_with_blocks() -> Graph {
    let mut text = String::from(THREE_ROUTES);
    text.push_str(
        "s v1\ns y\ns v2\nv1 y\nv1 v2\nv1 x\ny x\nw' x\ny z\ny z'\nz' z\nv2 x\n",
    );
    parse_edge_list(&text).expect("fixture parses")
}

/// Triangular prism: triangles a1a2a3 and b1b2b3 joined by rungs ai-bi.
pub fn prism() -> Graph {
    parse_edge_list("a1 a2\na2 a3\na3 a1\nb1 b2\nb2 b3\nb3 b1\na1 b1\na2 b2\na3 b3\n")
        .expect("fixture parses")
}

pub fn complete(n: u32) -> Graph {
    let mut text = String::new();
    for i in 0..n {
        for j in i + 1..n {
            text.push_str(&format!("v{i} v{j}\n"));
        }
    }
    parse_edge_list(&text).expect("fixture parses")
}

pub fn cycle(n: u32) -> Graph {
    let mut text = String::new();
    for i in 0..n {
        text.push_str(&format!("c{} c{}\n", i, (i + 1) % n));
    }
    parse_edge_list(&text).expect("fixture parses")
}

/// `s` and `t` joined by three two-edge paths through w1, w2, w3.
pub fn theta() -> Graph {
    parse_edge_list("s w1\nw1 t\ns w2\nw2 t\ns w3\nw3 t\n").expect("fixture parses")
}

/// The 4-cycle s-a-t-b.
pub fn square() -> Graph {
    parse_edge_list("s a\na t\nt b\nb s\n").expect("fixture parses")
}
