//! ASCII Satake diagrams: `o` white, `*` black, `x` under crossed nodes,
//! ε-pairs listed in brackets. Branch nodes hang below the main line.

use super::RealForm;
use crate::bits::NodeSet;
use crate::rootspace::RootSystem;

const STEP: usize = 4;

/// Farthest node from `from` inside `comp`, smallest index on ties, with
/// the path leading to it.
fn farthest(rs: &RootSystem, comp: NodeSet, from: usize) -> Vec<usize> {
    let rank = rs.rank();
    let mut prev = vec![usize::MAX; rank];
    let mut dist = vec![usize::MAX; rank];
    dist[from] = 0;
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        for v in rs.neighbours(u).intersection(comp).iter() {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                prev[v] = u;
                queue.push_back(v);
            }
        }
    }
    let end = comp
        .iter()
        .max_by_key(|&v| (dist[v], std::cmp::Reverse(v)))
        .unwrap_or(from);
    let mut path = vec![end];
    while *path.last().unwrap() != from {
        path.push(prev[*path.last().unwrap()]);
    }
    path.reverse();
    path
}

fn bond(rs: &RootSystem, a: usize, b: usize) -> &'static str {
    match (rs.cartan(a, b), rs.cartan(b, a)) {
        (-1, -1) => "---",
        (-2, -1) => "=>=",
        (-1, -2) => "=<=",
        (-3, -1) => "3>-",
        (-1, -3) => "-<3",
        _ => "???",
    }
}

fn put(line: &mut Vec<char>, col: usize, s: &str) {
    for (k, ch) in s.chars().enumerate() {
        if line.len() <= col + k {
            line.resize(col + k + 1, ' ');
        }
        line[col + k] = ch;
    }
}

fn finish(line: Vec<char>) -> String {
    line.into_iter().collect::<String>().trim_end().to_string()
}

/// Renders the Satake diagram of `form` with the nodes of `phi` crossed.
pub fn render_diagram(form: &RealForm, phi: NodeSet) -> String {
    let rs = form.rs();
    let all = NodeSet::all(rs.rank());
    let mut done = NodeSet::EMPTY;
    let mut blocks = Vec::new();
    for start in 0..rs.rank() {
        if done.contains(start) {
            continue;
        }
        let comp = rs.component(NodeSet::single(start), all);
        done = done.union(comp);
        let a = *farthest(rs, comp, start).last().unwrap();
        let mut path = farthest(rs, comp, a);
        if path.first() > path.last() {
            path.reverse();
        }
        let glyph = |v: usize| if form.black().contains(v) { '*' } else { 'o' };
        let (mut labels, mut nodes, mut crosses) = (Vec::new(), Vec::new(), Vec::new());
        let col = |k: usize| STEP * k;
        for (k, &v) in path.iter().enumerate() {
            put(&mut labels, col(k), &(v + 1).to_string());
            put(&mut nodes, col(k), &glyph(v).to_string());
            if k + 1 < path.len() {
                put(&mut nodes, col(k) + 1, bond(rs, v, path[k + 1]));
            }
            if phi.contains(v) {
                put(&mut crosses, col(k), "x");
            }
        }
        let mut lines = vec![finish(labels), finish(nodes), finish(crosses)];
        let on_path: NodeSet = path.iter().fold(NodeSet::EMPTY, |s, &v| s.with(v));
        for v in comp.difference(on_path).iter() {
            let anchor = path.iter().position(|&u| rs.adjacent(u, v)).unwrap_or(0);
            let mut bar = Vec::new();
            put(&mut bar, col(anchor), "|");
            let mut node = Vec::new();
            put(&mut node, col(anchor), &format!("{} {}", glyph(v), v + 1));
            if phi.contains(v) {
                put(&mut node, col(anchor) + 4 + (v + 1).to_string().len(), "x");
            }
            lines.push(finish(bar));
            lines.push(finish(node));
        }
        while lines.last().is_some_and(|l| l.is_empty()) {
            lines.pop();
        }
        blocks.push(lines.join("\n"));
    }
    let mut out = blocks.join("\n\n");
    let arcs: Vec<String> = (0..rs.rank())
        .filter_map(|a| {
            let b = form.epsilon(a).ok()?;
            (a < b).then(|| format!("[{} {}]", a + 1, b + 1))
        })
        .collect();
    if !arcs.is_empty() {
        out.push_str("\narcs: ");
        out.push_str(&arcs.join(" "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::satake::build_form_str;

    #[test]
    fn su13_with_cross() {
        let f = build_form_str("AIV l=3").unwrap();
        let d = render_diagram(&f, NodeSet::from_labels(&[2]));
        assert_eq!(d, "1   2   3\no---*---o\n    x\narcs: [1 3]");
    }

    #[test]
    fn e6_branch_below() {
        let f = build_form_str("EIII").unwrap();
        let d = render_diagram(&f, NodeSet::EMPTY);
        assert!(d.contains("o---*---*---*---o"), "{d}");
        assert!(d.contains("|\n        o 6"), "{d}");
    }
}
