use super::{Graph, GraphError};

/// Canonical string for a tree: parenthesised AHU encoding rooted at the
/// centre (the smaller of the two encodings when the tree is bicentral).
/// Two trees get the same code iff they are isomorphic.
pub fn canonical_tree_code(g: &Graph) -> Result<String, GraphError> {
    if !g.is_tree() {
        return Err(GraphError::NotATree);
    }
    let centres = centres(g);
    Ok(centres
        .into_iter()
        .map(|c| rooted_code(g, c))
        .min()
        .expect("a tree has a centre"))
}

fn centres(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            deg[v] = 0;
            for w in g.neighbors(v) {
                if deg[w] > 1 {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn rooted_code(g: &Graph, root: usize) -> String {
    fn go(g: &Graph, v: usize, parent: usize) -> String {
        let mut kids: Vec<String> = g
            .neighbors(v)
            .filter(|&w| w != parent)
            .map(|w| go(g, w, v))
            .collect();
        kids.sort_unstable();
        let mut s = String::with_capacity(2 + kids.iter().map(String::len).sum::<usize>());
        s.push('(');
        for k in kids {
            s.push_str(&k);
        }
        s.push(')');
        s
    }
    go(g, root, usize::MAX)
}

/// Rebuilds a tree from its code, numbering vertices in preorder from the root.
pub fn tree_from_code(code: &str) -> Result<Graph, GraphError> {
    let err = |message: &str| GraphError::Parse {
        format: "tree-code",
        location: format!("{code:?}"),
        message: message.into(),
    };
    let mut stack: Vec<usize> = Vec::new();
    let mut edges = Vec::new();
    let mut next = 0;
    let mut closed_root = false;
    for ch in code.chars() {
        if closed_root {
            return Err(err("text after the root closes"));
        }
        match ch {
            '(' => {
                if let Some(&p) = stack.last() {
                    edges.push((p, next));
                }
                stack.push(next);
                next += 1;
            }
            ')' => {
                stack.pop().ok_or_else(|| err("unbalanced ')'"))?;
                closed_root = stack.is_empty();
            }
            _ => return Err(err("unexpected character")),
        }
    }
    if !closed_root {
        return Err(err("unbalanced '('"));
    }
    Graph::new(next, edges)
}

#[cfg(test)]
mod tests {
    use super::super::construct::*;
    use super::*;

    #[test]
    fn isomorphic_paths_share_a_code() {
        let p = path(3);
        let q = Graph::new(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(
            canonical_tree_code(&p).unwrap(),
            canonical_tree_code(&q).unwrap()
        );
        assert_ne!(
            canonical_tree_code(&p).unwrap(),
            canonical_tree_code(&star(3)).unwrap()
        );
    }

    #[test]
    fn rejects_non_trees() {
        assert_eq!(canonical_tree_code(&cycle(4)), Err(GraphError::NotATree));
    }

    #[test]
    fn decode_roundtrip() {
        for g in [
            path(5),
            star(4),
            spider(&[1, 2, 3]),
            Graph::new(1, []).unwrap(),
        ] {
            let code = canonical_tree_code(&g).unwrap();
            let h = tree_from_code(&code).unwrap();
            assert_eq!(canonical_tree_code(&h).unwrap(), code);
        }
        assert!(tree_from_code("(()").is_err());
        assert!(tree_from_code("()()").is_err());
    }
}
