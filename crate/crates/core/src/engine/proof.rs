use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::resolve::{check_labels, resolution_reliability, MergeMode};
use super::store::{ClauseId, ClauseStore, InferenceRecord};
use super::ReliableClause;
use crate::algebra::{Signature, Term};
use crate::frontend;
use crate::logic::{Atom, Clause, Literal};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofNode {
    pub id: ClauseId,
    pub clause: ReliableClause,
    pub inference: Option<InferenceRecord>,
}

/// A resolution proof: the derivation DAG below a root clause. Leaves are
/// input clauses; every other node has exactly two premises.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofTree {
    root: ClauseId,
    nodes: BTreeMap<ClauseId, ProofNode>,
}

/// The most reliable live empty clause with its proof, if any.
/// Ties go to the earliest derived.
pub fn refute(store: &ClauseStore) -> Option<ProofTree> {
    let root = store.clauses().filter(|e| e.clause.clause().is_empty()).fold(
        None::<&super::store::StoredClause>,
        |best, e| match best {
            Some(b) if b.clause.reliability() >= e.clause.reliability() => Some(b),
            _ => Some(e),
        },
    )?;
    Some(ProofTree::extract(store, root.id))
}

impl ProofTree {
    /// Proof of clause `root` as recorded in `store`.
    ///
    /// # Panics
    /// If `root` was never added to `store`.
    pub fn extract(store: &ClauseStore, root: ClauseId) -> ProofTree {
        let mut nodes = BTreeMap::new();
        let mut stack = vec![root];
        while let Some(id) = stack.pop() {
            if nodes.contains_key(&id) {
                continue;
            }
            let entry = store.get(id).expect("proof references a stored clause");
            if let Some(rec) = &entry.inference {
                stack.extend(rec.premises);
            }
            nodes.insert(
                id,
                ProofNode {
                    id,
                    clause: entry.clause.clone(),
                    inference: entry.inference.clone(),
                },
            );
        }
        ProofTree { root, nodes }
    }

    pub fn root(&self) -> &ProofNode {
        &self.nodes[&self.root]
    }

    pub fn reliability(&self) -> &Term {
        self.root().clause.reliability()
    }

    /// Nodes in id order; premises always precede their conclusions.
    pub fn nodes(&self) -> impl Iterator<Item = &ProofNode> {
        self.nodes.values()
    }

    pub fn get(&self, id: ClauseId) -> Option<&ProofNode> {
        self.nodes.get(&id)
    }

    pub fn leaves(&self) -> impl Iterator<Item = &ProofNode> {
        self.nodes().filter(|n| n.inference.is_none())
    }

    pub fn inferences(&self) -> impl Iterator<Item = &InferenceRecord> {
        self.nodes().filter_map(|n| n.inference.as_ref())
    }

    /// Recomputes the root reliability by folding the reliability rule over
    /// the tree from the leaves.
    pub fn fold_reliability(&self) -> Term {
        fn go(tree: &ProofTree, id: ClauseId) -> Term {
            let node = &tree.nodes[&id];
            match &node.inference {
                None => node.clause.reliability().clone(),
                Some(rec) => {
                    let a1 = go(tree, rec.premises[0]);
                    let a2 = go(tree, rec.premises[1]);
                    resolution_reliability(&a1, &a2, &rec.b1, &rec.b2)
                }
            }
        }
        go(self, self.root)
    }

    /// Checks every step of the proof against the resolution rule.
    pub fn verify(&self, merge: MergeMode) -> Result<(), String> {
        for node in self.nodes() {
            let Some(rec) = &node.inference else { continue };
            let premise = |k: usize| {
                self.nodes
                    .get(&rec.premises[k])
                    .ok_or_else(|| format!("node {}: missing premise {}", node.id, rec.premises[k]))
            };
            let (p1, p2) = (premise(0)?, premise(1)?);
            if p1.id >= node.id || p2.id >= node.id {
                return Err(format!("node {}: premise is not older than its conclusion", node.id));
            }
            check_labels(&rec.b1, &rec.b2).map_err(|e| format!("node {}: {e}", node.id))?;
            let l1 = Literal::new(rec.atom.clone(), rec.b1.clone());
            let l2 = Literal::new(rec.atom.clone(), rec.b2.clone());
            let i = p1.clause.clause().literals().iter().position(|l| *l == l1);
            let j = p2.clause.clause().literals().iter().position(|l| *l == l2);
            let (Some(i), Some(j)) = (i, j) else {
                return Err(format!("node {}: resolved literals not in premises", node.id));
            };
            let r = super::resolve(&p1.clause, &p2.clause, i, j, merge).map_err(|e| e.to_string())?;
            if r.conclusion != node.clause {
                return Err(format!("node {}: conclusion does not match", node.id));
            }
        }
        Ok(())
    }

    pub fn to_text(&self, sig: &Signature) -> String {
        let mut out = String::new();
        for node in self.nodes() {
            let _ = write!(out, "{:>4}. {}", node.id, node.clause.show(sig));
            match &node.inference {
                None => out.push_str("  [input]"),
                Some(rec) => {
                    let _ = write!(
                        out,
                        "  [{}, {} on {}: {} / {}]",
                        rec.premises[0],
                        rec.premises[1],
                        rec.atom.show(sig),
                        sig.show(&rec.b1),
                        sig.show(&rec.b2)
                    );
                }
            }
            out.push('\n');
        }
        out
    }

    pub fn to_document(&self, sig: &Signature) -> ProofDocument {
        ProofDocument {
            root: self.root.0,
            reliability: sig.format_term(self.reliability()),
            nodes: self
                .nodes()
                .map(|n| ProofNodeDocument {
                    id: n.id.0,
                    clause: n.clause.clause().show(sig).to_string(),
                    reliability: sig.format_term(n.clause.reliability()),
                    premises: n
                        .inference
                        .as_ref()
                        .map(|r| r.premises.iter().map(|p| p.0).collect())
                        .unwrap_or_default(),
                    resolved_atom: n.inference.as_ref().map(|r| r.atom.show(sig).to_string()),
                    b1: n.inference.as_ref().map(|r| sig.format_term(&r.b1)),
                    b2: n.inference.as_ref().map(|r| sig.format_term(&r.b2)),
                })
                .collect(),
        }
    }

    pub fn to_json(&self, sig: &Signature) -> String {
        serde_json::to_string_pretty(&self.to_document(sig)).expect("proof documents serialize")
    }

    pub fn from_document(sig: &Signature, doc: &ProofDocument) -> Result<ProofTree, String> {
        let term = |s: &str| sig.parse_term(s).map_err(|e| e.to_string());
        let mut nodes = BTreeMap::new();
        for n in &doc.nodes {
            let id = ClauseId(n.id);
            let clause: Clause = frontend::parse_clause(sig, &n.clause).map_err(|e| e.to_string())?;
            let clause = ReliableClause::new(clause, term(&n.reliability)?).map_err(|e| e.to_string())?;
            let inference = match (n.premises.as_slice(), &n.resolved_atom, &n.b1, &n.b2) {
                ([], None, None, None) => None,
                (&[p1, p2], Some(atom), Some(b1), Some(b2)) => Some(InferenceRecord {
                    premises: [ClauseId(p1), ClauseId(p2)],
                    atom: match sig.parse_term(atom) {
                        Ok(t) => Atom::Const(t),
                        Err(_) => Atom::var(atom),
                    },
                    b1: term(b1)?,
                    b2: term(b2)?,
                    conclusion: id,
                }),
                _ => return Err(format!("node {}: inconsistent inference fields", n.id)),
            };
            nodes.insert(id, ProofNode { id, clause, inference });
        }
        let root = ClauseId(doc.root);
        if !nodes.contains_key(&root) {
            return Err(format!("root {root} is not a node"));
        }
        Ok(ProofTree { root, nodes })
    }

    pub fn from_json(sig: &Signature, json: &str) -> Result<ProofTree, String> {
        let doc: ProofDocument = serde_json::from_str(json).map_err(|e| e.to_string())?;
        ProofTree::from_document(sig, &doc)
    }

    /// Graphviz rendering: one box per clause, edges from premises to
    /// conclusions labelled with the resolved atom.
    pub fn to_dot(&self, sig: &Signature) -> String {
        let mut out = String::from("digraph proof {\n  node [shape=box];\n");
        for n in self.nodes() {
            let _ = writeln!(
                out,
                "  n{} [label=\"{}\\n@ {}\"];",
                n.id,
                escape(&n.clause.clause().show(sig).to_string()),
                escape(&sig.format_term(n.clause.reliability()))
            );
        }
        for n in self.nodes() {
            if let Some(rec) = &n.inference {
                let atom = escape(&rec.atom.show(sig).to_string());
                for p in rec.premises {
                    let _ = writeln!(out, "  n{} -> n{} [label=\"{}\"];", p, n.id, atom);
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Serialized form of a [`ProofTree`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofDocument {
    pub root: usize,
    pub reliability: String,
    pub nodes: Vec<ProofNodeDocument>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofNodeDocument {
    pub id: usize,
    pub clause: String,
    pub reliability: String,
    pub premises: Vec<usize>,
    pub resolved_atom: Option<String>,
    pub b1: Option<String>,
    pub b2: Option<String>,
}
