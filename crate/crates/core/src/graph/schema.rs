//! Structural validation of GraphML documents against the core GraphML
//! schema: element nesting and order, attribute sets and value types, and
//! the document-wide identity constraints (unique ids, edge endpoints and
//! data keys that resolve).

use std::collections::{BTreeMap, BTreeSet};

use roxmltree::{Document, Node};

use super::graphml::{GRAPHML_NS, XSI_NS};

const KEY_FOR: [&str; 8] = [
    "all",
    "graphml",
    "graph",
    "node",
    "edge",
    "hyperedge",
    "port",
    "endpoint",
];
const ATTR_TYPES: [&str; 6] = ["boolean", "int", "long", "float", "double", "string"];

fn is_nmtoken(s: &str) -> bool {
    !s.is_empty()
        && s.chars()
            .all(|c| c.is_alphanumeric() || matches!(c, '.' | '-' | '_' | ':' | '\u{B7}'))
}

fn is_boolean(s: &str) -> bool {
    matches!(s, "true" | "false" | "1" | "0")
}

fn is_nonneg_int(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

#[derive(Clone, Copy)]
enum Ty {
    NmToken,
    Boolean,
    NonNegInt,
    Str,
    OneOf(&'static [&'static str]),
}

struct Attr {
    name: &'static str,
    required: bool,
    ty: Ty,
}

const fn attr(name: &'static str, required: bool, ty: Ty) -> Attr {
    Attr { name, required, ty }
}

fn allowed_attrs(element: &str) -> &'static [Attr] {
    const PARSE_ORDER: &[&str] = &["nodesfirst", "adjacencylist", "free"];
    const PARSE_IDS: &[&str] = &["canonical", "free"];
    const EDGEDEFAULT: &[&str] = &["directed", "undirected"];
    const ENDPOINT_TYPE: &[&str] = &["in", "out", "undirected"];
    match element {
        "graphml" | "desc" | "default" => &[],
        "key" => {
            const A: &[Attr] = &[
                attr("id", true, Ty::NmToken),
                attr("for", false, Ty::OneOf(&KEY_FOR)),
                attr("attr.name", false, Ty::NmToken),
                attr("attr.type", false, Ty::OneOf(&ATTR_TYPES)),
            ];
            A
        }
        "graph" => {
            const A: &[Attr] = &[
                attr("id", false, Ty::NmToken),
                attr("edgedefault", true, Ty::OneOf(EDGEDEFAULT)),
                attr("parse.nodeids", false, Ty::OneOf(PARSE_IDS)),
                attr("parse.edgeids", false, Ty::OneOf(PARSE_IDS)),
                attr("parse.order", false, Ty::OneOf(PARSE_ORDER)),
                attr("parse.nodes", false, Ty::NonNegInt),
                attr("parse.edges", false, Ty::NonNegInt),
                attr("parse.maxindegree", false, Ty::NonNegInt),
                attr("parse.maxoutdegree", false, Ty::NonNegInt),
            ];
            A
        }
        "node" => {
            const A: &[Attr] = &[
                attr("id", true, Ty::NmToken),
                attr("parse.indegree", false, Ty::NonNegInt),
                attr("parse.outdegree", false, Ty::NonNegInt),
            ];
            A
        }
        "edge" => {
            const A: &[Attr] = &[
                attr("id", false, Ty::NmToken),
                attr("directed", false, Ty::Boolean),
                attr("source", true, Ty::NmToken),
                attr("target", true, Ty::NmToken),
                attr("sourceport", false, Ty::NmToken),
                attr("targetport", false, Ty::NmToken),
            ];
            A
        }
        "hyperedge" => {
            const A: &[Attr] = &[attr("id", false, Ty::NmToken)];
            A
        }
        "endpoint" => {
            const A: &[Attr] = &[
                attr("id", false, Ty::NmToken),
                attr("node", true, Ty::NmToken),
                attr("port", false, Ty::NmToken),
                attr("type", false, Ty::OneOf(ENDPOINT_TYPE)),
            ];
            A
        }
        "port" => {
            const A: &[Attr] = &[attr("name", true, Ty::NmToken)];
            A
        }
        "data" => {
            const A: &[Attr] = &[
                attr("key", true, Ty::NmToken),
                attr("id", false, Ty::NmToken),
            ];
            A
        }
        "locator" => {
            const A: &[Attr] = &[attr("href", true, Ty::Str)];
            A
        }
        _ => &[],
    }
}

/// Child sequence rules, as a list of stages. Each stage names the
/// elements it accepts and how many may appear.
#[derive(Clone, Copy)]
enum Max {
    One,
    Many,
}

fn content_model(element: &str) -> Option<&'static [(&'static [&'static str], Max)]> {
    use Max::*;
    Some(match element {
        "graphml" => &[
            (&["desc"], One),
            (&["key"], Many),
            (&["data", "graph"], Many),
        ],
        "key" => &[(&["desc"], One), (&["default"], One)],
        "graph" => &[
            (&["desc"], One),
            (&["data", "node", "edge", "hyperedge"], Many),
            (&["locator"], One),
        ],
        "node" => &[
            (&["desc"], One),
            (&["data", "port"], Many),
            (&["graph"], One),
            (&["locator"], One),
        ],
        "edge" => &[(&["desc"], One), (&["data"], Many), (&["graph"], One)],
        "hyperedge" => &[
            (&["desc"], One),
            (&["data", "endpoint"], Many),
            (&["graph"], One),
        ],
        "port" => &[(&["desc"], One), (&["data", "port"], Many)],
        "endpoint" => &[(&["desc"], One)],
        _ => return None,
    })
}

struct Checker<'a> {
    problems: Vec<String>,
    keys: BTreeMap<String, String>,
    node_ids: BTreeSet<String>,
    edge_ids: BTreeSet<String>,
    graph_ids: BTreeSet<String>,
    hyperedge_ids: BTreeSet<String>,
    data_refs: Vec<(String, &'a str, String)>,
    edge_ends: Vec<(String, String)>,
}

impl<'a> Checker<'a> {
    fn problem(&mut self, n: Node<'_, '_>, msg: String) {
        let at = n.document().text_pos_at(n.range().start);
        self.problems.push(format!("{}:{}: {msg}", at.row, at.col));
    }

    fn element(&mut self, n: Node<'a, 'a>) {
        let name = n.tag_name().name();
        if n.tag_name().namespace() != Some(GRAPHML_NS) {
            self.problem(
                n,
                format!("element `{name}` is not in the GraphML namespace"),
            );
            return;
        }
        self.attributes(n, name);

        let children: Vec<Node<'a, 'a>> = n.children().filter(|c| c.is_element()).collect();
        match content_model(name) {
            Some(model) => {
                let has_text = n
                    .children()
                    .any(|c| c.is_text() && !c.text().unwrap_or("").trim().is_empty());
                if has_text {
                    self.problem(n, format!("`{name}` may not contain text"));
                }
                self.sequence(name, model, &children);
            }
            None => {
                if name != "data" && !children.is_empty() {
                    self.problem(n, format!("`{name}` may only contain text"));
                }
            }
        }
        if name == "graph" && children.iter().any(|c| c.tag_name().name() == "locator") {
            let others = children
                .iter()
                .any(|c| !matches!(c.tag_name().name(), "desc" | "locator"));
            if others {
                self.problem(n, "`graph` with a `locator` may not hold content".into());
            }
        }
        if name == "node" && children.iter().any(|c| c.tag_name().name() == "locator") {
            let others = children
                .iter()
                .any(|c| !matches!(c.tag_name().name(), "desc" | "locator"));
            if others {
                self.problem(n, "`node` with a `locator` may not hold content".into());
            }
        }

        self.identities(n, name);
        for c in children {
            if content_model(name).is_some() {
                self.element(c);
            }
        }
    }

    fn attributes(&mut self, n: Node<'a, 'a>, name: &str) {
        let allowed = allowed_attrs(name);
        for a in n.attributes() {
            match a.namespace() {
                Some(XSI_NS) => continue,
                Some("http://www.w3.org/1999/xlink") if name == "locator" => continue,
                Some(ns) => {
                    self.problem(
                        n,
                        format!("`{name}` has foreign attribute `{{{ns}}}{}`", a.name()),
                    );
                    continue;
                }
                None => {}
            }
            let Some(rule) = allowed.iter().find(|s| s.name == a.name()) else {
                self.problem(n, format!("`{name}` has unknown attribute `{}`", a.name()));
                continue;
            };
            let v = a.value();
            let ok = match rule.ty {
                Ty::NmToken => is_nmtoken(v),
                Ty::Boolean => is_boolean(v),
                Ty::NonNegInt => is_nonneg_int(v),
                Ty::Str => true,
                Ty::OneOf(vals) => vals.contains(&v),
            };
            if !ok {
                self.problem(
                    n,
                    format!("`{name}` attribute `{}` has invalid value `{v}`", a.name()),
                );
            }
        }
        for rule in allowed.iter().filter(|s| s.required) {
            let present = if name == "locator" {
                n.attributes().any(|a| a.name() == rule.name)
            } else {
                n.attribute(rule.name).is_some()
            };
            if !present {
                self.problem(
                    n,
                    format!("`{name}` is missing required attribute `{}`", rule.name),
                );
            }
        }
    }

    fn sequence(&mut self, name: &str, model: &[(&[&str], Max)], children: &[Node<'a, 'a>]) {
        let mut stage = 0;
        let mut count = 0;
        for c in children {
            let cname = c.tag_name().name();
            loop {
                match model.get(stage) {
                    None => {
                        self.problem(*c, format!("`{cname}` is not allowed here inside `{name}`"));
                        return;
                    }
                    Some((names, max)) if names.contains(&cname) => {
                        if matches!(max, Max::One) && count == 1 {
                            stage += 1;
                            count = 0;
                            continue;
                        }
                        count += 1;
                        break;
                    }
                    Some(_) => {
                        stage += 1;
                        count = 0;
                    }
                }
            }
        }
    }

    fn identities(&mut self, n: Node<'a, 'a>, name: &str) {
        let unique = |set: &mut BTreeSet<String>, id: &str| set.insert(id.to_string());
        match name {
            "key" => {
                if let Some(id) = n.attribute("id") {
                    let target = n.attribute("for").unwrap_or("all").to_string();
                    if self.keys.insert(id.to_string(), target).is_some() {
                        self.problem(n, format!("duplicate key id `{id}`"));
                    }
                }
            }
            "node" => {
                if let Some(id) = n.attribute("id") {
                    if !unique(&mut self.node_ids, id) {
                        self.problem(n, format!("duplicate node id `{id}`"));
                    }
                }
            }
            "edge" => {
                if let Some(id) = n.attribute("id") {
                    if !unique(&mut self.edge_ids, id) {
                        self.problem(n, format!("duplicate edge id `{id}`"));
                    }
                }
                for end in ["source", "target"] {
                    if let Some(v) = n.attribute(end) {
                        let pos = n.document().text_pos_at(n.range().start);
                        self.edge_ends
                            .push((v.to_string(), format!("{}:{}", pos.row, pos.col)));
                    }
                }
            }
            "graph" => {
                if let Some(id) = n.attribute("id") {
                    if !unique(&mut self.graph_ids, id) {
                        self.problem(n, format!("duplicate graph id `{id}`"));
                    }
                }
            }
            "hyperedge" => {
                if let Some(id) = n.attribute("id") {
                    if !unique(&mut self.hyperedge_ids, id) {
                        self.problem(n, format!("duplicate hyperedge id `{id}`"));
                    }
                }
            }
            "data" => {
                if let (Some(key), Some(parent)) = (n.attribute("key"), n.parent_element()) {
                    let pos = n.document().text_pos_at(n.range().start);
                    self.data_refs.push((
                        key.to_string(),
                        parent.tag_name().name(),
                        format!("{}:{}", pos.row, pos.col),
                    ));
                }
            }
            _ => {}
        }
    }

    fn references(&mut self) {
        for (node, at) in std::mem::take(&mut self.edge_ends) {
            if !self.node_ids.contains(&node) {
                self.problems
                    .push(format!("{at}: edge refers to undeclared node `{node}`"));
            }
        }
        for (key, parent, at) in std::mem::take(&mut self.data_refs) {
            match self.keys.get(&key) {
                None => self
                    .problems
                    .push(format!("{at}: data refers to undeclared key `{key}`")),
                Some(target) if target != "all" && target != parent => self.problems.push(format!(
                    "{at}: key `{key}` is declared for `{target}` but used on `{parent}`"
                )),
                Some(_) => {}
            }
        }
    }
}

/// Checks that `text` is well-formed XML and a valid GraphML document.
/// Returns every problem found, each prefixed with `line:col`.
pub fn validate_graphml(text: &str) -> Result<(), Vec<String>> {
    let doc = Document::parse(text).map_err(|e| vec![format!("not well-formed XML: {e}")])?;
    let root = doc.root_element();
    if root.tag_name().name() != "graphml" || root.tag_name().namespace() != Some(GRAPHML_NS) {
        return Err(vec![format!(
            "root element must be `graphml` in namespace {GRAPHML_NS}"
        )]);
    }
    let mut c = Checker {
        problems: Vec::new(),
        keys: BTreeMap::new(),
        node_ids: BTreeSet::new(),
        edge_ids: BTreeSet::new(),
        graph_ids: BTreeSet::new(),
        hyperedge_ids: BTreeSet::new(),
        data_refs: Vec::new(),
        edge_ends: Vec::new(),
    };
    c.element(root);
    c.references();
    if c.problems.is_empty() {
        Ok(())
    } else {
        Err(c.problems)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc(body: &str) -> String {
        format!(
            "<?xml version=\"1.0\"?>\n<graphml xmlns=\"{GRAPHML_NS}\">\n\
             <key id=\"l\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n{body}</graphml>\n"
        )
    }

    #[test]
    fn accepts_minimal_documents() {
        assert_eq!(validate_graphml(&doc("")), Ok(()));
        let g = "<graph id=\"g\" edgedefault=\"directed\"><node id=\"a\"><data key=\"l\">x</data></node>\
                 <node id=\"b\"/><edge source=\"a\" target=\"b\"/></graph>";
        assert_eq!(validate_graphml(&doc(g)), Ok(()));
    }

    #[test]
    fn rejects_broken_xml() {
        let errs = validate_graphml("<graphml><graph></graphml>").unwrap_err();
        assert!(errs[0].starts_with("not well-formed XML"));
    }

    fn fails(body: &str, needle: &str) {
        let errs = validate_graphml(&doc(body)).unwrap_err();
        assert!(
            errs.iter().any(|e| e.contains(needle)),
            "expected `{needle}` in {errs:?}"
        );
    }

    #[test]
    fn structural_errors() {
        fails(
            "<graph id=\"g\"/>",
            "missing required attribute `edgedefault`",
        );
        fails(
            "<graph edgedefault=\"sideways\"/>",
            "invalid value `sideways`",
        );
        fails(
            "<graph edgedefault=\"directed\"><node id=\"a\"><graph edgedefault=\"directed\"/><data key=\"l\">x</data></node></graph>",
            "`data` is not allowed here",
        );
        fails(
            "<graph edgedefault=\"directed\"><node/></graph>",
            "missing required attribute `id`",
        );
        fails(
            "<graph edgedefault=\"directed\" colour=\"red\"/>",
            "unknown attribute `colour`",
        );
        fails(
            "<graph edgedefault=\"directed\">text</graph>",
            "may not contain text",
        );
        fails(
            "<graph edgedefault=\"directed\"/><key id=\"k\"/>",
            "`key` is not allowed here",
        );
    }

    #[test]
    fn identity_errors() {
        fails(
            "<graph edgedefault=\"directed\"><node id=\"a\"/><node id=\"a\"/></graph>",
            "duplicate node id `a`",
        );
        fails(
            "<graph edgedefault=\"directed\"><node id=\"a\"/><edge source=\"a\" target=\"zz\"/></graph>",
            "undeclared node `zz`",
        );
        fails(
            "<graph edgedefault=\"directed\"><node id=\"a\"><data key=\"nope\">x</data></node></graph>",
            "undeclared key `nope`",
        );
        fails(
            "<graph edgedefault=\"directed\"><node id=\"a\"/><edge source=\"a\" target=\"a\"><data key=\"l\">x</data></edge></graph>",
            "declared for `node` but used on `edge`",
        );
    }
}
