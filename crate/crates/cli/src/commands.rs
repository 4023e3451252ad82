use std::collections::BTreeMap;
use std::fmt::Write as _;

use hessdd::gkm::{class_degree, combine, expand_in_basis};
use hessdd::repchar::{self, integral_decomposition, reflection_character, trivial_character};
use hessdd::suite::{self, describe, Context, Options};
use hessdd::{build_family, Error, HessenbergSet, Polynomial, Root, RootSystem, Suite, WeylGroup};
use serde::Serialize;

use crate::render::{poly, table, variables};
use crate::{Basis, Failure, Format};

type Out = Result<String, Failure>;

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn no_dot(cmd: &str) -> Failure {
    Failure::Usage(format!("--format dot is only valid for graph, not {cmd}"))
}

#[derive(Serialize)]
struct RootsJson {
    #[serde(rename = "type")]
    ty: String,
    cartan_matrix: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    positive_roots: Vec<Vec<i64>>,
    highest_root: Vec<i64>,
}

pub fn roots(rs: &RootSystem, format: Format) -> Out {
    match format {
        Format::Dot => Err(no_dot("roots")),
        Format::Json => Ok(json(&RootsJson {
            ty: rs.cartan_type().to_string(),
            cartan_matrix: rs.cartan_matrix().to_vec(),
            symmetrizer: rs.symmetrizer().to_vec(),
            positive_roots: rs.positive_roots().iter().map(|r| r.0.clone()).collect(),
            highest_root: rs.highest_root().0.clone(),
        })),
        Format::Table => {
            let mut out = format!("type {}\ncartan matrix\n", rs.cartan_type());
            for row in rs.cartan_matrix() {
                let cells: Vec<String> = row.iter().map(|c| format!("{c:>3}")).collect();
                let _ = writeln!(out, "{}", cells.join(""));
            }
            let mut rows = vec![vec!["root".to_string(), "height".to_string()]];
            for r in rs.positive_roots() {
                rows.push(vec![r.to_string(), r.height().to_string()]);
            }
            out.push_str(&table(&rows));
            let _ = writeln!(out, "highest root {}", rs.highest_root());
            Ok(out)
        }
    }
}

pub fn parse_hessenberg(rs: &RootSystem, s: &str) -> Result<HessenbergSet, Failure> {
    match s {
        "full" => Ok(rs.full_hessenberg()),
        "highest-root" => Ok(rs.highest_root_hessenberg()),
        _ => {
            let list = s.strip_prefix("ideal=").ok_or_else(|| {
                Failure::Usage(format!(
                    "hessenberg must be full, highest-root or ideal=..., got {s:?}"
                ))
            })?;
            let removed = list
                .split(';')
                .filter(|p| !p.trim().is_empty())
                .map(|p| p.parse::<Root>())
                .collect::<Result<Vec<_>, Error>>()?;
            Ok(rs.make_hessenberg(&removed)?)
        }
    }
}

#[derive(Serialize)]
struct GraphJson {
    #[serde(rename = "type")]
    ty: String,
    hessenberg: String,
    vertices: Vec<VertexJson>,
    edges: Vec<EdgeJson>,
}

#[derive(Serialize)]
struct VertexJson {
    name: String,
    length: usize,
    h_length: usize,
}

#[derive(Serialize)]
struct EdgeJson {
    source: String,
    target: String,
    root: Vec<i64>,
}

pub fn graph(rs: RootSystem, hessenberg: &str, format: Format) -> Out {
    let h = parse_hessenberg(&rs, hessenberg)?;
    let g = WeylGroup::new(rs);
    let rs = g.root_system();
    let graph = g.hessenberg_graph(&h);
    let edges: Vec<(String, String, &Root)> = graph
        .edges()
        .iter()
        .map(|e| (g.name(e.source), g.name(e.target), rs.root(e.root)))
        .collect();
    match format {
        Format::Json => Ok(json(&GraphJson {
            ty: rs.cartan_type().to_string(),
            hessenberg: describe(rs, &h),
            vertices: (0..g.order())
                .map(|w| VertexJson {
                    name: g.name(w),
                    length: g.length(w),
                    h_length: g.hessenberg_length(w, &h),
                })
                .collect(),
            edges: edges
                .iter()
                .map(|(s, t, r)| EdgeJson {
                    source: s.clone(),
                    target: t.clone(),
                    root: r.0.clone(),
                })
                .collect(),
        })),
        Format::Dot => {
            let mut out = format!(
                "digraph \"{} {}\" {{\n  rankdir=BT;\n",
                rs.cartan_type(),
                describe(rs, &h)
            );
            for w in 0..g.order() {
                let _ = writeln!(out, "  \"{0}\" [label=\"{0}\"];", g.name(w));
            }
            for (s, t, r) in &edges {
                let _ = writeln!(out, "  \"{s}\" -> \"{t}\" [label=\"{r}\"];");
            }
            out.push_str("}\n");
            Ok(out)
        }
        Format::Table => {
            let mut rows = vec![vec!["source".into(), "target".into(), "root".into()]];
            rows.extend(
                edges
                    .iter()
                    .map(|(s, t, r)| vec![s.clone(), t.clone(), r.to_string()]),
            );
            let mut out = format!(
                "{} {}: {} vertices, {} edges\n",
                rs.cartan_type(),
                describe(rs, &h),
                g.order(),
                edges.len()
            );
            out.push_str(&table(&rows));
            Ok(out)
        }
    }
}

#[derive(Serialize)]
pub struct ClassesJson {
    #[serde(rename = "type")]
    pub ty: String,
    pub hessenberg: String,
    pub variables: Vec<String>,
    pub elements: Vec<String>,
    pub classes: Vec<ClassJson>,
}

#[derive(Serialize)]
pub struct ClassJson {
    pub w: String,
    pub degree: Option<usize>,
    pub values: BTreeMap<String, String>,
}

pub fn classes(rs: RootSystem, basis: Basis, format: Format, factor: bool) -> Out {
    if basis == Basis::T && rs.cartan_type().family != hessdd::Family::A {
        return Err(Failure::Usage(
            "--basis t is only available in type A".into(),
        ));
    }
    let g = WeylGroup::new(rs);
    let fam = build_family(&g)?;
    let rs = g.root_system();
    let names: Vec<String> = (0..g.order()).map(|w| g.name(w)).collect();
    match format {
        Format::Dot => Err(no_dot("classes")),
        Format::Json => Ok(json(&ClassesJson {
            ty: rs.cartan_type().to_string(),
            hessenberg: describe(rs, fam.hessenberg()),
            variables: variables(rs, basis),
            elements: names.clone(),
            classes: fam
                .classes()
                .iter()
                .enumerate()
                .map(|(w, c)| ClassJson {
                    w: names[w].clone(),
                    degree: class_degree(c),
                    values: (0..g.order())
                        .map(|y| (names[y].clone(), poly(rs, c.value(y), basis, false)))
                        .collect(),
                })
                .collect(),
        })),
        Format::Table => {
            let mut header = vec!["P^v(w)".to_string()];
            header.extend(names.iter().cloned());
            let mut rows = vec![header];
            for (w, c) in fam.classes().iter().enumerate() {
                let mut row = vec![format!("P^{}", names[w])];
                row.extend((0..g.order()).map(|y| poly(rs, c.value(y), basis, factor)));
                rows.push(row);
            }
            Ok(table(&rows))
        }
    }
}

#[derive(Serialize)]
struct CheckJson {
    #[serde(rename = "type")]
    ty: String,
    suite: String,
    passed: bool,
    checks: Vec<CheckEntry>,
}

#[derive(Serialize)]
struct CheckEntry {
    name: String,
    scope: String,
    cases: usize,
    passed: bool,
    failures: Vec<String>,
    notes: Vec<String>,
}

pub fn check(rs: RootSystem, suite_name: Suite, quick: bool, format: Format) -> Out {
    let ty = rs.cartan_type().to_string();
    let mut ctx = Context::new(rs);
    let opts = Options {
        quick,
        ..Options::default()
    };
    let report = suite::run(&mut ctx, suite_name, &opts)?;
    let out = match format {
        Format::Dot => return Err(no_dot("check")),
        Format::Json => json(&CheckJson {
            ty,
            suite: suite_name.to_string(),
            passed: report.passed(),
            checks: report
                .checks
                .iter()
                .map(|c| CheckEntry {
                    name: c.name.clone(),
                    scope: c.scope.clone(),
                    cases: c.cases,
                    passed: c.passed(),
                    failures: c.failures.clone(),
                    notes: c.notes.clone(),
                })
                .collect(),
        }),
        Format::Table => {
            let mut out = String::new();
            for c in &report.checks {
                let _ = writeln!(out, "{c}");
                for n in &c.notes {
                    let _ = writeln!(out, "    {n}");
                }
            }
            for (name, f) in report.failures() {
                let _ = writeln!(out, "FAILURE\t{name}\t{f}");
            }
            let verdict = if report.passed() {
                "all checks passed"
            } else {
                "some checks failed"
            };
            let _ = writeln!(out, "{verdict}");
            out
        }
    };
    if report.passed() {
        Ok(out)
    } else {
        Err(Failure::Checks(out))
    }
}

#[derive(Serialize)]
struct CharacterJson {
    #[serde(rename = "type")]
    ty: String,
    classes: Vec<ClassRow>,
    multiplicities: Option<(i64, i64)>,
    predicted: Option<(i64, i64)>,
}

#[derive(Serialize)]
struct ClassRow {
    representative: String,
    size: usize,
    fiber: String,
    reflection: String,
}

pub fn character(rs: RootSystem, format: Format) -> Out {
    if format == Format::Dot {
        return Err(no_dot("character"));
    }
    let simply_laced = rs.cartan_type().is_simply_laced();
    let g = WeylGroup::new(rs);
    let fam = build_family(&g)?;
    let chi = repchar::fiber_character(&g, &fam)?;
    let refl = reflection_character(&g);
    let m = integral_decomposition(&chi, &[refl.clone(), trivial_character(&g)]);
    let multiplicities = match m {
        Ok(v) => Some((v[0], v[1])),
        Err(e) if simply_laced => return Err(e.into()),
        Err(_) => None,
    };
    let predicted = simply_laced.then(|| repchar::expected_multiplicities(&g));
    let rows: Vec<ClassRow> = g
        .conjugacy_classes()
        .iter()
        .map(|c| ClassRow {
            representative: g.name(c[0]),
            size: c.len(),
            fiber: chi.values[c[0]].to_string(),
            reflection: refl.values[c[0]].to_string(),
        })
        .collect();
    let ty = g.root_system().cartan_type().to_string();
    if format == Format::Json {
        return Ok(json(&CharacterJson {
            ty,
            classes: rows,
            multiplicities,
            predicted,
        }));
    }
    let mut t = vec![vec![
        "class".to_string(),
        "size".to_string(),
        "fiber".to_string(),
        "reflection".to_string(),
    ]];
    t.extend(rows.iter().map(|r| {
        vec![
            r.representative.clone(),
            r.size.to_string(),
            r.fiber.clone(),
            r.reflection.clone(),
        ]
    }));
    let mut out = format!("type {ty}\n");
    out.push_str(&table(&t));
    match multiplicities {
        Some((v, r)) => {
            let _ = writeln!(out, "m_V = {v}, m_R = {r}");
        }
        None => out.push_str("fiber is not a sum of reflection and trivial representations\n"),
    }
    if let Some((v, r)) = predicted {
        let _ = writeln!(out, "predicted m_V = {v}, m_R = {r}");
    }
    Ok(out)
}

#[derive(Serialize)]
struct ExpandJson {
    #[serde(rename = "type")]
    ty: String,
    u: String,
    v: String,
    coefficients: BTreeMap<String, String>,
}

pub fn expand(rs: RootSystem, u: &str, v: &str, format: Format) -> Out {
    if format == Format::Dot {
        return Err(no_dot("expand"));
    }
    let g = WeylGroup::new(rs);
    let (u, v) = (g.parse_element(u)?, g.parse_element(v)?);
    let fam = build_family(&g)?;
    let product = fam.class(u).mul(fam.class(v));
    let coeffs = expand_in_basis(&g, fam.hessenberg(), &product, fam.classes())?;
    if combine(&g, &coeffs, fam.classes()) != product {
        return Err(Failure::Integrity(Error::NotInSpan(
            "recombination does not reproduce the product".into(),
        )));
    }
    let nonzero: Vec<(String, &Polynomial)> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(w, c)| (g.name(w), c))
        .collect();
    if format == Format::Json {
        return Ok(json(&ExpandJson {
            ty: g.root_system().cartan_type().to_string(),
            u: g.name(u),
            v: g.name(v),
            coefficients: nonzero
                .iter()
                .map(|(w, c)| (w.clone(), c.render("a")))
                .collect(),
        }));
    }
    let mut out = format!("P^{} * P^{} =\n", g.name(u), g.name(v));
    if nonzero.is_empty() {
        out.push_str("  0\n");
    }
    for (w, c) in nonzero {
        let _ = writeln!(out, "  ({}) P^{w}", c.render("a"));
    }
    Ok(out)
}
