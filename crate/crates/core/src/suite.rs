//! Named verification suites over one Cartan type.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::ddops::{
    build_family, verify_action_theorem, verify_cover_cases, verify_values_at_covers, ActionCase,
    Coordinates, DividedDifferences, FlowUpFamily,
};
use crate::error::{Error, Result};
use crate::flow::flow_up_space;
use crate::gkm::{self, check_gkm, class_degree, dot_action, CohomologyClass};
use crate::poly::Polynomial;
use crate::props::{self, Check, Report};
use crate::repchar;
use crate::rootsystem::{HessenbergSet, RootSystem};
use crate::weyl::{WeylGroup, DEFAULT_WORD_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Roots,
    Weyl,
    Props,
    Family,
    Braid,
    Action,
    Confirm,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] = [
        Suite::Roots,
        Suite::Weyl,
        Suite::Props,
        Suite::Family,
        Suite::Braid,
        Suite::Action,
        Suite::Confirm,
    ];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Suite::Roots => "roots",
            Suite::Weyl => "weyl",
            Suite::Props => "props",
            Suite::Family => "family",
            Suite::Braid => "braid",
            Suite::Action => "action",
            Suite::Confirm => "confirm",
            Suite::All => "all",
        };
        f.write_str(s)
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Options {
    /// Skip the character computation for groups larger than 100 elements.
    pub quick: bool,
    pub word_cap: usize,
    /// Largest group for which every Hessenberg set is used by the order
    /// properties; larger groups use the full and highest-root sets.
    pub all_ideals_up_to: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            quick: false,
            word_cap: DEFAULT_WORD_CAP,
            all_ideals_up_to: 24,
        }
    }
}

/// A Weyl group with its lazily built family and operator table.
pub struct Context {
    pub group: WeylGroup,
    family: Option<FlowUpFamily>,
    operators: Option<DividedDifferences>,
}

impl Context {
    pub fn new(rs: RootSystem) -> Self {
        Context {
            group: WeylGroup::new(rs),
            family: None,
            operators: None,
        }
    }

    pub fn family(&mut self) -> Result<(&WeylGroup, &FlowUpFamily)> {
        if self.family.is_none() {
            self.family = Some(build_family(&self.group)?);
        }
        Ok((&self.group, self.family.as_ref().unwrap()))
    }

    pub fn operators(&mut self) -> Result<(&WeylGroup, &FlowUpFamily, &DividedDifferences)> {
        self.family()?;
        if self.operators.is_none() {
            let dd = DividedDifferences::new(&self.group, self.family.as_ref().unwrap())?;
            self.operators = Some(dd);
        }
        Ok((
            &self.group,
            self.family.as_ref().unwrap(),
            self.operators.as_ref().unwrap(),
        ))
    }
}

pub fn run(ctx: &mut Context, suite: Suite, opts: &Options) -> Result<Report> {
    let mut report = Report::default();
    match suite {
        Suite::All => {
            for s in Suite::EACH {
                report.extend(run(ctx, s, opts)?);
            }
        }
        Suite::Roots => report.checks.extend(root_checks(ctx.group.root_system())),
        Suite::Weyl => report.checks.extend(weyl_checks(&ctx.group)),
        Suite::Props => {
            let g = &ctx.group;
            let rs = g.root_system();
            let sets = if g.order() <= opts.all_ideals_up_to {
                rs.all_hessenberg_sets()
            } else {
                vec![rs.full_hessenberg(), rs.highest_root_hessenberg()]
            };
            report.checks.extend(props::order_properties(g, &sets));
            if g.order() <= 6 {
                report.push(v_flow_all_ideals(g)?);
            }
            let (g, fam) = ctx.family()?;
            report.push(v_flow_family(g, fam));
            report.push(p_at_v(g, fam));
            report.push(w_stability(g, fam));
        }
        Suite::Family => {
            let (g, fam, dd) = ctx.operators()?;
            report.checks.extend(family_checks(g, fam, dd));
        }
        Suite::Braid => {
            let (g, fam, dd) = ctx.operators()?;
            report.push(braid(g, dd, opts.word_cap)?);
            report.push(linearity(g, fam, dd)?);
        }
        Suite::Action => {
            let (g, fam) = ctx.family()?;
            report.push(action(g, fam)?);
        }
        Suite::Confirm => {
            let g = &ctx.group;
            if opts.quick && g.order() > 100 {
                let mut c = Check::new(
                    "fiber multiplicities",
                    g.root_system().cartan_type().to_string(),
                );
                c.notes.push("skipped in quick mode".into());
                report.push(c);
            } else {
                let (g, fam) = ctx.family()?;
                report.push(repchar::verify_confirm(g, fam));
            }
        }
    }
    Ok(report)
}

fn scope(g: &WeylGroup) -> String {
    g.root_system().cartan_type().to_string()
}

pub fn root_checks(rs: &RootSystem) -> Vec<Check> {
    let t = rs.cartan_type().to_string();
    let mut axioms = Check::new("root system axioms", &t);
    let roots = rs.roots();
    for a in roots {
        axioms.case(rs.root_id(&a.neg()).is_some(), || format!("-{a} missing"));
        for k in [2, 3] {
            let multiple = crate::rootsystem::Root(a.coords().iter().map(|c| c * k).collect());
            axioms.case(rs.root_id(&multiple).is_none(), || {
                format!("{k}{a} is a root")
            });
        }
        for b in roots {
            let ok = rs.reflect(a, b).is_ok_and(|r| rs.root_id(&r).is_some());
            axioms.case(ok, || format!("s_{a}({b}) is not a root"));
            axioms.case(rs.cartan_integer(a, b).is_ok(), || {
                format!("<{a},{b}> not integral")
            });
        }
    }
    let mut highest = Check::new("highest root dominates", &t);
    for a in rs.positive_roots() {
        highest.case(
            rs.dominance_leq(a, rs.highest_root()).unwrap_or(false),
            || format!("{a} is not below {}", rs.highest_root()),
        );
    }
    let mut ideals = Check::new("Hessenberg sets are ideal complements", &t);
    for h in rs.all_hessenberg_sets() {
        for a in h.ideal_ids() {
            for b in 0..rs.n_positive() {
                if rs.dominance_leq_ids(a, b) {
                    ideals.case(!h.contains(b), || {
                        format!("{} removed but {} kept", rs.root(a), rs.root(b))
                    });
                }
            }
        }
    }
    ideals
        .notes
        .push(format!("{} sets", rs.all_hessenberg_sets().len()));
    vec![axioms, highest, ideals]
}

pub fn weyl_checks(g: &WeylGroup) -> Vec<Check> {
    let rs = g.root_system();
    let t = scope(g);
    let mut lengths = Check::new("length equals inversion count", &t);
    for w in 0..g.order() {
        lengths.case(g.length(w) == g.inversions(w).len(), || g.name(w));
        lengths.case(g.from_word(g.element(w).word()).ok() == Some(w), || {
            format!("{} word mismatch", g.name(w))
        });
    }
    let w0 = g.longest();
    lengths.case(g.length(w0) == rs.n_positive(), || "longest length".into());

    let mut degrees = Check::new("in-degree equals h-length", &t);
    for h in [rs.full_hessenberg(), rs.highest_root_hessenberg()] {
        let graph = g.hessenberg_graph(&h);
        for w in 0..g.order() {
            degrees.case(graph.in_degree(w) == g.hessenberg_length(w, &h), || {
                g.name(w)
            });
        }
    }

    let mut bruhat = Check::new("Bruhat order is the full graph closure", &t);
    let from_graph = g.bruhat_graph().reachability();
    let from_covers = g.bruhat_order();
    for x in 0..g.order() {
        for y in 0..g.order() {
            bruhat.case(from_graph.leq(x, y) == from_covers.leq(x, y), || {
                format!("{} vs {}", g.name(x), g.name(y))
            });
        }
    }
    vec![lengths, degrees, bruhat]
}

/// Flow-up classes for every h in rank 2, including the free directions.
pub fn v_flow_all_ideals(g: &WeylGroup) -> Result<Check> {
    let rs = g.root_system();
    let mut c = Check::new("values at covers, every h", scope(g));
    let sets = rs.all_hessenberg_sets();
    for h in &sets {
        for x in 0..g.order() {
            let space = flow_up_space(g, h, x)?;
            let mut members = vec![space.particular.clone()];
            members.extend(space.kernel.iter().map(|k| space.particular.add(k)));
            for p in members {
                let failures = verify_cover_cases(g, h, &p, x);
                c.case(failures.is_empty(), || failures.join("; "));
            }
        }
    }
    c.scope = format!("{}, {} Hessenberg sets", c.scope, sets.len());
    Ok(c)
}

pub fn v_flow_family(g: &WeylGroup, fam: &FlowUpFamily) -> Check {
    let mut c = Check::new("values at covers, highest-root family", scope(g));
    let h = fam.hessenberg();
    let results: Vec<Vec<String>> = (0..g.order())
        .into_par_iter()
        .map(|w| verify_cover_cases(g, h, fam.class(w), w))
        .collect();
    for f in results {
        c.case(f.is_empty(), || f.join("; "));
    }
    c
}

pub fn p_at_v(g: &WeylGroup, fam: &FlowUpFamily) -> Check {
    let mut c = Check::new("closed form at covers", scope(g));
    let results: Vec<Vec<String>> = (0..g.order())
        .into_par_iter()
        .map(|w| verify_values_at_covers(g, fam, w))
        .collect();
    for f in results {
        c.case(f.is_empty(), || f.join("; "));
    }
    c
}

/// The dot action preserves the GKM ring: all of W on small groups, the
/// simple reflections (which generate W) otherwise.
pub fn w_stability(g: &WeylGroup, fam: &FlowUpFamily) -> Check {
    let mut c = Check::new("W-stability", scope(g));
    let acting: Vec<usize> = if g.order() <= 24 {
        (0..g.order()).collect()
    } else {
        (0..g.rank()).map(|i| g.simple(i)).collect()
    };
    let graph = &g.hessenberg_graph(fam.hessenberg());
    let bad: Vec<String> = acting
        .par_iter()
        .flat_map_iter(|&w| {
            fam.classes().iter().enumerate().filter_map(move |(x, p)| {
                let moved = dot_action(g, w, p);
                (!gkm::check_gkm_on(g, graph, &moved).is_empty())
                    .then(|| format!("{} . P^{}", g.name(w), g.name(x)))
            })
        })
        .collect();
    c.cases = acting.len() * g.order();
    c.failures = bad;
    c
}

pub fn family_checks(g: &WeylGroup, fam: &FlowUpFamily, dd: &DividedDifferences) -> Vec<Check> {
    let t = scope(g);
    let h = fam.hessenberg();

    let mut gkm_check = Check::new("GKM conditions", &t);
    for (w, p) in fam.classes().iter().enumerate() {
        let v = check_gkm(g, h, p);
        gkm_check.case(v.is_empty(), || {
            format!("P^{}: {} violations", g.name(w), v.len())
        });
    }

    let mut flow = Check::new("flow-up axioms", &t);
    let defects = fam.defects(g);
    flow.cases = g.order();
    flow.failures = defects
        .into_iter()
        .map(|(w, d)| format!("P^{}: {}", g.name(w), d.join("; ")))
        .collect();

    let mut degree = Check::new("degree equals gamma-length", &t);
    for w in 0..g.order() {
        let d = class_degree(fam.class(w));
        degree.case(d == Some(g.hessenberg_length(w, h)), || {
            format!("P^{}: {d:?}", g.name(w))
        });
    }

    let mut ends = Check::new("base and identity classes", &t);
    let w0 = g.longest();
    ends.case(fam.class(w0).support() == vec![w0], || {
        "P^w0 support".into()
    });
    ends.case(
        *fam.class(w0).value(w0) == gkm::root_product(g, &h.root_ids()),
        || "P^w0 value".into(),
    );
    ends.case(*fam.class(0) == CohomologyClass::constant(g, 1), || {
        "P^e is not 1".into()
    });

    let mut recursion = Check::new("d_i P^w = P^{s_i w} or 0", &t);
    for i in 0..g.rank() {
        for w in 0..g.order() {
            let u = g.simple_left(i, w);
            let got = dd.on_basis(i, w);
            let ok = if g.length(u) < g.length(w) {
                got == fam.class(u)
            } else {
                got.is_zero()
            };
            recursion.case(ok, || format!("d_{} P^{}", i + 1, g.name(w)));
        }
    }

    let mut unique = Check::new("descent candidates agree", &t);
    let stats = fam.stats();
    unique.cases = stats.comparisons;
    unique.notes.push(format!(
        "{} candidates, {} elements with several descents",
        stats.candidates, stats.multi_descent_elements
    ));

    vec![gkm_check, flow, degree, ends, recursion, unique]
}

pub fn braid(g: &WeylGroup, dd: &DividedDifferences, cap: usize) -> Result<Check> {
    let mut c = Check::new("reduced-word independence", scope(g));
    let results: Vec<Result<Vec<String>>> = (0..g.order())
        .into_par_iter()
        .map(|w| {
            let words = g.reduced_words(w, cap)?;
            let mut bad = Vec::new();
            for x in 0..g.order() {
                let p = Coordinates::from([(x, Polynomial::one(g.rank()))]);
                let first = dd.apply_word_coordinates(&words[0], &p);
                for word in &words[1..] {
                    if dd.apply_word_coordinates(word, &p) != first {
                        bad.push(format!(
                            "{}: words {:?} and {:?} on P^{}",
                            g.name(w),
                            words[0],
                            word,
                            g.name(x)
                        ));
                    }
                }
            }
            Ok(bad)
        })
        .collect();
    for r in results {
        c.cases += g.order();
        c.failures.extend(r?);
    }
    Ok(c)
}

/// `d_i(f P^x) = f d_i(P^x)` for a few fixed multipliers, and additivity on
/// pairs of basis classes.
pub fn linearity(g: &WeylGroup, fam: &FlowUpFamily, dd: &DividedDifferences) -> Result<Check> {
    let k = g.rank();
    let mut c = Check::new("R[a]-linearity", scope(g));
    let multipliers = [
        Polynomial::from_int(k, 3),
        Polynomial::var(k, 0),
        &Polynomial::var(k, k - 1) * &Polynomial::linear(&vec![1; k]),
    ];
    for i in 0..k {
        for x in 0..g.order() {
            for f in &multipliers {
                let lhs = dd.apply(g, fam, i, &fam.class(x).scale(f))?;
                let rhs = dd.on_basis(i, x).scale(f);
                c.case(lhs == rhs, || format!("d_{} ({f} P^{})", i + 1, g.name(x)));
            }
            let y = g.order() - 1 - x;
            let lhs = dd.apply(g, fam, i, &fam.class(x).add(fam.class(y)))?;
            let rhs = dd.on_basis(i, x).add(dd.on_basis(i, y));
            c.case(lhs == rhs, || {
                format!("d_{} (P^{} + P^{})", i + 1, g.name(x), g.name(y))
            });
        }
    }
    Ok(c)
}

pub fn action(g: &WeylGroup, fam: &FlowUpFamily) -> Result<Check> {
    let mut c = Check::new("simple reflection action", scope(g));
    let graph = g.hessenberg_graph(fam.hessenberg());
    let mut unequal = 0;
    for w in 0..g.order() {
        for i in 0..g.rank() {
            let r = verify_action_theorem(g, fam, &graph, i, w)?;
            if r.case == ActionCase::DeletedAscent && r.equals_family_member == Some(false) {
                unequal += 1;
            }
            c.case(r.passed, || {
                format!("{:?} at ({}, {}): {}", r.case, i + 1, g.name(w), r.detail)
            });
        }
    }
    c.notes.push(format!(
        "deleted ascents where s_i . P^w differs from P^(s_i w): {unequal}"
    ));
    Ok(c)
}

/// Every Hessenberg set listed by name, for reporting.
pub fn describe(rs: &RootSystem, h: &HessenbergSet) -> String {
    if h.is_full() {
        "full".into()
    } else if h.is_highest_root_set(rs) {
        "highest-root".into()
    } else {
        let ideal: Vec<String> = h.ideal(rs).iter().map(ToString::to_string).collect();
        format!("ideal={}", ideal.join(";"))
    }
}
