use std::path::Path;
use std::sync::Arc;

use brace_forge::algebra::{algebra_rb_orbits, enumerate_algebra_rb, group_rb_from_matrix, RbMatrix};
use brace_forge::brace::{
    annihilator, brace_from_rb, brace_from_rb_neg1, brace_isomorphic, enumerate_braces, is_ideal,
    lambda_analysis, left_center, parity_brace_window, quotient_brace, semidirect_brace, socle,
    star_and_series, verify_brace, SkewBrace,
};
use brace_forge::catalog::Catalog;
use brace_forge::embedding::{build_tilde, recover_rb_complete, verify_embedding, zeta_series};
use brace_forge::group::{automorphisms, structure_report, FiniteGroup, GroupMap, Subgroup};
use brace_forge::json::{BraceJson, GroupJson, OperatorJson};
use brace_forge::multibrace::{build_multibrace, verify_multibrace, MultiBrace};
use brace_forge::report::{Check, Report};
use brace_forge::rota_baxter::{
    aut_conj, classify_rb_orbits, derived_circle_group, enumerate_rb_maps, enumerate_rb_operators,
    hom_to_abelian, rb_criteria, semidirect, splitting, tilde, tilde_refined_count, triangular, weight_swap,
    RbOperator, Weight,
};
use brace_forge::worked::{ReproConfig, Target};
use brace_forge::ybe::{
    direct_rb_solution, rack_form, rack_iff_sweep, solution_from_brace, solution_from_rack, solution_from_rb,
    verify_solution, Rack, YbeSolution,
};
use brace_forge::{Bounds, Error, Result};
use serde::de::DeserializeOwned;
use serde::Deserialize;

use crate::args::*;
use crate::output::{Output, Table};

pub struct Ctx {
    pub catalog: Catalog,
    pub bounds: Bounds,
    pub max_order: Option<usize>,
    pub seed: u64,
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

impl Ctx {
    fn group(&self, name: &str) -> Result<Arc<FiniteGroup>> {
        self.catalog.resolve(name)
    }

    fn source(&self, s: &Source) -> Result<Arc<FiniteGroup>> {
        match (&s.group, &s.input) {
            (Some(g), None) => self.group(g),
            (None, Some(p)) => Ok(Arc::new(read_json::<GroupJson>(p)?.into_group()?)),
            _ => Err(Error::Parse("give exactly one of --group and --in".into())),
        }
    }

    fn operator(&self, p: &Path) -> Result<RbOperator> {
        read_json::<OperatorJson>(p)?.into_operator(|k| self.group(k))
    }

    /// Operator JSON keyed so that `--in` can load it again: by name when the
    /// catalog knows that name for this table, by content hash otherwise.
    fn op_json(&self, b: &RbOperator) -> OperatorJson {
        let mut j = OperatorJson::from_operator(b);
        let known = self.catalog.resolve(&j.group).is_ok_and(|g| g.flat_table() == b.group().flat_table());
        if !known {
            j.group = b.group().content_hash();
        }
        j
    }

    fn brace(&self, p: &Path) -> Result<SkewBrace> {
        read_json::<BraceJson>(p)?.into_brace()
    }
}

/// Elements by label or index, separated by commas outside parentheses.
fn elements(g: &FiniteGroup, list: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut push = |item: &str| -> Result<()> {
        let item = item.trim();
        if item.is_empty() {
            return Ok(());
        }
        let x = g
            .index_of(item)
            .or_else(|| item.parse::<usize>().ok().filter(|&i| i < g.order()))
            .ok_or_else(|| Error::Parse(format!("`{item}` is not an element of {}", g.name())))?;
        out.push(x);
        Ok(())
    };
    for (i, c) in list.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                push(&list[start..i])?;
                start = i + 1;
            }
            _ => {}
        }
    }
    push(&list[start..])?;
    Ok(out)
}

fn subgroup(g: &FiniteGroup, gens: &Option<String>, what: &str) -> Result<Subgroup> {
    let gens = gens.as_deref().ok_or_else(|| Error::Parse(format!("--{what} is required")))?;
    Ok(Subgroup::generated(g, &elements(g, gens)?))
}

fn map_arg(g: &FiniteGroup, images: &Option<String>, what: &str) -> Result<GroupMap> {
    let s = images.as_deref().ok_or_else(|| Error::Parse(format!("--{what} is required")))?;
    let v = elements(g, s)?;
    if v.len() != g.order() {
        return Err(Error::Parse(format!("--{what} needs {} images, got {}", g.order(), v.len())));
    }
    Ok(GroupMap::new(v))
}

fn weight(w: i8) -> Result<Weight> {
    Weight::try_from(w).map_err(|_| Error::Parse(format!("weight must be 1 or -1, got {w}")))
}

fn op_row(b: &RbOperator) -> Vec<String> {
    vec![b.image_labels().join(" | ")]
}

pub fn run(cmd: Command, ctx: &Ctx) -> Result<Output> {
    match cmd {
        Command::Group(c) => group(c, ctx),
        Command::Rb(c) => rb(c, ctx),
        Command::Algebra(c) => algebra(c, ctx),
        Command::Brace(c) => brace(c, ctx),
        Command::Embed(c) => embed(c, ctx),
        Command::Ybe(c) => ybe(c, ctx),
        Command::Multibrace(c) => multibrace(c, ctx),
        Command::Paper(c) => paper(c, ctx),
    }
}

fn group(cmd: GroupCmd, ctx: &Ctx) -> Result<Output> {
    match cmd {
        GroupCmd::Build(s) => Ok(Output::value(GroupJson::from_group(&*ctx.source(&s)?))),
        GroupCmd::Info(s) => {
            let g = ctx.source(&s)?;
            let info = structure_report(&g)?;
            let mut t = Table::new(["property", "value"]);
            t.row(["name".to_owned(), g.name().to_owned()]);
            t.row(["hash".to_owned(), g.content_hash()]);
            for (k, v) in serde_json::to_value(&info)?.as_object().into_iter().flatten() {
                t.row([k.clone(), v.to_string()]);
            }
            Ok(Output::value(info).with_table(t))
        }
        GroupCmd::List => {
            let mut t = Table::new(["name", "order", "abelian"]);
            let mut v = Vec::new();
            for name in ctx.catalog.names() {
                let g = ctx.group(name)?;
                t.row([name.clone(), g.order().to_string(), g.is_abelian().to_string()]);
                v.push(serde_json::json!({"name": name, "order": g.order()}));
            }
            Ok(Output::value(v).with_table(t))
        }
    }
}

fn rb(cmd: RbCmd, ctx: &Ctx) -> Result<Output> {
    match cmd {
        RbCmd::Enumerate { group, weight: w } => {
            let g = ctx.group(&group.group)?;
            let w = weight(w)?;
            let ops: Vec<RbOperator> = if w == Weight::One {
                enumerate_rb_operators(&g, &ctx.bounds)?
            } else {
                enumerate_rb_maps(&g, w, ctx.bounds.rb_enumeration)?
                    .into_iter()
                    .map(|m| RbOperator::new(g.clone(), m, w))
                    .collect::<Result<_>>()?
            };
            let mut r = Report::new(format!("operators of weight {w} on {}", g.name()));
            r.set("count", ops.len());
            let mut t = Table::new(["images"]);
            for b in &ops {
                t.row(op_row(b));
            }
            let json: Vec<OperatorJson> = ops.iter().map(|b| ctx.op_json(b)).collect();
            Ok(Output::report(r).with_value(json).with_table(t))
        }
        RbCmd::Verify(i) => {
            let j: OperatorJson = read_json(&i.input)?;
            let g = ctx.group(&j.group)?;
            let mut r = Report::new(format!("operator on {}", g.name()));
            let map = GroupMap::new(j.images.clone());
            if map.len() != g.order() || !map.in_range(g.order()) {
                return Err(Error::Parse(format!("operator needs {} images in 0..{}", g.order(), g.order())));
            }
            let w = brace_forge::rota_baxter::rb_witness(&g, &map, j.weight);
            r.push(Check::from_witness("rota_baxter_identity", w.map(|(a, b)| vec![a, b])));
            Ok(Output::report(r))
        }
        RbCmd::Transform { input, kind, phi } => {
            let b = ctx.operator(&input.input)?;
            let out = match kind {
                TransformKind::Tilde => tilde(&b)?,
                TransformKind::WeightSwap => weight_swap(&b)?,
                TransformKind::AutConj => aut_conj(&b, &map_arg(b.group(), &phi, "phi")?)?,
            };
            Ok(Output::value(ctx.op_json(&out)))
        }
        RbCmd::Construct { group, kind, h, l, m, images } => {
            let g = ctx.group(&group.group)?;
            let b = match kind {
                ConstructKind::Splitting => splitting(&g, &subgroup(&g, &h, "h")?, &subgroup(&g, &l, "l")?)?,
                ConstructKind::Triangular => triangular(
                    &g,
                    &subgroup(&g, &h, "h")?,
                    &subgroup(&g, &l, "l")?,
                    &subgroup(&g, &m, "m")?,
                    &map_arg(&g, &images, "images")?,
                )?,
                ConstructKind::Semidirect => semidirect(
                    &g,
                    &subgroup(&g, &h, "h")?,
                    &subgroup(&g, &l, "l")?,
                    &map_arg(&g, &images, "images")?,
                )?,
                ConstructKind::Hom => hom_to_abelian(&g, &map_arg(&g, &images, "images")?)?,
                ConstructKind::Zero => RbOperator::zero(g),
                ConstructKind::Inversion => RbOperator::inversion(g),
            };
            Ok(Output::value(ctx.op_json(&b)))
        }
        RbCmd::Classify(group) => {
            let g = ctx.group(&group.group)?;
            let ops: Vec<GroupMap> =
                enumerate_rb_operators(&g, &ctx.bounds)?.into_iter().map(|b| b.map().clone()).collect();
            let auts = automorphisms(&g, ctx.bounds.automorphisms)?;
            let orbits = classify_rb_orbits(&g, &ops, &auts)?;
            let mut r = Report::new(format!("operator orbits on {}", g.name()));
            r.set("operators", ops.len());
            r.set("orbits", orbits.len());
            r.set("tilde_refined", tilde_refined_count(&orbits));
            let mut t = Table::new(["orbit", "size", "tilde", "representative"]);
            for (i, o) in orbits.iter().enumerate() {
                let rep: Vec<&str> = o.representative.images().iter().map(|&x| g.label(x)).collect();
                t.row([
                    i.to_string(),
                    o.members.len().to_string(),
                    o.tilde_orbit.to_string(),
                    rep.join(" | "),
                ]);
            }
            Ok(Output::report(r).with_value(&orbits).with_table(t))
        }
        RbCmd::Derive(i) => {
            let b = ctx.operator(&i.input)?;
            let circ = derived_circle_group(&b)?;
            let r = rb_criteria(&b)?;
            Ok(Output::report(r).with_value(GroupJson::from_group(&circ)))
        }
    }
}

fn algebra(cmd: AlgebraCmd, ctx: &Ctx) -> Result<Output> {
    match cmd {
        AlgebraCmd::Enumerate { n } => {
            let all = enumerate_algebra_rb(n)?;
            let mut r = Report::new(format!("operators on k^{n}"));
            r.set("count", all.len());
            r.push(Check::flag("count_formula", all.len() as u64 == brace_forge::algebra::expected_count(n)));
            let mut t = Table::new(["matrix"]);
            for m in &all {
                t.row([format!("{:?}", m.rows())]);
            }
            Ok(Output::report(r).with_value(&all).with_table(t))
        }
        AlgebraCmd::Orbits { n } => {
            let o = algebra_rb_orbits(n)?;
            let mut r = Report::new(format!("orbits of operators on k^{n}"));
            r.set("count", o.count);
            Ok(Output::report(r).with_value(&o))
        }
        AlgebraCmd::Lift { input, group } => {
            let m: RbMatrix = read_json(&input.input)?;
            let g = ctx.group(&group)?;
            let psis = vec![GroupMap::identity(g.order()); m.n().saturating_sub(1)];
            let (_, b) = group_rb_from_matrix(&m, &g, &psis)?;
            Ok(Output::value(ctx.op_json(&b)))
        }
    }
}

fn brace(cmd: BraceCmd, ctx: &Ctx) -> Result<Output> {
    match cmd {
        BraceCmd::FromRb(i) => {
            let b = ctx.operator(&i.input)?;
            let br = match b.weight() {
                Weight::One => brace_from_rb(&b)?,
                Weight::MinusOne => brace_from_rb_neg1(&b)?,
            };
            Ok(Output::value(BraceJson::from_brace(&br)))
        }
        BraceCmd::Verify(i) => {
            let j: BraceJson = read_json(&i.input)?;
            let mk = |rows: Vec<Vec<usize>>| {
                GroupJson { name: j.name.clone(), order: j.order, table: rows, labels: j.labels.clone() }
                    .into_group()
            };
            let (add, circ) = (mk(j.add.clone())?, mk(j.circ.clone())?);
            if add.order() != circ.order() {
                return Err(Error::Parse("tables differ in order".into()));
            }
            Ok(Output::report(verify_brace(&add, &circ).to_report("brace axioms")))
        }
        BraceCmd::Invariants(i) => {
            let br = ctx.brace(&i.input)?;
            let mut r = Report::new(format!("invariants of {}", br.name()));
            r.set("summary", br.summary());
            r.set("socle", socle(&br).members());
            r.set("left_center", left_center(&br).members());
            r.set("annihilator", annihilator(&br).members());
            let star = star_and_series(&br, None);
            r.set("left_series", &star.series);
            r.set("left_star_nilpotent", star.left_star_nilpotent);
            let (_, lam) = lambda_analysis(&br, None);
            r.absorb("lambda", lam);
            Ok(Output::report(r))
        }
        BraceCmd::Enumerate(group) => {
            let g = ctx.group(&group.group)?;
            let braces = enumerate_braces(&g, &ctx.bounds)?;
            let mut r = Report::new(format!("braces on {} from regular subgroups", g.name()));
            r.set("count", braces.len());
            let mut t = Table::new(["name", "circ abelian", "kind"]);
            for b in &braces {
                let s = b.summary();
                t.row([s.name, s.multiplicative_abelian.to_string(), format!("{:?}", s.kind)]);
            }
            let json: Vec<BraceJson> = braces.iter().map(BraceJson::from_brace).collect();
            Ok(Output::report(r).with_value(json).with_table(t))
        }
        BraceCmd::Quotient { input, ideal } => {
            let br = ctx.brace(&input.input)?;
            let set = elements(br.add(), &ideal)?;
            if !is_ideal(&br, &set) {
                return Err(Error::Precondition(format!("{set:?} is not an ideal")));
            }
            Ok(Output::value(BraceJson::from_brace(&quotient_brace(&br, &set)?)))
        }
        BraceCmd::Isomorphic { input, other } => {
            let a = ctx.brace(&input.input)?;
            let b = ctx.brace(&other)?;
            let f = brace_isomorphic(&a, &b);
            let mut r = Report::new("brace isomorphism");
            r.set("isomorphic", f.is_some());
            Ok(Output::report(r).with_value(f.map(|f| f.images().to_vec())))
        }
        BraceCmd::Semidirect { a, b, action } => {
            let (ga, gb) = (ctx.group(&a)?, ctx.group(&b)?);
            let beta = match action {
                Action::Trivial => vec![GroupMap::identity(ga.order()); gb.order()],
                Action::Inversion => inversion_action(&ga, &gb)?,
            };
            Ok(Output::value(BraceJson::from_brace(&semidirect_brace(&ga, &gb, &beta)?)))
        }
        BraceCmd::ParityWindow { n } => {
            let w = parity_brace_window(n);
            let mut r = w.report.clone();
            r.set("witnesses", &w.witnesses);
            Ok(Output::report(r))
        }
    }
}

/// `g^k` acts on `A` as inversion to the power `k`, for a generator `g` of a cyclic `B`.
fn inversion_action(a: &FiniteGroup, b: &FiniteGroup) -> Result<Vec<GroupMap>> {
    let g = b
        .elements()
        .find(|&y| b.element_order(y) == b.order())
        .ok_or_else(|| Error::Precondition(format!("{} is not cyclic", b.name())))?;
    let inv = GroupMap::from_fn(a.order(), |x| a.inv(x));
    let mut beta = vec![GroupMap::identity(a.order()); b.order()];
    let mut y = 0;
    for k in 0..b.order() {
        if k % 2 == 1 {
            beta[y] = inv.clone();
        }
        y = b.mul(y, g);
    }
    Ok(beta)
}

fn embed(cmd: EmbedCmd, ctx: &Ctx) -> Result<Output> {
    match cmd {
        EmbedCmd::Tilde(i) => {
            let t = build_tilde(&ctx.brace(&i.input)?, &ctx.bounds)?;
            Ok(Output::value(GroupJson::from_group(t.group())))
        }
        EmbedCmd::Verify(i) => Ok(Output::report(verify_embedding(&ctx.brace(&i.input)?, &ctx.bounds)?)),
        EmbedCmd::Zeta(i) => {
            let z = zeta_series(&ctx.brace(&i.input)?, &ctx.bounds)?;
            let terms: Vec<&[usize]> = z.terms.iter().map(Subgroup::members).collect();
            let mut r = z.report.clone();
            r.set("terms", terms);
            r.set("strong_left_nilpotent", z.strong_left_nilpotent);
            Ok(Output::report(r))
        }
        EmbedCmd::Recover(i) => {
            let b = recover_rb_complete(&ctx.brace(&i.input)?, &ctx.bounds)?;
            Ok(Output::value(ctx.op_json(&b)))
        }
    }
}

fn ybe(cmd: YbeCmd, ctx: &Ctx) -> Result<Output> {
    match cmd {
        YbeCmd::FromBrace(i) => Ok(Output::value(solution_from_brace(&ctx.brace(&i.input)?)?)),
        YbeCmd::FromRb(i) => Ok(Output::value(solution_from_rb(&ctx.operator(&i.input)?)?)),
        YbeCmd::Verify(i) => {
            let s: YbeSolution = read_json(&i.input)?;
            Ok(Output::report(verify_solution(&s).to_report("Yang-Baxter solution")))
        }
        YbeCmd::RackForm(i) => {
            let s: YbeSolution = read_json(&i.input)?;
            let rf = rack_form(&s)?;
            let mut r = rf.report.clone();
            r.absorb("rack", rf.rack_report.to_report("rack"));
            Ok(Output::report(r).with_value(serde_json::json!({"solution": rf.solution, "rack": rf.rack})))
        }
        YbeCmd::FromRack(i) => {
            let rack: Rack = read_json(&i.input)?;
            let r = rack.check().to_report("rack axioms");
            Ok(Output::report(r).with_value(solution_from_rack(&rack)))
        }
        YbeCmd::DirectRb(i) => {
            let d = direct_rb_solution(&ctx.operator(&i.input)?)?;
            let mut r = d.report.clone();
            r.set("printed_identity_witness", d.printed_identity_witness);
            r.set("center_criterion_witness", d.center_criterion_witness);
            Ok(Output::report(r).with_value(&d.solution))
        }
        YbeCmd::RackSweep { exhaustive, samples } => {
            let s = rack_iff_sweep(exhaustive, samples, ctx.seed);
            let mut r = Report::new("rack axioms against non-degenerate solutions (y, x*y)");
            r.push(Check::flag("no_disagreements", s.disagreements == 0));
            r.set("sweep", &s);
            Ok(Output::report(r))
        }
    }
}

#[derive(Deserialize)]
struct RawMultiBrace {
    order: usize,
    tables: Vec<Vec<Vec<usize>>>,
}

fn multibrace(cmd: MultibraceCmd, ctx: &Ctx) -> Result<Output> {
    match cmd {
        MultibraceCmd::Build { input, k } => {
            let m = build_multibrace(&ctx.operator(&input.input)?, k, &ctx.bounds)?;
            Ok(Output::value(&m))
        }
        MultibraceCmd::Verify(i) => {
            let raw: RawMultiBrace = read_json(&i.input)?;
            let labels: Vec<String> = (0..raw.order).map(|x| x.to_string()).collect();
            let levels = raw
                .tables
                .into_iter()
                .enumerate()
                .map(|(i, rows)| {
                    if rows.len() != raw.order {
                        return Err(Error::Parse(format!("table {i} has {} rows", rows.len())));
                    }
                    FiniteGroup::from_table(format!("∘{i}"), rows, labels.clone())
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Output::report(verify_multibrace(&MultiBrace::new(levels)?)))
        }
    }
}

fn paper(cmd: PaperCmd, ctx: &Ctx) -> Result<Output> {
    match cmd {
        PaperCmd::List => {
            let mut t = Table::new(["example", "criterion"]);
            for target in Target::ALL {
                t.row([target.name().to_owned(), target.criterion().map_or("-".into(), |c| c.to_string())]);
            }
            let names: Vec<&str> = Target::ALL.iter().map(|t| t.name()).collect();
            Ok(Output::value(names).with_table(t))
        }
        PaperCmd::Repro { example, all, window } => {
            let cfg = ReproConfig {
                bounds: ctx.bounds,
                max_order: ctx.max_order.unwrap_or(ReproConfig::default().max_order),
                parity_window: window,
                seed: ctx.seed,
                ..ReproConfig::default()
            };
            let targets: Vec<Target> = if all {
                Target::ALL.to_vec()
            } else {
                vec![example.as_deref().unwrap_or_default().parse()?]
            };
            if let [t] = targets[..] {
                return Ok(Output::report(t.run(&ctx.catalog, &cfg)?));
            }
            let mut r = Report::new("all worked examples");
            for t in targets {
                r.absorb(t.name(), t.run(&ctx.catalog, &cfg)?);
            }
            Ok(Output::report(r))
        }
    }
}
