use std::error::Error;
use std::fmt::Write as _;
use std::fs;
use std::time::Instant;

use ngsh_core::io::{
    export_dot, generate_random, parse_context, serialize_concepts, write_tuples, OutputFormat,
};
use ngsh_core::{
    brute_force_concepts, check_n_ordered, dimension_diagram, enumerate_concepts,
    enumerate_concepts_with, gsh_2d, introducer_dim, introducer_oracle, introducers,
    nontrivial_filter, AsConcept, DimensionDiagram, EnumerateOptions, IntroducerSet, NContext,
};

use crate::{
    ConceptsArgs, Format, GenArgs, GshArgs, InputArgs, IntroducersArgs, OrderArgs, OrderSet,
    StatsArgs, VerifyArgs,
};

type CmdResult = Result<u8, Box<dyn Error>>;

fn load(input: &InputArgs) -> Result<NContext, Box<dyn Error>> {
    let text = fs::read_to_string(&input.input)
        .map_err(|e| format!("cannot read {}: {e}", input.input.display()))?;
    parse_context(&text, input.input_format.into())
        .map_err(|e| format!("{}: {e}", input.input.display()).into())
}

fn listing_format(format: Format) -> Result<OutputFormat, Box<dyn Error>> {
    match format {
        Format::Text => Ok(OutputFormat::Text),
        Format::Structured => Ok(OutputFormat::Structured),
        Format::Dot => Err("--format dot only applies to `order` and `gsh`".into()),
    }
}

pub fn concepts(args: &ConceptsArgs) -> CmdResult {
    let format = listing_format(args.format)?;
    let ctx = load(&args.input)?;
    let options = EnumerateOptions {
        max_concepts: args.max_concepts,
    };
    let all = enumerate_concepts_with(&ctx, &options)?;
    print!("{}", serialize_concepts(&ctx, all.as_slice(), format));
    eprintln!("{} concepts", all.len());
    Ok(0)
}

fn introducer_set(
    ctx: &NContext,
    dim: Option<&str>,
    nontrivial: bool,
) -> Result<IntroducerSet, Box<dyn Error>> {
    let set = match dim {
        Some(sel) => introducer_dim(ctx, ctx.dimension_index(sel)?)?,
        None => introducers(ctx)?,
    };
    Ok(if nontrivial {
        nontrivial_filter(&set)
    } else {
        set
    })
}

pub fn list_introducers(args: &IntroducersArgs) -> CmdResult {
    let format = listing_format(args.format)?;
    let ctx = load(&args.input)?;
    let set = introducer_set(&ctx, args.dim.as_deref(), args.nontrivial)?;
    print!("{}", serialize_concepts(&ctx, set.records(), format));
    eprintln!("{} introducer concepts", set.len());
    Ok(0)
}

fn diagram_text<T: AsConcept>(ctx: &NContext, diagram: &DimensionDiagram<T>) -> String {
    let dim = &ctx.dims()[diagram.dimension];
    let mut out = String::new();
    let _ = writeln!(
        out,
        "order on {}: {} classes, {} edges",
        dim.name(),
        diagram.nodes.len(),
        diagram.edges.len()
    );
    for (i, node) in diagram.nodes.iter().enumerate() {
        let labels = ctx.labels(diagram.dimension, &node.component);
        let _ = writeln!(out, "class {i} {{{}}}", labels.join(" "));
        let listing = serialize_concepts(ctx, &node.members, OutputFormat::Text);
        for line in listing.lines() {
            let _ = writeln!(out, "  {line}");
        }
    }
    for (lower, upper) in &diagram.edges {
        let _ = writeln!(out, "{lower} -> {upper}");
    }
    out
}

fn render_diagram<T: AsConcept>(
    ctx: &NContext,
    diagram: &DimensionDiagram<T>,
    format: Format,
) -> Result<String, Box<dyn Error>> {
    match format {
        Format::Text => Ok(diagram_text(ctx, diagram)),
        Format::Dot => Ok(export_dot(ctx, diagram)),
        Format::Structured => Err("diagrams are written as text or dot".into()),
    }
}

pub fn order(args: &OrderArgs) -> CmdResult {
    let ctx = load(&args.input)?;
    let dim = ctx.dimension_index(&args.dim)?;
    let (out, report) = match args.set {
        OrderSet::Introducers => {
            let set = introducer_set(&ctx, None, args.nontrivial)?;
            let d = dimension_diagram(set.records(), dim)?;
            (
                render_diagram(&ctx, &d, args.format)?,
                check_n_ordered(set.records()),
            )
        }
        OrderSet::Concepts => {
            let all = enumerate_concepts(&ctx);
            let all: Vec<_> = if args.nontrivial {
                all.iter()
                    .filter(|c| !c.has_empty_component())
                    .cloned()
                    .collect()
            } else {
                all.as_slice().to_vec()
            };
            let d = dimension_diagram(&all, dim)?;
            (
                render_diagram(&ctx, &d, args.format)?,
                check_n_ordered(&all),
            )
        }
    };
    print!("{out}");
    eprintln!(
        "uniqueness {}, antiordinal dependency {}",
        verdict(report.uniqueness_ok),
        verdict(report.antiordinal_ok)
    );
    Ok(0)
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "holds"
    } else {
        "VIOLATED"
    }
}

pub fn gsh(args: &GshArgs) -> CmdResult {
    let ctx = load(&args.input)?;
    let d = gsh_2d(&ctx)?;
    print!("{}", render_diagram(&ctx, &d, args.format)?);
    eprintln!(
        "{} introducer concepts, {} edges",
        d.nodes.len(),
        d.edges.len()
    );
    Ok(0)
}

pub fn stats(args: &StatsArgs) -> CmdResult {
    let ctx = load(&args.input)?;
    let start = Instant::now();
    let all = enumerate_concepts(&ctx);
    let enumeration = start.elapsed();
    let start = Instant::now();
    let set = introducer_set(&ctx, None, args.nontrivial)?;
    let introduction = start.elapsed();

    let ratio = if all.is_empty() {
        0.0
    } else {
        set.len() as f64 / all.len() as f64
    };
    let mut out = String::new();
    let _ = writeln!(out, "concepts\t{}", all.len());
    let _ = writeln!(out, "introducers\t{}", set.len());
    let _ = writeln!(out, "ratio\t{ratio:.4}");
    for (i, d) in ctx.dims().iter().enumerate() {
        let _ = writeln!(
            out,
            "dimension\t{}\t{}",
            d.name(),
            set.introducing_dimension(i).count()
        );
    }
    for (i, d) in ctx.dims().iter().enumerate() {
        for (x, label) in d.elements().iter().enumerate() {
            let _ = writeln!(
                out,
                "element\t{}\t{label}\t{}",
                d.name(),
                set.introducing(i, x).count()
            );
        }
    }
    print!("{out}");
    eprintln!(
        "enumeration {:.3} ms, introducers {:.3} ms",
        enumeration.as_secs_f64() * 1e3,
        introduction.as_secs_f64() * 1e3
    );
    Ok(0)
}

struct Checks {
    out: String,
    failed: bool,
}

impl Checks {
    fn record(&mut self, name: &str, failures: Vec<String>) {
        if failures.is_empty() {
            let _ = writeln!(self.out, "PASS {name}");
        } else {
            self.failed = true;
            let _ = writeln!(self.out, "FAIL {name}");
            for f in failures {
                let _ = writeln!(self.out, "  {f}");
            }
        }
    }
}

pub fn verify(args: &VerifyArgs) -> CmdResult {
    let ctx = load(&args.input)?;
    let all = enumerate_concepts(&ctx);
    let set = introducers(&ctx)?;
    let mut checks = Checks {
        out: String::new(),
        failed: false,
    };

    match brute_force_concepts(&ctx, args.oracle_cap) {
        Ok(brute) => {
            let missing = brute.iter().filter(|c| !all.contains(c));
            let extra = all.iter().filter(|c| !brute.contains(c));
            let failures = missing
                .map(|c| format!("missed {}", ctx.format_tuple(c)))
                .chain(extra.map(|c| format!("spurious {}", ctx.format_tuple(c))))
                .collect();
            checks.record("enumeration matches the brute-force oracle", failures);
            let oracle = introducer_oracle(&ctx, args.oracle_cap)?;
            let failures = if oracle == set {
                Vec::new()
            } else {
                oracle
                    .records()
                    .iter()
                    .filter(|r| set.get(r.concept()) != Some(*r))
                    .map(|r| format!("expected {}", ctx.format_tuple(r.concept())))
                    .chain(
                        set.records()
                            .iter()
                            .filter(|r| oracle.get(r.concept()) != Some(*r))
                            .map(|r| format!("computed {}", ctx.format_tuple(r.concept()))),
                    )
                    .collect()
            };
            checks.record("introducers match the definition oracle", failures);
        }
        Err(e) => {
            let _ = writeln!(checks.out, "SKIP oracle skipped: {e}");
        }
    }

    let failures = set
        .concepts()
        .filter(|c| !ctx.is_concept(c).unwrap_or(false))
        .map(|c| format!("{} is not a concept", ctx.format_tuple(c)))
        .collect();
    checks.record("every introducer is a concept", failures);

    let failures = set
        .concepts()
        .filter(|c| !all.contains(c))
        .map(|c| format!("{} not among the enumerated concepts", ctx.format_tuple(c)))
        .collect();
    checks.record("introducers are a subset of the concepts", failures);

    let report = check_n_ordered(set.records());
    let records = set.records();
    let name = |i: usize| ctx.format_tuple(records[i].concept());
    checks.record(
        "uniqueness condition",
        report
            .uniqueness_violations
            .iter()
            .map(|&(a, b)| format!("{} ~ {}", name(a), name(b)))
            .collect(),
    );
    checks.record(
        "antiordinal dependency",
        report
            .antiordinal_violations
            .iter()
            .map(|v| {
                format!(
                    "{} below {} off dimension {}",
                    name(v.first),
                    name(v.second),
                    v.dimension + 1
                )
            })
            .collect(),
    );

    let mut failures = Vec::new();
    for (i, d) in ctx.dims().iter().enumerate() {
        for (x, label) in d.elements().iter().enumerate() {
            let expected = enumerate_concepts(&ctx.slice(i, x)?).len();
            let got = set.introducing(i, x).count();
            if got != expected {
                failures.push(format!(
                    "{} {label}: {got} introducers, {expected} slice concepts",
                    d.name()
                ));
            }
        }
    }
    checks.record(
        "introducer count equals slice concept count per element",
        failures,
    );

    let _ = writeln!(
        checks.out,
        "INFO {} comparable pairs without an i != j witness (informational)",
        report.sufficient_condition_misses.len()
    );
    print!("{}", checks.out);
    Ok(u8::from(checks.failed))
}

pub fn gen(args: &GenArgs) -> CmdResult {
    let ctx = generate_random(&args.sizes, args.density, args.seed)?;
    print!("{}", write_tuples(&ctx));
    eprintln!("{} crosses", ctx.len());
    Ok(0)
}
