use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use weak_iasi::constructions::{
    assign_concrete_sets, optimal_labeling, planned_mono_edges, LabelPlan, ProductOp,
};
use weak_iasi::dot::export_dot;
use weak_iasi::graph::{
    cartesian_product, corona, direct_product, disjoint_union, lexicographic_product,
    rooted_product, strong_product, Graph,
};
use weak_iasi::set_label::{verify_weak_iasi, Labeling};
use weak_iasi::sparing::{
    sparing_by_formula, sparing_formula_corona, sparing_union, Method, SparingOracle,
};
use weak_iasi::sweep::{run_sweep, small_family, SweepConfig};
use weak_iasi::{Error, Result};

use crate::{Command, CommonArgs, OptionalPairArgs, Op, PairArgs};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_CAPACITY: u8 = 3;
pub const EXIT_VERIFICATION: u8 = 4;

pub fn exit_code(err: &Error) -> u8 {
    match err {
        Error::InvalidInput(_) => EXIT_USAGE,
        Error::Parse(_) | Error::Io(_) => EXIT_PARSE,
        Error::Capacity { .. } => EXIT_CAPACITY,
    }
}

pub fn run(command: Command) -> Result<u8> {
    match command {
        Command::Build { pair, common } => build(&pair, &common),
        Command::Label {
            graph,
            pair,
            labels,
            labels2,
            common,
        } => label(graph, &pair, labels, labels2, &common),
        Command::Verify {
            graph,
            labels,
            common,
        } => verify(&graph, &labels, &common),
        Command::Sparing { graph, pair, common } => sparing(graph, &pair, &common),
        Command::Sweep { seed, common } => sweep(seed, &common),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

fn read_graph(path: &Path, common: &CommonArgs) -> Result<Graph> {
    Graph::from_json(&read(path)?, common.allow_isolated)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn read_labeling(path: &Path) -> Result<Labeling> {
    Labeling::from_json(&read(path)?).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn write_artifacts(common: &CommonArgs, files: &[(&str, &Value)]) -> Result<()> {
    if let Some(dir) = &common.out {
        fs::create_dir_all(dir)?;
        for (name, value) in files {
            fs::write(dir.join(name), format!("{value}\n"))?;
        }
    }
    Ok(())
}

fn print(value: &Value) {
    println!("{value}");
}

fn oracle(common: &CommonArgs) -> Result<SparingOracle> {
    SparingOracle::from_override(common.oracle_bound)
}

fn product_op(op: Op, root: usize) -> Result<ProductOp> {
    Ok(match op {
        Op::Cartesian => ProductOp::Cartesian,
        Op::Direct => ProductOp::Direct,
        Op::Strong => ProductOp::Strong,
        Op::Lex => ProductOp::Lexicographic,
        Op::Corona => ProductOp::Corona,
        Op::Rooted => ProductOp::Rooted { root },
        Op::Union => {
            return Err(Error::InvalidInput(
                "union has no labeling construction; label the components instead".into(),
            ))
        }
    })
}

/// Product graph plus a JSON rendering of its vertex map.
fn build_product(op: Op, g1: &Graph, g2: &Graph, root: usize) -> Result<(Graph, Value)> {
    Ok(match op {
        Op::Cartesian => {
            let (g, map) = cartesian_product(g1, g2)?;
            (g, map.to_json_value())
        }
        Op::Direct => {
            let (g, map) = direct_product(g1, g2)?;
            (g, map.to_json_value())
        }
        Op::Strong => {
            let (g, map) = strong_product(g1, g2)?;
            (g, map.to_json_value())
        }
        Op::Lex => {
            let (g, map) = lexicographic_product(g1, g2)?;
            (g, map.to_json_value())
        }
        Op::Corona => {
            let (g, map) = corona(g1, g2)?;
            (g, map.to_json_value())
        }
        Op::Rooted => {
            let (g, map) = rooted_product(g1, g2, root)?;
            (g, map.to_json_value())
        }
        Op::Union => {
            let g = disjoint_union(g1, g2);
            let offset = g1.n();
            (g, json!({ "kind": "union", "n1": g1.n(), "n2": g2.n(), "offset": offset }))
        }
    })
}

fn op_name(op: Op) -> &'static str {
    match op {
        Op::Cartesian => "cartesian",
        Op::Direct => "direct",
        Op::Strong => "strong",
        Op::Lex => "lex",
        Op::Corona => "corona",
        Op::Rooted => "rooted",
        Op::Union => "union",
    }
}

fn build(pair: &PairArgs, common: &CommonArgs) -> Result<u8> {
    let g1 = read_graph(&pair.g1, common)?;
    let g2 = read_graph(&pair.g2, common)?;
    let (g, map) = build_product(pair.op, &g1, &g2, pair.root)?;
    let graph = g.to_json_value();
    write_artifacts(common, &[("graph.json", &graph), ("map.json", &map)])?;
    if let Some(path) = &common.dot {
        export_dot(&g, None, path)?;
    }
    print(&json!({
        "op": op_name(pair.op),
        "n": g.n(),
        "m": g.m(),
        "connected": g.is_connected(),
        "graph": graph,
        "map": map,
    }));
    Ok(EXIT_OK)
}

fn factor_labeling(path: &Option<PathBuf>, g: &Graph, oracle: &SparingOracle) -> Result<Labeling> {
    match path {
        Some(p) => read_labeling(p),
        None => Ok(optimal_labeling(oracle, g)?.1),
    }
}

fn label(
    graph: Option<PathBuf>,
    pair: &OptionalPairArgs,
    labels: Option<PathBuf>,
    labels2: Option<PathBuf>,
    common: &CommonArgs,
) -> Result<u8> {
    let oracle = oracle(common)?;
    let (g, plan): (Graph, LabelPlan) = match (graph, pair.op, &pair.g1, &pair.g2) {
        (Some(path), _, _, _) => {
            let g = read_graph(&path, common)?;
            let (plan, _) = optimal_labeling(&oracle, &g)?;
            (g, plan)
        }
        (None, Some(op), Some(p1), Some(p2)) => {
            let g1 = read_graph(p1, common)?;
            let g2 = read_graph(p2, common)?;
            let op = product_op(op, pair.root)?;
            let l1 = factor_labeling(&labels, &g1, &oracle)?;
            let l2 = factor_labeling(&labels2, &g2, &oracle)?;
            let plan = op.plan(&g1, &l1, &g2, &l2)?;
            (op.build(&g1, &g2)?, plan)
        }
        _ => {
            return Err(Error::InvalidInput(
                "label needs --graph, or --op with --g1 and --g2".into(),
            ))
        }
    };
    let labeling = assign_concrete_sets(&g, &plan, None)?;
    let report = verify_weak_iasi(&g, &labeling)?;
    let (graph_json, plan_json, labeling_json) = (
        g.to_json_value(),
        plan.to_json_value(),
        labeling.to_json_value(),
    );
    write_artifacts(
        common,
        &[
            ("graph.json", &graph_json),
            ("plan.json", &plan_json),
            ("labeling.json", &labeling_json),
        ],
    )?;
    if let Some(path) = &common.dot {
        export_dot(&g, Some(&labeling), path)?;
    }
    print(&json!({
        "plan": plan_json,
        "labeling": labeling_json,
        "passed": report.passed,
        "stats": report.stats,
    }));
    Ok(if report.passed { EXIT_OK } else { EXIT_VERIFICATION })
}

fn verify(graph: &Path, labels: &Path, common: &CommonArgs) -> Result<u8> {
    let g = read_graph(graph, common)?;
    let l = read_labeling(labels)?;
    let report = verify_weak_iasi(&g, &l)?;
    let value = serde_json::to_value(&report)?;
    write_artifacts(common, &[("report.json", &value)])?;
    if let Some(path) = &common.dot {
        export_dot(&g, Some(&l), path)?;
    }
    print(&value);
    Ok(if report.passed { EXIT_OK } else { EXIT_VERIFICATION })
}

fn sparing(graph: Option<PathBuf>, pair: &OptionalPairArgs, common: &CommonArgs) -> Result<u8> {
    let oracle = oracle(common)?;
    let value = match (graph, pair.op, &pair.g1, &pair.g2) {
        (Some(path), _, _, _) => {
            let g = read_graph(&path, common)?;
            let mut result = oracle.solve(&g)?;
            result.formula_value = sparing_by_formula(&g).and_then(|r| r.formula_value);
            serde_json::to_value(&result)?
        }
        (None, Some(op), Some(p1), Some(p2)) => {
            let g1 = read_graph(p1, common)?;
            let g2 = read_graph(p2, common)?;
            let (g, _) = build_product(op, &g1, &g2, pair.root)?;
            let mut result = oracle.solve(&g)?;
            match op {
                Op::Corona => {
                    let (plan1, l1) = optimal_labeling(&oracle, &g1)?;
                    let (plan2, l2) = optimal_labeling(&oracle, &g2)?;
                    let r1 = (g1.n() - plan1.non_singleton.len()) as u64;
                    let r2 = (g2.n() - plan2.non_singleton.len()) as u64;
                    let formula =
                        sparing_formula_corona(g1.n() as u64, g2.m() as u64, r1, r2)?;
                    result.formula_value = Some(formula);
                    let plan = ProductOp::Corona.plan(&g1, &l1, &g2, &l2)?;
                    let mut value = serde_json::to_value(&result)?;
                    value["r1"] = r1.into();
                    value["r2"] = r2.into();
                    value["construction"] = json!({
                        "value": planned_mono_edges(&g, &plan),
                        "witness": plan.non_singleton,
                        "method": Method::FormulaCorona,
                    });
                    value
                }
                Op::Union => {
                    result.formula_value = Some(sparing_union(&oracle, &g1, &g2)?);
                    serde_json::to_value(&result)?
                }
                _ => serde_json::to_value(&result)?,
            }
        }
        _ => {
            return Err(Error::InvalidInput(
                "sparing needs --graph, or --op with --g1 and --g2".into(),
            ))
        }
    };
    write_artifacts(common, &[("sparing.json", &value)])?;
    print(&value);
    Ok(EXIT_OK)
}

fn sweep(seed: u64, common: &CommonArgs) -> Result<u8> {
    let mut config = SweepConfig {
        seed,
        ..SweepConfig::default()
    };
    if common.oracle_bound.is_some() {
        config.oracle = oracle(common)?;
    }
    let report = run_sweep(&small_family(), &config)?;
    let markdown = report.to_markdown();
    if let Some(dir) = &common.out {
        fs::create_dir_all(dir)?;
        fs::write(dir.join("sweep.md"), &markdown)?;
        fs::write(
            dir.join("sweep.json"),
            serde_json::to_string_pretty(&report)? + "\n",
        )?;
    }
    print!("{markdown}");
    Ok(if report.passed() { EXIT_OK } else { EXIT_VERIFICATION })
}
