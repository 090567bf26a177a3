//! Command-line interface: automorphism listing, class summaries, orbit
//! checks, per-class optimisation, result tables, verification, and the
//! class-grouping report.

use crate::autgroup::{check_coset_identity, SearchBudget};
use crate::codes::StabCode;
use crate::gf4::BinMat;
use crate::logical::{basis_change, logical_action, transform_code};
use crate::monomial::{LocalClifford, MonomialOp};
use crate::optimizer::{Analysis, Metric, OptResult};
use crate::symplectic::SpGroup;
use crate::{Error, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use std::io::Read;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "autopt",
    version,
    about = "SWAP-transversal logical Clifford search for small stabiliser codes"
)]
pub struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct CodeArg {
    /// Built-in code name (e.g. 4_2_2, 5_1_3.m2c2) or path to a code file.
    #[arg(long)]
    code: String,
}

#[derive(Args)]
struct BudgetArgs {
    /// Maximum backtracking nodes for automorphism search.
    #[arg(long, default_value_t = 1_000_000_000)]
    max_nodes: u64,
    /// Maximum orbit size for code-orbit enumeration.
    #[arg(long, default_value_t = 10_000_000)]
    max_orbit: usize,
}

impl BudgetArgs {
    fn budget(&self) -> SearchBudget {
        SearchBudget {
            max_nodes: self.max_nodes,
            max_orbit: self.max_orbit,
        }
    }
}

#[derive(Args)]
struct MetricArgs {
    /// Cost metric: 1 = control-Clifford (weighted SWAPs), 2 = local-Clifford.
    #[arg(long, default_value_t = 1)]
    metric: u8,
    /// Override the SWAP weight of metric 1 (default 7).
    #[arg(long)]
    swap_weight: Option<u64>,
}

impl MetricArgs {
    fn metric(&self) -> Result<Metric> {
        let mut m = match self.metric {
            1 => Metric::metric1(),
            2 => Metric::metric2(),
            other => {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("unknown metric {other} (expected 1 or 2)"),
                })
            }
        };
        if let Some(w) = self.swap_weight {
            m.swap_weight = w;
        }
        Ok(m)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Json,
    Md,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Csv,
    Dot,
}

#[derive(Subcommand)]
enum Cmd {
    /// Automorphism group order and a reduced generating set.
    Aut {
        #[command(flatten)]
        code: CodeArg,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Automorphism counts and distinct logical actions per conjugacy class.
    Classes {
        #[command(flatten)]
        code: CodeArg,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Code orbit size and the coset identity |orbit| * |Gamma| = 6^n n!.
    Orbit {
        #[command(flatten)]
        code: CodeArg,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Optimise the circuit cost for one conjugacy class.
    Optimize {
        #[command(flatten)]
        code: CodeArg,
        /// 1-based conjugacy class label in Sp(2k, 2).
        #[arg(long)]
        class: usize,
        #[command(flatten)]
        metric: MetricArgs,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Optimise every realised class and emit the result table.
    Table {
        #[command(flatten)]
        code: CodeArg,
        #[command(flatten)]
        metric: MetricArgs,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Include the identity class (class 1) in the table.
        #[arg(long)]
        include_identity: bool,
        #[arg(long, value_enum, default_value_t = TableFormat::Json)]
        format: TableFormat,
    },
    /// Re-check a JSON result table produced by `optimize` or `table`.
    Verify {
        /// Input file; reads stdin when omitted.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Per-automorphism class grouping as CSV or DOT.
    Report {
        #[command(flatten)]
        code: CodeArg,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long, value_enum, default_value_t = ReportFormat::Csv)]
        format: ReportFormat,
    },
}

/// JSON form of a monomial operator (1-based permutation).
#[derive(Serialize, Deserialize)]
pub struct CircuitDoc {
    pub perm: Vec<usize>,
    pub locals: Vec<String>,
}

impl CircuitDoc {
    fn from_op(op: &MonomialOp) -> CircuitDoc {
        CircuitDoc {
            perm: op.sigma().iter().map(|&d| d as usize + 1).collect(),
            locals: op.rho().iter().map(|r| r.name().to_string()).collect(),
        }
    }

    fn to_op(&self) -> Result<MonomialOp> {
        let sigma: Vec<u8> = self
            .perm
            .iter()
            .map(|&p| {
                u8::try_from(p.wrapping_sub(1))
                    .map_err(|_| Error::InvalidMonomial("bad permutation entry".into()))
            })
            .collect::<Result<_>>()?;
        let rho: Vec<LocalClifford> = self
            .locals
            .iter()
            .map(|s| {
                LocalClifford::from_name(s)
                    .ok_or_else(|| Error::InvalidMonomial(format!("unknown local `{s}`")))
            })
            .collect::<Result<_>>()?;
        MonomialOp::new(sigma, rho)
    }
}

/// One optimised table row in wire form.
#[derive(Serialize, Deserialize)]
pub struct RowDoc {
    pub class: usize,
    pub cost: u64,
    pub circuit: CircuitDoc,
    pub tau: CircuitDoc,
    #[serde(rename = "A")]
    pub a: Vec<String>,
    /// The generator-basis matrix of the equivalent code the circuit acts
    /// on: generator rows first, then logical basis rows, in file tokens.
    pub generator_basis: Vec<String>,
    #[serde(rename = "L")]
    pub l: Vec<String>,
    pub exhaustive: bool,
}

/// The table document emitted by `optimize` and `table`.
#[derive(Serialize, Deserialize)]
pub struct TableDoc {
    pub code: String,
    pub n: usize,
    pub k: usize,
    pub metric: Metric,
    pub rows: Vec<RowDoc>,
}

fn row_doc(r: &OptResult) -> RowDoc {
    let mut generator_basis = r.code_out.generators().token_rows();
    generator_basis.extend(r.code_out.basis().token_rows());
    RowDoc {
        class: r.class,
        cost: r.cost,
        circuit: CircuitDoc::from_op(&r.circuit),
        tau: CircuitDoc::from_op(&r.tau),
        a: r.a.token_rows(),
        generator_basis,
        l: r.logical.token_rows(),
        exhaustive: r.exhaustive,
    }
}

/// Resolve a `--code` argument: built-in name first, then file path.
pub fn load_code(spec: &str) -> Result<(String, StabCode)> {
    match StabCode::builtin(spec) {
        Ok(code) => Ok((spec.to_string(), code)),
        Err(Error::UnknownBuiltin(_)) => {
            let text = std::fs::read_to_string(spec)?;
            Ok((spec.to_string(), StabCode::from_file_string(&text)?))
        }
        Err(e) => Err(e),
    }
}

/// Rebuild the code file text of a row's output code and parse it back.
fn row_code(doc: &TableDoc, row: &RowDoc) -> Result<StabCode> {
    let mut text = format!("{} {}\n", doc.n, doc.k);
    let g_rows = doc.n - doc.k;
    if row.generator_basis.len() != g_rows + 2 * doc.k {
        return Err(Error::Verification(format!(
            "class {}: generator_basis has {} rows, expected {}",
            row.class,
            row.generator_basis.len(),
            g_rows + 2 * doc.k
        )));
    }
    for (i, r) in row.generator_basis.iter().enumerate() {
        if i == g_rows {
            text.push('\n');
        }
        text.push_str(r);
        text.push('\n');
    }
    StabCode::from_file_string(&text)
}

/// Re-check one row against the (optionally resolvable) input code.
fn verify_row(
    doc: &TableDoc,
    row: &RowDoc,
    sp: &SpGroup,
    original: Option<&StabCode>,
) -> Result<()> {
    let fail = |msg: String| Error::Verification(format!("class {}: {msg}", row.class));
    let code_out = row_code(doc, row)?;
    let circuit = row.circuit.to_op()?;
    let tau = row.tau.to_op()?;
    let a = BinMat::from_token_rows(&row.a, 2 * doc.k)?;
    let l = BinMat::from_token_rows(&row.l, 2 * doc.k)?;

    let realized = logical_action(&circuit, &code_out)
        .map_err(|e| fail(format!("circuit does not act on the output code: {e}")))?;
    if realized != l {
        return Err(fail("recorded L does not match the realised action".into()));
    }
    if sp.class_of(&l)? != row.class {
        return Err(fail("L is not in the recorded conjugacy class".into()));
    }
    if &l != sp.class_rep(row.class)? {
        return Err(fail("L is not the class representative".into()));
    }
    let cost = doc.metric.cost(&circuit);
    if cost != row.cost {
        return Err(fail(format!(
            "recorded cost {} does not match the circuit cost {}",
            row.cost, cost
        )));
    }
    if let Some(orig) = original {
        let rebuilt = transform_code(&basis_change(orig, &a)?, &tau)?;
        if rebuilt != code_out {
            return Err(fail(
                "output code is not tau(basis-changed input code)".into(),
            ));
        }
    }
    Ok(())
}

fn print_table(doc: &TableDoc, format: TableFormat) -> Result<()> {
    match format {
        TableFormat::Json => println!("{}", serde_json::to_string_pretty(doc)?),
        TableFormat::Md => {
            println!("| class | cost | circuit | tau | exhaustive |");
            println!("|---|---|---|---|---|");
            for r in &doc.rows {
                println!(
                    "| {} | {} | `{}` | `{}` | {} |",
                    r.class,
                    r.cost,
                    r.circuit.to_op()?.to_text(),
                    r.tau.to_op()?.to_text(),
                    r.exhaustive
                );
            }
        }
        TableFormat::Csv => {
            println!("class,cost,circuit,tau,exhaustive");
            for r in &doc.rows {
                println!(
                    "{},{},\"{}\",\"{}\",{}",
                    r.class,
                    r.cost,
                    r.circuit.to_op()?.to_text(),
                    r.tau.to_op()?.to_text(),
                    r.exhaustive
                );
            }
        }
    }
    Ok(())
}

/// Run the CLI; the process exit code is derived from the error kind.
pub fn run() -> Result<()> {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Aut { code, budget } => {
            let (name, code) = load_code(&code.code)?;
            let aut = crate::autgroup::automorphism_group(&code, &budget.budget())?;
            let gens: Vec<String> = aut.generators().iter().map(|g| g.to_text()).collect();
            let doc = serde_json::json!({
                "code": name,
                "n": code.n(),
                "k": code.k(),
                "order": aut.order(),
                "generators": gens,
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
        Cmd::Classes { code, budget } => {
            let (name, code) = load_code(&code.code)?;
            let analysis = Analysis::new(&code, &budget.budget())?;
            let mut classes = Vec::new();
            for (&class, indices) in analysis.by_class() {
                let mut logicals: Vec<Vec<u8>> = indices
                    .iter()
                    .map(|&i| {
                        logical_action(&analysis.aut().elements()[i], &code)
                            .map(|l| l.key_bytes())
                    })
                    .collect::<Result<_>>()?;
                logicals.sort_unstable();
                logicals.dedup();
                classes.push(serde_json::json!({
                    "class": class,
                    "class_size_in_sp": analysis.sp().class_size(class)?,
                    "automorphisms": indices.len(),
                    "distinct_logicals": logicals.len(),
                }));
            }
            let doc = serde_json::json!({
                "code": name,
                "n": code.n(),
                "k": code.k(),
                "order": analysis.aut().order(),
                "classes": classes,
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
        Cmd::Orbit { code, budget } => {
            let (name, code) = load_code(&code.code)?;
            let (gamma, orbit, ham, holds) = check_coset_identity(&code, &budget.budget())?;
            let doc = serde_json::json!({
                "code": name,
                "n": code.n(),
                "k": code.k(),
                "gamma_order": gamma,
                "orbit_size": orbit,
                "monomial_order": ham,
                "coset_identity_holds": holds,
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
            if !holds {
                return Err(Error::Verification(
                    "coset identity |orbit| * |Gamma| = 6^n n! failed".into(),
                ));
            }
        }
        Cmd::Optimize {
            code,
            class,
            metric,
            budget,
        } => {
            let (name, code) = load_code(&code.code)?;
            let metric = metric.metric()?;
            let analysis = Analysis::new(&code, &budget.budget())?;
            let row = analysis.optimize(class, &metric)?;
            let doc = TableDoc {
                code: name,
                n: code.n(),
                k: code.k(),
                metric,
                rows: vec![row_doc(&row)],
            };
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
        Cmd::Table {
            code,
            metric,
            budget,
            include_identity,
            format,
        } => {
            let (name, code) = load_code(&code.code)?;
            let metric = metric.metric()?;
            let analysis = Analysis::new(&code, &budget.budget())?;
            let rows = analysis.full_table(&metric, include_identity)?;
            let doc = TableDoc {
                code: name,
                n: code.n(),
                k: code.k(),
                metric,
                rows: rows.iter().map(row_doc).collect(),
            };
            print_table(&doc, format)?;
        }
        Cmd::Verify { input } => {
            let text = match input {
                Some(path) => std::fs::read_to_string(path)?,
                None => {
                    let mut buf = String::new();
                    std::io::stdin().read_to_string(&mut buf)?;
                    buf
                }
            };
            let doc: TableDoc = serde_json::from_str(&text)?;
            let sp = SpGroup::new_with_budget(doc.k, 2_000_000)?;
            let original = load_code(&doc.code).ok().map(|(_, c)| c);
            for row in &doc.rows {
                verify_row(&doc, row, &sp, original.as_ref())?;
            }
            println!(
                "ok: {} row(s) verified for code {}{}",
                doc.rows.len(),
                doc.code,
                if original.is_some() {
                    ""
                } else {
                    " (input code unresolved; equivalence witness unchecked)"
                }
            );
        }
        Cmd::Report {
            code,
            budget,
            format,
        } => {
            let (name, code) = load_code(&code.code)?;
            let analysis = Analysis::new(&code, &budget.budget())?;
            let elements = analysis.aut().elements();
            match format {
                ReportFormat::Csv => {
                    println!("index,circuit,class,logical");
                    for (&class, indices) in analysis.by_class() {
                        for &i in indices {
                            let l = logical_action(&elements[i], &code)?;
                            println!(
                                "{},\"{}\",{},\"{}\"",
                                i + 1,
                                elements[i].to_text(),
                                class,
                                l.token_rows().join(" / ")
                            );
                        }
                    }
                }
                ReportFormat::Dot => {
                    println!("graph \"{name}\" {{");
                    for (&class, indices) in analysis.by_class() {
                        println!("  subgraph cluster_class_{class} {{");
                        println!("    label = \"class {class}\";");
                        for &i in indices {
                            println!(
                                "    a{} [label=\"pi^{}\\n{}\"];",
                                i + 1,
                                i + 1,
                                elements[i].to_text()
                            );
                        }
                        println!("  }}");
                    }
                    println!("}}");
                }
            }
        }
    }
    Ok(())
}
