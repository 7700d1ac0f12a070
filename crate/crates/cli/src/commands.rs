use raag_core::ears::verify as verify_decomposition;
use raag_core::{
    assemble, classify, classify_pearl, enumerate_graphs, find_3conn_bundle, find_loose,
    find_minor, find_nested, find_odd, find_proper, find_standard, find_topological_minor,
    fully_smoothed, is_subdivision_of, isomorphism_classes, plan_from_decomposition,
    verify_pearl_chain, witness_to_sequences, AssemblyPlan, CentralizerOutcome, DecoratedEar,
    EarDecomposition, Graph, Kind, MinorWitness, Raag, ThreeConnBundle, TopologicalWitness, Value,
};

use crate::report::Report;
use crate::{input, CliError, DecompositionKind, GraphFormat, Verb, WordOp};

pub fn dispatch(verb: &Verb, budget: usize) -> Result<Report, CliError> {
    match verb {
        Verb::Graph { graph, iso, format } => graph_cmd(graph, iso.as_deref(), *format),
        Verb::Word { op } => word_cmd(op),
        Verb::Pearl {
            word,
            graph,
            marked,
        } => pearl_cmd(word, graph, *marked),
        Verb::Chain { file } => chain_cmd(file, budget),
        Verb::Decompose {
            graph,
            kind,
            verify,
        } => decompose_cmd(graph, *kind, verify.as_deref()),
        Verb::Assemble { plan, from } => assemble_cmd(plan.as_deref(), from.as_deref()),
        Verb::Minor {
            host,
            pattern,
            verify,
            sequences,
        } => minor_cmd(host, pattern, verify.as_deref(), *sequences),
        Verb::Subdivision {
            big,
            small,
            contains,
            verify,
        } => subdivision_cmd(big, small.as_deref(), *contains, verify.as_deref()),
        Verb::Classify {
            graph,
            property,
            route,
        } => {
            let g = input::graph(graph)?;
            let c = classify(&g, *property, *route)?;
            let mut r = Report::new("classify", "");
            r.routes = c.outcomes.iter().map(|o| o.route.to_string()).collect();
            r = r
                .line(format!("{}: {}", c.property, c.value))
                .field("property", c.property)
                .field("value", c.value)
                .field("outcomes", &c.outcomes)
                .field("flags", &c.flags);
            for o in &c.outcomes {
                r = r.line(format!("  {} route: {}", o.route, o.value));
                for e in &o.evidence {
                    r = r.line(format!("    {}", serde_json::to_string(e).expect("json")));
                }
            }
            for f in &c.flags {
                r = r.line(format!("  note: {f}"));
            }
            Ok(match c.value {
                Value::Bool(b) => r.verdict(b),
                _ => r,
            })
        }
        Verb::Enumerate {
            n,
            connected,
            classes,
        } => {
            let graphs: Vec<Graph> = if *classes {
                isomorphism_classes(*n)?
            } else {
                enumerate_graphs(*n)?.collect()
            };
            let graphs: Vec<Graph> = graphs
                .into_iter()
                .filter(|g| !connected || g.is_connected())
                .collect();
            let mut r = Report::new(
                "enumerate",
                if *classes {
                    "canonical-forms"
                } else {
                    "labeled"
                },
            )
            .field("count", graphs.len())
            .field("graphs", &graphs)
            .line(format!("{} graphs", graphs.len()));
            for g in &graphs {
                r = r.line(g.to_string());
            }
            Ok(r)
        }
    }
}

fn graph_cmd(src: &str, iso: Option<&str>, format: GraphFormat) -> Result<Report, CliError> {
    let g = input::graph(src)?;
    if let Some(other) = iso {
        let h = input::graph(other)?;
        let map = g.are_isomorphic(&h)?;
        let r = Report::new("graph", "isomorphism-search").field("isomorphism", &map);
        return Ok(match map {
            Some(m) => r.line(format!("isomorphic: {m:?}")).verdict(true),
            None => r.line("not isomorphic").verdict(false),
        });
    }
    let mut r = Report::new("graph", "direct").field("graph", &g);
    r = match format {
        GraphFormat::EdgeList => r.line(g.to_edge_list().trim_end()),
        GraphFormat::Dot => r.line(g.to_dot().trim_end()),
        GraphFormat::Json => r.line(serde_json::to_string(&g).expect("json")),
        GraphFormat::Summary => {
            let kappa = g.vertex_connectivity()?;
            let lambda = g.edge_connectivity()?;
            r.field("vertex_count", g.vertex_count())
                .field("edge_count", g.edge_count())
                .field("degrees", g.degrees())
                .field("connected", g.is_connected())
                .field("vertex_connectivity", kappa)
                .field("edge_connectivity", lambda)
                .line(g.to_string())
                .line(format!("degrees {:?}", g.degrees()))
                .line(format!(
                    "connected {}, vertex connectivity {kappa}, edge connectivity {lambda}",
                    g.is_connected()
                ))
        }
    };
    Ok(r)
}

fn word_cmd(op: &WordOp) -> Result<Report, CliError> {
    let load = |graph: &str| -> Result<Raag, CliError> { Ok(Raag::new(input::graph(graph)?)) };
    Ok(match op {
        WordOp::Eq { a, b, graph } => {
            let raag = load(graph)?;
            let (a, b) = (input::word(a)?, input::word(b)?);
            let (na, nb) = (raag.normalize(&a)?, raag.normalize(&b)?);
            let eq = na == nb;
            Report::new("word", "normal-form")
                .field("normal_forms", [&na, &nb])
                .line(format!("{na} {} {nb}", if eq { "=" } else { "≠" }))
                .verdict(eq)
        }
        WordOp::Normalize { word, graph } => {
            let nf = load(graph)?.normalize(&input::word(word)?)?;
            Report::new("word", "normal-form")
                .field("normal_form", &nf)
                .line(nf.to_string())
        }
        WordOp::Reduce { word, graph } => {
            let cr = load(graph)?.cyclically_reduce(&input::word(word)?)?;
            Report::new("word", "cyclic-reduction")
                .field("core", &cr.core)
                .field("conjugator", &cr.conjugator)
                .line(format!("core {}", cr.core))
                .line(format!("conjugator {}", cr.conjugator))
        }
        WordOp::Abelianize { word, graph } => {
            let v = load(graph)?.abelianize(&input::word(word)?)?;
            Report::new("word", "abelianization")
                .field("vector", &v)
                .line(format!("{:?}", v.0))
        }
        WordOp::Centralizer { word, graph } => {
            let raag = load(graph)?;
            let out = raag.centralizer_ear(&input::word(word)?)?;
            let r = Report::new("word", "centralizer").field("centralizer", &out);
            match &out {
                CentralizerOutcome::WholeGroup => r.line("the whole group"),
                CentralizerOutcome::Described(d) => {
                    let gens: Vec<String> = d.generators().iter().map(|h| h.to_string()).collect();
                    r.line(format!("shape {}", d.shape(&raag)))
                        .line(format!("generated by {}", gens.join(", ")))
                }
            }
        }
        WordOp::Primitive { word, graph, pair } => {
            let p = load(graph)?.is_primitive_rank2(&input::word(word)?, *pair)?;
            Report::new("word", "stallings-folding")
                .line(if p { "primitive" } else { "not primitive" })
                .verdict(p)
        }
    })
}

fn pearl_cmd(word: &str, graph: &str, marked: Option<usize>) -> Result<Report, CliError> {
    let g = input::graph(graph)?;
    let pc = classify_pearl(&g, marked, &input::word(word)?)?;
    let line = match pc.vertex() {
        Some(v) => format!("{:?} at v{v}, conjugator {}", pc.kind, pc.conjugator),
        None => "not a pearl".to_string(),
    };
    Ok(Report::new("pearl", "cyclic-reduction")
        .field("class", &pc)
        .line(line)
        .verdict(pc.is_pearl()))
}

fn chain_cmd(file: &str, budget: usize) -> Result<Report, CliError> {
    let de: DecoratedEar = input::json(file, "decorated_ear")?;
    let rep = verify_pearl_chain(&de, budget)?;
    let mut r = Report::new("chain", "pearl-chain-verification")
        .field("budget", budget)
        .field("steps", &rep.steps)
        .line(if rep.accepted { "accepted" } else { "rejected" });
    for s in &rep.steps {
        r = r.line(format!(
            "  [{}] {}",
            if s.ok { "ok" } else { "FAIL" },
            s.check
        ));
    }
    Ok(r.verdict(rep.accepted))
}

fn decompose_cmd(
    src: &str,
    kind: DecompositionKind,
    check: Option<&str>,
) -> Result<Report, CliError> {
    let g = input::graph(src)?;
    if kind == DecompositionKind::ThreeConn {
        if let Some(file) = check {
            let bundle: ThreeConnBundle = input::json(file, "bundle")?;
            let res = bundle.verify(&g);
            let r = Report::new("decompose", "verify");
            return Ok(match res {
                Ok(()) => r.line("certificate holds").verdict(true),
                Err(m) => r.field("violation", &m).line(m).verdict(false),
            });
        }
        let r = Report::new("decompose", "ear-search");
        return Ok(match find_3conn_bundle(&g)? {
            Some(b) => r
                .line(format!(
                    "{} non-separating sequences, one per oriented edge",
                    b.certificates.len()
                ))
                .field("bundle", &b)
                .verdict(true),
            None => r
                .line("some oriented edge has no non-separating sequence")
                .verdict(false),
        });
    }
    let kind = match kind {
        DecompositionKind::Loose => Kind::Loose,
        DecompositionKind::Standard => Kind::Standard,
        DecompositionKind::Proper => Kind::Proper,
        DecompositionKind::Nested => Kind::Nested,
        DecompositionKind::Odd => Kind::Odd,
        DecompositionKind::ThreeConn => unreachable!(),
    };
    if let Some(file) = check {
        let d: EarDecomposition = input::json(file, "decomposition")?;
        if d.kind != kind {
            return Err(CliError::Input(format!(
                "the file holds a {} decomposition, not {kind}",
                d.kind
            )));
        }
        let r = Report::new("decompose", "verify");
        return Ok(match verify_decomposition(&g, &d) {
            Ok(()) => r.line("valid").verdict(true),
            Err(v) => r.field("violation", &v).line(v.to_string()).verdict(false),
        });
    }
    let found = match kind {
        Kind::Loose => find_loose(&g),
        Kind::Standard => find_standard(&g),
        Kind::Proper => find_proper(&g),
        Kind::Nested => find_nested(&g)?,
        Kind::Odd => find_odd(&g)?,
    };
    let r = Report::new("decompose", "ear-search");
    Ok(match found {
        Some(d) => {
            let mut r = r.line(format!("{} ears", d.ear_count()));
            for e in &d.ears {
                r = r.line(format!("  {e}"));
            }
            r.field("decomposition", &d).verdict(true)
        }
        None => r
            .line(format!("no {kind} ear decomposition"))
            .verdict(false),
    })
}

fn assemble_cmd(plan: Option<&str>, from: Option<&str>) -> Result<Report, CliError> {
    if let Some(src) = from {
        let g = input::graph(src)?;
        let d = find_loose(&g)
            .ok_or_else(|| CliError::Input("the graph has no loose ear decomposition".into()))?;
        let plan = plan_from_decomposition(&g, &d)?;
        return Ok(Report::new("assemble", "plan-from-decomposition")
            .line(serde_json::to_string_pretty(&plan).expect("json"))
            .field("plan", &plan));
    }
    let src = plan.ok_or_else(|| CliError::Input("give a plan file or --from <graph>".into()))?;
    let plan: AssemblyPlan = input::json(src, "plan")?;
    let out = assemble(&plan)?;
    Ok(Report::new("assemble", "amalgamation")
        .line(out.graph.to_string())
        .field("graph", &out.graph)
        .field("pearl_maps", &out.pearl_maps)
        .field("decomposition", &out.decomposition))
}

fn minor_cmd(
    host: &str,
    pattern: &str,
    check: Option<&str>,
    sequences: bool,
) -> Result<Report, CliError> {
    let (h, p) = (input::graph(host)?, input::graph(pattern)?);
    if let Some(file) = check {
        let w: MinorWitness = input::json(file, "witness")?;
        let r = Report::new("minor", "verify");
        return Ok(match w.validate(&h, &p) {
            Ok(()) => r.line("valid branch sets").verdict(true),
            Err(e) => r
                .field("violation", e.to_string())
                .line(e.to_string())
                .verdict(false),
        });
    }
    let r = Report::new("minor", "minor-search");
    Ok(match find_minor(&h, &p)? {
        Some(w) => {
            let mut r = r.field("witness", &w);
            for (k, set) in w.sets(p.vertex_count())?.iter().enumerate() {
                r = r.line(format!("v{k} <- {set:?}"));
            }
            if sequences {
                let s = witness_to_sequences(&h, &p, &w)?;
                r = r
                    .line(format!(
                        "{} deletions, {} identifications, {} abelianisings",
                        s.deletions.len(),
                        s.identifications.len(),
                        s.abelianisings.len()
                    ))
                    .field("sequences", &s);
            }
            r.verdict(true)
        }
        None => r.line("no minor (exhaustive search)").verdict(false),
    })
}

fn subdivision_cmd(
    big: &str,
    small: Option<&str>,
    contains: bool,
    check: Option<&str>,
) -> Result<Report, CliError> {
    let b = input::graph(big)?;
    let Some(small) = small else {
        let s = fully_smoothed(&b)?;
        return Ok(Report::new("subdivision", "smoothing")
            .line(s.to_string())
            .field("graph", &s));
    };
    let s = input::graph(small)?;
    if contains {
        if let Some(file) = check {
            let w: TopologicalWitness = input::json(file, "witness")?;
            let ok = w.validate(&b, &s);
            return Ok(Report::new("subdivision", "verify")
                .line(if ok {
                    "valid subdivision"
                } else {
                    "invalid witness"
                })
                .verdict(ok));
        }
        let r = Report::new("subdivision", "path-routing");
        return Ok(match find_topological_minor(&b, &s)? {
            Some(w) => r
                .line(format!("branch vertices {:?}", w.branch))
                .field("witness", &w)
                .verdict(true),
            None => r.line("no subdivision (exhaustive search)").verdict(false),
        });
    }
    let r = Report::new("subdivision", "smoothing-search");
    Ok(match is_subdivision_of(&b, &s)? {
        Some(steps) => {
            let order: Vec<usize> = steps
                .iter()
                .map(|st| match st.kind {
                    raag_core::StepKind::Smoothing { vertex } => vertex,
                    _ => unreachable!("only smoothing steps"),
                })
                .collect();
            r.line(format!("smooth {order:?}"))
                .field("smoothed", &order)
                .verdict(true)
        }
        None => r.line("not a subdivision").verdict(false),
    })
}
