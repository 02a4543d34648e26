use rowmotion_core::harness::Format;
use rowmotion_core::Poset;
use serde::Serialize;

use crate::CliResult;

#[derive(Debug, Serialize)]
struct PosetInfo {
    poset: String,
    elements: usize,
    names: Vec<String>,
    covers: Vec<(usize, usize)>,
    minimal: Vec<usize>,
    maximal: Vec<usize>,
    linear_extension: Vec<usize>,
    graded: bool,
    rank: Option<usize>,
    ranks: Option<Vec<usize>>,
    /// Absent when the chain budget is exceeded.
    maximal_chains: Option<usize>,
}

pub(crate) fn render(label: &str, p: &Poset, format: Format) -> CliResult<String> {
    let info = PosetInfo {
        poset: label.to_string(),
        elements: p.len(),
        names: p.names().to_vec(),
        covers: p.covers().to_vec(),
        minimal: p.minimal_elements(),
        maximal: p.maximal_elements(),
        linear_extension: p.linear_extension().to_vec(),
        graded: p.is_graded(),
        rank: p.poset_rank(),
        ranks: p.ranks().map(<[usize]>::to_vec),
        maximal_chains: p.chain_index().ok().map(|c| c.len()),
    };
    Ok(match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&info).map_err(|e| crate::CliError::Input(e.to_string()))?;
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::from("element,name,rank,upper_covers\n");
            for v in p.elements() {
                let up: Vec<String> = p.upper_covers(v).iter().map(|u| u.to_string()).collect();
                let rank = p.rank(v).map_or_else(String::new, |r| r.to_string());
                s.push_str(&format!("{v},\"{}\",{rank},{}\n", p.name(v), up.join(" ")));
            }
            s
        }
        Format::Text => {
            let names = |vs: &[usize]| vs.iter().map(|&v| p.name(v)).collect::<Vec<_>>().join(" ");
            let covers: Vec<String> = p.covers().iter().map(|&(u, v)| format!("{}<{}", p.name(u), p.name(v))).collect();
            let mut s = String::new();
            s.push_str(&format!("poset             {label}\n"));
            s.push_str(&format!("elements          {}\n", p.len()));
            s.push_str(&format!("covers            {}\n", covers.join(" ")));
            s.push_str(&format!("minimal           {}\n", names(&info.minimal)));
            s.push_str(&format!("maximal           {}\n", names(&info.maximal)));
            s.push_str(&format!("linear extension  {}\n", names(&info.linear_extension)));
            match info.rank {
                Some(r) => s.push_str(&format!("graded            yes, rank {r}\n")),
                None => s.push_str("graded            no\n"),
            }
            match info.maximal_chains {
                Some(c) => s.push_str(&format!("maximal chains    {c}\n")),
                None => s.push_str("maximal chains    over budget\n"),
            }
            s
        }
    })
}
