use std::fmt;

use dagbound::dim_two::CertificationOutcome;
use dagbound::{Digraph, Ranking};
use serde::{Deserialize, Serialize};

/// The result of one command. `--json` prints it as a single JSON document;
/// otherwise [`fmt::Display`] renders the same fields as text.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "snake_case")]
pub enum Report {
    Analyze {
        name: Option<String>,
        n: usize,
        arcs: usize,
        acyclic: bool,
        transitive: bool,
        e_vector: Vec<i64>,
        ee: i64,
        /// `⟨e,e⟩ / 2`
        floor: i64,
    },
    Check {
        ordering: Ranking,
        eg: i64,
        ee: i64,
        gap2: i64,
        equality: bool,
        /// `num/den`, absent when there are no arcs.
        average_relational_distance: Option<String>,
        /// `n + 1 − g + e`, present in the equality case.
        conjugate: Option<Ranking>,
    },
    Minimize {
        method: String,
        min_eg: i64,
        argmin: Ranking,
        sequence: Vec<usize>,
        explored: u64,
        proven_optimal: bool,
        ee: i64,
        floor: i64,
        gap2: i64,
    },
    Certify {
        outcome: CertificationOutcome,
        /// Result of re-running the peeling checks on the certificate.
        peel_check: Option<bool>,
        /// Every ordering attaining the bound, with `--verbose`.
        equality_orderings: Option<Vec<Ranking>>,
    },
    Oracle {
        dim_at_most_two: bool,
        realizer: Option<(Ranking, Ranking)>,
    },
    Enumerate {
        count: usize,
        truncated: bool,
        orderings: Vec<Ranking>,
    },
    Generate {
        family: String,
        graph: Digraph,
    },
    Error {
        exit_code: i32,
        message: String,
    },
}

fn list<T: fmt::Display>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Report::Analyze {
                name,
                n,
                arcs,
                acyclic,
                transitive,
                e_vector,
                ee,
                floor,
            } => {
                if let Some(name) = name {
                    writeln!(f, "name:       {name}")?;
                }
                writeln!(f, "vertices:   {n}")?;
                writeln!(f, "arcs:       {arcs}")?;
                writeln!(f, "acyclic:    {acyclic}")?;
                writeln!(f, "transitive: {transitive}")?;
                writeln!(f, "e-vector:   {}", list(e_vector))?;
                writeln!(f, "<e,e>:      {ee}")?;
                write!(f, "floor:      {floor}")
            }
            Report::Check {
                ordering,
                eg,
                ee,
                gap2,
                equality,
                average_relational_distance,
                conjugate,
            } => {
                writeln!(f, "ordering:   {ordering}")?;
                writeln!(f, "<e,g>:      {eg}")?;
                writeln!(f, "<e,e>:      {ee}")?;
                writeln!(f, "gap2:       {gap2}")?;
                write!(f, "equality:   {equality}")?;
                if let Some(ard) = average_relational_distance {
                    write!(f, "\navg dist:   {ard}")?;
                }
                if let Some(conj) = conjugate {
                    write!(f, "\nconjugate:  {conj}")?;
                }
                Ok(())
            }
            Report::Minimize {
                method,
                min_eg,
                argmin,
                sequence,
                explored,
                proven_optimal,
                ee,
                floor,
                gap2,
            } => {
                writeln!(f, "method:     {method}")?;
                writeln!(f, "min <e,g>:  {min_eg}")?;
                writeln!(f, "argmin:     {argmin}")?;
                writeln!(f, "sequence:   {}", list(sequence))?;
                writeln!(f, "<e,e>:      {ee}")?;
                writeln!(f, "floor:      {floor}")?;
                writeln!(f, "gap2:       {gap2}")?;
                writeln!(f, "explored:   {explored}")?;
                write!(f, "optimal:    {proven_optimal}")
            }
            Report::Certify {
                outcome,
                peel_check,
                equality_orderings,
            } => {
                match outcome {
                    CertificationOutcome::CertifiedDim2(c) => {
                        writeln!(f, "verdict:    dimension at most two")?;
                        writeln!(f, "g:          {}", c.g)?;
                        writeln!(f, "f:          {}", c.f)?;
                        let arcs: Vec<String> = c
                            .reconstructed
                            .arcs()
                            .map(|(u, v)| format!("{u}->{v}"))
                            .collect();
                        write!(f, "f ∩ g:      {}", arcs.join(" "))?;
                    }
                    CertificationOutcome::NotDim2 { min_eg, floor } => {
                        writeln!(f, "verdict:    dimension greater than two")?;
                        writeln!(f, "min <e,g>:  {min_eg}")?;
                        write!(f, "floor:      {floor}")?;
                    }
                    CertificationOutcome::NotAPoset => {
                        write!(f, "verdict:    not a poset (not transitively closed)")?;
                    }
                    CertificationOutcome::Undecided { best_eg, floor } => {
                        writeln!(f, "verdict:    undecided (budget exhausted)")?;
                        writeln!(f, "best <e,g>: {best_eg}")?;
                        write!(f, "floor:      {floor}")?;
                    }
                }
                if let Some(ok) = peel_check {
                    write!(f, "\npeel check: {ok}")?;
                }
                if let Some(all) = equality_orderings {
                    write!(f, "\nequality orderings ({}):", all.len())?;
                    for g in all {
                        write!(f, "\n  {g}")?;
                    }
                }
                Ok(())
            }
            Report::Oracle {
                dim_at_most_two,
                realizer,
            } => {
                write!(f, "dimension <= 2: {dim_at_most_two}")?;
                if let Some((a, b)) = realizer {
                    write!(f, "\nrealizer:       {a} {b}")?;
                }
                Ok(())
            }
            Report::Enumerate {
                count,
                truncated,
                orderings,
            } => {
                for g in orderings {
                    writeln!(f, "{g}")?;
                }
                write!(f, "count: {count}")?;
                if *truncated {
                    write!(f, " (truncated)")?;
                }
                Ok(())
            }
            Report::Generate { family, graph } => {
                write!(
                    f,
                    "{}",
                    dagbound::io::serialize_instance(graph, Some(family)).trim_end()
                )
            }
            Report::Error { message, .. } => write!(f, "error: {message}"),
        }
    }
}
