//! Job files: `char <p>`, `vars <names>`, then `ideal:` (one generator per
//! line), `facets: 1 2; 2 3`, or `graph: 1 2; 2 3` (`edges:` is accepted as
//! a synonym). `#` starts a comment.

use std::fmt;

use lyubeznik_core::field::is_prime;
use lyubeznik_core::parse::parse_polynomial_at;
use lyubeznik_core::{format_polynomial, Graph, Ideal, PolyRing, PrimeField, SimplicialComplex};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    /// Generators as written, each with its line and column.
    Ideal(Vec<(String, usize, usize)>),
    Facets(Vec<Vec<usize>>),
    Graph(Vec<(usize, usize)>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    pub characteristic: u64,
    pub vars: Vec<String>,
    pub source: Source,
}

/// A job resolved into algebra.
#[derive(Clone, Debug)]
pub struct Job {
    pub ring: PolyRing,
    pub ideal: Ideal,
    pub complex: Option<SimplicialComplex>,
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> CliError {
    CliError::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Column (1-based) of `needle` inside `line`, which must be a subslice.
fn column_of(line: &str, needle: &str) -> usize {
    needle.as_ptr() as usize - line.as_ptr() as usize + 1
}

fn parse_groups(line_no: usize, line: &str, body: &str) -> Result<Vec<Vec<usize>>, CliError> {
    let mut out = Vec::new();
    for group in body.split(';') {
        let mut verts = Vec::new();
        for tok in group.split_whitespace() {
            let v: usize = tok.parse().map_err(|_| {
                parse_err(
                    line_no,
                    column_of(line, tok),
                    format!("expected a vertex number, found {tok:?}"),
                )
            })?;
            if v == 0 {
                return Err(parse_err(line_no, column_of(line, tok), "vertices are numbered from 1"));
            }
            verts.push(v);
        }
        if !verts.is_empty() {
            out.push(verts);
        }
    }
    Ok(out)
}

impl JobSpec {
    pub fn parse(text: &str) -> Result<JobSpec, CliError> {
        let mut characteristic: Option<u64> = None;
        let mut vars: Option<Vec<String>> = None;
        let mut source: Option<Source> = None;
        let mut last = 0;
        for (k, raw) in text.lines().enumerate() {
            let line_no = k + 1;
            last = line_no;
            let line = raw.split('#').next().unwrap_or("");
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            let col = column_of(raw, trimmed);
            if let Some(src) = source.as_mut() {
                let is_header = ["char ", "vars ", "ideal:", "facets:", "graph:", "edges:"]
                    .iter()
                    .any(|h| trimmed.starts_with(h));
                if is_header {
                    return Err(parse_err(
                        line_no,
                        col,
                        "the ideal source must come last and appear once",
                    ));
                }
                match src {
                    Source::Ideal(gens) => gens.push((trimmed.to_string(), line_no, col)),
                    Source::Facets(fs) => fs.extend(parse_groups(line_no, raw, line)?),
                    Source::Graph(es) => es.extend(edges(line_no, raw, line)?),
                }
                continue;
            }
            if let Some(rest) = trimmed.strip_prefix("char ") {
                let tok = rest.trim();
                let p: u64 = tok.parse().map_err(|_| {
                    parse_err(
                        line_no,
                        column_of(raw, tok),
                        format!("expected an integer, found {tok:?}"),
                    )
                })?;
                if !is_prime(p) || p >= 1 << 31 {
                    return Err(parse_err(
                        line_no,
                        column_of(raw, tok),
                        format!("{p} is not prime (char must be a prime below 2^31)"),
                    ));
                }
                characteristic = Some(p);
            } else if let Some(rest) = trimmed.strip_prefix("vars ") {
                let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                if names.is_empty() {
                    return Err(parse_err(line_no, col, "no variables given"));
                }
                vars = Some(names);
            } else if let Some(rest) = trimmed.strip_prefix("ideal:") {
                let mut gens = Vec::new();
                let g = rest.trim();
                if !g.is_empty() {
                    gens.push((g.to_string(), line_no, column_of(raw, g)));
                }
                source = Some(Source::Ideal(gens));
            } else if let Some(rest) = trimmed.strip_prefix("facets:") {
                source = Some(Source::Facets(parse_groups(line_no, raw, rest)?));
            } else if let Some(rest) = trimmed
                .strip_prefix("graph:")
                .or_else(|| trimmed.strip_prefix("edges:"))
            {
                source = Some(Source::Graph(edges(line_no, raw, rest)?));
            } else {
                let word = trimmed.split_whitespace().next().unwrap_or(trimmed);
                return Err(parse_err(line_no, col, format!("unknown directive {word:?}")));
            }
        }
        let eof = last + 1;
        Ok(JobSpec {
            characteristic: characteristic.ok_or_else(|| parse_err(eof, 1, "missing `char` line"))?,
            vars: vars.ok_or_else(|| parse_err(eof, 1, "missing `vars` line"))?,
            source: source.ok_or_else(|| parse_err(eof, 1, "missing `ideal:`, `facets:` or `graph:` section"))?,
        })
    }

    pub fn build(&self) -> Result<Job, CliError> {
        let field = PrimeField::new(self.characteristic)?;
        let ring = PolyRing::new(field, self.vars.clone()).map_err(|e| parse_err(2, 1, e.to_string()))?;
        let v = ring.nvars();
        match &self.source {
            Source::Ideal(gens) => {
                let polys = gens
                    .iter()
                    .map(|(g, line, col)| parse_polynomial_at(&ring, g, *line, *col))
                    .collect::<Result<Vec<_>, _>>()?;
                let ideal = Ideal::new(&ring, polys)?;
                Ok(Job {
                    ring,
                    ideal,
                    complex: None,
                })
            }
            Source::Facets(facets) => {
                let complex = SimplicialComplex::new(v, facets).map_err(|e| parse_err(3, 1, e.to_string()))?;
                let ideal = complex.stanley_reisner_ideal(&ring)?;
                Ok(Job {
                    ring,
                    ideal,
                    complex: Some(complex),
                })
            }
            Source::Graph(es) => {
                if v % 2 != 0 {
                    return Err(parse_err(
                        2,
                        1,
                        "a graph needs 2v variables: x-variables first, then y-variables",
                    ));
                }
                let graph = Graph::new(v / 2, es).map_err(|e| parse_err(3, 1, e.to_string()))?;
                let ideal = graph.binomial_edge_ideal(&ring)?;
                Ok(Job {
                    ring,
                    ideal,
                    complex: None,
                })
            }
        }
    }
}

fn edges(line_no: usize, raw: &str, body: &str) -> Result<Vec<(usize, usize)>, CliError> {
    parse_groups(line_no, raw, body)?
        .into_iter()
        .map(|g| match g[..] {
            [a, b] => Ok((a, b)),
            _ => Err(parse_err(
                line_no,
                1,
                format!("an edge has two endpoints, found {}", g.len()),
            )),
        })
        .collect()
}

impl fmt::Display for JobSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "char {}", self.characteristic)?;
        writeln!(f, "vars {}", self.vars.join(" "))?;
        let groups = |gs: Vec<String>| gs.join("; ");
        match &self.source {
            Source::Ideal(gens) => {
                writeln!(f, "ideal:")?;
                for (g, _, _) in gens {
                    writeln!(f, "{g}")?;
                }
                Ok(())
            }
            Source::Facets(fs) => writeln!(
                f,
                "facets: {}",
                groups(
                    fs.iter()
                        .map(|s| s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
                        .collect()
                )
            ),
            Source::Graph(es) => writeln!(
                f,
                "graph: {}",
                groups(es.iter().map(|(a, b)| format!("{a} {b}")).collect())
            ),
        }
    }
}

impl Job {
    /// Generators of the ideal in canonical printed form.
    pub fn generators(&self) -> Vec<String> {
        self.ideal.generators().iter().map(format_polynomial).collect()
    }
}

/// Canonical text of a job, with generators reprinted, for hashing and
/// round trips.
pub fn canonical(spec: &JobSpec, job: &Job) -> String {
    let mut canon = spec.clone();
    if let Source::Ideal(_) = canon.source {
        canon.source = Source::Ideal(job.generators().into_iter().map(|g| (g, 0, 0)).collect());
    }
    canon.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_each_source_kind() {
        let s = JobSpec::parse("char 2\nvars x y\nideal:\n  x*y  # a comment\n").unwrap();
        assert_eq!(s.source, Source::Ideal(vec![("x*y".into(), 4, 3)]));
        let f = JobSpec::parse("char 3\nvars a b c d\nfacets: 1 2; 3 4\n").unwrap();
        assert_eq!(f.source, Source::Facets(vec![vec![1, 2], vec![3, 4]]));
        let g = JobSpec::parse("char 5\nvars x1 x2 x3 y1 y2 y3\nedges: 1 2; 2 3\n3 1\n").unwrap();
        assert_eq!(g.source, Source::Graph(vec![(1, 2), (2, 3), (3, 1)]));
        assert_eq!(g.build().unwrap().ideal.generators().len(), 3);
    }

    #[test]
    fn reports_positions() {
        let e = JobSpec::parse("char 4\nvars x\nideal:\nx\n").unwrap_err();
        assert_eq!(
            e.to_string(),
            "line 1, column 6: 4 is not prime (char must be a prime below 2^31)"
        );
        let e = JobSpec::parse("char 2\nvars x y\nideal:\nx*y + z\n")
            .unwrap()
            .build()
            .unwrap_err();
        assert!(
            matches!(e, CliError::Core(lyubeznik_core::Error::Parse { line: 4, .. })),
            "{e}"
        );
        let e = JobSpec::parse("char 2\nvars x\nfacets: 1 b\n").unwrap_err();
        assert_eq!(
            e.to_string(),
            "line 3, column 11: expected a vertex number, found \"b\""
        );
        assert!(JobSpec::parse("char 2\nideal:\nx\n")
            .unwrap_err()
            .to_string()
            .contains("missing `vars`"));
    }

    #[test]
    fn printing_round_trips() {
        for text in [
            "char 3\nvars x y z\nideal:\nx^2 - y*z\n",
            "char 2\nvars a b c\nfacets: 1 2; 2 3\n",
            "char 7\nvars x1 x2 y1 y2\ngraph: 1 2\n",
        ] {
            let s = JobSpec::parse(text).unwrap();
            let again = JobSpec::parse(&s.to_string()).unwrap();
            assert_eq!(
                canonical(&s, &s.build().unwrap()),
                canonical(&again, &again.build().unwrap())
            );
        }
    }
}
