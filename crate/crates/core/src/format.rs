//! Plain-text automaton format and Graphviz export.
//!
//! ```text
//! alphabet a b
//! states 2
//! initial 0
//! final 1
//! 0 a 1
//! 1 b 0
//! ```
//!
//! The four header lines come first, in this order, followed by one
//! transition per line. `#` starts a comment. Serialization sorts
//! transitions by source, letter index and target.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::automata::{Alphabet, Automaton, Dfa, Machine, Nfa, StateId};
use crate::error::{Error, Result};

fn parse_err<T>(line: usize, reason: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        line,
        reason: reason.into(),
    })
}

struct Parsed {
    nfa: Nfa,
    // Line of each transition, in input order.
    lines: Vec<(usize, (StateId, usize, StateId))>,
}

fn parse_raw(text: &str) -> Result<Parsed> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let mut header = |key: &str| -> Result<(usize, Vec<&str>)> {
        let Some((no, line)) = lines.next() else {
            return parse_err(text.lines().count() + 1, format!("missing `{key}` line"));
        };
        let mut fields = line.split_whitespace();
        if fields.next() != Some(key) {
            return parse_err(no, format!("expected `{key}` line"));
        }
        Ok((no, fields.collect()))
    };

    let (no, names) = header("alphabet")?;
    let alphabet =
        Alphabet::new(names.iter().copied()).or_else(|e| parse_err(no, e.to_string()))?;
    let (no, n) = header("states")?;
    let n: usize = match n.as_slice() {
        [v] => v
            .parse()
            .or_else(|_| parse_err(no, format!("bad state count {v:?}")))?,
        _ => return parse_err(no, "expected a single state count"),
    };
    let state = |no: usize, v: &str| -> Result<StateId> {
        match v.parse::<StateId>() {
            Ok(q) if q < n => Ok(q),
            Ok(q) => parse_err(no, format!("state {q} out of range (states {n})")),
            Err(_) => parse_err(no, format!("bad state {v:?}")),
        }
    };
    let (no, init) = header("initial")?;
    let initial = init
        .iter()
        .map(|v| state(no, v))
        .collect::<Result<Vec<_>>>()?;
    let (no, fin) = header("final")?;
    let finals = fin
        .iter()
        .map(|v| state(no, v))
        .collect::<Result<Vec<_>>>()?;

    let mut transitions = Vec::new();
    for (no, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [p, a, q] = fields.as_slice() else {
            return parse_err(no, "expected `<src> <symbol> <dst>`");
        };
        let p = state(no, p)?;
        let q = state(no, q)?;
        let Some(a) = alphabet.index_of(a) else {
            return parse_err(no, format!("unknown symbol {a:?}"));
        };
        transitions.push((no, (p, a, q)));
    }
    let nfa = Nfa::new(
        alphabet,
        n,
        transitions.iter().map(|&(_, t)| t),
        initial,
        finals,
    )?;
    Ok(Parsed {
        nfa,
        lines: transitions,
    })
}

/// Parses an automaton of either kind; deterministic input yields a DFA.
pub fn parse_automaton(text: &str) -> Result<Machine> {
    let nfa = parse_nfa(text)?;
    Ok(match nfa.to_dfa() {
        Ok(d) => Machine::Dfa(d),
        Err(_) => Machine::Nfa(nfa),
    })
}

pub fn parse_nfa(text: &str) -> Result<Nfa> {
    Ok(parse_raw(text)?.nfa)
}

/// Parses and requires one initial state and at most one target per
/// state and letter.
pub fn parse_dfa(text: &str) -> Result<Dfa> {
    let parsed = parse_raw(text)?;
    let nfa = &parsed.nfa;
    if nfa.initial().len() != 1 {
        return Err(Error::Determinism(format!(
            "{} initial states, expected exactly one",
            nfa.initial().len()
        )));
    }
    let mut seen = BTreeMap::new();
    for &(no, (p, a, q)) in &parsed.lines {
        if let Some(&(old, _)) = seen.get(&(p, a)).filter(|&&(_, r)| r != q) {
            return Err(Error::Determinism(format!(
                "line {no}: second target for state {p} on {} (first on line {old})",
                nfa.alphabet().name(a)
            )));
        }
        seen.entry((p, a)).or_insert((no, q));
    }
    nfa.to_dfa()
}

/// Canonical text form.
pub fn serialize_automaton(a: &impl Automaton) -> String {
    let nfa = a.to_nfa();
    let alphabet = nfa.alphabet();
    let mut out = String::from("alphabet");
    for name in alphabet.names() {
        out.push(' ');
        out.push_str(name);
    }
    let list = |xs: &[StateId]| xs.iter().map(|q| format!(" {q}")).collect::<String>();
    let _ = write!(
        out,
        "\nstates {}\ninitial{}\nfinal{}\n",
        nfa.num_states(),
        list(nfa.initial()),
        list(&nfa.finals())
    );
    for (p, c, q) in nfa.transitions() {
        let _ = writeln!(out, "{p} {} {q}", alphabet.name(c));
    }
    out
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz digraph. Initial states get an entry arrow from an invisible
/// point node, final states are double circles, and parallel edges are
/// merged into one edge with a comma-separated label.
pub fn render_dot(a: &impl Automaton) -> String {
    let nfa = a.to_nfa();
    let mut out = String::from("digraph automaton {\n  rankdir=LR;\n");
    for q in 0..nfa.num_states() {
        let shape = if nfa.is_final(q) {
            "doublecircle"
        } else {
            "circle"
        };
        let _ = writeln!(out, "  {q} [shape={shape}];");
    }
    for &q in nfa.initial() {
        let _ = writeln!(out, "  start{q} [shape=point];\n  start{q} -> {q};");
    }
    let mut edges: BTreeMap<(StateId, StateId), Vec<&str>> = BTreeMap::new();
    for (p, c, q) in nfa.transitions() {
        edges
            .entry((p, q))
            .or_default()
            .push(nfa.alphabet().name(c));
    }
    for ((p, q), labels) in edges {
        let _ = writeln!(out, "  {p} -> {q} [label={}];", quote(&labels.join(",")));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witnesses::{d_dfa, not_u_nfa};

    #[test]
    fn parse_a_star() {
        let d = parse_dfa("alphabet a\nstates 1\ninitial 0\nfinal 0\n0 a 0\n").unwrap();
        assert_eq!(d.num_states(), 1);
        assert!(d.accepts(&[0, 0, 0]).unwrap());
    }

    #[test]
    fn bad_state_reports_line() {
        let text = "alphabet a\nstates 3\ninitial 0\nfinal 0\n5 a 0\n";
        match parse_nfa(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 5),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# header\nalphabet a b # letters\n\nstates 2\ninitial 0\nfinal\n0 b 1\n";
        let a = parse_nfa(text).unwrap();
        assert!(a.finals().is_empty());
        assert_eq!(a.num_transitions(), 1);
    }

    #[test]
    fn duplicate_dfa_transition() {
        let text = "alphabet a\nstates 2\ninitial 0\nfinal 1\n0 a 1\n0 a 0\n";
        assert!(matches!(parse_dfa(text), Err(Error::Determinism(_))));
        assert!(parse_nfa(text).is_ok());
        assert!(matches!(parse_automaton(text), Ok(Machine::Nfa(_))));
    }

    #[test]
    fn round_trip() {
        let a = not_u_nfa(3).unwrap();
        let text = serialize_automaton(&a);
        let b = parse_nfa(&text).unwrap();
        assert_eq!(serialize_automaton(&b), text);
        assert_eq!(
            b.transitions().collect::<Vec<_>>(),
            a.transitions().collect::<Vec<_>>()
        );
    }

    #[test]
    fn dot_output() {
        let d = parse_dfa("alphabet a\nstates 1\ninitial 0\nfinal 0\n0 a 0\n").unwrap();
        let dot = render_dot(&d);
        assert!(dot.contains("0 [shape=doublecircle];"));
        assert!(dot.contains("0 -> 0 [label=\"a\"];"));

        let dot = render_dot(&d_dfa(2).unwrap());
        assert!(dot.contains("1 -> 1 [label=\"a2\"];"));
        assert!(dot.contains("2 -> 2 [label=\"a1\"];"));
        assert_eq!(dot.matches("circle]").count(), 3);

        let empty = Nfa::empty(Alphabet::indexed(1));
        assert!(!render_dot(&empty).contains("shape"));
    }
}
