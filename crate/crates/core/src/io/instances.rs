use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_traits::Signed;

use super::{hash_comment, Cursor, ParseResult, Token};
use crate::error::ParseDiagnostic;
use crate::qubo::{Assignment, QuboBuilder, QuboInstance};
use crate::reductions::{Graph, IlpInstance, KnapsackInstance, RationalQubo};

/// Validates a 1-based upper-triangular pair, reporting at the offending token.
fn upper_pair(ti: &Token<'_>, tj: &Token<'_>, n: usize) -> ParseResult<(usize, usize)> {
    let (i, j) = (ti.count()?, tj.count()?);
    for (tok, v) in [(ti, i), (tj, j)] {
        if v == 0 || v > n {
            return Err(tok.error(format!("index {v} out of range 1..={n}")));
        }
    }
    if i > j {
        return Err(ti.error(format!("entry ({i}, {j}) is below the diagonal")));
    }
    Ok((i, j))
}

fn positive_count(tok: &Token<'_>, what: &str) -> ParseResult<usize> {
    let v = tok.count()?;
    if v == 0 {
        return Err(tok.error(format!("{what} must be at least 1")));
    }
    Ok(v)
}

/// `qubo <n> <nnz>` followed by `nnz` lines `<i> <j> <q_ij>`; `#` starts a comment line.
pub fn parse_qubo(text: &str) -> ParseResult<QuboInstance> {
    let mut cur = Cursor::new(text, hash_comment);
    let header = cur.next("`qubo <n> <nnz>` header")?;
    let h = header.exact(3, "header")?;
    h[0].keyword("qubo")?;
    let n = positive_count(&h[1], "variable count")?;
    let nnz = h[2].count()?;

    let mut builder = QuboBuilder::new(n).expect("n >= 1");
    let mut seen = BTreeSet::new();
    for _ in 0..nnz {
        let line = cur.next("an entry line `<i> <j> <q>`")?;
        let t = line.exact(3, "entry")?;
        let (i, j) = upper_pair(&t[0], &t[1], n)?;
        if !seen.insert((i, j)) {
            return Err(t[0].error(format!("duplicate entry ({i}, {j})")));
        }
        builder.insert(i, j, t[2].int()?).expect("validated pair");
    }
    cur.finish()?;
    Ok(builder.build())
}

pub fn write_qubo(q: &QuboInstance) -> String {
    let mut out = format!("qubo {} {}\n", q.n(), q.nnz());
    for (&(i, j), v) in q.entries() {
        writeln!(out, "{i} {j} {v}").unwrap();
    }
    out
}

/// DIMACS-style `p edge <n> <m>` then `m` lines `e <u> <v>`; `c` lines are comments.
pub fn parse_graph(text: &str) -> ParseResult<Graph> {
    let mut cur = Cursor::new(text, |t| t.text == "c");
    let header = cur.next("`p edge <n> <m>` header")?;
    let h = header.exact(4, "header")?;
    h[0].keyword("p")?;
    h[1].keyword("edge")?;
    let n = positive_count(&h[2], "vertex count")?;
    let m = h[3].count()?;

    let mut edges = BTreeSet::new();
    for _ in 0..m {
        let line = cur.next("an edge line `e <u> <v>`")?;
        let t = line.exact(3, "edge")?;
        t[0].keyword("e")?;
        let (u, v) = (t[1].count()?, t[2].count()?);
        for (tok, x) in [(&t[1], u), (&t[2], v)] {
            if x == 0 || x > n {
                return Err(tok.error(format!("vertex {x} out of range 1..={n}")));
            }
        }
        if u == v {
            return Err(t[1].error(format!("self-loop on vertex {u}")));
        }
        if !edges.insert((u.min(v), u.max(v))) {
            return Err(t[1].error(format!("duplicate edge {u}-{v}")));
        }
    }
    cur.finish()?;
    Ok(Graph::new(n, edges).expect("validated edges"))
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n_vertices(), g.edges().len());
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

/// `ilp <m> <n>`, then `m` rows of `n + 1` integers (`a_i1 .. a_in b_i`),
/// then one row of `n` integers (`c`).
pub fn parse_ilp(text: &str) -> ParseResult<IlpInstance> {
    let mut cur = Cursor::new(text, hash_comment);
    let header = cur.next("`ilp <m> <n>` header")?;
    let h = header.exact(3, "header")?;
    h[0].keyword("ilp")?;
    let m = positive_count(&h[1], "row count")?;
    let n = positive_count(&h[2], "column count")?;

    let mut a = Vec::with_capacity(m);
    let mut b = Vec::with_capacity(m);
    for _ in 0..m {
        let line = cur.next("a constraint row")?;
        let t = line.exact(n + 1, "constraint row")?;
        let row = t[..n].iter().map(Token::int).collect::<ParseResult<Vec<_>>>()?;
        let bound = t[n].int()?;
        if bound.is_negative() {
            return Err(t[n].error(format!("bound {bound} is negative")));
        }
        a.push(row);
        b.push(bound);
    }
    let line = cur.next("the objective row")?;
    let c = line
        .exact(n, "objective row")?
        .iter()
        .map(Token::int)
        .collect::<ParseResult<Vec<_>>>()?;
    cur.finish()?;
    Ok(IlpInstance::new(a, b, c).expect("validated dimensions"))
}

pub fn write_ilp(ilp: &IlpInstance) -> String {
    let mut out = format!("ilp {} {}\n", ilp.m(), ilp.n());
    for (row, b) in ilp.a().iter().zip(ilp.b()) {
        for a in row {
            write!(out, "{a} ").unwrap();
        }
        writeln!(out, "{b}").unwrap();
    }
    out.push_str(&join(ilp.c()));
    out.push('\n');
    out
}

fn join<T: std::fmt::Display>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// `knapsack <n> <K>` followed by `n` positive integers, in any line layout.
pub fn parse_knapsack(text: &str) -> ParseResult<KnapsackInstance> {
    let mut cur = Cursor::new(text, hash_comment);
    let header = cur.next("`knapsack <n> <K>` header")?;
    let h = header.exact(3, "header")?;
    h[0].keyword("knapsack")?;
    let n = positive_count(&h[1], "item count")?;
    let cap = h[2].int()?;
    if !cap.is_positive() {
        return Err(h[2].error(format!("capacity {cap} must be at least 1")));
    }

    let mut items = Vec::with_capacity(n);
    while items.len() < n {
        let line = cur.next("item weights")?;
        for tok in &line.tokens {
            if items.len() == n {
                return Err(tok.error("more item weights than declared"));
            }
            let m = tok.int()?;
            if !m.is_positive() {
                return Err(tok.error(format!("item weight {m} must be at least 1")));
            }
            items.push(m);
        }
    }
    cur.finish()?;
    Ok(KnapsackInstance::new(items, cap).expect("validated items"))
}

pub fn write_knapsack(kp: &KnapsackInstance) -> String {
    format!("knapsack {} {}\n{}\n", kp.items().len(), kp.cap(), join(kp.items()))
}

/// `rqubo <n> <nnz>` followed by `nnz` lines `<i> <j> <num> <den>` with `den >= 1`.
pub fn parse_rqubo(text: &str) -> ParseResult<RationalQubo> {
    let mut cur = Cursor::new(text, hash_comment);
    let header = cur.next("`rqubo <n> <nnz>` header")?;
    let h = header.exact(3, "header")?;
    h[0].keyword("rqubo")?;
    let n = positive_count(&h[1], "variable count")?;
    let nnz = h[2].count()?;

    let mut seen = BTreeSet::new();
    let mut entries = Vec::with_capacity(nnz);
    for _ in 0..nnz {
        let line = cur.next("an entry line `<i> <j> <num> <den>`")?;
        let t = line.exact(4, "entry")?;
        let (i, j) = upper_pair(&t[0], &t[1], n)?;
        if !seen.insert((i, j)) {
            return Err(t[0].error(format!("duplicate entry ({i}, {j})")));
        }
        let num = t[2].int()?;
        let den = t[3].int()?;
        if !den.is_positive() {
            return Err(t[3].error(format!("denominator {den} must be at least 1")));
        }
        entries.push((i, j, num, den));
    }
    cur.finish()?;
    Ok(RationalQubo::new(n, entries).expect("validated entries"))
}

pub fn write_rqubo(rq: &RationalQubo) -> String {
    let entries: Vec<_> = rq.entries().collect();
    let mut out = format!("rqubo {} {}\n", rq.n(), entries.len());
    for ((i, j), (num, den)) in entries {
        writeln!(out, "{i} {j} {num} {den}").unwrap();
    }
    out
}

/// Whitespace-separated `0`/`1` values, in any line layout.
pub fn parse_assignment(text: &str) -> ParseResult<Assignment> {
    let cur = Cursor::new(text, hash_comment);
    let mut bits = Vec::new();
    for line in &cur.lines {
        for tok in &line.tokens {
            match tok.text {
                "0" => bits.push(false),
                "1" => bits.push(true),
                other => return Err(tok.error(format!("expected 0 or 1, found `{other}`"))),
            }
        }
    }
    if bits.is_empty() {
        return Err(ParseDiagnostic::new(1, 1, "empty assignment"));
    }
    Ok(Assignment::from_bools(bits))
}

pub fn write_assignment(a: &Assignment) -> String {
    format!("{}\n", join(&a.to_bits()))
}
