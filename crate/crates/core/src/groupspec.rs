//! The group-spec mini-language accepted by the CLI:
//!
//! ```text
//! S(n)  D(n)  Q8  M16  C(n)  GL(n,q)  SL(n,q)
//! perm[(1 2),(1 2 3)]          explicit permutation generators
//! cayley:<path>                multiplication-table file
//! ```
//!
//! Cayley files are whitespace-separated: the first token is the order `n`,
//! followed by the `n*n` row-major table entries, 0-indexed.

use crate::corpus;
use crate::error::{Error, Result};
use crate::gl::{generate_gl, generate_sl};
use crate::group::{group_from_perms, ElementRepr, FiniteGroup};
use crate::perm::parse_cycles;
use crate::Caps;

fn parse_call(spec: &str, name: &str) -> Option<Result<Vec<usize>>> {
    let rest = spec.strip_prefix(name)?;
    let inner = rest.strip_prefix('(')?.strip_suffix(')')?;
    let args: Result<Vec<usize>> = inner
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad argument {t:?} in {spec:?}")))
        })
        .collect();
    Some(args)
}

/// Parse a group spec and materialize the group. Returns the canonical name
/// together with the group.
pub fn parse_group_spec(spec: &str, caps: &Caps) -> Result<(String, FiniteGroup)> {
    let spec = spec.trim();
    if spec == "Q8" {
        return Ok(("Q8".into(), corpus::quaternion_group()?));
    }
    if spec == "M16" {
        return Ok(("M16".into(), corpus::modular_group_16()?));
    }
    if let Some(args) = parse_call(spec, "S") {
        let args = args?;
        if args.len() != 1 || args[0] == 0 {
            return Err(Error::Parse(format!(
                "S(n) needs one positive argument: {spec}"
            )));
        }
        return Ok((format!("S({})", args[0]), corpus::symmetric_group(args[0])?));
    }
    if let Some(args) = parse_call(spec, "D") {
        let args = args?;
        if args.len() != 1 || args[0] == 0 {
            return Err(Error::Parse(format!(
                "D(n) needs one positive argument: {spec}"
            )));
        }
        return Ok((format!("D({})", args[0]), corpus::dihedral_group(args[0])?));
    }
    if let Some(args) = parse_call(spec, "C") {
        let args = args?;
        if args.len() != 1 || args[0] == 0 {
            return Err(Error::Parse(format!(
                "C(n) needs one positive argument: {spec}"
            )));
        }
        return Ok((format!("C({})", args[0]), corpus::cyclic_group(args[0])?));
    }
    if let Some(args) = parse_call(spec, "GL") {
        let args = args?;
        if args.len() != 2 {
            return Err(Error::Parse(format!("GL(n,q) needs two arguments: {spec}")));
        }
        return Ok((
            format!("GL({},{})", args[0], args[1]),
            generate_gl(args[0], args[1], caps.closure)?,
        ));
    }
    if let Some(args) = parse_call(spec, "SL") {
        let args = args?;
        if args.len() != 2 {
            return Err(Error::Parse(format!("SL(n,q) needs two arguments: {spec}")));
        }
        return Ok((
            format!("SL({},{})", args[0], args[1]),
            generate_sl(args[0], args[1], caps.closure)?,
        ));
    }
    if let Some(rest) = spec.strip_prefix("perm[") {
        let inner = rest
            .strip_suffix(']')
            .ok_or_else(|| Error::Parse(format!("unterminated perm[...]: {spec}")))?;
        // split generators on commas at parenthesis depth zero
        let mut gens_src: Vec<String> = Vec::new();
        let mut depth = 0usize;
        let mut cur = String::new();
        for c in inner.chars() {
            match c {
                '(' => {
                    depth += 1;
                    cur.push(c);
                }
                ')' => {
                    depth = depth
                        .checked_sub(1)
                        .ok_or_else(|| Error::Parse(format!("unbalanced ')' in {spec}")))?;
                    cur.push(c);
                }
                ',' if depth == 0 => {
                    gens_src.push(std::mem::take(&mut cur));
                }
                _ => cur.push(c),
            }
        }
        if !cur.trim().is_empty() {
            gens_src.push(cur);
        }
        if gens_src.is_empty() {
            return Err(Error::Parse(
                "perm[...] needs at least one generator".into(),
            ));
        }
        let perms: Vec<_> = gens_src
            .iter()
            .map(|s| parse_cycles(s, 1))
            .collect::<Result<_>>()?;
        let g = group_from_perms(&perms, caps.closure)?;
        return Ok((
            format!(
                "perm[{}]",
                gens_src
                    .iter()
                    .map(|s| s.trim())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
            g,
        ));
    }
    if let Some(path) = spec.strip_prefix("cayley:") {
        let g = load_cayley_file(path)?;
        return Ok((format!("cayley:{path}"), g));
    }
    Err(Error::Parse(format!(
        "unrecognized group spec {spec:?}; expected S(n), D(n), Q8, M16, C(n), \
         GL(n,q), SL(n,q), perm[...] or cayley:<path>"
    )))
}

/// Load a multiplication table from a whitespace-separated file.
pub fn load_cayley_file(path: &str) -> Result<FiniteGroup> {
    let text = std::fs::read_to_string(path)?;
    parse_cayley_text(&text)
}

pub fn parse_cayley_text(text: &str) -> Result<FiniteGroup> {
    let mut tokens = text.split_whitespace();
    let n: usize = tokens
        .next()
        .ok_or_else(|| Error::InvalidTable("empty file".into()))?
        .parse()
        .map_err(|_| Error::InvalidTable("first token must be the order".into()))?;
    if n == 0 {
        return Err(Error::InvalidTable("order must be positive".into()));
    }
    let entries: Vec<u32> = tokens
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| Error::InvalidTable(format!("bad entry {t:?}")))
        })
        .collect::<Result<_>>()?;
    if entries.len() != n * n {
        return Err(Error::InvalidTable(format!(
            "expected {} entries after the order, found {}",
            n * n,
            entries.len()
        )));
    }
    let elements = (0..n as u32).map(ElementRepr::Point).collect();
    FiniteGroup::from_mul_table(elements, entries, None)
}
