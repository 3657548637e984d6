//! The ideal file format: a UTF-8 text file with `#` comments, a header
//! line `ring n=<n> d=<d> field=<q|gf:p> vars=<count>`, and one polynomial
//! per line in the grammar of [`crate::ring::parse_poly`].

use crate::error::{AlgebraError, Result};
use crate::ideal::Ideal;
use crate::ring::{make_mm_ring, parse_poly, Field, RingContext};
use std::io::{BufRead, Write};
use std::sync::Arc;

pub fn parse_field(text: &str) -> Result<Field> {
    if text == "q" {
        return Ok(Field::Rationals);
    }
    if let Some(p) = text.strip_prefix("gf:") {
        let p: u32 = p
            .parse()
            .map_err(|_| AlgebraError::File(format!("bad modulus `{p}`")))?;
        let f = Field::Prime(p);
        f.validate()?;
        return Ok(f);
    }
    Err(AlgebraError::File(format!(
        "unknown field `{text}` (expected `q` or `gf:<p>`)"
    )))
}

fn header_line(ring: &Arc<RingContext>) -> Result<String> {
    let shape = ring.mm_shape().ok_or_else(|| {
        AlgebraError::File("only Mayr-Meyer rings serialize to ideal files".into())
    })?;
    Ok(format!(
        "ring n={} d={} field={} vars={}",
        shape.n,
        shape.d,
        ring.field(),
        ring.nvars()
    ))
}

pub fn write_ideal(w: &mut dyn Write, ideal: &Ideal) -> Result<()> {
    writeln!(w, "{}", header_line(ideal.ring())?)?;
    for g in ideal.gens() {
        writeln!(w, "{g}")?;
    }
    Ok(())
}

pub fn write_ideal_to_path(path: &std::path::Path, ideal: &Ideal) -> Result<()> {
    let mut f = std::fs::File::create(path)?;
    write_ideal(&mut f, ideal)
}

/// Reads an ideal file, reconstructing its ring from the header.
pub fn read_ideal(r: impl BufRead) -> Result<Ideal> {
    let mut ring: Option<Arc<RingContext>> = None;
    let mut gens = Vec::new();
    for (lineno, line) in r.lines().enumerate() {
        let line = line?;
        let line = match line.find('#') {
            Some(k) => &line[..k],
            None => &line[..],
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        match &ring {
            None => {
                let rest = line.strip_prefix("ring").ok_or_else(|| {
                    AlgebraError::File(format!(
                        "line {}: expected a `ring ...` header first",
                        lineno + 1
                    ))
                })?;
                let mut n = None;
                let mut d = None;
                let mut field = None;
                let mut vars = None;
                for tok in rest.split_whitespace() {
                    let (key, value) = tok.split_once('=').ok_or_else(|| {
                        AlgebraError::File(format!("line {}: bad header token `{tok}`", lineno + 1))
                    })?;
                    match key {
                        "n" => n = Some(value.parse::<u32>().map_err(bad_num(lineno, tok))?),
                        "d" => d = Some(value.parse::<u32>().map_err(bad_num(lineno, tok))?),
                        "field" => field = Some(parse_field(value)?),
                        "vars" => vars = Some(value.parse::<usize>().map_err(bad_num(lineno, tok))?),
                        other => {
                            return Err(AlgebraError::File(format!(
                                "line {}: unknown header key `{other}`",
                                lineno + 1
                            )))
                        }
                    }
                }
                let (n, d, field) = match (n, d, field) {
                    (Some(n), Some(d), Some(f)) => (n, d, f),
                    _ => {
                        return Err(AlgebraError::File(format!(
                            "line {}: header needs n=, d= and field=",
                            lineno + 1
                        )))
                    }
                };
                let long = match vars {
                    None => false,
                    Some(v) if v == (8 * n + 2) as usize => false,
                    Some(v) if v == (10 * n + 2) as usize => true,
                    Some(v) => {
                        return Err(AlgebraError::File(format!(
                            "line {}: vars={v} matches neither the short nor the long ring",
                            lineno + 1
                        )))
                    }
                };
                ring = Some(make_mm_ring(n, d, field, long)?);
            }
            Some(ring) => {
                let p = parse_poly(line, ring).map_err(|e| {
                    AlgebraError::File(format!("line {}: {e}", lineno + 1))
                })?;
                gens.push(p);
            }
        }
    }
    let ring = ring.ok_or_else(|| AlgebraError::File("empty ideal file".into()))?;
    Ok(Ideal::new(&ring, gens))
}

fn bad_num(lineno: usize, tok: &str) -> impl Fn(std::num::ParseIntError) -> AlgebraError + '_ {
    move |_| AlgebraError::File(format!("line {}: bad number in `{tok}`", lineno + 1))
}
