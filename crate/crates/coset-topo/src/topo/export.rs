//! Flat text exchange format for complexes: a JSON header line followed
//! by one simplex per line as `dim v0 v1 ... vdim`, dimensions ascending
//! and tuples in lexicographic order.

use super::SimplicialComplex;
use crate::{Error, Result};
use std::io::{BufRead, Write};

/// Header describing where a complex came from.
#[derive(Clone, Debug, serde::Serialize, serde::Deserialize)]
pub struct ExportHeader {
    pub recipe: serde_json::Value,
    pub model: String,
    pub truncation: Option<usize>,
    pub budget: usize,
}

pub fn write_complex<W: Write>(w: &mut W, header: &ExportHeader, k: &SimplicialComplex) -> Result<()> {
    let mut hdr = header.clone();
    hdr.truncation = k.truncated_at;
    writeln!(w, "{}", serde_json::to_string(&hdr)?)?;
    for (d, list) in k.dims.iter().enumerate() {
        for s in list {
            write!(w, "{d}")?;
            for v in s {
                write!(w, " {v}")?;
            }
            writeln!(w)?;
        }
    }
    Ok(())
}

pub fn read_complex<R: BufRead>(r: &mut R) -> Result<(ExportHeader, SimplicialComplex)> {
    let mut first = String::new();
    r.read_line(&mut first)?;
    let header: ExportHeader = serde_json::from_str(first.trim())
        .map_err(|e| Error::BadInput(format!("bad complex header: {e}")))?;
    let mut simplices = Vec::new();
    for line in r.lines() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let d: usize = it
            .next()
            .unwrap()
            .parse()
            .map_err(|_| Error::BadInput("bad simplex line".into()))?;
        let verts: Vec<u32> = it
            .map(|t| t.parse().map_err(|_| Error::BadInput("bad vertex".into())))
            .collect::<Result<_>>()?;
        if verts.len() != d + 1 {
            return Err(Error::BadInput(format!(
                "dimension tag {d} does not match {} vertices",
                verts.len()
            )));
        }
        simplices.push(verts);
    }
    let k = SimplicialComplex::from_simplices(simplices, header.truncation)?;
    Ok((header, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let k = SimplicialComplex::closure_of([vec![0u32, 1, 2], vec![2, 3]], None).unwrap();
        let header = ExportHeader {
            recipe: serde_json::json!({"kind": "cyclic", "n": 4}),
            model: "delta".into(),
            truncation: None,
            budget: 1000,
        };
        let mut buf = Vec::new();
        write_complex(&mut buf, &header, &k).unwrap();
        let (h2, k2) = read_complex(&mut std::io::BufReader::new(&buf[..])).unwrap();
        assert_eq!(h2.model, "delta");
        assert_eq!(k, k2);
    }
}
