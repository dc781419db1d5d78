//! SCHURMAT1 matrix files and CSV export.
//!
//! Layout: the ASCII magic line `SCHURMAT1\n`, then little-endian u64 rows
//! and cols, then rows·cols complex entries as little-endian f64 pairs
//! (re, im), row-major.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use num_complex::Complex64;

use crate::error::{Error, Result};

use super::{ComplexMatrix, StateVector};

const MAGIC: &[u8] = b"SCHURMAT1\n";

pub fn write_matrix(path: &Path, m: &ComplexMatrix) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    w.write_all(MAGIC)?;
    w.write_all(&(m.rows() as u64).to_le_bytes())?;
    w.write_all(&(m.cols() as u64).to_le_bytes())?;
    for z in m.data() {
        w.write_all(&z.re.to_le_bytes())?;
        w.write_all(&z.im.to_le_bytes())?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_matrix(path: &Path) -> Result<ComplexMatrix> {
    let mut r = BufReader::new(File::open(path)?);
    let mut magic = [0u8; 10];
    r.read_exact(&mut magic)
        .map_err(|_| Error::Format("file too short for SCHURMAT1 magic".into()))?;
    if magic != MAGIC {
        return Err(Error::Format("missing SCHURMAT1 magic line".into()));
    }
    let rows = read_u64(&mut r)? as usize;
    let cols = read_u64(&mut r)? as usize;
    let count = rows
        .checked_mul(cols)
        .ok_or_else(|| Error::Format("matrix dimensions overflow".into()))?;
    let mut data = Vec::with_capacity(count);
    for _ in 0..count {
        let re = read_f64(&mut r)?;
        let im = read_f64(&mut r)?;
        data.push(Complex64::new(re, im));
    }
    let mut m = ComplexMatrix::zeros(rows, cols);
    for (slot, z) in m.data_mut().iter_mut().zip(data) {
        *slot = z;
    }
    Ok(m)
}

/// Writes a state vector as a 1-column matrix.
pub fn write_state(path: &Path, v: &StateVector) -> Result<()> {
    let m = ComplexMatrix::from_fn(v.dim(), 1, |r, _| v.amplitudes()[r]);
    write_matrix(path, &m)
}

/// Reads a 1-column (or 1-row) matrix as a state vector.
pub fn read_state(path: &Path) -> Result<StateVector> {
    let m = read_matrix(path)?;
    if m.cols() != 1 && m.rows() != 1 {
        return Err(Error::Format(format!(
            "state file must be a single column, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(StateVector::new(m.data().to_vec()))
}

/// CSV export: one row per line, entries formatted `re+imj`.
pub fn write_csv<W: Write>(w: &mut W, m: &ComplexMatrix) -> Result<()> {
    for r in 0..m.rows() {
        let line: Vec<String> = m.row(r).iter().map(format_entry).collect();
        writeln!(w, "{}", line.join(","))?;
    }
    Ok(())
}

fn format_entry(z: &Complex64) -> String {
    if z.im >= 0.0 || z.im.is_nan() {
        format!("{}+{}j", z.re, z.im)
    } else {
        format!("{}-{}j", z.re, -z.im)
    }
}

fn read_u64<R: Read>(r: &mut R) -> Result<u64> {
    let mut buf = [0u8; 8];
    r.read_exact(&mut buf)
        .map_err(|_| Error::Format("truncated SCHURMAT1 header".into()))?;
    Ok(u64::from_le_bytes(buf))
}

fn read_f64<R: Read>(r: &mut R) -> Result<f64> {
    let mut buf = [0u8; 8];
    r.read_exact(&mut buf)
        .map_err(|_| Error::Format("truncated SCHURMAT1 payload".into()))?;
    Ok(f64::from_le_bytes(buf))
}
