//! Text parsing for shapes and fillings. Fillings are typed rows top-down
//! so tableaux can be pasted as printed; validation errors name the exact
//! problem.

use macdonald::{Filling, Partition};

/// Parses "4,3,2" into a partition; the empty string is the empty
/// partition.
pub fn parse_shape(text: &str) -> Result<Partition, String> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    for piece in trimmed.split(',') {
        let piece = piece.trim();
        let value: i64 = piece
            .parse()
            .map_err(|_| format!("shape part {piece:?} is not an integer"))?;
        if value <= 0 {
            return Err(format!("shape parts must be positive, got {value}"));
        }
        parts.push(value as usize);
    }
    Partition::new(parts).map_err(|e| e.to_string())
}

/// Parses rows top-down ("6,2;2,4,8;4,4,1,3") against a known shape.
pub fn parse_filling(shape: &Partition, text: &str) -> Result<Filling, String> {
    let trimmed = text.trim();
    let rows: Vec<&str> = if trimmed.is_empty() {
        Vec::new()
    } else {
        trimmed.split(';').collect()
    };
    if rows.len() != shape.len() {
        return Err(format!(
            "filling has {} rows but shape {shape} has {}",
            rows.len(),
            shape.len()
        ));
    }
    let mut parsed = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let expected = shape.part(shape.len() - i);
        let mut entries = Vec::with_capacity(expected);
        for piece in row.split(',') {
            let piece = piece.trim();
            let value: i64 = piece
                .parse()
                .map_err(|_| format!("filling entry {piece:?} is not an integer"))?;
            if value <= 0 {
                return Err(format!("filling entries must be positive, got {value}"));
            }
            entries.push(value as u32);
        }
        if entries.len() != expected {
            return Err(format!(
                "row {} has {} entries but shape {shape} expects {expected}",
                i + 1,
                entries.len()
            ));
        }
        parsed.push(entries);
    }
    Filling::from_rows_top_down(parsed).map_err(|e| e.to_string())
}
