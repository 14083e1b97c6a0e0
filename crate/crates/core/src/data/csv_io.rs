use thiserror::Error;

use crate::membership::{Connective, MembershipTriple};

use super::{Dataset, Item};

pub const CSV_HEADER: [&str; 6] = ["pair_id", "item", "connective", "mu_a", "mu_b", "mu_combo"];

const MAX_DECIMALS: usize = 6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DataError {
    #[error("line {line}, column {column}: {message}")]
    Parse { line: u64, column: usize, message: String },
    #[error("line {line}, column {column}: weight {value} lies outside [0, 1]")]
    Range { line: u64, column: usize, value: f64 },
}

fn parse_error(line: u64, column: usize, message: impl Into<String>) -> DataError {
    DataError::Parse { line, column, message: message.into() }
}

fn parse_weight(field: &str, line: u64, column: usize) -> Result<f64, DataError> {
    let well_formed = !field.is_empty()
        && field.chars().all(|c| c.is_ascii_digit() || c == '.' || c == '-' || c == '+')
        && field.matches('.').count() <= 1;
    if !well_formed {
        return Err(parse_error(line, column, format!("`{field}` is not a decimal number")));
    }
    if let Some((_, frac)) = field.split_once('.') {
        if frac.len() > MAX_DECIMALS {
            return Err(parse_error(line, column, format!("`{field}` has more than {MAX_DECIMALS} decimal places")));
        }
    }
    let value: f64 = field
        .parse()
        .map_err(|_| parse_error(line, column, format!("`{field}` is not a decimal number")))?;
    if !(-1e-9..=1.0 + 1e-9).contains(&value) {
        return Err(DataError::Range { line, column, value });
    }
    Ok(value)
}

fn parse_connective(field: &str, line: u64) -> Result<Connective, DataError> {
    match field {
        "conj" => Ok(Connective::Conjunction),
        "disj" => Ok(Connective::Disjunction),
        other => Err(parse_error(line, 3, format!("connective `{other}` is neither `conj` nor `disj`"))),
    }
}

/// Parses the CSV format `pair_id,item,connective,mu_a,mu_b,mu_combo`.
/// Lines starting with `#` are comments and surrounding whitespace is ignored.
pub fn parse_dataset(text: &str) -> Result<Dataset, DataError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut records = reader.records();
    let mut dataset = Dataset::default();

    let header = match records.next() {
        None => return Err(parse_error(1, 1, "missing header")),
        Some(r) => r.map_err(|e| csv_error(&e))?,
    };
    let header_line = header.position().map_or(1, |p| p.line());
    if header.len() != CSV_HEADER.len() {
        return Err(parse_error(header_line, header.len().min(CSV_HEADER.len()) + 1, "header must be `pair_id,item,connective,mu_a,mu_b,mu_combo`"));
    }
    for (i, (got, want)) in header.iter().zip(CSV_HEADER).enumerate() {
        if got != want {
            return Err(parse_error(header_line, i + 1, format!("expected header field `{want}`, found `{got}`")));
        }
    }

    for record in records {
        let record = record.map_err(|e| csv_error(&e))?;
        let line = record.position().map_or(0, |p| p.line());
        if record.len() == 1 && record[0].is_empty() {
            continue;
        }
        if record.len() != CSV_HEADER.len() {
            let column = record.len().min(CSV_HEADER.len()) + 1;
            return Err(parse_error(line, column, format!("expected {} fields, found {}", CSV_HEADER.len(), record.len())));
        }
        let pair_id = &record[0];
        let name = &record[1];
        if pair_id.is_empty() {
            return Err(parse_error(line, 1, "empty pair_id"));
        }
        if name.is_empty() {
            return Err(parse_error(line, 2, "empty item name"));
        }
        let connective = parse_connective(&record[2], line)?;
        let mu_a = parse_weight(&record[3], line, 4)?;
        let mu_b = parse_weight(&record[4], line, 5)?;
        let mu_combo = parse_weight(&record[5], line, 6)?;
        let triple = MembershipTriple::new(mu_a, mu_b, mu_combo, connective)
            .map_err(|e| parse_error(line, 4, e.to_string()))?;
        let pair = dataset.pair_mut_or_insert(pair_id, connective);
        if pair.item(name).is_some() {
            return Err(parse_error(line, 2, format!("item `{name}` appears twice in pair `{pair_id}`")));
        }
        pair.items.push(Item { name: name.to_string(), triple, reference: None });
    }
    Ok(dataset)
}

fn csv_error(e: &csv::Error) -> DataError {
    let line = e.position().map_or(0, |p| p.line());
    parse_error(line, 1, e.to_string())
}

fn format_weight(v: f64) -> String {
    let s = format!("{:.*}", MAX_DECIMALS, v);
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" || s.is_empty() {
        "0".to_string()
    } else {
        s.to_string()
    }
}

/// Writes a dataset in the format read by [`parse_dataset`], with weights
/// rounded to six decimals.
pub fn write_csv(dataset: &Dataset) -> String {
    let mut writer = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    writer.write_record(CSV_HEADER).expect("writing to memory");
    for pair in &dataset.pairs {
        for item in &pair.items {
            let t = &item.triple;
            writer
                .write_record([
                    pair.pair_id.as_str(),
                    item.name.as_str(),
                    pair.connective.as_str(),
                    &format_weight(t.mu_a),
                    &format_weight(t.mu_b),
                    &format_weight(t.mu_combo),
                ])
                .expect("writing to memory");
        }
    }
    let bytes = writer.into_inner().expect("flushing to memory");
    String::from_utf8(bytes).expect("csv output is UTF-8")
}
