use crate::pencil::{KWForm, Labeling, LinMatrix};
use crate::polycore::{parse_linear_form, Field, LinearForm, MonomialOrder, PolyError, Ring};

use super::CliError;

fn syntax(line: usize, column: usize, message: impl Into<String>) -> CliError {
    CliError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// A parsed matrix file: the matrix, and whether the field came from a
/// `field:` header.
#[derive(Clone, Debug)]
pub struct MatrixFile {
    pub matrix: LinMatrix,
    pub field_header: Option<u64>,
}

/// Splits `text` on `;`, returning each entry with its 0-based byte offset.
/// One trailing empty entry (after a final `;`) is dropped.
fn entries(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in text.char_indices() {
        if c == ';' {
            out.push((start, &text[start..i]));
            start = i + 1;
        }
    }
    if !text[start..].trim().is_empty() || out.is_empty() {
        out.push((start, &text[start..]));
    }
    out
}

/// Parses the matrix-file format:
///
/// ```text
/// vars: x1 x2 x3
/// field: 101
/// x1; x2; x3
/// x2; x3; 0
/// ```
///
/// Blank lines and lines starting with `#` are ignored; `field:` is
/// optional (rationals otherwise). Errors carry 1-based line and column.
pub fn parse_matrix_file(text: &str, field_override: Option<u64>, order: MonomialOrder) -> Result<MatrixFile, CliError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));

    let (vline, vtext) = lines.next().ok_or_else(|| syntax(1, 1, "empty input, expected `vars:`"))?;
    let names: Vec<String> = match vtext.trim_start().strip_prefix("vars:") {
        Some(rest) => rest.split_whitespace().map(str::to_string).collect(),
        None => return Err(syntax(vline, 1, "expected `vars:` header")),
    };
    if names.is_empty() {
        return Err(syntax(vline, vtext.len() + 1, "no variables declared"));
    }

    let mut rows: Vec<(usize, &str)> = Vec::new();
    let mut field_header = None;
    for (ln, l) in lines {
        if rows.is_empty() && field_header.is_none() {
            if let Some(rest) = l.trim_start().strip_prefix("field:") {
                let col = l.find("field:").unwrap() + 7;
                let p: u64 = rest
                    .trim()
                    .parse()
                    .map_err(|_| syntax(ln, col, format!("bad field `{}`", rest.trim())))?;
                field_header = Some(p);
                continue;
            }
        }
        if rows.len() == 2 {
            return Err(syntax(ln, 1, "more than two matrix rows"));
        }
        rows.push((ln, l));
    }
    if rows.len() < 2 {
        let last = rows.first().map_or(vline, |r| r.0);
        return Err(syntax(last + 1, 1, format!("expected 2 matrix rows, found {}", rows.len())));
    }

    let ch = match (field_header, field_override) {
        (Some(h), Some(o)) if h != o => return Err(CliError::FieldConflict { header: h, flag: o }),
        (Some(h), _) => h,
        (None, o) => o.unwrap_or(0),
    };
    let field = Field::of_characteristic(ch).map_err(|e| CliError::Config(e.to_string()))?;
    let ring = Ring::new(names, field, order).map_err(|e| syntax(vline, 1, e.to_string()))?;

    let mut parsed: Vec<Vec<LinearForm>> = Vec::new();
    for &(ln, l) in &rows {
        let mut row = Vec::new();
        for (off, e) in entries(l) {
            let lead = e.len() - e.trim_start().len();
            let at = |c: usize| off + lead + c;
            if e.trim().is_empty() {
                return Err(syntax(ln, off + 1, "empty entry"));
            }
            let f = parse_linear_form(&ring, e).map_err(|err| match err {
                PolyError::Parse { column, message } => syntax(ln, at(column), message),
                PolyError::UnknownVariable { name, column } => CliError::UnknownVariable {
                    line: ln,
                    column: at(column),
                    name,
                },
                PolyError::NotLinear(t) => CliError::Nonlinear {
                    line: ln,
                    column: at(1),
                    entry: t,
                },
                other => syntax(ln, at(1), other.to_string()),
            })?;
            row.push(f);
        }
        parsed.push(row);
    }
    let bottom = parsed.pop().unwrap();
    let top = parsed.pop().unwrap();
    if top.len() != bottom.len() {
        return Err(syntax(
            rows[1].0,
            1,
            format!("rows have {} and {} entries", top.len(), bottom.len()),
        ));
    }
    let matrix = LinMatrix::new(&ring, top, bottom, Labeling::OneBased)?;
    Ok(MatrixFile { matrix, field_header })
}

/// Parses a block spec such as `J(0,1) B(1) B(1) J(1,1)` into a form with
/// automatically named variables.
pub fn parse_block_spec(text: &str, characteristic: u64, order: MonomialOrder) -> Result<KWForm, CliError> {
    let field = Field::of_characteristic(characteristic).map_err(|e| CliError::Config(e.to_string()))?;
    Ok(KWForm::parse(text, field, order)?)
}
