//! One square per file: the order on the first line, then one row per line
//! with entries separated by whitespace.

use std::fmt::Write as _;
use std::path::Path;

use magic_compound::{fixture_square, IntSquare};

use crate::error::{CliError, CliResult};

pub fn parse(text: &str, origin: &str) -> CliResult<IntSquare> {
    let fail = |line: usize, message: String| CliError::Parse {
        origin: origin.to_string(),
        line,
        message,
    };
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let (first, header) = lines
        .by_ref()
        .find(|(_, l)| !l.is_empty())
        .ok_or_else(|| fail(1, "empty file".into()))?;
    let n: usize = header
        .parse()
        .map_err(|_| fail(first, format!("expected the order, found {header:?}")))?;
    if n == 0 {
        return Err(fail(first, "order must be at least 1".into()));
    }
    let mut entries = Vec::with_capacity(n * n);
    let mut rows = 0;
    for (no, line) in lines {
        if line.is_empty() {
            continue;
        }
        if rows == n {
            return Err(fail(no, format!("more than {n} rows")));
        }
        let before = entries.len();
        for tok in line.split_whitespace() {
            let v: i64 = tok
                .parse()
                .map_err(|_| fail(no, format!("not an integer: {tok:?}")))?;
            entries.push(v);
        }
        let width = entries.len() - before;
        if width != n {
            return Err(fail(no, format!("expected {n} entries, found {width}")));
        }
        rows += 1;
    }
    if rows != n {
        return Err(fail(first, format!("expected {n} rows, found {rows}")));
    }
    Ok(IntSquare::new(n, entries)?)
}

/// Canonical text: single spaces between entries, newline-terminated.
pub fn render(m: &IntSquare) -> String {
    let mut out = String::new();
    writeln!(out, "{}", m.order()).expect("write to string");
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(i64::to_string).collect();
        writeln!(out, "{}", cells.join(" ")).expect("write to string");
    }
    out
}

pub fn read(path: &Path) -> CliResult<IntSquare> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse(&text, &path.display().to_string())
}

pub fn write(path: &Path, m: &IntSquare) -> CliResult<()> {
    std::fs::write(path, render(m)).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// A square named on the command line: an existing file wins over a builtin
/// fixture of the same name.
#[derive(Debug, Clone)]
pub struct Source {
    pub square: IntSquare,
    /// File stem or fixture name, used to name derived outputs.
    pub stem: String,
}

pub fn resolve(arg: &str) -> CliResult<Source> {
    let path = Path::new(arg);
    if path.is_file() {
        let stem = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "square".into());
        return Ok(Source {
            square: read(path)?,
            stem,
        });
    }
    match fixture_square(arg) {
        Ok(square) => Ok(Source {
            square,
            stem: arg.to_ascii_uppercase(),
        }),
        Err(_) if arg.contains(['/', '\\', '.']) => Err(CliError::Io {
            path: path.to_path_buf(),
            source: std::io::Error::new(std::io::ErrorKind::NotFound, "no such file"),
        }),
        Err(e) => Err(e.into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let m = IntSquare::from_array(&[[3, 8, 1], [2, 4, 6], [7, 0, -5]]);
        let text = render(&m);
        assert_eq!(text, "3\n3 8 1\n2 4 6\n7 0 -5\n");
        assert_eq!(parse(&text, "t").unwrap(), m);
    }

    #[test]
    fn tolerant_whitespace() {
        let m = parse("\n 2\n1\t2 \n\n 3   4\n\n", "t").unwrap();
        assert_eq!(m, IntSquare::from_array(&[[1, 2], [3, 4]]));
    }

    #[test]
    fn malformed_inputs() {
        for (text, line) in [
            ("", 1),
            ("x\n", 1),
            ("2\n1 2\n3\n", 3),
            ("2\n1 2\n", 1),
            ("1\n1\n2\n", 3),
            ("1\nq\n", 2),
            ("0\n", 1),
        ] {
            match parse(text, "t") {
                Err(CliError::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn builtin_names_resolve() {
        let s = resolve("m3").unwrap();
        assert_eq!(s.stem, "M3");
        assert_eq!(s.square.order(), 3);
        assert!(matches!(resolve("no-such-thing"), Err(CliError::Core(_))));
        assert!(matches!(
            resolve("missing/file.txt"),
            Err(CliError::Io { .. })
        ));
    }
}
