//! Script front end for gpfkit-core: a small declarative language for rings,
//! ideals and modules, plus commands that factor, filter and construct.

pub mod eval;
pub mod run;
pub mod syntax;

use gpfkit_core::{Field, TieBreak};

pub use run::Outcome;

#[derive(Debug, Clone, Default)]
pub struct Options {
    pub json: bool,
    pub tie_break: TieBreak,
    pub max_steps: Option<usize>,
    /// Cross-check monomial inputs against the brute-force oracle.
    pub oracle: bool,
    /// Overrides the coefficient field of every declared ring.
    pub field: Option<Field>,
    pub timing: bool,
}

/// Parses `QQ` or `Fp:q`.
pub fn parse_field(s: &str) -> Result<Field, String> {
    if s == "QQ" {
        return Ok(Field::Rational);
    }
    let q = s
        .strip_prefix("Fp:")
        .and_then(|q| q.parse::<u32>().ok())
        .ok_or_else(|| format!("expected QQ or Fp:q, got '{s}'"))?;
    Field::prime(q).map_err(|e| e.to_string())
}

/// Parses and runs a script.
pub fn run(text: &str, opts: &Options) -> Outcome {
    match syntax::parse(text) {
        Ok(script) => run::execute(&script, opts),
        Err(e) => {
            let stdout = if opts.json {
                let err = serde_json::json!({
                    "command": "parse",
                    "error": { "kind": "syntax", "message": e.message, "line": e.pos.line, "column": e.pos.col },
                });
                format!("{err}\n")
            } else {
                String::new()
            };
            Outcome { stdout, stderr: format!("error: {e}\n"), code: 1 }
        }
    }
}
