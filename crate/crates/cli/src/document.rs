//! JSON input and output documents. Every integer is a decimal string.

use std::fmt;

use conic_points::solver::{ParamLine, SolutionSet};
use conic_points::{Coefficients, Invariants, LatticePoint};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError(pub String);

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ParseError {}

/// Parses an optionally signed decimal integer without leading zeros.
pub fn parse_integer(s: &str) -> Result<BigInt, ParseError> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    let well_formed = !digits.is_empty()
        && digits.bytes().all(|c| c.is_ascii_digit())
        && (digits == "0" || !digits.starts_with('0'));
    if !well_formed {
        return Err(ParseError(format!("not a decimal integer: {s:?}")));
    }
    s.parse()
        .map_err(|_| ParseError(format!("not a decimal integer: {s:?}")))
}

/// The six conic coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConicDocument {
    pub alpha: String,
    pub beta: String,
    pub gamma: String,
    pub delta: String,
    pub epsilon: String,
    pub j: String,
}

impl ConicDocument {
    pub fn from_args(args: &[String]) -> Result<Self, ParseError> {
        let [alpha, beta, gamma, delta, epsilon, j] = args else {
            return Err(ParseError(format!(
                "expected 6 coefficients, got {}",
                args.len()
            )));
        };
        Ok(ConicDocument {
            alpha: alpha.clone(),
            beta: beta.clone(),
            gamma: gamma.clone(),
            delta: delta.clone(),
            epsilon: epsilon.clone(),
            j: j.clone(),
        })
    }

    pub fn from_json(text: &str) -> Result<Self, ParseError> {
        serde_json::from_str(text).map_err(|e| ParseError(format!("invalid conic document: {e}")))
    }

    pub fn coefficients(&self) -> Result<Coefficients, ParseError> {
        Ok(Coefficients {
            alpha: parse_integer(&self.alpha)?,
            beta: parse_integer(&self.beta)?,
            gamma: parse_integer(&self.gamma)?,
            delta: parse_integer(&self.delta)?,
            epsilon: parse_integer(&self.epsilon)?,
            j: parse_integer(&self.j)?,
        })
    }
}

impl From<&Coefficients> for ConicDocument {
    fn from(c: &Coefficients) -> Self {
        ConicDocument {
            alpha: c.alpha.to_string(),
            beta: c.beta.to_string(),
            gamma: c.gamma.to_string(),
            delta: c.delta.to_string(),
            epsilon: c.epsilon.to_string(),
            j: c.j.to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Finite,
    Lines,
    Invariants,
    Invalid,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsBlock {
    pub k: String,
    pub i: String,
    pub delta_q: String,
    pub m: String,
}

impl From<&Invariants> for InvariantsBlock {
    fn from(inv: &Invariants) -> Self {
        InvariantsBlock {
            k: inv.k.to_string(),
            i: inv.big_i.to_string(),
            delta_q: inv.delta_q.to_string(),
            m: inv.m.to_string(),
        }
    }
}

pub type PointDocument = [String; 2];

fn point_document(p: &LatticePoint) -> PointDocument {
    [p.x.to_string(), p.y.to_string()]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineDocument {
    pub a: String,
    pub b: String,
    pub c: String,
    pub solvable: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<PointDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dir: Option<PointDocument>,
}

impl From<&ParamLine> for LineDocument {
    fn from(line: &ParamLine) -> Self {
        LineDocument {
            a: line.a.to_string(),
            b: line.b.to_string(),
            c: line.c.to_string(),
            solvable: line.is_solvable(),
            base: line.solution.as_ref().map(|s| point_document(&s.base)),
            dir: line
                .solution
                .as_ref()
                .map(|s| [s.dir.dx.to_string(), s.dir.dy.to_string()]),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorDocument {
    pub code: String,
    pub message: String,
}

/// Output of every command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResultDocument {
    pub kind: Kind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conic: Option<ConicDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invariants: Option<InvariantsBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<PointDocument>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lines: Option<Vec<LineDocument>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorDocument>,
}

impl ResultDocument {
    fn empty(kind: Kind) -> Self {
        ResultDocument {
            kind,
            conic: None,
            invariants: None,
            points: None,
            obstruction: None,
            lines: None,
            error: None,
        }
    }

    pub fn invalid(code: &str, message: impl Into<String>) -> Self {
        ResultDocument {
            error: Some(ErrorDocument {
                code: code.to_owned(),
                message: message.into(),
            }),
            ..Self::empty(Kind::Invalid)
        }
    }

    pub fn invariants_only(inv: &Invariants) -> Self {
        ResultDocument {
            invariants: Some(inv.into()),
            ..Self::empty(Kind::Invariants)
        }
    }

    pub fn finite(inv: Option<&Invariants>, points: &[LatticePoint]) -> Self {
        ResultDocument {
            invariants: inv.map(Into::into),
            points: Some(points.iter().map(point_document).collect()),
            ..Self::empty(Kind::Finite)
        }
    }

    pub fn from_solution(inv: &Invariants, set: &SolutionSet) -> Self {
        match set {
            SolutionSet::Finite(points) => Self::finite(Some(inv), points),
            SolutionSet::Lines(first, second) => ResultDocument {
                invariants: Some(inv.into()),
                lines: Some(vec![first.into(), second.into()]),
                ..Self::empty(Kind::Lines)
            },
        }
    }

    pub fn with_conic(mut self, c: &Coefficients) -> Self {
        self.conic = Some(c.into());
        self
    }

    /// Pretty JSON followed by a newline.
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("documents always serialize");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<Self, ParseError> {
        serde_json::from_str(text).map_err(|e| ParseError(format!("invalid result document: {e}")))
    }

    /// Plain-text rendering: one `x y` per point, one line equation per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(inv) = self
            .invariants
            .as_ref()
            .filter(|_| self.kind == Kind::Invariants)
        {
            out += &format!(
                "k = {}\nI = {}\ndelta_q = {}\nm = {}\n",
                inv.k, inv.i, inv.delta_q, inv.m
            );
        }
        if let Some(reason) = &self.obstruction {
            out += &format!("no integer solutions: {reason}\n");
        }
        for [x, y] in self.points.iter().flatten() {
            out += &format!("{x} {y}\n");
        }
        for line in self.lines.iter().flatten() {
            out += &format!("{}*x + {}*y = {} ", line.a, line.b, line.c);
            match (&line.base, &line.dir) {
                (Some([x0, y0]), Some([dx, dy])) => {
                    out += &format!("[solvable: base=({x0},{y0}) dir=({dx},{dy})]\n")
                }
                _ => out += "[no integer solutions]\n",
            }
        }
        if let Some(err) = &self.error {
            out += &format!("error [{}]: {}\n", err.code, err.message);
        }
        out
    }
}
