//! Mini-grammars for command-line flags.
//!
//! Cost specs: `identity` | `pow:<gamma>` | `exp:<base>` |
//! `affine:<slope>,<intercept>` | `table:<v1>,<v2>,...`.
//!
//! Length distributions: a bare integer is a point mass; otherwise
//! comma-separated `<length>:<probability>` pairs.

use headplace_core::{CostFunction, LengthDistribution};

pub fn parse_cost_spec(spec: &str) -> Result<CostFunction, String> {
    if spec == "identity" {
        return Ok(CostFunction::identity());
    }
    let Some((family, arguments)) = spec.split_once(':') else {
        return Err(format!(
            "unrecognized cost spec {spec:?}; expected identity, pow:<gamma>, exp:<base>, \
             affine:<slope>,<intercept> or table:<v1>,<v2>,..."
        ));
    };
    match family {
        "pow" => {
            let gamma = parse_number(arguments)?;
            CostFunction::power(gamma).map_err(|e| e.to_string())
        }
        "exp" => {
            let base = parse_number(arguments)?;
            CostFunction::exponential(base).map_err(|e| e.to_string())
        }
        "affine" => {
            let parts: Vec<&str> = arguments.split(',').collect();
            if parts.len() != 2 {
                return Err(format!(
                    "affine takes two parameters as affine:<slope>,<intercept>, got {arguments:?}"
                ));
            }
            let slope = parse_number(parts[0])?;
            let intercept = parse_number(parts[1])?;
            CostFunction::affine(slope, intercept).map_err(|e| e.to_string())
        }
        "table" => {
            let values = arguments
                .split(',')
                .map(parse_number)
                .collect::<Result<Vec<f64>, String>>()?;
            CostFunction::table(values).map_err(|e| e.to_string())
        }
        other => Err(format!(
            "unknown cost family {other:?}; expected identity, pow, exp, affine or table"
        )),
    }
}

pub fn parse_length_distribution(spec: &str) -> Result<LengthDistribution, String> {
    if !spec.contains(':') {
        let length: u64 = spec
            .trim()
            .parse()
            .map_err(|_| format!("expected a length or <length>:<probability> pairs, got {spec:?}"))?;
        return LengthDistribution::point(length).map_err(|e| e.to_string());
    }
    let support = spec
        .split(',')
        .map(|entry| {
            let (length, probability) = entry
                .split_once(':')
                .ok_or_else(|| format!("expected <length>:<probability>, got {entry:?}"))?;
            let length: u64 = length
                .trim()
                .parse()
                .map_err(|_| format!("bad length {length:?} in {entry:?}"))?;
            let probability = parse_number(probability)?;
            Ok((length, probability))
        })
        .collect::<Result<Vec<_>, String>>()?;
    LengthDistribution::new(support).map_err(|e| e.to_string())
}

fn parse_number(token: &str) -> Result<f64, String> {
    token.trim().parse().map_err(|_| format!("not a number: {token:?}"))
}
