//! Flat `key=value` run configuration. Blank lines and `#` comments are
//! ignored; unknown and repeated keys are errors.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use biharm_core::{
    parse_forcing, Geometry, NonlinearitySpec, Problem, DEFAULT_ORDER, DEFAULT_TERMS,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodChoice {
    Adm,
    Ladm,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub problem: Problem,
    pub method: MethodChoice,
    pub terms: usize,
    pub order: usize,
    pub x_max: f64,
    pub step: f64,
    pub eps: f64,
    pub seed_order: usize,
    pub output_path: PathBuf,
    pub format: Format,
}

/// A configuration problem, located at a 1-based line when it has one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigError {
    pub line: Option<usize>,
    pub message: String,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(f, "line {line}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for ConfigError {}

const KEYS: [&str; 20] = [
    "geometry",
    "alpha",
    "omega",
    "b2",
    "g",
    "f",
    "y0",
    "y1",
    "y2",
    "y3",
    "method",
    "terms",
    "order",
    "x_max",
    "step",
    "output_path",
    "format",
    "eps",
    "seed_order",
    "allow_irregular",
];

fn parse_value<T: FromStr>(key: &str, value: &str, line: usize) -> Result<T, ConfigError>
where
    T::Err: fmt::Display,
{
    value.parse().map_err(|e| ConfigError {
        line: Some(line),
        message: format!("invalid value `{value}` for `{key}`: {e}"),
    })
}

fn finite(key: &str, value: &str, line: usize) -> Result<f64, ConfigError> {
    let v: f64 = parse_value(key, value, line)?;
    if !v.is_finite() {
        return Err(ConfigError {
            line: Some(line),
            message: format!("`{key}` must be finite"),
        });
    }
    Ok(v)
}

fn positive(key: &str, value: &str, line: usize) -> Result<f64, ConfigError> {
    let v = finite(key, value, line)?;
    if v <= 0.0 {
        return Err(ConfigError {
            line: Some(line),
            message: format!("`{key}` must be positive"),
        });
    }
    Ok(v)
}

impl FromStr for RunConfig {
    type Err = ConfigError;

    fn from_str(text: &str) -> Result<Self, ConfigError> {
        let mut seen: Vec<(&str, usize)> = Vec::new();
        let mut geometry = None;
        let mut g: NonlinearitySpec = "-y^2".parse().expect("default nonlinearity");
        let mut problem_fields: Vec<(&str, f64)> = Vec::new();
        let mut forcing = None;
        let mut allow_irregular = false;
        let mut output_path = None;
        let mut method = MethodChoice::Both;
        let mut format = Format::Csv;
        let mut terms = DEFAULT_TERMS;
        let mut order = DEFAULT_ORDER;
        let mut seed_order = 16;
        let (mut x_max, mut step, mut eps) = (4.0, 1e-3, 1e-3);

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content.split_once('=').ok_or_else(|| ConfigError {
                line: Some(line),
                message: format!("expected `key=value`, found `{content}`"),
            })?;
            let (key, value) = (key.trim(), value.trim());
            let key = KEYS
                .iter()
                .find(|&&k| k == key)
                .copied()
                .ok_or_else(|| ConfigError {
                    line: Some(line),
                    message: format!("unknown key `{key}`"),
                })?;
            if let Some(&(_, first)) = seen.iter().find(|(k, _)| *k == key) {
                return Err(ConfigError {
                    line: Some(line),
                    message: format!("duplicate key `{key}` (first set on line {first})"),
                });
            }
            seen.push((key, line));

            match key {
                "geometry" => geometry = Some(parse_value::<Geometry>(key, value, line)?),
                "g" => g = parse_value(key, value, line)?,
                "f" => {
                    forcing = Some(parse_forcing(value).map_err(|e| ConfigError {
                        line: Some(line),
                        message: format!("invalid value `{value}` for `f`: {e}"),
                    })?)
                }
                "alpha" | "omega" | "b2" | "y0" | "y1" | "y2" | "y3" => {
                    problem_fields.push((key, finite(key, value, line)?))
                }
                "method" => {
                    method = match value.to_ascii_lowercase().as_str() {
                        "adm" => MethodChoice::Adm,
                        "ladm" => MethodChoice::Ladm,
                        "both" => MethodChoice::Both,
                        _ => {
                            return Err(ConfigError {
                                line: Some(line),
                                message: format!(
                                    "`method` must be adm, ladm or both, found `{value}`"
                                ),
                            })
                        }
                    }
                }
                "format" => {
                    format = match value.to_ascii_lowercase().as_str() {
                        "csv" => Format::Csv,
                        "json" => Format::Json,
                        _ => {
                            return Err(ConfigError {
                                line: Some(line),
                                message: format!("`format` must be csv or json, found `{value}`"),
                            })
                        }
                    }
                }
                "terms" => terms = parse_value(key, value, line)?,
                "order" => {
                    order = parse_value(key, value, line)?;
                    if order < 4 {
                        return Err(ConfigError {
                            line: Some(line),
                            message: "`order` must be at least 4".into(),
                        });
                    }
                }
                "seed_order" => seed_order = parse_value(key, value, line)?,
                "x_max" => x_max = positive(key, value, line)?,
                "step" => step = positive(key, value, line)?,
                "eps" => eps = positive(key, value, line)?,
                "allow_irregular" => allow_irregular = parse_value(key, value, line)?,
                "output_path" => {
                    if value.is_empty() {
                        return Err(ConfigError {
                            line: Some(line),
                            message: "`output_path` must not be empty".into(),
                        });
                    }
                    output_path = Some(PathBuf::from(value));
                }
                _ => unreachable!("key list and match arms agree"),
            }
        }

        let geometry = geometry.ok_or_else(|| ConfigError {
            line: None,
            message: "missing required key `geometry`".into(),
        })?;
        let output_path = output_path.ok_or_else(|| ConfigError {
            line: None,
            message: "missing required key `output_path`".into(),
        })?;
        let mut problem = Problem::new(geometry, g);
        problem.omega = 1.0;
        for (key, v) in problem_fields {
            let field = match key {
                "alpha" => &mut problem.alpha,
                "omega" => &mut problem.omega,
                "b2" => &mut problem.b2,
                "y0" => &mut problem.y0,
                "y1" => &mut problem.y1,
                "y2" => &mut problem.y2,
                "y3" => &mut problem.y3,
                _ => unreachable!("only scalar keys are collected"),
            };
            *field = v;
        }
        if let Some(f) = forcing {
            problem.forcing = f;
        }
        problem.allow_irregular = allow_irregular;
        Ok(RunConfig {
            problem,
            method,
            terms,
            order,
            x_max,
            step,
            eps,
            seed_order,
            output_path,
            format,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIG1: &str = "\
# fig1 left
geometry=line
g=-y^2
omega=1
y0=5.1e-5   # R(0)
y2=2.65e-5
method=ladm
terms=2
output_path=out/fig1_left
";

    #[test]
    fn parses_figure_config() {
        let cfg: RunConfig = FIG1.parse().unwrap();
        assert_eq!(cfg.problem.geometry, Geometry::Line);
        assert_eq!(cfg.problem.y0, 5.1e-5);
        assert_eq!(cfg.problem.y2, 2.65e-5);
        assert_eq!(cfg.problem.g.terms(), &[(-1.0, 2)]);
        assert_eq!(cfg.method, MethodChoice::Ladm);
        assert_eq!(cfg.terms, 2);
        assert_eq!(cfg.order, DEFAULT_ORDER);
        assert_eq!(cfg.format, Format::Csv);
        assert_eq!(cfg.output_path, PathBuf::from("out/fig1_left"));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = "geometry=line\nalpha=abc\n"
            .parse::<RunConfig>()
            .unwrap_err();
        assert_eq!(err.line, Some(2));
        let err = "geometry=line\n\n# c\nbogus=1\n"
            .parse::<RunConfig>()
            .unwrap_err();
        assert_eq!(err.line, Some(4));
        assert!(err.to_string().starts_with("line 4: unknown key"));
        let err = "geometry=line\ngeometry=radial\n"
            .parse::<RunConfig>()
            .unwrap_err();
        assert_eq!(err.line, Some(2));
        let err = "geometry=line\nno equals sign\n"
            .parse::<RunConfig>()
            .unwrap_err();
        assert_eq!(err.line, Some(2));
        let err = "geometry=line\nomega=inf\n"
            .parse::<RunConfig>()
            .unwrap_err();
        assert_eq!(err.line, Some(2));
        let err = "geometry=line\nmethod=magic\n"
            .parse::<RunConfig>()
            .unwrap_err();
        assert_eq!(err.line, Some(2));
        let err = "geometry=line\ng=y^\n".parse::<RunConfig>().unwrap_err();
        assert_eq!(err.line, Some(2));
    }

    #[test]
    fn missing_keys() {
        let err = "output_path=x\n".parse::<RunConfig>().unwrap_err();
        assert_eq!(err.line, None);
        assert!(err.message.contains("geometry"));
        assert!("geometry=line\n".parse::<RunConfig>().is_err());
    }
}
