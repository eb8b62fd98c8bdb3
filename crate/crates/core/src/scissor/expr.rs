use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Map, Value};

use super::ScissorError;

/// Right-hand side `c` of `Σ x_i² − Σ y_j² = c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Level {
    Minus,
    Zero,
    Plus,
}

impl Level {
    pub const ALL: [Level; 3] = [Level::Minus, Level::Zero, Level::Plus];

    pub fn value(self) -> i64 {
        match self {
            Level::Minus => -1,
            Level::Zero => 0,
            Level::Plus => 1,
        }
    }

    pub fn from_value(c: i64) -> Option<Self> {
        match c {
            -1 => Some(Level::Minus),
            0 => Some(Level::Zero),
            1 => Some(Level::Plus),
            _ => None,
        }
    }
}

/// A constructible real algebraic set assembled from quadric atoms by
/// products, disjoint unions, and removal of closed algebraic subsets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SetExpression {
    /// `R^k`.
    AffineSpace(u32),
    /// `R \ {0}`.
    PuncturedLine,
    Point,
    /// The unit sphere `S^dim ⊂ R^(dim+1)`.
    Sphere(u32),
    /// `P^k(R)`.
    ProjectiveSpace(u32),
    /// `{Σ_{i≤s} x_i² − Σ_{j≤t} y_j² = c} ⊂ R^(s+t)`.
    QuadricAffine { level: Level, s: u32, t: u32 },
    /// The projectivized cone `Z_{m,M} ⊂ P^(m+M−1)(R)`.
    QuadricProjective { m: u32, big_m: u32 },
    Product(Vec<SetExpression>),
    DisjointUnion(Vec<SetExpression>),
    /// `ambient \ removed`, with `removed` closed and algebraic in `ambient`.
    Difference {
        ambient: Box<SetExpression>,
        removed: Box<SetExpression>,
    },
}

impl SetExpression {
    pub fn empty() -> Self {
        SetExpression::DisjointUnion(Vec::new())
    }

    pub fn quadric(c: i64, s: u32, t: u32) -> Self {
        let level = Level::from_value(c).expect("quadric level must be -1, 0 or 1");
        SetExpression::QuadricAffine { level, s, t }
    }

    pub fn product(children: impl IntoIterator<Item = SetExpression>) -> Self {
        SetExpression::Product(children.into_iter().collect())
    }

    pub fn union(children: impl IntoIterator<Item = SetExpression>) -> Self {
        SetExpression::DisjointUnion(children.into_iter().collect())
    }

    pub fn difference(ambient: SetExpression, removed: SetExpression) -> Self {
        SetExpression::Difference {
            ambient: Box::new(ambient),
            removed: Box::new(removed),
        }
    }

    /// Dimension of the set, `None` when it is empty.
    pub fn dimension(&self) -> Option<u32> {
        use SetExpression::*;
        match self {
            AffineSpace(k) | ProjectiveSpace(k) | Sphere(k) => Some(*k),
            PuncturedLine => Some(1),
            Point => Some(0),
            QuadricAffine { level, s, t } => match (level, *s, *t) {
                (Level::Zero, 0, _) | (Level::Zero, _, 0) => Some(0),
                (Level::Zero, s, t) => Some(s + t - 1),
                (Level::Plus, 0, _) | (Level::Minus, _, 0) => None,
                (_, s, t) => Some(s + t - 1),
            },
            QuadricProjective { m, big_m } => {
                (*m >= 1 && *big_m >= 1).then(|| m + big_m - 2)
            }
            Product(children) => children
                .iter()
                .map(|c| c.dimension())
                .sum::<Option<u32>>(),
            DisjointUnion(children) => children.iter().filter_map(|c| c.dimension()).max(),
            Difference { ambient, .. } => ambient.dimension(),
        }
    }

    /// Structural checks that do not need β: atoms in range, and every
    /// removed subset no larger than its ambient set.
    pub fn validate(&self) -> Result<(), ScissorError> {
        use SetExpression::*;
        match self {
            QuadricProjective { m, big_m } if *m == 0 || *big_m == 0 => {
                Err(ScissorError::MalformedExpression(format!(
                    "quadric_projective needs m, M >= 1 (got {m}, {big_m})"
                )))
            }
            Product(children) | DisjointUnion(children) => {
                children.iter().try_for_each(|c| c.validate())
            }
            Difference { ambient, removed } => {
                ambient.validate()?;
                removed.validate()?;
                match (ambient.dimension(), removed.dimension()) {
                    (_, None) => Ok(()),
                    (Some(a), Some(r)) if r <= a => Ok(()),
                    (a, r) => Err(ScissorError::MalformedExpression(format!(
                        "removed subset (dim {r:?}) cannot be a closed subset of ambient (dim {a:?})"
                    ))),
                }
            }
            _ => Ok(()),
        }
    }

    pub fn to_json(&self) -> Value {
        use SetExpression::*;
        match self {
            AffineSpace(k) => json!({"atom": "affine_space", "k": k}),
            PuncturedLine => json!({"atom": "punctured_line"}),
            Point => json!({"atom": "point"}),
            Sphere(dim) => json!({"atom": "sphere", "dim": dim}),
            ProjectiveSpace(k) => json!({"atom": "projective_space", "k": k}),
            QuadricAffine { level, s, t } => {
                json!({"atom": "quadric_affine", "c": level.value(), "s": s, "t": t})
            }
            QuadricProjective { m, big_m } => {
                json!({"atom": "quadric_projective", "m": m, "M": big_m})
            }
            Product(children) => json!({
                "op": "product",
                "children": children.iter().map(Self::to_json).collect::<Vec<_>>(),
            }),
            DisjointUnion(children) => json!({
                "op": "disjoint_union",
                "children": children.iter().map(Self::to_json).collect::<Vec<_>>(),
            }),
            Difference { ambient, removed } => json!({
                "op": "difference",
                "ambient": ambient.to_json(),
                "removed": removed.to_json(),
            }),
        }
    }

    pub fn from_json(value: &Value) -> Result<Self, ScissorError> {
        let bad = |msg: String| ScissorError::MalformedExpression(msg);
        let obj = value
            .as_object()
            .ok_or_else(|| bad(format!("expected an object, got {value}")))?;
        let uint = |key: &str| -> Result<u32, ScissorError> {
            obj.get(key)
                .and_then(Value::as_u64)
                .and_then(|v| u32::try_from(v).ok())
                .ok_or_else(|| bad(format!("missing or invalid field {key:?}")))
        };
        let children = |obj: &Map<String, Value>| -> Result<Vec<SetExpression>, ScissorError> {
            obj.get("children")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("missing \"children\" array".into()))?
                .iter()
                .map(Self::from_json)
                .collect()
        };
        if let Some(atom) = obj.get("atom") {
            let expr = match atom.as_str().unwrap_or_default() {
                "affine_space" => SetExpression::AffineSpace(uint("k")?),
                "punctured_line" => SetExpression::PuncturedLine,
                "point" => SetExpression::Point,
                "sphere" => SetExpression::Sphere(uint("dim")?),
                "projective_space" => SetExpression::ProjectiveSpace(uint("k")?),
                "quadric_affine" => {
                    let c = obj
                        .get("c")
                        .and_then(Value::as_i64)
                        .and_then(Level::from_value)
                        .ok_or_else(|| bad("quadric level \"c\" must be -1, 0 or 1".into()))?;
                    SetExpression::QuadricAffine {
                        level: c,
                        s: uint("s")?,
                        t: uint("t")?,
                    }
                }
                "quadric_projective" => SetExpression::QuadricProjective {
                    m: uint("m")?,
                    big_m: uint("M")?,
                },
                other => return Err(bad(format!("unknown atom {other:?}"))),
            };
            return Ok(expr);
        }
        let op = obj
            .get("op")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("node has neither \"atom\" nor \"op\"".into()))?;
        match op {
            "product" => Ok(SetExpression::Product(children(obj)?)),
            "disjoint_union" => Ok(SetExpression::DisjointUnion(children(obj)?)),
            "difference" => {
                let get = |key: &str| {
                    obj.get(key)
                        .ok_or_else(|| bad(format!("difference needs {key:?}")))
                        .and_then(Self::from_json)
                };
                Ok(SetExpression::difference(get("ambient")?, get("removed")?))
            }
            other => Err(bad(format!("unknown op {other:?}"))),
        }
    }
}

impl Serialize for SetExpression {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SetExpression {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let value = Value::deserialize(deserializer)?;
        Self::from_json(&value).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for SetExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use SetExpression::*;
        let join = |f: &mut fmt::Formatter<'_>, sep: &str, cs: &[SetExpression]| {
            f.write_str("(")?;
            for (i, c) in cs.iter().enumerate() {
                if i > 0 {
                    f.write_str(sep)?;
                }
                write!(f, "{c}")?;
            }
            f.write_str(")")
        };
        match self {
            AffineSpace(k) => write!(f, "R^{k}"),
            PuncturedLine => f.write_str("R*"),
            Point => f.write_str("pt"),
            Sphere(d) => write!(f, "S^{d}"),
            ProjectiveSpace(k) => write!(f, "P^{k}"),
            QuadricAffine { level, s, t } => write!(f, "X^{}_{{{s},{t}}}", level.value()),
            QuadricProjective { m, big_m } => write!(f, "Z_{{{m},{big_m}}}"),
            Product(cs) if cs.is_empty() => f.write_str("pt"),
            Product(cs) => join(f, " x ", cs),
            DisjointUnion(cs) if cs.is_empty() => f.write_str("{}"),
            DisjointUnion(cs) => join(f, " + ", cs),
            Difference { ambient, removed } => write!(f, "({ambient} \\ {removed})"),
        }
    }
}
