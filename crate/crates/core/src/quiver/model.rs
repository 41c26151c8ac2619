use std::fmt;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::ring::{Alphabet, LaurentPoly, Monomial, Var};

/// A quiver with framing multiplicities.
///
/// Vertices and arrows are addressed by their position in declaration order;
/// ids are only used for input and printing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    framing_k: Vec<u32>,
    framing_l: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub id: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuiverError {
    #[error("malformed quiver config at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{path}: unknown vertex '{vertex}'")]
    UnknownVertex { path: String, vertex: String },
    #[error("{path}: duplicate id '{id}'")]
    Duplicate { path: String, id: String },
    #[error("{path}: ids must be nonempty and use only letters, digits and _")]
    InvalidId { path: String },
    #[error("unknown quiver '{0}' (expected a file path or one of a1, jordan, a2, kronecker)")]
    UnknownBuiltin(String),
    #[error("cannot read '{path}': {message}")]
    Io { path: String, message: String },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArrowConfig {
    id: String,
    source: String,
    target: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct QuiverConfig {
    vertices: Vec<String>,
    #[serde(default)]
    arrows: Vec<ArrowConfig>,
    #[serde(default)]
    framing_k: IndexMap<String, u32>,
    #[serde(default)]
    framing_l: IndexMap<String, u32>,
}

fn valid_id(id: &str) -> bool {
    !id.is_empty() && id.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Quiver {
    /// Builds a quiver from vertex ids and `(id, source, target)` arrows, with zero framing.
    pub fn new(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Quiver, QuiverError> {
        let cfg = QuiverConfig {
            vertices: vertices.iter().map(|s| s.to_string()).collect(),
            arrows: arrows
                .iter()
                .map(|(id, s, t)| ArrowConfig {
                    id: id.to_string(),
                    source: s.to_string(),
                    target: t.to_string(),
                })
                .collect(),
            framing_k: IndexMap::new(),
            framing_l: IndexMap::new(),
        };
        Quiver::from_config(cfg)
    }

    /// One vertex, no arrows.
    pub fn a1() -> Quiver {
        Quiver::new(&["1"], &[]).unwrap()
    }

    /// One vertex with one loop.
    pub fn jordan() -> Quiver {
        Quiver::new(&["1"], &[("1", "1", "1")]).unwrap()
    }

    /// Two vertices joined by one arrow `1 -> 2`.
    pub fn a2() -> Quiver {
        Quiver::new(&["1", "2"], &[("1", "1", "2")]).unwrap()
    }

    /// Two vertices joined by two parallel arrows `1 -> 2`.
    pub fn kronecker() -> Quiver {
        Quiver::new(&["1", "2"], &[("1", "1", "2"), ("2", "1", "2")]).unwrap()
    }

    pub fn builtin(name: &str) -> Option<Quiver> {
        match name.to_ascii_lowercase().as_str() {
            "a1" => Some(Quiver::a1()),
            "jordan" => Some(Quiver::jordan()),
            "a2" => Some(Quiver::a2()),
            "kronecker" => Some(Quiver::kronecker()),
            _ => None,
        }
    }

    pub fn fixtures() -> Vec<(&'static str, Quiver)> {
        vec![
            ("a1", Quiver::a1()),
            ("jordan", Quiver::jordan()),
            ("a2", Quiver::a2()),
            ("kronecker", Quiver::kronecker()),
        ]
    }

    /// Parses the JSON configuration format.
    pub fn parse(text: &str) -> Result<Quiver, QuiverError> {
        let cfg: QuiverConfig = serde_json::from_str(text).map_err(|e| QuiverError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        Quiver::from_config(cfg)
    }

    /// Loads a builtin fixture by name or a JSON configuration by path.
    pub fn load(spec: &str) -> Result<Quiver, QuiverError> {
        if let Some(q) = Quiver::builtin(spec) {
            return Ok(q);
        }
        match std::fs::read_to_string(spec) {
            Ok(text) => Quiver::parse(&text),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound && !spec.contains(['/', '.']) => {
                Err(QuiverError::UnknownBuiltin(spec.to_string()))
            }
            Err(e) => Err(QuiverError::Io {
                path: spec.to_string(),
                message: e.to_string(),
            }),
        }
    }

    fn from_config(cfg: QuiverConfig) -> Result<Quiver, QuiverError> {
        let mut vertices: Vec<String> = Vec::new();
        for (k, v) in cfg.vertices.into_iter().enumerate() {
            if !valid_id(&v) {
                return Err(QuiverError::InvalidId {
                    path: format!("vertices[{k}]"),
                });
            }
            if vertices.contains(&v) {
                return Err(QuiverError::Duplicate {
                    path: format!("vertices[{k}]"),
                    id: v,
                });
            }
            vertices.push(v);
        }
        let find = |path: String, name: &str| {
            vertices
                .iter()
                .position(|v| v == name)
                .ok_or(QuiverError::UnknownVertex {
                    path,
                    vertex: name.to_string(),
                })
        };
        let mut arrows: Vec<Arrow> = Vec::new();
        for (k, a) in cfg.arrows.into_iter().enumerate() {
            if !valid_id(&a.id) {
                return Err(QuiverError::InvalidId {
                    path: format!("arrows[{k}].id"),
                });
            }
            if arrows.iter().any(|b| b.id == a.id) {
                return Err(QuiverError::Duplicate {
                    path: format!("arrows[{k}].id"),
                    id: a.id,
                });
            }
            let source = find(format!("arrows[{k}].source"), &a.source)?;
            let target = find(format!("arrows[{k}].target"), &a.target)?;
            arrows.push(Arrow {
                id: a.id,
                source,
                target,
            });
        }
        let framing = |map: IndexMap<String, u32>, field: &str| {
            let mut out = vec![0u32; vertices.len()];
            for (name, m) in map {
                let i = find(format!("{field}.{name}"), &name)?;
                out[i] = m;
            }
            Ok::<_, QuiverError>(out)
        };
        let framing_k = framing(cfg.framing_k, "framing_k")?;
        let framing_l = framing(cfg.framing_l, "framing_l")?;
        Ok(Quiver {
            vertices,
            arrows,
            framing_k,
            framing_l,
        })
    }

    /// Canonical JSON configuration; `parse(to_json())` is the identity.
    pub fn to_json(&self) -> String {
        let cfg = QuiverConfig {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| ArrowConfig {
                    id: a.id.clone(),
                    source: self.vertices[a.source].clone(),
                    target: self.vertices[a.target].clone(),
                })
                .collect(),
            framing_k: self.vertices.iter().cloned().zip(self.framing_k.iter().copied()).collect(),
            framing_l: self.vertices.iter().cloned().zip(self.framing_l.iter().copied()).collect(),
        };
        serde_json::to_string_pretty(&cfg).expect("serializable")
    }

    /// Same quiver with replaced framing multiplicities.
    pub fn with_framing(&self, k: &[u32], l: &[u32]) -> Quiver {
        assert!(k.len() == self.num_vertices() && l.len() == self.num_vertices());
        Quiver {
            framing_k: k.to_vec(),
            framing_l: l.to_vec(),
            ..self.clone()
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == id)
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.id == id)
    }

    /// Positions of the arrows `i -> j`.
    pub fn arrows_between(&self, i: usize, j: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.source == i && a.target == j)
            .map(|(k, _)| k)
    }

    pub fn count_arrows(&self, i: usize, j: usize) -> usize {
        self.arrows_between(i, j).count()
    }

    pub fn loops(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows_between(i, i)
    }

    pub fn framing_k(&self) -> &[u32] {
        &self.framing_k
    }

    pub fn framing_l(&self) -> &[u32] {
        &self.framing_l
    }

    /// The parameter `t_α` of an arrow.
    pub fn t(&self, arrow: usize) -> Var {
        Var::arrow(arrow)
    }

    pub fn alphabet(&self) -> Alphabet {
        Alphabet {
            vertices: self.vertices.clone(),
            arrows: self.arrows.iter().map(|a| a.id.clone()).collect(),
        }
    }

    /// `⟨m, n⟩ = Σ m_i n_i − Σ_{α:i→j} m_i n_j`.
    pub fn pairing(&self, m: &[i64], n: &[i64]) -> i64 {
        let diag: i64 = m.iter().zip(n).map(|(a, b)| a * b).sum();
        let off: i64 = self.arrows.iter().map(|a| m[a.source] * n[a.target]).sum();
        diag - off
    }

    /// Symmetrized Euler form `(m, n) = ⟨m, n⟩ + ⟨n, m⟩`.
    pub fn euler_sym(&self, m: &[i64], n: &[i64]) -> i64 {
        self.pairing(m, n) + self.pairing(n, m)
    }

    /// `d∨_i = 2 d_i − Σ_j d_j (#(i→j) + #(j→i))`, so that `d∨ · n = (d, n)`.
    pub fn dvee(&self, d: &[i64]) -> Vec<i64> {
        let mut out: Vec<i64> = d.iter().map(|x| 2 * x).collect();
        for a in &self.arrows {
            out[a.source] -= d[a.target];
            out[a.target] -= d[a.source];
        }
        out
    }

    /// `γ_i = (1 − q^-1) Π_{loops at i} (1 − t)(1 − t/q)`.
    pub fn gamma(&self, i: usize) -> LaurentPoly {
        let qi = Monomial::power(Var::q(), -1);
        let mut factors = vec![LaurentPoly::one_minus(qi.clone())];
        for a in self.loops(i) {
            let t = Monomial::var(self.t(a));
            factors.push(LaurentPoly::one_minus(t.clone()));
            factors.push(LaurentPoly::one_minus(t.mul(&qi)));
        }
        LaurentPoly::product(factors.iter())
    }

    /// Shift tuples `(a, b)` for the dimension vector `d` and the stored framing.
    pub fn shifts(&self, d: &[u32]) -> Shifts {
        let n = self.num_vertices();
        let mut a: Vec<i64> = (0..n).map(|i| d[i] as i64 - self.framing_k[i] as i64).collect();
        let mut b: Vec<i64> = (0..n).map(|i| -(d[i] as i64) + self.framing_l[i] as i64).collect();
        for arr in &self.arrows {
            a[arr.source] -= d[arr.target] as i64;
            b[arr.target] += d[arr.source] as i64;
        }
        Shifts { a, b }
    }
}

/// The integer tuples `a`, `b` attached to a dimension vector and framing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shifts {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shifts_examples() {
        let j = Quiver::jordan().with_framing(&[1], &[0]);
        assert_eq!(j.shifts(&[1]), Shifts { a: vec![-1], b: vec![0] });
        assert_eq!(Quiver::a1().shifts(&[1]), Shifts { a: vec![1], b: vec![-1] });
        assert_eq!(Quiver::a2().shifts(&[1, 1]), Shifts { a: vec![0, 1], b: vec![-1, 0] });
    }

    #[test]
    fn pairing_and_dvee() {
        let a2 = Quiver::a2();
        assert_eq!(a2.pairing(&[1, 0], &[0, 1]), -1);
        assert_eq!(a2.pairing(&[0, 1], &[1, 0]), 0);
        assert_eq!(Quiver::jordan().pairing(&[1], &[1]), 0);
        assert_eq!(Quiver::jordan().dvee(&[3]), vec![0]);
        assert_eq!(a2.dvee(&[1, 1]), vec![1, 1]);
        assert_eq!(a2.dvee(&[0, 0]), vec![0, 0]);
    }

    #[test]
    fn gamma_examples() {
        let qi = LaurentPoly::one_minus(Monomial::power(Var::q(), -1));
        assert_eq!(Quiver::a1().gamma(0), qi);
        assert_eq!(Quiver::a2().gamma(0), qi);
        let t = Monomial::var(Var::arrow(0));
        let expect = &(&qi * &LaurentPoly::one_minus(t.clone()))
            * &LaurentPoly::one_minus(t.mul(&Monomial::power(Var::q(), -1)));
        assert_eq!(Quiver::jordan().gamma(0), expect);
    }

    #[test]
    fn config_roundtrip_and_errors() {
        let text = r#"{ "vertices": ["1","2"], "arrows": [{"id":"t1","source":"1","target":"2"}], "framing_k": {"1":1,"2":0}, "framing_l": {"1":0,"2":0} }"#;
        let q = Quiver::parse(text).unwrap();
        assert_eq!(q.framing_k(), &[1, 0]);
        assert_eq!(Quiver::parse(&q.to_json()).unwrap(), q);
        for fx in Quiver::fixtures() {
            assert_eq!(Quiver::parse(&fx.1.to_json()).unwrap(), fx.1);
        }

        let dangling = r#"{"vertices":["1"],"arrows":[{"id":"a","source":"1","target":"2"}]}"#;
        assert!(matches!(Quiver::parse(dangling), Err(QuiverError::UnknownVertex { .. })));
        let dup = r#"{"vertices":["1","1"]}"#;
        assert!(matches!(Quiver::parse(dup), Err(QuiverError::Duplicate { .. })));
        let unknown = r#"{"vertices":["1"],"colour":3}"#;
        assert!(matches!(Quiver::parse(unknown), Err(QuiverError::Syntax { .. })));
        let jordan = r#"{"vertices":["v"],"arrows":[{"id":"t","source":"v","target":"v"}]}"#;
        assert_eq!(Quiver::parse(jordan).unwrap().loops(0).count(), 1);
    }
}
