use std::fmt;

/// Kind tag of an indeterminate. The discriminant order is the canonical
/// variable order used for serialization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum VarKind {
    Q = 0,
    Arrow = 1,
    Sigma = 2,
    Tau = 3,
    W = 4,
    X = 5,
    Z = 6,
    Series = 7,
}

impl VarKind {
    fn from_bits(bits: u32) -> VarKind {
        match bits {
            0 => VarKind::Q,
            1 => VarKind::Arrow,
            2 => VarKind::Sigma,
            3 => VarKind::Tau,
            4 => VarKind::W,
            5 => VarKind::X,
            6 => VarKind::Z,
            _ => VarKind::Series,
        }
    }
}

/// A formal indeterminate, packed as `kind:4 | major:12 | minor:16`.
///
/// For vertex-indexed kinds the major field is the 0-based vertex position in
/// the quiver and the minor field is the 1-based index. For arrow parameters
/// the major field is the 0-based arrow position.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(u32);

impl Var {
    const fn pack(kind: VarKind, major: usize, minor: usize) -> Var {
        assert!(major < (1 << 12) && minor < (1 << 16));
        Var(((kind as u32) << 28) | ((major as u32) << 16) | minor as u32)
    }

    pub const fn q() -> Var {
        Var::pack(VarKind::Q, 0, 0)
    }

    pub const fn series() -> Var {
        Var::pack(VarKind::Series, 0, 0)
    }

    pub const fn arrow(arrow: usize) -> Var {
        Var::pack(VarKind::Arrow, arrow, 0)
    }

    pub fn sigma(vertex: usize, index: usize) -> Var {
        debug_assert!(index >= 1);
        Var::pack(VarKind::Sigma, vertex, index)
    }

    pub fn tau(vertex: usize, index: usize) -> Var {
        debug_assert!(index >= 1);
        Var::pack(VarKind::Tau, vertex, index)
    }

    pub fn w(vertex: usize, index: usize) -> Var {
        debug_assert!(index >= 1);
        Var::pack(VarKind::W, vertex, index)
    }

    pub fn x(vertex: usize, index: usize) -> Var {
        debug_assert!(index >= 1);
        Var::pack(VarKind::X, vertex, index)
    }

    pub fn z(vertex: usize, index: usize) -> Var {
        debug_assert!(index >= 1);
        Var::pack(VarKind::Z, vertex, index)
    }

    pub fn kind(self) -> VarKind {
        VarKind::from_bits(self.0 >> 28)
    }

    /// Vertex position (or arrow position for [`VarKind::Arrow`]).
    pub fn major(self) -> usize {
        ((self.0 >> 16) & 0xfff) as usize
    }

    /// 1-based index within the vertex; 0 for `q`, arrows and the series variable.
    pub fn minor(self) -> usize {
        (self.0 & 0xffff) as usize
    }

    /// Same kind, vertex and index, but of another kind (e.g. `z[i,a]` to `x[i,a]`).
    pub fn with_kind(self, kind: VarKind) -> Var {
        Var::pack(kind, self.major(), self.minor())
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", Alphabet::default().var_name(*self))
    }
}

/// Human-readable names of vertices and arrows, used to print indeterminates.
///
/// Without a quiver the default alphabet names vertex `k` as `k+1` and arrow
/// `k` as `a{k+1}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Alphabet {
    pub vertices: Vec<String>,
    pub arrows: Vec<String>,
}

impl Alphabet {
    pub fn vertex_name(&self, vertex: usize) -> String {
        self.vertices
            .get(vertex)
            .cloned()
            .unwrap_or_else(|| (vertex + 1).to_string())
    }

    pub fn arrow_name(&self, arrow: usize) -> String {
        self.arrows
            .get(arrow)
            .cloned()
            .unwrap_or_else(|| format!("a{}", arrow + 1))
    }

    pub fn var_name(&self, v: Var) -> String {
        let indexed = |tag: &str| format!("{tag}[{},{}]", self.vertex_name(v.major()), v.minor());
        match v.kind() {
            VarKind::Q => "q".to_string(),
            VarKind::Arrow => format!("t_{}", self.arrow_name(v.major())),
            VarKind::Sigma => indexed("sigma"),
            VarKind::Tau => indexed("tau"),
            VarKind::W => indexed("w"),
            VarKind::X => indexed("x"),
            VarKind::Z => indexed("z"),
            VarKind::Series => "x".to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_kind_order() {
        let order = [
            Var::q(),
            Var::arrow(3),
            Var::sigma(0, 1),
            Var::tau(0, 1),
            Var::w(1, 2),
            Var::x(0, 1),
            Var::z(0, 1),
            Var::series(),
        ];
        assert!(order.windows(2).all(|p| p[0] < p[1]));
        assert!(Var::z(0, 2) < Var::z(1, 1));
    }

    #[test]
    fn fields_roundtrip() {
        let v = Var::w(7, 301);
        assert_eq!((v.kind(), v.major(), v.minor()), (VarKind::W, 7, 301));
        assert_eq!(v.with_kind(VarKind::X), Var::x(7, 301));
    }
}
