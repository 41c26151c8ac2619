use crate::quiver::{DimVector, Quiver, QuiverError};
use crate::ring::{Int, LaurentPoly, Var};
use crate::shuffle::{shuffle_mul, Generator, ShuffleElement, ShuffleError, Side};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExprError {
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error("unknown vertex {id:?} at column {column}")]
    UnknownVertex { column: usize, id: String },
    #[error("unknown arrow {id:?} at column {column}")]
    UnknownArrow { column: usize, id: String },
    #[error("at column {column}: {source}")]
    Eval { column: usize, source: ShuffleError },
}

/// Parses a quiver configuration in the JSON schema.
pub fn parse_quiver(text: &str) -> Result<Quiver, QuiverError> {
    Quiver::parse(text)
}

/// Parsed shuffle expression. Scalars are Laurent polynomials in `q` and
/// the arrow parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Gen { column: usize, gen: Generator },
    Scalar(LaurentPoly),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul { column: usize, lhs: Box<Expr>, rhs: Box<Expr> },
    Neg(Box<Expr>),
}

#[derive(Clone, Debug)]
enum Value {
    Scalar(LaurentPoly),
    Elem(ShuffleElement),
}

impl Expr {
    /// Number of generator leaves.
    pub fn generators(&self) -> usize {
        match self {
            Expr::Gen { .. } => 1,
            Expr::Scalar(_) => 0,
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul { lhs: a, rhs: b, .. } => a.generators() + b.generators(),
            Expr::Neg(a) => a.generators(),
        }
    }

    /// Evaluates with `gen_e`/`gen_f`, the shuffle product and addition.
    /// A bare scalar evaluates on the plus side.
    pub fn eval(&self, q: &Quiver) -> Result<ShuffleElement, ExprError> {
        Ok(match self.value(q)? {
            Value::Elem(e) => e,
            Value::Scalar(c) => ShuffleElement::scalar(q, Side::Plus, c),
        })
    }

    fn value(&self, q: &Quiver) -> Result<Value, ExprError> {
        let at = |column| move |source| ExprError::Eval { column, source };
        Ok(match self {
            Expr::Gen { column, gen } => {
                let checked = Generator::new(q, gen.side, gen.n.clone(), gen.g.clone()).map_err(at(*column))?;
                Value::Elem(checked.element())
            }
            Expr::Scalar(c) => Value::Scalar(c.clone()),
            Expr::Neg(a) => match a.value(q)? {
                Value::Scalar(c) => Value::Scalar(-c),
                Value::Elem(e) => Value::Elem(e.neg()),
            },
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                let (x, mut y) = (a.value(q)?, b.value(q)?);
                if matches!(self, Expr::Sub(..)) {
                    y = match y {
                        Value::Scalar(c) => Value::Scalar(-c),
                        Value::Elem(e) => Value::Elem(e.neg()),
                    };
                }
                match (x, y) {
                    (Value::Scalar(c), Value::Scalar(d)) => Value::Scalar(&c + &d),
                    (Value::Scalar(c), Value::Elem(e)) | (Value::Elem(e), Value::Scalar(c)) => {
                        let s = ShuffleElement::scalar(q, e.side(), c);
                        Value::Elem(e.add(&s).map_err(at(0))?)
                    }
                    (Value::Elem(e), Value::Elem(f)) => Value::Elem(e.add(&f).map_err(at(0))?),
                }
            }
            Expr::Mul { column, lhs, rhs } => match (lhs.value(q)?, rhs.value(q)?) {
                (Value::Scalar(c), Value::Scalar(d)) => Value::Scalar(&c * &d),
                (Value::Scalar(c), Value::Elem(e)) | (Value::Elem(e), Value::Scalar(c)) => {
                    Value::Elem(e.map_poly(|p| p * &c))
                }
                (Value::Elem(e), Value::Elem(f)) => Value::Elem(shuffle_mul(q, &e, &f).map_err(at(*column))?),
            },
        })
    }
}

/// Parses and evaluates in one step.
pub fn eval_expr(text: &str, q: &Quiver) -> Result<ShuffleElement, ExprError> {
    parse_expr(text, q)?.eval(q)
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Word(String),
    Sym(char),
    End,
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    q: &'a Quiver,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ExprError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut k = 0;
    while k < chars.len() {
        let (off, c) = chars[k];
        let column = text[..off].chars().count() + 1;
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_alphanumeric() || c == '_' {
            let mut w = String::new();
            while k < chars.len() && (chars[k].1.is_ascii_alphanumeric() || chars[k].1 == '_') {
                w.push(chars[k].1);
                k += 1;
            }
            out.push((Tok::Word(w), column));
        } else if "+-*^()[],;=".contains(c) {
            out.push((Tok::Sym(c), column));
            k += 1;
        } else {
            return Err(ExprError::Syntax {
                column,
                message: format!("unexpected character {c:?}"),
            });
        }
    }
    out.push((Tok::End, text.chars().count() + 1));
    Ok(out)
}

/// Parses the shuffle expression grammar:
///
/// ```text
/// expr := term (('+'|'-') term)*      term := atom ('*' atom)*
/// atom := gen | INT | PARAM | '(' expr ')' | '-' atom
/// gen  := ('e'|'f') '[' dims ';' poly ']'
/// ```
///
/// `dims` lists `vertex=count` pairs; `poly` is a Laurent expression in
/// `z[vertex,index]`, `q` and `t_<arrow>`, with `^` taking signed integers.
pub fn parse_expr(text: &str, q: &Quiver) -> Result<Expr, ExprError> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
        q,
    };
    let e = p.expr()?;
    p.expect_end()?;
    Ok(e)
}

/// Parses a Laurent polynomial in `z[vertex,index]`, `q` and `t_<arrow>`.
pub fn parse_poly(text: &str, q: &Quiver) -> Result<LaurentPoly, ExprError> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
        q,
    };
    let e = p.poly()?;
    p.expect_end()?;
    Ok(e)
}

/// Parses a dimension vector: either `vertex=count` pairs or counts in
/// vertex order, comma separated.
pub fn parse_dims(text: &str, q: &Quiver) -> Result<DimVector, ExprError> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
        q,
    };
    let positional = !p.toks.iter().any(|(t, _)| *t == Tok::Sym('='));
    let d = if positional {
        let mut out = Vec::new();
        loop {
            out.push(p.uint()?);
            if !p.eat(',') {
                break;
            }
        }
        if out.len() != q.num_vertices() {
            return Err(p.error(format!("expected {} entries, got {}", q.num_vertices(), out.len())));
        }
        out
    } else {
        p.dims()?
    };
    p.expect_end()?;
    Ok(d)
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn column(&self) -> usize {
        self.toks[self.pos].1
    }

    fn error(&self, message: impl Into<String>) -> ExprError {
        ExprError::Syntax {
            column: self.column(),
            message: message.into(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ExprError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected {c:?}")))
        }
    }

    fn expect_end(&self) -> Result<(), ExprError> {
        match self.peek() {
            Tok::End => Ok(()),
            _ => Err(self.error("unexpected trailing input")),
        }
    }

    fn word(&mut self) -> Result<String, ExprError> {
        match self.peek().clone() {
            Tok::Word(w) => {
                self.pos += 1;
                Ok(w)
            }
            _ => Err(self.error("expected an identifier or number")),
        }
    }

    fn uint(&mut self) -> Result<u32, ExprError> {
        let col = self.column();
        let w = self.word()?;
        w.parse().map_err(|_| ExprError::Syntax {
            column: col,
            message: format!("expected a nonnegative integer, got {w:?}"),
        })
    }

    fn exponent(&mut self) -> Result<i32, ExprError> {
        let neg = self.eat('-');
        let col = self.column();
        let w = self.word()?;
        let e: i32 = w.parse().map_err(|_| ExprError::Syntax {
            column: col,
            message: format!("expected an integer exponent, got {w:?}"),
        })?;
        Ok(if neg { -e } else { e })
    }

    fn vertex(&mut self) -> Result<usize, ExprError> {
        let column = self.column();
        let id = self.word()?;
        self.q.vertex_index(&id).ok_or(ExprError::UnknownVertex { column, id })
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
            } else if self.eat('-') {
                acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut acc = self.atom()?;
        loop {
            let column = self.column();
            if !self.eat('*') {
                return Ok(acc);
            }
            acc = Expr::Mul {
                column,
                lhs: Box::new(acc),
                rhs: Box::new(self.atom()?),
            };
        }
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        let column = self.column();
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.atom()?)));
        }
        if self.eat('(') {
            let e = self.expr()?;
            self.expect(')')?;
            return Ok(e);
        }
        let side = match self.peek() {
            Tok::Word(w) if w == "e" => Some(Side::Plus),
            Tok::Word(w) if w == "f" => Some(Side::Minus),
            _ => None,
        };
        if let Some(side) = side {
            self.pos += 1;
            self.expect('[')?;
            let n = self.dims()?;
            self.expect(';')?;
            let g = self.poly()?;
            self.expect(']')?;
            return Ok(Expr::Gen {
                column,
                gen: Generator { side, n, g },
            });
        }
        match self.peek() {
            Tok::Word(_) => Ok(Expr::Scalar(self.param_factor()?)),
            _ => Err(self.error("expected a generator, integer, parameter or '('")),
        }
    }

    fn dims(&mut self) -> Result<DimVector, ExprError> {
        let mut n = vec![0; self.q.num_vertices()];
        loop {
            let i = self.vertex()?;
            self.expect('=')?;
            n[i] += self.uint()?;
            if !self.eat(',') {
                return Ok(n);
            }
        }
    }

    /// An integer or parameter with an optional exponent, as an outer atom.
    fn param_factor(&mut self) -> Result<LaurentPoly, ExprError> {
        let base = self.poly_base(false)?;
        self.power(base)
    }

    fn poly(&mut self) -> Result<LaurentPoly, ExprError> {
        let neg = self.eat('-');
        let mut acc = self.poly_term()?;
        if neg {
            acc = -acc;
        }
        loop {
            if self.eat('+') {
                acc = &acc + &self.poly_term()?;
            } else if self.eat('-') {
                acc = &acc - &self.poly_term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn poly_term(&mut self) -> Result<LaurentPoly, ExprError> {
        let mut acc = self.poly_factor()?;
        while self.eat('*') {
            acc = &acc * &self.poly_factor()?;
        }
        Ok(acc)
    }

    fn poly_factor(&mut self) -> Result<LaurentPoly, ExprError> {
        if self.eat('-') {
            return Ok(-self.poly_factor()?);
        }
        let base = if self.eat('(') {
            let p = self.poly()?;
            self.expect(')')?;
            p
        } else {
            self.poly_base(true)?
        };
        self.power(base)
    }

    fn power(&mut self, base: LaurentPoly) -> Result<LaurentPoly, ExprError> {
        let column = self.column();
        if !self.eat('^') {
            return Ok(base);
        }
        let e = self.exponent()?;
        if e >= 0 {
            return Ok(base.pow(e as u32));
        }
        match base.as_term() {
            Some((m, c)) if *c == Int::from(1) || *c == Int::from(-1) => Ok(LaurentPoly::term(m.pow(e), c.clone())),
            _ => Err(ExprError::Syntax {
                column,
                message: "negative powers need a monomial base".into(),
            }),
        }
    }

    fn poly_base(&mut self, allow_z: bool) -> Result<LaurentPoly, ExprError> {
        let column = self.column();
        let w = self.word()?;
        if let Ok(c) = w.parse::<i64>() {
            return Ok(LaurentPoly::constant(c));
        }
        if w == "q" {
            return Ok(LaurentPoly::var(Var::q()));
        }
        if let Some(id) = w.strip_prefix("t_") {
            let arrow = self.q.arrow_index(id).ok_or(ExprError::UnknownArrow {
                column,
                id: id.to_string(),
            })?;
            return Ok(LaurentPoly::var(self.q.t(arrow)));
        }
        if w == "z" && allow_z {
            self.expect('[')?;
            let i = self.vertex()?;
            self.expect(',')?;
            let a_col = self.column();
            let a = self.uint()?;
            if a == 0 {
                return Err(ExprError::Syntax {
                    column: a_col,
                    message: "variable indices start at 1".into(),
                });
            }
            self.expect(']')?;
            return Ok(LaurentPoly::var(Var::z(i, a as usize)));
        }
        Err(ExprError::Syntax {
            column,
            message: format!("unknown symbol {w:?}"),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shuffle::{gen_e, gen_f, z};

    #[test]
    fn generators() {
        let q = Quiver::a1();
        assert_eq!(eval_expr("e[1=1; 1]", &q).unwrap(), gen_e(&q, vec![1], LaurentPoly::one()).unwrap());
        let g = &LaurentPoly::var(z(0, 1)) * &LaurentPoly::var(z(0, 2));
        assert_eq!(eval_expr("e[1=2; z[1,1]*z[1,2]]", &q).unwrap(), gen_e(&q, vec![2], g).unwrap());
        let f = eval_expr("f[1=1; z[1,1]^-2]", &q).unwrap();
        assert_eq!(f, gen_f(&q, vec![1], LaurentPoly::var_pow(z(0, 1), -2)).unwrap());
    }

    #[test]
    fn product_tree() {
        let q = Quiver::a1();
        let e = parse_expr("e[1=1; z[1,1]] * e[1=1; 1]", &q).unwrap();
        assert!(matches!(e, Expr::Mul { .. }));
        assert_eq!(e.generators(), 2);
        let a = gen_e(&q, vec![1], LaurentPoly::var(z(0, 1))).unwrap();
        let b = gen_e(&q, vec![1], LaurentPoly::one()).unwrap();
        assert_eq!(e.eval(&q).unwrap(), shuffle_mul(&q, &a, &b).unwrap());
    }

    #[test]
    fn scalars_and_sums() {
        let q = Quiver::jordan();
        let a = eval_expr("(q - 1) * e[1=1; 1] + 2*e[1=1;1]", &q).unwrap();
        let expect = gen_e(&q, vec![1], &LaurentPoly::var(Var::q()) + &LaurentPoly::one()).unwrap();
        assert_eq!(a, expect);
        let t = eval_expr("t_1^-1 * e[1=1; z[1,1]]", &q).unwrap();
        assert_eq!(t.poly(), &gen_e(&q, vec![1], LaurentPoly::var(z(0, 1))).unwrap().poly().mul_mono(&crate::ring::Monomial::power(q.t(0), -1)));
    }

    #[test]
    fn errors_have_columns() {
        let q = Quiver::a2();
        assert!(matches!(parse_expr("e[3=1; 1]", &q), Err(ExprError::UnknownVertex { column: 3, .. })));
        assert!(matches!(parse_expr("e[1=1; t_x]", &q), Err(ExprError::UnknownArrow { column: 8, .. })));
        assert!(matches!(parse_expr("e[1=1; 1", &q), Err(ExprError::Syntax { column: 9, .. })));
        assert!(matches!(eval_expr("e[1=2; z[1,1]]", &q), Err(ExprError::Eval { column: 1, .. })));
        assert!(matches!(eval_expr("e[1=1;1] * f[1=1;1]", &q), Err(ExprError::Eval { column: 10, .. })));
    }

    #[test]
    fn dims_forms() {
        let q = Quiver::a2();
        assert_eq!(parse_dims("1,2", &q).unwrap(), vec![1, 2]);
        assert_eq!(parse_dims("2=1", &q).unwrap(), vec![0, 1]);
        assert!(parse_dims("1", &q).is_err());
    }
}
