//! Evaluation of expression trees over a [`PolymetricAlgebra`].
//!
//! Values stay in the Grassmann basis except for `E(...)` literals and the
//! results of `toC`, which are Clifford-tagged. A Clifford value remembers
//! the metric whose basis it is written in; an `E(...)` literal has none and
//! takes the metric of whatever operator consumes it (`*k` uses `g_k`,
//! everything else `g₁`).

use std::collections::HashMap;

use num_traits::ToPrimitive;

use crate::conversion::convert_basis;
use crate::error::AlgebraError;
use crate::exterior::{even_part, exterior_product, odd_part, pseudo_hermitian_conj, rank_project};
use crate::index_set::IndexSet;
use crate::multivector::{BasisTag, Multivector};
use crate::polymetric::PolymetricAlgebra;
use crate::scalar::Scalar;

use super::lexer::Pos;
use super::parser::{Expr, ExprKind};
use super::{EvalErrorKind, ExprError};

/// An evaluated multivector together with the metric of its Clifford basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Value {
    pub mv: Multivector,
    /// For Clifford-tagged values: the metric index, or `None` for a basis
    /// literal not yet tied to a metric. Always `None` for Grassmann values.
    pub clifford_metric: Option<usize>,
}

impl Value {
    pub fn grassmann(mv: Multivector) -> Self {
        debug_assert_eq!(mv.tag(), BasisTag::Grassmann);
        Value {
            mv,
            clifford_metric: None,
        }
    }

    /// This value in the Grassmann basis; unbound Clifford literals are read
    /// in the basis of `g_default`.
    pub fn to_grassmann(&self, alg: &PolymetricAlgebra, default: usize) -> Result<Multivector, AlgebraError> {
        if self.mv.tag() == BasisTag::Grassmann {
            return Ok(self.mv.clone());
        }
        let k = self.clifford_metric.unwrap_or(default);
        convert_basis(&self.mv, alg.metric(k)?, BasisTag::Grassmann)
    }

    /// This value written in the Clifford basis of `g_k`.
    pub fn to_clifford(&self, alg: &PolymetricAlgebra, k: usize) -> Result<Multivector, AlgebraError> {
        if self.mv.tag() == BasisTag::Clifford && self.clifford_metric.is_none_or(|m| m == k) {
            return Ok(self.mv.clone());
        }
        let g = alg.metric(k)?;
        convert_basis(&self.to_grassmann(alg, k)?, g, BasisTag::Clifford)
    }
}

/// Variable bindings over one algebra.
#[derive(Clone, Debug)]
pub struct Environment {
    alg: PolymetricAlgebra,
    bindings: HashMap<String, Value>,
}

impl Environment {
    pub fn new(alg: PolymetricAlgebra) -> Self {
        Environment {
            alg,
            bindings: HashMap::new(),
        }
    }

    pub fn algebra(&self) -> &PolymetricAlgebra {
        &self.alg
    }

    pub fn get(&self, name: &str) -> Option<&Value> {
        self.bindings.get(name)
    }

    /// Binds `name`; names cannot be rebound.
    pub fn bind(&mut self, name: &str, value: Value, pos: Pos) -> Result<(), ExprError> {
        if self.bindings.contains_key(name) {
            return Err(ExprError::eval(pos, EvalErrorKind::AlreadyBound(name.to_string())));
        }
        self.bindings.insert(name.to_string(), value);
        Ok(())
    }
}

pub fn evaluate(ast: &Expr, env: &Environment) -> Result<Value, ExprError> {
    Evaluator { env }.eval(ast)
}

struct Evaluator<'a> {
    env: &'a Environment,
}

impl Evaluator<'_> {
    fn alg(&self) -> &PolymetricAlgebra {
        &self.env.alg
    }

    fn n(&self) -> usize {
        self.env.alg.dim()
    }

    fn scalar(&self, s: Scalar) -> Value {
        Value::grassmann(Multivector::scalar(self.n(), BasisTag::Grassmann, s))
    }

    fn grassmann(&self, e: &Expr, default: usize) -> Result<Multivector, ExprError> {
        let v = self.eval(e)?;
        v.to_grassmann(self.alg(), default).map_err(|err| ExprError::algebra(e.pos, err))
    }

    fn eval(&self, e: &Expr) -> Result<Value, ExprError> {
        let at = |err: AlgebraError| ExprError::algebra(e.pos, err);
        match &e.kind {
            ExprKind::RationalLit(r) => Ok(self.scalar(Scalar::real(r.clone()))),
            ExprKind::ImagLit => Ok(self.scalar(Scalar::imaginary_unit())),
            ExprKind::Identity => Ok(self.scalar(Scalar::one())),
            ExprKind::GrassmannBlade(ix) => {
                self.check_indices(ix, e.pos)?;
                Ok(Value::grassmann(signed_blade(self.n(), ix)))
            }
            ExprKind::CliffordBlade(ix) => {
                self.check_indices(ix, e.pos)?;
                if ix.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(ExprError::eval(e.pos, EvalErrorKind::CliffordOrder(ix.clone())));
                }
                let mv = Multivector::basis(self.n(), BasisTag::Clifford, ix).map_err(at)?;
                Ok(Value {
                    mv,
                    clifford_metric: None,
                })
            }
            ExprKind::VarRef(name) => self
                .env
                .get(name)
                .cloned()
                .ok_or_else(|| ExprError::eval(e.pos, EvalErrorKind::Unbound(name.clone()))),
            ExprKind::Neg(a) => {
                let v = self.eval(a)?;
                Ok(Value {
                    mv: v.mv.neg(),
                    ..v
                })
            }
            ExprKind::Conj(a) => {
                let u = self.grassmann(a, 1)?;
                Ok(Value::grassmann(pseudo_hermitian_conj(&u).map_err(at)?))
            }
            ExprKind::Add(a, b) | ExprKind::Sub(a, b) => {
                let (x, y) = (self.eval(a)?, self.eval(b)?);
                let subtract = matches!(e.kind, ExprKind::Sub(..));
                self.linear(x, y, subtract).map_err(at)
            }
            ExprKind::Wedge(a, b) => {
                let (x, y) = (self.grassmann(a, 1)?, self.grassmann(b, 1)?);
                Ok(Value::grassmann(exterior_product(&x, &y).map_err(at)?))
            }
            ExprKind::CliffordMul(k, a, b) => {
                self.alg().metric(*k).map_err(at)?;
                let (x, y) = (self.grassmann(a, *k)?, self.grassmann(b, *k)?);
                Ok(Value::grassmann(self.alg().product(&x, &y, *k).map_err(at)?))
            }
            ExprKind::Call(name, args) => self.call(name, args, e.pos),
        }
    }

    fn check_indices(&self, ix: &[usize], pos: Pos) -> Result<(), ExprError> {
        let n = self.n();
        match ix.iter().find(|&&i| i == 0 || i > n) {
            Some(&index) => Err(ExprError::algebra(pos, AlgebraError::IndexOutOfRange { index, n })),
            None => Ok(()),
        }
    }

    /// `x ± y`. Two Clifford values in the same (or a not yet fixed) basis
    /// are combined in that basis; anything else goes through Grassmann.
    fn linear(&self, x: Value, y: Value, subtract: bool) -> Result<Value, AlgebraError> {
        let combine = |a: &Multivector, b: &Multivector| {
            if subtract {
                a.checked_sub(b)
            } else {
                a.checked_add(b)
            }
        };
        let both_clifford = x.mv.tag() == BasisTag::Clifford && y.mv.tag() == BasisTag::Clifford;
        let metrics_agree = match (x.clifford_metric, y.clifford_metric) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        };
        if both_clifford && metrics_agree {
            return Ok(Value {
                mv: combine(&x.mv, &y.mv)?,
                clifford_metric: x.clifford_metric.or(y.clifford_metric),
            });
        }
        let a = x.to_grassmann(self.alg(), 1)?;
        let b = y.to_grassmann(self.alg(), 1)?;
        Ok(Value::grassmann(combine(&a, &b)?))
    }

    fn call(&self, name: &str, args: &[Expr], pos: Pos) -> Result<Value, ExprError> {
        let at = |err: AlgebraError| ExprError::algebra(pos, err);
        let arity = |min: usize, max: usize| {
            if args.len() < min || args.len() > max {
                Err(ExprError::eval(
                    pos,
                    EvalErrorKind::Arity {
                        func: name.to_string(),
                        expected: if min == max { min.to_string() } else { format!("{min} or {max}") },
                        found: args.len(),
                    },
                ))
            } else {
                Ok(())
            }
        };
        match name {
            "rank" => {
                arity(2, 2)?;
                let k = integer_literal(name, &args[1])?;
                let u = self.grassmann(&args[0], 1)?;
                let k = usize::try_from(k).map_err(|_| at(AlgebraError::RankOutOfRange { k: usize::MAX, n: self.n() }))?;
                Ok(Value::grassmann(rank_project(&u, k).map_err(at)?))
            }
            "even" | "odd" => {
                arity(1, 1)?;
                let u = self.grassmann(&args[0], 1)?;
                let part = if name == "even" { even_part(&u) } else { odd_part(&u) };
                Ok(Value::grassmann(part.map_err(at)?))
            }
            "toC" | "toG" => {
                arity(1, 2)?;
                let k = match args.get(1) {
                    Some(a) => usize::try_from(integer_literal(name, a)?).unwrap_or(0),
                    None => 1,
                };
                self.alg().metric(k).map_err(at)?;
                let v = self.eval(&args[0])?;
                if name == "toC" {
                    Ok(Value {
                        mv: v.to_clifford(self.alg(), k).map_err(at)?,
                        clifford_metric: Some(k),
                    })
                } else {
                    Ok(Value::grassmann(v.to_grassmann(self.alg(), k).map_err(at)?))
                }
            }
            other => Err(ExprError::eval(pos, EvalErrorKind::UnknownFunction(other.to_string()))),
        }
    }
}

fn integer_literal(func: &str, e: &Expr) -> Result<i64, ExprError> {
    let not_literal = || ExprError::eval(e.pos, EvalErrorKind::NotIntegerLiteral(func.to_string()));
    match &e.kind {
        ExprKind::RationalLit(r) if r.is_integer() => r.to_integer().to_i64().ok_or_else(not_literal),
        _ => Err(not_literal()),
    }
}

/// `e^{i₁} ∧ … ∧ e^{i_k}` for an arbitrary index list.
fn signed_blade(n: usize, ix: &[usize]) -> Multivector {
    let Some(set) = IndexSet::from_indices(ix) else {
        return Multivector::zero(n, BasisTag::Grassmann);
    };
    let inversions = (0..ix.len())
        .flat_map(|a| (a + 1..ix.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| ix[a] > ix[b])
        .count();
    let sign = if inversions % 2 == 0 { 1 } else { -1 };
    Multivector::blade(n, BasisTag::Grassmann, set, Scalar::from_i64(sign)).expect("indices checked")
}
