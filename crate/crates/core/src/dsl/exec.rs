//! Statement executor: evaluates expressions against the library modules,
//! maintains named bindings, and records a deterministic trace.

use std::fmt;
use std::sync::Arc;

use crate::closure::{
    bracket_power, integral_cert_summary, parameter_test_ideal, tc_membership_bounded,
    tc_membership_sr, test_ideal_sr, tight_closure_sr, ClosureVerdict,
};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::groebner::normal_form;
use crate::ideal::Ideal;
use crate::local_cohomology::{annihilates, frobenius_class, make_class, LocalCohomClass, SopData};
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::{PolyRing, RingSpec};
use crate::strong_test::check_strong_property;

use super::parser::{eval_polynomial_expr, BindKind, Expr, ExprKind, Program, StmtKind};

#[derive(Debug, Clone)]
pub enum Value {
    Ring(RingSpec),
    Poly(Polynomial),
    Ideal(Ideal),
    Class(LocalCohomClass),
    Sop(Arc<SopData>),
    Verdict(ClosureVerdict),
    Bool(bool),
    Int(u64),
    Str(String),
    List(Vec<Value>),
    Report(String),
    Unit,
}

impl Value {
    fn type_name(&self) -> &'static str {
        match self {
            Value::Ring(_) => "ring",
            Value::Poly(_) => "poly",
            Value::Ideal(_) => "ideal",
            Value::Class(_) => "class",
            Value::Sop(_) => "sop",
            Value::Verdict(_) => "verdict",
            Value::Bool(_) => "bool",
            Value::Int(_) => "int",
            Value::Str(_) => "string",
            Value::List(_) => "list",
            Value::Report(_) => "report",
            Value::Unit => "unit",
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Ring(r) => write!(f, "{}", r.describe()),
            Value::Poly(p) => write!(f, "{p}"),
            Value::Ideal(i) => write!(f, "{i}"),
            Value::Class(c) => write!(f, "{c}"),
            Value::Sop(s) => {
                let gens: Vec<String> = s.sop().iter().map(|g| g.to_string()).collect();
                write!(f, "sop ({}) verified", gens.join(", "))
            }
            Value::Verdict(v) => write!(f, "{v}"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Int(n) => write!(f, "{n}"),
            Value::Str(s) => write!(f, "{s}"),
            Value::List(items) => {
                let parts: Vec<String> = items.iter().map(|v| v.to_string()).collect();
                write!(f, "({})", parts.join(", "))
            }
            Value::Report(r) => write!(f, "{r}"),
            Value::Unit => write!(f, "ok"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceKind {
    Result,
    Warning,
    Error,
    Audit,
}

#[derive(Debug, Clone)]
pub struct TraceEntry {
    pub line: usize,
    pub col: usize,
    pub kind: TraceKind,
    pub text: String,
}

#[derive(Debug, Default)]
pub struct ExecOutcome {
    pub trace: Vec<TraceEntry>,
    pub errors: usize,
    pub budget_errors: usize,
}

impl ExecOutcome {
    pub fn exit_code(&self) -> i32 {
        if self.budget_errors > 0 {
            3
        } else if self.errors > 0 {
            1
        } else {
            0
        }
    }
}

/// Mask of configuration fields pinned by flags or environment; a loaded
/// session file only fills the unpinned ones.
#[derive(Debug, Clone, Copy, Default)]
pub struct ConfigMask {
    pub prime_cap: bool,
    pub e_max: bool,
    pub q_cap: bool,
    pub level_cap: bool,
    pub gb_max_basis: bool,
    pub gb_max_reductions: bool,
}

#[derive(Debug, Default)]
pub struct Env {
    bindings: Vec<(String, Value)>,
    pub config_mask: ConfigMask,
}

impl Env {
    pub fn new() -> Env {
        Env::default()
    }

    pub fn bindings(&self) -> &[(String, Value)] {
        &self.bindings
    }

    pub fn lookup(&self, name: &str) -> Option<&Value> {
        self.bindings.iter().rev().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    pub fn bind(&mut self, name: String, value: Value) -> bool {
        let shadowed = self.bindings.iter().any(|(n, _)| *n == name);
        self.bindings.retain(|(n, _)| *n != name);
        self.bindings.push((name, value));
        shadowed
    }

    pub fn replace_bindings(&mut self, bindings: Vec<(String, Value)>) {
        self.bindings = bindings;
    }

    pub fn current_ring(&self) -> Option<&RingSpec> {
        self.bindings.iter().rev().find_map(|(_, v)| match v {
            Value::Ring(r) => Some(r),
            _ => None,
        })
    }

    fn require_ring(&self) -> Result<RingSpec> {
        self.current_ring()
            .cloned()
            .ok_or_else(|| Error::ValueType("no ring bound yet; bind one with `ring R = ...;`".into()))
    }
}

fn as_poly(v: Value, env: &Env) -> Result<Polynomial> {
    match v {
        Value::Poly(p) => Ok(p),
        Value::Int(n) => {
            let ring = env.require_ring()?;
            Ok(Polynomial::constant(ring.ambient(), n))
        }
        other => Err(Error::ValueType(format!("expected a polynomial, found {}", other.type_name()))),
    }
}

fn as_ideal(v: Value, env: &Env) -> Result<Ideal> {
    match v {
        Value::Ideal(i) => Ok(i),
        Value::Poly(p) => Ideal::new(&p.ring().clone(), vec![p]),
        Value::Int(n) => {
            let ring = env.require_ring()?;
            Ideal::new(ring.ambient(), vec![Polynomial::constant(ring.ambient(), n)])
        }
        Value::List(items) => {
            let polys = items
                .into_iter()
                .map(|v| as_poly(v, env))
                .collect::<Result<Vec<_>>>()?;
            let ring = polys
                .first()
                .map(|p| p.ring().clone())
                .ok_or_else(|| Error::ValueType("empty generator list".into()))?;
            Ideal::new(&ring, polys)
        }
        other => Err(Error::ValueType(format!("expected an ideal, found {}", other.type_name()))),
    }
}

fn as_int(v: Value) -> Result<u64> {
    match v {
        Value::Int(n) => Ok(n),
        other => Err(Error::ValueType(format!("expected an integer, found {}", other.type_name()))),
    }
}

fn as_str(v: Value) -> Result<String> {
    match v {
        Value::Str(s) => Ok(s),
        other => Err(Error::ValueType(format!("expected a string, found {}", other.type_name()))),
    }
}

fn as_class(v: Value) -> Result<LocalCohomClass> {
    match v {
        Value::Class(c) => Ok(c),
        other => Err(Error::ValueType(format!("expected a class, found {}", other.type_name()))),
    }
}

fn as_sop(v: Value) -> Result<Arc<SopData>> {
    match v {
        Value::Sop(s) => Ok(s),
        other => Err(Error::ValueType(format!("expected an s.o.p., found {}", other.type_name()))),
    }
}

fn eval(env: &mut Env, expr: &Expr, trace: &mut Vec<TraceEntry>) -> Result<Value> {
    match &expr.kind {
        ExprKind::Num(n) => Ok(Value::Int(*n)),
        ExprKind::Str(s) => Ok(Value::Str(s.clone())),
        ExprKind::Name(name) => {
            if let Some(v) = env.lookup(name) {
                return Ok(v.clone());
            }
            if let Some(ring) = env.current_ring() {
                if let Some(i) = ring.ambient().var_index(name) {
                    return Ok(Value::Poly(Polynomial::var(ring.ambient(), i)));
                }
            }
            Err(Error::UnboundName(name.clone()))
        }
        ExprKind::RingLit { prime, vars, gens } => {
            let ambient = PolyRing::new(*prime, vars.clone())?;
            let defining = gens
                .iter()
                .map(|g| eval_polynomial_expr(&ambient, g))
                .collect::<Result<Vec<_>>>()?;
            Ok(Value::Ring(RingSpec::new(ambient, defining)?))
        }
        ExprKind::List(items) => {
            let values = items
                .iter()
                .map(|e| eval(env, e, trace))
                .collect::<Result<Vec<_>>>()?;
            Ok(Value::List(values))
        }
        ExprKind::Neg(inner) => match eval(env, inner, trace)? {
            Value::Poly(p) => Ok(Value::Poly(p.neg())),
            Value::Int(n) => {
                let ring = env.require_ring()?;
                Ok(Value::Poly(Polynomial::constant(ring.ambient(), n).neg()))
            }
            other => Err(Error::ValueType(format!("cannot negate a {}", other.type_name()))),
        },
        ExprKind::Add(a, b) => {
            let lhs = eval(env, a, trace)?;
            let rhs = eval(env, b, trace)?;
            match (&lhs, &rhs) {
                (Value::Int(x), Value::Int(y)) => Ok(Value::Int(x + y)),
                (Value::Ideal(_), _) | (_, Value::Ideal(_)) => {
                    let li = as_ideal(lhs, env)?;
                    let ri = as_ideal(rhs, env)?;
                    Ok(Value::Ideal(li.plus(&ri)?))
                }
                _ => Ok(Value::Poly(as_poly(lhs, env)?.add(&as_poly(rhs, env)?)?)),
            }
        }
        ExprKind::Sub(a, b) => {
            let lhs = eval(env, a, trace)?;
            let rhs = eval(env, b, trace)?;
            match (&lhs, &rhs) {
                (Value::Int(x), Value::Int(y)) if x >= y => Ok(Value::Int(x - y)),
                _ => Ok(Value::Poly(as_poly(lhs, env)?.sub(&as_poly(rhs, env)?)?)),
            }
        }
        ExprKind::Mul(a, b) => {
            let lhs = eval(env, a, trace)?;
            let rhs = eval(env, b, trace)?;
            match (&lhs, &rhs) {
                (Value::Int(x), Value::Int(y)) => Ok(Value::Int(x * y)),
                (Value::Ideal(_), Value::Ideal(_)) => {
                    let li = as_ideal(lhs, env)?;
                    let ri = as_ideal(rhs, env)?;
                    Ok(Value::Ideal(li.times(&ri)?))
                }
                _ => Ok(Value::Poly(as_poly(lhs, env)?.mul(&as_poly(rhs, env)?)?)),
            }
        }
        ExprKind::Pow(base, exp) => match eval(env, base, trace)? {
            Value::Poly(p) => Ok(Value::Poly(p.pow(*exp)?)),
            Value::Int(n) => Ok(Value::Int(n.pow(u32::try_from(*exp).map_err(|_| Error::ExponentOverflow)?))),
            Value::Ideal(i) => Ok(Value::Ideal(i.power(u32::try_from(*exp).map_err(|_| Error::ExponentOverflow)?)?)),
            other => Err(Error::ValueType(format!("cannot raise a {}", other.type_name()))),
        },
        ExprKind::Call { name, args } => eval_call(env, name, args, expr, trace),
    }
}

fn arity(args: &[Expr], want: std::ops::RangeInclusive<usize>, name: &str) -> Result<()> {
    if want.contains(&args.len()) {
        Ok(())
    } else {
        Err(Error::ValueType(format!(
            "{name} takes {}..{} arguments, got {}",
            want.start(),
            want.end(),
            args.len()
        )))
    }
}

fn eval_call(
    env: &mut Env,
    name: &str,
    args: &[Expr],
    expr: &Expr,
    trace: &mut Vec<TraceEntry>,
) -> Result<Value> {
    let mut values: Vec<Value> = Vec::with_capacity(args.len());
    for a in args {
        values.push(eval(env, a, trace)?);
    }
    let warn = |trace: &mut Vec<TraceEntry>, text: String| {
        trace.push(TraceEntry { line: expr.line, col: expr.col, kind: TraceKind::Warning, text });
    };
    match name {
        "print" => {
            arity(args, 1..=1, "print")?;
            Ok(values.pop().unwrap())
        }
        "gb" => {
            arity(args, 1..=1, "gb")?;
            let i = as_ideal(values.pop().unwrap(), env)?;
            Ok(Value::Ideal(i.canonicalize()?))
        }
        "nf" => {
            arity(args, 2..=2, "nf")?;
            let i = as_ideal(values.pop().unwrap(), env)?;
            let f = as_poly(values.pop().unwrap(), env)?;
            let basis = i.groebner_basis(MonomialOrder::GrevLex)?;
            Ok(Value::Poly(normal_form(&f, &basis)?))
        }
        "member" => {
            arity(args, 2..=2, "member")?;
            let i = as_ideal(values.pop().unwrap(), env)?;
            let f = as_poly(values.pop().unwrap(), env)?;
            Ok(Value::Bool(i.contains(&f)?))
        }
        "colon" => {
            arity(args, 2..=2, "colon")?;
            let j = as_ideal(values.pop().unwrap(), env)?;
            let i = as_ideal(values.pop().unwrap(), env)?;
            if j.is_zero_ideal()? {
                warn(trace, "colon by the zero ideal: returning the unit ideal".into());
            }
            Ok(Value::Ideal(i.colon(&j)?))
        }
        "intersect" => {
            arity(args, 2..=2, "intersect")?;
            let j = as_ideal(values.pop().unwrap(), env)?;
            let i = as_ideal(values.pop().unwrap(), env)?;
            Ok(Value::Ideal(i.intersect(&j)?))
        }
        "eliminate" => {
            arity(args, 2..=2, "eliminate")?;
            let k = as_int(values.pop().unwrap())?;
            let i = as_ideal(values.pop().unwrap(), env)?;
            Ok(Value::Ideal(i.eliminate(k as usize)?))
        }
        "bracket" => {
            arity(args, 2..=2, "bracket")?;
            let q = as_int(values.pop().unwrap())?;
            let i = as_ideal(values.pop().unwrap(), env)?;
            Ok(Value::Ideal(bracket_power(&i, q)?))
        }
        "tc" => {
            arity(args, 1..=1, "tc")?;
            let i = as_ideal(values.pop().unwrap(), env)?;
            let ring = env.require_ring()?;
            Ok(Value::Ideal(tight_closure_sr(&i, &ring)?))
        }
        "tcmember" => {
            arity(args, 2..=4, "tcmember")?;
            let ring = env.require_ring()?;
            match values.len() {
                2 => {
                    let i = as_ideal(values.pop().unwrap(), env)?;
                    let f = as_poly(values.pop().unwrap(), env)?;
                    Ok(Value::Verdict(tc_membership_sr(&f, &i, &ring)?))
                }
                4 => {
                    let e_max = as_int(values.pop().unwrap())? as u32;
                    let c = as_poly(values.pop().unwrap(), env)?;
                    let i = as_ideal(values.pop().unwrap(), env)?;
                    let f = as_poly(values.pop().unwrap(), env)?;
                    Ok(Value::Verdict(tc_membership_bounded(&f, &i, &ring, &c, e_max)?))
                }
                _ => Err(Error::ValueType("tcmember takes 2 or 4 arguments".into())),
            }
        }
        "testideal" => {
            arity(args, 1..=1, "testideal")?;
            let ring = match values.pop().unwrap() {
                Value::Ring(r) => r,
                other => return Err(Error::ValueType(format!("expected a ring, found {}", other.type_name()))),
            };
            Ok(Value::Ideal(test_ideal_sr(&ring)?))
        }
        "partestideal" => {
            arity(args, 3..=3, "partestideal")?;
            let t_max = as_int(values.pop().unwrap())? as u32;
            let sop = match values.pop().unwrap() {
                Value::List(items) => items
                    .into_iter()
                    .map(|v| as_poly(v, env))
                    .collect::<Result<Vec<_>>>()?,
                Value::Poly(p) => vec![p],
                other => return Err(Error::ValueType(format!("expected parameters, found {}", other.type_name()))),
            };
            let ring = match values.pop().unwrap() {
                Value::Ring(r) => r,
                other => return Err(Error::ValueType(format!("expected a ring, found {}", other.type_name()))),
            };
            let result = parameter_test_ideal(&ring, &sop, t_max)?;
            if !result.eliminated.is_empty() {
                let parts: Vec<String> = result
                    .eliminated
                    .iter()
                    .map(|w| format!("{} (outside the colon at t = {})", w.element, w.excluded_at_t))
                    .collect();
                warn(trace, format!("transient generators eliminated: {}", parts.join(", ")));
            }
            warn(
                trace,
                format!(
                    "colon route over t <= {}: stabilized = {}",
                    result.t_max, result.stabilized
                ),
            );
            Ok(Value::Ideal(result.ideal))
        }
        "sop" => {
            arity(args, 1..=usize::MAX, "sop")?;
            let ring = env.require_ring()?;
            let polys = values
                .into_iter()
                .map(|v| as_poly(v, env))
                .collect::<Result<Vec<_>>>()?;
            Ok(Value::Sop(Arc::new(SopData::new(ring, polys)?)))
        }
        "lcclass" => {
            arity(args, 3..=3, "lcclass")?;
            let sop = as_sop(values.pop().unwrap())?;
            let t = as_int(values.pop().unwrap())? as u32;
            let r = as_poly(values.pop().unwrap(), env)?;
            Ok(Value::Class(make_class(&r, t, &sop)?))
        }
        "frob" => {
            arity(args, 1..=1, "frob")?;
            let c = as_class(values.pop().unwrap())?;
            Ok(Value::Class(frobenius_class(&c)?))
        }
        "annihilates" => {
            arity(args, 2..=2, "annihilates")?;
            let c = as_class(values.pop().unwrap())?;
            let i = as_ideal(values.pop().unwrap(), env)?;
            Ok(Value::Bool(annihilates(&i, &c)?))
        }
        "strongcheck" => {
            arity(args, 2..=2, "strongcheck")?;
            let family = match values.pop().unwrap() {
                Value::List(items) => items
                    .into_iter()
                    .map(|v| as_ideal(v, env))
                    .collect::<Result<Vec<_>>>()?,
                single => vec![as_ideal(single, env)?],
            };
            let t = as_ideal(values.pop().unwrap(), env)?;
            let ring = env.require_ring()?;
            let report = check_strong_property(&t, &family, &ring)?;
            Ok(Value::Report(report.to_string()))
        }
        "idcert" => {
            arity(args, 3..=3, "idcert")?;
            let t = as_ideal(values.pop().unwrap(), env)?;
            let i = as_ideal(values.pop().unwrap(), env)?;
            let x = as_poly(values.pop().unwrap(), env)?;
            let ring = env.require_ring()?;
            Ok(Value::Report(integral_cert_summary(&x, &i, &t, &ring)?))
        }
        "reproduce" => {
            arity(args, 1..=1, "reproduce")?;
            let p = as_int(values.pop().unwrap())?;
            let outcome = super::reproduce::run_reproduction(p)?;
            for record in &outcome.records {
                trace.push(TraceEntry {
                    line: expr.line,
                    col: expr.col,
                    kind: TraceKind::Audit,
                    text: record.to_json().to_string(),
                });
            }
            Ok(Value::Report(format!(
                "all {} assertions hold at p = {}",
                outcome.records.len(),
                outcome.prime
            )))
        }
        "save" => {
            arity(args, 1..=1, "save")?;
            let path = as_str(values.pop().unwrap())?;
            let (written, skipped) = super::session::save_session(env, std::path::Path::new(&path))?;
            for name in skipped {
                warn(trace, format!("binding `{name}` is not persistable; skipped"));
            }
            Ok(Value::Report(format!("saved {written} bindings to {path}")))
        }
        "load" => {
            arity(args, 1..=1, "load")?;
            let path = as_str(values.pop().unwrap())?;
            let loaded = super::session::load_session(std::path::Path::new(&path))?;
            let count = loaded.bindings.len();
            if let Some(cfg) = loaded.config {
                let merged = apply_unmasked(Config::global(), cfg, env.config_mask);
                Config::set_global(merged);
            }
            env.replace_bindings(loaded.bindings);
            Ok(Value::Report(format!("loaded {count} bindings from {path}")))
        }
        other => Err(Error::ValueType(format!("unknown command `{other}`"))),
    }
}

fn apply_unmasked(current: Config, session: Config, mask: ConfigMask) -> Config {
    Config {
        prime_cap: if mask.prime_cap { current.prime_cap } else { session.prime_cap },
        e_max: if mask.e_max { current.e_max } else { session.e_max },
        q_cap: if mask.q_cap { current.q_cap } else { session.q_cap },
        level_cap: if mask.level_cap { current.level_cap } else { session.level_cap },
        gb_max_basis: if mask.gb_max_basis { current.gb_max_basis } else { session.gb_max_basis },
        gb_max_reductions: if mask.gb_max_reductions {
            current.gb_max_reductions
        } else {
            session.gb_max_reductions
        },
    }
}

fn coerce_binding(kind: BindKind, value: Value, env: &Env) -> Result<Value> {
    match kind {
        BindKind::Ring => match value {
            Value::Ring(r) => Ok(Value::Ring(r)),
            other => Err(Error::ValueType(format!("`ring` binds a ring, found {}", other.type_name()))),
        },
        BindKind::Ideal => Ok(Value::Ideal(as_ideal(value, env)?)),
        BindKind::Poly => Ok(Value::Poly(as_poly(value, env)?)),
        BindKind::Class => match value {
            Value::Class(c) => Ok(Value::Class(c)),
            other => Err(Error::ValueType(format!("`class` binds a class, found {}", other.type_name()))),
        },
    }
}

/// Execute a parsed program in order. Each command's result becomes a trace
/// line in canonical form; errors are recorded with the statement's source
/// location and execution continues with the next statement.
pub fn execute_command(program: &Program, env: &mut Env) -> ExecOutcome {
    let mut outcome = ExecOutcome::default();
    for stmt in &program.stmts {
        let mut local: Vec<TraceEntry> = Vec::new();
        let result = match &stmt.kind {
            StmtKind::Bind { kind, name, expr } => {
                eval(env, expr, &mut local).and_then(|v| {
                    let v = coerce_binding(*kind, v, env)?;
                    let mut shadows_var = false;
                    if let Some(ring) = env.current_ring() {
                        shadows_var = ring.ambient().var_index(name).is_some();
                    }
                    if env.bind(name.clone(), v) || shadows_var {
                        local.push(TraceEntry {
                            line: stmt.line,
                            col: stmt.col,
                            kind: TraceKind::Warning,
                            text: format!("binding `{name}` shadows an earlier name"),
                        });
                    }
                    Ok(None)
                })
            }
            StmtKind::Command(expr) => eval(env, expr, &mut local).map(Some),
        };
        outcome.trace.append(&mut local);
        match result {
            Ok(Some(value)) => {
                if !matches!(value, Value::Unit) {
                    outcome.trace.push(TraceEntry {
                        line: stmt.line,
                        col: stmt.col,
                        kind: TraceKind::Result,
                        text: value.to_string(),
                    });
                }
            }
            Ok(None) => {}
            Err(e) => {
                if e.is_budget() {
                    outcome.budget_errors += 1;
                }
                outcome.errors += 1;
                outcome.trace.push(TraceEntry {
                    line: stmt.line,
                    col: stmt.col,
                    kind: TraceKind::Error,
                    text: e.to_string(),
                });
            }
        }
    }
    outcome
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parser::parse_program;

    fn run(source: &str) -> (Env, ExecOutcome) {
        let program = parse_program(source).unwrap();
        let mut env = Env::new();
        let outcome = execute_command(&program, &mut env);
        (env, outcome)
    }

    fn results(outcome: &ExecOutcome) -> Vec<String> {
        outcome
            .trace
            .iter()
            .filter(|t| t.kind == TraceKind::Result)
            .map(|t| t.text.clone())
            .collect()
    }

    #[test]
    fn test_ideal_session() {
        let (_, out) = run(
            "ring R = Fp(3)[x,y,z,w] / (x*y, y*z, z*w);\n\
             ideal T = testideal(R);\n\
             print T;\n",
        );
        assert_eq!(out.errors, 0);
        assert_eq!(results(&out), vec!["(y, z, x*w)"]);
    }

    #[test]
    fn bracket_membership_at_two() {
        let (_, out) = run(
            "ring R = Fp(2)[x,y,z,w] / (x*y, y*z, z*w);\n\
             ideal SR = (x*y, y*z, z*w);\n\
             ideal I = (x-w, x-y-z);\n\
             member((x*w)^2, bracket(I, 2) + SR);\n",
        );
        assert_eq!(out.errors, 0, "{:?}", out.trace);
        assert_eq!(results(&out), vec!["true"]);
    }

    #[test]
    fn colon_command() {
        let (_, out) = run(
            "ring R = Fp(5)[x,y];\n\
             colon((x^2, x*y), (x));\n",
        );
        assert_eq!(out.errors, 0);
        assert_eq!(results(&out), vec!["(x, y)"]);
    }

    #[test]
    fn strongcheck_prints_a_table() {
        let (_, out) = run(
            "ring R = Fp(2)[x,y,z,w] / (x*y, y*z, z*w);\n\
             ideal T = testideal(R);\n\
             ideal I1 = (x-w, x-y-z);\n\
             strongcheck(T, (I1));\n",
        );
        assert_eq!(out.errors, 0, "{:?}", out.trace);
        let r = results(&out);
        assert_eq!(r.len(), 1);
        assert!(r[0].contains("all_equal = true"), "{}", r[0]);
    }

    #[test]
    fn runtime_errors_carry_location_and_execution_continues() {
        let (_, out) = run(
            "ring R = Fp(5)[x,y];\n\
             member(q, (x));\n\
             member(x, (x));\n",
        );
        assert_eq!(out.errors, 1);
        let err = out.trace.iter().find(|t| t.kind == TraceKind::Error).unwrap();
        assert_eq!(err.line, 2);
        assert!(err.text.contains("q"));
        assert_eq!(results(&out), vec!["true"]);
    }

    #[test]
    fn shadowing_warns() {
        let (_, out) = run(
            "ring R = Fp(5)[x,y];\n\
             poly f = x;\n\
             poly f = y;\n",
        );
        assert_eq!(out.errors, 0);
        assert!(out
            .trace
            .iter()
            .any(|t| t.kind == TraceKind::Warning && t.text.contains("shadows")));
    }

    #[test]
    fn classes_through_the_dsl() {
        let (_, out) = run(
            "ring R = Fp(3)[x,y,z,w] / (x*y, y*z, z*w);\n\
             ideal T = testideal(R);\n\
             class eta = lcclass((x*w)^2, 3, sop(x-w, x-y-z));\n\
             annihilates(T, eta);\n\
             annihilates(T, frob(eta));\n",
        );
        assert_eq!(out.errors, 0, "{:?}", out.trace);
        assert_eq!(results(&out), vec!["true", "false"]);
    }

    #[test]
    fn deterministic_trace() {
        let src = "ring R = Fp(3)[x,y,z,w] / (x*y, y*z, z*w);\n\
                   ideal T = testideal(R);\n\
                   print T;\n\
                   partestideal(R, (x-w, x-y-z), 2);\n";
        let (_, a) = run(src);
        let (_, b) = run(src);
        let fmt = |o: &ExecOutcome| {
            o.trace
                .iter()
                .map(|t| format!("{}:{} {:?} {}", t.line, t.col, t.kind, t.text))
                .collect::<Vec<_>>()
                .join("\n")
        };
        assert_eq!(fmt(&a), fmt(&b));
        assert_eq!(a.errors, 0);
    }
}
