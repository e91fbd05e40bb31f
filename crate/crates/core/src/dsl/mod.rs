//! The ideal-expression language and its batch/REPL executor.
//!
//! Statements either bind a name (`ring R = ...;`, `ideal I = ...;`,
//! `poly f = ...;`, `class c = ...;`) or invoke a command
//! (`member(f, I);`, `print T;`). Polynomial literals use the canonical
//! text syntax that [`crate::poly::Polynomial`] prints. Sessions persist to
//! versioned JSON and the audit log is line-oriented JSON.

mod exec;
mod lexer;
mod parser;
mod reproduce;
mod session;

pub use exec::{execute_command, ConfigMask, Env, ExecOutcome, TraceEntry, TraceKind, Value};
pub use parser::{parse_polynomial, parse_program, BindKind, Expr, ExprKind, Program, Stmt, StmtKind};
pub use reproduce::{run_reproduction, ReproduceOutcome, SUPPORTED_PRIMES};
pub use session::{load_session, save_session, LoadedSession};
