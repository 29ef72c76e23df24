//! Set-expression language, evaluator, REPL and script runner for `hfset`.

pub mod command;
pub mod driver;
pub mod session;
pub mod syntax;

pub use command::{parse_command, Command};
pub use driver::{repl, run_script, Format};
pub use session::{Config, EvalError, Outcome, Session, Status};
pub use syntax::{parse_expr, serialize_expr, Expr, Op, ParseError};
