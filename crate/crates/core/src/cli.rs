//! The `stpalg` command line.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::equivalence::{
    bd, class_gcd, class_lcm, equivalent_tol, pr, root_of_tol, Side,
};
use crate::error::{Error, Result};
use crate::invariant::{
    a_sequence_dims, invariant_dims_up_to, min_annihilator, realization, spectrum, SequenceStatus,
    VectorKind,
};
use crate::kernel::funcs::{apply, MatFn};
use crate::kernel::products::gen_frobenius_block_ip;
use crate::kernel::scalar::{Field, Scalar};
use crate::kernel::stp::{sta_left, sta_right, stp_left, stp_right, swap_matrix};
use crate::lie::{bracket, killing_form, subalgebra_membership};
use crate::matrix::Matrix;
use crate::permgrp::{perm_stp, Perm};
use crate::poly::Poly;
use crate::quotient::{
    char_poly, delta_ip, dist, gen_weighted_ip, leaf_char_poly, min_poly, norm,
    project_to_truncation, tr_mod, truncation_residual, weighted_ip,
};
use crate::text::{
    format_complex, format_f64, format_matrix, format_rational, matrix_json, parse_matrix_with,
    poly_json, spectrum_json,
};
use crate::vectors::{vadd_side, vec_equivalent, vec_root, vprod, vprod_right};
use crate::{try_map_matrix, try_zip_matrix};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FuncArg {
    Exp,
    Log,
    Sin,
    Cos,
}

impl From<FuncArg> for MatFn {
    fn from(f: FuncArg) -> MatFn {
        match f {
            FuncArg::Exp => MatFn::Exp,
            FuncArg::Log => MatFn::Log,
            FuncArg::Sin => MatFn::Sin,
            FuncArg::Cos => MatFn::Cos,
        }
    }
}

/// Dimension-free matrix algebra on matrix files ("-" reads stdin).
#[derive(Debug, Parser)]
#[command(name = "stpalg", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Which equivalence to use.
    #[arg(long, global = true, value_enum, default_value = "left")]
    side: SideArg,
    /// Absolute tolerance for float comparisons.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,
    /// Print JSON instead of the matrix text format.
    #[arg(long, global = true)]
    json: bool,
    /// Require exact rational input.
    #[arg(long, global = true)]
    exact: bool,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Left semi-tensor product.
    Stp { a: PathBuf, b: PathBuf },
    /// Right semi-tensor product.
    Rstp { a: PathBuf, b: PathBuf },
    /// Semi-tensor addition (per --side).
    Sta { a: PathBuf, b: PathBuf },
    /// Vector addition of two columns.
    Vadd { x: PathBuf, y: PathBuf },
    /// Vector product of a matrix with a column (per --side).
    Vprod { a: PathBuf, x: PathBuf },
    /// Kronecker product.
    Kron { a: PathBuf, b: PathBuf },
    /// Swap matrix W[m,n].
    Swap { m: usize, n: usize },
    /// Whether two matrices are equivalent.
    Equiv { a: PathBuf, b: PathBuf },
    /// Irreducible root of a matrix.
    Root { a: PathBuf },
    /// Greatest common divisor of two equivalent matrices.
    Gcd { a: PathBuf, b: PathBuf },
    /// Least common multiple of two equivalent matrices.
    Lcm { a: PathBuf, b: PathBuf },
    /// Embedding a ⊗ I_k.
    Bd {
        a: PathBuf,
        #[arg(long = "k", visible_alias = "alpha")]
        k: usize,
    },
    /// Block-diagonal-average projection.
    Pr {
        a: PathBuf,
        #[arg(long = "k", visible_alias = "alpha")]
        k: usize,
    },
    /// Weighted inner product.
    Wip { a: PathBuf, b: PathBuf },
    /// Generalized Frobenius block inner product.
    Blockip { a: PathBuf, b: PathBuf },
    /// Generalized weighted inner product, or the δ-inner product with --delta.
    Gwip {
        a: PathBuf,
        b: PathBuf,
        /// Block ratio as "y/x".
        #[arg(long)]
        delta: Option<String>,
    },
    /// Weighted norm.
    Norm { a: PathBuf },
    /// Weighted distance.
    Dist { a: PathBuf, b: PathBuf },
    /// Best approximation at leaf --alpha.
    Project {
        a: PathBuf,
        #[arg(long = "alpha", visible_alias = "k")]
        alpha: usize,
        /// Also report the weighted product of the residual with the projection.
        #[arg(long)]
        residual: bool,
    },
    /// Modified determinant det^(1/n).
    Dt { a: PathBuf },
    /// Modified trace tr/n.
    Trmod { a: PathBuf },
    /// Characteristic polynomial of the class (coefficients ascending).
    Charpoly {
        a: PathBuf,
        /// Use the member root ⊗ I_k instead of the root.
        #[arg(long)]
        leaf: Option<usize>,
    },
    /// Minimal polynomial of the class root.
    Minpoly { a: PathBuf },
    /// Matrix function of a square matrix.
    Expm {
        a: PathBuf,
        #[arg(long = "fn", value_enum, default_value = "exp")]
        func: FuncArg,
    },
    /// Lie bracket of two square classes (root).
    Bracket { a: PathBuf, b: PathBuf },
    /// Killing form.
    Killing { a: PathBuf, b: PathBuf },
    /// Sub-algebra membership flags.
    Subalg { a: PathBuf },
    /// Vector root.
    Vroot { x: PathBuf },
    /// Whether two columns are vector equivalent.
    Vequiv { x: PathBuf, y: PathBuf },
    /// Invariant dimensions up to --t.
    Invdims {
        a: PathBuf,
        #[arg(long)]
        t: usize,
    },
    /// Realization on the invariant stratum of dimension --t.
    Realize {
        a: PathBuf,
        #[arg(long)]
        t: usize,
    },
    /// Spectrum on the invariant stratum of dimension --t.
    Eig {
        a: PathBuf,
        #[arg(long)]
        t: usize,
        /// Also print eigenvectors.
        #[arg(long)]
        vectors: bool,
    },
    /// Dimensions of the A-sequence of a column.
    Aseq {
        a: PathBuf,
        x: PathBuf,
        #[arg(long, default_value_t = 1000)]
        max_steps: usize,
    },
    /// Minimal annihilator polynomial of a column.
    Annihilator {
        a: PathBuf,
        x: PathBuf,
        #[arg(long, default_value_t = 1000)]
        max_steps: usize,
    },
    /// Semi-tensor product of two permutations given as image lists.
    Pstp {
        s: String,
        l: String,
        /// Images are 0-based.
        #[arg(long)]
        zero_based: bool,
    },
}

enum Output {
    Matrix(Matrix),
    Scalar(Scalar),
    Float(f64),
    Bool(bool),
    Poly(Poly),
    Custom { text: String, json: Value },
}

fn scalar_text(s: &Scalar) -> String {
    match s {
        Scalar::Rational(q) => format_rational(q),
        Scalar::Complex(z) => format_complex(*z),
    }
}

fn poly_text(p: &Poly) -> String {
    p.coeff_strings().join(" ")
}

impl Output {
    fn render(&self, as_json: bool) -> String {
        if as_json {
            let v = match self {
                Output::Matrix(m) => matrix_json(m),
                Output::Scalar(s) => json!({ "value": scalar_text(s) }),
                Output::Float(x) => json!({ "value": x }),
                Output::Bool(b) => json!({ "value": b }),
                Output::Poly(p) => poly_json(p),
                Output::Custom { json, .. } => json.clone(),
            };
            return v.to_string();
        }
        match self {
            Output::Matrix(m) => format_matrix(m),
            Output::Scalar(s) => scalar_text(s),
            Output::Float(x) => format_f64(*x),
            Output::Bool(b) => b.to_string(),
            Output::Poly(p) => poly_text(p),
            Output::Custom { text, .. } => text.clone(),
        }
    }
}

struct Ctx {
    side: Side,
    tol: f64,
    exact: bool,
}

impl Ctx {
    fn load(&self, path: &Path) -> Result<Matrix> {
        let mut text = String::new();
        let res = if path == Path::new("-") {
            std::io::stdin().read_to_string(&mut text).map(|_| ())
        } else {
            std::fs::read_to_string(path).map(|t| text = t)
        };
        res.map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
        parse_matrix_with(&text, self.exact)
    }

    fn load_pair(&self, a: &Path, b: &Path) -> Result<(Matrix, Matrix)> {
        Ok(Matrix::unify(self.load(a)?, self.load(b)?))
    }
}

fn scalar_of<T: Field>(x: T) -> Scalar {
    x.into_scalar()
}

fn parse_perm(s: &str, zero_based: bool) -> Result<Perm> {
    let images: std::result::Result<Vec<usize>, _> = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(str::parse::<usize>)
        .collect();
    let images = images.map_err(|e| Error::InvalidArgument(format!("bad permutation '{s}': {e}")))?;
    if zero_based {
        Perm::from_zero_based(&images)
    } else {
        Perm::new(images)
    }
}

fn parse_ratio(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::InvalidArgument(format!("bad ratio '{s}', expected y/x"));
    let (y, x) = s.split_once('/').ok_or_else(bad)?;
    Ok((y.trim().parse().map_err(|_| bad())?, x.trim().parse().map_err(|_| bad())?))
}

fn sequence_output(dims: &[usize], status: SequenceStatus) -> Output {
    let dims_text = dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ");
    let (status_text, status_json) = match status {
        SequenceStatus::Entered { t, k } => (
            format!("entered {t} {k}"),
            json!({ "status": "entered", "t": t, "k": k }),
        ),
        SequenceStatus::Diverging => ("diverging".to_string(), json!({ "status": "diverging" })),
        SequenceStatus::StepLimit => ("step-limit".to_string(), json!({ "status": "step-limit" })),
    };
    let mut obj = status_json;
    obj["dims"] = json!(dims);
    Output::Custom {
        text: format!("{dims_text}\n{status_text}"),
        json: obj,
    }
}

fn execute(cmd: &Cmd, ctx: &Ctx) -> Result<Output> {
    let side = ctx.side;
    let tol = ctx.tol;
    Ok(match cmd {
        Cmd::Stp { a, b } => {
            let (a, b) = ctx.load_pair(a, b)?;
            Output::Matrix(try_zip_matrix!(&a, &b, |x, y| Ok::<_, Error>(stp_left(x, y)))?)
        }
        Cmd::Rstp { a, b } => {
            let (a, b) = ctx.load_pair(a, b)?;
            Output::Matrix(try_zip_matrix!(&a, &b, |x, y| Ok::<_, Error>(stp_right(x, y)))?)
        }
        Cmd::Sta { a, b } => {
            let (a, b) = ctx.load_pair(a, b)?;
            Output::Matrix(match side {
                Side::Left => try_zip_matrix!(&a, &b, |x, y| sta_left(x, y))?,
                Side::Right => try_zip_matrix!(&a, &b, |x, y| sta_right(x, y))?,
            })
        }
        Cmd::Vadd { x, y } => {
            let (x, y) = ctx.load_pair(x, y)?;
            Output::Matrix(try_zip_matrix!(&x, &y, |p, q| vadd_side(p, q, side))?)
        }
        Cmd::Vprod { a, x } => {
            let (a, x) = ctx.load_pair(a, x)?;
            Output::Matrix(match side {
                Side::Left => try_zip_matrix!(&a, &x, |p, q| vprod(p, q))?,
                Side::Right => try_zip_matrix!(&a, &x, |p, q| vprod_right(p, q))?,
            })
        }
        Cmd::Kron { a, b } => {
            let (a, b) = ctx.load_pair(a, b)?;
            Output::Matrix(try_zip_matrix!(&a, &b, |x, y| Ok::<_, Error>(x.kron(y)))?)
        }
        Cmd::Swap { m, n } => {
            if *m == 0 || *n == 0 {
                return Err(Error::InvalidArgument("swap dimensions must be positive".into()));
            }
            Output::Matrix(Matrix::Rational(swap_matrix(*m, *n)))
        }
        Cmd::Equiv { a, b } => {
            let (a, b) = ctx.load_pair(a, b)?;
            let eq = match Matrix::pair(&a, &b)? {
                crate::matrix::Pair::Rational(x, y) => equivalent_tol(x, y, side, tol),
                crate::matrix::Pair::Complex(x, y) => equivalent_tol(x, y, side, tol),
            };
            Output::Bool(eq)
        }
        Cmd::Root { a } => {
            let a = ctx.load(a)?;
            Output::Matrix(try_map_matrix!(&a, x => Ok::<_, Error>(
                root_of_tol(x, side, tol).into_root()
            ))?)
        }
        Cmd::Gcd { a, b } => {
            let (a, b) = ctx.load_pair(a, b)?;
            Output::Matrix(try_zip_matrix!(&a, &b, |x, y| class_gcd(x, y, side))?)
        }
        Cmd::Lcm { a, b } => {
            let (a, b) = ctx.load_pair(a, b)?;
            Output::Matrix(try_zip_matrix!(&a, &b, |x, y| class_lcm(x, y, side))?)
        }
        Cmd::Bd { a, k } => {
            if *k == 0 {
                return Err(Error::InvalidArgument("k must be positive".into()));
            }
            let a = ctx.load(a)?;
            Output::Matrix(try_map_matrix!(&a, x => Ok::<_, Error>(bd(x, *k)))?)
        }
        Cmd::Pr { a, k } => {
            let a = ctx.load(a)?;
            Output::Matrix(try_map_matrix!(&a, x => pr(x, *k))?)
        }
        Cmd::Wip { a, b } => {
            let (a, b) = ctx.load_pair(a, b)?;
            Output::Scalar(match Matrix::pair(&a, &b)? {
                crate::matrix::Pair::Rational(x, y) => scalar_of(weighted_ip(x, y)?),
                crate::matrix::Pair::Complex(x, y) => scalar_of(weighted_ip(x, y)?),
            })
        }
        Cmd::Blockip { a, b } => {
            let (a, b) = ctx.load_pair(a, b)?;
            Output::Matrix(try_zip_matrix!(&a, &b, |x, y| Ok::<_, Error>(
                gen_frobenius_block_ip(x, y)
            ))?)
        }
        Cmd::Gwip { a, b, delta } => {
            let (a, b) = ctx.load_pair(a, b)?;
            Output::Matrix(match delta {
                Some(d) => {
                    let d = parse_ratio(d)?;
                    try_zip_matrix!(&a, &b, |x, y| delta_ip(x, y, d))?
                }
                None => try_zip_matrix!(&a, &b, |x, y| gen_weighted_ip(x, y))?,
            })
        }
        Cmd::Norm { a } => {
            let a = ctx.load(a)?;
            Output::Float(match &a {
                Matrix::Rational(x) => norm(x),
                Matrix::Complex(x) => norm(x),
            })
        }
        Cmd::Dist { a, b } => {
            let (a, b) = ctx.load_pair(a, b)?;
            Output::Float(match Matrix::pair(&a, &b)? {
                crate::matrix::Pair::Rational(x, y) => dist(x, y)?,
                crate::matrix::Pair::Complex(x, y) => dist(x, y)?,
            })
        }
        Cmd::Project { a, alpha, residual } => {
            let a = ctx.load(a)?;
            let p = try_map_matrix!(&a, x => project_to_truncation(x, *alpha))?;
            if !*residual {
                return Ok(Output::Matrix(p));
            }
            let ip = match &a {
                Matrix::Rational(x) => {
                    let (p, e) = truncation_residual(x, *alpha)?;
                    let k = e.rows() / p.rows();
                    scalar_of(weighted_ip(&e, &p.kron_identity(k))?)
                }
                Matrix::Complex(x) => {
                    let (p, e) = truncation_residual(x, *alpha)?;
                    let k = e.rows() / p.rows();
                    scalar_of(weighted_ip(&e, &p.kron_identity(k))?)
                }
            };
            Output::Custom {
                text: format!("{}\n# residual_ip: {}", format_matrix(&p), scalar_text(&ip)),
                json: json!({ "projection": matrix_json(&p), "residual_ip": scalar_text(&ip) }),
            }
        }
        Cmd::Dt { a } => {
            let a = ctx.load(a)?;
            let d = match &a {
                Matrix::Rational(x) => crate::quotient::dt(x)?,
                Matrix::Complex(x) => crate::quotient::dt(x)?,
            };
            Output::Scalar(Scalar::Complex(d))
        }
        Cmd::Trmod { a } => {
            let a = ctx.load(a)?;
            Output::Scalar(match &a {
                Matrix::Rational(x) => scalar_of(tr_mod(x)?),
                Matrix::Complex(x) => scalar_of(tr_mod(x)?),
            })
        }
        Cmd::Charpoly { a, leaf } => {
            let a = ctx.load(a)?;
            let class = root_of_tol(a.as_rational()?, side, tol);
            Output::Poly(match leaf {
                Some(k) => leaf_char_poly(&class, *k)?,
                None => char_poly(&class)?,
            })
        }
        Cmd::Minpoly { a } => {
            let a = ctx.load(a)?;
            Output::Poly(min_poly(&root_of_tol(a.as_rational()?, side, tol))?)
        }
        Cmd::Expm { a, func } => {
            let a = ctx.load(a)?;
            let f = MatFn::from(*func);
            Output::Matrix(Matrix::Complex(match &a {
                Matrix::Rational(x) => apply(f, x)?,
                Matrix::Complex(x) => apply(f, x)?,
            }))
        }
        Cmd::Bracket { a, b } => {
            let (a, b) = ctx.load_pair(a, b)?;
            Output::Matrix(try_zip_matrix!(&a, &b, |x, y| bracket(
                &root_of_tol(x, side, tol),
                &root_of_tol(y, side, tol)
            )
            .map(|c| c.into_root()))?)
        }
        Cmd::Killing { a, b } => {
            let (a, b) = ctx.load_pair(a, b)?;
            Output::Scalar(match Matrix::pair(&a, &b)? {
                crate::matrix::Pair::Rational(x, y) => scalar_of(killing_form(
                    &root_of_tol(x, side, tol),
                    &root_of_tol(y, side, tol),
                )?),
                crate::matrix::Pair::Complex(x, y) => scalar_of(killing_form(
                    &root_of_tol(x, side, tol),
                    &root_of_tol(y, side, tol),
                )?),
            })
        }
        Cmd::Subalg { a } => {
            let a = ctx.load(a)?;
            let f = match &a {
                Matrix::Rational(x) => subalgebra_membership(&root_of_tol(x, side, tol), tol)?,
                Matrix::Complex(x) => subalgebra_membership(&root_of_tol(x, side, tol), tol)?,
            };
            let pairs = [
                ("in_o", f.in_o),
                ("in_sl", f.in_sl),
                ("in_t", f.in_t),
                ("in_n", f.in_n),
                ("in_d", f.in_d),
                ("in_sp", f.in_sp),
            ];
            Output::Custom {
                text: pairs
                    .iter()
                    .map(|(k, v)| format!("{k} {v}"))
                    .collect::<Vec<_>>()
                    .join("\n"),
                json: Value::Object(pairs.iter().map(|(k, v)| (k.to_string(), json!(v))).collect()),
            }
        }
        Cmd::Vroot { x } => {
            let x = ctx.load(x)?;
            Output::Matrix(try_map_matrix!(&x, v => vec_root(v, side).map(|c| c.root().clone()))?)
        }
        Cmd::Vequiv { x, y } => {
            let (x, y) = ctx.load_pair(x, y)?;
            Output::Bool(match Matrix::pair(&x, &y)? {
                crate::matrix::Pair::Rational(p, q) => vec_equivalent(p, q, side)?,
                crate::matrix::Pair::Complex(p, q) => vec_equivalent(p, q, side)?,
            })
        }
        Cmd::Invdims { a, t } => {
            let a = ctx.load(a)?;
            let shape = crate::equivalence::Shape::new(a.rows(), a.cols())?;
            let dims = invariant_dims_up_to(shape, *t);
            Output::Custom {
                text: dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" "),
                json: json!({ "dims": dims }),
            }
        }
        Cmd::Realize { a, t } => {
            let a = ctx.load(a)?;
            Output::Matrix(try_map_matrix!(&a, x => realization(x, *t))?)
        }
        Cmd::Eig { a, t, vectors } => {
            let a = ctx.load(a)?;
            let sp = match &a {
                Matrix::Rational(x) => spectrum(x, *t)?,
                Matrix::Complex(x) => spectrum(x, *t)?,
            };
            let mut text: Vec<String> = sp.eigenvalues.iter().map(|z| format_complex(*z)).collect();
            let mut js = spectrum_json(&sp.eigenvalues);
            if *vectors {
                let mut list = Vec::new();
                for e in &sp.eigenvectors {
                    let kind = match e.kind {
                        VectorKind::Proper => "proper",
                        VectorKind::Generalized => "generalized",
                    };
                    let entries: Vec<String> =
                        e.vector.data().iter().map(|z| format_complex(*z)).collect();
                    text.push(format!("# {} {kind}", format_complex(e.value)));
                    text.push(entries.join(" "));
                    list.push(json!({
                        "value": { "re": e.value.re, "im": e.value.im },
                        "kind": kind,
                        "residual": e.residual,
                        "entries": entries,
                    }));
                }
                js["eigenvectors"] = Value::Array(list);
            }
            Output::Custom {
                text: text.join("\n"),
                json: js,
            }
        }
        Cmd::Aseq { a, x, max_steps } => {
            let (a, x) = ctx.load_pair(a, x)?;
            let s = match Matrix::pair(&a, &x)? {
                crate::matrix::Pair::Rational(p, q) => a_sequence_dims(p, q, *max_steps)?,
                crate::matrix::Pair::Complex(p, q) => a_sequence_dims(p, q, *max_steps)?,
            };
            sequence_output(&s.dims, s.status)
        }
        Cmd::Annihilator { a, x, max_steps } => {
            let a = ctx.load(a)?;
            let x = ctx.load(x)?;
            let r = min_annihilator(a.as_rational()?, x.as_rational()?, *max_steps)?;
            let lower_text = r
                .lower_degree_relation
                .as_ref()
                .map_or("none".to_string(), poly_text);
            let text = [
                poly_text(&r.poly),
                format!("# poly: {}", r.poly),
                format!("# entry_step: {}", r.entry_step),
                format!("# invariant_dim: {}", r.invariant_dim),
                format!("# cofactor: {}", r.cofactor),
                format!("# lower_degree_relation: {lower_text}"),
            ]
            .join("\n");
            let json = json!({
                "coeffs": r.poly.coeff_strings(),
                "entry_step": r.entry_step,
                "invariant_dim": r.invariant_dim,
                "cofactor": r.cofactor.coeff_strings(),
                "lower_degree_relation": r.lower_degree_relation.as_ref().map(|p| p.coeff_strings()),
            });
            Output::Custom { text, json }
        }
        Cmd::Pstp { s, l, zero_based } => {
            let p = perm_stp(&parse_perm(s, *zero_based)?, &parse_perm(l, *zero_based)?);
            let shift = usize::from(*zero_based);
            let images: Vec<usize> = p.images().iter().map(|i| i - shift).collect();
            Output::Custom {
                text: images.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" "),
                json: json!({ "images": images }),
            }
        }
    })
}

/// Runs the command line and returns the process exit code: 0 on success,
/// 1 on a domain error, 2 on a usage or input error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = write!(err, "{}", e.render());
            if !e.use_stderr() {
                let _ = write!(out, "{}", e.render());
                let _ = err.flush();
                return 0;
            }
            return code;
        }
    };
    let ctx = Ctx {
        side: cli.side.into(),
        tol: cli.tol,
        exact: cli.exact,
    };
    match execute(&cli.cmd, &ctx) {
        Ok(output) => {
            let _ = writeln!(out, "{}", output.render(cli.json));
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error[{}]: {e}", e.code());
            if e.is_usage() {
                2
            } else {
                1
            }
        }
    }
}
