use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "heckeq",
    version,
    about = "Exact computations with the fundamental invariant of the Hecke algebra H_n(q)"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Rational value of q used wherever a specialization is needed.
    #[arg(long, global = true, default_value = "2", value_name = "P/Q")]
    pub q0: String,

    /// Lift the size limits on brute-force computations.
    #[arg(long, global = true)]
    pub unsafe_large_n: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Eigenvalue of C_n on the irrep labelled by a Young diagram.
    Eigenvalue(EigenvalueArgs),
    /// Recover the Young diagram from an eigenvalue of C_n.
    Reconstruct(ReconstructArgs),
    /// Character table of S_n.
    Characters(CharactersArgs),
    /// Irreducible traces in H_n(q).
    Traces(TracesArgs),
    /// Check the symbolic results against the regular representation.
    Verify(VerifyArgs),
    /// SU_q(N) quadratic Casimir and Gelfand-Zetlin patterns.
    Suq(SuqArgs),
}

#[derive(Args, Debug)]
pub struct EigenvalueArgs {
    /// Number of boxes; must match the diagram when given.
    #[arg(long)]
    pub n: Option<usize>,
    /// Row lengths, e.g. 3,3.
    #[arg(long)]
    pub diagram: String,
}

#[derive(Args, Debug)]
pub struct ReconstructArgs {
    #[arg(long)]
    pub n: usize,
    /// Laurent polynomial, e.g. "q^2+3*q-1".
    #[arg(long, allow_hyphen_values = true)]
    pub poly: String,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodChoice {
    Projector,
    Mn,
    Both,
}

#[derive(Args, Debug)]
pub struct CharactersArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = MethodChoice::Projector)]
    pub method: MethodChoice,
}

#[derive(Args, Debug)]
pub struct TracesArgs {
    /// Every partition of n is used when no diagram is given.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub diagram: Option<String>,
    /// One of murphy, simply, products, doubly.
    #[arg(long, default_value = "murphy")]
    pub kind: String,
    /// Murphy indices for the products kind, e.g. 2,4.
    #[arg(long, value_delimiter = ',')]
    pub alphas: Option<Vec<usize>>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub n: usize,
    /// Run only the named checks (repeatable).
    #[arg(long = "check")]
    pub checks: Vec<String>,
}

#[derive(Args, Debug)]
pub struct SuqArgs {
    #[command(subcommand)]
    pub action: SuqAction,
}

#[derive(Args, Debug)]
pub struct IrrepArgs {
    /// Irrep as N:l1,l2,... (trailing zeros optional).
    #[arg(long, conflicts_with_all = ["group", "diagram"])]
    pub irrep: Option<String>,
    /// N of SU_q(N), used together with --diagram.
    #[arg(long = "group", short = 'N')]
    pub group: Option<usize>,
    #[arg(long)]
    pub diagram: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum SuqAction {
    /// Eigenvalue of the normalized quadratic Casimir.
    Casimir(IrrepArgs),
    /// Recover the irrep from a Casimir eigenvalue.
    Reconstruct {
        #[arg(long = "group", short = 'N')]
        group: usize,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Check the correspondence with C_n(q^2) for every diagram up to a size.
    Check {
        /// Largest number of boxes.
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Largest N.
        #[arg(long, default_value_t = 6)]
        max_group: usize,
    },
    /// Number of Gelfand-Zetlin patterns.
    Dimension(IrrepArgs),
    /// Check the diagonal of [e_k, f_k] on every pattern at q0.
    Commutator(IrrepArgs),
}
