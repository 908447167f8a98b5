use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "brace-forge", version, about = "Rota-Baxter groups, skew braces and Yang-Baxter solutions")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
    /// Largest group for operator and brace enumeration.
    #[arg(long, global = true)]
    pub max_order: Option<usize>,
    /// Largest holomorph to build.
    #[arg(long, global = true)]
    pub max_hol: Option<usize>,
    /// Seed for randomized sampling.
    #[arg(long, global = true, default_value_t = 20210)]
    pub seed: u64,
}

/// `--group NAME` or `--in FILE`.
#[derive(Debug, Args)]
pub struct Source {
    /// Catalog name, content hash or descriptor such as `C2xS3`.
    #[arg(long, short)]
    pub group: Option<String>,
    /// JSON input file.
    #[arg(long = "in", short = 'i')]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GroupArg {
    #[arg(long, short)]
    pub group: String,
}

#[derive(Debug, Args)]
pub struct InArg {
    #[arg(long = "in", short = 'i')]
    pub input: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Finite groups.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Rota-Baxter operators.
    #[command(subcommand)]
    Rb(RbCmd),
    /// Operators on the algebra k^n.
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// Skew left braces.
    #[command(subcommand)]
    Brace(BraceCmd),
    /// The enveloping group of a brace.
    #[command(subcommand)]
    Embed(EmbedCmd),
    /// Set-theoretic Yang-Baxter solutions and racks.
    #[command(subcommand)]
    Ybe(YbeCmd),
    /// Skew left k-braces.
    #[command(subcommand)]
    Multibrace(MultibraceCmd),
    /// Worked examples.
    #[command(subcommand)]
    Paper(PaperCmd),
}

#[derive(Debug, Subcommand)]
pub enum GroupCmd {
    /// Emit a group as JSON.
    Build(Source),
    /// Structural invariants.
    Info(Source),
    /// Catalog contents.
    List,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TransformKind {
    Tilde,
    WeightSwap,
    AutConj,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstructKind {
    /// `B(hl) = l⁻¹` for an exact factorization `G = HL`.
    Splitting,
    /// `B(hlm) = l⁻¹` for `G = HLM`.
    Triangular,
    /// Weight 1 operator from `G = H ⋊ L` and a map `C` on `L`.
    Semidirect,
    /// A homomorphism (or antihomomorphism) onto an abelian subgroup.
    Hom,
    Zero,
    Inversion,
}

#[derive(Debug, Subcommand)]
pub enum RbCmd {
    /// All operators of the given weight on a group.
    Enumerate {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        weight: i8,
    },
    /// Check an operator file.
    Verify(InArg),
    /// Apply a transformation to an operator.
    Transform {
        #[command(flatten)]
        input: InArg,
        #[arg(long, value_enum)]
        kind: TransformKind,
        /// Automorphism images for `aut-conj`, comma separated.
        #[arg(long)]
        phi: Option<String>,
    },
    /// Build an operator from subgroup data.
    Construct {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, value_enum)]
        kind: ConstructKind,
        /// Generators of H (elements by label or index, comma separated).
        #[arg(long)]
        h: Option<String>,
        #[arg(long)]
        l: Option<String>,
        #[arg(long)]
        m: Option<String>,
        /// Map images (for `hom` and `semidirect`), comma separated.
        #[arg(long)]
        images: Option<String>,
    },
    /// Orbits of weight 1 operators under Aut(G).
    Classify(GroupArg),
    /// Derived circle group and criteria of an operator.
    Derive(InArg),
}

#[derive(Debug, Subcommand)]
pub enum AlgebraCmd {
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    Orbits {
        #[arg(long)]
        n: usize,
    },
    /// Operator on G^n from an upper-triangular matrix, with identity twists.
    Lift {
        #[command(flatten)]
        input: InArg,
        #[arg(long, short)]
        group: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Action {
    Trivial,
    Inversion,
}

#[derive(Debug, Subcommand)]
pub enum BraceCmd {
    /// The brace of a weight 1 or weight −1 operator.
    FromRb(InArg),
    /// Check the brace axioms of a file without rejecting it on load.
    Verify(InArg),
    Invariants(InArg),
    /// Braces on a group from regular subgroups of its holomorph.
    Enumerate(GroupArg),
    Quotient {
        #[command(flatten)]
        input: InArg,
        /// Members of the ideal, comma separated.
        #[arg(long)]
        ideal: String,
    },
    Isomorphic {
        #[command(flatten)]
        input: InArg,
        #[arg(long)]
        other: PathBuf,
    },
    /// `A × B` against `A ⋊ B` for an action of `B` on `A`.
    Semidirect {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, value_enum, default_value = "inversion")]
        action: Action,
    },
    /// Windowed checks of the brace a∘b = a + (−1)^a b on the integers.
    ParityWindow {
        #[arg(long, default_value_t = 50)]
        n: i64,
    },
}

#[derive(Debug, Subcommand)]
pub enum EmbedCmd {
    /// The enveloping group as group JSON.
    Tilde(InArg),
    Verify(InArg),
    Zeta(InArg),
    /// Recover the operator of a brace on a complete group.
    Recover(InArg),
}

#[derive(Debug, Subcommand)]
pub enum YbeCmd {
    FromBrace(InArg),
    FromRb(InArg),
    Verify(InArg),
    RackForm(InArg),
    FromRack(InArg),
    /// `S(x,y) = (y, B(y)xB(y)⁻¹)` for an operator.
    DirectRb(InArg),
    /// Rack axioms against non-degenerate solutions on all small tables.
    RackSweep {
        #[arg(long, default_value_t = 3)]
        exhaustive: usize,
        #[arg(long, default_value_t = 4000)]
        samples: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum MultibraceCmd {
    Build {
        #[command(flatten)]
        input: InArg,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    Verify(InArg),
}

#[derive(Debug, Subcommand)]
pub enum PaperCmd {
    /// Run one worked example (or `criterion-N`), or all of them.
    Repro {
        #[arg(long, required_unless_present = "all")]
        example: Option<String>,
        #[arg(long)]
        all: bool,
        /// Half-width of the parity-brace window.
        #[arg(long, default_value_t = 50)]
        window: i64,
    },
    /// Names of the worked examples.
    List,
}
