//! The `kingdon` command line: build, print, verify and classify Kingdon
//! algebras and Cayley-Dickson towers.

pub mod form;

use std::fmt::Write as _;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use kingdon_core::algebra::{format_terms, norm, Element};
use kingdon_core::export::{render, TableFormat};
use kingdon_core::identities::{
    alternating_associator_check, diassociativity_check, moufang_check, norm_multiplicativity_check, quadratic_check,
};
use kingdon_core::kingdon::{admissible_triples, ADMISSIBLE_TRIPLES};
use kingdon_core::sampling::DEFAULT_SEED;
use kingdon_core::{
    build_kingdon, classify, kingdon_norm, structure_report, tower, Error, KingdonAlgebra, Signature, Tower, Verdict,
};

use crate::form::{parse_form, parse_scalars};

#[derive(Debug, Parser)]
#[command(name = "kingdon", version, about = "Exact Kingdon algebras, octonions and Cayley-Dickson towers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build K(V,B) and print its structure table as JSON
    Build {
        #[arg(long, allow_hyphen_values = true)]
        form: String,
    },
    /// Print the multiplication table
    Table {
        #[arg(long, allow_hyphen_values = true)]
        form: String,
        #[arg(long, default_value = "md")]
        format: Format,
    },
    /// Run a verification suite
    Verify {
        #[arg(long, allow_hyphen_values = true)]
        form: String,
        #[arg(long)]
        suite: Suite,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Override the number of random samples of sampled suites
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Print the signature and isomorphism class
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        form: String,
    },
    /// Print commutant, nucleus, center, simplicity and a zero divisor as JSON
    Structure {
        #[arg(long, allow_hyphen_values = true)]
        form: String,
    },
    /// Build an iterated Cayley-Dickson double of Q and print it as JSON
    Cd {
        /// Comma-separated rationals, applied left to right
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        gammas: String,
    },
    /// Decide whether the algebras of two signatures are isomorphic
    Isomorphic {
        #[arg(long)]
        a: Signature,
        #[arg(long)]
        b: Signature,
    },
    /// Check the admissible triples of the octonions
    Fano {
        #[arg(long, allow_hyphen_values = true, default_value = "oct")]
        form: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Format {
    Md,
    Csv,
    Json,
}

impl From<Format> for TableFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Md => TableFormat::Markdown,
            Format::Csv => TableFormat::Csv,
            Format::Json => TableFormat::Json,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Alternativity,
    Moufang,
    Diassociativity,
    Palindromic,
    Clifford,
    Quadratic,
    Norm,
    Grading,
    Omega,
    Table,
    Involutions,
    Fano,
    All,
}

const SUITES: [Suite; 12] = [
    Suite::Alternativity,
    Suite::Moufang,
    Suite::Diassociativity,
    Suite::Palindromic,
    Suite::Clifford,
    Suite::Quadratic,
    Suite::Norm,
    Suite::Grading,
    Suite::Omega,
    Suite::Table,
    Suite::Involutions,
    Suite::Fano,
];

impl Suite {
    fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }

    /// Suites that only make sense for three-dimensional forms.
    fn needs_dim3(self) -> bool {
        matches!(self, Suite::Norm | Suite::Grading | Suite::Omega | Suite::Fano)
    }
}

/// What a successful invocation produced.
#[derive(Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub passed: bool,
}

impl Output {
    fn pass(text: String) -> Self {
        Output { text, passed: true }
    }
}

/// Exit status for an error: 2 for bad input, 1 for failed verification.
pub fn error_code(e: &Error) -> u8 {
    match e {
        Error::VerificationFailed(_) | Error::Mismatch(_) | Error::NotScalar(_) => 1,
        _ => 2,
    }
}

pub fn run(cli: Cli) -> Result<Output, Error> {
    match cli.command {
        Command::Build { form } => {
            let ka = build_kingdon(&parse_form(&form)?)?;
            Ok(Output::pass(ka.algebra().to_json_string() + "\n"))
        }
        Command::Table { form, format } => {
            let ka = build_kingdon(&parse_form(&form)?)?;
            let mut text = render(ka.algebra(), format.into());
            if !text.ends_with('\n') {
                text.push('\n');
            }
            Ok(Output::pass(text))
        }
        Command::Verify {
            form,
            suite,
            seed,
            samples,
        } => {
            let ka = build_kingdon(&parse_form(&form)?)?;
            verify(&ka, suite, seed, samples)
        }
        Command::Classify { form } => {
            let (sig, class) = classify(&parse_form(&form)?)?;
            Ok(Output::pass(format!("{sig} {class}\n")))
        }
        Command::Structure { form } => {
            let ka = build_kingdon(&parse_form(&form)?)?;
            let report = structure_report(&ka)?;
            Ok(Output::pass(report.to_json_string() + "\n"))
        }
        Command::Cd { gammas } => {
            let a = tower(&Tower::new(parse_scalars(&gammas)?)?)?;
            Ok(Output::pass(a.to_json_string() + "\n"))
        }
        Command::Isomorphic { a, b } => isomorphic(a, b),
        Command::Fano { form } => fano(&build_kingdon(&parse_form(&form)?)?),
    }
}

fn verify(ka: &KingdonAlgebra, suite: Suite, seed: u64, samples: Option<usize>) -> Result<Output, Error> {
    let suites: Vec<Suite> = match suite {
        Suite::All => SUITES
            .into_iter()
            .filter(|s| ka.dim_v() == 3 || !s.needs_dim3())
            .filter(|s| *s != Suite::Fano || is_octonions(ka))
            .collect(),
        s => vec![s],
    };
    let mut text = String::new();
    let mut passed = true;
    for s in suites {
        let v = run_suite(ka, s, seed, samples)?;
        match &v {
            Verdict::Pass { checks } => writeln!(text, "{}: PASS ({checks} checks)", s.name()),
            Verdict::Fail { checks, counterexample } => {
                passed = false;
                writeln!(text, "{}: FAIL after {checks} checks: {counterexample}", s.name())
            }
        }
        .expect("writing to a string");
    }
    Ok(Output { text, passed })
}

fn is_octonions(ka: &KingdonAlgebra) -> bool {
    ka.dim_v() == 3 && ka.q_values().iter().all(|q| *q == -kingdon_core::Scalar::one())
}

fn run_suite(ka: &KingdonAlgebra, suite: Suite, seed: u64, samples: Option<usize>) -> Result<Verdict, Error> {
    let a = ka.algebra();
    let n = |default: usize| samples.unwrap_or(default);
    if suite.needs_dim3() && ka.dim_v() != 3 {
        return Err(Error::InvalidParameter(format!(
            "suite `{}` needs a three-dimensional form",
            suite.name()
        )));
    }
    Ok(match suite {
        Suite::Alternativity => alternating_associator_check(a),
        Suite::Moufang => moufang_check(a, n(500), seed),
        Suite::Diassociativity => diassociativity_check(a, n(100), 4, seed),
        Suite::Palindromic => ka.palindromic_check(),
        Suite::Clifford => ka.clifford_relation_check(),
        Suite::Quadratic => quadratic_check(a, n(200), seed)?,
        Suite::Norm => {
            let by_formula = norm_multiplicativity_check(a, |x| kingdon_norm(ka, x), n(500), seed)?;
            let mut agree = kingdon_core::Checker::new();
            let mut s = kingdon_core::sampling::Sampler::new(seed);
            for _ in 0..n(200) {
                let x = s.element(a);
                let (f, c) = (kingdon_norm(ka, &x)?, norm(&x)?);
                agree.check(f == c, || format!("norm formula gives {f} but x x* = {c} for x = {x}"));
            }
            by_formula.and(agree.finish())
        }
        Suite::Grading => ka.grading_check()?,
        Suite::Omega => ka.forms_of_omega_check()?,
        Suite::Table => ka.table_agreement_check()?,
        Suite::Involutions => ka.involution_check()?,
        Suite::Fano => admissible_triples(ka)?.verdict,
        Suite::All => unreachable!("expanded by the caller"),
    })
}

fn isomorphic(a: Signature, b: Signature) -> Result<Output, Error> {
    let ans = kingdon_core::structure::isomorphic(a, b)?;
    let mut text = String::new();
    let verdict = if ans.isomorphic { "isomorphic" } else { "not isomorphic" };
    writeln!(text, "K{a} and K{b}: {verdict}").expect("writing to a string");
    writeln!(text, "classes: {}, {}", ans.classes.0, ans.classes.1).expect("writing to a string");
    if let Some(reason) = &ans.reason {
        writeln!(text, "reason: {reason}").expect("writing to a string");
    }
    match &ans.map {
        Some(m) => {
            let src = build_kingdon(&a.formed_space()?)?;
            let dst = build_kingdon(&b.formed_space()?)?;
            writeln!(text, "verified map:").expect("writing to a string");
            for (c, name) in src.algebra().basis_names().iter().enumerate() {
                let image = format_terms(dst.algebra().basis_names(), &m.column(c));
                writeln!(text, "  {name} -> {image}").expect("writing to a string");
            }
        }
        None if ans.isomorphic => {
            writeln!(text, "no explicit map is constructed for this pair").expect("writing to a string");
        }
        None => {}
    }
    Ok(Output::pass(text))
}

fn fano(ka: &KingdonAlgebra) -> Result<Output, Error> {
    let report = admissible_triples(ka)?;
    let a: &Arc<_> = ka.algebra();
    let names = a.basis_names();
    let mut text = String::new();
    let mut held = 0;
    for &[x, y, z] in &report.triples {
        let (ex, ey, ez) = (Element::basis(a, x), Element::basis(a, y), Element::basis(a, z));
        let ok = &ex * &ey == ez && &ey * &ex == -&ez;
        held += usize::from(ok);
        let status = if ok { "ok" } else { "FAIL" };
        writeln!(text, "({}, {}, {}) {status}", names[x], names[y], names[z]).expect("writing to a string");
    }
    writeln!(
        text,
        "{held} of {} oriented triples hold, from {} lines",
        report.triples.len(),
        ADMISSIBLE_TRIPLES.len()
    )
    .expect("writing to a string");
    for f in &report.failures {
        writeln!(text, "  {f}").expect("writing to a string");
    }
    Ok(Output {
        text,
        passed: report.verdict.is_pass(),
    })
}
