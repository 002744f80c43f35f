use std::fs;
use std::path::Path;
use std::time::Instant;

use idemdrazin::symbolic::verify_theorem_symbolically;
use idemdrazin::{
    drazin_by_formula, drazin_oracle, gen_pair, index_of, parse_rational, verify_drazin,
    ConditionClass, Error, FormulaKind, GeneratorSpec, IdempotentPair, Matrix, PairDocument,
    Rational, RationalMatrix, RationalSpec,
};

use crate::cli::{Cli, Command, DrazinArgs, GenerateArgs, InputArgs, Method, Scalars, SymbolicArgs, VerifyArgs};
use crate::report::Report;

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_NO_CONDITION: u8 = 3;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NoApplicableCondition => EXIT_NO_CONDITION,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_error(message: String) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message,
    }
}

type Outcome = Result<Option<Report>, Failure>;

pub fn run(cli: &Cli) -> Outcome {
    let start = Instant::now();
    let mut report = match &cli.command {
        Command::Classify(args) => classify(args)?,
        Command::Drazin(args) => drazin(args)?,
        Command::Generate(args) => return generate(args),
        Command::Symbolic(args) => symbolic(args)?,
        Command::Verify(args) => verify(args)?,
    };
    if cli.timing {
        report.set_timing(start.elapsed());
    }
    Ok(Some(report))
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))
}

fn load_pair(input: &InputArgs, scalars: Option<&Scalars>) -> Result<PairDocument<Rational>, Failure> {
    let mut doc = PairDocument::<Rational>::from_json_str(&read(&input.input)?)?;
    if let Some(s) = scalars {
        if let Some(a) = &s.a {
            doc.a = parse_rational(a)?;
        }
        if let Some(b) = &s.b {
            doc.b = parse_rational(b)?;
        }
    }
    Ok(doc)
}

fn class_names(pair: &IdempotentPair<Rational>) -> Vec<String> {
    pair.classes().iter().map(|c| c.to_string()).collect()
}

fn classify(args: &InputArgs) -> Result<Report, Failure> {
    let doc = load_pair(args, None)?;
    let mut report = Report::new("classify");
    report.field("dimension", doc.p.rows());
    report.field("P idempotent", doc.p.is_idempotent());
    report.field("Q idempotent", doc.q.is_idempotent());
    let pair = IdempotentPair::new(&doc.p, &doc.q)?;
    report.list("classes", &class_names(&pair));
    Ok(report)
}

fn drazin(args: &DrazinArgs) -> Result<Report, Failure> {
    let doc = load_pair(&args.input, Some(&args.scalars))?;
    let spec = RationalSpec::new(doc.a.clone(), doc.b.clone())?;
    let pair = IdempotentPair::new(&doc.p, &doc.q)?;
    let x = spec.combine(&doc.p, &doc.q);

    let method = match args.method {
        Method::Formula => "formula",
        Method::Oracle => "oracle",
        Method::Both => "both",
    };
    let mut report = Report::new(format!("drazin --method {method}"));
    report.field("a", spec.a().to_string());
    report.field("b", spec.b().to_string());
    report.list("classes", &class_names(&pair));

    let index = index_of(&x)?;
    let mut candidates: Vec<(&str, RationalMatrix)> = Vec::new();

    let formula = if args.method == Method::Oracle {
        None
    } else {
        let res = drazin_by_formula(&doc.p, &doc.q, &spec)?;
        report.field("formula", res.kind);
        report.field("class used", res.class_used);
        if let Some(branch) = res.branch {
            report.field("branch", branch);
        }
        report.field("index bound", res.index_bound);
        report.matrix("formula inverse", &res.inverse);
        Some(res)
    };
    let oracle = if args.method == Method::Formula {
        None
    } else {
        let res = drazin_oracle(&x)?;
        report.matrix("oracle inverse", &res.inverse);
        Some(res)
    };
    report.field("index", index);

    if let (Some(f), Some(o)) = (&formula, &oracle) {
        let diff = &f.inverse - &o.inverse;
        report.check_matrix("formula = oracle", diff.is_zero(), &diff);
    }
    if let Some(f) = formula {
        report.check("index <= bound", index <= f.index_bound);
        candidates.push(("formula", f.inverse));
    }
    if let Some(o) = oracle {
        candidates.push(("oracle", o.inverse));
    }
    for (label, b) in &candidates {
        add_axiom_checks(&mut report, label, &x, b, index)?;
    }
    Ok(report)
}

fn add_axiom_checks(
    report: &mut Report,
    label: &str,
    a: &RationalMatrix,
    b: &RationalMatrix,
    k: u32,
) -> Result<(), Failure> {
    let check = verify_drazin(a, b, k)?;
    let ab = a * b;
    let ak = a.pow(k)?;
    report.check_matrix(&format!("{label} BAB = B"), check.reflexive, &(&(b * &ab) - b));
    report.check_matrix(&format!("{label} AB = BA"), check.commutes, &(&ab - &(b * a)));
    report.check_matrix(
        &format!("{label} {}B = {}", power(k + 1), power(k)),
        check.index_identity,
        &(&(&ak * &ab) - &ak),
    );
    Ok(())
}

fn power(k: u32) -> String {
    match k {
        0 => "I".into(),
        1 => "A".into(),
        _ => format!("A^{k}"),
    }
}

fn generate(args: &GenerateArgs) -> Outcome {
    let class: ConditionClass = args.class.parse()?;
    let spec = GeneratorSpec {
        class,
        dimension: args.size,
        seed: args.seed,
        entry_bound: args.entry_bound,
    };
    let (p, q) = gen_pair::<Rational>(&spec)?;
    let parse = |s: &Option<String>| s.as_deref().map_or(Ok(Rational::from_integer(1.into())), parse_rational);
    let doc = PairDocument::new(p, q, parse(&args.scalars.a)?, parse(&args.scalars.b)?)?;
    let text = serde_json::to_string_pretty(&doc.to_json()).expect("pair JSON is always serializable");
    match &args.out {
        Some(path) => {
            fs::write(path, text + "\n")
                .map_err(|e| input_error(format!("cannot write {}: {e}", path.display())))?;
            let mut report = Report::new("generate");
            report.field("class", class);
            report.field("dimension", args.size);
            report.field("seed", args.seed);
            report.field("out", path.display().to_string());
            Ok(Some(report))
        }
        None => {
            println!("{text}");
            Ok(None)
        }
    }
}

fn symbolic(args: &SymbolicArgs) -> Result<Report, Failure> {
    let kind: FormulaKind = args.theorem.parse()?;
    let a: Rational = parse_rational(&args.a)?;
    let b: Rational = parse_rational(&args.b)?;
    let result = verify_theorem_symbolically(kind, &a, &b)?;

    let mut report = Report::new(format!("symbolic --theorem {kind}"));
    report.field("class", result.class);
    report.field("a", &result.a);
    report.field("b", &result.b);
    report.field("k", result.k);
    report.list("basis", &result.basis);
    report.field("inverse", &result.inverse);
    for c in &result.checks {
        report.check_vector(&c.name, c.holds, c.residual.as_deref());
    }
    for c in &result.supplementary {
        report.field(&format!("supplementary {}", c.name), c.holds);
    }
    Ok(report)
}

fn verify(args: &VerifyArgs) -> Result<Report, Failure> {
    let doc = load_pair(&args.input, Some(&args.scalars))?;
    let spec = RationalSpec::new(doc.a.clone(), doc.b.clone())?;
    let candidate: Matrix<Rational> = idemdrazin::json::matrix_from_json_str(&read(&args.candidate)?)?;
    let x = spec.combine(&doc.p, &doc.q);
    if candidate.shape() != x.shape() {
        return Err(Error::DimensionMismatch {
            op: "verify",
            left: x.shape(),
            right: candidate.shape(),
        }
        .into());
    }
    let mut report = Report::new(format!("verify --k {}", args.k));
    report.field("a", spec.a().to_string());
    report.field("b", spec.b().to_string());
    report.matrix("candidate", &candidate);
    add_axiom_checks(&mut report, "candidate", &x, &candidate, args.k)?;
    Ok(report)
}

pub fn exit_code(report: &Report) -> u8 {
    if report.passed() {
        EXIT_OK
    } else {
        EXIT_VERIFY
    }
}
