//! Command surface: each subcommand is a trait object registered by name
//! and dispatched at runtime. Commands resolve a target (built-in fixture
//! name or document path), run engine operations, and return a report.
//!
//! Exit-status contract: claim mismatches are report content and exit
//! zero; malformed input and structural errors exit nonzero.

use crate::audit::{run_audit, AuditContext};
use crate::error::{Error, Result};
use crate::fixtures::{self, Fixture};
use crate::frame::{
    check_statistical, constant_curvature_check, curvature, dual_connection, scalar,
    SignConvention, VectorField,
};
use crate::oracle;
use crate::report::{Format, Report, Verdict};
use crate::ring::{Poly, Rational, RingQuotient};
use crate::soliton::{
    classify_quotient, einstein_check, ricci_of_source, solve_soliton, RicciSource, SolitonKind,
    SolitonProblem,
};
use crate::structures::{check_almost_contact, check_kenmotsu_statistical};
use crate::submanifold::{gauss_check, induce, phi_decompose, umbilicity};
use clap::{Arg, ArgAction, ArgMatches};
use std::collections::BTreeMap;

pub trait Command: Sync {
    fn name(&self) -> &'static str;
    fn about(&self) -> &'static str;
    fn clap(&self) -> clap::Command;
    fn run(&self, matches: &ArgMatches) -> Result<Report>;
}

pub fn registry() -> &'static [&'static dyn Command] {
    static COMMANDS: &[&dyn Command] = &[
        &Check,
        &Curvature,
        &RicciCmd,
        &ScalarCmd,
        &Sectional,
        &Soliton,
        &Classify,
        &Sub,
        &Audit,
        &Oracle,
        &Fixtures,
    ];
    COMMANDS
}

pub fn command_by_name(name: &str) -> Option<&'static dyn Command> {
    registry().iter().copied().find(|c| c.name() == name)
}

// ----- shared argument plumbing -----

fn target_arg() -> Arg {
    Arg::new("target")
        .required(true)
        .help("built-in fixture name or path to a manifold document")
}

fn arg(name: &'static str, help: &'static str) -> Arg {
    Arg::new(name).long(name).action(ArgAction::Set).help(help)
}

fn common_args(cmd: clap::Command) -> clap::Command {
    cmd.arg(arg("connection", "connection to use (default: nabla)"))
        .arg(arg("ricci-source", "nabla | nabla-star | statistical"))
        .arg(arg("sign", "curvature sign convention: standard | reversed"))
        .arg(arg("assign", "parameter assignment, e.g. a=0,b=2"))
        .arg(arg("format", "output format: text | machine"))
}

struct Flags {
    connection: String,
    source: RicciSource,
    sign: SignConvention,
    assign_cli: BTreeMap<String, Rational>,
    format: Format,
}

impl Flags {
    fn from(matches: &ArgMatches) -> Result<Flags> {
        let connection = matches
            .try_get_one::<String>("connection")
            .ok()
            .flatten()
            .cloned()
            .unwrap_or_else(|| "nabla".to_string());
        let source = match matches.try_get_one::<String>("ricci-source").ok().flatten() {
            Some(s) => RicciSource::parse(s)?,
            None => RicciSource::Statistical,
        };
        let sign = match matches.try_get_one::<String>("sign").ok().flatten() {
            Some(s) => match s.as_str() {
                "standard" => SignConvention::Standard,
                "reversed" => SignConvention::Reversed,
                other => return Err(Error::Cli(format!("unknown sign convention `{other}`"))),
            },
            None => SignConvention::Standard,
        };
        let assign_cli = match matches.try_get_one::<String>("assign").ok().flatten() {
            Some(s) => parse_assignment(s)?,
            None => BTreeMap::new(),
        };
        let format = match matches.try_get_one::<String>("format").ok().flatten() {
            Some(s) => Format::parse(s)?,
            None => Format::Text,
        };
        Ok(Flags { connection, source, sign, assign_cli, format })
    }

    /// Fixture defaults overlaid with the command-line assignment.
    fn assignment(&self, fixture: &Fixture) -> BTreeMap<String, Rational> {
        let mut out = fixture.default_assignment.clone();
        for (k, v) in &self.assign_cli {
            out.insert(k.clone(), v.clone());
        }
        out
    }
}

fn parse_assignment(s: &str) -> Result<BTreeMap<String, Rational>> {
    let mut out = BTreeMap::new();
    for piece in s.split(',').filter(|p| !p.trim().is_empty()) {
        let (k, v) = piece
            .split_once('=')
            .ok_or_else(|| Error::Cli(format!("bad assignment `{piece}`, expected name=value")))?;
        out.insert(k.trim().to_string(), v.trim().parse::<Rational>()?);
    }
    Ok(out)
}

fn resolve_target(matches: &ArgMatches) -> Result<Fixture> {
    let spec = matches
        .get_one::<String>("target")
        .expect("target is required")
        .clone();
    if fixtures::NAMES.contains(&spec.as_str()) {
        return fixtures::get(&spec);
    }
    let text = std::fs::read_to_string(&spec)
        .map_err(|e| Error::Cli(format!("cannot read `{spec}`: {e}")))?;
    let doc = match crate::dsl::parse(&text) {
        Ok(doc) => doc,
        Err(diags) => {
            let rendered = crate::dsl::render_diagnostics(&text, &diags);
            eprint!("{rendered}");
            return Err(Error::Parse(diags.len()));
        }
    };
    let (presentation, contact) = doc.build()?;
    Ok(Fixture {
        presentation,
        contact,
        submanifolds: doc.submanifolds.clone(),
        description: "user-supplied document",
        default_assignment: BTreeMap::new(),
    })
}

fn parse_field(fixture: &Fixture, text: &str) -> Result<VectorField> {
    crate::dsl::parse_vector_expr(
        text,
        fixture.presentation.ring(),
        fixture.presentation.frame_names(),
    )
    .map_err(|diags| {
        Error::Cli(format!(
            "cannot parse `{text}`: {}",
            diags
                .first()
                .map(|d| d.message.clone())
                .unwrap_or_else(|| "invalid expression".into())
        ))
    })
}

fn tangent_indices(fixture: &Fixture, matches: &ArgMatches) -> Result<Vec<usize>> {
    let spec = matches
        .try_get_one::<String>("tangent")
        .ok()
        .flatten()
        .ok_or_else(|| Error::Cli("missing --tangent e1,e3,xi".into()))?;
    spec.split(',')
        .map(|name| fixture.presentation.frame_index(name.trim()))
        .collect()
}

pub fn emit_format(matches: &ArgMatches) -> Format {
    Flags::from(matches).map(|f| f.format).unwrap_or(Format::Text)
}

// ----- commands -----

struct Fixtures;

impl Command for Fixtures {
    fn name(&self) -> &'static str {
        "fixtures"
    }

    fn about(&self) -> &'static str {
        "list the built-in fixtures"
    }

    fn clap(&self) -> clap::Command {
        clap::Command::new(self.name())
            .about(self.about())
            .arg(arg("format", "output format: text | machine"))
    }

    fn run(&self, _matches: &ArgMatches) -> Result<Report> {
        let mut report = Report::new("built-in fixtures");
        let sec = report.section("fixtures", "name, dimension, description");
        for name in fixtures::NAMES {
            let f = fixtures::get(name)?;
            sec.info(
                name,
                format!("dim {} — {}", f.presentation.dim(), f.description),
            );
        }
        Ok(report)
    }
}

struct Check;

impl Command for Check {
    fn name(&self) -> &'static str {
        "check"
    }

    fn about(&self) -> &'static str {
        "structure checks: statistical, contact, kenmotsu"
    }

    fn clap(&self) -> clap::Command {
        common_args(
            clap::Command::new(self.name())
                .about(self.about())
                .arg(target_arg())
                .arg(arg("structure", "statistical | contact | kenmotsu | all")),
        )
    }

    fn run(&self, matches: &ArgMatches) -> Result<Report> {
        let fixture = resolve_target(matches)?;
        let flags = Flags::from(matches)?;
        let structure = matches
            .try_get_one::<String>("structure")
            .ok()
            .flatten()
            .cloned()
            .unwrap_or_else(|| "all".to_string());
        let m = &fixture.presentation;
        let nabla = m.connection(&flags.connection)?;
        let mut report = Report::new(format!("structure checks: {}", m.name));
        let sec = report.section("check", format!("connection `{}`", flags.connection));

        if matches!(structure.as_str(), "statistical" | "kenmotsu" | "all") {
            let rep = check_statistical(m, nabla)?;
            let c = sec.check(
                "statistical",
                Verdict::from_bool_check(rep.verdict()),
                format!(
                    "torsion-free: {}, codazzi: {}, K-symmetry: {}",
                    rep.torsion_free, rep.codazzi, rep.totally_symmetric
                ),
            );
            if !rep.failures.is_empty() {
                c.tagged(format!("{} residual(s)", rep.failures.len()));
            }
            for f in rep.failures.iter().take(6) {
                sec.info(
                    format!("residual.{}.{:?}", f.what, f.indices),
                    f.residual.clone(),
                );
            }
        }
        if matches!(structure.as_str(), "contact" | "kenmotsu" | "all") {
            match fixture.contact.as_ref() {
                Some(ct) => {
                    let rep = check_almost_contact(m, ct);
                    sec.check(
                        "almost_contact",
                        Verdict::from_bool_check(rep.verdict()),
                        format!(
                            "phi(xi)=0: {}, eta∘phi=0: {}, phi^2: {}, metric: {}",
                            rep.phi_xi_zero, rep.eta_phi_zero, rep.phi_squared, rep.metric_compatible
                        ),
                    );
                    if matches!(structure.as_str(), "kenmotsu" | "all") {
                        let ken = check_kenmotsu_statistical(m, nabla, ct)?;
                        sec.check(
                            "kenmotsu_statistical",
                            Verdict::from_bool_check(ken.verdict()),
                            format!(
                                "structure eq: {}, xi eq: {}, K-phi: {}, mu(xi) = {}",
                                ken.structure_equation,
                                ken.xi_equation,
                                ken.k_phi_anticommute,
                                ken.mu_xi
                            ),
                        );
                    }
                }
                None if structure != "all" => {
                    return Err(Error::MissingContact(
                        "target declares no contact block".into(),
                    ))
                }
                None => {
                    sec.info("contact", "no contact structure declared");
                }
            }
        }
        Ok(report)
    }
}

struct Curvature;

impl Command for Curvature {
    fn name(&self) -> &'static str {
        "curvature"
    }

    fn about(&self) -> &'static str {
        "curvature tensor of a connection, with the constant-curvature probe"
    }

    fn clap(&self) -> clap::Command {
        common_args(
            clap::Command::new(self.name())
                .about(self.about())
                .arg(target_arg()),
        )
    }

    fn run(&self, matches: &ArgMatches) -> Result<Report> {
        let fixture = resolve_target(matches)?;
        let flags = Flags::from(matches)?;
        let m = &fixture.presentation;
        let nabla = m.connection(&flags.connection)?;
        let r = curvature(m, nabla, flags.sign);
        let names = m.frame_names();
        let mut report = Report::new(format!("curvature: {}", m.name));
        let sec = report.section(
            "curvature",
            format!("connection `{}`, {} convention", flags.connection, flags.sign),
        );
        let mut nonzero = 0;
        for i in 0..m.dim() {
            for j in (i + 1)..m.dim() {
                for k in 0..m.dim() {
                    let v = r.section(i, j, k);
                    if !v.is_zero() {
                        nonzero += 1;
                        sec.info(
                            format!("R({},{}){}", names[i], names[j], names[k]),
                            v.display(names),
                        );
                    }
                }
            }
        }
        if nonzero == 0 {
            sec.info("R", "identically zero");
        }
        match constant_curvature_check(m, &r) {
            Some(c) => sec.info("constant_curvature", c.to_string()),
            None => sec.info("constant_curvature", "absent"),
        }
        Ok(report)
    }
}

struct RicciCmd;

impl Command for RicciCmd {
    fn name(&self) -> &'static str {
        "ricci"
    }

    fn about(&self) -> &'static str {
        "Ricci form of the selected source, scalar curvature, Einstein check"
    }

    fn clap(&self) -> clap::Command {
        common_args(
            clap::Command::new(self.name())
                .about(self.about())
                .arg(target_arg()),
        )
    }

    fn run(&self, matches: &ArgMatches) -> Result<Report> {
        let fixture = resolve_target(matches)?;
        let flags = Flags::from(matches)?;
        let m = &fixture.presentation;
        let nabla = m.connection(&flags.connection)?;
        let ric = ricci_of_source(m, nabla, flags.source, flags.sign)?;
        let names = m.frame_names();
        let mut report = Report::new(format!("ricci: {}", m.name));
        let sec = report.section(
            "ricci",
            format!("source {}, {} convention", flags.source, flags.sign),
        );
        for i in 0..m.dim() {
            for j in 0..m.dim() {
                if !ric.get(i, j).is_zero() {
                    sec.info(format!("Ric({},{})", names[i], names[j]), ric.get(i, j).to_string());
                }
            }
        }
        if ric.is_zero() {
            sec.info("Ric", "identically zero");
        }
        sec.info("scalar", scalar(&ric, m)?.to_string());
        sec.info(
            "einstein",
            einstein_check(m, &ric, fixture.contact.as_ref()).describe(),
        );
        Ok(report)
    }
}

struct ScalarCmd;

impl Command for ScalarCmd {
    fn name(&self) -> &'static str {
        "scalar"
    }

    fn about(&self) -> &'static str {
        "scalar curvature of the selected source"
    }

    fn clap(&self) -> clap::Command {
        common_args(
            clap::Command::new(self.name())
                .about(self.about())
                .arg(target_arg()),
        )
    }

    fn run(&self, matches: &ArgMatches) -> Result<Report> {
        let fixture = resolve_target(matches)?;
        let flags = Flags::from(matches)?;
        let m = &fixture.presentation;
        let nabla = m.connection(&flags.connection)?;
        let ric = ricci_of_source(m, nabla, flags.source, flags.sign)?;
        let mut report = Report::new(format!("scalar curvature: {}", m.name));
        report
            .section("scalar", format!("source {}", flags.source))
            .info("scalar", scalar(&ric, m)?.to_string());
        Ok(report)
    }
}

struct Sectional;

impl Command for Sectional {
    fn name(&self) -> &'static str {
        "sectional"
    }

    fn about(&self) -> &'static str {
        "sectional curvature of the statistical curvature for a 2-plane"
    }

    fn clap(&self) -> clap::Command {
        common_args(
            clap::Command::new(self.name())
                .about(self.about())
                .arg(target_arg())
                .arg(arg("plane", "two frame-vector expressions, e.g. e1,xi")),
        )
    }

    fn run(&self, matches: &ArgMatches) -> Result<Report> {
        let fixture = resolve_target(matches)?;
        let flags = Flags::from(matches)?;
        let m = &fixture.presentation;
        let plane = matches
            .try_get_one::<String>("plane")
            .ok()
            .flatten()
            .ok_or_else(|| Error::Cli("missing --plane X,Y".into()))?;
        let (xs, ys) = plane
            .split_once(',')
            .ok_or_else(|| Error::Cli("expected --plane X,Y".into()))?;
        let x = parse_field(&fixture, xs.trim())?;
        let y = parse_field(&fixture, ys.trim())?;
        let nabla = m.connection(&flags.connection)?;
        let s = crate::frame::statistical_curvature_of(m, nabla, flags.sign)?;
        let k = crate::frame::sectional(m, &s, &x, &y)?;
        let mut report = Report::new(format!("sectional curvature: {}", m.name));
        report
            .section("sectional", format!("plane {} ∧ {}", xs.trim(), ys.trim()))
            .info("K", k.to_string());
        Ok(report)
    }
}

struct Soliton;

impl Command for Soliton {
    fn name(&self) -> &'static str {
        "soliton"
    }

    fn about(&self) -> &'static str {
        "solve the soliton equation exactly and classify the result"
    }

    fn clap(&self) -> clap::Command {
        common_args(
            clap::Command::new(self.name())
                .about(self.about())
                .arg(target_arg())
                .arg(arg("kind", "ricci | eta-ricci | yamabe | quasi-yamabe"))
                .arg(arg("potential", "potential field expression (default 0)")),
        )
    }

    fn run(&self, matches: &ArgMatches) -> Result<Report> {
        let fixture = resolve_target(matches)?;
        let flags = Flags::from(matches)?;
        let m = &fixture.presentation;
        let kind = SolitonKind::parse(
            matches
                .try_get_one::<String>("kind")
                .ok()
                .flatten()
                .map(|s| s.as_str())
                .unwrap_or("ricci"),
        )?;
        let potential_text = matches
            .try_get_one::<String>("potential")
            .ok()
            .flatten()
            .cloned()
            .unwrap_or_else(|| "0".to_string());
        let potential = parse_field(&fixture, &potential_text)?;
        let prob = SolitonProblem { kind, potential, source: flags.source };
        let sol = solve_soliton(m, &prob, fixture.contact.as_ref())?;
        let assignment = flags.assignment(&fixture);

        let mut report = Report::new(format!("{kind} soliton: {}", m.name));
        let sec = report.section(
            "soliton",
            format!("potential {potential_text}, source {}", flags.source),
        );
        sec.info("lambda", sol.lambda.to_string());
        match &sol.omega {
            Some(o) => sec.info("omega", o.to_string()),
            None if kind.uses_eta() => sec.info("omega", "unconstrained (η vanishes)"),
            None => {}
        }
        sec.check(
            "consistent",
            Verdict::from_bool_check(sol.consistent),
            "re-substituted residual is identically zero",
        );
        match classify_quotient(&sol.lambda, &assignment) {
            Ok(class) => sec.info("classification", class.to_string()),
            Err(Error::MissingParameter(p)) => {
                sec.info("classification", format!("needs an assignment for `{p}`"))
            }
            Err(e) => return Err(e),
        }

        // printed-pair comparisons on the 5D fixture
        if m.name == "kenmotsu5d" && potential_text == "xi" {
            let ring = m.ring();
            let a = Poly::var(ring, "a").expect("fixture parameter");
            let omega = sol.omega.clone().unwrap_or_else(|| RingQuotient::zero(ring));
            match kind {
                SolitonKind::EtaRicci => {
                    let printed_l = RingQuotient::from_rational(ring, Rational::int(3));
                    sec.check(
                        "claim.lambda",
                        Verdict::from_bool_claim(sol.lambda.equals(&printed_l)),
                        format!("engine {}, printed 3", sol.lambda),
                    )
                    .anchored("for λ=3 and ω=-(β+3a+4)");
                    let printed_o = RingQuotient::from_poly(
                        a.scale(&Rational::int(4)).add(&Poly::int(ring, 4)).neg(),
                    );
                    sec.check(
                        "claim.omega",
                        Verdict::from_bool_claim(omega.equals(&printed_o)),
                        format!("engine {omega}, printed -(β+3a+4) = {printed_o} with β := a"),
                    )
                    .anchored("for λ=3 and ω=-(β+3a+4)");
                }
                SolitonKind::QuasiYamabe => {
                    let printed_l = RingQuotient::from_poly(
                        a.scale(&Rational::int(3)).add(&Poly::int(ring, -16)),
                    );
                    sec.check(
                        "claim.lambda",
                        Verdict::from_bool_claim(sol.lambda.equals(&printed_l)),
                        format!("engine {}, printed 3a - 16", sol.lambda),
                    )
                    .anchored("for λ=3a-16 and μ=1-β");
                }
                _ => {}
            }
        }
        Ok(report)
    }
}

struct Classify;

impl Command for Classify {
    fn name(&self) -> &'static str {
        "classify"
    }

    fn about(&self) -> &'static str {
        "solve a soliton and report the sign class of λ at an assignment"
    }

    fn clap(&self) -> clap::Command {
        common_args(
            clap::Command::new(self.name())
                .about(self.about())
                .arg(target_arg())
                .arg(arg("kind", "ricci | eta-ricci | yamabe | quasi-yamabe"))
                .arg(arg("potential", "potential field expression (default 0)")),
        )
    }

    fn run(&self, matches: &ArgMatches) -> Result<Report> {
        let fixture = resolve_target(matches)?;
        let flags = Flags::from(matches)?;
        let kind = SolitonKind::parse(
            matches
                .try_get_one::<String>("kind")
                .ok()
                .flatten()
                .map(|s| s.as_str())
                .unwrap_or("ricci"),
        )?;
        let potential = parse_field(
            &fixture,
            matches
                .try_get_one::<String>("potential")
                .ok()
                .flatten()
                .map(|s| s.as_str())
                .unwrap_or("0"),
        )?;
        let prob = SolitonProblem { kind, potential, source: flags.source };
        let sol = solve_soliton(&fixture.presentation, &prob, fixture.contact.as_ref())?;
        let assignment = flags.assignment(&fixture);
        let class = classify_quotient(&sol.lambda, &assignment)?;
        let mut report = Report::new(format!("classification: {}", fixture.presentation.name));
        let sec = report.section("classify", format!("{kind} soliton"));
        sec.info("lambda", sol.lambda.to_string());
        sec.info("classification", class.to_string());
        Ok(report)
    }
}

struct Sub;

impl Command for Sub {
    fn name(&self) -> &'static str {
        "sub"
    }

    fn about(&self) -> &'static str {
        "adapted submanifold: induce, umbilicity, Gauss check, phi split"
    }

    fn clap(&self) -> clap::Command {
        common_args(
            clap::Command::new(self.name())
                .about(self.about())
                .arg(target_arg())
                .arg(arg("tangent", "tangent subframe, e.g. e1,e3,xi")),
        )
    }

    fn run(&self, matches: &ArgMatches) -> Result<Report> {
        let fixture = resolve_target(matches)?;
        let flags = Flags::from(matches)?;
        let m = &fixture.presentation;
        let idx = tangent_indices(&fixture, matches)?;
        let sub = induce(m, &flags.connection, &idx)?;
        let names = m.frame_names();
        let tan_names: Vec<String> = idx.iter().map(|&i| names[i].clone()).collect();

        let mut report = Report::new(format!("submanifold of {}", m.name));
        let sec = report.section("sub", format!("tangent {{{}}}", tan_names.join(", ")));
        let umb = umbilicity(&sub);
        let h_disp: Vec<String> = sub
            .normal_idx
            .iter()
            .enumerate()
            .filter(|(u, _)| !umb.h_mean[*u].is_zero())
            .map(|(u, &amb)| format!("({})*{}", umb.h_mean[u], names[amb]))
            .collect();
        sec.info("umbilicity", umb.to_string());
        sec.info(
            "mean_curvature",
            if h_disp.is_empty() { "0".to_string() } else { h_disp.join(" + ") },
        );
        let nabla = m.connection(&flags.connection)?;
        let star = dual_connection(m, nabla)?;
        let r = curvature(m, nabla, SignConvention::Standard);
        let rs = curvature(m, &star, SignConvention::Standard);
        let gauss = gauss_check(&sub, &r, &rs)?;
        sec.check(
            "gauss",
            Verdict::from_bool_check(gauss.primal_residual_zero && gauss.dual_residual_zero),
            format!(
                "both Gauss equations hold exactly; nonzero corrections: {}",
                gauss.has_nonzero_correction
            ),
        );
        match fixture.contact.as_ref() {
            Some(ct) => {
                let phi = phi_decompose(&sub, ct);
                sec.info("phi_class", phi.class.to_string());
            }
            None => sec.info("phi_class", "no contact structure declared"),
        }
        Ok(report)
    }
}

struct Audit;

impl Command for Audit {
    fn name(&self) -> &'static str {
        "audit"
    }

    fn about(&self) -> &'static str {
        "run the per-section claim audits"
    }

    fn clap(&self) -> clap::Command {
        common_args(
            clap::Command::new(self.name())
                .about(self.about())
                .arg(target_arg())
                .arg(arg("section", "restrict to one section: 2..8")),
        )
    }

    fn run(&self, matches: &ArgMatches) -> Result<Report> {
        let fixture = resolve_target(matches)?;
        let flags = Flags::from(matches)?;
        let cx = AuditContext::new(&fixture, flags.source).with_assignment(flags.assign_cli.clone());
        let only_owned = matches
            .try_get_one::<String>("section")
            .ok()
            .flatten()
            .map(|s| if s.starts_with('s') { s.clone() } else { format!("s{s}") });
        let sections = run_audit(&cx, only_owned.as_deref())?;
        if sections.is_empty() {
            return Err(Error::Cli(match only_owned {
                Some(id) => format!("section `{id}` does not exist"),
                None => "no applicable audit sections".into(),
            }));
        }
        let mut report = Report::new(format!("claim audit: {}", fixture.presentation.name));
        for s in sections {
            report.push_section(s);
        }
        Ok(report)
    }
}

struct Oracle;

impl Command for Oracle {
    fn name(&self) -> &'static str {
        "oracle"
    }

    fn about(&self) -> &'static str {
        "numerical cross-validation against the coordinate chart"
    }

    fn clap(&self) -> clap::Command {
        common_args(
            clap::Command::new(self.name())
                .about(self.about())
                .arg(target_arg())
                .arg(arg("points", "number of sample points (default 10)"))
                .arg(arg("step", "finite-difference step (default 1e-4)"))
                .arg(arg("tol", "tolerance (default 1e-5)"))
                .arg(arg("seed", "sequence seed (default 0)")),
        )
    }

    fn run(&self, matches: &ArgMatches) -> Result<Report> {
        let fixture = resolve_target(matches)?;
        let chart = oracle::chart_for(&fixture.presentation.name)
            .ok_or_else(|| Error::NoChart(fixture.presentation.name.clone()))?;
        let get_num = |key: &str, default: f64| -> Result<f64> {
            match matches.try_get_one::<String>(key).ok().flatten() {
                Some(s) => s
                    .parse::<f64>()
                    .map_err(|_| Error::Cli(format!("bad value for --{key}: `{s}`"))),
                None => Ok(default),
            }
        };
        let points = get_num("points", oracle::DEFAULT_POINTS as f64)? as usize;
        let step = get_num("step", oracle::DEFAULT_STEP)?;
        let tol = get_num("tol", oracle::DEFAULT_TOL)?;
        let seed = get_num("seed", 0.0)? as usize;
        let rep = oracle::cross_validate(&fixture, chart.as_ref(), points, step, tol, seed)?;
        let mut report = Report::new(format!("oracle cross-validation: {}", rep.fixture));
        let sec = report.section(
            "oracle",
            format!("{} points, step {:e}, tol {:e}", rep.points, rep.step, rep.tol),
        );
        for q in &rep.quantities {
            let c = sec.check(
                q.label.clone(),
                Verdict::from_bool_check(q.pass),
                format!("max deviation {:.3e}", q.max_deviation),
            );
            if !q.pass {
                c.tagged(format!("worst at {}", q.worst));
            }
        }
        sec.check(
            "overall",
            Verdict::from_bool_check(rep.pass()),
            "all quantities within tolerance",
        );
        Ok(report)
    }
}
