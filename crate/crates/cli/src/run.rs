//! Executes a parsed script and renders one document per command.

use std::time::Instant;

use gpfkit_core::filtration::filtration_from_chain;
use gpfkit_core::modops::{colon_module_with_note, module_scale, partial_products};
use gpfkit_core::{
    ass_enumerate, check_iff_criterion, construct_general, construct_prime_power, exists_incomparable, gpf, verify_rpe,
    Attestation, Config, FactorizationTarget, Filtration, FiltrationKind, GpfError, Ideal, Monomial, Oracle,
    OrderingMode, PrimeIdeal, PrimeMultiset, QuotientModule, Submodule, VerifyReport,
};
use serde_json::{json, Map, Value as Json};

use crate::eval::{At, Env, EvalError, EvalResult, Scope};
use crate::syntax::{Command, Expr, Stmt};
use crate::Options;

const ORACLE_SLACK: u32 = 12;
const ORACLE_BUDGET: usize = 1 << 16;

/// Structured output of one command.
struct Doc {
    command: &'static str,
    inputs: Map<String, Json>,
    result: Json,
    lines: Vec<String>,
    attestations: Vec<String>,
    verification: Json,
    /// 0 on success, 2 when a verification failed.
    code: i32,
}

impl Doc {
    fn new(command: &'static str) -> Self {
        Doc {
            command,
            inputs: Map::new(),
            result: Json::Null,
            lines: Vec::new(),
            attestations: Vec::new(),
            verification: Json::Null,
            code: 0,
        }
    }

    fn input(&mut self, key: &str, value: impl ToString) {
        self.inputs.insert(key.into(), Json::String(value.to_string()));
    }

    fn attest<'a>(&mut self, primes: impl IntoIterator<Item = &'a PrimeIdeal>) {
        for p in primes {
            if p.attestation() != Attestation::MonomialVerified {
                let note = format!("prime {p} is {}", p.attestation());
                if !self.attestations.contains(&note) {
                    self.attestations.push(note);
                }
            }
        }
    }

    fn registry_note(&mut self, complete: bool) {
        let note = "Ass computed relative to the candidate registry".to_string();
        if !complete && !self.attestations.contains(&note) {
            self.attestations.push(note);
        }
    }

    fn to_json(&self, millis: Option<u128>, error: Option<Json>) -> Json {
        let mut obj = Map::new();
        obj.insert("command".into(), json!(self.command));
        obj.insert("inputs".into(), Json::Object(self.inputs.clone()));
        obj.insert("result".into(), self.result.clone());
        obj.insert("attestations".into(), json!(self.attestations));
        obj.insert("verification".into(), self.verification.clone());
        obj.insert("millis".into(), millis.map_or(Json::Null, |m| json!(m)));
        if let Some(e) = error {
            obj.insert("error".into(), e);
        }
        Json::Object(obj)
    }

    fn to_text(&self) -> String {
        let args: Vec<String> =
            self.inputs.iter().map(|(k, v)| format!("{k} = {}", v.as_str().unwrap_or_default())).collect();
        let mut out = format!("{} [{}]\n", self.command, args.join("; "));
        for l in &self.lines {
            out.push_str(&format!("  {l}\n"));
        }
        for a in &self.attestations {
            out.push_str(&format!("  note: {a}\n"));
        }
        out
    }
}

/// Result of running a whole script.
#[derive(Debug, Default)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn exit_code(e: &EvalError) -> i32 {
    match e {
        EvalError::Core { source: GpfError::VerificationFailed(_), .. } => 2,
        EvalError::Core { source: GpfError::RegistryIncomplete(_), .. } => 3,
        _ => 1,
    }
}

fn error_json(e: &EvalError) -> Json {
    let kind = match e {
        EvalError::Usage { .. } => "usage".to_string(),
        EvalError::Core { source, .. } => format!("{source:?}").split(['(', ' ', '{']).next().unwrap_or("").to_string(),
    };
    let message = match e {
        EvalError::Usage { message, .. } => message.clone(),
        EvalError::Core { source, .. } => source.to_string(),
    };
    json!({ "kind": kind, "message": message, "line": e.pos().line, "column": e.pos().col })
}

fn config(opts: &Options) -> Config {
    let cfg = Config::default().with_tie_break(opts.tie_break);
    match opts.max_steps {
        Some(n) => cfg.with_max_steps(n),
        None => cfg,
    }
}

pub fn execute(script: &crate::syntax::Script, opts: &Options) -> Outcome {
    let mut env = Env::new(opts.field);
    let mut out = Outcome::default();
    let cfg = config(opts);
    for st in &script.statements {
        let cmd = match &st.stmt {
            Stmt::Command(c) => c,
            decl => match env.declare(decl, st.pos) {
                Ok(echo) => {
                    if !opts.json {
                        out.stdout.push_str(&echo);
                        out.stdout.push('\n');
                    }
                    continue;
                }
                Err(e) => {
                    out.stderr.push_str(&format!("error: {e}\n"));
                    out.code = exit_code(&e);
                    return out;
                }
            },
        };
        let start = Instant::now();
        let mut doc = Doc::new(cmd.name());
        let res = env.scope(st.pos).and_then(|scope| run_command(cmd, scope, &cfg, opts, &mut doc));
        let millis = opts.timing.then(|| start.elapsed().as_millis());
        match res {
            Ok(()) => {
                if opts.json {
                    out.stdout.push_str(&doc.to_json(millis, None).to_string());
                    out.stdout.push('\n');
                } else {
                    out.stdout.push_str(&doc.to_text());
                    if let Some(ms) = millis {
                        out.stdout.push_str(&format!("  time: {ms} ms\n"));
                    }
                }
                out.code = out.code.max(doc.code);
            }
            Err(e) => {
                if opts.json {
                    out.stdout.push_str(&doc.to_json(millis, Some(error_json(&e))).to_string());
                    out.stdout.push('\n');
                }
                out.stderr.push_str(&format!("error: {} (in {}): {}\n", e.pos(), cmd.name(), strip_pos(&e)));
                out.code = exit_code(&e);
                return out;
            }
        }
    }
    out
}

fn strip_pos(e: &EvalError) -> String {
    match e {
        EvalError::Usage { message, .. } => message.clone(),
        EvalError::Core { source, .. } => source.to_string(),
    }
}

fn run_command(cmd: &Command, scope: &Scope, cfg: &Config, opts: &Options, doc: &mut Doc) -> EvalResult<()> {
    let source = scope.source();
    match cmd {
        Command::Gpf { n, m } | Command::Filtration { n, m } => {
            let (module, sub) = operands(scope, n, m, doc)?;
            let f = gpf(&sub, &module, &source, cfg).at(n.pos())?;
            doc.attest(f.filtration.primes().iter());
            doc.registry_note(f.filtration.ass_complete);
            let is_gpf = matches!(cmd, Command::Gpf { .. });
            if is_gpf {
                doc.lines.push(format!("P_M(N) = {}", f.multiset));
            }
            doc.result = json!({
                "multiset": f.multiset.to_string(),
                "factors": multiset_json(&f.multiset),
                "length": f.filtration.len(),
                "filtration": filtration_json(&f.filtration),
            });
            doc.lines.extend(filtration_lines(&f.filtration));
            let report = verify_rpe(&f.filtration, &source, cfg).at(n.pos())?;
            verification(doc, &report);
            if opts.oracle {
                let seq: Vec<String> = f.filtration.primes().iter().map(|p| p.key().to_string()).collect();
                let check = oracle_rpe(&module, &sub, &seq, cfg);
                oracle_note(doc, check);
            }
        }
        Command::Ass { n, m } => {
            let module = scope.module(m)?;
            doc.input("M", &module);
            let q = match n {
                Some(n) => {
                    let sub = scope.submodule_in(n, &module)?;
                    doc.input("N", &sub);
                    module.quotient_by(&sub).at(n.pos())?
                }
                None => module.clone(),
            };
            let a = ass_enumerate(&q, &source, cfg).at(m.pos())?;
            doc.attest(a.primes.iter());
            doc.registry_note(a.complete);
            let keys: Vec<String> = a.primes.iter().map(|p| p.to_string()).collect();
            doc.lines.push(format!("Ass = {}", a.primes));
            doc.result = json!({ "primes": keys, "complete": a.complete });
            if opts.oracle {
                oracle_note(doc, oracle_ass(&q, &keys, cfg));
            }
        }
        Command::Colon { n, ideal, m } => {
            let (module, sub) = operands(scope, n, m, doc)?;
            let i = scope.ideal(ideal)?;
            doc.input("I", &i);
            let (c, note) = colon_module_with_note(&sub, &i, &module).at(n.pos())?;
            doc.lines.push(format!("(N :_M I) = {c}"));
            if let Some(note) = note {
                doc.lines.push(note.to_string());
            }
            doc.result = json!({ "module": c.to_string(), "note": note });
            if opts.oracle {
                oracle_note(doc, oracle_colon(&module, &sub, &i, &c));
            }
        }
        Command::Exists { target, m } => {
            let module = scope.module(m)?;
            let factors = scope.factors(target)?;
            if factors.iter().any(|(_, r)| *r != 1) {
                return Err(EvalError::usage(
                    target.pos(),
                    "exists takes a product of distinct primes with exponent 1",
                ));
            }
            let primes: Vec<PrimeIdeal> = factors.into_iter().map(|(p, _)| p).collect();
            let t =
                FactorizationTarget::new(primes.iter().map(|p| (p.clone(), 1)).collect(), OrderingMode::Incomparable)
                    .at(target.pos())?;
            doc.input("target", &t);
            doc.input("M", &module);
            doc.attest(primes.iter());
            let r = exists_incomparable(&primes, &module, &source, cfg).at(target.pos())?;
            let supp: Vec<Json> = primes
                .iter()
                .zip(&r.in_support)
                .map(|(p, s)| json!({ "prime": p.to_string(), "in_support": s }))
                .collect();
            doc.lines.push(format!("exists: {}", r.holds));
            for (p, s) in primes.iter().zip(&r.in_support) {
                doc.lines.push(format!("{p} ∈ Supp(M): {s}"));
            }
            if let Some(w) = &r.witness {
                doc.lines.push(format!("witness N = {w}"));
                doc.verification = json!({ "passed": true, "method": "independent factorization of the witness" });
            }
            doc.result = json!({
                "holds": r.holds,
                "support": supp,
                "witness": r.witness.as_ref().map(|w| w.to_string()),
                "factorization": r.factorization.as_ref().map(|f| f.to_string()),
            });
        }
        Command::Construct { target, m } => construct(scope, target, m, &source, cfg, doc)?,
        Command::CheckIff { target, m } => {
            let module = scope.module(m)?;
            let t = FactorizationTarget::new(scope.factors(target)?, OrderingMode::TailMaximal).at(target.pos())?;
            doc.input("target", &t);
            doc.input("M", &module);
            doc.attest(t.factors().iter().map(|(p, _)| p));
            let r = check_iff_criterion(&t, &module, &source, cfg).at(target.pos())?;
            doc.registry_note(r.ass_complete);
            doc.lines.push(format!("P_M(aM) = a: {}", r.holds));
            let chain: Vec<String> = r.chain.iter().map(|c| c.to_string()).collect();
            doc.lines.push(format!("colon chain: {}", chain.join(" ⊆ ")));
            let mut entries = Vec::new();
            for e in &r.entries {
                doc.attest(e.ass.iter());
                if !e.holds {
                    doc.lines.push(format!("evidence: index {}: Ass = {}, expected {{{}}}", e.index, e.ass, e.prime));
                }
                let ass: Vec<String> = e.ass.iter().map(|p| p.to_string()).collect();
                entries.push(json!({ "index": e.index, "prime": e.prime.to_string(), "ass": ass, "holds": e.holds }));
            }
            let mut layers = Vec::new();
            if !r.holds {
                let ideals: Vec<Ideal> = t.expanded().iter().map(|p| p.ideal().clone()).collect();
                let parts = partial_products(&ideals).at(target.pos())?;
                let scaled =
                    parts.iter().map(|a| module_scale(a, &module)).collect::<Result<Vec<_>, _>>().at(target.pos())?;
                for i in 1..scaled.len() {
                    let q = QuotientModule::new(scaled[i - 1].clone(), scaled[i].clone()).at(target.pos())?;
                    let a = ass_enumerate(&q, &source, cfg).at(target.pos())?;
                    doc.attest(a.primes.iter());
                    doc.registry_note(a.complete);
                    doc.lines.push(format!("layer {i}: Ass(a_{}M / a_{i}M) = {}", i - 1, a.primes));
                    let ass: Vec<String> = a.primes.iter().map(|p| p.to_string()).collect();
                    layers.push(json!({ "index": i, "ass": ass }));
                }
            }
            doc.result = json!({
                "holds": r.holds,
                "entries": entries,
                "chain": chain,
                "layers": layers,
                "filtration": r.filtration.as_ref().map(filtration_json),
            });
        }
        Command::Verify { chain, primes, m } => {
            let module = scope.module(m)?;
            doc.input("M", &module);
            let mods = chain.iter().map(|e| scope.submodule_in(e, &module)).collect::<EvalResult<Vec<Submodule>>>()?;
            let ps = primes.iter().map(|e| scope.prime(e)).collect::<EvalResult<Vec<PrimeIdeal>>>()?;
            let shown: Vec<String> = mods.iter().map(|s| s.to_string()).collect();
            doc.input("chain", shown.join(" ⊂ "));
            doc.attest(ps.iter());
            let f = filtration_from_chain(&module, &mods, &ps, &source, cfg).at(m.pos())?;
            doc.registry_note(f.ass_complete);
            let report = verify_rpe(&f, &source, cfg).at(m.pos())?;
            doc.result = json!({ "kind": report.kind.to_string(), "filtration": filtration_json(&f) });
            doc.lines.extend(filtration_lines(&f));
            verification(doc, &report);
        }
    }
    Ok(())
}

fn operands(scope: &Scope, n: &Expr, m: &Expr, doc: &mut Doc) -> EvalResult<(QuotientModule, Submodule)> {
    let module = scope.module(m)?;
    let sub = scope.submodule_in(n, &module)?;
    doc.input("N", &sub);
    doc.input("M", &module);
    Ok((module, sub))
}

fn construct(
    scope: &Scope,
    target: &Expr,
    m: &Expr,
    source: &gpfkit_core::AssSource,
    cfg: &Config,
    doc: &mut Doc,
) -> EvalResult<()> {
    let module = scope.module(m)?;
    let factors = scope.factors(target)?;
    let incomparable = factors.len() > 1
        && factors.iter().all(|(_, r)| *r == 1)
        && factors.iter().enumerate().all(|(i, (p, _))| factors[i + 1..].iter().all(|(q, _)| !p.comparable(q)));
    let mode = if incomparable { OrderingMode::Incomparable } else { OrderingMode::Descending };
    let t = FactorizationTarget::new(factors, mode).at(target.pos())?;
    doc.input("target", &t);
    doc.input("M", &module);
    doc.attest(t.factors().iter().map(|(p, _)| p));
    let built = if incomparable {
        let primes: Vec<PrimeIdeal> = t.factors().iter().map(|(p, _)| p.clone()).collect();
        let r = exists_incomparable(&primes, &module, source, cfg).at(target.pos())?;
        match r.witness {
            Some(w) => Ok(w),
            None => {
                let idx = r.in_support.iter().position(|s| !s).map_or(0, |i| i + 1);
                Err(GpfError::HypothesisFailed { index: Some(idx), detail: format!("{} ∉ Supp(M)", primes[idx - 1]) })
            }
        }
    } else if let [(p, r)] = t.factors() {
        construct_prime_power(p, *r, &module, source, cfg)
    } else {
        construct_general(&t, &module, source, cfg)
    };
    match built {
        Ok(n) => {
            let f = gpf(&n, &module, source, cfg).at(target.pos())?;
            let passed = f.multiset == t.multiset();
            doc.lines.push(format!("N = {n}"));
            doc.lines.push(format!("P_M(N) = {}", f.multiset));
            doc.attest(f.filtration.primes().iter());
            doc.registry_note(f.filtration.ass_complete);
            doc.result = json!({ "constructed": true, "submodule": n.to_string(), "multiset": f.multiset.to_string() });
            doc.verification = json!({ "passed": passed, "method": "independent factorization" });
            if !passed {
                doc.code = 2;
            }
        }
        Err(GpfError::HypothesisFailed { index, detail }) => {
            let msg = GpfError::HypothesisFailed { index, detail: detail.clone() }.to_string();
            doc.lines.push(format!("not constructed: {msg}"));
            doc.result = json!({ "constructed": false, "hypothesis": { "index": index, "detail": detail } });
        }
        Err(e) => return Err(e).at(target.pos()),
    }
    Ok(())
}

fn multiset_json(m: &PrimeMultiset) -> Json {
    Json::Array(m.entries().iter().map(|(p, r)| json!({ "prime": p.to_string(), "multiplicity": r })).collect())
}

fn filtration_json(f: &Filtration) -> Json {
    let steps: Vec<Json> = f
        .steps
        .iter()
        .enumerate()
        .map(|(i, s)| {
            json!({
                "index": i + 1,
                "prime": s.prime.to_string(),
                "from": s.from.to_string(),
                "to": s.to.to_string(),
                "colon": format!("(M_{} :_M {})", i, s.prime),
            })
        })
        .collect();
    json!({ "kind": f.kind.to_string(), "modules": f.modules().iter().map(|m| m.to_string()).collect::<Vec<_>>(), "steps": steps })
}

fn filtration_lines(f: &Filtration) -> Vec<String> {
    let mut chain = match f.base() {
        Some(b) => b.to_string(),
        None => return vec!["filtration: empty".into()],
    };
    for s in &f.steps {
        chain.push_str(&format!(" ⊂[{}] {}", s.prime, s.to));
    }
    let mut lines = vec![format!("filtration ({}): {chain}", f.kind)];
    if f.kind != FiltrationKind::Rpe {
        return lines;
    }
    for (i, s) in f.steps.iter().enumerate() {
        lines.push(format!("  M_{} = (M_{} :_M {}) = {}", i + 1, i, s.prime, s.to));
    }
    lines
}

fn verification(doc: &mut Doc, r: &VerifyReport) {
    let steps: Vec<Json> = r
        .steps
        .iter()
        .map(|s| {
            json!({
                "index": s.index + 1,
                "prime": s.prime,
                "prime_extension": s.flags.prime_extension,
                "maximal": s.flags.maximal,
                "regular": s.flags.regular,
            })
        })
        .collect();
    let passed = r.passed();
    doc.lines.push(format!(
        "verification: {} ({}, {} steps)",
        if passed { "passed" } else { "FAILED" },
        r.kind,
        r.steps.len()
    ));
    for s in r.steps.iter().filter(|s| !s.flags.all()) {
        doc.lines.push(format!(
            "  step {} over {}: prime extension {}, maximal {}, regular {}",
            s.index + 1,
            s.prime,
            s.flags.prime_extension,
            s.flags.maximal,
            s.flags.regular
        ));
    }
    doc.registry_note(r.ass_complete);
    doc.verification = json!({ "passed": passed, "kind": r.kind.to_string(), "steps": steps });
    if !passed {
        doc.code = 2;
    }
}

/// `Ok(None)` means the check does not apply to this input.
type OracleCheck = Result<Option<String>, String>;

fn oracle_note(doc: &mut Doc, check: OracleCheck) {
    let (status, detail) = match check {
        Ok(Some(d)) => ("agrees", d),
        Ok(None) => ("skipped", "not a monomial input over a polynomial ring".to_string()),
        Err(d) => ("disagrees", d),
    };
    doc.lines.push(format!("oracle: {status} ({detail})"));
    if let Json::Object(v) = &mut doc.verification {
        v.insert("oracle".into(), json!({ "status": status, "detail": detail }));
    } else {
        doc.verification = json!({ "oracle": { "status": status, "detail": detail } });
    }
    if status == "disagrees" {
        doc.code = 2;
    }
}

fn load_oracle(mods: &[&Submodule]) -> Result<Option<Oracle>, String> {
    if mods[0].ring().is_quotient() || !mods.iter().all(|s| s.is_monomial()) {
        return Ok(None);
    }
    match Oracle::for_fixture(mods, ORACLE_SLACK, ORACLE_BUDGET) {
        Ok(o) => Ok(Some(o)),
        Err(GpfError::Budget(_)) => Ok(None),
        Err(e) => Err(e.to_string()),
    }
}

fn oracle_rpe(m: &QuotientModule, n: &Submodule, seq: &[String], cfg: &Config) -> OracleCheck {
    let lifted = m.submodule(n).map_err(|e| e.to_string())?;
    let Some(o) = load_oracle(&[m.top(), &lifted])? else {
        return Ok(None);
    };
    let (ft, fb) = (o.load(m.top()).map_err(|e| e.to_string())?, o.load(&lifted).map_err(|e| e.to_string())?);
    let fin: Vec<String> = match o.rpe_bruteforce(&fb, &ft, cfg.tie_break, cfg.exec) {
        Ok(s) => s.iter().map(|v| o.key(v)).collect(),
        Err(GpfError::Budget(_)) => return Ok(None),
        Err(e) => return Err(e.to_string()),
    };
    if fin == seq {
        Ok(Some(format!("brute-force RPE primes {}", fin.join(", "))))
    } else {
        Err(format!("brute-force RPE primes {} differ", fin.join(", ")))
    }
}

fn oracle_ass(q: &QuotientModule, keys: &[String], cfg: &Config) -> OracleCheck {
    let Some(o) = load_oracle(&[q.top(), q.bottom()])? else {
        return Ok(None);
    };
    let (ft, fb) = (o.load(q.top()).map_err(|e| e.to_string())?, o.load(q.bottom()).map_err(|e| e.to_string())?);
    let mut fin: Vec<String> = o.ass_bruteforce(&fb, &ft, cfg.exec).iter().map(|v| o.key(v)).collect();
    let mut sym = keys.to_vec();
    fin.sort();
    sym.sort();
    if fin == sym {
        Ok(Some(format!("brute-force Ass {{{}}}", fin.join(", "))))
    } else {
        Err(format!("brute-force Ass {{{}}} differs", fin.join(", ")))
    }
}

fn oracle_colon(m: &QuotientModule, n: &Submodule, i: &gpfkit_core::Ideal, c: &Submodule) -> OracleCheck {
    let lifted = m.submodule(n).map_err(|e| e.to_string())?;
    if i.is_zero() || !i.as_submodule().is_monomial() {
        return Ok(None);
    }
    let Some(o) = load_oracle(&[m.top(), &lifted, i.as_submodule()])? else {
        return Ok(None);
    };
    let (ft, fb) = (o.load(m.top()).map_err(|e| e.to_string())?, o.load(&lifted).map_err(|e| e.to_string())?);
    let gens: Vec<Vec<u32>> = i.canonical_generators().iter().map(|g| g.terms()[0].0.exponents().to_vec()).collect();
    let fin = o.colon_bruteforce(&fb, &gens, &ft);
    let ring = m.ring();
    let basis = o.basis_up_to(o.window());
    for (comp, e) in &basis {
        let mut v = vec![gpfkit_core::Polynomial::zero(ring); m.rank()];
        v[*comp] = gpfkit_core::Polynomial::monomial(ring, Monomial::from_exponents(e), ring.field().one());
        if c.contains_vector(&v).map_err(|e| e.to_string())? != o.member(&fin, *comp, e) {
            return Err(format!("membership of {} differs", v[*comp]));
        }
    }
    Ok(Some(format!("{} basis vectors compared", basis.len())))
}
