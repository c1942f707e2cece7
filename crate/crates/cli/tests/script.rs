use gpfkit::eval::{Env, Value};
use gpfkit::syntax::{parse, Expr, Pos, Stmt};
use gpfkit::{parse_field, run, Options};
use gpfkit_core::{Field, TieBreak};
use serde_json::Value as Json;

const CONE: &str = "
ring R = QQ[x,y,z] / (x*y - z^2, x^2 - y*z);
prime p = (x, z);
ideal a = p^2;
candidates = { p, (x,y,z) };
check-iff a in R;
";

fn json_opts() -> Options {
    Options { json: true, ..Options::default() }
}

fn docs(stdout: &str) -> Vec<Json> {
    stdout.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn cone_check_iff_is_false_with_layer_evidence() {
    let out = run(CONE, &json_opts());
    assert_eq!(out.code, 0, "{}", out.stderr);
    let d = &docs(&out.stdout)[0];
    assert_eq!(d["command"], "check-iff");
    assert_eq!(d["result"]["holds"], false);
    assert_eq!(d["result"]["layers"][1]["ass"], serde_json::json!(["(x, y, z)"]));
    assert_eq!(d["result"]["chain"][1], "(x, y, z)");
    assert!(d["attestations"][0].as_str().unwrap().contains("candidate registry"));

    let text = run(CONE, &Options::default()).stdout;
    assert!(text.contains("ring R = QQ[x,y,z] / ("));
    assert!(text.contains("prime p = (x, z);  # monomial-verified"));
    assert!(text.contains("layer 2: Ass(a_1M / a_2M) = {(x, y, z)}"));
}

#[test]
fn cone_construct_reports_the_failed_hypothesis() {
    let out = run(&format!("{CONE}construct p^2 in R;"), &json_opts());
    assert_eq!(out.code, 0);
    let d = &docs(&out.stdout)[1];
    assert_eq!(d["result"]["constructed"], false);
    assert!(d["result"]["hypothesis"]["detail"].as_str().unwrap().contains("(x, y, z)"));
}

#[test]
fn monomial_gpf_and_filtration() {
    let out = run("ring R = QQ[x,y];\ngpf (x^2, x*y) in R;", &Options::default());
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("P_M(N) = (x, y)·(x)"));
    assert!(out.stdout.contains("(x^2, x*y) ⊂[(x, y)] (x) ⊂[(x)] (1)"));
    assert!(out.stdout.contains("M_1 = (M_0 :_M (x, y)) = (x)"));

    let d = &docs(&run("ring R = QQ[x,y];\nfiltration (x^2, x*y) in R;", &json_opts()).stdout)[0];
    assert_eq!(d["result"]["length"], 2);
    assert_eq!(d["result"]["filtration"]["modules"], serde_json::json!(["(x^2, x*y)", "(x)", "(1)"]));
    assert_eq!(d["verification"]["passed"], true);
}

#[test]
fn counterexample_module() {
    let script = "
ring S = QQ[x,y];
module M = free(2) / ((x,0),(0,x));
submodule N in M = ((y,0));
gpf N in M;
construct (x,y)*(x) in M;
";
    let out = run(script, &json_opts());
    assert_eq!(out.code, 0, "{}", out.stderr);
    let d = docs(&out.stdout);
    assert_eq!(d[0]["result"]["multiset"], "(x, y)·(x)");
    assert_eq!(d[1]["result"]["constructed"], false);
    assert_eq!(d[1]["result"]["hypothesis"]["index"], 1);
}

#[test]
fn commands_on_a_polynomial_ring() {
    let script = "
ring R = QQ[x,y];
ass (x^2, x*y) in R;
colon (x^2, x*y) : (x) in R;
exists (x)*(y) in R;
exists (x)*(x, y) in R;
";
    let out = run(script, &json_opts());
    let d = docs(&out.stdout);
    assert_eq!(d[0]["result"]["primes"], serde_json::json!(["(x)", "(x, y)"]));
    assert_eq!(d[0]["result"]["complete"], true);
    assert_eq!(d[1]["result"]["module"], "(x, y)");
    assert_eq!(d[2]["result"]["holds"], true);
    assert_eq!(d[2]["result"]["witness"], "(x*y)");
    assert_eq!(out.code, 1);
    assert_eq!(d[3]["error"]["kind"], "Ordering");
}

#[test]
fn construct_variants_are_reverified() {
    let script = "
ring R = QQ[x,y,z];
construct (x,y)^2 in R;
construct (x,y)^2*(x) in R;
construct (x)*(y)*(z) in R;
";
    let out = run(script, &json_opts());
    assert_eq!(out.code, 0, "{}", out.stderr);
    let d = docs(&out.stdout);
    assert_eq!(d[0]["result"]["submodule"], "(x^2, x*y, y^2)");
    assert_eq!(d[1]["result"]["multiset"], "(x, y)^2·(x)");
    assert_eq!(d[2]["result"]["multiset"], "(x)·(y)·(z)");
    assert!(d.iter().all(|d| d["verification"]["passed"] == true));
}

#[test]
fn errors_carry_positions_and_exit_codes() {
    let out = run("ring R = QQ[x,y];\nmodule M = free(1);\ngpf M in M;", &Options::default());
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("3:5 (in gpf)") && out.stderr.contains("must be proper"), "{}", out.stderr);

    let out = run("ring R = QQ[x];\nprime p = (x);\nideal a = p^0;", &Options::default());
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("3:13: exponent must be ≥ 1"));

    let out = run("ideal a = (x);", &Options::default());
    assert!(out.code == 1 && out.stderr.contains("declare a ring first"));
    let out = run("ring R = QQ[x];\ngpf (w) in R;", &Options::default());
    assert!(out.code == 1 && out.stderr.contains("unknown variable 'w'"));
    let out = run("ring R = QQ[x];\ngpf b in R;", &Options::default());
    assert!(out.code == 1 && out.stderr.contains("unknown identifier 'b'"));
    let out = run("ring R = QQ[x,y];\nmodule M = free(2);\nsubmodule N in M = ((x,0),(y));", &Options::default());
    assert!(out.code == 1 && out.stderr.contains("arity mismatch"), "{}", out.stderr);
    let out = run("ring R = QQ[x];\nprime p = (x^2);", &Options::default());
    assert!(out.code == 1 && out.stderr.contains("not prime"));

    let out = run("ring R = QQ[x,y];\nverify (x^2, x*y) ⊂[(x)] (x) ⊂[(x)] R in R;", &json_opts());
    assert_eq!(out.code, 2);
    assert_eq!(docs(&out.stdout)[0]["verification"]["passed"], false);

    let out = run("ring R = QQ[x,y];\ncandidates = {(y)};\ngpf (x) in R;", &json_opts());
    assert_eq!(out.code, 3);
    assert_eq!(docs(&out.stdout)[0]["error"]["kind"], "RegistryIncomplete");
}

#[test]
fn execution_stops_at_the_first_error() {
    let out = run("ring R = QQ[x];\ngpf (1) in R;\ngpf (x) in R;", &json_opts());
    assert_eq!(out.code, 1);
    assert_eq!(docs(&out.stdout).len(), 1);
}

#[test]
fn json_output_is_deterministic() {
    let script = format!("{CONE}\nring S = QQ[x,y,z];\ngpf (x^2*y, y*z, x*z^2) in S;\nass (x*y, y*z) in S;");
    let first = run(&script, &json_opts());
    assert_eq!(first.code, 0, "{}", first.stderr);
    for _ in 0..3 {
        assert_eq!(run(&script, &json_opts()).stdout, first.stdout);
    }
    let keys: Vec<String> = docs(&first.stdout)[0].as_object().unwrap().keys().cloned().collect();
    assert_eq!(keys, ["command", "inputs", "result", "attestations", "verification", "millis"]);
    let timed = run(&script, &Options { timing: true, ..json_opts() });
    assert!(docs(&timed.stdout)[0]["millis"].is_u64());
}

#[test]
fn tie_break_and_step_limit() {
    let script = "ring R = QQ[x,y];\nfiltration (x*y) in R;";
    let lex = run(script, &json_opts());
    let rev = run(script, &Options { tie_break: TieBreak::Revlex, ..json_opts() });
    let first = |o: &gpfkit::Outcome| docs(&o.stdout)[0]["result"]["filtration"]["steps"][0]["prime"].clone();
    assert_eq!(first(&lex), "(x)");
    assert_eq!(first(&rev), "(y)");
    let factors = |o: &gpfkit::Outcome| {
        let mut f = docs(&o.stdout)[0]["result"]["factors"].as_array().unwrap().clone();
        f.sort_by_key(|v| v["prime"].to_string());
        f
    };
    assert_eq!(factors(&lex), factors(&rev));

    let out = run(script, &Options { max_steps: Some(1), ..json_opts() });
    assert_eq!(out.code, 1);
    assert_eq!(docs(&out.stdout)[0]["error"]["kind"], "MaxStepsExceeded");
}

#[test]
fn field_override() {
    assert_eq!(parse_field("QQ").unwrap(), Field::Rational);
    assert!(parse_field("Fp:8").is_err());
    assert!(parse_field("GF7").is_err());
    let opts = Options { field: Some(parse_field("Fp:7").unwrap()), ..Options::default() };
    let out = run("ring R = QQ[x,y];\nideal a = (x/2 + y);", &opts);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout, "ring R = GF(7)[x,y];\nideal a = (x + 2*y);\n");
}

#[test]
fn oracle_cross_check() {
    let script = "
ring R = QQ[x,y,z];
gpf (x^2*y, y*z^2, x*z) in R;
ass (x^2*y, y*z^2, x*z) in R;
colon (x^2*y, y*z^2, x*z) : (x, y^2) in R;
candidates = { (x^2 + y^2) };
gpf (x^2 + y^2) in R;
";
    let out = run(script, &Options { oracle: true, ..json_opts() });
    assert_eq!(out.code, 0, "{}", out.stderr);
    let d = docs(&out.stdout);
    for doc in &d[..3] {
        assert_eq!(doc["verification"]["oracle"]["status"], "agrees", "{doc}");
    }
    assert_eq!(d[3]["verification"]["oracle"]["status"], "skipped");
    assert_eq!(d[3]["attestations"][0], "prime (x^2 + y^2) is assumed");
}

fn values(text: &str) -> Vec<Value> {
    let script = parse(text).unwrap();
    let mut env = Env::new(None);
    let mut out = Vec::new();
    for st in &script.statements {
        env.declare(&st.stmt, st.pos).unwrap();
        let name = match &st.stmt {
            Stmt::Prime { name, .. } | Stmt::Ideal { name, .. } | Stmt::Module { name, .. } => name,
            Stmt::Submodule { name, .. } => name,
            _ => continue,
        };
        out.push(env.scope(st.pos).unwrap().eval(&Expr::Name(name.clone(), Pos::default())).unwrap());
    }
    out
}

fn same(a: &Value, b: &Value) -> bool {
    match (a, b) {
        (Value::Ideal(x), Value::Ideal(y)) => x.equals(y).unwrap(),
        (Value::Sub(x), Value::Sub(y)) => x.equals(y).unwrap(),
        (Value::Quot(x), Value::Quot(y)) => x.top().equals(y.top()).unwrap() && x.bottom().equals(y.bottom()).unwrap(),
        _ => false,
    }
}

#[test]
fn declarations_round_trip() {
    let script = "
ring R = QQ[x,y,z] / (x*y - z^2, x^2 - y*z);
prime p = (x, z);
ideal a = p^2 + (x*y^3 - 1/3*z);
ideal b = (2*x - y/5, z)*(x, y);
module M = free(2) / ((x,0),(0,x));
module Q = p / a;
submodule N in M = ((y,0), (z, x - y));
candidates = { p, (x,y,z) };
";
    let echo = run(script, &Options::default());
    assert_eq!(echo.code, 0, "{}", echo.stderr);
    let again = run(&echo.stdout, &Options::default());
    assert_eq!(again.stdout, echo.stdout);
    let (v1, v2) = (values(script), values(&echo.stdout));
    assert_eq!(v1.len(), 6);
    assert!(v1.iter().zip(&v2).all(|(a, b)| same(a, b)));
}

#[test]
fn empty_script_runs_nothing() {
    let out = run("", &json_opts());
    assert_eq!((out.code, out.stdout.as_str()), (0, ""));
    let out = run("# comment only\n", &Options::default());
    assert_eq!(out.code, 0);
}
