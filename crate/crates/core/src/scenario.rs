//! Scenario files: a field, a list of factors and a list of actions run
//! against the assembled algebra. Running one yields a certificate whose
//! witnesses can be re-verified later.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{AlgElement, QuaternionDesc};
use crate::field::FieldCtx;
use crate::involution::PlusVerdict;
use crate::json::{element_from_map, element_hash, element_to_map, parse_element, render_all};
use crate::structure::{
    check_inseparable, cor_ia_check, count_witness, describe_subalgebra, exm1_partial, isotropy_witness,
    met_isotropy_vector, nonuniqueness_extend, pos_iterate, quat_subalgebra_containing, represents,
    DecomposedAlgebra, FactorSpec, QuatInvolution, QuatSearchOptions,
};
use crate::{Error, Result};

pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub field: FieldSpec,
    #[serde(default)]
    pub factors: Vec<FactorJson>,
    pub actions: Vec<Action>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_budget: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub vars: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum FactorJson {
    Quat { alpha: String, beta: String, involution: QuatInvolution },
    M2t,
}

/// One step. Element arguments use the syntax of [`parse_element`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "action", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Action {
    Build {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        expect: Option<Value>,
    },
    CheckInseparable {
        /// Defaults to v_0, ..., v_{n-1}.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        generators: Option<Vec<String>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        expect: Option<Value>,
    },
    Lemma3 {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        expect: Option<Value>,
    },
    Pos {
        x: String,
        y: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        cap: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        expect: Option<Value>,
    },
    Met {
        x: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        expect: Option<Value>,
    },
    WitnessIsotropy {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        expect: Option<Value>,
    },
    Represents {
        alpha: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        expect: Option<Value>,
    },
    CorIa {
        x: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        expect: Option<Value>,
    },
    QuatEmbed {
        x: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        max_trials: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        expect: Option<Value>,
    },
    Count {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        expect: Option<Value>,
    },
    Exm1 {
        alpha: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        expect: Option<Value>,
    },
}

impl Action {
    pub fn name(&self) -> &'static str {
        match self {
            Action::Build { .. } => "build",
            Action::CheckInseparable { .. } => "check-inseparable",
            Action::Lemma3 { .. } => "lemma3",
            Action::Pos { .. } => "pos",
            Action::Met { .. } => "met",
            Action::WitnessIsotropy { .. } => "witness-isotropy",
            Action::Represents { .. } => "represents",
            Action::CorIa { .. } => "cor-ia",
            Action::QuatEmbed { .. } => "quat-embed",
            Action::Count { .. } => "count",
            Action::Exm1 { .. } => "exm1",
        }
    }

    pub fn expect(&self) -> Option<&Value> {
        match self {
            Action::Build { expect }
            | Action::CheckInseparable { expect, .. }
            | Action::Lemma3 { expect }
            | Action::Pos { expect, .. }
            | Action::Met { expect, .. }
            | Action::WitnessIsotropy { expect }
            | Action::Represents { expect, .. }
            | Action::CorIa { expect, .. }
            | Action::QuatEmbed { expect, .. }
            | Action::Count { expect }
            | Action::Exm1 { expect, .. } => expect.as_ref(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub element: BTreeMap<String, String>,
    pub sha256: String,
}

impl Witness {
    fn of(x: &AlgElement) -> Witness {
        Witness { element: element_to_map(x), sha256: element_hash(x) }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ActionResult {
    pub index: usize,
    pub action: String,
    /// Every internal check of the action passed.
    pub verified: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub result: Value,
    #[serde(default)]
    pub witnesses: BTreeMap<String, Witness>,
    pub expectation_met: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub version: String,
    pub seed: u64,
    pub scenario: Scenario,
    pub results: Vec<ActionResult>,
    pub all_expectations_met: bool,
}

/// Why a run did not succeed; mapped onto process exit codes by the CLI.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    Parse(String),
    Verification(String),
    DegreeOverflow(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Parse(_) => 2,
            Failure::DegreeOverflow(_) => 3,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Parse(m) => write!(f, "parse error: {m}"),
            Failure::Verification(m) => write!(f, "verification failure: {m}"),
            Failure::DegreeOverflow(m) => write!(f, "degree overflow: {m}"),
        }
    }
}

impl Scenario {
    pub fn from_json(text: &str) -> std::result::Result<Scenario, Failure> {
        serde_json::from_str(text).map_err(|e| Failure::Parse(e.to_string()))
    }

    /// Field with the budget from `budget_override`, then the scenario, then the default.
    pub fn field(&self, budget_override: Option<u32>) -> Result<FieldCtx> {
        match budget_override.or(self.degree_budget) {
            Some(b) => FieldCtx::with_budget(&self.field.vars, b),
            None => FieldCtx::new(&self.field.vars),
        }
    }

    pub fn factor_specs(&self, ctx: &FieldCtx) -> Result<Vec<FactorSpec>> {
        self.factors
            .iter()
            .map(|f| {
                Ok(match f {
                    FactorJson::Quat { alpha, beta, involution } => FactorSpec::Quat {
                        alpha: ctx.parse(alpha)?,
                        beta: ctx.parse(beta)?,
                        involution: *involution,
                    },
                    FactorJson::M2t => FactorSpec::M2T,
                })
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct RunOptions {
    pub seed: Option<u64>,
    pub degree_budget: Option<u32>,
    pub timings: bool,
}

struct Env {
    ctx: FieldCtx,
    d: Option<DecomposedAlgebra>,
    seed: u64,
}

impl Env {
    fn d(&self) -> Result<&DecomposedAlgebra> {
        self.d.as_ref().ok_or_else(|| Error::WrongShape("scenario has no factors".into()))
    }
}

fn classify(e: &Error) -> Failure {
    match e {
        Error::DegreeOverflow { .. } => Failure::DegreeOverflow(e.to_string()),
        Error::Parse(m) => Failure::Parse(m.clone()),
        _ => Failure::Verification(e.to_string()),
    }
}

fn setup(s: &Scenario, opts: RunOptions) -> std::result::Result<Env, Failure> {
    let ctx = s.field(opts.degree_budget).map_err(|e| Failure::Parse(e.to_string()))?;
    let specs = s.factor_specs(&ctx).map_err(|e| classify(&e))?;
    let d = if specs.is_empty() {
        None
    } else {
        Some(DecomposedAlgebra::new(&ctx, &specs).map_err(|e| match e {
            Error::DegreeOverflow { .. } => classify(&e),
            other => Failure::Parse(other.to_string()),
        })?)
    };
    let seed = opts.seed.or(s.seed).unwrap_or(DEFAULT_SEED);
    Ok(Env { ctx, d, seed })
}

/// Runs every action in order. A certificate is returned even when some
/// expectation fails; only malformed input and degree overflow abort.
pub fn run(s: &Scenario, opts: RunOptions) -> std::result::Result<Certificate, Failure> {
    let env = setup(s, opts)?;
    let mut results = Vec::with_capacity(s.actions.len());
    for (index, action) in s.actions.iter().enumerate() {
        let start = Instant::now();
        let outcome = run_action(&env, action);
        let elapsed_ms = opts.timings.then(|| start.elapsed().as_millis() as u64);
        let (verified, error, result, witnesses) = match outcome {
            Ok((result, witnesses)) => (true, None, result, witnesses),
            Err(e) => match classify(&e) {
                Failure::Verification(_) => (false, Some(format!("{e:?}")), Value::Null, BTreeMap::new()),
                f => return Err(f),
            },
        };
        let expectation_met = match action.expect() {
            None => verified,
            Some(exp) => expectation_holds(exp, &result, error.as_deref()),
        };
        results.push(ActionResult {
            index,
            action: action.name().to_string(),
            verified,
            error,
            result,
            witnesses,
            expectation_met,
            elapsed_ms,
        });
    }
    let all_expectations_met = results.iter().all(|r| r.expectation_met);
    Ok(Certificate {
        version: crate::VERSION.to_string(),
        seed: env.seed,
        scenario: s.clone(),
        results,
        all_expectations_met,
    })
}

/// Every key of `expect` must equal the same key of `result`; the key
/// `error` matches the debug name of the error variant.
fn expectation_holds(expect: &Value, result: &Value, error: Option<&str>) -> bool {
    let Some(obj) = expect.as_object() else {
        return false;
    };
    obj.iter().all(|(k, v)| {
        if k == "error" {
            match (v.as_str(), error) {
                (Some(want), Some(got)) => got.starts_with(want),
                _ => false,
            }
        } else {
            error.is_none() && result.get(k) == Some(v)
        }
    })
}

type Outcome = (Value, BTreeMap<String, Witness>);

fn elem(env: &Env, text: &str) -> Result<AlgElement> {
    parse_element(env.d()?, text)
}

fn run_action(env: &Env, action: &Action) -> Result<Outcome> {
    let mut w = BTreeMap::new();
    let result = match action {
        Action::Build { .. } => {
            let d = env.d()?;
            let pf = d.pfister()?;
            json!({
                "n": d.n(),
                "dim": d.algebra().dim(),
                "orthogonal": d.involution().is_orthogonal(),
                "pfister": render_all(pf.generators()),
                "i_invariant": d.i_invariant()?,
            })
        }
        Action::CheckInseparable { generators, .. } => {
            let d = env.d()?;
            let gens = match generators {
                Some(g) => g.iter().map(|t| elem(env, t)).collect::<Result<Vec<_>>>()?,
                None => (0..d.n()).map(|i| d.v(i)).collect(),
            };
            let s = describe_subalgebra(d, &gens)?;
            for (i, g) in gens.iter().enumerate() {
                w.insert(format!("generator{i}"), Witness::of(g));
            }
            json!({ "dim": s.dim(), "flags": s.flags, "inseparable": s.is_inseparable() })
        }
        Action::Lemma3 { .. } => {
            let d = env.d()?;
            let (s1, s2) = nonuniqueness_extend(d)?;
            for (tag, s) in [("s1", &s1), ("s2", &s2)] {
                for (i, g) in s.generators().iter().enumerate() {
                    w.insert(format!("{tag}_generator{i}"), Witness::of(g));
                }
            }
            json!({
                "distinct": !s1.same_span(&s2),
                "s1_inseparable": s1.is_inseparable(),
                "s2_inseparable": s2.is_inseparable(),
            })
        }
        Action::Pos { x, y, cap, .. } => {
            let d = env.d()?;
            let (x, y) = (elem(env, x)?, elem(env, y)?);
            let r = pos_iterate(d, &x, &y, *cap)?;
            w.insert("power".into(), Witness::of(&r.power));
            json!({ "k": r.k })
        }
        Action::Met { x, .. } => {
            let d = env.d()?;
            let m = met_isotropy_vector(d, &elem(env, x)?, None)?;
            w.insert("y".into(), Witness::of(&m.y));
            w.insert("z".into(), Witness::of(&m.z));
            json!({ "r": m.r })
        }
        Action::WitnessIsotropy { .. } => {
            let d = env.d()?;
            let found = isotropy_witness(d)?;
            if let Some(iw) = &found {
                w.insert("z".into(), Witness::of(&iw.z));
            }
            json!({ "present": found.is_some(), "i_invariant": d.i_invariant()? })
        }
        Action::Represents { alpha, .. } => {
            let d = env.d()?;
            let r = represents(d, &env.ctx.parse(alpha)?)?;
            if let Some(x) = r.witness() {
                w.insert("x".into(), Witness::of(x));
            }
            json!({ "represented": r.is_yes() })
        }
        Action::CorIa { x, .. } => {
            let d = env.d()?;
            let c = cor_ia_check(d, &elem(env, x)?)?;
            json!({ "i_before": c.i_before, "i_after": c.i_after, "holds": c.holds(d.n()) })
        }
        Action::QuatEmbed { x, max_trials, .. } => {
            let d = env.d()?;
            let s = d.default_inseparable()?;
            let mut opts = QuatSearchOptions { seed: env.seed, ..QuatSearchOptions::default() };
            if let Some(t) = max_trials {
                opts.max_trials = *t;
            }
            let q = quat_subalgebra_containing(d, &elem(env, x)?, &s, opts)?;
            w.insert("u".into(), Witness::of(&q.desc.u));
            w.insert("x_shifted".into(), Witness::of(&q.desc.v));
            json!({
                "lambda": q.lambda.render(),
                "alpha": q.desc.alpha.render(),
                "beta": q.desc.beta.render(),
                "method": format!("{:?}", q.method),
            })
        }
        Action::Count { .. } => {
            let d = env.d()?;
            let x = count_witness(d)?;
            w.insert("x".into(), Witness::of(&x));
            json!({ "found": true, "in_alt_plus_f": false })
        }
        Action::Exm1 { alpha, .. } => {
            let r = exm1_partial(&env.ctx, &env.ctx.parse(alpha)?)?;
            if !r.all_checks_pass() {
                return Err(Error::ContractViolation(format!("example checks failed: {r:?}")));
            }
            serde_json::to_value(&r).expect("report serializes")
        }
    };
    Ok((result, w))
}

/// Outcome of replaying a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecheckReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl RecheckReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Rebuilds the algebra from the certificate's scenario and re-verifies
/// every witness with the library, independently of how it was found.
pub fn recheck(cert: &Certificate, opts: RunOptions) -> std::result::Result<RecheckReport, Failure> {
    let env = setup(&cert.scenario, opts)?;
    let mut report = RecheckReport { checked: 0, failures: Vec::new() };
    for (r, action) in cert.results.iter().zip(&cert.scenario.actions) {
        if r.action != action.name() {
            return Err(Failure::Parse(format!("result {} does not match its action", r.index)));
        }
        if r.witnesses.is_empty() {
            continue;
        }
        let d = env.d().map_err(|e| Failure::Parse(e.to_string()))?;
        let mut els = BTreeMap::new();
        for (name, wit) in &r.witnesses {
            let x = element_from_map(d.algebra(), &wit.element).map_err(|e| Failure::Parse(e.to_string()))?;
            if element_hash(&x) != wit.sha256 {
                report.failures.push(format!("action {}: hash mismatch for {name}", r.index));
            }
            els.insert(name.clone(), x);
        }
        report.checked += els.len();
        match verify_witnesses(&env, d, action, r, &els) {
            Ok(true) => {}
            Ok(false) => report.failures.push(format!("action {} ({}): witness check failed", r.index, r.action)),
            Err(e) => match classify(&e) {
                Failure::Verification(m) => report.failures.push(format!("action {}: {m}", r.index)),
                f => return Err(f),
            },
        }
    }
    Ok(report)
}

fn verify_witnesses(
    env: &Env,
    d: &DecomposedAlgebra,
    action: &Action,
    r: &ActionResult,
    w: &BTreeMap<String, AlgElement>,
) -> Result<bool> {
    let sigma = d.involution();
    let get = |k: &str| w.get(k).ok_or_else(|| Error::Parse(format!("missing witness {k}")));
    let isotropic = |z: &AlgElement| -> Result<bool> { Ok(!z.is_zero() && sigma.apply(z)?.mul(z)?.is_zero()) };
    Ok(match action {
        Action::CheckInseparable { .. } => {
            let gens: Vec<AlgElement> = (0..w.len()).map(|i| get(&format!("generator{i}")).cloned()).collect::<Result<_>>()?;
            let sub = d.algebra().generated_subalgebra(&gens)?;
            let flags = check_inseparable(d, &sub)?;
            r.result.get("inseparable") == Some(&Value::Bool(flags.verdict()))
        }
        Action::Lemma3 { .. } => {
            let collect = |tag: &str| -> Result<Vec<AlgElement>> {
                let mut out = Vec::new();
                while let Some(x) = w.get(&format!("{tag}_generator{}", out.len())) {
                    out.push(x.clone());
                }
                Ok(out)
            };
            let s1 = d.algebra().generated_subalgebra(&collect("s1")?)?;
            let s2 = d.algebra().generated_subalgebra(&collect("s2")?)?;
            let ok1 = check_inseparable(d, &s1)?.verdict();
            let ok2 = check_inseparable(d, &s2)?.verdict();
            let distinct = !s1.same_span(&s2);
            r.result.get("distinct") == Some(&Value::Bool(distinct))
                && r.result.get("s1_inseparable") == Some(&Value::Bool(ok1))
                && r.result.get("s2_inseparable") == Some(&Value::Bool(ok2))
        }
        Action::Pos { x, y, .. } => {
            let x = elem(env, x)?;
            let xy = x.mul(&elem(env, y)?)?;
            let k = r.result.get("k").and_then(Value::as_u64).ok_or_else(|| Error::Parse("missing k".into()))?;
            let p = get("power")?;
            *p == xy.pow(k as u32)? && sigma.sym_plus_member(p)?.is_yes() && p.commutes_with(&x)?
        }
        Action::Met { x, .. } => {
            let x = elem(env, x)?;
            let z = get("z")?;
            let y = get("y")?;
            isotropic(z)? && z.commutes_with(&x)? && y.square()?.is_one() && y.is_scalar().is_none()
        }
        Action::WitnessIsotropy { .. } => isotropic(get("z")?)?,
        Action::Represents { alpha, .. } => {
            let x = get("x")?;
            let a = env.ctx.parse(alpha)?;
            !x.is_zero() && sigma.is_symmetric(x)? && x.square()? == d.algebra().scalar(&a)
        }
        Action::QuatEmbed { x, .. } => {
            let x = elem(env, x)?;
            let u = get("u")?.clone();
            let v = get("x_shifted")?.clone();
            let a = u.square()?.add(&u)?.is_scalar();
            let b = v.square()?.is_scalar();
            let (Some(alpha), Some(beta)) = (a, b) else {
                return Ok(false);
            };
            let desc = QuaternionDesc { alpha, beta, one: d.algebra().one(), w: u.mul(&v)?, u, v };
            if desc.verify().is_err() {
                return Ok(false);
            }
            let sub = d.algebra().generated_subalgebra(&[desc.u.clone(), desc.v.clone()])?;
            let mut stable = sub.dim() == 4 && sub.contains(&x)?;
            for e in sub.basis() {
                stable &= sub.contains(&sigma.apply(&e)?)?;
            }
            stable && sigma.is_symmetric(&desc.u)?
        }
        Action::Count { .. } => {
            let x = get("x")?;
            let sq = match sigma.sym_plus_member(x)? {
                PlusVerdict::Yes(c) => c,
                PlusVerdict::No(_) => return Ok(false),
            };
            !sq.is_zero() && sq.is_square()?.is_none() && sigma.alt_plus_f_member(x)?.is_none()
        }
        Action::Build { .. } | Action::CorIa { .. } | Action::Exm1 { .. } => true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const LEMMA3: &str = r#"{
        "field": {"vars": ["a", "b", "c", "d"]},
        "factors": [
            {"type": "quat", "alpha": "a", "beta": "b", "involution": "tau"},
            {"type": "quat", "alpha": "c", "beta": "d", "involution": "tau"},
            {"type": "m2t"}
        ],
        "actions": [
            {"action": "build", "expect": {"i_invariant": 1}},
            {"action": "lemma3", "expect": {"distinct": true}},
            {"action": "witness-isotropy", "expect": {"present": true}},
            {"action": "represents", "alpha": "b + d", "expect": {"represented": true}},
            {"action": "represents", "alpha": "a", "expect": {"represented": false}},
            {"action": "met", "x": "v0"},
            {"action": "cor-ia", "x": "v0", "expect": {"i_before": 1, "i_after": 2}},
            {"action": "count"}
        ]
    }"#;

    #[test]
    fn run_and_recheck() {
        let s = Scenario::from_json(LEMMA3).unwrap();
        let cert = run(&s, RunOptions::default()).unwrap();
        assert!(cert.all_expectations_met, "{:#?}", cert.results);
        let again = run(&s, RunOptions::default()).unwrap();
        assert_eq!(serde_json::to_string(&cert).unwrap(), serde_json::to_string(&again).unwrap());
        let rep = recheck(&cert, RunOptions::default()).unwrap();
        assert!(rep.ok(), "{:?}", rep.failures);
        assert!(rep.checked > 5);
    }

    #[test]
    fn tampered_certificate_fails_recheck() {
        let s = Scenario::from_json(LEMMA3).unwrap();
        let mut cert = run(&s, RunOptions::default()).unwrap();
        let r = cert.results.iter_mut().find(|r| r.action == "count").unwrap();
        let wit = r.witnesses.get_mut("x").unwrap();
        wit.element.insert("1⊗1⊗e11".into(), "1".into());
        assert!(!recheck(&cert, RunOptions::default()).unwrap().ok());
    }

    #[test]
    fn malformed_input() {
        assert!(matches!(Scenario::from_json("{"), Err(Failure::Parse(_))));
        let bad = r#"{"field": {"vars": ["a"]}, "actions": [{"action": "nope"}]}"#;
        assert!(matches!(Scenario::from_json(bad), Err(Failure::Parse(_))));
    }

    #[test]
    fn expectation_on_error() {
        let text = r#"{"field": {"vars": ["x","y","z","w"]},
            "factors": [{"type": "quat", "alpha": "x", "beta": "y", "involution": "tau"},
                        {"type": "quat", "alpha": "z", "beta": "w", "involution": "tau"}],
            "actions": [{"action": "met", "x": "v0", "expect": {"error": "NotIsotropic"}},
                        {"action": "witness-isotropy", "expect": {"present": true}}]}"#;
        let cert = run(&Scenario::from_json(text).unwrap(), RunOptions::default()).unwrap();
        assert!(cert.results[0].expectation_met);
        assert!(!cert.results[1].expectation_met);
        assert!(!cert.all_expectations_met);
    }

    #[test]
    fn degree_overflow_is_reported() {
        let text = r#"{"field": {"vars": ["a","b"]}, "degree_budget": 1,
            "factors": [{"type": "quat", "alpha": "a^3", "beta": "b", "involution": "tau"}],
            "actions": [{"action": "build"}]}"#;
        let err = run(&Scenario::from_json(text).unwrap(), RunOptions::default()).unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }
}
