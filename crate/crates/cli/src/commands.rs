use std::path::Path;

use serde_json::{json, Value};
use sympiso::algebra::RingSpec;
use sympiso::isometry::{
    closure, rmon_between, rmon_group, symp_between, symp_group, verify_structure_theorem, CodeMapWitnessRepr, Flavor,
    MonomialMap, MonomialMapRepr, OrbitAction,
};
use sympiso::matrix::{Matrix, MatrixRepr};
use sympiso::pauli::{code_to_stabilizer, parse_pauli, PauliOperator, PauliRepr};
use sympiso::quantum::{
    clifford_lift_sl2, lcp_verify, lu_witness, rank_profile, satisfies_contract, stabilizer_state_basis, StateVector,
};
use sympiso::stabcode::{parse_code, CodeFile, StabilizerCode};
use sympiso::worked::{run_example, EXAMPLE_NAMES};
use sympiso::{Error, Limits, Result};

use crate::report::{Assertion, Outcome};
use crate::{CodeCmd, Command, FlavorArg, IsoCmd, PaperCmd, PauliCmd, QuantumCmd, StabCmd};

type Run = Result<(Outcome, Vec<Vec<u8>>)>;

fn read(path: &Path, inputs: &mut Vec<Vec<u8>>) -> Result<String> {
    let bytes = std::fs::read(path).map_err(|e| Error::Malformed(format!("cannot read {}: {e}", path.display())))?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| Error::Malformed(format!("{} is not UTF-8", path.display())))?;
    inputs.push(bytes);
    Ok(text)
}

fn read_code(path: &Path, inputs: &mut Vec<Vec<u8>>) -> Result<StabilizerCode> {
    parse_code(&read(path, inputs)?)
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn flavor(f: FlavorArg) -> Flavor {
    match f {
        FlavorArg::Sl => Flavor::Sl,
        FlavorArg::Gl => Flavor::Gl,
    }
}

fn matrix_lines(m: &Matrix) -> Vec<String> {
    m.to_string().lines().map(|l| format!("  {l}")).collect()
}

pub fn run(cmd: &Command, limits: &Limits) -> (String, Run) {
    let mut inputs = Vec::new();
    let (name, out) = match cmd {
        Command::Code(c) => code(c, limits, &mut inputs),
        Command::Iso(c) => iso(c, limits, &mut inputs),
        Command::Pauli(c) => pauli(c),
        Command::Stab(c) => stab(c, limits, &mut inputs),
        Command::Quantum(c) => quantum(c, limits, &mut inputs),
        Command::Paper(c) => paper(c, limits),
    };
    (name.to_string(), out.map(|o| (o, inputs)))
}

fn code(cmd: &CodeCmd, limits: &Limits, inputs: &mut Vec<Vec<u8>>) -> (&'static str, Result<Outcome>) {
    match cmd {
        CodeCmd::Check { file } => ("code check", (|| {
            let c = read_code(file, inputs)?;
            let so = c.is_self_orthogonal();
            let dual = c.dual();
            let d = if so { Some(c.min_distance(limits)?) } else { None };
            let mut lines = vec![
                format!("ring {}, n = {}, k = {}", c.spec(), c.n(), c.k()),
                format!("self-orthogonal: {so}"),
                format!("self-dual: {}", c.is_self_dual()),
                format!("dual generators ({} rows):", dual.k()),
            ];
            lines.extend(matrix_lines(dual.generators()));
            if let Some(d) = d {
                lines.push(format!("minimum distance: {d}"));
            }
            Ok(Outcome {
                results: json!({
                    "ring": c.spec().to_string(), "n": c.n(), "k": c.k(),
                    "self_orthogonal": so, "self_dual": c.is_self_dual(),
                    "dual": to_value(&CodeFile::from_code(&dual)), "min_distance": d,
                }),
                assertions: vec![Assertion::holds("self-orthogonal", so)],
                lines,
                raw_text: None,
            })
        })()),
        CodeCmd::Concat { file, times } => ("code concat", (|| {
            let c = read_code(file, inputs)?.concat(*times)?;
            Ok(code_outcome(&c))
        })()),
        CodeCmd::Lift { file, ring } => ("code lift", (|| {
            let target: RingSpec = ring.parse()?;
            let c = read_code(file, inputs)?.socle_lift(target)?;
            Ok(code_outcome(&c))
        })()),
    }
}

fn code_outcome(c: &StabilizerCode) -> Outcome {
    let file = CodeFile::from_code(c);
    Outcome { results: json!({ "code": to_value(&file) }), raw_text: Some(file.to_text()), ..Outcome::default() }
}

fn iso(cmd: &IsoCmd, limits: &Limits, inputs: &mut Vec<Vec<u8>>) -> (&'static str, Result<Outcome>) {
    match cmd {
        IsoCmd::Symp { file, opts } => ("iso symp", (|| {
            let c = read_code(file, inputs)?;
            let g = symp_group(&c, limits)?;
            let mut lines = vec![format!("|Symp(C)| = {}", g.order()), format!("{} generators", g.generators().len())];
            for m in g.generators() {
                lines.extend(matrix_lines(m));
                lines.push(String::new());
            }
            let verified = g.verify_axioms();
            Ok(Outcome {
                results: to_value(&g.report(opts.elements)),
                assertions: vec![Assertion::holds("closed under products and inverses", verified)],
                lines,
                raw_text: None,
            })
        })()),
        IsoCmd::Mon { file, flavor: f, opts } => ("iso mon", (|| {
            let c = read_code(file, inputs)?;
            let r = rmon_group(&c, flavor(*f), limits)?;
            let symp = symp_group(&c, limits)?;
            let lines = vec![
                format!("|rMon_{}(C)| = {}", if *f == FlavorArg::Sl { "SL" } else { "GL" }, r.group.order()),
                format!("monomial maps restricting to an automorphism: {}", r.map_count),
                format!("|Symp(C)| = {}", symp.order()),
            ];
            let witnesses: Vec<Value> = if opts.elements {
                r.witnesses
                    .iter()
                    .map(|(b, m)| json!({ "b": to_value(&MatrixRepr::from(b)), "map": to_value(&MonomialMapRepr::from(m)) }))
                    .collect()
            } else {
                Vec::new()
            };
            Ok(Outcome {
                results: json!({
                    "group": to_value(&r.group.report(opts.elements)),
                    "map_count": r.map_count.to_string(),
                    "symp_order": symp.order(),
                    "witnesses": witnesses,
                }),
                assertions: vec![Assertion::holds("rMon(C) ≤ Symp(C)", r.group.is_subgroup_of(&symp))],
                lines,
                raw_text: None,
            })
        })()),
        IsoCmd::Between { source, target, flavor: f } => ("iso between", (|| {
            let a = read_code(source, inputs)?;
            let b = read_code(target, inputs)?;
            let symp = symp_between(&a, &b, limits)?;
            let mon = rmon_between(&a, &b, flavor(*f), limits)?;
            let inside = mon.iter().all(|w| symp.iter().any(|s| s.b == w.b));
            let lines = vec![
                format!("symplectic isometries C → C′: {}", symp.len()),
                format!("monomial code maps C → C′: {}", mon.len()),
            ];
            Ok(Outcome {
                results: json!({
                    "symp": symp.iter().map(|w| to_value(&MatrixRepr::from(&w.b))).collect::<Vec<_>>(),
                    "monomial": mon.iter().map(|w| to_value(&CodeMapWitnessRepr::from(w))).collect::<Vec<_>>(),
                }),
                assertions: vec![Assertion::holds("monomial code maps are symplectic isometries", inside)],
                lines,
                raw_text: None,
            })
        })()),
        IsoCmd::Closure { file, action, symp } => ("iso closure", (|| {
            let c = read_code(file, inputs)?;
            let act: OrbitAction = action.parse()?;
            let start = if *symp { symp_group(&c, limits)? } else { rmon_group(&c, Flavor::Sl, limits)?.group };
            let closed = closure(&start, act, limits)?;
            let lines = vec![
                format!("start order {}", start.order()),
                format!("closure order {}", closed.order()),
                format!("already closed: {}", start.order() == closed.order()),
            ];
            Ok(Outcome {
                results: json!({
                    "start": to_value(&start.report(false)),
                    "closure": to_value(&closed.report(false)),
                    "already_closed": start.order() == closed.order(),
                }),
                assertions: vec![Assertion::holds("closure contains the start group", start.is_subgroup_of(&closed))],
                lines,
                raw_text: None,
            })
        })()),
        IsoCmd::VerifyStructure { n, ring } => ("iso verify-structure", (|| {
            let spec: RingSpec = ring.parse()?;
            let r = verify_structure_theorem(spec, *n, limits)?;
            let lines = vec![
                format!("isometries of R^{{2n}} preserving weight and form: {}", r.isometries),
                format!("SL-monomial matrices: {}", r.monomials),
            ];
            Ok(Outcome {
                results: to_value(&r),
                assertions: vec![Assertion::holds("isometry set = SL-monomial set", r.equal)],
                lines,
                raw_text: None,
            })
        })()),
    }
}

fn pauli(cmd: &PauliCmd) -> (&'static str, Result<Outcome>) {
    match cmd {
        PauliCmd::Mul { ring, ops } => ("pauli mul", (|| {
            let spec: RingSpec = ring.parse()?;
            let parsed = ops.iter().map(|t| parse_pauli(t, spec)).collect::<Result<Vec<_>>>()?;
            let mut acc = parsed[0].clone();
            for p in &parsed[1..] {
                acc = acc.mul(p)?;
            }
            Ok(Outcome {
                results: json!({ "product": to_value(&PauliRepr::from(&acc)) }),
                lines: vec![acc.to_string()],
                ..Outcome::default()
            })
        })()),
        PauliCmd::Commutes { ring, a, b } => ("pauli commutes", (|| {
            let spec: RingSpec = ring.parse()?;
            let (p, q) = (parse_pauli(a, spec)?, parse_pauli(b, spec)?);
            let c = p.commutes(&q)?;
            Ok(Outcome { results: json!({ "commutes": c }), lines: vec![c.to_string()], ..Outcome::default() })
        })()),
    }
}

fn stab(cmd: &StabCmd, limits: &Limits, inputs: &mut Vec<Vec<u8>>) -> (&'static str, Result<Outcome>) {
    match cmd {
        StabCmd::FromCode { file } => ("stab from-code", (|| {
            let c = read_code(file, inputs)?;
            let s = code_to_stabilizer(&c, limits)?;
            let gens: Vec<&PauliOperator> = s.generators().iter().collect();
            let image = s.psi_code()? == c;
            Ok(Outcome {
                results: json!({
                    "order": s.order().to_string(),
                    "generators": gens.iter().map(|p| to_value(&PauliRepr::from(*p))).collect::<Vec<_>>(),
                }),
                assertions: vec![Assertion::holds("Ψ(S) = C", image)],
                lines: std::iter::once(format!("|S| = {}", s.order())).chain(gens.iter().map(|p| p.to_string())).collect(),
                raw_text: None,
            })
        })()),
    }
}

fn read_state(path: &Path, limits: &Limits, inputs: &mut Vec<Vec<u8>>) -> Result<StateVector> {
    let text = read(path, inputs)?;
    if let Ok(v) = StateVector::from_json(&text) {
        return Ok(v);
    }
    let s = code_to_stabilizer(&parse_code(&text)?, limits)?;
    stabilizer_state_basis(&s, limits)?.state_vector()
}

fn quantum(cmd: &QuantumCmd, limits: &Limits, inputs: &mut Vec<Vec<u8>>) -> (&'static str, Result<Outcome>) {
    match cmd {
        QuantumCmd::State { file } => ("quantum state", (|| {
            let c = read_code(file, inputs)?;
            let s = code_to_stabilizer(&c, limits)?;
            let basis = stabilizer_state_basis(&s, limits)?;
            let columns: Vec<Vec<String>> =
                (0..basis.dim()).map(|j| basis.column(j).iter().map(|x| x.to_string()).collect()).collect();
            let mut lines = vec![format!("dim Q(S) = {}", basis.dim())];
            lines.extend(columns.iter().map(|col| format!("({})", col.join(", "))));
            let state = if basis.dim() == 1 { Some(to_value(&basis.state_vector()?)) } else { None };
            Ok(Outcome {
                results: json!({ "dim": basis.dim(), "columns": columns, "state": state }),
                lines,
                ..Outcome::default()
            })
        })()),
        QuantumCmd::Lcp { source, target, map } => ("quantum lcp", (|| {
            let a = read_code(source, inputs)?;
            let b = read_code(target, inputs)?;
            let m = MonomialMap::parse(&read(map, inputs)?, a.spec())?;
            let r = lcp_verify(&a, &b, &m, limits)?;
            let mut lines = vec![
                format!("S  = ⟨{}⟩", r.source_stabilizer.join(", ")),
                format!("S′ = ⟨{}⟩", r.target_stabilizer.join(", ")),
                format!("Uσ(S)U† = ⟨{}⟩", r.transformed.join(", ")),
                format!("exact group equality: {}", r.exact_group_equality),
            ];
            if let Some(p) = &r.correction {
                lines.push(format!("Pauli correction: {}", p.text));
            }
            if let Some(l) = &r.state_scalar {
                lines.push(format!("state scalar: {l}"));
            }
            Ok(Outcome {
                assertions: vec![
                    Assertion::holds("Ψ(Uσ(S)U†) = C′", r.psi_matches),
                    Assertion::holds("sign correction solvable", !r.correction_unsatisfiable),
                    Assertion::holds("U·Q(σ(S)) = Q(S′)", r.spans_equal),
                ],
                results: to_value(&r),
                lines,
                raw_text: None,
            })
        })()),
        QuantumCmd::LuWitness { a, b } => ("quantum lu-witness", (|| {
            let x = read_state(a, limits, inputs)?;
            let y = read_state(b, limits, inputs)?;
            let verdict = lu_witness(&x, &y)?;
            Ok(Outcome {
                results: json!({
                    "verdict": to_value(&verdict),
                    "text": verdict.to_string(),
                    "profiles": [to_value(&rank_profile(&x)?), to_value(&rank_profile(&y)?)],
                }),
                lines: vec![verdict.to_string()],
                ..Outcome::default()
            })
        })()),
        QuantumCmd::Lift { matrix, d } => ("quantum lift", (|| {
            if matrix.len() != 4 {
                return Err(Error::Malformed(format!("--matrix needs 4 entries, got {}", matrix.len())));
            }
            let spec = RingSpec::modular(*d)?;
            let m = Matrix::from_rows(spec, &[[matrix[0], matrix[1]], [matrix[2], matrix[3]]])?;
            let u = clifford_lift_sl2(&m)?;
            let rows: Vec<Vec<String>> =
                (0..u.rows()).map(|r| (0..u.rows()).map(|c| u.mat.get(r, c).to_string()).collect()).collect();
            let mut lines = vec![if u.scale_exp == 1 { format!("U = 1/√{d} ·") } else { "U =".to_string() }];
            lines.extend(rows.iter().map(|r| format!("  [{}]", r.join(", "))));
            Ok(Outcome {
                results: json!({ "matrix": to_value(&MatrixRepr::from(&m)), "entries": rows, "lift": to_value(&u) }),
                assertions: vec![
                    Assertion::holds("unitary", u.is_unitary()),
                    Assertion::holds("Ψ*(U P U†) = Ψ*(P)·M", satisfies_contract(&u, &m)),
                ],
                lines,
                raw_text: None,
            })
        })()),
    }
}

fn paper(cmd: &PaperCmd, limits: &Limits) -> (&'static str, Result<Outcome>) {
    let PaperCmd::Examples { only } = cmd;
    ("paper examples", (|| {
        let names: Vec<&str> = match only {
            Some(n) => vec![n.as_str()],
            None => EXAMPLE_NAMES.to_vec(),
        };
        let mut out = Outcome::default();
        let mut reports = serde_json::Map::new();
        for n in names {
            let r = run_example(n, limits)?;
            out.lines.push(format!("{}: {}", r.name, if r.pass { "pass" } else { "FAIL" }));
            for c in &r.checks {
                out.assertions.push(Assertion::compare(format!("{}: {}", r.name, c.name), c.expected.clone(), c.actual.clone()));
            }
            reports.insert(r.name.clone(), to_value(&r));
        }
        out.results = Value::Object(reports);
        Ok(out)
    })())
}
