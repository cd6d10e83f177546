//! End-to-end reproductions of the worked examples, each reporting named checks
//! of computed values against the expected ones.

pub mod fixtures;

use std::collections::BTreeMap;
use std::fmt::Display;

use serde::Serialize;

use crate::algebra::{Cyclotomic, RingSpec};
use crate::error::{Error, Result};
use crate::isometry::{
    monomial_search_exhaustive, rmon_sl_between, rmon_sl_group, symp_between, symp_group, Flavor,
    MonomialMap,
};
use crate::matrix::{general_linear, Matrix};
use crate::pauli::{code_to_stabilizer, parse_pauli, StabilizerGroup};
use crate::quantum::{lcp_verify, lu_witness, matches_half_one_plus_i, rank_profile, stabilizer_state_basis, StateVector};
use crate::stabcode::{symp_inner, symp_weight, StabilizerCode};
use crate::Limits;

use fixtures::*;

pub const EXAMPLE_NAMES: [&str; 5] = ["Ex-NonEx1", "E-Ex2", "Ex-Extension2", "Ex-Ex11", "Ex-LCP"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExampleReport {
    pub name: String,
    pub checks: Vec<Check>,
    pub pass: bool,
}

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn eq(&mut self, name: &str, expected: impl Display, actual: impl Display) {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let pass = expected == actual;
        self.0.push(Check { name: name.into(), expected, actual, pass });
    }

    fn holds(&mut self, name: &str, actual: bool) {
        self.eq(name, true, actual);
    }

    fn finish(self, name: &str) -> ExampleReport {
        let pass = self.0.iter().all(|c| c.pass);
        ExampleReport { name: name.into(), checks: self.0, pass }
    }
}

fn f2() -> RingSpec {
    RingSpec::prime_field(2).expect("2 is prime")
}

fn interleaved<R: AsRef<[i64]>>(rows: &[R]) -> Result<StabilizerCode> {
    StabilizerCode::from_interleaved(&Matrix::from_rows(f2(), rows)?)
}

fn code<R: AsRef<[i64]>>(n: usize, rows: &[R]) -> Result<StabilizerCode> {
    StabilizerCode::from_rows(f2(), n, rows)
}

fn strings(s: &StabilizerGroup) -> String {
    s.generators().iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
}

fn group_from(texts: &[&str], n: usize, limits: &Limits) -> Result<StabilizerGroup> {
    let ops = texts.iter().map(|t| parse_pauli(t, f2())).collect::<Result<Vec<_>>>()?;
    StabilizerGroup::new(f2(), n, ops, limits)
}

fn complex(v: &[(i64, i64)]) -> Vec<Cyclotomic> {
    let i = Cyclotomic::root(8, 2);
    v.iter().map(|&(re, im)| &Cyclotomic::from_int(8, re) + &i.scale_int(im)).collect()
}

fn real(v: &[i64]) -> Vec<Cyclotomic> {
    v.iter().map(|&x| Cyclotomic::from_int(8, x)).collect()
}

/// Codewords `x·G` for every `x`, in the order of `x`.
fn images(g: &Matrix) -> Vec<Vec<u32>> {
    crate::matrix::all_vectors(g.spec(), g.rows()).map(|x| g.left_mul_vec(&x)).collect()
}

/// `B` with `B·G = Y` for the generator rows `G` of `code`.
fn coordinates_of(code: &StabilizerCode, rows: &Matrix) -> Result<Matrix> {
    let data: Vec<Vec<u32>> = rows
        .iter_rows()
        .map(|r| code.coordinates(r).ok_or_else(|| Error::Dimension("row outside the code".into())))
        .collect::<Result<_>>()?;
    Matrix::from_residue_rows(code.spec(), &data, code.k())
}

pub fn ex_nonex1(limits: &Limits) -> Result<ExampleReport> {
    let mut c = Checks::default();
    let c1 = interleaved(&NONEX1_N1)?;
    let c2 = interleaved(&NONEX1_N2)?;
    c.holds("im N1 and im N2 have the same canonical form", c1.canonical() == c2.canonical());
    let (g1, g2) = (c1.generators(), c2.generators());
    let (w1, w2) = (images(g1), images(g2));
    let preserved = w1.iter().zip(&w2).filter(|(a, b)| symp_weight(a) == symp_weight(b)).count();
    c.eq("codewords whose weight f preserves", 16, preserved);
    let form = (0..4).all(|i| (0..4).all(|j| symp_inner(f2(), g1.row(i), g1.row(j)) == symp_inner(f2(), g2.row(i), g2.row(j))));
    c.holds("f preserves the symplectic form", form);
    let b_f = coordinates_of(&c1, g2)?;
    c.holds("f is a symplectic isometry of C", symp_group(&c1, limits)?.contains(&b_f));
    let search = monomial_search_exhaustive(&c1, &c1, Flavor::Sl, limits)?;
    c.eq("SL-monomial maps visited", 31104, search.maps_total);
    c.eq("SL-monomial maps restricting to f", 0, search.induced.contains_key(&b_f) as u8);
    c.holds("f is not in rMon_SL(C)", !rmon_sl_group(&c1, limits)?.group.contains(&b_f));
    Ok(c.finish("Ex-NonEx1"))
}

pub fn e_ex2(limits: &Limits) -> Result<ExampleReport> {
    let mut c = Checks::default();
    let code = code(5, &EEX2_G)?;
    let symp = symp_group(&code, limits)?;
    c.eq("|Symp(C)|", EEX2_SYMP_ORDER, symp.order());
    let gl3 = general_linear(f2(), 3, limits)?;
    c.holds("Symp(C) = GL_3(F_2)", gl3.len() == symp.order() && gl3.iter().all(|m| symp.contains(m)));
    let rmon = rmon_sl_group(&code, limits)?;
    c.eq("|rMon_SL(C)|", EEX2_RMON_SL_ORDER, rmon.group.order());
    c.eq("SL-monomial maps of C onto itself", rmon.map_count, monomial_search_exhaustive(&code, &code, Flavor::Sl, limits)?.maps_matching);
    Ok(c.finish("E-Ex2"))
}

pub fn ex_extension2(limits: &Limits) -> Result<ExampleReport> {
    let mut c = Checks::default();
    let code = interleaved(&EXT2_G)?;
    let h = Matrix::from_rows(f2(), &EXT2_H)?;
    let h_code = interleaved(&EXT2_H)?;
    let tilde = interleaved(&EXT2_F)?;
    let h_tilde = Matrix::from_rows(f2(), &EXT2_H_TILDE)?;
    let h_tilde_code = interleaved(&EXT2_H_TILDE)?;
    c.holds("C^⊥ = im H", code.dual().canonical() == h_code.canonical());
    c.holds("f(C)^⊥ = im H̃", tilde.dual().canonical() == h_tilde_code.canonical());
    let f_ok = symp_between(&code, &tilde, limits)?.iter().any(|w| w.b == Matrix::identity(f2(), 3));
    c.holds("f is a symplectic isometry C → f(C)", f_ok);

    let side = |c: &mut Checks, label: &str, base: &StabilizerCode, h: &Matrix, table: &[[usize; 8]; 3]| -> Result<Vec<Vec<usize>>> {
        let exts = base.self_dual_extensions(limits)?;
        c.eq(&format!("self-dual codes strictly between {label} and its dual"), 3, exts.len());
        // Rows 4, 5 of H in (a|b) layout, then their sum.
        let perm = crate::stabcode::gamma_inv_columns(base.n());
        let r4 = h.select_cols(&perm).row(3).to_vec();
        let r5 = h.select_cols(&perm).row(4).to_vec();
        let sum: Vec<u32> = r4.iter().zip(&r5).map(|(a, b)| (a + b) % 2).collect();
        let mut dists = Vec::new();
        for (idx, rep) in [r4, r5, sum].iter().enumerate() {
            let ext = StabilizerCode::new(base.generators().vstack(&Matrix::from_residue_rows(f2(), &[rep.clone()], 2 * base.n())?)?)?;
            c.holds(&format!("{label} + ⟨coset {}⟩ is one of the self-dual codes", idx + 1), exts.iter().any(|e| e.canonical() == ext.canonical()));
            let computed = base.coset_weight_table(rep, limits)?.weights;
            let mut published = table[idx].to_vec();
            published.sort_unstable();
            c.eq(&format!("weights of coset {} of {label}", idx + 1), format!("{published:?}"), format!("{computed:?}"));
            dists.push(computed);
        }
        Ok(dists)
    };
    let left = side(&mut c, "C", &code, &h, &COSET_WEIGHTS_C)?;
    let right = side(&mut c, "f(C)", &tilde, &h_tilde, &COSET_WEIGHTS_FC)?;
    let compatible: Vec<(usize, usize)> =
        (0..3).flat_map(|i| (0..3).map(move |j| (i, j))).filter(|&(i, j)| left[i] == right[j]).collect();
    let partners_of_first: Vec<_> = compatible.iter().filter(|p| p.0 == 0 || p.1 == 0).collect();
    c.eq("distribution-compatible partners of C_1", "[(1, 1)]", format!("{:?}", partners_of_first.iter().map(|(i, j)| (i + 1, j + 1)).collect::<Vec<_>>()));
    Ok(c.finish("Ex-Extension2"))
}

pub fn ex_ex11(limits: &Limits) -> Result<ExampleReport> {
    let mut c = Checks::default();
    let source = code(3, &EX11_G)?;
    let target = code(3, &EX11_G_PRIME)?;
    let map = MonomialMap::parse(EX11_MAP, f2())?;
    c.holds("C′ = {xM : x ∈ C}", map.maps_code_onto(&source, &target));
    let s = code_to_stabilizer(&source, limits)?;
    let s2 = code_to_stabilizer(&target, limits)?;
    c.eq("S", EX11_S.join(","), strings(&s));
    c.eq("S′", EX11_S_PRIME.join(","), strings(&s2));
    c.eq("σ(S)", EX11_SIGMA_S.join(","), strings(&s.permute(map.perm(), limits)?));
    let v = stabilizer_state_basis(&s, limits)?;
    let v2 = stabilizer_state_basis(&s2, limits)?;
    let v3 = stabilizer_state_basis(&group_from(&EX11_SIGMA_S, 3, limits)?, limits)?;
    c.holds("Q(S) spanned by v", v.dim() == 1 && v.column(0) == complex(&EX11_V));
    c.holds("Q(S′) spanned by v′", v2.dim() == 1 && v2.column(0) == complex(&EX11_V_PRIME));
    c.holds("Q(σ(S)) spanned by v″", v3.dim() == 1 && v3.column(0) == complex(&EX11_V_SIGMA));
    let report = lcp_verify(&source, &target, &map, limits)?;
    c.holds("Ψ(Uσ(S)U†) = C′", report.psi_matches);
    c.holds("S′ = Uσ(S)U† exactly", report.exact_group_equality);
    c.holds("U·Q(σ(S)) = Q(S′)", report.spans_equal);
    let scalar = report.state_scalar.as_ref().is_some_and(matches_half_one_plus_i);
    c.holds("Uv″ and v′ differ by (1+i)/2 up to the lift phase", scalar);
    Ok(c.finish("Ex-Ex11"))
}

pub fn ex_lcp(limits: &Limits) -> Result<ExampleReport> {
    let mut c = Checks::default();
    let source = code(4, &LCP_G)?;
    let target = code(4, &LCP_G_PRIME)?;
    c.holds("C is self-dual", source.is_self_dual());
    c.holds("C′ is self-dual", target.is_self_dual());
    let symp = symp_between(&source, &target, limits)?;
    c.holds("f (row i ↦ row i) is a symplectic isometry", symp.iter().any(|w| w.b == Matrix::identity(f2(), 4)));
    let witnesses = rmon_sl_between(&source, &target, limits)?;
    c.eq("SL-monomial code maps C → C′", 0, witnesses.len());
    let identity = Matrix::identity(f2(), 4);
    c.holds("f is not induced by an SL-monomial map", witnesses.iter().all(|w| w.b != identity));
    let search = monomial_search_exhaustive(&source, &target, Flavor::Sl, limits)?;
    c.eq("SL-monomial maps visited", 31104, search.maps_total);
    let matched: Vec<&Matrix> = witnesses.iter().map(|w| &w.b).collect();
    c.holds("exhaustive search agrees with slot matching", search.induced.keys().collect::<Vec<_>>() == matched);
    let s = code_to_stabilizer(&source, limits)?;
    let s2 = code_to_stabilizer(&target, limits)?;
    c.eq("S", LCP_S.join(","), strings(&s));
    c.eq("S′", LCP_S_PRIME.join(","), strings(&s2));
    let psi = stabilizer_state_basis(&s, limits)?.state_vector()?;
    let psi2 = stabilizer_state_basis(&s2, limits)?.state_vector()?;
    c.holds("Q(S) spanned by ψ", psi.entries == real(&LCP_PSI));
    c.holds("Q(S′) spanned by ψ′", psi2.entries == real(&LCP_PSI_PRIME));
    let rank_at = |p: &StateVector| -> Result<usize> {
        Ok(rank_profile(p)?.ranks.into_iter().find(|(cut, _)| cut.left == LCP_CUT).map(|(_, r)| r).unwrap_or(0))
    };
    c.eq("ranks at {1,2}|{3,4}", format!("{:?}", LCP_RANKS), format!("{:?}", (rank_at(&psi)?, rank_at(&psi2)?)));
    c.eq("LU witness", LCP_VERDICT, lu_witness(&psi, &psi2)?);
    let by_size = |p: &StateVector| -> Result<String> { Ok(format!("{:?}", rank_profile(p)?.by_size)) };
    c.eq("rank multisets per cut size", by_size(&psi)?, by_size(&psi2)?);
    if let Some(map) = witnesses.iter().find_map(|w| w.map.as_ref()) {
        c.holds("a found SL-monomial map lifts to a local Clifford permutation", lcp_verify(&source, &target, map, limits)?.verified);
    }
    Ok(c.finish("Ex-LCP"))
}

pub fn run_example(name: &str, limits: &Limits) -> Result<ExampleReport> {
    match name {
        "Ex-NonEx1" => ex_nonex1(limits),
        "E-Ex2" => e_ex2(limits),
        "Ex-Extension2" => ex_extension2(limits),
        "Ex-Ex11" => ex_ex11(limits),
        "Ex-LCP" => ex_lcp(limits),
        other => Err(Error::Malformed(format!("unknown example `{other}`; expected one of {}", EXAMPLE_NAMES.join(", ")))),
    }
}

pub fn run_all(limits: &Limits) -> Result<BTreeMap<String, ExampleReport>> {
    EXAMPLE_NAMES.iter().map(|n| Ok((n.to_string(), run_example(n, limits)?))).collect()
}
