//! Groups induced by monomial maps.
//!
//! A monomial map with blocks `A_i` and permutation `σ` restricts to `B·G` on a code
//! exactly when `N_{σ(i)}·A_i = B·N′_i` for every slot, where `N_i` and `N′_i` are
//! the pair blocks of the source and target generator matrices. For a fixed `B` the
//! slots decouple, so existence is a perfect-matching question and the number of
//! maps inducing `B` is a weighted permanent. The exhaustive search over all maps
//! is kept alongside as an independent check.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::{canonicalize, general_linear, gl2, gl_order, kernel, permutations, sl2, Matrix};
use crate::stabcode::{gamma, gamma_columns, gamma_inv, StabilizerCode};
use crate::Limits;

use super::group::IsometrySubgroup;
use super::monomial::{Flavor, MonomialMap};
use super::view::FieldView;
use super::CodeMapWitness;

/// Result of an `rMon` computation.
#[derive(Clone, Debug)]
pub struct RmonGroup {
    pub group: IsometrySubgroup,
    /// Number of monomial maps (blocks and permutation) whose restriction lies in the group.
    pub map_count: u128,
    /// One monomial map per induced matrix, over the code's own ring.
    pub witnesses: BTreeMap<Matrix, MonomialMap>,
}

fn block_group(view: &FieldView, flavor: Flavor) -> Vec<Matrix> {
    match flavor {
        Flavor::Sl => sl2(view.field),
        Flavor::Gl => gl2(view.field),
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Maps a residue-field monomial map back to the code's ring by lifting each
/// block to a preimage of the same flavor.
fn lift_to_ring(m: MonomialMap, code: &StabilizerCode) -> Result<MonomialMap> {
    let ring = code.spec();
    if ring == m.spec() {
        return Ok(m);
    }
    if ring.modulus() == m.spec().modulus() {
        let blocks = m.blocks().iter().map(|a| a.with_spec(ring)).collect();
        return MonomialMap::new(blocks, m.perm().to_vec(), m.flavor());
    }
    let p = m.spec().modulus();
    let pool = match m.flavor() {
        Flavor::Sl => sl2(ring),
        Flavor::Gl => gl2(ring),
    };
    let blocks = m
        .blocks()
        .iter()
        .map(|a| {
            pool.iter()
                .find(|b| b.data().iter().zip(a.data()).all(|(&x, &y)| x % p == y))
                .cloned()
                .ok_or_else(|| Error::Verification("block has no lift of the same flavor".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    MonomialMap::new(blocks, m.perm().to_vec(), m.flavor())
}

/// Slot-matching search over all `B ∈ GL_k`.
fn matching_search(
    src: &FieldView,
    dst: &FieldView,
    flavor: Flavor,
    limits: &Limits,
) -> Result<(u128, BTreeMap<Matrix, MonomialMap>)> {
    if src.field != dst.field || src.k != dst.k || src.n != dst.n {
        return Err(Error::Dimension("monomial maps need codes of equal length, dimension, and ring".into()));
    }
    let n = src.n;
    if n > 24 {
        return Err(Error::Unsupported(format!("slot matching is limited to n ≤ 24, got {n}")));
    }
    let gl_size = gl_order(src.q() as u64, src.k);
    limits.check(gl_size)?;
    let blocks = block_group(src, flavor);
    // N_j·A for every source slot j and block A.
    let mut lookup: HashMap<Matrix, Vec<(usize, usize)>> = HashMap::new();
    for j in 0..n {
        let nj = src.block(j);
        for (ai, a) in blocks.iter().enumerate() {
            lookup.entry(nj.mul(a)?).or_default().push((j, ai));
        }
    }
    let targets: Vec<Matrix> = (0..n).map(|i| dst.block(i)).collect();
    let candidates = general_linear(src.field, src.k, limits)?;
    let results: Vec<(Matrix, u128, MonomialMap)> = candidates
        .into_par_iter()
        .filter_map(|b| {
            // options[i][j]: blocks A with N_j·A = B·N′_i.
            let mut options: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); n]; n];
            for (i, t) in targets.iter().enumerate() {
                let bt = b.mul(t).expect("k x k times k x 2");
                if let Some(hits) = lookup.get(&bt) {
                    for &(j, ai) in hits {
                        options[i][j].push(ai);
                    }
                }
                if options[i].iter().all(Vec::is_empty) {
                    return None;
                }
            }
            let (count, perm) = weighted_permanent(&options);
            let perm = perm?;
            let chosen = (0..n).map(|i| blocks[options[i][perm[i]][0]].clone()).collect();
            let map = MonomialMap::new(chosen, perm, flavor).expect("blocks come from the flavor's group");
            Some((b, count, map))
        })
        .collect();
    let mut total = 0u128;
    let mut witnesses = BTreeMap::new();
    for (b, count, map) in results {
        total += count;
        witnesses.insert(b, map);
    }
    Ok((total, witnesses))
}

/// `Σ_σ Π_i |options[i][σ(i)]|` by dynamic programming over subsets, plus one
/// permutation with a nonzero term.
fn weighted_permanent(options: &[Vec<Vec<usize>>]) -> (u128, Option<Vec<usize>>) {
    let n = options.len();
    let full = 1usize << n;
    // dp[mask]: ways to assign slots 0..popcount(mask) to the source slots in mask.
    let mut dp = vec![0u128; full];
    dp[0] = 1;
    for mask in 0..full {
        if dp[mask] == 0 {
            continue;
        }
        let i = mask.count_ones() as usize;
        if i == n {
            continue;
        }
        for j in 0..n {
            let w = options[i][j].len() as u128;
            if mask & (1 << j) == 0 && w > 0 {
                dp[mask | (1 << j)] += dp[mask] * w;
            }
        }
    }
    let count = dp[full - 1];
    if count == 0 {
        return (0, None);
    }
    // Walk back from the full mask to recover one assignment.
    let mut perm = vec![0usize; n];
    let mut mask = full - 1;
    for i in (0..n).rev() {
        let j = (0..n)
            .find(|&j| mask & (1 << j) != 0 && !options[i][j].is_empty() && dp[mask & !(1 << j)] > 0)
            .expect("a nonzero permanent has a consistent predecessor");
        perm[i] = j;
        mask &= !(1 << j);
    }
    (count, Some(perm))
}

fn finish(view: &FieldView, code: &StabilizerCode, count: u128, found: BTreeMap<Matrix, MonomialMap>) -> Result<RmonGroup> {
    let group = IsometrySubgroup::new(view.field, view.k, found.keys().cloned())?;
    let witnesses = found
        .into_iter()
        .map(|(b, m)| lift_to_ring(m, code).map(|m| (b, m)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(RmonGroup { group, map_count: count, witnesses })
}

/// `rMon` of the given flavor: every `B` induced by a monomial map fixing `C`.
pub fn rmon_group(code: &StabilizerCode, flavor: Flavor, limits: &Limits) -> Result<RmonGroup> {
    let view = FieldView::new(code)?;
    let (count, found) = matching_search(&view, &view, flavor, limits)?;
    finish(&view, code, count, found)
}

pub fn rmon_sl_group(code: &StabilizerCode, limits: &Limits) -> Result<RmonGroup> {
    rmon_group(code, Flavor::Sl, limits)
}

/// All `B` with `G·M|_C = B·G′` for some monomial map `M` of the given flavor,
/// each with one such map attached.
pub fn rmon_between(
    source: &StabilizerCode,
    target: &StabilizerCode,
    flavor: Flavor,
    limits: &Limits,
) -> Result<Vec<CodeMapWitness>> {
    let a = FieldView::new(source)?;
    let b = FieldView::new(target)?;
    let (_, found) = matching_search(&a, &b, flavor, limits)?;
    found
        .into_iter()
        .map(|(m, map)| Ok(CodeMapWitness { b: m, map: Some(lift_to_ring(map, source)?) }))
        .collect()
}

pub fn rmon_sl_between(source: &StabilizerCode, target: &StabilizerCode, limits: &Limits) -> Result<Vec<CodeMapWitness>> {
    rmon_between(source, target, Flavor::Sl, limits)
}

/// Outcome of visiting every monomial map.
#[derive(Clone, Debug)]
pub struct ExhaustiveSearch {
    /// Maps visited: `|blocks|^n · n!`.
    pub maps_total: u128,
    /// Maps sending the source code onto the target code.
    pub maps_matching: u128,
    /// Distinct induced matrices `B`, each with the first map found for it.
    pub induced: BTreeMap<Matrix, MonomialMap>,
}

/// Visits every monomial map of the flavor, one permutation per parallel task,
/// choosing blocks slot by slot. Parity checks of the target whose support ends at
/// the current slot prune the search as soon as they fail.
pub fn monomial_search_exhaustive(
    source: &StabilizerCode,
    target: &StabilizerCode,
    flavor: Flavor,
    limits: &Limits,
) -> Result<ExhaustiveSearch> {
    let src = FieldView::new(source)?;
    let dst = FieldView::new(target)?;
    if src.field != dst.field || src.k != dst.k || src.n != dst.n {
        return Err(Error::Dimension("monomial maps need codes of equal length, dimension, and ring".into()));
    }
    let n = src.n;
    let blocks = block_group(&src, flavor);
    let total = (blocks.len() as u128).checked_pow(n as u32).and_then(|b| b.checked_mul(factorial(n)));
    let total = total.ok_or(Error::CapExceeded { needed: u128::MAX, cap: limits.max_enum })?;
    limits.check(total)?;
    let field = src.field;

    // Parity checks of the target in interleaved coordinates, arranged so each
    // check has its support ending as early as possible.
    let dst_inter = dst.g().select_cols(&gamma_columns(n));
    let checks = kernel(&dst_inter.transpose());
    let reversed: Vec<usize> = (0..2 * n).rev().collect();
    let echelon = canonicalize(&checks.select_cols(&reversed));
    let checks: Vec<Vec<u32>> = echelon.form().iter_rows().map(|r| r.iter().rev().copied().collect()).collect();
    let mut due: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (t, h) in checks.iter().enumerate() {
        let last = h.iter().rposition(|&x| x != 0).map_or(0, |p| p / 2);
        due[last].push(t);
    }
    let src_rows: Vec<Vec<u32>> = src.g().iter_rows().map(gamma).collect();

    let ctx = SearchCtx { field, n, k: src.k, blocks: &blocks, checks: &checks, due: &due, src_rows: &src_rows };
    let parts: Vec<(u128, BTreeMap<Matrix, MonomialMap>)> = permutations(n)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|perm| {
            let mut state = DfsState {
                chosen: Vec::with_capacity(n),
                syndromes: vec![vec![0; checks.len()]; src.k],
                images: vec![vec![0; 2 * n]; src.k],
                count: 0,
                found: BTreeMap::new(),
            };
            ctx.dfs(&perm, 0, &mut state, &dst, flavor);
            (state.count, state.found)
        })
        .collect();
    let mut out = ExhaustiveSearch { maps_total: total, maps_matching: 0, induced: BTreeMap::new() };
    for (count, found) in parts {
        out.maps_matching += count;
        for (b, m) in found {
            out.induced.entry(b).or_insert(m);
        }
    }
    for m in out.induced.values_mut() {
        *m = lift_to_ring(m.clone(), source)?;
    }
    Ok(out)
}

/// Exhaustive `rMon`, returning the group together with the number of maps.
pub fn rmon_group_exhaustive(code: &StabilizerCode, flavor: Flavor, limits: &Limits) -> Result<RmonGroup> {
    let view = FieldView::new(code)?;
    let search = monomial_search_exhaustive(code, code, flavor, limits)?;
    let group = IsometrySubgroup::new(view.field, view.k, search.induced.keys().cloned())?;
    Ok(RmonGroup { group, map_count: search.maps_matching, witnesses: search.induced })
}

struct SearchCtx<'a> {
    field: crate::algebra::RingSpec,
    n: usize,
    k: usize,
    blocks: &'a [Matrix],
    checks: &'a [Vec<u32>],
    due: &'a [Vec<usize>],
    src_rows: &'a [Vec<u32>],
}

struct DfsState {
    chosen: Vec<usize>,
    syndromes: Vec<Vec<u32>>,
    images: Vec<Vec<u32>>,
    count: u128,
    found: BTreeMap<Matrix, MonomialMap>,
}

impl SearchCtx<'_> {
    fn dfs(&self, perm: &[usize], slot: usize, st: &mut DfsState, dst: &FieldView, flavor: Flavor) {
        let f = self.field;
        if slot == self.n {
            st.count += 1;
            let images: Vec<Vec<u32>> = st.images.iter().map(|y| gamma_inv(y)).collect();
            let b = dst.phi(&images).expect("all parity checks passed, so every image lies in the target");
            st.found.entry(b).or_insert_with(|| {
                let blocks = st.chosen.iter().map(|&ai| self.blocks[ai].clone()).collect();
                MonomialMap::new(blocks, perm.to_vec(), flavor).expect("blocks come from the flavor's group")
            });
            return;
        }
        let j = perm[slot];
        for (ai, a) in self.blocks.iter().enumerate() {
            let saved: Vec<Vec<u32>> = st.syndromes.clone();
            let mut ok = true;
            for r in 0..self.k {
                let x = &self.src_rows[r][2 * j..2 * j + 2];
                let y = a.left_mul_vec(x);
                st.images[r][2 * slot] = y[0];
                st.images[r][2 * slot + 1] = y[1];
                for (t, h) in self.checks.iter().enumerate() {
                    let add = f.add(f.mul(y[0], h[2 * slot]), f.mul(y[1], h[2 * slot + 1]));
                    st.syndromes[r][t] = f.add(st.syndromes[r][t], add);
                }
                if self.due[slot].iter().any(|&t| st.syndromes[r][t] != 0) {
                    ok = false;
                    break;
                }
            }
            if ok {
                st.chosen.push(ai);
                self.dfs(perm, slot + 1, st, dst, flavor);
                st.chosen.pop();
            }
            st.syndromes = saved;
        }
    }
}

/// Brute-force `Φ` for one map: images of the generators, solved against the target.
pub fn induced_matrix(map: &MonomialMap, source: &StabilizerCode, target: &StabilizerCode) -> Option<Matrix> {
    let src = FieldView::new(source).ok()?;
    let dst = FieldView::new(target).ok()?;
    let field_map = if map.spec() == src.field {
        map.clone()
    } else {
        let p = src.field.modulus();
        let blocks = map.blocks().iter().map(|a| a.map(|x| x % p).with_spec(src.field)).collect();
        MonomialMap::new(blocks, map.perm().to_vec(), map.flavor()).ok()?
    };
    let images: Vec<Vec<u32>> = src.g().iter_rows().map(|g| field_map.apply(g)).collect();
    dst.phi(&images)
}
