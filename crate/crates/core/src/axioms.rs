//! Exhaustive verification of the enrichment axioms over a finite fixture
//! family: hom-functor laws, compatibility of the enriched composition with
//! the operator action, the zero-cell correspondence and its naturality,
//! levelwise associativity, and the two action formulas.
//!
//! Cells are handled by their level indices and all composition grids are
//! tabulated once, so the (large) instance loops are plain array scans. The
//! tabulated composition is cross-checked against the literal composite of
//! [`crate::enrich::enriched_compose`] in the test suite.

use std::sync::Arc;

use rayon::prelude::*;
use rustc_hash::FxHashMap;

use crate::ctx::Ctx;
use crate::enrich::{zero_cell, ComposeVariant, FunctionComplex};
use crate::error::{Error, Result};
use crate::ord::{MonotoneMap, Surjection};
use crate::report::{Check, VerificationReport};
use crate::smap::{enumerate_maps, SimplicialMap};
use crate::sset::{LevelData, SSet, SimplexRef};

pub fn check_enrichment_axioms(ctx: &Ctx, fixtures: &[SSet], d: usize) -> Result<VerificationReport> {
    check_enrichment_axioms_with(ctx, fixtures, d, ComposeVariant::Canonical)
}

pub fn check_enrichment_axioms_with(
    ctx: &Ctx,
    fixtures: &[SSet],
    d: usize,
    variant: ComposeVariant,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("axioms");
    if fixtures.is_empty() {
        report.push(Check::pass("axiom.config", "empty fixture list (vacuous)"));
        return Ok(report);
    }
    let checker = AxiomChecker::prepare(ctx, fixtures, d, variant)?;
    checker.check_hom_functor(&mut report);
    checker.check_operator_compatibility(&mut report);
    checker.check_zero_cells(&mut report)?;
    checker.check_associativity(&mut report);
    checker.check_action_formulas(&mut report)?;
    Ok(report)
}

type UbKey = (usize, usize, usize, usize);

struct AxiomChecker<'a> {
    fixtures: &'a [SSet],
    d: usize,
    fcs: Vec<Vec<Arc<FunctionComplex>>>,
    /// `levels[i][j][n]`: level table of the carrier of hom(X_i, X_j)
    levels: Vec<Vec<Vec<Arc<LevelData>>>>,
    homs: Vec<Vec<Vec<SimplicialMap>>>,
    hom_index: Vec<Vec<FxHashMap<Vec<SimplexRef>, usize>>>,
    /// zero-cell level-0 index of each plain map
    zeros: Vec<Vec<Vec<usize>>>,
    /// `(i,j,k,n)` -> row-major grid: entry `f * |L_jk_n| + g` is the index
    /// in `L_ik_n` of "g after f"
    ub: FxHashMap<UbKey, Vec<u32>>,
    /// `(a,b,u,j)`: precomposition action `hom(X_b,Y_j) -> hom(X_a,Y_j)` of
    /// `u: X_a -> X_b`
    pre_actions: FxHashMap<(usize, usize, usize, usize), SimplicialMap>,
    /// `(i,b,c,v)`: postcomposition action `hom(X_i,Y_b) -> hom(X_i,Y_c)` of
    /// `v: Y_b -> Y_c`
    post_actions: FxHashMap<(usize, usize, usize, usize), SimplicialMap>,
}

impl<'a> AxiomChecker<'a> {
    fn prepare(ctx: &Ctx, fixtures: &'a [SSet], d: usize, variant: ComposeVariant) -> Result<Self> {
        let n_fix = fixtures.len();
        let mut fcs = Vec::with_capacity(n_fix);
        for x in fixtures {
            let mut row = Vec::with_capacity(n_fix);
            for y in fixtures {
                row.push(ctx.fncx(x, y, d)?);
            }
            fcs.push(row);
        }
        let mut levels = Vec::with_capacity(n_fix);
        for row in &fcs {
            let mut lrow = Vec::with_capacity(n_fix);
            for fc in row {
                let mut per_level = Vec::with_capacity(d + 1);
                for n in 0..=d {
                    per_level.push(fc.carrier().level(n)?);
                }
                lrow.push(per_level);
            }
            levels.push(lrow);
        }
        let mut homs = Vec::with_capacity(n_fix);
        let mut hom_index = Vec::with_capacity(n_fix);
        let mut zeros = Vec::with_capacity(n_fix);
        for (i, x) in fixtures.iter().enumerate() {
            let mut hrow = Vec::with_capacity(n_fix);
            let mut irow = Vec::with_capacity(n_fix);
            let mut zrow = Vec::with_capacity(n_fix);
            for (j, y) in fixtures.iter().enumerate() {
                let maps = enumerate_maps(x, y, x.top_dim().unwrap_or(0))?;
                let index: FxHashMap<Vec<SimplexRef>, usize> = maps
                    .iter()
                    .enumerate()
                    .map(|(k, m)| (m.assignments().to_vec(), k))
                    .collect();
                let zs = maps
                    .iter()
                    .map(|m| {
                        let z = zero_cell(ctx, &fcs[i][j], m)?;
                        Ok(levels[i][j][0].index[&z.0])
                    })
                    .collect::<Result<Vec<_>>>()?;
                hrow.push(maps);
                irow.push(index);
                zrow.push(zs);
            }
            homs.push(hrow);
            hom_index.push(irow);
            zeros.push(zrow);
        }

        // composition grids, one per composable complex triple and level
        let triples: Vec<(usize, usize, usize)> = (0..n_fix)
            .flat_map(|i| (0..n_fix).flat_map(move |j| (0..n_fix).map(move |k| (i, j, k))))
            .collect();
        let ub_entries: Vec<(UbKey, Vec<u32>)> = triples
            .par_iter()
            .flat_map_iter(|&(i, j, k)| {
                let mut out = Vec::with_capacity(d + 1);
                for n in 0..=d {
                    let grid = build_ub_grid(
                        ctx,
                        &fcs[i][j],
                        &fcs[j][k],
                        &fcs[i][k],
                        &levels[i][j][n],
                        &levels[j][k][n],
                        &levels[i][k][n],
                        n,
                        variant,
                    )
                    .expect("composition grid");
                    out.push(((i, j, k, n), grid));
                }
                out
            })
            .collect();
        let ub: FxHashMap<UbKey, Vec<u32>> = ub_entries.into_iter().collect();

        // hom-action maps for every fixture morphism and every target slot
        let pre_keys: Vec<(usize, usize, usize, usize)> = (0..n_fix)
            .flat_map(|a| {
                let homs = &homs;
                (0..n_fix).flat_map(move |b| {
                    (0..homs[a][b].len())
                        .flat_map(move |u| (0..n_fix).map(move |j| (a, b, u, j)))
                })
            })
            .collect();
        let pre_entries: Vec<_> = pre_keys
            .par_iter()
            .map(|&(a, b, u, j)| {
                let m = crate::enrich::hom_action_pre(ctx, &homs[a][b][u], &fixtures[j], d)
                    .expect("pre action");
                ((a, b, u, j), m)
            })
            .collect();
        let post_keys: Vec<(usize, usize, usize, usize)> = (0..n_fix)
            .flat_map(|i| {
                let homs = &homs;
                (0..n_fix).flat_map(move |b| {
                    (0..n_fix).flat_map(move |c| {
                        (0..homs[b][c].len()).map(move |v| (i, b, c, v))
                    })
                })
            })
            .collect();
        let post_entries: Vec<_> = post_keys
            .par_iter()
            .map(|&(i, b, c, v)| {
                let m = crate::enrich::hom_action_post(ctx, &fixtures[i], &homs[b][c][v], d)
                    .expect("post action");
                ((i, b, c, v), m)
            })
            .collect();

        Ok(Self {
            fixtures,
            d,
            fcs,
            levels,
            homs,
            hom_index,
            zeros,
            ub,
            pre_actions: pre_entries.into_iter().collect(),
            post_actions: post_entries.into_iter().collect(),
        })
    }

    fn name(&self, i: usize) -> &str {
        self.fixtures[i].name()
    }

    /// index of the identity map in `homs[i][i]`
    fn identity_index(&self, i: usize) -> usize {
        let id = SimplicialMap::identity(&self.fixtures[i]);
        self.hom_index[i][i][id.assignments()]
    }

    /// apply a carrier-level map to a level element, in index space
    fn apply_indexed(
        &self,
        map: &SimplicialMap,
        src: &LevelData,
        dst: &LevelData,
        idx: usize,
    ) -> usize {
        dst.index[&map.apply(&src.refs[idx])]
    }

    /// the n-fold degenerate cell on the zero cell of `homs[i][j][f]`
    fn constant_index(&self, i: usize, j: usize, f: usize, n: usize) -> usize {
        let z = &self.levels[i][j][0].refs[self.zeros[i][j][f]];
        let cell = SimplexRef { base: z.base, deg: Surjection::terminal(n) };
        self.levels[i][j][n].index[&cell]
    }

    /// hom-functor laws: identities, contravariant/covariant composition and
    /// the bifunctor interchange of the two actions
    fn check_hom_functor(&self, report: &mut VerificationReport) {
        let n_fix = self.fixtures.len();
        for b in 0..n_fix {
            let id_b = self.identity_index(b);
            for j in 0..n_fix {
                let pre = &self.pre_actions[&(b, b, id_b, j)];
                let ok = pre == &SimplicialMap::identity(self.fcs[b][j].carrier());
                report.push(Check::of(
                    "axiom.hom.id.pre",
                    format!("X={} Y={}", self.name(b), self.name(j)),
                    ok,
                    || "hom(id, Y) is not the identity".to_string(),
                ));
                let post = &self.post_actions[&(j, b, b, id_b)];
                let ok = post == &SimplicialMap::identity(self.fcs[j][b].carrier());
                report.push(Check::of(
                    "axiom.hom.id.post",
                    format!("X={} Y={}", self.name(j), self.name(b)),
                    ok,
                    || "hom(X, id) is not the identity".to_string(),
                ));
            }
        }
        // contravariant slot: hom(w∘u, Y) = hom(u, Y) ∘ hom(w, Y)
        for a in 0..n_fix {
            for b in 0..n_fix {
                for c in 0..n_fix {
                    for j in 0..n_fix {
                        let mut bad = None;
                        let mut count = 0usize;
                        for (ui, u) in self.homs[a][b].iter().enumerate() {
                            for (wi, w) in self.homs[b][c].iter().enumerate() {
                                let wu = SimplicialMap::compose(w, u).expect("composable");
                                let wu_idx = self.hom_index[a][c][wu.assignments()];
                                let lhs = &self.pre_actions[&(a, c, wu_idx, j)];
                                let rhs = SimplicialMap::compose(
                                    &self.pre_actions[&(a, b, ui, j)],
                                    &self.pre_actions[&(b, c, wi, j)],
                                )
                                .expect("composable actions");
                                count += 1;
                                if lhs != &rhs && bad.is_none() {
                                    bad = Some(format!("u#{ui} w#{wi}"));
                                }
                            }
                        }
                        if count == 0 {
                            continue;
                        }
                        report.push(Check::of(
                            "axiom.hom.comp.pre",
                            format!(
                                "W={} X={} Z={} Y={} ({count} pairs)",
                                self.name(a),
                                self.name(b),
                                self.name(c),
                                self.name(j)
                            ),
                            bad.is_none(),
                            || bad.unwrap(),
                        ));
                    }
                }
            }
        }
        // covariant slot: hom(X, v∘u) = hom(X, v) ∘ hom(X, u)
        for i in 0..n_fix {
            for b in 0..n_fix {
                for c in 0..n_fix {
                    for e in 0..n_fix {
                        let mut bad = None;
                        let mut count = 0usize;
                        for (ui, u) in self.homs[b][c].iter().enumerate() {
                            for (vi, v) in self.homs[c][e].iter().enumerate() {
                                let vu = SimplicialMap::compose(v, u).expect("composable");
                                let vu_idx = self.hom_index[b][e][vu.assignments()];
                                let lhs = &self.post_actions[&(i, b, e, vu_idx)];
                                let rhs = SimplicialMap::compose(
                                    &self.post_actions[&(i, c, e, vi)],
                                    &self.post_actions[&(i, b, c, ui)],
                                )
                                .expect("composable actions");
                                count += 1;
                                if lhs != &rhs && bad.is_none() {
                                    bad = Some(format!("u#{ui} v#{vi}"));
                                }
                            }
                        }
                        if count == 0 {
                            continue;
                        }
                        report.push(Check::of(
                            "axiom.hom.comp.post",
                            format!(
                                "X={} Y={} Z={} W={} ({count} pairs)",
                                self.name(i),
                                self.name(b),
                                self.name(c),
                                self.name(e)
                            ),
                            bad.is_none(),
                            || bad.unwrap(),
                        ));
                    }
                }
            }
        }
        // the two actions commute
        for a in 0..n_fix {
            for b in 0..n_fix {
                for c in 0..n_fix {
                    for e in 0..n_fix {
                        let mut bad = None;
                        let mut count = 0usize;
                        for (ui, _) in self.homs[a][b].iter().enumerate() {
                            for (vi, _) in self.homs[c][e].iter().enumerate() {
                                let lhs = SimplicialMap::compose(
                                    &self.pre_actions[&(a, b, ui, e)],
                                    &self.post_actions[&(b, c, e, vi)],
                                )
                                .expect("composable actions");
                                let rhs = SimplicialMap::compose(
                                    &self.post_actions[&(a, c, e, vi)],
                                    &self.pre_actions[&(a, b, ui, c)],
                                )
                                .expect("composable actions");
                                count += 1;
                                if lhs != rhs && bad.is_none() {
                                    bad = Some(format!("u#{ui} v#{vi}"));
                                }
                            }
                        }
                        if count == 0 {
                            continue;
                        }
                        report.push(Check::of(
                            "axiom.hom.comp.mixed",
                            format!(
                                "W={} X={} Y={} Z={} ({count} pairs)",
                                self.name(a),
                                self.name(b),
                                self.name(c),
                                self.name(e)
                            ),
                            bad.is_none(),
                            || bad.unwrap(),
                        ));
                    }
                }
            }
        }
    }

    /// the composition is a map of simplicial sets: it commutes with the
    /// operator action in both arguments
    fn check_operator_compatibility(&self, report: &mut VerificationReport) {
        let n_fix = self.fixtures.len();
        let triples: Vec<(usize, usize, usize)> = (0..n_fix)
            .flat_map(|i| (0..n_fix).flat_map(move |j| (0..n_fix).map(move |k| (i, j, k))))
            .collect();
        let checks: Vec<Check> = triples
            .par_iter()
            .map(|&(i, j, k)| {
                let mut bad = None;
                let mut count = 0usize;
                for n in 0..=self.d {
                    let l_ij = &self.levels[i][j][n];
                    let l_jk = &self.levels[j][k][n];
                    let l_ik = &self.levels[i][k][n];
                    let grid_n = &self.ub[&(i, j, k, n)];
                    for m in 0..=self.d {
                        let l_ij_m = &self.levels[i][j][m];
                        let l_jk_m = &self.levels[j][k][m];
                        let l_ik_m = &self.levels[i][k][m];
                        let grid_m = &self.ub[&(i, j, k, m)];
                        for theta in MonotoneMap::all(m, n) {
                            // act tables along theta for the three complexes
                            let act_ij: Vec<u32> = l_ij
                                .refs
                                .iter()
                                .map(|r| {
                                    l_ij_m.index[&self.fcs[i][j]
                                        .carrier()
                                        .act(r, &theta)
                                        .expect("act")]
                                        as u32
                                })
                                .collect();
                            let act_jk: Vec<u32> = l_jk
                                .refs
                                .iter()
                                .map(|r| {
                                    l_jk_m.index[&self.fcs[j][k]
                                        .carrier()
                                        .act(r, &theta)
                                        .expect("act")]
                                        as u32
                                })
                                .collect();
                            let act_ik: Vec<u32> = l_ik
                                .refs
                                .iter()
                                .map(|r| {
                                    l_ik_m.index[&self.fcs[i][k]
                                        .carrier()
                                        .act(r, &theta)
                                        .expect("act")]
                                        as u32
                                })
                                .collect();
                            let cols_n = l_jk.refs.len();
                            let cols_m = l_jk_m.refs.len();
                            for f in 0..l_ij.refs.len() {
                                for g in 0..cols_n {
                                    let composed = grid_n[f * cols_n + g] as usize;
                                    let lhs = act_ik[composed];
                                    let rhs = grid_m[act_ij[f] as usize * cols_m
                                        + act_jk[g] as usize];
                                    count += 1;
                                    if lhs != rhs && bad.is_none() {
                                        bad = Some(format!(
                                            "n={n} m={m} theta={theta} f#{f} g#{g}"
                                        ));
                                    }
                                }
                            }
                        }
                    }
                }
                Check::of(
                    "axiom.compose.operator",
                    format!(
                        "X={} Y={} Z={} ({count} instances)",
                        self.name(i),
                        self.name(j),
                        self.name(k)
                    ),
                    bad.is_none(),
                    || bad.unwrap(),
                )
            })
            .collect();
        for c in checks {
            report.push(c);
        }
    }

    /// the zero-cell correspondence is bijective, natural in both slots, and
    /// turns plain composition into level-0 enriched composition
    fn check_zero_cells(&self, report: &mut VerificationReport) -> Result<()> {
        let n_fix = self.fixtures.len();
        for i in 0..n_fix {
            for j in 0..n_fix {
                let zs = &self.zeros[i][j];
                let distinct = {
                    let mut seen = zs.clone();
                    seen.sort_unstable();
                    seen.dedup();
                    seen.len() == zs.len()
                };
                let onto = zs.len() == self.levels[i][j][0].refs.len();
                report.push(Check::of(
                    "axiom.zero.bijective",
                    format!("X={} Y={}", self.name(i), self.name(j)),
                    distinct && onto,
                    || {
                        format!(
                            "{} maps vs {} zero cells",
                            zs.len(),
                            self.levels[i][j][0].refs.len()
                        )
                    },
                ));
            }
        }
        // naturality: the zero cell of v∘f∘u is the image of the zero cell
        // of f under both hom actions
        for w in 0..n_fix {
            for z in 0..n_fix {
                let mut bad = None;
                let mut count = 0usize;
                for x in 0..n_fix {
                    for y in 0..n_fix {
                        for (ui, u) in self.homs[w][x].iter().enumerate() {
                            for (fi, f) in self.homs[x][y].iter().enumerate() {
                                for (vi, v) in self.homs[y][z].iter().enumerate() {
                                    let total = SimplicialMap::compose(
                                        v,
                                        &SimplicialMap::compose(f, u)?,
                                    )?;
                                    let total_idx = self.hom_index[w][z][total.assignments()];
                                    let lhs = self.zeros[w][z][total_idx];
                                    let post = &self.post_actions[&(x, y, z, vi)];
                                    let pre = &self.pre_actions[&(w, x, ui, z)];
                                    let mid = self.apply_indexed(
                                        post,
                                        &self.levels[x][y][0],
                                        &self.levels[x][z][0],
                                        self.zeros[x][y][fi],
                                    );
                                    let rhs = self.apply_indexed(
                                        pre,
                                        &self.levels[x][z][0],
                                        &self.levels[w][z][0],
                                        mid,
                                    );
                                    count += 1;
                                    if lhs != rhs && bad.is_none() {
                                        bad = Some(format!(
                                            "u#{ui}:{}->{} f#{fi} v#{vi}",
                                            self.name(w),
                                            self.name(x)
                                        ));
                                    }
                                }
                            }
                        }
                    }
                }
                report.push(Check::of(
                    "axiom.zero.natural",
                    format!("W={} Z={} ({count} instances)", self.name(w), self.name(z)),
                    bad.is_none(),
                    || bad.unwrap(),
                ));
            }
        }
        // composing zero cells is the zero cell of the composition
        for i in 0..n_fix {
            for j in 0..n_fix {
                for k in 0..n_fix {
                    let grid = &self.ub[&(i, j, k, 0)];
                    let cols = self.levels[j][k][0].refs.len();
                    let mut bad = None;
                    let mut count = 0usize;
                    for (fi, f) in self.homs[i][j].iter().enumerate() {
                        for (gi, g) in self.homs[j][k].iter().enumerate() {
                            let gf = SimplicialMap::compose(g, f)?;
                            let gf_idx = self.hom_index[i][k][gf.assignments()];
                            let lhs = self.zeros[i][k][gf_idx] as u32;
                            let rhs =
                                grid[self.zeros[i][j][fi] * cols + self.zeros[j][k][gi]];
                            count += 1;
                            if lhs != rhs && bad.is_none() {
                                bad = Some(format!("f#{fi} g#{gi}"));
                            }
                        }
                    }
                    report.push(Check::of(
                        "axiom.zero.compose",
                        format!(
                            "X={} Y={} Z={} ({count} pairs)",
                            self.name(i),
                            self.name(j),
                            self.name(k)
                        ),
                        bad.is_none(),
                        || bad.unwrap(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// levelwise associativity of the enriched composition
    fn check_associativity(&self, report: &mut VerificationReport) {
        let n_fix = self.fixtures.len();
        let quads: Vec<(usize, usize, usize, usize)> = (0..n_fix)
            .flat_map(|i| {
                (0..n_fix).flat_map(move |j| {
                    (0..n_fix).flat_map(move |k| (0..n_fix).map(move |l| (i, j, k, l)))
                })
            })
            .collect();
        let checks: Vec<Vec<Check>> = quads
            .par_iter()
            .map(|&(i, j, k, l)| {
                let mut out = Vec::with_capacity(self.d + 1);
                for n in 0..=self.d {
                    let f_len = self.levels[i][j][n].refs.len();
                    let g_len = self.levels[j][k][n].refs.len();
                    let h_len = self.levels[k][l][n].refs.len();
                    let ij_k = &self.ub[&(i, j, k, n)];
                    let jk_l = &self.ub[&(j, k, l, n)];
                    let i_kl = &self.ub[&(i, k, l, n)];
                    let ij_l = &self.ub[&(i, j, l, n)];
                    let cols_jl = self.levels[j][l][n].refs.len();
                    let mut bad = None;
                    let mut count = 0usize;
                    for f in 0..f_len {
                        for g in 0..g_len {
                            let gf = ij_k[f * g_len + g] as usize;
                            for h in 0..h_len {
                                let hg = jk_l[g * h_len + h] as usize;
                                let lhs = ij_l[f * cols_jl + hg];
                                let rhs = i_kl[gf * h_len + h];
                                count += 1;
                                if lhs != rhs && bad.is_none() {
                                    bad = Some(format!("f#{f} g#{g} h#{h}"));
                                }
                            }
                        }
                    }
                    out.push(Check::of(
                        "axiom.compose.assoc",
                        format!(
                            "X={} Y={} Z={} W={} n={} ({count} triples)",
                            self.name(i),
                            self.name(j),
                            self.name(k),
                            self.name(l),
                            n
                        ),
                        bad.is_none(),
                        || bad.unwrap(),
                    ));
                }
                out
            })
            .collect();
        for list in checks {
            for c in list {
                report.push(c);
            }
        }
    }

    /// the two action formulas: postcomposition by a plain map is enriched
    /// composition with its constant cell, and dually for precomposition
    fn check_action_formulas(&self, report: &mut VerificationReport) -> Result<()> {
        let n_fix = self.fixtures.len();
        for i in 0..n_fix {
            for j in 0..n_fix {
                for k in 0..n_fix {
                    for n in 0..=self.d {
                        let grid = &self.ub[&(i, j, k, n)];
                        let cols = self.levels[j][k][n].refs.len();
                        // postcomposition: hom(X,g)_n(f) = const(g) ∘ f
                        let mut bad = None;
                        let mut count = 0usize;
                        for (gi, _) in self.homs[j][k].iter().enumerate() {
                            let action = &self.post_actions[&(i, j, k, gi)];
                            let cg = self.constant_index(j, k, gi, n);
                            for f in 0..self.levels[i][j][n].refs.len() {
                                let lhs = self.apply_indexed(
                                    action,
                                    &self.levels[i][j][n],
                                    &self.levels[i][k][n],
                                    f,
                                );
                                let rhs = grid[f * cols + cg] as usize;
                                count += 1;
                                if lhs != rhs && bad.is_none() {
                                    bad = Some(format!("n={n} g#{gi} f#{f}"));
                                }
                            }
                        }
                        report.push(Check::of(
                            "axiom.post.formula",
                            format!(
                                "X={} Y={} Z={} n={} ({count} instances)",
                                self.name(i),
                                self.name(j),
                                self.name(k),
                                n
                            ),
                            bad.is_none(),
                            || bad.unwrap(),
                        ));
                        // precomposition: hom(f,Z)_n(g) = g ∘ const(f)
                        let mut bad = None;
                        let mut count = 0usize;
                        for (fi, _) in self.homs[i][j].iter().enumerate() {
                            let action = &self.pre_actions[&(i, j, fi, k)];
                            let cf = self.constant_index(i, j, fi, n);
                            for g in 0..cols {
                                let lhs = self.apply_indexed(
                                    action,
                                    &self.levels[j][k][n],
                                    &self.levels[i][k][n],
                                    g,
                                );
                                let rhs = grid[cf * cols + g] as usize;
                                count += 1;
                                if lhs != rhs && bad.is_none() {
                                    bad = Some(format!("n={n} f#{fi} g#{g}"));
                                }
                            }
                        }
                        report.push(Check::of(
                            "axiom.pre.formula",
                            format!(
                                "X={} Y={} Z={} n={} ({count} instances)",
                                self.name(i),
                                self.name(j),
                                self.name(k),
                                n
                            ),
                            bad.is_none(),
                            || bad.unwrap(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Tabulate "g after f" for all level-n cell pairs. The grid evaluates the
/// defining composite pointwise: a nondegenerate `p = (a, t)` of `X × Δ[n]`
/// goes to `ĝ(⟨f̂(p), t⟩)`; the `SkipDiagonal` fault replaces the second
/// component by the collapse of `t` to vertex 0.
#[allow(clippy::too_many_arguments)]
fn build_ub_grid(
    ctx: &Ctx,
    fc_xy: &FunctionComplex,
    fc_yz: &FunctionComplex,
    fc_xz: &FunctionComplex,
    l_xy: &LevelData,
    l_yz: &LevelData,
    l_xz: &LevelData,
    n: usize,
    variant: ComposeVariant,
) -> Result<Vec<u32>> {
    let x = fc_xy.source();
    let y = fc_xy.target();
    let dn = ctx.delta(n);
    let p_x_dn = ctx.product(x, &dn)?;
    let p_y_dn = ctx.product(y, &dn)?;
    let v0 = dn.nondeg(0)[0];

    // nondegenerate simplices of X × Δ[n] with their Δ[n] components
    let points: Vec<(SimplexRef, SimplexRef)> = p_x_dn
        .sset
        .all_nondeg()
        .map(|s| {
            let (_, t) = p_x_dn.components(s).clone();
            let second = match variant {
                ComposeVariant::Canonical => t,
                ComposeVariant::SkipDiagonal => SimplexRef {
                    base: v0,
                    deg: Surjection::terminal(t.dim()),
                },
            };
            (p_x_dn.sset.canonical(s), second)
        })
        .collect();

    let f_maps: Vec<SimplicialMap> = l_xy
        .refs
        .iter()
        .map(|f| fc_xy.map_for_ref(ctx, f))
        .collect::<Result<_>>()?;
    let g_maps: Vec<SimplicialMap> = l_yz
        .refs
        .iter()
        .map(|g| fc_yz.map_for_ref(ctx, g))
        .collect::<Result<_>>()?;

    let mut grid = vec![0u32; l_xy.refs.len() * l_yz.refs.len()];
    let cols = l_yz.refs.len();
    for (fi, f_hat) in f_maps.iter().enumerate() {
        // the middle map X × Δ[n] -> Y × Δ[n]
        let middle: Vec<SimplexRef> = points
            .iter()
            .map(|(p, t)| p_y_dn.pair_ref(&f_hat.apply(p), t))
            .collect::<Result<_>>()?;
        for (gi, g_hat) in g_maps.iter().enumerate() {
            let assignment: Vec<SimplexRef> = middle.iter().map(|r| g_hat.apply(r)).collect();
            let cell = fc_xz.lookup_assignments(n, &assignment).ok_or_else(|| {
                Error::Internal("composite is not a cell of the target complex".to_string())
            })?;
            grid[fi * cols + gi] = l_xz.index[cell] as u32;
        }
    }
    Ok(grid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enrich::{enriched_compose_with, ComposeVariant};

    #[test]
    fn grid_matches_literal_composite() {
        // cross-validation of the tabulated route against the recorded
        // composite, for both variants, exhaustively on small fixtures
        let ctx = Ctx::new();
        let fixtures = [ctx.delta(0), ctx.delta(1)];
        for variant in [ComposeVariant::Canonical, ComposeVariant::SkipDiagonal] {
            for x in &fixtures {
                for y in &fixtures {
                    for z in &fixtures {
                        let fc_xy = ctx.fncx(x, y, 2).unwrap();
                        let fc_yz = ctx.fncx(y, z, 2).unwrap();
                        let fc_xz = ctx.fncx(x, z, 2).unwrap();
                        for n in 0..=2usize {
                            let l_xy = fc_xy.carrier().level(n).unwrap();
                            let l_yz = fc_yz.carrier().level(n).unwrap();
                            let l_xz = fc_xz.carrier().level(n).unwrap();
                            let grid = build_ub_grid(
                                &ctx, &fc_xy, &fc_yz, &fc_xz, &l_xy, &l_yz, &l_xz, n, variant,
                            )
                            .unwrap();
                            for (fi, f) in l_xy.refs.iter().enumerate() {
                                for (gi, g) in l_yz.refs.iter().enumerate() {
                                    let direct = enriched_compose_with(
                                        &ctx, &fc_xy, &fc_yz, &fc_xz, f, g, variant,
                                    )
                                    .unwrap();
                                    assert_eq!(
                                        grid[fi * l_yz.refs.len() + gi] as usize,
                                        l_xz.index[&direct],
                                        "variant {variant:?} X={} Y={} Z={} n={n}",
                                        x.name(),
                                        y.name(),
                                        z.name()
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn axioms_pass_on_small_fixtures() {
        let ctx = Ctx::new();
        let fixtures = vec![ctx.delta(0), ctx.delta(1)];
        let report = check_enrichment_axioms(&ctx, &fixtures, 1).unwrap();
        assert!(report.is_pass(), "{}", report.render_text());
    }

    #[test]
    fn axioms_pass_on_single_point() {
        let ctx = Ctx::new();
        let report = check_enrichment_axioms(&ctx, &[ctx.delta(0)], 2).unwrap();
        assert!(report.is_pass(), "{}", report.render_text());
    }

    #[test]
    fn axioms_vacuous_on_empty_fixture_list() {
        let ctx = Ctx::new();
        let report = check_enrichment_axioms(&ctx, &[], 2).unwrap();
        assert!(report.is_pass());
        assert_eq!(report.checks.len(), 1);
    }

    #[test]
    fn dropped_diagonal_is_detected() {
        let ctx = Ctx::new();
        let fixtures = vec![ctx.delta(0), ctx.delta(1)];
        let report =
            check_enrichment_axioms_with(&ctx, &fixtures, 1, ComposeVariant::SkipDiagonal)
                .unwrap();
        assert!(!report.is_pass());
        let failing: Vec<&str> =
            report.failures().map(|c| c.anchor.as_str()).collect();
        // associativity or an action formula must witness the fault
        assert!(failing
            .iter()
            .any(|a| a.starts_with("axiom.compose") || a.ends_with("formula")));
    }
}
