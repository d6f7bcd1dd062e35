use crate::pencil::{block_ring, invariants_of_kinds, Block, BlockKind, Certificate, KWForm};
use crate::polycore::{Polynomial, RingRef};
use crate::radgen::{
    bruns_polys_for, corner_zero_generators, jordan_generators, schmitt_vogel, scroll_sci_in, Construction,
    SVPartition, WitnessSet,
};

use super::corner::{corner_zero_normalization, Normalization};
use super::{
    beats_generic_bound, check_characteristic, height_formula, Analysis, ClassifyError, InvariantValue, Pattern,
    Report, SCHEMA_VERSION,
};

mod cite {
    pub const HEIGHT: &str = "height formula for Kronecker-Weierstrass forms";
    pub const NILPOTENT: &str = "nilpotent blocks add their variable count to height and cd";
    pub const ZERO: &str = "zero ideal";
    pub const PRINCIPAL: &str = "two columns: nonzero principal ideal";
    pub const SCROLL: &str = "single scroll: set-theoretic complete intersection by F_1 .. F_(l-1)";
    pub const GENERIC_ARA: &str = "generic 2 x n: ara = 2n-3 over any field (poset sums)";
    pub const GENERIC_CD0: &str = "generic 2 x n in characteristic 0: cd = 2n-3";
    pub const GENERIC_CDP: &str = "generic 2 x n in characteristic p: determinantal rings are Cohen-Macaulay, cd = height";
    pub const SCROLLS_ARA: &str = "concatenated scrolls: ara = sum of lengths + number of blocks - 3 over any field";
    pub const SCROLLS_CD0: &str = "concatenated scrolls in characteristic 0: cd = sum of lengths + number of blocks - 3";
    pub const SCROLLS_CDP: &str = "concatenated scrolls in characteristic p: cd = height";
    pub const JORDAN0: &str =
        "Jordan concatenation in characteristic 0: cd = ara = N - alpha for one eigenvalue, N - 1 otherwise";
    pub const JORDAN_P: &str = "Jordan concatenation in characteristic p: witness count only";
    pub const CORNER_ARA: &str = "corner-zero pattern: ara <= 2n-5 via Pluecker syzygy reduction, any field";
    pub const CORNER_CD0: &str = "corner-zero pattern in characteristic 0: cd = ara = 2n-5";
    pub const CORNER_CDP: &str = "corner-zero pattern in characteristic p: cd = height = n-1";
    pub const CORNER3: &str = "corner-zero pattern with 3 columns: Schmitt-Vogel on two monomial levels";
    pub const THREE0: &str = "2 x 3 matrices of linear forms in characteristic 0: ara < 3";
    pub const THREE_P: &str = "2 x 3 mixed shape in characteristic p: not determined";
    pub const FALLBACK: &str = "specialized poset sums: upper bound only";
    pub const OPEN: &str = "not determined";
    pub const SQUEEZE: &str = "ht <= cd <= ara";
}

/// Value of one invariant for the non-nilpotent part.
#[derive(Clone, Debug)]
enum Val {
    Exact(usize),
    Upper(usize),
    Unknown(usize, usize),
}

struct Core {
    pattern: Pattern,
    cd: (Val, &'static str),
    ara: (Val, &'static str),
    witness: Option<(Vec<Polynomial>, Construction)>,
    normalization: Option<Normalization>,
}

impl Core {
    fn exact(pattern: Pattern, v: usize, cite: &'static str, witness: Option<(Vec<Polynomial>, Construction)>) -> Self {
        Core {
            pattern,
            cd: (Val::Exact(v), cite),
            ara: (Val::Exact(v), cite),
            witness,
            normalization: None,
        }
    }
}

fn core_form(blocks: &[Block], ring: &RingRef) -> Result<KWForm, ClassifyError> {
    let core_ring = block_ring(blocks, &[], ring.field(), ring.order())?;
    let ncols = blocks.iter().map(|b| b.kind.ncols()).sum();
    Ok(KWForm::from_parts(
        blocks.to_vec(),
        Vec::new(),
        &core_ring,
        Certificate::identity(&core_ring, ncols),
    )?)
}

/// Case table for a nonempty form without nilpotent blocks.
fn classify_core(form: &KWForm, ht: usize, ch: u64) -> Result<Core, ClassifyError> {
    let blocks = form.blocks();
    let ring = form.ring();
    let n = form.matrix().ncols();
    let char0 = ch == 0;

    if ht == 0 {
        return Ok(Core::exact(Pattern::ZeroIdeal, 0, cite::ZERO, Some((Vec::new(), Construction::NilpotentExtend))));
    }
    if n == 2 {
        let w = form.matrix().minor_generators();
        return Ok(Core::exact(Pattern::Principal, 1, cite::PRINCIPAL, Some((w, Construction::Principal))));
    }
    let scrolls: Vec<usize> = blocks
        .iter()
        .filter_map(|b| match b.kind {
            BlockKind::Scroll(l) => Some(l),
            _ => None,
        })
        .collect();
    let all_scroll = scrolls.len() == blocks.len();
    let all_jordan = scrolls.is_empty();

    if all_scroll && blocks.len() == 1 {
        let z: Vec<usize> = blocks[0].vars.iter().map(|v| ring.var_index(v).expect("in ring")).collect();
        let w = scroll_sci_in(ring, &z);
        return Ok(Core::exact(Pattern::SingleScroll, n - 1, cite::SCROLL, Some((w, Construction::ScrollSci))));
    }
    if all_scroll && scrolls.iter().all(|&l| l == 1) {
        let w = bruns_polys_for(form.matrix())?.polys;
        let cd = if char0 { (Val::Exact(2 * n - 3), cite::GENERIC_CD0) } else { (Val::Exact(n - 1), cite::GENERIC_CDP) };
        return Ok(Core {
            pattern: Pattern::Generic,
            cd,
            ara: (Val::Exact(2 * n - 3), cite::GENERIC_ARA),
            witness: Some((w, Construction::BrunsPoset)),
            normalization: None,
        });
    }
    if all_scroll {
        let v = scrolls.iter().sum::<usize>() + scrolls.len() - 3;
        let cd = if char0 { (Val::Exact(v), cite::SCROLLS_CD0) } else { (Val::Exact(ht), cite::SCROLLS_CDP) };
        return Ok(Core {
            pattern: Pattern::Scrolls,
            cd,
            ara: (Val::Exact(v), cite::SCROLLS_ARA),
            witness: None,
            normalization: None,
        });
    }
    if all_jordan {
        let w = jordan_generators(form)?;
        let count = w.count();
        let witness = Some((w.polys, Construction::JordanQ));
        return Ok(if char0 {
            Core::exact(Pattern::Jordan, count, cite::JORDAN0, witness)
        } else {
            Core {
                pattern: Pattern::Jordan,
                cd: (Val::Unknown(ht, count), cite::JORDAN_P),
                ara: (Val::Upper(count), cite::JORDAN_P),
                witness,
                normalization: None,
            }
        });
    }
    if let Some(norm) = corner_zero_normalization(form)? {
        return corner_zero(norm, ht, char0);
    }
    if n == 3 {
        return Ok(if char0 {
            let cd = if ht == 2 { Val::Exact(2) } else { Val::Unknown(ht, 2) };
            Core {
                pattern: Pattern::ThreeColumn,
                cd: (cd, cite::THREE0),
                ara: (Val::Exact(2), cite::THREE0),
                witness: None,
                normalization: None,
            }
        } else {
            let w = bruns_polys_for(form.matrix())?.polys;
            Core {
                pattern: Pattern::ThreeColumn,
                cd: (Val::Unknown(ht, w.len()), cite::THREE_P),
                ara: (Val::Upper(w.len()), cite::FALLBACK),
                witness: Some((w, Construction::BrunsPoset)),
                normalization: None,
            }
        });
    }
    let w = bruns_polys_for(form.matrix())?.polys;
    Ok(Core {
        pattern: Pattern::Uncovered,
        cd: (Val::Unknown(ht, w.len()), cite::OPEN),
        ara: (Val::Upper(w.len()), cite::FALLBACK),
        witness: Some((w, Construction::BrunsPoset)),
        normalization: None,
    })
}

fn corner_zero(norm: Normalization, ht: usize, char0: bool) -> Result<Core, ClassifyError> {
    let n = norm.n();
    let field = norm.target.ring().field();
    let order = norm.target.ring().order();
    let core = if n == 3 {
        let r = norm.target.ring();
        let x = |i: usize| Polynomial::var(r, i - 1);
        let part = SVPartition::from_levels(vec![vec![&x(2) * &x(3)], vec![&x(1) * &x(3), &x(2) * &x(4)]]);
        let w = schmitt_vogel(&part)?;
        let polys = w.polys.iter().map(|p| norm.pull_back(p)).collect::<Result<_, _>>()?;
        Core::exact(Pattern::CornerZero, 2, cite::CORNER3, Some((polys, Construction::SchmittVogel)))
    } else {
        let w = corner_zero_generators(n, field, order)?;
        let polys = w.polys.iter().map(|p| norm.pull_back(p)).collect::<Result<_, _>>()?;
        let v = 2 * n - 5;
        let (cd, ara) = if char0 {
            ((Val::Exact(v), cite::CORNER_CD0), (Val::Exact(v), cite::CORNER_CD0))
        } else {
            ((Val::Exact(ht), cite::CORNER_CDP), (Val::Upper(v), cite::CORNER_ARA))
        };
        Core {
            pattern: Pattern::CornerZero,
            cd,
            ara,
            witness: Some((polys, Construction::CornerZero)),
            normalization: None,
        }
    };
    Ok(Core {
        normalization: Some(norm),
        ..core
    })
}

fn with_citation(base: &str, extra: &[&str]) -> String {
    let mut parts = vec![base.to_string()];
    parts.extend(extra.iter().map(|s| s.to_string()));
    parts.join("; ")
}

/// Runs the case table on `form`, whose field must have the given
/// characteristic. Nilpotent blocks are removed first and their variables
/// added back to every invariant.
pub fn analyze(form: &KWForm, characteristic: u64) -> Result<Analysis, ClassifyError> {
    check_characteristic(form, characteristic)?;
    let inv = invariants_of_kinds(&form.kinds());
    let ht = height_formula(&inv)?;
    let k = inv.nilpotent_vars();
    let ring = form.ring();

    let (nil, rest): (Vec<&Block>, Vec<&Block>) =
        form.blocks().iter().partition(|b| matches!(b.kind, BlockKind::Nilpotent(_)));
    let rest: Vec<Block> = rest.into_iter().cloned().collect();
    let nil_vars: Vec<String> = nil.iter().flat_map(|b| b.vars.iter().cloned()).collect();

    let core = if rest.is_empty() {
        Core::exact(Pattern::NilpotentOnly, 0, cite::NILPOTENT, Some((Vec::new(), Construction::NilpotentExtend)))
    } else {
        let cf = core_form(&rest, ring)?;
        let core_ht = ht - k;
        let mut core = classify_core(&cf, core_ht, characteristic)?;
        if let Some(w) = core.witness.take() {
            let polys = w.0.iter().map(|p| p.embed(ring)).collect::<Result<Vec<_>, _>>()?;
            core.witness = Some((polys, w.1));
        }
        core
    };

    let mut extra: Vec<&str> = Vec::new();
    if k > 0 || core.pattern == Pattern::NilpotentOnly {
        extra.push(cite::NILPOTENT);
    }
    let (cd_lo, cd_hi, cd_exact) = match core.cd.0 {
        Val::Exact(v) => (v + k, v + k, true),
        Val::Upper(v) => (0, v + k, false),
        Val::Unknown(lo, hi) => (lo + k, hi + k, false),
    };
    // ara of the core plus k variables is only bounded above by it.
    let ara_hi = match core.ara.0 {
        Val::Exact(v) | Val::Upper(v) => Some(v + k),
        Val::Unknown(..) => None,
    };
    let ara_lo = cd_lo.max(ht);
    let ara_exact = matches!(core.ara.0, Val::Exact(_)) && k == 0;

    let height = InvariantValue::exact(ht, cite::HEIGHT);
    let cd_cite = with_citation(core.cd.1, &extra);
    let ara_cite = with_citation(core.ara.1, &extra);
    let mut cd = if cd_exact {
        InvariantValue::exact(cd_lo, cd_cite)
    } else {
        let hi = ara_hi.map_or(cd_hi, |a| a.min(cd_hi));
        InvariantValue::unknown(cd_lo.max(ht), hi, cd_cite)
    };
    let mut ara = match ara_hi {
        Some(a) if ara_exact => InvariantValue::exact(a, ara_cite),
        Some(a) => InvariantValue::upper(ara_lo, a, ara_cite),
        None => InvariantValue::unknown(ara_lo, cd_hi.max(ara_lo), ara_cite),
    };
    if let Some(a) = ara_hi {
        if !ara.is_exact() && (a == ht || (cd.is_exact() && cd.value == Some(a))) {
            ara = InvariantValue::exact(a, with_citation(&ara.citation, &[cite::SQUEEZE]));
        }
        if !cd.is_exact() && a == ht {
            cd = InvariantValue::exact(a, with_citation(&cd.citation, &[cite::SQUEEZE]));
        }
    }

    let witness = match core.witness {
        Some((mut polys, tag)) => {
            let tag = if k > 0 && core.pattern != Pattern::NilpotentOnly { Construction::NilpotentExtend } else { tag };
            polys.extend(nil_vars.iter().map(|v| Polynomial::var(ring, ring.var_index(v).expect("in ring"))));
            Some(WitnessSet::for_matrix(polys, form.matrix(), tag)?)
        }
        None => None,
    };

    let ncols = form.matrix().ncols();
    let mut report = Report {
        schema: SCHEMA_VERSION,
        form: form.to_string(),
        pattern: core.pattern,
        nilpotent_vars: k,
        characteristic,
        ncols,
        nvars: ring.nvars(),
        height,
        cd,
        ara,
        witness: witness.as_ref().map(WitnessSet::report),
        beats_generic_bound: None,
    };
    report.beats_generic_bound = beats_generic_bound(&report, ncols).ok();
    Ok(Analysis {
        report,
        witness,
        normalization: core.normalization,
    })
}
