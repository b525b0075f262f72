use num_bigint::BigUint;
use serde_json::{json, Value};

use relfrob::fock_goncharov::{
    framed_count, framed_count_brute, groupoid_volume, topology_invariance_check, SurfaceType,
};
use relfrob::frobenius::{
    classic_commutator_brute, classic_commutator_count, hom_count_closed_surface, main_check, RelativeInstance,
};
use relfrob::gelfand::{f_equivalence_check, f_stat, gelfand_report, FEquivalence};
use relfrob::gln::{
    build_gl_flag, fg_epoly, fg_vol_closed, fg_vol_closed_at, partitions, unipotent_dim,
    unipotent_multiplicity_check_with, ClosedFormConvention,
};
use relfrob::numeric::int;
use relfrob::spherical::{main_sph_check, two_sided_lemma_check};
use relfrob::{CharacterTable, Config, FiniteGroup, GSet, Rational};

use crate::cache::{default_dir, TableCache};
use crate::json::{cyclo, nat, nat128, poly, rational};
use crate::spec::{parse_group_file, resolve, ParseError, Resolved};
use crate::{selftest, CliError, Command, Common, GlnCommand, Outcome};

pub struct Ctx<'a> {
    pub common: &'a Common,
    pub config: &'a Config,
    pub cache: TableCache,
}

impl Ctx<'_> {
    fn resolved(&self) -> Result<Resolved, CliError> {
        let path = self.common.group.as_deref().ok_or_else(|| ParseError::new("--group is required"))?;
        let spec = parse_group_file(path)?;
        Ok(resolve(&spec, self.config.group_cap)?)
    }

    pub fn table(&self, g: &FiniteGroup) -> Result<CharacterTable, CliError> {
        Ok(self.cache.get(g, self.config)?)
    }

    fn gset(&self, r: &Resolved) -> Result<GSet, CliError> {
        if !self.common.subgroup.is_empty() {
            let gens = r.elements(&self.common.subgroup.join(";"))?;
            return Ok(GSet::cosets(&r.group, &gens));
        }
        Ok(r.gset(self.common.gset.as_deref().unwrap_or("natural"))?)
    }

    fn convention(&self) -> Result<ClosedFormConvention, CliError> {
        ClosedFormConvention::parse(&self.common.convention)
            .ok_or_else(|| ParseError::new(format!("unknown convention {:?}", self.common.convention)).into())
    }
}

fn need<T: Copy>(v: Option<T>, flag: &str) -> Result<T, CliError> {
    v.ok_or_else(|| ParseError::new(format!("{} is required", flag)).into())
}

fn surface(c: &Common) -> Result<SurfaceType, CliError> {
    Ok(SurfaceType::new(need(c.k, "--k")?, need(c.m, "--m")?).map_err(|e| ParseError::new(e.to_string()))?)
}

pub fn run(cmd: &Command, common: &Common, config: &Config) -> Result<Outcome, CliError> {
    let dir = if common.no_cache { None } else { common.cache_dir.clone().or_else(default_dir) };
    let ctx = Ctx { common, config, cache: TableCache::new(dir) };
    match cmd {
        Command::Chartable => chartable(&ctx),
        Command::VerifyClassic => verify_classic(&ctx),
        Command::VerifyMain => verify_main(&ctx),
        Command::VerifySph => verify_sph(&ctx),
        Command::Gelfand => gelfand(&ctx),
        Command::Fstat => fstat(&ctx),
        Command::Fgvol => fgvol(&ctx),
        Command::Fgcount => fgcount(&ctx),
        Command::Gln { what } => gln(&ctx, what),
        Command::Selftest => selftest::run(&ctx),
    }
}

fn chartable(ctx: &Ctx) -> Result<Outcome, CliError> {
    let r = ctx.resolved()?;
    let g = &r.group;
    let t = ctx.table(g)?;
    t.validate()?;
    let cd = g.conjugacy();
    let classes: Vec<Value> = (0..cd.count())
        .map(|c| {
            json!({
                "representative": g.label(cd.representative(c)),
                "size": cd.size(c),
                "element_order": cd.element_order(c),
            })
        })
        .collect();
    let characters: Vec<Value> = t.rows().iter().map(|row| json!(row.iter().map(cyclo).collect::<Vec<_>>())).collect();
    let mut results = json!({
        "group": r.description,
        "order": g.order(),
        "exponent": g.exponent(),
        "classes": classes,
        "conductor": t.conductor(),
        "dims": t.dims(),
        "characters": characters,
        "validated": true,
    });
    if ctx.common.gset.is_some() || !ctx.common.subgroup.is_empty() {
        let x = ctx.gset(&r)?;
        results["multiplicities"] = json!(t.multiplicities(g, &x)?);
    }
    Ok(Outcome { results, ok: true })
}

fn verify_classic(ctx: &Ctx) -> Result<Outcome, CliError> {
    let r = ctx.resolved()?;
    let g = &r.group;
    let k = need(ctx.common.k, "--k")?;
    let elem = r.element(ctx.common.g.as_deref().unwrap_or("e"))?;
    let t = ctx.table(g)?;
    let chars = classic_commutator_count(&t, g, elem, k)?;
    let brute = classic_commutator_brute(g, elem, k, ctx.config)?;
    let equal = chars == BigUint::from(brute);
    let hom = hom_count_closed_surface(&t, g, k)?;
    Ok(Outcome {
        results: json!({
            "element": g.label(elem),
            "lhs": nat(&chars),
            "rhs": nat128(brute),
            "equal": equal,
            "hom_count_closed_surface": nat(&hom),
        }),
        ok: equal,
    })
}

fn verify_main(ctx: &Ctx) -> Result<Outcome, CliError> {
    let r = ctx.resolved()?;
    let g = &r.group;
    let x = ctx.gset(&r)?;
    let elem = r.element(ctx.common.g.as_deref().unwrap_or("e"))?;
    let (k, m) = (need(ctx.common.k, "--k")?, need(ctx.common.m, "--m")?);
    let inst = RelativeInstance::new(g, &x, elem, k, m).map_err(|e| ParseError::new(e.to_string()))?;
    let t = ctx.table(g)?;
    let c = main_check(&inst, &t, ctx.config)?;
    let tuple_work = (g.order() as u128)
        .saturating_pow(m + 2 * k)
        .saturating_mul((x.size() as u128).saturating_pow(m));
    Ok(Outcome {
        results: json!({
            "element": g.label(elem),
            "lhs": nat(&c.chars),
            "rhs": nat128(c.brute),
            "equal": c.equal,
            "tuple_enumeration_checked": tuple_work <= ctx.config.tuple_bound,
        }),
        ok: c.equal,
    })
}

fn verify_sph(ctx: &Ctx) -> Result<Outcome, CliError> {
    let r = ctx.resolved()?;
    let g = &r.group;
    let x = ctx.gset(&r)?;
    let (k, m) = (need(ctx.common.k, "--k")?, need(ctx.common.m, "--m")?);
    let inst = RelativeInstance::new(g, &x, 0, k, m).map_err(|e| ParseError::new(e.to_string()))?;
    let t = ctx.table(g)?;
    let points = |p: Option<usize>| -> Vec<usize> { p.map_or_else(|| (0..x.size()).collect(), |p| vec![p]) };
    let mut pairs = Vec::new();
    let mut ratios: Vec<Option<Rational>> = Vec::new();
    let mut all_equal = true;
    for x1 in points(ctx.common.x1) {
        for x2 in points(ctx.common.x2) {
            let c = main_sph_check(&inst, &t, x1, x2, ctx.config)?;
            all_equal &= c.equal;
            pairs.push(json!({
                "x1": x1,
                "x2": x2,
                "lhs": cyclo(&c.lhs),
                "rhs": rational(&c.rhs),
                "equal": c.equal,
                "ratio": c.ratio.as_ref().map(rational),
            }));
            ratios.push(c.ratio);
        }
    }
    let defined: Vec<&Rational> = ratios.iter().flatten().collect();
    let uniform = defined.windows(2).all(|w| w[0] == w[1]);
    let normalization = json!({
        "uniform": uniform,
        "correction_factor": if uniform { defined.first().map(|r| rational(r)) } else { None },
    });
    let lemma = if g.order() <= 24 { Some(two_sided_lemma_check(&t, g)) } else { None };
    let lemma_ok = lemma.as_ref().is_none_or(|v| v.iter().all(|&b| b));
    Ok(Outcome {
        results: json!({
            "pairs": pairs,
            "all_equal": all_equal,
            "normalization": normalization,
            "two_sided_lemma": lemma,
        }),
        ok: all_equal && lemma_ok,
    })
}

fn f_equivalence_json(e: &FEquivalence) -> Value {
    json!({
        "k": e.k,
        "m": e.m,
        "l": e.l,
        "f_shifted": nat(&e.shifted.value),
        "f_base": nat(&e.base.value),
        "equal": e.equal,
        "literal_pair": [nat(&e.literal_pair.0), nat(&e.literal_pair.1)],
        "literal_equal": e.literal_equal,
    })
}

fn gelfand(ctx: &Ctx) -> Result<Outcome, CliError> {
    let r = ctx.resolved()?;
    let g = &r.group;
    let x = ctx.gset(&r)?;
    let t = ctx.table(g)?;
    let rep = gelfand_report(&t, g, &x, ctx.config)?;
    Ok(Outcome {
        results: json!({
            "gelfand": rep.verdict(),
            "agree": rep.agree,
            "gset_size": x.size(),
            "multiplicities": rep.multiplicities,
            "multiplicity_free": rep.multiplicity_free,
            "commutator_criterion": {
                "lhs": nat128(rep.commutator.lhs),
                "rhs": nat128(rep.commutator.rhs),
                "holds": rep.commutator.holds,
            },
            "f_equivalence": rep.f_checks.iter().map(f_equivalence_json).collect::<Vec<_>>(),
            "f_verdict": rep.f_verdict,
        }),
        ok: rep.agree,
    })
}

fn fstat(ctx: &Ctx) -> Result<Outcome, CliError> {
    let r = ctx.resolved()?;
    let g = &r.group;
    let x = ctx.gset(&r)?;
    let t = ctx.table(g)?;
    let (k, m) = (need(ctx.common.k, "--k")?, need(ctx.common.m, "--m")?);
    let f = f_stat(&t, g, &x, k, m, ctx.config)?;
    let mut results = json!({
        "value": nat(&f.value),
        "enumerated": f.enumerated.map(nat128),
    });
    if let Some(l) = ctx.common.l {
        if l == 0 || l > k {
            return Err(ParseError::new("--l must satisfy 0 < l ≤ k").into());
        }
        results["equivalence"] = f_equivalence_json(&f_equivalence_check(&t, g, &x, k, m, l, ctx.config)?);
    }
    Ok(Outcome { results, ok: true })
}

fn fgvol(ctx: &Ctx) -> Result<Outcome, CliError> {
    let r = ctx.resolved()?;
    let g = &r.group;
    let x = ctx.gset(&r)?;
    let t = ctx.table(g)?;
    if let Some(chi) = ctx.common.chi {
        if chi > -1 {
            return Err(ParseError::new("--chi must be at most -1").into());
        }
        let rep = topology_invariance_check(&t, g, &x, chi)?;
        let volumes: Vec<Value> = rep
            .volumes
            .iter()
            .map(|(s, v)| json!({"k": s.genus(), "m": s.punctures(), "volume": rational(v)}))
            .collect();
        return Ok(Outcome {
            results: json!({
                "chi": chi,
                "volumes": volumes,
                "all_equal": rep.all_equal,
                "multiplicity_free": rep.multiplicity_free,
                "consistent": rep.consistent,
            }),
            ok: rep.consistent,
        });
    }
    let s = surface(ctx.common)?;
    let count = framed_count(&t, g, &x, &s)?;
    let vol = groupoid_volume(&t, g, &x, &s)?;
    Ok(Outcome {
        results: json!({
            "euler_characteristic": s.euler_char(),
            "framed_count": nat(&count),
            "volume": rational(&vol),
        }),
        ok: true,
    })
}

fn fgcount(ctx: &Ctx) -> Result<Outcome, CliError> {
    let r = ctx.resolved()?;
    let g = &r.group;
    let x = ctx.gset(&r)?;
    let t = ctx.table(g)?;
    let s = surface(ctx.common)?;
    let chars = framed_count(&t, g, &x, &s)?;
    let brute = framed_count_brute(g, &x, &s, ctx.config)?;
    let equal = chars == BigUint::from(brute);
    Ok(Outcome {
        results: json!({
            "euler_characteristic": s.euler_char(),
            "lhs": nat(&chars),
            "rhs": nat128(brute),
            "equal": equal,
        }),
        ok: equal,
    })
}

fn convention_note(c: ClosedFormConvention) -> &'static str {
    match c {
        ClosedFormConvention::Corrected => {
            "corrected: unipotent dimensions use the factor prod_{c=1..n}(q^c-1); matches decompositions of actual flag G-sets"
        }
        ClosedFormConvention::Literal => {
            "literal: unipotent dimensions use the full group order; differs from the group-theoretic volume by q^(chi*n(n-1)/2)"
        }
    }
}

fn gln(ctx: &Ctx, what: &GlnCommand) -> Result<Outcome, CliError> {
    let conv = ctx.convention()?;
    let n = need(ctx.common.n, "--n")?;
    if n == 0 {
        return Err(ParseError::new("--n must be positive").into());
    }
    match what {
        GlnCommand::Vol => {
            let s = surface(ctx.common)?;
            let mut results = json!({
                "convention": conv.name(),
                "note": convention_note(conv),
                "euler_characteristic": s.euler_char(),
            });
            if s.euler_char() <= 0 {
                results["polynomial"] = poly(&fg_vol_closed(n, &s, conv)?);
            }
            if let Some(q) = ctx.common.q {
                results["value"] = rational(&fg_vol_closed_at(n, &s, conv, &int(q as i64))?);
            }
            Ok(Outcome { results, ok: true })
        }
        GlnCommand::Epoly => {
            let s = surface(ctx.common)?;
            let e = fg_epoly(n, &s, conv)?;
            let mut results = json!({
                "convention": conv.name(),
                "note": convention_note(conv),
                "euler_characteristic": s.euler_char(),
                "polynomial": poly(&e),
            });
            if let Some(q) = ctx.common.q {
                results["value"] = rational(&e.eval(&int(q as i64))?);
            }
            Ok(Outcome { results, ok: true })
        }
        GlnCommand::Dims => {
            let mut rows = Vec::new();
            for lambda in partitions(n) {
                let d = unipotent_dim(&lambda, conv)?;
                let mut row = json!({
                    "partition": lambda.parts(),
                    "hooks": lambda.hook_lengths(),
                    "specht_dim": lambda.specht_dim()?,
                    "unipotent_dim": poly(&d),
                });
                if let Some(q) = ctx.common.q {
                    row["value"] = rational(&d.eval(&int(q as i64))?);
                }
                rows.push(row);
            }
            Ok(Outcome { results: json!({"convention": conv.name(), "partitions": rows}), ok: true })
        }
        GlnCommand::Check => {
            let q = need(ctx.common.q, "--q")?;
            let (results, ok) = gln_check(ctx, n, q)?;
            Ok(Outcome { results, ok })
        }
    }
}

/// Closed forms against the actual `(GL_n(F_q), flags)` pair.
pub fn gln_check(ctx: &Ctx, n: usize, q: usize) -> Result<(Value, bool), CliError> {
    let gl = build_gl_flag(n, q, ctx.config.group_cap).map_err(|e| match e {
        relfrob::Error::InvalidInput(m) => CliError::Parse(ParseError::new(m)),
        e => CliError::Lib(e),
    })?;
    let g = &gl.group;
    let t = ctx.table(g)?;
    let uni = unipotent_multiplicity_check_with(&gl, &t)?;
    let qr = int(q as i64);
    let mut ok = uni.matches;
    let mut surfaces = Vec::new();
    for (k, m) in [(0, 1), (0, 2), (1, 1)] {
        let s = SurfaceType::new(k, m)?;
        let actual = groupoid_volume(&t, g, &gl.flags, &s)?;
        let count = framed_count(&t, g, &gl.flags, &s)?;
        let corrected = fg_vol_closed_at(n, &s, ClosedFormConvention::Corrected, &qr)?;
        let literal = fg_vol_closed_at(n, &s, ClosedFormConvention::Literal, &qr)?;
        let ratio = &literal / &corrected;
        let expected_ratio = qpow(q, s.euler_char() * (n * (n - 1) / 2) as i64);
        let mut row = json!({
            "k": k,
            "m": m,
            "euler_characteristic": s.euler_char(),
            "groupoid_volume": rational(&actual),
            "framed_count": nat(&count),
            "closed_corrected": rational(&corrected),
            "closed_literal": rational(&literal),
            "volume_equal": corrected == actual,
            "literal_over_corrected": rational(&ratio),
            "ratio_is_expected_monomial": ratio == expected_ratio,
        });
        ok &= corrected == actual && ratio == expected_ratio;
        if s.euler_char() <= 0 {
            let e = fg_epoly(n, &s, ClosedFormConvention::Corrected)?.eval(&qr)?;
            let count_r = Rational::from_integer(count.clone().into());
            row["epoly_at_q"] = rational(&e);
            row["epoly_equal"] = json!(e == count_r);
            ok &= e == count_r;
        }
        surfaces.push(row);
    }
    let predicted: Vec<Value> = uni
        .predicted
        .iter()
        .map(|l| json!({"partition": l.partition.parts(), "dim": l.dim, "multiplicity": l.multiplicity}))
        .collect();
    let computed: Vec<Value> = uni.computed.iter().map(|(d, m)| json!({"dim": d, "multiplicity": m})).collect();
    Ok((
        json!({
            "n": n,
            "q": q,
            "group_order": g.order(),
            "flag_count": uni.flag_count,
            "unipotent": {
                "predicted": predicted,
                "computed": computed,
                "predicted_total": uni.predicted_total,
                "matches": uni.matches,
            },
            "surfaces": surfaces,
        }),
        ok,
    ))
}

fn qpow(q: usize, e: i64) -> Rational {
    let p = num_traits::pow(int(q as i64), e.unsigned_abs() as usize);
    if e >= 0 {
        p
    } else {
        p.recip()
    }
}
