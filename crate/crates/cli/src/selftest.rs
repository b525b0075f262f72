//! Battery self-test: every group and G-set of the built-in battery through
//! the character-side formulas and their enumeration oracles.

use num_bigint::BigUint;
use serde_json::json;

use relfrob::battery::battery;
use relfrob::fock_goncharov::{framed_count, framed_count_brute, SurfaceType};
use relfrob::frobenius::{classic_commutator_brute, hom_count_closed_surface, main_check, RelativeInstance};
use relfrob::gelfand::gelfand_report;
use relfrob::{ClassFunction, Cyclo};

use crate::commands::{gln_check, Ctx};
use crate::json::{nat, nat128};
use crate::{CliError, Outcome};

pub fn run(ctx: &Ctx) -> Result<Outcome, CliError> {
    let mut ok = true;
    let mut groups = Vec::new();
    for b in battery()? {
        let g = &b.group;
        let t = ctx.table(g)?;
        let valid = t.validate().is_ok();
        ok &= valid;

        let hom = hom_count_closed_surface(&t, g, 1)?;
        let hom_brute = classic_commutator_brute(g, 0, 1, ctx.config)?;
        let hom_ok = hom == BigUint::from(hom_brute) && hom_brute == (g.order() * g.conjugacy().count()) as u128;
        ok &= hom_ok;

        let mut gsets = Vec::new();
        for (name, x) in &b.gsets {
            let mults = t.multiplicities(g, x)?;
            let perm = ClassFunction::permutation_character(g, x);
            let key_ok = (0..g.conjugacy().count()).all(|c| {
                let mut acc = Cyclo::from_i64(0);
                for (i, &mu) in mults.iter().enumerate() {
                    acc += &t.value(i, c).scale(&relfrob::numeric::int(mu as i64));
                }
                acc == *perm.value(c)
            });
            let mut main = Vec::new();
            for (k, m) in [(0, 1), (0, 2), (1, 1)] {
                let inst = RelativeInstance::new(g, x, 0, k, m)?;
                let c = main_check(&inst, &t, ctx.config)?;
                ok &= c.equal;
                main.push(json!({"k": k, "m": m, "lhs": nat(&c.chars), "rhs": nat128(c.brute), "equal": c.equal}));
            }
            let mut framed = Vec::new();
            for (k, m) in [(0, 1), (0, 2), (1, 1)] {
                let s = SurfaceType::new(k, m)?;
                let chars = framed_count(&t, g, x, &s)?;
                let brute = framed_count_brute(g, x, &s, ctx.config)?;
                let equal = chars == BigUint::from(brute);
                ok &= equal;
                framed.push(json!({"k": k, "m": m, "lhs": nat(&chars), "rhs": nat128(brute), "equal": equal}));
            }
            let rep = gelfand_report(&t, g, x, ctx.config)?;
            ok &= key_ok && rep.agree;
            gsets.push(json!({
                "name": name,
                "size": x.size(),
                "multiplicities": mults,
                "lemma_key": key_ok,
                "relative_counts": main,
                "framed_counts": framed,
                "gelfand": {
                    "verdict": rep.verdict(),
                    "agree": rep.agree,
                    "commutator_lhs": nat128(rep.commutator.lhs),
                    "commutator_rhs": nat128(rep.commutator.rhs),
                },
            }));
        }
        groups.push(json!({
            "name": b.name,
            "order": g.order(),
            "classes": g.conjugacy().count(),
            "dims": t.dims(),
            "table_valid": valid,
            "hom_count_genus_one": {"lhs": nat(&hom), "rhs": nat128(hom_brute), "equal": hom_ok},
            "gsets": gsets,
        }));
    }
    let mut gln = Vec::new();
    for (n, q) in [(2, 2), (2, 3)] {
        let (v, good) = gln_check(ctx, n, q)?;
        ok &= good;
        gln.push(v);
    }
    Ok(Outcome { results: json!({"groups": groups, "gln": gln, "passed": ok}), ok })
}
