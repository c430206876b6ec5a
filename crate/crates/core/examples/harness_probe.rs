use simpcat::*;
use std::time::Instant;

fn main() {
    let ctx = Ctx::new();
    let objects = vec![ctx.delta(0), ctx.delta(1), boundary(1)];
    let params = vec![ctx.delta(0), ctx.delta(1)];
    let f = FixtureCategory::new(objects, params, 2);

    let t0 = Instant::now();
    let prepared = match prepare(&ctx, &f) {
        Ok(p) => p,
        Err(e) => { println!("prepare failed: {e}"); return; }
    };
    println!("prepare: {:.1}s, derived checks: {} ({} failed)",
        t0.elapsed().as_secs_f64(),
        prepared.derived_reports.checks.len(),
        prepared.derived_reports.failed());
    for c in prepared.derived_reports.failures().take(3) {
        println!("  FAIL {} {}", c.anchor, c.instance);
    }

    for (name, res) in [
        ("definitions", verify_definitions(&ctx, &f)),
        ("uniqueness", verify_uniqueness(&ctx, &f)),
        ("functoriality", verify_functoriality(&ctx, &prepared)),
        ("lemmas", verify_lemma_squares(&ctx, &prepared)),
        ("naturality", verify_naturality(&ctx, &prepared)),
        ("adjunctions", verify_adjunctions(&ctx, &prepared)),
    ] {
        let t = Instant::now();
        match res {
            Ok(r) => {
                println!("{name}: {} checks, {} failed, {:.1}s", r.checks.len(), r.failed(), t.elapsed().as_secs_f64());
                for c in r.failures().take(5) {
                    println!("  FAIL {} {}  [{}]", c.anchor, c.instance,
                        match &c.outcome { Outcome::Fail{witness} => witness.as_str(), _ => "" });
                }
            }
            Err(e) => println!("{name}: ERROR {e}"),
        }
    }
}
