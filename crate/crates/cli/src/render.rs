use std::fmt::Write;

use comply_core::arith::{BlockPrediction, PeriodReport};
use comply_core::{ConstraintSide, GrundyTable, RuleSet, VerificationReport};

pub fn pretty_table(table: &GrundyTable) -> String {
    match *table.rules() {
        RuleSet::FiniteArithmetic { b, c, i_max } => blocks(table, 2 * b + i_max * c),
        _ => flat(table),
    }
}

fn flat(table: &GrundyTable) -> String {
    let mut out = format!(
        "{}\n{:>8}  {:>6}  {:>12}\n",
        table.rules(),
        "n",
        "G_base",
        "G_complement"
    );
    let base = table.row(ConstraintSide::Base);
    let comp = table.row(ConstraintSide::Complement);
    for (n, (b, c)) in base.iter().zip(comp).enumerate() {
        let _ = writeln!(out, "{n:>8}  {b:>6}  {c:>12}");
    }
    out
}

/// One row pair per period block, columns indexed by offset.
fn blocks(table: &GrundyTable, period: u64) -> String {
    let base = table.row(ConstraintSide::Base);
    let comp = table.row(ConstraintSide::Complement);
    let widest = base.iter().chain(comp).map(|v| v.get()).max().unwrap_or(0);
    let width = widest.to_string().len().max((period - 1).to_string().len());
    let p = period as usize;

    let mut out = format!("{}  block width p = {period}\n", table.rules());
    let _ = write!(out, "{:>12}", "offset");
    for off in 0..p {
        let _ = write!(out, " {off:>width$}");
    }
    out.push('\n');
    for (l, start) in (0..base.len()).step_by(p).enumerate() {
        let end = (start + p).min(base.len());
        for (label, row) in [("S", base), ("S'", comp)] {
            let _ = write!(out, "{:>12}", format!("l={l} {label}"));
            for v in &row[start..end] {
                let _ = write!(out, " {:>width$}", v.get());
            }
            out.push('\n');
        }
    }
    out
}

pub fn consecutive_summary(r: &VerificationReport) -> String {
    let mut out = format!(
        "k={} n_max={}: {} comparisons, {} mismatches, monotone complement: {}\n",
        r.k,
        r.n_max,
        r.comparisons,
        r.mismatches.len(),
        r.monotonicity_ok
    );
    for (case, count) in &r.mismatches_by_case {
        let _ = writeln!(out, "  {case}: {count} mismatches");
    }
    for m in r.mismatches.iter().take(20) {
        let _ = writeln!(
            out,
            "  n={} {} [{}]: formula {} engine {}",
            m.n, m.side, m.case, m.expected, m.actual
        );
    }
    let _ = writeln!(out, "{}", if r.passed { "PASS" } else { "FAIL" });
    out
}

fn flag(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAILED"
    }
}

pub fn arith_summary(r: &PeriodReport) -> String {
    let mut out = format!(
        "b={} c={} i_max={} n_max={}: predicted period {}\n",
        r.b, r.c, r.i_max, r.n_max, r.predicted_period
    );
    match (r.detected_preperiod, r.detected_period) {
        (Some(rho), Some(q)) => {
            let _ = writeln!(out, "  detected preperiod {rho}, period {q}");
        }
        _ => out.push_str("  no period detected\n"),
    }
    let _ = writeln!(out, "  periodic from 2p: {}", flag(r.periodic_from_2p));
    let _ = writeln!(out, "  periodic from p:  {}", flag(r.periodic_from_p));
    let _ = writeln!(
        out,
        "  finite/unbounded agree below p: {}",
        flag(r.finite_infinite_agree)
    );
    let _ = writeln!(
        out,
        "  complement >= 2 from n=2: {}",
        flag(r.complement_at_least_two)
    );
    let _ = writeln!(
        out,
        "  complement > 2*i_max from n=p: {}",
        flag(r.complement_exceeds_twice_i_max)
    );
    if r.small_b_override {
        out.push_str("  (b < 5: complement bounds are informational)\n");
    }
    let below: Vec<String> = r
        .base_side_below_two
        .iter()
        .take(6)
        .map(|run| format!("[{}, {}]", run.start, run.end))
        .collect();
    let _ = writeln!(out, "  base row below 2 at n >= 2: {} ...", below.join(" "));
    let scored = r.block_check.iter().filter(|o| o.agrees.is_some()).count();
    let _ = writeln!(
        out,
        "  block offsets: {scored} scored over {} blocks, {} conflicts, {} contradicted",
        r.complete_blocks,
        r.block_conflicts.len(),
        r.block_contradictions.len()
    );
    for o in r.block_check.iter().filter(|o| o.agrees == Some(false)) {
        let _ = writeln!(
            out,
            "    offset {}: predicted {:?}, observed {:?}",
            o.offset, o.prediction, o.observed
        );
    }
    for o in r
        .block_check
        .iter()
        .filter(|o| o.prediction == BlockPrediction::Conflict)
    {
        let _ = writeln!(
            out,
            "    offset {} conflicted, observed {:?}, supported by {:?}",
            o.offset, o.observed, o.supported_by
        );
    }
    let _ = writeln!(
        out,
        "  max base value from 2p: {} (option bound {})",
        r.max_tail_base_value, r.base_option_bound
    );
    let _ = writeln!(out, "{}", if r.passed { "PASS" } else { "FAIL" });
    out
}
