//! Exhaustive sweeps: tables, closed-form agreement, cofactor independence,
//! mod-12 periodicity and homotopy invariance.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use rayon::prelude::*;

use super::{
    closed_form, homotopy_equivalent, refined_closed_form, state_sum, state_sum_with_cofactor,
    InvariantValue, LensSpace,
};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::modular::{extended_cofactor, LEVEL};
use crate::report::{Check, Report, Witness};

/// All coprime (p, q) with 1 ≤ p ≤ p_max and 0 ≤ q < p, ordered by (p, q).
pub fn canonical_pairs(p_max: u32) -> Vec<LensSpace> {
    (1..=p_max as i64)
        .flat_map(|p| (0..p).filter_map(move |q| LensSpace::new(p, q).ok()))
        .collect()
}

/// State sums for many lens spaces, evaluated in parallel; output order matches input order.
pub fn state_sums(spaces: &[LensSpace]) -> Vec<InvariantValue> {
    spaces.par_iter().map(state_sum).collect()
}

fn state_sum_map(spaces: impl IntoIterator<Item = LensSpace>) -> HashMap<LensSpace, InvariantValue> {
    let spaces: Vec<LensSpace> = spaces.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
    let values = state_sums(&spaces);
    spaces.into_iter().zip(values).collect()
}

#[derive(Clone, Debug)]
pub struct TableRow {
    pub p: BigInt,
    pub q: BigInt,
    pub state_sum: Cyclotomic,
    pub closed_form: Cyclotomic,
    pub refined_closed_form: Cyclotomic,
}

impl TableRow {
    /// Agreement with the published case table.
    pub fn agrees(&self) -> bool {
        self.state_sum == self.closed_form
    }

    pub fn agrees_refined(&self) -> bool {
        self.state_sum == self.refined_closed_form
    }
}

/// One row per coprime 1 ≤ p ≤ p_max, 0 ≤ q < p, in (p, q) order.
pub fn table(p_max: u32) -> Vec<TableRow> {
    let pairs = canonical_pairs(p_max);
    pairs
        .par_iter()
        .map(|l| TableRow {
            p: l.p().clone(),
            q: l.q().clone(),
            state_sum: state_sum(l),
            closed_form: closed_form(l),
            refined_closed_form: refined_closed_form(l),
        })
        .collect()
}

fn value_witness(l: &LensSpace, expected: &Cyclotomic, actual: &Cyclotomic) -> Witness {
    Witness {
        row: None,
        col: None,
        expected: format!("{l} = {}", expected.pretty()),
        actual: format!("{l} = {}", actual.pretty()),
    }
}

/// Recomputes Z(L) with the alternative cofactors (a + kp, b + kq) for each k.
pub fn check_well_defined(l: &LensSpace, shifts: &[i64]) -> Report {
    let mut report = Report::new("wellDefined");
    for check in well_defined_checks(l, shifts) {
        report.push(check);
    }
    report
}

fn well_defined_checks(l: &LensSpace, shifts: &[i64]) -> Vec<Check> {
    let (a, b) = extended_cofactor(l.p(), l.q()).expect("LensSpace is coprime");
    let base = state_sum(l);
    shifts
        .iter()
        .map(|&k| {
            let a2 = &a + l.p() * k;
            let b2 = &b + l.q() * k;
            let value = state_sum_with_cofactor(l, &a2, &b2).expect("shifted cofactor has det 1");
            let name = format!("{l}: cofactor shift k={k}");
            if value == base {
                Check::pass(name)
            } else {
                Check::fail(name, value_witness(l, &base, &value))
            }
        })
        .collect()
}

/// [`check_well_defined`] over every canonical pair up to `p_max`, one check per pair.
pub fn verify_well_defined_sweep(p_max: u32, shifts: &[i64]) -> Report {
    let pairs = canonical_pairs(p_max);
    let checks: Vec<Check> = pairs
        .par_iter()
        .map(|l| {
            let name = format!("{l}: cofactor shifts {shifts:?}");
            match well_defined_checks(l, shifts).into_iter().find(|c| !c.pass) {
                None => Check::pass(name),
                Some(c) => Check::fail(name, c.witness.expect("failed checks carry a witness")),
            }
        })
        .collect();
    Report {
        suite: "wellDefined".into(),
        checks,
    }
}

fn residue_class(l: &LensSpace) -> (u32, i64, i64) {
    let g = l.p_gcd_12();
    let p_res = l.p().mod_floor_small(LEVEL);
    let q_res = l.q().mod_floor_small(g as i64);
    (g, p_res, q_res)
}

trait SmallResidue {
    fn mod_floor_small(&self, m: i64) -> i64;
}

impl SmallResidue for BigInt {
    fn mod_floor_small(&self, m: i64) -> i64 {
        use num_integer::Integer;
        use num_traits::ToPrimitive;
        self.mod_floor(&BigInt::from(m)).to_i64().expect("small residue")
    }
}

fn class_name(label: &str, (g, p_res, q_res): (u32, i64, i64)) -> String {
    if g == 1 {
        format!("{label}: p≡{p_res} (mod 12)")
    } else {
        format!("{label}: p≡{p_res} (mod 12), q≡{q_res} (mod {g})")
    }
}

/// state sum = closed form for every canonical pair up to `p_max`.
///
/// Checks are grouped by residue class (p mod 12, q mod gcd(p,12)), once
/// against the published table and once against the refined table, plus the
/// normalization Z(L(1,0)) = 1 and the vanishing Z(L(12,5)) = 0.
pub fn verify_closed_form(p_max: u32) -> Report {
    let rows = table(p_max);
    let mut report = Report::new("closedform");

    let mut classes: BTreeMap<(u32, i64, i64), Vec<&TableRow>> = BTreeMap::new();
    for row in &rows {
        let l = LensSpace::new(row.p.clone(), row.q.clone()).expect("table rows are coprime");
        classes.entry(residue_class(&l)).or_default().push(row);
    }

    for (label, pick) in [
        ("published table", (|r: &TableRow| &r.closed_form) as fn(&TableRow) -> &Cyclotomic),
        ("refined table", |r: &TableRow| &r.refined_closed_form),
    ] {
        for (class, members) in &classes {
            let name = class_name(label, *class);
            let mismatch = members.iter().find(|r| r.state_sum != *pick(r));
            report.push(match mismatch {
                None => Check::pass(format!("{name} ({} pairs)", members.len())),
                Some(r) => {
                    let l = LensSpace::new(r.p.clone(), r.q.clone()).expect("coprime");
                    let bad = members.iter().filter(|r| r.state_sum != *pick(r)).count();
                    Check::fail(
                        format!("{name} ({bad} of {} pairs disagree)", members.len()),
                        value_witness(&l, pick(r), &r.state_sum),
                    )
                }
            });
        }
    }

    let lookup = |p: i64, q: i64| {
        rows.iter()
            .find(|r| r.p == BigInt::from(p) && r.q == BigInt::from(q))
            .map(|r| r.state_sum.clone())
    };
    if let Some(z) = lookup(1, 0) {
        report.push(Check::equal("Z(L(1,0)) = 1", &Cyclotomic::one().pretty(), &z.pretty()));
    }
    if let Some(z) = lookup(12, 5) {
        report.push(Check::equal("Z(L(12,5)) = 0", &Cyclotomic::zero().pretty(), &z.pretty()));
    }
    report
}

/// Z(L(p,q)) = Z(L(p + 12s, q + 12t)) for every canonical base pair with
/// p ≤ p_max − 12 and every coprime shift with p + 12s ≤ p_max, q + 12t < p_max.
pub fn verify_periodicity(p_max: u32) -> Result<Report> {
    if p_max < 13 {
        return Err(Error::Precondition(format!("periodicity needs p_max ≥ 13, got {p_max}")));
    }
    let level = LEVEL;
    let bases = canonical_pairs(p_max - 12);
    let max = p_max as i64;
    let shifted: Vec<(LensSpace, Vec<LensSpace>)> = bases
        .into_iter()
        .map(|l| {
            let p = l.p().mod_floor_small(i64::MAX);
            let q = l.q().mod_floor_small(i64::MAX);
            let targets = (0..)
                .map(|s| p + level * s)
                .take_while(|&p2| p2 <= max)
                .flat_map(|p2| {
                    (0..)
                        .map(move |t| q + level * t)
                        .take_while(|&q2| q2 < max)
                        .map(move |q2| (p2, q2))
                })
                .filter(|&(p2, q2)| (p2, q2) != (p, q))
                .filter_map(|(p2, q2)| LensSpace::new(p2, q2).ok())
                .collect();
            (l, targets)
        })
        .collect();

    let values = state_sum_map(
        shifted
            .iter()
            .flat_map(|(l, ts)| std::iter::once(l.clone()).chain(ts.iter().cloned())),
    );

    let mut report = Report::new("periodicity");
    for (l, targets) in &shifted {
        let base = &values[l];
        let name = format!("{l} vs {} shifts", targets.len());
        let bad = targets.iter().find(|t| values[*t] != *base);
        report.push(match bad {
            None => Check::pass(name),
            Some(t) => Check::fail(
                name,
                Witness {
                    row: None,
                    col: None,
                    expected: format!("{l} = {}", base.pretty()),
                    actual: format!("{t} = {}", values[t].pretty()),
                },
            ),
        });
    }
    Ok(report)
}

/// Homotopy-equivalent L(p,q) ≃ L(p,q′) have equal invariants, for 1 ≤ p ≤ p_max.
///
/// Each p contributes one check for the published closed form and one for the state sum.
pub fn verify_corollary(p_max: u32) -> Report {
    let pairs = canonical_pairs(p_max);
    let values = state_sum_map(pairs.iter().cloned());
    let mut by_p: BTreeMap<BigInt, Vec<&LensSpace>> = BTreeMap::new();
    for l in &pairs {
        by_p.entry(l.p().clone()).or_default().push(l);
    }

    let per_p: Vec<(Check, Check)> = by_p
        .par_iter()
        .map(|(p, spaces)| {
            let closed: Vec<Cyclotomic> = spaces.iter().map(|l| closed_form(l)).collect();
            let mut count = 0usize;
            let mut closed_bad = None;
            let mut sum_bad = None;
            for (i, l) in spaces.iter().enumerate() {
                for (j, m) in spaces.iter().enumerate() {
                    if !homotopy_equivalent(l, m) {
                        continue;
                    }
                    count += 1;
                    if closed_bad.is_none() && closed[i] != closed[j] {
                        closed_bad = Some((*l, *m, closed[i].clone(), closed[j].clone()));
                    }
                    if sum_bad.is_none() && values[*l] != values[*m] {
                        sum_bad = Some((*l, *m, values[*l].clone(), values[*m].clone()));
                    }
                }
            }
            let make = |route: &str, bad: Option<(&LensSpace, &LensSpace, Cyclotomic, Cyclotomic)>| {
                let name = format!("p={p}: {route} equal on {count} equivalent pairs");
                match bad {
                    None => Check::pass(name),
                    Some((l, m, x, y)) => Check::fail(
                        name,
                        Witness {
                            row: None,
                            col: None,
                            expected: format!("{l} = {}", x.pretty()),
                            actual: format!("{m} = {}", y.pretty()),
                        },
                    ),
                }
            };
            (make("closed form", closed_bad), make("state sum", sum_bad))
        })
        .collect();

    let mut report = Report::new("corollary");
    for (a, b) in per_p {
        report.push(a);
        report.push(b);
    }
    report
}
