//! The differential transcendence decision for `eta'' = p eta'`, `eta' != 0`.
//!
//! `eta` is `d/dt`-transcendental when neither
//!
//! 1. `Y' = dp/dt`, nor
//! 2. `Y' + p Y = 1`
//!
//! has a solution in `Q(t)(x)`. When one of them is solvable, `eta` fails
//! to be transcendental once the constants are enlarged to a
//! differentially closed field, which is what
//! [`Outcome::NotTranscendentalOverClosure`] records. The group summary
//! describes the unipotent part `Gal(M/L)` of the parameterized Galois group,
//! with `L` generated by `eta'`:
//!
//! * both equations unsolvable: `Gal(M/L)` is the full additive group;
//! * equation 2 solvable: `Gal(M/L)` is trivial, since `eta = r eta'` up to
//!   a constant for the witness `r`;
//! * only equation 1 solvable: a proper subgroup that is not computed here.
//!
//! Equation 1 being solvable is equivalent to the diagonal part of the group
//! consisting of `d/dt`-constants.

use crate::arith::RatFun;
use crate::hermite::rational_antiderivative;
use crate::ratsolve::{solve_first_order, FirstOrderOde};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConditionLabel {
    /// `Y' = dp/dt`
    Cond1Antiderivative,
    /// `Y' + p Y = 1`
    Cond2Inhomogeneous,
}

impl ConditionLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            ConditionLabel::Cond1Antiderivative => "cond1_antiderivative",
            ConditionLabel::Cond2Inhomogeneous => "cond2_inhomogeneous",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    pub label: ConditionLabel,
    pub solvable: bool,
    pub witness: Option<RatFun>,
}

impl ConditionReport {
    fn new(label: ConditionLabel, witness: Option<RatFun>) -> Self {
        ConditionReport {
            label,
            solvable: witness.is_some(),
            witness,
        }
    }

    /// Whether the stored witness (if any) solves the labeled equation for `p`.
    pub fn witness_holds(&self, p: &RatFun) -> bool {
        let Some(w) = &self.witness else {
            return true;
        };
        match self.label {
            ConditionLabel::Cond1Antiderivative => w.d_dx() == p.d_dt(),
            ConditionLabel::Cond2Inhomogeneous => {
                FirstOrderOde::new(p.clone(), RatFun::one()).is_solution(w)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GalMOverL {
    FullAdditive,
    Zero,
    ProperUnknown,
}

impl GalMOverL {
    pub fn as_str(self) -> &'static str {
        match self {
            GalMOverL::FullAdditive => "full_additive",
            GalMOverL::Zero => "zero",
            GalMOverL::ProperUnknown => "proper_unknown",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupSummary {
    pub gal_m_over_l: GalMOverL,
    pub diagonal_constant: bool,
}

impl GroupSummary {
    pub fn from_conditions(cond1_solvable: bool, cond2_solvable: bool) -> Self {
        let gal_m_over_l = match (cond1_solvable, cond2_solvable) {
            (false, false) => GalMOverL::FullAdditive,
            (_, true) => GalMOverL::Zero,
            (true, false) => GalMOverL::ProperUnknown,
        };
        GroupSummary {
            gal_m_over_l,
            diagonal_constant: cond1_solvable,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    Transcendental,
    NotTranscendentalOverClosure,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Transcendental => "transcendental",
            Outcome::NotTranscendentalOverClosure => "not_transcendental_over_closure",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub p: RatFun,
    pub cond1: ConditionReport,
    pub cond2: ConditionReport,
    pub outcome: Outcome,
    pub group: GroupSummary,
}

pub fn check_condition_one(p: &RatFun) -> ConditionReport {
    ConditionReport::new(
        ConditionLabel::Cond1Antiderivative,
        rational_antiderivative(&p.d_dt()),
    )
}

pub fn check_condition_two(p: &RatFun) -> ConditionReport {
    let ode = FirstOrderOde::new(p.clone(), RatFun::one());
    ConditionReport::new(ConditionLabel::Cond2Inhomogeneous, solve_first_order(&ode))
}

pub fn decide(p: &RatFun) -> Verdict {
    let cond1 = check_condition_one(p);
    let cond2 = check_condition_two(p);
    let outcome = if !cond1.solvable && !cond2.solvable {
        Outcome::Transcendental
    } else {
        Outcome::NotTranscendentalOverClosure
    };
    let group = GroupSummary::from_conditions(cond1.solvable, cond2.solvable);
    Verdict {
        p: p.clone(),
        cond1,
        cond2,
        outcome,
        group,
    }
}

/// Re-checks every witness by substitution and every derived field against
/// the condition reports.
pub fn verify_verdict(v: &Verdict) -> bool {
    let reports_ok = [
        (&v.cond1, ConditionLabel::Cond1Antiderivative),
        (&v.cond2, ConditionLabel::Cond2Inhomogeneous),
    ]
    .iter()
    .all(|(r, label)| {
        r.label == *label && r.solvable == r.witness.is_some() && r.witness_holds(&v.p)
    });
    let both_unsolvable = !v.cond1.solvable && !v.cond2.solvable;
    reports_ok
        && (v.outcome == Outcome::Transcendental) == both_unsolvable
        && v.group == GroupSummary::from_conditions(v.cond1.solvable, v.cond2.solvable)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_ratfun;

    fn rf(s: &str) -> RatFun {
        parse_ratfun(s).unwrap()
    }

    #[test]
    fn condition_one_examples() {
        assert!(!check_condition_one(&rf("(t-1-x)/x")).solvable);
        let r = check_condition_one(&rf("1/x^2"));
        assert_eq!(r.witness, Some(RatFun::zero()));
        let r = check_condition_one(&rf("t*x"));
        assert_eq!(r.witness, Some(rf("x^2/2")));
    }

    #[test]
    fn condition_two_examples() {
        assert!(!check_condition_two(&rf("(t-1-x)/x")).solvable);
        assert_eq!(check_condition_two(&rf("0")).witness, Some(rf("x")));
        assert_eq!(check_condition_two(&rf("t/x")).witness, Some(rf("x/(t+1)")));
    }

    #[test]
    fn decide_examples() {
        let v = decide(&rf("(t-1-x)/x"));
        assert_eq!(v.outcome, Outcome::Transcendental);
        assert_eq!(v.group.gal_m_over_l, GalMOverL::FullAdditive);
        assert!(!v.group.diagonal_constant);

        let v = decide(&rf("2/x"));
        assert_eq!(v.outcome, Outcome::NotTranscendentalOverClosure);
        assert_eq!(v.cond1.witness, Some(RatFun::zero()));
        assert_eq!(v.cond2.witness, Some(rf("x/3")));
        assert_eq!(v.group.gal_m_over_l, GalMOverL::Zero);

        let v = decide(&rf("1/x^2"));
        assert_eq!(v.outcome, Outcome::NotTranscendentalOverClosure);
        assert!(v.cond1.solvable && !v.cond2.solvable);
        assert_eq!(v.group.gal_m_over_l, GalMOverL::ProperUnknown);
        assert!(v.group.diagonal_constant);
    }

    #[test]
    fn verify_examples() {
        let v = decide(&rf("(t-1-x)/x"));
        assert!(verify_verdict(&v));

        let mut altered = decide(&rf("2/x"));
        assert!(verify_verdict(&altered));
        altered.p = rf("3/x");
        assert!(!verify_verdict(&altered));

        let mut bad = decide(&rf("1/x^2"));
        bad.outcome = Outcome::Transcendental;
        assert!(!verify_verdict(&bad));
    }
}
