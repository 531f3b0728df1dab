//! Three-valued Łukasiewicz propositional logic over element-named variables.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::framework::ElementId;

/// A truth degree in {0, ½, 1}, stored exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Truth3 {
    Zero,
    Half,
    One,
}

impl Truth3 {
    /// Value order 0 < ½ < 1.
    pub const ALL: [Truth3; 3] = [Truth3::Zero, Truth3::Half, Truth3::One];

    fn halves(self) -> u8 {
        match self {
            Self::Zero => 0,
            Self::Half => 1,
            Self::One => 2,
        }
    }

    fn from_halves(h: u8) -> Self {
        match h {
            0 => Self::Zero,
            1 => Self::Half,
            _ => Self::One,
        }
    }

    pub fn neg(self) -> Self {
        Self::from_halves(2 - self.halves())
    }

    /// Łukasiewicz implication min(1, 1 − x + y).
    pub fn imp(self, other: Self) -> Self {
        Self::from_halves((2 + other.halves()).saturating_sub(self.halves()).min(2))
    }

    pub fn iff(self, other: Self) -> Self {
        self.imp(other).min(other.imp(self))
    }

    pub fn to_f64(self) -> f64 {
        f64::from(self.halves()) / 2.0
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Zero => "0",
            Self::Half => "1/2",
            Self::One => "1",
        }
    }
}

impl fmt::Display for Truth3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub type Assignment3 = BTreeMap<ElementId, Truth3>;

/// Propositional formula. `And` and `Or` are n-ary and expected to be nonempty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Var(ElementId),
    Const(Truth3),
    Neg(Box<Formula>),
    And(Vec<Formula>),
    Or(Vec<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn var(id: ElementId) -> Self {
        Self::Var(id)
    }

    pub fn neg(inner: Formula) -> Self {
        Self::Neg(Box::new(inner))
    }

    /// Panics on an empty sequence.
    pub fn and(items: Vec<Formula>) -> Self {
        assert!(!items.is_empty(), "conjunction needs at least one operand");
        Self::And(items)
    }

    /// Panics on an empty sequence.
    pub fn or(items: Vec<Formula>) -> Self {
        assert!(!items.is_empty(), "disjunction needs at least one operand");
        Self::Or(items)
    }

    pub fn imp(lhs: Formula, rhs: Formula) -> Self {
        Self::Imp(Box::new(lhs), Box::new(rhs))
    }

    pub fn iff(lhs: Formula, rhs: Formula) -> Self {
        Self::Iff(Box::new(lhs), Box::new(rhs))
    }

    pub fn variables(&self) -> BTreeSet<ElementId> {
        let mut out = BTreeSet::new();
        self.collect_variables(&mut out);
        out
    }

    fn collect_variables(&self, out: &mut BTreeSet<ElementId>) {
        match self {
            Self::Var(v) => {
                out.insert(v.clone());
            }
            Self::Const(_) => {}
            Self::Neg(f) => f.collect_variables(out),
            Self::And(fs) | Self::Or(fs) => fs.iter().for_each(|f| f.collect_variables(out)),
            Self::Imp(a, b) | Self::Iff(a, b) => {
                a.collect_variables(out);
                b.collect_variables(out);
            }
        }
    }

    /// Renames every variable through `rename`.
    pub fn map_variables(&self, rename: &impl Fn(&ElementId) -> ElementId) -> Formula {
        match self {
            Self::Var(v) => Self::Var(rename(v)),
            Self::Const(c) => Self::Const(*c),
            Self::Neg(f) => Self::neg(f.map_variables(rename)),
            Self::And(fs) => Self::And(fs.iter().map(|f| f.map_variables(rename)).collect()),
            Self::Or(fs) => Self::Or(fs.iter().map(|f| f.map_variables(rename)).collect()),
            Self::Imp(a, b) => Self::imp(a.map_variables(rename), b.map_variables(rename)),
            Self::Iff(a, b) => Self::iff(a.map_variables(rename), b.map_variables(rename)),
        }
    }

    /// Normal form modulo commutativity of `&`, `|` and `<->`: operands are
    /// sorted by their printed form, recursively.
    pub fn commutative_normal_form(&self) -> Formula {
        fn sorted(fs: &[Formula]) -> Vec<Formula> {
            let mut out: Vec<Formula> = fs.iter().map(Formula::commutative_normal_form).collect();
            out.sort_by_cached_key(|f| f.to_string());
            out
        }
        match self {
            Self::Var(_) | Self::Const(_) => self.clone(),
            Self::Neg(f) => Self::neg(f.commutative_normal_form()),
            Self::And(fs) => Self::And(sorted(fs)),
            Self::Or(fs) => Self::Or(sorted(fs)),
            Self::Imp(a, b) => Self::imp(a.commutative_normal_form(), b.commutative_normal_form()),
            Self::Iff(a, b) => {
                let mut pair = sorted(&[(**a).clone(), (**b).clone()]);
                let rhs = pair.pop().expect("two operands");
                let lhs = pair.pop().expect("two operands");
                Self::iff(lhs, rhs)
            }
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn joined(f: &mut fmt::Formatter<'_>, items: &[Formula], op: &str) -> fmt::Result {
            f.write_str("(")?;
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    f.write_str(op)?;
                }
                write!(f, "{item}")?;
            }
            f.write_str(")")
        }
        match self {
            Self::Var(v) => write!(f, "{v}"),
            Self::Const(c) => write!(f, "{c}"),
            Self::Neg(inner) => write!(f, "!{inner}"),
            Self::And(items) => joined(f, items, " & "),
            Self::Or(items) => joined(f, items, " | "),
            Self::Imp(a, b) => write!(f, "({a} -> {b})"),
            Self::Iff(a, b) => write!(f, "({a} <-> {b})"),
        }
    }
}

/// Evaluates `formula` in three-valued Łukasiewicz logic.
pub fn eval3(formula: &Formula, assignment: &Assignment3) -> Result<Truth3> {
    Ok(match formula {
        Formula::Var(v) => *assignment.get(v).ok_or_else(|| Error::Unbound(v.clone()))?,
        Formula::Const(c) => *c,
        Formula::Neg(f) => eval3(f, assignment)?.neg(),
        Formula::And(fs) => fs.iter().try_fold(Truth3::One, |acc, f| Ok::<_, Error>(acc.min(eval3(f, assignment)?)))?,
        Formula::Or(fs) => fs.iter().try_fold(Truth3::Zero, |acc, f| Ok::<_, Error>(acc.max(eval3(f, assignment)?)))?,
        Formula::Imp(a, b) => eval3(a, assignment)?.imp(eval3(b, assignment)?),
        Formula::Iff(a, b) => eval3(a, assignment)?.iff(eval3(b, assignment)?),
    })
}

pub fn is_model3(formula: &Formula, assignment: &Assignment3) -> Result<bool> {
    Ok(eval3(formula, assignment)? == Truth3::One)
}

pub(crate) fn check_cap(variables: usize, cap: u128) -> Result<()> {
    let required = 3u128.checked_pow(variables as u32).unwrap_or(u128::MAX);
    if required > cap {
        return Err(Error::CapExceeded { required, cap });
    }
    Ok(())
}

/// Calls `visit` on every point of {0, ½, 1}^n in lexicographic order, the
/// first position being the most significant.
pub(crate) fn for_each_point(n: usize, mut visit: impl FnMut(&[Truth3])) {
    let mut point = vec![Truth3::Zero; n];
    loop {
        visit(&point);
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            match point[i] {
                Truth3::Zero => {
                    point[i] = Truth3::Half;
                    break;
                }
                Truth3::Half => {
                    point[i] = Truth3::One;
                    break;
                }
                Truth3::One => point[i] = Truth3::Zero,
            }
        }
    }
}

/// All models of `formula` over its variables in alphabetical order.
pub fn enumerate_models3(formula: &Formula, cap: u128) -> Result<Vec<Assignment3>> {
    let variables: Vec<ElementId> = formula.variables().into_iter().collect();
    enumerate_models3_over(formula, &variables, cap)
}

/// All models of `formula`, enumerated lexicographically over `variables`
/// (which must cover the formula's variables).
pub fn enumerate_models3_over(formula: &Formula, variables: &[ElementId], cap: u128) -> Result<Vec<Assignment3>> {
    check_cap(variables.len(), cap)?;
    let compiled = Compiled::new(formula, variables)?;
    let mut models = Vec::new();
    for_each_point(variables.len(), |point| {
        if compiled.eval(point) == Truth3::One {
            models.push(variables.iter().cloned().zip(point.iter().copied()).collect());
        }
    });
    Ok(models)
}

/// A formula with variables resolved to positions, for enumeration.
enum Compiled {
    Var(usize),
    Const(Truth3),
    Neg(Box<Compiled>),
    And(Vec<Compiled>),
    Or(Vec<Compiled>),
    Imp(Box<Compiled>, Box<Compiled>),
    Iff(Box<Compiled>, Box<Compiled>),
}

impl Compiled {
    fn new(formula: &Formula, variables: &[ElementId]) -> Result<Self> {
        let index: HashMap<&ElementId, usize> = variables.iter().enumerate().map(|(i, v)| (v, i)).collect();
        Self::build(formula, &index)
    }

    fn build(formula: &Formula, index: &HashMap<&ElementId, usize>) -> Result<Self> {
        let many = |fs: &[Formula]| fs.iter().map(|f| Self::build(f, index)).collect::<Result<Vec<_>>>();
        Ok(match formula {
            Formula::Var(v) => Self::Var(*index.get(v).ok_or_else(|| Error::Unbound(v.clone()))?),
            Formula::Const(c) => Self::Const(*c),
            Formula::Neg(f) => Self::Neg(Box::new(Self::build(f, index)?)),
            Formula::And(fs) => Self::And(many(fs)?),
            Formula::Or(fs) => Self::Or(many(fs)?),
            Formula::Imp(a, b) => Self::Imp(Box::new(Self::build(a, index)?), Box::new(Self::build(b, index)?)),
            Formula::Iff(a, b) => Self::Iff(Box::new(Self::build(a, index)?), Box::new(Self::build(b, index)?)),
        })
    }

    fn eval(&self, point: &[Truth3]) -> Truth3 {
        match self {
            Self::Var(i) => point[*i],
            Self::Const(c) => *c,
            Self::Neg(f) => f.eval(point).neg(),
            Self::And(fs) => {
                let mut acc = Truth3::One;
                for f in fs {
                    acc = acc.min(f.eval(point));
                    if acc == Truth3::Zero {
                        break;
                    }
                }
                acc
            }
            Self::Or(fs) => fs.iter().map(|f| f.eval(point)).max().unwrap_or(Truth3::Zero),
            Self::Imp(a, b) => a.eval(point).imp(b.eval(point)),
            Self::Iff(a, b) => a.eval(point).iff(b.eval(point)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::framework::id;
    use proptest::prelude::*;
    use Truth3::*;

    fn var(name: &str) -> Formula {
        Formula::var(id(name))
    }

    fn assign(pairs: &[(&str, Truth3)]) -> Assignment3 {
        pairs.iter().map(|(k, v)| (id(k), *v)).collect()
    }

    // Rows: antecedent 0, ½, 1; columns: consequent 0, ½, 1.
    const IMP_TABLE: [[Truth3; 3]; 3] = [[One, One, One], [Half, One, One], [Zero, Half, One]];
    const IFF_TABLE: [[Truth3; 3]; 3] = [[One, Half, Zero], [Half, One, Half], [Zero, Half, One]];

    #[test]
    fn implication_and_equivalence_tables() {
        let f_imp = Formula::imp(var("a"), var("b"));
        let f_iff = Formula::iff(var("a"), var("b"));
        for (i, x) in Truth3::ALL.into_iter().enumerate() {
            for (j, y) in Truth3::ALL.into_iter().enumerate() {
                let s = assign(&[("a", x), ("b", y)]);
                assert_eq!(eval3(&f_imp, &s).unwrap(), IMP_TABLE[i][j], "{x} -> {y}");
                assert_eq!(eval3(&f_iff, &s).unwrap(), IFF_TABLE[i][j], "{x} <-> {y}");
            }
        }
    }

    #[test]
    fn worked_values() {
        let imp = Formula::imp(var("a"), var("b"));
        assert_eq!(eval3(&imp, &assign(&[("a", One), ("b", Half)])).unwrap(), Half);
        let iff = Formula::iff(var("a"), var("b"));
        assert_eq!(eval3(&iff, &assign(&[("a", Zero), ("b", Half)])).unwrap(), Half);
        assert_eq!(eval3(&iff, &assign(&[("a", Half), ("b", Half)])).unwrap(), One);
    }

    #[test]
    fn models_of_small_formulas() {
        let liar = Formula::iff(var("a"), Formula::neg(var("a")));
        assert!(is_model3(&liar, &assign(&[("a", Half)])).unwrap());
        assert!(!is_model3(&liar, &assign(&[("a", One)])).unwrap());
        assert!(is_model3(&Formula::Const(One), &Assignment3::new()).unwrap());

        assert_eq!(enumerate_models3(&liar, 100).unwrap(), vec![assign(&[("a", Half)])]);
        assert_eq!(enumerate_models3(&var("a"), 100).unwrap(), vec![assign(&[("a", One)])]);
        let contradiction = Formula::and(vec![var("a"), Formula::neg(var("a"))]);
        assert!(enumerate_models3(&contradiction, 100).unwrap().is_empty());
    }

    #[test]
    fn unbound_and_cap_errors() {
        assert!(matches!(eval3(&var("a"), &Assignment3::new()), Err(Error::Unbound(_))));
        let f = Formula::and(vec![var("a"), var("b"), var("c")]);
        match enumerate_models3(&f, 26) {
            Err(Error::CapExceeded { required, cap }) => assert_eq!((required, cap), (27, 26)),
            other => panic!("{other:?}"),
        }
        assert_eq!(enumerate_models3(&f, 27).unwrap().len(), 1);
    }

    #[test]
    fn pretty_printer() {
        let f = Formula::and(vec![
            Formula::iff(var("a"), Formula::neg(Formula::Const(Zero))),
            Formula::or(vec![var("b"), Formula::Const(Half)]),
            Formula::imp(var("a"), Formula::Const(One)),
        ]);
        assert_eq!(f.to_string(), "((a <-> !0) & (b | 1/2) & (a -> 1))");
    }

    #[test]
    fn enumeration_order_is_lexicographic() {
        let mut seen = Vec::new();
        for_each_point(2, |p| seen.push(p.to_vec()));
        assert_eq!(seen.len(), 9);
        assert_eq!(seen[0], vec![Zero, Zero]);
        assert_eq!(seen[1], vec![Zero, Half]);
        assert_eq!(seen[3], vec![Half, Zero]);
        assert_eq!(seen[8], vec![One, One]);
        let mut empty = 0;
        for_each_point(0, |_| empty += 1);
        assert_eq!(empty, 1);
    }

    fn arb_formula(names: &'static [&'static str]) -> impl Strategy<Value = Formula> {
        let leaf = prop_oneof![
            prop::sample::select(names).prop_map(|n| Formula::var(id(n))),
            prop::sample::select(Truth3::ALL.to_vec()).prop_map(Formula::Const),
        ];
        leaf.prop_recursive(4, 32, 3, |inner| {
            prop_oneof![
                inner.clone().prop_map(Formula::neg),
                prop::collection::vec(inner.clone(), 1..4).prop_map(Formula::And),
                prop::collection::vec(inner.clone(), 1..4).prop_map(Formula::Or),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::imp(a, b)),
                (inner.clone(), inner).prop_map(|(a, b)| Formula::iff(a, b)),
            ]
        })
    }

    const NAMES: &[&str] = &["p", "q", "r", "s"];

    fn all_assignments() -> Vec<Assignment3> {
        let vars: Vec<ElementId> = NAMES.iter().map(|n| id(n)).collect();
        let mut out = Vec::new();
        for_each_point(vars.len(), |p| out.push(vars.iter().cloned().zip(p.iter().copied()).collect()));
        out
    }

    proptest! {
        #[test]
        fn double_negation_is_identity(f in arb_formula(NAMES)) {
            let nn = Formula::neg(Formula::neg(f.clone()));
            for s in all_assignments() {
                prop_assert_eq!(eval3(&nn, &s).unwrap(), eval3(&f, &s).unwrap());
            }
        }

        #[test]
        fn iff_is_one_exactly_on_equal_values(a in arb_formula(NAMES), b in arb_formula(NAMES)) {
            let both = Formula::iff(a.clone(), b.clone());
            for s in all_assignments() {
                let same = eval3(&a, &s).unwrap() == eval3(&b, &s).unwrap();
                prop_assert_eq!(eval3(&both, &s).unwrap() == One, same);
            }
        }

        #[test]
        fn enumeration_matches_filtering(f in arb_formula(NAMES)) {
            let vars: Vec<ElementId> = NAMES.iter().map(|n| id(n)).collect();
            let expected: Vec<Assignment3> = all_assignments()
                .into_iter()
                .filter(|s| is_model3(&f, s).unwrap())
                .collect();
            prop_assert_eq!(enumerate_models3_over(&f, &vars, 1 << 20).unwrap(), expected);
        }
    }
}
