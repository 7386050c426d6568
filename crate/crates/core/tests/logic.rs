mod common;

use aggparadox::logic::{
    entails, equivalent, mifap_assignments, models, parse, parse_formula_file, partial_to_conjunction,
    prime_implicates, Clause, Expr, Formula, IssueSet, ParseError,
};
use common::{bools, eval, naive_models, naive_prime_implicates};
use proptest::prelude::*;

fn arb_expr(m: usize) -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        1 => Just(Expr::True),
        1 => Just(Expr::False),
        8 => (0..m).prop_map(Expr::var),
    ];
    leaf.prop_recursive(5, 40, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Expr::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::or(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::implies(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Expr::iff(a, b)),
        ]
    })
}

fn arb_formula(max_m: usize) -> impl Strategy<Value = Formula> {
    (1..=max_m)
        .prop_flat_map(|m| arb_expr(m).prop_map(move |e| Formula::new(IssueSet::numbered(m).unwrap(), e).unwrap()))
}

proptest! {
    #[test]
    fn eval_agrees_with_models(f in arb_formula(4)) {
        let got: Vec<Vec<bool>> = models(&f).unwrap().iter().map(bools).collect();
        prop_assert_eq!(&got, &naive_models(&f));
        for a in common::assignments(f.num_issues()) {
            prop_assert_eq!(f.eval(&common::to_ballot(&a)).unwrap(), eval(f.expr(), &a));
        }
    }

    #[test]
    fn print_parse_round_trip(f in arb_formula(5)) {
        let text = f.to_string();
        let back = parse(&text, f.issues()).unwrap();
        prop_assert_eq!(back.normalized(), f.normalized(), "printed as {}", text);
    }

    #[test]
    fn prime_implicates_match_oracle(f in arb_formula(4)) {
        prop_assert_eq!(prime_implicates(&f).unwrap(), naive_prime_implicates(&f));
    }

    #[test]
    fn prime_implicates_are_equivalent_and_prime(f in arb_formula(5)) {
        let pis = prime_implicates(&f).unwrap();
        let cnf = Formula::new(
            f.issues().clone(),
            Expr::conjunction(pis.iter().map(Clause::to_expr)),
        ).unwrap();
        prop_assert!(equivalent(&cnf, &f).unwrap());
        for c in &pis {
            prop_assert!(entails(&f, &c.to_formula(f.issues()).unwrap()).unwrap());
            for i in 0..c.len() {
                let shorter = c.without(i).to_formula(f.issues()).unwrap();
                prop_assert!(!entails(&f, &shorter).unwrap());
            }
        }
    }

    #[test]
    fn mifap_bijection(f in arb_formula(5)) {
        let rhos = mifap_assignments(&f).unwrap();
        let pis = prime_implicates(&f).unwrap();
        prop_assert_eq!(rhos.len(), pis.len());
        for rho in &rhos {
            let clause = rho.negation_clause();
            prop_assert_eq!(clause.len(), rho.len());
            prop_assert!(pis.contains(&clause));
            if !rho.is_empty() {
                // The conjunction of the bindings is inconsistent with f.
                let conj = partial_to_conjunction(rho, f.issues()).unwrap();
                let both = Formula::new(f.issues().clone(), Expr::and(conj.into_expr(), f.expr().clone())).unwrap();
                prop_assert!(models(&both).unwrap().is_empty());
            }
        }
    }
}

#[test]
fn corpus_prime_implicates() {
    for (name, f, _) in common::corpus() {
        assert_eq!(prime_implicates(&f).unwrap(), naive_prime_implicates(&f), "{name}");
    }
}

#[test]
fn model_set_example() {
    let f = parse("p1 & ~p2", &IssueSet::numbered(3).unwrap()).unwrap();
    let ms: Vec<Vec<u8>> = models(&f).unwrap().iter().map(|b| b.bits()).collect();
    assert_eq!(ms, vec![vec![1, 0, 0], vec![1, 0, 1]]);
}

#[test]
fn parse_examples() {
    let issues = IssueSet::numbered(3).unwrap();
    assert_eq!(
        parse("p1 & p2 -> p3", &issues).unwrap().expr(),
        &Expr::implies(Expr::and(Expr::var(0), Expr::var(1)), Expr::var(2))
    );
    assert_eq!(
        parse("p1 -> p2 -> p3", &issues).unwrap().expr(),
        &Expr::implies(Expr::var(0), Expr::implies(Expr::var(1), Expr::var(2)))
    );
    assert_eq!(
        parse("p1 | p2 <-> ~p3 & p1", &issues).unwrap().expr(),
        &Expr::iff(
            Expr::or(Expr::var(0), Expr::var(1)),
            Expr::and(Expr::not(Expr::var(2)), Expr::var(0))
        )
    );
    assert!(matches!(
        parse("p1 & (p2 -> )", &issues),
        Err(ParseError::Syntax {
            line: 1,
            column: 13,
            ..
        })
    ));
    match parse("p1 & q", &issues) {
        Err(ParseError::UnknownIdentifier { name, .. }) => assert_eq!(name, "q"),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn deep_nesting_is_rejected_not_overflowed() {
    let issues = IssueSet::numbered(1).unwrap();
    let text = format!("{}p1{}", "(".repeat(10_000), ")".repeat(10_000));
    assert!(parse(&text, &issues).is_err());
    let negs = format!("{}p1", "~".repeat(10_000));
    assert!(parse(&negs, &issues).is_err());
}

#[test]
fn formula_file_render_round_trip() {
    for (name, f, _) in common::corpus() {
        let file = aggparadox::logic::FormulaFile::from_formula(&f);
        let back = parse_formula_file(&file.render()).unwrap();
        assert!(equivalent(&back.constraint(), &f).unwrap(), "{name}");
    }
}
