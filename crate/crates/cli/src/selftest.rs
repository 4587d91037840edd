//! Pinned golden suite: reproduces the documented example computations
//! exactly and prints one pass/fail line per check.

use motivic_core::flag::{fixed_point_weights, restrict, weight_function_flag};
use motivic_core::matrix::{matrix_table, weight_function_matrix, OrbitIndex};
use motivic_core::parse::parse_polynomial;
use motivic_core::polytope::{is_positive, punctured_containment};
use motivic_core::ranks::{phi_resolution, q_binomial, segre_sieve, RankLocus};
use motivic_core::{
    CompositionIndex, ConvexPolytope, Int, LambdaSign, LaurentPolynomial, Monomial,
    RationalExpression, VariableTable,
};
use std::process::ExitCode;
use std::sync::Arc;

type P = LaurentPolynomial<Int>;

fn p(table: &Arc<VariableTable>, s: &str) -> P {
    parse_polynomial::<Int>(s, table).unwrap()
}

fn atoms() -> bool {
    // On C with weight x: tau of the origin, of C, and of C - {0}.
    let t = VariableTable::flat(vec!["x"]);
    let w = vec![Monomial::var(1, 0)];
    let origin = P::lambda_class(&t, &w, LambdaSign::MinusOne, true);
    let whole = P::lambda_class(&t, &w, LambdaSign::Y, true);
    let punctured = &whole - &origin;
    origin == p(&t, "(1) + (-1)*x^-1")
        && whole == p(&t, "(1) + (y)*x^-1")
        && punctured == p(&t, "(1+y)*x^-1")
}

fn good_example() -> bool {
    // (C*)^2 acting on C^2 with weights ab and a^3 b^-2.
    let t = VariableTable::flat(vec!["a", "b"]);
    let w1 = Monomial::new(vec![1, 1]);
    let w2 = Monomial::new(vec![3, -2]);
    let lam = |ws: &[Monomial], sign| P::lambda_class(&t, ws, sign, true);
    let whole = lam(&[w1.clone(), w2.clone()], LambdaSign::Y);
    let x_axis = &lam(&[w1.clone()], LambdaSign::Y) * &lam(&[w2.clone()], LambdaSign::MinusOne);
    let y_axis = &lam(&[w1.clone()], LambdaSign::MinusOne) * &lam(&[w2.clone()], LambdaSign::Y);
    let origin = lam(&[w1.clone(), w2.clone()], LambdaSign::MinusOne);
    let x_punct = &p(&t, "(1+y)*a^-1*b^-1") * &lam(&[w2.clone()], LambdaSign::MinusOne);
    let y_punct = &lam(&[w1.clone()], LambdaSign::MinusOne) * &p(&t, "(1+y)*a^-3*b^2");
    let plane_punct = p(&t, "(-1+y^2)*a^-4*b^1 + (1+y)*a^-1*b^-1 + (1+y)*a^-3*b^2");
    let seven_ok = whole == p(&t, "(1) + (y)*a^-1*b^-1 + (y)*a^-3*b^2 + (y^2)*a^-4*b^1")
        && &whole - &origin == plane_punct
        && &x_punct + &y_punct == &(&x_axis + &y_axis) - &(&origin + &origin)
        && x_axis == &p(&t, "(1) + (y)*a^-1*b^-1") * &p(&t, "(1) + (-1)*a^-3*b^2")
        && y_axis == &p(&t, "(1) + (-1)*a^-1*b^-1") * &p(&t, "(1) + (y)*a^-3*b^2")
        && x_punct == &p(&t, "(1+y)*a^-1*b^-1") * &p(&t, "(1) + (-1)*a^-3*b^2")
        && y_punct == &p(&t, "(1) + (-1)*a^-1*b^-1") * &p(&t, "(1+y)*a^-3*b^2");

    let np = |q: &P| ConvexPolytope::newton(q);
    let hull = |pts: Vec<Vec<i64>>| ConvexPolytope::from_points(2, pts);
    let polys_ok = np(&x_punct) == hull(vec![vec![-4, 1], vec![-1, -1]])
        && np(&y_punct) == hull(vec![vec![-4, 1], vec![-3, 2]])
        && np(&plane_punct) == hull(vec![vec![-4, 1], vec![-1, -1], vec![-3, 2]]);
    let big = np(&origin);
    let contain_ok = punctured_containment(&np(&x_punct), &big)
        && punctured_containment(&np(&y_punct), &big)
        && punctured_containment(&np(&plane_punct), &big);
    let positive_ok = is_positive(&[vec![1, 1], vec![3, -2]]).is_some();
    let toric = origin.toric_substitute(&[1, 0]);
    let toric_ok =
        toric == p(toric.table(), "(1)*xi^-4 + (-1)*xi^-3 + (-1)*xi^-1 + (1)");
    seven_ok && polys_ok && contain_ok && positive_ok && toric_ok
}

fn bad_example() -> bool {
    // Non-positive C* action on C^2 with weights a and a^-1: the punctured
    // containment must fail.
    let t = VariableTable::flat(vec!["a"]);
    let w = vec![Monomial::new(vec![1]), Monomial::new(vec![-1])];
    let whole = P::lambda_class(&t, &w, LambdaSign::Y, true);
    let origin = P::lambda_class(&t, &w, LambdaSign::MinusOne, true);
    let punct = &whole - &origin;
    let display_ok = punct == p(&t, "(1+y)*a^-1 + (-1+y^2) + (1+y)*a^1");
    let np = ConvexPolytope::newton(&punct);
    let interval = ConvexPolytope::from_points(1, vec![vec![-1], vec![1]]);
    display_ok
        && np == interval
        && !punctured_containment(&np, &ConvexPolytope::newton(&origin))
}

fn golden_matrix() -> bool {
    let w = |k: usize, n: usize, j: &[usize]| {
        weight_function_matrix::<Int>(&OrbitIndex::new(k, n, j.to_vec())).unwrap()
    };
    let t12 = matrix_table(1, 2);
    let ok12 = w(1, 2, &[1])
        == &p(&t12, "(1+y)*a1^1*b1^-1") * &p(&t12, "(1) + (y)*a1^1*b2^-1")
        && w(1, 2, &[2]) == &p(&t12, "(1) + (-1)*a1^1*b1^-1") * &p(&t12, "(1+y)*a1^1*b2^-1")
        && w(1, 2, &[])
            == &p(&t12, "(1) + (-1)*a1^1*b1^-1") * &p(&t12, "(1) + (-1)*a1^1*b2^-1");

    let mut ok1n = true;
    for n in 1..=4usize {
        let t = matrix_table(1, n);
        for u in 1..=n {
            let mut expect = p(&t, "(1+y)");
            for i in 1..u {
                expect = &expect * &p(&t, &format!("(1) + (-1)*a1^1*b{i}^-1"));
            }
            expect = &expect * &p(&t, &format!("(1)*a1^1*b{u}^-1"));
            for i in (u + 1)..=n {
                expect = &expect * &p(&t, &format!("(1) + (y)*a1^1*b{i}^-1"));
            }
            ok1n &= w(1, n, &[u]) == expect;
        }
    }

    let t22 = matrix_table(2, 2);
    let pre = p(&t22, "(1+2*y+y^2)*a1^1*a2^1*b1^-1*b2^-1");
    let inner = p(
        &t22,
        "(1-y) + (-y+y^2)*a1^1*a2^1*b1^-1*b2^-1 + (y)*a1^1*b1^-1 + (y)*a1^1*b2^-1 \
         + (y)*a2^1*b1^-1 + (y)*a2^1*b2^-1",
    );
    let ok22 = w(2, 2, &[1, 2]) == &pre * &inner;

    let t24 = matrix_table(2, 4);
    let mut outer = p(&t24, "(1+2*y+y^2)*a1^1*a2^1");
    for i in 1..=2 {
        outer = &outer * &p(&t24, &format!("(1) + (-1)*a{i}^1*b1^-1"));
        outer = &outer * &p(&t24, &format!("(1) + (y)*a{i}^1*b4^-1"));
    }
    let inner24 = p(
        &t24,
        "(1-y)*b2^-1*b3^-1 + (-y+y^2)*a1^1*a2^1*b2^-2*b3^-2 \
         + (y)*a1^1*b2^-1*b3^-2 + (y)*a1^1*b2^-2*b3^-1 \
         + (y)*a2^1*b2^-1*b3^-2 + (y)*a2^1*b2^-2*b3^-1",
    );
    let ok24 = w(2, 4, &[2, 3]) == &outer * &inner24;

    ok12 && ok1n && ok22 && ok24
}

fn gr24_restrictions() -> bool {
    let omega = CompositionIndex::parse("1,3/2,4").unwrap();
    let wf = weight_function_flag::<Int>(&omega);
    let beta = omega.shape().beta_table();
    let zero_ok = restrict(&wf.w_tilde, &CompositionIndex::parse("1,2/3,4").unwrap())
        .unwrap()
        .is_zero();
    let self_expect = &(&(&p(&beta, "(1) + (y)*b1^1*b2^-1") * &p(&beta, "(1) + (y)*b1^1*b4^-1"))
        * &p(&beta, "(1) + (-1)*b3^1*b2^-1"))
        * &p(&beta, "(1) + (y)*b3^1*b4^-1");
    let self_ok = restrict(&wf.w_tilde, &omega).unwrap() == self_expect;
    let theta = CompositionIndex::parse("3,4/1,2").unwrap();
    let long = restrict(&wf.w_tilde, &theta).unwrap();
    let prefactor = P::term(
        &beta,
        Monomial::new(vec![-2, -2, 0, 1]),
        motivic_core::YPolyI::from_coeffs(vec![1, 1]),
    );
    let inner = p(
        &beta,
        "(1)*b1^1*b2^2 + (2*y+y^2)*b1^1*b2^1*b3^1 + (y)*b1^1*b2^1*b4^1 \
         + (-y)*b1^1*b3^1*b4^1 + (y)*b2^2*b3^1 + (-y)*b2^1*b3^2 \
         + (-1-2*y)*b2^1*b3^1*b4^1 + (-y^2)*b3^2*b4^1",
    );
    let long_ok = long == &prefactor * &inner;
    // Polytope containment at theta, whose cell tangent space is zero.
    let td = fixed_point_weights(&theta);
    let lam_nor = P::lambda_class(&beta, &td.normal, LambdaSign::MinusOne, true);
    let contain_ok = td.tangent.is_empty()
        && punctured_containment(
            &ConvexPolytope::newton(&long),
            &ConvexPolytope::newton(&lam_nor),
        );
    zero_ok && self_ok && long_ok && contain_ok
}

fn sieve_displays() -> bool {
    // ts of the zero locus and of the dense locus in Hom(C^2, C^2).
    let full = segre_sieve::<Int>(RankLocus::new(2, 2, 2)).unwrap();
    let phi2 = phi_resolution::<Int>(2, 2, 2).unwrap();
    let t = matrix_table(2, 2);
    let pre = p(&t, "(1+2*y+y^2)*a1^1*a2^1*b1^-1*b2^-1");
    let inner = p(
        &t,
        "(1-y) + (-y+y^2)*a1^1*a2^1*b1^-1*b2^-1 + (y)*a1^1*b1^-1 + (y)*a1^1*b2^-1 \
         + (y)*a2^1*b1^-1 + (y)*a2^1*b2^-1",
    );
    let mut den = Vec::new();
    for u in 1..=2usize {
        for v in 1..=2usize {
            den.push(p(&t, &format!("(1) + (y)*a{u}^1*b{v}^-1")));
        }
    }
    let zero_expect = RationalExpression::new(&pre * &inner, den);
    let zero = segre_sieve::<Int>(RankLocus::new(2, 2, 0)).unwrap();
    full.rat_equal(&phi2) && zero.rat_equal(&zero_expect)
}

fn qbinom_values() -> bool {
    q_binomial::<Int>(2, 1).display("q", false) == "1+q"
        && q_binomial::<Int>(4, 2).coeffs() == [1, 1, 2, 1, 1]
}

pub fn run() -> ExitCode {
    let checks: Vec<(&str, fn() -> bool)> = vec![
        ("atoms", atoms),
        ("positive-action-example", good_example),
        ("non-positive-action-example", bad_example),
        ("matrix-weight-functions", golden_matrix),
        ("grassmannian-restrictions", gr24_restrictions),
        ("segre-sieve-displays", sieve_displays),
        ("q-binomials", qbinom_values),
    ];
    let mut all_ok = true;
    for (name, f) in checks {
        let ok = f();
        all_ok &= ok;
        println!("{} {}", if ok { "ok  " } else { "FAIL" }, name);
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
