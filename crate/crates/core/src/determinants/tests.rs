use super::*;

#[test]
fn mq_signs() {
    let v = VarTable::q();
    assert_eq!(mq(&v, 1), -LaurentPoly::q_pow(&v, 1));
    assert_eq!(mq(&v, -2), LaurentPoly::q_pow(&v, -2));
    assert_eq!(mq(&v, -3), -LaurentPoly::q_pow(&v, -3));
}

#[test]
fn gl_eval_n1() {
    let ctx = GlEval::new(1).unwrap();
    assert_eq!(qdet(&ctx, Which::T).unwrap().to_string(), "t[1,1] - tb[1,1]*u^-1");
}
