use super::*;

fn names(a: &[GenSym]) -> Vec<String> {
    a.iter().map(|g| g.to_string()).collect()
}

#[test]
fn host_order_rows_then_upper() {
    assert_eq!(names(&host_alphabet(2)), ["t[1,1]", "tb[1,1]", "t[2,1]", "t[2,2]", "tb[2,2]", "tb[1,2]"]);
}

#[test]
fn sympl_order_puts_eliminated_last() {
    assert_eq!(names(&sympl_alphabet(2).unwrap()), ["s[1,1]", "s[1,2]", "sinv[1,2]", "s[2,2]", "s[2,1]"]);
}

#[test]
fn names_round_trip() {
    assert_eq!(Presentation::parse_name("uqglhat:2:2").unwrap(), (Kind::UqglHatWindow, 2, Some(2)));
    assert!(Presentation::by_name("twsympl:3").is_err());
    assert!(Presentation::parse_name("nope:2").is_err());
}

#[test]
fn cache_fills_and_is_transparent() {
    let p = Presentation::by_name("uqgl:2").unwrap();
    let x = NcPoly::parse("tb[1,2]*t[2,1]*t[2,2]", &p.vars).unwrap();
    let a = p.normal_form(&x).unwrap();
    assert!(p.cache_len() > 0);
    assert_eq!(p.normal_form(&x).unwrap(), a);
    assert_eq!(p.reduce_with(&x, Strategy::Leftmost, None).unwrap(), a);
}
