use z4neg::decoder::{decode_with_trace, locate_errors_mod2};
use z4neg::keyeq::{syndromes, t_series, u_coefficients};
use z4neg::reference::{
    DECODE_EXAMPLE_ERROR, DECODE_EXAMPLE_ONE_PLUS_T, DECODE_EXAMPLE_PAIR, DECODE_EXAMPLE_SYNDROMES,
    DECODE_EXAMPLE_WORD, SBA_EXAMPLE_BASIS,
};
use z4neg::solver::{leading, minimal_regular, sba, solve_by_approximations, ModuleTerm, Update, DECODER_ORDER};
use z4neg::text::{parse_poly, poly_to_string, Token};
use z4neg::{make_ring, Code, Poly, RingElement, Word, Z4};

fn gr42_u() -> (z4neg::RingDescriptor, Poly<RingElement>) {
    let r = make_ring(2).unwrap();
    let a = r.x();
    let three = r.constant(Z4::THREE);
    (r, Poly::new(vec![r.one(), three * a + three]))
}

#[test]
fn approximation_example_basis() {
    let (r, u) = gr42_u();
    let run = solve_by_approximations(&r, &u, 2, DECODER_ORDER);
    for (g, (a, b)) in run.basis.elements().iter().zip(SBA_EXAMPLE_BASIS) {
        assert_eq!(g.a, parse_poly(&r, a).unwrap());
        assert_eq!(g.b, parse_poly(&r, b).unwrap());
    }
    assert_eq!(run.basis.shape(), (1, 1, 1, 1));

    // round 0 in the order [1,0],[2,0],[0,1],[0,2]; the last one is -2 = 2,
    // as the update [0,2] - 2·[1,0] = [2,2] requires
    let tokens = |xs: &[RingElement]| xs.iter().map(Token::token).collect::<Vec<_>>();
    assert_eq!(tokens(&run.rounds[0].discrepancies), ["1,0", "2,0", "3,0", "2,0"].map(String::from));
    // round 1 explicitly: [z,0], [2z,0], [1,1], [2,2] have discrepancies 1, 2, 3α+3, 2α+2
    assert_eq!(tokens(&run.rounds[1].discrepancies), ["1,0", "2,0", "3,3", "2,2"].map(String::from));
    // 1/(3α+3) = 1/α^2 = α
    assert_eq!(run.rounds[1].updates[0], Update::Cancel { with: 2, factor: r.x() });
    assert_eq!(run.rounds[1].updates[2], Update::Shift);
}

#[test]
fn approximation_example_leading_terms() {
    let (r, u) = gr42_u();
    let basis = sba(&r, &u, 2);
    let lts: Vec<_> = basis.elements().iter().map(|g| leading(g, -1).unwrap()).collect();
    assert_eq!(lts[0], (ModuleTerm::left(1), r.one()));
    assert_eq!(lts[1], (ModuleTerm::left(1), r.constant(Z4::TWO)));
    assert_eq!(lts[2], (ModuleTerm::right(1), r.one()));
    assert_eq!(lts[3], (ModuleTerm::right(1), r.constant(Z4::TWO)));
}

#[test]
fn approximation_example_normalized_solution() {
    let (r, u) = gr42_u();
    let sol = minimal_regular(&sba(&r, &u, 2), 1).unwrap();
    assert_eq!(poly_to_string(&sol.selected.a), "0,3;1,0");
    assert_eq!(sol.normalized.a.coeff(0), Some(r.one()));
    assert_eq!(sol.normalized.b, Poly::one(&r));
    assert!(sol.normalized.solves(&u, 2));
    // the scale factor is the inverse of 3α, found by search
    let three_alpha = r.element(&[0, 3]).unwrap();
    let inv = r.elements().find(|&y| three_alpha * y == r.one()).unwrap();
    assert_eq!(sol.normalized, sol.selected.scale(inv));
    // [(α+1)z + 1, 1]
    assert_eq!(poly_to_string(&sol.normalized.a), "1,0;1,1");
}

#[test]
fn decoding_example_pipeline() {
    let code = Code::new(15, 2).unwrap();
    let r = code.ring();
    let v: Word = DECODE_EXAMPLE_WORD.parse().unwrap();
    let s = syndromes(&v, &code).unwrap();
    let tokens: Vec<String> = s.values().iter().map(Token::token).collect();
    assert_eq!(tokens, DECODE_EXAMPLE_SYNDROMES);
    // printed as 3α^3+α^2+3α+2 and 2α^3+α^2+2α+1 in the ring's generator
    assert_eq!(s.values()[0].to_string(), "3x^3+x^2+3x+2");
    assert_eq!(s.values()[1].to_string(), "2x^3+x^2+2x+1");

    let one_plus_t = t_series(&u_coefficients(&s)).one_plus_t();
    assert_eq!(poly_to_string(&one_plus_t), DECODE_EXAMPLE_ONE_PLUS_T);

    let sol = minimal_regular(&sba(&r, &one_plus_t, 3), 2).unwrap();
    assert_eq!(poly_to_string(&sol.selected.a), DECODE_EXAMPLE_PAIR.0);
    assert_eq!(poly_to_string(&sol.selected.b), DECODE_EXAMPLE_PAIR.1);

    let out = decode_with_trace(&v, &code);
    let trace = out.trace.as_ref().unwrap();
    assert!(trace.doubles.is_empty());
    assert_eq!(trace.singles, vec![4, 13]);
    assert_eq!(out.error().unwrap().to_string(), DECODE_EXAMPLE_ERROR);
    let c = out.codeword().unwrap();
    assert!(syndromes(c, &code).unwrap().is_zero());
    assert!(code.contains(c));
}

#[test]
fn decoding_example_residue_locator() {
    // μσ = (1 + μα^4 z)(1 + μα^13 z)
    let code = Code::new(15, 2).unwrap();
    let k = code.ring().residue_field();
    let root = |j: i64| code.alpha_power(j).mu();
    let one = z4neg::Coefficient::one_in(&k);
    let sigma = &Poly::new(vec![one, root(4)]) * &Poly::new(vec![one, root(13)]);
    let (doubles, singles) = locate_errors_mod2(&sigma, &code).unwrap();
    assert!(doubles.is_empty());
    assert_eq!(singles, vec![4, 13]);
}

#[test]
fn printed_word_is_uncorrectable() {
    let code = Code::new(15, 2).unwrap();
    let printed: Word = z4neg::reference::PRINTED_WORD.parse().unwrap();
    assert_eq!(code.distance_to_code_exhaustive(&printed).unwrap(), 4);
    assert!(!decode_with_trace(&printed, &code).is_success());
}
