//! Published values used by the self-test and the acceptance suite.
//!
//! MZV expressions use the syntax of [`crate::genuszero::expr`]; polynomials
//! use the syntax of [`crate::freealg::parse_series`].

/// g_w for w ≤ 7 in the Lyndon-adapted bracket form.
pub const GW_POLY: &[(usize, &str)] = &[
    (2, "[xy]"),
    (3, "[x[xy]]+[[xy]y]"),
    (4, "[x[x[xy]]]+1/4[x[[xy]y]]+[[[xy]y]y]+5/4(xyxy-xyyx-yxxy+yxyx)"),
    (5, "[x[x[x[xy]]]]+2[x[x[[xy]y]]]-3/2[[x[xy]] [xy]]+2[x[[[xy]y]y]]+1/2[[xy] [[xy]y]]+[[[[xy]y]y]y]"),
    (
        6,
        "[x[x[x[x[xy]]]]]+3/4[x[x[x[[xy]y]]]]+1/6[x[[x[xy]] [xy]]]+23/16[x[x[[[xy]y]y]]]+1/12[x[[xy] [[xy]y]]]\
         -89/48[[x[[xy]y]] [xy]]+3/4[x[[[[xy]y]y]y]]+5/3[[xy] [[[xy]y]y]]+[[[[[xy]y]y]y]y]\
         +7/4(xyxxxy-xyyxxx+xyyyxy-xyyyyx-yxxxxy+yxyxxx-yyyxxy+yyyxyx)\
         +21/4(xyxyxx-xyxxyx+yxxxyx-yxxyxx-yxyyxy+yxyyyx+yyxyxy-yyxyyx)\
         +7/16(xyxxyy-xyyyxx-yxxxyy+yxyyxx)+7/48(yxxyxy-xyxyxy)\
         +35/48(yxxyyx+yxyxxy-xyxyyx-xyyxxy)+77/48(xyyxyx-yxyxyx)",
    ),
    (
        7,
        "[x[x[x[x[x[xy]]]]]]+3[x[x[x[x[[xy]y]]]]]-5[x[x[[x[x,y]] [x,y]]]]+2[[x[x[xy]]] [x[xy]]]\
         +5[x[x[x[[[xy]y]y]]]]+19/16[x[x[[xy] [[xy]y]]]]-173/16[x[[x[[xy]y]] [xy]]]-2[[x[xy]] [x[[xy]y]]]\
         +17/16[[[x[xy]] [xy]] [xy]]+5[x[x[[[[xy]y]y]y]]]+99/16[x[[xy] [[[xy]y]y]]]-61/16[[x[[xy]y]] [[xy]y]]\
         -109/16[[x[[[xy]y]y]] [xy]]+65/16[[xy] [[xy] [[xy]y]]]+3[x[[[[[xy]y]y]y]y]]+4[[xy] [[[[xy]y]y]y]]\
         +3[[[xy]y] [[[xy]y]y]]+[[[[[[xy]y]y]y]y]y]",
    ),
];

/// Z(g_w) for 2 ≤ w ≤ 11.
pub const Z_GW: &[(usize, &str)] = &[
    (2, "2 z2"),
    (3, "12 z3"),
    (4, "375/8 z4"),
    (5, "385 z5 - 105 z2 z3"),
    (6, "251797/288 z6 - 679/4 z3^2"),
    (7, "49203/4 z7 - 14091/4 z2 z5 - 11865/4 z4 z3"),
    (8, "769152355481/40974336 z8 - 18246083/1824 z3 z5 + 74974943/71136 z2 z3^2"),
    (9, "373659143/864 z9 - 264398849/3456 z6 z3 - 3702413/36 z4 z5 - 70513729/576 z2 z7 + 133133/16 z3^3"),
    (
        10,
        "22565838727030761032761/48180785666457600 z10 + 23603271373/184515876480 z2 Z35 \
         - 70504768535925229/227096463360 z3 z7 - 66965094752611/436723968 z5^2 \
         + 21865877274704331/321719989760 z2 z3 z5 + 3916397111572098571/100376636805120 z4 z3^2",
    ),
    (
        11,
        "1316030287522093/78587904 z11 + 67235/1227936 z3 Z35 + 4632642114815/4911744 z3^2 z5 \
         - 824237896586533/176822784 z2 z9 - 470709526441/4911744 z2 z3^3 - 3026492983085/818624 z4 z7 \
         - 218501860145855/78587904 z6 z5 - 3190686062952839/1414582272 z8 z3",
    ),
];

pub fn z_gw(w: usize) -> Option<&'static str> {
    Z_GW.iter().find(|(k, _)| *k == w).map(|(_, s)| *s)
}

pub fn gw_poly(w: usize) -> Option<&'static str> {
    GW_POLY.iter().find(|(k, _)| *k == w).map(|(_, s)| *s)
}


/// ε-expansions of σ3, σ5, σ7, σ9 through degree 14.
pub const SIGMA3: &str = "-1/2 e4^(2) + 1/480 [e4,e4^(1)] + 1/30240 [e4^(1),e6] - 1/120960 [e4,e6^(1)] \
    + 1/7257600 [e4,e8^(1)] - 1/1209600 [e4^(1),e8] - 1/58060800 [e4,[e4,e6]] \
    + 1/47900160 [e4^(1),e10] - 1/383201280 [e4,e10^(1)]";

pub const SIGMA5: &str = "- 1/24 e6^(4) - 5/48 [e4^(1),e4^(2)] + 1/5760 [e4,e6^(3)] - 1/5760 [e4^(1),e6^(2)] \
    + 1/5760 [e4^(2),e6^(1)] + 1/3456 [e4,[e4,e4^(2)]] + 1/6912 [e4^(1),[e4^(1),e4]] \
    + 1/145152 [e6^(1),e6^(2)] - 1/145152 [e6,e6^(3)] - 1/2073600 [e4,[e4,e6^(2)]] \
    + 139/72576000 [e4^(1),[e4,e6^(1)]] - 23/24192000 [e4,[e4^(1),e6^(1)]] \
    - 1007/145152000 [e4^(2),[e4,e6]] - 1/4147200 [e4^(1),[e4^(1),e6]] \
    + 289/48384000 [e4,[e4^(2),e6]] + 1/145152000 [e6,e8^(3)] - 1/36288000 [e6^(1),e8^(2)] \
    + 1/14515200 [e6^(2),e8^(1)] - 1/7257600 [e6^(3),e8]";

pub const SIGMA7: &str = "- 1/720 e8^(6) + 7/1152 [e4^(2),e6^(3)] - 7/1152 [e4^(1),e6^(4)] \
    - 661/57600 [e4^(1),[e4^(1),e4^(2)]] - 661/57600 [e4^(2),[e4^(2),e4]] + 1/172800 [e4,e8^(5)] \
    - 1/172800 [e4^(1),e8^(4)] + 1/172800 [e4^(2),e8^(3)] + 1/13824 [e6^(1),e6^(4)] \
    - 1/13824 [e6^(2),e6^(3)] - 1/4354560 [e6,e8^(5)] + 1/4354560 [e6^(1),e8^(4)] \
    - 1/4354560 [e6^(2),e8^(3)] + 1/4354560 [e6^(3),e8^(2)] - 1/4354560 [e6^(4),e8^(1)] \
    + 7/552960 [e4,[e4,e6^(4)]] + 7/552960 [e4,[e4^(1),e6^(3)]] + 7/184320 [e4^(1),[e4^(2),e6^(1)]] \
    + 7/552960 [e4^(2),[e4,e6^(2)]] - 7/184320 [e4,[e4^(2),e6^(2)]] - 7/276480 [e4^(2),[e4^(2),e6]] \
    - 7/552960 [e4^(1),[e4,e6^(3)]] - 7/552960 [e4^(2),[e4^(1),e6^(1)]]";

pub const SIGMA9: &str = "- 1/40320 e10^(8) - 1/5184 [e4^(1),e8^(6)] + 1/5184 [e4^(2),e8^(5)] \
    - 7/20736 [e6^(3),e6^(4)] + 1/9676800 [e4,e10^(7)] - 1/9676800 [e4^(1),e10^(6)] \
    + 1/9676800 [e4^(2),e10^(5)] + 7/4147200 [e6^(1),e8^(6)] - 7/4147200 [e6^(2),e8^(5)] \
    + 7/4147200 [e6^(3),e8^(4)] - 7/4147200 [e6^(4),e8^(3)] - 529/691200 [e4,[e4^(2),e6^(4)]] \
    + 2959/2419200 [e4^(1),[e4^(2),e6^(3)]] + 5891/6220800 [e4^(2),[e4,e6^(4)]] \
    - 443/967680 [e4^(1),[e4^(1),e6^(4)]] - 799/1088640 [e4^(2),[e4^(2),e6^(2)]] \
    - 10651/21772800 [e4^(2),[e4^(1),e6^(3)]]";

/// Lyndon-bracket terms (numerator, denominator, word) over a, b.
pub type LyndonTerms = &'static [(i64, i64, &'static str)];

/// σ3(a) at image degree 5.
pub const SIGMA3_A5: LyndonTerms = &[(-1, 1, "aabbb"), (1, 1, "ababb")];

/// σ3(b) at image degree 5, with the sign forced by the a-image.
pub const SIGMA3_B5: LyndonTerms = &[(1, 1, "abbbb")];

pub const Z3_A: LyndonTerms = &[(1, 4, "aaababb"), (1, 4, "aaabbab"), (1, 12, "aababab")];

pub const Z3_B: LyndonTerms = &[(-1, 4, "aababbb"), (-1, 4, "aabbabb"), (-1, 4, "aabbbab"), (-1, 12, "abababb")];

pub const Z5_A: LyndonTerms = &[
    (-1, 240, "aaaaababbbb"), (-1, 240, "aaaaabbbbab"), (1, 120, "aaaabaabbbb"), (1, 80, "aaaabababbb"),
    (-1, 30, "aaaababbabb"), (1, 60, "aaaababbbab"), (1, 80, "aaaabbaabbb"), (-7, 120, "aaaabbababb"),
    (-1, 30, "aaaabbabbab"), (1, 80, "aaaabbbaabb"), (1, 240, "aaaabbbabab"), (1, 240, "aaaabbbbaab"),
    (-1, 24, "aaabaababbb"), (-3, 80, "aaabaabbabb"), (-7, 240, "aaabaabbbab"), (-1, 240, "aaababaabbb"),
    (73, 240, "aaababababb"), (49, 80, "aaabababbab"), (3, 80, "aaababbaabb"), (149, 240, "aaababbabab"),
    (1, 240, "aaababbbaab"), (-1, 240, "aaabbaababb"), (-1, 60, "aaabbaabbab"), (1, 240, "aaabbabaabb"),
    (5, 16, "aaabbababab"), (-1, 240, "aaabbabbaab"), (1, 240, "aaabbbaabab"), (1, 120, "aaabbbabaab"),
    (1, 240, "aabaabaabbb"), (1, 240, "aabaabababb"), (-1, 30, "aabaababbab"), (1, 120, "aabaabbaabb"),
    (-1, 30, "aabaabbabab"), (-3, 80, "aababaababb"), (-3, 80, "aababaabbab"), (-1, 240, "aabababaabb"),
    (1, 16, "aababababab"),
];

/// ρ of selected MZVs.
pub const RHO_VALUES: &[(&str, &str)] = &[
    ("Z35", "-20163/2 f3 f5 + 28743/2 f5 f3 - 3366 f2 f3 f3"),
    (
        "Z37",
        "-5432401/16 f3 f7 + 7796217/16 f7 f3 + 119340 f5 f5 - 2698111/16 f4 f3 f3 - 29731/4 f2 f3 f5 - 366535/4 f2 f5 f3",
    ),
    (
        "Z335",
        "1629441 f5 f3 f3 - 1037295 f3 f5 f3 - 20223 f3 f3 f5 + 31943/6 f2 f9 - 473832 f2 f3 f3 f3 \
         - 420885/8 f4 f7 - 540685/4 f6 f5 + 1953356831/23712 f8 f3",
    ),
    ("z(3,5)", "-5 f3 f5 + 100471/35568 f8"),
    ("z(3,7)", "-14 f3 f7 - 6 f5 f5 + 408872741707/40214998720 f10"),
    ("z(3,3,5)", "-5 f3 f3 f5 - 45 f2 f9 - 6/5 f2^2 f7 + 4/7 f2^3 f5 + 1119631493/14735232 f11"),
    ("z3^2", "2 f3 f3"),
    ("z2 z3", "f2 f3"),
    ("z6", "f6"),
    ("z2 z5", "f2 f5"),
];

/// Z35 in terms of ζ(3,5) and products.
pub const Z35_RELATION: &str = "-1105181/80 z8 + 24453/5 z(3,5) + 28743/2 z3 z5 - 1683 z2 z3^2";

pub const Z37_RELATION: &str = "6614309/112 z(3,7) + 7796217/16 z3 z7 + 26525967/112 z5^2 - 2159/627 z2 Z35 \
    - 3203187/76 z2 z3 z5 - 60072829/608 z4 z3^2 - 408872741707/680960 z10";

/// Relations among ε-brackets in degrees 14 and 16.
pub const POLLACK_14: &str = "[e4,e10] - 3 [e6,e8]";

pub const POLLACK_16: &str = "80 [e4^(1),e12] + 16 [e12^(1),e4] - 250 [e6^(1),e10] - 125 [e10^(1),e6] \
    + 280 [e8^(1),e8] - 462 [e4,[e4,e8]] - 1725 [e6,[e6,e4]]";

/// dim FZ_w for w = 2..11.
pub const DIMENSIONS: &[(usize, usize)] = &[(2, 1), (3, 1), (4, 1), (5, 2), (6, 2), (7, 3), (8, 4), (9, 5), (10, 7), (11, 9)];

pub fn sigma_expansion(w: usize) -> Option<&'static str> {
    match w {
        3 => Some(SIGMA3),
        5 => Some(SIGMA5),
        7 => Some(SIGMA7),
        9 => Some(SIGMA9),
        _ => None,
    }
}
