//! Reference regular-representation matrices, entries as polynomials in
//! `a, b` written in the usual infix syntax.

pub type Fixture = &'static [&'static [&'static str]];

/// Multiplication by `e` on `{1, e, e^2}`.
pub const LEVEL2_E: Fixture = &[&["0", "0", "-b"], &["1", "0", "-a"], &["0", "1", "0"]];

/// Multiplication by `x_P` on the power basis, level 3.
pub const LEVEL3_X: Fixture = &[
    &["0", "0", "0", "a^2/3"],
    &["1", "0", "0", "-4b"],
    &["0", "1", "0", "-2a"],
    &["0", "0", "1", "0"],
];

pub const LEVEL3_APRIME: Fixture = &[
    &["-9a", "0", "-10a^2", "0"],
    &["0", "-9a", "120b", "-10a^2"],
    &["-30", "0", "51a", "120b"],
    &["0", "-30", "0", "51a"],
];

pub const LEVEL3_BPRIME: Fixture = &[
    &["-27b", "-70a^2/3", "0", "98a^3/3"],
    &["-42a", "253b", "-70a^2/3", "-392ab"],
    &["0", "98a", "253b", "-658a^2/3"],
    &["-70", "0", "98a", "253b"],
];

/// Multiplication by `x_P + x_2P` on the symmetric level-5 basis.
pub const LEVEL5_SUM: Fixture = &[
    &["0", "0", "-4b/3", "-4b/3", "16ab/3", "3a^2"],
    &["1", "0", "-2a/3", "-2a/3", "11a^2/3", "-8b"],
    &["0", "2", "0", "0", "-12b", "-2a"],
    &["0", "1", "0", "0", "-4b", "2a"],
    &["0", "0", "0", "0", "0", "15"],
    &["0", "0", "1/3", "4/3", "-4a/3", "0"],
];

/// Multiplication by `x_P x_2P` on the symmetric level-5 basis.
pub const LEVEL5_PRODUCT: Fixture = &[
    &["0", "-4b/3", "0", "a^2", "(16b^2-4a^3)/5", "40ab/3"],
    &["0", "-2a/3", "0", "-4b", "24ab/5", "29a^2/3"],
    &["1", "0", "0", "-2a", "9a^2/5", "-32b"],
    &["0", "0", "0", "0", "a^2/5", "-12b"],
    &["0", "0", "1", "3", "-18a/5", "0"],
    &["0", "1/3", "0", "0", "-8b/5", "-10a/3"],
];

pub const LEVEL5_APRIME: Fixture = &[
    &["-19a", "40b", "-30a^2", "-60a^2", "72a^3 - 448b^2", "-1600ab"],
    &["0", "a", "120b", "120b", "-512ab", "-1160a^2"],
    &["0", "0", "41a", "0", "-192a^2", "3960b"],
    &["-30", "0", "0", "-79a", "-18a^2", "1320b"],
    &["0", "0", "-90", "-420", "365a", "0"],
    &["0", "-40", "0", "0", "184b", "321a"],
];

pub const LEVEL5_BPRIME: Fixture = &[
    &["-55b", "-210a^2", "-2632ab/3", "-11032ab/3", "13888a^2b/3", "1554a^3-12320b^2"],
    &["-42a", "505b", "-1946a^2/3", "-8036a^2/3", "7658a^3/3-3360b^2", "-13104ab"],
    &["0", "56a", "2185b", "9240b", "-9576ab", "-5096a^2"],
    &["0", "-182a", "840b", "3025b", "-2632ab", "-994a^2"],
    &["0", "-1050", "0", "0", "4705b", "7770a"],
    &["-70", "0", "658a/3", "2212a/3", "-2842a^2/3", "5265b"],
];

/// `I - A rho(a')` at level 2, entries in `a, b, A, B`.
pub const LEVEL2_M_LEFT: Fixture = &[
    &["1 + 4Aa", "-15Ab", "0"],
    &["0", "1 - 11Aa", "-15Ab"],
    &["15A", "0", "1 - 11Aa"],
];

/// `I - B rho(b')` at level 2.
pub const LEVEL2_M_RIGHT: Fixture = &[
    &["1 - 22Bb", "0", "14Bab"],
    &["-14Ba", "1 - 22Bb", "14Ba^2"],
    &["0", "-14Ba", "1 - 22Bb"],
];
