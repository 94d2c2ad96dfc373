//! Published table values, transcribed verbatim.

/// `(n, C(2n,n), U_A(n), U_S(n))` at 10 significant digits.
pub const TABLE1: [(u64, &str, &str, &str); 10] = [
    (1, "2", "4.275146228", "2.001982123"),
    (2, "6", "8.785429701", "6.000250574"),
    (3, "20", "25.79485257", "20.00011914"),
    (4, "70", "84.72303658", "70.00010214"),
    (5, "252", "93.5845534", "252.0001224"),
    (6, "924", "1049.430558", "924.0001819"),
    (7, "3432", "3827.665444", "3432.000314"),
    (8, "12870", "14159.34751", "12870.00061"),
    (9, "48620", "52926.51245", "48620.00127"),
    (10, "184756", "199421.3118", "184756.0029"),
];

/// `(n, C(2n,n) sqrt(pi n) / 4^n, exp(D_2), exp(D_4))` at 14 significant digits.
pub const TABLE2: [(u64, &str, &str, &str); 10] = [
    (1, "0.88622692545276", "0.88710523105688", "0.88677114441088"),
    (2, "0.93998560298663", "0.94002485899037", "0.93998766871395"),
    (3, "0.95936878869983", "0.95937450378689", "0.95936885517397"),
    (4, "0.96931069971395", "0.96931211408847", "0.96931070519255"),
    (5, "0.97535007714523", "0.97535055078797", "0.97535007791724"),
    (6, "0.97940560431422", "0.97940579711995", "0.97940560446817"),
    (7, "0.98231617716265", "0.98231626711057", "0.98231617720181"),
    (8, "0.98450640547183", "0.98450645187199", "0.98450640548375"),
    (9, "0.98621413686019", "0.98621416271614", "0.98621413686436"),
    (10, "0.98758292882616", "0.98758294414165", "0.98758292882778"),
];

/// `(n, C_n, order-2 bound, order-4 bound)` at 14 significant digits.
pub const TABLE3: [(u64, &str, &str, &str); 10] = [
    (1, "1", "1.0009910617460", "1.0006140853347"),
    (2, "2", "2.0000835246915", "2.0000043952318"),
    (3, "5", "5.0000297856629", "5.0000003464472"),
    (4, "14", "14.000020428169", "14.000000079129"),
    (5, "42", "42.000020395749", "42.000000033244"),
    (6, "132", "132.00002598551", "132.00000002075"),
    (7, "429", "429.00003928232", "429.00000001710"),
    (8, "1430", "1430.0000673964", "1430.0000000173"),
    (9, "4862", "4862.0001274689", "4862.0000000205"),
    (10, "16796", "16796.000260473", "16796.000000028"),
];

/// Cells known to disagree with recomputation: `(table, n, column index)`.
/// Table 1, n = 5, U_A lost its leading digit ("93.58..." for 293.58...).
pub const KNOWN_ERRATA: [(&str, u64, usize); 1] = [("table1", 5, 1)];
