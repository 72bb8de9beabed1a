// Coefficient tables for the published three-party full-correlation Bell
// inequalities with critical visibility below 1/2, stored row-major with the
// first party slowest, exactly as the source tables print them.

pub(crate) struct RawEntry {
    pub label: &'static str,
    pub table: u8,
    pub settings: [usize; 3],
    pub local_bound: i64,
    pub visibility: f64,
    pub coeffs: &'static [i64],
}

pub(crate) const ENTRIES: &[RawEntry] = &[
    RawEntry {
        label: "V_343^1",
        table: 1,
        settings: [3, 3, 4],
        local_bound: 44,
        visibility: 0.49967,
        coeffs: &[
            4, -4, 0, -10,
            3, 4, 4, -1,
            3, -6, 14, 9,

            -4, -3, -4, -1,
            3, -3, 0, -2,
            -3, -4, -4, 1,

            -6, 3, 14, -9,
            -4, -3, -4, -1,
            -4, 4, 0, 10,
        ],
    },
    RawEntry {
        label: "V_343^2",
        table: 1,
        settings: [3, 3, 4],
        local_bound: 24,
        visibility: 0.49972,
        coeffs: &[
            -2, 5, 3, 0,
            4, 5, -1, -8,
            -2, 0, -2, -2,

            2, 5, -3, 8,
            -2, 5, 3, 0,
            2, 0, 2, 2,

            2, 0, 2, 2,
            -2, 0, -2, -2,
            -2, 0, 2, 0,
        ],
    },
    RawEntry {
        label: "V_344^1",
        table: 1,
        settings: [3, 4, 4],
        local_bound: 16,
        visibility: 0.49851,
        coeffs: &[
            0, 2, 1, -1,
            -1, -1, -1, 1,
            -1, -1, 1, 1,
            0, 0, -1, 1,

            -3, -5, -1, -3,
            -4, 2, -1, 1,
            -1, 1, 0, -2,
            0, -2, 2, 0,

            3, -1, -2, -2,
            3, -3, 0, 0,
            0, 2, 1, -1,
            0, -2, 1, 1,
        ],
    },
    RawEntry {
        label: "V_344^2",
        table: 1,
        settings: [3, 4, 4],
        local_bound: 76,
        visibility: 0.4986,
        coeffs: &[
            -25, 14, -11, -6,
            6, 1, -7, 6,
            13, 12, 4, -1,
            10, -3, -6, -7,

            0, 14, 11, 7,
            -7, 0, 9, -6,
            15, 11, 3, -1,
            -10, -3, 5, 8,

            -7, 0, 6, -3,
            3, -1, -6, -6,
            0, -1, -1, 2,
            -6, 0, 5, -5,
        ],
    },
    RawEntry {
        label: "V_344^3",
        table: 1,
        settings: [3, 4, 4],
        local_bound: 24,
        visibility: 0.49863,
        coeffs: &[
            -2, 3, -2, -1,
            -3, 1, 2, 0,
            5, 1, 0, -4,
            0, 3, 2, -5,

            2, -1, -2, 1,
            -2, 1, -2, -1,
            0, 0, 0, 0,
            -2, 2, 0, 0,

            -2, 2, -2, 0,
            -3, 2, 2, -1,
            -5, -1, 0, 4,
            8, 3, 2, 3,
        ],
    },
    RawEntry {
        label: "V_344^4",
        table: 1,
        settings: [3, 4, 4],
        local_bound: 20,
        visibility: 0.49875,
        coeffs: &[
            -2, 3, 1, -2,
            2, 1, -1, -2,
            0, -4, 0, -4,
            2, 6, 0, 0,

            2, -2, 1, 1,
            -2, -2, -1, 3,
            0, -4, 0, -4,
            -2, 0, 0, -6,

            -2, -1, 0, 1,
            -2, 1, 0, -1,
            0, 0, 0, 0,
            0, 2, 0, -2,
        ],
    },
    RawEntry {
        label: "V_344^5",
        table: 1,
        settings: [3, 4, 4],
        local_bound: 20,
        visibility: 0.49876,
        coeffs: &[
            0, -1, 2, -1,
            -2, -1, -1, 0,
            0, 1, 0, -1,
            -2, -1, -1, 0,

            2, 2, 2, 0,
            4, -1, 1, 4,
            -2, 1, -1, 0,
            0, -2, 2, -4,

            2, 1, 2, 1,
            -2, 0, 2, -4,
            -2, 2, 1, 1,
            -6, -1, 3, 4,
        ],
    },
    RawEntry {
        label: "V_344^6",
        table: 1,
        settings: [3, 4, 4],
        local_bound: 20,
        visibility: 0.49879,
        coeffs: &[
            -2, -2, -1, -1,
            0, -1, 1, 2,
            2, 1, 0, 1,
            0, 0, 0, 0,

            3, -2, 2, 1,
            2, 1, -1, 2,
            6, 1, 4, -3,
            -3, 0, 3, 0,

            -3, 2, 1, -2,
            -2, -2, 0, -2,
            0, -2, 4, 2,
            -3, 0, 3, 0,
        ],
    },
    RawEntry {
        label: "V_344^7",
        table: 1,
        settings: [3, 4, 4],
        local_bound: 16,
        visibility: 0.49881,
        coeffs: &[
            0, -2, 1, -1,
            0, -2, -1, 1,
            3, 1, 0, 2,
            3, -1, 4, 0,

            -1, -1, 3, -1,
            0, -1, -1, 2,
            -2, 2, 5, 1,
            -3, 0, -3, 0,

            1, -1, -2, 0,
            0, 1, 0, 1,
            -1, 1, 1, -1,
            0, -1, 1, 0,
        ],
    },
    RawEntry {
        label: "V_344^8",
        table: 1,
        settings: [3, 4, 4],
        local_bound: 20,
        visibility: 0.49883,
        coeffs: &[
            1, -1, -1, -1,
            -1, 1, 0, -2,
            1, -2, -1, 0,
            1, 0, 0, 1,

            1, 1, 3, -1,
            -1, 3, 0, 2,
            -2, 6, -2, -2,
            4, 4, -1, 1,

            0, 2, 2, -2,
            0, 2, 2, 2,
            3, 0, -3, -2,
            -3, -4, 1, 0,
        ],
    },
    RawEntry {
        label: "V_344^9",
        table: 1,
        settings: [3, 4, 4],
        local_bound: 40,
        visibility: 0.49886,
        coeffs: &[
            1, 5, -3, -3,
            0, -4, -4, 4,
            -8, 0, -4, -4,
            -7, -7, 1, 1,

            -1, 3, 2, -2,
            -2, 0, -2, -4,
            0, 4, 2, -2,
            1, -1, -2, 0,

            2, -6, 5, 1,
            2, 4, 2, -4,
            -8, 12, 2, 6,
            -8, -6, 1, -1,
        ],
    },
    RawEntry {
        label: "V_344^10",
        table: 1,
        settings: [3, 4, 4],
        local_bound: 20,
        visibility: 0.49891,
        coeffs: &[
            -4, -4, 0, 0,
            -1, 2, -1, -2,
            -5, 0, -1, -2,
            -2, 2, 0, 2,

            0, 0, -1, 1,
            1, -1, 0, -2,
            2, -2, 0, 0,
            -1, 1, -1, -1,

            4, 4, 1, -1,
            -2, 3, 1, -2,
            1, -6, -1, -2,
            -1, 1, -1, 1,
        ],
    },
    RawEntry {
        label: "V_444^1",
        table: 2,
        settings: [4, 4, 4],
        local_bound: 12,
        visibility: 0.49699,
        coeffs: &[
            0, -1, 1, 0,
            -2, -3, -2, -1,
            0, 0, 0, 0,
            2, 0, -1, -1,

            0, -1, 1, 0,
            2, -1, -1, 0,
            0, 0, 0, 0,
            -2, 2, 0, 0,

            1, 1, 1, 1,
            0, -1, 0, 1,
            -1, 1, 0, 0,
            0, -1, 1, 0,

            1, 1, -1, -1,
            0, 1, -1, 0,
            -1, 1, 0, 0,
            0, 1, -2, 1,
        ],
    },
    RawEntry {
        label: "V_444^2",
        table: 2,
        settings: [4, 4, 4],
        local_bound: 12,
        visibility: 0.4972,
        coeffs: &[
            0, 0, 0, 0,
            0, -1, 1, 0,
            0, -1, 1, 0,
            0, 0, 0, 0,

            0, 1, 2, 1,
            2, 0, 0, 2,
            2, -1, -1, 0,
            0, 0, -1, 1,

            0, 1, 1, 0,
            0, -2, 1, -1,
            0, 2, -1, 1,
            0, 1, 1, 0,

            0, 0, -1, -1,
            2, -1, 0, 1,
            2, 2, 1, -3,
            0, -1, 0, -1,
        ],
    },
    RawEntry {
        label: "V_444^3",
        table: 2,
        settings: [4, 4, 4],
        local_bound: 12,
        visibility: 0.49751,
        coeffs: &[
            1, 2, -2, -1,
            0, 0, 1, -1,
            1, -1, 1, 1,
            0, 1, 0, 1,

            0, -1, 0, -1,
            0, 0, 0, 0,
            0, -1, -2, 1,
            0, 2, 2, 0,

            0, -2, 1, -1,
            0, -1, 1, 0,
            1, -2, 0, 1,
            1, -1, -2, 0,

            1, 1, 1, 1,
            0, -1, 0, 1,
            0, 0, -1, 1,
            -1, 0, 0, 1,
        ],
    },
    RawEntry {
        label: "V_444^4",
        table: 2,
        settings: [4, 4, 4],
        local_bound: 12,
        visibility: 0.49765,
        coeffs: &[
            -2, -2, -1, -1,
            -2, -1, 0, 1,
            -1, 0, 1, 0,
            -1, 1, 0, 0,

            -1, -1, 1, -1,
            2, 0, 1, 1,
            1, -1, 1, 1,
            0, 0, 1, -1,

            -1, -1, 1, 1,
            1, 0, -1, -2,
            1, 0, 0, 1,
            -1, 1, 0, 0,

            0, 0, -1, 1,
            -1, 1, 0, 0,
            1, -1, 0, 0,
            0, 0, 1, -1,
        ],
    },
    RawEntry {
        label: "V_444^5",
        table: 2,
        settings: [4, 4, 4],
        local_bound: 24,
        visibility: 0.49773,
        coeffs: &[
            -4, -3, -2, -1,
            -3, -1, 0, 4,
            -2, 3, -1, 0,
            -1, -1, 1, -1,

            -3, 0, -1, 2,
            -1, 3, 4, 0,
            3, -2, 0, 1,
            -1, 1, -1, -1,

            -2, -1, 2, 1,
            0, 4, 1, -1,
            -1, 0, 2, -3,
            1, -1, 1, 1,

            -1, 2, 1, 2,
            4, 0, -1, -1,
            0, 1, -3, 2,
            -1, -1, 1, -1,
        ],
    },
    RawEntry {
        label: "V_444^6",
        table: 2,
        settings: [4, 4, 4],
        local_bound: 16,
        visibility: 0.49785,
        coeffs: &[
            -3, -3, -2, -2,
            -2, -1, -1, 2,
            -2, 2, 0, 0,
            -1, 0, 1, 0,

            -2, 1, -1, 0,
            -1, 2, 1, 0,
            1, -2, 2, -1,
            0, -1, 0, 1,

            -1, -1, 0, 2,
            0, 2, 0, -2,
            -2, 1, 1, 0,
            1, 0, -1, 0,

            0, -1, 1, 0,
            1, -1, 0, 0,
            -1, -1, -1, -1,
            0, -1, 0, 1,
        ],
    },
    RawEntry {
        label: "V_444^7",
        table: 2,
        settings: [4, 4, 4],
        local_bound: 24,
        visibility: 0.49786,
        coeffs: &[
            -3, -3, -2, -2,
            -2, 3, -2, -1,
            -1, -2, 0, 3,
            0, -2, 0, -2,

            -3, -1, -2, 2,
            3, 0, 1, 2,
            -2, 1, 3, 0,
            -2, 2, 0, 0,

            -2, -2, 1, 1,
            -2, 1, 0, -3,
            0, 3, 1, -2,
            0, 0, 0, 0,

            -2, 2, 1, 3,
            -1, 2, -3, 2,
            3, 0, -2, -1,
            -2, 0, 0, -2,
        ],
    },
    RawEntry {
        label: "V_444^8",
        table: 2,
        settings: [4, 4, 4],
        local_bound: 24,
        visibility: 0.49795,
        coeffs: &[
            -1, 2, 1, -2,
            2, -2, 0, 2,
            -1, 0, -1, 0,
            2, 2, 0, 0,

            -2, 0, 0, -6,
            1, 2, -1, -2,
            -2, -4, 0, -2,
            -1, 2, 1, -2,

            -1, -4, 0, -3,
            1, -1, 1, -1,
            -1, 3, 0, 4,
            -1, 0, -1, 0,

            -2, -2, 1, 3,
            -2, 3, 0, 1,
            -2, 1, -1, 2,
            -2, 2, 0, -2,
        ],
    },
    RawEntry {
        label: "V_444^9",
        table: 2,
        settings: [4, 4, 4],
        local_bound: 24,
        visibility: 0.49803,
        coeffs: &[
            -2, -4, -2, 0,
            3, 2, -1, 2,
            -1, 2, 2, -1,
            0, 0, -1, 1,

            0, -2, -1, -1,
            -1, 1, 0, 0,
            -2, 0, -1, -1,
            1, -1, 0, 0,

            2, -6, -1, 1,
            -2, 1, -4, -1,
            2, -2, -2, -2,
            2, 1, 1, -2,

            0, 4, -4, 0,
            0, 4, -3, -1,
            -3, 0, 1, 0,
            1, 0, 0, -3,
        ],
    },
    RawEntry {
        label: "V_444^10",
        table: 2,
        settings: [4, 4, 4],
        local_bound: 20,
        visibility: 0.49806,
        coeffs: &[
            0, 2, -1, -1,
            -1, -1, 0, 0,
            0, 1, 1, 2,
            1, -2, -2, -3,

            0, -2, -1, -1,
            -1, -1, 0, 0,
            0, 1, -3, -2,
            1, -2, 2, 1,

            0, 0, 2, 2,
            0, 0, 2, -2,
            0, -2, -4, -2,
            0, 2, 0, -6,

            0, 0, 0, 0,
            0, 0, 2, -2,
            0, 0, -2, 2,
            0, 0, -4, 4,
        ],
    },
    RawEntry {
        label: "V_444^U1",
        table: 3,
        settings: [4, 4, 4],
        local_bound: 8,
        visibility: 0.4989,
        coeffs: &[
            -1, -1, -1, -1,
            -1, -1, -1, 1,
            -1, 0, 0, -1,
            -1, 0, 0, 1,

            -1, 0, 0, -1,
            1, -1, 0, 0,
            0, 1, 0, 1,
            0, 0, 0, 0,

            0, -1, -1, 0,
            0, 1, 0, 1,
            -1, 0, 1, 0,
            1, 0, 0, -1,

            0, 0, 0, 0,
            0, -1, 1, 0,
            0, -1, 1, 0,
            0, 0, 0, 0,
        ],
    },
    RawEntry {
        label: "V_444^U2",
        table: 3,
        settings: [4, 4, 4],
        local_bound: 8,
        visibility: 0.49955,
        coeffs: &[
            -1, -1, -1, -1,
            -1, 0, 0, 1,
            -1, 0, 1, 0,
            -1, 1, 0, 0,

            -1, 0, 0, 1,
            0, 0, 1, 1,
            1, 0, 1, 0,
            0, 0, 0, 0,

            0, -1, 0, 1,
            1, 0, 1, 0,
            0, 0, -1, -1,
            -1, 1, 0, 0,

            0, 0, -1, 1,
            0, 0, 0, 0,
            0, 0, -1, 1,
            0, 0, 0, 0,
        ],
    },
    RawEntry {
        label: "V_444^S1",
        table: 3,
        settings: [4, 4, 4],
        local_bound: 128,
        visibility: 0.49895,
        coeffs: &[
            -22, -10, -3, -1,
            -10, 4, -1, -13,
            -3, -1, 11, -1,
            -1, -13, -1, 9,

            -10, 4, -1, -13,
            4, 10, 13, 1,
            -1, 13, -12, -4,
            -13, 1, -4, 12,

            -3, -1, 11, -1,
            -1, 13, -12, -4,
            11, -12, -9, -12,
            -1, -4, -12, -15,

            -1, -13, -1, 9,
            -13, 1, -4, 12,
            -1, -4, -12, -15,
            9, 12, -15, 16,
        ],
    },
    RawEntry {
        label: "V_444^S2",
        table: 3,
        settings: [4, 4, 4],
        local_bound: 12,
        visibility: 0.49903,
        coeffs: &[
            -3, -1, 0, 0,
            -1, 0, -1, 0,
            0, -1, 1, 0,
            0, 0, 0, 2,

            -1, 0, -1, 0,
            0, 1, 0, -1,
            -1, 0, 1, 0,
            0, -1, 0, -1,

            0, -1, 1, 0,
            -1, 0, 1, 0,
            1, 1, 1, 1,
            0, 0, 1, -1,

            0, 0, 0, 2,
            0, -1, 0, -1,
            0, 0, 1, -1,
            2, -1, -1, 0,
        ],
    },
    RawEntry {
        label: "V_444^S3",
        table: 3,
        settings: [4, 4, 4],
        local_bound: 400,
        visibility: 0.4999,
        coeffs: &[
            -62, -53, -43, -30,
            -53, 34, -21, -8,
            -43, -21, -1, 35,
            -30, -8, 35, -7,

            -53, 34, -21, -8,
            34, -15, 19, -26,
            -21, 19, 44, -16,
            -8, -26, -16, -12,

            -43, -21, -1, 35,
            -21, 19, 44, -16,
            -1, 44, -11, -6,
            35, -16, -6, 17,

            -30, -8, 35, -7,
            -8, -26, -16, -12,
            35, -16, -6, 17,
            -7, -12, 17, 44,
        ],
    },
    RawEntry {
        label: "V_555^1",
        table: 4,
        settings: [5, 5, 5],
        local_bound: 24,
        visibility: 0.496057,
        coeffs: &[
            2, -2, 1, -1, 2,
            0, 2, 0, -2, 0,
            0, -2, 0, 2, 0,
            -2, -1, 1, 0, -2,
            0, 1, 0, 1, 0,

            0, 1, 0, 2, 1,
            -2, 0, 0, 0, 2,
            -2, 0, 0, 0, -2,
            0, 2, 2, 4, 0,
            0, 1, -2, 2, -1,

            0, 2, 2, 0, 0,
            0, 0, 0, 0, 0,
            0, 0, 0, 0, 0,
            0, 0, 2, -2, 0,
            0, 2, 0, 2, 0,

            -2, 0, 0, 0, 2,
            0, -2, 0, 2, 0,
            0, -2, 0, 2, 0,
            2, 0, 0, 0, -2,
            0, 0, 0, 0, 0,

            0, 1, -1, 1, 1,
            2, 0, 0, 0, -2,
            2, 0, 0, 0, 2,
            0, 1, 1, 2, 0,
            0, 0, -2, 1, -1,
        ],
    },
    RawEntry {
        label: "V_555^3",
        table: 4,
        settings: [5, 5, 5],
        local_bound: 12,
        visibility: 0.496081,
        coeffs: &[
            0, 0, 0, 0, 0,
            0, -1, 1, 0, 0,
            1, 2, 1, 0, 0,
            0, -1, -1, 0, 0,
            -1, 2, 1, 0, 0,

            0, 0, 0, 0, 0,
            0, 2, -2, 0, 0,
            1, 1, 0, 0, 0,
            0, 0, 0, 0, 0,
            -1, 1, -2, 0, 0,

            0, 0, 0, 0, 0,
            0, 1, -1, 0, 0,
            0, 0, 0, 0, 0,
            0, 0, 0, 0, 0,
            0, -1, 1, 0, 0,

            0, 0, 1, 0, -1,
            0, 0, 0, 0, 0,
            -1, 1, 1, 1, 0,
            1, 0, 1, 1, 1,
            0, -1, -1, 0, 0,

            0, 0, -1, 0, 1,
            0, 0, 0, 0, 0,
            -1, 0, 0, 1, 0,
            1, -1, -2, 1, -1,
            0, -1, -1, 0, 0,
        ],
    },
    RawEntry {
        label: "V_555^S1",
        table: 4,
        settings: [5, 5, 5],
        local_bound: 12,
        visibility: 0.496485,
        coeffs: &[
            0, 0, -1, -1, 0,
            0, 0, 0, 0, 0,
            -1, 0, 0, 0, 1,
            -1, 0, 0, 0, 1,
            0, 0, 1, 1, 0,

            0, 0, 0, 0, 0,
            0, 0, 1, -1, 0,
            0, 1, -1, 0, 0,
            0, -1, 0, 1, 0,
            0, 0, 0, 0, 0,

            -1, 0, 0, 0, 1,
            0, 1, -1, 0, 0,
            0, -1, -2, 1, 0,
            0, 0, 1, -1, 0,
            1, 0, 0, 0, 1,

            -1, 0, 0, 0, 1,
            0, -1, 0, 1, 0,
            0, 0, 1, -1, 0,
            0, 1, -1, 2, 0,
            1, 0, 0, 0, 1,

            0, 0, 1, 1, 0,
            0, 0, 0, 0, 0,
            1, 0, 0, 0, 1,
            1, 0, 0, 0, 1,
            0, 0, 1, 1, 0,
        ],
    },
    RawEntry {
        label: "V_555^U1",
        table: 4,
        settings: [5, 5, 5],
        local_bound: 16,
        visibility: 0.4976723,
        coeffs: &[
            1, 0, 0, 1, 0,
            0, 1, -1, -1, 1,
            0, 0, 0, 1, 1,
            1, 0, -1, 1, -1,
            0, 1, 0, 0, -1,

            0, 0, 0, 1, 1,
            0, 0, -1, 1, 0,
            0, 0, -1, 0, -1,
            0, 1, 1, -1, -1,
            0, 1, -1, -1, 1,

            0, 1, -1, 0, 0,
            -1, 0, 0, -1, 0,
            1, 1, 0, 0, 0,
            0, 0, 1, 0, 1,
            0, 0, 0, -1, -1,

            0, -1, 0, -1, 0,
            -1, 1, 0, 0, 0,
            1, 0, 0, 1, 0,
            0, 1, -1, -1, 1,
            0, -1, -1, 1, 1,

            -1, 0, -1, 1, -1,
            0, 0, 0, -1, -1,
            0, 1, -1, 0, 0,
            -1, 0, 0, -1, 0,
            0, 1, 0, 1, 0,
        ],
    },
    RawEntry {
        label: "V_555^U2",
        table: 4,
        settings: [5, 5, 5],
        local_bound: 16,
        visibility: 0.497977,
        coeffs: &[
            0, 0, 0, 0, 0,
            1, 0, -1, 1, 1,
            0, -1, 0, 0, 1,
            0, 1, 1, -1, 1,
            -1, 0, 0, 0, 1,

            0, 1, 0, 1, 0,
            -1, 1, 0, 0, 0,
            0, -1, 1, 0, 0,
            -1, 0, 0, 0, 1,
            0, 1, -1, -1, -1,

            0, 0, 1, 0, 1,
            0, 0, -1, 0, 1,
            -1, -1, -1, -1, 0,
            0, 0, 1, 0, -1,
            -1, 1, 0, -1, -1,

            0, 1, 0, 1, 0,
            -1, 0, -1, 0, 0,
            1, 1, 1, 0, 1,
            0, 1, 0, 1, 0,
            0, -1, 0, 0, -1,

            0, 0, -1, 0, -1,
            1, 1, -1, -1, 0,
            0, 0, -1, 1, 0,
            -1, 0, 0, 0, 1,
            0, -1, -1, 0, 0,
        ],
    },
    RawEntry {
        label: "V_455^1",
        table: 4,
        settings: [4, 5, 5],
        local_bound: 12,
        visibility: 0.496062,
        coeffs: &[
            -1, 0, 1, 0, 0,
            0, 0, -1, 0, 1,
            0, 2, 2, 0, 0,
            0, 0, -1, 0, -1,
            -1, -2, 1, 0, 0,

            -1, 0, 1, 0, 0,
            0, 0, -1, 0, 1,
            0, -2, -1, 0, -1,
            0, 0, -1, 0, -1,
            -1, 2, -2, 0, -1,

            -1, 0, 0, 0, 1,
            1, 0, 0, 0, 1,
            1, 0, 0, 1, 0,
            0, 0, 0, 0, 0,
            1, 0, 0, -1, 0,

            -1, 0, 0, 0, 1,
            1, 0, 0, 0, 1,
            -1, 0, -1, -1, 1,
            0, 0, 0, 0, 0,
            -1, 0, -1, 1, 1,
        ],
    },
    RawEntry {
        label: "V_454^U1",
        table: 4,
        settings: [4, 4, 5],
        local_bound: 8,
        visibility: 0.49822,
        coeffs: &[
            0, 0, 1, 0, 1,
            0, 0, 1, 0, 1,
            0, 0, 0, 0, 0,
            0, 0, 0, 0, 0,

            1, 0, 0, 0, 1,
            0, -1, -1, 0, 0,
            1, -1, 0, 0, 0,
            0, 0, -1, 0, 1,

            0, -1, 1, 1, -1,
            0, -1, 0, -1, 0,
            -1, 1, 0, 0, 0,
            1, 1, -1, 0, 1,

            -1, -1, 0, 1, 1,
            0, 0, 0, -1, -1,
            0, 0, 0, 0, 0,
            -1, -1, 0, 0, 0,
        ],
    },
    RawEntry {
        label: "V_553^U1",
        table: 4,
        settings: [5, 3, 5],
        local_bound: 8,
        visibility: 0.496463,
        coeffs: &[
            -1, 1, -1, -1, 0,
            -1, 0, 0, 1, 0,
            0, 1, 1, 0, 0,

            1, 1, 0, 0, 0,
            0, 1, 0, 0, -1,
            1, 0, 0, 0, 1,

            -1, 0, 1, 0, 0,
            0, 0, 1, 0, 1,
            1, 0, 0, 0, 1,

            -1, 0, 0, 0, 1,
            1, 0, 0, 0, -1,
            0, 0, 0, 0, 0,

            0, 0, 0, 1, -1,
            0, -1, 1, -1, -1,
            0, 1, 1, 0, 0,
        ],
    },
    RawEntry {
        label: "V_555^2",
        table: 5,
        settings: [5, 5, 5],
        local_bound: 13180,
        visibility: 0.496059,
        coeffs: &[
            -271, -124, -418, 522, 251,
            922, 355, 8, 522, -37,
            540, 206, 69, 90, -641,
            -294, 437, 853, 90, -212,
            65, 710, 210, 0, -565,

            -514, 251, 736, 596, -403,
            -138, -45, -249, -612, 736,
            -217, -641, -350, 0, 932,
            853, -212, -45, 82, -514,
            418, -557, -400, -98, -1277,

            -446, 271, -1146, -457, 514,
            -636, -922, -482, 612, 130,
            546, -540, -996, -167, 209,
            -347, 294, -477, 175, -853,
            775, -65, -145, 147, -418,

            -457, -522, 661, 0, -596,
            604, -514, 858, -336, 612,
            -159, -90, -495, 426, 0,
            159, -90, 763, 604, -90,
            147, -8, -465, -514, 90,

            1146, -418, 669, -661, 736,
            466, 8, -1915, -858, -233,
            996, 69, 368, 503, -342,
            461, 853, 342, -771, -37,
            145, 210, -510, 465, -400,
        ],
    },
];
