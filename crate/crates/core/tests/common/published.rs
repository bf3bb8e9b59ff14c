// Generated from the published figure coordinates. Series values follow
// the 10-point grid of their axis; x values are kept as printed.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    M,
    T,
    C,
    Uw,
    P,
    Q,
}

pub struct Series {
    pub axis: &'static str,
    pub field: Field,
    pub regime: &'static str,
    pub x: [f64; 10],
    pub values: [f64; 10],
}

pub const SERIES: &[Series] = &[
    Series {
        axis: "theta",
        field: Field::M,
        regime: "nonneutral",
        x: [6.0, 8.6667, 11.333, 14.0, 16.667, 19.333, 22.0, 24.667, 27.333, 30.0],
        values: [229.0, 84.0, 59.0, 53.0, 53.0, 57.0, 62.0, 69.0, 77.0, 86.0],
    },
    Series {
        axis: "theta",
        field: Field::M,
        regime: "neutral",
        x: [6.0, 8.6667, 11.333, 14.0, 16.667, 19.333, 22.0, 24.667, 27.333, 30.0],
        values: [0.0, 32.0, 42.0, 50.0, 58.0, 65.0, 71.0, 78.0, 84.0, 90.0],
    },
    Series {
        axis: "a",
        field: Field::M,
        regime: "nonneutral",
        x: [
            10.0, 10.889, 11.778, 12.667, 13.556, 14.444, 15.333, 16.222, 17.111, 18.0,
        ],
        values: [0.0, 0.0, 23.0, 34.0, 45.0, 58.0, 73.0, 91.0, 114.0, 143.0],
    },
    Series {
        axis: "a",
        field: Field::M,
        regime: "neutral",
        x: [
            10.0, 10.889, 11.778, 12.667, 13.556, 14.444, 15.333, 16.222, 17.111, 18.0,
        ],
        values: [0.0, 0.0, 0.0, 22.0, 28.0, 34.0, 39.0, 44.0, 49.0, 54.0],
    },
    Series {
        axis: "theta",
        field: Field::T,
        regime: "nonneutral",
        x: [6.0, 8.6667, 11.333, 14.0, 16.667, 19.333, 22.0, 24.667, 27.333, 30.0],
        values: [
            7.2808, 2.6669, 1.8723, 1.6813, 1.6936, 1.807, 1.9796, 2.1973, 2.4521, 2.7411,
        ],
    },
    Series {
        axis: "theta",
        field: Field::T,
        regime: "neutral",
        x: [6.0, 8.6667, 11.333, 14.0, 16.667, 19.333, 22.0, 24.667, 27.333, 30.0],
        values: [
            0.0, 0.59953, 1.0244, 1.514, 2.0735, 2.6987, 3.3892, 4.1448, 4.9627, 5.8423,
        ],
    },
    Series {
        axis: "a",
        field: Field::T,
        regime: "nonneutral",
        x: [
            10.0, 10.889, 11.778, 12.667, 13.556, 14.444, 15.333, 16.222, 17.111, 18.0,
        ],
        values: [0.0, 0.0, 0.73537, 1.0987, 1.4525, 1.8512, 2.3255, 2.9083, 3.633, 4.5372],
    },
    Series {
        axis: "a",
        field: Field::T,
        regime: "neutral",
        x: [
            10.0, 10.889, 11.778, 12.667, 13.556, 14.444, 15.333, 16.222, 17.111, 18.0,
        ],
        values: [
            0.0, 0.0, 0.0, 0.56128, 0.6771, 0.76314, 0.82548, 0.87873, 0.92582, 0.96878,
        ],
    },
    Series {
        axis: "theta",
        field: Field::C,
        regime: "nonneutral",
        x: [6.0, 8.6667, 11.333, 14.0, 16.667, 19.333, 22.0, 24.667, 27.333, 30.0],
        values: [
            0.064556, 0.064464, 0.064435, 0.06441, 0.064883, 0.064371, 0.064832, 0.064659, 0.06466, 0.064718,
        ],
    },
    Series {
        axis: "theta",
        field: Field::C,
        regime: "neutral",
        x: [6.0, 8.6667, 11.333, 14.0, 16.667, 19.333, 22.0, 24.667, 27.333, 30.0],
        values: [
            0.0, 0.064853, 0.064564, 0.064887, 0.064349, 0.064425, 0.065093, 0.064627, 0.064844, 0.064914,
        ],
    },
    Series {
        axis: "a",
        field: Field::C,
        regime: "nonneutral",
        x: [
            10.0, 10.889, 11.778, 12.667, 13.556, 14.444, 15.333, 16.222, 17.111, 18.0,
        ],
        values: [
            0.0, 0.0, 0.06492, 0.065613, 0.065537, 0.064807, 0.064683, 0.064893, 0.064707, 0.064423,
        ],
    },
    Series {
        axis: "a",
        field: Field::C,
        regime: "neutral",
        x: [
            10.0, 10.889, 11.778, 12.667, 13.556, 14.444, 15.333, 16.222, 17.111, 18.0,
        ],
        values: [
            0.0, 0.0, 0.0, 0.064632, 0.065561, 0.064842, 0.06491, 0.064795, 0.064661, 0.064585,
        ],
    },
    Series {
        axis: "theta",
        field: Field::Uw,
        regime: "nonneutral",
        x: [6.0, 8.6667, 11.333, 14.0, 16.667, 19.333, 22.0, 24.667, 27.333, 30.0],
        values: [
            59.133, 21.66, 15.207, 13.655, 13.755, 14.677, 16.078, 17.846, 19.915, 22.263,
        ],
    },
    Series {
        axis: "theta",
        field: Field::Uw,
        regime: "neutral",
        x: [6.0, 8.6667, 11.333, 14.0, 16.667, 19.333, 22.0, 24.667, 27.333, 30.0],
        values: [
            0.0, 4.7962, 8.1953, 12.112, 16.588, 21.59, 27.114, 33.158, 39.702, 46.738,
        ],
    },
    Series {
        axis: "a",
        field: Field::Uw,
        regime: "nonneutral",
        x: [
            10.0, 10.889, 11.778, 12.667, 13.556, 14.444, 15.333, 16.222, 17.111, 18.0,
        ],
        values: [0.0, 0.0, 5.9726, 8.9233, 11.797, 15.035, 18.888, 23.621, 29.506, 36.85],
    },
    Series {
        axis: "a",
        field: Field::Uw,
        regime: "neutral",
        x: [
            10.0, 10.889, 11.778, 12.667, 13.556, 14.444, 15.333, 16.222, 17.111, 18.0,
        ],
        values: [0.0, 0.0, 0.0, 4.4902, 5.4168, 6.1052, 6.6039, 7.0298, 7.4066, 7.7502],
    },
    Series {
        axis: "theta",
        field: Field::P,
        regime: "nonneutral",
        x: [6.0, 8.6667, 11.333, 14.0, 16.667, 19.333, 22.0, 24.667, 27.333, 30.0],
        values: [
            -4.0588, 0.80392, 5.6667, 10.529, 15.392, 20.255, 25.118, 29.98, 34.843, 39.706,
        ],
    },
    Series {
        axis: "theta",
        field: Field::P,
        regime: "neutral",
        x: [6.0, 8.6667, 11.333, 14.0, 16.667, 19.333, 22.0, 24.667, 27.333, 30.0],
        values: [
            4.9412, 7.1373, 9.3333, 11.529, 13.725, 15.922, 18.118, 20.314, 22.51, 24.706,
        ],
    },
    Series {
        axis: "theta",
        field: Field::Q,
        regime: "nonneutral",
        x: [6.0, 8.6667, 11.333, 14.0, 16.667, 19.333, 22.0, 24.667, 27.333, 30.0],
        values: [
            9.0, 6.3333, 3.6667, 1.0, -1.6667, -4.3333, -7.0, -9.6667, -12.333, -15.0,
        ],
    },
    Series {
        axis: "a",
        field: Field::P,
        regime: "nonneutral",
        x: [
            10.0, 10.889, 11.778, 12.667, 13.556, 14.444, 15.333, 16.222, 17.111, 18.0,
        ],
        values: [
            8.2353, 7.3464, 6.4575, 5.5686, 4.6797, 3.7908, 2.902, 2.0131, 1.1242, 0.23529,
        ],
    },
    Series {
        axis: "a",
        field: Field::P,
        regime: "neutral",
        x: [
            10.0, 10.889, 11.778, 12.667, 13.556, 14.444, 15.333, 16.222, 17.111, 18.0,
        ],
        values: [
            8.2353, 8.2353, 8.2353, 8.2353, 8.2353, 8.2353, 8.2353, 8.2353, 8.2353, 8.2353,
        ],
    },
    Series {
        axis: "a",
        field: Field::Q,
        regime: "nonneutral",
        x: [
            10.0, 10.889, 11.778, 12.667, 13.556, 14.444, 15.333, 16.222, 17.111, 18.0,
        ],
        values: [
            0.0, 0.88889, 1.7778, 2.6667, 3.5556, 4.4444, 5.3333, 6.2222, 7.1111, 8.0,
        ],
    },
    Series {
        axis: "v",
        field: Field::Uw,
        regime: "nonneutral",
        x: [0.1, 0.13333, 0.16667, 0.2, 0.23333, 0.26667, 0.3, 0.33333, 0.36667, 0.4],
        values: [
            6.8721, 7.3943, 8.239, 9.4105, 11.141, 13.627, 17.353, 23.258, 33.375, 52.54,
        ],
    },
    Series {
        axis: "v",
        field: Field::Uw,
        regime: "neutral",
        x: [0.1, 0.13333, 0.16667, 0.2, 0.23333, 0.26667, 0.3, 0.33333, 0.36667, 0.4],
        values: [
            2.583, 2.6733, 2.9159, 3.3408, 3.9887, 4.9895, 6.4219, 8.5243, 11.814, 17.536,
        ],
    },
    Series {
        axis: "c_e",
        field: Field::Uw,
        regime: "nonneutral",
        x: [
            0.04, 0.093333, 0.14667, 0.2, 0.25333, 0.30667, 0.36, 0.41333, 0.46667, 0.52,
        ],
        values: [17.407, 17.406, 17.363, 17.085, 16.351, 14.88, 10.512, 0.0, 0.0, 0.0],
    },
    Series {
        axis: "c_e",
        field: Field::Uw,
        regime: "neutral",
        x: [
            0.04, 0.093333, 0.14667, 0.2, 0.25333, 0.30667, 0.36, 0.41333, 0.46667, 0.52,
        ],
        values: [6.8366, 6.8053, 6.4607, 5.0973, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    },
];

/// `(M, M gamma)` on the diversity curve.
pub const FIG3_CURVE: &[(f64, f64)] = &[
    (0.0, 0.0),
    (3.4359, 0.25921),
    (6.8718, 0.54546),
    (10.308, 0.7973),
    (13.744, 1.0093),
    (17.179, 1.1855),
    (20.615, 1.3317),
    (24.051, 1.4539),
    (27.487, 1.557),
    (30.923, 1.6451),
    (34.359, 1.7214),
    (37.795, 1.7885),
    (41.231, 1.8482),
    (44.667, 1.9022),
    (48.103, 1.9515),
    (51.538, 1.9971),
    (54.974, 2.0396),
    (58.41, 2.0795),
    (61.846, 2.1173),
    (65.282, 2.1532),
    (68.718, 2.1875),
    (72.154, 2.2204),
    (75.59, 2.2521),
    (79.026, 2.2827),
    (82.462, 2.3123),
    (85.897, 2.341),
    (89.333, 2.3688),
    (92.769, 2.3958),
    (96.205, 2.4222),
    (99.641, 2.4479),
    (103.077, 2.4729),
    (106.513, 2.4974),
    (109.949, 2.5213),
    (113.385, 2.5447),
    (116.821, 2.5676),
    (120.256, 2.5901),
    (123.692, 2.612),
    (127.128, 2.6336),
    (130.564, 2.6548),
    (134.0, 2.6755),
];

/// `(regime, M, M gamma)` at the two free-entry markers.
pub const FIG3_MARKERS: [(&str, usize, f64); 2] = [("nonneutral", 67, 2.1705), ("neutral", 37, 1.7736)];
