//! Reference values and independent evaluators shared by the integration tests.
#![allow(dead_code, clippy::excessive_precision)]

/// 2^{-n/2} e^{-x²/4} H_n(x/√2) from the three-term Hermite recurrence.
pub fn hermite_form(n: usize, x: f64) -> f64 {
    let y = x / std::f64::consts::SQRT_2;
    let (mut h0, mut h1) = (1.0, 2.0 * y);
    if n == 0 {
        h1 = h0;
    }
    for k in 1..n {
        let h2 = 2.0 * y * h1 - 2.0 * k as f64 * h0;
        h0 = h1;
        h1 = h2;
    }
    (-(n as f64) / 2.0).exp2() * (-x * x / 4.0).exp() * h1
}

/// Classical RK4 for y'' = (x²/4 - Q - 1/2) y from (x0, y0, dy0) to x1.
pub fn rk4_weber(q: f64, x0: f64, y0: f64, dy0: f64, x1: f64, steps: usize) -> (f64, f64) {
    let a = q + 0.5;
    let f = |x: f64, y: f64, dy: f64| (dy, (0.25 * x * x - a) * y);
    let h = (x1 - x0) / steps as f64;
    let (mut x, mut y, mut dy) = (x0, y0, dy0);
    for _ in 0..steps {
        let k1 = f(x, y, dy);
        let k2 = f(x + h / 2.0, y + h / 2.0 * k1.0, dy + h / 2.0 * k1.1);
        let k3 = f(x + h / 2.0, y + h / 2.0 * k2.0, dy + h / 2.0 * k2.1);
        let k4 = f(x + h, y + h * k3.0, dy + h * k3.1);
        y += h / 6.0 * (k1.0 + 2.0 * k2.0 + 2.0 * k3.0 + k4.0);
        dy += h / 6.0 * (k1.1 + 2.0 * k2.1 + 2.0 * k3.1 + k4.1);
        x += h;
    }
    (y, dy)
}

/// D_Q(x) at 40 digits (mpmath `pcfd`), rows by order, columns by `PCF_X`.
pub const PCF_X: [f64; 7] = [-4.0, -1.5, 0.0, 0.8, 2.0, 5.0, 9.0];
pub const PCF_TABLE: [(f64, [f64; 7]); 7] = [
    (
        -2.7,
        [
            970.26710847737059,
            7.2129532968370453,
            0.73531232517865523,
            0.21495107131343028,
            0.02740887210569526,
            2.1038714933301968e-5,
            4.0139471454554964e-12,
        ],
    ),
    (
        -0.5,
        [
            39.693867000936745,
            2.2757018820403529,
            1.2162802142575203,
            0.75919880490475788,
            0.24301889396360194,
            0.00085135652206435242,
            5.3266254099350186e-10,
        ],
    ),
    (
        0.5,
        [
            -5.6434574612669763,
            -0.57780562720714314,
            0.58136831701911858,
            0.84788437510297546,
            0.53401394606745105,
            0.0043374731814145835,
            4.8230324076077047e-9,
        ],
    ),
    (
        1.3,
        [
            2.3384116377991898,
            -0.58873816739226848,
            -0.37500928584111417,
            0.48000309377574284,
            0.86413620177272995,
            0.015522366750849885,
            2.7861788599199921e-8,
        ],
    ),
    (
        3.7,
        [
            3.7560379894275092,
            -2.0960966823878845,
            2.1802019431700349,
            -1.2601618051281478,
            -0.75127831259622379,
            0.59749231132005532,
            5.1132367733150271e-6,
        ],
    ),
    (
        10.2,
        [
            -1336.7603124712604,
            -544.47175185532697,
            -1132.7655890078795,
            794.43267632226971,
            -1205.9254522085716,
            232.49321482636532,
            4.5117332193436283,
        ],
    ),
    (
        25.5,
        [
            -3564404496621.2119,
            -3002657811568.2156,
            -2481497840258.0661,
            -519740688132.71183,
            272255035841.78967,
            -3743729297565.7622,
            2208374570177.0237,
        ],
    ),
];

/// Γ(x) at 30 digits.
pub const GAMMA_TABLE: [(f64, f64); 6] = [
    (7.3, 1271.42363366390927),
    (-3.7, 0.251643995902422644),
    (0.1, 9.51350769866873184),
    (1e-3, 999.423772484595466),
    (-0.999, -1000.42419668127674),
    (29.5, 1.63481251982742664e30),
];

/// Lowest six energies, (ε, even?), from high-precision root finding on the
/// matching condition with Kummer-series inside solutions.
type Levels = ((f64, f64), [(f64, bool); 6]);

pub const LEVELS: [Levels; 4] = [
    (
        (1.0, 0.75),
        [
            (1.0102887590925695, true),
            (1.74335328854311, false),
            (2.5666593344866411, true),
            (3.7878942647341876, false),
            (4.5000856209279006, true),
            (5.7639666417893387, false),
        ],
    ),
    (
        (10.0, 0.75),
        [
            (2.0676157768535935, true),
            (2.1113696022047363, false),
            (3.4337386169673524, true),
            (4.366273042541842, false),
            (4.5008104671143309, true),
            (6.5459145898911542, false),
        ],
    ),
    (
        (-1.0, 0.75),
        [
            (-0.21202518844185558, true),
            (1.0036322008994924, false),
            (2.4500530048603475, true),
            (3.1453395805715364, false),
            (4.4999133030876042, true),
            (5.2542612784561597, false),
        ],
    ),
    (
        (10.0, 1.5),
        [
            (1.0509621498323719, true),
            (2.9817300315555281, false),
            (3.032491099445403, true),
            (4.0796516911076103, false),
            (5.5673252349414607, true),
            (5.6452887731261534, false),
        ],
    ),
];

/// Merged-delta even levels at g = 1.
pub const CONTACT_G1: [f64; 3] = [0.98740235416086321, 2.8389651616259809, 4.7726401800315102];

/// Inside hard-wall levels at c = 6, even parity.
pub const HARDWALL_C6_EVEN: [f64; 3] = [0.50000007075263848566, 2.500037803094047, 4.502491504266286];

pub fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * b.abs().max(1e-300)
}
