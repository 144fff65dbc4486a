#![allow(dead_code)]

/// Published average degrees by generation, starting at generation 1.
pub const DART: [f64; 9] = [
    2.33333, 2.125, 2.57778, 2.75385, 3.00885, 3.20316, 3.38112, 3.51821, 3.62899,
];
pub const KITE: [f64; 9] = [
    2.66667, 2.85714, 2.67857, 2.91391, 3.0995, 3.29615, 3.44794, 3.5729, 3.67019,
];
pub const FAT: [f64; 8] = [
    2.14286, 2.90909, 3.12676, 3.36364, 3.56929, 3.69714, 3.79736, 3.86685,
];
pub const THIN: [f64; 8] = [
    2.5, 2.94118, 3.04918, 3.30994, 3.51082, 3.65562, 3.7682, 3.84562,
];
pub const AB_SQUARE: [f64; 5] = [2.5, 3.14474, 3.54673, 3.7759, 3.89125];
pub const AB_RHOMB: [f64; 5] = [2.4, 3.0, 3.46369, 3.73123, 3.86917];

/// One published fit: its `(x, y)` pairs, line and rounded limit.
pub struct Dataset {
    pub name: &'static str,
    pub x: &'static [f64],
    pub y: &'static [f64],
    pub slope: f64,
    pub intercept: f64,
    pub limit: f64,
}

pub const DATASETS: [Dataset; 6] = [
    Dataset {
        name: "dart",
        x: &[0.45278, 0.255, 0.19431, 0.17796, 0.13709, 0.11078],
        y: &[2.57778, 3.00885, 3.20316, 3.38112, 3.51821, 3.62899],
        slope: -3.03555,
        intercept: 3.89151,
        limit: 3.892,
    },
    Dataset {
        name: "kite",
        x: &[0.19665, 0.15179, 0.12496, 0.09729],
        y: &[3.29615, 3.44794, 3.5729, 3.67019],
        slope: -3.81617,
        intercept: 4.04126,
        limit: 4.042,
    },
    Dataset {
        name: "fat",
        x: &[0.23688, 0.20565, 0.12785, 0.10022, 0.06949],
        y: &[3.36364, 3.56929, 3.69714, 3.79736, 3.86685],
        slope: -2.74563,
        intercept: 4.06526,
        limit: 4.066,
    },
    Dataset {
        name: "thin",
        x: &[0.26076, 0.20088, 0.1448, 0.11258, 0.07742],
        y: &[3.30994, 3.51082, 3.65562, 3.7682, 3.84562],
        slope: -2.93142,
        intercept: 4.08498,
        limit: 4.085,
    },
    Dataset {
        name: "ab-square",
        x: &[0.40199, 0.22917, 0.11535],
        y: &[3.54673, 3.7759, 3.89125],
        slope: -1.21205,
        intercept: 4.03956,
        limit: 4.040,
    },
    Dataset {
        name: "ab-rhomb",
        x: &[0.46369, 0.26754, 0.13794],
        y: &[3.46369, 3.73123, 3.86917],
        slope: -1.25440,
        intercept: 4.05146,
        limit: 4.052,
    },
];

impl Dataset {
    pub fn pairs(&self) -> Vec<(f64, f64)> {
        self.x.iter().copied().zip(self.y.iter().copied()).collect()
    }
}
