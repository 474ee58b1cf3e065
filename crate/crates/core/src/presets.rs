//! Built-in root data for the groups used throughout the test corpus.

use crate::rootdata::RootDatum;

/// SL2: cocharacter lattice Z with the coroot as basis; the root pairs to 2.
pub fn sl2() -> RootDatum {
    RootDatum::new(vec![vec![2]], vec![vec![1]]).unwrap()
}

/// GL2: lattice Z^2, root e1 - e2.
pub fn gl2() -> RootDatum {
    RootDatum::new(vec![vec![1, -1]], vec![vec![1, -1]]).unwrap()
}

/// SL3: lattice = coroot lattice, roots written in the dual coroot basis.
pub fn sl3() -> RootDatum {
    RootDatum::new(vec![vec![2, -1], vec![-1, 2]], vec![vec![1, 0], vec![0, 1]]).unwrap()
}

/// Sp4: lattice Z^2 = Ze1 + Ze2, roots e1 - e2 and 2e2.
pub fn sp4() -> RootDatum {
    RootDatum::new(vec![vec![1, -1], vec![0, 2]], vec![vec![1, -1], vec![0, 1]]).unwrap()
}

pub fn by_name(name: &str) -> Option<RootDatum> {
    match name {
        "SL2" => Some(sl2()),
        "GL2" => Some(gl2()),
        "SL3" => Some(sl3()),
        "Sp4" | "SP4" => Some(sp4()),
        _ => None,
    }
}

pub const PRESET_NAMES: [&str; 4] = ["SL2", "GL2", "SL3", "Sp4"];
