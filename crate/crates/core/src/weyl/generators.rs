use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{GradedElement, Parity, WeylPoly};
use crate::field::Coeff;
use crate::Error;

/// Named operators of the oscillator superalgebra, plus the identity and the
/// bare ladder operators (useful as closure seeds).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    KPlus,
    KMinus,
    K3,
    Q,
    QDag,
    Identity,
    A,
    ADag,
}

impl Generator {
    /// The five superalgebra generators in canonical order.
    pub const OSP: [Generator; 5] = [
        Generator::KPlus,
        Generator::KMinus,
        Generator::K3,
        Generator::Q,
        Generator::QDag,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Generator::KPlus => "K+",
            Generator::KMinus => "K-",
            Generator::K3 => "K3",
            Generator::Q => "Q",
            Generator::QDag => "Q†",
            Generator::Identity => "𝟙",
            Generator::A => "a",
            Generator::ADag => "a†",
        }
    }

    pub fn poly(self) -> WeylPoly {
        let half = Coeff::frac(1, 2);
        match self {
            // ½a†a†
            Generator::KPlus => WeylPoly::monomial(2, 0).scale(&half),
            // ½aa
            Generator::KMinus => WeylPoly::monomial(0, 2).scale(&half),
            // ½a†a + ¼
            Generator::K3 => {
                &WeylPoly::monomial(1, 1).scale(&half) + &WeylPoly::scalar(Coeff::frac(1, 4))
            }
            Generator::Q => WeylPoly::a().scale(&Coeff::s()),
            Generator::QDag => WeylPoly::a_dag().scale(&Coeff::s()),
            Generator::Identity => WeylPoly::identity(),
            Generator::A => WeylPoly::a(),
            Generator::ADag => WeylPoly::a_dag(),
        }
    }

    pub fn parity(self) -> Parity {
        match self {
            Generator::Q | Generator::QDag | Generator::A | Generator::ADag => Parity::Odd,
            _ => Parity::Even,
        }
    }

    pub fn element(self) -> GradedElement {
        GradedElement::with_parity(self.poly(), self.parity())
            .expect("generator polynomials are homogeneous")
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let g = match s.trim() {
            "K+" | "Kp" | "K_plus" | "Kplus" | "K₊" => Generator::KPlus,
            "K-" | "Km" | "K_minus" | "Kminus" | "K₋" => Generator::KMinus,
            "K3" | "K_3" | "K₃" => Generator::K3,
            "Q" => Generator::Q,
            "Q†" | "Qdag" | "Qd" | "Q+" => Generator::QDag,
            "1" | "𝟙" | "I" | "id" => Generator::Identity,
            "a" => Generator::A,
            "a†" | "adag" | "ad" => Generator::ADag,
            other => return Err(Error::UnknownGenerator(other.to_string())),
        };
        Ok(g)
    }
}

/// The five superalgebra generators as exact polynomials.
#[derive(Clone, Debug)]
pub struct StandardGenerators {
    pub k_plus: GradedElement,
    pub k_minus: GradedElement,
    pub k3: GradedElement,
    pub q: GradedElement,
    pub q_dag: GradedElement,
}

impl StandardGenerators {
    pub fn new() -> Self {
        StandardGenerators {
            k_plus: Generator::KPlus.element(),
            k_minus: Generator::KMinus.element(),
            k3: Generator::K3.element(),
            q: Generator::Q.element(),
            q_dag: Generator::QDag.element(),
        }
    }

    /// `(name, element)` pairs in canonical order `K+, K-, K3, Q, Q†`.
    pub fn named(&self) -> Vec<(&'static str, GradedElement)> {
        Generator::OSP
            .iter()
            .map(|g| (g.name(), self.get(*g).clone()))
            .collect()
    }

    pub fn get(&self, g: Generator) -> &GradedElement {
        match g {
            Generator::KPlus => &self.k_plus,
            Generator::KMinus => &self.k_minus,
            Generator::K3 => &self.k3,
            Generator::Q => &self.q,
            Generator::QDag => &self.q_dag,
            other => panic!("{other} is not one of the five superalgebra generators"),
        }
    }

    /// The Hamiltonian `H = 2K₃` in units `ħω = 1`.
    pub fn hamiltonian(&self) -> WeylPoly {
        self.k3.poly().scale(&Coeff::from_int(2))
    }
}

impl Default for StandardGenerators {
    fn default() -> Self {
        StandardGenerators::new()
    }
}

/// Intermediate stages of the Casimir computation.
#[derive(Clone, Debug)]
pub struct CasimirExpansion {
    /// `8·½(K₊K₋ + K₋K₊)`, i.e. `aa a†a† + a†a† aa`
    pub eight_times_anticommutator_part: WeylPoly,
    /// `4K₃²`, i.e. `(a†a + ½)²`
    pub four_times_k3_squared: WeylPoly,
    /// `½(K₊K₋ + K₋K₊) − K₃²`
    pub casimir: WeylPoly,
}

pub fn casimir_expansion() -> CasimirExpansion {
    let g = StandardGenerators::new();
    let (kp, km, k3) = (g.k_plus.poly(), g.k_minus.poly(), g.k3.poly());
    let sym = &kp.multiply(km) + &km.multiply(kp);
    let k3_sq = k3.multiply(k3);
    let casimir = &sym.scale(&Coeff::frac(1, 2)) - &k3_sq;
    CasimirExpansion {
        eight_times_anticommutator_part: sym.scale(&Coeff::from_int(4)),
        four_times_k3_squared: k3_sq.scale(&Coeff::from_int(4)),
        casimir,
    }
}

/// `½(K₊K₋ + K₋K₊) − K₃²`, computed symbolically.
pub fn casimir() -> WeylPoly {
    casimir_expansion().casimir
}
