use crate::exact::QmodZ;
use crate::groups::{AbelianStructure, ExtensionData};

/// The character group `A^∨`, enumerated as exponent vectors against the
/// invariant factors of `A` (first coordinate varying fastest).
#[derive(Clone, Debug)]
pub struct DualGroup {
    structure: AbelianStructure,
    characters: Vec<Vec<u64>>,
}

impl DualGroup {
    pub fn new(structure: AbelianStructure) -> Self {
        let characters = structure.coordinate_vectors();
        DualGroup { structure, characters }
    }

    pub fn structure(&self) -> &AbelianStructure {
        &self.structure
    }

    pub fn order(&self) -> usize {
        self.characters.len()
    }

    pub fn characters(&self) -> &[Vec<u64>] {
        &self.characters
    }

    pub fn character(&self, i: usize) -> &[u64] {
        &self.characters[i]
    }

    /// Position of an exponent vector (entries reduced modulo the factors).
    pub fn index_of(&self, phi: &[u64]) -> usize {
        let mut idx = 0;
        let mut stride = 1;
        for (&x, &d) in phi.iter().zip(self.structure.invariant_factors()) {
            idx += (x % d) as usize * stride;
            stride *= d as usize;
        }
        idx
    }

    pub fn add(&self, i: usize, j: usize) -> usize {
        let v: Vec<u64> = self.characters[i].iter().zip(&self.characters[j]).map(|(a, b)| a + b).collect();
        self.index_of(&v)
    }

    pub fn neg(&self, i: usize) -> usize {
        let v: Vec<u64> = self.characters[i]
            .iter()
            .zip(self.structure.invariant_factors())
            .map(|(&a, &d)| (d - a) % d)
            .collect();
        self.index_of(&v)
    }

    /// `φ(a)` in ℚ/ℤ for `a` an ambient element of `A`.
    pub fn eval(&self, phi: usize, a: usize) -> QmodZ {
        self.structure.pairing(&self.characters[phi], a)
    }
}

/// The action of `Q` on `A` by conjugation through the section, and the
/// induced action `(q·φ)(a) = φ(q⁻¹·a)` on `A^∨`.
#[derive(Clone, Debug)]
pub struct QAction {
    on_a: Vec<Vec<usize>>,
    on_dual: Vec<Vec<usize>>,
}

impl QAction {
    pub fn new(ext: &ExtensionData, dual: &DualGroup) -> Self {
        let g = ext.group();
        let a = ext.abelian();
        let q_order = ext.quotient().order();
        let on_a: Vec<Vec<usize>> = (0..q_order)
            .map(|q| {
                let s = ext.section(q);
                (0..g.order())
                    .map(|x| if a.contains(x) { g.conjugate(s, x) } else { usize::MAX })
                    .collect()
            })
            .collect();
        let on_dual = (0..q_order)
            .map(|q| {
                let s_inv = g.inv(ext.section(q));
                (0..dual.order())
                    .map(|phi| {
                        // exponent i of q·φ is d_i · φ(q⁻¹·gen_i)
                        let v: Vec<u64> = a
                            .generators()
                            .iter()
                            .zip(a.invariant_factors())
                            .map(|(&gen, &d)| {
                                let val = dual.eval(phi, g.conjugate(s_inv, gen));
                                (val.numer() * (d as i64 / val.denom())) as u64
                            })
                            .collect();
                        dual.index_of(&v)
                    })
                    .collect()
            })
            .collect();
        QAction { on_a, on_dual }
    }

    /// `q·a = s(q) a s(q)⁻¹`.
    pub fn on_a(&self, q: usize, a: usize) -> usize {
        self.on_a[q][a]
    }

    /// Index of `q·φ`.
    pub fn on_dual(&self, q: usize, phi: usize) -> usize {
        self.on_dual[q][phi]
    }

    /// `B(q)`: characters fixed by `q`.
    pub fn fixed(&self, q: usize) -> Vec<usize> {
        (0..self.on_dual[q].len()).filter(|&p| self.on_dual[q][p] == p).collect()
    }
}
