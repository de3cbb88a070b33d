//! Affine Landau-Ginzburg models: relations cutting a variety inside affine
//! space plus a potential on it, regular-sequence validation by codimension,
//! and the regularization that trades the model for a single potential on a
//! larger affine space.

use serde::Deserialize;

use crate::error::Error;
use crate::groebner::{Budget, Dim, Ideal};
use crate::poly::{rat_int, MonomialOrder, PolyRing, Polynomial, Rat};
use crate::Result;

/// Relations `f_1..f_m` on the ambient ring and a potential `g`.
#[derive(Debug, Clone, PartialEq)]
pub struct LgModel {
    ambient: PolyRing,
    relations: Vec<Polynomial>,
    potential: Polynomial,
}

/// The potential `W = g + sum_k f_k * x_{n+k}` on the extended ring.
#[derive(Debug, Clone)]
pub struct RegularizedPotential {
    ring: PolyRing,
    w: Polynomial,
    source: LgModel,
    /// Names of the variables appended for the relations, in relation order.
    new_vars: Vec<String>,
}

/// Outcome of the codimension check on `(f_1, .., f_m, g)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegSeqReport {
    pub ok: bool,
    /// Dimensions observed for each prefix `(f_1..f_k)`, then with `g`.
    pub dims: Vec<Dim>,
    /// 1-based index of the first failing prefix (`m + 1` means the step
    /// that appends `g`), when not ok.
    pub first_failure: Option<usize>,
}

impl LgModel {
    pub fn new(
        ambient: PolyRing,
        relations: Vec<Polynomial>,
        potential: Polynomial,
    ) -> Result<Self> {
        for f in &relations {
            if !f.ring().same_ring(&ambient) {
                return Err(Error::RingMismatch);
            }
        }
        if !potential.ring().same_ring(&ambient) {
            return Err(Error::RingMismatch);
        }
        Ok(LgModel {
            ambient,
            relations,
            potential,
        })
    }

    pub fn ambient(&self) -> &PolyRing {
        &self.ambient
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn potential(&self) -> &Polynomial {
        &self.potential
    }

    /// Verify that each prefix drops the dimension by exactly one:
    /// `dim V(f_1..f_k) = n - k` and `dim V(f, g) = n - m - 1`.
    /// A failure is a report, not an error.
    pub fn check_regular_sequence(&self, budget: &Budget) -> Result<RegSeqReport> {
        let n = self.ambient.arity() as i64;
        let m = self.relations.len();
        let mut dims = Vec::with_capacity(m + 1);
        let mut seq: Vec<Polynomial> = Vec::new();
        for (k, f) in self.relations.iter().enumerate() {
            seq.push(f.clone());
            let dim = Ideal::new(self.ambient.clone(), seq.clone()).krull_dimension(budget)?;
            dims.push(dim);
            if !dim_matches(dim, n - (k as i64 + 1)) {
                return Ok(RegSeqReport {
                    ok: false,
                    dims,
                    first_failure: Some(k + 1),
                });
            }
        }
        seq.push(self.potential.clone());
        let dim = Ideal::new(self.ambient.clone(), seq).krull_dimension(budget)?;
        dims.push(dim);
        if !dim_matches(dim, n - m as i64 - 1) {
            return Ok(RegSeqReport {
                ok: false,
                dims,
                first_failure: Some(m + 1),
            });
        }
        Ok(RegSeqReport {
            ok: true,
            dims,
            first_failure: None,
        })
    }

    /// Append one fresh variable per relation and form
    /// `W = g + sum_k f_k * x_{n+k}`. Names are `x{n+k}`; a collision with
    /// an ambient variable is an error rather than a silent rename.
    pub fn regularize(&self) -> Result<RegularizedPotential> {
        let n = self.ambient.arity();
        let m = self.relations.len();
        let mut vars = self.ambient.vars().to_vec();
        let mut new_vars = Vec::with_capacity(m);
        for k in 1..=m {
            let name = format!("x{}", n + k);
            if self.ambient.var_index(&name).is_some() {
                return Err(Error::NameCollision { name });
            }
            new_vars.push(name.clone());
            vars.push(name);
        }
        let ring = PolyRing::new(vars, self.ambient.default_order().clone())?;
        let mut w = self.potential.embed(&ring)?;
        for (f, name) in self.relations.iter().zip(&new_vars) {
            let xv = ring.var_named(name)?;
            w = w.add(&f.embed(&ring)?.mul(&xv)?)?;
        }
        Ok(RegularizedPotential {
            ring,
            w,
            source: self.clone(),
            new_vars,
        })
    }

    /// Shift the potential: `g -> g - c`.
    pub fn translate(&self, c: &Rat) -> LgModel {
        LgModel {
            ambient: self.ambient.clone(),
            relations: self.relations.clone(),
            potential: self
                .potential
                .sub(&self.ambient.constant(c.clone()))
                .expect("same ring"),
        }
    }

    /// Parse the JSON model format:
    /// `{"variables": [...], "relations": ["..."], "potential": "..."}`.
    pub fn from_json(src: &str) -> Result<LgModel> {
        #[derive(Deserialize)]
        struct Raw {
            variables: Vec<String>,
            #[serde(default)]
            relations: Vec<String>,
            potential: String,
        }
        let raw: Raw = serde_json::from_str(src)
            .map_err(|e| Error::Invalid(format!("model JSON: {e}")))?;
        let ring = PolyRing::new(raw.variables, MonomialOrder::GrevLex)?;
        let relations = raw
            .relations
            .iter()
            .map(|s| ring.parse(s))
            .collect::<Result<Vec<_>>>()?;
        let potential = ring.parse(&raw.potential)?;
        LgModel::new(ring, relations, potential)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "variables": self.ambient.vars(),
            "relations": self.relations.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
            "potential": self.potential.to_string(),
        })
    }
}

fn dim_matches(dim: Dim, expected: i64) -> bool {
    match dim {
        Dim::Empty => expected < 0,
        Dim::Dim(d) => expected >= 0 && d as i64 == expected,
    }
}

impl RegularizedPotential {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn w(&self) -> &Polynomial {
        &self.w
    }

    pub fn source(&self) -> &LgModel {
        &self.source
    }

    pub fn new_vars(&self) -> &[String] {
        &self.new_vars
    }

    /// Setting the appended variables to zero must recover the potential.
    pub fn restricts_to_potential(&self) -> bool {
        let subs: Vec<(usize, Rat)> = self
            .new_vars
            .iter()
            .map(|v| (self.ring.var_index(v).unwrap(), rat_int(0)))
            .collect();
        let restricted = self.w.substitute_constants(&subs);
        match self.source.potential.embed(&self.ring) {
            Ok(g) => restricted == g,
            Err(_) => false,
        }
    }
}
