//! Finite tensor modules: unions of boxes of elementary tensor model
//! spaces, carried on a staircase of multi-indices inside one full box.
//!
//! The single-variable flag bases are nested — the first `l` vectors of
//! an `m`-dimensional flag span the `l`-dimensional subspace — so every
//! box in the union is a span of product basis vectors, and the whole
//! module is the span of the product vectors indexed by the staircase.
//! Each factor's compressed adjoint shift is upper triangular in its
//! flag, and the staircase is downward closed, so compressing the tensor
//! shifts to the staircase is exact rather than approximate.

use std::collections::BTreeSet;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::blaschke::DiscPoint;
use crate::corank::OrderTuple;
use crate::error::Error;
use crate::numerics::linalg::{gaussian_coords, krylov_span_dim, matrix_rank};
use crate::numerics::model_space::{compressed_adjoint_shift, single_point_basis, ModelSpace};
use crate::Result;

const MAX_VARIABLES: usize = 3;
const MAX_BOX_VOLUME: usize = 512;
const MAX_FULL_BOX: usize = 4096;
const RANK_TOL: f64 = 1e-10;
const MEMBERSHIP_TOL: f64 = 1e-8;

/// A submodule of a tensor product of model spaces, spanned by the
/// product basis vectors whose multi-indices lie on a downward-closed
/// staircase. Vector I/O uses full-box coordinates (row-major over the
/// factor dimensions, first factor slowest).
#[derive(Debug, Clone)]
pub struct TensorModule {
    point: Option<Vec<DiscPoint>>,
    factor_dims: Vec<usize>,
    staircase: Vec<Vec<u32>>,
    shifts: Vec<DMatrix<Complex64>>,
}

impl TensorModule {
    pub fn arity(&self) -> usize {
        self.factor_dims.len()
    }

    /// Dimension of the module.
    pub fn dim(&self) -> usize {
        self.staircase.len()
    }

    /// Size of the full coordinate box `∏ m_i`.
    pub fn full_dim(&self) -> usize {
        self.factor_dims.iter().product()
    }

    pub fn factor_dims(&self) -> &[usize] {
        &self.factor_dims
    }

    /// Sorted multi-indices of the product vectors spanning the module.
    pub fn staircase(&self) -> &[Vec<u32>] {
        &self.staircase
    }

    /// Compressed adjoint shifts `T_i` acting on staircase coordinates.
    pub fn shifts(&self) -> &[DMatrix<Complex64>] {
        &self.shifts
    }

    /// The common zero, when every factor space sits at a single point.
    pub fn point(&self) -> Option<&[DiscPoint]> {
        self.point.as_deref()
    }

    fn flat_index(&self, idx: &[u32]) -> usize {
        idx.iter()
            .zip(&self.factor_dims)
            .fold(0, |acc, (&j, &m)| acc * m + j as usize)
    }

    fn staircase_position(&self, idx: &[u32]) -> Option<usize> {
        self.staircase
            .binary_search_by(|probe| probe.as_slice().cmp(idx))
            .ok()
    }

    /// Staircase coordinates of a full-box vector, plus the norm of the
    /// part outside the staircase.
    pub fn project_full(&self, v: &[Complex64]) -> Result<(DVector<Complex64>, f64)> {
        if v.len() != self.full_dim() {
            return Err(Error::ArityMismatch {
                expected: self.full_dim(),
                found: v.len(),
            });
        }
        let coords = DVector::from_iterator(
            self.dim(),
            self.staircase.iter().map(|idx| v[self.flat_index(idx)]),
        );
        let inside: f64 = coords.iter().map(|c| c.norm_sqr()).sum();
        let total: f64 = v.iter().map(|c| c.norm_sqr()).sum();
        Ok((coords, (total - inside).max(0.0).sqrt()))
    }

    /// Full-box vector with the staircase positions filled in.
    pub fn embed_full(&self, coords: &DVector<Complex64>) -> Vec<Complex64> {
        assert_eq!(coords.len(), self.dim());
        let mut out = vec![Complex64::new(0.0, 0.0); self.full_dim()];
        for (idx, &c) in self.staircase.iter().zip(coords.iter()) {
            out[self.flat_index(idx)] = c;
        }
        out
    }

    /// Full box over the given factor spaces. The point is recorded when
    /// every factor generator is a single prime power.
    pub fn from_factors(factors: &[ModelSpace]) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::EmptyInput);
        }
        if factors.len() > MAX_VARIABLES {
            return Err(Error::DeskScaleExceeded {
                what: "variables",
                size: factors.len(),
                limit: MAX_VARIABLES,
            });
        }
        let factor_dims: Vec<usize> = factors.iter().map(|f| f.dim()).collect();
        let full: usize = factor_dims.iter().product();
        if full > MAX_FULL_BOX {
            return Err(Error::DeskScaleExceeded {
                what: "full box volume",
                size: full,
                limit: MAX_FULL_BOX,
            });
        }
        let point = factors
            .iter()
            .map(|f| {
                let zeros: Vec<_> = f.generator().zeros().collect();
                match zeros.as_slice() {
                    [(p, _)] => Some(**p),
                    _ => None,
                }
            })
            .collect::<Option<Vec<_>>>();
        let staircase = box_union(&[factor_dims.iter().map(|&m| m as u32).collect::<Vec<_>>()]);
        let fac_shifts: Vec<DMatrix<Complex64>> =
            factors.iter().map(compressed_adjoint_shift).collect();
        Ok(Self::on_staircase(point, factor_dims, staircase, &fac_shifts))
    }

    fn on_staircase(
        point: Option<Vec<DiscPoint>>,
        factor_dims: Vec<usize>,
        staircase: Vec<Vec<u32>>,
        fac_shifts: &[DMatrix<Complex64>],
    ) -> Self {
        let mut module = Self {
            point,
            factor_dims,
            staircase,
            shifts: Vec::new(),
        };
        let dim = module.dim();
        let mut shifts = Vec::with_capacity(fac_shifts.len());
        for (i, fac) in fac_shifts.iter().enumerate() {
            let mut t = DMatrix::<Complex64>::zeros(dim, dim);
            for (col, idx) in module.staircase.iter().enumerate() {
                let c_i = idx[i] as usize;
                // upper-triangular factor: rows at or above the diagonal
                for r_i in 0..=c_i {
                    let entry = fac[(r_i, c_i)];
                    let mut target = idx.clone();
                    target[i] = r_i as u32;
                    // downward closed, so the target is always present
                    let row = module
                        .staircase_position(&target)
                        .expect("staircase closed under lowering an index");
                    t[(row, col)] = entry;
                }
            }
            shifts.push(t);
        }
        module.shifts = shifts;
        module
    }
}

/// Multi-indices of the union of boxes `∏ [0, l_i)` over the corners,
/// sorted lexicographically.
fn box_union(corners: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut set = BTreeSet::new();
    for corner in corners {
        if corner.contains(&0) {
            continue;
        }
        let mut idx = vec![0u32; corner.len()];
        'sweep: loop {
            set.insert(idx.clone());
            // odometer over the box
            let mut pos = corner.len();
            loop {
                if pos == 0 {
                    break 'sweep;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < corner[pos] {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }
    set.into_iter().collect()
}

/// The tensor module at a single point of the polydisc: the union over
/// the order tuples `l` of the boxes `Q_{b₁^{l₁}} ⊗ … ⊗ Q_{bₙ^{lₙ}}`,
/// compressed onto the staircase of the union.
pub fn assemble_point_module(
    point: &[DiscPoint],
    tuples: &[OrderTuple],
    truncation: usize,
) -> Result<TensorModule> {
    if point.is_empty() || tuples.is_empty() {
        return Err(Error::EmptyInput);
    }
    let n = point.len();
    if n > MAX_VARIABLES {
        return Err(Error::DeskScaleExceeded {
            what: "variables",
            size: n,
            limit: MAX_VARIABLES,
        });
    }
    let mut volume = 0usize;
    for t in tuples {
        if t.len() != n {
            return Err(Error::ArityMismatch {
                expected: n,
                found: t.len(),
            });
        }
        volume = volume.saturating_add(t.entries().iter().map(|&l| l as usize).product());
    }
    if volume > MAX_BOX_VOLUME {
        return Err(Error::DeskScaleExceeded {
            what: "total box volume",
            size: volume,
            limit: MAX_BOX_VOLUME,
        });
    }
    let maxes: Vec<u32> = (0..n)
        .map(|i| tuples.iter().map(|t| t.entries()[i]).max().unwrap())
        .collect();
    let full: usize = maxes.iter().map(|&m| m as usize).product();
    if full > MAX_FULL_BOX {
        return Err(Error::DeskScaleExceeded {
            what: "full box volume",
            size: full,
            limit: MAX_FULL_BOX,
        });
    }

    let mut fac_shifts = Vec::with_capacity(n);
    for (alpha, &m) in point.iter().zip(&maxes) {
        let space = single_point_basis(*alpha, m, truncation)?;
        fac_shifts.push(compressed_adjoint_shift(&space));
    }
    let corners: Vec<Vec<u32>> = tuples.iter().map(|t| t.entries().to_vec()).collect();
    let staircase = box_union(&corners);
    Ok(TensorModule::on_staircase(
        Some(point.to_vec()),
        maxes.iter().map(|&m| m as usize).collect(),
        staircase,
        &fac_shifts,
    ))
}

/// Minimal generators over the local ring at the point: the dimension of
/// `M / Σ (T_i − ᾱ_i) M`, computed as `dim − rank [T_1−ᾱ_1I | … | T_n−ᾱ_nI]`.
pub fn nakayama_corank(module: &TensorModule) -> Result<usize> {
    let point = module.point().ok_or(Error::NotSinglePoint)?;
    let dim = module.dim();
    let n = module.arity();
    let mut stacked = DMatrix::<Complex64>::zeros(dim, n * dim);
    for (i, t) in module.shifts().iter().enumerate() {
        let mut block = t.clone();
        let shift = point[i].as_complex().conj();
        for k in 0..dim {
            block[(k, k)] -= shift;
        }
        stacked.view_mut((0, i * dim), (dim, dim)).copy_from(&block);
    }
    // The blocks are differences of contractions, so scale 1 anchors the
    // threshold: when every entry is round-off the rank must read 0.
    Ok(dim - matrix_rank(&stacked, RANK_TOL, 1.0))
}

/// Whether the given full-box vectors generate the module under its
/// shifts, together with the dimension they do reach.
pub fn krylov_generated(
    module: &TensorModule,
    vectors: &[Vec<Complex64>],
) -> Result<(bool, usize)> {
    let dim = module.dim();
    let mut start = DMatrix::<Complex64>::zeros(dim, vectors.len());
    for (k, v) in vectors.iter().enumerate() {
        let (coords, residual) = module.project_full(v)?;
        let scale = coords.norm().max(1.0);
        if residual > MEMBERSHIP_TOL * scale {
            return Err(Error::VectorOutsideModule { index: k, residual });
        }
        start.set_column(k, &coords);
    }
    let reached = krylov_span_dim(module.shifts(), &start, RANK_TOL);
    Ok((reached == dim, reached))
}

/// Evidence from [`randomized_min_generators`]: a generating set of the
/// reported size, the trial parameters, and the dimensions involved.
#[derive(Debug, Clone)]
pub struct GeneratorCertificate {
    vectors: Vec<Vec<Complex64>>,
    achieved_dim: usize,
    target_dim: usize,
    seed: u64,
    trials: u32,
}

impl GeneratorCertificate {
    /// The reported minimal number of generators.
    pub fn r(&self) -> usize {
        self.vectors.len()
    }

    /// Witness generators in full-box coordinates.
    pub fn vectors(&self) -> &[Vec<Complex64>] {
        &self.vectors
    }

    pub fn achieved_dim(&self) -> usize {
        self.achieved_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn trials(&self) -> u32 {
        self.trials
    }
}

/// Smallest `r` such that `r` random Gaussian vectors in the module
/// generate it under the shifts, every time across `trials` independent
/// draws. Below the true minimum no tuple can generate (a quotient-rank
/// obstruction), so the first all-pass level is the answer.
pub fn randomized_min_generators(
    module: &TensorModule,
    trials: u32,
    seed: u64,
) -> GeneratorCertificate {
    assert!(trials >= 1, "need at least one trial per level");
    let dim = module.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for r in 1..=dim.max(1) {
        let mut all_pass = true;
        let mut witness: Option<Vec<Vec<Complex64>>> = None;
        for _ in 0..trials {
            let draw: Vec<Vec<Complex64>> = (0..r)
                .map(|_| {
                    let raw = gaussian_coords(&mut rng, module.full_dim());
                    let (coords, _) = module.project_full(&raw).expect("full-box length");
                    module.embed_full(&coords)
                })
                .collect();
            let (ok, _) = krylov_generated(module, &draw).expect("draws lie in the module");
            if ok {
                witness.get_or_insert(draw);
            } else {
                all_pass = false;
            }
        }
        if all_pass {
            return GeneratorCertificate {
                vectors: witness.expect("all trials passed"),
                achieved_dim: dim,
                target_dim: dim,
                seed,
                trials,
            };
        }
        debug_assert!(
            witness.is_none(),
            "level {r} had a partial success; below the minimum all draws must fail"
        );
    }
    unreachable!("dim-many independent Gaussian vectors span the module");
}
