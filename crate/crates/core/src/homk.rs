//! Hom spaces in the homotopy category, certified equivalences and
//! Gaussian minimization.
//!
//! Chain maps are parametrized by degreewise module-hom bases, so the
//! commuting condition is a small linear system; null-homotopic maps are
//! the image of `h -> dh + hd` over degreewise module homs. Every
//! equivalence is returned as an exactly verified certificate
//! `(f, g, h_X, h_Y)`; "not equivalent" is only ever reported together with
//! an invariant that differs.

use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use crate::complex::{cone, ChainMap, Complex};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::Matrix;
use crate::module::{hom_basis, Module, ModuleMap};
use crate::rng::SeededRng;

/// A degree `-1` operator: components `h^n: X^n -> Y^{n-1}`, each a module
/// map, with no compatibility required.
#[derive(Clone, Debug)]
pub struct Homotopy {
    source: Arc<Complex>,
    target: Arc<Complex>,
    components: BTreeMap<i64, ModuleMap>,
}

impl Homotopy {
    pub fn zero(source: Arc<Complex>, target: Arc<Complex>) -> Self {
        Homotopy {
            source,
            target,
            components: BTreeMap::new(),
        }
    }

    pub fn source(&self) -> &Arc<Complex> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Complex> {
        &self.target
    }

    pub fn component(&self, n: i64) -> ModuleMap {
        match self.components.get(&n) {
            Some(c) => c.clone(),
            None => ModuleMap::zero(
                self.source.term(n).clone(),
                self.target.term(n - 1).clone(),
            ),
        }
    }

    pub fn components(&self) -> &BTreeMap<i64, ModuleMap> {
        &self.components
    }

    fn insert(&mut self, n: i64, c: ModuleMap) {
        if !c.is_zero() {
            self.components.insert(n, c);
        }
    }

    /// `d_Y h + h d_X` as a chain map `X -> Y`.
    pub fn boundary(&self) -> ChainMap {
        let degrees: BTreeSet<i64> = self
            .source
            .support()
            .into_iter()
            .chain(self.target.support())
            .collect();
        let mut comps = BTreeMap::new();
        for &n in &degrees {
            let a = self.target.diff(n - 1).compose(&self.component(n));
            let b = self.component(n + 1).compose(&self.source.diff(n));
            let s = a.add(&b);
            if !s.is_zero() {
                comps.insert(n, s);
            }
        }
        ChainMap::new_unchecked(self.source.clone(), self.target.clone(), comps)
    }

    pub fn add(&self, other: &Homotopy) -> Homotopy {
        let degrees: BTreeSet<i64> = self
            .components
            .keys()
            .chain(other.components.keys())
            .copied()
            .collect();
        let mut out = Homotopy::zero(self.source.clone(), self.target.clone());
        for n in degrees {
            out.insert(n, self.component(n).add(&other.component(n)));
        }
        out
    }

    /// `g ∘ h ∘ f` as a homotopy, for chain maps `f: X' -> X`, `g: Y -> Y'`.
    pub fn sandwich(g: &ChainMap, h: &Homotopy, f: &ChainMap) -> Homotopy {
        let mut out = Homotopy::zero(f.source().clone(), g.target().clone());
        let degrees: BTreeSet<i64> = f
            .source()
            .support()
            .into_iter()
            .chain(h.components.keys().copied())
            .collect();
        for n in degrees {
            let comp = g
                .component(n - 1)
                .compose(&h.component(n))
                .compose(&f.component(n));
            out.insert(n, comp);
        }
        out
    }
}

/// An exact homotopy-equivalence witness.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub f: ChainMap,
    pub g: ChainMap,
    pub h_x: Homotopy,
    pub h_y: Homotopy,
}

impl Certificate {
    pub fn identity(x: &Arc<Complex>) -> Self {
        Certificate {
            f: ChainMap::identity(x),
            g: ChainMap::identity(x),
            h_x: Homotopy::zero(x.clone(), x.clone()),
            h_y: Homotopy::zero(x.clone(), x.clone()),
        }
    }

    /// Checks both homotopy identities exactly.
    pub fn verify(&self) -> bool {
        let x = self.f.source();
        let y = self.f.target();
        let gf = self.g.compose(&self.f);
        let lhs_x = gf.sub(&ChainMap::identity(x));
        if !chain_maps_equal(&lhs_x, &self.h_x.boundary()) {
            return false;
        }
        let fg = self.f.compose(&self.g);
        let lhs_y = fg.sub(&ChainMap::identity(y));
        chain_maps_equal(&lhs_y, &self.h_y.boundary())
    }

    /// Composes equivalences `X ≃ Y` and `Y ≃ Z` into `X ≃ Z`.
    pub fn compose(&self, other: &Certificate) -> Certificate {
        let f = other.f.compose(&self.f);
        let g = self.g.compose(&other.g);
        let h_x = self
            .h_x
            .add(&Homotopy::sandwich(&self.g, &other.h_x, &self.f));
        let h_y = other
            .h_y
            .add(&Homotopy::sandwich(&other.f, &self.h_y, &other.g));
        Certificate { f, g, h_x, h_y }
    }

    /// The same equivalence between shifted complexes.
    pub fn shift(&self, n: i64) -> Certificate {
        let f = self.f.shift(n);
        let g = self.g.shift(n);
        let shift_homotopy = |h: &Homotopy, src: &Arc<Complex>, tgt: &Arc<Complex>| {
            let mut out = Homotopy::zero(src.clone(), tgt.clone());
            for (&m, c) in &h.components {
                out.insert(
                    m - n,
                    ModuleMap::new_unchecked(
                        src.term(m - n).clone(),
                        tgt.term(m - n - 1).clone(),
                        c.vertex_maps().to_vec(),
                    ),
                );
            }
            out
        };
        let h_x = shift_homotopy(&self.h_x, f.source(), f.source());
        let h_y = shift_homotopy(&self.h_y, f.target(), f.target());
        Certificate { f, g, h_x, h_y }
    }
}

pub fn chain_maps_equal(a: &ChainMap, b: &ChainMap) -> bool {
    let degrees: BTreeSet<i64> = a
        .components()
        .keys()
        .chain(b.components().keys())
        .copied()
        .collect();
    degrees
        .into_iter()
        .all(|n| a.component(n).vertex_maps() == b.component(n).vertex_maps())
}

/// Layout of the flattened coordinates of chain maps `X -> Y`.
struct ChainLayout {
    degrees: Vec<i64>,
    offsets: Vec<usize>,
    total: usize,
}

fn chain_layout(x: &Complex, y: &Complex) -> ChainLayout {
    let mut degrees = Vec::new();
    let mut offsets = Vec::new();
    let mut total = 0;
    for n in x.support() {
        if y.term(n).is_zero() {
            continue;
        }
        degrees.push(n);
        offsets.push(total);
        total += ModuleMap::coord_len(x.term(n), y.term(n));
    }
    ChainLayout {
        degrees,
        offsets,
        total,
    }
}

fn chain_flatten(f: &ChainMap, layout: &ChainLayout) -> Vec<Scalar> {
    let field = f.source().algebra().field();
    let mut out = vec![field.zero(); layout.total];
    for (k, &n) in layout.degrees.iter().enumerate() {
        let coords = f.component(n).flatten();
        out[layout.offsets[k]..layout.offsets[k] + coords.len()].clone_from_slice(&coords);
    }
    out
}

/// The hom space in the homotopy category: chain maps, null-homotopics,
/// quotient representatives and coordinates on the quotient.
pub struct HomK {
    pub x: Arc<Complex>,
    pub y: Arc<Complex>,
    pub chain_basis: Vec<ChainMap>,
    pub null_basis: Vec<ChainMap>,
    pub reps: Vec<ChainMap>,
    pub dim: usize,
    /// columns: flattened null basis then flattened reps
    expr: Matrix,
    null_count: usize,
}

impl HomK {
    /// Quotient coordinates of the class of a chain map.
    pub fn class_coords(&self, f: &ChainMap) -> Vec<Scalar> {

        if self.dim == 0 {
            return Vec::new();
        }
        let layout = chain_layout(&self.x, &self.y);
        let v = chain_flatten(f, &layout);
        let sol = self
            .expr
            .solve(&v)
            .expect("a chain map lies in the span of the chain basis");
        sol[self.null_count..].to_vec()
    }

    pub fn is_null_homotopic(&self, f: &ChainMap) -> bool {
        self.class_coords(f).iter().all(|c| c.is_zero())
    }

    /// A seeded combination of the chain-map basis.
    pub fn random_chain_map(&self, rng: &mut SeededRng) -> ChainMap {
        let field = self.x.algebra().field();
        let mut f = ChainMap::zero(self.x.clone(), self.y.clone());
        for b in &self.chain_basis {
            f = f.add(&b.scale(&rng.scalar_allow_zero(field)));
        }
        f
    }
}

/// Computes `Hom_K(X, Y)` with its null-homotopic subspace. Memoized.
pub fn hom_k(x: &Arc<Complex>, y: &Arc<Complex>) -> Result<Arc<HomK>> {
    if !crate::module::same_algebra(x.algebra(), y.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    thread_local! {
        static CACHE: RefCell<HashMap<(Complex, Complex), Arc<HomK>>> =
            RefCell::new(HashMap::new());
    }
    let key = ((**x).clone(), (**y).clone());
    if let Some(hit) = CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return Ok(hit);
    }
    let space = Arc::new(hom_k_uncached(x, y)?);
    CACHE.with(|c| c.borrow_mut().insert(key, space.clone()));
    Ok(space)
}

fn hom_k_uncached(x: &Arc<Complex>, y: &Arc<Complex>) -> Result<HomK> {
    let field = x.algebra().field();
    let layout = chain_layout(x, y);

    // unknowns: module-hom bases degree by degree
    let mut blocks: Vec<(i64, Arc<Vec<ModuleMap>>)> = Vec::new();
    for &n in &layout.degrees {
        blocks.push((n, hom_basis(x.term(n), y.term(n))?));
    }
    let unknowns: usize = blocks.iter().map(|(_, b)| b.len()).sum();

    // equations: entries of d_Y f - f d_X per degree with X^n, Y^{n+1} nonzero
    let mut eq_degrees = Vec::new();
    let mut eq_offsets = Vec::new();
    let mut eq_total = 0usize;
    for n in x.support() {
        if y.term(n + 1).is_zero() {
            continue;
        }
        eq_degrees.push(n);
        eq_offsets.push(eq_total);
        eq_total += ModuleMap::coord_len(x.term(n), y.term(n + 1));
    }
    let eq_block = |n: i64| -> Option<(usize, usize)> {
        eq_degrees
            .iter()
            .position(|&m| m == n)
            .map(|k| (eq_offsets[k], eq_total))
    };

    let mut eq = Matrix::zero(field, eq_total, unknowns);
    let mut col = 0usize;
    for (n, basis) in &blocks {
        for b in basis.iter() {
            if let Some((off, _)) = eq_block(*n) {
                let dy_b = y.diff(*n).compose(b);
                for (r, s) in dy_b.flatten().into_iter().enumerate() {
                    if !s.is_zero() {
                        eq.set(off + r, col, s);
                    }
                }
            }
            if let Some((off, _)) = eq_block(*n - 1) {
                let b_dx = b.compose(&x.diff(*n - 1));
                for (r, s) in b_dx.flatten().into_iter().enumerate() {
                    if !s.is_zero() {
                        let cur = eq.at(off + r, col).sub(&s);
                        eq.set(off + r, col, cur);
                    }
                }
            }
            col += 1;
        }
    }

    let kernel = eq.kernel_basis();
    let mut chain_basis = Vec::new();
    for k in 0..kernel.cols() {
        let coeffs = kernel.column(k);
        let mut comps: BTreeMap<i64, ModuleMap> = BTreeMap::new();
        let mut idx = 0usize;
        for (n, basis) in &blocks {
            let mut acc = ModuleMap::zero(x.term(*n).clone(), y.term(*n).clone());
            for b in basis.iter() {
                if !coeffs[idx].is_zero() {
                    acc = acc.add(&b.scale(&coeffs[idx]));
                }
                idx += 1;
            }
            if !acc.is_zero() {
                comps.insert(*n, acc);
            }
        }
        chain_basis.push(ChainMap::new_unchecked(x.clone(), y.clone(), comps));
    }

    // null-homotopic subspace: boundaries of degreewise homotopies
    let mut null_candidates: Vec<ChainMap> = Vec::new();
    for n in x.support() {
        if y.term(n - 1).is_zero() {
            continue;
        }
        for h in hom_basis(x.term(n), y.term(n - 1))?.iter() {
            let mut op = Homotopy::zero(x.clone(), y.clone());
            op.insert(n, h.clone());
            let b = op.boundary();
            if !b.is_zero() {
                null_candidates.push(b);
            }
        }
    }

    // pick independent null boundaries and quotient representatives in one
    // elimination: pivots in the first block are the null basis, pivots in
    // the second block are the representatives
    let total_cols = null_candidates.len() + chain_basis.len();
    let mut cols = Matrix::zero(field, layout.total, total_cols);
    for (k, f) in null_candidates.iter().chain(chain_basis.iter()).enumerate() {
        for (r, s) in chain_flatten(f, &layout).into_iter().enumerate() {
            if !s.is_zero() {
                cols.set(r, k, s);
            }
        }
    }
    let mut red = cols.clone();
    let pivots = red.rref_in_place();
    let null_basis: Vec<ChainMap> = pivots
        .iter()
        .filter(|&&c| c < null_candidates.len())
        .map(|&c| null_candidates[c].clone())
        .collect();
    let reps: Vec<ChainMap> = pivots
        .iter()
        .filter(|&&c| c >= null_candidates.len())
        .map(|&c| chain_basis[c - null_candidates.len()].clone())
        .collect();

    let mut expr = Matrix::zero(field, layout.total, null_basis.len() + reps.len());
    for (k, f) in null_basis.iter().chain(reps.iter()).enumerate() {
        for (r, s) in chain_flatten(f, &layout).into_iter().enumerate() {
            if !s.is_zero() {
                expr.set(r, k, s);
            }
        }
    }

    Ok(HomK {
        x: x.clone(),
        y: y.clone(),
        dim: reps.len(),
        null_count: null_basis.len(),
        chain_basis,
        null_basis,
        reps,
        expr,
    })
}

/// Solves `d h + h d = f` for a degreewise module-map homotopy.
pub fn solve_homotopy(f: &ChainMap) -> Option<Homotopy> {
    let x = f.source().clone();
    let y = f.target().clone();
    let field = x.algebra().field();
    let layout = chain_layout(&x, &y);

    let mut blocks: Vec<(i64, Arc<Vec<ModuleMap>>)> = Vec::new();
    for n in x.support() {
        if y.term(n - 1).is_zero() {
            continue;
        }
        let basis = hom_basis(x.term(n), y.term(n - 1)).ok()?;
        if !basis.is_empty() {
            blocks.push((n, basis));
        }
    }
    let unknowns: usize = blocks.iter().map(|(_, b)| b.len()).sum();
    let mut eq = Matrix::zero(field, layout.total, unknowns);
    let mut col = 0usize;
    for (n, basis) in &blocks {
        for h in basis.iter() {
            let mut op = Homotopy::zero(x.clone(), y.clone());
            op.insert(*n, h.clone());
            for (r, s) in chain_flatten(&op.boundary(), &layout).into_iter().enumerate() {
                if !s.is_zero() {
                    eq.set(r, col, s);
                }
            }
            col += 1;
        }
    }
    let rhs = chain_flatten(f, &layout);
    let sol = eq.solve(&rhs)?;
    let mut out = Homotopy::zero(x.clone(), y.clone());
    let mut idx = 0usize;
    for (n, basis) in &blocks {
        let mut acc = ModuleMap::zero(x.term(*n).clone(), y.term(*n - 1).clone());
        for h in basis.iter() {
            if !sol[idx].is_zero() {
                acc = acc.add(&h.scale(&sol[idx]));
            }
            idx += 1;
        }
        if !acc.is_zero() {
            out.insert(*n, acc);
        }
    }
    Some(out)
}

/// A contraction `d h + h d = id`, or a definitive negative: the system is
/// linear, so solvability decides contractibility.
pub fn is_contractible(x: &Arc<Complex>) -> Option<Homotopy> {
    solve_homotopy(&ChainMap::identity(x))
}

/// Splits a map out of a contraction of `cone(f)` into a certificate.
fn certificate_from_cone_contraction(f: &ChainMap, h: &Homotopy) -> Option<Certificate> {
    let x = f.source().clone();
    let y = f.target().clone();
    let field = x.algebra().field();
    let nv = x.algebra().vertex_count();

    let block = |m: &Matrix, r0: usize, rn: usize, c0: usize, cn: usize| -> Matrix {
        Matrix::from_fn(field, rn, cn, |i, j| m.at(r0 + i, c0 + j).clone())
    };

    // H^n: X^{n+1} ⊕ Y^n -> X^n ⊕ Y^{n-1}
    let mut g_comps: BTreeMap<i64, ModuleMap> = BTreeMap::new();
    let mut alpha: BTreeMap<i64, ModuleMap> = BTreeMap::new();
    let mut delta: BTreeMap<i64, ModuleMap> = BTreeMap::new();
    let degrees: BTreeSet<i64> = h.components.keys().copied().collect();
    for &n in &degrees {
        let hn = h.component(n);
        let mut beta_v = Vec::new();
        let mut alpha_v = Vec::new();
        let mut delta_v = Vec::new();
        for v in 0..nv {
            let m = hn.vertex_map(v);
            let xs = x.term(n + 1).dim_at(v);
            let ys = y.term(n).dim_at(v);
            let xt = x.term(n).dim_at(v);
            let yt = y.term(n - 1).dim_at(v);
            alpha_v.push(block(m, 0, xt, 0, xs));
            beta_v.push(block(m, 0, xt, xs, ys));
            delta_v.push(block(m, xt, yt, xs, ys));
        }
        let beta = ModuleMap::new_unchecked(y.term(n).clone(), x.term(n).clone(), beta_v);
        if !beta.is_zero() {
            g_comps.insert(n, beta);
        }
        let a = ModuleMap::new_unchecked(x.term(n + 1).clone(), x.term(n).clone(), alpha_v);
        if !a.is_zero() {
            alpha.insert(n, a);
        }
        let d = ModuleMap::new_unchecked(y.term(n).clone(), y.term(n - 1).clone(), delta_v);
        if !d.is_zero() {
            delta.insert(n, d);
        }
    }
    let g = ChainMap::new_unchecked(y.clone(), x.clone(), g_comps);
    let mut h_x = Homotopy::zero(x.clone(), x.clone());
    for (&n, a) in &alpha {
        // alpha^n: X^{n+1} -> X^n becomes the homotopy component at n+1
        h_x.insert(
            n + 1,
            ModuleMap::new_unchecked(
                x.term(n + 1).clone(),
                x.term(n).clone(),
                a.vertex_maps().to_vec(),
            ),
        );
    }
    let mut h_y = Homotopy::zero(y.clone(), y.clone());
    for (&n, d) in &delta {
        h_y.insert(n, d.neg());
    }
    let cert = Certificate {
        f: f.clone(),
        g,
        h_x,
        h_y,
    };
    if cert.verify() {
        Some(cert)
    } else {
        None
    }
}

pub enum Equivalence {
    Equivalent(Box<Certificate>),
    NotEquivalent { witness: String },
    Inconclusive,
}

/// Certified homotopy equivalence search. Certificates are proofs; a
/// negative answer always carries an invariant witness; otherwise the
/// search gives up after `trials` seeded attempts.
pub fn homotopy_equivalent(
    x: &Arc<Complex>,
    y: &Arc<Complex>,
    seed: u64,
    trials: usize,
) -> Result<Equivalence> {
    if !crate::module::same_algebra(x.algebra(), y.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    if x.is_zero() && y.is_zero() {
        return Ok(Equivalence::Equivalent(Box::new(Certificate {
            f: ChainMap::zero(x.clone(), y.clone()),
            g: ChainMap::zero(y.clone(), x.clone()),
            h_x: Homotopy::zero(x.clone(), x.clone()),
            h_y: Homotopy::zero(y.clone(), y.clone()),
        })));
    }
    // cheap invariant: cohomology dimensions per degree and vertex
    if x.cohomology_dims() != y.cohomology_dims() {
        return Ok(Equivalence::NotEquivalent {
            witness: format!(
                "cohomology dimensions differ: {:?} vs {:?}",
                x.cohomology_dims(),
                y.cohomology_dims()
            ),
        });
    }
    if **x == **y {
        return Ok(Equivalence::Equivalent(Box::new(Certificate::identity(x))));
    }

    let space = hom_k(x, y)?;
    let try_map = |f: &ChainMap| -> Option<Certificate> {
        let (c, _tri) = cone(f);
        let h = is_contractible(&c)?;
        certificate_from_cone_contraction(f, &h)
    };
    for b in &space.chain_basis {
        if let Some(cert) = try_map(b) {
            return Ok(Equivalence::Equivalent(Box::new(cert)));
        }
    }
    let mut rng = SeededRng::new(seed);
    for _ in 0..trials {
        let f = space.random_chain_map(&mut rng);
        if f.is_zero() {
            continue;
        }
        if let Some(cert) = try_map(&f) {
            return Ok(Equivalence::Equivalent(Box::new(cert)));
        }
    }

    // hom fingerprints against stalk probes
    let alg = x.algebra().clone();
    let lo = x.min_degree().unwrap_or(0).min(y.min_degree().unwrap_or(0)) - 1;
    let hi = x.max_degree().unwrap_or(0).max(y.max_degree().unwrap_or(0)) + 1;
    for i in 0..alg.vertex_count() {
        for kind in 0..2 {
            let m = if kind == 0 {
                Module::simple(&alg, i)
            } else {
                Module::projective(&alg, i)
            };
            for d in lo..=hi {
                let probe = Arc::new(Complex::stalk(m.clone(), d));
                let from_x = hom_k(&probe, x)?.dim;
                let from_y = hom_k(&probe, y)?.dim;
                if from_x != from_y {
                    return Ok(Equivalence::NotEquivalent {
                        witness: format!(
                            "hom from stalk probe (vertex {i}, kind {kind}, degree {d}) \
                             has dimension {from_x} vs {from_y}"
                        ),
                    });
                }
                let to_x = hom_k(x, &probe)?.dim;
                let to_y = hom_k(y, &probe)?.dim;
                if to_x != to_y {
                    return Ok(Equivalence::NotEquivalent {
                        witness: format!(
                            "hom into stalk probe (vertex {i}, kind {kind}, degree {d}) \
                             has dimension {to_x} vs {to_y}"
                        ),
                    });
                }
            }
        }
    }
    Ok(Equivalence::Inconclusive)
}

/// One Gaussian cancellation, two search moves per degree. First, a
/// module-map generalized inverse `g` of the differential (`d g d = d`, a
/// linear system) yields idempotents `gd`, `dg`. Failing that, a candidate
/// summand `C` with maps `s: C -> X^n`, `r: X^{n+1} -> C` and `r d s`
/// invertible yields them too. Either way the idempotent images form a
/// contractible two-term summand which the elimination removes.
fn cancel_once(x: &Arc<Complex>) -> Option<(Arc<Complex>, Certificate)> {
    for n in x.support() {
        let d = x.diff(n);
        if d.is_zero() {
            continue;
        }
        if let Some(pair) = generalized_inverse_idempotents(x, n, &d)
            .or_else(|| split_pair_idempotents(x, n, &d))
        {
            return Some(eliminate(x, n, &d, pair));
        }
    }
    None
}

fn generalized_inverse_idempotents(
    x: &Arc<Complex>,
    n: i64,
    d: &ModuleMap,
) -> Option<(ModuleMap, ModuleMap)> {
    let basis = hom_basis(x.term(n + 1), x.term(n)).ok()?;
    if basis.is_empty() {
        return None;
    }
    let field = x.algebra().field();
    let coord = ModuleMap::coord_len(x.term(n), x.term(n + 1));
    let mut eq = Matrix::zero(field, coord, basis.len());
    for (k, b) in basis.iter().enumerate() {
        let dbd = d.compose(b).compose(d);
        for (r, s) in dbd.flatten().into_iter().enumerate() {
            if !s.is_zero() {
                eq.set(r, k, s);
            }
        }
    }
    let sol = eq.solve(&d.flatten())?;
    let mut g = ModuleMap::zero(x.term(n + 1).clone(), x.term(n).clone());
    for (k, b) in basis.iter().enumerate() {
        if !sol[k].is_zero() {
            g = g.add(&b.scale(&sol[k]));
        }
    }
    let e = g.compose(d);
    if e.is_zero() {
        return None;
    }
    Some((e, d.compose(&g)))
}

fn split_pair_idempotents(
    x: &Arc<Complex>,
    n: i64,
    d: &ModuleMap,
) -> Option<(ModuleMap, ModuleMap)> {
    let alg = x.algebra().clone();
    let mut candidates = Vec::new();
    for i in 0..alg.vertex_count() {
        candidates.push(Module::projective(&alg, i));
        candidates.push(Module::injective(&alg, i));
        candidates.push(Module::simple(&alg, i));
    }
    for cand in candidates {
        let c = Arc::new(cand);
        let intos = hom_basis(&c, x.term(n)).ok()?;
        if intos.is_empty() {
            continue;
        }
        let outs = hom_basis(x.term(n + 1), &c).ok()?;
        for s in intos.iter() {
            let ds = d.compose(s);
            if ds.is_zero() {
                continue;
            }
            for r in outs.iter() {
                let rds = r.compose(&ds);
                if let Some(inv) = rds.inverse() {
                    let e = s.compose(&inv).compose(&r.compose(d));
                    let e1 = d.compose(s).compose(&inv).compose(r);
                    return Some((e, e1));
                }
            }
        }
    }
    None
}

/// Gaussian elimination of the contractible summand `im(e) ≅ im(e')`
/// inside `d^n`, with the certificate for this step.
fn eliminate(
    x: &Arc<Complex>,
    n: i64,
    d: &ModuleMap,
    (e, e1): (ModuleMap, ModuleMap),
) -> (Arc<Complex>, Certificate) {
    {
        let ker_e = crate::module::kernel(&e);
        let im_e = crate::module::image(&e);
        let ker_e1 = crate::module::kernel(&e1);
        let im_e1 = crate::module::image(&e1);

        // projections along the idempotent decompositions
        let split = |incl_k: &ModuleMap, incl_i: &ModuleMap| -> (ModuleMap, ModuleMap) {
            let nv = x.algebra().vertex_count();
            let mut pk = Vec::new();
            let mut pi = Vec::new();
            for v in 0..nv {
                let full = incl_k.vertex_map(v).hstack(incl_i.vertex_map(v));
                let inv = full.inverse().expect("kernel ⊕ image spans");
                let kdim = incl_k.source().dim_at(v);
                let rows_k: Vec<usize> = (0..kdim).collect();
                let rows_i: Vec<usize> = (kdim..inv.rows()).collect();
                pk.push(inv.submatrix_rows(&rows_k));
                pi.push(inv.submatrix_rows(&rows_i));
            }
            (
                ModuleMap::new_unchecked(incl_k.target().clone(), incl_k.source().clone(), pk),
                ModuleMap::new_unchecked(incl_i.target().clone(), incl_i.source().clone(), pi),
            )
        };
        let (pk0, _pi0) = split(&ker_e.inclusion, &im_e.inclusion);
        let (pk1, pi1) = split(&ker_e1.inclusion, &im_e1.inclusion);

        // u: im e -> im e' is d restricted, invertible
        let u = crate::module::restricted_map(&d, &im_e.inclusion, &im_e1.inclusion);
        let u_inv = u.inverse().expect("restricted differential is invertible");

        let b = pk1.compose(&d).compose(&im_e.inclusion);
        let c = pi1.compose(&d).compose(&ker_e.inclusion);

        // F and G of the cancellation, identity in other degrees
        let f_n = pk0.clone();
        let f_n1 = pk1.sub(&b.compose(&u_inv).compose(&pi1));
        let g_n = ker_e.inclusion.sub(&im_e.inclusion.compose(&u_inv).compose(&c));
        let g_n1 = ker_e1.inclusion.clone();

        // new complex
        let mut terms: BTreeMap<i64, Module> = BTreeMap::new();
        for m in x.support() {
            if m == n {
                terms.insert(m, (*ker_e.module).clone());
            } else if m == n + 1 {
                terms.insert(m, (*ker_e1.module).clone());
            } else {
                terms.insert(m, (**x.term(m)).clone());
            }
        }
        let mut diffs: BTreeMap<i64, ModuleMap> = BTreeMap::new();
        for m in x.support() {
            let dm = x.diff(m);
            let new_d = if m == n - 1 {
                f_n.compose(&dm)
            } else if m == n {
                f_n1.compose(&dm).compose(&g_n)
            } else if m == n + 1 {
                dm.compose(&g_n1)
            } else {
                dm
            };
            if !new_d.is_zero() {
                diffs.insert(m, new_d);
            }
        }
        let reduced = Arc::new(
            Complex::new(x.algebra().clone(), terms, diffs)
                .expect("cancelled complex still squares to zero"),
        );

        // chain maps into/out of the reduced complex
        let mut f_comps: BTreeMap<i64, ModuleMap> = BTreeMap::new();
        let mut g_comps: BTreeMap<i64, ModuleMap> = BTreeMap::new();
        for m in x.support() {
            let (fc, gc) = if m == n {
                (f_n.clone(), g_n.clone())
            } else if m == n + 1 {
                (f_n1.clone(), g_n1.clone())
            } else {
                (
                    ModuleMap::identity(x.term(m)),
                    ModuleMap::identity(x.term(m)),
                )
            };
            let fc = ModuleMap::new_unchecked(
                x.term(m).clone(),
                reduced.term(m).clone(),
                fc.vertex_maps().to_vec(),
            );
            let gc = ModuleMap::new_unchecked(
                reduced.term(m).clone(),
                x.term(m).clone(),
                gc.vertex_maps().to_vec(),
            );
            if !fc.is_zero() {
                f_comps.insert(m, fc);
            }
            if !gc.is_zero() {
                g_comps.insert(m, gc);
            }
        }
        let f = ChainMap::new_unchecked(x.clone(), reduced.clone(), f_comps);
        let g = ChainMap::new_unchecked(reduced.clone(), x.clone(), g_comps);

        // homotopy: h^{n+1} = incl_im_e ∘ u⁻¹ ∘ proj_im_e'; certificate uses -h
        let h_comp = im_e
            .inclusion
            .compose(&u_inv)
            .compose(&pi1)
            .neg();
        let mut h_x = Homotopy::zero(x.clone(), x.clone());
        h_x.insert(
            n + 1,
            ModuleMap::new_unchecked(
                x.term(n + 1).clone(),
                x.term(n).clone(),
                h_comp.vertex_maps().to_vec(),
            ),
        );
        let cert = Certificate {
            f,
            g,
            h_x,
            h_y: Homotopy::zero(reduced.clone(), reduced.clone()),
        };
        debug_assert!(cert.verify(), "cancellation certificate must verify");
        return Some((reduced, cert));
    }
    None
}

/// Heuristic minimization: repeated Gaussian cancellation with a composed
/// certificate back to the input. The result is homotopy equivalent;
/// minimality is best effort.
pub fn minimize(x: &Arc<Complex>) -> (Arc<Complex>, Certificate) {
    let mut cur = x.clone();
    let mut cert = Certificate::identity(x);
    while let Some((next, step)) = cancel_once(&cur) {
        cert = cert.compose(&step);
        cur = next;
    }
    debug_assert!(cert.verify());
    (cur, cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::module::Module;

    fn a2_lambda_s1() -> Arc<Complex> {
        // built by hand here: P2 -> P1 -> S1 in degrees -2..0
        let alg = catalog::algebra("a2").unwrap();
        let p1 = Arc::new(Module::projective(&alg, 0));
        let p2 = Arc::new(Module::projective(&alg, 1));
        let s1 = Arc::new(Module::simple(&alg, 0));
        let incl = hom_basis(&p2, &p1).unwrap()[0].clone();
        let proj = hom_basis(&p1, &s1).unwrap()[0].clone();
        let mut terms = BTreeMap::new();
        terms.insert(-2, (*p2).clone());
        terms.insert(-1, (*p1).clone());
        terms.insert(0, (*s1).clone());
        let mut diffs = BTreeMap::new();
        diffs.insert(-2, incl);
        diffs.insert(-1, proj);
        Arc::new(Complex::new(alg, terms, diffs).unwrap())
    }

    #[test]
    fn cone_of_identity_is_contractible() {
        let alg = catalog::algebra("a2").unwrap();
        let p1 = Arc::new(Complex::stalk(Module::projective(&alg, 0), 0));
        let id = ChainMap::identity(&p1);
        let (c, _) = cone(&id);
        assert!(is_contractible(&c).is_some());
        // zero complex is contractible with the empty witness
        let z = Arc::new(Complex::zero_complex(alg));
        assert!(is_contractible(&z).is_some());
    }

    #[test]
    fn acyclic_but_not_contractible_witness() {
        let x = a2_lambda_s1();
        assert!(x.is_acyclic());
        assert!(is_contractible(&x).is_none());
    }

    #[test]
    fn hom_k_examples_on_a2() {
        let alg = catalog::algebra("a2").unwrap();
        let x = a2_lambda_s1();
        // End of the acyclic model of S1 is one-dimensional
        let end = hom_k(&x, &x).unwrap();
        assert_eq!(end.dim, 1);
        // maps into a contractible cone vanish in the homotopy category
        let p1 = Arc::new(Complex::stalk(Module::projective(&alg, 0), 0));
        let (c, _) = cone(&ChainMap::identity(&p1));
        assert_eq!(hom_k(&x, &c).unwrap().dim, 0);
        // stalk homs agree with module homs
        let s1 = Arc::new(Complex::stalk(Module::simple(&alg, 0), 0));
        assert_eq!(hom_k(&p1, &s1).unwrap().dim, 1);
    }

    #[test]
    fn hom_k_is_additive() {
        let alg = catalog::algebra("a2").unwrap();
        let x = a2_lambda_s1();
        let s1 = Arc::new(Complex::stalk(Module::simple(&alg, 0), 0));
        let xx = Arc::new(x.direct_sum(&x));
        assert_eq!(
            hom_k(&xx, &s1).unwrap().dim,
            2 * hom_k(&x, &s1).unwrap().dim
        );
    }

    #[test]
    fn equivalence_with_split_contractible_summand() {
        let alg = catalog::algebra("a2").unwrap();
        let x = a2_lambda_s1();
        let p1 = Arc::new(Complex::stalk(Module::projective(&alg, 0), 0));
        let (c, _) = cone(&ChainMap::identity(&p1));
        let padded = Arc::new(x.direct_sum(&c));
        match homotopy_equivalent(&x, &padded, 11, 20).unwrap() {
            Equivalence::Equivalent(cert) => assert!(cert.verify()),
            _ => panic!("expected an equivalence"),
        }
        // reflexive case gives the identity certificate
        match homotopy_equivalent(&x, &x, 11, 5).unwrap() {
            Equivalence::Equivalent(cert) => assert!(cert.verify()),
            _ => panic!("expected an equivalence"),
        }
    }

    #[test]
    fn shift_is_not_equivalent_with_witness() {
        let x = a2_lambda_s1();
        let y = Arc::new(x.shift(1));
        match homotopy_equivalent(&x, &y, 5, 10).unwrap() {
            Equivalence::NotEquivalent { witness } => {
                assert!(!witness.is_empty());
            }
            _ => panic!("expected not-equivalent"),
        }
    }

    #[test]
    fn minimize_kills_contractibles_and_certifies() {
        let alg = catalog::algebra("a2").unwrap();
        let p1 = Arc::new(Complex::stalk(Module::projective(&alg, 0), 0));
        let (c, _) = cone(&ChainMap::identity(&p1));
        let (min, cert) = minimize(&c);
        assert!(min.is_zero());
        assert!(cert.verify());

        let x = a2_lambda_s1();
        let padded = Arc::new(x.direct_sum(&c));
        let (min, cert) = minimize(&padded);
        assert!(cert.verify());
        assert_eq!(min.total_dim(), x.total_dim());
    }

    #[test]
    fn certificates_compose_and_shift() {
        let alg = catalog::algebra("a2").unwrap();
        let p1 = Arc::new(Complex::stalk(Module::projective(&alg, 0), 0));
        let (c, _) = cone(&ChainMap::identity(&p1));
        let x = a2_lambda_s1();
        let padded = Arc::new(x.direct_sum(&c));
        let (mid, cert1) = minimize(&padded);
        let (_, cert2) = minimize(&mid);
        let cert = cert1.compose(&cert2);
        assert!(cert.verify());
        assert!(cert.shift(2).verify());
        assert!(cert.shift(-1).verify());
    }
}
