//! Path algebras of acyclic quivers with admissible relations.
//!
//! The algebra is materialized as a finite path basis: the span of all paths
//! modulo the two-sided ideal generated by the relations, with a
//! multiplication table closed under that basis. Paths compose left to
//! right, so the path "first a then b" is the arrow sequence `[a, b]`.

use std::collections::HashMap;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;
use crate::quiver::Quiver;

/// A residue class of a path, represented by its canonical path.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathClass {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl PathClass {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }
}

/// A linear combination of basis elements, sparse.
pub type Comb = Vec<(Scalar, usize)>;

type RelationTerm = (Scalar, Vec<usize>);

#[derive(Clone, Debug)]
pub struct Algebra {
    field: FieldSpec,
    quiver: Quiver,
    relations: Vec<Vec<RelationTerm>>,
    basis: Vec<PathClass>,
    /// basis indices of e_i Λ e_j, ascending
    pair_basis: Vec<Vec<Vec<usize>>>,
    /// position of each basis element inside its (source, target) pair list
    pos_in_pair: Vec<usize>,
    /// product of basis elements, indexed `b1 * dim + b2`
    mult: Vec<Comb>,
    vertex_unit: Vec<usize>,
    arrow_basis: Vec<usize>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.quiver == other.quiver
            && self.relations == other.relations
    }
}

impl Eq for Algebra {}

impl Hash for Algebra {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.hash(state);
        self.quiver.hash(state);
        self.relations.hash(state);
    }
}

impl Algebra {
    /// Builds the algebra from a quiver and admissible relations, given as
    /// lists of `(coefficient, path)` terms over arrow names.
    pub fn new(
        field: FieldSpec,
        quiver: Quiver,
        relations_in: Vec<Vec<(String, Vec<String>)>>,
    ) -> Result<Arc<Self>> {
        let mut relations = Vec::new();
        for rel in relations_in {
            let mut terms: Vec<RelationTerm> = Vec::new();
            let mut signature: Option<(usize, usize)> = None;
            for (coeff, path_names) in rel {
                if path_names.len() < 2 {
                    return Err(Error::BadRelation(format!(
                        "term {:?} has length {} < 2",
                        path_names,
                        path_names.len()
                    )));
                }
                let arrows: Vec<usize> = path_names
                    .iter()
                    .map(|n| quiver.arrow_index(n))
                    .collect::<Result<_>>()?;
                for w in arrows.windows(2) {
                    if quiver.arrow(w[0]).target != quiver.arrow(w[1]).source {
                        return Err(Error::BadRelation(format!(
                            "path {path_names:?} is not composable"
                        )));
                    }
                }
                let sig = (
                    quiver.arrow(arrows[0]).source,
                    quiver.arrow(*arrows.last().unwrap()).target,
                );
                match signature {
                    None => signature = Some(sig),
                    Some(s) if s != sig => {
                        return Err(Error::BadRelation(
                            "terms of one relation must be parallel paths".into(),
                        ))
                    }
                    _ => {}
                }
                terms.push((field.parse(&coeff)?, arrows));
            }
            if !terms.is_empty() {
                relations.push(terms);
            }
        }

        let paths = enumerate_paths(&quiver);
        let path_index: HashMap<(usize, Vec<usize>), usize> = paths
            .iter()
            .enumerate()
            .map(|(i, p)| ((p.source, p.arrows.clone()), i))
            .collect();

        let reducible = reduce_ideal(field, &quiver, &relations, &paths, &path_index)?;

        let mut basis = Vec::new();
        let mut basis_of_path = vec![usize::MAX; paths.len()];
        for (i, p) in paths.iter().enumerate() {
            if !reducible.contains_key(&i) {
                basis_of_path[i] = basis.len();
                basis.push(p.clone());
            }
        }

        let nv = quiver.vertex_count();
        let mut pair_basis = vec![vec![Vec::new(); nv]; nv];
        let mut pos_in_pair = vec![0usize; basis.len()];
        for (b, p) in basis.iter().enumerate() {
            pos_in_pair[b] = pair_basis[p.source][p.target].len();
            pair_basis[p.source][p.target].push(b);
        }

        let dim = basis.len();
        let mut mult = vec![Comb::new(); dim * dim];
        for (b1, p1) in basis.iter().enumerate() {
            for (b2, p2) in basis.iter().enumerate() {
                if p1.target != p2.source {
                    continue;
                }
                let mut arrows = p1.arrows.clone();
                arrows.extend(&p2.arrows);
                let idx = path_index[&(p1.source, arrows)];
                let comb: Comb = match reducible.get(&idx) {
                    None => vec![(field.one(), basis_of_path[idx])],
                    Some(nf) => nf
                        .iter()
                        .map(|(c, pi)| (c.clone(), basis_of_path[*pi]))
                        .collect(),
                };
                mult[b1 * dim + b2] = comb;
            }
        }

        let vertex_unit = (0..nv)
            .map(|v| basis_of_path[path_index[&(v, Vec::new())]])
            .collect();
        let arrow_basis = (0..quiver.arrow_count())
            .map(|a| {
                let arr = quiver.arrow(a);
                basis_of_path[path_index[&(arr.source, vec![a])]]
            })
            .collect();

        Ok(Arc::new(Algebra {
            field,
            quiver,
            relations,
            basis,
            pair_basis,
            pos_in_pair,
            mult,
            vertex_unit,
            arrow_basis,
        }))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Vec<RelationTerm>] {
        &self.relations
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn arrow_count(&self) -> usize {
        self.quiver.arrow_count()
    }

    pub fn basis(&self) -> &[PathClass] {
        &self.basis
    }

    pub fn pair_basis(&self, i: usize, j: usize) -> &[usize] {
        &self.pair_basis[i][j]
    }

    pub fn pair_dim(&self, i: usize, j: usize) -> usize {
        self.pair_basis[i][j].len()
    }

    pub fn pos_in_pair(&self, b: usize) -> usize {
        self.pos_in_pair[b]
    }

    pub fn unit(&self, v: usize) -> usize {
        self.vertex_unit[v]
    }

    pub fn arrow_element(&self, a: usize) -> usize {
        self.arrow_basis[a]
    }

    pub fn product(&self, b1: usize, b2: usize) -> &Comb {
        &self.mult[b1 * self.basis.len() + b2]
    }

    /// Matrix of right multiplication by arrow `a: j -> j'` on the pair
    /// spaces `e_i Λ e_j -> e_i Λ e_j'`.
    pub fn right_mult_matrix(&self, i: usize, a: usize) -> Matrix {
        let arr = self.quiver.arrow(a);
        let src = &self.pair_basis[i][arr.source];
        let tgt = &self.pair_basis[i][arr.target];
        let mut m = Matrix::zero(self.field, tgt.len(), src.len());
        for (col, &b) in src.iter().enumerate() {
            for (c, bprod) in self.product(b, self.arrow_basis[a]) {
                m.set(self.pos_in_pair[*bprod], col, c.clone());
            }
        }
        m
    }

    /// Matrix of left multiplication by arrow `a: s -> t` on the pair
    /// spaces `e_t Λ e_j -> e_s Λ e_j`.
    pub fn left_mult_matrix(&self, a: usize, j: usize) -> Matrix {
        let arr = self.quiver.arrow(a);
        let src = &self.pair_basis[arr.target][j];
        let tgt = &self.pair_basis[arr.source][j];
        let mut m = Matrix::zero(self.field, tgt.len(), src.len());
        for (col, &b) in src.iter().enumerate() {
            for (c, bprod) in self.product(self.arrow_basis[a], b) {
                m.set(self.pos_in_pair[*bprod], col, c.clone());
            }
        }
        m
    }

    /// The opposite algebra: arrows reversed, relations reversed word by
    /// word. Taking the opposite twice reproduces the algebra structurally.
    pub fn opposite(&self) -> Result<Arc<Algebra>> {
        let quiver = self.quiver.reversed();
        let relations = self
            .relations
            .iter()
            .map(|rel| {
                rel.iter()
                    .map(|(c, arrows)| {
                        let names: Vec<String> = arrows
                            .iter()
                            .rev()
                            .map(|&a| self.quiver.arrow(a).name.clone())
                            .collect();
                        (c.to_string(), names)
                    })
                    .collect()
            })
            .collect();
        Algebra::new(self.field, quiver, relations)
    }
}

fn enumerate_paths(quiver: &Quiver) -> Vec<PathClass> {
    let mut paths: Vec<PathClass> = (0..quiver.vertex_count())
        .map(|v| PathClass {
            source: v,
            target: v,
            arrows: Vec::new(),
        })
        .collect();
    let mut frontier: Vec<usize> = (0..paths.len()).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &pi in &frontier {
            let p = paths[pi].clone();
            for a in 0..quiver.arrow_count() {
                if quiver.arrow(a).source == p.target {
                    let mut arrows = p.arrows.clone();
                    arrows.push(a);
                    next.push(PathClass {
                        source: p.source,
                        target: quiver.arrow(a).target,
                        arrows,
                    });
                }
            }
        }
        frontier = (paths.len()..paths.len() + next.len()).collect();
        paths.extend(next);
    }
    paths
}

/// Row-reduces the span of `p * r * q` over all relations `r` and composable
/// paths `p, q` and returns, for each reducible path, its normal form as a
/// combination of irreducible (basis) paths. Pivots prefer long paths, so
/// trivial paths and arrows always stay in the basis.
fn reduce_ideal(
    field: FieldSpec,
    quiver: &Quiver,
    relations: &[Vec<RelationTerm>],
    paths: &[PathClass],
    path_index: &HashMap<(usize, Vec<usize>), usize>,
) -> Result<HashMap<usize, Vec<(Scalar, usize)>>> {
    let np = paths.len();
    // column j holds path np-1-j so that elimination pivots on long paths
    let col_of = |pi: usize| np - 1 - pi;
    let mut gens: Vec<Vec<Scalar>> = Vec::new();
    for rel in relations {
        let rel_src = quiver.arrow(rel[0].1[0]).source;
        let rel_tgt = quiver.arrow(*rel[0].1.last().unwrap()).target;
        for p in paths.iter().filter(|p| p.target == rel_src) {
            for q in paths.iter().filter(|q| q.source == rel_tgt) {
                let mut row = vec![field.zero(); np];
                for (c, mid) in rel {
                    let mut arrows = p.arrows.clone();
                    arrows.extend(mid);
                    arrows.extend(&q.arrows);
                    let idx = path_index[&(p.source, arrows)];
                    row[col_of(idx)] = row[col_of(idx)].add(c);
                }
                gens.push(row);
            }
        }
    }
    let mut reducible = HashMap::new();
    if gens.is_empty() {
        return Ok(reducible);
    }
    let mut m = Matrix::from_rows(field, gens)?;
    let pivots = m.rref_in_place();
    for (r, &pc) in pivots.iter().enumerate() {
        let path = np - 1 - pc;
        if paths[path].len() < 2 {
            // admissibility guarantees the ideal sits in paths of length >= 2
            return Err(Error::BadRelation(
                "ideal reduces a path of length < 2".into(),
            ));
        }
        let mut nf = Vec::new();
        for c in 0..np {
            if c == pc {
                continue;
            }
            let e = m.at(r, c);
            if !e.is_zero() {
                nf.push((e.neg(), np - 1 - c));
            }
        }
        reducible.insert(path, nf);
    }
    Ok(reducible)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;

    fn s(v: &str) -> String {
        v.to_string()
    }

    pub fn a2() -> Arc<Algebra> {
        let q = Quiver::new(
            vec![s("1"), s("2")],
            vec![(s("a"), s("1"), s("2"))],
        )
        .unwrap();
        Algebra::new(FieldSpec::Rationals, q, vec![]).unwrap()
    }

    pub fn n3() -> Arc<Algebra> {
        let q = Quiver::new(
            vec![s("1"), s("2"), s("3")],
            vec![(s("a"), s("1"), s("2")), (s("b"), s("2"), s("3"))],
        )
        .unwrap();
        Algebra::new(
            FieldSpec::Rationals,
            q,
            vec![vec![(s("1"), vec![s("a"), s("b")])]],
        )
        .unwrap()
    }

    #[test]
    fn a2_has_path_basis_of_dim_three() {
        let alg = a2();
        assert_eq!(alg.dim(), 3);
        let lens: Vec<usize> = alg.basis().iter().map(|p| p.len()).collect();
        assert_eq!(lens, vec![0, 0, 1]);
        assert_eq!(alg.pair_dim(0, 1), 1);
        assert_eq!(alg.pair_dim(1, 0), 0);
    }

    #[test]
    fn n3_relation_kills_the_long_path() {
        let alg = n3();
        assert_eq!(alg.dim(), 5);
        assert_eq!(alg.pair_dim(0, 2), 0);
        // a * b = 0 in the algebra
        let a = alg.arrow_element(0);
        let b = alg.arrow_element(1);
        assert!(alg.product(a, b).is_empty());
    }

    #[test]
    fn a3_without_relations_keeps_the_long_path() {
        let q = Quiver::new(
            vec![s("1"), s("2"), s("3")],
            vec![(s("a"), s("1"), s("2")), (s("b"), s("2"), s("3"))],
        )
        .unwrap();
        let alg = Algebra::new(FieldSpec::Rationals, q, vec![]).unwrap();
        assert_eq!(alg.dim(), 6);
        assert_eq!(alg.pair_dim(0, 2), 1);
    }

    #[test]
    fn multiplication_is_associative_on_basis_triples() {
        for alg in [a2(), n3()] {
            let dim = alg.dim();
            let compose = |comb: &Comb, b: usize| -> Vec<(Scalar, usize)> {
                let mut acc: HashMap<usize, Scalar> = HashMap::new();
                for (c, x) in comb {
                    for (c2, y) in alg.product(*x, b) {
                        let e = acc.entry(*y).or_insert_with(|| alg.field().zero());
                        *e = e.add(&c.mul(c2));
                    }
                }
                let mut v: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                v.sort_by_key(|(i, _)| *i);
                v.into_iter().map(|(i, c)| (c, i)).collect()
            };
            for x in 0..dim {
                for y in 0..dim {
                    for z in 0..dim {
                        let xy_z = compose(alg.product(x, y), z);
                        let mut x_yz: HashMap<usize, Scalar> = HashMap::new();
                        for (c, w) in alg.product(y, z) {
                            for (c2, v) in alg.product(x, *w) {
                                let e = x_yz.entry(*v).or_insert_with(|| alg.field().zero());
                                *e = e.add(&c.mul(c2));
                            }
                        }
                        let mut x_yz: Vec<_> =
                            x_yz.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                        x_yz.sort_by_key(|(i, _)| *i);
                        let x_yz: Vec<_> = x_yz.into_iter().map(|(i, c)| (c, i)).collect();
                        assert_eq!(xy_z, x_yz, "associativity at ({x},{y},{z})");
                    }
                }
            }
        }
    }

    #[test]
    fn dim_counts_pair_spaces() {
        let alg = n3();
        let mut total = 0;
        for i in 0..3 {
            for j in 0..3 {
                total += alg.pair_dim(i, j);
            }
        }
        assert_eq!(total, alg.dim());
    }

    #[test]
    fn opposite_is_involutive_and_dim_preserving() {
        for alg in [a2(), n3()] {
            let op = alg.opposite().unwrap();
            assert_eq!(op.dim(), alg.dim());
            assert_eq!(*op.opposite().unwrap(), *alg);
            // a2: the arrow now runs 2 -> 1
            if alg.dim() == 3 {
                assert_eq!(op.quiver().arrow(0).source, 1);
                assert_eq!(op.quiver().arrow(0).target, 0);
            }
        }
    }

    #[test]
    fn non_parallel_relation_rejected() {
        let q = Quiver::new(
            vec![s("1"), s("2"), s("3"), s("4")],
            vec![
                (s("a"), s("1"), s("2")),
                (s("b"), s("2"), s("3")),
                (s("c"), s("2"), s("4")),
            ],
        )
        .unwrap();
        let r = Algebra::new(
            FieldSpec::Rationals,
            q,
            vec![vec![
                (s("1"), vec![s("a"), s("b")]),
                (s("1"), vec![s("a"), s("c")]),
            ]],
        );
        assert!(matches!(r, Err(Error::BadRelation(_))));
    }

    #[test]
    fn short_relation_rejected() {
        let q = Quiver::new(vec![s("1"), s("2")], vec![(s("a"), s("1"), s("2"))]).unwrap();
        let r = Algebra::new(FieldSpec::Rationals, q, vec![vec![(s("1"), vec![s("a")])]]);
        assert!(matches!(r, Err(Error::BadRelation(_))));
    }

    #[test]
    fn commutativity_relation_merges_paths() {
        // square with commutativity relation ab = cd
        let q = Quiver::new(
            vec![s("1"), s("2"), s("3"), s("4")],
            vec![
                (s("a"), s("1"), s("2")),
                (s("b"), s("2"), s("4")),
                (s("c"), s("1"), s("3")),
                (s("d"), s("3"), s("4")),
            ],
        )
        .unwrap();
        let alg = Algebra::new(
            FieldSpec::Rationals,
            q,
            vec![vec![
                (s("1"), vec![s("a"), s("b")]),
                (s("-1"), vec![s("c"), s("d")]),
            ]],
        )
        .unwrap();
        // e1..e4, a, b, c, d, and one class for the diagonal
        assert_eq!(alg.dim(), 9);
        assert_eq!(alg.pair_dim(0, 3), 1);
    }
}
