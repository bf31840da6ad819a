//! Finite-dimensional associative algebras over F_q given by structure
//! constants: b_i * b_j = sum_k c_ijk b_k.
//!
//! The constants are stored sparsely per basis pair. Products of general
//! elements are bilinear expansions; for |R| <= 4096 a full dense
//! multiplication table is built at construction so the exhaustive theorem
//! checks run on table lookups.

use crate::error::RingError;
use crate::field::FiniteField;
use crate::ring::{
    radix_digits, radix_index, Coords, DenseCache, FqView, MatrixShape, Ring,
    DEFAULT_ENUMERATION_BOUND, EXHAUSTIVE_BOUND,
};

/// An F_q-algebra with a distinguished basis and structure constants.
#[derive(Debug, Clone)]
pub struct StructureConstantAlgebra {
    field: FiniteField,
    dim: usize,
    /// rows[i * dim + j] lists the nonzero (k, c_ijk) of b_i * b_j.
    rows: Vec<Vec<(u16, u8)>>,
    unit: Vec<u8>,
    unit_index: usize,
    size: usize,
    descriptor: String,
    shape: Option<MatrixShape>,
    bound: usize,
    cache: Option<DenseCache>,
}

impl StructureConstantAlgebra {
    /// Build from a flat structure-constant table of length dim^3, with
    /// c_ijk at position (i*dim + j)*dim + k. Only well-formedness is
    /// checked here; algebra axioms are the business of
    /// [`validate_axioms`](Self::validate_axioms) and the axiom report.
    pub fn new(
        field: FiniteField,
        dim: usize,
        table: &[u64],
        unit: &[u64],
        bound: Option<usize>,
    ) -> Result<Self, RingError> {
        let q = field.order() as u64;
        if dim == 0 {
            return Err(RingError::InvalidParameter(
                "algebra dimension must be at least 1".into(),
            ));
        }
        if table.len() != dim * dim * dim {
            return Err(RingError::InvalidParameter(format!(
                "structure-constant table must have dim^3 = {} entries, got {}",
                dim * dim * dim,
                table.len()
            )));
        }
        if unit.len() != dim {
            return Err(RingError::InvalidParameter(format!(
                "unit vector must have dim = {dim} entries, got {}",
                unit.len()
            )));
        }
        if let Some(&c) = table.iter().chain(unit.iter()).find(|&&c| c >= q) {
            return Err(RingError::InvalidParameter(format!(
                "scalar {c} is out of range for F_{q}"
            )));
        }
        let mut rows = vec![Vec::new(); dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let c = table[(i * dim + j) * dim + k];
                    if c != 0 {
                        rows[i * dim + j].push((k as u16, c as u8));
                    }
                }
            }
        }
        let unit: Vec<u8> = unit.iter().map(|&c| c as u8).collect();
        let descriptor = format!("SC(dim={dim}) over F_{}", field.order());
        Self::assemble(field, dim, rows, unit, descriptor, None, bound)
    }

    /// The full matrix algebra M_k(F_q) on the matrix-unit basis E_ab,
    /// row major.
    pub fn matrix_algebra(
        field: FiniteField,
        k: usize,
        bound: Option<usize>,
    ) -> Result<Self, RingError> {
        if k == 0 {
            return Err(RingError::InvalidParameter(
                "matrix size must be at least 1".into(),
            ));
        }
        let dim = k * k;
        let mut rows = vec![Vec::new(); dim * dim];
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    for d in 0..k {
                        if b == c {
                            let i = a * k + b;
                            let j = c * k + d;
                            rows[i * dim + j].push(((a * k + d) as u16, 1u8));
                        }
                    }
                }
            }
        }
        let mut unit = vec![0u8; dim];
        for a in 0..k {
            unit[a * k + a] = 1;
        }
        let descriptor = format!("M_{k}(F_{})", field.order());
        let alg = Self::assemble(
            field,
            dim,
            rows,
            unit,
            descriptor,
            Some(MatrixShape::Full { k }),
            bound,
        )?;
        alg.validate_axioms()?;
        Ok(alg)
    }

    /// The upper-triangular algebra T_k(F_q) on the basis E_ab, a <= b,
    /// ordered by (a, b).
    pub fn upper_triangular(
        field: FiniteField,
        k: usize,
        bound: Option<usize>,
    ) -> Result<Self, RingError> {
        if k == 0 {
            return Err(RingError::InvalidParameter(
                "matrix size must be at least 1".into(),
            ));
        }
        let mut positions = Vec::new();
        for a in 0..k {
            for b in a..k {
                positions.push((a, b));
            }
        }
        let dim = positions.len();
        let pos_of = |a: usize, b: usize| positions.iter().position(|&p| p == (a, b)).unwrap();
        let mut rows = vec![Vec::new(); dim * dim];
        for (i, &(a, b)) in positions.iter().enumerate() {
            for (j, &(c, d)) in positions.iter().enumerate() {
                if b == c {
                    rows[i * dim + j].push((pos_of(a, d) as u16, 1u8));
                }
            }
        }
        let mut unit = vec![0u8; dim];
        for a in 0..k {
            unit[pos_of(a, a)] = 1;
        }
        let descriptor = format!("T_{k}(F_{})", field.order());
        let alg = Self::assemble(
            field,
            dim,
            rows,
            unit,
            descriptor,
            Some(MatrixShape::UpperTriangular { k }),
            bound,
        )?;
        alg.validate_axioms()?;
        Ok(alg)
    }

    /// The group algebra F_q[G] for a group given by its Cayley table
    /// (identity at index 0). The table is fully validated first.
    pub fn group_algebra(
        field: FiniteField,
        cayley: &[Vec<usize>],
        bound: Option<usize>,
    ) -> Result<Self, RingError> {
        validate_cayley_table(cayley)?;
        let dim = cayley.len();
        let mut rows = vec![Vec::new(); dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                rows[i * dim + j].push((cayley[i][j] as u16, 1u8));
            }
        }
        let mut unit = vec![0u8; dim];
        unit[0] = 1;
        let descriptor = format!("F_{}[G{dim}]", field.order());
        let alg = Self::assemble(field, dim, rows, unit, descriptor, None, bound)?;
        alg.validate_axioms()?;
        Ok(alg)
    }

    fn assemble(
        field: FiniteField,
        dim: usize,
        rows: Vec<Vec<(u16, u8)>>,
        unit: Vec<u8>,
        descriptor: String,
        shape: Option<MatrixShape>,
        bound: Option<usize>,
    ) -> Result<Self, RingError> {
        let bound = bound.unwrap_or(DEFAULT_ENUMERATION_BOUND);
        let q = field.order();
        let size = (q as u128).checked_pow(dim as u32).unwrap_or(u128::MAX);
        if size > bound as u128 {
            return Err(RingError::SizeExceeded {
                size,
                bound: bound as u128,
            });
        }
        let size = size as usize;
        let unit_index = {
            let digits: Vec<usize> = unit.iter().map(|&c| c as usize).collect();
            radix_index(&digits, q)
        };
        let mut alg = StructureConstantAlgebra {
            field,
            dim,
            rows,
            unit,
            unit_index,
            size,
            descriptor,
            shape,
            bound,
            cache: None,
        };
        if size <= EXHAUSTIVE_BOUND {
            alg.cache = Some(alg.build_cache());
        }
        Ok(alg)
    }

    /// Dense tables built incrementally: x*y for x = rest + d*b_i reuses
    /// the already-filled row of rest, so the whole table costs O(|R|^2)
    /// lookups instead of O(|R|^2) bilinear expansions.
    fn build_cache(&self) -> DenseCache {
        let n = self.size;
        let q = self.field.order();
        let dim = self.dim;

        let neg: Vec<u16> = (0..n).map(|a| self.neg_digitwise(a) as u16).collect();

        use rayon::prelude::*;
        let add: Vec<u16> = (0..n)
            .into_par_iter()
            .flat_map_iter(|a| {
                let da = self.digits(a);
                (0..n).map(move |b| {
                    let db = self.digits(b);
                    let sum: Vec<u8> = da
                        .iter()
                        .zip(&db)
                        .map(|(&x, &y)| self.field.add(x, y))
                        .collect();
                    self.index(&sum) as u16
                })
            })
            .collect();

        // scaled[(i*q + d) * n + y] = index of (d * b_i) * y.
        let mut scaled = vec![0u16; dim * q * n];
        for i in 0..dim {
            for y in 0..n {
                let biy = self.basis_times(i, y);
                for d in 1..q {
                    let idx = self.scalar_times(d as u8, biy);
                    scaled[(i * q + d) * n + y] = idx as u16;
                }
            }
        }

        let mut mul = vec![0u16; n * n];
        for x in 1..n {
            // Lowest nonzero base-q digit of x.
            let mut i = 0;
            let mut power = 1;
            let mut rest_x = x;
            while rest_x % q == 0 {
                rest_x /= q;
                power *= q;
                i += 1;
            }
            let d = rest_x % q;
            let rest = x - d * power;
            let (lo, hi) = mul.split_at_mut(x * n);
            let rest_row = &lo[rest * n..rest * n + n];
            let x_row = &mut hi[..n];
            let scale_row = &scaled[(i * q + d) * n..(i * q + d) * n + n];
            for y in 0..n {
                x_row[y] = add[rest_row[y] as usize * n + scale_row[y] as usize];
            }
        }

        DenseCache { n, add, mul, neg }
    }

    /// b_i * y by expanding y over the basis.
    fn basis_times(&self, i: usize, y: usize) -> usize {
        let dy = self.digits(y);
        let mut acc = vec![0u8; self.dim];
        for (j, &yj) in dy.iter().enumerate() {
            if yj == 0 {
                continue;
            }
            for &(k, c) in &self.rows[i * self.dim + j] {
                let term = self.field.mul(yj, c);
                acc[k as usize] = self.field.add(acc[k as usize], term);
            }
        }
        self.index(&acc)
    }

    fn scalar_times(&self, c: u8, x: usize) -> usize {
        let digits = self.digits(x);
        let scaled: Vec<u8> = digits.iter().map(|&d| self.field.mul(c, d)).collect();
        self.index(&scaled)
    }

    fn digits(&self, x: usize) -> Vec<u8> {
        radix_digits(x, self.field.order(), self.dim)
            .into_iter()
            .map(|d| d as u8)
            .collect()
    }

    fn index(&self, digits: &[u8]) -> usize {
        let ds: Vec<usize> = digits.iter().map(|&d| d as usize).collect();
        radix_index(&ds, self.field.order())
    }

    fn neg_digitwise(&self, a: usize) -> usize {
        let digits = self.digits(a);
        let neg: Vec<u8> = digits.iter().map(|&d| self.field.neg(d)).collect();
        self.index(&neg)
    }

    fn add_digitwise(&self, a: usize, b: usize) -> usize {
        let da = self.digits(a);
        let db = self.digits(b);
        let sum: Vec<u8> = da
            .iter()
            .zip(&db)
            .map(|(&x, &y)| self.field.add(x, y))
            .collect();
        self.index(&sum)
    }

    /// Product by bilinear expansion over the structure constants. This is
    /// the table-free route; it must agree with the dense cache everywhere.
    pub fn mul_bilinear(&self, a: usize, b: usize) -> usize {
        let da = self.digits(a);
        let db = self.digits(b);
        let mut acc = vec![0u8; self.dim];
        for (i, &xi) in da.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in db.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let coef = self.field.mul(xi, yj);
                for &(k, c) in &self.rows[i * self.dim + j] {
                    let term = self.field.mul(coef, c);
                    acc[k as usize] = self.field.add(acc[k as usize], term);
                }
            }
        }
        self.index(&acc)
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Ring index of the basis element b_i.
    pub fn basis_index(&self, i: usize) -> usize {
        self.field.order().pow(i as u32)
    }

    /// Nonzero (k, c_ijk) entries of b_i * b_j.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(u16, u8)] {
        &self.rows[i * self.dim + j]
    }

    pub fn unit_coords(&self) -> &[u8] {
        &self.unit
    }

    /// Basis-level algebra axioms: (b_i b_j) b_k = b_i (b_j b_k) for all
    /// basis triples, and 1 * b_i = b_i * 1 = b_i. Sufficient for full
    /// associativity and the unit law because multiplication is bilinear
    /// by construction.
    pub fn validate_axioms(&self) -> Result<(), RingError> {
        if let Some((i, j, k)) = self.basis_associativity_witness() {
            return Err(RingError::InvalidAlgebra(format!(
                "associativity fails on basis triple (b{i}, b{j}, b{k})"
            )));
        }
        if let Some(i) = self.unit_law_witness() {
            return Err(RingError::InvalidAlgebra(format!(
                "unit law fails on basis element b{i}"
            )));
        }
        Ok(())
    }

    /// First basis triple violating associativity, if any.
    pub fn basis_associativity_witness(&self) -> Option<(usize, usize, usize)> {
        for i in 0..self.dim {
            let bi = self.basis_index(i);
            for j in 0..self.dim {
                let bj = self.basis_index(j);
                let ij = self.mul_bilinear(bi, bj);
                for k in 0..self.dim {
                    let bk = self.basis_index(k);
                    let jk = self.mul_bilinear(bj, bk);
                    if self.mul_bilinear(ij, bk) != self.mul_bilinear(bi, jk) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// First basis element violating 1*b_i = b_i*1 = b_i, if any.
    pub fn unit_law_witness(&self) -> Option<usize> {
        for i in 0..self.dim {
            let bi = self.basis_index(i);
            if self.mul_bilinear(self.unit_index, bi) != bi
                || self.mul_bilinear(bi, self.unit_index) != bi
            {
                return Some(i);
            }
        }
        None
    }
}

/// Check that a Cayley table describes a group with identity at index 0.
pub fn validate_cayley_table(cayley: &[Vec<usize>]) -> Result<(), RingError> {
    let n = cayley.len();
    if n == 0 {
        return Err(RingError::NotAGroup("empty table".into()));
    }
    for (i, row) in cayley.iter().enumerate() {
        if row.len() != n {
            return Err(RingError::NotAGroup(format!(
                "row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        if let Some(&e) = row.iter().find(|&&e| e >= n) {
            return Err(RingError::NotAGroup(format!(
                "row {i} contains out-of-range entry {e}"
            )));
        }
    }
    for j in 0..n {
        if cayley[0][j] != j {
            return Err(RingError::NotAGroup(format!(
                "index 0 is not a left identity: 0*{j} = {}",
                cayley[0][j]
            )));
        }
    }
    for (i, row) in cayley.iter().enumerate() {
        if row[0] != i {
            return Err(RingError::NotAGroup(format!(
                "index 0 is not a right identity: {i}*0 = {}",
                row[0]
            )));
        }
    }
    for (i, row) in cayley.iter().enumerate() {
        let mut seen = vec![false; n];
        for &e in row {
            if seen[e] {
                return Err(RingError::NotAGroup(format!("row {i} is not a permutation")));
            }
            seen[e] = true;
        }
    }
    for j in 0..n {
        let mut seen = vec![false; n];
        for row in cayley {
            if seen[row[j]] {
                return Err(RingError::NotAGroup(format!(
                    "column {j} is not a permutation"
                )));
            }
            seen[row[j]] = true;
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]] {
                    return Err(RingError::NotAGroup(format!(
                        "associativity fails at triple ({a},{b},{c})"
                    )));
                }
            }
        }
    }
    Ok(())
}

impl Ring for StructureConstantAlgebra {
    fn size(&self) -> usize {
        self.size
    }

    fn one(&self) -> usize {
        self.unit_index
    }

    fn add(&self, a: usize, b: usize) -> usize {
        match &self.cache {
            Some(c) => c.add(a, b),
            None => self.add_digitwise(a, b),
        }
    }

    fn neg(&self, a: usize) -> usize {
        match &self.cache {
            Some(c) => c.neg(a),
            None => self.neg_digitwise(a),
        }
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        match &self.cache {
            Some(c) => c.mul(a, b),
            None => self.mul_bilinear(a, b),
        }
    }

    fn descriptor(&self) -> String {
        self.descriptor.clone()
    }

    fn coords(&self, x: usize) -> Coords {
        Coords::Vector(self.digits(x).into_iter().map(u64::from).collect())
    }

    fn decode(&self, coords: &Coords) -> Option<usize> {
        match coords {
            Coords::Vector(v) if v.len() == self.dim => {
                let q = self.field.order() as u64;
                if v.iter().any(|&c| c >= q) {
                    return None;
                }
                let digits: Vec<usize> = v.iter().map(|&c| c as usize).collect();
                Some(radix_index(&digits, self.field.order()))
            }
            _ => None,
        }
    }

    fn enumeration_bound(&self) -> usize {
        self.bound
    }

    fn commute_generators(&self) -> Option<Vec<usize>> {
        Some((0..self.dim).map(|i| self.basis_index(i)).collect())
    }

    fn fq_view(&self) -> Option<FqView<'_>> {
        Some(FqView {
            field: &self.field,
            dim: self.dim,
        })
    }

    fn matrix_shape(&self) -> Option<MatrixShape> {
        self.shape
    }

    fn as_structure_constants(&self) -> Option<&StructureConstantAlgebra> {
        Some(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(q: u64) -> FiniteField {
        match q {
            2 => FiniteField::new(2, 1).unwrap(),
            3 => FiniteField::new(3, 1).unwrap(),
            4 => FiniteField::new(2, 2).unwrap(),
            _ => panic!("unsupported test field"),
        }
    }

    #[test]
    fn matrix_algebra_sizes() {
        assert_eq!(
            StructureConstantAlgebra::matrix_algebra(f(2), 2, None)
                .unwrap()
                .size(),
            16
        );
        assert_eq!(
            StructureConstantAlgebra::matrix_algebra(f(3), 2, None)
                .unwrap()
                .size(),
            81
        );
    }

    #[test]
    fn one_by_one_matrix_algebra_is_the_field() {
        let a = StructureConstantAlgebra::matrix_algebra(f(2), 1, None).unwrap();
        assert_eq!(a.size(), 2);
        assert_eq!(a.one(), 1);
        assert_eq!(a.mul(1, 1), 1);
    }

    #[test]
    fn upper_triangular_sizes() {
        assert_eq!(
            StructureConstantAlgebra::upper_triangular(f(2), 2, None)
                .unwrap()
                .size(),
            8
        );
        assert_eq!(
            StructureConstantAlgebra::upper_triangular(f(3), 2, None)
                .unwrap()
                .size(),
            27
        );
        assert_eq!(
            StructureConstantAlgebra::upper_triangular(f(2), 3, None)
                .unwrap()
                .size(),
            64
        );
    }

    #[test]
    fn matrix_unit_products() {
        // In M_2: E_11*E_12 = E_12, E_12*E_11 = 0, E_12*E_21 = E_11.
        let a = StructureConstantAlgebra::matrix_algebra(f(2), 2, None).unwrap();
        let e11 = a.basis_index(0);
        let e12 = a.basis_index(1);
        let e21 = a.basis_index(2);
        assert_eq!(a.mul(e11, e12), e12);
        assert_eq!(a.mul(e12, e11), 0);
        assert_eq!(a.mul(e12, e21), e11);
        assert_eq!(a.one(), e11 + a.basis_index(3));
    }

    #[test]
    fn cached_and_bilinear_products_agree() {
        for alg in [
            StructureConstantAlgebra::matrix_algebra(f(2), 2, None).unwrap(),
            StructureConstantAlgebra::upper_triangular(f(3), 2, None).unwrap(),
            StructureConstantAlgebra::matrix_algebra(f(4), 2, None).unwrap(),
        ] {
            for a in 0..alg.size() {
                for b in 0..alg.size() {
                    assert_eq!(alg.mul(a, b), alg.mul_bilinear(a, b));
                }
            }
        }
    }

    #[test]
    fn cyclic_group_algebra() {
        let c3 = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
        let a = StructureConstantAlgebra::group_algebra(f(2), &c3, None).unwrap();
        assert_eq!(a.size(), 8);
        // g * g^2 = identity basis element.
        assert_eq!(a.mul(a.basis_index(1), a.basis_index(2)), a.basis_index(0));

        let c2 = vec![vec![0, 1], vec![1, 0]];
        let b = StructureConstantAlgebra::group_algebra(f(3), &c2, None).unwrap();
        assert_eq!(b.size(), 9);
    }

    #[test]
    fn non_associative_table_rejected() {
        // Latin square with identity at 0 that is not a group (n=5 loop).
        let table = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = StructureConstantAlgebra::group_algebra(f(2), &table, None).unwrap_err();
        assert!(matches!(err, RingError::NotAGroup(_)), "{err:?}");
    }

    #[test]
    fn corrupted_structure_constants_fail_validation() {
        let a = StructureConstantAlgebra::matrix_algebra(f(2), 2, None).unwrap();
        let dim = a.dim();
        let mut table = vec![0u64; dim * dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                for &(k, c) in a.basis_product(i, j) {
                    table[(i * dim + j) * dim + k as usize] = c as u64;
                }
            }
        }
        table[0] ^= 1;
        let unit: Vec<u64> = a.unit_coords().iter().map(|&c| c as u64).collect();
        let corrupt = StructureConstantAlgebra::new(f(2), dim, &table, &unit, None).unwrap();
        assert!(matches!(
            corrupt.validate_axioms(),
            Err(RingError::InvalidAlgebra(_))
        ));
    }

    #[test]
    fn size_bound() {
        let err = StructureConstantAlgebra::matrix_algebra(f(2), 5, None).unwrap_err();
        assert!(matches!(err, RingError::SizeExceeded { .. }));
    }

    #[test]
    fn index_round_trip() {
        let a = StructureConstantAlgebra::matrix_algebra(f(3), 2, None).unwrap();
        for x in 0..a.size() {
            let c = a.coords(x);
            assert_eq!(a.decode(&c), Some(x));
        }
    }
}
