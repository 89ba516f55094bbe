use super::structure::{add_into, Tensor2};
use super::{CalculusError, FirstOrderCalculus, Provenance, StabilityCertificate, TangentSpace};
use crate::field::{Field, SpanBuilder};
use crate::hopf::{HopfElement, Side};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Stability,
    Leibniz,
    Bracket,
    Jacobi,
    Ybe,
    Bimodule,
    Surjectivity,
    Inner,
}

impl Check {
    pub const ALL: [Check; 8] =
        [Check::Stability, Check::Leibniz, Check::Bracket, Check::Jacobi, Check::Ybe, Check::Bimodule, Check::Surjectivity, Check::Inner];

    pub fn name(self) -> &'static str {
        match self {
            Check::Stability => "stability",
            Check::Leibniz => "leibniz",
            Check::Bracket => "bracket",
            Check::Jacobi => "jacobi",
            Check::Ybe => "ybe",
            Check::Bimodule => "bimodule",
            Check::Surjectivity => "surjectivity",
            Check::Inner => "inner",
        }
    }

    pub fn parse(s: &str) -> Option<Check> {
        Check::ALL.into_iter().find(|c| c.name() == s.trim())
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail(String),
    Skipped(String),
}

impl CheckStatus {
    pub fn label(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail(_) => "fail",
            CheckStatus::Skipped(_) => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    /// In the order the checks were requested.
    pub outcomes: Vec<(Check, CheckStatus)>,
    /// A basis triple where the ordinary (unbraided) Leibniz rule fails.
    pub unbraided_leibniz_witness: Option<String>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|(_, s)| !matches!(s, CheckStatus::Fail(_)))
    }

    pub fn status(&self, check: Check) -> Option<&CheckStatus> {
        self.outcomes.iter().find(|(c, _)| *c == check).map(|(_, s)| s)
    }
}

/// Runs the checks on a tangent space; when it is unstable only the
/// stability check can run and everything else is skipped.
pub fn verify_tangent<F: Field>(t: &TangentSpace<F>, checks: &[Check]) -> Result<VerificationReport, CalculusError> {
    if let StabilityCertificate::Unstable(why) = t.certificate() {
        let outcomes = checks
            .iter()
            .map(|&c| {
                let s = if c == Check::Stability {
                    CheckStatus::Fail(why.clone())
                } else {
                    CheckStatus::Skipped("tangent space is not stable".into())
                };
                (c, s)
            })
            .collect();
        return Ok(VerificationReport { outcomes, unbraided_leibniz_witness: None });
    }
    verify_calculus(&FirstOrderCalculus::new(t.clone())?, checks)
}

pub fn verify_calculus<F: Field>(c: &FirstOrderCalculus<F>, checks: &[Check]) -> Result<VerificationReport, CalculusError> {
    let v = Verifier::new(c);
    let mut outcomes = Vec::new();
    let mut witness = None;
    for &check in checks {
        let status = match check {
            Check::Stability => match c.tangent().certificate() {
                StabilityCertificate::Stable => CheckStatus::Pass,
                StabilityCertificate::Unstable(w) => CheckStatus::Fail(w.clone()),
            },
            Check::Leibniz => {
                let (s, w) = v.leibniz()?;
                witness = w;
                s
            }
            Check::Bracket => v.bracket()?,
            Check::Jacobi => v.jacobi(),
            Check::Ybe => v.ybe()?,
            Check::Bimodule => v.bimodule(),
            Check::Surjectivity => v.surjectivity(),
            Check::Inner => v.inner()?,
        };
        outcomes.push((check, status));
    }
    Ok(VerificationReport { outcomes, unbraided_leibniz_witness: witness })
}

fn fail_or_pass(r: Result<(), String>) -> CheckStatus {
    match r {
        Ok(()) => CheckStatus::Pass,
        Err(w) => CheckStatus::Fail(w),
    }
}

type Sparse<F> = BTreeMap<usize, F>;
type Table<F> = Vec<Vec<Sparse<F>>>;

struct Verifier<'a, F> {
    c: &'a FirstOrderCalculus<F>,
    n: usize,
    k: usize,
    a_side: Side,
    h_side: Side,
}

impl<'a, F: Field> Verifier<'a, F> {
    fn new(c: &'a FirstOrderCalculus<F>) -> Self {
        Verifier { c, n: c.pair().dim(), k: c.dim(), a_side: c.tangent().a_side(), h_side: c.tangent().h_side() }
    }

    fn name_a(&self, u: usize) -> String {
        self.c.pair().basis_name(self.a_side, u)
    }

    fn name_h(&self, h: usize) -> String {
        self.c.pair().basis_name(self.h_side, h)
    }

    fn render(&self, x: &HopfElement<F>) -> String {
        self.c.pair().render(x)
    }

    fn mul(&self, x: &HopfElement<F>, y: &HopfElement<F>) -> Result<HopfElement<F>, CalculusError> {
        Ok(self.c.pair().product(x, y)?)
    }

    fn basis_a(&self, u: usize) -> HopfElement<F> {
        HopfElement::basis(self.a_side, u)
    }

    /// Braided Leibniz rule on all basis triples, plus the first triple
    /// where the unbraided rule fails.
    fn leibniz(&self) -> Result<(CheckStatus, Option<String>), CalculusError> {
        let (n, k) = (self.n, self.k);
        let pair = self.c.pair();
        let basis = self.c.tangent().basis();
        let partial: Vec<Vec<HopfElement<F>>> =
            basis.iter().map(|x| (0..n).map(|v| self.c.partial_unchecked(x, &self.basis_a(v))).collect()).collect();
        let mut witness = None;
        for u in 0..n {
            let ea = self.basis_a(u);
            let delta = pair.coproduct_basis(self.a_side, u);
            for v in 0..n {
                let eb = self.basis_a(v);
                let ab = pair.product_basis(self.a_side, u, v);
                for i in 0..k {
                    let lhs = match ab {
                        Some(r) => partial[i][r].clone(),
                        None => HopfElement::zero(self.a_side),
                    };
                    let first = self.mul(&partial[i][u], &eb)?;
                    let mut rhs = first.clone();
                    for &(p, q) in &delta {
                        for (l, c) in self.c.a_act_row(p, i).iter().enumerate() {
                            if c.is_zero() {
                                continue;
                            }
                            let term = self.mul(&self.basis_a(q), &partial[l][v])?;
                            rhs.add_scaled(&term, c);
                        }
                    }
                    if lhs != rhs {
                        let msg = format!(
                            "a={}, b={}, x=x{i}: d_x(ab) = {} but braided rule gives {}",
                            self.name_a(u),
                            self.name_a(v),
                            self.render(&lhs),
                            self.render(&rhs)
                        );
                        return Ok((CheckStatus::Fail(msg), witness));
                    }
                    if witness.is_none() {
                        let naive = first.add(&self.mul(&ea, &partial[i][v])?);
                        if naive != lhs {
                            witness = Some(format!(
                                "a={}, b={}, x=x{i}: d_x(ab) = {} but (d_x a)b + a(d_x b) = {}",
                                self.name_a(u),
                                self.name_a(v),
                                self.render(&lhs),
                                self.render(&naive)
                            ));
                        }
                    }
                }
            }
        }
        Ok((CheckStatus::Pass, witness))
    }

    /// Bracket lands in L and agrees with xy - .Psi(x (x) y) and with
    /// [x(1), y] x(2) = xy.
    fn bracket(&self) -> Result<CheckStatus, CalculusError> {
        let pair = self.c.pair();
        let side = self.c.tangent().side();
        let basis = self.c.tangent().basis();
        let k = self.k;
        for i in 0..k {
            for j in 0..k {
                let (x, y) = (&basis[i], &basis[j]);
                let direct = pair.double_act_h(side, x, y)?;
                let Some(coords) = self.c.tangent().coords(&direct) else {
                    return Ok(CheckStatus::Fail(format!("[x{i}, x{j}] = {} is not in L", self.render(&direct))));
                };
                if coords.as_slice() != self.c.bracket_coords(i, j) {
                    return Ok(CheckStatus::Fail(format!("[x{i}, x{j}] table disagrees with x(1) y S x(2)")));
                }
                let xy = self.mul(x, y)?;
                let mut via_psi = xy.clone();
                for (&(p, q), c) in self.c.braid_coords(i, j) {
                    via_psi.add_scaled(&self.mul(&basis[p], &basis[q])?, &-c.clone());
                }
                if via_psi != direct {
                    return Ok(CheckStatus::Fail(format!(
                        "x=x{i}, y=x{j}: [x,y] = {} but xy - .Psi(x (x) y) = {}",
                        self.render(&direct),
                        self.render(&via_psi)
                    )));
                }
                let mut legs = HopfElement::zero(self.h_side);
                for (h, c) in x.terms() {
                    for (u, v) in pair.coproduct_basis(self.h_side, h) {
                        let ad = pair.double_act_h(side, &HopfElement::basis(self.h_side, u), y)?;
                        legs.add_scaled(&self.mul(&ad, &HopfElement::basis(self.h_side, v))?, c);
                    }
                }
                if legs != xy {
                    return Ok(CheckStatus::Fail(format!(
                        "x=x{i}, y=x{j}: [x(1),y]x(2) = {} but xy = {}",
                        self.render(&legs),
                        self.render(&xy)
                    )));
                }
            }
        }
        Ok(CheckStatus::Pass)
    }

    fn unit_vec(&self, i: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.k];
        v[i] = F::one();
        v
    }

    /// [x,[y,z]] = [[x,y],z] + [Psi1, [Psi2, z]].
    fn jacobi(&self) -> CheckStatus {
        let k = self.k;
        for i in 0..k {
            for j in 0..k {
                let xy = self.c.bracket_coords(i, j).to_vec();
                for l in 0..k {
                    let lhs = self.c.bracket_bilinear(&self.unit_vec(i), self.c.bracket_coords(j, l));
                    let mut rhs = self.c.bracket_bilinear(&xy, &self.unit_vec(l));
                    for (&(p, q), c) in self.c.braid_coords(i, j) {
                        let t = self.c.bracket_bilinear(&self.unit_vec(p), self.c.bracket_coords(q, l));
                        for (r, v) in rhs.iter_mut().zip(t) {
                            *r = r.clone() + c.clone() * v;
                        }
                    }
                    if lhs != rhs {
                        return CheckStatus::Fail(format!("x=x{i}, y=x{j}, z=x{l}: braided Jacobi identity fails"));
                    }
                }
            }
        }
        CheckStatus::Pass
    }

    fn apply_psi_ll(&self, t: &Tensor2<F>, inverse: bool) -> Tensor2<F> {
        let mut out = Tensor2::new();
        for (&(i, j), c) in t {
            let m = if inverse { self.c.braid_inv_coords(i, j) } else { self.c.braid_coords(i, j) };
            for (&key, d) in m {
                add_into(&mut out, key, c.clone() * d.clone());
            }
        }
        out
    }

    fn apply3(&self, t: &BTreeMap<(usize, usize, usize), F>, first: bool) -> BTreeMap<(usize, usize, usize), F> {
        let mut out = BTreeMap::new();
        for (&(i, j, l), c) in t {
            if first {
                for (&(p, q), d) in self.c.braid_coords(i, j) {
                    add_into(&mut out, (p, q, l), c.clone() * d.clone());
                }
            } else {
                for (&(p, q), d) in self.c.braid_coords(j, l) {
                    add_into(&mut out, (i, p, q), c.clone() * d.clone());
                }
            }
        }
        out
    }

    /// Psi invertibility (on L(x)L and the mixed versions), the second form
    /// Psi(x(x)y) = [x(1),y](x)x(2) - [x,y](x)1, and the braid relation.
    fn ybe(&self) -> Result<CheckStatus, CalculusError> {
        let (n, k) = (self.n, self.k);
        let pair = self.c.pair();
        let side = self.c.tangent().side();
        let basis = self.c.tangent().basis();
        for i in 0..k {
            for j in 0..k {
                let id: Tensor2<F> = [((i, j), F::one())].into_iter().collect();
                if self.apply_psi_ll(&self.apply_psi_ll(&id, true), false) != id
                    || self.apply_psi_ll(&self.apply_psi_ll(&id, false), true) != id
                {
                    return Ok(CheckStatus::Fail(format!("Psi is not inverted on x{i} (x) x{j}")));
                }
                let expanded = self.c.expand_ll(self.c.braid_coords(i, j));
                let mut second = crate::hopf::TensorElement::zero((self.h_side, self.h_side));
                for (h, c) in basis[i].terms() {
                    for (u, v) in pair.coproduct_basis(self.h_side, h) {
                        let ad = pair.double_act_h(side, &HopfElement::basis(self.h_side, u), &basis[j])?;
                        for (w, d) in ad.terms() {
                            second.add_term(w, v, c.clone() * d.clone());
                        }
                    }
                }
                let br = pair.double_act_h(side, &basis[i], &basis[j])?;
                let unit = pair.unit::<F>(self.h_side);
                for (w, d) in br.terms() {
                    for (e, f) in unit.terms() {
                        second.add_term(w, e, -(d.clone() * f.clone()));
                    }
                }
                if expanded != second {
                    return Ok(CheckStatus::Fail(format!("x=x{i}, y=x{j}: the two forms of Psi(x (x) y) differ")));
                }
            }
        }
        for i in 0..k {
            for u in 0..n {
                let mut back = Tensor2::new();
                for (&(q, l), c) in &self.c.braid_la(i, u) {
                    for (&key, d) in &self.c.braid_al_inv(q, l) {
                        add_into(&mut back, key, c.clone() * d.clone());
                    }
                }
                let id: Tensor2<F> = [((i, u), F::one())].into_iter().collect();
                if back != id {
                    return Ok(CheckStatus::Fail(format!("Psi^-1 Psi(x{i} (x) {}) is not the identity", self.name_a(u))));
                }
                let mut fwd = Tensor2::new();
                for (&(l, q), c) in &self.c.braid_al_inv(u, i) {
                    for (&key, d) in &self.c.braid_la(l, q) {
                        add_into(&mut fwd, key, c.clone() * d.clone());
                    }
                }
                let id: Tensor2<F> = [((u, i), F::one())].into_iter().collect();
                if fwd != id {
                    return Ok(CheckStatus::Fail(format!("Psi Psi^-1({} (x) x{i}) is not the identity", self.name_a(u))));
                }
            }
        }
        for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    let t: BTreeMap<_, F> = [((i, j, l), F::one())].into_iter().collect();
                    let lhs = self.apply3(&self.apply3(&self.apply3(&t, true), false), true);
                    let rhs = self.apply3(&self.apply3(&self.apply3(&t, false), true), false);
                    if lhs != rhs {
                        return Ok(CheckStatus::Fail(format!("braid relation fails on x{i} (x) x{j} (x) x{l}")));
                    }
                }
            }
        }
        Ok(CheckStatus::Pass)
    }

    fn table(&self, f: impl Fn(usize, usize, usize) -> Sparse<F>) -> Table<F> {
        let (n, dim) = (self.n, self.n * self.k);
        (0..n).map(|u| (0..dim).map(|col| f(u, col / n, col % n)).collect()).collect()
    }

    fn apply(t: &[Sparse<F>], v: &Sparse<F>) -> Sparse<F> {
        let mut out = Sparse::new();
        for (&col, c) in v {
            for (&key, d) in &t[col] {
                add_into(&mut out, key, c.clone() * d.clone());
            }
        }
        out
    }

    fn gamma_name(&self, col: usize) -> String {
        format!("{} on x{}", self.name_a(col % self.n), col / self.n)
    }

    /// Bimodule and covariance laws of Gamma = Lin(L, A), on full bases.
    fn bimodule(&self) -> CheckStatus {
        fail_or_pass(self.bimodule_inner())
    }

    fn bimodule_inner(&self) -> Result<(), String> {
        let (n, k) = (self.n, self.k);
        let dim = n * k;
        let pair = self.c.pair();
        let la = self.table(|u, l, w| self.c.left_a_basis(u, l, w));
        let ra = self.table(|u, l, w| self.c.right_a_basis(l, w, u));
        let lh = self.table(|h, l, w| self.c.left_h_basis(h, l, w));
        let rh = self.table(|h, l, w| self.c.right_h_basis(l, w, h));
        let zero = vec![Sparse::new(); dim];
        let prod_a = |u: usize, v: usize| pair.product_basis(self.a_side, u, v);
        let prod_h = |u: usize, v: usize| pair.product_basis(self.h_side, u, v);
        let unit = |col: usize| -> Sparse<F> { [(col, F::one())].into_iter().collect() };
        let check = |law: &str, a: String, b: String, lhs: &dyn Fn(&Sparse<F>) -> Sparse<F>, rhs: &dyn Fn(&Sparse<F>) -> Sparse<F>| {
            for col in 0..dim {
                let g = unit(col);
                if lhs(&g) != rhs(&g) {
                    return Err(format!("{law} fails for {a}, {b}, gamma = {}", self.gamma_name(col)));
                }
            }
            Ok(())
        };
        for u in 0..n {
            for v in 0..n {
                let (nu, nv) = (self.name_a(u), self.name_a(v));
                let luv = prod_a(u, v).map_or(&zero, |r| &la[r]);
                let ruv = prod_a(u, v).map_or(&zero, |r| &ra[r]);
                check("(ab).g = a.(b.g)", nu.clone(), nv.clone(), &|g| Self::apply(&la[u], &Self::apply(&la[v], g)), &|g| {
                    Self::apply(luv, g)
                })?;
                check("g.(ab) = (g.a).b", nu.clone(), nv.clone(), &|g| Self::apply(&ra[v], &Self::apply(&ra[u], g)), &|g| {
                    Self::apply(ruv, g)
                })?;
                check("(a.g).b = a.(g.b)", nu, nv, &|g| Self::apply(&ra[v], &Self::apply(&la[u], g)), &|g| {
                    Self::apply(&la[u], &Self::apply(&ra[v], g))
                })?;
            }
        }
        for h in 0..n {
            for g2 in 0..n {
                let (nh, ng) = (self.name_h(h), self.name_h(g2));
                let rgh = prod_h(g2, h).map_or(&zero, |r| &rh[r]);
                let lhg = prod_h(h, g2).map_or(&zero, |r| &lh[r]);
                check("(g.h).k = g.(kh)", nh.clone(), ng.clone(), &|g| Self::apply(&rh[g2], &Self::apply(&rh[h], g)), &|g| {
                    Self::apply(rgh, g)
                })?;
                check("k.(h.g) = (hk).g", nh.clone(), ng.clone(), &|g| Self::apply(&lh[g2], &Self::apply(&lh[h], g)), &|g| {
                    Self::apply(lhg, g)
                })?;
                check("(h.g).k = h.(g.k)", nh, ng, &|g| Self::apply(&rh[g2], &Self::apply(&lh[h], g)), &|g| {
                    Self::apply(&lh[h], &Self::apply(&rh[g2], g))
                })?;
            }
        }
        // Compatibility of the A-actions with the H-actions.
        for h in 0..n {
            let dh = pair.coproduct_basis(self.h_side, h);
            for u in 0..n {
                let (nh, nu) = (self.name_h(h), self.name_a(u));
                let mut t7 = Vec::new();
                let mut t8 = Vec::new();
                let mut t9 = Vec::new();
                let mut t10 = Vec::new();
                for &(h1, h2) in &dh {
                    t7.extend(self.c.a_right_by_h(u, h2).into_iter().map(|r| (r, h1)));
                    t8.extend(self.c.h_left_on_a(h2, u).into_iter().map(|r| (r, h1)));
                    t9.extend(self.c.a_right_by_h(u, h1).into_iter().map(|r| (r, h2)));
                    t10.extend(self.c.h_left_on_a(h1, u).into_iter().map(|r| (r, h2)));
                }
                let sum = |terms: &[(usize, usize)], outer: &Table<F>, inner: &Table<F>, g: &Sparse<F>| {
                    let mut acc = Sparse::new();
                    for &(r, hh) in terms {
                        for (key, c) in Self::apply(&outer[r], &Self::apply(&inner[hh], g)) {
                            add_into(&mut acc, key, c);
                        }
                    }
                    acc
                };
                check("(g.a).h = (g.h1).(a<h2)", nh.clone(), nu.clone(), &|g| Self::apply(&rh[h], &Self::apply(&ra[u], g)), &|g| {
                    sum(&t7, &ra, &rh, g)
                })?;
                check("h.(g.a) = (h1.g).(h2>a)", nh.clone(), nu.clone(), &|g| Self::apply(&lh[h], &Self::apply(&ra[u], g)), &|g| {
                    sum(&t8, &ra, &lh, g)
                })?;
                check("(a.g).h = (a<h1).(g.h2)", nh.clone(), nu.clone(), &|g| Self::apply(&rh[h], &Self::apply(&la[u], g)), &|g| {
                    sum(&t9, &la, &rh, g)
                })?;
                check("h.(a.g) = (h1>a).(h2.g)", nh, nu, &|g| Self::apply(&lh[h], &Self::apply(&la[u], g)), &|g| {
                    sum(&t10, &la, &lh, g)
                })?;
            }
        }
        // d is a derivation and is covariant.
        let d: Vec<Sparse<F>> = (0..n).map(|u| self.c.differential(&self.basis_a(u)).expect("basis element").to_sparse(n)).collect();
        for u in 0..n {
            for v in 0..n {
                let lhs = prod_a(u, v).map(|r| d[r].clone()).unwrap_or_default();
                let mut rhs = Self::apply(&ra[v], &d[u]);
                for (key, c) in Self::apply(&la[u], &d[v]) {
                    add_into(&mut rhs, key, c);
                }
                if lhs != rhs {
                    return Err(format!("d(ab) = (da).b + a.(db) fails for a={}, b={}", self.name_a(u), self.name_a(v)));
                }
            }
            for h in 0..n {
                let mut right = Sparse::new();
                for r in self.c.a_right_by_h(u, h) {
                    for (key, c) in &d[r] {
                        add_into(&mut right, *key, c.clone());
                    }
                }
                let mut left = Sparse::new();
                for r in self.c.h_left_on_a(h, u) {
                    for (key, c) in &d[r] {
                        add_into(&mut left, *key, c.clone());
                    }
                }
                if Self::apply(&rh[h], &d[u]) != right || Self::apply(&lh[h], &d[u]) != left {
                    return Err(format!("d is not covariant for a={}, h={}", self.name_a(u), self.name_h(h)));
                }
            }
        }
        Ok(())
    }

    /// Gamma = span{a db}.
    fn surjectivity(&self) -> CheckStatus {
        let (n, k) = (self.n, self.k);
        let dim = n * k;
        let mut span = SpanBuilder::new();
        if dim == 0 {
            return CheckStatus::Pass;
        }
        for b in 0..n {
            let db = self.c.differential(&self.basis_a(b)).expect("basis element");
            for a in 0..n {
                let adb = self.c.act_a_left(&self.basis_a(a), &db).expect("sides agree");
                span.insert(adb.to_sparse(n));
                if span.rank() == dim {
                    return CheckStatus::Pass;
                }
            }
        }
        CheckStatus::Fail(format!("span of a.db has dimension {} < {}", span.rank(), dim))
    }

    /// Gamma element x |-> <x, w> b.
    fn lifted(&self, w: &HopfElement<F>, b: &HopfElement<F>) -> Vec<HopfElement<F>> {
        self.c.tangent().basis().iter().map(|x| b.scale(&self.c.pair().pairing(x, w).expect("opposite sides"))).collect()
    }

    fn inner(&self) -> Result<CheckStatus, CalculusError> {
        let pair = self.c.pair();
        let n = self.n;
        match self.c.tangent().provenance() {
            Provenance::InnerI { alpha } => {
                // eps(alpha) da = a(1) alpha (x) a(2) - alpha (x) a, projected to Lin(L, A).
                let ea = pair.counit(alpha);
                for u in 0..n {
                    let a = self.basis_a(u);
                    let da = self.c.differential(&a)?;
                    let mut rhs: Vec<HopfElement<F>> = self.lifted(alpha, &a).iter().map(|v| v.scale(&-F::one())).collect();
                    for (p, q) in pair.coproduct_basis(self.a_side, u) {
                        let w = self.mul(&self.basis_a(p), alpha)?;
                        for (r, t) in rhs.iter_mut().zip(self.lifted(&w, &self.basis_a(q))) {
                            *r = r.add(&t);
                        }
                    }
                    let lhs: Vec<_> = da.values.iter().map(|v| v.scale(&ea)).collect();
                    if lhs != rhs {
                        return Ok(CheckStatus::Fail(format!("eps(alpha) da = a.(alpha(x)1) - (alpha(x)1).a fails for a={}", self.name_a(u))));
                    }
                }
                Ok(CheckStatus::Pass)
            }
            Provenance::InnerII { alpha, lambda } => {
                // lambda da = a.omega - omega.a with omega = (alpha - eps(alpha)) (x) 1.
                let unit = pair.unit::<F>(self.a_side);
                let shifted = alpha.sub(&unit.scale(&pair.counit(alpha)));
                let omega = super::GammaElement { values: self.lifted(&shifted, &unit) };
                for u in 0..n {
                    let a = self.basis_a(u);
                    let da = self.c.differential(&a)?;
                    let left = self.c.act_a_left(&a, &omega)?;
                    let right = self.c.act_a_right(&omega, &a)?;
                    let rhs: Vec<_> = left.values.iter().zip(&right.values).map(|(l, r)| l.sub(r)).collect();
                    let lhs: Vec<_> = da.values.iter().map(|v| v.scale(lambda)).collect();
                    if lhs != rhs {
                        return Ok(CheckStatus::Fail(format!("lambda da = a.omega - omega.a fails for a={}", self.name_a(u))));
                    }
                }
                Ok(CheckStatus::Pass)
            }
            Provenance::Central { c, .. } => match super::central_intertwiner_check(pair, self.c.tangent().side(), c)? {
                None => Ok(CheckStatus::Pass),
                Some(w) => Ok(CheckStatus::Fail(w)),
            },
            _ => Ok(CheckStatus::Skipped("no inner or central data".into())),
        }
    }
}
