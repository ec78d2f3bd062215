//! The local-chart Abel-map engine.
//!
//! A form is written in the chart as `f(v)/u^{ell+1} dv^du` with `f` a
//! rational function regular at the cut; a cut (one-chart effective Cartier
//! divisor) is a jet `v = c0 + c1 u + c2 u^2 + ...` with a multiplicity.
//! The pairing of a cut against a form is the closed-form sum
//! `sum_{i=1..ell} delta_{ell,i}(c)/(i-1)! * f^{(i-1)}(c0)`, where the
//! `delta_{ell,i}` are the universal symmetric-function polynomials of the
//! jet: `delta_{n,i}(c) = -(1/i) [u^n] (c1 u + c2 u^2 + ...)^i`, equally
//! computable as coefficients of a Newton-identity style determinant.
//!
//! Pole conditions on Leray residues along cuts produce the exact linear
//! constraint systems whose ranks compute `dim im(c^{l'})` and `h^1`; the
//! systems are assembled with truncated series arithmetic and solved by
//! exact elimination.
//!
//! Normalization: the analytic pairing carries a global nonzero scalar
//! (contour constants); it is dropped throughout, and every consumer works
//! with scale-invariant quantities (ranks, vanishing, coordinate ratios).
//! With the orientation fixed as `dv^du`, the derivative of the pairing
//! along the path `v = c(u) + t u^{o-1}` equals minus the `u^{-o}`
//! coefficient of the Leray residue.

use crate::field::{rank_over, Field};
use crate::graph::GraphError;
use crate::mpoly::MRat;
use crate::rat::Rat;
use crate::seifert::{SeifertData, WhForm};
use crate::series::Trunc;

/// A rational function `num(v) * prod (v - root)^{-mult}`.
#[derive(Clone, Debug)]
pub struct RationalFn<F: Field> {
    /// Numerator polynomial coefficients (in `v`).
    pub num: Vec<F>,
    /// Denominator linear factors `(root, multiplicity)` with mult `>= 1`.
    pub den: Vec<(F, i64)>,
}

impl<F: Field> RationalFn<F> {
    pub fn one() -> Self {
        RationalFn {
            num: vec![F::one()],
            den: Vec::new(),
        }
    }

    pub fn monomial(n: usize) -> Self {
        let mut num = vec![F::zero(); n + 1];
        num[n] = F::one();
        RationalFn {
            num,
            den: Vec::new(),
        }
    }

    /// Taylor expansion at `c0` modulo `eps^order`: coefficient `i` is
    /// `f^{(i)}(c0)/i!`.
    pub fn taylor_at(&self, c0: &F, order: usize) -> Result<Trunc<F>, GraphError> {
        let k = order.max(1);
        // numerator via Horner on (c0 + eps)
        let mut shift = Trunc::zero(k);
        shift.coeffs[0] = c0.clone();
        if k > 1 {
            shift.coeffs[1] = F::one();
        }
        let mut acc = Trunc::constant(self.num.last().cloned().unwrap_or_else(F::zero), k);
        for c in self.num.iter().rev().skip(1) {
            acc = acc.mul(&shift);
            acc.coeffs[0] = acc.coeffs[0].add(c);
        }
        for (root, mult) in &self.den {
            let a = c0.sub(root);
            if a.is_zero() {
                return Err(GraphError::PoleAtEvaluationPoint);
            }
            let mut base = Trunc::zero(k);
            base.coeffs[0] = a;
            if k > 1 {
                base.coeffs[1] = F::one();
            }
            acc = acc.mul(&base.powi(-mult));
        }
        Ok(acc)
    }
}

/// A 2-form `f(v)/u^{pole} dv^du` in the chart, `pole = ell + 1 >= 1`.
#[derive(Clone, Debug)]
pub struct ChartForm<F: Field> {
    pub pole: i64,
    pub f: RationalFn<F>,
}

/// A one-chart cut `v = jet(u)` with a multiplicity.
#[derive(Clone, Debug)]
pub struct Cut<F: Field> {
    pub jet: Vec<F>,
    pub mult: i64,
}

impl<F: Field> Cut<F> {
    pub fn point(q: F) -> Self {
        Cut {
            jet: vec![q],
            mult: 1,
        }
    }

    pub fn jet(coeffs: Vec<F>) -> Self {
        assert!(!coeffs.is_empty());
        Cut {
            jet: coeffs,
            mult: 1,
        }
    }
}

/// The jet tail `c1 u + c2 u^2 + ...` as a series modulo `u^{order}`.
fn jet_tail<F: Field>(jet: &[F], order: usize) -> Trunc<F> {
    let mut s = Trunc::zero(order);
    for i in 1..jet.len().min(order) {
        s.coeffs[i] = jet[i].clone();
    }
    s
}

/// Closed-form delta polynomials: `delta_{ell,i}(c)` for `i = 1..=ell`.
pub fn delta_coeffs<F: Field>(ell: u64, jet: &[F]) -> Vec<F> {
    let k = (ell + 1) as usize;
    let tail = jet_tail(jet, k);
    let mut out = Vec::with_capacity(ell as usize);
    let mut pow = tail.clone();
    for i in 1..=ell {
        let c = pow.coeff(ell as usize);
        out.push(c.div(&F::from_i64(i as i64)).neg());
        if i < ell {
            pow = pow.mul(&tail);
        }
    }
    out
}

/// Determinant of a square matrix over an exact field, by cofactor
/// expansion (matrices here are tiny).
pub fn field_det<F: Field>(m: &[Vec<F>]) -> F {
    let n = m.len();
    if n == 0 {
        return F::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = F::zero();
    for (i, row) in m.iter().enumerate() {
        if row[0].is_zero() {
            continue;
        }
        let minor: Vec<Vec<F>> = m
            .iter()
            .enumerate()
            .filter(|(r, _)| *r != i)
            .map(|(_, r)| r[1..].to_vec())
            .collect();
        let term = row[0].mul(&field_det(&minor));
        det = if i % 2 == 0 {
            det.add(&term)
        } else {
            det.sub(&term)
        };
    }
    det
}

/// The same delta polynomials through the Newton-identity determinant: the
/// `n x n` matrix with first column `i*c_i*s`, sub-diagonal bands
/// `c_{i-j+1}*s` and `-1` on the superdiagonal, where `s` stands for
/// `1/(v - c0)`; `delta_n(c) = (-1/n) det`, expanded in powers of `s`.
pub fn delta_coeffs_det<F: Field>(n: u64, jet: &[F]) -> Vec<F> {
    let nn = n as usize;
    let order = nn + 1;
    let c = |k: usize| -> F { jet.get(k).cloned().unwrap_or_else(F::zero) };
    // entries are polynomials in s, kept as truncated series of order n+1
    let mut mat: Vec<Vec<Trunc<F>>> = vec![vec![Trunc::zero(order); nn]; nn];
    for i in 1..=nn {
        for j in 1..=nn {
            let mut e = Trunc::zero(order);
            if j == 1 {
                e.coeffs[1] = F::from_i64(i as i64).mul(&c(i));
            } else if j <= i {
                e.coeffs[1] = c(i - j + 1);
            } else if j == i + 1 {
                e.coeffs[0] = F::one().neg();
            }
            mat[i - 1][j - 1] = e;
        }
    }
    let det = poly_det(&mat);
    let scale = F::from_i64(n as i64);
    (1..=nn).map(|i| det.coeff(i).div(&scale).neg()).collect()
}

fn poly_det<F: Field>(m: &[Vec<Trunc<F>>]) -> Trunc<F> {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let order = m[0][0].order();
    let mut det = Trunc::zero(order);
    for (i, row) in m.iter().enumerate() {
        if row[0].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Trunc<F>>> = m
            .iter()
            .enumerate()
            .filter(|(r, _)| *r != i)
            .map(|(_, r)| r[1..].to_vec())
            .collect();
        let term = row[0].mul(&poly_det(&minor));
        det = if i % 2 == 0 {
            det.add(&term)
        } else {
            det.sub(&term)
        };
    }
    det
}

/// The pairing coordinate `<<D(c), omega>>` of a single cut against a form:
/// `mult * sum_{i=1..ell} delta_{ell,i}(c) [eps^{i-1}] f(c0 + eps)`.
/// Forms without pole (`ell = 0`) contribute zero.
pub fn pairing_coord<F: Field>(form: &ChartForm<F>, cut: &Cut<F>) -> Result<F, GraphError> {
    let ell = form.pole - 1;
    assert!(ell >= 0, "pole order must be >= 1");
    if ell == 0 {
        return Ok(F::zero());
    }
    let taylor = form.f.taylor_at(&cut.jet[0], ell as usize)?;
    let delta = delta_coeffs(ell as u64, &cut.jet);
    let mut s = F::zero();
    for i in 1..=ell as usize {
        let d = &delta[i - 1];
        if !d.is_zero() {
            s = s.add(&d.mul(&taylor.coeff(i - 1)));
        }
    }
    Ok(s.mul(&F::from_i64(cut.mult)))
}

/// The Abel map of a divisor given by disjoint cuts, in the coordinates of
/// a form basis: sum of the single-cut pairings.
pub fn abel_map_chart<F: Field>(
    forms: &[ChartForm<F>],
    cuts: &[Cut<F>],
) -> Result<Vec<F>, GraphError> {
    forms
        .iter()
        .map(|form| {
            let mut s = F::zero();
            for cut in cuts {
                s = s.add(&pairing_coord(form, cut)?);
            }
            Ok(s)
        })
        .collect()
}

/// The `u^{-o}` coefficient of the Leray residue
/// `Res_D(omega) = (omega/dv)|_{v = c(u)} = f(c(u)) u^{-ell-1} du`,
/// i.e. `[u^{ell+1-o}] f(c(u))`.  It matches minus the `t`-derivative of
/// the pairing along `v = c(u) + t u^{o-1}`; in particular forms with
/// `ell = 0` contribute zero, the same convention as [`pairing_coord`].
pub fn tangent_coord<F: Field>(form: &ChartForm<F>, cut: &Cut<F>, o: i64) -> Result<F, GraphError> {
    assert!(o >= 1);
    let ell = form.pole - 1;
    if ell == 0 {
        return Ok(F::zero());
    }
    let idx = ell + 1 - o;
    if idx < 0 {
        return Ok(F::zero());
    }
    let order = (idx + 1) as usize;
    let taylor = form.f.taylor_at(&cut.jet[0], order)?;
    let g = taylor.compose(&jet_tail(&cut.jet, order));
    Ok(g.coeff(idx as usize))
}

/// The exact pole-freeness constraint system for `Res_{D_i}(sum a_f omega_f)`
/// over all cuts: rows are (cut, pole order), columns the forms; returns
/// `(rank, h1 = #forms - rank)`.
pub fn residue_constraint_rank<F: Field>(
    forms: &[ChartForm<F>],
    cuts: &[Cut<F>],
) -> Result<(usize, usize), GraphError> {
    if forms.is_empty() {
        return Ok((0, 0));
    }
    let lmax = forms.iter().map(|f| f.pole - 1).max().unwrap();
    let mut rows = Vec::new();
    for cut in cuts {
        if cut.jet.is_empty() {
            return Err(GraphError::InconsistentTruncation);
        }
        // g_f(u) = f(c(u)) modulo u^{lmax+1}, per form
        let order = (lmax + 1) as usize;
        let tail = jet_tail(&cut.jet, order);
        let gs: Vec<Trunc<F>> = forms
            .iter()
            .map(|form| {
                let taylor = form.f.taylor_at(&cut.jet[0], order)?;
                Ok(taylor.compose(&tail))
            })
            .collect::<Result<_, GraphError>>()?;
        for r in 1..=lmax + 1 {
            // coefficient of u^{-r} of the residue: [u^{ell+1-r}] g
            let row: Vec<F> = forms
                .iter()
                .zip(&gs)
                .map(|(form, g)| {
                    let idx = form.pole - r;
                    if idx < 0 {
                        F::zero()
                    } else {
                        g.coeff(idx as usize).mul(&F::from_i64(cut.mult))
                    }
                })
                .collect();
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    let rank = rank_over(&rows);
    Ok((rank, forms.len() - rank))
}

/// Chart data of the weighted-homogeneous form basis over a field `F`:
/// `omega_{ell,n} = u^{-ell-1} v^n prod_j (v - p_j)^{-m_j} dv^du`.
pub fn wh_chart_forms<F: Field>(
    sd: &SeifertData,
    points: &[Rat],
) -> Result<Vec<ChartForm<F>>, GraphError> {
    let basis = crate::seifert::wh_form_basis(sd)?;
    Ok(basis.iter().map(|w| wh_chart_form(w, points)).collect())
}

pub fn wh_chart_form<F: Field>(w: &WhForm, points: &[Rat]) -> ChartForm<F> {
    let mut f = RationalFn::monomial(w.n as usize);
    for (j, &m) in w.m.iter().enumerate() {
        if m > 0 {
            f.den.push((F::from_rat(&points[j]), m));
        }
    }
    ChartForm { pole: w.pole, f }
}

/// The matrix `M(c)` whose `n`-th column holds the first `m` coefficients
/// of `(sum_k c_k u^k)^{n-1}`, over the rational-function field in
/// `c_0..c_{m-1}`; its determinant is `c_1^{m(m-1)/2}`.
pub fn det_mc(m: usize) -> MRat {
    assert!(m >= 1);
    let c: Vec<MRat> = (0..m).map(MRat::var).collect();
    let series = Trunc::new(c);
    let mut mat: Vec<Vec<MRat>> = vec![Vec::with_capacity(m); m];
    let mut pow = Trunc::constant(<MRat as Field>::one(), m);
    for _col in 0..m {
        for (r, row) in mat.iter_mut().enumerate() {
            row.push(pow.coeff(r));
        }
        pow = pow.mul(&series);
    }
    field_det(&mat)
}
