"""Builders and MDS predicates for the GRS-derived code families.

Families covered: modified GRS (one generator entry changed), extended
modified GRS, the row-removed subcode families (c/d), twisted GRS with a
constant-coefficient or top-degree hook, Roth-Lempel, and column-twisted
codes.  The MDS predicates evaluate subset conditions on the evaluation
points exactly, without building generator matrices.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations

from .gf import Field, INF, proj_inv
from . import linalg
from .linalg import Matrix
from .codes import LinearCode

TWIST_ZERO = "zero"
TWIST_TOP = "top"


def _check_distinct_finite(field: Field, alpha):
    for a in alpha:
        field.check(a)
    if len(set(alpha)) != len(alpha):
        raise ValueError("evaluation points must be distinct")


def _check_nonzero(field: Field, v):
    for x in v:
        field.check(x)
        if x == 0:
            raise ValueError("multipliers must be nonzero")


@dataclass(frozen=True)
class MgrsParams:
    """Modified GRS: n-1 finite evaluation points plus one special column
    whose row-0 entry is 1 and row-t entry is eta."""

    field: Field
    alpha: tuple      # n-1 distinct finite points
    v: tuple          # n nonzero multipliers
    eta: int
    t: int
    k: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(self.alpha))
        object.__setattr__(self, "v", tuple(self.v))
        if len(self.v) != len(self.alpha) + 1:
            raise ValueError("need len(v) = len(alpha) + 1")
        _check_distinct_finite(self.field, self.alpha)
        _check_nonzero(self.field, self.v)
        self.field.check(self.eta)
        if not 1 <= self.t <= self.k - 1:
            raise ValueError("need 1 <= t <= k-1")
        if self.k > self.n:
            raise ValueError("k > n")

    @property
    def n(self) -> int:
        return len(self.v)


@dataclass(frozen=True)
class EmgrsParams:
    """Extended modified GRS: MgrsParams plus a top-coefficient column."""

    field: Field
    alpha: tuple
    v: tuple          # n nonzero multipliers
    v_ext: int        # multiplier of the appended top-coefficient column
    eta: int
    t: int
    k: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(self.alpha))
        object.__setattr__(self, "v", tuple(self.v))
        self.base()  # validates the shared fields
        self.field.check(self.v_ext)
        if self.v_ext == 0:
            raise ValueError("multipliers must be nonzero")

    def base(self) -> MgrsParams:
        return MgrsParams(self.field, self.alpha, self.v, self.eta, self.t, self.k)

    @property
    def n(self) -> int:
        return len(self.v) + 1


@dataclass(frozen=True)
class TgrsParams:
    """Twisted GRS of length n+1 and dimension k: n evaluation points and a
    degree-k twist hooked to the constant (zero) or top-degree coefficient."""

    field: Field
    alpha: tuple      # n distinct finite points
    v: tuple          # n+1 nonzero multipliers
    lam: int
    hook: str
    k: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(self.alpha))
        object.__setattr__(self, "v", tuple(self.v))
        if self.hook not in (TWIST_ZERO, TWIST_TOP):
            raise ValueError(f"unknown hook {self.hook!r}")
        if len(self.v) != len(self.alpha) + 1:
            raise ValueError("need len(v) = len(alpha) + 1")
        _check_distinct_finite(self.field, self.alpha)
        _check_nonzero(self.field, self.v)
        self.field.check(self.lam)
        if self.lam == 0:
            raise ValueError("twist coefficient must be nonzero")
        if not 1 <= self.k <= len(self.alpha):
            raise ValueError("need 1 <= k <= n")

    @property
    def n(self) -> int:
        return len(self.alpha) + 1


@dataclass(frozen=True)
class RothLempelParams:
    """Roth-Lempel code: a Vandermonde block with two appended columns."""

    field: Field
    a: tuple          # n-2 distinct points
    delta: int
    k: int

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        _check_distinct_finite(self.field, self.a)
        self.field.check(self.delta)
        if self.k < 3:
            raise ValueError("need k >= 3")
        if not self.k + 3 <= self.n <= self.field.q + 2:
            raise ValueError("need k+3 <= n <= q+2")

    @property
    def n(self) -> int:
        return len(self.a) + 2


@dataclass(frozen=True)
class PolyCoeffs:
    """Coefficients of P(x) = prod(x - alpha_j) and of every quotient
    P(x)/(x - alpha_h), ascending by degree."""

    product: tuple            # k+1 coefficients of P
    quotients: tuple          # k rows of k coefficients each


# ---------------- generator builders ----------------

def _vandermonde_cols(field: Field, alpha, k):
    cols = []
    for a in alpha:
        col = []
        x = 1
        for _ in range(k):
            col.append(x)
            x = field.mul(x, a)
        cols.append(col)
    return cols


def _cols_to_code(field: Field, cols, k, check=True) -> LinearCode:
    rows = [[c[i] for c in cols] for i in range(k)]
    return LinearCode(field, Matrix(field, rows, cols=len(cols), check=False), check=check)


def _mgrs_cols(field, alpha, v, eta, t, k):
    cols = _vandermonde_cols(field, alpha, k)
    special = [0] * k
    special[0] = 1
    special[t] = eta
    cols.append(special)
    return [[field.mul(vj, e) for e in col] for vj, col in zip(v, cols)]


def mgrs_generator(p: MgrsParams) -> LinearCode:
    F = p.field
    return _cols_to_code(F, _mgrs_cols(F, p.alpha, p.v, p.eta, p.t, p.k), p.k)


def emgrs_generator(p: EmgrsParams) -> LinearCode:
    F = p.field
    cols = _mgrs_cols(F, p.alpha, p.v, p.eta, p.t, p.k)
    ext = [0] * p.k
    ext[p.k - 1] = p.v_ext
    cols.append(ext)
    return _cols_to_code(F, cols, p.k)


def c_code_generator(field: Field, alpha, t: int, k: int) -> LinearCode:
    """Dimension-k subcode of a GRS code of dimension k+1: Vandermonde rows
    with exponent t removed, exponents running over {0..k} minus {t}."""
    alpha = tuple(alpha)
    _check_distinct_finite(field, alpha)
    if not 1 <= t < k - 1:
        raise ValueError("need 1 <= t < k-1")
    if k > len(alpha):
        raise ValueError("k > n")
    cols = _vandermonde_cols(field, alpha, k + 1)
    cols = [[e for i, e in enumerate(col) if i != t] for col in cols]
    return _cols_to_code(field, cols, k)


def d_code_generator(field: Field, alpha, t: int, k: int) -> LinearCode:
    """Vandermonde block on n-1 points with a unit column at row t appended;
    shortening at the last position recovers the c-code family."""
    alpha = tuple(alpha)
    _check_distinct_finite(field, alpha)
    if not 1 <= t < k - 1:
        raise ValueError("need 1 <= t < k-1")
    if k > len(alpha) + 1:
        raise ValueError("k > n")
    cols = _vandermonde_cols(field, alpha, k)
    unit = [0] * k
    unit[t] = 1
    cols.append(unit)
    return _cols_to_code(field, cols, k)


def tgrs_generator(p: TgrsParams) -> LinearCode:
    """Length n+1 generator with the twist lam * x^k folded into row 0
    (zero hook) or row k-1 (top-degree hook); the final column is the unit
    evaluation of the hooked row."""
    F = p.field
    k = p.k
    cols = _vandermonde_cols(F, p.alpha, k)
    hook_row = 0 if p.hook == TWIST_ZERO else k - 1
    for a, col in zip(p.alpha, cols):
        col[hook_row] = F.add(col[hook_row], F.mul(p.lam, F.pow(a, k)))
    last = [0] * k
    last[hook_row] = 1
    cols.append(last)
    cols = [[F.mul(vj, e) for e in col] for vj, col in zip(p.v, cols)]
    return _cols_to_code(F, cols, k)


def tgrs_dual_parity(p: TgrsParams) -> Matrix:
    """Closed-form parity-check matrix of the twisted code, built from the
    standard dual multipliers of the evaluation points.

    If the closed form's denominator vanishes, falls back to the kernel of
    the generator (with a warning); the dual code always exists even when
    the closed form does not.
    """
    F = p.field
    alpha = p.alpha
    n = len(alpha)
    k = p.k
    rows = n - k + 1
    if rows < 2:
        raise ValueError("parity-check form needs k <= n-1")
    u = []
    for i, ai in enumerate(alpha):
        prod = 1
        for j, aj in enumerate(alpha):
            if j != i:
                prod = F.mul(prod, F.sub(ai, aj))
        u.append(F.inv(prod))

    s_top = 0
    for ui, ai in zip(u, alpha):
        s_top = F.add(s_top, F.mul(ui, F.pow(ai, n - 1)))

    if p.hook == TWIST_ZERO:
        if any(a == 0 for a in alpha):
            raise ValueError("zero-hook closed form needs nonzero points")
        s_inv = 0
        for ui, ai in zip(u, alpha):
            s_inv = F.add(s_inv, F.mul(ui, F.inv(ai)))
        if s_inv == 0:
            return _kernel_fallback(p)
        w = [F.mul(ui, F.inv(F.mul(ai, vi)))
             for ui, ai, vi in zip(u, alpha, p.v)]
        w_last = F.mul(F.neg(s_inv), F.inv(p.v[n]))
        eta = F.mul(p.lam, F.mul(s_top, F.inv(s_inv)))
        last = [0] * rows
        last[0] = 1
        last[rows - 1] = eta
    else:
        denom = F.mul(p.lam, s_top)
        if denom == 0:
            return _kernel_fallback(p)
        s_mix = 0
        for ui, ai in zip(u, alpha):
            term = F.add(F.pow(ai, n - 1), F.mul(p.lam, F.pow(ai, n)))
            s_mix = F.add(s_mix, F.mul(ui, term))
        w = [F.mul(ui, F.inv(vi)) for ui, vi in zip(u, p.v)]
        w_last = F.mul(F.neg(denom), F.inv(p.v[n]))
        delta = F.mul(s_mix, F.inv(denom))
        last = [0] * rows
        last[rows - 2] = 1
        last[rows - 1] = delta

    cols = _vandermonde_cols(F, alpha, rows)
    cols.append(last)
    mult = w + [w_last]
    cols = [[F.mul(m, e) for e in col] for m, col in zip(mult, cols)]
    out = [[cols[j][i] for j in range(n + 1)] for i in range(rows)]
    return Matrix(F, out, cols=n + 1, check=False)


def _kernel_fallback(p: TgrsParams) -> Matrix:
    warnings.warn("closed-form parity check degenerate; returning a kernel basis",
                  RuntimeWarning, stacklevel=3)
    return linalg.right_kernel(tgrs_generator(p).gen)


def roth_lempel_generator(p: RothLempelParams) -> LinearCode:
    """Vandermonde block on n-2 points plus the two columns e_{k-1} and
    e_{k-2} + delta * e_{k-1}."""
    F = p.field
    k = p.k
    cols = _vandermonde_cols(F, p.a, k)
    pen = [0] * k
    pen[k - 1] = 1
    last = [0] * k
    last[k - 2] = 1
    last[k - 1] = p.delta
    cols.extend([pen, last])
    return _cols_to_code(F, cols, k)


def col_twisted_generator(field: Field, a, b: int, c: int, lam: int, k: int,
                          extended: bool = False) -> LinearCode:
    """Vandermonde block on a_1..a_{n-1} plus one twisted column evaluating
    b^i - lam * c^i; the extended variant appends a top-coefficient column."""
    a = tuple(a)
    _check_distinct_finite(field, a + (b, c))
    field.check(lam)
    if k > len(a) + 1:
        raise ValueError("k > n")
    F = field
    cols = _vandermonde_cols(F, a, k)
    twist = []
    xb, xc = 1, 1
    for _ in range(k):
        twist.append(F.sub(xb, F.mul(lam, xc)))
        xb = F.mul(xb, b)
        xc = F.mul(xc, c)
    cols.append(twist)
    if extended:
        ext = [0] * k
        ext[k - 1] = 1
        cols.append(ext)
    return _cols_to_code(F, cols, k)


# ---------------- MDS predicates ----------------
#
# A modified-GRS minor that uses the special column degenerates exactly
# when eta * pi_t(S) = (-1)^(m+1) * prod(S) for the (size-m) subset S of
# evaluation points it meets, where pi_t(S) is the coefficient of x^t in
# prod_{a in S}(x - a).  The MDS predicates sweep all subsets of the
# relevant sizes with early exit.

def _poly_from_roots(F: Field, roots):
    coeffs = [1]
    for a in roots:
        na = F.neg(a)
        nxt = [F.mul(coeffs[0], na)]
        for i in range(1, len(coeffs)):
            nxt.append(F.add(coeffs[i - 1], F.mul(coeffs[i], na)))
        nxt.append(1)
        coeffs = nxt
    return coeffs


def _general_condition_holds(F: Field, alpha, m, t, eta) -> bool:
    sign = F.neg(1) if (m + 1) % 2 else 1
    for sub in combinations(alpha, m):
        coeffs = _poly_from_roots(F, sub)
        pi_t = coeffs[t] if t <= m else 0
        prod = 1
        for a in sub:
            prod = F.mul(prod, a)
        if F.mul(eta, pi_t) == F.mul(sign, prod):
            return False
    return True


def _reciprocal_condition_holds(F: Field, alpha, m, eta) -> bool:
    # t = 1 fast path: 1/eta != sum of reciprocals over every m-subset,
    # in projective arithmetic (1/0 = inf, inf + a = inf).
    target = proj_inv(F, eta)
    rest = [a for a in alpha if a != 0]
    has_zero = len(rest) != len(alpha)
    if has_zero and len(rest) >= m - 1 and target is INF:
        return False
    if target is INF or m > len(rest):
        return True
    inv = [F.inv(a) for a in rest]

    def walk(start, depth, acc):
        if depth == m:
            return acc != target
        for i in range(start, len(inv) - (m - depth) + 1):
            if not walk(i + 1, depth + 1, F.add(acc, inv[i])):
                return False
        return True

    return walk(0, 0, 0)


def _product_condition_holds(F: Field, alpha, m, eta) -> bool:
    # t = m fast path (pi_m = 1): eta != (-1)^(m+1) * prod over m-subsets.
    sign = F.neg(1) if (m + 1) % 2 else 1
    target = F.mul(sign, eta)
    vals = list(alpha)
    if m > len(vals):
        return True

    def walk(start, depth, acc):
        if depth == m:
            return acc != target
        for i in range(start, len(vals) - (m - depth) + 1):
            if not walk(i + 1, depth + 1, F.mul(acc, vals[i])):
                return False
        return True

    return walk(0, 0, 1)


def _subset_check(F: Field, alpha, m, t, eta) -> bool:
    if m <= 0:
        return True
    if t == 1:
        return _reciprocal_condition_holds(F, alpha, m, eta)
    if t == m:
        return _product_condition_holds(F, alpha, m, eta)
    return _general_condition_holds(F, alpha, m, t, eta)


def mgrs_is_mds(p: MgrsParams) -> bool:
    """MDS iff eta * pi_t(S) != (-1)^k * prod(S) for every (k-1)-subset S
    of the evaluation points."""
    return _subset_check(p.field, p.alpha, p.k - 1, p.t, p.eta)


def emgrs_is_mds(p: EmgrsParams) -> bool:
    """MDS iff the modified-GRS subset condition holds at sizes k-1 and k-2
    (the second size accounts for the appended top-coefficient column)."""
    return (_subset_check(p.field, p.alpha, p.k - 1, p.t, p.eta)
            and _subset_check(p.field, p.alpha, p.k - 2, p.t, p.eta))


# ---------------- product/quotient coefficient bookkeeping ----------------

def sigma_coeffs(field: Field, alpha) -> PolyCoeffs:
    """Coefficients of P(x) = prod(x - alpha_j) and of all quotients
    f_h = P / (x - alpha_h).

    Quotients at nonzero roots use the coefficient ladder
    sigma_{h,s} = (sigma_{P,s} - sigma_{h,s-1}) / (-alpha_h) with
    sigma_{h,k-1} = 1; a zero root falls back to synthetic division.
    Every quotient is cross-checked by re-multiplying with its root factor.
    """
    alpha = tuple(alpha)
    _check_distinct_finite(field, alpha)
    F = field
    k = len(alpha)
    p_coeffs = _poly_from_roots(F, alpha)

    quotients = []
    for ah in alpha:
        if ah != 0:
            neg_inv = F.neg(F.inv(ah))
            sig = [0] * k
            sig[k - 1] = 1
            prev = 0
            for s in range(k - 1):
                prev = F.mul(F.sub(p_coeffs[s], prev), neg_inv)
                sig[s] = prev
        else:
            sig = _divide_out(F, p_coeffs, ah)
        # (x - ah) * f_h must reproduce P exactly
        na = F.neg(ah)
        check = [F.mul(sig[0], na)]
        for i in range(1, k):
            check.append(F.add(sig[i - 1], F.mul(sig[i], na)))
        check.append(sig[k - 1])
        if check != list(p_coeffs):
            raise AssertionError("quotient coefficients fail the product check")
        quotients.append(tuple(sig))
    return PolyCoeffs(product=tuple(p_coeffs), quotients=tuple(quotients))


def _divide_out(F: Field, p_coeffs, root):
    # synthetic division of P by (x - root); the remainder must vanish
    k = len(p_coeffs) - 1
    out = [0] * k
    carry = p_coeffs[k]
    for i in range(k - 1, -1, -1):
        out[i] = carry
        carry = F.add(p_coeffs[i], F.mul(root, carry))
    if carry != 0:
        raise AssertionError("nonzero remainder dividing out a root")
    return out
