"""Generic linear-code operations and the GRS evaluation-code carrier.

A LinearCode is a field plus a full-rank generator matrix.  A GrsSpec is
the pair (alpha, v) of evaluation points and nonzero column multipliers
defining a (possibly extended) generalized Reed-Solomon code; at most one
evaluation point may be the point at infinity, whose column evaluates the
top coefficient.

Coordinate positions are 1-based in every public signature and in the
file formats; internally everything is 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .gf import Field, INF, is_finite, format_element, parse_element
from . import linalg
from .linalg import Matrix


class FormatError(ValueError):
    """A malformed matrix or spec file."""


class LinearCode:
    """An [n, k] linear code given by a rank-k generator matrix."""

    __slots__ = ("field", "gen")

    def __init__(self, field: Field, gen: Matrix, check: bool = True):
        if gen.field != field:
            raise ValueError("generator field mismatch")
        if gen.rows > gen.cols:
            raise ValueError("k > n")
        if check and linalg.rank(gen) != gen.rows:
            raise ValueError("generator matrix is not full rank")
        self.field = field
        self.gen = gen

    @property
    def n(self) -> int:
        return self.gen.cols

    @property
    def k(self) -> int:
        return self.gen.rows

    def __repr__(self):
        return f"LinearCode([{self.n},{self.k}] over {self.field!r})"


@dataclass(frozen=True)
class GrsSpec:
    """Evaluation points and column multipliers of a (possibly extended) GRS code."""

    field: Field
    alpha: tuple
    v: tuple
    k: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(self.alpha))
        object.__setattr__(self, "v", tuple(self.v))
        n = len(self.alpha)
        if len(self.v) != n:
            raise ValueError("alpha and v must have the same length")
        if not 0 <= self.k <= n:
            raise ValueError("need 0 <= k <= n")
        F = self.field
        finite = [a for a in self.alpha if is_finite(a)]
        for a in finite:
            F.check(a)
        if len(set(finite)) != len(finite) or len(finite) < n - 1:
            raise ValueError("evaluation points must be pairwise distinct "
                             "with at most one point at infinity")
        for x in self.v:
            F.check(x)
            if x == 0:
                raise ValueError("column multipliers must be nonzero")

    @property
    def n(self) -> int:
        return len(self.alpha)

    @property
    def extended(self) -> bool:
        return any(a is INF for a in self.alpha)


def grs_generator(spec: GrsSpec) -> LinearCode:
    """Canonical k × n generator: row i is v_j * alpha_j^i, and the column
    at infinity is v_j * e_{k-1} (the top-coefficient evaluation)."""
    F = spec.field
    k = spec.k
    cols = []
    for a, vj in zip(spec.alpha, spec.v):
        if a is INF:
            col = [0] * k
            col[k - 1] = vj
        else:
            col = []
            x = vj
            for _ in range(k):
                col.append(x)
                x = F.mul(x, a)
        cols.append(col)
    rows = [[cols[j][i] for j in range(spec.n)] for i in range(k)]
    return LinearCode(F, Matrix(F, rows, cols=spec.n, check=False), check=False)


def grs_dual_multipliers(spec: GrsSpec) -> tuple:
    """Multipliers u with GRS(alpha, u) of dimension n-k equal to the dual
    of GRS(alpha, v): u_i = v_i^-1 * prod_{j != i} (alpha_i - alpha_j)^-1.
    All evaluation points must be finite."""
    if spec.extended:
        raise ValueError("dual multipliers need all-finite evaluation points")
    F = spec.field
    out = []
    for i, ai in enumerate(spec.alpha):
        prod = 1
        for j, aj in enumerate(spec.alpha):
            if j != i:
                prod = F.mul(prod, F.sub(ai, aj))
        out.append(F.inv(F.mul(spec.v[i], prod)))
    return tuple(out)


def dual(code: LinearCode) -> LinearCode:
    kern = linalg.right_kernel(code.gen)
    return LinearCode(code.field, kern, check=False)


def _check_positions(code: LinearCode, positions):
    pos = sorted(set(positions))
    if not pos:
        raise ValueError("empty position set")
    if pos[0] < 1 or pos[-1] > code.n:
        raise ValueError(f"positions must lie in 1..{code.n}")
    return [p - 1 for p in pos]


def puncture(code: LinearCode, positions) -> LinearCode:
    """Delete the 1-based coordinates and re-derive a full-rank generator."""
    drop = set(_check_positions(code, positions))
    keep = [j for j in range(code.n) if j not in drop]
    if not keep:
        raise ValueError("puncturing removed every coordinate")
    sub = linalg.submatrix(code.gen, range(code.k), keep)
    red, pivots = linalg.rref(sub)
    if not pivots:
        raise ValueError("punctured code is empty")
    gen = Matrix(code.field, red.data[:len(pivots)], cols=len(keep), check=False)
    return LinearCode(code.field, gen, check=False)


def shorten(code: LinearCode, positions) -> LinearCode:
    """Restrict to codewords that vanish on the 1-based coordinates, then
    delete those coordinates."""
    posn = _check_positions(code, positions)
    F = code.field
    restr = linalg.submatrix(code.gen, range(code.k), posn)
    msgs = linalg.right_kernel(restr.transpose())
    if msgs.rows == 0:
        raise ValueError("shortened code is empty")
    sub_gen = linalg.matmul(msgs, code.gen)
    keep = [j for j in range(code.n) if j not in set(posn)]
    gen = linalg.submatrix(sub_gen, range(sub_gen.rows), keep)
    return LinearCode(F, gen)


def min_distance(code: LinearCode, cap: int = 1 << 24) -> int:
    """Exact minimum Hamming weight by enumerating all q^k messages."""
    F = code.field
    q, k, n = F.q, code.k, code.n
    if q ** k > cap:
        raise ValueError(f"enumeration budget exceeded: {q}^{k} > {cap}")
    rows = code.gen.data
    best = n + 1
    for msg in product(range(q), repeat=k):
        if not any(msg):
            continue
        w = 0
        for j in range(n):
            acc = 0
            for i in range(k):
                m = msg[i]
                if m:
                    acc = F.add(acc, F.mul(m, rows[i][j]))
            if acc:
                w += 1
                if w >= best:
                    break
        if w < best:
            best = w
            if best == 1:
                break
    return best


def is_mds(code: LinearCode) -> bool:
    """True iff every k × k minor of the generator is nonzero
    (equivalently d = n - k + 1)."""
    g = code.gen
    k = code.k
    for ci in combinations(range(code.n), k):
        if linalg.det(linalg.submatrix(g, range(k), ci)) == 0:
            return False
    return True


def code_eq(c1: LinearCode, c2: LinearCode) -> bool:
    """Equality of codes as sets of codewords.

    Compares reduced echelon generators bit-exactly when both leading
    blocks are invertible; otherwise falls back to mutual row-space
    containment via ranks.
    """
    if c1.field != c2.field:
        raise ValueError("codes over different fields")
    if c1.n != c2.n or c1.k != c2.k:
        return False
    m1, ok1 = linalg.echelonize(c1.gen)
    m2, ok2 = linalg.echelonize(c2.gen)
    if ok1 and ok2:
        return m1.data == m2.data
    stacked = linalg.vstack(c1.gen, c2.gen)
    return linalg.rank(stacked) == c1.k


# ---------------- file formats ----------------

def _field_header(field: Field) -> str:
    mod = ",".join(str(c) for c in field.modulus)
    return f"field p={field.p} s={field.s} mod={mod}"


def _parse_field_header(line: str) -> Field:
    parts = line.split()
    if len(parts) != 4 or parts[0] != "field":
        raise FormatError(f"bad field header: {line!r}")
    try:
        kv = dict(p.split("=", 1) for p in parts[1:])
        p = int(kv["p"])
        s = int(kv["s"])
        mod = tuple(int(c) for c in kv["mod"].split(","))
    except (ValueError, KeyError) as e:
        raise FormatError(f"bad field header: {line!r}") from e
    try:
        return Field(p, s, mod)
    except ValueError as e:
        raise FormatError(str(e)) from e


def format_matrix_file(m: Matrix) -> str:
    lines = [_field_header(m.field), f"matrix {m.rows} {m.cols}"]
    for r in m.data:
        lines.append(" ".join(str(e) for e in r))
    return "\n".join(lines) + "\n"


def parse_matrix_file(text: str) -> Matrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) < 2:
        raise FormatError("matrix file too short")
    field = _parse_field_header(lines[0])
    head = lines[1].split()
    if len(head) != 3 or head[0] != "matrix":
        raise FormatError(f"bad matrix header: {lines[1]!r}")
    try:
        k, n = int(head[1]), int(head[2])
    except ValueError:
        raise FormatError(f"bad matrix header: {lines[1]!r}") from None
    if len(lines) != 2 + k:
        raise FormatError(f"expected {k} matrix rows, found {len(lines) - 2}")
    rows = []
    for ln in lines[2:]:
        toks = ln.split()
        if len(toks) != n:
            raise FormatError(f"expected {n} entries per row, found {len(toks)}")
        try:
            rows.append([parse_element(field, t) for t in toks])
        except ValueError as e:
            raise FormatError(str(e)) from e
    return Matrix(field, rows, cols=n, check=False)


def format_spec_file(spec: GrsSpec) -> str:
    lines = [
        _field_header(spec.field),
        "alpha: " + " ".join(format_element(a) for a in spec.alpha),
        "v: " + " ".join(str(x) for x in spec.v),
        f"k: {spec.k}",
    ]
    return "\n".join(lines) + "\n"


def parse_spec_file(text: str) -> GrsSpec:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 4:
        raise FormatError("spec file must have exactly 4 lines")
    field = _parse_field_header(lines[0])
    def body(line, tag):
        if not line.startswith(tag + ":"):
            raise FormatError(f"expected {tag!r} line, got {line!r}")
        return line[len(tag) + 1:].split()
    try:
        alpha = [parse_element(field, t, allow_inf=True) for t in body(lines[1], "alpha")]
        v = [parse_element(field, t) for t in body(lines[2], "v")]
        k = int(body(lines[3], "k")[0])
        return GrsSpec(field, tuple(alpha), tuple(v), k)
    except (ValueError, IndexError) as e:
        raise FormatError(str(e)) from e


def write_matrix_file(path, m: Matrix) -> None:
    with open(path, "w") as fh:
        fh.write(format_matrix_file(m))


def read_matrix_file(path) -> Matrix:
    with open(path) as fh:
        return parse_matrix_file(fh.read())


def write_spec_file(path, spec: GrsSpec) -> None:
    with open(path, "w") as fh:
        fh.write(format_spec_file(spec))


def read_spec_file(path) -> GrsSpec:
    with open(path) as fh:
        return parse_spec_file(fh.read())
