"""Binary matrices with a crystal structure on both index directions, plus the
row models with finitely many ones (level 0) and with ones cofinite to the
left (level 1).

Row and column index intervals are explicit data: the transpose bijection rho
negates and swaps them, so nothing may be implicit in array offsets.
"""

import itertools
from collections import Counter, deque

from .crystal import Weight


class BinaryMatrix:
    """An I x J zero-one matrix over explicit inclusive index intervals."""

    __slots__ = ("row_lo", "col_lo", "entries")

    def __init__(self, row_lo, col_lo, entries):
        self.row_lo = row_lo
        self.col_lo = col_lo
        self.entries = tuple(tuple(r) for r in entries)
        w = {len(r) for r in self.entries}
        if len(w) > 1:
            raise ValueError("ragged rows")

    @property
    def nrows(self):
        return len(self.entries)

    @property
    def ncols(self):
        return len(self.entries[0]) if self.entries else 0

    @property
    def row_hi(self):
        return self.row_lo + self.nrows - 1

    @property
    def col_hi(self):
        return self.col_lo + self.ncols - 1

    def entry(self, i, j):
        return self.entries[i - self.row_lo][j - self.col_lo]

    def key(self):
        return (self.row_lo, self.col_lo, self.entries)

    def __eq__(self, other):
        return isinstance(other, BinaryMatrix) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "BinaryMatrix(rows=%d..%d cols=%d..%d)" % (
            self.row_lo, self.row_hi, self.col_lo, self.col_hi)

    def row_weight(self):
        """gl weight over the row interval: row sums."""
        return tuple(sum(r) for r in self.entries)

    def col_weight(self):
        """gl weight over the column interval: column sums."""
        return tuple(sum(r[c] for r in self.entries)
                     for c in range(self.ncols))


def parse_matrix(text):
    """Parse the fixture literal: header "rows=1..2 cols=-1..3" then 0/1 lines."""
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    head = lines[0].split()
    spans = {}
    for part in head:
        name, rng = part.split("=")
        lo, hi = rng.split("..")
        spans[name] = (int(lo), int(hi))
    row_lo, row_hi = spans["rows"]
    col_lo, col_hi = spans["cols"]
    body = lines[1:]
    if len(body) != row_hi - row_lo + 1:
        raise ValueError("expected %d rows" % (row_hi - row_lo + 1))
    entries = []
    for ln in body:
        if len(ln) != col_hi - col_lo + 1 or any(ch not in "01" for ch in ln):
            raise ValueError("bad matrix row %r" % ln)
        entries.append(tuple(int(ch) for ch in ln))
    return BinaryMatrix(row_lo, col_lo, entries)


def format_matrix(A):
    out = ["rows=%d..%d cols=%d..%d" % (A.row_lo, A.row_hi, A.col_lo, A.col_hi)]
    for r in A.entries:
        out.append("".join(str(x) for x in r))
    return "\n".join(out)


# ---------------------------------------------------------------- row ops

def row_lower(v, k, col_lo=0):
    """Move a 1 from column k to k+1 if the pattern there is (1,0)."""
    j = k - col_lo
    if j < 0 or j + 1 >= len(v):
        raise ValueError("columns %d,%d outside row" % (k, k + 1))
    if (v[j], v[j + 1]) != (1, 0):
        return None
    out = list(v)
    out[j], out[j + 1] = 0, 1
    return tuple(out)


def row_raise(v, k, col_lo=0):
    j = k - col_lo
    if j < 0 or j + 1 >= len(v):
        raise ValueError("columns %d,%d outside row" % (k, k + 1))
    if (v[j], v[j + 1]) != (0, 1):
        return None
    out = list(v)
    out[j], out[j + 1] = 1, 0
    return tuple(out)


def is_k_admissible(A, k):
    """Signature bounds exist; immediate for finite row intervals."""
    j = k - A.col_lo
    if j < 0 or j + 1 >= A.ncols:
        raise ValueError("columns %d,%d outside matrix" % (k, k + 1))
    return True


def _matrix_signature(A, k):
    """Surviving minus/plus row offsets at color k after cancelling (+,-)
    pairs with the + in an earlier row."""
    j = k - A.col_lo
    if j < 0 or j + 1 >= A.ncols:
        raise ValueError("columns %d,%d outside matrix" % (k, k + 1))
    plus, minus = [], []
    for r, row in enumerate(A.entries):
        pair = (row[j], row[j + 1])
        if pair == (1, 0):
            plus.append(r)
        elif pair == (0, 1):
            if plus:
                plus.pop()
            else:
                minus.append(r)
    return minus, plus


def matrix_lower(A, k):
    """Lowering operator at column color k: acts on the left-most good +."""
    minus, plus = _matrix_signature(A, k)
    if not plus:
        return None
    r = plus[0]
    j = k - A.col_lo
    rows = list(A.entries)
    row = list(rows[r])
    row[j], row[j + 1] = 0, 1
    rows[r] = tuple(row)
    return BinaryMatrix(A.row_lo, A.col_lo, rows)


def matrix_raise(A, k):
    """Raising operator at column color k: acts on the right-most good -."""
    minus, plus = _matrix_signature(A, k)
    if not minus:
        return None
    r = minus[-1]
    j = k - A.col_lo
    rows = list(A.entries)
    row = list(rows[r])
    row[j], row[j + 1] = 1, 0
    rows[r] = tuple(row)
    return BinaryMatrix(A.row_lo, A.col_lo, rows)


# ---------------------------------------------------------------- transpose

def rho_transpose(A):
    """The bijection sending an I x J matrix to a (-J) x I matrix with
    entry(r, c) = A(c, -r)."""
    rows = []
    for r in range(-A.col_hi, -A.col_lo + 1):
        rows.append(tuple(A.entry(c, -r)
                          for c in range(A.row_lo, A.row_hi + 1)))
    return BinaryMatrix(-A.col_hi, A.row_lo, rows)


def rho_inverse(B):
    """Inverse of rho_transpose: entry(i, j) = B(-j, i)."""
    rows = []
    for i in range(B.col_lo, B.col_hi + 1):
        rows.append(tuple(B.entry(-j, i)
                          for j in range(-B.row_hi, -B.row_lo + 1)))
    return BinaryMatrix(B.col_lo, -B.row_hi, rows)


def cap_lower(A, l):
    """Row-direction lowering operator: conjugate of matrix_lower by rho."""
    out = matrix_lower(rho_transpose(A), l)
    return None if out is None else rho_inverse(out)


def cap_raise(A, l):
    out = matrix_raise(rho_transpose(A), l)
    return None if out is None else rho_inverse(out)


def dual(A):
    return BinaryMatrix(A.row_lo, A.col_lo,
                        [tuple(1 - x for x in r) for r in A.entries])


def row_reverse(A):
    """Reflect the row order in place.  dual followed by row_reverse is the
    dual-crystal map: it swaps matrix_lower and matrix_raise exactly,
    including the null cases; entrywise complement alone does not once two
    rows interact in a signature."""
    return BinaryMatrix(A.row_lo, A.col_lo, A.entries[::-1])


# ---------------------------------------------------------------- embeddings

def embed_sigma(tab, window, nrows=None):
    """Embed a tableau over the plain alphabet: the k-th column from the
    right becomes the indicator row k.  Trivial factors are zero rows and
    precede the column rows."""
    lo, hi = window
    if tab.dual:
        raise ValueError("sigma embeds plain tableaux")
    cols = _columns(tab)
    m = len(cols)
    if nrows is None:
        nrows = m
    if nrows < m:
        raise ValueError("shape has %d columns, only %d rows" % (m, nrows))
    rows = [(0,) * (hi - lo + 1)] * (nrows - m)
    for col in reversed(cols):
        rows.append(_indicator(col, lo, hi))
    return BinaryMatrix(1, lo, rows)


def embed_tau(tab, window, nrows=None):
    """Embed a tableau over the dual alphabet: the k-th column from the right
    becomes the complement-indicator row k.  Trivial factors are all-ones
    rows and follow the column rows."""
    lo, hi = window
    if not tab.dual:
        raise ValueError("tau embeds dual tableaux")
    cols = _columns(tab)
    m = len(cols)
    if nrows is None:
        nrows = m
    if nrows < m:
        raise ValueError("shape has %d columns, only %d rows" % (m, nrows))
    rows = []
    for col in reversed(cols):
        ind = _indicator(col, lo, hi)
        rows.append(tuple(1 - x for x in ind))
    rows.extend([(1,) * (hi - lo + 1)] * (nrows - m))
    return BinaryMatrix(1, lo, rows)


def _columns(tab):
    if not tab.rows:
        return []
    width = max(len(r) for r in tab.rows)
    return [tuple(r[c] for r in tab.rows if c < len(r))
            for c in range(width)]


def _indicator(values, lo, hi):
    if any(v < lo or v > hi for v in values):
        raise ValueError("entry outside window [%d,%d]" % (lo, hi))
    marks = set(values)
    if len(marks) != len(values):
        raise ValueError("column entries must be distinct")
    return tuple(1 if j in marks else 0 for j in range(lo, hi + 1))


# ---------------------------------------------------------------- maya rows

class MayaRow:
    """One row of the infinite models: kind "E" has finite support, kind "F"
    is all ones up to `charge` with a finite set of flips."""

    __slots__ = ("kind", "charge", "delta")

    def __init__(self, kind, charge=0, delta=()):
        if kind not in ("E", "F"):
            raise ValueError("kind must be E or F")
        if kind == "E" and charge != 0:
            raise ValueError("E rows carry no charge")
        self.kind = kind
        self.charge = charge
        self.delta = frozenset(delta)

    def entry(self, i):
        vac = 1 if (self.kind == "F" and i <= self.charge) else 0
        return vac ^ (1 if i in self.delta else 0)

    def key(self):
        return (self.kind, self.charge, tuple(sorted(self.delta)))

    def __eq__(self, other):
        return isinstance(other, MayaRow) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "MayaRow(%r, charge=%d, delta=%r)" % (
            self.kind, self.charge, sorted(self.delta))

    def to_json(self):
        return {"kind": self.kind, "charge": self.charge,
                "delta": sorted(self.delta)}


def maya_weight(v):
    if v.kind == "E":
        return Weight(0, {i: 1 for i in v.delta})
    pos = set(v.delta)
    if v.charge > 0:
        pos |= set(range(1, v.charge + 1))
    else:
        pos |= set(range(v.charge + 1, 1))
    eps = {}
    for i in pos:
        c = v.entry(i) if i > 0 else v.entry(i) - 1
        if c:
            eps[i] = c
    return Weight(1, eps)


def maya_window(rows, extra=(), margin=2):
    """A column interval containing every flip, charge edge and extra index."""
    pts = list(extra)
    for v in rows:
        pts.extend(v.delta)
        if v.kind == "F":
            pts.append(v.charge)
    if not pts:
        pts = [0]
    return min(pts) - margin, max(pts) + margin


def maya_snapshot(rows, lo, hi):
    return BinaryMatrix(1, lo, [tuple(v.entry(j) for j in range(lo, hi + 1))
                                for v in rows])


def _maya_readback(rows, A):
    out = []
    for idx, v in enumerate(rows):
        delta = set()
        for j in range(A.col_lo, A.col_hi + 1):
            vac = 1 if (v.kind == "F" and j <= v.charge) else 0
            if A.entry(1 + idx, j) != vac:
                delta.add(j)
        out.append(MayaRow(v.kind, v.charge, delta))
    return tuple(out)


def maya_lower(rows, k, margin=2):
    lo, hi = maya_window(rows, extra=(k, k + 1), margin=margin)
    A = matrix_lower(maya_snapshot(rows, lo, hi), k)
    return None if A is None else _maya_readback(rows, A)


def maya_raise(rows, k, margin=2):
    lo, hi = maya_window(rows, extra=(k, k + 1), margin=margin)
    A = matrix_raise(maya_snapshot(rows, lo, hi), k)
    return None if A is None else _maya_readback(rows, A)


def maya_weight_total(rows):
    out = Weight(0)
    for v in rows:
        out = out + maya_weight(v)
    return out


# ---------------------------------------------------------------- censuses

def enumerate_matrices(row_lo, row_hi, col_lo, col_hi):
    nr, nc = row_hi - row_lo + 1, col_hi - col_lo + 1
    for bits in itertools.product((0, 1), repeat=nr * nc):
        yield BinaryMatrix(row_lo, col_lo,
                           [bits[r * nc:(r + 1) * nc] for r in range(nr)])


def bicrystal_components(mats, col_colors, row_colors):
    """Partition matrices under both operator families.

    Returns a Counter over (doubly-source column weight, component size);
    raises if a component lacks a unique doubly-source.
    """
    col_colors, row_colors = list(col_colors), list(row_colors)
    nodes = set(mats)
    seen = set()
    out = Counter()
    for start in nodes:
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        seen.add(start)
        doubly = []
        while queue:
            A = queue.popleft()
            top = True
            moves = [(matrix_raise, k) for k in col_colors] + \
                    [(matrix_lower, k) for k in col_colors] + \
                    [(cap_raise, l) for l in row_colors] + \
                    [(cap_lower, l) for l in row_colors]
            for op, c in moves:
                B = op(A, c)
                if B is None:
                    continue
                if op in (matrix_raise, cap_raise):
                    top = False
                if B not in nodes:
                    raise ValueError("set not closed under bicrystal ops")
                if B not in comp:
                    comp.add(B)
                    seen.add(B)
                    queue.append(B)
            if top:
                doubly.append(A)
        if len(doubly) != 1:
            raise ValueError("component with %d doubly-highest elements"
                             % len(doubly))
        out[(doubly[0].col_weight(), len(comp))] += 1
    return out
