"""Partitions, generalized partitions, skew shapes, and the tableau kernels
(Littlewood-Richardson numbers, charge, Kostka-Foulkes polynomials) that the
rest of the package is built on.

Conventions: a Partition is a tuple of weakly decreasing positive ints
(trailing zeros stripped, () is empty); a GenPartition is a weakly decreasing
tuple of ints of fixed length, negative entries allowed; a TPoly is a dict
{power: coeff} with zero coefficients removed.
"""

from fractions import Fraction
from functools import cache
import itertools


# ---------------------------------------------------------------- parsing

def parse_partition(text):
    """Parse "3,1" to (3, 1).  "" and "0" both denote the empty partition."""
    text = text.strip()
    if text in ("", "0"):
        return ()
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError("bad partition %r" % text)
    if any(p < 0 for p in parts):
        raise ValueError("negative part in partition %r" % text)
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError("parts not weakly decreasing in %r" % text)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def format_partition(mu):
    return ",".join(str(p) for p in mu) if mu else "0"


def parse_gen_partition(text):
    """Parse "2,0,-1" to (2, 0, -1); length is significant, negatives kept."""
    text = text.strip()
    if text == "":
        return ()
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError("bad generalized partition %r" % text)
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError("entries not weakly decreasing in %r" % text)
    return parts


def format_gen_partition(lam):
    return ",".join(str(p) for p in lam)


def parse_skew(text):
    """Parse "3,1/1" to ((3, 1), (1,)); a bare partition has empty inner shape."""
    if "/" in text:
        outer_s, inner_s = text.split("/", 1)
    else:
        outer_s, inner_s = text, ""
    outer = parse_partition(outer_s)
    inner = parse_partition(inner_s)
    if not contains(outer, inner):
        raise ValueError("inner shape not contained in outer in %r" % text)
    return outer, inner


# ---------------------------------------------------------------- shape ops

def normalize(mu):
    """Strip trailing zeros."""
    mu = tuple(mu)
    while mu and mu[-1] == 0:
        mu = mu[:-1]
    return mu


def is_partition(mu):
    return all(mu[i] >= mu[i + 1] for i in range(len(mu) - 1)) and (
        not mu or mu[-1] >= 0)


def is_gen_partition(lam):
    return all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))


def conjugate(mu):
    """Transpose diagram: conjugate((3,1)) == (2,1,1)."""
    if not mu:
        return ()
    return tuple(sum(1 for p in mu if p > j) for j in range(mu[0]))


def contains(outer, inner):
    inner = normalize(inner)
    if len(inner) > len(normalize(outer)):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def skew_size(outer, inner):
    return sum(outer) - sum(inner)


def _pad(mu, n):
    return tuple(mu) + (0,) * (n - len(mu))


def is_horizontal_strip(outer, inner):
    """At most one cell per column: outer[i+1] <= inner[i]."""
    outer, inner = normalize(outer), normalize(inner)
    if not contains(outer, inner):
        return False
    inner = _pad(inner, len(outer))
    return all(outer[i + 1] <= inner[i] for i in range(len(outer) - 1))


def is_vertical_strip(outer, inner):
    """At most one cell per row."""
    outer, inner = normalize(outer), normalize(inner)
    if not contains(outer, inner):
        return False
    inner = _pad(inner, len(outer))
    return all(outer[i] - inner[i] <= 1 for i in range(len(outer)))


def horizontal_strips_above(mu, k):
    """Partitions lam >= mu with lam/mu a horizontal strip of size k."""
    mu = normalize(mu)
    rows = len(mu) + 1
    out = []

    def go(i, rem, prefix):
        if i == rows:
            if rem == 0:
                out.append(normalize(tuple(prefix)))
            return
        lo = mu[i] if i < len(mu) else 0
        hi = prefix[-1] if prefix else lo + rem
        hi = min(hi, lo + rem)
        if i > 0:
            # horizontal strip: lam[i] <= mu[i-1]
            hi = min(hi, mu[i - 1])
        for v in range(lo, hi + 1):
            go(i + 1, rem - (v - lo), prefix + [v])

    go(0, k, [])
    return out


def horizontal_strips_below(mu, k):
    """Partitions nu <= mu with mu/nu a horizontal strip of size k."""
    mu = normalize(mu)
    out = []

    def go(i, rem, prefix):
        if i == len(mu):
            if rem == 0:
                out.append(normalize(tuple(prefix)))
            return
        hi = mu[i]
        lo = mu[i + 1] if i + 1 < len(mu) else 0
        for v in range(hi, lo - 1, -1):
            if hi - v <= rem:
                go(i + 1, rem - (hi - v), prefix + [v])

    go(0, k, [])
    return out


def vertical_strips_above(mu, k):
    return [conjugate(lam) for lam in horizontal_strips_above(conjugate(mu), k)]


def vertical_strips_below(mu, k):
    return [conjugate(nu) for nu in horizontal_strips_below(conjugate(mu), k)]


def partitions_of(n, max_length=None, max_part=None):
    """Yield partitions of n, largest part first, in reverse lex order."""
    if max_length is None:
        max_length = n
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    if max_length <= 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, max_length - 1, first):
            yield (first,) + rest


def mu_star(mu, n):
    """Pad mu to length n with zeros, negate, reverse: the weight -w0(mu)."""
    mu = normalize(mu)
    if len(mu) > n:
        raise ValueError("mu_star: %r does not fit in length %d" % (mu, n))
    return tuple(-p for p in reversed(_pad(mu, n)))


# ---------------------------------------------------------------- LR numbers

@cache
def lr_coefficient(lam, mu, nu):
    """Littlewood-Richardson number c^lam_{mu nu}.

    Counts column-strict fillings of lam/mu with content nu whose reverse
    reading word (rows top to bottom, right to left in each row) is a lattice
    word.
    """
    lam, mu, nu = normalize(lam), normalize(mu), normalize(nu)
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    if not contains(lam, mu) or not contains(lam, nu):
        return 0
    if not nu:
        return 1 if lam == mu else 0
    mu_p = _pad(mu, len(lam))
    cells = [(r, c) for r in range(len(lam))
             for c in range(lam[r] - 1, mu_p[r] - 1, -1)]
    m = len(nu)
    counts = [0] * (m + 1)
    fill = {}
    total = 0

    def go(idx):
        nonlocal total
        if idx == len(cells):
            total += 1
            return
        r, c = cells[idx]
        hi = m
        if (r, c + 1) in fill:
            hi = fill[(r, c + 1)]
        for v in range(1, hi + 1):
            if counts[v] >= nu[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            up = fill.get((r - 1, c))
            if up is not None and up >= v:
                continue
            counts[v] += 1
            fill[(r, c)] = v
            go(idx + 1)
            del fill[(r, c)]
            counts[v] -= 1

    go(0)
    return total


def gen_lr_coefficient(lam, mu, nu):
    """LR number for generalized partitions, resolved by argument lengths.

    len(lam) == len(mu) + len(nu): the branching coefficient, computed after
    the common shift making all three into partitions.  Equal lengths: the
    same-length convention (shift mu and nu separately so each is a partition,
    shift lam by the sum).  Anything else is an error.
    """
    if not (is_gen_partition(lam) and is_gen_partition(mu)
            and is_gen_partition(nu)):
        raise ValueError("arguments must be weakly decreasing")
    L, m, n = len(lam), len(mu), len(nu)
    if L != m + n and not (L == m == n):
        raise ValueError(
            "length pattern (%d; %d, %d) is neither additive nor equal"
            % (L, m, n))
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    if L == m + n:
        p = max([0] + [-x[-1] for x in (lam, mu, nu) if x])
        lam_s = tuple(a + p for a in lam)
        mu_s = tuple(a + p for a in mu)
        nu_s = tuple(a + p for a in nu)
        if any(a < 0 for a in lam_s):
            return 0
        return lr_coefficient(lam_s, mu_s, nu_s)
    if L == m == n:
        a = max(0, -mu[-1]) if mu else 0
        b = max(0, -nu[-1]) if nu else 0
        lam_s = tuple(x + a + b for x in lam)
        if lam_s and lam_s[-1] < 0:
            return 0
        mu_s = tuple(x + a for x in mu)
        nu_s = tuple(x + b for x in nu)
        return lr_coefficient(lam_s, mu_s, nu_s)


# ---------------------------------------------------------------- TPoly

def tpoly(pairs):
    """Build a TPoly from (power, coeff) pairs, dropping zeros."""
    out = {}
    for e, c in pairs:
        out[e] = out.get(e, 0) + c
        if out[e] == 0:
            del out[e]
    return out


def tpoly_add(a, b):
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + c
        if out[e] == 0:
            del out[e]
    return out


def tpoly_scale(a, c):
    if c == 0:
        return {}
    return {e: v * c for e, v in a.items()}


def tpoly_mul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = e1 + e2
            out[e] = out.get(e, 0) + c1 * c2
            if out[e] == 0:
                del out[e]
    return out


def tpoly_truncate(a, tmax):
    return {e: c for e, c in a.items() if e <= tmax}


def tpoly_eval(a, t):
    return sum(c * t ** e for e, c in a.items())


def tpoly_pairs(a):
    """Sorted [[power, coeff], ...] form used everywhere for output."""
    return [[e, a[e]] for e in sorted(a)]


# ---------------------------------------------------------------- charge

def charge(word):
    """Charge of a word with weakly decreasing content.

    Standard subwords are extracted scanning right to left with cyclic
    wraparound; within a standard subword the index of letter r+1 is the index
    of r, plus one if r+1 sits to the right of r.
    """
    remaining = list(enumerate(word))
    total = 0
    while remaining:
        picked = []
        picked_idx = set()
        target = 1
        start = len(remaining) - 1
        while True:
            order = itertools.chain(range(start, -1, -1),
                                    range(len(remaining) - 1, start, -1))
            found = None
            for i in order:
                if i not in picked_idx and remaining[i][1] == target:
                    found = i
                    break
            if found is None:
                break
            picked.append(remaining[found][0])
            picked_idx.add(found)
            start = found - 1 if found > 0 else len(remaining) - 1
            target += 1
        positions = picked
        idx = 0
        for r in range(1, len(positions)):
            if positions[r] > positions[r - 1]:
                idx += 1
            total += idx
        remaining = [remaining[i] for i in range(len(remaining))
                     if i not in picked_idx]
    return total


def _sst_fillings(lam, content):
    """Yield row fillings of shape lam with the given letter multiplicities."""
    lam = normalize(lam)
    m = len(content)
    counts = list(content)

    def rows(r, above):
        if r == len(lam):
            yield []
            return
        width = lam[r]

        def build(c, row, avail):
            if c == width:
                yield tuple(row)
                return
            lo = row[-1] if row else 1
            if above is not None and c < len(above):
                lo = max(lo, above[c] + 1)
            for v in range(lo, m + 1):
                if avail[v - 1] > 0:
                    avail[v - 1] -= 1
                    row.append(v)
                    yield from build(c + 1, row, avail)
                    row.pop()
                    avail[v - 1] += 1

        for row in build(0, [], counts):
            for rest in rows(r + 1, row):
                yield [row] + rest

    yield from rows(0, None)


def kostka_foulkes(lam, mu):
    """Kostka-Foulkes polynomial K_{lam mu}(t) as a TPoly.

    Accepts generalized partitions of equal length (shifted to partitions by
    the common-shift convention) or plain partitions of any lengths.
    """
    lam, mu = tuple(lam), tuple(mu)
    if not (is_gen_partition(lam) and is_gen_partition(mu)):
        raise ValueError("arguments must be weakly decreasing")
    if (lam and lam[-1] < 0) or (mu and mu[-1] < 0):
        if len(lam) != len(mu):
            raise ValueError("negative entries require equal lengths")
        p = max(-lam[-1], -mu[-1], 0)
        lam = tuple(a + p for a in lam)
        mu = tuple(a + p for a in mu)
    lam, mu = normalize(lam), normalize(mu)
    if sum(lam) != sum(mu):
        raise ValueError("degree mismatch: |%r| != |%r|" % (lam, mu))
    out = {}
    for filling in _sst_fillings(lam, mu):
        word = []
        for row in reversed(filling):
            word.extend(row)
        c = charge(word)
        out[c] = out.get(c, 0) + 1
    return out


# ---------------------------------------------------------------- counting

def num_sst(lam, n):
    """Number of semistandard tableaux of shape lam with entries in 1..n."""
    lam = normalize(lam)
    if len(lam) > n:
        return 0
    out = Fraction(1)
    conj = conjugate(lam)
    for i, row in enumerate(lam):
        for j in range(row):
            hook = (row - j) + (conj[j] - i) - 1
            out *= Fraction(n + j - i, hook)
    assert out.denominator == 1
    return int(out)
