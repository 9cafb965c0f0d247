"""Words, tableaux and crystal operators for the two letter families.

A letter is a pair (i, dual): (i, False) is the letter i of the standard
crystal, (i, True) is i-dual.  Words are tuples of letters, acted on color by
color through the signature rule; a tensor product of word crystals is just
word concatenation.

Operator conventions (checked against the letter tables):
  (i, False): plus at color i, minus at color i-1; lowering sends i to i+1.
  (i, True):  plus at color i-1, minus at color i; lowering sends i to i-1.
"""

from collections import Counter, deque

from . import shapes


# ---------------------------------------------------------------- letters

def letter_weight(let):
    i, dual = let
    return Weight(0, {i: -1 if dual else 1})


def _is_plus(let, k):
    i, dual = let
    return i == k + 1 if dual else i == k


def _is_minus(let, k):
    i, dual = let
    return i == k if dual else i == k + 1


def _lowered(let):
    i, dual = let
    return (i - 1, True) if dual else (i + 1, False)


def _raised(let):
    i, dual = let
    return (i + 1, True) if dual else (i - 1, False)


def format_letter(let):
    i, dual = let
    return "%d*" % i if dual else "%d" % i


# ---------------------------------------------------------------- weights

class Weight:
    """An integral weight: level * Lambda_0 plus a finite sum of eps_i."""

    __slots__ = ("level", "eps")

    def __init__(self, level=0, eps=None):
        self.level = level
        self.eps = {i: c for i, c in (eps or {}).items() if c != 0}

    def key(self):
        return (self.level, tuple(sorted(self.eps.items())))

    def __eq__(self, other):
        return isinstance(other, Weight) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __add__(self, other):
        eps = dict(self.eps)
        for i, c in other.eps.items():
            eps[i] = eps.get(i, 0) + c
        return Weight(self.level + other.level, eps)

    def __neg__(self):
        return Weight(-self.level, {i: -c for i, c in self.eps.items()})

    def __sub__(self, other):
        return self + (-other)

    def pairing(self, k):
        """Evaluation against the coroot h_k."""
        base = self.eps.get(k, 0) - self.eps.get(k + 1, 0)
        return base + (self.level if k == 0 else 0)

    def __repr__(self):
        bits = []
        if self.level:
            bits.append("%d*L0" % self.level)
        for i in sorted(self.eps):
            bits.append("%+d*e%d" % (self.eps[i], i))
        return "Weight(%s)" % " ".join(bits) if bits else "Weight(0)"

    def to_json(self):
        return {"level": self.level,
                "eps": [[i, self.eps[i]] for i in sorted(self.eps)]}


def fundamental_weight(k):
    """Lambda_k = Lambda_0 + eps_1+..+eps_k (k>0) or Lambda_0 - eps_{k+1}-..-eps_0."""
    if k > 0:
        return Weight(1, {j: 1 for j in range(1, k + 1)})
    if k < 0:
        return Weight(1, {j: -1 for j in range(k + 1, 1)})
    return Weight(1)


def hw_weight(lam):
    """Weight of the highest weight element for a generalized partition lam:
    sum of Lambda_{lam_i}."""
    n = len(lam)
    out = Weight(0)
    for a in lam:
        out = out + fundamental_weight(a)
    assert out.level == n
    return out


# ---------------------------------------------------------------- word ops

def _signature(word, k):
    """Surviving minus and plus positions after bracket cancellation."""
    plus = []
    minus = []
    for idx, let in enumerate(word):
        if _is_plus(let, k):
            plus.append(idx)
        elif _is_minus(let, k):
            if plus:
                plus.pop()
            else:
                minus.append(idx)
    return minus, plus


def eps(word, k):
    return len(_signature(word, k)[0])


def phi(word, k):
    return len(_signature(word, k)[1])


def lower_word(word, k):
    """Apply the lowering operator at color k, or None."""
    minus, plus = _signature(word, k)
    if not plus:
        return None
    idx = plus[0]
    return word[:idx] + (_lowered(word[idx]),) + word[idx + 1:]


def raise_word(word, k):
    """Apply the raising operator at color k, or None."""
    minus, plus = _signature(word, k)
    if not minus:
        return None
    idx = minus[-1]
    return word[:idx] + (_raised(word[idx]),) + word[idx + 1:]


def weight(word):
    eps_map = {}
    for i, dual in word:
        eps_map[i] = eps_map.get(i, 0) + (-1 if dual else 1)
    return Weight(0, eps_map)


def weyl_reflect(word, k):
    """Simple reflection on a word: apply lowering or raising |<wt,h_k>| times."""
    m = weight(word).pairing(k)
    out = word
    for _ in range(m):
        out = lower_word(out, k)
        assert out is not None
    for _ in range(-m):
        out = raise_word(out, k)
        assert out is not None
    return out


def dual_word(word):
    """Dual crystal element: reverse the word and dualize each letter."""
    return tuple((i, not d) for i, d in reversed(word))


# ---------------------------------------------------------------- tableaux

class Tableau:
    """Rows of letter indices over one alphabet family; columns strict."""

    __slots__ = ("rows", "dual")

    def __init__(self, rows, dual=False):
        self.rows = tuple(tuple(r) for r in rows)
        self.dual = dual

    def shape(self):
        return shapes.normalize(tuple(len(r) for r in self.rows))

    def __eq__(self, other):
        return (isinstance(other, Tableau) and self.rows == other.rows
                and self.dual == other.dual)

    def __hash__(self):
        return hash((self.rows, self.dual))

    def __repr__(self):
        return "Tableau(%r%s)" % (list(self.rows), ", dual" if self.dual else "")


def tableau_word(tab):
    """Column reading word: columns right to left, top to bottom in each."""
    rows = tab.rows
    if not rows:
        return ()
    width = max(len(r) for r in rows)
    out = []
    for c in range(width - 1, -1, -1):
        for r in range(len(rows)):
            if c < len(rows[r]):
                out.append((rows[r][c], tab.dual))
    return tuple(out)


def enumerate_sst(lam, lo, hi, dual=False):
    """All semistandard tableaux of shape lam over the alphabet interval
    [lo, hi] (dualized letters if dual; their order is reversed, so rank r
    maps to hi-r instead of lo+r)."""
    lam = shapes.normalize(lam)
    nletters = hi - lo + 1
    if len(lam) > nletters:
        return
    if not lam:
        yield Tableau((), dual)
        return

    def rank_to_value(r):
        return hi - r if dual else lo + r

    def rows(r, above):
        if r == len(lam):
            yield ()
            return
        width = lam[r]

        def build(c, row):
            if c == width:
                yield row
                return
            start = row[-1] if row else 0
            if above is not None and c < len(above):
                start = max(start, above[c] + 1)
            for v in range(start, nletters):
                yield from build(c + 1, row + (v,))

        for row in build(0, ()):
            for rest in rows(r + 1, row):
                yield (row,) + rest

    for filling in rows(0, None):
        yield Tableau(tuple(tuple(rank_to_value(v) for v in row)
                            for row in filling), dual)


def hw_tableau(lam, lo, hi, dual=False):
    """The unique source of SST(lam) over [lo, hi] (as a crystal of words)."""
    lam = shapes.normalize(lam)
    if len(lam) > hi - lo + 1:
        raise ValueError("shape %r too tall for [%d,%d]" % (lam, lo, hi))
    rows = []
    for r, width in enumerate(lam):
        v = hi - r if dual else lo + r
        rows.append((v,) * width)
    return Tableau(rows, dual)


# ---------------------------------------------------------------- components

def decompose_components(words, colors):
    """Partition a finite closed union of word crystals into components.

    Returns a Counter over (highest Weight, component size).  Raises if the
    input is not closed under the operators or a component has no unique
    source.
    """
    colors = list(colors)
    nodes = set(words)
    seen = set()
    out = Counter()
    for start in nodes:
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        sources = []
        seen.add(start)
        while queue:
            w = queue.popleft()
            is_source = True
            for k in colors:
                for step in (raise_word, lower_word):
                    nxt = step(w, k)
                    if nxt is None:
                        continue
                    if step is raise_word:
                        is_source = False
                    if nxt not in nodes:
                        raise ValueError(
                            "set not closed under color %d at %r" % (k, w))
                    if nxt not in comp:
                        comp.add(nxt)
                        seen.add(nxt)
                        queue.append(nxt)
            if is_source:
                sources.append(w)
        if len(sources) != 1:
            raise ValueError("component with %d sources" % len(sources))
        out[(weight(sources[0]), len(comp))] += 1
    return out


def is_equivalent(b1, b2, colors, max_nodes=200000):
    """Parallel traversal isomorphism test for the components of two words."""
    colors = list(colors)
    if weight(b1) != weight(b2):
        return False
    fwd = {b1: b2}
    queue = deque([b1])
    while queue:
        if len(fwd) > max_nodes:
            raise RuntimeError("component too large")
        u = queue.popleft()
        v = fwd[u]
        for k in colors:
            if eps(u, k) != eps(v, k) or phi(u, k) != phi(v, k):
                return False
            for step in (raise_word, lower_word):
                nu, nv = step(u, k), step(v, k)
                if (nu is None) != (nv is None):
                    return False
                if nu is None:
                    continue
                if nu in fwd:
                    if fwd[nu] != nv:
                        return False
                else:
                    fwd[nu] = nv
                    queue.append(nu)
    return True
