"""Decomposition rules for tensor products of extremal weight crystals.

Every isomorphism class handled here is B_{mu,nu} (x) B(Lambda_hw) with mu,
nu partitions and hw a generalized partition; the multiplicity formulas are
sums of products of Littlewood-Richardson numbers.  verify_truncated checks
any predicted decomposition against a brute-force source census of the
tensor product restricted to a finite letter window.
"""

from collections import Counter
from concurrent.futures import ThreadPoolExecutor

from . import crystal, shapes
from .crystal import Weight
from .shapes import conjugate, gen_lr_coefficient, lr_coefficient, normalize


class MixedLevelError(ValueError):
    """Raised for products mixing positive and negative levels, which do not
    decompose into the classes handled here."""


class ExtremalClass:
    """Isomorphism class of B_{mu,nu} (x) B(Lambda_hw).

    hw None (or empty) means level 0, i.e. the bare B_{mu,nu}.  Distinct
    (mu, nu, hw) triples are distinct classes.
    """

    __slots__ = ("mu", "nu", "hw")

    def __init__(self, mu=(), nu=(), hw=None):
        self.mu = normalize(mu)
        self.nu = normalize(nu)
        if not shapes.is_partition(self.mu) or not shapes.is_partition(
                self.nu):
            raise ValueError("mu and nu must be partitions: %r, %r"
                             % (mu, nu))
        if hw is not None:
            hw = tuple(hw)
            if not shapes.is_gen_partition(hw):
                raise ValueError("hw must be weakly decreasing: %r" % (hw,))
            if not hw:
                hw = None
        self.hw = hw

    @property
    def level(self):
        return len(self.hw) if self.hw is not None else 0

    def key(self):
        return (self.level, self.hw or (), self.mu, self.nu)

    def __eq__(self, other):
        return isinstance(other, ExtremalClass) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "ExtremalClass(mu=%r, nu=%r, hw=%r)" % (self.mu, self.nu,
                                                       self.hw)

    def to_json(self):
        return {"mu": list(self.mu), "nu": list(self.nu),
                "hw": list(self.hw) if self.hw is not None else None}


def decomposition_to_json(dec):
    """Serialize a {class: mult} map, sorted by (level, hw, mu, nu)."""
    out = []
    for cls in sorted(dec, key=lambda c: c.key()):
        out.append({"class": cls.to_json(), "mult": dec[cls]})
    return out


def decomposition_from_json(items):
    """Inverse of decomposition_to_json."""
    out = {}
    for entry in items:
        body = entry["class"]
        cls = ExtremalClass(body["mu"], body["nu"], body["hw"])
        _bump(out, cls, entry["mult"])
    return out


# ---------------------------------------------------------------- LR sums

def _bump(d, key, c):
    v = d.get(key, 0) + c
    if v:
        d[key] = v
    elif key in d:
        del d[key]


def _lr_expand(mu, nu):
    """Classical product expansion s_mu s_nu = {lam: c}."""
    mu, nu = normalize(mu), normalize(nu)
    if not mu:
        return {nu: 1}
    if not nu:
        return {mu: 1}
    out = {}
    for lam in shapes.partitions_of(sum(mu) + sum(nu),
                                    max_length=len(mu) + len(nu),
                                    max_part=mu[0] + nu[0]):
        c = lr_coefficient(lam, mu, nu)
        if c:
            out[lam] = c
    return out


def _skew_multiplicities(outer, inner, max_len):
    """{alpha: c^outer_{inner, alpha}} with length of alpha at most max_len."""
    if not shapes.contains(outer, inner) or max_len < 0:
        return {}
    size = sum(outer) - sum(inner)
    out = {}
    for alpha in shapes.partitions_of(size, max_length=max_len,
                                      max_part=outer[0] if outer else 0):
        c = lr_coefficient(outer, inner, alpha)
        if c:
            out[alpha] = c
    return out


def _subpartitions(mu):
    """All partitions contained in mu."""
    out = [()]
    stack = [((), 0)]
    while stack:
        prefix, i = stack.pop()
        if i == len(mu):
            continue
        hi = mu[i] if not prefix else min(mu[i], prefix[-1])
        for v in range(1, hi + 1):
            ext = prefix + (v,)
            out.append(ext)
            stack.append((ext, i + 1))
    return out


def _gen_partitions_box(length, lo, hi, total=None):
    """Weakly decreasing integer tuples with entries in [lo, hi], optionally
    of fixed sum."""
    if length == 0:
        if total in (None, 0):
            yield ()
        return

    def rec(i, prefix, acc):
        if i == length:
            if total is None or acc == total:
                yield tuple(prefix)
            return
        cap = hi if not prefix else min(hi, prefix[-1])
        for v in range(lo, cap + 1):
            if total is not None:
                rest_hi = acc + v + (length - i - 1) * min(v, hi)
                rest_lo = acc + v + (length - i - 1) * lo
                if not (rest_lo <= total <= rest_hi):
                    continue
            yield from rec(i + 1, prefix + [v], acc + v)

    yield from rec(0, [], 0)


# ---------------------------------------------------------------- products

def level0_product(mu, nu, sigma, tau):
    """[B_{mu,nu}][B_{sigma,tau}] = sum c^eta_{mu sigma} c^theta_{nu tau}
    [B_{eta,theta}]."""
    out = {}
    for eta, a in _lr_expand(mu, sigma).items():
        for theta, b in _lr_expand(nu, tau).items():
            _bump(out, ExtremalClass(eta, theta), a * b)
    return out


def hw_product(mu, nu, window):
    """{lam: multiplicity of B(Lambda_lam) in B(Lambda_mu) (x) B(Lambda_nu)}
    over lam with entries in window = (lo, hi).

    The full decomposition has infinitely many classes; the window query is
    complete within its box because the coefficient forces sum(lam) =
    sum(mu) + sum(nu).
    """
    mu, nu = tuple(mu), tuple(nu)
    lo, hi = window
    out = {}
    for lam in _gen_partitions_box(len(mu) + len(nu), lo, hi,
                                   total=sum(mu) + sum(nu)):
        c = gen_lr_coefficient(lam, mu, nu)
        if c:
            out[lam] = c
    return out


def _strips_above(lam, size):
    """mu in Z^n weakly decreasing such that mu/lam is a horizontal strip of
    the given size after subtracting the common baseline lam_n."""
    n = len(lam)
    if n == 0:
        return [()] if size == 0 else []
    out = []

    def rec(i, prefix, left):
        if i == n:
            if left == 0:
                out.append(tuple(prefix))
            return
        base = lam[i]
        cap = (lam[i - 1] if i else lam[0] + left) - base
        for add in range(min(cap, left) + 1):
            rec(i + 1, prefix + [base + add], left - add)

    rec(0, [], size)
    return out


def _strips_below(lam, size):
    """nu in Z^n weakly decreasing such that lam/nu is a horizontal strip of
    the given size after subtracting the common baseline nu_n."""
    n = len(lam)
    if n == 0:
        return [()] if size == 0 else []
    out = []

    def rec(i, prefix, left):
        if i == n:
            if left == 0:
                out.append(tuple(prefix))
            return
        floor = lam[i + 1] if i + 1 < n else lam[i] - left
        for v in range(max(floor, lam[i] - left), lam[i] + 1):
            rec(i + 1, prefix + [v], left - (lam[i] - v))

    rec(0, [], size)
    return out


def pieri_column(lam, a, dual=False):
    """B(Lambda_lam) (x) B_{(1^a)}, or the dual-column branch when dual is
    set, as a finite multiplicity-free Decomposition.

    a = 0 gives the identity decomposition.
    """
    lam = tuple(lam)
    if not shapes.is_gen_partition(lam):
        raise ValueError("lam must be weakly decreasing")
    if a < 0:
        raise ValueError("column length must be nonnegative")
    out = {}
    for k in range(a + 1):
        col = (1,) * k
        if dual:
            for nu in _strips_below(lam, a - k):
                out[ExtremalClass((), col, nu or None)] = 1
        else:
            for mu in _strips_above(lam, a - k):
                out[ExtremalClass(col, (), mu or None)] = 1
    return out


def hw_past_level0(lam, mu, nu):
    """B(Lambda_lam) (x) B_{mu,nu} = sum of B_{sigma,tau} (x) B(Lambda_rho)
    with the quadruple-LR multiplicity; always finite."""
    lam = tuple(lam)
    if not shapes.is_gen_partition(lam):
        raise ValueError("lam must be weakly decreasing")
    mu, nu = normalize(mu), normalize(nu)
    m = len(lam)
    mu_c, nu_c = conjugate(mu), conjugate(nu)
    out = {}
    for sigma in _subpartitions(mu):
        for tau in _subpartitions(nu):
            # strips longer than the hw cannot embed; the width bound
            # l(alpha) <= mu_1 is already forced by the skew coefficient
            for alpha, c1 in _skew_multiplicities(mu_c, conjugate(sigma),
                                                  m).items():
                star = shapes.mu_star(alpha, m)
                for beta, c2 in _skew_multiplicities(nu_c, conjugate(tau),
                                                     m).items():
                    beta_p = beta + (0,) * (m - len(beta))
                    asz, bsz = sum(alpha), sum(beta)
                    lob = (lam[-1] if lam else 0) - m * (alpha[0] if alpha
                                                         else 0) - asz
                    upb = (lam[0] if lam else 0) + (alpha[0] if alpha else 0)
                    for eta in _gen_partitions_box(m, lob, upb,
                                                   total=sum(lam) + asz):
                        c3 = gen_lr_coefficient(lam, eta, star)
                        if not c3:
                            continue
                        for rho in _gen_partitions_box(
                                m, (eta[-1] if eta else 0) - bsz,
                                eta[0] if eta else 0,
                                total=sum(eta) - bsz):
                            c4 = gen_lr_coefficient(eta, rho, beta_p)
                            if c4:
                                _bump(out, (sigma, tau, rho), c1 * c2 * c3
                                      * c4)
    return {ExtremalClass(s, t, r or None): c
            for (s, t, r), c in out.items()}


def extremal_lr(lam, mu, nu, rho, sigma, tau, window):
    """Multiplicities of B_{eta,theta} (x) B(Lambda_zeta) in the product
    (B_{mu,nu} (x) B(Lambda_lam)) (x) (B_{sigma,tau} (x) B(Lambda_rho)),
    for zeta with entries in window = (lo, hi).

    The (eta, theta) range is finite and emitted in full; only the zeta leg
    needs the window.  m or n may be zero, degenerating to the simpler
    products.
    """
    lam, rho = tuple(lam), tuple(rho)
    lo, hi = window
    out = {}
    for cls, d in hw_past_level0(lam, sigma, tau).items():
        alpha = cls.hw or ()
        zetas = {}
        for zeta in _gen_partitions_box(len(lam) + len(rho), lo, hi,
                                        total=sum(alpha) + sum(rho)):
            c = gen_lr_coefficient(zeta, alpha, rho)
            if c:
                zetas[zeta] = c
        if not zetas:
            continue
        for eta, c2 in _lr_expand(cls.mu, mu).items():
            for theta, c3 in _lr_expand(cls.nu, nu).items():
                for zeta, c1 in zetas.items():
                    _bump(out, ExtremalClass(eta, theta, zeta or None),
                          d * c1 * c2 * c3)
    return out


def class_product(c1, c2, window):
    """Decomposition of c1 (x) c2."""
    return extremal_lr(c1.hw or (), c1.mu, c1.nu,
                       c2.hw or (), c2.mu, c2.nu, window)


def product_decomposition(d1, d2, window):
    """Linear extension of class_product to {class: mult} maps."""
    out = {}
    for c1, a in d1.items():
        for c2, b in d2.items():
            for c3, m in class_product(c1, c2, window).items():
                _bump(out, c3, a * b * m)
    return out


def level0_canonical(w):
    """Dominant (mu, nu) with B(w) isomorphic to B_{mu,nu}, for w of level 0:
    positive eps coefficients sorted decreasingly, then negated negatives."""
    if w.level != 0:
        raise ValueError("weight has nonzero level %d" % w.level)
    pos = sorted((c for c in w.eps.values() if c > 0), reverse=True)
    neg = sorted((-c for c in w.eps.values() if c < 0), reverse=True)
    return tuple(pos), tuple(neg)


# ---------------------------------------------------------------- verifier

class _WindowTooSmall(Exception):
    pass


class _TooLarge(Exception):
    pass


_WORD_CAP = 500000


def _factor_norm(fac):
    """Validate a tensor factor tuple; Bcol(a) becomes Bmn((1^a); ())."""
    kind = fac[0]
    if kind == "Bcol":
        a = fac[1]
        if not isinstance(a, int) or a < 0:
            raise ValueError("Bcol needs a nonnegative integer, got %r"
                             % (fac[1],))
        return ("Bmn", (1,) * a, ())
    if kind in ("B", "Bdual"):
        lam = tuple(fac[1])
        if not lam or not shapes.is_gen_partition(lam):
            raise ValueError("%s needs a nonempty weakly decreasing tuple, "
                             "got %r" % (kind, fac[1]))
        return (kind, lam)
    if kind == "Bmn":
        mu, nu = normalize(fac[1]), normalize(fac[2])
        return ("Bmn", mu, nu)
    raise ValueError("unknown factor kind %r" % (kind,))


def parse_tensor_expr(text):
    """Parse "B(2,0) * Bmn(1;1) * Bdual(1,1) * Bcol(2)" into factor tuples."""
    factors = []
    for raw in text.split("*"):
        token = raw.strip()
        if not token or not token.endswith(")") or "(" not in token:
            raise ValueError("bad factor %r" % token)
        name, _, body = token[:-1].partition("(")
        name = name.strip()
        body = body.strip()
        if name == "Bcol":
            try:
                factors.append(_factor_norm(("Bcol", int(body))))
            except ValueError:
                raise ValueError("bad factor %r" % token) from None
        elif name in ("B", "Bdual"):
            try:
                lam = shapes.parse_gen_partition(body)
            except ValueError:
                raise ValueError("bad factor %r" % token) from None
            factors.append(_factor_norm((name, lam)))
        elif name == "Bmn":
            mu_s, sep, nu_s = body.partition(";")
            if not sep:
                raise ValueError("bad factor %r (Bmn needs mu;nu)" % token)
            try:
                mu = shapes.parse_partition(mu_s) if mu_s.strip() else ()
                nu = shapes.parse_partition(nu_s) if nu_s.strip() else ()
            except ValueError:
                raise ValueError("bad factor %r" % token) from None
            factors.append(_factor_norm(("Bmn", mu, nu)))
        else:
            raise ValueError("bad factor %r" % token)
    if not factors:
        raise ValueError("empty tensor expression")
    return factors


def expr_decompose(factors, window):
    """Decomposition of a product of non-negative-level factors; Bdual
    factors have no closed form here and raise MixedLevelError."""
    factors = [_factor_norm(f) for f in factors]
    if any(f[0] == "Bdual" for f in factors):
        raise MixedLevelError("product involves a negative-level factor")
    dec = {ExtremalClass(): 1}
    for fac in factors:
        if fac[0] == "B":
            step = {ExtremalClass(hw=fac[1]): 1}
        else:
            step = {ExtremalClass(fac[1], fac[2]): 1}
        dec = product_decomposition(dec, step, window)
    return dec


def _level0_shape(mu, nu, nletters):
    """Shape and per-letter shift realizing B_{mu,nu} on nletters letters:
    the dominant rearrangement (mu, 0...0, -reverse(nu)) plus a constant."""
    if len(mu) + len(nu) > nletters:
        raise _WindowTooSmall(
            "B_{%r,%r} needs %d letters" % (mu, nu, len(mu) + len(nu)))
    s = nu[0] if nu else 0
    parts = ([x + s for x in mu]
             + [s] * (nletters - len(mu) - len(nu))
             + [s - x for x in reversed(nu)])
    return normalize(parts), s


def _hw_shape(lam, lo, hi):
    """Column-conjugate shape realizing the window subcrystal of
    B(Lambda_lam) on the letters [lo, hi]."""
    p = lo - 1
    if lam[-1] < p:
        raise _WindowTooSmall(
            "B(Lambda_%r) needs letters down to %d" % (lam, lam[-1] + 1))
    if lam[0] > hi:
        raise _WindowTooSmall(
            "B(Lambda_%r) needs letters up to %d" % (lam, lam[0]))
    return conjugate(tuple(x - p for x in lam))


def _windowed_words(shape, lo, hi):
    words = []
    for t in crystal.enumerate_sst(shape, lo, hi):
        words.append(crystal.tableau_word(t))
        if len(words) > _WORD_CAP:
            raise _TooLarge("shape %r over [%d,%d] exceeds %d tableaux"
                            % (shape, lo, hi, _WORD_CAP))
    return words


def _realize_factor(fac, lo, hi):
    """Word list and constant weight offset for one tensor factor restricted
    to the letters [lo, hi]."""
    nletters = hi - lo + 1
    if fac[0] == "Bmn":
        mu, nu = fac[1], fac[2]
        shape, s = _level0_shape(mu, nu, nletters)
        words = _windowed_words(shape, lo, hi)
        off = Weight(0, {j: -s for j in range(lo, hi + 1)} if s else None)
        return words, off
    lam = fac[1]
    n = len(lam)
    shape = _hw_shape(lam, lo, hi)
    words = _windowed_words(shape, lo, hi)
    off = Weight(n, {j: -n for j in range(lo, min(hi, 0) + 1)})
    if fac[0] == "Bdual":
        words = [crystal.dual_word(w) for w in words]
        off = -off
    return words, off


def _word_rows(words, lo, hi):
    """Per-word (eps vector, phi vector, weight) over the colors lo..hi-1."""
    colors = range(lo, hi)
    rows = []
    for w in words:
        evec = tuple(crystal.eps(w, k) for k in colors)
        pvec = tuple(crystal.phi(w, k) for k in colors)
        rows.append((evec, pvec, crystal.weight(w)))
    return rows


def _source_census(tables, offset, threads=1):
    """Counter of total weights of the sources of the tensor product whose
    factors are given as _word_rows tables; offset is added to every key."""
    first = [r for r in tables[0] if not any(r[0])]
    if len(first) != 1:
        raise AssertionError("factor is not irreducible: %d sources"
                             % len(first))
    _, phi0, wt0 = first[0]

    def walk(i, phis, wt, out):
        if i == len(tables):
            out[(wt + offset).key()] += 1
            return
        for evec, pvec, w in tables[i]:
            if all(e <= p for e, p in zip(evec, phis)):
                nxt = tuple(p - e + q for e, p, q in zip(evec, phis, pvec))
                walk(i + 1, nxt, wt + w, out)

    if threads > 1 and len(tables) > 1 and len(tables[1]) > 1:
        chunks = [tables[1][i::threads] for i in range(threads)]

        def task(chunk):
            out = Counter()
            for evec, pvec, w in chunk:
                if all(e <= p for e, p in zip(evec, phi0)):
                    nxt = tuple(p - e + q
                                for e, p, q in zip(evec, phi0, pvec))
                    walk(2, nxt, wt0 + w, out)
            return out

        total = Counter()
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(task, chunks):
                total.update(part)
        return total

    out = Counter()
    walk(1, phi0, wt0, out)
    return out


def _class_census(cls, lo, hi):
    """Window image of one class, as a Counter over Weight keys.

    Truncation carries each class to a single irreducible (the component of
    the combined highest weight vector), so the census is the canonical
    highest weight once, and empty when the class does not fit the window:
    mu anchors at lo, nu at hi, and the hw shape must lie between them.
    """
    out = Counter()
    if len(cls.mu) + len(cls.nu) > hi - lo + 1:
        return out
    eps = {}
    for i, x in enumerate(cls.mu):
        eps[lo + i] = x
    for i, x in enumerate(cls.nu):
        eps[hi - i] = eps.get(hi - i, 0) - x
    total = Weight(0, eps)
    if cls.hw is not None:
        if cls.hw[-1] < lo - 1 or cls.hw[0] > hi:
            return out
        total = total + crystal.hw_weight(cls.hw)
    out[total.key()] += 1
    return out


def _default_margin(factors, predicted):
    hw_span = [0]
    strip = [0]
    for fac in factors:
        if fac[0] in ("B", "Bdual"):
            hw_span.append(abs(fac[1][0]) + abs(fac[1][-1]))
        else:
            strip.append(len(fac[1]) + len(fac[2]))
    for cls in predicted:
        if cls.hw is not None:
            hw_span.append(abs(cls.hw[0]) + abs(cls.hw[-1]))
        strip.append(len(cls.mu) + len(cls.nu))
    return min(8, max(hw_span) + max(strip) + 2)


def verify_truncated(factors, window, predicted, threads=1):
    """Compare the source census of the tensor product of factors, restricted
    to the letter window, against the window truncation of a predicted
    {class: mult} decomposition.

    Returns a report dict with status "ok", "mismatch" (first discrepancies
    listed) or "window-too-small"; widens the window step by step and retries
    before giving up.
    """
    factors = [_factor_norm(f) for f in factors]
    lo0, hi0 = window
    margin = _default_margin(factors, predicted)
    # The window census only sees the factor multiset, so it always matches
    # the arrangement with every highest weight factor on the left.  When the
    # level-zero factors form a prefix instead, reversal carries each
    # predicted class back to that arrangement; for any other interleaving
    # neither reading is available, so refuse rather than misreport.
    kinds = [f[0] for f in factors]
    cut = kinds.count("Bmn")
    hw_first = all(k == "Bmn" for k in kinds[len(kinds) - cut:])
    l0_first = all(k == "Bmn" for k in kinds[:cut])
    if not (hw_first or l0_first):
        raise ValueError("level-zero factors must form a prefix or a suffix")
    expanded = Counter()
    for cls, mult in predicted.items():
        if hw_first:
            expanded[cls] += mult
        else:
            for sub, m in hw_past_level0(cls.hw or (), cls.mu, cls.nu).items():
                expanded[sub] += m * mult

    def attempt(lo, hi):
        try:
            realized = [_realize_factor(f, lo, hi) for f in factors]
        except (_WindowTooSmall, _TooLarge) as exc:
            return None, exc
        tables = [_word_rows(words, lo, hi) for words, _ in realized]
        offset = Weight(0)
        for _, off in realized:
            offset = offset + off
        lhs = _source_census(tables, offset, threads=threads)
        rhs = Counter()
        for cls, mult in expanded.items():
            part = _class_census(cls, lo, hi)
            for k, c in part.items():
                rhs[k] += c * mult
        return (lhs, rhs), None

    def diffs(lhs, rhs):
        return [k for k in sorted(set(lhs) | set(rhs))
                if lhs.get(k, 0) != rhs.get(k, 0)]

    def mass(lhs, rhs, diff):
        return sum(abs(lhs.get(k, 0) - rhs.get(k, 0)) for k in diff)

    def report(status, lo, hi, retried, lhs, rhs, diff):
        out = {"status": status, "window": [lo, hi], "retried": retried,
               "lhs_components": sum(lhs.values()),
               "predicted_components": sum(rhs.values())}
        if diff:
            out["discrepancies"] = [
                {"weight": {"level": k[0], "eps": [list(p) for p in k[1]]},
                 "lhs": lhs.get(k, 0), "predicted": rhs.get(k, 0)}
                for k in diff[:10]]
        return out

    first = last = None
    detail = None
    for d in range(margin + 1):
        lo, hi = lo0 - d, hi0 + d
        res, err = attempt(lo, hi)
        if err is not None:
            detail = str(err)
            if isinstance(err, _TooLarge):
                break
            continue
        lhs, rhs = res
        diff = diffs(lhs, rhs)
        if not diff:
            return report("ok", lo, hi, d > 0, lhs, rhs, diff)
        last = (mass(lhs, rhs, diff), lo, hi, lhs, rhs, diff)
        if first is None:
            first = last
    if last is None:
        return {"status": "window-too-small", "window": [lo0, hi0],
                "retried": margin > 0, "detail": detail}
    # truncation artifacts shrink as the window grows; a census gap that
    # persists at the widest window is a genuine error in the prediction
    m, lo, hi, lhs, rhs, diff = last
    small = m < first[0]
    return report("window-too-small" if small else "mismatch",
                  lo, hi, (lo, hi) != (lo0, hi0), lhs, rhs, diff)
