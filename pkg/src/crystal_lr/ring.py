"""The ring of z-polynomials and its Ore extension by the shift operators
s^+/s^-, with the derivation calculus (p, h, s families) acting on it.

An RElem is a dict mapping z-monomials to coefficients; a z-monomial is a
weakly decreasing tuple of integer indices (z_0 is a variable, nothing
vanishes or collapses).  A DElem key is (z-monomial, s^+ multiset, s^-
multiset) in normal order: all z's left of all s's, s^+ and s^- commuting.

Sign bookkeeping, fixed once: the symbol s^+_n acts as the derivation
gamma^+_n = (-1)^(n-1) sum_k z_{k-n} d/dz_k (indices drop), s^-_n raises
them; the Schur-shape operator family s_operator(+1, -) raising z-Schur
indices is therefore assembled from p_action(-1, -) compositions and vice
versa.
"""

import itertools
import math
from fractions import Fraction
from functools import cache

from .shapes import conjugate, mu_star, normalize, partitions_of


# ---------------------------------------------------------------- RElem

def r_zero():
    return {}


def r_one():
    return {(): 1}


def r_monomial(ks, c=1):
    return {tuple(sorted(ks, reverse=True)): c} if c else {}


def _bump(d, key, c):
    v = d.get(key, 0) + c
    if v:
        d[key] = v
    elif key in d:
        del d[key]


def r_add(f, g):
    out = dict(f)
    for k, c in g.items():
        _bump(out, k, c)
    return out


def r_sub(f, g):
    out = dict(f)
    for k, c in g.items():
        _bump(out, k, -c)
    return out


def r_scale(f, c):
    return {k: c * v for k, v in f.items()} if c else {}


def r_mul(f, g):
    out = {}
    for k1, c1 in f.items():
        for k2, c2 in g.items():
            _bump(out, tuple(sorted(k1 + k2, reverse=True)), c1 * c2)
    return out


def r_degree(f, n):
    for k in f:
        if len(k) != n:
            raise ValueError("element not homogeneous of degree %d" % n)
    return n


# ---------------------------------------------------------------- z-Schur

def _perm_sign(p):
    s = 1
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s = -s
    return s


def z_schur(lam):
    """det(z_{lam_i - i + j}) over the full permutation expansion."""
    n = len(lam)
    out = {}
    for p in itertools.permutations(range(n)):
        ks = tuple(lam[i] - i + p[i] for i in range(n))
        _bump(out, tuple(sorted(ks, reverse=True)), _perm_sign(p))
    return out


def z_skew_schur(lam, mu):
    """det(z_{lam_i - mu_j - i + j}); equal-length index vectors."""
    n = len(lam)
    if len(mu) != n:
        raise ValueError("length mismatch")
    out = {}
    for p in itertools.permutations(range(n)):
        ks = tuple(lam[i] - mu[p[i]] - i + p[i] for i in range(n))
        _bump(out, tuple(sorted(ks, reverse=True)), _perm_sign(p))
    return out


def expand_in_z_schur(f, n, cap=10000):
    """Write a homogeneous element as a finite z-Schur combination by
    eliminating the lexicographically smallest monomial; every other
    monomial of a z-Schur element dominates its label, so each step is
    forced.  Monomials like z_1 z_0 expand to infinitely many z-Schur
    terms; the cap turns that into an error."""
    r_degree(f, n)
    work = dict(f)
    out = {}
    for _ in range(cap):
        if not work:
            return out
        mu = min(work)
        c = work[mu]
        out[mu] = c
        work = r_sub(work, r_scale(z_schur(mu), c))
    raise ValueError("not a finite z-Schur combination within cap=%d" % cap)


# ---------------------------------------------------------------- DElem

def d_zero():
    return {}


def d_one():
    return {((), (), ()): 1}


def d_from_r(f):
    return {(k, (), ()): c for k, c in f.items()}


def d_add(a, b):
    out = dict(a)
    for k, c in b.items():
        _bump(out, k, c)
    return out


def d_sub(a, b):
    out = dict(a)
    for k, c in b.items():
        _bump(out, k, -c)
    return out


def d_scale(a, c):
    return {k: c * v for k, v in a.items()} if c else {}


def _s_times(sign, n, d):
    """Left-multiply by the symbol s^sign_n, normal ordering as it goes:
    s z_k = z_k s + (-1)^(n-1) z_{k -+ n}."""
    eps = 1 if n % 2 else -1
    shift = -n if sign > 0 else n
    out = {}
    for (z, sp, sm), c in d.items():
        if sign > 0:
            key = (z, tuple(sorted(sp + (n,))), sm)
        else:
            key = (z, sp, tuple(sorted(sm + (n,))))
        _bump(out, key, c)
        for i in range(len(z)):
            zz = tuple(sorted(z[:i] + (z[i] + shift,) + z[i + 1:],
                              reverse=True))
            _bump(out, (zz, sp, sm), c * eps)
    return out


def d_multiply(a, b):
    out = {}
    for (z1, sp1, sm1), c1 in a.items():
        for (z2, sp2, sm2), c2 in b.items():
            carrier = {(z2, sp2, sm2): c1 * c2}
            for n in sm1:
                carrier = _s_times(-1, n, carrier)
            for n in sp1:
                carrier = _s_times(+1, n, carrier)
            for (z, sp, sm), c in carrier.items():
                key = (tuple(sorted(z1 + z, reverse=True)), sp, sm)
                _bump(out, key, c)
    return out


# ---------------------------------------------------------------- actions

def p_action(sign, n, f):
    """gamma^sign_n: the derivation with gamma(z_k) = (-1)^(n-1) z_{k -+ n}."""
    if n < 1:
        raise ValueError("n must be positive")
    eps = 1 if n % 2 else -1
    shift = -n if sign > 0 else n
    out = {}
    for z, c in f.items():
        for i in range(len(z)):
            zz = tuple(sorted(z[:i] + (z[i] + shift,) + z[i + 1:],
                              reverse=True))
            _bump(out, zz, c * eps)
    return out


def apply_delem(d, f):
    """Act on an RElem: the s^+ symbols apply gamma^+, s^- apply gamma^-,
    then the z-part multiplies."""
    total = {}
    for (z, sp, sm), c in d.items():
        g = f
        for n in sm:
            g = p_action(-1, n, g)
        for n in sp:
            g = p_action(+1, n, g)
        for k, v in r_mul(r_monomial(z), g).items():
            _bump(total, k, c * v)
    intify = {}
    for k, v in total.items():
        if isinstance(v, Fraction):
            if v.denominator != 1:
                raise ValueError("non-integral action")
            v = int(v)
        if v:
            intify[k] = v
    return intify


@cache
def sym_character(lam, rho):
    """Character value of the symmetric group via border-strip recursion on
    beta numbers."""
    lam = normalize(lam)
    rho = normalize(rho)
    if sum(lam) != sum(rho):
        raise ValueError("size mismatch")
    if not rho:
        return 1
    n = len(lam) if lam else 1
    betas = tuple(lam[i] + n - 1 - i for i in range(len(lam)))
    if not betas:
        betas = (0,)
    r = rho[0]
    total = 0
    bset = set(betas)
    for b in betas:
        nb = b - r
        if nb < 0 or nb in bset:
            continue
        crossings = sum(1 for x in betas if nb < x < b)
        new = sorted(bset - {b} | {nb}, reverse=True)
        m = len(new)
        nlam = normalize(tuple(new[i] - (m - 1 - i) for i in range(m)))
        total += (-1 if crossings % 2 else 1) * sym_character(nlam, rho[1:])
    return total


def _z_rho(rho):
    out = 1
    counts = {}
    for r in rho:
        counts[r] = counts.get(r, 0) + 1
    for r, m in counts.items():
        out *= r ** m
        for i in range(1, m + 1):
            out *= i
    return out


def s_operator(sign, mu):
    """The Schur-shape operator: expand the shape into power sums over the
    rationals and compose p_action maps of the opposite symbol family (the
    sign names the direction z-Schur indices move).  Results are asserted
    integral."""
    mu = normalize(mu)
    plan = []
    for rho in partitions_of(sum(mu)):
        chi = sym_character(mu, rho)
        if chi:
            plan.append((Fraction(chi, _z_rho(rho)), rho))
    psign = -sign
    den = math.lcm(*(c.denominator for c, _ in plan)) if plan else 1
    plan = [(int(c * den), rho) for c, rho in plan]

    def act(f):
        total = {}
        for coeff, rho in plan:
            g = f
            for r in rho:
                g = p_action(psign, r, g)
            for k, v in g.items():
                _bump(total, k, coeff * v)
        out = {}
        for k, v in total.items():
            q, r = divmod(v, den)
            if r:
                raise ValueError("non-integral s-operator result")
            if q:
                out[k] = q
        return out

    return act


def h_operator(sign, n):
    if n == 0:
        return lambda f: dict(f)
    return s_operator(sign, (n,))


def h_delem(sign, n):
    """The single-row operator as a DElem: sum over cycle types with
    rational coefficients, in the opposite symbol family."""
    if n == 0:
        return d_one()
    out = {}
    for rho in partitions_of(n):
        key = tuple(sorted(rho))
        if sign > 0:
            _bump(out, ((), (), key), Fraction(1, _z_rho(rho)))
        else:
            _bump(out, ((), key, ()), Fraction(1, _z_rho(rho)))
    return out


def omega(a):
    """z_k -> z_{-k}, s^+ <-> s^-; involutive ring map."""
    out = {}
    for (z, sp, sm), c in a.items():
        zz = tuple(sorted((-k for k in z), reverse=True))
        _bump(out, (zz, sm, sp), c)
    return out


def omega_r(f):
    out = {}
    for z, c in f.items():
        _bump(out, tuple(sorted((-k for k in z), reverse=True)), c)
    return out


def annihilator_relations(n):
    """Generators of the annihilator of degree-n z-Schur span: single-row
    operators past the degree, and the mixed products reducing to a shorter
    row."""
    rels = []
    for m in range(n + 1, n + 4):
        rels.append(h_delem(+1, m))
        rels.append(h_delem(-1, m))
    for i in range(0, n + 1):
        prod = d_multiply(h_delem(+1, n), h_delem(-1, i))
        rels.append(d_sub(prod, h_delem(+1, n - i)))
    return rels


# ---------------------------------------------------------------- json

def relem_to_json(f):
    return [{"z": list(k), "c": c} for k, c in sorted(f.items())]


def delem_to_json(a):
    return [{"z": list(z), "splus": list(sp), "sminus": list(sm), "c": c}
            for (z, sp, sm), c in sorted(a.items())]
