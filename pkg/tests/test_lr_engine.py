import itertools
import random

import pytest

from crystal_lr import characters, shapes
from crystal_lr.crystal import Weight
from crystal_lr.lr_engine import (ExtremalClass, MixedLevelError,
                                  class_product, decomposition_to_json,
                                  expr_decompose, extremal_lr,
                                  hw_past_level0, hw_product,
                                  level0_canonical, level0_product,
                                  parse_tensor_expr, pieri_column,
                                  product_decomposition, verify_truncated)


def star(v):
    return tuple(-x for x in reversed(v))


def rand_partition(rng, maxlen=2, maxpart=2):
    parts = [rng.randrange(1, maxpart + 1)
             for _ in range(rng.randrange(0, maxlen + 1))]
    return tuple(sorted(parts, reverse=True))


def rand_gen_partition(rng, n, lo=-2, hi=2):
    return tuple(sorted((rng.randrange(lo, hi + 1) for _ in range(n)),
                        reverse=True))


def test_extremal_class_normalization():
    c = ExtremalClass((2, 1, 0), (1, 0, 0))
    assert c.mu == (2, 1) and c.nu == (1,) and c.hw is None
    assert c.level == 0
    # hw keeps trailing zeros: Lambda_(1,0) has level 2, Lambda_(1) level 1
    assert ExtremalClass(hw=(1, 0)).level == 2
    assert ExtremalClass(hw=(1,)).level == 1
    assert ExtremalClass(hw=(1, 0)) != ExtremalClass(hw=(1,))
    assert ExtremalClass(hw=()).hw is None
    with pytest.raises(ValueError):
        ExtremalClass((0, 1), ())
    with pytest.raises(ValueError):
        ExtremalClass((), (), (1, 2))


def test_extremal_class_uniqueness():
    boxes = [ExtremalClass((1,), ()), ExtremalClass((), (1,)),
             ExtremalClass(hw=(1,))]
    assert len({c: None for c in boxes}) == 3
    assert ExtremalClass((1,), (), (2,)) == ExtremalClass((1, 0), (), (2,))


def test_decomposition_to_json_sorted():
    dec = {ExtremalClass((), (), (2,)): 1, ExtremalClass((1,), (), (1,)): 2,
           ExtremalClass((1,), (1,)): 3}
    out = decomposition_to_json(dec)
    # level first, then hw, mu, nu lexicographically
    assert [e["class"]["hw"] for e in out] == [None, [1], [2]]
    assert out[0] == {"class": {"mu": [1], "nu": [1], "hw": None}, "mult": 3}
    assert out[1]["mult"] == 2


def test_level0_product_frozen():
    assert level0_product((1,), (), (), (1,)) == {
        ExtremalClass((1,), (1,)): 1}
    assert level0_product((1,), (), (1,), ()) == {
        ExtremalClass((2,), ()): 1, ExtremalClass((1, 1), ()): 1}
    two = level0_product((2, 1), (1,), (1,), (1, 1))
    assert two[ExtremalClass((3, 1), (2, 1))] == 1
    assert two[ExtremalClass((2, 2), (1, 1, 1))] == 1
    assert len(two) == 6


def test_level0_product_commutes():
    rng = random.Random(5)
    for _ in range(25):
        mu, nu = rand_partition(rng), rand_partition(rng)
        sigma, tau = rand_partition(rng), rand_partition(rng)
        assert (level0_product(mu, nu, sigma, tau)
                == level0_product(sigma, tau, mu, nu))


def test_hw_product_frozen():
    assert hw_product((0,), (0,), (-3, 3)) == {
        (a, -a): 1 for a in range(4)}
    assert hw_product((1,), (0,), (-2, 2))[(1, 0)] == 1
    dec = hw_product((1, 0), (1,), (-2, 2))
    assert all(sum(z) == 2 for z in dec)
    assert all(-2 <= z[-1] and z[0] <= 2 for z in dec)


def test_hw_product_matches_branch_split():
    rng = random.Random(11)
    for _ in range(10):
        m, n = rng.randrange(1, 3), 1
        mu = rand_gen_partition(rng, m)
        nu = rand_gen_partition(rng, n)
        dec = hw_product(mu, nu, (-5, 5))
        for zeta, c in dec.items():
            assert characters.branch_split(zeta, m, n).get((mu, nu), 0) == c


def test_pieri_frozen():
    assert pieri_column((2,), 3) == {
        ExtremalClass((1,) * a, (), (5 - a,)): 1 for a in range(4)}
    assert pieri_column((1, 0), 0) == {ExtremalClass((), (), (1, 0)): 1}
    assert pieri_column((1, 0), 1) == {
        ExtremalClass((1,), (), (1, 0)): 1,
        ExtremalClass((), (), (2, 0)): 1,
        ExtremalClass((), (), (1, 1)): 1}
    assert pieri_column((1, 0), 1, dual=True) == {
        ExtremalClass((), (1,), (1, 0)): 1,
        ExtremalClass((), (), (0, 0)): 1,
        ExtremalClass((), (), (1, -1)): 1}
    with pytest.raises(ValueError):
        pieri_column((1,), -1)
    with pytest.raises(ValueError):
        pieri_column((0, 1), 1)


def brute_column_classes(lam, a, dual):
    # independent enumeration of the interlacing condition
    n = len(lam)
    out = set()
    for k in range(a + 1):
        size = a - k
        col = (1,) * k
        if not dual:
            ranges = [range(lam[i], (lam[i - 1] if i else lam[0] + size) + 1)
                      for i in range(n)]
            for mu in itertools.product(*ranges):
                if sum(mu) - sum(lam) == size:
                    out.add(ExtremalClass(col, (), mu or None))
        else:
            ranges = [range((lam[i + 1] if i + 1 < n else lam[-1] - size),
                            lam[i] + 1) for i in range(n)]
            for nu in itertools.product(*ranges):
                if sum(lam) - sum(nu) == size:
                    out.add(ExtremalClass((), col, nu or None))
    return out


def test_pieri_strip_support():
    rng = random.Random(17)
    for _ in range(30):
        n = rng.randrange(0, 4)
        lam = rand_gen_partition(rng, n)
        a = rng.randrange(0, 4)
        dual = rng.random() < 0.5
        dec = pieri_column(lam, a, dual=dual)
        assert all(m == 1 for m in dec.values())
        assert set(dec) == brute_column_classes(lam, a, dual)


def test_pieri_matches_hw_past_level0():
    rng = random.Random(23)
    for _ in range(12):
        n = rng.randrange(1, 3)
        lam = rand_gen_partition(rng, n)
        a = rng.randrange(0, 4)
        assert pieri_column(lam, a) == hw_past_level0(lam, (1,) * a, ())
        assert (pieri_column(lam, a, dual=True)
                == hw_past_level0(lam, (), (1,) * a))


def test_hw_past_level0_frozen():
    assert hw_past_level0((2, 1), (), ()) == {
        ExtremalClass((), (), (2, 1)): 1}
    assert hw_past_level0((3,), (1,), ()) == {
        ExtremalClass((1,), (), (3,)): 1, ExtremalClass((), (), (4,)): 1}
    assert hw_past_level0((-2,), (), (1,)) == {
        ExtremalClass((), (1,), (-2,)): 1, ExtremalClass((), (), (-3,)): 1}
    assert hw_past_level0((), (2, 1), (1,)) == {
        ExtremalClass((2, 1), (1,)): 1}


def test_hw_past_level0_duality():
    rng = random.Random(31)
    for _ in range(15):
        lam = rand_gen_partition(rng, rng.randrange(1, 3))
        mu, nu = rand_partition(rng), rand_partition(rng)
        d1 = hw_past_level0(lam, mu, nu)
        d2 = hw_past_level0(star(lam), nu, mu)
        m1 = {(c.nu, c.mu, star(c.hw or ())): v for c, v in d1.items()}
        m2 = {(c.mu, c.nu, tuple(c.hw or ())): v for c, v in d2.items()}
        assert m1 == m2


def gen_box(length, lo, hi, total):
    if length == 0:
        return [()] if total == 0 else []
    out = []

    def rec(i, prefix, acc):
        if i == length:
            if acc == total:
                out.append(tuple(prefix))
            return
        cap = hi if not prefix else min(hi, prefix[-1])
        for v in range(lo, cap + 1):
            rec(i + 1, prefix + [v], acc + v)

    rec(0, [], 0)
    return out


def parts_upto(size, maxpart):
    out = [()]
    for s in range(1, size + 1):
        out.extend(p for p in shapes.partitions_of(s)
                   if p and p[0] <= maxpart)
    return out


def character_identity_holds(rho, sigma, tau, p, q, degree):
    """Multiplicities of the fixed class B_{sigma,tau} (x) B(Lambda_rho),
    summed with Schur weights over all sources, reproduce the product of the
    class character with the geometric correction factors, exactly, up to the
    given total degree in the two finite alphabets."""
    m = len(rho)
    total = m + p + q
    zero = (0,) * total
    target = ExtremalClass(sigma, tau, rho or None)

    def sx(gen):
        return characters.lp_lift(characters.laurent_schur(gen), total, 0)

    def spart(part, nvars, offset):
        conj = shapes.conjugate(part)
        if len(conj) > nvars:
            return None
        if nvars == 0:
            return {zero: 1}
        conj = conj + (0,) * (nvars - len(conj))
        return characters.lp_lift(characters.laurent_schur(conj), total,
                                  offset)

    def cut(poly):
        return {e: c for e, c in poly.items() if sum(e[m:]) <= degree}

    lhs = {}
    lob = (rho[-1] if rho else 0) - degree - 1
    hib = (rho[0] if rho else 0) + degree + 1
    for mu in parts_upto(degree, p):
        ymono = spart(mu, p, m)
        if ymono is None:
            continue
        for nu in parts_upto(degree - sum(mu), q):
            wmono = spart(nu, q, m + p)
            if wmono is None:
                continue
            s = sum(rho) + sum(sigma) - sum(tau) - sum(mu) + sum(nu)
            for lam in gen_box(m, lob, hib, s):
                c = hw_past_level0(lam, mu, nu).get(target, 0)
                if not c:
                    continue
                term = characters.lp_mul(characters.lp_mul(sx(lam), ymono),
                                         wmono)
                lhs = characters.lp_add(lhs, characters.lp_scale(term, c))

    rhs = characters.lp_mul(characters.lp_mul(sx(rho), spart(sigma, p, m)),
                            spart(tau, q, m + p))
    for i in range(m):
        for j in range(p):
            geom = {tuple((-d if t == i else (d if t == m + j else 0))
                          for t in range(total)): 1
                    for d in range(degree + 1)}
            rhs = characters.lp_mul(rhs, geom)
    for i in range(m):
        for k in range(q):
            geom = {tuple((d if t == i or t == m + p + k else 0)
                          for t in range(total)): 1
                    for d in range(degree + 1)}
            rhs = characters.lp_mul(rhs, geom)
    return cut(lhs) == cut(rhs)


def test_character_identity():
    cases = [
        ((1,), (), (), 1, 1, 3),
        ((0,), (1,), (), 1, 1, 2),
        ((1, 0), (), (), 1, 1, 2),
        ((1,), (1,), (1,), 2, 2, 2),
        ((2, -1), (1,), (), 2, 1, 2),
        ((-1,), (), (1,), 1, 2, 2),
    ]
    for rho, sigma, tau, p, q, degree in cases:
        assert character_identity_holds(rho, sigma, tau, p, q, degree)


def test_extremal_lr_degenerations():
    # pure highest weight factors
    got = extremal_lr((1, 0), (), (), (0,), (), (), (-2, 2))
    want = {ExtremalClass((), (), z): c
            for z, c in hw_product((1, 0), (0,), (-2, 2)).items()}
    assert got == want
    # trivial second / first factor
    assert extremal_lr((1,), (2,), (1,), (), (), (), (-3, 3)) == {
        ExtremalClass((2,), (1,), (1,)): 1}
    assert extremal_lr((), (), (), (1,), (2,), (1,), (-3, 3)) == {
        ExtremalClass((2,), (1,), (1,)): 1}
    # no second highest weight factor: move, then multiply level-0 parts
    lam, mu, nu, sigma, tau = (1,), (1,), (), (1,), (1,)
    got = extremal_lr(lam, mu, nu, (), sigma, tau, (-9, 9))
    want = {}
    for cls, c in hw_past_level0(lam, sigma, tau).items():
        for lz, c2 in level0_product(mu, nu, cls.mu, cls.nu).items():
            key = ExtremalClass(lz.mu, lz.nu, cls.hw)
            want[key] = want.get(key, 0) + c * c2
    assert got == want


def test_extremal_lr_frozen():
    assert extremal_lr((0,), (1,), (), (0,), (), (), (-2, 2)) == {
        ExtremalClass((1,), (), (a, -a)): 1 for a in range(3)}


def test_extremal_lr_duality():
    rng = random.Random(41)
    for _ in range(6):
        lam, rho = rand_gen_partition(rng, 1), rand_gen_partition(rng, 1)
        mu, nu = rand_partition(rng, 1), rand_partition(rng, 1)
        sigma, tau = rand_partition(rng, 1, 1), rand_partition(rng, 1, 1)
        d1 = extremal_lr(lam, mu, nu, rho, sigma, tau, (-6, 6))
        d2 = extremal_lr(star(lam), nu, mu, star(rho), tau, sigma, (-6, 6))
        m1 = {(c.nu, c.mu, star(c.hw or ())): v for c, v in d1.items()}
        m2 = {(c.mu, c.nu, tuple(c.hw or ())): v for c, v in d2.items()}
        assert m1 == m2


def test_extremal_lr_associative():
    boxes = [{ExtremalClass((1,), ()): 1}, {ExtremalClass((), (1,)): 1},
             {ExtremalClass(hw=(1,)): 1}]
    win = (-6, 6)

    def inner(dec):
        # a single box moves intermediate hw entries by at most one, so
        # classes one step inside the window are complete on either side
        return {c: m for c, m in dec.items()
                if c.hw is None or (c.hw[0] <= win[1] - 1
                                    and c.hw[-1] >= win[0] + 1)}

    for d1, d2, d3 in itertools.product(boxes, repeat=3):
        left = product_decomposition(product_decomposition(d1, d2, win), d3,
                                     win)
        right = product_decomposition(d1, product_decomposition(d2, d3, win),
                                      win)
        assert inner(left) == inner(right)


def test_class_product_noncommutative():
    dualcol = ExtremalClass((), (1,))
    vac = ExtremalClass(hw=(0,))
    assert class_product(dualcol, vac, (-4, 4)) == {
        ExtremalClass((), (1,), (0,)): 1}
    assert class_product(vac, dualcol, (-4, 4)) == {
        ExtremalClass((), (1,), (0,)): 1,
        ExtremalClass((), (), (-1,)): 1}


def test_level0_canonical():
    assert level0_canonical(Weight(0)) == ((), ())
    assert level0_canonical(Weight(0, {5: 1, -2: -1})) == ((1,), (1,))
    assert level0_canonical(Weight(0, {1: 2, 3: 1, 7: -1})) == ((2, 1), (1,))
    with pytest.raises(ValueError):
        level0_canonical(Weight(1, {0: 1}))
    # invariant under relocating the coefficients
    rng = random.Random(47)
    for _ in range(20):
        coeffs = [rng.randrange(-2, 3) for _ in range(4)]
        spots1 = rng.sample(range(-6, 7), 4)
        spots2 = rng.sample(range(-6, 7), 4)
        w1 = Weight(0, dict(zip(spots1, coeffs)))
        w2 = Weight(0, dict(zip(spots2, coeffs)))
        assert level0_canonical(w1) == level0_canonical(w2)


def test_parse_tensor_expr():
    assert parse_tensor_expr("B(2,0) * Bmn(1;1) * Bdual(1,1) * Bcol(2)") == [
        ("B", (2, 0)), ("Bmn", (1,), (1,)), ("Bdual", (1, 1)),
        ("Bmn", (1, 1), ())]
    assert parse_tensor_expr("Bmn(;1)") == [("Bmn", (), (1,))]
    assert parse_tensor_expr(" B(-1) ") == [("B", (-1,))]
    for bad in ["", "B(1", "Bx(1)", "Bmn(1)", "B()", "Bcol(x)",
                "B(1,2)"]:
        with pytest.raises(ValueError):
            parse_tensor_expr(bad)


def test_expr_decompose():
    dec = expr_decompose([("B", (2,)), ("Bcol", 2)], (-6, 6))
    assert dec == pieri_column((2,), 2)
    with pytest.raises(MixedLevelError):
        expr_decompose([("B", (0,)), ("Bdual", (0,))], (-3, 3))


def test_verify_pieri_and_self():
    rep = verify_truncated([("B", (1,)), ("Bcol", 2)], (-4, 4),
                           pieri_column((1,), 2))
    assert rep["status"] == "ok" and not rep["retried"]
    rep2 = verify_truncated([("B", (1,)), ("Bcol", 2)], (-4, 4),
                            pieri_column((1,), 2), threads=2)
    assert rep2 == rep
    rep = verify_truncated([("Bmn", (1,), (1,))], (-2, 2),
                           {ExtremalClass((1,), (1,)): 1})
    assert rep["status"] == "ok"


def test_verify_level_one_pair():
    predicted = {ExtremalClass((1,) * a, (1,) * (a + 1)): 1
                 for a in range(4)}
    rep = verify_truncated([("B", (0,)), ("Bdual", (1,))], (-3, 3), predicted)
    assert rep["status"] == "ok"
    assert rep["retried"] and rep["window"] == [-4, 4]
    flipped = {ExtremalClass((1,) * (a + 1), (1,) * a): 1 for a in range(4)}
    rep = verify_truncated([("B", (1,)), ("Bdual", (0,))], (-4, 4), flipped)
    assert rep["status"] == "ok" and not rep["retried"]


def test_verify_level0_prefix():
    win = (-2, 2)
    rep = verify_truncated([("Bmn", (1,), ()), ("B", (0,)), ("B", (0,))],
                           win, extremal_lr((0,), (1,), (), (0,), (), (),
                                            win))
    assert rep["status"] == "ok" and not rep["retried"]
    rep = verify_truncated([("Bmn", (), (1,)), ("B", (0,))], (-3, 3),
                           {ExtremalClass((), (1,), (0,)): 1})
    assert rep["status"] == "ok"
    with pytest.raises(ValueError):
        verify_truncated([("B", (0,)), ("Bmn", (1,), ()), ("B", (0,))],
                         (-3, 3), {ExtremalClass((1,), (), (0, 0)): 1})


def test_verify_mismatch_and_too_small():
    rep = verify_truncated([("Bcol", 1), ("Bcol", 1)], (-2, 2),
                           {ExtremalClass((2,), ()): 1})
    assert rep["status"] == "mismatch"
    assert rep["lhs_components"] == 2 and rep["predicted_components"] == 1
    assert any(d["lhs"] == 1 and d["predicted"] == 0
               for d in rep["discrepancies"])
    rep = verify_truncated([("B", (20,))], (-1, 1),
                           {ExtremalClass(hw=(20,)): 1})
    assert rep["status"] == "window-too-small"
    assert "letters" in rep["detail"]
