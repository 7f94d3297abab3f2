"""Dense univariate polynomials over a :class:`~cuspidal_lab.fields.FieldSpec`.

A polynomial is a list of raw field coefficients, lowest degree first, with no
trailing zeros (the zero polynomial is ``[]``).  Everything here works through
the field's raw operations so the same code serves prime fields, extensions and
the rationals.  Factorization (distinct-degree + equal-degree splitting) needs a
finite field of odd characteristic.
"""

import random


def trim(a, F):
    while a and F.is_zero(a[-1]):
        a.pop()
    return a


def degree(a):
    return len(a) - 1


def add(a, b, F):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = F.add(out[i], c)
    return trim(out, F)


def sub(a, b, F):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else F.zero
        y = b[i] if i < len(b) else F.zero
        out.append(F.sub(x, y))
    return trim(out, F)


def scale(a, c, F):
    if F.is_zero(c):
        return []
    return trim([F.mul(x, c) for x in a], F)


def mul(a, b, F):
    if not a or not b:
        return []
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if F.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return trim(out, F)


def divmod_(a, b, F):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    inv_lc = F.inv(b[-1])
    db = len(b) - 1
    q = [F.zero] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if F.is_zero(c):
            continue
        c = F.mul(c, inv_lc)
        q[i - db] = c
        for j, y in enumerate(b):
            a[i - db + j] = F.sub(a[i - db + j], F.mul(c, y))
    return trim(q, F), trim(a[:db], F)


def mod(a, b, F):
    return divmod_(a, b, F)[1]


def monic(a, F):
    if not a:
        return []
    return scale(a, F.inv(a[-1]), F)


def gcd(a, b, F):
    a, b = list(a), list(b)
    while b:
        a, b = b, mod(a, b, F)
    return monic(a, F)


def xgcd(a, b, F):
    """Return (g, s, t) with s*a + t*b = g and g monic."""
    r0, r1 = list(a), list(b)
    s0, s1 = [F.one], []
    t0, t1 = [], [F.one]
    while r1:
        q, r = divmod_(r0, r1, F)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, F), F)
        t0, t1 = t1, sub(t0, mul(q, t1, F), F)
    if not r0:
        return [], [], []
    c = F.inv(r0[-1])
    return scale(r0, c, F), scale(s0, c, F), scale(t0, c, F)


def derivative(a, F):
    return trim([F.mul(F.from_int(i), a[i]) for i in range(1, len(a))], F)


def evaluate(a, x, F):
    acc = F.zero
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


def powmod(a, n, m, F):
    result = [F.one]
    base = mod(a, m, F)
    while n:
        if n & 1:
            result = mod(mul(result, base, F), m, F)
        n >>= 1
        if n:
            base = mod(mul(base, base, F), m, F)
    return result


def squarefree_part(a, F):
    """a / gcd(a, a'), made monic.

    Correct whenever no irreducible factor occurs with multiplicity divisible by
    the characteristic; callers guarantee char > deg(a) or char 0.
    """
    if len(a) <= 1:
        return monic(a, F)
    g = gcd(a, derivative(a, F), F)
    q, r = divmod_(a, g, F)
    assert not r
    return monic(q, F)


def is_squarefree(a, F):
    return len(gcd(a, derivative(a, F), F)) <= 1


def _prime_factors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _frobenius_power(m, k, F):
    """x^(q^k) mod m for the finite field F of size q."""
    x = [F.zero, F.one]
    r = x
    for _ in range(k):
        r = powmod(r, F.size, m, F)
    return r


def is_irreducible(m, F):
    """Rabin's test over a finite field; returns (flag, factor_or_None)."""
    m = monic(m, F)
    n = degree(m)
    if n < 1:
        return False, None
    if n == 1:
        return True, None
    x = [F.zero, F.one]
    if _frobenius_power(m, n, F) != x:
        return False, _find_factor(m, F)
    for ell in _prime_factors(n):
        g = gcd(m, sub(_frobenius_power(m, n // ell, F), x, F), F)
        if len(g) > 1:
            return False, _find_factor(m, F)
    return True, None


def _find_factor(m, F):
    facs = factor(m, F)
    return facs[0][0] if facs else None


def distinct_degree(a, F):
    """Split a squarefree monic polynomial into [(product of degree-d factors, d)]."""
    out = []
    rest = monic(a, F)
    x = [F.zero, F.one]
    h = list(x)
    d = 0
    while degree(rest) >= 2 * (d + 1):
        d += 1
        h = powmod(h, F.size, rest, F)
        g = gcd(rest, sub(h, x, F), F)
        if len(g) > 1:
            out.append((g, d))
            rest = divmod_(rest, g, F)[0]
            h = mod(h, rest, F)
    if degree(rest) >= 1:
        out.append((rest, degree(rest)))
    return out


def equal_degree(a, d, F, rng=None):
    """Cantor-Zassenhaus splitting of a product of distinct degree-d irreducibles."""
    a = monic(a, F)
    n = degree(a)
    if n == d:
        return [a]
    if F.characteristic == 2:
        raise NotImplementedError("equal-degree splitting in characteristic 2")
    rng = rng or random.Random(0)
    e = (F.size ** d - 1) // 2
    while True:
        r = [F.random(rng) for _ in range(n)]
        r = trim(r, F)
        if degree(r) < 1:
            continue
        g = gcd(a, r, F)
        if 1 < len(g) < len(a):
            break
        b = sub(powmod(r, e, a, F), [F.one], F)
        g = gcd(a, b, F)
        if 1 < len(g) < len(a):
            break
    h = divmod_(a, g, F)[0]
    return equal_degree(g, d, F, rng) + equal_degree(h, d, F, rng)


def squarefree_decomposition(a, F):
    """Yun's algorithm: [(g_i, i)] with a = lc * prod g_i^i, g_i squarefree, coprime."""
    a = monic(a, F)
    if degree(a) < 1:
        return []
    da = derivative(a, F)
    if not da:
        raise NotImplementedError("p-th power factors need char > degree")
    b = gcd(a, da, F)
    c = divmod_(a, b, F)[0]
    d = sub(divmod_(da, b, F)[0], derivative(c, F), F)
    out, i = [], 1
    while degree(c) >= 1:
        y = gcd(c, d, F)
        if degree(y) >= 1:
            out.append((y, i))
        c = divmod_(c, y, F)[0]
        d = sub(divmod_(d, y, F)[0], derivative(c, F), F)
        i += 1
    return out


def factor(a, F, rng=None):
    """Monic irreducible factorization [(factor, multiplicity)] over a finite field.

    Factors are sorted by (degree, coefficients) for determinism.
    """
    out = []
    for block, mult in squarefree_decomposition(a, F):
        for part, d in distinct_degree(block, F):
            for fac in equal_degree(part, d, F, rng):
                out.append((fac, mult))
    out.sort(key=lambda fm: (degree(fm[0]), [F.sort_key(c) for c in reversed(fm[0])], fm[1]))
    return out


def roots(a, F):
    return sorted((F.neg(fac[0]) for fac, _ in factor(a, F) if degree(fac) == 1), key=F.sort_key)
