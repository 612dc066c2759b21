"""Exact sparse multivariate polynomials over the rationals.

A monomial is a tuple of ``(variable, exponent)`` pairs sorted by variable
index, with no zero exponents.  A polynomial maps monomials to nonzero
``Fraction`` coefficients and carries its arity (the number of
indeterminates it lives over).  Values are never mutated after construction.
"""
from __future__ import annotations

import heapq
import math
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Callable, Iterable, Mapping, Sequence

Monomial = tuple  # tuple[tuple[int, int], ...]

ONE_MONO: Monomial = ()
NEG_INF = float("-inf")


class ArityError(ValueError):
    pass


class NotDivisible(ArithmeticError):
    """Exact division failed; ``remainder`` is the partial remainder at the
    point the leading term stopped being divisible."""

    def __init__(self, dividend, divisor, remainder):
        self.dividend = dividend
        self.divisor = divisor
        self.remainder = remainder
        super().__init__(f"{divisor} does not divide {dividend}")


class NoRoot(ArithmeticError):
    def __init__(self, poly, d, why=""):
        self.poly = poly
        self.d = d
        self.why = why
        msg = f"{poly} is not a {d}-th power over Q"
        super().__init__(msg + (f" ({why})" if why else ""))


# -- monomials ---------------------------------------------------------------

def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    out = dict(a)
    for v, e in b:
        out[v] = out.get(v, 0) + e
    return tuple(sorted(out.items()))


def mono_pow(a: Monomial, k: int) -> Monomial:
    if k == 0:
        return ONE_MONO
    return tuple((v, e * k) for v, e in a)


def mono_div(a: Monomial, b: Monomial):
    """a / b as a monomial, or None when b does not divide a."""
    if not b:
        return a
    out = dict(a)
    for v, e in b:
        have = out.get(v, 0)
        if have < e:
            return None
        if have == e:
            del out[v]
        else:
            out[v] = have - e
    return tuple(sorted(out.items()))


def mono_degree(a: Monomial, weights: Sequence[int] | None = None) -> int:
    if weights is None:
        return sum(e for _, e in a)
    return sum(weights[v] * e for v, e in a)


@lru_cache(maxsize=1 << 16)
def grlex_key(a: Monomial):
    """Sort key for graded lexicographic order with x1 > x2 > ... ."""
    return (sum(e for _, e in a), tuple((-v, e) for v, e in a))


def _as_fraction(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


# -- polynomials -------------------------------------------------------------

class Polynomial:
    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Monomial, object] | None = None):
        self.nvars = nvars
        clean = {}
        if terms:
            for m, c in terms.items():
                c = _as_fraction(c)
                if c:
                    clean[m] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms):
        # terms already clean: no zero coefficients, Fraction values
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    # constructors
    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, nvars, c):
        return cls(nvars, {ONE_MONO: c})

    @classmethod
    def one(cls, nvars):
        return cls._raw(nvars, {ONE_MONO: Fraction(1)})

    @classmethod
    def var(cls, nvars, i, power=1):
        if not 0 <= i < nvars:
            raise ArityError(f"variable index {i} out of range for arity {nvars}")
        if power == 0:
            return cls.one(nvars)
        return cls._raw(nvars, {((i, power),): Fraction(1)})

    @classmethod
    def monomial(cls, nvars, mono: Monomial, c=1):
        return cls(nvars, {tuple(mono): c})

    # basic queries
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and ONE_MONO in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms.get(ONE_MONO, Fraction(0))

    def coeff(self, mono: Monomial) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def degree(self, weights=None):
        """Total (or weighted) degree; -inf for the zero polynomial."""
        if not self.terms:
            return NEG_INF
        return max(mono_degree(m, weights) for m in self.terms)

    def degree_in(self, v: int):
        if not self.terms:
            return NEG_INF
        return max((e for m in self.terms for w, e in m if w == v), default=0)

    def variables(self) -> set:
        return {v for m in self.terms for v, _ in m}

    def sorted_terms(self):
        """Terms in decreasing graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=grlex_key)

    def leading_coeff(self) -> Fraction:
        return self.terms[self.leading_monomial()]

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(1 / self.leading_coeff())

    def is_homogeneous(self, weights=None) -> bool:
        return len({mono_degree(m, weights) for m in self.terms}) <= 1

    # arithmetic
    def _check(self, other):
        if other.nvars != self.nvars:
            raise ArityError(f"arity mismatch: {self.nvars} vs {other.nvars}")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.const(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other.terms) > len(self.terms):
            self, other = other, self
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c) -> "Polynomial":
        c = _as_fraction(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw(self.nvars, {m: a * c for m, a in self.terms.items()})

    def mul_term(self, mono: Monomial, c) -> "Polynomial":
        c = _as_fraction(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw(
            self.nvars, {mono_mul(m, mono): a * c for m, a in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        if len(self.terms) == 1:
            (m, c), = self.terms.items()
            return other.mul_term(m, c)
        if len(other.terms) == 1:
            (m, c), = other.terms.items()
            return self.mul_term(m, c)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial._raw(self.nvars, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.terms == ({ONE_MONO: Fraction(other)} if other else {})
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    # calculus and structure
    def diff(self, v: int) -> "Polynomial":
        out = {}
        for m, c in self.terms.items():
            for w, e in m:
                if w == v:
                    rest = tuple((x, f) if x != v else (x, f - 1) for x, f in m)
                    rest = tuple(p for p in rest if p[1])
                    out[rest] = c * e
                    break
        return Polynomial._raw(self.nvars, out)

    def coeffs_in(self, v: int) -> dict:
        """View as a univariate polynomial in ``v``: exponent -> coefficient."""
        groups: dict = {}
        for m, c in self.terms.items():
            e = 0
            rest = []
            for w, f in m:
                if w == v:
                    e = f
                else:
                    rest.append((w, f))
            groups.setdefault(e, {})[tuple(rest)] = c
        return {e: Polynomial._raw(self.nvars, t) for e, t in groups.items()}

    def monomial_content(self) -> Monomial:
        """Largest monomial dividing every term."""
        if not self.terms:
            return ONE_MONO
        it = iter(self.terms)
        common = dict(next(it))
        for m in it:
            md = dict(m)
            for v in list(common):
                e = min(common[v], md.get(v, 0))
                if e:
                    common[v] = e
                else:
                    del common[v]
            if not common:
                break
        return tuple(sorted(common.items()))

    def div_monomial(self, mono: Monomial) -> "Polynomial":
        out = {}
        for m, c in self.terms.items():
            q = mono_div(m, mono)
            if q is None:
                raise NotDivisible(self, Polynomial.monomial(self.nvars, mono), self)
            out[q] = c
        return Polynomial._raw(self.nvars, out)

    def format(self, names: Callable[[int], str] | None = None) -> str:
        if names is None:
            names = default_name
        if not self.terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms():
            factors = [names(v) + (f"^{e}" if e > 1 else "") for v, e in m]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = str(mag) + "*" + "*".join(factors)
            pieces.append(("-" if c < 0 else "+", body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Polynomial({self.nvars}, {self.format()!r})"


def default_name(i: int) -> str:
    return f"x{i + 1}"


class PolynomialRing:
    """The commutative polynomial algebra K[x1..xn]; every variable has degree 1."""

    kind = "poly"
    bound = None

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("need at least one variable")
        self.n = n
        self.nvars = n
        self.weights = (1,) * n

    def gen(self, i: int) -> Polynomial:
        return Polynomial.var(self.n, i)

    def var_name(self, i: int) -> str:
        return default_name(i)

    def zero(self):
        return Polynomial.zero(self.n)

    def one(self):
        return Polynomial.one(self.n)

    def __eq__(self, other):
        return isinstance(other, PolynomialRing) and other.n == self.n

    def __hash__(self):
        return hash(("poly", self.n))

    def __repr__(self):
        return f"PolynomialRing({self.n})"


# -- division, gcd, fractions --------------------------------------------------

def divide_exact(p: Polynomial, q: Polynomial) -> Polynomial:
    """Return p / q, raising NotDivisible when q does not divide p."""
    p._check(q)
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lm_q = q.leading_monomial()
    lc_q = q.terms[lm_q]
    if len(q.terms) == 1:
        out, rest = {}, {}
        for m, c in p.terms.items():
            r = mono_div(m, lm_q)
            if r is None:
                rest[m] = c
            else:
                out[r] = c / lc_q
        if rest:
            raise NotDivisible(p, q, Polynomial._raw(p.nvars, rest))
        return Polynomial._raw(p.nvars, out)
    rem = dict(p.terms)
    quot = {}
    q_rest = [(m, c) for m, c in q.terms.items() if m != lm_q]
    # lazy max-heap of remainder monomials; stale entries are skipped
    heap = [_Desc(m) for m in rem]
    heapq.heapify(heap)
    while rem:
        lm = heapq.heappop(heap).mono
        if lm not in rem:
            continue
        t = mono_div(lm, lm_q)
        if t is None:
            raise NotDivisible(p, q, Polynomial._raw(p.nvars, dict(rem)))
        c = rem.pop(lm) / lc_q
        quot[t] = c
        for m, a in q_rest:
            mm = mono_mul(m, t)
            old = rem.get(mm)
            s = (old or 0) - a * c
            if s:
                rem[mm] = s
                if old is None:
                    heapq.heappush(heap, _Desc(mm))
            else:
                rem.pop(mm, None)
    return Polynomial._raw(p.nvars, quot)


class _Desc:
    # heap entry ordering monomials by decreasing grlex
    __slots__ = ("mono", "key")

    def __init__(self, mono):
        self.mono = mono
        self.key = grlex_key(mono)

    def __lt__(self, other):
        return self.key > other.key


def divides(q: Polynomial, p: Polynomial):
    """Quotient p / q when exact, else None."""
    try:
        return divide_exact(p, q)
    except NotDivisible:
        return None


def _prem(a: Polynomial, b: Polynomial, v: int) -> Polynomial:
    # sparse pseudo-remainder of a by b in the variable v (scalar factors dropped)
    db = b.degree_in(v)
    cb = b.coeffs_in(v)
    lb = cb[db]
    r = a
    while r and r.degree_in(v) >= db:
        dr = r.degree_in(v)
        lr = r.coeffs_in(v)[dr]
        shift = ((v, dr - db),) if dr > db else ONE_MONO
        r = r * lb - (lr * b).mul_term(shift, 1)
    return r


def _scalar_primitive(p: Polynomial) -> Polynomial:
    # scale p to integer coefficients with gcd 1 (keeps PRS coefficients small)
    if not p.terms:
        return p
    den = 1
    num = 0
    for c in p.terms.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    for c in p.terms.values():
        num = math.gcd(num, c.numerator * (den // c.denominator))
    f = Fraction(den, num)
    return p if f == 1 else p.scale(f)


def _specialize(p: Polynomial, v: int, point: dict) -> list:
    # univariate integer coefficient list (low to high) of p, up to a nonzero
    # constant factor, with every variable but v set to an integer point
    coeffs: dict = {}
    powers: dict = {}
    for m, c in _int_poly(p).items():
        k = 0
        val = c
        for u, e in m:
            if u == v:
                k = e
            else:
                pw = powers.get((u, e))
                if pw is None:
                    pw = powers[(u, e)] = point[u] ** e
                val *= pw
        coeffs[k] = coeffs.get(k, 0) + val
    deg = max(coeffs)
    return _trim([coeffs.get(i, 0) for i in range(deg + 1)]) or [0]


def _trim(x: list) -> list:
    while x and x[-1] == 0:
        x.pop()
    return x


def _int_primitive(x: list) -> list:
    # Fractions or ints -> coprime integers, same direction
    den = 1
    for c in x:
        c = Fraction(c)
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(Fraction(c) * den) for c in x]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    return [c // g for c in ints] if g > 1 else ints


def _uni_gcd(a: list, b: list) -> list:
    # primitive pseudo-remainder sequence over Z on coefficient lists (low to
    # high); keeps intermediate integers small.  Result is monic over Q.
    a, b = _trim(_int_primitive(a)), _trim(_int_primitive(b))
    if len(a) < len(b):
        a, b = b, a
    while b:
        lb = b[-1]
        while len(a) >= len(b) and a:
            la = a[-1]
            shift = len(a) - len(b)
            a = [c * lb for c in a]
            for i, c in enumerate(b):
                a[i + shift] -= la * c
            _trim(a)
        a = _trim(_int_primitive(a)) if a else a
        a, b = b, a
    return [Fraction(c, a[-1]) for c in a]


def _uni_gcd_degree(a: list, b: list) -> int:
    return len(_uni_gcd(a, b)) - 1


def _absent_from_gcd(p: Polynomial, q: Polynomial, variables) -> set:
    """Variables certified not to occur in gcd(p, q).

    If lc_v(p) does not vanish at the point r, deg_v gcd(p, q) is at most the
    degree of gcd(p(r), q(r)) in Q[v], so a constant univariate gcd proves
    that v does not occur.
    """
    others = sorted(variables)
    absent, undecided = set(), set(others)
    for attempt in range(3):
        point = {u: 3 + 2 * k + 7 * attempt for k, u in enumerate(others)}
        for v in sorted(undecided):
            a, b = _specialize(p, v, point), _specialize(q, v, point)
            if len(a) - 1 != p.degree_in(v) or len(b) - 1 != q.degree_in(v):
                continue  # leading coefficient vanished at this point
            undecided.discard(v)
            if _uni_gcd_degree(a, b) == 0:
                absent.add(v)
        if not undecided:
            break
    return absent


def _gcd_many(polys) -> Polynomial:
    polys = sorted(polys, key=len)
    g = polys[0]
    for f in polys[1:]:
        if g.is_constant():
            break
        g = _gcd(g, f)
    return g


def _coefficients_wrt(p: Polynomial, variables) -> list:
    groups: dict = {}
    for m, c in p.terms.items():
        key = tuple(x for x in m if x[0] in variables)
        rest = tuple(x for x in m if x[0] not in variables)
        groups.setdefault(key, {})[rest] = c
    return [Polynomial._raw(p.nvars, t) for t in groups.values()]


# -- heuristic gcd (Char, Geddes, Gonnet) on integer polynomials ------------------
#
# Integer polynomials are dicts monomial -> int.  Evaluating one variable at a
# large integer xi, taking the gcd recursively and reading the result back
# xi-adically gives a candidate; when xi >= 2 min(|f|, |g|) + 2 a primitive
# candidate dividing both inputs is the gcd.  None means "give up".

_HEU_ATTEMPTS = 6
_HEU_MAX_BITS = 4000


def _int_poly(p: Polynomial) -> dict:
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    return {m: int(c * den) for m, c in p.terms.items()}


def _int_content(f: dict) -> int:
    g = 0
    for c in f.values():
        g = math.gcd(g, c)
    return g


def _int_normalize(f: dict) -> dict:
    # primitive, positive leading coefficient
    g = _int_content(f)
    if f[max(f, key=grlex_key)] < 0:
        g = -g
    return {m: c // g for m, c in f.items()}


def _int_eval(f: dict, v: int, xi: int) -> dict:
    out: dict = {}
    for m, c in f.items():
        e = 0
        rest = []
        for u, k in m:
            if u == v:
                e = k
            else:
                rest.append((u, k))
        key = tuple(rest)
        s = out.get(key, 0) + c * xi ** e
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return out


def _int_interpolate(h: dict, v: int, xi: int) -> dict:
    out: dict = {}
    half = xi // 2
    e = 0
    h = dict(h)
    while h:
        nxt = {}
        for m, c in h.items():
            r = c % xi
            if r > half:
                r -= xi
            if r:
                out[tuple(sorted(m + ((v, e),))) if e else m] = r
            q = (c - r) // xi
            if q:
                nxt[m] = q
        h = nxt
        e += 1
    return out


def _int_divides(g: dict, f: dict, nvars: int) -> bool:
    if _int_content(g) != 1:
        try:
            divide_exact(Polynomial(nvars, f), Polynomial(nvars, g))
        except NotDivisible:
            return False
        return True
    # g primitive: by Gauss's lemma any quotient is integral, so a
    # non-integral quotient coefficient already disproves divisibility
    lm_g = max(g, key=grlex_key)
    lc_g = g[lm_g]
    g_rest = [(m, c) for m, c in g.items() if m != lm_g]
    rem = dict(f)
    heap = [_Desc(m) for m in rem]
    heapq.heapify(heap)
    while rem:
        lm = heapq.heappop(heap).mono
        if lm not in rem:
            continue
        t = mono_div(lm, lm_g)
        if t is None:
            return False
        c, r = divmod(rem.pop(lm), lc_g)
        if r:
            return False
        for m, a in g_rest:
            mm = mono_mul(m, t)
            old = rem.get(mm)
            s = (old or 0) - a * c
            if s:
                rem[mm] = s
                if old is None:
                    heapq.heappush(heap, _Desc(mm))
            else:
                rem.pop(mm, None)
    return True


def _heu_gcd(f: dict, g: dict, nvars: int, depth: int = 0):
    """Exact integer gcd of f and g (content included, leading coefficient
    positive), or None."""
    cf, cg = _int_content(f), _int_content(g)
    c = math.gcd(cf, cg)
    f = {m: a // cf for m, a in f.items()}
    g = {m: a // cg for m, a in g.items()}
    vf = {u for m in f for u, _ in m}
    vg = {u for m in g for u, _ in m}
    if not vf or not vg:
        return {(): c}
    both = vf & vg
    if not both:
        # no common variable: the gcd is an integer (contents handled above)
        return {(): c}
    v = max(both)
    nf = max(abs(a) for a in f.values())
    ng = max(abs(a) for a in g.values())
    xi = 2 * min(nf, ng) + 29
    for _ in range(_HEU_ATTEMPTS):
        if xi.bit_length() * (1 + depth) > _HEU_MAX_BITS:
            return None
        ff, gg = _int_eval(f, v, xi), _int_eval(g, v, xi)
        if ff and gg:
            h = _heu_gcd(ff, gg, nvars, depth + 1)
            if h is None:
                return None
            cand = _int_normalize(_int_interpolate(h, v, xi))
            if _int_divides(cand, f, nvars) and _int_divides(cand, g, nvars):
                return {m: a * c for m, a in cand.items()}
        xi = xi * 73794 * math.isqrt(math.isqrt(xi)) // 27011
    return None


def _content_in(p: Polynomial, v: int) -> Polynomial:
    return reduce(_gcd, sorted(p.coeffs_in(v).values(), key=len))


def _gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """gcd of two nonzero polynomials, up to a scalar factor."""
    n = p.nvars
    if p.is_zero():
        return q
    if q.is_zero():
        return p
    if p.is_constant() or q.is_constant():
        return Polynomial.one(n)
    mp, mq = p.monomial_content(), q.monomial_content()
    dq = dict(mq)
    mg = tuple((v, min(e, dq[v])) for v, e in mp if v in dq)
    if mp:
        p = p.div_monomial(mp)
    if mq:
        q = q.div_monomial(mq)
    g = _gcd_primitive_monomials(p, q)
    return g.mul_term(mg, 1) if mg else g


def _gcd_primitive_monomials(p, q):
    n = p.nvars
    if p.is_constant() or q.is_constant():
        return Polynomial.one(n)
    vp, vq = p.variables(), q.variables()
    # a variable present in only one argument cannot occur in the gcd
    only = vp ^ vq
    if only:
        p = _gcd_many(_coefficients_wrt(p, only)) if vp & only else p
        q = _gcd_many(_coefficients_wrt(q, only)) if vq & only else q
        return _gcd(p, q)
    if len(vp) == 1:
        (v,) = vp
        g = _uni_gcd(_specialize(p, v, {}), _specialize(q, v, {}))
        return Polynomial(n, {((v, k),) if k else (): c for k, c in enumerate(g)})
    absent = _absent_from_gcd(p, q, vp)
    if absent == vp:
        return Polynomial.one(n)
    if absent:
        return _gcd_many(_coefficients_wrt(p, absent) + _coefficients_wrt(q, absent))
    h = _heu_gcd(_int_poly(p), _int_poly(q), n)
    if h is not None:
        return Polynomial(n, h)
    # same variable set; choose the variable of smallest degree as main variable
    v = min(vp, key=lambda x: (max(p.degree_in(x), q.degree_in(x)), x))
    cp, cq = _content_in(p, v), _content_in(q, v)
    pp = _scalar_primitive(divide_exact(p, cp))
    qq = _scalar_primitive(divide_exact(q, cq))
    c = _gcd(cp, cq)
    if pp.degree_in(v) < qq.degree_in(v):
        pp, qq = qq, pp
    a, b = pp, qq
    while True:
        if b.degree_in(v) == 0:
            g = Polynomial.one(n)
            break
        r = _prem(a, b, v)
        if r.is_zero():
            g = b
            break
        a, b = b, _scalar_primitive(divide_exact(r, _content_in(r, v)))
    return c * g


def gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic greatest common divisor; gcd(0, q) = monic(q)."""
    p._check(q)
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    return _gcd(p, q).monic()


class RationalFunction:
    """A reduced fraction num/den of polynomials, den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial):
        self.num = num
        self.den = den

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction({self.num}, {self.den})"


def reduce_fraction(num: Polynomial, den: Polynomial) -> RationalFunction:
    num._check(den)
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return RationalFunction(num, Polynomial.one(num.nvars))
    g = gcd(num, den)
    if not g.is_constant():
        num = divide_exact(num, g)
        den = divide_exact(den, g)
    lc = den.leading_coeff()
    return RationalFunction(num.scale(1 / lc), den.scale(1 / lc))


# -- grading -------------------------------------------------------------------

def grade(p: Polynomial, d: int, weights: Sequence[int] | None = None) -> list:
    """Split p into d parts by (weighted) degree residue mod d."""
    if d < 2:
        raise ValueError("grading needs d >= 2")
    parts = [{} for _ in range(d)]
    for m, c in p.terms.items():
        parts[mono_degree(m, weights) % d][m] = c
    return [Polynomial._raw(p.nvars, t) for t in parts]


def in_component(p: Polynomial, d: int, residue: int, weights=None) -> bool:
    return all(mono_degree(m, weights) % d == residue % d for m in p.terms)


# -- roots ---------------------------------------------------------------------

def integer_root(a: int, d: int):
    """Exact non-negative integer d-th root of a >= 0, or None."""
    if a < 0:
        raise ValueError("negative radicand")
    if a < 2:
        return a
    x = 1 << -(-a.bit_length() // d)
    while True:
        y = ((d - 1) * x + a // x ** (d - 1)) // d
        if y >= x:
            break
        x = y
    return x if x ** d == a else None


def rational_root(c, d: int):
    """A rational r with r**d == c, positive when d is even; None if none exists."""
    c = _as_fraction(c)
    if c < 0 and d % 2 == 0:
        return None
    sign = -1 if c < 0 else 1
    num = integer_root(abs(c.numerator), d)
    den = integer_root(c.denominator, d)
    if num is None or den is None:
        return None
    return sign * Fraction(num, den)


def dth_root(p: Polynomial, d: int) -> Polynomial:
    """The polynomial r with r**d == p (leading coefficient positive for even d)."""
    if d < 1:
        raise ValueError("d must be >= 1")
    if p.is_zero():
        raise ValueError("root of the zero polynomial")
    if d == 1:
        return p
    lm = p.leading_monomial()
    if any(e % d for _, e in lm):
        raise NoRoot(p, d, "leading monomial is not a d-th power")
    c = rational_root(p.terms[lm], d)
    if c is None:
        raise NoRoot(p, d, f"leading coefficient {p.terms[lm]} has no rational {d}-th root")
    top = tuple((v, e // d) for v, e in lm)
    root = Polynomial.monomial(p.nvars, top, c)
    lead_pow = mono_pow(top, d - 1)
    scale = d * c ** (d - 1)
    last = top
    while True:
        err = p - root ** d
        if err.is_zero():
            return root
        em = err.leading_monomial()
        t = mono_div(em, lead_pow)
        if t is None or grlex_key(t) >= grlex_key(last):
            raise NoRoot(p, d)
        root = root + Polynomial.monomial(p.nvars, t, err.terms[em] / scale)
        last = t


# -- substitution ----------------------------------------------------------------

def substitute(p: Polynomial, images: Sequence[Polynomial]) -> Polynomial:
    """Apply the algebra endomorphism x_i -> images[i]."""
    if len(images) != p.nvars:
        raise ArityError(f"need {p.nvars} images, got {len(images)}")
    return substitute_map(p, dict(enumerate(images)),
                          nvars=images[0].nvars if images else p.nvars)


def substitute_map(p: Polynomial, images: Mapping[int, Polynomial], nvars=None) -> Polynomial:
    """Substitute the variables listed in ``images``; other variables are kept."""
    if nvars is None:
        nvars = p.nvars
    powers: dict = {}

    def power(v, e):
        key = (v, e)
        if key not in powers:
            if v in images:
                powers[key] = images[v] ** e
            else:
                powers[key] = Polynomial.var(nvars, v, e)
        return powers[key]

    result = Polynomial.zero(nvars)
    for m, c in p.terms.items():
        term = Polynomial.const(nvars, c)
        for v, e in m:
            term = term * power(v, e)
        result = result + term
    return result


def apply_derivation(p: Polynomial, images: Mapping[int, Polynomial]) -> Polynomial:
    """Evaluate the associative derivation x_i -> images[i] on p (Leibniz rule)."""
    result = Polynomial.zero(p.nvars)
    for v in sorted(p.variables()):
        if v not in images:
            raise KeyError(v)
        img = images[v]
        if img:
            result = result + p.diff(v) * img
    return result


def jacobian_determinant(images: Sequence[Polynomial]) -> Polynomial:
    n = len(images)
    rows = [[f.diff(j) for j in range(n)] for f in images]
    return _det(rows)


def _det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = None
    for j in range(n):
        if rows[0][j].is_zero():
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * _det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else rows[0][0].scale(0)
