"""Dense univariate polynomials with integer coefficients, and exact real-root isolation."""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence


class IntPolynomial:
    """Polynomial with arbitrary-precision integer coefficients, lowest degree first.

    Trailing zero coefficients are stripped, so the zero polynomial has
    ``coeffs == ()`` and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def x(cls) -> IntPolynomial:
        return cls((0, 1))

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> IntPolynomial:
        """Monic polynomial ``prod (x - r)``."""
        p = cls((1,))
        for r in roots:
            p = p * cls((-r, 1))
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPolynomial((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _lift(other)
        a, b = self.coeffs, other.coeffs
        size = max(len(a), len(b))
        return IntPolynomial(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size)
        )

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result, base = IntPolynomial((1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod_monic(self, divisor: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        """Long division by a monic divisor; stays in the integers."""
        if not divisor.is_monic():
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        d = divisor.degree
        if len(rem) - 1 < d:
            return IntPolynomial(), IntPolynomial(rem)
        quot = [0] * (len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            q = rem[i]
            if q:
                quot[i - d] = q
                for j, c in enumerate(divisor.coeffs):
                    rem[i - d + j] -= q * c
        return IntPolynomial(quot), IntPolynomial(rem[:d])

    def shift(self, c: int) -> IntPolynomial:
        """The polynomial ``q(x) = p(x + c)`` (binomial expansion, exact)."""
        n = len(self.coeffs)
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            if a:
                # a * (x + c)^i
                for j in range(i + 1):
                    out[j] += a * comb(i, j) * c ** (i - j)
        return IntPolynomial(out)

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        return format_expanded(self)


def _lift(v) -> IntPolynomial:
    if isinstance(v, IntPolynomial):
        return v
    if isinstance(v, int):
        return IntPolynomial((v,))
    raise TypeError(f"cannot combine IntPolynomial with {type(v).__name__}")


def poly_shift(p: IntPolynomial, c: int) -> IntPolynomial:
    return p.shift(c)


# --- text -------------------------------------------------------------------


def format_expanded(p: IntPolynomial, var: str = "x") -> str:
    if p.is_zero():
        return "0"
    terms = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        terms.append((sign, body))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def format_factored(p: IntPolynomial, var: str = "x") -> str:
    """Integer-root factors ``(x - r)^k`` followed by the expanded cofactor."""
    roots, rest = integer_root_factors(p)
    parts = []
    for r, mult in sorted(roots.items(), key=lambda kv: (-kv[0])):
        if r == 0:
            base = var
        elif r > 0:
            base = f"({var} - {r})"
        else:
            base = f"({var} + {-r})"
        parts.append(base if mult == 1 else f"{base}^{mult}")
    if rest.coeffs != (1,):
        parts.append(f"({format_expanded(rest, var)})")
    return "*".join(parts) if parts else "1"


# --- roots --------------------------------------------------------------------


def integer_root_factors(p: IntPolynomial) -> tuple[dict[int, int], IntPolynomial]:
    """Split off every factor ``(x - r)`` with integer r.

    Candidates come from the isolated real roots, so no factoring of the
    constant term is needed.  Only meaningful for monic p, where every
    rational root is an integer.
    """
    if p.degree <= 0:
        return {}, p
    roots: dict[int, int] = {}
    rest = p
    candidates = {round(float(r)) for r, _ in real_roots(p, tol=Fraction(1, 4))}
    candidates |= {0}
    for r in sorted(candidates):
        lin = IntPolynomial((-r, 1))
        while rest.degree > 0:
            q, rem = rest.divmod_monic(lin)
            if not rem.is_zero():
                break
            roots[r] = roots.get(r, 0) + 1
            rest = q
    return roots, rest


def _qpoly(p: Sequence) -> list[Fraction]:
    cs = [Fraction(c) for c in p]
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _qdivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    if len(a) < len(b):
        return [], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / lead
        q[i] = c
        if c:
            for j, bc in enumerate(b):
                a[i + j] -= c * bc
    return _qpoly(q), _qpoly(a[: len(b) - 1])


def _qgcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    while b:
        a, b = b, _qdivmod(a, b)[1]
    return [c / a[-1] for c in a]


def _qderiv(a: list[Fraction]) -> list[Fraction]:
    return _qpoly(i * c for i, c in enumerate(a) if i)


def _qsub(a, b):
    size = max(len(a), len(b))
    return _qpoly(
        (a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(size)
    )


def squarefree_decomposition(p: IntPolynomial) -> list[tuple[list[Fraction], int]]:
    """Yun's algorithm over the rationals: ``p = lc * prod f_i^i``, f_i squarefree."""
    f = _qpoly(p.coeffs)
    if len(f) <= 1:
        return []
    out = []
    fp = _qderiv(f)
    a = _qgcd(f, fp)
    b = _qdivmod(f, a)[0]
    c = _qdivmod(fp, a)[0]
    d = _qsub(c, _qderiv(b))
    i = 1
    while len(b) > 1:
        a = _qgcd(b, d)
        if len(a) > 1:
            out.append((a, i))
        b = _qdivmod(b, a)[0]
        c = _qdivmod(d, a)[0]
        d = _qsub(c, _qderiv(b))
        i += 1
    return out


def _sturm_chain(f: list[Fraction]) -> list[list[Fraction]]:
    chain = [f, _qderiv(f)]
    while len(chain[-1]) > 1:
        rem = _qdivmod(chain[-2], chain[-1])[1]
        if not rem:
            break
        chain.append([-c for c in rem])
    return chain


def _qeval(a: list[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _sign_changes(chain, x: Fraction) -> int:
    signs = [v for v in (_qeval(q, x) for q in chain) if v != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if (s > 0) != (t > 0))


def _isolate(f: list[Fraction], tol: Fraction) -> list[Fraction]:
    """Midpoints of intervals of width <= tol, one per real root of squarefree f."""
    chain = _sturm_chain(f)
    bound = 1 + max(abs(c / f[-1]) for c in f[:-1]) if len(f) > 1 else Fraction(1)
    out = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        count = _sign_changes(chain, lo) - _sign_changes(chain, hi)
        if count == 0:
            continue
        if count == 1 and hi - lo <= tol:
            out.append((lo + hi) / 2)
            continue
        mid = (lo + hi) / 2
        if _qeval(f, mid) == 0:
            out.append(mid)
            # shrink away from the exact root so it is not counted twice
            eps = min(tol, (hi - lo) / 4) / 2
            while _sign_changes(chain, mid - eps) - _sign_changes(chain, mid + eps) != 1:
                eps /= 2
            stack.append((lo, mid - eps))
            stack.append((mid + eps, hi))
        else:
            stack.append((lo, mid))
            stack.append((mid, hi))
    return sorted(out)


def real_roots(p: IntPolynomial, tol: Fraction = Fraction(1, 10**12)) -> list[tuple[Fraction, int]]:
    """Every real root with multiplicity, each located to within ``tol``.

    Purely exact: squarefree decomposition, Sturm sequences and bisection on
    rationals.  Roots are returned in ascending order.
    """
    roots = []
    for factor, mult in squarefree_decomposition(p):
        for r in _isolate(factor, tol):
            roots.append((r, mult))
    return sorted(roots)


def root_decimals(p: IntPolynomial, places: int = 3) -> list[str]:
    """Real roots rounded to ``places`` decimals, repeated by multiplicity, descending."""
    out = []
    for r, mult in sorted(real_roots(p), reverse=True):
        text = f"{float(r):.{places}f}"
        if text.startswith("-") and float(text) == 0:
            text = text[1:]
        out.extend([text] * mult)
    return out
