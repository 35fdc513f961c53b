"""Degree-truncated enveloping algebra of the graded Lie algebra on N+.

Generators ``X_n`` are indexed by nonzero nonnegative integer vectors ``n``
(the positive part of the cocharacter lattice), graded by ``deg(n) = sum(n)``,
with bracket

    [X_n, X_m] = {n, m} X_{n+m},       {n, m} = n^T * omega * m

for a fixed skew-symmetric rational matrix ``omega``.  Everything is computed
inside the quotient by total degree > ``level``, with monomials held in PBW
normal form: weakly increasing words of generators under the (degree, lex)
order on index vectors.  An out-of-order adjacent pair rewrites as

    X_a X_b  ->  X_b X_a + {a, b} X_{a+b}        (a > b in the order),

which preserves total degree, so truncation commutes with multiplication.

Coefficients are exact ``fractions.Fraction`` values throughout.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .errors import (
    BadInput,
    LevelMismatch,
    NotGrouplike,
    NotLieElement,
)
from .linalg import vec_add, vec_scale

Vector = tuple[int, ...]
Monomial = tuple[Vector, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def degree(n: Vector) -> int:
    return sum(n)


def is_positive_vector(n) -> bool:
    return len(n) > 0 and all(isinstance(x, int) and x >= 0 for x in n) and any(n)


def letter_key(n: Vector):
    """Total order on generator indices: degree first, then e_1 < e_2 < ...

    Within a degree the tuple with the larger leading coordinates comes
    first, so e.g. 2e1 < e1+e2 < 2e2.
    """
    return (degree(n), tuple(-x for x in n))


def monomial_degree(m: Monomial) -> int:
    return sum(degree(n) for n in m)


def monomial_key(m: Monomial):
    return (monomial_degree(m), tuple(letter_key(n) for n in m))


def delta_exponent(n: Vector, delta) -> Fraction:
    """Smallest positive rational t with ``t * n_i`` divisible by ``delta_i``.

    Equals the rational lcm of the reduced fractions ``delta_i / n_i`` over
    the support of ``n``; in particular it takes the value ``delta_i`` on the
    i-th unit vector, and it can be a proper fraction on non-primitive input.
    """
    if not is_positive_vector(n):
        raise ValueError("expected a nonzero nonnegative integer vector, got %r" % (n,))
    num, den = 1, 0
    for ni, di in zip(n, delta):
        if ni == 0:
            continue
        f = Fraction(di, ni)
        num = lcm(num, f.numerator)
        den = gcd(den, f.denominator)
    return Fraction(num, den)


class PbwAlgebra:
    """Context object: rank, pairing matrix and truncation level.

    Elements keep a reference to their algebra; two algebras compare equal
    when they share omega and level, so elements produced by independently
    constructed contexts interoperate.
    """

    __slots__ = ("rank", "omega", "level", "_straighten_cache")

    def __init__(self, omega, level: int):
        self.omega = tuple(tuple(Fraction(x) for x in row) for row in omega)
        self.rank = len(self.omega)
        if any(len(row) != self.rank for row in self.omega):
            raise ValueError("omega must be square")
        for i in range(self.rank):
            for j in range(self.rank):
                if self.omega[i][j] != -self.omega[j][i]:
                    raise ValueError("omega must be skew-symmetric")
        level = int(level)
        if level < 1:
            raise ValueError("level must be >= 1")
        self.level = level
        self._straighten_cache: dict[Monomial, dict[Monomial, Fraction]] = {}

    def __eq__(self, other):
        if not isinstance(other, PbwAlgebra):
            return NotImplemented
        return self.omega == other.omega and self.level == other.level

    def __hash__(self):
        return hash((self.omega, self.level))

    def __repr__(self):
        return "PbwAlgebra(rank=%d, level=%d)" % (self.rank, self.level)

    # -- scalars and generators ---------------------------------------------

    def pairing(self, n: Vector, m: Vector) -> Fraction:
        return sum(
            (n[i] * sum(self.omega[i][j] * m[j] for j in range(self.rank) if m[j])
             for i in range(self.rank) if n[i]),
            _ZERO,
        )

    def bracket(self, n: Vector, m: Vector):
        """Structure constant and index of [X_n, X_m] = {n,m} X_{n+m}."""
        return self.pairing(n, m), vec_add(n, m)

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    def one(self) -> "AlgebraElement":
        return AlgebraElement(self, {(): _ONE})

    def generator(self, n) -> "AlgebraElement":
        n = tuple(n)
        if not is_positive_vector(n) or len(n) != self.rank:
            raise NotLieElement("generator index must be a nonzero nonnegative vector")
        if degree(n) > self.level:
            return self.zero()
        return AlgebraElement(self, {(n,): _ONE})

    def lie_element(self, coefficients) -> "AlgebraElement":
        """Linear combination of generators from a {vector: coefficient} map."""
        terms = {}
        for n, c in coefficients.items():
            n = tuple(n)
            if not is_positive_vector(n) or len(n) != self.rank:
                raise NotLieElement("bad generator index %r" % (n,))
            c = Fraction(c)
            if c and degree(n) <= self.level:
                terms[(n,)] = c
        return AlgebraElement(self, terms)

    # -- straightening -------------------------------------------------------

    def _straighten(self, word: Monomial) -> dict[Monomial, Fraction]:
        """PBW normal form of a word of generators, as monomial -> coefficient.

        Rewrites the first out-of-order adjacent pair and recurses; results
        are memoized per word.  Total degree is invariant, so no truncation
        happens here -- callers filter by degree before asking.
        """
        cached = self._straighten_cache.get(word)
        if cached is not None:
            return cached
        spot = -1
        for i in range(len(word) - 1):
            if letter_key(word[i]) > letter_key(word[i + 1]):
                spot = i
                break
        if spot < 0:
            result = {word: _ONE}
        else:
            a, b = word[spot], word[spot + 1]
            swapped = word[:spot] + (b, a) + word[spot + 2:]
            result = dict(self._straighten(swapped))
            coef = self.pairing(a, b)
            if coef:
                merged = word[:spot] + (vec_add(a, b),) + word[spot + 2:]
                for mono, c in self._straighten(merged).items():
                    nc = result.get(mono, _ZERO) + coef * c
                    if nc:
                        result[mono] = nc
                    elif mono in result:
                        del result[mono]
        self._straighten_cache[word] = result
        return result

    # -- exponential group ----------------------------------------------------

    def identity(self) -> "GroupElement":
        return GroupElement(self.one(), {})

    def exp(self, a: "AlgebraElement") -> "GroupElement":
        """Exponential of a Lie element (combination of single generators)."""
        self._check_member(a)
        log_terms = _require_lie(a)
        result = self.one()
        power = self.one()
        factorial = 1
        for k in range(1, self.level + 1):
            power = power * a
            if not power.terms:
                break
            factorial *= k
            result = result + power * Fraction(1, factorial)
        return GroupElement(result, log_terms)

    def log(self, g: "GroupElement") -> "AlgebraElement":
        """Inverse of exp; raises NotGrouplike when the series is not Lie."""
        self._check_member(g.carrier)
        return self.lie_element(g.log_terms())

    def dilog(self, n, exponent) -> "GroupElement":
        """The wall element Psi[n]^exponent = exp(c * sum_j (-1)^(j+1)/j^2 X_{jn}).

        Power additivity Psi[n]^a Psi[n]^b = Psi[n]^(a+b) holds exactly because
        all the X_{jn} commute with one another.
        """
        n = tuple(n)
        if not is_positive_vector(n) or len(n) != self.rank:
            raise NotLieElement("dilog index must be a nonzero nonnegative vector")
        c = Fraction(exponent)
        terms = {}
        d = degree(n)
        j = 1
        while j * d <= self.level and c:
            terms[vec_scale(j, n)] = c * Fraction((-1) ** (j + 1), j * j)
            j += 1
        return self.exp(self.lie_element(terms))

    # -- projection ------------------------------------------------------------

    def project(self, x, new_level: int):
        """Push an element (algebra or group) down to a coarser truncation."""
        new_level = int(new_level)
        if new_level > self.level:
            raise LevelMismatch(
                "cannot project level %d up to %d" % (self.level, new_level)
            )
        if isinstance(x, GroupElement):
            carrier = self.project(x.carrier, new_level)
            cached = x._log_terms
            if cached is not None:
                cached = {n: c for n, c in cached.items() if degree(n) <= new_level}
            return GroupElement(carrier, cached)
        self._check_member(x)
        if new_level == self.level:
            return x
        target = PbwAlgebra(self.omega, new_level)
        terms = {
            m: c for m, c in x.terms.items() if monomial_degree(m) <= new_level
        }
        return AlgebraElement(target, terms)

    def _check_member(self, a: "AlgebraElement"):
        if a.algebra.omega != self.omega:
            raise ValueError("element belongs to a different algebra")
        if a.algebra.level != self.level:
            raise LevelMismatch(
                "element lives at level %d, not %d" % (a.algebra.level, self.level)
            )


def _require_lie(a: "AlgebraElement") -> dict[Vector, Fraction]:
    terms = {}
    for m, c in a.terms.items():
        if len(m) != 1:
            raise NotLieElement("element has a non-generator monomial %r" % (m,))
        terms[m[0]] = c
    return terms


class AlgebraElement:
    """Finite Fraction-combination of PBW monomials at a fixed level.

    Instances are immutable by convention; arithmetic returns new elements.
    """

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: PbwAlgebra, terms: dict[Monomial, Fraction]):
        self.algebra = algebra
        self.terms = terms

    # comparisons ------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash(
            (self.algebra, frozenset((m, c) for m, c in self.terms.items()))
        )

    # arithmetic ---------------------------------------------------------------

    def _compat(self, other: "AlgebraElement"):
        if self.algebra.omega != other.algebra.omega:
            raise ValueError("elements belong to different algebras")
        if self.algebra.level != other.algebra.level:
            raise LevelMismatch(
                "levels differ: %d vs %d"
                % (self.algebra.level, other.algebra.level)
            )

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._compat(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            nc = out.get(m, _ZERO) + c
            if nc:
                out[m] = nc
            elif m in out:
                del out[m]
        return AlgebraElement(self.algebra, out)

    def __neg__(self):
        return AlgebraElement(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return self._product(other)
        return self._scaled(other)

    def __rmul__(self, other):
        return self._scaled(other)

    def _scaled(self, scalar):
        c = Fraction(scalar)
        if not c:
            return AlgebraElement(self.algebra, {})
        return AlgebraElement(self.algebra, {m: c * v for m, v in self.terms.items()})

    def _product(self, other: "AlgebraElement") -> "AlgebraElement":
        self._compat(other)
        alg = self.algebra
        level = alg.level
        right = [(m, monomial_degree(m), c) for m, c in other.terms.items()]
        out: dict[Monomial, Fraction] = {}
        for u, cu in self.terms.items():
            du = monomial_degree(u)
            for v, dv, cv in right:
                if du + dv > level:
                    continue
                scale = cu * cv
                for w, cw in alg._straighten(u + v).items():
                    nc = out.get(w, _ZERO) + scale * cw
                    if nc:
                        out[w] = nc
                    elif w in out:
                        del out[w]
        return AlgebraElement(alg, out)

    # structure ------------------------------------------------------------------

    def constant(self) -> Fraction:
        return self.terms.get((), _ZERO)

    def is_lie(self) -> bool:
        return all(len(m) == 1 for m in self.terms)

    def min_degree(self):
        """Smallest total degree of a nonzero term, or None for the zero element."""
        if not self.terms:
            return None
        return min(monomial_degree(m) for m in self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: monomial_key(item[0]))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for m, c in self.sorted_terms():
            mono = "".join("X(%s)" % ",".join(str(x) for x in n) for n in m) or "1"
            bits.append("%s*%s" % (c, mono))
        return " + ".join(bits)


class GroupElement:
    """Grouplike element: exp of a Lie element, constant term 1.

    The logarithm is cached when known (exp keeps it) and recovered by the
    usual series otherwise.  Products of grouplike elements are grouplike
    because the bracket of two generators is again a multiple of a generator.
    """

    __slots__ = ("carrier", "_log_terms")

    def __init__(self, carrier: AlgebraElement, log_terms=None):
        if carrier.constant() != 1:
            raise NotGrouplike("group elements must have constant term 1")
        self.carrier = carrier
        self._log_terms = log_terms

    @property
    def algebra(self) -> PbwAlgebra:
        return self.carrier.algebra

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.carrier == other.carrier

    def __hash__(self):
        return hash(self.carrier)

    def __mul__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return GroupElement(self.carrier * other.carrier)

    def inverse(self) -> "GroupElement":
        # geometric series: (1 + u)^-1 = sum_k (-u)^k, finite by truncation
        alg = self.algebra
        u = self.carrier - alg.one()
        result = alg.one()
        power = alg.one()
        sign = 1
        for _ in range(alg.level):
            power = power * u
            if not power.terms:
                break
            sign = -sign
            result = result + power * Fraction(sign)
        cached = self._log_terms
        if cached is not None:
            cached = {n: -c for n, c in cached.items()}
        return GroupElement(result, cached)

    def log_terms(self) -> dict[Vector, Fraction]:
        """Coefficients of log(g) on the generators; NotGrouplike otherwise."""
        if self._log_terms is None:
            alg = self.algebra
            u = self.carrier - alg.one()
            series = alg.zero()
            power = alg.one()
            for k in range(1, alg.level + 1):
                power = power * u
                if not power.terms:
                    break
                series = series + power * Fraction((-1) ** (k + 1), k)
            terms = {}
            for m, c in series.terms.items():
                if len(m) != 1:
                    raise NotGrouplike(
                        "log has a length-%d monomial %r" % (len(m), m)
                    )
                terms[m[0]] = c
            self._log_terms = terms
        return dict(self._log_terms)

    def is_identity(self) -> bool:
        return self.carrier == self.algebra.one()

    def project(self, new_level: int) -> "GroupElement":
        return self.algebra.project(self, new_level)

    def __repr__(self):
        return "exp-group<%r>" % (self.carrier,)


def project(x, new_level: int):
    """Module-level convenience: project an algebra or group element."""
    alg = x.algebra
    return alg.project(x, new_level)


# ---------------------------------------------------------------------------
# serialization


def element_to_json(a: AlgebraElement) -> dict:
    return {
        "level": a.algebra.level,
        "terms": [
            {"monomial": [list(n) for n in m], "coeff": str(c)}
            for m, c in a.sorted_terms()
        ],
    }


def element_from_json(doc, omega) -> AlgebraElement:
    try:
        alg = PbwAlgebra(omega, int(doc["level"]))
        terms: dict[Monomial, Fraction] = {}
        for rec in doc["terms"]:
            mono = tuple(tuple(int(x) for x in n) for n in rec["monomial"])
            coeff = Fraction(rec["coeff"])
            for n in mono:
                if not is_positive_vector(n) or len(n) != alg.rank:
                    raise BadInput("bad generator index %r" % (n,))
            if list(mono) != sorted(mono, key=letter_key):
                raise BadInput("monomial %r is not in PBW order" % (mono,))
            if monomial_degree(mono) > alg.level:
                raise BadInput("monomial above the stated level")
            if coeff:
                terms[mono] = terms.get(mono, _ZERO) + coeff
        return AlgebraElement(alg, {m: c for m, c in terms.items() if c})
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, BadInput):
            raise
        raise BadInput("malformed element document: %s" % exc) from exc


def group_to_json(g: GroupElement) -> dict:
    return element_to_json(g.carrier)


def group_from_json(doc, omega) -> GroupElement:
    carrier = element_from_json(doc, omega)
    if carrier.constant() != 1:
        raise BadInput("group element must have constant term 1")
    g = GroupElement(carrier)
    g.log_terms()  # eager grouplike validation
    return g
