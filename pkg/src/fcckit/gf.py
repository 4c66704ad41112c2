"""Exact arithmetic in F_q for prime and prime-power q.

Elements are canonical integer indices 0..q-1: the coefficient vector
(c_0, ..., c_{m-1}) of an extension-field element, coefficients of x^i
over F_p, read as the base-p numeral sum(c_i * p**i).  For prime fields
the index is the residue itself.  The representative modulus of F_{p^m}
is the monic irreducible polynomial of degree m whose index encoding is
smallest, which reproduces the familiar tables (x^2+x+1 for GF(4),
x^3+x+1 for GF(8), x^4+x+1 for GF(16), ...).

Polynomials are stored lowest-degree-first with no trailing zero
coefficients; the zero polynomial has empty coefficients and degree -inf.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import (
    DimensionError,
    DivisionByZero,
    DuplicateNode,
    EmptyInput,
    FieldMismatch,
    InvalidOrder,
    ReducibleModulus,
)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power_split(q: int) -> tuple[int, int]:
    """Return (p, m) with q = p**m, or raise InvalidOrder."""
    if q < 2:
        raise InvalidOrder(f"field order must be at least 2, got {q}")
    p = q
    for d in range(2, q + 1):
        if d * d > q:
            break
        if q % d == 0:
            p = d
            break
    m = 0
    rest = q
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1 or not is_prime(p):
        raise InvalidOrder(f"{q} is not a prime power")
    return p, m


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


class Field:
    """Finite field F_q with elements represented as indices 0..q-1.

    All arithmetic methods take and return plain ints.  Instances are
    immutable after construction and safe to share between threads.
    """

    __slots__ = ("q", "p", "m", "modulus", "_mod_mask", "_exp", "_log", "_primitive")

    def __init__(self, q: int, modulus: Sequence[int] | None = None):
        p, m = prime_power_split(q)
        self.q = q
        self.p = p
        self.m = m
        if modulus is None:
            modulus = canonical_modulus(p, m) if m > 1 else (0, 1)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise ReducibleModulus(
                    f"modulus must be monic of degree {m}, got coefficients {modulus}"
                )
            if m > 1 and not _is_irreducible(p, modulus):
                raise ReducibleModulus(f"modulus {modulus} is reducible over F_{p}")
        self.modulus = tuple(modulus)
        self._mod_mask = sum(c << i for i, c in enumerate(self.modulus)) if p == 2 else 0
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._primitive: int | None = None

    # -- identity ------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Field)
            and self.q == other.q
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.q, self.modulus))

    def __repr__(self) -> str:
        if self.m == 1:
            return f"Field({self.q})"
        return f"Field({self.q}, modulus={list(self.modulus)})"

    # -- element views -------------------------------------------------

    def elements(self) -> range:
        return range(self.q)

    def check(self, a: int) -> int:
        if not (0 <= a < self.q):
            raise FieldMismatch(f"{a} is not an element index of {self!r}")
        return a

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Coefficient vector of length m over F_p (low degree first)."""
        self.check(a)
        out = []
        for _ in range(self.m):
            a, c = divmod(a, self.p)
            out.append(c)
        return tuple(out)

    def from_coeffs(self, coeffs: Iterable[int]) -> int:
        vec = list(coeffs)
        if len(vec) != self.m:
            raise DimensionError(f"expected {self.m} coefficients, got {len(vec)}")
        idx = 0
        for c in reversed(vec):
            idx = idx * self.p + (c % self.p)
        return idx

    # -- arithmetic ------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return self.from_coeffs(
            (x + y) % self.p for x, y in zip(self.coeffs(a), self.coeffs(b))
        )

    def neg(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        return self.from_coeffs((-x) % self.p for x in self.coeffs(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        if self._exp is None:
            self._build_tables()
        exp, log = self._exp, self._log
        return exp[(log[a] + log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        """Multiplicative inverse; DivisionByZero for a = 0."""
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in {self!r}")
        self.check(a)
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        if self._exp is None:
            self._build_tables()
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    # -- structure -------------------------------------------------------

    def element_order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise DivisionByZero("0 has no multiplicative order")
        order = self.q - 1
        for prime in _prime_factors(self.q - 1):
            while order % prime == 0 and self.pow(a, order // prime) == 1:
                order //= prime
        return order

    def primitive_element(self) -> int:
        """Smallest element index with multiplicative order q - 1."""
        if self._primitive is None:
            target = self.q - 1
            for a in range(1, self.q):
                if self.element_order(a) == target:
                    self._primitive = a
                    break
        return self._primitive

    def prime_subfield(self) -> "Field":
        return self if self.m == 1 else Field(self.p)

    # -- internals -------------------------------------------------------

    def _mul_raw(self, a: int, b: int) -> int:
        """Table-free product, used only while building the tables."""
        if self.p == 2:
            top = 1 << self.m
            r = 0
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if a & top:
                    a ^= self._mod_mask
            return r
        prod = [0] * (2 * self.m - 1)
        av, bv = self.coeffs(a), self.coeffs(b)
        for i, x in enumerate(av):
            if x:
                for j, y in enumerate(bv):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        rem = _poly_mod_prime(self.p, prod, self.modulus)
        return self.from_coeffs(rem + [0] * (self.m - len(rem)))

    def _pow_raw(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self._mul_raw(result, base)
            base = self._mul_raw(base, base)
            e >>= 1
        return result

    def _build_tables(self) -> None:
        # Discrete-log tables for extension fields; primitive element
        # found by scanning indices in canonical order.
        target = self.q - 1
        factors = _prime_factors(target)
        g = None
        for a in range(1, self.q):
            if all(self._pow_raw(a, target // prime) != 1 for prime in factors):
                g = a
                break
        exp = [1] * target
        log = [0] * self.q
        val = 1
        for i in range(target):
            exp[i] = val
            log[val] = i
            val = self._mul_raw(val, g)
        # _exp is the readiness gate for concurrent readers: set it last
        self._log = log
        self._exp = exp
        if self._primitive is None:
            self._primitive = g


def _poly_mod_prime(p: int, dividend: Sequence[int], divisor: Sequence[int]) -> list[int]:
    """Remainder of polynomial division over F_p (divisor monic)."""
    rem = [c % p for c in dividend]
    d = len(divisor) - 1
    for i in range(len(rem) - 1, d - 1, -1):
        c = rem[i]
        if c:
            rem[i] = 0
            for j in range(d):
                rem[i - d + j] = (rem[i - d + j] - c * divisor[j]) % p
    del rem[d:]
    return rem


def _is_irreducible(p: int, modulus: Sequence[int]) -> bool:
    """Trial division by every monic polynomial of degree <= m/2."""
    m = len(modulus) - 1
    if modulus[0] == 0:
        return m == 1  # divisible by x, so reducible unless it is x itself
    for deg in range(1, m // 2 + 1):
        for idx in range(p**deg):
            trial = []
            rest = idx
            for _ in range(deg):
                rest, c = divmod(rest, p)
                trial.append(c)
            trial.append(1)
            if not any(_poly_mod_prime(p, modulus, trial)):
                return False
    return True


def canonical_modulus(p: int, m: int) -> tuple[int, ...]:
    """Monic irreducible of degree m over F_p with the smallest index encoding."""
    for idx in range(p**m, 2 * p**m):
        coeffs = []
        rest = idx
        for _ in range(m + 1):
            rest, c = divmod(rest, p)
            coeffs.append(c)
        if _is_irreducible(p, coeffs):
            return tuple(coeffs)
    raise InvalidOrder(f"no irreducible polynomial of degree {m} over F_{p}")  # pragma: no cover


def field_make(q: int, modulus: Sequence[int] | None = None) -> Field:
    """Build F_q with the canonical (or an explicitly given) modulus."""
    return Field(q, modulus)


class Polynomial:
    """Polynomial over a Field, coefficients lowest degree first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable[int] = ()):
        vec = [field.check(c) for c in coeffs]
        while vec and vec[-1] == 0:
            vec.pop()
        self.field = field
        self.coeffs = tuple(vec)

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def _coerced(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(f"polynomials over {self.field!r} and {other.field!r}")
        return other

    def __add__(self, other: "Polynomial") -> "Polynomial":
        other = self._coerced(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return Polynomial(f, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.field, (self.field.neg(c) for c in self.coeffs))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-self._coerced(other))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        other = self._coerced(other)
        if self.is_zero() or other.is_zero():
            return Polynomial(self.field)
        f = self.field
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] = f.add(out[i + j], f.mul(x, y))
        return Polynomial(f, out)

    def shift(self, n: int) -> "Polynomial":
        """Multiply by x**n."""
        if self.is_zero():
            return self
        return Polynomial(self.field, (0,) * n + self.coeffs)

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        other = self._coerced(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        dd = len(other.coeffs) - 1
        lead_inv = f.inv(other.coeffs[-1])
        quot = [0] * max(0, len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = f.mul(rem[i], lead_inv)
            if c:
                quot[i - dd] = c
                for j, y in enumerate(other.coeffs):
                    rem[i - dd + j] = f.sub(rem[i - dd + j], f.mul(c, y))
        return Polynomial(f, quot), Polynomial(f, rem[:dd])

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __call__(self, x: int) -> int:
        return poly_eval(self, x)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                head = "" if c == 1 else f"{c}*"
                terms.append(f"{head}x" if i == 1 else f"{head}x^{i}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"Polynomial({self.field!r}, {list(self.coeffs)})"


def poly_eval(poly: Polynomial, x: int) -> int:
    """Horner evaluation of poly at the element with index x."""
    f = poly.field
    f.check(x)
    acc = 0
    for c in reversed(poly.coeffs):
        acc = f.add(f.mul(acc, x), c)
    return acc


def lagrange_interpolate(field: Field, points: Sequence[tuple[int, int]]) -> Polynomial:
    """Unique polynomial of degree < len(points) through the given points."""
    if not points:
        raise EmptyInput("interpolation needs at least one point")
    xs = [field.check(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise DuplicateNode(f"interpolation nodes are not distinct: {xs}")
    result = Polynomial(field)
    for i, (xi, yi) in enumerate(points):
        field.check(yi)
        if yi == 0:
            continue
        basis = Polynomial(field, (yi,))
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            inv = field.inv(field.sub(xi, xj))
            # basis *= (x - xj) / (xi - xj)
            basis = basis * Polynomial(field, (field.mul(field.neg(xj), inv), inv))
        result = result + basis
    return result


def minimal_poly(field: Field, beta: int, subfield_char: int) -> Polynomial:
    """Monic polynomial over F_p of least degree vanishing at beta.

    Found as the first linear dependency among the powers 1, beta,
    beta^2, ... viewed as F_p-coordinate vectors, so the result is
    independent of any conjugacy-orbit bookkeeping.
    """
    field.check(beta)
    if subfield_char != field.p:
        raise FieldMismatch(
            f"subfield characteristic {subfield_char} does not match field characteristic {field.p}"
        )
    p, m = field.p, field.m
    prime = field.prime_subfield()
    # Row-reduced basis of the span of lower powers, with the combination
    # of original powers that produced each reduced row.
    basis: list[tuple[list[int], list[int], int]] = []  # (vector, combo, pivot)
    power = 1
    for j in range(m + 1):
        vec = list(field.coeffs(power))
        combo = [0] * (m + 1)
        combo[j] = 1
        for row_vec, row_combo, pivot in basis:
            c = vec[pivot]
            if c:
                for i in range(m):
                    vec[i] = (vec[i] - c * row_vec[i]) % p
                for i in range(m + 1):
                    combo[i] = (combo[i] - c * row_combo[i]) % p
        pivot = next((i for i, c in enumerate(vec) if c), None)
        if pivot is None:
            return Polynomial(prime, combo[: j + 1])
        inv = pow(vec[pivot], p - 2, p)
        vec = [(c * inv) % p for c in vec]
        combo = [(c * inv) % p for c in combo]
        basis.append((vec, combo, pivot))
        power = field.mul(power, beta)
    raise AssertionError("powers of beta cannot be independent beyond degree m")  # pragma: no cover
