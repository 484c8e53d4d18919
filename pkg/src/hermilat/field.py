"""Exact arithmetic in GF(p^k) with a designated involution.

Elements are plain integers ("codes") whose base-p digits, least significant
first, are the coefficients of the polynomial-basis representative.  So in
GF(4) = GF(2)[x]/(x^2+x+1) the code 2 is the class of x and 3 is x+1.
"""
from functools import lru_cache
from itertools import product

from .caps import check_cap
from .errors import (
    DivisionByZero,
    FieldTooLarge,
    NonPrime,
    OddDegreeFrobenius,
    ReducibleModulus,
)

IDENTITY = "identity"
FROBENIUS_HALF = "frobenius_half"
INVOLUTION_KINDS = (IDENTITY, FROBENIUS_HALF)

# little-endian coefficient lists, monic
DEFAULT_MODULI = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (3, 2): (1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (5, 2): (2, 0, 1),
    (3, 3): (1, 2, 0, 1),
    (7, 2): (1, 0, 1),
}

# full add/mul tables below this order, log tables above
_TABLE_LIMIT = 256


def is_prime(p):
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


# -- polynomials over GF(p), little-endian coefficient tuples ---------------

def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a, m, p):
    """Remainder of ``a`` modulo the monic polynomial ``m``."""
    a = _trim(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        c = a[-1]
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        a = _trim(a)
    return a


def poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def monic_polys(p, degree):
    """All monic polynomials of the given degree, in lexicographic order."""
    for low in product(range(p), repeat=degree):
        yield low + (1,)


def is_irreducible(modulus, p):
    """Trial division by every monic polynomial of degree 1..deg/2."""
    k = len(modulus) - 1
    if k < 1:
        return False
    for d in range(1, k // 2 + 1):
        for f in monic_polys(p, d):
            if not poly_mod(modulus, f, p):
                return False
    return True


def least_irreducible(p, k):
    for f in monic_polys(p, k):
        if is_irreducible(f, p):
            return f
    raise ReducibleModulus(f"no irreducible polynomial of degree {k} over GF({p})")


class InvolutiveField:
    """GF(p^k) together with an automorphism of order at most 2.

    Use :func:`make_field` rather than calling this directly; it validates
    the input and caches instances so that equal fields are the same object.
    """

    def __init__(self, p, k, modulus, involution):
        self.p = p
        self.k = k
        self.modulus = tuple(modulus)
        self.involution = involution
        self.q = p**k
        self._build_tables()

    # -- construction -----------------------------------------------------
    def to_digits(self, code):
        digits = []
        for _ in range(self.k):
            code, d = divmod(code, self.p)
            digits.append(d)
        return digits

    def from_digits(self, digits):
        code = 0
        for d in reversed(list(digits)[: self.k]):
            code = code * self.p + (d % self.p)
        return code

    def _poly_mul_codes(self, a, b):
        prod = poly_mul(_trim(self.to_digits(a)), _trim(self.to_digits(b)), self.p)
        return self.from_digits(poly_mod(prod, self.modulus, self.p) + [0] * self.k)

    def _digit_add(self, a, b):
        p = self.p
        if p == 2:
            return a ^ b
        out, place = 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            out += ((x + y) % p) * place
            place *= p
        return out

    def _digit_neg(self, a):
        p = self.p
        out, place = 0, 1
        while a:
            a, x = divmod(a, p)
            out += ((-x) % p) * place
            place *= p
        return out

    def _build_tables(self):
        q = self.q
        # multiplicative group via a primitive element
        gen = None
        for g in range(1, q):
            powers = [1]
            x = g
            while x != 1:
                powers.append(x)
                x = self._poly_mul_codes(x, g)
            if len(powers) == q - 1:
                gen = g
                break
        assert gen is not None or q == 2 or q == 1
        if q == 2:
            powers = [1]
        self.primitive = gen if q > 2 else 1
        self._exp = powers + powers  # doubled to skip a modulo
        self._log = [0] * q
        for i, x in enumerate(powers):
            self._log[x] = i
        self._neg = [self._digit_neg(a) for a in range(q)]
        self._inv = [0] + [powers[(-i) % (q - 1)] for i in (self._log[a] for a in range(1, q))]

        if q <= _TABLE_LIMIT:
            exp, log = self._exp, self._log
            mt = [[0] * q for _ in range(q)]
            for a in range(1, q):
                la = log[a]
                row = mt[a]
                for b in range(1, q):
                    row[b] = exp[la + log[b]]
            at = [[self._digit_add(a, b) for b in range(q)] for a in range(q)]
            self.add_table, self.mul_table = at, mt
            self.add = lambda a, b: at[a][b]
            self.mul = lambda a, b: mt[a][b]
            self.sub = lambda a, b: at[a][self._neg[b]]
        else:
            self.add_table = self.mul_table = None
            exp, log = self._exp, self._log
            self.add = self._digit_add
            self.mul = lambda a, b: exp[log[a] + log[b]] if a and b else 0
            self.sub = lambda a, b: self._digit_add(a, self._neg[b])

        if self.involution == IDENTITY:
            self._star = list(range(q))
        else:
            e = self.p ** (self.k // 2)
            self._star = [self.power(a, e) for a in range(q)]

    # -- arithmetic -------------------------------------------------------
    def neg(self, a):
        return self._neg[a]

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self._inv[a]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a, e):
        """Square-and-multiply exponentiation."""
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def star(self, a):
        return self._star[a]

    @property
    def star_table(self):
        return self._star

    def elements(self):
        return range(self.q)

    def nonzero(self):
        return range(1, self.q)

    def fixed_points(self):
        return [a for a in range(self.q) if self._star[a] == a]

    def from_int(self, n):
        """Image of the integer ``n`` in the prime subfield."""
        return n % self.p

    @property
    def x(self):
        """Code of the class of x (only meaningful for k >= 2)."""
        return self.p if self.k >= 2 else 0

    # -- identity ---------------------------------------------------------
    def key(self):
        return (self.p, self.k, self.modulus, self.involution)

    def __eq__(self, other):
        return isinstance(other, InvolutiveField) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"GF({self.p}^{self.k}, {self.involution})" if self.k > 1 else f"GF({self.p}, {self.involution})"

    def to_json(self):
        return {"p": self.p, "k": self.k, "modulus": list(self.modulus), "involution": self.involution}


def make_field(p, k=1, modulus=None, involution=IDENTITY, force_cap=False):
    """Validated, cached :class:`InvolutiveField`.

    Without ``modulus`` the default table is used; orders missing from the
    table fall back to the lexicographically least irreducible polynomial.
    """
    if involution not in INVOLUTION_KINDS:
        raise ValueError(f"unknown involution kind {involution!r}")
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    if k < 1:
        raise ValueError("k must be positive")
    if involution == FROBENIUS_HALF and k % 2:
        raise OddDegreeFrobenius(f"frobenius_half needs even degree, got k={k}")
    check_cap("field_size", p**k, FieldTooLarge, force=force_cap)
    if modulus is None:
        if k == 1:
            modulus = (0, 1)
        else:
            modulus = DEFAULT_MODULI.get((p, k)) or least_irreducible(p, k)
    modulus = tuple(int(c) % p for c in modulus)
    return _make_field(p, k, modulus, involution)


@lru_cache(maxsize=None)
def _make_field(p, k, modulus, involution):
    if len(modulus) != k + 1 or modulus[-1] != 1:
        raise ValueError(f"modulus must be monic of degree {k}")
    if not is_irreducible(modulus, p):
        raise ReducibleModulus(f"{list(modulus)} is reducible over GF({p})")
    return InvolutiveField(p, k, modulus, involution)


def field_from_json(obj):
    return make_field(obj["p"], obj.get("k", 1), obj.get("modulus"), obj.get("involution", IDENTITY))


_OPS = {
    "add": lambda F, a, b: F.add(a, b),
    "sub": lambda F, a, b: F.sub(a, b),
    "mul": lambda F, a, b: F.mul(a, b),
    "neg": lambda F, a: F.neg(a),
    "inv": lambda F, a: F.inv(a),
}


def arith(field, op, *operands):
    """Dispatch a field operation by name: add, sub, mul, neg or inv."""
    for a in operands:
        if not 0 <= a < field.q:
            raise ValueError(f"invalid element code {a} for {field!r}")
    return _OPS[op](field, *operands)


def involute(field, x):
    return field.star(x)


def verify_involution(field):
    """Check that the involution is an automorphism of order <= 2.

    Covers every element: multiplicativity through the powers of a primitive
    element, additivity through ``s(a + p^j) = s(a) + s(p^j)`` for all ``a``
    and every basis digit ``j``.  Returns ``None`` or a witness tuple.
    """
    s = field.star
    if s(0) != 0 or s(1) != 1:
        return ("unit", 0, 1)
    for a in field.elements():
        if s(s(a)) != a:
            return ("order", a)
    g = field.primitive
    sg, x, y = s(g), 1, 1
    for _ in range(field.q - 1):
        if s(x) != y:
            return ("mul", x, g)
        x, y = field.mul(x, g), field.mul(y, sg)
    for j in range(field.k):
        e = field.p**j
        for a in field.elements():
            if s(field.add(a, e)) != field.add(s(a), s(e)):
                return ("add", a, e)
    return None
