"""Independent pure-Python finite-field oracle for cross-checking counts."""
from itertools import product

from sympy import factorint


class GF:
    def __init__(self, p, modulus):
        # modulus: little-endian monic coefficients over F_p
        self.p = p
        self.mod = list(modulus)
        self.k = len(modulus) - 1
        self.order = p ** self.k
        self.elems = list(product(range(p), repeat=self.k))

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def mul(self, a, b):
        p, k = self.p, self.k
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] = (prod[i + j] + x * y) % p
        for d in range(len(prod) - 1, k - 1, -1):
            c = prod[d]
            if c:
                for i in range(k + 1):
                    prod[d - k + i] = (prod[d - k + i] - c * self.mod[i]) % p
        return tuple(prod[:k])

    def zero(self):
        return (0,) * self.k

    def one(self):
        return (1,) + (0,) * (self.k - 1)

    def gen(self):
        return (0, 1) + (0,) * (self.k - 2) if self.k > 1 else (1,)

    def from_int(self, v):
        return ((v % self.p),) + (0,) * (self.k - 1)

    def power(self, a, e):
        r = self.one()
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def is_primitive_element(self, a):
        if a == self.zero():
            return False
        n = self.order - 1
        return all(self.power(a, n // l) != self.one() for l in factorint(n))


def poly_mulmod(F, a, b, f):
    """a, b, f: lists of field elements, little-endian; f monic."""
    n = len(f) - 1
    prod = [F.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == F.zero():
            continue
        for j, y in enumerate(b):
            prod[i + j] = F.add(prod[i + j], F.mul(x, y))
    for d in range(len(prod) - 1, n - 1, -1):
        c = prod[d]
        if c != F.zero():
            for i in range(n + 1):
                prod[d - n + i] = F.add(prod[d - n + i], F.neg(F.mul(c, f[i])))
    out = prod[:n]
    return out + [F.zero()] * (n - len(out))


def poly_is_primitive(F, f):
    """f monic little-endian over F. Order of x modulo f equals |F|^deg - 1 iff f is primitive."""
    n = len(f) - 1
    if f[0] == F.zero():
        return False
    N = F.order ** n - 1
    x = [F.zero()] * n
    if n == 1:
        x = [F.neg(f[0])]
    else:
        x[1] = F.one()

    def pw(e):
        r = [F.one()] + [F.zero()] * (n - 1)
        b = x
        while e:
            if e & 1:
                r = poly_mulmod(F, r, b, f)
            b = poly_mulmod(F, b, b, f)
            e >>= 1
        return r

    one = [F.one()] + [F.zero()] * (n - 1)
    if pw(N) != one:
        return False
    return all(pw(N // l) != one for l in factorint(N))


def count_g_plus_lambda(p, modulus, n):
    """Primitive g(X) + lambda over F_{p^m}: g over F_p monic of degree n, g(0) = 0, lambda primitive."""
    F = GF(p, modulus)
    lambdas = [e for e in F.elems if F.is_primitive_element(e)]
    count = 0
    for mid in product(range(p), repeat=n - 1):
        for lam in lambdas:
            f = [lam] + [F.from_int(c) for c in mid] + [F.one()]
            count += poly_is_primitive(F, f)
    return count


def count_x3x2x_lambda(p, modulus):
    F = GF(p, modulus)
    return sum(
        poly_is_primitive(F, [lam, F.one(), F.one(), F.one()])
        for lam in F.elems
        if F.is_primitive_element(lam)
    )
