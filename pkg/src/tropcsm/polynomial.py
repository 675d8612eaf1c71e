"""Dense univariate polynomials with integer coefficients."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Polynomial:
    """Integer polynomial; ``coefficients[i]`` multiplies ``λ**i``."""

    coefficients: tuple = ()

    def __post_init__(self):
        c = list(self.coefficients)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(int(x) for x in c))

    @classmethod
    def from_roots(cls, *roots):
        p = cls((1,))
        for r in roots:
            p = p * cls((-r, 1))
        return p

    @classmethod
    def monomial(cls, degree, coefficient=1):
        return cls((0,) * degree + (coefficient,))

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def is_zero(self):
        return not self.coefficients

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        return Polynomial(tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                                for i in range(n)))

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial(tuple(other * c for c in self.coefficients))
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return Polynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k):
        out = Polynomial((1,))
        for _ in range(k):
            out = out * self
        return out

    def divide_by_linear(self, root=1):
        """Synthetic division by ``(λ - root)``; returns ``(quotient, remainder)``."""
        c = self.coefficients
        if not c:
            return Polynomial(), 0
        q = [0] * (len(c) - 1)
        acc = 0
        for i in range(len(c) - 1, 0, -1):
            acc = acc * root + c[i]
            q[i - 1] = acc
        rem = acc * root + c[0]
        return Polynomial(tuple(q)), rem

    def root_multiplicity(self, root=1):
        """Exact multiplicity of ``root``; ``None`` for the zero polynomial."""
        if self.is_zero():
            return None
        t, p = 0, self
        while True:
            q, rem = p.divide_by_linear(root)
            if rem:
                return t
            t, p = t + 1, q

    def deflate(self, times, root=1):
        """Divide exactly by ``(λ - root)**times``; raises if not divisible."""
        p = self
        for i in range(times):
            p, rem = p.divide_by_linear(root)
            if rem:
                raise ArithmeticError(
                    f"{self} is not divisible by (λ - {root})^{times} (stopped at {i})")
        return p

    def __str__(self):
        if not self.coefficients:
            return "0"
        terms = []
        for i in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            mag = abs(c)
            body = "λ" if i == 1 else f"λ^{i}" if i else ""
            if body and mag == 1:
                term = body
            else:
                term = f"{mag}{body}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, term))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, term in terms[1:]:
            out += f" {sign} {term}"
        return out
