"""Exact arithmetic over the Gaussian rationals Q(xi), xi^2 = -1, and exact
dense linear algebra (rank, kernel, inverse).

Everything downstream (braidings, structure constants, rewriting) runs on
these two classes.  There is no floating point anywhere; rationals are
``fractions.Fraction`` (arbitrary precision, lowest terms, positive
denominator by construction).
"""
from __future__ import annotations

import re as _re
from fractions import Fraction


class SingularMatrix(Exception):
    """Raised by invert() when the matrix has rank < dimension."""


class ScalarParseError(ValueError):
    """Raised when a scalar literal does not match the exact text format."""


class Scalar:
    """An element re + im*xi of Q(xi), with xi a primitive 4th root of unity."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "Scalar":
        return Scalar(0, 0)

    @staticmethod
    def one() -> "Scalar":
        return Scalar(1, 0)

    @staticmethod
    def xi() -> "Scalar":
        return Scalar(0, 1)

    @staticmethod
    def theta() -> "Scalar":
        # theta = 1 + xi satisfies theta^2 = 2*xi
        return Scalar(1, 1)

    @staticmethod
    def of(value) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        return Scalar(value)

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_one(self) -> bool:
        return self.re == 1 and not self.im

    def is_rational(self) -> bool:
        return not self.im

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> "Scalar":
        other = Scalar.of(other)
        return Scalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other) -> "Scalar":
        other = Scalar.of(other)
        return Scalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other) -> "Scalar":
        return Scalar.of(other) - self

    def __neg__(self) -> "Scalar":
        return Scalar(-self.re, -self.im)

    def __mul__(self, other) -> "Scalar":
        other = Scalar.of(other)
        return Scalar(self.re * other.re - self.im * other.im,
                      self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionError("inverse of zero in Q(xi)")
        return Scalar(self.re / n, -self.im / n)

    def __truediv__(self, other) -> "Scalar":
        return self * Scalar.of(other).inverse()

    def __rtruediv__(self, other) -> "Scalar":
        return Scalar.of(other) * self.inverse()

    def __pow__(self, n: int) -> "Scalar":
        if n < 0:
            return self.inverse() ** (-n)
        out = Scalar.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    # -- container protocol ------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"Scalar({self.format()!r})"

    def __str__(self):
        return self.format()

    # -- text format -------------------------------------------------------

    def format(self) -> str:
        """Render in the exact format ``p/q + r/s*xi`` (round-trips bit-exactly)."""
        if self.is_zero():
            return "0"
        parts = []
        if self.re:
            parts.append(_fmt_frac(self.re))
        if self.im:
            if self.im == 1:
                imtxt = "xi"
            elif self.im == -1:
                imtxt = "-xi"
            else:
                imtxt = f"{_fmt_frac(self.im)}*xi"
            if parts:
                if imtxt.startswith("-"):
                    parts.append("- " + imtxt[1:])
                else:
                    parts.append("+ " + imtxt)
            else:
                parts.append(imtxt)
        return " ".join(parts)

    @staticmethod
    def parse(text: str) -> "Scalar":
        """Parse the exact scalar text format, e.g. ``1``, ``-xi``, ``1/2 + 1/2*xi``."""
        s = text.strip()
        if not s:
            raise ScalarParseError("empty scalar literal")
        pos = 0
        total = Scalar.zero()
        sign = 1
        pending_sign = False
        first = True
        while pos < len(s):
            while pos < len(s) and s[pos].isspace():
                pos += 1
            if pos >= len(s):
                break
            if s[pos] in "+-":
                if s[pos] == "-":
                    sign = -sign
                pending_sign = True
                pos += 1
                continue
            m = _TERM_RE.match(s, pos)
            if not m:
                raise ScalarParseError(f"bad scalar term at position {pos} in {text!r}")
            total = total + _term_value(m) * sign
            sign = 1
            pending_sign = False
            first = False
            pos = m.end()
        if first or pending_sign:
            raise ScalarParseError(f"incomplete scalar literal {text!r}")
        return total


def _fmt_frac(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


_TERM_RE = _re.compile(r"(?:(\d+)(?:/(\d+))?(?:\s*\*\s*(xi))?|(xi))")


def _term_value(m) -> Scalar:
    if m.group(4):
        return Scalar.xi()
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    q = Fraction(num, den)
    return Scalar(0, q) if m.group(3) else Scalar(q)


ZERO = Scalar.zero()
ONE = Scalar.one()
XI = Scalar.xi()
THETA = Scalar.theta()
MINUS_ONE = Scalar(-1)


def xi_pow(n: int) -> Scalar:
    """xi**n with n reduced mod 4."""
    n %= 4
    if n == 0:
        return ONE
    if n == 1:
        return XI
    if n == 2:
        return MINUS_ONE
    return Scalar(0, -1)


class Matrix:
    """Dense matrix over Q(xi).  Rank is fraction-free (Bareiss) with
    first-nonzero pivoting, so it is deterministic; kernel and inverse go
    through reduced row echelon form over the field."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        self.entries = [[Scalar.of(e) for e in row] for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(r: int, c: int) -> "Matrix":
        return Matrix([[ZERO] * c for _ in range(r)])

    @staticmethod
    def diagonal(values) -> "Matrix":
        vals = [Scalar.of(v) for v in values]
        n = len(vals)
        return Matrix([[vals[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    # -- basic operations --------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and \
            all(self.entries[i][j] == other.entries[i][j]
                for i in range(self.rows) for j in range(self.cols))

    def __hash__(self):
        return hash(tuple(tuple(row) for row in self.entries))

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix([[self.entries[i][j] + other.entries[i][j]
                        for j in range(self.cols)] for i in range(self.rows)])

    def __sub__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix([[self.entries[i][j] - other.entries[i][j]
                        for j in range(self.cols)] for i in range(self.rows)])

    def __neg__(self):
        return Matrix([[-e for e in row] for row in self.entries])

    def scale(self, c) -> "Matrix":
        c = Scalar.of(c)
        return Matrix([[c * e for e in row] for row in self.entries])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            out = []
            for i in range(self.rows):
                rowi = self.entries[i]
                out_row = []
                for j in range(other.cols):
                    acc = ZERO
                    for k in range(self.cols):
                        a = rowi[k]
                        if a:
                            b = other.entries[k][j]
                            if b:
                                acc = acc + a * b
                    out_row.append(acc)
                out.append(out_row)
            return Matrix(out)
        return self.scale(other)

    def transpose(self) -> "Matrix":
        return Matrix([[self.entries[i][j] for i in range(self.rows)]
                       for j in range(self.cols)])

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product, row/col index = (i1*rows2 + i2, j1*cols2 + j2)."""
        out = Matrix.zeros(self.rows * other.rows, self.cols * other.cols)
        for i1 in range(self.rows):
            for j1 in range(self.cols):
                a = self.entries[i1][j1]
                if not a:
                    continue
                for i2 in range(other.rows):
                    for j2 in range(other.cols):
                        b = other.entries[i2][j2]
                        if b:
                            out.entries[i1 * other.rows + i2][j1 * other.cols + j2] = a * b
        return out

    def apply(self, vec):
        """Matrix times coefficient list."""
        if len(vec) != self.cols:
            raise ValueError("shape mismatch")
        vec = [Scalar.of(v) for v in vec]
        return [sum((self.entries[i][j] * vec[j] for j in range(self.cols) if vec[j]),
                    ZERO) for i in range(self.rows)]

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == Matrix.identity(self.rows)

    def __repr__(self):
        body = "; ".join(", ".join(e.format() for e in row) for row in self.entries)
        return f"Matrix[{self.rows}x{self.cols}: {body}]"

    # -- rank / kernel / inverse -------------------------------------------

    def rank(self) -> int:
        """Exact rank via fraction-free Gaussian elimination over Z[xi].

        Denominators are cleared row by row (rank-invariant), then Bareiss
        one-step elimination keeps every intermediate entry a Gaussian
        integer.  Pivot choice is always the first row with a nonzero entry,
        so the computation is deterministic.
        """
        m = []
        for row in self.entries:
            den = 1
            for e in row:
                den = _lcm(den, _lcm(e.re.denominator, e.im.denominator))
            m.append([(int(e.re * den), int(e.im * den)) for e in row])
        rows, cols = self.rows, self.cols
        piv = 0
        prev = (1, 0)
        for col in range(cols):
            if piv >= rows:
                break
            sel = None
            for r in range(piv, rows):
                if m[r][col] != (0, 0):
                    sel = r
                    break
            if sel is None:
                continue
            if sel != piv:
                m[piv], m[sel] = m[sel], m[piv]
            pivot = m[piv][col]
            for i in range(piv + 1, rows):
                mi = m[i]
                lead = mi[col]
                if lead == (0, 0):
                    for j in range(col + 1, cols):
                        if mi[j] != (0, 0):
                            mi[j] = _gdiv(_gmul(pivot, mi[j]), prev)
                    continue
                for j in range(col + 1, cols):
                    mi[j] = _gdiv(_gsub(_gmul(pivot, mi[j]), _gmul(lead, m[piv][j])), prev)
                mi[col] = (0, 0)
            prev = pivot
            piv += 1
        return piv

    def rref(self):
        """Reduced row echelon form over Q(xi); returns (matrix rows, pivot cols)."""
        m = [row[:] for row in self.entries]
        rows, cols = self.rows, self.cols
        pivots = []
        piv = 0
        for col in range(cols):
            if piv >= rows:
                break
            sel = None
            for r in range(piv, rows):
                if m[r][col]:
                    sel = r
                    break
            if sel is None:
                continue
            if sel != piv:
                m[piv], m[sel] = m[sel], m[piv]
            inv = m[piv][col].inverse()
            m[piv] = [inv * e for e in m[piv]]
            for r in range(rows):
                if r != piv and m[r][col]:
                    f = m[r][col]
                    m[r] = [m[r][j] - f * m[piv][j] for j in range(cols)]
            pivots.append(col)
            piv += 1
        return m, pivots

    def kernel(self):
        """Basis of the right kernel; list of coefficient lists, dim = cols - rank."""
        m, pivots = self.rref()
        free = [j for j in range(self.cols) if j not in pivots]
        basis = []
        for f in free:
            v = [ZERO] * self.cols
            v[f] = ONE
            for r, p in enumerate(pivots):
                v[p] = -m[r][f]
            basis.append(v)
        return basis

    def invert(self) -> "Matrix":
        """Exact inverse; raises SingularMatrix when rank < dimension."""
        if self.rows != self.cols:
            raise ValueError("invert requires a square matrix")
        n = self.rows
        aug = Matrix([self.entries[i] + [ONE if i == j else ZERO for j in range(n)]
                      for i in range(n)])
        m, pivots = aug.rref()
        if len(pivots) < n or pivots[:n] != list(range(n)):
            raise SingularMatrix(f"matrix of rank {len([p for p in pivots if p < n])} "
                                 f"is not invertible")
        return Matrix([row[n:] for row in m])


def _lcm(a: int, b: int) -> int:
    from math import gcd
    return a // gcd(a, b) * b


def _gmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gsub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def _gdiv(a, b):
    # exact division in Z[xi]; Bareiss guarantees divisibility
    n = b[0] * b[0] + b[1] * b[1]
    re = a[0] * b[0] + a[1] * b[1]
    im = a[1] * b[0] - a[0] * b[1]
    qr, rr = divmod(re, n)
    qi, ri = divmod(im, n)
    if rr or ri:
        raise ArithmeticError("non-exact division in fraction-free elimination")
    return (qr, qi)


def scalar_mul(x: Scalar, y: Scalar) -> Scalar:
    """Field multiplication in Q(xi)."""
    return x * y


def rank(m: Matrix) -> int:
    return m.rank()


def kernel(m: Matrix):
    return m.kernel()


def invert(m: Matrix) -> Matrix:
    return m.invert()
