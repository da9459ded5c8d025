"""The degree-d Burnside ring: free abelian group on x_1..x_d with
x_i x_j = sum_l mu(i,j,l) x_l, its ghost homomorphism into prod Z, and
exact verification of the defining short exact sequence via integer
normal forms.

Structure constants with index above d are truncated to zero (products
leave the degree-d window); the untruncated decomposition is kept
available through :meth:`BurnsidePresentation.full_product`.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .combinat import BudgetError, mu_incl_excl, stirling1, surjections

__all__ = [
    "RingElement",
    "BurnsidePresentation",
    "present",
    "ghost_is_hom_check",
    "cokernel_invariants",
    "quotient_presentation_check",
    "smith_normal_form",
    "factorial_product_group_matches",
]

PRESENT_MAX_D = 16


@dataclass(frozen=True)
class RingElement:
    """Element of the rank-d ring, as the integer coefficient vector of
    (x_1, ..., x_d)."""

    coeffs: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    def _check(self, other: "RingElement") -> None:
        if self.dim != other.dim:
            raise ValueError(
                f"dimension mismatch: {self.dim} vs {other.dim}"
            )

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return RingElement(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return RingElement(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "RingElement":
        return RingElement(tuple(-a for a in self.coeffs))

    def scale(self, n: int) -> "RingElement":
        return RingElement(tuple(n * a for a in self.coeffs))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs)


class BurnsidePresentation:
    """Multiplication table, ghost matrix and exact rational inverse for
    the rank-d ring.  Immutable after construction; safe to share."""

    def __init__(self, d: int):
        if d < 1:
            raise ValueError("d must be >= 1")
        if d > PRESENT_MAX_D:
            raise BudgetError(f"presentation budget exceeded: d = {d} > {PRESENT_MAX_D}")
        self.d = d
        # mu[(i, j, l)] for 1 <= i, j, l <= d, nonzero entries only
        self.mu: dict[tuple[int, int, int], int] = {}
        for i in range(1, d + 1):
            for j in range(1, d + 1):
                for l in range(max(i, j), min(d, i * j) + 1):
                    value = mu_incl_excl(i, j, l)
                    if value:
                        self.mu[(i, j, l)] = value
        # ghost matrix M[i][j] = surjections(i+1, j+1), 0-indexed storage
        self.M: list[list[int]] = [
            [surjections(i, j) if j <= i else 0 for j in range(1, d + 1)]
            for i in range(1, d + 1)
        ]
        # exact inverse via signed Stirling numbers: (M^-1)_ij = s(i,j)/i!
        self.Minv: list[list[Fraction]] = [
            [Fraction(stirling1(i, j), math.factorial(i)) for j in range(1, d + 1)]
            for i in range(1, d + 1)
        ]
        self._assert_inverse()
        self._full_products: dict[tuple[int, int], dict[int, int]] = {}

    def _assert_inverse(self) -> None:
        d = self.d
        for i in range(d):
            for j in range(d):
                entry = sum(self.M[i][m] * self.Minv[m][j] for m in range(d))
                expected = 1 if i == j else 0
                if entry != expected:
                    raise RuntimeError("ghost matrix inverse is not exact")

    # -- elements ----------------------------------------------------------

    def zero(self) -> RingElement:
        return RingElement((0,) * self.d)

    def basis(self, i: int) -> RingElement:
        if not 1 <= i <= self.d:
            raise ValueError(f"basis index {i} out of range 1..{self.d}")
        return RingElement(tuple(1 if j == i else 0 for j in range(1, self.d + 1)))

    def one(self) -> RingElement:
        return self.basis(1)

    def structure_constant(self, i: int, j: int, l: int) -> int:
        return self.mu.get((i, j, l), 0)

    def full_product(self, i: int, j: int) -> dict[int, int]:
        """Untruncated basis product: all of mu(i, j, l) for
        max(i,j) <= l <= i*j, ignoring the degree-d window."""
        if not (1 <= i <= self.d and 1 <= j <= self.d):
            raise ValueError("basis index out of range")
        key = (min(i, j), max(i, j))
        if key not in self._full_products:
            a, b = key
            self._full_products[key] = {
                l: mu_incl_excl(a, b, l) for l in range(max(a, b), a * b + 1)
            }
        return dict(self._full_products[key])

    def multiply(self, a: RingElement, b: RingElement) -> RingElement:
        """Bilinear extension of the basis products; commutative."""
        if a.dim != self.d or b.dim != self.d:
            raise ValueError("dimension mismatch with presentation")
        out = [0] * self.d
        for i in range(1, self.d + 1):
            ai = a.coeffs[i - 1]
            if not ai:
                continue
            for j in range(1, self.d + 1):
                bj = b.coeffs[j - 1]
                if not bj:
                    continue
                for l in range(max(i, j), min(self.d, i * j) + 1):
                    c = self.mu.get((i, j, l))
                    if c:
                        out[l - 1] += ai * bj * c
        return RingElement(tuple(out))

    def ghost(self, a: RingElement) -> tuple[int, ...]:
        """Image of a under the ghost homomorphism into prod Z;
        component i is sum_j surjections(i, j) * a_j."""
        if a.dim != self.d:
            raise ValueError("dimension mismatch with presentation")
        return tuple(
            sum(self.M[i][j] * a.coeffs[j] for j in range(self.d))
            for i in range(self.d)
        )

    def table_lines(self) -> list[str]:
        """Human-readable multiplication table, one basis product per line."""
        lines = []
        for i in range(1, self.d + 1):
            for j in range(i, self.d + 1):
                terms = [
                    f"{self.mu[(i, j, l)]} x{l}"
                    for l in range(1, self.d + 1)
                    if (i, j, l) in self.mu
                ]
                rhs = " + ".join(terms) if terms else "0"
                lines.append(f"x{i}*x{j} = {rhs}")
        return lines


def present(d: int) -> BurnsidePresentation:
    """Build the full presentation for rank d (budget: d <= 16)."""
    return BurnsidePresentation(d)


def ghost_is_hom_check(d: int, trials: int = 50, seed: int = 0) -> bool:
    """Verify ghost(a*b) == ghost(a) . ghost(b) componentwise on every
    basis pair plus `trials` seeded random elements with small coefficients.
    A False return signals a structure-constant bug."""
    pres = present(d)
    for i in range(1, d + 1):
        for j in range(1, d + 1):
            a, b = pres.basis(i), pres.basis(j)
            lhs = pres.ghost(pres.multiply(a, b))
            rhs = tuple(x * y for x, y in zip(pres.ghost(a), pres.ghost(b)))
            if lhs != rhs:
                return False
    rng = random.Random(seed)
    for _ in range(trials):
        a = RingElement(tuple(rng.randint(-9, 9) for _ in range(d)))
        b = RingElement(tuple(rng.randint(-9, 9) for _ in range(d)))
        lhs = pres.ghost(pres.multiply(a, b))
        rhs = tuple(x * y for x, y in zip(pres.ghost(a), pres.ghost(b)))
        if lhs != rhs:
            return False
    return True


def quotient_presentation_check(d: int) -> bool:
    """Full triple-associativity sweep of the basis monomials: the table
    must satisfy (x_i x_j) x_k == x_i (x_j x_k) for all i, j, k."""
    if d > 6:
        raise BudgetError(f"quotient_presentation_check budget exceeded: d = {d} > 6")
    pres = present(d)
    for i in range(1, d + 1):
        xi = pres.basis(i)
        for j in range(1, d + 1):
            xj = pres.basis(j)
            ij = pres.multiply(xi, xj)
            for k in range(1, d + 1):
                xk = pres.basis(k)
                left = pres.multiply(ij, xk)
                right = pres.multiply(xi, pres.multiply(xj, xk))
                if left != right:
                    return False
    return True


# ---------------------------------------------------------------------------
# integer normal form
# ---------------------------------------------------------------------------


def smith_normal_form(matrix: list[list[int]]) -> list[int]:
    """Diagonal of the Smith normal form of a square integer matrix, as
    non-negative invariant factors d_1 | d_2 | ... .

    Pivots are chosen by minimal absolute value; entries here grow like
    i!, and naive pivoting causes coefficient explosion.
    """
    a = [row[:] for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("smith_normal_form expects a square matrix")

    def min_pivot(t: int) -> tuple[int, int] | None:
        best = None
        for r in range(t, n):
            for c in range(t, n):
                if a[r][c] != 0 and (best is None or abs(a[r][c]) < abs(a[best[0]][best[1]])):
                    best = (r, c)
        return best

    for t in range(n):
        while True:
            pos = min_pivot(t)
            if pos is None:
                break
            r, c = pos
            a[t], a[r] = a[r], a[t]
            for row in a:
                row[t], row[c] = row[c], row[t]
            pivot = a[t][t]
            dirty = False
            for r in range(t + 1, n):
                q = a[r][t] // pivot
                if q:
                    for c in range(t, n):
                        a[r][c] -= q * a[t][c]
                if a[r][t]:
                    dirty = True
            for c in range(t + 1, n):
                q = a[t][c] // pivot
                if q:
                    for r in range(t, n):
                        a[r][c] -= q * a[r][t]
                if a[t][c]:
                    dirty = True
            if not dirty:
                break

    diag = [abs(a[i][i]) for i in range(n)]
    # enforce the divisibility chain
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(i + 1, n):
                if diag[i] == 0 and diag[j] != 0:
                    diag[i], diag[j] = diag[j], diag[i]
                    changed = True
                elif diag[i] and diag[j] % diag[i] != 0:
                    g = math.gcd(diag[i], diag[j])
                    diag[i], diag[j] = g, diag[i] * diag[j] // g
                    changed = True
    return diag


def _prime_power_factors(n: int) -> list[int]:
    """Multiset of prime-power cyclic factors of Z/n (empty for n = 1)."""
    factors = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            q = 1
            while n % f == 0:
                n //= f
                q *= f
            factors.append(q)
        f += 1
    if n > 1:
        factors.append(n)
    return factors


def cokernel_invariants(d: int) -> list[int]:
    """Invariant factors of the ghost matrix: the cokernel of the ghost
    map as a finite abelian group."""
    pres = present(d)
    return smith_normal_form(pres.M)


def factorial_product_group_matches(invariants: list[int], d: int) -> bool:
    """Whether the group with the given invariant factors is isomorphic
    to Z/1! x Z/2! x ... x Z/d!, by comparing prime-power cyclic
    decompositions as multisets."""
    left: list[int] = []
    for n in invariants:
        left.extend(_prime_power_factors(n))
    right: list[int] = []
    for i in range(1, d + 1):
        right.extend(_prime_power_factors(math.factorial(i)))
    return sorted(left) == sorted(right)
