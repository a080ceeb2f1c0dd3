"""Exact finite-precision model of a one-branch subring of the series line.

The algebra is the subring generated by the given series inside k[[t]]/(t^N)
with exact rational coefficients; ideals are echelonized row spaces closed
under multiplication by the algebra.  This engine handles non-monomial
ideals, which the window calculus cannot see, and cross-validates it on
monomial input.

Two facts keep every operation cheap and exact:

* conductor saturation: an ideal with minimal valuation v0 contains every
  algebra element of valuation ≥ v0 + conductor (it contains x·t^c·k[[t]]
  for a minimal-valuation x), so only the window below v0 + conductor ever
  needs computing — the tail is copied from the algebra basis;
* triangularity: coefficients below the window top of any combination come
  only from products whose valuations land below the window top.

Precision discipline: the algebra needs N ≥ 4·conductor + 4; each ideal
carries a guaranteed precision g (its window rows are correct below g) and
any comparison first checks the saturation window it relies on, erring out
with SaturationCheckFailed rather than guessing.
"""

from __future__ import annotations

import math
from typing import Iterable

from . import linalg
from . import series as ps
from .errors import (
    GcdNotOne,
    NotInAlgebra,
    NotMinimalValuation,
    PrecisionTooLow,
    SaturationCheckFailed,
)
from .ideals import SemigroupIdeal, from_window
from .kernels import ideal_closed
from .semigroup import from_generators as sg_from_generators


def _as_series(poly, precision: int):
    if isinstance(poly, dict):
        return ps.make_series(poly, precision)
    if isinstance(poly, tuple):
        if len(poly) == precision:
            return poly
        return ps.make_series({i: c for i, c in enumerate(poly) if c}, precision)
    raise TypeError(f"expected coefficient dict or series tuple, got {type(poly)!r}")


class TruncatedSubalgebra:
    """Subalgebra of the truncated series ring, echelonized by valuation."""

    __slots__ = ("precision", "generators", "rows", "value_semigroup")

    def __init__(self, precision, generators, rows, value_semigroup):
        self.precision = precision
        self.generators = generators
        self.rows = rows
        self.value_semigroup = value_semigroup

    @property
    def conductor(self) -> int:
        return self.value_semigroup.conductor

    def __repr__(self) -> str:
        gens = ",".join(map(str, self.value_semigroup.generators))
        return f"TruncatedSubalgebra(values <{gens}>, precision {self.precision})"

    # -- construction ------------------------------------------------------

    @classmethod
    def build(cls, generators: Iterable, precision: int) -> "TruncatedSubalgebra":
        """Close the generators under truncated products and echelonize.

        A span containing 1 and closed under multiplication by each
        generator is closed under all products, so the worklist only ever
        multiplies fresh vectors by the generators.
        """
        n = precision
        gens = [_as_series(g, n) for g in generators]
        if not gens:
            raise ValueError("need at least one algebra generator")
        for g in gens:
            v = ps.valuation(g)
            if v is None or v < 1:
                raise ValueError("algebra generators must have positive order at t")

        rows: dict = {}
        pending = [ps.monomial(0, n)]
        linalg.insert_row(pending[0], rows)
        for g in gens:
            if linalg.insert_row(g, rows):
                pending.append(g)
        while pending:
            a = pending.pop()
            va = ps.valuation(a)
            for g in gens:
                if va + ps.valuation(g) >= n:
                    continue
                p = ps.mul(a, g)
                if linalg.insert_row(p, rows):
                    pending.append(p)

        vals = sorted(rows)
        nonzero = [v for v in vals if v > 0]
        if not nonzero or math.gcd(*nonzero) != 1:
            raise GcdNotOne("attained leading exponents do not generate gcd 1")
        missing = [w for w in range(n) if w not in rows]
        c_app = (max(missing) + 1) if missing else 0
        mult = nonzero[0]
        if c_app + mult + 1 >= n:
            raise PrecisionTooLow(
                f"precision {n} leaves no certified tail past apparent conductor {c_app}"
            )
        sg_gens = [v for v in vals if 0 < v < c_app] + list(
            range(max(c_app, 1), c_app + mult + 1)
        )
        semigroup = sg_from_generators(sg_gens)
        if precision < 4 * semigroup.conductor + 4:
            raise PrecisionTooLow(
                f"need precision >= {4 * semigroup.conductor + 4} for conductor "
                f"{semigroup.conductor}, got {precision}"
            )
        if vals != semigroup.members_upto(n - 1):
            raise SaturationCheckFailed("attained valuations are not a semigroup tail")
        return cls(n, tuple(gens), rows, semigroup)

    # -- elements ------------------------------------------------------------

    def element(self, poly):
        """Coerce to a series and verify membership in the algebra."""
        s = _as_series(poly, self.precision)
        if not linalg.span_contains(s, self.rows):
            raise NotInAlgebra("series does not lie in the algebra")
        return s

    def _tail_fill(self, rows: dict, start: int) -> None:
        """Insert the exact algebra basis at every valuation ≥ start."""
        for v, b in self.rows.items():
            if v >= start:
                linalg.insert_row(b, rows)

    # -- ideals ---------------------------------------------------------------

    def ideal(self, generators: Iterable) -> "SubspaceIdeal":
        gens = [self.element(g) for g in generators]
        gvals = [v for v in (ps.valuation(g) for g in gens) if v is not None]
        if not gvals:
            raise ValueError("need at least one nonzero ideal generator")
        maxdeg = max(max((i for i, c in enumerate(g) if c), default=0) for g in gens)
        g_prec = self.precision - maxdeg
        if g_prec < 3 * self.conductor:
            raise PrecisionTooLow(
                f"guaranteed precision {g_prec} is below 3·conductor "
                f"= {3 * self.conductor}; rebuild with a larger precision"
            )
        v0 = min(gvals)
        top = v0 + self.conductor
        rows: dict = {}
        for gen in gens:
            vg = ps.valuation(gen)
            if vg is None:
                continue
            for vb, b in self.rows.items():
                if vg + vb < top:
                    linalg.insert_row(ps.mul(gen, b), rows)
        self._tail_fill(rows, top)
        return SubspaceIdeal(self, rows, g_prec)

    def whole_ring_ideal(self) -> "SubspaceIdeal":
        return self.ideal([{0: 1}])

    def colon(self, x, ideal: "SubspaceIdeal") -> "SubspaceIdeal":
        """(x) : I inside the algebra, for x in I of minimal valuation.

        Solved as a rational linear system: the unknown ranges over algebra
        basis coordinates up to v(x) + conductor, everything of higher
        valuation being a member automatically.
        """
        if ideal.algebra is not self:
            raise ValueError("ideal belongs to a different algebra")
        xs = _as_series(x, self.precision)
        if not linalg.span_contains(xs, ideal.rows):
            raise NotInAlgebra("colon pivot must be an element of the ideal")
        vx = ps.valuation(xs)
        if vx != ideal.min_valuation:
            raise NotMinimalValuation(
                f"pivot valuation {vx} differs from the ideal minimum "
                f"{ideal.min_valuation}"
            )
        c = self.conductor
        cutoff = vx + c
        x_rows: dict = {}
        for vb, b in self.rows.items():
            if vb < c and vx + vb < self.precision:
                linalg.insert_row(ps.mul(xs, b), x_rows)
        self._tail_fill(x_rows, cutoff)

        unknown_vals = [v for v in sorted(self.rows) if v <= cutoff]
        constraints = ideal.window_rows()
        residual_cols = []
        for v in unknown_vals:
            col = []
            for u in constraints:
                residual = linalg.full_reduce(ps.mul(self.rows[v], u), x_rows)
                rv = ps.valuation(residual)
                if rv is not None and rv >= cutoff:
                    raise SaturationCheckFailed(
                        "colon residual escaped the certified window"
                    )
                col.append(residual)
            residual_cols.append(col)
        gap_positions = [p for p in range(cutoff) if p not in x_rows]
        matrix = [
            [residual_cols[k][ui][p] for k in range(len(unknown_vals))]
            for ui in range(len(constraints))
            for p in gap_positions
        ]
        solutions = linalg.nullspace(matrix, len(unknown_vals))

        rows: dict = {}
        for sol in solutions:
            acc = ps.make_series({}, self.precision)
            for lam, v in zip(sol, unknown_vals):
                if lam:
                    acc = ps.add(acc, ps.scale(lam, self.rows[v]))
            linalg.insert_row(acc, rows)
        self._tail_fill(rows, cutoff)
        return SubspaceIdeal(self, rows, self.precision)


class SubspaceIdeal:
    """Ideal of a truncated subalgebra as an echelonized rational row space."""

    __slots__ = ("algebra", "rows", "guaranteed_precision", "min_valuation")

    def __init__(self, algebra: TruncatedSubalgebra, rows: dict, guaranteed_precision: int):
        if not rows:
            raise ValueError("the zero ideal is not regular")
        self.algebra = algebra
        self.rows = rows
        self.guaranteed_precision = guaranteed_precision
        self.min_valuation = min(rows)
        self._check_saturation()

    def _check_saturation(self) -> None:
        c = self.algebra.conductor
        cap = min(self.guaranteed_precision, self.algebra.precision)
        for w in range(self.min_valuation + c, cap):
            if w not in self.rows:
                raise SaturationCheckFailed(
                    f"ideal is missing valuation {w} inside its certified window"
                )

    def __repr__(self) -> str:
        return (
            f"SubspaceIdeal(min valuation {self.min_valuation}, "
            f"precision {self.guaranteed_precision}, over {self.algebra!r})"
        )

    def window_rows(self) -> list:
        """Rows below min + conductor; they generate the ideal over the algebra."""
        top = self.min_valuation + self.algebra.conductor
        return [self.rows[v] for v in sorted(self.rows) if v < top]

    def valuations(self) -> list:
        return sorted(self.rows)

    # -- comparisons -----------------------------------------------------------

    def _guard(self, other: "SubspaceIdeal") -> None:
        if self.algebra is not other.algebra:
            raise ValueError("ideals live in different algebras")

    def equals(self, other: "SubspaceIdeal") -> bool:
        """Decide equality at the shared precision; error if uncertifiable."""
        self._guard(other)
        if self.min_valuation != other.min_valuation:
            return False
        v0 = self.min_valuation
        c = self.algebra.conductor
        cap = min(
            self.guaranteed_precision,
            other.guaranteed_precision,
            self.algebra.precision,
        )
        if cap < v0 + 2 * c:
            raise SaturationCheckFailed(
                f"equality needs certified precision {v0 + 2 * c}, have {cap}"
            )
        bound = v0 + c
        mine = [v for v in sorted(self.rows) if v < bound]
        theirs = [v for v in sorted(other.rows) if v < bound]
        if mine != theirs:
            return False
        return all(
            ps.truncate_to(self.rows[v], bound) == ps.truncate_to(other.rows[v], bound)
            for v in mine
        )

    # -- operations --------------------------------------------------------------

    def product(self, other: "SubspaceIdeal") -> "SubspaceIdeal":
        """Ideal product; only the window needs computing, the tail is exact."""
        self._guard(other)
        v0p = self.min_valuation + other.min_valuation
        top = v0p + self.algebra.conductor
        rows: dict = {}
        for a in self.window_rows():
            va = ps.valuation(a)
            for b in other.window_rows():
                if va + ps.valuation(b) < top:
                    linalg.insert_row(ps.mul(a, b), rows)
        self.algebra._tail_fill(rows, top)
        g = min(
            self.guaranteed_precision + other.min_valuation,
            other.guaranteed_precision + self.min_valuation,
        )
        return SubspaceIdeal(self.algebra, rows, g)

    def scaled(self, x) -> "SubspaceIdeal":
        """The ideal x·I for an algebra element x."""
        xs = self.algebra.element(x)
        vx = ps.valuation(xs)
        top = vx + self.min_valuation + self.algebra.conductor
        rows: dict = {}
        for b in self.window_rows():
            if vx + ps.valuation(b) < top:
                linalg.insert_row(ps.mul(xs, b), rows)
        self.algebra._tail_fill(rows, top)
        return SubspaceIdeal(
            self.algebra, rows, self.guaranteed_precision + min(vx, self.min_valuation)
        )

    def minimal_valuation_element(self):
        return self.rows[self.min_valuation]

    def trace_ideal(self) -> "SubspaceIdeal":
        """Trace via the colon formula: multiply by (x):I, then divide by x."""
        x = self.minimal_valuation_element()
        colon = self.algebra.colon(x, self)
        prod = self.product(colon)
        vx = self.min_valuation
        top = prod.min_valuation - vx + self.algebra.conductor
        rows: dict = {}
        for r in prod.window_rows():
            linalg.insert_row(ps.divide(r, x), rows)
        self.algebra._tail_fill(rows, top)
        return SubspaceIdeal(self.algebra, rows, prod.guaranteed_precision - vx)

    def is_trace_ideal(self) -> bool:
        return self.trace_ideal().equals(self)

    def is_stable(self) -> bool:
        """I² = xI for the minimal-valuation element x.

        A negative answer is only reported once x is runtime-verified to be
        a reduction (x·Iⁿ = Iⁿ⁺¹ for some n), which holds for one-branch
        rings but is checked rather than assumed.
        """
        x = self.minimal_valuation_element()
        squared = self.product(self)
        if self.scaled(x).equals(squared):
            return True
        power = squared
        for _ in range(2, self.algebra.conductor + 2):
            nxt = power.product(self)
            if power.scaled(x).equals(nxt):
                return False
            power = nxt
        raise SaturationCheckFailed(
            "could not verify the minimal-valuation element is a reduction"
        )

    def integral_closure(self) -> "SubspaceIdeal":
        """Everything in the algebra of valuation ≥ the ideal minimum."""
        rows = {v: r for v, r in self.algebra.rows.items() if v >= self.min_valuation}
        return SubspaceIdeal(self.algebra, rows, self.algebra.precision)

    def is_integrally_closed(self) -> bool:
        return self.integral_closure().equals(self)

    def valuation_set(self) -> SemigroupIdeal:
        """Leading exponents as a window ideal over the value semigroup."""
        sg = self.algebra.value_semigroup
        c = sg.conductor
        v0 = self.min_valuation
        raw = 1 << c
        for i in range(c):
            if v0 + i in self.rows:
                raw |= 1 << i
        if not ideal_closed(raw, sg.mask, c):
            raise SaturationCheckFailed("valuation set is not closed under the semigroup")
        return from_window(sg, v0, raw)
