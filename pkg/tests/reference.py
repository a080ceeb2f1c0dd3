"""Naive set-based reference implementations.

Everything here works on explicit finite sets with a generous window and no
bitmask tricks, so it is an independent route against the window engine.
An ideal is represented as (lo, members) where members lists every element
in [lo, lo + WINDOW) and everything at or past lo + WINDOW belongs.
"""

WINDOW = 64


def semigroup_members(gens, bound):
    out = {0}
    changed = True
    while changed:
        changed = False
        for g in gens:
            for s in list(out):
                if s + g <= bound and s + g not in out:
                    out.add(s + g)
                    changed = True
    return out


def frobenius_of(members, bound):
    gaps = [z for z in range(bound) if z not in members]
    return max(gaps) if gaps else -1


class RefIdeal:
    def __init__(self, lo, members):
        self.lo = lo
        self.members = frozenset(members)

    @classmethod
    def from_gens(cls, sg_members, gens):
        lo = min(gens)
        return cls(lo, {g + h for g in gens for h in sg_members if g + h < lo + WINDOW})

    def __contains__(self, z):
        return z >= self.lo + WINDOW or z in self.members

    def elements(self, a, b):
        return [z for z in range(a, b) if z in self]

    def __eq__(self, other):
        lo = min(self.lo, other.lo)
        return all((z in self) == (z in other) for z in range(lo, lo + WINDOW))

    def __hash__(self):
        return hash((self.lo, self.members))


def _trim(out: set) -> RefIdeal:
    """Renormalize to the actual minimum; `out` must be complete on
    [min(out), min(out) + WINDOW)."""
    m = min(out)
    return RefIdeal(m, {z for z in out if z < m + WINDOW})


def ref_sum(a: RefIdeal, b: RefIdeal) -> RefIdeal:
    ea = a.elements(a.lo, a.lo + WINDOW)
    eb = b.elements(b.lo, b.lo + WINDOW)
    out = {x + y for x in ea for y in eb if x + y < a.lo + b.lo + WINDOW}
    return _trim(out)


def ref_colon(a: RefIdeal, b: RefIdeal) -> RefIdeal:
    out = set()
    for z in range(a.lo - b.lo - 2, a.lo - b.lo + 2 * WINDOW):
        if all(z + f in a for f in b.elements(b.lo, b.lo + WINDOW)):
            out.add(z)
    return _trim(out)


def ref_intersect(a: RefIdeal, b: RefIdeal) -> RefIdeal:
    lo = max(a.lo, b.lo)
    out = {z for z in range(lo, lo + 2 * WINDOW) if z in a and z in b}
    return _trim(out)


def to_ref(e) -> RefIdeal:
    """Convert an engine SemigroupIdeal to the reference shape."""
    lo = e.min_element
    return RefIdeal(lo, {z for z in range(lo, lo + WINDOW) if e.contains(z)})


def sg_to_ref(h) -> RefIdeal:
    return RefIdeal(0, {z for z in range(WINDOW) if h.contains(z)})
