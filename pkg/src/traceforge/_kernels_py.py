"""Pure-Python bitmask kernels.

Membership windows are plain integers: bit ``i`` of an ideal window mask says
whether ``min_element + i`` belongs to the ideal.  Windows have width
``conductor + 1`` and their top bit doubles as the cofinite-tail sentinel
(everything at or past ``min_element + conductor`` is a member), so every
kernel treats sums that fall off the window top as members.

The compiled backend in ``_kernels.pyx`` mirrors these functions exactly for
masks that fit in 64 bits; this module is the reference and the fallback for
wider windows.
"""


def minkowski(a: int, b: int, width: int) -> int:
    """Sumset {i + j : bit i of a, bit j of b}, truncated to `width` bits."""
    acc = 0
    full = (1 << width) - 1
    while b:
        j = (b & -b).bit_length() - 1
        acc |= a << j
        b &= b - 1
    return acc & full


def colon_window(e_mask: int, f_mask: int, c: int) -> int:
    """Window mask of {z : z + F ⊆ E} relative to start minE − minF.

    `e_mask` and `f_mask` are width-(c+1) ideal windows.  Position i < c of
    the result is set iff for every finite window bit j of F either
    i + j ≥ c (lands in E's tail) or bit i+j of E is set; bit c is the tail.
    """
    full = (1 << c) - 1
    comp = ~e_mask & full
    bad = 0
    f = f_mask & full
    while f:
        j = (f & -f).bit_length() - 1
        bad |= comp >> j
        f &= f - 1
    return (~bad & full) | (1 << c)


def addition_closed(mask: int, width: int) -> bool:
    """True iff bit i and bit j set with i + j < width implies bit i+j set."""
    m = mask
    while m:
        j = (m & -m).bit_length() - 1
        if (mask << j) & ~mask & ((1 << width) - 1):
            return False
        m &= m - 1
    return True


def ideal_closed(s_mask: int, h_mask: int, c: int) -> bool:
    """True iff S + (H ∖ {0}) stays inside S ∪ [c, ∞).

    `s_mask` holds bits on [0, c); `h_mask` is the semigroup window of width
    c+1.  Sums at or past c land in the tail and never violate closure.
    """
    full = (1 << c) - 1
    h = h_mask & full & ~1
    while h:
        j = (h & -h).bit_length() - 1
        if (s_mask << j) & full & ~s_mask:
            return False
        h &= h - 1
    return True


def closed_submasks(pool: int, h_mask: int, c: int) -> list:
    """All submasks of `pool` closed under adding H window elements."""
    out = []
    sub = pool
    while True:
        if ideal_closed(sub, h_mask, c):
            out.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & pool
    out.sort()
    return out


def normalize_window(raw: int, c: int) -> tuple:
    """Shift a raw width-(c+1) window so bit 0 is the minimum element.

    Returns (shift, mask): the window start moves up by `shift` and the top
    `shift` positions, which now sit in the cofinite tail, are filled in.
    """
    shift = (raw & -raw).bit_length() - 1
    if shift == 0:
        return 0, raw
    mask = raw >> shift
    mask |= ((1 << shift) - 1) << (c - shift + 1)
    return shift, mask


def align_shift(mask: int, s: int, c: int) -> int:
    """View a width-(c+1) window from `s` positions above its start."""
    if s <= 0:
        return mask
    if s > c:
        return (1 << (c + 1)) - 1
    return (mask >> s) | (((1 << s) - 1) << (c - s + 1))
