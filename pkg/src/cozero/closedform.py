"""Family-specific closed forms for the Wiener index.

Three arithmetic routes, one per supported family, each assembling the
Wiener index from class sizes and a direct classification of class-pair
distances instead of any graph search:

* products of finite fields: classes are the nonzero proper support sets,
  incomparable supports sit at distance 1 and nested ones at distance 2;
* Z(n) with at least two distinct primes: classes are the proper divisors
  d with sizes phi(n/d); incomparable divisor pairs sit at distance 1 and
  nested pairs at distance 2, except the chains that stay inside a single
  prime, which are forced out to distance 3;
* products of prime-power integers-mod rings: classes are per-component
  level tuples, classified to distance 1, 2, or 3 by comparing ideal
  exponent vectors and spotting the one pattern that needs three steps.

Every route is cross-checked against the general quotient method and the
element-level brute force in the test suite.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from math import prod

from .numtheory import euler_phi, factorize, is_prime, prime_power_radical, proper_divisors
from .report import STATUS_DISCONNECTED, STATUS_EMPTY, STATUS_VALUE, WienerReport
from .ringspec import (
    FAMILY_Z,
    RingSpec,
    prime_power_components,
)


# --------------------------------------------------------------------------
# Z(n): divisor-pair classification


@dataclass(frozen=True)
class DivisorPairSets:
    """Proper-divisor pairs of n, bucketed by the class distance they realize.

    `incomparable` holds unordered pairs where neither divisor divides the
    other (adjacent classes, distance 1).  The remaining buckets hold the
    nested pairs (d, e) with d | e, written smaller-first:

    * distance_two_composite: d has at least two distinct prime factors;
    * distance_two_cross_prime: d is a power of a prime p but n/e is not;
    * distance_three_chain: d = p**s and n/e = p**t for the same prime p,
      the only nesting that cannot be bridged in two steps.
    """

    incomparable: tuple[tuple[int, int], ...]
    distance_two_composite: tuple[tuple[int, int], ...]
    distance_two_cross_prime: tuple[tuple[int, int], ...]
    distance_three_chain: tuple[tuple[int, int], ...]

    @property
    def nested(self) -> tuple[tuple[int, int], ...]:
        return self.distance_two_composite + self.distance_two_cross_prime + self.distance_three_chain


def classify_divisor_pairs(n: int) -> DivisorPairSets:
    """Classify every unordered pair of proper divisors of n (needs >= 2 primes)."""
    if len(factorize(n)) < 2:
        raise ValueError(f"divisor-pair classification needs >= 2 distinct primes, got n = {n}")
    ds = proper_divisors(n)
    radical = {d: prime_power_radical(d) for d in ds}
    incomparable = []
    composite = []
    cross_prime = []
    chain = []
    for i, di in enumerate(ds):
        for dj in ds[i + 1 :]:
            if dj % di == 0:
                small, big = di, dj
            elif di % dj == 0:
                small, big = dj, di
            else:
                incomparable.append((di, dj))
                continue
            rad = radical[small]
            if rad is None:
                composite.append((small, big))
                continue
            co_rad = prime_power_radical(n // big)
            if co_rad is not None and co_rad[0] == rad[0]:
                chain.append((small, big))
            else:
                cross_prime.append((small, big))
    return DivisorPairSets(
        incomparable=tuple(incomparable),
        distance_two_composite=tuple(composite),
        distance_two_cross_prime=tuple(cross_prime),
        distance_three_chain=tuple(chain),
    )


def _degenerate_prime_power(p: int, m: int, method: str, t0: float) -> WienerReport:
    # Z(p**m): the ideals form a chain, so the class graph has no edges.
    if m == 1:
        return WienerReport(
            status=STATUS_EMPTY,
            method=method,
            vertex_count=0,
            class_count=0,
            component_count=0,
            elapsed=time.perf_counter() - t0,
        )
    vertex_count = p ** (m - 1) - 1
    if vertex_count == 1:
        return WienerReport(
            status=STATUS_VALUE,
            method=method,
            vertex_count=1,
            class_count=1,
            component_count=1,
            wiener=0,
            elapsed=time.perf_counter() - t0,
        )
    return WienerReport(
        status=STATUS_DISCONNECTED,
        method=method,
        vertex_count=vertex_count,
        class_count=m - 1,
        component_count=vertex_count,
        elapsed=time.perf_counter() - t0,
    )


def wiener_zn(n: int) -> WienerReport:
    """Closed form for Z(n) via the divisor-pair classification."""
    t0 = time.perf_counter()
    if n < 2:
        raise ValueError(f"wiener_zn requires n >= 2, got {n}")
    fac = factorize(n)
    if len(fac) == 1:
        return _degenerate_prime_power(fac[0][0], fac[0][1], "closed", t0)

    ds = proper_divisors(n)
    size = {d: euler_phi(n // d) for d in ds}
    pairs = classify_divisor_pairs(n)

    total = sum(s * (s - 1) for s in size.values())
    total += sum(size[a] * size[b] for a, b in pairs.incomparable)
    total += 2 * sum(size[a] * size[b] for a, b in pairs.distance_two_composite)
    total += 2 * sum(size[a] * size[b] for a, b in pairs.distance_two_cross_prime)
    total += 3 * sum(size[a] * size[b] for a, b in pairs.distance_three_chain)

    if pairs.distance_three_chain:
        diameter = 3
    elif pairs.nested or any(s >= 2 for s in size.values()):
        diameter = 2
    else:
        diameter = 1
    return WienerReport(
        status=STATUS_VALUE,
        method="closed",
        vertex_count=sum(size.values()),
        class_count=len(ds),
        component_count=1,
        wiener=total,
        diameter=diameter,
        elapsed=time.perf_counter() - t0,
    )


# --------------------------------------------------------------------------
# Products of finite fields (reduced rings)


def wiener_reduced(orders) -> WienerReport:
    """Closed form for a product of k >= 2 finite fields.

    Classes correspond to the nonzero proper subsets of component positions
    (the support of an element), with size prod(q_i - 1) over the support.
    Incomparable supports are adjacent; nested supports sit at distance 2.
    """
    t0 = time.perf_counter()
    orders = tuple(orders)
    k = len(orders)
    if k < 2:
        raise ValueError("wiener_reduced needs at least two field components; use the quotient route for a single field")
    for q in orders:
        if prime_power_radical(q) is None:
            raise ValueError(f"{q} is not a prime power")

    masks = list(range(1, (1 << k) - 1))
    sizes = []
    for mask in masks:
        s = 1
        for i in range(k):
            if mask >> i & 1:
                s *= orders[i] - 1
        sizes.append(s)

    total = sum(s * (s - 1) for s in sizes)
    nested_any = False
    for a in range(len(masks)):
        ma, sa = masks[a], sizes[a]
        for b in range(a + 1, len(masks)):
            mb, sb = masks[b], sizes[b]
            if ma & ~mb == 0 or mb & ~ma == 0:
                total += 2 * sa * sb
                nested_any = True
            else:
                total += sa * sb

    diameter = 2 if nested_any or any(s >= 2 for s in sizes) else 1
    return WienerReport(
        status=STATUS_VALUE,
        method="closed",
        vertex_count=sum(sizes),
        class_count=len(masks),
        component_count=1,
        wiener=total,
        diameter=diameter,
        elapsed=time.perf_counter() - t0,
    )


# --------------------------------------------------------------------------
# Products of prime-power integers-mod rings


def _level_size(level: int, p: int, m: int) -> int:
    # level 0 is the zero element, 1 the units, j >= 2 the class of ideal (p**(j-1)).
    if level == 0:
        return 1
    if level == 1:
        return p**m - p ** (m - 1)
    return p ** (m - level + 1) - p ** (m - level)


def level_to_divisor_label(levels, prime_powers) -> tuple[int, ...]:
    """Translate a per-component level tuple into the ideal-label tuple."""
    out = []
    for j, (p, m) in zip(levels, prime_powers):
        if j == 0:
            out.append(p**m)
        elif j == 1:
            out.append(1)
        else:
            out.append(p ** (j - 1))
    return tuple(out)


def _ideal_exponents(levels, prime_powers) -> tuple[int, ...]:
    # Exponent e with (p**e) the component ideal: zero -> m, unit -> 0, else j-1.
    return tuple(
        m if j == 0 else 0 if j == 1 else j - 1
        for j, (_, m) in zip(levels, prime_powers)
    )


def _chain_pattern(x, y, ex, ey) -> bool:
    # x is zero outside a single zero-divisor coordinate r; y is a unit
    # everywhere but r, where it carries a containing zero-divisor ideal.
    r = -1
    for i, j in enumerate(x):
        if j >= 2:
            if r >= 0:
                return False
            r = i
        elif j != 0:
            return False
    if r < 0 or y[r] < 2:
        return False
    for i, j in enumerate(y):
        if i != r and j != 1:
            return False
    return ex[r] >= ey[r]


def _validate_levels(levels, prime_powers, what: str) -> None:
    if len(levels) != len(prime_powers):
        raise ValueError(f"{what} {levels} does not match {len(prime_powers)} components")
    for j, (p, m) in zip(levels, prime_powers):
        if not 0 <= j <= m:
            raise ValueError(f"{what} {levels} has level {j} outside 0..{m}")
    if all(j == 0 for j in levels):
        raise ValueError(f"{what} {levels} is the zero class, not a vertex class")
    if all(j == 1 for j in levels):
        raise ValueError(f"{what} {levels} is the unit class, not a vertex class")


def classify_prime_power_distance(a, b, prime_powers) -> int:
    """Distance (1, 2, or 3) between two classes of a prime-power product.

    Classes are level tuples: level 0 marks the zero element of a component,
    1 its units, and j >= 2 the elements generating the ideal (p**(j-1)).
    Incomparable ideal-exponent vectors mean adjacency.  Distance 3 occurs
    exactly for the chain pattern of `_chain_pattern`, in either
    orientation; every other non-adjacent pair is bridged in two steps.
    """
    a, b = tuple(a), tuple(b)
    prime_powers = tuple((int(p), int(m)) for p, m in prime_powers)
    if len(prime_powers) < 2:
        raise ValueError("classify_prime_power_distance needs k >= 2 components")
    for p, m in prime_powers:
        if m < 1 or not is_prime(p):
            raise ValueError(f"({p}, {m}) is not a prime power")
    _validate_levels(a, prime_powers, "class")
    _validate_levels(b, prime_powers, "class")
    if a == b:
        raise ValueError("classify_prime_power_distance needs two distinct classes")
    return _distance_unchecked(a, b, prime_powers)


def _distance_unchecked(a, b, prime_powers) -> int:
    ea = _ideal_exponents(a, prime_powers)
    eb = _ideal_exponents(b, prime_powers)
    a_in_b = all(x >= y for x, y in zip(ea, eb))
    b_in_a = all(y >= x for x, y in zip(ea, eb))
    if not a_in_b and not b_in_a:
        return 1
    if _chain_pattern(a, b, ea, eb) or _chain_pattern(b, a, eb, ea):
        return 3
    return 2


def wiener_prime_power_product(prime_powers) -> WienerReport:
    """Closed form for a product of k >= 2 rings of prime-power order.

    Enumerates the level-tuple classes, sizes them arithmetically, and sums
    size products weighted by the classified distances.
    """
    t0 = time.perf_counter()
    pps = tuple((int(p), int(m)) for p, m in prime_powers)
    if len(pps) < 2:
        raise ValueError("wiener_prime_power_product needs k >= 2 components; use the quotient route")
    for p, m in pps:
        if m < 1 or not is_prime(p):
            raise ValueError(f"({p}, {m}) is not a prime power")

    zero = tuple(0 for _ in pps)
    unit = tuple(1 for _ in pps)
    classes = [
        levels
        for levels in itertools.product(*(range(m + 1) for _, m in pps))
        if levels != zero and levels != unit
    ]
    sizes = [prod(_level_size(j, p, m) for j, (p, m) in zip(levels, pps)) for levels in classes]

    total = sum(s * (s - 1) for s in sizes)
    max_pair = 0
    for i in range(len(classes)):
        for j in range(i + 1, len(classes)):
            d = _distance_unchecked(classes[i], classes[j], pps)
            total += sizes[i] * sizes[j] * d
            if d > max_pair:
                max_pair = d

    diameter = max(max_pair, 2 if any(s >= 2 for s in sizes) else 0)
    return WienerReport(
        status=STATUS_VALUE,
        method="closed",
        vertex_count=sum(sizes),
        class_count=len(classes),
        component_count=1,
        wiener=total,
        diameter=diameter,
        elapsed=time.perf_counter() - t0,
    )


# --------------------------------------------------------------------------
# Dispatch


def wiener_closed(spec: RingSpec) -> WienerReport:
    """Pick the closed form matching a spec's family.

    Z(n) uses the divisor-pair route; products of integers-mod rings are
    split into their prime-power factors first (an isomorphic ring); field
    products use the reduced-ring form.  Single-component degenerate cases
    are resolved directly.
    """
    t0 = time.perf_counter()
    if spec.is_field_product:
        if len(spec.components) == 1:
            # A field alone has no vertices at all.
            return WienerReport(
                status=STATUS_EMPTY,
                method="closed",
                vertex_count=0,
                class_count=0,
                component_count=0,
                elapsed=time.perf_counter() - t0,
            )
        return wiener_reduced(spec.components)
    if spec.family == FAMILY_Z:
        return wiener_zn(spec.components[0])
    pps = prime_power_components(spec)
    if len(pps) == 1:
        return _degenerate_prime_power(pps[0][0], pps[0][1], "closed", t0)
    return wiener_prime_power_product(pps)
