"""Exact counting of tensions and flows, and the reciprocity pair counters.

Four families of edge assignments, each defined by a linear condition:

  tension         sums around cycles vanish (fundamental cycle basis)
  flow            conservation at every vertex (signed incidence)
  local tension   sums around face boundaries vanish (face matrix)
  balanced flow   flow whose signed sums across all cocycles vanish
                  (incidence stacked with a cycle basis of the dual)

Counts are brute force over assignment vectors, vectorized with numpy on
int64 blocks; arithmetic is exact (residues mod k or bounded integers,
never floats).  Polynomials in k are recovered by rational Lagrange
interpolation with integer-coefficient and held-out checks; integral
local tension counts get a quasipolynomial fit.

Operations with a second independent characterization compute both and
raise on disagreement, same contract as the orientation predicates.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterator, Mapping, Sequence

import numpy as np

from . import ribbonmap
from .errors import BadModulus, NoFit, NotBoundaryAcyclic
from .guards import check_assignment_scan
from .orientations import (
    Orientation,
    OrientationClass,
    coherent_cocycles,
    count_class,
    enumerate_class,
    is_boundary_acyclic,
)
from .polynomials import (
    QuasiPolynomial,
    as_int_coeffs,
    fit_quasipolynomial,
    lagrange,
    poly_eval,
)
from .ribbonmap import RibbonGraph

_CHUNK = 1 << 18  # assignment rows per numpy block


# -- condition matrices ------------------------------------------------------


def _np_rows(rows: Sequence[Sequence[int]], width: int) -> np.ndarray:
    m = np.zeros((len(rows), width), dtype=np.int64)
    for i, r in enumerate(rows):
        m[i, :] = r
    return m


def _cycle_matrix(g: RibbonGraph, cycs) -> np.ndarray:
    m = np.zeros((len(cycs), g.num_edges), dtype=np.int64)
    for i, c in enumerate(cycs):
        for e, d in zip(c.edges, c.directions):
            m[i, e] += d
    return m


def tension_matrix(g: RibbonGraph) -> np.ndarray:
    return _cycle_matrix(g, g._fundamental_cycles)


def incidence_matrix(g: RibbonGraph) -> np.ndarray:
    """Vertices x edges; +1 at the head, -1 at the tail, 0 on loops."""
    m = np.zeros((g.num_vertices, g.num_edges), dtype=np.int64)
    for e in range(g.num_edges):
        m[g.edge_head_vertex(e), e] += 1
        m[g.edge_tail_vertex(e), e] -= 1
    return m


def local_tension_matrix(g: RibbonGraph) -> np.ndarray:
    return _np_rows(g._face_matrix, g.num_edges)


def balanced_flow_matrix(g: RibbonGraph) -> np.ndarray:
    # Cocycle sums over a generating set: cycles of the dual share edge ids.
    return np.vstack(
        [incidence_matrix(g), _cycle_matrix(g, g.dual._fundamental_cycles)]
    )


# -- assignment scans --------------------------------------------------------


def _blocks(values: np.ndarray, width: int) -> Iterator[np.ndarray]:
    if width == 0:
        yield np.zeros((1, 0), dtype=np.int64)
        return
    if len(values) ** width <= _CHUNK:
        grids = np.meshgrid(*([values] * width), indexing="ij")
        yield np.stack(grids, axis=-1).reshape(-1, width).astype(np.int64)
        return
    for v in values:
        for rest in _blocks(values, width - 1):
            block = np.empty((rest.shape[0], width), dtype=np.int64)
            block[:, 0] = v
            block[:, 1:] = rest
            yield block


def _valid(block: np.ndarray, matrix: np.ndarray, modulus: int | None) -> np.ndarray:
    if matrix.shape[0] == 0:
        return np.ones(block.shape[0], dtype=bool)
    prod = block @ matrix.T
    if modulus is None:
        return np.all(prod == 0, axis=1)
    return np.all(prod % modulus == 0, axis=1)


def _count_solutions(
    matrix: np.ndarray, values: np.ndarray, width: int, modulus: int | None
) -> int:
    total = 0
    for block in _blocks(values, width):
        total += int(np.count_nonzero(_valid(block, matrix, modulus)))
    return total


def _support_counts(
    matrix: np.ndarray, values: np.ndarray, width: int, modulus: int | None
) -> np.ndarray:
    """counts[mask] = solutions whose nonzero entries are exactly mask."""
    out = np.zeros(1 << width, dtype=np.int64)
    weights = (1 << np.arange(width, dtype=np.int64))
    for block in _blocks(values, width):
        ok = _valid(block, matrix, modulus)
        masks = (block[ok] != 0) @ weights
        out += np.bincount(masks, minlength=1 << width).astype(np.int64)
    return out


def _signed_pattern_counts(
    matrix: np.ndarray, values: np.ndarray, width: int, modulus: int | None
) -> np.ndarray:
    """counts[code] = solutions with sign pattern code, base-3 digits sign+1."""
    out = np.zeros(3**width, dtype=np.int64)
    weights = 3 ** np.arange(width, dtype=np.int64)
    for block in _blocks(values, width):
        ok = _valid(block, matrix, modulus)
        codes = (np.sign(block[ok]) + 1) @ weights
        out += np.bincount(codes, minlength=3**width).astype(np.int64)
    return out


def _require_k(k: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise BadModulus(f"k must be a positive integer, got {k!r}")


def _mod_values(k: int, nonzero: bool) -> np.ndarray:
    return np.arange(1 if nonzero else 0, k, dtype=np.int64)


def _box_values(k: int) -> np.ndarray:
    vals = np.arange(-(k - 1), k, dtype=np.int64)
    return vals[vals != 0]


# -- the four counting families ----------------------------------------------


def _tension_count(g: RibbonGraph, k: int, nonzero: bool) -> int:
    _require_k(k)
    vals = _mod_values(k, nonzero)
    check_assignment_scan(k, g.num_edges)
    n = _count_solutions(tension_matrix(g), vals, g.num_edges, k)
    if g.num_edges <= 4:
        # On small graphs, re-derive the condition from every simple cycle.
        n2 = _count_solutions(
            _cycle_matrix(g, g._cycles), vals, g.num_edges, k
        )
        if n2 != n:
            raise AssertionError(
                f"cycle-basis tension count {n} != all-cycles count {n2}"
            )
    return n


def count_nz_tensions(g: RibbonGraph, k: int) -> int:
    """Nowhere-zero assignments E -> Z_k with zero sum around every cycle."""
    return _tension_count(g, k, True)


def count_tensions(g: RibbonGraph, k: int) -> int:
    return _tension_count(g, k, False)


def _flow_count(g: RibbonGraph, k: int, nonzero: bool) -> int:
    _require_k(k)
    check_assignment_scan(k, g.num_edges)
    return _count_solutions(
        incidence_matrix(g), _mod_values(k, nonzero), g.num_edges, k
    )


def count_nz_flows(g: RibbonGraph, k: int) -> int:
    """Nowhere-zero assignments E -> Z_k conserved at every vertex."""
    return _flow_count(g, k, True)


def count_flows(g: RibbonGraph, k: int) -> int:
    return _flow_count(g, k, False)


def _local_tension_count(g: RibbonGraph, k: int, nonzero: bool) -> int:
    _require_k(k)
    check_assignment_scan(k, g.num_edges)
    return _count_solutions(
        local_tension_matrix(g), _mod_values(k, nonzero), g.num_edges, k
    )


def count_nz_local_tensions(g: RibbonGraph, k: int) -> int:
    """Nowhere-zero assignments with zero signed sum around every face."""
    return _local_tension_count(g, k, True)


def count_local_tensions(g: RibbonGraph, k: int) -> int:
    return _local_tension_count(g, k, False)


def _balanced_flow_count(g: RibbonGraph, k: int, nonzero: bool) -> int:
    _require_k(k)
    check_assignment_scan(k, g.num_edges)
    n = _count_solutions(
        balanced_flow_matrix(g), _mod_values(k, nonzero), g.num_edges, k
    )
    n2 = _tension_count(g.dual, k, nonzero)
    if n != n2:
        raise AssertionError(
            f"balanced flow count {n} != dual tension count {n2}"
        )
    return n


def count_nz_balanced_flows(g: RibbonGraph, k: int) -> int:
    """Nowhere-zero flows whose signed cocycle sums all vanish.

    Cross-checked by transporting the values to the dual and counting its
    nowhere-zero tensions; the two totals must agree.
    """
    return _balanced_flow_count(g, k, True)


def count_balanced_flows(g: RibbonGraph, k: int) -> int:
    return _balanced_flow_count(g, k, False)


# -- integral (bounded integer) counts ---------------------------------------


def count_integral_local_tensions(g: RibbonGraph, k: int) -> int:
    """Nowhere-zero integer local tensions with |t(e)| < k."""
    _require_k(k)
    check_assignment_scan(2 * k - 1, g.num_edges)
    return _count_solutions(
        local_tension_matrix(g), _box_values(k), g.num_edges, None
    )


def count_integral_flows(g: RibbonGraph, k: int) -> int:
    """Nowhere-zero integer flows with |f(e)| < k."""
    _require_k(k)
    check_assignment_scan(2 * k - 1, g.num_edges)
    return _count_solutions(incidence_matrix(g), _box_values(k), g.num_edges, None)


# -- polynomial recovery -----------------------------------------------------


def interpolate(samples: Sequence[tuple[int, int]]) -> list[int]:
    """Exact integer-coefficient polynomial through (k, count) samples."""
    return as_int_coeffs(lagrange([(int(k), int(v)) for k, v in samples]))


def _poly_driver(g: RibbonGraph, counter: Callable[[RibbonGraph, int], int]) -> list[int]:
    top = g.num_edges + 1
    coeffs = interpolate([(k, counter(g, k)) for k in range(1, top + 1)])
    for k in (top + 1, top + 2):
        if poly_eval(coeffs, k) != counter(g, k):
            raise AssertionError(f"interpolant misses held-out sample at k={k}")
    return coeffs


def poly_tension(g: RibbonGraph) -> list[int]:
    return _poly_driver(g, count_nz_tensions)


def poly_flow(g: RibbonGraph) -> list[int]:
    return _poly_driver(g, count_nz_flows)


def poly_local_tension(g: RibbonGraph) -> list[int]:
    return _poly_driver(g, count_nz_local_tensions)


def poly_balanced_flow(g: RibbonGraph) -> list[int]:
    return _poly_driver(g, count_nz_balanced_flows)


def _quasi_driver(
    g: RibbonGraph,
    counter: Callable[[RibbonGraph, int], int],
    max_period: int,
) -> QuasiPolynomial:
    degree = g.num_edges
    samples: dict[int, int] = {}
    last: NoFit | None = None
    for period in range(1, max_period + 1):
        for k in range(1, period * (degree + 2) + 3):
            if k not in samples:
                samples[k] = counter(g, k)
        try:
            return fit_quasipolynomial(samples, degree, max_period=period)
        except NoFit as exc:
            last = exc
    raise NoFit(str(last))


def quasi_integral_local_tensions(
    g: RibbonGraph, max_period: int = 6
) -> QuasiPolynomial:
    """Smallest-period quasipolynomial through the integral local tension counts."""
    return _quasi_driver(g, count_integral_local_tensions, max_period)


def quasi_integral_flows(g: RibbonGraph, max_period: int = 6) -> QuasiPolynomial:
    return _quasi_driver(g, count_integral_flows, max_period)


# -- reciprocity pair counters -----------------------------------------------

# Orientation-class counts are isomorphism invariants, so results for the
# small graphs produced by repeated surgeries are memoized by canonical code.
_class_count_cache: dict[tuple[bytes, OrientationClass], int] = {}


def _cached_count_class(h: RibbonGraph, cls: OrientationClass) -> int:
    key = (h._canonical_code, cls)
    if key not in _class_count_cache:
        _class_count_cache[key] = count_class(h, cls)
    return _class_count_cache[key]


def _pair_total(
    g: RibbonGraph,
    k: int,
    matrix: np.ndarray,
    surgery: Callable[[list[int]], RibbonGraph],
    cls: OrientationClass,
) -> int:
    _require_k(k)
    check_assignment_scan(k, g.num_edges)
    counts = _support_counts(matrix, _mod_values(k, False), g.num_edges, k)
    total = 0
    for mask in np.nonzero(counts)[0]:
        supp = [e for e in range(g.num_edges) if mask >> e & 1]
        total += int(counts[mask]) * _cached_count_class(surgery(supp), cls)
    return total


def reciprocity_pairs_tension(g: RibbonGraph, k: int) -> int:
    """Pairs (tension t, acyclic orientation of g with supp(t) deleted)."""
    return _pair_total(
        g,
        k,
        tension_matrix(g),
        lambda supp: ribbonmap.delete(g, supp),
        OrientationClass.AO,
    )


def reciprocity_pairs_flow(g: RibbonGraph, k: int) -> int:
    """Pairs (flow f, totally cyclic orientation of g with supp(f) contracted abstractly)."""
    return _pair_total(
        g,
        k,
        incidence_matrix(g),
        lambda supp: ribbonmap.abstract_contract(g, supp),
        OrientationClass.TCO,
    )


def reciprocity_pairs_local_tension(g: RibbonGraph, k: int) -> int:
    """Pairs (local tension t, boundary acyclic orientation after the
    coloop-aware removal of supp(t))."""
    return _pair_total(
        g,
        k,
        local_tension_matrix(g),
        lambda supp: ribbonmap.double_slash(g, supp),
        OrientationClass.BAO,
    )


def reciprocity_pairs_balanced_flow(g: RibbonGraph, k: int) -> int:
    """Pairs (balanced flow f, totally bi-walkable orientation of g with
    supp(f) contracted as a ribbon graph)."""
    return _pair_total(
        g,
        k,
        balanced_flow_matrix(g),
        lambda supp: ribbonmap.contract(g, supp),
        OrientationClass.TBO,
    )


def integral_local_tension_reciprocity_pairs(g: RibbonGraph, k: int) -> int:
    """Pairs (integer local tension t with |t| <= k, compatible BAO of g).

    Compatible means the orientation keeps the reference direction where
    t > 0 and reverses it where t < 0; edges with t = 0 are free.  At
    k = 0 only t = 0 remains and the result is |BAO(g)|.
    """
    if not isinstance(k, int) or k < 0:
        raise BadModulus(f"k must be a nonnegative integer, got {k!r}")
    width = g.num_edges
    check_assignment_scan(2 * k + 1, width)
    vals = np.arange(-k, k + 1, dtype=np.int64)
    pattern = _signed_pattern_counts(local_tension_matrix(g), vals, width, None)
    bao = enumerate_class(g, OrientationClass.BAO)
    total = 0
    for code in np.nonzero(pattern)[0]:
        digits = []
        c = int(code)
        for _ in range(width):
            digits.append(c % 3 - 1)
            c //= 3
        compatible = sum(
            1
            for o in bao
            if all(s == 0 or o.signs[e] == s for e, s in enumerate(digits))
        )
        total += int(pattern[code]) * compatible
    return total


# -- witness vectors ---------------------------------------------------------


def bao_witness_vector(g: RibbonGraph, o: Orientation) -> tuple[Fraction, ...]:
    """Sum of the sign vectors of all coherently oriented cocycles.

    For a boundary acyclic orientation the result is a nowhere-zero
    element of the face matrix kernel whose signs reproduce the
    orientation; all three postconditions are asserted.
    """
    if not is_boundary_acyclic(g, o):
        raise NotBoundaryAcyclic(
            "orientation admits a coherently oriented boundary"
        )
    p = [0] * g.num_edges
    for coc in coherent_cocycles(g, o):
        for e in coc.edges:
            p[e] += o.signs[e]
    vec = np.array(p, dtype=np.int64)
    if np.any(local_tension_matrix(g) @ vec != 0):
        raise AssertionError("witness vector escapes the face matrix kernel")
    if any(x == 0 for x in p):
        raise AssertionError("witness vector has a zero entry")
    if any((x > 0) != (s == 1) for x, s in zip(p, o.signs)):
        raise AssertionError("witness vector sign mismatch")
    return tuple(Fraction(x) for x in p)
