"""Quotient matrices over orbit partitions and exact distance spectra.

The pipeline: an orbit partition of a subgroup of automorphisms induces
an equitable partition of the distance matrix; the cell-sum quotient
matrix Q then carries eigenvalues of D, and when the graph is
vertex-transitive and the partition has a singleton cell, the distinct
eigenvalue sets of Q and D coincide. That reduces a |V| x |V| spectrum
problem to the quotient size plus a handful of exact rank computations.
"""

from dataclasses import dataclass
from fractions import Fraction

from orbitspectra.exactla import (
    IntMatrix,
    IntPolynomial,
    RationalVector,
    char_poly,
    eigen_multiplicity,
    integer_roots,
    mat_vec,
)
from orbitspectra.graphs import (
    DistanceMatrix,
    all_pairs_distances,
    build_lcr,
    pair_vertices,
)
from orbitspectra.perms import (
    GeneratorSet,
    OrbitPartition,
    Permutation,
    is_vertex_transitive_under,
    lcr_automorphism_gens,
    lcr_stabilizer_gens,
    orbits,
)

METHODS = ("rank-sweep", "char-poly", "quotient-assisted")

# orbit representatives of the two-point stabilizer on pair vertices, in
# the fixed reporting order used by the closed-form quotient matrix
STABILIZER_CELL_REPS = ((1, 2), (1, 3), (3, 1), (2, 1), (2, 3), (3, 2), (3, 4))


class NonEquitablePartitionError(ValueError):
    """A partition whose cell sums depend on the representative chosen."""

    def __init__(self, cell, rep_a, rep_b, column):
        self.cell, self.rep_a, self.rep_b, self.column = cell, rep_a, rep_b, column
        super().__init__(
            f"partition is not equitable: cell {cell} members {rep_a} and {rep_b} "
            f"give different sums against cell {column}"
        )


class NotAnEigenvectorError(ValueError):
    pass


class VerificationError(ValueError):
    """A verification pipeline stage that did not check out."""

    def __init__(self, stage, detail):
        self.stage = stage
        self.detail = detail
        super().__init__(f"verification failed at stage '{stage}': {detail}")


@dataclass(frozen=True)
class QuotientMatrix:
    """Cell-sum quotient of a distance matrix over an orbit partition."""

    matrix: IntMatrix
    partition: OrbitPartition
    representatives: tuple
    source: DistanceMatrix


class Spectrum:
    """Exact spectrum: integer eigenvalues with multiplicities, plus an
    optional residual factor witnessing non-integrality."""

    __slots__ = ("integer_part", "residual", "order")

    def __init__(self, integer_part, residual, order, trace=0):
        integer_part = tuple((int(v), int(m)) for v, m in integer_part)
        if list(integer_part) != sorted(integer_part):
            raise ValueError("eigenvalues must be sorted ascending")
        if any(m < 1 for _, m in integer_part):
            raise ValueError("multiplicities must be positive")
        if residual is not None and residual.degree == 0:
            residual = None
        total = sum(m for _, m in integer_part)
        res_deg = 0
        weighted = sum(v * m for v, m in integer_part)
        if residual is not None:
            if residual.degree < 2:
                raise ValueError("residual factor must have degree >= 2")
            if residual.leading_coefficient != 1:
                raise ValueError("residual factor must be monic")
            res_deg = residual.degree
            weighted += -residual.coefficients[-2]
        if total + res_deg != order:
            raise ValueError(
                f"multiplicities ({total}) + residual degree ({res_deg}) != order ({order})"
            )
        if weighted != trace:
            raise ValueError(f"eigenvalue sum {weighted} != trace {trace}")
        self.integer_part = integer_part
        self.residual = residual
        self.order = order

    @property
    def is_integral(self):
        return self.residual is None

    @property
    def distinct_values(self):
        return tuple(v for v, _ in self.integer_part)

    def multiplicity(self, lam):
        for v, m in self.integer_part:
            if v == lam:
                return m
        return 0

    def __eq__(self, other):
        return (
            isinstance(other, Spectrum)
            and self.integer_part == other.integer_part
            and self.residual == other.residual
            and self.order == other.order
        )

    def __repr__(self):
        body = ", ".join(f"{v}^{m}" for v, m in self.integer_part)
        tail = "" if self.residual is None else f"; residual deg {self.residual.degree}"
        return f"Spectrum({body}{tail})"


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class IntegralityReport:
    """Outcome of a distance-integrality computation, with its check ledger."""

    graph: str
    order: int
    method: str
    integral: bool
    spectrum: Spectrum
    distinct: tuple
    checks: tuple

    def to_json_dict(self):
        out = {
            "graph": self.graph,
            "order": self.order,
            "method": self.method,
            "integral": self.integral,
            "eigenvalues": [[v, m] for v, m in self.spectrum.integer_part],
        }
        if self.spectrum.residual is not None:
            out["residual_coefficients"] = [
                str(c) for c in self.spectrum.residual.coefficients
            ]
        out["distinct"] = list(self.distinct)
        out["checks"] = [
            {"name": c.name, "pass": c.passed, "detail": c.detail} for c in self.checks
        ]
        return out


def quotient_matrix(d: DistanceMatrix, pi: OrbitPartition) -> QuotientMatrix:
    """Cell-summed distance matrix over pi, verified equitable.

    Every member of every cell must produce the same row of cell sums;
    the first disagreement is reported with both representatives and the
    offending column.
    """
    if pi.degree != d.order:
        raise ValueError(
            f"partition covers {pi.degree} vertices, matrix has {d.order}"
        )
    m = pi.cell_count
    cell_of = pi.cell_of
    sums = []
    for v in range(d.order):
        row = [0] * m
        dv = d.rows[v]
        for w, dw in enumerate(dv):
            row[cell_of[w]] += dw
        sums.append(row)
    q_rows = []
    for k, cell in enumerate(pi.cells):
        rep = cell[0]
        expect = sums[rep]
        for v in cell[1:]:
            if sums[v] != expect:
                col = next(j for j in range(m) if sums[v][j] != expect[j])
                raise NonEquitablePartitionError(k, rep, v, col)
        q_rows.append(expect)
    return QuotientMatrix(
        IntMatrix(q_rows), pi, pi.representatives(), d
    )


def lcr_quotient_closed_form(n) -> IntMatrix:
    """The 7x7 quotient matrix of the crown line graph in closed form.

    Rows and columns follow the stabilizer orbit order with
    representatives (1,2), (1,3), (3,1), (2,1), (2,3), (3,2), (3,4).
    """
    if n < 4:
        raise ValueError("closed-form quotient defined for n >= 4")
    return IntMatrix(
        [
            [0, n - 2, 2 * n - 4, 3, 2 * n - 4, n - 2, 2 * (n - 2) * (n - 3)],
            [1, n - 3, 2 * n - 3, 2, 2 * n - 5, 2 * n - 4, (n - 3) * (2 * n - 5)],
            [2, 2 * n - 3, n - 3, 1, 2 * n - 4, 2 * n - 5, (n - 3) * (2 * n - 5)],
            [3, 2 * n - 4, n - 2, 0, n - 2, 2 * n - 4, 2 * (n - 2) * (n - 3)],
            [2, 2 * n - 5, 2 * n - 4, 1, n - 3, 2 * n - 3, (n - 3) * (2 * n - 5)],
            [1, 2 * n - 4, 2 * n - 5, 2, 2 * n - 3, n - 3, (n - 3) * (2 * n - 5)],
            [2, 2 * n - 5, 2 * n - 5, 2, 2 * n - 5, 2 * n - 5, 2 * (n - 4) * (n - 2) + 3],
        ]
    )


def _require_eigenvector(m: IntMatrix, f: RationalVector, lam, what):
    if f.is_zero:
        raise NotAnEigenvectorError(f"{what}: eigenvector must be nonzero")
    got = mat_vec(m, f)
    want = f.scaled(lam)
    if got != want:
        raise NotAnEigenvectorError(
            f"{what}: vector is not an exact eigenvector for {lam}"
        )


def lift_eigenvector(q: QuotientMatrix, f: RationalVector, lam) -> RationalVector:
    """Extend a Q-eigenvector to the vertex set, constant on each cell.

    The result is verified to be an exact eigenvector of the source
    distance matrix with the same eigenvalue.
    """
    _require_eigenvector(q.matrix, f, lam, "lift")
    cell_of = q.partition.cell_of
    lifted = RationalVector(f.entries[cell_of[v]] for v in range(q.source.order))
    d_matrix = IntMatrix(q.source.rows)
    if mat_vec(d_matrix, lifted) != lifted.scaled(lam):
        raise NotAnEigenvectorError("lift: lifted vector failed verification")
    return lifted


def project_eigenvector(
    d: DistanceMatrix, pi: OrbitPartition, f: RationalVector, lam
) -> RationalVector:
    """Collapse a cell-constant D-eigenvector to one value per cell.

    Requires f to be an exact eigenvector of d that is constant on every
    cell of pi; the projected vector is verified against the quotient.
    """
    _require_eigenvector(IntMatrix(d.rows), f, lam, "project")
    values = []
    for k, cell in enumerate(pi.cells):
        val = f.entries[cell[0]]
        for v in cell[1:]:
            if f.entries[v] != val:
                raise ValueError(f"vector is not constant on cell {k}")
        values.append(val)
    projected = RationalVector(values)
    q = quotient_matrix(d, pi)
    if mat_vec(q.matrix, projected) != projected.scaled(lam):
        raise NotAnEigenvectorError("project: projected vector failed verification")
    return projected


def permute_eigenvector(f: RationalVector, p: Permutation) -> RationalVector:
    """The vector v -> f(p(v)); an automorphism maps eigenvectors to eigenvectors."""
    if p.degree != f.length:
        raise ValueError(f"permutation degree {p.degree} != vector length {f.length}")
    return RationalVector(f.entries[p.images[v]] for v in range(f.length))


def symmetrize_eigenvector(
    f: RationalVector, pi: OrbitPartition, gens: GeneratorSet | None = None
) -> RationalVector:
    """Cell-sum replication: each entry becomes the sum of f over its cell.

    This is the group-averaged vector up to a positive factor per orbit,
    so it is either zero or an eigenvector for the same eigenvalue, and
    it is constant on cells by construction. When gens is supplied, each
    cell is checked to be closed under every generator.
    """
    if pi.degree != f.length:
        raise ValueError(f"partition degree {pi.degree} != vector length {f.length}")
    if gens is not None:
        for g in gens.generators:
            for k, cell in enumerate(pi.cells):
                members = set(cell)
                if any(g.images[v] not in members for v in cell):
                    raise ValueError(f"cell {k} is not closed under generator {g!r}")
    sums = [sum((f.entries[v] for v in cell), Fraction(0)) for cell in pi.cells]
    return RationalVector(sums[pi.cell_of[v]] for v in range(f.length))


def _sweep_integer_eigenvalues(matrix, order, rho):
    pairs = []
    remaining = order
    for lam in range(-rho, rho + 1):
        mult = eigen_multiplicity(matrix, lam)
        if mult:
            pairs.append((lam, mult))
            remaining -= mult
            if remaining == 0:
                break
    return pairs, remaining


def distance_spectrum(
    g, method="rank-sweep", partition=None, transitive_gens=None
) -> Spectrum:
    """Complete exact distance spectrum of a connected graph.

    rank-sweep tests every integer in [-rho, rho] (rho = max row sum, a
    spectral radius bound) by exact rank, falling back to the
    characteristic polynomial for a residual when the multiplicities
    do not exhaust the order. char-poly always expands det(xI - D).
    quotient-assisted takes eigenvalue candidates from a supplied
    singleton-cell orbit partition of a vertex-transitive graph.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    d = all_pairs_distances(g)
    matrix = IntMatrix(d.rows)
    order = d.order
    rho = max(d.row_sums())

    if method == "rank-sweep":
        pairs, remaining = _sweep_integer_eigenvalues(matrix, order, rho)
        if remaining == 0:
            return Spectrum(pairs, None, order)
        roots, residual = integer_roots(char_poly(matrix), bound=rho)
        if roots != pairs:
            # symmetric matrices have equal geometric and algebraic
            # multiplicities, so the two routes must agree exactly
            raise ArithmeticError("rank sweep and characteristic polynomial disagree")
        return Spectrum(roots, residual, order)

    if method == "char-poly":
        roots, residual = integer_roots(char_poly(matrix), bound=rho)
        return Spectrum(roots, residual, order)

    # quotient-assisted
    if partition is None or transitive_gens is None:
        raise ValueError(
            "quotient-assisted method needs an orbit partition and "
            "vertex-transitivity generators"
        )
    if not is_vertex_transitive_under(g, transitive_gens):
        raise ValueError("graph is not vertex-transitive under the given generators")
    if not partition.singleton_cells():
        raise ValueError("orbit partition must contain a singleton cell")
    q = quotient_matrix(d, partition)
    q_roots, q_residual = integer_roots(char_poly(q.matrix), bound=rho)
    pairs = []
    total = 0
    for lam, _ in q_roots:
        mult = eigen_multiplicity(matrix, lam)
        if mult:
            pairs.append((lam, mult))
            total += mult
    if q_residual.degree >= 1 or total != order:
        raise ValueError(
            "quotient-assisted candidates do not exhaust the spectrum "
            f"(covered {total} of {order}); the graph is likely not "
            "distance integral"
        )
    return Spectrum(pairs, None, order)


def is_distance_integral(
    g, method="rank-sweep", description=None, partition=None, transitive_gens=None
) -> IntegralityReport:
    """Full integrality report for a connected graph."""
    spectrum = distance_spectrum(
        g, method, partition=partition, transitive_gens=transitive_gens
    )
    checks = [
        Check(
            "spectrum-complete",
            True,
            f"multiplicities + residual degree = {spectrum.order}",
        ),
        Check("trace-zero", True, "weighted eigenvalue sum equals 0"),
    ]
    return IntegralityReport(
        graph=description or repr(g),
        order=spectrum.order,
        method=method,
        integral=spectrum.is_integral,
        spectrum=spectrum,
        distinct=spectrum.distinct_values,
        checks=tuple(checks),
    )


def _expected_lcr_eigen_multiset(n):
    expected = {}
    for lam, mult in (
        (-1, 1),
        (1, 1),
        (-1 - n, 2),
        (3 - n, 2),
        (2 * n * n - 4 * n + 3, 1),
    ):
        expected[lam] = expected.get(lam, 0) + mult
    return sorted(expected.items())


def verify_lcr(n) -> IntegralityReport:
    """End-to-end certification that the crown line graph is distance integral.

    Builds the graph, runs BFS, computes the stabilizer orbit partition
    and its quotient matrix, compares against the closed form, extracts
    the quotient eigenvalues exactly, and certifies the distance
    spectrum. Any mismatch raises VerificationError naming the stage.
    """
    if n < 4:
        raise VerificationError("preconditions", f"defined for n >= 4, got {n}")
    checks = []

    def stage(name, ok, detail):
        if not ok:
            raise VerificationError(name, detail)
        checks.append(Check(name, True, detail))

    g = build_lcr(n)
    order = n * (n - 1)
    stage(
        "graph-shape",
        g.vertex_count == order and g.is_regular() == 2 * n - 4,
        f"{order} vertices, regular of degree {2 * n - 4}",
    )

    d = all_pairs_distances(g)
    row_sums = set(d.row_sums())
    perron = 2 * n * n - 4 * n + 3
    stage(
        "distances",
        d.max_entry() == 3 and row_sums == {perron},
        f"diameter 3, constant row sum {perron}",
    )

    pi = orbits(lcr_stabilizer_gens(n))
    index = {p: k for k, p in enumerate(pair_vertices(n))}
    reps = [index[p] for p in STABILIZER_CELL_REPS]
    stage(
        "stabilizer-orbits",
        pi.cell_count == 7,
        "two-point stabilizer has 7 orbits",
    )
    try:
        pi = pi.reorder_by_representatives(reps)
    except ValueError as exc:
        raise VerificationError("orbit-representatives", str(exc)) from exc
    sizes = tuple(len(c) for c in pi.cells)
    expected_sizes = (1, n - 2, n - 2, 1, n - 2, n - 2, (n - 2) * (n - 3))
    stage("orbit-sizes", sizes == expected_sizes, f"cell sizes {sizes}")

    try:
        q = quotient_matrix(d, pi)
    except NonEquitablePartitionError as exc:
        raise VerificationError("quotient-equitable", str(exc)) from exc
    checks.append(Check("quotient-equitable", True, "all cell rows agree"))

    stage(
        "quotient-closed-form",
        q.matrix == lcr_quotient_closed_form(n),
        "computed quotient equals the closed-form matrix (49 entries)",
    )

    q_roots, q_residual = integer_roots(char_poly(q.matrix), bound=perron)
    expected_q = _expected_lcr_eigen_multiset(n)
    stage(
        "quotient-spectrum",
        q_roots == expected_q and q_residual == IntPolynomial.one(),
        f"quotient eigenvalues {q_roots} with residual 1",
    )

    spectrum = distance_spectrum(
        g,
        "quotient-assisted",
        partition=pi,
        transitive_gens=lcr_automorphism_gens(n),
    )
    expected_distinct = tuple(sorted({-n - 1, -n + 3, -1, 1, perron}))
    stage(
        "distance-spectrum-distinct",
        spectrum.distinct_values == expected_distinct,
        f"distinct distance eigenvalues {spectrum.distinct_values}",
    )
    stage(
        "multiplicity-sum",
        sum(m for _, m in spectrum.integer_part) == order,
        f"multiplicities sum to {order}",
    )
    stage(
        "perron-simple",
        spectrum.multiplicity(perron) == 1,
        f"largest eigenvalue {perron} is simple",
    )

    return IntegralityReport(
        graph=f"lcr n={n}",
        order=order,
        method="quotient-assisted",
        integral=spectrum.is_integral,
        spectrum=spectrum,
        distinct=spectrum.distinct_values,
        checks=tuple(checks),
    )
