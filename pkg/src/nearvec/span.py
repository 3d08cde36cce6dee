"""Linear combinations, span, dimension and bases over twisted actions.

Inside one exponent class the coordinate maps x -> x^(1/q_i) straighten
the twist: they carry vector addition to the class's induced scalar
addition and the action to plain multiplication, turning each regular
component into an honest vector space over the induced field.  Span and
coordinates are computed constructively through that straightening and
certified against closure oracles that know nothing about it.
"""

from itertools import product

from .errors import (
    HypothesisUnmetError,
    NotABasisError,
    NotInQuasiKernelError,
    TooLargeError,
)
from .space import vector_to_json

INDEPENDENCE_SCAN_LIMIT = 1 << 22


# -- straightened coordinates over the induced field -------------------------


def _tau(space, v, cid):
    """Per-coordinate untwisting of a class-supported vector."""
    return tuple(space.inverse_pow_table(i)[v[i]] for i in space.classes[cid].support)


class _InducedFieldOps:
    """The induced field K = (A, +_class, *) with enough ops for Gauss."""

    def __init__(self, space, cid):
        self.add = space.class_addition_table(cid)
        self.neg = [row.index(0) for row in self.add]
        self.mul = space.field.op_tables()[1]
        self.inv = space.field.inv


def _solve(kops, columns, target):
    """Solve sum_j x_j * col_j = target over K by Gauss-Jordan.

    Returns the coefficient list, or None if inconsistent.  Raises if the
    columns are dependent (callers only pass independent sets).
    """
    npos = len(target)
    k = len(columns)
    rows = [[columns[j][pos] for j in range(k)] + [target[pos]] for pos in range(npos)]
    kadd, kneg, fmul, finv = kops.add, kops.neg, kops.mul, kops.inv
    pivot_row_of = {}
    r = 0
    for j in range(k):
        pivot = next((i for i in range(r, npos) if rows[i][j] != 0), None)
        if pivot is None:
            raise NotABasisError("dependent columns in coordinate solve")
        rows[r], rows[pivot] = rows[pivot], rows[r]
        scale = finv(rows[r][j])
        rows[r] = [fmul[scale][x] for x in rows[r]]
        for i in range(npos):
            if i != r and rows[i][j] != 0:
                factor = kneg[rows[i][j]]
                scaled = [fmul[factor][x] for x in rows[r]]
                rows[i] = [kadd[a][b] for a, b in zip(rows[i], scaled)]
        pivot_row_of[j] = r
        r += 1
    for i in range(r, npos):
        if rows[i][k] != 0:
            return None
    return [rows[pivot_row_of[j]][k] for j in range(k)]


def coordinates_in_independent_set(space, vectors, target):
    """Coefficients expressing target over independent quasi-kernel
    vectors, or None when no expansion exists."""
    members = space.quasi_kernel().members
    by_class = {}
    for idx, b in enumerate(vectors):
        if b == space.zero or b not in members:
            raise NotInQuasiKernelError(f"{b} is not a nonzero quasi-kernel vector")
        by_class.setdefault(space.class_of(b), []).append(idx)

    coeffs = [0] * len(vectors)
    target_classes = {space._class_of_coord[i] for i in space.support(target)}
    if not target_classes <= set(by_class):
        return None
    for cid, idxs in by_class.items():
        cols = [_tau(space, vectors[i], cid) for i in idxs]
        part = tuple(target[i] for i in space.classes[cid].support)
        tpart = tuple(
            space.inverse_pow_table(i)[x]
            for i, x in zip(space.classes[cid].support, part)
        )
        solved = _solve(_InducedFieldOps(space, cid), cols, tpart)
        if solved is None:
            return None
        for i, x in zip(idxs, solved):
            coeffs[i] = x
    return tuple(coeffs)


# -- linear combinations and closures ----------------------------------------


def linear_combinations(space, v):
    """L(v): all sums of scalar multiples of v, by worklist closure of
    the multiple set under addition of further multiples."""
    if space.size > (1 << 21):
        raise TooLargeError("space too large to materialise L(v)")
    gens = sorted({space.scalar_mul(a, v) for a in range(space.field.order)})
    closure = set(gens)
    queue = list(gens)
    add = space.add
    while queue:
        w = queue.pop()
        for g in gens:
            u = add(w, g)
            if u not in closure:
                closure.add(u)
                queue.append(u)
    return frozenset(closure)


def subspace_closure_oracle(space, generators):
    """Smallest add- and scalar-closed superset of the generators.

    Worklist closure of the scaled generators under addition; scalars are
    endomorphisms, so rescaling a sum of scaled generators is again such
    a sum and the result is scalar-closed without closing explicitly.
    """
    if space.size > (1 << 21):
        raise TooLargeError("space too large to materialise the closure")
    scaled = sorted(
        {space.scalar_mul(a, g) for g in generators for a in range(space.field.order)}
        | {space.zero}
    )
    closure = set(scaled)
    queue = list(scaled)
    add = space.add
    while queue:
        w = queue.pop()
        for g in scaled:
            u = add(w, g)
            if u not in closure:
                closure.add(u)
                queue.append(u)
    return frozenset(closure)


def subspace_closure_naive(space, generators, limit=512):
    """Literal fixed-point iteration W <- W + W union A.W; quadratic per
    round, so only for small closures, where it cross-checks the
    worklist oracle from first principles."""
    closure = set(generators) | {space.zero}
    add = space.add
    scalar_mul = space.scalar_mul
    scalars = range(space.field.order)
    while True:
        if len(closure) > limit:
            raise TooLargeError(f"naive closure exceeded {limit} elements")
        new = set()
        snapshot = list(closure)
        for a in scalars:
            for w in snapshot:
                u = scalar_mul(a, w)
                if u not in closure:
                    new.add(u)
        for i, w in enumerate(snapshot):
            for u in snapshot[i:]:
                s = add(w, u)
                if s not in closure:
                    new.add(s)
        if not new:
            return frozenset(closure)
        closure |= new


# -- span ---------------------------------------------------------------------


class Subspace:
    """A subspace presented by independent quasi-kernel generators,
    grouped by the regular component carrying them."""

    def __init__(self, space, generators, generator_classes, members):
        self.space = space
        self.generators = tuple(generators)
        self.generator_classes = tuple(generator_classes)
        self.members = frozenset(members)
        self.dim = len(self.generators)

    @property
    def component_supports(self):
        seen = []
        for cid in self.generator_classes:
            sup = list(self.space.classes[cid].support)
            if sup not in seen:
                seen.append(sup)
        return seen

    def to_json(self, member_limit=4096):
        data = {
            "generators": [vector_to_json(self.space, g) for g in self.generators],
            "dim": self.dim,
            "component_supports": self.component_supports,
            "member_count": len(self.members),
        }
        if len(self.members) <= member_limit:
            data["members"] = [
                vector_to_json(self.space, v) for v in sorted(self.members)
            ]
        return data


def span_of(space, generators):
    """Constructive span: split the generators over the regular
    components, keep a maximal independent subset of the parts per
    component, and materialise all coefficient combinations."""
    if space.size > (1 << 21):
        raise TooLargeError("space too large to materialise spans")
    parts_by_class = {}
    for g in generators:
        for cid in sorted({space._class_of_coord[i] for i in space.support(g)}):
            sup = set(space.classes[cid].support)
            part = tuple(x if i in sup else 0 for i, x in enumerate(g))
            parts_by_class.setdefault(cid, []).append(part)

    chosen = []
    chosen_classes = []
    for cid in sorted(parts_by_class):
        kops = _InducedFieldOps(space, cid)
        kadd, kneg, fmul, finv = kops.add, kops.neg, kops.mul, kops.inv
        echelon = []  # reduced tau-rows with their pivot positions
        for part in parts_by_class[cid]:
            row = list(_tau(space, part, cid))
            for pivot_pos, pivot_row in echelon:
                c = row[pivot_pos]
                if c != 0:
                    factor = kneg[c]
                    row = [
                        kadd[a][fmul[factor][b]] for a, b in zip(row, pivot_row)
                    ]
            pivot_pos = next((i for i, x in enumerate(row) if x != 0), None)
            if pivot_pos is None:
                continue
            scale = finv(row[pivot_pos])
            row = [fmul[scale][x] for x in row]
            echelon.append((pivot_pos, row))
            chosen.append(part)
            chosen_classes.append(cid)

    members = {space.zero}
    add = space.add
    scalar_mul = space.scalar_mul
    scalars = range(space.field.order)
    for w in chosen:
        members = {add(m, scalar_mul(a, w)) for m in members for a in scalars}
    expected = space.field.order ** len(chosen)
    if len(members) != expected:
        raise AssertionError("independent generators produced colliding sums")
    return Subspace(space, chosen, chosen_classes, members)


# -- dimension ----------------------------------------------------------------


class DimResult:
    """dim(v) with a minimal quasi-kernel representation as witness."""

    def __init__(self, value, witness):
        self.value = value
        self.witness = tuple(witness)

    def to_json(self, space):
        return {
            "dim": self.value,
            "witness": [vector_to_json(space, w) for w in self.witness],
        }


def _dim_layers(space):
    """Minimal term counts by breadth-first sumset growth over Q(V)*.

    Layer t holds every vector expressible as a sum of t nonzero
    quasi-kernel vectors and no fewer; back-pointers reconstruct a
    witness.  Scalar coefficients are absorbed into Q(V)* since it is
    closed under the action.
    """
    cached = getattr(space, "_dim_layer_cache", None)
    if cached is not None:
        return cached
    qstar = space.quasi_kernel().sorted_nonzero()
    add = space.add
    level = {q: (None, q) for q in qstar}  # v -> (previous vector, q summand)
    depth = {q: 1 for q in qstar}
    frontier = qstar
    t = 1
    while frontier:
        t += 1
        new = []
        for w in frontier:
            for q in qstar:
                u = add(w, q)
                if u != space.zero and u not in depth:
                    depth[u] = t
                    level[u] = (w, q)
                    new.append(u)
        frontier = new
    space._dim_layer_cache = (depth, level)
    return depth, level


def dim_of_vector(space, v):
    """dim(v) computed through the regular components and, independently,
    by minimal-representation search; the two must agree."""
    component_dim = len({space._class_of_coord[i] for i in space.support(v)})
    if v == space.zero:
        return DimResult(0, ())
    depth, level = _dim_layers(space)
    oracle_dim = depth.get(v)
    if oracle_dim is None:
        raise AssertionError(f"{v} not reachable from quasi-kernel sums")
    if oracle_dim != component_dim:
        raise AssertionError(
            f"dim mismatch for {v}: components say {component_dim}, "
            f"search says {oracle_dim}"
        )
    witness = []
    cur = v
    while cur is not None:
        prev, q = level[cur]
        witness.append(q)
        cur = prev
    return DimResult(component_dim, tuple(reversed(witness)))


# -- independence and bases ----------------------------------------------------


def is_linearly_independent(space, vectors):
    """Brute-force independence: scan every coefficient tuple for a
    nontrivial combination of the quasi-kernel vectors summing to zero.

    Returns (True, None) or (False, coefficient_tuple).
    """
    vecs = list(vectors)
    members = space.quasi_kernel().members
    for v in vecs:
        if v not in members:
            raise NotInQuasiKernelError(f"{v} is not in the quasi-kernel")
    order = space.field.order
    if order ** len(vecs) > INDEPENDENCE_SCAN_LIMIT:
        raise TooLargeError(
            f"{order}^{len(vecs)} coefficient tuples exceed the scan bound"
        )
    add = space.add
    scalar_mul = space.scalar_mul
    zero = space.zero
    for coeffs in product(range(order), repeat=len(vecs)):
        if not any(coeffs):
            continue
        total = zero
        for a, v in zip(coeffs, vecs):
            if a:
                total = add(total, scalar_mul(a, v))
        if total == zero:
            return False, coeffs
    return True, None


def extract_basis(space, reverse=False):
    """Greedy basis extraction from the quasi-kernel in enumeration
    order; a candidate is dependent on the picks exactly when it already
    lies in their span."""
    candidates = space.quasi_kernel().sorted_nonzero()
    if reverse:
        candidates = list(reversed(candidates))
    basis = []
    members = {space.zero}
    for v in candidates:
        if v not in members:
            basis.append(v)
            members = span_of(space, basis).members
    if len(basis) != space.n or len(members) != space.size:
        raise AssertionError("greedy basis extraction failed to span the space")
    return tuple(basis)


def is_subspace(space, vectors):
    """Nonempty and closed under addition and the scalar action."""
    subset = set(vectors)
    if not subset:
        return False
    if len(subset) > (1 << 21):
        raise TooLargeError("subset too large for the closure scan")
    add = space.add
    scalar_mul = space.scalar_mul
    for v in subset:
        for a in range(space.field.order):
            if scalar_mul(a, v) not in subset:
                return False
    items = sorted(subset)
    for i, v in enumerate(items):
        for w in items[i:]:
            if add(v, w) not in subset:
                return False
    return True


# -- canonical coordinates ------------------------------------------------------


class CoordinateMap:
    """The bijection V <-> A^n induced by a quasi-kernel basis.

    from_coords applies the definition directly (scale each basis vector
    and add); to_coords solves per component over the induced field, so
    round-tripping exercises two genuinely different routes.
    """

    def __init__(self, space, basis):
        members = space.quasi_kernel().members
        if len(basis) != space.n:
            raise NotABasisError(
                f"expected {space.n} basis vectors, got {len(basis)}"
            )
        for b in basis:
            if b == space.zero or b not in members:
                raise NotABasisError(f"{b} is not a nonzero quasi-kernel vector")
        self.space = space
        self.basis = tuple(basis)
        self._slots_by_class = {}
        for idx, b in enumerate(self.basis):
            self._slots_by_class.setdefault(space.class_of(b), []).append(idx)
        for cid, idxs in self._slots_by_class.items():
            if len(idxs) != len(space.classes[cid].support):
                raise NotABasisError(
                    "basis does not match the component dimensions"
                )
        try:
            for cid, idxs in self._slots_by_class.items():
                cols = [_tau(space, self.basis[i], cid) for i in idxs]
                _solve(_InducedFieldOps(space, cid),
                       cols, (0,) * len(cols))
        except NotABasisError:
            raise NotABasisError("basis vectors are dependent inside a component")

    def to_coords(self, v):
        coords = coordinates_in_independent_set(self.space, self.basis, v)
        if coords is None:
            raise AssertionError(f"{v} failed to expand over a full basis")
        return coords

    def from_coords(self, coords):
        space = self.space
        total = space.zero
        for a, b in zip(coords, self.basis):
            total = space.add(total, space.scalar_mul(a, b))
        return total

    def addition_table(self, slot):
        """The induced addition acting on coordinate ``slot``."""
        return self.space.class_addition_table(
            self.space.class_of(self.basis[slot])
        )


def canonical_coordinates(space, basis):
    return CoordinateMap(space, basis)


# -- exotic span witnesses -----------------------------------------------------


def distinct_span_witness(space):
    """Two different non-quasi-kernel vectors with identical spans,
    built across two components; only exists on non-regular spaces."""
    if len(space.classes) < 2:
        raise HypothesisUnmetError("regular space: spans of distinct "
                                   "mixed vectors never coincide")
    basis = space.standard_basis()
    b1 = basis[space.classes[0].support[0]]
    b2 = basis[space.classes[1].support[0]]
    theta = 2 % space.field.order
    v = space.add(b1, b2)
    w = space.add(space.scalar_mul(theta, b1), b2)
    members = space.quasi_kernel().members
    if v == w or v in members or w in members:
        raise AssertionError("witness construction produced invalid vectors")
    if span_of(space, [v]).members != span_of(space, [w]).members:
        raise AssertionError("witness spans differ")
    return v, w


def intersecting_span_witness(space):
    """Two non-quasi-kernel vectors, neither inside the other's span,
    whose spans still intersect beyond zero; needs dim > 2 and at least
    two components."""
    if len(space.classes) < 2:
        raise HypothesisUnmetError("regular space: no such pair exists")
    if space.n <= 2:
        raise HypothesisUnmetError("needs dimension greater than 2")
    basis = space.standard_basis()
    # b1 and b3 bracket b2 from different components; prefer three
    # distinct components, fall back to reusing the largest class.
    if len(space.classes) >= 3:
        b1 = basis[space.classes[0].support[0]]
        b2 = basis[space.classes[1].support[0]]
        b3 = basis[space.classes[2].support[0]]
    else:
        big = max(space.classes, key=lambda c: len(c.support))
        other = next(c for c in space.classes if c.index != big.index)
        b1 = basis[big.support[0]]
        b3 = basis[big.support[1]]
        b2 = basis[other.support[0]]
    v = space.add(b1, b2)
    w = space.add(b2, b3)
    members = space.quasi_kernel().members
    if v in members or w in members:
        raise AssertionError("witness construction landed in the quasi-kernel")
    span_v = span_of(space, [v]).members
    span_w = span_of(space, [w]).members
    if v in span_w or w in span_v:
        raise AssertionError("witness vectors lie in each other's span")
    line_b2 = {space.scalar_mul(a, b2) for a in range(space.field.order)}
    if span_v & span_w != line_b2:
        raise AssertionError("span intersection is not the shared line")
    return v, w
