"""Finite near-field structures with exhaustive axiom verification.

A near-field here is a carrier {0, ..., n-1} with dense addition and
multiplication tables satisfying the left near-field laws: (carrier, +)
is an abelian group, the nonzero elements form a multiplicative group,
multiplication distributes over addition from the left, and zero
annihilates on both sides.  Everything is checked by brute force; the
carriers are tiny, so an O(n^3) certifying scan is the honest tool.
"""

from .errors import ConstructionFailedError, TooLargeError
from .finite_field import Field
from .report import CheckReport

ISO_SEARCH_LIMIT = 64


class NearField:
    """A finite (left) near-field given by explicit operation tables.

    Immutable after construction.  ``provenance`` records how the
    structure arose, e.g. ``("field", GF(9))``, ``("dickson", 9)`` or
    ``("induced", space_config, vector)``.
    """

    def __init__(self, add, mul, zero=0, one=1, provenance=("raw",)):
        self.add = tuple(tuple(row) for row in add)
        self.mul = tuple(tuple(row) for row in mul)
        n = len(self.add)
        if len(self.mul) != n or any(len(r) != n for r in self.add + self.mul):
            raise ValueError("operation tables must be square and same-sized")
        self.size = n
        self.zero = zero
        self.one = one
        self.provenance = provenance
        self._neg = None

    def elements(self):
        return range(self.size)

    def nonzero(self):
        return [x for x in range(self.size) if x != self.zero]

    def neg(self, a):
        if self._neg is None:
            zero = self.zero
            self._neg = [row.index(zero) for row in self.add]
        return self._neg[a]

    def char(self):
        """Additive order of one (prime for every structure built here)."""
        x = self.one
        k = 1
        while x != self.zero:
            x = self.add[x][self.one]
            k += 1
        return k

    def add_order(self, a):
        x = a
        k = 1
        while x != self.zero:
            x = self.add[x][a]
            k += 1
        return k

    def mul_order(self, a):
        if a == self.zero:
            return 0
        x = a
        k = 1
        while x != self.one:
            x = self.mul[x][a]
            k += 1
        return k

    def __repr__(self):
        return f"NearField(size={self.size}, provenance={self.provenance!r})"


def from_field(field):
    """The near-field (F, +, *) of a finite field; fully distributive."""
    add, mul = field.op_tables()
    return NearField(add, mul, zero=0, one=1, provenance=("field", field))


def check_axioms(nf):
    """Exhaustive left near-field axiom check; O(n^3), certifying."""
    add, mul = nf.add, nf.mul
    zero, one = nf.zero, nf.one
    els = range(nf.size)
    entries = {}

    def closed(table):
        for a in els:
            for b in els:
                if not 0 <= table[a][b] < nf.size:
                    return False, (a, b)
        return True, None

    entries["add_closed"] = closed(add)

    def first_fail(pred, arity):
        if arity == 2:
            for a in els:
                for b in els:
                    if not pred(a, b):
                        return False, (a, b)
        else:
            for a in els:
                for b in els:
                    for c in els:
                        if not pred(a, b, c):
                            return False, (a, b, c)
        return True, None

    entries["add_associative"] = first_fail(
        lambda a, b, c: add[add[a][b]][c] == add[a][add[b][c]], 3
    )
    entries["add_commutative"] = first_fail(lambda a, b: add[a][b] == add[b][a], 2)
    entries["add_identity"] = first_fail(lambda a, b: add[zero][b] == b, 2)

    ok, cx = True, None
    for a in els:
        if zero not in add[a]:
            ok, cx = False, (a,)
            break
    entries["add_inverses"] = (ok, cx)

    ok, cx = True, None
    for a in els:
        if a == zero:
            continue
        for b in els:
            if b == zero:
                continue
            if mul[a][b] == zero:
                ok, cx = False, (a, b)
                break
        if not ok:
            break
    entries["mul_closed"] = (ok, cx)

    entries["mul_associative"] = first_fail(
        lambda a, b, c: mul[mul[a][b]][c] == mul[a][mul[b][c]], 3
    )
    entries["mul_identity"] = first_fail(
        lambda a, b: mul[one][b] == b and mul[b][one] == b, 2
    )

    ok, cx = True, None
    for a in els:
        if a == zero:
            continue
        has = any(
            mul[a][b] == one and mul[b][a] == one for b in els if b != zero
        )
        if not has:
            ok, cx = False, (a,)
            break
    entries["mul_inverses"] = (ok, cx)

    entries["left_distributive"] = first_fail(
        lambda a, b, c: mul[a][add[b][c]] == add[mul[a][b]][mul[a][c]], 3
    )
    entries["zero_annihilates"] = first_fail(
        lambda a, b: mul[zero][b] == zero and mul[b][zero] == zero, 2
    )
    return CheckReport(entries)


def right_distributive_counterexample(nf):
    """A triple (a, b, c) with (a+b)c != ac + bc, or None."""
    add, mul = nf.add, nf.mul
    els = range(nf.size)
    for a in els:
        for b in els:
            s = add[a][b]
            for c in els:
                if mul[s][c] != add[mul[a][c]][mul[b][c]]:
                    return (a, b, c)
    return None


def distributive_elements(nf):
    """All k with (a+b)k = ak + bk for every a, b (the law the axioms skip)."""
    add, mul = nf.add, nf.mul
    els = range(nf.size)
    out = set()
    for k in els:
        if all(mul[add[a][b]][k] == add[mul[a][k]][mul[b][k]] for a in els for b in els):
            out.add(k)
    return frozenset(out)


def dickson9():
    """The proper near-field of order 9: GF(9) with Frobenius-coupled product.

    The product is x*y with y replaced by y^3 when the coupling element is
    a non-square; which side selects and which side twists is fixed by
    searching the four conventions against the axiom checker, which must
    pass the left near-field laws and break right distributivity.
    """
    field = Field(3, 2, (1, 0, 1))
    add, mul = field.op_tables()
    n = field.order
    squares = {mul[x][x] for x in range(1, n)}
    cube = [field.frobenius(x) for x in range(n)]

    for select_left in (True, False):
        for twist_left in (True, False):
            table = []
            for x in range(n):
                row = []
                for y in range(n):
                    s = x if select_left else y
                    if s in squares or s == 0:
                        row.append(mul[x][y])
                    elif twist_left:
                        row.append(mul[cube[x]][y])
                    else:
                        row.append(mul[x][cube[y]])
                table.append(row)
            candidate = NearField(add, table, provenance=("dickson", 9))
            if check_axioms(candidate).all_pass and (
                right_distributive_counterexample(candidate) is not None
            ):
                return candidate
    raise ConstructionFailedError("no Frobenius coupling convention passed")


def find_isomorphism(n1, n2):
    """A bijection preserving both operations, or None if provably absent.

    Backtracking over element images, pruned by additive and
    multiplicative element orders; sizes are capped so the search stays
    a certificate rather than a gamble.
    """
    if n1.size != n2.size:
        return None
    if n1.size > ISO_SEARCH_LIMIT:
        raise TooLargeError(
            f"isomorphism search capped at {ISO_SEARCH_LIMIT} elements"
        )

    def profile(nf, x):
        return (nf.add_order(x), nf.mul_order(x), x == nf.zero, x == nf.one)

    prof2 = {}
    for y in n2.elements():
        prof2.setdefault(profile(n2, y), []).append(y)
    candidates = {}
    for x in n1.elements():
        cands = prof2.get(profile(n1, x), [])
        if not cands:
            return None
        candidates[x] = cands
    order = sorted(n1.elements(), key=lambda x: len(candidates[x]))

    mapping = {}
    used = set()

    def consistent(x, y):
        for a, fa in mapping.items():
            for u, v, fu, fv in ((x, a, y, fa), (a, x, fa, y)):
                s = n1.add[u][v]
                if s in mapping and mapping[s] != n2.add[fu][fv]:
                    return False
                t = n1.mul[u][v]
                if t in mapping and mapping[t] != n2.mul[fu][fv]:
                    return False
        s = n1.add[x][x]
        if s in mapping and mapping[s] != n2.add[y][y]:
            return False
        t = n1.mul[x][x]
        if t in mapping and mapping[t] != n2.mul[y][y]:
            return False
        return True

    def extend(i):
        if i == len(order):
            return True
        x = order[i]
        for y in candidates[x]:
            if y in used:
                continue
            if not consistent(x, y):
                continue
            mapping[x] = y
            used.add(y)
            if extend(i + 1):
                return True
            del mapping[x]
            used.discard(y)
        return False

    if not extend(0):
        return None
    # full verification; the partial checks above are only pruning
    for a in n1.elements():
        for b in n1.elements():
            if mapping[n1.add[a][b]] != n2.add[mapping[a]][mapping[b]]:
                return None
            if mapping[n1.mul[a][b]] != n2.mul[mapping[a]][mapping[b]]:
                return None
    return dict(mapping)
