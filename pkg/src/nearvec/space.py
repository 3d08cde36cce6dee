"""Finite near-vector spaces V = F^n with twisted scalar action.

A scalar alpha acts coordinate-wise through the power maps
psi_i(alpha) = alpha^(q_i); each exponent must be coprime to |F*| so the
action is fixed point free.  Coordinates whose exponents differ only by
a power of the characteristic (a Frobenius twist) induce the same
addition on the scalars and are grouped into one exponent class; the
quasi-kernel is exactly the set of vectors supported inside a single
class, which this module both derives in closed form and recomputes by
brute force so the two can certify each other.
"""

from dataclasses import dataclass
from itertools import product
from math import gcd

from .errors import NotCoprimeError, TooLargeError
from .finite_field import Field, TABLE_LIMIT
from .report import CheckReport

MAX_SPACE_SIZE = 1 << 21
MAX_RAW_CARRIER = 1 << 12

# exhaustive O(|F|^3) certification of the ambient group/distributivity
# laws is refused above this field order
AXIOM_FIELD_LIMIT = 512


@dataclass(frozen=True)
class ExponentClass:
    index: int
    support: tuple
    exponent: int  # canonical twist: min of q * p^l mod |F*|


class TwistedSpace:
    """F^n with the action alpha . v = (alpha^(q_1) v_1, ..., alpha^(q_n) v_n).

    Immutable after construction; every query is pure.
    """

    def __init__(self, field, exponents):
        exps = tuple(int(q) for q in exponents)
        if not exps:
            raise ValueError("at least one coordinate is required")
        if any(q < 1 for q in exps):
            raise ValueError(f"exponents must be >= 1, got {exps}")
        self.field = field
        self.n = len(exps)
        m = field.mult_order
        for i, q in enumerate(exps):
            d = gcd(q, m)
            if d != 1:
                alpha, beta = self._coprimality_witness(field, d)
                e_i = tuple(1 if j == i else 0 for j in range(self.n))
                raise NotCoprimeError(i, q, d, alpha, beta, e_i)
        self.exponents = tuple(self._reduce(q, m) for q in exps)
        self.size = field.order ** self.n
        if self.size > MAX_SPACE_SIZE:
            raise TooLargeError(
                f"|V| = {self.size} exceeds the enumeration bound {MAX_SPACE_SIZE}"
            )
        self.classes = self._compute_classes()
        self._class_of_coord = {}
        for cls in self.classes:
            for i in cls.support:
                self._class_of_coord[i] = cls.index
        self.zero = (0,) * self.n
        # per-coordinate twist tables, shared between equal exponents
        pow_tables = {}
        for q in self.exponents:
            if q not in pow_tables:
                pow_tables[q] = field.pow_table(q)
        self._psi = [pow_tables[q] for q in self.exponents]
        if field.order <= TABLE_LIMIT:
            add_t, mul_t = field.op_tables()
            self._fadd, self._fmul = add_t, mul_t
        else:
            self._fadd = self._fmul = None
        self._fneg = field.neg_table()
        self._vectors = None
        self._quasi_kernel = None
        self._class_add_tables = {}
        self._inv_pow_tables = {}

    @staticmethod
    def _reduce(q, m):
        if m <= 1:
            return 1
        return q % m

    @staticmethod
    def _coprimality_witness(field, d):
        # alpha = g and beta = g^(1 + m/d) for the smallest generator g
        # satisfy alpha^q = beta^q whenever d divides q, so both act
        # identically on the offending coordinate's basis vector.
        m = field.mult_order
        g = field.generator()
        return g, field.pow(g, 1 + m // d)

    def _compute_classes(self):
        m = self.field.mult_order
        p = self.field.p
        canon = {}
        for q in set(self.exponents):
            if m <= 1:
                canon[q] = 1
                continue
            best = q % m
            t = q % m
            for _ in range(1, self.field.r):
                t = (t * p) % m
                if t < best:
                    best = t
            canon[q] = best
        groups = {}
        order = []
        for i, q in enumerate(self.exponents):
            key = canon[q]
            if key not in groups:
                groups[key] = []
                order.append(key)
            groups[key].append(i)
        return tuple(
            ExponentClass(index=j, support=tuple(groups[key]), exponent=key)
            for j, key in enumerate(order)
        )

    # -- vector arithmetic ------------------------------------------------

    def add(self, v, w):
        fadd = self._fadd
        if fadd is not None:
            return tuple(fadd[a][b] for a, b in zip(v, w))
        f = self.field
        return tuple(f.add(a, b) for a, b in zip(v, w))

    def neg(self, v):
        fneg = self._fneg
        return tuple(fneg[a] for a in v)

    def sub(self, v, w):
        return self.add(v, self.neg(w))

    def scalar_mul(self, alpha, v):
        fmul = self._fmul
        if fmul is not None:
            return tuple(fmul[p[alpha]][x] for p, x in zip(self._psi, v))
        f = self.field
        return tuple(f.mul(p[alpha], x) for p, x in zip(self._psi, v))

    def support(self, v):
        return tuple(i for i, x in enumerate(v) if x)

    def class_of(self, v):
        """Index of the exponent class carrying v, or None if mixed or zero."""
        cids = {self._class_of_coord[i] for i in self.support(v)}
        if len(cids) == 1:
            return next(iter(cids))
        return None

    def standard_basis(self):
        return tuple(
            tuple(1 if j == i else 0 for j in range(self.n)) for i in range(self.n)
        )

    def iter_vectors(self):
        """All vectors in lexicographic coordinate order (deterministic)."""
        return product(range(self.field.order), repeat=self.n)

    def vectors(self):
        if self._vectors is None:
            self._vectors = list(self.iter_vectors())
        return self._vectors

    # -- induced-addition plumbing -----------------------------------------

    def class_addition_table(self, cid):
        """Scalar addition induced by any quasi-kernel vector of the class:
        a, b combine through the class twist q as (a^q + b^q)^(1/q)."""
        table = self._class_add_tables.get(cid)
        if table is None:
            q = self.classes[cid].exponent
            m = self.field.mult_order
            fwd = self.field.pow_table(q)
            back = self.field.pow_table(pow(q, -1, m) if m > 1 else 1)
            fadd = self.field.op_tables()[0]
            table = [
                [back[fadd[fa][fb]] for fb in fwd]
                for fa in fwd
            ]
            self._class_add_tables[cid] = table
        return table

    def inverse_pow_table(self, i):
        """[x^(1/q_i)], inverting the coordinate-i twist."""
        q = self.exponents[i]
        table = self._inv_pow_tables.get(q)
        if table is None:
            m = self.field.mult_order
            table = self.field.pow_table(pow(q, -1, m) if m > 1 else 1)
            self._inv_pow_tables[q] = table
        return table

    # -- quasi-kernel -------------------------------------------------------

    def quasi_kernel(self):
        """The cached closed-form quasi-kernel (the fast route; the brute
        route lives in quasi_kernel_bruteforce and certifies this one)."""
        if self._quasi_kernel is None:
            self._quasi_kernel = quasi_kernel_closed_form(self)
        return self._quasi_kernel

    # -- config -------------------------------------------------------------

    def to_config(self):
        return {
            "p": self.field.p,
            "r": self.field.r,
            "modulus_poly": list(self.field.modulus) if self.field.modulus else None,
            "exponents": list(self.exponents),
        }

    @classmethod
    def from_config(cls, config):
        field = Field(config["p"], config.get("r", 1), config.get("modulus_poly"))
        return cls(field, config["exponents"])

    def __repr__(self):
        return f"TwistedSpace({self.field!r}, exponents={self.exponents})"


def make_twisted_space(field, exponents):
    return TwistedSpace(field, exponents)


class QuasiKernel:
    """The vectors v for which every alpha v + beta v is again gamma v."""

    def __init__(self, space, members, class_supports):
        self.space = space
        self.members = frozenset(members)
        self.class_supports = tuple(frozenset(s) for s in class_supports)
        self._sorted = None

    @property
    def nonzero(self):
        return self.members - {self.space.zero}

    def sorted_members(self):
        if self._sorted is None:
            self._sorted = sorted(self.members)
        return self._sorted

    def sorted_nonzero(self):
        zero = self.space.zero
        return [v for v in self.sorted_members() if v != zero]

    def to_json(self, member_limit=4096):
        data = {
            "member_count": len(self.members),
            "class_supports": [
                {
                    "support": list(cls.support),
                    "exponent": cls.exponent,
                    "count": len(sup),
                }
                for cls, sup in zip(self.space.classes, self.class_supports)
            ],
        }
        if len(self.members) <= member_limit:
            data["members"] = [vector_to_json(self.space, v) for v in self.sorted_members()]
        return data


def quasi_kernel_closed_form(space):
    """Q(V) as the union over exponent classes of the vectors supported
    inside one class; equals the brute-force scan on every space."""
    order = space.field.order
    supports = []
    members = set()
    for cls in space.classes:
        sup = set()
        for combo in product(range(order), repeat=len(cls.support)):
            v = [0] * space.n
            for i, x in zip(cls.support, combo):
                v[i] = x
            sup.add(tuple(v))
        supports.append(frozenset(sup))
        members |= sup
    return QuasiKernel(space, members, supports)


def quasi_kernel_bruteforce(space):
    """Q(V) straight from the definition: v is kept iff for all scalars
    alpha, beta some gamma has alpha v + beta v = gamma v (the gamma scan
    is the orbit-membership test).  Exponential-cost oracle."""
    if space.size > MAX_SPACE_SIZE:
        raise TooLargeError(f"|V| = {space.size} exceeds {MAX_SPACE_SIZE}")
    order = space.field.order
    scalar_mul = space.scalar_mul
    members = set()
    fadd = space._fadd
    n1 = space.n == 1
    for v in space.iter_vectors():
        multiples = [scalar_mul(a, v) for a in range(order)]
        # alpha = 0 or beta = 0 lands on a plain multiple, so units suffice
        if n1 and fadd is not None:
            orbit0 = {m[0] for m in multiples}
            ok = True
            for i in range(1, order):
                row = fadd[multiples[i][0]]
                for j in range(1, order):
                    if row[multiples[j][0]] not in orbit0:
                        ok = False
                        break
                if not ok:
                    break
        else:
            orbit = set(multiples)
            vadd = space.add
            ok = True
            for i in range(1, order):
                va = multiples[i]
                for j in range(1, order):
                    if vadd(va, multiples[j]) not in orbit:
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            members.add(v)
    supports = []
    for cls in space.classes:
        sup_set = set(cls.support)
        supports.append(
            frozenset(v for v in members if set(space.support(v)) <= sup_set)
        )
    return QuasiKernel(space, members, supports)


def additive_closure(space, generators):
    """Subgroup of (V, +) generated by the given vectors.

    Grows a known subgroup one cyclic factor at a time; exact and much
    cheaper than pairwise-sum fixed-point iteration on these sizes.
    """
    closure = {space.zero}
    add = space.add
    for g in generators:
        if g in closure:
            continue
        cyclic = []
        x = g
        while x != space.zero:
            cyclic.append(x)
            x = add(x, g)
        closure = {add(h, m) for h in closure for m in cyclic} | closure
    return closure


# -- vector (de)serialisation ---------------------------------------------


def vector_to_json(space, v):
    if space.field.r == 1:
        return list(v)
    return [list(space.field.coeffs(x)) for x in v]


def vector_from_json(space, data):
    if len(data) != space.n:
        raise ValueError(f"expected {space.n} coordinates, got {len(data)}")
    coords = []
    for entry in data:
        if isinstance(entry, int):
            if space.field.r != 1:
                coords.append(space.field.element((entry,) + (0,) * (space.field.r - 1)))
            else:
                if not 0 <= entry < space.field.order:
                    raise ValueError(f"coordinate {entry} out of range")
                coords.append(entry)
        else:
            coords.append(space.field.element(entry))
    return tuple(coords)


# -- axiom verification ------------------------------------------------------


def _field_group_and_distributivity(field):
    """Exhaustive field-level certification of the laws that lift
    coordinate-wise to V; cached on the field instance."""
    cached = getattr(field, "_ambient_law_report", None)
    if cached is not None:
        return cached
    if field.order > AXIOM_FIELD_LIMIT:
        raise TooLargeError(
            f"exhaustive law check refused for field order {field.order}"
        )
    add, mul = field.op_tables()
    els = range(field.order)
    entries = {}

    ok, cx = True, None
    for a in els:
        for b in els:
            row = add[add[a][b]]
            rowa = add[a]
            for c in els:
                if row[c] != rowa[add[b][c]]:
                    ok, cx = False, (a, b, c)
                    break
            if not ok:
                break
        if not ok:
            break
    entries["add_associative"] = (ok, cx)

    ok, cx = True, None
    for a in els:
        for b in els:
            if add[a][b] != add[b][a]:
                ok, cx = False, (a, b)
                break
        if not ok:
            break
    entries["add_commutative"] = (ok, cx)

    entries["add_identity"] = (all(add[0][b] == b for b in els), None)
    entries["add_inverses"] = (all(0 in add[a] for a in els), None)

    ok, cx = True, None
    for s in els:
        rows = mul[s]
        for x in els:
            sx = rows[x]
            arow = add[sx]
            xrow = add[x]
            for y in els:
                if rows[xrow[y]] != arow[rows[y]]:
                    ok, cx = False, (s, x, y)
                    break
            if not ok:
                break
        if not ok:
            break
    entries["scalar_distributes"] = (ok, cx)

    field._ambient_law_report = entries
    return entries


def check_axioms(space):
    """The five defining conditions of a near-vector space, certified
    exhaustively for the twisted product construction.

    Group laws and distributivity are verified at the field level and
    lift coordinate-wise; fixed-point-freeness reduces exactly to
    injectivity of every twist map (a violating vector has a nonzero
    coordinate, and conversely e_i witnesses a non-injective psi_i).
    """
    field = space.field
    laws = _field_group_and_distributivity(field)
    entries = {}

    group_ok = all(laws[k][0] for k in
                   ("add_associative", "add_commutative", "add_identity", "add_inverses"))
    group_cx = None
    if not group_ok:
        for k in ("add_associative", "add_commutative", "add_identity", "add_inverses"):
            if not laws[k][0]:
                group_cx = (k, laws[k][1])
                break
    entries["1_additive_group"] = (group_ok, group_cx)

    # 0, id, -id all lie in A: their twisted actions must match the
    # zero map, identity and coordinate-wise negation on every element.
    ok, cx = True, None
    neg_one = field.neg(1)
    for i in range(space.n):
        psi = space._psi[i]
        if psi[0] != 0:
            ok, cx = False, ("zero", i)
            break
        if psi[1] != 1:
            ok, cx = False, ("id", i)
            break
        if psi[neg_one] != neg_one:
            ok, cx = False, ("neg_id", i)
            break
    if ok:
        for x in range(field.order):
            if field.mul(neg_one, x) != field.neg(x):
                ok, cx = False, ("neg_id_action", x)
                break
    entries["2_zero_id_negid"] = (ok, cx)

    ok, cx = True, None
    if not laws["scalar_distributes"][0]:
        ok, cx = False, ("not_additive", laws["scalar_distributes"][1])
    else:
        for i in range(space.n):
            psi = space._psi[i]
            if len(set(psi)) != field.order:
                ok, cx = False, ("not_bijective", i)
                break
            done = False
            for a in range(field.order):
                pa = psi[a]
                for b in range(field.order):
                    if psi[field.mul(a, b)] != field.mul(pa, psi[b]):
                        ok, cx = False, ("not_multiplicative", i, a, b)
                        done = True
                        break
                if done:
                    break
            if done:
                break
    entries["3_units_act_as_automorphisms"] = (ok, cx)

    ok, cx = True, None
    for i in range(space.n):
        psi = space._psi[i]
        seen = {}
        for a, image in enumerate(psi):
            if image in seen:
                e_i = tuple(1 if j == i else 0 for j in range(space.n))
                ok, cx = False, (seen[image], a, e_i)
                break
            seen[image] = a
        if not ok:
            break
    entries["4_fixed_point_free"] = (ok, cx)

    qk = space.quasi_kernel()
    generated = additive_closure(space, qk.sorted_members())
    entries["5_quasi_kernel_generates"] = (
        len(generated) == space.size,
        None if len(generated) == space.size else ("generated_count", len(generated)),
    )
    return CheckReport(entries)


def check_axioms_raw(add_table, endos):
    """The same five conditions for an explicit group table and
    endomorphism set; the negative fixtures enter through here."""
    n = len(add_table)
    if n > MAX_RAW_CARRIER:
        raise TooLargeError(f"raw carrier {n} exceeds {MAX_RAW_CARRIER}")
    add = [list(row) for row in add_table]
    maps = [tuple(e) for e in endos]
    els = range(n)
    entries = {}

    identity = None
    for e in els:
        if all(add[e][x] == x and add[x][e] == x for x in els):
            identity = e
            break

    ok, cx = True, None
    if identity is None:
        ok, cx = False, ("no_identity",)
    else:
        for a in els:
            for b in els:
                if not 0 <= add[a][b] < n:
                    ok, cx = False, ("not_closed", a, b)
                    break
                if add[a][b] != add[b][a]:
                    ok, cx = False, ("not_commutative", a, b)
                    break
            if not ok:
                break
        if ok:
            for a in els:
                if identity not in add[a]:
                    ok, cx = False, ("no_inverse", a)
                    break
        if ok:
            for a in els:
                for b in els:
                    row = add[add[a][b]]
                    rowa = add[a]
                    for c in els:
                        if row[c] != rowa[add[b][c]]:
                            ok, cx = False, ("not_associative", a, b, c)
                            break
                    if not ok:
                        break
                if not ok:
                    break
    entries["1_additive_group"] = (ok, cx)
    if identity is None:
        # remaining checks are meaningless without a group identity
        for key in (
            "2_zero_id_negid",
            "3_units_act_as_automorphisms",
            "4_fixed_point_free",
            "5_quasi_kernel_generates",
        ):
            entries[key] = (False, ("no_identity",))
        return CheckReport(entries)

    zero_map = tuple(identity for _ in els)
    id_map = tuple(els)
    neg_map = None
    if all(identity in add[x] for x in els):
        neg_map = tuple(add[x].index(identity) for x in els)
    ok, cx = True, None
    if zero_map not in maps:
        ok, cx = False, ("missing_zero",)
    elif id_map not in maps:
        ok, cx = False, ("missing_id",)
    elif neg_map is None or neg_map not in maps:
        ok, cx = False, ("missing_neg_id",)
    entries["2_zero_id_negid"] = (ok, cx)

    units = [m for m in maps if m != zero_map]
    ok, cx = True, None
    for m in units:
        if len(set(m)) != n:
            ok, cx = False, ("not_bijective", maps.index(m))
            break
        bad = next(
            ((a, b) for a in els for b in els if m[add[a][b]] != add[m[a]][m[b]]),
            None,
        )
        if bad is not None:
            ok, cx = False, ("not_additive", maps.index(m), *bad)
            break
    if ok:
        unit_set = set(units)
        if id_map not in unit_set:
            ok, cx = False, ("identity_missing_from_units",)
    if ok:
        for f in units:
            for g in units:
                comp = tuple(f[g[x]] for x in els)
                if comp not in unit_set:
                    ok, cx = False, ("not_closed_under_composition",
                                     maps.index(f), maps.index(g))
                    break
            if not ok:
                break
    if ok:
        for f in units:
            inv_f = [0] * n
            for x in els:
                inv_f[f[x]] = x
            if tuple(inv_f) not in unit_set:
                ok, cx = False, ("inverse_map_missing", maps.index(f))
                break
    entries["3_units_act_as_automorphisms"] = (ok, cx)

    ok, cx = True, None
    for ia, f in enumerate(maps):
        for ib in range(ia + 1, len(maps)):
            g = maps[ib]
            for x in els:
                if x != identity and f[x] == g[x]:
                    ok, cx = False, (ia, ib, x)
                    break
            if not ok:
                break
        if not ok:
            break
    entries["4_fixed_point_free"] = (ok, cx)

    quasi = []
    for x in els:
        orbit = {m[x] for m in maps}
        if all(add[f[x]][g[x]] in orbit for f in maps for g in maps):
            quasi.append(x)
    closure = {identity}
    for g in quasi:
        if g in closure:
            continue
        cyclic = []
        y = g
        while y != identity and len(cyclic) <= n:  # step cap: broken tables
            cyclic.append(y)
            y = add[y][g]
        closure = {add[h][m] for h in closure for m in cyclic} | closure
    ok = len(closure) == n
    entries["5_quasi_kernel_generates"] = (
        ok,
        None if ok else ("quasi_kernel", tuple(quasi), "generated_count", len(closure)),
    )
    return CheckReport(entries)
