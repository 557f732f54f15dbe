"""Brute-force ground truth: scheme elements, codes, duals, character sums.

Elements of every scheme are handled as coordinate vectors over the field
the codes are linear over (F_q, or F_{q^m} for the vector rank space), with
the structural shape (matrix, alternating matrix, conjugate-symmetric
matrix) reconstructed on demand for weight computation.  Everything here is
exhaustive and deliberately naive; it exists to verify the algebraic side,
not to be fast.

Duality pairings per kind:
  hamming     sum x_i y_i over F_q
  bilinear    Trace(A B^T), i.e. the entrywise dot product
  gabidulin   sum x_i y_i over F_{q^m}
  skew        sum over i<j of A_ij B_ij (equals Trace(A B^T)/2 away from
              characteristic 2, where the full trace form vanishes on
              alternating matrices and this is the nondegenerate form)
  hermitian   Trace(A B), which lands in F_q for conjugate-symmetric inputs
A Gram-matrix nondegeneracy assertion guards each choice.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .eigenvalues import SchemeParams
from .fields import GF, field, is_prime_power, matrix_rank, nullspace, row_reduce

ENUM_GUARD = 1 << 20
SPACE_GUARD = 1 << 12


class SchemeSpace:
    """Coordinate model of one scheme's ambient space."""

    def __init__(self, params: SchemeParams):
        if not is_prime_power(params.q):
            raise ValueError(f"oracle requires q to be a prime power, got {params.q}")
        self.params = params
        kind, q = params.kind, params.q

        if kind == "hamming":
            (n,) = params.dims
            self.gf = field(q)
            self.dim = n
        elif kind == "bilinear":
            m, n = params.dims
            self.gf = field(q)
            self.dim = m * n
            self._shape = (m, n)
        elif kind == "gabidulin":
            m, n = params.dims
            if field(q).k != 1:
                raise ValueError("gabidulin oracle supports prime q only")
            self.gf = field(q ** m)
            self.base = field(q)
            self.dim = n
            self._shape = (m, n)
        elif kind == "skew":
            (t,) = params.dims
            self.gf = field(q)
            self.t = t
            self._pairs = [(i, j) for i in range(t) for j in range(i + 1, t)]
            self.dim = len(self._pairs)
        elif kind == "hermitian":
            (t,) = params.dims
            if field(q).k != 1:
                raise ValueError("hermitian oracle supports prime q only")
            self.gf = field(q)
            self.ext = field(q * q)
            self.t = t
            self._pairs = [(i, j) for i in range(t) for j in range(i + 1, t)]
            self.dim = t + 2 * len(self._pairs)
        else:
            raise ValueError(f"unknown kind {kind!r}")

        assert self.gf.order ** self.dim == params.space_size
        self.zero = (0,) * self.dim
        self._gram = self._gram_matrix()
        if matrix_rank(self._gram, self.gf) != self.dim:
            raise AssertionError(
                f"duality form for {kind} is degenerate; pairing choice is wrong"
            )
        self._buckets = None

    # -- structure ----------------------------------------------------------

    def validate(self, coords) -> tuple:
        coords = tuple(int(v) for v in coords)
        if len(coords) != self.dim:
            raise ValueError(f"element needs {self.dim} coordinates")
        if any(not 0 <= v < self.gf.order for v in coords):
            raise ValueError("coordinate out of field range")
        return coords

    def elements(self):
        """Every element of the space; guarded against silly sizes."""
        if self.params.space_size > SPACE_GUARD:
            raise ValueError(f"space of size {self.params.space_size} too large to enumerate")
        return itertools.product(range(self.gf.order), repeat=self.dim)

    def add(self, u, v):
        add = self.gf.add_table
        return tuple(add[a][b] for a, b in zip(u, v))

    def sub(self, u, v):
        gf = self.gf
        return tuple(gf.sub(a, b) for a, b in zip(u, v))

    def smul(self, s, u):
        mul = self.gf.mul_table
        return tuple(mul[s][a] for a in u)

    def matrix(self, coords):
        """The element in its natural matrix/vector shape."""
        kind = self.params.kind
        if kind == "hamming":
            return list(coords)
        if kind == "bilinear":
            m, n = self._shape
            return [list(coords[i * n : (i + 1) * n]) for i in range(m)]
        if kind == "gabidulin":
            # expand each F_{q^m} entry into its base-q digit column
            m, n = self._shape
            q = self.base.order
            cols = []
            for v in coords:
                digits = []
                for _ in range(m):
                    digits.append(v % q)
                    v //= q
                cols.append(digits)
            return [[cols[j][i] for j in range(n)] for i in range(m)]
        if kind == "skew":
            t, gf = self.t, self.gf
            mat = [[0] * t for _ in range(t)]
            for (i, j), v in zip(self._pairs, coords):
                mat[i][j] = v
                mat[j][i] = gf.neg(v)
            return mat
        # hermitian: diagonal in F_q, upper entries are digit pairs in F_{q^2}
        t, q, ext = self.t, self.gf.order, self.ext
        mat = [[0] * t for _ in range(t)]
        for i in range(t):
            mat[i][i] = coords[i]
        for idx, (i, j) in enumerate(self._pairs):
            s, u = coords[t + 2 * idx], coords[t + 2 * idx + 1]
            mat[i][j] = s + u * q
            mat[j][i] = ext.conj(mat[i][j], q)
        return mat

    def weight(self, coords) -> int:
        """Scheme weight: Hamming count or the appropriate matrix rank."""
        coords = self.validate(coords)
        kind = self.params.kind
        if kind == "hamming":
            return sum(1 for v in coords if v)
        mat = self.matrix(coords)
        if kind == "bilinear":
            return matrix_rank(mat, self.gf)
        if kind == "gabidulin":
            return matrix_rank(mat, self.base)
        if kind == "skew":
            rank = matrix_rank(mat, self.gf)
            if rank % 2:
                raise ArithmeticError("alternating matrix with odd rank")
            return rank // 2
        return matrix_rank(mat, self.ext)

    # -- duality ------------------------------------------------------------

    def pairing(self, u, v) -> int:
        """Scheme bilinear form; an element of the coordinate field."""
        kind, gf = self.params.kind, self.gf
        if kind == "hermitian":
            a = self.matrix(u)
            bmat = self.matrix(v)
            ext, t = self.ext, self.t
            total = 0
            for i in range(t):
                for j in range(t):
                    total = ext.add(total, ext.mul(a[i][j], bmat[j][i]))
            if total >= gf.order:
                raise ArithmeticError("hermitian trace form left the base field")
            return total
        total = 0
        for a, b in zip(u, v):
            total = gf.add(total, gf.mul(a, b))
        return total

    def _gram_matrix(self):
        units = []
        for c in range(self.dim):
            e = [0] * self.dim
            e[c] = 1
            units.append(tuple(e))
        return [[self.pairing(units[r], units[c]) for c in range(self.dim)] for r in range(self.dim)]

    def gram_vector(self, y):
        """Row of pairings pairing(e_c, y), so pairing(x, y) = x . gram_vector."""
        gf = self.gf
        out = []
        for row in self._gram:
            acc = 0
            for g, yv in zip(row, y):
                acc = gf.add(acc, gf.mul(g, yv))
            out.append(acc)
        return out

    def weight_buckets(self):
        """All elements of the space grouped by weight (cached)."""
        if self._buckets is None:
            buckets = [[] for _ in range(self.params.n + 1)]
            for e in self.elements():
                buckets[self.weight(e)].append(e)
            self._buckets = buckets
        return self._buckets


_SPACE_CACHE = {}


def space_for(params: SchemeParams) -> SchemeSpace:
    sp = _SPACE_CACHE.get(params)
    if sp is None:
        sp = SchemeSpace(params)
        _SPACE_CACHE[params] = sp
    return sp


@dataclass(frozen=True)
class CodeSpec:
    """A linear code given by independent generators in coordinate form."""

    params: SchemeParams
    generators: tuple

    def __post_init__(self):
        space = space_for(self.params)
        gens = tuple(space.validate(g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        if gens and matrix_rank(list(gens), space.gf) != len(gens):
            raise ValueError("generators must be linearly independent")

    @property
    def code_size(self) -> int:
        return space_for(self.params).gf.order ** len(self.generators)


def enumerate_code(code: CodeSpec):
    """Yield every codeword exactly once."""
    space = space_for(code.params)
    if code.code_size > ENUM_GUARD:
        raise ValueError(f"code of size {code.code_size} exceeds enumeration guard")
    gens = code.generators
    if not gens:
        yield space.zero
        return
    for scalars in itertools.product(range(space.gf.order), repeat=len(gens)):
        acc = space.zero
        for s, g in zip(scalars, gens):
            if s:
                acc = space.add(acc, space.smul(s, g))
        yield acc


def dual_code(code: CodeSpec) -> CodeSpec:
    """Annihilator of the code under the scheme's bilinear form."""
    space = space_for(code.params)
    rows = [space.gram_vector(g) for g in code.generators]
    basis = nullspace(rows, space.gf, space.dim)
    dual = CodeSpec(params=code.params, generators=tuple(basis))
    if len(code.generators) + len(dual.generators) != space.dim:
        raise AssertionError("dual dimension mismatch; form is degenerate")
    return dual


def weight_distribution(code: CodeSpec) -> list:
    space = space_for(code.params)
    counts = [0] * (code.params.n + 1)
    for word in enumerate_code(code):
        counts[space.weight(word)] += 1
    return counts


def char_eigenvalue(params: SchemeParams, k: int, x: int) -> int:
    """First-principles eigenvalue: a signed count over weight-k elements.

    Sums the additive character (-1)^trace(<e, y>) over all elements e of
    weight k, for a representative y of weight x.  Characteristic 2 only,
    keeping the arithmetic exact.  Independence of the representative is
    asserted against a second choice.
    """
    space = space_for(params)
    if space.gf.p != 2:
        raise ValueError("character sums are supported in characteristic 2 only")
    n = params.n
    if not (0 <= k <= n and 0 <= x <= n):
        raise ValueError(f"require 0 <= k, x <= {n}")
    buckets = space.weight_buckets()
    reps = [buckets[x][0]]
    if len(buckets[x]) > 1:
        reps.append(buckets[x][-1])
    sums = []
    for y in reps:
        w = space.gram_vector(y)
        gf = space.gf
        total = 0
        for e in buckets[k]:
            acc = 0
            for a, b in zip(e, w):
                acc = gf.add(acc, gf.mul(a, b))
            total += -1 if gf.abs_trace(acc) else 1
        sums.append(total)
    if len(set(sums)) != 1:
        raise AssertionError(
            f"character sum depends on the representative at (k={k}, x={x})"
        )
    return sums[0]


def verify_scheme_axioms(params: SchemeParams, samples: int = 4, seed: int = 0) -> dict:
    """Check the association scheme axioms on the full space.

    Builds the relations R_i = {(x, y) : weight(x - y) = i} and checks that
    R_0 is the diagonal, the relations are symmetric and partition the pair
    set, intersection numbers are constant over sampled pairs per relation,
    and the row sums of the intersection table give the valencies.
    Returns a report dict with a "violations" list (expected empty).
    """
    space = space_for(params)
    n = params.n
    violations = []
    buckets = space.weight_buckets()

    for e in itertools.chain.from_iterable(buckets):
        w = space.weight(e)
        if (w == 0) != (e == space.zero):
            violations.append(f"weight-0 class is not the diagonal at {e}")
        if space.weight(space.sub(space.zero, e)) != w:
            violations.append(f"weight is not symmetric at {e}")
        if not 0 <= w <= n:
            violations.append(f"weight {w} out of range at {e}")

    rng = random.Random(seed)
    elements = [e for bucket in buckets for e in bucket]
    intersection_tables = []
    for kk in range(n + 1):
        if not buckets[kk]:
            violations.append(f"empty relation at distance {kk}")
            continue
        pairs = [(space.zero, y) for y in _spread(buckets[kk], samples)]
        for _ in range(2):
            z = rng.choice(elements)
            y = rng.choice(buckets[kk])
            pairs.append((z, space.add(y, z)))
        tables = []
        for xx, yy in pairs:
            table = [[0] * (n + 1) for _ in range(n + 1)]
            for z in elements:
                table[space.weight(space.sub(xx, z))][space.weight(space.sub(yy, z))] += 1
            tables.append(table)
        if any(t != tables[0] for t in tables[1:]):
            violations.append(f"intersection numbers not constant on relation {kk}")
        intersection_tables.append(tables[0])
        for i in range(n + 1):
            if sum(tables[0][i]) != len(buckets[i]):
                violations.append(
                    f"row sum of intersection table at (i={i}, k={kk}) is not v_i"
                )

    return {
        "kind": params.kind,
        "valencies": [len(b) for b in buckets],
        "checked_relations": n + 1,
        "violations": violations,
        "ok": not violations,
    }


def _spread(seq, count):
    if len(seq) <= count:
        return list(seq)
    step = max(1, len(seq) // count)
    return list(seq[::step][:count])


def random_code(params: SchemeParams, rng, dim: int = None) -> CodeSpec:
    """A uniformly drawn linear code of the given (or random) dimension."""
    space = space_for(params)
    if dim is None:
        dim = rng.randint(0, space.dim)
    if not 0 <= dim <= space.dim:
        raise ValueError(f"dim must lie in 0..{space.dim}")
    gens = []
    while len(gens) < dim:
        cand = tuple(rng.randrange(space.gf.order) for _ in range(space.dim))
        if matrix_rank(gens + [cand], space.gf) > len(gens):
            gens.append(cand)
    return CodeSpec(params=params, generators=tuple(gens))


def reduced_generators(code: CodeSpec) -> tuple:
    """Canonical RREF generator set, for span-equality comparisons."""
    space = space_for(code.params)
    rows, _ = row_reduce(list(code.generators), space.gf)
    return tuple(tuple(r) for r in rows)


def code_to_json(code: CodeSpec) -> dict:
    from .schemes import scheme_to_json

    return {
        "scheme": scheme_to_json(code.params),
        "generators": [list(g) for g in code.generators],
    }


def code_from_json(obj: dict) -> CodeSpec:
    from .schemes import scheme_from_json

    params = scheme_from_json(obj["scheme"])
    return CodeSpec(params=params, generators=tuple(tuple(g) for g in obj["generators"]))
