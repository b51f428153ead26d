"""Root-of-unity specializations and the degenerate-case structure.

The symbolic reduced matrices of the pure generators are cached per strand
count (they do not depend on the weights), so specializing a representation
is one cheap monomial-evaluation pass.  The heavy predicate here is the
span-closure irreducibility test; it exploits that the reflection generators
s_i^2 differ from the identity in a single row, so left products touch one
matrix row and the elimination stays sparse.
"""

from __future__ import annotations

import random

from . import linalg
from .braid import full_twist, pure_generator
from .cyclo import CycloNum, specialize_poly
from .errors import InvariantError, ValidationError
from .gassner import (
    assert_polynomial_entries,
    delta_squared,
    evaluate_word,
    scalar_matrix_check,
)
from .hermitian import _check_spec_weights


# -- symbolic caches (depend on the strand count only) -----------------------

_symbolic_pure: dict = {}
_symbolic_words: dict = {}


def _symbolic_pure_matrices(strands: int) -> dict:
    """(r, s) -> reduced LaurentPoly matrix of A_{rs}."""
    cached = _symbolic_pure.get(strands)
    if cached is None:
        cached = {}
        for r in range(1, strands):
            for s in range(r + 1, strands + 1):
                word = pure_generator(r, s, strands)
                cached[(r, s)] = assert_polynomial_entries(
                    evaluate_word(word, "reduced"), f"A_{r}{s} reduced")
        _symbolic_pure[strands] = cached
    return cached


def _symbolic_word_matrix(key, word) -> tuple:
    cached = _symbolic_words.get(key)
    if cached is None:
        cached = assert_polynomial_entries(
            evaluate_word(word, "reduced"), str(key))
        _symbolic_words[key] = cached
    return cached


def specialize_matrix(mat: tuple, d: int, k: tuple) -> tuple:
    return tuple(tuple(specialize_poly(x, d, k) for x in row) for row in mat)


class SpecializedRep:
    """All reduced pure-generator matrices at X_i -> omega_d^{k_i}."""

    __slots__ = ("strands", "d", "k", "t", "generator_matrices",
                 "_inverses", "_reflection_rows")

    def __init__(self, strands: int, d: int, k: tuple, generator_matrices: dict):
        self.strands = strands
        self.d = d
        self.k = tuple(k)
        self.t = tuple(CycloNum.omega_power(d, ki) for ki in k)
        self.generator_matrices = generator_matrices
        self._inverses = {}
        self._reflection_rows = None

    @property
    def dim(self) -> int:
        return self.strands - 1

    def matrix(self, r: int, s: int) -> tuple:
        return self.generator_matrices[(r, s)]

    def matrix_inverse(self, r: int, s: int) -> tuple:
        inv = self._inverses.get((r, s))
        if inv is None:
            inv = linalg.mat_inverse(self.generator_matrices[(r, s)])
            self._inverses[(r, s)] = inv
        return inv

    def reflections(self) -> list:
        """The matrices of s_i^2 = A_{i,i+1} in generator order."""
        return [self.generator_matrices[(i, i + 1)]
                for i in range(1, self.strands)]

    def reflection_rows(self) -> list:
        """Per reflection i: the sparse nontrivial row (idx, [(col, coeff)])."""
        if self._reflection_rows is None:
            rows = []
            n = self.dim
            one = CycloNum.one(self.d)
            for i in range(1, self.strands):
                ti = self.t[i - 1]
                ti1 = self.t[i]
                idx = i - 1
                entries = []
                if idx - 1 >= 0:
                    entries.append((idx - 1, ti * (one - ti1)))
                entries.append((idx, ti * ti1))
                if idx + 1 < n:
                    entries.append((idx + 1, one - ti))
                rows.append((idx, entries))
            self._reflection_rows = rows
        return self._reflection_rows

    def central_scalar(self) -> CycloNum:
        prod = CycloNum.one(self.d)
        for ti in self.t:
            prod = prod * ti
        return prod

    def is_degenerate(self) -> bool:
        return sum(self.k) % self.d == 0

    def invariant_coords(self) -> tuple:
        """(1 - t_1...t_i) for i = 1..n: the candidate fixed vector."""
        one = CycloNum.one(self.d)
        out = []
        prod = one
        for i in range(self.dim):
            prod = prod * self.t[i]
            out.append(one - prod)
        return tuple(out)


def specialize_rep(d: int, k: tuple) -> SpecializedRep:
    k = tuple(k)
    _check_spec_weights(d, k)
    strands = len(k)
    sym = _symbolic_pure_matrices(strands)
    mats = {key: specialize_matrix(m, d, k) for key, m in sym.items()}
    return SpecializedRep(strands, d, k, mats)


# -- pigeonhole blocks --------------------------------------------------------

def pigeonhole_blocks(d: int, k: tuple):
    """Two disjoint consecutive index intervals with unit t-products.

    Scans prefix sums of the weights mod d inside the windows {1..d} and
    {d+1..2d}; a repeated residue yields an interval whose t-product is 1.
    Requires n >= 2d so both windows exist.  Returns ((a, b), (c, e)) as
    inclusive 1-based intervals.
    """
    k = tuple(k)
    _check_spec_weights(d, k)
    n = len(k) - 1
    if n < 2 * d:
        raise ValidationError(
            f"pigeonhole needs n >= 2d (got n={n}, d={d}); below that an "
            "interval with unit product need not exist")
    first = _scan_window(d, k, 0)
    second = _scan_window(d, k, d)
    return first, second


def _scan_window(d: int, k: tuple, offset: int):
    seen = {0: offset}
    acc = 0
    for j in range(offset + 1, offset + d + 1):
        acc = (acc + k[j - 1]) % d
        if acc in seen:
            return (seen[acc] + 1, j)
        seen[acc] = j
    raise InvariantError(
        f"pigeonhole failed on window starting at {offset + 1}; "
        "impossible for d+1 prefix residues",
        reproducer={"op": "pigeonhole_blocks", "d": d, "k": list(k)})


def all_unit_subintervals(d: int, k: tuple, lo: int, hi: int) -> list:
    """Brute-force oracle: every consecutive [a, b] inside [lo, hi] with
    t_a ... t_b = 1."""
    out = []
    for a in range(lo, hi + 1):
        acc = 0
        for b in range(a, hi + 1):
            acc = (acc + k[b - 1]) % d
            if acc == 0:
                out.append((a, b))
    return out


# -- unipotent elements -------------------------------------------------------

def _assert_subtwist_scalar(m2: tuple, rep: SpecializedRep, p: int):
    """Delta'^2 must act on eps_2..eps_{p-1} by the scalar t_2...t_p."""
    c = CycloNum.one(rep.d)
    for i in range(1, p):
        c = c * rep.t[i]
    n = len(m2)
    inside = range(1, min(p - 1, n))
    for a in inside:
        for b in inside:
            x = m2[a][b]
            ok = (x == c) if a == b else x.is_zero()
            if not ok:
                raise InvariantError(
                    "full twist on strands 2..p is not scalar "
                    f"{c} on the inner block (entry [{a}][{b}] = {x})",
                    reproducer={"op": "subtwist_scalar", "d": rep.d,
                                "k": list(rep.k), "p": p})
    return c


def unipotent_commutator(d: int, k: tuple) -> tuple:
    """u = [s_1^2, Delta'^2] on the p-strand specialization, p = len(k).

    Preconditions: p >= 3, weights coprime to d, and d | sum(k) so the
    representation is degenerate.  The result is checked to be a nontrivial
    unipotent: u != 1 and (u - 1)^2 = 0 exactly; failures of those checks are
    bugs, not bad input.
    """
    k = tuple(k)
    p = len(k)
    if p < 3:
        raise ValidationError(f"need p >= 3 strands for the commutator, got {p}")
    _check_spec_weights(d, k)
    if sum(k) % d != 0:
        raise ValidationError(
            f"need d | sum(k) (degenerate block), got sum={sum(k)} mod {d}")
    rep = specialize_rep(d, k)
    m1 = rep.matrix(1, 2)
    delta2 = full_twist(2, p, p) ** 2
    m2 = specialize_matrix(
        _symbolic_word_matrix(("subtwist2", p), delta2), d, k)
    _assert_subtwist_scalar(m2, rep, p)
    u = linalg.mat_mul(
        linalg.mat_mul(m1, m2),
        linalg.mat_mul(linalg.mat_inverse(m1), linalg.mat_inverse(m2)))
    n = p - 1
    one = CycloNum.one(d)
    zero = CycloNum.zero(d)
    ident = linalg.identity(n, one, zero)
    if linalg.mat_eq(u, ident):
        raise InvariantError(
            "commutator is the identity; no unipotent produced",
            reproducer={"op": "unipotent_commutator", "d": d, "k": list(k)})
    diff = linalg.mat_sub(u, ident)
    if not all(x.is_zero() for row in linalg.mat_mul(diff, diff) for x in row):
        raise InvariantError(
            "(u - 1)^2 != 0: commutator is not 2-step unipotent",
            reproducer={"op": "unipotent_commutator", "d": d, "k": list(k)})
    return u


def commutator_in_w_basis(d: int, k: tuple) -> tuple:
    """The commutator written in the basis (w, eps_2, ..., eps_{p-1})."""
    u = unipotent_commutator(d, k)
    rep = specialize_rep(d, k)
    n = rep.dim
    one = CycloNum.one(d)
    zero = CycloNum.zero(d)
    w = rep.invariant_coords()
    cols = [w] + [tuple(one if a == j else zero for a in range(n))
                  for j in range(1, n)]
    c = tuple(tuple(cols[j][a] for j in range(n)) for a in range(n))
    return linalg.mat_mul(linalg.mat_inverse(c),
                          linalg.mat_mul(u, c))


def flag_unipotency_check(d: int, k: tuple, seed: int = 0,
                          samples: int = 20, max_word: int = 10) -> bool:
    """Unipotency of the commutator and its conjugates on the standard flag.

    Works with p+1 strands, p = len(k) - 1, where the first p weights sum to
    0 mod d; the flag is  span(w)  inside  span(w, eps_2..eps_{p-1})  inside
    everything, and each sampled conjugate (by words in the pure generators
    of strands 2..p) must fix w, stabilize the middle space, and act as the
    identity on the successive quotients.
    """
    k = tuple(k)
    p = len(k) - 1
    if p < 3:
        raise ValidationError(f"need p >= 3 (got p={p})")
    _check_spec_weights(d, k)
    if sum(k[:p]) % d != 0:
        raise ValidationError(
            f"need d | sum of the first {p} weights, got {sum(k[:p])} mod {d}")
    strands = p + 1
    rep = specialize_rep(d, k)
    n = rep.dim  # = p
    one = CycloNum.one(d)
    zero = CycloNum.zero(d)

    m1 = rep.matrix(1, 2)
    delta2 = full_twist(2, p, strands) ** 2
    m2 = specialize_matrix(
        _symbolic_word_matrix(("subtwist2", strands, p), delta2), d, k)
    _assert_subtwist_scalar(m2, rep, p)
    u = linalg.mat_mul(
        linalg.mat_mul(m1, m2),
        linalg.mat_mul(linalg.mat_inverse(m1), linalg.mat_inverse(m2)))

    # adapted basis (w, eps_2, ..., eps_{p-1}, eps_p)
    w = rep.invariant_coords()
    cols = [w]
    for j in range(1, p - 1):
        cols.append(tuple(one if a == j else zero for a in range(n)))
    cols.append(tuple(one if a == p - 1 else zero for a in range(n)))
    c = tuple(tuple(cols[j][a] for j in range(n)) for a in range(n))
    cinv = linalg.mat_inverse(c)

    def block_unipotent(m: tuple) -> bool:
        b = linalg.mat_mul(cinv, linalg.mat_mul(m, c))
        if not b[0][0].is_one():
            return False
        for i in range(1, n):
            if not b[i][0].is_zero():
                return False
        for i in range(1, n - 1):
            for j in range(1, n - 1):
                if i == j:
                    if not b[i][j].is_one():
                        return False
                elif not b[i][j].is_zero():
                    return False
        for j in range(n - 1):
            if not b[n - 1][j].is_zero():
                return False
        return b[n - 1][n - 1].is_one()

    if not block_unipotent(u):
        return False
    gens = [(r, s) for r in range(2, p) for s in range(r + 1, p + 1)]
    rng = random.Random(seed)
    for _ in range(samples):
        length = rng.randint(1, max_word)
        picks = [gens[rng.randrange(len(gens))] for _ in range(length)]
        m = None
        for key in picks:
            g = rep.matrix(*key)
            m = g if m is None else linalg.mat_mul(m, g)
        minv = None
        for key in reversed(picks):
            g = rep.matrix_inverse(*key)
            minv = g if minv is None else linalg.mat_mul(minv, g)
        conj = linalg.mat_mul(m, linalg.mat_mul(u, minv))
        if not block_unipotent(conj):
            return False
    return True


# -- irreducibility by span closure ------------------------------------------

def burnside_irreducibility(rep: SpecializedRep,
                            generators: list | None = None):
    """(span_dim, irreducible): dimension over Q(omega_d) of the algebra
    spanned by words in the generator matrices, closed under left products.

    By default the complex reflections s_i^2 are used as generators; they
    already generate the full matrix algebra exactly when the representation
    is irreducible, and their single-row structure keeps the closure cheap.
    Passing explicit matrices switches to the generic dense path.
    """
    n = rep.dim
    d = rep.d
    one = CycloNum.one(d)
    zero = CycloNum.zero(d)
    ident = linalg.identity(n, one, zero)
    nsq = n * n

    pivots: dict = {}  # pivot index -> normalized row (list of length n^2)

    def reduce_and_insert(vec: list) -> bool:
        j = 0
        while j < nsq:
            x = vec[j]
            if not x.is_zero():
                row = pivots.get(j)
                if row is None:
                    inv = x.inverse()
                    pivots[j] = [v * inv for v in vec]
                    return True
                for t in range(j, nsq):
                    rv = row[t]
                    if not rv.is_zero():
                        vec[t] = vec[t] - x * rv
            j += 1
        return False

    def flatten(m: tuple) -> list:
        return [x for row in m for x in row]

    reduce_and_insert(flatten(ident))
    worklist = [ident]
    use_reflections = generators is None
    gens = rep.reflection_rows() if use_reflections else list(generators)
    # every insert adds an echelon row, so at most (n^2 + 1) matrices are
    # ever explored; the cap only guards against an implementation bug
    produced = 0
    cap = 2 * (nsq + 1) * max(1, len(gens))
    while worklist:
        b = worklist.pop(0)
        for gen in gens:
            produced += 1
            if produced > cap:
                raise InvariantError(
                    "span closure failed to stabilize",
                    reproducer={"op": "burnside", "d": d, "k": list(rep.k)})
            if use_reflections:
                idx, entries = gen
                newrow = [zero] * n
                for col, coeff in entries:
                    brow = b[col]
                    for t in range(n):
                        x = brow[t]
                        if not x.is_zero():
                            newrow[t] = newrow[t] + coeff * x
                # candidate = product - b, supported on matrix row idx
                delta = [zero] * nsq
                base = idx * n
                changed = False
                brow = b[idx]
                for t in range(n):
                    dv = newrow[t] - brow[t]
                    if not dv.is_zero():
                        delta[base + t] = dv
                        changed = True
                if not changed:
                    continue
                if reduce_and_insert(delta):
                    prod = tuple(tuple(newrow) if a == idx else b[a]
                                 for a in range(n))
                    worklist.append(prod)
            else:
                prod = linalg.mat_mul(gen, b)
                if reduce_and_insert(flatten(prod)):
                    worklist.append(prod)
        if len(pivots) >= nsq:
            break
    span_dim = len(pivots)
    return span_dim, span_dim == nsq


def fixed_vector_space_dim(rep: SpecializedRep) -> int:
    """dim of the simultaneous fixed space of all pure-generator matrices."""
    n = rep.dim
    one = CycloNum.one(rep.d)
    zero = CycloNum.zero(rep.d)
    rows = []
    for key in sorted(rep.generator_matrices):
        m = rep.generator_matrices[key]
        for a in range(n):
            row = list(m[a])
            row[a] = row[a] - one
            if any(not x.is_zero() for x in row):
                rows.append(tuple(row))
    if not rows:
        return n
    return len(linalg.kernel_basis(rows, one))


def has_fixed_vector(rep: SpecializedRep) -> bool:
    return fixed_vector_space_dim(rep) > 0


def degeneracy_agreement(d: int, k: tuple) -> dict:
    """The three degeneracy predicates side by side (they agree for n >= 2).

    At n = 1 the span-closure leg is excluded from the agreement claim: a
    one-dimensional representation is irreducible no matter what, so
    span_dim = 1 = n^2 even in the degenerate case.
    """
    rep = specialize_rep(d, k)
    degenerate = rep.is_degenerate()
    span_dim, irreducible = burnside_irreducibility(rep)
    fixed_dim = fixed_vector_space_dim(rep)
    n = rep.dim
    agree = (degenerate == (fixed_dim > 0))
    if n >= 2:
        agree = agree and (degenerate == (not irreducible))
    return {
        "d": d,
        "k": list(k),
        "n": n,
        "degenerate": degenerate,
        "span_dim": span_dim,
        "irreducible": irreducible,
        "fixed_space_dim": fixed_dim,
        "agree": agree,
    }


def central_scalar_matches(d: int, k: tuple) -> bool:
    """rho(Delta^2) specialized equals (t_1...t_{n+1}) * identity."""
    k = tuple(k)
    _check_spec_weights(d, k)
    strands = len(k)
    word = delta_squared(strands)
    mat = specialize_matrix(
        _symbolic_word_matrix(("delta2", strands), word), d, k)
    rep_scalar = CycloNum.one(d)
    for ki in k:
        rep_scalar = rep_scalar * CycloNum.omega_power(d, ki)
    return scalar_matrix_check(mat, rep_scalar)


def burau_matches_gassner_at_ones(strands: int, d: int) -> bool:
    """With every weight 1, the specialized matrices equal the one-variable
    matrices evaluated at omega_d, generator by generator."""
    from .gassner import burau_specialize

    k = (1,) * strands
    rep = specialize_rep(d, k)
    for (r, s), mat in rep.generator_matrices.items():
        sym = evaluate_word(pure_generator(r, s, strands), "reduced")
        bur = burau_specialize(sym)
        for a in range(rep.dim):
            for b in range(rep.dim):
                val = specialize_poly(bur[a][b], d, (1,))
                if val != mat[a][b]:
                    return False
    return True
