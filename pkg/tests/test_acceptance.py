"""Acceptance suite: one test per criterion, one PASS line per criterion.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines; every tolerance and bound is pinned here, not configurable.
"""

import itertools
import random
import time
from fractions import Fraction
from math import gcd

from braidrep.braid import BraidWord, pure_generator, random_pure_word
from braidrep.cli import build_parser, config_from_args, run
from braidrep.cyclo import CycloNum
from braidrep.gassner import (
    delta_squared,
    evaluate_word,
    oracle_equivalence,
    scalar_matrix_check,
)
from braidrep.hermitian import (
    form_determinant,
    is_degenerate,
    signature,
    verify_invariance,
)
from braidrep.laurent import RationalFunction
from braidrep.spectral import (
    all_unit_subintervals,
    central_scalar_matches,
    commutator_in_w_basis,
    degeneracy_agreement,
    flag_unipotency_check,
    pigeonhole_blocks,
    unipotent_commutator,
)
from braidrep.topology import CoverSpec, dm_report, genus_riemann_hurwitz, \
    homology_decomposition, kernel_ranks


def _units(d):
    return [u for u in range(1, d) if gcd(u, d) == 1]


def _announce(num, ok, text):
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE C{num:02d} {status} - {text}")
    assert ok, f"criterion {num}: {text}"


def test_c01_braid_relations_both_bases():
    start = time.monotonic()
    checked = 0
    for strands in range(3, 7):
        for basis in ("reduced", "unreduced"):
            for i in range(1, strands - 1):
                lhs = evaluate_word(BraidWord(strands, (i, i + 1, i)), basis)
                rhs = evaluate_word(BraidWord(strands, (i + 1, i, i + 1)), basis)
                assert lhs == rhs, (strands, i, basis)
                checked += 1
            for i in range(1, strands):
                for j in range(i + 2, strands):
                    lhs = evaluate_word(BraidWord(strands, (i, j)), basis)
                    rhs = evaluate_word(BraidWord(strands, (j, i)), basis)
                    assert lhs == rhs, (strands, i, j, basis)
                    checked += 1
    elapsed = time.monotonic() - start
    _announce(1, elapsed < 30.0,
              f"all defining relations exact in both bases up to 6 strands "
              f"({checked} relations, {elapsed:.1f}s < 30s)")


def test_c02_oracle_equivalence():
    checked = 0
    for strands in range(2, 6):
        for r in range(1, strands):
            for s in range(r + 1, strands + 1):
                assert oracle_equivalence(r, s, strands), (r, s, strands)
                checked += 1
    _announce(2, True,
              f"word evaluation = semidirect derivation = closed form for "
              f"{checked} pure generators up to 5 strands")


def test_c03_form_invariance():
    checked = 0
    for strands in range(2, 7):
        for r in range(1, strands):
            for s in range(r + 1, strands + 1):
                assert verify_invariance(pure_generator(r, s, strands))
                checked += 1
    rng = random.Random(0)
    for _ in range(200):
        strands = rng.randint(2, 6)
        w = random_pure_word(strands, rng, max_factors=3)
        assert verify_invariance(w)
        checked += 1
    _announce(3, True,
              f"M^H h M = h exactly for {checked} pure words "
              "(all generators plus 200 seeded random, n <= 5)")


def test_c04_determinant_identity():
    for strands in range(2, 8):
        form_determinant(strands)  # raises on closed-form mismatch
    _announce(4, True, "tridiagonal determinant equals the closed form, n <= 6")


def test_c05_central_scalars():
    for strands in range(2, 6):
        m = evaluate_word(delta_squared(strands), "reduced")
        scalar = RationalFunction.constant(strands, 1)
        for i in range(1, strands + 1):
            scalar = scalar * RationalFunction.variable(strands, i)
        assert m.is_linear()
        assert scalar_matrix_check(m.matrix, scalar), strands
    rng = random.Random(1)
    done = 0
    while done < 100:
        d = rng.randint(2, 8)
        strands = rng.randint(2, 5)
        k = tuple(rng.choice(_units(d)) for _ in range(strands))
        assert central_scalar_matches(d, k), (d, k)
        done += 1
    _announce(5, True,
              "full twist squared acts by X1...X_{n+1} (n <= 4) and by "
              "t1...t_{n+1} on 100 seeded specializations (d <= 8)")


def test_c06_degeneracy_triple_agreement():
    start = time.monotonic()
    count = 0
    for d in range(2, 7):
        units = _units(d)
        for n in range(1, 6):
            for k in itertools.product(units, repeat=n + 1):
                report = degeneracy_agreement(d, k)
                assert report["agree"], report
                count += 1
    elapsed = time.monotonic() - start
    _announce(6, elapsed < 300.0,
              f"is_degenerate = fixed-vector = span-deficiency on {count} "
              f"specs (d <= 6, n <= 5, exhaustive; {elapsed:.0f}s < 300s; "
              "span leg applies for n >= 2)")


def test_c07_unipotent_structure():
    # every (p <= 5, d <= 6, k) with d | sum(k): nontrivial 2-step unipotent
    # commutator, plus the flag check with one extra strand appended in every
    # coprime way
    u_checked = 0
    flag_checked = 0
    for d in range(2, 7):
        units = _units(d)
        for p in (3, 4, 5):
            for k in itertools.product(units, repeat=p):
                if sum(k) % d:
                    continue
                unipotent_commutator(d, k)  # raises unless u != 1, (u-1)^2 = 0
                u_checked += 1
                for extra in units:
                    assert flag_unipotency_check(d, k + (extra,), seed=0), \
                        (d, k, extra)
                    flag_checked += 1
    b = commutator_in_w_basis(3, (1, 1, 1))
    w = CycloNum.omega_power(3, 1)
    assert b[0][1] == w * (CycloNum.one(3) - w)
    _announce(7, True,
              f"unipotent commutators on {u_checked} degenerate blocks, flag "
              f"unipotency on {flag_checked} extensions, off-diagonal entry "
              "= w(1-w) at p=3, d=3")


def test_c08_paper_numerics():
    start = time.monotonic()
    spec = CoverSpec(3, 18, (1, 1, 1, 1))
    rep = dm_report(spec, 7)
    assert rep.mu == (Fraction(7, 18),) * 4
    assert rep.mu_inf == Fraction(8, 18)
    pairs = {p["pair"]: p["value"] for p in rep.pair_conditions}
    assert pairs["1,2"] == "9/2"
    assert pairs["1,inf"] == "6"
    assert signature(18, (1, 1, 1, 1), 7) == (2, 1)
    elapsed = time.monotonic() - start
    _announce(8, elapsed < 1.0,
              f"weights 7/18, 8/18, values 9/2 and 6, signature (2,1) "
              f"({elapsed * 1000:.0f}ms < 1s)")


def test_c09_decomposition_rh_agreement():
    fixed = [
        (CoverSpec(3, 2, (1, 1, 1, 1)), 1),
        (CoverSpec(2, 3, (1, 1, 1)), 1),
        (CoverSpec(2, 4, (1, 1, 1)), 3),
        (CoverSpec(3, 18, (1, 1, 1, 1)), 25),
    ]
    for spec, genus in fixed:
        assert homology_decomposition(spec).genus == genus
        assert genus_riemann_hurwitz(spec) == genus
    rng = random.Random(2)
    for _ in range(500):
        d = rng.randint(2, 10)
        n = rng.randint(1, 12)
        k = tuple(rng.choice(_units(d)) for _ in range(n + 1))
        spec = CoverSpec(n, d, k)
        assert homology_decomposition(spec).genus == \
            genus_riemann_hurwitz(spec), spec
    _announce(9, True,
              "divisor-sum genus = Riemann-Hurwitz genus on 500 seeded specs "
              "(d <= 10, n <= 12) and the four pinned cases")


def test_c10_rank_identities_and_regime_bound():
    for d in range(2, 21):
        for n in range(1, 21):
            assert 1 + n * d == (n + 1) + n * (d - 1)
            kernel_ranks(CoverSpec(n, d, (1,) * (n + 1)))
    # mu_inf > 0 forces n <= 2d-1.  Each fractional part {k_i f / d} is at
    # least 1/d (k_i f is never divisible by d), so the tuple minimizing the
    # sum is k_i = f^-1 mod d; checking that extremal tuple for every f is
    # exhaustive over all k.
    for d in range(2, 9):
        for f in _units(d):
            finv = pow(f, -1, d)
            for n in range(2 * d, 2 * d + 4):
                mu_inf = 2 - sum(Fraction((finv * f) % d, d)
                                 for _ in range(n + 1))
                assert mu_inf <= 0, (d, f, n)
    rng = random.Random(3)
    from braidrep.topology import dm_regime_bound

    for _ in range(200):
        d = rng.randint(2, 8)
        n = rng.randint(1, 2 * d + 3)
        k = tuple(rng.choice(_units(d)) for _ in range(n + 1))
        for f in _units(d):
            dm_regime_bound(CoverSpec(n, d, k), f)  # raises on violation
    _announce(10, True,
              "1+nd = (n+1)+n(d-1) for d, n <= 20; mu_inf > 0 implies "
              "n <= 2d-1 exhaustively for d <= 8 (extremal-tuple reduction)")


def test_c11_pigeonhole_blocks():
    rng = random.Random(4)
    for _ in range(200):
        d = rng.randint(2, 6)
        n = rng.randint(2 * d, 2 * d + 4)
        k = tuple(rng.choice(_units(d)) for _ in range(n + 1))
        (a, b), (c, e) = pigeonhole_blocks(d, k)
        assert 1 <= a <= b <= d and d + 1 <= c <= e <= 2 * d
        assert (a, b) in all_unit_subintervals(d, k, 1, d)
        assert (c, e) in all_unit_subintervals(d, k, d + 1, 2 * d)
    _announce(11, True,
              "200 seeded pigeonhole block pairs validated against the "
              "exhaustive-subinterval oracle (d <= 6, n >= 2d)")


def test_c12_determinism():
    battery = [
        ["form", "--n", "3"],
        ["matrix", "--n", "3", "--word", "A 1 4", "--basis", "unreduced"],
        ["verify", "--n", "3", "--word", "T 1 4 T 1 4"],
        ["specialize", "--d", "5", "--k", "1,2,3"],
        ["spectral", "--d", "3", "--k", "1,1,1,1,1,1,1", "--seed", "0"],
        ["decompose", "--d", "18", "--k", "1,1,1,1"],
        ["dm", "--d", "18", "--k", "1,1,1,1", "--f", "7"],
        ["classify", "--d", "18", "--k", "1,1,1,1"],
        ["signature", "--d", "18", "--k", "1,1,1,1"],
        ["sweep", "--d", "4", "--n", "3", "--seed", "0"],
    ]
    parser = build_parser()

    def run_all():
        outputs = []
        for argv in battery:
            config = config_from_args(parser.parse_args(argv))
            code, text = run(config)
            assert code == 0, (argv, text)
            outputs.append(text)
        return "".join(outputs)

    first = run_all()
    second = run_all()
    _announce(12, first == second,
              f"two full battery runs with seed 0 are byte-identical "
              f"({len(first)} bytes)")
