"""Classification, certificates, idempotent classes, and ring decisions."""

from __future__ import annotations

from random import Random

import pytest

from genring import (
    Case,
    GenMatrix,
    IdempotentKind,
    InternalCheckFailed,
    NotEnumerable,
    NotIdempotent,
    PreconditionViolated,
    check_critical_family,
    classify,
    classify_idempotent,
    commutant,
    conjugate,
    decide_ring,
    diagonalize_triangular,
    double_commutant,
    identity,
    is_qnil_brute,
    is_qnil_fast,
    is_quasipolar_brute,
    is_strongly_clean_brute,
    normal_form_sJ,
    parse_matrix,
    parse_ring,
    random_matrix,
    reduce_truncated,
    scalar_matrix,
    verify_ring,
    zero_matrix,
)
from genring.bruteforce import get_space


def mat(ring, s, text):
    return parse_matrix(ring, s, text)


# -- quasinilpotence -----------------------------------------------------------


def test_qnil_fast_basics(z4):
    s = z4.from_int(2)
    assert is_qnil_fast(zero_matrix(z4, s))
    assert not is_qnil_fast(identity(z4, s))
    a = mat(z4, s, "[[2,1],[1,2]]")
    assert is_qnil_fast(a)  # tr = 0, det = 4 - 2 = 2, both radical
    assert is_qnil_brute(a)


@pytest.mark.parametrize("spec", ["Z/4", "Z/2[t]/t^2"])
def test_qnil_fast_equals_brute_exhaustive(spec):
    ring = parse_ring(spec)
    for s in ring.elements():
        space = get_space(ring, s)
        for i in range(space.count):
            m = space.matrix_of(space.M[i])
            assert is_qnil_fast(m) == is_qnil_brute(m), f"disagree at {m!r}"


# -- element classification ----------------------------------------------------


def test_classify_worked_example(z8):
    a = mat(z8, 1, "[[1,1],[2,0]]")
    cls = classify(a)
    assert cls.tag is Case.SPLIT
    assert cls.roots.root_j == z8.from_int(2)
    assert cls.roots.root_u == z8.from_int(7)
    cert = cls.certificate
    assert cert.E == mat(z8, 1, "[[6,3],[6,3]]")
    assert cert.W == mat(z8, 1, "[[7,4],[0,3]]")
    assert cert.W.det() == z8.from_int(5)
    assert cert.qnil_part == mat(z8, 1, "[[4,6],[4,6]]")
    assert cert.qnil_part.trace() == z8.from_int(2)
    assert cert.qnil_part.det() == z8.zero


def test_classify_unit_and_qnil_cases(z8):
    s = z8.from_int(2)
    ident = identity(z8, s)
    cls = classify(ident)
    assert cls.tag is Case.UNIT and cls.certificate.E == zero_matrix(z8, s)
    nil = mat(z8, s, "[[0,1],[0,0]]")
    cls = classify(nil)
    assert cls.tag is Case.QUASINILPOTENT and cls.certificate.E == ident


def test_classify_negative_over_localization(zloc2):
    a = mat(zloc2, 1, "[[1,1],[-2,0]]")
    cls = classify(a)
    assert cls.tag is Case.NOT_QUASIPOLAR
    assert cls.reason == "rational-root-exhausted"
    assert not cls.is_quasipolar


def test_zero_multiplier_always_splits():
    for spec in ("Zloc(2)", "Z/8", "Zloc(2)[t]/t^2"):
        ring = parse_ring(spec)
        rng = Random(15)
        for _ in range(150):
            a = random_matrix(ring, ring.zero, rng)
            cls = classify(a)
            assert cls.is_quasipolar, f"s=0 must classify positively, got {a!r}"


def test_classification_invariant_under_swap_and_similarity(z9):
    rng = Random(19)
    for s_int in (0, 1, 3):
        s = z9.from_int(s_int)
        for _ in range(60):
            a = random_matrix(z9, s, rng)
            tag = classify(a).tag
            assert classify(a.swap()).tag is tag
            p = random_matrix(z9, s, rng)
            if p.is_unit():
                assert classify(conjugate(p, a)).tag is tag


# -- oracles -------------------------------------------------------------------


def test_commutant_frozen_count():
    z2 = parse_ring("Z/2")
    a = mat(z2, 1, "[[0,1],[0,0]]")
    comm = commutant(a)
    assert len(comm) == 4  # {xI + yA} over F_2
    assert all(x * a == a * x for x in comm)
    assert len(commutant(identity(z2, z2.one))) == 16


def test_commutant_contains_polynomials(z4):
    rng = Random(33)
    s = z4.from_int(3)
    for _ in range(10):
        a = random_matrix(z4, s, rng)
        comm = set(commutant(a).members)
        ident = identity(z4, s)
        for c0 in range(4):
            for c1 in range(4):
                poly = ident.scaled(c0) + a.scaled(c1)
                assert poly in comm


def test_double_commutant_subset_of_commutant(z4):
    rng = Random(35)
    s = z4.from_int(2)
    for _ in range(5):
        a = random_matrix(z4, s, rng)
        comm = set(commutant(a).members)
        dcomm = double_commutant(a)
        assert set(dcomm.members) <= comm
        ident = identity(z4, s)
        assert ident in set(dcomm.members)


def test_brute_quasipolar_basics(z4):
    s = z4.from_int(2)
    ident = identity(z4, s)
    cert = is_quasipolar_brute(ident)
    assert cert is not None and cert.E == zero_matrix(z4, s)
    nil = mat(z4, s, "[[0,1],[0,0]]")
    cert = is_quasipolar_brute(nil)
    assert cert is not None and cert.E == ident
    with pytest.raises(NotEnumerable):
        is_quasipolar_brute(identity(parse_ring("Zloc(2)"), parse_ring("Zloc(2)").one))


def test_strongly_clean_equivalence_exhaustive():
    for spec in ("Z/4", "F3"):
        ring = parse_ring(spec)
        for s in ring.elements():
            if not s.is_unit():
                continue
            space = get_space(ring, s)
            for i in range(space.count):
                m = space.matrix_of(space.M[i])
                assert is_strongly_clean_brute(m) == classify(m).is_quasipolar


def test_strongly_clean_identity_cases(z4):
    s = z4.one
    assert is_strongly_clean_brute(identity(z4, s))
    e = mat(z4, s, "[[1,0],[0,0]]")
    assert is_strongly_clean_brute(e)


# -- idempotent similarity classes ----------------------------------------------


def test_classify_idempotent_trivial_and_worked(z8):
    s = z8.one
    assert classify_idempotent(zero_matrix(z8, s)).kind is IdempotentKind.ZERO
    assert classify_idempotent(identity(z8, s)).kind is IdempotentKind.IDENTITY
    e = mat(z8, s, "[[6,3],[6,3]]")
    res = classify_idempotent(e)
    assert res.kind is IdempotentKind.DIAG_10
    assert conjugate(res.conjugator, e) == res.diagonal
    with pytest.raises(NotIdempotent):
        classify_idempotent(mat(z8, s, "[[1,1],[1,0]]"))


def test_unit_multiplier_merges_diagonal_classes(z8):
    s = z8.from_int(3)
    e = mat(z8, s, "[[0,0],[0,1]]")
    res = classify_idempotent(e)
    assert res.kind is IdempotentKind.DIAG_10  # s a unit: diag(0,1) ~ diag(1,0)
    assert conjugate(res.conjugator, e) == res.diagonal


def test_radical_multiplier_keeps_diagonal_classes_distinct(z4):
    s = z4.from_int(2)
    e01 = mat(z4, s, "[[0,0],[0,1]]")
    assert classify_idempotent(e01).kind is IdempotentKind.DIAG_01
    # exhaustive search: no unit conjugates diag(0,1) into diag(1,0)
    space = get_space(z4, s)
    e_row = space.row_of(e01)
    target = space.row_of(mat(z4, s, "[[1,0],[0,0]]"))
    units = space.M[space.unit_rows_mask(space.M)]
    inv = space.inverse_rows(units)
    conjugated = space.mul_rows(space.mul_rows(inv, e_row.reshape(1, 4)), units)
    assert not (conjugated == target).all(axis=1).any()


def test_every_idempotent_is_classified_with_verified_conjugator():
    for spec, s_int in [("Z/4", 1), ("Z/4", 2), ("Z/9", 3), ("Z/2[t]/t^2", 0)]:
        ring = parse_ring(spec)
        s = ring.from_int(s_int)
        space = get_space(ring, s)
        for row in space.idempotent_rows():
            e = space.matrix_of(row)
            res = classify_idempotent(e)
            if res.conjugator is not None:
                assert conjugate(res.conjugator, e) == res.diagonal
                assert res.diagonal.entries.count(ring.one) == 1


# -- triangular and normal forms -------------------------------------------------


def test_diagonalize_triangular_examples(z8):
    f3 = parse_ring("F3")
    p, d = diagonalize_triangular(mat(f3, 1, "[[1,1],[0,0]]"))
    assert p == mat(f3, 1, "[[1,2],[0,1]]")
    assert d == mat(f3, 1, "[[1,0],[0,0]]")
    p, d = diagonalize_triangular(mat(z8, 1, "[[7,4],[0,2]]"))
    assert d == mat(z8, 1, "[[7,0],[0,2]]")
    a = mat(z8, 1, "[[7,4],[0,3]]")  # gap 3 - 7 = -4 is not a unit
    with pytest.raises(PreconditionViolated):
        diagonalize_triangular(a)
    with pytest.raises(PreconditionViolated):
        diagonalize_triangular(mat(z8, 1, "[[1,1],[2,0]]"))  # not triangular
    p, d = diagonalize_triangular(mat(z8, 1, "[[3,0],[0,3]]"))  # already diagonal
    assert p == identity(z8, z8.one)


def test_normal_form_radical_multiplier(z8):
    s = z8.from_int(2)
    a = mat(z8, s, "[[3,2],[1,2]]")  # det = 2, tr = 5: split regime
    nf = normal_form_sJ(a)
    assert conjugate(nf.conjugator, a) == nf.matrix
    assert nf.matrix.a12 == z8.one
    assert nf.matrix.a21.is_unit()
    assert nf.matrix.a11.is_unit() != nf.matrix.a22.is_unit()
    trivial = mat(z8, s, "[[3,1],[1,2]]")  # already in shape
    nf2 = normal_form_sJ(trivial)
    assert nf2.conjugator == identity(z8, s)
    with pytest.raises(PreconditionViolated):
        normal_form_sJ(mat(z8, z8.one, "[[3,2],[1,2]]"))  # s must be radical
    with pytest.raises(PreconditionViolated):
        normal_form_sJ(zero_matrix(z8, s))  # quasinilpotent input


def test_normal_form_random_split_matrices():
    ring = parse_ring("Z/9")
    s = ring.from_int(3)
    rng = Random(57)
    done = 0
    while done < 40:
        a = random_matrix(ring, s, rng)
        if a.is_unit() or is_qnil_fast(a):
            continue
        nf = normal_form_sJ(a)
        assert conjugate(nf.conjugator, a) == nf.matrix
        assert nf.matrix.det() == a.det() and nf.matrix.trace() == a.trace()
        done += 1


# -- certificates ----------------------------------------------------------------


def test_certificates_fully_validated_on_small_rings():
    for spec, s_int in [("Z/4", 1), ("Z/4", 2), ("F3", 1)]:
        ring = parse_ring(spec)
        s = ring.from_int(s_int)
        space = get_space(ring, s)
        for i in range(space.count):
            m = space.matrix_of(space.M[i])
            cls = classify(m)
            cert = cls.certificate
            assert cert is not None
            cert.validate(deep=True)
            assert is_qnil_brute(cert.qnil_part)
            assert cert.matrix == m


def test_certificate_validation_catches_corruption(z8):
    cls = classify(mat(z8, 1, "[[1,1],[2,0]]"))
    from genring import Certificate

    bad = Certificate(cls.certificate.E, cls.certificate.W + identity(z8, z8.one),
                      cls.certificate.qnil_part)
    with pytest.raises(InternalCheckFailed):
        bad.validate()


# -- ring level ------------------------------------------------------------------


def test_verify_ring_exhaustive_small():
    ring = parse_ring("Z/4")
    for s in ring.elements():
        rep = verify_ring(ring, s, "exhaustive")
        assert rep.passes and rep.checked == 256
        assert rep.counts["not-quasipolar"] == 0
        assert sum(rep.counts.values()) == 256


def test_verify_ring_sampled_deterministic(z8):
    s = z8.from_int(6)
    rep1 = verify_ring(z8, s, "sample", samples=120, seed=42)
    rep2 = verify_ring(z8, s, "sample", samples=120, seed=42)
    assert rep1.to_json_dict() == rep2.to_json_dict()
    assert rep1.passes
    with pytest.raises(NotEnumerable):
        verify_ring(parse_ring("Zloc(2)"), parse_ring("Zloc(2)").one, "exhaustive")


def test_verify_ring_infinite_sample_records_witnesses(zloc2):
    rep = verify_ring(zloc2, zloc2.one, "sample", samples=120, seed=7)
    assert rep.checked == 120
    assert not rep.mismatches  # self-checks only; failures would be mismatches
    assert len(rep.witnesses) == rep.counts["not-quasipolar"]


def test_check_critical_family_explicit_witness():
    ring = parse_ring("Zloc(2)[t]/t^2")
    s = ring.from_int(2)
    rep = check_critical_family(ring, s, u_values=[ring.from_int(5)], w_values=[ring.zero])
    assert rep.total == 1 and rep.solvable == 0
    (u, w, m) = rep.witnesses[0]
    assert classify(m).tag is Case.NOT_QUASIPOLAR
    rep2 = check_critical_family(ring, ring.gen, samples=120, seed=3)
    assert rep2.all_solvable
    with pytest.raises(PreconditionViolated):
        check_critical_family(ring, ring.one, samples=5)


def test_check_critical_family_exhaustive_finite(z4):
    s = z4.from_int(2)
    rep = check_critical_family(z4, s)
    assert rep.mode == "exhaustive"
    assert rep.total == 4  # 2 units x 2 radical elements
    assert rep.all_solvable


def test_decide_ring_fast_paths(z8):
    d = decide_ring(z8, z8.from_int(6))
    assert d.verdict == "quasipolar" and d.method == "multiplier-nilpotent"
    d = decide_ring(z8, z8.from_int(1))
    assert d.verdict == "quasipolar" and d.method == "finite-exhaustive"
    assert d.verify_report is not None and d.verify_report.passes
    big = parse_ring("Z/4[t]/t^2")
    d = decide_ring(big, big.one)
    assert d.verdict == "quasipolar" and d.method == "finite-hensel"


def test_decide_ring_localized(zloc2):
    for p in (2, 3, 5):
        ring = parse_ring(f"Zloc({p})")
        d = decide_ring(ring, ring.one)
        assert d.verdict == "not-quasipolar"
        assert d.method == "localized-unit-multiplier"
        assert classify(d.witness).tag is Case.NOT_QUASIPOLAR
    d = decide_ring(zloc2, zloc2.zero)
    assert d.verdict == "quasipolar" and d.method == "multiplier-nilpotent"
    d = decide_ring(zloc2, zloc2.from_int(2))
    assert d.verdict == "not-quasipolar" and d.method == "family-search"
    assert classify(d.witness).tag is Case.NOT_QUASIPOLAR


def test_decide_ring_truncated_dichotomy():
    ring = parse_ring("Zloc(2)[t]/t^2")
    assert decide_ring(ring, ring.gen).verdict == "quasipolar"
    d = decide_ring(ring, ring.from_int(2))
    assert d.verdict == "not-quasipolar"
    assert d.witness is not None and classify(d.witness).tag is Case.NOT_QUASIPOLAR


# -- truncation reduction ---------------------------------------------------------


def test_reduce_truncated_matches_direct():
    ring = parse_ring("Z/4[t]/t^3")
    rng = Random(71)
    for _ in range(120):
        s = ring.element([rng.randrange(4) for _ in range(3)])
        a = random_matrix(ring, s, rng)
        lifted = reduce_truncated(a)
        assert lifted.tag is classify(a).tag
        if lifted.certificate is not None:
            lifted.certificate.validate(deep=False)


def test_reduce_truncated_negative_case():
    ring = parse_ring("Zloc(2)[t]/t^2")
    s = ring.from_int(2)
    a = mat(ring, s, "[[1,1],[5,0]]")
    lifted = reduce_truncated(a)
    assert lifted.tag is Case.NOT_QUASIPOLAR
    assert classify(a).tag is Case.NOT_QUASIPOLAR
    with pytest.raises(PreconditionViolated):
        reduce_truncated(mat(parse_ring("Z/8"), 1, "[[1,1],[2,0]]"))


def test_reduce_truncated_order_one_is_classify():
    ring = parse_ring("Z/8[t]/t^1")
    rng = Random(13)
    for _ in range(40):
        s = ring.from_int(rng.randrange(8))
        a = random_matrix(ring, s, rng)
        assert reduce_truncated(a).tag is classify(a).tag


# -- oracle equivalence (the central property) ------------------------------------


@pytest.mark.parametrize("spec", ["Z/4", "Z/2[t]/t^2", "F3", "Z/2"])
def test_classify_agrees_with_brute_search_exhaustive(spec):
    ring = parse_ring(spec)
    for s in ring.elements():
        space = get_space(ring, s)
        for i in range(space.count):
            m = space.matrix_of(space.M[i])
            cls = classify(m)
            cert = is_quasipolar_brute(m)
            assert (cert is not None) == cls.is_quasipolar, f"mismatch at {m!r}"
