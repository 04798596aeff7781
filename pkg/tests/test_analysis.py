"""sggi verdicts, intersection condition, type, tightness, orientability,
duality, and polyhedron isomorphism."""

import pytest

from tightpoly.analysis import (
    check_intersection_condition,
    check_sggi,
    is_tight,
    orientability,
    polyhedra_isomorphic,
    schlafli_type,
    sggi_report,
)
from tightpoly.enumeration import enumerate_cosets
from tightpoly.errors import TypeMismatchError
from tightpoly.presentations import (
    coxeter_presentation,
    delta_presentation,
    dual_presentation,
    lambda_presentation,
    parse_presentation,
)


def _rep(pres):
    return enumerate_cosets(pres)


def test_coxeter_4_3_is_sggi_and_c_group():
    rep = _rep(coxeter_presentation(4, 3))
    assert check_sggi(rep)
    assert check_intersection_condition(rep)
    assert schlafli_type(rep).as_tuple() == (4, 3)
    assert not is_tight(rep)  # order 48 != 24


def test_large_lambda_is_sggi():
    rep = _rep(lambda_presentation(48, 32, 11, 17))
    assert check_sggi(rep)
    assert is_tight(rep)


def test_collapsed_coxeter_1_3_is_still_sggi():
    # [1,3] forces rho0 = rho1 and then rho0 = rho2: the group is C2, and the
    # three (equal, non-identity) involutions still satisfy the sggi shape
    pres = parse_presentation("aa\nbb\ncc\nacac\nab\nbcbcbc\n")
    rep = _rep(pres)
    assert rep.order == 2
    assert check_sggi(rep)
    assert schlafli_type(rep).as_tuple() == (1, 1)  # degenerate downstream


def test_nonorientable_delta_4_6_passes_intersection():
    assert check_intersection_condition(_rep(delta_presentation(4, 6, 2, 4, 3, 2)))


def test_first_lambda_6_6_intersection_failure_is_0_4():
    """Frozen sweep result: the lexicographically first (i,j) making
    Lambda(6,6)_{i,j} an sggi of exact type {6,6} that is not a string
    C-group is (0,4)."""
    first = None
    for i in range(6):
        for j in range(6):
            rep = _rep(lambda_presentation(6, 6, i, j))
            if (
                check_sggi(rep)
                and schlafli_type(rep).as_tuple() == (6, 6)
                and not check_intersection_condition(rep)
            ):
                first = (i, j)
                break
        if first:
            break
    assert first == (0, 4)


def test_schlafli_types():
    assert schlafli_type(_rep(coxeter_presentation(4, 3))).as_tuple() == (4, 3)
    assert schlafli_type(_rep(delta_presentation(12, 6, 2, 4, 7, 2))).as_tuple() == (12, 6)


def test_first_lambda_4_6_collapse_is_0_0():
    """Frozen sweep result: collapse happens immediately at (0,0), down to
    type (2,2), which strictly divides (4,6) componentwise."""
    rep = _rep(lambda_presentation(4, 6, 0, 0))
    p, q = schlafli_type(rep).as_tuple()
    assert (p, q) == (2, 2)
    assert 4 % p == 0 and 6 % q == 0 and (p, q) != (4, 6)


def test_tightness():
    assert is_tight(_rep(lambda_presentation(48, 32, -1, 29)))
    assert not is_tight(_rep(coxeter_presentation(4, 3)))
    rep = _rep(lambda_presentation(6, 6, 5, 3))
    assert rep.order == 2 * 6 * 6 and is_tight(rep)


def test_orientability_verdicts(toroidal_rep, hemicube_rep):
    assert orientability(toroidal_rep)
    assert not orientability(hemicube_rep)
    # {p,2} quotients are orientable
    assert orientability(_rep(lambda_presentation(5, 2, -1, 1)))


def test_sggi_report_fields(hemicube_rep):
    report = sggi_report(hemicube_rep)
    assert report.is_sggi and report.is_string_c_group and report.is_tight
    assert report.order == 24
    assert report.type.as_tuple() == (4, 3)
    assert not report.orientable


def test_isomorphic_to_itself(hemicube_rep):
    pres = delta_presentation(4, 3, 2, -2, -1, 2)
    assert polyhedra_isomorphic(hemicube_rep, pres, hemicube_rep, pres)


def test_hemicube_parameter_reductions_are_isomorphic(hemicube_rep):
    pres_a = delta_presentation(4, 3, 2, -2, -1, 2)
    pres_b = delta_presentation(4, 3, 2, 1, 3, 2)
    rep_b = _rep(pres_b)
    assert polyhedra_isomorphic(hemicube_rep, pres_a, rep_b, pres_b)
    assert polyhedra_isomorphic(rep_b, pres_b, hemicube_rep, pres_a)


def test_the_two_4_6_polyhedra_differ():
    pres_a = delta_presentation(4, 6, 2, 1, 3, 2)
    pres_b = delta_presentation(4, 6, 2, 4, 3, 2)
    rep_a, rep_b = _rep(pres_a), _rep(pres_b)
    assert not polyhedra_isomorphic(rep_a, pres_a, rep_b, pres_b)
    assert not polyhedra_isomorphic(rep_b, pres_b, rep_a, pres_a)


def test_isomorphism_requires_matching_types(hemicube_rep, toroidal_rep):
    with pytest.raises(TypeMismatchError):
        polyhedra_isomorphic(
            hemicube_rep, delta_presentation(4, 3, 2, 1, 3, 2),
            toroidal_rep, lambda_presentation(4, 4, -1, 1),
        )


def test_covering_rigidity():
    """For tight string C-groups of one type, one-directional relator
    satisfaction plus equal order implies the reverse direction."""
    pairs = [
        (lambda_presentation(6, 6, 5, 1), lambda_presentation(6, 6, 5, 1)),
        (delta_presentation(4, 3, 2, -2, -1, 2), delta_presentation(4, 3, 2, 1, 3, 2)),
    ]
    from tightpoly.enumeration import evaluate_word

    for pres_a, pres_b in pairs:
        rep_a, rep_b = _rep(pres_a), _rep(pres_b)
        forward = all(evaluate_word(rep_a, r) == 0 for r in pres_b.relators)
        backward = all(evaluate_word(rep_b, r) == 0 for r in pres_a.relators)
        assert rep_a.order == rep_b.order
        assert forward and backward


def test_eq2_sigma_product_is_involution(toroidal_rep, hemicube_rep):
    # (sigma1 sigma2)^2 = (rho0 rho2)^2 = 1 in every sggi
    for rep in (toroidal_rep, hemicube_rep):
        x = rep.mult(rep.sigma1(), rep.sigma2())
        assert rep.mult(x, x) == 0


def test_quotient_criterion():
    """A cover of a string C-group that is injective on the facet subgroup
    makes the covering sggi a string C-group: each tight record
    Lambda(p,q)_{i,j} covers the edge-simple quotient Lambda(p,q')_{i,1}
    with q' the vertex degree attached to k = 1 - i."""
    from tightpoly.families import q_from_p_k
    from tightpoly.subgroups import subgroup_closure

    for p, q, i, j in [(8, 8, 3, 5), (48, 32, 11, 17), (12, 12, 3, 1)]:
        big_pres = lambda_presentation(p, q, i, j)
        big = _rep(big_pres)
        q_small = q_from_p_k(p, (1 - i) % p)
        assert (j - 1) % q_small == 0  # the cover identifies j with 1
        small_pres = lambda_presentation(p, q_small, i, 1)
        small = _rep(small_pres)
        assert check_intersection_condition(small)
        # facet subgroups have equal size: the cover is facet-injective
        facet_big = subgroup_closure(
            big, [big.generator_element(0), big.generator_element(1)]
        )
        facet_small = subgroup_closure(
            small, [small.generator_element(0), small.generator_element(1)]
        )
        assert len(facet_big) == len(facet_small) == 2 * p
        # conclusion of the criterion
        assert check_intersection_condition(big)


def test_normal_quotient_criterion():
    """Quotients of a verified string C-group by a normal <sigma_k^m> are
    string C-groups again."""
    from tightpoly.enumeration import element_order, evaluate_word
    from tightpoly.presentations import Presentation, word_power
    from tightpoly.subgroups import is_normal, subgroup_closure

    cases = [
        (lambda_presentation(8, 8, 3, 5), 2),   # <s1^4> and <s2^4>
        (delta_presentation(12, 6, 2, 4, 7, 2), 1),  # <s1^4> only
    ]
    for pres, expected_quotients in cases:
        rep = _rep(pres)
        assert check_intersection_condition(rep)
        quotients_checked = 0
        for sigma_word in ((0, 1), (1, 2)):
            n = element_order(rep, evaluate_word(rep, sigma_word))
            for m in range(2, n):
                if n % m:
                    continue
                elem = evaluate_word(rep, word_power(sigma_word, m))
                if not is_normal(rep, subgroup_closure(rep, [elem])):
                    continue
                quo_pres = Presentation(
                    pres.relators + (word_power(sigma_word, m),), "custom", ()
                )
                quo = _rep(quo_pres)
                assert check_sggi(quo)
                assert check_intersection_condition(quo)
                quotients_checked += 1
        assert quotients_checked == expected_quotients


def test_double_dual_group_is_isomorphic_polyhedron():
    for pres in [lambda_presentation(6, 6, 5, 3), delta_presentation(4, 6, 2, 1, 3, 2)]:
        double = dual_presentation(dual_presentation(pres))
        rep_a, rep_b = _rep(pres), _rep(double)
        assert polyhedra_isomorphic(rep_a, pres, rep_b, double)
        assert polyhedra_isomorphic(rep_b, double, rep_a, pres)
