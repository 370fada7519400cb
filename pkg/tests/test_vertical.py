import json
import random
from math import gcd

import pytest

from sfsdiag.diagram import (
    diagram_homology,
    diagram_presentation,
    is_positive_diagram,
    rotation_genus,
    validate,
)
from sfsdiag.errors import BaseGenusUnsupported, UnsatisfiablePattern
from sfsdiag.seifert import SeifertData, homology, normalize
from sfsdiag.vertical import (
    ChainPlan,
    _strand_cycle,
    assign_betas,
    build_positive_vertical,
    plan_decomposition,
    synthesize_diagram,
)

COPRIME_FIBERS = [(a, b) for a in range(2, 6) for b in range(1, a) if gcd(a, b) == 1]


class TestPlan:
    def test_minimal_plan(self):
        plan = plan_decomposition(3)
        assert plan.r == 3
        assert plan.squares == ((0, 1),)
        assert plan.sign_pattern == ("+", "-", "+")
        assert plan.b_squares == (0,) and plan.a_squares == ()

    def test_four_fibers(self):
        plan = plan_decomposition(4)
        assert plan.r == 4
        assert plan.sign_pattern == ("+", "-", "+", "+")
        assert len(plan.squares) == 2

    def test_padding(self):
        assert plan_decomposition(0).r == 3
        assert plan_decomposition(2).r == 3

    def test_alternation_enforced(self):
        with pytest.raises(ValueError):
            ChainPlan(
                r=3,
                d_fibers=(0, 1),
                e_fiber=2,
                squares=((0, 1),),
                sign_pattern=("+", "+", "+"),
                b_squares=(0,),
            )


class TestAssignBetas:
    def test_worked_example_chain_signs(self):
        # chain pattern is (+,-,+,+); the whole deficit lands on the one
        # negative slot
        n = SeifertData.normalized(0, [(4, 1), (3, 2), (5, 3), (2, 1)], 5)
        betas = assign_betas(n, plan_decomposition(4))
        assert [(f.alpha, f.beta) for f in betas] == [(4, 1), (3, -13), (5, 3), (2, 1)]

    def test_padded_trivial_space(self):
        n = SeifertData.normalized(0, [], 0)
        betas = assign_betas(n, plan_decomposition(0))
        assert [f.alpha for f in betas] == [1, 1, 1]
        assert [1 if f.beta > 0 else -1 for f in betas] == [1, -1, 1]
        assert sum(f.beta // f.alpha for f in betas) == 0

    def test_half_fibers(self):
        n = SeifertData.normalized(0, [(2, 1), (2, 1), (2, 1)], 1)
        betas = assign_betas(n, plan_decomposition(3))
        assert [1 if f.beta > 0 else -1 for f in betas] == [1, -1, 1]
        assert sum(f.beta // f.alpha for f in betas) == -1

    def test_always_succeeds(self):
        rng = random.Random(21)
        for _ in range(300):
            m = rng.randint(0, 7)
            n = SeifertData.normalized(
                0, [rng.choice(COPRIME_FIBERS) for _ in range(m)], rng.randint(-9, 9)
            )
            plan = plan_decomposition(m)
            try:
                betas = assign_betas(n, plan)
            except UnsatisfiablePattern:
                pytest.fail(f"chain assignment failed for {n.to_json()}")
            assert normalize(SeifertData(0, betas, None)) == n
            for f, kind in zip(betas, plan.sign_pattern):
                assert (f.beta > 0) == (kind == "+")
                assert gcd(f.alpha, f.beta) == 1


class TestStrandCycle:
    @pytest.mark.parametrize("a,b", [(1, 1), (1, 4), (3, 2), (2, 3), (5, 3), (4, 7)])
    @pytest.mark.parametrize("hdir", [1, -1])
    def test_single_cycle_visits_all(self, a, b, hdir):
        cycle = _strand_cycle(a, b, hdir)
        assert len(cycle) == a + b
        assert sorted(c for c in cycle if c[0] == "h") == [("h", k) for k in range(a)]
        assert sorted(c for c in cycle if c[0] == "v") == [("v", v) for v in range(b)]

    def test_rejects_non_coprime(self):
        with pytest.raises(ValueError):
            _strand_cycle(2, 4, 1)


class TestSynthesize:
    def test_trivial_fibers_give_sphere(self):
        # 1/1, -1/1, 1/1 is the 3-sphere; genus-2 positive diagram
        plan = plan_decomposition(0)
        betas = assign_betas(SeifertData.normalized(0, [], -1), plan)
        dg = synthesize_diagram(plan, betas)
        assert dg.declared_genus == 2
        assert is_positive_diagram(dg)
        h = diagram_homology(dg)
        assert h.free_rank == 0 and h.torsion == ()

    def test_sign_pattern_enforced(self):
        plan = plan_decomposition(3)
        with pytest.raises(ValueError):
            synthesize_diagram(
                plan,
                SeifertData.non_normalized(0, [(2, 1), (3, 2), (5, 1)]).fibers,
            )


class TestBuild:
    def test_worked_example(self):
        s = SeifertData.non_normalized(0, [(4, 1), (3, -4), (5, 3), (2, -5)])
        dg = build_positive_vertical(s)
        assert dg.declared_genus == 3
        assert len(dg.x_curves) == len(dg.y_curves) == 3
        assert is_positive_diagram(dg)
        assert diagram_homology(dg).order() == 358

    def test_positive_base_genus_rejected(self):
        with pytest.raises(BaseGenusUnsupported):
            build_positive_vertical(SeifertData.normalized(1, [(2, 1)], 0))

    def test_triangle_group_space(self):
        s = SeifertData.normalized(0, [(2, 1), (3, 1), (5, 1)], 1)
        dg = build_positive_vertical(s)
        assert dg.declared_genus == 2
        assert diagram_homology(dg).same_group(homology(s))

    def test_quaternionic_space(self):
        # torsion (2, 2) confirmed by the minor-gcd oracle on the
        # abelianized relation matrix
        s = SeifertData.normalized(0, [(2, 1), (2, 1), (2, 1)], 1)
        dg = build_positive_vertical(s)
        assert dg.declared_genus == 2
        assert is_positive_diagram(dg)
        h = diagram_homology(dg)
        assert h.torsion == (2, 2) and h.free_rank == 0

    def test_small_manifold_presentations(self):
        # the genus-2 words are simple enough to reduce by hand: with
        # x*y = 1 the long relator y^(2e+1) x^2 collapses to x^(1-2e) x^2,
        # so e = 1 kills the group (the 3-sphere) and e = 3 leaves Z/3
        dg = build_positive_vertical(SeifertData.normalized(0, [], 1))
        assert diagram_presentation(dg).relators == ((2, 2, 2, 1, 1), (1, 2))
        dg = build_positive_vertical(SeifertData.normalized(0, [], 3))
        assert diagram_presentation(dg).relators == ((2, 2, 2, 2, 2, 1, 1), (1, 2))

    def test_determinism(self):
        s = SeifertData.normalized(0, [(3, 2), (4, 3), (5, 1)], -2)
        one = json.dumps(build_positive_vertical(s).to_json(), sort_keys=False)
        two = json.dumps(build_positive_vertical(s).to_json(), sort_keys=False)
        assert one == two

    def test_oracle_sweep(self):
        rng = random.Random(23)
        for _ in range(80):
            m = rng.randint(0, 6)
            s = SeifertData.normalized(
                0, [rng.choice(COPRIME_FIBERS) for _ in range(m)], rng.randint(-5, 5)
            )
            dg = build_positive_vertical(s)
            r = max(m, 3)
            assert validate(dg) == []
            assert is_positive_diagram(dg)
            assert len(dg.x_curves) == len(dg.y_curves) == dg.declared_genus == r - 1
            assert rotation_genus(dg) <= r - 1
            assert diagram_homology(dg).same_group(homology(s))
