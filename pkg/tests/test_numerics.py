from fractions import Fraction

import numpy as np
import pytest

from wkit.numerics import dd_div, dot2, projection_residual, two_prod, two_sum


def frac(x: float) -> Fraction:
    return Fraction(x)  # exact binary value of the float


class TestErrorFreeTransforms:
    def test_two_sum_is_error_free(self):
        rng = np.random.default_rng(0)
        for scale in (1.0, 1e8, 1e-8):
            for a, b in rng.uniform(-scale, scale, (200, 2)):
                s, e = two_sum(a, b)
                assert frac(s) + frac(e) == frac(a) + frac(b)

    def test_two_prod_is_error_free(self):
        rng = np.random.default_rng(1)
        for scale in (1.0, 1e8, 1e-8):
            for a, b in rng.uniform(-scale, scale, (200, 2)):
                p, e = two_prod(a, b)
                assert frac(p) + frac(e) == frac(a) * frac(b)

    def test_vectorized_matches_scalar(self):
        rng = np.random.default_rng(2)
        a = rng.uniform(-10, 10, 50)
        b = rng.uniform(-10, 10, 50)
        s, e = two_sum(a, b)
        p, f = two_prod(a, b)
        for i in range(50):
            assert (s[i], e[i]) == two_sum(a[i], b[i])
            assert (p[i], f[i]) == two_prod(a[i], b[i])


class TestDot2:
    def test_matches_exact_dot(self):
        rng = np.random.default_rng(3)
        for _ in range(100):
            d = int(rng.integers(2, 9))
            u = rng.uniform(-10, 10, d)
            v = rng.uniform(-10, 10, d)
            hi, lo = dot2(u, v)
            exact = sum(frac(x) * frac(y) for x, y in zip(u, v))
            err = abs((frac(hi) + frac(lo)) - exact)
            assert err <= Fraction(1, 10**25)

    def test_cancellation_survives(self):
        # ill-conditioned dot: the plain float sum loses everything
        u = np.array([1e16, 1.0, -1e16])
        v = np.array([1.0, 1.0, 1.0])
        hi, lo = dot2(u, v)
        assert hi + lo == 1.0

    def test_batched(self):
        rng = np.random.default_rng(4)
        U = rng.uniform(-10, 10, (40, 5))
        V = rng.uniform(-10, 10, (40, 5))
        hi, lo = dot2(U, V)
        for i in range(40):
            hi1, lo1 = dot2(U[i], V[i])
            assert hi[i] == hi1 and lo[i] == lo1


class TestDdDiv:
    def test_accuracy(self):
        rng = np.random.default_rng(5)
        for _ in range(200):
            a = rng.uniform(-100, 100)
            b = rng.uniform(0.1, 100)
            th, tl = dd_div(two_sum(a, 0.0), two_sum(b, 0.0))
            err = abs(frac(th) + frac(tl) - frac(a) / frac(b))
            assert err <= abs(frac(a) / frac(b)) * Fraction(1, 10**30)


class TestProjectionResidual:
    @staticmethod
    def exact_projection(u, v):
        uf = [frac(x) for x in u]
        vf = [frac(x) for x in v]
        t = sum(a * b for a, b in zip(uf, vf)) / sum(b * b for b in vf)
        return [a - t * b for a, b in zip(uf, vf)]

    def test_generic_pairs(self):
        rng = np.random.default_rng(6)
        for _ in range(50):
            d = int(rng.integers(2, 9))
            u = rng.uniform(-10, 10, d)
            v = rng.uniform(-10, 10, d)
            w = projection_residual(u, v)
            w_exact = self.exact_projection(u, v)
            for wi, we in zip(w, w_exact):
                assert abs(frac(wi) - we) <= abs(we) * Fraction(5, 10**16) + Fraction(1, 10**24)

    def test_near_collinear_direction_is_kept(self):
        # the whole point of the compensated path: v = lam*u + eps*noise
        rng = np.random.default_rng(7)
        for eps in (1e-6, 1e-9):
            for _ in range(30):
                d = int(rng.integers(2, 9))
                u = rng.uniform(-10, 10, d)
                v = rng.uniform(0.5, 2.0) * u + eps * rng.standard_normal(d)
                w = projection_residual(u, v)
                w_exact = self.exact_projection(u, v)
                norm_exact = sum(x * x for x in w_exact)
                diff = sum((frac(a) - b) ** 2 for a, b in zip(w, w_exact))
                # relative error in the full vector (hence its direction)
                assert diff <= norm_exact * Fraction(1, 10**24)

    def test_exactly_collinear_gives_zero(self):
        u = np.array([3.0, -1.5, 0.25])
        w = projection_residual(u, 2.0 * u)
        assert np.all(w == 0.0)
