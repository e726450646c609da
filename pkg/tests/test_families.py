import pytest

from oracles import dyck_peaks
from ssq import families as fam
from ssq.core import closure, v2k, veronese
from ssq.gorenstein import is_symmetric
from ssq.hilbert import hvector_dp


class TestNarayana:
    @pytest.mark.parametrize("k", range(1, 10))
    def test_first_is_one(self, k):
        assert fam.narayana(k, 1) == 1

    def test_value(self):
        assert fam.narayana(3, 2) == 3

    def test_catalan_four(self):
        assert sum(fam.narayana(4, i) for i in range(1, 5)) == 14

    def test_out_of_range(self):
        assert fam.narayana(4, 0) == 0 and fam.narayana(4, 5) == 0

    def test_k_zero(self):
        with pytest.raises(ValueError):
            fam.narayana(0, 1)

    @pytest.mark.parametrize("k", range(1, 9))
    def test_counts_dyck_peaks(self, k):
        assert [fam.narayana(k, i) for i in range(k + 1)] == dyck_peaks(k)

    def test_symmetry_and_catalan(self):
        for k in range(1, 26):
            row = [fam.narayana(k, i) for i in range(1, k + 1)]
            assert row == row[::-1]
            assert sum(row) == fam.catalan(k)


class TestClosedForms:
    @pytest.mark.parametrize("k,h", [(1, (1, 1)), (2, (1, 4, 1)), (5, (1, 25, 100, 100, 25, 1))])
    def test_v2k(self, k, h):
        assert fam.hvec_v2k(k) == h

    @pytest.mark.parametrize("n,h", [(2, (1, 1)), (4, (1, 6, 1)), (6, (1, 15, 15, 1))])
    def test_veronese(self, n, h):
        assert fam.hvec_veronese(n) == h

    @pytest.mark.parametrize("k,j,h", [(3, 4, (1, 9, 9, 1)), (3, 5, (1, 11, 11, 1)),
                                       (3, 6, (1, 15, 15, 1))])
    def test_v2k_square(self, k, j, h):
        assert fam.hvec_v2k_square(k, j) == h

    def test_v2k_square_top_is_veronese(self):
        for k in range(1, 7):
            assert fam.hvec_v2k_square(k, 2 * k) == fam.hvec_veronese(2 * k)

    @pytest.mark.parametrize("k,j", [(3, 3), (3, 7), (0, 1)])
    def test_v2k_square_range(self, k, j):
        with pytest.raises(ValueError):
            fam.hvec_v2k_square(k, j)

    @pytest.mark.parametrize("k,h", [(2, (1, 4, 1)), (4, (1, 22, 50, 22, 1)),
                                     (5, (1, 37, 154, 154, 37, 1))])
    def test_hook(self, k, h):
        assert fam.hvec_hook(k) == h

    def test_hook_k2_is_v4(self):
        assert fam.hook_diagram(2) == v2k(2)

    def test_hook_range(self):
        with pytest.raises(ValueError):
            fam.hvec_hook(1)

    @pytest.mark.parametrize("k,a,h", [(2, 3, (1, 5, 1)), (3, 3, (1, 10, 10, 1)),
                                       (5, 5, (1, 26, 104, 104, 26, 1))])
    def test_onebox(self, k, a, h):
        assert fam.hvec_onebox(k, a) == h

    @pytest.mark.parametrize("k,a", [(3, 2), (3, 5), (1, 3)])
    def test_onebox_range(self, k, a):
        with pytest.raises(ValueError):
            fam.hvec_onebox(k, a)


class TestAgainstDP:
    def test_v2k(self):
        for k in range(1, 9):
            assert fam.hvec_v2k(k) == hvector_dp(v2k(k))

    def test_veronese(self):
        for n in range(1, 13):
            assert fam.hvec_veronese(n) == hvector_dp(closure([(n, n)]))

    def test_v2k_square(self):
        for k in range(1, 8):
            for j in range(k + 1, 2 * k + 1):
                d = v2k(k).union(closure([(j, j)]))
                assert fam.hvec_v2k_square(k, j) == hvector_dp(d), (k, j)

    def test_hook(self):
        for k in range(2, 8):
            d = closure([(2, 2 * k), (2 * k - 1, 2 * k - 1)])
            assert fam.hvec_hook(k) == hvector_dp(d), k

    def test_onebox(self):
        for k in range(2, 8):
            for a in range(3, k + 2):
                d = v2k(k).union(closure([(a, 2 * k + 3 - a)]))
                assert len(d) == len(v2k(k)) + 1
                assert fam.hvec_onebox(k, a) == hvector_dp(d), (k, a)


def test_families_are_palindromic():
    for k in range(2, 8):
        assert is_symmetric(fam.hvec_v2k(k))
        assert is_symmetric(fam.hvec_hook(k))
        for j in range(k + 1, 2 * k + 1):
            assert is_symmetric(fam.hvec_v2k_square(k, j))
        for a in range(3, k + 2):
            assert is_symmetric(fam.hvec_onebox(k, a))


def test_veronese_palindromic_iff_even():
    for n in range(2, 13):
        assert is_symmetric(fam.hvec_veronese(n)) == (n % 2 == 0)


def test_family_dispatch():
    h, p = fam.family_hvector("v2k", k=2)
    assert (h, p) == ((1, 4, 1), 4)
    h, p = fam.family_hvector("veronese", n=5)
    assert p == 5 and h == (1, 10, 5)
    with pytest.raises(ValueError):
        fam.family_hvector("onebox", k=4)
    with pytest.raises(ValueError):
        fam.family_hvector("nope", k=4)
    assert fam.family_diagram("veronese", n=4) == veronese(4)
