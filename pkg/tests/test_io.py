import json

import numpy as np
import pytest

from funcalg.io import (
    dump_json,
    format_complex,
    matrix_to_csv,
    parse_coeff_list,
    parse_complex,
    parse_fourier_map,
    parse_symbol_expression,
)


class TestComplexCells:
    def test_format_basic(self):
        assert format_complex(1 + 2j) == "1+2i"
        assert format_complex(1 - 2j) == "1-2i"
        assert format_complex(0.5 + 0j) == "0.5+0i"

    def test_round_trip_random(self):
        rng = np.random.default_rng(0)
        for _ in range(100):
            c = complex(rng.standard_normal(), rng.standard_normal()) * 10.0 ** rng.integers(-8, 9)
            assert parse_complex(format_complex(c)) == c

    def test_parse_plain_real(self):
        assert parse_complex("3.5") == 3.5

    def test_parse_j_form(self):
        assert parse_complex("1+2j") == 1 + 2j


class TestMatrixCsv:
    def test_shape_and_round_trip(self):
        mat = np.array([[1 + 1j, 2], [0, -3j]])
        text = matrix_to_csv(mat)
        rows = [line.split(",") for line in text.strip().split("\n")]
        back = np.array([[parse_complex(c) for c in row] for row in rows])
        np.testing.assert_array_equal(back, mat)

    def test_deterministic(self):
        mat = np.array([[np.pi, np.e], [1 / 3, 2 / 7]], dtype=complex)
        assert matrix_to_csv(mat) == matrix_to_csv(mat.copy())


class TestDumpJson:
    def test_sorted_and_stable(self):
        a = dump_json({"b": 1, "a": 2})
        b = dump_json({"a": 2, "b": 1})
        assert a == b
        assert json.loads(a) == {"a": 2, "b": 1}

    def test_numpy_scalars(self):
        rec = json.loads(dump_json({"x": np.float64(1.5), "n": np.int64(3),
                                    "f": np.bool_(True), "v": np.arange(3)}))
        assert rec == {"x": 1.5, "n": 3, "f": True, "v": [0, 1, 2]}

    def test_complex_serialized_as_cell(self):
        rec = json.loads(dump_json({"c": 1 + 2j}))
        assert rec["c"] == "1+2i"


class TestSymbolParser:
    def test_z_and_conj(self):
        f = parse_symbol_expression("z + 2*conj(z)")
        z = np.array([1j, 0.5])
        np.testing.assert_allclose(f(z), z + 2 * np.conj(z))

    def test_modulus_squared(self):
        f = parse_symbol_expression("|z|^2")
        z = np.array([0.3 + 0.4j])
        np.testing.assert_allclose(f(z), [0.25])

    def test_caret_power(self):
        f = parse_symbol_expression("z^3")
        np.testing.assert_allclose(f(np.array([2.0])), [8.0])

    def test_constant_broadcasts(self):
        f = parse_symbol_expression("1")
        out = f(np.zeros((2, 3), dtype=complex))
        assert out.shape == (2, 3)

    def test_rejects_unknown_names(self):
        with pytest.raises(ValueError):
            parse_symbol_expression("__import__('os')")
        with pytest.raises(ValueError):
            parse_symbol_expression("exp(z)")


class TestSmallParsers:
    def test_coeff_list(self):
        np.testing.assert_array_equal(parse_coeff_list("1, 2+1i, -3"),
                                      [1, 2 + 1j, -3])

    def test_fourier_map(self):
        out = parse_fourier_map("0:1, 1:2+1i, -1:3")
        assert out == {0: 1, 1: 2 + 1j, -1: 3}
