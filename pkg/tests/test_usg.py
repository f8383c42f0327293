"""Tests for usl.usg."""

from pathlib import Path

import pytest
from hypothesis import given

from usl.config import Settings
from usl.constructions.groups import cyclic_group
from usl.constructions.named import named_semigroup
from usl.constructions.rees import ReesSpec, rees_matrix
from usl.semigroup import FiniteUnarySemigroup, StructureError
from usl.usg import UsgFormatError, usg_dumps, usg_loads, usg_read, usg_write

from .strategy_factory.factory import make_structure_strategy

TB = named_semigroup("tb")


class TestRoundTrip:
    @pytest.mark.parametrize("name", ["tb", "k3", "k3_double", "ta_matrices"])
    def test_named(self, name: str) -> None:
        s = named_semigroup(name)
        assert usg_loads(usg_dumps(s)) == s

    @given(make_structure_strategy())
    def test_generated(self, s: FiniteUnarySemigroup) -> None:
        assert usg_loads(usg_dumps(s)) == s

    def test_file(self, tmp_path: Path) -> None:
        path = tmp_path / "tb.usg"
        usg_write(TB, path)
        assert usg_read(path) == TB

    def test_markers(self) -> None:
        text = usg_dumps(TB)
        assert "zero 4\nidentity 5\n# (1,1)\n" in text
        assert text.endswith("# 1\n")

    def test_lazy_structures_are_tabulated(self) -> None:
        spec = ReesSpec(cyclic_group(2), [[0, 1], [1, 0]])
        lazy = rees_matrix(spec, Settings(tabulate_limit=1))
        with pytest.raises(StructureError):
            usg_dumps(lazy, Settings(tabulate_limit=1))
        assert usg_loads(usg_dumps(lazy)).size == 9  # noqa: PLR2004


class TestMalformed:
    """Rejected inputs name the offending line."""

    @pytest.mark.parametrize(
        ("text", "line"),
        [
            ("usg 2\nelements 1\nunary 0\n0\n", 1),
            ("usg 1\nelements x\nunary 0\n0\n", 2),
            ("usg 1\nelements 1\nunary 3\n0\n", 3),
            ("usg 1\nelements 2\nunary 0\n0 0\n0\n", 5),
            ("usg 1\nelements 1\nunary 0\n0\nfoo\n", 5),
            ("usg 1\nelements 1\nunary 0\n0\nzero 0\nzero 0\n", 6),
            ("usg 1\nelements 1\nunary 0\n\n\n0 y\n", 6),
            ("usg 1\nelements 1\nunary 0\n0\n# a\nzero 0\n", 6),
        ],
    )
    def test_line_numbers(self, text: str, line: int) -> None:
        with pytest.raises(UsgFormatError) as info:
            usg_loads(text)
        assert info.value.line == line

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "usg 1\nelements 0\nunary 0\n",
            "usg 1\nelements 2\nunary 0\n0 0\n",
            "usg 1\nelements 1\nunary 0\n1\n",
            "usg 1\nelements 2\nunary 0\n0 0\n0 0\n# a\n",
            "usg 1\nelements 1\nunary 0\n0\nidentity 3\n",
        ],
    )
    def test_rejected(self, text: str) -> None:
        with pytest.raises(UsgFormatError):
            usg_loads(text)

    def test_is_a_structure_error(self) -> None:
        with pytest.raises(StructureError):
            usg_loads("usg 1\n")

    def test_missing_file(self, tmp_path: Path) -> None:
        with pytest.raises(OSError):
            usg_read(tmp_path / "missing.usg")
