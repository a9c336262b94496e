from __future__ import annotations

import pytest

from quiverkit import ROW_ZERO_BAR, RowLabel, VertexLabel


def vl(col: int, row: int | str) -> VertexLabel:
    """Shorthand: vl(3, '0bar') or vl(3, 2)."""
    if row == "0bar":
        return VertexLabel(col, ROW_ZERO_BAR)
    return VertexLabel(col, RowLabel(int(row)))


@pytest.fixture
def v():
    return vl
