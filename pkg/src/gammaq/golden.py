"""Golden reference tables of spin Green polynomials for weights 3..7.

Entries are keyed (strict row shape, odd column shape) and stored as
ascending t-coefficient lists; the comment on each line is the factored
display form.  These are the published reference values the generated
tables must reproduce exactly.
"""

from __future__ import annotations

from .partitions import Partition
from .tpoly import TPoly

# fmt: off
GOLDEN_Y: dict[int, dict[tuple[Partition, Partition], list[int]]] = {
    3: {
        ((3,), (3,)): [1],
        ((2, 1), (3,)): [-2, 2],            # 2(t-1)
        ((3,), (1, 1, 1)): [1],
        ((2, 1), (1, 1, 1)): [1, 2],        # 2t+1
    },
    4: {
        ((4,), (3, 1)): [1],
        ((3, 1), (3, 1)): [-1, 2],          # 2t-1
        ((4,), (1, 1, 1, 1)): [1],
        ((3, 1), (1, 1, 1, 1)): [2, 2],     # 2(t+1)
    },
    5: {
        ((5,), (5,)): [1],
        ((4, 1), (5,)): [-2, 2],            # 2(t-1)
        ((3, 2), (5,)): [2, -4, 2],         # 2(t-1)^2
        ((5,), (3, 1, 1)): [1],
        ((4, 1), (3, 1, 1)): [0, 2],        # 2t
        ((3, 2), (3, 1, 1)): [-1, 0, 2],    # 2t^2-1
        ((5,), (1, 1, 1, 1, 1)): [1],
        ((4, 1), (1, 1, 1, 1, 1)): [3, 2],  # 2t+3
        ((3, 2), (1, 1, 1, 1, 1)): [2, 6, 2],  # 2(t^2+3t+1)
    },
    6: {
        ((6,), (5, 1)): [1],
        ((5, 1), (5, 1)): [-1, 2],          # 2t-1
        ((4, 2), (5, 1)): [0, -2, 2],       # 2t(t-1)
        ((3, 2, 1), (5, 1)): [2, 0, -2, -4, 4],   # 2(t-1)^2(2t^2+2t+1)
        ((6,), (3, 3)): [1],
        ((5, 1), (3, 3)): [-2, 2],          # 2(t-1)
        ((4, 2), (3, 3)): [2, -4, 2],       # 2(t-1)^2
        ((3, 2, 1), (3, 3)): [-4, 4, 4, -8, 4],   # 4(t-1)(t^3-t^2+1)
        ((6,), (3, 1, 1, 1)): [1],
        ((5, 1), (3, 1, 1, 1)): [1, 2],     # 2t+1
        ((4, 2), (3, 1, 1, 1)): [-1, 2, 2],  # 2t^2+2t-1
        ((3, 2, 1), (3, 1, 1, 1)): [-1, -2, -2, 4, 4],  # 4t^4+4t^3-2t^2-2t-1
        ((6,), (1, 1, 1, 1, 1, 1)): [1],
        ((5, 1), (1, 1, 1, 1, 1, 1)): [4, 2],  # 2(t+2)
        ((4, 2), (1, 1, 1, 1, 1, 1)): [5, 8, 2],  # 2t^2+8t+5
        ((3, 2, 1), (1, 1, 1, 1, 1, 1)): [2, 10, 28, 16, 4],  # 2(2t^4+8t^3+14t^2+5t+1)
    },
    7: {
        ((7,), (7,)): [1],
        ((6, 1), (7,)): [-2, 2],            # 2(t-1)
        ((5, 2), (7,)): [2, -4, 2],         # 2(t-1)^2
        ((4, 3), (7,)): [-2, 4, -4, 2],     # 2(t-1)(t^2-t+1)
        ((4, 2, 1), (7,)): [0, 0, 4, -8, 4],  # 4t^2(t-1)^2
        ((7,), (5, 1, 1)): [1],
        ((6, 1), (5, 1, 1)): [0, 2],        # 2t
        ((5, 2), (5, 1, 1)): [-1, 0, 2],    # 2t^2-1
        ((4, 3), (5, 1, 1)): [0, -2, 0, 2],  # 2t(t^2-1)
        ((4, 2, 1), (5, 1, 1)): [2, -2, -4, 0, 4],  # 2(t-1)(2t^3+2t^2-1)
        ((7,), (3, 3, 1)): [1],
        ((6, 1), (3, 3, 1)): [-1, 2],       # 2t-1
        ((5, 2), (3, 3, 1)): [0, -2, 2],    # 2t(t-1)
        ((4, 3), (3, 3, 1)): [2, 0, -2, 2],  # 2(t^3-t^2+1)
        ((4, 2, 1), (3, 3, 1)): [-2, 4, -2, -4, 4],  # 2(t-1)(2t^3-t+1)
        ((7,), (3, 1, 1, 1, 1)): [1],
        ((6, 1), (3, 1, 1, 1, 1)): [2, 2],  # 2t+2
        ((5, 2), (3, 1, 1, 1, 1)): [0, 4, 2],  # 2t(t+2)
        # Published cell reads 2t^3+4t-1, but the two-row closed form and
        # both other routes all give 2t^3+4t^2-1; kept corrected.
        ((4, 3), (3, 1, 1, 1, 1)): [-1, 0, 4, 2],  # 2t^3+4t^2-1
        ((4, 2, 1), (3, 1, 1, 1, 1)): [-2, -2, 4, 8, 4],  # 2(t+1)(2t^3+2t^2-1)
        ((7,), (1, 1, 1, 1, 1, 1, 1)): [1],
        ((6, 1), (1, 1, 1, 1, 1, 1, 1)): [5, 2],  # 2t+5
        ((5, 2), (1, 1, 1, 1, 1, 1, 1)): [9, 10, 2],  # 2t^2+10t+9
        ((4, 3), (1, 1, 1, 1, 1, 1, 1)): [5, 18, 10, 2],  # 2t^3+10t^2+18t+5
        ((4, 2, 1), (1, 1, 1, 1, 1, 1, 1)): [7, 28, 46, 20, 4],  # 4t^4+20t^3+46t^2+28t+7
    },
}
# fmt: on


def golden_y_polys(n: int) -> dict[tuple[Partition, Partition], TPoly]:
    """Golden table of weight n as TPoly values; n must be 3..7."""
    if n not in GOLDEN_Y:
        raise ValueError(f"no golden table for weight {n}")
    return {key: TPoly(coeffs) for key, coeffs in GOLDEN_Y[n].items()}
