"""Reference worked examples, kept as ANF strings."""
from __future__ import annotations

from .gbf import GeneralizedBooleanFunction, compose_components, parse_function
from .transforms import Block, RootSpec

N = 4

# blocks {x1, x3} -> zeta_4 and {x2, x4} -> zeta_8
EXAMPLE_SPEC = RootSpec(N, (Block((0, 2), 4), Block((1, 3), 8)))
EXAMPLE_SPEC_SWAPPED = RootSpec(N, (Block((0, 2), 8), Block((1, 3), 4)))

ROOT_BENT_COMPONENTS = (
    "x1*x2 + x2*x3 + x2*x4 + x1*x4 + x3*x4",
    "x1*x2 + x1*x3 + x3*x4",
)

# LA-complementary pair: f = F_LOW + 2 f1 with f1 from the first table,
# g = G_LOW + 2 g1 with g1 from the second
F_LOW = "x1 + x2 + x3 + x4"
G_LOW = "x1*x2 + x3 + x4 + x1*x4"

F_TABLE = (
    "x1 x2+x3 x2+x1 x4+x3 x4+x4",
    "x1 x2+x3+x1 x4+x4",
    "x1 x2+x3 x2+x3+x1 x4+x3 x4+x4",
    "x1+x2 x3+x3 x4+x4",
    "x2 x1+x4 x1+x1+x2 x3+x3 x4+x4",
    "x2 x1+x4 x1+x1+x3+x4",
    "x2 x1+x4 x1+x1+x2 x3+x3+x3 x4+x4",
    "x1+x2+x2 x3+x3 x4",
    "x2 x1+x4 x1+x1+x2+x2 x3+x3 x4",
    "x1+x2+x2 x3+x3+x3 x4",
    "x2 x1+x4 x1+x1+x2+x3",
    "x2 x1+x4 x1+x1+x2+x2 x3+x3+x3 x4",
)

G_TABLE = (
    "x1 x2+x1 x3 x2+x3 x2+x1 x3+x1 x4+x1 x3 x4",
    "x1 x2+x1 x3 x2+x4 x2+x1 x3+x1 x4+x1 x3 x4+x3 x4+x4",
    "x1 x2+x1 x3 x2+x3 x2+x1 x3+x3+x1 x4+x1 x3 x4",
    "x1 x2+x1 x3 x2+x4 x2+x1 x3+x3+x1 x4+x1 x3 x4+x3 x4+x4",
    "x2 x1+x2 x3 x1+x3 x1+x3 x4 x1+x4 x1+x1+x2 x3",
    "x2 x1+x2 x3 x1+x3 x1+x3 x4 x1+x4 x1+x1+x2 x4+x3 x4+x4",
    "x2 x1+x2 x3 x1+x3 x1+x3 x4 x1+x4 x1+x1+x2 x3+x3",
    "x2 x1+x2 x3 x1+x3 x1+x3 x4 x1+x4 x1+x1+x3+x2 x4+x3 x4+x4",
    "x2 x3 x1+x3 x1+x3 x4 x1+x1+x2+x2 x4+x3 x4",
    "x2 x1+x2 x3 x1+x3 x1+x3 x4 x1+x4 x1+x1+x2+x2 x4+x3 x4",
    "x2 x3 x1+x3 x1+x3 x4 x1+x1+x2+x2 x3+x4",
    "x2 x1+x2 x3 x1+x3 x1+x3 x4 x1+x4 x1+x1+x2+x2 x3+x4",
    "x2 x3 x1+x3 x1+x3 x4 x1+x1+x2+x3+x2 x4+x3 x4",
    "x2 x1+x2 x3 x1+x3 x1+x3 x4 x1+x4 x1+x1+x2+x3+x2 x4+x3 x4",
    "x2 x3 x1+x3 x1+x3 x4 x1+x1+x2+x2 x3+x3+x4",
    "x2 x1+x2 x3 x1+x3 x1+x3 x4 x1+x4 x1+x1+x2+x2 x3+x3+x4",
)


def root_bent_example() -> GeneralizedBooleanFunction:
    return compose_components([parse_function(a, N) for a in ROOT_BENT_COMPONENTS])


def lift_with_low(low: str, high: str) -> GeneralizedBooleanFunction:
    """low + 2 high over Z_4."""
    return compose_components([parse_function(low, N), parse_function(high, N)])


def f_functions(table=F_TABLE) -> list[GeneralizedBooleanFunction]:
    return [lift_with_low(F_LOW, t) for t in table]


def g_functions(table=G_TABLE) -> list[GeneralizedBooleanFunction]:
    return [lift_with_low(G_LOW, t) for t in table]
