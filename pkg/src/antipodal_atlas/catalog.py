"""Registry of irreducible compact-type symmetric spaces, one entry per reference table row."""

from __future__ import annotations

import ast
from dataclasses import dataclass, field
from fractions import Fraction as Q

from . import linalg, roots


class FormulaError(ValueError):
    """An expression did not evaluate to an exact integer."""


_BINOPS = {
    ast.Add: lambda a, b: a + b,
    ast.Sub: lambda a, b: a - b,
    ast.Mult: lambda a, b: a * b,
    ast.Div: lambda a, b: a / b,
}


def _eval_node(node: ast.expr, names: dict[str, Q]) -> Q:
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return Q(node.value)
    if isinstance(node, ast.Name):
        if node.id not in names:
            raise FormulaError(f"unbound symbol {node.id!r}")
        return names[node.id]
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        return -_eval_node(node.operand, names)
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        return _BINOPS[type(node.op)](
            _eval_node(node.left, names), _eval_node(node.right, names)
        )
    raise FormulaError(f"unsupported syntax in formula: {ast.dump(node)}")


def evaluate(expr: str, r: int | None = None, q: int | None = None) -> int:
    """Evaluate an integer-valued formula in r and q exactly."""
    names = {}
    if r is not None:
        names["r"] = Q(r)
    if q is not None:
        names["q"] = Q(q)
    try:
        tree = ast.parse(expr, mode="eval")
    except SyntaxError as exc:
        raise FormulaError(f"cannot parse formula {expr!r}") from exc
    value = _eval_node(tree.body, names)
    if value.denominator != 1:
        raise FormulaError(f"{expr!r} is not an integer at r={r}, q={q}")
    return int(value)


@dataclass(frozen=True)
class SpaceDescriptor:
    """One table row: a symmetric space family with its root data and quotient options."""

    name: str
    cartan_label: str
    table: int
    family: str
    rank_expr: str
    r_min: int
    r_max: int | None
    r_parity: str
    has_q: bool
    multiplicities: tuple[tuple[int, str], ...]
    dim_formula: str
    gamma_labels: tuple[str, ...]
    orbit_dim_formulas: tuple[str, ...]
    condition: str = ""
    aliases: tuple[str, ...] = ()

    @property
    def simply_connected(self) -> bool:
        return not self.gamma_labels

    @property
    def has_free_r(self) -> bool:
        return self.r_max is None or self.r_min != self.r_max

    def admits(self, r: int, q: int | None = None) -> bool:
        """Whether (r, q) lies in the row's declared parameter range."""
        if r < self.r_min:
            return False
        if self.r_max is not None and r > self.r_max:
            return False
        if self.r_parity == "even" and r % 2 != 0:
            return False
        if self.r_parity == "odd" and r % 2 != 1:
            return False
        if self.has_q:
            return q is not None and q >= 1
        return q is None

    def rank(self, r: int) -> int:
        return evaluate(self.rank_expr, r=r)

    def admissible_r(self, limit: int) -> list[int]:
        """All admissible r values up to limit, for sweep grids."""
        top = limit if self.r_max is None else min(limit, self.r_max)
        return [r for r in range(self.r_min, top + 1) if self.admits(r, 1 if self.has_q else None)]


def _mult(**classes: str) -> tuple[tuple[int, str], ...]:
    return tuple((int(key.removeprefix("len")), expr) for key, expr in classes.items())


def _row(
    name: str,
    cartan_label: str,
    table: int,
    family: str,
    rank_expr: str,
    *,
    r_min: int = 1,
    r_max: int | None = None,
    r_fixed: int | None = None,
    parity: str = "",
    q: bool = False,
    mult: tuple[tuple[int, str], ...],
    dim: str,
    gammas: tuple[str, ...] = (),
    orbit_dims: tuple[str, ...] = (),
    condition: str = "",
    aliases: tuple[str, ...] = (),
) -> SpaceDescriptor:
    if r_fixed is not None:
        r_min = r_max = r_fixed
    return SpaceDescriptor(
        name=name,
        cartan_label=cartan_label,
        table=table,
        family=family,
        rank_expr=rank_expr,
        r_min=r_min,
        r_max=r_max,
        r_parity=parity,
        has_q=q,
        multiplicities=mult,
        dim_formula=dim,
        gamma_labels=gammas,
        orbit_dim_formulas=orbit_dims,
        condition=condition,
        aliases=aliases,
    )


_M1 = _mult(len2="1")
_M2 = _mult(len2="2")
_M4 = _mult(len2="4")
_B_REAL = _mult(len1="q", len2="1")
_C_COMPLEX = _mult(len2="2", len4="1")
_BC_COMPLEX = _mult(len1="2*q", len2="2", len4="1")
_C_CI = _mult(len2="1", len4="1")
_C_QUAT = _mult(len2="4", len4="3")
_BC_QUAT = _mult(len1="4*q", len2="4", len4="3")
_C_DIII = _mult(len2="4", len4="1")
_BC_DIII = _mult(len1="4", len2="4", len4="1")
_D_REAL = _mult(len2="1")
_SPINOR_GAMMAS = ("{e,p_{r-1}}", "{e,p_r}")

_TABLE3 = (
    _row("SU(2r)/SO(2r)", "A I", 3, "a", "2*r-1", mult=_M1,
         dim="(2*r-1)*(r+1)", orbit_dims=("0",)),
    _row("SU(2r+1)/SO(2r+1)", "A I", 3, "a", "2*r", mult=_M1,
         dim="r*(2*r+3)", orbit_dims=("0", "0")),
    _row("SU(4r)/Sp(2r)", "A II", 3, "a", "2*r-1", mult=_M4,
         dim="(2*r-1)*(4*r+1)", orbit_dims=("0",)),
    _row("SU(4r+2)/Sp(2r+1)", "A II", 3, "a", "2*r", mult=_M4,
         dim="2*r*(4*r+3)", orbit_dims=("0", "0")),
    _row("Gr_{r,r+q}(C)", "A III", 3, "bc", "r", q=True, mult=_BC_COMPLEX,
         dim="2*r*(r+q)", orbit_dims=("2*q*r",)),
    _row("Gr_{r,r}(C)", "A III", 3, "c", "r", r_min=2, mult=_C_COMPLEX,
         dim="2*r*r", orbit_dims=("0",), condition="r >= 2",
         aliases=("Gr_{r,2r}(C)",)),
    _row("Sp(r)/U(r)", "C I", 3, "c", "r", r_min=2, mult=_C_CI,
         dim="r*(r+1)", orbit_dims=("0",)),
    _row("Gr_{r,r+q}(H)", "C II", 3, "bc", "r", q=True, mult=_BC_QUAT,
         dim="4*r*(r+q)", orbit_dims=("4*q*r",)),
    _row("Gr_{r,2r}(H)", "C II", 3, "c", "r", r_min=2, mult=_C_QUAT,
         dim="4*r*r", orbit_dims=("0",), condition="r >= 2",
         aliases=("Gr_{r,r}(H)",)),
    _row("Gr_{r,r+q}", "BD I", 3, "b", "r", r_min=2, r_max=3, q=True, mult=_B_REAL,
         dim="r*(r+q)", orbit_dims=("0",), condition="r = 2, 3",
         aliases=("Gr_{r,r+q}(R)",)),
    _row("Gr_{4,4+q}", "BD I", 3, "b", "r", r_fixed=4, q=True, mult=_B_REAL,
         dim="r*(r+q)", orbit_dims=("0", "4*q")),
    _row("Gr_{r,r+q}", "BD I", 3, "b", "r", r_min=5, q=True, mult=_B_REAL,
         dim="r*(r+q)", orbit_dims=("r*q",), condition="r >= 5",
         aliases=("Gr_{r,r+q}(R)",)),
    _row("Gr_{1,1+q}", "BD I", 3, "a", "r", r_fixed=1, q=True, mult=_mult(len2="q"),
         dim="r*(r+q)", orbit_dims=("0",)),
    _row("Gr_{4,8}", "BD I", 3, "d", "r", r_fixed=4, mult=_D_REAL,
         dim="r*r", orbit_dims=("0", "0", "0"), aliases=("Gr_{4,4}",)),
    _row("Gr_{r,2r}", "BD I", 3, "d", "r", r_min=5, mult=_D_REAL,
         dim="r*r", orbit_dims=("0", "0"), condition="r >= 5",
         aliases=("Gr_{r,r}",)),
    _row("SO(4r)/U(2r)", "D III", 3, "c", "r", r_min=2, mult=_C_DIII,
         dim="2*r*(2*r-1)", orbit_dims=("0",)),
    _row("SO(4r+2)/U(2r+1)", "D III", 3, "bc", "r", mult=_BC_DIII,
         dim="2*r*(2*r+1)", orbit_dims=("4*r",)),
    _row("E I", "E I", 3, "e6", "r", r_fixed=6, mult=_M1,
         dim="42", orbit_dims=("0", "0")),
    _row("E II", "E II", 3, "f4", "r", r_fixed=4, mult=_mult(len1="2", len2="1"),
         dim="40", orbit_dims=("16",)),
    _row("E III", "E III", 3, "bc", "r", r_fixed=2, mult=_mult(len1="8", len2="6", len4="1"),
         dim="32", orbit_dims=("16",)),
    _row("E IV", "E IV", 3, "a", "r", r_fixed=2, mult=_mult(len2="8"),
         dim="26", orbit_dims=("0", "0")),
    _row("E V", "E V", 3, "e7", "r", r_fixed=7, mult=_M1,
         dim="70", orbit_dims=("0",)),
    _row("E VI", "E VI", 3, "f4", "r", r_fixed=4, mult=_mult(len1="4", len2="1"),
         dim="64", orbit_dims=("32",)),
    _row("E VII", "E VII", 3, "c", "r", r_fixed=3, mult=_mult(len2="8", len4="1"),
         dim="54", orbit_dims=("0",)),
    _row("E VIII", "E VIII", 3, "e8", "r", r_fixed=8, mult=_M1,
         dim="128", orbit_dims=("64",)),
    _row("E IX", "E IX", 3, "f4", "r", r_fixed=4, mult=_mult(len1="8", len2="1"),
         dim="112", orbit_dims=("64",)),
    _row("F I", "F I", 3, "f4", "r", r_fixed=4, mult=_mult(len1="1", len2="1"),
         dim="28", orbit_dims=("8",)),
    _row("F II", "F II", 3, "bc", "r", r_fixed=1, mult=_mult(len1="8", len4="7"),
         dim="16", orbit_dims=("8",)),
    _row("G", "G", 3, "g2", "r", r_fixed=2, mult=_mult(len2="1", len6="1"),
         dim="8", orbit_dims=("3",)),
)

_TABLE4 = (
    _row("SU(2r+2)/SO(2r+2)", "A I", 4, "a", "2*r+1", parity="odd", mult=_M1,
         dim="(2*r+1)*(r+2)", gammas=("Z_2",), orbit_dims=("0",),
         condition="(r+1)/2 even"),
    _row("SU(2r+2)/SO(2r+2)", "A I", 4, "a", "2*r+1", r_min=2, parity="even", mult=_M1,
         dim="(2*r+1)*(r+2)", gammas=("Z_2",), orbit_dims=("2*r+1",),
         condition="(r+1)/2 odd"),
    _row("SU(r+1)/SO(r+1)", "A I", 4, "a", "r", mult=_M1,
         dim="r*(r+3)/2", gammas=("Z_{r+1}",), orbit_dims=("r*(r+1)/2",)),
    _row("SU(r+1)/SO(r+1)", "A I", 4, "a", "r", r_min=5, mult=_M1,
         dim="r*(r+3)/2", gammas=("otherwise",), orbit_dims=(),
         condition="otherwise"),
    _row("SU(4r+4)/Sp(2r+2)", "A II", 4, "a", "2*r+1", parity="odd", mult=_M4,
         dim="(2*r+1)*(4*r+5)", gammas=("Z_2",), orbit_dims=("0",),
         condition="(r+1)/2 even"),
    _row("SU(4r+4)/Sp(2r+2)", "A II", 4, "a", "2*r+1", r_min=2, parity="even", mult=_M4,
         dim="(2*r+1)*(4*r+5)", gammas=("Z_2",), orbit_dims=("8*r+4",),
         condition="(r+1)/2 odd"),
    _row("SU(2r+2)/Sp(r+1)", "A II", 4, "a", "r", mult=_M4,
         dim="r*(2*r+3)", gammas=("Z_{r+1}",), orbit_dims=("2*r*(r+1)",)),
    _row("SU(2r+2)/Sp(r+1)", "A II", 4, "a", "r", r_min=5, mult=_M4,
         dim="r*(2*r+3)", gammas=("otherwise",), orbit_dims=(),
         condition="otherwise"),
    _row("Gr_{r,r}(C)", "A III", 4, "c", "r", r_min=2, parity="even", mult=_C_COMPLEX,
         dim="2*r*r", gammas=("Z_2",), orbit_dims=("r*r",),
         condition="r even", aliases=("Gr_{r,2r}(C)",)),
    _row("Gr_{r,r}(C)", "A III", 4, "c", "r", r_min=3, parity="odd", mult=_C_COMPLEX,
         dim="2*r*r", gammas=("Z_2",), orbit_dims=("r*r+2*r-2",),
         condition="r odd", aliases=("Gr_{r,2r}(C)",)),
    _row("Sp(r)/U(r)", "C I", 4, "c", "r", r_min=2, parity="even", mult=_C_CI,
         dim="r*(r+1)", gammas=("Z_2",), orbit_dims=("r*r/2",),
         condition="r even"),
    _row("Sp(r)/U(r)", "C I", 4, "c", "r", r_min=3, parity="odd", mult=_C_CI,
         dim="r*(r+1)", gammas=("Z_2",), orbit_dims=("(r*r+2*r-1)/2",),
         condition="r odd"),
    _row("Gr_{r,r}(H)", "C II", 4, "c", "r", r_min=2, parity="even", mult=_C_QUAT,
         dim="4*r*r", gammas=("Z_2",), orbit_dims=("2*r*r",),
         condition="r even", aliases=("Gr_{r,2r}(H)",)),
    _row("Gr_{r,r}(H)", "C II", 4, "c", "r", r_min=3, parity="odd", mult=_C_QUAT,
         dim="4*r*r", gammas=("Z_2",), orbit_dims=("2*r*r+4*r-3",),
         condition="r odd", aliases=("Gr_{r,2r}(H)",)),
    _row("Gr_{r,r+q}", "BD I", 4, "b", "r", r_min=2, q=True, mult=_B_REAL,
         dim="r*(r+q)", gammas=("Z_2",), orbit_dims=("r*q",),
         condition="r >= 2", aliases=("Gr_{r,r+q}(R)",)),
    _row("Gr_{r,r}", "BD I", 4, "d", "r", r_min=4, parity="even", mult=_D_REAL,
         dim="r*r", gammas=("Z_2+Z_2",), orbit_dims=("r*r/2",),
         condition="r even", aliases=("Gr_{r,2r}",)),
    _row("Gr_{r,r}", "BD I", 4, "d", "r", r_min=5, parity="odd", mult=_D_REAL,
         dim="r*r", gammas=("Z_4",), orbit_dims=("(r*r+2*r-3)/2",),
         condition="r odd", aliases=("Gr_{r,2r}",)),
    _row("Gr_{r,r}", "BD I", 4, "d", "r", r_min=4, parity="even", mult=_D_REAL,
         dim="r*r", gammas=("{e,p_1}",), orbit_dims=("0", "0"),
         condition="r even", aliases=("Gr_{r,2r}",)),
    _row("Gr_{r,r}", "BD I", 4, "d", "r", r_min=4, r_max=6, parity="even", mult=_D_REAL,
         dim="r*r", gammas=_SPINOR_GAMMAS, orbit_dims=("0",),
         condition="r = 4, 6", aliases=("Gr_{r,2r}",)),
    _row("Gr_{8,8}", "BD I", 4, "d", "r", r_fixed=8, mult=_D_REAL,
         dim="r*r", gammas=_SPINOR_GAMMAS, orbit_dims=("0", "r*r/2"),
         aliases=("Gr_{8,16}",)),
    _row("Gr_{r,r}", "BD I", 4, "d", "r", r_min=10, parity="even", mult=_D_REAL,
         dim="r*r", gammas=_SPINOR_GAMMAS, orbit_dims=("r*r/2",),
         condition="r >= 10 even", aliases=("Gr_{r,2r}",)),
    _row("SO(4r)/U(2r)", "D III", 4, "c", "r", r_min=2, parity="even", mult=_C_DIII,
         dim="2*r*(2*r-1)", gammas=("Z_2",), orbit_dims=("2*r*r",),
         condition="r even"),
    _row("SO(4r)/U(2r)", "D III", 4, "c", "r", r_min=3, parity="odd", mult=_C_DIII,
         dim="2*r*(2*r-1)", gammas=("Z_2",), orbit_dims=("2*r*r+4*r-5",),
         condition="r odd"),
    _row("E I", "E I", 4, "e6", "r", r_fixed=6, mult=_M1,
         dim="42", gammas=("Z_3",), orbit_dims=("27",)),
    _row("E IV", "E IV", 4, "a", "r", r_fixed=2, mult=_mult(len2="8"),
         dim="26", gammas=("Z_3",), orbit_dims=("24",)),
    _row("E V", "E V", 4, "e7", "r", r_fixed=7, mult=_M1,
         dim="70", gammas=("Z_2",), orbit_dims=("35",)),
    _row("E VII", "E VII", 4, "c", "r", r_fixed=3, mult=_mult(len2="8", len4="1"),
         dim="54", gammas=("Z_2",), orbit_dims=("49",)),
)

_TABLE5 = (
    _row("SU(2r)", "SU(2r)", 5, "a", "2*r-1", mult=_M2,
         dim="4*r*r-1", orbit_dims=("0",)),
    _row("SU(2r+1)", "SU(2r+1)", 5, "a", "2*r", mult=_M2,
         dim="4*r*(r+1)", orbit_dims=("0", "0")),
    _row("Spin(2r+1)", "Spin(2r+1)", 5, "b", "r", r_min=2, r_max=3,
         mult=_mult(len1="2", len2="2"), dim="r*(2*r+1)", orbit_dims=("0",),
         condition="r = 2, 3"),
    _row("Spin(9)", "Spin(9)", 5, "b", "r", r_fixed=4,
         mult=_mult(len1="2", len2="2"), dim="r*(2*r+1)", orbit_dims=("0", "8")),
    _row("Spin(2r+1)", "Spin(2r+1)", 5, "b", "r", r_min=5,
         mult=_mult(len1="2", len2="2"), dim="r*(2*r+1)", orbit_dims=("2*r",),
         condition="r > 4"),
    _row("Sp(r)", "Sp(r)", 5, "c", "r", r_min=2, mult=_mult(len2="2", len4="2"),
         dim="r*(2*r+1)", orbit_dims=("0",)),
    _row("Spin(8)", "Spin(8)", 5, "d", "r", r_fixed=4, mult=_M2,
         dim="r*(2*r-1)", orbit_dims=("0", "0", "0")),
    _row("Spin(2r)", "Spin(2r)", 5, "d", "r", r_min=5, mult=_M2,
         dim="r*(2*r-1)", orbit_dims=("0", "0"), condition="r >= 5"),
    _row("E6", "E6", 5, "e6", "r", r_fixed=6, mult=_M2,
         dim="78", orbit_dims=("0", "0")),
    _row("E7", "E7", 5, "e7", "r", r_fixed=7, mult=_M2,
         dim="133", orbit_dims=("0",)),
    _row("E8", "E8", 5, "e8", "r", r_fixed=8, mult=_M2,
         dim="248", orbit_dims=("128",)),
    _row("F4", "F4", 5, "f4", "r", r_fixed=4, mult=_mult(len1="2", len2="2"),
         dim="52", orbit_dims=("16",)),
    _row("G2", "G2", 5, "g2", "r", r_fixed=2, mult=_mult(len2="2", len6="2"),
         dim="14", orbit_dims=("6",)),
)

_TABLE6 = (
    _row("SU(2r+2)", "SU(2r+2)", 6, "a", "2*r+1", r_min=2, parity="even", mult=_M2,
         dim="(2*r+1)*(2*r+3)", gammas=("Z_2",), orbit_dims=("4*r+2",),
         condition="(r+1)/2 odd"),
    _row("SU(r+1)", "SU(r+1)", 6, "a", "r", mult=_M2,
         dim="r*(r+2)", gammas=("Z_{r+1}",), orbit_dims=("r*(r+1)",)),
    _row("SU(r+1)", "SU(r+1)", 6, "a", "r", r_min=5, mult=_M2,
         dim="r*(r+2)", gammas=("otherwise",), orbit_dims=(),
         condition="otherwise"),
    _row("Spin(2r+1)", "Spin(2r+1)", 6, "b", "r", r_min=2,
         mult=_mult(len1="2", len2="2"), dim="r*(2*r+1)",
         gammas=("Z_2",), orbit_dims=("2*r",)),
    _row("Sp(r)", "Sp(r)", 6, "c", "r", r_min=2, parity="even",
         mult=_mult(len2="2", len4="2"), dim="r*(2*r+1)",
         gammas=("Z_2",), orbit_dims=("r*r",), condition="r even"),
    _row("Sp(r)", "Sp(r)", 6, "c", "r", r_min=3, parity="odd",
         mult=_mult(len2="2", len4="2"), dim="r*(2*r+1)",
         gammas=("Z_2",), orbit_dims=("r*r+2*r-1",), condition="r odd"),
    _row("Spin(2r)", "Spin(2r)", 6, "d", "r", r_min=4, parity="even", mult=_M2,
         dim="r*(2*r-1)", gammas=("Z_2+Z_2",), orbit_dims=("r*r",),
         condition="r even"),
    _row("Spin(2r)", "Spin(2r)", 6, "d", "r", r_min=5, parity="odd", mult=_M2,
         dim="r*(2*r-1)", gammas=("Z_4",), orbit_dims=("r*r+2*r-3",),
         condition="r odd"),
    _row("Spin(2r)", "Spin(2r)", 6, "d", "r", r_min=4, parity="even", mult=_M2,
         dim="r*(2*r-1)", gammas=("{e,p_1}",), orbit_dims=("0", "0"),
         condition="r even"),
    _row("Spin(2r)", "Spin(2r)", 6, "d", "r", r_min=4, r_max=6, parity="even", mult=_M2,
         dim="r*(2*r-1)", gammas=_SPINOR_GAMMAS, orbit_dims=("0",),
         condition="r = 4, 6"),
    _row("Spin(16)", "Spin(16)", 6, "d", "r", r_fixed=8, mult=_M2,
         dim="r*(2*r-1)", gammas=_SPINOR_GAMMAS, orbit_dims=("0", "64")),
    _row("Spin(2r)", "Spin(2r)", 6, "d", "r", r_min=10, parity="even", mult=_M2,
         dim="r*(2*r-1)", gammas=_SPINOR_GAMMAS, orbit_dims=("r*r",),
         condition="r >= 10 even"),
    _row("E6", "E6", 6, "e6", "r", r_fixed=6, mult=_M2,
         dim="78", gammas=("Z_3",), orbit_dims=("54",)),
    _row("E7", "E7", 6, "e7", "r", r_fixed=7, mult=_M2,
         dim="133", gammas=("Z_2",), orbit_dims=("70",)),
)

_ALL = _TABLE3 + _TABLE4 + _TABLE5 + _TABLE6


def spaces() -> tuple[SpaceDescriptor, ...]:
    """Every catalogued table row, in table order."""
    return _ALL


def _canonical_name(text: str) -> str:
    out = text.lower()
    for junk in ("{", "}", "_", " ", "\\"):
        out = out.replace(junk, "")
    return out


def find_spaces(name: str) -> list[SpaceDescriptor]:
    """All rows whose display name, alias, or classification label matches."""
    key = _canonical_name(name)
    hits = []
    for row in _ALL:
        names = (row.name, row.cartan_label, *row.aliases)
        if any(_canonical_name(n) == key for n in names):
            hits.append(row)
    return hits


def multiplicity(space: SpaceDescriptor, root: roots.Root,
                 r: int | None = None, q: int | None = None) -> int:
    """Root multiplicity, keyed by the root's squared length in the unit-scale realization."""
    key_q = linalg.dot(root.vector, root.vector)
    if key_q.denominator != 1:
        raise ValueError(f"root {root.vector} has non-integral squared length {key_q}")
    key = int(key_q)
    for length, expr in space.multiplicities:
        if length == key:
            value = evaluate(expr, r=r, q=q)
            if value <= 0:
                raise FormulaError(f"multiplicity {expr!r} is not positive at r={r}, q={q}")
            return value
    raise ValueError(f"no multiplicity class of squared length {key} in {space.name}")


def dim_space(space: SpaceDescriptor, r: int, q: int | None = None) -> int:
    """Dimension of the space at the given parameters, from the catalogued formula."""
    if not space.admits(r, q):
        raise ValueError(f"parameters r={r}, q={q} out of range for {space.name}")
    return evaluate(space.dim_formula, r=r, q=q)
