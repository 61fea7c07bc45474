"""Decision procedures for the monomial Noether problem over Q.

Each crystallographic case is either decided outright or reduced to one
of the rationality subproblems R, R1, R2, whose answers are square-class
conditions on the coefficients.  Since the base field is Q, -1 is never a
square, which removes several branches of the general statements.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .errors import SchemaMismatch, UnknownCase
from .squareclass import (
    Rational,
    _nonzero,
    in_minus4_fourth_powers,
    is_square,
    multiquadratic_degree,
    parse_rational,
)

AFFIRMATIVE = "affirmative"
NEGATIVE = "negative"

_EPS3 = ("e1", "e2", "e3")
_EPS33 = ("e12", "e13", "e21", "e23", "e31", "e32")

# group id -> (sign names, coefficient names)
SCHEMAS: dict[str, tuple[tuple[str, ...], tuple[str, ...]]] = {
    "3.4.2.2": ((), ("c",)),
    "3.1.2.1": ((), ("a1", "a2", "a3")),
    "3.4.2.1": ((), ("a", "c")),
    "3.2.3.1": (_EPS3, ("a", "b", "c")),
    "3.3.1.1": (_EPS3, ("a", "b", "c")),
    "3.4.3.1": (("e1", "e2"), ("a", "c")),
    "3.4.4.1": (("alpha", "e"), ("a", "c")),
    "3.3.3.1": (_EPS33, ("a", "b", "c")),
    "R": ((), ("a", "b", "c")),
    "R1": ((), ("a", "b", "c")),
    "R2": ((), ("a", "b", "c")),
}


@dataclass(frozen=True)
class ProblemInstance:
    group_id: str
    coefficients: Mapping[str, Fraction]
    signs: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.group_id not in SCHEMAS:
            raise UnknownCase(f"unknown group id {self.group_id!r}")
        sign_names, coeff_names = SCHEMAS[self.group_id]
        if set(self.signs) != set(sign_names):
            raise SchemaMismatch(
                f"group {self.group_id} takes signs {list(sign_names)}, got {sorted(self.signs)}"
            )
        if set(self.coefficients) != set(coeff_names):
            raise SchemaMismatch(
                f"group {self.group_id} takes coefficients {list(coeff_names)}, got {sorted(self.coefficients)}"
            )
        signs = {}
        for k, v in self.signs.items():
            v = int(str(v).replace("−", "-").lstrip("+"))
            if v not in (1, -1):
                raise SchemaMismatch(f"sign {k} must be +1 or -1, got {v}")
            signs[k] = v
        object.__setattr__(self, "signs", signs)
        object.__setattr__(
            self, "coefficients", {k: _nonzero(v) for k, v in self.coefficients.items()}
        )

    @classmethod
    def from_json(cls, obj: Mapping) -> "ProblemInstance":
        if not isinstance(obj, Mapping) or "group" not in obj:
            raise SchemaMismatch("problem instance needs a 'group' field")
        return cls(
            str(obj["group"]),
            dict(obj.get("coefficients", {})),
            dict(obj.get("signs", {})),
        )

    def to_json(self) -> dict:
        out = {"group": self.group_id}
        if self.signs:
            out["signs"] = dict(self.signs)
        out["coefficients"] = {k: str(v) for k, v in self.coefficients.items()}
        return out


@dataclass(frozen=True)
class Verdict:
    outcome: str
    reason: str
    chain: tuple[str, ...] = ()

    @property
    def affirmative(self) -> bool:
        return self.outcome == AFFIRMATIVE

    def to_json(self) -> dict:
        return {"outcome": self.outcome, "reason": self.reason, "chain": list(self.chain)}

    def prefixed(self, *steps: str) -> "Verdict":
        return Verdict(self.outcome, self.reason, tuple(steps) + self.chain)


def _fmt(q: Fraction) -> str:
    return str(q)


def _triple(name: str, a, b, c) -> str:
    return f"{name}({_fmt(a)},{_fmt(b)},{_fmt(c)})"


# ----------------------------------------------------------------------
# the subproblems


def decide_R(a: Rational, b: Rational, c: Rational) -> Verdict:
    """Affirmative iff one of a, b, c, ab, ac, bc is a square."""
    a, b, c = _nonzero(a), _nonzero(b), _nonzero(c)
    step = _triple("R", a, b, c)
    for label, v in (("a", a), ("b", b), ("c", c), ("ab", a * b), ("ac", a * c), ("bc", b * c)):
        if is_square(v):
            return Verdict(AFFIRMATIVE, f"R criterion: {label} = {_fmt(v)} is a square", (step,))
    return Verdict(NEGATIVE, "R criterion: none of a, b, c, ab, ac, bc is a square", (step,))


def _degree_verdict(qs, what: str, step: str) -> Verdict:
    d = multiquadratic_degree(qs)
    if d <= 4:
        return Verdict(AFFIRMATIVE, f"{what}: multiquadratic degree {d} <= 4", (step,))
    return Verdict(NEGATIVE, f"{what}: multiquadratic degree {d} > 4", (step,))


def decide_R1R2(variant: str, a: Rational, b: Rational, c: Rational) -> Verdict:
    if variant not in ("R1", "R2"):
        raise UnknownCase(f"variant must be R1 or R2, got {variant!r}")
    a, b, c = _nonzero(a), _nonzero(b), _nonzero(c)
    return _degree_verdict([a, b, c], f"{variant} criterion", _triple(variant, a, b, c))


# ----------------------------------------------------------------------
# the groups


def _g3422(s, k) -> Verdict:
    c = k["c"]
    step = f"(3,4,2,2) c={_fmt(c)}"
    if is_square(c):
        return Verdict(AFFIRMATIVE, "group (3,4,2,2): c is a square", (step,))
    if in_minus4_fourth_powers(c):
        return Verdict(AFFIRMATIVE, "group (3,4,2,2): c lies in -4 Q^4", (step,))
    return Verdict(NEGATIVE, "group (3,4,2,2): c is neither a square nor in -4 Q^4 (and -1 is not a square)", (step,))


def _g3121(s, k) -> Verdict:
    qs = [k["a1"], k["a2"], k["a3"]]
    return _degree_verdict(qs, "group (3,1,2,1)", "(3,1,2,1) degree of Q(sqrt a1, sqrt a2, sqrt a3)")


def _g3421(s, k) -> Verdict:
    return _degree_verdict([k["a"], -1, k["c"]], "group (3,4,2,1)", "(3,4,2,1) degree of Q(sqrt a, sqrt -1, sqrt c)")


def normalize_3231(e1: int, e2: int, a, b, c, via: str = "product"):
    """Move a mixed sign pair (e1, e2) to (-1, -1) by a monomial substitution.

    ``via="product"`` replaces the +1 variable by x1*x2; ``via="quotient"``
    replaces it by the quotient with the other variable.  The two give
    coefficients that differ by squares.  Returns (a', b', c', description).
    """
    if e1 == e2:
        return a, b, c, None
    if via not in ("product", "quotient"):
        raise ValueError(via)
    if e1 == -1:  # e2 = +1: substitute x2
        if via == "product":
            return a, a * b, c, "x2 -> x1*x2"
        return a, b / a, c, "x2 -> x2/x1"
    if via == "product":
        return a * b, b, c, "x1 -> x1*x2"
    return a / b, b, c, "x1 -> x1/x2"


def _g3231(s, k, via: str = "product") -> Verdict:
    e1, e2, e3 = s["e1"], s["e2"], s["e3"]
    a, b, c = k["a"], k["b"], k["c"]
    head = f"(3,2,3,1) signs ({e1},{e2},{e3})"
    if e3 == 1:
        return Verdict(AFFIRMATIVE, "group (3,2,3,1): e3 = 1 gives a rational fixed field", (head,))
    if e1 == e2 == 1:
        return Verdict(AFFIRMATIVE, "group (3,2,3,1): e1 = e2 = 1 gives a rational fixed field", (head,))
    a2, b2, c2, sub = normalize_3231(e1, e2, a, b, c, via)
    steps = [head]
    if sub:
        steps.append(f"substitute {sub}: signs (-1,-1,-1), coefficients ({_fmt(a2)},{_fmt(b2)},{_fmt(c2)})")
    return decide_R(a2, b2, c2).prefixed(*steps)


def _g3311(s, k) -> Verdict:
    e1, e2, e3 = s["e1"], s["e2"], s["e3"]
    a, b, c = k["a"], k["b"], k["c"]
    head = f"(3,3,1,1) signs ({e1},{e2},{e3})"
    minus = [e1, e2, e3].count(-1)
    if minus == 0:
        return decide_R(a, b, c).prefixed(head)
    if minus == 2:
        if e3 == 1:
            return decide_R(a, b, c).prefixed(head)
        if e2 == 1:
            return decide_R(-a, b, c).prefixed(head)
        return decide_R(a, -b, -c).prefixed(head)
    if minus == 1:
        return Verdict(AFFIRMATIVE, "group (3,3,1,1): exactly one sign is -1", (head,))

    # all signs -1
    for name, v, red in (
        ("a", a, (b, -1, c)),
        ("b", b, (a, -1, -c)),
        ("c", c, (a, -1, b)),
    ):
        if is_square(v) or is_square(-v):
            return decide_R(*red).prefixed(head, f"{name} is +-1 up to squares")
    for name, v, red in (
        ("ab", a * b, (a, c, -a * c)),
        ("-ac", -a * c, (-a, b, a * b)),
        ("bc", b * c, (-b, a, a * b)),
    ):
        if is_square(v):
            return decide_R(*red).prefixed(head, f"{name} is a square")
    named = [a, -a, b, -b, c, -c, a * b, -a * c, b * c]
    assert not any(is_square(v) for v in named), "(3,3,1,1) case split is not exhaustive"
    return Verdict(
        NEGATIVE,
        "group (3,3,1,1): all signs -1 and none of +-a, +-b, +-c, ab, -ac, bc is a square",
        (head,),
    )


def _g3431(s, k) -> Verdict:
    e1, e2 = s["e1"], s["e2"]
    a, c = k["a"], k["c"]
    head = f"(3,4,3,1) signs ({e1},{e2})"
    if e1 == 1 or e2 == 1:
        return Verdict(AFFIRMATIVE, "group (3,4,3,1): a sign equal to 1 gives a rational fixed field", (head,))
    return decide_R(a, -a, -c).prefixed(head)


def _g3441(s, k) -> Verdict:
    alpha, e = s["alpha"], s["e"]
    a, c = k["a"], k["c"]
    head = f"(3,4,4,1) alpha={alpha}, e={e}"
    if alpha == 1:
        return Verdict(AFFIRMATIVE, "group (3,4,4,1): alpha = 1 gives a rational fixed field", (head,))
    return decide_R(-1, -e * a, -c).prefixed(head)


def exceptional_3331(signs: Mapping[str, int]) -> str | None:
    """``"R2"`` for all signs -1, ``"R1"`` for one symmetric +1 pair, else None."""
    plus = {k for k in _EPS33 if signs[k] == 1}
    if not plus:
        return "R2"
    if plus in ({"e12", "e21"}, {"e13", "e31"}, {"e23", "e32"}):
        return "R1"
    return None


def _g3331(s, k) -> Verdict:
    pattern = ",".join(f"{n}={s[n]}" for n in _EPS33)
    head = f"(3,3,3,1) signs {pattern}"
    variant = exceptional_3331(s)
    if variant is None:
        return Verdict(AFFIRMATIVE, "group (3,3,3,1): sign pattern is not exceptional", (head,))
    return decide_R1R2(variant, k["a"], k["b"], k["c"]).prefixed(head)


_DISPATCH = {
    "3.4.2.2": _g3422,
    "3.1.2.1": _g3121,
    "3.4.2.1": _g3421,
    "3.2.3.1": _g3231,
    "3.3.1.1": _g3311,
    "3.4.3.1": _g3431,
    "3.4.4.1": _g3441,
    "3.3.3.1": _g3331,
}


def decide_group(p: ProblemInstance | Mapping) -> Verdict:
    if not isinstance(p, ProblemInstance):
        p = ProblemInstance.from_json(p)
    k = p.coefficients
    if p.group_id == "R":
        return decide_R(k["a"], k["b"], k["c"])
    if p.group_id in ("R1", "R2"):
        return decide_R1R2(p.group_id, k["a"], k["b"], k["c"])
    return _DISPATCH[p.group_id](p.signs, k)


def instance(group_id: str, signs: Mapping | None = None, **coefficients) -> ProblemInstance:
    """Keyword shorthand: ``instance("R", a=2, b=3, c=5)``."""
    return ProblemInstance(group_id, {k: parse_rational(v) for k, v in coefficients.items()}, dict(signs or {}))
