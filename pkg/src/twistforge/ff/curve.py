"""The superelliptic curves y^p = x^m (a - x)^k and y^p = x^m (x + a)."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from sympy import isprime

from ..errors import BadReductionError, SemanticError


class Form(str, Enum):
    MINUS = "minus"  # y^p = x^m (a - x)^k
    PLUS = "plus"  # y^p = x^m (x + a)


@dataclass(frozen=True)
class SuperCurve:
    p: int
    m: int
    k: int
    a: int
    form: Form = Form.MINUS

    def __post_init__(self):
        object.__setattr__(self, "form", Form(self.form))
        if not (self.p > 2 and isprime(self.p)):
            raise SemanticError("odd-prime-p", f"p must be an odd prime, got {self.p}")
        if self.a == 0:
            raise SemanticError("nonzero-a", "a must be nonzero")
        if self.m < 1 or self.k < 1:
            raise SemanticError("positive-exponents", f"m and k must be positive, got m={self.m}, k={self.k}")
        if self.form is Form.PLUS:
            if self.k != 1:
                raise SemanticError("plus-k", f"the plus form has k = 1, got k={self.k}")
            # m = p-1 would make x^m (x + a) of degree p and the genus collapse
            if self.m > self.p - 2:
                raise SemanticError("plus-m-range", f"need 0 < m <= p-2 for the plus form, got m={self.m}")
        elif self.m + self.k >= self.p:
            raise SemanticError("m+k<p", f"need m + k < p, got m={self.m}, k={self.k}, p={self.p}")

    @property
    def genus(self) -> int:
        return (self.p - 1) // 2

    def to_minus(self) -> "SuperCurve":
        """Isomorphic model in MINUS form.

        x -> -x turns x^m (x + a) into (-1)^m x^m (a - x), and (-1)^m is a p-th
        power, so y^p = x^m (x + a) is isomorphic to y^p = x^m (a - x).
        """
        if self.form is Form.MINUS:
            return self
        return SuperCurve(self.p, self.m, 1, self.a, Form.MINUS)

    def has_good_reduction(self, l: int) -> bool:
        return isprime(l) and l != self.p and self.a % l != 0

    def require_good_reduction(self, l: int) -> None:
        if not isprime(l):
            raise BadReductionError(f"{l} is not prime")
        if not self.has_good_reduction(l):
            raise BadReductionError(f"l = {l} is a prime of bad reduction for {self}")

    def equation(self) -> str:
        xm = "x" if self.m == 1 else f"x^{self.m}"
        if self.form is Form.PLUS:
            return f"y^{self.p} = {xm}*(x + {self.a})"
        tail = "" if self.k == 1 else f"^{self.k}"
        return f"y^{self.p} = {xm}*({self.a} - x){tail}"

    def __str__(self) -> str:
        return self.equation()

    def to_dict(self) -> dict:
        return {"p": self.p, "m": self.m, "k": self.k, "a": self.a, "form": self.form.value}
