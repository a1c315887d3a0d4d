"""Integer linear forms over the profile variables.

Forms are written the way they are printed, e.g. ``"2chi - 3P3 + P8 + eta - 1"``,
and stored as ``{variable: coefficient}`` with ``""`` for the constant.
"""

from __future__ import annotations

import re
from typing import Dict, Iterable, Mapping, Tuple

VARIABLES = ("chi",) + tuple(f"P{m}" for m in range(2, 14)) + ("eta", "zeta", "alpha", "beta")

_TERM_RE = re.compile(r"([+-])?\s*(\d*)\s*(chi|P\d+|eta|zeta|alpha|beta)?")


class LinearForm(dict):
    """A sparse integer linear form; ``""`` keys the constant term."""

    @classmethod
    def parse(cls, text: str) -> "LinearForm":
        form = cls()
        s = text.replace("−", "-").replace(" ", "")
        if not s:
            raise ValueError("empty linear form")
        pos = 0
        while pos < len(s):
            m = _TERM_RE.match(s, pos)
            if not m or m.end() == pos or (not m.group(2) and not m.group(3)):
                raise ValueError(f"cannot parse linear form {text!r} at {s[pos:]!r}")
            sign = -1 if m.group(1) == "-" else 1
            coef = int(m.group(2)) if m.group(2) else 1
            var = m.group(3) or ""
            if var and var not in VARIABLES:
                raise ValueError(f"unknown variable {var!r} in {text!r}")
            form[var] = form.get(var, 0) + sign * coef
            pos = m.end()
        return form.normalized()

    def normalized(self) -> "LinearForm":
        return LinearForm({k: v for k, v in self.items() if v})

    def __add__(self, other: Mapping[str, int]) -> "LinearForm":
        out = LinearForm(self)
        for k, v in other.items():
            out[k] = out.get(k, 0) + v
        return out.normalized()

    def __sub__(self, other: Mapping[str, int]) -> "LinearForm":
        return self + {k: -v for k, v in other.items()}

    def __mul__(self, c: int) -> "LinearForm":
        return LinearForm({k: c * v for k, v in self.items()}).normalized()

    __rmul__ = __mul__

    def __call__(self, values: Mapping[str, int]) -> int:
        return sum(c * (values[k] if k else 1) for k, c in self.items())

    def __eq__(self, other) -> bool:
        if isinstance(other, Mapping):
            return dict(self.normalized()) == {k: v for k, v in other.items() if v}
        return NotImplemented

    __hash__ = None

    def __str__(self) -> str:
        if not self:
            return "0"
        parts = []
        for k in sorted(self, key=lambda k: (VARIABLES.index(k) if k else len(VARIABLES))):
            c = self[k]
            mag = abs(c)
            body = (str(mag) if mag != 1 or not k else "") + k
            parts.append(("- " if c < 0 else "+ ") + body)
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]


def lsum(forms: Iterable[Tuple[int, Mapping[str, int]]]) -> LinearForm:
    out = LinearForm()
    for c, f in forms:
        out = out + LinearForm(f) * c
    return out


def evaluate_all(forms: Mapping[str, LinearForm], values: Mapping[str, int]) -> Dict[str, int]:
    return {name: f(values) for name, f in forms.items()}
