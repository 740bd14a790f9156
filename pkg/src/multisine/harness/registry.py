"""Identity definitions, the built-in registry and the identity-file loader.

File format (UTF-8, one identity per line)::

    # comment
    identity <name>: <lhs> == <rhs> [digits=<n>] [tags=a,b]
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import FrozenSet, Iterable, List, Optional

from ..errors import MultisineError
from .expr import Expr, parse

EXTRAPOLATED_DIGITS = 8


class IdentityFileError(MultisineError):
    def __init__(self, message: str, line: int = 0, path: str = ""):
        self.line = line
        self.path = path
        where = f"{path}:{line}: " if line else (f"{path}: " if path else "")
        super().__init__(f"{where}{message}")


@dataclass(frozen=True)
class IdentitySpec:
    """``lhs == rhs`` to ``required_digits`` (``None``: the requested digits)."""

    name: str
    lhs: Expr
    rhs: Expr
    required_digits: Optional[int] = None
    tags: FrozenSet[str] = frozenset()
    lhs_text: str = field(default="", compare=False)
    rhs_text: str = field(default="", compare=False)
    source: str = field(default="", compare=False)

    def __post_init__(self):
        if self.required_digits is not None and self.required_digits < 6:
            raise ValueError(f"{self.name}: required_digits must be >= 6")

    @classmethod
    def from_text(cls, name: str, lhs: str, rhs: str, required_digits: Optional[int] = None,
                  tags: Iterable[str] = (), source: str = "") -> "IdentitySpec":
        return cls(name, parse(lhs), parse(rhs), required_digits, frozenset(tags),
                   lhs.strip(), rhs.strip(), source)

    def swapped(self) -> "IdentitySpec":
        return IdentitySpec(self.name, self.rhs, self.lhs, self.required_digits, self.tags,
                            self.rhs_text, self.lhs_text, self.source)


# name, lhs, rhs, tags, where the identity comes from
_BUILTIN = [
    ("hu_kim_zeta3",
     "zeta3", "(4*pi^2/21)*log(exp(4*catalan/pi)*C3(1/4)^16/sqrt(2))", (),
     "Hu-Kim zeta(3) identity via the triple cosine"),
    ("kurokawa_zeta3",
     "zeta3", "(8*pi^2/7)*log(2^(1/4)/S3(1/2))", (),
     "Kurokawa zeta(3) identity via the triple sine"),
    ("kt_zeta3_product",
     "ktZeta3()", "exp(7*zeta3/(4*pi^2) + 1/4)", ("extrapolated", "slow"),
     "Kachi-Tzermias zeta(3) limit product"),
    ("kt_catalan_odd",
     "ktCatalanOdd()", "exp(2*catalan/pi + 1/2)", (),
     "Kachi-Tzermias Catalan product, odd truncation"),
    ("kt_catalan_even",
     "ktCatalanEven()", "exp(2*catalan/pi - 1/2)", (),
     "Kachi-Tzermias Catalan product, even truncation"),
    ("kt_catalan_odd_D",
     "D(1/2)/D(-1/2)", "exp(2*catalan/pi + 1/2)", (),
     "odd Catalan product from the eta series of D"),
    ("melzak",
     "D(2)", "pi*e/2", (),
     "Melzak product"),
    ("thm_D_ratio",
     "D(1/3)/D(-1/3)", "exp(1/3)*S2(1/6)^4/S2(1/3)", (),
     "D(x)/D(-x) through S_2 at x = 1/3"),
    ("thm_E_s3",
     "E(1/5)", "exp(2/25)*S3(2/5)/S3(1/5)^8", (),
     "E through S_3 at x = 1/5"),
    ("thm_E_c3",
     "E(1/5)", "exp(2/25)*C3(1/5)^8/S3(2/5)", (),
     "E through C_3 at x = 1/5"),
    ("duplication",
     "S3(2*0.3)", "S3(0.3)^4*C3(0.3)^4", (),
     "S_3 duplication formula at x = 0.3"),
    ("e_quarter",
     "E(1/4)", "exp(1/8 - 2*catalan/pi + 7*zeta3/(2*pi^2))", (),
     "Adamchik value E(1/4)"),
    ("shifted_adamchik",
     "shiftedAdamchik()", "(pi/4)*exp(1/2 + 7*zeta3/pi^2)", (),
     "Adamchik product over k >= 2"),
    ("s2_half",
     "S2(1/2)", "sqrt(2)", (),
     "Kurokawa-Koyama value S_2(1/2)"),
    ("s2_quarter",
     "S2(1/4)", "2^(1/8)*exp(catalan/(2*pi))", (),
     "Kurokawa-Koyama value S_2(1/4)"),
    ("s3_half",
     "S3(1/2)", "2^(1/4)*exp(-7*zeta3/(8*pi^2))", (),
     "S_3(1/2) from the Kurokawa zeta(3) formula"),
    ("c3_quarter",
     "C3(1/4)", "2^(1/32)*exp(21*zeta3/(64*pi^2) - catalan/(4*pi))", (),
     "Kurokawa-Wakayama value of C_3(1/4), with the sign of G/4pi corrected"),
    ("holcombe",
     "exp(3/2)*holcombeProduct()", "pi", (),
     "Holcombe product"),
    ("s3_deriv",
     "S3deriv1()", "-2*pi", (),
     "S_3'(1) = -2 pi"),
    ("s2_clausen_closed_form",
     "S2(0.2)", "(2*sin(pi*0.2))^0.2*exp(cl2(2*pi*0.2)/(2*pi))", (),
     "S_2 through the Clausen function at z = 0.2"),
    ("star_relation_half",
     "barnesGratio(1/2)", "sqrt(pi)", (),
     "G(3/2)/G(1/2) = Gamma(1/2)"),
    ("star_relation_quarter",
     "barnesGratio(1/4)", "2^(1/8)*pi^(1/4)*exp(-catalan/(2*pi))", (),
     "G(5/4)/G(3/4), Markov's value"),
    ("clausen_barnes",
     "cl2(1)", "log(pi) - log(sin(1/2)) + 2*pi*log(1/barnesGratio(1/(2*pi)))", (),
     "Clausen function through Barnes G at x = 1"),
    ("clausen_catalan",
     "cl2(pi/2)", "catalan", (),
     "Cl_2(pi/2) = G"),
    ("s2_antisymmetry",
     "S2(-0.37)*S2(0.37)", "1", (),
     "S_2(-x) S_2(x) = 1 at x = 0.37"),
    ("glaisher_definition",
     "glaisher", "exp(1/12 - zetaprime_neg1)", (),
     "A = exp(1/12 - zeta'(-1))"),
    ("ms_limit_rhs_forms",
     "2^(1/12)*exp(5/24 - (3/2)*zetaprime_neg1 - 7*zeta3/(16*pi^2))",
     "(2*e)^(1/12)*glaisher^(3/2)*exp(-7*zeta3/(16*pi^2))", (),
     "both closed forms of the Gamma-product limit"),
    ("ms_limit",
     "msLimit()", "2^(1/12)*exp(5/24 - (3/2)*zetaprime_neg1 - 7*zeta3/(16*pi^2))",
     ("extrapolated", "slow"),
     "Gamma-product limit"),
    ("ms_limit_glaisher",
     "msLimit()", "(2*e)^(1/12)*glaisher^(3/2)*exp(-7*zeta3/(16*pi^2))",
     ("extrapolated", "slow"),
     "Gamma-product limit, Glaisher form"),
]


def builtin_registry() -> List[IdentitySpec]:
    specs = []
    for name, lhs, rhs, tags, source in _BUILTIN:
        digits = EXTRAPOLATED_DIGITS if "extrapolated" in tags else None
        specs.append(IdentitySpec.from_text(name, lhs, rhs, digits, tags, source))
    return specs


_LINE = re.compile(r"^identity\s+(?P<name>[A-Za-z_][\w.-]*)\s*:\s*(?P<body>.*)$")
_OPTION = re.compile(r"\s+(?P<key>digits|tags)=(?P<value>\S+)\s*$")


def parse_identity_line(line: str, lineno: int = 0, path: str = "") -> Optional[IdentitySpec]:
    """Parse one line; returns ``None`` for blank and comment-only lines."""
    text = line.split("#", 1)[0].strip()
    if not text:
        return None
    m = _LINE.match(text)
    if m is None:
        raise IdentityFileError("expected 'identity <name>: <lhs> == <rhs>'", lineno, path)
    name, body = m.group("name"), m.group("body")
    digits = None
    tags = frozenset()
    while True:
        opt = _OPTION.search(body)
        if opt is None:
            break
        key, value = opt.group("key"), opt.group("value")
        if key == "digits":
            if not value.isdigit():
                raise IdentityFileError(f"bad digits value {value!r}", lineno, path)
            digits = int(value)
        else:
            tags = frozenset(t for t in value.split(",") if t)
        body = body[: opt.start()]
    sides = body.split("==")
    if len(sides) != 2:
        raise IdentityFileError("identity needs exactly one '=='", lineno, path)
    try:
        return IdentitySpec.from_text(name, sides[0], sides[1], digits, tags,
                                      source=f"{path}:{lineno}" if path else "")
    except MultisineError as exc:
        raise IdentityFileError(str(exc), lineno, path) from exc
    except ValueError as exc:
        raise IdentityFileError(str(exc), lineno, path) from exc


def parse_identity_file(text: str, path: str = "") -> List[IdentitySpec]:
    specs = []
    seen = set()
    for lineno, line in enumerate(text.splitlines(), 1):
        spec = parse_identity_line(line, lineno, path)
        if spec is None:
            continue
        if spec.name in seen:
            raise IdentityFileError(f"duplicate identity name {spec.name!r}", lineno, path)
        seen.add(spec.name)
        specs.append(spec)
    return specs


def load_identity_file(path) -> List[IdentitySpec]:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise IdentityFileError(f"cannot read identity file: {exc.strerror}", path=str(path))
    return parse_identity_file(text, str(path))
