"""Propositional language, formulas, models and satisfaction.

Model indices count in binary over the atom bitvector with the first
declared atom as the most significant bit.  Atoms ``(rain, wet)`` give the
order (0,0), (0,1), (1,0), (1,1) for m1..m4.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Sequence, Union

DEFAULT_ATOM_CAP = 20
ATOM_CAP_ENV = "GENLOGIC_ATOM_CAP"

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_KEYWORDS = frozenset({"true", "false"})


class LogicError(ValueError):
    pass


class AtomCapExceeded(LogicError):
    pass


class FormulaSyntaxError(LogicError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte offset {offset}")
        self.offset = offset


class UnknownAtomError(LogicError):
    def __init__(self, name: str):
        super().__init__(f"unknown atom {name!r}")
        self.name = name


def atom_cap() -> int:
    raw = os.environ.get(ATOM_CAP_ENV)
    if raw is None:
        return DEFAULT_ATOM_CAP
    try:
        return int(raw)
    except ValueError:
        raise LogicError(f"{ATOM_CAP_ENV} must be an integer, got {raw!r}") from None


@dataclass(frozen=True)
class Language:
    atoms: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "atoms", tuple(self.atoms))
        seen = set()
        for name in self.atoms:
            if not isinstance(name, str) or not _IDENT.match(name):
                raise LogicError(f"invalid atom name {name!r}")
            if name in _KEYWORDS:
                raise LogicError(f"atom name {name!r} is reserved")
            if name in seen:
                raise LogicError(f"duplicate atom name {name!r}")
            seen.add(name)

    def __len__(self) -> int:
        return len(self.atoms)

    @property
    def n_models(self) -> int:
        return 1 << len(self.atoms)

    def bit(self, name: str) -> int:
        """Mask of the index bit holding the truth value of ``name``."""
        return 1 << (len(self.atoms) - 1 - self.index(name))

    def index(self, name: str) -> int:
        try:
            return self.atoms.index(name)
        except ValueError:
            raise UnknownAtomError(name) from None

    def check_cap(self, cap: int | None = None) -> None:
        cap = atom_cap() if cap is None else cap
        if len(self.atoms) > cap:
            raise AtomCapExceeded(
                f"{len(self.atoms)} atoms exceeds the cap of {cap} "
                f"(set {ATOM_CAP_ENV} to raise it)"
            )


# --- formulas -------------------------------------------------------------


class Formula:
    """Base class of the formula AST.  Nodes compare structurally."""

    __slots__ = ()

    def __str__(self) -> str:
        return format_formula(self)


@dataclass(frozen=True, repr=False)
class Atom(Formula):
    name: str

    def __repr__(self):
        return f"Atom({self.name!r})"


@dataclass(frozen=True, repr=False)
class Not(Formula):
    arg: Formula

    def __repr__(self):
        return f"Not({self.arg!r})"


@dataclass(frozen=True, repr=False)
class _Binary(Formula):
    left: Formula
    right: Formula

    def __repr__(self):
        return f"{type(self).__name__}({self.left!r}, {self.right!r})"


class And(_Binary):
    pass


class Or(_Binary):
    pass


class Implies(_Binary):
    pass


class Iff(_Binary):
    pass


@dataclass(frozen=True, repr=False)
class Top(Formula):
    def __repr__(self):
        return "Top()"


@dataclass(frozen=True, repr=False)
class Bottom(Formula):
    def __repr__(self):
        return "Bottom()"


TOP = Top()
BOTTOM = Bottom()


def atoms_of(f: Formula) -> list[str]:
    """Atom names of ``f`` in order of first occurrence."""
    out: list[str] = []

    def walk(g):
        if isinstance(g, Atom):
            if g.name not in out:
                out.append(g.name)
        elif isinstance(g, Not):
            walk(g.arg)
        elif isinstance(g, _Binary):
            walk(g.left)
            walk(g.right)

    walk(f)
    return out


def check_atoms(f: Formula, lang: Language) -> None:
    for name in atoms_of(f):
        lang.index(name)


FormulaSet = tuple  # tuple[Formula, ...], deduplicated, declaration order kept


def formula_set(formulas: Iterable[Formula]) -> tuple[Formula, ...]:
    """Deduplicate by structural equality, keeping first occurrences."""
    return tuple(dict.fromkeys(formulas))


# --- parsing --------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<iff><->)|(?P<imp>->)|(?P<not>[!~])|(?P<and>&)|(?P<or>\|)"
    r"|(?P<lp>\()|(?P<rp>\))|(?P<id>[A-Za-z_][A-Za-z0-9_]*))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            raise FormulaSyntaxError(
                f"unexpected character {text[pos]!r}", len(text[:pos].encode())
            )
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), len(text[:start].encode())))
        pos = m.end()
    tokens.append(("end", "", len(text.encode())))
    return tokens


class _Parser:
    def __init__(self, text: str, lang: Language | None):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.lang = lang

    def peek(self) -> str:
        return self.tokens[self.pos][0]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message: str):
        kind, value, offset = self.tokens[self.pos]
        found = "end of input" if kind == "end" else repr(value)
        raise FormulaSyntaxError(f"{message}, found {found}", offset)

    def parse(self) -> Formula:
        f = self.iff()
        if self.peek() != "end":
            self.fail("expected end of input")
        return f

    def iff(self) -> Formula:
        left = self.implies()
        if self.peek() == "iff":
            self.take()
            return Iff(left, self.iff())
        return left

    def implies(self) -> Formula:
        left = self.disjunction()
        if self.peek() == "imp":
            self.take()
            return Implies(left, self.implies())
        return left

    def disjunction(self) -> Formula:
        f = self.conjunction()
        while self.peek() == "or":
            self.take()
            f = Or(f, self.conjunction())
        return f

    def conjunction(self) -> Formula:
        f = self.unary()
        while self.peek() == "and":
            self.take()
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        kind = self.peek()
        if kind == "not":
            self.take()
            return Not(self.unary())
        if kind == "lp":
            self.take()
            f = self.iff()
            if self.peek() != "rp":
                self.fail("expected ')'")
            self.take()
            return f
        if kind == "id":
            _, name, _ = self.take()
            if name == "true":
                return TOP
            if name == "false":
                return BOTTOM
            if self.lang is not None:
                self.lang.index(name)
            return Atom(name)
        self.fail("expected a formula")


def parse_formula(text: str, lang: Language | None = None) -> Formula:
    """Parse formula text.

    Precedence from tightest: ``!``/``~``, ``&``, ``|``, ``->``, ``<->``.
    ``&`` and ``|`` associate left, ``->`` and ``<->`` right.  When ``lang``
    is given every atom must be declared in it.
    """
    if not text or not text.strip():
        raise FormulaSyntaxError("empty formula", 0)
    return _Parser(text, lang).parse()


# --- printing -------------------------------------------------------------

_PREC = {Iff: 1, Implies: 2, Or: 3, And: 4}
_SYMBOL = {Iff: "<->", Implies: "->", Or: "|", And: "&"}
_RIGHT_ASSOC = (Iff, Implies)


def _prec(f: Formula) -> int:
    if isinstance(f, Not):
        return 5
    return _PREC.get(type(f), 6)


def format_formula(f: Formula) -> str:
    """Render with the minimal parentheses that re-parse to the same tree."""
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Top):
        return "true"
    if isinstance(f, Bottom):
        return "false"
    if isinstance(f, Not):
        inner = format_formula(f.arg)
        return "!" + (f"({inner})" if _prec(f.arg) < 5 else inner)
    p = _PREC[type(f)]
    left, right = format_formula(f.left), format_formula(f.right)
    lp, rp = _prec(f.left), _prec(f.right)
    if isinstance(f, _RIGHT_ASSOC):
        wrap_left, wrap_right = lp <= p, rp < p
    else:
        wrap_left, wrap_right = lp < p, rp <= p
    if wrap_left:
        left = f"({left})"
    if wrap_right:
        right = f"({right})"
    return f"{left} {_SYMBOL[type(f)]} {right}"


# --- models ---------------------------------------------------------------


@dataclass(frozen=True)
class Model:
    lang: Language
    index: int

    def __post_init__(self):
        if not 0 <= self.index < self.lang.n_models:
            raise LogicError(f"model index {self.index} out of range")

    @property
    def assignment(self) -> tuple[bool, ...]:
        n = len(self.lang)
        return tuple(bool((self.index >> (n - 1 - i)) & 1) for i in range(n))

    def __getitem__(self, atom: str) -> bool:
        return bool(self.index & self.lang.bit(atom))

    @property
    def label(self) -> str:
        return f"m{self.index + 1}"

    @classmethod
    def from_assignment(cls, lang: Language, values: Sequence[bool | int]) -> "Model":
        if len(values) != len(lang):
            raise LogicError("assignment length does not match the language")
        index = 0
        for v in values:
            index = (index << 1) | bool(v)
        return cls(lang, index)


def enumerate_models(lang: Language, cap: int | None = None) -> list[Model]:
    lang.check_cap(cap)
    return [Model(lang, i) for i in range(lang.n_models)]


def satisfies(m: Model, f: Formula) -> bool:
    if isinstance(f, Atom):
        return m[f.name]
    if isinstance(f, Not):
        return not satisfies(m, f.arg)
    if isinstance(f, And):
        return satisfies(m, f.left) and satisfies(m, f.right)
    if isinstance(f, Or):
        return satisfies(m, f.left) or satisfies(m, f.right)
    if isinstance(f, Implies):
        return not satisfies(m, f.left) or satisfies(m, f.right)
    if isinstance(f, Iff):
        return satisfies(m, f.left) == satisfies(m, f.right)
    if isinstance(f, Top):
        return True
    if isinstance(f, Bottom):
        return False
    raise TypeError(f"not a formula: {f!r}")


def compile_formula(f: Formula, lang: Language) -> Callable[[int], bool]:
    """Predicate on model indices; avoids building the model space."""
    if isinstance(f, Atom):
        bit = lang.bit(f.name)
        return lambda x: bool(x & bit)
    if isinstance(f, Not):
        g = compile_formula(f.arg, lang)
        return lambda x: not g(x)
    if isinstance(f, Top):
        return lambda x: True
    if isinstance(f, Bottom):
        return lambda x: False
    a, b = compile_formula(f.left, lang), compile_formula(f.right, lang)
    if isinstance(f, And):
        return lambda x: a(x) and b(x)
    if isinstance(f, Or):
        return lambda x: a(x) or b(x)
    if isinstance(f, Implies):
        return lambda x: (not a(x)) or b(x)
    if isinstance(f, Iff):
        return lambda x: a(x) == b(x)
    raise TypeError(f"not a formula: {f!r}")


# --- model sets -----------------------------------------------------------


@dataclass(frozen=True)
class ModelSet:
    """Set of models of an ``n_atoms`` language, stored as a bitmask."""

    n_atoms: int
    mask: int

    @classmethod
    def full(cls, n_atoms: int) -> "ModelSet":
        return cls(n_atoms, (1 << (1 << n_atoms)) - 1)

    @classmethod
    def empty(cls, n_atoms: int) -> "ModelSet":
        return cls(n_atoms, 0)

    @classmethod
    def of(cls, n_atoms: int, indices: Iterable[int]) -> "ModelSet":
        mask = 0
        for i in indices:
            mask |= 1 << i
        return cls(n_atoms, mask)

    def __iter__(self) -> Iterator[int]:
        mask, i = self.mask, 0
        while mask:
            if mask & 1:
                yield i
            mask >>= 1
            i += 1

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, item: Union[int, Model]) -> bool:
        index = item.index if isinstance(item, Model) else item
        return bool((self.mask >> index) & 1)

    def _check(self, other: "ModelSet"):
        if self.n_atoms != other.n_atoms:
            raise LogicError("model sets over different languages")

    def __and__(self, other: "ModelSet") -> "ModelSet":
        self._check(other)
        return ModelSet(self.n_atoms, self.mask & other.mask)

    def __or__(self, other: "ModelSet") -> "ModelSet":
        self._check(other)
        return ModelSet(self.n_atoms, self.mask | other.mask)

    def __sub__(self, other: "ModelSet") -> "ModelSet":
        self._check(other)
        return ModelSet(self.n_atoms, self.mask & ~other.mask)

    def __le__(self, other: "ModelSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def issubset(self, other: "ModelSet") -> bool:
        return self <= other

    def labels(self) -> list[str]:
        return [f"m{i + 1}" for i in self]

    def __str__(self) -> str:
        return "{" + ", ".join(self.labels()) + "}"


@lru_cache(maxsize=4096)
def truth_mask(f: Formula, lang: Language) -> int:
    """Bitmask of the models of ``f`` (bit ``j`` set iff model ``j`` satisfies it)."""
    lang.check_cap()
    full = (1 << lang.n_models) - 1
    if isinstance(f, Atom):
        bit = lang.bit(f.name)
        return sum(1 << j for j in range(lang.n_models) if j & bit)
    if isinstance(f, Top):
        return full
    if isinstance(f, Bottom):
        return 0
    if isinstance(f, Not):
        return full ^ truth_mask(f.arg, lang)
    a, b = truth_mask(f.left, lang), truth_mask(f.right, lang)
    if isinstance(f, And):
        return a & b
    if isinstance(f, Or):
        return a | b
    if isinstance(f, Implies):
        return (full ^ a) | b
    if isinstance(f, Iff):
        return full ^ (a ^ b)
    raise TypeError(f"not a formula: {f!r}")


def models_of(f: Formula, lang: Language) -> ModelSet:
    return ModelSet(len(lang), truth_mask(f, lang))


def model_set(fs: Iterable[Formula], lang: Language) -> ModelSet:
    """Models satisfying every formula of ``fs``; all models when ``fs`` is empty."""
    mask = ModelSet.full(len(lang)).mask
    for f in fs:
        mask &= truth_mask(f, lang)
    return ModelSet(len(lang), mask)
