"""Rewrite recipes for violating minor faces, as data.

Each recipe names a window of consecutive cycle vertices by letters and
says which letters bound the violating face ``f``.  A template replaces a
run of window letters (the old path) by a new path over the same letters
plus lone letters.  A lone letter stands for an off-cycle vertex adjacent to
both of its neighbours in the new path.  A template fires when every edge of
its new path exists in the graph; those edges are the recipe's probes.
"""

from __future__ import annotations

from dataclasses import dataclass

LONE_LETTERS = frozenset({"a", "b", "d", "g", "h", "i"})


@dataclass(frozen=True)
class Template:
    old: tuple[str, ...]
    new: tuple[str, ...]

    @property
    def lone(self) -> tuple[str, ...]:
        return tuple(x for x in self.new if x in LONE_LETTERS)

    def probes(self) -> list[tuple[str, str]]:
        """Edges of the new path that are not edges of the old path."""
        old_edges = {frozenset(p) for p in zip(self.old, self.old[1:])}
        return [(u, v) for u, v in zip(self.new, self.new[1:]) if frozenset((u, v)) not in old_edges]

    def __str__(self) -> str:
        return f"({','.join(self.old)}) -> ({','.join(self.new)})"


@dataclass(frozen=True)
class CaseRecipe:
    case_id: str
    j: int
    letters: tuple[str, ...]  # consecutive cycle vertices of the window
    f_first: str
    f_last: str
    templates: tuple[Template, ...]
    note: str = ""

    @property
    def f_offset(self) -> int:
        return self.letters.index(self.f_first)


def _t(text: str) -> Template:
    old, new = text.split("->")
    return Template(tuple(old.split()), tuple(new.split()))


def _recipe(case_id: str, letters: str, span: str, *templates: str, note: str = "") -> CaseRecipe:
    lt = tuple(letters.split())
    first, last = span.split("..")
    j = lt.index(last) - lt.index(first)
    recipe = CaseRecipe(case_id, j, lt, first, last, tuple(_t(s) for s in templates), note)
    _check(recipe)
    return recipe


def _check(r: CaseRecipe) -> None:
    window = set(r.letters)
    if window & LONE_LETTERS:
        raise ValueError(f"{r.case_id}: window letter clashes with a lone letter")
    for t in r.templates:
        idx = [r.letters.index(x) for x in t.old]
        if idx != list(range(idx[0], idx[0] + len(idx))):
            raise ValueError(f"{r.case_id}: old path {t} is not a run of the window")
        body = [x for x in t.new if x not in LONE_LETTERS]
        if t.new[0] != t.old[0] or t.new[-1] != t.old[-1]:
            raise ValueError(f"{r.case_id}: {t} changes the path ends")
        if sorted(body) != sorted(t.old):
            raise ValueError(f"{r.case_id}: {t} drops or repeats a cycle vertex")
        if not t.lone:
            raise ValueError(f"{r.case_id}: {t} does not lengthen the cycle")
        for k, x in enumerate(t.new):
            if x in LONE_LETTERS and (k == 0 or k == len(t.new) - 1):
                raise ValueError(f"{r.case_id}: lone letter at a path end in {t}")


# Detours through the middle vertex of a 2-face on (p, q), (q, r).
def _detours(lone: str, s: str, p: str, q: str, r: str, t: str) -> list[str]:
    return [f"{s} {p} {q} {r} -> {s} {q} {p} {lone} {r}", f"{p} {q} {r} {t} -> {p} {lone} {r} {q} {t}"]


RECIPES: tuple[CaseRecipe, ...] = (
    _recipe("2b", "x y z u", "x..z", "x y z u -> x a z y b u"),
    _recipe("2c", "x y z u", "x..z", "x y z u -> x a z y u"),
    _recipe("3a", "w v x y z u", "v..z", "w v x y z u -> w b x v a z y d u"),
    _recipe("3b", "v x y z u", "v..z", "v x y z u -> v a z y x d u"),
    _recipe(
        "4a", "v w x y z", "v..z",
        "v w x y -> v x w d y",
        "w x y z -> w d y x z",
    ),
    _recipe(
        "4b", "t v w x y z u", "v..z",
        "t v w x y z u -> t b x w v a z y d u",
        "v w x y z -> v b y x w z",
        "x y z u -> x z y d u",
    ),
    _recipe(
        "4c", "t v w x y z", "v..z",
        "w x y z -> w y x d z",
        "t v w x y z -> t b w v y x d z",
    ),
    _recipe(
        "4d", "t v w x y z", "v..z",
        "w x y z -> w y x d z",
        "t v w x y z -> t b x w v y z",
    ),
    _recipe(
        "4e", "r s t u v w x y z", "v..z",
        "w x y z -> w y x d z",
        "t u v w -> t g v u w",
        "r s t u -> r h t s u",
    ),
    _recipe(
        "4f", "v w x y z", "v..z",
        "v w x y z -> v y x w d z",
        "v w x y z -> v x y w d z",
    ),
    _recipe(
        "4g", "t v w x y z u", "v..z",
        "v w x y z u -> v a z y w x d u",
        "w x y z u -> w z y x d u",
        "t v w x y z u -> t w v a z y x d u",
    ),
    _recipe(
        "4h", "t u v w x y z q", "v..z",
        "v w x y z q -> v a z y w x d q",
        "w x y z q -> w z y x d q",
        "t u v w -> t g v u w",
    ),
    _recipe(
        "4i", "s t u v w x y z q r", "v..z",
        "y z q r -> y q z h r",
        "w x y z q r -> w y x q z h r",
        "s t u v w x y -> s g v u t b x w y",
        "s t u v w x -> s g v w u t b x",
        "s t u v w -> s g v u t w",
    ),
    _recipe(
        "5a", "t u v w x y z p q r s", "u..z",
        "y z p q -> y p z g q",
        "z p q r -> z g q p r",
        "u v w x -> u w v b x",
        "v w x y -> v b x w y",
        note="terminal extension of a weight-3 configuration",
    ),
    _recipe(
        "5b", "u v w x y z q r", "u..z",
        "u v w x -> u w v b x",
        "v w x y -> v b x w y",
        "y z q r -> y q z g r",
    ),
    _recipe(
        "5c", "r u v w x y z q", "u..z",
        "r u v w -> r b v u w",
        "x y z q -> x z y g q",
        "v w x y z -> v d y x w z",
    ),
    _recipe(
        "5d", "r u v w x y z", "u..z",
        "v w x y z -> v y x w d z",
        "r u v w x -> r b w v u x",
        "r u v w x y z -> r b w y x v u a z",
        "r u v w x y z -> r b w v u y x z",
        "u v w x y z -> u y x v w d z",
    ),
    _recipe(
        "5e", "u v w x y z q", "u..z",
        "u v w x -> u w v b x",
        "v w x y -> v b x w y",
        "w x y z q -> w z y x d q",
    ),
    _recipe(
        "5f", "u v w x y z q", "u..z",
        "w x y z -> w y x d z",
        "u v w x -> u w v b x",
    ),
    _recipe("5g", "r s u v w x y z q", "u..z", note="closed by the weight count alone"),
    _recipe(
        "6a", "t u v w x y z p q r s", "t..z",
        *_detours("b", "u", "v", "w", "x", "y"),
        *_detours("g", "y", "z", "p", "q", "r"),
    ),
    _recipe(
        "6b", "s t u v w x y z q r", "t..z",
        *_detours("b", "u", "v", "w", "x", "y"),
        "s t u v w -> s h v u t w",
        "y z q r -> y q z g r",
    ),
    _recipe(
        "6c", "t u v w x y z q", "t..z",
        "t u v w -> t b v u w",
        "u v w x y -> u x w v d y",
        "t u v w x y z q -> t a z u v w x y g q",
    ),
    _recipe(
        "6d", "s t u v w x y z", "t..z",
        "t u v w -> t v u b w",
        "u v w x -> u b w v x",
        "v w x y z -> v y x w d z",
    ),
    _recipe(
        "6e", "t u v w x y z q", "t..z",
        *_detours("b", "u", "v", "w", "x", "y"),
        "w x y z q -> w z y x d q",
    ),
    _recipe("6f", "t u v w x y z", "t..z", *_detours("b", "u", "v", "w", "x", "y")),
    _recipe(
        "6g", "t u v w x y z q", "t..z",
        "t u v w -> t v u b w",
        "u v w x -> u b w v x",
        "x y z q -> x z y g q",
    ),
    _recipe(
        "7a", "r s t u v w x y z p q", "s..z",
        "y z p q -> y p z g q",
        *_detours("b", "u", "v", "w", "x", "y"),
        "r s t u v w x y z -> r i t u v w x y s a z",
    ),
    _recipe(
        "7b", "r s t u v w x y z q", "s..z",
        *_detours("b", "u", "v", "w", "x", "y"),
        "w x y z q -> w z y x d q",
        "s t u v -> s u t h v",
    ),
    _recipe(
        "7c", "s t u v w x y z", "s..z",
        "u v w x -> u w v d x",
        "v w x y -> v d x w y",
        "s t u v -> s u t b v",
    ),
    _recipe(
        "8a", "r s t u v w x y z q", "r..z",
        "s t u v -> s u t h v",
        *_detours("b", "u", "v", "w", "x", "y"),
        "w x y z q -> w z y x d q",
    ),
    _recipe(
        "8b", "r s t u v w x y z q", "r..z",
        "v w x y -> v g x w y",
        "s t u v -> s u t h v",
        *_detours("b", "u", "v", "w", "x", "y"),
        "w x y z q -> w z y x d q",
    ),
    _recipe(
        "9", "p q r s t u v w x y z", "q..z",
        *_detours("b", "q", "r", "s", "t", "u"),
        *_detours("b", "t", "u", "v", "w", "x"),
    ),
)

RECIPE_BY_CASE: dict[str, CaseRecipe] = {r.case_id: r for r in RECIPES}

CASE_IDS: tuple[str, ...] = tuple(["basic", "2a"] + [r.case_id for r in RECIPES] + ["search"])
