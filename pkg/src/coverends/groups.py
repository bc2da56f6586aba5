"""Group families with decidable normal forms and subgroup oracles.

Supported families: free groups, free abelian groups, and direct products
of those two with product-form subgroups.  Each family provides

* a canonical-key algebra (``identity_key`` / ``step`` / ``key_to_word``)
  used to enumerate Cayley graphs,
* a :class:`Subgroup` with a membership test, an ambient-index classifier,
  and a canonical right-coset key used to enumerate Schreier graphs.

Free-group subgroups are realized as folded (deterministic) automata built
from a wedge of generator loops; free-abelian subgroups as integer lattices
held in triangularized (echelon) form with exact arithmetic.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Hashable, Sequence

from .errors import ChainError, UnsupportedSubgroupError, WordSyntaxError
from .words import (
    Word,
    concat_letters,
    format_letters,
    gen_of,
    parse_letters,
    sign_of,
)

_ALPHABET = "abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class Index:
    """Index of a subgroup: ``Finite(n)`` is ``Index(n)``, infinite is ``Index(None)``."""

    value: int | None = None

    @classmethod
    def finite(cls, n: int) -> "Index":
        if n < 1:
            raise ValueError("finite index must be >= 1")
        return cls(n)

    @classmethod
    def infinite(cls) -> "Index":
        return cls(None)

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def __str__(self) -> str:
        return "infinite" if self.value is None else str(self.value)


# ---------------------------------------------------------------------------
# Models


class GroupModel(ABC):
    """A group family with a normal-form algebra over single-letter names."""

    names: tuple[str, ...]

    @property
    def rank(self) -> int:
        return len(self.names)

    def _name_map(self) -> dict[str, int]:
        return {n: i for i, n in enumerate(self.names)}

    # -- words ------------------------------------------------------------

    def word(self, w: "str | Word") -> Word:
        """Parse (or validate) a word over this model's alphabet."""
        if isinstance(w, str):
            return Word(parse_letters(w, self._name_map()))
        self.validate(w)
        return w

    def validate(self, w: Word) -> None:
        for x in w.letters:
            if not 0 <= gen_of(x) < self.rank:
                raise WordSyntaxError(
                    f"letter index {gen_of(x)} out of range for {self!r}")

    def format(self, w: Word) -> str:
        return format_letters(w.letters, self.names)

    def normal_form(self, w: Word) -> Word:
        """Canonical word: equal normal forms iff equal group elements."""
        self.validate(w)
        return self.key_to_word(self.word_to_key(w))

    def geodesic_length(self, w: Word) -> int:
        """Word-metric length of the element represented by ``w``."""
        return len(self.normal_form(w))

    # -- canonical-key algebra (fast path used by ball BFS) ---------------

    @abstractmethod
    def identity_key(self) -> Hashable: ...

    @abstractmethod
    def step(self, key: Hashable, x: int) -> Hashable:
        """Canonical key of (element of ``key``) * (signed letter ``x``)."""

    @abstractmethod
    def key_to_word(self, key: Hashable) -> Word: ...

    @abstractmethod
    def word_to_key(self, w: Word) -> Hashable: ...

    # -- subgroups ---------------------------------------------------------

    @abstractmethod
    def subgroup(self, gens: Sequence) -> "Subgroup": ...

    def trivial_subgroup(self) -> "Subgroup":
        return self.subgroup([])


class FreeGroup(GroupModel):
    """Free group of the given rank; generators named a, b, c, ..."""

    def __init__(self, rank: int):
        if not 1 <= rank <= 26:
            raise ValueError("free group rank must be between 1 and 26")
        self.names = tuple(_ALPHABET[:rank])

    def __repr__(self) -> str:
        return f"FreeGroup({self.rank})"

    def identity_key(self):
        return ()

    def step(self, key, x):
        if key and key[-1] == x ^ 1:
            return key[:-1]
        return key + (x,)

    def key_to_word(self, key):
        return Word(key, _reduced=True)

    def word_to_key(self, w):
        return w.letters

    def subgroup(self, gens):
        return FreeSubgroup(self, [self.word(g) for g in gens])


_ABELIAN_PREFERENCE = "xyz" + "".join(c for c in _ALPHABET if c not in "xyz")


class FreeAbelian(GroupModel):
    """Free abelian group of the given rank; generators named x, y, z, ..."""

    def __init__(self, rank: int):
        if not 1 <= rank <= 26:
            raise ValueError("free abelian rank must be between 1 and 26")
        self.names = tuple(_ABELIAN_PREFERENCE[:rank])

    def __repr__(self) -> str:
        return f"FreeAbelian({self.rank})"

    def identity_key(self):
        return (0,) * self.rank

    def step(self, key, x):
        g = gen_of(x)
        return key[:g] + (key[g] + sign_of(x),) + key[g + 1:]

    def key_to_word(self, key):
        # sorted exponent form: generator order, sign folded into repetition
        letters = []
        for g, e in enumerate(key):
            x = 2 * g if e > 0 else 2 * g + 1
            letters.extend([x] * abs(e))
        return Word(tuple(letters), _reduced=True)

    def word_to_key(self, w):
        vec = [0] * self.rank
        for x in w.letters:
            vec[gen_of(x)] += sign_of(x)
        return tuple(vec)

    def subgroup(self, gens):
        return AbelianSubgroup(self, [self.word(g) for g in gens])


class DirectProduct(GroupModel):
    """Direct product of free / free-abelian factors.

    The alphabet is the disjoint union of the factor alphabets; when the
    preferred letters collide, later factors take the next free letter from
    their preference order.
    """

    def __init__(self, factors: Sequence[GroupModel]):
        factors = tuple(factors)
        if len(factors) < 2:
            raise ValueError("direct product needs at least 2 factors")
        for f in factors:
            if not isinstance(f, (FreeGroup, FreeAbelian)):
                raise ValueError("product factors must be FreeGroup or FreeAbelian")
        if sum(f.rank for f in factors) > 26:
            raise ValueError("total product rank must be at most 26")
        self.factors = factors
        self.offsets = []
        off = 0
        taken: set[str] = set()
        names: list[str] = []
        for f in factors:
            self.offsets.append(off)
            off += f.rank
            pref = _ALPHABET if isinstance(f, FreeGroup) else _ABELIAN_PREFERENCE
            stream = (c for c in pref if c not in taken)
            for _ in range(f.rank):
                c = next(stream)
                taken.add(c)
                names.append(c)
        self.names = tuple(names)

    def __repr__(self) -> str:
        return f"DirectProduct({list(self.factors)!r})"

    def factor_of(self, gen: int) -> int:
        for i in reversed(range(len(self.factors))):
            if gen >= self.offsets[i]:
                return i
        raise ValueError(gen)

    def split(self, w: Word) -> list[Word]:
        """Per-factor subwords, reindexed to factor-local letters."""
        parts: list[list[int]] = [[] for _ in self.factors]
        for x in w.letters:
            i = self.factor_of(gen_of(x))
            parts[i].append(x - 2 * self.offsets[i])
        return [Word(p) for p in parts]

    def identity_key(self):
        return tuple(f.identity_key() for f in self.factors)

    def step(self, key, x):
        i = self.factor_of(gen_of(x))
        sub = self.factors[i].step(key[i], x - 2 * self.offsets[i])
        return key[:i] + (sub,) + key[i + 1:]

    def key_to_word(self, key):
        letters: list[int] = []
        for i, f in enumerate(self.factors):
            shift = 2 * self.offsets[i]
            letters.extend(x + shift for x in f.key_to_word(key[i]).letters)
        return Word(tuple(letters), _reduced=True)

    def word_to_key(self, w):
        return tuple(f.word_to_key(p) for f, p in zip(self.factors, self.split(w)))

    def subgroup(self, gens):
        gens = list(gens)
        if gens and isinstance(gens[0], (list, tuple)):
            # explicit per-factor generator lists, in the product's alphabet
            if len(gens) != len(self.factors):
                raise UnsupportedSubgroupError(
                    "per-factor generator lists must match the factor count")
            flat: list = []
            for i, part in enumerate(gens):
                for g in part:
                    w = self.word(g)
                    if any(self.factor_of(gen_of(x)) != i for x in w.letters):
                        raise UnsupportedSubgroupError(
                            f"generator {self.format(w)!r} uses letters "
                            f"outside factor {i}")
                    flat.append(w)
            gens = flat
        per_factor: list[list[Word]] = [[] for _ in self.factors]
        for g in gens:
            w = self.word(g)
            used = {self.factor_of(gen_of(x)) for x in w.letters}
            if len(used) > 1:
                raise UnsupportedSubgroupError(
                    f"generator {self.format(w)!r} mixes factors; only "
                    "product-form subgroups are supported")
            if used:
                i = used.pop()
                per_factor[i].append(self.split(w)[i])
        subs = [f.subgroup(part) for f, part in zip(self.factors, per_factor)]
        return ProductSubgroup(self, subs)


# ---------------------------------------------------------------------------
# Subgroups


class Subgroup(ABC):
    """A subgroup with membership, ambient index, and right-coset keys.

    ``coset_key`` maps the canonical key of an element w to a canonical key
    of the right coset Hw, so two elements get equal keys iff they differ by
    a left factor in H.  All state is frozen after construction.
    """

    model: GroupModel
    generators: tuple[Word, ...]

    def contains(self, w: "str | Word") -> bool:
        w = self.model.word(w)
        return self.coset_key(self.model.word_to_key(w)) == self._identity_coset_key()

    def _identity_coset_key(self):
        return self.coset_key(self.model.identity_key())

    @abstractmethod
    def index(self) -> Index:
        """Index in the ambient model group."""

    @abstractmethod
    def coset_key(self, key: Hashable) -> Hashable: ...

    @abstractmethod
    def basis_rank(self) -> int:
        """Rank of this subgroup as a free / free-abelian group."""

    @abstractmethod
    def rewrite(self, w: Word) -> Word:
        """Express a member in this subgroup's own basis (a word over a
        rank-``basis_rank()`` model of the same kind).  Raises ChainError
        for non-members."""


class FreeSubgroup(Subgroup):
    """Finitely generated subgroup of a free group, as a folded automaton."""

    def __init__(self, model: FreeGroup, gens: list[Word]):
        self.model = model
        self.generators = tuple(gens)
        self._trans = _fold_wedge([g.letters for g in gens])
        self._base = 0
        self._tree, self._basis = self._spanning_tree()

    def _spanning_tree(self):
        """BFS tree from the base state; non-tree cells index the free basis."""
        tree_cells: set[tuple[int, int, int]] = set()
        seen = {self._base}
        queue = [self._base]
        while queue:
            s = queue.pop(0)
            for x in sorted(self._trans[s]):
                t = self._trans[s][x]
                if t not in seen:
                    seen.add(t)
                    queue.append(t)
                    cell = (s, x, t) if x % 2 == 0 else (t, x ^ 1, s)
                    tree_cells.add(cell)
        basis: dict[tuple[int, int, int], int] = {}
        for s, tr in enumerate(self._trans):
            for x, t in tr.items():
                if x % 2 == 0:
                    cell = (s, x, t)
                    if cell not in tree_cells and cell not in basis:
                        basis[cell] = len(basis)
        return tree_cells, basis

    def coset_key(self, key):
        # Trace through the automaton as far as it is defined; the reached
        # state plus the untraceable tail pins down the right coset.
        s = self._base
        for i, x in enumerate(key):
            t = self._trans[s].get(x)
            if t is None:
                return (s, key[i:])
            s = t
        return (s, ())

    def index(self):
        full = 2 * self.model.rank
        if all(len(tr) == full for tr in self._trans):
            return Index.finite(len(self._trans))
        return Index.infinite()

    def basis_rank(self):
        return len(self._basis)

    def rewrite(self, w):
        w = self.model.word(w)
        s = self._base
        out: list[int] = []
        for x in w.letters:
            t = self._trans[s].get(x)
            if t is None:
                raise ChainError(f"{self.model.format(w)!r} is not in the subgroup")
            cell = (s, x, t) if x % 2 == 0 else (t, x ^ 1, s)
            if cell in self._basis:
                b = self._basis[cell]
                out.append(2 * b if x % 2 == 0 else 2 * b + 1)
            s = t
        if s != self._base:
            raise ChainError(f"{self.model.format(w)!r} is not in the subgroup")
        return Word(out)


def _fold_wedge(gen_words: list[tuple[int, ...]]) -> list[dict[int, int]]:
    """Fold a wedge of generator loops into a deterministic automaton.

    Returns per-state transition dicts over signed letters, with state 0 the
    base; every transition has its mirror (t, x^1) -> s present.
    """
    trans: list[dict[int, int]] = [{}]
    to_add: list[tuple[int, int, int]] = []
    for w in gen_words:
        if not w:
            continue
        prev = 0
        for i, x in enumerate(w):
            if i == len(w) - 1:
                nxt = 0
            else:
                trans.append({})
                nxt = len(trans) - 1
            to_add.append((prev, x, nxt))
            prev = nxt

    parent = list(range(len(trans)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    merges: list[tuple[int, int]] = []
    while to_add or merges:
        if merges:
            a, b = merges.pop()
            a, b = find(a), find(b)
            if a == b:
                continue
            if a > b:
                a, b = b, a
            parent[b] = a
            for x, t in trans[b].items():
                to_add.append((a, x, t))
            trans[b] = {}
            continue
        u, x, v = to_add.pop()
        u, v = find(u), find(v)
        w = trans[u].get(x)
        if w is not None and find(w) != v:
            merges.append((find(w), v))
            continue
        trans[u][x] = v
        w2 = trans[v].get(x ^ 1)
        if w2 is None:
            trans[v][x ^ 1] = u
        elif find(w2) != u:
            merges.append((find(w2), u))

    live = sorted({find(s) for s in range(len(trans))} | {find(0)})
    live.remove(find(0))
    order = [find(0)] + live
    renum = {s: i for i, s in enumerate(order)}
    return [{x: renum[find(t)] for x, t in trans[s].items()} for s in order]


class AbelianSubgroup(Subgroup):
    """Integer-lattice subgroup of a free abelian group (exact arithmetic)."""

    def __init__(self, model: FreeAbelian, gens: list[Word]):
        self.model = model
        self.generators = tuple(gens)
        vecs = [list(model.word_to_key(g)) for g in gens]
        self._rows = _echelon(vecs, model.rank)
        self._pivots = [(next(i for i, e in enumerate(r) if e), ) for r in self._rows]
        self._pivots = [(c[0], self._rows[i][c[0]]) for i, c in enumerate(self._pivots)]

    def _residue(self, vec: Sequence[int]) -> tuple[int, ...]:
        v = list(vec)
        for row, (col, d) in zip(self._rows, self._pivots):
            q = v[col] // d
            if q:
                for j in range(col, len(v)):
                    v[j] -= q * row[j]
        return tuple(v)

    def coset_key(self, key):
        return self._residue(key)

    def index(self):
        if len(self._rows) < self.model.rank:
            return Index.infinite()
        det = 1
        for _, d in self._pivots:
            det *= d
        return Index.finite(det)

    def basis_rank(self):
        return len(self._rows)

    def coordinates(self, w: Word) -> list[int]:
        """Coordinates of a member over the echelon basis rows."""
        v = list(self.model.word_to_key(self.model.word(w)))
        coords = []
        for row, (col, d) in zip(self._rows, self._pivots):
            if v[col] % d != 0:
                raise ChainError(f"{self.model.format(w)!r} is not in the subgroup")
            q = v[col] // d
            coords.append(q)
            for j in range(col, len(v)):
                v[j] -= q * row[j]
        if any(v):
            raise ChainError(f"{self.model.format(w)!r} is not in the subgroup")
        return coords

    def rewrite(self, w):
        coords = self.coordinates(w)
        letters = []
        for g, e in enumerate(coords):
            x = 2 * g if e > 0 else 2 * g + 1
            letters.extend([x] * abs(e))
        return Word(tuple(letters), _reduced=True)


def _echelon(vecs: list[list[int]], width: int) -> list[list[int]]:
    """Integer row echelon form with positive pivots (enough of HNF for
    membership, residues, and determinants)."""
    rows = [v[:] for v in vecs if any(v)]
    out: list[list[int]] = []
    for col in range(width):
        while True:
            live = [r for r in rows if r[col]]
            if len(live) <= 1:
                break
            live.sort(key=lambda r: abs(r[col]))
            p = live[0]
            if p[col] < 0:
                for j in range(width):
                    p[j] = -p[j]
            for r in live[1:]:
                q = r[col] // p[col]
                for j in range(width):
                    r[j] -= q * p[j]
        live = [r for r in rows if r[col]]
        if live:
            p = live[0]
            if p[col] < 0:
                for j in range(width):
                    p[j] = -p[j]
            out.append(p)
            rows.remove(p)
        rows = [r for r in rows if any(r)]
    return out


class ProductSubgroup(Subgroup):
    """Product-form subgroup of a direct product (componentwise oracles)."""

    def __init__(self, model: DirectProduct, factor_subs: list[Subgroup]):
        self.model = model
        self.factor_subs = tuple(factor_subs)
        gens: list[Word] = []
        for i, sub in enumerate(factor_subs):
            shift = 2 * model.offsets[i]
            for g in sub.generators:
                gens.append(Word(tuple(x + shift for x in g.letters), _reduced=True))
        self.generators = tuple(gens)

    def coset_key(self, key):
        return tuple(sub.coset_key(k) for sub, k in zip(self.factor_subs, key))

    def index(self):
        total = 1
        for sub in self.factor_subs:
            idx = sub.index()
            if not idx.is_finite:
                return Index.infinite()
            total *= idx.value
        return Index.finite(total)

    def basis_rank(self):
        return sum(sub.basis_rank() for sub in self.factor_subs)

    def rewrite(self, w):
        raise UnsupportedSubgroupError(
            "rewriting over a product subgroup basis is not supported; "
            "compute relative indices factorwise instead")


# ---------------------------------------------------------------------------
# Module-level operation names matching the library's public contract


def free_reduce(model: GroupModel, text: str) -> Word:
    """Parse and freely reduce a raw letter string."""
    return model.word(text)


def normal_form(model: GroupModel, w: "str | Word") -> Word:
    return model.normal_form(model.word(w))


def is_member(sub: Subgroup, w: "str | Word") -> bool:
    return sub.contains(w)


def subgroup_index(sub: Subgroup) -> Index:
    return sub.index()


def validate_chain(h: Subgroup, k: Subgroup) -> None:
    """Require every generator of k to be a member of h."""
    for g in k.generators:
        if not h.contains(g):
            raise ChainError(
                f"generator {h.model.format(g)!r} of the claimed smaller "
                "subgroup is not a member of the larger one")


def relative_index(h: Subgroup, k: Subgroup) -> Index:
    """Index [H:K] for verified chains K <= H, computed exactly.

    Free case: rewrite the K-generators over H's Nielsen basis (spanning
    tree of the folded automaton) and classify the index inside a free group
    of H's rank.  Abelian case: the same with lattice coordinates.  Products
    go factorwise.
    """
    validate_chain(h, k)
    if isinstance(h, ProductSubgroup):
        assert isinstance(k, ProductSubgroup)
        total = 1
        for hs, ks in zip(h.factor_subs, k.factor_subs):
            idx = relative_index(hs, ks)
            if not idx.is_finite:
                return Index.infinite()
            total *= idx.value
        return Index.finite(total)
    r = h.basis_rank()
    if r == 0:
        return Index.finite(1)  # K <= H = trivial forces K trivial
    inner_model: GroupModel
    inner_model = FreeGroup(r) if isinstance(h, FreeSubgroup) else FreeAbelian(r)
    rewritten = [h.rewrite(g) for g in k.generators]
    return inner_model.subgroup(rewritten).index()
