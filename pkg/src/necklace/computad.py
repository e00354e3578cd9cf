"""Simplicial computads: simplicial categories freely generated by atoms.

An ``r``-arrow is a :class:`Word`: a path of letters ``(epi, atom)`` where
``atom`` is a nondegenerate atomic arrow and ``epi`` a degeneracy applied to
it.  Words are listed in path order (the first letter starts at the source),
so composition is concatenation and the free factorization is the word
itself.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from . import operators as ops
from .sset import BoundExceeded, SimplicialSet, from_simplex_functor


class Word(NamedTuple):
    src: object
    tgt: object
    dim: int
    letters: tuple

    def __len__(self):
        return len(self.letters)

    @property
    def is_identity(self) -> bool:
        return not self.letters


@dataclass
class Atom:
    src: object
    tgt: object
    dim: int
    faces: tuple = ()


class ComputadError(ValueError):
    pass


class Computad:
    """A simplicial computad presented by objects and atoms.

    ``atoms[key]`` records source, target, dimension and the faces of the
    atom as words.  ``relations`` lists pairs of words a presentation wants
    identified; a free presentation has none.
    """

    def __init__(self, objects, atoms: dict, relations=(), name: str = ""):
        self.objects = list(objects)
        self.atoms = dict(atoms)
        self.relations = list(relations)
        self.name = name
        self.rank = {a: i for i, a in enumerate(sorted(self.atoms, key=lambda a: (self.atoms[a].dim,)))}
        self._by_src = {}
        for a in self.atoms:
            self._by_src.setdefault(self.atoms[a].src, []).append(a)
        for v in self._by_src.values():
            v.sort(key=self.rank.__getitem__)
        self._restrict = {}

    def __repr__(self):
        return f"Computad({self.name or '?'}: {len(self.objects)} objects, {len(self.atoms)} atoms)"

    def atoms_of_dim(self, r: int) -> list:
        return [a for a in self.rank if self.atoms[a].dim == r]

    # -- words ---------------------------------------------------------------
    def letter_word(self, a, epi=None) -> Word:
        A = self.atoms[a]
        epi = tuple(epi) if epi is not None else ops.identity(A.dim)
        return Word(A.src, A.tgt, len(epi) - 1, ((epi, a),))

    def identity(self, x, r: int = 0) -> Word:
        return Word(x, x, r, ())

    def compose(self, *words: Word) -> Word:
        """Composite in path order: ``compose(f, g)`` is ``f`` then ``g``."""
        w = words[0]
        letters = list(w.letters)
        for v in words[1:]:
            if v.src != w.tgt or v.dim != w.dim:
                raise ComputadError(f"words not composable: {w} then {v}")
            letters.extend(v.letters)
            w = Word(w.src, v.tgt, w.dim, ())
        return Word(words[0].src, w.tgt, words[0].dim, tuple(letters))

    def restrict_atom(self, a, mono) -> Word:
        mono = tuple(mono)
        key = (a, mono)
        hit = self._restrict.get(key)
        if hit is not None:
            return hit
        A = self.atoms[a]
        if len(mono) == A.dim + 1:
            out = self.letter_word(a)
        else:
            img = set(mono)
            i = next(j for j in range(A.dim + 1) if j not in img)
            out = self.act(A.faces[i], tuple(v if v < i else v - 1 for v in mono))
        self._restrict[key] = out
        return out

    def act(self, w: Word, op) -> Word:
        """``w . op`` in normal form."""
        r = len(op) - 1
        letters = []
        for e, a in w.letters:
            eta, mono = ops.factor(ops.compose(e, op))
            for e2, a2 in self.restrict_atom(a, mono).letters:
                letters.append((ops.compose(e2, eta), a2))
        return Word(w.src, w.tgt, r, tuple(letters))

    def face(self, w: Word, i: int) -> Word:
        return self.act(w, ops.face(i, w.dim))

    def normalize(self, w: Word):
        """``(eta, v)`` with ``w == v . eta`` and ``v`` nondegenerate."""
        if not w.letters:
            return (ops.const(0, w.dim), Word(w.src, w.tgt, 0, ()))
        eta, red = ops.collapse_common([e for e, _ in w.letters])
        v = Word(w.src, w.tgt, eta[-1], tuple((r, a) for r, (_, a) in zip(red, w.letters)))
        return eta, v

    def is_nondegenerate(self, w: Word) -> bool:
        return ops.is_identity(self.normalize(w)[0])

    def words(self, x, y, r: int, max_len: Optional[int] = None) -> list:
        """Every ``r``-arrow ``x -> y`` (degenerate ones included)."""
        limit = max_len if max_len is not None else len(self.objects) + 1
        out = []
        letters_from = {}
        for s, atoms in self._by_src.items():
            ls = []
            for a in atoms:
                A = self.atoms[a]
                if A.dim <= r:
                    ls.extend(((e, a), A.tgt) for e in ops.epis(r, A.dim))
            letters_from[s] = ls

        def rec(at, path):
            if at == y:
                out.append(Word(x, y, r, tuple(path)))
            if len(path) >= limit:
                if letters_from.get(at):
                    raise BoundExceeded(f"words from {x!r} to {y!r} exceed length {limit}")
                return
            for letter, t in letters_from.get(at, ()):
                path.append(letter)
                rec(t, path)
                path.pop()

        rec(x, [])
        return out

    def fun(self, x, y, D: int, max_len: Optional[int] = None) -> SimplicialSet:
        """The function complex ``Fun(x, y)`` through dimension ``D``; cells are
        nondegenerate words."""
        return from_simplex_functor(lambda r: self.words(x, y, r, max_len), self.face,
                                    lambda w, i: self.act(w, ops.degeneracy(i, w.dim)), D,
                                    bound=None, name=f"Fun({x},{y})")

    # -- validation ----------------------------------------------------------
    def check(self) -> list[str]:
        """Well-formedness of the presentation, the simplicial identities on
        every atom, and freeness (no relations between distinct words)."""
        problems = []
        objs = set(self.objects)
        for a, A in self.atoms.items():
            if A.src not in objs or A.tgt not in objs:
                problems.append(f"atom {a!r} has unknown endpoints")
            if A.dim == 0:
                if A.faces:
                    problems.append(f"0-atom {a!r} has faces")
                continue
            if len(A.faces) != A.dim + 1:
                problems.append(f"atom {a!r} has {len(A.faces)} faces, expected {A.dim + 1}")
                continue
            for i, f in enumerate(A.faces):
                if (f.src, f.tgt, f.dim) != (A.src, A.tgt, A.dim - 1):
                    problems.append(f"face {i} of {a!r} has wrong shape")
                elif not self._well_formed(f):
                    problems.append(f"face {i} of {a!r} is not a composable word of atoms")
        if problems:
            return problems
        for a, A in self.atoms.items():
            n = A.dim
            for j in range(n + 1):
                for i in range(j):
                    if n < 2:
                        continue
                    l = self.act(A.faces[j], ops.face(i, n - 1))
                    r = self.act(A.faces[i], ops.face(j - 1, n - 1))
                    if l != r:
                        problems.append(f"d{i}d{j} != d{j - 1}d{i} on atom {a!r}")
        for u, v in self.relations:
            if u != v:
                problems.append(f"relation identifies distinct words {fmt_word(u)} and {fmt_word(v)}: not free")
        return problems

    def _well_formed(self, w: Word) -> bool:
        at = w.src
        for e, a in w.letters:
            A = self.atoms.get(a)
            if A is None or A.src != at or len(e) != w.dim + 1 or not ops.is_epi(e) or e[-1] != A.dim:
                return False
            at = A.tgt
        return at == w.tgt


def fmt_word(w: Word) -> str:
    if not w.letters:
        return f"id[{w.src}]"
    return " ; ".join(f"{a}{'' if ops.is_identity(e) else '.' + ''.join(map(str, e))}" for e, a in w.letters)


class ComputadFunctor:
    """A simplicial functor between computads, given on objects and atoms."""

    def __init__(self, source: Computad, target: Computad, on_objects: dict, on_atoms: dict, name: str = ""):
        self.source, self.target = source, target
        self.on_objects = dict(on_objects)
        self.on_atoms = dict(on_atoms)
        self.name = name

    def apply(self, w: Word) -> Word:
        T = self.target
        x = self.on_objects[w.src]
        letters = []
        for e, a in w.letters:
            letters.extend(T.act(self.on_atoms[a], e).letters)
        return Word(x, self.on_objects[w.tgt], w.dim, tuple(letters))

    def check(self, computad_functor: bool = False) -> list[str]:
        S, T = self.source, self.target
        problems = []
        for a, A in S.atoms.items():
            img = self.on_atoms.get(a)
            if img is None:
                problems.append(f"no image for atom {a!r}")
                continue
            if (img.src, img.tgt, img.dim) != (self.on_objects[A.src], self.on_objects[A.tgt], A.dim):
                problems.append(f"image of {a!r} has wrong shape")
                continue
            if computad_functor and len(img.letters) > 1:
                problems.append(f"atom {a!r} is sent to a composite {fmt_word(img)}")
            for i, f in enumerate(A.faces):
                if self.apply(f) != T.act(img, ops.face(i, A.dim)):
                    problems.append(f"face {i} of atom {a!r} not preserved")
        return problems

    def then(self, other: "ComputadFunctor", name: str = "") -> "ComputadFunctor":
        return ComputadFunctor(self.source, other.target,
                               {x: other.on_objects[y] for x, y in self.on_objects.items()},
                               {a: other.apply(w) for a, w in self.on_atoms.items()}, name=name)

    def agrees_with(self, other: "ComputadFunctor") -> list:
        """Atoms (and objects) on which two parallel functors differ."""
        bad = [x for x in self.source.objects if self.on_objects[x] != other.on_objects[x]]
        bad += [a for a in self.source.atoms if self.on_atoms[a] != other.on_atoms[a]]
        return bad


def subcomputad_check(F: ComputadFunctor) -> tuple[bool, list[str]]:
    """Whether ``F`` is injective on objects and faithful.

    Faithfulness of a functor between free computads holds exactly when each
    atom goes to a single nondegenerate letter and distinct atoms go to
    distinct atoms; then the image is closed under factorization because a
    word lies in the image iff each of its letters does.
    """
    S = F.source
    problems = []
    seen_obj = {}
    for x in S.objects:
        y = F.on_objects[x]
        if y in seen_obj:
            problems.append(f"objects {seen_obj[y]!r} and {x!r} both map to {y!r}")
        seen_obj[y] = x
    seen = {}
    for a in S.atoms:
        w = F.on_atoms[a]
        if len(w.letters) != 1 or not ops.is_identity(w.letters[0][0]):
            problems.append(f"atom {a!r} does not map to a nondegenerate atom")
            continue
        b = w.letters[0][1]
        if b in seen:
            problems.append(f"atoms {seen[b]!r} and {a!r} both map to {b!r}")
        seen[b] = a
    return (not problems), problems


def image_atoms(F: ComputadFunctor) -> set:
    return {w.letters[0][1] for w in F.on_atoms.values() if len(w.letters) == 1}


def pushout_along_subcomputad(inc: ComputadFunctor, g: ComputadFunctor, name: str = ""):
    """Pushout of ``C <- A -> B`` where ``inc : A -> B`` is a subcomputad.

    The result has the objects and atoms of ``C`` together with the objects
    and atoms of ``B`` outside the image of ``A``.  Returns the pushout and
    the two cocone functors ``B -> P`` and ``C -> P``.
    """
    ok, why = subcomputad_check(inc)
    if not ok:
        raise ComputadError("not a subcomputad: " + "; ".join(why))
    A, B, C = inc.source, inc.target, g.target
    back_obj = {inc.on_objects[x]: x for x in A.objects}
    back_atom = {inc.on_atoms[a].letters[0][1]: a for a in A.atoms}
    obj_b = {y: g.on_objects[back_obj[y]] if y in back_obj else ("B", y) for y in B.objects}
    objects = list(C.objects) + [("B", y) for y in B.objects if y not in back_obj]
    atoms = {("C", c): Atom(C.atoms[c].src, C.atoms[c].tgt, C.atoms[c].dim,
                            tuple(_retag(w, lambda k: ("C", k)) for w in C.atoms[c].faces)) for c in C.atoms}
    new_atoms = [b for b in B.rank if b not in back_atom]

    def push_word(w: Word) -> Word:
        letters = []
        for e, b in w.letters:
            if b in back_atom:
                img = g.on_atoms[back_atom[b]]
                letters.extend((e2, ("C", a2)) for e2, a2 in C.act(img, e).letters)
            else:
                letters.append((e, ("B", b)))
        return Word(obj_b[w.src], obj_b[w.tgt], w.dim, tuple(letters))

    for b in new_atoms:
        Bt = B.atoms[b]
        atoms[("B", b)] = Atom(obj_b[Bt.src], obj_b[Bt.tgt], Bt.dim, tuple(push_word(f) for f in Bt.faces))
    P = Computad(objects, atoms, name=name or "pushout")
    c_funct = ComputadFunctor(C, P, {x: x for x in C.objects}, {c: P.letter_word(("C", c)) for c in C.atoms})
    b_funct = ComputadFunctor(B, P, obj_b, {b: push_word(B.letter_word(b)) for b in B.atoms})
    return P, b_funct, c_funct


def _retag(w: Word, tag) -> Word:
    return Word(w.src, w.tgt, w.dim, tuple((e, tag(a)) for e, a in w.letters))


def computad_isomorphism_problems(F: ComputadFunctor) -> list[str]:
    """Problems preventing ``F`` from being an isomorphism of computads."""
    problems = F.check(computad_functor=True)
    ok, why = subcomputad_check(F)
    problems += why
    if len(set(F.on_objects.values())) != len(F.target.objects):
        problems.append("not surjective on objects")
    if len(image_atoms(F)) != len(F.target.atoms):
        problems.append("not surjective on atoms")
    return problems
