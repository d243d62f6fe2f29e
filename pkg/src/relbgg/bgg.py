"""Relative BGG sequence shapes: Hasse diagram, shifted Weyl action, orders.

The bundles of a relative BGG sequence are indexed by minimal-length coset
representatives taken inside the Weyl group of the Levi factor of p: an
element w qualifies iff w^{-1} keeps the simple roots of the uncrossed
sigma_q nodes positive.  Words compose right-to-left (rightmost generator
acts first), and weights move by the shifted action w.l = w(l + rho) - rho.
This convention is pinned by the worked examples in the test suite.

Only sequence shapes are computed: bundle labels and operator orders, no
differential operators.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dynkin import DynkinLabel, print_label, validate_label
from .grading import ParabolicPair
from .roots import Root, RootSystem, Weight, pairing, reflect, root_to_weight


class InternalCheckError(RuntimeError):
    """A structural invariant the engine guarantees was violated."""


@dataclass(frozen=True)
class WeylWord:
    """A reduced word in simple reflections; rightmost generator applied first."""

    gens: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.gens)


_Images = tuple[tuple[int, ...], ...]  # images of all simple roots, root coordinates


def _identity_images(rank: int) -> _Images:
    return tuple(tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank))


def _reflect_root_coords(
    cartan: tuple[tuple[int, ...], ...], i0: int, v: tuple[int, ...]
) -> tuple[int, ...]:
    k = sum(cartan[i0][j] * v[j] for j in range(len(v)))
    out = list(v)
    out[i0] -= k
    return tuple(out)


def _right_multiply(rs: RootSystem, imgs: _Images, i: int) -> _Images:
    """Images of w*s_i from those of w: (w s_i)(a_j) = w(a_j) - C[i][j] w(a_i)."""
    i0 = i - 1
    base = imgs[i0]
    return tuple(
        tuple(imgs[j][t] - rs.cartan[i0][j] * base[t] for t in range(rs.rank))
        for j in range(rs.rank)
    )


def _word_images(rs: RootSystem, gens: tuple[int, ...]) -> _Images:
    imgs = _identity_images(rs.rank)
    for g in gens:
        imgs = _right_multiply(rs, imgs, g)
    return imgs


def _is_positive(v: tuple[int, ...]) -> bool:
    return any(c > 0 for c in v) and all(c >= 0 for c in v)


def _apply_images(imgs: _Images, v: tuple[int, ...]) -> tuple[int, ...]:
    rank = len(v)
    return tuple(
        sum(v[j] * imgs[j][t] for j in range(rank)) for t in range(rank)
    )


def _enumerate_group(rs: RootSystem, generators: list[int]) -> dict[_Images, tuple[int, ...]]:
    """All elements of the subgroup generated by the given simple reflections.

    Breadth-first over right multiplications that increase length, so every
    recorded word is reduced and discovery order is by length.
    """
    identity = _identity_images(rs.rank)
    seen: dict[_Images, tuple[int, ...]] = {identity: ()}
    frontier = [identity]
    while frontier:
        nxt = []
        for imgs in frontier:
            word = seen[imgs]
            for i in generators:
                if _is_positive(imgs[i - 1]):  # l(w s_i) = l(w) + 1
                    imgs2 = _right_multiply(rs, imgs, i)
                    if imgs2 not in seen:
                        seen[imgs2] = word + (i,)
                        nxt.append(imgs2)
        frontier = nxt
    return seen


@dataclass(frozen=True)
class HasseDiagram:
    pair: ParabolicPair
    elements: tuple[WeylWord, ...]
    connecting_roots: dict[int, Root]  # k -> beta with w_{k+1} = s_beta o w_k
    is_chain: bool

    @property
    def size(self) -> int:
        return len(self.elements)


def _reflection_images(rs: RootSystem, beta: Root) -> _Images:
    """Images of the simple roots under s_beta: a_j - <a_j, beta^vee> beta."""
    rank = rs.rank
    out = []
    for j in range(1, rank + 1):
        k = pairing(root_to_weight(rs, rs.simple_root(j)), beta, rs)
        img = list(rs.simple_root(j).coeffs)
        for t in range(rank):
            img[t] -= k * beta.coeffs[t]
        out.append(tuple(img))
    return tuple(out)


def _connecting_root(rs: RootSystem, wk: WeylWord, wk1: WeylWord) -> Root | None:
    """Positive beta with w_{k+1} = s_beta o w_k, if one exists."""
    if wk1.length != wk.length + 1:
        return None
    imgs_k = _word_images(rs, wk.gens)
    imgs_k1 = _word_images(rs, wk1.gens)
    # common case: w_{k+1} = w_k s_j, whence beta = w_k(alpha_j)
    for j in range(1, rs.rank + 1):
        if _right_multiply(rs, imgs_k, j) == imgs_k1:
            beta = _apply_images(imgs_k, rs.simple_root(j).coeffs)
            if _is_positive(beta):
                return Root(beta)
    # general case: test s_beta = w_{k+1} o w_k^{-1} over all positive roots
    inv_k = _word_images(rs, tuple(reversed(wk.gens)))
    t_imgs = tuple(_apply_images(imgs_k1, inv_k[j]) for j in range(rs.rank))
    for beta in rs.positive_roots:
        if _reflection_images(rs, beta) == t_imgs:
            return beta
    return None


def relative_hasse(pair: ParabolicPair) -> HasseDiagram:
    """Minimal-length representatives indexing the relative sequence.

    Enumerates the Weyl group of the Levi of p (nodes outside sigma_p) and
    keeps w with w^{-1}(alpha_j) positive for every node j outside sigma_q.
    Elements are sorted by length, then lexicographically by word.
    """
    rs = pair.rs
    levi = [i for i in range(1, rs.rank + 1) if i not in pair.sigma_p]
    coset_nodes = [i for i in range(1, rs.rank + 1) if i not in pair.sigma_q]
    group = _enumerate_group(rs, levi)
    words = []
    for imgs, word in group.items():
        # imgs describe v := w^{-1}; require v(alpha_j) > 0 on the coset nodes
        if all(_is_positive(imgs[j - 1]) for j in coset_nodes):
            words.append(WeylWord(tuple(reversed(word))))
    words.sort(key=lambda w: (w.length, w.gens))
    connecting: dict[int, Root] = {}
    for k in range(len(words) - 1):
        beta = _connecting_root(rs, words[k], words[k + 1])
        if beta is not None:
            connecting[k] = beta
    lengths = [w.length for w in words]
    is_chain = lengths == list(range(len(words))) and len(connecting) == max(
        len(words) - 1, 0
    )
    return HasseDiagram(
        pair=pair, elements=tuple(words), connecting_roots=connecting, is_chain=is_chain
    )


def affine_act(w: WeylWord, lam: Weight, rs: RootSystem) -> Weight:
    """Shifted action w.l = w(l + rho) - rho."""
    mu = lam + rs.rho
    for g in reversed(w.gens):
        mu = reflect(rs, g, mu)
    return mu - rs.rho


def operator_order(lambda_k: Weight, beta: Root, rs: RootSystem) -> int:
    """Order of the operator leaving the bundle with weight lambda_k: <l+rho, beta^vee>."""
    return pairing(lambda_k + rs.rho, beta, rs)


@dataclass(frozen=True)
class BGGEntry:
    word: WeylWord
    label: DynkinLabel
    order_to_next: int | None


@dataclass(frozen=True)
class BGGSequence:
    source: DynkinLabel
    entries: tuple[BGGEntry, ...]

    def labels(self) -> tuple[DynkinLabel, ...]:
        return tuple(e.label for e in self.entries)

    def orders(self) -> tuple[int, ...]:
        return tuple(e.order_to_next for e in self.entries if e.order_to_next is not None)


def relative_bgg_sequence(src: DynkinLabel, pair: ParabolicPair) -> BGGSequence:
    """The sequence shape generated by a dominant P-representation label.

    Entry k carries the shifted action of the k-th Hasse word on the source
    weight, crossed at sigma_q; the order to the next entry pairs the
    current weight (rho-shifted) with the connecting root.
    """
    rs = pair.rs
    if (src.rs.type_tag, src.rs.rank) != (rs.type_tag, rs.rank):
        raise ValueError("label and pair live on different diagrams")
    verdict = validate_label(src, "P", pair)
    if not verdict.ok:
        raise ValueError(
            f"source label {print_label(src)} is not P-dominant "
            f"(negative at nodes {list(verdict.negative_uncrossed)})"
        )
    diagram = relative_hasse(pair)
    if not diagram.is_chain:
        raise ValueError(
            "the relative Hasse diagram is not linear for this pair; "
            "a single sequence shape is not defined"
        )
    entries = []
    for k, word in enumerate(diagram.elements):
        coeffs = affine_act(word, src.coeffs, rs)
        label = DynkinLabel(rs=rs, crossed=pair.sigma_q, coeffs=coeffs)
        q_verdict = validate_label(label, "Q", pair)
        if not q_verdict.ok:
            raise InternalCheckError(
                f"entry {k} produced the Q-invalid label {print_label(label)}"
            )
        order = None
        if k in diagram.connecting_roots:
            order = operator_order(coeffs, diagram.connecting_roots[k], rs)
        entries.append(BGGEntry(word=word, label=label, order_to_next=order))
    return BGGSequence(source=src, entries=tuple(entries))
