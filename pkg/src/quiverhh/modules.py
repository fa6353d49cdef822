"""Minimal projective resolutions over a based finite-dimensional algebra.

The engine here is deliberately structure-agnostic: it sees a ring only as a
finite multiplication table together with a complete list of primitive
orthogonal idempotents and a basis of the radical. That covers both the
quotient path algebra itself (one-sided resolutions of right modules) and
its enveloping algebra (generic bimodule resolutions, used as a cross-check
against the explicitly constructed ones).

Each step computes top(M) = M / M.rad, lifts a deterministic set of
idempotent-pure generators, covers M by the matching direct sum of
indecomposable projectives, and takes the kernel as the next syzygy. Covers
are minimal by construction and the engine asserts it: the kernel never
meets the generator coordinates.
"""

from __future__ import annotations

from .exact_linalg import Field, LinearMap, SpanTracker


class BasedAlgebra:
    """Engine view of an algebra: table, idempotents, radical basis.

    idempotents is an ordered list of (label, basis_index) pairs whose sum
    is the identity; radical lists the remaining basis indices and must span
    a nilpotent ideal. Labels are opaque (vertex names for a path algebra,
    vertex pairs for an enveloping algebra).
    """

    def __init__(self, field: Field, dim: int, mult, idempotents, radical):
        self.field = field
        self.dim = dim
        self.mult = mult  # mult(i, j) -> sparse dict over basis indices
        self.idempotents = tuple(idempotents)
        self.radical = tuple(radical)
        self._proj = {}

    @classmethod
    def from_table(cls, table) -> "BasedAlgebra":
        idem = [(v, table.idempotent_index[v]) for v in table.quiver.vertices]
        return cls(table.field, table.dim, table.mult_index, idem,
                   table.radical_indices)

    def proj_basis(self, label) -> tuple:
        """Basis indices of the right projective e_label * Algebra."""
        if label not in self._proj:
            e = dict(self.idempotents)[label]
            one = self.field.one()
            members = tuple(m for m in range(self.dim)
                            if self.mult(e, m) == {m: one})
            self._proj[label] = members
        return self._proj[label]


class RightModule:
    """Right module given by explicit action matrices.

    action[g] is a list over module basis positions; entry m is the sparse
    image of basis vector m under the right action of algebra basis g.
    """

    def __init__(self, algebra: BasedAlgebra, dim: int, action, check=True):
        self.algebra = algebra
        self.dim = dim
        self.action = action
        if check:
            self._check_action()

    def _check_action(self):
        field = self.algebra.field
        one = field.one()
        # identity acts as the identity
        for m in range(self.dim):
            total: dict = {}
            for _, e in self.algebra.idempotents:
                for k, c in self.action[e][m].items():
                    total[k] = field.add(total.get(k, field.zero()), c)
            total = {k: c for k, c in total.items() if not field.is_zero(c)}
            if total != {m: one}:
                raise ValueError("module action: idempotents do not sum to 1")
        # compatibility with the multiplication table on all algebra pairs
        for g in range(self.algebra.dim):
            for h in range(self.algebra.dim):
                gh = self.algebra.mult(g, h)
                for m in range(self.dim):
                    via_pair = self.act(self.action[g][m], h)
                    direct: dict = {}
                    for k, c in gh.items():
                        for r, d in self.action[k][m].items():
                            nv = field.add(direct.get(r, field.zero()),
                                           field.mul(c, d))
                            if field.is_zero(nv):
                                direct.pop(r, None)
                            else:
                                direct[r] = nv
                    if via_pair != direct:
                        raise ValueError(
                            f"module action incompatible with multiplication "
                            f"at algebra pair ({g}, {h})")

    def act(self, vec: dict, g: int) -> dict:
        field = self.algebra.field
        out: dict = {}
        for m, c in vec.items():
            for k, d in self.action[g][m].items():
                nv = field.add(out.get(k, field.zero()), field.mul(c, d))
                if field.is_zero(nv):
                    out.pop(k, None)
                else:
                    out[k] = nv
        return out


class ProjectiveAmbient:
    """Direct sum of indecomposable projectives e_label * Algebra.

    Coordinates are flattened (slot, algebra basis index) pairs; the right
    algebra action goes through the multiplication table slotwise.
    """

    def __init__(self, algebra: BasedAlgebra, labels):
        self.algebra = algebra
        self.labels = tuple(labels)
        self.coords: list = []
        self.pos: list = []
        self.generator_coords: list = []
        idem = dict(algebra.idempotents)
        for slot, label in enumerate(self.labels):
            local = {}
            for m in algebra.proj_basis(label):
                local[m] = len(self.coords)
                self.coords.append((slot, m))
            self.pos.append(local)
            self.generator_coords.append(local[idem[label]])
        self.dim = len(self.coords)

    def act(self, vec: dict, g: int) -> dict:
        field = self.algebra.field
        out: dict = {}
        for flat, c in vec.items():
            slot, m = self.coords[flat]
            local = self.pos[slot]
            for m2, d in self.algebra.mult(m, g).items():
                f2 = local[m2]
                nv = field.add(out.get(f2, field.zero()), field.mul(c, d))
                if field.is_zero(nv):
                    out.pop(f2, None)
                else:
                    out[f2] = nv
        return out


class ResolutionStep:
    """One degree of a minimal resolution: cover of the previous syzygy."""

    def __init__(self, labels, generators, projective, cover, kernel):
        self.labels = labels
        self.generators = generators
        self.projective = projective
        self.cover = cover  # LinearMap: projective coords -> ambient coords
        self.kernel = kernel  # syzygy basis, projective coords

    def label_counts(self) -> dict:
        counts: dict = {}
        for lab in self.labels:
            counts[lab] = counts.get(lab, 0) + 1
        return counts


class MinimalResolution:
    """Iterated projective covers of a right module, extended on demand."""

    def __init__(self, module: RightModule):
        self.module = module
        self.algebra = module.algebra
        self.steps: list[ResolutionStep] = []
        one = self.algebra.field.one()
        self._vectors = [{m: one} for m in range(module.dim)]
        self._ambient = module

    def extend_to(self, degree: int) -> None:
        while len(self.steps) <= degree:
            self._advance()

    def step(self, degree: int) -> ResolutionStep:
        self.extend_to(degree)
        return self.steps[degree]

    def multiplicities(self, degree: int) -> dict:
        return self.step(degree).label_counts()

    def differential(self, degree: int) -> LinearMap:
        """Cover map at this degree; for degree >= 1 the codomain coordinates
        are those of the degree-1 projective, for degree 0 the module's."""
        return self.step(degree).cover

    def _advance(self) -> None:
        algebra = self.algebra
        field = algebra.field
        ambient = self._ambient
        vectors = self._vectors

        # span of M.rad; the radical is an ideal, so products of the
        # module's spanning vectors with radical basis elements suffice
        tracker = SpanTracker(field)
        seen = set()
        for v in vectors:
            for r in algebra.radical:
                w = ambient.act(v, r)
                if not w:
                    continue
                sig = tuple(sorted(w.items()))
                if sig in seen:
                    continue
                seen.add(sig)
                tracker.add(w)
        rad_dim = tracker.dim

        # idempotent-pure generator lifts: project each spanning vector to
        # each block and keep those that grow the span beyond M.rad
        labels = []
        generators = []
        for v in vectors:
            for label, e in algebra.idempotents:
                cand = ambient.act(v, e)
                if cand and tracker.add(cand):
                    labels.append(label)
                    generators.append(cand)
        if tracker.dim != len(vectors):
            raise AssertionError("projective cover does not span the module")
        if rad_dim + len(generators) != len(vectors):
            raise AssertionError("top dimension inconsistent with radical span")

        projective = ProjectiveAmbient(algebra, labels)
        cover = LinearMap(field, projective.dim, ambient.dim)
        for slot, gen in enumerate(generators):
            for m in algebra.proj_basis(labels[slot]):
                col = ambient.act(gen, m)
                if col:
                    cover.columns[projective.pos[slot][m]] = col
        kernel = cover.kernel_basis()
        if projective.dim - len(kernel) != len(vectors):
            raise AssertionError("cover rank differs from module dimension")

        # minimal cover: the syzygy sits inside rad(P), i.e. never touches
        # a generator coordinate
        gen_coords = set(projective.generator_coords)
        for vec in kernel:
            if gen_coords & vec.keys():
                raise AssertionError("cover not minimal: kernel meets a "
                                     "generator coordinate")

        self.steps.append(ResolutionStep(tuple(labels), generators,
                                         projective, cover, kernel))
        self._vectors = kernel
        self._ambient = projective
