"""
The poset complex K of a flag complex L, and Euler characteristics of the
toral model X_L computed stratum by stratum over it.

K is the realization of the poset of simplices of L, empty simplex
included, which is the cone on the barycentric subdivision of L with
the empty simplex as apex. X_L maps onto K, and the preimage of an open
simplex tau of K is tau times a torus of dimension |min tau|, where
min tau is the smallest simplex of L in the chain tau stands for.
"""

from raag.complexes.constructions import barycentric_subdivision, cone
from raag.errors import CorruptComplexError, PreconditionError


class PosetComplexK:
    """
    base       the complex L
    complex    K itself, a SimplicialComplex
    labels     labels[v] is the simplex of L that vertex v of K stands for,
               () for the apex
    apex       the vertex id of the apex
    """

    def __init__(self, base, complex_, labels, apex):
        self.base = base
        self.complex = complex_
        self.labels = tuple(labels)
        self.apex = apex

    def __repr__(self):
        return f"<PosetComplexK over {self.base!r}, f={self.complex.f_vector()}>"

    def min_label(self, tau):
        """
        The smallest simplex of L in the chain labeling tau.
        The chain is nested, so the smallest is the shortest.
        """
        self._require_simplex(tau)
        return min((self.labels[v] for v in tau), key=len)

    def fiber_dimension(self, tau):
        return len(self.min_label(tau))

    def contains_apex(self, tau):
        return self.apex in tau

    def strata(self):
        """
        Every nonempty simplex of K with the dimension of its torus fiber.
        """
        for tau in self.complex.simplices():
            yield tau, len(min((self.labels[v] for v in tau), key=len))

    def _require_simplex(self, tau):
        tau = tuple(sorted(tau))
        if not tau or not self.complex.has_face(tau):
            raise PreconditionError(f"{list(tau)} is not a simplex of K.")


def davis_poset_complex(complex_):
    sd = barycentric_subdivision(complex_)
    k = cone(sd, apex_label=())
    result = PosetComplexK(complex_, k, k.vertex_labels, apex=k.vertex_count - 1)
    if k.euler_characteristic() != 1:
        raise CorruptComplexError(
            f"The poset complex has Euler characteristic "
            f"{k.euler_characteristic()}, but it is a cone."
        )
    return result


def fiber_dimension(poset_complex, tau):
    return poset_complex.fiber_dimension(tau)


def _torus_euler(dimension):
    return 1 if dimension == 0 else 0


def _stratified_euler(poset_complex, keep):
    return sum(
        (-1) ** (len(tau) - 1) * _torus_euler(fiber)
        for tau, fiber in poset_complex.strata()
        if keep(tau)
    )


def euler_characteristic_XL(complex_):
    """
    chi(X_L) as the sum over strata tau of (-1)^dim(tau) chi(T^|min tau|).
    Positive-dimensional tori have chi = 0, so only the cone strata count,
    and the total is 1 - chi(L).
    """
    k = davis_poset_complex(complex_)
    euler = _stratified_euler(k, lambda tau: True)
    if euler != 1 - complex_.euler_characteristic():
        raise CorruptComplexError(
            f"Stratified chi(X_L) = {euler} but 1 - chi(L) = "
            f"{1 - complex_.euler_characteristic()}."
        )
    return euler


def euler_characteristic_YL(complex_):
    """
    chi of the toral subcomplex Y_L, the part of X_L over L itself.
    Every stratum there has a torus fiber of positive dimension.
    """
    k = davis_poset_complex(complex_)
    return _stratified_euler(k, lambda tau: not k.contains_apex(tau))


def amalgam_euler_characteristic(complex_, supercomplex):
    """
    chi of the model Y_L glued to L' along L, for L embedded in L'.
    When L' is contractible this is 1 - chi(L), matching chi(X_L).
    """
    return (
        euler_characteristic_YL(complex_)
        + supercomplex.euler_characteristic()
        - complex_.euler_characteristic()
    )
