"""
Integral and mod p homology of chain complexes, and the universal
coefficient bookkeeping tying them together.
"""

from math import gcd

from raag.errors import CorruptComplexError
from raag.homology.chain_complex import simplicial_chain_complex
from raag.homology.primes import prime_factors, require_prime
from raag.homology.rank_mod_p import rank_mod_p
from raag.homology.smith import invariant_factors, smith_normal_form
from raag.workers import parallel_map


class HomologySummary:
    """
    Per-degree homology of one chain complex.

    betti_q(i)       rank of H_i over the rationals
    torsion_at(i)    invariant factors (> 1) of the torsion of H_i over Z
    betti_fp(i, p)   dimension of H_i over F_p

    F_p numbers come from a direct computation when one was made for p,
    otherwise from the universal coefficient formula.
    """

    def __init__(self, reduced, betti, torsion, betti_mod=None):
        self.reduced = reduced
        self._betti = {d: int(b) for d, b in betti.items()}
        self._torsion = {d: invariant_factors(t) for d, t in torsion.items()}
        self._betti_mod = {
            p: {d: int(b) for d, b in values.items()}
            for p, values in (betti_mod or {}).items()
        }

    def __eq__(self, other):
        if not isinstance(other, HomologySummary):
            return NotImplemented
        if self.reduced != other.reduced:
            return False
        degrees = set(self.degrees()) | set(other.degrees())
        for d in degrees:
            if self.betti_q(d) != other.betti_q(d):
                return False
            if self.torsion_at(d) != other.torsion_at(d):
                return False
        for p in set(self.primes()) & set(other.primes()):
            if any(self.betti_fp(d, p) != other.betti_fp(d, p) for d in degrees):
                return False
        return True

    def __repr__(self):
        groups = ", ".join(f"H_{d}={self.group_name(d)}" for d in self.degrees())
        kind = "reduced" if self.reduced else "unreduced"
        return f"<HomologySummary {kind}: {groups}>"

    def degrees(self):
        return sorted(self._betti)

    def primes(self):
        return sorted(self._betti_mod)

    def betti_q(self, degree):
        return self._betti.get(degree, 0)

    def torsion_at(self, degree):
        return self._torsion.get(degree, ())

    def uct_betti(self, degree, p):
        """
        b_i(F_p) = b_i(Q) + #{t in T_i : p | t} + #{t in T_(i-1) : p | t}
        """
        return (
            self.betti_q(degree)
            + sum(1 for t in self.torsion_at(degree) if t % p == 0)
            + sum(1 for t in self.torsion_at(degree - 1) if t % p == 0)
        )

    def betti_fp(self, degree, p):
        if p in self._betti_mod:
            return self._betti_mod[p].get(degree, 0)
        return self.uct_betti(degree, p)

    def uct_mismatches(self):
        """
        (degree, prime) pairs where the directly computed F_p Betti
        number disagrees with the universal coefficient formula.
        """
        return [
            (d, p)
            for p in self.primes()
            for d in self.degrees()
            if self._betti_mod[p].get(d, 0) != self.uct_betti(d, p)
        ]

    def euler_characteristic(self):
        return sum((1 if d % 2 == 0 else -1) * self.betti_q(d) for d in self.degrees())

    def is_acyclic(self):
        return all(
            self.betti_q(d) == 0 and not self.torsion_at(d) for d in self.degrees()
        )

    def group_name(self, degree):
        parts = []
        free = self.betti_q(degree)
        if free == 1:
            parts.append("Z")
        elif free > 1:
            parts.append(f"Z^{free}")
        parts += [f"Z/{t}" for t in self.torsion_at(degree)]
        return " + ".join(parts) if parts else "0"

    def to_dict(self):
        degrees = []
        for d in self.degrees():
            entry = {
                "degree": d,
                "betti_q": self.betti_q(d),
                "torsion": list(self.torsion_at(d)),
            }
            if self._betti_mod:
                entry["betti_fp"] = {str(p): self.betti_fp(d, p) for p in self.primes()}
            degrees.append(entry)
        return {
            "reduced": self.reduced,
            "primes": self.primes(),
            "degrees": degrees,
            "uct_consistent": not self.uct_mismatches(),
        }

    def unreduced(self):
        """
        The same homology without augmentation: degree -1 goes away and,
        for a nonempty complex, degree 0 gains one free summand.
        """
        if not self.reduced:
            return self
        shift = 0 if self.betti_q(-1) else 1

        def unreduce(values):
            values = {d: b for d, b in values.items() if d >= 0}
            values[0] = values.get(0, 0) + shift
            return values

        torsion = {d: t for d, t in self._torsion.items() if d >= 0}
        betti_mod = {p: unreduce(values) for p, values in self._betti_mod.items()}
        return HomologySummary(False, unreduce(self._betti), torsion, betti_mod)

    def render(self):
        prefix = "H~" if self.reduced else "H"
        lines = []
        for d in self.degrees():
            line = f"  {prefix}_{d:<3} {self.group_name(d):<16}"
            for p in self.primes():
                line += f"  b(F_{p})={self.betti_fp(d, p)}"
            lines.append(line)
        return "\n".join(lines)


def homology_Z(chain_complex, primes=()):
    """
    Betti numbers over Q and torsion over Z from Smith normal forms of the
    boundary matrices, plus direct F_p Betti numbers for each prime given.
    """
    chain_complex.check()
    for p in primes:
        require_prime(p)

    degrees = list(chain_complex.degrees())
    boundary_degrees = [d for d in degrees if d > chain_complex.min_degree]
    forms = dict(
        zip(
            boundary_degrees,
            parallel_map(
                smith_normal_form,
                [chain_complex.boundary(d) for d in boundary_degrees],
            ),
        )
    )

    def z_rank(d):
        return forms[d].rank if d in forms else 0

    betti = {}
    torsion = {}
    for d in degrees:
        betti[d] = chain_complex.rank(d) - z_rank(d) - z_rank(d + 1)
        torsion[d] = forms[d + 1].torsion() if d + 1 in forms else ()

    betti_mod = {}
    for p in primes:
        betti_mod[p] = dict(zip(degrees, betti_Fp(chain_complex, p)))

    return HomologySummary(chain_complex.augmented, betti, torsion, betti_mod)


def _rank_task(task):
    matrix, p = task
    return rank_mod_p(matrix, p)


def betti_Fp(chain_complex, p):
    """
    Betti numbers over F_p, one per degree from chain_complex.min_degree
    up to its top dimension.
    """
    require_prime(p)
    degrees = list(chain_complex.degrees())
    boundary_degrees = [d for d in degrees if d > chain_complex.min_degree]
    ranks = dict(
        zip(
            boundary_degrees,
            parallel_map(
                _rank_task,
                [(chain_complex.boundary(d), p) for d in boundary_degrees],
            ),
        )
    )
    return tuple(
        chain_complex.rank(d) - ranks.get(d, 0) - ranks.get(d + 1, 0) for d in degrees
    )


def reduced_homology(complex_, primes=()):
    return homology_Z(simplicial_chain_complex(complex_, augmented=True), primes)


def unreduced_homology(complex_, primes=()):
    return homology_Z(simplicial_chain_complex(complex_, augmented=False), primes)


class TopCohomology:
    """
    Whether H^d(L; Z) is nonzero for d = dim L, with the reason.

    condition
    "free_top_homology" when H_d has a free part,
    "torsion_below_top" when H_(d-1) has torsion, None when H^d = 0.

    witness_primes
    The scanned primes p with b_d(L; F_p) > 0. Scanned primes are 2 and
    every prime dividing a torsion coefficient of H_(d-1); by universal
    coefficients no other prime can behave differently from these.
    """

    def __init__(self, dimension, summary, witness_primes, scanned_primes):
        self.dimension = dimension
        self.summary = summary
        self.free_rank = summary.betti_q(dimension) if summary else 0
        self.torsion = summary.torsion_at(dimension - 1) if summary else ()
        self.witness_primes = tuple(witness_primes)
        self.scanned_primes = tuple(scanned_primes)
        if self.free_rank > 0:
            self.condition = "free_top_homology"
        elif self.torsion:
            self.condition = "torsion_below_top"
        else:
            self.condition = None

    @property
    def nonzero(self):
        return self.condition is not None

    def __bool__(self):
        return self.nonzero

    def to_dict(self):
        return {
            "nonzero": self.nonzero,
            "dimension": self.dimension,
            "condition": self.condition,
            "free_rank": self.free_rank,
            "torsion_below_top": list(self.torsion),
            "witness_primes": list(self.witness_primes),
            "scanned_primes": list(self.scanned_primes),
        }


def _scan_primes(summary, dimension):
    primes = {2}
    for t in summary.torsion_at(dimension - 1):
        primes.update(prime_factors(t))
    return sorted(primes)


def _certify(dimension, summary, top_betti_mod):
    result = TopCohomology(
        dimension,
        summary,
        [p for p, b in sorted(top_betti_mod.items()) if b > 0],
        sorted(top_betti_mod),
    )
    if result.nonzero != bool(result.witness_primes):
        raise CorruptComplexError(
            f"Top cohomology in degree {dimension} is "
            f"{'nonzero' if result.nonzero else 'zero'} over Z but the mod p "
            f"Betti numbers {top_betti_mod} disagree."
        )
    return result


def top_cohomology_nonzero(complex_):
    """
    H^d(L; Z) != 0 for d = dim L, which by universal coefficients means
    H_d(L; Z) has a free part or H_(d-1)(L; Z) has torsion. Reduced
    homology is used, so a single point gives zero and two points don't.

    The answer is cross-checked against direct mod p ranks of the top
    boundary matrix. The empty complex is reported as zero.
    """
    d = complex_.dimension
    if d < 0:
        return TopCohomology(d, None, (), ())

    chain_complex = simplicial_chain_complex(complex_, augmented=True)
    summary = homology_Z(chain_complex)
    top_betti_mod = {
        p: chain_complex.rank(d) - rank_mod_p(chain_complex.boundary(d), p)
        for p in _scan_primes(summary, d)
    }
    return _certify(d, summary, top_betti_mod)


def join_homology_kunneth(first, second, primes=()):
    """
    Reduced homology of the join from the reduced homology of its factors:

        H~_(n+1)(L1 * L2) = sum over i + j = n of H~_i(L1) (x) H~_j(L2)
                          + sum over i + j = n - 1 of Tor(H~_i(L1), H~_j(L2))

    Degree -1 is included, so an empty factor behaves as a unit.
    F_p Betti numbers come from the field version of the same formula
    applied to direct F_p computations on the factors, which makes
    uct_mismatches() a genuine cross-check.
    """
    h1 = reduced_homology(first, primes)
    h2 = reduced_homology(second, primes)
    top = first.dimension + second.dimension + 1

    betti = {n: 0 for n in range(-1, top + 1)}
    torsion = {n: [] for n in range(-1, top + 1)}
    betti_mod = {p: {n: 0 for n in range(-1, top + 1)} for p in primes}

    for i in h1.degrees():
        a, s = h1.betti_q(i), h1.torsion_at(i)
        for j in h2.degrees():
            b, t = h2.betti_q(j), h2.torsion_at(j)
            n = i + j + 1
            if n in betti:
                betti[n] += a * b
                torsion[n] += list(t) * a + list(s) * b
                torsion[n] += [gcd(x, y) for x in s for y in t]
            if n + 1 in torsion:
                torsion[n + 1] += [gcd(x, y) for x in s for y in t]
            for p in primes:
                if n in betti_mod[p]:
                    betti_mod[p][n] += h1.betti_fp(i, p) * h2.betti_fp(j, p)

    return HomologySummary(True, betti, torsion, betti_mod)


def top_cohomology_of_join(first, second):
    """
    top_cohomology_nonzero for L1 * L2 without building the join.
    """
    d = first.dimension + second.dimension + 1
    if d < 0:
        return TopCohomology(d, None, (), ())
    summary = join_homology_kunneth(first, second)
    primes = _scan_primes(summary, d)
    field_summary = join_homology_kunneth(first, second, primes)
    return _certify(d, summary, {p: field_summary.betti_fp(d, p) for p in primes})
